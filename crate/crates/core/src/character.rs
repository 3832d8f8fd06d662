//! Class functions of the symmetric groups, the Frobenius characteristic,
//! Young and irreducible characters, and Solomon's map `θ` from the descent
//! algebra to class functions.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::combinatorics::{partitions_of, Composition, Partition};
use crate::descent::{
    delta_to_xi_coordinates, descent_span_coordinates, psi_inverse, GroupAlgebraElement,
};
use crate::element::Basis;
use crate::error::{Error, Result};
use crate::nsym::{NSymBasis, NSymElement};
use crate::rational::{self, Rational};
use crate::sym::{schur, sym_multiply, SymBasis, SymElement};

/// A class function of `S_n`, one value per cycle type in the order of
/// [`partitions_of`].
#[derive(Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductMode {
    Pointwise,
    Induction,
}

/// Which noncommutative Schur family to pull back.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SchurFamily {
    #[serde(rename = "S")]
    Schur,
    #[serde(rename = "YS")]
    YoungSchur,
}

impl SchurFamily {
    pub fn basis(self) -> NSymBasis {
        match self {
            SchurFamily::Schur => NSymBasis::S,
            SchurFamily::YoungSchur => NSymBasis::YS,
        }
    }
}

impl fmt::Display for SchurFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.basis().name())
    }
}

impl ClassFunction {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self> {
        let classes = partitions_of(n).len();
        if values.len() != classes {
            return Err(Error::DegreeMismatch {
                left: classes,
                right: values.len(),
            });
        }
        Ok(ClassFunction { n, values })
    }

    pub fn from_fn(n: usize, f: impl Fn(&Partition) -> Rational) -> Self {
        ClassFunction {
            n,
            values: partitions_of(n).iter().map(f).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| Rational::zero())
    }

    /// The trivial character.
    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |_| rational::one())
    }

    /// The sign character: `(-1)^{n - ℓ(μ)}`.
    pub fn sign(n: usize) -> Self {
        Self::from_fn(n, |mu| rational::sign(n - mu.len()))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn classes(&self) -> Vec<Partition> {
        partitions_of(self.n)
    }

    pub fn value(&self, mu: &Partition) -> Rational {
        let idx = partitions_of(self.n)
            .iter()
            .position(|p| p == mu)
            .expect("cycle type of the right degree");
        self.values[idx].clone()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        Ok(ClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, by: &Rational) -> Self {
        ClassFunction {
            n: self.n,
            values: self.values.iter().map(|v| v * by).collect(),
        }
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// `Σ_μ z_μ^{-1} f(μ) g(μ)`
    pub fn inner_product(&self, other: &Self) -> Result<Rational> {
        self.check_degree(other)?;
        Ok(partitions_of(self.n)
            .iter()
            .zip(self.values.iter().zip(&other.values))
            .map(|(mu, (a, b))| a * b / rational::int(mu.z_stat() as i64))
            .sum())
    }

    fn assert_integral(self, what: &str) -> Result<Self> {
        for v in &self.values {
            rational::expect_integer(v, what)?;
        }
        Ok(self)
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = partitions_of(self.n)
            .iter()
            .zip(&self.values)
            .map(|(mu, v)| format!("({mu}): {}", rational::format(v)))
            .collect();
        write!(f, "ClassFunction[{}]", entries.join(", "))
    }
}

/// `ch(f) = Σ_μ z_μ^{-1} f(μ) p_μ`, in the power-sum basis.
pub fn frobenius_ch(f: &ClassFunction) -> SymElement {
    SymElement::from_terms(
        SymBasis::P,
        partitions_of(f.n)
            .into_iter()
            .zip(&f.values)
            .map(|(mu, v)| {
                let z = rational::int(mu.z_stat() as i64);
                (mu, v / z)
            }),
    )
}

/// `f(μ) = z_μ · [p_μ] g` for `g` homogeneous of degree `n`.
pub fn ch_inverse_in_degree(g: &SymElement, n: usize) -> Result<ClassFunction> {
    if let Some(&bad) = g.degrees().iter().find(|&&d| d != n) {
        return Err(Error::DegreeMismatch {
            left: n,
            right: bad,
        });
    }
    let p = g.convert(SymBasis::P)?;
    Ok(ClassFunction::from_fn(n, |mu| {
        p.coeff(mu) * rational::int(mu.z_stat() as i64)
    }))
}

/// Inverse of [`frobenius_ch`]; `g` must be nonzero and homogeneous.
pub fn ch_inverse(g: &SymElement) -> Result<ClassFunction> {
    let n = g.homogeneous_degree().ok_or(Error::Inhomogeneous)?;
    ch_inverse_in_degree(g, n)
}

/// `ξ^α`, induced from the trivial character of the Young subgroup `S_α`.
pub fn young_character(alpha: &Composition) -> Result<ClassFunction> {
    let h = SymElement::basis_element(SymBasis::H, alpha.underlying_partition());
    ch_inverse_in_degree(&h, alpha.degree())?.assert_integral("young character")
}

/// `χ^λ = ch^{-1}(s_λ)`.
pub fn irreducible_character(lambda: &Partition) -> Result<ClassFunction> {
    ch_inverse_in_degree(&schur(lambda), lambda.degree())?.assert_integral("irreducible character")
}

pub fn class_products(
    f: &ClassFunction,
    g: &ClassFunction,
    mode: ProductMode,
) -> Result<ClassFunction> {
    match mode {
        ProductMode::Pointwise => {
            f.check_degree(g)?;
            Ok(ClassFunction {
                n: f.n,
                values: f.values.iter().zip(&g.values).map(|(a, b)| a * b).collect(),
            })
        }
        ProductMode::Induction => {
            let product = sym_multiply(&frobenius_ch(f), &frobenius_ch(g))?;
            ch_inverse_in_degree(&product, f.n + g.n)
        }
    }
}

/// Solomon's map on the descent algebra, `θ(Ξ_α) = ξ^α`.
pub fn theta(d: &GroupAlgebraElement) -> Result<ClassFunction> {
    let n = d.degree();
    let coords = descent_span_coordinates(d)?.ok_or(Error::NotInSpan)?;
    let mut out = ClassFunction::zero(n);
    for (beta, c) in delta_to_xi_coordinates(n, &coords) {
        out = out.add(&young_character(&beta)?.scale(&c))?;
    }
    Ok(out)
}

/// `ψ^{-1}` of the noncommutative Schur function `family_α`.
pub fn noncommutative_character(
    alpha: &Composition,
    family: SchurFamily,
) -> Result<GroupAlgebraElement> {
    psi_inverse(&NSymElement::basis_element(family.basis(), alpha.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descent::{delta, xi};
    use crate::rational::int;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Values listed for cycle types `(1,1,1), (2,1), (3)`.
    fn s3(values: [i64; 3]) -> ClassFunction {
        let [a, b, c] = values;
        ClassFunction::new(3, vec![int(c), int(b), int(a)]).unwrap()
    }

    #[test]
    fn frobenius_examples() {
        for lambda in partitions_of(5) {
            let chi = irreducible_character(&lambda).unwrap();
            assert_eq!(
                frobenius_ch(&chi).convert(SymBasis::S).unwrap(),
                SymElement::basis_element(SymBasis::S, lambda.clone())
            );
        }
        assert_eq!(
            frobenius_ch(&ClassFunction::trivial(4))
                .convert(SymBasis::H)
                .unwrap(),
            SymElement::basis_element(SymBasis::H, p("4"))
        );
        let h21 = SymElement::basis_element(SymBasis::H, p("2,1"));
        assert_eq!(ch_inverse(&h21).unwrap(), s3([3, 1, 0]));
        let mixed = SymElement::from_terms(SymBasis::H, [(p("1"), int(1)), (p("2"), int(1))]);
        assert_eq!(ch_inverse(&mixed), Err(Error::Inhomogeneous));
    }

    #[test]
    fn young_character_examples() {
        assert_eq!(young_character(&c("2,1")).unwrap(), s3([3, 1, 0]));
        assert_eq!(young_character(&c("5")).unwrap(), ClassFunction::trivial(5));
        let regular = young_character(&c("1,1,1,1")).unwrap();
        assert_eq!(
            regular,
            ClassFunction::from_fn(4, |mu| int(if mu == &p("1,1,1,1") { 24 } else { 0 }))
        );
        for n in 1..=6 {
            for alpha in crate::combinatorics::compositions_of(n) {
                let sorted = alpha.underlying_partition().as_composition();
                assert_eq!(
                    young_character(&alpha).unwrap(),
                    young_character(&sorted).unwrap()
                );
            }
        }
    }

    #[test]
    fn irreducible_examples() {
        assert_eq!(
            irreducible_character(&p("4")).unwrap(),
            ClassFunction::trivial(4)
        );
        assert_eq!(
            irreducible_character(&p("1,1,1")).unwrap().value(&p("2,1")),
            int(-1)
        );
        assert_eq!(irreducible_character(&p("2,1")).unwrap(), s3([2, 0, -1]));
        assert_eq!(
            irreducible_character(&p("1,1,1,1")).unwrap(),
            ClassFunction::sign(4)
        );
    }

    #[test]
    fn products() {
        let f = irreducible_character(&p("2,1")).unwrap();
        assert_eq!(
            class_products(&ClassFunction::trivial(3), &f, ProductMode::Pointwise).unwrap(),
            f
        );
        assert_eq!(
            class_products(
                &ClassFunction::sign(3),
                &ClassFunction::sign(3),
                ProductMode::Pointwise
            )
            .unwrap(),
            ClassFunction::trivial(3)
        );
        for a in 1..=3 {
            for b in 1..=3 {
                let induced = class_products(
                    &young_character(&c(&a.to_string())).unwrap(),
                    &young_character(&c(&b.to_string())).unwrap(),
                    ProductMode::Induction,
                )
                .unwrap();
                assert_eq!(induced, young_character(&c(&format!("{a},{b}"))).unwrap());
            }
        }
        assert!(class_products(&f, &ClassFunction::trivial(2), ProductMode::Pointwise).is_err());
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&xi(&c("2,1")).unwrap()).unwrap(), s3([3, 1, 0]));
        assert_eq!(
            theta(&xi(&c("4")).unwrap()).unwrap(),
            ClassFunction::trivial(4)
        );
        assert_eq!(theta(&delta(&c("1,2")).unwrap()).unwrap(), s3([2, 0, -1]));
        let single = GroupAlgebraElement::from_permutation(
            crate::descent::Permutation::new(vec![2, 1, 3]).unwrap(),
        );
        assert_eq!(theta(&single), Err(Error::NotInSpan));
    }

    #[test]
    fn noncommutative_character_examples() {
        let ys = noncommutative_character(&c("1,2"), SchurFamily::YoungSchur).unwrap();
        assert_eq!(ys, delta(&c("1,2")).unwrap());
        assert_eq!(
            theta(&ys).unwrap(),
            irreducible_character(&p("2,1")).unwrap()
        );
        for family in [SchurFamily::Schur, SchurFamily::YoungSchur] {
            let top = noncommutative_character(&c("5"), family).unwrap();
            assert_eq!(theta(&top).unwrap(), ClassFunction::trivial(5));
            for alpha in crate::combinatorics::compositions_of(4) {
                let chi = irreducible_character(&alpha.underlying_partition()).unwrap();
                let image = theta(&noncommutative_character(&alpha, family).unwrap()).unwrap();
                assert_eq!(image, chi, "{family}_{alpha}");
            }
        }
    }

    #[test]
    fn orthogonality_and_dimensions() {
        for n in 1..=5 {
            for l in partitions_of(n) {
                let chi = irreducible_character(&l).unwrap();
                for m in partitions_of(n) {
                    let psi = irreducible_character(&m).unwrap();
                    assert_eq!(chi.inner_product(&psi).unwrap(), int(i64::from(l == m)));
                }
            }
        }
        for n in 1..=6 {
            let identity_class = Partition::new(vec![1; n]).unwrap();
            for l in partitions_of(n) {
                let dim = crate::tableaux::enumerate_syt(&l).len() as i64;
                assert_eq!(
                    irreducible_character(&l).unwrap().value(&identity_class),
                    int(dim)
                );
            }
        }
    }
}
