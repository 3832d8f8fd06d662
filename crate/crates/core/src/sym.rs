//! The algebra `Sym` of symmetric functions with the elementary (`E`),
//! complete homogeneous (`H`), power-sum (`P`), monomial (`M`) and Schur
//! (`S`) bases.
//!
//! `H` is the hub. The elementary transition comes from the alternating sum
//! of `e`-products expressing `h_r`, the power-sum transition from Newton's
//! recurrence `r·h_r = Σ p_k h_{r-k}`, Schur functions from the Jacobi–Trudi
//! determinant, and monomials from Kostka numbers.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use itertools::Itertools;
use num_traits::Zero;

use crate::combinatorics::{compositions_of, partitions_of, Partition};
use crate::element::{invert, Basis, Element, TransitionCache};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::qsym::{QSymBasis, QSymElement};
use crate::rational::{self, Rational};
use crate::tableaux::kostka_counts;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymBasis {
    E,
    H,
    P,
    M,
    S,
}

pub type SymElement = Element<SymBasis>;

type Sparse = BTreeMap<Partition, Rational>;

impl fmt::Display for SymBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Basis for SymBasis {
    type Index = Partition;

    const SPACE: &'static str = "sym";

    fn all() -> &'static [Self] {
        &[
            SymBasis::E,
            SymBasis::H,
            SymBasis::P,
            SymBasis::M,
            SymBasis::S,
        ]
    }

    fn hub() -> Self {
        SymBasis::H
    }

    fn compute_hub_matrix(self, n: usize) -> Result<Matrix> {
        match self {
            SymBasis::H => Ok(Matrix::identity(partitions_of(n).len())),
            SymBasis::E => invert(&dense_matrix(n, h_in_e), || format!("h->e in degree {n}")),
            SymBasis::P => invert(&dense_matrix(n, h_in_p), || format!("h->p in degree {n}")),
            SymBasis::S => Ok(dense_matrix(n, jacobi_trudi)),
            SymBasis::M => {
                let kostka = schur_to_monomial(n)?;
                let m_to_s = invert(&kostka, || format!("kostka matrix in degree {n}"))?;
                Ok(m_to_s.mul(&dense_matrix(n, jacobi_trudi)))
            }
        }
    }

    fn cache() -> &'static TransitionCache<Self> {
        static CACHE: OnceLock<TransitionCache<SymBasis>> = OnceLock::new();
        CACHE.get_or_init(Default::default)
    }

    fn name(self) -> &'static str {
        match self {
            SymBasis::E => "E",
            SymBasis::H => "H",
            SymBasis::P => "P",
            SymBasis::M => "M",
            SymBasis::S => "S",
        }
    }
}

fn dense_matrix(n: usize, expand: impl Fn(&Partition) -> Sparse) -> Matrix {
    let all = partitions_of(n);
    Matrix::from_rows(
        all.iter()
            .map(|lambda| {
                let row = expand(lambda);
                all.iter()
                    .map(|mu| row.get(mu).cloned().unwrap_or_else(Rational::zero))
                    .collect()
            })
            .collect(),
    )
}

fn add_into(acc: &mut Sparse, index: Partition, coeff: Rational) {
    let slot = acc.entry(index.clone()).or_insert_with(Rational::zero);
    *slot += coeff;
    if slot.is_zero() {
        acc.remove(&index);
    }
}

/// Product in a multiplicative basis, where `b_λ·b_μ = b_{λ⊎μ}`.
fn multiplicative_product(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (la, ca) in a {
        for (lb, cb) in b {
            add_into(&mut out, la.union(lb), ca * cb);
        }
    }
    out
}

fn unit() -> Sparse {
    Sparse::from([(Partition::empty(), rational::one())])
}

/// `Π_i g(λ_i)` where `g(r)` is a generator expansion in a multiplicative basis.
fn product_of_generators(lambda: &Partition, generator: impl Fn(usize) -> Sparse) -> Sparse {
    lambda.parts().iter().fold(unit(), |acc, &r| {
        multiplicative_product(&acc, &generator(r))
    })
}

/// `h_r = Σ_{α ⊨ r} (-1)^{ℓ(α) - r} e_α`
fn h_generator_in_e(r: usize) -> Sparse {
    let mut out = Sparse::new();
    for alpha in compositions_of(r) {
        let sign = rational::sign(alpha.len() + r);
        add_into(&mut out, alpha.underlying_partition(), sign);
    }
    out
}

fn h_in_e(lambda: &Partition) -> Sparse {
    product_of_generators(lambda, h_generator_in_e)
}

/// `h_0, …, h_r` in the power-sum basis via `r·h_r = Σ_{k=1}^r p_k h_{r-k}`.
fn h_generators_in_p(r: usize) -> Vec<Sparse> {
    let mut hs = vec![unit()];
    for m in 1..=r {
        let mut acc = Sparse::new();
        for k in 1..=m {
            let pk = Sparse::from([(Partition::new(vec![k]).unwrap(), rational::one())]);
            for (idx, c) in multiplicative_product(&pk, &hs[m - k]) {
                add_into(&mut acc, idx, c);
            }
        }
        let inv = rational::frac(1, m as i64);
        hs.push(acc.into_iter().map(|(i, c)| (i, c * &inv)).collect());
    }
    hs
}

fn h_in_p(lambda: &Partition) -> Sparse {
    let hs = h_generators_in_p(lambda.parts().first().copied().unwrap_or(0));
    product_of_generators(lambda, |r| hs[r].clone())
}

fn sign_of_permutation(perm: &[usize]) -> usize {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions
}

/// `det(h_{λ_i - i + j})` expanded as a permutation sum, in the `H` basis.
fn jacobi_trudi(lambda: &Partition) -> Sparse {
    let parts = lambda.parts();
    let l = parts.len();
    let mut out = Sparse::new();
    for perm in (0..l).permutations(l) {
        let mut h_parts = Vec::with_capacity(l);
        let mut vanishes = false;
        for (i, &j) in perm.iter().enumerate() {
            let idx = parts[i] as isize - i as isize + j as isize;
            match idx {
                i if i < 0 => {
                    vanishes = true;
                    break;
                }
                0 => {}
                i => h_parts.push(i as usize),
            }
        }
        if vanishes {
            continue;
        }
        let index = Partition::from_unsorted(h_parts).expect("positive parts");
        add_into(&mut out, index, rational::sign(sign_of_permutation(&perm)));
    }
    out
}

/// Kostka matrix: row `λ` holds `K_{λμ}`, the monomial expansion of `s_λ`.
fn schur_to_monomial(n: usize) -> Result<Matrix> {
    let all = partitions_of(n);
    let mut rows = Vec::with_capacity(all.len());
    for lambda in &all {
        let mut row = Vec::with_capacity(all.len());
        for mu in &all {
            row.push(rational::int(kostka_counts(lambda, mu)? as i64));
        }
        rows.push(row);
    }
    Ok(Matrix::from_rows(rows))
}

/// `s_λ` as the Jacobi–Trudi determinant in the `H` basis; `s_0 = 1`.
pub fn schur(lambda: &Partition) -> SymElement {
    SymElement::from_terms(SymBasis::H, jacobi_trudi(lambda))
}

pub fn sym_convert(x: &SymElement, target: SymBasis) -> Result<SymElement> {
    x.convert(target)
}

/// Product through the power-sum basis; the result is in `x`'s basis.
pub fn sym_multiply(x: &SymElement, y: &SymElement) -> Result<SymElement> {
    let px = x.convert(SymBasis::P)?;
    let py = y.convert(SymBasis::P)?;
    px.multiply_indices(&py, Partition::union)
        .convert(x.basis())
}

/// `m_μ ↦ Σ_{λ̃(α)=μ} M_α`, returned in the `M` basis of `QSym`.
pub fn embed_sym_in_qsym(x: &SymElement) -> Result<QSymElement> {
    let m = x.convert(SymBasis::M)?;
    Ok(QSymElement::from_terms(
        QSymBasis::M,
        m.terms().iter().flat_map(|(mu, c)| {
            mu.rearrangements()
                .into_iter()
                .map(move |alpha| (alpha, c.clone()))
        }),
    ))
}

/// The Hall inner product, `⟨p_λ, p_μ⟩ = z_λ δ_{λμ}`.
pub fn hall_inner_product(x: &SymElement, y: &SymElement) -> Result<Rational> {
    let px = x.convert(SymBasis::P)?;
    let py = y.convert(SymBasis::P)?;
    let mut total = Rational::zero();
    for (lambda, a) in px.terms() {
        let b = py.coeff(lambda);
        if !b.is_zero() {
            total += a * b * rational::int(lambda.z_stat() as i64);
        }
    }
    Ok(total)
}
