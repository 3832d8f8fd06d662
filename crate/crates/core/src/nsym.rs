//! The free algebra `NSym` with the noncommutative elementary (`E`),
//! complete homogeneous (`H`), ribbon (`R`), noncommutative Schur (`S`) and
//! Young noncommutative Schur (`YS`) bases.
//!
//! The ribbon basis is the hub. `S` and `YS` are defined through the
//! `d̂`-expansions of ribbons, `R_α = Σ_β d̂_{βα} YS_β = Σ_β d̂_{β̄ᾱ} S_β`.

use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::combinatorics::{compositions_of, Composition};
use crate::element::{invert, transition, Basis, Element, TransitionCache};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::qsym::{QSymBasis, QSymElement};
use crate::rational::{self, Rational};
use crate::sym::{SymBasis, SymElement};
use crate::tableaux::dhat_matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NSymBasis {
    E,
    H,
    R,
    S,
    YS,
}

pub type NSymElement = Element<NSymBasis>;

impl fmt::Display for NSymBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn matrix_over(n: usize, entry: impl Fn(&Composition, &Composition) -> Rational) -> Matrix {
    let all = compositions_of(n);
    Matrix::from_rows(
        all.iter()
            .map(|a| all.iter().map(|b| entry(a, b)).collect())
            .collect(),
    )
}

/// `H_r = Σ_{β ⊨ r} (-1)^{ℓ(β) - r} E_β`, extended multiplicatively.
fn h_to_e(n: usize) -> Matrix {
    let all = compositions_of(n);
    let mut m = Matrix::zeros(all.len(), all.len());
    for (i, alpha) in all.iter().enumerate() {
        // expand H_{α_1} ⋯ H_{α_ℓ} by choosing a composition of each part
        let mut partial: Vec<(Composition, Rational)> =
            vec![(Composition::empty(), rational::one())];
        for &part in alpha.parts() {
            let mut next = Vec::new();
            for (prefix, coeff) in &partial {
                for beta in compositions_of(part) {
                    let sign = rational::sign(beta.len() + part);
                    next.push((prefix.concat(&beta), coeff * sign));
                }
            }
            partial = next;
        }
        for (beta, coeff) in partial {
            m[(i, beta.set_mask() as usize)] += coeff;
        }
    }
    m
}

/// `R_α = (-1)^{ℓ(α)} Σ_{α ⪯ β} (-1)^{ℓ(β)} H_β`
fn r_to_h(n: usize) -> Matrix {
    matrix_over(n, |alpha, beta| {
        if alpha.refines(beta) {
            rational::sign(alpha.len() + beta.len())
        } else {
            Rational::zero()
        }
    })
}

impl Basis for NSymBasis {
    type Index = Composition;

    const SPACE: &'static str = "nsym";

    fn all() -> &'static [Self] {
        &[
            NSymBasis::E,
            NSymBasis::H,
            NSymBasis::R,
            NSymBasis::S,
            NSymBasis::YS,
        ]
    }

    fn hub() -> Self {
        NSymBasis::R
    }

    fn compute_hub_matrix(self, n: usize) -> Result<Matrix> {
        match self {
            NSymBasis::R => Ok(Matrix::identity(compositions_of(n).len())),
            NSymBasis::H => invert(&r_to_h(n), || format!("R->H in degree {n}")),
            NSymBasis::E => {
                let e_to_h = invert(&h_to_e(n), || format!("H->E in degree {n}"))?;
                Ok(e_to_h.mul(&*transition(NSymBasis::H, NSymBasis::R, n)?))
            }
            NSymBasis::YS => {
                let d = dhat_matrix(n);
                let r_to_ys =
                    matrix_over(n, |alpha, beta| rational::int(d.get(beta, alpha) as i64));
                invert(&r_to_ys, || format!("R->YS in degree {n}"))
            }
            NSymBasis::S => {
                let d = dhat_matrix(n);
                let r_to_s = matrix_over(n, |alpha, beta| {
                    rational::int(d.get(&beta.reversal(), &alpha.reversal()) as i64)
                });
                invert(&r_to_s, || format!("R->S in degree {n}"))
            }
        }
    }

    fn cache() -> &'static TransitionCache<Self> {
        static CACHE: OnceLock<TransitionCache<NSymBasis>> = OnceLock::new();
        CACHE.get_or_init(Default::default)
    }

    fn name(self) -> &'static str {
        match self {
            NSymBasis::E => "E",
            NSymBasis::H => "H",
            NSymBasis::R => "R",
            NSymBasis::S => "S",
            NSymBasis::YS => "YS",
        }
    }
}

pub fn nsym_convert(x: &NSymElement, target: NSymBasis) -> Result<NSymElement> {
    x.convert(target)
}

/// `H_α · H_β = H_{α·β}`; the result is in `x`'s basis.
pub fn nsym_multiply(x: &NSymElement, y: &NSymElement) -> Result<NSymElement> {
    let hx = x.convert(NSymBasis::H)?;
    let hy = y.convert(NSymBasis::H)?;
    hx.multiply_indices(&hy, Composition::concat)
        .convert(x.basis())
}

/// The anti-automorphism `R_α ↦ R_ᾱ`, returned in `x`'s basis.
pub fn star_antiautomorphism(x: &NSymElement) -> Result<NSymElement> {
    x.convert(NSymBasis::R)?
        .map_indices(Composition::reversal)
        .convert(x.basis())
}

/// The abelianization `Θ(H_α) = h_{λ̃(α)}`, in the `H` basis of `Sym`.
pub fn forgetful_map(x: &NSymElement) -> Result<SymElement> {
    let h = x.convert(NSymBasis::H)?;
    Ok(SymElement::from_terms(
        SymBasis::H,
        h.terms()
            .iter()
            .map(|(alpha, c)| (alpha.underlying_partition(), c.clone())),
    ))
}

/// `⟨F_α, R_β⟩ = δ_{αβ}`, extended bilinearly.
pub fn duality_pairing(q: &QSymElement, f: &NSymElement) -> Result<Rational> {
    let fq = q.convert(QSymBasis::F)?;
    let rf = f.convert(NSymBasis::R)?;
    let mut total = Rational::zero();
    for (alpha, a) in fq.terms() {
        if let Some(b) = rf.terms().get(alpha) {
            total += a * b;
        }
    }
    Ok(total)
}

/// The `NSym` basis dual to a `QSym` basis under the pairing.
pub fn dual_basis(basis: QSymBasis) -> NSymBasis {
    match basis {
        QSymBasis::M => NSymBasis::H,
        QSymBasis::F => NSymBasis::R,
        QSymBasis::QS => NSymBasis::S,
        QSymBasis::YQS => NSymBasis::YS,
    }
}

/// Matrix of `⟨q_α, f_β⟩` over compositions of `n` in canonical order.
pub fn pairing_matrix(q: QSymBasis, f: NSymBasis, n: usize) -> Result<Matrix> {
    let all = compositions_of(n);
    let mut m = Matrix::zeros(all.len(), all.len());
    for (i, alpha) in all.iter().enumerate() {
        let qa = QSymElement::basis_element(q, alpha.clone());
        for (j, beta) in all.iter().enumerate() {
            m[(i, j)] = duality_pairing(&qa, &NSymElement::basis_element(f, beta.clone()))?;
        }
    }
    Ok(m)
}
