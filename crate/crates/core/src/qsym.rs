//! The graded space `QSym` with the monomial (`M`), fundamental (`F`),
//! quasisymmetric Schur (`QS`) and Young quasisymmetric Schur (`YQS`) bases.
//!
//! `F` is the hub: `F_α = Σ_{β⪯α} M_β`, `YQS_α = Σ_β d̂_{αβ} F_β` and
//! `QS_α = Σ_β d̂_{ᾱβ̄} F_β`.

use std::fmt;
use std::sync::OnceLock;

use crate::combinatorics::{compositions_of, Composition};
use crate::element::{invert, Basis, Element, TransitionCache};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::rational;
use crate::sym::{SymBasis, SymElement};
use crate::tableaux::dhat_matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QSymBasis {
    M,
    F,
    QS,
    YQS,
}

pub type QSymElement = Element<QSymBasis>;

impl fmt::Display for QSymBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Basis for QSymBasis {
    type Index = Composition;

    const SPACE: &'static str = "qsym";

    fn all() -> &'static [Self] {
        &[QSymBasis::M, QSymBasis::F, QSymBasis::QS, QSymBasis::YQS]
    }

    fn hub() -> Self {
        QSymBasis::F
    }

    fn compute_hub_matrix(self, n: usize) -> Result<Matrix> {
        let all = compositions_of(n);
        let size = all.len();
        match self {
            QSymBasis::F => Ok(Matrix::identity(size)),
            QSymBasis::M => {
                let f_to_m = Matrix::from_rows(
                    all.iter()
                        .map(|alpha| {
                            all.iter()
                                .map(|beta| rational::int(i64::from(beta.refines(alpha))))
                                .collect()
                        })
                        .collect(),
                );
                invert(&f_to_m, || format!("F->M in degree {n}"))
            }
            QSymBasis::YQS => {
                let d = dhat_matrix(n);
                Ok(Matrix::from_rows(
                    all.iter()
                        .map(|alpha| {
                            all.iter()
                                .map(|beta| rational::int(d.get(alpha, beta) as i64))
                                .collect()
                        })
                        .collect(),
                ))
            }
            QSymBasis::QS => {
                let d = dhat_matrix(n);
                Ok(Matrix::from_rows(
                    all.iter()
                        .map(|alpha| {
                            all.iter()
                                .map(|beta| {
                                    rational::int(d.get(&alpha.reversal(), &beta.reversal()) as i64)
                                })
                                .collect()
                        })
                        .collect(),
                ))
            }
        }
    }

    fn cache() -> &'static TransitionCache<Self> {
        static CACHE: OnceLock<TransitionCache<QSymBasis>> = OnceLock::new();
        CACHE.get_or_init(Default::default)
    }

    fn name(self) -> &'static str {
        match self {
            QSymBasis::M => "M",
            QSymBasis::F => "F",
            QSymBasis::QS => "QS",
            QSymBasis::YQS => "YQS",
        }
    }
}

pub fn qsym_convert(x: &QSymElement, target: QSymBasis) -> Result<QSymElement> {
    x.convert(target)
}

/// The involution `F_α ↦ F_ᾱ`, returned in `x`'s basis.
pub fn reversal_automorphism(x: &QSymElement) -> Result<QSymElement> {
    x.convert(QSymBasis::F)?
        .map_indices(Composition::reversal)
        .convert(x.basis())
}

/// The `Sym` preimage (in the monomial basis) when `x` is symmetric.
pub fn symmetric_part(x: &QSymElement) -> Result<Option<SymElement>> {
    let m = x.convert(QSymBasis::M)?;
    let mut terms = Vec::new();
    for (alpha, c) in m.terms() {
        let mu = alpha.underlying_partition();
        // each orbit is checked once, from its first member in canonical order
        let orbit = mu.rearrangements();
        if orbit.first() != Some(alpha) {
            if m.coeff(&orbit[0]) != *c {
                return Ok(None);
            }
            continue;
        }
        if orbit.iter().any(|beta| m.coeff(beta) != *c) {
            return Ok(None);
        }
        terms.push((mu, c.clone()));
    }
    Ok(Some(SymElement::from_terms(SymBasis::M, terms)))
}
