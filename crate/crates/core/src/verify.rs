//! Verification suites: the noncommutative irreducible character theorem,
//! QSym–NSym duality, Solomon's homomorphism, and the commuting square
//! `ch ∘ θ = Θ ∘ ψ`.
//!
//! Failures are report content, not errors. Errors are reserved for
//! out-of-bound degrees.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::character::{
    class_products, frobenius_ch, irreducible_character, noncommutative_character, theta,
    young_character, ProductMode, SchurFamily,
};
use crate::combinatorics::{compositions_of, Composition};
use crate::descent::{check_degree, convolve, descent_span_coordinates, psi, xi};
use crate::element::Basis;
use crate::error::{Error, Result};
use crate::nsym::{dual_basis, forgetful_map, pairing_matrix};
use crate::qsym::QSymBasis;
use crate::sym::{SymBasis, SymElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    MainTheorem,
    Duality,
    Solomon,
    Square,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::MainTheorem,
        Suite::Duality,
        Suite::Solomon,
        Suite::Square,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MainTheorem => "main-theorem",
            Suite::Duality => "duality",
            Suite::Solomon => "solomon",
            Suite::Square => "square",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    fn pass(label: String) -> Self {
        Check {
            label,
            passed: true,
            witness: None,
        }
    }

    fn fail(label: String, witness: String) -> Self {
        Check {
            label,
            passed: false,
            witness: Some(witness),
        }
    }

    fn from_result(label: String, outcome: Result<Option<String>>) -> Self {
        match outcome {
            Ok(None) => Check::pass(label),
            Ok(Some(witness)) => Check::fail(label, witness),
            Err(e) => Check::fail(label, format!("error: {e}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub n: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn summary(&self) -> String {
        format!(
            "{} n={}: {}/{} pass",
            self.suite,
            self.n,
            self.passed(),
            self.checks.len()
        )
    }
}

/// Character checks and commuting-square checks for degree `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MainTheoremReport {
    pub characters: Report,
    pub square: Report,
}

impl MainTheoremReport {
    pub fn all_passed(&self) -> bool {
        self.characters.all_passed() && self.square.all_passed()
    }
}

/// `θ(ψ^{-1}(S_α)) = θ(ψ^{-1}(YS_α)) = χ^{λ̃(α)}` for every `α ⊨ n`, plus
/// the commuting square on the `Ξ` basis.
pub fn verify_main_theorem(n: usize) -> Result<MainTheoremReport> {
    Ok(MainTheoremReport {
        characters: run(Suite::MainTheorem, n)?,
        square: run(Suite::Square, n)?,
    })
}

fn character_check(alpha: &Composition, family: SchurFamily) -> Result<Option<String>> {
    let lambda = alpha.underlying_partition();
    let element = noncommutative_character(alpha, family)?;
    let image = theta(&element)?;
    let chi = irreducible_character(&lambda)?;
    Ok((image != chi)
        .then(|| format!("theta = {image:?}, chi^({lambda}) = {chi:?}, element = {element:?}")))
}

fn square_check(alpha: &Composition) -> Result<Option<String>> {
    let x = xi(alpha)?;
    let via_characters = frobenius_ch(&theta(&x)?).convert(SymBasis::H)?;
    let via_nsym = forgetful_map(&psi(&x)?)?;
    let h = SymElement::basis_element(SymBasis::H, alpha.underlying_partition());
    Ok((via_characters != via_nsym || via_nsym != h)
        .then(|| format!("ch(theta) = {via_characters}, Theta(psi) = {via_nsym}, expected {h}")))
}

fn solomon_check(alpha: &Composition, beta: &Composition) -> Result<Option<String>> {
    let product = convolve(&xi(alpha)?, &xi(beta)?)?;
    if descent_span_coordinates(&product)?.is_none() {
        return Ok(Some(format!(
            "product outside the descent span: {product:?}"
        )));
    }
    let image = theta(&product)?;
    let expected = class_products(
        &young_character(alpha)?,
        &young_character(beta)?,
        ProductMode::Pointwise,
    )?;
    Ok((image != expected).then(|| format!("theta = {image:?}, expected {expected:?}")))
}

fn duality_checks(n: usize) -> Vec<Check> {
    QSymBasis::all()
        .iter()
        .map(|&q| {
            let f = dual_basis(q);
            let label = format!("<{q},{f}> degree {n}");
            Check::from_result(
                label,
                pairing_matrix(q, f, n).map(|m| (!m.is_identity()).then(|| format!("{m:?}"))),
            )
        })
        .collect()
}

/// Runs one suite in degree `n`.
pub fn run(suite: Suite, n: usize) -> Result<Report> {
    check_degree(n)?;
    let compositions = compositions_of(n);
    let checks = match suite {
        Suite::MainTheorem => compositions
            .par_iter()
            .flat_map_iter(|alpha| {
                [SchurFamily::Schur, SchurFamily::YoungSchur].map(|family| {
                    Check::from_result(
                        format!(
                            "theta(psi^-1({family}_{alpha})) = chi^({})",
                            alpha.underlying_partition()
                        ),
                        character_check(alpha, family),
                    )
                })
            })
            .collect(),
        Suite::Square => compositions
            .par_iter()
            .map(|alpha| {
                Check::from_result(
                    format!("ch(theta(Xi_{alpha})) = Theta(psi(Xi_{alpha}))"),
                    square_check(alpha),
                )
            })
            .collect(),
        Suite::Solomon => {
            let pairs: Vec<(&Composition, &Composition)> = compositions
                .iter()
                .flat_map(|a| compositions.iter().map(move |b| (a, b)))
                .collect();
            pairs
                .par_iter()
                .map(|(a, b)| Check::from_result(format!("Xi_{a} * Xi_{b}"), solomon_check(a, b)))
                .collect()
        }
        Suite::Duality => duality_checks(n),
    };
    Ok(Report { suite, n, checks })
}
