//! Group algebras of the symmetric groups and their descent algebras.
//!
//! Permutations are stored in one-line form and compose as functions,
//! `(σ∘τ)(i) = σ(τ(i))`. `Ξ_α` sums the permutations whose descent set is
//! contained in `set(α)` and `Δ_α` those whose descent set equals it.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::combinatorics::{compositions_of, Composition};
use crate::error::{Error, Result};
use crate::nsym::{NSymBasis, NSymElement};
use crate::rational::{self, Rational};

/// Degree bound for group-algebra construction when `NCSF_MAX_N` is unset.
pub const DEFAULT_MAX_DEGREE: usize = 8;

/// The group-algebra degree bound, overridable through `NCSF_MAX_N`.
pub fn max_degree() -> usize {
    std::env::var("NCSF_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DEGREE)
}

pub fn check_degree(n: usize) -> Result<()> {
    let limit = max_degree();
    if n > limit {
        return Err(Error::ResourceLimit { n, limit });
    }
    Ok(())
}

/// The elements of `S_n`, each paired with its descent mask.
pub type GroupListing = Arc<Vec<(Permutation, u64)>>;

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i - 1]).collect())
    }

    pub fn descent_mask(&self) -> u64 {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn descents(&self) -> Vec<usize> {
        (1..self.degree())
            .filter(|&i| self.0[i - 1] > self.0[i])
            .collect()
    }

    pub fn descent_composition(&self) -> Composition {
        Composition::from_mask(self.descent_mask(), self.degree())
    }

    /// Cycle lengths sorted decreasingly.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut lengths = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i - 1];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.degree() > 9 { "," } else { "" };
        write!(f, "{}", self.0.iter().join(sep))
    }
}

/// All of `S_n` in lexicographic order, with descent masks; memoized.
pub fn symmetric_group(n: usize) -> Result<GroupListing> {
    check_degree(n)?;
    static CACHE: OnceLock<Mutex<HashMap<usize, GroupListing>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().unwrap().get(&n) {
        return Ok(Arc::clone(g));
    }
    let group: Vec<(Permutation, u64)> = (1..=n)
        .permutations(n)
        .map(|images| {
            let p = Permutation(images);
            let mask = p.descent_mask();
            (p, mask)
        })
        .collect();
    let group = Arc::new(group);
    Ok(Arc::clone(cache.lock().unwrap().entry(n).or_insert(group)))
}

/// An element of the group algebra of `S_n` over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_permutation(p: Permutation) -> Self {
        let n = p.degree();
        GroupAlgebraElement {
            n,
            terms: BTreeMap::from([(p, Rational::one())]),
        }
    }

    /// Fails when a permutation's degree differs from `n`.
    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Permutation, Rational)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Permutation, Rational> = BTreeMap::new();
        for (p, c) in terms {
            if p.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: n,
                    right: p.degree(),
                });
            }
            *map.entry(p).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(GroupAlgebraElement { n, terms: map })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, Rational> {
        &self.terms
    }

    pub fn coeff(&self, p: &Permutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Self::from_terms(
            self.n,
            self.terms
                .iter()
                .chain(&other.terms)
                .map(|(p, c)| (p.clone(), c.clone())),
        )
    }

    pub fn scale(&self, by: &Rational) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(p, c)| (p.clone(), c * by)))
            .expect("degrees unchanged")
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 in S_{}", self.n);
        }
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| format!("{}*[{}]", rational::format(c), p))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

pub fn descent_composition_perm(sigma: &Permutation) -> Composition {
    sigma.descent_composition()
}

fn descent_class_sum(n: usize, keep: impl Fn(u64) -> bool) -> Result<GroupAlgebraElement> {
    let group = symmetric_group(n)?;
    Ok(GroupAlgebraElement {
        n,
        terms: group
            .iter()
            .filter(|(_, mask)| keep(*mask))
            .map(|(p, _)| (p.clone(), Rational::one()))
            .collect(),
    })
}

/// `Ξ_α`: the sum of permutations with descent set inside `set(α)`, i.e. the
/// minimal length coset representatives of the Young subgroup `S_α`.
pub fn xi(alpha: &Composition) -> Result<GroupAlgebraElement> {
    let set = alpha.set_mask();
    descent_class_sum(alpha.degree(), |mask| mask & !set == 0)
}

/// `Δ_α`: the sum of permutations with descent set exactly `set(α)`.
pub fn delta(alpha: &Composition) -> Result<GroupAlgebraElement> {
    let set = alpha.set_mask();
    descent_class_sum(alpha.degree(), |mask| mask == set)
}

/// Bilinear extension of composition of permutations.
pub fn convolve(a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
    if a.n != b.n {
        return Err(Error::DegreeMismatch {
            left: a.n,
            right: b.n,
        });
    }
    let mut acc: HashMap<Permutation, Rational> = HashMap::new();
    for (p, x) in &a.terms {
        for (q, y) in &b.terms {
            *acc.entry(p.compose(q)).or_insert_with(Rational::zero) += x * y;
        }
    }
    GroupAlgebraElement::from_terms(a.n, acc)
}

/// The `Δ`-coordinates of `a` when its coefficient is constant on every
/// descent class; only nonzero coordinates are returned.
pub fn descent_span_coordinates(
    a: &GroupAlgebraElement,
) -> Result<Option<BTreeMap<Composition, Rational>>> {
    let group = symmetric_group(a.n)?;
    let mut class_value: HashMap<u64, Rational> = HashMap::new();
    for (p, mask) in group.iter() {
        let c = a.coeff(p);
        match class_value.get(mask) {
            Some(v) if *v != c => return Ok(None),
            Some(_) => {}
            None => {
                class_value.insert(*mask, c);
            }
        }
    }
    Ok(Some(
        class_value
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mask, c)| (Composition::from_mask(mask, a.n), c))
            .collect(),
    ))
}

/// `Σ c_α Δ_α`
pub fn from_delta_coordinates(
    n: usize,
    coords: &BTreeMap<Composition, Rational>,
) -> Result<GroupAlgebraElement> {
    let group = symmetric_group(n)?;
    let by_mask: HashMap<u64, &Rational> = coords
        .iter()
        .map(|(alpha, c)| (alpha.set_mask(), c))
        .collect();
    Ok(GroupAlgebraElement {
        n,
        terms: group
            .iter()
            .filter_map(|(p, mask)| {
                by_mask
                    .get(mask)
                    .filter(|c| !c.is_zero())
                    .map(|c| (p.clone(), (*c).clone()))
            })
            .collect(),
    })
}

/// `ψ(Δ_α) = R_α`, equivalently `ψ(Ξ_α) = H_α`.
pub fn psi(d: &GroupAlgebraElement) -> Result<NSymElement> {
    let coords = descent_span_coordinates(d)?.ok_or(Error::NotInSpan)?;
    Ok(NSymElement::from_terms(NSymBasis::R, coords))
}

/// The inverse of [`psi`] on a homogeneous element.
pub fn psi_inverse(f: &NSymElement) -> Result<GroupAlgebraElement> {
    let n = f.homogeneous_degree().ok_or(Error::Inhomogeneous)?;
    check_degree(n)?;
    let r = f.convert(NSymBasis::R)?;
    from_delta_coordinates(n, r.terms())
}

/// `Ξ`-coordinates from `Δ`-coordinates: `Δ_α = Σ_{set β ⊆ set α} (-1)^{|set α \ set β|} Ξ_β`.
pub fn delta_to_xi_coordinates(
    n: usize,
    coords: &BTreeMap<Composition, Rational>,
) -> BTreeMap<Composition, Rational> {
    let mut out: BTreeMap<Composition, Rational> = BTreeMap::new();
    for (alpha, c) in coords {
        let set = alpha.set_mask();
        for beta in compositions_of(n) {
            let sub = beta.set_mask();
            if sub & !set == 0 {
                let sign = rational::sign((set & !sub).count_ones() as usize);
                *out.entry(beta).or_insert_with(Rational::zero) += c * sign;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}
