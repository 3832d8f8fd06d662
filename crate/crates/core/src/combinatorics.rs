//! Compositions, partitions and descent sets.
//!
//! Compositions of `n` are ordered canonically by degree and then by the
//! binary counter of their descent set: `i ∈ set(α)` contributes bit `i - 1`.
//! Partitions are ordered by degree and then reverse lexicographically, so
//! `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Composition(Vec<usize>);

/// A weakly decreasing finite sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition(Vec<usize>);

/// A subset of `{1, …, n-1}`, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DescentSet {
    n: usize,
    elements: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// Partial sums excluding the last, as a subset of `[n-1]`.
    pub fn descent_set(&self) -> DescentSet {
        let mut acc = 0;
        let mut elements = Vec::with_capacity(self.len().saturating_sub(1));
        for &p in self.0.iter().take(self.len().saturating_sub(1)) {
            acc += p;
            elements.push(acc);
        }
        DescentSet {
            n: self.degree(),
            elements,
        }
    }

    /// Bit mask of `set(α)`, bit `i - 1` for each element `i`.
    pub fn set_mask(&self) -> u64 {
        self.descent_set().mask()
    }

    /// Inverse of [`Composition::set_mask`] in degree `n`.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        if n == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::new();
        let mut last = 0;
        for i in 1..n {
            if mask >> (i - 1) & 1 == 1 {
                parts.push(i - last);
                last = i;
            }
        }
        parts.push(n - last);
        Composition(parts)
    }

    pub fn reversal(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    pub fn underlying_partition(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// True iff `self ⪯ coarser`: adjacent parts of `self` sum blockwise to
    /// the parts of `coarser`.
    pub fn refines(&self, coarser: &Composition) -> bool {
        if self.degree() != coarser.degree() {
            return false;
        }
        let mine = self.set_mask();
        let theirs = coarser.set_mask();
        mine & theirs == theirs
    }

    /// Concatenation `α·β`.
    pub fn concat(&self, other: &Composition) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// All compositions that `self` refines, i.e. all coarsenings.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let n = self.degree();
        let mask = self.set_mask();
        compositions_of(n)
            .into_iter()
            .filter(|c| c.set_mask() & mask == c.set_mask())
            .collect()
    }

    /// All refinements of `self`.
    pub fn refinements(&self) -> Vec<Composition> {
        let n = self.degree();
        let mask = self.set_mask();
        compositions_of(n)
            .into_iter()
            .filter(|c| c.set_mask() & mask == mask)
            .collect()
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.set_mask().cmp(&other.set_mask()))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts `parts` decreasingly; fails only on zero parts.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// The multiset union `λ ⊎ μ`, sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// `∏ i^{m_i} m_i!`, the order of the centralizer of a permutation of
    /// this cycle type.
    pub fn z_stat(&self) -> u128 {
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let mut mult = 0u128;
            while i < self.0.len() && self.0[i] == part {
                mult += 1;
                z *= part as u128;
                z *= mult;
                i += 1;
            }
        }
        z
    }

    /// Compositions whose underlying partition is `self`, in canonical order.
    pub fn rearrangements(&self) -> Vec<Composition> {
        compositions_of(self.degree())
            .into_iter()
            .filter(|c| &c.underlying_partition() == self)
            .collect()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl DescentSet {
    pub fn new(elements: Vec<usize>, n: usize) -> Result<Self> {
        let max = n.saturating_sub(1);
        if let Some(&bad) = elements.iter().find(|&&e| e == 0 || e > max) {
            return Err(Error::InvalidSubset { element: bad, max });
        }
        let mut elements = elements;
        elements.sort_unstable();
        elements.dedup();
        Ok(DescentSet { n, elements })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn mask(&self) -> u64 {
        self.elements.iter().fold(0, |m, &e| m | 1 << (e - 1))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &DescentSet) -> bool {
        self.mask() & !other.mask() == 0
    }

    /// `comp(J)`.
    pub fn composition(&self) -> Composition {
        Composition::from_mask(self.mask(), self.n)
    }
}

/// The partial sums of `α` excluding the last.
pub fn set_of(alpha: &Composition) -> DescentSet {
    alpha.descent_set()
}

/// `comp(J)` for `J ⊆ [n-1]`.
pub fn comp_of(set: &[usize], n: usize) -> Result<Composition> {
    Ok(DescentSet::new(set.to_vec(), n)?.composition())
}

/// All compositions of `n` in canonical (subset-counter) order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    assert!(n <= 64, "compositions of {n} exceed the index width");
    (0..1u64 << (n - 1))
        .map(|mask| Composition::from_mask(mask, n))
        .collect()
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn z_stat(mu: &Partition) -> u128 {
    mu.z_stat()
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "0" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.parse::<usize>()
                .ok()
                .filter(|&v| v > 0)
                .ok_or_else(|| Error::Parse(format!("bad part {p:?} in {s:?}")))
        })
        .collect()
}

fn write_parts(parts: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if parts.is_empty() {
        return write!(f, "0");
    }
    let joined: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    write!(f, "{}", joined.join(","))
}

/// Comma-separated positive integers; `0` is the empty composition.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(&self.0, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(&self.0, f)
    }
}
