//! Sparse elements of graded vector spaces with a fixed set of bases, and the
//! cached per-degree transition matrices between those bases.
//!
//! Each space names a hub basis. A basis supplies the matrix expressing its
//! degree-`n` elements in the hub; every other transition is composed from
//! those matrices and their exact inverses.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

use num_traits::Zero;

use crate::combinatorics::{compositions_of, partitions_of, Composition, Partition};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{self, Rational};

/// An index of a homogeneous basis element.
pub trait GradedIndex:
    Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn degree(&self) -> usize;
    fn parts(&self) -> &[usize];
    /// All indices of degree `n` in canonical order.
    fn all_of_degree(n: usize) -> Vec<Self>;
}

impl GradedIndex for Composition {
    fn degree(&self) -> usize {
        Composition::degree(self)
    }

    fn parts(&self) -> &[usize] {
        Composition::parts(self)
    }

    fn all_of_degree(n: usize) -> Vec<Self> {
        compositions_of(n)
    }
}

impl GradedIndex for Partition {
    fn degree(&self) -> usize {
        Partition::degree(self)
    }

    fn parts(&self) -> &[usize] {
        Partition::parts(self)
    }

    fn all_of_degree(n: usize) -> Vec<Self> {
        partitions_of(n)
    }
}

/// Cache of transition matrices keyed by `(from, to, degree)`.
pub struct TransitionCache<B> {
    matrices: Mutex<HashMap<(B, B, usize), Arc<Matrix>>>,
}

impl<B> Default for TransitionCache<B> {
    fn default() -> Self {
        TransitionCache {
            matrices: Mutex::new(HashMap::new()),
        }
    }
}

/// A basis tag of a graded space.
pub trait Basis:
    Copy + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    type Index: GradedIndex;

    /// Space name used in serialized output.
    const SPACE: &'static str;

    fn all() -> &'static [Self];

    fn hub() -> Self;

    /// Rows: `self` indices of degree `n`; columns: hub indices. Row `i`
    /// holds the hub expansion of the `i`-th basis element.
    fn compute_hub_matrix(self, n: usize) -> Result<Matrix>;

    fn cache() -> &'static TransitionCache<Self>;

    /// Short name used on the command line.
    fn name(self) -> &'static str;

    fn parse(name: &str) -> Result<Self> {
        Self::all()
            .iter()
            .copied()
            .find(|b| b.name().eq_ignore_ascii_case(name) || b.to_string() == name)
            .ok_or_else(|| Error::UnknownBasis {
                space: Self::SPACE.to_string(),
                basis: name.to_string(),
            })
    }
}

fn cached<B: Basis>(
    key: (B, B, usize),
    compute: impl FnOnce() -> Result<Matrix>,
) -> Result<Arc<Matrix>> {
    let cache = B::cache();
    if let Some(m) = cache.matrices.lock().unwrap().get(&key) {
        return Ok(Arc::clone(m));
    }
    // computed without the lock held: computations recurse into other entries
    let m = Arc::new(compute()?);
    Ok(Arc::clone(
        cache.matrices.lock().unwrap().entry(key).or_insert(m),
    ))
}

pub(crate) fn invert(m: &Matrix, what: impl FnOnce() -> String) -> Result<Matrix> {
    m.inverse()
        .ok_or_else(|| Error::InternalConsistency(format!("singular transition matrix {}", what())))
}

/// Degree-`n` transition matrix: row `i` is the `to`-expansion of the `i`-th
/// `from` basis element.
pub fn transition<B: Basis>(from: B, to: B, n: usize) -> Result<Arc<Matrix>> {
    if from == to {
        return cached((from, to, n), || {
            Ok(Matrix::identity(B::Index::all_of_degree(n).len()))
        });
    }
    let hub = B::hub();
    if to == hub {
        return cached((from, to, n), || from.compute_hub_matrix(n));
    }
    if from == hub {
        return cached((from, to, n), || {
            let forward = transition(to, hub, n)?;
            invert(&forward, || format!("{to}->{hub} in degree {n}"))
        });
    }
    cached((from, to, n), || {
        Ok(transition(from, hub, n)?.mul(&*transition(hub, to, n)?))
    })
}

/// A finite linear combination of basis elements of one basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element<B: Basis> {
    basis: B,
    terms: BTreeMap<B::Index, Rational>,
}

impl<B: Basis> Element<B> {
    pub fn zero(basis: B) -> Self {
        Element {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The unit, indexed by the empty index.
    pub fn one(basis: B) -> Self {
        Self::basis_element(basis, B::Index::all_of_degree(0).remove(0))
    }

    pub fn basis_element(basis: B, index: B::Index) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(index, rational::one());
        Element { basis, terms }
    }

    /// Sums repeated indices and drops zero coefficients.
    pub fn from_terms(basis: B, terms: impl IntoIterator<Item = (B::Index, Rational)>) -> Self {
        let mut map: BTreeMap<B::Index, Rational> = BTreeMap::new();
        for (index, coeff) in terms {
            *map.entry(index).or_insert_with(Rational::zero) += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Element { basis, terms: map }
    }

    pub fn basis(&self) -> B {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<B::Index, Rational> {
        &self.terms
    }

    pub fn coeff(&self, index: &B::Index) -> Rational {
        self.terms
            .get(index)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(GradedIndex::degree).collect()
    }

    /// `Some(n)` iff every term has degree `n`; the zero element has none.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let degrees = self.degrees();
        if degrees.len() == 1 {
            degrees.into_iter().next()
        } else {
            None
        }
    }

    /// Dense coefficient vector of the degree-`n` part in canonical order.
    pub fn dense(&self, n: usize) -> Vec<Rational> {
        B::Index::all_of_degree(n)
            .iter()
            .map(|i| self.coeff(i))
            .collect()
    }

    pub fn from_dense(basis: B, n: usize, coeffs: &[Rational]) -> Self {
        Self::from_terms(
            basis,
            B::Index::all_of_degree(n)
                .into_iter()
                .zip(coeffs.iter().cloned()),
        )
    }

    /// The same element expressed in `target`.
    pub fn convert(&self, target: B) -> Result<Self> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let mut out = Vec::new();
        for n in self.degrees() {
            let m = transition(self.basis, target, n)?;
            let image = m.apply_row(&self.dense(n));
            out.extend(B::Index::all_of_degree(n).into_iter().zip(image));
        }
        Ok(Self::from_terms(target, out))
    }

    fn check_basis(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                left: self.basis.to_string(),
                right: other.basis.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_basis(other)?;
        Ok(Self::from_terms(
            self.basis,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(i, c)| (i.clone(), c.clone())),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-rational::one()))
    }

    pub fn scale(&self, by: &Rational) -> Self {
        Self::from_terms(
            self.basis,
            self.terms.iter().map(|(i, c)| (i.clone(), c * by)),
        )
    }

    /// Maps each index through `f`, keeping coefficients.
    pub fn map_indices(&self, f: impl Fn(&B::Index) -> B::Index) -> Self {
        Self::from_terms(
            self.basis,
            self.terms.iter().map(|(i, c)| (f(i), c.clone())),
        )
    }

    /// Equality as abstract elements, converting `other` into this basis.
    pub fn same_element(&self, other: &Self) -> Result<bool> {
        Ok(*self == other.convert(self.basis)?)
    }

    /// Bilinear extension of a product on basis indices, all in `basis`.
    pub(crate) fn multiply_indices(
        &self,
        other: &Self,
        product: impl Fn(&B::Index, &B::Index) -> B::Index,
    ) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                out.push((product(i, j), a * b));
            }
        }
        Self::from_terms(self.basis, out)
    }
}

impl<B: Basis> fmt::Debug for Element<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<B: Basis> fmt::Display for Element<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(i, c)| format!("{}*{}[{}]", rational::format(c), self.basis, i))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
