//! Exact computer algebra for symmetric (`Sym`), quasisymmetric (`QSym`) and
//! noncommutative symmetric (`NSym`) functions, the descent algebras of the
//! symmetric groups, and the character theory tying them together.
//!
//! Every coefficient is an arbitrary-precision rational. Homogeneous pieces
//! are indexed by [`Partition`]s (in `Sym`) or [`Composition`]s (in `QSym`
//! and `NSym`); both index types order themselves canonically so that sparse
//! term maps and dense transition matrices agree on a single ordering.

pub mod character;
pub mod combinatorics;
pub mod descent;
pub mod element;
pub mod error;
pub mod linalg;
pub mod nsym;
pub mod qsym;
pub mod rational;
pub mod serial;
pub mod sym;
pub mod tableaux;
pub mod verify;

pub use character::ClassFunction;
pub use combinatorics::{Composition, DescentSet, Partition};
pub use descent::{GroupAlgebraElement, Permutation};
pub use element::{Basis, Element, GradedIndex};
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use nsym::{NSymBasis, NSymElement};
pub use qsym::{QSymBasis, QSymElement};
pub use rational::Rational;
pub use sym::{SymBasis, SymElement};
pub use tableaux::{Syct, Syt};
