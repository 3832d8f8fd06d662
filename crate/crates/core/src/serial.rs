//! JSON and CSV forms of elements, class functions and transition matrices.
//!
//! Coefficients are exact rationals rendered as `p` or `p/q`. Terms appear in
//! canonical index order and zero coefficients are never written.

use serde::{Deserialize, Serialize};

use crate::character::ClassFunction;
use crate::combinatorics::{Composition, Partition};
use crate::descent::{GroupAlgebraElement, Permutation};
use crate::element::{Basis, Element, GradedIndex};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedTerm {
    pub index: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedElement {
    pub space: String,
    pub basis: String,
    pub degree: usize,
    pub terms: Vec<SerializedTerm>,
}

/// Index types that can be rebuilt from their parts.
pub trait FromParts: Sized {
    fn from_parts(parts: Vec<usize>) -> Result<Self>;
}

impl FromParts for Composition {
    fn from_parts(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl FromParts for Partition {
    fn from_parts(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl SerializedElement {
    /// `degree` is recorded as given; it names the graded piece requested.
    pub fn from_element<B: Basis>(x: &Element<B>, degree: usize) -> Self {
        SerializedElement {
            space: B::SPACE.to_string(),
            basis: x.basis().name().to_string(),
            degree,
            terms: x
                .terms()
                .iter()
                .map(|(i, c)| SerializedTerm {
                    index: i.parts().to_vec(),
                    coeff: rational::format(c),
                })
                .collect(),
        }
    }

    pub fn to_element<B: Basis>(&self) -> Result<Element<B>>
    where
        B::Index: FromParts,
    {
        if self.space != B::SPACE {
            return Err(Error::Parse(format!(
                "expected space {}, found {}",
                B::SPACE,
                self.space
            )));
        }
        let basis = B::parse(&self.basis)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let index = B::Index::from_parts(t.index.clone())?;
            let coeff = rational::parse(&t.coeff)?;
            if num_traits::Zero::is_zero(&coeff) {
                return Err(Error::Parse(
                    "zero coefficient in serialized element".into(),
                ));
            }
            terms.push((index, coeff));
        }
        Ok(Element::from_terms(basis, terms))
    }

    pub fn from_group_element(x: &GroupAlgebraElement) -> Self {
        SerializedElement {
            space: "group-algebra".to_string(),
            basis: "permutation".to_string(),
            degree: x.degree(),
            terms: x
                .terms()
                .iter()
                .map(|(p, c)| SerializedTerm {
                    index: p.images().to_vec(),
                    coeff: rational::format(c),
                })
                .collect(),
        }
    }

    pub fn to_group_element(&self) -> Result<GroupAlgebraElement> {
        if self.space != "group-algebra" {
            return Err(Error::Parse(format!(
                "expected space group-algebra, found {}",
                self.space
            )));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push((
                Permutation::new(t.index.clone())?,
                rational::parse(&t.coeff)?,
            ));
        }
        GroupAlgebraElement::from_terms(self.degree, terms)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassValue {
    pub class: Vec<usize>,
    pub value: String,
}

/// A class function with every cycle type listed, zeros included.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedClassFunction {
    pub space: String,
    pub character: String,
    pub index: Vec<usize>,
    pub degree: usize,
    pub values: Vec<ClassValue>,
}

impl SerializedClassFunction {
    pub fn new(character: &str, index: &[usize], f: &ClassFunction) -> Self {
        SerializedClassFunction {
            space: "class-function".to_string(),
            character: character.to_string(),
            index: index.to_vec(),
            degree: f.degree(),
            values: f
                .classes()
                .into_iter()
                .zip(f.values())
                .map(|(mu, v)| ClassValue {
                    class: mu.parts().to_vec(),
                    value: rational::format(v),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
/// A transition matrix with rows indexed by the target basis and columns by
/// the source basis: column `j` holds the expansion of the `j`-th source
/// element.
pub struct SerializedMatrix {
    pub space: String,
    pub from: String,
    pub to: String,
    pub degree: usize,
    pub indices: Vec<Vec<usize>>,
    pub rows: Vec<Vec<String>>,
}

impl SerializedMatrix {
    pub fn new<B: Basis>(from: B, to: B, degree: usize, m: &Matrix) -> Self {
        SerializedMatrix {
            space: B::SPACE.to_string(),
            from: from.name().to_string(),
            to: to.name().to_string(),
            degree,
            indices: B::Index::all_of_degree(degree)
                .iter()
                .map(|i| i.parts().to_vec())
                .collect(),
            rows: (0..m.cols())
                .map(|j| {
                    (0..m.rows())
                        .map(|i| rational::format(&m[(i, j)]))
                        .collect()
                })
                .collect(),
        }
    }

    /// Header row of `.`-joined source indices; each row starts with its
    /// target index.
    pub fn to_csv(&self) -> String {
        let label = |parts: &[usize]| -> String {
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(".")
            }
        };
        let mut out = String::new();
        out.push_str(&format!("{}\\{}", self.to, self.from));
        for idx in &self.indices {
            out.push(',');
            out.push_str(&label(idx));
        }
        out.push('\n');
        for (idx, row) in self.indices.iter().zip(&self.rows) {
            out.push_str(&label(idx));
            for v in row {
                out.push(',');
                out.push_str(v);
            }
            out.push('\n');
        }
        out
    }
}
