//! Standard Young composition tableaux (SYCT), standard Young tableaux (SYT)
//! and semistandard counts.
//!
//! Rows are indexed from the bottom. A tableau is stored as its rows,
//! bottom row first, each read left to right. Columns of an SYT increase
//! from bottom to top.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::combinatorics::{compositions_of, Composition, Partition};
use crate::error::{Error, Result};

/// A standard Young composition tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Syct {
    #[serde(skip)]
    shape: Composition,
    rows: Vec<Vec<usize>>,
}

/// A standard Young tableau, French convention.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Syt {
    #[serde(skip)]
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

/// Checks that `rows` fits `shape` and is a bijection onto `[n]`.
fn check_filling(shape: &[usize], rows: &[Vec<usize>]) -> Result<()> {
    if shape.len() != rows.len() || shape.iter().zip(rows).any(|(&l, r)| l != r.len()) {
        return Err(Error::MalformedFilling(format!(
            "row lengths {:?} do not match shape {:?}",
            rows.iter().map(Vec::len).collect::<Vec<_>>(),
            shape
        )));
    }
    let n: usize = shape.iter().sum();
    let mut seen = vec![false; n + 1];
    for &v in rows.iter().flatten() {
        if v == 0 || v > n || seen[v] {
            return Err(Error::MalformedFilling(format!(
                "entries are not a bijection onto [1, {n}]"
            )));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Validity of a bijective filling of a composition diagram as an SYCT.
///
/// Returns an error (rather than `false`) when the filling is not a
/// bijection onto `[n]` or does not fit the shape.
pub fn is_valid_syct(shape: &Composition, rows: &[Vec<usize>]) -> Result<bool> {
    check_filling(shape.parts(), rows)?;
    // rows increase left to right
    if rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
        return Ok(false);
    }
    // first column increases bottom to top
    if rows.windows(2).any(|w| w[0][0] >= w[1][0]) {
        return Ok(false);
    }
    // triple condition, columns 1-indexed as (row, k) and (row, k+1)
    for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            for k in 0..rows[j].len() {
                let Some(&upper_right) = rows[i].get(k + 1) else {
                    continue;
                };
                if rows[j][k] < upper_right {
                    match rows[j].get(k + 1) {
                        Some(&v) if v < upper_right => {}
                        _ => return Ok(false),
                    }
                }
            }
        }
    }
    Ok(true)
}

fn column_of(rows: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut col = vec![0; n + 1];
    for row in rows {
        for (c, &v) in row.iter().enumerate() {
            col[v] = c;
        }
    }
    col
}

/// `{ i : i+1 lies in the same column as i or strictly left of it }`
fn column_descents(rows: &[Vec<usize>], n: usize) -> Vec<usize> {
    let col = column_of(rows, n);
    (1..n).filter(|&i| col[i + 1] <= col[i]).collect()
}

impl Syct {
    pub fn new(shape: Composition, rows: Vec<Vec<usize>>) -> Result<Self> {
        if !is_valid_syct(&shape, &rows)? {
            return Err(Error::MalformedFilling(format!(
                "{rows:?} violates the SYCT conditions"
            )));
        }
        Ok(Syct { shape, rows })
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.degree()
    }

    pub fn descent_set(&self) -> Vec<usize> {
        column_descents(&self.rows, self.size())
    }

    pub fn descent_composition(&self) -> Composition {
        Composition::from_mask(
            self.descent_set().iter().fold(0, |m, &i| m | 1 << (i - 1)),
            self.size(),
        )
    }

    /// Sorts each column increasingly from the bottom and bottom-justifies
    /// the columns, giving an SYT of the underlying partition.
    pub fn rho_bar(&self) -> Syt {
        let width = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut columns: Vec<Vec<usize>> = vec![Vec::new(); width];
        for row in &self.rows {
            for (c, &v) in row.iter().enumerate() {
                columns[c].push(v);
            }
        }
        for column in &mut columns {
            column.sort_unstable();
        }
        let height = columns.first().map_or(0, Vec::len);
        let rows = (0..height)
            .map(|r| {
                columns
                    .iter()
                    .filter_map(|col| col.get(r).copied())
                    .collect()
            })
            .collect();
        Syt {
            shape: self.shape.underlying_partition(),
            rows,
        }
    }
}

impl Syt {
    pub fn new(shape: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        check_filling(shape.parts(), &rows)?;
        let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(above, below)| below < above));
        if !(rows_ok && cols_ok) {
            return Err(Error::MalformedFilling(format!(
                "{rows:?} is not a standard Young tableau"
            )));
        }
        Ok(Syt { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.degree()
    }

    /// `{ i : i+1 lies weakly left of i }`, equivalently strictly above.
    pub fn descent_set(&self) -> Vec<usize> {
        column_descents(&self.rows, self.size())
    }

    pub fn descent_composition(&self) -> Composition {
        Composition::from_mask(
            self.descent_set().iter().fold(0, |m, &i| m | 1 << (i - 1)),
            self.size(),
        )
    }
}

fn reading_word(rows: &[Vec<usize>]) -> Vec<usize> {
    rows.iter().flatten().copied().collect()
}

/// All SYCTs of shape `alpha`, sorted by reading word.
pub fn enumerate_syct(alpha: &Composition) -> Vec<Syct> {
    let shape = alpha.parts();
    let n = alpha.degree();
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();

    fn place(
        v: usize,
        n: usize,
        shape: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if v > n {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            let c = rows[r].len();
            if c == shape[r] {
                continue;
            }
            if c == 0 {
                // first column increases upward: everything below started, nothing above
                if rows[..r].iter().any(Vec::is_empty)
                    || rows[r + 1..].iter().any(|row| !row.is_empty())
                {
                    continue;
                }
            } else {
                // v becomes τ(r, c+1); any higher row j with τ(j, c) < v
                // must already hold τ(j, c+1)
                let blocked = (r + 1..shape.len())
                    .any(|j| rows[j].len() >= c && (shape[j] <= c || rows[j].len() <= c));
                if blocked {
                    continue;
                }
            }
            rows[r].push(v);
            place(v + 1, n, shape, rows, out);
            rows[r].pop();
        }
    }

    let mut raw = Vec::new();
    place(1, n, shape, &mut rows, &mut raw);
    raw.sort_by_key(|r| reading_word(r));
    for r in raw {
        out.push(Syct {
            shape: alpha.clone(),
            rows: r,
        });
    }
    out
}

/// All SYTs of shape `lambda`, sorted by reading word.
pub fn enumerate_syt(lambda: &Partition) -> Vec<Syt> {
    let shape = lambda.parts();
    let n = lambda.degree();

    fn place(
        v: usize,
        n: usize,
        shape: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if v > n {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            let c = rows[r].len();
            if c < shape[r] && (r == 0 || rows[r - 1].len() > c) {
                rows[r].push(v);
                place(v + 1, n, shape, rows, out);
                rows[r].pop();
            }
        }
    }

    let mut rows = vec![Vec::new(); shape.len()];
    let mut raw = Vec::new();
    place(1, n, shape, &mut rows, &mut raw);
    raw.sort_by_key(|r| reading_word(r));
    raw.into_iter()
        .map(|rows| Syt {
            shape: lambda.clone(),
            rows,
        })
        .collect()
}

/// Number of semistandard fillings of `lambda` with content `mu`: rows weakly
/// increase left to right, columns strictly increase bottom to top.
pub fn kostka_counts(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.degree() != mu.degree() {
        return Err(Error::DegreeMismatch {
            left: lambda.degree(),
            right: mu.degree(),
        });
    }
    let shape = lambda.parts();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();

    fn count(
        idx: usize,
        cells: &[(usize, usize)],
        filling: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<usize>,
    ) -> u64 {
        let Some(&(r, c)) = cells.get(idx) else {
            return 1;
        };
        let low = match (c.checked_sub(1), r.checked_sub(1)) {
            (Some(left), Some(below)) => filling[r][left].max(filling[below][c] + 1),
            (Some(left), None) => filling[r][left],
            (None, Some(below)) => filling[below][c] + 1,
            (None, None) => 0,
        };
        let mut total = 0;
        for v in low..remaining.len() {
            if remaining[v] == 0 {
                continue;
            }
            remaining[v] -= 1;
            filling[r].push(v);
            total += count(idx + 1, cells, filling, remaining);
            filling[r].pop();
            remaining[v] += 1;
        }
        total
    }

    let mut filling = vec![Vec::new(); shape.len()];
    let mut remaining = mu.parts().to_vec();
    Ok(count(0, &cells, &mut filling, &mut remaining))
}

/// `d̂_{βα}`: SYCTs of shape `β` with descent composition `α`, over all
/// compositions of `n` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DhatMatrix {
    n: usize,
    indices: Vec<Composition>,
    entries: Vec<Vec<u64>>,
}

impl DhatMatrix {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[Composition] {
        &self.indices
    }

    /// Rows are shapes, columns descent compositions.
    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn get(&self, shape: &Composition, descent: &Composition) -> u64 {
        assert_eq!(shape.degree(), self.n);
        assert_eq!(descent.degree(), self.n);
        self.entries[shape.set_mask() as usize][descent.set_mask() as usize]
    }
}

fn compute_dhat(n: usize) -> DhatMatrix {
    let indices = compositions_of(n);
    let size = indices.len();
    let mut entries = vec![vec![0u64; size]; size];
    for (row, shape) in indices.iter().enumerate() {
        for tableau in enumerate_syct(shape) {
            entries[row][tableau.descent_composition().set_mask() as usize] += 1;
        }
    }
    DhatMatrix {
        n,
        indices,
        entries,
    }
}

/// The `d̂` counting matrix of degree `n`, memoized.
pub fn dhat_matrix(n: usize) -> Arc<DhatMatrix> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<DhatMatrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&n) {
        return Arc::clone(m);
    }
    let m = Arc::new(compute_dhat(n));
    cache.lock().unwrap().entry(n).or_insert(m).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;
    use itertools::Itertools;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn example_tableau() -> Syct {
        Syct::new(
            c(&[2, 4, 1, 2]),
            vec![vec![1, 4], vec![2, 3, 6, 9], vec![5], vec![7, 8]],
        )
        .unwrap()
    }

    /// Every bijective filling of the shape, filtered by the validity predicate.
    fn brute_force_syct(alpha: &Composition) -> Vec<Vec<Vec<usize>>> {
        let n = alpha.degree();
        (1..=n)
            .permutations(n)
            .filter_map(|word| {
                let mut it = word.into_iter();
                let rows: Vec<Vec<usize>> = alpha
                    .parts()
                    .iter()
                    .map(|&l| it.by_ref().take(l).collect())
                    .collect();
                is_valid_syct(alpha, &rows).unwrap().then_some(rows)
            })
            .collect()
    }

    #[test]
    fn validity_predicate() {
        let t = example_tableau();
        assert_eq!(t.descent_set(), vec![1, 3, 4, 6]);
        assert_eq!(t.descent_composition(), c(&[1, 2, 1, 2, 3]));
        assert!(!is_valid_syct(&c(&[2, 1]), &[vec![1, 3], vec![2]]).unwrap());
        assert!(is_valid_syct(&c(&[1]), &[vec![1]]).unwrap());
        assert!(matches!(
            is_valid_syct(&c(&[2, 1]), &[vec![1, 1], vec![2]]),
            Err(Error::MalformedFilling(_))
        ));
        assert!(matches!(
            is_valid_syct(&c(&[2, 1]), &[vec![1, 2, 3]]),
            Err(Error::MalformedFilling(_))
        ));
    }

    #[test]
    fn small_enumerations() {
        let one_three = enumerate_syct(&c(&[1, 3]));
        assert_eq!(one_three.len(), 1);
        assert_eq!(one_three[0].rows(), &[vec![1], vec![2, 3, 4]]);

        let three_one = enumerate_syct(&c(&[3, 1]));
        let rows: Vec<_> = three_one.iter().map(|t| t.rows().to_vec()).collect();
        assert_eq!(
            rows,
            vec![vec![vec![1, 2, 3], vec![4]], vec![vec![1, 2, 4], vec![3]]]
        );

        let two_two = enumerate_syct(&c(&[2, 2]));
        let mut descents: Vec<_> = two_two.iter().map(Syct::descent_composition).collect();
        descents.sort();
        assert_eq!(descents, vec![c(&[2, 2]), c(&[1, 2, 1])]);
    }

    #[test]
    fn backtracking_matches_brute_force() {
        for n in 1..=6 {
            for alpha in compositions_of(n) {
                let mut brute = brute_force_syct(&alpha);
                brute.sort_by_key(|r| reading_word(r));
                let fast: Vec<_> = enumerate_syct(&alpha).into_iter().map(|t| t.rows).collect();
                assert_eq!(fast, brute, "shape {alpha}");
            }
        }
    }

    #[test]
    fn descent_edge_cases() {
        let row = enumerate_syct(&c(&[4]));
        assert_eq!(row.len(), 1);
        assert_eq!(row[0].descent_composition(), c(&[4]));
        let column = enumerate_syct(&c(&[1, 1, 1]));
        assert_eq!(column.len(), 1);
        assert_eq!(column[0].descent_composition(), c(&[1, 1, 1]));
    }

    #[test]
    fn rho_bar_examples() {
        let image = example_tableau().rho_bar();
        assert_eq!(image.shape(), &p(&[4, 2, 2, 1]));
        assert_eq!(
            image.rows(),
            &[vec![1, 3, 6, 9], vec![2, 4], vec![5, 8], vec![7]]
        );
        assert!(Syt::new(image.shape().clone(), image.rows().to_vec()).is_ok());
        let row = &enumerate_syct(&c(&[5]))[0];
        assert_eq!(row.rho_bar().rows(), row.rows());
    }

    #[test]
    fn syt_counts() {
        assert_eq!(enumerate_syt(&p(&[2, 1])).len(), 2);
        assert_eq!(enumerate_syt(&p(&[5])).len(), 1);
        let total: usize = partitions_of(4)
            .iter()
            .map(|l| enumerate_syt(l).len())
            .sum();
        assert_eq!(total, 10);
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka_counts(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(kostka_counts(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        for mu in partitions_of(5) {
            assert_eq!(kostka_counts(&p(&[5]), &mu).unwrap(), 1);
        }
        assert_eq!(
            kostka_counts(&p(&[2]), &p(&[1])),
            Err(Error::DegreeMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn dhat_examples() {
        let d3 = dhat_matrix(3);
        for (i, row) in d3.entries().iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(v, u64::from(i == j));
            }
        }
        assert_eq!(dhat_matrix(4).get(&c(&[3, 1]), &c(&[2, 2])), 1);
        for n in 1..=6 {
            let d = dhat_matrix(n);
            for beta in compositions_of(n) {
                assert_eq!(d.get(&beta, &beta), 1);
                let row_sum: u64 = d.entries()[beta.set_mask() as usize].iter().sum();
                assert_eq!(row_sum as usize, enumerate_syct(&beta).len());
            }
        }
    }
}
