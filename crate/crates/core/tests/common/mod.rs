//! Brute-force oracles shared by the integration tests. None of these call
//! into the library's character or tableau code.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// All permutations of `[1, n]` in one-line notation.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v + 1);
                extend(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Cycle lengths of a permutation, sorted decreasingly.
pub fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i] - 1;
            len += 1;
        }
        if len > 0 {
            lengths.push(len);
        }
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

/// Conjugacy classes of `S_n` by explicit enumeration: cycle type to class size.
pub fn conjugacy_classes(n: usize) -> BTreeMap<Vec<usize>, usize> {
    let mut classes = BTreeMap::new();
    for p in permutations(n) {
        *classes.entry(cycle_type(&p)).or_insert(0) += 1;
    }
    classes
}

/// A permutation with the given cycle type, cycles on consecutive integers.
pub fn representative(mu: &[usize]) -> Vec<usize> {
    let n: usize = mu.iter().sum();
    let mut perm = vec![0; n];
    let mut start = 0;
    for &len in mu {
        for k in 0..len {
            perm[start + k] = start + (k + 1) % len + 1;
        }
        start += len;
    }
    perm
}

/// Murnaghan–Nakayama rule on beta-sets.
pub fn mn_character(lambda: &[usize], mu: &[usize]) -> i64 {
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &l)| l + len - 1 - i)
        .collect();
    mn_beta(&beta, mu)
}

fn mn_beta(beta: &[usize], mu: &[usize]) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let crossed = beta.iter().filter(|&&c| b - k < c && c < b).count() as u32;
        let mut moved = beta.to_vec();
        moved[i] = b - k;
        total += (-1i64).pow(crossed) * mn_beta(&moved, rest);
    }
    total
}

/// Number of standard Young tableaux of shape `lambda`.
pub fn hook_length_count(lambda: &[usize]) -> u128 {
    let n: usize = lambda.iter().sum();
    let mut conjugate = vec![0usize; lambda.first().copied().unwrap_or(0)];
    for &row in lambda {
        for c in conjugate.iter_mut().take(row) {
            *c += 1;
        }
    }
    let mut hooks: u128 = 1;
    for (i, &row) in lambda.iter().enumerate() {
        for (j, &col) in conjugate.iter().enumerate().take(row) {
            hooks *= (row - j + col - i - 1) as u128;
        }
    }
    (1..=n as u128).product::<u128>() / hooks
}

/// Semistandard tableaux of shape `lambda` and content `mu`, by exhaustive filling.
pub fn kostka(lambda: &[usize], mu: &[usize]) -> u64 {
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(i, &l)| (0..l).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<usize>> = lambda.iter().map(|&l| vec![0; l]).collect();
    let mut remaining = mu.to_vec();
    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<usize>,
    ) -> u64 {
        let Some(&(i, j)) = cells.get(k) else {
            return 1;
        };
        let mut count = 0;
        for v in 0..remaining.len() {
            if remaining[v] == 0 {
                continue;
            }
            if j > 0 && grid[i][j - 1] > v {
                continue;
            }
            if i > 0 && grid[i - 1][j] >= v {
                continue;
            }
            remaining[v] -= 1;
            grid[i][j] = v;
            count += fill(k + 1, cells, grid, remaining);
            remaining[v] += 1;
        }
        count
    }
    fill(0, &cells, &mut grid, &mut remaining)
}

/// The permutation character on cosets of `S_α`: the number of ordered set
/// partitions with block sizes `alpha` that `perm` fixes blockwise.
pub fn coset_fixing_count(alpha: &[usize], perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut block = vec![usize::MAX; n];
    let mut sizes = vec![0usize; alpha.len()];
    fn assign(
        i: usize,
        perm: &[usize],
        alpha: &[usize],
        block: &mut Vec<usize>,
        sizes: &mut Vec<usize>,
    ) -> u64 {
        if i == perm.len() {
            return u64::from(sizes.as_slice() == alpha);
        }
        let mut count = 0;
        for b in 0..alpha.len() {
            if sizes[b] == alpha[b] {
                continue;
            }
            block[i] = b;
            sizes[b] += 1;
            let consistent = (0..=i).all(|j| {
                let image = perm[j] - 1;
                image > i || block[image] == block[j]
            });
            if consistent {
                count += assign(i + 1, perm, alpha, block, sizes);
            }
            sizes[b] -= 1;
        }
        block[i] = usize::MAX;
        count
    }
    assign(0, perm, alpha, &mut block, &mut sizes)
}
