//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's linear algebra or lattice code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use bideal::arrangement::{Arrangement, Family};
use bideal::linalg::Rational;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::Rng;

/// Rank of a list of vectors by plain Gaussian elimination.
pub fn rank_of(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &m[rank][c];
            let pivot = m[rank].clone();
            for (x, y) in m[r].iter_mut().zip(&pivot).skip(c) {
                *x -= &f * y;
            }
        }
        rank += 1;
    }
    rank
}

pub fn vectors(a: &Arrangement) -> Vec<Vec<Rational>> {
    a.forms().iter().map(|f| f.coeffs().to_vec()).collect()
}

fn subset_rank(vs: &[Vec<Rational>], mask: u32) -> usize {
    let rows: Vec<Vec<Rational>> = (0..vs.len()).filter(|i| mask >> i & 1 == 1).map(|i| vs[i].clone()).collect();
    rank_of(&rows)
}

/// Every flat as (one-based closed index set, codimension), found by
/// closing each of the `2^p` subsets.
pub fn brute_flats(a: &Arrangement) -> BTreeSet<(Vec<usize>, usize)> {
    let vs = vectors(a);
    let p = vs.len();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << p) {
        let r = subset_rank(&vs, mask);
        let closed: Vec<usize> =
            (0..p).filter(|&i| mask >> i & 1 == 1 || subset_rank(&vs, mask | 1 << i) == r).map(|i| i + 1).collect();
        out.insert((closed, r));
    }
    out
}

/// `chi(t) = sum_S (-1)^{|S|} t^{n - rank S}`, coefficients by ascending power.
pub fn whitney_char_poly(a: &Arrangement) -> Vec<i128> {
    let vs = vectors(a);
    let n = a.dim();
    let mut coeffs = vec![0i128; n + 1];
    for mask in 0u32..(1 << vs.len()) {
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        coeffs[n - subset_rank(&vs, mask)] += sign;
    }
    while coeffs.len() > 1 && coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    coeffs
}

/// Finest partition of the hyperplanes into blocks such that every
/// rank-additive bipartition respects it. One-based, ordered by minimum.
pub fn bipartition_blocks(a: &Arrangement) -> Vec<Vec<usize>> {
    let vs = vectors(a);
    let p = vs.len();
    let full = (1u32 << p) - 1;
    let total = subset_rank(&vs, full);
    let separators: Vec<u32> = (1..full)
        .filter(|&s| subset_rank(&vs, s) + subset_rank(&vs, full & !s) == total)
        .collect();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; p];
    for i in 0..p {
        if seen[i] {
            continue;
        }
        let block: Vec<usize> = (0..p)
            .filter(|&j| separators.iter().all(|&s| (s >> i & 1) == (s >> j & 1)))
            .collect();
        for &j in &block {
            seen[j] = true;
        }
        blocks.push(block.into_iter().map(|j| j + 1).collect());
    }
    blocks
}

/// A random arrangement with small integer coefficients in dimension
/// `1..=max_dim` with `1..=max_len` hyperplanes.
pub fn random_arrangement(rng: &mut StdRng, max_dim: usize, max_len: usize) -> Arrangement {
    loop {
        let n = rng.gen_range(1..=max_dim);
        let p = rng.gen_range(1..=max_len);
        let rows: Vec<Vec<Rational>> = (0..p)
            .map(|_| (0..n).map(|_| Rational::from_integer(rng.gen_range(-2i64..=2).into())).collect())
            .collect();
        if let Ok(a) = Arrangement::new(n, rows) {
            return a;
        }
    }
}

/// boolean(n) n <= 4, generic2d(p) p <= 6, braid(n) n <= 5.
pub fn corpus_families() -> Vec<Family> {
    let mut out: Vec<Family> = (1..=4).map(Family::Boolean).collect();
    out.extend((1..=6).map(Family::Generic2d));
    out.extend((2..=5).map(Family::Braid));
    out
}

/// The corpus together with the localization at every flat with nonempty
/// index set, tagged with a readable name.
pub fn corpus_with_localizations() -> Vec<(String, Arrangement)> {
    let mut out = Vec::new();
    for family in corpus_families() {
        let a = Arrangement::family(family).unwrap();
        for (indices, _) in brute_flats(&a) {
            if indices.is_empty() {
                continue;
            }
            let local = a.localize(&indices).unwrap();
            out.push((format!("{family} at {indices:?}"), local));
        }
    }
    out
}

/// Multiset of (support, constant) pairs.
pub fn factor_multiset(pairs: impl IntoIterator<Item = (Vec<usize>, i64)>) -> BTreeMap<(Vec<usize>, i64), usize> {
    let mut m = BTreeMap::new();
    for (mut s, c) in pairs {
        s.sort_unstable();
        *m.entry((s, c)).or_insert(0) += 1;
    }
    m
}
