use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// A linear subspace of `Q^n`, held as the reduced row echelon form of any
/// spanning set. Zero rows are dropped, so two row spaces are equal exactly
/// when their matrices agree entrywise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowSpace {
    ambient_dim: usize,
    rows: Vec<Vec<Rational>>,
}

impl RowSpace {
    pub fn zero(ambient_dim: usize) -> Self {
        RowSpace { ambient_dim, rows: Vec::new() }
    }

    /// Canonical row space spanned by `rows`. Every row must have length
    /// `ambient_dim`.
    pub fn span(ambient_dim: usize, rows: &[Vec<Rational>]) -> Result<Self> {
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != ambient_dim) {
            return Err(Error::MalformedInput(format!(
                "row {i} has length {} but the ambient dimension is {ambient_dim}",
                row.len()
            )));
        }
        let mut m = rows.to_vec();
        reduce(&mut m, ambient_dim);
        Ok(RowSpace { ambient_dim, rows: m })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Column index of the leading one of each row.
    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("rref rows are nonzero"))
            .collect()
    }

    /// Coefficients expressing `v` in the rref rows, or `None` when `v` lies
    /// outside the space.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        let coords: Vec<Rational> = self.pivots().into_iter().map(|p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(row) {
                *r -= c * x;
            }
        }
        residual.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    /// True when `self` is a subspace of `other`.
    pub fn is_subspace_of(&self, other: &RowSpace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Sum of subspaces.
    pub fn join(&self, other: &RowSpace) -> RowSpace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut m: Vec<Vec<Rational>> = self.rows.iter().chain(&other.rows).cloned().collect();
        reduce(&mut m, self.ambient_dim);
        RowSpace { ambient_dim: self.ambient_dim, rows: m }
    }

    /// The space spanned by `self` and one extra vector.
    pub fn with_vector(&self, v: &[Rational]) -> RowSpace {
        if self.contains(v) {
            return self.clone();
        }
        let mut m = self.rows.clone();
        m.push(v.to_vec());
        reduce(&mut m, self.ambient_dim);
        RowSpace { ambient_dim: self.ambient_dim, rows: m }
    }
}

/// Reduced row echelon form with zero rows dropped, plus the rank.
pub fn rref(ambient_dim: usize, matrix: &[Vec<Rational>]) -> Result<(RowSpace, usize)> {
    let space = RowSpace::span(ambient_dim, matrix)?;
    let rank = space.rank();
    Ok((space, rank))
}

/// Rank of a list of vectors of equal length.
pub fn rank(ambient_dim: usize, vectors: &[Vec<Rational>]) -> usize {
    let mut m = vectors.to_vec();
    reduce(&mut m, ambient_dim);
    m.len()
}

/// Coefficients `c` with `sum_k c[k] * basis[k] = v`, for linearly
/// independent `basis`. `None` when `v` is not in their span.
pub fn solve_combination(basis: &[Vec<Rational>], v: &[Rational]) -> Option<Vec<Rational>> {
    let r = basis.len();
    let mut m: Vec<Vec<Rational>> = (0..v.len())
        .map(|j| basis.iter().map(|b| b[j].clone()).chain(std::iter::once(v[j].clone())).collect())
        .collect();
    reduce(&mut m, r + 1);
    let mut coeffs = vec![Rational::zero(); r];
    for row in &m {
        let pivot = row.iter().position(|x| !x.is_zero()).expect("rref rows are nonzero");
        if pivot == r {
            return None;
        }
        coeffs[pivot] = row[r].clone();
    }
    Some(coeffs)
}

// Gauss-Jordan in place; leaves exactly the nonzero rref rows.
fn reduce(m: &mut Vec<Vec<Rational>>, cols: usize) {
    let mut lead = 0;
    for col in 0..cols {
        if lead == m.len() {
            break;
        }
        let Some(pivot) = (lead..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(lead, pivot);
        let inv = Rational::one() / &m[lead][col];
        if !inv.is_one() {
            for x in m[lead].iter_mut().skip(col) {
                *x *= &inv;
            }
        }
        let pivot_row = m[lead].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == lead || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &factor * p;
            }
        }
        lead += 1;
    }
    m.truncate(lead);
}
