use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{format_rational, Rational};
use crate::error::{Error, Result};

/// Exponent vector of a monomial, ordered by total degree and then
/// lexicographically (so `x1 > x2 > ... > 1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in a fixed number of variables with rational
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    /// The variable `x_{i+1}` (zero based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, i), Rational::one());
        p
    }

    /// `sum_j coeffs[j] * x_j`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, i), c.clone());
        }
        p
    }

    /// Builds from `(coefficient, exponents)` pairs; like terms are merged.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Rational, Vec<u32>)>) -> Self {
        let mut p = Self::zero(nvars);
        for (c, e) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length mismatch");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    /// The constant value, when the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one(self.nvars)).cloned(),
            _ => None,
        }
    }

    /// `Some(d)` when every term has degree `d`; `None` for zero or mixed
    /// degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.total_degree()?;
        self.terms.keys().all(|m| m.degree() == d).then_some(d)
    }

    /// Coefficient of the degree one monomial `x_{i+1}`.
    pub fn linear_coefficient(&self, i: usize) -> Rational {
        self.terms.get(&Monomial::var(self.nvars, i)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    /// Partial derivative in `x_{i+1}`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.add_term(Monomial(exps), c * Rational::from_integer(e.into()));
        }
        out
    }

    /// Value at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter().zip(point).fold(c.clone(), |acc, (&e, x)| {
                    (0..e).fold(acc, |a, _| a * x)
                })
            })
            .sum()
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        assert_eq!(self.nvars, divisor.nvars);
        let (lead_m, lead_c) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lead_m)?;
            let qc = c / lead_c;
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Renders with the supplied variable names, highest term first.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, names }
    }
}

struct PolyDisplay<'a> {
    poly: &'a MultiPoly,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.degree() == 0 {
                factors.push(format_rational(&abs));
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.names[i].clone()),
                    _ => factors.push(format!("{}^{}", self.names[i], e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

/// Default variable names `x1, ..., xn`.
pub(crate) fn coordinate_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = coordinate_names(self.nvars);
        let shown = self.display_with(&names).to_string();
        f.write_str(&shown)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination. Every intermediate division is exact in the polynomial ring.
pub fn det_poly(matrix: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    let n = matrix.len();
    if let Some(row) = matrix.iter().find(|r| r.len() != n) {
        return Err(Error::MalformedInput(format!(
            "determinant needs a square matrix, got a row of length {} in a {n}-row matrix",
            row.len()
        )));
    }
    let nvars = matrix.iter().flatten().map(MultiPoly::nvars).next().unwrap_or(0);
    if matrix.iter().flatten().any(|p| p.nvars() != nvars) {
        return Err(Error::MalformedInput("matrix entries disagree on variable count".into()));
    }
    if n == 0 {
        return Ok(MultiPoly::one(nvars));
    }
    let mut m = matrix.to_vec();
    let mut negate = false;
    let mut prev = MultiPoly::one(nvars);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(MultiPoly::zero(nvars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = cross.div_exact(&prev).expect("Bareiss step divides exactly");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    // Laplace expansion along the first row; independent of Bareiss.
    fn cofactor_det(m: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
        let n = m.len();
        if n == 0 {
            return MultiPoly::one(nvars);
        }
        let mut total = MultiPoly::zero(nvars);
        for col in 0..n {
            let minor: Vec<Vec<MultiPoly>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, p)| p.clone()).collect())
                .collect();
            let term = &m[0][col] * &cofactor_det(&minor, nvars);
            total = if col % 2 == 0 { &total + &term } else { &total - &term };
        }
        total
    }

    #[test]
    fn diagonal_determinant() {
        let z = MultiPoly::zero(2);
        let m = vec![vec![x(2, 0), z.clone()], vec![z, x(2, 1)]];
        assert_eq!(det_poly(&m).unwrap(), &x(2, 0) * &x(2, 1));
    }

    #[test]
    fn zero_row_gives_zero() {
        let z = MultiPoly::zero(2);
        let m = vec![vec![x(2, 0), x(2, 1)], vec![z.clone(), z]];
        assert!(det_poly(&m).unwrap().is_zero());
    }

    #[test]
    fn non_square_is_malformed() {
        let m = vec![vec![x(2, 0), x(2, 1)]];
        assert!(det_poly(&m).unwrap_err().is_malformed());
    }

    #[test]
    fn vandermonde_three() {
        let n = 3;
        let m: Vec<Vec<MultiPoly>> = (0..n).map(|i| (0..3).map(|k| x(n, i).pow(k)).collect()).collect();
        let expected = &(&(&x(n, 1) - &x(n, 0)) * &(&x(n, 2) - &x(n, 0))) * &(&x(n, 2) - &x(n, 1));
        assert_eq!(cofactor_det(&m, n), expected);
        assert_eq!(det_poly(&m).unwrap(), expected);
    }

    #[test]
    fn pivot_swap_tracks_sign() {
        let n = 2;
        let z = MultiPoly::zero(n);
        let m = vec![vec![z.clone(), x(n, 0)], vec![x(n, 1), z]];
        assert_eq!(det_poly(&m).unwrap(), -&(&x(n, 0) * &x(n, 1)));
    }

    #[test]
    fn exact_division() {
        let n = 2;
        let a = &x(n, 0) - &x(n, 1);
        let b = &(&x(n, 0) + &x(n, 1)) + &MultiPoly::constant(n, q(3));
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!(prod.div_exact(&x(n, 0)).is_none());
        assert!(x(n, 0).div_exact(&MultiPoly::zero(n)).is_none());
    }

    #[test]
    fn display_orders_by_degree_then_lex() {
        let n = 2;
        let p = &(&x(n, 1).pow(2) - &x(n, 0).scale(&q(2))) + &MultiPoly::constant(n, Rational::new(1.into(), 2.into()));
        assert_eq!(p.to_string(), "x2^2 - 2*x1 + 1/2");
        let mixed = &(&x(n, 0) * &x(n, 1)) + &x(n, 0).pow(2);
        assert_eq!(mixed.to_string(), "x1^2 + x1*x2");
        assert_eq!(MultiPoly::zero(2).to_string(), "0");
        assert_eq!((-&x(n, 0)).to_string(), "-x1");
    }

    #[test]
    fn homogeneity_and_derivative() {
        let n = 2;
        let p = &x(n, 0).pow(2) + &(&x(n, 0) * &x(n, 1));
        assert_eq!(p.homogeneous_degree(), Some(2));
        assert_eq!(p.derivative(0), &x(n, 0).scale(&q(2)) + &x(n, 1));
        assert_eq!((&p + &MultiPoly::one(n)).homogeneous_degree(), None);
    }

    fn small_poly(nvars: usize) -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((-3i64..4, prop::collection::vec(0u32..3, nvars)), 0..4).prop_map(move |terms| {
            MultiPoly::from_terms(nvars, terms.into_iter().map(|(c, e)| (Rational::from_integer(c.into()), e)))
        })
    }

    fn poly_matrix() -> impl Strategy<Value = Vec<Vec<MultiPoly>>> {
        (1usize..5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(small_poly(2), n), n))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn bareiss_matches_cofactor_expansion(m in poly_matrix()) {
            prop_assert_eq!(det_poly(&m).unwrap(), cofactor_det(&m, 2));
        }

        #[test]
        fn ring_axioms(a in small_poly(3), b in small_poly(3), c in small_poly(3)) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn product_divides_back(a in small_poly(3), b in small_poly(3)) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }
    }
}
