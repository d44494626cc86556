use std::fmt;

use num_traits::{One, Zero};

use crate::arrangement::{Arrangement, Family};
use crate::error::{Error, Result};
use crate::linalg::{det_poly, format_rational, MultiPoly, Rational};

/// A polynomial vector field `sum_j a_j d/dx_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    coeffs: Vec<MultiPoly>,
}

impl Derivation {
    pub fn new(coeffs: Vec<MultiPoly>) -> Result<Self> {
        let n = coeffs.len();
        if coeffs.iter().any(|a| a.nvars() != n) {
            return Err(Error::MalformedInput(format!(
                "a derivation on {n} coordinates needs coefficients in {n} variables"
            )));
        }
        Ok(Derivation { coeffs })
    }

    /// `E = sum_j x_j d/dx_j`.
    pub fn euler(n: usize) -> Self {
        Derivation { coeffs: (0..n).map(|j| MultiPoly::var(n, j)).collect() }
    }

    /// `theta_k = sum_j x_j^k d/dx_j`.
    pub fn power_sum(n: usize, k: u32) -> Self {
        Derivation { coeffs: (0..n).map(|j| MultiPoly::var(n, j).pow(k)).collect() }
    }

    /// `poly * d/dx_j`.
    pub fn single(n: usize, j: usize, poly: MultiPoly) -> Self {
        let mut coeffs = vec![MultiPoly::zero(n); n];
        coeffs[j] = poly;
        Derivation { coeffs }
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// Common degree of the nonzero coefficients, if there is one.
    pub fn degree(&self) -> Option<u32> {
        let mut degree = None;
        for a in self.coeffs.iter().filter(|a| !a.is_zero()) {
            let d = a.homogeneous_degree()?;
            if degree.is_some_and(|e| e != d) {
                return None;
            }
            degree = Some(d);
        }
        degree
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree().is_some()
    }

    /// The derivation applied to a polynomial.
    pub fn apply(&self, f: &MultiPoly) -> MultiPoly {
        self.coeffs
            .iter()
            .enumerate()
            .fold(MultiPoly::zero(self.dim()), |acc, (j, a)| &acc + &(a * &f.derivative(j)))
    }

    /// Applied to the linear form with the given coefficients.
    fn apply_linear(&self, form: &[Rational]) -> MultiPoly {
        self.coeffs
            .iter()
            .zip(form)
            .filter(|(_, c)| !c.is_zero())
            .fold(MultiPoly::zero(self.dim()), |acc, (a, c)| &acc + &a.scale(c))
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (negative, body) = signed_factor(a);
            write_joined(f, &mut first, negative, &format!("{body}dx{}", j + 1))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `(is_negative, text)` for `poly` used as a multiplicative coefficient:
/// empty for 1, a bare monomial, or a parenthesized sum, followed by `*`.
fn signed_factor(poly: &MultiPoly) -> (bool, String) {
    if let Some(c) = poly.as_constant() {
        let negative = c < Rational::zero();
        let abs = if negative { -c } else { c };
        return if abs.is_one() { (negative, String::new()) } else { (negative, format!("{}*", format_rational(&abs))) };
    }
    if poly.num_terms() == 1 {
        let text = poly.to_string();
        return match text.strip_prefix('-') {
            Some(rest) => (true, format!("{rest}*")),
            None => (false, format!("{text}*")),
        };
    }
    (false, format!("({poly})*"))
}

fn write_joined(f: &mut fmt::Formatter<'_>, first: &mut bool, negative: bool, body: &str) -> fmt::Result {
    match (*first, negative) {
        (true, true) => write!(f, "-{body}")?,
        (true, false) => f.write_str(body)?,
        (false, true) => write!(f, " - {body}")?,
        (false, false) => write!(f, " + {body}")?,
    }
    *first = false;
    Ok(())
}

/// `delta(l_j) = b_j l_j` failed: the one-based form index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NonLogarithmic {
    pub form: usize,
}

/// Quotients `b_j = delta(l_j) / l_j` for every form, or the first form
/// whose ideal is not preserved.
pub fn check_logarithmic(arrangement: &Arrangement, d: &Derivation) -> Result<Vec<MultiPoly>, NonLogarithmic> {
    assert_eq!(d.dim(), arrangement.dim(), "derivation and arrangement disagree on dimension");
    arrangement
        .forms()
        .iter()
        .enumerate()
        .map(|(j, form)| {
            d.apply_linear(form.coeffs())
                .div_exact(&form.to_poly())
                .ok_or(NonLogarithmic { form: j + 1 })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaitoOutcome {
    pub accepted: bool,
    /// `c` with `det = c * Q`; zero when rejected.
    pub scalar: Rational,
    /// Degrees of the basis elements, when all are homogeneous.
    pub degrees: Option<Vec<u32>>,
}

/// Saito's criterion: `n` logarithmic derivations form a basis of the
/// module of logarithmic derivations iff the determinant of their
/// coefficient matrix is a nonzero constant times the defining polynomial.
pub fn saito_check(arrangement: &Arrangement, basis: &[Derivation]) -> Result<SaitoOutcome> {
    let n = arrangement.dim();
    if basis.len() != n {
        return Err(Error::MalformedInput(format!("Saito's criterion needs {n} derivations, got {}", basis.len())));
    }
    if let Some(d) = basis.iter().find(|d| d.dim() != n) {
        return Err(Error::MalformedInput(format!("derivation on {} coordinates in dimension {n}", d.dim())));
    }
    for (k, d) in basis.iter().enumerate() {
        check_logarithmic(arrangement, d)
            .map_err(|e| Error::NotLogarithmic { derivation: k + 1, form: e.form })?;
    }
    let matrix: Vec<Vec<MultiPoly>> = basis.iter().map(|d| d.coeffs.clone()).collect();
    let det = det_poly(&matrix)?;
    let q = arrangement.defining_polynomial();
    let scalar = det.div_exact(&q).and_then(|c| c.as_constant()).unwrap_or_else(Rational::zero);
    let degrees = basis.iter().map(Derivation::degree).collect();
    Ok(SaitoOutcome { accepted: !scalar.is_zero(), scalar, degrees })
}

/// `delta~ = delta - sum_j b_j s_j` where `delta(l_j) = b_j l_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TildeOperator {
    pub base: Derivation,
    pub s_coeffs: Vec<MultiPoly>,
}

impl fmt::Display for TildeOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(bool, String)> = Vec::new();
        for (j, b) in self.s_coeffs.iter().enumerate() {
            if !b.is_zero() {
                let (negative, body) = signed_factor(b);
                terms.push((negative, format!("{body}s{}", j + 1)));
            }
        }
        let base = self.base.to_string();
        if terms.is_empty() {
            return f.write_str(&base);
        }
        let mut s_part = String::new();
        for (k, (negative, term)) in terms.iter().enumerate() {
            s_part.push_str(match (k, negative) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            s_part.push_str(term);
        }
        if terms.len() > 1 || terms[0].0 {
            s_part = format!("({s_part})");
        }
        if base == "0" {
            return write!(f, "-{s_part}");
        }
        write!(f, "{base} - {s_part}")
    }
}

pub fn tilde(arrangement: &Arrangement, d: &Derivation) -> Result<TildeOperator> {
    let s_coeffs = check_logarithmic(arrangement, d)
        .map_err(|e| Error::NotLogarithmic { derivation: 1, form: e.form })?;
    Ok(TildeOperator { base: d.clone(), s_coeffs })
}

/// Generators `delta~_1, ..., delta~_n` of the annihilator of
/// `l_1^{s_1} ... l_p^{s_p}` for a Saito basis. Display only.
pub fn annihilator_presentation(arrangement: &Arrangement, basis: &[Derivation]) -> Result<Vec<TildeOperator>> {
    let outcome = saito_check(arrangement, basis)?;
    if !outcome.accepted {
        return Err(Error::MalformedInput("the derivations do not form a basis (Saito determinant check failed)".into()));
    }
    basis
        .iter()
        .enumerate()
        .map(|(k, d)| {
            let s_coeffs = check_logarithmic(arrangement, d)
                .map_err(|e| Error::NotLogarithmic { derivation: k + 1, form: e.form })?;
            Ok(TildeOperator { base: d.clone(), s_coeffs })
        })
        .collect()
}

/// A known basis of logarithmic derivations for a built-in family.
pub fn family_basis(family: Family) -> Result<Vec<Derivation>> {
    let a = family.build()?;
    Ok(match family {
        Family::Boolean(n) => (0..n).map(|j| Derivation::single(n, j, MultiPoly::var(n, j))).collect(),
        Family::Braid(n) => (0..n as u32).map(|k| Derivation::power_sum(n, k)).collect(),
        Family::Generic2d(_) => plane_basis(&a).expect("generic2d lives in the plane"),
    })
}

/// For an arrangement in the plane: the Euler field and
/// `Q_y d/dx - Q_x d/dy`, whose determinant is `-p Q`.
pub fn plane_basis(arrangement: &Arrangement) -> Option<Vec<Derivation>> {
    if arrangement.dim() != 2 || arrangement.is_empty() {
        return None;
    }
    let q = arrangement.defining_polynomial();
    let hamiltonian = Derivation { coeffs: vec![q.derivative(1), -&q.derivative(0)] };
    Some(vec![Derivation::euler(2), hamiltonian])
}
