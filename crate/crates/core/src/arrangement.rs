//! Central hyperplane arrangements: construction, named families and the
//! usual surgery (localization, deletion, restriction, essentialization).

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{format_rational, MultiPoly, Rational, RowSpace};

/// A nonzero linear form, scaled so that its first nonzero coefficient is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm(Vec<Rational>);

impl LinearForm {
    /// Normalizes `coeffs`; `None` for the zero vector.
    pub fn new(coeffs: Vec<Rational>) -> Option<Self> {
        let lead = coeffs.iter().find(|c| !c.is_zero())?.clone();
        if lead.is_one() {
            return Some(LinearForm(coeffs));
        }
        Some(LinearForm(coeffs.into_iter().map(|c| c / &lead).collect()))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn to_poly(&self) -> MultiPoly {
        MultiPoly::linear(&self.0)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// An ordered list of pairwise distinct hyperplanes through the origin of
/// `Q^n`. Position `i` (zero based) carries the variable `s_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    forms: Vec<LinearForm>,
    labels: Option<Vec<String>>,
}

impl Arrangement {
    /// Normalizes the raw forms, keeping input order.
    pub fn new(dim: usize, raw_forms: Vec<Vec<Rational>>) -> Result<Self> {
        Self::with_labels(dim, raw_forms, None)
    }

    pub fn with_labels(dim: usize, raw_forms: Vec<Vec<Rational>>, labels: Option<Vec<String>>) -> Result<Self> {
        if let Some(labels) = &labels {
            if labels.len() != raw_forms.len() {
                return Err(Error::MalformedInput(format!(
                    "{} labels for {} forms",
                    labels.len(),
                    raw_forms.len()
                )));
            }
        }
        let mut forms: Vec<LinearForm> = Vec::with_capacity(raw_forms.len());
        for (i, raw) in raw_forms.into_iter().enumerate() {
            if raw.len() != dim {
                return Err(Error::MalformedInput(format!(
                    "form {} has {} coefficients, expected {dim}",
                    i + 1,
                    raw.len()
                )));
            }
            let form = LinearForm::new(raw).ok_or(Error::InvalidForm { index: i + 1 })?;
            if let Some(j) = forms.iter().position(|f| *f == form) {
                return Err(Error::DuplicateHyperplane { first: j + 1, second: i + 1 });
            }
            forms.push(form);
        }
        Ok(Arrangement { dim, forms, labels })
    }

    pub fn from_integers(dim: usize, raw_forms: &[&[i64]]) -> Result<Self> {
        let forms = raw_forms
            .iter()
            .map(|f| f.iter().map(|&c| Rational::from_integer(c.into())).collect())
            .collect();
        Self::new(dim, forms)
    }

    pub fn empty(dim: usize) -> Self {
        Arrangement { dim, forms: Vec::new(), labels: None }
    }

    pub fn family(family: Family) -> Result<Self> {
        family.build()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of hyperplanes.
    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn form(&self, i: usize) -> &LinearForm {
        &self.forms[i]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of form `i` (zero based), defaulting to `H{i+1}`.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("H{}", i + 1),
        }
    }

    pub fn form_vectors(&self) -> Vec<Vec<Rational>> {
        self.forms.iter().map(|f| f.0.clone()).collect()
    }

    /// Span of all the forms in the dual space.
    pub fn span(&self) -> RowSpace {
        RowSpace::span(self.dim, &self.form_vectors()).expect("forms have the ambient length")
    }

    pub fn rank(&self) -> usize {
        self.span().rank()
    }

    /// Product of the forms.
    pub fn defining_polynomial(&self) -> MultiPoly {
        self.forms.iter().fold(MultiPoly::one(self.dim), |acc, f| &acc * &f.to_poly())
    }

    /// Sub-arrangement on the given zero-based indices, without any closure
    /// check. Labels follow the original positions.
    pub fn subarrangement(&self, indices: &[usize]) -> Arrangement {
        Arrangement {
            dim: self.dim,
            forms: indices.iter().map(|&i| self.forms[i].clone()).collect(),
            labels: Some(indices.iter().map(|&i| self.label(i)).collect()),
        }
    }

    /// Indices (zero based) of the forms vanishing on the intersection of
    /// the hyperplanes in `indices`.
    pub fn closure(&self, indices: &[usize]) -> Vec<usize> {
        let rows: Vec<Vec<Rational>> = indices.iter().map(|&i| self.forms[i].0.clone()).collect();
        let space = RowSpace::span(self.dim, &rows).expect("forms have the ambient length");
        (0..self.len()).filter(|&i| space.contains(&self.forms[i].0)).collect()
    }

    /// The localization `A_X` for the flat with index set `indices`
    /// (one based, as reported by the lattice).
    pub fn localize(&self, indices: &[usize]) -> Result<Arrangement> {
        let zero_based = self.zero_based(indices)?;
        let mut sorted = zero_based.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if self.closure(&sorted) != sorted {
            return Err(Error::NotAFlat(indices.to_vec()));
        }
        Ok(self.subarrangement(&sorted))
    }

    /// `A'`: drop hyperplane `index` (one based).
    pub fn delete(&self, index: usize) -> Result<Arrangement> {
        let i = self.check_index(index)?;
        let keep: Vec<usize> = (0..self.len()).filter(|&k| k != i).collect();
        Ok(self.subarrangement(&keep))
    }

    /// `A''`: the trace of the other hyperplanes on hyperplane `index`
    /// (one based), in coordinates on that hyperplane.
    ///
    /// The hyperplane is parametrized by every standard coordinate except the
    /// last one in which its form is nonzero.
    pub fn restrict(&self, index: usize) -> Result<Arrangement> {
        let i = self.check_index(index)?;
        let h = &self.forms[i].0;
        let elim = h.iter().rposition(|c| !c.is_zero()).expect("forms are nonzero");
        let mut forms: Vec<LinearForm> = Vec::new();
        let mut labels = Vec::new();
        for (k, f) in self.forms.iter().enumerate() {
            if k == i {
                continue;
            }
            let ratio = &f.0[elim] / &h[elim];
            let image: Vec<Rational> = (0..self.dim)
                .filter(|&j| j != elim)
                .map(|j| &f.0[j] - &ratio * &h[j])
                .collect();
            let Some(form) = LinearForm::new(image) else { continue };
            if !forms.contains(&form) {
                forms.push(form);
                labels.push(self.label(k));
            }
        }
        Ok(Arrangement { dim: self.dim - 1, forms, labels: Some(labels) })
    }

    /// Rewrites the forms on a basis of their span. Returns the essential
    /// arrangement and `e0 = n - rank`.
    pub fn essentialize(&self) -> (Arrangement, usize) {
        let span = self.span();
        let rank = span.rank();
        let forms = self
            .forms
            .iter()
            .map(|f| {
                let coords = span.coordinates(&f.0).expect("form lies in the span");
                LinearForm::new(coords).expect("nonzero form has nonzero coordinates")
            })
            .collect();
        (Arrangement { dim: rank, forms, labels: self.labels.clone() }, self.dim - rank)
    }

    /// Order independent key: dimension plus the sorted normalized forms.
    pub fn canonical_key(&self) -> (usize, Vec<LinearForm>) {
        let mut forms = self.forms.clone();
        forms.sort();
        (self.dim, forms)
    }

    fn check_index(&self, index: usize) -> Result<usize> {
        if index == 0 || index > self.len() {
            return Err(Error::InvalidIndex { index, count: self.len() });
        }
        Ok(index - 1)
    }

    fn zero_based(&self, indices: &[usize]) -> Result<Vec<usize>> {
        indices.iter().map(|&i| self.check_index(i)).collect()
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {}: {{", self.dim)?;
        for (i, form) in self.forms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{form}")?;
        }
        f.write_str("}")
    }
}

/// Built-in arrangement families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `x_i - x_j` for `1 <= i < j <= n`, ordered by `(i, j)`.
    Braid(usize),
    /// The coordinate hyperplanes of `Q^n`.
    Boolean(usize),
    /// `p` lines in the plane: `x, y, x+y, x+2y, ..., x+(p-2)y`.
    Generic2d(usize),
}

impl Family {
    pub fn build(self) -> Result<Arrangement> {
        match self {
            Family::Braid(n) => {
                if n < 2 {
                    return Err(Error::InvalidParameter(format!("braid needs n >= 2, got {n}")));
                }
                let mut forms = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        let mut v = vec![Rational::zero(); n];
                        v[i] = Rational::one();
                        v[j] = -Rational::one();
                        forms.push(v);
                    }
                }
                let labels = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| format!("x{}-x{}", i + 1, j + 1)))
                    .collect();
                Arrangement::with_labels(n, forms, Some(labels))
            }
            Family::Boolean(n) => {
                if n < 1 {
                    return Err(Error::InvalidParameter("boolean needs n >= 1".into()));
                }
                let forms = (0..n)
                    .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
                    .collect();
                Arrangement::new(n, forms)
            }
            Family::Generic2d(p) => {
                if p < 1 {
                    return Err(Error::InvalidParameter("generic2d needs p >= 1".into()));
                }
                let int = |v: i64| Rational::from_integer(v.into());
                let mut forms = vec![vec![int(1), int(0)]];
                if p >= 2 {
                    forms.push(vec![int(0), int(1)]);
                }
                for k in 1..p.saturating_sub(1) {
                    forms.push(vec![int(1), int(k as i64)]);
                }
                Arrangement::new(2, forms)
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Braid(_) => "braid",
            Family::Boolean(_) => "boolean",
            Family::Generic2d(_) => "generic2d",
        }
    }

    pub fn parameter(&self) -> usize {
        match *self {
            Family::Braid(n) | Family::Boolean(n) | Family::Generic2d(n) => n,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.name(), self.parameter())
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `NAME:PARAM`, e.g. `braid:4`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, param) = s
            .split_once(':')
            .ok_or_else(|| Error::MalformedInput(format!("family must look like NAME:PARAM, got {s:?}")))?;
        let param: usize = param
            .trim()
            .parse()
            .map_err(|_| Error::MalformedInput(format!("family parameter is not a nonnegative integer: {param:?}")))?;
        match name.trim() {
            "braid" => Ok(Family::Braid(param)),
            "boolean" => Ok(Family::Boolean(param)),
            "generic2d" => Ok(Family::Generic2d(param)),
            other => Err(Error::MalformedInput(format!("unknown family {other:?}"))),
        }
    }
}

/// Renders a form vector as a list of rational strings.
pub(crate) fn form_strings(form: &LinearForm) -> Vec<String> {
    form.coeffs().iter().map(format_rational).collect()
}
