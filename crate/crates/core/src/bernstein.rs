//! The Bernstein ideal generator of a free arrangement, the bounds it sits
//! between, its `s -> -s-2` symmetry and the slopes of the arrangement.
//!
//! For a free arrangement the generator is
//!
//! ```text
//! prod over X with A_X irreducible, prod_{j=0}^{2(|J(X)| - r(X))} (sum_{i in J(X)} s_i + r(X) + j)
//! ```
//!
//! where `J(X)` indexes the hyperplanes through `X` and `r(X)` is the
//! codimension of `X`. The whole space (empty `J`) never contributes.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::lattice::{Flat, IntersectionLattice};
use crate::structure::{irreducible_components, FreenessVerdict};

/// `(sum_{i in support} s_i + constant)`, support one-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearFactor {
    pub support: Vec<usize>,
    pub constant: i64,
}

impl LinearFactor {
    pub fn new(mut support: Vec<usize>, constant: i64) -> Self {
        support.sort_unstable();
        support.dedup();
        LinearFactor { support, constant }
    }

    fn sum_text(&self, latex: bool) -> String {
        let vars: Vec<String> = self
            .support
            .iter()
            .map(|i| if latex { format!("s_{{{i}}}") } else { format!("s{i}") })
            .collect();
        vars.join("+")
    }

    pub fn to_latex(&self) -> String {
        format!("({}{:+})", self.sum_text(true), self.constant)
    }
}

impl Ord for LinearFactor {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.support.len(), &self.support, self.constant).cmp(&(other.support.len(), &other.support, other.constant))
    }
}

impl PartialOrd for LinearFactor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}{:+})", self.sum_text(false), self.constant)
    }
}

/// A product of linear factors in `s_1, ..., s_p`, kept sorted so that
/// equality is multiset equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactoredSPolynomial {
    factors: Vec<LinearFactor>,
    variable_count: usize,
}

impl FactoredSPolynomial {
    pub fn new(mut factors: Vec<LinearFactor>, variable_count: usize) -> Self {
        factors.sort();
        FactoredSPolynomial { factors, variable_count }
    }

    pub fn factors(&self) -> &[LinearFactor] {
        &self.factors
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    /// No repeated factor.
    pub fn is_reduced(&self) -> bool {
        self.factors.windows(2).all(|w| w[0] != w[1])
    }

    /// `self` divides `other`, as a factor multiset inclusion.
    pub fn divides(&self, other: &FactoredSPolynomial) -> bool {
        let mut it = other.factors.iter();
        self.factors.iter().all(|f| it.by_ref().any(|g| g == f))
    }

    /// Distinct supports, i.e. the slopes the factors lie on.
    pub fn supports(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.factors.iter().map(|f| f.support.clone()).collect();
        out.dedup();
        out
    }

    pub fn to_latex(&self) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.factors.iter().map(LinearFactor::to_latex).collect()
    }
}

impl fmt::Display for FactoredSPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for factor in &self.factors {
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

/// Flats other than the whole space whose localization is irreducible.
pub fn irreducible_flats<'a>(arrangement: &Arrangement, lattice: &'a IntersectionLattice) -> Vec<&'a Flat> {
    lattice
        .flats()
        .iter()
        .filter(|flat| !flat.is_bottom())
        .filter(|flat| {
            let local = arrangement.localize(&flat.indices).expect("lattice flats are closed");
            irreducible_components(&local).map(|d| d.is_irreducible()).unwrap_or(false)
        })
        .collect()
}

fn flat_factors(flat: &Flat, top: usize) -> impl Iterator<Item = LinearFactor> + '_ {
    let r = flat.codim as i64;
    (0..=top as i64).map(move |j| LinearFactor::new(flat.indices.clone(), r + j))
}

/// `2(|J(X)| - r(X))`, the top index of the flat's run of factors.
pub fn flat_span(flat: &Flat) -> usize {
    2 * (flat.indices.len() - flat.codim)
}

/// The generator for a free arrangement. Refuses unless `verdict` is `Free`.
pub fn bernstein_generator(arrangement: &Arrangement, verdict: &FreenessVerdict) -> Result<FactoredSPolynomial> {
    if let Some(reason) = verdict.refusal() {
        return Err(Error::FreenessRequired(reason));
    }
    Ok(bernstein_generator_assuming_free(arrangement))
}

/// The generator formula applied without checking freeness.
pub fn bernstein_generator_assuming_free(arrangement: &Arrangement) -> FactoredSPolynomial {
    let lattice = IntersectionLattice::new(arrangement);
    let factors = irreducible_flats(arrangement, &lattice)
        .into_iter()
        .flat_map(|flat| flat_factors(flat, flat_span(flat)))
        .collect();
    FactoredSPolynomial::new(factors, arrangement.len())
}

/// `prod_{j=0}^{2(p-r)} (s_1 + ... + s_p + r + j)` for an irreducible
/// arrangement of rank `r`, which divides every element of its Bernstein
/// ideal when it is free.
pub fn lower_bound_irreducible(arrangement: &Arrangement) -> Result<FactoredSPolynomial> {
    let decomposition = irreducible_components(arrangement)?;
    if !decomposition.is_irreducible() {
        return Err(Error::NotIrreducible { blocks: decomposition.blocks.len() });
    }
    let p = arrangement.len();
    let r = arrangement.dim() - decomposition.e0;
    let all: Vec<usize> = (1..=p).collect();
    let factors = (0..=2 * (p - r) as i64).map(|j| LinearFactor::new(all.clone(), r as i64 + j)).collect();
    Ok(FactoredSPolynomial::new(factors, p))
}

/// The same product as the generator with every run truncated at `n`
/// instead of `2(|J(X)| - r(X))`. `None` picks the largest such span, the
/// smallest `n` for which the generator divides the result.
pub fn evident_multiple(arrangement: &Arrangement, n: Option<usize>) -> FactoredSPolynomial {
    let lattice = IntersectionLattice::new(arrangement);
    let flats = irreducible_flats(arrangement, &lattice);
    let n = n.unwrap_or_else(|| flats.iter().map(|f| flat_span(f)).max().unwrap_or(0));
    let factors = flats.into_iter().flat_map(|flat| flat_factors(flat, n)).collect();
    FactoredSPolynomial::new(factors, arrangement.len())
}

/// Substitutes `s_i -> -s_i - 2`. Each factor `(sum_J s + c)` becomes
/// `-(sum_J s + 2|J| - c)`; succeeds with the overall sign when the factor
/// multiset is preserved.
pub fn symmetry_check(poly: &FactoredSPolynomial) -> Result<i32> {
    let mut counts: BTreeMap<(&[usize], i64), i64> = BTreeMap::new();
    for f in &poly.factors {
        *counts.entry((&f.support, f.constant)).or_default() += 1;
    }
    for f in &poly.factors {
        let image = 2 * f.support.len() as i64 - f.constant;
        let have = counts.get(&(f.support.as_slice(), image)).copied().unwrap_or(0);
        if have != counts[&(f.support.as_slice(), f.constant)] {
            return Err(Error::Asymmetry(f.to_string()));
        }
    }
    Ok(if poly.factors.len().is_multiple_of(2) { 1 } else { -1 })
}

/// `(slope * s + constant)^multiplicity` factors of a one-variable
/// polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariateFactored {
    /// Sorted by `(slope, constant)`.
    pub factors: Vec<(usize, i64, usize)>,
}

impl UnivariateFactored {
    fn render(&self, latex: bool) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        for &(slope, constant, mult) in &self.factors {
            let lead = if slope == 1 { "s".to_string() } else { format!("{slope}s") };
            out.push_str(&format!("({lead}{constant:+})"));
            match (mult, latex) {
                (1, _) => {}
                (m, true) => out.push_str(&format!("^{{{m}}}")),
                (m, false) => out.push_str(&format!("^{m}")),
            }
        }
        out
    }

    pub fn to_latex(&self) -> String {
        self.render(true)
    }
}

impl fmt::Display for UnivariateFactored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecializeMode {
    /// `s_1 = ... = s_p = s`.
    AllEqual,
}

pub fn specialize(poly: &FactoredSPolynomial, mode: SpecializeMode) -> UnivariateFactored {
    match mode {
        SpecializeMode::AllEqual => {
            let mut counts: BTreeMap<(usize, i64), usize> = BTreeMap::new();
            for f in &poly.factors {
                *counts.entry((f.support.len(), f.constant)).or_default() += 1;
            }
            UnivariateFactored { factors: counts.into_iter().map(|((a, c), m)| (a, c, m)).collect() }
        }
    }
}

/// Hyperplanes `sum_{i in J} s_i = 0`, one per irreducible localization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeSet {
    /// Sorted by size, then lexicographically.
    pub slopes: Vec<Vec<usize>>,
}

impl SlopeSet {
    pub fn to_latex(&self) -> String {
        self.slopes
            .iter()
            .map(|j| {
                let vars: Vec<String> = j.iter().map(|i| format!("s_{{{i}}}")).collect();
                format!("{} = 0", vars.join("+"))
            })
            .collect::<Vec<_>>()
            .join(",\\quad ")
    }
}

impl fmt::Display for SlopeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .slopes
            .iter()
            .map(|j| {
                let vars: Vec<String> = j.iter().map(|i| format!("s{i}")).collect();
                format!("{} = 0", vars.join("+"))
            })
            .collect();
        f.write_str(&lines.join("\n"))
    }
}

pub fn slopes(arrangement: &Arrangement, verdict: &FreenessVerdict) -> Result<SlopeSet> {
    if let Some(reason) = verdict.refusal() {
        return Err(Error::FreenessRequired(reason));
    }
    Ok(slopes_assuming_free(arrangement))
}

pub fn slopes_assuming_free(arrangement: &Arrangement) -> SlopeSet {
    let lattice = IntersectionLattice::new(arrangement);
    let mut slopes: Vec<Vec<usize>> =
        irreducible_flats(arrangement, &lattice).into_iter().map(|f| f.indices.clone()).collect();
    slopes.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    SlopeSet { slopes }
}
