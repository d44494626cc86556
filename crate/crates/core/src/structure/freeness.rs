use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::arrangement::{Arrangement, LinearForm};
use crate::lattice::{char_poly, CharPoly};
use crate::linalg::Rational;

use super::derivation::Derivation;

/// Default cap on distinct sub-arrangements expanded by the inductive search.
pub const DEFAULT_DEPTH_LIMIT: usize = 10_000;

/// Sorted multiset of exponents, one per ambient coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentMultiset(Vec<u32>);

impl ExponentMultiset {
    pub fn new(mut values: Vec<u32>) -> Self {
        values.sort_unstable();
        ExponentMultiset(values)
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    /// `e_k`, the number of exponents equal to `k`.
    pub fn count(&self, k: u32) -> usize {
        self.0.iter().filter(|&&e| e == k).count()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Multiset inclusion.
    pub fn is_submultiset_of(&self, other: &ExponentMultiset) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|x| it.by_ref().any(|y| y == x))
    }
}

impl fmt::Display for ExponentMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The characteristic polynomial does not split over the nonnegative
/// integers, which rules out freeness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonIntegralRoots {
    pub char_poly: CharPoly,
}

impl fmt::Display for NonIntegralRoots {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "characteristic polynomial has non-integral roots")
    }
}

/// Exponents read off the roots of the characteristic polynomial.
pub fn exponents(arrangement: &Arrangement) -> Result<ExponentMultiset, NonIntegralRoots> {
    exponents_of(&char_poly(arrangement))
}

fn exponents_of(chi: &CharPoly) -> Result<ExponentMultiset, NonIntegralRoots> {
    chi.nonnegative_integer_roots()
        .map(ExponentMultiset::new)
        .ok_or_else(|| NonIntegralRoots { char_poly: chi.clone() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Free,
    NotFree,
    Unknown,
}

impl Outcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            Outcome::Free => "free",
            Outcome::NotFree => "not-free",
            Outcome::Unknown => "unknown",
        }
    }
}

/// A node of an addition-deletion certificate.
///
/// `exponents` are the exponents of the arrangement at this node. A leaf
/// (no `step`) is the empty arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductiveNode {
    pub dim: usize,
    pub hyperplanes: usize,
    pub exponents: ExponentMultiset,
    pub step: Option<InductiveStep>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductiveStep {
    /// One-based index of the removed hyperplane in this node's arrangement.
    pub deleted: usize,
    pub deletion: Arc<InductiveNode>,
    pub restriction: Arc<InductiveNode>,
}

impl InductiveNode {
    /// Number of deletions along the deletion spine down to the empty
    /// arrangement.
    pub fn chain_length(&self) -> usize {
        let mut len = 0;
        let mut node = self;
        while let Some(step) = &node.step {
            len += 1;
            node = &step.deletion;
        }
        len
    }

    /// Re-checks every addition step: `exp(A'') ⊆ exp(A')` and `A` has the
    /// exponents of `A'` with one entry raised by one.
    pub fn verify(&self) -> bool {
        let Some(step) = &self.step else {
            return self.hyperplanes == 0 && self.exponents.values().iter().all(|&e| e == 0);
        };
        let d = &step.deletion;
        let r = &step.restriction;
        if d.hyperplanes + 1 != self.hyperplanes || r.dim + 1 != self.dim || d.dim != self.dim {
            return false;
        }
        if !r.exponents.is_submultiset_of(&d.exponents) {
            return false;
        }
        let mut raised = false;
        let mut rest: Vec<u32> = d.exponents.values().to_vec();
        for e in r.exponents.values() {
            let pos = rest.iter().position(|x| x == e).expect("inclusion checked");
            rest.remove(pos);
        }
        if rest.len() == 1 {
            let mut expected = r.exponents.values().to_vec();
            expected.push(rest[0] + 1);
            raised = ExponentMultiset::new(expected) == self.exponents;
        }
        raised && d.verify() && r.verify()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaitoWitness {
    pub basis: Vec<Derivation>,
    pub scalar: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Every arrangement of rank at most two is free. The inductive chain is
    /// attached when the search finished within its budget.
    RankAtMostTwo(Option<Arc<InductiveNode>>),
    InductiveChain(Arc<InductiveNode>),
    SaitoWitness(SaitoWitness),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::RankAtMostTwo(_) => "rank-at-most-two",
            Certificate::InductiveChain(_) => "inductive-chain",
            Certificate::SaitoWitness(_) => "saito-witness",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreenessVerdict {
    pub outcome: Outcome,
    pub certificate: Option<Certificate>,
    /// Present exactly when the outcome is `NotFree`.
    pub evidence_for_not_free: Option<NonIntegralRoots>,
    pub exponents: Option<ExponentMultiset>,
}

impl FreenessVerdict {
    pub fn is_free(&self) -> bool {
        self.outcome == Outcome::Free
    }

    pub fn inductive_chain(&self) -> Option<&Arc<InductiveNode>> {
        match &self.certificate {
            Some(Certificate::InductiveChain(node)) | Some(Certificate::RankAtMostTwo(Some(node))) => Some(node),
            _ => None,
        }
    }

    pub fn free_by_saito(basis: Vec<Derivation>, scalar: Rational, exponents: ExponentMultiset) -> Self {
        FreenessVerdict {
            outcome: Outcome::Free,
            certificate: Some(Certificate::SaitoWitness(SaitoWitness { basis, scalar })),
            evidence_for_not_free: None,
            exponents: Some(exponents),
        }
    }

    fn unknown(exponents: Option<ExponentMultiset>) -> Self {
        FreenessVerdict { outcome: Outcome::Unknown, certificate: None, evidence_for_not_free: None, exponents }
    }

    /// Why the Bernstein generator cannot be emitted, if it cannot.
    pub fn refusal(&self) -> Option<String> {
        match self.outcome {
            Outcome::Free => None,
            Outcome::NotFree => Some(
                self.evidence_for_not_free
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_else(|| "arrangement is not free".into()),
            ),
            Outcome::Unknown => Some("freeness could not be certified".into()),
        }
    }
}

/// Three-valued freeness test: rank at most two, then the factorization of
/// the characteristic polynomial, then an addition-deletion search that
/// expands at most `depth_limit` distinct sub-arrangements.
pub fn freeness(arrangement: &Arrangement, depth_limit: usize) -> FreenessVerdict {
    let chi = char_poly(arrangement);
    let exps = exponents_of(&chi);
    let mut search = InductiveSearch::new(depth_limit);

    if arrangement.rank() <= 2 {
        let chain = match search.run(arrangement) {
            Search::Found(node) => Some(node),
            _ => None,
        };
        return FreenessVerdict {
            outcome: Outcome::Free,
            certificate: Some(Certificate::RankAtMostTwo(chain)),
            evidence_for_not_free: None,
            exponents: exps.ok(),
        };
    }
    let exps = match exps {
        Ok(e) => e,
        Err(report) => {
            return FreenessVerdict {
                outcome: Outcome::NotFree,
                certificate: None,
                evidence_for_not_free: Some(report),
                exponents: None,
            }
        }
    };
    match search.run(arrangement) {
        Search::Found(node) => FreenessVerdict {
            outcome: Outcome::Free,
            certificate: Some(Certificate::InductiveChain(node)),
            evidence_for_not_free: None,
            exponents: Some(exps),
        },
        Search::Failed | Search::Exhausted => FreenessVerdict::unknown(Some(exps)),
    }
}

enum Search {
    Found(Arc<InductiveNode>),
    Failed,
    Exhausted,
}

type MemoKey = (usize, Vec<LinearForm>);

/// Memoized search for inductive freeness. Sub-arrangements are keyed by
/// their sorted normalized forms, so index order does not matter.
struct InductiveSearch {
    limit: usize,
    expanded: usize,
    memo: HashMap<MemoKey, Option<Arc<InductiveNode>>>,
    exps: HashMap<MemoKey, Option<ExponentMultiset>>,
}

impl InductiveSearch {
    fn new(limit: usize) -> Self {
        InductiveSearch { limit, expanded: 0, memo: HashMap::new(), exps: HashMap::new() }
    }

    fn exponents(&mut self, a: &Arrangement) -> Option<ExponentMultiset> {
        self.exps.entry(a.canonical_key()).or_insert_with(|| exponents(a).ok()).clone()
    }

    fn run(&mut self, a: &Arrangement) -> Search {
        let key = a.canonical_key();
        if let Some(hit) = self.memo.get(&key) {
            return match hit {
                Some(node) => Search::Found(node.clone()),
                None => Search::Failed,
            };
        }
        if self.expanded >= self.limit {
            return Search::Exhausted;
        }
        self.expanded += 1;

        if a.is_empty() {
            let leaf = Arc::new(InductiveNode {
                dim: a.dim(),
                hyperplanes: 0,
                exponents: ExponentMultiset::new(vec![0; a.dim()]),
                step: None,
            });
            self.memo.insert(key, Some(leaf.clone()));
            return Search::Found(leaf);
        }
        let Some(own) = self.exponents(a) else {
            self.memo.insert(key, None);
            return Search::Failed;
        };

        for i in (1..=a.len()).rev() {
            let deletion = a.delete(i).expect("index in range");
            let restriction = a.restrict(i).expect("index in range");
            // cheap filter on characteristic polynomials before recursing
            let (Some(de), Some(re)) = (self.exponents(&deletion), self.exponents(&restriction)) else {
                continue;
            };
            if !re.is_submultiset_of(&de) {
                continue;
            }
            let d_node = match self.run(&deletion) {
                Search::Found(n) => n,
                Search::Failed => continue,
                Search::Exhausted => return Search::Exhausted,
            };
            let r_node = match self.run(&restriction) {
                Search::Found(n) => n,
                Search::Failed => continue,
                Search::Exhausted => return Search::Exhausted,
            };
            let node = Arc::new(InductiveNode {
                dim: a.dim(),
                hyperplanes: a.len(),
                exponents: own,
                step: Some(InductiveStep { deleted: i, deletion: d_node, restriction: r_node }),
            });
            self.memo.insert(key, Some(node.clone()));
            return Search::Found(node);
        }
        self.memo.insert(key, None);
        Search::Failed
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Family;

    fn arr(f: Family) -> Arrangement {
        Arrangement::family(f).unwrap()
    }

    fn four_generic() -> Arrangement {
        Arrangement::from_integers(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap()
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(exponents(&arr(Family::Braid(3))).unwrap().values(), [0, 1, 2]);
        for p in 2..=6 {
            assert_eq!(exponents(&arr(Family::Generic2d(p))).unwrap().values(), [1, p as u32 - 1]);
        }
        let report = exponents(&four_generic()).unwrap_err();
        // (t - 1)(t^2 - 3t + 3)
        assert_eq!(report.char_poly, CharPoly::new(vec![-3, 6, -4, 1]));
    }

    #[test]
    fn boolean_three_chain() {
        let v = freeness(&arr(Family::Boolean(3)), DEFAULT_DEPTH_LIMIT);
        assert_eq!(v.outcome, Outcome::Free);
        let chain = v.inductive_chain().unwrap();
        assert_eq!(chain.chain_length(), 3);
        assert!(chain.verify());
        assert!(matches!(v.certificate, Some(Certificate::InductiveChain(_))));
    }

    #[test]
    fn braid_four_is_inductively_free() {
        let v = freeness(&arr(Family::Braid(4)), DEFAULT_DEPTH_LIMIT);
        assert_eq!(v.outcome, Outcome::Free);
        let chain = v.inductive_chain().unwrap();
        assert_eq!(chain.chain_length(), 6);
        assert!(chain.verify());
        assert_eq!(v.exponents.unwrap().values(), [0, 1, 2, 3]);
    }

    #[test]
    fn rank_two_is_free_with_chain() {
        let v = freeness(&arr(Family::Generic2d(5)), DEFAULT_DEPTH_LIMIT);
        assert!(matches!(v.certificate, Some(Certificate::RankAtMostTwo(Some(_)))));
        assert!(v.inductive_chain().unwrap().verify());
    }

    #[test]
    fn generic_four_planes_not_free() {
        let v = freeness(&four_generic(), DEFAULT_DEPTH_LIMIT);
        assert_eq!(v.outcome, Outcome::NotFree);
        assert!(v.certificate.is_none());
        assert_eq!(v.refusal().unwrap(), "characteristic polynomial has non-integral roots");
    }

    #[test]
    fn tiny_budget_yields_unknown() {
        let v = freeness(&arr(Family::Braid(4)), 2);
        assert_eq!(v.outcome, Outcome::Unknown);
        assert!(v.certificate.is_none() && v.evidence_for_not_free.is_none());
        assert_eq!(v.refusal().unwrap(), "freeness could not be certified");
    }

    #[test]
    fn submultiset() {
        let a = ExponentMultiset::new(vec![1, 2]);
        let b = ExponentMultiset::new(vec![2, 0, 1]);
        assert!(a.is_submultiset_of(&b));
        assert!(!b.is_submultiset_of(&a));
        assert!(!ExponentMultiset::new(vec![1, 1]).is_submultiset_of(&b));
    }
}
