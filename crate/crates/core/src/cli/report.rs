use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arrangement::Arrangement;
use crate::bernstein::{flat_span, irreducible_flats, FactoredSPolynomial, SlopeSet};
use crate::lattice::{CharPoly, IntersectionLattice};
use crate::linalg::format_rational;
use crate::structure::{ExponentMultiset, FreenessVerdict, IrreducibleDecomposition, NonIntegralRoots};

use super::document::ArrangementDocument;

/// What a subcommand computed. Text, LaTeX and JSON are all rendered from
/// this one value.
#[derive(Debug, Clone)]
pub enum Payload {
    Lattice(IntersectionLattice),
    CharPoly(CharPoly),
    Decompose(IrreducibleDecomposition),
    Exponents(Result<ExponentMultiset, NonIntegralRoots>),
    Freeness(FreenessVerdict),
    Bideal { generator: FactoredSPolynomial, flats: Vec<FlatContribution>, assumed_free: bool },
    Slopes(SlopeSet),
    Family(ArrangementDocument),
}

#[derive(Debug, Clone)]
pub struct FlatContribution {
    pub indices: Vec<usize>,
    pub codim: usize,
    pub factors: usize,
}

impl FlatContribution {
    pub fn for_arrangement(arrangement: &Arrangement) -> Vec<FlatContribution> {
        let lattice = IntersectionLattice::new(arrangement);
        irreducible_flats(arrangement, &lattice)
            .into_iter()
            .map(|f| FlatContribution { indices: f.indices.clone(), codim: f.codim, factors: flat_span(f) + 1 })
            .collect()
    }
}

fn set_text(indices: &[usize]) -> String {
    let parts: Vec<String> = indices.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

impl Payload {
    pub fn to_json(&self) -> Value {
        match self {
            Payload::Lattice(l) => json!({
                "flat_count": l.len(),
                "flats": l.flats().iter().map(|f| json!({
                    "indices": f.indices,
                    "codim": f.codim,
                    "dim": f.dim(),
                    "mobius": f.mobius,
                    "basis": f.space.rows().iter()
                        .map(|r| r.iter().map(format_rational).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            }),
            Payload::CharPoly(chi) => json!({
                "char_poly": chi.to_string(),
                "coefficients": chi.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            }),
            Payload::Decompose(d) => json!({
                "blocks": d.blocks,
                "e0": d.e0,
                "irreducible": d.is_irreducible(),
            }),
            Payload::Exponents(Ok(e)) => json!({ "integral": true, "exponents": e.values() }),
            Payload::Exponents(Err(report)) => json!({
                "integral": false,
                "reason": report.to_string(),
                "char_poly": report.char_poly.to_string(),
            }),
            Payload::Freeness(v) => json!({
                "outcome": v.outcome.as_str(),
                "certificate": v.certificate.as_ref().map(|c| c.kind()),
                "chain_length": v.inductive_chain().map(|c| c.chain_length()),
                "exponents": v.exponents.as_ref().map(|e| e.values().to_vec()),
                "evidence": v.evidence_for_not_free.as_ref().map(|r| json!({
                    "reason": r.to_string(),
                    "char_poly": r.char_poly.to_string(),
                })),
            }),
            Payload::Bideal { generator, flats, assumed_free } => json!({
                "generator": generator.to_string(),
                "factor_count": generator.degree(),
                "factors": generator.factors().iter()
                    .map(|f| json!({ "support": f.support, "constant": f.constant }))
                    .collect::<Vec<_>>(),
                "flats": flats.iter()
                    .map(|f| json!({ "indices": f.indices, "codim": f.codim, "factors": f.factors }))
                    .collect::<Vec<_>>(),
                "assumed_free": assumed_free,
            }),
            Payload::Slopes(s) => json!({ "slopes": s.slopes, "hyperplanes": s.to_string().lines().collect::<Vec<_>>() }),
            Payload::Family(doc) => serde_json::to_value(doc).expect("document serializes"),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = match self {
            Payload::Lattice(l) => {
                let mut lines = vec![format!("{} flats", l.len())];
                for f in l.flats() {
                    lines.push(format!("J={} codim={} mu={}", set_text(&f.indices), f.codim, f.mobius));
                }
                lines.join("\n")
            }
            Payload::CharPoly(chi) => chi.to_string(),
            Payload::Decompose(d) => {
                let blocks: Vec<String> = d.blocks.iter().map(|b| set_text(b)).collect();
                format!("blocks: {}\ne0: {}", blocks.join(" "), d.e0)
            }
            Payload::Exponents(Ok(e)) => e.to_string(),
            Payload::Exponents(Err(r)) => format!("{r}: {}", r.char_poly),
            Payload::Freeness(v) => {
                let mut line = v.outcome.as_str().to_string();
                if let Some(c) = &v.certificate {
                    line.push_str(&format!(" ({}", c.kind()));
                    if let Some(chain) = v.inductive_chain() {
                        line.push_str(&format!(", chain length {}", chain.chain_length()));
                    }
                    line.push(')');
                }
                if let Some(e) = &v.exponents {
                    line.push_str(&format!("\nexponents: {e}"));
                }
                if let Some(r) = &v.evidence_for_not_free {
                    line.push_str(&format!("\n{r}: {}", r.char_poly));
                }
                line
            }
            Payload::Bideal { generator, .. } => generator.to_string(),
            Payload::Slopes(s) => s.to_string(),
            Payload::Family(doc) => return doc.to_json(),
        };
        out.push('\n');
        out
    }

    pub fn to_latex(&self) -> String {
        let mut out = match self {
            Payload::Lattice(l) => {
                let mut lines = vec!["\\begin{tabular}{lrr}".to_string(), "$J(X)$ & $r(X)$ & $\\mu(X)$ \\\\".into()];
                for f in l.flats() {
                    let j = set_text(&f.indices).replace('{', "\\{").replace('}', "\\}");
                    lines.push(format!("${j}$ & {} & {} \\\\", f.codim, f.mobius));
                }
                lines.push("\\end{tabular}".into());
                lines.join("\n")
            }
            Payload::CharPoly(chi) => format!("\\chi(t) = {}", chi.to_latex()),
            Payload::Bideal { generator, .. } => format!("b(s) = {}", generator.to_latex()),
            Payload::Slopes(s) => s.to_latex(),
            other => return other.to_text(),
        };
        out.push('\n');
        out
    }
}

/// Everything a run reports, in canonical JSON form (sorted keys).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: Vec<String>,
    pub input_digest: String,
    pub result: Value,
    pub tool_version: String,
}

impl ReportDocument {
    pub fn new(command: Vec<String>, input_digest: String, payload: &Payload) -> Self {
        ReportDocument {
            command,
            input_digest,
            result: payload.to_json(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut out = serde_json::to_string_pretty(&value).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn parse(json: &str) -> serde_json::Result<Self> {
        serde_json::from_str(json)
    }
}
