//! Freeness verdicts and the addition-deletion certificates behind them.

use bideal::arrangement::{Arrangement, Family};
use bideal::structure::{freeness, InductiveNode, DEFAULT_DEPTH_LIMIT};

fn print_spine(node: &InductiveNode) {
    let mut node = node;
    while let Some(step) = &node.step {
        println!(
            "  {} hyperplanes, exponents {}: delete #{} -> restriction has exponents {}",
            node.hyperplanes, node.exponents, step.deleted, step.restriction.exponents
        );
        node = &step.deletion;
    }
}

fn main() {
    for family in [Family::Boolean(3), Family::Generic2d(5), Family::Braid(4)] {
        let a = Arrangement::family(family).unwrap();
        let verdict = freeness(&a, DEFAULT_DEPTH_LIMIT);
        println!("{family}: {}", verdict.outcome.as_str());
        if let Some(chain) = verdict.inductive_chain() {
            print_spine(chain);
            println!("  certificate re-checks: {}", chain.verify());
        }
    }

    let not_free = Arrangement::from_integers(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap();
    let verdict = freeness(&not_free, DEFAULT_DEPTH_LIMIT);
    println!("x, y, z, x+y+z: {}", verdict.outcome.as_str());
    if let Some(evidence) = &verdict.evidence_for_not_free {
        println!("  {evidence}: {}", evidence.char_poly);
    }

    // A tiny budget gives up honestly instead of guessing.
    let braid = Arrangement::family(Family::Braid(4)).unwrap();
    println!("braid:4 with budget 2: {}", freeness(&braid, 2).outcome.as_str());
}
