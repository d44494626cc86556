//! Acceptance suite. Runs without the libtest harness so that each
//! criterion prints exactly one PASS/FAIL line; exits nonzero on failure.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bideal::arrangement::{Arrangement, Family};
use bideal::bernstein::{bernstein_generator, slopes, symmetry_check, FactoredSPolynomial, LinearFactor};
use bideal::lattice::{char_poly, intersection_lattice, CharPoly};
use bideal::structure::{exponents, freeness, irreducible_components, saito_check, Derivation, Outcome, DEFAULT_DEPTH_LIMIT};
use num_traits::{One, Signed};
use rand::SeedableRng;

use common::*;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn family(f: Family) -> Arrangement {
    Arrangement::family(f).unwrap()
}

fn timed_generator(a: &Arrangement) -> Result<(FactoredSPolynomial, Duration), String> {
    let start = Instant::now();
    let verdict = freeness(a, DEFAULT_DEPTH_LIMIT);
    let g = bernstein_generator(a, &verdict).map_err(|e| e.to_string())?;
    Ok((g, start.elapsed()))
}

fn multiset(g: &FactoredSPolynomial) -> std::collections::BTreeMap<(Vec<usize>, i64), usize> {
    factor_multiset(g.factors().iter().map(|f| (f.support.clone(), f.constant)))
}

fn generic_plane_lines() -> Check {
    let mut worst = Duration::ZERO;
    for p in 3..=6usize {
        let a = family(Family::Generic2d(p));
        let (g, took) = timed_generator(&a)?;
        let all: Vec<usize> = (1..=p).collect();
        let mut expected: Vec<(Vec<usize>, i64)> = (1..=p).map(|i| (vec![i], 1)).collect();
        expected.extend((0..=2 * (p as i64 - 2)).map(|j| (all.clone(), 2 + j)));
        if multiset(&g) != factor_multiset(expected) {
            return Err(format!("generic2d:{p} gave {g}"));
        }
        if took >= Duration::from_secs(1) {
            return Err(format!("generic2d:{p} took {took:?}"));
        }
        worst = worst.max(took);
    }
    Ok(format!("p = 3..6 exact, slowest {worst:?}"))
}

/// Product over subsets `I` with `|I| >= 2` of
/// `prod_{k=0}^{(|I|-1)(|I|-2)} (sum_{i<j in I} s_ij + |I| - 1 + k)`,
/// with `s_ij` located through the hyperplane labels.
fn braid_expansion(a: &Arrangement, n: usize) -> Vec<(Vec<usize>, i64)> {
    let position = |i: usize, j: usize| {
        let want = format!("x{i}-x{j}");
        (0..a.len()).find(|&k| a.label(k) == want).unwrap() + 1
    };
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let set: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let m = set.len() as i64;
        if m < 2 {
            continue;
        }
        let mut support = Vec::new();
        for (x, &i) in set.iter().enumerate() {
            for &j in &set[x + 1..] {
                support.push(position(i, j));
            }
        }
        for k in 0..=(m - 1) * (m - 2) {
            out.push((support.clone(), m - 1 + k));
        }
    }
    out
}

fn braid_products() -> Check {
    let mut notes = Vec::new();
    for n in 3..=5usize {
        let a = family(Family::Braid(n));
        let (g, took) = timed_generator(&a)?;
        if multiset(&g) != factor_multiset(braid_expansion(&a, n)) {
            return Err(format!("braid:{n} gave {g}"));
        }
        if n == 5 {
            let flats = intersection_lattice(&a).len();
            if flats != 52 {
                return Err(format!("braid:5 has {flats} flats"));
            }
            if took >= Duration::from_secs(5) {
                return Err(format!("braid:5 took {took:?}"));
            }
        }
        notes.push(format!("n={n} {took:?}"));
    }
    Ok(notes.join(", "))
}

fn symmetry() -> Check {
    let corpus = corpus_with_localizations();
    let mut failures = Vec::new();
    for (name, a) in &corpus {
        let verdict = freeness(a, DEFAULT_DEPTH_LIMIT);
        match bernstein_generator(a, &verdict) {
            Ok(g) => {
                if let Err(e) = symmetry_check(&g) {
                    failures.push(format!("{name}: {e}"));
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    if failures.is_empty() {
        Ok(format!("{} generators symmetric", corpus.len()))
    } else {
        Err(format!("{} failures, first: {}", failures.len(), failures[0]))
    }
}

fn characteristic_polynomials() -> Check {
    for n in 2..=5usize {
        let roots: Vec<i64> = (0..n as i64).collect();
        let chi = char_poly(&family(Family::Braid(n)));
        if chi != CharPoly::from_roots(&roots) {
            return Err(format!("braid:{n} gave {chi}"));
        }
    }
    let mut checked = 0;
    let mut rng = rand::rngs::StdRng::seed_from_u64(4);
    let mut cases: Vec<Arrangement> = corpus_families().into_iter().map(family).collect();
    cases.extend((0..20).map(|_| random_arrangement(&mut rng, 4, 10)));
    for a in &cases {
        let lattice = intersection_lattice(a);
        let ours: BTreeSet<(Vec<usize>, usize)> =
            lattice.flats().iter().map(|f| (f.indices.clone(), f.codim)).collect();
        if ours != brute_flats(a) || ours.len() != lattice.len() {
            return Err(format!("flats differ for {a:?}"));
        }
        if lattice.characteristic_polynomial().coeffs() != whitney_char_poly(a).as_slice() {
            return Err(format!("chi differs for {a:?}"));
        }
        checked += 1;
    }
    Ok(format!("braid n <= 5 exact, {checked} arrangements match subset enumeration"))
}

fn freeness_certificates() -> Check {
    let mut cases: Vec<Family> = (1..=5).map(Family::Boolean).collect();
    cases.extend((1..=6).map(Family::Generic2d));
    cases.extend((2..=5).map(Family::Braid));
    for f in cases {
        let v = freeness(&family(f), DEFAULT_DEPTH_LIMIT);
        let chain = v.inductive_chain().ok_or_else(|| format!("{f}: {:?} without inductive chain", v.outcome))?;
        if v.outcome != Outcome::Free || !chain.verify() {
            return Err(format!("{f}: chain does not verify"));
        }
    }
    for n in 2..=4usize {
        let basis: Vec<Derivation> = (0..n as u32).map(|k| Derivation::power_sum(n, k)).collect();
        let outcome = saito_check(&family(Family::Braid(n)), &basis).map_err(|e| e.to_string())?;
        if !outcome.accepted || !outcome.scalar.abs().is_one() {
            return Err(format!("braid:{n} Saito scalar {}", outcome.scalar));
        }
    }
    let bad = Arrangement::from_integers(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap();
    let v = freeness(&bad, DEFAULT_DEPTH_LIMIT);
    if v.outcome != Outcome::NotFree || v.evidence_for_not_free.is_none() {
        return Err(format!("x,y,z,x+y+z gave {:?}", v.outcome));
    }
    Ok("inductive chains for 15 families, Saito c = +-1 for braid n <= 4, x+y+z not free".into())
}

fn slope_sets() -> Check {
    let a = family(Family::Braid(3));
    let s = slopes(&a, &freeness(&a, DEFAULT_DEPTH_LIMIT)).map_err(|e| e.to_string())?;
    if s.slopes != vec![vec![1], vec![2], vec![3], vec![1, 2, 3]] {
        return Err(format!("braid:3 slopes {:?}", s.slopes));
    }
    let corpus = corpus_with_localizations();
    for (name, a) in &corpus {
        let verdict = freeness(a, DEFAULT_DEPTH_LIMIT);
        let s = slopes(a, &verdict).map_err(|e| format!("{name}: {e}"))?;
        let g = bernstein_generator(a, &verdict).map_err(|e| format!("{name}: {e}"))?;
        let from_slopes: BTreeSet<Vec<usize>> = s.slopes.into_iter().collect();
        let from_generator: BTreeSet<Vec<usize>> = g.supports().into_iter().collect();
        if from_slopes != from_generator {
            return Err(format!("{name}: slopes and generator supports differ"));
        }
    }
    Ok(format!("braid:3 exact, supports agree on {} arrangements", corpus.len()))
}

fn decomposition() -> Check {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for k in 0..50 {
        let a = random_arrangement(&mut rng, 4, 8);
        let d = irreducible_components(&a).map_err(|e| e.to_string())?;
        if d.blocks != bipartition_blocks(&a) {
            return Err(format!("random #{k}: {:?} vs {:?}", d.blocks, bipartition_blocks(&a)));
        }
        if d.e0 != a.dim() - rank_of(&vectors(&a)) {
            return Err(format!("random #{k}: e0 {}", d.e0));
        }
    }
    let corpus = corpus_with_localizations();
    for (name, a) in &corpus {
        if !freeness(a, DEFAULT_DEPTH_LIMIT).is_free() {
            return Err(format!("{name} not certified free"));
        }
        let single = irreducible_components(a).unwrap().is_irreducible();
        let ones = exponents(a).map_err(|e| e.to_string())?.count(1);
        if single != (ones == 1) {
            return Err(format!("{name}: single block {single}, exponent 1 occurs {ones} times"));
        }
    }
    Ok(format!("50 random agree, e1 criterion holds on {} free arrangements", corpus.len()))
}

fn boolean_products() -> Check {
    let line = Arrangement::from_integers(1, &[&[1]]).unwrap();
    let single = bernstein_generator(&line, &freeness(&line, DEFAULT_DEPTH_LIMIT)).map_err(|e| e.to_string())?;
    for n in 1..=5usize {
        let renamed: Vec<LinearFactor> = (1..=n)
            .flat_map(|i| single.factors().iter().map(move |f| LinearFactor::new(f.support.iter().map(|_| i).collect(), f.constant)))
            .collect();
        let product = FactoredSPolynomial::new(renamed, n);
        let (g, _) = timed_generator(&family(Family::Boolean(n)))?;
        if g != product {
            return Err(format!("boolean:{n} gave {g}, expected {product}"));
        }
    }
    Ok(format!("single hyperplane gives {single}; boolean n <= 5 match"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 generic plane lines", generic_plane_lines),
        ("2 braid products", braid_products),
        ("3 symmetry s -> -s-2", symmetry),
        ("4 characteristic polynomial", characteristic_polynomials),
        ("5 freeness certificates", freeness_certificates),
        ("6 slopes", slope_sets),
        ("7 decomposition", decomposition),
        ("8 product multiplicativity", boolean_products),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
