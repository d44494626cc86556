//! Saito's criterion on the power-sum derivations of the braid arrangement
//! and the resulting annihilator operators.

use bideal::arrangement::{Arrangement, Family};
use bideal::structure::{annihilator_presentation, saito_check, Derivation};

fn main() {
    let n = 3;
    let a = Arrangement::family(Family::Braid(n)).unwrap();
    let basis: Vec<Derivation> = (0..n as u32).map(|k| Derivation::power_sum(n, k)).collect();
    for d in &basis {
        println!("theta = {d}");
    }

    let outcome = saito_check(&a, &basis).unwrap();
    println!("accepted: {}, det = {} * Q, degrees {:?}", outcome.accepted, outcome.scalar, outcome.degrees);

    for op in annihilator_presentation(&a, &basis).unwrap() {
        println!("  {op}");
    }

    // Dropping the Euler field leaves too few derivations.
    let err = saito_check(&a, &basis[..2]).unwrap_err();
    println!("with two fields: {err}");
}
