//! Intersection lattice of the braid arrangement in Q^4, with Möbius values
//! and the characteristic polynomial.
//!
//!     cargo run --example lattice -- 4

use bideal::arrangement::{Arrangement, Family};
use bideal::lattice::IntersectionLattice;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let a = Arrangement::family(Family::Braid(n)).expect("n >= 2");
    println!("{a}");

    let lattice = IntersectionLattice::new(&a);
    println!("{} flats", lattice.len());
    for flat in lattice.flats() {
        let names: Vec<String> = flat.indices.iter().map(|&i| a.label(i - 1)).collect();
        println!("  codim {}  mu {:>3}  [{}]", flat.codim, flat.mobius, names.join(", "));
    }

    let chi = lattice.characteristic_polynomial();
    println!("chi(t) = {chi}");
    println!("roots  = {:?}", chi.nonnegative_integer_roots());
}
