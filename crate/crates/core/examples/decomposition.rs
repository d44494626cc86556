//! Splitting an arrangement into irreducible blocks.

use bideal::arrangement::Arrangement;
use bideal::structure::{exponents, irreducible_components};

fn main() {
    // x, y+z, y-z, y+2z in Q^4: the line x = 0 is independent of the three
    // planes through y = z = 0, and w appears in no form at all.
    let a = Arrangement::from_integers(4, &[&[1, 0, 0, 0], &[0, 1, 1, 0], &[0, 1, -1, 0], &[0, 1, 2, 0]]).unwrap();
    let d = irreducible_components(&a).unwrap();
    println!("{a}");
    println!("blocks {:?}, e0 = {}", d.blocks, d.e0);
    println!("irreducible: {}, essential: {}", d.is_irreducible(), d.is_essential());

    let (essential, e0) = a.essentialize();
    println!("essentialized to dimension {} (dropped {e0})", essential.dim());
    println!("exponents {}", exponents(&a).unwrap());
}
