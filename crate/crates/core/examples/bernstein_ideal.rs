//! Generator of the Bernstein ideal of a free arrangement, plus the bounds
//! and checks that surround it.
//!
//!     cargo run --example bernstein_ideal -- generic2d:4

use bideal::arrangement::{Arrangement, Family};
use bideal::bernstein::{
    bernstein_generator, evident_multiple, lower_bound_irreducible, specialize, symmetry_check, SpecializeMode,
};
use bideal::structure::{freeness, is_irreducible, DEFAULT_DEPTH_LIMIT};

fn main() {
    let family: Family = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "braid:4".into())
        .parse()
        .expect("family such as braid:4");
    let a = Arrangement::family(family).unwrap();

    let verdict = freeness(&a, DEFAULT_DEPTH_LIMIT);
    let b = match bernstein_generator(&a, &verdict) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    println!("b = {b}");
    println!("{} factors, reduced: {}", b.degree(), b.is_reduced());
    println!("symmetric under s -> -s-2 with sign {}", symmetry_check(&b).unwrap());
    println!("s_i = s: {}", specialize(&b, SpecializeMode::AllEqual));

    if is_irreducible(&a) {
        let low = lower_bound_irreducible(&a).unwrap();
        println!("lower bound {low} divides b: {}", low.divides(&b));
    }
    let multiple = evident_multiple(&a, None);
    println!("b divides the evident multiple ({} factors): {}", multiple.degree(), b.divides(&multiple));
}
