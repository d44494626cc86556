//! Slopes of the characteristic variety: one hyperplane in s-space per
//! irreducible localization.

use bideal::arrangement::{Arrangement, Family};
use bideal::bernstein::slopes;
use bideal::structure::{freeness, DEFAULT_DEPTH_LIMIT};

fn main() {
    for family in [Family::Braid(3), Family::Generic2d(4), Family::Boolean(3)] {
        let a = Arrangement::family(family).unwrap();
        let s = slopes(&a, &freeness(&a, DEFAULT_DEPTH_LIMIT)).unwrap();
        println!("{family}:");
        for line in s.to_string().lines() {
            println!("  {line}");
        }
    }
}
