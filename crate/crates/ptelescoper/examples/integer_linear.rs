//! Integer-linear structure of bivariate denominators.
//!
//! An irreducible p(t, x) is integer-linear when p = P(m*t + n*x) for a
//! univariate P and integers m, n. The decomposition below splits a
//! denominator into integer-linear orbit classes plus a "stem" collecting
//! everything else; a nontrivial stem on a reduced remainder is exactly the
//! obstruction to the existence of a telescoper.
//!
//! Run with: cargo run --example integer_linear

use ptelescoper::shift::{integer_linear_decompose, is_spread_x, shift_equivalent_x};
use ptelescoper::textio::parse_poly;

fn main() -> ptelescoper::Result<()> {
    let inputs = [
        "(x + t)*(x + t + 3)",             // one orbit, two members
        "(2*t + 3*x + 1)*(x - t)",         // two directions: (2,3) and (-1,1)
        "(x^2 + t)*(x + t)^2",             // mixed: stem x^2 + t survives
        "x^2 + t*x + 1",                   // irreducible, not integer-linear
    ];

    for src in inputs {
        let q = parse_poly(src)?;
        let dec = integer_linear_decompose(&q)?;
        println!("q = {src}");
        println!("  integer-linear: {}", dec.is_integer_linear());
        for class in &dec.classes {
            println!(
                "  class: direction ({}, {}), representative {}, multiplicities {}",
                class.dir.m, class.dir.n, class.rep, class.xi
            );
        }
        if !dec.is_integer_linear() {
            println!("  stem: {}", dec.non_linear_part);
        }
        println!();
    }

    // Shift equivalence in x underpins the orbit grouping: q = sigma_x^k(p).
    let p = parse_poly("x + t")?;
    let q = parse_poly("x + t + 5")?;
    println!(
        "shift_equivalent_x(x + t, x + t + 5) = {:?}",
        shift_equivalent_x(&p, &q)
    );

    // A polynomial is x-spread when no two of its factors are related by a
    // nonzero x-shift; spreadness refines the summability diagnostics.
    for src in ["(x + t)*(x + t + 3)", "(x + t)*(x - t)"] {
        let u = parse_poly(src)?;
        println!("is_spread_x({src}) = {}", is_spread_x(&u)?);
    }
    Ok(())
}
