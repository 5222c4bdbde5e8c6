//! Decide whether a telescoper exists without constructing one.
//!
//! The decision procedure reduces the input to a remainder supported on a
//! shift-free denominator and inspects the stem (the non-integer-linear
//! part) of that denominator: a telescoper of type (S_t; S_x) exists if and
//! only if the stem is trivial.
//!
//! Run with: cargo run --example existence

use ptelescoper::problem::parse_problem_str;
use ptelescoper::reduction::ReductionContext;
use ptelescoper::telescope::decide_existence;

const EXISTS: &str = r#"
# Rational input (x^2 + t)/(x - t)^2 over the trivial rank-1 module.
r = 1
e = 1
M = [[1]]
e_t = 1
M_t = [[1]]
f_num = [x^2 + t]
f_den = (x - t)^2
"#;

const NOT_EXISTS: &str = r#"
# Rational input 1/(x^2 + t): the denominator is shift-free but not
# integer-linear, so no telescoper exists.
r = 1
e = 1
M = [[1]]
e_t = 1
M_t = [[1]]
f_num = [1]
f_den = x^2 + t
"#;

fn main() -> ptelescoper::Result<()> {
    for (label, src) in [("(x^2 + t)/(x - t)^2", EXISTS), ("1/(x^2 + t)", NOT_EXISTS)] {
        let spec = parse_problem_str(src)?;
        let (sys, f) = spec.build()?;
        let mut ctx = ReductionContext::new(&sys);
        let verdict = decide_existence(&mut ctx, &f)?;

        println!("input f = {label}");
        if verdict.exists {
            println!("  telescoper exists");
        } else {
            println!("  no telescoper exists");
            println!("  obstruction (stem of the residual denominator): {}", verdict.stem);
        }
        println!("  residual denominator: {}", verdict.residual.u);
        println!();
    }
    Ok(())
}
