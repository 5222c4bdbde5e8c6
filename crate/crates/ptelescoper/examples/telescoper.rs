//! Construct a minimal-order telescoper for binomial(t, x)^3.
//!
//! The sequence binomial(t, x)^3 lives in a rank-1 module with
//!   S_x . 1 = (t - x)^3 / (1 + x)^3,
//!   S_t . 1 = (1 + t)^3 / (1 + t - x)^3.
//! Summing the telescoped identity over x recovers the well-known
//! recurrence for the Franel numbers sum_x binomial(t, x)^3.
//!
//! Run with: cargo run --example telescoper

use ptelescoper::problem::{format_operator, parse_problem_str};
use ptelescoper::reduction::ReductionContext;
use ptelescoper::telescope::{compute_telescoper, verify_telescoper};

const BINOMIAL_CUBED: &str = r#"
r = 1
e = (1 + x)^3
M = [[(t - x)^3]]
e_t = (1 + t - x)^3
M_t = [[(1 + t)^3]]
f_num = [1]
f_den = 1
"#;

fn main() -> ptelescoper::Result<()> {
    let spec = parse_problem_str(BINOMIAL_CUBED)?;
    let (sys, f) = spec.build()?;
    let mut ctx = ReductionContext::new(&sys);

    let tel = compute_telescoper(&mut ctx, &f, None)?;
    println!("telescoper of order {}:", tel.order);
    println!("  {}", format_operator(&tel.coeffs));
    println!("operator form: sum of c_l(t) S_t^l for l = 0..{}", tel.order);
    for (l, c) in tel.coeffs.iter().enumerate() {
        println!("  c_{l} = {c}");
    }

    // The certificate g satisfies T . f = S_x(g) - g; re-check it exactly.
    let ok = verify_telescoper(&sys, &tel.coeffs, &f, &tel.certificate);
    println!("exact verification of T . f = Delta_x(g): {}", if ok { "ok" } else { "FAILED" });
    Ok(())
}
