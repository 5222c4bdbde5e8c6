//! System diagnostics for a rank-2 shift module.
//!
//! Before reducing or telescoping, the two shift actions must commute
//! (compatibility) and the presentation should satisfy the suitability
//! properties that make reductions terminate: e and det(M) shift-free in x,
//! no cross x-shift between their factors, and integer-linear determinant
//! data. This example runs those checks on a rank-2 module for the
//! sequence F = x + t^2 + 1/x!, then reports the reduction data at
//! infinity and an a-priori order bound for a telescoper.
//!
//! Run with: cargo run --example diagnostics

use ptelescoper::problem::parse_problem_str;
use ptelescoper::reduction::ReductionContext;
use ptelescoper::telescope::order_bound;

const RANK2: &str = r#"
r = 2
e = (x + 2)*(t^2 - 1)^2
M = [[(x + t^2)*(x + 2)*(t^2 - 1), (x^2 + (t^2 + 1)*x + 1)*(x + 2)*(t^2 - 1)^2], [-x - 1, -(x^2 + 2*x - t^2 + 2)*(t^2 - 1)]]
e_t = t*(t + 2)*(t^2 - 1)
M_t = [[t^2*(t + 2)^2, t*(x + 1)*(2*t + 1)*(t + 2)*(t^2 - 1)], [0, (t^2 - 1)^2]]
orbit_reps = [x + 2, x^2 + (t^2 + 1)*x + 1]
f_num = [1, 0]
f_den = x + t
"#;

fn main() -> ptelescoper::Result<()> {
    let spec = parse_problem_str(RANK2)?;
    let (sys, f) = spec.build()?;

    let (compatible, witness) = sys.check_compatibility();
    println!("compatibility sigma_t(A_x) A_t = sigma_x(A_t) A_x: {compatible}");
    if let Some((i, j)) = witness {
        println!("  first failing entry: ({i}, {j})");
    }

    let report = sys.check_suitable_properties()?;
    println!("suitability:");
    println!("  e shift-free in x:          {}", report.e_shift_free);
    println!("  det(M) shift-free in x:     {}", report.det_m_shift_free);
    println!("  cross shift-gcd trivial:    {}", report.cross_gcd_trivial);
    println!("  determinant integer-linear: {}", report.integer_linear);

    println!("inverse action denominator e~ = {}", sys.e_tilde);
    println!("orbit representatives: {:?}", sys.orbit_reps.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    println!("infinity exponents tau = {:?}", sys.tau_exponents);

    let mut ctx = ReductionContext::new(&sys);
    let nv = ctx.nv_info();
    println!(
        "reduction at infinity: window x^{}..x^{}, dim N_V = {}",
        nv.mu, nv.delta, nv.dim
    );

    let (bound, b) = order_bound(&mut ctx, &f)?;
    println!("order bound for a telescoper of f = (1, 0) W / (x + t): {bound}");
    println!("  bounding polynomial b = {b}");
    Ok(())
}
