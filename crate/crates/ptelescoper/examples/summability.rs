//! Abramov–Petkovšek reduction and summability certificates.
//!
//! An element f is summable when f = Delta_x(g) = S_x(g) - g for some g in
//! the same module. The reduction decomposes any f as Delta_x(g) plus a
//! remainder with shift-free denominator; f is summable exactly when that
//! remainder vanishes (including its part at infinity).
//!
//! Run with: cargo run --example summability

use ptelescoper::problem::parse_problem_str;
use ptelescoper::reduction::ReductionContext;
use ptelescoper::system::ModuleElement;

const TELESCOPING: &str = r#"
# 1/(x*(x + 1)) = 1/x - 1/(x + 1) telescopes: it equals Delta_x(-1/x).
r = 1
e = 1
M = [[1]]
e_t = 1
M_t = [[1]]
f_num = [1]
f_den = x*(x + 1)
"#;

const HARMONIC: &str = r#"
# 1/x is not summable (its indefinite sum is the harmonic number H_x,
# which is not a rational function).
r = 1
e = 1
M = [[1]]
e_t = 1
M_t = [[1]]
f_num = [1]
f_den = x
"#;

fn show(elem: &ModuleElement) -> String {
    let nums: Vec<String> = elem.a.iter().map(|p| p.to_string()).collect();
    format!("({}) / ({})", nums.join(", "), elem.u)
}

fn main() -> ptelescoper::Result<()> {
    for (label, src) in [("1/(x*(x + 1))", TELESCOPING), ("1/x", HARMONIC)] {
        let spec = parse_problem_str(src)?;
        let (sys, f) = spec.build()?;
        let mut ctx = ReductionContext::new(&sys);

        println!("input f = {label}");
        match ctx.is_summable(&f)? {
            Some(g) => {
                println!("  summable with certificate g = {}", show(&g));
                // Sanity check the certificate: S_x(g) - g must equal f.
                let back = sys.delta_x(&g);
                assert_eq!(back, f, "certificate must reproduce f exactly");
            }
            None => {
                let (g, residual) = ctx.ap_reduce(&f)?;
                println!("  not summable");
                println!("  reduced form: f = Delta_x(g) + h with");
                println!("    g = {}", show(&g));
                println!("    h = {}", show(&residual));
            }
        }
        println!();
    }
    Ok(())
}
