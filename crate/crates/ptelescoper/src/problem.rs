//! Problem files, command dispatch and reporting: the line-oriented
//! `key = value` format describing a shift system plus a module
//! element, the seven commands operating on it, and machine/human
//! report rendering.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use num::Zero;

use crate::error::{Error, Result};
use crate::poly::{rat_int, Poly, Rat, Var};
use crate::qpoly::RatFunT;
use crate::reduction::ReductionContext;
use crate::system::{build_system, ModuleElement, ShiftSystem};
use crate::telescope::{
    apply_operator, compute_telescoper, decide_existence, is_proper, stem, verify_telescoper,
};
use crate::textio::{format_ratfun, parse_poly};

#[derive(Debug, Clone)]
pub struct ProblemSpec {
    pub r: usize,
    pub e: Poly,
    pub m: Vec<Vec<Poly>>,
    pub e_t: Poly,
    pub m_t: Vec<Vec<Poly>>,
    pub orbit_reps: Option<Vec<Poly>>,
    pub tau: Option<Vec<i64>>,
    pub f_num: Vec<Poly>,
    pub f_den: Poly,
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// Reposition a parse error from a single-line value onto its location
/// in the problem file.
fn reline(e: Error, line: usize, col_off: usize) -> Error {
    match e {
        Error::Parse { col, msg, .. } => perr(line, col + col_off, msg),
        other => other,
    }
}

/// Split "a, b, c" at top-level commas (parentheses and brackets nest).
fn split_top(s: &str) -> Vec<&str> {
    let mut out = vec![];
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

fn parse_list(value: &str, line: usize, col_off: usize) -> Result<Vec<Poly>> {
    let inner = value
        .strip_prefix('[')
        .and_then(|v| v.strip_suffix(']'))
        .ok_or_else(|| perr(line, col_off + 1, "expected a [...] list"))?;
    split_top(inner)
        .into_iter()
        .map(|s| parse_poly(s).map_err(|e| reline(e, line, col_off)))
        .collect()
}

fn parse_matrix(value: &str, line: usize, col_off: usize) -> Result<Vec<Vec<Poly>>> {
    let inner = value
        .strip_prefix('[')
        .and_then(|v| v.strip_suffix(']'))
        .ok_or_else(|| perr(line, col_off + 1, "expected a [[...],[...]] matrix"))?;
    split_top(inner)
        .into_iter()
        .map(|row| parse_list(row, line, col_off))
        .collect()
}

pub fn parse_problem_str(src: &str) -> Result<ProblemSpec> {
    let mut r: Option<usize> = None;
    let mut e = None;
    let mut m = None;
    let mut e_t = None;
    let mut m_t = None;
    let mut orbit_reps = None;
    let mut tau: Option<Vec<i64>> = None;
    let mut f_num = None;
    let mut f_den = None;
    for (i, raw) in src.lines().enumerate() {
        let lineno = i + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let eq = line
            .find('=')
            .ok_or_else(|| perr(lineno, 1, "expected `key = value`"))?;
        let key = line[..eq].trim();
        let value = line[eq + 1..].trim();
        let col_off = eq + 1 + (line[eq + 1..].len() - line[eq + 1..].trim_start().len());
        if value.is_empty() {
            return Err(perr(lineno, col_off + 1, format!("empty value for `{key}`")));
        }
        match key {
            "r" => {
                let v: usize = value
                    .parse()
                    .map_err(|_| perr(lineno, col_off + 1, "`r` must be a positive integer"))?;
                if v == 0 {
                    return Err(perr(lineno, col_off + 1, "`r` must be a positive integer"));
                }
                r = Some(v);
            }
            "e" => e = Some(parse_poly(value).map_err(|er| reline(er, lineno, col_off))?),
            "e_t" => e_t = Some(parse_poly(value).map_err(|er| reline(er, lineno, col_off))?),
            "M" => m = Some(parse_matrix(value, lineno, col_off)?),
            "M_t" => m_t = Some(parse_matrix(value, lineno, col_off)?),
            "orbit_reps" => orbit_reps = Some(parse_list(value, lineno, col_off)?),
            "tau" => {
                let inner = value
                    .strip_prefix('[')
                    .and_then(|v| v.strip_suffix(']'))
                    .ok_or_else(|| perr(lineno, col_off + 1, "expected a [...] list"))?;
                let parsed: std::result::Result<Vec<i64>, _> =
                    split_top(inner).into_iter().map(|s| s.parse()).collect();
                tau = Some(parsed.map_err(|_| {
                    perr(lineno, col_off + 1, "`tau` entries must be integers")
                })?);
            }
            "f_num" => f_num = Some(parse_list(value, lineno, col_off)?),
            "f_den" => f_den = Some(parse_poly(value).map_err(|er| reline(er, lineno, col_off))?),
            other => {
                return Err(perr(lineno, 1, format!("unknown key `{other}`")));
            }
        }
    }
    let r = r.ok_or_else(|| perr(0, 0, "missing key `r`"))?;
    let spec = ProblemSpec {
        r,
        e: e.ok_or_else(|| perr(0, 0, "missing key `e`"))?,
        m: m.ok_or_else(|| perr(0, 0, "missing key `M`"))?,
        e_t: e_t.ok_or_else(|| perr(0, 0, "missing key `e_t`"))?,
        m_t: m_t.ok_or_else(|| perr(0, 0, "missing key `M_t`"))?,
        orbit_reps,
        tau,
        f_num: f_num.ok_or_else(|| perr(0, 0, "missing key `f_num`"))?,
        f_den: f_den.ok_or_else(|| perr(0, 0, "missing key `f_den`"))?,
    };
    if spec.m.len() != r
        || spec.m.iter().any(|row| row.len() != r)
        || spec.m_t.len() != r
        || spec.m_t.iter().any(|row| row.len() != r)
    {
        return Err(Error::DimensionMismatch(format!(
            "M and M_t must be {r}x{r} matrices"
        )));
    }
    if spec.f_num.len() != r {
        return Err(Error::DimensionMismatch(format!(
            "f_num must have {r} entries"
        )));
    }
    Ok(spec)
}

pub fn parse_problem(path: &Path) -> Result<ProblemSpec> {
    parse_problem_str(&std::fs::read_to_string(path)?)
}

impl ProblemSpec {
    pub fn build(&self) -> Result<(ShiftSystem, ModuleElement)> {
        let sys = build_system(
            self.r,
            self.e.clone(),
            self.m.clone(),
            self.e_t.clone(),
            self.m_t.clone(),
            self.orbit_reps.clone(),
            self.tau.clone(),
        )?;
        let f = sys.element(self.f_num.clone(), self.f_den.clone())?;
        Ok((sys, f))
    }
}

/// Operator file: `coeffs = [c_0, c_1, ...]`, constant term first, each
/// entry a polynomial or `(num)/(den)` rational function in t.
pub fn parse_operator_str(src: &str) -> Result<Vec<RatFunT>> {
    let mut coeffs = None;
    for (i, raw) in src.lines().enumerate() {
        let lineno = i + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let eq = line
            .find('=')
            .ok_or_else(|| perr(lineno, 1, "expected `coeffs = [...]`"))?;
        let key = line[..eq].trim();
        if key != "coeffs" {
            return Err(perr(lineno, 1, format!("unknown key `{key}`")));
        }
        let value = line[eq + 1..].trim();
        let inner = value
            .strip_prefix('[')
            .and_then(|v| v.strip_suffix(']'))
            .ok_or_else(|| perr(lineno, eq + 2, "expected a [...] list"))?;
        let mut out = vec![];
        for part in split_top(inner) {
            let (num, den) = crate::textio::parse_ratfun(part)?;
            let nq = num
                .to_qpoly(Var::T)
                .ok_or_else(|| perr(lineno, eq + 2, "coefficients must not involve x"))?;
            let dq = den
                .to_qpoly(Var::T)
                .ok_or_else(|| perr(lineno, eq + 2, "coefficients must not involve x"))?;
            out.push(RatFunT::new(nq, dq));
        }
        coeffs = Some(out);
    }
    coeffs.ok_or_else(|| perr(0, 0, "missing key `coeffs`"))
}

pub fn parse_operator(path: &Path) -> Result<Vec<RatFunT>> {
    parse_operator_str(&std::fs::read_to_string(path)?)
}

pub fn format_operator(coeffs: &[RatFunT]) -> String {
    let parts: Vec<String> = coeffs.iter().map(format_coeff).collect();
    format!("coeffs = [{}]\n", parts.join(", "))
}

fn format_coeff(c: &RatFunT) -> String {
    format_ratfun(
        &Poly::from_qpoly(Var::T, c.num()),
        &Poly::from_qpoly(Var::T, c.den()),
    )
}

fn format_element(f: &ModuleElement) -> Vec<String> {
    let mut out: Vec<String> = f
        .a
        .iter()
        .map(|p| format_ratfun(p, &Poly::one()))
        .collect();
    out.push(format_ratfun(&f.u, &Poly::one()));
    out
}

#[derive(Debug, Clone)]
pub struct Flags {
    pub max_order: Option<usize>,
    pub expect_exists: bool,
    pub json: bool,
    pub seed: Option<u64>,
    pub operator_path: Option<std::path::PathBuf>,
}

impl Default for Flags {
    fn default() -> Self {
        Flags {
            max_order: None,
            expect_exists: false,
            json: false,
            seed: None,
            operator_path: None,
        }
    }
}

/// Result of one command on one problem, in both renderings.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub command: String,
    pub problem: String,
    pub verdict: String,
    pub telescoper: Vec<String>,
    /// numerator components followed by the common denominator
    pub certificate: Vec<String>,
    pub stem: Option<String>,
    pub diagnostics: Vec<(String, bool)>,
    pub warnings: Vec<String>,
    pub timing_ms: u128,
    /// set when --expect-exists is violated or verification fails
    pub expectation_violated: bool,
}

fn json_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

impl Report {
    pub fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}: {}", self.command, self.problem, self.verdict);
        if let Some(s) = &self.stem {
            let _ = writeln!(out, "  stem: {}", s);
        }
        if !self.telescoper.is_empty() {
            let _ = writeln!(out, "  telescoper: [{}]", self.telescoper.join(", "));
        }
        if !self.certificate.is_empty() {
            let n = self.certificate.len() - 1;
            let _ = writeln!(
                out,
                "  certificate: ({}) / ({})",
                self.certificate[..n].join(", "),
                self.certificate[n]
            );
        }
        for (name, ok) in &self.diagnostics {
            let _ = writeln!(out, "  {}: {}", name, if *ok { "pass" } else { "fail" });
        }
        for w in &self.warnings {
            let _ = writeln!(out, "  warning: {}", w);
        }
        let _ = writeln!(out, "  time: {} ms", self.timing_ms);
        out
    }

    /// Single-line machine-readable record with stable key order.
    pub fn machine(&self) -> String {
        let list = |items: &[String]| {
            let quoted: Vec<String> = items
                .iter()
                .map(|s| format!("\"{}\"", json_escape(s)))
                .collect();
            format!("[{}]", quoted.join(","))
        };
        let diags: Vec<String> = self
            .diagnostics
            .iter()
            .map(|(k, v)| format!("\"{}\":{}", json_escape(k), v))
            .collect();
        format!(
            "{{\"command\":\"{}\",\"problem\":\"{}\",\"verdict\":\"{}\",\"stem\":{},\"telescoper\":{},\"certificate\":{},\"diagnostics\":{{{}}},\"warnings\":{},\"timing_ms\":{}}}",
            json_escape(&self.command),
            json_escape(&self.problem),
            json_escape(&self.verdict),
            match &self.stem {
                Some(s) => format!("\"{}\"", json_escape(s)),
                None => "null".to_string(),
            },
            list(&self.telescoper),
            list(&self.certificate),
            diags.join(","),
            list(&self.warnings),
            self.timing_ms
        )
    }
}

/// Cheap randomized pre-check of T f = Delta_x(g): evaluate both module
/// elements componentwise at random integer points.
fn numeric_precheck(
    sys: &ShiftSystem,
    lhs: &ModuleElement,
    rhs: &ModuleElement,
    seed: u64,
) -> bool {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let eval = |h: &ModuleElement, i: usize, t0: &Rat, x0: &Rat| -> Option<Rat> {
        let den = h.u.eval(t0, x0);
        if den.is_zero() {
            return None;
        }
        Some(h.a[i].eval(t0, x0) / den)
    };
    let mut checked = 0;
    let mut tries = 0;
    while checked < 5 && tries < 200 {
        tries += 1;
        let t0 = rat_int(rng.gen_range(10..100));
        let x0 = rat_int(rng.gen_range(10..100));
        let mut all = true;
        for i in 0..sys.r {
            match (eval(lhs, i, &t0, &x0), eval(rhs, i, &t0, &x0)) {
                (Some(a), Some(b)) => {
                    if a != b {
                        return false;
                    }
                }
                _ => {
                    all = false;
                    break;
                }
            }
        }
        if all {
            checked += 1;
        }
    }
    true
}

pub fn run_command(cmd: &str, path: &Path, flags: &Flags) -> Result<Report> {
    let start = Instant::now();
    let spec = parse_problem(path)?;
    let (sys, f) = spec.build()?;
    let mut report = Report {
        command: cmd.to_string(),
        problem: path.display().to_string(),
        ..Report::default()
    };
    for w in &sys.warnings {
        report.warnings.push(w.clone());
    }
    let mut ctx = ReductionContext::new(&sys);
    match cmd {
        "check" => {
            let (compat, _) = sys.check_compatibility();
            let suit = sys.check_suitable_properties()?;
            report.diagnostics = vec![
                ("compatibility".to_string(), compat),
                ("e_shift_free".to_string(), suit.e_shift_free),
                ("det_m_shift_free".to_string(), suit.det_m_shift_free),
                ("cross_gcd_trivial".to_string(), suit.cross_gcd_trivial),
                ("integer_linear".to_string(), suit.integer_linear),
            ];
            report.verdict = if compat && suit.all() {
                "ok".to_string()
            } else {
                "unsuitable".to_string()
            };
        }
        "reduce" => {
            let fd = ctx.full_decompose(&f)?;
            let proper = fd.p.iter().all(|p| p.is_zero());
            let at_infinity = fd.q.is_empty();
            report.verdict = if proper && at_infinity {
                "summable".to_string()
            } else {
                format!(
                    "reduced (finite remainder: {}, infinity remainder: {})",
                    if proper { "zero" } else { "nonzero" },
                    if at_infinity { "zero" } else { "nonzero" }
                )
            };
            report.stem = Some(format_ratfun(&fd.d, &Poly::one()));
            report.certificate = format_element(&fd.certificate_g);
        }
        "summable" => match ctx.is_summable(&f)? {
            Some(g) => {
                report.verdict = "summable".to_string();
                report.certificate = format_element(&g);
            }
            None => report.verdict = "not_summable".to_string(),
        },
        "stem" => {
            let s = stem(&f)?;
            report.verdict = if s.stem.is_one() {
                "proper".to_string()
            } else {
                "not_proper".to_string()
            };
            report.stem = Some(format_ratfun(&s.stem, &Poly::one()));
            let _ = is_proper(&f)?;
        }
        "existence" => {
            let ex = decide_existence(&mut ctx, &f)?;
            report.verdict = if ex.exists {
                "exists".to_string()
            } else {
                "not_exists".to_string()
            };
            report.stem = Some(format_ratfun(&ex.stem, &Poly::one()));
            if flags.expect_exists && !ex.exists {
                report.expectation_violated = true;
            }
        }
        "telescope" => match compute_telescoper(&mut ctx, &f, flags.max_order) {
            Ok(tel) => {
                report.verdict = format!("telescoper of order {}", tel.order);
                report.telescoper = tel.coeffs.iter().map(|c| format_coeff(c)).collect();
                report.certificate = format_element(&tel.certificate);
                report.warnings.extend(tel.warnings);
            }
            Err(Error::NoTelescoperExists) => {
                report.verdict = "not_exists".to_string();
                if flags.expect_exists {
                    report.expectation_violated = true;
                }
            }
            Err(e) => return Err(e),
        },
        "verify" => {
            let op_path = match &flags.operator_path {
                Some(p) => p.clone(),
                None => path.with_extension("tel"),
            };
            let coeffs = parse_operator(&op_path)?;
            let tf = apply_operator(&sys, &coeffs, &f);
            let verified = match ctx.is_summable(&tf)? {
                Some(g) => {
                    if let Some(seed) = flags.seed {
                        let rhs = sys.delta_x(&g);
                        if !numeric_precheck(&sys, &tf, &rhs, seed) {
                            return Err(Error::ReductionDiverged);
                        }
                    }
                    report.certificate = format_element(&g);
                    verify_telescoper(&sys, &coeffs, &f, &g)
                }
                None => false,
            };
            report.verdict = if verified {
                "verified".to_string()
            } else {
                "not_a_telescoper".to_string()
            };
            report.expectation_violated = !verified;
        }
        other => {
            return Err(Error::DimensionMismatch(format!(
                "unknown command `{other}`"
            )));
        }
    }
    report.timing_ms = start.elapsed().as_millis();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse_ratfun;

    const PROPER1: &str = "\
# Rational telescoping: F = (x^2 + t)/(x - t)^2 over the trivial system
r = 1
e = 1
M = [[1]]
e_t = 1
M_t = [[1]]
f_num = [x^2 + t]
f_den = (x - t)^2
";

    #[test]
    fn parse_roundtrip() {
        let spec = parse_problem_str(PROPER1).unwrap();
        assert_eq!(spec.r, 1);
        assert_eq!(spec.f_den, parse_poly("(x - t)^2").unwrap());
        let (sys, f) = spec.build().unwrap();
        assert_eq!(sys.r, 1);
        assert!(!f.is_zero());
    }

    #[test]
    fn unknown_key_rejected() {
        let src = format!("{}\nbogus = 1\n", PROPER1);
        match parse_problem_str(&src) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 10),
            other => panic!("expected parse error, got {:?}", other),
        }
    }

    #[test]
    fn wrong_shape_rejected() {
        let src = PROPER1.replace("M = [[1]]", "M = [[1, 1]]");
        assert!(matches!(
            parse_problem_str(&src),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn operator_roundtrip() {
        let coeffs = parse_operator_str(
            "coeffs = [-(t^2 + 3*t + 2), 2*t^2 + 4*t, -(t^2 + t)]\n",
        )
        .unwrap();
        assert_eq!(coeffs.len(), 3);
        let text = format_operator(&coeffs);
        let again = parse_operator_str(&text).unwrap();
        assert_eq!(coeffs, again);
    }

    #[test]
    fn report_machine_line_is_single_line() {
        let report = Report {
            command: "existence".to_string(),
            problem: "x.prob".to_string(),
            verdict: "exists".to_string(),
            stem: Some("1".to_string()),
            ..Report::default()
        };
        let line = report.machine();
        assert!(!line.contains('\n'));
        assert!(line.starts_with('{') && line.ends_with('}'));
    }

    #[test]
    fn report_strings_reparse() {
        let spec = parse_problem_str(PROPER1).unwrap();
        let (_sys, _f) = spec.build().unwrap();
        let dir = std::env::temp_dir().join("ptele_problem_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("proper1.prob");
        std::fs::write(&path, PROPER1).unwrap();
        let report = run_command("telescope", &path, &Flags::default()).unwrap();
        for s in report.telescoper.iter().chain(report.certificate.iter()) {
            parse_ratfun(s).unwrap();
        }
        assert!(report.verdict.contains("order"));
    }
}
