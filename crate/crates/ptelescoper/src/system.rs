//! The module A = K(x)[S_x]/<L> presented by shift matrices on a basis
//! W: S_xW = (1/e)MW and S_tW = (1/e_t)M_tW, with the derived inverse
//! action W = (1/e~)M~ S_xW, element arithmetic, compatibility and
//! suitability checks.

use num::One;

use crate::error::{Error, Result};
use crate::factor::{bivar_factor_x, bivar_gcd};
use crate::poly::{Poly, Rat};
use crate::shift::{is_integer_linear_irreducible, shift_equivalent_x};

/// Determinant of a square Poly matrix by fraction-free (Bareiss)
/// elimination; exact in Q[t,x].
pub fn poly_det(mat: &[Vec<Poly>]) -> Poly {
    let n = mat.len();
    if n == 0 {
        return Poly::one();
    }
    let mut m: Vec<Vec<Poly>> = mat.to_vec();
    let mut sign = 1i32;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.try_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -&det
    } else {
        det
    }
}

/// Adjugate: M * adj(M) = det(M) * I.
fn poly_adjugate(mat: &[Vec<Poly>]) -> Vec<Vec<Poly>> {
    let n = mat.len();
    if n == 1 {
        return vec![vec![Poly::one()]];
    }
    let mut adj = vec![vec![Poly::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<Poly>> = (0..n)
                .filter(|&r| r != i)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| mat[r][c].clone())
                        .collect()
                })
                .collect();
            let cof = poly_det(&minor);
            adj[j][i] = if (i + j) % 2 == 0 { cof } else { -&cof };
        }
    }
    adj
}

fn matrix_gcd_with(mat: &[Vec<Poly>], extra: &Poly) -> Poly {
    let mut g = extra.clone();
    for row in mat {
        for entry in row {
            g = bivar_gcd(&g, entry);
            if g.is_constant() {
                return Poly::one();
            }
        }
    }
    g
}

fn shift_matrix(mat: &[Vec<Poly>], dt: i64, dx: i64) -> Vec<Vec<Poly>> {
    mat.iter()
        .map(|row| row.iter().map(|p| p.shift(dt, dx)).collect())
        .collect()
}

fn mat_mul(a: &[Vec<Poly>], b: &[Vec<Poly>]) -> Vec<Vec<Poly>> {
    let n = a.len();
    let mut out = vec![vec![Poly::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = Poly::zero();
            for (k, ak) in a[i].iter().enumerate() {
                s = &s + &(ak * &b[k][j]);
            }
            out[i][j] = s;
        }
    }
    out
}

/// The presented module: immutable after construction.
#[derive(Debug, Clone)]
pub struct ShiftSystem {
    pub r: usize,
    pub e: Poly,
    pub m: Vec<Vec<Poly>>,
    pub e_t: Poly,
    pub m_t: Vec<Vec<Poly>>,
    /// W = (1/e~) M~ S_xW, derived by adjugate inversion.
    pub e_tilde: Poly,
    pub m_tilde: Vec<Vec<Poly>>,
    pub det_m: Poly,
    pub det_m_t: Poly,
    /// Per-orbit representatives: monic irreducible K[x] factors.
    pub orbit_reps: Vec<Poly>,
    /// Infinity normalization exponents for V = diag(x^tau_i) W.
    pub tau_exponents: Vec<i64>,
    /// Non-fatal normalizations performed during build.
    pub warnings: Vec<String>,
}

/// f = aW/u with gcd(a_1,...,a_r,u) = 1 and u monic (pure lex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleElement {
    pub a: Vec<Poly>,
    pub u: Poly,
}

impl ModuleElement {
    pub fn zero(r: usize) -> Self {
        ModuleElement {
            a: vec![Poly::zero(); r],
            u: Poly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|p| p.is_zero())
    }
}

fn normalize_action(
    e: Poly,
    m: Vec<Vec<Poly>>,
    label: &str,
    warnings: &mut Vec<String>,
) -> (Poly, Vec<Vec<Poly>>) {
    let g = matrix_gcd_with(&m, &e);
    if g.is_constant() {
        return (e, m);
    }
    warnings.push(format!(
        "common factor {} cancelled from {} (content invariant restored)",
        g, label
    ));
    let e = e.try_div(&g).expect("gcd divides");
    let m = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| p.try_div(&g).expect("gcd divides"))
                .collect()
        })
        .collect();
    (e, m)
}

fn default_orbit_reps(e: &Poly, det_m: &Poly) -> Result<Vec<Poly>> {
    let prod = e * det_m;
    if prod.deg_x() < 1 {
        return Ok(vec![]);
    }
    let mut reps = vec![];
    for (f, _) in bivar_factor_x(&prod)? {
        let f = f.monic();
        if !reps.contains(&f) {
            reps.push(f);
        }
    }
    Ok(reps)
}

pub fn build_system(
    r: usize,
    e: Poly,
    m: Vec<Vec<Poly>>,
    e_t: Poly,
    m_t: Vec<Vec<Poly>>,
    orbit_reps: Option<Vec<Poly>>,
    tau_exponents: Option<Vec<i64>>,
) -> Result<ShiftSystem> {
    if r == 0
        || m.len() != r
        || m.iter().any(|row| row.len() != r)
        || m_t.len() != r
        || m_t.iter().any(|row| row.len() != r)
    {
        return Err(Error::DimensionMismatch(format!(
            "shift matrices must be {r}x{r}"
        )));
    }
    if e.is_zero() || e_t.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let mut warnings = vec![];
    let (e, m) = normalize_action(e, m, "e/M", &mut warnings);
    let (e_t, m_t) = normalize_action(e_t, m_t, "e_t/M_t", &mut warnings);
    let det_m = poly_det(&m);
    let det_m_t = poly_det(&m_t);
    if det_m.is_zero() || det_m_t.is_zero() {
        return Err(Error::SingularMatrix);
    }
    // ((1/e)M)^-1 = (e/det M) adj(M); cancel the common polynomial
    // content, then scale so e~ is primitive with positive lead
    let adj = poly_adjugate(&m);
    let scaled: Vec<Vec<Poly>> = adj
        .iter()
        .map(|row| row.iter().map(|p| p * &e).collect())
        .collect();
    let g = matrix_gcd_with(&scaled, &det_m);
    let e_over = det_m.try_div(&g).expect("gcd divides");
    let c = e_over.content();
    let e_tilde = e_over.primitive();
    let cinv = Rat::one() / c;
    let m_tilde: Vec<Vec<Poly>> = scaled
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| p.try_div(&g).expect("gcd divides").scale(&cinv))
                .collect()
        })
        .collect();
    let tau_exponents = tau_exponents.unwrap_or_else(|| vec![0; r]);
    if tau_exponents.len() != r {
        return Err(Error::DimensionMismatch(
            "tau_exponents length must equal r".into(),
        ));
    }
    let orbit_reps = match orbit_reps {
        Some(reps) => reps.into_iter().map(|p| p.monic()).collect(),
        None => default_orbit_reps(&e, &det_m)?,
    };
    Ok(ShiftSystem {
        r,
        e,
        m,
        e_t,
        m_t,
        e_tilde,
        m_tilde,
        det_m,
        det_m_t,
        orbit_reps,
        tau_exponents,
        warnings,
    })
}

pub fn normalize_element(a: Vec<Poly>, u: Poly, r: usize) -> Result<ModuleElement> {
    if u.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if a.len() != r {
        return Err(Error::DimensionMismatch(format!(
            "numerator vector must have length {r}"
        )));
    }
    if a.iter().all(|p| p.is_zero()) {
        return Ok(ModuleElement::zero(r));
    }
    let mut g = u.clone();
    for ai in &a {
        g = bivar_gcd(&g, ai);
        if g.is_constant() {
            break;
        }
    }
    let (mut a, mut u) = if g.is_constant() {
        (a, u)
    } else {
        (
            a.iter()
                .map(|p| p.try_div(&g).expect("gcd divides"))
                .collect(),
            u.try_div(&g).expect("gcd divides"),
        )
    };
    let lc = u.lc();
    if !lc.is_one() {
        let inv = Rat::one() / lc;
        u = u.scale(&inv);
        a = a.iter().map(|p| p.scale(&inv)).collect();
    }
    Ok(ModuleElement { a, u })
}

impl ShiftSystem {
    pub fn element(&self, a: Vec<Poly>, u: Poly) -> Result<ModuleElement> {
        normalize_element(a, u, self.r)
    }

    /// S_x(aW/u) = sigma_x(a/u) (1/e) M W.
    pub fn apply_sx(&self, f: &ModuleElement) -> ModuleElement {
        let a: Vec<Poly> = (0..self.r)
            .map(|j| {
                let mut s = Poly::zero();
                for i in 0..self.r {
                    s = &s + &(&f.a[i].shift(0, 1) * &self.m[i][j]);
                }
                s
            })
            .collect();
        let u = &f.u.shift(0, 1) * &self.e;
        normalize_element(a, u, self.r).expect("nonzero denominator")
    }

    /// S_x^{-1}(aW/u) = sigma_x^{-1}(a/u) sigma_x^{-1}((1/e~)M~) W.
    pub fn apply_sx_inv(&self, f: &ModuleElement) -> ModuleElement {
        let a: Vec<Poly> = (0..self.r)
            .map(|j| {
                let mut s = Poly::zero();
                for i in 0..self.r {
                    s = &s + &(&f.a[i].shift(0, -1) * &self.m_tilde[i][j].shift(0, -1));
                }
                s
            })
            .collect();
        let u = &f.u.shift(0, -1) * &self.e_tilde.shift(0, -1);
        normalize_element(a, u, self.r).expect("nonzero denominator")
    }

    /// S_t(aW/u) = sigma_t(a/u) (1/e_t) M_t W.
    pub fn apply_st(&self, f: &ModuleElement) -> ModuleElement {
        let a: Vec<Poly> = (0..self.r)
            .map(|j| {
                let mut s = Poly::zero();
                for i in 0..self.r {
                    s = &s + &(&f.a[i].shift(1, 0) * &self.m_t[i][j]);
                }
                s
            })
            .collect();
        let u = &f.u.shift(1, 0) * &self.e_t;
        normalize_element(a, u, self.r).expect("nonzero denominator")
    }

    pub fn add(&self, f: &ModuleElement, g: &ModuleElement) -> ModuleElement {
        let num: Vec<Poly> = (0..self.r)
            .map(|i| &(&f.a[i] * &g.u) + &(&g.a[i] * &f.u))
            .collect();
        let den = &f.u * &g.u;
        normalize_element(num, den, self.r).expect("nonzero denominator")
    }

    pub fn sub(&self, f: &ModuleElement, g: &ModuleElement) -> ModuleElement {
        let num: Vec<Poly> = (0..self.r)
            .map(|i| &(&f.a[i] * &g.u) - &(&g.a[i] * &f.u))
            .collect();
        let den = &f.u * &g.u;
        normalize_element(num, den, self.r).expect("nonzero denominator")
    }

    /// Delta_x f = S_x f - f.
    pub fn delta_x(&self, f: &ModuleElement) -> ModuleElement {
        self.sub(&self.apply_sx(f), f)
    }

    /// sigma_t((1/e)M)(1/e_t)M_t = sigma_x((1/e_t)M_t)(1/e)M, checked
    /// after clearing denominators; on failure returns the first
    /// offending entry.
    pub fn check_compatibility(&self) -> (bool, Option<(usize, usize)>) {
        let lhs = mat_mul(&shift_matrix(&self.m, 1, 0), &self.m_t);
        let rhs = mat_mul(&shift_matrix(&self.m_t, 0, 1), &self.m);
        let lden = &self.e.shift(1, 0) * &self.e_t;
        let rden = &self.e_t.shift(0, 1) * &self.e;
        for i in 0..self.r {
            for j in 0..self.r {
                if &lhs[i][j] * &rden != &rhs[i][j] * &lden {
                    return (false, Some((i, j)));
                }
            }
        }
        (true, None)
    }

    pub fn check_suitable_properties(&self) -> Result<SuitabilityReport> {
        Ok(SuitabilityReport {
            e_shift_free: is_shift_free_x(&self.e)?,
            det_m_shift_free: is_shift_free_x(&self.det_m)?,
            cross_gcd_trivial: cross_shift_coprime(&self.det_m, &self.e)?,
            integer_linear: is_integer_linear_poly(&self.e)?
                && is_integer_linear_poly(&self.det_m)?
                && is_integer_linear_poly(&self.e_t)?
                && is_integer_linear_poly(&self.det_m_t)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuitabilityReport {
    pub e_shift_free: bool,
    pub det_m_shift_free: bool,
    pub cross_gcd_trivial: bool,
    pub integer_linear: bool,
}

impl SuitabilityReport {
    pub fn all(&self) -> bool {
        self.e_shift_free && self.det_m_shift_free && self.cross_gcd_trivial && self.integer_linear
    }
}

/// gcd(u, sigma_x^i(u)) trivial in K[x] for all i != 0: no two
/// x-factors of u are related by a nonzero x-shift.
pub fn is_shift_free_x(u: &Poly) -> Result<bool> {
    if u.is_zero() || u.deg_x() < 1 {
        return Ok(true);
    }
    let factors = bivar_factor_x(u)?;
    for (i, (p, _)) in factors.iter().enumerate() {
        for (q, _) in factors.iter().skip(i + 1) {
            if matches!(shift_equivalent_x(p, q), Some(k) if k != 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// gcd(p, sigma_x^i(q)) trivial in K[x] for all i != 0.
fn cross_shift_coprime(p: &Poly, q: &Poly) -> Result<bool> {
    if p.deg_x() < 1 || q.deg_x() < 1 {
        return Ok(true);
    }
    for (pf, _) in bivar_factor_x(p)? {
        for (qf, _) in bivar_factor_x(q)? {
            if matches!(shift_equivalent_x(&qf, &pf), Some(k) if k != 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every irreducible factor of p is integer-linear.
pub fn is_integer_linear_poly(p: &Poly) -> Result<bool> {
    if p.is_zero() {
        return Ok(false);
    }
    if p.is_constant() || p.deg_x() < 1 {
        // x-free polynomials are h(t): always integer-linear
        return Ok(true);
    }
    for (f, _) in bivar_factor_x(p)? {
        if is_integer_linear_irreducible(&f.monic()).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse_poly;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    pub fn trivial_system() -> ShiftSystem {
        build_system(
            1,
            Poly::one(),
            vec![vec![Poly::one()]],
            Poly::one(),
            vec![vec![Poly::one()]],
            None,
            None,
        )
        .unwrap()
    }

    pub fn binomial_cubed_system() -> ShiftSystem {
        // S_x.1 = (t-x)^3/(1+x)^3, S_t.1 = (1+t)^3/(1+t-x)^3
        build_system(
            1,
            p("(1 + x)^3"),
            vec![vec![p("(t - x)^3")]],
            p("(1 + t - x)^3"),
            vec![vec![p("(1 + t)^3")]],
            None,
            None,
        )
        .unwrap()
    }

    pub fn rank2_system() -> ShiftSystem {
        build_system(
            2,
            p("(x + 2)*(t^2 - 1)^2"),
            vec![
                vec![
                    p("(x + t^2)*(x + 2)*(t^2 - 1)"),
                    p("(x^2 + (t^2 + 1)*x + 1)*(x + 2)*(t^2 - 1)^2"),
                ],
                vec![p("-x - 1"), p("-(x^2 + 2*x - t^2 + 2)*(t^2 - 1)")],
            ],
            p("t*(t + 2)*(t^2 - 1)"),
            vec![
                vec![
                    p("t^2*(t + 2)^2"),
                    p("t*(x + 1)*(2*t + 1)*(t + 2)*(t^2 - 1)"),
                ],
                vec![p("0"), p("(t^2 - 1)^2")],
            ],
            Some(vec![p("x + 2"), p("x^2 + (t^2 + 1)*x + 1")]),
            None,
        )
        .unwrap()
    }

    fn random_element(sys: &ShiftSystem, rng: &mut StdRng) -> ModuleElement {
        let coeff = |rng: &mut StdRng| {
            let mut q = Poly::zero();
            for dt in 0..2 {
                for dx in 0..2 {
                    let c: i64 = rng.gen_range(-4..=4);
                    q = &q + &Poly::monomial(dt, dx, crate::poly::rat_int(c));
                }
            }
            q
        };
        loop {
            let a: Vec<Poly> = (0..sys.r).map(|_| coeff(rng)).collect();
            let dens = [
                p("1"),
                p("x + 1"),
                p("x - t"),
                p("x^2 + t"),
                p("(x + 1)*(x - t)"),
            ];
            let u = dens[rng.gen_range(0..dens.len())].clone();
            let f = normalize_element(a, u, sys.r).unwrap();
            if !f.is_zero() {
                return f;
            }
        }
    }

    #[test]
    fn trivial_build() {
        let sys = trivial_system();
        assert_eq!(sys.e_tilde, Poly::one());
        assert_eq!(sys.m_tilde, vec![vec![Poly::one()]]);
        assert!(sys.orbit_reps.is_empty());
        assert!(sys.check_compatibility().0);
        assert!(sys.check_suitable_properties().unwrap().all());
    }

    #[test]
    fn binomial_cubed_build() {
        let sys = binomial_cubed_system();
        // normalized to a positive pure-lex leading coefficient
        assert_eq!(sys.e_tilde, p("(x - t)^3"));
        assert_eq!(sys.m_tilde, vec![vec![p("-(1 + x)^3")]]);
        assert!(sys.det_m.try_div(&sys.e_tilde).is_some());
        let mut reps = sys.orbit_reps.clone();
        reps.sort();
        assert_eq!(reps, vec![p("x + 1"), p("x - t")]);
        assert!(sys.check_compatibility().0);
    }

    #[test]
    fn binomial_cubed_compat_oracle() {
        // scalar identity sigma_t(u_x) u_t = sigma_x(u_t) u_x with
        // u_x = (t-x)^3/(1+x)^3 and u_t = (1+t)^3/(1+t-x)^3
        let ux_n = p("(t - x)^3");
        let ux_d = p("(1 + x)^3");
        let ut_n = p("(1 + t)^3");
        let ut_d = p("(1 + t - x)^3");
        // sigma_t(ux) * ut == sigma_x(ut) * ux, cross-multiplied
        let l = &(&ux_n.shift(1, 0) * &ut_n) * &(&ut_d.shift(0, 1) * &ux_d);
        let r = &(&ut_n.shift(0, 1) * &ux_n) * &(&ux_d.shift(1, 0) * &ut_d);
        assert_eq!(l, r);
    }

    #[test]
    fn rank2_build() {
        let sys = rank2_system();
        assert_eq!(sys.det_m, p("(t^2 - 1)^4*(x + 2)"));
        assert_eq!(sys.det_m_t, p("t^2*(t + 2)^2*(t^2 - 1)^2"));
        assert!(sys.det_m.try_div(&sys.e_tilde).is_some());
        assert!(sys.check_compatibility().0);
        let rep = sys.check_suitable_properties().unwrap();
        assert!(rep.all());
    }

    #[test]
    fn apply_trivial_is_coefficient_shift() {
        let sys = trivial_system();
        let f = sys.element(vec![p("x^2 + t*x")], p("x + 1")).unwrap();
        let g = sys.apply_sx(&f);
        assert_eq!(g, sys.element(vec![p("(x+1)^2 + t*(x+1)")], p("x + 2")).unwrap());
        let h = sys.apply_st(&f);
        assert_eq!(h, sys.element(vec![p("x^2 + (t+1)*x")], p("x + 1")).unwrap());
    }

    #[test]
    fn binomial_ratio_action() {
        // S_x(1) = (t-x)^3/(1+x)^3 W, the hypergeometric ratio
        let sys = binomial_cubed_system();
        let one = sys.element(vec![Poly::one()], Poly::one()).unwrap();
        let g = sys.apply_sx(&one);
        assert_eq!(g, sys.element(vec![p("(t - x)^3")], p("(1 + x)^3")).unwrap());
    }

    #[test]
    fn roundtrip_and_commutation() {
        let mut rng = StdRng::seed_from_u64(42);
        for sys in [trivial_system(), binomial_cubed_system(), rank2_system()] {
            assert!(sys.check_compatibility().0);
            for _ in 0..10 {
                let f = random_element(&sys, &mut rng);
                assert_eq!(sys.apply_sx_inv(&sys.apply_sx(&f)), f);
                assert_eq!(sys.apply_sx(&sys.apply_sx_inv(&f)), f);
                assert_eq!(
                    sys.apply_st(&sys.apply_sx(&f)),
                    sys.apply_sx(&sys.apply_st(&f))
                );
            }
        }
    }

    #[test]
    fn normalize_examples() {
        // ((x - t, 0), x - t) -> ((1, 0), 1)
        let f = normalize_element(vec![p("x - t"), p("0")], p("x - t"), 2).unwrap();
        assert_eq!(f, ModuleElement { a: vec![p("1"), p("0")], u: p("1") });
        // ((x^2 + t), (x - t)^2) unchanged
        let f = normalize_element(vec![p("x^2 + t")], p("(x - t)^2"), 1).unwrap();
        assert_eq!(f.u, p("(x - t)^2"));
        assert_eq!(f.a, vec![p("x^2 + t")]);
        // content removal ((2x, 2t), 2) -> ((x, t), 1)
        let f = normalize_element(vec![p("2*x"), p("2*t")], p("2"), 2).unwrap();
        assert_eq!(f, ModuleElement { a: vec![p("x"), p("t")], u: p("1") });
        // idempotent
        let g = normalize_element(f.a.clone(), f.u.clone(), 2).unwrap();
        assert_eq!(g, f);
        // zero denominator
        assert!(matches!(
            normalize_element(vec![p("1")], p("0"), 1),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn suitability_counterexample() {
        // e = x(x+1) is not shift-free
        let sys = build_system(
            1,
            p("x*(x + 1)"),
            vec![vec![p("x - t")]],
            Poly::one(),
            vec![vec![Poly::one()]],
            None,
            None,
        )
        .unwrap();
        let rep = sys.check_suitable_properties().unwrap();
        assert!(!rep.e_shift_free);
    }

    #[test]
    fn singular_matrix_rejected() {
        let err = build_system(
            2,
            Poly::one(),
            vec![vec![p("1"), p("1")], vec![p("1"), p("1")]],
            Poly::one(),
            vec![vec![p("1"), p("0")], vec![p("0"), p("1")]],
            None,
            None,
        );
        assert!(matches!(err, Err(Error::SingularMatrix)));
    }

    #[test]
    fn content_autonormalized_with_warning() {
        let sys = build_system(
            1,
            p("(t - 1)*(x + 1)"),
            vec![vec![p("(t - 1)*(x - t)")]],
            Poly::one(),
            vec![vec![Poly::one()]],
            None,
            None,
        )
        .unwrap();
        assert_eq!(sys.e, p("x + 1"));
        assert_eq!(sys.m, vec![vec![p("x - t")]]);
        assert_eq!(sys.warnings.len(), 1);
    }
}
