//! Shift-orbit machinery: integer-linear polynomials h(mt+nx), the
//! direction operators tau^(m,n) = sigma_t^a sigma_x^b, orbit exponents
//! in N[tau, tau^-1] with their norms, the grouped integer-linear
//! factorization, x-shift equivalence, and the spread test.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::factor::{bivar_factor_x, content_in, univar_factor};
use crate::kpoly::KxPoly;
use crate::poly::{pow_rat, rat_int, Poly, Rat, Var};
use crate::qpoly::QPoly;

/// A normalized direction (m, n) with gcd(m,n) = 1, n >= 0 (m = 1 when
/// n = 0), together with Bezout data a*m + b*n = 1 defining
/// tau = sigma_t^a sigma_x^b, which sends h(mt+nx) to h(mt+nx+1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Direction {
    pub m: i64,
    pub n: i64,
    pub a: i64,
    pub b: i64,
}

impl Direction {
    pub fn new(m: i64, n: i64) -> Direction {
        assert!(m != 0 || n != 0);
        let g = gcd_i64(m.abs(), n.abs());
        let (mut m, mut n) = (m / g, n / g);
        if n < 0 {
            m = -m;
            n = -n;
        }
        if n == 0 {
            m = 1;
        }
        let (a, b) = if n == 0 {
            (1, 0)
        } else if m == 0 {
            (0, 1)
        } else {
            // smallest b >= 0 with m | (1 - b*n)
            let mut b = 0i64;
            loop {
                if (1 - b * n) % m == 0 {
                    break;
                }
                b += 1;
                assert!(b <= m.abs(), "gcd(m,n)=1 guarantees a solution");
            }
            ((1 - b * n) / m, b)
        };
        debug_assert_eq!(a * m + b * n, 1);
        Direction { m, n, a, b }
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd_i64(b, a % b)
    }
}

/// A Laurent polynomial in tau with natural-number coefficients; only
/// nonzero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrbitExponent {
    coeffs: BTreeMap<i64, u64>,
}

impl OrbitExponent {
    pub fn zero() -> Self {
        OrbitExponent::default()
    }

    pub fn single(index: i64, mult: u64) -> Self {
        let mut e = OrbitExponent::default();
        e.add_at(index, mult);
        e
    }

    pub fn add_at(&mut self, index: i64, mult: u64) {
        if mult == 0 {
            return;
        }
        *self.coeffs.entry(index).or_insert(0) += mult;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.coeffs.iter().map(|(&i, &k)| (i, k))
    }

    pub fn min_index(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_index(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// The maximal coefficient.
    pub fn norm(&self) -> u64 {
        self.coeffs.values().copied().max().unwrap_or(0)
    }

    /// The sum of all coefficients.
    pub fn norm_star(&self) -> u64 {
        self.coeffs.values().sum()
    }

    /// Multiply by tau^j.
    pub fn shifted(&self, j: i64) -> OrbitExponent {
        OrbitExponent {
            coeffs: self.coeffs.iter().map(|(&i, &k)| (i + j, k)).collect(),
        }
    }

    pub fn add(&self, other: &OrbitExponent) -> OrbitExponent {
        let mut out = self.clone();
        for (i, k) in other.iter() {
            out.add_at(i, k);
        }
        out
    }
}

impl fmt::Display for OrbitExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, k) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", k)?,
                1 if k == 1 => write!(f, "tau")?,
                1 => write!(f, "{}*tau", k)?,
                _ if k == 1 => write!(f, "tau^{}", i)?,
                _ => write!(f, "{}*tau^{}", k, i)?,
            }
        }
        Ok(())
    }
}

/// If p is (a constant multiple of) h(mt+nx) for a univariate h and a
/// normalized direction, return (direction, monic h, content c) with
/// p = c * h(mt+nx). Detection: p is a function of mt+nx exactly when
/// n*dp/dt - m*dp/dx = 0, i.e. the two partials are proportional with
/// constant ratio m/n.
pub fn is_integer_linear_irreducible(p: &Poly) -> Option<(Direction, QPoly, Rat)> {
    if p.is_zero() || p.is_constant() {
        return None;
    }
    let pt = p.derivative(Var::T);
    let px = p.derivative(Var::X);
    let dir = if px.is_zero() {
        Direction::new(1, 0)
    } else if pt.is_zero() {
        Direction::new(0, 1)
    } else {
        if pt.lead_exp() != px.lead_exp() {
            return None;
        }
        let ratio = pt.lc() / px.lc();
        if pt != px.scale(&ratio) {
            return None;
        }
        let m = i64::try_from(ratio.numer()).ok()?;
        let n = i64::try_from(ratio.denom()).ok()?;
        Direction::new(m, n)
    };
    let (h, c) = extract_h(p, &dir)?;
    // exact reconstruction check
    if Poly::compose_linear(&h, dir.m, dir.n).scale(&c) != *p {
        return None;
    }
    Some((dir, h, c))
}

/// Recover monic h and content c with p = c*h(mt+nx).
fn extract_h(p: &Poly, dir: &Direction) -> Option<(QPoly, Rat)> {
    if dir.n == 0 {
        let u = p.to_qpoly(Var::T)?;
        let c = u.lc();
        return Some((u.monic(), c));
    }
    // set t = 0: p(0, x) = c*h(n*x)
    let u = p.eval_t(&Rat::zero());
    let d = u.deg();
    if d < 0 {
        return None;
    }
    let nr = rat_int(dir.n);
    let c = u.lc() / pow_rat(&nr, d as u32);
    let mut coeffs = Vec::with_capacity(d as usize + 1);
    for k in 0..=d as u32 {
        coeffs.push(u.coeff(k as usize) / (pow_rat(&nr, k) * &c));
    }
    Some((QPoly::new(coeffs), c))
}

/// tau^l applied to p = h(mt+nx): the shift sigma_t^{a l} sigma_x^{b l},
/// which yields h(mt+nx+l).
pub fn tau_apply(p: &Poly, dir: &Direction, l: i64) -> Result<Poly> {
    let pt = p.derivative(Var::T);
    let px = p.derivative(Var::X);
    let lhs = &pt.scale(&rat_int(dir.n)) - &px.scale(&rat_int(dir.m));
    if !lhs.is_zero() {
        return Err(Error::DirectionMismatch);
    }
    Ok(p.shift(dir.a * l, dir.b * l))
}

/// One grouped shift-equivalence class of integer-linear factors.
#[derive(Debug, Clone)]
pub struct ILClass {
    /// Monic (pure lex) representative, the factor at orbit index 0.
    pub rep: Poly,
    /// Monic univariate profile with rep = c*h(mt+nx).
    pub h: QPoly,
    pub dir: Direction,
    /// Multiplicities along the orbit, indexed relative to the rep.
    pub xi: OrbitExponent,
}

impl ILClass {
    /// Expand rep^xi via tau.
    pub fn expand(&self) -> Poly {
        let mut out = Poly::one();
        for (i, k) in self.xi.iter() {
            let shifted = tau_apply(&self.rep, &self.dir, i).expect("rep is integer-linear");
            out = &out * &shifted.pow(k as u32);
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct IntegerLinearDecomp {
    pub content: Rat,
    pub classes: Vec<ILClass>,
    /// Monic product of the non-integer-linear irreducible factors.
    pub non_linear_part: Poly,
}

impl IntegerLinearDecomp {
    pub fn is_integer_linear(&self) -> bool {
        self.non_linear_part.is_one()
    }

    /// content * prod rep^xi * non_linear_part.
    pub fn expand(&self) -> Poly {
        let mut out = Poly::constant(self.content.clone());
        for class in &self.classes {
            out = &out * &class.expand();
        }
        &out * &self.non_linear_part
    }
}

/// Full factorization of q grouped by <sigma_t, sigma_x>-shift
/// equivalence, with non-integer-linear factors collected separately.
pub fn integer_linear_decompose(q: &Poly) -> Result<IntegerLinearDecomp> {
    assert!(!q.is_zero());
    // split off the x-free content and factor both parts
    let mut irreducibles: Vec<(Poly, QPoly, Option<Direction>, Rat, u32)> = vec![];
    let tcont = content_in(q, Var::X);
    if tcont.deg_t() >= 1 {
        let tq = tcont.to_qpoly(Var::T).expect("content is t-only");
        for (h, mult) in univar_factor(&tq) {
            let p = Poly::from_qpoly(Var::T, &h);
            irreducibles.push((p, h, Some(Direction::new(1, 0)), Rat::one(), mult));
        }
    }
    if q.deg_x() >= 1 {
        for (f, mult) in bivar_factor_x(q)? {
            let monic = f.monic();
            match is_integer_linear_irreducible(&monic) {
                Some((dir, h, c)) => irreducibles.push((monic, h, Some(dir), c, mult)),
                None => irreducibles.push((monic, QPoly::zero(), None, Rat::one(), mult)),
            }
        }
    }
    let mut non_linear = Poly::one();
    let mut classes: Vec<(Direction, Vec<(Poly, QPoly, i64, u32)>)> = vec![];
    for (p, h, dir, _c, mult) in irreducibles {
        let dir = match dir {
            Some(d) => d,
            None => {
                non_linear = &non_linear * &p.pow(mult);
                continue;
            }
        };
        // find a class with the same direction and an integer tau-shift
        let mut placed = false;
        for (cdir, members) in classes.iter_mut() {
            if *cdir != dir {
                continue;
            }
            let (_, h0, i0, _) = &members[0];
            if let Some(l) = h_shift_offset(h0, &h) {
                let idx = i0 + l;
                members.push((p.clone(), h.clone(), idx, mult));
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push((dir, vec![(p, h, 0, mult)]));
        }
    }
    let mut out_classes = vec![];
    for (dir, members) in classes {
        let min_idx = members.iter().map(|(_, _, i, _)| *i).min().unwrap();
        let (rep, rep_h, _, _) = members
            .iter()
            .find(|(_, _, i, _)| *i == min_idx)
            .unwrap()
            .clone();
        let mut xi = OrbitExponent::zero();
        for (_, _, i, mult) in &members {
            xi.add_at(i - min_idx, *mult as u64);
        }
        out_classes.push(ILClass {
            rep,
            h: rep_h,
            dir,
            xi,
        });
    }
    // deterministic order
    out_classes.sort_by(|a, b| {
        (a.dir.m, a.dir.n, a.rep.deg_x(), a.rep.deg_t())
            .cmp(&(b.dir.m, b.dir.n, b.rep.deg_x(), b.rep.deg_t()))
            .then_with(|| a.rep.cmp(&b.rep))
    });
    let mut prod = non_linear.clone();
    for class in &out_classes {
        prod = &prod * &class.expand();
    }
    let content = if prod.is_zero() {
        Rat::zero()
    } else {
        q.lc() / prod.lc()
    };
    let decomp = IntegerLinearDecomp {
        content,
        classes: out_classes,
        non_linear_part: non_linear,
    };
    debug_assert_eq!(decomp.expand(), *q);
    Ok(decomp)
}

/// tau-offset l with b in the same <sigma_t, sigma_x>-orbit as a and
/// b.rep = tau^l(a.rep), if the classes share an orbit.
pub fn class_orbit_offset(a: &ILClass, b: &ILClass) -> Option<i64> {
    if a.dir != b.dir {
        return None;
    }
    h_shift_offset(&a.h, &b.h)
}

/// Integer l with h1(z + l) = h2(z) for monic h1, h2, if one exists.
fn h_shift_offset(h1: &QPoly, h2: &QPoly) -> Option<i64> {
    let d = h1.deg();
    if d != h2.deg() || d < 1 {
        return if h1 == h2 { Some(0) } else { None };
    }
    // subleading coefficient moves by d*l under z -> z + l
    let diff = h2.coeff(d as usize - 1) - h1.coeff(d as usize - 1);
    let l = diff / rat_int(d);
    if !l.is_integer() {
        return None;
    }
    let l = i64::try_from(l.numer()).ok()?;
    if h1.shift_arg(l) == *h2 {
        Some(l)
    } else {
        None
    }
}

/// k with q = sigma_x^k(p) in K[x] (up to a unit of K), for p, q
/// irreducible in K[x]; unique when it exists.
pub fn shift_equivalent_x(p: &Poly, q: &Poly) -> Option<i64> {
    let pk = KxPoly::from_poly(p).monic();
    let qk = KxPoly::from_poly(q).monic();
    let d = pk.deg();
    if d != qk.deg() || d < 1 {
        return None;
    }
    if d == 0 {
        return None;
    }
    // subleading coefficient moves by d*k
    let diff = &qk.coeff(d as usize - 1) - &pk.coeff(d as usize - 1);
    if !diff.is_poly() || diff.num().deg() > 0 {
        return None;
    }
    let kr = diff.num().coeff(0) / rat_int(d);
    if !kr.is_integer() {
        return None;
    }
    let k = i64::try_from(kr.numer()).ok()?;
    if pk.shift_x(k) == qk {
        Some(k)
    } else {
        None
    }
}

/// True iff every irreducible K[x]-factor p of u has a partner
/// sigma_x^m(p) dividing u for some m != 0. Factors free of x divide u
/// together with all their shifts, so only deg_x >= 1 factors matter.
pub fn is_spread_x(u: &Poly) -> Result<bool> {
    assert!(!u.is_zero());
    if u.deg_x() < 1 {
        return Ok(true);
    }
    let factors = bivar_factor_x(u)?;
    for (i, (p, _)) in factors.iter().enumerate() {
        let mut covered = false;
        for (j, (q, _)) in factors.iter().enumerate() {
            if i == j {
                continue;
            }
            if matches!(shift_equivalent_x(p, q), Some(k) if k != 0) {
                covered = true;
                break;
            }
        }
        if !covered {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn direction_normalization() {
        let d = Direction::new(-2, 3);
        assert_eq!((d.m, d.n), (-2, 3));
        assert_eq!(d.a * d.m + d.b * d.n, 1);
        assert!(d.b >= 0);
        let d = Direction::new(4, -6);
        assert_eq!((d.m, d.n), (-2, 3));
        let d = Direction::new(-3, 0);
        assert_eq!((d.m, d.n), (1, 0));
        assert_eq!((d.a, d.b), (1, 0));
        let d = Direction::new(0, 5);
        assert_eq!((d.m, d.n), (0, 1));
        assert_eq!((d.a, d.b), (0, 1));
        let d = Direction::new(-1, 1);
        assert_eq!((d.a, d.b), (-1, 0));
    }

    #[test]
    fn detect_integer_linear() {
        // x + t -> (1,1), h = z
        let (d, h, c) = is_integer_linear_irreducible(&p("x + t")).unwrap();
        assert_eq!((d.m, d.n), (1, 1));
        assert_eq!(h, QPoly::var());
        assert!(c.is_one());
        // x^2 + t is not integer-linear
        assert!(is_integer_linear_irreducible(&p("x^2 + t")).is_none());
        // 2t - 3x + 5 -> (-2, 3), h = z - 5, content -1
        let (d, h, c) = is_integer_linear_irreducible(&p("2*t - 3*x + 5")).unwrap();
        assert_eq!((d.m, d.n), (-2, 3));
        assert_eq!(h, QPoly::new(vec![rat_int(-5), rat_int(1)]));
        assert_eq!(c, rat_int(-1));
        // oracle: substitute back
        assert_eq!(
            Poly::compose_linear(&h, -2, 3).scale(&c),
            p("2*t - 3*x + 5")
        );
        // direction with |m| above deg_t
        let (d, _, _) = is_integer_linear_irreducible(&p("5*t + 2*x")).unwrap();
        assert_eq!((d.m, d.n), (5, 2));
    }

    #[test]
    fn tau_examples() {
        let d = Direction::new(-1, 1);
        assert_eq!(tau_apply(&p("x - t"), &d, 1).unwrap(), p("x - t + 1"));
        let q = p("x - t");
        assert_eq!(tau_apply(&q, &d, 0).unwrap(), q);
        let fwd = tau_apply(&q, &d, 5).unwrap();
        assert_eq!(tau_apply(&fwd, &d, -5).unwrap(), q);
        assert!(matches!(
            tau_apply(&p("x^2 + t"), &d, 1),
            Err(Error::DirectionMismatch)
        ));
    }

    #[test]
    fn norms() {
        let mut xi = OrbitExponent::zero();
        xi.add_at(-1, 2);
        xi.add_at(0, 3);
        xi.add_at(2, 1);
        assert_eq!(xi.norm(), 3);
        assert_eq!(xi.norm_star(), 6);
        assert_eq!(OrbitExponent::zero().norm(), 0);
        assert_eq!(OrbitExponent::zero().norm_star(), 0);
    }

    #[test]
    fn decompose_one_orbit() {
        // (x - t)(x - t - 1): one class, xi = 1 + tau^{-1} relative to the
        // min-index rep x - t - 1 normalized at 0 -> xi = 1 + tau
        let d = integer_linear_decompose(&p("(x - t)*(x - t - 1)")).unwrap();
        assert_eq!(d.classes.len(), 1);
        assert!(d.non_linear_part.is_one());
        let class = &d.classes[0];
        assert_eq!((class.dir.m, class.dir.n), (-1, 1));
        assert_eq!(class.xi.min_index(), Some(0));
        assert_eq!(class.xi.norm_star(), 2);
        assert_eq!(d.expand(), p("(x - t)*(x - t - 1)"));
    }

    #[test]
    fn decompose_worked_example_e() {
        // (x+2)(t^2-1)^2: class {x+2} dir (0,1) and class {t-1, t+1}
        // dir (1,0) with xi = 2 + 2*tau^2
        let d = integer_linear_decompose(&p("(x + 2)*(t^2 - 1)^2")).unwrap();
        assert!(d.non_linear_part.is_one());
        assert_eq!(d.classes.len(), 2);
        let tclass = d
            .classes
            .iter()
            .find(|c| (c.dir.m, c.dir.n) == (1, 0))
            .unwrap();
        assert_eq!(tclass.rep, p("t - 1"));
        assert_eq!(tclass.xi, {
            let mut xi = OrbitExponent::zero();
            xi.add_at(0, 2);
            xi.add_at(2, 2);
            xi
        });
        let xclass = d
            .classes
            .iter()
            .find(|c| (c.dir.m, c.dir.n) == (0, 1))
            .unwrap();
        assert_eq!(xclass.rep, p("x + 2"));
        assert_eq!(d.expand(), p("(x + 2)*(t^2 - 1)^2"));
    }

    #[test]
    fn decompose_non_linear() {
        let d = integer_linear_decompose(&p("x^2 + t")).unwrap();
        assert!(d.classes.is_empty());
        assert_eq!(d.non_linear_part, p("x^2 + t"));
        assert_eq!(d.expand(), p("x^2 + t"));
    }

    #[test]
    fn shift_equiv() {
        assert_eq!(shift_equivalent_x(&p("x - t"), &p("x - t - 3")), Some(-3));
        assert_eq!(shift_equivalent_x(&p("x^2 + t"), &p("x^2 + t")), Some(0));
        assert_eq!(shift_equivalent_x(&p("x - t"), &p("x + t")), None);
        // brute-force window oracle
        let a = p("x^2 + t*x + 1");
        for k in -6i64..=6 {
            let b = a.shift(0, k);
            assert_eq!(shift_equivalent_x(&a, &b), Some(k));
        }
    }

    #[test]
    fn spread() {
        assert!(is_spread_x(&p("x*(x + 2)")).unwrap());
        assert!(!is_spread_x(&p("x*(x + t)")).unwrap());
        assert!(!is_spread_x(&p("x^2 + t")).unwrap());
        // (x^2+t) * sigma_x(x^2+t)
        assert!(is_spread_x(&p("(x^2 + t)*(x^2 + 2*x + 1 + t)")).unwrap());
    }
}
