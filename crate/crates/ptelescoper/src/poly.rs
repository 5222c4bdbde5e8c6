//! Sparse bivariate polynomials in (t, x) over the rationals.
//!
//! Terms are kept in a map from exponent pairs to nonzero rational
//! coefficients. The canonical term order is pure lexicographic with
//! t below x, so the leading term is the one with the highest power of
//! x, ties broken by the power of t.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::qpoly::QPoly;

pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Which of the two base variables plays the main role in an operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    T,
    X,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::T => Var::X,
            Var::X => Var::T,
        }
    }
}

/// Exponent pair. Ordered by x-degree first, then t-degree, which is
/// exactly pure lex with t < x.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exp {
    pub dx: u32,
    pub dt: u32,
}

impl Exp {
    pub fn new(dt: u32, dx: u32) -> Self {
        Exp { dx, dt }
    }
}

/// A bivariate polynomial in t and x with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Exp, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Poly::default();
        if !c.is_zero() {
            p.terms.insert(Exp::new(0, 0), c);
        }
        p
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(rat_int(n))
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::T => Poly::monomial(1, 0, Rat::one()),
            Var::X => Poly::monomial(0, 1, Rat::one()),
        }
    }

    pub fn var_t() -> Self {
        Poly::var(Var::T)
    }

    pub fn var_x() -> Self {
        Poly::var(Var::X)
    }

    pub fn monomial(dt: u32, dx: u32, c: Rat) -> Self {
        let mut p = Poly::default();
        if !c.is_zero() {
            p.terms.insert(Exp::new(dt, dx), c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|e| e.dt == 0 && e.dx == 0)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Exp::new(0, 0))
                .map_or(false, |c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exp, &Rat)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Degree in the given variable; -1 for the zero polynomial.
    pub fn deg(&self, v: Var) -> i64 {
        self.terms
            .keys()
            .map(|e| match v {
                Var::T => e.dt as i64,
                Var::X => e.dx as i64,
            })
            .max()
            .unwrap_or(-1)
    }

    pub fn deg_t(&self) -> i64 {
        self.deg(Var::T)
    }

    pub fn deg_x(&self) -> i64 {
        self.deg(Var::X)
    }

    pub fn coeff(&self, dt: u32, dx: u32) -> Rat {
        self.terms
            .get(&Exp::new(dt, dx))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    fn insert(&mut self, e: Exp, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Leading exponent under pure lex t < x.
    pub fn lead_exp(&self) -> Option<Exp> {
        self.terms.keys().next_back().copied()
    }

    /// Leading coefficient under pure lex t < x.
    pub fn lc(&self) -> Rat {
        self.terms
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Divide by the pure-lex leading coefficient.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.lc();
        self.scale(&(Rat::one() / lc))
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    /// Rational content: the positive rational c such that self/c has
    /// coprime integer coefficients, carrying the sign of the leading
    /// coefficient. Zero polynomial has content 0.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return Rat::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num::integer::gcd(num_gcd, c.numer().abs());
            den_lcm = num::integer::lcm(den_lcm, c.denom().clone());
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        if self.lc().is_negative() {
            content = -content;
        }
        content
    }

    /// Remove the rational content, leaving coprime integer coefficients
    /// with positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&(Rat::one() / self.content()))
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// View as univariate in `v`: coefficient list indexed by power of
    /// `v`, each coefficient a polynomial in the other variable.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let d = self.deg(v);
        if d < 0 {
            return vec![];
        }
        let mut out = vec![Poly::zero(); (d + 1) as usize];
        for (e, c) in &self.terms {
            let (pow, other) = match v {
                Var::T => (e.dt, Poly::monomial(0, e.dx, c.clone())),
                Var::X => (e.dx, Poly::monomial(e.dt, 0, c.clone())),
            };
            out[pow as usize] = &out[pow as usize] + &other;
        }
        out
    }

    /// Assemble from univariate coefficient list in `v`.
    pub fn from_coeffs_in(v: Var, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            let shift = match v {
                Var::T => Poly::monomial(i as u32, 0, Rat::one()),
                Var::X => Poly::monomial(0, i as u32, Rat::one()),
            };
            out = &out + &(c * &shift);
        }
        out
    }

    /// Leading coefficient as univariate in `v` (a polynomial in the
    /// other variable).
    pub fn lc_in(&self, v: Var) -> Poly {
        let cs = self.coeffs_in(v);
        cs.last().cloned().unwrap_or_else(Poly::zero)
    }

    /// The shift p(t+i, x+j).
    pub fn shift(&self, i: i64, j: i64) -> Poly {
        if i == 0 && j == 0 {
            return self.clone();
        }
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            // (t+i)^dt expanded by binomials, times (x+j)^dx.
            let tpows = binomial_expand(e.dt, i);
            let xpows = binomial_expand(e.dx, j);
            for (a, ca) in tpows.iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                for (b, cb) in xpows.iter().enumerate() {
                    let coeff = c * ca * cb;
                    out.insert(Exp::new(a as u32, b as u32), coeff);
                }
            }
        }
        out
    }

    pub fn derivative(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            match v {
                Var::T => {
                    if e.dt > 0 {
                        out.insert(Exp::new(e.dt - 1, e.dx), c * rat_int(e.dt as i64));
                    }
                }
                Var::X => {
                    if e.dx > 0 {
                        out.insert(Exp::new(e.dt, e.dx - 1), c * rat_int(e.dx as i64));
                    }
                }
            }
        }
        out
    }

    pub fn eval(&self, t0: &Rat, x0: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            acc += c * pow_rat(t0, e.dt) * pow_rat(x0, e.dx);
        }
        acc
    }

    /// Substitute t = t0, returning a univariate polynomial in x.
    pub fn eval_t(&self, t0: &Rat) -> QPoly {
        let d = self.deg_x().max(0) as usize;
        let mut coeffs = vec![Rat::zero(); d + 1];
        for (e, c) in &self.terms {
            coeffs[e.dx as usize] += c * pow_rat(t0, e.dt);
        }
        QPoly::new(coeffs)
    }

    /// Substitute x = x0, returning a univariate polynomial in t.
    pub fn eval_x(&self, x0: &Rat) -> QPoly {
        let d = self.deg_t().max(0) as usize;
        let mut coeffs = vec![Rat::zero(); d + 1];
        for (e, c) in &self.terms {
            coeffs[e.dt as usize] += c * pow_rat(x0, e.dx);
        }
        QPoly::new(coeffs)
    }

    /// Pure-t polynomial from a univariate one.
    pub fn from_qpoly(v: Var, q: &QPoly) -> Poly {
        let mut out = Poly::zero();
        for (i, c) in q.coeffs().iter().enumerate() {
            match v {
                Var::T => out.insert(Exp::new(i as u32, 0), c.clone()),
                Var::X => out.insert(Exp::new(0, i as u32), c.clone()),
            }
        }
        out
    }

    /// Exchange the roles of t and x.
    pub fn swap_vars(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exp::new(e.dx, e.dt), c.clone()))
                .collect(),
        }
    }

    /// Substitute z -> m*t + n*x into a univariate polynomial h(z).
    pub fn compose_linear(h: &QPoly, m: i64, n: i64) -> Poly {
        let z = &Poly::var_t().scale(&rat_int(m)) + &Poly::var_x().scale(&rat_int(n));
        let mut out = Poly::zero();
        for c in h.coeffs().iter().rev() {
            out = &(&out * &z) + &Poly::constant(c.clone());
        }
        out
    }

    /// Exact multivariate division; None if the division leaves a remainder.
    pub fn try_div(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        let dlead = d.lead_exp().unwrap();
        let dlc = d.lc();
        while !rem.is_zero() {
            let rlead = rem.lead_exp().unwrap();
            if rlead.dt < dlead.dt || rlead.dx < dlead.dx {
                return None;
            }
            let e = Exp::new(rlead.dt - dlead.dt, rlead.dx - dlead.dx);
            let c = rem.lc() / &dlc;
            let term = Poly::monomial(e.dt, e.dx, c);
            quot = &quot + &term;
            rem = &rem - &(&term * d);
            // lead strictly decreases each step, so this terminates
            if let Some(newlead) = rem.lead_exp() {
                if newlead >= rlead {
                    return None;
                }
            }
        }
        Some(quot)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.try_div(self).is_some()
    }

    /// True if the polynomial only involves variable `v` (or is constant).
    pub fn is_univariate_in(&self, v: Var) -> bool {
        self.deg(v.other()) <= 0
    }

    /// Extract as univariate over Q when the other variable is absent.
    pub fn to_qpoly(&self, v: Var) -> Option<QPoly> {
        if !self.is_univariate_in(v) {
            return None;
        }
        let d = self.deg(v).max(0) as usize;
        let mut coeffs = vec![Rat::zero(); d + 1];
        for (e, c) in &self.terms {
            let pow = match v {
                Var::T => e.dt,
                Var::X => e.dx,
            };
            coeffs[pow as usize] = c.clone();
        }
        Some(QPoly::new(coeffs))
    }
}

/// Coefficients of (v + c)^n as a dense list indexed by the power of v.
fn binomial_expand(n: u32, c: i64) -> Vec<Rat> {
    let c = rat_int(c);
    let mut out = vec![Rat::zero(); (n + 1) as usize];
    // binomial(n, k) * c^(n-k)
    let mut binom = Rat::one();
    let mut cpow = pow_rat(&c, n);
    for k in 0..=n {
        out[k as usize] = &binom * &cpow;
        if k < n {
            binom = binom * rat_int((n - k) as i64) / rat_int((k + 1) as i64);
            if !c.is_zero() {
                cpow = &cpow / &c;
            } else {
                cpow = if k + 1 == n { Rat::one() } else { Rat::zero() };
            }
        }
    }
    out
}

pub fn pow_rat(base: &Rat, n: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..n {
        acc *= base;
    }
    acc
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(*e, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(*e, -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.insert(Exp::new(e1.dt + e2.dt, e1.dx + e2.dx), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (e, c) in &rhs.terms {
            self.insert(*e, c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (e, c) in &rhs.terms {
            self.insert(*e, -c.clone());
        }
    }
}

impl MulAssign<&Poly> for Poly {
    fn mul_assign(&mut self, rhs: &Poly) {
        *self = &*self * rhs;
    }
}

fn fmt_coeff(c: &Rat, f: &mut fmt::Formatter<'_>, leading: bool, has_vars: bool) -> fmt::Result {
    let abs = c.abs();
    if leading {
        if c.is_negative() {
            write!(f, "-")?;
        }
    } else if c.is_negative() {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if !abs.is_one() || !has_vars {
        write!(f, "{}", abs)?;
        if has_vars {
            write!(f, "*")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // descending pure lex: leading term first
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let has_vars = e.dt > 0 || e.dx > 0;
            fmt_coeff(c, f, i == 0, has_vars)?;
            if e.dt > 0 {
                write!(f, "t")?;
                if e.dt > 1 {
                    write!(f, "^{}", e.dt)?;
                }
                if e.dx > 0 {
                    write!(f, "*")?;
                }
            }
            if e.dx > 0 {
                write!(f, "x")?;
                if e.dx > 1 {
                    write!(f, "^{}", e.dx)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> Poly {
        Poly::var_t()
    }
    fn x() -> Poly {
        Poly::var_x()
    }

    #[test]
    fn lead_is_pure_lex_t_below_x() {
        // x + t^5: leading term must be x
        let p = &x() + &t().pow(5);
        assert_eq!(p.lead_exp().unwrap(), Exp::new(0, 1));
        let q = &(&x() * &t()) + &x();
        assert_eq!(q.lead_exp().unwrap(), Exp::new(1, 1));
    }

    #[test]
    fn shift_examples() {
        // shift(x - t, 1, 0) = x - t - 1
        let p = &x() - &t();
        let expect = &(&x() - &t()) - &Poly::one();
        assert_eq!(p.shift(1, 0), expect);
        // shift(x^2 + t, 0, 1) = x^2 + 2x + 1 + t
        let q = &x().pow(2) + &t();
        let expect = &(&(&x().pow(2) + &x().scale(&rat_int(2))) + &Poly::one()) + &t();
        assert_eq!(q.shift(0, 1), expect);
    }

    #[test]
    fn shift_is_ring_hom_and_invertible() {
        let p = &(&x().pow(3) * &t()) - &(&x() * &t().pow(2)).scale(&rat_int(7));
        let q = &(&x() + &t().pow(2)) + &Poly::int(3);
        assert_eq!((&p * &q).shift(2, -3), &p.shift(2, -3) * &q.shift(2, -3));
        assert_eq!((&p + &q).shift(2, -3), &p.shift(2, -3) + &q.shift(2, -3));
        assert_eq!(p.shift(5, -4).shift(-5, 4), p);
    }

    #[test]
    fn exact_division() {
        let p = &(&x() - &t()) * &(&x() + &t());
        assert_eq!(p.try_div(&(&x() - &t())).unwrap(), &x() + &t());
        assert!(p.try_div(&(&x() + &Poly::one())).is_none());
    }

    #[test]
    fn content_and_primitive() {
        let p = (&x() + &t()).scale(&Rat::new(BigInt::from(6), BigInt::from(4)));
        assert_eq!(p.content(), Rat::new(BigInt::from(3), BigInt::from(2)));
        assert_eq!(p.primitive(), &x() + &t());
        let q = (&x() + &t()).scale(&rat_int(-2));
        assert_eq!(q.content(), rat_int(-2));
    }

    #[test]
    fn display_ordering() {
        let p = &(&x().pow(2) + &(&t() * &x()).scale(&rat_int(-3))) + &Poly::int(5);
        assert_eq!(p.to_string(), "x^2 - 3*t*x + 5");
    }
}
