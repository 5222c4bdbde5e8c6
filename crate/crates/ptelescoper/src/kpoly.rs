//! Univariate polynomials in x over the field K = Q(t), with the Euclidean
//! toolkit (division, gcd, extended gcd) and partial fraction decomposition.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::poly::{Poly, Rat, Var};
use crate::qpoly::{QPoly, RatFunT};

/// Dense polynomial in x with coefficients in Q(t), no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KxPoly {
    c: Vec<RatFunT>,
}

impl KxPoly {
    pub fn new(mut coeffs: Vec<RatFunT>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        KxPoly { c: coeffs }
    }

    pub fn zero() -> Self {
        KxPoly::default()
    }

    pub fn one() -> Self {
        KxPoly::constant(RatFunT::one())
    }

    pub fn constant(c: RatFunT) -> Self {
        KxPoly::new(vec![c])
    }

    pub fn var() -> Self {
        KxPoly::new(vec![RatFunT::zero(), RatFunT::one()])
    }

    /// Lift a bivariate polynomial, read as univariate in x over Q(t).
    pub fn from_poly(p: &Poly) -> Self {
        let coeffs = p
            .coeffs_in(Var::X)
            .into_iter()
            .map(|c| RatFunT::from_poly(c.to_qpoly(Var::T).expect("coefficient is t-only")))
            .collect();
        KxPoly::new(coeffs)
    }

    /// Write self = p / d with p bivariate and d in Q[t] the common
    /// denominator of the coefficients.
    pub fn clear_denominators(&self) -> (Poly, QPoly) {
        let mut den = QPoly::one();
        for c in &self.c {
            den = den.lcm(c.den());
        }
        let mut coeffs = Vec::with_capacity(self.c.len());
        for c in &self.c {
            let q = den.try_div(c.den()).unwrap();
            coeffs.push(Poly::from_qpoly(Var::T, &(&q * c.num())));
        }
        (Poly::from_coeffs_in(Var::X, &coeffs), den)
    }

    pub fn coeffs(&self) -> &[RatFunT] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> RatFunT {
        self.c.get(i).cloned().unwrap_or_else(RatFunT::zero)
    }

    pub fn deg(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn lc(&self) -> RatFunT {
        self.c.last().cloned().unwrap_or_else(RatFunT::zero)
    }

    pub fn monic(&self) -> KxPoly {
        if self.is_zero() {
            return KxPoly::zero();
        }
        self.scale(&self.lc().inv())
    }

    pub fn scale(&self, k: &RatFunT) -> KxPoly {
        if k.is_zero() {
            return KxPoly::zero();
        }
        KxPoly {
            c: self.c.iter().map(|a| a * k).collect(),
        }
    }

    pub fn derivative(&self) -> KxPoly {
        if self.c.len() <= 1 {
            return KxPoly::zero();
        }
        KxPoly::new(
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, a)| a * &RatFunT::constant(crate::poly::rat_int(i as i64 + 1)))
                .collect(),
        )
    }

    /// p(x + k)
    pub fn shift_x(&self, k: i64) -> KxPoly {
        let sh = KxPoly::new(vec![
            RatFunT::constant(crate::poly::rat_int(k)),
            RatFunT::one(),
        ]);
        let mut acc = KxPoly::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * &sh) + &KxPoly::constant(a.clone());
        }
        acc
    }

    /// Shift t -> t + k in every coefficient.
    pub fn shift_t(&self, k: i64) -> KxPoly {
        KxPoly {
            c: self.c.iter().map(|a| a.shift_t(k)).collect(),
        }
    }

    pub fn eval(&self, z: &RatFunT) -> RatFunT {
        let mut acc = RatFunT::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * z) + a;
        }
        acc
    }

    pub fn pow(&self, n: u32) -> KxPoly {
        let mut acc = KxPoly::one();
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

    pub fn divrem(&self, d: &KxPoly) -> (KxPoly, KxPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.deg() < d.deg() {
            return (KxPoly::zero(), self.clone());
        }
        let mut rem = self.c.clone();
        let dd = d.deg() as usize;
        let dlc_inv = d.lc().inv();
        let qd = rem.len() - dd - 1;
        let mut quot = vec![RatFunT::zero(); qd + 1];
        for i in (0..=qd).rev() {
            let coef = &rem[i + dd] * &dlc_inv;
            if coef.is_zero() {
                continue;
            }
            for (j, dc) in d.c.iter().enumerate() {
                let v = &coef * dc;
                rem[i + j] = &rem[i + j] - &v;
            }
            quot[i] = coef;
        }
        (KxPoly::new(quot), KxPoly::new(rem))
    }

    pub fn rem(&self, d: &KxPoly) -> KxPoly {
        self.divrem(d).1
    }

    pub fn try_div(&self, d: &KxPoly) -> Option<KxPoly> {
        let (q, r) = self.divrem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Gcd in K[x] via the subresultant PRS on cleared denominators;
    /// the Euclidean algorithm over K = Q(t) suffers catastrophic
    /// coefficient swell on dense inputs.
    pub fn gcd(&self, other: &KxPoly) -> KxPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (a, _) = self.clear_denominators();
        let (b, _) = other.clear_denominators();
        KxPoly::from_poly(&crate::factor::bivar_gcd(&a, &b)).monic()
    }

    /// Extended gcd: (g, u, v) with g = u*self + v*other, g monic.
    pub fn xgcd(&self, other: &KxPoly) -> (KxPoly, KxPoly, KxPoly) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let (mut u0, mut u1) = (KxPoly::one(), KxPoly::zero());
        let (mut v0, mut v1) = (KxPoly::zero(), KxPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let nu = &u0 - &(&q * &u1);
            u0 = std::mem::replace(&mut u1, nu);
            let nv = &v0 - &(&q * &v1);
            v0 = std::mem::replace(&mut v1, nv);
        }
        if r0.is_zero() {
            return (KxPoly::zero(), KxPoly::zero(), KxPoly::zero());
        }
        let inv = r0.lc().inv();
        (r0.scale(&inv), u0.scale(&inv), v0.scale(&inv))
    }

    pub fn lcm(&self, other: &KxPoly) -> KxPoly {
        if self.is_zero() || other.is_zero() {
            return KxPoly::zero();
        }
        let g = self.gcd(other);
        (self * other).monic().try_div(&g).unwrap()
    }

    /// Yun's squarefree decomposition over K, returning monic squarefree
    /// pairwise-coprime parts with multiplicities.
    pub fn squarefree_decomp(&self) -> Vec<(KxPoly, u32)> {
        assert!(!self.is_zero());
        let f = self.monic();
        if f.deg() == 0 {
            return vec![];
        }
        let df = f.derivative();
        let a = f.gcd(&df);
        let mut b = f.try_div(&a).unwrap();
        let mut c = df.try_div(&a).unwrap();
        let mut d = &c - &b.derivative();
        let mut out = vec![];
        let mut i = 1u32;
        loop {
            let g = b.gcd(&d);
            if g.deg() > 0 {
                out.push((g.clone(), i));
            }
            b = b.try_div(&g).unwrap();
            if b.deg() == 0 {
                break;
            }
            c = d.try_div(&g).unwrap();
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Evaluate the coefficients at t = t0 (fails on a denominator zero).
    pub fn eval_t(&self, t0: &Rat) -> Option<QPoly> {
        let mut coeffs = Vec::with_capacity(self.c.len());
        for c in &self.c {
            coeffs.push(c.eval(t0)?);
        }
        Some(QPoly::new(coeffs))
    }
}

/// Partial fraction decomposition of num/den where den = prod f_i^{e_i}
/// with the f_i monic and pairwise coprime. Returns the polynomial part
/// and, per factor, the numerators a_{i,1}, ..., a_{i,e_i} of
/// a_{i,j}/f_i^j with deg a_{i,j} < deg f_i.
pub fn partial_fractions(
    num: &KxPoly,
    factors: &[(KxPoly, u32)],
) -> (KxPoly, Vec<Vec<KxPoly>>) {
    let den: KxPoly = factors
        .iter()
        .fold(KxPoly::one(), |acc, (f, e)| &acc * &f.pow(*e));
    let (polypart, mut rem) = num.divrem(&den);
    let mut per_factor = Vec::with_capacity(factors.len());
    for (i, (f, e)) in factors.iter().enumerate() {
        let fi = f.pow(*e);
        // rem is a numerator over the product of factors i..; peel off
        // the part over fi against the product of factors i+1..
        let rest: KxPoly = factors
            .iter()
            .skip(i + 1)
            .fold(KxPoly::one(), |acc, (g, d)| &acc * &g.pow(*d));
        let over_fi;
        if rest.is_one() {
            over_fi = std::mem::take(&mut rem);
        } else {
            // 1 = u*fi + v*rest  =>  rem/(fi*rest) = rem*v/fi + rem*u/rest
            let (g, u, v) = fi.xgcd(&rest);
            assert!(g.is_one(), "factors are not pairwise coprime");
            over_fi = (&rem * &v).rem(&fi);
            rem = (&rem * &u).rem(&rest);
        }
        // expand over_fi/f^e in powers of f: successive division
        let mut layers = vec![KxPoly::zero(); *e as usize];
        let mut cur = over_fi;
        for j in (0..*e as usize).rev() {
            let (q, r) = cur.divrem(f);
            layers[j] = r;
            cur = q;
        }
        assert!(cur.is_zero());
        per_factor.push(layers);
    }
    (polypart, per_factor)
}

impl Add for &KxPoly {
    type Output = KxPoly;
    fn add(self, rhs: &KxPoly) -> KxPoly {
        let n = self.c.len().max(rhs.c.len());
        let mut out = vec![RatFunT::zero(); n];
        for (i, a) in self.c.iter().enumerate() {
            out[i] = &out[i] + a;
        }
        for (i, b) in rhs.c.iter().enumerate() {
            out[i] = &out[i] + b;
        }
        KxPoly::new(out)
    }
}

impl Sub for &KxPoly {
    type Output = KxPoly;
    fn sub(self, rhs: &KxPoly) -> KxPoly {
        let n = self.c.len().max(rhs.c.len());
        let mut out = vec![RatFunT::zero(); n];
        for (i, a) in self.c.iter().enumerate() {
            out[i] = &out[i] + a;
        }
        for (i, b) in rhs.c.iter().enumerate() {
            out[i] = &out[i] - b;
        }
        KxPoly::new(out)
    }
}

impl Mul for &KxPoly {
    type Output = KxPoly;
    fn mul(self, rhs: &KxPoly) -> KxPoly {
        if self.is_zero() || rhs.is_zero() {
            return KxPoly::zero();
        }
        let mut out = vec![RatFunT::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        KxPoly::new(out)
    }
}

impl Neg for &KxPoly {
    type Output = KxPoly;
    fn neg(self) -> KxPoly {
        KxPoly {
            c: self.c.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for KxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "({})", a)?;
            } else if a.is_one() {
                write!(f, "x")?;
                if i > 1 {
                    write!(f, "^{}", i)?;
                }
            } else {
                write!(f, "({})*x", a)?;
                if i > 1 {
                    write!(f, "^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;

    fn kx_int(coeffs: &[i64]) -> KxPoly {
        KxPoly::new(
            coeffs
                .iter()
                .map(|&n| RatFunT::constant(rat_int(n)))
                .collect(),
        )
    }

    #[test]
    fn divrem_gcd_over_k() {
        // coefficients actually in Q(t): (x - t)(x + 1/t)
        let t = RatFunT::from_poly(QPoly::var());
        let f1 = KxPoly::new(vec![-&t, RatFunT::one()]);
        let f2 = KxPoly::new(vec![t.inv(), RatFunT::one()]);
        let prod = &f1 * &f2;
        let (q, r) = prod.divrem(&f1);
        assert!(r.is_zero());
        assert_eq!(q, f2);
        assert_eq!(prod.gcd(&f1), f1);
    }

    #[test]
    fn shift_x_roundtrip() {
        let t = RatFunT::from_poly(QPoly::var());
        let p = KxPoly::new(vec![t.clone(), t.inv(), RatFunT::one()]);
        assert_eq!(p.shift_x(3).shift_x(-3), p);
    }

    #[test]
    fn partial_fraction_reconstruction() {
        // num/(x^2 (x+1)) with num = x^3 + 2x + 5
        let x = kx_int(&[0, 1]);
        let xp1 = kx_int(&[1, 1]);
        let num = kx_int(&[5, 2, 0, 1]);
        let factors = vec![(x.clone(), 2u32), (xp1.clone(), 1u32)];
        let (poly, parts) = partial_fractions(&num, &factors);
        // rebuild: poly + sum a_{i,j}/f_i^j
        let den = &x.pow(2) * &xp1;
        let mut rebuilt = &poly * &den;
        for (i, (f, e)) in factors.iter().enumerate() {
            for (j, a) in parts[i].iter().enumerate() {
                let mult = den.try_div(&f.pow(j as u32 + 1)).unwrap();
                rebuilt = &rebuilt + &(a * &mult);
                assert!(a.deg() < f.deg());
                let _ = e;
            }
        }
        assert_eq!(rebuilt, num);
    }

    #[test]
    fn partial_fraction_three_factors() {
        // (t*x + 7)/((x+1)(x+3)(x-2)): the middle factor exercises the
        // peel-off against the remaining product only
        let t = RatFunT::from_poly(QPoly::var());
        let f1 = kx_int(&[1, 1]);
        let f2 = kx_int(&[3, 1]);
        let f3 = kx_int(&[-2, 1]);
        let num = KxPoly::new(vec![RatFunT::constant(rat_int(7)), t]);
        let factors = vec![(f1.clone(), 1u32), (f2.clone(), 1u32), (f3.clone(), 1u32)];
        let (poly, parts) = partial_fractions(&num, &factors);
        assert!(poly.is_zero());
        let den = &(&f1 * &f2) * &f3;
        let mut rebuilt = KxPoly::zero();
        for (i, (f, _)) in factors.iter().enumerate() {
            let mult = den.try_div(f).unwrap();
            rebuilt = &rebuilt + &(&parts[i][0] * &mult);
            // check against direct evaluation at the root
            let root = match i {
                0 => rat_int(-1),
                1 => rat_int(-3),
                _ => rat_int(2),
            };
            let root = RatFunT::constant(root);
            let expect = &num.eval(&root) * &mult.eval(&root).inv();
            assert_eq!(parts[i][0], KxPoly::constant(expect));
        }
        assert_eq!(rebuilt, num);
    }
}
