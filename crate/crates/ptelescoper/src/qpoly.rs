//! Dense univariate polynomials over Q and the rational function field
//! Q(t) used as coefficient domain for polynomials in x.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::poly::Rat;

/// Univariate polynomial over Q, dense, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct QPoly {
    c: Vec<Rat>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { c: coeffs }
    }

    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        QPoly::new(vec![c])
    }

    pub fn int(n: i64) -> Self {
        QPoly::constant(Rat::from_integer(BigInt::from(n)))
    }

    pub fn var() -> Self {
        QPoly::new(vec![Rat::zero(), Rat::one()])
    }

    /// c * z^n
    pub fn monomial(c: Rat, n: usize) -> Self {
        let mut v = vec![Rat::zero(); n + 1];
        v[n] = c;
        QPoly::new(v)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.c.get(i).cloned().unwrap_or_else(Rat::zero)
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

    pub fn lc(&self) -> Rat {
        self.c.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        self.scale(&(Rat::one() / self.lc()))
    }

    pub fn scale(&self, k: &Rat) -> QPoly {
        if k.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            c: self.c.iter().map(|a| a * k).collect(),
        }
    }

    pub fn eval(&self, z: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.c.iter().rev() {
            acc = acc * z + a;
        }
        acc
    }

    pub fn derivative(&self) -> QPoly {
        if self.c.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::new(
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, a)| a * Rat::from_integer(BigInt::from(i as i64 + 1)))
                .collect(),
        )
    }

    /// q(z + k)
    pub fn shift_arg(&self, k: i64) -> QPoly {
        let shift = QPoly::new(vec![Rat::from_integer(BigInt::from(k)), Rat::one()]);
        self.compose(&shift)
    }

    pub fn compose(&self, inner: &QPoly) -> QPoly {
        let mut acc = QPoly::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * inner) + &QPoly::constant(a.clone());
        }
        acc
    }

    pub fn pow(&self, n: u32) -> QPoly {
        let mut acc = QPoly::one();
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

    pub fn divrem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.deg() < d.deg() {
            return (QPoly::zero(), self.clone());
        }
        let mut rem = self.c.clone();
        let dd = d.deg() as usize;
        let dlc = d.lc();
        let qd = rem.len() - dd - 1;
        let mut quot = vec![Rat::zero(); qd + 1];
        for i in (0..=qd).rev() {
            let coef = &rem[i + dd] / &dlc;
            if coef.is_zero() {
                continue;
            }
            for (j, dc) in d.c.iter().enumerate() {
                let v = &coef * dc;
                rem[i + j] -= v;
            }
            quot[i] = coef;
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    pub fn rem(&self, d: &QPoly) -> QPoly {
        self.divrem(d).1
    }

    pub fn try_div(&self, d: &QPoly) -> Option<QPoly> {
        let (q, r) = self.divrem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, u, v) with g = u*self + v*other, g monic.
    pub fn xgcd(&self, other: &QPoly) -> (QPoly, QPoly, QPoly) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let (mut u0, mut u1) = (QPoly::one(), QPoly::zero());
        let (mut v0, mut v1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let nu = &u0 - &(&q * &u1);
            u0 = std::mem::replace(&mut u1, nu);
            let nv = &v0 - &(&q * &v1);
            v0 = std::mem::replace(&mut v1, nv);
        }
        if r0.is_zero() {
            return (QPoly::zero(), QPoly::zero(), QPoly::zero());
        }
        let inv = Rat::one() / r0.lc();
        (r0.scale(&inv), u0.scale(&inv), v0.scale(&inv))
    }

    pub fn lcm(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let g = self.gcd(other);
        (&(self * other).monic()).try_div(&g).unwrap()
    }

    /// Rational content with sign of lc, as for `Poly`.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return Rat::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.c {
            num_gcd = num::integer::gcd(num_gcd, c.numer().abs());
            den_lcm = num::integer::lcm(den_lcm, c.denom().clone());
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        if self.lc().is_negative() {
            content = -content;
        }
        content
    }

    pub fn primitive(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        self.scale(&(Rat::one() / self.content()))
    }

    /// Yun's squarefree decomposition: returns [(g_i, i)] with
    /// self = content * prod g_i^i, g_i monic squarefree pairwise coprime.
    pub fn squarefree_decomp(&self) -> Vec<(QPoly, u32)> {
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

    /// All integer roots.
    pub fn integer_roots(&self) -> Vec<i64> {
        if self.is_zero() {
            return vec![];
        }
        // clear denominators, then divisors of the trailing coefficient
        let p = self.primitive();
        let mut coeffs: Vec<BigInt> = p.c.iter().map(|c| c.numer().clone()).collect();
        // strip z^k factor
        let mut roots = vec![];
        let mut k = 0;
        while coeffs.first().map_or(false, |c| c.is_zero()) {
            coeffs.remove(0);
            k += 1;
        }
        if k > 0 {
            roots.push(0);
        }
        if coeffs.len() <= 1 {
            roots.sort_unstable();
            return roots;
        }
        let a0 = coeffs[0].abs();
        let mut d = BigInt::one();
        while &d * &d <= a0 {
            if (&a0 % &d).is_zero() {
                for cand in [d.clone(), &a0 / &d] {
                    for sign in [1i64, -1] {
                        let r: BigInt = if sign > 0 { cand.clone() } else { -cand.clone() };
                        if let Ok(small) = i64::try_from(&r) {
                            let rr = Rat::from_integer(r);
                            if p.eval(&rr).is_zero() && !roots.contains(&small) {
                                roots.push(small);
                            }
                        }
                    }
                }
            }
            d += 1;
        }
        roots.sort_unstable();
        roots
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.c.len().max(rhs.c.len());
        let mut out = vec![Rat::zero(); n];
        for (i, a) in self.c.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in rhs.c.iter().enumerate() {
            out[i] += b;
        }
        QPoly::new(out)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.c.len().max(rhs.c.len());
        let mut out = vec![Rat::zero(); n];
        for (i, a) in self.c.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in rhs.c.iter().enumerate() {
            out[i] -= b;
        }
        QPoly::new(out)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            c: self.c.iter().map(|a| -a.clone()).collect(),
        }
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let abs = a.abs();
            if first {
                if a.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if a.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !abs.is_one() || i == 0 {
                write!(f, "{}", abs)?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            if i >= 1 {
                write!(f, "t")?;
                if i > 1 {
                    write!(f, "^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

/// Element of the field Q(t): reduced fraction of univariate polynomials,
/// monic denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatFunT {
    num: QPoly,
    den: QPoly,
}

impl RatFunT {
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in Q(t)");
        if num.is_zero() {
            return RatFunT {
                num: QPoly::zero(),
                den: QPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.try_div(&g).unwrap();
        let mut den = den.try_div(&g).unwrap();
        let lc = den.lc();
        if !lc.is_one() {
            let inv = Rat::one() / lc;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunT { num, den }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFunT {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(QPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> RatFunT {
        assert!(!self.is_zero(), "inverse of zero in Q(t)");
        RatFunT::new(self.den.clone(), self.num.clone())
    }

    /// Shift t -> t + k.
    pub fn shift_t(&self, k: i64) -> RatFunT {
        RatFunT::new(self.num.shift_arg(k), self.den.shift_arg(k))
    }

    pub fn eval(&self, t0: &Rat) -> Option<Rat> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(t0) / d)
        }
    }

    pub fn pow(&self, n: u32) -> RatFunT {
        RatFunT::new(self.num.pow(n), self.den.pow(n))
    }
}

impl Add for &RatFunT {
    type Output = RatFunT;
    fn add(self, rhs: &RatFunT) -> RatFunT {
        RatFunT::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunT {
    type Output = RatFunT;
    fn sub(self, rhs: &RatFunT) -> RatFunT {
        RatFunT::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFunT {
    type Output = RatFunT;
    fn mul(self, rhs: &RatFunT) -> RatFunT {
        RatFunT::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunT {
    type Output = RatFunT;
    fn div(self, rhs: &RatFunT) -> RatFunT {
        assert!(!rhs.is_zero(), "division by zero in Q(t)");
        RatFunT::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFunT {
    type Output = RatFunT;
    fn neg(self) -> RatFunT {
        RatFunT {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
