//! Univariate factorization over Q: squarefree split, then for each
//! squarefree part a Zassenhaus round — factor modulo a good prime with
//! Cantor–Zassenhaus, Hensel-lift past the Mignotte bound, and recombine
//! subsets with exact trial division.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::poly::Rat;
use crate::qpoly::QPoly;

/// Monic irreducible factors over Q with multiplicities; content is
/// dropped (the product of factor^mult is the monic part of h).
pub fn univar_factor(h: &QPoly) -> Vec<(QPoly, u32)> {
    assert!(!h.is_zero());
    let mut out = vec![];
    for (part, mult) in h.squarefree_decomp() {
        let f = to_primitive_int(&part);
        for g in factor_squarefree(&f) {
            out.push((from_int_monic(&g), mult));
        }
    }
    out.sort_by(|a, b| {
        a.0.deg()
            .cmp(&b.0.deg())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    out
}

fn to_primitive_int(p: &QPoly) -> Vec<BigInt> {
    let prim = p.primitive();
    prim.coeffs().iter().map(|c| c.numer().clone()).collect()
}

fn from_int_monic(c: &[BigInt]) -> QPoly {
    QPoly::new(
        c.iter()
            .map(|n| Rat::from_integer(n.clone()))
            .collect::<Vec<_>>(),
    )
    .monic()
}

/// Factor a squarefree primitive integer polynomial into irreducible
/// primitive integer polynomials.
fn factor_squarefree(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![f.to_vec()];
    }
    // monicize: F(z) = l^(n-1) f(z/l) is monic over Z
    let l = f[n].clone();
    let fm: Vec<BigInt> = if l.is_one() {
        f.to_vec()
    } else {
        let mut out = Vec::with_capacity(n + 1);
        // coefficient of z^i becomes f_i * l^(n-1-i); the lead becomes 1
        let mut pw = BigInt::one();
        let mut pows = vec![BigInt::one(); n];
        for i in (0..n).rev() {
            pows[i] = pw.clone();
            pw *= &l;
        }
        for i in 0..n {
            out.push(&f[i] * &pows[i]);
        }
        out.push(BigInt::one());
        out
    };
    let monic_factors = factor_squarefree_monic(&fm);
    if l.is_one() {
        return monic_factors;
    }
    // map back: factor g of F gives primitive part of g(l*z)
    monic_factors
        .into_iter()
        .map(|g| {
            let mut out = Vec::with_capacity(g.len());
            let mut pw = BigInt::one();
            for c in &g {
                out.push(c * &pw);
                pw *= &l;
            }
            primitive_int(&out)
        })
        .collect()
}

fn primitive_int(c: &[BigInt]) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for a in c {
        g = g.gcd(a);
    }
    if c.last().map_or(false, |a| a.is_negative()) {
        g = -g;
    }
    c.iter().map(|a| a / &g).collect()
}

fn factor_squarefree_monic(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    // choose a prime where f stays squarefree; among a few, prefer the
    // fewest modular factors
    let mut best: Option<(u64, Vec<Vec<u64>>)> = None;
    let mut p = 101u64;
    let mut tried = 0;
    let mut rng = StdRng::seed_from_u64(0x5eed_fac7);
    while tried < 4 {
        p = next_prime(p + 1);
        let fp = reduce_mod(f, p);
        if fp.len() != n + 1 {
            continue; // cannot happen for monic f, defensive
        }
        let dfp = fp_deriv(&fp, p);
        if fp_gcd(&fp, &dfp, p).len() != 1 {
            continue; // not squarefree mod p
        }
        let factors = fp_factor_squarefree(&fp, p, &mut rng);
        let better = best.as_ref().map_or(true, |(_, bf)| factors.len() < bf.len());
        if better {
            best = Some((p, factors));
        }
        tried += 1;
    }
    let (p, mod_factors) = best.expect("found a usable prime");
    if mod_factors.len() == 1 {
        return vec![f.to_vec()];
    }
    // Mignotte-style bound: |coeff of any monic factor| <= 2^n * (n+1) * max|f_i|
    let maxc = f.iter().map(|c| c.abs()).max().unwrap();
    let bound: BigInt = (BigInt::one() << n) * BigInt::from(n as u64 + 1) * maxc;
    let target: BigInt = &bound * BigInt::from(2u32) + BigInt::one();
    let big_factors: Vec<Vec<BigInt>> = mod_factors
        .iter()
        .map(|g| g.iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    let pb = BigInt::from(p);
    let lifted = hensel_tree(f, &big_factors, &pb, &target);
    let modulus = {
        let mut m = pb.clone();
        while m < target {
            m = &m * &m;
        }
        m
    };
    recombine(f, lifted, &modulus)
}

/// Recombine lifted monic modular factors into true integer factors of
/// the monic squarefree f by exact trial division.
fn recombine(f: &[BigInt], mut lifted: Vec<Vec<BigInt>>, m: &BigInt) -> Vec<Vec<BigInt>> {
    let mut rest = f.to_vec();
    let mut out = vec![];
    let mut s = 1usize;
    'outer: while 2 * s <= lifted.len() {
        let idxs: Vec<usize> = (0..lifted.len()).collect();
        for combo in combinations(&idxs, s) {
            let mut prod = vec![BigInt::one()];
            for &i in &combo {
                prod = zm_mul(&prod, &lifted[i], m);
            }
            let cand: Vec<BigInt> = prod.iter().map(|c| symmetric(c, m)).collect();
            if let Some(q) = zdiv_exact(&rest, &cand) {
                rest = q;
                for &i in combo.iter().rev() {
                    lifted.remove(i);
                }
                out.push(cand);
                continue 'outer;
            }
        }
        s += 1;
    }
    if rest.len() > 1 {
        out.push(rest);
    }
    out
}

fn combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur = vec![];
    fn rec(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i]);
            rec(pool, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(pool, k, 0, &mut cur, &mut out);
    out
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * BigInt::from(2u32) > *m {
        r - m
    } else {
        r
    }
}

/// Exact division of integer polynomials with monic divisor.
fn zdiv_exact(f: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    if d.len() > f.len() {
        return None;
    }
    assert!(d.last().map_or(false, |c| c.is_one()));
    let mut rem = f.to_vec();
    let dd = d.len() - 1;
    let qd = rem.len() - d.len();
    let mut quot = vec![BigInt::zero(); qd + 1];
    for i in (0..=qd).rev() {
        let coef = rem[i + dd].clone();
        if !coef.is_zero() {
            for (j, dc) in d.iter().enumerate() {
                rem[i + j] -= &coef * dc;
            }
        }
        quot[i] = coef;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(quot)
    } else {
        None
    }
}

// ---- arithmetic on Z/m[z], coefficients in [0, m), divisors monic ----

fn zm_norm(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zm_reduce(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    zm_norm(v.iter().map(|c| c.mod_floor(m)).collect())
}

fn zm_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zm_reduce(&out, m)
}

fn zm_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y;
    }
    zm_reduce(&out, m)
}

fn zm_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    zm_reduce(&out, m)
}

/// Division with monic divisor over Z/m.
fn zm_divrem(f: &[BigInt], d: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    assert!(d.last().map_or(false, |c| c.is_one()));
    if f.len() < d.len() {
        return (vec![], f.to_vec());
    }
    let mut rem = f.to_vec();
    let dd = d.len() - 1;
    let qd = rem.len() - d.len();
    let mut quot = vec![BigInt::zero(); qd + 1];
    for i in (0..=qd).rev() {
        let coef = rem[i + dd].mod_floor(m);
        if !coef.is_zero() {
            for (j, dc) in d.iter().enumerate() {
                rem[i + j] = (&rem[i + j] - &coef * dc).mod_floor(m);
            }
        }
        quot[i] = coef;
    }
    (zm_norm(quot), zm_reduce(&rem, m))
}

/// Hensel lift f = g*h from mod p to mod >= target with g monic,
/// returning the list of lifted monic factors aligned with `factors`.
fn hensel_tree(
    f: &[BigInt],
    factors: &[Vec<BigInt>],
    p: &BigInt,
    target: &BigInt,
) -> Vec<Vec<BigInt>> {
    let modulus = {
        let mut m = p.clone();
        while m < *target {
            m = &m * &m;
        }
        m
    };
    let fm = zm_reduce(f, &modulus);
    tree_rec(&fm, factors, p, target)
}

fn tree_rec(f: &[BigInt], factors: &[Vec<BigInt>], p: &BigInt, target: &BigInt) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        return vec![f.to_vec()];
    }
    let half = factors.len() / 2;
    let (left, right) = factors.split_at(half);
    let mut g = vec![BigInt::one()];
    for fac in left {
        g = zm_mul(&g, fac, p);
    }
    let mut h = vec![BigInt::one()];
    for fac in right {
        h = zm_mul(&h, fac, p);
    }
    // Bezout: s*g + t*h = 1 mod p
    let (s, t) = fp_bezout_big(&g, &h, p);
    let (g, h) = hensel_pair(f, g, h, s, t, p, target);
    let mut out = tree_rec(&g, left, p, target);
    out.extend(tree_rec(&h, right, p, target));
    out
}

/// Quadratic Hensel lifting of a monic pair past the target modulus.
fn hensel_pair(
    f: &[BigInt],
    mut g: Vec<BigInt>,
    mut h: Vec<BigInt>,
    mut s: Vec<BigInt>,
    mut t: Vec<BigInt>,
    p: &BigInt,
    target: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut m = p.clone();
    while m < *target {
        let m2 = &m * &m;
        // factor update (h monic): se = q*h + r, g* = g + te + qg, h* = h + r
        let e = zm_sub(f, &zm_mul(&g, &h, &m2), &m2);
        let se = zm_mul(&s, &e, &m2);
        let (q, r) = zm_divrem(&se, &h, &m2);
        let gstar = zm_add(&g, &zm_add(&zm_mul(&t, &e, &m2), &zm_mul(&q, &g, &m2), &m2), &m2);
        let hstar = zm_add(&h, &r, &m2);
        // Bezout update: sb = c*h* + d, s* = s - d, t* = t - tb - cg*
        let b = zm_sub(
            &zm_add(&zm_mul(&s, &gstar, &m2), &zm_mul(&t, &hstar, &m2), &m2),
            &[BigInt::one()],
            &m2,
        );
        let sb = zm_mul(&s, &b, &m2);
        let (c, d) = zm_divrem(&sb, &hstar, &m2);
        let sstar = zm_sub(&s, &d, &m2);
        let tstar = zm_sub(
            &t,
            &zm_add(&zm_mul(&t, &b, &m2), &zm_mul(&c, &gstar, &m2), &m2),
            &m2,
        );
        g = gstar;
        h = hstar;
        s = sstar;
        t = tstar;
        m = m2;
    }
    (g, h)
}

fn fp_bezout_big(g: &[BigInt], h: &[BigInt], p: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let pu: u64 = u64::try_from(p).unwrap();
    let gs: Vec<u64> = g.iter().map(|c| u64::try_from(&c.mod_floor(p)).unwrap()).collect();
    let hs: Vec<u64> = h.iter().map(|c| u64::try_from(&c.mod_floor(p)).unwrap()).collect();
    let (gcd, s, t) = fp_xgcd(&gs, &hs, pu);
    assert_eq!(gcd.len(), 1, "lifted halves must be coprime mod p");
    let inv = fp_inv(gcd[0], pu);
    let s: Vec<BigInt> = s.iter().map(|&c| BigInt::from(fp_mul(c, inv, pu))).collect();
    let t: Vec<BigInt> = t.iter().map(|&c| BigInt::from(fp_mul(c, inv, pu))).collect();
    (s, t)
}

// ---- GF(p)[z] with u64 coefficients ----

fn reduce_mod(f: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut out: Vec<u64> = f
        .iter()
        .map(|c| u64::try_from(&c.mod_floor(&pb)).unwrap())
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn fp_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn fp_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = fp_mul(acc, a, p);
        }
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    acc
}

fn fp_inv(a: u64, p: u64) -> u64 {
    fp_pow(a, p - 2, p)
}

fn fpp_norm(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn fpp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + fp_mul(x, y, p)) % p;
        }
    }
    fpp_norm(out)
}

fn fpp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, &x) in a.iter().enumerate() {
        out[i] = x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] = (out[i] + p - y) % p;
    }
    fpp_norm(out)
}

fn fpp_divrem(f: &[u64], d: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!d.is_empty());
    if f.len() < d.len() {
        return (vec![], f.to_vec());
    }
    let mut rem = f.to_vec();
    let dd = d.len() - 1;
    let inv = fp_inv(d[dd], p);
    let qd = rem.len() - d.len();
    let mut quot = vec![0u64; qd + 1];
    for i in (0..=qd).rev() {
        let coef = fp_mul(rem[i + dd], inv, p);
        if coef != 0 {
            for (j, &dc) in d.iter().enumerate() {
                rem[i + j] = (rem[i + j] + p - fp_mul(coef, dc, p)) % p;
            }
        }
        quot[i] = coef;
    }
    (fpp_norm(quot), fpp_norm(rem))
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let (_, r) = fpp_divrem(&a, &b, p);
        a = b;
        b = r;
    }
    fp_monic(&a, p)
}

fn fp_xgcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let (mut u0, mut u1) = (vec![1u64], vec![]);
    let (mut v0, mut v1) = (vec![], vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fpp_divrem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let nu = fpp_sub(&u0, &fpp_mul(&q, &u1, p), p);
        u0 = std::mem::replace(&mut u1, nu);
        let nv = fpp_sub(&v0, &fpp_mul(&q, &v1, p), p);
        v0 = std::mem::replace(&mut v1, nv);
    }
    (r0, u0, v0)
}

fn fp_monic(a: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() {
        return vec![];
    }
    let inv = fp_inv(*a.last().unwrap(), p);
    a.iter().map(|&c| fp_mul(c, inv, p)).collect()
}

fn fp_deriv(f: &[u64], p: u64) -> Vec<u64> {
    if f.len() <= 1 {
        return vec![];
    }
    fpp_norm(
        f[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| fp_mul(c, (i as u64 + 1) % p, p))
            .collect(),
    )
}

/// z^(p^d) mod f style powers: base^e mod f with big exponent given as
/// (p, d) or explicit bits.
fn fp_powmod_bits(base: &[u64], ebits: &[bool], f: &[u64], p: u64) -> Vec<u64> {
    // ebits most significant first
    let mut acc = vec![1u64];
    for &bit in ebits {
        acc = fpp_divrem(&fpp_mul(&acc, &acc, p), f, p).1;
        if bit {
            acc = fpp_divrem(&fpp_mul(&acc, base, p), f, p).1;
        }
    }
    acc
}

fn bits_of_big(n: &BigInt) -> Vec<bool> {
    let bytes = n.to_bytes_be().1;
    let mut bits = vec![];
    let mut started = false;
    for byte in bytes {
        for i in (0..8).rev() {
            let b = (byte >> i) & 1 == 1;
            if b {
                started = true;
            }
            if started {
                bits.push(b);
            }
        }
    }
    bits
}

/// Factor a squarefree monic polynomial over GF(p), p odd.
fn fp_factor_squarefree(f: &[u64], p: u64, rng: &mut StdRng) -> Vec<Vec<u64>> {
    let mut out = vec![];
    let mut rest = fp_monic(f, p);
    // distinct-degree
    let x = vec![0u64, 1u64];
    let mut h = fpp_divrem(&x, &rest, p).1;
    let pbits = bits_of_big(&BigInt::from(p));
    let mut d = 1usize;
    while rest.len() > 1 && 2 * d <= rest.len() - 1 {
        h = fp_powmod_bits(&h, &pbits, &rest, p);
        let g = fp_gcd(&fpp_sub(&h, &x, p), &rest, p);
        if g.len() > 1 {
            out.extend(fp_edf(&g, d, p, rng));
            rest = fpp_divrem(&rest, &g, p).0;
            h = fpp_divrem(&h, &rest, p).1;
        }
        d += 1;
    }
    if rest.len() > 1 {
        out.push(rest);
    }
    out.sort();
    out
}

/// Equal-degree splitting (Cantor–Zassenhaus) for a product of
/// irreducibles all of degree d.
fn fp_edf(f: &[u64], d: usize, p: u64, rng: &mut StdRng) -> Vec<Vec<u64>> {
    let deg = f.len() - 1;
    if deg == d {
        return vec![f.to_vec()];
    }
    let exp: BigInt = (BigInt::from(p).pow(d as u32) - BigInt::one()) / BigInt::from(2u32);
    let ebits = bits_of_big(&exp);
    loop {
        let r: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..p)).collect();
        let r = fpp_norm(r);
        if r.len() <= 1 {
            continue;
        }
        let g = fp_gcd(&r, f, p);
        let g = if g.len() > 1 && g.len() < f.len() {
            g
        } else {
            let s = fp_powmod_bits(&r, &ebits, f, p);
            let s1 = fpp_sub(&s, &[1u64], p);
            let g = fp_gcd(&s1, f, p);
            if g.len() > 1 && g.len() < f.len() {
                g
            } else {
                continue;
            }
        };
        let h = fpp_divrem(f, &g, p).0;
        let mut out = fp_edf(&g, d, p, rng);
        out.extend(fp_edf(&fp_monic(&h, p), d, p, rng));
        return out;
    }
}

fn next_prime(mut n: u64) -> u64 {
    if n <= 2 {
        return 2;
    }
    if n % 2 == 0 {
        n += 1;
    }
    while !is_prime(n) {
        n += 2;
    }
    n
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = 37u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;

    fn q(coeffs: &[i64]) -> QPoly {
        QPoly::new(coeffs.iter().map(|&n| rat_int(n)).collect())
    }

    fn reassemble(factors: &[(QPoly, u32)]) -> QPoly {
        factors
            .iter()
            .fold(QPoly::one(), |acc, (f, m)| &acc * &f.pow(*m))
    }

    #[test]
    fn simple_split() {
        // z^2 - 1 = (z-1)(z+1)
        let f = q(&[-1, 0, 1]);
        let fac = univar_factor(&f);
        assert_eq!(fac, vec![(q(&[-1, 1]), 1), (q(&[1, 1]), 1)]);
    }

    #[test]
    fn irreducible_stays() {
        let f = q(&[1, 0, 1]); // z^2 + 1
        assert_eq!(univar_factor(&f), vec![(f, 1)]);
        let g = q(&[1, 1, 0, 0, 1]); // z^4 + z + 1, irreducible over Q
        assert_eq!(univar_factor(&g), vec![(g, 1)]);
    }

    #[test]
    fn multiplicities_and_reconstruction() {
        let f = &(&q(&[-1, 1]).pow(2) * &q(&[1, 1, 1])) * &q(&[3, 1]).pow(3);
        let fac = univar_factor(&f);
        assert_eq!(reassemble(&fac), f.monic());
        assert_eq!(fac.len(), 3);
    }

    #[test]
    fn non_monic_input() {
        // 6z^2 + 5z + 1 = (2z+1)(3z+1) -> monic (z+1/2)(z+1/3)
        let f = q(&[1, 5, 6]);
        let fac = univar_factor(&f);
        assert_eq!(fac.len(), 2);
        assert_eq!(reassemble(&fac), f.monic());
        for (g, _) in &fac {
            assert_eq!(g.deg(), 1);
        }
    }

    #[test]
    fn swinnerton_dyer_like_recombination() {
        // (z^2 - 2)(z^2 - 3): splits mod many primes into linears but is
        // a product of two quadratics over Q
        let f = &q(&[-2, 0, 1]) * &q(&[-3, 0, 1]);
        let fac = univar_factor(&f);
        assert_eq!(
            fac,
            vec![(q(&[-3, 0, 1]), 1), (q(&[-2, 0, 1]), 1)]
        );
    }

    #[test]
    fn larger_product() {
        let parts = [q(&[1, 3, 1]), q(&[-7, 0, 0, 1]), q(&[2, 1]), q(&[-1, 1, 1])];
        let f = parts.iter().fold(QPoly::one(), |acc, p| &acc * p);
        let fac = univar_factor(&f);
        assert_eq!(reassemble(&fac), f.monic());
        assert_eq!(fac.iter().map(|(f, m)| f.deg() * *m as i64).sum::<i64>(), f.deg());
        assert_eq!(fac.len(), 4);
    }
}

