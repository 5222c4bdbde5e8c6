//! Irreducible factorization in K[x], K = Q(t): evaluate t at a good
//! point, factor univariately over Q, Hensel-lift the monic factors
//! t-adically, recombine, and certify every factor by exact division.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::factor::{primitive_in, resultant_x, univar_factor};
use crate::kpoly::KxPoly;
use crate::poly::{rat_int, Poly, Rat, Var};
use crate::qpoly::QPoly;

/// Factor p in K[x] into irreducible factors with multiplicities. Each
/// factor is returned as a primitive polynomial in Q[t,x] with positive
/// leading coefficient (its monic K[x] normalization is factor/lc_x);
/// the t-only content of p is not returned (it is a unit of K[x]).
pub fn bivar_factor_x(p: &Poly) -> Result<Vec<(Poly, u32)>> {
    assert!(!p.is_zero());
    assert!(p.deg_x() >= 1);
    let mut out: Vec<(Poly, u32)> = vec![];
    for (part, mult) in KxPoly::from_poly(p).squarefree_decomp() {
        if part.deg() < 1 {
            continue;
        }
        let (fp, _) = part.clear_denominators();
        let prim = primitive_in(&fp, Var::X);
        for f in factor_squarefree_x(&prim)? {
            out.push((f, mult));
        }
    }
    out.sort_by(|a, b| {
        a.0.deg_x()
            .cmp(&b.0.deg_x())
            .then_with(|| a.0.cmp(&b.0))
    });
    Ok(out)
}

/// Factor a squarefree (in K[x]) primitive polynomial with deg_x >= 1.
fn factor_squarefree_x(f: &Poly) -> Result<Vec<Poly>> {
    let n = f.deg_x();
    if n == 1 {
        return Ok(vec![f.clone()]);
    }
    let coeffs: Vec<QPoly> = f
        .coeffs_in(Var::X)
        .iter()
        .map(|c| c.to_qpoly(Var::T).expect("t-only coefficient"))
        .collect();
    let lc = coeffs.last().unwrap().clone();
    let disc = resultant_x(f, &f.derivative(Var::X));
    // good evaluation point: leading coefficient and discriminant both
    // nonzero at t0
    let t0 = (0i64..)
        .flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] })
        .find(|&k| {
            let tv = rat_int(k);
            !lc.eval(&tv).is_zero() && !disc.eval(&tv).is_zero()
        })
        .ok_or_else(|| Error::FactorizationIncomplete("no good evaluation point".into()))?;
    let tv = rat_int(t0);
    let f0 = f.eval_t(&tv).monic();
    let factors0: Vec<QPoly> = univar_factor(&f0).into_iter().map(|(g, _)| g).collect();
    if factors0.len() == 1 {
        return Ok(vec![f.clone()]);
    }
    // work t-locally: s = t - t0; lift the monic factorization of
    // fmon = f / lc to precision s^N with N past the t-degree of any
    // lc-adjusted true factor
    let big_n = (f.deg_t() + lc.deg() + 1) as usize;
    let fs: Vec<QPoly> = coeffs.iter().map(|c| c.shift_arg(t0)).collect();
    let lcs = lc.shift_arg(t0);
    let lcs_inv = series_inv(&lcs, precision_for(big_n));
    let prec = precision_for(big_n);
    let fmon: Vec<QPoly> = fs
        .iter()
        .map(|c| sp_truncq(&(c * &lcs_inv), prec))
        .collect();
    let lifted = tree_lift(&fmon, &factors0, prec);
    // recombine
    let mut remaining = f.clone();
    let mut pool: Vec<Vec<QPoly>> = lifted;
    let mut out = vec![];
    let mut s = 1usize;
    'outer: while 2 * s <= pool.len() {
        let combos = index_combinations(pool.len(), s);
        for combo in combos {
            let mut prod = vec![QPoly::one()];
            for &i in &combo {
                prod = sp_mul(&prod, &pool[i], prec);
            }
            // lc-adjust, map s -> t - t0, take the primitive part
            let adjusted: Vec<QPoly> = prod
                .iter()
                .map(|c| sp_truncq(&(c * &lcs), prec).shift_arg(-t0))
                .collect();
            let cand_poly = Poly::from_coeffs_in(
                Var::X,
                &adjusted
                    .iter()
                    .map(|c| Poly::from_qpoly(Var::T, c))
                    .collect::<Vec<_>>(),
            );
            if cand_poly.is_zero() {
                continue;
            }
            let cand = primitive_in(&cand_poly, Var::X);
            if cand.deg_x() < 1 {
                continue;
            }
            if let Some(q) = try_div_x(&remaining, &cand) {
                remaining = q;
                for &i in combo.iter().rev() {
                    pool.remove(i);
                }
                out.push(cand);
                continue 'outer;
            }
        }
        s += 1;
    }
    if remaining.deg_x() >= 1 {
        out.push(primitive_in(&remaining, Var::X));
    }
    // certify: product reconstructs f up to t-content
    let prod = out.iter().fold(Poly::one(), |acc, g| &acc * g);
    let ok = KxPoly::from_poly(&prod).monic() == KxPoly::from_poly(f).monic();
    if !ok {
        return Err(Error::FactorizationIncomplete(
            "recombined factors do not reconstruct the input".into(),
        ));
    }
    Ok(out)
}

/// Exact division in K[x] returning a primitive polynomial quotient.
fn try_div_x(f: &Poly, d: &Poly) -> Option<Poly> {
    let q = KxPoly::from_poly(f).try_div(&KxPoly::from_poly(d))?;
    let (qp, _) = q.clear_denominators();
    Some(primitive_in(&qp, Var::X))
}

fn precision_for(n: usize) -> usize {
    n.max(1)
}

/// Truncate a power series in s (QPoly) below s^prec.
fn sp_truncq(q: &QPoly, prec: usize) -> QPoly {
    QPoly::new(q.coeffs().iter().take(prec).cloned().collect())
}

/// Inverse of a unit power series mod s^prec (constant term nonzero).
fn series_inv(a: &QPoly, prec: usize) -> QPoly {
    let a0 = a.coeff(0);
    assert!(!a0.is_zero());
    let mut inv = QPoly::constant(Rat::one() / a0);
    let mut n = 1usize;
    while n < prec {
        n = (2 * n).min(prec);
        // inv <- inv * (2 - a*inv) mod s^n
        let prod = sp_truncq(&(a * &inv), n);
        let two_minus = &QPoly::constant(rat_int(2)) - &prod;
        inv = sp_truncq(&(&inv * &two_minus), n);
    }
    inv
}

// ---- (Q[s]/s^prec)[x] arithmetic: Vec<QPoly> indexed by power of x ----

fn sp_norm(mut v: Vec<QPoly>) -> Vec<QPoly> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn sp_mul(a: &[QPoly], b: &[QPoly], prec: usize) -> Vec<QPoly> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![QPoly::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = sp_truncq(&(&out[i + j] + &(x * y)), prec);
        }
    }
    sp_norm(out)
}

fn sp_add(a: &[QPoly], b: &[QPoly], prec: usize) -> Vec<QPoly> {
    let n = a.len().max(b.len());
    let mut out = vec![QPoly::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] = x.clone();
    }
    for (i, y) in b.iter().enumerate() {
        out[i] = sp_truncq(&(&out[i] + y), prec);
    }
    sp_norm(out)
}

fn sp_sub(a: &[QPoly], b: &[QPoly], prec: usize) -> Vec<QPoly> {
    let n = a.len().max(b.len());
    let mut out = vec![QPoly::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] = x.clone();
    }
    for (i, y) in b.iter().enumerate() {
        out[i] = sp_truncq(&(&out[i] - y), prec);
    }
    sp_norm(out)
}

/// Division by a divisor monic in x (unit leading series).
fn sp_divrem(f: &[QPoly], d: &[QPoly], prec: usize) -> (Vec<QPoly>, Vec<QPoly>) {
    let dlc = d.last().expect("nonzero divisor");
    assert!(dlc.is_one(), "divisor must be monic in x");
    if f.len() < d.len() {
        return (vec![], f.to_vec());
    }
    let mut rem = f.to_vec();
    let dd = d.len() - 1;
    let qd = rem.len() - d.len();
    let mut quot = vec![QPoly::zero(); qd + 1];
    for i in (0..=qd).rev() {
        let coef = rem[i + dd].clone();
        if !coef.is_zero() {
            for (j, dc) in d.iter().enumerate() {
                rem[i + j] = sp_truncq(&(&rem[i + j] - &(&coef * dc)), prec);
            }
        }
        quot[i] = coef;
    }
    (sp_norm(quot), sp_norm(rem))
}

/// Tree-structured Hensel lifting of the monic factorization at s = 0
/// to the full s-adic precision.
fn tree_lift(fmon: &[QPoly], factors0: &[QPoly], prec: usize) -> Vec<Vec<QPoly>> {
    if factors0.len() == 1 {
        return vec![fmon.to_vec()];
    }
    let half = factors0.len() / 2;
    let (left, right) = factors0.split_at(half);
    let g0 = left.iter().fold(QPoly::one(), |acc, f| &acc * f);
    let h0 = right.iter().fold(QPoly::one(), |acc, f| &acc * f);
    let (bg, bs, bt) = g0.xgcd(&h0);
    assert!(bg.is_one(), "coprime split at the evaluation point");
    let g = qx_to_sp(&g0);
    let h = qx_to_sp(&h0);
    let s = qx_to_sp(&bs);
    let t = qx_to_sp(&bt);
    let (g, h) = lift_pair(fmon, g, h, s, t, prec);
    let mut out = tree_lift(&g, left, prec);
    out.extend(tree_lift(&h, right, prec));
    out
}

/// Embed a Q[x] polynomial as an x-polynomial with constant series
/// coefficients.
fn qx_to_sp(p: &QPoly) -> Vec<QPoly> {
    p.coeffs()
        .iter()
        .map(|c| QPoly::constant(c.clone()))
        .collect()
}

fn lift_pair(
    f: &[QPoly],
    mut g: Vec<QPoly>,
    mut h: Vec<QPoly>,
    mut s: Vec<QPoly>,
    mut t: Vec<QPoly>,
    prec: usize,
) -> (Vec<QPoly>, Vec<QPoly>) {
    let mut n = 1usize;
    while n < prec {
        n = (2 * n).min(prec);
        // h monic side: se = q*h + r, g* = g + te + qg, h* = h + r
        let e = sp_sub(f, &sp_mul(&g, &h, n), n);
        let se = sp_mul(&s, &e, n);
        let (q, r) = sp_divrem(&se, &h, n);
        let gstar = sp_add(&g, &sp_add(&sp_mul(&t, &e, n), &sp_mul(&q, &g, n), n), n);
        let hstar = sp_add(&h, &r, n);
        let b = sp_sub(
            &sp_add(&sp_mul(&s, &gstar, n), &sp_mul(&t, &hstar, n), n),
            &[QPoly::one()],
            n,
        );
        let sb = sp_mul(&s, &b, n);
        let (c, d) = sp_divrem(&sb, &hstar, n);
        let sstar = sp_sub(&s, &d, n);
        let tstar = sp_sub(&t, &sp_add(&sp_mul(&t, &b, n), &sp_mul(&c, &gstar, n), n), n);
        g = gstar;
        h = hstar;
        s = sstar;
        t = tstar;
    }
    (g, h)
}

fn index_combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur = vec![];
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse_poly;

    fn factor_strs(p: &str) -> Vec<(Poly, u32)> {
        bivar_factor_x(&parse_poly(p).unwrap()).unwrap()
    }

    #[test]
    fn given_product_splits() {
        let fac = factor_strs("(x - t)*(x^2 + t)");
        assert_eq!(
            fac,
            vec![
                (parse_poly("x - t").unwrap(), 1),
                (parse_poly("x^2 + t").unwrap(), 1)
            ]
        );
    }

    #[test]
    fn rank2_quadratic_is_irreducible() {
        let p = parse_poly("x^2 + (t^2 + 1)*x + 1").unwrap();
        let fac = bivar_factor_x(&p).unwrap();
        assert_eq!(fac, vec![(p, 1)]);
    }

    #[test]
    fn multiplicities() {
        let fac = factor_strs("(x + 2)^2*(x^2 + t)");
        assert_eq!(
            fac,
            vec![
                (parse_poly("x + 2").unwrap(), 2),
                (parse_poly("x^2 + t").unwrap(), 1)
            ]
        );
    }

    #[test]
    fn nontrivial_leading_coefficient() {
        // (t*x + 1)(x - t): lc in x is t
        let fac = factor_strs("(t*x + 1)*(x - t)");
        assert_eq!(
            fac,
            vec![
                (parse_poly("t*x + 1").unwrap(), 1),
                (parse_poly("x - t").unwrap(), 1)
            ]
        );
    }

    #[test]
    fn needs_recombination() {
        // (x^2 - 2t^2)(x^2 - 3t^2): at many t0 the parts split further
        let fac = factor_strs("(x^2 - 2*t^2)*(x^2 - 3*t^2)");
        assert_eq!(
            fac,
            vec![
                (parse_poly("x^2 - 3*t^2").unwrap(), 1),
                (parse_poly("x^2 - 2*t^2").unwrap(), 1)
            ]
        );
    }

    #[test]
    fn reconstruction_random_shapes() {
        for p in [
            "(x - t)*(x - t - 1)*(x + t)",
            "(x^2 + t)*(x^2 + t + 1)",
            "(x + 2)*(t^2 - 1)^2*(x - t)",
            "(2*x + t^3)*(x^2 + x + t)",
        ] {
            let poly = parse_poly(p).unwrap();
            let fac = bivar_factor_x(&poly).unwrap();
            let prod = fac
                .iter()
                .fold(Poly::one(), |acc, (g, m)| &acc * &g.pow(*m));
            assert_eq!(
                KxPoly::from_poly(&prod).monic(),
                KxPoly::from_poly(&poly).monic(),
                "reconstruction failed for {}",
                p
            );
        }
    }
}
