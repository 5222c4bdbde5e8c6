//! Gcds, resultants, squarefree and irreducible factorization for the
//! bivariate kernel.

pub mod bivariate;
pub mod zassenhaus;

use crate::kpoly::KxPoly;
use crate::poly::{Poly, Var};
use crate::qpoly::QPoly;

pub use bivariate::bivar_factor_x;
pub use zassenhaus::univar_factor;

/// Content of p viewed as univariate in `v`: the gcd (in Q[other var])
/// of its coefficients, sign-normalized positive.
pub fn content_in(p: &Poly, v: Var) -> Poly {
    let mut g = QPoly::zero();
    for c in p.coeffs_in(v) {
        let cq = c.to_qpoly(v.other()).expect("coefficient in other var");
        if g.is_zero() {
            g = cq;
        } else if !cq.is_zero() {
            g = g.gcd(&cq);
        }
    }
    if g.is_zero() {
        return Poly::zero();
    }
    Poly::from_qpoly(v.other(), &g.monic())
}

/// Primitive part of p w.r.t. `v`, scaled to coprime integer
/// coefficients with positive pure-lex leading coefficient.
pub fn primitive_in(p: &Poly, v: Var) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    let cont = content_in(p, v);
    p.try_div(&cont).expect("content divides").primitive()
}

/// Gcd of p and q viewed as univariate in `main_var` over the fraction
/// field of the other variable; the result is primitive with positive
/// leading coefficient.
pub fn poly_gcd(p: &Poly, q: &Poly, main_var: Var) -> Poly {
    if p.is_zero() {
        return normalize_gcd(q, main_var);
    }
    if q.is_zero() {
        return normalize_gcd(p, main_var);
    }
    let (a, b) = match main_var {
        Var::X => (p.clone(), q.clone()),
        Var::T => (p.swap_vars(), q.swap_vars()),
    };
    let out = gcd_subresultant_x(&a, &b);
    match main_var {
        Var::X => out,
        Var::T => out.swap_vars(),
    }
}

/// Primitive K[x]-gcd by the subresultant PRS over Q[t]: fraction-free,
/// avoiding the coefficient blowup of rational-function Euclid.
fn gcd_subresultant_x(p: &Poly, q: &Poly) -> Poly {
    let pp = primitive_in(p, Var::X);
    let qp = primitive_in(q, Var::X);
    let (mut a, mut b) = if pp.deg_x() >= qp.deg_x() {
        (poly_to_qx(&pp), poly_to_qx(&qp))
    } else {
        (poly_to_qx(&qp), poly_to_qx(&pp))
    };
    if qx_deg(&b) < 0 {
        // one input is x-free after taking primitive parts: gcd is 1
        return Poly::one();
    }
    if qx_deg(&b) == 0 {
        return Poly::one();
    }
    let mut g = QPoly::one();
    let mut h = QPoly::one();
    loop {
        let d = qx_deg(&a) - qx_deg(&b);
        let r = qx_pseudo_rem(&a, &b, d as u32);
        if r.iter().all(|c| c.is_zero()) {
            let out = qx_to_poly(&b);
            return primitive_in(&out, Var::X);
        }
        if qx_deg(&r) == 0 {
            return Poly::one();
        }
        let lb = b[qx_deg(&b) as usize].clone();
        // divisor g*h^d is exact by the subresultant theory
        let div = &g * &h.pow(d as u32);
        a = b;
        b = r
            .into_iter()
            .map(|c| c.try_div(&div).expect("subresultant division is exact"))
            .collect();
        g = lb;
        // h = lb^d / h^(d-1)
        h = if d == 0 {
            h
        } else {
            g.pow(d as u32)
                .try_div(&h.pow(d as u32 - 1))
                .expect("subresultant h-update is exact")
        };
    }
}

fn poly_to_qx(p: &Poly) -> Vec<QPoly> {
    p.coeffs_in(Var::X)
        .iter()
        .map(|c| c.to_qpoly(Var::T).expect("t-only coefficient"))
        .collect()
}

fn qx_to_poly(c: &[QPoly]) -> Poly {
    let coeffs: Vec<Poly> = c.iter().map(|q| Poly::from_qpoly(Var::T, q)).collect();
    Poly::from_coeffs_in(Var::X, &coeffs)
}

fn qx_deg(c: &[QPoly]) -> i64 {
    for (i, q) in c.iter().enumerate().rev() {
        if !q.is_zero() {
            return i as i64;
        }
    }
    -1
}

/// Pseudo-remainder: lc(b)^(d+1) * a mod b, coefficients in Q[t].
fn qx_pseudo_rem(a: &[QPoly], b: &[QPoly], d: u32) -> Vec<QPoly> {
    let db = qx_deg(b);
    let lb = b[db as usize].clone();
    let mut r: Vec<QPoly> = a.to_vec();
    let mut steps = d as i64 + 1;
    while qx_deg(&r) >= db {
        let dr = qx_deg(&r);
        let lead = r[dr as usize].clone();
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        let shift = (dr - db) as usize;
        for (i, bc) in b.iter().enumerate().take(db as usize + 1) {
            let sub = &lead * bc;
            r[i + shift] = &r[i + shift] - &sub;
        }
        r.truncate(dr as usize);
        steps -= 1;
    }
    // pad with the remaining lb powers so the total factor is lb^(d+1)
    if steps > 0 {
        let extra = lb.pow(steps as u32);
        for c in r.iter_mut() {
            *c = &*c * &extra;
        }
    }
    r
}

/// Full bivariate gcd in Q[t,x] (up to a rational unit): the K[x]-gcd
/// of the primitive parts times the gcd of the t-contents.
pub fn bivar_gcd(p: &Poly, q: &Poly) -> Poly {
    // gcd with zero is the other argument up to a rational unit; the
    // t-content must survive here, unlike in the K[x] convention
    if p.is_zero() {
        return q.primitive();
    }
    if q.is_zero() {
        return p.primitive();
    }
    let cont = poly_gcd(&content_in(p, Var::X), &content_in(q, Var::X), Var::T);
    let prim = poly_gcd(&primitive_in(p, Var::X), &primitive_in(q, Var::X), Var::X);
    (&cont * &prim).primitive()
}

fn normalize_gcd(p: &Poly, main_var: Var) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    primitive_in(p, main_var)
}

/// Determinant of a square matrix of univariate polynomials by
/// fraction-free (Bareiss) elimination. Sign fixed to the usual
/// expansion convention.
pub fn qpoly_det(mat: &[Vec<QPoly>]) -> QPoly {
    let n = mat.len();
    if n == 0 {
        return QPoly::one();
    }
    let mut m: Vec<Vec<QPoly>> = mat.to_vec();
    let mut sign = 1i32;
    let mut prev = QPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return QPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.try_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = QPoly::zero();
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

/// Resultant of p and q with respect to x, as the determinant of the
/// Sylvester matrix (rows of q-coefficients first would flip the sign;
/// we list deg(q) rows of p above deg(p) rows of q).
pub fn resultant_x(p: &Poly, q: &Poly) -> QPoly {
    assert!(!p.is_zero() && !q.is_zero());
    let dp = p.deg_x();
    let dq = q.deg_x();
    if dp == 0 && dq == 0 {
        return QPoly::one();
    }
    let pc: Vec<QPoly> = p
        .coeffs_in(Var::X)
        .iter()
        .map(|c| c.to_qpoly(Var::T).expect("t-only coefficient"))
        .collect();
    let qc: Vec<QPoly> = q
        .coeffs_in(Var::X)
        .iter()
        .map(|c| c.to_qpoly(Var::T).expect("t-only coefficient"))
        .collect();
    let n = (dp + dq) as usize;
    let mut mat = vec![vec![QPoly::zero(); n]; n];
    for row in 0..dq as usize {
        for (j, c) in pc.iter().enumerate() {
            mat[row][row + (dp as usize - j)] = c.clone();
        }
    }
    for row in 0..dp as usize {
        for (j, c) in qc.iter().enumerate() {
            mat[dq as usize + row][row + (dq as usize - j)] = c.clone();
        }
    }
    qpoly_det(&mat)
}

/// Squarefree decomposition of p as univariate in `main_var` over the
/// fraction field of the other variable: pairwise-coprime squarefree
/// primitive factors with multiplicities, product reconstructing p up
/// to content.
pub fn squarefree_decomp(p: &Poly, main_var: Var) -> Vec<(Poly, u32)> {
    assert!(!p.is_zero());
    if p.deg(main_var) <= 0 {
        return vec![];
    }
    let work = match main_var {
        Var::X => p.clone(),
        Var::T => p.swap_vars(),
    };
    let parts = KxPoly::from_poly(&work).squarefree_decomp();
    parts
        .into_iter()
        .map(|(f, m)| {
            let (fp, _) = f.clear_denominators();
            let prim = primitive_in(&fp, Var::X);
            let out = match main_var {
                Var::X => prim,
                Var::T => prim.swap_vars(),
            };
            (out, m)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;

    fn t() -> Poly {
        Poly::var_t()
    }
    fn x() -> Poly {
        Poly::var_x()
    }

    #[test]
    fn gcd_examples() {
        // (x^2 - t^2, x - t) -> x - t
        let g = poly_gcd(&(&x().pow(2) - &t().pow(2)), &(&x() - &t()), Var::X);
        assert_eq!(g, &x() - &t());
        // gcd with zero
        let p = (&x() + &t()).scale(&rat_int(-3));
        assert_eq!(poly_gcd(&p, &Poly::zero(), Var::X), &x() + &t());
    }

    #[test]
    fn gcd_random_products() {
        // f*g, f*h with coprime f, g, h
        let f = &(&x().pow(2) + &t()) + &Poly::one();
        let g = &x() - &t().pow(2);
        let h = &(&x() * &t()) + &Poly::int(3);
        let got = poly_gcd(&(&f * &g), &(&f * &h), Var::X);
        assert_eq!(got, primitive_in(&f, Var::X));
        // cofactors coprime
        let c1 = (&f * &g).try_div(&got).unwrap();
        let c2 = (&f * &h).try_div(&got).unwrap();
        assert_eq!(poly_gcd(&c1, &c2, Var::X).deg_x(), 0);
    }

    #[test]
    fn bivar_gcd_keeps_t_content() {
        // K[x]-gcd alone would drop the common t-1 factor
        let p = &(&t() - &Poly::one()) * &x();
        let q = &(&t() - &Poly::one()) * &(&x() + &Poly::one());
        let g = bivar_gcd(&p, &q);
        assert_eq!(g, &t() - &Poly::one());
        // mixed content and primitive part
        let f = &x() - &t();
        let a = &(&p * &f);
        let b = &(&q * &f);
        assert_eq!(bivar_gcd(a, b), &(&t() - &Poly::one()) * &f);
    }

    #[test]
    fn resultant_examples() {
        // res_x(x - t, x + t) = 2t with rows-of-p-first convention:
        // det [[1, -t],[1, t]] = 2t
        let r = resultant_x(&(&x() - &t()), &(&x() + &t()));
        assert_eq!(r, QPoly::new(vec![rat_int(0), rat_int(2)]));
        // common root
        assert!(resultant_x(&x(), &x()).is_zero());
        // res(x-1, x-2) = det [[1,-1],[1,-2]] = -1
        let r = resultant_x(&(&x() - &Poly::one()), &(&x() - &Poly::int(2)));
        assert_eq!(r, QPoly::int(-1));
    }

    #[test]
    fn resultant_matches_sylvester_oracle() {
        // independent check: res_x(p, q) vanishes at t0 iff gcd nontrivial
        let p = &x().pow(2) - &t();
        let q = &x() - &t();
        // common root when t0^2 = t0 -> t0 in {0, 1}
        let r = resultant_x(&p, &q);
        use crate::poly::Rat;
        use num::Zero;
        assert!(r.eval(&rat_int(0)).is_zero());
        assert!(r.eval(&rat_int(1)).is_zero());
        assert!(!r.eval(&rat_int(2)).is_zero());
        let _ = Rat::zero();
    }

    #[test]
    fn squarefree_bivariate() {
        let f = &x().pow(2) + &t();
        let g = &x() - &t();
        let p = &f * &g.pow(2);
        let parts = squarefree_decomp(&p, Var::X);
        assert_eq!(parts, vec![(f.clone(), 1), (g.clone(), 2)]);
        // squarefree input
        assert_eq!(squarefree_decomp(&f, Var::X), vec![(f, 1)]);
    }
}
