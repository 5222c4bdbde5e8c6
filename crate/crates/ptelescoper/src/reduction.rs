//! Generalized Abramov-Petkovsek reduction: orbit-grouped partial
//! fractions, shift reduction to per-orbit representatives, the
//! (1/d)PW + (1/e)RW remainder form, the infinity reduction through a
//! complement of the Delta_x-image on a Laurent window, and the
//! summability decision with verified certificates.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::factor::bivar_factor_x;
use crate::kpoly::{partial_fractions, KxPoly};
use crate::poly::{Poly, Var};
use crate::qpoly::{QPoly, RatFunT};
use crate::shift::shift_equivalent_x;
use crate::system::{ModuleElement, ShiftSystem};

const SWEEP_CAP: usize = 256;

/// One strictly-proper partial fraction term: num / sigma_x^shift(rep)^power
/// per component, with deg_x(num) < deg_x(rep).
#[derive(Debug, Clone)]
pub struct PfTerm {
    pub rep_idx: usize,
    pub shift: i64,
    pub power: u32,
    pub num: Vec<KxPoly>,
}

#[derive(Debug, Clone)]
pub struct OrbitPf {
    pub poly_part: Vec<KxPoly>,
    pub terms: Vec<PfTerm>,
}

/// f = Delta_x(g) + (1/d)PW + (1/e)RW.
#[derive(Debug, Clone)]
pub struct ReductionResult {
    pub certificate_g: ModuleElement,
    pub d: Poly,
    /// d in factored form: (orbit representative index, power)
    pub d_factors: Vec<(usize, u32)>,
    pub p: Vec<KxPoly>,
    pub r: Vec<KxPoly>,
}

/// f = Delta_x(g) + (1/d)PW + (1/a)QV with Q supported on the
/// complement coordinates of the Laurent window.
#[derive(Debug, Clone)]
pub struct FullDecomposition {
    pub certificate_g: ModuleElement,
    pub d: Poly,
    /// d in factored form: (orbit representative index, power)
    pub d_factors: Vec<(usize, u32)>,
    pub p: Vec<KxPoly>,
    /// coordinate (exponent, component) -> K-coefficient of x^k V_i
    pub q: BTreeMap<(i64, usize), RatFunT>,
}

#[derive(Debug, Clone)]
pub struct NvInfo {
    pub a: KxPoly,
    pub b: Vec<Vec<KxPoly>>,
    pub mu: i64,
    pub delta: i64,
    pub dim: usize,
    pub basis: Vec<(i64, usize)>,
}

type LVec = BTreeMap<(i64, usize), RatFunT>;

fn lv_sub_scaled(target: &mut LVec, src: &LVec, c: &RatFunT) {
    for (k, v) in src {
        let cur = target.remove(k).unwrap_or_else(RatFunT::zero);
        let next = &cur - &(c * v);
        if !next.is_zero() {
            target.insert(*k, next);
        }
    }
}

fn lv_scale(v: &mut LVec, c: &RatFunT) {
    for val in v.values_mut() {
        *val = &*val * c;
    }
}

struct EchRow {
    row: LVec,
    /// combination of generators x^j V_i producing this row
    cert: LVec,
}

struct InfData {
    a: KxPoly,
    b: Vec<Vec<KxPoly>>,
    mu: i64,
    delta: i64,
    s_max: i64,
    pivots: BTreeMap<(i64, usize), EchRow>,
    generated: HashSet<(i64, usize)>,
}

/// Persistent reduction state for one system: orbit representatives
/// grow as new denominator orbits appear, and the infinity echelon data
/// is shared, so successive reductions (e.g. of S_t^l f) stay aligned.
pub struct ReductionContext<'a> {
    pub sys: &'a ShiftSystem,
    reps: Vec<Poly>,
    inf: Option<InfData>,
}

impl<'a> ReductionContext<'a> {
    pub fn new(sys: &'a ShiftSystem) -> Self {
        ReductionContext {
            sys,
            reps: sys.orbit_reps.clone(),
            inf: None,
        }
    }

    pub fn reps(&self) -> &[Poly] {
        &self.reps
    }

    /// Fix the representative for an orbit before any factor of that
    /// orbit is seen, so residuals settle at this position.
    pub fn register_rep(&mut self, p: &Poly) {
        let _ = self.rep_for(p);
    }

    /// Representative and shift for an irreducible K[x] factor:
    /// q = sigma_x^shift(rep). Unknown orbits register q itself.
    fn rep_for(&mut self, q: &Poly) -> (usize, i64) {
        let q = q.monic();
        for (idx, rep) in self.reps.iter().enumerate() {
            if let Some(k) = shift_equivalent_x(rep, &q) {
                return (idx, k);
            }
        }
        self.reps.push(q);
        (self.reps.len() - 1, 0)
    }

    pub fn orbit_partial_fractions(&mut self, f: &ModuleElement) -> Result<OrbitPf> {
        let r = self.sys.r;
        if f.is_zero() {
            return Ok(OrbitPf {
                poly_part: vec![KxPoly::zero(); r],
                terms: vec![],
            });
        }
        let mut factors: Vec<(Poly, u32)> = vec![];
        if f.u.deg_x() >= 1 {
            factors = bivar_factor_x(&f.u)?;
        }
        // u = c * prod of monic K[x] factors, c a unit of K
        let factors_kx: Vec<(KxPoly, u32)> = factors
            .iter()
            .map(|(q, m)| (KxPoly::from_poly(q).monic(), *m))
            .collect();
        let den: KxPoly = factors_kx
            .iter()
            .fold(KxPoly::one(), |acc, (q, m)| &acc * &q.pow(*m));
        let (cfun, rem) = KxPoly::from_poly(&f.u).divrem(&den);
        assert!(rem.is_zero() && cfun.is_constant(), "unit factor of K");
        let cinv = cfun.coeff(0).inv();
        let mut poly_part = Vec::with_capacity(r);
        let mut layers: Vec<Vec<Vec<KxPoly>>> = vec![]; // [comp][factor][power-1]
        for k in 0..r {
            let num = KxPoly::from_poly(&f.a[k]).scale(&cinv);
            let (pp, per_factor) = partial_fractions(&num, &factors_kx);
            poly_part.push(pp);
            layers.push(per_factor);
        }
        let mut terms = vec![];
        for (fi, (q, m)) in factors.iter().enumerate() {
            let (rep_idx, shift) = self.rep_for(q);
            for j in 1..=*m {
                let num: Vec<KxPoly> = (0..r)
                    .map(|k| layers[k][fi][j as usize - 1].clone())
                    .collect();
                if num.iter().all(|n| n.is_zero()) {
                    continue;
                }
                terms.push(PfTerm {
                    rep_idx,
                    shift,
                    power: j,
                    num,
                });
            }
        }
        Ok(OrbitPf { poly_part, terms })
    }

    fn rep_kx(&self, idx: usize) -> KxPoly {
        KxPoly::from_poly(&self.reps[idx]).monic()
    }

    /// The term as a module element.
    pub fn term_element(&self, term: &PfTerm) -> ModuleElement {
        let den = self.rep_kx(term.rep_idx).shift_x(term.shift).pow(term.power);
        kx_fraction_element(self.sys, &term.num, &den)
    }

    fn pf_home_element(&self, pf: &OrbitPf) -> ModuleElement {
        let mut acc = kx_fraction_element(self.sys, &pf.poly_part, &KxPoly::one());
        for term in pf.terms.iter().filter(|t| t.shift == 0) {
            acc = self.sys.add(&acc, &self.term_element(term));
        }
        acc
    }

    pub fn pf_reconstruct(&self, pf: &OrbitPf) -> ModuleElement {
        let mut acc = kx_fraction_element(self.sys, &pf.poly_part, &KxPoly::one());
        for term in &pf.terms {
            acc = self.sys.add(&acc, &self.term_element(term));
        }
        acc
    }

    /// Move one off-representative term a single step toward its orbit
    /// representative: returns (certificate piece, moved residual) with
    /// term = Delta_x(certificate) + residual.
    fn step_term(&self, term: &PfTerm) -> (ModuleElement, ModuleElement) {
        let elem = self.term_element(term);
        if term.shift > 0 {
            // v = Delta_x(S_x^{-1} v) + S_x^{-1} v
            let moved = self.sys.apply_sx_inv(&elem);
            (moved.clone(), moved)
        } else {
            // v = Delta_x(-v) + S_x(v)
            let neg = neg_element(&elem);
            let moved = self.sys.apply_sx(&elem);
            (neg, moved)
        }
    }

    /// Reduce f to a residual whose denominator is shift-free with
    /// respect to x (all irreducible factors at their orbit
    /// representative): f = Delta_x(g) + h.
    pub fn ap_reduce(&mut self, f: &ModuleElement) -> Result<(ModuleElement, ModuleElement)> {
        let mut g = ModuleElement::zero(self.sys.r);
        let mut work = f.clone();
        for _ in 0..SWEEP_CAP {
            let pf = self.orbit_partial_fractions(&work)?;
            if pf.terms.iter().all(|t| t.shift == 0) {
                return Ok((g, work));
            }
            let mut acc = self.pf_home_element(&pf);
            for term in pf.terms.iter().filter(|t| t.shift != 0) {
                let (cert, moved) = self.step_term(term);
                g = self.sys.add(&g, &cert);
                acc = self.sys.add(&acc, &moved);
            }
            work = acc;
        }
        Err(Error::ReductionDiverged)
    }

    /// Move a single partial fraction term all the way to its orbit
    /// representative: term = Delta_x(g) + residual.
    pub fn shift_reduce_term(&mut self, term: &PfTerm) -> Result<(ModuleElement, ModuleElement)> {
        let elem = self.term_element(term);
        let (g, h) = self.ap_reduce(&elem)?;
        Ok((g, h))
    }

    /// Multiplicity of the monic rep in e as a K[x] polynomial.
    fn mult_in_e(&self, rep_kx: &KxPoly) -> u32 {
        let mut e = KxPoly::from_poly(&self.sys.e);
        let mut m = 0;
        while let Some(q) = e.try_div(rep_kx) {
            e = q;
            m += 1;
        }
        m
    }

    /// Corollary-style remainder form f = Delta_x(g) + (1/d)PW + (1/e)RW.
    pub fn remainder_form(&mut self, f: &ModuleElement) -> Result<ReductionResult> {
        let r = self.sys.r;
        let (g, h) = self.ap_reduce(f)?;
        let pf = self.orbit_partial_fractions(&h)?;
        let e_kx = KxPoly::from_poly(&self.sys.e);
        // group home terms by representative
        let mut by_rep: BTreeMap<usize, Vec<&PfTerm>> = BTreeMap::new();
        for term in &pf.terms {
            debug_assert_eq!(term.shift, 0);
            by_rep.entry(term.rep_idx).or_default().push(term);
        }
        let mut d = Poly::one();
        let mut d_kx = KxPoly::one();
        let mut d_factors = vec![];
        let mut kept: Vec<(usize, u32, &Vec<KxPoly>)> = vec![];
        let mut r_vec: Vec<KxPoly> = pf.poly_part.iter().map(|p| p * &e_kx).collect();
        for (rep_idx, terms) in &by_rep {
            let rep = self.rep_kx(*rep_idx);
            let m_e = self.mult_in_e(&rep);
            let m_max = terms.iter().map(|t| t.power).max().unwrap();
            if m_max <= m_e {
                // fold into the e-denominator part
                for term in terms {
                    let factor = e_kx
                        .try_div(&rep.pow(term.power))
                        .expect("power bounded by multiplicity in e");
                    for k in 0..r {
                        r_vec[k] = &r_vec[k] + &(&term.num[k] * &factor);
                    }
                }
            } else {
                d = &d * &self.reps[*rep_idx].monic().pow(m_max);
                d_kx = &d_kx * &rep.pow(m_max);
                d_factors.push((*rep_idx, m_max));
                for term in terms {
                    kept.push((*rep_idx, term.power, &term.num));
                }
            }
        }
        let d = d.monic();
        let mut p_vec = vec![KxPoly::zero(); r];
        for (rep_idx, power, num) in kept {
            let cof = d_kx
                .try_div(&self.rep_kx(rep_idx).pow(power))
                .expect("rep power divides d");
            for k in 0..r {
                p_vec[k] = &p_vec[k] + &(&num[k] * &cof);
            }
        }
        debug_assert!(p_vec.iter().all(|p| p.deg() < d_kx.deg() || p.is_zero()));
        Ok(ReductionResult {
            certificate_g: g,
            d,
            d_factors,
            p: p_vec,
            r: r_vec,
        })
    }

    /// Reassemble (1/d)PW + (1/e)RW.
    pub fn remainder_element(&self, rr: &ReductionResult) -> ModuleElement {
        let d_kx = KxPoly::from_poly(&rr.d).monic();
        let hp = kx_fraction_element(self.sys, &rr.p, &d_kx);
        let hr = kx_fraction_element(self.sys, &rr.r, &KxPoly::from_poly(&self.sys.e));
        self.sys.add(&hp, &hr)
    }

    fn ensure_inf(&mut self) {
        if self.inf.is_some() {
            return;
        }
        let sys = self.sys;
        let r = sys.r;
        let tau = &sys.tau_exponents;
        let e_kx = KxPoly::from_poly(&sys.e);
        let xp = KxPoly::var();
        let x1 = &KxPoly::var() + &KxPoly::one();
        // Delta_x V_i = sum_j (x+1)^{tau_i} (M_ij/e) x^{-tau_j} V_j - V_i
        let num_ij = |i: usize, j: usize| -> KxPoly {
            let mut n = KxPoly::from_poly(&sys.m[i][j]);
            if tau[i] > 0 {
                n = &n * &x1.pow(tau[i] as u32);
            }
            if tau[j] < 0 {
                n = &n * &xp.pow(-tau[j] as u32);
            }
            n
        };
        let den_ij = |i: usize, j: usize| -> KxPoly {
            let mut d = e_kx.clone();
            if tau[i] < 0 {
                d = &d * &x1.pow(-tau[i] as u32);
            }
            if tau[j] > 0 {
                d = &d * &xp.pow(tau[j] as u32);
            }
            d
        };
        let mut a = e_kx.clone();
        for i in 0..r {
            for j in 0..r {
                a = a.lcm(&den_ij(i, j)).monic();
            }
        }
        let mut b = vec![vec![KxPoly::zero(); r]; r];
        for i in 0..r {
            for j in 0..r {
                let cof = a.try_div(&den_ij(i, j)).expect("lcm divisible");
                b[i][j] = &num_ij(i, j) * &cof;
            }
        }
        for (i, row) in b.iter_mut().enumerate() {
            row[i] = &row[i] - &a;
        }
        let mu = tau.iter().map(|t| -t).chain(std::iter::once(0)).min().unwrap();
        let deg_b = b
            .iter()
            .flatten()
            .map(|p| p.deg())
            .max()
            .unwrap_or(-1);
        let delta = a.deg().max(deg_b) - 1;
        let s_max = (a.deg() - 1).max(deg_b).max(0);
        self.inf = Some(InfData {
            a,
            b,
            mu,
            delta,
            s_max,
            pivots: BTreeMap::new(),
            generated: HashSet::new(),
        });
    }

    /// a * Delta_x(x^j V_i) = (x+1)^j B_{i,.} + ((x+1)^j - x^j) a E_i.
    fn image_row(&self, j: i64, i: usize) -> LVec {
        let inf = self.inf.as_ref().unwrap();
        let x1 = &KxPoly::var() + &KxPoly::one();
        let x1j = x1.pow(j as u32);
        let xj = KxPoly::var().pow(j as u32);
        let drop = &x1j - &xj;
        let mut row: LVec = BTreeMap::new();
        for (c, entry) in inf.b[i].iter().enumerate() {
            let poly = &x1j * entry;
            for (k, coeff) in poly.coeffs().iter().enumerate() {
                if !coeff.is_zero() {
                    let key = (k as i64, c);
                    let cur = row.remove(&key).unwrap_or_else(RatFunT::zero);
                    let next = &cur + coeff;
                    if !next.is_zero() {
                        row.insert(key, next);
                    }
                }
            }
        }
        let extra = &drop * &inf.a;
        for (k, coeff) in extra.coeffs().iter().enumerate() {
            if !coeff.is_zero() {
                let key = (k as i64, i);
                let cur = row.remove(&key).unwrap_or_else(RatFunT::zero);
                let next = &cur + coeff;
                if !next.is_zero() {
                    row.insert(key, next);
                }
            }
        }
        row
    }

    fn insert_image(&mut self, j: i64, i: usize) {
        if !self.inf.as_mut().unwrap().generated.insert((j, i)) {
            return;
        }
        let mut row = self.image_row(j, i);
        let mut cert: LVec = BTreeMap::new();
        cert.insert((j, i), RatFunT::one());
        let inf = self.inf.as_mut().unwrap();
        loop {
            let Some((&coord, coeff)) = row.iter().next_back() else {
                return;
            };
            match inf.pivots.get(&coord) {
                Some(piv) => {
                    let c = coeff.clone();
                    lv_sub_scaled(&mut row, &piv.row, &c);
                    lv_sub_scaled(&mut cert, &piv.cert, &c);
                }
                None => {
                    let inv = coeff.inv();
                    lv_scale(&mut row, &inv);
                    lv_scale(&mut cert, &inv);
                    inf.pivots.insert(coord, EchRow { row, cert });
                    return;
                }
            }
        }
    }

    /// Reduce a Laurent query vector modulo the Delta_x-image: returns
    /// the complement part Q and the generator combination used.
    fn reduce_at_infinity(&mut self, mut q: LVec) -> Result<(LVec, LVec)> {
        self.ensure_inf();
        let (delta, s_max) = {
            let inf = self.inf.as_ref().unwrap();
            (inf.delta, inf.s_max)
        };
        let mut out: LVec = BTreeMap::new();
        let mut used: LVec = BTreeMap::new();
        loop {
            let Some((&coord, coeff)) = q.iter().next_back() else {
                break;
            };
            let has_pivot = self.inf.as_ref().unwrap().pivots.contains_key(&coord);
            if has_pivot {
                let c = coeff.clone();
                let inf = self.inf.as_ref().unwrap();
                let piv = inf.pivots.get(&coord).unwrap();
                let (prow, pcert) = (piv.row.clone(), piv.cert.clone());
                lv_sub_scaled(&mut q, &prow, &c);
                for (k, v) in &pcert {
                    let cur = used.remove(k).unwrap_or_else(RatFunT::zero);
                    let next = &cur + &(&c * v);
                    if !next.is_zero() {
                        used.insert(*k, next);
                    }
                }
                continue;
            }
            if coord.0 > delta {
                // widen the generated image set and retry
                let jmax = coord.0 + s_max + 2;
                let already = self.inf.as_ref().unwrap().generated.len();
                for j in 0..=jmax {
                    for i in 0..self.sys.r {
                        self.insert_image(j, i);
                    }
                }
                let now = self.inf.as_ref().unwrap().generated.len();
                let still_missing = !self.inf.as_ref().unwrap().pivots.contains_key(&coord);
                if now == already && still_missing {
                    return Err(Error::ReductionDiverged);
                }
                continue;
            }
            // complement coordinate inside the window
            let c = coeff.clone();
            q.remove(&coord);
            out.insert(coord, c);
        }
        Ok((out, used))
    }

    /// The certificate element sum c_{j,i} x^j V_i as a module element.
    fn generator_combination(&self, used: &LVec) -> ModuleElement {
        let r = self.sys.r;
        let tau = &self.sys.tau_exponents;
        let mut nums = vec![KxPoly::zero(); r];
        let mut min_exp: i64 = 0;
        for (&(j, i), _) in used.iter() {
            min_exp = min_exp.min(j + tau[i]);
        }
        for (&(j, i), c) in used.iter() {
            let exp = j + tau[i] - min_exp;
            let mono = KxPoly::var().pow(exp as u32).scale(c);
            nums[i] = &nums[i] + &mono;
        }
        let den = KxPoly::var().pow((-min_exp) as u32);
        kx_fraction_element(self.sys, &nums, &den)
    }

    /// Assemble (1/a)QV as a module element.
    pub fn q_part_element(&mut self, q: &LVec) -> ModuleElement {
        self.ensure_inf();
        let r = self.sys.r;
        let tau = &self.sys.tau_exponents;
        let a = self.inf.as_ref().unwrap().a.clone();
        let mut nums = vec![KxPoly::zero(); r];
        let mut min_exp: i64 = 0;
        for (&(k, i), _) in q.iter() {
            min_exp = min_exp.min(k + tau[i]);
        }
        for (&(k, i), c) in q.iter() {
            let exp = k + tau[i] - min_exp;
            nums[i] = &nums[i] + &KxPoly::var().pow(exp as u32).scale(c);
        }
        let den = &a * &KxPoly::var().pow((-min_exp) as u32);
        kx_fraction_element(self.sys, &nums, &den)
    }

    pub fn full_decompose(&mut self, f: &ModuleElement) -> Result<FullDecomposition> {
        let rr = self.remainder_form(f)?;
        self.ensure_inf();
        let (a, tau) = {
            let inf = self.inf.as_ref().unwrap();
            (inf.a.clone(), self.sys.tau_exponents.clone())
        };
        let a_over_e = a
            .try_div(&KxPoly::from_poly(&self.sys.e))
            .expect("e divides a");
        // (1/e)RW = (1/a) sum_c (a/e) R_c x^{-tau_c} V_c
        let mut query: LVec = BTreeMap::new();
        for (c, rc) in rr.r.iter().enumerate() {
            let poly = &a_over_e * rc;
            for (k, coeff) in poly.coeffs().iter().enumerate() {
                if !coeff.is_zero() {
                    query.insert((k as i64 - tau[c], c), coeff.clone());
                }
            }
        }
        let (q, used) = self.reduce_at_infinity(query)?;
        let cert = self.generator_combination(&used);
        let g = self.sys.add(&rr.certificate_g, &cert);
        Ok(FullDecomposition {
            certificate_g: g,
            d: rr.d,
            d_factors: rr.d_factors,
            p: rr.p,
            q,
        })
    }

    pub fn is_summable(&mut self, f: &ModuleElement) -> Result<Option<ModuleElement>> {
        let fd = self.full_decompose(f)?;
        if fd.p.iter().any(|p| !p.is_zero()) || !fd.q.is_empty() {
            return Ok(None);
        }
        let g = fd.certificate_g;
        // verify before returning
        let check = self.sys.delta_x(&g);
        if &check != f {
            return Err(Error::ReductionDiverged);
        }
        Ok(Some(g))
    }

    pub fn nv_info(&mut self) -> NvInfo {
        self.ensure_inf();
        let (mu, delta, s_max) = {
            let inf = self.inf.as_ref().unwrap();
            (inf.mu, inf.delta, inf.s_max)
        };
        // generate enough images that pivots inside the window settle
        let jmax = (delta + s_max + 2 + self.sys.r as i64).max(0);
        for j in 0..=jmax {
            for i in 0..self.sys.r {
                self.insert_image(j, i);
            }
        }
        let inf = self.inf.as_ref().unwrap();
        let mut basis = vec![];
        for k in mu..=delta {
            for i in 0..self.sys.r {
                if !inf.pivots.contains_key(&(k, i)) {
                    basis.push((k, i));
                }
            }
        }
        NvInfo {
            a: inf.a.clone(),
            b: inf.b.clone(),
            mu,
            delta,
            dim: basis.len(),
            basis,
        }
    }
}

pub fn neg_element(f: &ModuleElement) -> ModuleElement {
    ModuleElement {
        a: f.a.iter().map(|p| -p).collect(),
        u: f.u.clone(),
    }
}

/// Build the module element (1/den) * nums W, clearing K-denominators.
pub fn kx_fraction_element(sys: &ShiftSystem, nums: &[KxPoly], den: &KxPoly) -> ModuleElement {
    let (dp, dd) = den.clear_denominators();
    let cleared: Vec<(Poly, QPoly)> = nums.iter().map(|n| n.clear_denominators()).collect();
    let mut l = QPoly::one();
    for (_, nd) in &cleared {
        l = l.lcm(nd);
    }
    let a: Vec<Poly> = cleared
        .iter()
        .map(|(np, nd)| {
            let cof = l.try_div(nd).expect("lcm divisible");
            let t_mult = &cof * &dd;
            np * &Poly::from_qpoly(Var::T, &t_mult)
        })
        .collect();
    let u = &dp * &Poly::from_qpoly(Var::T, &l);
    sys.element(a, u).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;
    use num::Zero;
    use crate::system::build_system;
    use crate::textio::parse_poly;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    fn trivial() -> ShiftSystem {
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

    fn binomial_cubed() -> ShiftSystem {
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

    fn rank2() -> ShiftSystem {
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
                    q = &q + &Poly::monomial(dt, dx, rat_int(rng.gen_range(-3..=3)));
                }
            }
            q
        };
        let dens = [
            p("1"),
            p("x + 1"),
            p("x - t"),
            p("x^2 + t"),
            p("(x + 1)*(x + 3)"),
        ];
        loop {
            let a: Vec<Poly> = (0..sys.r).map(|_| coeff(rng)).collect();
            let u = dens[rng.gen_range(0..dens.len())].clone();
            let f = sys.element(a, u).unwrap();
            if !f.is_zero() {
                return f;
            }
        }
    }

    #[test]
    fn pf_textbook() {
        // 1/(x(x+1)) = 1/x - 1/(x+1), one orbit
        let sys = trivial();
        let mut ctx = ReductionContext::new(&sys);
        let f = sys.element(vec![p("1")], p("x*(x + 1)")).unwrap();
        let pf = ctx.orbit_partial_fractions(&f).unwrap();
        assert_eq!(pf.terms.len(), 2);
        assert_eq!(pf.terms[0].rep_idx, pf.terms[1].rep_idx);
        let mut shifts: Vec<i64> = pf.terms.iter().map(|t| t.shift).collect();
        shifts.sort();
        assert_eq!(shifts[1] - shifts[0], 1);
        assert_eq!(ctx.pf_reconstruct(&pf), f);
    }

    #[test]
    fn pf_multiplicity() {
        let sys = trivial();
        let mut ctx = ReductionContext::new(&sys);
        let f = sys.element(vec![p("x^2 + t")], p("(x - t)^2")).unwrap();
        let pf = ctx.orbit_partial_fractions(&f).unwrap();
        assert!(!pf.poly_part[0].is_zero());
        assert!(pf.terms.iter().any(|t| t.power == 2));
        assert_eq!(ctx.pf_reconstruct(&pf), f);
    }

    #[test]
    fn pf_random_reconstruction() {
        let mut rng = StdRng::seed_from_u64(7);
        for sys in [trivial(), binomial_cubed(), rank2()] {
            let mut ctx = ReductionContext::new(&sys);
            for _ in 0..8 {
                let f = random_element(&sys, &mut rng);
                let pf = ctx.orbit_partial_fractions(&f).unwrap();
                assert_eq!(ctx.pf_reconstruct(&pf), f);
            }
        }
    }

    fn check_reduction(sys: &ShiftSystem, ctx: &mut ReductionContext, f: &ModuleElement) {
        let (g, h) = ctx.ap_reduce(f).unwrap();
        // f = Delta_x(g) + h
        let back = sys.add(&sys.delta_x(&g), &h);
        assert_eq!(&back, f);
    }

    #[test]
    fn reduce_telescoping_pair() {
        // 1/(x(x+1)) = Delta_x(-1/x): residual must vanish in the
        // remainder form
        let sys = trivial();
        let mut ctx = ReductionContext::new(&sys);
        let f = sys.element(vec![p("1")], p("x*(x + 1)")).unwrap();
        check_reduction(&sys, &mut ctx, &f);
        let rr = ctx.remainder_form(&f).unwrap();
        assert!(rr.p.iter().all(|v| v.is_zero()));
        assert!(rr.r.iter().all(|v| v.is_zero()));
        let g = ctx.is_summable(&f).unwrap().expect("summable");
        assert_eq!(sys.delta_x(&g), f);
        // certificate is -1/x
        let expect = sys.element(vec![p("-1")], p("x")).unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn reduce_one_over_x_not_summable() {
        let sys = trivial();
        let mut ctx = ReductionContext::new(&sys);
        let f = sys.element(vec![p("1")], p("x")).unwrap();
        let rr = ctx.remainder_form(&f).unwrap();
        assert_eq!(rr.d, p("x"));
        assert!(rr.p.iter().any(|v| !v.is_zero()));
        assert!(ctx.is_summable(&f).unwrap().is_none());
    }

    #[test]
    fn reduce_random_summable() {
        let mut rng = StdRng::seed_from_u64(11);
        for sys in [trivial(), binomial_cubed(), rank2()] {
            let mut ctx = ReductionContext::new(&sys);
            for _ in 0..4 {
                let w = random_element(&sys, &mut rng);
                let f = sys.delta_x(&w);
                if f.is_zero() {
                    continue;
                }
                let g = ctx
                    .is_summable(&f)
                    .unwrap()
                    .expect("constructed summable element");
                assert_eq!(sys.delta_x(&g), f);
            }
        }
    }

    #[test]
    fn reduce_reconstruction_random() {
        let mut rng = StdRng::seed_from_u64(23);
        for sys in [trivial(), binomial_cubed(), rank2()] {
            let mut ctx = ReductionContext::new(&sys);
            for _ in 0..6 {
                let f = random_element(&sys, &mut rng);
                check_reduction(&sys, &mut ctx, &f);
                let rr = ctx.remainder_form(&f).unwrap();
                let back = sys.add(&sys.delta_x(&rr.certificate_g), &ctx.remainder_element(&rr));
                assert_eq!(back, f);
            }
        }
    }

    #[test]
    fn idempotent_on_shift_free() {
        let sys = trivial();
        let mut ctx = ReductionContext::new(&sys);
        let h = sys.element(vec![p("1")], p("x^2 + t")).unwrap();
        let (g, back) = ctx.ap_reduce(&h).unwrap();
        assert!(g.is_zero());
        assert_eq!(back, h);
    }

    #[test]
    fn shift_reduce_example_term() {
        // trivial system: 1/(x+1) = Delta_x(1/x) + 1/x
        let sys = trivial();
        let mut ctx = ReductionContext::new(&sys);
        ctx.register_rep(&p("x"));
        let f = sys.element(vec![p("1")], p("x + 1")).unwrap();
        let pf = ctx.orbit_partial_fractions(&f).unwrap();
        assert_eq!(pf.terms.len(), 1);
        let (g, h) = ctx.shift_reduce_term(&pf.terms[0].clone()).unwrap();
        assert_eq!(g, sys.element(vec![p("1")], p("x")).unwrap());
        assert_eq!(h, sys.element(vec![p("1")], p("x")).unwrap());
    }

    #[test]
    fn shift_reduce_rank2_denominator() {
        // term with denominator sigma_x(x+t): residual denominator
        // divides (x+t) e e~ up to K-content
        let sys = rank2();
        let mut ctx = ReductionContext::new(&sys);
        ctx.register_rep(&p("x + t"));
        let f = sys
            .element(vec![p("1"), p("0")], p("x + t + 1"))
            .unwrap();
        let pf = ctx.orbit_partial_fractions(&f).unwrap();
        let term = pf
            .terms
            .iter()
            .find(|t| t.shift != 0)
            .expect("off-orbit term")
            .clone();
        let (g, h) = ctx.shift_reduce_term(&term).unwrap();
        let back = sys.add(&sys.delta_x(&g), &h);
        assert_eq!(back, ctx.term_element(&term));
        // the residual denominator's x-part divides (x+t) * e * e~
        let target = &(&p("x + t") * &sys.e) * &sys.e_tilde;
        let quot = KxPoly::from_poly(&target)
            .monic()
            .try_div(&KxPoly::from_poly(&h.u).monic());
        assert!(quot.is_some());
    }

    #[test]
    fn nv_trivial_dimension_zero() {
        let sys = trivial();
        let mut ctx = ReductionContext::new(&sys);
        let info = ctx.nv_info();
        assert_eq!(info.dim, 0);
        // any polynomial is summable
        let f = sys.element(vec![p("x^2 + t*x + 3")], p("1")).unwrap();
        let g = ctx.is_summable(&f).unwrap().expect("polynomials sum");
        assert_eq!(sys.delta_x(&g), f);
    }

    #[test]
    fn nv_binomial_not_summable_one() {
        // sum of binom(t,x)^3 over x has no certificate in A
        let sys = binomial_cubed();
        let mut ctx = ReductionContext::new(&sys);
        let info = ctx.nv_info();
        assert!(info.dim >= 1);
        let one = sys.element(vec![p("1")], p("1")).unwrap();
        assert!(ctx.is_summable(&one).unwrap().is_none());
    }

    #[test]
    fn numeric_partial_sum_crosscheck() {
        // summable f over the trivial system: partial sums match the
        // certificate difference at rational points
        let sys = trivial();
        let mut ctx = ReductionContext::new(&sys);
        let w = sys.element(vec![p("t + 3*x")], p("x*(x - t)")).unwrap();
        let f = sys.delta_x(&w);
        let g = ctx.is_summable(&f).unwrap().expect("constructed");
        let eval = |h: &ModuleElement, t0: i64, x0: i64| -> Option<crate::poly::Rat> {
            let tv = rat_int(t0);
            let xv = rat_int(x0);
            let den = h.u.eval(&tv, &xv);
            if den.is_zero() {
                return None;
            }
            Some(h.a[0].eval(&tv, &xv) / den)
        };
        let mut rng = StdRng::seed_from_u64(5);
        let mut checked = 0;
        while checked < 20 {
            let t0 = rng.gen_range(7..30);
            let a0 = rng.gen_range(31..40);
            let b0 = a0 + rng.gen_range(1..6);
            let mut sum = crate::poly::Rat::zero();
            let mut ok = true;
            for x0 in a0..=b0 {
                match eval(&f, t0, x0) {
                    Some(v) => sum = sum + v,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            let (ga, gb) = (eval(&g, t0, a0), eval(&g, t0, b0 + 1));
            if !ok || ga.is_none() || gb.is_none() {
                continue;
            }
            assert_eq!(sum, gb.unwrap() - ga.unwrap());
            checked += 1;
        }
    }
}
