use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{left_mult, right_mult, Algebra};
use crate::mat::{nullspace, svec_axpy, Mat, SVec};
use crate::scalars::Scalar;
use crate::Error;

use super::{catalogue, fiat_report, mult_table, Instance};

#[derive(Clone, Debug)]
pub struct ToolkitReport {
    pub order_phi: usize,
    /// φ² is conjugation by `a`.
    pub a: SVec,
    /// `φ(a⁻¹) a`.
    pub t: SVec,
    pub t_central: bool,
    /// `b`, a polynomial in `a⁻¹` with `b² = a⁻¹`.
    pub b: SVec,
    /// Coefficients of that polynomial, constant term first.
    pub b_poly: Vec<Scalar>,
    pub order_sigma_phi: usize,
}

fn order_of(m: &Mat, f: &crate::Field, bound: usize) -> Option<usize> {
    let id = Mat::identity(m.rows, f);
    let mut p = m.clone();
    for k in 1..=bound {
        if p == id {
            return Some(k);
        }
        p = p.mul(m);
    }
    None
}

fn inverse_elem(a: &Algebra, x: &SVec) -> Option<SVec> {
    let inv = left_mult(a, x).inverse(&a.field)?;
    Some(inv.apply(&a.one()))
}

/// Deterministic scan of the solution space for an invertible element.
fn find_unit(a: &Algebra, basis: &[SVec], budget: usize) -> Option<SVec> {
    let f = &a.field;
    let mut tried = 0;
    for b in basis {
        if inverse_elem(a, b).is_some() {
            return Some(b.clone());
        }
        tried += 1;
    }
    // small integer combinations, coefficients in {1, 2, ...} in a fixed order
    let mut coeffs = vec![1i64; basis.len()];
    while tried < budget {
        let mut x = Vec::new();
        for (b, &c) in basis.iter().zip(&coeffs) {
            x = svec_axpy(&x, &Scalar::int(f, c), b);
        }
        if inverse_elem(a, &x).is_some() {
            return Some(x);
        }
        tried += 1;
        // odometer over 1..=3
        let mut k = 0;
        while k < coeffs.len() {
            coeffs[k] += 1;
            if coeffs[k] <= 3 {
                break;
            }
            coeffs[k] = 1;
            k += 1;
        }
        if k == coeffs.len() {
            break;
        }
    }
    None
}

/// A square root of `lam` of the form `r ζ_m^j` with r rational.
fn sqrt_scalar(lam: &Scalar) -> Option<Scalar> {
    let f = lam.field().clone();
    for j in 0..f.m as i64 {
        let z = Scalar::zeta_pow(&f, j);
        let q = lam.div(&z.mul(&z));
        let Some(r) = q.as_rat() else { continue };
        if r.is_negative() {
            continue;
        }
        let (n, d) = (r.numer(), r.denom());
        let (sn, sd) = (n.sqrt(), d.sqrt());
        if &sn * &sn == n && &sd * &sd == d {
            let s = crate::Rat::from_big(sn, sd);
            return Some(Scalar::from_rat(&f, s).mul(&z));
        }
    }
    None
}

fn poly_mul(p: &[Scalar], q: &[Scalar], f: &crate::Field) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(f); p.len() + q.len() - 1];
    for (i, x) in p.iter().enumerate() {
        for (j, y) in q.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

fn poly_eval_elem(a: &Algebra, p: &[Scalar], u: &SVec) -> SVec {
    // Horner
    let mut acc: SVec = Vec::new();
    for c in p.iter().rev() {
        acc = a.mul(&acc, u);
        acc = svec_axpy(&acc, c, &a.one());
    }
    acc
}

/// `b = p(u)` with `b² = u`, by Hermite interpolation of the square root at the
/// eigenvalues of u (its coefficients on the vertex idempotents).
fn polynomial_sqrt(a: &Algebra, u: &SVec) -> Result<(SVec, Vec<Scalar>), Error> {
    let f = &a.field;
    let mut eig: Vec<Scalar> = Vec::new();
    for v in 0..a.nverts {
        let c = crate::mat::svec_get(u, a.idem[v]).cloned().unwrap_or_else(|| Scalar::zero(f));
        if !eig.contains(&c) {
            eig.push(c);
        }
    }
    // nilpotency index bounds the needed Taylor order
    let m = a.dim;
    // CRT over the factors (t - λ)^m
    let mut p: Vec<Scalar> = vec![Scalar::zero(f)];
    let mut modulus: Vec<Scalar> = vec![Scalar::one(f)];
    for lam in &eig {
        if lam.is_zero() {
            return Err(Error::NotInner);
        }
        let s = sqrt_scalar(lam).ok_or(Error::NeedsLargerConductor)?;
        // Taylor polynomial of sqrt around lam in h = t - lam, degree < m
        let mut taylor: Vec<Scalar> = Vec::new();
        let mut binom = crate::Rat::one();
        let lam_inv = lam.inv().unwrap();
        let mut lpow = Scalar::one(f);
        for k in 0..m {
            taylor.push(s.mul(&lpow).scale(&binom));
            // binom(1/2, k+1) = binom(1/2, k) (1/2 - k) / (k + 1)
            binom = binom.mul(&crate::Rat::new(1 - 2 * k as i64, 2 * (k as i64 + 1)));
            lpow = lpow.mul(&lam_inv);
        }
        // expand in t
        let shift = [lam.neg(), Scalar::one(f)];
        let mut q: Vec<Scalar> = vec![Scalar::zero(f)];
        let mut hp: Vec<Scalar> = vec![Scalar::one(f)];
        for c in &taylor {
            let term: Vec<Scalar> = hp.iter().map(|x| x.mul(c)).collect();
            q = poly_add(&q, &term, f);
            hp = poly_mul(&hp, &shift, f);
        }
        let fac = hp; // (t - lam)^m
                      // combine p (mod modulus) and q (mod fac): p + modulus * k, k = (q - p) modulus⁻¹ mod fac
        let minv = poly_inverse_mod(&modulus, &fac, f).ok_or(Error::Internal("CRT failed".into()))?;
        let diff = poly_add(&q, &p.iter().map(|x| x.neg()).collect::<Vec<_>>(), f);
        let k = poly_rem(&poly_mul(&diff, &minv, f), &fac, f);
        p = poly_add(&p, &poly_mul(&modulus, &k, f), f);
        modulus = poly_mul(&modulus, &fac, f);
        p = poly_rem(&p, &modulus, f);
    }
    let p = poly_rem(&p, &minimal_polynomial(a, u), f);
    let b = poly_eval_elem(a, &p, u);
    Ok((b, p))
}

/// Monic minimal polynomial of an algebra element, constant term first.
fn minimal_polynomial(a: &Algebra, u: &SVec) -> Vec<Scalar> {
    let f = &a.field;
    let mut powers: Vec<SVec> = vec![a.one()];
    loop {
        let next = a.mul(powers.last().unwrap(), u);
        // solve next = Σ c_k u^k through an augmented echelon form
        let k = powers.len();
        let mut ech = crate::mat::Echelon::new(a.dim + k);
        for (i, pw) in powers.iter().enumerate() {
            let mut v = pw.clone();
            v.push((a.dim + i, Scalar::int(f, -1)));
            ech.insert(v);
        }
        let r = ech.reduce(&next);
        if r.iter().all(|(c, _)| *c >= a.dim) {
            // next - Σ c_k u^k = 0 with c read off the augmented part
            let mut poly = vec![Scalar::zero(f); k + 1];
            for (c, x) in r {
                poly[c - a.dim] = x.neg();
            }
            poly[k] = Scalar::one(f);
            return poly;
        }
        powers.push(next);
    }
}

fn poly_add(p: &[Scalar], q: &[Scalar], f: &crate::Field) -> Vec<Scalar> {
    let n = p.len().max(q.len());
    (0..n)
        .map(|i| {
            let x = p.get(i).cloned().unwrap_or_else(|| Scalar::zero(f));
            let y = q.get(i).cloned().unwrap_or_else(|| Scalar::zero(f));
            x.add(&y)
        })
        .collect()
}

fn trim(mut p: Vec<Scalar>, f: &crate::Field) -> Vec<Scalar> {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    if p.is_empty() {
        p.push(Scalar::zero(f));
    }
    p
}

fn poly_divmod(p: &[Scalar], d: &[Scalar], f: &crate::Field) -> (Vec<Scalar>, Vec<Scalar>) {
    let d = trim(d.to_vec(), f);
    let mut r = trim(p.to_vec(), f);
    let dl = d.len();
    let lead_inv = d[dl - 1].inv().expect("nonzero divisor");
    let mut q = vec![Scalar::zero(f); r.len().max(dl) - dl + 1];
    while r.len() >= dl && !(r.len() == 1 && r[0].is_zero()) {
        let shift = r.len() - dl;
        let c = r[r.len() - 1].mul(&lead_inv);
        for (i, x) in d.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&x.mul(&c));
        }
        q[shift] = c;
        r.pop();
        r = trim(r, f);
        if r.len() < dl {
            break;
        }
    }
    (q, r)
}

fn poly_rem(p: &[Scalar], d: &[Scalar], f: &crate::Field) -> Vec<Scalar> {
    poly_divmod(p, d, f).1
}

/// Inverse of `p` modulo `m` by the extended Euclidean algorithm.
fn poly_inverse_mod(p: &[Scalar], m: &[Scalar], f: &crate::Field) -> Option<Vec<Scalar>> {
    let (mut r0, mut r1) = (trim(m.to_vec(), f), poly_rem(p, m, f));
    let (mut s0, mut s1) = (vec![Scalar::zero(f)], vec![Scalar::one(f)]);
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divmod(&r0, &r1, f);
        let qs1 = poly_mul(&q, &s1, f);
        let s2 = trim(poly_add(&s0, &qs1.iter().map(|x| x.neg()).collect::<Vec<_>>(), f), f);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].inv()?;
    Some(s0.iter().map(|x| x.mul(&c)).collect())
}

/// Inner witness for φ², its polynomial square root and the order of σφ.
pub fn section7_toolkit(a: &Algebra, phi: &Mat) -> Result<ToolkitReport, Error> {
    let f = &a.field;
    let order_phi = order_of(phi, f, 64).ok_or_else(|| Error::Invalid("automorphism of large order".into()))?;
    let phi2 = phi.mul(phi);
    // φ²(x) a - a x = 0 for every basis x, linear in a
    let mut rows: Vec<SVec> = Vec::new();
    for x in 0..a.dim {
        let m = left_mult(a, &phi2.column(x)).sub(&right_mult(a, &a.unit_vec(x)));
        rows.extend(m.data.into_iter().filter(|r| !r.is_empty()));
    }
    let sols = nullspace(&Mat::from_rows(a.dim, rows), f);
    let a_el = find_unit(a, &sols, 512).ok_or(Error::NotInner)?;
    // a is determined up to a central unit; fix the scalar so the leading coefficient is 1
    let lead = a_el[0].1.inv().unwrap();
    let a_el: SVec = a_el.iter().map(|(k, c)| (*k, c.mul(&lead))).collect();
    let a_inv = inverse_elem(a, &a_el).unwrap();
    let t = a.mul(&phi.apply(&a_inv), &a_el);
    let t_central = (0..a.dim).all(|x| a.mul(&t, &a.unit_vec(x)) == a.mul(&a.unit_vec(x), &t));
    let (b, b_poly) = polynomial_sqrt(a, &a_inv)?;
    if a.mul(&b, &b) != a_inv {
        return Err(Error::Internal("square root check failed".into()));
    }
    let b_inv = inverse_elem(a, &b).ok_or(Error::NotInner)?;
    let sigma = left_mult(a, &b).mul(&right_mult(a, &b_inv));
    let order_sigma_phi = order_of(&sigma.mul(phi), f, 64).ok_or(Error::Invalid("σφ has large order".into()))?;
    Ok(ToolkitReport { order_phi, a: a_el, t, t_central, b, b_poly, order_sigma_phi })
}

#[derive(Clone, Debug)]
pub struct RealizationReport {
    pub realized: bool,
    pub n: Option<usize>,
    pub f: Option<String>,
    pub g: Option<String>,
    pub cartan: Vec<Vec<usize>>,
    pub reason: String,
}

/// Looks for `F, G` in the catalogue with `F* ≅ G ≇ F` and
/// `FF ≅ FG ≅ GF ≅ GG ≅ (F ⊕ G)^n`, and compares the Cartan matrix with `[[n,n],[n,n]]`.
pub fn hcell_realization_check(inst: &Instance) -> Result<RealizationReport, Error> {
    let a = inst.a();
    let cartan = a.cartan();
    let fail = |reason: &str| RealizationReport {
        realized: false,
        n: None,
        f: None,
        g: None,
        cartan: cartan.clone(),
        reason: reason.into(),
    };
    if a.nverts != 2 {
        return Ok(fail("the algebra does not have exactly two vertices"));
    }
    let cat = catalogue(inst)?;
    let table = mult_table(inst, &cat)?;
    let rep = fiat_report(inst, &cat, &table)?;
    let Some(star) = rep.star.as_ref() else { return Ok(fail("no adjunctions")) };
    for f in 0..cat.len() {
        if cat.is_identity(f) {
            continue;
        }
        let g = star[f];
        if g == f {
            continue;
        }
        let pair = [f, g];
        let first = &table.mult[f][f];
        let n = first.iter().find(|(k, _)| *k == f).map_or(0, |(_, m)| *m);
        let mut want = vec![(f, n), (g, n)];
        want.sort();
        let ok = n > 0
            && pair.iter().all(|&p| {
                pair.iter().all(|&q| {
                    let mut got = table.mult[p][q].clone();
                    got.sort();
                    got == want
                })
            });
        if ok && cartan.iter().all(|r| r.iter().all(|&c| c == n)) {
            return Ok(RealizationReport {
                realized: true,
                n: Some(n),
                f: Some(cat.entries[f].label.name()),
                g: Some(cat.entries[g].label.name()),
                cartan,
                reason: String::new(),
            });
        }
    }
    Ok(fail("no pair of mutually adjoint 1-morphisms with the required products"))
}
