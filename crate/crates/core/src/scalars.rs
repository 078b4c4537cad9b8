//! The cyclotomic field Q(zeta_m) with exact rational coefficients.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::rat::Rat;
use crate::Error;

#[derive(Debug, PartialEq, Eq)]
pub struct FieldCtx {
    pub m: u32,
    pub degree: usize,
    /// Monic cyclotomic polynomial, low degree first; `phi[degree] == 1`.
    pub phi: Vec<i64>,
    /// `x^k mod phi` for `0 <= k < m`.
    powers: Vec<Vec<Rat>>,
}

pub type Field = Arc<FieldCtx>;

fn poly_divexact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; num.len() - dd];
    for k in (0..q.len()).rev() {
        let c = r[k + dd];
        q[k] = c;
        for (i, d) in den.iter().enumerate() {
            r[k + i] -= c * d;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

/// Integer coefficients of the m-th cyclotomic polynomial.
pub fn cyclotomic_poly(m: u32) -> Vec<i64> {
    let mut p = vec![0i64; m as usize + 1];
    p[0] = -1;
    p[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            p = poly_divexact(&p, &cyclotomic_poly(d));
        }
    }
    p
}

pub fn totient(m: u32) -> usize {
    (1..=m).filter(|&k| num_integer::gcd(k, m) == 1).count()
}

pub fn make_field(m: u32) -> Result<Field, Error> {
    if m == 0 {
        return Err(Error::InvalidConductor);
    }
    let phi = cyclotomic_poly(m);
    let degree = phi.len() - 1;
    let mut powers = Vec::with_capacity(m as usize);
    let mut cur = vec![Rat::zero(); degree];
    cur[0] = Rat::one();
    for _ in 0..m {
        powers.push(cur.clone());
        // multiply by x
        let top = cur[degree - 1].clone();
        let mut next = vec![Rat::zero(); degree];
        next[1..degree].clone_from_slice(&cur[..degree - 1]);
        if !top.is_zero() {
            for i in 0..degree {
                next[i] = next[i].sub(&top.mul(&Rat::int(phi[i])));
            }
        }
        cur = next;
    }
    Ok(Arc::new(FieldCtx { m, degree, phi, powers }))
}

#[derive(Clone, Debug)]
pub struct Scalar {
    f: Field,
    c: Vec<Rat>,
}

impl PartialEq for Scalar {
    fn eq(&self, o: &Scalar) -> bool {
        self.c == o.c
    }
}

impl Eq for Scalar {}

impl Scalar {
    pub fn zero(f: &Field) -> Scalar {
        Scalar { f: f.clone(), c: vec![Rat::zero(); f.degree] }
    }

    pub fn one(f: &Field) -> Scalar {
        Scalar::from_rat(f, Rat::one())
    }

    pub fn from_rat(f: &Field, r: Rat) -> Scalar {
        let mut c = vec![Rat::zero(); f.degree];
        c[0] = r;
        Scalar { f: f.clone(), c }
    }

    pub fn int(f: &Field, n: i64) -> Scalar {
        Scalar::from_rat(f, Rat::int(n))
    }

    pub fn frac(f: &Field, n: i64, d: i64) -> Scalar {
        Scalar::from_rat(f, Rat::new(n, d))
    }

    /// Coefficients with respect to 1, zeta_m, ..., zeta_m^(degree-1).
    pub fn from_coeffs(f: &Field, c: Vec<Rat>) -> Scalar {
        assert_eq!(c.len(), f.degree);
        Scalar { f: f.clone(), c }
    }

    /// `zeta_m^e` for any integer exponent.
    pub fn zeta_pow(f: &Field, e: i64) -> Scalar {
        let k = e.rem_euclid(f.m as i64) as usize;
        Scalar { f: f.clone(), c: f.powers[k].clone() }
    }

    pub fn field(&self) -> &Field {
        &self.f
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Rat::is_zero)
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        if self.c[1..].iter().all(Rat::is_zero) {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        debug_assert_eq!(self.f.m, o.f.m);
        let c = self.c.iter().zip(&o.c).map(|(a, b)| a.add(b)).collect();
        Scalar { f: self.f.clone(), c }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        let c = self.c.iter().zip(&o.c).map(|(a, b)| a.sub(b)).collect();
        Scalar { f: self.f.clone(), c }
    }

    pub fn neg(&self) -> Scalar {
        Scalar { f: self.f.clone(), c: self.c.iter().map(Rat::neg).collect() }
    }

    pub fn scale(&self, r: &Rat) -> Scalar {
        Scalar { f: self.f.clone(), c: self.c.iter().map(|a| a.mul(r)).collect() }
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        debug_assert_eq!(self.f.m, o.f.m);
        let d = self.f.degree;
        if d == 1 {
            return Scalar { f: self.f.clone(), c: vec![self.c[0].mul(&o.c[0])] };
        }
        if let Some(r) = o.as_rat() {
            return self.scale(r);
        }
        if let Some(r) = self.as_rat() {
            return o.scale(r);
        }
        let mut prod = vec![Rat::zero(); 2 * d - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] = prod[i + j].add(&a.mul(b));
                }
            }
        }
        for k in (d..2 * d - 1).rev() {
            let top = core::mem::replace(&mut prod[k], Rat::zero());
            if top.is_zero() {
                continue;
            }
            for i in 0..d {
                let p = self.f.phi[i];
                if p != 0 {
                    prod[k - d + i] = prod[k - d + i].sub(&top.mul(&Rat::int(p)));
                }
            }
        }
        prod.truncate(d);
        Scalar { f: self.f.clone(), c: prod }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rat() {
            return Some(Scalar::from_rat(&self.f, r.recip()));
        }
        // Solve (multiplication-by-self) x = 1 by elimination on a degree x degree system.
        let d = self.f.degree;
        let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(d);
        let mut basis = Scalar::one(&self.f);
        let x = Scalar::zeta_pow(&self.f, 1);
        for _ in 0..d {
            cols.push(self.mul(&basis).c);
            basis = basis.mul(&x);
        }
        let mut a: Vec<Vec<Rat>> = (0..d)
            .map(|r| {
                let mut row: Vec<Rat> = (0..d).map(|c| cols[c][r].clone()).collect();
                row.push(if r == 0 { Rat::one() } else { Rat::zero() });
                row
            })
            .collect();
        for col in 0..d {
            let piv = (col..d).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, piv);
            let p = a[col][col].recip();
            for v in a[col].iter_mut() {
                *v = v.mul(&p);
            }
            for r in 0..d {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for k in col..=d {
                        let t = a[col][k].mul(&factor);
                        a[r][k] = a[r][k].sub(&t);
                    }
                }
            }
        }
        Some(Scalar { f: self.f.clone(), c: (0..d).map(|r| a[r][d].clone()).collect() })
    }

    pub fn div(&self, o: &Scalar) -> Scalar {
        self.mul(&o.inv().expect("division by zero"))
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(&self.f);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Literal form understood by the instance-file parser, e.g. `1/2 - 3*zeta(4)^1`.
    pub fn to_literal(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        let m = self.f.m;
        for (j, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let abs = if neg { a.neg() } else { a.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if j == 0 {
                let _ = write!(out, "{}", abs);
            } else if abs.is_one() {
                let _ = write!(out, "zeta({})^{}", m, j);
            } else {
                let _ = write!(out, "{}*zeta({})^{}", abs, m, j);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

/// `zeta_k^j`, requires `k | m`.
pub fn root_of_unity(f: &Field, k: u32, j: i64) -> Result<Scalar, Error> {
    if k == 0 || !f.m.is_multiple_of(k) {
        return Err(Error::RootNotInField { k, m: f.m });
    }
    Ok(Scalar::zeta_pow(f, j * (f.m / k) as i64))
}

impl<'a> Add for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &'a Scalar) -> Scalar {
        Scalar::add(self, o)
    }
}

impl<'a> Sub for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &'a Scalar) -> Scalar {
        Scalar::sub(self, o)
    }
}

impl<'a> Mul for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &'a Scalar) -> Scalar {
        Scalar::mul(self, o)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}
