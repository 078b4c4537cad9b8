#![allow(dead_code, clippy::needless_range_loop)]

use gsym_core::algebra::{Algebra, GroupAction};
use gsym_core::completion::CompletedObject;
use gsym_core::group::AbelianGroup;
use gsym_core::mat::SVec;
use gsym_core::twocat::Instance;
use gsym_core::xcat::{Setting, XMorphism};
use gsym_core::{Error, Scalar};
use rand::rngs::StdRng;
use rand::Rng;

pub fn instance(p: Result<(Algebra, GroupAction), Error>) -> Instance {
    let (a, act) = p.expect("builtin instance builds");
    Instance::new(a, act)
}

pub fn divisor_count(n: u64) -> u64 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).count() as u64
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while n > 1 {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    out
}

fn pmod(x: i64, q: i64) -> i64 {
    x.rem_euclid(q)
}

fn valuation(x: i64, p: i64, e: u32) -> u32 {
    if x == 0 {
        return e;
    }
    let mut v = 0;
    let mut y = x;
    while y % p == 0 {
        y /= p;
        v += 1;
    }
    v
}

fn inv_mod(u: i64, q: i64) -> i64 {
    (1..q).find(|&x| pmod(u * x, q) == 1).expect("unit")
}

/// Normalized 2-cocycle equations of `K` with values in an abelian group:
/// `f(h,k) - f(gh,k) + f(g,hk) - f(g,h) = 0`, one variable per pair.
fn cocycle_rows(g: &AbelianGroup, sub: &[usize]) -> (usize, Vec<Vec<i64>>) {
    let n = sub.len();
    let pos = |x: usize| sub.iter().position(|&y| y == x).unwrap();
    let var = |a: usize, b: usize| pos(a) * n + pos(b);
    let mut rows = Vec::new();
    for &x in sub {
        for &y in sub {
            for &z in sub {
                let mut r = vec![0i64; n * n];
                r[var(y, z)] += 1;
                r[var(g.mul(x, y), z)] -= 1;
                r[var(x, g.mul(y, z))] += 1;
                r[var(x, y)] -= 1;
                rows.push(r);
            }
        }
    }
    (n * n, rows)
}

/// p-adic exponent of `|Z²(K, Z/p^e)|`, by diagonalizing over the local ring.
fn log_cocycles_prime_power(n: usize, rows: &[Vec<i64>], p: i64, e: u32) -> u32 {
    let q = p.pow(e);
    let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|&x| pmod(x, q)).collect()).collect();
    let mut r = 0;
    let mut logs = 0u32;
    loop {
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(r) {
            for (j, &x) in row.iter().enumerate().skip(r) {
                if x != 0 {
                    let v = valuation(x, p, e);
                    if best.is_none_or(|b| v < b.0) {
                        best = Some((v, i, j));
                    }
                }
            }
        }
        let Some((v, i, j)) = best else { break };
        m.swap(r, i);
        for row in m.iter_mut() {
            row.swap(r, j);
        }
        let unit = m[r][r] / p.pow(v);
        let ui = inv_mod(pmod(unit, q), q);
        for x in m[r].iter_mut() {
            *x = pmod(*x * ui, q);
        }
        let pv = p.pow(v);
        for i2 in 0..m.len() {
            if i2 != r && m[i2][r] != 0 {
                let k = m[i2][r] / pv;
                for c in 0..n {
                    m[i2][c] = pmod(m[i2][c] - k * m[r][c], q);
                }
            }
        }
        for c in 0..n {
            if c != r && m[r][c] != 0 {
                let k = m[r][c] / pv;
                for row in m.iter_mut() {
                    row[c] = pmod(row[c] - k * row[r], q);
                }
            }
        }
        logs += v;
        r += 1;
    }
    logs + e * (n - r) as u32
}

/// `|H²(K, k*)|` for `K ≤ G` from `|Z²(K, Z/M)| / M^{|K|}` with M the exponent of K.
pub fn h2_by_cocycles(g: &AbelianGroup, sub: &[usize]) -> u64 {
    let m = sub.iter().map(|&x| g.elem_order(x) as u64).fold(1, num_integer::lcm);
    if m == 1 {
        return 1;
    }
    let (n, rows) = cocycle_rows(g, sub);
    let mut out = 1u64;
    for (p, e) in factorize(m) {
        let l = log_cocycles_prime_power(n, &rows, p as i64, e) as i64 - (e as i64) * sub.len() as i64;
        assert!(l >= 0);
        out *= p.pow(l as u32);
    }
    out
}

/// The same count by listing every cochain; only for tiny cases.
pub fn h2_by_enumeration(g: &AbelianGroup, sub: &[usize]) -> u64 {
    let m = sub.iter().map(|&x| g.elem_order(x) as u64).fold(1, num_integer::lcm);
    let (n, rows) = cocycle_rows(g, sub);
    let total = m.pow(n as u32);
    assert!(total <= 1 << 20, "enumeration too large");
    let mut count = 0u64;
    let mut f = vec![0i64; n];
    for code in 0..total {
        let mut c = code;
        for x in f.iter_mut() {
            *x = (c % m) as i64;
            c /= m;
        }
        if rows.iter().all(|r| r.iter().zip(&f).map(|(a, b)| a * b).sum::<i64>().rem_euclid(m as i64) == 0) {
            count += 1;
        }
    }
    count / m.pow(sub.len() as u32)
}

/// Random integer combination of a list of morphisms.
pub fn random_combination(s: &Setting, list: &[XMorphism], src: usize, tgt: usize, rng: &mut StdRng) -> XMorphism {
    let mut out = XMorphism::zero(s.g(), src, tgt);
    for h in list {
        let c: i64 = rng.gen_range(-3..=3);
        if c != 0 {
            out = out.axpy(&Scalar::int(s.field(), c), h);
        }
    }
    out
}

pub fn svec_of(s: &Setting, pairs: &[(usize, i64)]) -> SVec {
    pairs.iter().map(|&(k, c)| (k, Scalar::int(s.field(), c))).collect()
}

pub fn rank(s: &Setting, x: &CompletedObject) -> usize {
    x.rank(s)
}
