//! Finite abelian groups given by generator orders, their subgroups and characters.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_integer::Integer;

use crate::scalars::{root_of_unity, Field, Scalar};
use crate::Error;

/// `Z/d_1 x ... x Z/d_r`; elements are indexed in mixed radix with the first
/// generator varying fastest, so element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    pub orders: Vec<u32>,
}

impl AbelianGroup {
    pub fn new(orders: Vec<u32>) -> AbelianGroup {
        assert!(orders.iter().all(|&d| d >= 1));
        AbelianGroup { orders }
    }

    pub fn trivial() -> AbelianGroup {
        AbelianGroup { orders: Vec::new() }
    }

    pub fn order(&self) -> usize {
        self.orders.iter().map(|&d| d as usize).product()
    }

    pub fn exponent(&self) -> u32 {
        self.orders.iter().fold(1, |a, &d| a.lcm(&d))
    }

    pub fn coords(&self, g: usize) -> Vec<u32> {
        let mut g = g;
        self.orders
            .iter()
            .map(|&d| {
                let c = (g % d as usize) as u32;
                g /= d as usize;
                c
            })
            .collect()
    }

    pub fn elem(&self, coords: &[u32]) -> usize {
        let mut g = 0usize;
        for (c, &d) in coords.iter().zip(&self.orders).rev() {
            g = g * d as usize + (*c % d) as usize;
        }
        g
    }

    pub fn generator(&self, i: usize) -> usize {
        let mut c = vec![0; self.orders.len()];
        c[i] = 1;
        self.elem(&c)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.coords(a), self.coords(b));
        let c: Vec<u32> = ca.iter().zip(&cb).zip(&self.orders).map(|((x, y), d)| (x + y) % d).collect();
        self.elem(&c)
    }

    pub fn inv(&self, a: usize) -> usize {
        let c: Vec<u32> = self.coords(a).iter().zip(&self.orders).map(|(x, d)| (d - x) % d).collect();
        self.elem(&c)
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let c: Vec<u32> = self
            .coords(a)
            .iter()
            .zip(&self.orders)
            .map(|(x, &d)| ((*x as i64 * k).rem_euclid(d as i64)) as u32)
            .collect();
        self.elem(&c)
    }

    pub fn elem_order(&self, a: usize) -> u32 {
        self.coords(a).iter().zip(&self.orders).fold(1, |acc, (x, &d)| acc.lcm(&(d / d.gcd(x))))
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order()
    }

    /// Subgroup generated by the given elements, sorted.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::new();
        set.insert(0);
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    /// All subgroups, sorted by (order, element list).
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue = vec![vec![0usize]];
        found.insert(vec![0]);
        while let Some(s) = queue.pop() {
            for g in self.elements() {
                if s.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = s.clone();
                gens.push(g);
                let t = self.closure(&gens);
                if found.insert(t.clone()) {
                    queue.push(t);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    /// Invariant factors `d_1 | d_2 | ...` (all > 1) of a subgroup.
    pub fn invariant_factors(&self, sub: &[usize]) -> Vec<u32> {
        let n = sub.len() as u32;
        let count_killed = |k: u32| sub.iter().filter(|&&x| self.pow(x, k as i64) == 0).count() as u32;
        // p-exponent lists, largest first
        let mut per_prime: Vec<(u32, Vec<u32>)> = Vec::new();
        let mut rest = n;
        let mut p = 2;
        while rest > 1 {
            if rest.is_multiple_of(p) {
                while rest.is_multiple_of(p) {
                    rest /= p;
                }
                // a_j = log_p |K[p^j]|; #factors with exponent >= j is a_j - a_{j-1}
                let mut logs = vec![0u32];
                let mut pj = 1u32;
                loop {
                    pj *= p;
                    let c = count_killed(pj);
                    let mut l = 0;
                    let mut c2 = c;
                    while c2 > 1 {
                        c2 /= p;
                        l += 1;
                    }
                    logs.push(l);
                    if !n.is_multiple_of(pj) || logs[logs.len() - 1] == logs[logs.len() - 2] {
                        break;
                    }
                }
                let mut ge: Vec<u32> = Vec::new();
                for j in 1..logs.len() {
                    ge.push(logs[j] - logs[j - 1]);
                }
                // number with exponent exactly j = ge[j-1] - ge[j]
                let mut exps = Vec::new();
                for j in (1..=ge.len()).rev() {
                    let next = if j < ge.len() { ge[j] } else { 0 };
                    for _ in 0..(ge[j - 1] - next) {
                        exps.push(j as u32);
                    }
                }
                per_prime.push((p, exps));
            }
            p += 1;
        }
        let r = per_prime.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
        let mut out = vec![1u32; r];
        for (p, exps) in &per_prime {
            // exps sorted descending; largest goes to the last factor
            for (k, e) in exps.iter().enumerate() {
                out[r - 1 - k] *= p.pow(*e);
            }
        }
        out
    }
}

/// A character of a subgroup `H <= G`, valued in exponent(G)-th roots of unity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Character {
    /// `exps[g] = Some(k)` means `chi(g) = zeta_E^k`, `None` outside `H`.
    pub exps: Vec<Option<u32>>,
    /// Exponent E of the ambient group.
    pub e: u32,
    /// The Ghat coordinates of the first extension to G, used as a name.
    pub name: Vec<u32>,
}

impl Character {
    pub fn of_group(g: &AbelianGroup, c: &[u32]) -> Character {
        let e = g.exponent();
        let exps = g
            .elements()
            .map(|x| {
                let xc = g.coords(x);
                let mut k = 0u64;
                for ((ci, xi), &d) in c.iter().zip(&xc).zip(&g.orders) {
                    k += (*ci as u64) * (*xi as u64) * (e / d) as u64;
                }
                Some((k % e as u64) as u32)
            })
            .collect();
        Character { exps, e, name: c.to_vec() }
    }

    pub fn trivial(g: &AbelianGroup, sub: &[usize]) -> Character {
        Character::of_group(g, &vec![0; g.orders.len()]).restrict(sub)
    }

    pub fn restrict(&self, sub: &[usize]) -> Character {
        let mut exps = vec![None; self.exps.len()];
        for &h in sub {
            exps[h] = self.exps[h];
        }
        Character { exps, e: self.e, name: self.name.clone() }
    }

    pub fn domain(&self) -> Vec<usize> {
        self.exps.iter().enumerate().filter(|(_, x)| x.is_some()).map(|(g, _)| g).collect()
    }

    pub fn same_values(&self, o: &Character) -> bool {
        self.exps == o.exps
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|x| x.is_none_or(|k| k == 0))
    }

    pub fn value(&self, f: &Field, g: usize) -> Result<Scalar, Error> {
        let k = self.exps.get(g).copied().flatten().ok_or(Error::BadCharacter)?;
        root_of_unity(f, self.e, k as i64)
    }

    /// Pointwise product on the common domain.
    pub fn mul_values(&self, o: &Character) -> Vec<Option<u32>> {
        self.exps
            .iter()
            .zip(&o.exps)
            .map(|(a, b)| match (a, b) {
                (Some(x), Some(y)) => Some((x + y) % self.e),
                _ => None,
            })
            .collect()
    }

    pub fn inverse_values(&self) -> Vec<Option<u32>> {
        self.exps.iter().map(|a| a.map(|x| (self.e - x) % self.e)).collect()
    }

    pub fn label(&self) -> String {
        let mut s = String::from("chi[");
        for (i, c) in self.name.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{}", c);
        }
        s.push(']');
        s
    }
}

/// All characters of G in coordinate order.
pub fn dual_group(g: &AbelianGroup) -> Vec<Character> {
    let gd = AbelianGroup::new(g.orders.clone());
    gd.elements().map(|c| Character::of_group(g, &gd.coords(c))).collect()
}

/// Characters of the subgroup `sub`, as restrictions of dual_group(g), first occurrence kept.
pub fn dual_subgroup(g: &AbelianGroup, sub: &[usize]) -> Vec<Character> {
    let mut out: Vec<Character> = Vec::new();
    for chi in dual_group(g) {
        let r = chi.restrict(sub);
        if !out.iter().any(|o| o.same_values(&r)) {
            out.push(r);
        }
    }
    out
}

/// Finds the character in `list` with the given value table.
pub fn find_character(list: &[Character], exps: &[Option<u32>]) -> Option<usize> {
    list.iter().position(|c| c.exps.as_slice() == exps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subgroup_counts() {
        assert_eq!(AbelianGroup::new(vec![6]).subgroups().len(), 4);
        assert_eq!(AbelianGroup::new(vec![2, 2]).subgroups().len(), 5);
        assert_eq!(AbelianGroup::new(vec![2, 4]).subgroups().len(), 8);
    }

    #[test]
    fn invariant_factors_of_whole_group() {
        let g = AbelianGroup::new(vec![2, 3]);
        let all: Vec<usize> = g.elements().collect();
        assert_eq!(g.invariant_factors(&all), vec![6]);
        let g = AbelianGroup::new(vec![4, 2]);
        let all: Vec<usize> = g.elements().collect();
        assert_eq!(g.invariant_factors(&all), vec![2, 4]);
        let g = AbelianGroup::new(vec![2, 2, 2]);
        let all: Vec<usize> = g.elements().collect();
        assert_eq!(g.invariant_factors(&all), vec![2, 2, 2]);
        assert_eq!(g.invariant_factors(&[0]), Vec::<u32>::new());
    }

    #[test]
    fn dual_sizes() {
        let g = AbelianGroup::new(vec![2, 4]);
        assert_eq!(dual_group(&g).len(), 8);
        let h = g.closure(&[g.generator(1)]);
        assert_eq!(dual_subgroup(&g, &h).len(), 4);
    }
}
