use alloc::vec::Vec;

use num_integer::Integer;

use crate::group::AbelianGroup;

/// `|H²(K, k*)|` for `K = Z/d_1 x ... x Z/d_r`: `∏_{i<j} gcd(d_i, d_j)`.
pub fn schur_order(factors: &[u32]) -> u64 {
    let mut out = 1u64;
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            out *= factors[i].gcd(&factors[j]) as u64;
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyRow {
    /// Elements of the subgroup K.
    pub subgroup: Vec<usize>,
    pub invariant_factors: Vec<u32>,
    pub schur_order: u64,
}

/// One row per subgroup K of G, and the total number of pairs `(K, ω)`.
pub fn classify_count(g: &AbelianGroup) -> (Vec<ClassifyRow>, u64) {
    let rows: Vec<ClassifyRow> = g
        .subgroups()
        .into_iter()
        .map(|k| {
            let inv = g.invariant_factors(&k);
            let s = schur_order(&inv);
            ClassifyRow { subgroup: k, invariant_factors: inv, schur_order: s }
        })
        .collect();
    let total = rows.iter().map(|r| r.schur_order).sum();
    (rows, total)
}

/// `(x, y, b, c)` with `FF = xF + yG`, `FG = b(F + G)`, `GF = c(F + G)`, `GG = yF + xG`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HcellSolution {
    pub x: u64,
    pub y: u64,
    pub b: u64,
    pub c: u64,
}

/// Structure constants of the two-element based ring: `prod[p][q] = (coef F, coef G)`.
fn table(s: &HcellSolution) -> [[(u64, u64); 2]; 2] {
    [[(s.x, s.y), (s.b, s.b)], [(s.c, s.c), (s.y, s.x)]]
}

fn associative(s: &HcellSolution) -> bool {
    let t = table(s);
    let times = |v: (u64, u64), r: usize| -> (u64, u64) {
        (v.0 * t[0][r].0 + v.1 * t[1][r].0, v.0 * t[0][r].1 + v.1 * t[1][r].1)
    };
    let left_times = |p: usize, v: (u64, u64)| -> (u64, u64) {
        (v.0 * t[p][0].0 + v.1 * t[p][1].0, v.0 * t[p][0].1 + v.1 * t[p][1].1)
    };
    (0..2).all(|p| (0..2).all(|q| (0..2).all(|r| times(t[p][q], r) == left_times(p, t[q][r]))))
}

/// All `(x, y, b, c) ∈ [0, N]⁴` satisfying the cell constraints `y + c > 0`,
/// `y + b > 0` and associativity; `y_filter` restricts to one value of y.
pub fn hcell_solve_case(max: u64, y_filter: Option<u64>) -> Vec<HcellSolution> {
    let mut out = Vec::new();
    for x in 0..=max {
        for y in 0..=max {
            if y_filter.is_some_and(|v| v != y) {
                continue;
            }
            for b in 0..=max {
                for c in 0..=max {
                    let s = HcellSolution { x, y, b, c };
                    if y + c > 0 && y + b > 0 && associative(&s) {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

pub fn hcell_solve(max: u64) -> Vec<HcellSolution> {
    hcell_solve_case(max, None)
}
