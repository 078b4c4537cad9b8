//! The 2-category of G-symmetric projective bimodules: catalogue of
//! indecomposable 1-morphisms, multiplication table, cells, adjunctions,
//! counting of simple transitive 2-representations and worked examples.

mod adjunction;
mod classify;
pub mod examples;
mod section7;

pub use adjunction::{adjunction, all_adjunctions, fiat_report, verify_zigzag, zigzags, AdjunctionDatum, FiatReport};
pub use classify::{classify_count, hcell_solve, hcell_solve_case, schur_order, ClassifyRow, HcellSolution};
pub use examples::{cyclic_example, dual_numbers, hereditary_a2, klein_example, section7_example};
pub use section7::{hcell_realization_check, section7_toolkit, RealizationReport, ToolkitReport};

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{nakayama, trace_dual, Algebra, GroupAction, Nakayama, TraceData};
use crate::bimod::{proj_bimodule, regular_bimodule, Bimodule};
use crate::completion::{completed, pi_tilde, CompletedObject, IndecLabel};
use crate::group::{dual_group, dual_subgroup, find_character, Character};
use crate::mat::Mat;
use crate::xcat::{Setting, XMorphism, XTensor};
use crate::Error;

/// An algebra with its group action and, when self-injective, its Nakayama
/// and trace data.
#[derive(Clone, Debug)]
pub struct Instance {
    pub s: Setting,
    pub nak: Result<Nakayama, Error>,
    pub trace: Option<TraceData>,
}

impl Instance {
    pub fn new(a: Algebra, act: GroupAction) -> Instance {
        let nak = nakayama(&a);
        let trace = nak.as_ref().ok().and_then(|n| trace_dual(&a, n).ok());
        Instance { s: Setting::new(a, act), nak, trace }
    }

    pub fn a(&self) -> &Algebra {
        &self.s.a
    }
}

/// One indecomposable 1-morphism; it goes from block `src` to block `tgt`.
#[derive(Clone, Debug)]
pub struct Entry {
    pub label: IndecLabel,
    pub obj: CompletedObject,
    /// Index into `Catalogue::bases`.
    pub base: usize,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug)]
pub struct Catalogue {
    pub entries: Vec<Entry>,
    pub bases: Vec<Bimodule>,
}

impl Catalogue {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn objects(&self) -> Vec<CompletedObject> {
        self.entries.iter().map(|e| e.obj.clone()).collect()
    }

    pub fn find(&self, label: &IndecLabel) -> Option<usize> {
        self.entries.iter().position(|e| &e.label == label)
    }

    pub fn is_identity(&self, k: usize) -> bool {
        matches!(self.entries[k].label, IndecLabel::IdTwist { .. })
    }
}

/// Lexicographically minimal representative of the orbit of `(i, j)`.
pub fn orbit_rep(act: &GroupAction, i: usize, j: usize) -> (usize, usize) {
    act.group.elements().map(|g| (act.vperm[g][i], act.vperm[g][j])).min().unwrap()
}

pub fn catalogue(inst: &Instance) -> Result<Catalogue, Error> {
    let s = &inst.s;
    let a = &s.a;
    if let Some(b) = a.has_simple_block() {
        return Err(Error::UnsupportedAlgebra(alloc::format!("block {} is simple", b + 1)));
    }
    let mut entries = Vec::new();
    let mut bases = Vec::new();
    let ghat = dual_group(&s.act.group);
    for b in 0..a.nblocks {
        bases.push(regular_bimodule(a, Some(b)));
        let base = bases.len() - 1;
        for chi in &ghat {
            let obj = pi_tilde(s, Some(b), chi)?;
            entries.push(Entry {
                label: IndecLabel::IdTwist { block: b, chi: chi.clone() },
                obj,
                base,
                src: b,
                tgt: b,
            });
        }
    }
    for i in 0..a.nverts {
        for j in 0..a.nverts {
            if orbit_rep(&s.act, i, j) != (i, j) {
                continue;
            }
            let m = proj_bimodule(a, i, j)?;
            bases.push(m.clone());
            let base = bases.len() - 1;
            let stab = s.act.pair_stabilizer(i, j);
            for chi in dual_subgroup(&s.act.group, &stab) {
                let obj = completed(s, m.clone(), &chi)?;
                entries.push(Entry {
                    label: IndecLabel::Proj { i, j, chi },
                    obj,
                    base,
                    src: a.block_of[j],
                    tgt: a.block_of[i],
                });
            }
        }
    }
    Ok(Catalogue { entries, bases })
}

/// `X ⊗ Y` in the completion, with the tensor layout.
pub fn tensor_objects(s: &Setting, x: &CompletedObject, y: &CompletedObject) -> (XTensor, CompletedObject) {
    let t = s.x_tensor(&x.m, &y.m);
    let e = s.x_tensor_mor(&t, &t, &x.e, &y.e);
    let obj = CompletedObject { m: t.bm.clone(), e };
    (t, obj)
}

/// `mult[f][g]`: summands of `F·G = F ⊗ G` as (catalogue index, multiplicity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultTable {
    pub mult: Vec<Vec<Vec<(usize, usize)>>>,
}

impl MultTable {
    pub fn n(&self) -> usize {
        self.mult.len()
    }

    pub fn coeff(&self, f: usize, g: usize, h: usize) -> usize {
        self.mult[f][g].iter().find(|(k, _)| *k == h).map_or(0, |(_, m)| *m)
    }

    /// Integer associativity of the multiplicity matrices.
    pub fn is_associative(&self) -> bool {
        let n = self.n();
        let prod = |x: &[usize], g: usize| -> Vec<usize> {
            // (Σ x_k [k]) · [g]
            let mut out = vec![0; n];
            for (k, &c) in x.iter().enumerate() {
                if c > 0 {
                    for &(h, m) in &self.mult[k][g] {
                        out[h] += c * m;
                    }
                }
            }
            out
        };
        let lprod = |f: usize, y: &[usize]| -> Vec<usize> {
            let mut out = vec![0; n];
            for (k, &c) in y.iter().enumerate() {
                if c > 0 {
                    for &(h, m) in &self.mult[f][k] {
                        out[h] += c * m;
                    }
                }
            }
            out
        };
        for f in 0..n {
            for g in 0..n {
                let mut fg = vec![0; n];
                for &(h, m) in &self.mult[f][g] {
                    fg[h] += m;
                }
                for h in 0..n {
                    let mut gh = vec![0; n];
                    for &(k, m) in &self.mult[g][h] {
                        gh[k] += m;
                    }
                    if prod(&fg, h) != lprod(f, &gh) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Multiplicity of `y` in `x` from spanning sets `x ∘ u` of `Hom(base(y), x)`
/// and `v ∘ x` of `Hom(x, base(y))`. The identity-component trace is cyclic,
/// so `ϑ(y v x ∘ x u y) = ϑ(v x ∘ x u y)` and `y` is applied on one side only.
fn pairing_rank(s: &Setting, y_e: &XMorphism, xus: &[XMorphism], vs: &[XMorphism]) -> usize {
    // dependent rows do not change the rank, so keep a basis of the u side
    let us = crate::completion::reduce_to_basis(
        s,
        xus.iter().map(|u| s.compose(u, y_e).expect("shapes agree")).filter(|u| !u.is_zero()).collect(),
    );
    if us.is_empty() {
        return 0;
    }
    let rows = us
        .iter()
        .map(|u| {
            vs.iter()
                .enumerate()
                .filter_map(|(k, v)| {
                    let t = s.compose_trace1(v, u);
                    (!t.is_zero()).then_some((k, t))
                })
                .collect()
        })
        .collect();
    Mat::from_rows(vs.len(), rows).rank()
}

/// Decomposes `x` (whose base is `base`) against the catalogue, sharing raw
/// hom spaces across all idempotents on the same base.
pub struct Decomposer<'a> {
    s: &'a Setting,
    cat: &'a Catalogue,
    base: Bimodule,
    raw: Vec<Option<(Vec<XMorphism>, Vec<XMorphism>)>>,
}

impl<'a> Decomposer<'a> {
    pub fn new(s: &'a Setting, cat: &'a Catalogue, base: Bimodule) -> Decomposer<'a> {
        Decomposer { s, cat, base, raw: vec![None; cat.bases.len()] }
    }

    pub fn decompose(&mut self, e: &XMorphism) -> Result<Vec<(usize, usize)>, Error> {
        let s = self.s;
        let rank = crate::completion::scalar_to_usize(&s.block_trace(e)).unwrap_or(usize::MAX);
        let mut out = Vec::new();
        let mut total = 0;
        if rank == 0 {
            return Ok(out);
        }
        // x ∘ u and v ∘ x do not depend on the candidate idempotent, and only
        // their spans matter, so both sides are reduced once per base
        let mut sides: Vec<Option<(Vec<XMorphism>, Vec<XMorphism>)>> = vec![None; self.cat.bases.len()];
        for (k, ent) in self.cat.entries.iter().enumerate() {
            if self.raw[ent.base].is_none() {
                let b = &self.cat.bases[ent.base];
                let us = s.x_hom_list(b, &self.base);
                let vs = if us.is_empty() { Vec::new() } else { s.x_hom_list(&self.base, b) };
                self.raw[ent.base] = Some((us, vs));
            }
            let (us, vs) = self.raw[ent.base].as_ref().unwrap();
            if us.is_empty() || vs.is_empty() {
                continue;
            }
            let (xus, vxs) = sides[ent.base].get_or_insert_with(|| {
                let reduce = |l: Vec<XMorphism>| {
                    crate::completion::reduce_to_basis(s, l.into_iter().filter(|h| !h.is_zero()).collect())
                };
                let xus = reduce(us.iter().map(|u| s.compose(e, u).expect("shapes agree")).collect());
                let vxs = reduce(vs.iter().map(|v| s.compose(v, e).expect("shapes agree")).collect());
                (xus, vxs)
            });
            let m = pairing_rank(s, &ent.obj.e, xus, vxs);
            if m > 0 {
                total += m * ent.obj.rank(s);
                out.push((k, m));
            }
        }
        if total != rank {
            return Err(Error::Internal(alloc::format!("decomposition audit failed: {} != {}", total, rank)));
        }
        Ok(out)
    }
}

pub fn mult_table(inst: &Instance, cat: &Catalogue) -> Result<MultTable, Error> {
    let s = &inst.s;
    let n = cat.len();
    let mut mult = vec![vec![Vec::new(); n]; n];
    let nb = cat.bases.len();
    for bf in 0..nb {
        for bg in 0..nb {
            let fs: Vec<usize> = (0..n).filter(|&k| cat.entries[k].base == bf).collect();
            let gs: Vec<usize> = (0..n).filter(|&k| cat.entries[k].base == bg).collect();
            if cat.entries[fs[0]].src != cat.entries[gs[0]].tgt {
                continue;
            }
            let t = s.x_tensor(&cat.bases[bf], &cat.bases[bg]);
            let mut dec = Decomposer::new(s, cat, t.bm.clone());
            for &f in &fs {
                for &g in &gs {
                    let e = s.x_tensor_mor(&t, &t, &cat.entries[f].obj.e, &cat.entries[g].obj.e);
                    mult[f][g] = dec.decompose(&e)?;
                }
            }
        }
    }
    Ok(MultTable { mult })
}

/// The label predicted for `(M, ε_χ) · (A, π̃_ζ)` or its mirror: the same
/// base with the product character restricted to the stabilizer.
pub fn absorbed_label(s: &Setting, label: &IndecLabel, zeta: &Character) -> Option<IndecLabel> {
    let ghat = dual_group(&s.act.group);
    let restrict_to = |chi: &Character| -> Character {
        let dom = chi.domain();
        let vals = chi.mul_values(&zeta.restrict(&dom));
        let list = dual_subgroup(&s.act.group, &dom);
        list[find_character(&list, &vals).expect("characters of a subgroup are closed under products")].clone()
    };
    Some(match label {
        IndecLabel::IdTwist { block, chi } => {
            let vals = chi.mul_values(zeta);
            IndecLabel::IdTwist { block: *block, chi: ghat[find_character(&ghat, &vals)?].clone() }
        }
        IndecLabel::Proj { i, j, chi } => IndecLabel::Proj { i: *i, j: *j, chi: restrict_to(chi) },
    })
}

/// Cross-checks the closed forms for products with identity twists.
pub fn check_closed_forms(inst: &Instance, cat: &Catalogue, table: &MultTable) -> Result<(), Error> {
    let s = &inst.s;
    for (f, ef) in cat.entries.iter().enumerate() {
        for (g, eg) in cat.entries.iter().enumerate() {
            let twist = match (&ef.label, &eg.label) {
                (_, IndecLabel::IdTwist { block, chi }) if *block == ef.src => Some((f, chi)),
                (IndecLabel::IdTwist { block, chi }, _) if *block == eg.tgt => Some((g, chi)),
                _ => None,
            };
            let Some((k, zeta)) = twist else { continue };
            let want = absorbed_label(s, &cat.entries[k].label, zeta).and_then(|l| cat.find(&l));
            let want = want.ok_or_else(|| Error::Internal("predicted label missing from catalogue".into()))?;
            if table.mult[f][g] != vec![(want, 1)] {
                return Err(Error::Internal(alloc::format!(
                    "{} · {} does not match the closed form",
                    ef.label.name(),
                    eg.label.name()
                )));
            }
        }
    }
    Ok(())
}

/// Left, right and two-sided cells with their preorders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellStructure {
    pub left: Vec<Vec<usize>>,
    pub right: Vec<Vec<usize>>,
    pub two_sided: Vec<Vec<usize>>,
    /// `geq_l[f][g]`: `F ≥_L G`.
    pub geq_l: Vec<Vec<bool>>,
    pub geq_r: Vec<Vec<bool>>,
    pub geq_j: Vec<Vec<bool>>,
}

fn closure(mut r: Vec<Vec<bool>>) -> Vec<Vec<bool>> {
    let n = r.len();
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                for j in 0..n {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    r
}

fn classes(r: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = r.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let c: Vec<usize> = (0..n).filter(|&j| r[i][j] && r[j][i]).collect();
        for &j in &c {
            seen[j] = true;
        }
        out.push(c);
    }
    out
}

/// `F ≥_L G` iff F is a summand of `H·G` for some H, closed transitively.
pub fn cells(table: &MultTable) -> CellStructure {
    let n = table.n();
    let mut l = vec![vec![false; n]; n];
    let mut r = vec![vec![false; n]; n];
    for i in 0..n {
        l[i][i] = true;
        r[i][i] = true;
    }
    for h in 0..n {
        for g in 0..n {
            for &(f, _) in &table.mult[h][g] {
                l[f][g] = true;
                r[f][h] = true;
            }
        }
    }
    let geq_l = closure(l);
    let geq_r = closure(r);
    let j: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| geq_l[a][b] || geq_r[a][b]).collect()).collect();
    let geq_j = closure(j);
    CellStructure { left: classes(&geq_l), right: classes(&geq_r), two_sided: classes(&geq_j), geq_l, geq_r, geq_j }
}

impl CellStructure {
    /// Each two-sided cell is a union of left cells and of right cells.
    pub fn is_consistent(&self) -> bool {
        let unions = |parts: &[Vec<usize>]| {
            self.two_sided.iter().all(|j| {
                let js: BTreeSet<usize> = j.iter().copied().collect();
                parts.iter().all(|p| {
                    let inside = p.iter().filter(|x| js.contains(x)).count();
                    inside == 0 || inside == p.len()
                })
            })
        };
        unions(&self.left) && unions(&self.right)
    }
}
