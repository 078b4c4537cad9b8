//! Adjunctions in the completed 2-category: units from the Casimir element of
//! the trace form, counits from multiplication and the trace, checked by the
//! zig-zag identities.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, TraceData};
use crate::bimod::{proj_bimodule, regular_bimodule, Bimodule};
use crate::completion::{completed, iso_indecomposable, pi_tilde, sandwich, CompletedObject, IndecLabel};
use crate::group::{dual_group, dual_subgroup};
use crate::mat::{Mat, SVec};
use crate::scalars::Scalar;
use crate::xcat::{Setting, XMorphism, XTensor};
use crate::Error;

use super::{orbit_rep, Catalogue, Instance, MultTable};

/// `F ⊣ G` with unit `1_src -> G·F` and counit `F·G -> 1_tgt`, where F goes
/// from block `src_block` to block `tgt_block`.
#[derive(Clone, Debug)]
pub struct AdjunctionDatum {
    pub left: usize,
    pub right: usize,
    pub f: CompletedObject,
    pub g: CompletedObject,
    pub unit: XMorphism,
    pub counit: XMorphism,
    pub src_block: usize,
    pub tgt_block: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiatReport {
    pub weakly_fiat: bool,
    pub fiat: bool,
    /// Right adjoint of each catalogue entry, when all adjunctions exist.
    pub star: Option<Vec<usize>>,
}

fn block_idx(a: &Algebra, b: usize) -> Vec<usize> {
    (0..a.dim).filter(|&u| a.block_of[a.rv(u)] == b).collect()
}

/// Re-indexes a global algebra vector into the coordinates of `A_b`.
fn localize(idx: &[usize], x: &SVec) -> SVec {
    x.iter().filter_map(|(u, c)| idx.binary_search(u).ok().map(|k| (k, c.clone()))).collect()
}

/// Plain morphism whose only nonzero block maps into summand 0 of `t`.
fn into_summand0(s: &Setting, t: &XTensor, src: usize, cols: Vec<SVec>) -> XMorphism {
    let m = Mat::from_cols(
        t.dim(),
        cols.into_iter().map(|c| c.into_iter().map(|(r, v)| (r + t.offsets[0], v)).collect()).collect(),
    );
    debug_assert_eq!(m.cols, src);
    XMorphism::plain(s.g(), m)
}

/// Plain morphism out of summand 0 of `t`, zero on the other summands.
fn from_summand0(s: &Setting, t: &XTensor, rows: usize, f: impl Fn(usize, usize) -> SVec) -> XMorphism {
    let mut cols = vec![Vec::new(); t.dim()];
    for (q, &(x, y)) in t.parts[0].basis_pairs.iter().enumerate() {
        cols[q + t.offsets[0]] = f(x, y);
    }
    XMorphism::plain(s.g(), Mat::from_cols(rows, cols))
}

fn trivial_char(s: &Setting) -> crate::group::Character {
    let all: Vec<usize> = s.act.group.elements().collect();
    crate::group::Character::trivial(&s.act.group, &all)
}

fn basis_vec(s: &Setting, k: usize) -> SVec {
    vec![(k, Scalar::one(s.field()))]
}

/// Unitors of `x` against `(A_b, π̃_1)`: returns `(r, r⁻¹)` for `x ⊗ 1` when
/// `right`, otherwise `(l, l⁻¹)` for `1 ⊗ x`.
fn unitor(s: &Setting, x: &CompletedObject, one: &CompletedObject, t: &XTensor, right: bool) -> (XMorphism, XMorphism) {
    let a = &s.a;
    let f = s.field();
    let b = match one.m.tag {
        crate::bimod::Tag::Regular(Some(b)) => b,
        _ => unreachable!("unitors are taken against a block"),
    };
    let idx = block_idx(a, b);
    let unit_local = localize(&idx, &a.block_unit(b));
    let d = x.m.dim;
    let plain = from_summand0(s, t, d, |p, q| {
        if right {
            x.m.right[idx[q]].apply(&basis_vec(s, p))
        } else {
            x.m.left[idx[p]].apply(&basis_vec(s, q))
        }
    });
    let cols = (0..d)
        .map(|m| {
            if right {
                t.parts[0].project_pure(&basis_vec(s, m), &unit_local)
            } else {
                t.parts[0].project_pure(&unit_local, &basis_vec(s, m))
            }
        })
        .collect();
    let back = into_summand0(s, t, d, cols);
    let te = if right { s.x_tensor_mor(t, t, &x.e, &one.e) } else { s.x_tensor_mor(t, t, &one.e, &x.e) };
    let fwd = sandwich(s, &x.e, &plain, &te);
    let inv = sandwich(s, &te, &back, &x.e).scale(&Scalar::int(f, s.g() as i64));
    (fwd, inv)
}

/// The raw right partner `N` of the base of F, and the plain unit and counit
/// on summand 0: `η0: A_src -> N ⊗_A M` and `ε0: M ⊗_A N -> A_tgt`.
struct Raw {
    n: Bimodule,
    eta0: XMorphism,
    eps0: XMorphism,
}

fn raw_data(inst: &Instance, label: &IndecLabel, m: &Bimodule, src: usize, tgt: usize) -> Result<Raw, Error> {
    let s = &inst.s;
    let a = &s.a;
    let f = s.field();
    let nak = inst.nak.as_ref().map_err(|_| Error::NoAdjunction)?;
    let tr: &TraceData = inst.trace.as_ref().ok_or(Error::NoAdjunction)?;
    let (src_idx, tgt_idx) = (block_idx(a, src), block_idx(a, tgt));
    match label {
        IndecLabel::IdTwist { .. } => {
            let n = regular_bimodule(a, Some(src));
            let gf = s.x_tensor(&n, m);
            let one = localize(&src_idx, &a.block_unit(src));
            // a ↦ a ⊗ 1
            let cols = (0..src_idx.len()).map(|u| gf.parts[0].project_pure(&basis_vec(s, u), &one)).collect();
            let eta0 = into_summand0(s, &gf, src_idx.len(), cols);
            let fg = s.x_tensor(m, &n);
            let eps0 = from_summand0(s, &fg, tgt_idx.len(), |x, y| {
                localize(&tgt_idx, &a.mul(&a.unit_vec(src_idx[x]), &a.unit_vec(src_idx[y])))
            });
            Ok(Raw { n, eta0, eps0 })
        }
        IndecLabel::Proj { i, j, .. } => {
            let (i, j) = (*i, *j);
            let nu = nak.nu[j];
            let n = proj_bimodule(a, nu, i)?;
            let (pl_m, pr_m) = (a.left_proj_basis(i), a.right_proj_basis(j));
            let (pl_n, pr_n) = (a.left_proj_basis(nu), a.right_proj_basis(i));
            let pos = |v: &[usize], u: usize| v.iter().position(|&x| x == u).unwrap();
            let (e_nu, e_j) = (a.unit_vec(a.idem[nu]), a.unit_vec(a.idem[j]));
            let gf = s.x_tensor(&n, m);
            // Casimir element Σ_a (a* e_ν) ⊗ e_i ⊗ e_i ⊗ (e_j a) in summand 0
            let mut v0: SVec = Vec::new();
            for u in 0..a.dim {
                let left = a.mul(&tr.dual[u], &e_nu);
                let right = a.mul(&e_j, &a.unit_vec(u));
                if left.is_empty() || right.is_empty() {
                    continue;
                }
                let nv: SVec = left
                    .iter()
                    .map(|(p, c)| (pos(&pl_n, *p) * pr_n.len() + pos(&pr_n, a.idem[i]), c.clone()))
                    .collect();
                let mv: SVec = right
                    .iter()
                    .map(|(q, c)| (pos(&pl_m, a.idem[i]) * pr_m.len() + pos(&pr_m, *q), c.clone()))
                    .collect();
                v0 = crate::mat::svec_axpy(&v0, &Scalar::one(f), &gf.parts[0].project_pure(&nv, &mv));
            }
            let cols = src_idx.iter().map(|&u| gf.parts[0].bm.left[u].apply(&v0)).collect();
            let eta0 = into_summand0(s, &gf, src_idx.len(), cols);
            let fg = s.x_tensor(m, &n);
            // (p ⊗ q) ⊗ (p' ⊗ q'') ↦ t(q p') p q''
            let eps0 = from_summand0(s, &fg, tgt_idx.len(), |x, y| {
                let (p, q) = (pl_m[x / pr_m.len()], pr_m[x % pr_m.len()]);
                let (p2, q2) = (pl_n[y / pr_n.len()], pr_n[y % pr_n.len()]);
                let c = tr.eval(&a.mul(&a.unit_vec(q), &a.unit_vec(p2)));
                if c.is_zero() {
                    return Vec::new();
                }
                let pq = a.mul(&a.unit_vec(p), &a.unit_vec(q2));
                localize(&tgt_idx, &pq).into_iter().map(|(k, v)| (k, v.mul(&c))).collect()
            });
            Ok(Raw { n, eta0, eps0 })
        }
    }
}

/// The two zig-zag composites
/// `F -> F1 -> F(GF) -> (FG)F -> 1F -> F` and `G -> 1G -> (GF)G -> G(FG) -> G1 -> G`.
pub fn zigzags(
    s: &Setting,
    f: &CompletedObject,
    g: &CompletedObject,
    unit: &XMorphism,
    counit: &XMorphism,
    src: usize,
    tgt: usize,
) -> Result<(XMorphism, XMorphism), Error> {
    let one_src = pi_tilde(s, Some(src), &trivial_char(s))?;
    let one_tgt = pi_tilde(s, Some(tgt), &trivial_char(s))?;
    let fg = s.x_tensor(&f.m, &g.m);
    let gf = s.x_tensor(&g.m, &f.m);

    let f1 = s.x_tensor(&f.m, &one_src.m);
    let f_gf = s.x_tensor(&f.m, &gf.bm);
    let fg_f = s.x_tensor(&fg.bm, &f.m);
    let t1f = s.x_tensor(&one_tgt.m, &f.m);
    let (_, r_inv) = unitor(s, f, &one_src, &f1, true);
    let (l, _) = unitor(s, f, &one_tgt, &t1f, false);
    let step1 = s.x_tensor_mor(&f1, &f_gf, &f.e, unit);
    let assoc = s.associator_inv(&fg, &fg_f, &gf, &f_gf);
    let step2 = s.x_tensor_mor(&fg_f, &t1f, counit, &f.e);
    let zig1 = chain(s, &[&r_inv, &step1, &assoc, &step2, &l])?;

    let t1g = s.x_tensor(&one_src.m, &g.m);
    let gf_g = s.x_tensor(&gf.bm, &g.m);
    let g_fg = s.x_tensor(&g.m, &fg.bm);
    let g1 = s.x_tensor(&g.m, &one_tgt.m);
    let (_, l_inv) = unitor(s, g, &one_src, &t1g, false);
    let (r, _) = unitor(s, g, &one_tgt, &g1, true);
    let step1 = s.x_tensor_mor(&t1g, &gf_g, unit, &g.e);
    let assoc = s.associator(&gf, &gf_g, &fg, &g_fg);
    let step2 = s.x_tensor_mor(&g_fg, &g1, &g.e, counit);
    let zig2 = chain(s, &[&l_inv, &step1, &assoc, &step2, &r])?;
    Ok((zig1, zig2))
}

/// Composes morphisms listed in the order they are applied.
fn chain(s: &Setting, maps: &[&XMorphism]) -> Result<XMorphism, Error> {
    let mut acc = maps[0].clone();
    for m in &maps[1..] {
        acc = s.compose(m, &acc)?;
    }
    Ok(acc)
}

/// Candidate right partners of entry `k`: the raw object N with each
/// character of its stabilizer.
fn partners(s: &Setting, label: &IndecLabel, n: &Bimodule) -> Result<Vec<CompletedObject>, Error> {
    match label {
        IndecLabel::IdTwist { block, .. } => {
            dual_group(&s.act.group).iter().map(|psi| pi_tilde(s, Some(*block), psi)).collect()
        }
        IndecLabel::Proj { .. } => {
            let crate::bimod::Tag::Proj(p, q) = n.tag else { unreachable!() };
            let stab = s.act.pair_stabilizer(p, q);
            dual_subgroup(&s.act.group, &stab).iter().map(|psi| completed(s, n.clone(), psi)).collect()
        }
    }
}

fn identify(s: &Setting, cat: &Catalogue, label: &IndecLabel, g: &CompletedObject, n: &Bimodule) -> Option<usize> {
    let same_base = |k: usize| match (&cat.entries[k].label, label, &n.tag) {
        (IndecLabel::IdTwist { block: b1, .. }, IndecLabel::IdTwist { block: b2, .. }, _) => b1 == b2,
        (IndecLabel::Proj { i, j, .. }, IndecLabel::Proj { .. }, crate::bimod::Tag::Proj(p, q)) => {
            orbit_rep(&s.act, *p, *q) == (*i, *j)
        }
        _ => false,
    };
    (0..cat.len()).find(|&k| same_base(k) && iso_indecomposable(s, g, &cat.entries[k].obj))
}

/// Builds the adjunction with left adjoint `cat.entries[k]`.
pub fn adjunction(inst: &Instance, cat: &Catalogue, k: usize) -> Result<AdjunctionDatum, Error> {
    let s = &inst.s;
    let ent = &cat.entries[k];
    let f = &ent.obj;
    let (src, tgt) = (ent.src, ent.tgt);
    let raw = raw_data(inst, &ent.label, &f.m, src, tgt)?;
    let triv = trivial_char(s);
    let one_src = pi_tilde(s, Some(src), &triv)?;
    let one_tgt = pi_tilde(s, Some(tgt), &triv)?;
    let order = Scalar::int(s.field(), s.g() as i64);
    // the character of the partner is not always the one on F: G may act on
    // the socle, hence on the trace form, by a nontrivial character
    for g in partners(s, &ent.label, &raw.n)? {
        let gf = s.x_tensor(&g.m, &f.m);
        let fg = s.x_tensor(&f.m, &g.m);
        let e_gf = s.x_tensor_mor(&gf, &gf, &g.e, &f.e);
        let e_fg = s.x_tensor_mor(&fg, &fg, &f.e, &g.e);
        let unit = sandwich(s, &e_gf, &raw.eta0, &one_src.e).scale(&order);
        let counit = sandwich(s, &one_tgt.e, &raw.eps0, &e_fg);
        if unit.is_zero() || counit.is_zero() {
            continue;
        }
        let (zig1, zig2) = zigzags(s, f, &g, &unit, &counit, src, tgt)?;
        if zig1 != f.e || zig2 != g.e {
            continue;
        }
        let right = identify(s, cat, &ent.label, &g, &raw.n)
            .ok_or_else(|| Error::Internal("right adjoint missing from catalogue".into()))?;
        return Ok(AdjunctionDatum { left: k, right, f: f.clone(), g, unit, counit, src_block: src, tgt_block: tgt });
    }
    Err(Error::Internal(alloc::format!("zig-zag identities fail for {}", ent.label)))
}

pub fn all_adjunctions(inst: &Instance, cat: &Catalogue) -> Result<Vec<AdjunctionDatum>, Error> {
    (0..cat.len()).map(|k| adjunction(inst, cat, k)).collect()
}

/// Both zig-zag composites equal the identity idempotents.
pub fn verify_zigzag(inst: &Instance, d: &AdjunctionDatum) -> Result<bool, Error> {
    let (z1, z2) = zigzags(&inst.s, &d.f, &d.g, &d.unit, &d.counit, d.src_block, d.tgt_block)?;
    Ok(z1 == d.f.e && z2 == d.g.e)
}

pub fn fiat_report(inst: &Instance, cat: &Catalogue, _table: &MultTable) -> Result<FiatReport, Error> {
    if inst.nak.is_err() {
        return Ok(FiatReport { weakly_fiat: false, fiat: false, star: None });
    }
    let adj = all_adjunctions(inst, cat)?;
    let star: Vec<usize> = adj.iter().map(|d| d.right).collect();
    let fiat = (0..star.len()).all(|k| star[star[k]] == k);
    Ok(FiatReport { weakly_fiat: true, fiat, star: Some(star) })
}
