//! The idempotent completion of X: stabilizers, witnesses, character
//! idempotents, endomorphism rings modulo radical, Krull-Schmidt splitting.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::radical_basis;
use crate::bimod::{Bimodule, Tag};
use crate::group::Character;
use crate::mat::{Echelon, Mat, SVec};
use crate::scalars::Scalar;
use crate::xcat::{Setting, XMorphism};
use crate::Error;

/// An object `(M, e)` of the completion.
#[derive(Clone, Debug)]
pub struct CompletedObject {
    pub m: Bimodule,
    pub e: XMorphism,
}

impl CompletedObject {
    pub fn plain(s: &Setting, m: Bimodule) -> CompletedObject {
        let e = XMorphism::identity(s.g(), m.dim, s.field());
        CompletedObject { m, e }
    }

    /// Rank of `e` as an operator on `⊕_σ M`, i.e. `|G| tr(e_1)`.
    pub fn rank(&self, s: &Setting) -> usize {
        scalar_to_usize(&s.block_trace(&self.e)).expect("rank of an idempotent is a natural number")
    }
}

pub(crate) fn scalar_to_usize(x: &Scalar) -> Option<usize> {
    let r = x.as_rat()?;
    let (n, d) = r.as_small()?;
    if d == 1 && n >= 0 {
        Some(n as usize)
    } else {
        None
    }
}

/// Canonical name of an indecomposable 1-morphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum IndecLabel {
    IdTwist { block: usize, chi: Character },
    Proj { i: usize, j: usize, chi: Character },
}

impl IndecLabel {
    pub fn chi(&self) -> &Character {
        match self {
            IndecLabel::IdTwist { chi, .. } | IndecLabel::Proj { chi, .. } => chi,
        }
    }

    pub fn name(&self) -> String {
        match self {
            IndecLabel::IdTwist { block, chi } => alloc::format!("1_{}[{}]", block + 1, chi.label()),
            IndecLabel::Proj { i, j, chi } => alloc::format!("P({},{})[{}]", i + 1, j + 1, chi.label()),
        }
    }
}

impl fmt::Display for IndecLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Isomorphisms `M -> ^αM^α` for α in the stabilizer.
#[derive(Clone, Debug)]
pub struct Witnesses {
    pub stab: Vec<usize>,
    pub w: Vec<Option<Mat>>,
}

fn is_invertible(m: &Mat) -> bool {
    m.rows == m.cols && m.rank() == m.rows
}

/// Deterministic search for an invertible element of a hom space: basis
/// elements first, then small integer combinations.
fn find_invertible(s: &Setting, basis: &[Mat]) -> Option<Mat> {
    if let Some(b) = basis.iter().find(|b| is_invertible(b)) {
        return Some(b.clone());
    }
    let f = s.field();
    for k in 1..=3i64 {
        let mut acc = Mat::zeros(basis.first()?.rows, basis[0].cols);
        for (i, b) in basis.iter().enumerate() {
            acc = acc.axpy(&Scalar::int(f, 1 + (i as i64 * k) % 5), b);
        }
        if is_invertible(&acc) {
            return Some(acc);
        }
    }
    None
}

fn plain_iso(s: &Setting, m: &Bimodule, n: &Bimodule) -> Option<Mat> {
    if m.dim != n.dim {
        return None;
    }
    find_invertible(s, &s.hom_basis(m, n))
}

/// `G_M = {φ | M ≅ ^φM^φ}`.
pub fn stabilizer(s: &Setting, m: &Bimodule) -> Vec<usize> {
    let act = &s.act;
    match m.tag {
        Tag::Regular(_) => act.group.elements().collect(),
        Tag::Proj(i, j) => act.pair_stabilizer(i, j),
        Tag::Simple(e, pt) => {
            act.group.elements().filter(|&g| act.vperm[g][e] == e && act.vperm[g][pt] == pt).collect()
        }
        _ => act.group.elements().filter(|&g| g == 0 || plain_iso(s, m, &s.twist(m, g)).is_some()).collect(),
    }
}

/// Restriction of the action matrix of `g` to a set of algebra basis indices.
fn restrict(s: &Setting, g: usize, idx: &[usize]) -> Mat {
    s.act.mats[g].submatrix(idx, idx)
}

/// Coherent witnesses: induced by the action for tagged objects, otherwise
/// found by search and then checked to compose like the group.
pub fn witnesses(s: &Setting, m: &Bimodule) -> Result<Witnesses, Error> {
    let a = &s.a;
    let stab = stabilizer(s, m);
    let mut w: Vec<Option<Mat>> = vec![None; s.g()];
    for &g in &stab {
        let mat = match m.tag {
            Tag::Regular(block) => {
                let idx: Vec<usize> = (0..a.dim).filter(|&u| block.is_none_or(|b| a.block_of[a.rv(u)] == b)).collect();
                restrict(s, g, &idx)
            }
            Tag::Proj(i, j) => restrict(s, g, &a.left_proj_basis(i)).kron(&restrict(s, g, &a.right_proj_basis(j))),
            Tag::Simple(..) => Mat::identity(1, s.field()),
            _ => {
                if g == 0 {
                    Mat::identity(m.dim, s.field())
                } else {
                    plain_iso(s, m, &s.twist(m, g)).ok_or(Error::IncoherentWitnesses)?
                }
            }
        };
        w[g] = Some(mat);
    }
    for &x in &stab {
        for &y in &stab {
            let (wx, wy) = (w[x].as_ref().unwrap(), w[y].as_ref().unwrap());
            if wy.mul(wx) != *w[s.gmul(x, y)].as_ref().unwrap() {
                return Err(Error::IncoherentWitnesses);
            }
        }
    }
    Ok(Witnesses { stab, w })
}

/// `ε_χ`: component α is `χ(α)/|G_M| w_α` on the stabilizer, zero elsewhere.
pub fn epsilon_idempotent(s: &Setting, m: &Bimodule, w: &Witnesses, chi: &Character) -> Result<XMorphism, Error> {
    if chi.domain() != w.stab {
        return Err(Error::BadCharacter);
    }
    let f = s.field();
    let inv_order = Scalar::frac(f, 1, w.stab.len() as i64);
    let mut e = XMorphism::zero(s.g(), m.dim, m.dim);
    for &g in &w.stab {
        let c = chi.value(f, g)?.mul(&inv_order);
        e.comps[g] = w.w[g].as_ref().unwrap().scale(&c);
    }
    Ok(e)
}

/// `(A_b, π̃_χ)`, or `(A, π̃_χ)` when `block` is `None`.
pub fn pi_tilde(s: &Setting, block: Option<usize>, chi: &Character) -> Result<CompletedObject, Error> {
    let m = crate::bimod::regular_bimodule(&s.a, block);
    let w = witnesses(s, &m)?;
    let e = epsilon_idempotent(s, &m, &w, chi)?;
    Ok(CompletedObject { m, e })
}

/// `(M, ε_χ)` for a tagged bimodule.
pub fn completed(s: &Setting, m: Bimodule, chi: &Character) -> Result<CompletedObject, Error> {
    let w = witnesses(s, &m)?;
    let e = epsilon_idempotent(s, &m, &w, chi)?;
    Ok(CompletedObject { m, e })
}

/// `f ∘ x ∘ e` for morphisms of completed objects.
pub fn sandwich(s: &Setting, f: &XMorphism, x: &XMorphism, e: &XMorphism) -> XMorphism {
    let t = s.compose(x, e).expect("shapes agree");
    s.compose(f, &t).expect("shapes agree")
}

/// Spanning set of `Hom(X, Y)` in the completion, with zero elements dropped.
pub fn hom_list(s: &Setting, x: &CompletedObject, y: &CompletedObject) -> Vec<XMorphism> {
    s.x_hom_list(&x.m, &y.m).into_iter().map(|h| sandwich(s, &y.e, &h, &x.e)).filter(|h| !h.is_zero()).collect()
}

/// Reduces a spanning set of morphisms to a basis.
pub fn reduce_to_basis(s: &Setting, list: Vec<XMorphism>) -> Vec<XMorphism> {
    let Some(first) = list.first() else { return list };
    let n = s.g() * first.src * first.tgt;
    let mut ech = Echelon::new(n.max(1));
    list.into_iter().filter(|h| ech.insert(h.flatten())).collect()
}

/// `dim End(X) / Rad End(X)`, from structure constants of `e End(M) e`.
pub fn end_mod_rad_dim(s: &Setting, x: &CompletedObject) -> Result<usize, Error> {
    let basis = reduce_to_basis(s, hom_list(s, x, x));
    let d = basis.len();
    let n = s.g() * x.m.dim * x.m.dim;
    let mut ech = Echelon::new(n.max(1));
    // augmented rows give coordinates of products in the chosen basis
    let mut aug = Echelon::new(n + d);
    for (k, b) in basis.iter().enumerate() {
        ech.insert(b.flatten());
        let mut v = b.flatten();
        v.push((n + k, Scalar::int(s.field(), -1)));
        aug.insert(v);
    }
    let coords =
        |v: &SVec| -> SVec { aug.reduce(v).into_iter().filter(|(c, _)| *c >= n).map(|(c, x)| (c - n, x)).collect() };
    let mut prods: Vec<Vec<SVec>> = Vec::with_capacity(d);
    for u in &basis {
        let mut row = Vec::with_capacity(d);
        for v in &basis {
            let p = s.compose(u, v)?;
            row.push(coords(&p.flatten()));
        }
        prods.push(row);
    }
    let rad = radical_basis(s.field(), d, &|u, v| prods[u][v].clone());
    // the semisimple quotient must be commutative for End/Rad to be a group algebra
    let mut rad_ech = Echelon::new(d.max(1));
    for r in &rad {
        rad_ech.insert(r.clone());
    }
    for u in 0..d {
        for v in 0..u {
            let c = crate::mat::svec_axpy(&prods[u][v], &Scalar::int(s.field(), -1), &prods[v][u]);
            if !c.is_empty() && !rad_ech.contains(&c) {
                return Err(Error::FieldNotSplitting);
            }
        }
    }
    Ok(d - rad.len())
}

/// Multiplicity of the indecomposable `y` (with `End(y)/Rad = k`) as a summand
/// of `x`: the rank of the pairing `(u, v) ↦ ϑ(v ∘ u)`, where ϑ is the trace
/// of the identity component, which kills the radical and not `f`.
pub fn multiplicity(s: &Setting, x: &CompletedObject, y: &CompletedObject) -> usize {
    let us = hom_list(s, y, x);
    if us.is_empty() {
        return 0;
    }
    let vs = hom_list(s, x, y);
    if vs.is_empty() {
        return 0;
    }
    let rows: Vec<SVec> = us
        .iter()
        .map(|u| {
            vs.iter()
                .enumerate()
                .filter_map(|(k, v)| {
                    let t = s.compose_trace1(v, u);
                    if t.is_zero() {
                        None
                    } else {
                        Some((k, t))
                    }
                })
                .collect()
        })
        .collect();
    Mat::from_rows(vs.len(), rows).rank()
}

/// Multiplicities of each candidate in `x`, with the dimension audit
/// `Σ mult · rank(candidate) = rank(x)`.
pub fn decompose(s: &Setting, x: &CompletedObject, cands: &[CompletedObject]) -> Result<Vec<(usize, usize)>, Error> {
    let mut out = Vec::new();
    let mut total = 0;
    for (k, c) in cands.iter().enumerate() {
        if c.m.dim == 0 {
            continue;
        }
        let m = multiplicity(s, x, c);
        if m > 0 {
            total += m * c.rank(s);
            out.push((k, m));
        }
    }
    if total != x.rank(s) {
        return Err(Error::Internal(alloc::format!("decomposition audit failed: {} != {}", total, x.rank(s))));
    }
    Ok(out)
}

/// A split pair: `u: Y -> X`, `v: X -> Y` with `v ∘ u = f_Y`.
#[derive(Clone, Debug)]
pub struct SplitPair {
    pub section: XMorphism,
    pub retraction: XMorphism,
}

/// Inverts `w ∈ f End(Y) f` when `w = λf + r` with r in the radical.
fn local_inverse(s: &Setting, y: &CompletedObject, w: &XMorphism) -> Result<XMorphism, Error> {
    let fld = s.field();
    let lam = s.compose_trace1(w, &y.e).div(&y.e.trace1(fld));
    if lam.is_zero() {
        return Err(Error::Internal("element is not a unit".into()));
    }
    let li = lam.inv().unwrap();
    let r = w.sub(&y.e.scale(&lam)).scale(&li.neg());
    // w⁻¹ = λ⁻¹ Σ_k (-r/λ)^k
    let mut sum = y.e.clone();
    let mut pw = y.e.clone();
    for _ in 0..=(y.rank(s) + 1) {
        pw = s.compose(&r, &pw)?;
        if pw.is_zero() {
            return Ok(sum.scale(&li));
        }
        sum = sum.add(&pw);
    }
    Err(Error::FieldNotSplitting)
}

/// Finds one summand isomorphic to `y` inside `x`, if any.
pub fn split_off(s: &Setting, x: &CompletedObject, y: &CompletedObject) -> Result<Option<SplitPair>, Error> {
    let us = hom_list(s, y, x);
    let vs = hom_list(s, x, y);
    for u in &us {
        for v in &vs {
            if !s.compose_trace1(v, u).is_zero() {
                let w = s.compose(v, u)?;
                let wi = local_inverse(s, y, &w)?;
                let retraction = s.compose(&wi, v)?;
                return Ok(Some(SplitPair { section: u.clone(), retraction }));
            }
        }
    }
    Ok(None)
}

/// Decomposition by peeling off split summands in the given candidate order.
/// Multiplicities indexed like the candidates, and the split pairs.
pub type Splitting = (Vec<(usize, usize)>, Vec<(usize, SplitPair)>);

/// Returns multiplicities (indexed like `cands`) and the split pairs.
pub fn decompose_by_splitting(
    s: &Setting,
    x: &CompletedObject,
    cands: &[CompletedObject],
    order: &[usize],
) -> Result<Splitting, Error> {
    let mut rest = x.clone();
    let mut mult = vec![0usize; cands.len()];
    let mut pairs = Vec::new();
    for &k in order {
        if cands[k].m.dim == 0 {
            continue;
        }
        while let Some(p) = split_off(s, &rest, &cands[k])? {
            let proj = s.compose(&p.section, &p.retraction)?;
            rest.e = rest.e.sub(&proj);
            mult[k] += 1;
            pairs.push((k, p));
        }
    }
    if !rest.e.is_zero() {
        return Err(Error::Internal("candidates do not exhaust the object".into()));
    }
    Ok((mult.into_iter().enumerate().filter(|(_, m)| *m > 0).collect(), pairs))
}

/// Isomorphism of completed objects, via equal decompositions.
pub fn iso_test(
    s: &Setting,
    x: &CompletedObject,
    y: &CompletedObject,
    cands: &[CompletedObject],
) -> Result<bool, Error> {
    if x.rank(s) != y.rank(s) {
        return Ok(false);
    }
    Ok(decompose(s, x, cands)? == decompose(s, y, cands)?)
}

/// Direct test for indecomposables: some `v ∘ u` is a unit of `End(x)`.
pub fn iso_indecomposable(s: &Setting, x: &CompletedObject, y: &CompletedObject) -> bool {
    x.rank(s) == y.rank(s) && multiplicity(s, y, x) == 1
}
