//! Finite-dimensional bimodules with explicit actions, tensor products over
//! the algebra, and hom spaces as kernels of intertwining systems.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, GroupAction};
use crate::mat::{svec_get, Accum, Echelon, Mat, SVec};
use crate::scalars::{Field, Scalar};
use crate::Error;

/// Where a bimodule came from; used for canonical witnesses and labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tag {
    /// The block `A_b` of the regular bimodule, or all of `A`.
    Regular(Option<usize>),
    /// `A e_i ⊗ e_j A`.
    Proj(usize, usize),
    /// The simple left module at `e`, with right action through vertex `pt`.
    Simple(usize, usize),
    Twist,
    Tensor,
    Sum,
    Other,
}

#[derive(Clone, Debug)]
pub struct Bimodule {
    pub dim: usize,
    /// Action of each algebra basis element.
    pub left: Vec<Mat>,
    pub right: Vec<Mat>,
    /// Peirce vertices: `e_{lv[k]} v_k e_{rv[k]} = v_k`.
    pub lv: Vec<usize>,
    pub rv: Vec<usize>,
    pub tag: Tag,
}

fn combine(mats: &[Mat], x: &SVec, n: usize) -> Mat {
    x.iter().fold(Mat::zeros(n, n), |acc, (u, c)| acc.axpy(c, &mats[*u]))
}

impl Bimodule {
    pub fn zero(a: &Algebra) -> Bimodule {
        Bimodule {
            dim: 0,
            left: vec![Mat::zeros(0, 0); a.dim],
            right: vec![Mat::zeros(0, 0); a.dim],
            lv: Vec::new(),
            rv: Vec::new(),
            tag: Tag::Other,
        }
    }

    pub fn left_of(&self, x: &SVec) -> Mat {
        combine(&self.left, x, self.dim)
    }

    pub fn right_of(&self, x: &SVec) -> Mat {
        combine(&self.right, x, self.dim)
    }

    /// Checks that both actions are unital representations and commute.
    pub fn check(&self, a: &Algebra) -> bool {
        let f = &a.field;
        let id = Mat::identity(self.dim, f);
        if self.left_of(&a.one()) != id || self.right_of(&a.one()) != id {
            return false;
        }
        for u in 0..a.dim {
            for v in 0..a.dim {
                let uv = &a.mult[u][v];
                if self.left[u].mul(&self.left[v]) != self.left_of(uv) {
                    return false;
                }
                // right action: m·(uv) = (m·u)·v
                if self.right[v].mul(&self.right[u]) != self.right_of(uv) {
                    return false;
                }
                if self.left[u].mul(&self.right[v]) != self.right[v].mul(&self.left[u]) {
                    return false;
                }
            }
        }
        true
    }
}

/// `A_b` (or `A` when `block` is `None`) as a bimodule.
pub fn regular_bimodule(a: &Algebra, block: Option<usize>) -> Bimodule {
    let idx: Vec<usize> = (0..a.dim).filter(|&u| block.is_none_or(|b| a.block_of[a.rv(u)] == b)).collect();
    Bimodule {
        dim: idx.len(),
        left: a.lmat.iter().map(|m| m.submatrix(&idx, &idx)).collect(),
        right: a.rmat.iter().map(|m| m.submatrix(&idx, &idx)).collect(),
        lv: idx.iter().map(|&u| a.lv(u)).collect(),
        rv: idx.iter().map(|&u| a.rv(u)).collect(),
        tag: Tag::Regular(block),
    }
}

/// `A e_i ⊗_k e_j A`, basis `p ⊗ q` indexed `p_pos * dim(e_j A) + q_pos`.
pub fn proj_bimodule(a: &Algebra, i: usize, j: usize) -> Result<Bimodule, Error> {
    if i >= a.nverts || j >= a.nverts {
        return Err(Error::IndexOutOfRange);
    }
    let pl = a.left_proj_basis(i);
    let pr = a.right_proj_basis(j);
    let f = &a.field;
    let (il, ir) = (Mat::identity(pl.len(), f), Mat::identity(pr.len(), f));
    let left = a.lmat.iter().map(|m| m.submatrix(&pl, &pl).kron(&ir)).collect();
    let right = a.rmat.iter().map(|m| il.kron(&m.submatrix(&pr, &pr))).collect();
    let mut lv = Vec::new();
    let mut rv = Vec::new();
    for &p in &pl {
        for &q in &pr {
            lv.push(a.lv(p));
            rv.push(a.rv(q));
        }
    }
    Ok(Bimodule { dim: pl.len() * pr.len(), left, right, lv, rv, tag: Tag::Proj(i, j) })
}

/// Basis position of `p ⊗ q` in `proj_bimodule(a, i, j)`.
pub fn proj_index(a: &Algebra, i: usize, j: usize, p: usize, q: usize) -> Option<usize> {
    let pl = a.left_proj_basis(i);
    let pr = a.right_proj_basis(j);
    let x = pl.iter().position(|&u| u == p)?;
    let y = pr.iter().position(|&u| u == q)?;
    Some(x * pr.len() + y)
}

/// The simple top of `A e` as a bimodule whose right action factors through `e_pt`.
pub fn simple_bimodule(a: &Algebra, e: usize, pt: usize) -> Bimodule {
    let f = &a.field;
    let one = |cond: bool| if cond { Mat::identity(1, f) } else { Mat::zeros(1, 1) };
    Bimodule {
        dim: 1,
        left: (0..a.dim).map(|u| one(u == a.idem[e])).collect(),
        right: (0..a.dim).map(|u| one(u == a.idem[pt])).collect(),
        lv: vec![e],
        rv: vec![pt],
        tag: Tag::Simple(e, pt),
    }
}

/// `^φ M ^ψ`: same space, actions precomposed with the automorphisms.
pub fn twist(m: &Bimodule, act: &GroupAction, phi: usize, psi: usize) -> Bimodule {
    if phi == 0 && psi == 0 {
        return m.clone();
    }
    let ndim = act.mats[0].rows;
    let left = (0..ndim).map(|u| m.left_of(&act.mats[phi].column(u))).collect();
    let right = (0..ndim).map(|u| m.right_of(&act.mats[psi].column(u))).collect();
    let (pi, qi) = (act.group.inv(phi), act.group.inv(psi));
    Bimodule {
        dim: m.dim,
        left,
        right,
        lv: m.lv.iter().map(|&v| act.vperm[pi][v]).collect(),
        rv: m.rv.iter().map(|&v| act.vperm[qi][v]).collect(),
        tag: Tag::Twist,
    }
}

pub fn direct_sum(a: &Algebra, parts: &[&Bimodule]) -> Bimodule {
    let dim = parts.iter().map(|p| p.dim).sum();
    let block = |sel: &dyn Fn(&Bimodule) -> &Mat| -> Mat {
        let mut data = Vec::with_capacity(dim);
        let mut off = 0;
        for p in parts {
            for row in &sel(p).data {
                data.push(row.iter().map(|(c, v)| (c + off, v.clone())).collect());
            }
            off += p.dim;
        }
        Mat { rows: dim, cols: dim, data }
    };
    Bimodule {
        dim,
        left: (0..a.dim).map(|u| block(&|p: &Bimodule| &p.left[u])).collect(),
        right: (0..a.dim).map(|u| block(&|p: &Bimodule| &p.right[u])).collect(),
        lv: parts.iter().flat_map(|p| p.lv.iter().copied()).collect(),
        rv: parts.iter().flat_map(|p| p.rv.iter().copied()).collect(),
        tag: Tag::Sum,
    }
}

/// `M ⊗_A N` as an explicit quotient of the span of Peirce-compatible pure tensors.
#[derive(Clone, Debug)]
pub struct TensorA {
    pub bm: Bimodule,
    pub dm: usize,
    pub dn: usize,
    /// Ambient column of `m ⊗ n` (index `m*dn + n`), or MAX when it is zero.
    amb_of: Vec<usize>,
    /// Quotient coordinates of each ambient column.
    proj_cols: Vec<SVec>,
    /// Pure tensor chosen as representative of each quotient basis vector.
    pub basis_pairs: Vec<(usize, usize)>,
}

const NONE: usize = usize::MAX;

impl TensorA {
    pub fn dim(&self) -> usize {
        self.bm.dim
    }

    /// Quotient coordinates of `Σ c (m ⊗ n)`.
    pub fn project(&self, terms: &[(usize, usize, Scalar)]) -> SVec {
        let mut acc = Accum::new(self.bm.dim.max(1));
        for (m, n, c) in terms {
            let k = self.amb_of[m * self.dn + n];
            if k != NONE {
                acc.axpy(c, &self.proj_cols[k]);
            }
        }
        acc.take()
    }

    /// Image of `(x ⊗ y)` for sparse vectors x in M and y in N.
    pub fn project_pure(&self, x: &SVec, y: &SVec) -> SVec {
        let mut acc = Accum::new(self.bm.dim.max(1));
        for (m, a) in x {
            for (n, b) in y {
                let k = self.amb_of[m * self.dn + n];
                if k != NONE {
                    acc.axpy(&a.mul(b), &self.proj_cols[k]);
                }
            }
        }
        acc.take()
    }

    /// Matrix of `f ⊗ g` from this quotient to `target`.
    pub fn map_to(&self, target: &TensorA, f: &Mat, g: &Mat) -> Mat {
        let fc: Vec<SVec> = (0..f.cols).map(|c| f.column(c)).collect();
        let gc: Vec<SVec> = (0..g.cols).map(|c| g.column(c)).collect();
        let cols = self.basis_pairs.iter().map(|&(m, n)| target.project_pure(&fc[m], &gc[n])).collect();
        Mat::from_cols(target.dim(), cols)
    }
}

/// Computes `M ⊗_A N`; only the arrows are needed to balance since the
/// idempotent relations are built into the choice of ambient pure tensors.
pub fn tensor_a(a: &Algebra, m: &Bimodule, n: &Bimodule) -> TensorA {
    let f = &a.field;
    let (dm, dn) = (m.dim, n.dim);
    let mut amb_of = vec![NONE; dm * dn];
    let mut amb_pairs = Vec::new();
    for x in 0..dm {
        for y in 0..dn {
            if m.rv[x] == n.lv[y] {
                amb_of[x * dn + y] = amb_pairs.len();
                amb_pairs.push((x, y));
            }
        }
    }
    let namb = amb_pairs.len();
    let mut ech = Echelon::new(namb);
    for g in a.generator_vecs() {
        let rm = m.right_of(&g);
        let ln = n.left_of(&g);
        let rmt = rm.transpose(); // row x: entries of (x·g)
        let lnt = ln.transpose();
        for x in 0..dm {
            for y in 0..dn {
                if rmt.data[x].is_empty() && lnt.data[y].is_empty() {
                    continue;
                }
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (x2, c) in &rmt.data[x] {
                    let k = amb_of[x2 * dn + y];
                    if k != NONE {
                        let v = acc.remove(&k).map_or(c.clone(), |o| o.add(c));
                        acc.insert(k, v);
                    }
                }
                for (y2, c) in &lnt.data[y] {
                    let k = amb_of[x * dn + y2];
                    if k != NONE {
                        let v = acc.remove(&k).map_or(c.neg(), |o| o.sub(c));
                        acc.insert(k, v);
                    }
                }
                let row: SVec = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if !row.is_empty() {
                    ech.insert(row);
                }
            }
        }
    }
    let free: Vec<usize> = (0..namb).filter(|&c| ech.pivot_row(c).is_none()).collect();
    let mut qpos = vec![NONE; namb];
    for (i, &c) in free.iter().enumerate() {
        qpos[c] = i;
    }
    let proj_cols: Vec<SVec> = (0..namb)
        .map(|c| {
            if qpos[c] != NONE {
                vec![(qpos[c], Scalar::one(f))]
            } else {
                let row = &ech.rows[ech.pivot_row(c).unwrap()];
                let mut v: SVec =
                    row.iter().filter(|(k, _)| qpos[*k] != NONE).map(|(k, x)| (qpos[*k], x.neg())).collect();
                v.sort_by_key(|e| e.0);
                v
            }
        })
        .collect();
    let basis_pairs: Vec<(usize, usize)> = free.iter().map(|&c| amb_pairs[c]).collect();
    let q = free.len();
    let mut t = TensorA {
        bm: Bimodule { dim: q, left: Vec::new(), right: Vec::new(), lv: Vec::new(), rv: Vec::new(), tag: Tag::Tensor },
        dm,
        dn,
        amb_of,
        proj_cols,
        basis_pairs,
    };
    let id_n = Mat::identity(dn, f);
    let id_m = Mat::identity(dm, f);
    let self_copy = t.clone();
    t.bm.left = (0..a.dim).map(|u| self_copy.map_to(&self_copy, &m.left[u], &id_n)).collect();
    t.bm.right = (0..a.dim).map(|u| self_copy.map_to(&self_copy, &id_m, &n.right[u])).collect();
    t.bm.lv = t.basis_pairs.iter().map(|&(x, _)| m.lv[x]).collect();
    t.bm.rv = t.basis_pairs.iter().map(|&(_, y)| n.rv[y]).collect();
    t
}

/// Basis of `Hom_{A-A}(M, N)` restricted to Peirce blocks, from the arrow
/// intertwining equations, in the deterministic order of the row reduction.
pub fn bimodule_hom_basis(a: &Algebra, m: &Bimodule, n: &Bimodule) -> Vec<Mat> {
    let f = &a.field;
    // unknowns: (r, c) with matching Peirce vertices
    let mut var_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut vars: Vec<(usize, usize)> = Vec::new();
    for r in 0..n.dim {
        for c in 0..m.dim {
            if n.lv[r] == m.lv[c] && n.rv[r] == m.rv[c] {
                var_of.insert((r, c), vars.len());
                vars.push((r, c));
            }
        }
    }
    if vars.is_empty() {
        return Vec::new();
    }
    let mut ech = Echelon::new(vars.len());
    for g in a.generator_vecs() {
        for side in 0..2 {
            let (an, am) = if side == 0 { (n.left_of(&g), m.left_of(&g)) } else { (n.right_of(&g), m.right_of(&g)) };
            let ant = an.transpose();
            // equation (r, j): Σ_k an[r][k] X[k][j] - Σ_k X[r][k] am[k][j]
            let mut eqs: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>> = BTreeMap::new();
            for (v, &(k, c)) in vars.iter().enumerate() {
                for (r, x) in &ant.data[k] {
                    let e = eqs.entry((*r, c)).or_default();
                    let val = e.remove(&v).map_or(x.clone(), |o| o.add(x));
                    e.insert(v, val);
                }
                for (j, x) in &am.data[c] {
                    let e = eqs.entry((k, *j)).or_default();
                    let val = e.remove(&v).map_or(x.neg(), |o| o.sub(x));
                    e.insert(v, val);
                }
            }
            for (_, row) in eqs {
                let row: SVec = row.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                if !row.is_empty() {
                    ech.insert(row);
                }
            }
        }
    }
    ech.nullspace(f)
        .into_iter()
        .map(|v| {
            let mut data = vec![Vec::new(); n.dim];
            for (k, x) in v {
                let (r, c) = vars[k];
                data[r].push((c, x));
            }
            for row in data.iter_mut() {
                row.sort_by_key(|e| e.0);
            }
            Mat { rows: n.dim, cols: m.dim, data }
        })
        .collect()
}

/// Checks `h(a·x·b) = a·h(x)·b` against all algebra basis elements.
pub fn is_bimodule_map(a: &Algebra, m: &Bimodule, n: &Bimodule, h: &Mat) -> bool {
    (0..a.dim).all(|u| n.left[u].mul(h) == h.mul(&m.left[u]) && n.right[u].mul(h) == h.mul(&m.right[u]))
}

/// A finite-dimensional left module.
#[derive(Clone, Debug)]
pub struct LeftModule {
    pub dim: usize,
    pub left: Vec<Mat>,
    pub lv: Vec<usize>,
}

impl LeftModule {
    pub fn left_of(&self, x: &SVec) -> Mat {
        combine(&self.left, x, self.dim)
    }

    /// `A e_v` as a left module.
    pub fn projective(a: &Algebra, v: usize) -> LeftModule {
        let idx = a.left_proj_basis(v);
        LeftModule {
            dim: idx.len(),
            left: a.lmat.iter().map(|m| m.submatrix(&idx, &idx)).collect(),
            lv: idx.iter().map(|&u| a.lv(u)).collect(),
        }
    }

    /// View as a bimodule over the algebra whose right action is the identity
    /// through a single right vertex label `pt` (only used for tensoring).
    pub fn as_bimodule(&self, pt: usize, f: &Field, adim: usize) -> Bimodule {
        Bimodule {
            dim: self.dim,
            left: self.left.clone(),
            right: (0..adim).map(|_| Mat::identity(self.dim, f)).collect(),
            lv: self.lv.clone(),
            rv: vec![pt; self.dim],
            tag: Tag::Other,
        }
    }

    /// Dimension vector of the top `V / rad V`.
    pub fn top(&self, a: &Algebra) -> Vec<usize> {
        let mut rad = Echelon::new(self.dim);
        for g in a.generator_vecs() {
            let m = self.left_of(&g);
            for c in 0..self.dim {
                let col = m.column(c);
                if !col.is_empty() {
                    rad.insert(col);
                }
            }
        }
        let mut top = vec![0; a.nverts];
        for v in 0..a.nverts {
            let idx: Vec<usize> = (0..self.dim).filter(|&k| self.lv[k] == v).collect();
            let in_rad = rad.rows.iter().filter(|r| self.lv[r[0].0] == v).count();
            top[v] = idx.len() - in_rad;
        }
        top
    }
}

pub fn svec_entry(v: &SVec, i: usize) -> Option<&Scalar> {
    svec_get(v, i)
}
