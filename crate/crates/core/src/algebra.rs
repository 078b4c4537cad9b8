//! Basic algebras presented by a quiver with relations, their radical,
//! Nakayama permutation, trace form, and finite abelian group actions.
//!
//! Paths compose like functions: the word `a b` is the product `a·b`, defined
//! when the source of `a` is the target of `b`. So `A e_i` is spanned by the
//! paths starting at `i`, and `e_j A` by the paths ending at `j`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::group::AbelianGroup;
use crate::mat::{svec_axpy, Accum, Echelon, Mat, SVec};
use crate::scalars::{Field, Scalar};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Path {
    pub src: usize,
    pub tgt: usize,
    /// Arrow indices in product order; empty for the trivial path at `src`.
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { src: v, tgt: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self · o`, if composable.
    pub fn compose(&self, o: &Path) -> Option<Path> {
        if self.src != o.tgt {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&o.arrows);
        Some(Path { src: o.src, tgt: self.tgt, arrows })
    }
}

/// A linear combination of words; each word is either an idempotent or a path.
pub type Combo = Vec<(Scalar, Path)>;

#[derive(Clone, Debug)]
pub struct Presentation {
    pub field: Field,
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Combo>,
    pub truncate: Option<usize>,
    /// Largest path length tried when no truncation is given.
    pub max_len: usize,
}

impl Presentation {
    pub fn new(field: &Field, vertices: usize) -> Presentation {
        Presentation {
            field: field.clone(),
            vertices,
            arrows: Vec::new(),
            relations: Vec::new(),
            truncate: None,
            max_len: 16,
        }
    }

    pub fn arrow(&mut self, name: &str, src: usize, tgt: usize) -> usize {
        self.arrows.push(Arrow { name: name.to_string(), src, tgt });
        self.arrows.len() - 1
    }

    /// Path from arrow names in product order.
    pub fn word(&self, names: &[&str]) -> Result<Path, Error> {
        let mut p: Option<Path> = None;
        for n in names.iter().rev() {
            let a = self
                .arrows
                .iter()
                .position(|a| a.name == *n)
                .ok_or_else(|| Error::BadPresentation(format!("unknown arrow {}", n)))?;
            let ap = Path { src: self.arrows[a].src, tgt: self.arrows[a].tgt, arrows: vec![a] };
            p = Some(match p {
                None => ap,
                Some(q) => ap
                    .compose(&q)
                    .ok_or_else(|| Error::BadPresentation(format!("word {} is not a path", names.join("*"))))?,
            });
        }
        p.ok_or_else(|| Error::BadPresentation("empty word".into()))
    }

    pub fn path_label(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e{}", p.src + 1)
        } else {
            let names: Vec<&str> = p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect();
            names.join("*")
        }
    }
}

#[derive(Clone, Debug)]
pub struct Algebra {
    pub field: Field,
    pub pres: Presentation,
    pub dim: usize,
    pub paths: Vec<Path>,
    pub labels: Vec<String>,
    /// `mult[u][v]` = coordinates of `basis_u · basis_v`.
    pub mult: Vec<Vec<SVec>>,
    /// Left and right multiplication by each basis element.
    pub lmat: Vec<Mat>,
    pub rmat: Vec<Mat>,
    pub nverts: usize,
    /// Basis index of the idempotent `e_v`.
    pub idem: Vec<usize>,
    /// Block index of each vertex, blocks numbered by smallest vertex.
    pub block_of: Vec<usize>,
    pub nblocks: usize,
    /// Coordinates of each arrow (they need not be basis elements).
    pub arrow_vecs: Vec<SVec>,
    /// Path reduction data, kept so that arbitrary words can be evaluated.
    reducer: Reducer,
}

#[derive(Clone, Debug)]
struct Reducer {
    len_bound: usize,
    col_of: BTreeMap<Path, usize>,
    ech: Echelon,
    basis_of_col: Vec<Option<usize>>,
}

fn all_paths(pres: &Presentation, max: usize) -> Vec<Vec<Path>> {
    let mut by_len: Vec<Vec<Path>> = vec![(0..pres.vertices).map(Path::trivial).collect()];
    for l in 1..=max {
        let mut next = Vec::new();
        for p in &by_len[l - 1] {
            for (ai, a) in pres.arrows.iter().enumerate() {
                if a.src == p.tgt {
                    let mut arrows = vec![ai];
                    arrows.extend_from_slice(&p.arrows);
                    next.push(Path { src: p.src, tgt: a.tgt, arrows });
                }
            }
        }
        next.sort();
        by_len.push(next);
    }
    by_len
}

/// Two-sided products `u·r·v` of a relation with paths, as path combinations.
fn ideal_elements(rel: &Combo, paths: &[Path], max_len: usize) -> Vec<Combo> {
    let (s, t) = (rel[0].1.src, rel[0].1.tgt);
    let minlen = rel.iter().map(|(_, p)| p.len()).min().unwrap_or(0);
    let mut out = Vec::new();
    for u in paths.iter().filter(|u| u.src == t) {
        for v in paths.iter().filter(|v| v.tgt == s) {
            if u.len() + v.len() + minlen > max_len {
                continue;
            }
            let c: Combo = rel.iter().map(|(c, p)| (c.clone(), u.compose(&p.compose(v).unwrap()).unwrap())).collect();
            out.push(c);
        }
    }
    out
}

pub fn build_algebra(pres: &Presentation) -> Result<Algebra, Error> {
    let f = pres.field.clone();
    for a in &pres.arrows {
        if a.src >= pres.vertices || a.tgt >= pres.vertices {
            return Err(Error::BadPresentation(format!("arrow {} leaves the quiver", a.name)));
        }
    }
    for r in &pres.relations {
        if r.is_empty() {
            continue;
        }
        let (s, t) = (r[0].1.src, r[0].1.tgt);
        for (_, p) in r {
            if p.src != s || p.tgt != t {
                return Err(Error::BadPresentation("relation terms are not parallel".into()));
            }
            if p.src >= pres.vertices || p.arrows.iter().any(|&a| a >= pres.arrows.len()) {
                return Err(Error::BadPresentation("relation uses a path outside the quiver".into()));
            }
        }
    }
    let rels: Vec<&Combo> = pres.relations.iter().filter(|r| !r.is_empty()).collect();

    // Find L with every path of length >= L in the ideal.
    let len_bound = match pres.truncate {
        Some(n) => n.max(1),
        None => {
            let mut found = None;
            let by_len = all_paths(pres, pres.max_len);
            for l in 1..=pres.max_len {
                if by_len[l].is_empty() {
                    found = Some(l);
                    break;
                }
                let upto: Vec<Path> = by_len[..=l].iter().flatten().cloned().collect();
                let col: BTreeMap<&Path, usize> = upto.iter().enumerate().map(|(i, p)| (p, i)).collect();
                let mut ech = Echelon::new(upto.len());
                for r in &rels {
                    for c in ideal_elements(r, &upto, l) {
                        if c.iter().all(|(_, p)| p.len() <= l) {
                            ech.insert(combo_vec(&c, &col));
                        }
                    }
                }
                if by_len[l].iter().all(|p| ech.contains(&vec![(col[p], Scalar::one(&f))])) {
                    found = Some(l);
                    break;
                }
            }
            found.ok_or(Error::NotFiniteDimensional)?
        }
    };

    let by_len = all_paths(pres, len_bound.saturating_sub(1));
    // Column order: longest (then largest) first, so pivots eat long paths and
    // the surviving normal forms are as short as possible.
    let mut cols: Vec<Path> = by_len.iter().flatten().cloned().collect();
    cols.sort_by(|a, b| b.len().cmp(&a.len()).then(b.cmp(a)));
    let col_of: BTreeMap<Path, usize> = cols.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let all: Vec<Path> = by_len.iter().flatten().cloned().collect();
    let mut ech = Echelon::new(cols.len());
    for r in &rels {
        for c in ideal_elements(r, &all, usize::MAX) {
            let kept: Combo = c.into_iter().filter(|(_, p)| p.len() < len_bound).collect();
            let v = combo_vec_owned(&kept, &col_of);
            if !v.is_empty() {
                ech.insert(v);
            }
        }
    }
    let mut basis_cols: Vec<usize> = (0..cols.len()).filter(|&c| ech.pivot_row(c).is_none()).collect();
    basis_cols.sort_by(|&a, &b| {
        let (p, q) = (&cols[a], &cols[b]);
        p.len().cmp(&q.len()).then(p.src.cmp(&q.src)).then(p.tgt.cmp(&q.tgt)).then(p.cmp(q))
    });
    let mut basis_of_col = vec![None; cols.len()];
    for (i, &c) in basis_cols.iter().enumerate() {
        basis_of_col[c] = Some(i);
    }
    let paths: Vec<Path> = basis_cols.iter().map(|&c| cols[c].clone()).collect();
    let dim = paths.len();
    let reducer = Reducer { len_bound, col_of, ech, basis_of_col };

    let mut idem = vec![usize::MAX; pres.vertices];
    for v in 0..pres.vertices {
        let p = Path::trivial(v);
        match reducer.reduce(&p, &f).as_slice() {
            [(i, c)] if c.is_one() && paths[*i] == p => idem[v] = *i,
            _ => return Err(Error::BadPresentation(format!("idempotent e{} is not a basis element", v + 1))),
        }
    }

    let mult: Vec<Vec<SVec>> = paths
        .iter()
        .map(|u| {
            paths
                .iter()
                .map(|v| match u.compose(v) {
                    Some(w) => reducer.reduce(&w, &f),
                    None => Vec::new(),
                })
                .collect()
        })
        .collect();
    let lmat = (0..dim).map(|u| Mat::from_cols(dim, (0..dim).map(|v| mult[u][v].clone()).collect())).collect();
    let rmat = (0..dim).map(|u| Mat::from_cols(dim, (0..dim).map(|v| mult[v][u].clone()).collect())).collect();
    let arrow_vecs: Vec<SVec> = pres
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| reducer.reduce(&Path { src: a.src, tgt: a.tgt, arrows: vec![ai] }, &f))
        .collect();

    // Blocks: connected components through arrows that survive.
    let mut parent: Vec<usize> = (0..pres.vertices).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (ai, a) in pres.arrows.iter().enumerate() {
        if !arrow_vecs[ai].is_empty() {
            let (x, y) = (find(&mut parent, a.src), find(&mut parent, a.tgt));
            if x != y {
                parent[x.max(y)] = x.min(y);
            }
        }
    }
    let mut block_of = vec![0; pres.vertices];
    let mut roots: Vec<usize> = Vec::new();
    for v in 0..pres.vertices {
        let r = find(&mut parent, v);
        block_of[v] = match roots.iter().position(|&x| x == r) {
            Some(i) => i,
            None => {
                roots.push(r);
                roots.len() - 1
            }
        };
    }

    let labels = paths.iter().map(|p| pres.path_label(p)).collect();
    Ok(Algebra {
        field: f,
        pres: pres.clone(),
        dim,
        paths,
        labels,
        mult,
        lmat,
        rmat,
        nverts: pres.vertices,
        idem,
        block_of,
        nblocks: roots.len(),
        arrow_vecs,
        reducer,
    })
}

fn combo_vec(c: &Combo, col: &BTreeMap<&Path, usize>) -> SVec {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (s, p) in c {
        let k = col[p];
        let v = match acc.remove(&k) {
            Some(x) => x.add(s),
            None => s.clone(),
        };
        if !v.is_zero() {
            acc.insert(k, v);
        }
    }
    acc.into_iter().collect()
}

fn combo_vec_owned(c: &Combo, col: &BTreeMap<Path, usize>) -> SVec {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (s, p) in c {
        let k = col[p];
        let v = match acc.remove(&k) {
            Some(x) => x.add(s),
            None => s.clone(),
        };
        if !v.is_zero() {
            acc.insert(k, v);
        }
    }
    acc.into_iter().collect()
}

impl Reducer {
    fn reduce(&self, p: &Path, f: &Field) -> SVec {
        if p.len() >= self.len_bound {
            return Vec::new();
        }
        let c = self.col_of[p];
        let r = self.ech.reduce(&vec![(c, Scalar::one(f))]);
        let mut out: SVec =
            r.into_iter().map(|(c, v)| (self.basis_of_col[c].expect("reduced form is a normal form"), v)).collect();
        out.sort_by_key(|e| e.0);
        out
    }
}

impl Algebra {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Coordinates of a path (zero if it is not composable or killed).
    pub fn path_vec(&self, p: &Path) -> SVec {
        self.reducer.reduce(p, &self.field)
    }

    pub fn combo_vec(&self, c: &Combo) -> SVec {
        let mut out = Vec::new();
        for (s, p) in c {
            out = svec_axpy(&out, s, &self.path_vec(p));
        }
        out
    }

    pub fn unit_vec(&self, i: usize) -> SVec {
        vec![(i, Scalar::one(&self.field))]
    }

    pub fn one(&self) -> SVec {
        let mut v: SVec = self.idem.iter().map(|&i| (i, Scalar::one(&self.field))).collect();
        v.sort_by_key(|e| e.0);
        v
    }

    pub fn block_unit(&self, b: usize) -> SVec {
        let mut v: SVec = (0..self.nverts)
            .filter(|&x| self.block_of[x] == b)
            .map(|x| (self.idem[x], Scalar::one(&self.field)))
            .collect();
        v.sort_by_key(|e| e.0);
        v
    }

    pub fn mul(&self, x: &SVec, y: &SVec) -> SVec {
        let mut acc = Accum::new(self.dim);
        for (u, a) in x {
            for (v, b) in y {
                let ab = a.mul(b);
                acc.axpy(&ab, &self.mult[*u][*v]);
            }
        }
        acc.take()
    }

    /// Left vertex (target) of a basis element: `e_t · b = b`.
    pub fn lv(&self, b: usize) -> usize {
        self.paths[b].tgt
    }

    /// Right vertex (source): `b · e_s = b`.
    pub fn rv(&self, b: usize) -> usize {
        self.paths[b].src
    }

    pub fn block_dim(&self, b: usize) -> usize {
        (0..self.dim).filter(|&u| self.block_of[self.rv(u)] == b).count()
    }

    /// Basis indices of `A e_v` (paths starting at `v`).
    pub fn left_proj_basis(&self, v: usize) -> Vec<usize> {
        (0..self.dim).filter(|&u| self.rv(u) == v).collect()
    }

    /// Basis indices of `e_v A` (paths ending at `v`).
    pub fn right_proj_basis(&self, v: usize) -> Vec<usize> {
        (0..self.dim).filter(|&u| self.lv(u) == v).collect()
    }

    /// Generators used for intertwining equations: the arrows.
    pub fn generator_vecs(&self) -> Vec<SVec> {
        self.arrow_vecs.iter().filter(|v| !v.is_empty()).cloned().collect()
    }

    /// `(e_i A e_j)` dimensions, i.e. the Cartan matrix with `c[i][j] = dim e_i A e_j`.
    pub fn cartan(&self) -> Vec<Vec<usize>> {
        let mut c = vec![vec![0; self.nverts]; self.nverts];
        for u in 0..self.dim {
            c[self.lv(u)][self.rv(u)] += 1;
        }
        c
    }

    pub fn check_associative(&self) -> bool {
        for u in 0..self.dim {
            for v in 0..self.dim {
                let uv = &self.mult[u][v];
                for w in 0..self.dim {
                    let left = self.mul(uv, &self.unit_vec(w));
                    let right = self.mul(&self.unit_vec(u), &self.mult[v][w]);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn has_simple_block(&self) -> Option<usize> {
        (0..self.nblocks).find(|&b| self.block_dim(b) == 1)
    }
}

/// Basis of the Jacobson radical of an algebra given by structure constants,
/// as the kernel of the trace form `(u,v) -> tr(L_{uv})` (characteristic 0).
pub fn radical_basis(f: &Field, dim: usize, mult: &dyn Fn(usize, usize) -> SVec) -> Vec<SVec> {
    if dim == 0 {
        return Vec::new();
    }
    let prods: Vec<Vec<SVec>> = (0..dim).map(|u| (0..dim).map(|v| mult(u, v)).collect()).collect();
    // tr(L_w) = sum_i coefficient of b_i in w b_i
    let tr: Vec<Scalar> = (0..dim)
        .map(|w| {
            let mut t = Scalar::zero(f);
            for i in 0..dim {
                if let Some(c) = crate::mat::svec_get(&prods[w][i], i) {
                    t = t.add(c);
                }
            }
            t
        })
        .collect();
    let gram: Vec<SVec> = (0..dim)
        .map(|u| {
            (0..dim)
                .filter_map(|v| {
                    let mut s = Scalar::zero(f);
                    for (w, c) in &prods[u][v] {
                        s = s.add(&c.mul(&tr[*w]));
                    }
                    if s.is_zero() {
                        None
                    } else {
                        Some((v, s))
                    }
                })
                .collect()
        })
        .collect();
    crate::mat::nullspace(&Mat::from_rows(dim, gram), f)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nakayama {
    /// `nu[v]` is the vertex with `D(e_v A) = A e_{nu[v]}`.
    pub nu: Vec<usize>,
    /// Basis index of the socle element of `A e_v`.
    pub socle: Vec<SVec>,
    pub weakly_symmetric: bool,
}

fn socle_of(a: &Algebra, basis: &[usize], left: bool) -> Vec<SVec> {
    // common kernel of multiplication by arrows, inside the span of `basis`
    let f = &a.field;
    let mut rows: Vec<SVec> = Vec::new();
    for g in a.generator_vecs() {
        let m = if left {
            g.iter().fold(Mat::zeros(a.dim, a.dim), |acc, (u, c)| acc.axpy(c, &a.lmat[*u]))
        } else {
            g.iter().fold(Mat::zeros(a.dim, a.dim), |acc, (u, c)| acc.axpy(c, &a.rmat[*u]))
        };
        let sub = m.submatrix(&(0..a.dim).collect::<Vec<_>>(), basis);
        rows.extend(sub.data.into_iter().filter(|r| !r.is_empty()));
    }
    crate::mat::nullspace(&Mat::from_rows(basis.len(), rows), f)
        .into_iter()
        .map(|v| v.into_iter().map(|(k, c)| (basis[k], c)).collect())
        .collect()
}

pub fn nakayama(a: &Algebra) -> Result<Nakayama, Error> {
    let n = a.nverts;
    let mut soc_vertex = vec![0; n];
    let mut socle = Vec::with_capacity(n);
    for v in 0..n {
        let s = socle_of(a, &a.left_proj_basis(v), true);
        if s.len() != 1 {
            return Err(Error::NotSelfInjective);
        }
        let lvs: Vec<usize> = s[0].iter().map(|(u, _)| a.lv(*u)).collect();
        if lvs.iter().any(|&x| x != lvs[0]) {
            return Err(Error::NotSelfInjective);
        }
        soc_vertex[v] = lvs[0];
        socle.push(s[0].clone());
    }
    // soc(A f) = S_e means nu(e) = f
    let mut nu = vec![usize::MAX; n];
    for fv in 0..n {
        let e = soc_vertex[fv];
        if nu[e] != usize::MAX {
            return Err(Error::NotSelfInjective);
        }
        nu[e] = fv;
    }
    // right side: soc(e A) simple and consistent, dim A nu(e) = dim e A
    for e in 0..n {
        let s = socle_of(a, &a.right_proj_basis(e), false);
        if s.len() != 1 {
            return Err(Error::NotSelfInjective);
        }
        if a.left_proj_basis(nu[e]).len() != a.right_proj_basis(e).len() {
            return Err(Error::NotSelfInjective);
        }
    }
    let weakly_symmetric = (0..n).all(|v| nu[v] == v);
    Ok(Nakayama { nu, socle, weakly_symmetric })
}

#[derive(Clone, Debug)]
pub struct TraceData {
    /// Values of t on the basis.
    pub t: Vec<Scalar>,
    /// `dual[a]` = a*, with t(b a*) = delta_ab.
    pub dual: Vec<SVec>,
}

impl TraceData {
    pub fn eval(&self, x: &SVec) -> Scalar {
        let f = self.t[0].field().clone();
        let mut s = Scalar::zero(&f);
        for (u, c) in x {
            s = s.add(&c.mul(&self.t[*u]));
        }
        s
    }
}

pub fn trace_dual(a: &Algebra, nak: &Nakayama) -> Result<TraceData, Error> {
    let f = &a.field;
    let mut t = vec![Scalar::zero(f); a.dim];
    for s in &nak.socle {
        // the socle element's last path carries the functional
        let (p, c) = s.last().unwrap();
        t[*p] = c.inv().unwrap();
    }
    let gram: Vec<SVec> = (0..a.dim)
        .map(|b| {
            (0..a.dim)
                .filter_map(|k| {
                    let mut v = Scalar::zero(f);
                    for (w, c) in &a.mult[b][k] {
                        v = v.add(&c.mul(&t[*w]));
                    }
                    if v.is_zero() {
                        None
                    } else {
                        Some((k, v))
                    }
                })
                .collect()
        })
        .collect();
    let g = Mat::from_rows(a.dim, gram);
    let gi = g.inverse(f).ok_or_else(|| Error::Internal("trace form is degenerate".into()))?;
    let dual = (0..a.dim).map(|x| gi.column(x)).collect();
    Ok(TraceData { t, dual })
}

/// A finite abelian group acting on an algebra by automorphisms.
#[derive(Clone, Debug)]
pub struct GroupAction {
    pub group: AbelianGroup,
    /// Matrix of each element on the algebra basis (columns are images).
    pub mats: Vec<Mat>,
    /// Vertex permutation of each element.
    pub vperm: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn trivial(a: &Algebra) -> GroupAction {
        GroupAction {
            group: AbelianGroup::trivial(),
            mats: vec![Mat::identity(a.dim, &a.field)],
            vperm: vec![(0..a.nverts).collect()],
        }
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn apply(&self, g: usize, x: &SVec) -> SVec {
        self.mats[g].apply(x)
    }

    /// Subgroup fixing both vertices.
    pub fn pair_stabilizer(&self, i: usize, j: usize) -> Vec<usize> {
        self.group.elements().filter(|&g| self.vperm[g][i] == i && self.vperm[g][j] == j).collect()
    }

    pub fn vertex_stabilizer(&self, i: usize) -> Vec<usize> {
        self.group.elements().filter(|&g| self.vperm[g][i] == i).collect()
    }
}

/// Extends images of idempotents and arrows multiplicatively to a matrix on
/// the basis; generators not listed are fixed.
pub fn images_to_matrix(a: &Algebra, idem_img: &[(usize, SVec)], arrow_img: &[(usize, SVec)]) -> Mat {
    let mut eimg: Vec<SVec> = (0..a.nverts).map(|v| a.unit_vec(a.idem[v])).collect();
    for (v, x) in idem_img {
        eimg[*v] = x.clone();
    }
    let mut aimg: Vec<SVec> = a.arrow_vecs.clone();
    for (ar, x) in arrow_img {
        aimg[*ar] = x.clone();
    }
    let cols: Vec<SVec> = a
        .paths
        .iter()
        .map(|p| {
            if p.arrows.is_empty() {
                eimg[p.src].clone()
            } else {
                let mut acc = aimg[p.arrows[0]].clone();
                for &ar in &p.arrows[1..] {
                    acc = a.mul(&acc, &aimg[ar]);
                }
                acc
            }
        })
        .collect();
    Mat::from_cols(a.dim, cols)
}

fn is_automorphism(a: &Algebra, m: &Mat) -> Result<(), Error> {
    let f = &a.field;
    if m.inverse(f).is_none() {
        return Err(Error::NotAutomorphism("matrix is singular".into()));
    }
    if m.apply(&a.one()) != a.one() {
        return Err(Error::NotAutomorphism("1 is not fixed".into()));
    }
    let imgs: Vec<SVec> = (0..a.dim).map(|u| m.column(u)).collect();
    for u in 0..a.dim {
        for v in 0..a.dim {
            let lhs = m.apply(&a.mult[u][v]);
            let rhs = a.mul(&imgs[u], &imgs[v]);
            if lhs != rhs {
                return Err(Error::NotAutomorphism(format!(
                    "phi({}·{}) != phi({})·phi({})",
                    a.labels[u], a.labels[v], a.labels[u], a.labels[v]
                )));
            }
        }
    }
    Ok(())
}

/// Builds the group `Z/d_1 x ... x Z/d_r` acting through the generator matrices.
pub fn build_group_action(a: &Algebra, gens: &[(u32, Mat)]) -> Result<GroupAction, Error> {
    let f = &a.field;
    for (d, _) in gens {
        if *d == 0 {
            return Err(Error::Invalid("generator order must be positive".into()));
        }
    }
    for (_, m) in gens {
        if m.rows != a.dim || m.cols != a.dim {
            return Err(Error::ShapeMismatch("generator matrix size".into()));
        }
        is_automorphism(a, m)?;
    }
    for (i, (_, x)) in gens.iter().enumerate() {
        for (_, y) in &gens[i + 1..] {
            if x.mul(y) != y.mul(x) {
                return Err(Error::NotAbelian);
            }
        }
    }
    let id = Mat::identity(a.dim, f);
    for (d, m) in gens {
        let mut p = id.clone();
        for k in 1..=*d {
            p = p.mul(m);
            if p == id && k < *d {
                return Err(Error::ActionNotFaithful);
            }
        }
        if p != id {
            return Err(Error::NotAutomorphism(format!("generator does not have order {}", d)));
        }
    }
    let group = AbelianGroup::new(gens.iter().map(|(d, _)| *d).collect());
    let mut mats = Vec::with_capacity(group.order());
    for g in group.elements() {
        let mut p = id.clone();
        for (k, c) in group.coords(g).iter().enumerate() {
            for _ in 0..*c {
                p = p.mul(&gens[k].1);
            }
        }
        mats.push(p);
    }
    for g in 1..mats.len() {
        if mats[g] == id {
            return Err(Error::ActionNotFaithful);
        }
    }
    let mut vperm = Vec::with_capacity(mats.len());
    for m in &mats {
        let mut perm = vec![0; a.nverts];
        for v in 0..a.nverts {
            let img = m.column(a.idem[v]);
            match img.as_slice() {
                [(i, c)] if c.is_one() && a.paths[*i].arrows.is_empty() => perm[v] = a.paths[*i].src,
                _ => return Err(Error::IdempotentsNotInvariant),
            }
            if a.block_of[perm[v]] != a.block_of[v] {
                return Err(Error::BlocksNotPreserved);
            }
        }
        vperm.push(perm);
    }
    Ok(GroupAction { group, mats, vperm })
}

/// `B = A x k`: a new isolated vertex (the last one), with G acting trivially on it.
/// Returns the embedding of A-basis indices into B-basis indices.
pub fn adjoin_point(a: &Algebra, act: &GroupAction) -> Result<(Algebra, GroupAction, Vec<usize>), Error> {
    let mut pres = a.pres.clone();
    pres.vertices += 1;
    if pres.truncate.is_none() {
        pres.max_len = pres.max_len.max(1);
    }
    let b = build_algebra(&pres)?;
    let embed: Vec<usize> =
        a.paths.iter().map(|p| b.paths.iter().position(|q| q == p).expect("A-basis survives in B")).collect();
    let pt = a.nverts;
    let lift = |x: &SVec| -> SVec {
        let mut v: SVec = x.iter().map(|(u, c)| (embed[*u], c.clone())).collect();
        v.sort_by_key(|e| e.0);
        v
    };
    let mut mats = Vec::with_capacity(act.mats.len());
    for m in &act.mats {
        let mut cols = vec![Vec::new(); b.dim];
        for u in 0..a.dim {
            cols[embed[u]] = lift(&m.column(u));
        }
        cols[b.idem[pt]] = b.unit_vec(b.idem[pt]);
        mats.push(Mat::from_cols(b.dim, cols));
    }
    let vperm = act
        .vperm
        .iter()
        .map(|p| {
            let mut q = p.clone();
            q.push(pt);
            q
        })
        .collect();
    Ok((b, GroupAction { group: act.group.clone(), mats, vperm }, embed))
}

/// Matrix of an algebra element acting by left multiplication.
pub fn left_mult(a: &Algebra, x: &SVec) -> Mat {
    x.iter().fold(Mat::zeros(a.dim, a.dim), |acc, (u, c)| acc.axpy(c, &a.lmat[*u]))
}

pub fn right_mult(a: &Algebra, x: &SVec) -> Mat {
    x.iter().fold(Mat::zeros(a.dim, a.dim), |acc, (u, c)| acc.axpy(c, &a.rmat[*u]))
}
