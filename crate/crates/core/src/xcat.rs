//! The category X: bimodules with G-spread hom spaces, composition, the
//! tensor product over X, the flip, associator and the left module action.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, GroupAction};
use crate::bimod::{bimodule_hom_basis, direct_sum, tensor_a, twist, Bimodule, LeftModule, Tag, TensorA};
use crate::mat::{Echelon, Mat, SVec};
use crate::scalars::{Field, Scalar};
use crate::Error;

/// An algebra together with a group action; the ambient data of X.
#[derive(Clone, Debug)]
pub struct Setting {
    pub a: Algebra,
    pub act: GroupAction,
}

/// A morphism `M -> N` in X: one matrix per group element, in the fixed
/// enumeration of G; `comps[φ]` represents a map `M -> ^φN^φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XMorphism {
    pub src: usize,
    pub tgt: usize,
    pub comps: Vec<Mat>,
}

impl XMorphism {
    pub fn zero(g: usize, src: usize, tgt: usize) -> XMorphism {
        XMorphism { src, tgt, comps: vec![Mat::zeros(tgt, src); g] }
    }

    /// Only the identity component is nonzero.
    pub fn plain(g: usize, h: Mat) -> XMorphism {
        let mut x = XMorphism::zero(g, h.cols, h.rows);
        x.comps[0] = h;
        x
    }

    pub fn identity(g: usize, n: usize, f: &Field) -> XMorphism {
        XMorphism::plain(g, Mat::identity(n, f))
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Mat::is_zero)
    }

    pub fn add(&self, o: &XMorphism) -> XMorphism {
        XMorphism {
            src: self.src,
            tgt: self.tgt,
            comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &XMorphism) -> XMorphism {
        XMorphism {
            src: self.src,
            tgt: self.tgt,
            comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> XMorphism {
        XMorphism { src: self.src, tgt: self.tgt, comps: self.comps.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn axpy(&self, c: &Scalar, o: &XMorphism) -> XMorphism {
        XMorphism {
            src: self.src,
            tgt: self.tgt,
            comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a.axpy(c, b)).collect(),
        }
    }

    /// All components concatenated, for linear algebra on hom spaces.
    pub fn flatten(&self) -> SVec {
        let block = self.src * self.tgt;
        let mut out = Vec::new();
        for (k, m) in self.comps.iter().enumerate() {
            for (i, v) in m.flatten() {
                out.push((k * block + i, v));
            }
        }
        out
    }

    pub fn unflatten(g: usize, src: usize, tgt: usize, v: &SVec) -> XMorphism {
        let block = src * tgt;
        let mut parts: Vec<SVec> = vec![Vec::new(); g];
        for (i, x) in v {
            parts[i / block.max(1)].push((i % block.max(1), x.clone()));
        }
        XMorphism { src, tgt, comps: parts.iter().map(|p| Mat::unflatten(tgt, src, p)).collect() }
    }

    /// Trace of the identity component.
    pub fn trace1(&self, f: &Field) -> Scalar {
        self.comps[0].trace(f)
    }
}

/// `M ⊗_X N = ⊕_φ M ⊗_A ^φN^φ`, summands in the fixed order of G.
#[derive(Clone, Debug)]
pub struct XTensor {
    pub bm: Bimodule,
    pub parts: Vec<TensorA>,
    pub offsets: Vec<usize>,
}

impl XTensor {
    pub fn dim(&self) -> usize {
        self.bm.dim
    }
}

impl Setting {
    pub fn new(a: Algebra, act: GroupAction) -> Setting {
        Setting { a, act }
    }

    pub fn field(&self) -> &Field {
        &self.a.field
    }

    pub fn g(&self) -> usize {
        self.act.order()
    }

    pub fn gmul(&self, x: usize, y: usize) -> usize {
        self.act.group.mul(x, y)
    }

    pub fn ginv(&self, x: usize) -> usize {
        self.act.group.inv(x)
    }

    pub fn twist(&self, m: &Bimodule, phi: usize) -> Bimodule {
        twist(m, &self.act, phi, phi)
    }

    pub fn hom_basis(&self, m: &Bimodule, n: &Bimodule) -> Vec<Mat> {
        bimodule_hom_basis(&self.a, m, n)
    }

    /// Per-component bases of `Hom_X(M, N)`.
    pub fn x_hom_basis(&self, m: &Bimodule, n: &Bimodule) -> Vec<Vec<Mat>> {
        (0..self.g()).map(|phi| self.hom_basis(m, &self.twist(n, phi))).collect()
    }

    /// The same space as a flat list of morphisms.
    pub fn x_hom_list(&self, m: &Bimodule, n: &Bimodule) -> Vec<XMorphism> {
        let g = self.g();
        let mut out = Vec::new();
        for (phi, basis) in self.x_hom_basis(m, n).into_iter().enumerate() {
            for h in basis {
                let mut x = XMorphism::zero(g, m.dim, n.dim);
                x.comps[phi] = h;
                out.push(x);
            }
        }
        out
    }

    /// Composition: `(g∘f)_σ = Σ_φ g_{σφ⁻¹} f_φ`.
    pub fn compose(&self, g: &XMorphism, f: &XMorphism) -> Result<XMorphism, Error> {
        if g.src != f.tgt {
            return Err(Error::ShapeMismatch("composition of incompatible morphisms".into()));
        }
        let n = self.g();
        let mut out = XMorphism::zero(n, f.src, g.tgt);
        for phi in 0..n {
            if f.comps[phi].is_zero() {
                continue;
            }
            for psi in 0..n {
                if g.comps[psi].is_zero() {
                    continue;
                }
                let sigma = self.gmul(psi, phi);
                out.comps[sigma] = out.comps[sigma].add(&g.comps[psi].mul(&f.comps[phi]));
            }
        }
        Ok(out)
    }

    /// Identity component of `g∘f` only.
    pub fn compose_trace1(&self, g: &XMorphism, f: &XMorphism) -> Scalar {
        let mut t = Scalar::zero(self.field());
        for phi in 0..self.g() {
            let psi = self.ginv(phi);
            if f.comps[phi].is_zero() || g.comps[psi].is_zero() {
                continue;
            }
            t = t.add(&g.comps[psi].trace_of_product(&f.comps[phi], self.field()));
        }
        t
    }

    /// Checks the twisted intertwining law of every component.
    pub fn is_x_morphism(&self, m: &Bimodule, n: &Bimodule, x: &XMorphism) -> bool {
        (0..self.g()).all(|phi| {
            x.comps[phi].is_zero() || crate::bimod::is_bimodule_map(&self.a, m, &self.twist(n, phi), &x.comps[phi])
        })
    }

    pub fn x_tensor(&self, m: &Bimodule, n: &Bimodule) -> XTensor {
        let parts: Vec<TensorA> = (0..self.g()).map(|phi| tensor_a(&self.a, m, &self.twist(n, phi))).collect();
        let mut offsets = Vec::with_capacity(parts.len());
        let mut off = 0;
        for p in &parts {
            offsets.push(off);
            off += p.dim();
        }
        let refs: Vec<&Bimodule> = parts.iter().map(|p| &p.bm).collect();
        let mut bm = direct_sum(&self.a, &refs);
        bm.tag = Tag::Tensor;
        XTensor { bm, parts, offsets }
    }

    /// `f ⊗_X g`: component α sends summand γ to summand α⁻¹β through
    /// `f_α ⊗ g_{βγ⁻¹}`, for all β.
    pub fn x_tensor_mor(&self, src: &XTensor, tgt: &XTensor, f: &XMorphism, g: &XMorphism) -> XMorphism {
        let n = self.g();
        let mut out = XMorphism::zero(n, src.dim(), tgt.dim());
        for alpha in 0..n {
            if f.comps[alpha].is_zero() {
                continue;
            }
            let mut rows: Vec<SVec> = vec![Vec::new(); tgt.dim()];
            for gamma in 0..n {
                for beta in 0..n {
                    let gi = self.gmul(beta, self.ginv(gamma));
                    if g.comps[gi].is_zero() {
                        continue;
                    }
                    let delta = self.gmul(self.ginv(alpha), beta);
                    let blk = src.parts[gamma].map_to(&tgt.parts[delta], &f.comps[alpha], &g.comps[gi]);
                    for (r, row) in blk.data.into_iter().enumerate() {
                        if row.is_empty() {
                            continue;
                        }
                        let shifted: SVec = row.into_iter().map(|(c, v)| (c + src.offsets[gamma], v)).collect();
                        let tr = r + tgt.offsets[delta];
                        rows[tr] = crate::mat::svec_axpy(&rows[tr], &Scalar::one(self.field()), &shifted);
                    }
                }
            }
            out.comps[alpha] = Mat { rows: tgt.dim(), cols: src.dim(), data: rows };
        }
        out
    }

    /// The flip `M ⊗_X N -> (⊕_φ ^{φ⁻¹}M^{φ⁻¹} ⊗_A N)`, realized on the
    /// concrete target `flip_target(M, N)` as the identity on pure tensors in
    /// the single component that makes it a bimodule map.
    pub fn flip_target(&self, m: &Bimodule, n: &Bimodule) -> XTensor {
        let parts: Vec<TensorA> =
            (0..self.g()).map(|phi| tensor_a(&self.a, &self.twist(m, self.ginv(phi)), n)).collect();
        let mut offsets = Vec::new();
        let mut off = 0;
        for p in &parts {
            offsets.push(off);
            off += p.dim();
        }
        let refs: Vec<&Bimodule> = parts.iter().map(|p| &p.bm).collect();
        XTensor { bm: direct_sum(&self.a, &refs), parts, offsets }
    }

    /// Summand φ of `M ⊗_X N` is `M ⊗ ^φN^φ = ^φ(^{φ⁻¹}M^{φ⁻¹} ⊗ N)^φ`, so the
    /// identity on pure tensors is a morphism in the component φ (twists here
    /// act through φ itself, so the index is φ rather than φ⁻¹).
    pub fn flip(&self, src: &XTensor, tgt: &XTensor) -> XMorphism {
        self.spread_identity(src, tgt, false)
    }

    /// Inverse of [`Setting::flip`]: summand φ sits in the component φ⁻¹.
    pub fn flip_inv(&self, src: &XTensor, tgt: &XTensor) -> XMorphism {
        self.spread_identity(tgt, src, true)
    }

    fn spread_identity(&self, src: &XTensor, tgt: &XTensor, invert: bool) -> XMorphism {
        let n = self.g();
        let f = self.field();
        let mut out = XMorphism::zero(n, src.dim(), tgt.dim());
        for phi in 0..n {
            let k = if invert { self.ginv(phi) } else { phi };
            let (sp, tp) = (&src.parts[phi], &tgt.parts[phi]);
            let blk = sp.map_to(tp, &Mat::identity(sp.dm, f), &Mat::identity(sp.dn, f));
            let mut data = core::mem::take(&mut out.comps[k].data);
            for (r, row) in blk.data.into_iter().enumerate() {
                let shifted: SVec = row.into_iter().map(|(c, v)| (c + src.offsets[phi], v)).collect();
                let tr = r + tgt.offsets[phi];
                data[tr] = crate::mat::svec_axpy(&data[tr], &Scalar::one(f), &shifted);
            }
            out.comps[k].data = data;
        }
        out
    }

    /// Associator `(X ⊗ Y) ⊗ Z -> X ⊗ (Y ⊗ Z)`, the identity on pure tensors;
    /// summand (φ, ψ) on the left goes to (φ, φ⁻¹ψ) on the right.
    pub fn associator(&self, xy: &XTensor, xy_z: &XTensor, yz: &XTensor, x_yz: &XTensor) -> XMorphism {
        let n = self.g();
        let f = self.field();
        let mut rows: Vec<SVec> = vec![Vec::new(); x_yz.dim()];
        for psi in 0..n {
            let outer = &xy_z.parts[psi];
            for q in 0..outer.dim() {
                let (w, z) = outer.basis_pairs[q];
                // w is a basis vector of X ⊗_X Y; find its summand
                let phi = summand_of(xy, w);
                let (x, y) = xy.parts[phi].basis_pairs[w - xy.offsets[phi]];
                let beta = self.gmul(self.ginv(phi), psi);
                // inside summand phi of X ⊗ (Y⊗Z): X ⊗ ^φ(Y ⊗_X Z)^φ, whose underlying
                // space is Y ⊗_X Z; y ⊗ z lies in its summand β
                let inner = &yz.parts[beta];
                let yzv: SVec = inner
                    .project(&[(y, z, Scalar::one(f))])
                    .into_iter()
                    .map(|(k, c)| (k + yz.offsets[beta], c))
                    .collect();
                let outv = x_yz.parts[phi].project_pure(&vec![(x, Scalar::one(f))], &yzv);
                for (r, c) in outv {
                    rows[r + x_yz.offsets[phi]].push((q + xy_z.offsets[psi], c));
                }
            }
        }
        for r in rows.iter_mut() {
            r.sort_by_key(|e| e.0);
        }
        XMorphism::plain(n, Mat { rows: x_yz.dim(), cols: xy_z.dim(), data: rows })
    }

    /// Inverse associator `X ⊗ (Y ⊗ Z) -> (X ⊗ Y) ⊗ Z`.
    pub fn associator_inv(&self, xy: &XTensor, xy_z: &XTensor, yz: &XTensor, x_yz: &XTensor) -> XMorphism {
        let n = self.g();
        let f = self.field();
        let mut rows: Vec<SVec> = vec![Vec::new(); xy_z.dim()];
        for phi in 0..n {
            let outer = &x_yz.parts[phi];
            for q in 0..outer.dim() {
                let (x, w) = outer.basis_pairs[q];
                let beta = summand_of(yz, w);
                let (y, z) = yz.parts[beta].basis_pairs[w - yz.offsets[beta]];
                let psi = self.gmul(phi, beta);
                let xyv: SVec = xy.parts[phi]
                    .project(&[(x, y, Scalar::one(f))])
                    .into_iter()
                    .map(|(k, c)| (k + xy.offsets[phi], c))
                    .collect();
                let outv = xy_z.parts[psi].project_pure(&xyv, &vec![(z, Scalar::one(f))]);
                for (r, c) in outv {
                    rows[r + xy_z.offsets[psi]].push((q + x_yz.offsets[phi], c));
                }
            }
        }
        for r in rows.iter_mut() {
            r.sort_by_key(|e| e.0);
        }
        XMorphism::plain(n, Mat { rows: xy_z.dim(), cols: x_yz.dim(), data: rows })
    }

    /// `M ⊗^(l) V = ⊕_φ ^φM^φ ⊗_A V`.
    pub fn act_left_plain(&self, m: &Bimodule, v: &LeftModule) -> (Vec<TensorA>, Vec<usize>, LeftModule) {
        let pt = usize::MAX - 1;
        let vb = v.as_bimodule(pt, self.field(), self.a.dim);
        let parts: Vec<TensorA> = (0..self.g()).map(|phi| tensor_a(&self.a, &self.twist(m, phi), &vb)).collect();
        let mut offsets = Vec::new();
        let mut off = 0;
        for p in &parts {
            offsets.push(off);
            off += p.dim();
        }
        let refs: Vec<&Bimodule> = parts.iter().map(|p| &p.bm).collect();
        let sum = direct_sum(&self.a, &refs);
        (parts, offsets, LeftModule { dim: sum.dim, left: sum.left, lv: sum.lv })
    }

    /// `f ⊗^(l) id_V`: block (φ -> ψ) is `f_{ψφ⁻¹} ⊗ id`.
    pub fn act_left_mor(
        &self,
        src: &(Vec<TensorA>, Vec<usize>, LeftModule),
        tgt: &(Vec<TensorA>, Vec<usize>, LeftModule),
        x: &XMorphism,
    ) -> Mat {
        let n = self.g();
        let f = self.field();
        let mut rows: Vec<SVec> = vec![Vec::new(); tgt.2.dim];
        for phi in 0..n {
            for psi in 0..n {
                let k = self.gmul(psi, self.ginv(phi));
                if x.comps[k].is_zero() {
                    continue;
                }
                let sp = &src.0[phi];
                let blk = sp.map_to(&tgt.0[psi], &x.comps[k], &Mat::identity(sp.dn, f));
                for (r, row) in blk.data.into_iter().enumerate() {
                    let shifted: SVec = row.into_iter().map(|(c, v)| (c + src.1[phi], v)).collect();
                    let tr = r + tgt.1[psi];
                    rows[tr] = crate::mat::svec_axpy(&rows[tr], &Scalar::one(f), &shifted);
                }
            }
        }
        Mat { rows: tgt.2.dim, cols: src.2.dim, data: rows }
    }

    /// `(M, e) ⊗^(l) V`: the image of `e ⊗^(l) id_V` with the induced action.
    pub fn act_left(&self, m: &Bimodule, e: &XMorphism, v: &LeftModule) -> LeftModule {
        let plain = self.act_left_plain(m, v);
        let p = self.act_left_mor(&plain, &plain, e);
        image_module(&self.a, &plain.2, &p)
    }

    /// The mirror action `V ⊗^(r) M = ⊕_φ V ⊗_A ^φM^φ` for a right module
    /// given as a bimodule with trivial left structure; returns its dimension.
    pub fn act_right_dim(&self, v: &Bimodule, m: &Bimodule, e: &XMorphism) -> usize {
        let t = self.x_tensor(v, m);
        let id = XMorphism::identity(self.g(), v.dim, self.field());
        let p = self.x_tensor_mor(&t, &t, &id, e);
        // rank of the idempotent = trace of its block realization
        let tr = self.block_trace(&p);
        tr.as_rat().and_then(|r| r.as_small()).map_or(0, |(n, _)| n as usize)
    }

    /// Trace of the faithful block matrix `F[σ][τ] = f_{στ⁻¹}`, which is `|G|·tr(f_1)`.
    pub fn block_trace(&self, x: &XMorphism) -> Scalar {
        x.trace1(self.field()).mul(&Scalar::int(self.field(), self.g() as i64))
    }
}

/// Summand of a tensor basis vector.
fn summand_of(t: &XTensor, w: usize) -> usize {
    (0..t.parts.len()).rev().find(|&p| t.offsets[p] <= w && t.parts[p].dim() > 0).unwrap()
}

/// Submodule spanned by the columns of an idempotent matrix, with induced action.
pub fn image_module(a: &Algebra, v: &LeftModule, p: &Mat) -> LeftModule {
    let mut ech = Echelon::new(v.dim);
    let mut basis: Vec<SVec> = Vec::new();
    for c in 0..p.cols {
        let col = p.column(c);
        if !col.is_empty() && ech.insert(col.clone()) {
            basis.push(col);
        }
    }
    // express images in the chosen basis via a second echelon on augmented vectors
    let k = basis.len();
    let mut aug = Echelon::new(v.dim + k);
    for (i, b) in basis.iter().enumerate() {
        let mut w = b.clone();
        w.push((v.dim + i, Scalar::int(&a.field, -1)));
        aug.insert(w);
    }
    let coords = |x: &SVec| -> SVec {
        // reduce x against rows; the leftover lives in the augmented columns
        let r = aug.reduce(x);
        r.into_iter().filter(|(c, _)| *c >= v.dim).map(|(c, s)| (c - v.dim, s)).collect()
    };
    let left: Vec<Mat> = v
        .left
        .iter()
        .map(|m| {
            let cols: Vec<SVec> = basis.iter().map(|b| coords(&m.apply(b))).collect();
            Mat::from_cols(k, cols)
        })
        .collect();
    let lv = basis.iter().map(|b| v.lv[b[0].0]).collect();
    LeftModule { dim: k, left, lv }
}
