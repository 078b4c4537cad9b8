//! Sparse exact matrices and row reduction.
//!
//! Action matrices of path algebras and the maps between tensor quotients are
//! overwhelmingly zero, so rows are stored as sorted `(column, value)` lists.

use alloc::vec;
use alloc::vec::Vec;

use crate::scalars::{Field, Scalar};

/// Sorted by index, no explicit zeros.
pub type SVec = Vec<(usize, Scalar)>;

pub fn svec_axpy(x: &SVec, c: &Scalar, y: &SVec) -> SVec {
    // x + c*y
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i].clone());
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            let v = c.mul(&y[j].1);
            if !v.is_zero() {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let v = x[i].1.add(&c.mul(&y[j].1));
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn svec_scale(x: &SVec, c: &Scalar) -> SVec {
    if c.is_zero() {
        return Vec::new();
    }
    x.iter().map(|(i, v)| (*i, v.mul(c))).collect()
}

pub fn svec_get(x: &SVec, i: usize) -> Option<&Scalar> {
    x.binary_search_by_key(&i, |e| e.0).ok().map(|k| &x[k].1)
}

pub fn svec_dot(x: &SVec, y: &SVec, f: &Field) -> Scalar {
    let mut acc = Scalar::zero(f);
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        if x[i].0 < y[j].0 {
            i += 1;
        } else if y[j].0 < x[i].0 {
            j += 1;
        } else {
            acc = acc.add(&x[i].1.mul(&y[j].1));
            i += 1;
            j += 1;
        }
    }
    acc
}

/// Sums many scaled sparse vectors at once through a dense scratch row.
pub struct Accum {
    vals: Vec<Option<Scalar>>,
    touched: Vec<usize>,
}

impl Accum {
    pub fn new(len: usize) -> Accum {
        Accum { vals: vec![None; len], touched: Vec::new() }
    }

    pub fn add(&mut self, i: usize, v: Scalar) {
        match &mut self.vals[i] {
            Some(x) => *x = x.add(&v),
            slot @ None => {
                *slot = Some(v);
                self.touched.push(i);
            }
        }
    }

    pub fn axpy(&mut self, c: &Scalar, y: &SVec) {
        for (i, v) in y {
            self.add(*i, c.mul(v));
        }
    }

    pub fn take(&mut self) -> SVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            if let Some(v) = self.vals[i].take() {
                if !v.is_zero() {
                    out.push((i, v));
                }
            }
        }
        self.touched.clear();
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<SVec>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize, f: &Field) -> Mat {
        Mat { rows: n, cols: n, data: (0..n).map(|i| vec![(i, Scalar::one(f))]).collect() }
    }

    pub fn from_rows(cols: usize, data: Vec<SVec>) -> Mat {
        Mat { rows: data.len(), cols, data }
    }

    pub fn from_dense(f: &Field, d: &[Vec<Scalar>]) -> Mat {
        let cols = d.first().map_or(0, |r| r.len());
        let data = d
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect())
            .collect();
        let _ = f;
        Mat { rows: d.len(), cols, data }
    }

    pub fn to_dense(&self, f: &Field) -> Vec<Vec<Scalar>> {
        let mut d = vec![vec![Scalar::zero(f); self.cols]; self.rows];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                d[r][*c] = v.clone();
            }
        }
        d
    }

    /// Builds from a column-generating closure: column `j` is `col(j)`.
    pub fn from_cols(rows: usize, cols: Vec<SVec>) -> Mat {
        let mut data = vec![Vec::new(); rows];
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c {
                data[*i].push((j, v.clone()));
            }
        }
        Mat { rows, cols: cols.len(), data }
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&Scalar> {
        svec_get(&self.data[r], c)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> Mat {
        let mut data = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                data[*c].push((r, v.clone()));
            }
        }
        Mat { rows: self.cols, cols: self.rows, data }
    }

    pub fn column(&self, c: usize) -> SVec {
        self.data.iter().enumerate().filter_map(|(r, row)| svec_get(row, c).map(|v| (r, v.clone()))).collect()
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "matrix shape mismatch");
        let mut acc = Accum::new(o.cols);
        let data = self
            .data
            .iter()
            .map(|row| {
                for (k, a) in row {
                    acc.axpy(a, &o.data[*k]);
                }
                acc.take()
            })
            .collect();
        Mat { rows: self.rows, cols: o.cols, data }
    }

    pub fn apply(&self, v: &SVec) -> SVec {
        let f = match v.first() {
            Some((_, s)) => s.field().clone(),
            None => return Vec::new(),
        };
        self.data
            .iter()
            .enumerate()
            .filter_map(|(r, row)| {
                let x = svec_dot(row, v, &f);
                if x.is_zero() {
                    None
                } else {
                    Some((r, x))
                }
            })
            .collect()
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix shape mismatch");
        let data = self
            .data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| match b.first() {
                None => a.clone(),
                Some((_, s)) => svec_axpy(a, &Scalar::one(s.field()), b),
            })
            .collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn axpy(&self, c: &Scalar, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix shape mismatch");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| svec_axpy(a, c, b)).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        let data = self
            .data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| match b.first() {
                None => a.clone(),
                Some((_, s)) => svec_axpy(a, &Scalar::int(s.field(), -1), b),
            })
            .collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|r| svec_scale(r, c)).collect() }
    }

    pub fn trace(&self, f: &Field) -> Scalar {
        let mut t = Scalar::zero(f);
        for (r, row) in self.data.iter().enumerate() {
            if let Some(v) = svec_get(row, r) {
                t = t.add(v);
            }
        }
        t
    }

    /// tr(self * o) without forming the product.
    pub fn trace_of_product(&self, o: &Mat, f: &Field) -> Scalar {
        assert_eq!((self.cols, self.rows), (o.rows, o.cols), "matrix shape mismatch");
        let ot = o.transpose();
        let mut t = Scalar::zero(f);
        for (r, row) in self.data.iter().enumerate() {
            t = t.add(&svec_dot(row, &ot.data[r], f));
        }
        t
    }

    pub fn kron(&self, o: &Mat) -> Mat {
        let mut data = Vec::with_capacity(self.rows * o.rows);
        for ra in &self.data {
            for rb in &o.data {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ca, va) in ra {
                    for (cb, vb) in rb {
                        row.push((ca * o.cols + cb, va.mul(vb)));
                    }
                }
                data.push(row);
            }
        }
        Mat { rows: self.rows * o.rows, cols: self.cols * o.cols, data }
    }

    /// Restriction to the given rows and columns (both in increasing order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Mat {
        let mut pos = vec![usize::MAX; self.cols];
        for (k, &c) in cols.iter().enumerate() {
            pos[c] = k;
        }
        let data = rows
            .iter()
            .map(|&r| {
                self.data[r].iter().filter(|(c, _)| pos[*c] != usize::MAX).map(|(c, v)| (pos[*c], v.clone())).collect()
            })
            .collect();
        Mat { rows: rows.len(), cols: cols.len(), data }
    }

    /// Entries flattened row-major, as a sparse vector of length rows*cols.
    pub fn flatten(&self) -> SVec {
        let mut out = Vec::with_capacity(self.nnz());
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                out.push((r * self.cols + c, v.clone()));
            }
        }
        out
    }

    pub fn unflatten(rows: usize, cols: usize, v: &SVec) -> Mat {
        let mut data = vec![Vec::new(); rows];
        for (i, x) in v {
            data[i / cols].push((i % cols, x.clone()));
        }
        Mat { rows, cols, data }
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for row in &self.data {
            e.insert(row.clone());
        }
        e.rank()
    }

    pub fn inverse(&self, f: &Field) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut e = Echelon::new(2 * n);
        for (r, row) in self.data.iter().enumerate() {
            let mut v = row.clone();
            v.push((n + r, Scalar::one(f)));
            e.insert(v);
        }
        if e.rank() != n || (0..n).any(|c| e.pivot_row(c).is_none()) {
            return None;
        }
        let data = (0..n)
            .map(|c| {
                let row = &e.rows[e.pivot_row(c).unwrap()];
                row.iter().filter(|(k, _)| *k >= n).map(|(k, v)| (k - n, v.clone())).collect()
            })
            .collect();
        Some(Mat { rows: n, cols: n, data })
    }
}

/// Reduced row echelon form, grown one row at a time.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub ncols: usize,
    pub rows: Vec<SVec>,
    pivot_of_col: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl Echelon {
    pub fn new(ncols: usize) -> Echelon {
        Echelon { ncols, rows: Vec::new(), pivot_of_col: vec![NONE; ncols] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_row(&self, c: usize) -> Option<usize> {
        let r = self.pivot_of_col[c];
        if r == NONE {
            None
        } else {
            Some(r)
        }
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    /// Remainder of `v` modulo the row space (fully reduced on pivot columns).
    pub fn reduce(&self, v: &SVec) -> SVec {
        let hits: Vec<(usize, Scalar)> = v
            .iter()
            .filter(|(c, _)| self.pivot_of_col[*c] != NONE)
            .map(|(c, x)| (self.pivot_of_col[*c], x.neg()))
            .collect();
        if hits.is_empty() {
            return v.clone();
        }
        if hits.len() == 1 {
            return svec_axpy(v, &hits[0].1, &self.rows[hits[0].0]);
        }
        let mut acc = Accum::new(self.ncols);
        let one = Scalar::one(v[0].1.field());
        acc.axpy(&one, v);
        for (r, c) in &hits {
            acc.axpy(c, &self.rows[*r]);
        }
        acc.take()
    }

    /// Inserts `v`; returns true if the rank grew.
    pub fn insert(&mut self, v: SVec) -> bool {
        let w = self.reduce(&v);
        if w.is_empty() {
            return false;
        }
        let p = w[0].0;
        let inv = w[0].1.inv().unwrap();
        let w = svec_scale(&w, &inv);
        for r in self.rows.iter_mut() {
            if let Some(c) = svec_get(r, p) {
                let c = c.neg();
                *r = svec_axpy(r, &c, &w);
            }
        }
        self.pivot_of_col[p] = self.rows.len();
        self.rows.push(w);
        true
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Basis of the solution space of `row . x = 0` for all stored rows,
    /// one vector per free column in increasing order.
    pub fn nullspace(&self, f: &Field) -> Vec<SVec> {
        let mut out = Vec::new();
        // column -> entries (pivot col, value) of rows having that column
        let mut by_col: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.ncols];
        for row in &self.rows {
            let p = row[0].0;
            for (c, v) in &row[1..] {
                by_col[*c].push((p, v.neg()));
            }
        }
        for c in 0..self.ncols {
            if self.pivot_of_col[c] != NONE {
                continue;
            }
            let mut v = by_col[c].clone();
            v.push((c, Scalar::one(f)));
            v.sort_by_key(|e| e.0);
            out.push(v);
        }
        out
    }

    /// Coordinates of `v` (assumed in the row space) with respect to the rows.
    pub fn coords(&self, v: &SVec) -> Option<Vec<(usize, Scalar)>> {
        if !self.contains(v) {
            return None;
        }
        let mut out: Vec<(usize, Scalar)> = v
            .iter()
            .filter(|(c, _)| self.pivot_of_col[*c] != NONE)
            .map(|(c, x)| (self.pivot_of_col[*c], x.clone()))
            .collect();
        out.sort_by_key(|e| e.0);
        Some(out)
    }
}

/// Nullspace of a matrix (solutions of `m x = 0`).
pub fn nullspace(m: &Mat, f: &Field) -> Vec<SVec> {
    let mut e = Echelon::new(m.cols);
    for row in &m.data {
        e.insert(row.clone());
    }
    e.nullspace(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::make_field;

    #[test]
    fn inverse_and_nullspace() {
        let f = make_field(1).unwrap();
        let s = |n| Scalar::int(&f, n);
        let a = Mat::from_dense(&f, &[vec![s(2), s(1)], vec![s(1), s(1)]]);
        let ai = a.inverse(&f).unwrap();
        assert_eq!(a.mul(&ai), Mat::identity(2, &f));
        let b = Mat::from_dense(&f, &[vec![s(1), s(2), s(3)], vec![s(2), s(4), s(6)]]);
        let ns = nullspace(&b, &f);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(b.apply(v).is_empty());
        }
        assert_eq!(b.rank(), 1);
    }

    #[test]
    fn kron_trace() {
        let f = make_field(1).unwrap();
        let a = Mat::identity(2, &f).scale(&Scalar::int(&f, 3));
        let b = Mat::identity(3, &f);
        assert_eq!(a.kron(&b).trace(&f), Scalar::int(&f, 18));
        assert_eq!(a.trace_of_product(&a, &f), Scalar::int(&f, 18));
    }
}
