//! Dense d-way arrays over a runtime field — the universal instance carrier.
//!
//! Indexing is 0-based row-major throughout; the 1-based indices of the
//! usual mathematical notation are translated at the I/O boundary only.
//! Slices of a 3-way array follow the frontal convention
//! `A_k(i, j) = A(i, j, k)`; horizontal slices fix the first index and
//! lateral slices the second.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

#[derive(Clone, PartialEq, Debug)]
pub struct DWayArray {
    pub field: FieldSpec,
    pub dims: Vec<usize>,
    data: Vec<Scalar>,
}

impl DWayArray {
    pub fn zeros(field: FieldSpec, dims: &[usize]) -> Self {
        assert!(dims.iter().all(|&d| d > 0), "dims must be positive");
        let n: usize = dims.iter().product();
        DWayArray {
            field,
            dims: dims.to_vec(),
            data: vec![field.zero(); n],
        }
    }

    pub fn from_data(field: FieldSpec, dims: &[usize], data: Vec<Scalar>) -> Result<Self> {
        let n: usize = dims.iter().product();
        if data.len() != n {
            return Err(Error::Input(format!(
                "entry count {} != product of dims {:?}",
                data.len(),
                dims
            )));
        }
        for s in &data {
            field.validate(s)?;
        }
        Ok(DWayArray {
            field,
            dims: dims.to_vec(),
            data,
        })
    }

    pub fn order(&self) -> usize {
        self.dims.len()
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    #[inline]
    pub fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.dims.len());
        let mut off = 0;
        for (k, &i) in idx.iter().enumerate() {
            debug_assert!(i < self.dims[k]);
            off = off * self.dims[k] + i;
        }
        off
    }

    #[inline]
    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.data[self.offset(idx)]
    }

    #[inline]
    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        let o = self.offset(idx);
        self.data[o] = v;
    }

    /// Iterate multi-indices in row-major (lexicographic) order.
    pub fn indices(&self) -> IndexIter {
        IndexIter {
            dims: self.dims.clone(),
            next: Some(vec![0; self.dims.len()]),
        }
    }

    pub fn check_3way(&self) -> Result<()> {
        if self.order() != 3 {
            return Err(Error::Input(format!(
                "expected a 3-way array, got order {}",
                self.order()
            )));
        }
        Ok(())
    }

    /// The k-th slice along `direction`: frontal for direction 2,
    /// horizontal for 0, lateral for 1. The remaining two indices keep
    /// their relative order as (row, col).
    pub fn slice(&self, direction: usize, k: usize) -> Result<Matrix> {
        self.check_3way()?;
        if direction > 2 || k >= self.dims[direction] {
            return Err(Error::Input(format!(
                "slice({direction}, {k}) out of range for dims {:?}",
                self.dims
            )));
        }
        let (l, m, n) = (self.dims[0], self.dims[1], self.dims[2]);
        Ok(match direction {
            0 => Matrix::from_fn(self.field, m, n, |j, t| self.get(&[k, j, t]).clone()),
            1 => Matrix::from_fn(self.field, l, n, |i, t| self.get(&[i, k, t]).clone()),
            _ => Matrix::from_fn(self.field, l, m, |i, j| self.get(&[i, j, k]).clone()),
        })
    }

    pub fn frontal_slices(&self) -> Result<Vec<Matrix>> {
        self.check_3way()?;
        (0..self.dims[2]).map(|k| self.slice(2, k)).collect()
    }

    /// Reassemble a 3-way array from frontal slices.
    pub fn from_frontal_slices(field: FieldSpec, slices: &[Matrix]) -> Result<Self> {
        if slices.is_empty() {
            return Err(Error::Input("no slices".into()));
        }
        let (l, m) = (slices[0].rows, slices[0].cols);
        for s in slices {
            if s.rows != l || s.cols != m || s.field != field {
                return Err(Error::Input("inconsistent slice shapes or field".into()));
            }
        }
        let mut a = DWayArray::zeros(field, &[l, m, slices.len()]);
        for (k, s) in slices.iter().enumerate() {
            for i in 0..l {
                for j in 0..m {
                    a.set(&[i, j, k], s.get(i, j).clone());
                }
            }
        }
        Ok(a)
    }

    /// Matrix flattening: `direction` becomes the row index, the remaining
    /// indices (in their original order) are merged lexicographically into
    /// the column index. For an n×n×n array and direction 0 this is
    /// B[i, j*n + k] = A[i, j, k].
    pub fn flatten(&self, direction: usize) -> Result<Matrix> {
        if direction >= self.order() {
            return Err(Error::Input("flatten direction out of range".into()));
        }
        let rows = self.dims[direction];
        let cols: usize = self
            .dims
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != direction)
            .map(|(_, &d)| d)
            .product();
        let mut out = Matrix::zeros(self.field, rows, cols);
        for idx in self.indices() {
            let r = idx[direction];
            let mut c = 0usize;
            for (k, &i) in idx.iter().enumerate() {
                if k != direction {
                    c = c * self.dims[k] + i;
                }
            }
            out.set(r, c, self.get(&idx).clone());
        }
        Ok(out)
    }

    /// Inverse of [`flatten`]: rebuild an array with the given dims from a
    /// flattening along `direction`.
    pub fn from_flattening(field: FieldSpec, dims: &[usize], direction: usize, m: &Matrix) -> Result<Self> {
        let mut a = DWayArray::zeros(field, dims);
        for idx in a.indices() {
            let r = idx[direction];
            let mut c = 0usize;
            for (k, &i) in idx.iter().enumerate() {
                if k != direction {
                    c = c * dims[k] + i;
                }
            }
            a.set(&idx, m.get(r, c).clone());
        }
        Ok(a)
    }

    /// Reindex directions: output B with B[i_{perm[0]}, ..., i_{perm[d-1]}]
    /// read as: B's axis t is A's axis perm[t], that is
    /// B[j_0, ..., j_{d-1}] = A[j_{inv[0]}, ..., j_{inv[d-1]}] where
    /// dims_B[t] = dims_A[perm[t]].
    pub fn permute_directions(&self, perm: &[usize]) -> Result<Self> {
        let d = self.order();
        let mut seen = vec![false; d];
        if perm.len() != d || perm.iter().any(|&p| p >= d || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Input(format!("invalid permutation {perm:?}")));
        }
        let new_dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut out = DWayArray::zeros(self.field, &new_dims);
        let mut src = vec![0usize; d];
        for idx in out.clone().indices() {
            for t in 0..d {
                src[perm[t]] = idx[t];
            }
            out.set(&idx, self.get(&src).clone());
        }
        Ok(out)
    }

    pub fn add(&self, other: &DWayArray) -> Result<DWayArray> {
        if self.field != other.field || self.dims != other.dims {
            return Err(Error::Input("array shape/field mismatch in add".into()));
        }
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        DWayArray::from_data(self.field, &self.dims, data)
    }

    pub fn scale(&self, c: &Scalar) -> DWayArray {
        let data = self.data.iter().map(|a| self.field.mul(c, a)).collect();
        DWayArray::from_data(self.field, &self.dims, data).expect("same shape")
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|s| self.field.abs(s)).fold(0.0, f64::max)
    }

    /// Entrywise equality: bit-exact over exact fields, within
    /// `tol * max(1, maxabs)` over floats.
    pub fn approx_eq(&self, other: &DWayArray) -> bool {
        if self.field != other.field || self.dims != other.dims {
            return false;
        }
        let scale = self.max_abs().max(other.max_abs());
        self.data
            .iter()
            .zip(other.data.iter())
            .all(|(a, b)| self.field.approx_eq_scaled(a, b, scale))
    }

    pub fn is_zero(&self) -> bool {
        let scale = self.max_abs();
        let z = self.field.zero();
        self.data
            .iter()
            .all(|a| self.field.approx_eq_scaled(a, &z, scale))
    }

    /// Nonzero entries as (multi-index, value), in lexicographic order.
    pub fn nonzero_entries(&self) -> Vec<(Vec<usize>, Scalar)> {
        self.indices()
            .filter_map(|idx| {
                let v = self.get(&idx);
                if self.field.is_zero(v) {
                    None
                } else {
                    Some((idx, v.clone()))
                }
            })
            .collect()
    }
}

pub struct IndexIter {
    dims: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl Iterator for IndexIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.clone()?;
        let mut nxt = cur.clone();
        let mut k = self.dims.len();
        loop {
            if k == 0 {
                self.next = None;
                break;
            }
            k -= 1;
            nxt[k] += 1;
            if nxt[k] < self.dims[k] {
                self.next = Some(nxt);
                break;
            }
            nxt[k] = 0;
        }
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_entry_frontal_slice() {
        let f = FieldSpec::fp(2).unwrap();
        let mut a = DWayArray::zeros(f, &[2, 2, 2]);
        a.set(&[0, 1, 0], f.one());
        let s0 = a.slice(2, 0).unwrap();
        assert_eq!(s0, Matrix::elementary(f, 2, 2, 0, 1));
        let s1 = a.slice(2, 1).unwrap();
        assert!(s1.is_zero());
    }

    #[test]
    fn zero_array_slices_are_zero() {
        let f = FieldSpec::real();
        let a = DWayArray::zeros(f, &[2, 2, 2]);
        for d in 0..3 {
            assert!(a.slice(d, 0).unwrap().is_zero());
        }
    }

    #[test]
    fn slice_reassemble_round_trip() {
        let f = FieldSpec::fp(5).unwrap();
        let mut a = DWayArray::zeros(f, &[2, 3, 4]);
        let mut v = 0i64;
        for idx in a.clone().indices() {
            a.set(&idx, f.from_i64(v));
            v += 1;
        }
        let slices = a.frontal_slices().unwrap();
        let b = DWayArray::from_frontal_slices(f, &slices).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn flatten_index_formula() {
        // n=2 array with a_{0,1,0}=1 only -> single 1 in row 0, column 1*2+0=2.
        let f = FieldSpec::fp(3).unwrap();
        let mut a = DWayArray::zeros(f, &[2, 2, 2]);
        a.set(&[0, 1, 0], f.one());
        let b = a.flatten(0).unwrap();
        assert_eq!((b.rows, b.cols), (2, 4));
        for j in 0..4 {
            for i in 0..2 {
                let expect = if (i, j) == (0, 2) { f.one() } else { f.zero() };
                assert_eq!(*b.get(i, j), expect);
            }
        }
    }

    #[test]
    fn flatten_round_trip() {
        let f = FieldSpec::fp(7).unwrap();
        let mut a = DWayArray::zeros(f, &[2, 3, 2]);
        let mut v = 1i64;
        for idx in a.clone().indices() {
            a.set(&idx, f.from_i64(v));
            v += 2;
        }
        for d in 0..3 {
            let m = a.flatten(d).unwrap();
            let back = DWayArray::from_flattening(f, &a.dims, d, &m).unwrap();
            assert_eq!(a, back);
        }
    }

    #[test]
    fn permutation_shape_bookkeeping() {
        let f = FieldSpec::fp(5).unwrap();
        let a = DWayArray::zeros(f, &[2, 3, 4]);
        // B's axis t is A's axis perm[t]: perm (2,0,1) -> dims (4,2,3)
        let b = a.permute_directions(&[2, 0, 1]).unwrap();
        assert_eq!(b.dims, vec![4, 2, 3]);
    }

    #[test]
    fn permute_twice_transposition_is_identity() {
        let f = FieldSpec::fp(5).unwrap();
        let mut a = DWayArray::zeros(f, &[2, 2, 3]);
        let mut v = 0i64;
        for idx in a.clone().indices() {
            a.set(&idx, f.from_i64(v));
            v += 1;
        }
        let t = a.permute_directions(&[1, 0, 2]).unwrap();
        let back = t.permute_directions(&[1, 0, 2]).unwrap();
        assert_eq!(a, back);
        assert_eq!(a.permute_directions(&[0, 1, 2]).unwrap(), a);
    }
}
