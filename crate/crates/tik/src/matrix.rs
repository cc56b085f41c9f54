//! Dense matrices over a runtime [`FieldSpec`], row-major.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Elementary matrix E_{i,j} of size rows x cols.
    pub fn elementary(field: FieldSpec, rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zeros(field, rows, cols);
        m.set(i, j, field.one());
        m
    }

    /// Permutation matrix P with P[perm[j], j] = 1, so that P e_j = e_perm[j].
    pub fn permutation(field: FieldSpec, perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Matrix::zeros(field, n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.set(i, j, field.one());
        }
        m
    }

    pub fn from_i64_rows(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        Matrix::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn check_same_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::Input("matrix field mismatch".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Input("matrix shape mismatch in add".into()));
        }
        Ok(Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.add(self.get(i, j), other.get(i, j))
        }))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.mul(c, self.get(i, j))
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::Input(format!(
                "matrix shape mismatch in mul: {}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), &f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Conjugate transpose; plain transpose over non-complex fields.
    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.field.conj(self.get(j, i))
        })
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|s| self.field.abs(s)).fold(0.0, f64::max)
    }

    /// Entrywise equality, exact over exact fields, within
    /// `tol * max(1, maxabs)` over floats.
    pub fn approx_eq(&self, other: &Matrix) -> bool {
        if self.field != other.field || self.rows != other.rows || self.cols != other.cols {
            return false;
        }
        let scale = self.max_abs().max(other.max_abs());
        self.data
            .iter()
            .zip(other.data.iter())
            .all(|(a, b)| self.field.approx_eq_scaled(a, b, scale))
    }

    pub fn is_zero(&self) -> bool {
        self.approx_eq(&Matrix::zeros(self.field, self.rows, self.cols))
    }

    /// Copy `block` into `self` at offset (r0, c0).
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(self.field, rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Block-diagonal assembly.
    pub fn block_diag(field: FieldSpec, blocks: &[&Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.paste(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    /// Kronecker product, row-major index (a-major): (A⊗B)[(i,k),(j,l)] = A[i,j] B[k,l].
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let f = self.field;
        Matrix::from_fn(
            f,
            self.rows * other.rows,
            self.cols * other.cols,
            |i, j| {
                let (ia, ib) = (i / other.rows, i % other.rows);
                let (ja, jb) = (j / other.cols, j % other.cols);
                f.mul(self.get(ia, ja), other.get(ib, jb))
            },
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_identity() {
        let f = FieldSpec::fp(5).unwrap();
        let m = Matrix::from_i64_rows(f, &[&[1, 2], &[3, 4]]);
        let i = Matrix::identity(f, 2);
        assert_eq!(m.mul(&i).unwrap(), m);
        assert_eq!(i.mul(&m).unwrap(), m);
    }

    #[test]
    fn permutation_moves_basis_vectors() {
        let f = FieldSpec::fp(2).unwrap();
        let p = Matrix::permutation(f, &[1, 0]);
        // P e_0 = e_1
        assert_eq!(*p.get(1, 0), Scalar::Fp(1));
        assert_eq!(*p.get(0, 0), Scalar::Fp(0));
    }

    #[test]
    fn kron_shape_and_entries() {
        let f = FieldSpec::fp(7).unwrap();
        let a = Matrix::from_i64_rows(f, &[&[2, 0], &[0, 3]]);
        let b = Matrix::identity(f, 3);
        let k = a.kron(&b);
        assert_eq!((k.rows, k.cols), (6, 6));
        assert_eq!(*k.get(0, 0), Scalar::Fp(2));
        assert_eq!(*k.get(5, 5), Scalar::Fp(3));
        assert_eq!(*k.get(0, 3), Scalar::Fp(0));
    }
}
