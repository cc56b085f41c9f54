//! Linear algebra over the runtime fields: exact Gaussian elimination for
//! F_p and Q, SVD-backed tolerance decisions for R and C (via nalgebra).

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

/// Reduced row echelon form with recorded row transform:
/// returns (rref, transform U with U*M = rref, rank, pivot columns).
/// Exact fields only.
pub fn rref(m: &Matrix) -> Result<(Matrix, Matrix, usize, Vec<usize>)> {
    if !m.field.is_exact() {
        return Err(Error::Input("rref requires an exact field".into()));
    }
    let f = m.field;
    let mut a = m.clone();
    let mut u = Matrix::identity(f, m.rows);
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        // find pivot
        let Some(pr) = (row..a.rows).find(|&r| !f.is_zero(a.get(r, col))) else {
            continue;
        };
        if pr != row {
            for j in 0..a.cols {
                let (x, y) = (a.get(row, j).clone(), a.get(pr, j).clone());
                a.set(row, j, y);
                a.set(pr, j, x);
            }
            for j in 0..u.cols {
                let (x, y) = (u.get(row, j).clone(), u.get(pr, j).clone());
                u.set(row, j, y);
                u.set(pr, j, x);
            }
        }
        let inv = f.inv(a.get(row, col))?;
        for j in 0..a.cols {
            a.set(row, j, f.mul(&inv, a.get(row, j)));
        }
        for j in 0..u.cols {
            u.set(row, j, f.mul(&inv, u.get(row, j)));
        }
        for r in 0..a.rows {
            if r == row || f.is_zero(a.get(r, col)) {
                continue;
            }
            let c = a.get(r, col).clone();
            for j in 0..a.cols {
                let v = f.sub(a.get(r, j), &f.mul(&c, a.get(row, j)));
                a.set(r, j, v);
            }
            for j in 0..u.cols {
                let v = f.sub(u.get(r, j), &f.mul(&c, u.get(row, j)));
                u.set(r, j, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    Ok((a, u, row, pivots))
}

/// Rank: exact elimination over exact fields, singular values thresholded
/// at `tol * sigma_max` over floats.
pub fn rank(m: &Matrix) -> Result<usize> {
    if m.field.is_exact() {
        Ok(rref(m)?.2)
    } else {
        let sv = singular_values(m)?;
        let smax = sv.first().copied().unwrap_or(0.0);
        let thresh = m.field.tol() * smax.max(1.0);
        Ok(sv.iter().filter(|&&s| s > thresh).count())
    }
}

pub fn is_invertible(m: &Matrix) -> Result<bool> {
    if !m.is_square() {
        return Ok(false);
    }
    Ok(rank(m)? == m.rows)
}

/// Inverse: Gauss-Jordan over exact fields, LU over floats.
pub fn inverse(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::Input("inverse of a non-square matrix".into()));
    }
    if m.field.is_exact() {
        let (r, u, rk, _) = rref(m)?;
        if rk < m.rows {
            return Err(Error::Input("singular matrix".into()));
        }
        debug_assert!(r.approx_eq(&Matrix::identity(m.field, m.rows)));
        Ok(u)
    } else {
        match m.field {
            FieldSpec::R { .. } => {
                let na = to_na_real(m);
                let inv = na
                    .try_inverse()
                    .ok_or_else(|| Error::Input("singular matrix".into()))?;
                Ok(from_na_real(m.field, &inv))
            }
            FieldSpec::C { .. } => {
                let na = to_na_complex(m);
                let inv = na
                    .try_inverse()
                    .ok_or_else(|| Error::Input("singular matrix".into()))?;
                Ok(from_na_complex(m.field, &inv))
            }
            _ => unreachable!(),
        }
    }
}

/// Inverse transpose.
pub fn inverse_transpose(m: &Matrix) -> Result<Matrix> {
    Ok(inverse(m)?.transpose())
}

/// Singular values in descending order (float fields only).
pub fn singular_values(m: &Matrix) -> Result<Vec<f64>> {
    match m.field {
        FieldSpec::R { .. } => {
            let na = to_na_real(m);
            let mut sv: Vec<f64> = na.svd(false, false).singular_values.iter().copied().collect();
            sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
            Ok(sv)
        }
        FieldSpec::C { .. } => {
            let na = to_na_complex(m);
            let mut sv: Vec<f64> = na.svd(false, false).singular_values.iter().copied().collect();
            sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
            Ok(sv)
        }
        _ => Err(Error::Input("singular values require a float field".into())),
    }
}

/// Full SVD returning (U, singular values desc, V^*) as tik matrices.
pub fn svd(m: &Matrix) -> Result<(Matrix, Vec<f64>, Matrix)> {
    match m.field {
        FieldSpec::R { .. } => {
            let na = to_na_real(m);
            let svd = na.svd(true, true);
            let u = from_na_real(m.field, &svd.u.unwrap());
            let vt = from_na_real(m.field, &svd.v_t.unwrap());
            Ok((u, svd.singular_values.iter().copied().collect(), vt))
        }
        FieldSpec::C { .. } => {
            let na = to_na_complex(m);
            let svd = na.svd(true, true);
            let u = from_na_complex(m.field, &svd.u.unwrap());
            let vt = from_na_complex(m.field, &svd.v_t.unwrap());
            Ok((u, svd.singular_values.iter().copied().collect(), vt))
        }
        _ => Err(Error::Input("svd requires a float field".into())),
    }
}

/// |det| over float fields.
pub fn abs_determinant(m: &Matrix) -> Result<f64> {
    if !m.is_square() {
        return Err(Error::Input("determinant of a non-square matrix".into()));
    }
    match m.field {
        FieldSpec::R { .. } => Ok(to_na_real(m).determinant().abs()),
        FieldSpec::C { .. } => Ok(to_na_complex(m).determinant().norm()),
        _ => Err(Error::Input("abs_determinant requires a float field".into())),
    }
}

/// Given slice tuples T_1..T_n and B_1..B_n (same shapes, exact field),
/// find an invertible R with B_k = sum_j R[k][j] T_j, if one exists.
///
/// R exists iff the row spaces of the vectorized tuples coincide; the
/// construction goes through the shared reduced echelon form.
pub fn slice_mix_witness(ts: &[Matrix], bs: &[Matrix]) -> Result<Option<Matrix>> {
    if ts.is_empty() || ts.len() != bs.len() {
        return Err(Error::Input("slice tuple length mismatch".into()));
    }
    let f = ts[0].field;
    if !f.is_exact() {
        return Err(Error::Input("slice_mix_witness requires an exact field".into()));
    }
    let n = ts.len();
    let d = ts[0].rows * ts[0].cols;
    let stack = |ms: &[Matrix]| -> Matrix {
        Matrix::from_fn(f, n, d, |k, c| ms[k].get(c / ms[k].cols, c % ms[k].cols).clone())
    };
    let t = stack(ts);
    let b = stack(bs);
    let (rt, ut, rkt, _) = rref(&t)?;
    let (rb, ub, rkb, _) = rref(&b)?;
    if rkt != rkb || rt != rb {
        return Ok(None);
    }
    // ut * T = rref = ub * B, so R = ub^{-1} * ut satisfies R*T = B.
    let r = inverse(&ub)?.mul(&ut)?;
    Ok(Some(r))
}

/// Span dimension of a tuple of equally-shaped matrices (exact field).
pub fn span_dim(ms: &[Matrix]) -> Result<usize> {
    if ms.is_empty() {
        return Ok(0);
    }
    let f = ms[0].field;
    let d = ms[0].rows * ms[0].cols;
    let stack = Matrix::from_fn(f, ms.len(), d, |k, c| {
        ms[k].get(c / ms[k].cols, c % ms[k].cols).clone()
    });
    rank(&stack)
}

pub fn to_na_real(m: &Matrix) -> DMatrix<f64> {
    DMatrix::from_fn(m.rows, m.cols, |i, j| match m.get(i, j) {
        Scalar::R(v) => *v,
        _ => panic!("expected real scalar"),
    })
}

pub fn from_na_real(field: FieldSpec, na: &DMatrix<f64>) -> Matrix {
    Matrix::from_fn(field, na.nrows(), na.ncols(), |i, j| Scalar::R(na[(i, j)]))
}

pub fn to_na_complex(m: &Matrix) -> DMatrix<Complex64> {
    DMatrix::from_fn(m.rows, m.cols, |i, j| match m.get(i, j) {
        Scalar::C(v) => *v,
        Scalar::R(v) => Complex64::new(*v, 0.0),
        _ => panic!("expected complex scalar"),
    })
}

pub fn from_na_complex(field: FieldSpec, na: &DMatrix<Complex64>) -> Matrix {
    Matrix::from_fn(field, na.nrows(), na.ncols(), |i, j| Scalar::C(na[(i, j)]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_inverse_round_trip() {
        let f = FieldSpec::fp(7).unwrap();
        let m = Matrix::from_i64_rows(f, &[&[1, 2, 0], &[0, 1, 3], &[2, 0, 1]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(f, 3));
        assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(f, 3));
    }

    #[test]
    fn rank_of_rank_one() {
        let f = FieldSpec::Q;
        let m = Matrix::from_i64_rows(f, &[&[1, 2], &[2, 4]]);
        assert_eq!(rank(&m).unwrap(), 1);
    }

    #[test]
    fn float_rank_thresholds_noise() {
        let f = FieldSpec::R { tol: 1e-9 };
        let mut m = Matrix::from_i64_rows(f, &[&[1, 0], &[0, 0]]);
        m.set(1, 1, Scalar::R(1e-13));
        assert_eq!(rank(&m).unwrap(), 1);
    }

    #[test]
    fn slice_mix_finds_invertible_r() {
        let f = FieldSpec::fp(5).unwrap();
        let t1 = Matrix::from_i64_rows(f, &[&[1, 0], &[0, 0]]);
        let t2 = Matrix::from_i64_rows(f, &[&[0, 1], &[0, 0]]);
        // B_1 = 2*T_1 + T_2, B_2 = T_1
        let b1 = t1.scale(&f.from_i64(2)).add(&t2).unwrap();
        let b2 = t1.clone();
        let r = slice_mix_witness(&[t1.clone(), t2.clone()], &[b1.clone(), b2.clone()])
            .unwrap()
            .expect("witness exists");
        let mix = |k: usize| -> Matrix {
            let mut acc = Matrix::zeros(f, 2, 2);
            for (j, t) in [&t1, &t2].iter().enumerate() {
                acc = acc.add(&t.scale(r.get(k, j))).unwrap();
            }
            acc
        };
        assert_eq!(mix(0), b1);
        assert_eq!(mix(1), b2);
        assert!(is_invertible(&r).unwrap());
    }

    #[test]
    fn slice_mix_rejects_span_mismatch() {
        let f = FieldSpec::fp(5).unwrap();
        let t1 = Matrix::from_i64_rows(f, &[&[1, 0], &[0, 0]]);
        let t2 = Matrix::from_i64_rows(f, &[&[0, 1], &[0, 0]]);
        let b1 = Matrix::from_i64_rows(f, &[&[0, 0], &[1, 0]]);
        assert!(slice_mix_witness(&[t1.clone(), t2], &[b1, t1]).unwrap().is_none());
    }

    #[test]
    fn complex_svd_values() {
        let f = FieldSpec::complex();
        let m = Matrix::from_fn(f, 2, 2, |i, j| {
            Scalar::C(Complex64::new((i + j) as f64, if i == j { 1.0 } else { 0.0 }))
        });
        let sv = singular_values(&m).unwrap();
        assert_eq!(sv.len(), 2);
        assert!(sv[0] >= sv[1]);
    }
}
