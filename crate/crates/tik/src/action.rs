//! Group actions on d-way arrays: the general product action and the five
//! natural actions on 3-way arrays.
//!
//! The general action of (g_1, ..., g_d) sends A to B with
//! `B[i_1..i_d] = sum_j A[j_1..j_d] (g_1)[i_1,j_1] ... (g_d)[i_d,j_d]`,
//! computed as a sequence of mode-k products. The five 3-way actions
//! expand to the general action by duplicating and inverse-transposing
//! elements:
//!
//! - `UVW`:      (P, Q, R)           independent changes of basis
//! - `UUV`:      (P, P, Q)           bilinear maps / pseudo-isometry
//! - `UUstarV`:  (P, P^{-t}, Q)      matrix-space conjugacy
//! - `UUUstar`:  (P, P, P^{-t})      algebras
//! - `UUU`:      (P, P, P)           trilinear / noncommutative cubic forms

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::array::DWayArray;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg;
use crate::matrix::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ActionKind {
    UVW,
    UUV,
    UUstarV,
    UUUstar,
    UUU,
    GeneralD(usize),
}

impl ActionKind {
    /// Number of group elements a witness for this action carries.
    pub fn element_count(&self) -> usize {
        match self {
            ActionKind::UVW => 3,
            ActionKind::UUV | ActionKind::UUstarV => 2,
            ActionKind::UUUstar | ActionKind::UUU => 1,
            ActionKind::GeneralD(d) => *d,
        }
    }

    /// Check an array's dims fit this action; returns the degree of each
    /// witness element.
    pub fn element_degrees(&self, dims: &[usize]) -> Result<Vec<usize>> {
        let bad = |msg: &str| Err(Error::Input(format!("{msg} (dims {dims:?}, kind {self:?})")));
        match self {
            ActionKind::UVW => {
                if dims.len() != 3 {
                    return bad("UVW needs a 3-way array");
                }
                Ok(dims.to_vec())
            }
            ActionKind::UUV | ActionKind::UUstarV => {
                if dims.len() != 3 || dims[0] != dims[1] {
                    return bad("doubled action needs dims (l, l, m)");
                }
                Ok(vec![dims[0], dims[2]])
            }
            ActionKind::UUUstar | ActionKind::UUU => {
                if dims.len() != 3 || dims[0] != dims[1] || dims[1] != dims[2] {
                    return bad("cubic action needs dims (l, l, l)");
                }
                Ok(vec![dims[0]])
            }
            ActionKind::GeneralD(d) => {
                if dims.len() != *d {
                    return bad("array order does not match GeneralD arity");
                }
                Ok(dims.to_vec())
            }
        }
    }
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionKind::UVW => write!(f, "UVW"),
            ActionKind::UUV => write!(f, "UUV"),
            ActionKind::UUstarV => write!(f, "UUstarV"),
            ActionKind::UUUstar => write!(f, "UUUstar"),
            ActionKind::UUU => write!(f, "UUU"),
            ActionKind::GeneralD(d) => write!(f, "GeneralD({d})"),
        }
    }
}

impl std::str::FromStr for ActionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "UVW" | "uvw" => Ok(ActionKind::UVW),
            "UUV" | "uuv" => Ok(ActionKind::UUV),
            "UUstarV" | "uustarv" => Ok(ActionKind::UUstarV),
            "UUUstar" | "uuustar" => Ok(ActionKind::UUUstar),
            "UUU" | "uuu" => Ok(ActionKind::UUU),
            other => {
                if let Some(d) = other
                    .strip_prefix("GeneralD(")
                    .and_then(|t| t.strip_suffix(')'))
                    .and_then(|t| t.parse().ok())
                {
                    Ok(ActionKind::GeneralD(d))
                } else {
                    Err(Error::Input(format!("unknown action kind {other:?}")))
                }
            }
        }
    }
}

/// Mode-k product: transform direction `k` of `a` by `g`
/// (new index i receives sum_j g[i,j] * old index j).
fn mode_product(a: &DWayArray, k: usize, g: &Matrix) -> Result<DWayArray> {
    let f = a.field;
    let n = a.dims[k];
    if g.rows != n || g.cols != n {
        return Err(Error::Input(format!(
            "element degree {}x{} does not match direction {k} of dims {:?}",
            g.rows, g.cols, a.dims
        )));
    }
    let mut out = DWayArray::zeros(f, &a.dims);
    // Iterate over all indices of the source; scatter into each target row.
    for idx in a.indices() {
        let v = a.get(&idx);
        if f.is_zero(v) {
            continue;
        }
        let j = idx[k];
        let mut t = idx.clone();
        for i in 0..n {
            let c = g.get(i, j);
            if f.is_zero(c) {
                continue;
            }
            t[k] = i;
            let cur = out.get(&t);
            out.set(&t, f.add(cur, &f.mul(c, v)));
        }
    }
    Ok(out)
}

/// Apply the general product action of Definition-style tuples.
pub fn apply_general_action(g: &[Matrix], a: &DWayArray) -> Result<DWayArray> {
    if g.len() != a.order() {
        return Err(Error::Input(format!(
            "need {} group elements, got {}",
            a.order(),
            g.len()
        )));
    }
    for (k, m) in g.iter().enumerate() {
        if m.field != a.field {
            return Err(Error::Input("field mismatch between element and array".into()));
        }
        if !m.is_square() || m.rows != a.dims[k] {
            return Err(Error::Input(format!(
                "element {k} has shape {}x{}, expected degree {}",
                m.rows, m.cols, a.dims[k]
            )));
        }
        if !linalg::is_invertible(m)? {
            return Err(Error::Input(format!("element {k} is singular")));
        }
    }
    let mut cur = a.clone();
    for (k, m) in g.iter().enumerate() {
        cur = mode_product(&cur, k, m)?;
    }
    Ok(cur)
}

/// Inverse transpose, using the conjugate (resp. plain) transpose shortcut
/// when the element is unitary (resp. real/exact orthogonal) w.r.t. the
/// identity form, and an explicit inverse otherwise.
pub fn inv_transpose(m: &Matrix) -> Result<Matrix> {
    let id = Matrix::identity(m.field, m.rows);
    match m.field {
        FieldSpec::C { .. } => {
            if m.conj_transpose().mul(m)?.approx_eq(&id) {
                // P^{-t} = conj(P) for unitary P
                return Ok(m.conj_transpose().transpose());
            }
        }
        _ => {
            if m.transpose().mul(m)?.approx_eq(&id) {
                // P^{-t} = P for orthogonal P
                return Ok(m.clone());
            }
        }
    }
    linalg::inverse_transpose(m)
}

/// Expand a five-action witness tuple into the general-action element list.
pub fn expand_elements(kind: ActionKind, g: &[Matrix]) -> Result<Vec<Matrix>> {
    if g.len() != kind.element_count() {
        return Err(Error::Input(format!(
            "action {kind} expects {} elements, got {}",
            kind.element_count(),
            g.len()
        )));
    }
    Ok(match kind {
        ActionKind::UVW | ActionKind::GeneralD(_) => g.to_vec(),
        ActionKind::UUV => vec![g[0].clone(), g[0].clone(), g[1].clone()],
        ActionKind::UUstarV => vec![g[0].clone(), inv_transpose(&g[0])?, g[1].clone()],
        ActionKind::UUUstar => vec![g[0].clone(), g[0].clone(), inv_transpose(&g[0])?],
        ActionKind::UUU => vec![g[0].clone(), g[0].clone(), g[0].clone()],
    })
}

/// Apply one of the five actions (or the general one) to a 3-way array.
pub fn apply_five_action(kind: ActionKind, g: &[Matrix], a: &DWayArray) -> Result<DWayArray> {
    let degrees = kind.element_degrees(&a.dims)?;
    for (m, &deg) in g.iter().zip(degrees.iter()) {
        if m.rows != deg || m.cols != deg {
            return Err(Error::Input(format!(
                "element shape {}x{} does not match expected degree {deg}",
                m.rows, m.cols
            )));
        }
    }
    let expanded = expand_elements(kind, g)?;
    apply_general_action(&expanded, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Scalar;

    fn seq_array(f: FieldSpec, dims: &[usize]) -> DWayArray {
        let mut a = DWayArray::zeros(f, dims);
        let mut v = 1i64;
        for idx in a.clone().indices() {
            a.set(&idx, f.from_i64(v));
            v += 1;
        }
        a
    }

    #[test]
    fn identity_action_fixes_array() {
        let f = FieldSpec::fp(5).unwrap();
        let a = seq_array(f, &[2, 2, 2]);
        let i = Matrix::identity(f, 2);
        let b = apply_general_action(&[i.clone(), i.clone(), i], &a).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn two_way_action_is_p_a_q_transpose() {
        // d = 2, g = (P, Q): the action sends A to P A Q^t.
        let f = FieldSpec::fp(5).unwrap();
        for seed in 0..20u64 {
            let a = crate::gen::random_matrix(f, 3, 3, seed);
            let p = crate::gen::random_invertible(f, 3, seed + 100);
            let q = crate::gen::random_invertible(f, 3, seed + 200);
            let arr = DWayArray::from_data(f, &[3, 3], a.data().to_vec()).unwrap();
            let acted = apply_general_action(&[p.clone(), q.clone()], &arr).unwrap();
            let direct = p.mul(&a).unwrap().mul(&q.transpose()).unwrap();
            let direct_arr = DWayArray::from_data(f, &[3, 3], direct.data().to_vec()).unwrap();
            assert_eq!(acted, direct_arr);
        }
    }

    #[test]
    fn basis_swap_moves_single_entry() {
        // over F_2, single 1 at (0,0,0); swap in each factor moves it to (1,1,1)
        let f = FieldSpec::fp(2).unwrap();
        let mut a = DWayArray::zeros(f, &[2, 2, 2]);
        a.set(&[0, 0, 0], f.one());
        let swap = Matrix::permutation(f, &[1, 0]);
        let b = apply_general_action(&[swap.clone(), swap.clone(), swap], &a).unwrap();
        let mut expect = DWayArray::zeros(f, &[2, 2, 2]);
        expect.set(&[1, 1, 1], f.one());
        assert_eq!(b, expect);
    }

    #[test]
    fn singular_element_rejected() {
        let f = FieldSpec::fp(2).unwrap();
        let a = DWayArray::zeros(f, &[2, 2, 2]);
        let z = Matrix::zeros(f, 2, 2);
        let i = Matrix::identity(f, 2);
        assert!(apply_general_action(&[z, i.clone(), i], &a).is_err());
    }

    #[test]
    fn uustarv_conjugates_frontal_slices() {
        // P = diag(2,1) over F_3, Q = I: frontal slices become P A_k P^{-1}.
        let f = FieldSpec::fp(3).unwrap();
        let mut a = DWayArray::zeros(f, &[2, 2, 2]);
        a.set(&[0, 0, 0], f.one()); // slice 0 = E_{0,0}
        a.set(&[0, 1, 1], f.one()); // slice 1 = E_{0,1}
        let p = Matrix::from_i64_rows(f, &[&[2, 0], &[0, 1]]);
        let q = Matrix::identity(f, 2);
        let b = apply_five_action(ActionKind::UUstarV, &[p.clone(), q], &a).unwrap();
        let pinv = linalg::inverse(&p).unwrap();
        for k in 0..2 {
            let direct = p.mul(&a.slice(2, k).unwrap()).unwrap().mul(&pinv).unwrap();
            assert_eq!(b.slice(2, k).unwrap(), direct);
        }
    }

    #[test]
    fn uuv_permutation_chases_indices() {
        // brute-force index chase on a 2x2x2 instance of elementary slices
        let f = FieldSpec::fp(5).unwrap();
        let mut a = DWayArray::zeros(f, &[2, 2, 2]);
        a.set(&[0, 1, 0], f.one()); // slice 0 = E_{0,1}
        a.set(&[1, 0, 1], f.one()); // slice 1 = E_{1,0}
        let p = Matrix::permutation(f, &[1, 0]);
        let q = Matrix::permutation(f, &[1, 0]);
        let b = apply_five_action(ActionKind::UUV, &[p, q], &a).unwrap();
        // brute force: entry (i,j,k) of b = a[p^{-1}i, p^{-1}j, q^{-1}k]
        let mut expect = DWayArray::zeros(f, &[2, 2, 2]);
        expect.set(&[1, 0, 1], f.one());
        expect.set(&[0, 1, 0], f.one());
        assert_eq!(b, expect);
    }

    #[test]
    fn uuu_identity_trivial() {
        let f = FieldSpec::fp(3).unwrap();
        let a = seq_array(f, &[2, 2, 2]);
        let b = apply_five_action(ActionKind::UUU, &[Matrix::identity(f, 2)], &a).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn shape_mismatch_rejected() {
        let f = FieldSpec::fp(3).unwrap();
        let a = seq_array(f, &[2, 3, 2]);
        assert!(apply_five_action(ActionKind::UUV, &[Matrix::identity(f, 2), Matrix::identity(f, 2)], &a).is_err());
    }
}
