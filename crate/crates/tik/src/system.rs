//! Tensor systems: finite families of arrays over shared supporting spaces
//! with covariant/contravariant leg assignments. An isomorphism acts
//! simultaneously on all members, through the leg assignment of each.

use serde::{Deserialize, Serialize};

use crate::action::apply_general_action;
use crate::array::DWayArray;
use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variance {
    Co,
    Contra,
}

#[derive(Clone, Debug)]
pub struct SystemTensor {
    pub array: DWayArray,
    /// One (space index, variance) per direction of the array.
    pub legs: Vec<(usize, Variance)>,
}

#[derive(Clone, Debug)]
pub struct TensorSystem {
    /// (name, dimension) per supporting space.
    pub spaces: Vec<(String, usize)>,
    pub tensors: Vec<SystemTensor>,
}

impl TensorSystem {
    pub fn new(spaces: Vec<(String, usize)>, tensors: Vec<SystemTensor>) -> Result<Self> {
        let sys = TensorSystem { spaces, tensors };
        sys.validate()?;
        Ok(sys)
    }

    pub fn validate(&self) -> Result<()> {
        for (ti, t) in self.tensors.iter().enumerate() {
            if t.array.order() > 3 {
                return Err(Error::Input(format!(
                    "tensor {ti} has order {} > 3",
                    t.array.order()
                )));
            }
            if t.legs.len() != t.array.order() {
                return Err(Error::Input(format!("tensor {ti}: leg count != order")));
            }
            for (k, (s, _)) in t.legs.iter().enumerate() {
                let dim = self
                    .spaces
                    .get(*s)
                    .ok_or_else(|| Error::Input(format!("tensor {ti}: bad space index {s}")))?
                    .1;
                if t.array.dims[k] != dim {
                    return Err(Error::Input(format!(
                        "tensor {ti}: direction {k} has dim {} but space {s} has dim {dim}",
                        t.array.dims[k]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Same bipartite type: equal spaces and leg assignments (array shapes
    /// follow), tensor by tensor.
    pub fn same_type(&self, other: &TensorSystem) -> bool {
        self.spaces.iter().map(|(_, d)| d).eq(other.spaces.iter().map(|(_, d)| d))
            && self.tensors.len() == other.tensors.len()
            && self
                .tensors
                .iter()
                .zip(other.tensors.iter())
                .all(|(a, b)| a.legs == b.legs)
    }

    /// Apply one invertible element per space, covariant legs by g and
    /// contravariant legs by g^{-t}.
    pub fn apply(&self, elements: &[Matrix]) -> Result<TensorSystem> {
        if elements.len() != self.spaces.len() {
            return Err(Error::Input("one element per space required".into()));
        }
        for (k, m) in elements.iter().enumerate() {
            if m.rows != self.spaces[k].1 || !m.is_square() {
                return Err(Error::Input(format!("element {k} degree mismatch")));
            }
        }
        let inv_t: Vec<Matrix> = elements
            .iter()
            .map(linalg::inverse_transpose)
            .collect::<Result<_>>()?;
        let mut tensors = Vec::with_capacity(self.tensors.len());
        for t in &self.tensors {
            let gs: Vec<Matrix> = t
                .legs
                .iter()
                .map(|(s, v)| match v {
                    Variance::Co => elements[*s].clone(),
                    Variance::Contra => inv_t[*s].clone(),
                })
                .collect();
            tensors.push(SystemTensor {
                array: apply_general_action(&gs, &t.array)?,
                legs: t.legs.clone(),
            });
        }
        TensorSystem::new(self.spaces.clone(), tensors)
    }

    /// True iff `elements` maps this system to `other`, member by member.
    pub fn is_isomorphism(&self, elements: &[Matrix], other: &TensorSystem) -> Result<bool> {
        if !self.same_type(other) {
            return Ok(false);
        }
        let image = self.apply(elements)?;
        Ok(image
            .tensors
            .iter()
            .zip(other.tensors.iter())
            .all(|(x, y)| x.array.approx_eq(&y.array)))
    }

    /// A single plain 3-tensor on three distinct covariant spaces.
    pub fn is_single_plain(&self) -> bool {
        if self.tensors.len() != 1 {
            return false;
        }
        let t = &self.tensors[0];
        if t.legs.len() != 3 || t.legs.iter().any(|(_, v)| *v == Variance::Contra) {
            return false;
        }
        let mut seen: Vec<usize> = t.legs.iter().map(|(s, _)| *s).collect();
        seen.dedup();
        seen.len() == 3 && {
            let mut s = t.legs.iter().map(|(x, _)| *x).collect::<Vec<_>>();
            s.sort_unstable();
            s.dedup();
            s.len() == 3
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::gen;

    #[test]
    fn apply_respects_variance() {
        // For the identity 2-tensor with legs (V co, V contra), every g is
        // an automorphism: g I g^{-1} = I.
        let f = FieldSpec::fp(5).unwrap();
        let id = Matrix::identity(f, 3);
        let arr = DWayArray::from_data(f, &[3, 3], id.data().to_vec()).unwrap();
        let sys = TensorSystem::new(
            vec![("V".into(), 3)],
            vec![SystemTensor {
                array: arr,
                legs: vec![(0, Variance::Co), (0, Variance::Contra)],
            }],
        )
        .unwrap();
        for seed in 0..10 {
            let g = gen::random_invertible(f, 3, seed);
            assert!(sys.is_isomorphism(&[g], &sys).unwrap());
        }
    }

    #[test]
    fn covariant_identity_cell_forces_inverse_transpose() {
        // With legs (V co, W co), g I h^t = I iff h = g^{-t}.
        let f = FieldSpec::fp(7).unwrap();
        let id = Matrix::identity(f, 2);
        let arr = DWayArray::from_data(f, &[2, 2], id.data().to_vec()).unwrap();
        let sys = TensorSystem::new(
            vec![("V".into(), 2), ("W".into(), 2)],
            vec![SystemTensor {
                array: arr,
                legs: vec![(0, Variance::Co), (1, Variance::Co)],
            }],
        )
        .unwrap();
        let g = gen::random_invertible(f, 2, 3);
        let h = linalg::inverse_transpose(&g).unwrap();
        assert!(sys.is_isomorphism(&[g.clone(), h], &sys).unwrap());
        assert!(!sys.is_isomorphism(&[g.clone(), g], &sys).unwrap() || g == linalg::inverse_transpose(&g).unwrap());
    }
}
