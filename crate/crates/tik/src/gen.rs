//! Seeded instance generation: random arrays, alternating forms, digraphs,
//! and planted isomorphic pairs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::action::{apply_five_action, ActionKind};
use crate::array::DWayArray;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::groups::{GroupSpec, WitnessTuple};
use crate::matrix::Matrix;
use crate::reduction::graph::Digraph;

fn random_scalar(rng: &mut ChaCha8Rng, field: FieldSpec) -> Scalar {
    match field {
        FieldSpec::Fp { p } => Scalar::Fp(rng.gen_range(0..p)),
        FieldSpec::Q => Scalar::Q(num::BigRational::from_integer(num::BigInt::from(
            rng.gen_range(-9i64..=9),
        ))),
        FieldSpec::R { .. } => Scalar::R(rng.gen_range(-1.0..1.0)),
        FieldSpec::C { .. } => Scalar::C(num_complex::Complex64::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        )),
    }
}

pub fn random_matrix(field: FieldSpec, rows: usize, cols: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Matrix::from_fn(field, rows, cols, |_, _| random_scalar(&mut rng, field))
}

pub fn random_invertible(field: FieldSpec, n: usize, seed: u64) -> Matrix {
    GroupSpec::gl(n, field).sample(seed).expect("GL sampling")
}

pub fn random_array(field: FieldSpec, dims: &[usize], seed: u64) -> DWayArray {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = DWayArray::zeros(field, dims);
    for idx in a.clone().indices() {
        a.set(&idx, random_scalar(&mut rng, field));
    }
    a
}

/// A random alternating 3-way array: antisymmetric under every index
/// transposition, zero whenever two indices coincide.
pub fn random_alternating(field: FieldSpec, n: usize, seed: u64) -> DWayArray {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = DWayArray::zeros(field, &[n, n, n]);
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let v = random_scalar(&mut rng, field);
                set_alternating(&mut a, i, j, k, v);
            }
        }
    }
    a
}

/// Write value `v` at (i,j,k) with i<j<k and propagate with signs to the
/// other five index orders.
pub fn set_alternating(a: &mut DWayArray, i: usize, j: usize, k: usize, v: Scalar) {
    let f = a.field;
    let neg = f.neg(&v);
    a.set(&[i, j, k], v.clone());
    a.set(&[j, k, i], v.clone());
    a.set(&[k, i, j], v);
    a.set(&[i, k, j], neg.clone());
    a.set(&[j, i, k], neg.clone());
    a.set(&[k, j, i], neg);
}

/// True iff the array is alternating (full antisymmetry, zero on repeats).
pub fn is_alternating(a: &DWayArray) -> bool {
    if a.order() != 3 || a.dims[0] != a.dims[1] || a.dims[1] != a.dims[2] {
        return false;
    }
    let f = a.field;
    let n = a.dims[0];
    let scale = a.max_abs();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    if !f.approx_eq_scaled(a.get(&[i, j, k]), &f.zero(), scale) {
                        return false;
                    }
                    continue;
                }
                let v = a.get(&[i, j, k]);
                let swapped = f.neg(a.get(&[j, i, k]));
                let cycled = a.get(&[j, k, i]);
                if !f.approx_eq_scaled(v, &swapped, scale) || !f.approx_eq_scaled(v, cycled, scale)
                {
                    return false;
                }
            }
        }
    }
    true
}

/// A random digraph on `n` vertices with exactly `arcs` distinct arcs.
pub fn random_digraph(n: usize, arcs: usize, seed: u64) -> Result<Digraph> {
    let mut all: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                all.push((i, j));
            }
        }
    }
    if arcs > all.len() {
        return Err(Error::Input(format!(
            "cannot place {arcs} arcs on {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in (1..all.len()).rev() {
        let j = rng.gen_range(0..=i);
        all.swap(i, j);
    }
    Digraph::new(n, all.into_iter().take(arcs).collect())
}

/// A planted pair: sample one element per group, set B = g . A, and return
/// (B, witness).
pub fn planted_pair(
    kind: ActionKind,
    groups: &[GroupSpec],
    a: &DWayArray,
    seed: u64,
) -> Result<(DWayArray, WitnessTuple)> {
    let elements: Vec<Matrix> = groups
        .iter()
        .enumerate()
        .map(|(i, g)| g.sample(seed.wrapping_add(i as u64).wrapping_mul(0x9e3779b9)))
        .collect::<Result<_>>()?;
    let b = apply_five_action(kind, &elements, a)?;
    let w = WitnessTuple::new(kind, elements, groups.to_vec())?;
    Ok((b, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::check_witness;

    #[test]
    fn planted_pairs_verify_over_f5_and_c() {
        let dims = [2usize, 2, 2];
        for (field, seeds) in [(FieldSpec::fp(5).unwrap(), 0..50u64), (FieldSpec::complex(), 0..50u64)] {
            for seed in seeds {
                let a = random_array(field, &dims, seed);
                let groups = vec![
                    GroupSpec::gl(2, field),
                    GroupSpec::gl(2, field),
                    GroupSpec::gl(2, field),
                ];
                let (b, w) = planted_pair(ActionKind::UVW, &groups, &a, seed + 1000).unwrap();
                assert!(check_witness(&w, &a, &b).unwrap());
            }
        }
    }

    #[test]
    fn identity_witness_distinguishes_pairs() {
        let f = FieldSpec::fp(5).unwrap();
        let a = random_array(f, &[2, 2, 2], 1);
        let mut b = a.clone();
        b.set(&[0, 0, 0], f.add(b.get(&[0, 0, 0]), &f.one()));
        let groups = vec![GroupSpec::gl(2, f); 3];
        let w = WitnessTuple::identity(ActionKind::UVW, groups).unwrap();
        assert!(check_witness(&w, &a, &a).unwrap());
        assert!(!check_witness(&w, &a, &b).unwrap());
    }

    #[test]
    fn alternating_generator_is_alternating() {
        let f = FieldSpec::fp(11).unwrap();
        let a = random_alternating(f, 4, 9);
        assert!(is_alternating(&a));
    }
}
