//! Matrix-group families (Sym, GL, O, U, Sp): membership, sampling,
//! small-group enumeration, and witness checking.

use serde::{Deserialize, Serialize};

use crate::action::{apply_five_action, ActionKind};
use crate::array::DWayArray;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg;
use crate::matrix::Matrix;

/// Default cap on the number of candidate matrices an enumeration may visit.
pub const DEFAULT_ENUM_CAP: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupFamily {
    Sym,
    GL,
    O,
    U,
    Sp,
}

impl std::str::FromStr for GroupFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sym" => Ok(GroupFamily::Sym),
            "gl" => Ok(GroupFamily::GL),
            "o" => Ok(GroupFamily::O),
            "u" => Ok(GroupFamily::U),
            "sp" => Ok(GroupFamily::Sp),
            other => Err(Error::Input(format!("unknown group family {other:?}"))),
        }
    }
}

/// A named matrix-group family member: family, degree, field, and the Gram
/// matrix of the preserved form for the form-preserving families.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupSpec {
    pub family: GroupFamily,
    pub n: usize,
    pub field: FieldSpec,
    /// `None` means the standard form: identity for O/U, the standard
    /// skew form for Sp. Sym and GL carry no form.
    pub form: Option<Matrix>,
}

impl GroupSpec {
    pub fn new(family: GroupFamily, n: usize, field: FieldSpec, form: Option<Matrix>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("group degree must be positive".into()));
        }
        match family {
            GroupFamily::Sym | GroupFamily::GL => {
                if form.is_some() {
                    return Err(Error::Input(format!("{family:?} does not carry a form")));
                }
            }
            GroupFamily::U => {
                if !matches!(field, FieldSpec::C { .. }) {
                    return Err(Error::Input("U requires the complex field".into()));
                }
            }
            GroupFamily::O => {
                if matches!(field, FieldSpec::C { .. }) {
                    return Err(Error::Input("O is defined over reals or prime fields here".into()));
                }
            }
            GroupFamily::Sp => {
                if n % 2 != 0 {
                    return Err(Error::Input("Sp requires even degree".into()));
                }
            }
        }
        if let Some(m) = &form {
            if m.rows != n || m.cols != n || m.field != field {
                return Err(Error::Input("form shape/field mismatch".into()));
            }
            if linalg::rank(m)? != n {
                return Err(Error::Input("form must be full rank".into()));
            }
            if family == GroupFamily::Sp {
                let skew = m.add(&m.transpose()).map(|s| s.is_zero()).unwrap_or(false);
                let alt = (0..n).all(|i| field.is_zero(m.get(i, i)));
                if !skew || !alt {
                    return Err(Error::Input("Sp form must be full-rank alternating".into()));
                }
            }
        }
        Ok(GroupSpec { family, n, field, form })
    }

    pub fn gl(n: usize, field: FieldSpec) -> Self {
        GroupSpec::new(GroupFamily::GL, n, field, None).expect("GL spec")
    }

    pub fn sym(n: usize, field: FieldSpec) -> Self {
        GroupSpec::new(GroupFamily::Sym, n, field, None).expect("Sym spec")
    }

    pub fn orthogonal(n: usize, field: FieldSpec) -> Result<Self> {
        GroupSpec::new(GroupFamily::O, n, field, None)
    }

    pub fn unitary(n: usize, field: FieldSpec) -> Result<Self> {
        GroupSpec::new(GroupFamily::U, n, field, None)
    }

    /// The Gram matrix of the preserved form (standard default), or `None`
    /// for Sym/GL.
    pub fn gram(&self) -> Option<Matrix> {
        match self.family {
            GroupFamily::Sym | GroupFamily::GL => None,
            GroupFamily::O | GroupFamily::U => Some(
                self.form
                    .clone()
                    .unwrap_or_else(|| Matrix::identity(self.field, self.n)),
            ),
            GroupFamily::Sp => Some(
                self.form
                    .clone()
                    .unwrap_or_else(|| standard_symplectic_form(self.field, self.n)),
            ),
        }
    }

    /// Membership test: invertible and form-preserving (`M^t Phi M = Phi`,
    /// conjugate-transpose for U); Sym requires a permutation matrix.
    /// Exact over exact fields, within tolerance over floats.
    pub fn is_member(&self, m: &Matrix) -> Result<bool> {
        if m.field != self.field {
            return Err(Error::Input("field mismatch in is_member".into()));
        }
        if m.rows != self.n || m.cols != self.n {
            return Err(Error::Input(format!(
                "matrix degree {}x{} does not match group degree {}",
                m.rows, m.cols, self.n
            )));
        }
        match self.family {
            GroupFamily::GL => linalg::is_invertible(m),
            GroupFamily::Sym => Ok(is_permutation_matrix(m)),
            GroupFamily::O | GroupFamily::Sp => {
                let phi = self.gram().unwrap();
                let lhs = m.transpose().mul(&phi)?.mul(m)?;
                Ok(lhs.approx_eq(&phi) && linalg::is_invertible(m)?)
            }
            GroupFamily::U => {
                let phi = self.gram().unwrap();
                let lhs = m.conj_transpose().mul(&phi)?.mul(m)?;
                Ok(lhs.approx_eq(&phi) && linalg::is_invertible(m)?)
            }
        }
    }

    /// Deterministic sampling by seed. Supported: GL over any field,
    /// O/U over R/C by orthonormalization, O over prime fields (uniform
    /// from enumeration at tiny degree, reflection products otherwise),
    /// Sym by shuffling.
    pub fn sample(&self, seed: u64) -> Result<Matrix> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        match self.family {
            GroupFamily::Sym => {
                let mut perm: Vec<usize> = (0..self.n).collect();
                // Fisher-Yates
                for i in (1..self.n).rev() {
                    let j = rng.gen_range(0..=i);
                    perm.swap(i, j);
                }
                Ok(Matrix::permutation(self.field, &perm))
            }
            GroupFamily::GL => {
                for round in 0..1000 {
                    let m = random_matrix_with(&mut rng, self.field, self.n, self.n);
                    if linalg::is_invertible(&m)? {
                        return Ok(m);
                    }
                    let _ = round;
                }
                Err(Error::Input("failed to sample an invertible matrix".into()))
            }
            GroupFamily::O | GroupFamily::U => match self.field {
                FieldSpec::R { .. } | FieldSpec::C { .. } => {
                    if self.form.is_some() {
                        return Err(Error::Input(
                            "sampling supports the standard form only".into(),
                        ));
                    }
                    let g = random_matrix_with(&mut rng, self.field, self.n, self.n);
                    orthonormalize(&g)
                }
                FieldSpec::Fp { p } => {
                    let candidates = count_candidates(p, self.n * self.n);
                    if candidates.map(|c| c <= 1_000_000).unwrap_or(false) {
                        let members: Vec<Matrix> =
                            self.enumerate(DEFAULT_ENUM_CAP)?.collect();
                        if members.is_empty() {
                            return Err(Error::Input("empty group".into()));
                        }
                        Ok(members[rng.gen_range(0..members.len())].clone())
                    } else if p % 2 == 1 && self.form.is_none() {
                        self.sample_orthogonal_reflections(&mut rng)
                    } else {
                        Err(Error::Input(
                            "orthogonal sampling over this field/degree is unsupported".into(),
                        ))
                    }
                }
                _ => Err(Error::Input("unsupported sampling field for O/U".into())),
            },
            GroupFamily::Sp => Err(Error::Input("Sp sampling is out of scope".into())),
        }
    }

    /// Product of Householder-type reflections H_v = I - 2 v v^t / (v^t v)
    /// over odd-characteristic prime fields; every factor preserves the
    /// identity form, so the product is orthogonal. Not uniform.
    fn sample_orthogonal_reflections(&self, rng: &mut impl rand::Rng) -> Result<Matrix> {
        let f = self.field;
        let p = f.modulus().unwrap();
        let mut m = Matrix::identity(f, self.n);
        let mut factors = 0usize;
        let mut tries = 0usize;
        while factors < 2 * self.n {
            tries += 1;
            if tries > 1000 * self.n {
                break;
            }
            let v: Vec<Scalar> = (0..self.n).map(|_| Scalar::Fp(rng.gen_range(0..p))).collect();
            let mut norm = f.zero();
            for x in &v {
                norm = f.add(&norm, &f.mul(x, x));
            }
            if f.is_zero(&norm) {
                continue;
            }
            let coef = f.mul(&f.from_i64(-2), &f.inv(&norm)?);
            let h = Matrix::from_fn(f, self.n, self.n, |i, j| {
                let outer = f.mul(&coef, &f.mul(&v[i], &v[j]));
                if i == j {
                    f.add(&f.one(), &outer)
                } else {
                    outer
                }
            });
            m = m.mul(&h)?;
            factors += 1;
        }
        // a random signed permutation keeps the form and mixes determinants
        let mut perm: Vec<usize> = (0..self.n).collect();
        for i in (1..self.n).rev() {
            let j = rng.gen_range(0..=i);
            perm.swap(i, j);
        }
        let mut s = Matrix::permutation(f, &perm);
        for j in 0..self.n {
            if rng.gen_bool(0.5) {
                for i in 0..self.n {
                    let v = f.neg(s.get(i, j));
                    s.set(i, j, v);
                }
            }
        }
        m.mul(&s)
    }

    /// Enumerate every member exactly once (prime fields; Sym over any
    /// field). `cap` bounds the number of candidate matrices visited.
    pub fn enumerate(&self, cap: u64) -> Result<Box<dyn Iterator<Item = Matrix> + Send>> {
        match self.family {
            GroupFamily::Sym => {
                let fact: u64 = (1..=self.n as u64).product();
                if fact > cap {
                    return Err(Error::CapExceeded(format!(
                        "{}! = {fact} permutations exceed cap {cap}",
                        self.n
                    )));
                }
                let field = self.field;
                Ok(Box::new(permutations_lex(self.n).map(move |p| {
                    Matrix::permutation(field, &p)
                })))
            }
            GroupFamily::GL | GroupFamily::O | GroupFamily::Sp => {
                let FieldSpec::Fp { p } = self.field else {
                    return Err(Error::Input("enumeration requires a prime field".into()));
                };
                match count_candidates(p, self.n * self.n) {
                    Some(c) if c <= cap => {}
                    _ => {
                        return Err(Error::CapExceeded(format!(
                            "{p}^{} candidates exceed cap {cap}",
                            self.n * self.n
                        )))
                    }
                }
                let spec = self.clone();
                Ok(Box::new(
                    all_matrices(self.field, self.n)
                        .filter(move |m| spec.is_member(m).unwrap_or(false)),
                ))
            }
            GroupFamily::U => Err(Error::Input("U is not enumerable over prime fields".into())),
        }
    }
}

/// The standard alternating form: antidiagonal +1 on the first half,
/// -1 on the second.
pub fn standard_symplectic_form(field: FieldSpec, n: usize) -> Matrix {
    let half = n / 2;
    Matrix::from_fn(field, n, n, |i, j| {
        if j == n - 1 - i {
            if i < half {
                field.one()
            } else {
                field.from_i64(-1)
            }
        } else {
            field.zero()
        }
    })
}

pub fn is_permutation_matrix(m: &Matrix) -> bool {
    if !m.is_square() {
        return false;
    }
    let f = m.field;
    let one = f.one();
    let scale = m.max_abs();
    let mut col_used = vec![false; m.cols];
    for i in 0..m.rows {
        let mut ones = 0;
        for j in 0..m.cols {
            let v = m.get(i, j);
            if f.approx_eq_scaled(v, &one, scale) {
                ones += 1;
                if col_used[j] {
                    return false;
                }
                col_used[j] = true;
            } else if !f.approx_eq_scaled(v, &f.zero(), scale) {
                return false;
            }
        }
        if ones != 1 {
            return false;
        }
    }
    true
}

fn count_candidates(p: u64, cells: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..cells {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

/// All n x n matrices over a prime field in entry-vector lexicographic
/// order (row-major digits, most significant first).
pub fn all_matrices(field: FieldSpec, n: usize) -> impl Iterator<Item = Matrix> + Send {
    let p = field.modulus().expect("prime field");
    let cells = n * n;
    let mut digits = vec![0u64; cells];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let m = Matrix::from_fn(field, n, n, |i, j| Scalar::Fp(digits[i * n + j]));
        // odometer increment, last digit fastest
        let mut k = cells;
        loop {
            if k == 0 {
                done = true;
                break;
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < p {
                break;
            }
            digits[k] = 0;
        }
        Some(m)
    })
}

/// Lexicographic permutation stream.
fn permutations_lex(n: usize) -> impl Iterator<Item = Vec<usize>> + Send {
    let mut cur: Option<Vec<usize>> = Some((0..n).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        // next_permutation
        let mut v = out.clone();
        let mut i = n.saturating_sub(1);
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            cur = None;
        } else {
            let mut j = n - 1;
            while v[j] <= v[i - 1] {
                j -= 1;
            }
            v.swap(i - 1, j);
            v[i..].reverse();
            cur = Some(v);
        }
        Some(out)
    })
}

fn random_matrix_with(rng: &mut impl rand::Rng, field: FieldSpec, rows: usize, cols: usize) -> Matrix {
    use num::BigInt;
    Matrix::from_fn(field, rows, cols, |_, _| match field {
        FieldSpec::Fp { p } => Scalar::Fp(rng.gen_range(0..p)),
        FieldSpec::Q => Scalar::Q(num::BigRational::from_integer(BigInt::from(
            rng.gen_range(-9i64..=9),
        ))),
        FieldSpec::R { .. } => Scalar::R(gaussian(rng)),
        FieldSpec::C { .. } => Scalar::C(num_complex::Complex64::new(gaussian(rng), gaussian(rng))),
    })
}

/// Box-Muller standard normal.
fn gaussian(rng: &mut impl rand::Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Gram-Schmidt orthonormalization of the columns, with the phase/sign
/// convention that the implicit triangular factor has positive real
/// diagonal; makes float-group sampling deterministic per seed.
pub fn orthonormalize(m: &Matrix) -> Result<Matrix> {
    match m.field {
        FieldSpec::R { .. } => {
            let a = linalg::to_na_real(m);
            let qr = a.qr();
            let mut q = qr.q();
            let r = qr.r();
            for j in 0..q.ncols() {
                if r[(j, j)] < 0.0 {
                    for i in 0..q.nrows() {
                        q[(i, j)] = -q[(i, j)];
                    }
                }
            }
            Ok(linalg::from_na_real(m.field, &q))
        }
        FieldSpec::C { .. } => {
            let a = linalg::to_na_complex(m);
            let qr = a.qr();
            let mut q = qr.q();
            let r = qr.r();
            for j in 0..q.ncols() {
                let d = r[(j, j)];
                if d.norm() > 0.0 {
                    let phase = d / d.norm();
                    for i in 0..q.nrows() {
                        q[(i, j)] *= phase.conj();
                    }
                }
            }
            Ok(linalg::from_na_complex(m.field, &q))
        }
        _ => Err(Error::Input("orthonormalization requires a float field".into())),
    }
}

/// A tuple of group elements certifying an isomorphism under an action.
#[derive(Clone, Debug)]
pub struct WitnessTuple {
    pub action: ActionKind,
    pub elements: Vec<Matrix>,
    pub groups: Vec<GroupSpec>,
}

impl WitnessTuple {
    pub fn new(action: ActionKind, elements: Vec<Matrix>, groups: Vec<GroupSpec>) -> Result<Self> {
        if elements.len() != action.element_count() || groups.len() != elements.len() {
            return Err(Error::Input(format!(
                "action {action} expects {} elements",
                action.element_count()
            )));
        }
        Ok(WitnessTuple { action, elements, groups })
    }

    pub fn identity(action: ActionKind, groups: Vec<GroupSpec>) -> Result<Self> {
        let elements = groups
            .iter()
            .map(|g| Matrix::identity(g.field, g.n))
            .collect();
        WitnessTuple::new(action, elements, groups)
    }
}

/// True iff every element passes membership for its group and the action
/// maps `a` to `b` (exactly over exact fields, within tolerance over
/// floats).
pub fn check_witness(w: &WitnessTuple, a: &DWayArray, b: &DWayArray) -> Result<bool> {
    for (m, g) in w.elements.iter().zip(w.groups.iter()) {
        if !g.is_member(m)? {
            return Ok(false);
        }
    }
    let image = apply_five_action(w.action, &w.elements, a)?;
    Ok(image.approx_eq(b))
}

/// Block-diagonality lemma helper: verify that a member of an identity-form
/// O/U group is block-diagonal under `sizes` (off-diagonal blocks vanish
/// within tolerance) and return the diagonal blocks, each of which is
/// checked for membership at its own degree.
pub fn assert_block_diagonal(m: &Matrix, sizes: &[usize], group: &GroupSpec) -> Result<Vec<Matrix>> {
    let total: usize = sizes.iter().sum();
    if total != m.rows || !m.is_square() {
        return Err(Error::Input("partition does not match matrix degree".into()));
    }
    let scale = m.max_abs();
    let f = m.field;
    let mut offsets = vec![0usize];
    for s in sizes {
        offsets.push(offsets.last().unwrap() + s);
    }
    for bi in 0..sizes.len() {
        for bj in 0..sizes.len() {
            if bi == bj {
                continue;
            }
            for i in offsets[bi]..offsets[bi + 1] {
                for j in offsets[bj]..offsets[bj + 1] {
                    if !f.approx_eq_scaled(m.get(i, j), &f.zero(), scale) {
                        return Err(Error::Tolerance(format!(
                            "off-diagonal block ({bi},{bj}) entry ({i},{j}) is {:?}",
                            m.get(i, j)
                        )));
                    }
                }
            }
        }
    }
    let mut blocks = Vec::new();
    for (bi, &s) in sizes.iter().enumerate() {
        let blk = m.block(offsets[bi], offsets[bi], s, s);
        let sub = GroupSpec::new(group.family, s, group.field, None)?;
        if !sub.is_member(&blk)? {
            return Err(Error::Tolerance(format!(
                "diagonal block {bi} fails membership for {:?}",
                group.family
            )));
        }
        blocks.push(blk);
    }
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_in_every_family() {
        let fr = FieldSpec::real();
        let fc = FieldSpec::complex();
        let f3 = FieldSpec::fp(3).unwrap();
        let specs = vec![
            GroupSpec::sym(3, f3),
            GroupSpec::gl(3, f3),
            GroupSpec::orthogonal(3, f3).unwrap(),
            GroupSpec::orthogonal(3, fr).unwrap(),
            GroupSpec::unitary(3, fc).unwrap(),
            GroupSpec::new(GroupFamily::Sp, 4, f3, None).unwrap(),
        ];
        for g in specs {
            let id = Matrix::identity(g.field, g.n);
            assert!(g.is_member(&id).unwrap(), "{:?}", g.family);
        }
    }

    #[test]
    fn diag21_is_orthogonal_over_f3() {
        // diag(2,1)^t diag(2,1) = diag(4,1) = diag(1,1) mod 3
        let f = FieldSpec::fp(3).unwrap();
        let g = GroupSpec::orthogonal(2, f).unwrap();
        let m = Matrix::from_i64_rows(f, &[&[2, 0], &[0, 1]]);
        assert!(g.is_member(&m).unwrap());
    }

    #[test]
    fn householder_is_o_not_sp() {
        let f = FieldSpec::real();
        // reflection across the hyperplane orthogonal to (1,1)/sqrt(2)
        let m = Matrix::from_fn(f, 2, 2, |i, j| {
            Scalar::R(if i == j { 0.0 } else { -1.0 })
        });
        let o = GroupSpec::orthogonal(2, f).unwrap();
        assert!(o.is_member(&m).unwrap());
        let sp = GroupSpec::new(GroupFamily::Sp, 2, f, None).unwrap();
        assert!(!sp.is_member(&m).unwrap());
    }

    #[test]
    fn gl22_has_six_elements() {
        let f = FieldSpec::fp(2).unwrap();
        let g = GroupSpec::gl(2, f);
        let members: Vec<_> = g.enumerate(DEFAULT_ENUM_CAP).unwrap().collect();
        assert_eq!(members.len(), 6);
    }

    #[test]
    fn sym3_has_six_permutations() {
        let f = FieldSpec::fp(2).unwrap();
        let g = GroupSpec::sym(3, f);
        let members: Vec<_> = g.enumerate(DEFAULT_ENUM_CAP).unwrap().collect();
        assert_eq!(members.len(), 6);
        assert!(members.iter().all(is_permutation_matrix));
    }

    #[test]
    fn o1_f3_is_plus_minus_one() {
        let f = FieldSpec::fp(3).unwrap();
        let g = GroupSpec::orthogonal(1, f).unwrap();
        let members: Vec<_> = g.enumerate(DEFAULT_ENUM_CAP).unwrap().collect();
        assert_eq!(members.len(), 2);
    }

    #[test]
    fn enumeration_closed_under_product_and_inverse() {
        for p in [2u64, 3] {
            let f = FieldSpec::fp(p).unwrap();
            for spec in [
                GroupSpec::gl(2, f),
                GroupSpec::orthogonal(2, f).unwrap(),
            ] {
                let members: Vec<_> = spec.enumerate(DEFAULT_ENUM_CAP).unwrap().collect();
                for a in &members {
                    let inv = linalg::inverse(a).unwrap();
                    assert!(members.contains(&inv));
                    for b in &members {
                        let prod = a.mul(b).unwrap();
                        assert!(members.contains(&prod));
                    }
                }
            }
        }
    }

    #[test]
    fn unitary_sample_is_member() {
        let f = FieldSpec::complex();
        let g = GroupSpec::unitary(4, f).unwrap();
        let m = g.sample(7).unwrap();
        assert!(g.is_member(&m).unwrap());
        // explicit max-norm check of M^* M - I
        let gram = m.conj_transpose().mul(&m).unwrap();
        let diff = gram.sub(&Matrix::identity(f, 4)).unwrap();
        assert!(diff.max_abs() <= 1e-9);
        // determinism
        assert_eq!(m, g.sample(7).unwrap());
    }

    #[test]
    fn gl_f2_samples_land_in_the_group() {
        let f = FieldSpec::fp(2).unwrap();
        let g = GroupSpec::gl(2, f);
        let members: Vec<_> = g.enumerate(DEFAULT_ENUM_CAP).unwrap().collect();
        for seed in 0..1000 {
            let m = g.sample(seed).unwrap();
            assert!(members.contains(&m));
        }
    }

    #[test]
    fn orthogonal_reflection_sampling_at_large_degree() {
        let f = FieldSpec::fp(32771).unwrap();
        let g = GroupSpec::orthogonal(7, f).unwrap();
        let m = g.sample(3).unwrap();
        assert!(g.is_member(&m).unwrap());
    }

    #[test]
    fn transpose_of_member_is_member_identity_form() {
        let f = FieldSpec::fp(3).unwrap();
        let g = GroupSpec::orthogonal(2, f).unwrap();
        for m in g.enumerate(DEFAULT_ENUM_CAP).unwrap() {
            assert!(g.is_member(&m.transpose()).unwrap());
        }
    }

    #[test]
    fn block_diagonal_utility_accepts_and_rejects() {
        let f = FieldSpec::complex();
        let g = GroupSpec::unitary(5, f).unwrap();
        let u1 = GroupSpec::unitary(2, f).unwrap().sample(1).unwrap();
        let u2 = GroupSpec::unitary(3, f).unwrap().sample(2).unwrap();
        let m = Matrix::block_diag(f, &[&u1, &u2]);
        let blocks = assert_block_diagonal(&m, &[2, 3], &g).unwrap();
        assert_eq!(blocks.len(), 2);
        // a full 5x5 unitary generically violates the partition
        let full = g.sample(3).unwrap();
        assert!(assert_block_diagonal(&full, &[2, 3], &g).is_err());
    }
}
