//! Finite-dimensional right modules over `H(r, q)`: exact action
//! matrices, induction from characters of the Laurent subalgebra,
//! reducibility of the rank-two induced module, submodule spinning, and
//! the free-module functional ranks at the finite level.
//!
//! Vectors are rows; a generator with matrix `M` acts by `v -> v * M`,
//! so `act(a * b) = act(a) * act(b)`.

use crate::hecke::{decompose_over_subalgebra, HeckeAlgebra, HeckeElem, ParabolicCoeff};
use crate::scalar::Field;
use crate::weyl::{min_coset_reps, reduced_word, Composition, ExtAffineWeylElem};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModuleError {
    #[error("character value must be nonzero")]
    ZeroCharacterValue,
    #[error("character length {got} does not match rank {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("character values are not compatible with the block action inside a block")]
    IncompatibleBlockCharacter,
    #[error("module dimension {0} exceeds the supported bound 24")]
    DimensionGuard(usize),
    #[error("constructed action matrices violate a defining relation: {0}")]
    RelationViolation(String),
    #[error("decomposition failure while building the module")]
    Decomposition,
}

/// Dense exact matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(rows: usize, cols: usize, proto: &F) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![proto.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, proto: &F) -> Self {
        let mut m = Matrix::zero(n, n, proto);
        for i in 0..n {
            m.set(i, i, proto.one());
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize, proto: &F) -> Self {
        let mut m = Matrix::zero(rows.len(), cols, proto);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), cols);
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let proto = &self.data[0];
        let mut out = Matrix::zero(self.rows, other.cols, proto);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.data.len() {
            out.data[i] = out.data[i].add(&other.data[i]);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.data.len() {
            out.data[i] = out.data[i].sub(&other.data[i]);
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = v.mul(c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Reduced row echelon form with zero rows dropped: a canonical
    /// basis of the row space.
    pub fn rref(&self) -> Matrix<F> {
        let proto = if self.data.is_empty() {
            return self.clone();
        } else {
            self.data[0].zero()
        };
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let mut pr = None;
            for r in pivot_row..m.rows {
                if !m.get(r, col).is_zero() {
                    pr = Some(r);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            for c in 0..m.cols {
                let tmp = m.get(pivot_row, c).clone();
                m.set(pivot_row, c, m.get(pr, c).clone());
                m.set(pr, c, tmp);
            }
            let inv = m.get(pivot_row, col).inv().expect("nonzero pivot");
            for c in 0..m.cols {
                let v = m.get(pivot_row, c).mul(&inv);
                m.set(pivot_row, c, v);
            }
            for r in 0..m.rows {
                if r != pivot_row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in 0..m.cols {
                        let v = m.get(r, c).sub(&m.get(pivot_row, c).mul(&factor));
                        m.set(r, c, v);
                    }
                }
            }
            pivot_row += 1;
        }
        let mut rows = Vec::new();
        for r in 0..m.rows {
            if m.row(r).iter().any(|v| !v.is_zero()) {
                rows.push(m.row(r).to_vec());
            }
        }
        let _ = proto;
        let proto2 = self.data[0].zero();
        Matrix::from_rows(rows, self.cols, &proto2)
    }

    pub fn rank(&self) -> usize {
        if self.data.is_empty() {
            return 0;
        }
        self.rref().rows
    }

    /// Basis of the left kernel `{v : v * self = 0}` as rows.
    pub fn left_kernel(&self) -> Matrix<F> {
        // Solve v * M = 0 <=> M^T v^T = 0; do elimination on columns.
        let proto = self.data[0].zero();
        let n = self.rows;
        // Transpose, then row-reduce, tracking the transformation.
        let mut m = Matrix::zero(self.cols, n, &proto);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        // Row reduce [m] and find free columns of m (which index kernel
        // coordinates): standard kernel computation for m * x = 0.
        let red = m.rref();
        let mut pivot_cols = Vec::new();
        for r in 0..red.rows {
            for c in 0..red.cols {
                if !red.get(r, c).is_zero() {
                    pivot_cols.push(c);
                    break;
                }
            }
        }
        let mut kernel_rows = Vec::new();
        for free in 0..n {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![proto.zero(); n];
            v[free] = proto.one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = red.get(r, free).neg();
            }
            kernel_rows.push(v);
        }
        Matrix::from_rows(kernel_rows, n, &proto)
    }
}

/// A character of the Laurent subalgebra: the values `z_i` of the
/// commuting generators, all nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentChar<F: Field> {
    values: Vec<F>,
}

impl<F: Field> LaurentChar<F> {
    pub fn new(values: Vec<F>) -> Result<Self, ModuleError> {
        if values.iter().any(|z| z.is_zero()) {
            return Err(ModuleError::ZeroCharacterValue);
        }
        Ok(LaurentChar { values })
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value on the Laurent monomial `x^lambda`: since the handed-out
    /// generators are `X_i = q^{-(i-1)} x^{-e_i}`, the underlying cone
    /// generator has value `zeta_i = q^{1-i} z_i^{-1}`.
    fn eval_monomial(&self, q: &F, lambda: &[i64]) -> F {
        let mut acc = q.one();
        for (i, &e) in lambda.iter().enumerate() {
            let zeta = q
                .pow_i64(-(i as i64))
                .mul(&self.values[i].inv().expect("nonzero"));
            acc = acc.mul(&zeta.pow_i64(e));
        }
        acc
    }
}

/// How the interior block letters act in a one-dimensional block
/// character: by `q` or by `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockAction {
    Index,
    Sign,
}

/// A finite-dimensional right module given by exact matrices for the
/// generators `S_1..S_{r-1}` and the unit `pi`.
#[derive(Debug, Clone)]
pub struct FinModule<F: Field> {
    alg: HeckeAlgebra<F>,
    pub dim: usize,
    /// Matrices of `S_1, ..., S_{r-1}`.
    pub letter_action: Vec<Matrix<F>>,
    pub pi_action: Matrix<F>,
    pub pi_inv_action: Matrix<F>,
    /// Candidate eigenvalues for the commuting family, when known from
    /// the construction; used by the submodule search.
    x_candidates: Vec<F>,
}

impl<F: Field> FinModule<F> {
    /// Wraps raw matrices, verifying all defining relations.
    pub fn from_matrices(
        alg: HeckeAlgebra<F>,
        letter_action: Vec<Matrix<F>>,
        pi_action: Matrix<F>,
        x_candidates: Vec<F>,
    ) -> Result<Self, ModuleError> {
        let dim = pi_action.rows;
        let proto = alg.q().zero();
        // pi is invertible: invert by solving pi * X = I via rref of [pi | I].
        let pi_inv_action = invert(&pi_action, &proto)
            .ok_or_else(|| ModuleError::RelationViolation("unit not invertible".into()))?;
        let m = FinModule {
            alg,
            dim,
            letter_action,
            pi_action,
            pi_inv_action,
            x_candidates,
        };
        m.check_relations()?;
        Ok(m)
    }

    pub fn algebra(&self) -> &HeckeAlgebra<F> {
        &self.alg
    }

    /// Matrix of the letter `S_i` for `i` in `Z/r`; the affine letter
    /// is `pi * S_{r-1} * pi^{-1}`.
    pub fn letter(&self, i: usize) -> Matrix<F> {
        let r = self.alg.rank();
        if i == 0 {
            self.pi_action
                .mul(&self.letter_action[r - 2])
                .mul(&self.pi_inv_action)
        } else {
            self.letter_action[i - 1].clone()
        }
    }

    /// Matrix of an arbitrary algebra element, by expanding each basis
    /// index along its reduced word.
    pub fn act(&self, elem: &HeckeElem<F>) -> Matrix<F> {
        let proto = self.alg.q().zero();
        let mut out = Matrix::zero(self.dim, self.dim, &proto);
        for (w, c) in elem.support() {
            let word = reduced_word(w);
            let mut acc = Matrix::identity(self.dim, &proto);
            let step = if word.pi_power >= 0 {
                &self.pi_action
            } else {
                &self.pi_inv_action
            };
            for _ in 0..word.pi_power.unsigned_abs() {
                acc = acc.mul(step);
            }
            for &i in &word.letters {
                acc = acc.mul(&self.letter(i));
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    /// Verifies the quadratic, commutation, braid and shift relations
    /// on the action matrices.
    pub fn check_relations(&self) -> Result<(), ModuleError> {
        let r = self.alg.rank();
        let q = self.alg.q();
        let proto = q.zero();
        let id = Matrix::identity(self.dim, &proto);
        let fail = |name: &str| Err(ModuleError::RelationViolation(name.to_string()));
        if self.pi_action.mul(&self.pi_inv_action) != id {
            return fail("unit inverse");
        }
        if r == 1 {
            return Ok(());
        }
        for i in 0..r {
            let s = self.letter(i);
            let lhs = s.add(&id).mul(&s.sub(&id.scale(q)));
            if !lhs.is_zero() {
                return fail(&format!("quadratic s{i}"));
            }
        }
        for i in 0..r {
            for j in (i + 1)..r {
                let adjacent = (j == i + 1) || (i == 0 && j == r - 1);
                let a = self.letter(i);
                let b = self.letter(j);
                if adjacent && r >= 3 {
                    if a.mul(&b).mul(&a) != b.mul(&a).mul(&b) {
                        return fail(&format!("braid s{i} s{j}"));
                    }
                } else if !adjacent && a.mul(&b) != b.mul(&a) {
                    return fail(&format!("commute s{i} s{j}"));
                }
            }
        }
        for i in 0..r {
            let lhs = self.pi_action.mul(&self.letter(i));
            let rhs = self.letter((i + 1) % r).mul(&self.pi_action);
            if lhs != rhs {
                return fail(&format!("unit shift s{i}"));
            }
        }
        Ok(())
    }
}

fn invert<F: Field>(m: &Matrix<F>, proto: &F) -> Option<Matrix<F>> {
    let n = m.rows;
    if n != m.cols {
        return None;
    }
    // Augment with the identity and reduce.
    let mut aug = Matrix::zero(n, 2 * n, proto);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n + i, proto.one());
    }
    let red = aug.rref();
    if red.rows != n {
        return None;
    }
    // Left block must be the identity.
    for i in 0..n {
        for j in 0..n {
            let expect = if i == j { proto.one() } else { proto.zero() };
            if *red.get(i, j) != expect {
                return None;
            }
        }
    }
    let mut out = Matrix::zero(n, n, proto);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, red.get(i, n + j).clone());
        }
    }
    Some(out)
}

fn eval_parabolic<F: Field>(
    coeff: &ParabolicCoeff<F>,
    chi: &LaurentChar<F>,
    q: &F,
    block: BlockAction,
) -> F {
    let mut acc = q.zero();
    for ((lambda, y), c) in &coeff.terms {
        let x_val = chi.eval_monomial(q, lambda);
        let letter_val = match block {
            BlockAction::Index => q.clone(),
            BlockAction::Sign => q.one().neg(),
        };
        let eps = letter_val.pow_i64(y.finite_length() as i64);
        acc = acc.add(&c.mul(&x_val).mul(&eps));
    }
    acc
}

/// Induces a one-dimensional character of the parabolic subalgebra of
/// `alpha` to the full algebra. The result has dimension equal to the
/// number of minimal coset representatives; the interior block letters
/// act by `q` or `-1` according to `block`, and the character values
/// must follow the forced geometric progression inside each block.
pub fn induce_from_block_char<F: Field>(
    alg: &HeckeAlgebra<F>,
    alpha: &Composition,
    chi: &LaurentChar<F>,
    block: BlockAction,
) -> Result<FinModule<F>, ModuleError> {
    let r = alg.rank();
    if chi.len() != r {
        return Err(ModuleError::LengthMismatch {
            got: chi.len(),
            expected: r,
        });
    }
    if alpha.total() != r {
        return Err(ModuleError::LengthMismatch {
            got: alpha.total(),
            expected: r,
        });
    }
    let q = alg.q();
    // Inside a block the exchange relation pins z_{i+1} in terms of z_i.
    for &i in &alpha.interior_generators() {
        let eps = match block {
            BlockAction::Index => q.clone(),
            BlockAction::Sign => q.one().neg(),
        };
        let expected = eps.mul(&eps).mul(&chi.values[i - 1]).mul(
            &q.inv().expect("q nonzero"),
        );
        if chi.values[i] != expected {
            return Err(ModuleError::IncompatibleBlockCharacter);
        }
    }
    let reps = min_coset_reps(alpha, r)
        .map_err(|_| ModuleError::Decomposition)?
        .reps;
    let dim = reps.len();
    let proto = q.zero();
    let index_of: BTreeMap<ExtAffineWeylElem, usize> = reps
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, w)| (w, i))
        .collect();

    let action_for = |gen: &HeckeElem<F>| -> Result<Matrix<F>, ModuleError> {
        let mut mat = Matrix::zero(dim, dim, &proto);
        for (dj, d) in reps.iter().enumerate() {
            let prod = gen.mul(&alg.basis(d));
            let dec =
                decompose_over_subalgebra(&prod, alpha).map_err(|_| ModuleError::Decomposition)?;
            for (w, h) in &dec.by_rep {
                let wi = *index_of.get(w).ok_or(ModuleError::Decomposition)?;
                let val = eval_parabolic(h, chi, q, block);
                mat.set(wi, dj, val);
            }
        }
        Ok(mat)
    };

    let mut letter_action = Vec::new();
    for i in 1..r {
        letter_action.push(action_for(&alg.letter(i))?);
    }
    let pi_action = action_for(&alg.pi())?;
    // Candidate eigenvalues of the handed-out generators on this module:
    // images of the character values under the coset action.
    let mut x_candidates = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let v = q.pow_i64(j as i64 - i as i64).mul(&chi.values[j]);
            if !x_candidates.contains(&v) {
                x_candidates.push(v);
            }
        }
    }
    FinModule::from_matrices(alg.clone(), letter_action, pi_action, x_candidates)
}

/// Induction from a character of the full Laurent subalgebra
/// (`alpha = (1, ..., 1)`); dimension `r!`.
pub fn induce_from_laurent_char<F: Field>(
    alg: &HeckeAlgebra<F>,
    chi: &LaurentChar<F>,
) -> Result<FinModule<F>, ModuleError> {
    let alpha = Composition::new(vec![1; alg.rank()]).expect("positive parts");
    induce_from_block_char(alg, &alpha, chi, BlockAction::Index)
}

/// Reducibility of the two-dimensional module induced from `(1, z)`
/// over a rank-two algebra: true exactly when `z` is `q` or `q^{-1}`.
/// Decided by searching for a common eigenline of the generator
/// matrices, not by comparing against that locus.
pub fn is_reducible_rank2<F: Field>(alg: &HeckeAlgebra<F>, z: &F) -> Result<bool, ModuleError> {
    assert_eq!(alg.rank(), 2, "rank-two criterion");
    if z.is_zero() {
        return Err(ModuleError::ZeroCharacterValue);
    }
    let chi = LaurentChar::new(vec![alg.q().one(), z.clone()])?;
    let module = induce_from_laurent_char(alg, &chi)?;
    // Any invariant line is an eigenline of S_1, whose eigenvalues are
    // among {q, -1} by the quadratic relation.
    let q = alg.q();
    let proto = q.zero();
    let id = Matrix::identity(module.dim, &proto);
    let s1 = module.letter(1);
    let mut eigenvalues = vec![q.clone()];
    let minus_one = q.one().neg();
    if !eigenvalues.contains(&minus_one) {
        eigenvalues.push(minus_one);
    }
    for lambda in eigenvalues {
        let kernel = s1.sub(&id.scale(&lambda)).left_kernel();
        for k in 0..kernel.rows {
            let v = Matrix::from_rows(vec![kernel.row(k).to_vec()], module.dim, &proto);
            let vp = v.mul(&module.pi_action);
            // v spans an invariant line iff v * pi is proportional to v.
            let stacked = Matrix::from_rows(
                vec![v.row(0).to_vec(), vp.row(0).to_vec()],
                module.dim,
                &proto,
            );
            if stacked.rank() == 1 {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Canonical bases (reduced row echelon form) of the inclusion-minimal
/// nonzero submodules found by spinning a deterministic candidate set:
/// the standard basis vectors and the common eigenvectors of the
/// commuting family.
pub fn find_simple_submodules<F: Field>(
    module: &FinModule<F>,
) -> Result<Vec<Matrix<F>>, ModuleError> {
    if module.dim > 24 {
        return Err(ModuleError::DimensionGuard(module.dim));
    }
    let alg = &module.alg;
    let proto = alg.q().zero();
    let r = alg.rank();

    // Generator matrices to spin with.
    let mut gens = Vec::new();
    for i in 1..r {
        gens.push(module.letter(i));
    }
    gens.push(module.pi_action.clone());
    gens.push(module.pi_inv_action.clone());

    // Candidate vectors: standard basis plus common eigenvectors of the
    // commuting family.
    let mut candidates: Vec<Vec<F>> = Vec::new();
    for i in 0..module.dim {
        let mut v = vec![proto.zero(); module.dim];
        v[i] = proto.one();
        candidates.push(v);
    }
    let x_mats: Vec<Matrix<F>> = (1..=r)
        .map(|i| module.act(&alg.bernstein_x(i).0))
        .collect();
    let id = Matrix::identity(module.dim, &proto);
    // Refine the full space into common eigenspaces, keeping one basis
    // vector of every simultaneous eigenspace as a candidate.
    let mut spaces: Vec<Matrix<F>> = vec![id.clone()];
    for xm in &x_mats {
        let mut next = Vec::new();
        for space in &spaces {
            for lambda in &module.x_candidates {
                // Rows v of `space` with v * xm = lambda v: solve within
                // the row space.
                let shifted = xm.sub(&id.scale(lambda));
                let image = space.mul(&shifted);
                let kernel = image.left_kernel();
                if kernel.rows > 0 {
                    let sub = kernel.mul(space);
                    let sub = sub.rref();
                    if sub.rows > 0 {
                        next.push(sub);
                    }
                }
            }
        }
        if !next.is_empty() {
            spaces = next;
        }
    }
    for space in &spaces {
        for k in 0..space.rows {
            candidates.push(space.row(k).to_vec());
        }
    }

    // Spin each candidate to the submodule it generates.
    let mut found: Vec<Matrix<F>> = Vec::new();
    for cand in candidates {
        if cand.iter().all(|v| v.is_zero()) {
            continue;
        }
        let mut basis = Matrix::from_rows(vec![cand], module.dim, &proto).rref();
        loop {
            let mut rows: Vec<Vec<F>> = (0..basis.rows).map(|i| basis.row(i).to_vec()).collect();
            for g in &gens {
                let image = basis.mul(g);
                for i in 0..image.rows {
                    rows.push(image.row(i).to_vec());
                }
            }
            let bigger = Matrix::from_rows(rows, module.dim, &proto).rref();
            if bigger.rows == basis.rows {
                break;
            }
            basis = bigger;
        }
        if !found.iter().any(|b| b == &basis) {
            found.push(basis);
        }
    }

    // Keep inclusion-minimal ones.
    let contains = |big: &Matrix<F>, small: &Matrix<F>| -> bool {
        let mut rows: Vec<Vec<F>> = (0..big.rows).map(|i| big.row(i).to_vec()).collect();
        for i in 0..small.rows {
            rows.push(small.row(i).to_vec());
        }
        Matrix::from_rows(rows, big.cols, &proto).rank() == big.rows
    };
    let minimal: Vec<Matrix<F>> = found
        .iter()
        .filter(|cand| {
            !found
                .iter()
                .any(|other| other.rows < cand.rows && contains(cand, other))
        })
        .cloned()
        .collect();
    Ok(minimal)
}

/// Ranks of the two functional maps at the finite level, plus the
/// solvability of expressing every coset functional through the unit
/// one. Both ranks must equal `r!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetFunctionalReport {
    pub expected: usize,
    pub rank_unit: usize,
    pub rank_longest: usize,
    pub all_solvable: bool,
}

/// Builds the matrix of `T -> Y * T` on the finite subalgebra, where
/// `Y` is the functional dual to the coset representative `target`:
/// `(Y T)(S_d) = ` the `target` component of `T S_d`.
fn functional_matrix<F: Field>(
    alg: &HeckeAlgebra<F>,
    alpha: &Composition,
    target: &ExtAffineWeylElem,
) -> Result<Matrix<F>, ModuleError> {
    let r = alg.rank();
    let reps = min_coset_reps(alpha, r)
        .map_err(|_| ModuleError::Decomposition)?
        .reps;
    let w0: Vec<ExtAffineWeylElem> = crate::weyl::all_permutations(r)
        .into_iter()
        .map(ExtAffineWeylElem::from_perm)
        .collect();
    let block_elems: Vec<ExtAffineWeylElem> = {
        let blocks = alpha.block_of();
        w0.iter()
            .filter(|w| {
                w.perm
                    .iter()
                    .enumerate()
                    .all(|(i, &p)| blocks[i] == blocks[p as usize])
            })
            .cloned()
            .collect()
    };
    let fact = w0.len();
    debug_assert_eq!(reps.len() * block_elems.len(), fact);
    let proto = alg.q().zero();
    // Rows: domain basis S_w, w in W_0. Columns: (d, y) pairs.
    let mut mat = Matrix::zero(fact, fact, &proto);
    let zero_lambda = vec![0i64; r];
    for (wi, w) in w0.iter().enumerate() {
        let t = alg.basis(w);
        for (dj, d) in reps.iter().enumerate() {
            let prod = t.mul(&alg.basis(d));
            let dec =
                decompose_over_subalgebra(&prod, alpha).map_err(|_| ModuleError::Decomposition)?;
            let comp = dec.component(target);
            for ((lambda, y), c) in &comp.terms {
                // Finite input stays finite: the Laurent part is trivial.
                if lambda != &zero_lambda {
                    return Err(ModuleError::Decomposition);
                }
                let yj = block_elems
                    .iter()
                    .position(|b| b == y)
                    .ok_or(ModuleError::Decomposition)?;
                mat.set(wi, dj * block_elems.len() + yj, c.clone());
            }
        }
    }
    Ok(mat)
}

/// Verifies that the unit and longest coset functionals generate the
/// functional module at the finite level: the maps `T -> Y_1 T` and
/// `T -> Y_longest T` both have full rank `r!`, and every coset
/// functional is expressible through the unit one.
pub fn coset_functional_report<F: Field>(
    alg: &HeckeAlgebra<F>,
    alpha: &Composition,
) -> Result<CosetFunctionalReport, ModuleError> {
    let r = alg.rank();
    let coset = min_coset_reps(alpha, r).map_err(|_| ModuleError::Decomposition)?;
    let expected: usize = (1..=r).product();
    let unit = ExtAffineWeylElem::identity(r);
    let m_unit = functional_matrix(alg, alpha, &unit)?;
    let m_longest = functional_matrix(alg, alpha, &coset.longest)?;
    let rank_unit = m_unit.rank();
    let rank_longest = m_longest.rank();
    // Y_w = Y_1 T_w solvable for every representative w: the row space
    // of the unit map must contain each target functional's row vector.
    let mut all_solvable = true;
    let proto = alg.q().zero();
    let base = m_unit.rref();
    for w in &coset.reps {
        let m_w = functional_matrix(alg, alpha, w)?;
        // Functional Y_w itself is the image of T = unit under the map
        // for target w... more robustly: Y_w as a coordinate vector is
        // the row of the identity element in m_w.
        let id_index = crate::weyl::all_permutations(r)
            .into_iter()
            .position(|p| p.iter().enumerate().all(|(i, &v)| v as usize == i))
            .expect("identity present");
        let target_row = m_w.row(id_index).to_vec();
        let mut rows: Vec<Vec<F>> = (0..base.rows).map(|i| base.row(i).to_vec()).collect();
        rows.push(target_row);
        let aug = Matrix::from_rows(rows, m_w.cols, &proto);
        if aug.rank() != base.rows {
            all_solvable = false;
        }
    }
    Ok(CosetFunctionalReport {
        expected,
        rank_unit,
        rank_longest,
        all_solvable,
    })
}
