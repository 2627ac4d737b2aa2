//! The affine Hecke algebra `H(r, q)` over an exact field, with basis
//! `{S_w}` indexed by the extended affine Weyl group.
//!
//! Multiplication is driven by the one-letter rule
//!
//! ```text
//! S_w * S_i = S_{w s_i}                 if len(w s_i) > len(w)
//! S_w * S_i = (q-1) S_w + q S_{w s_i}   otherwise
//! ```
//!
//! together with `S_w * Pi^a = S_{w pi^a}` (length preserving). The
//! quadratic relation `(S_i + 1)(S_i - q) = 0`, the braid relations, and
//! the conjugation `Pi S_i Pi^{-1} = S_{i+1}` (indices mod `r`; the
//! inverse unit conjugates indices down) all follow and are verified by
//! the relation suite.
//!
//! The commuting family of the second presentation is built from
//! translation basis elements: for a dominant (weakly decreasing)
//! vector `v`, `S_{t_v}` is a single basis element, and
//! `x^lambda := S_{t_mu} * S_{t_nu}^{-1}` for any splitting
//! `lambda = mu - nu` into dominant parts. The generators handed out by
//! [`HeckeAlgebra::bernstein_x`] are `X_i = q^{-(i-1)} x^{-e_i}`; this
//! is the unique scaling for which `S_i X_i S_i = q X_{i+1}` holds on
//! the nose. No square root of `q` is ever introduced.

use crate::scalar::Field;
use crate::weyl::{
    generators, min_coset_reps, reduced_word, Composition, ExtAffineWeylElem,
    ReducedWord,
};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HeckeError {
    #[error("algebra parameter q must be nonzero")]
    ZeroParameter,
    #[error("composition total {got} does not match rank {expected}")]
    RankMismatch { got: usize, expected: usize },
    #[error("decomposition did not terminate (support would not shrink)")]
    DecompositionStuck,
}

/// The algebra handle: rank `r` and the invertible parameter `q`.
/// Compared by value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeAlgebra<F: Field> {
    rank: usize,
    q: F,
}

impl<F: Field> HeckeAlgebra<F> {
    pub fn new(rank: usize, q: F) -> Result<Self, HeckeError> {
        if q.is_zero() {
            return Err(HeckeError::ZeroParameter);
        }
        assert!(rank >= 1);
        Ok(HeckeAlgebra { rank, q })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    pub fn zero(&self) -> HeckeElem<F> {
        HeckeElem {
            algebra: self.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn unit(&self) -> HeckeElem<F> {
        self.basis(&ExtAffineWeylElem::identity(self.rank))
    }

    /// The basis vector `S_w`.
    pub fn basis(&self, w: &ExtAffineWeylElem) -> HeckeElem<F> {
        assert_eq!(w.rank(), self.rank, "element rank mismatch");
        let mut coeffs = BTreeMap::new();
        coeffs.insert(w.clone(), self.q.one());
        HeckeElem {
            algebra: self.clone(),
            coeffs,
        }
    }

    /// `S_i` for `i` in `Z/r` (0 is the affine letter).
    pub fn letter(&self, i: usize) -> HeckeElem<F> {
        let gens = generators(self.rank);
        self.basis(gens.letter(i))
    }

    pub fn pi(&self) -> HeckeElem<F> {
        self.basis(&generators(self.rank).pi)
    }

    pub fn pi_inv(&self) -> HeckeElem<F> {
        self.basis(&generators(self.rank).pi_inv)
    }

    /// Inverse of the basis vector `S_w`, from its reduced word:
    /// each letter inverts as `S_i^{-1} = q^{-1} S_i - q^{-1}(q-1)`.
    pub fn basis_inverse(&self, w: &ExtAffineWeylElem) -> HeckeElem<F> {
        let word = reduced_word(w);
        let q_inv = self.q.inv().expect("q nonzero");
        let q_m1 = self.q.sub(&self.q.one());
        let gens = generators(self.rank);
        let mut acc = self.unit();
        for &i in word.letters.iter().rev() {
            let si = self.basis(gens.letter(i));
            let term = si.scale(&q_inv).sub(&self.unit().scale(&q_inv.mul(&q_m1)));
            acc = acc.mul(&term);
        }
        let pi_step = if word.pi_power >= 0 {
            gens.pi_inv.clone()
        } else {
            gens.pi.clone()
        };
        for _ in 0..word.pi_power.unsigned_abs() {
            acc = acc.mul_basis(&pi_step);
        }
        acc
    }

    /// `x^lambda` for `lambda` in `Z^r`: the image of the Laurent
    /// monomial under the standard embedding of the translation part.
    /// For dominant `lambda` this is the basis element `S_{t_lambda}`.
    pub fn x_monomial(&self, lambda: &[i64]) -> HeckeElem<F> {
        assert_eq!(lambda.len(), self.rank);
        // Split lambda = mu - nu with both parts dominant: add a
        // staircase large enough to sort the differences.
        let r = self.rank;
        let mut c: i64 = 0;
        for i in 0..r.saturating_sub(1) {
            c = c.max(lambda[i + 1] - lambda[i]);
        }
        c = c.max(0);
        let nu: Vec<i64> = (0..r).map(|i| c * (r - 1 - i) as i64).collect();
        let mu: Vec<i64> = (0..r).map(|i| lambda[i] + nu[i]).collect();
        debug_assert!(mu.windows(2).all(|w| w[0] >= w[1]));
        let t_mu = ExtAffineWeylElem::translation(mu);
        let t_nu = ExtAffineWeylElem::translation(nu);
        self.basis(&t_mu).mul(&self.basis_inverse(&t_nu))
    }

    /// The `i`-th commuting generator (1-based) of the Laurent family,
    /// together with its inverse. Satisfies `S_i X_i S_i = q X_{i+1}`,
    /// pairwise commutation, and `X_j S_i = S_i X_j` for `i` not in
    /// `{j-1, j}`.
    pub fn bernstein_x(&self, i: usize) -> (HeckeElem<F>, HeckeElem<F>) {
        assert!(i >= 1 && i <= self.rank);
        let mut e_i = vec![0i64; self.rank];
        e_i[i - 1] = -1;
        let x = self.x_monomial(&e_i);
        e_i[i - 1] = 1;
        let x_inv = self.x_monomial(&e_i);
        let q_inv = self.q.inv().expect("q nonzero");
        let lead = q_inv.pow_i64((i - 1) as i64);
        let lead_inv = self.q.pow_i64((i - 1) as i64);
        (x.scale(&lead), x_inv.scale(&lead_inv))
    }
}

/// Element of `H(r, q)`: a finite map from basis indices to nonzero
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElem<F: Field> {
    algebra: HeckeAlgebra<F>,
    coeffs: BTreeMap<ExtAffineWeylElem, F>,
}

impl<F: Field> HeckeElem<F> {
    pub fn algebra(&self) -> &HeckeAlgebra<F> {
        &self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = (&ExtAffineWeylElem, &F)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, w: &ExtAffineWeylElem) -> F {
        self.coeffs
            .get(w)
            .cloned()
            .unwrap_or_else(|| self.algebra.q.zero())
    }

    fn insert_add(&mut self, w: ExtAffineWeylElem, c: F) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&w) {
            Some(old) => {
                let new = old.add(&c);
                if new.is_zero() {
                    self.coeffs.remove(&w);
                } else {
                    *old = new;
                }
            }
            None => {
                self.coeffs.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch");
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.insert_add(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch");
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.insert_add(w.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = self.algebra.zero();
        if c.is_zero() {
            return out;
        }
        for (w, a) in &self.coeffs {
            out.coeffs.insert(w.clone(), a.mul(c));
        }
        out
    }

    /// Right multiplication by the single letter `S_i`.
    fn mul_letter(&self, i: usize) -> Self {
        let gens = generators(self.algebra.rank);
        let s = gens.letter(i);
        let q = &self.algebra.q;
        let q_m1 = q.sub(&q.one());
        let mut out = self.algebra.zero();
        for (w, c) in &self.coeffs {
            let ws = w.mul(s);
            if ws.length() > w.length() {
                out.insert_add(ws, c.clone());
            } else {
                out.insert_add(w.clone(), c.mul(&q_m1));
                out.insert_add(ws, c.mul(q));
            }
        }
        out
    }

    /// Right relabelling by a length-zero unit (`pi^{±1}` only).
    fn mul_basis(&self, u: &ExtAffineWeylElem) -> Self {
        let mut out = self.algebra.zero();
        for (w, c) in &self.coeffs {
            out.coeffs.insert(w.mul(u), c.clone());
        }
        out
    }

    /// Product in `H(r, q)`: the right factor is expanded along the
    /// reduced word of each of its basis indices.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch");
        let gens = generators(self.algebra.rank);
        let mut out = self.algebra.zero();
        for (y, d) in &other.coeffs {
            let word = reduced_word(y);
            let mut acc = self.clone();
            let pi_step = if word.pi_power >= 0 {
                &gens.pi
            } else {
                &gens.pi_inv
            };
            for _ in 0..word.pi_power.unsigned_abs() {
                acc = acc.mul_basis(pi_step);
            }
            for &i in &word.letters {
                acc = acc.mul_letter(i);
            }
            out = out.add(&acc.scale(d));
        }
        out
    }

    /// Maximal basis length in the support.
    pub fn max_length(&self) -> Option<u64> {
        self.coeffs.keys().map(|w| w.length()).max()
    }
}

impl<F: Field> fmt::Display for HeckeElem<F> {
    /// Canonical text form: terms `coef * Pi^a * S[i1,...,il]` ordered
    /// by (pi power, word length, letters).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(ReducedWord, &F)> = self
            .coeffs
            .iter()
            .map(|(w, c)| (reduced_word(w), c))
            .collect();
        terms.sort_by(|a, b| {
            (a.0.pi_power, a.0.letters.len(), &a.0.letters).cmp(&(
                b.0.pi_power,
                b.0.letters.len(),
                &b.0.letters,
            ))
        });
        let rendered: Vec<String> = terms
            .into_iter()
            .map(|(word, c)| format!("{c} * {word}"))
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// A coefficient in the parabolic subalgebra attached to a composition:
/// a combination of products `x^lambda * S_y` with `y` a block
/// permutation. This is the basis in which characters of the subalgebra
/// are evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicCoeff<F: Field> {
    pub terms: BTreeMap<(Vec<i64>, ExtAffineWeylElem), F>,
}

impl<F: Field> ParabolicCoeff<F> {
    pub fn zero() -> Self {
        ParabolicCoeff {
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_add(&mut self, key: (Vec<i64>, ExtAffineWeylElem), c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(old) => {
                let new = old.add(&c);
                if new.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *old = new;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// The corresponding element of the ambient algebra.
    pub fn to_elem(&self, alg: &HeckeAlgebra<F>) -> HeckeElem<F> {
        let mut out = alg.zero();
        for ((lambda, y), c) in &self.terms {
            let m = alg.x_monomial(lambda).mul(&alg.basis(y));
            out = out.add(&m.scale(c));
        }
        out
    }
}

/// Result of decomposing an element over a parabolic subalgebra: the
/// unique family `h_d` with `T = sum_d S_d * h_d`, `d` running over the
/// minimal coset representatives.
#[derive(Debug, Clone)]
pub struct Decomposition<F: Field> {
    pub by_rep: BTreeMap<ExtAffineWeylElem, ParabolicCoeff<F>>,
}

impl<F: Field> Decomposition<F> {
    pub fn recompose(&self, alg: &HeckeAlgebra<F>) -> HeckeElem<F> {
        let mut out = alg.zero();
        for (d, h) in &self.by_rep {
            out = out.add(&alg.basis(d).mul(&h.to_elem(alg)));
        }
        out
    }

    pub fn component(&self, d: &ExtAffineWeylElem) -> ParabolicCoeff<F> {
        self.by_rep
            .get(d)
            .cloned()
            .unwrap_or_else(ParabolicCoeff::zero)
    }
}

/// Factors `x = d * y` with `d` the minimal representative of the
/// block coset of the permutation part and `y` in the block subgroup
/// extended by all translations.
fn coset_factor(
    x: &ExtAffineWeylElem,
    blocks: &[usize],
) -> (ExtAffineWeylElem, ExtAffineWeylElem) {
    let r = x.rank();
    // The minimal representative sends each block to its sorted images.
    let mut d_perm = vec![0u8; r];
    let mut start = 0;
    while start < r {
        let b = blocks[start];
        let mut end = start;
        while end < r && blocks[end] == b {
            end += 1;
        }
        let mut images: Vec<u8> = (start..end).map(|i| x.perm[i]).collect();
        images.sort_unstable();
        for (offset, img) in images.into_iter().enumerate() {
            d_perm[start + offset] = img;
        }
        start = end;
    }
    let d = ExtAffineWeylElem::from_perm(d_perm);
    let y = d.inverse().mul(x);
    debug_assert_eq!(&d.mul(&y), x);
    debug_assert!(y
        .perm
        .iter()
        .enumerate()
        .all(|(i, &p)| blocks[i] == blocks[p as usize]));
    (d, y)
}

/// The triple `(d, lambda, y_fin)` with `x = d * t_lambda * y_fin`.
fn parabolic_factor(
    x: &ExtAffineWeylElem,
    blocks: &[usize],
) -> (ExtAffineWeylElem, Vec<i64>, ExtAffineWeylElem) {
    let r = x.rank();
    let (d, y) = coset_factor(x, blocks);
    let y_fin = ExtAffineWeylElem::from_perm(y.perm.clone());
    let mut lambda = vec![0i64; r];
    for (i, &img) in y_fin.perm.iter().enumerate() {
        lambda[img as usize] = y.trans[i];
    }
    debug_assert_eq!(
        &d.mul(&ExtAffineWeylElem::translation(lambda.clone()))
            .mul(&y_fin),
        x
    );
    (d, lambda, y_fin)
}

/// Decomposes `t` as `sum_{d} S_d * h_d` over the minimal coset
/// representatives of `alpha`, with coefficients in the parabolic
/// subalgebra (Laurent part plus block letters). The recomposition is
/// checked exactly before returning.
///
/// The fast path strips terms in decreasing order of finite
/// (permutation-part) length; the corrections a strip introduces live
/// strictly lower in that order. If the greedy pass stalls, a windowed
/// exact linear solve over the parabolic basis takes over.
pub fn decompose_over_subalgebra<F: Field>(
    t: &HeckeElem<F>,
    alpha: &Composition,
) -> Result<Decomposition<F>, HeckeError> {
    let alg = t.algebra().clone();
    let r = alg.rank();
    if alpha.total() != r {
        return Err(HeckeError::RankMismatch {
            got: alpha.total(),
            expected: r,
        });
    }
    let blocks = alpha.block_of();
    let mut rest = t.clone();
    let mut by_rep: BTreeMap<ExtAffineWeylElem, ParabolicCoeff<F>> = BTreeMap::new();
    let mut budget = 1024usize + 4096 * t.support_len().max(1);
    let mut stuck = false;
    while !rest.is_zero() {
        if budget == 0 {
            stuck = true;
            break;
        }
        budget -= 1;
        let x = rest
            .coeffs
            .keys()
            .max_by_key(|w| (w.finite_length(), w.length(), (*w).clone()))
            .cloned()
            .expect("nonzero");
        let c = rest.coeff(&x);
        let (d, lambda, y_fin) = parabolic_factor(&x, &blocks);
        let b = alg
            .basis(&d)
            .mul(&alg.x_monomial(&lambda))
            .mul(&alg.basis(&y_fin));
        let kappa = b.coeff(&x);
        if kappa.is_zero() {
            stuck = true;
            break;
        }
        let factor = c.mul(&kappa.inv().expect("nonzero leading coefficient"));
        by_rep
            .entry(d)
            .or_insert_with(ParabolicCoeff::zero)
            .insert_add((lambda, y_fin), factor.clone());
        rest = rest.sub(&b.scale(&factor));
    }
    if !stuck {
        let out = Decomposition { by_rep };
        if out.recompose(&alg) == *t {
            return Ok(out);
        }
    }
    decompose_by_window_solve(t, &blocks)
}

/// Fallback decomposition: grow a window of parabolic basis elements
/// until the input lies in their exact linear span, then solve.
fn decompose_by_window_solve<F: Field>(
    t: &HeckeElem<F>,
    blocks: &[usize],
) -> Result<Decomposition<F>, HeckeError> {
    type Key = (ExtAffineWeylElem, Vec<i64>, ExtAffineWeylElem);
    let alg = t.algebra().clone();
    let mut cands: BTreeMap<Key, HeckeElem<F>> = BTreeMap::new();
    let mut queue: Vec<ExtAffineWeylElem> = t.coeffs.keys().cloned().collect();
    for _round in 0..10 {
        let mut new_elems: Vec<ExtAffineWeylElem> = Vec::new();
        for x in queue.drain(..) {
            let key = parabolic_factor(&x, blocks);
            if cands.contains_key(&key) {
                continue;
            }
            let b = alg
                .basis(&key.0)
                .mul(&alg.x_monomial(&key.1))
                .mul(&alg.basis(&key.2));
            for (z, _) in b.support() {
                new_elems.push(z.clone());
            }
            cands.insert(key, b);
        }
        if let Some(solution) = try_window_solve(t, &cands) {
            return Ok(solution);
        }
        if new_elems.is_empty() {
            break;
        }
        queue = new_elems;
    }
    Err(HeckeError::DecompositionStuck)
}

fn try_window_solve<F: Field>(
    t: &HeckeElem<F>,
    cands: &BTreeMap<(ExtAffineWeylElem, Vec<i64>, ExtAffineWeylElem), HeckeElem<F>>,
) -> Option<Decomposition<F>> {
    // Index the union support.
    let mut rows: BTreeMap<ExtAffineWeylElem, usize> = BTreeMap::new();
    for b in cands.values() {
        for (z, _) in b.support() {
            let next = rows.len();
            rows.entry(z.clone()).or_insert(next);
        }
    }
    for (z, _) in t.support() {
        let next = rows.len();
        rows.entry(z.clone()).or_insert(next);
    }
    let n_rows = rows.len();
    let n_cols = cands.len();
    let zero = t.algebra().q().zero();
    // Dense column-major matrix plus the target vector.
    let mut mat = vec![vec![zero.clone(); n_cols + 1]; n_rows];
    for (c_idx, b) in cands.values().enumerate() {
        for (z, coef) in b.support() {
            mat[rows[z]][c_idx] = coef.clone();
        }
    }
    for (z, coef) in t.support() {
        mat[rows[z]][n_cols] = coef.clone();
    }
    // Gaussian elimination.
    let mut pivot_of_col = vec![usize::MAX; n_cols];
    let mut row = 0;
    for col in 0..n_cols {
        let mut pivot = None;
        for (r_idx, row_vec) in mat.iter().enumerate().skip(row) {
            if !row_vec[col].is_zero() {
                pivot = Some(r_idx);
                break;
            }
        }
        let Some(p) = pivot else { continue };
        mat.swap(row, p);
        let inv = mat[row][col].inv().expect("nonzero pivot");
        for c in col..=n_cols {
            mat[row][c] = mat[row][c].mul(&inv);
        }
        for r_idx in 0..n_rows {
            if r_idx != row && !mat[r_idx][col].is_zero() {
                let factor = mat[r_idx][col].clone();
                for c in col..=n_cols {
                    let delta = mat[row][c].mul(&factor);
                    mat[r_idx][c] = mat[r_idx][c].sub(&delta);
                }
            }
        }
        pivot_of_col[col] = row;
        row += 1;
        if row == n_rows {
            break;
        }
    }
    // Consistency: no pivot-free row with nonzero target.
    for (r_idx, row_vec) in mat.iter().enumerate() {
        let has_pivot = pivot_of_col.contains(&r_idx);
        if !has_pivot && !row_vec[n_cols].is_zero() {
            return None;
        }
    }
    let mut by_rep: BTreeMap<ExtAffineWeylElem, ParabolicCoeff<F>> = BTreeMap::new();
    for (c_idx, key) in cands.keys().enumerate() {
        let p = pivot_of_col[c_idx];
        if p == usize::MAX {
            continue;
        }
        let value = mat[p][n_cols].clone();
        if value.is_zero() {
            continue;
        }
        by_rep
            .entry(key.0.clone())
            .or_insert_with(ParabolicCoeff::zero)
            .insert_add((key.1.clone(), key.2.clone()), value);
    }
    let out = Decomposition { by_rep };
    if out.recompose(t.algebra()) == *t {
        Some(out)
    } else {
        None
    }
}

/// One named identity check.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: String,
    pub pass: bool,
}

/// Defining-relation suite for the word presentation: quadratic
/// relations, commutation, braid relations, the cyclic shift by the
/// unit, and invertibility of the unit.
pub fn coxeter_relation_suite<F: Field>(alg: &HeckeAlgebra<F>) -> Vec<IdentityCheck> {
    let r = alg.rank();
    let q = alg.q().clone();
    let one = alg.unit();
    let mut checks = Vec::new();

    if r >= 2 {
        for i in 0..r {
            let s = alg.letter(i);
            let lhs = s.add(&one).mul(&s.sub(&one.scale(&q)));
            checks.push(IdentityCheck {
                name: format!("quadratic s{i}"),
                pass: lhs.is_zero(),
            });
        }
        for i in 0..r {
            for j in (i + 1)..r {
                let adjacent = (j == i + 1) || (i == 0 && j == r - 1);
                let a = alg.letter(i);
                let b = alg.letter(j);
                if adjacent && r >= 3 {
                    let lhs = a.mul(&b).mul(&a);
                    let rhs = b.mul(&a).mul(&b);
                    checks.push(IdentityCheck {
                        name: format!("braid s{i} s{j}"),
                        pass: lhs == rhs,
                    });
                } else if !adjacent {
                    checks.push(IdentityCheck {
                        name: format!("commute s{i} s{j}"),
                        pass: a.mul(&b) == b.mul(&a),
                    });
                }
            }
        }
        let pi = alg.pi();
        let pi_inv = alg.pi_inv();
        for i in 0..r {
            let lhs = pi.mul(&alg.letter(i));
            let rhs = alg.letter((i + 1) % r).mul(&pi);
            checks.push(IdentityCheck {
                name: format!("unit shift s{i}"),
                pass: lhs == rhs,
            });
        }
        checks.push(IdentityCheck {
            name: "unit invertible".into(),
            pass: pi.mul(&pi_inv) == one && pi_inv.mul(&pi) == one,
        });
    } else {
        checks.push(IdentityCheck {
            name: "unit invertible".into(),
            pass: alg.pi().mul(&alg.pi_inv()) == one,
        });
    }
    checks
}

/// Relation suite for the commuting family: pairwise commutation,
/// cross commutation with the finite letters, the exchange identity
/// `S_i X_i S_i = q X_{i+1}`, invertibility, and centrality of the
/// full product (which equals `q^{-r(r-1)/2} Pi^{-r}`).
pub fn bernstein_relation_suite<F: Field>(alg: &HeckeAlgebra<F>) -> Vec<IdentityCheck> {
    let r = alg.rank();
    let q = alg.q().clone();
    let mut checks = Vec::new();
    let xs: Vec<(HeckeElem<F>, HeckeElem<F>)> = (1..=r).map(|i| alg.bernstein_x(i)).collect();

    for (j, (x, x_inv)) in xs.iter().enumerate() {
        checks.push(IdentityCheck {
            name: format!("x{} invertible", j + 1),
            pass: x.mul(x_inv) == alg.unit() && x_inv.mul(x) == alg.unit(),
        });
    }
    for a in 0..r {
        for b in (a + 1)..r {
            checks.push(IdentityCheck {
                name: format!("x{} x{} commute", a + 1, b + 1),
                pass: xs[a].0.mul(&xs[b].0) == xs[b].0.mul(&xs[a].0),
            });
        }
    }
    for i in 1..r {
        for j in 1..=r {
            if i != j && i + 1 != j {
                let s = alg.letter(i);
                checks.push(IdentityCheck {
                    name: format!("x{j} s{i} commute"),
                    pass: xs[j - 1].0.mul(&s) == s.mul(&xs[j - 1].0),
                });
            }
        }
    }
    for i in 1..r {
        let s = alg.letter(i);
        let lhs = s.mul(&xs[i - 1].0).mul(&s);
        let rhs = xs[i].0.scale(&q);
        checks.push(IdentityCheck {
            name: format!("exchange s{i}: s x{i} s = q x{}", i + 1),
            pass: lhs == rhs,
        });
    }
    // Full product: central and equal to q^{-r(r-1)/2} Pi^{-r}.
    let mut prod = alg.unit();
    for (x, _) in &xs {
        prod = prod.mul(x);
    }
    let mut pi_pow = alg.unit();
    for _ in 0..r {
        pi_pow = pi_pow.mul(&alg.pi_inv());
    }
    let exp = (r * (r - 1) / 2) as i64;
    let expected = pi_pow.scale(&alg.q().inv().expect("q nonzero").pow_i64(exp));
    checks.push(IdentityCheck {
        name: "x product equals scaled unit power".into(),
        pass: prod == expected,
    });
    let mut central = true;
    if r >= 2 {
        for i in 0..r {
            let s = alg.letter(i);
            central &= prod.mul(&s) == s.mul(&prod);
        }
    }
    central &= prod.mul(&alg.pi()) == alg.pi().mul(&prod);
    checks.push(IdentityCheck {
        name: "x product central".into(),
        pass: central,
    });
    checks
}

/// Seeded random associativity triples over basis elements of bounded
/// support. Returns the number of failures.
pub fn associativity_failures<F: Field>(alg: &HeckeAlgebra<F>, count: usize, seed: u64) -> usize {
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = alg.rank();
    let mut failures = 0;
    for _ in 0..count {
        let mut triple = Vec::new();
        for _ in 0..3 {
            let mut perm: Vec<u8> = (0..r as u8).collect();
            perm.shuffle(&mut rng);
            let trans: Vec<i64> = (0..r).map(|_| rng.gen_range(-1..=1)).collect();
            triple.push(alg.basis(&ExtAffineWeylElem { perm, trans }));
        }
        let lhs = triple[0].mul(&triple[1]).mul(&triple[2]);
        let rhs = triple[0].mul(&triple[1].mul(&triple[2]));
        if lhs != rhs {
            failures += 1;
        }
    }
    failures
}

/// `S_d` indices for every minimal coset representative of `alpha`.
pub fn coset_basis<F: Field>(
    alg: &HeckeAlgebra<F>,
    alpha: &Composition,
) -> Result<Vec<ExtAffineWeylElem>, HeckeError> {
    let reps = min_coset_reps(alpha, alg.rank()).map_err(|_| HeckeError::RankMismatch {
        got: alpha.total(),
        expected: alg.rank(),
    })?;
    Ok(reps.reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Fp, Rat};
    use crate::weyl::all_permutations;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn alg_q(rank: usize, q: i64) -> HeckeAlgebra<Rat> {
        HeckeAlgebra::new(rank, Rat::from_int(q)).unwrap()
    }

    #[test]
    fn rejects_zero_parameter() {
        assert!(HeckeAlgebra::new(2, Rat::from_int(0)).is_err());
    }

    #[test]
    fn quadratic_relation() {
        // S_1 * S_1 = (q-1) S_1 + q.
        let alg = alg_q(2, 3);
        let s1 = alg.letter(1);
        let lhs = s1.mul(&s1);
        let rhs = s1
            .scale(&Rat::from_int(2))
            .add(&alg.unit().scale(&Rat::from_int(3)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn braid_relation_gives_common_basis_vector() {
        let alg = alg_q(3, 3);
        let s1 = alg.letter(1);
        let s2 = alg.letter(2);
        let lhs = s1.mul(&s2).mul(&s1);
        let rhs = s2.mul(&s1).mul(&s2);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.support_len(), 1);
        let g = generators(3);
        let w = g.simple[0].mul(&g.simple[1]).mul(&g.simple[0]);
        assert_eq!(lhs, alg.basis(&w));
    }

    #[test]
    fn unit_shifts_letters() {
        let alg = alg_q(3, 2);
        let pi = alg.pi();
        for i in 0..3usize {
            assert_eq!(
                pi.mul(&alg.letter(i)),
                alg.letter((i + 1) % 3).mul(&pi),
                "i={i}"
            );
        }
    }

    #[test]
    fn full_relation_suites() {
        for r in 2..=4 {
            for q in [2i64, 3, 5] {
                let alg = alg_q(r, q);
                for c in coxeter_relation_suite(&alg) {
                    assert!(c.pass, "r={r} q={q} {}", c.name);
                }
                for c in bernstein_relation_suite(&alg) {
                    assert!(c.pass, "r={r} q={q} {}", c.name);
                }
            }
            for p in [5u64, 7, 11] {
                let alg = HeckeAlgebra::new(r, Fp::new(p, 3)).unwrap();
                for c in coxeter_relation_suite(&alg)
                    .into_iter()
                    .chain(bernstein_relation_suite(&alg))
                {
                    assert!(c.pass, "r={r} p={p} {}", c.name);
                }
            }
        }
    }

    #[test]
    fn relations_survive_q_equal_one() {
        // Degenerate parameter: the algebra is the group algebra.
        let alg = HeckeAlgebra::new(3, Fp::new(5, 1)).unwrap();
        for c in coxeter_relation_suite(&alg)
            .into_iter()
            .chain(bernstein_relation_suite(&alg))
        {
            assert!(c.pass, "{}", c.name);
        }
    }

    #[test]
    fn first_bernstein_generator_is_inverse_translation() {
        // X_1^{-1} is the single basis element pi * S_1 = S_{t_{e_1}}.
        let alg = alg_q(2, 3);
        let (x1, x1_inv) = alg.bernstein_x(1);
        let chain = alg.pi().mul(&alg.letter(1));
        assert_eq!(x1_inv, chain);
        assert_eq!(
            chain,
            alg.basis(&ExtAffineWeylElem::translation(vec![1, 0]))
        );
        assert_eq!(x1.mul(&chain), alg.unit());
    }

    #[test]
    fn associativity_random_sample() {
        let alg = alg_q(3, 3);
        assert_eq!(associativity_failures(&alg, 150, 0xC0FFEE), 0);
        let alg = HeckeAlgebra::new(4, Fp::new(7, 3)).unwrap();
        assert_eq!(associativity_failures(&alg, 150, 0xC0FFEE), 0);
    }

    #[test]
    fn basis_inverse_small_lengths() {
        // Every single basis vector of length <= 3 is invertible.
        let alg = alg_q(3, 3);
        let mut elems = Vec::new();
        for perm in all_permutations(3) {
            for a in -1..=1i64 {
                for b in -1..=1i64 {
                    for c in -1..=1i64 {
                        let w = ExtAffineWeylElem {
                            perm: perm.clone(),
                            trans: vec![a, b, c],
                        };
                        if w.length() <= 3 {
                            elems.push(w);
                        }
                    }
                }
            }
        }
        for w in elems {
            let s = alg.basis(&w);
            let inv = alg.basis_inverse(&w);
            assert_eq!(s.mul(&inv), alg.unit(), "w = {w}");
            assert_eq!(inv.mul(&s), alg.unit(), "w = {w}");
        }
    }

    #[test]
    fn word_evaluation_is_path_independent() {
        let alg = alg_q(3, 5);
        // s_1 s_2 s_1 = s_2 s_1 s_2 as products of letters.
        let w121 = alg.letter(1).mul(&alg.letter(2)).mul(&alg.letter(1));
        let w212 = alg.letter(2).mul(&alg.letter(1)).mul(&alg.letter(2));
        assert_eq!(w121, w212);
        // s_0 both as a letter and as pi s_2 pi^{-1}.
        let s0 = alg.letter(0);
        let conj = alg.pi().mul(&alg.letter(2)).mul(&alg.pi_inv());
        assert_eq!(s0, conj);
    }

    #[test]
    fn x_monomials_multiply_additively() {
        let alg = alg_q(2, 3);
        let a = alg.x_monomial(&[1, 0]);
        let b = alg.x_monomial(&[-1, 1]);
        let c = alg.x_monomial(&[0, 1]);
        assert_eq!(a.mul(&b), c);
        assert_eq!(b.mul(&a), c);
        assert_eq!(
            alg.x_monomial(&[2, -1]).mul(&alg.x_monomial(&[-2, 1])),
            alg.unit()
        );
    }

    #[test]
    fn decompose_examples() {
        // T = 1 decomposes as {e -> 1}.
        let alg = alg_q(3, 3);
        let alpha = Composition::new(vec![2, 1]).unwrap();
        let dec = decompose_over_subalgebra(&alg.unit(), &alpha).unwrap();
        assert_eq!(dec.by_rep.len(), 1);
        let id = ExtAffineWeylElem::identity(3);
        assert_eq!(dec.component(&id).to_elem(&alg), alg.unit());

        // T = S_{s_2 s_1}: the coset factors as (s_2) * (s_1) with s_1
        // interior to alpha = (2,1), so the s_2 component is S_1.
        let g = generators(3);
        let w = g.simple[1].mul(&g.simple[0]);
        let dec = decompose_over_subalgebra(&alg.basis(&w), &alpha).unwrap();
        assert_eq!(dec.by_rep.len(), 1);
        let h = dec.component(&g.simple[1]);
        assert_eq!(h.to_elem(&alg), alg.letter(1));
    }

    #[test]
    fn decompose_recompose_random() {
        // At least a thousand random bounded-support elements.
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for r in 2..=3usize {
            let alg = alg_q(r, 3);
            for alpha in Composition::all_of(r) {
                for _ in 0..170 {
                    let mut t = alg.zero();
                    for _ in 0..3 {
                        let mut perm: Vec<u8> = (0..r as u8).collect();
                        perm.shuffle(&mut rng);
                        let trans: Vec<i64> = (0..r).map(|_| rng.gen_range(-1..=1)).collect();
                        let coef = Rat::from_int(rng.gen_range(-3..=3));
                        t = t.add(&alg.basis(&ExtAffineWeylElem { perm, trans }).scale(&coef));
                    }
                    let dec = decompose_over_subalgebra(&t, &alpha).unwrap();
                    assert_eq!(dec.recompose(&alg), t, "alpha={alpha}");
                }
            }
        }
    }

    #[test]
    fn canonical_text_form() {
        let alg = alg_q(2, 3);
        let s1 = alg.letter(1);
        let e = alg.unit().scale(&Rat::from_int(3)).add(&s1);
        assert_eq!(format!("{e}"), "3 * Pi^0 * S[] + 1 * Pi^0 * S[1]");
        let p = alg.pi();
        assert_eq!(format!("{p}"), "1 * Pi^1 * S[]");
        assert_eq!(format!("{}", alg.zero()), "0");
    }
}
