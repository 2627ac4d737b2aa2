//! The extended affine Weyl group `Z^r ⋊ S_r`: generators,
//! multiplication, length, reduced words and minimal coset
//! representatives.
//!
//! # Conventions
//!
//! An element is a pair `(perm, trans)`. Concretely it is the monomial
//! matrix `P_perm * D(x^trans)` where `P_perm e_j = e_{perm(j)}` and `D`
//! is diagonal, so composition follows matrix order:
//!
//! ```text
//! (sigma, t) * (sigma', t') = (sigma o sigma', t' + sigma'^{-1}(t))
//! ```
//!
//! where `(sigma'^{-1}(t))_i = t_{sigma'(i)}`. Under this convention:
//!
//! * `s_i` (1-based, `1 <= i <= r-1`) swaps coordinates `i` and `i+1`;
//! * `pi` is the cyclic permutation `1 -> 2 -> ... -> r -> 1` with
//!   translation `e_r`; it has length zero and satisfies
//!   `pi * s_i * pi^{-1} = s_{i+1}` with indices mod `r`
//!   (so the inverse unit conjugates down: `pi^{-1} * s_i * pi = s_{i-1}`),
//!   `pi^r = t_{(1,...,1)}`, and `pi * s_{r-1} * ... * s_1 = t_{e_1}`;
//! * `s_0 := pi * s_{r-1} * pi^{-1}` is the affine reflection.
//!
//! The length of `(sigma, t)` is the closed form
//! `sum_{i<j} |t_i - t_j + [sigma(i) > sigma(j)]|`, validated against a
//! breadth-first word-length oracle in the tests.

use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeylError {
    #[error("composition parts sum to {got}, expected rank {expected}")]
    RankMismatch { got: usize, expected: usize },
    #[error("composition parts must all be at least 1")]
    EmptyPart,
}

/// A composition `(n_1, ..., n_k)` of the rank, defining a block
/// decomposition of the positions `1..r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, WeylError> {
        if parts.iter().any(|&p| p == 0) {
            return Err(WeylError::EmptyPart);
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Block index of each position `0..r` (0-based).
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.total());
        for (b, &len) in self.parts.iter().enumerate() {
            out.extend(std::iter::repeat(b).take(len));
        }
        out
    }

    /// 1-based indices `i` of the generators `s_i` interior to a block
    /// (i.e. `i` is not a block boundary `n_1 + ... + n_k`).
    pub fn interior_generators(&self) -> Vec<usize> {
        let blocks = self.block_of();
        (1..self.total())
            .filter(|&i| blocks[i - 1] == blocks[i])
            .collect()
    }

    /// All compositions of `r` into positive parts.
    pub fn all_of(r: usize) -> Vec<Composition> {
        fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition { parts: cur.clone() });
                return;
            }
            for p in 1..=rest {
                cur.push(p);
                rec(rest - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(r, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// Element of `Z^r ⋊ S_r`. `perm[i]` is the 0-based image of position
/// `i`; `trans` is the integer translation vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtAffineWeylElem {
    pub perm: Vec<u8>,
    pub trans: Vec<i64>,
}

impl ExtAffineWeylElem {
    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn identity(r: usize) -> Self {
        ExtAffineWeylElem {
            perm: (0..r as u8).collect(),
            trans: vec![0; r],
        }
    }

    /// Pure translation by `v`.
    pub fn translation(v: Vec<i64>) -> Self {
        let r = v.len();
        ExtAffineWeylElem {
            perm: (0..r as u8).collect(),
            trans: v,
        }
    }

    /// Pure permutation.
    pub fn from_perm(perm: Vec<u8>) -> Self {
        let r = perm.len();
        ExtAffineWeylElem {
            perm,
            trans: vec![0; r],
        }
    }

    /// Transposition of positions `i` and `i+1`, 1-based `1 <= i <= r-1`.
    pub fn simple_reflection(r: usize, i: usize) -> Self {
        assert!(i >= 1 && i < r, "simple reflection index out of range");
        let mut perm: Vec<u8> = (0..r as u8).collect();
        perm.swap(i - 1, i);
        ExtAffineWeylElem::from_perm(perm)
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
            && self.trans.iter().all(|&t| t == 0)
    }

    pub fn is_translation(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    /// `(sigma, t) * (sigma', t') = (sigma o sigma', t' + sigma'^{-1}(t))`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        let r = self.rank();
        let mut perm = vec![0u8; r];
        let mut trans = vec![0i64; r];
        for i in 0..r {
            perm[i] = self.perm[other.perm[i] as usize];
            trans[i] = other.trans[i] + self.trans[other.perm[i] as usize];
        }
        ExtAffineWeylElem { perm, trans }
    }

    pub fn inverse(&self) -> Self {
        let r = self.rank();
        let mut perm = vec![0u8; r];
        let mut trans = vec![0i64; r];
        for i in 0..r {
            perm[self.perm[i] as usize] = i as u8;
        }
        for i in 0..r {
            trans[i] = -self.trans[perm[i] as usize];
        }
        ExtAffineWeylElem { perm, trans }
    }

    /// Total translation degree; this is the power of `pi` in any word
    /// for the element (the valuation of the determinant).
    pub fn pi_degree(&self) -> i64 {
        self.trans.iter().sum()
    }

    /// Inversion count of the permutation part (its length in `S_r`).
    pub fn finite_length(&self) -> u64 {
        let r = self.rank();
        let mut inv = 0u64;
        for i in 0..r {
            for j in (i + 1)..r {
                if self.perm[i] > self.perm[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Closed-form length `sum_{i<j} |t_i - t_j + [perm(i) > perm(j)]|`.
    pub fn length(&self) -> u64 {
        let r = self.rank();
        let mut len = 0u64;
        for i in 0..r {
            for j in (i + 1)..r {
                let eta = i64::from(self.perm[i] > self.perm[j]);
                len += (self.trans[i] - self.trans[j] + eta).unsigned_abs();
            }
        }
        len
    }
}

impl fmt::Display for ExtAffineWeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.perm.iter().map(|x| (x + 1).to_string()).collect();
        let t: Vec<String> = self.trans.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}; {}]", p.join(" "), t.join(" "))
    }
}

/// The generating set of the rank-`r` group.
#[derive(Debug, Clone)]
pub struct Generators {
    /// `s_1, ..., s_{r-1}` (empty for `r = 1`).
    pub simple: Vec<ExtAffineWeylElem>,
    /// Affine reflection `s_0 = pi * s_{r-1} * pi^{-1}`; `None` for `r = 1`.
    pub affine: Option<ExtAffineWeylElem>,
    pub pi: ExtAffineWeylElem,
    pub pi_inv: ExtAffineWeylElem,
}

impl Generators {
    /// Generator `s_i` for `i` taken mod `r` (0 means the affine one).
    pub fn letter(&self, i: usize) -> &ExtAffineWeylElem {
        if i == 0 {
            self.affine.as_ref().expect("no affine letter at rank 1")
        } else {
            &self.simple[i - 1]
        }
    }
}

/// Generators of `Z^r ⋊ S_r`: simple transpositions, the affine
/// reflection, and the length-zero unit `pi`.
pub fn generators(r: usize) -> Generators {
    assert!(r >= 1);
    let perm: Vec<u8> = if r == 1 {
        vec![0]
    } else {
        (0..r as u8).map(|i| (i + 1) % r as u8).collect()
    };
    let mut trans = vec![0i64; r];
    trans[r - 1] = 1;
    let pi = ExtAffineWeylElem { perm, trans };
    let pi_inv = pi.inverse();
    let simple: Vec<_> = (1..r)
        .map(|i| ExtAffineWeylElem::simple_reflection(r, i))
        .collect();
    let affine = if r >= 2 {
        Some(pi.mul(&simple[r - 2]).mul(&pi_inv))
    } else {
        None
    };
    Generators {
        simple,
        affine,
        pi,
        pi_inv,
    }
}

/// A word `pi^a * s_{i_1} * ... * s_{i_l}` with letters in `Z/r`
/// (letter 0 is the affine reflection).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedWord {
    pub pi_power: i64,
    pub letters: Vec<usize>,
}

impl ReducedWord {
    pub fn evaluate(&self, r: usize) -> ExtAffineWeylElem {
        let gens = generators(r);
        let step = if self.pi_power >= 0 {
            &gens.pi
        } else {
            &gens.pi_inv
        };
        let mut acc = ExtAffineWeylElem::identity(r);
        for _ in 0..self.pi_power.unsigned_abs() {
            acc = acc.mul(step);
        }
        for &i in &self.letters {
            acc = acc.mul(gens.letter(i));
        }
        acc
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ls: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
        write!(f, "Pi^{} * S[{}]", self.pi_power, ls.join(","))
    }
}

/// Deterministic reduced word for `w`: the power of `pi` is the total
/// translation degree, and the letters are the lexicographically
/// smallest minimal word (greedy smallest descent).
pub fn reduced_word(w: &ExtAffineWeylElem) -> ReducedWord {
    let r = w.rank();
    let gens = generators(r);
    let a = w.pi_degree();
    // v := pi^{-a} * w lies in the degree-zero part.
    let mut v = w.clone();
    let step = if a >= 0 { &gens.pi_inv } else { &gens.pi };
    for _ in 0..a.unsigned_abs() {
        v = step.mul(&v);
    }
    debug_assert_eq!(v.pi_degree(), 0);
    let mut letters = Vec::new();
    let mut len = v.length();
    while len > 0 {
        let mut advanced = false;
        for i in 0..r {
            let cand = gens.letter(i).mul(&v);
            let cl = cand.length();
            if cl < len {
                letters.push(i);
                v = cand;
                len = cl;
                advanced = true;
                break;
            }
        }
        assert!(advanced, "no descent found; length formula inconsistent");
    }
    ReducedWord {
        pi_power: a,
        letters,
    }
}

/// Minimal-length representatives of the left cosets of the block
/// subgroup of `S_r` attached to a composition, with the unique longest
/// element among them.
pub struct CosetReps {
    /// Sorted by (length, permutation), so `reps[0]` is the identity.
    pub reps: Vec<ExtAffineWeylElem>,
    /// The unique maximal-length representative.
    pub longest: ExtAffineWeylElem,
}

/// A permutation is the minimal-length representative of its coset
/// exactly when it is increasing on every block of `alpha`.
pub fn min_coset_reps(alpha: &Composition, r: usize) -> Result<CosetReps, WeylError> {
    if alpha.total() != r {
        return Err(WeylError::RankMismatch {
            got: alpha.total(),
            expected: r,
        });
    }
    let blocks = alpha.block_of();
    let mut reps = Vec::new();
    let mut perm: Vec<u8> = (0..r as u8).collect();
    loop {
        let increasing = (1..r).all(|i| blocks[i - 1] != blocks[i] || perm[i - 1] < perm[i]);
        if increasing {
            reps.push(ExtAffineWeylElem::from_perm(perm.clone()));
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    reps.sort_by_key(|w| (w.length(), w.perm.clone()));
    let longest = reps
        .iter()
        .max_by_key(|w| w.length())
        .expect("nonempty")
        .clone();
    Ok(CosetReps { reps, longest })
}

/// All permutations of `0..r` in lexicographic order.
pub fn all_permutations(r: usize) -> Vec<Vec<u8>> {
    let mut perm: Vec<u8> = (0..r as u8).collect();
    let mut out = vec![perm.clone()];
    while next_permutation(&mut perm) {
        out.push(perm.clone());
    }
    out
}

fn next_permutation(p: &mut [u8]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Word-length oracle: breadth-first search over products of the
/// letters `s_0, ..., s_{r-1}` in the degree-zero subgroup, out to the
/// given radius. Lengths of general elements follow by stripping the
/// `pi`-power. Expensive; used to validate the closed formula.
pub struct LengthOracle {
    r: usize,
    dist: HashMap<ExtAffineWeylElem, u64>,
}

impl LengthOracle {
    pub fn new(r: usize, radius: u64) -> Self {
        let gens = generators(r);
        let mut dist = HashMap::new();
        let id = ExtAffineWeylElem::identity(r);
        dist.insert(id.clone(), 0);
        let mut frontier = vec![id];
        if r >= 2 {
            for d in 1..=radius {
                let mut next = Vec::new();
                for w in &frontier {
                    for i in 0..r {
                        let cand = w.mul(gens.letter(i));
                        if !dist.contains_key(&cand) {
                            dist.insert(cand.clone(), d);
                            next.push(cand);
                        }
                    }
                }
                frontier = next;
                if frontier.is_empty() {
                    break;
                }
            }
        }
        LengthOracle { r, dist }
    }

    /// BFS word length, or `None` if outside the explored radius.
    pub fn length(&self, w: &ExtAffineWeylElem) -> Option<u64> {
        let gens = generators(self.r);
        let a = w.pi_degree();
        let mut v = w.clone();
        let step = if a >= 0 { &gens.pi_inv } else { &gens.pi };
        for _ in 0..a.unsigned_abs() {
            v = step.mul(&v);
        }
        self.dist.get(&v).copied()
    }
}
