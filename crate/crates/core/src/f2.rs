//! Linear algebra over GF(2): packed bit vectors, echelon bases, boundary and
//! coboundary operators, and reduced Betti numbers.
//!
//! Vectors are dense `u64` words. Elimination always pivots on the lowest set
//! coordinate and processes inputs in the order given, so every rank, solution
//! and kernel basis is a deterministic function of the input order.

use std::fmt;
use std::ops::BitXorAssign;

use crate::complex::{PureComplex, Subcomplex};
use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for w in v.words.iter_mut() {
            *w = !0;
        }
        v.clear_tail();
        v
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Lowest set index.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn and_count(&self, other: &BitVec) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Parity of the overlap, i.e. the pairing of a cochain with a chain.
    pub fn dot(&self, other: &BitVec) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn and_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn or_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset_of(&self, other: &BitVec) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }
}

impl BitXorAssign<&BitVec> for BitVec {
    fn bitxor_assign(&mut self, rhs: &BitVec) {
        debug_assert_eq!(self.len, rhs.len);
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec[{}]{{", self.len)?;
        for (n, i) in self.iter_ones().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * WORD + tz);
            }
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
    }
}

/// A chain or cochain of a fixed dimension. Over F2 the face basis is
/// self-dual, so one type serves both `C_k` and `C^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitChain {
    pub dim: isize,
    pub bits: BitVec,
}

impl BitChain {
    pub fn zero(x: &PureComplex, dim: isize) -> Self {
        BitChain {
            dim,
            bits: BitVec::zeros(x.f(dim)),
        }
    }

    pub fn from_faces(x: &PureComplex, dim: isize, faces: impl IntoIterator<Item = usize>) -> Self {
        BitChain {
            dim,
            bits: BitVec::from_indices(x.f(dim), faces),
        }
    }

    /// The indicator `1_σ` of a single face.
    pub fn indicator(x: &PureComplex, dim: isize, face: usize) -> Self {
        Self::from_faces(x, dim, [face])
    }

    pub fn all(x: &PureComplex, dim: isize) -> Self {
        BitChain {
            dim,
            bits: BitVec::ones(x.f(dim)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }

    pub fn add(&mut self, other: &BitChain) {
        assert_eq!(self.dim, other.dim, "adding chains of different dimension");
        self.bits ^= &other.bits;
    }

    pub fn sum(mut self, other: &BitChain) -> BitChain {
        self.add(other);
        self
    }

    fn check(&self, x: &PureComplex) -> Result<()> {
        if self.dim < -1 || self.dim > x.dim() as isize || self.bits.len() != x.f(self.dim) {
            return Err(Error::DimensionMismatch {
                expected: format!("chain over {} faces of dim {}", x.f(self.dim), self.dim),
                found: format!("{} bits", self.bits.len()),
            });
        }
        Ok(())
    }
}

/// Dense GF(2) matrix stored as packed rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Matrix {
    cols: usize,
    rows: Vec<BitVec>,
}

/// One solution of `A x = b` together with a basis of `ker A`.
#[derive(Clone, Debug)]
pub struct Solution {
    pub x: BitVec,
    pub kernel: Vec<BitVec>,
}

#[derive(Clone, Debug)]
pub struct RankSolve {
    pub rank: usize,
    pub solution: Option<Solution>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2Matrix {
            cols,
            rows: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols));
        F2Matrix { cols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.rows[i].set(j, v)
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.iter_ones() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    /// `A x`.
    pub fn mul_vec(&self, x: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.cols);
        BitVec::from_indices(
            self.rows.len(),
            self.rows.iter().enumerate().filter(|(_, r)| r.dot(x)).map(|(i, _)| i),
        )
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for r in &self.rows {
            e.push(r.clone());
        }
        e.rank()
    }

    /// Solves `A x = b`. Columns are eliminated lowest index first.
    pub fn solve(&self, b: &BitVec) -> Result<Solution> {
        assert_eq!(b.len(), self.rows.len());
        let t = self.transpose();
        let mut e = Echelon::tracking(self.rows.len(), self.cols);
        for (j, col) in t.rows.into_iter().enumerate() {
            e.push_with_id(col, j);
        }
        let x = e.express(b).ok_or(Error::Inconsistent)?;
        Ok(Solution {
            x,
            kernel: e.kernel().to_vec(),
        })
    }
}

/// Rank of `a`, and when `b` is given, a solution of `a x = b`.
pub fn rank_and_solve(a: &F2Matrix, b: Option<&BitVec>) -> Result<RankSolve> {
    let rank = a.rank();
    let solution = b.map(|b| a.solve(b)).transpose()?;
    Ok(RankSolve { rank, solution })
}

/// Incrementally built row-echelon basis. Each stored vector's pivot is its
/// lowest set coordinate, and no two stored vectors share a pivot.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    rows: Vec<BitVec>,
    pivot_row: Vec<u32>,
    combos: Option<(usize, Vec<BitVec>)>,
    kernel: Vec<BitVec>,
}

const NO_ROW: u32 = u32::MAX;

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
            pivot_row: vec![NO_ROW; width],
            combos: None,
            kernel: Vec::new(),
        }
    }

    /// Like [`Echelon::new`], but remembers which inputs (identified by ids
    /// in `0..id_space`) combine to each basis vector.
    pub fn tracking(width: usize, id_space: usize) -> Self {
        Echelon {
            combos: Some((id_space, Vec::new())),
            ..Self::new(width)
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn basis(&self) -> &[BitVec] {
        &self.rows
    }

    /// Pivot coordinates in ascending order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.width).filter(|&p| self.pivot_row[p] != NO_ROW).collect()
    }

    pub fn is_pivot(&self, coord: usize) -> bool {
        self.pivot_row[coord] != NO_ROW
    }

    /// Kernel vectors (over input ids) found so far; only populated when tracking.
    pub fn kernel(&self) -> &[BitVec] {
        &self.kernel
    }

    pub fn push(&mut self, v: BitVec) -> bool {
        assert!(self.combos.is_none(), "tracking echelon needs push_with_id");
        let (v, _) = self.reduce_inner(v, None);
        self.insert(v, None)
    }

    pub fn push_with_id(&mut self, v: BitVec, id: usize) -> bool {
        let combo = self
            .combos
            .as_ref()
            .map(|(space, _)| BitVec::from_indices(*space, [id]));
        let (v, combo) = self.reduce_inner(v, combo);
        self.insert(v, combo)
    }

    fn insert(&mut self, v: BitVec, combo: Option<BitVec>) -> bool {
        match v.first_one() {
            Some(p) => {
                self.pivot_row[p] = self.rows.len() as u32;
                self.rows.push(v);
                if let (Some((_, combos)), Some(c)) = (self.combos.as_mut(), combo) {
                    combos.push(c);
                }
                true
            }
            None => {
                if let Some(c) = combo {
                    self.kernel.push(c);
                }
                false
            }
        }
    }

    fn reduce_inner(&self, mut v: BitVec, mut combo: Option<BitVec>) -> (BitVec, Option<BitVec>) {
        assert_eq!(v.len(), self.width);
        let mut from = 0;
        while let Some(p) = next_one_from(&v, from) {
            let r = self.pivot_row[p];
            if r == NO_ROW {
                return (v, combo);
            }
            v ^= &self.rows[r as usize];
            if let (Some(c), Some((_, combos))) = (combo.as_mut(), self.combos.as_ref()) {
                *c ^= &combos[r as usize];
            }
            from = p + 1;
        }
        (v, combo)
    }

    /// Residual of `v` after eliminating against the basis; zero iff `v` is
    /// in the span.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut v = v.clone();
        let mut from = 0;
        while let Some(p) = next_one_from(&v, from) {
            let r = self.pivot_row[p];
            if r != NO_ROW {
                v ^= &self.rows[r as usize];
            }
            from = p + 1;
        }
        v
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Input ids whose sum is `target`, if `target` is in the span.
    pub fn express(&self, target: &BitVec) -> Option<BitVec> {
        let (space, combos) = self.combos.as_ref().expect("express needs a tracking echelon");
        let mut v = target.clone();
        let mut acc = BitVec::zeros(*space);
        let mut from = 0;
        while let Some(p) = next_one_from(&v, from) {
            let r = self.pivot_row[p];
            if r == NO_ROW {
                return None;
            }
            v ^= &self.rows[r as usize];
            acc ^= &combos[r as usize];
            from = p + 1;
        }
        Some(acc)
    }
}

fn next_one_from(v: &BitVec, from: usize) -> Option<usize> {
    if from >= v.len() {
        return None;
    }
    let words = v.words();
    let mut wi = from / WORD;
    let mut w = words[wi] & (!0u64 << (from % WORD));
    loop {
        if w != 0 {
            return Some(wi * WORD + w.trailing_zeros() as usize);
        }
        wi += 1;
        if wi >= words.len() {
            return None;
        }
        w = words[wi];
    }
}

/// `∂_k` applied to a `k`-chain. `∂_0` lands on the empty simplex; `∂_{-1} = 0`.
pub fn boundary(x: &PureComplex, z: &BitChain) -> Result<BitChain> {
    z.check(x)?;
    if z.dim < 0 {
        return Err(Error::DimensionMismatch {
            expected: "chain of dimension >= 0".into(),
            found: format!("dimension {}", z.dim),
        });
    }
    let mut out = BitChain::zero(x, z.dim - 1);
    for t in z.support() {
        for &s in x.facets_of(z.dim, t) {
            out.bits.flip(s);
        }
    }
    Ok(out)
}

/// `d_k` applied to a `k`-cochain, the transpose of `∂_{k+1}`.
pub fn coboundary(x: &PureComplex, phi: &BitChain) -> Result<BitChain> {
    phi.check(x)?;
    if phi.dim >= x.dim() as isize {
        return Err(Error::DimensionMismatch {
            expected: format!("cochain of dimension < {}", x.dim()),
            found: format!("dimension {}", phi.dim),
        });
    }
    let mut out = BitChain::zero(x, phi.dim + 1);
    for s in phi.support() {
        for &t in x.cofaces_of(phi.dim, s) {
            out.bits.flip(t);
        }
    }
    Ok(out)
}

/// Boundary matrix with rows indexed by `X(k)` and columns by `X(k-1)`:
/// entry `(τ, σ)` is 1 iff `σ` is a facet of `τ`. Acting on column vectors
/// it is the coboundary `d_{k-1}`; its transpose is `∂_k`.
pub fn incidence_matrix(x: &PureComplex, k: isize) -> F2Matrix {
    assert!(k >= 0 && k <= x.dim() as isize);
    let cols = x.f(k - 1);
    let rows = (0..x.f(k))
        .map(|t| BitVec::from_indices(cols, x.facets_of(k, t).iter().copied()))
        .collect();
    F2Matrix::from_rows(cols, rows)
}

/// Rank of `∂_k` restricted to the `k`-faces of `sub` (all faces when `None`).
pub fn boundary_rank(x: &PureComplex, sub: Option<&Subcomplex>, k: isize) -> usize {
    if k < 0 || k > x.dim() as isize {
        return 0;
    }
    let width = x.f(k - 1);
    let mut e = Echelon::new(width);
    for t in 0..x.f(k) {
        if sub.is_some_and(|b| !b.contains(k, t)) {
            continue;
        }
        e.push(BitVec::from_indices(width, x.facets_of(k, t).iter().copied()));
    }
    e.rank()
}

/// Reduced F2 Betti number `β̃_k` of the augmented chain complex.
pub fn reduced_betti(x: &PureComplex, k: isize) -> usize {
    if k < -1 || k > x.dim() as isize {
        return 0;
    }
    x.f(k) - boundary_rank(x, None, k) - boundary_rank(x, None, k + 1)
}

/// Reduced Betti number of a subcomplex, computed by masking faces of `x`.
pub fn reduced_betti_sub(x: &PureComplex, sub: &Subcomplex, k: isize) -> usize {
    if k < -1 || k > x.dim() as isize {
        return 0;
    }
    sub.f(k) - boundary_rank(x, Some(sub), k) - boundary_rank(x, Some(sub), k + 1)
}

/// Solves `∂_{k+1} c = z` with `c` supported on `(k+1)`-faces of `sub`.
pub fn solve_boundary_in(x: &PureComplex, sub: &Subcomplex, z: &BitChain) -> Result<BitChain> {
    z.check(x)?;
    let k = z.dim;
    if k + 1 > x.dim() as isize {
        return Err(Error::DimensionMismatch {
            expected: format!("chain of dimension < {}", x.dim()),
            found: format!("dimension {k}"),
        });
    }
    let width = x.f(k);
    let mut e = Echelon::tracking(width, x.f(k + 1));
    for t in 0..x.f(k + 1) {
        if sub.contains(k + 1, t) {
            e.push_with_id(BitVec::from_indices(width, x.facets_of(k + 1, t).iter().copied()), t);
        }
    }
    let bits = e.express(&z.bits).ok_or(Error::Inconsistent)?;
    Ok(BitChain { dim: k + 1, bits })
}

/// Basis of the coboundary space `B^k = im d_{k-1}` in echelon form.
pub fn coboundary_space(x: &PureComplex, k: isize) -> Echelon {
    let width = x.f(k);
    let mut e = Echelon::new(width);
    if k >= 0 {
        for s in 0..x.f(k - 1) {
            e.push(BitVec::from_indices(width, x.cofaces_of(k - 1, s).iter().copied()));
        }
    }
    e
}

/// A basis of the cocycle space `Z^k = ker d_k`.
pub fn cocycle_basis(x: &PureComplex, k: isize) -> Vec<BitChain> {
    if k >= x.dim() as isize {
        return (0..x.f(k)).map(|i| BitChain::indicator(x, k, i)).collect();
    }
    let width = x.f(k + 1);
    let mut e = Echelon::tracking(width, x.f(k));
    for s in 0..x.f(k) {
        e.push_with_id(BitVec::from_indices(width, x.cofaces_of(k, s).iter().copied()), s);
    }
    e.kernel()
        .iter()
        .map(|bits| BitChain {
            dim: k,
            bits: bits.clone(),
        })
        .collect()
}
