//! Weighted norms, coset norms and the exact coboundary expansion constant,
//! plus the closed-form bounds that can be compared against it.
//!
//! All norms in dimension `k` share the denominator `C(n+1,k+1)·f_n`, so the
//! search works with integer numerators (sums of cofacet counts) and only
//! builds a rational for the final answer.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{PureComplex, Simplex};
use crate::error::{Error, Result};
use crate::f2::{self, BitChain, BitVec};
use crate::rational::{binomial, fmt_ratio, int, ratio, serde_ratio, Ratio};

pub const DEFAULT_BUDGET: u64 = 1 << 26;

/// Sum of cofacet counts over the support: the norm times the dimension's
/// weight denominator.
pub fn weighted_count(x: &PureComplex, phi: &BitChain) -> u64 {
    let c = x.cofacet_counts(phi.dim);
    phi.support().map(|i| c[i]).sum()
}

/// `‖φ‖ = Σ_{σ ∈ supp φ} w(σ)`.
pub fn norm(x: &PureComplex, phi: &BitChain) -> Ratio {
    ratio(weighted_count(x, phi), x.weight_denominator(phi.dim))
}

fn within_budget(bits: usize, budget: u64) -> Result<()> {
    if bits >= 64 || (1u64 << bits) > budget {
        return Err(Error::BudgetExceeded {
            bits: bits as u32,
            cap: budget,
        });
    }
    Ok(())
}

/// The coboundary space `B^k` and a complement in `C^k`.
///
/// The complement is spanned by unit vectors on the non-pivot coordinates of
/// an echelon basis of `B^k`, so cochains supported there are exactly one
/// representative per coset of `C^k / B^k`.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    k: isize,
    basis: Vec<Vec<usize>>,
    complement: Vec<usize>,
    len: usize,
}

impl CosetSpace {
    pub fn new(x: &PureComplex, k: isize) -> Self {
        let e = f2::coboundary_space(x, k);
        let basis = e.basis().iter().map(|b| b.iter_ones().collect()).collect();
        let complement = (0..x.f(k)).filter(|&i| !e.is_pivot(i)).collect();
        CosetSpace {
            k,
            basis,
            complement,
            len: x.f(k),
        }
    }

    /// `dim B^k = rank d_{k-1}`.
    pub fn boundary_rank(&self) -> usize {
        self.basis.len()
    }

    /// `dim C^k / B^k`.
    pub fn quotient_dim(&self) -> usize {
        self.complement.len()
    }

    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    /// The coset representative selected by `mask` over the complement.
    pub fn representative(&self, mask: u64) -> BitChain {
        let bits = BitVec::from_indices(
            self.len,
            (0..self.complement.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| self.complement[i]),
        );
        BitChain { dim: self.k, bits }
    }

    /// Minimum weighted count over the coset of `phi`, with the first
    /// minimizer in Gray-code order.
    fn min_in_coset(&self, counts: &[u64], phi: &BitVec) -> (u64, BitVec) {
        let mut cur = phi.clone();
        let mut n: u64 = cur.iter_ones().map(|i| counts[i]).sum();
        let mut best = (n, cur.clone());
        for t in 1u64..(1u64 << self.basis.len()) {
            let flip = t.trailing_zeros() as usize;
            for &i in &self.basis[flip] {
                if cur.get(i) {
                    n -= counts[i];
                } else {
                    n += counts[i];
                }
                cur.flip(i);
            }
            if n < best.0 {
                best = (n, cur.clone());
            }
        }
        best
    }
}

/// `‖[φ]‖ = min_ψ ‖φ + dψ‖` together with a minimizing representative.
pub fn coset_norm(x: &PureComplex, phi: &BitChain, budget: u64) -> Result<(Ratio, BitChain)> {
    if phi.bits.len() != x.f(phi.dim) {
        return Err(Error::DimensionMismatch {
            expected: format!("{} bits", x.f(phi.dim)),
            found: format!("{} bits", phi.bits.len()),
        });
    }
    let cs = CosetSpace::new(x, phi.dim);
    within_budget(cs.boundary_rank(), budget)?;
    let (n, bits) = cs.min_in_coset(x.cofacet_counts(phi.dim), &phi.bits);
    Ok((ratio(n, x.weight_denominator(phi.dim)), BitChain { dim: phi.dim, bits }))
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Cap on `2^r` for each of the two nested enumerations.
    pub budget: u64,
    /// Abandon cosets that provably cannot beat the current best.
    pub prune: bool,
    /// The coset space is split into `2^shard_bits` shards searched in
    /// parallel. Results do not depend on this value.
    pub shard_bits: u32,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            prune: true,
            shard_bits: 6,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpansionResult {
    pub k: usize,
    #[serde(with = "serde_ratio")]
    pub value: Ratio,
    #[serde(skip)]
    pub witness: BitChain,
    /// Number of nonzero cosets enumerated.
    pub search_size: u64,
    pub exact: bool,
}

impl ExpansionResult {
    pub fn witness_faces<'a>(&self, x: &'a PureComplex) -> Vec<&'a Simplex> {
        self.witness.support().map(|i| x.face(self.k as isize, i)).collect()
    }
}

/// Candidate ratio `d / n` (in integer units) tagged with its coset mask.
#[derive(Clone, Copy, Debug)]
struct Candidate {
    d: u64,
    n: u64,
    mask: u64,
}

impl Candidate {
    const NONE: Candidate = Candidate {
        d: 1,
        n: 0,
        mask: u64::MAX,
    };

    /// Strictly better: smaller ratio, or equal ratio and smaller mask.
    fn beats(&self, other: &Candidate) -> bool {
        let lhs = self.d as u128 * other.n as u128;
        let rhs = other.d as u128 * self.n as u128;
        lhs < rhs || (lhs == rhs && self.mask < other.mask)
    }
}

/// Exact `h_k(X) = min { ‖d φ‖ / ‖[φ]‖ : φ ∉ B^k }` by exhaustive coset
/// enumeration. The witness is the minimum-norm representative of the
/// lowest-mask optimal coset, so it does not depend on pruning or sharding.
pub fn h_exact(x: &PureComplex, k: usize, opts: SearchOptions) -> Result<ExpansionResult> {
    if k >= x.dim() {
        return Err(Error::InvalidArgument(format!(
            "h_k needs k < n (k={k}, n={})",
            x.dim()
        )));
    }
    let kd = k as isize;
    let cs = CosetSpace::new(x, kd);
    let q = cs.quotient_dim();
    let r = cs.boundary_rank();
    within_budget(q, opts.budget)?;
    within_budget(r, opts.budget)?;
    if q == 0 {
        return Err(Error::InvalidArgument(format!(
            "C^{k} = B^{k}: no non-coboundary cochains"
        )));
    }

    let shard_bits = (opts.shard_bits as usize).min(q);
    let low = q - shard_bits;
    let ck = x.cofacet_counts(kd);
    let ck1 = x.cofacet_counts(kd + 1);

    let best = (0u64..(1u64 << shard_bits))
        .into_par_iter()
        .map(|shard| search_shard(x, &cs, ck, ck1, shard, low, opts.prune))
        .reduce(|| Candidate::NONE, |a, b| if b.beats(&a) { b } else { a });

    let rep = cs.representative(best.mask);
    let (_, witness) = cs.min_in_coset(ck, &rep.bits);
    let value = Ratio::new(
        BigInt::from(best.d) * x.weight_denominator(kd),
        BigInt::from(best.n) * x.weight_denominator(kd + 1),
    );
    Ok(ExpansionResult {
        k,
        value,
        witness: BitChain { dim: kd, bits: witness },
        search_size: (1u64 << q) - 1,
        exact: true,
    })
}

fn search_shard(
    x: &PureComplex,
    cs: &CosetSpace,
    ck: &[u64],
    ck1: &[u64],
    shard: u64,
    low: usize,
    prune: bool,
) -> Candidate {
    let kd = cs.k;
    let mut phi = BitVec::zeros(cs.len);
    let mut dphi = BitVec::zeros(x.f(kd + 1));
    let mut pn: u64 = 0;
    let mut dn: u64 = 0;
    let flip = |i: usize, phi: &mut BitVec, dphi: &mut BitVec, pn: &mut u64, dn: &mut u64| {
        if phi.get(i) {
            *pn -= ck[i];
        } else {
            *pn += ck[i];
        }
        phi.flip(i);
        for &t in x.cofaces_of(kd, i) {
            if dphi.get(t) {
                *dn -= ck1[t];
            } else {
                *dn += ck1[t];
            }
            dphi.flip(t);
        }
    };
    for b in 0..cs.complement.len() - low {
        if shard >> b & 1 == 1 {
            flip(cs.complement[low + b], &mut phi, &mut dphi, &mut pn, &mut dn);
        }
    }

    let mut best = Candidate::NONE;
    let mut scratch = BitVec::zeros(cs.len);
    let high = shard << low;
    for t in 0u64..(1u64 << low) {
        if t > 0 {
            let b = t.trailing_zeros() as usize;
            flip(cs.complement[b], &mut phi, &mut dphi, &mut pn, &mut dn);
        }
        let mask = high | (t ^ (t >> 1));
        if mask == 0 {
            continue;
        }
        let upper = Candidate { d: dn, n: pn, mask };
        if prune && !upper.beats(&best) {
            continue;
        }
        if dn == 0 {
            // A cocycle outside B^k: the ratio is 0 whatever the coset norm.
            if upper.beats(&best) {
                best = upper;
            }
            continue;
        }
        // Inner minimization over B^k with incremental norm updates.
        scratch.clone_from(&phi);
        let mut n = pn;
        let mut min = pn;
        let mut abandoned = false;
        for u in 1u64..(1u64 << cs.basis.len()) {
            let bf = u.trailing_zeros() as usize;
            for &i in &cs.basis[bf] {
                if scratch.get(i) {
                    n -= ck[i];
                } else {
                    n += ck[i];
                }
                scratch.flip(i);
            }
            if n < min {
                min = n;
                if prune && !(Candidate { d: dn, n: min, mask }).beats(&best) {
                    abandoned = true;
                    break;
                }
            }
        }
        if abandoned {
            continue;
        }
        let cand = Candidate { d: dn, n: min, mask };
        if cand.beats(&best) {
            best = cand;
        }
    }
    best
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundName {
    SimplexBound,
    Gromov,
    Epsilon1,
    Epsilon2,
    Expcolor,
    Theta,
    SingletonUpper,
    SampledUpper,
    BlockCochainUpper,
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

/// A named bound on `h_k` with the quantities it was computed from.
#[derive(Clone, Debug, Serialize)]
pub struct BoundCertificate {
    pub name: BoundName,
    pub side: Side,
    pub k: usize,
    #[serde(with = "serde_ratio")]
    pub value: Ratio,
    pub inputs: BTreeMap<String, String>,
}

impl BoundCertificate {
    fn new(name: BoundName, side: Side, k: usize, value: Ratio) -> Self {
        BoundCertificate {
            name,
            side,
            k,
            value,
            inputs: BTreeMap::new(),
        }
    }

    pub fn with_input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    /// Whether `h` is on the certified side of this bound.
    pub fn admits(&self, h: &Ratio) -> bool {
        match self.side {
            Side::Lower => &self.value <= h,
            Side::Upper => &self.value >= h,
        }
    }
}

fn check_range(n: usize, k: usize) {
    assert!(k < n, "bound needs 0 <= k <= n-1 (n={n}, k={k})");
}

/// `h_k(Δ_n) ≥ (n+1)/(n-k)`.
pub fn bound_simplex(n: usize, k: usize) -> BoundCertificate {
    check_range(n, k);
    BoundCertificate::new(
        BoundName::SimplexBound,
        Side::Lower,
        k,
        ratio(n as u64 + 1, (n - k) as u64),
    )
    .with_input("n", n)
}

/// `ε₁(n,k) = 1 / (C(n+1,k+2)·C(n+k+2,k+2))`, valid for basis-transitive
/// matroids of rank `n+1`.
pub fn bound_epsilon1(n: usize, k: usize) -> BoundCertificate {
    check_range(n, k);
    let (n, k) = (n as i64, k as i64);
    let den = binomial(n + 1, k + 2) * binomial(n + k + 2, k + 2);
    BoundCertificate::new(
        BoundName::Epsilon1,
        Side::Lower,
        k as usize,
        Ratio::new(BigInt::one(), den),
    )
    .with_input("n", n)
    .with_input("a_k_bound", binomial(n + k + 2, k + 2))
}

/// `ε₂(n,k) = 1 / (C(n+1,k+2)²·ω)` for spherical buildings of rank `n+1`
/// whose Weyl group has order `ω`.
pub fn bound_epsilon2(n: usize, k: usize, omega: u64) -> BoundCertificate {
    check_range(n, k);
    assert!(omega >= 1);
    let c = binomial(n as i64 + 1, k as i64 + 2);
    let den = &c * &c * omega;
    BoundCertificate::new(BoundName::Epsilon2, Side::Lower, k, Ratio::new(BigInt::one(), den))
        .with_input("n", n)
        .with_input("omega", omega)
}

/// `Σ_{j=0}^{k+1} (2(m-1)/m)^j · C(n-j, n-k-1)`.
pub fn partition_sum(n: usize, k: usize, m: usize) -> Ratio {
    assert!(m >= 1);
    let base = ratio(2 * (m as i64 - 1), m as i64);
    let (n, k) = (n as i64, k as i64);
    let mut pow = int(1);
    let mut acc = Ratio::zero();
    for j in 0..=k + 1 {
        acc += &pow * Ratio::from_integer(binomial(n - j, n - k - 1));
        pow *= &base;
    }
    acc
}

/// Lower bound for partition matroids:
/// `C(n+1,k+1) / Σ_{j=0}^{k+1} (2(m-1)/m)^j C(n-j, n-k-1)`.
pub fn bound_expcolor(n: usize, k: usize, m: usize) -> BoundCertificate {
    check_range(n, k);
    let value = Ratio::from_integer(binomial(n as i64 + 1, k as i64 + 1)) / partition_sum(n, k, m);
    BoundCertificate::new(BoundName::Expcolor, Side::Lower, k, value)
        .with_input("n", n)
        .with_input("m", m)
}

/// `h_k ≥ 1 / (C(n+1,k+2)·a_k)` for building-like complexes.
pub fn bound_gromov(n: usize, k: usize, a_k: u64) -> BoundCertificate {
    check_range(n, k);
    let den = binomial(n as i64 + 1, k as i64 + 2) * a_k;
    BoundCertificate::new(BoundName::Gromov, Side::Lower, k, Ratio::new(BigInt::one(), den))
        .with_input("n", n)
        .with_input("a_k", a_k)
}

/// `h_k ≥ 1/θ_k` from a filling family.
pub fn bound_theta(k: usize, theta: &Ratio, source: &str) -> BoundCertificate {
    BoundCertificate::new(BoundName::Theta, Side::Lower, k, theta.recip())
        .with_input("theta", fmt_ratio(theta))
        .with_input("family", source)
}

/// `h_k ≤ value`, witnessed by an explicit cochain on a partition matroid.
pub fn bound_block_cochain(k: usize, value: Ratio) -> BoundCertificate {
    BoundCertificate::new(BoundName::BlockCochainUpper, Side::Upper, k, value)
}

/// `min_σ ‖d 1_σ‖ / ‖[1_σ]‖` over `k`-faces: an upper bound on `h_k`.
pub fn singleton_upper_bound(x: &PureComplex, k: usize, budget: u64) -> Result<BoundCertificate> {
    if k >= x.dim() {
        return Err(Error::InvalidArgument(format!("k={k} must be < n={}", x.dim())));
    }
    let kd = k as isize;
    let cs = CosetSpace::new(x, kd);
    within_budget(cs.boundary_rank(), budget)?;
    let ck = x.cofacet_counts(kd);
    let mut best: Option<(Ratio, usize)> = None;
    for s in 0..x.f(kd) {
        let ind = BitChain::indicator(x, kd, s);
        let d = norm(x, &f2::coboundary(x, &ind)?);
        let (n, _) = cs.min_in_coset(ck, &ind.bits);
        debug_assert!(n > 0, "1_σ is never a coboundary below the top dimension");
        let r = d / ratio(n, x.weight_denominator(kd));
        if best.as_ref().is_none_or(|(b, _)| &r < b) {
            best = Some((r, s));
        }
    }
    let (value, s) = best.expect("complex has k-faces");
    Ok(BoundCertificate::new(BoundName::SingletonUpper, Side::Upper, k, value)
        .with_input("face", format!("{:?}", x.face_labels(x.face(kd, s)))))
}

/// Best `‖dφ‖ / ‖[φ]‖` found by greedy single-face flips from `restarts`
/// random starting cochains: an upper bound on `h_k`.
pub fn sampled_upper_bound(
    x: &PureComplex,
    k: usize,
    restarts: usize,
    seed: u64,
    budget: u64,
) -> Result<BoundCertificate> {
    use rand::{Rng, SeedableRng};
    if k >= x.dim() {
        return Err(Error::InvalidArgument(format!("k={k} must be < n={}", x.dim())));
    }
    let kd = k as isize;
    let cs = CosetSpace::new(x, kd);
    within_budget(cs.boundary_rank(), budget)?;
    let ck = x.cofacet_counts(kd);
    let ck1 = x.cofacet_counts(kd + 1);
    let (dk, dk1) = (x.weight_denominator(kd) as u128, x.weight_denominator(kd + 1) as u128);
    // ratio numerator/denominator as cross-multiplied integers
    let eval = |phi: &BitVec, d: u64| -> Option<(u128, u128)> {
        let (c, _) = cs.min_in_coset(ck, phi);
        (c > 0).then(|| (d as u128 * dk, c as u128 * dk1))
    };
    let less = |a: (u128, u128), b: (u128, u128)| a.0 * b.1 < b.0 * a.1;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let f = x.f(kd);
    let mut best: Option<((u128, u128), BitVec)> = None;
    for _ in 0..restarts {
        let mut phi = BitVec::zeros(f);
        let size = rng.random_range(1..=f.div_ceil(2));
        for _ in 0..size {
            phi.set(rng.random_range(0..f), true);
        }
        let mut dphi = f2::coboundary(
            x,
            &BitChain {
                dim: kd,
                bits: phi.clone(),
            },
        )?
        .bits;
        let mut dcount: u64 = dphi.iter_ones().map(|i| ck1[i]).sum();
        let Some(mut cur) = eval(&phi, dcount) else { continue };
        loop {
            let mut step: Option<((u128, u128), usize, u64)> = None;
            for i in 0..f {
                let mut d = dcount;
                for &e in x.cofaces_of(kd, i) {
                    if dphi.get(e) {
                        d -= ck1[e];
                    } else {
                        d += ck1[e];
                    }
                }
                phi.flip(i);
                if let Some(r) = eval(&phi, d) {
                    if less(r, step.map_or(cur, |s| s.0)) {
                        step = Some((r, i, d));
                    }
                }
                phi.flip(i);
            }
            let Some((r, i, d)) = step else { break };
            phi.flip(i);
            for &e in x.cofaces_of(kd, i) {
                dphi.flip(e);
            }
            dcount = d;
            cur = r;
        }
        if best.as_ref().is_none_or(|(b, _)| less(cur, *b)) {
            best = Some((cur, phi));
        }
    }
    let Some(((num, den), phi)) = best else {
        return singleton_upper_bound(x, k, budget);
    };
    let value = Ratio::new(BigInt::from(num), BigInt::from(den));
    Ok(BoundCertificate::new(BoundName::SampledUpper, Side::Upper, k, value)
        .with_input("restarts", restarts)
        .with_input("seed", seed)
        .with_input("support", phi.count_ones()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn norms() {
        let x = corpus::simplex(2);
        assert_eq!(norm(&x, &BitChain::zero(&x, 0)), int(0));
        assert_eq!(norm(&x, &BitChain::indicator(&x, 0, 1)), ratio(1, 3));
        for k in 0..=2 {
            assert_eq!(norm(&x, &BitChain::all(&x, k)), int(1));
        }
    }

    #[test]
    fn four_cycle_vertex_coboundary_norm() {
        let x = corpus::partition(1, 2);
        let d = f2::coboundary(&x, &BitChain::indicator(&x, 0, 0)).unwrap();
        assert_eq!(d.bits.count_ones(), 2);
        assert_eq!(norm(&x, &d), ratio(1, 2));
    }

    #[test]
    fn coset_norms_on_triangle() {
        let x = corpus::simplex(2);
        let v = BitChain::indicator(&x, 0, 0);
        assert_eq!(coset_norm(&x, &v, DEFAULT_BUDGET).unwrap().0, ratio(1, 3));
        let uv = BitChain::from_faces(&x, 0, [0, 1]);
        let (n, rep) = coset_norm(&x, &uv, DEFAULT_BUDGET).unwrap();
        assert_eq!(n, ratio(1, 3));
        assert_eq!(rep, BitChain::indicator(&x, 0, 2));
        let all = BitChain::all(&x, 0);
        assert_eq!(coset_norm(&x, &all, DEFAULT_BUDGET).unwrap().0, int(0));
    }

    #[test]
    fn coset_norm_budget() {
        let x = corpus::simplex(4);
        let phi = BitChain::indicator(&x, 2, 0);
        let err = coset_norm(&x, &phi, 8).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { bits: 6, cap: 8 });
    }

    #[test]
    fn coset_representatives_are_unique() {
        let x = corpus::partition(2, 2);
        let cs = CosetSpace::new(&x, 1);
        let e = f2::coboundary_space(&x, 1);
        assert_eq!(cs.boundary_rank() + cs.quotient_dim(), x.f(1));
        let mut seen = std::collections::HashSet::new();
        for mask in 0..(1u64 << cs.quotient_dim()) {
            let rep = cs.representative(mask);
            // Distinct representatives differ by a non-coboundary.
            assert!(seen.insert(e.reduce(&rep.bits)));
        }
    }

    #[test]
    fn sampled_upper_bound_dominates_exact() {
        for (x, k) in [
            (corpus::simplex(3), 0),
            (corpus::partition(2, 2), 1),
            (corpus::rp2(), 0),
        ] {
            let h = h_exact(&x, k, SearchOptions::default()).unwrap().value;
            let a = sampled_upper_bound(&x, k, 8, 7, DEFAULT_BUDGET).unwrap();
            let b = sampled_upper_bound(&x, k, 8, 7, DEFAULT_BUDGET).unwrap();
            assert_eq!(a.value, b.value);
            assert!(a.value >= h);
        }
    }

    #[test]
    fn small_exact_values() {
        let opts = SearchOptions::default();
        assert_eq!(h_exact(&corpus::simplex(2), 0, opts).unwrap().value, int(2));
        assert_eq!(h_exact(&corpus::simplex(2), 1, opts).unwrap().value, int(3));
        assert_eq!(h_exact(&corpus::simplex(3), 0, opts).unwrap().value, ratio(4, 3));
        assert_eq!(h_exact(&corpus::partition(1, 2), 0, opts).unwrap().value, int(1));
        let rp2 = h_exact(&corpus::rp2(), 1, opts).unwrap();
        assert_eq!(rp2.value, int(0));
        assert!(f2::coboundary(&corpus::rp2(), &rp2.witness).unwrap().is_zero());
    }

    #[test]
    fn h_exact_rejects_top_dimension_and_budget() {
        let x = corpus::simplex(2);
        assert!(matches!(
            h_exact(&x, 2, SearchOptions::default()),
            Err(Error::InvalidArgument(_))
        ));
        let opts = SearchOptions {
            budget: 2,
            ..Default::default()
        };
        assert!(matches!(
            h_exact(&corpus::simplex(4), 1, opts),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn witness_attains_value() {
        for x in corpus::small_corpus() {
            for k in 0..x.dim() {
                let r = h_exact(&x, k, SearchOptions::default()).unwrap();
                let d = norm(&x, &f2::coboundary(&x, &r.witness).unwrap());
                let (n, _) = coset_norm(&x, &r.witness, DEFAULT_BUDGET).unwrap();
                assert!(n > int(0));
                assert_eq!(d / n, r.value);
            }
        }
    }

    #[test]
    fn singleton_bounds() {
        let c = singleton_upper_bound(&corpus::simplex(2), 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(c.value, int(3));
        let c = singleton_upper_bound(&corpus::simplex(3), 0, DEFAULT_BUDGET).unwrap();
        assert_eq!(c.value, int(2));
        assert_eq!(c.side, Side::Upper);
    }

    #[test]
    fn closed_form_bounds() {
        assert_eq!(bound_simplex(3, 0).value, ratio(4, 3));
        for n in 1..6 {
            assert_eq!(bound_simplex(n, n - 1).value, int(n as i64 + 1));
        }
        assert_eq!(bound_simplex(2, 0).value, ratio(3, 2));
        assert_eq!(bound_epsilon1(1, 0).value, ratio(1, 3));
        assert_eq!(bound_epsilon1(2, 0).value, ratio(1, 18));
        assert_eq!(bound_epsilon2(1, 0, 6).value, ratio(1, 6));
        assert_eq!(bound_epsilon2(2, 1, 24).value, ratio(1, 24));
        assert_eq!(bound_epsilon2(3, 0, 1).value, ratio(1, 36));
        for n in 1..6usize {
            for k in 0..n {
                assert_eq!(bound_expcolor(n, k, 1).value, bound_simplex(n, k).value);
                assert_eq!(bound_expcolor(n, k, 2).value, int(1));
                let a_k = binomial(n as i64 + k as i64 + 2, k as i64 + 2);
                let a_k = u64::try_from(a_k).unwrap();
                assert_eq!(bound_epsilon1(n, k).value, bound_gromov(n, k, a_k).value);
            }
            for m in 1..5usize {
                let mut denom = Ratio::zero();
                let base = ratio(2 * (m as i64 - 1), m as i64);
                let mut p = int(1);
                for _ in 0..=n {
                    denom += &p;
                    p *= &base;
                }
                assert_eq!(bound_expcolor(n, n - 1, m).value, int(n as i64 + 1) / denom);
            }
        }
    }

    #[test]
    fn admits_respects_side() {
        let lo = bound_simplex(3, 0);
        assert!(lo.admits(&ratio(4, 3)));
        assert!(!lo.admits(&int(1)));
    }
}
