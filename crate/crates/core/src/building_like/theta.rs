//! Load factors `λ(η)`, `θ_k` and `a_k`.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::family::FamilyTable;
use super::filling::{ChainSource, FillingFamily};
use super::group::{face_orbits, FaceTable};
use crate::complex::PureComplex;
use crate::error::{Error, Result};
use crate::expansion::{bound_gromov, bound_theta, BoundCertificate};
use crate::f2::BitVec;
use crate::rational::{binomial, Ratio};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThetaMethod {
    /// Direct summation over `S × X(k)`.
    Literal,
    /// Summation over `X(k)` and orbits of `X(k+1)`, valid for a family
    /// lifted over a group acting regularly on `S`.
    OrbitSymmetry,
}

#[derive(Clone, Debug)]
pub struct ThetaReport {
    pub k: usize,
    pub method: ThetaMethod,
    pub source: ChainSource,
    /// `λ(η)` for every `(k+1)`-face.
    pub lambda: Vec<Ratio>,
    /// `λ̃(η)`, when the subcomplex family was supplied.
    pub lambda_tilde: Option<Vec<Ratio>>,
    pub theta: Ratio,
    pub a_k: Option<u64>,
}

impl ThetaReport {
    fn new(k: usize, method: ThetaMethod, source: ChainSource, lambda: Vec<Ratio>) -> Self {
        let theta = lambda.iter().max().cloned().unwrap_or_default();
        ThetaReport {
            k,
            method,
            source,
            lambda,
            lambda_tilde: None,
            theta,
            a_k: None,
        }
    }

    pub fn with_a_k(mut self, a_k: u64) -> Self {
        self.a_k = Some(a_k);
        self
    }

    /// `1/θ_k`, or `None` when every chain misses `X(k+1)`.
    pub fn lower_bound(&self) -> Option<Ratio> {
        (self.theta != Ratio::default()).then(|| self.theta.recip())
    }

    pub fn certificate(&self) -> Option<BoundCertificate> {
        self.lower_bound()?;
        let label = format!("{}/{}", self.source.as_str(), method_str(self.method));
        Some(bound_theta(self.k, &self.theta, &label))
    }

    pub fn gromov_certificate(&self, n: usize) -> Option<BoundCertificate> {
        self.a_k.map(|a| bound_gromov(n, self.k, a))
    }

    /// `θ_k ≤ C(n+1,k+2)·a_k`, when `a_k` is known.
    pub fn within_gromov(&self, n: usize) -> Option<bool> {
        let a = self.a_k?;
        let cap = binomial(n as i64 + 1, self.k as i64 + 2) * BigInt::from(a);
        Some(self.theta <= Ratio::from_integer(cap))
    }

    /// `λ(η) ≤ λ̃(η)` everywhere, when `λ̃` is known.
    pub fn lambda_dominated(&self) -> Option<bool> {
        let lt = self.lambda_tilde.as_ref()?;
        Some(self.lambda.iter().zip(lt).all(|(a, b)| a <= b))
    }
}

fn method_str(m: ThetaMethod) -> &'static str {
    match m {
        ThetaMethod::Literal => "literal",
        ThetaMethod::OrbitSymmetry => "orbit-symmetry",
    }
}

fn check_k(x: &PureComplex, fam: &FillingFamily, k: usize) -> Result<()> {
    if k >= x.dim() {
        return Err(Error::InvalidArgument(format!("k={k} must be < n={}", x.dim())));
    }
    if k as isize > fam.kmax() {
        return Err(Error::MissingChain { s: 0, dim: k as isize });
    }
    Ok(())
}

fn add_vecs(mut a: Vec<u128>, b: Vec<u128>) -> Vec<u128> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// `acc[η] · D_{k+1} / (mult · c(η) · D_k)` for every `η`.
fn scale(x: &PureComplex, k: isize, acc: &[u128], mult: impl Fn(usize) -> u128) -> Vec<Ratio> {
    let dk = BigInt::from(x.weight_denominator(k));
    let dk1 = BigInt::from(x.weight_denominator(k + 1));
    acc.iter()
        .enumerate()
        .map(|(e, &a)| {
            let den = BigInt::from(mult(e)) * BigInt::from(x.cofacet_count(k + 1, e)) * &dk;
            Ratio::new(BigInt::from(a) * &dk1, den)
        })
        .collect()
}

/// `λ(η) = (1/(|S|·w(η))) Σ_{(s,τ): η ∈ supp c_{s,τ}} w(τ)`, summed literally.
/// With a family table, `λ̃` is computed from `η ∈ B_{s,τ}` as well.
pub fn theta_literal(
    x: &PureComplex,
    fam: &FillingFamily,
    k: usize,
    table: Option<&FamilyTable>,
) -> Result<ThetaReport> {
    check_k(x, fam, k)?;
    let kd = k as isize;
    let width = x.f(kd + 1);
    let ck = x.cofacet_counts(kd);
    let acc_of = |pick: &(dyn Fn(usize, usize) -> Result<BitVec> + Sync)| -> Result<Vec<u128>> {
        (0..fam.s_count())
            .into_par_iter()
            .map(|s| {
                let mut acc = vec![0u128; width];
                for (t, &c) in ck.iter().enumerate() {
                    for e in pick(s, t)?.iter_ones() {
                        acc[e] += c as u128;
                    }
                }
                Ok(acc)
            })
            .try_reduce(|| vec![0u128; width], |a, b| Ok(add_vecs(a, b)))
    };
    let s_count = fam.s_count() as u128;
    let acc = acc_of(&|s, t| Ok(fam.chain(s, kd, t)?.bits.clone()))?;
    let mut report = ThetaReport::new(k, ThetaMethod::Literal, fam.source(), scale(x, kd, &acc, |_| s_count));
    if let Some(tb) = table {
        let acc = acc_of(&|s, t| Ok(tb.get(s, kd, t).mask(kd + 1).clone()))?;
        report.lambda_tilde = Some(scale(x, kd, &acc, |_| s_count));
    }
    Ok(report)
}

/// `θ_k` for the family `c_{g,τ} = g⁻¹ c̃_{gτ}` with `g` ranging over the
/// group generated by `generators`, computed without enumerating the group:
/// `λ(η) = (1/(|Gη|·w(η))) Σ_τ w(τ)·|supp c̃_τ ∩ Gη|`.
pub fn theta_lifted(x: &PureComplex, base: &FillingFamily, generators: &[FaceTable], k: usize) -> Result<ThetaReport> {
    assert_eq!(
        base.s_count(),
        1,
        "orbit summation expects a family indexed by faces only"
    );
    check_k(x, base, k)?;
    let kd = k as isize;
    let orbits = face_orbits(x, generators, kd + 1);
    let mut orbit_of = vec![0usize; x.f(kd + 1)];
    for (o, members) in orbits.iter().enumerate() {
        for &e in members {
            orbit_of[e] = o;
        }
    }
    let mut per_orbit = vec![0u128; orbits.len()];
    for (t, &c) in x.cofacet_counts(kd).iter().enumerate() {
        for e in base.chain(0, kd, t)?.bits.iter_ones() {
            per_orbit[orbit_of[e]] += c as u128;
        }
    }
    let acc: Vec<u128> = orbit_of.iter().map(|&o| per_orbit[o]).collect();
    let lambda = scale(x, kd, &acc, |e| orbits[orbit_of[e]].len() as u128);
    Ok(ThetaReport::new(
        k,
        ThetaMethod::OrbitSymmetry,
        ChainSource::Lifted,
        lambda,
    ))
}

/// `a_k = max |Gη ∩ B_{s,τ}(k+1)|` over `η ∈ X(k+1)` and `(s,τ) ∈ S × X(k)`.
pub fn compute_a_k(x: &PureComplex, generators: &[FaceTable], table: &FamilyTable, k: usize) -> u64 {
    let kd = k as isize;
    assert!(kd <= table.kmax());
    let width = x.f(kd + 1);
    let orbits: Vec<BitVec> = face_orbits(x, generators, kd + 1)
        .into_iter()
        .map(|o| BitVec::from_indices(width, o))
        .collect();
    (0..table.s_count())
        .into_par_iter()
        .map(|s| {
            (0..x.f(kd))
                .flat_map(|t| {
                    let m = table.get(s, kd, t).mask(kd + 1);
                    orbits.iter().map(move |o| m.and_count(o) as u64)
                })
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::super::family::WholeComplex;
    use super::super::filling::build_filling;
    use super::super::group::{Perm, PermGroup};
    use super::*;
    use crate::corpus;
    use crate::rational::ratio;

    fn sym_tables(x: &PureComplex) -> Vec<FaceTable> {
        let n = x.vertex_count() as u32;
        let mut t: Vec<u32> = (0..n).collect();
        t.swap(0, 1);
        let c: Vec<u32> = (0..n).map(|i| (i + 1) % n).collect();
        vec![
            FaceTable::new(x, &Perm::new(t).unwrap()).unwrap(),
            FaceTable::new(x, &Perm::new(c).unwrap()).unwrap(),
        ]
    }

    #[test]
    fn a_k_on_simplex_is_binomial() {
        for n in 2..=4usize {
            let x = corpus::simplex(n);
            let table = FamilyTable::build(&x, &WholeComplex, 1, n as isize - 1);
            for k in 0..n {
                let want = crate::rational::binomial_u64(n + 1, k + 2);
                assert_eq!(compute_a_k(&x, &sym_tables(&x), &table, k), want);
            }
        }
    }

    #[test]
    fn cone_chains_on_tetrahedron() {
        let x = corpus::simplex(3);
        let table = FamilyTable::build(&x, &WholeComplex, 1, 2);
        let fam = build_filling(&x, &table).unwrap();
        let gens = sym_tables(&x);
        let lifted = theta_lifted(&x, &fam, &gens, 0).unwrap();
        assert_eq!(lifted.theta, ratio(3, 4));
        assert_eq!(lifted.lower_bound(), Some(ratio(4, 3)));
        let literal = theta_literal(&x, &fam, 0, Some(&table)).unwrap();
        assert_eq!(literal.theta, ratio(3, 2));
        assert_eq!(literal.lambda_dominated(), Some(true));
    }

    #[test]
    fn lifted_matches_literal_lift() {
        let x = corpus::simplex(3);
        let table = FamilyTable::build(&x, &WholeComplex, 1, 2);
        let fam = build_filling(&x, &table).unwrap();
        let gens = sym_tables(&x);
        let perms: Vec<Perm> = [vec![1, 0, 2, 3], vec![1, 2, 3, 0]]
            .into_iter()
            .map(|p| Perm::new(p).unwrap())
            .collect();
        let g = PermGroup::new(4, perms).unwrap();
        let full = super::super::filling::lift_over_group(&x, &fam, g.elements().unwrap()).unwrap();
        for k in 0..3 {
            let a = theta_lifted(&x, &fam, &gens, k).unwrap();
            let b = theta_literal(&x, &full, k, None).unwrap();
            assert_eq!(a.lambda, b.lambda, "k={k}");
        }
    }

    #[test]
    fn theta_within_gromov_bound() {
        let x = corpus::simplex(3);
        let table = FamilyTable::build(&x, &WholeComplex, 1, 2);
        let fam = build_filling(&x, &table).unwrap();
        for k in 0..3 {
            let a = compute_a_k(&x, &sym_tables(&x), &table, k);
            let r = theta_literal(&x, &fam, k, None).unwrap().with_a_k(a);
            assert_eq!(r.within_gromov(3), Some(true));
            let g = r.gromov_certificate(3).unwrap();
            assert!(g.value <= r.lower_bound().unwrap());
        }
    }

    #[test]
    fn top_dimension_rejected() {
        let x = corpus::simplex(2);
        let table = FamilyTable::build(&x, &WholeComplex, 1, 1);
        let fam = build_filling(&x, &table).unwrap();
        assert!(theta_literal(&x, &fam, 2, None).is_err());
    }
}
