//! Filling chains `c_{s,τ}` and the contraction operator `ι_s`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::family::FamilyTable;
use super::group::{FaceTable, Perm};
use crate::complex::PureComplex;
use crate::error::{Error, Result};
use crate::f2::{self, BitChain, BitVec};

/// Where a filling family came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainSource {
    /// Solved by elimination inside each `B_{s,τ}`.
    EngineBuilt,
    /// A closed-form construction indexed by faces only.
    Explicit,
    /// An explicit family transported over a group: `c_{g,τ} = g⁻¹ c̃_{gτ}`.
    Lifted,
}

impl ChainSource {
    pub fn as_str(&self) -> &'static str {
        match self {
            ChainSource::EngineBuilt => "engine-built",
            ChainSource::Explicit => "explicit",
            ChainSource::Lifted => "lifted",
        }
    }
}

/// Chains `c_{s,τ} ∈ C_{k+1}` for every `s` and every face `τ` with
/// `dim τ ≤ kmax`.
#[derive(Clone, Debug)]
pub struct FillingFamily {
    kmax: isize,
    source: ChainSource,
    chains: Vec<Vec<Vec<BitChain>>>,
}

impl FillingFamily {
    /// `chains[s][dim + 1][τ]`.
    pub fn from_chains(source: ChainSource, chains: Vec<Vec<Vec<BitChain>>>) -> Self {
        let kmax = chains.first().map_or(-2, |c| c.len() as isize - 2);
        assert!(chains.iter().all(|c| c.len() as isize - 2 == kmax));
        FillingFamily { kmax, source, chains }
    }

    pub fn kmax(&self) -> isize {
        self.kmax
    }

    pub fn source(&self) -> ChainSource {
        self.source
    }

    pub fn s_count(&self) -> usize {
        self.chains.len()
    }

    pub fn chain(&self, s: usize, dim: isize, tau: usize) -> Result<&BitChain> {
        self.chains
            .get(s)
            .and_then(|c| c.get((dim + 1) as usize))
            .and_then(|c| c.get(tau))
            .ok_or(Error::MissingChain { s, dim })
    }

    pub fn chain_mut(&mut self, s: usize, dim: isize, tau: usize) -> Option<&mut BitChain> {
        self.chains.get_mut(s)?.get_mut((dim + 1) as usize)?.get_mut(tau)
    }

    /// Total support size `Σ_τ |supp c_{s,τ}|` over faces of dimension `dim`.
    pub fn support_total(&self, s: usize, dim: isize) -> Result<usize> {
        let level = self
            .chains
            .get(s)
            .and_then(|c| c.get((dim + 1) as usize))
            .ok_or(Error::MissingChain { s, dim })?;
        Ok(level.iter().map(|c| c.bits.count_ones()).sum())
    }
}

fn fill_one_s(x: &PureComplex, table: &FamilyTable, s: usize) -> Result<Vec<Vec<BitChain>>> {
    let base = table.get(s, -1, 0);
    let v = base
        .mask(0)
        .first_one()
        .ok_or(Error::FillFailed { s, tau: Vec::new() })?;
    let mut levels = vec![vec![BitChain::indicator(x, 0, v)]];
    for k in 0..=table.kmax() {
        let prev = &levels[k as usize];
        let mut cur = Vec::with_capacity(x.f(k));
        for t in 0..x.f(k) {
            let mut z = BitChain::indicator(x, k, t);
            for &i in x.facets_of(k, t) {
                z.add(&prev[i]);
            }
            debug_assert!(f2::boundary(x, &z)?.is_zero(), "z must be a cycle");
            let c = f2::solve_boundary_in(x, table.get(s, k, t), &z).map_err(|_| Error::FillFailed {
                s,
                tau: x.face(k, t).vertices().to_vec(),
            })?;
            cur.push(c);
        }
        levels.push(cur);
    }
    Ok(levels)
}

/// Builds `c_{s,τ}` by induction on `dim τ`: the base chain is the smallest
/// vertex of `B_{s,*}`, and each later chain solves
/// `∂c = τ + Σ_i c_{s,τ_i}` inside `B_{s,τ}`.
pub fn build_filling(x: &PureComplex, table: &FamilyTable) -> Result<FillingFamily> {
    assert!(table.kmax() < x.dim() as isize, "fillings exist for dim τ ≤ n-1");
    let chains = (0..table.s_count())
        .into_par_iter()
        .map(|s| fill_one_s(x, table, s))
        .collect::<Result<Vec<_>>>()?;
    Ok(FillingFamily::from_chains(ChainSource::EngineBuilt, chains))
}

/// A face at which a filling family fails its defining identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FillingViolation {
    pub s: usize,
    pub dim: isize,
    pub tau: usize,
    pub reason: &'static str,
}

/// Checks `∂c_{s,τ} = τ + Σ_i c_{s,τ_i}` for every chain, and when a family
/// table is given, `supp c_{s,τ} ⊆ B_{s,τ}(k+1)`.
pub fn check_filling_identity(
    x: &PureComplex,
    fam: &FillingFamily,
    table: Option<&FamilyTable>,
) -> Option<FillingViolation> {
    (0..fam.s_count()).into_par_iter().find_map_first(|s| {
        for k in -1..=fam.kmax() {
            for t in 0..x.f(k) {
                let c = fam.chain(s, k, t).ok()?;
                let bad = |reason| {
                    Some(FillingViolation {
                        s,
                        dim: k,
                        tau: t,
                        reason,
                    })
                };
                let mut rhs = BitChain::indicator(x, k, t);
                for &i in x.facets_of(k, t) {
                    rhs.add(fam.chain(s, k - 1, i).ok()?);
                }
                let lhs = f2::boundary(x, c).ok()?;
                if lhs != rhs {
                    return bad("boundary identity");
                }
                if let Some(tb) = table {
                    if !c.bits.is_subset_of(tb.get(s, k, t).mask(k + 1)) {
                        return bad("support outside subcomplex");
                    }
                }
            }
        }
        None
    })
}

/// `(ι_s α)(τ) = α(c_{s,τ})` for a `k`-cochain `α`, giving a `(k-1)`-cochain.
pub fn contraction(x: &PureComplex, fam: &FillingFamily, s: usize, alpha: &BitChain) -> Result<BitChain> {
    let k = alpha.dim;
    if k < 0 || k > x.dim() as isize {
        return Err(Error::DimensionMismatch {
            expected: format!("cochain of dimension 0..={}", x.dim()),
            found: format!("dimension {k}"),
        });
    }
    if k - 1 > fam.kmax() {
        return Err(Error::MissingChain { s, dim: k - 1 });
    }
    let mut out = BitChain::zero(x, k - 1);
    for t in 0..x.f(k - 1) {
        if alpha.bits.dot(&fam.chain(s, k - 1, t)?.bits) {
            out.bits.set(t, true);
        }
    }
    Ok(out)
}

/// Evaluates `d ι_s α + ι_s d α = α`.
pub fn check_homotopy(x: &PureComplex, fam: &FillingFamily, s: usize, alpha: &BitChain) -> Result<bool> {
    let contracted = contraction(x, fam, s, alpha)?;
    let mut lhs = f2::coboundary(x, &contracted)?;
    lhs.add(&contraction(x, fam, s, &f2::coboundary(x, alpha)?)?);
    Ok(&lhs == alpha)
}

/// The image of a chain under a face permutation.
pub fn apply_chain(table: &FaceTable, c: &BitChain) -> BitChain {
    let map = table.dim_table(c.dim);
    BitChain {
        dim: c.dim,
        bits: BitVec::from_indices(c.bits.len(), c.bits.iter_ones().map(|i| map[i])),
    }
}

/// Transports a single-point family `c̃` over explicit group elements:
/// `c_{g,τ} = g⁻¹ c̃_{gτ}`, one `s` per element.
pub fn lift_over_group(x: &PureComplex, base: &FillingFamily, elements: &[Perm]) -> Result<FillingFamily> {
    assert_eq!(base.s_count(), 1, "lifting expects a family indexed by faces only");
    let kmax = base.kmax();
    let chains = elements
        .par_iter()
        .map(|g| {
            let fwd = FaceTable::new(x, g)?;
            let back = FaceTable::new(x, &g.inverse())?;
            (-1..=kmax)
                .map(|k| {
                    (0..x.f(k))
                        .map(|t| Ok(apply_chain(&back, base.chain(0, k, fwd.apply(k, t))?)))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FillingFamily::from_chains(ChainSource::Lifted, chains))
}

#[cfg(test)]
mod tests {
    use super::super::family::{FamilyTable, WholeComplex};
    use super::*;
    use crate::corpus;

    fn simplex_filling(n: usize) -> (PureComplex, FamilyTable, FillingFamily) {
        let x = corpus::simplex(n);
        let t = FamilyTable::build(&x, &WholeComplex, 1, n as isize - 1);
        let f = build_filling(&x, &t).unwrap();
        (x, t, f)
    }

    #[test]
    fn simplex_fillings_satisfy_identity() {
        for n in 1..=4 {
            let (x, t, f) = simplex_filling(n);
            assert_eq!(check_filling_identity(&x, &f, Some(&t)), None);
            assert_eq!(f.source(), ChainSource::EngineBuilt);
        }
    }

    #[test]
    fn simplex_base_is_smallest_vertex() {
        let (_, _, f) = simplex_filling(3);
        assert_eq!(f.chain(0, -1, 0).unwrap().support().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn missing_chain_reported() {
        let (x, _, f) = simplex_filling(2);
        assert!(matches!(f.chain(1, 0, 0), Err(Error::MissingChain { .. })));
        let top = BitChain::indicator(&x, 2, 0);
        // contracting a 2-cochain needs chains on 1-faces, which exist
        assert!(contraction(&x, &f, 0, &top).is_ok());
        let trunc = FillingFamily::from_chains(
            ChainSource::EngineBuilt,
            vec![vec![vec![f.chain(0, -1, 0).unwrap().clone()]]],
        );
        assert!(matches!(
            contraction(&x, &trunc, 0, &BitChain::indicator(&x, 1, 0)),
            Err(Error::MissingChain { .. })
        ));
    }

    #[test]
    fn contraction_of_zero_is_zero() {
        let (x, _, f) = simplex_filling(3);
        for k in 0..=3 {
            assert!(contraction(&x, &f, 0, &BitChain::zero(&x, k)).unwrap().is_zero());
        }
    }

    #[test]
    fn homotopy_on_basis_cochains() {
        let (x, _, f) = simplex_filling(3);
        for k in 0..3 {
            for i in 0..x.f(k) {
                assert!(check_homotopy(&x, &f, 0, &BitChain::indicator(&x, k, i)).unwrap());
            }
        }
    }

    #[test]
    fn cocycles_are_cobounded_by_contraction() {
        let (x, _, f) = simplex_filling(3);
        for k in 0..3 {
            for z in f2::cocycle_basis(&x, k) {
                let psi = contraction(&x, &f, 0, &z).unwrap();
                assert_eq!(f2::coboundary(&x, &psi).unwrap(), z);
            }
        }
    }

    #[test]
    fn corrupted_chain_breaks_homotopy() {
        let (x, _, mut f) = simplex_filling(2);
        f.chain_mut(0, 0, 1).unwrap().bits.flip(0);
        assert!(check_filling_identity(&x, &f, None).is_some());
        let broken = (0..=1)
            .flat_map(|k| (0..x.f(k)).map(move |i| (k, i)))
            .any(|(k, i)| !check_homotopy(&x, &f, 0, &BitChain::indicator(&x, k, i)).unwrap());
        assert!(broken);
    }

    #[test]
    fn crossing_family_fails_to_fill() {
        use super::super::family::FnFamily;
        use crate::complex::Subcomplex;
        let x = corpus::simplex(2);
        // B_{s,τ} = vertices only: edges have no 1-dimensional filling.
        let fam = FnFamily::new("vertices-only", |x: &PureComplex, _, _, _| {
            Subcomplex::generated_by(x, &(0..x.f(0)).map(|v| (0, v)).collect::<Vec<_>>())
        });
        let t = FamilyTable::build(&x, &fam, 1, 1);
        assert!(matches!(build_filling(&x, &t), Err(Error::FillFailed { .. })));
    }

    #[test]
    fn lifting_preserves_identity() {
        use super::super::group::PermGroup;
        let (x, _, f) = simplex_filling(2);
        let g = PermGroup::from_images(3, vec![vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        let lifted = lift_over_group(&x, &f, g.elements().unwrap()).unwrap();
        assert_eq!(lifted.s_count(), 6);
        assert_eq!(lifted.source(), ChainSource::Lifted);
        assert_eq!(check_filling_identity(&x, &lifted, None), None);
    }
}
