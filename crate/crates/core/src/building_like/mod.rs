//! Building-like structures `(X, S, G, B)`: verification of the transitivity,
//! equivariance and acyclicity conditions, filling chains, and the bounds
//! they certify.

pub mod family;
pub mod filling;
pub mod group;
pub mod theta;

use std::collections::HashMap;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use family::{ApartmentIntersection, FamilyTable, FnFamily, MatroidSpan, SubcomplexFamily, WholeComplex};
pub use filling::{
    apply_chain, build_filling, check_filling_identity, check_homotopy, contraction, lift_over_group, ChainSource,
    FillingFamily, FillingViolation,
};
pub use group::{face_orbits, FaceTable, GSet, Perm, PermGroup};
pub use theta::{compute_a_k, theta_lifted, theta_literal, ThetaMethod, ThetaReport};

use crate::complex::{PureComplex, Subcomplex};
use crate::error::Result;
use crate::expansion::BoundCertificate;
use crate::f2::{boundary_rank, BitVec};
use crate::rational::Ratio;

/// A complex with a group action, a G-set and a subcomplex family.
pub struct Structure {
    pub complex: PureComplex,
    pub group: PermGroup,
    pub gset: GSet,
    pub family: Box<dyn SubcomplexFamily>,
    generator_tables: Vec<FaceTable>,
}

impl Structure {
    /// Fails when a generator is not a simplicial automorphism.
    pub fn new(complex: PureComplex, group: PermGroup, gset: GSet, family: Box<dyn SubcomplexFamily>) -> Result<Self> {
        let generator_tables = group
            .generators()
            .iter()
            .map(|g| FaceTable::new(&complex, g))
            .collect::<Result<Vec<_>>>()?;
        Ok(Structure {
            complex,
            group,
            gset,
            family,
            generator_tables,
        })
    }

    pub fn s_count(&self) -> usize {
        self.gset.size(&self.complex)
    }

    pub fn generator_tables(&self) -> &[FaceTable] {
        &self.generator_tables
    }

    pub fn family_table(&self, kmax: isize) -> FamilyTable {
        FamilyTable::build(&self.complex, self.family.as_ref(), self.s_count(), kmax)
    }

    pub fn a_k(&self, table: &FamilyTable, k: usize) -> u64 {
        compute_a_k(&self.complex, &self.generator_tables, table, k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMode {
    /// Every group element.
    Exhaustive,
    /// Every generator; complete for the generated group.
    Generators,
    /// A seeded random sample of triples.
    Sampled,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Exhaustive equivariance checks run when `|G|·|S|·Σ f_k` is at most this.
    pub exhaustive_cap: u64,
    /// Force sampling with this many `(g, s, τ)` triples.
    pub sample: Option<usize>,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            exhaustive_cap: 10_000_000,
            sample: None,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub check: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub kmax: isize,
    pub transitive: bool,
    pub equivariant: bool,
    pub equivariance_mode: CheckMode,
    pub equivariance_checks: u64,
    pub acyclic: bool,
    pub membership: bool,
    pub monotone: bool,
    pub violations: Vec<Violation>,
    pub violation_count: usize,
}

const MAX_LISTED: usize = 200;

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.transitive && self.equivariant && self.acyclic && self.membership && self.monotone
    }

    pub fn has(&self, check: &str) -> bool {
        self.violations.iter().any(|v| v.check == check)
    }
}

struct Collector {
    list: Vec<Violation>,
    count: usize,
}

impl Collector {
    fn push(&mut self, check: &'static str, detail: String) {
        self.count += 1;
        if self.list.len() < MAX_LISTED {
            self.list.push(Violation { check, detail });
        }
    }
}

fn map_subcomplex(x: &PureComplex, g: &FaceTable, sub: &Subcomplex) -> Vec<BitVec> {
    (-1..=x.dim() as isize)
        .map(|k| {
            let map = g.dim_table(k);
            BitVec::from_indices(x.f(k), sub.mask(k).iter_ones().map(|i| map[i]))
        })
        .collect()
}

fn equivariant_at(st: &Structure, table: &FamilyTable, g: &FaceTable, s: usize, k: isize, t: usize) -> bool {
    let x = &st.complex;
    let image = map_subcomplex(x, g, table.get(s, k, t));
    let target = table.get(st.gset.act(x, g, s), k, g.apply(k, t));
    image.iter().enumerate().all(|(l, m)| m == target.mask(l as isize - 1))
}

/// Checks facet transitivity, equivariance `gB_{s,τ} = B_{gs,gτ}`, vanishing
/// of `H̃_i(B_{s,τ})` for `i ≤ dim τ`, `τ ∈ B_{s,τ}` and
/// `B_{s,τ_i} ⊆ B_{s,τ}` for codimension-one faces, for `dim τ ≤ kmax`.
pub fn verify_structure(st: &Structure, table: &FamilyTable, opts: VerifyOptions) -> VerifyReport {
    let x = &st.complex;
    let n = x.dim() as isize;
    let kmax = table.kmax();
    let s_count = st.s_count();
    let mut out = Collector {
        list: Vec::new(),
        count: 0,
    };

    let facet_orbits = face_orbits(x, &st.generator_tables, n);
    let transitive = facet_orbits.len() == 1;
    if !transitive {
        out.push(
            "C1",
            format!(
                "{} facet orbits; orbit of the first facet has {} of {}",
                facet_orbits.len(),
                facet_orbits[0].len(),
                x.f(n)
            ),
        );
    }

    let faces: u64 = (-1..=kmax).map(|k| x.f(k) as u64).sum();
    let pairs = s_count as u64 * faces;
    let (mode, tables): (CheckMode, Vec<FaceTable>) = match (opts.sample, st.group.order()) {
        (None, Some(order)) if (order as u64).saturating_mul(pairs) <= opts.exhaustive_cap => (
            CheckMode::Exhaustive,
            st.group
                .elements()
                .expect("order known")
                .iter()
                .map(|g| FaceTable::new(x, g).expect("group elements are automorphisms"))
                .collect(),
        ),
        (None, _) => (CheckMode::Generators, st.generator_tables.clone()),
        (Some(_), _) => (CheckMode::Sampled, st.generator_tables.clone()),
    };
    let mut checks = 0u64;
    let mut equivariant = true;
    if tables.is_empty() {
        // Trivial group: nothing to check.
    } else if let Some(samples) = opts.sample {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let dims: Vec<isize> = (-1..=kmax).collect();
        for _ in 0..samples {
            let g = tables.choose(&mut rng).expect("nonempty");
            let s = rng.random_range(0..s_count);
            let k = *dims.choose(&mut rng).expect("nonempty");
            let t = rng.random_range(0..x.f(k));
            checks += 1;
            if !equivariant_at(st, table, g, s, k, t) {
                equivariant = false;
                out.push("C2", format!("s={s} tau={:?}", x.face(k, t)));
            }
        }
    } else {
        let bad: Vec<(usize, usize, isize, usize)> = (0..tables.len())
            .into_par_iter()
            .flat_map_iter(|gi| {
                let g = &tables[gi];
                (0..s_count).flat_map(move |s| {
                    (-1..=kmax).flat_map(move |k| {
                        (0..x.f(k))
                            .filter_map(move |t| (!equivariant_at(st, table, g, s, k, t)).then_some((gi, s, k, t)))
                    })
                })
            })
            .collect();
        checks = tables.len() as u64 * pairs;
        equivariant = bad.is_empty();
        for (gi, s, k, t) in bad {
            out.push("C2", format!("element {gi}, s={s}, tau={:?}", x.face(k, t)));
        }
    }

    // Acyclicity, computed once per distinct subcomplex.
    let mut needed: HashMap<&Subcomplex, isize> = HashMap::new();
    for s in 0..s_count {
        for k in -1..=kmax {
            for t in 0..x.f(k) {
                let e = needed.entry(table.get(s, k, t)).or_insert(k);
                *e = (*e).max(k);
            }
        }
    }
    let entries: Vec<(&Subcomplex, isize)> = needed.into_iter().collect();
    let nonvanishing: HashMap<&Subcomplex, Vec<isize>> = entries
        .par_iter()
        .map(|&(sub, k)| {
            let ranks: Vec<usize> = (0..=k + 2).map(|i| boundary_rank(x, Some(sub), i)).collect();
            let bad = (-1..=k)
                .filter(|&i| sub.f(i) != rank_at(&ranks, i) + rank_at(&ranks, i + 1))
                .collect();
            (sub, bad)
        })
        .collect();
    let mut acyclic = true;
    let mut membership = true;
    let mut monotone = true;
    for s in 0..s_count {
        for k in -1..=kmax {
            for t in 0..x.f(k) {
                let b = table.get(s, k, t);
                let bad = &nonvanishing[b];
                if let Some(&i) = bad.iter().min() {
                    acyclic = false;
                    out.push(
                        "C3",
                        format!("s={s} tau={:?}: reduced homology in degree {i}", x.face(k, t)),
                    );
                }
                if !b.contains(k, t) {
                    membership = false;
                    out.push("membership", format!("s={s} tau={:?}", x.face(k, t)));
                }
                for &i in x.facets_of(k, t) {
                    if !table.get(s, k - 1, i).is_subcomplex_of(b) {
                        monotone = false;
                        out.push(
                            "monotonicity",
                            format!("s={s}: B at {:?} not inside B at {:?}", x.face(k - 1, i), x.face(k, t)),
                        );
                    }
                }
            }
        }
    }

    VerifyReport {
        kmax,
        transitive,
        equivariant,
        equivariance_mode: mode,
        equivariance_checks: checks,
        acyclic,
        membership,
        monotone,
        violations: out.list,
        violation_count: out.count,
    }
}

/// `rank ∂_i`, with `ranks[i]` holding dimension `i ≥ 0` and `∂_{-1} = 0`.
fn rank_at(ranks: &[usize], i: isize) -> usize {
    if i < 0 {
        0
    } else {
        ranks[i as usize]
    }
}

/// Lower bounds from `a_k` and `θ_k`. When `exact` is given, each bound is
/// checked against it and returned in `Err` on failure.
pub fn certified_bounds(
    n: usize,
    k: usize,
    a_k: Option<u64>,
    theta: Option<&ThetaReport>,
    exact: Option<&Ratio>,
) -> std::result::Result<Vec<BoundCertificate>, BoundCertificate> {
    let mut out = Vec::new();
    if let Some(a) = a_k {
        out.push(crate::expansion::bound_gromov(n, k, a));
    }
    if let Some(c) = theta.and_then(ThetaReport::certificate) {
        out.push(c);
    }
    if let Some(h) = exact {
        if let Some(bad) = out.iter().find(|c| !c.admits(h)) {
            return Err(bad.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn simplex_structure(n: usize) -> Structure {
        let x = corpus::simplex(n);
        let v = x.vertex_count() as u32;
        let mut t: Vec<u32> = (0..v).collect();
        t.swap(0, 1);
        let c: Vec<u32> = (0..v).map(|i| (i + 1) % v).collect();
        let g = PermGroup::from_images(v as usize, vec![t, c]).unwrap();
        Structure::new(x, g, GSet::Point, Box::new(WholeComplex)).unwrap()
    }

    #[test]
    fn simplex_structure_verifies() {
        let st = simplex_structure(3);
        let table = st.family_table(2);
        let r = verify_structure(&st, &table, VerifyOptions::default());
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.equivariance_mode, CheckMode::Exhaustive);
    }

    #[test]
    fn generator_and_sampled_modes() {
        let st = simplex_structure(3);
        let table = st.family_table(2);
        let opts = VerifyOptions {
            exhaustive_cap: 0,
            ..Default::default()
        };
        let r = verify_structure(&st, &table, opts);
        assert_eq!(r.equivariance_mode, CheckMode::Generators);
        assert!(r.passed());
        let opts = VerifyOptions {
            sample: Some(100),
            seed: 7,
            ..Default::default()
        };
        let r = verify_structure(&st, &table, opts);
        assert_eq!(r.equivariance_mode, CheckMode::Sampled);
        assert_eq!(r.equivariance_checks, 100);
        assert!(r.passed());
    }

    #[test]
    fn trivial_group_on_octahedron_fails_transitivity() {
        let x = corpus::partition(2, 2);
        let g = PermGroup::trivial(x.vertex_count());
        let st = Structure::new(x, g, GSet::Facets, Box::new(MatroidSpan)).unwrap();
        let table = st.family_table(1);
        let r = verify_structure(&st, &table, VerifyOptions::default());
        assert!(!r.transitive);
        assert!(r.has("C1"));
        assert!(r.acyclic && r.membership && r.monotone);
    }

    #[test]
    fn punctured_sphere_is_still_acyclic_below_top() {
        let x = corpus::partition(2, 2);
        let punctured = FnFamily::new("punctured", |x: &PureComplex, _, _, _| {
            let n = x.dim() as isize;
            let keep: Vec<(isize, usize)> = (1..x.f(n)).map(|i| (n, i)).collect();
            Subcomplex::generated_by(x, &keep)
        });
        let st = Structure::new(x, PermGroup::trivial(6), GSet::Facets, Box::new(punctured)).unwrap();
        let r = verify_structure(&st, &st.family_table(1), VerifyOptions::default());
        assert!(r.acyclic && r.membership && r.monotone);
    }

    #[test]
    fn one_skeleton_family_fails_acyclicity() {
        let x = corpus::partition(2, 2);
        let skeleton = FnFamily::new("one-skeleton", |x: &PureComplex, _, _, _| {
            let keep: Vec<(isize, usize)> = (0..x.f(1)).map(|i| (1, i)).collect();
            Subcomplex::generated_by(x, &keep)
        });
        let st = Structure::new(x, PermGroup::trivial(6), GSet::Facets, Box::new(skeleton)).unwrap();
        let r = verify_structure(&st, &st.family_table(1), VerifyOptions::default());
        assert!(!r.acyclic);
        assert!(r.has("C3"));
        assert!(!r.passed());
    }

    #[test]
    fn non_equivariant_family_detected() {
        let st = simplex_structure(2);
        let fam = FnFamily::new("first-edge", |x: &PureComplex, _, _, _| {
            Subcomplex::generated_by(x, &[(1, 0)])
        });
        let st = Structure::new(st.complex.clone(), st.group.clone(), GSet::Point, Box::new(fam)).unwrap();
        let r = verify_structure(&st, &st.family_table(1), VerifyOptions::default());
        assert!(!r.equivariant);
        assert!(r.has("C2"));
        assert!(!r.membership);
    }

    #[test]
    fn bounds_checked_against_exact_value() {
        let st = simplex_structure(3);
        let table = st.family_table(2);
        let fam = build_filling(&st.complex, &table).unwrap();
        let th = theta_lifted(&st.complex, &fam, st.generator_tables(), 0).unwrap();
        let a = st.a_k(&table, 0);
        let h = crate::rational::ratio(4, 3);
        let certs = certified_bounds(3, 0, Some(a), Some(&th), Some(&h)).unwrap();
        assert_eq!(certs.len(), 2);
        assert!(certified_bounds(3, 0, None, Some(&th), Some(&crate::rational::ratio(1, 1))).is_err());
    }
}
