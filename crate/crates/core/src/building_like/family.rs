//! Subcomplex families `B_{s,τ}`.

use rayon::prelude::*;

use crate::complex::{PureComplex, Subcomplex};
use crate::f2::BitVec;

pub trait SubcomplexFamily: Send + Sync {
    fn name(&self) -> &str;

    /// `B_{s,τ}` for `τ` the `tau`-th face of dimension `dim`.
    fn subcomplex(&self, x: &PureComplex, s: usize, dim: isize, tau: usize) -> Subcomplex;
}

/// `B_{s,τ} = X` for every pair.
pub struct WholeComplex;

impl SubcomplexFamily for WholeComplex {
    fn name(&self) -> &str {
        "whole-complex"
    }

    fn subcomplex(&self, x: &PureComplex, _s: usize, _dim: isize, _tau: usize) -> Subcomplex {
        Subcomplex::full(x)
    }
}

fn vertex_mask(x: &PureComplex, s: usize, dim: isize, tau: usize) -> BitVec {
    let n = x.dim() as isize;
    let mut mask = BitVec::zeros(x.vertex_count());
    for &v in x.face(n, s).vertices().iter().chain(x.face(dim, tau).vertices()) {
        mask.set(v as usize, true);
    }
    mask
}

/// `B_{s,τ} = X[s ∪ τ]` with `s` a facet: the matroid family.
pub struct MatroidSpan;

impl SubcomplexFamily for MatroidSpan {
    fn name(&self) -> &str {
        "matroid-span"
    }

    fn subcomplex(&self, x: &PureComplex, s: usize, dim: isize, tau: usize) -> Subcomplex {
        Subcomplex::induced(x, &vertex_mask(x, s, dim, tau))
    }
}

/// `B_{s,τ}` is the intersection of all apartments containing the chamber
/// `s` and the face `τ`. Apartments are induced subcomplexes given by vertex
/// sets, so the intersection is induced on the common vertices.
pub struct ApartmentIntersection {
    apartments: Vec<BitVec>,
}

impl ApartmentIntersection {
    pub fn new(apartments: Vec<BitVec>) -> Self {
        ApartmentIntersection { apartments }
    }

    pub fn apartments(&self) -> &[BitVec] {
        &self.apartments
    }

    /// Indices of apartments containing every vertex in `mask`.
    pub fn containing(&self, mask: &BitVec) -> Vec<usize> {
        (0..self.apartments.len())
            .filter(|&a| mask.is_subset_of(&self.apartments[a]))
            .collect()
    }
}

impl SubcomplexFamily for ApartmentIntersection {
    fn name(&self) -> &str {
        "apartment-intersection"
    }

    fn subcomplex(&self, x: &PureComplex, s: usize, dim: isize, tau: usize) -> Subcomplex {
        let need = vertex_mask(x, s, dim, tau);
        let mut common = BitVec::ones(x.vertex_count());
        let mut any = false;
        for a in &self.apartments {
            if need.is_subset_of(a) {
                common.and_assign(a);
                any = true;
            }
        }
        if !any {
            log::warn!("no apartment contains s={s} and tau={:?}", x.face(dim, tau));
        }
        Subcomplex::induced(x, &common)
    }
}

/// A family given by a closure, for user-supplied constructions.
pub struct FnFamily<F> {
    name: String,
    f: F,
}

impl<F> FnFamily<F>
where
    F: Fn(&PureComplex, usize, isize, usize) -> Subcomplex + Send + Sync,
{
    pub fn new(name: impl Into<String>, f: F) -> Self {
        FnFamily { name: name.into(), f }
    }
}

impl<F> SubcomplexFamily for FnFamily<F>
where
    F: Fn(&PureComplex, usize, isize, usize) -> Subcomplex + Send + Sync,
{
    fn name(&self) -> &str {
        &self.name
    }

    fn subcomplex(&self, x: &PureComplex, s: usize, dim: isize, tau: usize) -> Subcomplex {
        (self.f)(x, s, dim, tau)
    }
}

/// Every `B_{s,τ}` with `dim τ ≤ kmax`, materialized once.
#[derive(Clone, Debug)]
pub struct FamilyTable {
    kmax: isize,
    entries: Vec<Vec<Vec<Subcomplex>>>,
}

impl FamilyTable {
    pub fn build(x: &PureComplex, family: &dyn SubcomplexFamily, s_count: usize, kmax: isize) -> Self {
        let entries = (0..s_count)
            .into_par_iter()
            .map(|s| {
                (-1..=kmax)
                    .map(|k| (0..x.f(k)).map(|t| family.subcomplex(x, s, k, t)).collect())
                    .collect()
            })
            .collect();
        FamilyTable { kmax, entries }
    }

    pub fn kmax(&self) -> isize {
        self.kmax
    }

    pub fn s_count(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, s: usize, dim: isize, tau: usize) -> &Subcomplex {
        &self.entries[s][(dim + 1) as usize][tau]
    }
}
