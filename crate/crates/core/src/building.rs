//! Spherical buildings `A_{n+1}(F_q)` for prime `q`: flags of proper
//! nontrivial subspaces of `F_q^{n+2}`, their apartments, and the bounds and
//! exploratory computations built on them.

use std::collections::HashMap;
use std::sync::OnceLock;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use crate::building_like::{
    build_filling, theta_literal, ApartmentIntersection, FamilyTable, GSet, Perm, PermGroup, Structure,
};
use crate::complex::{PureComplex, Subcomplex, VertexId};
use crate::error::{Error, Result};
use crate::expansion::{
    bound_epsilon2, h_exact, sampled_upper_bound, singleton_upper_bound, BoundCertificate, SearchOptions,
    DEFAULT_BUDGET,
};
use crate::f2::{reduced_betti_sub, BitVec};
use crate::rational::{factorial, ratio, serde_ratio, Ratio};

pub fn is_prime(q: u32) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Smallest generator of the multiplicative group of `F_q`.
pub fn primitive_root(q: u32) -> u32 {
    assert!(is_prime(q));
    if q == 2 {
        return 1;
    }
    let order = |g: u32| {
        let mut x = g;
        let mut k = 1;
        while x != 1 {
            x = x * g % q;
            k += 1;
        }
        k
    };
    (2..q).find(|&g| order(g) == q - 1).expect("prime fields are cyclic")
}

fn inv_mod(a: u32, q: u32) -> u32 {
    let mut r = 1u64;
    let (mut b, mut e) = (a as u64, q as u64 - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % q as u64;
        }
        b = b * b % q as u64;
        e >>= 1;
    }
    r as u32
}

/// Reduced row-echelon form over `F_q`, dropping zero rows.
fn rref(mut rows: Vec<Vec<u32>>, q: u32) -> Vec<Vec<u32>> {
    let width = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = inv_mod(rows[r][c], q);
        for x in rows[r].iter_mut() {
            *x = *x * inv % q;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = (*x + q * q - f * p % q) % q;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows
}

/// A subspace of `F_q^N` in canonical reduced row-echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    rows: Vec<Vec<u32>>,
}

impl Subspace {
    pub fn span(vectors: Vec<Vec<u32>>, q: u32) -> Self {
        Subspace { rows: rref(vectors, q) }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn contains(&self, other: &Subspace, q: u32) -> bool {
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        rref(all, q).len() == self.dim()
    }

    /// Image under `v ↦ Mv`.
    pub fn apply(&self, m: &[Vec<u32>], q: u32) -> Subspace {
        let img = self
            .rows
            .iter()
            .map(|v| {
                m.iter()
                    .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<u32>() % q)
                    .collect()
            })
            .collect();
        Subspace::span(img, q)
    }

    pub fn label(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// All subspaces of `F_q^N` of dimension `d`, in canonical order.
fn subspaces_of_dim(nn: usize, d: usize, q: u32) -> Vec<Subspace> {
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..d).collect();
    loop {
        // free positions: (row, col) with col > pivot[row], col not a pivot
        let free: Vec<(usize, usize)> = (0..d)
            .flat_map(|r| {
                let piv = pivots.clone();
                ((piv[r] + 1)..nn)
                    .filter(move |c| !piv.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let total = (q as u64).pow(free.len() as u32);
        for mut code in 0..total {
            let mut rows = vec![vec![0u32; nn]; d];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = 1;
            }
            for &(r, c) in &free {
                rows[r][c] = (code % q as u64) as u32;
                code /= q as u64;
            }
            out.push(Subspace { rows });
        }
        // next combination
        let mut i = d;
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            if pivots[i] < nn - d + i {
                pivots[i] += 1;
                for j in i + 1..d {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `[N]_q! = Π_{i=1}^N (q^i - 1)/(q - 1)`: the number of complete flags.
pub fn flag_count(nn: usize, q: u32) -> BigInt {
    (1..=nn as u32)
        .map(|i| (BigInt::from(q).pow(i) - 1u32) / BigInt::from(q - 1))
        .product()
}

/// `|PGL_N(q)|`.
pub fn pgl_order(nn: usize, q: u32) -> BigInt {
    let qn = BigInt::from(q).pow(nn as u32);
    let gl: BigInt = (0..nn as u32).map(|i| &qn - BigInt::from(q).pow(i)).product();
    gl / BigInt::from(q - 1)
}

/// The flag complex of proper nontrivial subspaces of `F_q^{n+2}`.
pub struct FlagComplexA {
    n: usize,
    q: u32,
    complex: PureComplex,
    subspaces: Vec<Subspace>,
    matrices: Vec<Vec<Vec<u32>>>,
    generators: Vec<Perm>,
    apartments: OnceLock<Vec<Apartment>>,
}

/// A frame of `n+2` independent points and the vertices it spans.
#[derive(Clone, Debug)]
pub struct Apartment {
    pub frame: Vec<VertexId>,
    pub vertices: BitVec,
}

impl FlagComplexA {
    pub fn new(n: usize, q: u32) -> Result<Self> {
        Self::with_budget(n, q, DEFAULT_BUDGET)
    }

    pub fn with_budget(n: usize, q: u32, budget: u64) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NonPrimeField(q));
        }
        if n < 1 {
            return Err(Error::InvalidArgument("need n >= 1".into()));
        }
        let nn = n + 2;
        let flags = flag_count(nn, q);
        if flags > BigInt::from(budget) {
            let bits = flags.bits() as u32;
            return Err(Error::BudgetExceeded { bits, cap: budget });
        }
        let subspaces: Vec<Subspace> = (1..nn).flat_map(|d| subspaces_of_dim(nn, d, q)).collect();
        let index: HashMap<&Subspace, usize> = subspaces.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let by_dim: Vec<Vec<usize>> = (1..nn)
            .map(|d| (0..subspaces.len()).filter(|&i| subspaces[i].dim() == d).collect())
            .collect();
        // up[i]: subspaces of dimension dim+1 containing subspace i
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); subspaces.len()];
        for d in 0..by_dim.len() - 1 {
            for &a in &by_dim[d] {
                for &b in &by_dim[d + 1] {
                    if subspaces[b].contains(&subspaces[a], q) {
                        up[a].push(b);
                    }
                }
            }
        }
        let mut facets = Vec::new();
        let mut stack: Vec<Vec<usize>> = by_dim[0].iter().map(|&p| vec![p]).collect();
        while let Some(chain) = stack.pop() {
            if chain.len() == nn - 1 {
                facets.push(chain.iter().map(|&v| v as VertexId).collect());
                continue;
            }
            for &b in &up[*chain.last().expect("nonempty")] {
                let mut c = chain.clone();
                c.push(b);
                stack.push(c);
            }
        }
        let labels = subspaces.iter().map(Subspace::label).collect();
        let complex = PureComplex::build(facets, labels)?;
        debug_assert_eq!(BigInt::from(complex.f(n as isize)), flags);

        let matrices = gl_generators(nn, q);
        let generators = matrices
            .iter()
            .map(|m| {
                let images = subspaces.iter().map(|s| index[&s.apply(m, q)] as VertexId).collect();
                Perm::new(images)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FlagComplexA {
            n,
            q,
            complex,
            subspaces,
            matrices,
            generators,
            apartments: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn complex(&self) -> &PureComplex {
        &self.complex
    }

    pub fn subspace(&self, v: VertexId) -> &Subspace {
        &self.subspaces[v as usize]
    }

    /// Vertex type: the dimension of the subspace.
    pub fn vertex_type(&self, v: VertexId) -> usize {
        self.subspaces[v as usize].dim()
    }

    /// Matrices of the two generators of `GL_{n+2}(F_q)`.
    pub fn generator_matrices(&self) -> &[Vec<Vec<u32>>] {
        &self.matrices
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn group(&self) -> PermGroup {
        PermGroup::new(self.complex.vertex_count(), self.generators.clone()).expect("degrees match")
    }

    /// `(n+2)!`, the order of the Weyl group.
    pub fn weyl_order(&self) -> u64 {
        u64::try_from(factorial(self.n as u64 + 2)).expect("small rank")
    }

    pub fn apartments(&self) -> &[Apartment] {
        self.apartments.get_or_init(|| self.enumerate_apartments())
    }

    fn enumerate_apartments(&self) -> Vec<Apartment> {
        let q = self.q;
        let nn = self.n + 2;
        let points: Vec<usize> = (0..self.subspaces.len())
            .filter(|&i| self.subspaces[i].dim() == 1)
            .collect();
        let index: HashMap<&Subspace, usize> = self.subspaces.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut frames: Vec<Vec<usize>> = Vec::new();
        let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
        while let Some((chosen, next)) = stack.pop() {
            if chosen.len() == nn {
                frames.push(chosen);
                continue;
            }
            for i in next..points.len() {
                if points.len() - i < nn - chosen.len() {
                    break;
                }
                let mut c = chosen.clone();
                c.push(points[i]);
                let rows: Vec<Vec<u32>> = c.iter().map(|&p| self.subspaces[p].rows[0].clone()).collect();
                if rref(rows, q).len() == c.len() {
                    stack.push((c, i + 1));
                }
            }
        }
        frames.sort();
        frames
            .into_iter()
            .map(|frame| {
                let mut vertices = BitVec::zeros(self.subspaces.len());
                for mask in 1u32..(1 << nn) - 1 {
                    let rows = (0..nn)
                        .filter(|b| mask >> b & 1 == 1)
                        .map(|b| self.subspaces[frame[b]].rows[0].clone())
                        .collect();
                    vertices.set(index[&Subspace::span(rows, q)], true);
                }
                Apartment {
                    frame: frame.into_iter().map(|v| v as VertexId).collect(),
                    vertices,
                }
            })
            .collect()
    }

    /// Indices of apartments containing every vertex of the chamber `s` and
    /// the face `τ`.
    pub fn apartments_containing(&self, s: usize, dim: isize, tau: usize) -> Vec<usize> {
        let x = &self.complex;
        let mut need = BitVec::zeros(x.vertex_count());
        for &v in x
            .face(self.n as isize, s)
            .vertices()
            .iter()
            .chain(x.face(dim, tau).vertices())
        {
            need.set(v as usize, true);
        }
        (0..self.apartments().len())
            .filter(|&a| need.is_subset_of(&self.apartments()[a].vertices))
            .collect()
    }

    pub fn family(&self) -> ApartmentIntersection {
        ApartmentIntersection::new(self.apartments().iter().map(|a| a.vertices.clone()).collect())
    }

    /// `(Δ, chambers, GL, B)` with `B_{s,τ}` the intersection of the
    /// apartments containing `s` and `τ`.
    pub fn structure(&self) -> Structure {
        Structure::new(
            self.complex.clone(),
            self.group(),
            GSet::Facets,
            Box::new(self.family()),
        )
        .expect("generators act simplicially")
    }

    /// Chamber count and homology of every apartment.
    pub fn apartment_report(&self) -> ApartmentReport {
        let x = &self.complex;
        let n = self.n as isize;
        let mut chamber_counts = Vec::new();
        let mut spheres = 0;
        for a in self.apartments() {
            let sub = Subcomplex::induced(x, &a.vertices);
            chamber_counts.push(sub.f(n));
            let sphere = (-1..=n).all(|i| reduced_betti_sub(x, &sub, i) == usize::from(i == n));
            spheres += usize::from(sphere);
        }
        chamber_counts.sort_unstable();
        chamber_counts.dedup();
        ApartmentReport {
            count: self.apartments().len(),
            chamber_counts,
            spheres,
        }
    }

    /// For every materialized `B_{s,τ}` of full dimension, whether it is a
    /// homology sphere or acyclic; lower-dimensional ones are only counted.
    pub fn intersection_report(&self, table: &FamilyTable) -> IntersectionReport {
        let x = &self.complex;
        let n = self.n as isize;
        let mut seen: HashMap<&Subcomplex, ()> = HashMap::new();
        let mut r = IntersectionReport::default();
        for s in 0..table.s_count() {
            for k in -1..=table.kmax() {
                for t in 0..x.f(k) {
                    let b = table.get(s, k, t);
                    if seen.insert(b, ()).is_some() {
                        continue;
                    }
                    if b.dim() < n {
                        r.lower_dimensional += 1;
                        continue;
                    }
                    let betti: Vec<usize> = (-1..=n).map(|i| reduced_betti_sub(x, b, i)).collect();
                    if betti.iter().all(|&v| v == 0) {
                        r.acyclic += 1;
                    } else if betti[..betti.len() - 1].iter().all(|&v| v == 0) && betti[betti.len() - 1] == 1 {
                        r.spheres += 1;
                    } else {
                        r.violations += 1;
                    }
                }
            }
        }
        r
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ApartmentReport {
    pub count: usize,
    pub chamber_counts: Vec<usize>,
    pub spheres: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct IntersectionReport {
    pub spheres: usize,
    pub acyclic: usize,
    pub lower_dimensional: usize,
    pub violations: usize,
}

/// `T = I + E_{0,1}` and `W: e_i ↦ e_{i+1}, e_{N-1} ↦ c·e_0` with `c` chosen
/// so that `det W` is a primitive root.
pub fn gl_generators(nn: usize, q: u32) -> Vec<Vec<Vec<u32>>> {
    let mut t = vec![vec![0u32; nn]; nn];
    for (i, row) in t.iter_mut().enumerate() {
        row[i] = 1;
    }
    t[0][1] = 1;
    let omega = primitive_root(q);
    let c = if (nn - 1).is_multiple_of(2) {
        omega
    } else {
        (q - omega) % q
    };
    let mut w = vec![vec![0u32; nn]; nn];
    for i in 0..nn - 1 {
        w[i + 1][i] = 1;
    }
    w[0][nn - 1] = c;
    vec![t, w]
}

/// `ε₂` with `ω = (n+2)!`, and optionally the bounds from `a_k` and `θ_k`
/// of engine-built fillings of the apartment family.
pub fn building_bounds(b: &FlagComplexA, k: usize, with_structure: bool) -> Result<Vec<BoundCertificate>> {
    let mut out = vec![bound_epsilon2(b.n(), k, b.weyl_order())];
    if with_structure {
        let st = b.structure();
        let table = st.family_table(k as isize);
        let a = st.a_k(&table, k);
        out.push(crate::expansion::bound_gromov(b.n(), k, a));
        let fam = build_filling(b.complex(), &table)?;
        if let Some(c) = theta_literal(b.complex(), &fam, k, None)?.with_a_k(a).certificate() {
            out.push(c);
        }
    }
    Ok(out)
}

/// One row of the top-minus-one expansion sweep over `q`.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub q: u32,
    pub f0: usize,
    pub f1: usize,
    pub k: usize,
    #[serde(with = "serde_ratio::opt")]
    pub exact: Option<Ratio>,
    #[serde(with = "serde_ratio")]
    pub upper: Ratio,
    pub upper_source: String,
    #[serde(with = "serde_ratio")]
    pub lower: Ratio,
    pub lower_source: String,
    pub runtime_ms: u128,
}

/// `h_{n-1}(A_{n+1}(F_q))`: exact when the coset search fits the budget,
/// otherwise the best singleton or sampled upper bound and certified lower
/// bound.
pub fn explore_conjecture(n: usize, q: u32, budget: u64, seed: u64) -> Result<ConjectureRow> {
    let start = Instant::now();
    let b = FlagComplexA::new(n, q)?;
    let x = b.complex();
    let k = n - 1;
    let lowers = building_bounds(&b, k, true)?;
    let best_lower = lowers
        .iter()
        .max_by(|a, b| a.value.cmp(&b.value))
        .expect("at least one lower bound");
    let opts = SearchOptions {
        budget,
        ..SearchOptions::default()
    };
    let (exact, upper, upper_source) = match h_exact(x, k, opts) {
        Ok(r) => (Some(r.value.clone()), r.value, "exact".to_string()),
        Err(Error::BudgetExceeded { .. }) => {
            let single = singleton_upper_bound(x, k, budget)?;
            let sampled = sampled_upper_bound(x, k, 64, seed, budget)?;
            if sampled.value < single.value {
                (None, sampled.value, "sampled".to_string())
            } else {
                (None, single.value, "singleton".to_string())
            }
        }
        Err(e) => return Err(e),
    };
    Ok(ConjectureRow {
        n,
        q,
        f0: x.f(0),
        f1: x.f(1),
        k,
        exact,
        upper,
        upper_source,
        lower: best_lower.value.clone(),
        lower_source: format!("{:?}", best_lower.name).to_lowercase(),
        runtime_ms: start.elapsed().as_millis(),
    })
}

/// Per vertex type: cofacet counts and singleton expansion ratios under the
/// face weights and under uniform weights `1/f_k`.
#[derive(Clone, Debug, Serialize)]
pub struct DisparityRow {
    pub vertex_type: usize,
    pub vertices: usize,
    pub cofacets: Vec<u64>,
    #[serde(with = "serde_ratio")]
    pub weight: Ratio,
    #[serde(with = "serde_ratio")]
    pub uniform_weight: Ratio,
    #[serde(with = "serde_ratio")]
    pub weighted_ratio: Ratio,
    #[serde(with = "serde_ratio")]
    pub uniform_ratio: Ratio,
}

#[derive(Clone, Debug, Serialize)]
pub struct DisparityReport {
    pub n: usize,
    pub q: u32,
    pub degree_regular: bool,
    pub rows: Vec<DisparityRow>,
}

pub fn degree_disparity_report(b: &FlagComplexA) -> DisparityReport {
    let x = b.complex();
    let mut rows = Vec::new();
    for d in 1..=b.n() + 1 {
        let verts: Vec<usize> = (0..x.f(0)).filter(|&v| b.vertex_type(v as VertexId) == d).collect();
        let mut cofacets: Vec<u64> = verts.iter().map(|&v| x.cofacet_count(0, v)).collect();
        cofacets.sort_unstable();
        cofacets.dedup();
        let v = verts[0];
        let edges = x.cofaces_of(0, v);
        let d_weighted: Ratio = edges.iter().map(|&e| x.weight_at(1, e)).sum();
        let weight = x.weight_at(0, v);
        let uniform_weight = ratio(1, x.f(0) as u64);
        // k = 0 coset: min over φ and φ + 1.
        let weighted_ratio = &d_weighted / (&weight).min(&(Ratio::from_integer(1.into()) - &weight));
        let uniform_d = ratio(edges.len() as u64, x.f(1) as u64);
        let uniform_ratio = &uniform_d / (&uniform_weight).min(&(Ratio::from_integer(1.into()) - &uniform_weight));
        rows.push(DisparityRow {
            vertex_type: d,
            vertices: verts.len(),
            cofacets,
            weight,
            uniform_weight,
            weighted_ratio,
            uniform_ratio,
        });
    }
    let all: Vec<u64> = rows.iter().flat_map(|r| r.cofacets.iter().copied()).collect();
    DisparityReport {
        n: b.n(),
        q: b.q(),
        degree_regular: all.iter().all(|&c| c == all[0]),
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn primes_and_roots() {
        assert!(is_prime(2) && is_prime(3) && is_prime(5) && !is_prime(4) && !is_prime(1));
        assert_eq!(primitive_root(3), 2);
        assert_eq!(primitive_root(5), 2);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(inv_mod(3, 7), 5);
    }

    #[test]
    fn canonical_forms_are_idempotent() {
        let s = Subspace::span(vec![vec![1, 1, 0], vec![0, 1, 1]], 2);
        assert_eq!(s.rows(), &[vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(Subspace::span(s.rows().to_vec(), 2), s);
        let t = Subspace::span(vec![vec![2, 1, 0], vec![4, 2, 0]], 3);
        assert_eq!(t.dim(), 1);
        assert_eq!(t.rows(), &[vec![1, 2, 0]]);
        assert_eq!(s.label(), "1,0,1;0,1,1");
    }

    #[test]
    fn subspace_counts_are_gaussian_binomials() {
        assert_eq!(subspaces_of_dim(3, 1, 2).len(), 7);
        assert_eq!(subspaces_of_dim(3, 2, 3).len(), 13);
        assert_eq!(subspaces_of_dim(4, 2, 2).len(), 35);
        assert_eq!(subspaces_of_dim(4, 1, 3).len(), 40);
    }

    #[test]
    fn face_counts() {
        let b = FlagComplexA::new(1, 2).unwrap();
        assert_eq!(b.complex().f_vector(), vec![14, 21]);
        let b = FlagComplexA::new(1, 3).unwrap();
        assert_eq!(b.complex().f_vector(), vec![26, 52]);
        let b = FlagComplexA::new(2, 2).unwrap();
        assert_eq!(b.complex().f(0), 65);
        assert_eq!(b.complex().f(2), 315);
    }

    #[test]
    fn errors() {
        assert!(matches!(FlagComplexA::new(1, 4), Err(Error::NonPrimeField(4))));
        assert!(matches!(
            FlagComplexA::with_budget(2, 3, 100),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn generators_give_projective_group() {
        for (n, q) in [(1, 2), (1, 3), (2, 2)] {
            let b = FlagComplexA::new(n, q).unwrap();
            let order = b.group().order().unwrap();
            assert_eq!(BigInt::from(order), pgl_order(n + 2, q), "n={n} q={q}");
        }
        assert_eq!(pgl_order(3, 2), BigInt::from(168));
        assert_eq!(pgl_order(3, 3), BigInt::from(5616));
        assert_eq!(pgl_order(4, 2), BigInt::from(20160));
    }

    #[test]
    fn apartments_of_fano_plane() {
        let b = FlagComplexA::new(1, 2).unwrap();
        assert_eq!(b.apartments().len(), 28);
        let r = b.apartment_report();
        assert_eq!(r.chamber_counts, vec![6]);
        assert_eq!(r.spheres, 28);
        for s in 0..b.complex().f(1) {
            let all = b.apartments_containing(s, 1, s);
            assert_eq!(all.len(), 8);
            for &v in b.complex().face(1, s).vertices() {
                let t = b.complex().index_of(&crate::complex::Simplex::new(vec![v])).unwrap();
                let some = b.apartments_containing(s, 0, t);
                assert_eq!(some, all);
            }
        }
    }

    #[test]
    fn apartment_counts() {
        assert_eq!(FlagComplexA::new(1, 3).unwrap().apartments().len(), 234);
        let b = FlagComplexA::new(2, 2).unwrap();
        assert_eq!(b.apartments().len(), 840);
        let r = b.apartment_report();
        assert_eq!(r.chamber_counts, vec![24]);
        assert_eq!(r.spheres, 840);
    }

    #[test]
    fn fano_bounds() {
        let b = FlagComplexA::new(1, 2).unwrap();
        let certs = building_bounds(&b, 0, true).unwrap();
        assert_eq!(certs[0].value, ratio(1, 6));
        assert!(certs.iter().all(|c| c.value >= ratio(1, 6)));
        let b = FlagComplexA::new(2, 2).unwrap();
        assert_eq!(building_bounds(&b, 1, false).unwrap()[0].value, ratio(1, 24));
    }

    #[test]
    fn disparity() {
        let r = degree_disparity_report(&FlagComplexA::new(1, 2).unwrap());
        assert!(r.degree_regular);
        assert!(r.rows.iter().all(|row| row.cofacets == vec![3]));
        let r = degree_disparity_report(&FlagComplexA::new(2, 2).unwrap());
        assert!(!r.degree_regular);
        assert_eq!(r.rows[0].cofacets, vec![21]);
        assert_eq!(r.rows[1].cofacets, vec![9]);
        assert_eq!(r.rows[1].weighted_ratio, int(2));
        assert_eq!(r.rows[1].uniform_ratio, ratio(6 * 65, 315));
    }
}
