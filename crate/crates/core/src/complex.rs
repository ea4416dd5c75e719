//! Finite pure simplicial complexes with lexicographically indexed faces and
//! the cofacet-count weight function.
//!
//! Faces are stored per dimension, starting at the empty simplex (dimension
//! −1). Every chain and cochain in the crate is a bit vector over one of these
//! per-dimension face lists, so the ordering here fixes the meaning of every
//! witness and solution.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2::BitVec;
use crate::rational::{binomial_u64, Ratio};

pub type VertexId = u32;

/// A face of a complex: a strictly increasing list of vertex ids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    pub fn new(mut vertices: Vec<VertexId>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Simplex(vertices)
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    /// The codimension-one face obtained by dropping the vertex at `pos`.
    pub fn without(&self, pos: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(pos);
        Simplex(v)
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Simplex::new(v)
    }

    pub fn map(&self, f: impl Fn(VertexId) -> VertexId) -> Simplex {
        Simplex::new(self.0.iter().map(|&v| f(v)).collect())
    }
}

impl<const N: usize> From<[VertexId; N]> for Simplex {
    fn from(v: [VertexId; N]) -> Self {
        Simplex::new(v.to_vec())
    }
}

impl From<Vec<VertexId>> for Simplex {
    fn from(v: Vec<VertexId>) -> Self {
        Simplex::new(v)
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "*");
        }
        write!(f, "{:?}", self.0)
    }
}

#[inline]
fn level(dim: isize) -> usize {
    debug_assert!(dim >= -1);
    (dim + 1) as usize
}

const VERTICES_DIRECTIVE: &str = "#vertices";

/// An `n`-dimensional pure simplicial complex.
#[derive(Clone)]
pub struct PureComplex {
    n: usize,
    labels: Vec<String>,
    faces: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
    cofacets: Vec<Vec<u64>>,
    facets_of: Vec<Vec<Vec<usize>>>,
    cofaces_of: Vec<Vec<Vec<usize>>>,
}

impl fmt::Debug for PureComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PureComplex")
            .field("n", &self.n)
            .field("f_vector", &self.f_vector())
            .finish()
    }
}

impl PureComplex {
    /// Builds a complex from facets given as vertex ids, with labels equal to
    /// the ids.
    pub fn from_facets(facets: Vec<Vec<VertexId>>) -> Result<Self> {
        let nv = facets.iter().flatten().map(|&v| v as usize + 1).max().unwrap_or(0);
        let labels = (0..nv).map(|v| v.to_string()).collect();
        Self::build(facets, labels)
    }

    /// Builds a complex from labelled facets. Labels receive dense ids in
    /// first-appearance order.
    pub fn from_labeled_facets<S: AsRef<str>>(facets: &[Vec<S>]) -> Result<Self> {
        Self::from_ordered_labels(&[], facets)
    }

    /// As [`PureComplex::from_labeled_facets`], with the first ids reserved
    /// for `order`.
    pub fn from_ordered_labels<S: AsRef<str>>(order: &[&str], facets: &[Vec<S>]) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut ids: HashMap<String, VertexId> = HashMap::new();
        for &l in order {
            if ids.insert(l.to_string(), labels.len() as VertexId).is_some() {
                return Err(Error::Parse(format!("vertex {l} listed twice")));
            }
            labels.push(l.to_string());
        }
        let facets = facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|l| {
                        let l = l.as_ref();
                        *ids.entry(l.to_string()).or_insert_with(|| {
                            labels.push(l.to_string());
                            (labels.len() - 1) as VertexId
                        })
                    })
                    .collect()
            })
            .collect();
        Self::build(facets, labels)
    }

    /// Builds a complex from facets over ids `0..labels.len()`; every vertex
    /// must lie in some facet.
    pub fn build(facets: Vec<Vec<VertexId>>, labels: Vec<String>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyInput);
        }
        let label_of = |f: &[VertexId]| -> Vec<String> {
            f.iter()
                .map(|&v| labels.get(v as usize).cloned().unwrap_or_else(|| v.to_string()))
                .collect()
        };
        let size = facets[0].len();
        if size == 0 {
            return Err(Error::EmptyInput);
        }
        let mut seen = std::collections::HashSet::new();
        let mut unique = Vec::with_capacity(facets.len());
        for f in facets {
            let s = Simplex::new(f.clone());
            if s.len() != size || f.len() != size {
                return Err(Error::NotPure {
                    facet: label_of(&f),
                    expected: size,
                    found: s.len(),
                });
            }
            if let Some(&v) = s.vertices().iter().find(|&&v| v as usize >= labels.len()) {
                return Err(Error::UnknownVertex(v.to_string()));
            }
            if seen.insert(s.clone()) {
                unique.push(s);
            } else {
                log::warn!("duplicate facet {:?} ignored", label_of(s.vertices()));
            }
        }
        let n = size - 1;

        let mut counts: Vec<HashMap<Simplex, u64>> = vec![HashMap::new(); n + 2];
        for facet in &unique {
            let vs = facet.vertices();
            for mask in 0u64..(1u64 << vs.len()) {
                let sub: Vec<VertexId> = (0..vs.len()).filter(|i| mask >> i & 1 == 1).map(|i| vs[i]).collect();
                *counts[sub.len()].entry(Simplex(sub)).or_insert(0) += 1;
            }
        }
        if counts[1].len() != labels.len() {
            return Err(Error::InvalidArgument(format!(
                "{} labels but only {} vertices appear in facets",
                labels.len(),
                counts[1].len()
            )));
        }

        let mut faces = Vec::with_capacity(n + 2);
        let mut index = Vec::with_capacity(n + 2);
        let mut cofacets = Vec::with_capacity(n + 2);
        for lvl in counts {
            let mut list: Vec<(Simplex, u64)> = lvl.into_iter().collect();
            list.sort_unstable_by(|a, b| a.0.cmp(&b.0));
            let idx: HashMap<Simplex, usize> = list.iter().enumerate().map(|(i, (s, _))| (s.clone(), i)).collect();
            cofacets.push(list.iter().map(|(_, c)| *c).collect());
            faces.push(list.into_iter().map(|(s, _)| s).collect::<Vec<_>>());
            index.push(idx);
        }

        let mut facets_of: Vec<Vec<Vec<usize>>> = faces.iter().map(|l| vec![Vec::new(); l.len()]).collect();
        let mut cofaces_of: Vec<Vec<Vec<usize>>> = faces.iter().map(|l| vec![Vec::new(); l.len()]).collect();
        for lv in 1..n + 2 {
            facets_of[lv] = faces[lv]
                .iter()
                .enumerate()
                .map(|(t, s)| {
                    (0..s.len())
                        .map(|p| {
                            let sub = index[lv - 1][&s.without(p)];
                            cofaces_of[lv - 1][sub].push(t);
                            sub
                        })
                        .collect()
                })
                .collect();
        }

        Ok(PureComplex {
            n,
            labels,
            faces,
            index,
            cofacets,
            facets_of,
            cofaces_of,
        })
    }

    /// Parses the facet text format: one facet per line, whitespace-separated
    /// vertex labels, `#` starts a comment line. An optional `#vertices` line
    /// fixes the vertex order; otherwise ids follow first appearance.
    pub fn parse_facet_text(text: &str) -> Result<Self> {
        let mut order: Vec<&str> = Vec::new();
        let mut facets: Vec<Vec<&str>> = Vec::new();
        for line in text.lines().map(str::trim) {
            if let Some(rest) = line.strip_prefix(VERTICES_DIRECTIVE) {
                order.extend(rest.split_whitespace());
            } else if !line.is_empty() && !line.starts_with('#') {
                facets.push(line.split_whitespace().collect());
            }
        }
        Self::from_ordered_labels(&order, &facets)
    }

    /// Facet text with a `#vertices` header, so that parsing it back
    /// reproduces the vertex and face indexing.
    pub fn to_facet_text(&self) -> String {
        let mut out = String::from(VERTICES_DIRECTIVE);
        for l in &self.labels {
            out.push(' ');
            out.push_str(l);
        }
        out.push('\n');
        for f in self.faces(self.n as isize) {
            let line: Vec<&str> = f.vertices().iter().map(|&v| self.label(v)).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v as usize]
    }

    pub fn vertex_by_label(&self, label: &str) -> Result<VertexId> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|v| v as VertexId)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// Number of faces of dimension `dim`; zero outside `-1..=n`.
    pub fn f(&self, dim: isize) -> usize {
        if dim < -1 || dim > self.n as isize {
            0
        } else {
            self.faces[level(dim)].len()
        }
    }

    /// `(f_0, …, f_n)`.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.n as isize).map(|k| self.f(k)).collect()
    }

    pub fn faces(&self, dim: isize) -> &[Simplex] {
        &self.faces[level(dim)]
    }

    pub fn face(&self, dim: isize, idx: usize) -> &Simplex {
        &self.faces[level(dim)][idx]
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(level(s.dim()))?.get(s).copied()
    }

    pub fn face_labels(&self, s: &Simplex) -> Vec<String> {
        s.vertices().iter().map(|&v| self.label(v).to_string()).collect()
    }

    /// Looks up a face given by vertex labels.
    pub fn face_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<(isize, usize)> {
        let ids = labels
            .iter()
            .map(|l| self.vertex_by_label(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let s = Simplex::new(ids);
        let idx = self
            .index_of(&s)
            .ok_or_else(|| Error::FaceNotFound(s.vertices().to_vec()))?;
        Ok((s.dim(), idx))
    }

    /// `c(σ)`: number of facets containing the face.
    pub fn cofacet_count(&self, dim: isize, idx: usize) -> u64 {
        self.cofacets[level(dim)][idx]
    }

    pub fn cofacet_counts(&self, dim: isize) -> &[u64] {
        &self.cofacets[level(dim)]
    }

    /// Codimension-one faces of a face, in order of the dropped vertex.
    pub fn facets_of(&self, dim: isize, idx: usize) -> &[usize] {
        &self.facets_of[level(dim)][idx]
    }

    /// Faces of dimension `dim + 1` containing the face.
    pub fn cofaces_of(&self, dim: isize, idx: usize) -> &[usize] {
        &self.cofaces_of[level(dim)][idx]
    }

    /// Common denominator of the weights in dimension `k`: `C(n+1,k+1)·f_n`.
    pub fn weight_denominator(&self, dim: isize) -> u64 {
        binomial_u64(self.n + 1, level(dim)) * self.f(self.n as isize) as u64
    }

    pub fn weight_at(&self, dim: isize, idx: usize) -> Ratio {
        Ratio::new(
            BigInt::from(self.cofacet_count(dim, idx)),
            BigInt::from(self.weight_denominator(dim)),
        )
    }

    /// `w(σ) = c(σ) / (C(n+1,k+1)·f_n)`.
    pub fn weight(&self, s: &Simplex) -> Result<Ratio> {
        let idx = self
            .index_of(s)
            .ok_or_else(|| Error::FaceNotFound(s.vertices().to_vec()))?;
        Ok(self.weight_at(s.dim(), idx))
    }

    pub fn weight_table(&self) -> WeightTable {
        WeightTable {
            weights: (-1..=self.n as isize)
                .map(|k| (0..self.f(k)).map(|i| self.weight_at(k, i)).collect())
                .collect(),
        }
    }
}

/// Exact weights of every face, per dimension.
#[derive(Clone, Debug)]
pub struct WeightTable {
    weights: Vec<Vec<Ratio>>,
}

impl WeightTable {
    pub fn get(&self, dim: isize, idx: usize) -> &Ratio {
        &self.weights[level(dim)][idx]
    }

    pub fn dim_weights(&self, dim: isize) -> &[Ratio] {
        &self.weights[level(dim)]
    }
}

/// A subcomplex of a fixed complex, sharing its face indexing.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subcomplex {
    masks: Vec<BitVec>,
}

impl Subcomplex {
    pub fn empty(x: &PureComplex) -> Self {
        Subcomplex {
            masks: (-1..=x.dim() as isize).map(|k| BitVec::zeros(x.f(k))).collect(),
        }
    }

    pub fn full(x: &PureComplex) -> Self {
        Subcomplex {
            masks: (-1..=x.dim() as isize).map(|k| BitVec::ones(x.f(k))).collect(),
        }
    }

    /// The induced subcomplex `X[V]`: all faces with every vertex in `V`.
    pub fn induced(x: &PureComplex, vertices: &BitVec) -> Self {
        assert_eq!(vertices.len(), x.vertex_count());
        let masks = (-1..=x.dim() as isize)
            .map(|k| {
                BitVec::from_indices(
                    x.f(k),
                    x.faces(k)
                        .iter()
                        .enumerate()
                        .filter(|(_, s)| s.vertices().iter().all(|&v| vertices.get(v as usize)))
                        .map(|(i, _)| i),
                )
            })
            .collect();
        Subcomplex { masks }
    }

    /// The smallest subcomplex containing the given faces.
    pub fn generated_by(x: &PureComplex, faces: &[(isize, usize)]) -> Self {
        let mut sub = Subcomplex::empty(x);
        for &(k, i) in faces {
            sub.masks[level(k)].set(i, true);
        }
        for k in (0..=x.dim() as isize).rev() {
            let present: Vec<usize> = sub.masks[level(k)].iter_ones().collect();
            for t in present {
                for &s in x.facets_of(k, t) {
                    sub.masks[level(k - 1)].set(s, true);
                }
            }
        }
        sub
    }

    pub fn contains(&self, dim: isize, idx: usize) -> bool {
        self.masks[level(dim)].get(idx)
    }

    pub fn mask(&self, dim: isize) -> &BitVec {
        &self.masks[level(dim)]
    }

    pub fn f(&self, dim: isize) -> usize {
        if dim < -1 || level(dim) >= self.masks.len() {
            0
        } else {
            self.masks[level(dim)].count_ones()
        }
    }

    /// Largest dimension with a face; `-2` for the void complex.
    pub fn dim(&self) -> isize {
        (0..self.masks.len())
            .rev()
            .find(|&l| !self.masks[l].is_zero())
            .map_or(-2, |l| l as isize - 1)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.masks[1].iter_ones().map(|v| v as VertexId)
    }

    /// Every face lies in a face of the top dimension.
    pub fn is_pure(&self, x: &PureComplex) -> bool {
        let top = self.dim();
        (0..top).all(|k| {
            self.masks[level(k)]
                .iter_ones()
                .all(|s| x.cofaces_of(k, s).iter().any(|&t| self.contains(k + 1, t)))
        })
    }

    /// Closed under taking faces.
    pub fn is_closed(&self, x: &PureComplex) -> bool {
        (0..=x.dim() as isize).all(|k| {
            self.masks[level(k)]
                .iter_ones()
                .all(|t| x.facets_of(k, t).iter().all(|&s| self.contains(k - 1, s)))
        })
    }

    pub fn is_subcomplex_of(&self, other: &Subcomplex) -> bool {
        self.masks.iter().zip(&other.masks).all(|(a, b)| a.is_subset_of(b))
    }

    pub fn intersect(&self, other: &Subcomplex) -> Subcomplex {
        let mut out = self.clone();
        for (a, b) in out.masks.iter_mut().zip(&other.masks) {
            a.and_assign(b);
        }
        out
    }

    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.dim()).map(|k| self.f(k)).collect()
    }
}

/// Induced subcomplex on a set of vertices.
pub fn induced_subcomplex(x: &PureComplex, vertices: &[VertexId]) -> Result<Subcomplex> {
    let mut mask = BitVec::zeros(x.vertex_count());
    for &v in vertices {
        if v as usize >= x.vertex_count() {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        mask.set(v as usize, true);
    }
    Ok(Subcomplex::induced(x, &mask))
}
