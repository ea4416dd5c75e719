//! Permutation groups acting on the vertices of a complex, and the actions
//! they induce on faces and on the G-set `S`.

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::complex::{PureComplex, Simplex, VertexId};
use crate::error::{Error, Result};

/// A permutation of `0..degree`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Perm(Vec<VertexId>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as VertexId).collect())
    }

    pub fn new(images: Vec<VertexId>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen
                .get_mut(i as usize)
                .ok_or_else(|| Error::InvalidGenerator(format!("image {i} out of range")))?;
            if *slot {
                return Err(Error::InvalidGenerator(format!("image {i} repeated")));
            }
            *slot = true;
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[VertexId] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, v: VertexId) -> VertexId {
        self.0[v as usize]
    }

    pub fn apply_simplex(&self, s: &Simplex) -> Simplex {
        s.map(|v| self.apply(v))
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&v| self.apply(v)).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize] = i as VertexId;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i as VertexId == v)
    }
}

/// A permutation group given by generators; elements are enumerated on
/// demand when the group is small enough.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: OnceLock<Option<Vec<Perm>>>,
    cap: usize,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            elements: self.elements.clone(),
            cap: self.cap,
        }
    }
}

/// Groups up to this order are enumerated element by element.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidGenerator(format!(
                    "generator of degree {} for {degree} points",
                    g.degree()
                )));
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            elements: OnceLock::new(),
            cap: DEFAULT_GROUP_CAP,
        })
    }

    pub fn from_images(degree: usize, generators: Vec<Vec<VertexId>>) -> Result<Self> {
        let gens = generators.into_iter().map(Perm::new).collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("trivial group")
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self.elements = OnceLock::new();
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// All elements (identity first, then breadth-first over generators),
    /// or `None` when the order exceeds the enumeration cap.
    pub fn elements(&self) -> Option<&[Perm]> {
        self.elements
            .get_or_init(|| {
                let id = Perm::identity(self.degree);
                let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
                let mut out = vec![id.clone()];
                let mut queue = VecDeque::from([id]);
                while let Some(p) = queue.pop_front() {
                    for g in &self.generators {
                        let q = g.compose(&p);
                        if seen.insert(q.clone()) {
                            if out.len() >= self.cap {
                                return None;
                            }
                            out.push(q.clone());
                            queue.push_back(q);
                        }
                    }
                }
                Some(out)
            })
            .as_deref()
    }

    pub fn order(&self) -> Option<usize> {
        self.elements().map(<[Perm]>::len)
    }
}

/// The action of one permutation on every face of a complex, per dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceTable(Vec<Vec<usize>>);

impl FaceTable {
    /// Fails when the permutation is not a simplicial automorphism.
    pub fn new(x: &PureComplex, g: &Perm) -> Result<Self> {
        if g.degree() != x.vertex_count() {
            return Err(Error::InvalidGenerator(format!(
                "permutation of degree {} on {} vertices",
                g.degree(),
                x.vertex_count()
            )));
        }
        let table = (-1..=x.dim() as isize)
            .map(|k| {
                x.faces(k)
                    .iter()
                    .map(|s| {
                        let img = g.apply_simplex(s);
                        x.index_of(&img).ok_or_else(|| {
                            Error::InvalidGenerator(format!("maps face {:?} to non-face {:?}", x.face_labels(s), img))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FaceTable(table))
    }

    #[inline]
    pub fn apply(&self, dim: isize, idx: usize) -> usize {
        self.0[(dim + 1) as usize][idx]
    }

    pub fn dim_table(&self, dim: isize) -> &[usize] {
        &self.0[(dim + 1) as usize]
    }
}

/// Orbits of `dim`-faces under the group generated by `tables`, each sorted,
/// listed by smallest member.
pub fn face_orbits(x: &PureComplex, tables: &[FaceTable], dim: isize) -> Vec<Vec<usize>> {
    let n = x.f(dim);
    let mut orbit_of = vec![usize::MAX; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = vec![start];
        orbit_of[start] = id;
        let mut i = 0;
        while i < members.len() {
            let f = members[i];
            for t in tables {
                let g = t.apply(dim, f);
                if orbit_of[g] == usize::MAX {
                    orbit_of[g] = id;
                    members.push(g);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        orbits.push(members);
    }
    orbits
}

/// The finite G-set `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GSet {
    /// A single point with the trivial action.
    Point,
    /// The facets `X(n)` with the induced action.
    Facets,
}

impl GSet {
    pub fn size(&self, x: &PureComplex) -> usize {
        match self {
            GSet::Point => 1,
            GSet::Facets => x.f(x.dim() as isize),
        }
    }

    pub fn act(&self, x: &PureComplex, g: &FaceTable, s: usize) -> usize {
        match self {
            GSet::Point => s,
            GSet::Facets => g.apply(x.dim() as isize, s),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn s4() -> PermGroup {
        PermGroup::from_images(4, vec![vec![1, 0, 2, 3], vec![1, 2, 3, 0]]).unwrap()
    }

    #[test]
    fn perm_algebra() {
        let a = Perm::new(vec![1, 2, 0]).unwrap();
        let b = Perm::new(vec![1, 0, 2]).unwrap();
        assert_eq!(a.compose(&a.inverse()), Perm::identity(3));
        assert_eq!(a.compose(&b).images(), &[2, 1, 0]);
        assert!(Perm::new(vec![0, 0, 1]).is_err());
        assert!(Perm::new(vec![0, 3]).is_err());
    }

    #[test]
    fn group_orders() {
        assert_eq!(s4().order(), Some(24));
        assert_eq!(PermGroup::trivial(5).order(), Some(1));
        assert_eq!(s4().with_cap(10).order(), None);
    }

    #[test]
    fn orbits_under_symmetric_group() {
        let x = corpus::simplex(3);
        let tables: Vec<_> = s4()
            .generators()
            .iter()
            .map(|g| FaceTable::new(&x, g).unwrap())
            .collect();
        for k in 0..=3 {
            assert_eq!(face_orbits(&x, &tables, k).len(), 1);
        }
        assert_eq!(face_orbits(&x, &[], 1).len(), 6);
    }

    #[test]
    fn non_automorphism_rejected() {
        let x = corpus::partition(1, 2); // ids: a1 a2 b1 b2
        let swap = Perm::new(vec![2, 1, 0, 3]).unwrap();
        // Swapping a1 and b1 maps edge {a1, b2} to the non-edge {b1, b2}.
        assert!(FaceTable::new(&x, &swap).is_err());
    }

    #[test]
    fn facet_action() {
        let x = corpus::simplex(2);
        let g = FaceTable::new(&x, &Perm::new(vec![1, 2, 0]).unwrap()).unwrap();
        assert_eq!(GSet::Facets.act(&x, &g, 0), 0);
        assert_eq!(GSet::Point.size(&x), 1);
        assert_eq!(GSet::Facets.size(&corpus::partition(2, 2)), 8);
    }
}
