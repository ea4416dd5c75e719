//! Small named complexes used throughout the tests and examples.

use crate::complex::PureComplex;
use crate::matroids::PartitionMatroid;

/// The full simplex `Δ_n` on vertices `0..=n`.
pub fn simplex(n: usize) -> PureComplex {
    PureComplex::from_facets(vec![(0..=n as u32).collect()]).expect("simplex is pure")
}

/// The partition matroid complex `X_{n,m}`.
pub fn partition(n: usize, m: usize) -> PureComplex {
    PartitionMatroid::new(n, m)
        .expect("small partition matroid")
        .into_complex()
}

/// Facets of the six-vertex real projective plane.
pub const RP2_FACETS: [[u32; 3]; 10] = [
    [0, 1, 2],
    [0, 2, 3],
    [0, 3, 4],
    [0, 4, 5],
    [0, 1, 5],
    [1, 2, 4],
    [2, 3, 5],
    [1, 3, 4],
    [2, 4, 5],
    [1, 3, 5],
];

/// The six-vertex triangulation of `RP²`.
pub fn rp2() -> PureComplex {
    PureComplex::from_facets(RP2_FACETS.iter().map(|f| f.to_vec()).collect()).expect("RP² is pure")
}

/// The boundary of the `d`-simplex, a `(d-1)`-sphere.
pub fn simplex_boundary(d: usize) -> PureComplex {
    let facets = (0..=d as u32)
        .map(|skip| (0..=d as u32).filter(|&v| v != skip).collect())
        .collect();
    PureComplex::from_facets(facets).expect("sphere is pure")
}

/// A mix of shapes with at most a few dozen faces per dimension.
pub fn small_corpus() -> Vec<PureComplex> {
    vec![
        simplex(1),
        simplex(2),
        simplex(3),
        simplex(4),
        partition(1, 2),
        partition(2, 2),
        partition(1, 3),
        partition(2, 3),
        simplex_boundary(3),
        rp2(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn face_counts() {
        assert_eq!(simplex(3).f_vector(), vec![4, 6, 4, 1]);
        assert_eq!(rp2().f_vector(), vec![6, 15, 10]);
        assert_eq!(simplex_boundary(3).f_vector(), vec![4, 6, 4]);
        assert_eq!(partition(2, 2).f_vector(), vec![6, 12, 8]);
    }
}
