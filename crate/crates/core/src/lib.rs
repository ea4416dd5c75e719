//! Exact coboundary expansion of finite pure simplicial complexes over F2,
//! with certified lower bounds from building-like structures.

pub mod building;
pub mod building_like;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod expansion;
pub mod f2;
pub mod families;
pub mod matroids;
pub mod rational;
pub mod tester;

pub use complex::{PureComplex, Simplex, Subcomplex, VertexId};
pub use error::{Error, Result};
pub use expansion::{h_exact, BoundCertificate, ExpansionResult, SearchOptions};
pub use f2::{BitChain, BitVec};
pub use rational::Ratio;
