//! Exact-arithmetic toolkit for the action of the center of a compact
//! simply connected simple Lie group on its fundamental alcove, and the
//! arithmetic it feeds: alcove folding under the affine Weyl group,
//! extended Dynkin diagram automorphisms, fixed loci, minimal
//! prequantization levels, and component counts for moduli of flat
//! bundles with prescribed boundary holonomies.
//!
//! Every computation is over arbitrary-precision rationals; the crate
//! contains no floating point. Catalog data follows the Bourbaki planches,
//! so table-style output is comparable digit for digit.
//!
//! All types are immutable after construction and every operation is pure,
//! so values can be shared freely across threads.

pub mod alcove;
pub mod center;
pub mod error;
pub mod halfspace;
pub mod lattice;
pub mod matrix;
pub mod prequant;
pub mod rational;
pub mod reference;
pub mod root_system;
pub mod weyl;

pub use alcove::{su_n_alcove, su_n_barycenter, Alcove, AlcovePoint};
pub use center::{CenterElement, FixedLocus, VertexPermutation};
pub use error::{Error, Result};
pub use lattice::{lattice, LatticeBasis, LatticeKind};
pub use prequant::{ClassLabel, ModuliQuery, PrequantReport};
pub use rational::{parse_rat, rat, rat_int, rat_to_string, Rat, RatVec};
pub use root_system::{RootSystem, Series, SimpleType};
pub use weyl::{fold_to_alcove, AffineWeylElement, WeylElement};
