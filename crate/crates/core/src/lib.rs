//! Exact Ehrhart theory for lattice polytopes.
//!
//! Everything is generic over an exact integer [`Scalar`]. The aliases at the
//! crate root fix the scalar to [`BigInt`] (never overflows) or `i64` (fast
//! for small coordinates).
//!
//! ```
//! use ehrhart::{catalog, Polytope};
//!
//! let cube: Polytope = catalog::centered_cube(3);
//! let report = ehrhart::local_hstar(&cube).unwrap();
//! assert_eq!(report.lstar.to_i64_vec().unwrap(), vec![0, 1, 17, 1]);
//! ```

pub mod catalog;
pub mod classify;
pub mod counting;
pub mod enumerate;
pub mod error;
pub mod gorenstein;
pub mod io;
pub mod linalg;
pub mod local;
pub mod polynomial;
pub mod polytope;
pub mod poset;
pub mod scalar;

pub use num_bigint::BigInt;

pub use classify::{classify_thin_3d, lstar_3d, thin_criterion_3d, Thin3DClassification};
pub use counting::{box_polynomial, hstar, lattice_points, newton_number, EhrhartData};
pub use enumerate::{enumerate_simplices, question1_scan, EnumRecord, Question1Report};
pub use error::{Error, Result};
pub use gorenstein::{dual_polytope, gorenstein_data, is_gorenstein, GorensteinData};
pub use local::{is_thin, is_trivially_thin, local_hstar, LocalHStarReport};
pub use polynomial::IntPolynomial;
pub use polytope::{free_join, lattice_pyramid, Face, FaceLattice, LatticePolytope, VertexSet};
pub use scalar::Scalar;

pub type Polytope = LatticePolytope<BigInt>;
pub type Polytope64 = LatticePolytope<i64>;
pub type Polynomial = IntPolynomial<BigInt>;
pub type Polynomial64 = IntPolynomial<i64>;
pub type Matrix = linalg::IntMatrix<BigInt>;
pub type Matrix64 = linalg::IntMatrix<i64>;
