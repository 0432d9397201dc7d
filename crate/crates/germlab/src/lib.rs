//! Exact local computer algebra for singularity invariants of map germs.
//!
//! The crate computes with polynomial representatives of analytic germs:
//! standard bases under local, global and mixed block orderings (Mora's
//! tangent-cone algorithm), elimination, ring-map kernels and preimages,
//! syzygies, vector-space dimensions of quotients, and Samuel multiplicities.
//! On top of the engine it derives the classical invariants of isolated
//! complete intersection singularities and of finitely determined map germs:
//! Milnor and Tjurina numbers, contact codimension, image equations,
//! conductors, Fitting ideals, the Jacobian module of an image hypersurface,
//! and the equality-vs-inequality verdict between the image Milnor number and
//! the codimension of a germ.
//!
//! Start with the runnable examples (`cargo run --example mond_verdict`) or
//! the `germlab` binary, which reads small problem files:
//!
//! ```text
//! ring x, y, z;
//! icis: x^3 + y^3 - z^2;
//! map: x, y, z^3 + x*z + y^2;
//! ```
//!
//! All arithmetic is exact over the rationals; every reported invariant is an
//! integer computed from a staircase count, never a float.

pub mod error;
pub mod germ;
pub mod invariants;
pub mod jet;
pub mod linalg;
pub mod matrix;
pub mod mond;
pub mod parse;
pub mod poly;
pub mod report;
pub mod ring;
pub mod stdbasis;
pub mod vecpoly;

pub mod cli;

pub use error::{Error, Result};
pub use germ::MapGerm;
pub use poly::Poly;
pub use ring::{BlockOrder, Ring};
pub use stdbasis::{Dim, Ideal, Submodule};
pub use vecpoly::VecPoly;
