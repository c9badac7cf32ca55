//! Computations in the stable module category of the symmetric algebras of
//! finite representation type whose non-projective modules have Ω-period
//! dividing four.
//!
//! The three families are
//!
//! * `ae1(m)`: one loop `a`, relation `a^{m+1} = 0`;
//! * `ae2(m)`: `a: 0 → 1`, `b: 1 → 0`, relations `(ab)^m a = (ba)^m b = 0`;
//! * `ae3(m)`: loop `r` at 0, `a: 0 → 1`, `b: 1 → 0`, relations
//!   `ra = br = 0`, `ab = r^m`.
//!
//! The crate builds each algebra by rewriting completion, describes its
//! non-projective indecomposables as string modules, computes syzygies,
//! stable Hom and Ext¹ by exact linear algebra over F_p, and classifies the
//! modules with stable endomorphism ring `k` together with their universal
//! deformation rings.

pub mod arquiver;
pub mod cli;
pub mod deformation;
pub mod error;
pub mod families;
pub mod homology;
pub mod linalg;
pub mod quiver;
pub mod strings;

pub use error::{Error, Result};
pub use families::{Family, FamilyAlgebra};
pub use homology::{ModuleMap, Representation};
pub use linalg::{Fp, Matrix};
pub use quiver::{Algebra, AlgebraElem, Path, Quiver, RewriteRule};
pub use strings::{Letter, StringName, StringWord};
