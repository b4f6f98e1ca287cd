//! Exact combinatorics of alternating sign matrices: the lattice of ASMs,
//! prism tableaux and ASM polynomials, pipe dreams and Schubert
//! polynomials, and the antidiagonal initial ideals of ASM varieties, with
//! exhaustive cross-checks between them.

pub mod algebra;
pub mod asm;
pub mod cli;
pub mod error;
pub mod ideal;
pub mod perm;
pub mod pipedream;
pub mod prism;
pub mod verify;

pub use algebra::{Monomial, Polynomial};
pub use asm::{Asm, CornerSum, GridCell, MonotoneTriangle, PartialAsm};
pub use error::{Error, Result};
pub use perm::{Perm, Word};
pub use pipedream::{Facet, PlusDiagram, SquareWord};
pub use prism::{Model, Partition, PrismShapeSpec, PrismTableau, Rssyt, UnstableRule};
