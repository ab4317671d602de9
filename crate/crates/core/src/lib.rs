//! Exact-arithmetic model of pointwise G₂-structure algebra on ℝ⁷.

pub mod cayley;
pub mod decomp;
pub mod endo;
pub mod exterior;
pub mod g2maps;
pub mod invariants;
pub mod json;
pub mod linalg;
pub mod record;
pub mod sample;
pub mod scalar;
pub mod torsion;

pub use cayley::{a_v, cross, G2Constants};
pub use decomp::{component_norms, components, p_map, G2Components, Module};
pub use endo::Endo7;
pub use exterior::{Covec7, Form, Vec7};
pub use scalar::{Scalar, Q};
