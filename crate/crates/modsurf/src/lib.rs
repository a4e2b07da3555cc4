//! Exact-arithmetic engine for line-arrangement operators, the matroids
//! M₇/M₈ and their realization surfaces, the induced self-maps, and the
//! associated elliptic-fibration data.

pub mod arrangements;
pub(crate) mod consts;
pub mod dynamics;
pub mod error;
pub mod families;
pub mod matroids;
pub mod modular;
pub mod mpoly;
pub mod projgeom;
pub mod semiconj;
pub mod scalar;

pub use error::{Error, Result};
