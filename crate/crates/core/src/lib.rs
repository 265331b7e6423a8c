//! Rees algebras of modules over polynomial rings, generic Bourbaki ideals,
//! residual intersections and executable checks of Cohen-Macaulay and
//! linear-type criteria.

pub mod bourbaki;
pub mod error;
pub mod field;
pub mod gallery;
pub mod gb;
pub mod ideal;
pub mod matrix;
pub mod modspec;
pub mod module;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod rees;
pub mod residual;
pub mod theorem;
pub mod ring;

pub use error::{Error, Result};
pub use field::{Coeff, FieldSpec};
pub use ideal::IdealData;
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_poly;
pub use poly::Poly;
pub use ring::{Context, PolyRing, Settings, StatsSnapshot};
pub use matrix::PolyMatrix;
pub use module::{FreeResolution, PModule};
pub use rees::{ReductionData, ReesPackage};
