//! Angle functions, orthogonality relations, angle measures and angular
//! bisectors in two-dimensional normed planes.

pub mod error;
pub mod angles;
pub mod bisectors;
pub mod functionals;
pub mod laws;
pub mod measures;
pub mod norm;
pub mod orthogonality;
pub mod quadrature;
pub mod search;
pub mod vec2;

pub use angles::AngleFn;
pub use error::{Error, Result};
pub use laws::{AuditConfig, Evaluator, LawId, LawReport, Witness};
pub use measures::{build_measure, AngleMeasure, MeasureKind};
pub use norm::{regular_polygon, NormedPlane, PlaneSpec, RadonCheck, Side};
pub use orthogonality::{OrthoKind, OrthoResult};
pub use vec2::{det_form, Vec2};
