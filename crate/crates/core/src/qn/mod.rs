//! Weight and arc diagrams for q(n), Littlewood-Richardson coefficients, and the
//! stable tensor rules for gl(1|n) blocks.

pub mod arcs;
pub mod diagram;
pub mod gl1n;
pub mod lr;

pub use arcs::{all_arc_sets, arc_diagram, ds_multiplicity, ell, Arc, ArcDiagram, Multiplicity, QmultError};
pub use diagram::{weight_diagram, weight_of_diagram, HalfIntWeight, Symbol, WeightDiagram, WeightError};
pub use gl1n::{stable_tensor_gl1n, Gl1nError, GlBlock, GlKind};
pub use lr::{lr_coefficient, weyl_dim, Partition};
