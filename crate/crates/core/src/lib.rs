//! Cube complexes built from planar forests, their finite covers, and
//! checks of the conditions that make a cube complex special.

pub mod complex;
pub mod cover;
pub mod export;
pub mod forests;
pub mod hyperplanes;
pub mod report;

pub use complex::{build_complex, check_npc, ComplexModel, EdgeIdx, Parameter, Space, Subcube, TypeIndex};
pub use cover::{verify_covering, verify_relators, Permutation, Presentation, PresentationKind};
pub use forests::{enumerate_forests, parse_forest, OrderedSubset, PlanarForest, TypeSet};
pub use hyperplanes::{compute_hyperplanes, specialness_report, verify_type_partition, HyperplanePartition};
pub use report::{Witness, TOOL_VERSION};
