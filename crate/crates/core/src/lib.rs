//! Moore bounds, congruence algebra and optimal families for mixed Cayley
//! graphs of finite Abelian groups.

pub mod bounds;
pub mod error;
pub mod lattice;

pub use bounds::{
    mac_bound, mac_bound_improved, mac_bound_order5, moore_count_oracle, moore_mixed_general, DegreeSpec,
};
pub use error::{Error, Result};
pub use lattice::{
    enumerate_abelian_groups, group_from_matrix, smith_normal_form, AbelianGroup, GroupElement, IntMatrix,
    SmithDecomposition,
};
pub mod cayley;
pub mod families;
pub mod search;
pub mod verify;

pub use cayley::{MixedCayleyGraph, MixedGenSet, StretchSteps};
pub use families::Family;
pub use search::{search_optimal, SearchResult, SearchSpec, Witness};
