//! Edge and spectral bounds, the Erdős–Gallai checks, peeling, stability
//! classification and the dominating-vertex decomposition.

mod bounds;
pub(crate) mod classify;
mod decompose;
mod erdos_gallai;
mod peel;

pub use bounds::{
    bound_report, das_bound, das_exact, edge_lower_bound, merris_bound, merris_exact, merris_value,
    snk_plus_sandwich, snk_plus_sandwich_exact, BoundReport, EdgeBound, BOUND_TOL,
};
pub use classify::{as_classify, AsClause, AsVerdict, AsWitness, CLASSIFY_CAP};
pub use decompose::{decompose_dominated, Decomposition};
pub use erdos_gallai::{
    blocks, erdos_gallai_cycle_check, erdos_gallai_path_check, nikiforov_partition_check,
    ore_bound_check, EdgeCheck, EdgeVerdict, OreVerdict, PartitionCheck, PARTITION_CAP,
};
pub use peel::{peel, PeelTrace};
