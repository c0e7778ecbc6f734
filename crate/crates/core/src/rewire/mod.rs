//! Rewiring moves that raise `q`, hill climbing over `C_{2k+2}`-free graphs,
//! and exhaustive search for maximizers over graph6 streams.

mod climb;
mod moves;
mod record;
mod verify;

pub use climb::{hill_climb, CLIMB_CAP, RANDOM_STARTS};
pub use moves::{apply_move, move_increases_q, MoveVerdict, RewireMove};
pub use record::{is_snk_plus, MaximizerRecord, SearchMethod, SpectralMode};
pub use verify::{exhaustive_verify, exhaustive_verify_with, VERIFY_CAP};
