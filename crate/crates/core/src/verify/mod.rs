//! Exhaustive oracles: offline and online list coloring, the painting game,
//! and chromatic number.

mod choosability;
mod chromatic;
mod game;
mod online;

pub use choosability::{
    is_f_choosable, ChoosabilityOutcome, ListAssignment, MAX_CHOOSABILITY_LIST_TOTAL, MAX_CHOOSABILITY_N,
};
pub use chromatic::{chromatic_number, is_k_critical, MAX_CHROMATIC_N};
pub use game::{play_paint_game, GameOutcome, Lister, Painter, Round, Winner};
pub use online::{is_online_f_choosable, PaintSolver, MAX_ONLINE_BUDGET, MAX_ONLINE_N};
