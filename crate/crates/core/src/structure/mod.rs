//! Structural quantities: Gallai trees, the maximum independent cover number,
//! the low/high vertex split and the counting inequalities built on them.

mod even_cycle;
mod gallai;
mod gallai_count;
mod mic;
mod random;
mod split;
mod triangle_free;

pub use even_cycle::{find_even_cycle_one_chord, EvenCycle};
pub use gallai::{classify_block, is_gallai_forest, is_gallai_tree, BlockKind, GallaiVerdict};
pub use gallai_count::{gallai_count_check, GallaiCount};
pub use mic::{mic, mic_within, MicResult};
pub use random::{random_gallai_forest, random_gallai_tree, GallaiTreeGenerator};
pub use split::{beta_t, low_high_split, sigma, LowHighSplit};
pub use triangle_free::{triangle_free_mic_check, TriangleFreeMic, LOG_TOLERANCE};
