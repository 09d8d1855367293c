//! Greedy coloring pipelines driven by a vertex ordering: list coloring of
//! `G²`, the Lister/Painter game, and L(p,q)-labeling.
//!
//! Every pipeline scans the ordering once and only looks at earlier
//! vertices, so a vertex with `b` earlier square-neighbors is blocked by at
//! most `b` colors (or, for labelings, by a bounded number of intervals).

mod list;
mod lpq;
mod paint;
pub mod validate;

pub use list::{greedy_list_color, Coloring, ListAssignment};
pub use lpq::{greedy_lpq, greedy_lpq_with, span_bound, Labeling, LpqParams};
pub use paint::{
    lister_by_name, paint_game, AllUncolored, Lister, PaintOutcome, PaintRound, PaintTranscript, RandomSubset, Scripted,
};
