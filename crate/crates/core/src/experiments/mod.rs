//! Experiment drivers: the lower-bound comparison tables, α sweeps against
//! eigenvalues, predicate searches over graph streams, bound timing, and
//! per-graph invariant checks.
//!
//! Everything that fans out uses rayon and collects in input order, so CSV
//! output is byte-identical for identical inputs.

mod format;
mod search;
mod sweep;
mod timing;
mod verify;

pub use format::{
    alpha_grid, clean_alpha, edge_list_field, figure_alpha_grid, format_plain, format_value,
    parse_alpha_spec, round_half_even, table_alpha_grid,
};
pub use search::{
    random_graphs, search, GraphSource, Predicate, SearchOutcome, SearchTask, Witness,
    RANDOM_EDGE_PROBABILITIES,
};
pub use sweep::{
    figure_preset, figure_sweep, reproduce_table, sweep_compare, Cell, Reference, SweepRow,
    SweepTable, TableId,
};
pub use timing::{
    default_timing_families, timing_compare, write_timing_csv, TimedBound, TimingRecord,
    WARMUP_REPS,
};
pub use verify::{verify_graph, Check, Status};
