//! Exact decision procedures: Hamilton cycles, chords, exhaustive labeling
//! search and the graph6 classification pipeline.

mod budget;
mod hamilton;
mod npl;
mod prime;
mod scan;

pub use budget::{CancelToken, SearchBudget, SearchOutcome, SearchResult};
pub use hamilton::{
    find_chord_4k, find_cycle_missing_one, find_hamilton_cycle, find_odd_chord, NearCycle,
};
pub use npl::{local_search, npl_dfs, search_npl, search_npl_with, NplSearchOptions};
pub use prime::search_prime_labeling;
pub use scan::{
    classify, read_checkpoint, scan_file_resumable, scan_graph6_str, scan_graph6_stream,
    Checkpoint, ScanConfig, ScanError, ScanMode, ScanRecord, ScanReport, ScanSummary,
    LONG_RUNNING_ORDER,
};
