//! Farey-graph arithmetic and the classification of tight contact structures
//! on surgeries on the right-handed trefoil.

pub mod atlas;
pub mod cable;
pub mod error;
pub mod paths;
pub mod sign;
pub mod slope;
pub mod tight;

pub use atlas::{
    classify, enumerate_structures, exceptional_slopes, full_path, mixed_tori, n_of, sweep, triangle_position,
    verdict_summary, Citation, ExceptionalMode, Fillability, FillabilityVerdict, MixedTorus, SideEdge, SweepRow,
    TightStructureId, TrianglePosition, VerdictRecord, VerdictSummary,
};
pub use cable::{apply_map, cable_surgery_slope, legendrian_cable_surgery, reglue_map, MobiusMap};
pub use error::{Error, Result};
pub use paths::{blocks, decrement_path, lengthen_through, minimal_path, BlockDecomposition, Direction, FareyPath};
pub use sign::Sign;
pub use slope::{cf_minus, cf_value, det, farey_sum, is_edge, neighbors_in_interval, ContinuedFraction, Slope};
pub use tight::{
    count_tight, count_tight_upper, enumerate_tight, is_tight, phi, shorten_to_minimal, shuffle_canonical,
    BlockSigns, DecoratedPath, ShuffleClass, SolidTorusStructure,
};
