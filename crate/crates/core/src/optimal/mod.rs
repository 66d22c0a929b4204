//! Distance-2 machinery: binary Gray codes, sign layers, the layered
//! optimal type B code, distance-2 graphs with Hamilton search, and the
//! type D distance-2 cycles.

pub mod binary;
pub mod dcode;
pub mod graph;
pub mod layers;
pub mod ogcb;

pub use binary::{bce, brgc, BinaryWord};
pub use dcode::{check_moves, optimal_code_d, verify_distance2};
pub use graph::{
    distance2_graph, find_hamilton, is_restricted_move, restricted_distance2_graph,
    Distance2Graph, HamiltonTarget, SearchOutcome,
};
pub use layers::{
    apply_signs, children_of, largest_opener, layers, logical_coords, sign_assignments,
    sign_assignments_even, sign_bits, Layer, SignCoord,
};
pub use ogcb::{optimal_code_b, optimal_code_b_within, DEFAULT_CAP_OPTIMAL_B};
