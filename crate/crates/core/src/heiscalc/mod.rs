//! Diagrammatic route: closed and open strand diagrams in the degenerate
//! Heisenberg calculus, reduced to polynomials in the dotted bubbles.
//!
//! ```
//! use boolean_kerov::heiscalc::reduce_alpha;
//! use boolean_kerov::combinatorics::Partition;
//!
//! let p = reduce_alpha(&Partition::row(3), &[0, 0, 0]).unwrap();
//! assert_eq!(p.to_string(), "y2 + y0^2 + y0");
//! ```

mod alpha;
mod center;
mod diagram;
mod strand;

pub use alpha::{reduce_alpha, y_to_x, AlphaReducer};
pub use center::{evaluate_center, CenterElement};
pub use diagram::{
    bubble_move_full, bubble_move_step, extract_bubbles, BubbleMove, Configuration, DiagramState,
    ExtractionOrder,
};
pub use strand::{
    aggregate_by_cycle_type, canonical_open, check_expansion, collide, curl, expand_dotted_strand,
    expand_dotted_strands, CollisionRule, PermDiagramExpansion,
};
