//! Nondeterministic communication complexity of finite relations.

pub mod amortized;
pub mod cover;
pub mod fractional;
pub mod relation;

pub use amortized::{amortized_sequence, AmortizedRow, AmortizedSequence};
pub use cover::{
    cover_number_exact, cover_number_greedy, fooling_check, maximal_rectangles, neq_index_protocol,
    validate_cover, CoverResult, FoolingBound, DEFAULT_BUDGET,
};
pub use fractional::{fractional_cover, fractional_cover_mwu, FractionalCover, LpMethod};
pub use relation::{tensor_power, tensor_power_guarded, Rectangle, RelationMatrix};
