//! Infinite nondeterministic protocols for shifts `S ⊆ X × Y`.

pub mod bounds;
pub mod lift;
pub mod protocol;

pub use bounds::{
    common_factor_bound, conditional_entropy, conditional_entropy_sup, fooling_certificate,
    CommonFactorReport, ConditionalReport, FoolingReport, PeriodicWord,
};
pub use lift::{extract_protocol, lift_protocol, ExtractedProtocol, BLANK};
pub use protocol::{
    eq_protocol, eq_shift, protocol_language, protocol_validate, relation_shift, trivial_protocol,
    ProtocolLanguage, ProtocolTriple, ValidationReport,
};
