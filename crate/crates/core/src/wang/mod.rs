//! Wang tiles, strip languages of the two-dimensional shifts they define,
//! and residual profiles of one-dimensional languages.

pub mod residual;
pub mod strip;
pub mod tiles;

pub use residual::{
    counterexample_oracle, residual_profile_count, write_residual_csv, CounterexampleOracle,
    CounterexampleState, FnOracle, LanguageOracle, ResidualCount, SoficOracle,
};
pub use strip::{border_protocol, column_alphabet, concat_relation, strip_language, StripPresentation};
pub use tiles::{enumerate_patterns, paper_tileset, render_pattern, Pattern, TileSet, WangTile};
