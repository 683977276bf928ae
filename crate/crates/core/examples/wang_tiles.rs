//! Wang tiles: pattern enumeration, strip languages and the border
//! protocol for stacking two strips.
//!
//! ```bash
//! cargo run --example wang_tiles
//! ```

use infcc::infinite::protocol_validate;
use infcc::wang::{border_protocol, concat_relation, enumerate_patterns, paper_tileset, render_pattern, strip_language};
use infcc::Result;

fn main() -> Result<()> {
    let t = paper_tileset();
    for tile in t.tiles() {
        println!("N {:<6} S {:<6} E {:<6} W {:<6} symbol {}", tile.north, tile.south, tile.east, tile.west, tile.symbol);
    }

    let patterns = enumerate_patterns(&t, 3, 3, 1)?;
    println!("{} 3x3 patterns extend by one tile on every side, for example:", patterns.len());
    for row in render_pattern(&t, patterns.last().unwrap()) {
        println!("  {}", row.join(" "));
    }

    for n in 1..=3 {
        let s = strip_language(&t, n)?;
        println!("strip of {n} rows: {} states, entropy {:.6}", s.graph.states(), s.graph.entropy(1e-12)?.bits());
    }

    for (n, m) in [(1, 1), (2, 1), (2, 2)] {
        let p = border_protocol(&t, n, m)?;
        let report = protocol_validate(&concat_relation(&t, n, m)?.into(), &p, 1e-12)?;
        println!("R_({n},{m}): border protocol valid = {}, H(Z) = {:.6}", report.valid, report.entropy_z.bits());
    }
    Ok(())
}
