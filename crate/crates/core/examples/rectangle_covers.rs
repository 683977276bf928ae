//! Nondeterministic communication complexity of finite relations: exact
//! and greedy rectangle covers, the index protocol for NEQ and fooling sets.
//!
//! ```bash
//! cargo run --example rectangle_covers
//! ```

use infcc::finite::{
    cover_number_exact, cover_number_greedy, fooling_check, neq_index_protocol, RelationMatrix, DEFAULT_BUDGET,
};
use infcc::Result;

fn main() -> Result<()> {
    for k in 1..=3 {
        let eq = RelationMatrix::eq_bits(k);
        let c = cover_number_exact(&eq, DEFAULT_BUDGET)?;
        let diagonal: Vec<_> = (0..1 << k).map(|i| (i, i)).collect();
        let f = fooling_check(&eq, &diagonal)?;
        println!("EQ_{k}: cover {} ({} bits), fooling set of size {}", c.cover_number, c.nd_cc_bits, f.size);
    }

    for k in 1..=3 {
        let neq = RelationMatrix::neq_bits(k);
        let exact = cover_number_exact(&neq, DEFAULT_BUDGET)?;
        let greedy = cover_number_greedy(&neq)?;
        let index = neq_index_protocol(k)?;
        println!(
            "NEQ_{k}: exact {} ({}), greedy {}, index protocol {}",
            exact.cover_number,
            if exact.exact { "proven" } else { "budget hit" },
            greedy.cover_number,
            index.cover_number
        );
    }

    let leq = RelationMatrix::from_fn(4, 4, |i, j| i <= j);
    let c = cover_number_exact(&leq, DEFAULT_BUDGET)?;
    println!("LEQ on 4 values: cover {}", c.cover_number);
    for rect in &c.rectangles {
        println!("  rows {:?} x cols {:?}", rect.rows, rect.cols);
    }
    Ok(())
}
