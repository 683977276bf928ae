//! Fractional covers and the amortized cover number of tensor powers.
//!
//! ```bash
//! cargo run --release --example amortized
//! ```

use infcc::finite::{amortized_sequence, fractional_cover, RelationMatrix, DEFAULT_BUDGET};
use infcc::Result;

fn main() -> Result<()> {
    let cases = [
        ("EQ_1", RelationMatrix::identity(2)),
        ("NEQ on 3 values", RelationMatrix::from_fn(3, 3, |i, j| i != j)),
        ("NEQ_2", RelationMatrix::neq_bits(2)),
    ];
    for (name, r) in cases {
        let f = fractional_cover(&r, 1e-6)?;
        println!("{name}: C* in [{:.6}, {:.6}], log2 C* = {:.6}", f.value, f.upper, f.bits);
        let seq = amortized_sequence(&r, 2, DEFAULT_BUDGET)?;
        for row in &seq.rows {
            println!(
                "  n = {}: {:.6} <= log2 C(R^n)/n <= {:.6}, running min {:.6}",
                row.n, row.lower_bits, row.upper_bits, row.fekete_bits
            );
        }
        seq.write_csv(std::io::stdout())?;
    }
    Ok(())
}
