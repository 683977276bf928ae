//! Infinite protocols: the EQ protocol on a shift, lifting a finite cover
//! to a protocol for R^Z, exact validation and extraction back to R^n.
//!
//! ```bash
//! cargo run --example protocols
//! ```

use infcc::finite::{cover_number_exact, tensor_power, RelationMatrix, DEFAULT_BUDGET};
use infcc::infinite::{eq_protocol, eq_shift, extract_protocol, lift_protocol, protocol_validate, relation_shift};
use infcc::reproduce::even_shift;
use infcc::shift::Subshift;
use infcc::Result;

fn main() -> Result<()> {
    let t: Subshift = even_shift().into();
    let report = protocol_validate(&eq_shift(&t)?, &eq_protocol(&t)?, 1e-9)?;
    println!("EQ on the even shift: valid = {}, H(Z) = {:.6}", report.valid, report.entropy_z.bits());

    let r = RelationMatrix::neq_bits(1);
    let s: Subshift = relation_shift(&r)?.into();
    for n in 1..=3 {
        let cover = cover_number_exact(&tensor_power(&r, n)?, DEFAULT_BUDGET)?;
        let p = lift_protocol(&r, &cover.rectangles, n)?;
        let v = protocol_validate(&s, &p, 1e-9)?;
        let e = extract_protocol(&p, n)?;
        println!(
            "NEQ_1, n = {n}: |Z| = {}, H(Z') = {:.6}, valid = {}, extracted {} messages, {:.3} bits",
            cover.cover_number,
            v.entropy_z.bits(),
            v.valid,
            e.message_count,
            e.bits
        );
    }

    // a protocol for the wrong relation is rejected with a witness
    let eq: Subshift = relation_shift(&RelationMatrix::identity(2))?.into();
    let cover = cover_number_exact(&r, DEFAULT_BUDGET)?;
    let report = protocol_validate(&eq, &lift_protocol(&r, &cover.rectangles, 1)?, 1e-9)?;
    println!("NEQ protocol against EQ: valid = {}, witness = {:?}", report.valid, report.witness);
    Ok(())
}
