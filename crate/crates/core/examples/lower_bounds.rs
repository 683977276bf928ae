//! Lower bounds for infinite relations: conditional entropy at periodic
//! points, fooling-shift certificates and common factors.
//!
//! ```bash
//! cargo run --example lower_bounds
//! ```

use infcc::infinite::{
    common_factor_bound, conditional_entropy, conditional_entropy_sup, eq_shift, fooling_certificate, PeriodicWord,
};
use infcc::shift::{BlockCode, SftPresentation, Subshift};
use infcc::{Alphabet, Result};

fn main() -> Result<()> {
    let bin = Alphabet::digits(2);
    let pair = Alphabet::product(&[&bin, &bin]);
    let blocks = [[0, 0], [0, 1], [1, 1]].map(|c| vec![pair.join(&c)]);
    let leq: Subshift = SftPresentation::from_blocks(pair, 1, blocks)?.into();
    for cycle in [vec![0], vec![1], vec![0, 1], vec![0, 0, 1]] {
        let h = conditional_entropy(&leq, &PeriodicWord::new(cycle.clone())?, 1e-12)?;
        println!("H_LEQ(Y | ({cycle:?})^Z) = {h:.6}");
    }
    let sup = conditional_entropy_sup(&leq, 4, 1e-12)?;
    println!("sup over periods <= 4: {:.6} at {:?}", sup.estimate, sup.attained_at);

    let full: Subshift = SftPresentation::full_shift(&bin).into();
    let eq = eq_shift(&full)?;
    let f = fooling_certificate(&eq, &eq, 1e-9)?;
    println!("EQ fooling shift: certified = {}, bound = {:?}", f.certified, f.bound);

    let id = BlockCode::identity(&bin);
    let c = common_factor_bound(&eq, &id, &id, &full, 1e-9)?;
    println!("EQ common factor: bound = {:.6}, onto = {}", c.bound, c.onto);
    Ok(())
}
