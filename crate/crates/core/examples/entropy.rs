//! Entropy of shifts of finite type, exact word counts and beta shifts.
//!
//! ```bash
//! cargo run --example entropy
//! ```

use infcc::shift::{beta_root, beta_shift, build_sft_from_text, SftPresentation};
use infcc::{Alphabet, Result};

fn main() -> Result<()> {
    let bin = Alphabet::digits(2);
    let golden = build_sft_from_text(&bin, &["11"])?;
    let h = golden.entropy(1e-12);
    println!("golden mean: {h:?}");
    for n in [8, 16, 64] {
        println!("  c_{n} = {}", golden.count_words(n));
    }

    let three = SftPresentation::full_shift(&Alphabet::digits(3));
    println!("full 3-shift: {:.9} bits", three.entropy(1e-12).bits());

    // no 000 and no 111 over {0, 1}
    let runs = build_sft_from_text(&bin, &["000", "111"])?;
    println!("runs of length at most 2: {:.9} bits", runs.entropy(1e-12).bits());

    for digits in [vec![1, 1], vec![2, 1], vec![1, 1, 1]] {
        let s = beta_shift(&digits)?;
        println!(
            "beta shift {digits:?}: beta = {:.9}, entropy = {:.9}",
            beta_root(&digits)?,
            s.entropy(1e-12).bits()
        );
    }
    Ok(())
}
