//! Deciding equality of sofic shifts, with shortest distinguishing words.
//!
//! ```bash
//! cargo run --example sofic_equality
//! ```

use infcc::reproduce::even_shift;
use infcc::shift::{apply_block_code, build_sft_from_text, sofic_compare, BlockCode, SftPresentation, SoficPresentation};
use infcc::{Alphabet, Result};

fn show(name: &str, a: &SoficPresentation, b: &SoficPresentation) -> Result<()> {
    let cmp = sofic_compare(a, b)?;
    match cmp.witness {
        None => println!("{name}: equal"),
        Some(w) => println!("{name}: differ at `{}`", cmp.alphabet.render(&w)),
    }
    Ok(())
}

fn main() -> Result<()> {
    let bin = Alphabet::digits(2);
    let golden = build_sft_from_text(&bin, &["11"])?;
    let full = SftPresentation::full_shift(&bin);
    let recoded = golden.with_window(5)?;
    show("golden vs its window-5 recoding", &(&golden).into(), &(&recoded).into())?;
    show("golden vs full", &(&golden).into(), &(&full).into())?;
    show("even vs full", &even_shift(), &(&full).into())?;

    // x_i XOR x_{i+1} keeps the entropy of the golden mean but not its language
    let xor = BlockCode::from_fn(bin.clone(), bin.clone(), 1, |w| w[1] ^ w[2])?;
    let image = apply_block_code(&xor, &golden.into())?;
    println!("XOR image of golden mean: {:.9} bits", image.entropy(1e-12)?.bits());
    show("XOR image vs golden", &image, &(&build_sft_from_text(&bin, &["11"])?).into())?;
    Ok(())
}
