//! Counting residual profiles to separate sofic from non-sofic languages.
//!
//! ```bash
//! cargo run --example residuals
//! ```

use infcc::reproduce::{even_shift, golden_mean};
use infcc::wang::{counterexample_oracle, residual_profile_count, write_residual_csv, LanguageOracle, SoficOracle};
use infcc::Result;

fn counts<O: LanguageOracle>(oracle: &O) -> Vec<usize> {
    residual_profile_count(oracle, 8, 10).into_iter().map(|c| c.count).collect()
}

fn main() -> Result<()> {
    let ce = counterexample_oracle();
    println!("golden mean    {:?}", counts(&SoficOracle::new(&(&golden_mean()).into())?));
    println!("even shift     {:?}", counts(&SoficOracle::new(&even_shift())?));
    println!("counterexample {:?}", counts(&ce));

    let w = ce.alphabet().parse_word("caadbbc")?;
    println!("caadbbc in the counterexample shift: {}", ce.contains(&w));
    write_residual_csv(&residual_profile_count(&ce, 8, 10), std::io::stdout())?;
    Ok(())
}
