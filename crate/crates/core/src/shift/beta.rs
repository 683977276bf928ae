//! β-shifts for simple Parry numbers.
//!
//! If `1 = d1/β + d2/β² + … + dp/β^p` with `dp ≥ 1`, the β-shift is the SFT
//! over `{0, …, d1}` forbidding `d1…d(j-1) c` for every `c > dj` and the
//! full word `d1…dp`. For `p = 1`, β is the integer `d1` and the shift is the
//! full shift on `{0, …, d1 - 1}`.

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::shift::sft::{build_sft, SftPresentation};

/// Parry's condition for a finite expansion of 1: `d1 ≥ 1`, `dp ≥ 1`, and
/// every proper shift of `d1…dp 0^∞` is lexicographically smaller than
/// the sequence itself. Expansions of length 1 also need `d1 ≥ 2`, so that
/// β > 1.
pub fn is_admissible(expansion: &[usize]) -> bool {
    let p = expansion.len();
    if p == 0 || expansion[0] == 0 || expansion[p - 1] == 0 {
        return false;
    }
    if p == 1 {
        return expansion[0] >= 2;
    }
    let digit = |i: usize| expansion.get(i).copied().unwrap_or(0);
    (1..p).all(|shift| {
        // compare σ^shift(d) with d over the first p positions; past them
        // the shifted sequence is all zeros and cannot win
        for i in 0..p {
            let (a, b) = (digit(shift + i), digit(i));
            if a != b {
                return a < b;
            }
        }
        false
    })
}

fn check(expansion: &[usize]) -> Result<()> {
    if is_admissible(expansion) {
        Ok(())
    } else {
        Err(Error::input(format!(
            "{expansion:?} is not an admissible expansion of 1"
        )))
    }
}

pub fn beta_shift(expansion: &[usize]) -> Result<SftPresentation> {
    check(expansion)?;
    let d1 = expansion[0];
    if expansion.len() == 1 {
        return Ok(SftPresentation::full_shift(&Alphabet::digits(d1)));
    }
    let alphabet = Alphabet::digits(d1 + 1);
    let mut forbidden: Vec<Word> = Vec::new();
    for (j, &dj) in expansion.iter().enumerate() {
        for c in dj + 1..=d1 {
            let mut w = expansion[..j].to_vec();
            w.push(c);
            forbidden.push(w);
        }
    }
    forbidden.push(expansion.to_vec());
    build_sft(&alphabet, &forbidden)
}

/// The root β > 1 of `x^p = d1 x^(p-1) + … + dp`, by bisection.
pub fn beta_root(expansion: &[usize]) -> Result<f64> {
    check(expansion)?;
    let f = |x: f64| {
        expansion
            .iter()
            .fold(1.0, |acc, &d| acc * x - d as f64)
    };
    // f(1) < 0 and f(d1 + 1) > 0 for admissible expansions
    let (mut lo, mut hi) = (1.0, expansion[0] as f64 + 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_beta_is_full_shift() {
        let s = beta_shift(&[2]).unwrap();
        assert_eq!(s.alphabet().len(), 2);
        assert!((s.entropy(1e-12).bits() - 1.0).abs() < 1e-12);
        assert!((beta_root(&[2]).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn golden_ratio() {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((beta_root(&[1, 1]).unwrap() - phi).abs() < 1e-12);
        let s = beta_shift(&[1, 1]).unwrap();
        assert!(!s.accepts(&[1, 1]));
        assert!(s.accepts(&[1, 0, 1]));
    }

    #[test]
    fn admissibility() {
        assert!(is_admissible(&[1, 1]));
        assert!(is_admissible(&[2, 1, 1]));
        assert!(is_admissible(&[1, 0, 1]));
        assert!(is_admissible(&[1, 1, 1]));
        // σ²(1011) = 11 > 10
        assert!(!is_admissible(&[1, 0, 1, 1]));
        assert!(!is_admissible(&[1]));
        assert!(!is_admissible(&[2, 0]));
        assert!(beta_shift(&[1, 2]).is_err());
    }
}
