//! Amortized complexity `lim log2 C(R^n) / n`, bracketed per `n`.

use std::io::Write;

use serde::Serialize;

use crate::error::Result;
use crate::finite::cover::cover_number_exact;
use crate::finite::fractional::{fractional_cover, FractionalCover};
use crate::finite::relation::{tensor_power, RelationMatrix};

#[derive(Clone, Debug, Serialize)]
pub struct AmortizedRow {
    pub n: usize,
    /// Best known cover of `R^n`, possibly a product of smaller ones.
    pub cover_upper: u128,
    /// Proven lower bound on `C(R^n)`.
    pub cover_lower: u128,
    /// True when `cover_upper` is the exact minimum.
    pub exact: bool,
    pub upper_bits: f64,
    pub lower_bits: f64,
    /// `min_{m ≤ n} log2 C(R^m) / m`.
    pub fekete_bits: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct AmortizedSequence {
    pub rows: Vec<AmortizedRow>,
    pub fractional: FractionalCover,
    /// `log2 C*(R)`, the limit of the sequence.
    pub limit_bits: f64,
}

impl AmortizedSequence {
    /// CSV with columns `n, upper_bits, lower_bits`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["n", "upper_bits", "lower_bits"])
            .map_err(csv_error)?;
        for row in &self.rows {
            w.write_record([
                row.n.to_string(),
                row.upper_bits.to_string(),
                row.lower_bits.to_string(),
            ])
            .map_err(csv_error)?;
        }
        w.flush()?;
        Ok(())
    }
}

pub(crate) fn csv_error(e: csv::Error) -> crate::error::Error {
    crate::error::Error::Io(std::io::Error::other(e))
}

/// Brackets on `log2 C(R^n) / n` for `n = 1..=n_max`.
///
/// Upper bounds come from the exact search (or its best cover when the
/// budget runs out) improved by submultiplicativity
/// `C(R^(a+b)) ≤ C(R^a)·C(R^b)`. Lower bounds are the larger of the
/// search's bound and `C*(R)^n`, since the fractional cover number is
/// multiplicative and never exceeds the integral one.
pub fn amortized_sequence(r: &RelationMatrix, n_max: usize, budget: u64) -> Result<AmortizedSequence> {
    let fractional = fractional_cover(r, 1e-9)?;
    let mut rows: Vec<AmortizedRow> = Vec::with_capacity(n_max);
    let mut fekete = f64::INFINITY;
    for n in 1..=n_max {
        let power = tensor_power(r, n)?;
        let result = cover_number_exact(&power, budget)?;
        let mut upper = result.cover_number as u128;
        for a in 1..n {
            upper = upper.min(rows[a - 1].cover_upper * rows[n - a - 1].cover_upper);
        }
        let exact = result.exact && upper == result.cover_number as u128;
        let fractional_floor = (fractional.value.powi(n as i32) * (1.0 - 1e-9)).ceil() as u128;
        let lower = if exact {
            upper
        } else {
            (result.lower_bound.unwrap_or(1) as u128).max(fractional_floor)
        };
        let upper_bits = (upper as f64).log2() / n as f64;
        fekete = fekete.min(upper_bits);
        rows.push(AmortizedRow {
            n,
            cover_upper: upper,
            cover_lower: lower,
            exact,
            upper_bits,
            lower_bits: (lower as f64).log2() / n as f64,
            fekete_bits: fekete,
        });
    }
    Ok(AmortizedSequence {
        rows,
        limit_bits: fractional.bits,
        fractional,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::cover::DEFAULT_BUDGET;

    #[test]
    fn eq_one_is_constant() {
        let s = amortized_sequence(&RelationMatrix::identity(2), 3, DEFAULT_BUDGET).unwrap();
        for row in &s.rows {
            assert_eq!(row.upper_bits, 1.0);
            assert_eq!(row.lower_bits, 1.0);
        }
        assert!((s.limit_bits - 1.0).abs() < 1e-9);
    }

    #[test]
    fn all_ones_is_zero() {
        let s = amortized_sequence(&RelationMatrix::all_ones(3, 3), 2, DEFAULT_BUDGET).unwrap();
        assert!(s.rows.iter().all(|r| r.upper_bits == 0.0));
    }

    #[test]
    fn csv_layout() {
        let s = amortized_sequence(&RelationMatrix::identity(2), 2, DEFAULT_BUDGET).unwrap();
        let mut buf = Vec::new();
        s.write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "n,upper_bits,lower_bits\n1,1,1\n2,1,1\n");
    }
}
