//! Sweep specifications for `bench`: comma-separated values and inclusive
//! ranges, e.g. `4,5` or `1..3` or `10,20..22`.

use thiserror::Error;

/// Largest number of values one sweep axis may expand to.
pub const MAX_SWEEP_VALUES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("empty sweep")]
    Empty,
    #[error("bad sweep value {0:?}")]
    BadValue(String),
    #[error("range {start}..{end} is reversed")]
    Reversed { start: u64, end: u64 },
    #[error("sweep expands to more than {MAX_SWEEP_VALUES} values")]
    TooLarge,
}

fn value(tok: &str) -> Result<u64, SweepError> {
    tok.trim().parse().map_err(|_| SweepError::BadValue(tok.trim().to_string()))
}

/// Expands a sweep into its values in the written order; duplicates are kept.
pub fn parse_sweep(spec: &str) -> Result<Vec<u64>, SweepError> {
    if spec.trim().is_empty() {
        return Err(SweepError::Empty);
    }
    let mut out = Vec::new();
    for item in spec.split(',') {
        match item.split_once("..") {
            Some((a, b)) => {
                let (start, end) = (value(a)?, value(b)?);
                if start > end {
                    return Err(SweepError::Reversed { start, end });
                }
                if (end - start) as u128 + out.len() as u128 >= MAX_SWEEP_VALUES as u128 {
                    return Err(SweepError::TooLarge);
                }
                out.extend(start..=end);
            }
            None => {
                if out.len() >= MAX_SWEEP_VALUES {
                    return Err(SweepError::TooLarge);
                }
                out.push(value(item)?);
            }
        }
    }
    Ok(out)
}
