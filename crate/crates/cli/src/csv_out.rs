use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use thiserror::Error;

/// Significant digits written for every real field.
pub const SIG_DIGITS: usize = 12;

#[derive(Debug, Error)]
pub enum EmitError {
    #[error("row {row} has {got} fields, header has {want}")]
    Ragged { row: usize, got: usize, want: usize },
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Csv(#[from] csv::Error),
}

pub const FIGURE1: &[&str] = &["k", "A2", "C_analytic"];
pub const FIGURE1_NUMERIC: &[&str] = &["k", "A2", "C_analytic", "C_numeric", "abs_err"];
pub const VALIDATE: &[&str] = &["k", "partition", "C_analytic", "C_numeric", "abs_err"];
pub const FIGURE2: &[&str] = &["k", "oracle_gain", "reflection_drop"];
pub const OPTIMALITY: &[&str] = &["n", "T", "lhs", "rhs", "satisfied"];
pub const AMPLITUDES: &[&str] = &["index", "re", "im"];
pub const SPEEDUP: &[&str] = &["k", "P_integrated", "P_closed_form"];

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Int(u64),
    Real(f64),
    Bool(bool),
}

impl Field {
    fn render(&self) -> String {
        match self {
            Field::Int(v) => v.to_string(),
            Field::Real(v) => format_real(*v),
            Field::Bool(v) => v.to_string(),
        }
    }
}

/// Plain decimal with [`SIG_DIGITS`] significant digits, no exponent.
pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "NaN".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let body = if exp >= (SIG_DIGITS as i32 - 1) {
        format!("{digits}{}", "0".repeat((exp - (SIG_DIGITS as i32 - 1)) as usize))
    } else if exp >= 0 {
        let (int, frac) = digits.split_at(exp as usize + 1);
        format!("{int}.{frac}")
    } else {
        format!("0.{}{digits}", "0".repeat((-exp - 1) as usize))
    };
    format!("{sign}{body}")
}

/// Writes a header and rows with `,` separators and `\n` line endings.
pub fn write_csv<W: Write>(writer: W, header: &[&str], rows: &[Vec<Field>]) -> Result<(), EmitError> {
    for (i, row) in rows.iter().enumerate() {
        if row.len() != header.len() {
            return Err(EmitError::Ragged {
                row: i,
                got: row.len(),
                want: header.len(),
            });
        }
    }
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(writer);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row.iter().map(Field::render))?;
    }
    w.flush()?;
    Ok(())
}

/// [`write_csv`] to `path`, or to stdout when `path` is `None`.
pub fn emit_csv(rows: &[Vec<Field>], header: &[&str], path: Option<&Path>) -> Result<(), EmitError> {
    match path {
        Some(p) => write_csv(File::create(p)?, header, rows),
        None => write_csv(io::stdout().lock(), header, rows),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_formatting() {
        assert_eq!(format_real(0.5625), "0.562500000000");
        assert_eq!(format_real(1.0), "1.00000000000");
        assert_eq!(format_real(-4.08e-4), "-0.000408000000000");
        assert_eq!(format_real(123456.0), "123456.000000");
        assert_eq!(format_real(1e15), "1000000000000000");
        assert_eq!(format_real(0.0), "0");
        assert_eq!(format_real(2.0f64.sqrt()), "1.41421356237");
    }

    #[test]
    fn headers_and_rows() {
        let mut buf = Vec::new();
        let rows = vec![vec![Field::Int(0), Field::Real(0.25), Field::Real(0.0)]];
        write_csv(&mut buf, FIGURE1, &rows).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "k,A2,C_analytic\n0,0.250000000000,0\n");
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![vec![Field::Int(0)]];
        assert!(matches!(
            write_csv(Vec::new(), FIGURE2, &rows),
            Err(EmitError::Ragged { row: 0, got: 1, want: 3 })
        ));
    }

    #[test]
    fn io_failure_surfaces() {
        let err = emit_csv(&[], FIGURE2, Some(Path::new("/nonexistent-dir/x.csv"))).unwrap_err();
        assert!(matches!(err, EmitError::Io(_)));
    }
}
