//! Fixed-precision number formatting and the ratio-table CSV layout.

use std::io::{self, Write};

use crate::bounds::RatioRow;

pub const SIGNIFICANT_DIGITS: usize = 12;

pub const CSV_HEADER: &str = "family,param,n,k,m,energy,e0,ratio,closed_ratio,paper_bound";

/// `x` with 12 significant digits in positional notation (scientific for
/// magnitudes outside 1e-6..1e15). Negative zero prints as `0`.
pub fn sig(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return format!("{:.*}", SIGNIFICANT_DIGITS - 1, 0.0);
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-6..15).contains(&magnitude) {
        return format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    }
    let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - magnitude).max(0) as usize;
    let text = format!("{x:.decimals$}");
    // rounding may carry into a new leading digit, e.g. 9.99... -> 10.0...
    let rounded: f64 = text.parse().expect("formatted float parses");
    if rounded.abs() >= 10f64.powi(magnitude + 1) && decimals > 0 {
        format!("{x:.*}", decimals - 1)
    } else {
        text
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(sig).unwrap_or_default()
}

pub fn csv_line(row: &RatioRow) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{}",
        row.family,
        row.param,
        row.n,
        row.k,
        row.m,
        sig(row.energy),
        sig(row.e0),
        sig(row.ratio),
        opt(row.closed_ratio),
        opt(row.paper_bound),
    )
}

pub fn write_csv<W: Write>(rows: &[RatioRow], mut w: W) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(w, "{}", csv_line(row))?;
    }
    w.flush()
}
