//! CSV writers.
//!
//! Distribution files: header `position,probability`, one row per position in
//! ascending order. Sweep files: header
//! `n,t,mode,pairing,seed,mean,variance,interval_lo,interval_hi,tail_mass`,
//! with empty fields where a column does not apply. Lines end with `\n`.
//!
//! Floats are written as the shortest decimal that parses back to the same
//! `f64`: plain notation in `[1e-5, 1e16)`, scientific (`1.5e-9`) outside it.

use std::io::{self, Write};

use crate::analysis::SweepRecord;
use crate::engine::PositionDistribution;

pub const DISTRIBUTION_HEADER: &str = "position,probability";
pub const SWEEP_HEADER: &str = "n,t,mode,pairing,seed,mean,variance,interval_lo,interval_hi,tail_mass";

pub fn format_f64(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || (1e-5..1e16).contains(&a) || !v.is_finite() {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

pub fn write_distribution<W: Write>(mut w: W, dist: &PositionDistribution) -> io::Result<()> {
    writeln!(w, "{DISTRIBUTION_HEADER}")?;
    for (x, p) in dist.iter() {
        writeln!(w, "{x},{}", format_f64(p))?;
    }
    w.flush()
}

fn opt<T>(v: Option<T>, f: impl FnOnce(T) -> String) -> String {
    v.map(f).unwrap_or_default()
}

pub fn write_sweep<'a, W: Write>(mut w: W, records: impl IntoIterator<Item = &'a SweepRecord>) -> io::Result<()> {
    writeln!(w, "{SWEEP_HEADER}")?;
    for r in records {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{}",
            r.n,
            r.t,
            r.mode,
            r.pairing.unwrap_or_default(),
            opt(r.seed, |s| s.to_string()),
            format_f64(r.mean),
            format_f64(r.variance),
            opt(r.interval, |b| format_f64(b.lo)),
            opt(r.interval, |b| format_f64(b.hi)),
            opt(r.tail_mass, format_f64),
        )?;
    }
    w.flush()
}
