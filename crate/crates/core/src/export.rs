//! CSV and JSON output shared by the command-line tool and the tests.

use std::io::Write;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::abelian::AbelianVector;
use crate::error::Result;
use crate::geometry::{find_difference_witness, to_f64, DifferenceWitness, FractalCloud};
use crate::graph::{accessibility_path, trace, Path};
use crate::independence::SpreadTrace;
use crate::witness::{lift_path_to_factors, Mode, WitnessPair};

pub const CLOUD_HEADER: [&str; 7] = ["k", "x", "y", "z", "px", "py", "pz"];
pub const SERIES_HEADER: [&str; 2] = ["n", "value"];
pub const TRACE_HEADER: [&str; 5] = ["m", "l1", "l2", "l3", "D"];

/// Broken line and projection, one row per prefix length.
pub fn write_cloud_csv<W: Write>(out: W, cloud: &FractalCloud) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CLOUD_HEADER)?;
    for (raw, p) in cloud.broken_line.iter().zip(&cloud.points) {
        let [px, py, pz] = to_f64(&p.coords);
        w.write_record([
            p.index.to_string(),
            raw[0].to_string(),
            raw[1].to_string(),
            raw[2].to_string(),
            px.to_string(),
            py.to_string(),
            pz.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Rational series rendered as floats.
pub fn write_rational_series_csv<W: Write>(out: W, series: &[BigRational]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SERIES_HEADER)?;
    for (n, x) in series.iter().enumerate() {
        w.write_record([n.to_string(), x.to_f64().unwrap_or(f64::NAN).to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_integer_series_csv<W: Write>(out: W, series: &[u64]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SERIES_HEADER)?;
    for (n, x) in series.iter().enumerate() {
        w.write_record([n.to_string(), x.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_trace_csv<W: Write>(out: W, t: &SpreadTrace) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(TRACE_HEADER)?;
    for (m, (l, d)) in t.vectors.iter().zip(&t.spreads).enumerate() {
        w.write_record([m.to_string(), l[0].to_string(), l[1].to_string(), l[2].to_string(), d.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// A path together with its forward simulation.
#[derive(Debug, Clone, Serialize)]
pub struct PathReport {
    pub target: AbelianVector,
    pub path: Path,
    pub trace: Vec<AbelianVector>,
    pub reached: AbelianVector,
    pub ok: bool,
}

impl PathReport {
    pub fn new(target: AbelianVector, path: Path) -> PathReport {
        let trace = trace(&path);
        let reached = trace.last().cloned().unwrap_or_default();
        let ok = reached == target;
        PathReport { target, path, trace, reached, ok }
    }
}

/// A lifted witness, cross-checked by brute force when the host is explicit.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub witness: WitnessPair,
    /// A pair found by exhaustive search of the host, independent of the lift.
    pub oracle: Option<DifferenceWitness>,
    pub ok: bool,
}

pub fn witness_report(target: &AbelianVector, cap: usize) -> Result<WitnessReport> {
    let path = accessibility_path(target)?;
    let witness = lift_path_to_factors(&path, cap)?;
    let mut ok = &witness.difference() == target;
    let oracle = match witness.mode {
        Mode::Explicit => {
            let host = witness.host_word(cap).expect("explicit host fits the cap");
            let found = find_difference_witness(&host, target);
            ok &= found.is_some();
            found
        }
        Mode::Symbolic => None,
    };
    Ok(WitnessReport { witness, oracle, ok })
}

/// Pretty JSON followed by a newline.
pub fn write_json<W: Write, T: Serialize>(mut out: W, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}
