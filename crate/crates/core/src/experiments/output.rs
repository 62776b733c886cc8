//! CSV tables and run manifests.
//!
//! Tables are plain CSV with a header row; floats are written with the
//! shortest representation that round-trips. Each table may carry a JSON
//! manifest sidecar at `<table>.manifest.json` describing the run.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::Histogram;
use crate::Result;

pub fn write_csv<T: Serialize>(path: &Path, rows: &[T]) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_csv_to<T: Serialize, W: Write>(out: W, rows: &[T]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct HistogramRow {
    bin_left: f64,
    count: u64,
}

/// Two columns, `bin_left,count`. The right edge of the last bin is not a
/// row; it is the data maximum.
pub fn write_histogram(path: &Path, histogram: &Histogram) -> Result<()> {
    let rows: Vec<HistogramRow> = histogram.rows().map(|(bin_left, count)| HistogramRow { bin_left, count }).collect();
    if rows.is_empty() {
        let mut w = csv::Writer::from_path(path)?;
        w.write_record(["bin_left", "count"])?;
        w.flush()?;
        return Ok(());
    }
    write_csv(path, &rows)
}

/// Description of a run, written next to its primary output.
#[derive(Clone, Debug, Serialize)]
pub struct Manifest {
    pub command: String,
    pub seed: u64,
    pub threads: usize,
    pub version: String,
    pub wall_time_secs: f64,
    pub config: serde_json::Value,
}

impl Manifest {
    pub fn new(command: &str, seed: u64, config: serde_json::Value) -> Self {
        Self {
            command: command.to_string(),
            seed,
            threads: rayon::current_num_threads(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            wall_time_secs: 0.0,
            config,
        }
    }
}

pub fn manifest_path(primary: &Path) -> PathBuf {
    let mut name = primary.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}

pub fn write_manifest(primary: &Path, manifest: &Manifest) -> Result<PathBuf> {
    let path = manifest_path(primary);
    let mut w = BufWriter::new(File::create(&path)?);
    serde_json::to_writer_pretty(&mut w, manifest)?;
    writeln!(w)?;
    w.flush()?;
    Ok(path)
}
