//! CSV tables and JSON sidecars.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::TimeSeries;

/// Version of the JSON sidecar and summary layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Formats a value with 15 significant digits.
pub fn fmt_value(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x:.14e}")
    }
}

/// Writes a CSV table with the given header and rows.
pub fn write_csv<'a, I>(path: &Path, header: &[&str], rows: I) -> Result<()>
where
    I: IntoIterator<Item = &'a [f64]>,
{
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    let io = |e| Error::io(path, e);
    writeln!(w, "{}", header.join(",")).map_err(io)?;
    for row in rows {
        let line: Vec<String> = row.iter().map(|x| fmt_value(*x)).collect();
        writeln!(w, "{}", line.join(",")).map_err(io)?;
    }
    w.flush().map_err(io)
}

/// Writes `gt` followed by the named channels of `series`.
pub fn write_series_csv(path: &Path, series: &TimeSeries, channels: &[&str]) -> Result<()> {
    let cols: Vec<&[f64]> = channels.iter().map(|c| series.require(c)).collect::<Result<_>>()?;
    let rows: Vec<Vec<f64>> = series
        .times()
        .into_iter()
        .enumerate()
        .map(|(i, t)| std::iter::once(t).chain(cols.iter().map(|c| c[i])).collect())
        .collect();
    let mut header = vec!["gt"];
    header.extend_from_slice(channels);
    write_csv(path, &header, rows.iter().map(Vec::as_slice))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::io(path, e.into()))?;
    fs::write(path, text + "\n").map_err(|e| Error::io(path, e))
}

#[derive(Serialize)]
struct Sidecar<'a, C: Serialize> {
    schema_version: u32,
    code_version: &'static str,
    subcommand: &'a str,
    file: String,
    config: &'a C,
}

/// Writes `<stem>.json` next to `data_file`, recording the resolved configuration.
pub fn write_sidecar<C: Serialize>(data_file: &Path, subcommand: &str, config: &C) -> Result<PathBuf> {
    let path = data_file.with_extension("json");
    let sidecar = Sidecar {
        schema_version: SCHEMA_VERSION,
        code_version: env!("CARGO_PKG_VERSION"),
        subcommand,
        file: data_file.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default(),
        config,
    };
    write_json(&path, &sidecar)?;
    Ok(path)
}

/// Creates `dir` if needed and checks that files can be written into it.
pub fn ensure_writable(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let probe = dir.join(".write-probe");
    fs::write(&probe, b"").map_err(|e| Error::io(&probe, e))?;
    fs::remove_file(&probe).map_err(|e| Error::io(&probe, e))
}
