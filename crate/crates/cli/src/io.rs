//! Input parsing and output plumbing shared by the subcommands.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use bgue::evolution::SpectrumE;
use bgue::observable::OperatorSet;
use ndarray::Array2;
use num_complex::Complex64;
use serde::Deserialize;

/// A user-facing failure: bad input, an impossible request, or a library
/// error. All of these exit with status 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<bgue::Error> for InputError {
    fn from(e: bgue::Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<std::io::Error> for InputError {
    fn from(e: std::io::Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<serde_json::Error> for InputError {
    fn from(e: serde_json::Error) -> Self {
        InputError(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, InputError>;

pub fn fail<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(InputError(msg.into()))
}

#[derive(Deserialize)]
struct SpectrumFile {
    #[serde(rename = "E")]
    e: Vec<f64>,
}

#[derive(Deserialize)]
struct OpsFile {
    ops: Vec<Vec<[f64; 2]>>,
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// Reads `{"E": [..]}` and checks it has `d` entries.
pub fn read_spectrum(path: Option<&Path>, d: usize) -> CliResult<SpectrumE> {
    let Some(path) = path else {
        return Ok(SpectrumE::zero(d));
    };
    let file: SpectrumFile =
        serde_json::from_str(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let e = SpectrumE::new(file.e)?;
    if e.e.len() != d {
        return fail(format!("spectrum file has {} energies, expected D={d}", e.e.len()));
    }
    Ok(e)
}

/// Reads `{"ops": [[[re, im], ...], ...]}`: each operator is a row-major
/// `D × D` matrix flattened to `D²` complex entries.
pub fn read_ops(path: &Path) -> CliResult<OperatorSet> {
    let file: OpsFile =
        serde_json::from_str(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let mut ops = Vec::with_capacity(file.ops.len());
    for (k, flat) in file.ops.iter().enumerate() {
        let d = (flat.len() as f64).sqrt().round() as usize;
        if d == 0 || d * d != flat.len() {
            return fail(format!(
                "operator {} has {} entries, not a square count",
                k + 1,
                flat.len()
            ));
        }
        if flat.iter().flatten().any(|x| !x.is_finite()) {
            return fail(format!("operator {} has non-finite entries", k + 1));
        }
        ops.push(Array2::from_shape_fn((d, d), |(r, c)| {
            let [re, im] = flat[r * d + c];
            Complex64::new(re, im)
        }));
    }
    Ok(OperatorSet::new(ops)?)
}

/// Parses `t0:t1:steps` into `steps + 1` equally spaced times.
pub fn parse_grid(s: &str) -> CliResult<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    let [a, b, n] = parts.as_slice() else {
        return fail(format!("time grid '{s}' is not t0:t1:steps"));
    };
    let t0: f64 = a
        .trim()
        .parse()
        .map_err(|_| InputError(format!("bad start time '{a}'")))?;
    let t1: f64 = b
        .trim()
        .parse()
        .map_err(|_| InputError(format!("bad end time '{b}'")))?;
    let steps: usize = n
        .trim()
        .parse()
        .map_err(|_| InputError(format!("bad step count '{n}'")))?;
    if !(t0.is_finite() && t1.is_finite()) || t0 < 0.0 || t1 < t0 {
        return fail(format!("time grid needs 0 ≤ t0 ≤ t1, got {t0}:{t1}"));
    }
    if steps == 0 {
        return fail("time grid needs at least one step");
    }
    Ok((0..=steps)
        .map(|k| {
            if k == steps {
                t1
            } else {
                t0 + (t1 - t0) * k as f64 / steps as f64
            }
        })
        .collect())
}

/// Parses `t1,t2,t3`.
pub fn parse_three(s: &str) -> CliResult<[f64; 3]> {
    let v: Vec<f64> = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .map_err(|_| InputError(format!("bad time '{x}'")))
        })
        .collect::<CliResult<_>>()?;
    match v.as_slice() {
        &[a, b, c] if v.iter().all(|x| x.is_finite()) => Ok([a, b, c]),
        _ => fail(format!("expected three finite times t1,t2,t3, got '{s}'")),
    }
}

/// Where command output goes.
pub struct Sink {
    path: Option<PathBuf>,
}

impl Sink {
    pub fn new(path: Option<PathBuf>) -> Self {
        Self { path }
    }

    pub fn emit(&self, text: &str) -> CliResult<()> {
        match &self.path {
            Some(p) => fs::write(p, text).map_err(|e| InputError(format!("{}: {e}", p.display()))),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes())?;
                out.flush()?;
                Ok(())
            }
        }
    }

    pub fn json(&self, value: &serde_json::Value) -> CliResult<()> {
        let mut s = serde_json::to_string_pretty(value)?;
        s.push('\n');
        self.emit(&s)
    }
}

pub fn complex_json(z: Complex64) -> serde_json::Value {
    serde_json::json!([z.re, z.im])
}
