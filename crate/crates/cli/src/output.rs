//! Deterministic output plumbing: fixed float formatting, atomic file
//! writes, and the run manifest emitted next to every output file.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

/// Formats a float with 17 significant digits so round trips are lossless
/// and output is byte-stable across runs.
pub fn float(x: f64) -> String {
    // Collapse negative zero; it carries no information here.
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

/// JSON array of two floats.
pub fn complex_json(re: f64, im: f64) -> String {
    format!("[{},{}]", float(re), float(im))
}

/// Writes via a temporary sibling and an atomic rename, so failed runs
/// leave no partial output behind.
pub fn write_atomic(path: &Path, contents: &str) -> io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)
}

/// Reproducibility record written alongside each output file: the command,
/// its full parameter set, the tool version, and a timestamp. Re-running
/// the recorded command reproduces the data file byte for byte (the
/// timestamp lives only here, never in data files).
pub struct RunManifest {
    command: &'static str,
    params: BTreeMap<String, String>,
}

impl RunManifest {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            params: BTreeMap::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    fn to_json(&self) -> String {
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{}:{}", json_string(k), json_string(v)))
            .collect();
        format!(
            "{{\"command\":{},\"version\":{},\"timestamp_unix\":{},\"params\":{{{}}}}}\n",
            json_string(self.command),
            json_string(env!("CARGO_PKG_VERSION")),
            timestamp,
            params.join(",")
        )
    }

    /// Writes `<output>.manifest.json` next to the data file.
    pub fn write_next_to(&self, output: &Path) -> io::Result<()> {
        let mut path = output.as_os_str().to_owned();
        path.push(".manifest.json");
        write_atomic(&PathBuf::from(path), &self.to_json())
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}
