use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use chrono::{SecondsFormat, Utc};
use serde::Serialize;
use serde_json::Value;

/// Provenance of one run. Timestamps live here and nowhere else, so data
/// files stay byte-identical across repeated runs.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub subcommand: &'static str,
    pub parameters: Value,
    pub seed: Option<u64>,
    pub version: &'static str,
    pub started: String,
    pub finished: Option<String>,
}

fn now() -> String {
    Utc::now().to_rfc3339_opts(SecondsFormat::Millis, true)
}

impl RunManifest {
    pub fn start<P: Serialize>(subcommand: &'static str, parameters: &P, seed: Option<u64>) -> Self {
        RunManifest {
            subcommand,
            parameters: serde_json::to_value(parameters).expect("parameters serialize"),
            seed,
            version: env!("CARGO_PKG_VERSION"),
            started: now(),
            finished: None,
        }
    }

    pub fn finish(mut self) -> Self {
        self.finished = Some(now());
        self
    }
}

fn sidecar(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}

/// Writes a JSON document holding the manifest and `body` under `key`.
pub fn emit_json<T: Serialize>(manifest: RunManifest, key: &str, body: &T, out: Option<&Path>) -> anyhow::Result<()> {
    let mut doc = serde_json::Map::new();
    doc.insert("manifest".into(), serde_json::to_value(manifest.finish())?);
    doc.insert(key.into(), serde_json::to_value(body)?);
    let mut text = serde_json::to_string_pretty(&Value::Object(doc))?;
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Writes CSV bytes to `out` with the manifest beside it, or to stdout with
/// the manifest on stderr.
pub fn emit_csv(manifest: RunManifest, csv: &[u8], out: Option<&Path>) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(&manifest.finish())? + "\n";
    match out {
        Some(path) => {
            fs::write(path, csv)?;
            fs::write(sidecar(path), text)?;
        }
        None => {
            io::stdout().write_all(csv)?;
            io::stderr().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sidecar_name() {
        assert_eq!(
            sidecar(Path::new("/tmp/a.csv")),
            PathBuf::from("/tmp/a.csv.manifest.json")
        );
    }

    #[test]
    fn manifest_fields() {
        let m = RunManifest::start("census", &serde_json::json!({"n": 5}), Some(3)).finish();
        let v = serde_json::to_value(&m).unwrap();
        assert_eq!(v["subcommand"], "census");
        assert_eq!(v["parameters"]["n"], 5);
        assert_eq!(v["seed"], 3);
        assert!(v["finished"].is_string());
    }
}
