//! Run manifests: a flat `key = value` file written next to every output
//! set. The config keys are included verbatim, so a manifest is itself a
//! valid config file and can be replayed.

use std::path::{Path, PathBuf};

use super::config::{RunConfig, MANIFEST_NAMESPACE};
use crate::error::{Error, Result};
use crate::params::M2_PER_KM2;

pub const SCHEMA_VERSION: u32 = 1;
pub const MANIFEST_FILE: &str = "manifest.txt";

#[derive(Debug, Clone, PartialEq)]
pub struct RunManifest {
    pub command: String,
    /// Subcommand arguments, without output and config paths.
    pub args: Vec<String>,
    pub config: RunConfig,
    pub sweep_axis: Option<String>,
    pub sweep_grid: Vec<f64>,
    pub outputs: Vec<String>,
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

impl RunManifest {
    pub fn to_text(&self) -> String {
        let mut lines = vec![
            format!("manifest.schema_version = {SCHEMA_VERSION}"),
            format!("manifest.artifact_version = {}", env!("CARGO_PKG_VERSION")),
            format!("manifest.command = {}", self.command),
            format!("manifest.args = {}", self.args.join(" ")),
        ];
        if let Some(axis) = &self.sweep_axis {
            lines.push(format!("manifest.sweep_axis = {axis}"));
            lines.push(format!("manifest.sweep_grid = {}", join(&self.sweep_grid)));
        }
        if let Some(seed) = self.config.seed {
            lines.push(format!("manifest.seed = {seed}"));
        }
        lines.push(format!(
            "manifest.lambda_b_per_km2 = {}",
            self.config.params.lambda_b * M2_PER_KM2
        ));
        lines.push(format!("manifest.outputs = {}", self.outputs.join(",")));
        for (k, v) in self.config.to_pairs() {
            lines.push(format!("{k} = {v}"));
        }
        lines.join("\n") + "\n"
    }

    pub fn write(&self, dir: &Path) -> Result<PathBuf> {
        let path = dir.join(MANIFEST_FILE);
        std::fs::write(&path, self.to_text())?;
        Ok(path)
    }

    /// Command and arguments recorded in a manifest file.
    pub fn read_invocation(path: &Path) -> Result<(String, Vec<String>)> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        let mut command = None;
        let mut args = Vec::new();
        for line in text.lines() {
            let Some((k, v)) = line.split_once('=') else {
                continue;
            };
            match k.trim().strip_prefix(MANIFEST_NAMESPACE) {
                Some("command") => command = Some(v.trim().to_string()),
                Some("args") => args = v.split_whitespace().map(str::to_string).collect(),
                _ => {}
            }
        }
        let command = command.ok_or_else(|| Error::Config("manifest has no command".into()))?;
        Ok((command, args))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_is_a_config() {
        let mut config = RunConfig::default();
        config.params.lambda_b = 3e-6;
        config.seed = Some(11);
        config.mc.seed = 11;
        let m = RunManifest {
            command: "ardcp".into(),
            args: vec!["--sweep".into(), "t-r".into()],
            config: config.clone(),
            sweep_axis: Some("t_r".into()),
            sweep_grid: vec![1.0, 10.0],
            outputs: vec!["ardcp_t_r.csv".into()],
        };
        let text = m.to_text();
        assert!(text.contains("manifest.lambda_b_per_km2 = 3"));
        let mut back = RunConfig::default();
        back.apply_text(&text).unwrap();
        assert_eq!(back, config);

        let dir = tempfile::tempdir().unwrap();
        let path = m.write(dir.path()).unwrap();
        let (cmd, args) = RunManifest::read_invocation(&path).unwrap();
        assert_eq!(cmd, "ardcp");
        assert_eq!(args, vec!["--sweep", "t-r"]);
    }
}
