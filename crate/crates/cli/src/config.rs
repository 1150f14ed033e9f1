//! Tolerance configuration: defaults, then a `key=value` file (from
//! `--config` or the `TRINOM_CONFIG` environment variable), then flag
//! overrides.

use std::path::Path;
use trinom::Tolerances;

pub const ENV_VAR: &str = "TRINOM_CONFIG";

/// Flag-level overrides for the three tolerances.
#[derive(Debug, Clone, Copy, Default)]
pub struct Overrides {
    pub tau_int: Option<f64>,
    pub tau_tri: Option<f64>,
    pub tau_res: Option<f64>,
}

fn parse_file(text: &str, origin: &Path) -> Result<Overrides, String> {
    let mut from_file = Overrides::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("{}:{}: expected key=value", origin.display(), lineno + 1))?;
        let value: f64 = value.trim().parse().map_err(|_| {
            format!(
                "{}:{}: bad value `{}`",
                origin.display(),
                lineno + 1,
                value.trim()
            )
        })?;
        if value <= 0.0 || value.is_nan() {
            return Err(format!(
                "{}:{}: tolerances must be positive",
                origin.display(),
                lineno + 1
            ));
        }
        match key.trim() {
            "tau_int" => from_file.tau_int = Some(value),
            "tau_tri" => from_file.tau_tri = Some(value),
            "tau_res" => from_file.tau_res = Some(value),
            other => {
                return Err(format!(
                    "{}:{}: unknown key `{other}` (expected tau_int, tau_tri or tau_res)",
                    origin.display(),
                    lineno + 1
                ))
            }
        }
    }
    Ok(from_file)
}

/// Resolves the effective tolerances. `config` beats the environment
/// variable; flags beat both.
pub fn load(config: Option<&Path>, flags: Overrides) -> Result<Tolerances, String> {
    let mut tol = Tolerances::default();
    let env_path = std::env::var_os(ENV_VAR).map(std::path::PathBuf::from);
    let path = config.or(env_path.as_deref());
    if let Some(path) = path {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        let file = parse_file(&text, path)?;
        if let Some(v) = file.tau_int {
            tol.int_tol = v;
        }
        if let Some(v) = file.tau_tri {
            tol.tri_tol = v;
        }
        if let Some(v) = file.tau_res {
            tol.res_tol = v;
        }
    }
    if let Some(v) = flags.tau_int {
        tol.int_tol = v;
    }
    if let Some(v) = flags.tau_tri {
        tol.tri_tol = v;
    }
    if let Some(v) = flags.tau_res {
        tol.res_tol = v;
    }
    Ok(tol)
}
