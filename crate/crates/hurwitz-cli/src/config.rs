//! Run configuration with the precedence chain
//! CLI flag > environment (HF_ prefix) > config file (key=value) > default.

use std::collections::BTreeMap;
use std::path::Path;

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub budget: u128,
    pub threads: usize,
    pub g_max: usize,
    pub n_max: usize,
    pub m_max: usize,
    pub seed: u64,
    pub json: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            budget: hurwitz_core::oracle::DEFAULT_BUDGET,
            threads: 0,
            g_max: 2,
            n_max: 3,
            m_max: 4,
            seed: 42,
            json: false,
        }
    }
}

fn parse_file(path: &Path) -> Result<BTreeMap<String, String>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    let mut out = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("{}:{}: expected key=value", path.display(), lineno + 1))?;
        out.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(out)
}

fn pick<T: std::str::FromStr>(
    flag: Option<T>,
    env_key: &str,
    file: &BTreeMap<String, String>,
    file_key: &str,
    default: T,
) -> Result<T, String> {
    if let Some(v) = flag {
        return Ok(v);
    }
    if let Ok(raw) = std::env::var(env_key) {
        return raw
            .parse()
            .map_err(|_| format!("bad value {raw:?} for {env_key}"));
    }
    if let Some(raw) = file.get(file_key) {
        return raw
            .parse()
            .map_err(|_| format!("bad value {raw:?} for {file_key} in config file"));
    }
    Ok(default)
}

impl RunConfig {
    pub fn resolve(
        config_path: Option<&Path>,
        budget: Option<u128>,
        threads: Option<usize>,
        seed: Option<u64>,
        json: Option<bool>,
    ) -> Result<Self, String> {
        let file = match config_path {
            Some(p) => parse_file(p)?,
            None => {
                let default_path = Path::new("hurwitz.conf");
                if default_path.exists() {
                    parse_file(default_path)?
                } else {
                    BTreeMap::new()
                }
            }
        };
        let defaults = RunConfig::default();
        let format_str = pick(
            json.map(|j| if j { "json".to_string() } else { "text".to_string() }),
            "HF_FORMAT",
            &file,
            "format",
            "text".to_string(),
        )?;
        let json = match format_str.as_str() {
            "json" => true,
            "text" => false,
            other => return Err(format!("bad format {other:?}, want text or json")),
        };
        let cfg = RunConfig {
            budget: pick(budget, "HF_BUDGET", &file, "budget", defaults.budget)?,
            threads: pick(threads, "HF_THREADS", &file, "threads", defaults.threads)?,
            g_max: pick(None, "HF_G_MAX", &file, "g_max", defaults.g_max)?,
            n_max: pick(None, "HF_N_MAX", &file, "n_max", defaults.n_max)?,
            m_max: pick(None, "HF_M_MAX", &file, "m_max", defaults.m_max)?,
            seed: pick(seed, "HF_SEED", &file, "seed", defaults.seed)?,
            json,
        };
        if cfg.budget < 1 {
            return Err("budget must be at least 1".into());
        }
        if cfg.g_max < 1 || cfg.n_max < 1 || cfg.m_max < 1 {
            return Err("truncation bounds must be positive".into());
        }
        Ok(cfg)
    }
}
