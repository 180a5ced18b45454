//! Optional config file support: if the environment variable
//! CARINENA_CONFIG names a TOML file, its keys provide defaults for any
//! flag the command line leaves unset. Flags always win.

use serde::Deserialize;

pub const CONFIG_ENV: &str = "CARINENA_CONFIG";

#[derive(Debug, Clone, Default, Deserialize)]
pub struct FileConfig {
    pub p: Option<u32>,
    pub n: Option<u32>,
    pub n_max: Option<u32>,
    pub x: Option<f64>,
    pub x_min: Option<f64>,
    pub x_max: Option<f64>,
    pub samples: Option<u32>,
    pub tol: Option<f64>,
    pub format: Option<String>,
    pub suite: Option<String>,
    pub what: Option<String>,
    pub p_max: Option<u32>,
    pub m_max: Option<u32>,
}

/// Load the config file named by the environment, if any. A missing
/// variable means an empty config; a named but unreadable or invalid
/// file is a usage error.
pub fn load() -> Result<FileConfig, String> {
    let Some(path) = std::env::var_os(CONFIG_ENV) else {
        return Ok(FileConfig::default());
    };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| format!("cannot read config file {}: {e}", path.to_string_lossy()))?;
    toml::from_str(&text).map_err(|e| format!("invalid config file: {e}"))
}
