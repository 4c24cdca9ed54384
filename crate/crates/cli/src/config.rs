//! Defaults read from the TOML file named by `FREESUB_CONFIG`, overridden by flags.

use std::path::Path;

use serde::Deserialize;

use freesub_core::emit::Format;
use freesub_core::groups::FamilyKind;

pub const CONFIG_ENV: &str = "FREESUB_CONFIG";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    #[default]
    Fast,
    Slow,
}

impl std::str::FromStr for Tier {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "fast" => Ok(Tier::Fast),
            "slow" => Ok(Tier::Slow),
            other => Err(format!("unknown tier {other:?}")),
        }
    }
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub family: Option<String>,
    pub m: Option<u64>,
    pub seed: Option<u64>,
    pub format: Option<String>,
    pub tier: Option<Tier>,
}

/// Defaults after merging the config file: `m = 1`, `format = text`, `seed = 0`.
#[derive(Clone, Debug)]
pub struct Defaults {
    pub family: FamilyKind,
    pub m: u64,
    pub seed: u64,
    pub format: Format,
    pub tier: Tier,
}

impl Default for Defaults {
    fn default() -> Self {
        Self { family: FamilyKind::Modular3, m: 1, seed: 0, format: Format::Text, tier: Tier::Fast }
    }
}

impl Defaults {
    pub fn load() -> Result<Self, String> {
        match std::env::var_os(CONFIG_ENV) {
            Some(path) if !path.is_empty() => Self::from_file(Path::new(&path)),
            _ => Ok(Self::default()),
        }
    }

    pub fn from_file(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let file: FileConfig = toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::merge(file)
    }

    fn merge(file: FileConfig) -> Result<Self, String> {
        let mut d = Self::default();
        if let Some(f) = file.family {
            d.family = f.parse().map_err(|e: freesub_core::Error| e.to_string())?;
        }
        if let Some(m) = file.m {
            d.m = m;
        }
        if let Some(s) = file.seed {
            d.seed = s;
        }
        if let Some(f) = file.format {
            d.format = f.parse().map_err(|e: freesub_core::Error| e.to_string())?;
        }
        if let Some(t) = file.tier {
            d.tier = t;
        }
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_overrides_defaults() {
        let file: FileConfig = toml::from_str("family = \"hecke4\"\nm = 3\ntier = \"slow\"\n").unwrap();
        let d = Defaults::merge(file).unwrap();
        assert_eq!(d.family, FamilyKind::Hecke4);
        assert_eq!(d.m, 3);
        assert_eq!(d.seed, 0);
        assert_eq!(d.format, Format::Text);
        assert_eq!(d.tier, Tier::Slow);
    }

    #[test]
    fn rejects_unknown_keys_and_values() {
        assert!(toml::from_str::<FileConfig>("colour = 1\n").is_err());
        let file: FileConfig = toml::from_str("format = \"yaml\"\n").unwrap();
        assert!(Defaults::merge(file).is_err());
    }
}
