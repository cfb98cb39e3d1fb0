//! Run configuration: every report embeds its hash so results are
//! reproducible from the recorded settings alone.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::endotriv::Reflection;
use crate::error::{Error, Result};
use crate::modrep::{IsoConfig, DEFAULT_SEED};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Config {
    /// extension degree of the working field GF(2^m)
    pub field_degree: u8,
    pub seed: u64,
    pub iso_trials: u32,
    pub exhaustive_bits: u32,
    /// group parameters to verify
    pub d_values: Vec<u32>,
    /// which reflections index the verified series
    pub nu_values: Vec<Reflection>,
    /// series depth: n runs over 0..=n_max
    pub n_max: usize,
    /// truncation level for the lifting checks
    pub level: u8,
    pub out_dir: PathBuf,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            field_degree: 1,
            seed: DEFAULT_SEED,
            iso_trials: 512,
            exhaustive_bits: 20,
            d_values: vec![3, 4],
            nu_values: vec![Reflection::Sigma, Reflection::Tau],
            n_max: 2,
            level: 3,
            out_dir: PathBuf::from("reports"),
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        if self.field_degree == 0 || self.field_degree > 8 {
            return Err(Error::InvalidArgument("field degree must lie in 1..=8".into()));
        }
        if self.d_values.is_empty() {
            return Err(Error::InvalidArgument("at least one group parameter is required".into()));
        }
        if self.nu_values.is_empty() {
            return Err(Error::InvalidArgument("at least one reflection is required".into()));
        }
        for &d in &self.d_values {
            if d < 3 {
                return Err(Error::InvalidArgument(format!(
                    "group parameter d = {d} must be at least 3"
                )));
            }
            if d > 6 {
                return Err(Error::InvalidArgument(format!(
                    "group parameter d = {d} is outside the supported verification range"
                )));
            }
        }
        if self.level < 2 || self.level > 16 {
            return Err(Error::InvalidArgument("level must lie in 2..=16".into()));
        }
        if self.n_max > 4 {
            return Err(Error::InvalidArgument("series depth beyond 4 is not supported".into()));
        }
        Ok(())
    }

    pub fn iso(&self) -> IsoConfig {
        IsoConfig {
            seed: self.seed,
            trials: self.iso_trials,
            exhaustive_bits: self.exhaustive_bits,
        }
    }

    /// Hash of the canonical JSON encoding.
    pub fn hash(&self) -> String {
        let json = serde_json::to_string(self).expect("config is always serializable");
        let mut h = Sha256::new();
        h.update(json.as_bytes());
        let out = h.finalize();
        out.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }

    /// Apply the environment seed override.
    pub fn with_env_seed(mut self) -> Self {
        if let Ok(s) = std::env::var("ENDOLIFT_SEED") {
            if let Ok(v) = parse_seed(&s) {
                self.seed = v;
            }
        }
        self
    }
}

pub fn parse_seed(s: &str) -> Result<u64> {
    let s = s.trim();
    let parsed = if let Some(hex) = s.strip_prefix("0x") {
        u64::from_str_radix(hex, 16)
    } else {
        s.parse::<u64>()
    };
    parsed.map_err(|_| Error::InvalidArgument(format!("cannot parse seed {s}")))
}
