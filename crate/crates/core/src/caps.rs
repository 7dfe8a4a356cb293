//! Size caps for the exponential searches, overridable through `TWC_SIZE_CAP`.
//!
//! The variable holds comma-separated `key=value` pairs, e.g.
//! `TWC_SIZE_CAP=permanent=26,pind_rows=14`. A bare integer sets every
//! side/row cap (`permanent`, `sachs`, `matching`, `pind_rows`) at once.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub const ENV_VAR: &str = "TWC_SIZE_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeCaps {
    /// Largest square side accepted by `permanent`.
    pub permanent: usize,
    /// Largest vertex count accepted by `sachs_permanent`.
    pub sachs: usize,
    /// Largest vertex count accepted by the perfect-matching counter.
    pub matching: usize,
    /// Largest row count accepted by `pind_exhaustive`.
    pub pind_rows: usize,
    /// Largest number of multiplicity vectors `pind_exhaustive` will evaluate.
    pub pind_vectors: u64,
    /// Largest list-product size accepted by `find_proper_weighting`.
    pub weighting_product: u128,
}

impl Default for SizeCaps {
    fn default() -> Self {
        SizeCaps {
            permanent: 24,
            sachs: 12,
            matching: 24,
            pind_rows: 12,
            pind_vectors: 50_000_000,
            weighting_product: 10_000_000,
        }
    }
}

impl SizeCaps {
    /// Applies an override string on top of `self`.
    pub fn with_overrides(mut self, spec: &str) -> Result<SizeCaps, String> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let Some((key, value)) = item.split_once('=') else {
                let v: usize = item.parse().map_err(|_| format!("bad {ENV_VAR} entry `{item}`"))?;
                self.permanent = v;
                self.sachs = v;
                self.matching = v;
                self.pind_rows = v;
                continue;
            };
            let bad = || format!("bad {ENV_VAR} value in `{item}`");
            match key.trim() {
                "permanent" => self.permanent = value.trim().parse().map_err(|_| bad())?,
                "sachs" => self.sachs = value.trim().parse().map_err(|_| bad())?,
                "matching" => self.matching = value.trim().parse().map_err(|_| bad())?,
                "pind_rows" => self.pind_rows = value.trim().parse().map_err(|_| bad())?,
                "pind_vectors" => self.pind_vectors = value.trim().parse().map_err(|_| bad())?,
                "weighting_product" => self.weighting_product = value.trim().parse().map_err(|_| bad())?,
                other => return Err(format!("unknown {ENV_VAR} key `{other}`")),
            }
        }
        if self.matching > 64 {
            return Err(format!("{ENV_VAR}: matching cap is limited to 64 (bitmask width)"));
        }
        if self.sachs > 64 {
            return Err(format!("{ENV_VAR}: sachs cap is limited to 64 (bitmask width)"));
        }
        Ok(self)
    }

    /// Defaults plus the `TWC_SIZE_CAP` override, read once per process.
    /// A malformed variable is logged and ignored.
    pub fn global() -> SizeCaps {
        static CAPS: OnceLock<SizeCaps> = OnceLock::new();
        *CAPS.get_or_init(|| match std::env::var(ENV_VAR) {
            Ok(spec) => SizeCaps::default().with_overrides(&spec).unwrap_or_else(|e| {
                log::warn!("{e}; using default caps");
                SizeCaps::default()
            }),
            Err(_) => SizeCaps::default(),
        })
    }
}
