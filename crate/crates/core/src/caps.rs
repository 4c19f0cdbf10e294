use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Size limits applied before any expensive computation starts.
///
/// Every limit is inclusive. Defaults are chosen so that each operation
/// finishes in seconds on a laptop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest `n` for which partitions are enumerated (p(60) = 966 467).
    pub partition_n: u32,
    /// Largest level for which a [`LevelGraph`](crate::LevelGraph) is built.
    pub graph_n: u32,
    /// Largest level for which local clique numbers are computed.
    pub clique_n: u32,
    /// Largest closed neighbourhood handed to the exact clique search.
    pub neighborhood: usize,
    /// Largest source level for all-pairs overlay certification.
    pub overlay_n: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            partition_n: 60,
            graph_n: 40,
            clique_n: 25,
            neighborhood: 64,
            overlay_n: 12,
        }
    }
}

impl Caps {
    /// Caps large enough to never trigger; for tests and explicit overrides.
    pub fn unbounded() -> Self {
        Caps {
            partition_n: u32::MAX,
            graph_n: u32::MAX,
            clique_n: u32::MAX,
            neighborhood: usize::MAX,
            overlay_n: u32::MAX,
        }
    }

    pub(crate) fn check(what: &'static str, value: u32, cap: u32) -> Result<()> {
        if value > cap {
            return Err(Error::Capacity {
                what,
                value: value as usize,
                cap: cap as usize,
            });
        }
        Ok(())
    }
}
