//! First-appearance scans for motifs and extremal bounds.
//!
//! A property that is not found is reported as "not found up to
//! `scanned_to`", never as absent for good.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::GraphCache;
use crate::invariants::{extremal_record_of, ExtremalKind, ExtremalRecord};
use crate::motifs::{Motif, Occurrence};

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Occurrence(Occurrence),
    Extremal(ExtremalRecord),
}

#[derive(Debug, Clone, Serialize)]
pub struct ThresholdResult {
    /// Template name, or e.g. `omega >= 3`.
    pub property: String,
    pub first_n: Option<u32>,
    pub scanned_to: u32,
    /// Highest level up to which presence was re-confirmed at every level
    /// from `first_n` on.
    pub stability_verified_to: Option<u32>,
    pub witness: Option<Witness>,
}

/// Scans `n = 1..=n_max` for the first level containing `motif`; when found,
/// re-confirms presence at every level up to `verify_to` (default `n_max`).
///
/// For fixed templates presence is guaranteed to persist, so a level that
/// loses the motif is reported as an invariant violation.
pub fn motif_threshold(
    motif: &Motif,
    n_max: u32,
    verify_to: Option<u32>,
    cache: &mut GraphCache,
) -> Result<ThresholdResult> {
    let mut result = ThresholdResult {
        property: motif.name().to_string(),
        first_n: None,
        scanned_to: n_max,
        stability_verified_to: None,
        witness: None,
    };
    for n in 1..=n_max {
        let g = cache.get(n)?;
        if let Some(occ) = motif.first_occurrence(&g)? {
            result.first_n = Some(n);
            result.witness = Some(Witness::Occurrence(occ));
            break;
        }
    }
    let Some(first) = result.first_n else {
        return Ok(result);
    };

    let verify_to = verify_to.unwrap_or(n_max).max(first);
    for n in first + 1..=verify_to {
        let g = cache.get(n)?;
        if motif.first_occurrence(&g)?.is_none() {
            return Err(Error::InvariantViolation(format!(
                "motif {} found at n = {first} but missing at n = {n}",
                motif.name()
            )));
        }
    }
    result.stability_verified_to = Some(verify_to);
    Ok(result)
}

/// Smallest `n ≤ n_max` whose extremal quantity reaches `bound`. Levels are
/// scanned up to `verify_to` (default: the first hit) and must never
/// decrease along the way.
pub fn extremal_threshold(
    kind: ExtremalKind,
    bound: usize,
    n_max: u32,
    verify_to: Option<u32>,
    cache: &mut GraphCache,
) -> Result<ThresholdResult> {
    let caps = *cache.caps();
    let mut result = ThresholdResult {
        property: format!("{} >= {bound}", kind.name()),
        first_n: None,
        scanned_to: n_max,
        stability_verified_to: None,
        witness: None,
    };
    let mut previous: Option<ExtremalRecord> = None;
    let mut n = 1;
    while n <= n_max {
        let g = cache.get(n)?;
        let record = extremal_record_of(&g, &caps)?;
        if let Some(prev) = &previous {
            for k in ExtremalKind::ALL {
                if record.value(k) < prev.value(k) {
                    return Err(Error::InvariantViolation(format!(
                        "{} decreased from {} at n = {} to {} at n = {n}",
                        k.name(),
                        prev.value(k),
                        prev.n,
                        record.value(k)
                    )));
                }
            }
        }
        if result.first_n.is_none() && record.value(kind) >= bound {
            result.first_n = Some(n);
            result.witness = Some(Witness::Extremal(record.clone()));
        }
        if let Some(first) = result.first_n {
            result.stability_verified_to = Some(n);
            if n >= verify_to.unwrap_or(first) {
                break;
            }
        }
        previous = Some(record);
        n += 1;
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::motifs::builtin_templates;

    fn cache() -> GraphCache {
        GraphCache::new(Caps::default())
    }

    fn motif(name: &str) -> Motif {
        builtin_templates().get(name).unwrap().clone()
    }

    #[test]
    fn corner_thresholds() {
        let mut c = cache();
        for name in ["bl1", "br1"] {
            let r = motif_threshold(&motif(name), 10, None, &mut c).unwrap();
            assert_eq!(r.first_n, Some(4), "{name}");
            assert_eq!(r.stability_verified_to, Some(10));
        }
    }

    #[test]
    fn weak_template_bounds() {
        let mut c = cache();
        let e1 = motif_threshold(&motif("e1"), 6, None, &mut c).unwrap();
        assert!(e1.first_n.unwrap() <= 6);
        let rsq = motif_threshold(&motif("rsq"), 9, None, &mut c).unwrap();
        assert!(rsq.first_n.unwrap() <= 9);
    }

    #[test]
    fn missing_motif_is_range_relative() {
        let r = motif_threshold(&motif("k5"), 5, None, &mut cache()).unwrap();
        assert_eq!((r.first_n, r.scanned_to), (None, 5));
        assert!(r.stability_verified_to.is_none());
    }

    #[test]
    fn extremal() {
        let mut c = cache();
        let omega3 = extremal_threshold(ExtremalKind::Omega, 3, 20, None, &mut c).unwrap();
        assert_eq!(omega3.first_n, Some(4));
        let delta0 = extremal_threshold(ExtremalKind::Delta, 0, 20, None, &mut c).unwrap();
        assert_eq!(delta0.first_n, Some(1));
        let s2 = extremal_threshold(ExtremalKind::S, 2, 20, Some(8), &mut c).unwrap();
        assert_eq!(s2.first_n, Some(4));
        assert_eq!(s2.stability_verified_to, Some(8));

        let never = extremal_threshold(ExtremalKind::Omega, 50, 6, None, &mut c).unwrap();
        assert_eq!((never.first_n, never.scanned_to), (None, 6));
    }

    #[test]
    fn rescans_agree() {
        let mut c = cache();
        let a = motif_threshold(&motif("p2"), 8, None, &mut c).unwrap();
        let b = motif_threshold(&motif("p2"), 8, None, &mut cache()).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
