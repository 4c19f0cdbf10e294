//! Vertexwise Ferrers translation between levels, and brute-force
//! certification that it is an injective induced embedding.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{GraphCache, LevelGraph, VertexId};
use crate::motifs::{find_occurrences, validate_assignment, RootedTemplate};
use crate::partition::{ferrers_translate, row_growth, Partition, Partitions};

/// Maximum number of violations listed verbatim in a report.
pub const MAX_LISTED_VIOLATIONS: usize = 10;

#[derive(Debug, Clone, Serialize)]
pub struct OverlayMap {
    pub n_source: u32,
    pub tau: Partition,
    pub n_target: u32,
    /// `(source id, target id)` for every source vertex, by source id.
    pub pairs: Vec<(VertexId, VertexId)>,
}

impl OverlayMap {
    pub fn image(&self, v: VertexId) -> VertexId {
        self.pairs[v as usize].1
    }
}

/// Maps every vertex of `source` to its translate in `target`.
pub fn overlay_map_between(source: &LevelGraph, target: &LevelGraph, tau: &Partition) -> Result<OverlayMap> {
    if target.n() != source.n() + tau.size() {
        return Err(Error::Domain(format!(
            "translating G_{} by a partition of {} cannot land in G_{}",
            source.n(),
            tau.size(),
            target.n()
        )));
    }
    let pairs = source
        .vertex_ids()
        .map(|v| {
            let image = ferrers_translate(source.partition(v), tau);
            let w = target.id_of(&image).ok_or_else(|| {
                Error::InvariantViolation(format!("translate {image} is not a vertex of G_{}", target.n()))
            })?;
            Ok((v, w))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OverlayMap {
        n_source: source.n(),
        tau: tau.clone(),
        n_target: target.n(),
        pairs,
    })
}

pub fn overlay_map(n: u32, tau: &Partition, caps: &Caps) -> Result<OverlayMap> {
    let mut cache = GraphCache::new(*caps);
    let source = cache.get(n)?;
    let target = cache.get(n + tau.size())?;
    overlay_map_between(&source, &target, tau)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Two source vertices share an image.
    Collision { a: Partition, b: Partition, image: Partition },
    /// An edge whose images are not adjacent.
    EdgeLost { a: Partition, b: Partition },
    /// A non-edge whose images are adjacent.
    EdgeCreated { a: Partition, b: Partition },
}

#[derive(Debug, Clone, Serialize)]
pub struct OverlayReport {
    pub n: u32,
    pub tau: Partition,
    pub injective: bool,
    /// Source edges whose images are edges.
    pub preserved_edges: u64,
    /// Source non-edges whose images are non-edges.
    pub reflected_nonedges: u64,
    /// First violations in pair order.
    pub violations: Vec<Violation>,
    pub violation_count: u64,
}

impl OverlayReport {
    pub fn pass(&self) -> bool {
        self.injective && self.violation_count == 0
    }
}

/// Checks every source pair `(λ, μ)`: `λ ~ μ ⇔ T_τ λ ~ T_τ μ`, plus
/// injectivity.
pub fn verify_between(source: &LevelGraph, target: &LevelGraph, tau: &Partition) -> Result<OverlayReport> {
    let map = overlay_map_between(source, target, tau)?;
    Ok(certify(source, target, &map))
}

fn certify(source: &LevelGraph, target: &LevelGraph, map: &OverlayMap) -> OverlayReport {
    let m = source.vertex_count() as VertexId;

    // Per-source-vertex tallies, reduced in id order.
    let rows: Vec<(u64, u64, Vec<Violation>)> = (0..m)
        .into_par_iter()
        .map(|a| {
            let (mut kept, mut reflected, mut bad) = (0u64, 0u64, Vec::new());
            for b in a + 1..m {
                let (x, y) = (map.image(a), map.image(b));
                let pa = || source.partition(a).clone();
                let pb = || source.partition(b).clone();
                if x == y {
                    bad.push(Violation::Collision {
                        a: pa(),
                        b: pb(),
                        image: target.partition(x).clone(),
                    });
                    continue;
                }
                match (source.has_edge(a, b), target.has_edge(x, y)) {
                    (true, true) => kept += 1,
                    (false, false) => reflected += 1,
                    (true, false) => bad.push(Violation::EdgeLost { a: pa(), b: pb() }),
                    (false, true) => bad.push(Violation::EdgeCreated { a: pa(), b: pb() }),
                }
            }
            (kept, reflected, bad)
        })
        .collect();

    let distinct: HashSet<VertexId> = map.pairs.iter().map(|&(_, w)| w).collect();
    let mut report = OverlayReport {
        n: source.n(),
        tau: map.tau.clone(),
        injective: distinct.len() == map.pairs.len(),
        preserved_edges: 0,
        reflected_nonedges: 0,
        violations: Vec::new(),
        violation_count: 0,
    };
    for (kept, reflected, bad) in rows {
        report.preserved_edges += kept;
        report.reflected_nonedges += reflected;
        report.violation_count += bad.len() as u64;
        let room = MAX_LISTED_VIOLATIONS - report.violations.len();
        report.violations.extend(bad.into_iter().take(room));
    }
    report
}

pub fn verify_induced_embedding(n: u32, tau: &Partition, caps: &Caps) -> Result<OverlayReport> {
    Caps::check("overlay source level n =", n, caps.overlay_n)?;
    let mut cache = GraphCache::new(*caps);
    let source = cache.get(n)?;
    let target = cache.get(n + tau.size())?;
    verify_between(&source, &target, tau)
}

/// Certifies every `τ ⊢ k` for `1 ≤ k ≤ max_k` (and the empty `τ`) at
/// source level `n`.
pub fn verify_sweep(n: u32, max_k: u32, caps: &Caps) -> Result<Vec<OverlayReport>> {
    Caps::check("overlay source level n =", n, caps.overlay_n)?;
    let mut cache = GraphCache::new(*caps);
    let source = cache.get(n)?;
    let mut reports = Vec::new();
    for k in 0..=max_k {
        let target = cache.get(n + k)?;
        for tau in Partitions::new(k) {
            reports.push(verify_between(&source, &target, &tau)?);
        }
    }
    Ok(reports)
}

#[derive(Debug, Clone, Serialize)]
pub struct LevelPersistence {
    pub n: u32,
    pub occurs: bool,
    /// The level-`n_found` witness translated by `τ = (n - n_found)` is
    /// itself an occurrence at level `n`.
    pub translated_witness_valid: bool,
    pub translated_witness: Vec<Partition>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PersistenceReport {
    pub template: String,
    pub n_found: u32,
    pub n_to: u32,
    pub witness: Vec<Partition>,
    pub levels: Vec<LevelPersistence>,
    pub pass: bool,
}

/// Confirms by direct search that `template` occurs at every level of
/// `n_found..=n_to`, and that row-growth translates of the first witness
/// are occurrences.
pub fn persistence_check(
    template: &RootedTemplate,
    n_found: u32,
    n_to: u32,
    cache: &mut GraphCache,
) -> Result<PersistenceReport> {
    if n_found > n_to {
        return Err(Error::Domain(format!("empty level range {n_found}..={n_to}")));
    }
    let base = cache.get(n_found)?;
    let witness = find_occurrences(&base, template, Some(1))
        .into_iter()
        .next()
        .ok_or_else(|| {
            Error::Domain(format!(
                "template {} does not occur in G_{n_found}",
                template.name()
            ))
        })?
        .assignment;

    let mut levels = Vec::new();
    for n in n_found..=n_to {
        let g = cache.get(n)?;
        let occurs = !find_occurrences(&g, template, Some(1)).is_empty();
        let translated: Vec<Partition> = witness.iter().map(|p| row_growth(p, n - n_found)).collect();
        let valid = validate_assignment(&g, template, &translated);
        levels.push(LevelPersistence {
            n,
            occurs,
            translated_witness_valid: valid,
            translated_witness: translated,
        });
    }
    let pass = levels.iter().all(|l| l.occurs && l.translated_witness_valid);
    Ok(PersistenceReport {
        template: template.name().to_string(),
        n_found,
        n_to,
        witness,
        levels,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motifs::{builtin_templates, canonical_bl1, Motif};
    use crate::partition::column_growth;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn maps() {
        let caps = Caps::default();
        let m = overlay_map(2, &p("1"), &caps).unwrap();
        assert_eq!(m.n_target, 3);
        // (2) -> (2,1) = id 1 in G_3, (1,1) -> (1,1,1) = id 2
        assert_eq!(m.pairs, vec![(0, 1), (1, 2)]);

        let id = overlay_map(1, &Partition::empty(), &caps).unwrap();
        assert_eq!(id.pairs, vec![(0, 0)]);

        let mut cache = GraphCache::new(caps);
        let (g3, g5) = (cache.get(3).unwrap(), cache.get(5).unwrap());
        let cols = overlay_map_between(&g3, &g5, &p("1,1")).unwrap();
        for &(v, w) in &cols.pairs {
            assert_eq!(g5.partition(w), &column_growth(g3.partition(v), 2));
        }
        assert!(overlay_map_between(&g3, &g5, &p("1")).is_err());
    }

    #[test]
    fn embeddings() {
        let caps = Caps::default();
        let r = verify_induced_embedding(4, &p("1"), &caps).unwrap();
        assert!(r.pass());
        assert_eq!(r.preserved_edges + r.reflected_nonedges, 10);

        let r1 = verify_induced_embedding(1, &p("3,2"), &caps).unwrap();
        assert!(r1.pass());
        assert_eq!(r1.preserved_edges + r1.reflected_nonedges, 0);

        let r6 = verify_induced_embedding(6, &p("2,1"), &caps).unwrap();
        assert!(r6.pass());
        assert_eq!(r6.preserved_edges + r6.reflected_nonedges, 55);
    }

    #[test]
    fn overlay_cap() {
        let err = verify_induced_embedding(13, &p("1"), &Caps::default()).unwrap_err();
        assert!(matches!(err, Error::Capacity { cap: 12, .. }));
    }

    #[test]
    fn broken_maps_are_caught() {
        let mut cache = GraphCache::new(Caps::default());
        let (g6, g7) = (cache.get(6).unwrap(), cache.get(7).unwrap());
        let mut map = overlay_map_between(&g6, &g7, &p("1")).unwrap();

        // Collapse two images: one collision, plus edge mismatches.
        let mut collapsed = map.clone();
        collapsed.pairs[1].1 = collapsed.pairs[0].1;
        let r = certify(&g6, &g7, &collapsed);
        assert!(!r.injective && !r.pass());
        assert!(r.violations.iter().any(|v| matches!(v, Violation::Collision { .. })));

        // Reverse the images: injective but not induced.
        let images: Vec<VertexId> = map.pairs.iter().rev().map(|&(_, w)| w).collect();
        for (pair, w) in map.pairs.iter_mut().zip(images) {
            pair.1 = w;
        }
        let r = certify(&g6, &g7, &map);
        assert!(r.injective && !r.pass());
        assert!(r.violation_count > 0);
        assert!(r.violations.len() <= MAX_LISTED_VIOLATIONS);
        assert_eq!(
            r.preserved_edges + r.reflected_nonedges + r.violation_count,
            55
        );
    }

    #[test]
    fn sweep_counts_tau() {
        // τ ranges over (), (1), (2), (1,1), (3), (2,1), (1,1,1)
        let reports = verify_sweep(5, 3, &Caps::default()).unwrap();
        assert_eq!(reports.len(), 7);
        assert!(reports.iter().all(OverlayReport::pass));
    }

    #[test]
    fn persistence() {
        let mut cache = GraphCache::new(Caps::default());
        let reg = builtin_templates();
        let Motif::Fixed(e1) = reg.get("e1").unwrap().clone() else { panic!() };
        let r = persistence_check(&e1, 6, 9, &mut cache).unwrap();
        assert!(r.pass);
        assert_eq!(r.levels.iter().map(|l| l.n).collect::<Vec<_>>(), [6, 7, 8, 9]);

        let (bl1, _) = canonical_bl1(4).unwrap();
        assert!(persistence_check(&bl1, 4, 4, &mut cache).unwrap().pass);

        let Motif::Fixed(k3) = reg.get("k3").unwrap().clone() else { panic!() };
        assert!(persistence_check(&k3, 4, 8, &mut cache).unwrap().pass);

        let Motif::Fixed(rsq) = reg.get("rsq").unwrap().clone() else { panic!() };
        assert!(matches!(
            persistence_check(&rsq, 3, 5, &mut cache),
            Err(Error::Domain(_))
        ));
    }
}
