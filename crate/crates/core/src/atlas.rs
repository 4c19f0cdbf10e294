//! Zones, carrier distributions, growth profiles and the per-level atlas.
//!
//! Zone rules are operational stand-ins for informal positional language and
//! are labelled as a heuristic wherever they are emitted.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{build_graph, LevelGraph, VertexId};
use crate::invariants::{extremal_from_locals, local_complexities, ExtremalRecord};
use crate::motifs::{CornerFamily, Motif, Registry};
use crate::partition::{padded_l1, Partition};

/// Label attached to every zone-derived output.
pub const ZONE_RULES_STATUS: &str = "atlas-level heuristic";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Zone {
    Axis,
    AxisNear,
    BoundaryFront,
    Rear,
    Interior,
}

impl Zone {
    /// In precedence order.
    pub const ALL: [Zone; 5] = [Zone::Axis, Zone::AxisNear, Zone::BoundaryFront, Zone::Rear, Zone::Interior];

    pub fn name(self) -> &'static str {
        match self {
            Zone::Axis => "axis",
            Zone::AxisNear => "axis_near",
            Zone::BoundaryFront => "boundary_front",
            Zone::Rear => "rear",
            Zone::Interior => "interior",
        }
    }
}

impl fmt::Display for Zone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First matching rule wins: self-conjugate; one transfer from its
/// conjugate; a part or the part count at least `n - 2`; within one transfer
/// of a rectangle of the same size; otherwise interior.
pub fn classify_zone(lambda: &Partition) -> Zone {
    let n = lambda.size();
    let cols = lambda.columns();
    let self_distance = padded_l1(lambda.parts(), &cols);
    if self_distance == 0 {
        return Zone::Axis;
    }
    if self_distance == 2 {
        return Zone::AxisNear;
    }
    let near_edge = n.saturating_sub(2);
    if lambda.largest_part() >= near_edge || lambda.len() as u32 >= near_edge {
        return Zone::BoundaryFront;
    }
    let near_rectangle = (1..=n).filter(|&rows| n.is_multiple_of(rows)).any(|rows| {
        let rect = Partition::rectangle(rows, n / rows);
        padded_l1(&cols, &rect.columns()) <= 2
    });
    if lambda.is_rectangle() || near_rectangle {
        return Zone::Rear;
    }
    Zone::Interior
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ZoneHistogram {
    pub axis: u64,
    pub axis_near: u64,
    pub boundary_front: u64,
    pub rear: u64,
    pub interior: u64,
}

impl ZoneHistogram {
    pub fn add(&mut self, zone: Zone) {
        *self.slot(zone) += 1;
    }

    pub fn get(&self, zone: Zone) -> u64 {
        match zone {
            Zone::Axis => self.axis,
            Zone::AxisNear => self.axis_near,
            Zone::BoundaryFront => self.boundary_front,
            Zone::Rear => self.rear,
            Zone::Interior => self.interior,
        }
    }

    fn slot(&mut self, zone: Zone) -> &mut u64 {
        match zone {
            Zone::Axis => &mut self.axis,
            Zone::AxisNear => &mut self.axis_near,
            Zone::BoundaryFront => &mut self.boundary_front,
            Zone::Rear => &mut self.rear,
            Zone::Interior => &mut self.interior,
        }
    }

    pub fn total(&self) -> u64 {
        Zone::ALL.iter().map(|&z| self.get(z)).sum()
    }
}

impl<'a> FromIterator<&'a Partition> for ZoneHistogram {
    fn from_iter<I: IntoIterator<Item = &'a Partition>>(iter: I) -> Self {
        let mut h = ZoneHistogram::default();
        for p in iter {
            h.add(classify_zone(p));
        }
        h
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CarrierFeature {
    /// `max_degree`, `max_omega`, or `roots:<motif>`.
    pub feature: String,
    pub carriers: u64,
    pub zones: ZoneHistogram,
}

fn feature(name: String, vertices: impl Iterator<Item = VertexId>, g: &LevelGraph) -> CarrierFeature {
    let mut ids: Vec<VertexId> = vertices.collect();
    ids.sort_unstable();
    ids.dedup();
    CarrierFeature {
        feature: name,
        carriers: ids.len() as u64,
        zones: ids.iter().map(|&v| g.partition(v)).collect(),
    }
}

/// Zone histograms of the vertices attaining `Δ_n`, those attaining `Ω_n`,
/// and the root vertices of each motif.
pub fn carrier_distribution(g: &LevelGraph, motifs: &[Motif], caps: &Caps) -> Result<Vec<CarrierFeature>> {
    let locals = local_complexities(g, caps)?;
    carriers_from_locals(g, &locals, motifs)
}

fn carriers_from_locals(
    g: &LevelGraph,
    locals: &[crate::invariants::LocalComplexity],
    motifs: &[Motif],
) -> Result<Vec<CarrierFeature>> {
    let record = extremal_from_locals(g, locals);
    let mut out = vec![
        feature(
            "max_degree".into(),
            locals.iter().filter(|l| l.degree == record.delta).map(|l| l.vertex),
            g,
        ),
        feature(
            "max_omega".into(),
            locals.iter().filter(|l| l.omega_loc == record.omega).map(|l| l.vertex),
            g,
        ),
    ];
    for motif in motifs {
        let occurrences = motif.occurrences(g, None)?;
        let roots = occurrences
            .iter()
            .flat_map(|o| o.roots.iter())
            .map(|p| g.id_of(p).expect("occurrence vertices belong to the level"));
        out.push(feature(format!("roots:{}", motif.name()), roots, g));
    }
    Ok(out)
}

pub fn carrier_distribution_at(n: u32, motifs: &[Motif], caps: &Caps) -> Result<Vec<CarrierFeature>> {
    let g = build_graph(n, caps)?;
    carrier_distribution(&g, motifs, caps)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProfileKind {
    Vertices,
    Edges,
    Delta,
    Omega,
    S,
    /// Raw occurrence count of a registered motif.
    Motif(String),
}

impl FromStr for ProfileKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "vertices" => ProfileKind::Vertices,
            "edges" => ProfileKind::Edges,
            "delta" => ProfileKind::Delta,
            "omega" => ProfileKind::Omega,
            "s" => ProfileKind::S,
            other => match other.strip_prefix("motif:") {
                Some(name) if !name.is_empty() => ProfileKind::Motif(name.to_string()),
                _ => {
                    return Err(Error::Usage(format!(
                        "unknown profile kind {other:?} (expected vertices, edges, delta, omega, s or motif:<name>)"
                    )))
                }
            },
        })
    }
}

impl fmt::Display for ProfileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileKind::Vertices => f.write_str("vertices"),
            ProfileKind::Edges => f.write_str("edges"),
            ProfileKind::Delta => f.write_str("delta"),
            ProfileKind::Omega => f.write_str("omega"),
            ProfileKind::S => f.write_str("s"),
            ProfileKind::Motif(name) => write!(f, "motif:{name}"),
        }
    }
}

fn profile_value(kind: &ProfileKind, g: &LevelGraph, registry: &Registry, caps: &Caps) -> Result<u64> {
    let extremal = |g: &LevelGraph| -> Result<ExtremalRecord> {
        let locals = local_complexities(g, caps)?;
        Ok(extremal_from_locals(g, &locals))
    };
    Ok(match kind {
        ProfileKind::Vertices => g.vertex_count() as u64,
        ProfileKind::Edges => g.edge_count() as u64,
        ProfileKind::Delta => g.vertex_ids().map(|v| g.degree(v)).max().unwrap_or(0) as u64,
        ProfileKind::Omega => extremal(g)?.omega as u64,
        ProfileKind::S => extremal(g)?.s as u64,
        ProfileKind::Motif(name) => registry.get(name)?.count(g)?,
    })
}

fn check_range(n_from: u32, n_to: u32) -> Result<()> {
    if n_from == 0 || n_from > n_to {
        return Err(Error::Domain(format!("invalid level range {n_from}..={n_to}")));
    }
    Ok(())
}

/// `a_n` for every `n` in the range.
pub fn growth_profile(
    kind: &ProfileKind,
    n_from: u32,
    n_to: u32,
    registry: &Registry,
    caps: &Caps,
) -> Result<Vec<u64>> {
    check_range(n_from, n_to)?;
    if let ProfileKind::Motif(name) = kind {
        registry.get(name)?;
    }
    (n_from..=n_to)
        .into_par_iter()
        .map(|n| profile_value(kind, &build_graph(n, caps)?, registry, caps))
        .collect()
}

/// An exact nonnegative ratio, reduced, with a fixed six-decimal rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ratio {
    pub numerator: u64,
    pub denominator: u64,
    pub value: String,
}

impl Ratio {
    pub fn new(numerator: u64, denominator: u64) -> Option<Self> {
        if denominator == 0 {
            return None;
        }
        let g = numerator.gcd(&denominator).max(1);
        let (num, den) = (numerator / g, denominator / g);
        // round half up at six decimals
        let scaled = (2 * num as u128 * 1_000_000 + den as u128) / (2 * den as u128);
        let value = format!("{}.{:06}", scaled / 1_000_000, scaled % 1_000_000);
        Some(Ratio {
            numerator: num,
            denominator: den,
            value,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RatioPoint {
    pub n: u32,
    pub ratio: Ratio,
}

/// Pointwise `a_n / b_n`.
pub fn normalized_profile(
    a: &ProfileKind,
    b: &ProfileKind,
    n_from: u32,
    n_to: u32,
    registry: &Registry,
    caps: &Caps,
) -> Result<Vec<RatioPoint>> {
    let num = growth_profile(a, n_from, n_to, registry, caps)?;
    let den = growth_profile(b, n_from, n_to, registry, caps)?;
    (n_from..=n_to)
        .zip(num.into_iter().zip(den))
        .map(|(n, (x, y))| {
            Ratio::new(x, y)
                .map(|ratio| RatioPoint { n, ratio })
                .ok_or_else(|| Error::Domain(format!("denominator profile {b} is zero at n = {n}")))
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct MotifCount {
    pub name: String,
    pub count: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CarrierZones {
    pub delta_witness: Zone,
    pub omega_witness: Zone,
}

#[derive(Debug, Clone, Serialize)]
pub struct Profiles {
    pub edges_per_vertex: Ratio,
}

#[derive(Debug, Clone, Serialize)]
pub struct AtlasRecord {
    pub n: u32,
    pub vertex_count: u64,
    pub edge_count: u64,
    pub extremal: ExtremalRecord,
    /// `[degree, count]`, ascending by degree.
    pub degree_spectrum: Vec<[u64; 2]>,
    /// Motifs with at least one occurrence at this level, in template order.
    pub motif_counts: Vec<MotifCount>,
    pub zone_histogram: ZoneHistogram,
    pub carrier_zones: CarrierZones,
    pub carriers: Vec<CarrierFeature>,
    pub profiles: Profiles,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdStatus {
    /// Exact first and stable threshold proved.
    ExactThreshold,
    /// Stable threshold proved to exist, with a proved upper bound.
    StableThresholdBounded,
    /// First observation in the computed range only.
    AtlasOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueSource {
    Proved,
    ComputedThisRun,
}

#[derive(Debug, Clone, Serialize)]
pub struct ThresholdEntry {
    pub name: String,
    pub status: ThresholdStatus,
    /// Threshold value: proved, or computed by a full scan from `n = 1`.
    pub value: Option<u32>,
    pub value_source: Option<ValueSource>,
    /// Proved upper bound on the first appearance. The JSON key is part of
    /// the atlas schema.
    #[serde(rename = "paper_bound")]
    pub proved_bound: Option<u32>,
    /// First level in the atlas range with an occurrence.
    pub first_observed: Option<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AtlasSummary {
    pub thresholds: Vec<ThresholdEntry>,
    pub zone_rules: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct Atlas {
    pub range: [u32; 2],
    pub records: Vec<AtlasRecord>,
    pub summary: AtlasSummary,
}

impl Atlas {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("atlas json");
        s.push('\n');
        s
    }

    /// One `n,metric,value` row per level and metric.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,metric,value\n");
        for r in &self.records {
            let mut row = |metric: &str, value: u64| {
                let _ = writeln!(s, "{},{metric},{value}", r.n);
            };
            row("vertex_count", r.vertex_count);
            row("edge_count", r.edge_count);
            row("delta", r.extremal.delta as u64);
            row("omega", r.extremal.omega as u64);
            row("s", r.extremal.s as u64);
            for z in Zone::ALL {
                row(&format!("zone:{z}"), r.zone_histogram.get(z));
            }
            for m in &r.motif_counts {
                row(&format!("motif:{}", m.name), m.count);
            }
        }
        s
    }
}

fn atlas_record(n: u32, motifs: &[Motif], caps: &Caps) -> Result<AtlasRecord> {
    let g = build_graph(n, caps)?;
    let locals = local_complexities(&g, caps)?;
    let extremal = extremal_from_locals(&g, &locals);
    let mut motif_counts = Vec::new();
    for m in motifs {
        let count = m.count(&g)?;
        if count > 0 {
            motif_counts.push(MotifCount {
                name: m.name().to_string(),
                count,
            });
        }
    }
    let carriers = carriers_from_locals(&g, &locals, motifs)?;
    Ok(AtlasRecord {
        n,
        vertex_count: g.vertex_count() as u64,
        edge_count: g.edge_count() as u64,
        degree_spectrum: g
            .degree_spectrum()
            .into_iter()
            .map(|(d, c)| [d as u64, c as u64])
            .collect(),
        motif_counts,
        zone_histogram: g.vertices().iter().collect(),
        carrier_zones: CarrierZones {
            delta_witness: classify_zone(&extremal.delta_witness),
            omega_witness: classify_zone(&extremal.omega_witness),
        },
        carriers,
        profiles: Profiles {
            edges_per_vertex: Ratio::new(g.edge_count() as u64, g.vertex_count() as u64).expect("nonempty level"),
        },
        extremal,
    })
}

/// Proved upper bounds on first appearance of the fixed weak templates.
fn weak_template_bound(name: &str) -> Option<u32> {
    match name {
        "p2" => Some(8),
        "e1" => Some(6),
        "rsq" => Some(9),
        _ => None,
    }
}

fn summary_entry(motif: &Motif, n_from: u32, records: &[AtlasRecord]) -> ThresholdEntry {
    let name = motif.name();
    let first_observed = records
        .iter()
        .find(|r| r.motif_counts.iter().any(|m| m.name == name))
        .map(|r| r.n);
    // Only a scan that starts at level 1 pins down the exact first level.
    let computed = first_observed.filter(|_| n_from == 1);
    let (status, value, value_source, proved_bound) = match motif {
        Motif::Corner(CornerFamily::Left | CornerFamily::Right) => {
            (ThresholdStatus::ExactThreshold, Some(4), Some(ValueSource::Proved), Some(4))
        }
        Motif::Fixed(_) => match weak_template_bound(name) {
            Some(bound) => (
                ThresholdStatus::StableThresholdBounded,
                computed,
                computed.map(|_| ValueSource::ComputedThisRun),
                Some(bound),
            ),
            None => (
                ThresholdStatus::AtlasOnly,
                first_observed,
                first_observed.map(|_| ValueSource::ComputedThisRun),
                None,
            ),
        },
    };
    ThresholdEntry {
        name: name.to_string(),
        status,
        value,
        value_source,
        proved_bound,
        first_observed,
    }
}

/// One record per level of `n_from..=n_to` plus the threshold table.
pub fn build_atlas(n_from: u32, n_to: u32, motifs: &[Motif], caps: &Caps) -> Result<Atlas> {
    check_range(n_from, n_to)?;
    let records = (n_from..=n_to)
        .into_par_iter()
        .map(|n| atlas_record(n, motifs, caps))
        .collect::<Result<Vec<_>>>()?;
    let thresholds = motifs.iter().map(|m| summary_entry(m, n_from, &records)).collect();
    Ok(Atlas {
        range: [n_from, n_to],
        records,
        summary: AtlasSummary {
            thresholds,
            zone_rules: ZONE_RULES_STATUS,
        },
    })
}
