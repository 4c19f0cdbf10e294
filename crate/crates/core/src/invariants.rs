//! Local clique numbers, the extremal sequences `Δ_n`, `Ω_n`, `S_n`, and the
//! checks that they never decrease under growth.

use rayon::prelude::*;
use serde::Serialize;

use crate::caps::Caps;
use crate::clique::max_clique_size;
use crate::error::{Error, Result};
use crate::graph::{build_graph, GraphCache, LevelGraph, VertexId};
use crate::partition::{ferrers_translate, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LocalComplexity {
    pub vertex: VertexId,
    pub degree: usize,
    /// Largest clique containing the vertex.
    pub omega_loc: usize,
    /// Local simplex dimension, `omega_loc - 1`.
    pub s_loc: usize,
}

/// Exact size of the largest clique of `g` through `v`.
///
/// Every such clique lives in the closed neighbourhood of `v`, so the search
/// runs on `N(v)` only and adds one.
pub fn local_clique_number(g: &LevelGraph, v: VertexId, caps: &Caps) -> Result<usize> {
    Caps::check("clique level n =", g.n(), caps.clique_n)?;
    let nbrs = g.neighbors(v);
    if nbrs.len() + 1 > caps.neighborhood {
        return Err(Error::NeighborhoodCapacity {
            vertex: g.partition(v).to_string(),
            size: nbrs.len() + 1,
            cap: caps.neighborhood,
        });
    }
    let inner = max_clique_size(nbrs.len(), |a, b| g.has_edge(nbrs[a], nbrs[b]));
    Ok(inner + 1)
}

pub fn local_complexity(g: &LevelGraph, v: VertexId, caps: &Caps) -> Result<LocalComplexity> {
    let omega_loc = local_clique_number(g, v, caps)?;
    Ok(LocalComplexity {
        vertex: v,
        degree: g.degree(v),
        omega_loc,
        s_loc: omega_loc - 1,
    })
}

/// Local complexity of every vertex, in vertex-id order.
pub fn local_complexities(g: &LevelGraph, caps: &Caps) -> Result<Vec<LocalComplexity>> {
    (0..g.vertex_count() as VertexId)
        .into_par_iter()
        .map(|v| local_complexity(g, v, caps))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalRecord {
    pub n: u32,
    pub delta: usize,
    pub omega: usize,
    pub s: usize,
    /// Lowest-id vertex of maximum degree.
    pub delta_witness: Partition,
    /// Lowest-id vertex of maximum local clique number; also realises `s`.
    pub omega_witness: Partition,
}

impl ExtremalRecord {
    pub fn value(&self, kind: ExtremalKind) -> usize {
        match kind {
            ExtremalKind::Delta => self.delta,
            ExtremalKind::Omega => self.omega,
            ExtremalKind::S => self.s,
        }
    }
}

/// Extremal record of an already built level.
pub fn extremal_record_of(g: &LevelGraph, caps: &Caps) -> Result<ExtremalRecord> {
    let locals = local_complexities(g, caps)?;
    Ok(extremal_from_locals(g, &locals))
}

pub(crate) fn extremal_from_locals(g: &LevelGraph, locals: &[LocalComplexity]) -> ExtremalRecord {
    // max_by_key keeps the last maximum; scanning in reverse makes the
    // lowest id win ties.
    let by_degree = locals.iter().rev().max_by_key(|l| l.degree).expect("nonempty level");
    let by_omega = locals.iter().rev().max_by_key(|l| l.omega_loc).expect("nonempty level");
    ExtremalRecord {
        n: g.n(),
        delta: by_degree.degree,
        omega: by_omega.omega_loc,
        s: by_omega.s_loc,
        delta_witness: g.partition(by_degree.vertex).clone(),
        omega_witness: g.partition(by_omega.vertex).clone(),
    }
}

pub fn extremal_record(n: u32, caps: &Caps) -> Result<ExtremalRecord> {
    let g = build_graph(n, caps)?;
    extremal_record_of(&g, caps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremalKind {
    Delta,
    Omega,
    S,
}

impl ExtremalKind {
    pub const ALL: [ExtremalKind; 3] = [ExtremalKind::Delta, ExtremalKind::Omega, ExtremalKind::S];

    pub fn name(self) -> &'static str {
        match self {
            ExtremalKind::Delta => "delta",
            ExtremalKind::Omega => "omega",
            ExtremalKind::S => "s",
        }
    }
}

impl std::str::FromStr for ExtremalKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "delta" => Ok(ExtremalKind::Delta),
            "omega" => Ok(ExtremalKind::Omega),
            "s" => Ok(ExtremalKind::S),
            other => Err(Error::Usage(format!(
                "unknown extremal kind {other:?} (expected delta, omega or s)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Comparison {
    pub quantity: ExtremalKind,
    pub n: u32,
    pub value: usize,
    pub next_value: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct MonotonicityReport {
    pub n_from: u32,
    pub n_to: u32,
    pub records: Vec<ExtremalRecord>,
    /// One entry per quantity per consecutive pair `(n, n+1)`.
    pub comparisons: Vec<Comparison>,
    pub pass: bool,
}

/// Records for every level of `n_from..=n_to`, built in parallel and returned
/// in level order.
pub fn extremal_records(n_from: u32, n_to: u32, caps: &Caps) -> Result<Vec<ExtremalRecord>> {
    (n_from..=n_to)
        .into_par_iter()
        .map(|n| extremal_record(n, caps))
        .collect()
}

pub fn monotonicity_check(n_from: u32, n_to: u32, caps: &Caps) -> Result<MonotonicityReport> {
    if n_from == 0 || n_from > n_to {
        return Err(Error::Domain(format!(
            "invalid level range {n_from}..={n_to}"
        )));
    }
    let records = extremal_records(n_from, n_to, caps)?;
    Ok(monotonicity_from_records(records))
}

pub fn monotonicity_from_records(records: Vec<ExtremalRecord>) -> MonotonicityReport {
    let mut comparisons = Vec::new();
    for pair in records.windows(2) {
        for kind in ExtremalKind::ALL {
            let (value, next_value) = (pair[0].value(kind), pair[1].value(kind));
            comparisons.push(Comparison {
                quantity: kind,
                n: pair[0].n,
                value,
                next_value,
                ok: value <= next_value,
            });
        }
    }
    let pass = comparisons.iter().all(|c| c.ok) && records.iter().all(|r| r.s + 1 == r.omega);
    MonotonicityReport {
        n_from: records.first().map_or(0, |r| r.n),
        n_to: records.last().map_or(0, |r| r.n),
        records,
        comparisons,
        pass,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TranslationMargin {
    pub source: Partition,
    pub image: Partition,
    /// `deg(T_τ λ) - deg(λ)`.
    pub degree_margin: i64,
    /// `ω_loc(T_τ λ) - ω_loc(λ)`.
    pub omega_margin: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalTranslationReport {
    pub n: u32,
    pub tau: Partition,
    pub margins: Vec<TranslationMargin>,
    pub pass: bool,
}

/// Compares degree and local clique number of every `λ ⊢ n` with those of
/// its translate in `G_{n+|τ|}`.
pub fn local_translation_check(n: u32, tau: &Partition, caps: &Caps) -> Result<LocalTranslationReport> {
    let mut cache = GraphCache::new(*caps);
    let source = cache.get(n)?;
    let target = cache.get(n + tau.size())?;
    let source_locals = local_complexities(&source, caps)?;

    let margins = source_locals
        .par_iter()
        .map(|local| {
            let lambda = source.partition(local.vertex);
            let image = ferrers_translate(lambda, tau);
            let w = target.id_of(&image).ok_or_else(|| {
                Error::InvariantViolation(format!("translate {image} missing from G_{}", target.n()))
            })?;
            let image_local = local_complexity(&target, w, caps)?;
            Ok(TranslationMargin {
                source: lambda.clone(),
                image,
                degree_margin: image_local.degree as i64 - local.degree as i64,
                omega_margin: image_local.omega_loc as i64 - local.omega_loc as i64,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let pass = margins.iter().all(|m| m.degree_margin >= 0 && m.omega_margin >= 0);
    Ok(LocalTranslationReport {
        n,
        tau: tau.clone(),
        margins,
        pass,
    })
}
