//! The level graph `G_n` with a fixed vertex order.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::partition::{unit_transfers, Partition, Partitions};

/// Vertex id: position of the partition in descending lexicographic order.
pub type VertexId = u32;

/// Immutable partition graph of one level.
#[derive(Debug, Clone)]
pub struct LevelGraph {
    n: u32,
    vertices: Vec<Partition>,
    index: HashMap<Partition, VertexId>,
    adjacency: Vec<Vec<VertexId>>,
}

impl LevelGraph {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[Partition] {
        &self.vertices
    }

    pub fn partition(&self, v: VertexId) -> &Partition {
        &self.vertices[v as usize]
    }

    pub fn id_of(&self, lambda: &Partition) -> Option<VertexId> {
        self.index.get(lambda).copied()
    }

    /// Neighbour ids of `v`, ascending.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.adjacency[a as usize].binary_search(&b).is_ok()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        0..self.vertices.len() as VertexId
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertex_ids().flat_map(move |a| {
            self.neighbors(a)
                .iter()
                .copied()
                .filter(move |&b| b > a)
                .map(move |b| (a, b))
        })
    }

    pub fn degree_spectrum(&self) -> DegreeSpectrum {
        degree_spectrum(self)
    }

    pub fn export(&self, format: ExportFormat) -> String {
        export_graph(self, format)
    }
}

/// Builds `G_n`. Neighbours come from enumerating unit transfers of each
/// vertex and looking the results up, not from all-pairs distance tests.
pub fn build_graph(n: u32, caps: &Caps) -> Result<LevelGraph> {
    if n == 0 {
        return Err(Error::Domain("level graphs are defined for n >= 1".into()));
    }
    Caps::check("graph level n =", n, caps.graph_n)?;
    Caps::check("partition size n =", n, caps.partition_n)?;

    let vertices: Vec<Partition> = Partitions::new(n).collect();
    let index: HashMap<Partition, VertexId> = vertices
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i as VertexId))
        .collect();

    let adjacency: Vec<Vec<VertexId>> = vertices
        .par_iter()
        .map(|lambda| {
            let mut ids: Vec<VertexId> = unit_transfers(lambda)
                .iter()
                .map(|mu| index[mu])
                .collect();
            ids.sort_unstable();
            ids
        })
        .collect();

    Ok(LevelGraph {
        n,
        vertices,
        index,
        adjacency,
    })
}

/// Degree histogram, ascending by degree.
pub type DegreeSpectrum = BTreeMap<usize, usize>;

pub fn degree_spectrum(g: &LevelGraph) -> DegreeSpectrum {
    let mut spectrum = BTreeMap::new();
    for v in g.vertex_ids() {
        *spectrum.entry(g.degree(v)).or_insert(0) += 1;
    }
    spectrum
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::Usage(format!(
                "unknown graph format {other:?} (expected dot or json)"
            ))),
        }
    }
}

#[derive(Serialize)]
struct GraphJson<'a> {
    n: u32,
    vertex_count: usize,
    vertices: &'a [Partition],
    edges: Vec<[VertexId; 2]>,
}

pub fn export_graph(g: &LevelGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Json => {
            let doc = GraphJson {
                n: g.n,
                vertex_count: g.vertex_count(),
                vertices: &g.vertices,
                edges: g.edges().map(|(a, b)| [a, b]).collect(),
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("graph json");
            s.push('\n');
            s
        }
        ExportFormat::Dot => {
            let mut s = String::new();
            let _ = writeln!(s, "graph G{} {{", g.n);
            for v in g.vertex_ids() {
                let _ = writeln!(s, "  v{v} [label=\"{}\"];", g.partition(v));
            }
            for (a, b) in g.edges() {
                let _ = writeln!(s, "  v{a} -- v{b};");
            }
            s.push_str("}\n");
            s
        }
    }
}

/// Memoises level graphs so scans over many `n` build each level once.
#[derive(Debug, Default)]
pub struct GraphCache {
    caps: Caps,
    levels: HashMap<u32, Arc<LevelGraph>>,
}

impl GraphCache {
    pub fn new(caps: Caps) -> Self {
        GraphCache {
            caps,
            levels: HashMap::new(),
        }
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn get(&mut self, n: u32) -> Result<Arc<LevelGraph>> {
        if let Some(g) = self.levels.get(&n) {
            return Ok(Arc::clone(g));
        }
        let g = Arc::new(build_graph(n, &self.caps)?);
        self.levels.insert(n, Arc::clone(&g));
        Ok(g)
    }
}
