//! Rooted induced templates and exact occurrence search.
//!
//! An occurrence is an injective assignment of template vertices to level
//! vertices that realises every template edge as an edge and every template
//! non-edge as a non-edge, with the roots matched in order. Assignments that
//! differ only by a template automorphism are counted separately.

use std::ops::ControlFlow;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{LevelGraph, VertexId};
use crate::partition::Partition;

/// Names kept free for user-supplied atlas motifs; they have no built-in
/// structure.
pub const RESERVED_NAMES: [&str; 5] = ["a1", "a2", "p3", "e2", "r_rec"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTemplate {
    name: String,
    vertex_count: usize,
    /// `(a, b)` with `a < b`, sorted.
    edges: Vec<(u32, u32)>,
    roots: Vec<u32>,
    min_n: Option<u32>,
    adjacency: Vec<Vec<bool>>,
}

impl RootedTemplate {
    pub fn new(
        name: impl Into<String>,
        vertex_count: usize,
        edges: &[(u32, u32)],
        roots: &[u32],
        min_n: Option<u32>,
    ) -> Result<Self> {
        let name = name.into();
        let invalid = |location: String, message: &str| Error::Template {
            location,
            message: message.to_string(),
        };
        if vertex_count == 0 {
            return Err(invalid(format!("{name}: vertices"), "template needs at least one vertex"));
        }
        let mut adjacency = vec![vec![false; vertex_count]; vertex_count];
        let mut normalized = Vec::with_capacity(edges.len());
        for (i, &(a, b)) in edges.iter().enumerate() {
            let location = format!("{name}: edges[{i}]");
            if a as usize >= vertex_count || b as usize >= vertex_count {
                return Err(invalid(location, "edge endpoint out of range"));
            }
            if a == b {
                return Err(invalid(location, "self-loop"));
            }
            if adjacency[a as usize][b as usize] {
                return Err(invalid(location, "duplicate edge"));
            }
            adjacency[a as usize][b as usize] = true;
            adjacency[b as usize][a as usize] = true;
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();

        if roots.is_empty() {
            return Err(invalid(format!("{name}: roots"), "at least one root is required"));
        }
        for (i, &r) in roots.iter().enumerate() {
            let location = format!("{name}: roots[{i}]");
            if r as usize >= vertex_count {
                return Err(invalid(location, "root out of range"));
            }
            if roots[..i].contains(&r) {
                return Err(invalid(location, "repeated root"));
            }
        }

        Ok(RootedTemplate {
            name,
            vertex_count,
            edges: normalized,
            roots: roots.to_vec(),
            min_n,
            adjacency,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn roots(&self) -> &[u32] {
        &self.roots
    }

    pub fn min_n(&self) -> Option<u32> {
        self.min_n
    }

    /// Occurrences are always induced.
    pub fn induced(&self) -> bool {
        true
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a][b]
    }

    pub fn degree(&self, a: usize) -> usize {
        self.adjacency[a].iter().filter(|&&e| e).count()
    }

    /// Roots in order, then the remaining vertices by id.
    fn search_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = self.roots.iter().map(|&r| r as usize).collect();
        let rest: Vec<usize> = (0..self.vertex_count).filter(|v| !order.contains(v)).collect();
        order.extend(rest);
        order
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&TemplateFile::from(self)).expect("template json")
    }
}

/// On-disk template schema.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TemplateFile {
    name: String,
    vertices: usize,
    edges: Vec<[u32; 2]>,
    roots: Vec<u32>,
    #[serde(default)]
    min_n: Option<u32>,
}

impl From<&RootedTemplate> for TemplateFile {
    fn from(t: &RootedTemplate) -> Self {
        TemplateFile {
            name: t.name.clone(),
            vertices: t.vertex_count,
            edges: t.edges.iter().map(|&(a, b)| [a, b]).collect(),
            roots: t.roots.clone(),
            min_n: t.min_n,
        }
    }
}

/// Parses a template from JSON text; `source` names the origin in errors.
pub fn parse_template(json: &str, source: &str) -> Result<RootedTemplate> {
    let file: TemplateFile = serde_json::from_str(json).map_err(|e| Error::Template {
        location: format!("{source}:{}:{}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    let edges: Vec<(u32, u32)> = file.edges.iter().map(|&[a, b]| (a, b)).collect();
    RootedTemplate::new(file.name, file.vertices, &edges, &file.roots, file.min_n).map_err(|e| match e {
        Error::Template { location, message } => Error::Template {
            location: format!("{source}: {location}"),
            message,
        },
        other => other,
    })
}

pub fn load_template(path: impl AsRef<Path>) -> Result<RootedTemplate> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    parse_template(&text, &path.display().to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Occurrence {
    pub n: u32,
    /// One partition per template vertex, indexed by template vertex id.
    pub assignment: Vec<Partition>,
    /// The assigned partitions of the roots, in root order.
    pub roots: Vec<Partition>,
}

impl Occurrence {
    fn from_ids(g: &LevelGraph, t: &RootedTemplate, ids: &[VertexId]) -> Self {
        Occurrence {
            n: g.n(),
            assignment: ids.iter().map(|&v| g.partition(v).clone()).collect(),
            roots: t.roots.iter().map(|&r| g.partition(ids[r as usize]).clone()).collect(),
        }
    }
}

/// Checks that `ids` (indexed by template vertex) is an induced rooted copy
/// of `t` in `g`.
pub fn is_occurrence(g: &LevelGraph, t: &RootedTemplate, ids: &[VertexId]) -> bool {
    if ids.len() != t.vertex_count {
        return false;
    }
    for a in 0..ids.len() {
        for b in a + 1..ids.len() {
            if ids[a] == ids[b] || g.has_edge(ids[a], ids[b]) != t.adjacent(a, b) {
                return false;
            }
        }
    }
    true
}

/// Like [`is_occurrence`], for an assignment given as partitions.
pub fn validate_assignment(g: &LevelGraph, t: &RootedTemplate, assignment: &[Partition]) -> bool {
    let ids: Option<Vec<VertexId>> = assignment.iter().map(|p| g.id_of(p)).collect();
    ids.is_some_and(|ids| is_occurrence(g, t, &ids))
}

struct Matcher<'a> {
    g: &'a LevelGraph,
    t: &'a RootedTemplate,
    order: Vec<usize>,
    /// For each position, an earlier position holding a template neighbour.
    anchor: Vec<Option<usize>>,
    degree: Vec<usize>,
}

impl<'a> Matcher<'a> {
    fn new(g: &'a LevelGraph, t: &'a RootedTemplate) -> Self {
        let order = t.search_order();
        let anchor = (0..order.len())
            .map(|k| (0..k).find(|&p| t.adjacent(order[k], order[p])))
            .collect();
        let degree = order.iter().map(|&v| t.degree(v)).collect();
        Matcher {
            g,
            t,
            order,
            anchor,
            degree,
        }
    }

    fn feasible(&self, k: usize, x: VertexId, placed: &[VertexId]) -> bool {
        if self.g.degree(x) < self.degree[k] || placed.contains(&x) {
            return false;
        }
        placed.iter().enumerate().all(|(p, &y)| {
            self.g.has_edge(x, y) == self.t.adjacent(self.order[k], self.order[p])
        })
    }

    /// Visits every occurrence whose first root is `first`, in extension order.
    fn run_from<F>(&self, first: VertexId, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[VertexId]) -> ControlFlow<()>,
    {
        if !self.feasible(0, first, &[]) {
            return ControlFlow::Continue(());
        }
        let mut placed = Vec::with_capacity(self.order.len());
        placed.push(first);
        let mut by_template = vec![0; self.order.len()];
        self.extend(&mut placed, &mut by_template, visit)
    }

    fn extend<F>(&self, placed: &mut Vec<VertexId>, scratch: &mut [VertexId], visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[VertexId]) -> ControlFlow<()>,
    {
        let k = placed.len();
        if k == self.order.len() {
            for (p, &x) in placed.iter().enumerate() {
                scratch[self.order[p]] = x;
            }
            return visit(scratch);
        }
        let candidates: Box<dyn Iterator<Item = VertexId>> = match self.anchor[k] {
            Some(p) => Box::new(self.g.neighbors(placed[p]).iter().copied()),
            None => Box::new(self.g.vertex_ids()),
        };
        for x in candidates {
            if self.feasible(k, x, placed) {
                placed.push(x);
                let flow = self.extend(placed, scratch, visit);
                placed.pop();
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// All induced rooted copies of `t` in `g`, ordered by first-root vertex id
/// and then by extension order. Stops after `limit` results when given.
pub fn find_occurrences(g: &LevelGraph, t: &RootedTemplate, limit: Option<usize>) -> Vec<Occurrence> {
    let matcher = Matcher::new(g, t);
    match limit {
        Some(limit) => {
            let mut out = Vec::new();
            if limit == 0 {
                return out;
            }
            for first in g.vertex_ids() {
                let flow = matcher.run_from(first, &mut |ids| {
                    out.push(Occurrence::from_ids(g, t, ids));
                    if out.len() >= limit {
                        ControlFlow::Break(())
                    } else {
                        ControlFlow::Continue(())
                    }
                });
                if flow.is_break() {
                    break;
                }
            }
            out
        }
        None => (0..g.vertex_count() as VertexId)
            .into_par_iter()
            .map(|first| {
                let mut local = Vec::new();
                let _ = matcher.run_from(first, &mut |ids| {
                    local.push(Occurrence::from_ids(g, t, ids));
                    ControlFlow::Continue(())
                });
                local
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect(),
    }
}

/// Number of occurrences, without materialising them.
pub fn count_occurrences(g: &LevelGraph, t: &RootedTemplate) -> u64 {
    let matcher = Matcher::new(g, t);
    (0..g.vertex_count() as VertexId)
        .into_par_iter()
        .map(|first| {
            let mut count = 0u64;
            let _ = matcher.run_from(first, &mut |_| {
                count += 1;
                ControlFlow::Continue(())
            });
            count
        })
        .sum()
}

pub fn contains(g: &LevelGraph, t: &RootedTemplate) -> bool {
    !find_occurrences(g, t, Some(1)).is_empty()
}

/// The two level-dependent boundary-corner triangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CornerFamily {
    Left,
    Right,
}

impl CornerFamily {
    pub fn name(self) -> &'static str {
        match self {
            CornerFamily::Left => "bl1",
            CornerFamily::Right => "br1",
        }
    }

    pub fn canonical(self, n: u32) -> Result<(RootedTemplate, Occurrence)> {
        match self {
            CornerFamily::Left => canonical_bl1(n),
            CornerFamily::Right => canonical_br1(n),
        }
    }
}

fn corner_template(name: &str) -> RootedTemplate {
    RootedTemplate::new(name, 3, &[(0, 1), (0, 2), (1, 2)], &[0], Some(4)).expect("corner template")
}

fn corner_occurrence(name: &str, n: u32, vertices: [Vec<u32>; 3]) -> Result<(RootedTemplate, Occurrence)> {
    let assignment: Vec<Partition> = vertices.into_iter().map(Partition::from_canonical).collect();
    let template = corner_template(name);
    let occ = Occurrence {
        n,
        roots: vec![assignment[0].clone()],
        assignment,
    };
    Ok((template, occ))
}

fn corner_level_check(name: &str, n: u32) -> Result<()> {
    if n < 4 {
        return Err(Error::Domain(format!("{name} is defined for n >= 4, got n = {n}")));
    }
    Ok(())
}

/// Left boundary corner at level `n`: root `(n-1,1)`, then `(n-2,1,1)`,
/// `(n-2,2)`.
pub fn canonical_bl1(n: u32) -> Result<(RootedTemplate, Occurrence)> {
    corner_level_check("bl1", n)?;
    corner_occurrence("bl1", n, [vec![n - 1, 1], vec![n - 2, 1, 1], vec![n - 2, 2]])
}

/// Right boundary corner: the conjugates of the left one, rooted at
/// `(2,1^{n-2})`, then `(3,1^{n-3})`, `(2,2,1^{n-4})`.
pub fn canonical_br1(n: u32) -> Result<(RootedTemplate, Occurrence)> {
    corner_level_check("br1", n)?;
    let with_ones = |head: &[u32], ones: u32| {
        let mut v = head.to_vec();
        v.extend(std::iter::repeat_n(1, ones as usize));
        v
    };
    corner_occurrence(
        "br1",
        n,
        [with_ones(&[2], n - 2), with_ones(&[3], n - 3), with_ones(&[2, 2], n - 4)],
    )
}

/// A registered motif: a fixed template, or a family constructed per level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Motif {
    Fixed(RootedTemplate),
    Corner(CornerFamily),
}

impl Motif {
    pub fn name(&self) -> &str {
        match self {
            Motif::Fixed(t) => t.name(),
            Motif::Corner(f) => f.name(),
        }
    }

    /// The template searched for at level `n`, if the motif is defined there.
    pub fn template_at(&self, n: u32) -> Option<RootedTemplate> {
        match self {
            Motif::Fixed(t) => Some(t.clone()),
            Motif::Corner(f) => f.canonical(n).ok().map(|(t, _)| t),
        }
    }

    /// Occurrences at the level of `g`. Corner families yield their single
    /// canonical realisation, validated against `g`.
    pub fn occurrences(&self, g: &LevelGraph, limit: Option<usize>) -> Result<Vec<Occurrence>> {
        match self {
            Motif::Fixed(t) => Ok(find_occurrences(g, t, limit)),
            Motif::Corner(f) => {
                let Ok((t, occ)) = f.canonical(g.n()) else {
                    return Ok(Vec::new());
                };
                if !validate_assignment(g, &t, &occ.assignment) {
                    return Err(Error::InvariantViolation(format!(
                        "canonical {} triangle fails to validate in G_{}",
                        f.name(),
                        g.n()
                    )));
                }
                Ok(if limit == Some(0) { Vec::new() } else { vec![occ] })
            }
        }
    }

    pub fn count(&self, g: &LevelGraph) -> Result<u64> {
        match self {
            Motif::Fixed(t) => Ok(count_occurrences(g, t)),
            Motif::Corner(_) => Ok(self.occurrences(g, None)?.len() as u64),
        }
    }

    pub fn first_occurrence(&self, g: &LevelGraph) -> Result<Option<Occurrence>> {
        Ok(self.occurrences(g, Some(1))?.into_iter().next())
    }
}

#[derive(Debug, Clone)]
pub struct Registry {
    motifs: Vec<Motif>,
}

impl Registry {
    pub fn motifs(&self) -> &[Motif] {
        &self.motifs
    }

    pub fn names(&self) -> Vec<&str> {
        self.motifs.iter().map(Motif::name).collect()
    }

    pub fn get(&self, name: &str) -> Result<&Motif> {
        if let Some(m) = self.motifs.iter().find(|m| m.name() == name) {
            return Ok(m);
        }
        if RESERVED_NAMES.contains(&name) {
            return Err(Error::Usage(format!(
                "motif {name:?} has no built-in definition; supply it as a template file"
            )));
        }
        Err(Error::Usage(format!(
            "unknown template {name:?} (known: {})",
            self.names().join(", ")
        )))
    }

    pub fn register(&mut self, template: RootedTemplate) -> Result<()> {
        if self.motifs.iter().any(|m| m.name() == template.name()) {
            return Err(Error::Template {
                location: template.name().to_string(),
                message: "a template with this name is already registered".into(),
            });
        }
        self.motifs.push(Motif::Fixed(template));
        Ok(())
    }

    /// Resolves a registered name, or loads and registers a template file.
    pub fn resolve(&mut self, selector: &str) -> Result<Motif> {
        let path = Path::new(selector);
        if selector.ends_with(".json") || path.is_file() {
            let template = load_template(path)?;
            if let Ok(existing) = self.get(template.name()) {
                if *existing == Motif::Fixed(template.clone()) {
                    return Ok(existing.clone());
                }
            }
            self.register(template.clone())?;
            return Ok(Motif::Fixed(template));
        }
        self.get(selector).cloned()
    }
}

/// Built-in motifs in registry order: `bl1`, `br1`, `p2`, `e1`, `rsq`, `k3`,
/// `k4`, `k5`.
pub fn builtin_templates() -> Registry {
    let complete = |k: u32| {
        let edges: Vec<(u32, u32)> = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).collect();
        RootedTemplate::new(format!("k{k}"), k as usize, &edges, &[0], None).expect("complete template")
    };
    let fixed = |name: &str, n: usize, edges: &[(u32, u32)], roots: &[u32]| {
        Motif::Fixed(RootedTemplate::new(name, n, edges, roots, None).expect("builtin template"))
    };
    Registry {
        motifs: vec![
            Motif::Corner(CornerFamily::Left),
            Motif::Corner(CornerFamily::Right),
            // path x0 - x1 - x2 with ordered roots (x0, x2)
            fixed("p2", 3, &[(0, 1), (1, 2)], &[0, 2]),
            fixed("e1", 3, &[(0, 1), (0, 2), (1, 2)], &[0]),
            // q = 0 sees exactly u = 1 and v = 2; {u, v, w1 = 3, w2 = 4} is a K4
            fixed(
                "rsq",
                5,
                &[(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
                &[0],
            ),
            Motif::Fixed(complete(3)),
            Motif::Fixed(complete(4)),
            Motif::Fixed(complete(5)),
        ],
    }
}
