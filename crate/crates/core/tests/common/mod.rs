//! Brute-force reference implementations. They work on plain `Vec<u32>`
//! part lists and share no code with the library.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

/// Partition counts from Euler's pentagonal recurrence.
pub fn pentagonal_counts(n_max: usize) -> Vec<u64> {
    let mut p = vec![0i64; n_max + 1];
    p[0] = 1;
    for n in 1..=n_max {
        let mut total = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[n - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                total += sign * p[n - g2];
            }
            k += 1;
        }
        p[n] = total;
    }
    p.into_iter().map(|v| v as u64).collect()
}

/// Every partition of `n` as a weakly decreasing part list.
pub fn partitions(n: u32) -> BTreeSet<Vec<u32>> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut BTreeSet<Vec<u32>>) {
        if rest == 0 {
            out.insert(prefix.clone());
            return;
        }
        for part in 1..=rest.min(max) {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn canonical(mut parts: Vec<u32>) -> Vec<u32> {
    parts.retain(|&p| p > 0);
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Partitions reachable from `lambda` by moving one unit from one part to
/// another, where the receiving part may be a fresh zero part.
pub fn move_neighbors(lambda: &[u32]) -> BTreeSet<Vec<u32>> {
    let mut padded = lambda.to_vec();
    padded.push(0);
    let mut out = BTreeSet::new();
    for from in 0..padded.len() {
        if padded[from] == 0 {
            continue;
        }
        for to in 0..padded.len() {
            if to == from {
                continue;
            }
            let mut next = padded.clone();
            next[from] -= 1;
            next[to] += 1;
            let next = canonical(next);
            if next.as_slice() != lambda {
                out.insert(next);
            }
        }
    }
    out
}

/// Conjugate by counting cells of the Ferrers diagram column by column.
pub fn conjugate(lambda: &[u32]) -> Vec<u32> {
    let width = lambda.first().copied().unwrap_or(0);
    (0..width)
        .map(|col| lambda.iter().filter(|&&row| row > col).count() as u32)
        .collect()
}

/// `T_tau(lambda)`: the partition whose columns are the column sums.
pub fn translate(lambda: &[u32], tau: &[u32]) -> Vec<u32> {
    let (a, b) = (conjugate(lambda), conjugate(tau));
    let cols: Vec<u32> = (0..a.len().max(b.len()))
        .map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0))
        .collect();
    conjugate(&cols)
}

/// Adjacency of `G_n` built purely from unit moves, on vertices listed in
/// ascending part-list order.
pub struct OracleGraph {
    pub vertices: Vec<Vec<u32>>,
    pub adj: Vec<Vec<bool>>,
}

impl OracleGraph {
    pub fn new(n: u32) -> Self {
        let vertices: Vec<Vec<u32>> = partitions(n).into_iter().collect();
        let index: BTreeMap<&Vec<u32>, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut adj = vec![vec![false; vertices.len()]; vertices.len()];
        for (i, v) in vertices.iter().enumerate() {
            for w in move_neighbors(v) {
                adj[i][index[&w]] = true;
            }
        }
        OracleGraph { vertices, adj }
    }

    pub fn index_of(&self, parts: &[u32]) -> usize {
        self.vertices.iter().position(|v| v == parts).expect("vertex")
    }

    pub fn edge_set(&self) -> BTreeSet<(Vec<u32>, Vec<u32>)> {
        let mut out = BTreeSet::new();
        for i in 0..self.vertices.len() {
            for j in i + 1..self.vertices.len() {
                if self.adj[i][j] {
                    out.insert((self.vertices[i].clone(), self.vertices[j].clone()));
                }
            }
        }
        out
    }

    /// All maximal cliques of the whole graph (Bron-Kerbosch, no pivoting).
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        fn bk(g: &OracleGraph, r: &mut Vec<usize>, p: Vec<usize>, mut x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if p.is_empty() && x.is_empty() {
                out.push(r.clone());
                return;
            }
            let mut p = p;
            while let Some(v) = p.pop() {
                r.push(v);
                let np = p.iter().copied().filter(|&u| g.adj[v][u]).collect();
                let nx = x.iter().copied().filter(|&u| g.adj[v][u]).collect();
                bk(g, r, np, nx, out);
                r.pop();
                x.push(v);
            }
        }
        let mut out = Vec::new();
        bk(self, &mut Vec::new(), (0..self.vertices.len()).collect(), Vec::new(), &mut out);
        out
    }

    /// Largest clique containing each vertex, from whole-graph enumeration.
    pub fn local_clique_numbers(&self) -> Vec<usize> {
        let mut best = vec![0; self.vertices.len()];
        for clique in self.maximal_cliques() {
            for &v in &clique {
                best[v] = best[v].max(clique.len());
            }
        }
        best
    }

    /// Every injective tuple inducing exactly the edge pattern `edges` on
    /// `k` template vertices.
    pub fn induced_tuples(&self, k: usize, edges: &[(u32, u32)]) -> BTreeSet<Vec<Vec<u32>>> {
        let want = |a: usize, b: usize| {
            edges
                .iter()
                .any(|&(x, y)| (x as usize, y as usize) == (a, b) || (x as usize, y as usize) == (b, a))
        };
        let m = self.vertices.len();
        let mut out = BTreeSet::new();
        let mut tuple = vec![0usize; k];
        fn rec(
            g: &OracleGraph,
            pos: usize,
            tuple: &mut Vec<usize>,
            m: usize,
            want: &dyn Fn(usize, usize) -> bool,
            out: &mut BTreeSet<Vec<Vec<u32>>>,
        ) {
            if pos == tuple.len() {
                for a in 0..tuple.len() {
                    for b in a + 1..tuple.len() {
                        if tuple[a] == tuple[b] || g.adj[tuple[a]][tuple[b]] != want(a, b) {
                            return;
                        }
                    }
                }
                out.insert(tuple.iter().map(|&v| g.vertices[v].clone()).collect());
                return;
            }
            for v in 0..m {
                tuple[pos] = v;
                rec(g, pos + 1, tuple, m, want, out);
            }
        }
        rec(self, 0, &mut tuple, m, &want, &mut out);
        out
    }
}

/// Small templates (at most four vertices) used to cross-check the matcher:
/// `(vertex count, edges)`.
pub fn small_templates() -> Vec<(usize, Vec<(u32, u32)>)> {
    vec![
        (1, vec![]),
        (2, vec![(0, 1)]),
        (2, vec![]),
        (3, vec![(0, 1), (1, 2)]),
        (3, vec![(0, 1), (0, 2), (1, 2)]),
        (3, vec![(0, 1)]),
        (4, vec![(0, 1), (1, 2), (2, 3)]),
        (4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]),
        (4, vec![(0, 1), (0, 2), (0, 3)]),
        (4, vec![(0, 1), (0, 2), (1, 2), (2, 3)]),
        (4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        (4, vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    ]
}

/// Part list of a library partition.
pub fn parts(p: &partgraph::Partition) -> Vec<u32> {
    p.parts().to_vec()
}
