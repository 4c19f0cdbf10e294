//! Exact maximum clique on small dense-ish vertex sets: branch and bound with
//! greedy colouring bounds (MCQ ordering). Vertices are the local indices
//! `0..m`; branching order is deterministic.

#[derive(Clone, PartialEq, Eq)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn empty(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
        }
    }

    fn full(len: usize) -> Self {
        let mut b = Bits::empty(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .position(|&w| w != 0)
            .map(|wi| wi * 64 + self.words[wi].trailing_zeros() as usize)
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    fn and_not_assign(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }
}

/// Size of a maximum clique of the graph on `0..m` given by `adjacent`.
pub(crate) fn max_clique_size(m: usize, adjacent: impl Fn(usize, usize) -> bool) -> usize {
    if m == 0 {
        return 0;
    }
    let rows: Vec<Bits> = (0..m)
        .map(|i| {
            let mut row = Bits::empty(m);
            for j in 0..m {
                if i != j && adjacent(i, j) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    let mut search = Search { rows: &rows, best: 1 };
    search.expand(0, Bits::full(m));
    search.best
}

struct Search<'a> {
    rows: &'a [Bits],
    best: usize,
}

impl Search<'_> {
    fn expand(&mut self, depth: usize, mut candidates: Bits) {
        let (order, colors) = self.color_sort(&candidates);
        for i in (0..order.len()).rev() {
            if depth + colors[i] <= self.best {
                return;
            }
            let v = order[i];
            let next = candidates.and(&self.rows[v]);
            if next.is_empty() {
                self.best = self.best.max(depth + 1);
            } else {
                self.expand(depth + 1, next);
            }
            candidates.remove(v);
        }
    }

    /// Greedy colouring in ascending index order. Returns vertices grouped by
    /// colour class with the (1-based) class number of each, ascending.
    fn color_sort(&self, candidates: &Bits) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = candidates.clone();
        let mut order = Vec::new();
        let mut colors = Vec::new();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut available = uncolored.clone();
            while let Some(v) = available.first() {
                available.remove(v);
                available.and_not_assign(&self.rows[v]);
                uncolored.remove(v);
                order.push(v);
                colors.push(color);
            }
        }
        (order, colors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_edges(m: usize, edges: &[(usize, usize)]) -> usize {
        max_clique_size(m, |a, b| edges.contains(&(a, b)) || edges.contains(&(b, a)))
    }

    #[test]
    fn basic_shapes() {
        assert_eq!(max_clique_size(0, |_, _| false), 0);
        assert_eq!(max_clique_size(5, |_, _| false), 1);
        assert_eq!(max_clique_size(7, |a, b| a != b), 7);
        assert_eq!(from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]), 2);
        assert_eq!(from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]), 3);
    }

    #[test]
    fn wide_sets_cross_word_boundaries() {
        // Two disjoint cliques of 40 and 70 vertices.
        let m = 110;
        let side = |i: usize| i < 40;
        assert_eq!(max_clique_size(m, |a, b| a != b && side(a) == side(b)), 70);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn matches_subset_enumeration_on_random_graphs() {
        // xorshift so the test needs no RNG dependency
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..40 {
            let m = 12;
            let mut adj = [[false; 12]; 12];
            for i in 0..m {
                for j in i + 1..m {
                    let e = next() % 3 != 0;
                    adj[i][j] = e;
                    adj[j][i] = e;
                }
            }
            let mut brute = 1;
            for mask in 1u32..(1 << m) {
                let vs: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
                let clique = vs.iter().all(|&a| vs.iter().all(|&b| a == b || adj[a][b]));
                if clique {
                    brute = brute.max(vs.len());
                }
            }
            assert_eq!(max_clique_size(m, |a, b| adj[a][b]), brute);
        }
    }
}
