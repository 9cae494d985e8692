//! Labeled simple undirected graphs and the structural predicates the rest of
//! the toolkit filters on: degrees, girth, the square operator, 5-cycle
//! detection, and graph6 text I/O.

use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("graph6 parse error at byte {0}: {1}")]
    Graph6(usize, String),
}

/// Simple undirected graph with sorted adjacency lists and optional vertex
/// labels (kept so that catalog names like "v1" survive into certificates).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Edge list with 1-based vertex names, matching the catalog labelling.
    /// `v1..vn` get labels "v1".."vn".
    pub fn from_labeled_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let shifted: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        let mut g = Graph::from_edges(n, &shifted).expect("static edge list must be simple");
        g.labels = Some((1..=n).map(|i| format!("v{i}")).collect());
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if u >= n || v >= n {
            return Err(GraphError::VertexOutOfRange(u.max(v), n));
        }
        if !self.adj[u].contains(&v) {
            let pos = self.adj[u].binary_search(&v).unwrap_err();
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|a| a.len() == 3)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => format!("{v}"),
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    /// BFS distances from `src`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Square of the graph: same vertices, edges between vertices at distance
    /// one or two. Labels are preserved.
    pub fn square(&self) -> Graph {
        let n = self.n();
        let mut sq = Graph::empty(n);
        sq.labels = self.labels.clone();
        for u in 0..n {
            for &v in &self.adj[u] {
                if u < v {
                    sq.add_edge(u, v).unwrap();
                }
                for &w in &self.adj[v] {
                    if w != u && !sq.has_edge(u, w) {
                        sq.add_edge(u, w).unwrap();
                    }
                }
            }
        }
        sq
    }

    /// Length of the shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        // BFS from each vertex; a non-tree edge at depths (d1, d2) closes a
        // cycle of length d1 + d2 + 1 through the root.
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let c = dist[u] + dist[v] + 1;
                        if best.map_or(true, |b| c < b) {
                            best = Some(c);
                        }
                    }
                }
            }
        }
        best
    }

    /// True iff the graph contains a cycle on exactly five vertices.
    ///
    /// DFS over paths of length five with smallest-start pruning: only paths
    /// whose start is the minimum vertex of the would-be cycle are extended.
    pub fn has_five_cycle(&self) -> bool {
        self.find_five_cycle().is_some()
    }

    /// A witness 5-cycle as a vertex list, if one exists.
    pub fn find_five_cycle(&self) -> Option<[usize; 5]> {
        let n = self.n();
        let mut path = [0usize; 5];
        let mut on_path = vec![false; n];
        fn dfs(
            g: &Graph,
            path: &mut [usize; 5],
            on_path: &mut [bool],
            depth: usize,
        ) -> bool {
            if depth == 5 {
                return g.has_edge(path[4], path[0]);
            }
            let u = path[depth - 1];
            for &v in g.neighbors(u) {
                // start vertex is the cycle minimum, so never descend below it
                if v > path[0] && !on_path[v] {
                    path[depth] = v;
                    on_path[v] = true;
                    if dfs(g, path, on_path, depth + 1) {
                        return true;
                    }
                    on_path[v] = false;
                }
            }
            false
        }
        for s in 0..n {
            path[0] = s;
            on_path[s] = true;
            if dfs(self, &mut path, &mut on_path, 1) {
                return Some(path);
            }
            on_path[s] = false;
        }
        None
    }

    /// Parses one line of graph6 (the standard printable format, n <= 62 or
    /// the 4-byte extension).
    pub fn from_graph6(line: &str) -> Result<Graph, GraphError> {
        let bytes = line.trim().as_bytes();
        if bytes.is_empty() {
            return Err(GraphError::Graph6(0, "empty line".into()));
        }
        let mut pos = 0;
        let n: usize = if bytes[0] == b'>' {
            // optional ">>graph6<<" header
            let header = b">>graph6<<";
            if bytes.len() >= header.len() && &bytes[..header.len()] == header {
                pos = header.len();
            } else {
                return Err(GraphError::Graph6(0, "bad header".into()));
            }
            Self::g6_size(bytes, &mut pos)?
        } else {
            Self::g6_size(bytes, &mut pos)?
        };
        let mut g = Graph::empty(n);
        let mut k = 0usize; // bit index over the upper triangle, column-major
        let nbits = n.saturating_sub(1) * n / 2;
        let mut bit = 0usize;
        for &b in &bytes[pos..] {
            if !(63..=126).contains(&b) {
                return Err(GraphError::Graph6(pos, format!("byte {b} out of range")));
            }
            let val = b - 63;
            for shift in (0..6).rev() {
                if bit >= nbits {
                    break;
                }
                if (val >> shift) & 1 == 1 {
                    // bit k corresponds to pair (i, j), j > i, ordered by j then i
                    let (i, j) = g6_pair(k);
                    g.add_edge(i, j)?;
                }
                k += 1;
                bit += 1;
            }
        }
        if bit < nbits {
            return Err(GraphError::Graph6(bytes.len(), "truncated edge bits".into()));
        }
        Ok(g)
    }

    fn g6_size(bytes: &[u8], pos: &mut usize) -> Result<usize, GraphError> {
        let b0 = bytes[*pos];
        if !(63..=126).contains(&b0) {
            return Err(GraphError::Graph6(*pos, format!("size byte {b0} out of range")));
        }
        if b0 == 126 {
            if bytes.len() < *pos + 4 {
                return Err(GraphError::Graph6(*pos, "truncated size".into()));
            }
            if bytes[*pos + 1] == 126 {
                return Err(GraphError::Graph6(*pos, "graphs beyond 2^18 vertices unsupported".into()));
            }
            let mut n = 0usize;
            for i in 1..=3 {
                n = (n << 6) | ((bytes[*pos + i] - 63) as usize);
            }
            *pos += 4;
            Ok(n)
        } else {
            *pos += 1;
            Ok((b0 - 63) as usize)
        }
    }

    /// Serializes to one graph6 line (no trailing newline).
    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut out = Vec::new();
        if n <= 62 {
            out.push(n as u8 + 63);
        } else {
            out.push(126);
            out.push(((n >> 12) & 63) as u8 + 63);
            out.push(((n >> 6) & 63) as u8 + 63);
            out.push((n & 63) as u8 + 63);
        }
        let nbits = n.saturating_sub(1) * n / 2;
        let mut cur = 0u8;
        let mut used = 0;
        for k in 0..nbits {
            let (i, j) = g6_pair(k);
            cur <<= 1;
            if self.has_edge(i, j) {
                cur |= 1;
            }
            used += 1;
            if used == 6 {
                out.push(cur + 63);
                cur = 0;
                used = 0;
            }
        }
        if used > 0 {
            cur <<= 6 - used;
            out.push(cur + 63);
        }
        String::from_utf8(out).unwrap()
    }
}

/// Bit index -> (i, j) over the upper triangle in graph6 order: bits are
/// grouped by column j = 1, 2, ..., each column listing i = 0..j-1.
fn g6_pair(k: usize) -> (usize, usize) {
    let mut j = 1usize;
    let mut base = 0usize;
    while base + j <= k {
        base += j;
        j += 1;
    }
    (k - base, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        e.extend((0..5).map(|i| (i, i + 5)));
        Graph::from_edges(10, &e).unwrap()
    }

    pub(crate) fn cube() -> Graph {
        Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap()
    }

    #[test]
    fn square_of_path_is_triangle() {
        let sq = path3().square();
        assert_eq!(sq.edge_count(), 3);
        assert!(sq.has_edge(0, 2));
    }

    #[test]
    fn square_of_single_vertex() {
        let g = Graph::empty(1);
        let sq = g.square();
        assert_eq!(sq.n(), 1);
        assert_eq!(sq.edge_count(), 0);
    }

    #[test]
    fn square_of_c6_adds_all_second_neighbors() {
        // oracle: brute-force BFS distances
        let g = cycle(6);
        let sq = g.square();
        assert_eq!(sq.edge_count(), 12);
        for v in 0..6 {
            assert_eq!(sq.degree(v), 4);
        }
        for u in 0..6 {
            let dist = g.distances_from(u);
            for v in 0..6 {
                if u != v {
                    assert_eq!(sq.has_edge(u, v), dist[v] <= 2);
                }
            }
        }
    }

    #[test]
    fn square_agrees_with_distance_oracle_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..9);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.3) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let sq = g.square();
            for u in 0..n {
                let dist = g.distances_from(u);
                for v in 0..n {
                    if u != v {
                        assert_eq!(sq.has_edge(u, v), (1..=2).contains(&dist[v]));
                    }
                }
            }
        }
    }

    #[test]
    fn five_cycle_detection() {
        assert!(cycle(5).has_five_cycle());
        assert!(!cube().has_five_cycle());
        assert!(petersen().has_five_cycle());
        assert!(!cycle(6).has_five_cycle());
        assert!(!cycle(4).has_five_cycle());
    }

    #[test]
    fn five_cycle_agrees_with_subset_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..150 {
            let n = rng.gen_range(5..9);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.35) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            // oracle: all 5-subsets, all cyclic orders
            let mut found = false;
            let idx: Vec<usize> = (0..n).collect();
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        for d in c + 1..n {
                            for e in d + 1..n {
                                let vs = [idx[a], idx[b], idx[c], idx[d], idx[e]];
                                let mut perm = vs;
                                // fix first element, permute rest
                                found |= permutations_close_cycle(&g, &mut perm);
                            }
                        }
                    }
                }
            }
            assert_eq!(g.has_five_cycle(), found);
        }
    }

    fn permutations_close_cycle(g: &Graph, vs: &mut [usize; 5]) -> bool {
        fn rec(g: &Graph, vs: &mut [usize; 5], k: usize) -> bool {
            if k == 5 {
                return (0..5).all(|i| g.has_edge(vs[i], vs[(i + 1) % 5]));
            }
            for i in k..5 {
                vs.swap(k, i);
                if rec(g, vs, k + 1) {
                    vs.swap(k, i);
                    return true;
                }
                vs.swap(k, i);
            }
            false
        }
        rec(g, vs, 1)
    }

    #[test]
    fn girth_values() {
        assert_eq!(cycle(5).girth(), Some(5));
        assert_eq!(cube().girth(), Some(4));
        assert_eq!(petersen().girth(), Some(5));
        assert_eq!(path3().girth(), None);
    }

    #[test]
    fn graph6_round_trip() {
        for g in [cycle(5), cube(), petersen(), Graph::empty(1), path3()] {
            let s = g.to_graph6();
            let h = Graph::from_graph6(&s).unwrap();
            assert_eq!(g.edges(), h.edges());
            assert_eq!(g.n(), h.n());
        }
    }

    #[test]
    fn graph6_known_values() {
        // standard encodings: K4 is "C~", C5 is "DqK" per the format spec
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.to_graph6(), "C~");
        let c5 = Graph::from_graph6("DqK").unwrap();
        assert_eq!(c5.n(), 5);
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.has_five_cycle());
    }

    #[test]
    fn labels_survive_square() {
        let g = Graph::from_labeled_edges(3, &[(1, 2), (2, 3)]);
        let sq = g.square();
        assert_eq!(sq.label(0), "v1");
        assert_eq!(sq.label(2), "v3");
    }
}
