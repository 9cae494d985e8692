//! Occurrence detection: injective edge-preserving maps of a configuration
//! pattern into a host, with face-boundedness of the configuration's defining
//! cycles when the host is embedded, deduplicated up to pattern automorphism.

use crate::catalog::Configuration;
use crate::embed::PlaneGraph;
use crate::graph::Graph;
use std::collections::HashSet;

/// One occurrence: an injective map pattern vertex -> host vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    pub mapping: Vec<usize>,
}

/// All automorphisms of a small graph by backtracking on degree-compatible
/// assignments.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut result = Vec::new();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        g: &Graph,
        map: &mut [usize],
        used: &mut [bool],
        v: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = g.n();
        if v == n {
            out.push(map.to_vec());
            return;
        }
        'cand: for c in 0..n {
            if used[c] || g.degree(c) != g.degree(v) {
                continue;
            }
            for u in 0..v {
                let adj = g.has_edge(v, u);
                if adj != g.has_edge(c, map[u]) {
                    continue 'cand;
                }
            }
            map[v] = c;
            used[c] = true;
            rec(g, map, used, v + 1, out);
            used[c] = false;
            map[v] = usize::MAX;
        }
    }
    rec(g, &mut map, &mut used, 0, &mut result);
    result
}

/// Canonical key of a mapping under the pattern's automorphism group:
/// the lexicographically least composition `mapping . alpha`.
fn canonical_key(mapping: &[usize], autos: &[Vec<usize>]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for alpha in autos {
        let composed: Vec<usize> = alpha.iter().map(|&a| mapping[a]).collect();
        if best.as_ref().map_or(true, |b| composed < *b) {
            best = Some(composed);
        }
    }
    best.unwrap()
}

/// Complete list of occurrences of `cfg` in the embedded host, deduplicated
/// up to pattern automorphism. Pattern edges must map to host edges; defining
/// cycles must bound host faces (skipped for pure-subgraph configurations,
/// whose `face_cycles` list is empty).
pub fn find_occurrences(host: &PlaneGraph, cfg: &Configuration) -> Vec<Occurrence> {
    find_occurrences_impl(host.graph(), Some(host), cfg)
}

/// Occurrence search on an abstract host (face conditions skipped); used by
/// the naive-oracle cross checks and by scans of unembedded graphs.
pub fn find_occurrences_abstract(host: &Graph, cfg: &Configuration) -> Vec<Occurrence> {
    find_occurrences_impl(host, None, cfg)
}

fn find_occurrences_impl(
    host: &Graph,
    embedding: Option<&PlaneGraph>,
    cfg: &Configuration,
) -> Vec<Occurrence> {
    let p = &cfg.pattern;
    let pn = p.n();
    let hn = host.n();
    if pn > hn {
        return Vec::new();
    }
    let face_sets: Option<Vec<HashSet<(usize, usize)>>> =
        embedding.map(|pg| pg.face_edge_sets());
    let autos = automorphisms(p);

    // order pattern vertices so each (after the first) touches an earlier one
    let order = connected_order(p);
    let mut pos_in_order = vec![0usize; pn];
    for (i, &v) in order.iter().enumerate() {
        pos_in_order[v] = i;
    }

    let mut mapping = vec![usize::MAX; pn];
    let mut used = vec![false; hn];
    let mut seen_keys: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();

    fn rec(
        host: &Graph,
        p: &Graph,
        order: &[usize],
        depth: usize,
        mapping: &mut [usize],
        used: &mut [bool],
        cfg: &Configuration,
        face_sets: &Option<Vec<HashSet<(usize, usize)>>>,
        autos: &[Vec<usize>],
        seen: &mut HashSet<Vec<usize>>,
        out: &mut Vec<Occurrence>,
    ) {
        if depth == order.len() {
            if let Some(fs) = face_sets {
                for cyc in &cfg.face_cycles {
                    let k = cyc.len();
                    let edge_set: HashSet<(usize, usize)> = (0..k)
                        .map(|i| {
                            let (a, b) = (mapping[cyc[i]], mapping[cyc[(i + 1) % k]]);
                            (a.min(b), a.max(b))
                        })
                        .collect();
                    if !fs.iter().any(|f| *f == edge_set) {
                        return;
                    }
                }
            }
            let key = canonical_key(mapping, autos);
            if seen.insert(key) {
                out.push(Occurrence {
                    mapping: mapping.to_vec(),
                });
            }
            return;
        }
        let v = order[depth];
        // candidates: host neighbors of an already-mapped pattern neighbor,
        // or all hosts for the first vertex
        let candidates: Vec<usize> = match p
            .neighbors(v)
            .iter()
            .find(|&&u| mapping[u] != usize::MAX)
        {
            Some(&u) => host.neighbors(mapping[u]).to_vec(),
            None => (0..host.n()).collect(),
        };
        'cand: for c in candidates {
            if used[c] || host.degree(c) < p.degree(v) {
                continue;
            }
            for &u in p.neighbors(v) {
                if mapping[u] != usize::MAX && !host.has_edge(c, mapping[u]) {
                    continue 'cand;
                }
            }
            mapping[v] = c;
            used[c] = true;
            rec(
                host, p, order, depth + 1, mapping, used, cfg, face_sets, autos, seen, out,
            );
            used[c] = false;
            mapping[v] = usize::MAX;
        }
    }
    rec(
        host,
        p,
        &order,
        0,
        &mut mapping,
        &mut used,
        cfg,
        &face_sets,
        &autos,
        &mut seen_keys,
        &mut out,
    );
    out.sort_by(|a, b| a.mapping.cmp(&b.mapping));
    out
}

/// BFS order so that each vertex after the first has an already-placed
/// pattern neighbor (patterns are connected).
fn connected_order(p: &Graph) -> Vec<usize> {
    let n = p.n();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in p.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_config;
    use crate::embed::planar_embedding;

    fn cube() -> Graph {
        Graph::from_edges(
            8,
            &[
                (0, 1), (1, 2), (2, 3), (3, 0),
                (4, 5), (5, 6), (6, 7), (7, 4),
                (0, 4), (1, 5), (2, 6), (3, 7),
            ],
        )
        .unwrap()
    }

    #[test]
    fn h1_found_in_cube() {
        let pg = planar_embedding(&cube()).unwrap();
        let h1 = build_config("H1").unwrap();
        let occ = find_occurrences(&pg, &h1);
        assert!(!occ.is_empty(), "adjacent 4-faces of the cube carry H1");
    }

    #[test]
    fn h1_absent_in_hexagon() {
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let pg = planar_embedding(&c6).unwrap();
        let h1 = build_config("H1").unwrap();
        assert!(find_occurrences(&pg, &h1).is_empty());
    }

    #[test]
    fn f1_present_in_k4() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let pg = planar_embedding(&k4).unwrap();
        let f1 = build_config("F1").unwrap();
        assert!(!find_occurrences(&pg, &f1).is_empty());
    }

    #[test]
    fn self_detection_for_every_configuration() {
        for name in crate::catalog::CONFIG_NAMES
            .iter()
            .chain(crate::catalog::EXTRA_NAMES.iter())
        {
            let c = build_config(name).unwrap();
            // abstract self-detection: the pattern occurs in itself
            let occ = find_occurrences_abstract(&c.pattern, &c);
            assert!(!occ.is_empty(), "{name} must detect itself");
            // embedded self-detection: the defining cycles bound faces of the
            // configuration's intended embedding
            if let Some(pg) = c.canonical_embedding() {
                let occ = find_occurrences(&pg, &c);
                assert!(!occ.is_empty(), "{name} must detect itself when embedded");
            } else {
                // pure-subgraph configurations carry no face data; an
                // arbitrary planar embedding must still host them
                let pg = planar_embedding(&c.pattern).expect("patterns are planar");
                let occ = find_occurrences(&pg, &c);
                assert!(!occ.is_empty(), "{name} must detect itself when embedded");
            }
        }
    }

    #[test]
    fn dedup_no_two_occurrences_differ_by_automorphism() {
        let pg = planar_embedding(&cube()).unwrap();
        let h1 = build_config("H1").unwrap();
        let occ = find_occurrences(&pg, &h1);
        let autos = automorphisms(&h1.pattern);
        for i in 0..occ.len() {
            for j in i + 1..occ.len() {
                for alpha in &autos {
                    let composed: Vec<usize> =
                        alpha.iter().map(|&a| occ[i].mapping[a]).collect();
                    assert_ne!(composed, occ[j].mapping);
                }
            }
        }
    }

    #[test]
    fn agrees_with_naive_all_maps_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        let t = build_config("T").unwrap();
        let f1 = build_config("F1").unwrap();
        for _ in 0..30 {
            let n = rng.gen_range(4..11);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            for cfg in [&t, &f1] {
                let fast = find_occurrences_abstract(&g, cfg);
                let naive = naive_occurrences(&g, cfg);
                assert_eq!(fast.len(), naive);
            }
        }
    }

    /// Counts automorphism-orbits of injective edge-preserving maps by
    /// enumerating every injective map.
    fn naive_occurrences(host: &Graph, cfg: &Configuration) -> usize {
        let p = &cfg.pattern;
        let pn = p.n();
        let hn = host.n();
        if pn > hn {
            return 0;
        }
        let autos = automorphisms(p);
        let mut keys = std::collections::HashSet::new();
        let mut map = vec![usize::MAX; pn];
        let mut used = vec![false; hn];
        fn rec(
            host: &Graph,
            p: &Graph,
            v: usize,
            map: &mut [usize],
            used: &mut [bool],
            autos: &[Vec<usize>],
            keys: &mut std::collections::HashSet<Vec<usize>>,
        ) {
            if v == p.n() {
                for u in 0..p.n() {
                    for &w in p.neighbors(u) {
                        if !host.has_edge(map[u], map[w]) {
                            return;
                        }
                    }
                }
                keys.insert(super::canonical_key(map, autos));
                return;
            }
            for c in 0..host.n() {
                if !used[c] {
                    map[v] = c;
                    used[c] = true;
                    rec(host, p, v + 1, map, used, autos, keys);
                    used[c] = false;
                }
            }
        }
        rec(host, p, 0, &mut map, &mut used, &autos, &mut keys);
        keys.len()
    }
}
