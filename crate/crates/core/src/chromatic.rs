//! Exact chromatic number at desk scale: k-colorability by backtracking with
//! saturation-degree vertex selection, wrapped in a binary search between a
//! greedy clique lower bound and a greedy coloring upper bound.

use crate::graph::Graph;

/// Decides k-colorability. Colors are capped at one above the maximum used
/// so far to break color symmetry.
pub fn is_k_colorable(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut colors = vec![usize::MAX; n];
    fn pick(g: &Graph, colors: &[usize], k: usize) -> Option<usize> {
        // highest saturation, ties by degree
        let mut best = None;
        let mut best_key = (0usize, 0usize);
        for v in 0..g.n() {
            if colors[v] != usize::MAX {
                continue;
            }
            let mut seen = 0u64;
            for &u in g.neighbors(v) {
                if colors[u] != usize::MAX {
                    seen |= 1 << colors[u];
                }
            }
            let key = (seen.count_ones() as usize, g.degree(v));
            if best.is_none() || key > best_key {
                best = Some(v);
                best_key = key;
            }
        }
        let _ = k;
        best
    }
    fn rec(g: &Graph, colors: &mut [usize], k: usize, max_used: usize) -> bool {
        let v = match pick(g, colors, k) {
            Some(v) => v,
            None => return true,
        };
        let mut banned = 0u64;
        for &u in g.neighbors(v) {
            if colors[u] != usize::MAX {
                banned |= 1 << colors[u];
            }
        }
        let cap = k.min(max_used + 2);
        for c in 0..cap {
            if banned >> c & 1 == 0 {
                colors[v] = c;
                if rec(g, colors, k, max_used.max(c)) {
                    return true;
                }
                colors[v] = usize::MAX;
            }
        }
        false
    }
    rec(g, &mut colors, k, 0)
}

/// Greedy clique (lower bound for the chromatic number).
fn greedy_clique(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    for s in 0..n {
        let mut clique = vec![s];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        for v in order {
            if v != s && clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// Greedy coloring size (upper bound).
fn greedy_bound(g: &Graph) -> usize {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colors = vec![usize::MAX; n];
    let mut used = 0;
    for v in order {
        let mut banned = 0u64;
        for &u in g.neighbors(v) {
            if colors[u] != usize::MAX {
                banned |= 1 << colors[u];
            }
        }
        let c = (0..).find(|&c| banned >> c & 1 == 0).unwrap();
        colors[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Exact chromatic number by binary search over the k-colorability decision.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    let mut lo = greedy_clique(g).max(2);
    let mut hi = greedy_bound(g);
    // invariant: colorable with hi, not colorable with lo-1
    while lo < hi {
        let mid = (lo + hi) / 2;
        if is_k_colorable(g, mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(chromatic_number(&k4), 4);
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(chromatic_number(&c5), 3);
        // the square of a 5-cycle is a 5-clique
        assert_eq!(chromatic_number(&c5.square()), 5);
    }

    #[test]
    fn cube_square_needs_four() {
        let cube = crate::scan::corpus::cube();
        // oracle: direct k-colorability checks
        let sq = cube.square();
        assert!(!is_k_colorable(&sq, 3));
        assert!(is_k_colorable(&sq, 4));
        assert_eq!(chromatic_number(&sq), 4);
    }

    #[test]
    fn agrees_with_bruteforce_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..80 {
            let n = rng.gen_range(1..9);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let fast = chromatic_number(&g);
            let slow = brute_chromatic(&g);
            assert_eq!(fast, slow);
        }
    }

    fn brute_chromatic(g: &Graph) -> usize {
        if g.n() == 0 {
            return 0;
        }
        'k: for k in 1..=g.n() {
            let mut assign = vec![0usize; g.n()];
            loop {
                if g.edges().iter().all(|&(u, v)| assign[u] != assign[v]) {
                    return k;
                }
                // increment base-k counter
                let mut i = 0;
                loop {
                    if i == g.n() {
                        continue 'k;
                    }
                    assign[i] += 1;
                    if assign[i] == k {
                        assign[i] = 0;
                        i += 1;
                    } else {
                        break;
                    }
                }
            }
        }
        unreachable!()
    }
}
