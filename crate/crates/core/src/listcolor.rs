//! List-coloring search and the finite quantification machinery: a complete
//! backtracking solver, greedy coloring, systems of distinct representatives,
//! canonical enumeration of list assignments up to color renaming, and the
//! exhaustive/sampled choosability checker.
//!
//! Colors are small positive integers represented as bits of a u32, so every
//! palette used here must stay within 32 colors (the largest canonical
//! enumeration in the suite uses 27).

use crate::catalog::ListConstraint;
use crate::graph::Graph;
use rand::seq::index::sample;
use rand::SeedableRng;
use serde::Serialize;

/// Per-vertex color sets; colors are 1-based small integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ListAssignment(pub Vec<Vec<usize>>);

impl ListAssignment {
    pub fn from_masks(masks: &[u32]) -> Self {
        ListAssignment(
            masks
                .iter()
                .map(|&m| (0..32).filter(|b| m >> b & 1 == 1).map(|b| b + 1).collect())
                .collect(),
        )
    }

    pub fn to_masks(&self) -> Vec<u32> {
        self.0
            .iter()
            .map(|l| {
                let mut m = 0u32;
                for &c in l {
                    assert!((1..=32).contains(&c), "colors must lie in 1..=32");
                    m |= 1 << (c - 1);
                }
                m
            })
            .collect()
    }
}

/// Adjacency bitmasks of a graph on at most 32 vertices.
pub fn adjacency_masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 32, "mask solver limited to 32 vertices");
    (0..g.n())
        .map(|v| {
            let mut m = 0u32;
            for &u in g.neighbors(v) {
                m |= 1 << u;
            }
            m
        })
        .collect()
}

/// Complete backtracking search for a proper coloring from the lists.
/// Returns a coloring (1-based colors) or None when no coloring exists.
pub fn solve_list_coloring(g: &Graph, lists: &ListAssignment) -> Option<Vec<usize>> {
    let adj = adjacency_masks(g);
    let masks = lists.to_masks();
    solve_masks(&adj, &masks).map(|cols| cols.iter().map(|&c| c as usize + 1).collect())
}

/// Mask-level solver: forward checking with a most-constrained-vertex pick.
/// Returns 0-based color bits.
pub fn solve_masks(adj: &[u32], lists: &[u32]) -> Option<Vec<u8>> {
    let n = adj.len();
    let mut work = lists.to_vec();
    let mut colors = vec![0u8; n];
    let done = 0u32;
    fn rec(adj: &[u32], work: &mut [u32], colors: &mut [u8], done: u32) -> bool {
        let n = adj.len();
        if done.count_ones() as usize == n {
            return true;
        }
        // most constrained uncolored vertex
        let mut best = usize::MAX;
        let mut best_count = u32::MAX;
        for v in 0..n {
            if done >> v & 1 == 0 {
                let c = work[v].count_ones();
                if c == 0 {
                    return false;
                }
                if c < best_count {
                    best_count = c;
                    best = v;
                }
            }
        }
        let v = best;
        let mut avail = work[v];
        while avail != 0 {
            let bit = avail.trailing_zeros();
            avail &= avail - 1;
            let cmask = 1u32 << bit;
            // strike the color from uncolored neighbors, remembering changes
            let mut touched = 0u32;
            let mut dead = false;
            let mut nbrs = adj[v] & !done;
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                if work[u] & cmask != 0 {
                    work[u] &= !cmask;
                    touched |= 1 << u;
                    if work[u] == 0 {
                        dead = true;
                    }
                }
            }
            if !dead {
                colors[v] = bit as u8;
                if rec(adj, work, colors, done | (1 << v)) {
                    return true;
                }
            }
            let mut t = touched;
            while t != 0 {
                let u = t.trailing_zeros() as usize;
                t &= t - 1;
                work[u] |= cmask;
            }
        }
        false
    }
    if rec(adj, &mut work, &mut colors, done) {
        Some(colors)
    } else {
        None
    }
}

/// Greedy coloring along a fixed order: each vertex takes its least list
/// color unused by already-colored neighbors; stops at the first stuck
/// vertex.
pub fn greedy_color(g: &Graph, order: &[usize], lists: &ListAssignment) -> Option<Vec<usize>> {
    let n = g.n();
    assert_eq!(order.len(), n);
    let mut coloring = vec![0usize; n];
    let mut colored = vec![false; n];
    for &v in order {
        let mut choice = None;
        'color: for &c in &lists.0[v] {
            for &u in g.neighbors(v) {
                if colored[u] && coloring[u] == c {
                    continue 'color;
                }
            }
            choice = Some(c);
            break;
        }
        match choice {
            Some(c) => {
                coloring[v] = c;
                colored[v] = true;
            }
            None => return None,
        }
    }
    Some(coloring)
}

/// System of distinct representatives: one color per set, pairwise distinct.
/// `Err` carries a violating family S (set indices) with |N(S)| < |S|.
pub fn hall_sdr(sets: &[Vec<usize>]) -> Result<Vec<usize>, Vec<usize>> {
    let k = sets.len();
    // collect the ground colors
    let mut colors: Vec<usize> = sets.iter().flatten().copied().collect();
    colors.sort_unstable();
    colors.dedup();
    let color_idx = |c: usize| colors.binary_search(&c).unwrap();
    let mut matched_color: Vec<Option<usize>> = vec![None; colors.len()]; // color -> set
    for start in 0..k {
        // BFS/DFS augmenting path from set `start`
        let mut visited_sets = vec![false; k];
        let mut visited_cols = vec![false; colors.len()];
        if !augment(
            start,
            sets,
            &color_idx,
            &mut matched_color,
            &mut visited_sets,
            &mut visited_cols,
        ) {
            // Hall violator: sets visited in the failed alternating search
            let viol: Vec<usize> = (0..k).filter(|&i| visited_sets[i]).collect();
            return Err(viol);
        }
    }
    let mut rep = vec![0usize; k];
    for (ci, owner) in matched_color.iter().enumerate() {
        if let Some(s) = owner {
            rep[*s] = colors[ci];
        }
    }
    Ok(rep)
}

fn augment(
    s: usize,
    sets: &[Vec<usize>],
    color_idx: &dyn Fn(usize) -> usize,
    matched: &mut Vec<Option<usize>>,
    visited_sets: &mut [bool],
    visited_cols: &mut [bool],
) -> bool {
    visited_sets[s] = true;
    for &c in &sets[s] {
        let ci = color_idx(c);
        if visited_cols[ci] {
            continue;
        }
        visited_cols[ci] = true;
        match matched[ci] {
            None => {
                matched[ci] = Some(s);
                return true;
            }
            Some(owner) => {
                if !visited_sets[owner]
                    && augment(owner, sets, color_idx, matched, visited_sets, visited_cols)
                {
                    matched[ci] = Some(s);
                    return true;
                }
            }
        }
    }
    false
}

/// True iff the masks satisfy every constraint.
pub fn constraints_ok(masks: &[u32], constraints: &[ListConstraint]) -> bool {
    constraints.iter().all(|c| match c {
        ListConstraint::NotEqual(a, b) => masks[*a] != masks[*b],
        ListConstraint::UnionAtLeast(vs, m) => {
            let u = vs.iter().fold(0u32, |acc, &v| acc | masks[v]);
            (u.count_ones() as usize) >= *m
        }
    })
}

/// Visits exactly one representative per color-renaming class of list
/// assignments with the given sizes: scanning vertices in index order and
/// each list ascending, a color may exceed the running maximum by one.
/// Constraints filter the visited assignments. The callback returns false to
/// stop early.
pub fn enumerate_canonical_lists(
    sizes: &[usize],
    constraints: &[ListConstraint],
    mut visit: impl FnMut(&[u32]) -> bool,
) -> u64 {
    let n = sizes.len();
    let mut masks = vec![0u32; n];
    let mut count = 0u64;
    fn rec(
        sizes: &[usize],
        constraints: &[ListConstraint],
        masks: &mut [u32],
        v: usize,
        max_color: u32,
        visit: &mut impl FnMut(&[u32]) -> bool,
        count: &mut u64,
        stop: &mut bool,
    ) {
        if *stop {
            return;
        }
        let n = sizes.len();
        if v == n {
            if constraints_ok(masks, constraints) {
                *count += 1;
                if !visit(masks) {
                    *stop = true;
                }
            }
            return;
        }
        // build the v-th list: ascending colors, each <= running max + 1
        fn build(
            sizes: &[usize],
            constraints: &[ListConstraint],
            masks: &mut [u32],
            v: usize,
            prev_color: u32,
            max_color: u32,
            left: usize,
            visit: &mut impl FnMut(&[u32]) -> bool,
            count: &mut u64,
            stop: &mut bool,
        ) {
            if *stop {
                return;
            }
            if left == 0 {
                rec(sizes, constraints, masks, v + 1, max_color, visit, count, stop);
                return;
            }
            let hi = max_color + 1;
            for c in (prev_color + 1)..=hi {
                assert!(c <= 32, "canonical palette exceeded 32 colors");
                masks[v] |= 1 << (c - 1);
                build(
                    sizes,
                    constraints,
                    masks,
                    v,
                    c,
                    max_color.max(c),
                    left - 1,
                    visit,
                    count,
                    stop,
                );
                masks[v] &= !(1 << (c - 1));
                if *stop {
                    return;
                }
            }
        }
        build(
            sizes, constraints, masks, v, 0, max_color, sizes[v], visit, count, stop,
        );
    }
    let mut stop = false;
    rec(
        sizes,
        constraints,
        &mut masks,
        0,
        0,
        &mut visit,
        &mut count,
        &mut stop,
    );
    count
}

/// Exact number of color-renaming classes of assignments with the given
/// sizes: enumerates growth-rule representatives and deduplicates by the
/// least renamed image. Exponential in the palette; intended for the small
/// cross-check oracles only.
pub fn canonical_class_count(sizes: &[usize], constraints: &[ListConstraint]) -> u64 {
    use std::collections::HashSet;
    let mut classes: HashSet<Vec<u32>> = HashSet::new();
    enumerate_canonical_lists(sizes, constraints, |masks| {
        classes.insert(min_renamed_image(masks));
        true
    });
    classes.len() as u64
}

/// Least image of the mask vector over all bijective recolorings of the used
/// colors.
fn min_renamed_image(masks: &[u32]) -> Vec<u32> {
    let used: Vec<u32> = {
        let all = masks.iter().fold(0u32, |a, &m| a | m);
        (0..32).filter(|b| all >> b & 1 == 1).collect()
    };
    let k = used.len();
    let mut perm: Vec<u32> = (0..k as u32).collect();
    let mut best: Option<Vec<u32>> = None;
    fn heap(
        perm: &mut Vec<u32>,
        k: usize,
        used: &[u32],
        masks: &[u32],
        best: &mut Option<Vec<u32>>,
    ) {
        if k == 1 {
            let image: Vec<u32> = masks
                .iter()
                .map(|&m| {
                    let mut out = 0u32;
                    for (i, &b) in used.iter().enumerate() {
                        if m >> b & 1 == 1 {
                            out |= 1 << perm[i];
                        }
                    }
                    out
                })
                .collect();
            if best.as_ref().map_or(true, |b| image < *b) {
                *best = Some(image);
            }
            return;
        }
        for i in 0..k {
            heap(perm, k - 1, used, masks, best);
            if k % 2 == 0 {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    if k == 0 {
        return masks.to_vec();
    }
    heap(&mut perm, k, &used, masks, &mut best);
    best.unwrap()
}

/// Counts growth-rule representatives without visiting them (used by the
/// exhaustive-vs-sampled threshold). Ignores constraints (over-approximation).
pub fn canonical_count(sizes: &[usize]) -> u128 {
    use std::collections::HashMap;
    // DP over running max; per-vertex transition computed by recursion
    fn vertex_ways(m: u32, s: usize, memo: &mut HashMap<(u32, usize), Vec<(u32, u128)>>) -> Vec<(u32, u128)> {
        if let Some(v) = memo.get(&(m, s)) {
            return v.clone();
        }
        let mut acc: HashMap<u32, u128> = HashMap::new();
        fn rec(prev: u32, max: u32, left: usize, acc: &mut HashMap<u32, u128>) {
            if left == 0 {
                *acc.entry(max).or_insert(0) += 1;
                return;
            }
            for c in (prev + 1)..=(max + 1) {
                rec(c, max.max(c), left - 1, acc);
            }
        }
        rec(0, m, s, &mut acc);
        let mut v: Vec<(u32, u128)> = acc.into_iter().collect();
        v.sort_unstable();
        memo.insert((m, s), v.clone());
        v
    }
    let mut memo = HashMap::new();
    let mut states: HashMap<u32, u128> = HashMap::from([(0u32, 1u128)]);
    for &s in sizes {
        let mut next: HashMap<u32, u128> = HashMap::new();
        for (&m, &w) in &states {
            for (m2, w2) in vertex_ways(m, s, &mut memo) {
                *next.entry(m2).or_insert(0) += w * w2;
            }
        }
        states = next;
    }
    states.values().sum()
}

#[derive(Debug, Clone, Serialize)]
pub enum Verdict {
    Holds {
        assignments_checked: u64,
    },
    Counterexample {
        witness: ListAssignment,
    },
    SampledPass {
        trials: u64,
        seed: u64,
    },
}

impl Verdict {
    pub fn ok(&self) -> bool {
        !matches!(self, Verdict::Counterexample { .. })
    }
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::Holds { .. } => "holds",
            Verdict::Counterexample { .. } => "counterexample",
            Verdict::SampledPass { .. } => "sampled-pass",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum CheckMode {
    Exhaustive,
    Sampled { trials: u64, seed: u64 },
}

/// Checks colorability of `square` (already the graph to color) from every
/// canonical list assignment (exhaustive) or from sampled assignments.
pub fn check_choosability(
    square: &Graph,
    sizes: &[usize],
    constraints: &[ListConstraint],
    mode: CheckMode,
) -> Verdict {
    let adj = adjacency_masks(square);
    match mode {
        CheckMode::Exhaustive => {
            let mut witness: Option<ListAssignment> = None;
            let checked = enumerate_canonical_lists(sizes, constraints, |masks| {
                if solve_masks(&adj, masks).is_none() {
                    witness = Some(ListAssignment::from_masks(masks));
                    false
                } else {
                    true
                }
            });
            match witness {
                Some(w) => Verdict::Counterexample { witness: w },
                None => Verdict::Holds {
                    assignments_checked: checked,
                },
            }
        }
        CheckMode::Sampled { trials, seed } => {
            let palette = sizes.iter().sum::<usize>().min(14);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut masks = vec![0u32; sizes.len()];
            for _ in 0..trials {
                loop {
                    for (v, &s) in sizes.iter().enumerate() {
                        let mut m = 0u32;
                        for i in sample(&mut rng, palette, s) {
                            m |= 1 << i;
                        }
                        masks[v] = m;
                    }
                    if constraints_ok(&masks, constraints) {
                        break;
                    }
                }
                if solve_masks(&adj, &masks).is_none() {
                    return Verdict::Counterexample {
                        witness: ListAssignment::from_masks(&masks),
                    };
                }
            }
            Verdict::SampledPass { trials, seed }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists(ls: &[&[usize]]) -> ListAssignment {
        ListAssignment(ls.iter().map(|l| l.to_vec()).collect())
    }

    #[test]
    fn k2_same_singleton_unsat() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(solve_list_coloring(&g, &lists(&[&[1], &[1]])).is_none());
    }

    #[test]
    fn k3_two_colors_unsat() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(solve_list_coloring(&g, &lists(&[&[1, 2], &[1, 2], &[1, 2]])).is_none());
    }

    #[test]
    fn j1_square_sample_assignment_colorable() {
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let sq = c6.square();
        let la = lists(&[&[1, 2, 3], &[1, 2, 3], &[1, 2], &[1, 3], &[1, 2, 3], &[1, 2, 3]]);
        let col = solve_list_coloring(&sq, &la).expect("colorable");
        for (v, &c) in col.iter().enumerate() {
            assert!(la.0[v].contains(&c));
            for &u in sq.neighbors(v) {
                assert_ne!(col[u], c);
            }
        }
    }

    #[test]
    fn greedy_path_example() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let col = greedy_color(&g, &[0, 1, 2], &lists(&[&[1], &[1, 2], &[1, 2]])).unwrap();
        assert_eq!(col, vec![1, 2, 1]);
    }

    #[test]
    fn greedy_stuck_on_k3() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(greedy_color(&g, &[0, 1, 2], &lists(&[&[1, 2], &[1, 2], &[1, 2]])).is_none());
        let col = greedy_color(&g, &[0, 1, 2], &lists(&[&[1], &[2], &[3]])).unwrap();
        assert_eq!(col, vec![1, 2, 3]);
    }

    #[test]
    fn greedy_success_is_proper_and_implies_solver_success() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(19);
        for _ in 0..200 {
            let n = rng.gen_range(2..7);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let la = ListAssignment(
                (0..n)
                    .map(|_| {
                        let mut l: Vec<usize> =
                            (1..=4).filter(|_| rng.gen_bool(0.6)).collect();
                        if l.is_empty() {
                            l.push(rng.gen_range(1..5));
                        }
                        l
                    })
                    .collect(),
            );
            let order: Vec<usize> = (0..n).collect();
            if let Some(col) = greedy_color(&g, &order, &la) {
                for (v, &c) in col.iter().enumerate() {
                    assert!(la.0[v].contains(&c));
                    for &u in g.neighbors(v) {
                        assert_ne!(col[u], c);
                    }
                }
                assert!(solve_list_coloring(&g, &la).is_some());
            }
        }
    }

    #[test]
    fn solver_agrees_with_exhaustive_assignment_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..150 {
            let n = rng.gen_range(1..8);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.45) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let la = ListAssignment(
                (0..n)
                    .map(|_| {
                        let k = rng.gen_range(1..4);
                        let mut l: Vec<usize> = sample(&mut rng, 4, k)
                            .iter()
                            .map(|i| i + 1)
                            .collect();
                        l.sort_unstable();
                        l
                    })
                    .collect(),
            );
            let got = solve_list_coloring(&g, &la).is_some();
            // oracle: every combination of list choices
            let mut found = false;
            let mut pick = vec![0usize; n];
            fn rec(
                g: &Graph,
                la: &ListAssignment,
                pick: &mut [usize],
                v: usize,
                found: &mut bool,
            ) {
                if *found {
                    return;
                }
                if v == g.n() {
                    *found = true;
                    return;
                }
                'c: for &c in &la.0[v] {
                    for &u in g.neighbors(v) {
                        if u < v && pick[u] == c {
                            continue 'c;
                        }
                    }
                    pick[v] = c;
                    rec(g, la, pick, v + 1, found);
                }
            }
            rec(&g, &la, &mut pick, 0, &mut found);
            assert_eq!(got, found);
        }
    }

    #[test]
    fn hall_examples() {
        assert_eq!(
            hall_sdr(&[vec![1], vec![2], vec![3]]).unwrap(),
            vec![1, 2, 3]
        );
        let err = hall_sdr(&[vec![1, 2], vec![1, 2], vec![1, 2]]).unwrap_err();
        assert_eq!(err, vec![0, 1, 2]);
    }

    #[test]
    fn hall_disjoint_opposite_pairs() {
        // six lists with L(j) disjoint from L(j+3): an SDR always exists
        let sets = vec![
            vec![1, 2, 3],
            vec![4, 5, 6],
            vec![1, 4, 7],
            vec![5, 6, 7],
            vec![1, 2, 3],
            vec![2, 3, 5],
        ];
        let rep = hall_sdr(&sets).unwrap();
        let mut sorted = rep.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 6);
        for (i, r) in rep.iter().enumerate() {
            assert!(sets[i].contains(r));
        }
    }

    #[test]
    fn hall_agrees_with_bruteforce_matching() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..400 {
            let k = rng.gen_range(1..7);
            let palette = rng.gen_range(1..9);
            let sets: Vec<Vec<usize>> = (0..k)
                .map(|_| {
                    let mut s: Vec<usize> =
                        (1..=palette).filter(|_| rng.gen_bool(0.45)).collect();
                    if s.is_empty() && rng.gen_bool(0.5) {
                        s.push(rng.gen_range(1..=palette));
                    }
                    s
                })
                .collect();
            let got = hall_sdr(&sets);
            let want = brute_sdr(&sets);
            match (got, want) {
                (Ok(rep), true) => {
                    let mut sorted = rep.clone();
                    sorted.sort_unstable();
                    sorted.dedup();
                    assert_eq!(sorted.len(), k);
                    for (i, r) in rep.iter().enumerate() {
                        assert!(sets[i].contains(r));
                    }
                }
                (Err(viol), false) => {
                    // the violator really violates Hall
                    let mut union: Vec<usize> = viol
                        .iter()
                        .flat_map(|&i| sets[i].iter().copied())
                        .collect();
                    union.sort_unstable();
                    union.dedup();
                    assert!(union.len() < viol.len());
                }
                (g, w) => panic!("disagreement: {:?} vs oracle {}", g, w),
            }
        }
    }

    fn brute_sdr(sets: &[Vec<usize>]) -> bool {
        fn rec(sets: &[Vec<usize>], i: usize, used: &mut Vec<usize>) -> bool {
            if i == sets.len() {
                return true;
            }
            for &c in &sets[i] {
                if !used.contains(&c) {
                    used.push(c);
                    if rec(sets, i + 1, used) {
                        return true;
                    }
                    used.pop();
                }
            }
            false
        }
        rec(sets, 0, &mut Vec::new())
    }

    #[test]
    fn canonical_enumeration_base_cases() {
        let mut seen = Vec::new();
        enumerate_canonical_lists(&[1, 1], &[], |m| {
            seen.push(m.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![1, 1], vec![1, 2]]);

        let mut seen = Vec::new();
        enumerate_canonical_lists(&[2], &[], |m| {
            seen.push(m.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0b11]]);

        // Bell number B3 = 5
        assert_eq!(enumerate_canonical_lists(&[1, 1, 1], &[], |_| true), 5);
        assert_eq!(canonical_count(&[1, 1, 1]), 5);
    }

    #[test]
    fn class_counts_match_quotient_oracle() {
        // brute force: enumerate all assignments over palette {1..sum},
        // canonicalize by the least renamed image, count classes
        use std::collections::HashSet;
        for sizes in [
            vec![1, 2],
            vec![2, 1],
            vec![2, 2],
            vec![1, 1, 2],
            vec![2, 1, 1],
            vec![3, 2],
            vec![2, 2, 2],
        ] {
            let total: usize = sizes.iter().sum();
            let mut reps: HashSet<Vec<u32>> = HashSet::new();
            let mut masks: Vec<u32> = vec![0; sizes.len()];
            brute_classes(&sizes, total, 0, &mut masks, &mut reps);
            assert_eq!(
                canonical_class_count(&sizes, &[]) as usize,
                reps.len(),
                "sizes {:?}",
                sizes
            );
        }
    }

    fn brute_classes(
        sizes: &[usize],
        total: usize,
        v: usize,
        masks: &mut Vec<u32>,
        reps: &mut std::collections::HashSet<Vec<u32>>,
    ) {
        if v == sizes.len() {
            reps.insert(super::min_renamed_image(masks));
            return;
        }
        fn choose(
            from: usize,
            total: usize,
            left: usize,
            sizes: &[usize],
            v: usize,
            masks: &mut Vec<u32>,
            reps: &mut std::collections::HashSet<Vec<u32>>,
        ) {
            if left == 0 {
                brute_classes(sizes, total, v + 1, masks, reps);
                return;
            }
            for c in from..=total {
                masks[v] |= 1 << (c - 1);
                choose(c + 1, total, left - 1, sizes, v, masks, reps);
                masks[v] &= !(1 << (c - 1));
            }
        }
        choose(1, total, sizes[v], sizes, v, masks, reps);
    }

    #[test]
    fn growth_rule_enumeration_covers_every_class() {
        // every assignment over the bounded palette is equivalent to some
        // visited representative (completeness of the finitization)
        use std::collections::HashSet;
        let sizes = [2usize, 1, 2];
        let total: usize = sizes.iter().sum();
        let mut visited: HashSet<Vec<u32>> = HashSet::new();
        enumerate_canonical_lists(&sizes, &[], |m| {
            visited.insert(super::min_renamed_image(m));
            true
        });
        let mut all: HashSet<Vec<u32>> = HashSet::new();
        let mut masks = vec![0u32; sizes.len()];
        brute_classes(&sizes, total, 0, &mut masks, &mut all);
        assert_eq!(visited, all);
    }

    #[test]
    fn choosability_small_cases() {
        // single vertex with one color: holds
        let g = Graph::empty(1);
        let v = check_choosability(&g, &[1], &[], CheckMode::Exhaustive);
        assert!(matches!(v, Verdict::Holds { .. }));
        // K4 from 3-lists: all-equal lists are a counterexample
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let v = check_choosability(&k4, &[3, 3, 3, 3], &[], CheckMode::Exhaustive);
        match v {
            Verdict::Counterexample { witness } => {
                assert!(solve_list_coloring(&k4, &witness).is_none());
            }
            other => panic!("expected counterexample, got {:?}", other),
        }
    }
}
