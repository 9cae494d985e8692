//! Machine-readable encodings of the named configurations (F1-F4, H1-H6,
//! J1-J8, T, W1, W2): pattern graphs with 1-based vertex labels, per-vertex
//! list-size annotations, side constraints, and the cycles that must bound
//! faces when a configuration is matched inside an embedded host.
//!
//! Sizes are stored as data and cross-checked by [`audit_config`], which
//! recomputes each annotation as 7 minus the number of colored neighbors the
//! vertex can have outside the configuration in a cubic host.

use crate::graph::Graph;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown configuration {0}")]
    UnknownConfiguration(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerificationMode {
    /// verified through nonzero-coefficient certificates
    CnCertificate,
    /// verified over the complete canonical list enumeration
    Exhaustive,
    /// verified by randomized list sampling (evidence, not proof)
    Sampled,
    /// only occurrence detection is implemented
    DetectionOnly,
}

impl VerificationMode {
    pub fn as_str(self) -> &'static str {
        match self {
            VerificationMode::CnCertificate => "cn-certificate",
            VerificationMode::Exhaustive => "exhaustive",
            VerificationMode::Sampled => "sampled",
            VerificationMode::DetectionOnly => "detection-only",
        }
    }
}

/// Side conditions on list assignments. All are invariant under color
/// renaming, which keeps canonical enumeration sound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ListConstraint {
    /// the two lists differ as sets (0-based vertices)
    NotEqual(usize, usize),
    /// the union of the listed vertices' lists has at least `min` colors
    UnionAtLeast(Vec<usize>, usize),
}

#[derive(Debug, Clone)]
pub struct Configuration {
    pub name: String,
    pub pattern: Graph,
    pub list_sizes: Vec<usize>,
    pub constraints: Vec<ListConstraint>,
    pub mode: VerificationMode,
    /// cycles (0-based) that must bound faces of the host; empty for
    /// pure-subgraph configurations
    pub face_cycles: Vec<Vec<usize>>,
    /// true when the sizes are derived from 7-lists in a cubic host (and the
    /// audit applies); false for free-standing lemma hypotheses
    pub host_derived_sizes: bool,
}

fn cfg(
    name: &str,
    n: usize,
    edges: &[(usize, usize)],
    sizes: &[usize],
    constraints: Vec<ListConstraint>,
    mode: VerificationMode,
    face_cycles: &[&[usize]],
    host_derived_sizes: bool,
) -> Configuration {
    let pattern = Graph::from_labeled_edges(n, edges);
    Configuration {
        name: name.to_string(),
        pattern,
        list_sizes: sizes.to_vec(),
        constraints,
        mode,
        face_cycles: face_cycles
            .iter()
            .map(|c| c.iter().map(|&v| v - 1).collect())
            .collect(),
        host_derived_sizes,
    }
}

/// The catalogued identifiers, in export order.
pub const CONFIG_NAMES: [&str; 18] = [
    "F1", "F2", "F3", "F4", "H1", "H2", "H3", "H4", "H5", "H6", "J1", "J2", "J3", "J4", "J5",
    "J6", "J7", "J8",
];
// T, W1, W2 are addressable too; F4 detection is realized by W1/W2.
pub const EXTRA_NAMES: [&str; 3] = ["T", "W1", "W2"];

pub fn build_config(name: &str) -> Result<Configuration, CatalogError> {
    use VerificationMode::*;
    let c = match name {
        // two triangles sharing an edge (the 4-cycle case of a 3-cycle next
        // to a 4-minus-cycle contains a 5-cycle and is excluded up front)
        "F1" => cfg(
            "F1",
            4,
            &[(1, 2), (2, 3), (1, 3), (1, 4), (3, 4)],
            &[2, 4, 2, 4],
            vec![],
            DetectionOnly,
            &[&[1, 2, 3], &[1, 4, 3]],
            false,
        ),
        // triangle and 4-cycle joined by one edge (distance 1)
        "F2" => cfg(
            "F2",
            7,
            &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 4)],
            &[3, 3, 5, 5, 3, 2, 3],
            vec![],
            Sampled,
            &[&[1, 2, 3], &[4, 5, 6, 7]],
            true,
        ),
        // triangle sharing an edge with a 6-cycle
        "F3" => cfg(
            "F3",
            7,
            &[(1, 2), (1, 3), (2, 3), (1, 4), (4, 5), (5, 6), (6, 7), (7, 2)],
            &[3, 3, 2, 3, 3, 3, 3],
            vec![],
            DetectionOnly,
            &[&[1, 3, 2], &[1, 4, 5, 6, 7, 2]],
            false,
        ),
        // 8-minus face adjacent to a 3-cycle and a 4-cycle at distance two;
        // realized by W1 (7-face) and W2 (8-face)
        "F4" => {
            let mut c = build_config("W1")?;
            c.name = "F4".to_string();
            c.mode = DetectionOnly;
            c
        }
        "H1" => cfg(
            "H1",
            6,
            &[(1, 2), (2, 3), (4, 5), (5, 6), (1, 4), (2, 5), (3, 6)],
            &[3, 5, 3, 3, 5, 3],
            vec![],
            Sampled,
            &[&[1, 2, 5, 4], &[2, 3, 6, 5]],
            true,
        ),
        "H2" => cfg(
            "H2",
            10,
            &[
                (2, 3), (3, 9), (9, 8), (8, 7), (7, 6), (6, 2),
                (1, 2), (1, 5), (5, 6),
                (3, 4), (4, 10), (10, 9),
            ],
            &[3, 6, 6, 3, 3, 5, 3, 3, 5, 3],
            vec![],
            Sampled,
            &[&[2, 3, 9, 8, 7, 6], &[1, 2, 6, 5], &[3, 4, 10, 9]],
            true,
        ),
        "H3" => cfg(
            "H3",
            11,
            &[
                (1, 2), (1, 5), (2, 3), (3, 4), (4, 6), (4, 7), (5, 6), (5, 8),
                (6, 9), (7, 11), (8, 9), (9, 10), (10, 11),
            ],
            &[3, 2, 3, 5, 5, 7, 3, 4, 5, 3, 2],
            vec![],
            CnCertificate,
            &[&[9, 6, 4, 7, 11, 10], &[6, 5, 8, 9], &[4, 3, 2, 1, 5, 6]],
            true,
        ),
        "H4" => cfg(
            "H4",
            17,
            &[
                (7, 8), (8, 4), (4, 3), (3, 2), (2, 6), (6, 7),
                (8, 9), (9, 12), (12, 11), (11, 10), (10, 7),
                (2, 1), (1, 5), (5, 6),
                (11, 14), (14, 13), (13, 10),
                (5, 15), (15, 16), (16, 17), (17, 13),
            ],
            &[4, 5, 3, 3, 5, 7, 7, 5, 3, 7, 5, 3, 5, 4, 3, 2, 3],
            vec![],
            Sampled,
            &[
                &[1, 2, 6, 5],
                &[2, 3, 4, 8, 7, 6],
                &[7, 8, 9, 12, 11, 10],
                &[10, 11, 14, 13],
                &[5, 6, 7, 10, 13, 17, 16, 15],
            ],
            true,
        ),
        "H5" => cfg(
            "H5",
            11,
            &[
                (1, 2), (1, 6), (2, 3), (2, 7), (3, 4), (4, 5), (4, 10), (5, 11),
                (6, 7), (7, 8), (8, 9), (9, 10), (10, 11),
            ],
            &[3, 5, 4, 5, 3, 3, 5, 3, 3, 5, 3],
            vec![],
            CnCertificate,
            &[&[2, 3, 4, 10, 9, 8, 7], &[1, 2, 7, 6], &[4, 5, 11, 10]],
            true,
        ),
        "H6" => cfg(
            "H6",
            11,
            &[
                (2, 6), (6, 7), (7, 8), (8, 9), (9, 10), (10, 3), (3, 2),
                (2, 1), (1, 5), (5, 6),
                (10, 11), (11, 4), (4, 3),
            ],
            &[3, 6, 6, 3, 3, 5, 3, 2, 3, 5, 3],
            vec![],
            Sampled,
            &[&[2, 6, 7, 8, 9, 10, 3], &[2, 1, 5, 6], &[10, 11, 4, 3]],
            true,
        ),
        "J1" => cfg(
            "J1",
            6,
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)],
            &[3, 3, 2, 2, 3, 3],
            vec![ListConstraint::NotEqual(2, 3)],
            Exhaustive,
            &[],
            false,
        ),
        "J2" => cfg(
            "J2",
            6,
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)],
            &[3, 2, 3, 2, 3, 3],
            vec![ListConstraint::NotEqual(1, 3)],
            Exhaustive,
            &[],
            false,
        ),
        "J3" => cfg(
            "J3",
            8,
            &[
                (2, 3), (3, 6), (6, 7), (7, 8), (8, 5), (5, 2),
                (5, 4), (4, 1), (1, 2), (4, 3),
            ],
            &[4, 6, 6, 6, 6, 3, 2, 3],
            vec![],
            Sampled,
            &[&[2, 3, 6, 7, 8, 5], &[1, 2, 5, 4], &[1, 2, 3, 4]],
            true,
        ),
        "J4" => cfg(
            "J4",
            9,
            &[
                (2, 5), (5, 9), (9, 8), (8, 7), (7, 6), (6, 3), (3, 2),
                (2, 1), (1, 4), (4, 5), (4, 3),
            ],
            &[4, 6, 6, 6, 6, 3, 2, 2, 3],
            vec![],
            Sampled,
            &[&[2, 5, 9, 8, 7, 6, 3], &[1, 2, 5, 4], &[1, 2, 3, 4]],
            true,
        ),
        "J5" => cfg(
            "J5",
            10,
            &[
                (2, 3), (3, 4), (4, 9), (9, 8), (8, 7), (7, 2),
                (7, 6), (6, 1), (1, 2),
                (4, 5), (5, 10), (10, 9),
            ],
            &[3, 5, 4, 5, 3, 3, 5, 4, 5, 3],
            vec![],
            Sampled,
            &[&[2, 3, 4, 9, 8, 7], &[1, 2, 7, 6], &[4, 5, 10, 9]],
            true,
        ),
        "J6" => {
            // the 14-vertex core of H4 (H4 minus the three outer-path
            // vertices); sizes are the audited host-derived bounds
            let edges = [
                (7usize, 8usize), (8, 4), (4, 3), (3, 2), (2, 6), (6, 7),
                (8, 9), (9, 12), (12, 11), (11, 10), (10, 7),
                (2, 1), (1, 5), (5, 6),
                (11, 14), (14, 13), (13, 10),
            ];
            let mut c = cfg(
                "J6",
                14,
                &edges,
                &[1; 14],
                vec![],
                Sampled,
                &[
                    &[1, 2, 6, 5],
                    &[2, 3, 4, 8, 7, 6],
                    &[7, 8, 9, 12, 11, 10],
                    &[10, 11, 14, 13],
                ],
                true,
            );
            c.list_sizes = derived_host_sizes(&c.pattern, None);
            c
        }
        "J7" => cfg(
            "J7",
            5,
            &[(1, 3), (3, 4), (4, 2), (2, 1), (4, 5)],
            &[2, 3, 3, 3, 2],
            vec![
                ListConstraint::UnionAtLeast(vec![1, 2, 3], 4),
                ListConstraint::UnionAtLeast(vec![0, 2], 5),
            ],
            Exhaustive,
            &[],
            false,
        ),
        "J8" => cfg(
            "J8",
            8,
            &[
                (1, 3), (3, 4), (4, 2), (2, 1),
                (4, 5),
                (5, 6), (6, 7), (7, 8), (8, 5),
            ],
            &[3, 3, 3, 5, 5, 3, 2, 3],
            vec![],
            Exhaustive,
            &[],
            false,
        ),
        // two triangles joined by a 2-edge path (triangles at distance 2)
        "T" => cfg(
            "T",
            7,
            &[(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (3, 7), (7, 4)],
            &[2, 2, 2, 2, 2, 2, 2],
            vec![],
            DetectionOnly,
            &[],
            false,
        ),
        "W1" => cfg(
            "W1",
            10,
            &[
                (1, 2), (1, 3), (2, 3),
                (3, 4), (4, 5),
                (5, 6), (6, 7), (7, 8), (5, 8),
                (1, 10), (10, 9), (9, 8),
            ],
            &[5, 4, 5, 4, 5, 3, 3, 5, 3, 3],
            vec![],
            Sampled,
            &[&[1, 2, 3], &[5, 6, 7, 8], &[1, 3, 4, 5, 8, 9, 10]],
            true,
        ),
        "W2" => cfg(
            "W2",
            11,
            &[
                (1, 2), (1, 3), (2, 3),
                (3, 4), (4, 5),
                (5, 6), (6, 7), (7, 8), (5, 8),
                (1, 11), (11, 10), (10, 9), (9, 8),
            ],
            &[5, 4, 5, 4, 5, 3, 3, 5, 3, 2, 3],
            vec![],
            Sampled,
            &[&[1, 2, 3], &[5, 6, 7, 8], &[1, 3, 4, 5, 8, 9, 10, 11]],
            true,
        ),
        other => return Err(CatalogError::UnknownConfiguration(other.to_string())),
    };
    Ok(c)
}

impl Configuration {
    /// The embedding the configuration intends: the stored cycles bound faces and
    /// everything else closes up around them. Returns None for pure-subgraph
    /// configurations (no face data). Cycle orientations are searched, since
    /// neighboring faces must traverse a shared edge in opposite directions.
    pub fn canonical_embedding(&self) -> Option<crate::embed::PlaneGraph> {
        if self.face_cycles.is_empty() {
            return None;
        }
        let k = self.face_cycles.len();
        for flip_bits in 0..(1u32 << k) {
            let oriented: Vec<Vec<usize>> = self
                .face_cycles
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if flip_bits >> i & 1 == 1 {
                        c.iter().rev().copied().collect()
                    } else {
                        c.clone()
                    }
                })
                .collect();
            if let Some(pg) = self.embedding_with_faces(&oriented) {
                return Some(pg);
            }
        }
        None
    }

    fn embedding_with_faces(&self, cycles: &[Vec<usize>]) -> Option<crate::embed::PlaneGraph> {
        let g = &self.pattern;
        let n = g.n();
        // corner constraints from the stored faces: a face walk ..a,v,b..
        // forces b to follow a in the rotation at v
        let mut succ: Vec<std::collections::BTreeMap<usize, usize>> = vec![Default::default(); n];
        for cyc in cycles {
            let k = cyc.len();
            for i in 0..k {
                let a = cyc[i];
                let v = cyc[(i + 1) % k];
                let b = cyc[(i + 2) % k];
                if succ[v].insert(a, b).is_some() {
                    return None;
                }
            }
        }
        // complete each vertex's partial successor chains into one cycle
        let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(n);
        for v in 0..n {
            let nbrs = g.neighbors(v);
            let map = &succ[v];
            let mut has_pred: std::collections::BTreeSet<usize> = map.values().copied().collect();
            // chain starts: neighbors without a predecessor, in index order
            let mut chains: Vec<Vec<usize>> = Vec::new();
            let mut placed: std::collections::BTreeSet<usize> = Default::default();
            for &s in nbrs {
                if has_pred.contains(&s) || placed.contains(&s) {
                    continue;
                }
                let mut chain = vec![s];
                placed.insert(s);
                let mut cur = s;
                while let Some(&nxt) = map.get(&cur) {
                    if placed.contains(&nxt) {
                        return None; // would close early
                    }
                    chain.push(nxt);
                    placed.insert(nxt);
                    cur = nxt;
                }
                chains.push(chain);
            }
            if placed.len() != nbrs.len() {
                // leftover neighbors sit on a closed succ cycle
                let mut leftover: Vec<usize> =
                    nbrs.iter().copied().filter(|x| !placed.contains(x)).collect();
                if !chains.is_empty() || leftover.is_empty() {
                    return None;
                }
                // single full cycle: read it off
                let start = leftover.remove(0);
                let mut rot = vec![start];
                let mut cur = *map.get(&start)?;
                while cur != start {
                    rot.push(cur);
                    cur = *map.get(&cur)?;
                }
                if rot.len() != nbrs.len() {
                    return None;
                }
                rotation.push(rot);
                continue;
            }
            let rot: Vec<usize> = chains.into_iter().flatten().collect();
            has_pred.clear();
            rotation.push(rot);
        }
        crate::embed::PlaneGraph::new(g.clone(), rotation).ok()
    }
}

/// List-size bounds implied by a cubic host with 7-lists: a pattern vertex
/// keeps at least 7 minus the number of host-square neighbors it can have
/// outside the pattern. Each missing pattern edge at v admits one outside
/// neighbor with up to two further vertices behind it; each pattern neighbor
/// u contributes its own missing edges as distance-two exits.
///
/// `exclude` restricts "inside" to a subset (used when only part of the
/// pattern is recolored).
pub fn derived_host_sizes(pattern: &Graph, inside: Option<&[usize]>) -> Vec<usize> {
    let n = pattern.n();
    let inside_set: Vec<bool> = match inside {
        Some(list) => {
            let mut v = vec![false; n];
            for &i in list {
                v[i] = true;
            }
            v
        }
        None => vec![true; n],
    };
    (0..n)
        .map(|v| {
            if !inside_set[v] {
                return 1;
            }
            let deg_in = pattern
                .neighbors(v)
                .iter()
                .filter(|&&u| inside_set[u])
                .count();
            let mut outside = 3 * (3 - deg_in.min(3));
            for &u in pattern.neighbors(v) {
                if inside_set[u] {
                    let u_deg_in = pattern
                        .neighbors(u)
                        .iter()
                        .filter(|&&w| inside_set[w])
                        .count();
                    outside += 3 - u_deg_in.min(3);
                } else {
                    // u itself is outside: counted in the 3*(3-deg) term
                }
            }
            7usize.saturating_sub(outside).max(1)
        })
        .collect()
}

/// Result of auditing one configuration's stored sizes against the derived
/// host bounds.
#[derive(Debug, Clone)]
pub struct AuditReport {
    pub name: String,
    /// (vertex, stored, derived) for every audited vertex
    pub entries: Vec<(usize, usize, usize)>,
    /// true when every stored size equals its derived bound
    pub exact: bool,
    /// true when every stored size is at most its derived bound (sound)
    pub sound: bool,
}

/// Recomputes the size annotations and cross-checks the stored vector.
/// Non-host configurations (free-standing lemma hypotheses) are skipped.
pub fn audit_config(c: &Configuration) -> Option<AuditReport> {
    if !c.host_derived_sizes {
        return None;
    }
    let derived = derived_host_sizes(&c.pattern, None);
    let entries: Vec<(usize, usize, usize)> = (0..c.pattern.n())
        .map(|v| (v, c.list_sizes[v], derived[v]))
        .collect();
    let exact = entries.iter().all(|&(_, s, d)| s == d);
    let sound = entries.iter().all(|&(_, s, d)| s <= d);
    Some(AuditReport {
        name: c.name.clone(),
        entries,
        exact,
        sound,
    })
}

/// All configurations in deterministic export order.
pub fn all_configs() -> Vec<Configuration> {
    CONFIG_NAMES
        .iter()
        .chain(EXTRA_NAMES.iter())
        .map(|n| build_config(n).unwrap())
        .collect()
}

/// Human-readable catalog export: one record per configuration.
pub fn export_catalog() -> String {
    let mut out = String::new();
    for c in all_configs() {
        writeln!(out, "configuration {}", c.name).unwrap();
        writeln!(out, "  vertices {}", c.pattern.n()).unwrap();
        let edges: Vec<String> = c
            .pattern
            .edges()
            .iter()
            .map(|&(u, v)| format!("{}-{}", c.pattern.label(u), c.pattern.label(v)))
            .collect();
        writeln!(out, "  edges {}", edges.join(" ")).unwrap();
        let sizes: Vec<String> = c.list_sizes.iter().map(|s| s.to_string()).collect();
        writeln!(out, "  sizes {}", sizes.join(",")).unwrap();
        for con in &c.constraints {
            match con {
                ListConstraint::NotEqual(a, b) => {
                    writeln!(
                        out,
                        "  constraint lists-differ {} {}",
                        c.pattern.label(*a),
                        c.pattern.label(*b)
                    )
                    .unwrap();
                }
                ListConstraint::UnionAtLeast(vs, m) => {
                    let names: Vec<String> = vs.iter().map(|&v| c.pattern.label(v)).collect();
                    writeln!(out, "  constraint union-at-least {} {}", names.join(","), m)
                        .unwrap();
                }
            }
        }
        writeln!(out, "  mode {}", c.mode.as_str()).unwrap();
        for fc in &c.face_cycles {
            let names: Vec<String> = fc.iter().map(|&v| c.pattern.label(v)).collect();
            writeln!(out, "  face {}", names.join(",")).unwrap();
        }
        writeln!(out).unwrap();
    }
    out
}
