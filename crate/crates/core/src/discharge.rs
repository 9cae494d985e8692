//! Charge bookkeeping on embedded graphs: initial charges, the four transfer
//! rules, and whole-graph hypothesis replay.
//!
//! All charges are exact rationals with denominators in {1, 2, 4}, stored as
//! integer quarter-units so the zero boundaries of the case analysis are
//! exact.

use crate::catalog::{build_config, Configuration};
use crate::detect::find_occurrences;
use crate::embed::PlaneGraph;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

/// Exact charge in quarter units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Charge(pub i64);

impl Charge {
    pub const ZERO: Charge = Charge(0);
    pub fn from_int(n: i64) -> Charge {
        Charge(n * 4)
    }
    pub fn quarters(self) -> i64 {
        self.0
    }
}

impl std::ops::Add for Charge {
    type Output = Charge;
    fn add(self, rhs: Charge) -> Charge {
        Charge(self.0 + rhs.0)
    }
}

impl std::ops::Sub for Charge {
    type Output = Charge;
    fn sub(self, rhs: Charge) -> Charge {
        Charge(self.0 - rhs.0)
    }
}

impl std::ops::AddAssign for Charge {
    fn add_assign(&mut self, rhs: Charge) {
        self.0 += rhs.0;
    }
}

impl std::ops::SubAssign for Charge {
    fn sub_assign(&mut self, rhs: Charge) {
        self.0 -= rhs.0;
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.0;
        if q % 4 == 0 {
            write!(f, "{}", q / 4)
        } else if q % 2 == 0 {
            write!(f, "{}/2", q / 2)
        } else {
            write!(f, "{}/4", q)
        }
    }
}

/// amount 1
pub const SEND_WHOLE: Charge = Charge(4);
/// amount 3/4
pub const SEND_THREE_QUARTERS: Charge = Charge(3);
/// amount 1/2
pub const SEND_HALF: Charge = Charge(2);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DischargeError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {0} has degree {1}, rules need a cubic graph")]
    NotCubic(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
}

#[derive(Debug, Clone, Serialize)]
pub struct Transfer {
    pub from_face: usize,
    pub to_face: usize,
    pub amount: Charge,
    pub rule: Rule,
}

#[derive(Debug, Clone)]
pub struct ChargeLedger {
    pub vertex_charges: Vec<Charge>,
    pub face_charges: Vec<Charge>,
    pub transfers: Vec<Transfer>,
}

impl ChargeLedger {
    pub fn total(&self) -> Charge {
        let mut t = Charge::ZERO;
        for &c in &self.vertex_charges {
            t += c;
        }
        for &c in &self.face_charges {
            t += c;
        }
        t
    }

    pub fn min_charge(&self) -> Charge {
        self.vertex_charges
            .iter()
            .chain(self.face_charges.iter())
            .copied()
            .min()
            .unwrap_or(Charge::ZERO)
    }
}

/// Initial charges: 2 d(v) - 6 per vertex and d(f) - 6 per face. For every
/// connected embedding the total equals -12 exactly.
pub fn initial_charges(pg: &PlaneGraph) -> Result<ChargeLedger, DischargeError> {
    if !pg.graph().is_connected() {
        return Err(DischargeError::Disconnected);
    }
    let vertex_charges = (0..pg.graph().n())
        .map(|v| Charge::from_int(2 * pg.graph().degree(v) as i64 - 6))
        .collect();
    let face_charges = (0..pg.faces().len())
        .map(|f| Charge::from_int(pg.face_len(f) as i64 - 6))
        .collect();
    Ok(ChargeLedger {
        vertex_charges,
        face_charges,
        transfers: Vec::new(),
    })
}

/// Sending amount from a large face to a 4-face across one edge, decided by
/// the two flanking faces' lengths.
pub fn rule_amount(flank1_len: usize, flank2_len: usize) -> (Charge, Rule) {
    let six1 = flank1_len == 6;
    let six2 = flank2_len == 6;
    match (six1, six2) {
        (true, true) => (SEND_WHOLE, Rule::R1),
        (true, false) | (false, true) => (SEND_THREE_QUARTERS, Rule::R2),
        (false, false) => (SEND_HALF, Rule::R3),
    }
}

/// Applies the transfer rules to a cubic embedding:
/// for each edge between a 7-plus face and a 4-face, the large face sends
/// 1, 3/4 or 1/2 according to the flanking faces; each adjacency between a
/// 7-plus face and a 3-face moves 1.
pub fn apply_rules(pg: &PlaneGraph, ledger: &ChargeLedger) -> Result<ChargeLedger, DischargeError> {
    for v in 0..pg.graph().n() {
        if pg.graph().degree(v) != 3 {
            return Err(DischargeError::NotCubic(v, pg.graph().degree(v)));
        }
    }
    let mut out = ledger.clone();
    out.transfers.clear();
    let mut moved: Vec<(usize, usize, Charge, Rule)> = Vec::new();
    // R1-R3 per edge
    for (u, v) in pg.graph().edges() {
        let (fa, fb) = pg.faces_of_edge(u, v);
        for (big, small) in [(fa, fb), (fb, fa)] {
            if pg.face_len(big) >= 7 && pg.face_len(small) == 4 {
                let fl1 = pg.flank_face(u, v);
                let fl2 = pg.flank_face(v, u);
                let (amount, rule) = rule_amount(pg.face_len(fl1), pg.face_len(fl2));
                moved.push((big, small, amount, rule));
            }
        }
    }
    // R4 per adjacent face pair
    let mut adjacent: std::collections::BTreeSet<(usize, usize)> = Default::default();
    for (u, v) in pg.graph().edges() {
        let (fa, fb) = pg.faces_of_edge(u, v);
        if fa != fb {
            adjacent.insert((fa.min(fb), fa.max(fb)));
        }
    }
    for (fa, fb) in adjacent {
        for (big, small) in [(fa, fb), (fb, fa)] {
            if pg.face_len(big) >= 7 && pg.face_len(small) == 3 {
                moved.push((big, small, SEND_WHOLE, Rule::R4));
            }
        }
    }
    for (from, to, amount, rule) in moved {
        out.face_charges[from] -= amount;
        out.face_charges[to] += amount;
        out.transfers.push(Transfer {
            from_face: from,
            to_face: to,
            amount,
            rule,
        });
    }
    Ok(out)
}

/// Why a graph fails the hypothesis class of the discharging argument.
#[derive(Debug, Clone, Serialize)]
pub enum HypothesisViolation {
    NotCubic { vertex: usize, degree: usize },
    Disconnected,
    HasFiveCycle { cycle: Vec<usize> },
    ConfigurationPresent { name: String, occurrence: Vec<usize> },
}

#[derive(Debug, Clone, Serialize)]
pub struct DischargeReport {
    /// final charges after the rules
    pub final_vertex_min: Charge,
    pub final_face_min: Charge,
    pub total: Charge,
    pub transfer_count: usize,
    /// every final charge nonnegative while the exact total is -12: the
    /// hypothesis class is empty, so the input cannot actually exist
    pub inconsistent: bool,
}

/// The configurations whose absence the rules assume.
fn hypothesis_configs() -> Vec<Configuration> {
    ["F1", "F2", "F3", "W1", "W2", "H1", "H2", "H3", "H4", "H5", "H6"]
        .iter()
        .map(|n| {
            let mut c = build_config(n).unwrap();
            if c.name == "W1" || c.name == "W2" {
                // both realize the short-face pattern named F4
                c.name = format!("F4/{}", c.name);
            }
            c
        })
        .collect()
}

/// Checks the hypothesis class (cubic, connected, planar embedding, no
/// 5-cycles, none of the catalogued configurations), then replays the rules.
/// Real inputs always violate a hypothesis; a hypothetical survivor would
/// exhibit nonnegative final charges against a total of -12.
pub fn verify_graph_discharge(pg: &PlaneGraph) -> Result<DischargeReport, HypothesisViolation> {
    let g = pg.graph();
    if !g.is_connected() {
        return Err(HypothesisViolation::Disconnected);
    }
    for v in 0..g.n() {
        if g.degree(v) != 3 {
            return Err(HypothesisViolation::NotCubic {
                vertex: v,
                degree: g.degree(v),
            });
        }
    }
    if let Some(cycle) = g.find_five_cycle() {
        return Err(HypothesisViolation::HasFiveCycle {
            cycle: cycle.to_vec(),
        });
    }
    for cfg in hypothesis_configs() {
        let occ = find_occurrences(pg, &cfg);
        if let Some(first) = occ.first() {
            return Err(HypothesisViolation::ConfigurationPresent {
                name: cfg.name.clone(),
                occurrence: first.mapping.clone(),
            });
        }
    }
    let initial = initial_charges(pg).map_err(|_| HypothesisViolation::Disconnected)?;
    let after = apply_rules(pg, &initial).expect("cubic checked above");
    let total = after.total();
    let vmin = after
        .vertex_charges
        .iter()
        .copied()
        .min()
        .unwrap_or(Charge::ZERO);
    let fmin = after
        .face_charges
        .iter()
        .copied()
        .min()
        .unwrap_or(Charge::ZERO);
    Ok(DischargeReport {
        final_vertex_min: vmin,
        final_face_min: fmin,
        total,
        transfer_count: after.transfers.len(),
        inconsistent: vmin >= Charge::ZERO && fmin >= Charge::ZERO && total == Charge::from_int(-12),
    })
}
