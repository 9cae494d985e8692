//! Mechanical replay of the local face-charge case analysis: enumerate every
//! admissible sequence of neighbor face classes around a center face of
//! length d, apply the transfer rules, and report the minimum final charge.
//!
//! Admissibility encodes the structural exclusions to the depth the analysis
//! itself uses: which neighbor classes can share an edge through a corner
//! vertex, which consecutive patterns would assemble a forbidden
//! configuration, the gap conditions between short faces, and the counting
//! properties keyed on the center length.

use crate::discharge::{rule_amount, Charge};
use serde::Serialize;

/// Neighbor face class. No class for length 5: 5-cycles are excluded before
/// discharging, so 5-faces cannot occur anywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FaceClass {
    F3,
    F4,
    F6,
    /// length at least 7
    F7Plus,
}

impl FaceClass {
    pub const ALL: [FaceClass; 4] = [FaceClass::F3, FaceClass::F4, FaceClass::F6, FaceClass::F7Plus];

    fn len_repr(self) -> usize {
        match self {
            FaceClass::F3 => 3,
            FaceClass::F4 => 4,
            FaceClass::F6 => 6,
            FaceClass::F7Plus => 7,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            FaceClass::F3 => "3",
            FaceClass::F4 => "4",
            FaceClass::F6 => "6",
            FaceClass::F7Plus => "7+",
        }
    }
}

/// One transfer touching the center: the neighbor position, the flanking
/// classes through the shared edge's endpoints, the amount, and whether the
/// center receives (length 3 or 4 centers) or sends (7-plus centers).
#[derive(Debug, Clone, Serialize)]
pub struct LocalTransfer {
    pub position: usize,
    pub neighbor: FaceClass,
    pub flanks: (FaceClass, FaceClass),
    pub amount: Charge,
    pub rule: crate::discharge::Rule,
    pub center_receives: bool,
}

/// One admissible local case: the center length, the cyclic neighbor-class
/// sequence, the transfers it induces, and the resulting final charge.
#[derive(Debug, Clone, Serialize)]
pub struct LocalFaceCase {
    pub center_len: usize,
    pub classes: Vec<FaceClass>,
    pub transfers: Vec<LocalTransfer>,
    pub final_charge: Charge,
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalCaseReport {
    pub center_len: usize,
    pub admissible_cases: u64,
    pub min_final: Option<Charge>,
    pub argmin: Option<LocalFaceCase>,
}

/// Two classes that would share an edge through the corner vertex between
/// consecutive positions. A corner vertex is cubic, so consecutive neighbor
/// faces always share the third edge at that vertex.
fn consecutive_ok(a: FaceClass, b: FaceClass) -> bool {
    use FaceClass::*;
    !matches!(
        (a, b),
        // two triangles sharing an edge assemble the double-triangle
        (F3, F3)
        // triangle sharing an edge with a 4-cycle closes a 5-cycle
        | (F3, F4) | (F4, F3)
        // triangle sharing an edge with a 6-cycle
        | (F3, F6) | (F6, F3)
        // two 4-faces sharing an edge assemble two adjacent 4-cycles
        | (F4, F4)
    )
}

/// Cyclic gap (number of positions strictly between i and j going forward).
fn gap(d: usize, i: usize, j: usize) -> usize {
    (j + d - i - 1) % d
}

fn admissible(d: usize, classes: &[FaceClass]) -> bool {
    use FaceClass::*;
    // consecutive corner constraints
    for i in 0..d {
        if !consecutive_ok(classes[i], classes[(i + 1) % d]) {
            return false;
        }
    }
    // a 6-face flanked by two 4-faces assembles the 6-cycle-with-two-4-cycles
    for i in 0..d {
        if classes[i] == F6
            && classes[(i + d - 1) % d] == F4
            && classes[(i + 1) % d] == F4
        {
            return false;
        }
    }
    // around an 8-center, the consecutive pattern 4,6,6,4 assembles the
    // 8-cycle configuration
    if d == 8 {
        for i in 0..d {
            if classes[i] == F4
                && classes[(i + 1) % d] == F6
                && classes[(i + 2) % d] == F6
                && classes[(i + 3) % d] == F4
            {
                return false;
            }
        }
    }
    // pairwise gap conditions between short faces
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            let g = gap(d, i, j);
            match (classes[i], classes[j]) {
                // triangles keep distance at least three
                (F3, F3) => {
                    if g < 3 {
                        return false;
                    }
                }
                // triangle and 4-face: distance one never occurs; distance
                // two needs the shared face to have length at least nine
                (F3, F4) | (F4, F3) => {
                    if g == 1 || (g == 2 && d <= 8) {
                        return false;
                    }
                }
                _ => {}
            }
        }
    }
    // center-length-specific constraints
    let threes = classes.iter().filter(|&&c| c == F3).count();
    let fours = classes.iter().filter(|&&c| c == F4).count();
    match d {
        3 => {
            // every neighbor of a triangle is a 7-plus face
            if classes.iter().any(|&c| c != F7Plus) {
                return false;
            }
        }
        4 => {
            // neighbors of a 4-face: no triangle, no 4-face (and no 5-face)
            if classes.iter().any(|&c| c == F3 || c == F4) {
                return false;
            }
            // no two consecutive 6-faces around a 4-face
            for i in 0..d {
                if classes[i] == F6 && classes[(i + 1) % d] == F6 {
                    return false;
                }
            }
        }
        5 => return false, // no 5-faces exist at all
        6 => {
            // a triangle sharing an edge with the 6-center is excluded
            if threes > 0 {
                return false;
            }
        }
        7 => {
            // a 7-face carries at most one 4-face
            if fours > 1 {
                return false;
            }
            // with a 3-face neighbor: no other short faces at all
            if threes > 0 && (fours > 0 || threes > 1) {
                return false;
            }
        }
        8 => {
            if threes > 0 && threes + fours > 2 {
                return false;
            }
        }
        9 => {
            if threes > 0 && threes + fours > 3 {
                return false;
            }
        }
        10 => {
            if threes > 0 && threes + fours > 4 {
                return false;
            }
        }
        _ => {}
    }
    // an 11-plus face sees at most floor(d/2) short faces
    if d >= 11 && threes + fours > d / 2 {
        return false;
    }
    true
}

/// Transfers touching the center and its final charge, for an admissible
/// sequence.
fn settle(d: usize, classes: &[FaceClass]) -> (Vec<LocalTransfer>, Charge) {
    use FaceClass::*;
    let mut charge = Charge::from_int(d as i64 - 6);
    let mut transfers = Vec::new();
    let flank_pair = |i: usize| (classes[(i + d - 1) % d], classes[(i + 1) % d]);
    match d {
        3 => {
            // receives 1 from each neighbor (all 7-plus)
            for i in 0..d {
                transfers.push(LocalTransfer {
                    position: i,
                    neighbor: classes[i],
                    flanks: flank_pair(i),
                    amount: Charge::from_int(1),
                    rule: crate::discharge::Rule::R4,
                    center_receives: true,
                });
                charge += Charge::from_int(1);
            }
        }
        4 => {
            for i in 0..d {
                if classes[i] == F7Plus {
                    let (l, r) = flank_pair(i);
                    let (amount, rule) = rule_amount(l.len_repr(), r.len_repr());
                    transfers.push(LocalTransfer {
                        position: i,
                        neighbor: classes[i],
                        flanks: (l, r),
                        amount,
                        rule,
                        center_receives: true,
                    });
                    charge += amount;
                }
            }
        }
        6 => {} // neither sends nor receives
        _ => {
            // 7-plus center: sends along the rules
            for i in 0..d {
                match classes[i] {
                    F3 => {
                        transfers.push(LocalTransfer {
                            position: i,
                            neighbor: F3,
                            flanks: flank_pair(i),
                            amount: Charge::from_int(1),
                            rule: crate::discharge::Rule::R4,
                            center_receives: false,
                        });
                        charge -= Charge::from_int(1);
                    }
                    F4 => {
                        let (l, r) = flank_pair(i);
                        let (amount, rule) = rule_amount(l.len_repr(), r.len_repr());
                        transfers.push(LocalTransfer {
                            position: i,
                            neighbor: F4,
                            flanks: (l, r),
                            amount,
                            rule,
                            center_receives: false,
                        });
                        charge -= amount;
                    }
                    _ => {}
                }
            }
        }
    }
    (transfers, charge)
}

#[cfg(test)]
fn final_charge(d: usize, classes: &[FaceClass]) -> Charge {
    settle(d, classes).1
}

/// Enumerates all admissible neighbor sequences around a d-face and reports
/// the minimum final charge with a witness sequence.
pub fn local_case_report(d: usize) -> LocalCaseReport {
    assert!((3..=12).contains(&d), "local enumeration covers 3..=12");
    let mut classes = vec![FaceClass::F7Plus; d];
    let mut count = 0u64;
    let mut min: Option<(Charge, Vec<FaceClass>)> = None;
    fn rec(
        d: usize,
        classes: &mut Vec<FaceClass>,
        pos: usize,
        count: &mut u64,
        min: &mut Option<(Charge, Vec<FaceClass>)>,
    ) {
        if pos == d {
            if admissible(d, classes) {
                *count += 1;
                let c = settle(d, classes).1;
                if min.as_ref().map_or(true, |(m, _)| c < *m) {
                    *min = Some((c, classes.clone()));
                }
            }
            return;
        }
        for cl in FaceClass::ALL {
            classes[pos] = cl;
            // cheap prefix prune on the consecutive constraint
            if pos > 0 && !consecutive_ok(classes[pos - 1], classes[pos]) {
                continue;
            }
            rec(d, classes, pos + 1, count, min);
        }
    }
    rec(d, &mut classes, 0, &mut count, &mut min);
    LocalCaseReport {
        center_len: d,
        admissible_cases: count,
        min_final: min.as_ref().map(|(c, _)| *c),
        argmin: min.map(|(c, cls)| {
            let (transfers, _) = settle(d, &cls);
            LocalFaceCase {
                center_len: d,
                classes: cls,
                transfers,
                final_charge: c,
            }
        }),
    }
}

/// Closed-form lower bound for long faces: a d-face loses at most 1 per
/// short neighbor and has at most floor(d/2) of them.
pub fn closed_form_bound(d: usize) -> Charge {
    assert!(d >= 13);
    Charge::from_int(d as i64 - 6 - (d as i64) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_center_is_tight_zero() {
        let r = local_case_report(3);
        assert_eq!(r.admissible_cases, 1);
        assert_eq!(r.min_final, Some(Charge::ZERO));
    }

    #[test]
    fn four_center_is_tight_zero() {
        let r = local_case_report(4);
        assert_eq!(r.min_final, Some(Charge::ZERO));
        // the all-7-plus sequence receives four halves
        let all7 = vec![FaceClass::F7Plus; 4];
        assert!(admissible(4, &all7));
        assert_eq!(final_charge(4, &all7), Charge::ZERO);
        // alternating 6,7+,6,7+ receives two whole units
        let alt = vec![FaceClass::F6, FaceClass::F7Plus, FaceClass::F6, FaceClass::F7Plus];
        assert!(admissible(4, &alt));
        assert_eq!(final_charge(4, &alt), Charge::ZERO);
    }

    #[test]
    fn five_center_has_no_cases() {
        let r = local_case_report(5);
        assert_eq!(r.admissible_cases, 0);
        assert_eq!(r.min_final, None);
    }

    #[test]
    fn seven_center_tight_cases() {
        let r = local_case_report(7);
        assert_eq!(r.min_final, Some(Charge::ZERO));
        // one 3-face neighbor flanked by 7-plus: sends exactly 1
        let mut seq = vec![FaceClass::F7Plus; 7];
        seq[0] = FaceClass::F3;
        assert!(admissible(7, &seq));
        assert_eq!(final_charge(7, &seq), Charge::ZERO);
        // two 4-faces around a 7-face are excluded
        let mut two4 = vec![FaceClass::F7Plus; 7];
        two4[0] = FaceClass::F4;
        two4[3] = FaceClass::F4;
        assert!(!admissible(7, &two4));
    }

    #[test]
    fn eight_center_tight_at_four_alternating_fours() {
        let r = local_case_report(8);
        assert_eq!(r.min_final, Some(Charge::ZERO));
        let mut seq = vec![FaceClass::F7Plus; 8];
        for i in [0, 2, 4, 6] {
            seq[i] = FaceClass::F4;
        }
        assert!(admissible(8, &seq));
        assert_eq!(final_charge(8, &seq), Charge::ZERO);
    }

    #[test]
    fn all_lengths_nonnegative() {
        for d in 3..=12 {
            let r = local_case_report(d);
            if let Some(m) = r.min_final {
                assert!(m >= Charge::ZERO, "d={d}: min {m}");
            }
        }
    }

    #[test]
    fn rule_table_monotone_in_flank_class() {
        // upgrading a flank from 6 to 7-plus never increases the sent amount,
        // so a 4-face's received charge is monotone the other way
        let (a66, _) = rule_amount(6, 6);
        let (a67, _) = rule_amount(6, 7);
        let (a77, _) = rule_amount(7, 7);
        assert!(a66 >= a67 && a67 >= a77);
    }

    #[test]
    fn closed_form_nonnegative_from_thirteen() {
        for d in 13..40 {
            assert!(closed_form_bound(d) >= Charge::ZERO);
        }
    }

    #[test]
    fn forbidden_local_patterns() {
        use FaceClass::*;
        // 4,6,4 assembles the forbidden 6-cycle flanked by 4-cycles
        let mut seq = vec![F7Plus; 8];
        seq[0] = F4;
        seq[1] = F6;
        seq[2] = F4;
        assert!(!admissible(8, &seq));
        // 4,6,6,4 specifically around an 8-center
        let mut seq8 = vec![F7Plus; 8];
        seq8[0] = F4;
        seq8[1] = F6;
        seq8[2] = F6;
        seq8[3] = F4;
        assert!(!admissible(8, &seq8));
        let mut seq9 = vec![F7Plus; 9];
        seq9[0] = F4;
        seq9[1] = F6;
        seq9[2] = F6;
        seq9[3] = F4;
        assert!(admissible(9, &seq9));
    }
}
