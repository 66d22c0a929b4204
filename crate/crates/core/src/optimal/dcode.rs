//! Distance-2 cycles for type D involutions and the distance-2 verifier.

use crate::code::CodeList;
use crate::error::{Error, Result};
use crate::optimal::graph::{
    find_hamilton, restricted_distance2_graph, HamiltonTarget, SearchOutcome,
};
use crate::perm::{classify_move, GroupType, MoveClass};
use crate::recursive::coverage_report;
use crate::report::ValidationReport;

/// Cyclic distance-2 code over all type D involutions of rank `n`,
/// supported for `n` in `{2, 4, 5}` (rank 3 admits no such cycle).
///
/// The cycle is found by exhaustive deterministic search over the graph
/// whose edges are exactly the admissible moves — two sign changes inside
/// one unsigned involution, or a sign-free transposition — so every
/// consecutive quotient is a paired sign flip or a plain transposition.
/// The result is rotated to start at the identity.
pub fn optimal_code_d(n: usize) -> Result<CodeList> {
    if !matches!(n, 2 | 4 | 5) {
        return Err(Error::RankOutOfRange {
            what: "optimal type D code (no distance-2 cycle exists at rank 3)",
            rank: n,
            min: 2,
            max: 5,
        });
    }
    let graph = restricted_distance2_graph(GroupType::D, n)?;
    match find_hamilton(&graph, HamiltonTarget::Cycle, None) {
        SearchOutcome::Found { code, .. } => Ok(rotate_to_identity(code)),
        SearchOutcome::Exhausted { .. } => {
            Err(Error::SearchExhausted(format!("distance-2 cycle at rank {n}")))
        }
        SearchOutcome::TimedOut { budget, .. } => {
            Err(Error::SearchTimedOut(budget.as_millis()))
        }
    }
}

fn rotate_to_identity(code: CodeList) -> CodeList {
    let pos = code
        .entries()
        .iter()
        .position(|w| w.is_identity())
        .unwrap_or(0);
    let mut entries = code.entries().to_vec();
    entries.rotate_left(pos);
    CodeList::from_parts(code.group(), code.rank(), entries)
}

/// Verifies a distance-2 code: full coverage, pairwise distinctness, and
/// every (cyclically) consecutive move being a single sign change, a
/// paired double sign change, or a sign-free transposition.
pub fn verify_distance2(list: &CodeList, cyclic: bool) -> ValidationReport {
    let mut report = ValidationReport::default();
    coverage_report(list, &mut report);
    check_moves(list, cyclic, &mut report);
    report
}

/// Move checks alone, for partial listings that do not claim coverage.
pub fn check_moves(list: &CodeList, cyclic: bool, report: &mut ValidationReport) {
    if list.len() < 2 {
        return;
    }
    let pairs: Vec<(usize, &crate::perm::SignedPerm, &crate::perm::SignedPerm)> = if cyclic {
        list.cyclic_pairs()
            .enumerate()
            .map(|(i, (u, v))| (i, u, v))
            .collect()
    } else {
        list.entries()
            .windows(2)
            .enumerate()
            .map(|(i, w)| (i, &w[0], &w[1]))
            .collect()
    };
    for (i, u, v) in pairs {
        let d = u.hamming(v);
        if d > 2 {
            report.push(i, format!("distance {d} between {u} and {v}"));
            continue;
        }
        let ok = match classify_move(u, v) {
            MoveClass::SignChanges { positions } => !positions.is_empty() && positions.len() <= 2,
            MoveClass::Transposition {
                letters_flipped, ..
            } => letters_flipped.is_empty(),
            _ => false,
        };
        if !ok {
            report.push(
                i,
                format!(
                    "move {u} -> {v} is not a sign change, paired sign change \
                     or sign-free transposition"
                ),
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{generating_set, is_edge_within, X1, X2};
    use crate::counting::count;

    #[test]
    fn rank4_cycle_verifies() {
        let code = optimal_code_d(4).unwrap();
        let expected: u64 = count(GroupType::D, 4).unwrap().try_into().unwrap();
        assert_eq!(code.len() as u64, expected);
        assert!(code.entries()[0].is_identity());
        assert!(verify_distance2(&code, true).pass());
    }

    #[test]
    fn rank4_quotients_in_x1_x2() {
        let code = optimal_code_d(4).unwrap();
        let t = generating_set(GroupType::D, 4).unwrap();
        for (u, v) in code.cyclic_pairs() {
            assert!(is_edge_within(u, v, &t, X1 | X2), "{u} -> {v}");
        }
    }

    #[test]
    fn rank2_cycle() {
        let code = optimal_code_d(2).unwrap();
        assert_eq!(code.len(), 4);
        assert!(verify_distance2(&code, true).pass());
    }

    #[test]
    fn rank3_is_rejected() {
        assert!(optimal_code_d(3).is_err());
        assert!(optimal_code_d(6).is_err());
    }

    #[test]
    fn verifier_rejects_distance_three() {
        // two involutions at distance 3 spliced into a list
        let entries = vec![
            "1 2 3".parse().unwrap(),
            "2 1 3".parse().unwrap(),
            "1 3 2".parse().unwrap(),
        ];
        let list = CodeList::from_parts(GroupType::A, 3, entries);
        let mut report = ValidationReport::default();
        check_moves(&list, false, &mut report);
        assert!(!report.pass());
    }
}
