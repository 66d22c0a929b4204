//! Distance-2 cyclic Gray code for type B involutions, built by layers.
//!
//! The code starts from the reflected Gray code on the all-fixed-points
//! layer and grows by inserting, for every unsigned involution `p = q·(s t)`,
//! the full sequence of its sign assignments between two consecutive
//! entries of the parent `q`'s sequence. A host edge is usable for the
//! pair `(s, t)` when both host words carry equal, unchanged sign bits at
//! `s` and `t`; the inserted sequence then enters and leaves by a sign-free
//! transposition and steps internally by one free sign bit or one paired
//! sign. Host edges and sign sequences are chosen deterministically,
//! smallest feasible edge first, with backtracking across layers.

use crate::code::CodeList;
use crate::error::{Error, Result};
use crate::optimal::binary::{brgc, BinaryWord};
use crate::optimal::layers::{apply_signs, children_of, logical_coords, SignCoord};
use crate::perm::{GroupType, SignedPerm};

/// Default rank cap for the layered construction.
pub const DEFAULT_CAP_OPTIMAL_B: usize = 6;

struct PNode {
    p: SignedPerm,
    seq: Vec<BinaryWord>,
    /// children keyed by the host edge index they occupy
    children: Vec<(usize, PNode)>,
}

/// Cyclic distance-2 Gray code over all type B involutions of rank `n`,
/// bounded by the default cap.
pub fn optimal_code_b(n: usize) -> Result<CodeList> {
    optimal_code_b_within(n, DEFAULT_CAP_OPTIMAL_B)
}

/// As `optimal_code_b` with an explicit cap.
pub fn optimal_code_b_within(n: usize, cap: usize) -> Result<CodeList> {
    if n < 2 {
        return Err(Error::RankOutOfRange {
            what: "optimal type B code",
            rank: n,
            min: 2,
            max: cap,
        });
    }
    if n > cap {
        return Err(Error::CapExceeded {
            group: 'B',
            n,
            cap,
        });
    }
    if n == 2 {
        // rank 2 admits no off-pair host bit, so the layered scheme cannot
        // splice (2 1); this hand-checked cycle has the same move set
        let words = ["1 2", "2 1", "-2 -1", "-1 -2", "-1 2", "1 -2"]
            .iter()
            .map(|s| s.parse().expect("trigger word"))
            .collect();
        return Ok(CodeList::from_parts(GroupType::B, 2, words));
    }
    let root_seq = brgc(n)?;
    let root = build_node(SignedPerm::identity(n), root_seq, true).ok_or(Error::Io(
        "layered insertion search exhausted without a solution".into(),
    ))?;
    let mut out = Vec::new();
    render(&root, &mut out);
    Ok(CodeList::from_parts(GroupType::B, n, out))
}

// Builds the subtree rooted at `p` with the given sign sequence, choosing
// host edges for all children. Returns None when no assignment works.
fn build_node(p: SignedPerm, seq: Vec<BinaryWord>, cyclic: bool) -> Option<PNode> {
    let kids: Vec<(SignedPerm, (usize, usize))> = children_of(&p)
        .into_iter()
        .map(|kid| {
            let pair = new_pair(&p, &kid);
            (kid, pair)
        })
        .collect();
    let edge_slots = seq.len();
    let mut node = PNode {
        p,
        seq,
        children: Vec::new(),
    };
    if solve(&mut node, &kids, 0, &mut vec![false; edge_slots], cyclic) {
        node.children.sort_by_key(|(e, _)| *e);
        Some(node)
    } else {
        None
    }
}

fn solve(
    node: &mut PNode,
    kids: &[(SignedPerm, (usize, usize))],
    idx: usize,
    used: &mut Vec<bool>,
    cyclic: bool,
) -> bool {
    if idx == kids.len() {
        return true;
    }
    let (kid, (s, t)) = &kids[idx];
    let edge_count = if cyclic {
        node.seq.len()
    } else {
        node.seq.len() - 1
    };
    for e in 0..edge_count {
        if used[e] {
            continue;
        }
        let h = &node.seq[e];
        let h2 = &node.seq[(e + 1) % node.seq.len()];
        if h.bit(*s) != h.bit(*t) || h2.bit(*s) != h.bit(*s) || h2.bit(*t) != h.bit(*t) {
            continue;
        }
        let kid_seq = child_sequence(kid, h, h2);
        if let Some(kid_node) = build_node(kid.clone(), kid_seq, false) {
            used[e] = true;
            node.children.push((e, kid_node));
            if solve(node, kids, idx + 1, used, cyclic) {
                return true;
            }
            node.children.pop();
            used[e] = false;
        }
    }
    false
}

// The transposition added to `q` to form `kid`: the two positions where
// the words differ.
fn new_pair(q: &SignedPerm, kid: &SignedPerm) -> (usize, usize) {
    let diff: Vec<usize> = (1..=q.rank())
        .filter(|&i| q.word()[i - 1] != kid.word()[i - 1])
        .collect();
    debug_assert_eq!(diff.len(), 2);
    (diff[0], diff[1])
}

// Gray path over all sign assignments of `p`, entering at the assignment
// matching `h` and leaving at the one matching `h2`. The path is the
// reflected Gray code translated to start at the entry word, with the
// wrap coordinate swapped onto the coordinate moved by the host edge.
fn child_sequence(p: &SignedPerm, h: &BinaryWord, h2: &BinaryWord) -> Vec<BinaryWord> {
    let coords = logical_coords(p);
    let m = coords.len();
    let project = |g: &BinaryWord| -> Vec<u8> {
        coords.iter().map(|c| g.bit(c.positions()[0])).collect()
    };
    let start = project(h);
    let end = project(h2);
    let moved: Vec<usize> = (0..m).filter(|&c| start[c] != end[c]).collect();
    debug_assert_eq!(moved.len(), 1, "host edge must move one coordinate");
    let c = moved[0];
    let gray = brgc(m).expect("m >= 1");
    let n = p.rank();
    gray.iter()
        .map(|g| {
            let mut bits = BinaryWord::zeros(n);
            for (ci, coord) in coords.iter().enumerate() {
                // swap logical axis 0 (the one the Gray code closes on)
                // with the host-moved axis c
                let gi = if ci == c {
                    0
                } else if ci == 0 {
                    c
                } else {
                    ci
                };
                let v = gray_bit(g, gi) ^ start[ci];
                if v == 1 {
                    for &pos in coord.positions() {
                        bits.set_bit(pos, 1);
                    }
                }
            }
            bits
        })
        .collect()
}

fn gray_bit(g: &BinaryWord, idx: usize) -> u8 {
    g.bit(idx + 1)
}

fn render(node: &PNode, out: &mut Vec<SignedPerm>) {
    let mut next_child = node.children.iter().peekable();
    for (i, g) in node.seq.iter().enumerate() {
        out.push(apply_signs(&node.p, g));
        while next_child.peek().is_some_and(|(e, _)| *e == i) {
            let (_, kid) = next_child.next().unwrap();
            render(kid, out);
        }
    }
}

// unused helper kept for clarity of the coordinate layout
#[allow(dead_code)]
fn pair_count(coords: &[SignCoord]) -> usize {
    coords.iter().filter(|c| c.is_pair()).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count;

    #[test]
    fn rank_two_trigger_is_cyclic_distance_two() {
        let code = optimal_code_b(2).unwrap();
        assert_eq!(code.len(), 6);
        for (u, v) in code.cyclic_pairs() {
            assert!(u.hamming(v) <= 2);
        }
    }

    #[test]
    fn sizes_match_counts() {
        for n in 2..=5 {
            let code = optimal_code_b(n).unwrap();
            let expected: u64 = count(GroupType::B, n).unwrap().try_into().unwrap();
            assert_eq!(code.len() as u64, expected, "rank {n}");
        }
    }

    #[test]
    fn cyclic_distance_at_most_two() {
        for n in 3..=5 {
            let code = optimal_code_b(n).unwrap();
            for (u, v) in code.cyclic_pairs() {
                assert!(
                    u.hamming(v) <= 2,
                    "rank {n}: {u} -> {v} at distance {}",
                    u.hamming(v)
                );
            }
        }
    }

    #[test]
    fn starts_at_the_identity() {
        for n in 2..=5 {
            assert!(optimal_code_b(n).unwrap().entries()[0].is_identity());
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            optimal_code_b(7),
            Err(Error::CapExceeded { .. })
        ));
        assert!(optimal_code_b(1).is_err());
    }
}
