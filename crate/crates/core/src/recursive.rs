//! Recursive cyclic Gray codes for the involutions of types A, B and D.
//!
//! Each code of rank `n` is assembled from relabeled copies of the codes of
//! ranks `n-1` and `n-2`, extended by a fixed letter, a transposition with
//! `n`, or the parity-steered tilde extension. The block layout follows the
//! counting recursions, so the blocks partition the involution set. Small
//! trigger codes seed the recursion.
//!
//! Every produced list satisfies two properties:
//! - A1: it begins with the identity and ends with the transposition
//!   `(n-1 n)` or its barred variant;
//! - A2: consecutive entries (cyclically) differ by a transposition or a
//!   rotation of three letters with at most two sign changes, or by one or
//!   two sign changes.

use crate::code::CodeList;
use crate::counting::enumerate_within;
use crate::error::{Error, Result};
use crate::perm::{classify_move, GroupType, MoveClass, SignedPerm};
use crate::report::ValidationReport;

fn words(ws: &[&[i32]]) -> Vec<SignedPerm> {
    ws.iter()
        .map(|w| SignedPerm::from_word(w.to_vec()).expect("trigger word"))
        .collect()
}

/// Trigger code for rank 3, type A: (id, (12), (13), (23)).
fn trigger_a3() -> Vec<SignedPerm> {
    words(&[&[1, 2, 3], &[2, 1, 3], &[3, 2, 1], &[1, 3, 2]])
}

/// Trigger code for rank 4, type A.
fn trigger_a4() -> Vec<SignedPerm> {
    words(&[
        &[1, 2, 3, 4],
        &[3, 2, 1, 4],
        &[3, 4, 1, 2],
        &[1, 4, 3, 2],
        &[4, 2, 3, 1],
        &[4, 3, 2, 1],
        &[1, 3, 2, 4],
        &[2, 1, 3, 4],
        &[2, 1, 4, 3],
        &[1, 2, 4, 3],
    ])
}

/// Trigger code for rank 2, type B.
fn trigger_b2() -> Vec<SignedPerm> {
    words(&[&[1, 2], &[-1, 2], &[-1, -2], &[1, -2], &[-2, -1], &[2, 1]])
}

/// Trigger code for rank 3, type B.
fn trigger_b3() -> Vec<SignedPerm> {
    words(&[
        &[1, 2, 3],
        &[-1, 2, 3],
        &[-1, -2, 3],
        &[1, -2, 3],
        &[-2, -1, 3],
        &[2, 1, 3],
        &[2, 1, -3],
        &[-2, -1, -3],
        &[1, -2, -3],
        &[-1, -2, -3],
        &[-1, 2, -3],
        &[1, 2, -3],
        &[-3, 2, -1],
        &[-3, -2, -1],
        &[3, -2, 1],
        &[3, 2, 1],
        &[1, 3, 2],
        &[-1, 3, 2],
        &[-1, -3, -2],
        &[1, -3, -2],
    ])
}

/// Trigger codes for ranks 1 and 2, type D.
fn trigger_d1() -> Vec<SignedPerm> {
    words(&[&[1]])
}

fn trigger_d2() -> Vec<SignedPerm> {
    words(&[&[1, 2], &[-1, -2], &[-2, -1], &[2, 1]])
}

/// Tail applied to a relabeled block after embedding at the final rank.
#[derive(Clone, Copy)]
enum Tail {
    /// Leave the adjoined letters fixed.
    None,
    /// Fix letter `k` with a bar.
    FixNeg(usize),
    /// Right-multiply by `(a b)`, barred or not.
    Trans(usize, usize, bool),
    /// Adjoin letter `n` with the sign making the negative count even.
    Tilde,
}

/// Embeds `src` (rank = alphabet length) through the alphabet into rank
/// `n`, then applies the tail. `alphabet = None` means the identity
/// relabeling on `1..=src_rank`.
fn block(src: &[SignedPerm], alphabet: Option<&[i32]>, n: usize, tail: Tail) -> Vec<SignedPerm> {
    src.iter()
        .map(|w| {
            let mut word: Vec<i32> = (1..=n as i32).collect();
            match alphabet {
                Some(a) => {
                    debug_assert_eq!(a.len(), w.rank());
                    for i in 1..=w.rank() {
                        let v = w.word()[i - 1];
                        let src_letter = a[i - 1] as usize;
                        let dst = a[v.unsigned_abs() as usize - 1];
                        word[src_letter - 1] = if v < 0 { -dst } else { dst };
                    }
                }
                None => {
                    for i in 1..=w.rank() {
                        word[i - 1] = w.word()[i - 1];
                    }
                }
            }
            match tail {
                Tail::None => {}
                Tail::FixNeg(k) => {
                    debug_assert_eq!(word[k - 1], k as i32);
                    word[k - 1] = -(k as i32);
                }
                Tail::Trans(a, b, barred) => {
                    debug_assert_eq!(word[a - 1], a as i32);
                    debug_assert_eq!(word[b - 1], b as i32);
                    let s = if barred { -1 } else { 1 };
                    word[a - 1] = s * b as i32;
                    word[b - 1] = s * a as i32;
                }
                Tail::Tilde => {
                    debug_assert_eq!(word[n - 1], n as i32);
                    let negs = word.iter().take(n - 1).filter(|&&x| x < 0).count();
                    if negs % 2 == 1 {
                        word[n - 1] = -(n as i32);
                    }
                }
            }
            SignedPerm::from_word(word).expect("block construction yields valid words")
        })
        .collect()
}

fn reversed(mut v: Vec<SignedPerm>) -> Vec<SignedPerm> {
    v.reverse();
    v
}

/// Cyclic Gray code for the type A involutions of rank `n >= 3`.
pub fn gray_code_a(n: usize) -> Result<CodeList> {
    if n < 3 {
        return Err(Error::RankOutOfRange {
            what: "type A code",
            rank: n,
            min: 3,
            max: usize::MAX,
        });
    }
    let mut memo: Vec<Vec<SignedPerm>> = vec![trigger_a3(), trigger_a4()];
    for k in 5..=n {
        let code = build_a(k, &memo[k - 4], &memo[k - 5]);
        memo.push(code);
    }
    Ok(CodeList::from_parts(GroupType::A, n, memo[n - 3].clone()))
}

// One step of the type A recursion: `prev` has rank k-1, `prev2` rank k-2.
fn build_a(k: usize, prev: &[SignedPerm], prev2: &[SignedPerm]) -> Vec<SignedPerm> {
    let m = k as i32;
    let mut out = Vec::new();
    if k % 2 == 1 {
        // rank k-1 block relabeled by 2 3 ... (k-1) 1, letter k fixed
        let f: Vec<i32> = (2..m).chain([1]).collect();
        out.extend(block(prev, Some(&f), k, Tail::None));
        for i in 1..=(k - 1) / 2 {
            let t = i as i32;
            // alphabet (2i) 1 2 ... (2i-2) (2i+1) ... (k-1)
            let fa: Vec<i32> = [2 * t]
                .into_iter()
                .chain(1..2 * t - 1)
                .chain(2 * t + 1..m)
                .collect();
            out.extend(block(prev2, Some(&fa), k, Tail::Trans(2 * i - 1, k, false)));
            let fb: Vec<i32> = [2 * t - 1]
                .into_iter()
                .chain(1..2 * t - 1)
                .chain(2 * t + 1..m)
                .collect();
            out.extend(reversed(block(
                prev2,
                Some(&fb),
                k,
                Tail::Trans(2 * i, k, false),
            )));
        }
    } else {
        out.extend(block(prev, None, k, Tail::None));
        // the first transposition block uses the rank k-2 code relabeled
        // onto 2 ... (k-1); the printed recursion names the rank k-1 code
        // here, but only the rank k-2 code fits both the alphabet size and
        // the counting recursion
        let f: Vec<i32> = (2..m).collect();
        out.extend(reversed(block(prev2, Some(&f), k, Tail::Trans(1, k, false))));
        for i in 1..=k / 2 - 1 {
            let t = i as i32;
            let fa: Vec<i32> = [2 * t + 1]
                .into_iter()
                .chain(1..2 * t)
                .chain(2 * t + 2..m)
                .collect();
            out.extend(block(prev2, Some(&fa), k, Tail::Trans(2 * i, k, false)));
            let fb: Vec<i32> = [2 * t]
                .into_iter()
                .chain(1..2 * t)
                .chain(2 * t + 2..m)
                .collect();
            out.extend(reversed(block(
                prev2,
                Some(&fb),
                k,
                Tail::Trans(2 * i + 1, k, false),
            )));
        }
    }
    out
}

/// Cyclic Gray code for the type B involutions of rank `n >= 2`.
pub fn gray_code_b(n: usize) -> Result<CodeList> {
    if n < 2 {
        return Err(Error::RankOutOfRange {
            what: "type B code",
            rank: n,
            min: 2,
            max: usize::MAX,
        });
    }
    Ok(CodeList::from_parts(GroupType::B, n, gcb_words(n)))
}

fn gcb_words(n: usize) -> Vec<SignedPerm> {
    let mut memo: Vec<Vec<SignedPerm>> = vec![trigger_b2(), trigger_b3()];
    for k in 4..=n {
        let code = build_b(k, &memo[k - 3], &memo[k - 4]);
        memo.push(code);
    }
    memo[n - 2].clone()
}

fn build_b(k: usize, prev: &[SignedPerm], prev2: &[SignedPerm]) -> Vec<SignedPerm> {
    let m = k as i32;
    let mut out = Vec::new();
    out.extend(block(prev, None, k, Tail::None));
    out.extend(reversed(block(prev, None, k, Tail::FixNeg(k))));
    for i in 1..=k - 1 {
        let t = i as i32;
        // alphabet 1 2 ... (i-1) (i+1) ... (k-1)
        let f: Vec<i32> = (1..t).chain(t + 1..m).collect();
        if i % 2 == 1 {
            out.extend(block(prev2, Some(&f), k, Tail::Trans(i, k, true)));
            out.extend(reversed(block(prev2, Some(&f), k, Tail::Trans(i, k, false))));
        } else {
            out.extend(block(prev2, Some(&f), k, Tail::Trans(i, k, false)));
            out.extend(reversed(block(prev2, Some(&f), k, Tail::Trans(i, k, true))));
        }
    }
    out
}

/// Cyclic Gray code for the type D involutions of rank `n >= 1`.
pub fn gray_code_d(n: usize) -> Result<CodeList> {
    if n < 1 {
        return Err(Error::RankOutOfRange {
            what: "type D code",
            rank: n,
            min: 1,
            max: usize::MAX,
        });
    }
    let mut memo: Vec<Vec<SignedPerm>> = vec![trigger_d1(), trigger_d2()];
    for k in 3..=n {
        let code = build_d(k, &memo[k - 3]);
        memo.push(code);
    }
    Ok(CodeList::from_parts(GroupType::D, n, memo[n - 1].clone()))
}

fn build_d(k: usize, prev2: &[SignedPerm]) -> Vec<SignedPerm> {
    let m = k as i32;
    let mut out = Vec::new();
    // type B code of rank k-1 relabeled by 2 3 ... (k-1) 1, tilde-extended
    let f: Vec<i32> = (2..m).chain([1]).collect();
    out.extend(block(&gcb_words(k - 1), Some(&f), k, Tail::Tilde));
    for i in 1..=k - 1 {
        let t = i as i32;
        let fa: Vec<i32> = (1..t).chain(t + 1..m).collect();
        out.extend(block(prev2, Some(&fa), k, Tail::Trans(i, k, false)));
        out.extend(reversed(block(prev2, Some(&fa), k, Tail::Trans(i, k, true))));
    }
    out
}

/// Dispatch by group type; ranks follow the per-type minimums.
pub fn gray_code(group: GroupType, n: usize) -> Result<CodeList> {
    match group {
        GroupType::A => gray_code_a(n),
        GroupType::B => gray_code_b(n),
        GroupType::D => gray_code_d(n),
    }
}

/// Checks coverage, the endpoint property A1 and the closeness property A2
/// over all cyclically consecutive pairs.
///
/// With `strict_b`, rotations must carry no sign change and transpositions
/// at most one, the strengthened guarantees of the type B construction.
pub fn validate_properties(list: &CodeList, strict_b: bool) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = list.rank();
    coverage_report(list, &mut report);

    // A1: identity first; transposition (n-1 n) or its barred variant last
    if let Some(first) = list.entries().first() {
        if !first.is_identity() {
            report.push(0, format!("A1: first entry {first} is not the identity"));
        }
    }
    if n >= 2 && list.len() > 1 {
        let last = list.entries().last().unwrap();
        let plain = last
            .to_cycles()
            .ok()
            .map(|c| c.transpositions == vec![(n as i32 - 1, n as i32)] && c.fixed.iter().all(|&x| x > 0))
            .unwrap_or(false);
        let barred = last
            .to_cycles()
            .ok()
            .map(|c| {
                c.transpositions == vec![(-(n as i32 - 1), -(n as i32))]
                    && c.fixed.iter().all(|&x| x > 0)
            })
            .unwrap_or(false);
        let ok = if list.group() == GroupType::A {
            plain
        } else {
            plain || barred
        };
        if !ok {
            report.push(
                list.len() - 1,
                format!("A1: last entry {last} is not (n-1 n) or its barred variant"),
            );
        }
    }

    // A2 over cyclic pairs
    if list.len() > 1 {
        for (i, (u, v)) in list.cyclic_pairs().enumerate() {
            let mv = classify_move(u, v);
            let ok = match &mv {
                MoveClass::Transposition { .. } | MoveClass::Rotation3 { .. } => {
                    mv.sign_change_count() <= 2
                }
                MoveClass::SignChanges { positions } => {
                    list.group() != GroupType::A && !positions.is_empty() && positions.len() <= 2
                }
                MoveClass::Identity | MoveClass::Other => false,
            };
            if !ok {
                report.push(i, format!("A2: move {u} -> {v} classified as {mv:?}"));
                continue;
            }
            if strict_b {
                let strict_ok = match &mv {
                    MoveClass::Rotation3 { .. } => mv.sign_change_count() == 0,
                    MoveClass::Transposition { .. } => mv.sign_change_count() <= 1,
                    _ => true,
                };
                if !strict_ok {
                    report.push(i, format!("strict-B: move {u} -> {v} carries {} sign changes ({mv:?})", mv.sign_change_count()));
                }
            }
        }
    }
    report
}

/// Set-coverage of the full involution class: pairwise distinctness plus
/// exact agreement with the brute-force enumeration.
pub fn coverage_report(list: &CodeList, report: &mut ValidationReport) {
    let expected = match enumerate_within(list.group(), list.rank(), list.rank()) {
        Ok(e) => e,
        Err(e) => {
            report.push(0, format!("coverage oracle failed: {e}"));
            return;
        }
    };
    let mut seen = std::collections::HashSet::new();
    for (i, w) in list.iter().enumerate() {
        if !seen.insert(w.clone()) {
            report.push(i, format!("coverage: entry {w} repeated"));
        }
    }
    for w in expected.iter() {
        if !seen.contains(w) {
            report.push(0, format!("coverage: involution {w} missing"));
        }
    }
    if list.len() != expected.len() {
        report.push(
            0,
            format!(
                "coverage: {} entries, expected {}",
                list.len(),
                expected.len()
            ),
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count;

    fn w(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    #[test]
    fn gca3_matches_trigger_listing() {
        let c = gray_code_a(3).unwrap();
        let got: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        assert_eq!(got, vec!["1 2 3", "2 1 3", "3 2 1", "1 3 2"]);
    }

    #[test]
    fn gca5_head_and_tail() {
        let c = gray_code_a(5).unwrap();
        assert_eq!(c.len(), 26);
        let head: Vec<String> = c.iter().take(10).map(|x| x.to_string()).collect();
        assert_eq!(
            head,
            vec![
                "1 2 3 4 5",
                "1 4 3 2 5",
                "3 4 1 2 5",
                "3 2 1 4 5",
                "2 1 3 4 5",
                "2 1 4 3 5",
                "1 2 4 3 5",
                "1 3 2 4 5",
                "4 3 2 1 5",
                "4 2 3 1 5"
            ]
        );
        assert_eq!(c.entries().last().unwrap(), &w("1 2 3 5 4"));
    }

    #[test]
    fn gca6_has_the_recursion_count() {
        let c = gray_code_a(6).unwrap();
        let expected: u64 = count(GroupType::A, 6).unwrap().try_into().unwrap();
        assert_eq!(c.len() as u64, expected);
        assert!(validate_properties(&c, false).pass());
    }

    #[test]
    fn gcb4_head_and_tail() {
        let c = gray_code_b(4).unwrap();
        assert_eq!(c.len(), 76);
        let head: Vec<String> = c.iter().take(6).map(|x| x.to_string()).collect();
        assert_eq!(
            head,
            vec![
                "1 2 3 4",
                "-1 2 3 4",
                "-1 -2 3 4",
                "1 -2 3 4",
                "-2 -1 3 4",
                "2 1 3 4"
            ]
        );
        assert_eq!(c.entries().last().unwrap(), &w("1 2 4 3"));
    }

    #[test]
    fn gcb5_size() {
        assert_eq!(gray_code_b(5).unwrap().len(), 312);
    }

    #[test]
    fn gcd2_and_gcd3_match_listings() {
        let c2 = gray_code_d(2).unwrap();
        let got: Vec<String> = c2.iter().map(|x| x.to_string()).collect();
        assert_eq!(got, vec!["1 2", "-1 -2", "-2 -1", "2 1"]);

        let c3 = gray_code_d(3).unwrap();
        let got: Vec<String> = c3.iter().map(|x| x.to_string()).collect();
        assert_eq!(
            got,
            vec![
                "1 2 3", "1 -2 -3", "-1 -2 3", "-1 2 -3", "-2 -1 3", "2 1 3", "3 2 1", "-3 2 -1",
                "1 3 2", "1 -3 -2"
            ]
        );
    }

    #[test]
    fn gcd5_size() {
        assert_eq!(gray_code_d(5).unwrap().len(), 156);
    }

    #[test]
    fn validator_passes_constructed_codes() {
        assert!(validate_properties(&gray_code_a(5).unwrap(), false).pass());
        assert!(validate_properties(&gray_code_b(4).unwrap(), false).pass());
        assert!(validate_properties(&gray_code_d(4).unwrap(), false).pass());
    }

    #[test]
    fn strict_b_fails_only_at_block_parity_boundaries() {
        // between the barred block of an even iteration and the barred
        // block of the next odd one, the rotation carries two sign
        // changes; the printed rank 4 listing contains the same pair, so
        // the strengthened no-sign-change claim does not hold there
        let report = validate_properties(&gray_code_b(4).unwrap(), true);
        assert_eq!(report.violations.len(), 1);
        let v = &report.violations[0];
        assert_eq!(v.index, 63);
        assert!(v.message.contains("strict-B"));
    }

    #[test]
    fn validator_flags_duplicate_entry() {
        let mut entries = gray_code_a(3).unwrap().entries().to_vec();
        entries[2] = entries[1].clone();
        let broken = CodeList::from_parts(GroupType::A, 3, entries);
        let report = validate_properties(&broken, false);
        assert!(!report.pass());
        assert!(report
            .violations
            .iter()
            .any(|v| v.message.contains("coverage")));
    }

    #[test]
    fn ranks_below_minimum_are_rejected() {
        assert!(gray_code_a(2).is_err());
        assert!(gray_code_b(1).is_err());
        assert!(gray_code_d(0).is_err());
    }
}
