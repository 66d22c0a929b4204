//! Involution counting: the defining recursions and a brute-force
//! enumeration that serves as the independent oracle for them.

use num_bigint::BigUint;

use crate::code::CodeList;
use crate::error::{Error, Result};
use crate::perm::{GroupType, SignedPerm};

/// Default enumeration caps, chosen so each call finishes well under a
/// minute. They are a guard for the CLI; validators enumerate at the rank
/// of the list under test.
pub const DEFAULT_CAP_A: usize = 8;
pub const DEFAULT_CAP_B: usize = 7;
pub const DEFAULT_CAP_D: usize = 7;

pub fn default_cap(group: GroupType) -> usize {
    match group {
        GroupType::A => DEFAULT_CAP_A,
        GroupType::B => DEFAULT_CAP_B,
        GroupType::D => DEFAULT_CAP_D,
    }
}

/// Number of involutions of the given type and rank, by the recursions
/// i^A_n = i^A_{n-1} + (n-1) i^A_{n-2},
/// i^B_{n+1} = 2 i^B_n + 2n i^B_{n-1} and
/// i^D_{n+1} = i^B_n + 2n i^D_{n-1}.
///
/// Ranks start at 0 for A and B and at 1 for D.
pub fn count(group: GroupType, n: usize) -> Result<BigUint> {
    let big = |x: usize| BigUint::from(x);
    match group {
        GroupType::A => {
            // i_0 = i_1 = 1
            let mut prev = big(1);
            let mut cur = big(1);
            for k in 2..=n {
                let next = &cur + big(k - 1) * &prev;
                prev = cur;
                cur = next;
            }
            Ok(cur)
        }
        GroupType::B => {
            // i_0 = 1, i_1 = 2
            let mut prev = big(1);
            let mut cur = big(2);
            if n == 0 {
                return Ok(prev);
            }
            for k in 1..n {
                let next = big(2) * &cur + big(2 * k) * &prev;
                prev = cur;
                cur = next;
            }
            Ok(cur)
        }
        GroupType::D => {
            if n == 0 {
                return Err(Error::RankOutOfRange {
                    what: "type D count",
                    rank: 0,
                    min: 1,
                    max: usize::MAX,
                });
            }
            // i_1 = 1, i_2 = 4, then i_{k+1} = i^B_k + 2k i_{k-1}
            let mut prev = big(1);
            let mut cur = big(4);
            if n == 1 {
                return Ok(prev);
            }
            for k in 2..n {
                let next = count(GroupType::B, k)? + big(2 * k) * &prev;
                prev = cur;
                cur = next;
            }
            Ok(cur)
        }
    }
}

/// All involutions of the given type and rank in lexicographic word order,
/// generated by brute-force pairing. Subject to the explicit cap.
pub fn enumerate_within(group: GroupType, n: usize, cap: usize) -> Result<CodeList> {
    if n > cap {
        return Err(Error::CapExceeded {
            group: group.letter(),
            n,
            cap,
        });
    }
    if group == GroupType::D && n == 0 {
        return Err(Error::RankOutOfRange {
            what: "type D enumeration",
            rank: 0,
            min: 1,
            max: cap,
        });
    }
    let mut out = Vec::new();
    let mut word = vec![0i32; n];
    place(group, &mut word, &mut out);
    out.sort_unstable();
    Ok(CodeList::from_parts(group, n, out))
}

/// All involutions of the given type and rank, under the default cap.
pub fn enumerate(group: GroupType, n: usize) -> Result<CodeList> {
    enumerate_within(group, n, default_cap(group))
}

// Fills the smallest unassigned letter either as a (signed) fixed point or
// paired with a larger letter, recursing over the remaining ones.
fn place(group: GroupType, word: &mut Vec<i32>, out: &mut Vec<SignedPerm>) {
    let n = word.len();
    let i = match word.iter().position(|&x| x == 0) {
        None => {
            let w = SignedPerm::from_word(word.clone()).expect("constructed word is valid");
            if group.contains(&w) {
                out.push(w);
            }
            return;
        }
        Some(i) => i,
    };
    let letter = i as i32 + 1;
    let signs: &[i32] = if group == GroupType::A { &[1] } else { &[1, -1] };
    for &s in signs {
        word[i] = s * letter;
        place(group, word, out);
    }
    for j in i + 1..n {
        if word[j] != 0 {
            continue;
        }
        let partner = j as i32 + 1;
        for &s in signs {
            word[i] = s * partner;
            word[j] = s * letter;
            place(group, word, out);
        }
        word[j] = 0;
    }
    word[i] = 0;
}

/// Number of even minus number of odd involutions of the symmetric group of
/// rank `n`, computed by brute force. An involution with `k` transpositions
/// has parity `(-1)^k`.
pub fn even_odd_excess(n: usize) -> Result<i64> {
    let inv = enumerate_within(GroupType::A, n, DEFAULT_CAP_A)?;
    let mut excess: i64 = 0;
    for w in &inv {
        let transpositions = w.to_cycles().expect("enumerated involution").transpositions.len();
        excess += if transpositions % 2 == 0 { 1 } else { -1 };
    }
    Ok(excess)
}
