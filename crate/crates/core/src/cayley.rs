//! Reflection words, the connecting sets for types A, B and D, and
//! Cayley-edge verification of codes.
//!
//! Edges of the Cayley graph are pairs `{w, w·t}` for `t` in an
//! inverse-closed connecting set `T`. Membership is decided on realized
//! group elements, never on generator words, so distinct words realizing
//! the same element are deduplicated.

use std::collections::HashMap;

use crate::code::CodeList;
use crate::error::{Error, Result};
use crate::perm::{GroupType, SignedPerm};
use crate::recursive::coverage_report;
use crate::report::ValidationReport;

/// Bit labels for the four subsets of a connecting set.
pub const X1: u8 = 1;
pub const X2: u8 = 2;
pub const X3: u8 = 4;
pub const X4: u8 = 8;
pub const X_ALL: u8 = X1 | X2 | X3 | X4;

/// Simple generator `s_i` of the given type at rank `n`.
pub fn simple_generator(group: GroupType, i: usize, n: usize) -> Result<SignedPerm> {
    let bad = |what| Error::RankOutOfRange {
        what,
        rank: i,
        min: 1,
        max: n,
    };
    let mut word: Vec<i32> = (1..=n as i32).collect();
    match group {
        GroupType::A => {
            if i < 1 || i >= n {
                return Err(bad("type A simple generator"));
            }
            word.swap(i - 1, i);
        }
        GroupType::B => {
            if i < 1 || i > n {
                return Err(bad("type B simple generator"));
            }
            if i < n {
                word.swap(i - 1, i);
            } else {
                word[n - 1] = -(n as i32);
            }
        }
        GroupType::D => {
            if i < 1 || i > n || n < 2 {
                return Err(bad("type D simple generator"));
            }
            if i < n {
                word.swap(i - 1, i);
            } else {
                word[n - 2] = -(n as i32);
                word[n - 1] = -(n as i32 - 1);
            }
        }
    }
    Ok(SignedPerm::from_word(word).expect("generator word is valid"))
}

/// The reflection `t_{i,j}` realized by composing its defining word of
/// simple generators.
///
/// For `j < n` this is the palindrome `s_i … s_j … s_i` in every type; for
/// `j = n` types B and D use their own tail (`s_n` resp. `s_{n-1} s_n`).
pub fn reflection(group: GroupType, i: usize, j: usize, n: usize) -> Result<SignedPerm> {
    let out_of_range = Err(Error::RankOutOfRange {
        what: "reflection index",
        rank: j,
        min: i,
        max: n,
    });
    if i < 1 || j < i {
        return out_of_range;
    }
    let chain = |lo: usize, hi: usize| -> Result<Vec<SignedPerm>> {
        (lo..=hi).map(|k| simple_generator(group, k, n)).collect()
    };
    let word: Vec<SignedPerm> = match group {
        GroupType::A => {
            if j > n - 1 {
                return out_of_range;
            }
            let up = chain(i, j)?;
            let down = chain(i, j.saturating_sub(1))?;
            up.into_iter().chain(down.into_iter().rev()).collect()
        }
        GroupType::B => {
            if j > n {
                return out_of_range;
            }
            let up = chain(i, j)?;
            let down = chain(i, j.saturating_sub(1))?;
            up.into_iter().chain(down.into_iter().rev()).collect()
        }
        GroupType::D => {
            if j > n || (j == n && i == n) {
                return out_of_range;
            }
            if j < n {
                let up = chain(i, j)?;
                let down = chain(i, j.saturating_sub(1))?;
                up.into_iter().chain(down.into_iter().rev()).collect()
            } else {
                // t_{i,n} = s_i ... s_{n-2} (s_{n-1} s_n) s_{n-2} ... s_i
                let up = chain(i, n)?;
                let down = chain(i, n.saturating_sub(2))?;
                up.into_iter().chain(down.into_iter().rev()).collect()
            }
        }
    };
    let mut t = SignedPerm::identity(n);
    for g in word {
        t = t.compose(&g);
    }
    Ok(t)
}

/// A labeled connecting set `T = X1 ∪ X2 ∪ X3 ∪ X4`.
///
/// X1 holds the single reflections, the other subsets the products of
/// reflections matching the move vocabulary of the codes: paired sign
/// flips (X2), transpositions carrying sign changes (X3) and rotations of
/// three letters with up to two sign changes (X4). The printed index
/// ranges in the source material omit a few boundary elements that the
/// codes themselves use (sign pairs touching the last letter, flip-dressed
/// rotations in type B); the ranges here include them, keeping the set
/// closed under inverses.
pub struct GeneratorSet {
    group: GroupType,
    rank: usize,
    subsets: [Vec<SignedPerm>; 4],
    index: HashMap<Vec<i32>, u8>,
}

impl GeneratorSet {
    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn subset(&self, label: u8) -> &[SignedPerm] {
        match label {
            X1 => &self.subsets[0],
            X2 => &self.subsets[1],
            X3 => &self.subsets[2],
            X4 => &self.subsets[3],
            _ => panic!("subset label must be one of X1..X4"),
        }
    }

    /// All distinct elements of the union.
    pub fn elements(&self) -> impl Iterator<Item = SignedPerm> + '_ {
        self.index
            .keys()
            .map(|w| SignedPerm::from_word(w.clone()).expect("indexed word"))
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn contains(&self, g: &SignedPerm) -> bool {
        self.index.contains_key(g.word())
    }

    /// Membership restricted to the subsets selected by `mask`.
    pub fn contains_within(&self, g: &SignedPerm, mask: u8) -> bool {
        self.index.get(g.word()).is_some_and(|m| m & mask != 0)
    }
}

fn push(
    subsets: &mut [Vec<SignedPerm>; 4],
    index: &mut HashMap<Vec<i32>, u8>,
    label_bit: u8,
    g: SignedPerm,
) {
    if g.is_identity() {
        return;
    }
    let slot = label_bit.trailing_zeros() as usize;
    let entry = index.entry(g.word().to_vec()).or_insert(0);
    if *entry & label_bit == 0 {
        *entry |= label_bit;
        subsets[slot].push(g);
    }
}

/// Builds the connecting set `T^ψ` of the given type and rank.
pub fn generating_set(group: GroupType, n: usize) -> Result<GeneratorSet> {
    let min = match group {
        GroupType::A => 2,
        GroupType::B => 2,
        GroupType::D => 2,
    };
    if n < min {
        return Err(Error::RankOutOfRange {
            what: "generating set",
            rank: n,
            min,
            max: usize::MAX,
        });
    }
    let mut subsets: [Vec<SignedPerm>; 4] = Default::default();
    let mut index = HashMap::new();
    let t = |i: usize, j: usize| reflection(group, i, j, n);

    // single-letter sign flip as an element (types B, D realize it
    // differently; for D only letter pairs flip, handled below)
    let flip_b = |a: usize| -> Result<SignedPerm> {
        if a < n {
            reflection(GroupType::B, a, n, n)
        } else {
            simple_generator(GroupType::B, n, n)
        }
    };
    // element flipping the signs of exactly the letters a and b
    let pair_flip = |a: usize, b: usize| -> Result<SignedPerm> {
        debug_assert!(a != b);
        match group {
            GroupType::B => Ok(flip_b(a)?.compose(&flip_b(b)?)),
            GroupType::D => {
                if b == n {
                    t(a, n)
                } else if a == n {
                    t(b, n)
                } else {
                    Ok(t(a, n)?.compose(&t(b, n)?))
                }
            }
            GroupType::A => unreachable!("type A has no sign flips"),
        }
    };

    match group {
        GroupType::A => {
            for i in 1..=n - 1 {
                for j in i..=n - 1 {
                    push(&mut subsets, &mut index, X1, t(i, j)?);
                }
            }
            for i in 1..n {
                for j in i + 1..n {
                    for k in j + 1..=n {
                        let a = t(i, j - 1)?;
                        let b = t(j, k - 1)?;
                        push(&mut subsets, &mut index, X2, a.compose(&b));
                        push(&mut subsets, &mut index, X2, b.compose(&a));
                    }
                }
            }
        }
        GroupType::B => {
            for i in 1..=n {
                for j in i..=n {
                    push(&mut subsets, &mut index, X1, t(i, j)?);
                }
            }
            // barred transpositions are reflections too; codes reach them
            // at the cyclic closure of the barred endpoint
            for a in 1..n {
                for b in a + 1..=n {
                    let barred = t(a, b - 1)?.compose(&pair_flip(a, b)?);
                    push(&mut subsets, &mut index, X1, barred);
                }
            }
            for i in 1..=n {
                for j in i + 1..=n {
                    push(&mut subsets, &mut index, X2, pair_flip(i, j)?);
                }
            }
            for i in 1..=n - 1 {
                for j in i..=n - 1 {
                    let tr = t(i, j)?;
                    let fl = flip_b(j + 1)?;
                    push(&mut subsets, &mut index, X3, tr.compose(&fl));
                    push(&mut subsets, &mut index, X3, fl.compose(&tr));
                }
            }
            rotation_products(&mut subsets, &mut index, n, &pair_flip, &t)?;
        }
        GroupType::D => {
            for i in 1..=n - 1 {
                for j in i..=n - 1 {
                    push(&mut subsets, &mut index, X1, t(i, j)?);
                }
            }
            // barred transpositions, the other reflection class of type D
            for a in 1..n {
                for b in a + 1..=n {
                    let barred = t(a, b - 1)?.compose(&pair_flip(a, b)?);
                    push(&mut subsets, &mut index, X1, barred);
                }
            }
            // paired sign flips: t_{i,n} flips letters i and n; products
            // t_{i,n} t_{j,n} flip letters i and j
            for i in 1..=n - 1 {
                for j in i + 1..=n {
                    push(&mut subsets, &mut index, X2, pair_flip(i, j)?);
                }
            }
            // transposition of letters (i, j+1) dressed with a sign pair on
            // j+1 and a further letter; keeps the even sign count
            for i in 1..=n - 1 {
                for j in i..=n - 1 {
                    let tr = t(i, j)?;
                    for c in 1..=n {
                        if c == i || c == j + 1 {
                            continue;
                        }
                        let f = pair_flip(j + 1, c)?;
                        push(&mut subsets, &mut index, X3, tr.compose(&f));
                        push(&mut subsets, &mut index, X3, f.compose(&tr));
                    }
                }
            }
            rotation_products(&mut subsets, &mut index, n, &pair_flip, &t)?;
        }
    }

    Ok(GeneratorSet {
        group,
        rank: n,
        subsets,
        index,
    })
}

// X4: both rotations on letters i<j<k, bare and composed with a paired
// sign flip on each two-element subset of {i, j, k}.
fn rotation_products(
    subsets: &mut [Vec<SignedPerm>; 4],
    index: &mut HashMap<Vec<i32>, u8>,
    n: usize,
    pair_flip: &dyn Fn(usize, usize) -> Result<SignedPerm>,
    t: &dyn Fn(usize, usize) -> Result<SignedPerm>,
) -> Result<()> {
    for i in 1..n {
        for j in i + 1..n {
            for k in j + 1..=n {
                let a = t(i, j - 1)?;
                let b = t(j, k - 1)?;
                for rot in [b.compose(&a), a.compose(&b)] {
                    push(subsets, index, X4, rot.clone());
                    for (p, q) in [(i, j), (i, k), (j, k)] {
                        push(subsets, index, X4, rot.compose(&pair_flip(p, q)?));
                    }
                }
            }
        }
    }
    Ok(())
}

/// True iff `u != v` and `u^{-1} v` is a member of `T`.
pub fn is_edge(u: &SignedPerm, v: &SignedPerm, t: &GeneratorSet) -> bool {
    assert_eq!(u.rank(), v.rank(), "rank mismatch in edge test");
    u != v && t.contains(&u.inverse().compose(v))
}

/// Edge test restricted to the subsets selected by `mask`.
pub fn is_edge_within(u: &SignedPerm, v: &SignedPerm, t: &GeneratorSet, mask: u8) -> bool {
    assert_eq!(u.rank(), v.rank(), "rank mismatch in edge test");
    u != v && t.contains_within(&u.inverse().compose(v), mask)
}

/// Checks that the list visits every involution exactly once and that all
/// cyclically consecutive pairs are Cayley edges for `T`.
pub fn verify_hamilton_cycle(list: &CodeList, t: &GeneratorSet) -> ValidationReport {
    verify_hamilton_within(list, t, X_ALL)
}

/// As `verify_hamilton_cycle`, with the edge test restricted to `mask`.
pub fn verify_hamilton_within(list: &CodeList, t: &GeneratorSet, mask: u8) -> ValidationReport {
    let mut report = ValidationReport::default();
    if list.group() != t.group() || list.rank() != t.rank() {
        report.push(0, "generator set does not match the list type/rank");
        return report;
    }
    coverage_report(list, &mut report);
    if list.len() > 1 {
        for (i, (u, v)) in list.cyclic_pairs().enumerate() {
            if !is_edge_within(u, v, t, mask) {
                report.push(i, format!("pair {u} -> {v} is not a Cayley edge"));
            }
        }
    }
    report
}
