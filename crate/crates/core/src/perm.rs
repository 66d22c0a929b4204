//! Signed permutations in one-line notation and the moves between them.
//!
//! A signed permutation of rank `n` is a permutation `w` of `{±1, …, ±n}`
//! with `w(-i) = -w(i)`; it is stored as the word `w(1) … w(n)` of signed
//! integers. Types A, B and D are carved out of the same representation by
//! membership predicates. Composition follows the positional convention
//! `(u·v)(i) = u(v(i))`, under which right multiplication by the adjacent
//! transposition `s_i` swaps word positions `i` and `i+1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The three classical families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupType {
    A,
    B,
    D,
}

impl GroupType {
    pub fn letter(self) -> char {
        match self {
            GroupType::A => 'A',
            GroupType::B => 'B',
            GroupType::D => 'D',
        }
    }

    /// Membership of a signed permutation in this family.
    ///
    /// A: every entry positive; B: all signed permutations; D: an even
    /// number of negative entries.
    pub fn contains(self, w: &SignedPerm) -> bool {
        match self {
            GroupType::A => w.word.iter().all(|&x| x > 0),
            GroupType::B => true,
            GroupType::D => w.negative_count() % 2 == 0,
        }
    }
}

impl FromStr for GroupType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(GroupType::A),
            "B" | "b" => Ok(GroupType::B),
            "D" | "d" => Ok(GroupType::D),
            other => Err(Error::InvalidWord(format!("unknown group type {other:?}"))),
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A signed permutation in one-line notation.
///
/// Entry `word[i-1]` is the image of `i`; a negative value is a barred
/// letter. Values are immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    word: Vec<i32>,
}

impl SignedPerm {
    /// Builds a signed permutation from its one-line word, validating that
    /// the absolute values are a permutation of `1..=n`.
    pub fn from_word(word: Vec<i32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &x in &word {
            let a = x.unsigned_abs() as usize;
            if x == 0 || a == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidWord(format!("{word:?}")));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPerm { word })
    }

    /// The identity of rank `n`.
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            word: (1..=n as i32).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    /// Image of the signed letter `i`, extended to negatives by
    /// `w(-i) = -w(i)`. `|i|` must lie in `1..=rank`.
    pub fn image(&self, i: i32) -> i32 {
        let a = i.unsigned_abs() as usize;
        assert!(a >= 1 && a <= self.rank(), "letter {i} out of range");
        let v = self.word[a - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    /// Composition `(self·other)(i) = self(other(i))`.
    ///
    /// Panics on rank mismatch.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        assert_eq!(
            self.rank(),
            other.rank(),
            "rank mismatch in composition: {} vs {}",
            self.rank(),
            other.rank()
        );
        let word = (1..=self.rank() as i32)
            .map(|i| self.image(other.image(i)))
            .collect();
        SignedPerm { word }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut word = vec![0; self.rank()];
        for i in 1..=self.rank() as i32 {
            let v = self.word[i as usize - 1];
            word[v.unsigned_abs() as usize - 1] = if v < 0 { -i } else { i };
        }
        SignedPerm { word }
    }

    pub fn is_identity(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(i, &x)| x == i as i32 + 1)
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }

    pub fn negative_count(&self) -> usize {
        self.word.iter().filter(|&&x| x < 0).count()
    }

    /// Number of one-line positions at which the two words differ.
    ///
    /// Panics on rank mismatch.
    pub fn hamming(&self, other: &SignedPerm) -> usize {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in hamming");
        self.word
            .iter()
            .zip(&other.word)
            .filter(|(a, b)| a != b)
            .count()
    }

    /// The underlying unsigned word `|w(1)| … |w(n)|`.
    pub fn unsigned_word(&self) -> Vec<i32> {
        self.word.iter().map(|x| x.abs()).collect()
    }

    /// Cycle decomposition of an involution; fails on non-involutions.
    pub fn to_cycles(&self) -> Result<CycleForm> {
        if !self.is_involution() {
            return Err(Error::NotInvolution(self.to_string()));
        }
        let mut fixed = Vec::new();
        let mut transpositions = Vec::new();
        for i in 1..=self.rank() as i32 {
            let v = self.word[i as usize - 1];
            let a = v.abs();
            if a == i {
                fixed.push(v);
            } else if a > i {
                // normalized with the smaller letter first; both carry the
                // sign of the image entries
                if v > 0 {
                    transpositions.push((i, a));
                } else {
                    transpositions.push((-i, -a));
                }
            }
        }
        Ok(CycleForm {
            rank: self.rank(),
            fixed,
            transpositions,
        })
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.word {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for SignedPerm {
    type Err = Error;

    /// Parses space-separated signed decimal integers, e.g. `-3 2 -1`.
    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i32>()
                    .map_err(|_| Error::InvalidWord(format!("bad token {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if word.is_empty() {
            return Err(Error::InvalidWord("empty word".into()));
        }
        SignedPerm::from_word(word)
    }
}

/// Disjoint-cycle form of an involution: signed fixed letters plus
/// transpositions `(a b)` with `|a| < |b|` and a common sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleForm {
    pub rank: usize,
    pub fixed: Vec<i32>,
    pub transpositions: Vec<(i32, i32)>,
}

impl CycleForm {
    /// Reassembles the one-line word; rejects overlapping cycles, letters
    /// out of range and mixed signs inside a transposition.
    pub fn to_perm(&self) -> Result<SignedPerm> {
        let n = self.rank;
        let mut word = vec![0i32; n];
        let mut place = |pos: i32, val: i32| -> Result<()> {
            let p = pos.unsigned_abs() as usize;
            if p == 0 || p > n {
                return Err(Error::InvalidCycles(format!("letter {pos} out of range")));
            }
            if word[p - 1] != 0 {
                return Err(Error::InvalidCycles(format!("letter {pos} repeated")));
            }
            word[p - 1] = val;
            Ok(())
        };
        for &x in &self.fixed {
            place(x, x)?;
        }
        for &(a, b) in &self.transpositions {
            if a.signum() != b.signum() || a.abs() >= b.abs() {
                return Err(Error::InvalidCycles(format!("bad transposition ({a} {b})")));
            }
            place(a, b)?;
            place(b, a)?;
        }
        if word.iter().any(|&x| x == 0) {
            return Err(Error::InvalidCycles("cycles do not cover 1..=n".into()));
        }
        SignedPerm::from_word(word)
    }
}

/// A bijection `F(i) = a_i` from `{1,…,m}` onto an alphabet of `m`
/// distinct positive letters, written in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    alphabet: Vec<i32>,
}

impl Relabeling {
    pub fn new(alphabet: Vec<i32>) -> Result<Self> {
        let mut sorted = alphabet.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != alphabet.len() || sorted.first().is_some_and(|&a| a <= 0) {
            return Err(Error::InvalidAlphabet(format!("{alphabet:?}")));
        }
        Ok(Relabeling { alphabet })
    }

    pub fn source_rank(&self) -> usize {
        self.alphabet.len()
    }

    pub fn letters(&self) -> &[i32] {
        &self.alphabet
    }

    /// Relabels the involution `w` through `F`, embedding the result as a
    /// full-rank word in which every letter outside the alphabet is fixed.
    ///
    /// Each cycle `(x y)` becomes `(F(x) F(y))` with signs preserved; a
    /// fixed `x` becomes fixed `F(x)`. The target rank must be at least the
    /// largest alphabet letter.
    pub fn apply(&self, w: &SignedPerm, target_rank: usize) -> SignedPerm {
        assert_eq!(
            w.rank(),
            self.source_rank(),
            "rank mismatch in relabeling: word has rank {}, alphabet has {} letters",
            w.rank(),
            self.source_rank()
        );
        let max = self.alphabet.iter().copied().max().unwrap_or(0) as usize;
        assert!(target_rank >= max, "target rank {target_rank} below alphabet maximum {max}");
        let mut word: Vec<i32> = (1..=target_rank as i32).collect();
        for i in 1..=w.rank() {
            let v = w.word()[i - 1];
            let src = self.alphabet[i - 1];
            let dst = self.alphabet[v.unsigned_abs() as usize - 1];
            word[src as usize - 1] = if v < 0 { -dst } else { dst };
        }
        SignedPerm { word }
    }
}

/// Classification of the difference between two involutions of equal rank.
///
/// `letters_flipped` holds the absolute letter values whose sign differs
/// between the two words; reapplying the move (permute positions, then flip
/// those letters) reproduces the second involution from the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoveClass {
    Identity,
    /// The unsigned words agree; 1 or 2 positions change sign.
    SignChanges { positions: Vec<usize> },
    /// The unsigned words differ by exchanging two positions.
    Transposition {
        positions: (usize, usize),
        letters_flipped: Vec<i32>,
    },
    /// The unsigned words differ by a 3-cycle of positions.
    Rotation3 {
        positions: [usize; 3],
        letters_flipped: Vec<i32>,
    },
    Other,
}

impl MoveClass {
    pub fn sign_change_count(&self) -> usize {
        match self {
            MoveClass::Identity | MoveClass::Other => 0,
            MoveClass::SignChanges { positions } => positions.len(),
            MoveClass::Transposition { letters_flipped, .. } => letters_flipped.len(),
            MoveClass::Rotation3 { letters_flipped, .. } => letters_flipped.len(),
        }
    }

    /// Reapplies the move to `u`. Returns `None` for `Other`.
    pub fn apply(&self, u: &SignedPerm) -> Option<SignedPerm> {
        let n = u.rank();
        let mut word = u.word().to_vec();
        match self {
            MoveClass::Identity => {}
            MoveClass::Other => return None,
            MoveClass::SignChanges { positions } => {
                for &p in positions {
                    word[p - 1] = -word[p - 1];
                }
            }
            MoveClass::Transposition {
                positions: (i, j),
                letters_flipped,
            } => {
                word.swap(i - 1, j - 1);
                flip_letters(&mut word, letters_flipped);
            }
            MoveClass::Rotation3 {
                positions,
                letters_flipped,
            } => {
                // positions holds the cycle p0 -> p1 -> p2 -> p0 of where
                // each entry moves
                let [p0, p1, p2] = *positions;
                let w0 = word[p0 - 1];
                let w1 = word[p1 - 1];
                let w2 = word[p2 - 1];
                word[p1 - 1] = w0;
                word[p2 - 1] = w1;
                word[p0 - 1] = w2;
                flip_letters(&mut word, letters_flipped);
            }
        }
        debug_assert!(word.len() == n);
        Some(SignedPerm { word })
    }
}

fn flip_letters(word: &mut [i32], letters: &[i32]) {
    for x in word.iter_mut() {
        if letters.contains(&x.abs()) {
            *x = -*x;
        }
    }
}

/// Classifies how `v` differs from `u`.
///
/// Sign changes at positions with equal unsigned entries are resolved as
/// `SignChanges` first, so the classification is deterministic. Panics on
/// rank mismatch.
pub fn classify_move(u: &SignedPerm, v: &SignedPerm) -> MoveClass {
    assert_eq!(u.rank(), v.rank(), "rank mismatch in classify_move");
    if u == v {
        return MoveClass::Identity;
    }
    let uu = u.unsigned_word();
    let vu = v.unsigned_word();
    let letters_flipped: Vec<i32> = (1..=u.rank() as i32)
        .filter(|&a| {
            let su = u.word()[uu.iter().position(|&x| x == a).unwrap()];
            let sv = v.word()[vu.iter().position(|&x| x == a).unwrap()];
            su.signum() != sv.signum()
        })
        .collect();
    if uu == vu {
        let positions: Vec<usize> = (1..=u.rank())
            .filter(|&p| u.word()[p - 1] != v.word()[p - 1])
            .collect();
        return if positions.len() <= 2 {
            MoveClass::SignChanges { positions }
        } else {
            MoveClass::Other
        };
    }
    let moved: Vec<usize> = (1..=u.rank()).filter(|&p| uu[p - 1] != vu[p - 1]).collect();
    match moved.len() {
        2 => {
            let (i, j) = (moved[0], moved[1]);
            if vu[i - 1] == uu[j - 1] && vu[j - 1] == uu[i - 1] {
                MoveClass::Transposition {
                    positions: (i, j),
                    letters_flipped,
                }
            } else {
                MoveClass::Other
            }
        }
        3 => {
            // find the position cycle: each moved entry of u reappears at
            // exactly one other moved position of v
            let (a, b, c) = (moved[0], moved[1], moved[2]);
            let find = |p: usize| -> Option<usize> {
                moved
                    .iter()
                    .copied()
                    .find(|&q| q != p && vu[q - 1] == uu[p - 1])
            };
            match (find(a), find(b), find(c)) {
                (Some(x), Some(y), Some(z)) => {
                    let mut targets = [x, y, z];
                    targets.sort_unstable();
                    let mut srcs = [a, b, c];
                    srcs.sort_unstable();
                    if targets != srcs {
                        return MoveClass::Other;
                    }
                    MoveClass::Rotation3 {
                        positions: [a, x, find(x).unwrap_or(a)],
                        letters_flipped,
                    }
                }
                _ => MoveClass::Other,
            }
        }
        _ => MoveClass::Other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(w: &[i32]) -> SignedPerm {
        SignedPerm::from_word(w.to_vec()).unwrap()
    }

    #[test]
    fn compose_flips_sign_at_position_five() {
        // s5 s6 s7 s6 s5 realizes the sign flip of position 5 in rank 7
        let n = 7;
        let s = |i: usize| {
            let mut w: Vec<i32> = (1..=n as i32).collect();
            w.swap(i - 1, i);
            sp(&w)
        };
        let s7b = sp(&[1, 2, 3, 4, 5, 6, -7]);
        let t = s(5)
            .compose(&s(6))
            .compose(&s7b)
            .compose(&s(6))
            .compose(&s(5));
        let u = sp(&[-3, 2, -1, 6, 5, 4, -7]);
        assert_eq!(u.compose(&t), sp(&[-3, 2, -1, 6, -5, 4, -7]));
    }

    #[test]
    fn compose_type_d_generator() {
        // s7^D = s7 s6 s7 exchanges values and signs in positions 6 and 7
        let s7b = sp(&[1, 2, 3, 4, 5, 6, -7]);
        let mut w: Vec<i32> = (1..=7).collect();
        w.swap(5, 6);
        let s6 = sp(&w);
        let s7d = s7b.compose(&s6).compose(&s7b);
        let u = sp(&[-3, 2, -1, 6, -5, 4, -7]);
        assert_eq!(u.compose(&s7d), sp(&[-3, 2, -1, 6, -5, 7, -4]));
    }

    #[test]
    fn compose_identity_and_adjacent_swap() {
        let u = sp(&[3, 1, 2]);
        assert_eq!(u.compose(&SignedPerm::identity(3)), u);
        let s1 = sp(&[2, 1, 3]);
        assert_eq!(sp(&[3, 1, 2]).compose(&s1), sp(&[1, 3, 2]));
    }

    #[test]
    #[should_panic(expected = "rank mismatch")]
    fn compose_rank_mismatch_panics() {
        let _ = sp(&[1, 2]).compose(&sp(&[1, 2, 3]));
    }

    #[test]
    fn inverse_round_trip() {
        assert_eq!(SignedPerm::identity(4).inverse(), SignedPerm::identity(4));
        let u = sp(&[2, 3, 1]);
        assert_eq!(u.inverse(), sp(&[3, 1, 2]));
        assert!(u.compose(&u.inverse()).is_identity());
    }

    #[test]
    fn involution_checks() {
        assert!(SignedPerm::identity(5).is_involution());
        assert!(sp(&[2, 1, 4, 3]).is_involution());
        assert!(!sp(&[2, 3, 1, 4]).is_involution());
    }

    #[test]
    fn membership() {
        assert!(GroupType::D.contains(&sp(&[-1, -2, 3, 4])));
        assert!(!GroupType::D.contains(&sp(&[-1, 2, 3, 4])));
        assert!(GroupType::A.contains(&sp(&[1, 2, 3, 4])));
        assert!(GroupType::B.contains(&sp(&[-1, 2, 3, 4])));
        assert!(!GroupType::A.contains(&sp(&[-1, 2, 3, 4])));
    }

    #[test]
    fn hamming_small_cases() {
        let w = sp(&[1, 2, 3, 4]);
        assert_eq!(w.hamming(&w), 0);
        assert_eq!(w.hamming(&sp(&[-1, 2, 3, 4])), 1);
        assert_eq!(w.hamming(&sp(&[1, 2, 4, 3])), 2);
    }

    #[test]
    fn cycles_of_paper_example() {
        let u = sp(&[-3, 2, -1, 6, 5, 4, -7]);
        let c = u.to_cycles().unwrap();
        assert_eq!(c.transpositions, vec![(-1, -3), (4, 6)]);
        assert_eq!(c.fixed, vec![2, 5, -7]);
        assert_eq!(c.to_perm().unwrap(), u);
    }

    #[test]
    fn cycles_identity_and_build() {
        let id = SignedPerm::identity(3);
        let c = id.to_cycles().unwrap();
        assert!(c.transpositions.is_empty());
        assert_eq!(c.fixed, vec![1, 2, 3]);

        let built = CycleForm {
            rank: 3,
            fixed: vec![-2],
            transpositions: vec![(1, 3)],
        };
        assert_eq!(built.to_perm().unwrap(), sp(&[3, -2, 1]));
    }

    #[test]
    fn cycles_reject_bad_input() {
        let mixed = CycleForm {
            rank: 3,
            fixed: vec![2],
            transpositions: vec![(1, -3)],
        };
        assert!(mixed.to_perm().is_err());
        let overlap = CycleForm {
            rank: 3,
            fixed: vec![1, 2, 3],
            transpositions: vec![(1, 2)],
        };
        assert!(overlap.to_perm().is_err());
    }

    #[test]
    fn relabel_paper_examples() {
        // pi = 321, F = 412: cycle (1 3) -> (4 2), embedded at rank 4
        let f = Relabeling::new(vec![4, 1, 2]).unwrap();
        assert_eq!(f.apply(&sp(&[3, 2, 1]), 4), sp(&[1, 4, 3, 2]));
        // type B extension: 3 -2 1 -> (4 2)(-1)
        assert_eq!(f.apply(&sp(&[3, -2, 1]), 4), sp(&[-1, 4, 3, 2]));
        // identity relabeling leaves the word unchanged
        let idf = Relabeling::new(vec![1, 2, 3]).unwrap();
        assert_eq!(idf.apply(&sp(&[2, 1, 3]), 3), sp(&[2, 1, 3]));
    }

    #[test]
    fn relabel_rejects_duplicates() {
        assert!(Relabeling::new(vec![1, 1, 2]).is_err());
        assert!(Relabeling::new(vec![0, 1]).is_err());
    }

    #[test]
    fn classify_transposition_no_signs() {
        // rows 1-2 of the type A rank-5 code
        let m = classify_move(&sp(&[1, 2, 3, 4, 5]), &sp(&[1, 4, 3, 2, 5]));
        match &m {
            MoveClass::Transposition {
                positions,
                letters_flipped,
            } => {
                assert_eq!(*positions, (2, 4));
                assert!(letters_flipped.is_empty());
            }
            other => panic!("expected transposition, got {other:?}"),
        }
        assert_eq!(m.sign_change_count(), 0);
    }

    #[test]
    fn classify_rotation_no_signs() {
        let u = sp(&[4, 2, 3, 1, 5]);
        let v = sp(&[5, 2, 3, 4, 1]);
        let m = classify_move(&u, &v);
        match &m {
            MoveClass::Rotation3 {
                letters_flipped, ..
            } => assert!(letters_flipped.is_empty()),
            other => panic!("expected rotation, got {other:?}"),
        }
        assert_eq!(m.apply(&u).unwrap(), v);
    }

    #[test]
    fn classify_rotation_with_two_sign_changes() {
        let u = sp(&[-3, 2, -1, 4]);
        let v = sp(&[4, 2, 3, 1]);
        let m = classify_move(&u, &v);
        match &m {
            MoveClass::Rotation3 {
                letters_flipped, ..
            } => assert_eq!(letters_flipped.len(), 2),
            other => panic!("expected rotation, got {other:?}"),
        }
        assert_eq!(m.apply(&u).unwrap(), v);
    }

    #[test]
    fn classify_identity_and_sign_changes() {
        let w = sp(&[2, 1, 3]);
        assert_eq!(classify_move(&w, &w), MoveClass::Identity);
        let m = classify_move(&sp(&[1, 2, 3]), &sp(&[-1, 2, -3]));
        assert_eq!(
            m,
            MoveClass::SignChanges {
                positions: vec![1, 3]
            }
        );
    }

    #[test]
    fn display_and_parse_round_trip() {
        let u = sp(&[-3, 2, -1, 6, 5, 4, -7]);
        assert_eq!(u.to_string(), "-3 2 -1 6 5 4 -7");
        assert_eq!("-3 2 -1 6 5 4 -7".parse::<SignedPerm>().unwrap(), u);
        assert!("0 1".parse::<SignedPerm>().is_err());
        assert!("1 1".parse::<SignedPerm>().is_err());
        assert!("1 3".parse::<SignedPerm>().is_err());
    }
}
