//! Ordered lists of involutions and the operators used to assemble codes.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::perm::{GroupType, Relabeling, SignedPerm};

/// An ordered sequence of involutions of a fixed type and rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeList {
    group: GroupType,
    rank: usize,
    entries: Vec<SignedPerm>,
}

impl CodeList {
    /// Wraps entries, checking rank agreement, the involution property and
    /// group membership.
    pub fn new(group: GroupType, rank: usize, entries: Vec<SignedPerm>) -> Result<Self> {
        for w in &entries {
            if w.rank() != rank {
                return Err(Error::InvalidWord(format!(
                    "entry {w} has rank {}, expected {rank}",
                    w.rank()
                )));
            }
            if !w.is_involution() {
                return Err(Error::NotInvolution(w.to_string()));
            }
            if !group.contains(w) {
                return Err(Error::InvalidWord(format!("{w} is not of type {group}")));
            }
        }
        Ok(CodeList {
            group,
            rank,
            entries,
        })
    }

    /// Wraps entries that are known to be valid by construction.
    pub(crate) fn from_parts(group: GroupType, rank: usize, entries: Vec<SignedPerm>) -> Self {
        debug_assert!(entries.iter().all(|w| w.rank() == rank
            && w.is_involution()
            && group.contains(w)));
        CodeList {
            group,
            rank,
            entries,
        }
    }

    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[SignedPerm] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SignedPerm> {
        self.entries.iter()
    }

    /// Pairs of cyclically consecutive entries, including last->first.
    pub fn cyclic_pairs(&self) -> impl Iterator<Item = (&SignedPerm, &SignedPerm)> {
        let n = self.entries.len();
        (0..n).map(move |i| (&self.entries[i], &self.entries[(i + 1) % n]))
    }

    /// Applies a relabeling entrywise, embedding at the given target rank.
    pub fn relabel(&self, f: &Relabeling, target_rank: usize) -> Result<CodeList> {
        if f.source_rank() != self.rank {
            return Err(Error::InvalidAlphabet(format!(
                "alphabet has {} letters, list has rank {}",
                f.source_rank(),
                self.rank
            )));
        }
        let entries = self.entries.iter().map(|w| f.apply(w, target_rank)).collect();
        Ok(CodeList {
            group: self.group,
            rank: target_rank,
            entries,
        })
    }

    pub fn reversed(&self) -> CodeList {
        let mut entries = self.entries.clone();
        entries.reverse();
        CodeList {
            group: self.group,
            rank: self.rank,
            entries,
        }
    }

    /// Adjoins the fixed letter `k = rank + 1` to every entry.
    pub fn extend_fixed(&self, k: usize) -> Result<CodeList> {
        if k <= self.rank {
            return Err(Error::AlphabetCollision(k as i32));
        }
        if k != self.rank + 1 {
            return Err(Error::InvalidAlphabet(format!(
                "can only extend by the next letter {}, got {k}",
                self.rank + 1
            )));
        }
        let entries = self
            .entries
            .iter()
            .map(|w| {
                let mut word = w.word().to_vec();
                word.push(k as i32);
                SignedPerm::from_word(word).expect("extension preserves validity")
            })
            .collect();
        Ok(CodeList {
            group: self.group,
            rank: k,
            entries,
        })
    }

    /// Right-multiplies every entry by the transposition `(a b)`, or by
    /// `(-a -b)` when `barred`. The rank grows to `b` if needed; both
    /// letters must be fixed points of every entry.
    pub fn append_transposition(&self, a: usize, b: usize, barred: bool) -> Result<CodeList> {
        if a >= b || a == 0 {
            return Err(Error::InvalidAlphabet(format!("bad transposition ({a} {b})")));
        }
        let rank = self.rank.max(b);
        let mut entries = Vec::with_capacity(self.entries.len());
        for w in &self.entries {
            let mut word = w.word().to_vec();
            word.extend(self.rank as i32 + 1..=rank as i32);
            if word[a - 1] != a as i32 || word[b - 1] != b as i32 {
                return Err(Error::AlphabetCollision(if word[a - 1] != a as i32 {
                    a as i32
                } else {
                    b as i32
                }));
            }
            let sign = if barred { -1 } else { 1 };
            word[a - 1] = sign * b as i32;
            word[b - 1] = sign * a as i32;
            entries.push(SignedPerm::from_word(word).expect("transposition preserves validity"));
        }
        Ok(CodeList {
            group: self.group,
            rank,
            entries,
        })
    }

    /// Adjoins letter `n = rank + 1`, positive when the entry has an even
    /// number of negatives and negative otherwise. Every result is an
    /// even-signed involution, so the output is typed D.
    pub fn extend_tilde(&self) -> CodeList {
        let n = self.rank + 1;
        let entries = self
            .entries
            .iter()
            .map(|w| {
                let mut word = w.word().to_vec();
                let sign = if w.negative_count() % 2 == 0 { 1 } else { -1 };
                word.push(sign * n as i32);
                SignedPerm::from_word(word).expect("tilde extension preserves validity")
            })
            .collect();
        CodeList {
            group: GroupType::D,
            rank: n,
            entries,
        }
    }

    /// Reads a code file: optional `#`-prefixed header lines, then one
    /// involution per line as space-separated signed integers.
    pub fn read<R: BufRead>(group: GroupType, rank: usize, reader: R) -> Result<CodeList> {
        let mut entries = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line.map_err(Error::from)?;
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let w: SignedPerm = t.parse().map_err(|e| Error::Parse {
                line: idx + 1,
                msg: format!("{e}"),
            })?;
            if w.rank() != rank {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("rank {} differs from expected {rank}", w.rank()),
                });
            }
            entries.push(w);
        }
        CodeList::new(group, rank, entries)
    }

    /// Writes the code with an identifying header line.
    pub fn write<W: Write>(&self, algorithm: &str, out: &mut W) -> Result<()> {
        writeln!(
            out,
            "# type={} n={} algorithm={algorithm}",
            self.group, self.rank
        )?;
        for w in &self.entries {
            writeln!(out, "{w}")?;
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a CodeList {
    type Item = &'a SignedPerm;
    type IntoIter = std::slice::Iter<'a, SignedPerm>;
    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(w: &[i32]) -> SignedPerm {
        SignedPerm::from_word(w.to_vec()).unwrap()
    }

    fn list(words: &[&[i32]]) -> CodeList {
        let entries: Vec<SignedPerm> = words.iter().map(|w| sp(w)).collect();
        CodeList::new(GroupType::B, entries[0].rank(), entries).unwrap()
    }

    #[test]
    fn extension_operators_match_worked_example() {
        // L = (12, 21): L·3 = (123, 213), L·(3 4) = (1243, 2143)
        let l = list(&[&[1, 2], &[2, 1]]);
        let fixed = l.extend_fixed(3).unwrap();
        assert_eq!(fixed.entries()[0], sp(&[1, 2, 3]));
        assert_eq!(fixed.entries()[1], sp(&[2, 1, 3]));
        let trans = l.append_transposition(3, 4, false).unwrap();
        assert_eq!(trans.entries()[0], sp(&[1, 2, 4, 3]));
        assert_eq!(trans.entries()[1], sp(&[2, 1, 4, 3]));
    }

    #[test]
    fn barred_transposition() {
        let l = list(&[&[1, 2]]);
        let t = l.append_transposition(3, 4, true).unwrap();
        assert_eq!(t.entries()[0], sp(&[1, 2, -4, -3]));
    }

    #[test]
    fn transposition_rejects_occupied_letters() {
        let l = list(&[&[2, 1]]);
        assert!(l.append_transposition(1, 3, false).is_err());
    }

    #[test]
    fn tilde_extension_parity_rule() {
        let l = list(&[&[-1, 2, 3]]);
        let t = l.extend_tilde();
        assert_eq!(t.entries()[0], sp(&[-1, 2, 3, -4]));
        assert_eq!(t.group(), GroupType::D);
        let even = list(&[&[-1, -2, 3]]).extend_tilde();
        assert_eq!(even.entries()[0], sp(&[-1, -2, 3, 4]));
    }

    #[test]
    fn reversal_is_an_involution_on_lists() {
        let l = list(&[&[1, 2], &[2, 1], &[-1, 2]]);
        assert_eq!(l.reversed().reversed(), l);
    }

    #[test]
    fn read_write_round_trip() {
        let l = list(&[&[1, 2], &[-1, -2], &[2, 1]]);
        let mut buf = Vec::new();
        l.write("recursive", &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("# type=B n=2 algorithm=recursive\n"));
        let back = CodeList::read(GroupType::B, 2, &buf[..]).unwrap();
        assert_eq!(back, l);
    }

    #[test]
    fn read_rejects_rank_mismatch_and_bad_words() {
        assert!(CodeList::read(GroupType::B, 3, "1 2\n".as_bytes()).is_err());
        assert!(CodeList::read(GroupType::B, 2, "1 1\n".as_bytes()).is_err());
        // non-involution line
        assert!(CodeList::read(GroupType::B, 3, "2 3 1\n".as_bytes()).is_err());
    }
}
