//! Binary Gray codes: the reflected code and its even-weight companion.

use std::fmt;

use crate::error::{Error, Result};

/// A fixed-length bit string `b_1 … b_n`; bit `i` is the sign bit of
/// position `i` (1 = negative).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    bits: Vec<u8>,
}

impl BinaryWord {
    pub fn zeros(n: usize) -> Self {
        BinaryWord { bits: vec![0; n] }
    }

    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidWord(format!("not a bit string: {bits:?}")));
        }
        Ok(BinaryWord { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Bit at 1-based position `i`.
    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i - 1]
    }

    pub fn set_bit(&mut self, i: usize, v: u8) {
        debug_assert!(v <= 1);
        self.bits[i - 1] = v;
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    /// Number of differing bit positions.
    pub fn distance(&self, other: &BinaryWord) -> usize {
        assert_eq!(self.len(), other.len(), "length mismatch in bit distance");
        self.bits
            .iter()
            .zip(&other.bits)
            .filter(|(a, b)| a != b)
            .count()
    }

    fn prefixed(&self, prefix: &[u8]) -> BinaryWord {
        let mut bits = prefix.to_vec();
        bits.extend_from_slice(&self.bits);
        BinaryWord { bits }
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The binary reflected Gray code on `n >= 1` bits: all `2^n` words,
/// cyclically consecutive words differing in exactly one bit.
pub fn brgc(n: usize) -> Result<Vec<BinaryWord>> {
    if n == 0 {
        return Err(Error::RankOutOfRange {
            what: "reflected Gray code",
            rank: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    let mut code = vec![
        BinaryWord { bits: vec![0] },
        BinaryWord { bits: vec![1] },
    ];
    for _ in 2..=n {
        let mut next = Vec::with_capacity(code.len() * 2);
        next.extend(code.iter().map(|w| w.prefixed(&[0])));
        next.extend(code.iter().rev().map(|w| w.prefixed(&[1])));
        code = next;
    }
    Ok(code)
}

/// The cyclic code on the `2^(n-1)` even-weight words of `n >= 2` bits;
/// cyclically consecutive words differ in exactly two bits.
///
/// Built by prefixing the previous even code with 0 and interleaving the
/// reversed reflected code on `n-2` bits under alternating prefixes 10/11.
pub fn bce(n: usize) -> Result<Vec<BinaryWord>> {
    if n < 2 {
        return Err(Error::RankOutOfRange {
            what: "even-weight Gray code",
            rank: n,
            min: 2,
            max: usize::MAX,
        });
    }
    let mut code = vec![
        BinaryWord { bits: vec![0, 0] },
        BinaryWord { bits: vec![1, 1] },
    ];
    for m in 3..=n {
        let gray = brgc(m - 2)?;
        let mut next: Vec<BinaryWord> = code.iter().map(|w| w.prefixed(&[0])).collect();
        for (offset, v) in gray.iter().rev().enumerate() {
            let prefix: &[u8] = if offset % 2 == 0 { &[1, 0] } else { &[1, 1] };
            next.push(v.prefixed(prefix));
        }
        code = next;
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(code: &[BinaryWord]) -> Vec<String> {
        code.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn brgc_small_listings() {
        assert_eq!(strings(&brgc(1).unwrap()), vec!["0", "1"]);
        assert_eq!(strings(&brgc(2).unwrap()), vec!["00", "01", "11", "10"]);
        assert_eq!(
            strings(&brgc(3).unwrap()),
            vec!["000", "001", "011", "010", "110", "111", "101", "100"]
        );
    }

    #[test]
    fn bce_small_listings() {
        assert_eq!(strings(&bce(2).unwrap()), vec!["00", "11"]);
        assert_eq!(strings(&bce(3).unwrap()), vec!["000", "011", "101", "110"]);
        assert_eq!(
            strings(&bce(4).unwrap()),
            vec!["0000", "0011", "0101", "0110", "1010", "1111", "1001", "1100"]
        );
        let b5 = strings(&bce(5).unwrap());
        assert_eq!(&b5[8..12], &["10100", "11101", "10111", "11110"]);
        assert_eq!(b5.len(), 16);
    }

    #[test]
    fn brgc_cyclic_distance_one_and_complete() {
        for n in 1..=10 {
            let code = brgc(n).unwrap();
            assert_eq!(code.len(), 1 << n);
            let mut seen: Vec<_> = code.clone();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), 1 << n);
            for i in 0..code.len() {
                let j = (i + 1) % code.len();
                assert_eq!(code[i].distance(&code[j]), 1, "n={n} step {i}");
            }
        }
    }

    #[test]
    fn bce_cyclic_distance_two_and_covers_even_weight() {
        for n in 2..=10 {
            let code = bce(n).unwrap();
            assert_eq!(code.len(), 1 << (n - 1));
            let mut seen: Vec<_> = code.clone();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), 1 << (n - 1));
            for w in &code {
                assert_eq!(w.weight() % 2, 0, "odd-weight word {w} in bce({n})");
            }
            for i in 0..code.len() {
                let j = (i + 1) % code.len();
                assert_eq!(code[i].distance(&code[j]), 2, "n={n} step {i}");
            }
        }
    }
}
