//! Layers of unsigned involutions and their sign assignments.
//!
//! Layer `L_k` holds the involutions of the symmetric group with exactly
//! `k` transpositions. Within a layer, `L_k(q)` collects the extensions
//! `q·(i j)` of a parent `q` by one transposition whose opener exceeds
//! every opener of `q`; these cells partition `L_k`.

use std::collections::BTreeMap;

use crate::counting::enumerate_within;
use crate::error::Result;
use crate::optimal::binary::BinaryWord;
use crate::perm::{GroupType, SignedPerm};

/// One layer of unsigned involutions.
#[derive(Debug, Clone)]
pub struct Layer {
    pub k: usize,
    /// Members in lexicographic word order.
    pub members: Vec<SignedPerm>,
    /// Partition cells keyed by the parent's one-line word.
    pub cells: BTreeMap<Vec<i32>, Vec<SignedPerm>>,
}

/// Largest opener among the transpositions of `q`; 0 for the identity.
pub fn largest_opener(q: &SignedPerm) -> usize {
    q.to_cycles()
        .expect("layer member is an involution")
        .transpositions
        .iter()
        .map(|&(a, _)| a.unsigned_abs() as usize)
        .max()
        .unwrap_or(0)
}

/// Children `q·(i j)` with `m(q) < i < j` over the fixed letters of `q`,
/// in lexicographic `(i, j)` order.
pub fn children_of(q: &SignedPerm) -> Vec<SignedPerm> {
    let n = q.rank();
    let m = largest_opener(q);
    let fixed: Vec<usize> = (1..=n).filter(|&p| q.word()[p - 1] == p as i32).collect();
    let mut out = Vec::new();
    for (a, &i) in fixed.iter().enumerate() {
        if i <= m {
            continue;
        }
        for &j in &fixed[a + 1..] {
            let mut word = q.word().to_vec();
            word[i - 1] = j as i32;
            word[j - 1] = i as i32;
            out.push(SignedPerm::from_word(word).expect("child word is valid"));
        }
    }
    out
}

/// All layers `L_0 … L_{⌊n/2⌋}` with their partition cells.
pub fn layers(n: usize) -> Result<Vec<Layer>> {
    let unsigned = enumerate_within(GroupType::A, n, n)?;
    let max_k = n / 2;
    let mut layers: Vec<Layer> = (0..=max_k)
        .map(|k| Layer {
            k,
            members: Vec::new(),
            cells: BTreeMap::new(),
        })
        .collect();
    for w in unsigned.iter() {
        let k = w.to_cycles().expect("involution").transpositions.len();
        layers[k].members.push(w.clone());
    }
    // cells: parent q in layer k-1 spawns its children in layer k
    for k in 1..=max_k {
        let parents = layers[k - 1].members.clone();
        for q in parents {
            let kids = children_of(&q);
            if !kids.is_empty() {
                layers[k].cells.insert(q.word().to_vec(), kids);
            }
        }
    }
    Ok(layers)
}

/// All sign words `g` for which `(p, g)` is a signed involution: the two
/// letters of each transposition carry a common (paired) sign, fixed
/// points are free. `2^(n-k)` assignments for `k` transpositions.
pub fn sign_assignments(p: &SignedPerm) -> Vec<SignedPerm> {
    let coords = logical_coords(p);
    let m = coords.len();
    let mut out = Vec::with_capacity(1 << m);
    for mask in 0u32..(1 << m) {
        let mut bits = BinaryWord::zeros(p.rank());
        for (c, coord) in coords.iter().enumerate() {
            if mask >> c & 1 == 1 {
                for &pos in coord.positions() {
                    bits.set_bit(pos, 1);
                }
            }
        }
        out.push(apply_signs(p, &bits));
    }
    out
}

/// Sign assignments restricted to an even number of negatives (type D).
pub fn sign_assignments_even(p: &SignedPerm) -> Vec<SignedPerm> {
    sign_assignments(p)
        .into_iter()
        .filter(|w| GroupType::D.contains(w))
        .collect()
}

/// The logical sign coordinates of an unsigned involution: one per
/// transposition (both positions flip together) and one per fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignCoord {
    Pair([usize; 2]),
    Free([usize; 1]),
}

impl SignCoord {
    pub fn positions(&self) -> &[usize] {
        match self {
            SignCoord::Pair(ps) => ps,
            SignCoord::Free(ps) => ps,
        }
    }

    pub fn is_pair(&self) -> bool {
        matches!(self, SignCoord::Pair(_))
    }
}

/// Pairs first (by opener), then free positions ascending.
pub fn logical_coords(p: &SignedPerm) -> Vec<SignCoord> {
    let cycles = p.to_cycles().expect("unsigned involution");
    let mut coords: Vec<SignCoord> = cycles
        .transpositions
        .iter()
        .map(|&(a, b)| SignCoord::Pair([a as usize, b as usize]))
        .collect();
    coords.extend(cycles.fixed.iter().map(|&x| SignCoord::Free([x as usize])));
    coords
}

/// Signs the word of `p` by the bit string: position `i` is negated when
/// bit `i` is 1.
pub fn apply_signs(p: &SignedPerm, g: &BinaryWord) -> SignedPerm {
    debug_assert_eq!(p.rank(), g.len());
    let word = (1..=p.rank())
        .map(|i| {
            let v = p.word()[i - 1];
            if g.bit(i) == 1 {
                -v
            } else {
                v
            }
        })
        .collect();
    SignedPerm::from_word(word).expect("signed word is valid")
}

/// Reads off the sign bits of a signed involution.
pub fn sign_bits(w: &SignedPerm) -> BinaryWord {
    let mut bits = BinaryWord::zeros(w.rank());
    for i in 1..=w.rank() {
        if w.word()[i - 1] < 0 {
            bits.set_bit(i, 1);
        }
    }
    bits
}
