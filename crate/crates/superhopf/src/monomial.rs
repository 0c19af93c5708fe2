//! Strictly increasing index sequences `I = (i_1 < … < i_r)` with entries in
//! `1..=n`, stored as bitmasks. They index exterior-algebra bases and PBW
//! monomials; the bitmask order (∅, {1}, {2}, {1,2}, {3}, …) is the canonical
//! basis order everywhere.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIndex {
    bound: u32,
    bits: u64,
}

impl MonomialIndex {
    pub fn empty(bound: u32) -> MonomialIndex {
        assert!(bound <= 63);
        MonomialIndex { bound, bits: 0 }
    }

    /// The longest sequence `L = (1, 2, …, n)`.
    pub fn full(bound: u32) -> MonomialIndex {
        assert!(bound <= 63);
        MonomialIndex {
            bound,
            bits: if bound == 0 { 0 } else { (1u64 << bound) - 1 },
        }
    }

    pub fn from_indices(bound: u32, indices: &[u32]) -> Result<MonomialIndex> {
        let mut bits = 0u64;
        let mut prev = 0;
        for &i in indices {
            if i == 0 || i > bound {
                return Err(Error::ShapeMismatch(format!(
                    "index {i} out of range 1..={bound}"
                )));
            }
            if i <= prev {
                return Err(Error::ShapeMismatch(
                    "indices must be strictly increasing".into(),
                ));
            }
            bits |= 1 << (i - 1);
            prev = i;
        }
        Ok(MonomialIndex { bound, bits })
    }

    pub fn from_bits(bound: u32, bits: u64) -> MonomialIndex {
        assert!(bound <= 63 && bits < (1u64 << bound) || bits == 0);
        MonomialIndex { bound, bits }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn len(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: u32) -> bool {
        i >= 1 && i <= self.bound && self.bits & (1 << (i - 1)) != 0
    }

    pub fn indices(&self) -> Vec<u32> {
        (1..=self.bound).filter(|&i| self.contains(i)).collect()
    }

    pub fn disjoint(&self, other: &MonomialIndex) -> bool {
        self.bits & other.bits == 0
    }

    pub fn union(&self, other: &MonomialIndex) -> MonomialIndex {
        MonomialIndex {
            bound: self.bound,
            bits: self.bits | other.bits,
        }
    }

    pub fn complement_in(&self, parent: &MonomialIndex) -> MonomialIndex {
        debug_assert_eq!(parent.bits & self.bits, self.bits);
        MonomialIndex {
            bound: self.bound,
            bits: parent.bits & !self.bits,
        }
    }

    /// All monomials with the given bound, in bitmask order.
    pub fn all(bound: u32) -> impl Iterator<Item = MonomialIndex> {
        assert!(bound <= 20, "exhaustive monomial listing capped");
        (0u64..(1 << bound)).map(move |bits| MonomialIndex { bound, bits })
    }

    /// All ways of writing `self = J ⊔ K` as an ordered pair of disjoint
    /// subsets, in bitmask order of `J`.
    pub fn splits(&self) -> Vec<(MonomialIndex, MonomialIndex)> {
        let mut out = Vec::new();
        let m = self.bits;
        let mut sub = 0u64;
        loop {
            let j = MonomialIndex {
                bound: self.bound,
                bits: sub,
            };
            out.push((j, j.complement_in(self)));
            if sub == m {
                break;
            }
            sub = (sub.wrapping_sub(m)) & m;
        }
        out.sort_by_key(|(j, _)| j.bits);
        out
    }

    /// Parity of the permutation sorting the concatenation `self · other` of
    /// two disjoint sorted blocks: counts pairs `(i ∈ self, j ∈ other)` with
    /// `i > j`.
    pub fn merge_sign(&self, other: &MonomialIndex) -> i32 {
        debug_assert!(self.disjoint(other));
        let mut inversions = 0u32;
        for i in 1..=self.bound {
            if self.contains(i) {
                let below = other.bits & ((1u64 << (i - 1)) - 1);
                inversions += below.count_ones();
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Name fragment used by the exterior-algebra constructors: "1" for the
    /// empty monomial, otherwise the generator names concatenated.
    pub fn name(&self, gen: &str) -> String {
        if self.is_empty() {
            "1".into()
        } else {
            self.indices()
                .iter()
                .map(|i| format!("{gen}{i}"))
                .collect::<Vec<_>>()
                .join("")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_of_pair() {
        let i = MonomialIndex::from_indices(2, &[1, 2]).unwrap();
        let splits = i.splits();
        assert_eq!(splits.len(), 4);
        // signs for Δ(w1w2): +, +, −, +
        let signs: Vec<i32> = splits.iter().map(|(j, k)| j.merge_sign(k)).collect();
        assert_eq!(signs, vec![1, 1, -1, 1]);
    }

    #[test]
    fn merge_sign_swap() {
        let a = MonomialIndex::from_indices(3, &[2]).unwrap();
        let b = MonomialIndex::from_indices(3, &[1]).unwrap();
        assert_eq!(a.merge_sign(&b), -1);
        assert_eq!(b.merge_sign(&a), 1);
    }

    #[test]
    fn names() {
        assert_eq!(MonomialIndex::empty(3).name("w"), "1");
        assert_eq!(
            MonomialIndex::from_indices(12, &[1, 12]).unwrap().name("w"),
            "w1w12"
        );
    }
}
