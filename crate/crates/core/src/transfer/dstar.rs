//! The contracted transfer digraph `D*_m` on outlet words.

use crate::codes::{for_each_column_io, reverse_bits, BinaryWord};
use crate::error::{Error, Result};

/// Default largest height accepted by [`DStar::build`].
pub const DEFAULT_MAX_M: usize = 14;

/// Hard ceiling regardless of configuration; word values are `u32`
/// and the reverse index has `2^m` slots.
pub const HARD_MAX_M: usize = 20;

const ABSENT: u32 = u32::MAX;

/// `D*_m`: vertices are the binary words occurring as inlet or outlet words
/// of valid columns, and every valid column `y` contributes the arc
/// `inlet(y) -> outlet(y)`.
///
/// Vertices are stored in increasing word order, so vertex indices follow
/// lexicographic order of the words. Arcs are kept in compressed rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DStar {
    m: usize,
    words: Vec<u32>,
    index: Vec<u32>,
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

impl DStar {
    /// Build `D*_m` with the default capacity limit.
    pub fn build(m: usize) -> Result<DStar> {
        Self::build_with_limit(m, DEFAULT_MAX_M)
    }

    pub fn build_with_limit(m: usize, limit: usize) -> Result<DStar> {
        check_height(m, limit)?;
        let mut arcs: Vec<(u32, u32)> = Vec::new();
        for_each_column_io(m, |inlet, outlet| arcs.push((inlet, outlet)));
        arcs.sort_unstable();
        if let Some(w) = arcs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Structural(format!(
                "two columns contribute the arc {} -> {}",
                BinaryWord::new(m, w[0].0),
                BinaryWord::new(m, w[0].1)
            )));
        }
        let mut present = vec![false; 1usize << m];
        for &(u, v) in &arcs {
            present[u as usize] = true;
            present[v as usize] = true;
        }
        let words: Vec<u32> = (0..1u32 << m).filter(|&w| present[w as usize]).collect();
        Ok(Self::from_parts(m, words, &arcs))
    }

    /// Assemble from a sorted vertex list and word-valued arcs sorted by
    /// `(source, target)`.
    pub(crate) fn from_parts(m: usize, words: Vec<u32>, arcs: &[(u32, u32)]) -> DStar {
        let mut index = vec![ABSENT; 1usize << m];
        for (i, &w) in words.iter().enumerate() {
            index[w as usize] = i as u32;
        }
        let mut offsets = vec![0u32; words.len() + 1];
        let mut targets = Vec::with_capacity(arcs.len());
        for &(u, v) in arcs {
            offsets[index[u as usize] as usize + 1] += 1;
            targets.push(index[v as usize]);
        }
        for i in 0..words.len() {
            offsets[i + 1] += offsets[i];
        }
        DStar { m, words, index, offsets, targets }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertex_count(&self) -> usize {
        self.words.len()
    }

    /// Number of arcs, loops counted once.
    pub fn arc_count(&self) -> usize {
        self.targets.len()
    }

    pub fn word(&self, i: usize) -> BinaryWord {
        BinaryWord::new(self.m, self.words[i])
    }

    pub fn word_value(&self, i: usize) -> u32 {
        self.words[i]
    }

    pub fn words(&self) -> impl Iterator<Item = BinaryWord> + '_ {
        self.words.iter().map(move |&w| BinaryWord::new(self.m, w))
    }

    pub fn index_of(&self, w: BinaryWord) -> Option<usize> {
        if w.len() != self.m {
            return None;
        }
        match self.index[w.value() as usize] {
            ABSENT => None,
            i => Some(i as usize),
        }
    }

    /// Successor indices of vertex `i`, increasing.
    pub fn successors(&self, i: usize) -> &[u32] {
        &self.targets[self.offsets[i] as usize..self.offsets[i + 1] as usize]
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.successors(i).len()
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.successors(i).binary_search(&(j as u32)).is_ok()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |i| self.successors(i).iter().map(move |&j| (i, j as usize)))
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&i| self.has_arc(i, i)).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs().all(|(i, j)| self.has_arc(j, i))
    }

    /// Index of the reversed word of vertex `i`, if it is a vertex.
    pub fn reverse_index(&self, i: usize) -> Option<usize> {
        match self.index[reverse_bits(self.words[i], self.m) as usize] {
            ABSENT => None,
            j => Some(j as usize),
        }
    }

    pub fn is_palindrome(&self, i: usize) -> bool {
        reverse_bits(self.words[i], self.m) == self.words[i]
    }

    pub fn ones(&self, i: usize) -> u32 {
        self.words[i].count_ones()
    }

    /// Packed adjacency rows, `ceil(|V| / 64)` words per row.
    pub fn bit_rows(&self) -> Vec<u64> {
        let n = self.vertex_count();
        let stride = n.div_ceil(64);
        let mut rows = vec![0u64; n * stride];
        for (i, j) in self.arcs() {
            rows[i * stride + j / 64] |= 1u64 << (j % 64);
        }
        rows
    }

    /// Rebuild from packed adjacency rows as produced by [`DStar::bit_rows`].
    pub(crate) fn from_bit_rows(m: usize, words: Vec<u32>, rows: &[u64]) -> DStar {
        let n = words.len();
        let stride = n.div_ceil(64);
        let mut arcs = Vec::new();
        for i in 0..n {
            for (k, &chunk) in rows[i * stride..(i + 1) * stride].iter().enumerate() {
                let mut bits = chunk;
                while bits != 0 {
                    let j = k * 64 + bits.trailing_zeros() as usize;
                    arcs.push((words[i], words[j]));
                    bits &= bits - 1;
                }
            }
        }
        DStar::from_parts(m, words, &arcs)
    }
}

pub(crate) fn check_height(m: usize, limit: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::Parameter(format!("height m must be at least 2, got {m}")));
    }
    let limit = limit.min(HARD_MAX_M);
    if m > limit {
        return Err(Error::Capacity { what: "m", value: m, limit });
    }
    Ok(())
}

/// `2^m` for even `m`, `2^m - 1` for odd `m`.
pub fn expected_vertex_count(m: usize) -> usize {
    (1usize << m) - (m % 2)
}

/// The one binary word of odd length that is neither an inlet nor an
/// outlet word: `(01)^k 0`.
pub fn missing_word(m: usize) -> Option<BinaryWord> {
    (m % 2 == 1).then(|| {
        let bits: Vec<bool> = (0..m).map(|i| i % 2 == 1).collect();
        BinaryWord::from_bits(&bits)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::column_count;

    fn bw(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(DStar::build(2).unwrap().vertex_count(), 4);
        assert_eq!(DStar::build(5).unwrap().vertex_count(), 31);
        for m in 2..=10 {
            let d = DStar::build(m).unwrap();
            assert_eq!(d.vertex_count(), expected_vertex_count(m));
            assert_eq!(d.arc_count() as u64, column_count(m));
            if let Some(w) = missing_word(m) {
                assert_eq!(d.index_of(w), None);
            }
        }
    }

    #[test]
    fn m3_arcs() {
        let d = DStar::build(3).unwrap();
        let i = d.index_of(bw("101")).unwrap();
        let j = d.index_of(bw("011")).unwrap();
        assert!(d.has_arc(i, j) && d.has_arc(j, i));
        let one = d.index_of(bw("111")).unwrap();
        assert_eq!(d.loops(), vec![one]);
        assert!(d.is_symmetric());
    }

    #[test]
    fn rejects_bad_heights() {
        assert!(matches!(DStar::build(1), Err(Error::Parameter(_))));
        assert!(matches!(DStar::build(15), Err(Error::Capacity { .. })));
        assert!(matches!(DStar::build_with_limit(9, 8), Err(Error::Capacity { .. })));
    }

    #[test]
    fn bit_rows_roundtrip() {
        let d = DStar::build(6).unwrap();
        let words: Vec<u32> = (0..d.vertex_count()).map(|i| d.word_value(i)).collect();
        assert_eq!(DStar::from_bit_rows(6, words, &d.bit_rows()), d);
    }
}
