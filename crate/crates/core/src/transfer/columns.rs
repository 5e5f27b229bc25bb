//! The uncontracted digraph `D_m` on column codes, kept implicit.

use std::collections::{HashMap, VecDeque};

use crate::codes::{enumerate_columns_over, enumerate_valid_columns, AlphaWord, Letter};
use crate::error::{Error, Result};
use crate::transfer::dstar::check_height;

/// Largest height for which `D_m` arcs may be listed explicitly.
pub const EXPLICIT_ARC_LIMIT: usize = 6;

/// `D_m`: the valid columns of height `m`, with `x -> y` iff
/// `outlet(x) == inlet(y)`. Arcs are evaluated on demand.
#[derive(Clone, Debug)]
pub struct DigraphDm {
    m: usize,
    vertices: Vec<AlphaWord>,
    outlets: Vec<u32>,
    inlets: Vec<u32>,
    by_inlet: HashMap<u32, Vec<u32>>,
    by_outlet: HashMap<u32, Vec<u32>>,
}

impl DigraphDm {
    pub fn build(m: usize) -> Result<DigraphDm> {
        check_height(m, 12)?;
        let vertices = enumerate_valid_columns(m);
        let outlets: Vec<u32> = vertices.iter().map(|w| w.outlet().value()).collect();
        let inlets: Vec<u32> = vertices.iter().map(|w| w.inlet().value()).collect();
        let mut by_inlet: HashMap<u32, Vec<u32>> = HashMap::new();
        let mut by_outlet: HashMap<u32, Vec<u32>> = HashMap::new();
        for (i, (&a, &b)) in inlets.iter().zip(&outlets).enumerate() {
            by_inlet.entry(a).or_default().push(i as u32);
            by_outlet.entry(b).or_default().push(i as u32);
        }
        Ok(DigraphDm { m, vertices, outlets, inlets, by_inlet, by_outlet })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> &[AlphaWord] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn index_of(&self, w: &AlphaWord) -> Option<usize> {
        self.vertices.binary_search(w).ok()
    }

    /// Arc predicate: every letter pair across the shared column boundary is
    /// left-right compatible.
    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.outlets[i] == self.inlets[j]
    }

    pub fn successors(&self, i: usize) -> &[u32] {
        self.by_inlet.get(&self.outlets[i]).map_or(&[], Vec::as_slice)
    }

    pub fn predecessors(&self, i: usize) -> &[u32] {
        self.by_outlet.get(&self.inlets[i]).map_or(&[], Vec::as_slice)
    }

    /// Explicit arc list, only for tiny heights.
    pub fn arcs(&self) -> Result<Vec<(usize, usize)>> {
        if self.m > EXPLICIT_ARC_LIMIT {
            return Err(Error::Capacity { what: "m (explicit D_m arcs)", value: self.m, limit: EXPLICIT_ARC_LIMIT });
        }
        Ok((0..self.vertex_count())
            .flat_map(|i| self.successors(i).iter().map(move |&j| (i, j as usize)))
            .collect())
    }

    fn search(&self, start: usize, forward: bool) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        let mut done_groups = std::collections::HashSet::new();
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let key = if forward { self.outlets[v] } else { self.inlets[v] };
            if !done_groups.insert(key) {
                continue;
            }
            let next = if forward { self.successors(v) } else { self.predecessors(v) };
            for &w in next {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    queue.push_back(w as usize);
                }
            }
        }
        seen
    }

    /// The strongly connected component of `D_m` containing `w`.
    pub fn component_of(&self, w: &AlphaWord) -> Vec<AlphaWord> {
        let Some(s) = self.index_of(w) else { return Vec::new() };
        let f = self.search(s, true);
        let b = self.search(s, false);
        (0..self.vertex_count()).filter(|&i| f[i] && b[i]).map(|i| self.vertices[i]).collect()
    }

    /// `R_m`: the component containing `d b^{m-2} f`.
    pub fn r_component(&self) -> Vec<AlphaWord> {
        self.component_of(&frame_word(self.m, Letter::D, Letter::F))
    }
}

/// `x b^{m-2} y`.
pub fn frame_word(m: usize, first: Letter, last: Letter) -> AlphaWord {
    let mut letters = vec![Letter::B; m];
    letters[0] = first;
    letters[m - 1] = last;
    AlphaWord::from_letters(&letters)
}

/// `F_m`: valid columns over `{a, b, c}`, and `L_m`: valid columns over
/// `{b, d, f}`. The column conditions force `a...c` and `d...f`.
pub fn first_last_sets(m: usize) -> Result<(Vec<AlphaWord>, Vec<AlphaWord>)> {
    if m < 2 {
        return Err(Error::Parameter(format!("height m must be at least 2, got {m}")));
    }
    if m > crate::codes::MAX_HEIGHT {
        return Err(Error::Capacity { what: "m", value: m, limit: crate::codes::MAX_HEIGHT });
    }
    let first = enumerate_columns_over(m, &[Letter::A, Letter::B, Letter::C]);
    let last = enumerate_columns_over(m, &[Letter::B, Letter::D, Letter::F]);
    Ok((first, last))
}

pub fn fibonacci(k: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..k {
        (a, b) = (b, a + b);
    }
    a
}
