//! Strongly connected components of `D*_m` and their labels.

use std::collections::VecDeque;

use crate::codes::BinaryWord;
use crate::error::{Error, Result};
use crate::transfer::DStar;

/// Which named component a block is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum ComponentLabel {
    /// The component containing `1^m`.
    A,
    /// `B*(k)`, `k >= 1`, numbered by decreasing size.
    B(usize),
}

impl std::fmt::Display for ComponentLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ComponentLabel::A => write!(f, "A*"),
            ComponentLabel::B(k) => write!(f, "B*({k})"),
        }
    }
}

/// Components of `D*_m`. Slot 0 is `A*`, slot `k` is `B*(k)`.
/// Members are vertex indices in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    comp_of: Vec<u32>,
    members: Vec<Vec<u32>>,
    r_star: usize,
}

impl Components {
    /// Tarjan decomposition followed by labelling. Fails if an arc joins two
    /// different strongly connected components.
    pub fn decompose(d: &DStar) -> Result<Components> {
        let raw = tarjan(d);
        let mut comp_of = vec![0u32; d.vertex_count()];
        for (c, ms) in raw.iter().enumerate() {
            for &v in ms {
                comp_of[v as usize] = c as u32;
            }
        }
        if let Some((i, j)) = d.arcs().find(|&(i, j)| comp_of[i] != comp_of[j]) {
            return Err(Error::Structural(format!("arc {} -> {} crosses components", d.word(i), d.word(j))));
        }
        let m = d.m();
        let one = d
            .index_of(BinaryWord::ones(m))
            .ok_or_else(|| Error::Structural("1^m is not a vertex".into()))?;
        let zero = d
            .index_of(BinaryWord::zeros(m))
            .ok_or_else(|| Error::Structural("0^m is not a vertex".into()))?;

        let mut raw: Vec<Vec<u32>> = raw
            .into_iter()
            .map(|mut ms| {
                ms.sort_unstable();
                ms
            })
            .collect();
        let a_pos = raw.iter().position(|ms| ms.binary_search(&(one as u32)).is_ok()).unwrap();
        let a = raw.swap_remove(a_pos);
        raw.sort_by(|x, y| y.len().cmp(&x.len()).then(x[0].cmp(&y[0])));
        let mut members = Vec::with_capacity(raw.len() + 1);
        members.push(a);
        members.extend(raw);
        for (c, ms) in members.iter().enumerate() {
            for &v in ms {
                comp_of[v as usize] = c as u32;
            }
        }
        let r_star = comp_of[zero] as usize;
        Ok(Components { comp_of, members, r_star })
    }

    pub fn count(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self, c: usize) -> &[u32] {
        &self.members[c]
    }

    pub fn all(&self) -> &[Vec<u32>] {
        &self.members
    }

    pub fn size(&self, c: usize) -> usize {
        self.members[c].len()
    }

    pub fn label(&self, c: usize) -> ComponentLabel {
        if c == 0 {
            ComponentLabel::A
        } else {
            ComponentLabel::B(c)
        }
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.comp_of[v] as usize
    }

    pub fn a_star(&self) -> usize {
        0
    }

    /// Slot of the component containing `0^m`.
    pub fn r_star(&self) -> usize {
        self.r_star
    }

    /// Sizes of `B*(1), B*(2), ...`.
    pub fn b_sizes(&self) -> Vec<usize> {
        self.members[1..].iter().map(Vec::len).collect()
    }

    pub(crate) fn from_members(n: usize, members: Vec<Vec<u32>>, r_star: usize) -> Components {
        let mut comp_of = vec![0u32; n];
        for (c, ms) in members.iter().enumerate() {
            for &v in ms {
                comp_of[v as usize] = c as u32;
            }
        }
        Components { comp_of, members, r_star }
    }
}

/// Iterative Tarjan. Components come out in reverse topological order.
fn tarjan(d: &DStar) -> Vec<Vec<u32>> {
    const UNSEEN: u32 = u32::MAX;
    let n = d.vertex_count();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut call: Vec<(u32, usize)> = Vec::new();
    let mut next = 0u32;
    let mut out = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root as u32, 0));
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root as u32);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let v = v as usize;
            let succ = d.successors(v);
            if *pos < succ.len() {
                let w = succ[*pos] as usize;
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w as u32);
                    on_stack[w] = true;
                    call.push((w as u32, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                let p = parent as usize;
                low[p] = low[p].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w as usize] = false;
                    comp.push(w);
                    if w as usize == v {
                        break;
                    }
                }
                out.push(comp);
            }
        }
    }
    out
}

fn reach(adj: &[Vec<usize>], start: usize) -> usize {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count
}

/// Independent strong-connectivity test by forward and backward search from
/// the first member.
pub fn is_strongly_connected(d: &DStar, members: &[u32]) -> bool {
    if members.is_empty() {
        return false;
    }
    let mut pos = vec![usize::MAX; d.vertex_count()];
    for (k, &v) in members.iter().enumerate() {
        pos[v as usize] = k;
    }
    let mut fwd = vec![Vec::new(); members.len()];
    let mut bwd = vec![Vec::new(); members.len()];
    for (k, &v) in members.iter().enumerate() {
        for &w in d.successors(v as usize) {
            let j = pos[w as usize];
            if j != usize::MAX {
                fwd[k].push(j);
                bwd[j].push(k);
            }
        }
    }
    reach(&fwd, 0) == members.len() && reach(&bwd, 0) == members.len()
}

/// Proper 2-colouring of the vertex set `members` (arcs read as undirected
/// edges), aligned with `members`. `None` if some arc inside the set joins
/// equal colours, including any loop.
pub fn bipartition(d: &DStar, members: &[u32]) -> Option<Vec<bool>> {
    let n = d.vertex_count();
    let mut pos = vec![u32::MAX; n];
    for (k, &v) in members.iter().enumerate() {
        pos[v as usize] = k as u32;
    }
    let mut colour: Vec<Option<bool>> = vec![None; members.len()];
    for start in 0..members.len() {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(k) = queue.pop_front() {
            let c = colour[k].unwrap();
            for &w in d.successors(members[k] as usize) {
                let j = pos[w as usize];
                if j == u32::MAX {
                    continue;
                }
                let j = j as usize;
                match colour[j] {
                    None => {
                        colour[j] = Some(!c);
                        queue.push_back(j);
                    }
                    Some(cj) if cj == c => return None,
                    _ => {}
                }
            }
        }
    }
    Some(colour.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn sizes(m: usize) -> (Components, DStar) {
        let d = DStar::build(m).unwrap();
        (Components::decompose(&d).unwrap(), d)
    }

    #[test]
    fn m4_labels() {
        let (c, _) = sizes(4);
        assert_eq!(c.size(0), 6);
        assert_eq!(c.b_sizes(), vec![8, 2]);
        assert_eq!(c.r_star(), c.a_star());
    }

    #[test]
    fn m3_labels() {
        let (c, d) = sizes(3);
        assert_eq!(c.size(0), 3);
        assert_eq!(c.b_sizes(), vec![4]);
        assert_eq!(c.r_star(), 1);
        assert_eq!(c.component_of(d.index_of(bw("000")).unwrap()), 1);
    }

    #[test]
    fn strong_connectivity_and_bipartiteness() {
        for m in 2..=8 {
            let (c, d) = sizes(m);
            for k in 0..c.count() {
                assert!(is_strongly_connected(&d, c.members(k)), "m={m} comp={k}");
            }
            assert!(bipartition(&d, c.members(0)).is_none());
        }
        let (c, d) = sizes(5);
        assert!(bipartition(&d, c.members(c.r_star())).is_some());
        let (c, d) = sizes(6);
        for k in 1..c.count() {
            assert!(bipartition(&d, c.members(k)).is_some());
        }
    }

    #[test]
    fn tarjan_matches_undirected_components() {
        let (c, d) = sizes(7);
        let total: usize = c.all().iter().map(Vec::len).sum();
        assert_eq!(total, d.vertex_count());
        for (i, j) in d.arcs() {
            assert_eq!(c.component_of(i), c.component_of(j));
        }
    }
}
