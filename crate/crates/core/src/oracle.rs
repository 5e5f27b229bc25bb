//! Brute-force 2-factor enumeration on explicit small graphs.
//!
//! Independent of the transfer digraphs: the graph is built edge by edge,
//! 2-factors are found by backtracking over vertices in row-major order,
//! and each cycle is classified by lifting it to the universal strip
//! (tracking horizontal displacement across the seam and, for the Moebius
//! strip, the sheet flip).
//!
//! Seam edges are kept as their own edge slots even when they coincide
//! with a grid edge or close a loop (`n <= 2`), so those short lengths are
//! counted as multigraphs.

use num_bigint::BigUint;
use serde::Serialize;

use num_traits::Zero;

use crate::counting::{zero_predicate, CountClass, Counter, GraphFamily};
use crate::report::{Check, Report};
use crate::error::{Error, Result};

/// Default limit on `m * n`.
pub const DEFAULT_VERTEX_CAP: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    /// `(i, j) - (i + 1, j)`.
    Vertical,
    /// `(i, j) - (i, j + 1)`.
    Horizontal,
    /// `(i, n) - (i', 1)`, with `i' = i` or `m + 1 - i`.
    Seam,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub kind: EdgeKind,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }
}

/// An explicit grid, cylinder or Moebius strip on `m * n` vertices.
/// Vertex `(i, j)` (1-based row and column) has id `(i - 1) * n + (j - 1)`.
#[derive(Clone, Debug)]
pub struct ExplicitGraph {
    pub family: GraphFamily,
    pub m: usize,
    pub n: usize,
    pub edges: Vec<Edge>,
    incident: Vec<Vec<usize>>,
}

impl ExplicitGraph {
    pub fn new(family: GraphFamily, m: usize, n: usize) -> Result<ExplicitGraph> {
        Self::with_cap(family, m, n, DEFAULT_VERTEX_CAP)
    }

    pub fn with_cap(family: GraphFamily, m: usize, n: usize, cap: usize) -> Result<ExplicitGraph> {
        if m < 1 || n < 1 {
            return Err(Error::Parameter(format!("grid dimensions must be positive, got {m} x {n}")));
        }
        if m * n > cap {
            return Err(Error::Capacity { what: "m*n (oracle)", value: m * n, limit: cap });
        }
        let id = |i: usize, j: usize| (i - 1) * n + (j - 1);
        let mut edges = Vec::new();
        for i in 1..=m {
            for j in 1..=n {
                if i < m {
                    edges.push(Edge { a: id(i, j), b: id(i + 1, j), kind: EdgeKind::Vertical });
                }
                if j < n {
                    edges.push(Edge { a: id(i, j), b: id(i, j + 1), kind: EdgeKind::Horizontal });
                }
            }
        }
        for i in 1..=m {
            match family {
                GraphFamily::RG => {}
                GraphFamily::TkC => edges.push(Edge { a: id(i, n), b: id(i, 1), kind: EdgeKind::Seam }),
                GraphFamily::MS => edges.push(Edge { a: id(i, n), b: id(m + 1 - i, 1), kind: EdgeKind::Seam }),
            }
        }
        let mut incident = vec![Vec::new(); m * n];
        for (k, e) in edges.iter().enumerate() {
            incident[e.a].push(k);
            if !e.is_loop() {
                incident[e.b].push(k);
            }
        }
        Ok(ExplicitGraph { family, m, n, edges, incident })
    }

    pub fn vertex_count(&self) -> usize {
        self.m * self.n
    }

    /// `(row, column)`, both 1-based.
    pub fn position(&self, v: usize) -> (usize, usize) {
        (v / self.n + 1, v % self.n + 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].iter().map(|&k| if self.edges[k].is_loop() { 2 } else { 1 }).sum()
    }

    /// Loops or parallel edges are present.
    pub fn is_degenerate(&self) -> bool {
        let mut pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.a.min(e.b), e.a.max(e.b))).collect();
        let len = pairs.len();
        pairs.sort_unstable();
        pairs.dedup();
        pairs.len() != len || self.edges.iter().any(Edge::is_loop)
    }
}

/// A spanning subgraph with every degree equal to 2, as sorted edge indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFactor {
    pub edges: Vec<usize>,
}

/// Enumerate every 2-factor of `g`, each exactly once, in a deterministic
/// order.
pub fn enumerate_two_factors(g: &ExplicitGraph) -> Vec<TwoFactor> {
    let mut out = Vec::new();
    for_each_two_factor(g, |tf| out.push(TwoFactor { edges: tf.to_vec() }));
    out
}

/// Streaming variant of [`enumerate_two_factors`].
pub fn for_each_two_factor(g: &ExplicitGraph, mut visit: impl FnMut(&[usize])) {
    let mut st = Search {
        g,
        deg: vec![0; g.vertex_count()],
        decided: vec![false; g.edges.len()],
        chosen: Vec::new(),
    };
    st.vertex(0, &mut visit);
}

struct Search<'a> {
    g: &'a ExplicitGraph,
    deg: Vec<u8>,
    decided: Vec<bool>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn vertex(&mut self, v: usize, visit: &mut dyn FnMut(&[usize])) {
        if v == self.g.vertex_count() {
            let mut edges = self.chosen.clone();
            edges.sort_unstable();
            visit(&edges);
            return;
        }
        let open: Vec<usize> = self.g.incident[v].iter().copied().filter(|&k| !self.decided[k]).collect();
        for &k in &open {
            self.decided[k] = true;
        }
        let need = 2 - self.deg[v] as usize;
        // Subsets of the open edges whose degree contribution is exactly `need`.
        for mask in 0u32..(1 << open.len()) {
            let picked: Vec<usize> = (0..open.len()).filter(|&t| mask >> t & 1 == 1).map(|t| open[t]).collect();
            let add: usize = picked.iter().map(|&k| if self.g.edges[k].is_loop() { 2 } else { 1 }).sum();
            if add != need {
                continue;
            }
            let mut ok = true;
            for &k in &picked {
                let e = self.g.edges[k];
                if e.is_loop() {
                    self.deg[v] += 2;
                } else {
                    self.deg[e.a] += 1;
                    self.deg[e.b] += 1;
                    let w = if e.a == v { e.b } else { e.a };
                    ok &= self.deg[w] <= 2;
                }
                self.chosen.push(k);
            }
            if ok {
                self.vertex(v + 1, visit);
            }
            for &k in picked.iter().rev() {
                let e = self.g.edges[k];
                if e.is_loop() {
                    self.deg[v] -= 2;
                } else {
                    self.deg[e.a] -= 1;
                    self.deg[e.b] -= 1;
                }
                self.chosen.pop();
            }
        }
        for &k in &open {
            self.decided[k] = false;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CycleClass {
    Contractible,
    /// Wraps a cylinder once.
    NonContractible,
    /// Moebius: crosses the seam an odd number of times.
    ShortNonContractible,
    /// Moebius: crosses the seam an even, nonzero number of times.
    LongNonContractible,
}

/// A cycle together with its lifted step counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub class: CycleClass,
    pub length: usize,
    pub start_row: usize,
    pub right: usize,
    pub left: usize,
    pub down: usize,
    pub up: usize,
}

impl Cycle {
    fn dx(&self) -> i64 {
        self.right as i64 - self.left as i64
    }

    fn dy(&self) -> i64 {
        self.down as i64 - self.up as i64
    }
}

/// Split `tf` into cycles and classify each by its net lifted displacement.
///
/// Fails with a structural error if a displacement is not one of the values
/// allowed for the family, or if the step counts violate the expected
/// arithmetic: contractible cycles return to the start, a cylinder cycle
/// has no net vertical motion, a short Moebius cycle moves by
/// `m + 1 - 2 i` rows from row `i`, a long one by none.
pub fn classify(tf: &TwoFactor, g: &ExplicitGraph) -> Result<Vec<Cycle>> {
    let nv = g.vertex_count();
    // Edge ends `(edge, side)` at each vertex; side 0 is `a`, side 1 is `b`.
    let mut ends: Vec<Vec<(usize, u8)>> = vec![Vec::new(); nv];
    for &k in &tf.edges {
        let e = g.edges[k];
        ends[e.a].push((k, 0));
        ends[e.b].push((k, 1));
    }
    if let Some(v) = (0..nv).find(|&v| ends[v].len() != 2) {
        return Err(Error::Structural(format!("vertex {:?} has degree {}", g.position(v), ends[v].len())));
    }
    let mut used = vec![false; g.edges.len()];
    let mut cycles = Vec::new();
    for start in 0..nv {
        let Some(&first) = ends[start].iter().find(|&&(k, _)| !used[k]) else { continue };
        let (start_row, _) = g.position(start);
        let mut c = Cycle {
            class: CycleClass::Contractible,
            length: 0,
            start_row,
            right: 0,
            left: 0,
            down: 0,
            up: 0,
        };
        let mut sheet = 1i64;
        let mut out = first;
        loop {
            let (k, side) = out;
            used[k] = true;
            let e = g.edges[k];
            let forward = side == 0;
            match e.kind {
                EdgeKind::Horizontal | EdgeKind::Seam => {
                    if forward {
                        c.right += 1;
                    } else {
                        c.left += 1;
                    }
                    if e.kind == EdgeKind::Seam && g.family == GraphFamily::MS {
                        sheet = -sheet;
                    }
                }
                EdgeKind::Vertical => {
                    if forward == (sheet > 0) {
                        c.down += 1;
                    } else {
                        c.up += 1;
                    }
                }
            }
            c.length += 1;
            let at = if forward { e.b } else { e.a };
            let arrived = (k, 1 - side);
            out = if ends[at][0] == arrived { ends[at][1] } else { ends[at][0] };
            if out == first {
                break;
            }
        }
        c.class = classify_steps(&c, g)?;
        cycles.push(c);
    }
    if g.family == GraphFamily::MS {
        let shorts = cycles.iter().filter(|c| c.class == CycleClass::ShortNonContractible).count();
        if shorts > 1 {
            return Err(Error::Structural(format!("{shorts} short non-contractible cycles in one 2-factor")));
        }
    }
    Ok(cycles)
}

fn classify_steps(c: &Cycle, g: &ExplicitGraph) -> Result<CycleClass> {
    let n = g.n as i64;
    let dx = c.dx().abs();
    let dy = c.dy();
    let bad = |what: &str| {
        Err(Error::Structural(format!(
            "{} cycle from row {}: right {} left {} down {} up {} ({what})",
            g.family, c.start_row, c.right, c.left, c.down, c.up
        )))
    };
    let class = match (g.family, dx) {
        (_, 0) => CycleClass::Contractible,
        (GraphFamily::TkC, d) if d == n => CycleClass::NonContractible,
        (GraphFamily::MS, d) if d == n => CycleClass::ShortNonContractible,
        (GraphFamily::MS, d) if d == 2 * n => CycleClass::LongNonContractible,
        _ => return bad("unexpected horizontal displacement"),
    };
    let want_dy = match class {
        CycleClass::ShortNonContractible => g.m as i64 + 1 - 2 * c.start_row as i64,
        _ => 0,
    };
    if dy != want_dy {
        return bad("vertical displacement");
    }
    Ok(class)
}

/// Totals and the parity split of one family on one explicit graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCounts {
    pub family: GraphFamily,
    pub m: usize,
    pub n: usize,
    pub total: BigUint,
    /// Cylinder: even number of non-contractible cycles. Moebius: no short
    /// cycle. Grid: all 2-factors.
    pub class0: BigUint,
    /// Cylinder: odd number of non-contractible cycles. Moebius: a short
    /// cycle is present. Grid: zero.
    pub class1: BigUint,
    /// Loops or parallel edges were present.
    pub degenerate: bool,
}

pub fn oracle_counts(family: GraphFamily, m: usize, n: usize) -> Result<OracleCounts> {
    oracle_counts_with_cap(family, m, n, DEFAULT_VERTEX_CAP)
}

pub fn oracle_counts_with_cap(family: GraphFamily, m: usize, n: usize, cap: usize) -> Result<OracleCounts> {
    let g = ExplicitGraph::with_cap(family, m, n, cap)?;
    let (mut c0, mut c1) = (0u64, 0u64);
    let mut err = None;
    for_each_two_factor(&g, |edges| {
        if err.is_some() {
            return;
        }
        let tf = TwoFactor { edges: edges.to_vec() };
        match classify(&tf, &g) {
            Ok(cycles) => {
                let odd = match family {
                    GraphFamily::RG => false,
                    GraphFamily::TkC => {
                        cycles.iter().filter(|c| c.class == CycleClass::NonContractible).count() % 2 == 1
                    }
                    GraphFamily::MS => cycles.iter().any(|c| c.class == CycleClass::ShortNonContractible),
                };
                if odd {
                    c1 += 1;
                } else {
                    c0 += 1;
                }
            }
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(OracleCounts {
        family,
        m,
        n,
        total: BigUint::from(c0 + c1),
        class0: BigUint::from(c0),
        class1: BigUint::from(c1),
        degenerate: g.is_degenerate(),
    })
}

/// Compare brute-force totals and splits with the transfer counts for
/// `n = 1..=n_max`, and check the observed zeros against the zero pattern.
pub fn verify_against_transfer(m: usize, n_max: usize) -> Result<Report> {
    let k = Counter::build(m)?;
    let rg = k.rg_series(n_max);
    let tkc = k.split_series(GraphFamily::TkC, n_max)?;
    let ms = k.split_series(GraphFamily::MS, n_max)?;
    let mut r = Report::default();
    for n in 1..=n_max {
        let o = oracle_counts(GraphFamily::RG, m, n)?;
        r.push(Check::eq(format!("rg n={n}"), m, o.total.clone(), rg[n - 1].clone()));
        r.push(Check::eq(format!("rg n={n} zero"), m, o.total.is_zero(), zero_predicate(CountClass::Rg, m, n)));
        for (family, split, classes) in [
            (GraphFamily::TkC, &tkc, [CountClass::TkcEven, CountClass::TkcOdd]),
            (GraphFamily::MS, &ms, [CountClass::MsNoShort, CountClass::MsShort]),
        ] {
            let o = oracle_counts(family, m, n)?;
            r.push(Check::eq(
                format!("{family} n={n}"),
                m,
                (o.class0.to_string(), o.class1.to_string()),
                (split.even[n - 1].to_string(), split.odd[n - 1].to_string()),
            ));
            let zeros = (o.class0.is_zero(), o.class1.is_zero());
            let want = (zero_predicate(classes[0], m, n), zero_predicate(classes[1], m, n));
            r.push(Check::eq(format!("{family} n={n} zeros"), m, zeros, want));
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn total(f: GraphFamily, m: usize, n: usize) -> u64 {
        oracle_counts(f, m, n).unwrap().total.try_into().unwrap()
    }

    #[test]
    fn small_totals() {
        assert_eq!(total(GraphFamily::RG, 4, 3), 3);
        assert_eq!(total(GraphFamily::TkC, 2, 2), 5);
        assert_eq!(total(GraphFamily::RG, 3, 3), 0);
        assert_eq!(total(GraphFamily::TkC, 3, 2), 13);
        assert_eq!(total(GraphFamily::MS, 2, 4), 7);
        assert_eq!(total(GraphFamily::TkC, 2, 1), 1);
        assert_eq!(total(GraphFamily::MS, 2, 1), 3);
    }

    #[test]
    fn tkc_2_2_split_sums() {
        let c = oracle_counts(GraphFamily::TkC, 2, 2).unwrap();
        assert_eq!(&c.class0 + &c.class1, BigUint::from(5u32));
        assert!(c.degenerate);
    }

    #[test]
    fn rg_cycles_are_contractible() {
        let g = ExplicitGraph::new(GraphFamily::RG, 4, 4).unwrap();
        for tf in enumerate_two_factors(&g) {
            assert!(classify(&tf, &g).unwrap().iter().all(|c| c.class == CycleClass::Contractible));
        }
    }

    #[test]
    fn cylinder_with_one_nc_and_one_c_cycle() {
        let g = ExplicitGraph::new(GraphFamily::TkC, 4, 6).unwrap();
        let found = enumerate_two_factors(&g).iter().any(|tf| {
            let cs = classify(tf, &g).unwrap();
            cs.len() == 2
                && cs.iter().filter(|c| c.class == CycleClass::NonContractible).count() == 1
                && cs.iter().filter(|c| c.class == CycleClass::Contractible).count() == 1
        });
        assert!(found);
    }

    #[test]
    fn moebius_mixed_classes() {
        // One contractible, two long and one short cycle.
        let g = ExplicitGraph::new(GraphFamily::MS, 7, 4).unwrap();
        let found = enumerate_two_factors(&g).iter().any(|tf| {
            let cs = classify(tf, &g).unwrap();
            let n = |k| cs.iter().filter(|c| c.class == k).count();
            n(CycleClass::Contractible) == 1
                && n(CycleClass::LongNonContractible) == 2
                && n(CycleClass::ShortNonContractible) == 1
        });
        assert!(found);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(ExplicitGraph::new(GraphFamily::RG, 6, 6), Err(Error::Capacity { .. })));
        assert!(ExplicitGraph::with_cap(GraphFamily::RG, 6, 6, 36).is_ok());
    }

    #[test]
    fn degrees() {
        let g = ExplicitGraph::new(GraphFamily::TkC, 3, 5).unwrap();
        assert!((0..g.vertex_count()).all(|v| (3..=4).contains(&g.degree(v))));
        assert!(!g.is_degenerate());
        let g = ExplicitGraph::new(GraphFamily::RG, 3, 5).unwrap();
        assert!((0..g.vertex_count()).all(|v| (2..=4).contains(&g.degree(v))));
    }

    #[test]
    fn agrees_with_transfer_counts() {
        use crate::counting::Counter;
        for m in 2..=4 {
            let k = Counter::build(m).unwrap();
            let rg = k.rg_series(6);
            let tkc = k.split_series(GraphFamily::TkC, 6).unwrap();
            let ms = k.split_series(GraphFamily::MS, 6).unwrap();
            for n in 1..=6 {
                let o = oracle_counts(GraphFamily::RG, m, n).unwrap();
                assert_eq!(o.total, rg[n - 1], "rg m={m} n={n}");
                let o = oracle_counts(GraphFamily::TkC, m, n).unwrap();
                assert_eq!((&o.class0, &o.class1), (&tkc.even[n - 1], &tkc.odd[n - 1]), "tkc m={m} n={n}");
                let o = oracle_counts(GraphFamily::MS, m, n).unwrap();
                assert_eq!((&o.class0, &o.class1), (&ms.even[n - 1], &ms.odd[n - 1]), "ms m={m} n={n}");
            }
        }
    }
}
