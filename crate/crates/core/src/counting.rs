//! Exact 2-factor counts for rectangular grids, thick cylinders and Moebius
//! strips.
//!
//! * `RG_m(n)`: entry `(0, 0)` of the `n`-th power of the `R**_m`
//!   multiplicity matrix.
//! * `TkC_m(n)`: `tr(T^n)` for the adjacency matrix `T` of `D*_m`.
//! * `MS_m(n)`: `sum_v T^n[rev v, v]`.
//!
//! `T` is symmetric and commutes with the reversal pairing, so with
//! `u_k = T^k e_v` the diagonal terms are `T^{2k}[v, v] = u_k . u_k` and
//! `T^{2k+1}[v, v] = u_k . u_{k+1}`; the Moebius terms use `P u_k` in place
//! of the left factor.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codes::Letter;
use crate::error::{Error, Result};
use crate::transfer::{first_last_sets, frame_word, DigraphDm, Transfer};

/// Exact nonnegative count.
pub type BigCounter = BigUint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFamily {
    /// Rectangular grid `P_m x P_n`.
    RG,
    /// Thick cylinder `P_m x C_n`.
    TkC,
    /// Moebius strip of height `m` and length `n`.
    MS,
}

impl GraphFamily {
    pub const ALL: [GraphFamily; 3] = [GraphFamily::RG, GraphFamily::TkC, GraphFamily::MS];

    pub fn name(self) -> &'static str {
        match self {
            GraphFamily::RG => "rg",
            GraphFamily::TkC => "tkc",
            GraphFamily::MS => "ms",
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "rg" => Ok(GraphFamily::RG),
            "tkc" => Ok(GraphFamily::TkC),
            "ms" => Ok(GraphFamily::MS),
            _ => Err(Error::Parameter(format!("unknown graph family `{s}` (expected rg, tkc or ms)"))),
        }
    }
}

/// A count class for which the zero pattern is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CountClass {
    Rg,
    /// Thick cylinder, even number of non-contractible cycles.
    TkcEven,
    /// Thick cylinder, odd number of non-contractible cycles.
    TkcOdd,
    /// Moebius strip without a short non-contractible cycle.
    MsNoShort,
    /// Moebius strip with a short non-contractible cycle.
    MsShort,
}

impl CountClass {
    pub const ALL: [CountClass; 5] =
        [CountClass::Rg, CountClass::TkcEven, CountClass::TkcOdd, CountClass::MsNoShort, CountClass::MsShort];
}

/// `true` exactly when the count of the class vanishes for `(m, n)`.
///
/// A rectangular grid with one column is a path and never has a 2-factor,
/// so `(Rg, m, 1)` is reported as zero as well.
pub fn zero_predicate(class: CountClass, m: usize, n: usize) -> bool {
    let (m_odd, n_odd) = (m % 2 == 1, n % 2 == 1);
    match class {
        CountClass::Rg => (m_odd && n_odd) || n == 1 || m == 1,
        CountClass::TkcEven => m_odd && n_odd,
        CountClass::TkcOdd => !m_odd && n_odd,
        CountClass::MsNoShort => m_odd && n_odd,
        CountClass::MsShort => !m_odd && !n_odd,
    }
}

/// A count with an optional parity split `(even, odd)`.
///
/// The split is taken by the parity of the number of 1s in the outlet words
/// along the closed walk. For thick cylinders the odd part counts 2-factors
/// with an odd number of non-contractible cycles; for Moebius strips it
/// counts those containing a short non-contractible cycle. Both readings are
/// cross-checked against the brute-force oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    pub family: GraphFamily,
    pub m: usize,
    pub n: usize,
    pub value: BigCounter,
    pub split: Option<(BigCounter, BigCounter)>,
}

/// Per-length sums of a count sequence and its parity split, index `n - 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SplitSeries {
    pub even: Vec<BigCounter>,
    pub odd: Vec<BigCounter>,
}

impl SplitSeries {
    pub fn totals(&self) -> Vec<BigCounter> {
        self.even.iter().zip(&self.odd).map(|(a, b)| a + b).collect()
    }
}

/// One component of `D*_m` in local coordinates.
struct Block {
    adj: Vec<Vec<u32>>,
    /// Local index of the reversed word, when it lies in the same block.
    rev: Vec<Option<u32>>,
    odd: bool,
}

/// Counting engine for one height `m`.
#[derive(Clone)]
pub struct Counter {
    transfer: Arc<Transfer>,
}

impl Counter {
    pub fn new(transfer: Transfer) -> Counter {
        Counter { transfer: Arc::new(transfer) }
    }

    pub fn from_arc(transfer: Arc<Transfer>) -> Counter {
        Counter { transfer }
    }

    pub fn build(m: usize) -> Result<Counter> {
        Ok(Counter::new(Transfer::build(m)?))
    }

    pub fn transfer(&self) -> &Transfer {
        &self.transfer
    }

    pub fn m(&self) -> usize {
        self.transfer.m()
    }

    fn block(&self, c: usize) -> Block {
        let t = &self.transfer;
        let members = t.components.members(c);
        let mut local = vec![u32::MAX; t.dstar.vertex_count()];
        for (k, &v) in members.iter().enumerate() {
            local[v as usize] = k as u32;
        }
        let adj = members
            .iter()
            .map(|&v| t.dstar.successors(v as usize).iter().map(|&w| local[w as usize]).collect())
            .collect();
        let rev = members
            .iter()
            .map(|&v| {
                let r = local[t.pairing.image(v as usize)];
                (r != u32::MAX).then_some(r)
            })
            .collect();
        let odd = t.dstar.ones(members[0] as usize) % 2 == 1;
        Block { adj, rev, odd }
    }

    /// `f(1..=n_max)` restricted to closed walks inside component `c`,
    /// for `TkC` (`moebius = false`) or `MS` (`moebius = true`).
    pub fn component_series(&self, c: usize, moebius: bool, n_max: usize) -> Vec<BigCounter> {
        let block = self.block(c);
        closed_walk_series(&block, moebius, n_max)
    }

    /// `f(1..=n_max)` for a cylinder or strip family, split by parity.
    pub fn split_series(&self, family: GraphFamily, n_max: usize) -> Result<SplitSeries> {
        let moebius = match family {
            GraphFamily::TkC => false,
            GraphFamily::MS => true,
            GraphFamily::RG => return Err(Error::Parameter("rectangular grids have no parity split".into())),
        };
        let blocks: Vec<Block> = (0..self.transfer.components.count()).map(|c| self.block(c)).collect();
        let mut out = SplitSeries { even: vec![BigUint::zero(); n_max], odd: vec![BigUint::zero(); n_max] };
        for b in &blocks {
            let s = closed_walk_series(b, moebius, n_max);
            let target = if b.odd { &mut out.odd } else { &mut out.even };
            for (acc, x) in target.iter_mut().zip(s) {
                *acc += x;
            }
        }
        Ok(out)
    }

    /// `f(1..=n_max)` for any family.
    pub fn series(&self, family: GraphFamily, n_max: usize) -> Result<Vec<BigCounter>> {
        match family {
            GraphFamily::RG => Ok(self.rg_series(n_max)),
            _ => Ok(self.split_series(family, n_max)?.totals()),
        }
    }

    /// Row-vector iteration `x <- x M` from the unit vector at the class of
    /// `0^m`; `f(n) = x_n[0]`.
    pub fn rg_series(&self, n_max: usize) -> Vec<BigCounter> {
        let r = &self.transfer.rstarstar;
        let k = r.class_count();
        let mut x = vec![BigUint::zero(); k];
        x[0] = BigUint::one();
        let mut out = Vec::with_capacity(n_max);
        for _ in 0..n_max {
            let mut y = vec![BigUint::zero(); k];
            for (c, xc) in x.iter().enumerate() {
                if xc.is_zero() {
                    continue;
                }
                for &(d, mult) in r.row(c) {
                    if mult == 1 {
                        y[d as usize] += xc;
                    } else {
                        y[d as usize] += xc * mult;
                    }
                }
            }
            out.push(y[0].clone());
            x = y;
        }
        out
    }

    pub fn count(&self, family: GraphFamily, n: usize) -> Result<BigCounter> {
        check_length(n)?;
        Ok(self.series(family, n)?.pop().unwrap())
    }

    pub fn count_split(&self, family: GraphFamily, n: usize) -> Result<(BigCounter, BigCounter)> {
        check_length(n)?;
        let s = self.split_series(family, n)?;
        Ok((s.even[n - 1].clone(), s.odd[n - 1].clone()))
    }

    pub fn count_result(&self, family: GraphFamily, n: usize, split: bool) -> Result<CountResult> {
        check_length(n)?;
        let m = self.m();
        if split && family != GraphFamily::RG {
            let (e, o) = self.count_split(family, n)?;
            Ok(CountResult { family, m, n, value: &e + &o, split: Some((e, o)) })
        } else {
            Ok(CountResult { family, m, n, value: self.count(family, n)?, split: None })
        }
    }
}

fn check_length(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Parameter("length n must be at least 1".into()));
    }
    Ok(())
}

fn closed_walk_series(b: &Block, moebius: bool, n_max: usize) -> Vec<BigCounter> {
    let s = b.adj.len();
    let steps = n_max / 2 + 1;
    (0..s)
        .into_par_iter()
        .fold(
            || vec![BigUint::zero(); n_max],
            |mut acc, v| {
                let mut u = vec![BigUint::zero(); s];
                let mut next = vec![BigUint::zero(); s];
                u[v] = BigUint::one();
                for k in 0..steps {
                    if 2 * k >= 1 && 2 * k <= n_max {
                        acc[2 * k - 1] += pair_dot(b, moebius, &u, &u);
                    }
                    if 2 * k + 1 > n_max {
                        break;
                    }
                    for (i, nx) in next.iter_mut().enumerate() {
                        nx.set_zero();
                        for &j in &b.adj[i] {
                            let uj = &u[j as usize];
                            if !uj.is_zero() {
                                *nx += uj;
                            }
                        }
                    }
                    acc[2 * k] += pair_dot(b, moebius, &u, &next);
                    std::mem::swap(&mut u, &mut next);
                }
                acc
            },
        )
        .reduce(
            || vec![BigUint::zero(); n_max],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

/// `x . y`, or `(P x) . y` for the Moebius pairing.
fn pair_dot(b: &Block, moebius: bool, x: &[BigUint], y: &[BigUint]) -> BigUint {
    let mut sum = BigUint::zero();
    for (i, yi) in y.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let xi = if moebius {
            match b.rev[i] {
                Some(r) => &x[r as usize],
                None => continue,
            }
        } else {
            &x[i]
        };
        if !xi.is_zero() {
            sum += xi * yi;
        }
    }
    sum
}

/// Dense square matrix of exact nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigIntMatrix {
    n: usize,
    data: Vec<BigUint>,
}

impl BigIntMatrix {
    pub fn zeros(n: usize) -> Self {
        BigIntMatrix { n, data: vec![BigUint::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = BigUint::one();
        }
        m
    }

    /// Adjacency matrix of `D*_m` restricted to `members` (all vertices if
    /// `None`), in the order given.
    pub fn adjacency(t: &Transfer, members: Option<&[u32]>) -> Self {
        let all: Vec<u32>;
        let members = match members {
            Some(ms) => ms,
            None => {
                all = (0..t.dstar.vertex_count() as u32).collect();
                &all
            }
        };
        let n = members.len();
        let mut m = Self::zeros(n);
        for (i, &v) in members.iter().enumerate() {
            for (j, &w) in members.iter().enumerate() {
                if t.dstar.has_arc(v as usize, w as usize) {
                    m.data[i * n + j] = BigUint::one();
                }
            }
        }
        m
    }

    /// Pairing matrix `P*`: entry `(i, j)` is 1 iff word `i` is the reversal of word `j`.
    pub fn pairing(t: &Transfer) -> Self {
        let n = t.dstar.vertex_count();
        let mut m = Self::zeros(n);
        for j in 0..n {
            m.data[t.pairing.image(j) * n + j] = BigUint::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigUint) {
        self.data[i * self.n + j] = x;
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.data[k * n + j];
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> BigUint {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

/// Cross-check counts from explicit matrix powers of whole `T*_m`, by
/// repeated squaring. Only sensible for small `m`.
pub fn count_by_matrix_power(t: &Transfer, family: GraphFamily, n: usize) -> Result<BigCounter> {
    check_length(n)?;
    match family {
        GraphFamily::TkC => Ok(BigIntMatrix::adjacency(t, None).pow(n as u64).trace()),
        GraphFamily::MS => {
            let p = BigIntMatrix::pairing(t);
            Ok(p.mul(&BigIntMatrix::adjacency(t, None).pow(n as u64)).trace())
        }
        GraphFamily::RG => {
            let r = &t.rstarstar;
            let k = r.class_count();
            let mut mm = BigIntMatrix::zeros(k);
            for x in 0..k {
                for &(y, mult) in r.row(x) {
                    mm.set(x, y as usize, BigUint::from(mult));
                }
            }
            Ok(mm.pow(n as u64).get(0, 0).clone())
        }
    }
}

/// Largest height accepted by [`count_rg_reference`].
pub const RG_REFERENCE_MAX_M: usize = 6;

/// Rectangular-grid counts from walks in `D_m`: the number of walks of
/// length `n - 1` starting in `F_m` and ending in `L_m`.
pub fn count_rg_reference(m: usize, n: usize) -> Result<BigCounter> {
    check_length(n)?;
    if m > RG_REFERENCE_MAX_M {
        return Err(Error::Capacity { what: "m (D_m reference count)", value: m, limit: RG_REFERENCE_MAX_M });
    }
    let d = DigraphDm::build(m)?;
    let (first, last) = first_last_sets(m)?;
    let mut x = vec![BigUint::zero(); d.vertex_count()];
    for w in &first {
        x[d.index_of(w).unwrap()] = BigUint::one();
    }
    for _ in 1..n {
        x = step_dm(&d, &x);
    }
    Ok(last.iter().map(|w| &x[d.index_of(w).unwrap()]).sum())
}

/// Walks of length `n + 1` in `D_m` from `d b^{m-2} f` to `a b^{m-2} c`.
pub fn count_rg_frame_walks(m: usize, n: usize) -> Result<BigCounter> {
    check_length(n)?;
    if m > RG_REFERENCE_MAX_M {
        return Err(Error::Capacity { what: "m (D_m reference count)", value: m, limit: RG_REFERENCE_MAX_M });
    }
    let d = DigraphDm::build(m)?;
    let from = d.index_of(&frame_word(m, Letter::D, Letter::F)).unwrap();
    let to = d.index_of(&frame_word(m, Letter::A, Letter::C)).unwrap();
    let mut x = vec![BigUint::zero(); d.vertex_count()];
    x[from] = BigUint::one();
    for _ in 0..n + 1 {
        x = step_dm(&d, &x);
    }
    Ok(x[to].clone())
}

fn step_dm(d: &DigraphDm, x: &[BigUint]) -> Vec<BigUint> {
    let mut y = vec![BigUint::zero(); x.len()];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for &j in d.successors(i) {
            y[j as usize] += xi;
        }
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(m: usize) -> Counter {
        Counter::build(m).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn rg_examples() {
        assert_eq!(c(2).count(GraphFamily::RG, 4).unwrap(), big(2));
        assert_eq!(c(3).count(GraphFamily::RG, 3).unwrap(), big(0));
        assert_eq!(c(4).count(GraphFamily::RG, 7).unwrap(), big(779));
        assert_eq!(c(3).count(GraphFamily::RG, 4).unwrap(), big(3));
    }

    #[test]
    fn tkc_examples() {
        assert_eq!(c(2).count(GraphFamily::TkC, 2).unwrap(), big(5));
        assert_eq!(c(3).count(GraphFamily::TkC, 2).unwrap(), big(13));
        assert_eq!(c(4).count(GraphFamily::TkC, 1).unwrap(), big(1));
        let s: Vec<BigUint> = c(3).series(GraphFamily::TkC, 8).unwrap();
        assert_eq!(s, [1u64, 13, 13, 53, 81, 253, 477, 1317].map(big));
    }

    #[test]
    fn ms_examples() {
        assert_eq!(c(2).count(GraphFamily::MS, 1).unwrap(), big(3));
        assert_eq!(c(4).count(GraphFamily::MS, 2).unwrap(), big(17));
        assert_eq!(c(3).count(GraphFamily::MS, 4).unwrap(), big(51));
        assert_eq!(c(2).count(GraphFamily::MS, 5).unwrap(), big(13));
        assert_eq!(c(4).series(GraphFamily::MS, 4).unwrap(), [9u64, 17, 93, 197].map(big));
    }

    #[test]
    fn split_examples() {
        let (f0, f1) = c(2).count_split(GraphFamily::TkC, 3).unwrap();
        assert_eq!(&f0 + &f1, big(4));
        // Both rows are triangles: two non-contractible cycles, an even number.
        assert_eq!(f1, big(0));
        assert_eq!(f0, big(4));
        let (f0, f1) = c(2).count_split(GraphFamily::MS, 2).unwrap();
        assert_eq!(&f0 + &f1, big(3));
        // Both dimensions even: no short non-contractible cycle is possible.
        assert_eq!(f1, big(0));
    }

    #[test]
    fn rejects_zero_length() {
        assert!(matches!(c(2).count(GraphFamily::TkC, 0), Err(Error::Parameter(_))));
        assert!(count_rg_reference(7, 3).is_err());
    }

    #[test]
    fn rg_series_small() {
        assert_eq!(c(2).series(GraphFamily::RG, 6).unwrap(), [0u64, 1, 1, 2, 3, 5].map(big));
    }

    #[test]
    fn reference_rg_agrees() {
        assert_eq!(count_rg_reference(4, 3).unwrap(), big(3));
        assert_eq!(count_rg_reference(2, 2).unwrap(), big(1));
        assert_eq!(count_rg_reference(5, 4).unwrap(), big(54));
        for m in 2..=5 {
            let s = c(m).rg_series(10);
            for n in 1..=10 {
                assert_eq!(count_rg_reference(m, n).unwrap(), s[n - 1], "m={m} n={n}");
            }
        }
        for m in 2..=4 {
            let s = c(m).rg_series(8);
            for n in 1..=8 {
                assert_eq!(count_rg_frame_walks(m, n).unwrap(), s[n - 1], "m={m} n={n}");
            }
        }
    }

    #[test]
    fn matrix_power_agrees() {
        for m in 2..=6 {
            let k = c(m);
            for fam in GraphFamily::ALL {
                let s = k.series(fam, 12).unwrap();
                for n in [1, 2, 5, 12] {
                    assert_eq!(count_by_matrix_power(k.transfer(), fam, n).unwrap(), s[n - 1], "{fam} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn zero_predicate_examples() {
        assert!(zero_predicate(CountClass::Rg, 3, 5));
        assert!(zero_predicate(CountClass::TkcOdd, 4, 3));
        assert!(!zero_predicate(CountClass::MsShort, 3, 3));
    }

    #[test]
    fn zero_pattern_matches_counts() {
        for m in 2..=6 {
            let k = c(m);
            let rg = k.rg_series(10);
            let tkc = k.split_series(GraphFamily::TkC, 10).unwrap();
            let ms = k.split_series(GraphFamily::MS, 10).unwrap();
            for n in 1..=10 {
                let i = n - 1;
                assert_eq!(rg[i].is_zero(), zero_predicate(CountClass::Rg, m, n), "rg m={m} n={n}");
                assert_eq!(tkc.even[i].is_zero(), zero_predicate(CountClass::TkcEven, m, n), "m={m} n={n}");
                assert_eq!(tkc.odd[i].is_zero(), zero_predicate(CountClass::TkcOdd, m, n), "m={m} n={n}");
                assert_eq!(ms.even[i].is_zero(), zero_predicate(CountClass::MsNoShort, m, n), "m={m} n={n}");
                assert_eq!(ms.odd[i].is_zero(), zero_predicate(CountClass::MsShort, m, n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn tkc_grows_every_two_steps() {
        for m in 2..=6 {
            let s = c(m).series(GraphFamily::TkC, 20).unwrap();
            assert!(s.windows(3).all(|w| w[2] >= w[0]));
        }
    }
}
