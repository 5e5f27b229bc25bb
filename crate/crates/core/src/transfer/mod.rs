//! Transfer digraphs: `D_m`, `D*_m`, its components, the reversal pairing
//! and `R**_m`, plus the structural property checks.

pub mod cache;
mod columns;
mod components;
mod contracted;
mod dstar;

pub use columns::{fibonacci, first_last_sets, frame_word, DigraphDm, EXPLICIT_ARC_LIMIT};
pub use components::{bipartition, is_strongly_connected, ComponentLabel, Components};
pub use contracted::{ContractedRG, Pairing};
pub use dstar::{expected_vertex_count, missing_word, DStar, DEFAULT_MAX_M, HARD_MAX_M};

use crate::codes::{column_count, BinaryWord};
use crate::error::Result;
use crate::report::{Check, Report};

/// Everything derived from `D*_m` that the counters need.
#[derive(Clone, Debug)]
pub struct Transfer {
    pub dstar: DStar,
    pub components: Components,
    pub pairing: Pairing,
    pub rstarstar: ContractedRG,
}

impl Transfer {
    /// Build from scratch with the given capacity limit.
    pub fn build_with_limit(m: usize, limit: usize) -> Result<Transfer> {
        let dstar = DStar::build_with_limit(m, limit)?;
        Self::from_dstar(dstar)
    }

    pub fn build(m: usize) -> Result<Transfer> {
        Self::build_with_limit(m, DEFAULT_MAX_M)
    }

    pub fn from_dstar(dstar: DStar) -> Result<Transfer> {
        let components = Components::decompose(&dstar)?;
        Self::from_parts(dstar, components)
    }

    pub(crate) fn from_parts(dstar: DStar, components: Components) -> Result<Transfer> {
        let pairing = Pairing::build(&dstar)?;
        let rstarstar = ContractedRG::build(&dstar, &components)?;
        Ok(Transfer { dstar, components, pairing, rstarstar })
    }

    pub fn m(&self) -> usize {
        self.dstar.m()
    }

    /// Run every structural property check for this height.
    pub fn check_structure(&self) -> Report {
        let d = &self.dstar;
        let c = &self.components;
        let m = d.m();
        let mut r = Report::default();

        r.push(Check::new("D* symmetric", Some(m), d.is_symmetric(), ""));
        r.push(Check::eq("|V(D*)|", m, d.vertex_count(), expected_vertex_count(m)));
        if let Some(w) = missing_word(m) {
            r.push(Check::new("missing word (01)^k0", Some(m), d.index_of(w).is_none(), w.to_string()));
        }
        r.push(Check::eq("|E(D*)| = |V(D)|", m, d.arc_count() as u64, column_count(m)));
        let loops: Vec<String> = d.loops().into_iter().map(|i| d.word(i).to_string()).collect();
        r.push(Check::eq("unique loop at 1^m", m, loops, vec![BinaryWord::ones(m).to_string()]));

        let parity_ok = d.arcs().all(|(i, j)| d.ones(i) % 2 == d.ones(j) % 2);
        r.push(Check::new("arcs preserve 1-count parity", Some(m), parity_ok, ""));

        let sc = c.all().iter().all(|ms| is_strongly_connected(d, ms));
        r.push(Check::new("components strongly connected", Some(m), sc, format!("{} components", c.count())));

        let same = c.r_star() == c.a_star();
        r.push(Check::new("A* = R* iff m even", Some(m), same == (m % 2 == 0), format!("A*=R*: {same}")));

        let odd_zeros: Vec<u32> = (0..d.vertex_count() as u32)
            .filter(|&i| (m as u32 - d.ones(i as usize)) % 2 == 1)
            .collect();
        r.push(Check::new(
            "odd-0s subdigraph bipartite",
            Some(m),
            bipartition(d, &odd_zeros).is_some(),
            format!("{} vertices", odd_zeros.len()),
        ));

        if m % 2 == 0 {
            let bad: Vec<String> = (0..d.vertex_count())
                .filter(|&i| d.is_palindrome(i) && c.component_of(i) != c.a_star())
                .map(|i| d.word(i).to_string())
                .collect();
            r.push(Check::new("palindromes lie in A*", Some(m), bad.is_empty(), bad.join(",")));
        }

        let closed = c
            .members(c.r_star())
            .iter()
            .all(|&v| c.component_of(self.pairing.image(v as usize)) == c.r_star());
        r.push(Check::new("R* closed under reversal", Some(m), closed, ""));
        r.push(Check::new("pairing is an involution", Some(m), self.pairing.is_involution(), ""));

        let (f, l) = first_last_sets(m).expect("height already validated");
        r.push(Check::eq("|F_m| = Fib(m-1)", m, f.len() as u64, fibonacci(m - 1)));
        r.push(Check::eq("|L_m| = |F_m|", m, l.len(), f.len()));

        let rs = &self.rstarstar;
        r.push(Check::new("R** entries <= 2", Some(m), rs.max_entry() <= 2, format!("max {}", rs.max_entry())));
        if m % 2 == 1 {
            r.push(Check::new("R** loop-free for odd m", Some(m), rs.loops().is_empty(), ""));
        }
        r.push(Check::new("0^m class is a singleton", Some(m), rs.class(0).len() == 1, ""));
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structure_checks_pass_small() {
        for m in 2..=9 {
            let t = Transfer::build(m).unwrap();
            let rep = t.check_structure();
            assert!(rep.passed(), "m={m}: {:?}", rep.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn palindromes_small_cases() {
        for m in [2, 4, 6] {
            let t = Transfer::build(m).unwrap();
            let d = &t.dstar;
            assert!((0..d.vertex_count()).filter(|&i| d.is_palindrome(i)).all(|i| t.components.component_of(i) == 0));
        }
    }
}
