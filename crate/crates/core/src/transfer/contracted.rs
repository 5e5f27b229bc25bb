//! The reversal pairing on `D*_m` and the contracted digraph `R**_m`.

use crate::codes::BinaryWord;
use crate::error::{Error, Result};
use crate::transfer::{Components, DStar};

/// The involution `v -> reverse(v)` on the vertex indices of `D*_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    image: Vec<u32>,
}

impl Pairing {
    pub fn build(d: &DStar) -> Result<Pairing> {
        let image = (0..d.vertex_count())
            .map(|i| {
                d.reverse_index(i)
                    .map(|j| j as u32)
                    .ok_or_else(|| Error::Structural(format!("reverse of {} is not a vertex", d.word(i))))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Pairing { image })
    }

    pub fn image(&self, i: usize) -> usize {
        self.image[i] as usize
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.image
    }

    pub fn fixed_points(&self) -> usize {
        self.image.iter().enumerate().filter(|&(i, &j)| i == j as usize).count()
    }

    pub fn is_involution(&self) -> bool {
        (0..self.image.len()).all(|i| self.image(self.image(i)) == i)
    }
}

/// `R**_m`: the vertices of `R*_m` with each `v` merged with `reverse(v)`.
///
/// Class 0 is `{0^m}`; the other classes are ordered by representative,
/// the lexicographically smaller member. Entry `(X, Y)` of the multiplicity
/// matrix counts the members of `Y` that the representative of `X` has an
/// arc to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractedRG {
    m: usize,
    classes: Vec<Vec<u32>>,
    rows: Vec<Vec<(u32, u32)>>,
}

impl ContractedRG {
    pub fn build(d: &DStar, comps: &Components) -> Result<ContractedRG> {
        let m = d.m();
        let r = comps.members(comps.r_star());
        let zero = d.index_of(BinaryWord::zeros(m)).expect("0^m is a vertex");
        let mut reps: Vec<u32> = Vec::new();
        for &v in r {
            let w = d
                .reverse_index(v as usize)
                .ok_or_else(|| Error::Structural(format!("reverse of {} missing", d.word(v as usize))))?;
            if comps.component_of(w) != comps.r_star() {
                return Err(Error::Structural(format!("R* is not closed under reversal at {}", d.word(w))));
            }
            if (v as usize) <= w && v as usize != zero {
                reps.push(v);
            }
        }
        let mut classes: Vec<Vec<u32>> = vec![vec![zero as u32]];
        for rep in reps {
            let w = d.reverse_index(rep as usize).unwrap() as u32;
            classes.push(if w == rep { vec![rep] } else { vec![rep, w] });
        }
        let mut class_of = vec![u32::MAX; d.vertex_count()];
        for (c, ms) in classes.iter().enumerate() {
            for &v in ms {
                class_of[v as usize] = c as u32;
            }
        }
        let rows = classes
            .iter()
            .map(|ms| {
                let mut row: Vec<(u32, u32)> = Vec::new();
                for &u in d.successors(ms[0] as usize) {
                    let y = class_of[u as usize];
                    match row.iter_mut().find(|(c, _)| *c == y) {
                        Some(e) => e.1 += 1,
                        None => row.push((y, 1)),
                    }
                }
                row.sort_unstable();
                row
            })
            .collect();
        Ok(ContractedRG { m, classes, rows })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Vertex indices of class `c`, representative first.
    pub fn class(&self, c: usize) -> &[u32] {
        &self.classes[c]
    }

    /// Nonzero entries `(column, multiplicity)` of row `c`.
    pub fn row(&self, c: usize) -> &[(u32, u32)] {
        &self.rows[c]
    }

    pub fn entry(&self, x: usize, y: usize) -> u32 {
        self.rows[x].iter().find(|e| e.0 as usize == y).map_or(0, |e| e.1)
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.class_count()).filter(|&c| self.entry(c, c) > 0).collect()
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().map(|e| e.1).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(m: usize) -> (DStar, ContractedRG) {
        let d = DStar::build(m).unwrap();
        let c = Components::decompose(&d).unwrap();
        let r = ContractedRG::build(&d, &c).unwrap();
        (d, r)
    }

    #[test]
    fn class_counts() {
        assert_eq!(build(2).1.class_count(), 2);
        assert_eq!(build(4).1.class_count(), 5);
        assert_eq!(build(5).1.class_count(), 9);
    }

    #[test]
    fn m4_loop_from_contraction() {
        let (d, r) = build(4);
        let a = d.index_of("1100".parse().unwrap()).unwrap() as u32;
        let c = (0..r.class_count()).find(|&c| r.class(c).contains(&a)).unwrap();
        assert_eq!(r.class(c).len(), 2);
        assert!(r.entry(c, c) > 0);
        assert!(!d.has_arc(a as usize, a as usize));
    }

    #[test]
    fn odd_heights_have_no_loops() {
        for m in [3, 5, 7] {
            let (_, r) = build(m);
            assert!(r.loops().is_empty());
            assert!(r.max_entry() <= 2);
        }
    }

    #[test]
    fn pairing_fixed_points() {
        let d = DStar::build(4).unwrap();
        let p = Pairing::build(&d).unwrap();
        assert_eq!(p.fixed_points(), 4);
        assert!(p.is_involution());
        let d = DStar::build(3).unwrap();
        let p = Pairing::build(&d).unwrap();
        let i = d.index_of("101".parse().unwrap()).unwrap();
        assert_eq!(p.image(i), i);
        let j = d.index_of("110".parse().unwrap()).unwrap();
        assert_eq!(d.word(p.image(j)).to_string(), "011");
    }
}
