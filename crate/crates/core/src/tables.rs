//! Reference cardinalities for `m = 2..12` and a checker against them.

use crate::codes::column_count;
use crate::report::{Check, Report};
use crate::transfer::{first_last_sets, DigraphDm, Transfer};

/// Smallest and largest tabulated height.
pub const TABLE_RANGE: (usize, usize) = (2, 12);

pub const D_VERTICES: [usize; 11] = [5, 13, 41, 121, 365, 1093, 3281, 9841, 29525, 88573, 265721];
pub const DSTAR_VERTICES: [usize; 11] = [4, 7, 16, 31, 64, 127, 256, 511, 1024, 2047, 4096];
pub const A_STAR: [usize; 11] = [2, 3, 6, 10, 20, 35, 70, 126, 252, 462, 924];

/// `|B*(k)|`, row `k - 1`, column `m - 2`; zero where the component does
/// not exist.
pub const B_STAR: [[usize; 11]; 6] = [
    [2, 4, 8, 15, 30, 56, 112, 210, 420, 792, 1584],
    [0, 0, 2, 6, 12, 28, 56, 120, 240, 495, 990],
    [0, 0, 0, 0, 2, 8, 16, 45, 90, 220, 440],
    [0, 0, 0, 0, 0, 0, 2, 10, 20, 66, 132],
    [0, 0, 0, 0, 0, 0, 0, 0, 2, 12, 24],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2],
];

pub const R_STAR: [usize; 11] = [2, 4, 6, 15, 20, 56, 70, 210, 252, 792, 924];
pub const R_STAR_STAR: [usize; 11] = [2, 3, 5, 9, 14, 31, 43, 110, 142, 406, 494];

/// `|R_m|` for `m = 2..10`.
pub const R_M: [usize; 9] = [3, 6, 19, 60, 141, 532, 1107, 4608, 8953];

/// Largest height for which `|R_m|` is recomputed from `D_m`.
pub const R_M_MAX: usize = 10;

/// Compare the digraphs of height `m` with every tabulated cardinality.
pub fn verify_tables(t: &Transfer) -> Report {
    let m = t.m();
    let mut r = Report::default();
    let Some(i) = m.checked_sub(2).filter(|&i| i < D_VERTICES.len()) else {
        r.push(Check::new("tabulated height", Some(m), false, "no reference values"));
        return r;
    };
    let c = &t.components;
    r.push(Check::eq("|V(D)|", m, column_count(m), D_VERTICES[i] as u64));
    r.push(Check::eq("|V(D*)|", m, t.dstar.vertex_count(), DSTAR_VERTICES[i]));
    r.push(Check::eq("|E(D*)| = |V(D)|", m, t.dstar.arc_count(), D_VERTICES[i]));
    r.push(Check::eq("|A*|", m, c.size(c.a_star()), A_STAR[i]));
    let want_b: Vec<usize> = B_STAR.iter().map(|row| row[i]).filter(|&x| x > 0).collect();
    r.push(Check::eq("|B*(k)|", m, c.b_sizes(), want_b));
    r.push(Check::eq("|R*|", m, c.size(c.r_star()), R_STAR[i]));
    r.push(Check::eq("|R**|", m, t.rstarstar.class_count(), R_STAR_STAR[i]));
    if let Ok((f, l)) = first_last_sets(m) {
        r.push(Check::eq("|F| = |L|", m, (f.len(), l.len()), (f.len(), f.len())));
    }
    if m <= R_M_MAX {
        if let Ok(dm) = DigraphDm::build(m) {
            r.push(Check::eq("|R|", m, dm.r_component().len(), R_M[i]));
        }
    }
    r
}
