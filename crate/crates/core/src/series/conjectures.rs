//! Empirical checks of the observed component sizes and of where the
//! dominant eigenvalue lives. Nothing here is assumed by the counters.

use num_bigint::BigUint;

use crate::report::{Check, Report};
use crate::transfer::{bipartition, DStar, Transfer};

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut c = BigUint::from(1u32);
    for i in 0..k {
        c = c * (n - i) / (i + 1);
    }
    c.try_into().expect("binomial overflows usize")
}

/// Predicted `|A*|` and `|B*(1)|, |B*(2)|, ...`.
pub fn predicted_sizes(m: usize) -> (usize, Vec<usize>) {
    if m % 2 == 1 {
        let b = (1..=m / 2).map(|k| binomial(m + 1, (m + 1) / 2 - k)).collect();
        (binomial(m, (m - 1) / 2), b)
    } else {
        let b = (1..=m / 2).map(|k| 2 * binomial(m, m / 2 - k)).collect();
        (binomial(m, m / 2), b)
    }
}

/// Predicted `|R*|`, and `|R**|` for even `m`.
pub fn predicted_r_sizes(m: usize) -> (usize, Option<usize>) {
    if m % 2 == 1 {
        (binomial(m + 1, (m - 1) / 2), None)
    } else {
        (binomial(m, m / 2), Some((1usize << ((m - 2) / 2)) + binomial(m, m / 2) / 2))
    }
}

/// Spectral radius of `T*` restricted to `members`, by power iteration on
/// the square of the restriction.
pub fn spectral_radius(d: &DStar, members: &[u32]) -> f64 {
    let n = d.vertex_count();
    let mut local = vec![u32::MAX; n];
    for (i, &v) in members.iter().enumerate() {
        local[v as usize] = i as u32;
    }
    let step = |x: &[f64]| -> Vec<f64> {
        let mut y = vec![0.0; x.len()];
        for (i, &v) in members.iter().enumerate() {
            if x[i] == 0.0 {
                continue;
            }
            for &w in d.successors(v as usize) {
                let j = local[w as usize];
                if j != u32::MAX {
                    y[j as usize] += x[i];
                }
            }
        }
        y
    };
    let norm = |x: &[f64]| x.iter().map(|v| v * v).sum::<f64>().sqrt();
    let mut x = vec![1.0; members.len()];
    let mut rho2 = 0.0;
    for _ in 0..5000 {
        let y = step(&step(&x));
        let ny = norm(&y);
        if ny == 0.0 {
            return 0.0;
        }
        let r = ny / norm(&x);
        x = y.into_iter().map(|v| v / ny).collect();
        if (r - rho2).abs() <= 1e-14 * r {
            rho2 = r;
            break;
        }
        rho2 = r;
    }
    rho2.sqrt()
}

/// Check every sub-claim about component count and sizes, `R*` and `R**`
/// sizes, bipartiteness, and the location of the dominant eigenvalue.
pub fn verify_conjectures(t: &Transfer) -> Report {
    let d = &t.dstar;
    let c = &t.components;
    let m = d.m();
    let mut r = Report::default();

    r.push(Check::eq("component count", m, c.count(), m / 2 + 1));
    let (a, b) = predicted_sizes(m);
    r.push(Check::eq("|A*| binomial", m, c.size(c.a_star()), a));
    r.push(Check::eq("|B*(k)| binomials", m, c.b_sizes(), b));

    let (rs, rss) = predicted_r_sizes(m);
    r.push(Check::eq("|R*| binomial", m, c.size(c.r_star()), rs));
    if let Some(rss) = rss {
        r.push(Check::eq("|R**| formula", m, t.rstarstar.class_count(), rss));
    }

    let mut same_comp = true;
    for v in 0..d.vertex_count() {
        match d.reverse_index(v) {
            Some(w) if c.component_of(w) == c.component_of(v) => {}
            _ => same_comp = false,
        }
    }
    r.push(Check::new("reversal preserves components", Some(m), same_comp, ""));

    let mut all_bip = true;
    let mut same_class = Vec::new();
    for k in 1..c.count() {
        let members = c.members(k);
        let Some(side) = bipartition(d, members) else {
            all_bip = false;
            continue;
        };
        for (i, &v) in members.iter().enumerate() {
            let rev = d.reverse_index(v as usize);
            if let Some(j) = rev.and_then(|w| members.iter().position(|&x| x as usize == w)) {
                same_class.push(side[i] == side[j]);
            }
        }
    }
    r.push(Check::new("B*(k) bipartite", Some(m), all_bip, format!("{} components", c.count() - 1)));
    if !same_class.is_empty() {
        let want = m % 2 == 1;
        let ok = same_class.iter().all(|&s| s == want);
        let detail = format!(
            "reversals share a class in {} of {} cases, expected {}",
            same_class.iter().filter(|&&s| s).count(),
            same_class.len(),
            if want { "all" } else { "none" }
        );
        r.push(Check::new("B*(k) reversal classes", Some(m), ok, detail));
    }

    let radii: Vec<f64> = (0..c.count()).map(|k| spectral_radius(d, c.members(k))).collect();
    let top = radii[0];
    let rest = radii[1..].iter().cloned().fold(0.0, f64::max);
    r.push(Check::new(
        "dominant eigenvalue in A*",
        Some(m),
        top > rest * (1.0 + 1e-9),
        format!("rho(A*) = {top:.12}, max other = {rest:.12}"),
    ));
    r
}
