//! Growth constants from count sequences: `f(n) ~ a * theta^n`.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::counting::GraphFamily;
use crate::error::{Error, Result};

/// Convergence tolerance on the accelerated ratio sequence.
pub const RESIDUAL_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralEstimate {
    pub family: GraphFamily,
    pub m: usize,
    pub theta: f64,
    pub a: f64,
    pub n_used: usize,
    /// Gap between the last two accelerated estimates of `theta`.
    pub residual: f64,
    pub converged: bool,
}

/// `log2(x)` for a positive big integer, accurate to double precision.
pub fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap().log2();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap().log2() + shift as f64
}

/// `x / y` as a double, for positive big integers of any size.
pub fn ratio(x: &BigUint, y: &BigUint) -> f64 {
    // Scale so the integer quotient carries about 64 significant bits.
    let s = 64 + y.bits() as i64 - x.bits() as i64;
    let q = if s >= 0 { (x << s as u64) / y } else { (x >> (-s) as u64) / y };
    q.to_f64().unwrap() * (-s as f64).exp2()
}

/// Wynn's epsilon algorithm. Among the even columns of the table, returns
/// the last two entries of the one whose last two entries agree best.
pub fn wynn_epsilon(s: &[f64]) -> (f64, f64) {
    let n = s.len();
    if n < 2 {
        return (f64::NAN, s.first().copied().unwrap_or(f64::NAN));
    }
    let gap = |c: &[f64]| (c[c.len() - 1] - c[c.len() - 2]).abs();
    let mut best = (s[n - 2], s[n - 1]);
    let mut best_gap = gap(s);
    let mut prev = vec![0.0f64; n + 1];
    let mut cur: Vec<f64> = s.to_vec();
    let mut k = 0usize;
    while cur.len() >= 2 {
        let mut next = Vec::with_capacity(cur.len() - 1);
        for i in 0..cur.len() - 1 {
            let d = cur[i + 1] - cur[i];
            if d == 0.0 || !d.is_finite() {
                return best;
            }
            next.push(prev[i + 1] + 1.0 / d);
        }
        k += 1;
        prev = cur;
        cur = next;
        if k % 2 == 0 && cur.len() >= 2 && cur.iter().all(|x| x.is_finite()) && gap(&cur) < best_gap {
            best_gap = gap(&cur);
            best = (cur[cur.len() - 2], cur[cur.len() - 1]);
        }
    }
    best
}

/// Estimate `theta` and `a` from `f(1..=n)` given in `seq`.
///
/// `theta^2` is the limit of `f(2k + 2) / f(2k)`, accelerated with Wynn's
/// epsilon algorithm; even lengths only, so sequences that vanish or
/// alternate at odd `n` are handled alike. The leading coefficient is the
/// accelerated limit of `f(n) / theta^n` over even `n` for cylinders and
/// strips. For rectangular grids it is `f(n) / theta^(n - 1)`, halved when
/// `m` is odd since then odd lengths contribute nothing.
pub fn estimate_spectrum(family: GraphFamily, m: usize, seq: &[BigUint]) -> Result<SpectralEstimate> {
    let evens: Vec<(usize, &BigUint)> =
        seq.iter().enumerate().map(|(i, x)| (i + 1, x)).filter(|(n, x)| n % 2 == 0 && !x.is_zero()).collect();
    if evens.len() < 6 {
        return Err(Error::InsufficientTerms { got: seq.len(), need: 12 });
    }
    let ratios: Vec<f64> = evens.windows(2).map(|w| ratio(w[1].1, w[0].1)).collect();
    let (t_prev, t_last) = wynn_epsilon(&ratios);
    let theta = t_last.sqrt();
    let residual = (t_last.sqrt() - t_prev.sqrt()).abs();

    let lt = theta.log2();
    let shift = if family == GraphFamily::RG { 1.0 } else { 0.0 };
    let lead: Vec<f64> = evens.iter().map(|&(n, x)| (log2_big(x) - (n as f64 - shift) * lt).exp2()).collect();
    let (_, mut a) = wynn_epsilon(&lead);
    if family == GraphFamily::RG && m % 2 == 1 {
        a /= 2.0;
    }
    Ok(SpectralEstimate {
        family,
        m,
        theta,
        a,
        n_used: seq.len(),
        residual,
        converged: residual.is_finite() && residual <= RESIDUAL_TOLERANCE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::Counter;

    fn est(f: GraphFamily, m: usize, n: usize) -> SpectralEstimate {
        let s = Counter::build(m).unwrap().series(f, n).unwrap();
        estimate_spectrum(f, m, &s).unwrap()
    }

    #[test]
    fn golden_ratio() {
        let e = est(GraphFamily::TkC, 2, 60);
        assert!((e.theta - 1.618_033_988_749_895).abs() < 1e-10, "{e:?}");
        assert!(e.converged);
    }

    #[test]
    fn grid_and_cylinder_share_theta_for_even_m() {
        let r = est(GraphFamily::RG, 4, 60);
        let t = est(GraphFamily::TkC, 4, 60);
        assert!((r.theta - 3.694_181_660_123_910_7).abs() < 1e-8, "{r:?}");
        assert!((r.theta - t.theta).abs() < 1e-8);
    }

    #[test]
    fn leading_coefficients() {
        let e = est(GraphFamily::TkC, 6, 60);
        assert!((e.a - 1.0).abs() < 1e-4, "{e:?}");
        let e = est(GraphFamily::RG, 2, 60);
        assert!((e.a - 0.447_213_595_499_958).abs() < 1e-8, "{e:?}");
        let e = est(GraphFamily::RG, 3, 60);
        assert!((e.theta - 3f64.sqrt()).abs() < 1e-10);
        assert!((e.a - 0.288_675_134_594_812_9).abs() < 1e-8, "{e:?}");
    }

    #[test]
    fn log_of_huge_values() {
        let x = BigUint::from(3u32).pow(2000);
        assert!((log2_big(&x) - 2000.0 * 3f64.log2()).abs() < 1e-9);
        assert!((ratio(&(&x * 7u32), &x) - 7.0).abs() < 1e-12);
    }
}
