//! Minimal linear recurrences over the rationals and the matching rational
//! generating functions.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::counting::GraphFamily;
use crate::error::{Error, Result};

/// Fewest terms accepted by [`fit_recurrence`].
pub const MIN_TERMS: usize = 4;

/// A fitted model of `f(1), f(2), ...`.
///
/// `f(n) = sum_{i=1..order} recurrence[i-1] * f(n - i)` for `n > order`, and
/// `sum_{n>=1} f(n) x^n = P(x) / Q(x)` with integer coefficient lists in
/// increasing degree, `Q(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesModel {
    pub family: Option<GraphFamily>,
    pub m: Option<usize>,
    pub order: usize,
    /// Order as a recurrence in `x^2`, for sequences that vanish at every
    /// odd `n` and whose denominator is a polynomial in `x^2`.
    pub reduced_order: Option<usize>,
    pub recurrence: Vec<BigRational>,
    pub numerator: Vec<BigInt>,
    pub denominator: Vec<BigInt>,
    pub terms_used: usize,
}

impl SeriesModel {
    /// The order comparable across families: the reduced order when it
    /// exists, the full order otherwise.
    pub fn effective_order(&self) -> usize {
        self.reduced_order.unwrap_or(self.order)
    }

    /// `f(1..=n)` from the power series expansion of `P / Q`.
    pub fn expand(&self, n: usize) -> Vec<BigInt> {
        expand_rational(&self.numerator, &self.denominator, n + 1)[1..].to_vec()
    }

    /// Integer recurrence coefficients, when every coefficient is integral.
    pub fn integer_recurrence(&self) -> Option<Vec<BigInt>> {
        self.recurrence.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    pub fn with_label(mut self, family: GraphFamily, m: usize) -> Self {
        self.family = Some(family);
        self.m = Some(m);
        self
    }
}

/// Coefficients `0..len` of `p / q`, `q[0] = 1`.
pub fn expand_rational(p: &[BigInt], q: &[BigInt], len: usize) -> Vec<BigInt> {
    assert!(q.first().is_some_and(One::is_one), "Q(0) must be 1");
    let mut a: Vec<BigInt> = Vec::with_capacity(len);
    for k in 0..len {
        let mut v = p.get(k).cloned().unwrap_or_default();
        for (i, qi) in q.iter().enumerate().skip(1).take(k) {
            if !qi.is_zero() {
                v -= qi * &a[k - i];
            }
        }
        a.push(v);
    }
    a
}

/// Berlekamp-Massey over `Q`. Returns the connection polynomial
/// `C = 1 + c_1 x + ... ` and the linear complexity `L`, so that
/// `sum_{i=0..L} C_i s[n - i] = 0` for all `L <= n < s.len()`.
pub fn berlekamp_massey(s: &[BigRational]) -> (Vec<BigRational>, usize) {
    let one = BigRational::one();
    let mut c = vec![one.clone()];
    let mut b = vec![one.clone()];
    let mut l = 0usize;
    let mut shift = 1usize;
    let mut bd = one;
    for n in 0..s.len() {
        let mut d = s[n].clone();
        for i in 1..c.len().min(n + 1) {
            if !c[i].is_zero() {
                d += &c[i] * &s[n - i];
            }
        }
        if d.is_zero() {
            shift += 1;
            continue;
        }
        let coef = &d / &bd;
        let prev = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, BigRational::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            if !bi.is_zero() {
                c[i + shift] -= &coef * bi;
            }
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = prev;
            bd = d;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    c.resize(l + 1, BigRational::zero());
    (c, l)
}

fn to_integers(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect()
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Fit the minimal recurrence to `f(1), f(2), ...` given in `seq`.
///
/// Fails with [`Error::InsufficientTerms`] for fewer than [`MIN_TERMS`]
/// terms and with [`Error::NoRecurrence`] if the minimal order exceeds
/// `len / 2 - 2`.
pub fn fit_recurrence(seq: &[BigUint]) -> Result<SeriesModel> {
    if seq.len() < MIN_TERMS {
        return Err(Error::InsufficientTerms { got: seq.len(), need: MIN_TERMS });
    }
    let budget = seq.len() / 2 - 2;
    let s: Vec<BigRational> = seq.iter().map(|x| BigRational::from_integer(BigInt::from(x.clone()))).collect();
    let (c, l) = berlekamp_massey(&s);
    if l > budget {
        return Err(Error::NoRecurrence { budget, terms: seq.len() });
    }

    // Denominator: C scaled to integers; primitive with Q(0) = 1 for
    // integer sequences, which is checked.
    let q_int = to_integers(&c);
    let g = content(&q_int);
    let mut q: Vec<BigInt> = if g.is_zero() { q_int } else { q_int.iter().map(|x| x / &g).collect() };
    if q[0].is_negative() {
        q.iter_mut().for_each(|x| *x = -x.clone());
    }
    if !q[0].is_one() {
        return Err(Error::Structural(format!("denominator constant term {} is not 1", q[0])));
    }
    while q.len() > 1 && q.last().is_some_and(Zero::is_zero) {
        q.pop();
    }

    // Numerator: x * ((S * Q) mod x^L).
    let si: Vec<BigInt> = seq.iter().map(|x| BigInt::from(x.clone())).collect();
    let mut p = vec![BigInt::zero()];
    for k in 0..l {
        let mut v = BigInt::zero();
        for (i, qi) in q.iter().enumerate().take(k + 1) {
            v += qi * &si[k - i];
        }
        p.push(v);
    }
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.iter().all(Zero::is_zero) {
        p = vec![BigInt::zero()];
    }

    let recurrence: Vec<BigRational> = c[1..].iter().map(|x| -x.clone()).collect();
    let odd_zero = seq.iter().step_by(2).all(Zero::is_zero);
    let even_only = q.iter().skip(1).step_by(2).all(Zero::is_zero);
    let reduced_order = (l > 0 && odd_zero && even_only && l % 2 == 0).then_some(l / 2);

    let model = SeriesModel {
        family: None,
        m: None,
        order: l,
        reduced_order,
        recurrence,
        numerator: p,
        denominator: q,
        terms_used: seq.len(),
    };
    let replay = model.expand(seq.len());
    if replay.iter().zip(&si).any(|(a, b)| a != b) {
        return Err(Error::Structural("fitted generating function does not reproduce its input".into()));
    }
    Ok(model)
}

/// Replay the recurrence from the first `order` terms of `seq` over `len`
/// terms in total.
pub fn replay_recurrence(model: &SeriesModel, seq: &[BigUint], len: usize) -> Vec<BigRational> {
    let d = model.order;
    let mut out: Vec<BigRational> =
        seq.iter().take(d).map(|x| BigRational::from_integer(BigInt::from(x.clone()))).collect();
    while out.len() < len {
        let n = out.len();
        let v = model.recurrence.iter().enumerate().map(|(i, c)| c * &out[n - 1 - i]).sum();
        out.push(v);
    }
    out
}
