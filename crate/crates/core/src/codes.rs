//! Column codes: the six-letter vertex alphabet, its edge semantics, the
//! `ud`/`lr` compatibility relations, reflections, and outlet/inlet words.
//!
//! Every vertex of a 2-factor on an `m`-row grid uses exactly two of its four
//! edge slots. The six possible choices are the letters `a`..`f`:
//!
//! | letter | edges          |
//! |--------|----------------|
//! | `a`    | RIGHT, DOWN    |
//! | `b`    | UP, DOWN       |
//! | `c`    | UP, RIGHT      |
//! | `d`    | LEFT, DOWN     |
//! | `e`    | LEFT, RIGHT    |
//! | `f`    | UP, LEFT       |
//!
//! Reading the letters of one grid column top to bottom gives an [`AlphaWord`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Longest column handled by the packed word types.
pub const MAX_HEIGHT: usize = 21;

const UP: u8 = 1;
const DOWN: u8 = 2;
const LEFT: u8 = 4;
const RIGHT: u8 = 8;

/// One of the six local edge configurations of a 2-factor vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Letter {
    pub const ALL: [Letter; 6] = [Letter::A, Letter::B, Letter::C, Letter::D, Letter::E, Letter::F];

    fn edge_mask(self) -> u8 {
        match self {
            Letter::A => RIGHT | DOWN,
            Letter::B => UP | DOWN,
            Letter::C => UP | RIGHT,
            Letter::D => LEFT | DOWN,
            Letter::E => LEFT | RIGHT,
            Letter::F => UP | LEFT,
        }
    }

    pub fn has_up(self) -> bool {
        self.edge_mask() & UP != 0
    }

    pub fn has_down(self) -> bool {
        self.edge_mask() & DOWN != 0
    }

    pub fn has_left(self) -> bool {
        self.edge_mask() & LEFT != 0
    }

    pub fn has_right(self) -> bool {
        self.edge_mask() & RIGHT != 0
    }

    pub fn symbol(self) -> char {
        (b'a' + self.index() as u8) as char
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Letter {
        Letter::ALL[i]
    }

    pub fn from_symbol(c: char) -> Option<Letter> {
        match c {
            'a'..='f' => Some(Letter::ALL[(c as u8 - b'a') as usize]),
            _ => None,
        }
    }

    /// Reflection in the horizontal axis: `a<->c`, `d<->f`.
    pub fn horizontal_mirror(self) -> Letter {
        match self {
            Letter::A => Letter::C,
            Letter::C => Letter::A,
            Letter::D => Letter::F,
            Letter::F => Letter::D,
            other => other,
        }
    }

    /// Reflection in the vertical axis: `a<->d`, `c<->f`.
    pub fn vertical_mirror(self) -> Letter {
        match self {
            Letter::A => Letter::D,
            Letter::D => Letter::A,
            Letter::C => Letter::F,
            Letter::F => Letter::C,
            other => other,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// `y` may sit directly below `x`: the shared vertical slot agrees.
pub fn ud_compatible(x: Letter, y: Letter) -> bool {
    x.has_down() == y.has_up()
}

/// `y` may sit directly right of `x`: the shared horizontal slot agrees.
pub fn lr_compatible(x: Letter, y: Letter) -> bool {
    x.has_right() == y.has_left()
}

/// A column code of height `m`, packed three bits per letter with the top
/// letter most significant, so numeric order is lexicographic order.
///
/// The type itself does not enforce the column conditions; use
/// [`AlphaWord::is_valid_column`] or build words through
/// [`enumerate_valid_columns`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlphaWord {
    m: u8,
    packed: u64,
}

impl AlphaWord {
    pub fn from_letters(letters: &[Letter]) -> AlphaWord {
        assert!(letters.len() <= MAX_HEIGHT, "alpha word longer than {MAX_HEIGHT}");
        let packed = letters.iter().fold(0u64, |acc, l| (acc << 3) | l.index() as u64);
        AlphaWord { m: letters.len() as u8, packed }
    }

    pub fn len(&self) -> usize {
        self.m as usize
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    /// Letter at 0-based row `i` (row 0 is the top).
    pub fn letter(&self, i: usize) -> Letter {
        debug_assert!(i < self.len());
        let shift = 3 * (self.len() - 1 - i);
        Letter::from_index(((self.packed >> shift) & 7) as usize)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).map(move |i| self.letter(i))
    }

    /// Column conditions: adjacent letters are `ud`-compatible, the top
    /// letter has no UP edge and the bottom letter has no DOWN edge.
    pub fn is_valid_column(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let first = self.letter(0);
        let last = self.letter(self.len() - 1);
        !first.has_up()
            && !last.has_down()
            && (1..self.len()).all(|i| ud_compatible(self.letter(i - 1), self.letter(i)))
    }

    /// Reverse the word and mirror every letter in the horizontal axis.
    pub fn horizontal_conversion(&self) -> AlphaWord {
        let letters: Vec<Letter> = (0..self.len())
            .rev()
            .map(|i| self.letter(i).horizontal_mirror())
            .collect();
        AlphaWord::from_letters(&letters)
    }

    /// Mirror every letter in the vertical axis, keeping the order.
    pub fn vertical_conversion(&self) -> AlphaWord {
        let letters: Vec<Letter> = self.letters().map(Letter::vertical_mirror).collect();
        AlphaWord::from_letters(&letters)
    }

    /// Bit `j` is set iff letter `j` has a RIGHT edge.
    pub fn outlet(&self) -> BinaryWord {
        BinaryWord::from_bits(&self.letters().map(Letter::has_right).collect::<Vec<_>>())
    }

    /// Bit `j` is set iff letter `j` has a LEFT edge.
    pub fn inlet(&self) -> BinaryWord {
        BinaryWord::from_bits(&self.letters().map(Letter::has_left).collect::<Vec<_>>())
    }

    /// `next` may be the column directly right of `self`.
    pub fn precedes(&self, next: &AlphaWord) -> bool {
        self.len() == next.len() && self.outlet() == next.inlet()
    }
}

impl fmt::Display for AlphaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlphaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlphaWord({self})")
    }
}

impl FromStr for AlphaWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() > MAX_HEIGHT {
            return Err(Error::Parameter(format!("alpha word `{s}` is too long")));
        }
        let letters = s
            .chars()
            .map(|c| Letter::from_symbol(c).ok_or_else(|| Error::Parameter(format!("bad letter `{c}` in `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(AlphaWord::from_letters(&letters))
    }
}

/// A 0/1 word of length `m`, bit 1 (the top row) most significant.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord {
    m: u8,
    bits: u32,
}

impl BinaryWord {
    pub fn new(m: usize, bits: u32) -> BinaryWord {
        assert!(m <= MAX_HEIGHT);
        debug_assert!(m == 32 || bits >> m == 0);
        BinaryWord { m: m as u8, bits }
    }

    pub fn from_bits(bits: &[bool]) -> BinaryWord {
        let packed = bits.iter().fold(0u32, |acc, &b| (acc << 1) | b as u32);
        BinaryWord::new(bits.len(), packed)
    }

    pub fn zeros(m: usize) -> BinaryWord {
        BinaryWord::new(m, 0)
    }

    pub fn ones(m: usize) -> BinaryWord {
        BinaryWord::new(m, (1u32 << m) - 1)
    }

    pub fn len(&self) -> usize {
        self.m as usize
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    /// Packed value; the top row is the most significant bit.
    pub fn value(&self) -> u32 {
        self.bits
    }

    /// Bit at 0-based row `i`.
    pub fn bit(&self, i: usize) -> bool {
        (self.bits >> (self.len() - 1 - i)) & 1 == 1
    }

    pub fn count_ones(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn count_zeros(&self) -> u32 {
        self.m as u32 - self.count_ones()
    }

    pub fn reverse(&self) -> BinaryWord {
        BinaryWord::new(self.len(), reverse_bits(self.bits, self.len()))
    }

    pub fn is_palindrome(&self) -> bool {
        self.reverse() == *self
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            write!(f, "{}", if self.bit(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() > MAX_HEIGHT {
            return Err(Error::Parameter(format!("binary word `{s}` is too long")));
        }
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parameter(format!("bad bit `{c}` in `{s}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BinaryWord::from_bits(&bits))
    }
}

/// Reverse the low `m` bits of `bits`.
pub(crate) fn reverse_bits(bits: u32, m: usize) -> u32 {
    if m == 0 {
        0
    } else {
        bits.reverse_bits() >> (32 - m)
    }
}

/// Depth-first generator of valid columns whose letters come from `alphabet`,
/// in lexicographic order. `visit` receives the letters of each column.
fn for_each_column_over(m: usize, alphabet: &[Letter], visit: &mut dyn FnMut(&[Letter])) {
    fn rec(m: usize, alphabet: &[Letter], buf: &mut Vec<Letter>, visit: &mut dyn FnMut(&[Letter])) {
        if buf.len() == m {
            if !buf[m - 1].has_down() {
                visit(buf);
            }
            return;
        }
        for &l in alphabet {
            let ok = match buf.last() {
                None => !l.has_up(),
                Some(&prev) => ud_compatible(prev, l),
            };
            if ok {
                buf.push(l);
                rec(m, alphabet, buf, visit);
                buf.pop();
            }
        }
    }
    if m == 0 {
        return;
    }
    let mut sorted = alphabet.to_vec();
    sorted.sort();
    sorted.dedup();
    rec(m, &sorted, &mut Vec::with_capacity(m), visit);
}

/// All valid columns of height `m` in lexicographic order `a<b<...<f`.
///
/// There are `(3^m + (-1)^m) / 2` of them; `m = 1` yields the single word `e`.
pub fn enumerate_valid_columns(m: usize) -> Vec<AlphaWord> {
    assert!(m <= MAX_HEIGHT);
    let mut out = Vec::with_capacity(column_count(m) as usize);
    for_each_column_over(m, &Letter::ALL, &mut |ls| out.push(AlphaWord::from_letters(ls)));
    out
}

/// Streams `(inlet, outlet)` value pairs of every valid column without
/// materializing the words.
pub(crate) fn for_each_column_io(m: usize, mut visit: impl FnMut(u32, u32)) {
    for_each_column_over(m, &Letter::ALL, &mut |ls| {
        let (mut inlet, mut outlet) = (0u32, 0u32);
        for l in ls {
            inlet = (inlet << 1) | l.has_left() as u32;
            outlet = (outlet << 1) | l.has_right() as u32;
        }
        visit(inlet, outlet);
    });
}

/// Valid columns restricted to letters from `alphabet`.
pub fn enumerate_columns_over(m: usize, alphabet: &[Letter]) -> Vec<AlphaWord> {
    let mut out = Vec::new();
    for_each_column_over(m, alphabet, &mut |ls| out.push(AlphaWord::from_letters(ls)));
    out
}

/// `(3^m + (-1)^m) / 2`.
pub fn column_count(m: usize) -> u64 {
    let p = 3u64.pow(m as u32);
    if m % 2 == 0 {
        (p + 1) / 2
    } else {
        (p - 1) / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> AlphaWord {
        s.parse().unwrap()
    }

    fn l(c: char) -> Letter {
        Letter::from_symbol(c).unwrap()
    }

    #[test]
    fn letter_edge_classes() {
        let with = |p: fn(Letter) -> bool| Letter::ALL.iter().filter(|&&x| p(x)).map(|x| x.symbol()).collect::<String>();
        assert_eq!(with(Letter::has_right), "ace");
        assert_eq!(with(Letter::has_left), "def");
        assert_eq!(with(|x| !x.has_up()), "ade");
        assert_eq!(with(|x| !x.has_down()), "cef");
        for x in Letter::ALL {
            assert_eq!(x.edge_mask().count_ones(), 2);
        }
    }

    #[test]
    fn compatibility_examples() {
        assert!(ud_compatible(l('a'), l('b')));
        assert!(ud_compatible(l('e'), l('e')));
        assert!(!ud_compatible(l('a'), l('e')));
        assert!(lr_compatible(l('a'), l('d')));
        assert!(lr_compatible(l('b'), l('b')));
        assert!(!lr_compatible(l('e'), l('a')));
        let below_a: String = Letter::ALL.iter().filter(|&&y| ud_compatible(l('a'), y)).map(|y| y.symbol()).collect();
        assert_eq!(below_a, "bcf");
        let right_of_a: String = Letter::ALL.iter().filter(|&&y| lr_compatible(l('a'), y)).map(|y| y.symbol()).collect();
        assert_eq!(right_of_a, "def");
    }

    #[test]
    fn conversions() {
        assert_eq!(w("ac").horizontal_conversion(), w("ac"));
        assert_eq!(w("eee").horizontal_conversion(), w("eee"));
        for m in 2..8 {
            let s = format!("d{}f", "b".repeat(m - 2));
            assert_eq!(w(&s).horizontal_conversion(), w(&s));
        }
        assert_eq!(w("abf").vertical_conversion(), w("dbc"));
        assert_eq!(w("eee").vertical_conversion(), w("eee"));
        assert_eq!(w("edf").vertical_conversion(), w("eac"));
        for (x, y) in [("dfe", "ace"), ("abc", "dbf"), ("afe", "dce"), ("edc", "eaf")] {
            assert_eq!(w(x).vertical_conversion(), w(y));
        }
    }

    #[test]
    fn outlet_inlet_examples() {
        for m in 2..10 {
            let dbf = w(&format!("d{}f", "b".repeat(m - 2)));
            let abc = w(&format!("a{}c", "b".repeat(m - 2)));
            assert_eq!(dbf.outlet(), BinaryWord::zeros(m));
            assert_eq!(w(&"e".repeat(m)).outlet(), BinaryWord::ones(m));
            assert_eq!(abc.inlet(), BinaryWord::zeros(m));
        }
    }

    #[test]
    fn small_column_sets() {
        let names = |m| enumerate_valid_columns(m).iter().map(|w| w.to_string()).collect::<Vec<_>>();
        assert_eq!(names(1), ["e"]);
        // Lexicographic order; the five height-2 columns.
        assert_eq!(names(2), ["ac", "af", "dc", "df", "ee"]);
        assert_eq!(enumerate_valid_columns(3).len(), 13);
    }

    #[test]
    fn column_counts_match_closed_form() {
        for m in 1..=12 {
            let cols = enumerate_valid_columns(m);
            assert_eq!(cols.len() as u64, column_count(m), "m={m}");
            assert!(cols.windows(2).all(|p| p[0] < p[1]));
            assert!(cols.iter().all(AlphaWord::is_valid_column));
        }
        assert_eq!(column_count(12), 265721);
    }

    #[test]
    fn reflection_properties_on_columns() {
        for m in 1..=7 {
            for c in enumerate_valid_columns(m) {
                // The vertical conversion can always follow the column.
                let cv = c.vertical_conversion();
                assert!(c.letters().zip(cv.letters()).all(|(x, y)| lr_compatible(x, y)));
                assert!(c.precedes(&cv));
                assert_eq!(cv.vertical_conversion(), c);
                assert_eq!(c.horizontal_conversion().outlet(), c.outlet().reverse());
                assert!(c.horizontal_conversion().is_valid_column());
                assert_eq!(cv.outlet(), c.inlet());
            }
        }
    }

    #[test]
    fn letter_reflection_duality() {
        for x in Letter::ALL {
            for y in Letter::ALL {
                assert_eq!(lr_compatible(x, y), lr_compatible(y.vertical_mirror(), x.vertical_mirror()));
            }
        }
    }

    #[test]
    fn binary_word_roundtrip() {
        let v: BinaryWord = "0110".parse().unwrap();
        assert_eq!(v.value(), 0b0110);
        assert_eq!(v.to_string(), "0110");
        assert!(v.is_palindrome());
        let u: BinaryWord = "110".parse().unwrap();
        assert_eq!(u.reverse().to_string(), "011");
        assert_eq!(u.count_zeros(), 1);
        assert!("012".parse::<BinaryWord>().is_err());
    }
}
