//! Periodic binary sequences.
//!
//! A [`BitSequence`] holds exactly one period. Berlekamp–Massey here is the
//! independent oracle that the graph-based minimal-polynomial pipeline in
//! [`crate::canonical`] is checked against.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2poly::{irreducible_count, Gf2Poly};

/// One period of a periodic binary sequence. The period is the declared
/// length, not necessarily the minimal one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSequence {
    bits: Vec<bool>,
}

impl BitSequence {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::InvalidInput(
                "a sequence period cannot be empty".into(),
            ));
        }
        Ok(Self { bits })
    }

    /// From a slice of 0/1 values.
    pub fn from_u8s(bits: &[u8]) -> Result<Self> {
        let bits = bits
            .iter()
            .map(|&b| match b {
                0 => Ok(false),
                1 => Ok(true),
                _ => Err(Error::InvalidInput(format!("{b} is not a bit"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(bits)
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn period(&self) -> usize {
        self.bits.len()
    }

    /// Bit at index `i`, read cyclically.
    pub fn get(&self, i: usize) -> bool {
        self.bits[i % self.bits.len()]
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Left rotation `L^k`; `k` is reduced modulo the period.
    pub fn shift(&self, k: usize) -> Self {
        let mut bits = self.bits.clone();
        bits.rotate_left(k % self.bits.len());
        Self { bits }
    }

    pub fn reversed(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.reverse();
        Self { bits }
    }

    /// The lexicographically least rotation.
    pub fn canonical_rotation(&self) -> Self {
        (0..self.period())
            .map(|k| self.shift(k))
            .min_by(|a, b| a.bits.cmp(&b.bits))
            .expect("period is at least 1")
    }

    pub fn is_rotation_of(&self, other: &BitSequence) -> bool {
        self.period() == other.period() && (0..self.period()).any(|k| self.shift(k) == *other)
    }

    /// Smallest `p` with `L^p s = s`.
    pub fn minimal_period(&self) -> usize {
        let n = self.period();
        (1..=n)
            .filter(|p| n.is_multiple_of(*p))
            .find(|&p| (0..n).all(|i| self.bits[i] == self.bits[(i + p) % n]))
            .unwrap_or(n)
    }

    /// `(1,0,1,...)`, the layout used by published tables.
    pub fn to_tuple_string(&self) -> String {
        let inner: Vec<&str> = self
            .bits
            .iter()
            .map(|&b| if b { "1" } else { "0" })
            .collect();
        format!("({})", inner.join(","))
    }

    /// `101...`
    pub fn to_compact_string(&self) -> String {
        self.bits
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }

    /// Integer value of the cyclic window of length `n` starting at `i`,
    /// first bit most significant.
    fn window(&self, i: usize, n: u32) -> u64 {
        (0..n as usize).fold(0u64, |acc, t| (acc << 1) | u64::from(self.get(i + t)))
    }
}

impl fmt::Display for BitSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact_string())
    }
}

impl fmt::Debug for BitSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitSequence({})", self.to_compact_string())
    }
}

impl FromStr for BitSequence {
    type Err = Error;

    /// Accepts `(1,0,1)`, `1,0,1` and `101`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && !matches!(c, '(' | ')' | ','))
            .collect();
        let bits = cleaned
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(format!("bad sequence symbol {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(bits).map_err(|_| Error::Parse("empty sequence".into()))
    }
}

impl Serialize for BitSequence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_compact_string())
    }
}

impl<'de> Deserialize<'de> for BitSequence {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Linear complexity and minimal polynomial of a periodic sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BmResult {
    pub linear_complexity: usize,
    /// Characteristic-polynomial orientation: `m(L) s = 0`, monic, degree
    /// equal to the linear complexity.
    pub minimal_polynomial: Gf2Poly,
}

/// Berlekamp–Massey over GF(2).
///
/// Consumes two full periods, which pins down the minimal polynomial of a
/// periodic sequence exactly.
pub fn berlekamp_massey(s: &BitSequence) -> BmResult {
    let len = 2 * s.period();
    let seq: Vec<u8> = (0..len).map(|i| u8::from(s.get(i))).collect();

    // Connection polynomials as coefficient vectors, index j <-> x^j.
    let mut c = vec![0u8; len + 1];
    let mut b = vec![0u8; len + 1];
    c[0] = 1;
    b[0] = 1;
    let mut l = 0usize;
    let mut m = 1usize;
    for i in 0..len {
        let mut d = seq[i];
        for j in 1..=l {
            d ^= c[j] & seq[i - j];
        }
        if d == 0 {
            m += 1;
            continue;
        }
        let prev = c.clone();
        for j in 0..=len - m {
            c[j + m] ^= b[j];
        }
        if 2 * l <= i {
            l = i + 1 - l;
            b = prev;
            m = 1;
        } else {
            m += 1;
        }
    }
    let minimal_polynomial = Gf2Poly::from_exponents((0..=l).filter(|&j| c[j] == 1).map(|j| l - j));
    BmResult {
        linear_complexity: l,
        minimal_polynomial,
    }
}

/// Runs the LFSR with characteristic polynomial `charpoly` from `seed`.
///
/// With `charpoly = x^L + a_{L-1} x^{L-1} + ... + a_0` the output obeys
/// `s_{k+L} = sum a_i s_{k+i}`.
pub fn lfsr_generate(charpoly: &Gf2Poly, seed: &BitSequence, count: usize) -> Result<BitSequence> {
    let degree = charpoly.degree().unwrap_or(0);
    if degree == 0 {
        return Err(Error::InvalidInput(
            "characteristic polynomial needs degree >= 1".into(),
        ));
    }
    if !charpoly.constant_term() {
        return Err(Error::InvalidInput(
            "characteristic polynomial needs c(0) = 1".into(),
        ));
    }
    if seed.period() != degree {
        return Err(Error::InvalidInput(format!(
            "seed has {} bits, characteristic polynomial has degree {degree}",
            seed.period()
        )));
    }
    let taps: Vec<usize> = (0..degree).filter(|&i| charpoly.coeff(i)).collect();
    let mut out: Vec<bool> = seed.bits().to_vec();
    while out.len() < count {
        let k = out.len() - degree;
        let next = taps.iter().fold(false, |acc, &i| acc ^ out[k + i]);
        out.push(next);
    }
    out.truncate(count);
    BitSequence::new(out)
}

fn windows_unique(s: &BitSequence, n: u32, forbid_zero: bool) -> bool {
    if n == 0 || n > 30 {
        return false;
    }
    let mut seen = vec![false; 1 << n];
    for i in 0..s.period() {
        let w = s.window(i, n) as usize;
        if (forbid_zero && w == 0) || seen[w] {
            return false;
        }
        seen[w] = true;
    }
    true
}

/// Period `2^n` with every `n`-tuple appearing exactly once per period.
pub fn is_de_bruijn(s: &BitSequence, n: u32) -> bool {
    (1..=30).contains(&n) && s.period() == 1 << n && windows_unique(s, n, false)
}

/// Period `2^n - 1` with every nonzero `n`-tuple appearing exactly once.
pub fn is_modified_de_bruijn(s: &BitSequence, n: u32) -> bool {
    (1..=30).contains(&n) && s.period() == (1 << n) - 1 && windows_unique(s, n, true)
}

fn zero_run_start(s: &BitSequence, run: u32) -> Option<usize> {
    (0..s.period()).find(|&i| s.window(i, run) == 0)
}

/// Removes one zero from the unique run of `n` zeros of a de Bruijn sequence.
///
/// The result is rotated so that the shortened zero run starts at index 0.
pub fn modify(de_bruijn: &BitSequence, n: u32) -> Result<BitSequence> {
    if !is_de_bruijn(de_bruijn, n) {
        return Err(Error::InvalidInput(format!(
            "not a de Bruijn sequence of order {n}"
        )));
    }
    let p = zero_run_start(de_bruijn, n).ok_or_else(|| Error::Internal("no zero run".into()))?;
    let rotated = de_bruijn.shift(p);
    BitSequence::new(rotated.bits[1..].to_vec())
}

/// Appends a zero to the unique run of `n - 1` zeros of a modified de Bruijn
/// sequence. The lengthened zero run starts at index 0 of the result.
pub fn debruijnize(modified: &BitSequence, n: u32) -> Result<BitSequence> {
    if n < 2 || !is_modified_de_bruijn(modified, n) {
        return Err(Error::InvalidInput(format!(
            "not a modified de Bruijn sequence of order {n}"
        )));
    }
    let p = zero_run_start(modified, n - 1).ok_or_else(|| Error::Internal("no zero run".into()))?;
    let rotated = modified.shift(p);
    let mut bits = Vec::with_capacity(rotated.period() + 1);
    bits.push(false);
    bits.extend_from_slice(&rotated.bits);
    BitSequence::new(bits)
}

/// All spans `sum a_d * d` with `d | n`, `d != 1` and `0 <= a_d <= I(d)`,
/// omitting the empty sum.
pub fn possible_spans(n: u32) -> Result<BTreeSet<usize>> {
    if !(2..=30).contains(&n) {
        return Err(Error::InvalidOrder {
            n,
            reason: "possible spans need 2 <= n <= 30",
        });
    }
    let max = (1usize << n) - 2;
    let mut reachable = vec![false; max + 1];
    reachable[0] = true;
    for d in (2..=n).filter(|d| n.is_multiple_of(*d)) {
        let copies = irreducible_count(d)? as usize;
        let d = d as usize;
        for _ in 0..copies {
            for v in (d..=max).rev() {
                if reachable[v - d] {
                    reachable[v] = true;
                }
            }
        }
    }
    Ok((1..=max).filter(|&v| reachable[v]).collect())
}

/// For a de Bruijn sequence of order `n >= 3`, returns `Some(z)` when its
/// minimal polynomial is `(x+1)^z` with `2^(n-1) + 1 <= z <= 2^n`.
pub fn de_bruijn_span_form(s: &BitSequence, n: u32) -> Result<Option<usize>> {
    if n < 3 || !is_de_bruijn(s, n) {
        return Err(Error::InvalidInput(format!(
            "not a de Bruijn sequence of order {n} >= 3"
        )));
    }
    let bm = berlekamp_massey(s);
    let z = bm.linear_complexity;
    // Lucas: the coefficient of x^k in (x+1)^z is odd iff k's bits are a subset of z's.
    let power = Gf2Poly::from_exponents((0..=z).filter(|k| k & !z == 0));
    let in_range = (1usize << (n - 1)) < z && z <= 1usize << n;
    Ok((bm.minimal_polynomial == power && in_range).then_some(z))
}

/// Report-only observations about a batch of spans.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SpanObservations {
    /// Spans inside `{n+1, ..., 3n-1}`.
    pub conjectured_gap_hits: Vec<usize>,
    /// Spans other than `n` that do not exceed `5n/4`.
    pub low_span_hits: Vec<usize>,
}

pub fn observe_spans<I: IntoIterator<Item = usize>>(n: u32, spans: I) -> SpanObservations {
    let n = n as usize;
    let mut obs = SpanObservations::default();
    for span in spans {
        if (n + 1..3 * n).contains(&span) {
            obs.conjectured_gap_hits.push(span);
        }
        if span != n && 4 * span <= 5 * n {
            obs.low_span_hits.push(span);
        }
    }
    obs
}
