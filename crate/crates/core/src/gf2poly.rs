//! Polynomials over GF(2), bit-packed into 64-bit words.
//!
//! Coefficient `i` lives in bit `i`, so a polynomial of degree below 64 is
//! encoded by the integer `A = sum a_i 2^i`. The graph module uses the same
//! encoding for its vertices, and every textual format in this crate states
//! it explicitly.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seqkit::BitSequence;

const WORD: usize = 64;

/// Trial-division steps allowed when factoring `2^d - 1` inside [`order`].
///
/// Large enough for every polynomial that shows up for `n <= 20`.
pub const DEFAULT_FACTOR_BUDGET: u64 = 1 << 20;

/// A polynomial in GF(2)[x].
///
/// Storage never carries zero words above the leading coefficient, so the
/// derived equality is coefficient equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_u64(1)
    }

    pub fn x() -> Self {
        Self::monomial(1)
    }

    pub fn monomial(k: usize) -> Self {
        let mut words = vec![0u64; k / WORD + 1];
        words[k / WORD] = 1 << (k % WORD);
        Self { words }
    }

    pub fn from_u64(value: u64) -> Self {
        Self::from_words(vec![value])
    }

    pub fn from_words(words: Vec<u64>) -> Self {
        let mut p = Self { words };
        p.normalize();
        p
    }

    /// Builds a polynomial from a list of exponents; repeated exponents cancel.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exponents: I) -> Self {
        let mut p = Self::zero();
        for e in exponents {
            p.flip(e);
        }
        p
    }

    /// Little-endian coefficient list: item `i` is the coefficient of `x^i`.
    pub fn from_coefficients<I: IntoIterator<Item = bool>>(coefficients: I) -> Self {
        Self::from_exponents(
            coefficients
                .into_iter()
                .enumerate()
                .filter_map(|(i, b)| b.then_some(i)),
        )
    }

    /// `1 + x + ... + x^(len-1)`.
    pub fn all_ones(len: usize) -> Self {
        if len == 0 {
            return Self::zero();
        }
        let mut words = vec![u64::MAX; len.div_ceil(WORD)];
        let tail = len % WORD;
        if tail != 0 {
            *words.last_mut().unwrap() = (1u64 << tail) - 1;
        }
        Self { words }
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    /// `None` is the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * WORD + (WORD - 1 - last.leading_zeros() as usize))
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / WORD)
            .is_some_and(|w| (w >> (i % WORD)) & 1 == 1)
    }

    pub fn constant_term(&self) -> bool {
        self.coeff(0)
    }

    /// Toggles the coefficient of `x^i`.
    pub fn flip(&mut self, i: usize) {
        let w = i / WORD;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1 << (i % WORD);
        self.normalize();
    }

    pub fn set_coeff(&mut self, i: usize, bit: bool) {
        if self.coeff(i) != bit {
            self.flip(i);
        }
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Exponents with coefficient 1, ascending.
    pub fn exponents(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        (0..self.words.len() * WORD).filter(move |&i| self.coeff(i))
    }

    /// Integer encoding of `self mod x^bits`, for `bits <= 64`.
    pub fn low_bits(&self, bits: u32) -> u64 {
        debug_assert!(bits <= 64);
        let w = self.words.first().copied().unwrap_or(0);
        if bits >= 64 {
            w
        } else {
            w & ((1u64 << bits) - 1)
        }
    }

    /// The integer encoding, if the degree is below 64.
    pub fn to_u64(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// `self mod x^len`.
    pub fn truncate(&self, len: usize) -> Self {
        let mut words: Vec<u64> = self
            .words
            .iter()
            .take(len.div_ceil(WORD))
            .copied()
            .collect();
        let tail = len % WORD;
        if tail != 0 && words.len() == len.div_ceil(WORD) {
            *words.last_mut().unwrap() &= (1u64 << tail) - 1;
        }
        Self::from_words(words)
    }

    /// `x^k * self`.
    pub fn shl(&self, k: usize) -> Self {
        let mut out = Self::zero();
        out.xor_shifted(self, k);
        out
    }

    // self += other * x^shift
    fn xor_shifted(&mut self, other: &Gf2Poly, shift: usize) {
        if other.is_zero() {
            return;
        }
        let ws = shift / WORD;
        let bs = shift % WORD;
        let need = other.words.len() + ws + usize::from(bs != 0);
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            self.words[i + ws] ^= w << bs;
            if bs != 0 {
                self.words[i + ws + 1] ^= w >> (WORD - bs);
            }
        }
        self.normalize();
    }

    fn shr1(&mut self) {
        let len = self.words.len();
        for i in 0..len {
            let carry = if i + 1 < len {
                self.words[i + 1] << (WORD - 1)
            } else {
                0
            };
            self.words[i] = (self.words[i] >> 1) | carry;
        }
        self.normalize();
    }

    /// Replaces `self` by `x * self mod m`, assuming `deg(self) < deg(m)`.
    pub fn mul_x_mod(&mut self, m: &Gf2Poly) {
        let dm = m.degree().expect("modulus must be nonzero");
        let len = self.words.len();
        let mut carry = 0u64;
        for w in self.words.iter_mut() {
            let next = *w >> (WORD - 1);
            *w = (*w << 1) | carry;
            carry = next;
        }
        if carry != 0 {
            self.words.push(carry);
        } else if len == 0 {
            return;
        }
        if self.coeff(dm) {
            for (i, &w) in m.words.iter().enumerate() {
                self.words[i] ^= w;
            }
        }
        self.normalize();
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Gf2Poly) -> Self {
        let mut out = Self::zero();
        for e in other.exponents() {
            out.xor_shifted(self, e);
        }
        out
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Gf2Poly) -> Result<(Self, Self)> {
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let s = dr - db;
            r.xor_shifted(divisor, s);
            q.flip(s);
        }
        Ok((q, r))
    }

    pub fn rem(&self, modulus: &Gf2Poly) -> Result<Self> {
        Ok(self.div_rem(modulus)?.1)
    }

    /// `(self * b) mod m`, evaluated Horner-style so intermediates stay below `deg m`.
    pub fn mul_mod(&self, b: &Gf2Poly, m: &Gf2Poly) -> Result<Self> {
        if m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = self.rem(m)?;
        let b = b.rem(m)?;
        let mut acc = Self::zero();
        if let Some(top) = b.degree() {
            for i in (0..=top).rev() {
                acc.mul_x_mod(m);
                if b.coeff(i) {
                    acc += &a;
                }
            }
        }
        Ok(acc)
    }

    /// `self^e mod m` by square-and-multiply.
    pub fn pow_mod(&self, mut e: u128, m: &Gf2Poly) -> Result<Self> {
        let mut base = self.rem(m)?;
        let mut acc = Self::one().rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m)?;
            }
            base = base.mul_mod(&base, m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Greatest common divisor. `gcd(a, 0) = a`; both zero is an error.
    pub fn gcd(&self, other: &Gf2Poly) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Coefficient reversal `x^deg a(1/x)`. Requires a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let d = self
            .degree()
            .ok_or_else(|| Error::InvalidInput("reciprocal of the zero polynomial".into()))?;
        if !self.constant_term() {
            return Err(Error::InvalidInput(format!(
                "reciprocal needs a(0) = 1, got {self}"
            )));
        }
        Ok(Self::from_exponents(self.exponents().map(|e| d - e)))
    }

    /// Formal derivative; only odd exponents survive in characteristic 2.
    pub fn derivative(&self) -> Self {
        Self::from_exponents(self.exponents().filter(|e| e % 2 == 1).map(|e| e - 1))
    }

    /// Square root of a perfect square (all exponents even).
    pub fn sqrt(&self) -> Option<Self> {
        if self.exponents().any(|e| e % 2 == 1) {
            return None;
        }
        Some(Self::from_exponents(self.exponents().map(|e| e / 2)))
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_ok_and(|g| g.is_one())
    }

    pub fn to_binary_string(&self) -> String {
        match self.degree() {
            None => "0".into(),
            Some(d) => (0..=d)
                .rev()
                .map(|i| if self.coeff(i) { '1' } else { '0' })
                .collect(),
        }
    }

    pub fn to_hex_string(&self) -> String {
        if self.is_zero() {
            return "0x0".into();
        }
        let mut s = format!("0x{:x}", self.words.last().unwrap());
        for w in self.words.iter().rev().skip(1) {
            s.push_str(&format!("{w:016x}"));
        }
        s
    }

    pub fn format(&self, fmt: PolyFormat) -> String {
        match fmt {
            PolyFormat::Symbolic => self.to_string(),
            PolyFormat::Binary => self.to_binary_string(),
            PolyFormat::Hex => self.to_hex_string(),
        }
    }

    pub fn parse_as(s: &str, fmt: PolyFormat) -> Result<Self> {
        let s = s.trim();
        match fmt {
            PolyFormat::Symbolic => parse_symbolic(s),
            PolyFormat::Binary => parse_binary(s),
            PolyFormat::Hex => parse_hex(s),
        }
    }
}

/// Textual polynomial formats.
///
/// * `Symbolic`: `x^10+x^8+x^5+x+1`
/// * `Binary`: most significant coefficient first, `10100100011`
/// * `Hex`: `0x` followed by the integer encoding `sum a_i 2^i`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolyFormat {
    #[default]
    Symbolic,
    Binary,
    Hex,
}

impl FromStr for PolyFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symbolic" => Ok(Self::Symbolic),
            "binary" | "bin" => Ok(Self::Binary),
            "hex" => Ok(Self::Hex),
            other => Err(Error::Parse(format!("unknown polynomial format {other:?}"))),
        }
    }
}

fn parse_symbolic(s: &str) -> Result<Gf2Poly> {
    let mut p = Gf2Poly::zero();
    for term in s.split('+') {
        let t: String = term.chars().filter(|c| !c.is_whitespace()).collect();
        match t.as_str() {
            "0" => {}
            "1" => p.flip(0),
            "x" => p.flip(1),
            _ => {
                let exp = t
                    .strip_prefix("x^")
                    .map(|e| e.trim_matches(|c| c == '{' || c == '}'))
                    .and_then(|e| e.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad polynomial term {term:?}")))?;
                p.flip(exp);
            }
        }
    }
    Ok(p)
}

fn parse_binary(s: &str) -> Result<Gf2Poly> {
    if s.is_empty() {
        return Err(Error::Parse("empty binary polynomial".into()));
    }
    let bits = s
        .chars()
        .rev()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::Parse(format!("bad binary digit {c:?} in {s:?}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Gf2Poly::from_coefficients(bits))
}

fn parse_hex(s: &str) -> Result<Gf2Poly> {
    let digits = s
        .strip_prefix("0x")
        .or_else(|| s.strip_prefix("0X"))
        .unwrap_or(s);
    if digits.is_empty() {
        return Err(Error::Parse("empty hex polynomial".into()));
    }
    let mut p = Gf2Poly::zero();
    for (i, c) in digits.chars().rev().enumerate() {
        let v = c
            .to_digit(16)
            .ok_or_else(|| Error::Parse(format!("bad hex digit {c:?} in {s:?}")))?;
        for b in 0..4 {
            if (v >> b) & 1 == 1 {
                p.flip(4 * i + b);
            }
        }
    }
    Ok(p)
}

impl FromStr for Gf2Poly {
    type Err = Error;

    /// Accepts any of the three [`PolyFormat`]s: a `0x` prefix selects hex,
    /// a string of only `0`/`1` is binary, anything else is symbolic.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with("0x") || s.starts_with("0X") {
            parse_hex(s)
        } else if !s.is_empty() && s.chars().all(|c| c == '0' || c == '1') {
            parse_binary(s)
        } else {
            parse_symbolic(s)
        }
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .rev()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

impl Serialize for Gf2Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Gf2Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl AddAssign<&Gf2Poly> for Gf2Poly {
    fn add_assign(&mut self, rhs: &Gf2Poly) {
        self.xor_shifted(rhs, 0);
    }
}

impl Add for &Gf2Poly {
    type Output = Gf2Poly;

    fn add(self, rhs: &Gf2Poly) -> Gf2Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Gf2Poly {
    type Output = Gf2Poly;

    fn add(mut self, rhs: Gf2Poly) -> Gf2Poly {
        self += &rhs;
        self
    }
}

impl Mul for &Gf2Poly {
    type Output = Gf2Poly;

    fn mul(self, rhs: &Gf2Poly) -> Gf2Poly {
        Gf2Poly::mul(self, rhs)
    }
}

/// `F(x) = 1 + x + ... + x^(2^n - 2)`, the product of all irreducible
/// polynomials whose degree divides `n`, except `x` and `x + 1`.
pub fn build_f(n: u32) -> Result<Gf2Poly> {
    if n < 2 {
        return Err(Error::InvalidOrder {
            n,
            reason: "F(x) needs n >= 2",
        });
    }
    if n > 30 {
        return Err(Error::InvalidOrder {
            n,
            reason: "F(x) limited to n <= 30",
        });
    }
    Ok(Gf2Poly::all_ones((1usize << n) - 1))
}

/// First `count` coefficients of the power series `g / f`.
///
/// Needs `f(0) = 1` and `deg g < deg f`.
pub fn expand_series(g: &Gf2Poly, f: &Gf2Poly, count: usize) -> Result<BitSequence> {
    let df = f
        .degree()
        .ok_or_else(|| Error::InvalidInput("series denominator is zero".into()))?;
    if !f.constant_term() {
        return Err(Error::InvalidInput(
            "series denominator needs f(0) = 1".into(),
        ));
    }
    if g.degree().is_some_and(|dg| dg >= df) {
        return Err(Error::InvalidInput(format!(
            "series numerator degree must be below {df}"
        )));
    }
    // Remainder register: at step i it holds (g - f * s_{<i}) / x^i.
    let mut r = g.clone();
    let mut bits = Vec::with_capacity(count);
    for _ in 0..count {
        let s = r.constant_term();
        bits.push(s);
        if s {
            r += f;
        }
        r.shr1();
    }
    BitSequence::new(bits)
}

/// Möbius function.
pub fn mobius(mut n: u64) -> i8 {
    assert!(n > 0, "mobius(0) is undefined");
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Number of irreducible binary polynomials of degree `n` (Gauss's formula).
pub fn irreducible_count(n: u32) -> Result<u64> {
    if n == 0 || n > 63 {
        return Err(Error::InvalidOrder {
            n,
            reason: "irreducible count needs 1 <= n <= 63",
        });
    }
    let n64 = u64::from(n);
    let total: i128 = (1..=n64)
        .filter(|j| n64 % j == 0)
        .map(|j| i128::from(mobius(j)) * (1i128 << (n64 / j)))
        .sum();
    Ok((total / i128::from(n)) as u64)
}

/// Square-free decomposition: pairs `(g, m)` with `a = prod g^m`, each `g`
/// square-free and pairwise coprime.
pub fn squarefree_decomposition(a: &Gf2Poly) -> Result<Vec<(Gf2Poly, usize)>> {
    if a.is_zero() {
        return Err(Error::InvalidInput(
            "cannot factor the zero polynomial".into(),
        ));
    }
    let mut out = Vec::new();
    let mut c = a.gcd(&a.derivative())?;
    let mut w = a.div_rem(&c)?.0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let fac = w.div_rem(&y)?.0;
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.div_rem(&w)?.0;
        i += 1;
    }
    if !c.is_one() {
        let root = c
            .sqrt()
            .ok_or_else(|| Error::Internal("square-free residue is not a square".into()))?;
        for (fac, m) in squarefree_decomposition(&root)? {
            out.push((fac, 2 * m));
        }
    }
    Ok(out)
}

/// Splits a square-free polynomial into `(d, product of its degree-d irreducible factors)`.
pub fn distinct_degree_factorization(a: &Gf2Poly) -> Result<Vec<(usize, Gf2Poly)>> {
    let mut rest = a.clone();
    let mut out = Vec::new();
    let x = Gf2Poly::x();
    let mut h = x.clone();
    let mut d = 1;
    while rest.degree().is_some_and(|dr| dr >= 2 * d) {
        h = h.mul_mod(&h, &rest)?;
        let g = rest.gcd(&(&h + &x))?;
        if !g.is_one() {
            rest = rest.div_rem(&g)?.0;
            h = h.rem(&rest)?;
            out.push((d, g));
        }
        d += 1;
    }
    if let Some(dr) = rest.degree().filter(|&dr| dr > 0) {
        out.push((dr, rest));
    }
    Ok(out)
}

/// One block of irreducible factors sharing a degree and multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct FactorClass {
    pub degree: usize,
    pub multiplicity: usize,
    /// How many distinct irreducible factors are in this block.
    pub count: usize,
}

/// Degrees and multiplicities of the irreducible factors of `a`.
pub fn factor_classes(a: &Gf2Poly) -> Result<Vec<FactorClass>> {
    let mut out = Vec::new();
    for (part, multiplicity) in squarefree_decomposition(a)? {
        for (degree, block) in distinct_degree_factorization(&part)? {
            let count = block.degree().unwrap_or(0) / degree;
            out.push(FactorClass {
                degree,
                multiplicity,
                count,
            });
        }
    }
    out.sort();
    Ok(out)
}

fn prime_factors(mut m: u128, budget: &mut u64) -> Result<Vec<u128>> {
    let mut primes = Vec::new();
    let mut p: u128 = 2;
    while p * p <= m {
        if *budget == 0 {
            return Err(Error::OrderUndetermined(format!(
                "factoring budget exhausted while splitting {m}"
            )));
        }
        *budget -= 1;
        if m.is_multiple_of(p) {
            primes.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        primes.push(m);
    }
    Ok(primes)
}

/// Multiplicative order of `x` modulo `a`: least `λ > 0` with `a | x^λ - 1`.
///
/// The search runs over divisors of `lcm(2^d - 1) * 2^t`, where `d` ranges
/// over the irreducible factor degrees and `2^t` covers the largest
/// multiplicity. Factoring stops with [`Error::OrderUndetermined`] once
/// `factor_budget` trial divisions are spent.
pub fn order(a: &Gf2Poly, factor_budget: u64) -> Result<u128> {
    if a.is_zero() || !a.constant_term() {
        return Err(Error::InvalidInput(format!(
            "order needs a(0) = 1, got {a}"
        )));
    }
    if a.degree() == Some(0) {
        return Ok(1);
    }
    let classes = factor_classes(a)?;
    let mut budget = factor_budget;
    let mut multiple: u128 = 1;
    let mut primes: Vec<u128> = Vec::new();
    let mut max_mult = 1;
    for class in &classes {
        if class.degree >= 127 {
            return Err(Error::OrderUndetermined(format!(
                "irreducible factor of degree {} is too large",
                class.degree
            )));
        }
        let cyc = (1u128 << class.degree) - 1;
        multiple = lcm(multiple, cyc)
            .ok_or_else(|| Error::OrderUndetermined("order multiple overflows u128".into()))?;
        for p in prime_factors(cyc, &mut budget)? {
            if !primes.contains(&p) {
                primes.push(p);
            }
        }
        max_mult = max_mult.max(class.multiplicity);
    }
    let mut t = 0;
    while (1usize << t) < max_mult {
        t += 1;
    }
    if t > 0 {
        multiple = multiple
            .checked_mul(1u128 << t)
            .ok_or_else(|| Error::OrderUndetermined("order multiple overflows u128".into()))?;
        primes.push(2);
    }
    let x = Gf2Poly::x();
    let mut lambda = multiple;
    for p in primes {
        while lambda.is_multiple_of(p) && x.pow_mod(lambda / p, a)?.is_one() {
            lambda /= p;
        }
    }
    if !x.pow_mod(lambda, a)?.is_one() {
        return Err(Error::Internal(format!("x^{lambda} is not 1 modulo {a}")));
    }
    Ok(lambda)
}

fn lcm(a: u128, b: u128) -> Option<u128> {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    (a / x).checked_mul(b)
}
