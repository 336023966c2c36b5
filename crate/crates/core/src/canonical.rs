//! Canonical generators of Hamiltonian cycles and the exact minimal
//! polynomial of the corresponding modified de Bruijn sequence.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma::{
    all_ones, cycle_to_sequence, enumerate_hamiltonian, walk_of_generator, ExhaustiveGuard,
    HamCycle, Vertex,
};
use crate::gf2poly::{build_f, Gf2Poly};
use crate::seqkit::berlekamp_massey;

/// `x^k g mod F`; generates the same cycle as `g`, shifted by `k` steps.
pub fn generator_shift(g: &Gf2Poly, k: u64, n: u32) -> Result<Gf2Poly> {
    if g.is_zero() {
        return Err(Error::InvalidInput("generator must be nonzero".into()));
    }
    let f = build_f(n)?;
    let period = u128::from(all_ones(n));
    let xk = Gf2Poly::x().pow_mod(u128::from(k) % period, &f)?;
    xk.mul_mod(g, &f)
}

/// The generator of degree `2^n - n - 2` with constant term 1 whose walk is `h`.
///
/// The walk is anchored with `2^n - 1` at index `n`, which forces the top
/// coefficient. Each later vertex of `h` then fixes one more coefficient,
/// from the top down: the unknown coefficient `c_i` enters the low `n` bits
/// of `x^(n+k) c mod F` only through `x^D mod F`, whose low bits are all ones,
/// and the lower coefficients do not reach the low bits at all.
pub fn canonical_generator(h: &HamCycle) -> Result<Gf2Poly> {
    let n = h.n();
    let f = build_f(n)?;
    let top_vertex = all_ones(n);
    let mask = u64::from(top_vertex);
    let d = (1usize << n) - 2;
    let deg_c = d - n as usize;
    let anchored = h.canonical();
    let after_top = anchored.vertices();

    let x_d = Gf2Poly::all_ones(d);
    let mut c = Gf2Poly::monomial(deg_c);
    // residue = x^(n+k) * (coefficients of c above i) mod F
    let mut residue = Gf2Poly::one();
    for (k, &v) in after_top.iter().enumerate().take(deg_c + 1).skip(1) {
        let i = deg_c - k;
        let target = u64::from(v);
        let low = residue.low_bits(n);
        let bit = if low == target {
            false
        } else if low ^ mask == target {
            true
        } else {
            return Err(Error::Internal(format!(
                "vertex {target} at step {k} is unreachable from the recovered prefix"
            )));
        };
        if bit {
            c.set_coeff(i, true);
            residue += &x_d;
        }
        residue.mul_x_mod(&f);
    }
    if !c.constant_term() {
        return Err(Error::Internal(
            "recovered generator has constant term 0".into(),
        ));
    }
    let walk = walk_of_generator(&c, n)?;
    let len = walk.len();
    let matches = (0..len).all(|t| walk[(n as usize + t) % len] == after_top[t]);
    if !matches {
        return Err(Error::Internal(
            "recovered generator does not regenerate the cycle".into(),
        ));
    }
    Ok(c)
}

/// Minimal-polynomial data for one Hamiltonian cycle.
///
/// `f = F / gcd(c_h, F)` annihilates the arc-label sequence; its reciprocal
/// `f_star` annihilates the power series `c_h / F`, which is that sequence
/// reversed. `bm_check` comes from Berlekamp-Massey on the arc labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinPolyReport {
    pub n: u32,
    pub vertices: Vec<Vertex>,
    pub sequence: String,
    pub c_h: Gf2Poly,
    pub d: Gf2Poly,
    pub f: Gf2Poly,
    pub f_star: Gf2Poly,
    pub span: usize,
    pub bm_check: Gf2Poly,
}

impl MinPolyReport {
    /// True when the oracle agrees with the gcd route.
    pub fn is_consistent(&self) -> bool {
        self.bm_check == self.f && self.f.degree() == Some(self.span)
    }
}

pub fn minimal_polynomial_of_cycle(h: &HamCycle) -> Result<MinPolyReport> {
    let n = h.n();
    let big_f = build_f(n)?;
    let c_h = canonical_generator(h)?;
    let d = c_h.gcd(&big_f)?;
    let (f, rem) = big_f.div_rem(&d)?;
    if !rem.is_zero() {
        return Err(Error::Internal("gcd does not divide F".into()));
    }
    let f_star = f.reciprocal()?;
    let span = f.degree().unwrap_or(0);
    let sequence = cycle_to_sequence(h);
    let bm_check = berlekamp_massey(&sequence).minimal_polynomial;
    Ok(MinPolyReport {
        n,
        vertices: h.vertices().to_vec(),
        sequence: sequence.to_compact_string(),
        c_h,
        d,
        f,
        f_star,
        span,
        bm_check,
    })
}

/// Span histogram (span to number of cycles) over every Hamiltonian cycle.
pub fn spans_of_all_cycles(n: u32, guard: ExhaustiveGuard) -> Result<BTreeMap<usize, usize>> {
    let cycles: Vec<HamCycle> = enumerate_hamiltonian(n, None, guard)?.collect();
    let spans = cycles
        .par_iter()
        .map(|h| minimal_polynomial_of_cycle(h).map(|r| r.span))
        .collect::<Result<Vec<_>>>()?;
    let mut hist = BTreeMap::new();
    for s in spans {
        *hist.entry(s).or_insert(0) += 1;
    }
    Ok(hist)
}
