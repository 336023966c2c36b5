//! The digraph on nonzero residues of degree below `n`.
//!
//! Vertex `A` in `1..=2^n-1` is the polynomial whose coefficient of `x^i` is
//! bit `i` of `A`. Each vertex has a *double* arc to `2A mod 2^n` (label 0,
//! absent when that is zero) and a *complement* arc to
//! `(2^n - 1) - (2A mod 2^n)` (label 1).

use std::collections::HashSet;
use std::fmt::Write as _;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2poly::{build_f, Gf2Poly};
use crate::seqkit::BitSequence;

pub type Vertex = u32;

/// Default largest `n` for which exhaustive enumeration runs without an override.
pub const DEFAULT_EXHAUSTIVE_CEILING: u32 = 6;

/// Largest order the graph routines accept.
pub const MAX_ORDER: u32 = 24;

/// The all-ones vertex `2^n - 1`.
pub fn all_ones(n: u32) -> Vertex {
    (1 << n) - 1
}

fn check_order(n: u32) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidOrder {
            n,
            reason: "the graph needs n >= 3",
        });
    }
    if n > MAX_ORDER {
        return Err(Error::InvalidOrder {
            n,
            reason: "the graph is limited to n <= 24",
        });
    }
    Ok(())
}

fn check_vertex(v: Vertex, n: u32) -> Result<()> {
    if v == 0 || v > all_ones(n) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            max: all_ones(n),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcKind {
    Double,
    Complement,
}

impl ArcKind {
    pub fn label(self) -> u8 {
        match self {
            ArcKind::Double => 0,
            ArcKind::Complement => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Successors {
    pub double: Option<Vertex>,
    pub complement: Vertex,
}

impl Successors {
    pub fn get(&self, kind: ArcKind) -> Option<Vertex> {
        match kind {
            ArcKind::Double => self.double,
            ArcKind::Complement => Some(self.complement),
        }
    }
}

pub fn successors(a: Vertex, n: u32) -> Successors {
    let doubled = (a << 1) & all_ones(n);
    Successors {
        double: (doubled != 0).then_some(doubled),
        complement: all_ones(n) - doubled,
    }
}

/// Which arc joins `from` to `to`, if any.
pub fn arc_kind(from: Vertex, to: Vertex, n: u32) -> Option<ArcKind> {
    let s = successors(from, n);
    if s.double == Some(to) {
        Some(ArcKind::Double)
    } else if s.complement == to {
        Some(ArcKind::Complement)
    } else {
        None
    }
}

/// The digraph for a fixed `n >= 3`.
#[derive(Debug, Clone)]
pub struct GammaGraph {
    n: u32,
    succ: Vec<Successors>,
    in_degree: Vec<u32>,
}

impl GammaGraph {
    pub fn build(n: u32) -> Result<Self> {
        check_order(n)?;
        let max = all_ones(n);
        let succ: Vec<Successors> = (1..=max).map(|v| successors(v, n)).collect();
        let mut in_degree = vec![0u32; max as usize];
        for s in &succ {
            if let Some(d) = s.double {
                in_degree[d as usize - 1] += 1;
            }
            in_degree[s.complement as usize - 1] += 1;
        }
        Ok(Self { n, succ, in_degree })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.succ.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=all_ones(self.n)
    }

    pub fn successors(&self, v: Vertex) -> Successors {
        self.succ[v as usize - 1]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        1 + usize::from(self.successors(v).double.is_some())
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.in_degree[v as usize - 1] as usize
    }

    /// All arcs as `(from, to, kind)`, double arc first for each vertex.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex, ArcKind)> + '_ {
        self.vertices().flat_map(move |v| {
            let s = self.successors(v);
            s.double
                .map(|d| (v, d, ArcKind::Double))
                .into_iter()
                .chain(std::iter::once((v, s.complement, ArcKind::Complement)))
        })
    }

    pub fn arc_count(&self) -> usize {
        self.arcs().count()
    }

    /// The vertex carrying a complement self-loop, if any.
    ///
    /// A loop needs `a = x a mod x^n + (1 + ... + x^(n-1))`, which holds for
    /// the alternating pattern `...10101` in every order: `3A = 2^n - 1` for
    /// even `n` and `3A = 2^(n+1) - 1` for odd `n`.
    pub fn loop_vertex(&self) -> Option<Vertex> {
        self.vertices()
            .find(|&v| self.successors(v).complement == v)
    }
}

/// A Hamiltonian cycle of the graph, stored from some starting vertex.
///
/// Equality and hashing ignore rotation; [`HamCycle::canonical`] starts at
/// the all-ones vertex, which every Hamiltonian cycle contains.
#[derive(Debug, Clone, Serialize)]
pub struct HamCycle {
    n: u32,
    vertices: Vec<Vertex>,
}

impl HamCycle {
    /// Validates length, range, distinctness and every arc including the closing one.
    pub fn new(n: u32, vertices: Vec<Vertex>) -> Result<Self> {
        check_order(n)?;
        let len = all_ones(n) as usize;
        if vertices.len() != len {
            return Err(Error::InvalidCycle(format!(
                "expected {len} vertices, got {}",
                vertices.len()
            )));
        }
        let mut seen = vec![false; len + 1];
        for &v in &vertices {
            check_vertex(v, n)?;
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::InvalidCycle(format!("vertex {v} repeats")));
            }
        }
        for i in 0..len {
            let (a, b) = (vertices[i], vertices[(i + 1) % len]);
            if arc_kind(a, b, n).is_none() {
                return Err(Error::InvalidCycle(format!("{a} -> {b} is not an arc")));
            }
        }
        Ok(Self { n, vertices })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&u| u == v)
    }

    /// The same cycle, listed from `v`.
    pub fn rotated_to(&self, v: Vertex) -> Option<Self> {
        let p = self.position(v)?;
        let mut vertices = self.vertices.clone();
        vertices.rotate_left(p);
        Some(Self {
            n: self.n,
            vertices,
        })
    }

    pub fn canonical(&self) -> Self {
        self.rotated_to(all_ones(self.n))
            .expect("a Hamiltonian cycle visits every vertex")
    }

    pub fn arc_kinds(&self) -> Vec<ArcKind> {
        let len = self.vertices.len();
        (0..len)
            .map(|i| {
                arc_kind(self.vertices[i], self.vertices[(i + 1) % len], self.n)
                    .expect("validated on construction")
            })
            .collect()
    }

    pub fn record(&self) -> CycleRecord {
        CycleRecord {
            n: self.n,
            vertices: self.vertices.clone(),
            sequence: cycle_to_sequence(self).to_compact_string(),
        }
    }
}

impl PartialEq for HamCycle {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.canonical().vertices == other.canonical().vertices
    }
}

impl Eq for HamCycle {}

impl Hash for HamCycle {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.canonical().vertices.hash(state);
    }
}

/// JSON-lines record for a cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRecord {
    pub n: u32,
    pub vertices: Vec<Vertex>,
    pub sequence: String,
}

/// The walk `(x^i g mod F) mod x^n` for `i = 0 .. 2^n - 2`.
pub fn walk_of_generator(g: &Gf2Poly, n: u32) -> Result<Vec<Vertex>> {
    check_order(n)?;
    let f = build_f(n)?;
    let mut r = g.rem(&f)?;
    if r.is_zero() {
        return Err(Error::InvalidInput("generator is zero modulo F".into()));
    }
    let len = all_ones(n) as usize;
    let mut walk = Vec::with_capacity(len);
    for index in 0..len {
        let w = r.low_bits(n) as Vertex;
        if w == 0 {
            return Err(Error::ZeroWindow { index });
        }
        walk.push(w);
        r.mul_x_mod(&f);
    }
    Ok(walk)
}

/// Arc labels along the cycle, starting with the arc out of its first vertex.
pub fn cycle_to_sequence(h: &HamCycle) -> BitSequence {
    BitSequence::new(
        h.arc_kinds()
            .into_iter()
            .map(|k| k == ArcKind::Complement)
            .collect(),
    )
    .expect("cycles are nonempty")
}

/// Inverse of [`cycle_to_sequence`]: the cycle whose arc labels are `s`.
///
/// After `n` steps the doubling has flushed the start vertex, so vertex `i`
/// is fixed by the `n` labels before it. Fails unless `s` is a modified de
/// Bruijn sequence of order `n`.
pub fn sequence_to_cycle(s: &BitSequence, n: u32) -> Result<HamCycle> {
    check_order(n)?;
    let len = all_ones(n) as usize;
    if s.period() != len {
        return Err(Error::InvalidInput(format!(
            "sequence period {} is not 2^{n} - 1",
            s.period()
        )));
    }
    let mask = all_ones(n);
    let vertices = (0..len)
        .map(|i| {
            (1..=n as usize).fold(0, |acc, t| {
                if s.get(i + len - t) {
                    acc ^ ((mask << (t - 1)) & mask)
                } else {
                    acc
                }
            })
        })
        .collect();
    HamCycle::new(n, vertices)
}

/// Size guard for exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExhaustiveGuard {
    pub ceiling: u32,
    pub overridden: bool,
}

impl Default for ExhaustiveGuard {
    fn default() -> Self {
        Self {
            ceiling: DEFAULT_EXHAUSTIVE_CEILING,
            overridden: false,
        }
    }
}

impl ExhaustiveGuard {
    pub fn check(&self, n: u32) -> Result<()> {
        if n > self.ceiling && !self.overridden {
            return Err(Error::GuardRefused {
                n,
                ceiling: self.ceiling,
            });
        }
        Ok(())
    }
}

/// Depth-first enumeration of Hamiltonian cycles in canonical form.
///
/// The search starts at `2^n - 1` and tries the double arc before the
/// complement arc, which fixes the output order. Without a `limit` the
/// guard must allow `n`.
pub fn enumerate_hamiltonian(
    n: u32,
    limit: Option<usize>,
    guard: ExhaustiveGuard,
) -> Result<HamiltonianCycles> {
    check_order(n)?;
    if limit.is_none() {
        guard.check(n)?;
    }
    Ok(HamiltonianCycles::new(n, limit))
}

/// Iterator returned by [`enumerate_hamiltonian`].
#[derive(Debug, Clone)]
pub struct HamiltonianCycles {
    n: u32,
    target: usize,
    path: Vec<Vertex>,
    next_branch: Vec<u8>,
    visited: Vec<bool>,
    remaining: Option<usize>,
}

impl HamiltonianCycles {
    fn new(n: u32, limit: Option<usize>) -> Self {
        let start = all_ones(n);
        let mut visited = vec![false; start as usize + 1];
        visited[start as usize] = true;
        Self {
            n,
            target: start as usize,
            path: vec![start],
            next_branch: vec![0],
            visited,
            remaining: limit,
        }
    }

    fn pop(&mut self) {
        if let Some(v) = self.path.pop() {
            self.visited[v as usize] = false;
            self.next_branch.pop();
        }
    }
}

impl Iterator for HamiltonianCycles {
    type Item = HamCycle;

    fn next(&mut self) -> Option<HamCycle> {
        if self.remaining == Some(0) {
            return None;
        }
        // The only arc into 2^n - 1 comes from 2^(n-1), so that vertex closes the cycle.
        let closer = 1 << (self.n - 1);
        loop {
            let depth = self.path.len();
            if depth == 0 {
                return None;
            }
            if depth == self.target {
                let found = (self.path[depth - 1] == closer).then(|| self.path.clone());
                self.pop();
                if let Some(vertices) = found {
                    if let Some(r) = self.remaining.as_mut() {
                        *r -= 1;
                    }
                    return Some(HamCycle {
                        n: self.n,
                        vertices,
                    });
                }
                continue;
            }
            let top = depth - 1;
            let branch = self.next_branch[top];
            if branch >= 2 {
                self.pop();
                continue;
            }
            self.next_branch[top] += 1;
            let s = successors(self.path[top], self.n);
            let candidate = if branch == 0 {
                s.double
            } else {
                Some(s.complement)
            };
            if let Some(c) = candidate {
                let closes_too_early = c == closer && depth + 1 != self.target;
                if !self.visited[c as usize] && !closes_too_early {
                    self.visited[c as usize] = true;
                    self.path.push(c);
                    self.next_branch.push(0);
                }
            }
        }
    }
}

/// Graphviz rendering: double arcs blue with label 0, complement arcs red
/// with label 1. Arcs of `highlight` are drawn bold.
pub fn dot_export(g: &GammaGraph, highlight: Option<&HamCycle>) -> String {
    let bold: HashSet<(Vertex, Vertex)> = highlight
        .map(|h| {
            let v = h.vertices();
            (0..v.len()).map(|i| (v[i], v[(i + 1) % v.len()])).collect()
        })
        .unwrap_or_default();
    let mut out = String::new();
    let _ = writeln!(out, "digraph gamma_{} {{", g.n());
    let _ = writeln!(
        out,
        "  node [shape=box, style=\"rounded,filled\", fillcolor=lightgray];"
    );
    for (from, to, kind) in g.arcs() {
        let color = match kind {
            ArcKind::Double => "blue",
            ArcKind::Complement => "red",
        };
        let extra = if bold.contains(&(from, to)) {
            ", style=\"bold\", penwidth=2"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  {from} -> {to} [label=\"{}\", color=\"{color}\"{extra}];",
            kind.label()
        );
    }
    out.push_str("}\n");
    out
}
