//! Greedy Hamiltonian-path constructions and the prefer-complement
//! permutation with its cycle decomposition.

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::gamma::{all_ones, arc_kind, successors, HamCycle, Vertex, MAX_ORDER};

/// Which arc a greedy step tries first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preference {
    /// Complement arc first, then the double arc.
    Complement,
    /// Double arc first (when nonzero), then the complement arc.
    Double,
}

/// Output of a greedy run. `hamiltonian` is set when the path covers every
/// vertex and its last vertex has an arc back to the first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyPath {
    pub n: u32,
    pub v_init: Vertex,
    pub vertices: Vec<Vertex>,
    pub hamiltonian: bool,
}

impl GreedyPath {
    pub fn into_cycle(self) -> Option<HamCycle> {
        if self.hamiltonian {
            HamCycle::new(self.n, self.vertices).ok()
        } else {
            None
        }
    }
}

fn check_start(n: u32, v: Vertex) -> Result<()> {
    if !(3..=MAX_ORDER).contains(&n) {
        return Err(Error::InvalidOrder {
            n,
            reason: "greedy constructions need 3 <= n <= 24",
        });
    }
    if v == 0 || v > all_ones(n) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            max: all_ones(n),
        });
    }
    Ok(())
}

/// Runs one greedy rule from `v_init` until both successors are used.
///
/// The zero vector is never a vertex, so a double step landing on 0 counts
/// as blocked.
pub fn greedy_path(n: u32, v_init: Vertex, pref: Preference) -> Result<GreedyPath> {
    check_start(n, v_init)?;
    let len = all_ones(n) as usize;
    let mut used = vec![false; len + 1];
    used[0] = true;
    used[v_init as usize] = true;
    let mut vertices = vec![v_init];
    let mut j = v_init;
    loop {
        let s = successors(j, n);
        let d = s.double.unwrap_or(0);
        let c = s.complement;
        let order = match pref {
            Preference::Complement => [c, d],
            Preference::Double => [d, c],
        };
        match order.into_iter().find(|&v| !used[v as usize]) {
            Some(next) => {
                used[next as usize] = true;
                vertices.push(next);
                j = next;
            }
            None => break,
        }
    }
    let hamiltonian = vertices.len() == len && arc_kind(j, v_init, n).is_some();
    Ok(GreedyPath {
        n,
        v_init,
        vertices,
        hamiltonian,
    })
}

pub fn prefer_complement(n: u32, v_init: Vertex) -> Result<GreedyPath> {
    greedy_path(n, v_init, Preference::Complement)
}

pub fn modified_prefer_double(n: u32, v_init: Vertex) -> Result<GreedyPath> {
    greedy_path(n, v_init, Preference::Double)
}

/// Every start vertex from which the rule produces a Hamiltonian cycle.
pub fn hamiltonian_inits(n: u32, pref: Preference) -> Result<BTreeSet<Vertex>> {
    check_start(n, 1)?;
    let hits: Result<Vec<Option<Vertex>>> = (1..=all_ones(n))
        .into_par_iter()
        .map(|v| Ok(greedy_path(n, v, pref)?.hamiltonian.then_some(v)))
        .collect();
    Ok(hits?.into_iter().flatten().collect())
}

pub fn hamiltonian_inits_prefer_complement(n: u32) -> Result<BTreeSet<Vertex>> {
    hamiltonian_inits(n, Preference::Complement)
}

/// Rotation-distinct Hamiltonian cycles produced by the rule, ordered by
/// their smallest start vertex.
pub fn distinct_greedy_cycles(n: u32, pref: Preference) -> Result<Vec<HamCycle>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for v in hamiltonian_inits(n, pref)? {
        let cycle = greedy_path(n, v, pref)?
            .into_cycle()
            .ok_or_else(|| Error::Internal(format!("start {v} lost its Hamiltonian flag")))?;
        if seen.insert(cycle.clone()) {
            out.push(cycle);
        }
    }
    Ok(out)
}

/// How the decomposition picks the next unused vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VisitOrder {
    /// `1, 2, ..., 2^n - 1`.
    Natural,
    /// A full permutation of the vertices.
    Explicit(Vec<Vertex>),
    /// A permutation drawn from a seeded ChaCha stream keyed by SHA-256 of the seed text.
    Seeded(String),
}

impl VisitOrder {
    /// The given vertices first, then the rest in increasing order.
    pub fn from_prefix(n: u32, prefix: &[Vertex]) -> Result<Self> {
        check_start(n, 1)?;
        let mut seen = HashSet::new();
        for &v in prefix {
            check_start(n, v)?;
            if !seen.insert(v) {
                return Err(Error::InvalidInput(format!(
                    "vertex {v} repeats in visit order"
                )));
            }
        }
        let mut order = prefix.to_vec();
        order.extend((1..=all_ones(n)).filter(|v| !seen.contains(v)));
        Ok(VisitOrder::Explicit(order))
    }

    fn resolve(&self, n: u32) -> Result<(Vec<Vertex>, String)> {
        let max = all_ones(n);
        match self {
            VisitOrder::Natural => Ok(((1..=max).collect(), "natural".to_string())),
            VisitOrder::Explicit(order) => {
                let mut sorted = order.clone();
                sorted.sort_unstable();
                if !sorted.iter().copied().eq(1..=max) {
                    return Err(Error::InvalidInput(format!(
                        "visit order is not a permutation of 1..={max}"
                    )));
                }
                let label = order
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                Ok((order.clone(), format!("explicit:{label}")))
            }
            VisitOrder::Seeded(seed) => {
                let key: [u8; 32] = Sha256::digest(seed.as_bytes()).into();
                let mut rng = ChaCha8Rng::from_seed(key);
                let mut order: Vec<Vertex> = (1..=max).collect();
                order.shuffle(&mut rng);
                Ok((order, seed.clone()))
            }
        }
    }
}

/// Disjoint cycles of the prefer-complement permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiDecomposition {
    pub n: u32,
    pub cycles: Vec<Vec<Vertex>>,
    pub order_seed: String,
}

impl PsiDecomposition {
    /// Checks disjointness, coverage and that every step (including the
    /// closing one) is an arc.
    pub fn new(n: u32, cycles: Vec<Vec<Vertex>>, order_seed: impl Into<String>) -> Result<Self> {
        check_start(n, 1)?;
        let max = all_ones(n);
        let mut seen = vec![false; max as usize + 1];
        for cycle in &cycles {
            if cycle.is_empty() {
                return Err(Error::InvalidInput("empty cycle in decomposition".into()));
            }
            for (i, &v) in cycle.iter().enumerate() {
                check_start(n, v)?;
                if std::mem::replace(&mut seen[v as usize], true) {
                    return Err(Error::InvalidInput(format!("vertex {v} appears twice")));
                }
                let next = cycle[(i + 1) % cycle.len()];
                if arc_kind(v, next, n).is_none() {
                    return Err(Error::InvalidInput(format!("{v} -> {next} is not an arc")));
                }
            }
        }
        if let Some(missing) = (1..=max).find(|&v| !seen[v as usize]) {
            return Err(Error::InvalidInput(format!(
                "vertex {missing} is not covered"
            )));
        }
        Ok(Self {
            n,
            cycles,
            order_seed: order_seed.into(),
        })
    }

    pub fn start_element(&self, i: usize) -> Option<Vertex> {
        self.cycles.get(i).and_then(|c| c.first().copied())
    }

    pub fn terminating_element(&self, i: usize) -> Option<Vertex> {
        self.cycles.get(i).and_then(|c| c.last().copied())
    }

    /// Image of `v` under the permutation.
    pub fn successor(&self, v: Vertex) -> Option<Vertex> {
        self.cycles
            .iter()
            .find_map(|c| c.iter().position(|&u| u == v).map(|p| c[(p + 1) % c.len()]))
    }
}

/// Splits the vertices into prefer-complement cycles, seeding each new cycle
/// with the first unused vertex of `order`.
pub fn psi_decompose(n: u32, order: &VisitOrder) -> Result<PsiDecomposition> {
    check_start(n, 1)?;
    let (order, label) = order.resolve(n)?;
    let max = all_ones(n);
    let mut used = vec![false; max as usize + 1];
    used[0] = true;
    let mut cycles = Vec::new();
    for &start in &order {
        if used[start as usize] {
            continue;
        }
        used[start as usize] = true;
        let mut cycle = vec![start];
        let mut j = start;
        loop {
            let s = successors(j, n);
            let next = [s.complement, s.double.unwrap_or(0)]
                .into_iter()
                .find(|&v| !used[v as usize]);
            match next {
                Some(v) => {
                    used[v as usize] = true;
                    cycle.push(v);
                    j = v;
                }
                None => break,
            }
        }
        if arc_kind(j, start, n).is_none() {
            return Err(Error::Internal(format!(
                "cycle from {start} stuck at {j} without an arc back"
            )));
        }
        cycles.push(cycle);
    }
    Ok(PsiDecomposition {
        n,
        cycles,
        order_seed: label,
    })
}
