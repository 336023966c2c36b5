//! Joining the disjoint cycles of a prefer-complement decomposition into
//! Hamiltonian cycles through complementary vertex pairs.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma::{all_ones, HamCycle, Vertex};
use crate::greedy::{
    distinct_greedy_cycles, psi_decompose, Preference, PsiDecomposition, VisitOrder,
};

/// Largest edge count accepted by exhaustive spanning-tree enumeration.
pub const MAX_TREE_EDGES: usize = 24;

/// Pair `(r, s)` with `r` in cycle `i`, `s` in cycle `k`, `i < k` and
/// `r + s = 2^n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct JoinEdge {
    pub i: usize,
    pub k: usize,
    pub r: Vertex,
    pub s: Vertex,
}

/// Undirected multigraph whose nodes are the cycles of a decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinGraph {
    pub node_count: usize,
    pub edges: Vec<JoinEdge>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    /// False when `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

impl JoinGraph {
    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.node_count);
        let merges = self.edges.iter().filter(|e| uf.union(e.i, e.k)).count();
        self.node_count <= 1 || merges == self.node_count - 1
    }

    pub fn matrix(&self) -> JoinMatrix {
        let j = self.node_count;
        let mut m = vec![vec![0i64; j]; j];
        for e in &self.edges {
            m[e.i][e.i] += 1;
            m[e.k][e.k] += 1;
            m[e.i][e.k] -= 1;
            m[e.k][e.i] -= 1;
        }
        JoinMatrix(m)
    }
}

/// Degree-minus-adjacency matrix of a [`JoinGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinMatrix(pub Vec<Vec<i64>>);

impl JoinMatrix {
    /// Determinant of the matrix with the last row and column removed.
    pub fn cofactor(&self) -> BigInt {
        let size = self.0.len().saturating_sub(1);
        let mut a: Vec<Vec<BigInt>> = self.0[..size]
            .iter()
            .map(|row| row[..size].iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        bareiss_determinant(&mut a)
    }
}

/// Fraction-free Gaussian elimination; exact for integer matrices.
fn bareiss_determinant(a: &mut [Vec<BigInt>]) -> BigInt {
    let size = a.len();
    if size == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for p in 0..size - 1 {
        if a[p][p].is_zero() {
            match (p + 1..size).find(|&r| !a[r][p].is_zero()) {
                Some(r) => {
                    a.swap(p, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for r in p + 1..size {
            for c in p + 1..size {
                let v = (&a[r][c] * &a[p][p] - &a[r][p] * &a[p][c]) / &prev;
                a[r][c] = v;
            }
        }
        prev = a[p][p].clone();
    }
    sign * &a[size - 1][size - 1]
}

/// All cross-cycle complementary pairs, sorted by cycle pair and then by
/// the position of `r` in its cycle.
pub fn complement_pairs(dec: &PsiDecomposition) -> JoinGraph {
    let max = all_ones(dec.n);
    let mut owner = vec![(usize::MAX, 0usize); max as usize + 1];
    for (ci, cycle) in dec.cycles.iter().enumerate() {
        for (pos, &v) in cycle.iter().enumerate() {
            owner[v as usize] = (ci, pos);
        }
    }
    let mut keyed = Vec::new();
    for r in 1..=max {
        let s = max - r;
        if s == 0 {
            continue;
        }
        let ((ci, pos), (ck, _)) = (owner[r as usize], owner[s as usize]);
        if ci < ck {
            keyed.push(((ci, ck, pos), JoinEdge { i: ci, k: ck, r, s }));
        }
    }
    keyed.sort_by_key(|(key, _)| *key);
    JoinGraph {
        node_count: dec.cycles.len(),
        edges: keyed.into_iter().map(|(_, e)| e).collect(),
    }
}

/// Number of spanning trees of the join graph (0 when disconnected).
pub fn best_count(g: &JoinGraph) -> BigInt {
    g.matrix().cofactor()
}

/// Merges two disjoint cycles by swapping the predecessors of `r` and `s`.
///
/// With `a = (c_1..c_k)`, `r = c_i`, `b = (d_1..d_l)` and `s = d_j`, the
/// result is `(c_1..c_{i-1}, d_j..d_l, d_1..d_{j-1}, c_i..c_k)`.
pub fn join_pair(n: u32, a: &[Vertex], b: &[Vertex], r: Vertex, s: Vertex) -> Result<Vec<Vertex>> {
    if r.checked_add(s) != Some(all_ones(n)) {
        return Err(Error::InvalidInput(format!(
            "{r} + {s} is not {}",
            all_ones(n)
        )));
    }
    let i = a
        .iter()
        .position(|&v| v == r)
        .ok_or_else(|| Error::InvalidInput(format!("{r} is not in the first cycle")))?;
    let j = b
        .iter()
        .position(|&v| v == s)
        .ok_or_else(|| Error::InvalidInput(format!("{s} is not in the second cycle")))?;
    let in_a: HashSet<Vertex> = a.iter().copied().collect();
    if b.iter().any(|v| in_a.contains(v)) {
        return Err(Error::InvalidInput("cycles are not disjoint".into()));
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(&a[..i]);
    out.extend_from_slice(&b[j..]);
    out.extend_from_slice(&b[..j]);
    out.extend_from_slice(&a[i..]);
    Ok(out)
}

/// Edge-index sets of every spanning tree, in lexicographic order.
pub fn spanning_trees(g: &JoinGraph) -> Result<Vec<Vec<usize>>> {
    let m = g.edges.len();
    if m > MAX_TREE_EDGES {
        return Err(Error::TooManyEdges {
            edges: m,
            ceiling: MAX_TREE_EDGES,
        });
    }
    let size = g.node_count.saturating_sub(1);
    if size > m {
        return Ok(Vec::new());
    }
    let mut trees = Vec::new();
    let mut pick: Vec<usize> = (0..size).collect();
    loop {
        let mut uf = UnionFind::new(g.node_count);
        if pick.iter().all(|&e| uf.union(g.edges[e].i, g.edges[e].k)) {
            trees.push(pick.clone());
        }
        // Advance to the next combination.
        let Some(p) = (0..size).rev().find(|&p| pick[p] != p + m - size) else {
            break;
        };
        pick[p] += 1;
        for q in p + 1..size {
            pick[q] = pick[q - 1] + 1;
        }
    }
    Ok(trees)
}

fn merge_all<I>(dec: &PsiDecomposition, edges: I) -> Result<HamCycle>
where
    I: IntoIterator<Item = (Vertex, Vertex)>,
{
    let mut parts: Vec<Vec<Vertex>> = dec.cycles.clone();
    for (r, s) in edges {
        let find = |parts: &[Vec<Vertex>], v: Vertex| {
            parts.iter().position(|c| c.contains(&v)).ok_or_else(|| {
                Error::InvalidInput(format!("vertex {v} is not in the decomposition"))
            })
        };
        let (pa, pb) = (find(&parts, r)?, find(&parts, s)?);
        if pa == pb {
            return Err(Error::InvalidInput(format!(
                "pair ({r},{s}) lies in one cycle"
            )));
        }
        let joined = join_pair(dec.n, &parts[pa], &parts[pb], r, s)?;
        let (lo, hi) = (pa.min(pb), pa.max(pb));
        parts.remove(hi);
        parts[lo] = joined;
    }
    if parts.len() != 1 {
        return Err(Error::InvalidInput(format!(
            "{} cycles remain after joining",
            parts.len()
        )));
    }
    let cycle = HamCycle::new(dec.n, parts.pop().unwrap_or_default())?;
    let first = dec.cycles[0][0];
    cycle
        .rotated_to(first)
        .ok_or_else(|| Error::Internal(format!("joined cycle lost vertex {first}")))
}

/// Applies the given edges in order, listing the result from the first
/// decomposition cycle's start element.
pub fn join_tree(dec: &PsiDecomposition, edges: &[JoinEdge]) -> Result<HamCycle> {
    merge_all(dec, edges.iter().map(|e| (e.r, e.s)))
}

/// The Hamiltonian cycle built from one spanning tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinedCycle {
    pub tree: Vec<JoinEdge>,
    pub cycle: HamCycle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinedCycles {
    pub graph: JoinGraph,
    /// One entry per spanning tree, in tree order.
    pub per_tree: Vec<JoinedCycle>,
    /// Number of rotation-distinct cycles among `per_tree`.
    pub distinct: usize,
}

impl JoinedCycles {
    /// Rotation-distinct cycles in first-seen order.
    pub fn distinct_cycles(&self) -> Vec<HamCycle> {
        let mut seen = HashSet::new();
        self.per_tree
            .iter()
            .filter(|j| seen.insert(j.cycle.clone()))
            .map(|j| j.cycle.clone())
            .collect()
    }
}

/// One Hamiltonian cycle per spanning tree of the join graph. A
/// disconnected graph yields no trees; check [`JoinGraph::is_connected`].
pub fn enumerate_joined_cycles(dec: &PsiDecomposition) -> Result<JoinedCycles> {
    let graph = complement_pairs(dec);
    let trees = spanning_trees(&graph)?;
    let per_tree = trees
        .par_iter()
        .map(|t| {
            let tree: Vec<JoinEdge> = t.iter().map(|&e| graph.edges[e]).collect();
            join_tree(dec, &tree).map(|cycle| JoinedCycle { tree, cycle })
        })
        .collect::<Result<Vec<_>>>()?;
    let distinct = per_tree
        .iter()
        .map(|j| &j.cycle)
        .collect::<HashSet<_>>()
        .len();
    Ok(JoinedCycles {
        graph,
        per_tree,
        distinct,
    })
}

/// Joins everything into one cycle, always merging the growing cycle with
/// its lowest vertex whose complement lies outside it.
pub fn join_all(dec: &PsiDecomposition) -> Result<HamCycle> {
    let max = all_ones(dec.n);
    let mut current = dec.cycles[0].clone();
    let mut rest: Vec<Vec<Vertex>> = dec.cycles[1..].to_vec();
    while !rest.is_empty() {
        let inside: HashSet<Vertex> = current.iter().copied().collect();
        let mut candidates: Vec<Vertex> = current
            .iter()
            .copied()
            .filter(|&r| r != max && !inside.contains(&(max - r)))
            .collect();
        candidates.sort_unstable();
        let r = *candidates.first().ok_or_else(|| {
            Error::Internal("no complementary pair leaves the merged cycle".into())
        })?;
        let s = max - r;
        let idx = rest
            .iter()
            .position(|c| c.contains(&s))
            .ok_or_else(|| Error::Internal(format!("vertex {s} is not in any cycle")))?;
        let other = rest.remove(idx);
        current = join_pair(dec.n, &current, &other, r, s)?;
    }
    let first = dec.cycles[0][0];
    HamCycle::new(dec.n, current)
        .map_err(|e| Error::Internal(format!("join_all produced an invalid cycle: {e}")))?
        .rotated_to(first)
        .ok_or_else(|| Error::Internal(format!("joined cycle lost vertex {first}")))
}

/// Up to `want` rotation-distinct cycles: the greedy cycles first, then
/// joined cycles from decompositions seeded `"{seed}-0"`, `"{seed}-1"`, ...
///
/// Decompositions with at most [`MAX_TREE_EDGES`] pairs contribute every
/// spanning-tree join, larger ones just their [`join_all`] cycle. Stops
/// early after `max_rounds` decompositions.
pub fn sample_cycles(n: u32, want: usize, seed: &str, max_rounds: usize) -> Result<Vec<HamCycle>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut push = |c: HamCycle, out: &mut Vec<HamCycle>| {
        if out.len() < want && seen.insert(c.clone()) {
            out.push(c);
        }
    };
    for pref in [Preference::Complement, Preference::Double] {
        for c in distinct_greedy_cycles(n, pref)? {
            push(c, &mut out);
        }
    }
    for round in 0..max_rounds {
        if out.len() >= want {
            break;
        }
        let dec = psi_decompose(n, &VisitOrder::Seeded(format!("{seed}-{round}")))?;
        if complement_pairs(&dec).edges.len() <= MAX_TREE_EDGES {
            for j in enumerate_joined_cycles(&dec)?.per_tree {
                push(j.cycle, &mut out);
            }
        } else {
            push(join_all(&dec)?, &mut out);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> PsiDecomposition {
        psi_decompose(4, &VisitOrder::from_prefix(4, &[6, 4, 14]).unwrap()).unwrap()
    }

    fn pairs(g: &JoinGraph) -> Vec<(Vertex, Vertex)> {
        g.edges.iter().map(|e| (e.r, e.s)).collect()
    }

    #[test]
    fn worked_join_graph() {
        let g = complement_pairs(&example());
        assert_eq!(pairs(&g), vec![(13, 2), (11, 4), (3, 12), (7, 8), (1, 14)]);
        assert_eq!(
            g.matrix().0,
            vec![vec![3, -2, -1], vec![-2, 4, -2], vec![-1, -2, 3]]
        );
        assert_eq!(best_count(&g), BigInt::from(8));
        assert_eq!(spanning_trees(&g).unwrap().len(), 8);
    }

    #[test]
    fn small_counts() {
        let single = JoinGraph {
            node_count: 1,
            edges: vec![],
        };
        assert_eq!(best_count(&single), BigInt::from(1));
        for k in 1..5 {
            let g = JoinGraph {
                node_count: 2,
                edges: (0..k)
                    .map(|t| JoinEdge {
                        i: 0,
                        k: 1,
                        r: t,
                        s: 100 - t,
                    })
                    .collect(),
            };
            assert_eq!(best_count(&g), BigInt::from(k));
        }
        let split = JoinGraph {
            node_count: 3,
            edges: vec![JoinEdge {
                i: 0,
                k: 1,
                r: 1,
                s: 2,
            }],
        };
        assert_eq!(best_count(&split), BigInt::from(0));
        assert!(!split.is_connected());
    }

    #[test]
    fn two_step_join() {
        let c1 = [6, 3, 9, 13, 5, 10, 11];
        let c2 = [4, 7, 1, 2];
        let c3 = [14, 12, 8, 15];
        let c23 = join_pair(4, &c2, &c3, 7, 8).unwrap();
        let all = join_pair(4, &c1, &c23, 13, 2).unwrap();
        assert_eq!(all, vec![6, 3, 9, 2, 4, 8, 15, 14, 12, 7, 1, 13, 5, 10, 11]);
        assert!(join_pair(4, &c1, &c2, 13, 3).is_err());
        assert!(join_pair(4, &c1, &c2, 7, 8).is_err());
    }

    #[test]
    fn enumerate_worked_example() {
        let joined = enumerate_joined_cycles(&example()).unwrap();
        assert_eq!(joined.per_tree.len(), 8);
        assert_eq!(joined.distinct, 8);
        assert_eq!(joined.distinct_cycles().len(), 8);
        assert!(joined.per_tree.iter().all(|j| j.cycle.vertices()[0] == 6));
    }

    #[test]
    fn single_cycle_decomposition() {
        let dec = psi_decompose(4, &VisitOrder::Natural).unwrap();
        assert!(complement_pairs(&dec).edges.is_empty());
        let joined = enumerate_joined_cycles(&dec).unwrap();
        assert_eq!(joined.per_tree.len(), 1);
        assert_eq!(
            joined.per_tree[0].cycle.vertices(),
            dec.cycles[0].as_slice()
        );
        assert_eq!(join_all(&dec).unwrap().vertices(), dec.cycles[0].as_slice());
    }

    #[test]
    fn sampling_is_deterministic_and_distinct() {
        let a = sample_cycles(5, 40, "t", 1000).unwrap();
        assert_eq!(a.len(), 40);
        assert_eq!(a, sample_cycles(5, 40, "t", 1000).unwrap());
        assert_eq!(a.iter().collect::<HashSet<_>>().len(), 40);
    }

    #[test]
    fn join_all_random() {
        for n in 4..=6 {
            for seed in 0..20 {
                let dec = psi_decompose(n, &VisitOrder::Seeded(format!("s{seed}"))).unwrap();
                assert!(join_all(&dec).is_ok());
            }
        }
    }
}
