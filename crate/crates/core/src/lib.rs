//! Modified de Bruijn sequences from Hamiltonian cycles of a doubling
//! digraph over GF(2), with exact minimal polynomials.
//!
//! - [`gf2poly`]: bit-packed polynomial arithmetic over GF(2).
//! - [`seqkit`]: periodic binary sequences, Berlekamp-Massey, de Bruijn checks.
//! - [`gamma`]: the digraph, its Hamiltonian cycles and generator walks.
//! - [`greedy`]: greedy cycle constructions and the prefer-complement permutation.
//! - [`joiner`]: joining the permutation's cycles into Hamiltonian cycles.
//! - [`canonical`]: canonical generators and minimal polynomials of cycles.

pub mod canonical;
pub mod error;
pub mod gamma;
pub mod gf2poly;
pub mod greedy;
pub mod joiner;
pub mod seqkit;

pub use canonical::MinPolyReport;
pub use error::{Error, Result};
pub use gamma::{GammaGraph, HamCycle, Vertex};
pub use gf2poly::{Gf2Poly, PolyFormat};
pub use greedy::{GreedyPath, Preference, PsiDecomposition, VisitOrder};
pub use joiner::{JoinEdge, JoinGraph, JoinMatrix};
pub use seqkit::BitSequence;
