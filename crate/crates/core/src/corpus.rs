//! Deterministic graph generators: the named distance-regular families used
//! as a test bed, plus seeded random regular graphs from the pairing model.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CorpusError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams { family: &'static str, reason: &'static str },
    #[error("random regular generation failed after {attempts} attempts (n={n}, degree={degree}, seed={seed})")]
    RetriesExhausted { n: usize, degree: usize, seed: u64, attempts: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A named graph family with its parameters. Generation is deterministic
/// given the spec, including the seeded random family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Cycle C_n, n ≥ 3.
    Cycle { n: usize },
    /// Complete graph K_n, n ≥ 2.
    Complete { n: usize },
    /// Complete bipartite K_{m,m} with equal parts, m ≥ 1.
    CompleteBipartite { half: usize },
    /// Hypercube Q_k, k ≥ 1.
    Hypercube { dim: usize },
    /// The Petersen graph (Kneser graph on the 2-subsets of a 5-set).
    Petersen,
    /// Pairing-model random regular graph; n·degree even, degree ≥ 3, n ≤ 200.
    RandomRegular { n: usize, degree: usize, seed: u64 },
}

/// splitmix64: the documented, platform-independent PRNG behind the seeded
/// corpus. Bounded sampling uses rejection, so every platform draws the same
/// sequence.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound` by rejection.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }

    /// Fisher–Yates shuffle.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            xs.swap(i, j);
        }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, CorpusError> {
    match *spec {
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return Err(CorpusError::InvalidParams { family: "cycle", reason: "needs n >= 3" });
            }
            Ok(Graph::build(n, (0..n).map(|u| (u, (u + 1) % n)))?)
        }
        FamilySpec::Complete { n } => {
            if n < 2 {
                return Err(CorpusError::InvalidParams {
                    family: "complete",
                    reason: "needs n >= 2",
                });
            }
            Ok(Graph::build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))?)
        }
        FamilySpec::CompleteBipartite { half } => {
            if half < 1 {
                return Err(CorpusError::InvalidParams {
                    family: "complete_bipartite",
                    reason: "needs equal parts m >= 1",
                });
            }
            let edges = (0..half).flat_map(|u| (half..2 * half).map(move |v| (u, v)));
            Ok(Graph::build(2 * half, edges)?)
        }
        FamilySpec::Hypercube { dim } => {
            if dim < 1 {
                return Err(CorpusError::InvalidParams {
                    family: "hypercube",
                    reason: "needs dimension k >= 1",
                });
            }
            if dim > 17 {
                return Err(CorpusError::InvalidParams {
                    family: "hypercube",
                    reason: "dimension above 17 exceeds the supported graph order",
                });
            }
            let n = 1usize << dim;
            let edges = (0..n).flat_map(move |u| (0..dim).map(move |b| (u, u ^ (1 << b))));
            Ok(Graph::build(n, edges)?)
        }
        FamilySpec::Petersen => {
            // vertices are the 2-subsets of {0..4}; adjacency is disjointness
            let mut subsets = Vec::new();
            for a in 0..5u8 {
                for b in (a + 1)..5 {
                    subsets.push((a, b));
                }
            }
            let mut edges = Vec::new();
            for (i, &(a, b)) in subsets.iter().enumerate() {
                for (j, &(c, e)) in subsets.iter().enumerate().skip(i + 1) {
                    if a != c && a != e && b != c && b != e {
                        edges.push((i, j));
                    }
                }
            }
            Ok(Graph::build(10, edges)?)
        }
        FamilySpec::RandomRegular { n, degree, seed } => random_regular(n, degree, seed),
    }
}

const RANDOM_REGULAR_MAX_ATTEMPTS: usize = 10_000;

/// Pairing model: n·degree endpoints are shuffled and paired off; attempts
/// producing loops, parallel edges or a disconnected graph are rejected, and
/// the next attempt reseeds with an incremented sub-seed.
fn random_regular(n: usize, degree: usize, seed: u64) -> Result<Graph, CorpusError> {
    if degree < 3 {
        return Err(CorpusError::InvalidParams {
            family: "random_regular",
            reason: "needs degree >= 3",
        });
    }
    if n > 200 {
        return Err(CorpusError::InvalidParams { family: "random_regular", reason: "needs n <= 200" });
    }
    if degree >= n {
        return Err(CorpusError::InvalidParams {
            family: "random_regular",
            reason: "needs degree < n",
        });
    }
    if n * degree % 2 != 0 {
        return Err(CorpusError::InvalidParams {
            family: "random_regular",
            reason: "needs n * degree even",
        });
    }

    let mut points: Vec<u32> = Vec::with_capacity(n * degree);
    'attempt: for attempt in 0..RANDOM_REGULAR_MAX_ATTEMPTS {
        let mut rng = SplitMix64::new(seed.wrapping_add(attempt as u64));
        points.clear();
        for v in 0..n as u32 {
            points.extend(core::iter::repeat(v).take(degree));
        }
        rng.shuffle(&mut points);

        let mut seen = vec![false; n * n];
        let mut edges = Vec::with_capacity(n * degree / 2);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0] as usize, pair[1] as usize);
            if u == v || seen[u * n + v] {
                continue 'attempt;
            }
            seen[u * n + v] = true;
            seen[v * n + u] = true;
            edges.push((u, v));
        }
        let g = Graph::build(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(CorpusError::RetriesExhausted {
        n,
        degree,
        seed,
        attempts: RANDOM_REGULAR_MAX_ATTEMPTS,
    })
}
