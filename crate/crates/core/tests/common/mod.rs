//! Shared oracles for the integration tests. Everything here recomputes its
//! answer through an independent route: different algorithms, no calls into
//! the code paths under test.

#![allow(dead_code)]

use adrg_core::corpus::{self, FamilySpec, SplitMix64};
use adrg_core::graph::Graph;
use adrg_core::mat::Mat;

pub fn assert_close(got: f64, want: f64, tol: f64, ctx: &str) {
    assert!(
        (got - want).abs() <= tol,
        "{ctx}: got {got}, want {want} (|diff| = {:.3e} > {tol:.3e})",
        (got - want).abs()
    );
}

/// Independent graph6 codec: builds the whole bit string eagerly.
pub mod graph6_oracle {
    pub fn encode(n: usize, has_edge: impl Fn(usize, usize) -> bool) -> Vec<u8> {
        assert!(n <= 62, "oracle handles the short form only");
        let mut bits = Vec::new();
        for v in 1..n {
            for u in 0..v {
                bits.push(has_edge(u, v));
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        let mut out = vec![n as u8 + 63];
        for chunk in bits.chunks(6) {
            let mut val = 0u8;
            for &b in chunk {
                val = (val << 1) | u8::from(b);
            }
            out.push(val + 63);
        }
        out
    }

    pub fn decode(record: &[u8]) -> (usize, Vec<(usize, usize)>) {
        let n = (record[0] - 63) as usize;
        let mut bits = Vec::new();
        for &b in &record[1..] {
            let v = b - 63;
            for k in (0..6).rev() {
                bits.push(v >> k & 1 == 1);
            }
        }
        let mut edges = Vec::new();
        let mut idx = 0;
        for v in 1..n {
            for u in 0..v {
                if bits[idx] {
                    edges.push((u, v));
                }
                idx += 1;
            }
        }
        (n, edges)
    }
}

/// All-pairs distances by Floyd–Warshall (the implementation uses BFS).
pub fn floyd_warshall(n: usize, edges: &[(u32, u32)]) -> Vec<Vec<Option<usize>>> {
    const INF: usize = usize::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in edges {
        d[u as usize][v as usize] = 1;
        d[v as usize][u as usize] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d.into_iter()
        .map(|row| row.into_iter().map(|x| (x < INF).then_some(x)).collect())
        .collect()
}

/// Idempotent by Lagrange interpolation of the adjacency matrix:
/// E_j = Π_{k≠j} (A − λ_k I) / (λ_j − λ_k).
pub fn lagrange_idempotent(a: &Mat, lambdas: &[f64], j: usize) -> Mat {
    let n = a.n();
    let mut e = Mat::identity(n);
    for (k, &lk) in lambdas.iter().enumerate() {
        if k == j {
            continue;
        }
        let mut shifted = a.clone();
        for i in 0..n {
            shifted[(i, i)] -= lk;
        }
        e = e.mul(&shifted).scale(1.0 / (lambdas[j] - lk));
    }
    e
}

/// Predistance polynomials by full Gram–Schmidt over the monomial value
/// vectors {1, x, …, x^d}, independent of the three-term recurrence route.
/// Returns the value tables and the norms n_i.
pub fn gram_schmidt_predistance(lambdas: &[f64], mults: &[usize]) -> (Vec<Vec<f64>>, Vec<f64>) {
    let d = lambdas.len() - 1;
    let n: usize = mults.iter().sum();
    let ip = |f: &[f64], g: &[f64]| -> f64 {
        f.iter()
            .zip(g)
            .zip(mults)
            .map(|((&a, &b), &m)| m as f64 * a * b)
            .sum::<f64>()
            / n as f64
    };
    let mut basis: Vec<Vec<f64>> = Vec::new();
    let mut norms: Vec<f64> = Vec::new();
    for i in 0..=d {
        // monomial x^i as a value vector
        let mut u: Vec<f64> = lambdas.iter().map(|&x| powi(x, i)).collect();
        for _pass in 0..2 {
            for p in &basis {
                let c = ip(&u, p) / ip(p, p);
                for (ul, &pl) in u.iter_mut().zip(p) {
                    *ul -= c * pl;
                }
            }
        }
        // scale so that <p, p> = p(λ0)
        let c = u[0] / ip(&u, &u);
        let p: Vec<f64> = u.iter().map(|&x| c * x).collect();
        norms.push(p[0]);
        basis.push(p);
    }
    (basis, norms)
}

fn powi(x: f64, k: usize) -> f64 {
    let mut acc = 1.0;
    for _ in 0..k {
        acc *= x;
    }
    acc
}

/// Distance-regularity by the definition: intersection numbers (c_k, a_k, b_k)
/// constant over ordered pairs at every distance. Purely combinatorial.
pub fn is_dr_combinatorial(g: &Graph) -> bool {
    let n = g.n();
    let mut seen = vec![None; g.diameter() + 1];
    for u in 0..n {
        for v in 0..n {
            let k = g.dist(u, v).unwrap();
            let (mut c, mut a, mut b) = (0usize, 0usize, 0usize);
            for &w in g.neighbors(v) {
                let dw = g.dist(u, w as usize).unwrap();
                if dw + 1 == k {
                    c += 1;
                } else if dw == k {
                    a += 1;
                } else {
                    b += 1;
                }
            }
            match seen[k] {
                None => seen[k] = Some((c, a, b)),
                Some(t) => {
                    if t != (c, a, b) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The curated corpus of known distance-regular families.
pub fn named_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 3..=12 {
        out.push((format!("cycle_{n}"), corpus::generate(&FamilySpec::Cycle { n }).unwrap()));
    }
    for n in 2..=8 {
        out.push((format!("complete_{n}"), corpus::generate(&FamilySpec::Complete { n }).unwrap()));
    }
    for half in 1..=5 {
        out.push((
            format!("complete_bipartite_{half}_{half}"),
            corpus::generate(&FamilySpec::CompleteBipartite { half }).unwrap(),
        ));
    }
    for dim in 1..=5 {
        out.push((
            format!("hypercube_{dim}"),
            corpus::generate(&FamilySpec::Hypercube { dim }).unwrap(),
        ));
    }
    out.push(("petersen".to_string(), corpus::generate(&FamilySpec::Petersen).unwrap()));
    out
}

/// Deterministic seeded random-regular corpus: n ≤ 60, degree ∈ {3,4,5}.
pub fn random_specs(count: usize) -> Vec<FamilySpec> {
    let mut rng = SplitMix64::new(0xADF0_2012);
    (0..count)
        .map(|idx| {
            let degree = 3 + rng.below(3) as usize;
            let mut n = 6 + rng.below(54) as usize;
            if n * degree % 2 != 0 {
                n += 1;
            }
            FamilySpec::RandomRegular { n, degree, seed: 1000 + idx as u64 }
        })
        .collect()
}

/// The line graph of the 3-cube: 4-regular on 12 vertices with D = d = 3 and
/// not distance-regular. A hand-built negative control.
pub fn cuboctahedron() -> Graph {
    let mut cube_edges = Vec::new();
    for u in 0..8usize {
        for b in 0..3 {
            let v = u ^ (1 << b);
            if u < v {
                cube_edges.push((u, v));
            }
        }
    }
    let mut edges = Vec::new();
    for (i, &(a, b)) in cube_edges.iter().enumerate() {
        for (j, &(c, d)) in cube_edges.iter().enumerate().skip(i + 1) {
            let shared = usize::from(a == c) + usize::from(a == d) + usize::from(b == c)
                + usize::from(b == d);
            if shared == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(12, edges).unwrap()
}

/// The triangular prism C3 × K2: 3-regular with D = 2 but d = 3, exercising
/// the D < d paths.
pub fn prism() -> Graph {
    Graph::from_edge_list(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
        .unwrap()
}
