mod common;

use adrg_core::corpus::{generate, FamilySpec};
use adrg_core::mat::Mat;
use adrg_core::poly::{inner_delta, predistance};
use adrg_core::spectral::{eigendecompose, idempotents, mat_inner};
use common::assert_close;

#[test]
fn petersen_spectrum_is_3_1_minus2() {
    let g = generate(&FamilySpec::Petersen).unwrap();
    let s = eigendecompose(&g, None).unwrap();
    assert_eq!(s.d(), 2);
    assert_eq!(s.mults(), &[1, 5, 4]);
    assert_close(s.lambda(0), 3.0, 1e-12, "lambda_0");
    assert_close(s.lambda(1), 1.0, 1e-12, "lambda_1");
    assert_close(s.lambda(2), -2.0, 1e-12, "lambda_2");
}

#[test]
fn c5_spectrum_matches_circulant_oracle() {
    let g = generate(&FamilySpec::Cycle { n: 5 }).unwrap();
    let s = eigendecompose(&g, None).unwrap();
    let th = 2.0 * std::f64::consts::PI / 5.0;
    assert_eq!(s.mults(), &[1, 2, 2]);
    assert_close(s.lambda(0), 2.0, 1e-12, "lambda_0");
    assert_close(s.lambda(1), 2.0 * th.cos(), 1e-12, "lambda_1");
    assert_close(s.lambda(2), 2.0 * (2.0 * th).cos(), 1e-12, "lambda_2");
}

#[test]
fn hypercube_spectrum_matches_binomial_oracle() {
    for dim in 1..=5usize {
        let g = generate(&FamilySpec::Hypercube { dim }).unwrap();
        let s = eigendecompose(&g, None).unwrap();
        assert_eq!(s.d(), dim, "Q_{dim} has d = {dim}");
        for i in 0..=dim {
            assert_close(
                s.lambda(i),
                (dim as f64) - 2.0 * i as f64,
                1e-10,
                &format!("Q_{dim} lambda_{i}"),
            );
            let binom = (0..i).fold(1usize, |acc, t| acc * (dim - t) / (t + 1));
            assert_eq!(s.mults()[i], binom, "Q_{dim} mult_{i}");
        }
    }
}

#[test]
fn complete_bipartite_spectrum() {
    // {m, 0^{2m-2}, -m}: a D = d distance-regular case with a zero eigenvalue
    for half in 2..=5usize {
        let g = generate(&FamilySpec::CompleteBipartite { half }).unwrap();
        let s = eigendecompose(&g, None).unwrap();
        assert_eq!(s.d(), 2);
        assert_eq!(s.mults(), &[1, 2 * half - 2, 1]);
        assert_close(s.lambda(0), half as f64, 1e-12, "lambda_0");
        assert_close(s.lambda(1), 0.0, 1e-12, "lambda_1");
        assert_close(s.lambda(2), -(half as f64), 1e-12, "lambda_2");
    }
}

#[test]
fn idempotents_match_lagrange_oracle() {
    for (name, g) in [
        ("petersen", generate(&FamilySpec::Petersen).unwrap()),
        ("q3", generate(&FamilySpec::Hypercube { dim: 3 }).unwrap()),
        ("k33", generate(&FamilySpec::CompleteBipartite { half: 3 }).unwrap()),
        ("prism", common::prism()),
    ] {
        let s = eigendecompose(&g, None).unwrap();
        let idem = idempotents(&g, &s, 1e-6).unwrap();
        let a = g.adjacency_matrix();
        for j in 0..=s.d() {
            let oracle = common::lagrange_idempotent(&a, s.lambdas(), j);
            let diff = idem.get(j).max_abs_diff(&oracle);
            assert!(diff < 1e-9, "{name}: E_{j} differs from Lagrange oracle by {diff:.3e}");
        }
    }
}

#[test]
fn idempotent_invariants_on_named_corpus() {
    for (name, g) in common::named_corpus() {
        let s = eigendecompose(&g, None).unwrap();
        let idem = idempotents(&g, &s, 1e-6).unwrap();
        assert!(
            idem.residuals.max() < 1e-10,
            "{name}: idempotent residual {:.3e}",
            idem.residuals.max()
        );
        // ‖E_j‖² = m_j / n
        for j in 0..=s.d() {
            assert_close(
                mat_inner(idem.get(j), idem.get(j)),
                s.mults()[j] as f64 / g.n() as f64,
                1e-10,
                &format!("{name}: average multiplicity of E_{j}"),
            );
        }
        // reconstruction Σ_j λ_j E_j = A
        let mut recon = Mat::zeros(g.n());
        for j in 0..=s.d() {
            recon.add_scaled(s.lambda(j), idem.get(j));
        }
        let diff = recon.max_abs_diff(&g.adjacency_matrix());
        assert!(diff < 1e-10, "{name}: reconstruction differs by {diff:.3e}");
    }
}

#[test]
fn perron_projector_and_petersen_diagonal() {
    let g = generate(&FamilySpec::Petersen).unwrap();
    let s = eigendecompose(&g, None).unwrap();
    let idem = idempotents(&g, &s, 1e-6).unwrap();
    // E_0 = (1/n) J for connected regular graphs
    let e0 = Mat::ones(10).scale(0.1);
    assert!(idem.get(0).max_abs_diff(&e0) < 1e-10);
    // (E_1)_uu = m_1 / n = 1/2 by vertex transitivity
    for u in 0..10 {
        assert_close(idem.get(1)[(u, u)], 0.5, 1e-10, "Petersen (E_1)_uu");
    }
}

#[test]
fn distance_degree_norms() {
    // ‖A_i‖² = average degree of the distance-i graph
    let g = generate(&FamilySpec::Petersen).unwrap();
    let dm = g.distance_matrices();
    assert_close(mat_inner(dm.get(0), dm.get(0)), 1.0, 1e-12, "delta_bar_0");
    assert_close(mat_inner(dm.get(1), dm.get(1)), 3.0, 1e-12, "delta_bar_1");
    assert_close(mat_inner(dm.get(2), dm.get(2)), 6.0, 1e-12, "Petersen <A_2, A_2> = 6");
}

#[test]
fn matrix_product_agrees_with_spectral_product() {
    // ⟨f(A), g(A)⟩ = ⟨f, g⟩ under the multiplicity-weighted product
    for (name, g) in [
        ("petersen", generate(&FamilySpec::Petersen).unwrap()),
        ("c6", generate(&FamilySpec::Cycle { n: 6 }).unwrap()),
        ("q4", generate(&FamilySpec::Hypercube { dim: 4 }).unwrap()),
    ] {
        let s = eigendecompose(&g, None).unwrap();
        let ps = predistance(&s).unwrap();
        let a = g.adjacency_matrix();
        for i in 0..=s.d() {
            for j in 0..=s.d() {
                let lhs = mat_inner(&ps.eval_mat(i, &a), &ps.eval_mat(j, &a));
                let rhs = inner_delta(ps.values_row(i), ps.values_row(j), &s);
                assert_close(lhs, rhs, 1e-9, &format!("{name}: <p_{i}(A), p_{j}(A)>"));
            }
        }
    }
}

#[test]
fn ambiguous_gap_warning() {
    let g = generate(&FamilySpec::Petersen).unwrap();
    // tolerance 1.1 still separates all three groups, but the gap of 2
    // between the eigenvalues 3 and 1 lands inside (tol, 2·tol]
    let s = eigendecompose(&g, Some(1.1)).unwrap();
    assert!(!s.warnings().is_empty(), "expected an ambiguity warning");
}
