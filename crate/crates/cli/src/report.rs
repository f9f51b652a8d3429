//! JSON report: a frozen, versioned serialization of an [`Analysis`].
//!
//! Floating-point values are serialized with 17 significant digits so reports
//! are byte-reproducible and diffable across runs.

use adrg_core::characterize::{ConjectureProbe, Status, Verdict, VerdictKind, VerdictSet};
use adrg_core::Analysis;
use serde::{Serialize, Serializer};

pub const SCHEMA_VERSION: u32 = 1;

/// f64 wrapper serializing as a JSON number with 17 significant digits.
#[derive(Debug, Clone, Copy)]
pub struct F(pub f64);

impl Serialize for F {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            let n: serde_json::Number = format!("{:.16e}", self.0)
                .parse()
                .map_err(serde::ser::Error::custom)?;
            n.serialize(s)
        } else {
            s.serialize_unit()
        }
    }
}

fn fvec(xs: &[f64]) -> Vec<F> {
    xs.iter().map(|&x| F(x)).collect()
}

fn fmat(xs: &[Vec<f64>]) -> Vec<Vec<F>> {
    xs.iter().map(|row| fvec(row)).collect()
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Holds => "holds",
        Status::Fails => "fails",
        Status::Indeterminate => "indeterminate",
        Status::Unsupported => "unsupported",
    }
}

#[derive(Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool: ToolInfo,
    pub graph: GraphInfo,
    pub tolerances: TolInfo,
    pub spectrum: SpectrumInfo,
    pub polynomials: PolyInfo,
    pub averages: AveragesInfo,
    pub residuals: ResidualInfo,
    pub tests: TestsInfo,
    pub conjecture_probe: Option<ProbeInfo>,
    pub warnings: Vec<String>,
}

#[derive(Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Serialize)]
pub struct GraphInfo {
    pub n: usize,
    pub degree: usize,
    pub diameter: usize,
    pub d: usize,
}

#[derive(Serialize)]
pub struct TolInfo {
    pub scalar: F,
    pub matrix: F,
    pub grouping: F,
}

#[derive(Serialize)]
pub struct SpectrumInfo {
    pub eigenvalues: Vec<F>,
    pub multiplicities: Vec<usize>,
}

#[derive(Serialize)]
pub struct PolyInfo {
    /// True when the sequence stops below degree d (numerically degenerate
    /// high-degree normalization; only happens when the diameter is below d).
    pub truncated: bool,
    /// values[i][l] = p_i(λ_l)
    pub values: Vec<Vec<F>>,
    /// Monomial coefficients of p_i, ascending degree.
    pub coefficients: Vec<Vec<F>>,
    pub alpha: Vec<F>,
    pub beta: Vec<F>,
    pub gamma: Vec<F>,
    pub norms: Vec<F>,
    pub leading: Vec<F>,
    pub hoffman: Option<HoffmanInfo>,
    /// preidempotent[j][i] = q_j(λ_i)
    pub preidempotent: Option<Vec<Vec<F>>>,
}

#[derive(Serialize)]
pub struct HoffmanInfo {
    pub values: Vec<F>,
    pub coefficients: Vec<F>,
}

#[derive(Serialize)]
pub struct AveragesInfo {
    pub degrees: Vec<F>,
    pub multiplicities: Vec<F>,
    /// crossed[i][j] = m̄_ij
    pub crossed: Vec<Vec<F>>,
    pub path_counts: Vec<F>,
    pub path_counts_via_poly: Vec<F>,
    pub paths_per_pair: Vec<F>,
}

#[derive(Serialize)]
pub struct ResidualInfo {
    pub idempotent: F,
    pub poly_eval: F,
}

#[derive(Serialize)]
pub struct TestsInfo {
    pub punctual: Vec<VerdictSetInfo>,
    pub punctual_eigenspace: Vec<VerdictSetInfo>,
    pub partial: Vec<VerdictSetInfo>,
    pub partial_eigenspace: Vec<&'static str>,
    pub harmonic: Vec<VerdictSetInfo>,
    pub distance_regular: VerdictSetInfo,
}

#[derive(Serialize)]
pub struct VerdictSetInfo {
    pub name: &'static str,
    pub index: Option<usize>,
    pub status: &'static str,
    pub reason: Option<String>,
    pub verdicts: Vec<VerdictInfo>,
    pub warnings: Vec<String>,
}

#[derive(Serialize)]
pub struct VerdictInfo {
    pub name: String,
    pub kind: &'static str,
    pub holds: bool,
    pub lhs: F,
    pub rhs: F,
    pub slack: F,
    pub tol: F,
}

#[derive(Serialize)]
pub struct ProbeInfo {
    pub label: &'static str,
    pub entries: Vec<ProbeEntry>,
}

#[derive(Serialize)]
pub struct ProbeEntry {
    pub j: usize,
    pub membership_residual: F,
    pub transform_span_residual: F,
    pub direct_residual: F,
}

fn verdict_info(v: &Verdict) -> VerdictInfo {
    VerdictInfo {
        name: v.name.clone(),
        kind: match v.kind {
            VerdictKind::Equality => "equality",
            VerdictKind::Inequality => "inequality",
        },
        holds: v.holds,
        lhs: F(v.lhs),
        rhs: F(v.rhs),
        slack: F(v.slack),
        tol: F(v.tol),
    }
}

fn set_info(set: &VerdictSet) -> VerdictSetInfo {
    VerdictSetInfo {
        name: set.name,
        index: set.index,
        status: status_str(set.status),
        reason: set.reason.clone(),
        verdicts: set.verdicts.iter().map(verdict_info).collect(),
        warnings: set.warnings.clone(),
    }
}

fn probe_entry(p: &ConjectureProbe) -> ProbeEntry {
    ProbeEntry {
        j: p.j,
        membership_residual: F(p.membership_residual),
        transform_span_residual: F(p.transform_span_residual),
        direct_residual: F(p.direct_residual),
    }
}

impl Report {
    pub fn from_analysis(a: &Analysis) -> Report {
        let d = a.d;
        let ps = &a.poly;
        Report {
            schema_version: SCHEMA_VERSION,
            tool: ToolInfo { name: "adrg", version: env!("CARGO_PKG_VERSION") },
            graph: GraphInfo { n: a.n, degree: a.degree, diameter: a.diameter, d },
            tolerances: TolInfo {
                scalar: F(a.tols.scalar),
                matrix: F(a.tols.matrix),
                grouping: F(a.spectrum.grouping_tol()),
            },
            spectrum: SpectrumInfo {
                eigenvalues: fvec(a.spectrum.lambdas()),
                multiplicities: a.spectrum.mults().to_vec(),
            },
            polynomials: PolyInfo {
                truncated: !ps.is_full(),
                values: (0..=ps.max_degree()).map(|i| fvec(ps.values_row(i))).collect(),
                coefficients: (0..=ps.max_degree()).map(|i| fvec(ps.coeffs(i))).collect(),
                alpha: fvec(ps.alphas()),
                beta: fvec(ps.betas()),
                gamma: fvec(ps.gammas()),
                norms: fvec(ps.norms()),
                leading: fvec(ps.leadings()),
                hoffman: a.hoffman.as_ref().map(|h| HoffmanInfo {
                    values: fvec(&h.values),
                    coefficients: fvec(&h.coeffs),
                }),
                preidempotent: a
                    .preidempotent
                    .as_ref()
                    .map(|q| (0..q.len()).map(|j| fvec(q.row(j))).collect()),
            },
            averages: AveragesInfo {
                degrees: fvec(&a.averages.degrees),
                multiplicities: fvec(&a.averages.mults),
                crossed: fmat(&a.averages.crossed),
                path_counts: fvec(&a.averages.path_counts),
                path_counts_via_poly: fvec(&a.averages.path_counts_via_poly),
                paths_per_pair: fvec(&a.averages.paths_per_pair),
            },
            residuals: ResidualInfo {
                idempotent: F(a.idempotent_residuals.max()),
                poly_eval: F(a.poly_eval_residual),
            },
            tests: TestsInfo {
                punctual: a.punctual.iter().map(set_info).collect(),
                punctual_eigenspace: a.punctual_eigenspace.iter().map(set_info).collect(),
                partial: a.partial.iter().map(set_info).collect(),
                partial_eigenspace: a.partial_eigenspace.iter().copied().map(status_str).collect(),
                harmonic: a.harmonic.iter().map(set_info).collect(),
                distance_regular: set_info(&a.distance_regular),
            },
            conjecture_probe: a.probes.as_ref().map(|ps| ProbeInfo {
                label: ConjectureProbe::LABEL,
                entries: ps.iter().map(probe_entry).collect(),
            }),
            warnings: a.warnings.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}

/// Compact human-readable rendering of the same analysis.
pub fn render_text(a: &Analysis) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "graph: n={} degree={} diameter={} distinct-eigenvalues={}",
        a.n,
        a.degree,
        a.diameter,
        a.d + 1
    );
    let spec: Vec<String> = a
        .spectrum
        .lambdas()
        .iter()
        .zip(a.spectrum.mults())
        .map(|(l, m)| format!("{l:.6}^{m}"))
        .collect();
    let _ = writeln!(out, "spectrum: {{{}}}", spec.join(", "));
    let _ = writeln!(
        out,
        "predistance norms n_i: {:?}",
        a.poly.norms().iter().map(|x| (x * 1e6).round() / 1e6).collect::<Vec<_>>()
    );
    let dr = &a.distance_regular;
    let _ = writeln!(out, "distance-regular: {}", status_str(dr.status));
    if let Some(reason) = &dr.reason {
        let _ = writeln!(out, "  reason: {reason}");
    }
    for v in &dr.verdicts {
        let _ = writeln!(
            out,
            "  {}: {} (lhs={:.9}, rhs={:.9}, slack={:.3e}, tol={:.3e})",
            v.name,
            if v.holds { "holds" } else { "fails" },
            v.lhs,
            v.rhs,
            v.slack,
            v.tol
        );
    }
    let summary = |sets: &[VerdictSet]| -> String {
        sets.iter()
            .map(|s| {
                format!(
                    "{}{}",
                    s.index.map(|i| i.to_string()).unwrap_or_default(),
                    match s.status {
                        Status::Holds => "+",
                        Status::Fails => "-",
                        Status::Indeterminate => "?",
                        Status::Unsupported => "!",
                    }
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    };
    let _ = writeln!(out, "punctual (i±): {}", summary(&a.punctual));
    let _ = writeln!(out, "eigenspace punctual (j±): {}", summary(&a.punctual_eigenspace));
    let _ = writeln!(out, "partial (m±): {}", summary(&a.partial));
    let _ = writeln!(out, "harmonic (m±): {}", summary(&a.harmonic));
    if let Some(probes) = &a.probes {
        let _ = writeln!(out, "conjecture probe ({}):", ConjectureProbe::LABEL);
        for p in probes {
            let _ = writeln!(
                out,
                "  j={}: membership={:.3e} transform-span={:.3e} direct={:.3e}",
                p.j, p.membership_residual, p.transform_span_residual, p.direct_residual
            );
        }
    }
    for w in &a.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out
}
