//! The full pipeline: validate a graph, decompose its spectrum, build the
//! polynomial machinery and run every characterization, collecting verdicts
//! and warnings into one [`Analysis`] value.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::characterize::{
    self, Averages, CharacterizeError, ConjectureProbe, MatrixBundle, Status, VerdictSet,
};
use crate::graph::Graph;
use crate::poly::{self, HoffmanPoly, PolyError, PolySequence, PreidempotentTable};
use crate::spectral::{self, IdempotentResiduals, SpectralError, Spectrum};
use crate::tol::Tolerances;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AnalysisError {
    #[error("graph is empty")]
    EmptyGraph,
    #[error("graph is disconnected ({components} components); the theory assumes a connected graph")]
    Disconnected { components: usize },
    #[error("graph is not regular (degrees range {min}..={max}); the theory assumes a regular graph")]
    NotRegular { min: usize, max: usize },
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Characterize(#[from] CharacterizeError),
}

#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    pub tols: Tolerances,
    /// Also run the exploratory conjecture probes.
    pub conjecture_probe: bool,
}

/// Everything the analysis measured, ready for reporting.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub n: usize,
    pub degree: usize,
    pub diameter: usize,
    pub d: usize,
    pub spectrum: Spectrum,
    /// Full when D = d; possibly truncated below d otherwise (high-degree
    /// norms can underflow when the diameter sits far below d).
    pub poly: PolySequence,
    /// Present whenever the full sequence could be built.
    pub hoffman: Option<HoffmanPoly>,
    pub preidempotent: Option<PreidempotentTable>,
    pub averages: Averages,
    pub idempotent_residuals: IdempotentResiduals,
    pub poly_eval_residual: f64,
    pub punctual: Vec<VerdictSet>,
    pub punctual_eigenspace: Vec<VerdictSet>,
    pub partial: Vec<VerdictSet>,
    /// m-partial eigenspace distance-regularity, as the conjunction of the
    /// per-j punctual eigenspace verdicts for j ≤ m.
    pub partial_eigenspace: Vec<Status>,
    pub harmonic: Vec<VerdictSet>,
    pub distance_regular: VerdictSet,
    pub probes: Option<Vec<ConjectureProbe>>,
    pub warnings: Vec<String>,
    pub tols: Tolerances,
    pub bundle: MatrixBundle,
}

impl Analysis {
    pub fn is_distance_regular(&self) -> bool {
        self.distance_regular.status == Status::Holds
    }
}

/// Run the whole pipeline on a connected regular graph.
pub fn analyze(g: &Graph, opts: &AnalyzeOptions) -> Result<Analysis, AnalysisError> {
    if g.n() == 0 {
        return Err(AnalysisError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(AnalysisError::Disconnected { components: g.components() });
    }
    let degree = g.degree().ok_or_else(|| {
        let degs = (0..g.n()).map(|u| g.degree_of(u));
        AnalysisError::NotRegular {
            min: degs.clone().min().unwrap_or(0),
            max: degs.max().unwrap_or(0),
        }
    })?;

    let mut warnings = Vec::new();
    let spectrum = spectral::eigendecompose(g, opts.tols.grouping)?;
    warnings.extend(spectrum.warnings().iter().cloned());
    let d = spectrum.d();
    let big_d = g.diameter();

    // The full polynomial sequence exists in exact arithmetic; when D sits far
    // below d its high-degree norms can underflow, in which case the analysis
    // keeps the prefix through degree D that the remaining quantities need.
    let poly = match poly::predistance(&spectrum) {
        Ok(ps) => ps,
        Err(PolyError::DegenerateNormalization { degree }) if degree > big_d => {
            warnings.push(format!(
                "predistance sequence truncated at degree {}: constructing p_{degree} is \
                 numerically degenerate (diameter {big_d} sits far below d = {d})",
                degree - 1
            ));
            poly::predistance_prefix(&spectrum, big_d)?
        }
        Err(e) => return Err(e.into()),
    };

    let hoffman = poly.is_full().then(|| poly::hoffman(&poly));
    let preidempotent = poly.is_full().then(|| poly::preidempotent_table(&spectrum, &poly));

    let idem = spectral::idempotents(g, &spectrum, opts.tols.matrix)?;
    let bundle = MatrixBundle::build(g, idem, &poly);
    if bundle.poly_eval_residual() > opts.tols.matrix {
        warnings.push(format!(
            "p_i(A) by Horner and by the spectral route disagree by {:.3e}, above tolerance {:.3e}",
            bundle.poly_eval_residual(),
            opts.tols.matrix
        ));
    }
    let averages = characterize::averages(&bundle, &poly, &opts.tols)?;

    let punctual = (0..=big_d)
        .map(|i| characterize::punctual_dr(&bundle, &poly, &averages, &spectrum, i, &opts.tols))
        .collect::<Result<Vec<_>, _>>()?;
    let punctual_eigenspace = (0..=d)
        .map(|j| characterize::punctual_eigenspace_dr(&bundle, &averages, &spectrum, j, &opts.tols))
        .collect::<Result<Vec<_>, _>>()?;
    let partial = (0..=d.min(big_d))
        .map(|m| characterize::partial_dr(&bundle, &spectrum, m, &opts.tols))
        .collect::<Result<Vec<_>, _>>()?;
    let harmonic = (0..=d.min(big_d))
        .map(|m| characterize::harmonic_mean_test(g, &poly, &spectrum, m, &opts.tols))
        .collect::<Result<Vec<_>, _>>()?;

    let partial_eigenspace: Vec<Status> = (0..=d)
        .map(|m| {
            let statuses = punctual_eigenspace[..=m].iter().map(|set| set.status);
            if statuses.clone().any(|s| s == Status::Unsupported) {
                Status::Unsupported
            } else if statuses.clone().any(|s| s == Status::Indeterminate) {
                Status::Indeterminate
            } else if statuses.clone().all(|s| s == Status::Holds) {
                Status::Holds
            } else {
                Status::Fails
            }
        })
        .collect();

    let distance_regular =
        characterize::distance_regular(g, &poly, &averages, &spectrum, &opts.tols);

    // the harmonic characterization must match the partial-DR verdict per m
    for (m, (h, p)) in harmonic.iter().zip(&partial).enumerate() {
        let comparable = h.status != Status::Unsupported && p.status != Status::Unsupported;
        if comparable && h.status != p.status {
            warnings.push(format!(
                "harmonic-mean and partial tests disagree at m = {m}: {:?} vs {:?}",
                h.status, p.status
            ));
        }
    }

    let probes = if opts.conjecture_probe && big_d == d {
        let table = preidempotent.as_ref().expect("full sequence when D = d");
        Some(
            (0..=d)
                .map(|j| characterize::conjecture_probe(&bundle, table, &averages, &spectrum, j))
                .collect::<Result<Vec<_>, _>>()?,
        )
    } else {
        None
    };

    Ok(Analysis {
        n: g.n(),
        degree,
        diameter: big_d,
        d,
        spectrum,
        poly,
        hoffman,
        preidempotent,
        averages,
        idempotent_residuals: bundle.idempotents().residuals,
        poly_eval_residual: bundle.poly_eval_residual(),
        punctual,
        punctual_eigenspace,
        partial,
        partial_eigenspace,
        harmonic,
        distance_regular,
        probes,
        warnings,
        tols: opts.tols,
        bundle,
    })
}
