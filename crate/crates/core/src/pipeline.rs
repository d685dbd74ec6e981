//! Core construction, extension and certificate in one call.

use crate::epsilon::Epsilon;
use crate::error::{Error, Result};
use crate::extension::{extend_unchecked, plain_ear_orientation, Extension};
use crate::graph::Graph;
use crate::oracle::{bound_report, summarize_checks, BoundInputs, CheckSummary, OrientationCertificate};
use crate::orientation::{check_input, run_core_unchecked, ClaimCheck, CoreConfig, CoreState, INSTRUMENT_THRESHOLD};

#[derive(Debug, Clone, Copy)]
pub struct PipelineConfig {
    pub epsilon: Epsilon,
    pub start: Option<usize>,
    /// `None` turns the round checks on for graphs up to
    /// [`INSTRUMENT_THRESHOLD`] vertices.
    pub instrument: Option<bool>,
}

impl PipelineConfig {
    pub fn new(epsilon: Epsilon) -> Self {
        PipelineConfig { epsilon, start: None, instrument: None }
    }

    pub fn core_config(&self, n: usize) -> CoreConfig {
        CoreConfig { epsilon: self.epsilon, start: self.start, instrument: self.instrument.unwrap_or(n <= INSTRUMENT_THRESHOLD) }
    }
}

#[derive(Debug, Clone)]
pub struct Oriented {
    pub core: CoreState,
    pub extension: Extension,
    pub certificate: OrientationCertificate,
}

fn summary(claim: &str, passed: bool, detail: String) -> ClaimCheck {
    ClaimCheck { claim: claim.to_string(), passed, detail }
}

/// Strongly connected orientation of a connected bridgeless graph with
/// minimum degree at least 3.
///
/// Failed round checks and a diameter above either bound do not fail the
/// call; the certificate records them and [`OrientationCertificate::passed`]
/// turns false.
pub fn orient(g: &Graph, config: &PipelineConfig) -> Result<Oriented> {
    check_input(g)?;
    let core = run_core_unchecked(g, &config.core_config(g.vertex_count()))?;
    let core_graph = core.core(g);
    let extension = extend_unchecked(g, &core.core_vertices, &core_graph, core.cap)?;

    let mut checks: Vec<ClaimCheck> = core.rounds.iter().flat_map(|r| r.checks.iter().cloned()).collect();
    let preserved = core.core_arcs(g).iter().all(|a| extension.arcs.contains(a));
    checks.push(summary("core_preserved", preserved, format!("{} core arcs", core.arcs.assigned())));
    checks.push(summary(
        "extension_bound",
        extension.within_bound(),
        format!("diameter {:?}, core {} + constant", extension.diameter, extension.core_diameter),
    ));
    let checks: std::collections::BTreeMap<String, CheckSummary> = summarize_checks(&checks);

    let certificate = bound_report(
        g,
        BoundInputs {
            arcs: &extension.arcs,
            epsilon: core.epsilon,
            cap: core.cap,
            witness_size: core.witness.len(),
            witness_coverage: core.witness_coverage(g),
            core_vertices: core.core_vertices.len(),
            core_diameter: Some(extension.core_diameter),
            rounds: core.rounds.len(),
            checks,
            fallback: false,
        },
    );
    Ok(Oriented { core, extension, certificate })
}

/// Plain ear orientation for connected bridgeless graphs of minimum degree
/// 2, with no diameter guarantee; the certificate is marked as a fallback.
pub fn orient_fallback(g: &Graph, epsilon: Epsilon) -> Result<(Extension, OrientationCertificate)> {
    match check_input(g) {
        Ok(()) | Err(Error::MinDegreeTooSmall { found: 2, .. }) => {}
        Err(e) => return Err(e),
    }
    let extension = plain_ear_orientation(g, 0)?;
    let certificate = bound_report(
        g,
        BoundInputs {
            arcs: &extension.arcs,
            epsilon,
            cap: epsilon.cap_l(),
            witness_size: 0,
            witness_coverage: 0,
            core_vertices: 1,
            core_diameter: Some(0),
            rounds: 0,
            checks: Default::default(),
            fallback: true,
        },
    );
    Ok((extension, certificate))
}
