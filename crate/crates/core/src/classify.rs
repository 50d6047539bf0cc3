//! Sphere-rigidity verdicts from combinatorial tests.
//!
//! For chordal sphere graphs in dimension `d <= 3` five conditions coincide:
//! global sphere-rigidity, sphere-rigidity, d-connectivity, exactly
//! `d|V| - d(d+1)/2` edges, and being a d-tree. Outside the chordal case only
//! necessary conditions are available, and the classifier says so.

use serde::Serialize;

use crate::enumerate::RealizationClassSet;
use crate::error::{Error, Result};
use crate::framework::{validate_sphere, Framework, ToleranceConfig};
use crate::generic::{
    generically_globally_rigid_with, generically_rigid_with, hendrickson_necessary_with, maxwell_deficit, GenericVerdict,
    RankOptions,
};
use crate::graph::{
    clique_number, contains_clique, edge_count_tight, is_chordal, is_d_tree, is_k_connected, Graph,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub chordal: bool,
    pub clique_le_d_plus_1: bool,
    pub d_connected: bool,
    pub edge_count_tight: bool,
    pub d_tree: bool,
}

impl Flags {
    fn compute(g: &Graph, d: usize) -> Flags {
        Flags {
            chordal: is_chordal(g).0,
            clique_le_d_plus_1: !contains_clique(g, d + 2),
            d_connected: is_k_connected(g, d),
            edge_count_tight: edge_count_tight(g, d),
            d_tree: is_d_tree(g, d),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GenericSummary {
    pub rigid: GenericVerdict,
    /// `None` when no available test decides generic global rigidity.
    pub globally_rigid: Option<GenericVerdict>,
    pub maxwell_deficit: i64,
    pub hendrickson_necessary: bool,
}

impl GenericSummary {
    fn compute(g: &Graph, d: usize, opts: &RankOptions) -> Result<GenericSummary> {
        Ok(GenericSummary {
            rigid: generically_rigid_with(g, d, opts)?,
            globally_rigid: generically_globally_rigid_with(g, d, opts)?,
            maxwell_deficit: maxwell_deficit(g, d),
            hendrickson_necessary: hendrickson_necessary_with(g, d, opts)?,
        })
    }
}

/// Whether the graph is known to be a d-sphere graph at all.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SphereGraphStatus {
    /// No realization was supplied; the hypothesis is taken on trust.
    Assumed,
    /// A supplied realization passed validation.
    Witnessed,
    /// Enumeration produced a valid realization.
    Certified,
    /// The graph cannot be a d-sphere graph.
    Refuted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    GloballySphereRigid,
    NotSphereRigid,
    NotApplicable(String),
    NeedsEnumeration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NecessaryViolation {
    /// A clique larger than `d + 1`: no sphere packing has one.
    CliqueTooLarge { clique_number: Option<usize>, bound: usize },
    /// Sphere-rigid graphs on at least `d + 1` vertices are d-connected.
    NotDConnected { d: usize },
    MinDegreeBelowD { vertex: String, degree: usize },
}

/// One applied inference, tagged with the rule it used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub rule: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub d: usize,
    pub flags: Flags,
    pub generic: GenericSummary,
    pub sphere_graph: SphereGraphStatus,
    pub necessary_violations: Vec<NecessaryViolation>,
    pub verdict: Verdict,
    pub justification: Vec<Step>,
}

impl ClassificationReport {
    fn step(&mut self, rule: &'static str, detail: impl Into<String>) {
        self.justification.push(Step { rule, detail: detail.into() });
    }

    /// Folds an enumeration result into the sphere-graph status. Any found
    /// class is a valid realization; an exhaustive empty result refutes
    /// realizability and withdraws verdicts that presumed it.
    pub fn certify(&mut self, set: &RealizationClassSet) {
        if set.count > 0 {
            if self.sphere_graph == SphereGraphStatus::Assumed {
                self.sphere_graph = SphereGraphStatus::Certified;
            }
            self.step("enumeration", format!("enumeration found {} realization class(es)", set.count));
        } else if set.exhaustive {
            self.sphere_graph = SphereGraphStatus::Refuted;
            self.verdict = Verdict::NotApplicable(format!("not a {}-sphere graph", self.d));
            self.step("enumeration", "exhaustive enumeration found no realization");
        }
    }
}

/// Every violated necessary condition for (global) d-sphere-rigidity.
/// `d` must be 2 or 3.
pub fn check_necessary(g: &Graph, d: usize) -> Vec<NecessaryViolation> {
    assert!(matches!(d, 2 | 3), "sphere classification needs d in {{2, 3}}");
    let mut out = Vec::new();
    if contains_clique(g, d + 2) {
        out.push(NecessaryViolation::CliqueTooLarge { clique_number: clique_number(g, None).ok(), bound: d + 1 });
    }
    if g.len() > d {
        if !is_k_connected(g, d) {
            out.push(NecessaryViolation::NotDConnected { d });
        }
        if let Some((v, deg)) = g.min_degree().filter(|&(_, deg)| deg < d) {
            out.push(NecessaryViolation::MinDegreeBelowD { vertex: g.label(v).to_owned(), degree: deg });
        }
    }
    out
}

fn check_dimension(d: usize) -> Result<()> {
    if matches!(d, 2 | 3) {
        Ok(())
    } else {
        Err(Error::DimensionUnsupported(d))
    }
}

fn witness_status(g: &Graph, d: usize, witness: Option<&Framework>, tol: &ToleranceConfig) -> Result<SphereGraphStatus> {
    let Some(f) = witness else {
        return Ok(SphereGraphStatus::Assumed);
    };
    if f.graph() != g {
        return Err(Error::GraphMismatch);
    }
    if f.dim() != d {
        return Err(Error::PreconditionFailed(format!("witness lives in dimension {}, not {d}", f.dim())));
    }
    let report = validate_sphere(f, tol);
    if !report.is_valid() {
        return Err(Error::WitnessInvalid(report.violations.len()));
    }
    Ok(SphereGraphStatus::Witnessed)
}

fn blank_report(g: &Graph, d: usize, witness: Option<&Framework>, tol: &ToleranceConfig) -> Result<ClassificationReport> {
    check_dimension(d)?;
    let sphere_graph = witness_status(g, d, witness, tol)?;
    Ok(ClassificationReport {
        d,
        flags: Flags::compute(g, d),
        generic: GenericSummary::compute(g, d, &RankOptions::default())?,
        sphere_graph,
        necessary_violations: check_necessary(g, d),
        verdict: Verdict::NeedsEnumeration,
        justification: Vec::new(),
    })
}

/// Decides sphere-rigidity of a chordal graph on at least `d + 1` vertices.
pub fn classify_chordal(
    g: &Graph,
    d: usize,
    witness: Option<&Framework>,
    tol: &ToleranceConfig,
) -> Result<ClassificationReport> {
    check_dimension(d)?;
    if g.len() < d + 1 {
        return Err(Error::PreconditionFailed(format!("needs at least {} vertices", d + 1)));
    }
    let mut report = blank_report(g, d, witness, tol)?;
    apply_chordal(g, &mut report);
    Ok(report)
}

fn apply_chordal(g: &Graph, r: &mut ClassificationReport) {
    let d = r.d;
    let f = r.flags;
    if !f.chordal {
        r.step("chordality", "maximum cardinality search found no perfect elimination order");
        r.verdict = Verdict::NotApplicable("not chordal".into());
        return;
    }
    r.step("chordality", "perfect elimination order verified");
    if !f.clique_le_d_plus_1 {
        r.step("clique-bound", format!("contains a clique on {} vertices", d + 2));
        r.sphere_graph = SphereGraphStatus::Refuted;
        r.verdict = Verdict::NotApplicable(format!("not a {d}-sphere graph"));
        return;
    }
    r.step("clique-bound", format!("clique number at most {}", d + 1));
    r.step(
        "sphere-graph",
        match r.sphere_graph {
            SphereGraphStatus::Witnessed => "realizability witnessed by a valid realization",
            SphereGraphStatus::Certified => "realizability certified by enumeration",
            _ => "realizability assumed; certify with enumeration",
        },
    );
    assert!(
        f.d_connected == f.edge_count_tight && f.edge_count_tight == f.d_tree,
        "chordal graph with bounded clique number broke the equivalence: {f:?} for {} vertices",
        g.len()
    );
    r.step(
        "chordal-equivalence",
        format!(
            "{d}-connected = {}, {}|V| - {} edges = {}, {d}-tree = {}",
            f.d_connected,
            d,
            d * (d + 1) / 2,
            f.edge_count_tight,
            f.d_tree
        ),
    );
    if f.d_connected {
        r.step("chordal-theorem", format!("{d}-connected chordal {d}-sphere graph is globally {d}-sphere-rigid"));
        r.verdict = Verdict::GloballySphereRigid;
    } else {
        r.step("connectivity-lemma", format!("{d}-sphere-rigid graphs on at least {} vertices are {d}-connected", d + 1));
        r.verdict = Verdict::NotSphereRigid;
    }
}

/// Runs every available test and reports `NeedsEnumeration` when none of
/// them decides sphere-rigidity.
pub fn classify_general(
    g: &Graph,
    d: usize,
    witness: Option<&Framework>,
    tol: &ToleranceConfig,
) -> Result<ClassificationReport> {
    let mut r = blank_report(g, d, witness, tol)?;
    if r.flags.chordal && g.len() > d {
        apply_chordal(g, &mut r);
        return Ok(r);
    }
    if !r.flags.chordal {
        r.step("chordality", "not chordal; the chordal theorem does not apply");
    }
    if !r.flags.clique_le_d_plus_1 {
        r.step("clique-bound", format!("contains a clique on {} vertices", d + 2));
        r.sphere_graph = SphereGraphStatus::Refuted;
        r.verdict = Verdict::NotApplicable(format!("not a {d}-sphere graph"));
        return Ok(r);
    }
    if g.len() <= d {
        r.step("size", format!("fewer than {} vertices", d + 1));
        r.verdict = Verdict::NotApplicable(format!("fewer than {} vertices", d + 1));
        return Ok(r);
    }
    if !r.flags.d_connected {
        r.step("connectivity-lemma", format!("not {d}-connected, so not {d}-sphere-rigid"));
        r.verdict = Verdict::NotSphereRigid;
        return Ok(r);
    }
    let generic_note = match r.generic.globally_rigid {
        Some(v) => format!("generic: {:?}, global: {:?}", r.generic.rigid.status, v.status),
        None => format!("generic: {:?}, global: undecided", r.generic.rigid.status),
    };
    r.step("generic", generic_note);
    r.step("open", "no combinatorial test decides sphere-rigidity here; enumerate realizations");
    r.verdict = Verdict::NeedsEnumeration;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generic::GenericStatus;

    fn fan(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        edges.extend((1..n - 1).map(|i| (i, i + 1)));
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn necessary_conditions() {
        assert!(check_necessary(&Graph::cycle(4), 2).is_empty());
        let path = check_necessary(&Graph::path(4), 2);
        assert!(path.contains(&NecessaryViolation::NotDConnected { d: 2 }));
        let k5 = check_necessary(&Graph::complete(5), 2);
        assert_eq!(k5, vec![NecessaryViolation::CliqueTooLarge { clique_number: Some(5), bound: 3 }]);
    }

    #[test]
    fn fan_is_globally_rigid() {
        let tol = ToleranceConfig::default();
        let r = classify_chordal(&fan(5), 2, None, &tol).unwrap();
        assert_eq!(r.verdict, Verdict::GloballySphereRigid);
        assert_eq!(r.sphere_graph, SphereGraphStatus::Assumed);
        let f = r.flags;
        assert!(f.chordal && f.clique_le_d_plus_1 && f.d_connected && f.edge_count_tight && f.d_tree);
    }

    #[test]
    fn path_is_not_rigid() {
        let r = classify_chordal(&Graph::path(4), 2, None, &ToleranceConfig::default()).unwrap();
        assert_eq!(r.verdict, Verdict::NotSphereRigid);
        assert!(!r.justification.is_empty());
    }

    #[test]
    fn cycle_is_not_chordal() {
        let r = classify_chordal(&Graph::cycle(5), 2, None, &ToleranceConfig::default()).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable("not chordal".into()));
        let r = classify_general(&Graph::cycle(5), 2, None, &ToleranceConfig::default()).unwrap();
        assert_eq!(r.verdict, Verdict::NeedsEnumeration);
    }

    #[test]
    fn tetrahedron_in_space() {
        let r = classify_general(&Graph::complete(4), 3, None, &ToleranceConfig::default()).unwrap();
        assert_eq!(r.verdict, Verdict::GloballySphereRigid);
        assert_eq!(r.generic.globally_rigid.unwrap().status, GenericStatus::GloballyRigid);
    }

    #[test]
    fn invalid_witness_is_an_error() {
        let g = Graph::path(3);
        let f = Framework::new(g.clone(), 2, vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.5, 0.5]]).unwrap();
        assert!(matches!(
            classify_general(&g, 2, Some(&f), &ToleranceConfig::default()),
            Err(Error::WitnessInvalid(1))
        ));
    }

    #[test]
    fn certification() {
        use crate::enumerate::{enumerate, NumericOptions};
        let tol = ToleranceConfig::default();
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]);
        let mut r = classify_chordal(&g, 2, None, &tol).unwrap();
        let set = enumerate(&g, 2, &NumericOptions::default(), &tol).unwrap();
        r.certify(&set);
        assert_eq!(r.sphere_graph, SphereGraphStatus::Refuted);
        assert!(matches!(r.verdict, Verdict::NotApplicable(_)));
    }
}
