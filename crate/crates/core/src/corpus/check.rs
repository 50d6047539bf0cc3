use std::cell::OnceCell;

use nalgebra::DVector;
use serde::Serialize;
use serde_json::{json, Value};

use super::{Claim, Fixture, GenericClass, Motion, SphereClass};
use crate::classify::{classify_general, ClassificationReport, Verdict};
use crate::enumerate::{bp_enumerate, discretization_order, numeric_solve, NumericOptions, RealizationClassSet};
use crate::framework::{congruent, equivalent, flex_witness_from_separator, validate_sphere, Framework, ToleranceConfig};
use crate::generic::{
    generically_globally_rigid_with, generically_rigid_with, hendrickson_necessary, maxwell_deficit, GenericStatus,
    RankOptions,
};
use crate::graph::{is_chordal, is_d_tree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Established by an exact computation.
    Proved,
    /// Consistent with heuristic or probabilistic evidence only.
    Corroborated,
    /// Neither confirmed nor contradicted.
    Unverified,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimResult {
    pub claim: String,
    pub expected: Value,
    pub observed: Value,
    pub outcome: Outcome,
    pub evidence: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FixtureReport {
    pub id: String,
    pub d: usize,
    pub claims: Vec<ClaimResult>,
}

impl FixtureReport {
    pub fn failed(&self) -> bool {
        self.claims.iter().any(|c| c.outcome == Outcome::Failed)
    }
}

/// Angles sampled along a motion, in radians.
const MOTION_SAMPLES: [f64; 4] = [-0.1, -0.05, 0.05, 0.1];

struct Context<'a> {
    f: &'a Fixture,
    opts: &'a NumericOptions,
    tol: &'a ToleranceConfig,
    bp: OnceCell<Result<Option<RealizationClassSet>, String>>,
    numeric: OnceCell<RealizationClassSet>,
    classify: OnceCell<Result<ClassificationReport, String>>,
}

impl Context<'_> {
    fn witness(&self) -> Option<&Framework> {
        self.f.realization.as_ref().filter(|r| validate_sphere(r, self.tol).is_valid())
    }

    fn bp(&self) -> Result<Option<&RealizationClassSet>, String> {
        self.bp
            .get_or_init(|| match discretization_order(&self.f.graph, self.f.d) {
                Some(ord) => bp_enumerate(&self.f.graph, self.f.d, &ord, self.tol).map(Some).map_err(|e| e.to_string()),
                None => Ok(None),
            })
            .as_ref()
            .map(Option::as_ref)
            .map_err(Clone::clone)
    }

    fn numeric(&self) -> &RealizationClassSet {
        self.numeric.get_or_init(|| numeric_solve(&self.f.graph, self.f.d, self.opts, self.tol))
    }

    fn classify(&self) -> Result<&ClassificationReport, String> {
        self.classify
            .get_or_init(|| classify_general(&self.f.graph, self.f.d, self.witness(), self.tol).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(Clone::clone)
    }
}

fn result(claim: &Claim, d: usize, observed: Value, outcome: Outcome, evidence: impl Into<String>) -> ClaimResult {
    ClaimResult { claim: claim.key(d), expected: claim.value(), observed, outcome, evidence: evidence.into() }
}

fn exact(claim: &Claim, d: usize, observed: Value, evidence: &str) -> ClaimResult {
    let outcome = if observed == claim.value() { Outcome::Proved } else { Outcome::Failed };
    result(claim, d, observed, outcome, evidence)
}

/// Checks every claim of a fixture. Numeric search runs only when a sphere
/// claim cannot be settled exactly.
pub fn check_fixture(f: &Fixture, opts: &NumericOptions, tol: &ToleranceConfig) -> FixtureReport {
    let ctx =
        Context { f, opts, tol, bp: OnceCell::new(), numeric: OnceCell::new(), classify: OnceCell::new() };
    let d = f.d;
    let g = &f.graph;
    let claims = f
        .expected
        .iter()
        .map(|claim| match claim {
            Claim::Valid(_) => match &f.realization {
                Some(r) => {
                    let rep = validate_sphere(r, tol);
                    exact(claim, d, json!(rep.is_valid()), &format!("{} violation(s)", rep.violations.len()))
                }
                None => result(claim, d, Value::Null, Outcome::Failed, "no realization stored"),
            },
            Claim::Chordal(_) => exact(claim, d, json!(is_chordal(g).0), "maximum cardinality search"),
            Claim::DTree(_) => exact(claim, d, json!(is_d_tree(g, d)), "simplicial peeling"),
            Claim::MaxwellDeficit(_) => exact(claim, d, json!(maxwell_deficit(g, d)), "edge count"),
            Claim::Hendrickson(_) => match hendrickson_necessary(g, d) {
                Ok(h) => {
                    let outcome = if json!(h) == claim.value() { Outcome::Corroborated } else { Outcome::Failed };
                    result(claim, d, json!(h), outcome, "connectivity and randomized redundant rigidity")
                }
                Err(e) => result(claim, d, Value::Null, Outcome::Failed, e.to_string()),
            },
            Claim::BpClasses(_) => match ctx.bp() {
                Ok(Some(set)) => exact(claim, d, json!(set.count), "exhaustive branch-and-prune"),
                Ok(None) => result(claim, d, Value::Null, Outcome::Failed, "no discretization order"),
                Err(e) => result(claim, d, Value::Null, Outcome::Failed, e),
            },
            Claim::Classify(_) => match ctx.classify() {
                Ok(rep) => exact(claim, d, json!(verdict_name(&rep.verdict)), "combinatorial classifier"),
                Err(e) => result(claim, d, Value::Null, Outcome::Failed, e),
            },
            Claim::Generic(expected) => generic_claim(claim, *expected, &ctx),
            Claim::Sphere(expected) => sphere_claim(claim, *expected, &ctx),
        })
        .collect();
    FixtureReport { id: f.id.clone(), d, claims }
}

fn verdict_name(v: &Verdict) -> &'static str {
    match v {
        Verdict::GloballySphereRigid => "GloballySphereRigid",
        Verdict::NotSphereRigid => "NotSphereRigid",
        Verdict::NotApplicable(_) => "NotApplicable",
        Verdict::NeedsEnumeration => "NeedsEnumeration",
    }
}

fn generic_claim(claim: &Claim, expected: GenericClass, ctx: &Context) -> ClaimResult {
    let (g, d) = (&ctx.f.graph, ctx.f.d);
    let opts = RankOptions::default();
    let (rigid, global) = match (generically_rigid_with(g, d, &opts), generically_globally_rigid_with(g, d, &opts)) {
        (Ok(r), Ok(gl)) => (r, gl),
        (Err(e), _) | (_, Err(e)) => return result(claim, d, Value::Null, Outcome::Failed, e.to_string()),
    };
    let observed = match (global.map(|v| v.status), rigid.is_rigid()) {
        (Some(GenericStatus::GloballyRigid), _) => Some(GenericClass::GloballyRigid),
        (_, false) => Some(GenericClass::Flexible),
        (Some(_), true) => Some(GenericClass::RigidNotGlobal),
        (None, true) => None,
    };
    let all_exact = rigid.is_exact() && global.is_some_and(|v| v.is_exact());
    let bound = rigid.confidence.failure_bound().max(global.map_or(0.0, |v| v.confidence.failure_bound()));
    let mut evidence = match global {
        Some(v) => format!("{:?}, {:?}", rigid.method, v.method),
        None => format!("{:?}", rigid.method),
    };
    if bound > 0.0 {
        evidence.push_str(&format!(", failure bound {bound:.1e}"));
    }
    match observed {
        None => result(claim, d, json!("rigid, global undecided"), Outcome::Unverified, evidence),
        Some(o) if o != expected => result(claim, d, json!(o.as_str()), Outcome::Failed, evidence),
        Some(o) => {
            let outcome = if all_exact { Outcome::Proved } else { Outcome::Corroborated };
            result(claim, d, json!(o.as_str()), outcome, evidence)
        }
    }
}

fn sphere_from_count(count: usize) -> SphereClass {
    match count {
        0 => SphereClass::NoRealization,
        1 => SphereClass::GloballyRigid,
        _ => SphereClass::RigidNotGlobal,
    }
}

fn sphere_claim(claim: &Claim, expected: SphereClass, ctx: &Context) -> ClaimResult {
    let d = ctx.f.d;
    match ctx.bp() {
        Ok(Some(set)) => {
            let o = sphere_from_count(set.count);
            let outcome = if o == expected { Outcome::Proved } else { Outcome::Failed };
            return result(claim, d, json!(o.as_str()), outcome, format!("exhaustive enumeration: {} class(es)", set.count));
        }
        Ok(None) => {}
        Err(e) => return result(claim, d, Value::Null, Outcome::Failed, e),
    }

    let mut notes: Vec<String> = Vec::new();
    let mut proven: Option<SphereClass> = None;
    match ctx.classify().map(|r| &r.verdict) {
        Ok(Verdict::GloballySphereRigid) => {
            proven = Some(SphereClass::GloballyRigid);
            notes.push("chordal theorem: globally rigid".into());
        }
        Ok(Verdict::NotSphereRigid) => {
            proven = Some(SphereClass::Flexible);
            notes.push("connectivity: not rigid".into());
        }
        Ok(Verdict::NotApplicable(reason)) if reason.contains("sphere graph") => {
            proven = Some(SphereClass::NoRealization);
            notes.push(reason.clone());
        }
        Ok(_) => {}
        Err(e) => notes.push(format!("classifier: {e}")),
    }
    if let (Some(motion), Some(r)) = (&ctx.f.motion, ctx.witness()) {
        match verify_motion(r, motion, ctx.tol) {
            Ok(()) => {
                proven = Some(SphereClass::Flexible);
                notes.push("explicit motion keeps the packing valid".into());
            }
            Err(e) => notes.push(format!("motion rejected: {e}")),
        }
    }
    let distinct = distinct_stored(ctx);
    let mut not_global = distinct >= 2;
    if not_global {
        notes.push(format!("{distinct} stored non-congruent realizations"));
    }
    let mut found = None;
    if proven.is_none() && matches!(expected, SphereClass::GloballyRigid | SphereClass::RigidNotGlobal) {
        let set = ctx.numeric();
        notes.push(format!("numeric search ({} restarts): {} class(es), inexhaustive", ctx.opts.restarts, set.count));
        not_global |= set.count >= 2;
        found = Some(set.count);
    }
    let evidence = notes.join("; ");

    if let Some(p) = proven {
        let contradiction = not_global && p == SphereClass::GloballyRigid;
        let outcome = if p == expected && !contradiction { Outcome::Proved } else { Outcome::Failed };
        return result(claim, d, json!(p.as_str()), outcome, evidence);
    }
    let (observed, outcome) = match expected {
        SphereClass::GloballyRigid if not_global => ("not globally rigid", Outcome::Failed),
        SphereClass::GloballyRigid if found == Some(1) => ("one class found", Outcome::Corroborated),
        SphereClass::RigidNotGlobal if not_global => ("several classes found", Outcome::Corroborated),
        _ => ("undecided", Outcome::Unverified),
    };
    result(claim, d, json!(observed), outcome, evidence)
}

/// Number of pairwise non-congruent valid realizations stored.
fn distinct_stored(ctx: &Context) -> usize {
    let mut kept: Vec<&Framework> = Vec::new();
    for r in ctx.f.realization.iter().chain(&ctx.f.alternates) {
        if !validate_sphere(r, ctx.tol).is_valid() {
            continue;
        }
        if !kept.iter().any(|k| congruent(k, r, ctx.tol).unwrap_or(true)) {
            kept.push(r);
        }
    }
    kept.len()
}

/// Positions along the motion at angle `t`.
pub(crate) fn motion_at(f: &Framework, motion: &Motion, t: f64) -> Result<Framework, String> {
    let g = f.graph();
    let index = |l: &String| g.index_of(l).ok_or_else(|| format!("unknown vertex {l:?}"));
    match motion {
        Motion::Rotate { v1, v2 } => {
            let v1 = v1.iter().map(index).collect::<Result<Vec<_>, _>>()?;
            let v2 = v2.iter().map(index).collect::<Result<Vec<_>, _>>()?;
            let w = flex_witness_from_separator(f, &v1, &v2).map_err(|e| e.to_string())?;
            w.apply(f, t).map_err(|e| e.to_string())
        }
        Motion::Shear { moving, bar } => {
            if f.dim() != 2 {
                return Err("shear motions are planar".into());
            }
            let u = f.point(index(&bar.1)?) - f.point(index(&bar.0)?);
            let (c, s) = (t.cos(), t.sin());
            let turned = DVector::from_vec(vec![c * u[0] - s * u[1], s * u[0] + c * u[1]]);
            let shift = turned - u;
            let mut points = f.points().to_vec();
            for l in moving {
                let v = index(l)?;
                points[v] += &shift;
            }
            Ok(f.with_points(points))
        }
    }
}

/// The motion preserves edge lengths, keeps the packing valid and leaves
/// the congruence class at every sampled angle.
pub(crate) fn verify_motion(f: &Framework, motion: &Motion, tol: &ToleranceConfig) -> Result<(), String> {
    for t in MOTION_SAMPLES {
        let moved = motion_at(f, motion, t)?;
        if !equivalent(f, &moved, tol).map_err(|e| e.to_string())? {
            return Err(format!("edge lengths change at angle {t}"));
        }
        if !validate_sphere(&moved, tol).is_valid() {
            return Err(format!("packing invalid at angle {t}"));
        }
        if congruent(f, &moved, tol).map_err(|e| e.to_string())? {
            return Err(format!("motion is trivial at angle {t}"));
        }
    }
    Ok(())
}
