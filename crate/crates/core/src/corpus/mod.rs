//! The fixture corpus: reconstructed planar examples and small hand-built graphs,
//! each carrying machine-checkable claims, plus the two comparison tables
//! (sphere notion against generic notion) with the fixtures that cover each
//! cell.

mod check;
mod fixtures;

pub use check::{check_fixture, ClaimResult, FixtureReport, Outcome};
pub use fixtures::{fig_sparse, penny_grid};

use std::path::Path;

use serde::Serialize;

use crate::error::Result;
use crate::framework::Framework;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SphereClass {
    GloballyRigid,
    RigidNotGlobal,
    Flexible,
    NoRealization,
}

impl SphereClass {
    pub fn as_str(self) -> &'static str {
        match self {
            SphereClass::GloballyRigid => "globally-rigid",
            SphereClass::RigidNotGlobal => "rigid-not-global",
            SphereClass::Flexible => "flexible",
            SphereClass::NoRealization => "none",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenericClass {
    GloballyRigid,
    RigidNotGlobal,
    Flexible,
}

impl GenericClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GenericClass::GloballyRigid => "globally-rigid",
            GenericClass::RigidNotGlobal => "rigid",
            GenericClass::Flexible => "flexible",
        }
    }
}

/// An expected property of a fixture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Claim {
    /// The stored realization passes (or fails) `validate_sphere`.
    Valid(bool),
    Sphere(SphereClass),
    Generic(GenericClass),
    /// Exact branch-and-prune class count.
    BpClasses(usize),
    MaxwellDeficit(i64),
    Chordal(bool),
    DTree(bool),
    Hendrickson(bool),
    /// Name of the classifier verdict variant.
    Classify(&'static str),
}

impl Claim {
    pub fn key(&self, d: usize) -> String {
        match self {
            Claim::Valid(_) => "valid".into(),
            Claim::Sphere(_) => if d == 2 { "penny" } else { "marble" }.into(),
            Claim::Generic(_) => format!("generic_{d}d"),
            Claim::BpClasses(_) => "bp_classes".into(),
            Claim::MaxwellDeficit(_) => "maxwell_deficit".into(),
            Claim::Chordal(_) => "chordal".into(),
            Claim::DTree(_) => "d_tree".into(),
            Claim::Hendrickson(_) => "hendrickson".into(),
            Claim::Classify(_) => "classify".into(),
        }
    }

    pub fn value(&self) -> serde_json::Value {
        use serde_json::json;
        match self {
            Claim::Valid(b) | Claim::Chordal(b) | Claim::DTree(b) | Claim::Hendrickson(b) => json!(b),
            Claim::Sphere(c) => json!(c.as_str()),
            Claim::Generic(c) => json!(c.as_str()),
            Claim::BpClasses(n) => json!(n),
            Claim::MaxwellDeficit(n) => json!(n),
            Claim::Classify(s) => json!(s),
        }
    }
}

/// A continuous motion meant to exhibit flexibility.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Motion {
    /// Rotation of one side of a small separator (`v1` rotates).
    Rotate { v1: Vec<String>, v2: Vec<String> },
    /// The `moving` vertices translate together while every bar parallel to
    /// `bar = (fixed end, moving end)` swings about its fixed end.
    Shear { moving: Vec<String>, bar: (String, String) },
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub id: String,
    pub d: usize,
    pub graph: Graph,
    pub realization: Option<Framework>,
    /// Further valid realizations, pairwise non-congruent with the first.
    pub alternates: Vec<Framework>,
    pub motion: Option<Motion>,
    pub expected: Vec<Claim>,
    pub note: &'static str,
    /// A three-dimensional stand-in for a table cell whose original example
    /// has no recoverable coordinates.
    pub analogue: bool,
}

impl Fixture {
    fn new(id: impl Into<String>, d: usize, graph: Graph, realization: Option<Framework>) -> Fixture {
        Fixture {
            id: id.into(),
            d,
            graph,
            realization,
            alternates: Vec::new(),
            motion: None,
            expected: Vec::new(),
            note: "",
            analogue: false,
        }
    }

    fn note(mut self, note: &'static str) -> Self {
        self.note = note;
        self
    }

    fn claims(mut self, claims: impl IntoIterator<Item = Claim>) -> Self {
        self.expected.extend(claims);
        self
    }

    fn motion(mut self, m: Motion) -> Self {
        self.motion = Some(m);
        self
    }

    fn alternate(mut self, f: Framework) -> Self {
        self.alternates.push(f);
        self
    }

    fn analogue(mut self) -> Self {
        self.analogue = true;
        self
    }

    pub fn sphere_claim(&self) -> Option<SphereClass> {
        self.expected.iter().find_map(|c| match c {
            Claim::Sphere(s) => Some(*s),
            _ => None,
        })
    }

    pub fn generic_claim(&self) -> Option<GenericClass> {
        self.expected.iter().find_map(|c| match c {
            Claim::Generic(g) => Some(*g),
            _ => None,
        })
    }

    /// Claims as a JSON object keyed by claim name.
    pub fn expected_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> =
            self.expected.iter().map(|c| (c.key(self.d), c.value())).collect();
        serde_json::Value::Object(map)
    }

    /// Writes `<id>.graph.json`, `<id>.real.json` (when a realization is
    /// stored) and `<id>.expected.json` into `dir`.
    pub fn export(&self, dir: &Path) -> Result<()> {
        self.graph.save(dir.join(format!("{}.graph.json", self.id)))?;
        if let Some(f) = &self.realization {
            f.save(dir.join(format!("{}.real.json", self.id)))?;
        }
        for (i, f) in self.alternates.iter().enumerate() {
            f.save(dir.join(format!("{}.alt{}.real.json", self.id, i + 1)))?;
        }
        let text = serde_json::to_string_pretty(&self.expected_json())?;
        std::fs::write(dir.join(format!("{}.expected.json", self.id)), text + "\n")?;
        Ok(())
    }
}

/// Every fixture, sorted by id.
pub fn corpus() -> Vec<Fixture> {
    fixtures::all()
}

pub fn fixture(id: &str) -> Option<Fixture> {
    fixtures::all().into_iter().find(|f| f.id == id)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "fixtures", rename_all = "snake_case")]
pub enum Coverage {
    Covered(Vec<&'static str>),
    /// No example is known to exist.
    Open,
    /// An example exists but is not reproduced here.
    Uncovered,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableCell {
    pub sphere: SphereClass,
    pub generic: GenericClass,
    pub coverage: Coverage,
}

/// The comparison table for dimension `d` (2 or 3), row by row.
pub fn comparison_table(d: usize) -> Vec<TableCell> {
    use Coverage::*;
    use GenericClass as G;
    use SphereClass as Sp;
    let cell = |sphere, generic, coverage| TableCell { sphere, generic, coverage };
    if d == 2 {
        vec![
            cell(Sp::GloballyRigid, G::GloballyRigid, Covered(vec!["fig-barjoint-c", "penny-grid-1", "penny-grid-2", "penny-grid-3"])),
            cell(Sp::GloballyRigid, G::RigidNotGlobal, Covered(vec!["fig-barjoint-d"])),
            cell(Sp::GloballyRigid, G::Flexible, Covered(vec!["fig-sparse-1", "fig-sparse-2", "fig-sparse-3"])),
            cell(Sp::RigidNotGlobal, G::GloballyRigid, Open),
            cell(Sp::RigidNotGlobal, G::RigidNotGlobal, Covered(vec!["fig-two-realizations"])),
            cell(Sp::RigidNotGlobal, G::Flexible, Covered(vec!["fig-rigid-not-global"])),
            cell(Sp::Flexible, G::GloballyRigid, Covered(vec!["fig-barjoint-b"])),
            cell(Sp::Flexible, G::RigidNotGlobal, Covered(vec!["fig-barjoint-a"])),
            cell(Sp::Flexible, G::Flexible, Covered(vec!["path-3", "path-4"])),
        ]
    } else {
        vec![
            cell(Sp::GloballyRigid, G::GloballyRigid, Covered(vec!["K4-tetrahedron"])),
            cell(Sp::GloballyRigid, G::RigidNotGlobal, Covered(vec!["3-tree-5"])),
            cell(Sp::GloballyRigid, G::Flexible, Uncovered),
            cell(Sp::RigidNotGlobal, G::GloballyRigid, Open),
            cell(Sp::RigidNotGlobal, G::RigidNotGlobal, Uncovered),
            cell(Sp::RigidNotGlobal, G::Flexible, Uncovered),
            cell(Sp::Flexible, G::GloballyRigid, Uncovered),
            cell(Sp::Flexible, G::RigidNotGlobal, Uncovered),
            cell(Sp::Flexible, G::Flexible, Covered(vec!["path-4-3d"])),
        ]
    }
}

/// Table entries whose fixtures are missing or claim a different cell.
pub fn table_mismatches(fixtures: &[Fixture]) -> Vec<String> {
    let mut out = Vec::new();
    for d in [2, 3] {
        for cell in comparison_table(d) {
            let Coverage::Covered(ids) = &cell.coverage else { continue };
            for id in ids {
                match fixtures.iter().find(|f| f.id == *id) {
                    None => out.push(format!("{id}: listed in the table but not in the corpus")),
                    Some(f) if f.d != d || f.sphere_claim() != Some(cell.sphere) || f.generic_claim() != Some(cell.generic) => {
                        out.push(format!("{id}: claims do not match its table cell"))
                    }
                    Some(_) => {}
                }
            }
        }
    }
    out
}
