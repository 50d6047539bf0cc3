//! Generic (coordinate-free) rigidity.
//!
//! In the plane everything is exact: the (2,3)-pebble game decides rigidity
//! and Jackson–Jordán (3-connected plus redundantly rigid) decides global
//! rigidity. In 3-space only randomized rank tests are available, so those
//! verdicts are always reported as `Probably*` together with a failure bound.

mod global;
mod pebble;
mod rank;

pub use global::{
    generically_globally_rigid_2d, generically_globally_rigid_with, generically_rigid, generically_rigid_with,
    hendrickson_necessary, hendrickson_necessary_with, maxwell_deficit, redundantly_rigid,
    redundantly_rigid_with, Redundancy,
};
pub use pebble::{pebble_game_2d, PebbleGame};
pub use rank::{generic_rank, integer_rank, rank_upper_bound, RankOptions, COORDINATE_RANGE};

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GenericStatus {
    Rigid,
    Flexible,
    GloballyRigid,
    NotGloballyRigid,
    ProbablyRigid,
    ProbablyFlexible,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    PebbleGame,
    JacksonJordan,
    RandomizedRank,
    Count,
    /// Connectivity plus redundant rigidity, a necessary condition only.
    Hendrickson,
    /// Complete graphs are globally rigid in every dimension.
    CompleteGraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Confidence {
    Exact,
    Probabilistic { failure_bound: f64 },
}

impl Confidence {
    pub fn failure_bound(&self) -> f64 {
        match *self {
            Confidence::Exact => 0.0,
            Confidence::Probabilistic { failure_bound } => failure_bound,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GenericVerdict {
    pub status: GenericStatus,
    pub method: Method,
    pub confidence: Confidence,
}

impl GenericVerdict {
    pub(crate) fn exact(status: GenericStatus, method: Method) -> Self {
        GenericVerdict { status, method, confidence: Confidence::Exact }
    }

    /// Whether the status asserts (possibly probabilistically) rigidity.
    pub fn is_rigid(&self) -> bool {
        matches!(
            self.status,
            GenericStatus::Rigid | GenericStatus::GloballyRigid | GenericStatus::ProbablyRigid
        )
    }

    pub fn is_exact(&self) -> bool {
        self.confidence == Confidence::Exact
    }
}
