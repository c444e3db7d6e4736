//! Finite topological spaces: interior and closure, the characterizations
//! of extremally disconnected spaces, exhaustive enumeration of topologies,
//! and a small claim language for model-checking closure identities.

pub mod characterizations;
pub mod claim;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod harness;
pub mod io;
pub mod point_set;
pub mod report;
pub mod topology;

pub use characterizations::{check, is_extremally_disconnected, RelOp, Statement, Verdict, Witness};
pub use claim::{eval_claim, parse_claim, Claim, ClaimError};
pub use enumeration::{canonical_form, enumerate_homeo_classes, enumerate_topologies, CanonicalKey, SizeLimit};
pub use error::{CapExceeded, TopologyError, Violation};
pub use harness::{ed_census, find_counterexample, model_check, verify_theorem, ModelFilter, SweepOptions};
pub use io::{load_topology, LoadError, TopologyFile};
pub use point_set::PointSet;
pub use topology::Topology;
