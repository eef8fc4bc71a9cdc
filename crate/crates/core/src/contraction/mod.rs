//! Contractions over nilpotent parameters: relation verdicts, the contracted
//! Hopf structure, generator eliminations for `N = 3` and relabeling tests
//! between contracted groups.

mod eliminate;
mod group;
mod verdict;
mod witness;

pub use eliminate::*;
pub use group::{contract_group, contract_with, ContractedGroup, ContractedRelation, IllDefined, VerdictCounts};
pub use verdict::*;
pub use witness::*;
