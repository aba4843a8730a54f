//! Verification library for two-valued coalitionally strategy-proof social
//! choice functions over weak orders: canonical order and profile
//! enumeration, dominance and compatibility scans, superset-closed committee
//! algebra, table-level strategy-proofness checks, the layered committee
//! construction, and the decomposition that recovers it — all exact, at desk
//! scale.

pub mod committees;
pub mod decompose;
pub mod dominance;
pub mod error;
pub mod orders;
pub mod profiles;
pub mod psi;
pub mod scf;
pub mod verify;

pub use committees::{enumerate_committees, is_superset_closed, Committee, ExtendedCommittee};
pub use decompose::{decompose, extract_base_committee, restrict_scf};
pub use dominance::{compatibility_witness, dominates, is_compatible};
pub use error::{Error, Result};
pub use orders::{Alternative, PairOrder, Universe, WeakOrder};
pub use profiles::{PartialProfile, Profile, ProfileSpace, Society, Voter, VoterSet};
pub use psi::{
    find_strict_dictator, random_spec, strict_committee_scf, EntryIndex, PsiSpec, StrictScf,
};
pub use scf::{csp_witness, is_csp, is_weak_pareto, CspWitness, ScfTable};
pub use verify::{run_suite, CheckReport, SuiteReport};
