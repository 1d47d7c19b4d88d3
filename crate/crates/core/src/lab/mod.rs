//! Exhaustive verification harness, identity checks and Cayley-ball export.

mod cayley;
mod gamma_mn;
mod identities;
mod probe;
mod suite;

pub use cayley::{export_cayley_ball, CayleyBall, CayleyEdge, CayleyFormat, CayleyNode};
pub use gamma_mn::{gamma_mn_rewrite, verify_gamma_mn_identity};
pub use identities::{identity_list, run_identity_suite, NamedIdentity};
pub use probe::{property_s_probe, PropertySProbe};
pub use suite::{
    run_closure_suite, run_convexity_suite, run_dehornoy_suite, run_trichotomy_suite, SuiteReport,
    Violation,
};
