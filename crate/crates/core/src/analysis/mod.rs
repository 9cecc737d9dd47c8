//! Executable checks built on the module actions and the closure engine.

pub mod axioms;
pub mod classify;
pub mod intertwiner;
pub mod probe;
pub mod reduce;
pub mod submodule;
pub mod vandermonde;

pub use axioms::{verify_axioms, AxiomReport, Counterexample};
pub use classify::{classify_iso, IsoVerdict, Matching};
pub use intertwiner::{intertwiner_solve, IntertwinerSolution, LinearMap};
pub use probe::{probe_rank_one, probe_tensor_irreducible, Probe};
pub use reduce::{reduce_degree, reduce_fully, ReductionStep};
pub use submodule::{check_invariance, minimal_submodule, submodule_span, InvarianceReport, SubmoduleKind};
pub use vandermonde::{vandermonde_obstruction, Obstruction};
