//! Hilbert depth and Stanley depth of finitely generated multigraded
//! modules over a polynomial ring K[X_1..X_n].
//!
//! Modules are presented as finite direct sums of shifted monomial
//! subquotients x^c (I/J). Such a module is positively g-determined for a
//! computable degree g, meaning its multigraded Hilbert function and all
//! multiplication maps are captured by the finite box [0,g]. On that box:
//!
//! * the Hilbert function becomes a [`HilbertTable`];
//! * writing the table as a sum of interval tables Q[a,b] gives a
//!   [`HilbertPartition`]; the Hilbert depth of the module is the best
//!   worst-case boundary contact over all partitions ([`hdepth`]);
//! * every partition induces a decomposition of the module into shifted
//!   polynomial subalgebras K[Z](-c); choosing concrete generators turns
//!   it into a Stanley decomposition when a finite annihilator and linear
//!   independence check passes, and searching all partitions computes the
//!   Stanley depth ([`stdepth`]).
//!
//! The arithmetic is exact throughout: table entries are checked u64
//! counters and generator coefficients are arbitrary-precision rationals.

mod error;
mod lattice;
mod linalg;
mod module;
mod parse;
mod partition;
mod report;
mod stanley;
mod table;

pub use num_rational::BigRational as Rational;

pub use error::{Error, Result};
pub use lattice::{
    box_iter, g_set, meet_join, rho, sub_box_iter, z_set, BoxIter, DegreeVector, Interval, VarSet,
};
pub use module::{specialize_partition, ComponentBasisElement, ModuleSpec, MonomialIdeal, Summand};
pub use parse::{
    parse_candidate, parse_partition, parse_rational, parse_spec, CandidateInput, PartitionInput,
    MAX_COORD, MAX_COUNT, MAX_ITEMS, MAX_RATIONAL_LEN,
};
pub use partition::{
    count_partitions, depth_of_partition, enumerate_partitions, exists_partition, hdepth,
    induced_decomposition, partition_from_decomposition, HilbertComponent, HilbertDecomposition,
    HilbertPartition,
};
pub use report::{
    candidate_json, decomposition_json, degree_json, format_component, format_stanley_part,
    format_vars, partition_json, rational_string, spec_json, table_json,
};
pub use stanley::{
    annihilator_free, candidate_to_stanley, check_stanley_candidate,
    check_stanley_candidate_outcome, fine_decomposition, generic_stanley_check,
    necessary_stanley_filter, stdepth, stdepth_dim1, CheckOutcome, StanleyCandidate,
    StanleyDecomposition, StanleyPart,
};
pub use table::{monomial_string, q_interval, HilbertTable};
