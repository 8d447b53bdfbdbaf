//! Exact enumeration of k-noncrossing tangled diagrams and their subclasses
//! (matchings, partitions, 2-regular partitions, braids), the vacillating
//! tableau bijection, lattice-walk counts, P-recursive evaluation, and formal
//! asymptotic expansions of the resulting sequences.
//!
//! Counting is done over [`num_bigint::BigUint`]. Polynomials, series, and
//! expansions are generic over a [`Scalar`]; the aliases below fix the
//! usual exact and floating instantiations.

pub mod asymptotics;
pub mod bijections;
pub mod counting;
pub mod diagram;
pub mod oracle;
pub mod poly;
pub mod recurrence;
pub mod scalar;
pub mod series;

pub use asymptotics::{
    char_poly, expand, fit_k, residual_series, solve_corrections, solve_growth, subexp_table,
    AsymptoticError, AsymptoticExpansion, CharPoly, SubexpRow,
};
pub use bijections::{
    diagram_to_tableau, tableau_to_diagram, theta, theta_inv, Shape, StandardTableau,
    VacillatingTableau,
};
pub use counting::{d_count, f_k, p32_closed, CountError, StepPairSet};
pub use diagram::{DiagramClass, DiagramError, InflatedMatching, Label, TangledDiagram, Vertex};
pub use poly::Polynomial;
pub use recurrence::{p32_recurrence, PolyRecurrence, RecurrenceError};
pub use scalar::Scalar;
pub use series::TruncatedSeries;

pub type Rational = num_rational::BigRational;
pub type IntPoly = Polynomial<num_bigint::BigInt>;
pub type RationalPoly = Polynomial<Rational>;
pub type FloatPoly = Polynomial<f64>;
pub type RationalSeries = TruncatedSeries<Rational>;
pub type FloatSeries = TruncatedSeries<f64>;
