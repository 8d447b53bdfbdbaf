//! RSK machinery, the diagram/vacillating-tableau bijection, and the
//! partition/braid duality.

mod tableau;
mod theta;
mod vacillating;

pub use tableau::{Shape, ShapeStep, StandardTableau, TableauError};
pub use theta::{theta, theta_inv, ThetaError};
pub use vacillating::{
    admitted_pair, diagram_to_tableau, tableau_to_diagram, VacillatingError, VacillatingTableau,
};
