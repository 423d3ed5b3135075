//! Exact verification of bialgebroids, bimonads on bimodule categories, their
//! Eilenberg-Moore categories and the finite-set bimonad.

pub mod error;
pub mod exactla;

pub use error::{Error, Result};
pub mod algebra;
pub mod bialgebroid;
pub mod bimod;
pub mod bimonad;
pub mod emcat;
pub mod json;
pub mod report;
pub mod setmonad;
pub mod tannaka;
