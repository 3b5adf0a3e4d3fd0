//! Exact solvers for the colorful Carathéodory problem.
//!
//! Three independent algorithms are provided: a path-following walk over a
//! Sperner-labeled complex of parameter regions ([`walk`]), a local search over
//! colorful choices ([`pls`]), and a binary search for two color classes
//! ([`two_color`]). [`reductions`] turns any of them into Tverberg partitions,
//! centerpoints and simplicial-depth points. All arithmetic is exact and every
//! answer carries a certificate that can be re-checked independently.

pub mod complex;
pub mod error;
pub mod exact;
pub mod generate;
pub mod instance;
pub mod io;
pub mod lp;
pub mod oracle;
pub mod pls;
pub mod reductions;
pub mod two_color;
pub mod walk;

pub use error::{Error, Result};
pub use exact::{Integer, Matrix, Natural, Rational, Vector};
