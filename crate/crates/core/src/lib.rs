//! Exact p-adic tools for cuspidal weight modules of `gl(n+1)`, locally
//! analytic characters, and the coefficient recurrences that decide whether a
//! candidate intertwiner extends to the analytic completion.

pub mod analytic;
pub mod cli;
pub mod groups;
pub mod irreducibility;
pub mod linalg;
pub mod padic;
pub mod weights;
