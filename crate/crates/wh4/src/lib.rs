//! Weakly holomorphic modular forms of level 4: exact series arithmetic,
//! canonical bases, coefficient-duality checks, arc evaluation, and
//! certified numeric bounds.
//!
//! Start with the runnable examples, one per capability:
//!
//! ```text
//! cargo run -p wh4 --example named_forms          # θ, F, ψ and their identities
//! cargo run -p wh4 --example basis_families       # canonical f/g/h/i bases
//! cargo run -p wh4 --example coefficient_duality  # duality of coefficient grids
//! cargo run -p wh4 --example parity_operators     # U₂/V₂ and parity of expansions
//! cargo run -p wh4 --example generating_function  # two-variable generating identity
//! cargo run -p wh4 --example faber_sturm          # Faber polynomials + root counts
//! cargo run -p wh4 --example arc_scan             # high-precision arc sampling
//! cargo run -p wh4 --example arc_roots            # Faber roots mapped to the arc
//! cargo run -p wh4 --example certified_bounds     # interval-certified constants
//! cargo run -p wh4 --example threshold_check      # zero-localization thresholds
//! ```
//!
//! The same functionality is scriptable through the thin `wh4` binary; see
//! the README for the command set.

pub mod arc;
pub mod basis;
pub mod certify;
pub mod cli;
pub mod eval;
pub mod forms;
pub mod identities;
pub mod interval;
pub mod poly;
pub mod series;

pub use series::{QSeries, Rational, SeriesError};
