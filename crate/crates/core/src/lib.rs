//! Exact computation of the Owen and Diversity Owen values for TU-games with
//! diversity constraints, together with checkers for the axioms that characterize them.
//!
//! All worths and payoffs are exact rationals; every comparison is an equality.

pub mod axioms;
pub mod error;
pub mod game;
pub mod genfix;
pub mod scalar;
pub mod transform;
pub mod values;

pub use error::{Error, Result, MAX_PLAYERS};
pub use game::{
    default_names, diverse_coalitions, is_diverse, Coalition, CoalitionStructure, DiversityBounds,
    DiversityGame, Game, PlayerId,
};
pub use scalar::{format_scalar, int, parse_scalar, ratio, Scalar};
pub use transform::{dividends, support, swap_support_transform, DividendTable, SupportInfo};
pub use values::{
    diversity_owen, owen, owen_permutation_oracle, shapley, value_by_name, Allocation,
    ValueFunctional,
};
