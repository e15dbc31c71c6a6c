//! Schur-basis machinery: partitions, Schur polynomials, Littlewood–Richardson
//! coefficients, expansions, the Demazure operator and raising operators.

mod expansion;
mod partition;
mod raising;
mod schur;

pub use expansion::{schur_expand, SchurExpansion, SchurExpansionJson, SchurTerm};
pub use partition::{part, Partition};
pub use raising::{demazure, mul_elementary_t, rho, rho_h, rho_k, rho_power};
pub use schur::{
    lr_coeff, lr_product, schur_at_ones, schur_of_union, schur_poly, schur_poly_in,
    schur_straighten, ssyt_weights,
};
