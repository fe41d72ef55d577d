//! Exact truncated q-series: bivariate series in `q` and `z`, the crank
//! series in `q` and `y^{±1}`, Laurent polynomials, Gaussian binomials, and
//! the generating-function identities built on them.

mod bivariate;
mod gf;
mod identities;
mod laurent;
mod qbinom;
mod report;
mod trivariate;

pub use bivariate::{geom_inverse, pochhammer, BivariateSeries, Count};
pub use gf::{
    e_series, gf_crank_trivariate, gf_even_mex_direct, gf_fixed_point_direct,
    gf_neg_crank_direct, gf_pos_crank_direct,
};
pub use identities::{
    aux_zero_identity_check, aux_zero_lhs, coeff_zn_identity_check, coeff_zn_sides,
    dgoal_rewritten_check, dgoal_sides, lemma3_check, lemma3_sides, qbt_check, qbt_sides,
    DgoalVariant,
};
pub use laurent::{laurent_pochhammer, LaurentPoly};
pub use qbinom::{q_factorial, qbinom, QBinomial};
pub use report::{class_series, gf_vs_enumeration, GfReport, Status};
pub use trivariate::TrivariateCrankSeries;
