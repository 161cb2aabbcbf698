//! The exponential map: q-exponentials, the matrices `T^{(j;z)}`, `L^{±(j)}`
//! and `R^{(j1)⊗(j2)}`, and the identities relating them.

mod lmatrix;
mod qexp;
mod rmatrix;
mod tmatrix;

pub use lmatrix::{compare_l, delta_l_check, l_matrix, pi_t_vs_r_check, rll_check, tprime_r_check, LMatrix};
pub use qexp::{qexp, qexp_coeff, qexp_poly, scalar_times_element, QBase};
pub use rmatrix::{defining_r, quasitriangularity_check, r_defining_check, r_matrix_from_reps, r_matrix_rep};
pub use tmatrix::{
    closed_vs_factorized_check, comodule_check, t_matrix_closed, t_matrix_factorized, t_structure_check, TMatrix,
};
