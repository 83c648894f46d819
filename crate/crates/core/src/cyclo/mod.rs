//! Exact arithmetic in cyclotomic fields `Q(zeta_N)` and exact linear algebra
//! over them.
//!
//! Every value is kept as a canonical residue modulo the `N`-th cyclotomic
//! polynomial, so equality is coefficient comparison and row reduction needs
//! no pivot thresholds.

mod field;
mod mat;
mod num;
mod poly;
mod subspace;

pub use field::euler_phi;
pub(crate) use mat::rref_rows;
pub use mat::Mat;
pub use num::CycNum;
pub use poly::{cyclotomic_poly, format_poly};
pub use subspace::Subspace;
