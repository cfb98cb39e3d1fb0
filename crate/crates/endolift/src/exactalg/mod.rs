//! Exact scalar and dense-matrix arithmetic over GF(2^m), Z/2^n and the
//! cyclotomic integer ring Z[x]/(x^(2^(d-2)) + 1).
//!
//! Everything above this module reduces to these solvers. All values are
//! immutable after construction and all operations are pure, so they can be
//! used freely from multiple threads.

pub mod cyc;
pub mod dense;
pub mod fieldmat;
pub mod gf;
pub mod zmod;
pub mod znmat;

pub use cyc::CycInt;
pub use dense::{kernel_basis, solve_linear, CycMat, DenseMatrix, SolveOutcome};
pub use fieldmat::{FieldMat, Rref};
pub use gf::FieldElem;
pub use zmod::ZmodElem;
pub use znmat::{zn_diagonalize, ZnDiag, ZnKernelGen, ZnMat};

/// Trace of a cyclotomic integer down to Z.
pub fn cyc_trace(z: &CycInt) -> i64 {
    z.trace()
}
