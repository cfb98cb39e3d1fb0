//! The exact-arithmetic layer on its own: bit-packed GF(2) kernels,
//! solving over the local rings Z/2^n, and cyclotomic integer traces.
//!
//! Run with: cargo run --release --example exact_solvers

use endolift::exactalg::{
    cyc_trace, kernel_basis, solve_linear, CycInt, DenseMatrix, FieldMat, SolveOutcome, ZnMat,
};

fn main() -> endolift::Result<()> {
    // kernel of a singular GF(2) matrix
    let a = FieldMat::from_rows(1, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
    let k = kernel_basis(&DenseMatrix::Field(a))?;
    println!("GF(2) kernel has {} basis vector(s)", k.cols());

    // solving over Z/4: 2x = 1 has no solution, 2x = 2 has two
    let two = DenseMatrix::Zmod(ZnMat::from_rows(2, &[vec![2]]));
    for rhs in [1u64, 2] {
        let b = DenseMatrix::Zmod(ZnMat::from_rows(2, &[vec![rhs]]));
        match solve_linear(&two, &b)? {
            SolveOutcome::NoSolution => println!("2x = {rhs} (mod 4): no solution"),
            SolveOutcome::ZmodSolution { particular, kernel } => println!(
                "2x = {rhs} (mod 4): x = {} with {} kernel generator(s)",
                particular[0],
                kernel.len()
            ),
            SolveOutcome::FieldSolution { .. } => unreachable!(),
        }
    }

    // cyclotomic traces: zeta itself has trace zero, rational elements scale
    for d in 3..=5u8 {
        let one = CycInt::one(d);
        let zeta = CycInt::zeta_pow(d, 1);
        println!(
            "d = {d}: trace(1) = {}, trace(zeta) = {}, zeta * conj(zeta) = 1: {}",
            cyc_trace(&one),
            cyc_trace(&zeta),
            zeta.mul(&zeta.conj()) == one
        );
    }
    Ok(())
}
