//! The endo-trivial family: the E modules and the A-series with their
//! dimensions, restriction shapes and Xi pairs.
//!
//! Run with: cargo run --release --example endotrivial_family

use endolift::dihedral::make_group;
use endolift::endotriv::{a_series, e_module, is_endotrivial, xi_invariant, Reflection};
use endolift::modrep::IsoConfig;

fn main() -> endolift::Result<()> {
    let d = 3;
    let g = make_group(d)?;
    let iso = IsoConfig::default();

    for nu in [Reflection::Sigma, Reflection::Tau] {
        let e = e_module(g, nu, 1);
        let xi = xi_invariant(&e, &iso)?;
        println!(
            "E_{}: dim {}, endo-trivial {}, Xi = ({}, {})",
            nu.name(),
            e.dim(),
            is_endotrivial(&e),
            xi.a1,
            xi.a2
        );
    }

    for nu in [Reflection::Sigma, Reflection::Tau] {
        for h in a_series(g, nu, 3, 1, &iso)? {
            println!(
                "A_{{{},{}}}: dim {:>2}, Xi = ({}, {}), restriction to each C2: k + free^{}",
                nu.name(),
                h.n,
                h.dim,
                h.xi.a1,
                h.xi.a2,
                h.res_sigma.free,
            );
        }
    }

    // the syzygy shifts Xi diagonally
    let a1 = a_series(g, Reflection::Sigma, 1, 1, &iso)?.remove(1);
    let shifted = xi_invariant(&a1.module.syzygy_module(1), &iso)?;
    println!(
        "Xi(Omega A_{{sigma,1}}) = ({}, {}) = Xi(A) + (1, 1)",
        shifted.a1, shifted.a2
    );
    Ok(())
}
