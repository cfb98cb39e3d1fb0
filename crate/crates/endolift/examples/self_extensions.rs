//! Dual-number lifts: the two-dimensional tangent space of an A-series
//! module, the restriction fingerprints of its four points, and the matching
//! against the three B-module branches.
//!
//! Run with: cargo run --release --example self_extensions

use endolift::deform::{classify_dual_lift, tangent_space};
use endolift::dihedral::make_group;
use endolift::endotriv::{a_module, Reflection};
use endolift::modrep::{ext1_dim, IsoConfig};

fn main() -> endolift::Result<()> {
    let g = make_group(3)?;
    let iso = IsoConfig::default();
    let nu = Reflection::Sigma;
    let n = 1;
    let a = a_module(g, nu, n, 1, &iso)?;
    println!(
        "A_{{{},{n}}}: dim {}, dim Ext^1(A, A) = {}",
        nu.name(),
        a.dim,
        ext1_dim(&a.module, &a.module)
    );

    let ts = tangent_space(&a.module, &iso)?;
    println!("tangent dimension {} -> {} dual-number lifts", ts.dim, ts.lifts.len());
    for lift in &ts.lifts {
        let (fs, ft) = lift.fingerprint;
        print!(
            "  coefficients {:?}: middle dim {:>2}, restriction splits at (C_sigma, C_tau) = ({:?}, {:?})",
            lift.coeffs,
            lift.ses.middle.dim(),
            fs,
            ft
        );
        if lift.is_zero_class {
            println!("  [zero class: split extension]");
        } else {
            let lam = classify_dual_lift(g, nu, n, lift, &iso)?;
            println!("  -> matches the B-module branch lambda = {}", lam.name());
        }
    }
    Ok(())
}
