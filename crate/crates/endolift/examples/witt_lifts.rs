//! Lifting through the 2-adic truncations: walk the lifting tree of an
//! A-series module to Z/8 and match the four selected lifts against the
//! ledger characters.
//!
//! Run with: cargo run --release --example witt_lifts

use endolift::deform::{four_lifts, lift_character};
use endolift::dihedral::make_group;
use endolift::endotriv::Reflection;
use endolift::modrep::IsoConfig;

fn main() -> endolift::Result<()> {
    let g = make_group(3)?;
    let iso = IsoConfig::default();
    let nu = Reflection::Sigma;
    let n = 1;
    let level = 3;
    let fl = four_lifts(g, nu, n, level, &iso)?;
    println!(
        "A_{{{},{n}}} over Z/2^{level}: solution classes per step (log2): {:?}",
        nu.name(),
        fl.tangent_bits_per_step
    );
    println!("class representatives: 1, z, r, sigma, tau");
    for (i, lift) in fl.lifts.iter().enumerate() {
        println!(
            "lift {i}: traces {:?}  (ledger target {:?})",
            lift_character(lift),
            fl.ledger_values[i]
        );
    }
    println!("pairwise distinctness certificates:");
    for w in &fl.witnesses {
        match w.class_index {
            Some(k) => println!("  lifts {} vs {}: traces differ on class {k}", w.first, w.second),
            None => println!("  lifts {} vs {}: exhaustive intertwiner search", w.first, w.second),
        }
    }
    // Hom-dimension bookkeeping carried by the ledger
    println!(
        "weighted character pairing {} = exact module count {} - 1; Ext count {}",
        fl.ledger.hom_dim_f, fl.ledger.hom_dim_k, fl.ledger.ext_dim_k
    );
    Ok(())
}
