//! Build the dihedral 2-group, list its conjugacy classes and look at the
//! layer structure of the group algebra as a module over itself.
//!
//! Run with: cargo run --release --example group_basics

use endolift::dihedral::make_group;
use endolift::modrep::{GroupKind, ModuleRep};

fn main() -> endolift::Result<()> {
    for d in 3..=5u32 {
        let g = make_group(d)?;
        println!("== d = {d}: group of order {}", g.order());
        let classes = g.conjugacy_classes();
        let sizes: Vec<usize> = classes.iter().map(|c| c.size).collect();
        println!("   {} conjugacy classes, sizes {:?}", classes.len(), sizes);

        let kd = ModuleRep::regular(GroupKind::Dihedral(g), 1);
        let soc = kd.socle();
        let rad = kd.radical();
        println!(
            "   regular module: dim {}, socle dim {}, radical dim {}",
            kd.dim(),
            soc.module.dim(),
            rad.module.dim()
        );

        // the heart rad/soc splits into the two E modules
        let soc_in_rad = rad.inclusion.solve(&soc.inclusion).expect("socle lies in the radical");
        let heart = rad.module.quotient_by(&soc_in_rad).module;
        let e_sigma = endolift::endotriv::e_module(g, endolift::endotriv::Reflection::Sigma, 1);
        println!(
            "   heart rad/soc: dim {} = 2 x {} (each summand an E module)",
            heart.dim(),
            e_sigma.dim()
        );
    }
    Ok(())
}
