//! Exact character theory: the irreducible characters, the rational
//! characters rho_l, and the permutation-lattice decompositions.
//!
//! Run with: cargo run --release --example character_table

use endolift::chars::{char_table, perm_character, regular_character};
use endolift::dihedral::{make_group, SubgroupId};

fn main() -> endolift::Result<()> {
    let d = 4;
    let g = make_group(d)?;
    let t = char_table(g);
    println!("character table for the dihedral group of order {}", g.order());
    print!("{:>8} |", "");
    for c in &t.classes {
        print!("{:>10}", format!("(j{},s{})", c.rep.j, c.rep.s));
    }
    println!();
    for (label, cf) in t.labels.iter().zip(&t.irreducibles) {
        print!("{label:>8} |");
        for v in &cf.values {
            match v.rational_value() {
                Some(r) => print!("{r:>10}"),
                None => print!("{:>10}", format!("{:?}", v.coeffs()).replace(", ", ",")),
            }
        }
        println!();
    }
    for l in 0..=(d as usize - 3) {
        let rho = t.rho(l)?;
        println!("rho_{l} values: {:?}", rho.rational_values()?);
    }

    // multiplicity vectors over the rational basis chi1..chi4, rho_0, rho_1
    let ps = perm_character(&t, SubgroupId::CSigma)?;
    let pt = perm_character(&t, SubgroupId::CTau)?;
    let reg = regular_character(&t)?;
    println!("perm D/<sigma> = {:?}", ps.mult);
    println!("perm D/<tau>   = {:?}", pt.mult);
    println!("regular        = {:?}", reg.mult);
    println!("complement of perm D/<sigma> in the regular = {:?}", reg.add(&ps.scale(-1)).mult);
    Ok(())
}
