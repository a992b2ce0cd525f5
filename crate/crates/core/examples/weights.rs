//! Residues, addable and removable boxes, and the weight of a multipartition.
//!
//! Run with `cargo run --example weights`.

use fock_crystal::multipartition::{residue, Multicharge, Multipartition};
use fock_crystal::weight::{cartan_matrix, pair_coroot, wt};

fn main() -> fock_crystal::Result<()> {
    let c = Multicharge::new(3, vec![0, 1])?;
    let mp = Multipartition::parse("[[2,1],[1]]")?;
    println!("multipartition {mp} at e={} s={:?}", c.e(), c.charge());
    for b in mp.boxes() {
        println!("  box {b} has residue {}", residue(&b, &c)?);
    }

    let w = wt(&mp, &c);
    println!("wt = {w}  ({})", w.to_json());
    println!("Cartan matrix {:?}", cartan_matrix(c.e()));

    // The coroot pairing counts addable minus removable boxes of each residue.
    for i in 0..c.e() {
        let add = mp.addable_boxes(&c, Some(i)).len();
        let rem = mp.removable_boxes(&c, Some(i)).len();
        println!(
            "  i={i}: {add} addable, {rem} removable, <h_i, wt> = {}",
            pair_coroot(i, &w)
        );
    }
    Ok(())
}
