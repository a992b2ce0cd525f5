//! Chevalley generators acting on the Fock space, with the commutator and
//! Serre relations checked on a truncation.
//!
//! Run with `cargo run --example fock_operators`.

use fock_crystal::fock::{
    apply_e, apply_f, apply_h, check_commutators, check_serre, primitive_dimensions, FockVector,
};
use fock_crystal::multipartition::{Multicharge, Multipartition};

fn main() -> fock_crystal::Result<()> {
    let c = Multicharge::new(2, vec![0])?;
    let v = FockVector::basis(Multipartition::parse("[[2]]")?)
        .add(&FockVector::basis(Multipartition::parse("[[1,1]]")?));
    println!("v       = {v}");
    println!("e_1 v   = {}", apply_e(1, &v, &c));
    println!("f_0 v   = {}", apply_f(0, &v, &c));
    println!("h_1 v   = {}", apply_h(1, &v, &c));

    let c2 = Multicharge::new(3, vec![0, 1])?;
    println!(
        "[e_i, f_j] = delta_ij h_i up to rank 4: {:?}",
        check_commutators(&c2, 4).status
    );
    println!(
        "Serre relations up to rank 4: {:?}",
        check_serre(&c2, 4).status
    );

    // Joint kernel of the e_i on each weight slice of rank 3.
    for (w, d) in primitive_dimensions(3, &c2) {
        if d > 0 {
            println!("  primitive vectors of weight {w}: {d}");
        }
    }
    Ok(())
}
