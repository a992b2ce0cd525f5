//! Kashiwara operators by the signature rule, and the crystal graph in DOT.
//!
//! Run with `cargo run --example crystal_graph > crystal.dot`.

use fock_crystal::crystal::{build_graph, crystal_e, crystal_f, signature, BoxOrder};
use fock_crystal::multipartition::{Multicharge, Multipartition};

fn main() -> fock_crystal::Result<()> {
    let c = Multicharge::new(2, vec![0, 1])?;
    let mp = Multipartition::parse("[[1],[1]]")?;
    for order in BoxOrder::ALL {
        for i in 0..c.e() {
            let sig = signature(i, &mp, &c, order);
            eprintln!(
                "{} i={i}: signature {} reduces to {}, e~ -> {:?}, f~ -> {:?}",
                order.name(),
                sig.word(),
                sig.reduced_word(),
                crystal_e(i, &mp, &c, order).map(|m| m.format()),
                crystal_f(i, &mp, &c, order).map(|m| m.format()),
            );
        }
    }

    let g = build_graph(&c, 3, BoxOrder::Default);
    eprintln!(
        "{} nodes, {} edges up to rank 3",
        g.nodes.len(),
        g.edges.len()
    );
    print!("{}", g.to_dot());
    Ok(())
}
