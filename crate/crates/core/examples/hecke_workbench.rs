//! Builds small cyclotomic Hecke algebras from their presentation and checks
//! the Jucys-Murphy and central-character machinery against block weights.
//!
//! Run with `cargo run --release --example hecke_workbench`.

use fock_crystal::hecke::{build_algebra, central_characters, check_jm, check_relations};
use fock_crystal::multipartition::Multicharge;

fn main() -> fock_crystal::Result<()> {
    // (charge, rank) pairs; level three stops at rank two to stay desk-sized.
    let configs: [(&[i64], usize); 5] = [
        (&[0], 2),
        (&[0], 3),
        (&[0, 1], 2),
        (&[0, 1], 3),
        (&[0, 1, 2], 2),
    ];
    for e in [2, 3] {
        for (s, n) in configs {
            let c = Multicharge::new(e, s.to_vec())?;
            let rep = match build_algebra(&c, n) {
                Ok(rep) => rep,
                Err(err) => {
                    println!("e={e} s={s:?} n={n}: {err}");
                    continue;
                }
            };
            let mut report = check_relations(&rep);
            report.extend(check_jm(&rep));
            let chars = central_characters(&rep);
            report.extend(chars.report.clone());
            println!(
                "e={e} s={s:?} n={n}: D={} characters={} checks={}",
                rep.dimension(),
                chars.attained().count(),
                if report.passed() { "pass" } else { "FAIL" }
            );
            for block in chars.attained() {
                let members: Vec<String> = block.members.iter().map(|m| m.format()).collect();
                println!(
                    "    {}  dim {}  {}",
                    block.character,
                    block.dimension,
                    members.join(" ")
                );
            }
        }
    }
    Ok(())
}
