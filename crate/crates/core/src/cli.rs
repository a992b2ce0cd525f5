//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification suite reports a failing
//! check, 2 for usage errors and invalid input. Output is deterministic.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::analysis::{check_crystal_axioms, check_perfect_basis, compare_components};
use crate::crystal::{build_graph, BoxOrder};
use crate::error::{Error, Result};
use crate::fock::{
    apply_e, apply_f, apply_h, check_commutators, check_module_structure, check_serre, FockVector,
};
use crate::hecke::central::weight_blocks;
use crate::hecke::{self, check_character_restriction, check_character_weight};
use crate::multipartition::{Multicharge, Multipartition};
use crate::report::AxiomReport;
use crate::weight::wt;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest rank accepted by `crystal-graph`.
pub const MAX_GRAPH_RANK: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Op {
    E,
    F,
    H,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Fock,
    Crystal,
    Perfect,
    Components,
    Hecke,
    All,
}

#[derive(Debug, Parser)]
#[command(
    name = "fock",
    version,
    about = "Fock spaces, crystals and cyclotomic Hecke algebras of affine sl_e"
)]
pub struct Cli {
    /// Quantum characteristic e >= 2.
    #[arg(long, global = true, default_value_t = 2)]
    pub e: usize,
    /// Multicharge as comma-separated integers.
    #[arg(long, global = true, default_value = "0", allow_hyphen_values = true)]
    pub s: String,
    /// Largest rank explored by graphs and verification suites.
    #[arg(long = "max-rank", global = true, default_value_t = 4)]
    pub max_rank: usize,
    /// Box order for the signature rule: default or mirror.
    #[arg(long, global = true, default_value = "default")]
    pub order: BoxOrder,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Rank for `blocks`, `hecke-build` and the Hecke suite.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weight of a multipartition.
    Wt { multipartition: String },
    /// Apply e_i, f_i or h_i to a vector given as JSON.
    Apply {
        #[arg(value_enum)]
        op: Op,
        i: usize,
        vector: String,
    },
    /// Crystal graph up to --max-rank.
    CrystalGraph,
    /// Multipartitions of rank --n grouped by weight.
    Blocks,
    /// Run verification suites, one JSON line per check.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Regular representation of the Hecke algebra of rank --n.
    HeckeBuild,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Error::OutputClosed) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn parse_charge(e: usize, s: &str) -> Result<Multicharge> {
    let parts = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidCharge(s.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Multicharge::new(e, parts)
}

fn io(e: std::io::Error) -> Error {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        Error::OutputClosed
    } else {
        Error::Output(e.to_string())
    }
}

fn require_n(cli: &Cli) -> Result<usize> {
    cli.n
        .ok_or_else(|| Error::Parse("--n is required for this command".into()))
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let c = parse_charge(cli.e, &cli.s)?;
    match &cli.command {
        Command::Wt { multipartition } => {
            let mp = Multipartition::parse_with_level(multipartition, c.level())?;
            let w = wt(&mp, &c);
            match cli.format {
                Format::Text => writeln!(out, "{w}"),
                _ => writeln!(out, "{}", w.to_json()),
            }
            .map_err(io)?;
        }
        Command::Apply { op, i, vector } => {
            c.check_residue(*i)?;
            let v = FockVector::from_json(vector)?;
            for k in v.keys() {
                if k.level() != c.level() {
                    return Err(Error::LevelMismatch {
                        expected: c.level(),
                        found: k.level(),
                    });
                }
            }
            let image = match op {
                Op::E => apply_e(*i, &v, &c),
                Op::F => apply_f(*i, &v, &c),
                Op::H => apply_h(*i, &v, &c),
            };
            match cli.format {
                Format::Text => writeln!(out, "{image}"),
                _ => writeln!(out, "{}", image.to_json()),
            }
            .map_err(io)?;
        }
        Command::CrystalGraph => {
            if cli.max_rank > MAX_GRAPH_RANK {
                return Err(Error::ResourceBound(format!(
                    "crystal graphs are limited to rank {MAX_GRAPH_RANK}, got {}",
                    cli.max_rank
                )));
            }
            let g = build_graph(&c, cli.max_rank, cli.order);
            match cli.format {
                Format::Dot => out.write_all(g.to_dot().as_bytes()),
                Format::Json => writeln!(out, "{}", g.to_json()),
                Format::Text => {
                    let mut text = String::new();
                    for node in &g.nodes {
                        text.push_str(&format!(
                            "{} wt={} eps={:?} phi={:?}\n",
                            node.mp, node.wt, node.eps, node.phi
                        ));
                    }
                    for edge in &g.edges {
                        text.push_str(&format!("{} -{}-> {}\n", edge.from, edge.i, edge.to));
                    }
                    out.write_all(text.as_bytes())
                }
            }
            .map_err(io)?;
        }
        Command::Blocks => {
            let n = require_n(cli)?;
            let blocks = weight_blocks(n, &c);
            match cli.format {
                Format::Text => {
                    for (w, members) in &blocks {
                        let names: Vec<String> =
                            members.iter().map(Multipartition::format).collect();
                        writeln!(out, "{w}: {}", names.join(" ")).map_err(io)?;
                    }
                }
                _ => {
                    let docs: Vec<_> = blocks
                        .iter()
                        .map(|(w, members)| {
                            json!({
                                "weight": serde_json::to_value(w).expect("weights serialize"),
                                "members": members.iter().map(Multipartition::format).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    writeln!(out, "{}", json!({ "n": n, "blocks": docs })).map_err(io)?;
                }
            }
        }
        Command::Verify { suite } => return verify(cli, &c, *suite, out),
        Command::HeckeBuild => {
            let rep = hecke::build_algebra(&c, require_n(cli)?)?;
            match cli.format {
                Format::Text => {
                    writeln!(out, "dimension {}", rep.dimension()).map_err(io)?;
                    writeln!(out, "basis {}", rep.labels.join(" ")).map_err(io)?;
                }
                _ => writeln!(out, "{}", rep.to_json()).map_err(io)?,
            }
        }
    }
    Ok(EXIT_OK)
}

fn emit(cli: &Cli, report: &AxiomReport, out: &mut dyn Write) -> Result<()> {
    for check in &report.checks {
        match cli.format {
            Format::Text => {
                let status = if check.passed() { "pass" } else { "fail" };
                let note = if check.informational {
                    " (informational)"
                } else {
                    ""
                };
                writeln!(
                    out,
                    "{status} {}{note} [{} witnesses]",
                    check.axiom,
                    check.witnesses.len()
                )
            }
            _ => writeln!(out, "{}", check.to_json()),
        }
        .map_err(io)?;
    }
    out.flush().map_err(io)
}

fn verify(cli: &Cli, c: &Multicharge, suite: Suite, out: &mut dyn Write) -> Result<i32> {
    let suites = match suite {
        Suite::All => vec![
            Suite::Fock,
            Suite::Crystal,
            Suite::Perfect,
            Suite::Components,
            Suite::Hecke,
        ],
        s => vec![s],
    };
    let n = cli.max_rank;
    let mut ok = true;
    for s in suites {
        let report = match s {
            Suite::Fock => {
                let mut r = check_module_structure(c, n);
                r.push(check_commutators(c, n));
                r.push(check_serre(c, n));
                r
            }
            Suite::Crystal => check_crystal_axioms(&build_graph(c, n, cli.order)),
            Suite::Perfect => check_perfect_basis(c, n, cli.order),
            Suite::Components => compare_components(c, n, cli.order),
            Suite::Hecke => {
                let hn = cli.n.unwrap_or(2);
                let (rep, mut r) = hecke::verify_hecke(c, hn)?;
                if cli.format != Format::Text {
                    let doc = json!({ "hecke": { "e": c.e(), "s": c.charge(), "n": hn, "dimension": rep.dimension() } });
                    writeln!(out, "{doc}").map_err(io)?;
                } else {
                    writeln!(out, "hecke n={hn} dimension {}", rep.dimension()).map_err(io)?;
                }
                r.push(check_character_weight(c, n));
                r.push(check_character_restriction(c, n));
                r
            }
            Suite::All => unreachable!("expanded above"),
        };
        ok &= report.passed();
        emit(cli, &report, out)?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}
