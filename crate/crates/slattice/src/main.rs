use std::io::Read;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use slattice::format::{
    self, class_report_json, diagram_dot, diagram_json, nu_tree_json, parse_signature,
    parse_tree_input, tree_json,
};
use slattice_core::lattice::DEFAULT_ELEMENT_LIMIT;
use slattice_core::{nu, props, tamari, weak_order};
use slattice_core::{SDecreasingTree, WeakComposition};

/// Explore s-weak orders and s-Tamari lattices: enumeration, Hasse
/// diagrams, lattice verification sweeps, projections and the nu-Tamari
/// bijections.
#[derive(Parser)]
#[command(name = "slattice", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Weak,
    Tamari,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Down,
    Up,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapTarget {
    #[value(name = "nu-path")]
    NuPath,
    #[value(name = "nu-tree")]
    NuTree,
    #[value(name = "s-perm")]
    SPerm,
}

#[derive(Args)]
struct SignatureArg {
    /// Signature as comma-separated non-negative integers, e.g. 0,2,2
    #[arg(long = "s")]
    signature: String,
}

#[derive(Subcommand)]
enum Command {
    /// List all elements of the chosen lattice in canonical order
    Enumerate {
        #[command(flatten)]
        sig: SignatureArg,
        #[arg(long, value_enum, default_value = "weak")]
        kind: Kind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Emit the Hasse diagram as DOT or JSON
    Hasse {
        #[command(flatten)]
        sig: SignatureArg,
        #[arg(long, value_enum, default_value = "weak")]
        kind: Kind,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Run structural checks and report machine-readable verdicts
    Verify {
        #[command(flatten)]
        sig: SignatureArg,
        /// Comma-separated subset of: lattice, semidistributive, polygonal,
        /// hh, sublattice, quotient, nu-iso
        #[arg(
            long,
            default_value = "lattice,semidistributive,polygonal,hh,sublattice,quotient,nu-iso"
        )]
        checks: String,
        /// Element-count guard (also settable via SLATTICE_MAX_ELEMENTS)
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Join of two trees
    Join {
        #[command(flatten)]
        sig: SignatureArg,
        /// Trees as JSON documents; read from stdin when absent
        trees: Vec<String>,
    },
    /// Meet of two trees
    Meet {
        #[command(flatten)]
        sig: SignatureArg,
        trees: Vec<String>,
    },
    /// Apply a projection to a tree
    Project {
        #[command(flatten)]
        sig: SignatureArg,
        #[arg(long, value_enum)]
        dir: Direction,
        tree: Option<String>,
    },
    /// Map a tree through one of the bijections
    Map {
        #[command(flatten)]
        sig: SignatureArg,
        #[arg(long, value_enum)]
        to: MapTarget,
        tree: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Congruence classes of the s-weak order (zero-free signatures)
    Classes {
        #[command(flatten)]
        sig: SignatureArg,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Cardinalities of the s-weak order and the s-Tamari lattice
    Count {
        #[command(flatten)]
        sig: SignatureArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn element_limit(flag: Option<usize>) -> Result<usize> {
    if let Some(limit) = flag {
        return Ok(limit);
    }
    match std::env::var("SLATTICE_MAX_ELEMENTS") {
        Ok(v) => v
            .parse::<usize>()
            .context("SLATTICE_MAX_ELEMENTS must be a non-negative integer"),
        Err(_) => Ok(DEFAULT_ELEMENT_LIMIT),
    }
}

/// Collects tree documents from the arguments, falling back to one JSON
/// document per non-empty stdin line.
fn tree_inputs(args: &[String], sig: &WeakComposition, want: usize) -> Result<Vec<SDecreasingTree>> {
    let mut texts: Vec<String> = args.to_vec();
    if texts.is_empty() {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .context("reading trees from stdin")?;
        texts = buffer
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(String::from)
            .collect();
    }
    if texts.len() != want {
        bail!("expected {want} tree document(s), got {}", texts.len());
    }
    texts
        .iter()
        .map(|t| parse_tree_input(t, Some(sig)))
        .collect()
}

fn print_elements(elements: &[SDecreasingTree], format: Format) {
    match format {
        Format::Json => {
            let nodes: Vec<Value> = elements.iter().map(format::node_value).collect();
            println!("{}", json!({ "elements": nodes }));
        }
        _ => {
            for t in elements {
                println!("{}", tree_json(t));
            }
        }
    }
}

fn check_names(list: &str) -> Result<Vec<&'static str>> {
    let known = [
        "lattice",
        "semidistributive",
        "polygonal",
        "hh",
        "sublattice",
        "quotient",
        "nu-iso",
    ];
    let mut out = Vec::new();
    for name in list.split(',').map(str::trim).filter(|n| !n.is_empty()) {
        let Some(&found) = known.iter().find(|&&k| k == name) else {
            bail!("unknown check {name:?}; known: {}", known.join(", "));
        };
        out.push(found);
    }
    if out.is_empty() {
        bail!("no checks requested");
    }
    Ok(out)
}

fn run_verify(sig: &WeakComposition, checks: &str, limit: Option<usize>) -> Result<bool> {
    let limit = element_limit(limit)?;
    let names = check_names(checks)?;
    let mut verdicts = serde_json::Map::new();
    let mut all_ok = true;
    for name in names {
        let verdict = match name {
            "lattice" => match props::verify_lattice(sig, limit)? {
                Ok(()) => json!({ "ok": true }),
                Err(cex) => json!({ "ok": false, "counterexample": format!("{cex:?}") }),
            },
            "semidistributive" => match props::verify_semidistributive(sig, limit)? {
                Ok(()) => json!({ "ok": true }),
                Err(cex) => json!({ "ok": false, "counterexample": format!("{cex:?}") }),
            },
            "polygonal" => match props::classify_polygons(sig, limit)? {
                Ok(reports) => {
                    let mut census = std::collections::BTreeMap::new();
                    for r in &reports {
                        *census.entry(r.shape.to_string()).or_insert(0u64) += 1;
                    }
                    json!({ "ok": true, "polygons": census })
                }
                Err(cex) => json!({ "ok": false, "counterexample": format!("{cex:?}") }),
            },
            "hh" => match props::verify_hh(sig, limit)? {
                Ok(report) => json!({ "ok": true, "polygons": report.polygons }),
                Err(cex) => json!({ "ok": false, "counterexample": format!("{cex:?}") }),
            },
            "sublattice" => match tamari::verify_sublattice(sig, limit)? {
                Ok(()) => json!({ "ok": true }),
                Err(cex) => json!({ "ok": false, "counterexample": format!("{cex:?}") }),
            },
            "quotient" => {
                let report = tamari::verify_quotient(sig, limit)?;
                match report.verdict {
                    Ok(()) => json!({ "ok": true, "classes": report.class_count }),
                    Err(cex) => json!({ "ok": false, "counterexample": format!("{cex:?}") }),
                }
            }
            "nu-iso" => match nu::verify_nu_isomorphism(sig, limit)? {
                Ok(()) => json!({ "ok": true }),
                Err(cex) => json!({ "ok": false, "counterexample": cex.reason }),
            },
            _ => unreachable!(),
        };
        if verdict["ok"] != json!(true) {
            all_ok = false;
        }
        verdicts.insert(name.to_string(), verdict);
    }
    println!(
        "{}",
        json!({ "s": sig.entries(), "ok": all_ok, "checks": Value::Object(verdicts) })
    );
    Ok(all_ok)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Enumerate { sig, kind, format } => {
            let sig = parse_signature(&sig.signature)?;
            let elements = match kind {
                Kind::Weak => slattice_core::enumerate_trees(&sig),
                Kind::Tamari => tamari::enumerate_tamari(&sig),
            };
            print_elements(&elements, format);
        }
        Command::Hasse { sig, kind, format } => {
            let sig = parse_signature(&sig.signature)?;
            let diagram = match kind {
                Kind::Weak => weak_order::hasse(&sig),
                Kind::Tamari => tamari::tamari_hasse(&sig),
            };
            match format {
                Format::Json => println!("{}", diagram_json(&sig, &diagram)),
                _ => print!("{}", diagram_dot(&diagram)),
            }
        }
        Command::Verify { sig, checks, limit } => {
            let sig = parse_signature(&sig.signature)?;
            return run_verify(&sig, &checks, limit);
        }
        Command::Join { sig, trees } => {
            let sig = parse_signature(&sig.signature)?;
            let parsed = tree_inputs(&trees, &sig, 2)?;
            let result = weak_order::join(&parsed[0], &parsed[1]).map_err(|e| anyhow!(e))?;
            println!("{}", tree_json(&result));
        }
        Command::Meet { sig, trees } => {
            let sig = parse_signature(&sig.signature)?;
            let parsed = tree_inputs(&trees, &sig, 2)?;
            let result = weak_order::meet(&parsed[0], &parsed[1]).map_err(|e| anyhow!(e))?;
            println!("{}", tree_json(&result));
        }
        Command::Project { sig, dir, tree } => {
            let sig = parse_signature(&sig.signature)?;
            let trees = tree_inputs(&tree.into_iter().collect::<Vec<_>>(), &sig, 1)?;
            let image = match dir {
                Direction::Down => tamari::pi_down(&trees[0]),
                Direction::Up => tamari::pi_up(&trees[0]),
            };
            println!("{}", tree_json(&image));
        }
        Command::Map {
            sig,
            to,
            tree,
            format,
        } => {
            let sig = parse_signature(&sig.signature)?;
            let trees = tree_inputs(&tree.into_iter().collect::<Vec<_>>(), &sig, 1)?;
            let t = &trees[0];
            match to {
                MapTarget::NuPath => {
                    let path = nu::tree_to_path(t).map_err(|e| anyhow!(e))?;
                    match format {
                        Format::Json => println!(
                            "{}",
                            json!({ "nu": path.nu().to_string(), "path": path.steps().to_string() })
                        ),
                        _ => println!("{}", path.steps()),
                    }
                }
                MapTarget::NuTree => {
                    let img = nu::tree_to_nutree(t).map_err(|e| anyhow!(e))?;
                    println!("{}", nu_tree_json(&img));
                }
                MapTarget::SPerm => {
                    let word = t.s_permutation().map_err(|e| anyhow!(e))?;
                    match format {
                        Format::Json => println!("{}", json!({ "word": word })),
                        _ => {
                            let sep = if t.n() > 9 { "," } else { "" };
                            let text: Vec<String> = word.iter().map(|l| l.to_string()).collect();
                            println!("{}", text.join(sep));
                        }
                    }
                }
            }
        }
        Command::Classes { sig, limit } => {
            let sig = parse_signature(&sig.signature)?;
            let limit = element_limit(limit)?;
            let partition = tamari::tamari_classes(&sig, limit).map_err(|e| anyhow!(e))?;
            println!("{}", class_report_json(&partition));
        }
        Command::Count { sig, format } => {
            let sig = parse_signature(&sig.signature)?;
            let weak = slattice_core::enumerate_trees(&sig).len();
            let tam = tamari::enumerate_tamari(&sig).len();
            match format {
                Format::Json => println!("{}", json!({ "weak": weak, "tamari": tam })),
                _ => println!("weak:{weak} tamari:{tam}"),
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
