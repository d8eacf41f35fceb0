//! Command line frontend for the chamber-weight polytope library.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use mv_polytopes::am::{am, counterexample_input, counterexample_lower_values, AmReport};
use mv_polytopes::bz::BZDatum;
use mv_polytopes::crystal::{
    binf_graph, e_polytope, e_star_polytope, f_polytope, f_star_polytope, hw_crystal_graph,
    NODE_CAP,
};
use mv_polytopes::string_data::validate;
use mv_polytopes::{Error, Result, RootSystem};

use mvp::emit::{graph_dot, graph_json};
use mvp::format::{datum_from_file, file_from_datum, parse, render};

const USAGE_EXIT: u8 = 64;

#[derive(Parser)]
#[command(name = "mvp", version, about = "Exact computations with MV polytopes")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    /// Lowering operator f_j.
    Fj,
    /// Raising operator e_j (exits 1 when undefined).
    Ej,
    /// Starred lowering operator, acting at the top vertex.
    Fjstar,
    /// Starred raising operator (exits 1 when undefined).
    Ejstar,
    /// Candidate reflection-based lowering operator; prints a comparison
    /// report on stderr.
    Am,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a datum file: edge inequalities, tropical relations, and (for
    /// doubly-laced types) the string round-trip.
    Verify { file: PathBuf },
    /// Apply a crystal operator to a datum file; writes the result to
    /// stdout as JSON.
    Op {
        #[arg(value_enum)]
        which: OpKind,
        /// Letter, 1-based.
        #[arg(long)]
        j: usize,
        file: PathBuf,
    },
    /// Emit a crystal graph, either B(lambda) or a ball in the stable
    /// crystal.
    Graph {
        /// Root system name (A1..A5, C2, C3).
        #[arg(long = "type")]
        type_name: String,
        /// Dominant coweight in coroot coordinates, e.g. "1,1".
        #[arg(long)]
        lambda: Option<String>,
        /// Lowering depth below the top of the stable crystal.
        #[arg(long)]
        depth: Option<usize>,
        /// Reduced word for w_0 (1-based letters, e.g. "1,2,1") used for
        /// the Lusztig labels.
        #[arg(long)]
        word: Option<String>,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },
    /// Compare the candidate operator against f_j over a ball in the
    /// stable crystal; always exits 0, mismatches go to stdout.
    Amscan {
        #[arg(long = "type")]
        type_name: String,
        #[arg(long)]
        depth: usize,
        /// Letters to test, 1-based, e.g. "1,3" (default: all).
        #[arg(long)]
        j: Option<String>,
    },
    /// Print the family member (parameter x) on which the candidate
    /// operator for letter 1 breaks.
    Counterexample {
        #[arg(long, default_value_t = 2)]
        x: i64,
    },
}

fn error_exit(err: &Error) -> u8 {
    match err {
        Error::Unsupported(_) => 3,
        Error::CapExceeded(_) => 4,
        Error::Parse(_) | Error::InvalidCartan(_) | Error::NotFiniteType(_) => USAGE_EXIT,
        _ => 2,
    }
}

fn node_cap() -> Result<usize> {
    match std::env::var("MVP_NODE_CAP") {
        Ok(v) => v
            .parse()
            .map_err(|_| Error::Parse(format!("MVP_NODE_CAP must be a count, got {v:?}"))),
        Err(_) => Ok(NODE_CAP),
    }
}

fn load(path: &PathBuf) -> Result<(Arc<RootSystem>, BZDatum)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    datum_from_file(&parse(&text)?)
}

fn parse_list(text: &str, what: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|c| {
            c.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad {what} entry {c:?}")))
        })
        .collect()
}

/// 1-based comma-separated letters from the command line.
fn parse_letters(text: &str, rank: usize) -> Result<Vec<usize>> {
    parse_list(text, "letter")?
        .into_iter()
        .map(|j| {
            if j >= 1 && (j as usize) <= rank {
                Ok(j as usize - 1)
            } else {
                Err(Error::Parse(format!("letter {j} out of range 1..={rank}")))
            }
        })
        .collect()
}

fn check_letter(j: usize, rank: usize) -> Result<usize> {
    if j >= 1 && j <= rank {
        Ok(j - 1)
    } else {
        Err(Error::Parse(format!("letter {j} out of range 1..={rank}")))
    }
}

fn print_datum(bz: &BZDatum) {
    print!("{}", render(&file_from_datum(bz)));
}

fn classical_vertex_list(bz: &BZDatum) -> String {
    let sys = &bz.sys;
    let mut pts: Vec<Vec<i64>> = (0..sys.weyl.order())
        .map(|w| {
            sys.datum
                .coweight_to_classical(&bz.vertex(w))
                .expect("the builtin chart is present")
        })
        .collect();
    pts.sort();
    pts.dedup();
    let parts: Vec<String> = pts
        .iter()
        .map(|p| {
            let coords: Vec<String> = p.iter().map(|c| c.to_string()).collect();
            format!("({})", coords.join(","))
        })
        .collect();
    parts.join(", ")
}

fn am_summary(sys: &RootSystem, report: &AmReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("letter {}: c = {}\n", report.j + 1, report.c));
    if report.edge_violations.is_empty() {
        out.push_str("edges: ok\n");
    } else {
        out.push_str(&format!("edges: {} violation(s)\n", report.edge_violations.len()));
    }
    if report.plucker.ok() {
        out.push_str("tropical relations: ok\n");
    } else {
        let v = &report.plucker.violations[0];
        out.push_str(&format!(
            "tropical relations: {} violation(s), first lhs = {}, rhs = {}\n",
            report.plucker.violations.len(),
            v.lhs,
            v.rhs
        ));
    }
    out.push_str(&format!(
        "equals f: {}\ncontained in f image: {}\n",
        if report.equals_f { "yes" } else { "no" },
        if report.contained_in_f { "yes" } else { "no" }
    ));
    match &report.conditions {
        Some(c) => {
            out.push_str(&format!(
                "conditions: kept={} shifted={} retained={} reflected={} minimal={}\n",
                c.kept, c.shifted, c.retained, c.reflected, c.minimal
            ));
            for (w, r) in &c.reflected_points {
                let coords: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                let word: String = sys
                    .weyl
                    .lex_least_word(*w)
                    .iter()
                    .map(|x| (x + 1).to_string())
                    .collect();
                out.push_str(&format!(
                    "reflected point at w = {word}: ({})\n",
                    coords.join(",")
                ));
            }
        }
        None => out.push_str("conditions: skipped (edge violations)\n"),
    }
    out
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Verify { file } => {
            let (sys, bz) = load(&file)?;
            let edge_positions = sys.weyl.order() * sys.rank() / 2;
            let edges = bz.check_edges();
            let plucker = bz.plucker_report();
            println!(
                "edge inequalities: {} checked, {} violated",
                edge_positions,
                edges.len()
            );
            println!(
                "tropical relations: {} hold, {} vacuous, {} unsupported, {} violated",
                plucker.holds,
                plucker.vacuous,
                plucker.unsupported,
                plucker.violations.len()
            );
            validate(&bz)?;
            println!("ok");
            Ok(0)
        }
        Cmd::Op { which, j, file } => {
            let (sys, bz) = load(&file)?;
            let j = check_letter(j, sys.rank())?;
            validate(&bz)?;
            match which {
                OpKind::Fj => {
                    print_datum(&f_polytope(&bz, j)?);
                    Ok(0)
                }
                OpKind::Ej => match e_polytope(&bz, j)? {
                    Some(out) => {
                        print_datum(&out);
                        Ok(0)
                    }
                    None => Ok(1),
                },
                OpKind::Fjstar => {
                    print_datum(&f_star_polytope(&bz, j)?);
                    Ok(0)
                }
                OpKind::Ejstar => match e_star_polytope(&bz, j)? {
                    Some(out) => {
                        print_datum(&out);
                        Ok(0)
                    }
                    None => Ok(1),
                },
                OpKind::Am => {
                    let report = am(&bz, j)?;
                    eprint!("{}", am_summary(&sys, &report));
                    print_datum(&report.output);
                    Ok(0)
                }
            }
        }
        Cmd::Graph { type_name, lambda, depth, word, format } => {
            let sys = RootSystem::builtin(&type_name)?;
            let word = match word {
                Some(text) => Some(parse_letters(&text, sys.rank())?),
                None => None,
            };
            let cap = node_cap()?;
            let (graph, lambda, depth) = match (lambda, depth) {
                (Some(lam), None) => {
                    let lam = parse_list(&lam, "lambda")?;
                    let graph = hw_crystal_graph(&sys, &lam, word, cap)?;
                    (graph, Some(lam), None)
                }
                (None, Some(d)) => (binf_graph(&sys, d, word, cap)?, None, Some(d)),
                _ => {
                    return Err(Error::Parse(
                        "give exactly one of --lambda and --depth".into(),
                    ))
                }
            };
            match format {
                GraphFormat::Dot => print!("{}", graph_dot(&graph)),
                GraphFormat::Json => {
                    print!("{}", graph_json(&type_name, lambda, depth, &graph))
                }
            }
            Ok(0)
        }
        Cmd::Amscan { type_name, depth, j } => {
            let sys = RootSystem::builtin(&type_name)?;
            let js = match j {
                Some(text) => parse_letters(&text, sys.rank())?,
                None => (0..sys.rank()).collect(),
            };
            let scan = mv_polytopes::am::am_scan(&sys, depth, &js, node_cap()?)?;
            println!("nodes: {}, checked: {}", scan.nodes, scan.checked);
            for mm in &scan.mismatches {
                let coords: Vec<String> = mm.weight.iter().map(|x| x.to_string()).collect();
                let lus: Vec<String> = mm.lusztig.iter().map(|x| x.to_string()).collect();
                println!(
                    "failure node = {}, letter = {}, weight = ({}), lusztig = ({}), contained in f image = {}, output valid = {}",
                    mm.node,
                    mm.j + 1,
                    coords.join(","),
                    lus.join(","),
                    if mm.contained_in_f { "yes" } else { "no" },
                    if mm.output_valid { "yes" } else { "no" }
                );
            }
            println!("{} failures", scan.mismatches.len());
            Ok(0)
        }
        Cmd::Counterexample { x } => {
            let sys = RootSystem::builtin("C3")?;
            let input = counterexample_input(&sys, x)?;
            let report = am(&input, 0)?;
            let mut notes = format!("family member x = {x}\n");
            notes.push_str(&format!(
                "input vertices: {}\n",
                classical_vertex_list(&input)
            ));
            notes.push_str(&am_summary(&sys, &report));
            notes.push_str("candidate output on the lower chamber weights:\n");
            for (name, value) in counterexample_lower_values(x) {
                let wt = sys.datum.weight_from_pretty(name)?;
                let g = sys
                    .gamma
                    .lookup(&wt)
                    .expect("pretty names label chamber weights");
                assert_eq!(report.output.value(g), value, "closed form at {name}");
                notes.push_str(&format!("  {name} = {value}\n"));
            }
            let g12 = sys
                .gamma
                .lookup(&sys.datum.weight_from_pretty("1-2")?)
                .expect("pretty names label chamber weights");
            notes.push_str(&format!(
                "true lowering differs exactly at 1-2: {} there, candidate {}\n",
                report.f_output.value(g12),
                report.output.value(g12)
            ));
            notes.push_str(&format!(
                "true image vertices: {}\n",
                classical_vertex_list(&report.f_output)
            ));
            notes.push_str(&format!(
                "candidate image vertices: {}\n",
                classical_vertex_list(&report.output)
            ));
            eprint!("{notes}");
            print_datum(&input);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => USAGE_EXIT,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(error_exit(&err))
        }
    }
}
