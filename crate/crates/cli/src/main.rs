//! `cfc` — conflict-free colouring of interval hypergraphs from the shell.
//!
//! Exit codes: 0 success (or a positive verdict), 1 negative verdict from a
//! recognition command, 2 input error, 3 oracle scale exceeded, 4 internal
//! error (a printed certificate failed its self-check).

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use cfc_core::cfdp::{max_cfc, min_cfc};
use cfc_core::cooccurrence::{build_cooccurrence, clique_number};
use cfc_core::ehs::{colouring_to_partition, is_ehs, is_exact_hitting_set, EhPartition};
use cfc_core::gen::{random_hypergraph, random_proper_hypergraph};
use cfc_core::graphs::{
    build_canonical, is_ehig, parse_graph, CanonicalRepresentation, EhigCertificate,
};
use cfc_core::hypergraph::{
    discrete_hypergraph, parse_colouring, parse_hypergraph, verify_cf_colouring,
    IntervalHypergraph,
};
use cfc_core::oracle;

const EXIT_FALSE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_SCALE: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "cfc",
    about = "Optimal conflict-free colouring of interval hypergraphs, exact hitting set recognition, and exactly hittable interval graphs",
    version
)]
struct Cli {
    /// Emit machine-readable JSON instead of the plain text output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an optimum conflict-free colouring of a hypergraph file.
    Solve { file: String },
    /// Decide whether the hypergraph has an exact hitting set.
    Isehs { file: String },
    /// Decide whether the interval graph is exactly hittable.
    Ehig { file: String },
    /// Maximum number of intervals conflict-free colourable with a colour budget.
    Maxcfc {
        file: String,
        #[arg(long, default_value_t = 1)]
        colors: usize,
    },
    /// Convert a conflict-free colouring into a partition into exactly hittable parts.
    Partition {
        hypergraph: String,
        colouring: String,
    },
    /// Canonical interval model of an interval graph.
    Canonical { file: String },
    /// Run a brute-force oracle (desk scale only).
    Oracle {
        name: OracleName,
        file: String,
        #[arg(long, default_value_t = 1)]
        colors: usize,
    },
    /// Generate hypergraph instances.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleName {
    CfcNumber,
    ExactHittingSet,
    MaxCfc,
    MinCooccurrence,
    MinEhPartition,
}

#[derive(Subcommand)]
enum GenKind {
    /// The discrete interval hypergraph: all intervals over n points.
    Discrete {
        #[arg(long)]
        n: usize,
    },
    /// Uniform random intervals.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Random proper interval hypergraph (no containments); m <= n.
    Proper {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn input_err(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.to_string(),
    }
}

fn internal_err(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_INTERNAL,
        message: message.to_string(),
    }
}

fn read_file(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_err(format!("{path}: {e}")))
}

fn load_hypergraph(path: &str) -> Result<IntervalHypergraph, Failure> {
    parse_hypergraph(&read_file(path)?).map_err(|e| input_err(format!("{path}: {e}")))
}

fn points_line(points: &BTreeSet<usize>) -> String {
    points
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Solve { file } => cmd_solve(file, cli.json),
        Command::Isehs { file } => cmd_isehs(file, cli.json),
        Command::Ehig { file } => cmd_ehig(file, cli.json),
        Command::Maxcfc { file, colors } => cmd_maxcfc(file, *colors, cli.json),
        Command::Partition {
            hypergraph,
            colouring,
        } => cmd_partition(hypergraph, colouring, cli.json),
        Command::Canonical { file } => cmd_canonical(file, cli.json),
        Command::Oracle { name, file, colors } => cmd_oracle(*name, file, *colors, cli.json),
        Command::Gen { kind } => cmd_gen(kind, cli.json),
    }
}

fn cmd_solve(file: &str, json: bool) -> Result<u8, Failure> {
    let h = load_hypergraph(file)?;
    let (k, colouring) = min_cfc(&h);
    if h.m() > 0 && !verify_cf_colouring(&h, &colouring) {
        return Err(internal_err("solver produced an invalid colouring"));
    }
    if json {
        println!(
            "{}",
            json!({ "k": k, "colouring": colouring.as_slice() })
        );
    } else {
        println!("k={k}");
        println!("{colouring}");
    }
    Ok(0)
}

fn cmd_isehs(file: &str, json: bool) -> Result<u8, Failure> {
    let h = load_hypergraph(file)?;
    match is_ehs(&h) {
        (true, Some(set)) => {
            if !is_exact_hitting_set(&h, &set) {
                return Err(internal_err("recogniser returned a non-exact hitting set"));
            }
            if json {
                println!(
                    "{}",
                    json!({ "exactly_hittable": true, "hitting_set": set })
                );
            } else {
                println!("{}", points_line(&set));
            }
            Ok(0)
        }
        _ => {
            if json {
                println!("{}", json!({ "exactly_hittable": false }));
            } else {
                eprintln!("not exactly hittable");
            }
            Ok(EXIT_FALSE)
        }
    }
}

fn canonical_text(model: &CanonicalRepresentation) -> String {
    let mut out = String::new();
    out.push_str(&model.hypergraph.to_string());
    for (v, idx) in &model.interval_of_vertex {
        writeln!(out, "# vertex {} -> interval {}", v, idx + 1).expect("write to string");
    }
    for (i, z) in model.anchors.iter().enumerate() {
        writeln!(out, "# z {} = {}", i + 1, z).expect("write to string");
    }
    out
}

fn canonical_json(model: &CanonicalRepresentation) -> serde_json::Value {
    json!({
        "n": model.hypergraph.n(),
        "intervals": model
            .hypergraph
            .intervals()
            .iter()
            .map(|iv| json!([iv.l, iv.r]))
            .collect::<Vec<_>>(),
        "vertex_to_interval": model
            .interval_of_vertex
            .iter()
            .map(|(v, idx)| json!({ "vertex": v, "interval": idx + 1 }))
            .collect::<Vec<_>>(),
        "anchors": model.anchors,
    })
}

fn cmd_ehig(file: &str, json: bool) -> Result<u8, Failure> {
    let g =
        parse_graph(&read_file(file)?).map_err(|e| input_err(format!("{file}: {e}")))?;
    let (verdict, certificate) = is_ehig(&g).map_err(|e| input_err(format!("{file}: {e}")))?;
    match certificate {
        EhigCertificate::HittingSet { model, points } => {
            assert!(verdict);
            if !is_exact_hitting_set(&model.hypergraph, &points)
                || !model.intersection_matches(&g)
            {
                return Err(internal_err("certificate failed its self-check"));
            }
            if json {
                println!(
                    "{}",
                    json!({
                        "exactly_hittable": true,
                        "canonical_model": canonical_json(&model),
                        "hitting_set": points,
                    })
                );
            } else {
                print!("{}", canonical_text(&model));
                println!("hitting: {}", points_line(&points));
            }
            Ok(0)
        }
        EhigCertificate::Forbidden(witness) => {
            assert!(!verdict);
            if !witness.validate(&g) {
                return Err(internal_err("forbidden witness failed its self-check"));
            }
            if json {
                println!(
                    "{}",
                    json!({
                        "exactly_hittable": false,
                        "witness": { "path": witness.path, "independents": witness.independents },
                    })
                );
            } else {
                let path: Vec<String> = witness.path.iter().map(|v| v.to_string()).collect();
                println!("P: {}", path.join(" "));
                println!("X: {}", points_line(&witness.independents));
            }
            Ok(EXIT_FALSE)
        }
    }
}

fn cmd_maxcfc(file: &str, colors: usize, json: bool) -> Result<u8, Failure> {
    if colors == 0 {
        return Err(input_err("--colors must be at least 1"));
    }
    let h = load_hypergraph(file)?;
    let (count, witness) = max_cfc(&h, colors);
    if witness.validate(&h).is_err() {
        return Err(internal_err("witness assigns a representative outside its interval"));
    }
    let g = build_cooccurrence(&h, &witness).map_err(internal_err)?;
    if clique_number(&g, &h) > colors {
        return Err(internal_err("witness clique number exceeds the colour budget"));
    }
    let reps: Vec<String> = (0..h.m())
        .map(|i| match witness.get(i) {
            Some(p) => p.to_string(),
            None => "-".to_string(),
        })
        .collect();
    if json {
        println!(
            "{}",
            json!({
                "count": count,
                "representatives": (0..h.m()).map(|i| witness.get(i)).collect::<Vec<_>>(),
            })
        );
    } else {
        println!("count={count}");
        println!("{}", reps.join(" "));
    }
    Ok(0)
}

fn partition_text(partition: &EhPartition) -> String {
    let mut out = String::new();
    for (i, (intervals, hits)) in partition.parts.iter().enumerate() {
        let idx: Vec<String> = intervals.iter().map(|j| (j + 1).to_string()).collect();
        writeln!(
            out,
            "part {}: intervals {} hitting {}",
            i + 1,
            idx.join(" "),
            points_line(hits)
        )
        .expect("write to string");
    }
    out
}

fn cmd_partition(hypergraph: &str, colouring: &str, json: bool) -> Result<u8, Failure> {
    let h = load_hypergraph(hypergraph)?;
    let c = parse_colouring(&read_file(colouring)?, h.n())
        .map_err(|e| input_err(format!("{colouring}: {e}")))?;
    let partition =
        colouring_to_partition(&h, &c).map_err(|e| input_err(format!("{colouring}: {e}")))?;
    if partition.validate(&h).is_err() {
        return Err(internal_err("partition failed its self-check"));
    }
    if json {
        println!(
            "{}",
            json!({
                "parts": partition
                    .parts
                    .iter()
                    .map(|(intervals, hits)| json!({
                        "intervals": intervals.iter().map(|j| j + 1).collect::<Vec<_>>(),
                        "hitting": hits,
                    }))
                    .collect::<Vec<_>>(),
            })
        );
    } else {
        print!("{}", partition_text(&partition));
    }
    Ok(0)
}

fn cmd_canonical(file: &str, json: bool) -> Result<u8, Failure> {
    let g =
        parse_graph(&read_file(file)?).map_err(|e| input_err(format!("{file}: {e}")))?;
    let model = build_canonical(&g).map_err(|e| input_err(format!("{file}: {e}")))?;
    if !model.intersection_matches(&g) {
        return Err(internal_err("canonical model failed its self-check"));
    }
    if json {
        println!("{}", canonical_json(&model));
    } else {
        print!("{}", canonical_text(&model));
    }
    Ok(0)
}

fn cmd_oracle(name: OracleName, file: &str, colors: usize, json: bool) -> Result<u8, Failure> {
    let h = load_hypergraph(file)?;
    let scale = |e: oracle::ScaleExceeded| Failure {
        code: EXIT_SCALE,
        message: e.to_string(),
    };
    match name {
        OracleName::CfcNumber => {
            let k = oracle::brute_cfc_number(&h).map_err(scale)?;
            print_number(json, "cfc_number", k);
        }
        OracleName::MaxCfc => {
            if colors == 0 {
                return Err(input_err("--colors must be at least 1"));
            }
            let v = oracle::brute_max_cfc(&h, colors).map_err(scale)?;
            print_number(json, "max_cfc", v);
        }
        OracleName::MinCooccurrence => {
            let v = oracle::brute_min_over_cooccurrence(&h).map_err(scale)?;
            print_number(json, "min_chromatic_over_cooccurrence", v);
        }
        OracleName::MinEhPartition => {
            let v = oracle::brute_min_eh_partition(&h).map_err(scale)?;
            print_number(json, "min_eh_partition", v);
        }
        OracleName::ExactHittingSet => {
            let set = oracle::brute_exact_hitting_set(&h).map_err(scale)?;
            return match set {
                Some(points) => {
                    let points: BTreeSet<usize> = points.into_iter().collect();
                    if !is_exact_hitting_set(&h, &points) {
                        return Err(internal_err("oracle returned a non-exact hitting set"));
                    }
                    if json {
                        println!(
                            "{}",
                            json!({ "exactly_hittable": true, "hitting_set": points })
                        );
                    } else {
                        println!("{}", points_line(&points));
                    }
                    Ok(0)
                }
                None => {
                    if json {
                        println!("{}", json!({ "exactly_hittable": false }));
                    } else {
                        println!("none");
                    }
                    Ok(EXIT_FALSE)
                }
            };
        }
    }
    Ok(0)
}

fn print_number(json: bool, key: &str, value: usize) {
    if json {
        println!("{}", json!({ key: value }));
    } else {
        println!("{value}");
    }
}

fn cmd_gen(kind: &GenKind, json: bool) -> Result<u8, Failure> {
    let h = match kind {
        GenKind::Discrete { n } => {
            discrete_hypergraph(*n).map_err(input_err)?
        }
        GenKind::Random { n, m, seed } => {
            if *n == 0 {
                return Err(input_err("--n must be at least 1"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            random_hypergraph(*n, *m, &mut rng)
        }
        GenKind::Proper { n, m, seed } => {
            if *n == 0 || *m > *n {
                return Err(input_err("need 1 <= m <= n for a proper family"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            random_proper_hypergraph(*n, *m, &mut rng)
        }
    };
    if json {
        println!(
            "{}",
            json!({
                "n": h.n(),
                "intervals": h.intervals().iter().map(|iv| json!([iv.l, iv.r])).collect::<Vec<_>>(),
            })
        );
    } else {
        print!("{h}");
    }
    Ok(0)
}
