//! Thin command-line front end over the library.
//!
//! Exit codes: 0 on success, 1 when a verification or scan finds a
//! mismatch, 2 on usage errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dynkin_abelian::orbit::{ClassicalFamily, ClassicalOrbit, Partition, WeightedDiagram};
use dynkin_abelian::report::{diagram_report, orbit_report, OrbitReport, ReportOptions};
use dynkin_abelian::root_system::{Family, RootSystem, SimpleType};
use dynkin_abelian::scan::scan_family;
use dynkin_abelian::tables::{table_rows, verify_all, TableId};
use dynkin_abelian::{grade, reduce_diagram, reduce_partition, CommutationGraph, ReductionOutcome};

#[derive(Parser)]
#[command(
    name = "dynkin-abelian",
    version,
    about = "Dynkin gradings and maximal abelian subspaces in g_1"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report parity, grading, dim g_1, exact maximum abelian dimension and
    /// the classical prediction for one orbit or diagram
    OrbitInfo {
        #[command(flatten)]
        input: OrbitInput,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
        /// Stop the search as soon as half of dim g_1 is reached
        #[arg(long)]
        cap: Option<CapKind>,
        /// Also enumerate all independent sets of this cardinality
        #[arg(long, value_name = "D")]
        enumerate: Option<usize>,
    },
    /// Compute the strictly odd reduction of an odd orbit
    Reduce {
        #[command(flatten)]
        input: OrbitInput,
    },
    /// Verify or print the embedded reference tables
    Tables {
        /// Recompute every row and compare
        #[arg(long, conflicts_with = "print")]
        verify: bool,
        /// Print the rows of one table (G2s, F4s, E6s, E7s, E8s, F4o, E6o,
        /// E7o, E8o)
        #[arg(long, value_name = "TABLE")]
        print: Option<String>,
    },
    /// Scan all orbits of a classical family up to a rank, comparing the
    /// closed-form prediction with the exact graph search
    Scan {
        /// Family: A, B, C or D
        #[arg(long)]
        family: String,
        /// Largest rank to scan (defaults: 10 for A, 8 for B/C/D)
        #[arg(long)]
        max_rank: Option<usize>,
        /// Allow ranks beyond the default guard
        #[arg(long)]
        force: bool,
    },
    /// Dump the non-commutation graph of g_1 as an adjacency list
    GraphDump {
        #[command(flatten)]
        input: OrbitInput,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum CapKind {
    /// Cap the search at half of dim g_1
    Half,
}

#[derive(Args)]
struct OrbitInput {
    /// Family: A, B, C, D, G2, F4, E6, E7 or E8
    #[arg(long)]
    family: String,
    /// Rank (optional with --partition, which determines it)
    #[arg(long)]
    rank: Option<usize>,
    /// Partition such as "8,6,3,3,2,1,1" (classical families)
    #[arg(long, conflicts_with = "diagram")]
    partition: Option<String>,
    /// Space-separated diagram weights such as "2 0 1 0 1 1"
    #[arg(long)]
    diagram: Option<String>,
}

enum Input {
    Orbit(ClassicalOrbit),
    Diagram(WeightedDiagram),
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_input(input: &OrbitInput) -> Result<Input, String> {
    let family: Family = input.family.parse().map_err(|e| format!("{e}"))?;
    match (&input.partition, &input.diagram) {
        (Some(p), None) => {
            let classical = ClassicalFamily::from_family(family)
                .ok_or_else(|| format!("family {family} takes a diagram, not a partition"))?;
            let partition: Partition = p.parse().map_err(|e| format!("{e}"))?;
            let orbit = ClassicalOrbit::new(classical, partition).map_err(|e| format!("{e}"))?;
            if let Some(rank) = input.rank {
                if rank != orbit.rank() {
                    return Err(format!(
                        "partition gives rank {}, but --rank {rank} was passed",
                        orbit.rank()
                    ));
                }
            }
            Ok(Input::Orbit(orbit))
        }
        (None, Some(d)) => {
            let rank = match (input.rank, family) {
                (Some(r), _) => r,
                (None, Family::G2) => 2,
                (None, Family::F4) => 4,
                (None, Family::E6) => 6,
                (None, Family::E7) => 7,
                (None, Family::E8) => 8,
                (None, _) => d.split_whitespace().count(),
            };
            let stype = SimpleType::new(family, rank).map_err(|e| format!("{e}"))?;
            let diagram = WeightedDiagram::parse(stype, d).map_err(|e| format!("{e}"))?;
            Ok(Input::Diagram(diagram))
        }
        _ => Err("exactly one of --partition or --diagram is required".to_string()),
    }
}

fn print_report(r: &OrbitReport) {
    println!("type:        {}", r.stype);
    if let Some(p) = &r.partition {
        println!("partition:   {p}");
    }
    println!("parity:      {}", r.parity);
    println!("diagram:     {}", r.diagram);
    let dims: Vec<String> = r.dims.iter().map(|(j, n)| format!("g_{j}: {n}")).collect();
    println!("dims:        {}", dims.join(", "));
    println!("dim g_1:     {}", r.dim_g1);
    println!(
        "g_0 action:  {}",
        if r.g0_generates_g1 {
            "generates g_1"
        } else {
            "does NOT generate g_1"
        }
    );
    println!(
        "max abelian: {} ({})",
        r.mis.size,
        if r.mis.capped_by_bound {
            "reached the half bound"
        } else if r.mis.proven_optimal {
            "proven optimal"
        } else {
            "unproven"
        }
    );
    let witness: Vec<String> = r
        .mis
        .witness
        .iter()
        .map(|c| {
            let v: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            format!("[{}]", v.join(" "))
        })
        .collect();
    println!("witness:     {}", witness.join(" "));
    if let Some(c) = &r.classifier {
        let cands: Vec<String> = c
            .candidates
            .iter()
            .map(|cand| format!("{}={}", cand.label, cand.value))
            .collect();
        println!("s-values:    {:?}", c.s);
        println!(
            "predicted:   {} (candidates: {}) half-abelian predicted: {}",
            c.predicted_max,
            if cands.is_empty() {
                "-".to_string()
            } else {
                cands.join(", ")
            },
            c.half_abelian_predicted
        );
    }
    if let Some(sets) = &r.enumerated {
        println!("enumerated:  {} set(s)", sets.len());
        for s in sets {
            println!("  {s:?}");
        }
    }
}

fn run_orbit_info(
    input: &OrbitInput,
    json: bool,
    cap: Option<CapKind>,
    enumerate: Option<usize>,
) -> ExitCode {
    let options = ReportOptions {
        cap_half: cap == Some(CapKind::Half),
        enumerate,
    };
    let report = match parse_input(input) {
        Ok(Input::Orbit(orbit)) => orbit_report(&orbit, options),
        Ok(Input::Diagram(d)) => diagram_report(&d, None, options),
        Err(e) => return usage_error(&e),
    };
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        print_report(&report);
    }
    ExitCode::SUCCESS
}

fn run_reduce(input: &OrbitInput) -> ExitCode {
    match parse_input(input) {
        Ok(Input::Orbit(orbit)) => {
            let d = dynkin_abelian::partition_to_diagram(&orbit);
            match reduce_diagram(&d) {
                Ok(ReductionOutcome::Reduced(r)) => {
                    println!("diagram:   {d}");
                    println!("subtype:   {}", r.subtype);
                    println!("piece:     {}", r.subdiagram);
                    println!("embedding: {:?}", r.embedding);
                    match reduce_partition(&orbit) {
                        Ok(reduced) => println!("partition: {}", reduced.partition()),
                        Err(e) => println!("partition: {e}"),
                    }
                    ExitCode::SUCCESS
                }
                Ok(other) => {
                    println!("{other:?}");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Ok(Input::Diagram(d)) => match reduce_diagram(&d) {
            Ok(ReductionOutcome::Reduced(r)) => {
                println!("subtype:   {}", r.subtype);
                println!("piece:     {}", r.subdiagram);
                println!("embedding: {:?}", r.embedding);
                ExitCode::SUCCESS
            }
            Ok(other) => {
                println!("{other:?}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Err(e) => usage_error(&e),
    }
}

fn run_tables(verify: bool, print: Option<String>) -> ExitCode {
    if let Some(id) = print {
        let id: TableId = match id.parse() {
            Ok(id) => id,
            Err(e) => return usage_error(&format!("{e}")),
        };
        for row in table_rows(id) {
            println!("{}", row.to_line());
        }
        return ExitCode::SUCCESS;
    }
    if verify {
        let reports = verify_all();
        let mut bad = 0;
        for r in &reports {
            println!("{r}");
            if !r.ok() {
                bad += 1;
            }
        }
        println!("{} rows, {} mismatches", reports.len(), bad);
        return if bad == 0 {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        };
    }
    usage_error("pass --verify or --print <TABLE>")
}

fn run_scan(family: &str, max_rank: Option<usize>, force: bool) -> ExitCode {
    let family: Family = match family.parse() {
        Ok(f) => f,
        Err(e) => return usage_error(&format!("{e}")),
    };
    let Some(classical) = ClassicalFamily::from_family(family) else {
        return usage_error("scan covers the classical families A, B, C, D");
    };
    let guard = if classical == ClassicalFamily::A {
        10
    } else {
        8
    };
    let max_rank = max_rank.unwrap_or(guard);
    if max_rank > guard && !force {
        return usage_error(&format!(
            "rank {max_rank} is beyond the default guard {guard}; pass --force to run anyway"
        ));
    }
    let rows = scan_family(classical, max_rank);
    let mut disagreements = 0;
    println!(
        "{:<4} {:<24} {:>7} {:>9} {:>6} {:>6}  verdict",
        "type", "partition", "dim g1", "predicted", "graph", "half"
    );
    for r in &rows {
        if !r.agree {
            disagreements += 1;
        }
        println!(
            "{:<4} {:<24} {:>7} {:>9} {:>6} {:>6}  {}",
            format!("{}{}", r.family, r.rank),
            r.partition,
            r.dim_g1,
            r.predicted_max,
            r.graph_max,
            r.half_abelian,
            if r.agree { "agree" } else { "DISAGREE" }
        );
    }
    println!("{} orbits, {} disagreements", rows.len(), disagreements);
    if disagreements == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_graph_dump(input: &OrbitInput) -> ExitCode {
    let diagram = match parse_input(input) {
        Ok(Input::Orbit(orbit)) => dynkin_abelian::partition_to_diagram(&orbit),
        Ok(Input::Diagram(d)) => d,
        Err(e) => return usage_error(&e),
    };
    let rs = RootSystem::build(diagram.stype());
    let grading = grade(&rs, &diagram).expect("diagram matches its own type");
    let graph = CommutationGraph::from_grading(&grading);
    print!("{}", graph.dump());
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::OrbitInfo {
            input,
            json,
            cap,
            enumerate,
        } => run_orbit_info(&input, json, cap, enumerate),
        Command::Reduce { input } => run_reduce(&input),
        Command::Tables { verify, print } => run_tables(verify, print),
        Command::Scan {
            family,
            max_rank,
            force,
        } => run_scan(&family, max_rank, force),
        Command::GraphDump { input } => run_graph_dump(&input),
    }
}
