use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hilbert_depth::{
    candidate_json, check_stanley_candidate_outcome, count_partitions, decomposition_json,
    enumerate_partitions, format_component, format_stanley_part, hdepth, induced_decomposition,
    parse_candidate, parse_partition, parse_spec, partition_json, spec_json, stdepth, table_json,
    Error, ModuleSpec,
};
use serde_json::json;

/// Exact Hilbert depth and Stanley depth of finitely generated multigraded
/// modules over a polynomial ring, presented as direct sums of shifted
/// monomial subquotients.
#[derive(Parser)]
#[command(name = "hdepth", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Hilbert depth together with a witness partition
    Hdepth(ModuleArgs),
    /// Compute the Stanley depth together with a certified decomposition
    Stdepth(ModuleArgs),
    /// Count or list the Hilbert partitions of the module's table
    Partitions(PartitionsArgs),
    /// Show the decomposition induced by a Hilbert partition
    Decompose(DecomposeArgs),
    /// Verify a Stanley decomposition certificate against the module
    Check(CheckArgs),
    /// Adjoin fresh polynomial variables to the module
    Extend(ExtendArgs),
    /// Set all but the leading variables to 1 (plain ideal modules only)
    Specialize(SpecializeArgs),
}

#[derive(Args)]
struct ModuleArgs {
    /// Module description (JSON file)
    module: String,
    /// Emit machine-readable JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PartitionsArgs {
    /// Module description (JSON file)
    module: String,
    /// Keep only partitions of at least this depth
    #[arg(long, default_value_t = 0)]
    min_depth: usize,
    /// List the partitions instead of counting them
    #[arg(long, conflicts_with = "count")]
    list: bool,
    /// Count the partitions exactly (default)
    #[arg(long)]
    count: bool,
    /// Maximum number of partitions to list
    #[arg(long, default_value_t = 1000)]
    limit: usize,
    /// Emit machine-readable JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Module description (JSON file)
    module: String,
    /// Partition to decompose: inline JSON or a file path
    #[arg(long)]
    partition: String,
    /// Emit machine-readable JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CheckArgs {
    /// Module description (JSON file)
    module: String,
    /// Certificate to verify: inline JSON or a file path
    #[arg(long)]
    candidate: String,
    /// Emit machine-readable JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ExtendArgs {
    /// Module description (JSON file)
    module: String,
    /// Number of fresh variables to adjoin
    #[arg(short)]
    m: usize,
}

#[derive(Args)]
struct SpecializeArgs {
    /// Module description (JSON file)
    module: String,
    /// Number of leading variables to keep
    #[arg(long)]
    keep: usize,
}

type Failure = (String, u8);

/// Rust ignores SIGPIPE, so printing a long listing into a closed pipe
/// (`hdepth ... | head`) would panic; restore the conventional behavior.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err((msg, code)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    configure_threads()?;
    match cli.command {
        Command::Hdepth(args) => cmd_hdepth(args),
        Command::Stdepth(args) => cmd_stdepth(args),
        Command::Partitions(args) => cmd_partitions(args),
        Command::Decompose(args) => cmd_decompose(args),
        Command::Check(args) => cmd_check(args),
        Command::Extend(args) => cmd_extend(args),
        Command::Specialize(args) => cmd_specialize(args),
    }
}

/// `HDEPTH_THREADS` caps the rayon pool used by the partition search.
fn configure_threads() -> Result<(), Failure> {
    let Some(raw) = std::env::var_os("HDEPTH_THREADS") else {
        return Ok(());
    };
    let raw = raw.to_string_lossy();
    let threads: usize = raw.parse().map_err(|_| invalid_threads(&raw))?;
    if threads == 0 {
        return Err(invalid_threads(&raw));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| (format!("cannot configure the thread pool: {e}"), 2))
}

fn invalid_threads(raw: &str) -> Failure {
    (
        format!("invalid HDEPTH_THREADS \"{raw}\": expected a positive integer"),
        2,
    )
}

fn lift(e: Error) -> Failure {
    let code = match e {
        Error::Parse(_) => 2,
        _ => 3,
    };
    (e.to_string(), code)
}

fn read_file(path: &str) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| (format!("cannot read {path}: {e}"), 2))
}

/// Arguments holding structured data accept either inline JSON (anything
/// starting with '{') or a file path.
fn read_payload(arg: &str) -> Result<Vec<u8>, Failure> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.as_bytes().to_vec())
    } else {
        read_file(arg)
    }
}

fn load_module(path: &str) -> Result<ModuleSpec, Failure> {
    parse_spec(&read_file(path)?).map_err(lift)
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report values serialize")
    );
}

fn cmd_hdepth(args: ModuleArgs) -> Result<ExitCode, Failure> {
    let spec = load_module(&args.module)?;
    let g = spec.determine_g();
    let table = spec.hilbert_table(&g).map_err(lift)?;
    let (d, witness) = hdepth(&table);
    let dec = induced_decomposition(&witness);
    if args.json {
        print_json(&json!({
            "g": g.as_slice(),
            "table": table_json(&table),
            "depth": d,
            "witness": partition_json(&witness),
            "components": decomposition_json(&dec),
        }));
    } else {
        println!("g = {g}");
        println!("H = {}", table.polynomial_string(spec.vars()));
        println!("hdepth = {d}");
        println!("witness: {witness}");
        println!("induced decomposition:");
        for comp in dec.components() {
            println!("  {}", format_component(comp, spec.vars()));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_stdepth(args: ModuleArgs) -> Result<ExitCode, Failure> {
    let spec = load_module(&args.module)?;
    let g = spec.determine_g();
    let table = spec.hilbert_table(&g).map_err(lift)?;
    let (d, witness) = stdepth(&spec, &g).map_err(lift)?;
    if args.json {
        print_json(&json!({
            "g": g.as_slice(),
            "table": table_json(&table),
            "depth": d,
            "witness": candidate_json(&spec, &witness),
            "components": decomposition_json(&witness.to_hilbert()),
        }));
    } else {
        println!("g = {g}");
        println!("H = {}", table.polynomial_string(spec.vars()));
        println!("stdepth = {d}");
        println!("witness:");
        for part in witness.parts() {
            println!("  {}", format_stanley_part(part, &spec));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_partitions(args: PartitionsArgs) -> Result<ExitCode, Failure> {
    let spec = load_module(&args.module)?;
    let g = spec.determine_g();
    let table = spec.hilbert_table(&g).map_err(lift)?;
    if args.list {
        let ps = enumerate_partitions(&table, args.min_depth, Some(args.limit)).map_err(lift)?;
        let truncated = ps.len() == args.limit;
        if args.json {
            let listed: Vec<_> = ps.iter().map(partition_json).collect();
            print_json(&json!({
                "g": g.as_slice(),
                "table": table_json(&table),
                "min_depth": args.min_depth,
                "partitions": listed,
                "truncated": truncated,
            }));
        } else {
            println!("g = {g}");
            println!("H = {}", table.polynomial_string(spec.vars()));
            println!("partitions with depth >= {}:", args.min_depth);
            for p in &ps {
                println!("  {p}");
            }
            if truncated {
                println!("  (list truncated at {})", args.limit);
            }
        }
    } else {
        let count = count_partitions(&table, args.min_depth).map_err(lift)?;
        if args.json {
            print_json(&json!({
                "g": g.as_slice(),
                "table": table_json(&table),
                "min_depth": args.min_depth,
                "count": count,
            }));
        } else {
            println!("g = {g}");
            println!("H = {}", table.polynomial_string(spec.vars()));
            println!("partitions with depth >= {}: {count}", args.min_depth);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_decompose(args: DecomposeArgs) -> Result<ExitCode, Failure> {
    let spec = load_module(&args.module)?;
    let g = spec.determine_g();
    let table = spec.hilbert_table(&g).map_err(lift)?;
    let input = parse_partition(&read_payload(&args.partition)?).map_err(lift)?;
    let p = input.into_partition(&g).map_err(lift)?;
    p.validate_against(&table).map_err(lift)?;
    let dec = induced_decomposition(&p);
    if args.json {
        print_json(&json!({
            "g": g.as_slice(),
            "partition": partition_json(&p),
            "depth": p.depth(),
            "components": decomposition_json(&dec),
        }));
    } else {
        println!("g = {g}");
        println!("partition: {p}");
        println!("depth = {}", p.depth());
        println!("induced decomposition:");
        for comp in dec.components() {
            println!("  {}", format_component(comp, spec.vars()));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(args: CheckArgs) -> Result<ExitCode, Failure> {
    let spec = load_module(&args.module)?;
    let g = spec.determine_g();
    let cand = parse_candidate(&read_payload(&args.candidate)?)
        .map_err(lift)?
        .into_candidate(spec.n())
        .map_err(lift)?;
    let outcome = check_stanley_candidate_outcome(&spec, &g, &cand).map_err(lift)?;
    let pass = outcome.is_pass();
    if args.json {
        let mut value = json!({
            "g": g.as_slice(),
            "pass": pass,
        });
        if !pass {
            value["reason"] = json!(outcome.to_string());
        }
        print_json(&value);
    } else if pass {
        println!("pass");
    } else {
        println!("fail: {outcome}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_extend(args: ExtendArgs) -> Result<ExitCode, Failure> {
    let spec = load_module(&args.module)?;
    let extended = spec.extend_scalars(args.m).map_err(lift)?;
    print_json(&spec_json(&extended));
    Ok(ExitCode::SUCCESS)
}

fn cmd_specialize(args: SpecializeArgs) -> Result<ExitCode, Failure> {
    let spec = load_module(&args.module)?;
    let specialized = spec.specialize_ideal_spec(args.keep).map_err(lift)?;
    print_json(&spec_json(&specialized));
    Ok(ExitCode::SUCCESS)
}
