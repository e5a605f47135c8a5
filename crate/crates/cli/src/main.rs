//! `imaged` — verification pipelines for imaged factors in binary words.
//!
//! Exit codes: 0 = verified, 1 = a check failed (counterexample in the
//! report), 2 = usage or input error.

mod manifest;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use imaged_core::{
    data, enumerate_free, parse_ratio, search, theorems, Alphabet, FactorOracle, Morphism, Word,
};
use manifest::RunManifest;
use output::ReportDocument;

#[derive(Parser)]
#[command(name = "imaged", version, about = "Imaged-factor verification toolkit")]
struct Cli {
    /// Worker threads for searches and enumeration (reports are identical
    /// for any value).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a bundled verification pipeline.
    Verify(VerifyArgs),
    /// Check the freeness-transfer premise for a uniform morphism.
    LemmaSync(LemmaSyncArgs),
    /// Query the factor oracle of a morphic word family.
    Oracle(OracleArgs),
    /// Enumerate repetition-free words.
    Free(FreeArgs),
    /// Print the bundled data in its file formats.
    DumpData,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: thm2, thm3, thm4, thm5.
    theorem: String,
    /// Override the bundled morphism (file path or compact IMAGES form).
    #[arg(long)]
    morphism: Option<String>,
    /// Certified-count threshold for thm5.
    #[arg(long)]
    target: Option<u64>,
    /// Abort depth for the searches.
    #[arg(long)]
    depth_cap: Option<usize>,
    /// Disable backtrack rule 3 (negative control for thm3).
    #[arg(long)]
    no_rule3: bool,
    /// Also search without fixing the first letter.
    #[arg(long)]
    no_symmetry: bool,
    /// Split searches into parallel subtrees below this prefix depth.
    #[arg(long)]
    split_depth: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct LemmaSyncArgs {
    /// Morphism file path or compact IMAGE0/IMAGE1[/IMAGE2] form.
    #[arg(long)]
    morphism: String,
    #[arg(long)]
    alpha: String,
    #[arg(long)]
    beta: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    morphism: String,
    #[arg(long, default_value = "7/4")]
    alpha: String,
    #[arg(long)]
    max_len: usize,
    /// Factor membership query.
    #[arg(long)]
    query: Option<String>,
    /// List square roots up to this period.
    #[arg(long)]
    squares: Option<usize>,
    /// Count and list the factors of this length.
    #[arg(long)]
    factors: Option<usize>,
    /// Write the deduplicated window pre-images and images to a file.
    #[arg(long)]
    dump_windows: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FreeArgs {
    /// Alphabet size (1-3).
    #[arg(long)]
    alphabet: usize,
    #[arg(long)]
    beta: String,
    #[arg(long)]
    length: usize,
    #[arg(long)]
    count_only: bool,
}

fn main() -> ExitCode {
    // die quietly when a pipe closes early (e.g. `imaged dump-data | head`)
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().is_err() {
            eprintln!("warning: thread pool already initialized");
        }
    }
    match run(cli.command) {
        Ok(verified) => {
            if verified {
                ExitCode::from(0)
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<bool> {
    match command {
        Command::Verify(args) => cmd_verify(args),
        Command::LemmaSync(args) => cmd_lemma_sync(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Free(args) => cmd_free(args),
        Command::DumpData => cmd_dump_data(),
    }
}

/// Loads a morphism from a file path, or parses the compact slash form.
fn load_morphism(spec: &str) -> anyhow::Result<(Morphism, RunManifest)> {
    let mut manifest = RunManifest::new();
    let morphism = if spec.contains('/') && !std::path::Path::new(spec).exists() {
        manifest.record_input("morphism", spec.as_bytes());
        Morphism::parse_compact(spec)?
    } else {
        let text = std::fs::read_to_string(spec)
            .map_err(|e| anyhow::anyhow!("cannot read morphism file {spec}: {e}"))?;
        manifest.record_input("morphism", text.as_bytes());
        Morphism::parse_text(&text)?
    };
    Ok((morphism, manifest))
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<bool> {
    let started = Instant::now();
    let mut manifest = RunManifest::new();
    manifest.set_command(&format!("verify {}", args.theorem));

    let morphism_override = match &args.morphism {
        Some(spec) => {
            let (m, sub) = load_morphism(spec)?;
            manifest.merge_inputs(sub);
            Some(m)
        }
        None => None,
    };

    let cfg = search::SearchConfig {
        first_letter_fixed: !args.no_symmetry,
        depth_cap: args.depth_cap,
        rules: search::RuleSet { r3: !args.no_rule3, ..Default::default() },
        split_depth: args.split_depth,
    };

    let document = match args.theorem.as_str() {
        "thm2" => {
            let m = morphism_override.unwrap_or_else(data::thm2::morphism);
            manifest.record_input_default("morphism", m.to_text().as_bytes());
            ReportDocument::from_theorem(theorems::verify_thm2(&m)?, started)
        }
        "thm4" => {
            let m = morphism_override.unwrap_or_else(data::thm4::morphism);
            manifest.record_input_default("morphism", m.to_text().as_bytes());
            ReportDocument::from_theorem(theorems::verify_thm4(&m)?, started)
        }
        "thm3" => {
            let report = search::thm3_search(&data::thm3::rule_words(), &cfg)?;
            ReportDocument::from_search("thm3", report, started)
        }
        "thm5" => {
            let report = search::thm5_search(args.target.unwrap_or(36), &cfg);
            ReportDocument::from_search("thm5", report, started)
        }
        other => anyhow::bail!("unknown theorem {other:?}; use thm2, thm3, thm4 or thm5"),
    };

    document.emit(args.json, &manifest);
    Ok(document.pass)
}

fn cmd_lemma_sync(args: LemmaSyncArgs) -> anyhow::Result<bool> {
    let started = Instant::now();
    let (morphism, mut manifest) = load_morphism(&args.morphism)?;
    manifest.set_command("lemma-sync");
    let alpha = parse_ratio(&args.alpha)?;
    let beta = parse_ratio(&args.beta)?;
    let report = imaged_core::verify_transfer(&morphism, alpha, beta, args.n)?;
    let document = ReportDocument::from_transfer(&report, started);
    document.emit(args.json, &manifest);
    Ok(report.pass)
}

fn cmd_oracle(args: OracleArgs) -> anyhow::Result<bool> {
    let (morphism, mut manifest) = load_morphism(&args.morphism)?;
    manifest.set_command("oracle");
    let alpha = parse_ratio(&args.alpha)?;
    let oracle = FactorOracle::build(&morphism, alpha, args.max_len)?;

    if let Some(path) = &args.dump_windows {
        let mut text = String::new();
        for pre in oracle.window_pre_images() {
            let image = morphism.apply(pre)?;
            text.push_str(&format!("{pre} {image}\n"));
        }
        std::fs::write(path, text)?;
        println!("windows: {} (written to {})", oracle.window_pre_images().len(), path.display());
    }
    if let Some(query) = &args.query {
        let word = Word::parse(morphism.target(), query)?;
        let present = oracle.is_factor(&word)?;
        println!("{}", if present { "present" } else { "absent" });
    }
    if let Some(period) = args.squares {
        let inventory = oracle.square_roots(period)?;
        let roots: Vec<String> = inventory.roots().iter().map(|w| w.to_string()).collect();
        println!("{}", roots.join(","));
    }
    if let Some(len) = args.factors {
        let factors = oracle.factors_of_length(len)?;
        println!("count: {}", factors.len());
        for f in factors {
            println!("{f}");
        }
    }
    let _ = manifest;
    Ok(true)
}

fn cmd_free(args: FreeArgs) -> anyhow::Result<bool> {
    let alphabet = Alphabet::of_size(args.alphabet)?;
    let beta = parse_ratio(&args.beta)?;
    let words = enumerate_free(alphabet, beta, args.length);
    if args.count_only {
        println!("{}", words.len());
    } else {
        for w in words {
            println!("{w}");
        }
    }
    Ok(true)
}

fn cmd_dump_data() -> anyhow::Result<bool> {
    println!("# 37-uniform morphism");
    print!("{}", data::thm2::morphism().to_text());
    println!("\n# forbidden factors (length-7 pipeline)");
    println!("{}", data::thm2::FORBIDDEN.join("\n"));
    println!("\n# candidate morphisms m(0)/m(1)");
    println!("{}", data::thm2::MORPHISM_CANDIDATES.join("\n"));
    println!("\n# candidate length-7 factors");
    println!("{}", data::thm2::FACTOR_CANDIDATES.join("\n"));
    println!("\n# rule words (length-6 search)");
    println!("{}", data::thm3::RULE_WORDS.join("\n"));
    println!("\n# 342-uniform morphism");
    print!("{}", data::thm4::morphism().to_text());
    println!("\n# forbidden factors (36-factor pipeline)");
    println!("{}", data::thm4::FORBIDDEN.join("\n"));
    println!("\n# non-imaged factors");
    println!("{}", data::thm4::NON_IMAGED.join("\n"));
    println!("\n# imaged set (ε printed as empty line)");
    println!("{}", data::thm4::IMAGED_SET.join("\n"));
    Ok(true)
}
