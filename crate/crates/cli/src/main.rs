use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use finring::expr::{realize, ExprError};
use finring::harness::{self, Bounds, Case, Family};
use finring::report::{classify, ClassifyOptions};
use finring::{size_cap_from_env, FiniteRing, DEFAULT_ORACLE_CAP, FORCED_ORACLE_CAP};

const EXIT_INPUT: u8 = 2;
const EXIT_DISAGREEMENT: u8 = 3;
const EXIT_RESOURCE: u8 = 4;

/// Finite commutative rings: idempotents and (weak) von Neumann regularity.
#[derive(Parser)]
#[command(name = "finring", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one ring expression.
    Classify {
        expr: String,
        #[arg(long)]
        json: bool,
        /// Size cap for the ring and every intermediate construction.
        #[arg(long)]
        max_size: Option<usize>,
        /// Run the ideal oracles even above the default oracle cap.
        #[arg(long)]
        oracle: bool,
        /// Omit timing so output is reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Run a verification family over its generated corpus.
    Verify {
        /// zmod, products, polyquot, trivialext, proxy-polynomial, th1-equivalence or all
        family: String,
        /// Largest n in the Z/n family.
        #[arg(long)]
        max_n: Option<u64>,
        /// Largest ring in the product, quotient and trivial-extension families.
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Check only these rings instead of the generated corpus.
        #[arg(long = "only", value_name = "EXPR")]
        only: Vec<String>,
    },
    /// List the idempotents of a ring.
    Idempotents { expr: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify {
            expr,
            json,
            max_size,
            oracle,
            no_timing,
        } => cmd_classify(&expr, json, max_size, oracle, no_timing),
        Command::Verify {
            family,
            max_n,
            max_size,
            json,
            only,
        } => cmd_verify(&family, max_n, max_size, json, &only),
        Command::Idempotents { expr } => cmd_idempotents(&expr),
    }
}

fn report_input_error(text: &str, err: &ExprError, as_json: bool) -> ExitCode {
    if as_json {
        let (kind, expected) = match err {
            ExprError::Parse(e) => ("parse", e.expected.clone()),
            ExprError::Elaborate(_) => ("elaborate", Vec::new()),
        };
        let doc = json!({
            "error": {
                "kind": kind,
                "input": text,
                "offset": err.offset(),
                "message": err.to_string(),
                "expected": expected,
            }
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
    } else {
        eprintln!("error: {err}");
        eprintln!("  {text}");
        eprintln!("  {}^", " ".repeat(text[..err.offset().min(text.len())].chars().count()));
    }
    ExitCode::from(EXIT_INPUT)
}

fn parse_ring(text: &str, cap: usize, as_json: bool) -> Result<FiniteRing, ExitCode> {
    realize(text, cap).map_err(|e| report_input_error(text, &e, as_json))
}

fn cmd_classify(text: &str, as_json: bool, max_size: Option<usize>, oracle: bool, no_timing: bool) -> ExitCode {
    let cap = max_size.unwrap_or_else(size_cap_from_env);
    let ring = match parse_ring(text, cap, as_json) {
        Ok(r) => r,
        Err(code) => return code,
    };
    let options = ClassifyOptions {
        oracle_cap: if oracle { FORCED_ORACLE_CAP } else { DEFAULT_ORACLE_CAP },
        timing: !no_timing,
    };
    let report = classify(text, &ring, options, oracle);
    if as_json {
        println!("{}", serde_json::to_string_pretty(&report).expect("json"));
    } else {
        print!("{report}");
    }
    if report.disagreement {
        ExitCode::from(EXIT_DISAGREEMENT)
    } else if report.oracle_cap_exceeded() {
        eprintln!("error: ring of size {} exceeds the oracle cap {FORCED_ORACLE_CAP}", report.size);
        ExitCode::from(EXIT_RESOURCE)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_verify(name: &str, max_n: Option<u64>, max_size: Option<usize>, as_json: bool, only: &[String]) -> ExitCode {
    let Some(families) = Family::select(name) else {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        eprintln!("error: unknown family '{name}' (expected {} or all)", names.join(", "));
        return ExitCode::from(EXIT_INPUT);
    };
    let mut bounds = Bounds::default();
    if let Some(n) = max_n {
        bounds.max_n = n;
        bounds.oracle_max_n = bounds.oracle_max_n.min(n);
    }
    if let Some(s) = max_size {
        bounds.max_size = s;
        bounds.proxy_max_size = bounds.proxy_max_size.min(s);
    }
    let cap = size_cap_from_env();
    if bounds.max_n > cap as u64 || bounds.max_size > cap {
        eprintln!("error: corpus bounds exceed the size cap {cap}");
        return ExitCode::from(EXIT_RESOURCE);
    }

    let result = if only.is_empty() {
        harness::run(&families, &bounds)
    } else {
        let mut cases = Vec::new();
        for text in only {
            match parse_ring(text, cap, as_json) {
                Ok(ring) => cases.push(Case {
                    expr: text.clone(),
                    ring,
                }),
                Err(code) => return code,
            }
        }
        harness::run_on(&families, &cases, &bounds)
    };
    if as_json {
        println!("{}", serde_json::to_string_pretty(&result).expect("json"));
    } else {
        print!("{result}");
    }
    if result.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_DISAGREEMENT)
    }
}

fn cmd_idempotents(text: &str) -> ExitCode {
    let ring = match parse_ring(text, size_cap_from_env(), false) {
        Ok(r) => r,
        Err(code) => return code,
    };
    let shown: Vec<String> = ring.idempotents().iter().map(|&e| ring.render(e)).collect();
    println!("{}", shown.join(" "));
    ExitCode::SUCCESS
}
