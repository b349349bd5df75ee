//! Command-line front end: counts, normal forms, bases, characters, and the
//! verification suites, with text, JSON, and CSV output.
//!
//! Exit codes: 0 success, 2 invalid arguments or parse errors, 3 resource or
//! fuel cap exceeded, 4 a verification comparison failed.  Every number in
//! the output comes from a library call.

use clap::{Args, Parser, Subcommand, ValueEnum};
use parkmode::combinatorics::{
    catalan, enumerate_admissible_sequences, enumerate_multilinear_sequences,
    enumerate_parking_functions, fuss_catalan, parking_count,
};
use parkmode::modealg::{
    admissible_basis, graded_character, multilinear_character, rewrite_to_admissible,
    AlgebraElement, AlgebraParams, Word,
};
use parkmode::verify::{
    bijection_suite, character_match_suite, fock_character_suite, independence_suite,
    relations_suite, rewrite_oracle_suite, SuiteReport,
};
use parkmode::{Error, Limits};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "parkmode",
    version,
    about = "Admissible bases, graded characters, parking-function counts, \
             and exact vertex-operator verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count objects by closed form and by enumeration, and compare.
    Count(CountArgs),
    /// Expand an expression over the admissible basis.
    NormalForm(NormalFormArgs),
    /// List the admissible basis words of a given length.
    Basis(BasisArgs),
    /// Print graded dimensions, or colour-permutation traces.
    Character(CharacterArgs),
    /// Run a verification suite and report per-case outcomes.
    Verify(VerifyArgs),
}

impl Command {
    fn common(&self) -> &CommonArgs {
        match self {
            Command::Count(a) => &a.common,
            Command::NormalForm(a) => &a.common,
            Command::Basis(a) => &a.common,
            Command::Character(a) => &a.common,
            Command::Verify(a) => &a.common,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct CommonArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cap on enumerated items before aborting with a resource error.
    #[arg(long, default_value_t = 10_000_000)]
    cap_items: u64,
    /// Cap on rewrite steps per input word.
    #[arg(long, default_value_t = 1_000_000)]
    cap_steps: u64,
    /// Worker threads for the parallel suites; 0 keeps the default pool.
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

impl CommonArgs {
    fn limits(&self) -> Limits {
        Limits { max_items: self.cap_items, max_rewrite_steps: self.cap_steps }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CountKind {
    /// Parking functions of length n for slope m.
    Pf,
    /// Single-colour admissible words, m = 1.
    Catalan,
    /// Single-colour admissible words for general m.
    Fuss,
    /// Multilinear admissible words (n colours, each used once).
    Multilinear,
    /// Admissible words for arbitrary (n, k, m); enumeration only.
    Dim,
}

impl CountKind {
    fn name(self) -> &'static str {
        match self {
            CountKind::Pf => "pf",
            CountKind::Catalan => "catalan",
            CountKind::Fuss => "fuss",
            CountKind::Multilinear => "multilinear",
            CountKind::Dim => "dim",
        }
    }
}

#[derive(Args)]
struct CountArgs {
    #[arg(value_enum)]
    kind: CountKind,
    /// Word length / number of arguments.
    #[arg(long)]
    n: u64,
    /// Number of colours (used by `dim`).
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Slope / mode-gap parameter (ignored by `catalan`).
    #[arg(long, default_value_t = 1)]
    m: u64,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct NormalFormArgs {
    /// Expression in the word grammar, e.g. "e2[0] e1[1]".
    expr: String,
    /// Number of colours.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Mode-gap parameter.
    #[arg(long, default_value_t = 1)]
    m: i64,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct BasisArgs {
    /// Word length.
    #[arg(long)]
    n: usize,
    /// Number of colours.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Mode-gap parameter.
    #[arg(long, default_value_t = 1)]
    m: i64,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CharacterArgs {
    /// Word length.
    #[arg(long)]
    n: usize,
    /// Number of colours (ignored with --multilinear, which uses k = n).
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Mode-gap parameter.
    #[arg(long, default_value_t = 1)]
    m: i64,
    /// Print colour-permutation traces by cycle type instead of the
    /// colour-graded dimensions.
    #[arg(long)]
    multilinear: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteKind {
    /// Exchange identity of the operator components on Fock states.
    Relations,
    /// Rank certificate: admissible words stay independent in the module.
    Independence,
    /// Colour-graded dimensions against the projected orbit-count character.
    CharacterMatch,
    /// Parking functions against labelled paths, round trip and conditions.
    Bijection,
    /// Enumerated Fock dimensions against the coloured-partition series.
    FockCharacter,
    /// Random words: rewrite normal form against direct module evaluation.
    RewriteOracle,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: SuiteKind,
    /// Size bound: maximum length for character-match/bijection, word
    /// length for independence.
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Colour count (relations, independence) or maximum colour count
    /// (fock-character).
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Mode-gap parameter.
    #[arg(long, default_value_t = 1)]
    m: i64,
    /// Depth bound: states down to this many degrees below the vacuum.
    #[arg(long, default_value_t = 2)]
    degree: i64,
    /// Bound on the component indices |i|, |j| in the exchange identity.
    #[arg(long, default_value_t = 2)]
    modes: i64,
    /// Per-coordinate charge window for fock-character.
    #[arg(long, default_value_t = 2)]
    charge_window: i64,
    /// Seed for the randomized suites.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random samples for rewrite-oracle.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[command(flatten)]
    common: CommonArgs,
}

fn main() {
    let cli = Cli::parse();
    let threads = cli.command.common().threads;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .ok();
    }
    let code = match run(&cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Resource { .. } | Error::Fuel { .. } => 3,
                _ => 2,
            }
        }
    };
    std::process::exit(code);
}

fn run(command: &Command) -> parkmode::Result<i32> {
    match command {
        Command::Count(args) => run_count(args),
        Command::NormalForm(args) => run_normal_form(args),
        Command::Basis(args) => run_basis(args),
        Command::Character(args) => run_character(args),
        Command::Verify(args) => run_verify(args),
    }
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("JSON tree is serializable"));
}

fn run_count(args: &CountArgs) -> parkmode::Result<i32> {
    let limits = args.common.limits();
    let n = args.n as usize;
    let (closed, enumerated) = match args.kind {
        CountKind::Pf => (
            Some(parking_count(args.n, args.m)?.to_string()),
            enumerate_parking_functions(n, args.m as usize, &limits)?.len(),
        ),
        CountKind::Catalan => (
            Some(catalan(args.n).to_string()),
            enumerate_admissible_sequences(n, 1, 1, &limits)?.len(),
        ),
        CountKind::Fuss => (
            Some(fuss_catalan(args.n, args.m)?.to_string()),
            enumerate_admissible_sequences(n, 1, args.m as i64, &limits)?.len(),
        ),
        CountKind::Multilinear => (
            Some(parking_count(args.n, args.m)?.to_string()),
            enumerate_multilinear_sequences(n, args.m as i64, &limits)?.len(),
        ),
        CountKind::Dim => (
            None,
            enumerate_admissible_sequences(n, args.k, args.m as i64, &limits)?.len(),
        ),
    };
    let agree = closed.as_ref().is_none_or(|c| *c == enumerated.to_string());
    match args.common.format {
        Format::Text => {
            println!("{enumerated}");
            match &closed {
                Some(c) => println!("closed-form={c} enumeration={enumerated} agree={agree}"),
                None => println!("enumeration={enumerated}"),
            }
        }
        Format::Json => print_json(&json!({
            "kind": args.kind.name(),
            "n": args.n,
            "k": args.k,
            "m": args.m,
            "closed_form": closed,
            "enumeration": enumerated,
            "agree": agree,
        })),
        Format::Csv => {
            println!("kind,n,k,m,closed_form,enumeration,agree");
            println!(
                "{},{},{},{},{},{enumerated},{agree}",
                args.kind.name(),
                args.n,
                args.k,
                args.m,
                closed.as_deref().unwrap_or("")
            );
        }
    }
    Ok(if agree { 0 } else { 4 })
}

fn run_normal_form(args: &NormalFormArgs) -> parkmode::Result<i32> {
    let word = match Word::parse(&args.expr) {
        Ok(word) => word,
        Err(Error::Parse { position, message }) => {
            eprintln!("error: parse error at offset {position}: {message}");
            eprintln!("  {}", args.expr);
            eprintln!("  {:>position$}^", "");
            return Ok(2);
        }
        Err(other) => return Err(other),
    };
    let params = AlgebraParams::new(args.k, args.m)?;
    let normal =
        rewrite_to_admissible(&AlgebraElement::from_word(word), &params, &args.common.limits())?;
    match args.common.format {
        Format::Text => println!("{normal}"),
        Format::Json => print_json(&json!({
            "k": args.k,
            "m": args.m,
            "terms": normal.to_json(),
        })),
        Format::Csv => {
            println!("coeff,word");
            for (word, coeff) in normal.terms() {
                println!("{coeff},{word}");
            }
        }
    }
    Ok(0)
}

fn run_basis(args: &BasisArgs) -> parkmode::Result<i32> {
    let params = AlgebraParams::new(args.k, args.m)?;
    let words = admissible_basis(args.n, &params, &args.common.limits())?;
    match args.common.format {
        Format::Text => {
            for word in &words {
                println!("{word}");
            }
        }
        Format::Json => print_json(&json!({
            "n": args.n,
            "k": args.k,
            "m": args.m,
            "count": words.len(),
            "words": words.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            println!("index,word");
            for (i, word) in words.iter().enumerate() {
                println!("{i},{word}");
            }
        }
    }
    Ok(0)
}

fn run_character(args: &CharacterArgs) -> parkmode::Result<i32> {
    let limits = args.common.limits();
    if args.multilinear {
        let traces = multilinear_character(args.n, args.m, &limits)?;
        match args.common.format {
            Format::Text => {
                for (cycle_type, trace) in &traces {
                    println!("{cycle_type} {trace}");
                }
            }
            Format::Json => print_json(&json!({
                "n": args.n,
                "m": args.m,
                "traces": traces
                    .iter()
                    .map(|(mu, t)| json!({"cycle_type": mu.parts(), "trace": t}))
                    .collect::<Vec<_>>(),
            })),
            Format::Csv => {
                println!("cycle_type,trace");
                for (cycle_type, trace) in &traces {
                    let parts: Vec<String> =
                        cycle_type.parts().iter().map(ToString::to_string).collect();
                    println!("{},{trace}", parts.join("+"));
                }
            }
        }
        return Ok(0);
    }
    let params = AlgebraParams::new(args.k, args.m)?;
    let character = graded_character(args.n, &params, &limits)?;
    match args.common.format {
        Format::Text => {
            println!("{character}");
            println!("dimension={}", character.dimension());
        }
        Format::Json => print_json(&json!({
            "n": args.n,
            "m": args.m,
            "character": character.to_json(),
            "dimension": character.dimension(),
        })),
        Format::Csv => {
            println!("degree,dim");
            for (degree, dim) in character.coefficients() {
                let parts: Vec<String> = degree.iter().map(ToString::to_string).collect();
                println!("{},{dim}", parts.join(" "));
            }
        }
    }
    Ok(0)
}

fn run_verify(args: &VerifyArgs) -> parkmode::Result<i32> {
    let limits = args.common.limits();
    let report: SuiteReport = match args.suite {
        SuiteKind::Relations => relations_suite(args.k, args.m, -args.degree, args.modes, &limits)?,
        SuiteKind::Independence => independence_suite(&[(args.n, args.k, args.m)], &limits)?,
        SuiteKind::CharacterMatch => character_match_suite(args.n, &limits)?,
        SuiteKind::Bijection => bijection_suite(args.n, &limits)?,
        SuiteKind::FockCharacter => {
            fock_character_suite(args.k, args.m, args.charge_window, -args.degree, &limits)?
        }
        SuiteKind::RewriteOracle => rewrite_oracle_suite(args.seed, args.samples, &limits)?,
    };
    match args.common.format {
        Format::Text => {
            println!("suite: {}", report.suite());
            for case in report.cases() {
                if case.passed() {
                    println!("ok   {}", case.name());
                } else {
                    println!("FAIL {}", case.name());
                    if let Some(example) = case.counterexample() {
                        println!("     counterexample: {example}");
                    }
                }
            }
            let passed = report.cases().iter().filter(|c| c.passed()).count();
            println!("passed {passed}/{} cases", report.cases().len());
        }
        Format::Json => print_json(&report.to_json()),
        Format::Csv => {
            println!("case,pass");
            for case in report.cases() {
                println!("{},{}", case.name(), case.passed());
            }
        }
    }
    if report.passed() {
        Ok(0)
    } else {
        if let Some(case) = report.first_failure() {
            eprintln!(
                "first counterexample ({}): {}",
                case.name(),
                case.counterexample().unwrap_or(&Value::Null)
            );
        }
        Ok(4)
    }
}
