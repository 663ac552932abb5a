//! Command-line front end: series coefficients, closed forms, growth
//! analysis, the predecessor listing, the brute-force census, and a
//! self-check suite that plays the independent counting methods against
//! each other.
//!
//! Exit codes: 0 success, 1 verification mismatch (or internal failure),
//! 2 usage error, 3 resource limit (strand cap or word budget).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::bigint::BigInt;
use num::BigUint;

use braid_growth::{
    alphabet, count_by_length, count_via_dp, enumerate_classes, epsilon_matrix,
    generating_function, growth_report, series_counts, Error, GrowthReport,
    PresentationKind, DEFAULT_ROOT_TOL, DEFAULT_WORD_BUDGET,
};

/// Environment variable overriding the census word budget.
const BUDGET_ENV: &str = "BRAIDGROWTH_WORD_BUDGET";

#[derive(Parser)]
#[command(name = "braidgrowth", version, about = "Growth series of positive braid monoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Element counts b_0..b_K of one monoid
    Series {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "singular")]
        kind: Kind,
        /// Largest length K to count up to
        #[arg(long)]
        terms: usize,
        #[arg(long, value_enum, default_value = "genfunc")]
        method: Method,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The growth series as an exact rational function
    Genfunc {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "singular")]
        kind: Kind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Denominator roots, residues, growth rate, and recurrence
    Growth {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "singular")]
        kind: Kind,
        /// Width to which real roots are narrowed
        #[arg(long, default_value_t = DEFAULT_ROOT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The syllable alphabet with each syllable's predecessor set
    Predecessors {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "singular")]
        kind: Kind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Brute-force census by relation closure, independent of the automaton
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "singular")]
        kind: Kind,
        /// Largest length to count up to
        #[arg(long)]
        maxlen: usize,
        /// Also list the canonical representatives of this length
        #[arg(long)]
        list_length: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cross-check the closed form, the path counts, and the census
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "singular")]
        kind: Kind,
        /// Largest length the three methods are compared on
        #[arg(long)]
        maxlen: usize,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Kind {
    Singular,
    Classical,
}

impl Kind {
    fn to_lib(self) -> PresentationKind {
        match self {
            Kind::Singular => PresentationKind::Singular,
            Kind::Classical => PresentationKind::Classical,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Kind::Singular => "singular",
            Kind::Classical => "classical",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Genfunc,
    Dp,
    Oracle,
}

impl Method {
    fn as_str(self) -> &'static str {
        match self {
            Method::Genfunc => "genfunc",
            Method::Dp => "dp",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn report(self) -> ExitCode {
        match self {
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            Failure::Lib(e) => {
                eprintln!("error: {e}");
                let code = match e {
                    Error::WordBudgetExceeded { .. } | Error::StrandCountOutOfRange { .. } => 3,
                    Error::InvalidStrandCount { .. } => 2,
                    _ => 1,
                };
                ExitCode::from(code)
            }
        }
    }
}

/// Restore the default SIGPIPE disposition so that piping long output into
/// `head` ends the process quietly instead of panicking on the closed
/// descriptor.
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
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(failure) => failure.report(),
    }
}

fn word_budget() -> Result<u64, Failure> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map_err(|_| Failure::Usage(format!("{BUDGET_ENV} must be an unsigned integer, got {v:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_WORD_BUDGET),
        Err(e) => Err(Failure::Usage(format!("{BUDGET_ENV}: {e}"))),
    }
}

fn run(command: Command) -> Result<bool, Failure> {
    match command {
        Command::Series { n, kind, terms, method, format } => {
            let counts = match method {
                Method::Genfunc => series_counts(&generating_function(n, kind.to_lib())?, terms)?,
                Method::Dp => count_via_dp(n, kind.to_lib(), terms)?.counts,
                Method::Oracle => count_by_length(n, kind.to_lib(), terms, word_budget()?)?.counts,
            };
            print_series(format, "series", n, kind, Some(method), &counts);
            Ok(true)
        }
        Command::Genfunc { n, kind, format } => {
            let gf = generating_function(n, kind.to_lib())?;
            let (num, den) = gf.rf.integer_pair();
            match format {
                Format::Text => {
                    println!("f(t) = {}", gf.rf);
                    println!("numerator: {}", join(&num));
                    println!("denominator: {}", join(&den));
                }
                Format::Json => {
                    println!(
                        "{{\"command\":\"genfunc\",\"n\":{n},\"kind\":\"{}\",\"numerator\":{},\"denominator\":{}}}",
                        kind.as_str(),
                        json_array(&num),
                        json_array(&den),
                    );
                }
                Format::Csv => {
                    println!("degree,numerator,denominator");
                    for k in 0..num.len().max(den.len()) {
                        let zero = BigInt::from(0);
                        let nc = num.get(k).unwrap_or(&zero);
                        let dc = den.get(k).unwrap_or(&zero);
                        println!("{k},{nc},{dc}");
                    }
                }
            }
            Ok(true)
        }
        Command::Growth { n, kind, tol, format } => {
            if !(tol > 0.0) {
                return Err(Failure::Usage(format!("--tol must be positive, got {tol}")));
            }
            let gf = generating_function(n, kind.to_lib())?;
            let report = growth_report(&gf, tol)?;
            print_growth(format, n, kind, &report);
            Ok(true)
        }
        Command::Predecessors { n, kind, format } => {
            let rows = predecessor_rows(n, kind.to_lib())?;
            match format {
                Format::Text => {
                    println!("id word length predecessors");
                    for (id, word, length, preds) in &rows {
                        println!("{id} {word} {length} {}", join(preds));
                    }
                }
                Format::Csv => {
                    println!("id,word,length,predecessors");
                    for (id, word, length, preds) in &rows {
                        let spaced: Vec<String> = preds.iter().map(|p| p.to_string()).collect();
                        println!("{id},{word},{length},{}", spaced.join(" "));
                    }
                }
                Format::Json => {
                    let items: Vec<String> = rows
                        .iter()
                        .map(|(id, word, length, preds)| {
                            format!(
                                "{{\"id\":{id},\"word\":{},\"length\":{length},\"predecessors\":{}}}",
                                json_string(word),
                                json_array(preds),
                            )
                        })
                        .collect();
                    println!(
                        "{{\"command\":\"predecessors\",\"n\":{n},\"kind\":\"{}\",\"syllables\":[{}]}}",
                        kind.as_str(),
                        items.join(","),
                    );
                }
            }
            Ok(true)
        }
        Command::Oracle { n, kind, maxlen, list_length, format } => {
            let budget = word_budget()?;
            let census = count_by_length(n, kind.to_lib(), maxlen, budget)?;
            let reps: Option<Vec<String>> = match list_length {
                Some(l) => Some(
                    enumerate_classes(n, kind.to_lib(), l, budget)?
                        .iter()
                        .map(|w| w.to_string())
                        .collect(),
                ),
                None => None,
            };
            match format {
                Format::Text => {
                    println!("{}", join(&census.counts));
                    if let Some(words) = &reps {
                        for w in words {
                            println!("{w}");
                        }
                    }
                }
                Format::Csv => match &reps {
                    // With a listing the representative table is the payload.
                    Some(words) => {
                        println!("index,word");
                        for (i, w) in words.iter().enumerate() {
                            println!("{i},{w}");
                        }
                    }
                    None => {
                        println!("k,b_k");
                        for (k, b) in census.counts.iter().enumerate() {
                            println!("{k},{b}");
                        }
                    }
                },
                Format::Json => {
                    let listing = match (&list_length, &reps) {
                        (Some(l), Some(words)) => {
                            let quoted: Vec<String> =
                                words.iter().map(|w| json_string(w)).collect();
                            format!(
                                ",\"list_length\":{l},\"representatives\":[{}]",
                                quoted.join(",")
                            )
                        }
                        _ => String::new(),
                    };
                    println!(
                        "{{\"command\":\"oracle\",\"n\":{n},\"kind\":\"{}\",\"maxlen\":{maxlen},\"counts\":{}{listing}}}",
                        kind.as_str(),
                        json_array(&census.counts),
                    );
                }
            }
            Ok(true)
        }
        Command::Verify { n, kind, maxlen } => Ok(run_verify(n, kind, maxlen)?),
    }
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    parts.join(",")
}

// The documents below are emitted directly: every schema is flat, the only
// strings are generator words and fixed labels, and integer values may
// exceed what built-in JSON number types carry, so raw decimal literals are
// exactly right.

fn json_array<T: std::fmt::Display>(items: &[T]) -> String {
    format!("[{}]", join(items))
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn json_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x}")
    } else {
        json_string(&x.to_string())
    }
}

fn print_series(format: Format, command: &str, n: usize, kind: Kind, method: Option<Method>, counts: &[BigUint]) {
    match format {
        Format::Text => println!("{}", join(counts)),
        Format::Csv => {
            println!("k,b_k");
            for (k, b) in counts.iter().enumerate() {
                println!("{k},{b}");
            }
        }
        Format::Json => {
            let method_field = match method {
                Some(m) => format!(",\"method\":\"{}\"", m.as_str()),
                None => String::new(),
            };
            println!(
                "{{\"command\":\"{command}\",\"n\":{n},\"kind\":\"{}\"{method_field},\"counts\":{}}}",
                kind.as_str(),
                json_array(counts),
            );
        }
    }
}

fn print_growth(format: Format, n: usize, kind: Kind, report: &GrowthReport) {
    let den_ints: Vec<BigInt> = report
        .denominator
        .coeffs()
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect();
    match format {
        Format::Text => {
            println!("denominator: {}", join(&den_ints));
            for (root, mult) in &report.real_roots {
                if *mult == 1 {
                    println!("root: {root}");
                } else {
                    println!("root: {root} (multiplicity {mult})");
                }
            }
            match &report.residues {
                Some(residues) => {
                    for (pole, coeff) in residues {
                        println!("residue at {pole}: {coeff}");
                    }
                }
                None => println!("residues: not available (poles are not all real and simple)"),
            }
            println!("growth rate: {}", report.growth_rate);
            let coeffs: Vec<String> =
                report.recurrence.coeffs.iter().map(|c| c.to_string()).collect();
            println!(
                "recurrence: {} (valid from k = {})",
                coeffs.join(","),
                report.recurrence.valid_from
            );
        }
        Format::Csv => {
            println!("root,multiplicity,residue");
            for (root, mult) in &report.real_roots {
                let residue = report
                    .residues
                    .as_ref()
                    .and_then(|rs| rs.iter().find(|(p, _)| p == root))
                    .map(|(_, a)| a.to_string())
                    .unwrap_or_default();
                println!("{root},{mult},{residue}");
            }
        }
        Format::Json => {
            let roots: Vec<String> = report
                .real_roots
                .iter()
                .map(|(r, m)| format!("{{\"value\":{},\"multiplicity\":{m}}}", json_f64(*r)))
                .collect();
            let residues = match &report.residues {
                Some(rs) => {
                    let items: Vec<String> = rs
                        .iter()
                        .map(|(p, a)| {
                            format!("{{\"pole\":{},\"coefficient\":{}}}", json_f64(*p), json_f64(*a))
                        })
                        .collect();
                    format!("[{}]", items.join(","))
                }
                None => "null".to_string(),
            };
            let rec_coeffs: Vec<String> = report
                .recurrence
                .coeffs
                .iter()
                .map(|c| json_string(&c.to_string()))
                .collect();
            println!(
                "{{\"command\":\"growth\",\"n\":{n},\"kind\":\"{}\",\"denominator\":{},\"real_roots\":[{}],\"residues\":{},\"growth_rate\":{},\"recurrence\":{{\"coefficients\":[{}],\"valid_from\":{}}}}}",
                kind.as_str(),
                json_array(&den_ints),
                roots.join(","),
                residues,
                json_f64(report.growth_rate),
                rec_coeffs.join(","),
                report.recurrence.valid_from,
            );
        }
    }
}

type PredecessorRow = (usize, String, usize, Vec<usize>);

fn predecessor_rows(n: usize, kind: PresentationKind) -> Result<Vec<PredecessorRow>, Error> {
    let eps = epsilon_matrix(n, kind)?;
    let alph = alphabet(n, kind)?;
    Ok(alph
        .iter()
        .enumerate()
        .map(|(i, syl)| {
            let preds: Vec<usize> = eps.entries[i]
                .iter()
                .enumerate()
                .filter(|(_, &in_set)| in_set)
                .map(|(j, _)| eps.labels[j])
                .collect();
            (syl.id, syl.word(n).to_string(), syl.length, preds)
        })
        .collect())
}

/// Pinned coefficient pairs for the monoids whose closed forms are known
/// independently of this crate's own computation.
fn pinned_closed_form(n: usize, kind: Kind) -> Option<(Vec<i64>, Vec<i64>)> {
    match (n, kind) {
        (2, Kind::Singular) => Some((vec![1], vec![1, -2, 1])),
        (3, Kind::Singular) => Some((vec![1], vec![1, -4, 2, 3, -2])),
        (2, Kind::Classical) => Some((vec![1], vec![1, -1])),
        (3, Kind::Classical) => Some((vec![1], vec![1, -2, 0, 1])),
        _ => None,
    }
}

/// Census values pinned once from the brute-force oracle.
fn pinned_counts(n: usize, kind: Kind) -> Option<Vec<u64>> {
    match (n, kind) {
        (2, Kind::Singular) => Some(vec![1, 2, 3, 4, 5, 6, 7, 8, 9]),
        (3, Kind::Singular) => Some(vec![1, 4, 14, 45, 142, 444, 1385, 4322, 13486]),
        (4, Kind::Singular) => Some(vec![1, 6, 29, 130, 568, 2458, 10604, 45697, 196858]),
        (3, Kind::Classical) => Some(vec![1, 2, 4, 7, 12, 20, 33, 54, 88]),
        _ => None,
    }
}

fn run_verify(n: usize, kind: Kind, maxlen: usize) -> Result<bool, Failure> {
    let budget = word_budget()?;
    let mut ok = true;
    let mut check = |name: &str, pass: bool, detail: String| {
        if pass {
            println!("ok: {name}");
        } else {
            println!("MISMATCH: {name}: {detail}");
            ok = false;
        }
    };

    let gf = generating_function(n, kind.to_lib())?;
    let expansion = series_counts(&gf, maxlen)?;
    let dp = count_via_dp(n, kind.to_lib(), maxlen)?.counts;
    let census = count_by_length(n, kind.to_lib(), maxlen, budget)?.counts;

    check(
        "closed form and path counts agree",
        expansion == dp,
        diff_counts(&expansion, &dp),
    );
    check(
        "closed form and census agree",
        expansion == census,
        diff_counts(&expansion, &census),
    );

    if let Some((num, den)) = pinned_closed_form(n, kind) {
        let (got_num, got_den) = gf.rf.integer_pair();
        let want_num: Vec<BigInt> = num.iter().map(|&c| BigInt::from(c)).collect();
        let want_den: Vec<BigInt> = den.iter().map(|&c| BigInt::from(c)).collect();
        check(
            "closed form matches the pinned coefficients",
            got_num == want_num && got_den == want_den,
            format!(
                "got [{}]/[{}], want [{}]/[{}]",
                join(&got_num),
                join(&got_den),
                join(&want_num),
                join(&want_den)
            ),
        );
    }

    if let Some(pinned) = pinned_counts(n, kind) {
        let upto = maxlen.min(pinned.len() - 1);
        let want: Vec<BigUint> = pinned[..=upto].iter().map(|&c| BigUint::from(c)).collect();
        check(
            "census matches the pinned values",
            census[..=upto] == want[..],
            diff_counts(&census[..=upto], &want),
        );
    }

    // The half twist carries the largest simple-element id, n!.
    let eps = epsilon_matrix(n, kind.to_lib())?;
    let half_twist: usize = (1..=n).product();
    let delta = eps.labels.iter().position(|&id| id == half_twist).unwrap();
    let row_ok = (0..eps.labels.len()).all(|j| eps.entries[delta][j]);
    let col_ok = (0..eps.labels.len()).all(|i| eps.entries[i][delta] == (i == delta));
    check(
        "half twist follows everything and precedes only itself",
        row_ok && col_ok,
        "predecessor incidence violates the half-twist law".to_string(),
    );

    Ok(ok)
}

fn diff_counts(got: &[BigUint], want: &[BigUint]) -> String {
    for (k, (g, w)) in got.iter().zip(want).enumerate() {
        if g != w {
            return format!("first difference at length {k}: {g} vs {w}");
        }
    }
    if got.len() != want.len() {
        return format!("lengths differ: {} vs {}", got.len(), want.len());
    }
    String::new()
}
