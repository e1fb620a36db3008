//! Command-line front end: declare an algebra, parabolic, weight and Weyl
//! word, compute characters, run verifier sweeps, emit text or JSON.
//!
//! Exit codes: 0 on success or a verification that holds, 2 on a
//! verification that fails (with the first discrepancy reported), 1 on
//! usage or precondition errors.

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use supertwist::char_ring::FormalCharacter;
use supertwist::error::Error;
use supertwist::levi::levi_decompose;
use supertwist::roots::{ParabolicData, RootSystem, Weight};
use supertwist::sweep;
use supertwist::twist::{
    twist_report, twisted_gvm_char, twisted_gvm_char_one_dim, verify_action_shift,
    verify_circle_product_rule, verify_odd_product_invariance, verify_star_transport,
};
use supertwist::verma::{gvm_char, gvm_char_one_dim, verma_char};
use supertwist::weyl::WeylElement;

const DEFAULT_TRUNC: u32 = 10;

#[derive(Parser)]
#[command(
    name = "supertwist",
    version,
    about = "Exact gl(m|n) character calculus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct AlgebraArg {
    /// Algebra as gl<m>|<n>, e.g. gl3|2 or gl(3|2)
    #[arg(long)]
    algebra: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print the root datum
    Roots {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Resolve a reflection word to a Weyl group element
    Weyl {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Whitespace-separated tokens, e.g. "s1 t1 s2"
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Character of the Verma module with the given highest weight
    CharVerma {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Comma-separated rational coordinates, e.g. 1,1/2,-1
        #[arg(long)]
        weight: String,
        #[arg(long)]
        trunc: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Character of the generalized Verma module for a standard parabolic
    CharGvm {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// 1-based simple-root indices, e.g. 1,3 (omit for the Borel)
        #[arg(long, default_value = "")]
        parabolic: String,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        trunc: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Twisted generalized Verma character for a compatible Weyl word
    CharTwist {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, default_value = "")]
        parabolic: String,
        #[arg(long)]
        weight: String,
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long)]
        trunc: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decompose s_X · e^λ into even-Levi simple characters
    Decompose {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, default_value = "")]
        parabolic: String,
        #[arg(long)]
        weight: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check one of the exact identities
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
    /// Run the full identity sweep for one algebra
    Sweep {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        trunc: Option<u32>,
        /// Admissible weights sampled per parabolic
        #[arg(long, default_value_t = 3)]
        lambdas: usize,
        /// Run even when the Weyl group is past desk scale
        #[arg(long)]
        force: bool,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Transport of the odd partition coefficients along the star action
    Pug {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, default_value = "")]
        word: String,
        /// Parabolic whose odd Levi roots form Z
        #[arg(long, default_value = "")]
        parabolic: String,
        /// Sweep all w and all parabolic Z
        #[arg(long)]
        all: bool,
    },
    /// W-invariance of the odd half-root product
    Asp {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, default_value = "")]
        parabolic: String,
        #[arg(long)]
        all: bool,
    },
    /// Shift identity relating the circle, dot and star actions
    Pig {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long, default_value = "")]
        weight: String,
        /// γ as comma-separated coordinates; must be a sum of distinct odd
        /// positive roots
        #[arg(long, default_value = "")]
        gamma: String,
        #[arg(long)]
        all: bool,
    },
    /// Product rule of the circle action
    Don {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long)]
        all: bool,
    },
    /// Closed twisted character against the Verma-expansion route
    Theorem {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, default_value = "")]
        parabolic: String,
        #[arg(long)]
        weight: String,
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long)]
        trunc: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprintln!("error: usage: {e}");
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn parse_algebra(text: &str) -> Result<RootSystem, Error> {
    let trimmed = text
        .trim()
        .strip_prefix("gl")
        .unwrap_or(text.trim())
        .trim_start_matches('(')
        .trim_end_matches(')');
    let (m_text, n_text) = trimmed
        .split_once('|')
        .ok_or_else(|| Error::Parse(format!("bad algebra {text:?}, expected gl<m>|<n>")))?;
    let m: usize = m_text
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad algebra {text:?}")))?;
    let n: usize = n_text
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad algebra {text:?}")))?;
    RootSystem::gl(m, n)
}

fn parse_parabolic(rs: &RootSystem, text: &str) -> Result<ParabolicData, Error> {
    let mut subset = BTreeSet::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let index: usize = part
            .parse()
            .map_err(|_| Error::Parse(format!("bad simple-root index {part:?}")))?;
        if index == 0 || index > rs.num_simple() {
            return Err(Error::BadSimpleIndex {
                index,
                count: rs.num_simple(),
            });
        }
        subset.insert(index - 1);
    }
    rs.parabolic(&subset)
}

fn resolve_trunc(flag: Option<u32>) -> Result<u32, Error> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var("SUPERTWIST_TRUNC") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad SUPERTWIST_TRUNC {text:?}"))),
        Err(_) => Ok(DEFAULT_TRUNC),
    }
}

fn print_char(chi: &FormalCharacter, format: Format) {
    match format {
        Format::Text => print!("{}", chi.to_text()),
        Format::Json => println!("{}", chi.to_json()),
    }
}

/// Dispatch for induced characters: a one-dimensional weight induces
/// directly, otherwise an even Levi takes the simple-character route.
fn induced_char(
    rs: &RootSystem,
    p: &ParabolicData,
    lam: &Weight,
    trunc: u32,
) -> Result<FormalCharacter, Error> {
    if rs.is_one_dimensional(p, lam) {
        gvm_char_one_dim(rs, p, lam, trunc)
    } else if p.x1().is_empty() {
        let ch_l = supertwist::levi::levi_simple_char(rs, p, lam)?;
        gvm_char(rs, p, &ch_l, trunc)
    } else {
        let (root, value) = rs.one_dim_violation(p.x(), lam).expect("violation exists");
        Err(Error::NotOneDimensional { root, value })
    }
}

fn twisted_char(
    rs: &RootSystem,
    p: &ParabolicData,
    w: &WeylElement,
    lam: &Weight,
    trunc: u32,
) -> Result<FormalCharacter, Error> {
    if rs.is_one_dimensional(p, lam) {
        twisted_gvm_char_one_dim(rs, p, w, lam, trunc)
    } else if p.x1().is_empty() {
        let ch_l = supertwist::levi::levi_simple_char(rs, p, lam)?;
        twisted_gvm_char(rs, p, w, &ch_l, trunc)
    } else {
        let (root, value) = rs.one_dim_violation(p.x(), lam).expect("violation exists");
        Err(Error::NotOneDimensional { root, value })
    }
}

fn report_sweep(name: &str, rs: &RootSystem, report: &sweep::SweepReport) -> Outcome {
    if report.passed() {
        println!(
            "{name} gl({}|{}): PASS ({} cases)",
            rs.m(),
            rs.n(),
            report.cases
        );
        Outcome::Pass
    } else {
        println!(
            "{name} gl({}|{}): FAIL ({} of {} cases)",
            rs.m(),
            rs.n(),
            report.failures.len(),
            report.cases
        );
        for line in report.failures.iter().take(5) {
            println!("  {line}");
        }
        Outcome::Fail
    }
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Roots { algebra, format } => {
            let rs = parse_algebra(&algebra.algebra)?;
            match format {
                Format::Json => println!("{}", rs.to_json()),
                Format::Text => {
                    println!("algebra: gl({}|{})", rs.m(), rs.n());
                    let simples: Vec<String> = rs
                        .simple()
                        .iter()
                        .enumerate()
                        .map(|(k, r)| format!("{}:{}", k + 1, rs.root_label(r)))
                        .collect();
                    println!("simple: {}", simples.join(" "));
                    let labels = |roots: &[supertwist::roots::Root]| -> String {
                        roots
                            .iter()
                            .map(|r| rs.root_label(r))
                            .collect::<Vec<_>>()
                            .join(" ")
                    };
                    println!("even+: {}", labels(rs.even_positive()));
                    println!("odd+: {}", labels(rs.odd_positive()));
                    println!("rho0: {}", rs.rho0());
                    println!("rho1: {}", rs.rho1());
                    println!("rho: {}", rs.rho());
                }
            }
            Ok(Outcome::Pass)
        }
        Command::Weyl {
            algebra,
            word,
            format,
        } => {
            let rs = parse_algebra(&algebra.algebra)?;
            let w = WeylElement::parse_word(&rs, &word)?;
            match format {
                Format::Json => println!("{}", w.to_json()),
                Format::Text => {
                    println!("{w}");
                    println!("length: {}", w.length());
                    let inv: Vec<String> = w
                        .inversion_set(&rs)
                        .iter()
                        .map(|r| rs.root_label(r))
                        .collect();
                    println!("inversions: {}", inv.join(" "));
                }
            }
            Ok(Outcome::Pass)
        }
        Command::CharVerma {
            algebra,
            weight,
            trunc,
            format,
        } => {
            let rs = parse_algebra(&algebra.algebra)?;
            let lam = parse_weight(&rs, &weight)?;
            let chi = verma_char(&rs, &lam, resolve_trunc(trunc)?);
            print_char(&chi, format);
            Ok(Outcome::Pass)
        }
        Command::CharGvm {
            algebra,
            parabolic,
            weight,
            trunc,
            format,
        } => {
            let rs = parse_algebra(&algebra.algebra)?;
            let p = parse_parabolic(&rs, &parabolic)?;
            let lam = parse_weight(&rs, &weight)?;
            let chi = induced_char(&rs, &p, &lam, resolve_trunc(trunc)?)?;
            print_char(&chi, format);
            Ok(Outcome::Pass)
        }
        Command::CharTwist {
            algebra,
            parabolic,
            weight,
            word,
            trunc,
            format,
        } => {
            let rs = parse_algebra(&algebra.algebra)?;
            let p = parse_parabolic(&rs, &parabolic)?;
            let lam = parse_weight(&rs, &weight)?;
            let w = WeylElement::parse_word(&rs, &word)?;
            let chi = twisted_char(&rs, &p, &w, &lam, resolve_trunc(trunc)?)?;
            print_char(&chi, format);
            Ok(Outcome::Pass)
        }
        Command::Decompose {
            algebra,
            parabolic,
            weight,
            format,
        } => {
            let rs = parse_algebra(&algebra.algebra)?;
            let p = parse_parabolic(&rs, &parabolic)?;
            let lam = parse_weight(&rs, &weight)?;
            let d = levi_decompose(&rs, &p, &FormalCharacter::exp(&lam))?;
            match format {
                Format::Json => println!("{}", d.to_json()),
                Format::Text => {
                    for (mu, mult) in d.summands() {
                        println!("{mult} x {mu}");
                    }
                }
            }
            Ok(Outcome::Pass)
        }
        Command::Verify { check } => run_verify(check),
        Command::Sweep {
            algebra,
            trunc,
            lambdas,
            force,
        } => {
            let rs = parse_algebra(&algebra.algebra)?;
            if !force {
                sweep::check_sweep_scale(&rs)?;
            }
            let n = resolve_trunc(trunc)?;
            let mut outcome = Outcome::Pass;
            type Phase<'a> = (&'a str, Box<dyn Fn(&RootSystem) -> sweep::SweepReport>);
            let phases: Vec<Phase> = vec![
                (
                    "twist-1dim",
                    Box::new(move |rs| sweep::sweep_one_dim_twists(rs, n, lambdas)),
                ),
                (
                    "twist-levi",
                    Box::new(move |rs| sweep::sweep_levi_twists(rs, n, lambdas)),
                ),
                (
                    "verma-specialization",
                    Box::new(move |rs| sweep::sweep_verma_specialization(rs, n, 5)),
                ),
                ("pug", Box::new(sweep::sweep_star_transport)),
                ("asp", Box::new(sweep::sweep_odd_product)),
                ("pig", Box::new(|rs| sweep::sweep_action_shift(rs, 3))),
                ("don", Box::new(|rs| sweep::sweep_circle_product(rs, 2))),
            ];
            // run and report phase by phase so long sweeps stay visible
            for (name, run_phase) in phases {
                eprintln!("running {name} ...");
                let report = run_phase(&rs);
                if matches!(report_sweep(name, &rs, &report), Outcome::Fail) {
                    outcome = Outcome::Fail;
                }
            }
            Ok(outcome)
        }
    }
}

fn parse_weight(rs: &RootSystem, text: &str) -> Result<Weight, Error> {
    let w = Weight::parse(text)?;
    if w.len() != rs.dim() {
        return Err(Error::DimensionMismatch {
            expected: rs.dim(),
            got: w.len(),
        });
    }
    Ok(w)
}

fn run_verify(check: VerifyCommand) -> Result<Outcome, Error> {
    match check {
        VerifyCommand::Pug {
            algebra,
            word,
            parabolic,
            all,
        } => {
            let rs = parse_algebra(&algebra.algebra)?;
            if all {
                sweep::check_sweep_scale(&rs)?;
                let report = sweep::sweep_star_transport(&rs);
                return Ok(report_sweep("pug", &rs, &report));
            }
            let w = WeylElement::parse_word(&rs, &word)?;
            let p = parse_parabolic(&rs, &parabolic)?;
            let ok = verify_star_transport(&rs, &w, p.x1());
            println!("pug: {}", if ok { "PASS" } else { "FAIL" });
            Ok(if ok { Outcome::Pass } else { Outcome::Fail })
        }
        VerifyCommand::Asp {
            algebra,
            parabolic,
            all,
        } => {
            let rs = parse_algebra(&algebra.algebra)?;
            if all {
                sweep::check_sweep_scale(&rs)?;
                let report = sweep::sweep_odd_product(&rs);
                return Ok(report_sweep("asp", &rs, &report));
            }
            let p = parse_parabolic(&rs, &parabolic)?;
            let ok = verify_odd_product_invariance(&rs, p.x1());
            println!("asp: {}", if ok { "PASS" } else { "FAIL" });
            Ok(if ok { Outcome::Pass } else { Outcome::Fail })
        }
        VerifyCommand::Pig {
            algebra,
            word,
            weight,
            gamma,
            all,
        } => {
            let rs = parse_algebra(&algebra.algebra)?;
            if all {
                sweep::check_sweep_scale(&rs)?;
                let report = sweep::sweep_action_shift(&rs, 3);
                return Ok(report_sweep("pig", &rs, &report));
            }
            let w = WeylElement::parse_word(&rs, &word)?;
            let lam = parse_weight(&rs, &weight)?;
            let g = parse_weight(&rs, &gamma)?;
            let ok = verify_action_shift(&rs, &w, &lam, &g)?;
            println!("pig: {}", if ok { "PASS" } else { "FAIL" });
            Ok(if ok { Outcome::Pass } else { Outcome::Fail })
        }
        VerifyCommand::Don { algebra, word, all } => {
            let rs = parse_algebra(&algebra.algebra)?;
            if all {
                sweep::check_sweep_scale(&rs)?;
                let report = sweep::sweep_circle_product(&rs, 2);
                return Ok(report_sweep("don", &rs, &report));
            }
            let w = WeylElement::parse_word(&rs, &word)?;
            let mut ok = true;
            for p in sweep::standard_parabolics(&rs) {
                let r = supertwist::char_ring::r_factor(&rs, p.x0())?;
                let s = supertwist::char_ring::s_factor(&rs, p.x1())?;
                for lam in sweep::admissible_weights(&rs, &[], 2) {
                    let e = FormalCharacter::exp(&lam);
                    ok &= verify_circle_product_rule(&rs, &w, &r, &e)?;
                    ok &= verify_circle_product_rule(&rs, &w, &s, &e)?;
                    ok &= verify_circle_product_rule(&rs, &w, &r, &s)?;
                }
            }
            println!("don: {}", if ok { "PASS" } else { "FAIL" });
            Ok(if ok { Outcome::Pass } else { Outcome::Fail })
        }
        VerifyCommand::Theorem {
            algebra,
            parabolic,
            weight,
            word,
            trunc,
            format,
        } => {
            let rs = parse_algebra(&algebra.algebra)?;
            let p = parse_parabolic(&rs, &parabolic)?;
            let lam = parse_weight(&rs, &weight)?;
            let w = WeylElement::parse_word(&rs, &word)?;
            let report = twist_report(&rs, &p, &w, &lam, resolve_trunc(trunc)?)?;
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => {
                    println!("agree: {}", report.agree());
                    println!("order: {}", report.comparison.shared_order);
                    if let Some(d) = &report.comparison.discrepancy {
                        println!(
                            "first_discrepancy: mu={} lhs={} rhs={}",
                            d.weight, d.lhs, d.rhs
                        );
                    }
                }
            }
            Ok(if report.agree() {
                Outcome::Pass
            } else {
                Outcome::Fail
            })
        }
    }
}
