use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use conelab::commands::{self, BallSpec, ConeSpec};
use conelab::parse::{
    parse_alpha, parse_bit, parse_bits, parse_index_word, parse_rational_list,
    parse_two_generator_word,
};
use conelab::{json, CliError};
use conelab_core::cones::{EnumCone, SignSeqCone};

/// Exact computations with left-orderings of BS(1,n), Thompson's group F,
/// and the infinitely generated group H∞, with verifiable certificates.
#[derive(Parser)]
#[command(name = "conelab", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON document here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Also print a human-readable table.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Baumslag-Solitar groups BS(1,n) and their parameter cones.
    Bs {
        #[command(subcommand)]
        cmd: BsCmd,
    },
    /// Thompson's group F and its enumeration cones.
    F {
        #[command(subcommand)]
        cmd: FCmd,
    },
    /// The group H∞ and its sign-sequence cones.
    Hinf {
        #[command(subcommand)]
        cmd: HinfCmd,
    },
    /// Cayley balls and finite cone checks.
    Ball {
        #[command(subcommand)]
        cmd: BallCmd,
    },
    /// Re-verify a certificate file from scratch.
    Verify {
        /// Path to a certificate JSON document ("-" for stdin).
        file: String,
    },
}

#[derive(Args)]
struct AlphaArg {
    /// Cone parameter: sqrt(d) or (p+q*sqrt(d))/r.
    #[arg(long)]
    alpha: String,
}

#[derive(Subcommand)]
enum BsCmd {
    /// Sign of a word in the cone with the given parameter.
    Sign {
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[command(flatten)]
        alpha: AlphaArg,
        /// Word over a, A, b, B (capitals are inverses).
        #[arg(long)]
        word: String,
    },
    /// Separator certificate for two ordered parameters.
    Separate {
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[command(flatten)]
        alpha: AlphaArg,
        /// Upper parameter, same grammar as --alpha.
        #[arg(long)]
        beta: String,
    },
    /// Free-part witness: conjugation by the word moves the cone.
    Freepart {
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[command(flatten)]
        alpha: AlphaArg,
        #[arg(long)]
        word: String,
    },
    /// Condensation witness at the resolution of a radius-r ball.
    Condense {
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[command(flatten)]
        alpha: AlphaArg,
        #[arg(long)]
        radius: u32,
    },
}

#[derive(Subcommand)]
enum FCmd {
    /// Sign of a word in an enumeration cone.
    Sign {
        #[arg(long)]
        word: String,
        /// Optional enumeration prefix override, e.g. "1/3,2/5".
        #[arg(long, default_value = "")]
        prefix: String,
    },
    /// Certificate for a map fixing a set while moving two points.
    Goodfn {
        /// Comma-separated rationals to fix, may be empty.
        #[arg(long, default_value = "")]
        fix: String,
        /// Point to raise.
        #[arg(long)]
        raise: String,
        /// Point to lower.
        #[arg(long)]
        lower: String,
    },
    /// Conjugacy separator certificate for a nonidentity word.
    Separate {
        #[arg(long)]
        word: String,
        #[arg(long, default_value = "")]
        prefix: String,
    },
    /// Check that both presentation relators act as the identity.
    Relcheck,
    /// The i-th rational of the canonical enumeration.
    Enum {
        #[arg(long)]
        index: u64,
    },
}

#[derive(Subcommand)]
enum HinfCmd {
    /// Normal form of a product of two words (signed indices).
    Mul {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Sign of a word in a sign-sequence cone.
    Sign {
        #[arg(long)]
        word: String,
        #[arg(long, default_value = "")]
        prefix: String,
        #[arg(long, default_value = "1")]
        tail: String,
    },
    /// Conjugated cone and the flipped positions.
    Conj {
        #[arg(long)]
        word: String,
        #[arg(long, default_value = "")]
        prefix: String,
        #[arg(long, default_value = "1")]
        tail: String,
    },
    /// Eventual-equality checks: flips stay below the top index and agree
    /// with direct conjugation on a ball.
    E0check {
        /// Explicit word; omit to run seeded random trials.
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value = "")]
        prefix: String,
        #[arg(long, default_value = "1")]
        tail: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        trials: u32,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = 5)]
        max_gen: u32,
        #[arg(long, default_value_t = 3)]
        radius: u32,
    },
    /// Condensation witness at the resolution of a ball over x1..xm.
    Condense {
        #[arg(long, default_value = "")]
        prefix: String,
        #[arg(long, default_value = "1")]
        tail: String,
        #[arg(long, default_value_t = 3)]
        max_gen: u32,
        #[arg(long)]
        radius: u32,
    },
}

#[derive(Subcommand)]
enum BallCmd {
    /// Build a Cayley ball with shortest representative words.
    Build {
        /// Group: bs, f, or hinf.
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 2)]
        n: u32,
        /// For hinf: generators x1..x<max-gen>.
        #[arg(long, default_value_t = 3)]
        max_gen: u32,
        #[arg(long)]
        radius: u32,
    },
    /// Check the positive-cone axioms on a ball.
    CheckAxioms {
        /// Group: bs, f, or hinf.
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 2)]
        n: u32,
        /// Required for bs: the cone parameter.
        #[arg(long)]
        alpha: Option<String>,
        /// Enumeration prefix (f) or bit prefix (hinf).
        #[arg(long, default_value = "")]
        prefix: String,
        #[arg(long, default_value = "1")]
        tail: String,
        /// For hinf: generators x1..x<max-gen>.
        #[arg(long, default_value_t = 3)]
        max_gen: u32,
        #[arg(long)]
        radius: u32,
    },
}

struct Output {
    document: String,
    table: Option<String>,
    failed_verification: bool,
}

fn document<T: Serialize>(value: &T, pretty: bool) -> Result<(String, Option<String>), CliError> {
    let compact = serde_json::to_string(value)
        .map_err(|e| CliError::InvalidInput(format!("serialization failed: {e}")))?;
    let table = if pretty {
        let v: serde_json::Value = serde_json::from_str(&compact).expect("round trip");
        Some(render_table(&v))
    } else {
        None
    };
    Ok((compact, table))
}

/// Key-value table rendering of a JSON document, checks as aligned rows.
fn render_table(value: &serde_json::Value) -> String {
    let mut out = String::new();
    if let Some(map) = value.as_object() {
        for (key, val) in map {
            if key == "checks" {
                if let Some(rows) = val.as_array() {
                    out.push_str(&format!("checks ({}):\n", rows.len()));
                    for row in rows {
                        let claim = row["claim"].as_str().unwrap_or("?");
                        let lhs = row["lhs"].as_str().unwrap_or("?");
                        let rel = row["rel"].as_str().unwrap_or("?");
                        let rhs = row["rhs"].as_str().unwrap_or("?");
                        out.push_str(&format!("  [ok] {claim}: {lhs} {rel} {rhs}\n"));
                    }
                    continue;
                }
            }
            out.push_str(&format!("{key}: {val}\n"));
        }
    } else {
        out.push_str(&format!("{value}\n"));
    }
    out
}

fn parse_enum_cone(prefix: &str) -> Result<EnumCone, CliError> {
    EnumCone::new(parse_rational_list(prefix)?).map_err(CliError::invalid)
}

fn parse_signseq_cone(prefix: &str, tail: &str) -> Result<SignSeqCone, CliError> {
    Ok(SignSeqCone::new(parse_bits(prefix)?, parse_bit(tail)?))
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let pretty = cli.pretty;
    let plain = |doc: (String, Option<String>)| Output {
        document: doc.0,
        table: doc.1,
        failed_verification: false,
    };
    match &cli.command {
        Command::Bs { cmd } => match cmd {
            BsCmd::Sign { n, alpha, word } => {
                let alpha = parse_alpha(&alpha.alpha)?.require_irrational("smirnov cones")?;
                let word = parse_two_generator_word(word)?;
                let report = commands::bs_sign(*n, alpha, &word)?;
                Ok(plain(document(&report, pretty)?))
            }
            BsCmd::Separate { n, alpha, beta } => {
                let alpha = parse_alpha(&alpha.alpha)?.require_irrational("smirnov cones")?;
                let beta = parse_alpha(beta)?.require_irrational("smirnov cones")?;
                let report = commands::bs_separate(*n, alpha, beta)?;
                Ok(plain(document(&report, pretty)?))
            }
            BsCmd::Freepart { n, alpha, word } => {
                let alpha = parse_alpha(&alpha.alpha)?.require_irrational("smirnov cones")?;
                let word = parse_two_generator_word(word)?;
                let report = commands::bs_freepart(*n, alpha, &word)?;
                Ok(plain(document(&report, pretty)?))
            }
            BsCmd::Condense { n, alpha, radius } => {
                let alpha = parse_alpha(&alpha.alpha)?.require_irrational("smirnov cones")?;
                let report = commands::bs_condense(*n, alpha, *radius)?;
                Ok(plain(document(&report, pretty)?))
            }
        },
        Command::F { cmd } => match cmd {
            FCmd::Sign { word, prefix } => {
                let word = parse_two_generator_word(word)?;
                let cone = parse_enum_cone(prefix)?;
                let report = commands::f_sign(&word, cone)?;
                Ok(plain(document(&report, pretty)?))
            }
            FCmd::Goodfn { fix, raise, lower } => {
                let fixed = parse_rational_list(fix)?;
                let raise = json::parse_rational(raise)?;
                let lower = json::parse_rational(lower)?;
                let report = commands::f_goodfn(fixed, raise, lower)?;
                Ok(plain(document(&report, pretty)?))
            }
            FCmd::Separate { word, prefix } => {
                let word = parse_two_generator_word(word)?;
                let cone = parse_enum_cone(prefix)?;
                let report = commands::f_separate(&word, cone)?;
                Ok(plain(document(&report, pretty)?))
            }
            FCmd::Relcheck => {
                let report = commands::f_relcheck()?;
                Ok(plain(document(&report, pretty)?))
            }
            FCmd::Enum { index } => {
                let report = commands::f_enum(*index)?;
                Ok(plain(document(&report, pretty)?))
            }
        },
        Command::Hinf { cmd } => match cmd {
            HinfCmd::Mul { lhs, rhs } => {
                let report =
                    commands::hinf_mul(&parse_index_word(lhs)?, &parse_index_word(rhs)?)?;
                Ok(plain(document(&report, pretty)?))
            }
            HinfCmd::Sign { word, prefix, tail } => {
                let cone = parse_signseq_cone(prefix, tail)?;
                let report = commands::hinf_sign(&parse_index_word(word)?, cone)?;
                Ok(plain(document(&report, pretty)?))
            }
            HinfCmd::Conj { word, prefix, tail } => {
                let cone = parse_signseq_cone(prefix, tail)?;
                let report = commands::hinf_conj(&parse_index_word(word)?, cone)?;
                Ok(plain(document(&report, pretty)?))
            }
            HinfCmd::E0check {
                word,
                prefix,
                tail,
                seed,
                trials,
                max_len,
                max_gen,
                radius,
            } => {
                let cone = parse_signseq_cone(prefix, tail)?;
                let words = match word {
                    Some(w) => vec![parse_index_word(w)?],
                    None => commands::random_e0_words(*seed, *trials, *max_len, *max_gen),
                };
                let report = commands::hinf_e0check(cone, words, *max_gen, *radius)?;
                let failed = !report.pass;
                let doc = document(&report, pretty)?;
                Ok(Output { document: doc.0, table: doc.1, failed_verification: failed })
            }
            HinfCmd::Condense { prefix, tail, max_gen, radius } => {
                let cone = parse_signseq_cone(prefix, tail)?;
                let report = commands::hinf_condense(cone, *max_gen, *radius)?;
                Ok(plain(document(&report, pretty)?))
            }
        },
        Command::Ball { cmd } => match cmd {
            BallCmd::Build { group, n, max_gen, radius } => {
                let spec = match group.as_str() {
                    "bs" => BallSpec::Bs { n: *n },
                    "f" => BallSpec::F,
                    "hinf" => BallSpec::Hinf { max_gen: *max_gen },
                    other => {
                        return Err(CliError::InvalidInput(format!(
                            "unknown group {other:?}, expected bs, f or hinf"
                        )))
                    }
                };
                let report = commands::ball_build(spec, *radius)?;
                Ok(plain(document(&report, pretty)?))
            }
            BallCmd::CheckAxioms { group, n, alpha, prefix, tail, max_gen, radius } => {
                let spec = match group.as_str() {
                    "bs" => {
                        let alpha = alpha.as_ref().ok_or_else(|| {
                            CliError::InvalidInput("bs cones need --alpha".into())
                        })?;
                        ConeSpec::Smirnov {
                            n: *n,
                            alpha: parse_alpha(alpha)?.require_irrational("smirnov cones")?,
                        }
                    }
                    "f" => ConeSpec::Enum { cone: parse_enum_cone(prefix)? },
                    "hinf" => ConeSpec::SignSeq {
                        cone: parse_signseq_cone(prefix, tail)?,
                        max_gen: *max_gen,
                    },
                    other => {
                        return Err(CliError::InvalidInput(format!(
                            "unknown group {other:?}, expected bs, f or hinf"
                        )))
                    }
                };
                let report = commands::ball_check_axioms(spec, *radius)?;
                let failed = !report.pass;
                let doc = document(&report, pretty)?;
                Ok(Output { document: doc.0, table: doc.1, failed_verification: failed })
            }
        },
        Command::Verify { file } => {
            let text = if file == "-" {
                std::io::read_to_string(std::io::stdin())?
            } else {
                std::fs::read_to_string(file)?
            };
            let (report, passed) = commands::verify_document(&text)?;
            let doc = document(&report, pretty)?;
            Ok(Output { document: doc.0, table: doc.1, failed_verification: !passed })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            let payload = format!("{}\n", output.document);
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, payload) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(3);
                }
            } else {
                let mut stdout = std::io::stdout().lock();
                let _ = stdout.write_all(payload.as_bytes());
            }
            if let Some(table) = output.table {
                let mut stdout = std::io::stdout().lock();
                let _ = stdout.write_all(table.as_bytes());
            }
            if output.failed_verification {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
