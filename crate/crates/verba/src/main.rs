//! Thin command-line front end. Each subcommand drives one library
//! capability; the library and its examples are the primary interface.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use verba::engine::{
    derive, load_rules, verify_sentence, ScriptChoice, Strategy, VerificationStatus,
};
use verba::geom::{MatchOptions, Shape};
use verba::grammar::{parse as parse_tokens, render_tree, tokenize, Grammar};
use verba::render::{shape_svg, write_report, RenderSpec};
use verba::semantics::{convert_style, interpret, Style};
use verba::Error;

// Exit codes: 0 ok, 2 lexical/syntax, 3 semantic/composition,
// 4 verification refuted, 5 i/o or format.
const EXIT_PARSE: u8 = 2;
const EXIT_SEM: u8 = 3;
const EXIT_REFUTED: u8 = 4;
const EXIT_IO: u8 = 5;

#[derive(Parser)]
#[command(
    name = "verba",
    about = "Compute with shapes and with language about shapes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a sentence and print its tree.
    Parse { sentence: String },
    /// Interpret a sentence into its spatial-semantic structure.
    Interpret {
        sentence: String,
        /// Print the positional bracket form instead of the canonical one.
        #[arg(long)]
        paper_style: bool,
        /// Print the structure as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Convert a sentence between description styles.
    Convert {
        sentence: String,
        /// Target style: constructive | from-above.
        #[arg(long)]
        to: String,
    },
    /// Verify a sentence against two shape files bound to shape1/shape2.
    Verify {
        #[arg(long)]
        sentence: String,
        #[arg(long)]
        shape1: PathBuf,
        #[arg(long)]
        shape2: PathBuf,
    },
    /// Run a derivation and write its trace and report.
    Derive {
        /// Rule-set file (JSON array of rule pairs).
        #[arg(long)]
        rules: PathBuf,
        /// Initial shape file.
        #[arg(long)]
        init: PathBuf,
        /// Maximum number of steps.
        #[arg(long)]
        steps: usize,
        /// Selection strategy: first | random | script.
        #[arg(long, default_value = "first")]
        strategy: String,
        /// Seed for the random strategy (falls back to $VERBA_SEED, then 0).
        #[arg(long)]
        seed: Option<u64>,
        /// Script file for the script strategy: [{"rule": ..., "match": N}].
        #[arg(long)]
        script: Option<PathBuf>,
        /// Output directory for trace.json, SVGs, and index.html.
        #[arg(long)]
        out: PathBuf,
        /// Exclude reflections from subshape matching.
        #[arg(long)]
        no_reflections: bool,
    },
    /// Render a shape file to SVG.
    Render {
        #[arg(long)]
        shape: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse(_) => EXIT_PARSE,
        Error::Sem(_) => EXIT_SEM,
        _ => EXIT_IO,
    }
}

fn load_shape(path: &PathBuf) -> Result<Shape, Error> {
    let text = std::fs::read_to_string(path)?;
    Shape::from_json_str(&text)
}

fn run(cli: Cli) -> Result<u8, Error> {
    let grammar = Grammar::builtin();
    match cli.command {
        Command::Parse { sentence } => {
            let tokens = tokenize(&sentence)?;
            let trees = parse_tokens(&grammar, &tokens)?;
            println!("{}", render_tree(&trees[0]));
            Ok(0)
        }
        Command::Interpret {
            sentence,
            paper_style,
            json,
        } => {
            let tokens = tokenize(&sentence)?;
            let trees = parse_tokens(&grammar, &tokens)?;
            let meaning = interpret(&grammar, &trees[0])?;
            if paper_style {
                println!("{}", meaning.paper_style());
            } else if json {
                println!("{}", serde_json::to_string_pretty(&meaning.to_json())?);
            } else {
                println!("{}", meaning.serialize());
            }
            Ok(0)
        }
        Command::Convert { sentence, to } => {
            let style = Style::from_name(&to).ok_or_else(|| {
                Error::Io(std::io::Error::new(
                    std::io::ErrorKind::InvalidInput,
                    format!("unknown style {to:?}; use constructive or from-above"),
                ))
            })?;
            println!("{}", convert_style(&grammar, &sentence, style)?);
            Ok(0)
        }
        Command::Verify {
            sentence,
            shape1,
            shape2,
        } => {
            let s1 = load_shape(&shape1)?;
            let s2 = load_shape(&shape2)?;
            let verdict = verify_sentence(&grammar, &sentence, &s1, &s2)?;
            println!("{}", verdict.summary());
            Ok(if verdict.status == VerificationStatus::Refuted {
                EXIT_REFUTED
            } else {
                0
            })
        }
        Command::Derive {
            rules,
            init,
            steps,
            strategy,
            seed,
            script,
            out,
            no_reflections,
        } => {
            let pairs = load_rules(&grammar, &std::fs::read_to_string(&rules)?)?;
            let initial = load_shape(&init)?;
            let strategy = match strategy.as_str() {
                "first" => Strategy::First,
                "random" => {
                    let seed = seed
                        .or_else(|| {
                            std::env::var("VERBA_SEED").ok().and_then(|v| v.parse().ok())
                        })
                        .unwrap_or(0);
                    Strategy::Random(seed)
                }
                "script" => {
                    let path = script.ok_or_else(|| {
                        Error::Io(std::io::Error::new(
                            std::io::ErrorKind::InvalidInput,
                            "--strategy script needs --script FILE",
                        ))
                    })?;
                    let choices: Vec<ScriptChoice> =
                        serde_json::from_str(&std::fs::read_to_string(path)?)?;
                    Strategy::Script(choices)
                }
                other => {
                    return Err(Error::Io(std::io::Error::new(
                        std::io::ErrorKind::InvalidInput,
                        format!("unknown strategy {other:?}"),
                    )))
                }
            };
            let opts = MatchOptions {
                allow_reflection: !no_reflections,
            };
            let derivation = derive(&grammar, &pairs, &initial, strategy, steps, opts)?;
            write_report(&out, &derivation)?;
            println!(
                "{} step(s); terminated: {}; report written to {}",
                derivation.steps.len(),
                derivation.termination.name(),
                out.display()
            );
            Ok(0)
        }
        Command::Render { shape, out } => {
            let s = load_shape(&shape)?;
            std::fs::write(&out, shape_svg(&s, &RenderSpec::default()))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
