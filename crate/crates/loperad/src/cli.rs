//! Batch command-line front end: enumeration, conversions between the word
//! and tree codings, canonical decomposition, and the verification suites.
//! Machine-readable JSON goes to standard output, human summaries to
//! standard error. Exit status: 0 on success, 1 on verification failure,
//! 2 on malformed input.

use crate::report::Report;
use crate::verify::{self, VerifyOpts};
use crate::words::{omega_to_word, phi_decode, psi_encode, word_to_omega, BinaryTree, Decomposition, LWord, OmegaWord};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "loperad",
    version,
    about = "Exact workbench for L-algebras, triplicial algebras and their generating functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// List a basis family at a given degree
    Enumerate {
        what: EnumerateTarget,
        /// Degree (words, even trees) or leaf count (colored trees); >= 1
        #[arg(long)]
        degree: usize,
        /// Number of colors for colored trees
        #[arg(long, default_value_t = 2)]
        colors: usize,
    },
    /// Convert between codings
    Convert {
        what: ConvertTarget,
        /// Input value: a word ("1121"), a sequence ("1,2,1"), or tree JSON
        #[arg(long = "in")]
        input: String,
    },
    /// Run a verification suite and print its report
    Verify {
        suite: Suite,
        /// Cap the degree ranges of the checks
        #[arg(long)]
        max_degree: Option<usize>,
        /// Graph JSON file for the graph suite
        #[arg(long)]
        input: Option<PathBuf>,
        /// Seed for the random-sample checks
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
    },
    /// Canonically decompose a word
    Decompose {
        #[arg(long)]
        word: String,
    },
}

#[derive(Copy, Clone, ValueEnum)]
pub enum EnumerateTarget {
    Lwords,
    Even,
    Colored,
}

#[derive(Copy, Clone, ValueEnum)]
pub enum ConvertTarget {
    OmegaToWord,
    WordToOmega,
    TreeToWord,
    WordToTree,
}

#[derive(Copy, Clone, ValueEnum)]
pub enum Suite {
    Dims,
    Series,
    Homology,
    Primitives,
    Idempotents,
    Triplicial,
    Graph,
    All,
}

/// Runs a parsed invocation; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Enumerate { what, degree, colors } => {
            let value = enumerate(what, degree, colors)?;
            println!("{value}");
            Ok(0)
        }
        Command::Convert { what, input } => {
            let value = convert(what, &input)?;
            println!("{value}");
            Ok(0)
        }
        Command::Decompose { word } => {
            let w = LWord::parse(&word).map_err(|e| e.to_string())?;
            println!("{}", decompose_json(&w));
            Ok(0)
        }
        Command::Verify { suite, max_degree, input, seed } => {
            let graph_input = match input {
                None => None,
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                    let value: Value =
                        serde_json::from_str(&text).map_err(|e| format!("bad JSON: {e}"))?;
                    Some(
                        crate::graphs::WeightedDigraph::from_json(&value)
                            .map_err(|e| e.to_string())?,
                    )
                }
            };
            let opts = VerifyOpts { max_degree, seed, graph_input };
            let reports = match suite {
                Suite::Dims => vec![verify::verify_dims(&opts)],
                Suite::Series => vec![verify::verify_series(&opts)],
                Suite::Homology => vec![verify::verify_homology(&opts)],
                Suite::Primitives => vec![verify::verify_primitives(&opts)],
                Suite::Idempotents => vec![verify::verify_idempotents(&opts)],
                Suite::Triplicial => vec![verify::verify_triplicial(&opts)],
                Suite::Graph => vec![verify::verify_graph(&opts)],
                Suite::All => verify::verify_all(&opts),
            };
            for report in &reports {
                eprintln!("{}", report.summary());
                for line in report.failures() {
                    eprintln!("{line}");
                }
            }
            let pass = reports.iter().all(|r| r.pass);
            let value = if reports.len() == 1 {
                serde_json::to_value(&reports[0]).expect("report serializes")
            } else {
                json!({
                    "suites": reports,
                    "pass": pass,
                })
            };
            println!("{value}");
            Ok(if pass { 0 } else { 1 })
        }
    }
}

fn enumerate(what: EnumerateTarget, degree: usize, colors: usize) -> Result<Value, String> {
    if degree == 0 {
        return Err("degrees start at 1".into());
    }
    Ok(match what {
        EnumerateTarget::Lwords => Value::Array(
            crate::words::enumerate_words(degree)
                .iter()
                .map(|w| Value::String(w.to_string()))
                .collect(),
        ),
        EnumerateTarget::Even => Value::Array(
            crate::trip::enumerate_even(degree)
                .iter()
                .map(|t| t.to_json())
                .collect(),
        ),
        EnumerateTarget::Colored => {
            if colors == 0 {
                return Err("at least one color is needed".into());
            }
            Value::Array(
                crate::freemag::enumerate_colored(colors, degree)
                    .iter()
                    .map(|t| t.to_json())
                    .collect(),
            )
        }
    })
}

fn convert(what: ConvertTarget, input: &str) -> Result<Value, String> {
    Ok(match what {
        ConvertTarget::OmegaToWord => {
            let o = OmegaWord::parse(input).map_err(|e| e.to_string())?;
            Value::String(omega_to_word(&o).to_string())
        }
        ConvertTarget::WordToOmega => {
            let w = LWord::parse(input).map_err(|e| e.to_string())?;
            Value::String(word_to_omega(&w).to_string())
        }
        ConvertTarget::TreeToWord => {
            let v: Value =
                serde_json::from_str(input).map_err(|e| format!("bad tree JSON: {e}"))?;
            let t = BinaryTree::from_json(&v)?;
            Value::String(psi_encode(&t).to_string())
        }
        ConvertTarget::WordToTree => {
            let w = LWord::parse(input).map_err(|e| e.to_string())?;
            match phi_decode(&w) {
                Some(t) => t.to_json(),
                None => Value::Null, // the zero element
            }
        }
    })
}

fn decompose_json(w: &LWord) -> Value {
    match w.decompose() {
        Decomposition::Generator => json!({"word": w.to_string(), "split": "generator"}),
        Decomposition::Succ(l, r) => json!({
            "word": w.to_string(),
            "split": "succ",
            "left": l.to_string(),
            "right": r.to_string(),
        }),
        Decomposition::Prec(l, r) => json!({
            "word": w.to_string(),
            "split": "prec",
            "left": l.to_string(),
            "right": r.to_string(),
        }),
    }
}

/// Re-exported for tests: run `verify all` programmatically.
pub fn all_reports(opts: &VerifyOpts) -> Vec<Report> {
    verify::verify_all(opts)
}
