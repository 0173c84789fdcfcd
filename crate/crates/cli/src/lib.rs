//! Command dispatch for the `combproof` binary.
//!
//! Exit codes: 0 success, 1 semantic failure (not a tautology, invalid
//! proof), 2 usage error or malformed input, 3 resource limit exceeded.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use combproof::formula::{falsifying_valuation_with_limit, DEFAULT_MAX_VARS};
use combproof::semantics::{
    clause_is_true, clauses_with_limit, find_false_clause, DEFAULT_MAX_CLAUSES,
};
use combproof::synth::prove_with_limit;
use combproof::{
    dot, graph_of, json, parse_proposition, verify, Error, LabelledGraph, Proposition, Vertex,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "combproof",
    version,
    about = "Combinatorial proofs for propositional logic"
)]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Largest number of variables the truth-table check will enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VARS)]
    max_vars: usize,

    /// Largest number of clauses (or partial clauses) materialised.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CLAUSES)]
    max_clauses: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Pretty-print a formula.
    Parse { formula: String },
    /// Decide tautology by truth tables and by clauses of the graph.
    Taut { formula: String },
    /// Print the labelled graph of a formula.
    Graph { formula: String },
    /// List the clauses of the graph of a formula.
    Clauses { formula: String },
    /// Synthesize a combinatorial proof.
    Prove {
        formula: String,
        /// Also write a DOT rendering of the proof to this file.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Check a proof file.
    Verify { proof: String },
    /// Render a proof file, or the graph of a formula, as DOT.
    Dot { input: String },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. } | Error::Malformed(_) => EXIT_USAGE,
            Error::ResourceLimit { .. } => EXIT_LIMIT,
            _ => EXIT_FAILURE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_stdin(&mut self) -> Result<String, Failure> {
        let mut text = String::new();
        self.stdin
            .read_to_string(&mut text)
            .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
        Ok(text)
    }

    fn formula(&mut self, arg: &str) -> Result<Proposition, Failure> {
        let text = if arg == "-" {
            self.read_stdin()?
        } else {
            arg.to_string()
        };
        Ok(parse_proposition(text.trim())?)
    }

    fn file(&mut self, arg: &str) -> Result<String, Failure> {
        if arg == "-" {
            return self.read_stdin();
        }
        fs::read_to_string(arg).map_err(|e| usage(format!("cannot read `{arg}`: {e}")))
    }

    fn print(&mut self, text: &str) -> Result<(), Failure> {
        let text = if text.ends_with('\n') {
            text.to_string()
        } else {
            format!("{text}\n")
        };
        self.out.write_all(text.as_bytes()).map_err(|e| Failure {
            code: EXIT_FAILURE,
            message: format!("cannot write output: {e}"),
        })
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut io = Io { stdin, out: stdout };
    match dispatch(&cli, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn pick(
    format: Option<Format>,
    default: Format,
    allowed: &[Format],
    command: &str,
) -> Result<Format, Failure> {
    let f = format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(usage(
            format!("`{command}` does not support --format {f:?}").to_lowercase(),
        ))
    }
}

fn dispatch(cli: &Cli, io: &mut Io) -> Result<i32, Failure> {
    use Format::*;
    match &cli.command {
        Command::Parse { formula } => {
            pick(cli.format, Text, &[Text], "parse")?;
            let phi = io.formula(formula)?;
            io.print(&phi.to_string())?;
            Ok(EXIT_OK)
        }
        Command::Taut { formula } => {
            let format = pick(cli.format, Text, &[Text, Json], "taut")?;
            let phi = io.formula(formula)?;
            let falsifier = falsifying_valuation_with_limit(&phi, cli.max_vars)?;
            let brute = falsifier.is_none();
            let g = graph_of(&phi);
            let false_clause = find_false_clause(&g, cli.max_clauses)?;
            let by_clauses = false_clause.is_none();
            if format == Json {
                let v = serde_json::json!({ "bruteforce": brute, "clauses": by_clauses });
                io.print(&serde_json::to_string_pretty(&v).unwrap())?;
            } else {
                io.print(&format!("bruteforce: {brute}\nclauses: {by_clauses}"))?;
                if let Some(f) = falsifier {
                    let assignment: Vec<String> = phi
                        .variables()
                        .iter()
                        .map(|v| format!("{v}={}", u8::from(f.get(v).unwrap())))
                        .collect();
                    io.print(&format!("falsified by: {}", assignment.join(" ")))?;
                }
                if let Some(c) = false_clause {
                    io.print(&format!("false clause: {}", render_clause(&g, &c)))?;
                }
            }
            if brute != by_clauses {
                return Err(Failure {
                    code: EXIT_FAILURE,
                    message: "truth-table and clause engines disagree".into(),
                });
            }
            Ok(if brute { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Graph { formula } => {
            let format = pick(cli.format, Json, &[Json, Dot, Text], "graph")?;
            let g = graph_of(&io.formula(formula)?);
            let text = match format {
                Json => json::labelled_to_json(&g),
                Dot => dot::labelled_to_dot(&g),
                Text => graph_text(&g),
            };
            io.print(&text)?;
            Ok(EXIT_OK)
        }
        Command::Clauses { formula } => {
            let format = pick(cli.format, Text, &[Text, Json], "clauses")?;
            let g = graph_of(&io.formula(formula)?);
            let cs = clauses_with_limit(&g, cli.max_clauses)?;
            if format == Json {
                let v: Vec<serde_json::Value> = cs
                    .iter()
                    .map(|c| {
                        serde_json::json!({
                            "vertices": c.iter().collect::<Vec<_>>(),
                            "true": clause_is_true(&g, c).unwrap(),
                        })
                    })
                    .collect();
                io.print(&serde_json::to_string_pretty(&v).unwrap())?;
            } else {
                for c in &cs {
                    let truth = clause_is_true(&g, c).unwrap();
                    io.print(&format!("{} {truth}", render_clause(&g, c)))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Prove {
            formula,
            dot: dot_path,
        } => {
            let format = pick(cli.format, Json, &[Json, Dot, Text], "prove")?;
            let phi = io.formula(formula)?;
            let proof = match prove_with_limit(&phi, cli.max_clauses) {
                Ok(p) => p,
                Err(Error::NotTrue { clause }) => {
                    let g = graph_of(&phi);
                    let clause = clause.into_iter().collect();
                    io.print(&format!(
                        "NotTrue: no combinatorial proof; false clause {}",
                        render_clause(&g, &clause)
                    ))?;
                    return Ok(EXIT_FAILURE);
                }
                Err(e) => return Err(e.into()),
            };
            if let Some(path) = dot_path {
                write_file(path, &dot::proof_to_dot(&proof))?;
            }
            let text = match format {
                Json => json::proof_to_json(&proof),
                Dot => dot::proof_to_dot(&proof),
                Text => proof_text(&proof),
            };
            io.print(&text)?;
            Ok(EXIT_OK)
        }
        Command::Verify { proof } => {
            let format = pick(cli.format, Text, &[Text, Json], "verify")?;
            let text = io.file(proof)?;
            let proof = json::proof_from_json(&text)?;
            let violations = verify(&proof).err().unwrap_or_default();
            if format == Json {
                let list: Vec<String> = violations.iter().map(ToString::to_string).collect();
                let v = serde_json::json!({ "ok": violations.is_empty(), "violations": list });
                io.print(&serde_json::to_string_pretty(&v).unwrap())?;
            } else if violations.is_empty() {
                io.print("OK")?;
            } else {
                for v in &violations {
                    io.print(&v.to_string())?;
                }
            }
            Ok(if violations.is_empty() {
                EXIT_OK
            } else {
                EXIT_FAILURE
            })
        }
        Command::Dot { input } => {
            pick(cli.format, Dot, &[Dot], "dot")?;
            let text = if input == "-" {
                io.read_stdin()?
            } else if Path::new(input).is_file() {
                io.file(input)?
            } else {
                input.clone()
            };
            let trimmed = text.trim_start();
            let out = if trimmed.starts_with('{') {
                dot::proof_to_dot(&json::proof_from_json(&text)?)
            } else {
                dot::labelled_to_dot(&graph_of(&parse_proposition(text.trim())?))
            };
            io.print(&out)?;
            Ok(EXIT_OK)
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("cannot write `{}`: {e}", path.display())))
}

fn render_clause(g: &LabelledGraph, clause: &std::collections::BTreeSet<Vertex>) -> String {
    let parts: Vec<String> = clause
        .iter()
        .map(|v| format!("{v}:{}", g.label(*v).unwrap()))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn graph_text(g: &LabelledGraph) -> String {
    let vertices: Vec<String> = g.labels().iter().map(|(v, a)| format!("{v}:{a}")).collect();
    let edges: Vec<String> = g.graph().edges().map(|(v, w)| format!("{v}-{w}")).collect();
    format!(
        "vertices: {}\nedges: {}",
        vertices.join(" "),
        edges.join(" ")
    )
}

fn proof_text(proof: &combproof::CombinatorialProof) -> String {
    let classes: Vec<String> = proof
        .witness
        .classes()
        .iter()
        .map(|k| {
            format!(
                "{{{}}}",
                k.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    let edges: Vec<String> = proof
        .witness
        .graph()
        .edges()
        .map(|(v, w)| format!("{v}-{w}"))
        .collect();
    let map: Vec<String> = proof.map.iter().map(|(v, t)| format!("{v}->{t}")).collect();
    format!(
        "target: {}\nwitness classes: {}\nwitness edges: {}\nmap: {}",
        graph_text(&proof.target).replace('\n', "; "),
        classes.join(" "),
        edges.join(" "),
        map.join(" ")
    )
}
