//! Argument definitions and dispatch.

use std::io::Read;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use divfree_core::modules::order_compare;
use divfree_core::verify::{GeneratorVariant, Report};
use divfree_core::{print, Exec, ModuleKind, MultiIndex, Weight};
use serde_json::{json, Value};

use crate::config::{parse_rational, Config};
use crate::parser::{parse_algebra, parse_module, parse_witt};
use crate::suites::Setup;
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "divfree", version, about = "Exact computations in divergence-free Lie algebras and their weight modules")]
pub struct Cli {
    /// JSON configuration file; the default configuration is used without one.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true, value_name = "N")]
    pub window_radius: Option<u32>,
    #[arg(long, global = true, value_name = "N")]
    pub window_degree: Option<u32>,
    #[arg(long, global = true, value_name = "N")]
    pub seed: Option<u64>,
    /// Run verification loops on the current thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Expression arguments that are omitted or `-` are read from stdin, one per line.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lie bracket [A, B] of two operators.
    Bracket { a: Option<String>, b: Option<String> },
    /// Apply operator W to algebra element A.
    Apply { w: Option<String>, a: Option<String> },
    /// Divergence of operator W.
    Div { w: Option<String> },
    /// Act with operator W on module vector V.
    Act {
        w: Option<String>,
        v: Option<String>,
        #[arg(long, default_value = "A_mu")]
        module: String,
        /// Module parameter, e.g. "(1/2,0,0)"; defaults to the configured mu.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// Split module vector V into weight components.
    Decompose {
        v: Option<String>,
        #[arg(long, default_value = "A_mu")]
        module: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// Compare multi-indices I and J in the filtration order.
    Order { i: String, j: String },
    /// Bracket closure of a generating set over the window.
    Gens {
        #[arg(long)]
        variant: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

/// Text for stdout and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

pub fn run(cli: Cli, stdin: &mut dyn Read) -> Result<Outcome, CliError> {
    let mut cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    if let Some(r) = cli.window_radius {
        cfg.window.gamma_radius = r;
    }
    if let Some(d) = cli.window_degree {
        cfg.window.idx_degree = d;
    }
    if let Some(s) = cli.seed {
        cfg.window.seed = s;
    }
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    let setup = Setup::new(&cfg, exec)?;
    let mut input = StdinArgs::new(stdin);
    let json = cli.json;
    let space = &setup.space;
    let rho = &setup.rho;

    let value = |command: &str, result: String| {
        if json {
            Outcome::ok(json!({ "command": command, "result": result }).to_string() + "\n")
        } else {
            Outcome::ok(result + "\n")
        }
    };

    match cli.command {
        Command::Bracket { a, b } => {
            let a = parse_witt(&input.take(a, "A")?, space, rho)?;
            let b = parse_witt(&input.take(b, "B")?, space, rho)?;
            Ok(value("bracket", print::witt(&space.bracket(&a, &b)?)))
        }
        Command::Apply { w, a } => {
            let w = parse_witt(&input.take(w, "W")?, space, rho)?;
            let a = parse_algebra(&input.take(a, "A")?, space, rho)?;
            Ok(value("apply", print::algebra(&space.apply(&w, &a)?)))
        }
        Command::Div { w } => {
            let w = parse_witt(&input.take(w, "W")?, space, rho)?;
            Ok(value("div", print::algebra(&space.divergence(&w)?)))
        }
        Command::Act { w, v, module, mu } => {
            let m = build_module(&setup, &module, mu.as_deref())?;
            let w = parse_witt(&input.take(w, "W")?, m.space(), &m.space().zero_group())?;
            let v = parse_module(&input.take(v, "V")?, &m)?;
            Ok(value("act", print::module(&m.act(&w, &v)?)))
        }
        Command::Decompose { v, module, mu } => {
            let m = build_module(&setup, &module, mu.as_deref())?;
            let v = parse_module(&input.take(v, "V")?, &m)?;
            let parts = m.weight_decompose(&v);
            if json {
                let parts: Vec<Value> = parts
                    .iter()
                    .map(|(w, c)| json!({ "weight": w.to_string(), "component": print::module(c) }))
                    .collect();
                Ok(Outcome::ok(json!({ "command": "decompose", "components": parts }).to_string() + "\n"))
            } else {
                let lines: String = parts.iter().map(|(w, c)| format!("{w}: {}\n", print::module(c))).collect();
                Ok(Outcome::ok(lines))
            }
        }
        Command::Order { i, j } => {
            let ord = order_compare(&multi_index(&i)?, &multi_index(&j)?)?;
            let word = match ord {
                std::cmp::Ordering::Less => "less",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "greater",
            };
            Ok(value("order", word.to_string()))
        }
        Command::Gens { variant } => {
            let variant = GeneratorVariant::from_str(&variant).map_err(|e| CliError::Usage(e.to_string()))?;
            let report = setup.verifier().check_generators(variant);
            Ok(render_reports(&format!("gens_{}", variant.name()), &[report], json))
        }
        Command::Verify { suite } => {
            let reports = setup.run_suite(&suite)?;
            Ok(render_reports(&suite, &reports, json))
        }
    }
}

fn build_module(setup: &Setup, kind: &str, mu: Option<&str>) -> Result<divfree_core::WeightModule, CliError> {
    let kind = ModuleKind::from_str(kind).map_err(|e| CliError::Usage(e.to_string()))?;
    let param = match mu {
        None => None,
        Some(text) => {
            let space = if kind.is_graded() { setup.graded_space()? } else { setup.space.clone() };
            let entries = parse_vector(text)?;
            Some(Weight::new(space.signature(), entries)?)
        }
    };
    setup.module(kind, param)
}

/// `"(1/2,0,0)"` or `"1/2,0,0"`.
pub fn parse_vector(text: &str) -> Result<Vec<divfree_core::Q>, CliError> {
    let t = text.trim();
    let inner = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(t);
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|s| parse_rational(s).map_err(|_| CliError::Usage(format!("'{}' in '{text}' is not a rational", s.trim()))))
        .collect()
}

/// `"[1,1,0]"` or `"1,1,0"`.
pub fn multi_index(text: &str) -> Result<MultiIndex, CliError> {
    let t = text.trim();
    let inner = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')).unwrap_or(t);
    if inner.trim().is_empty() {
        return Ok(MultiIndex::new(Vec::new()));
    }
    inner
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| CliError::Usage(format!("'{}' in '{text}' is not a nonnegative integer", s.trim())))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(MultiIndex::new)
}

pub fn render_reports(suite: &str, reports: &[Report], json: bool) -> Outcome {
    let pass = reports.iter().all(Report::passed);
    let status = if pass { "pass" } else { "fail" };
    let stdout = if json {
        json!({ "suite": suite, "status": status, "reports": reports }).to_string() + "\n"
    } else {
        let mut out = String::new();
        for r in reports {
            let s = if r.passed() { "pass" } else { "FAIL" };
            out.push_str(&format!("{}: {s} ({} tested, {} ms)\n", r.check, r.tested, r.millis));
            for n in &r.notes {
                out.push_str(&format!("  {n}\n"));
            }
            if let Some(c) = &r.counterexample {
                out.push_str(&format!("  counterexample: {}\n", c.description));
                for (k, v) in &c.inputs {
                    out.push_str(&format!("    {k} = {v}\n"));
                }
                out.push_str(&format!("    lhs = {}\n    rhs = {}\n", c.lhs, c.rhs));
            }
        }
        out.push_str(&format!("{suite}: {status}\n"));
        out
    };
    Outcome { stdout, code: if pass { 0 } else { 1 } }
}

/// Lazily read stdin lines, handed out to arguments that were not given.
struct StdinArgs<'a> {
    src: &'a mut dyn Read,
    lines: Option<std::vec::IntoIter<String>>,
}

impl<'a> StdinArgs<'a> {
    fn new(src: &'a mut dyn Read) -> Self {
        Self { src, lines: None }
    }

    fn take(&mut self, arg: Option<String>, name: &str) -> Result<String, CliError> {
        match arg {
            Some(s) if s != "-" => return Ok(s),
            _ => {}
        }
        if self.lines.is_none() {
            let mut text = String::new();
            self.src
                .read_to_string(&mut text)
                .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
            let lines: Vec<String> = text.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect();
            self.lines = Some(lines.into_iter());
        }
        self.lines
            .as_mut()
            .and_then(Iterator::next)
            .ok_or_else(|| CliError::Usage(format!("missing expression {name} (pass it as an argument or a line on stdin)")))
    }
}
