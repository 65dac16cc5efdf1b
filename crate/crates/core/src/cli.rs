//! The `sweeplab` command line.
//!
//! Exit codes: 0 success, 1 verification counterexample, 2 input error,
//! 3 enumeration limit exceeded, 4 flag misuse.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::paths::{enumerate_dyck, Params, StepWord, DEFAULT_LIMIT, LIMIT_ENV};
use crate::render::{render, Style};
use crate::statistics::{area_cells, area_rank_formula, dinv_cells, dinv_pairs, joint_distribution};
use crate::sweep::{sweep, unsweep};
use crate::verify::{verify, Fault, Stats};

pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;
pub const EXIT_MISUSE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "sweeplab", version, about = "Rational Dyck paths: sweep map, area and dinv")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long)]
    m: i64,
    #[arg(long)]
    n: i64,
    #[arg(long, default_value_t = 1)]
    d: i64,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Largest dm+dn that may be enumerated.
    #[arg(long, env = LIMIT_ENV, default_value_t = DEFAULT_LIMIT)]
    limit: usize,
    /// Worker threads for verify (0 = all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Write output to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Jsonl,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StyleArg {
    Grid,
    Diagram,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Ranks, area, dinv and sweep image of one path.
    Stats {
        word: String,
        #[command(flatten)]
        common: Common,
    },
    /// Every Dyck path with its statistics.
    Enumerate {
        #[command(flatten)]
        common: Common,
    },
    /// Check every invariant on every Dyck path.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Joint distribution of (area, dinv).
    Table {
        #[command(flatten)]
        common: Common,
    },
    /// SVG picture of a path.
    Render {
        word: String,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = StyleArg::Grid)]
        style: StyleArg,
        /// Column whose start the green sweep line passes through.
        #[arg(long)]
        highlight: Option<usize>,
    },
    /// Sweep image of a path.
    Sweep {
        word: String,
        #[command(flatten)]
        common: Common,
    },
    /// Dyck preimage of a path under sweep.
    Unsweep {
        word: String,
        #[command(flatten)]
        common: Common,
    },
}

/// A failed command: exit code and message.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::LimitExceeded { .. } => EXIT_LIMIT,
            Error::NotInImage(_) | Error::NonIntegral { .. } | Error::NoMoveAvailable { .. } => EXIT_COUNTEREXAMPLE,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn misuse(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_MISUSE,
        message: message.into(),
    }
}

#[derive(Serialize)]
struct Record<'a> {
    word: &'a str,
    m: u32,
    n: u32,
    d: u32,
    area: u64,
    dinv: u64,
    sweep: &'a str,
}

impl Common {
    fn params(&self) -> Result<Params, Failure> {
        Ok(Params::new(self.m, self.n, self.d)?)
    }

    fn format(&self, allowed: &[Format], command: &str) -> Result<Format, Failure> {
        let format = self.format.unwrap_or(allowed[0]);
        if allowed.contains(&format) {
            Ok(format)
        } else {
            Err(misuse(format!(
                "--format {} is not available for {command}",
                format.to_possible_value().unwrap().get_name()
            )))
        }
    }

    fn dyck_word(&self, text: &str) -> Result<StepWord, Failure> {
        let word = StepWord::parse(text, self.params()?)?;
        if !word.is_dyck() {
            return Err(Error::NotDyck(word.to_string()).into());
        }
        Ok(word)
    }
}

fn jsonl(word: &StepWord) -> Result<String, Failure> {
    let (w, image) = (word.to_string(), sweep(word).to_string());
    let p = word.params();
    let record = Record {
        word: &w,
        m: p.m(),
        n: p.n(),
        d: p.d(),
        area: area_cells(word)?,
        dinv: dinv_pairs(word)?,
        sweep: &image,
    };
    Ok(serde_json::to_string(&record).expect("record serializes") + "\n")
}

/// Output of a successful command plus its exit code (nonzero only for a
/// failed verification).
struct Output {
    stdout: String,
    stderr: String,
    code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

fn cmd_stats(text: &str, common: &Common) -> Result<Output, Failure> {
    let format = common.format(&[Format::Text, Format::Jsonl], "stats")?;
    let word = common.dyck_word(text)?;
    if format == Format::Jsonl {
        return Ok(Output::ok(jsonl(&word)?));
    }
    let p = word.params();
    let image = sweep(&word);
    let ranks: Vec<String> = word.ranks().iter().map(i64::to_string).collect();
    let mut out = String::new();
    writeln!(out, "word={word} m={} n={} d={}", p.m(), p.n(), p.d()).unwrap();
    writeln!(out, "ranks={}", ranks.join(",")).unwrap();
    writeln!(
        out,
        "area={} area_formula={}",
        area_cells(&word)?,
        area_rank_formula(&word)?
    )
    .unwrap();
    writeln!(out, "dinv={} dinv_cells={}", dinv_pairs(&word)?, dinv_cells(&word)?).unwrap();
    writeln!(out, "image={image} image_area={}", area_cells(&image)?).unwrap();
    Ok(Output::ok(out))
}

fn cmd_enumerate(common: &Common) -> Result<Output, Failure> {
    let format = common.format(&[Format::Text, Format::Csv, Format::Jsonl], "enumerate")?;
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str("word,area,dinv,sweep\n");
    }
    for word in enumerate_dyck(common.params()?, common.limit)? {
        let (area, dinv, image) = (area_cells(&word)?, dinv_pairs(&word)?, sweep(&word));
        match format {
            Format::Text => writeln!(out, "{word} area={area} dinv={dinv} sweep={image}").unwrap(),
            Format::Csv => writeln!(out, "{word},{area},{dinv},{image}").unwrap(),
            _ => out.push_str(&jsonl(&word)?),
        }
    }
    Ok(Output::ok(out))
}

fn cmd_verify(common: &Common, fault: Option<&str>) -> Result<Output, Failure> {
    common.format(&[Format::Text], "verify")?;
    let stats = match fault {
        None => Stats::default(),
        Some(name) => Fault::from_name(name)
            .ok_or_else(|| misuse(format!("unknown fault {name:?}")))?
            .stats(),
    };
    let report = verify(common.params()?, common.limit, common.jobs, stats)?;
    let mut output = Output::ok(report.to_string());
    if let Some(c) = report.first_failure() {
        output.code = EXIT_COUNTEREXAMPLE;
        output.stderr = format!("counterexample for {}: {}\n", c.name, c.first.as_deref().unwrap_or(""));
    }
    Ok(output)
}

fn cmd_table(common: &Common) -> Result<Output, Failure> {
    let format = common.format(&[Format::Text, Format::Csv], "table")?;
    let table = joint_distribution(common.params()?, common.limit)?;
    let verdict = if table.marginals_agree() { "EQUAL" } else { "DIFFERENT" };
    Ok(match format {
        Format::Csv => Output {
            stdout: table.to_csv(),
            stderr: format!("marginals: {verdict}\n"),
            code: 0,
        },
        _ => Output::ok(format!("{}marginals: {verdict}\n", table.to_matrix())),
    })
}

fn cmd_render(text: &str, common: &Common, style: StyleArg, highlight: Option<usize>) -> Result<Output, Failure> {
    common.format(&[Format::Svg], "render")?;
    let word = common.dyck_word(text)?;
    let style = match style {
        StyleArg::Grid => Style::Grid,
        StyleArg::Diagram => Style::Diagram,
    };
    match render(&word, style, highlight) {
        Ok(svg) => Ok(Output::ok(svg)),
        Err(e @ Error::IndexOutOfRange { .. }) => Err(misuse(format!("--highlight: {e}"))),
        Err(e) => Err(e.into()),
    }
}

fn dispatch(command: &Command) -> Result<(Output, &Common), Failure> {
    Ok(match command {
        Command::Stats { word, common } => (cmd_stats(word, common)?, common),
        Command::Enumerate { common } => (cmd_enumerate(common)?, common),
        Command::Verify { common, inject_fault } => (cmd_verify(common, inject_fault.as_deref())?, common),
        Command::Table { common } => (cmd_table(common)?, common),
        Command::Render {
            word,
            common,
            style,
            highlight,
        } => (cmd_render(word, common, *style, *highlight)?, common),
        Command::Sweep { word, common } => {
            common.format(&[Format::Text], "sweep")?;
            (Output::ok(format!("{}\n", sweep(&common.dyck_word(word)?))), common)
        }
        Command::Unsweep { word, common } => {
            common.format(&[Format::Text], "unsweep")?;
            let image = common.dyck_word(word)?;
            (Output::ok(format!("{}\n", unsweep(&image, common.limit)?)), common)
        }
    })
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MISUSE } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok((output, common)) => {
            eprint!("{}", output.stderr);
            match &common.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &output.stdout) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return EXIT_INPUT;
                    }
                }
                None => print!("{}", output.stdout),
            }
            output.code
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}
