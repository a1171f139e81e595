//! Command-line front end. Each verb loads its inputs, calls one library
//! operation and prints the result; no algebra lives here.

use std::fs;
use std::io::{Read, Write};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::doc::ElementDoc;
use crate::expr;
use crate::fixtures;
use crate::group::{CoeffMatrix, MRiordanElement};
use crate::lattice::{self, GfClaim, GfReport, LatticeSpec};
use crate::seq::{self, IntSequence};

#[derive(Debug, Parser)]
#[command(name = "mriordan", version, about = "Exact m-Riordan group arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
}

/// An element given as a document path (`-` for stdin) or inline with
/// `--m`, `--g` and repeated `--f`.
#[derive(Debug, Args)]
struct ElementArgs {
    /// Element document (JSON); `-` reads standard input.
    input: Option<String>,
    /// Modulus for an inline element.
    #[arg(long, requires_all = ["g", "f"], conflicts_with = "input")]
    m: Option<usize>,
    /// g for an inline element.
    #[arg(long, requires = "m")]
    g: Option<String>,
    /// One f_i for an inline element; repeat m times.
    #[arg(long, requires = "m")]
    f: Vec<String>,
    /// Truncation order (overrides the document; default 60).
    #[arg(long)]
    order: Option<usize>,
}

#[derive(Debug, Args)]
struct SequenceOutput {
    /// Number of terms.
    #[arg(long, default_value_t = 20)]
    terms: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the leading rows of the element's matrix.
    Matrix {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long, default_value_t = 10)]
        rows: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Multiply two element documents; prints the product document.
    Product {
        left: String,
        right: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Invert an element; prints the inverse document.
    Invert {
        #[command(flatten)]
        element: ElementArgs,
    },
    /// Apply an element to a series G in R[[x^m]]: g * G(h).
    Apply {
        #[command(flatten)]
        element: ElementArgs,
        /// The series G as an expression in x.
        #[arg(long)]
        series: String,
        #[command(flatten)]
        output: SequenceOutput,
    },
    /// Row sums of the element's matrix.
    Rowsums {
        #[command(flatten)]
        element: ElementArgs,
        #[command(flatten)]
        output: SequenceOutput,
    },
    /// Diagonal sums sum_k a_{n-k,k} of the element's matrix.
    Diagsums {
        #[command(flatten)]
        element: ElementArgs,
        #[command(flatten)]
        output: SequenceOutput,
    },
    /// Hankel transform of a sequence file (`-` for stdin).
    Hankel {
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Split a sequence file into m interleaved slots, one per line.
    Interleave {
        input: String,
        #[arg(long)]
        m: usize,
    },
    /// Count lattice paths for a step-rule spec.
    Lattice {
        spec: String,
        #[arg(long, default_value_t = 10)]
        rows: usize,
        /// Print left-factor counts instead of the table.
        #[arg(long)]
        left_factors: bool,
        /// Check a closed-form claim document against the counts.
        #[arg(long, conflicts_with = "left_factors")]
        verify: Option<String>,
        /// Columns checked with --verify.
        #[arg(long, default_value_t = 6)]
        columns: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run every built-in reproduction fixture.
    VerifyPaper,
}

/// Runs the tool on `args` (including the program name) and returns the
/// process exit status: 0 on success, 1 on domain or verification failure,
/// 2 on usage errors.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = err.exit_code();
            let rendered = err.render().to_string();
            let _ = if err.use_stderr() { stderr.write_all(rendered.as_bytes()) } else { stdout.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let mut io = Io { stdin, stdin_used: false };
    match execute(cli.command, &mut io, stdout) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(err) => {
            let _ = writeln!(stderr, "error: {err:#}");
            1
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String> {
        if path == "-" {
            if self.stdin_used {
                bail!("standard input can only be read once");
            }
            self.stdin_used = true;
            let mut text = String::new();
            self.stdin.read_to_string(&mut text).context("reading standard input")?;
            Ok(text)
        } else {
            fs::read_to_string(path).with_context(|| format!("reading {path}"))
        }
    }

    fn element(&mut self, args: &ElementArgs) -> Result<MRiordanElement> {
        Ok(self.document(args)?.evaluate(args.order)?)
    }

    fn document(&mut self, args: &ElementArgs) -> Result<ElementDoc> {
        match (&args.input, args.m, &args.g) {
            (Some(path), _, _) => Ok(ElementDoc::from_json(&self.read(path)?)?),
            (None, Some(m), Some(g)) => {
                Ok(ElementDoc { m, order: None, bindings: Vec::new(), g: g.clone(), f: args.f.clone() })
            }
            _ => Err(anyhow!("give an element document path, `-`, or --m with --g and --f")),
        }
    }

    fn sequence(&mut self, path: &str) -> Result<IntSequence> {
        self.read(path)?.parse::<IntSequence>().map_err(|e| anyhow!("{e}"))
    }
}

fn execute(command: Command, io: &mut Io<'_>, out: &mut dyn Write) -> Result<bool> {
    match command {
        Command::Matrix { element, rows, format } => {
            let matrix = io.element(&element)?.to_matrix(rows)?;
            write_matrix(out, &matrix, format)?;
        }
        Command::Product { left, right, order } => {
            let a = ElementDoc::from_json(&io.read(&left)?)?.evaluate(order)?;
            let b = ElementDoc::from_json(&io.read(&right)?)?.evaluate(order)?;
            writeln!(out, "{}", ElementDoc::from_element(&a.product(&b)?).to_json())?;
        }
        Command::Invert { element } => {
            let inverse = io.element(&element)?.inverse()?;
            writeln!(out, "{}", ElementDoc::from_element(&inverse).to_json())?;
        }
        Command::Apply { element, series, output } => {
            let e = io.element(&element)?;
            let parsed = expr::parse(&series)?;
            let arg = expr::evaluate(&parsed, &Default::default(), e.order())?;
            let image = e.apply_ftra(&arg)?;
            let terms = IntSequence::new(image.coeffs().to_vec());
            write_sequence(out, &terms.take(output.terms), output.format)?;
        }
        Command::Rowsums { element, output } => {
            let sums = seq::row_sums(&io.element(&element)?, output.terms)?;
            write_sequence(out, &sums, output.format)?;
        }
        Command::Diagsums { element, output } => {
            let sums = seq::diagonal_sums(&io.element(&element)?, output.terms)?;
            write_sequence(out, &sums, output.format)?;
        }
        Command::Hankel { input, format } => {
            let s = io.sequence(&input)?;
            write_sequence(out, &seq::hankel_transform(&s), format)?;
        }
        Command::Interleave { input, m } => {
            if m == 0 {
                bail!("--m must be at least 1");
            }
            for part in seq::interleave_split(&io.sequence(&input)?, m) {
                write_sequence(out, &part, Format::Csv)?;
            }
        }
        Command::Lattice { spec, rows, left_factors, verify, columns, format } => {
            let spec = LatticeSpec::from_json(&io.read(&spec)?)?;
            if let Some(claim_path) = verify {
                let claim = GfClaim::from_json(&io.read(&claim_path)?)?;
                let report = lattice::verify_against_gf(&spec, &claim, rows, columns)?;
                writeln!(out, "columns: {}", describe(&report.columns))?;
                if let Some(left) = &report.left_factors {
                    writeln!(out, "left factors: {}", describe(left))?;
                }
                return Ok(report.is_match());
            } else if left_factors {
                write_sequence(out, &spec.left_factors(rows), format)?;
            } else {
                write_matrix(out, &spec.count_table(rows), format)?;
            }
        }
        Command::VerifyPaper => {
            let fixtures = fixtures::all();
            let mut failed = 0;
            for fixture in &fixtures {
                match fixture.run() {
                    Ok(()) => writeln!(out, "PASS {} - {}", fixture.name, fixture.description)?,
                    Err(msg) => {
                        failed += 1;
                        writeln!(out, "FAIL {} - {}: {msg}", fixture.name, fixture.description)?;
                    }
                }
            }
            writeln!(out, "{} passed, {failed} failed", fixtures.len() - failed)?;
            return Ok(failed == 0);
        }
    }
    Ok(true)
}

fn describe(report: &GfReport) -> String {
    match report {
        GfReport::Match { checked } => format!("match ({checked} values)"),
        GfReport::Mismatch { n, k: Some(k), counted, predicted } => {
            format!("mismatch at t({n},{k}): counted {counted}, predicted {predicted}")
        }
        GfReport::Mismatch { n, k: None, counted, predicted } => {
            format!("mismatch at n = {n}: counted {counted}, predicted {predicted}")
        }
    }
}

fn write_sequence(out: &mut dyn Write, s: &IntSequence, format: Format) -> Result<()> {
    let text = match format {
        Format::Plain => s.to_plain(),
        Format::Csv => s.to_csv(),
    };
    Ok(out.write_all(text.as_bytes())?)
}

fn write_matrix(out: &mut dyn Write, matrix: &CoeffMatrix, format: Format) -> Result<()> {
    match format {
        Format::Plain => write!(out, "{matrix}")?,
        Format::Csv => {
            for n in 0..matrix.size() {
                let cells: Vec<String> = (0..matrix.size()).map(|k| matrix.get(n, k).to_string()).collect();
                writeln!(out, "{}", cells.join(","))?;
            }
        }
    }
    Ok(())
}
