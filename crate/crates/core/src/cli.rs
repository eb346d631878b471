//! The `zxcf` command line.
//!
//! Exit codes: 0 on success, 1 when the answer is negative (unequal codes,
//! rule violations, failed self-test), 2 for usage, input or format errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::circuit::{format_circuit, parse_circuit, synthesize_encoder, EncoderCircuit};
use crate::counting::{count_tableaus, count_zxcf_closed, count_zxcf_recursive, CountQuery};
use crate::error::{Error, Result};
use crate::oracle::{circuit_to_isometry, images_equal, MAX_QUBITS};
use crate::selftest;
use crate::tableau::{format_tableau, groups_equal, parse_tableau, StabilizerTableau};
use crate::zxcf::{canonicalize, canonicalize_encoder, decompile, enumerate_zxcf, render_dot, ZxcfDiagram};

#[derive(Parser, Debug)]
#[command(name = "zxcf", version, about = "Canonical ZX forms of Clifford encoders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compile a tableau or circuit file to canonical JSON.
    Compile {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write a Graphviz drawing here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Turn canonical JSON back into a stabilizer tableau.
    Decompile {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build an encoder circuit for a tableau.
    Synth {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether two tableau or circuit files encode the same code.
    Eq {
        a: PathBuf,
        b: PathBuf,
        /// Cross-check with dense linear algebra (small codes only).
        #[arg(long)]
        oracle: bool,
    },
    /// Check canonical JSON against the canonical-form rules.
    Validate { input: PathBuf },
    /// Print the tableau count, the recursion and the closed form.
    Count { n: usize, k: usize },
    /// Stream every canonical diagram of a shape as JSON lines.
    Enumerate {
        n: usize,
        k: usize,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Render canonical JSON as Graphviz DOT.
    Render {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the built-in end-to-end checks.
    Selftest {
        /// Largest register size for the random and exhaustive checks.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Random cases per check.
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
}

enum Code {
    Tableau(StabilizerTableau),
    Circuit(EncoderCircuit),
}

impl Code {
    fn read(path: &Path) -> Result<Code> {
        let text = read(path)?;
        let is_circuit = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .any(|l| l.starts_with("wires="));
        if is_circuit {
            Ok(Code::Circuit(parse_circuit(&text)?))
        } else {
            let t = parse_tableau(&text)?;
            t.validate()
                .map_err(|v| Error::InvalidTableau(v.to_string()))?;
            Ok(Code::Tableau(t))
        }
    }

    fn canonical(&self) -> Result<ZxcfDiagram> {
        match self {
            Code::Tableau(t) => canonicalize(t),
            Code::Circuit(e) => canonicalize_encoder(e),
        }
    }

    fn tableau(&self) -> StabilizerTableau {
        match self {
            Code::Tableau(t) => t.clone(),
            Code::Circuit(e) => e.stabilizers(),
        }
    }

    fn encoder(&self) -> Result<EncoderCircuit> {
        match self {
            Code::Tableau(t) => synthesize_encoder(t),
            Code::Circuit(e) => Ok(e.clone()),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn read_diagram(path: &Path) -> Result<ZxcfDiagram> {
    ZxcfDiagram::from_json(&read(path)?)
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Compile { input, output, dot } => {
            let d = Code::read(&input)?.canonical()?;
            emit(output.as_deref(), &(d.to_json() + "\n"), out)?;
            if let Some(p) = dot {
                emit(Some(&p), &render_dot(&d), out)?;
            }
            Ok(0)
        }
        Command::Decompile { input, output } => {
            let t = decompile(&read_diagram(&input)?)?;
            emit(output.as_deref(), &format_tableau(&t), out)?;
            Ok(0)
        }
        Command::Synth { input, output } => {
            let t = parse_tableau(&read(&input)?)?;
            let e = synthesize_encoder(&t)?;
            emit(output.as_deref(), &format_circuit(&e), out)?;
            Ok(0)
        }
        Command::Eq { a, b, oracle } => {
            let (ca, cb) = (Code::read(&a)?, Code::read(&b)?);
            let (da, db) = (ca.canonical()?, cb.canonical()?);
            let (ta, tb) = (ca.tableau(), cb.tableau());
            let same_shape =
                ta.num_qubits() == tb.num_qubits() && ta.num_rows() == tb.num_rows();
            let equal = da == db;
            let by_group = same_shape && groups_equal(&ta, &tb)?;
            if equal != by_group {
                writeln!(
                    err,
                    "internal error: canonical forms and stabilizer groups disagree"
                )?;
                return Ok(2);
            }
            if oracle {
                if !same_shape {
                    writeln!(err, "oracle: shapes differ")?;
                } else if ta.num_qubits() > MAX_QUBITS {
                    writeln!(err, "oracle: skipped, more than {MAX_QUBITS} qubits")?;
                } else {
                    let va = circuit_to_isometry(&ca.encoder()?)?;
                    let vb = circuit_to_isometry(&cb.encoder()?)?;
                    let dense = images_equal(&va, &vb)?;
                    writeln!(err, "oracle: images {}", if dense { "equal" } else { "differ" })?;
                    if dense != equal {
                        writeln!(err, "internal error: oracle disagrees")?;
                        return Ok(2);
                    }
                }
            }
            writeln!(out, "{}", if equal { "equal" } else { "unequal" })?;
            Ok(if equal { 0 } else { 1 })
        }
        Command::Validate { input } => {
            let d = read_diagram(&input)?;
            match d.validate() {
                Ok(()) => {
                    writeln!(out, "ok")?;
                    Ok(0)
                }
                Err(violations) => {
                    for v in violations {
                        writeln!(out, "{v}")?;
                    }
                    Ok(1)
                }
            }
        }
        Command::Count { n, k } => {
            let q = CountQuery::fresh(n, k)?;
            writeln!(
                out,
                "{} {} {}",
                count_tableaus(n, k)?,
                count_zxcf_recursive(q),
                count_zxcf_closed(q)
            )?;
            Ok(0)
        }
        Command::Enumerate {
            n,
            k,
            limit,
            output,
        } => {
            let it = enumerate_zxcf(n, k)?.take(limit.unwrap_or(usize::MAX));
            match output {
                Some(p) => {
                    let file = fs::File::create(&p).map_err(|e| {
                        Error::Invalid(format!("cannot write {}: {e}", p.display()))
                    })?;
                    let mut w = std::io::BufWriter::new(file);
                    for d in it {
                        writeln!(w, "{}", d.to_json())?;
                    }
                    w.flush()?;
                }
                None => {
                    for d in it {
                        writeln!(out, "{}", d.to_json())?;
                    }
                }
            }
            Ok(0)
        }
        Command::Render { input, output } => {
            let d = read_diagram(&input)?;
            emit(output.as_deref(), &render_dot(&d), out)?;
            Ok(0)
        }
        Command::Selftest { max_n, seed, limit } => {
            let cfg = selftest::Config {
                max_n,
                seed,
                trials: limit,
                ..selftest::Config::default()
            };
            let reports = selftest::run_all(&cfg);
            let mut failed = 0;
            for r in &reports {
                writeln!(out, "{r}")?;
                failed += !r.passed as usize;
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}
