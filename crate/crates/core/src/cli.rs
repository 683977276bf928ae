//! Command-line front end. Exit codes: 0 on success, 1 when a verification
//! fails (an invalid protocol, a rejected certificate, a failed check), 2
//! on bad input or an exceeded size guard.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite::{
    amortized_sequence, cover_number_exact, cover_number_greedy, fractional_cover, fractional_cover_mwu,
    tensor_power, LpMethod, RelationMatrix, DEFAULT_BUDGET,
};
use crate::formats::{read_json, ProtocolFile, RelationFile, ShiftSpec, TileSetFile};
use crate::infinite::{
    conditional_entropy_sup, extract_protocol, fooling_certificate, lift_protocol, protocol_validate,
};
use crate::reproduce::{even_shift, golden_mean, reproduce_paper};
use crate::shift::{serialize_bits, sofic_compare, EntropyValue, Subshift};
use crate::wang::{
    border_protocol, concat_relation, counterexample_oracle, enumerate_patterns, paper_tileset,
    render_pattern, residual_profile_count, strip_language, write_residual_csv, SoficOracle, TileSet,
};

#[derive(Debug, Parser)]
#[command(name = "infcc", version, about = "Entropy, covers and protocols for subshifts")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: RunConfig,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    Counterexample,
    Golden,
    Even,
}

#[derive(Clone, Debug, Args)]
pub struct RunConfig {
    /// Width of entropy brackets
    #[arg(long, global = true, default_value_t = 1e-6)]
    pub tol: f64,
    /// Largest presentation (states or vertices) accepted as input
    #[arg(long, global = true, default_value_t = 1 << 16)]
    pub guard_states: usize,
    /// Largest number of 1-entries accepted in a relation, after tensor powers
    #[arg(long, global = true, default_value_t = 1 << 16)]
    pub guard_ones: usize,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Extra ring of tiles that every enumerated pattern must extend to
    #[arg(long, global = true, default_value_t = 0)]
    pub extend_radius: usize,
    /// Longest period tried for conditional entropy
    #[arg(long, global = true, default_value_t = 4)]
    pub max_period: usize,
    /// Node budget of the exact cover search
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Entropy of a shift in bits per symbol
    Entropy { shift: PathBuf },
    /// Factor words of a given length and their count
    Words {
        shift: PathBuf,
        #[arg(long)]
        length: usize,
    },
    /// Exact equality of two shifts, with a shortest distinguishing word
    SoficEq { a: PathBuf, b: PathBuf },
    /// Minimum rectangle cover of a relation
    CcExact { relation: PathBuf },
    /// Greedy rectangle cover of a relation
    CcGreedy { relation: PathBuf },
    /// Fractional cover number of a relation
    CcFrac {
        relation: PathBuf,
        #[arg(long, default_value_t = 1e-3)]
        eps: f64,
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Brackets on log2 C(R^n) / n
    Amortized {
        relation: PathBuf,
        #[arg(long, default_value_t = 2)]
        n_max: usize,
    },
    /// Check that a protocol computes a shift
    ValidateProtocol { shift: PathBuf, protocol: PathBuf },
    /// Protocol for R^Z from a minimum cover of R^n
    Lift {
        relation: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Finite protocol for R^n read off a protocol for R^Z
    Extract {
        protocol: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Conditional entropy H(Y|x) maximized over periodic x
    CondEntropy { shift: PathBuf },
    /// Entropy certificate for a fooling shift F ⊆ S
    Fooling { shift: PathBuf, fooling: PathBuf },
    /// Symbol patterns of a tile set (the built-in five-tile set by default)
    WangEnum {
        tiles: Option<PathBuf>,
        #[arg(long)]
        width: usize,
        #[arg(long)]
        height: usize,
    },
    /// Strip language of n rows as a sofic shift
    WangStrip {
        tiles: Option<PathBuf>,
        #[arg(long)]
        rows: usize,
    },
    /// Border protocol for the concatenation relation R_{n,m}
    WangBorder {
        tiles: Option<PathBuf>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Residual profile counts of a language
    Residuals {
        #[arg(long, value_enum, conflicts_with = "shift")]
        oracle: Option<OracleKind>,
        #[arg(long)]
        shift: Option<PathBuf>,
        #[arg(long, default_value_t = 8)]
        k: usize,
        #[arg(long, default_value_t = 10)]
        depth: usize,
    },
    /// Run every reference check and print a pass/fail table (always text)
    ReproducePaper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Simplex,
    Mwu,
}

/// Outcome of a subcommand: its output and whether a verification failed.
struct Output {
    text: String,
    failed: bool,
}

fn json(value: &impl Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn ok(value: &impl Serialize) -> Result<Output> {
    Ok(Output {
        text: json(value)?,
        failed: false,
    })
}

impl RunConfig {
    fn check(&self) -> Result<()> {
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::input("--tol must be positive"));
        }
        if self.guard_states == 0 || self.guard_ones == 0 {
            return Err(Error::input("guards must be positive"));
        }
        Ok(())
    }

    fn shift(&self, path: &Path) -> Result<Subshift> {
        let s = read_json::<ShiftSpec>(path)?.build()?;
        let states = match &s {
            Subshift::Finite(sft) => sft.vertices().len(),
            Subshift::Sofic(g) => g.states(),
        };
        if states > self.guard_states {
            return Err(Error::guard("presentation states", states as u128, self.guard_states as u128));
        }
        Ok(s)
    }

    fn relation(&self, path: &Path) -> Result<RelationMatrix> {
        let r = read_json::<RelationFile>(path)?.build()?;
        self.ones(&r)?;
        Ok(r)
    }

    fn ones(&self, r: &RelationMatrix) -> Result<()> {
        let ones = r.count_ones();
        if ones > self.guard_ones {
            return Err(Error::guard("relation 1-entries", ones as u128, self.guard_ones as u128));
        }
        Ok(())
    }

    fn tiles(&self, path: &Option<PathBuf>) -> Result<TileSet> {
        match path {
            Some(p) => read_json::<TileSetFile>(p)?.build(),
            None => Ok(paper_tileset()),
        }
    }

    fn json_only(&self) -> Result<()> {
        if self.format == Format::Csv {
            return Err(Error::input("this subcommand has no CSV output"));
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct Bits {
    #[serde(serialize_with = "serialize_bits")]
    bits: EntropyValue,
}

#[derive(Serialize)]
struct WordsOut {
    length: usize,
    count: String,
    words: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct EqualityOut {
    equal: bool,
    witness: Option<Vec<String>>,
}

#[derive(Serialize)]
struct StripOut {
    rows: usize,
    #[serde(serialize_with = "serialize_bits")]
    entropy: EntropyValue,
    presentation: ShiftSpec,
}

fn execute(cmd: &Command, cfg: &RunConfig) -> Result<Output> {
    cfg.check()?;
    if !matches!(cmd, Command::Amortized { .. } | Command::Residuals { .. } | Command::ReproducePaper) {
        cfg.json_only()?;
    }
    match cmd {
        Command::Entropy { shift } => ok(&Bits {
            bits: cfg.shift(shift)?.entropy(cfg.tol)?,
        }),
        Command::Words { shift, length } => {
            let s = cfg.shift(shift)?;
            let words = s.to_sofic().words(*length)?;
            ok(&WordsOut {
                length: *length,
                count: words.len().to_string(),
                words: words.iter().map(|w| s.alphabet().tokens(w)).collect(),
            })
        }
        Command::SoficEq { a, b } => {
            let cmp = sofic_compare(&cfg.shift(a)?.to_sofic(), &cfg.shift(b)?.to_sofic())?;
            ok(&EqualityOut {
                equal: cmp.equal,
                witness: cmp.witness.map(|w| cmp.alphabet.tokens(&w)),
            })
        }
        Command::CcExact { relation } => ok(&cover_number_exact(&cfg.relation(relation)?, cfg.budget)?),
        Command::CcGreedy { relation } => ok(&cover_number_greedy(&cfg.relation(relation)?)?),
        Command::CcFrac { relation, eps, method } => {
            let r = cfg.relation(relation)?;
            let f = match method {
                None => fractional_cover(&r, *eps)?,
                Some(Method::Mwu) => fractional_cover_mwu(&r, *eps, crate::finite::fractional::MWU_ITERATIONS)?,
                Some(Method::Simplex) => {
                    let f = fractional_cover(&r, *eps)?;
                    if f.method != LpMethod::Simplex {
                        return Err(Error::input("relation too large for the simplex method"));
                    }
                    f
                }
            };
            ok(&f)
        }
        Command::Amortized { relation, n_max } => {
            let r = cfg.relation(relation)?;
            cfg.ones(&tensor_power(&r, *n_max)?)?;
            let seq = amortized_sequence(&r, *n_max, cfg.budget)?;
            match cfg.format {
                Format::Json => ok(&seq),
                Format::Csv => {
                    let mut buf = Vec::new();
                    seq.write_csv(&mut buf)?;
                    Ok(Output {
                        text: String::from_utf8(buf).expect("csv is utf-8"),
                        failed: false,
                    })
                }
            }
        }
        Command::ValidateProtocol { shift, protocol } => {
            let s = cfg.shift(shift)?;
            let p = read_json::<ProtocolFile>(protocol)?.build()?;
            let report = protocol_validate(&s, &p, cfg.tol)?;
            Ok(Output {
                failed: !report.valid,
                text: json(&report)?,
            })
        }
        Command::Lift { relation, n } => {
            let r = cfg.relation(relation)?;
            let power = tensor_power(&r, *n)?;
            cfg.ones(&power)?;
            let cover = cover_number_exact(&power, cfg.budget)?;
            ok(&ProtocolFile::from_protocol(&lift_protocol(&r, &cover.rectangles, *n)?))
        }
        Command::Extract { protocol, n } => {
            let p = read_json::<ProtocolFile>(protocol)?.build()?;
            ok(&extract_protocol(&p, *n)?)
        }
        Command::CondEntropy { shift } => ok(&conditional_entropy_sup(&cfg.shift(shift)?, cfg.max_period, cfg.tol)?),
        Command::Fooling { shift, fooling } => {
            let report = fooling_certificate(&cfg.shift(shift)?, &cfg.shift(fooling)?, cfg.tol)?;
            Ok(Output {
                failed: !report.certified,
                text: json(&report)?,
            })
        }
        Command::WangEnum { tiles, width, height } => {
            let t = cfg.tiles(tiles)?;
            let patterns = enumerate_patterns(&t, *width, *height, cfg.extend_radius)?;
            ok(&patterns.iter().map(|p| render_pattern(&t, p)).collect::<Vec<_>>())
        }
        Command::WangStrip { tiles, rows } => {
            let strip = strip_language(&cfg.tiles(tiles)?, *rows)?;
            ok(&StripOut {
                rows: *rows,
                entropy: strip.graph.entropy(cfg.tol)?,
                presentation: ShiftSpec::from_subshift(&strip.graph.clone().into()),
            })
        }
        Command::WangBorder { tiles, n, m } => {
            let t = cfg.tiles(tiles)?;
            let p = border_protocol(&t, *n, *m)?;
            let report = protocol_validate(&concat_relation(&t, *n, *m)?.into(), &p, cfg.tol)?;
            Ok(Output {
                failed: !report.valid,
                text: json(&report)?,
            })
        }
        Command::Residuals { oracle, shift, k, depth } => {
            let counts = match (oracle, shift) {
                (_, Some(path)) => residual_profile_count(&SoficOracle::new(&cfg.shift(path)?.to_sofic())?, *k, *depth),
                (Some(OracleKind::Golden), None) => {
                    residual_profile_count(&SoficOracle::new(&(&golden_mean()).into())?, *k, *depth)
                }
                (Some(OracleKind::Even), None) => residual_profile_count(&SoficOracle::new(&even_shift())?, *k, *depth),
                (Some(OracleKind::Counterexample), None) | (None, None) => {
                    residual_profile_count(&counterexample_oracle(), *k, *depth)
                }
            };
            match cfg.format {
                Format::Json => ok(&counts),
                Format::Csv => {
                    let mut buf = Vec::new();
                    write_residual_csv(&counts, &mut buf)?;
                    Ok(Output {
                        text: String::from_utf8(buf).expect("csv is utf-8"),
                        failed: false,
                    })
                }
            }
        }
        Command::ReproducePaper => {
            let checks = reproduce_paper(cfg.seed, cfg.budget);
            let mut text = String::new();
            for c in &checks {
                text += &format!("{:<26} {}  {}\n", c.name, if c.passed { "PASS" } else { "FAIL" }, c.detail);
            }
            let passed = checks.iter().filter(|c| c.passed).count();
            let total = checks.len();
            text += &format!("{passed}/{total} checks passed\n");
            Ok(Output {
                failed: passed != total,
                text,
            })
        }
    }
}

/// Parse `args` (including the program name), run, and return the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match execute(&cli.command, &cli.config) {
        Ok(output) => {
            let _ = out.write_all(output.text.as_bytes());
            if output.failed {
                1
            } else {
                0
            }
        }
        Err(Error::Rejected(msg)) => {
            let _ = writeln!(err, "rejected: {msg}");
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
