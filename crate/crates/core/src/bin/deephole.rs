//! Command-line front end.
//!
//! Exit status: 0 on success or a verified claim, 1 when a claim is refuted
//! (the counterexample is on stdout), 2 on usage, parse or budget errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde::Serialize;

use deephole::deepholes::{
    is_deep_hole_mds_extension, is_deep_hole_oracle_with, is_degree_k_word, shifted_family_scale,
    thm14_criterion, thm15_criterion,
};
use deephole::verify::{run_sweep, Claim, SweepConfig, DEFAULT_EXHAUSTIVE_LIMIT};
use deephole::{
    Budget, DistanceStrategy, Error, FieldElement, FiniteField, GprsCode, Mode, Polynomial,
};

const BUDGET_ENV: &str = "DEEPHOLE_BUDGET";

#[derive(Parser)]
#[command(
    name = "deephole",
    version,
    about = "Deep holes of generalized projective Reed-Solomon codes"
)]
struct Cli {
    /// Output format of the data stream.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Codeword cap for exhaustive oracles (default from $DEEPHOLE_BUDGET, else 1000000).
    #[arg(long, global = true)]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Oracle,
    Mds,
    Thm14,
    Thm15,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Exhaustive,
    InformationSet,
}

#[derive(Subcommand)]
enum Command {
    /// Print the addition and multiplication tables and a primitive element.
    Field {
        /// Field order, as `p^s` or an integer.
        #[arg(long)]
        q: String,
        /// Reduction modulus coefficients c0,c1,...,cs (monic).
        #[arg(long = "mod")]
        modulus: Option<String>,
    },
    /// Build a code and report its generator, minimum distance, covering radius and MDS check.
    Code {
        #[arg(long)]
        q: String,
        #[arg(long = "mod")]
        modulus: Option<String>,
        /// Excluded points, comma-separated encodings.
        #[arg(long)]
        exclude: String,
        #[arg(long)]
        k: usize,
    },
    /// Encode a message polynomial.
    Encode {
        /// Code spec such as "q=5;exclude=3,4;k=2".
        #[arg(long)]
        code: String,
        /// Coefficients c0,c1,... as encodings.
        #[arg(long)]
        poly: String,
    },
    /// Exact error distance of a word.
    Distance {
        #[arg(long)]
        code: String,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Exhaustive)]
        strategy: StrategyArg,
    },
    /// Decide whether a word is a deep hole.
    Deephole {
        #[arg(long)]
        code: String,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Excluded point of the shifted family (thm15); found automatically when omitted.
        #[arg(long)]
        aj: Option<u64>,
        #[arg(long, value_enum, default_value_t = StrategyArg::Exhaustive)]
        strategy: StrategyArg,
    },
    /// Run a seeded verification sweep.
    Sweep {
        /// Comma-separated claims: thm11,thm14,thm15,thm16,thm17,lemma25,lemma26,lemma28,lemma29.
        #[arg(long)]
        claims: String,
        #[arg(long = "q-list")]
        q_list: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exclusion sets per (q, l) before sampling kicks in.
        #[arg(long, default_value_t = 30)]
        max_sets: usize,
        #[arg(long, default_value_t = 20)]
        words: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_LIMIT)]
        exhaustive_limit: u64,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// What a subcommand hands back: the serialized data and whether a claim was refuted.
struct Output {
    data: String,
    refuted: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Output { data, refuted }) => {
            print!("{data}");
            ExitCode::from(if refuted { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn budget(cli_cap: Option<u64>) -> Result<Budget, Error> {
    let cap = match cli_cap {
        Some(c) => Some(c),
        None => match std::env::var(BUDGET_ENV) {
            Ok(v) => Some(
                v.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("{BUDGET_ENV}={v:?} is not an integer")))?,
            ),
            Err(_) => None,
        },
    };
    Ok(match cap {
        Some(c) => Budget {
            codewords: c,
            evaluations: c.saturating_mul(100),
        },
        None => Budget::default(),
    })
}

fn strategy(s: StrategyArg) -> DistanceStrategy {
    match s {
        StrategyArg::Exhaustive => DistanceStrategy::Exhaustive,
        StrategyArg::InformationSet => DistanceStrategy::InformationSet,
    }
}

fn joined(v: &[FieldElement]) -> String {
    v.iter().map(|e| e.value()).join(",")
}

/// Serializes one flat record: pretty JSON, a header plus one CSV row, or `key: value` lines.
fn render<T: Serialize>(format: Format, record: &T) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(record).expect("record serializes") + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.serialize(record).expect("record serializes");
            String::from_utf8(w.into_inner().expect("in-memory")).expect("utf-8")
        }
        Format::Text => {
            let value = serde_json::to_value(record).expect("record serializes");
            let mut out = String::new();
            for (k, v) in value.as_object().expect("flat record") {
                let shown = match v {
                    serde_json::Value::String(s) => s.clone(),
                    serde_json::Value::Null => "-".into(),
                    other => other.to_string(),
                };
                let _ = writeln!(out, "{k}: {shown}");
            }
            out
        }
    }
}

#[derive(Serialize)]
struct FieldRecord {
    q: u32,
    p: u32,
    s: u32,
    modulus: Option<String>,
    primitive_element: u32,
    /// Rows separated by ';'.
    add_table: String,
    mul_table: String,
}

#[derive(Serialize)]
struct CodeRecord {
    spec: String,
    q: u32,
    excluded: String,
    k: usize,
    length: usize,
    points: String,
    generator: String,
    minimum_distance: usize,
    covering_radius: usize,
    is_mds: bool,
}

#[derive(Serialize)]
struct EncodeRecord {
    code: String,
    poly: String,
    word: String,
}

#[derive(Serialize)]
struct DistanceRecord {
    code: String,
    word: String,
    distance: usize,
    covering_radius: usize,
    strategy: DistanceStrategy,
}

fn table(field: FiniteField, op: impl Fn(FieldElement, FieldElement) -> FieldElement) -> String {
    let els = field.elements(false);
    els.iter()
        .map(|&a| els.iter().map(|&b| op(a, b).value()).join(","))
        .join(";")
}

fn run(cli: Cli) -> Result<Output, Error> {
    let format = cli.format;
    let budget = budget(cli.budget)?;
    let ok = |data| {
        Ok(Output {
            data,
            refuted: false,
        })
    };
    match cli.command {
        Command::Field { q, modulus } => {
            let field = FiniteField::parse(&q, modulus.as_deref())?;
            let rec = FieldRecord {
                q: field.order(),
                p: field.characteristic(),
                s: field.degree(),
                modulus: field.modulus().map(|m| m.iter().join(",")),
                primitive_element: field.primitive_element().value(),
                add_table: table(field, |a, b| a + b),
                mul_table: table(field, |a, b| a * b),
            };
            ok(render(format, &rec))
        }
        Command::Code {
            q,
            modulus,
            exclude,
            k,
        } => {
            let field = FiniteField::parse(&q, modulus.as_deref())?;
            let excluded = exclude
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad element {t:?}")))
                        .and_then(|v| field.element(v))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let code = GprsCode::new(field, &excluded, k)?;
            let g = code.generator();
            let rec = CodeRecord {
                spec: code.spec(),
                q: field.order(),
                excluded: joined(code.excluded()),
                k,
                length: code.length(),
                points: joined(code.points()),
                generator: (0..g.rows()).map(|i| joined(g.row(i))).join(";"),
                minimum_distance: code.minimum_distance(Mode::Formula, &budget)?,
                covering_radius: code.covering_radius(Mode::Formula, &budget)?,
                is_mds: deephole::codes::generator_is_mds(&code)?,
            };
            ok(render(format, &rec))
        }
        Command::Encode { code, poly } => {
            let code = GprsCode::parse(&code)?;
            let f = Polynomial::parse(code.field(), &poly)?;
            let word = code.encode(&f)?;
            let rec = EncodeRecord {
                code: code.spec(),
                poly: f.to_string(),
                word: word.to_string(),
            };
            ok(render(format, &rec))
        }
        Command::Distance {
            code,
            word,
            strategy: s,
        } => {
            let code = GprsCode::parse(&code)?;
            let u = code.parse_word(&word)?;
            let s = strategy(s);
            let rec = DistanceRecord {
                code: code.spec(),
                word: u.to_string(),
                distance: code.error_distance_with(&u, s, &budget)?,
                covering_radius: code.covering_radius(Mode::Formula, &budget)?,
                strategy: s,
            };
            ok(render(format, &rec))
        }
        Command::Deephole {
            code,
            word,
            method,
            aj,
            strategy: s,
        } => {
            let code = GprsCode::parse(&code)?;
            let u = code.parse_word(&word)?;
            let mut params = format!("{};word={u}", code.spec());
            let verdict = match method {
                MethodArg::Oracle => is_deep_hole_oracle_with(&code, &u, strategy(s), &budget)?,
                MethodArg::Mds => is_deep_hole_mds_extension(&code, &u)?,
                MethodArg::Thm14 => {
                    if !is_degree_k_word(&code, &u)? {
                        return Err(Error::InvalidParameter(
                            "word is not (u(D), c_{k-1}(u)) for a polynomial u of degree k".into(),
                        ));
                    }
                    thm14_criterion(&code)?
                }
                MethodArg::Thm15 => {
                    let field = code.field();
                    let candidates = match aj {
                        Some(a) => vec![field.element(a)?],
                        None => code.excluded().to_vec(),
                    };
                    let mut found = None;
                    for a in candidates {
                        if shifted_family_scale(&code, &u, a)?.is_some() {
                            found = Some(a);
                            break;
                        }
                    }
                    let a = found.ok_or_else(|| {
                        Error::InvalidParameter(
                            "word is not in the family lambda(x - a_j)^(q-2) + nu x^(k-1) + f"
                                .into(),
                        )
                    })?;
                    params.push_str(&format!(";aj={}", a.value()));
                    thm15_criterion(&code, a)?
                }
            };
            let refuted = !verdict.is_deep_hole;
            Ok(Output {
                data: render(format, &verdict.record(params)),
                refuted,
            })
        }
        Command::Sweep {
            claims,
            q_list,
            seed,
            max_sets,
            words,
            trials,
            exhaustive_limit,
            out,
        } => {
            let claims = claims
                .split(',')
                .map(str::parse::<Claim>)
                .collect::<Result<Vec<_>, _>>()?;
            let q_list = q_list
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad field order {t:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let cfg = SweepConfig {
                claims,
                q_list,
                max_exclusion_sets_per_q: max_sets,
                words_per_config: words,
                liwan_trials: trials,
                seed,
                budget,
                exhaustive_limit,
            };
            let report = run_sweep(&cfg)?;
            let data = match format {
                Format::Json => report.to_json() + "\n",
                Format::Csv => report.to_csv(),
                Format::Text => {
                    let mut s = String::new();
                    for r in report.refuted_rows() {
                        let _ = writeln!(
                            s,
                            "refuted {} q={} excluded={} k={:?} a_j={:?}: {}",
                            r.claim,
                            r.q,
                            r.excluded.iter().join(","),
                            r.k,
                            r.a_j,
                            r.detail
                        );
                    }
                    let m = report.summary;
                    let _ = writeln!(
                        s,
                        "total={} agreed={} refuted={} skipped={}",
                        m.total, m.agreed, m.refuted, m.skipped
                    );
                    s
                }
            };
            let refuted = report.is_refuted();
            let m = report.summary;
            eprintln!(
                "sweep: total={} agreed={} refuted={} skipped={}",
                m.total, m.agreed, m.refuted, m.skipped
            );
            match out {
                Some(path) => {
                    std::fs::write(&path, data).map_err(|e| {
                        Error::InvalidParameter(format!("cannot write {}: {e}", path.display()))
                    })?;
                    Ok(Output {
                        data: String::new(),
                        refuted,
                    })
                }
                None => Ok(Output { data, refuted }),
            }
        }
    }
}
