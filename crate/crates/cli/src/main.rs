//! `afnaive` command-line front end.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 parse error,
//! 4 exhaustive-search limit exceeded, 5 precondition failure.

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use afnaive::generators::{
    parse_dimacs, random_af, random_af_capped, reduce_acaf, reduce_naf, triangle_stack_framework,
    CnfFormula,
};
use afnaive::lattice::{build_f_irr, enum_preferred_via_irr, irreducibles};
use afnaive::misenum::{enum_naive, MisStats};
use afnaive::oracle::{enum_family, OracleLimit, Semantics, DEFAULT_LIMIT};
use afnaive::parse::{parse_apx, parse_tgf, render_apx, render_tgf};
use afnaive::recasting::{is_admissible_closed, recast_with, RecastOptions};
use afnaive::recognition::{is_naive_bijective, normalize, Mode, Witness};
use afnaive::{ArgumentSet, ArgumentationFramework};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const SCHEMA: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "afnaive",
    version,
    about = "Preferred extensions through naive-set enumeration"
)]
struct Cli {
    /// Input format; guessed from the file extension when omitted.
    #[arg(long, short = 'f', global = true, value_enum)]
    format: Option<InputFormat>,
    /// Largest framework the exhaustive routines accept.
    #[arg(long, global = true, default_value_t = DEFAULT_LIMIT)]
    oracle_limit: usize,
    /// Output style; each command has its own default.
    #[arg(long, short = 'o', global = true, value_enum)]
    output: Option<OutputFormat>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Apx,
    Tgf,
    Dimacs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Lines,
    Json,
}

#[derive(Debug, Args)]
struct Input {
    /// Input file; standard input when omitted or `-`.
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Read a framework and print it back in canonical form.
    Parse {
        #[command(flatten)]
        input: Input,
        /// Print TGF instead of APX.
        #[arg(long)]
        tgf: bool,
    },
    /// List a whole semantics family by exhaustive search.
    Semantics {
        #[arg(long, value_parser = parse_semantics)]
        family: Semantics,
        #[command(flatten)]
        input: Input,
    },
    /// Decide a structural property.
    Check {
        #[arg(value_enum)]
        property: Property,
        /// Decision procedure for naive-bijective.
        #[arg(long, default_value = "exact", value_parser = parse_mode)]
        mode: Mode,
        /// Size bound for `--mode bounded`.
        #[arg(long)]
        k: Option<usize>,
        /// Add the self-attacks forced by the empty-set closure first.
        #[arg(long)]
        normalize: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Add attacks so that the naive sets become the preferred extensions.
    Recast {
        /// Write the framework here and a JSON report next to it.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        input: Input,
    },
    /// List the irreducible self-defending sets.
    Irr {
        #[command(flatten)]
        input: Input,
    },
    /// Emit the framework on the irreducible self-defending sets.
    Meta {
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        input: Input,
    },
    /// Stream extensions, one per line as soon as found.
    Enum {
        #[arg(value_enum)]
        family: EnumFamily,
        /// Route used for preferred extensions.
        #[arg(long, value_enum, default_value = "irr")]
        via: Via,
        /// Stop after this many solutions.
        #[arg(long)]
        limit: Option<u64>,
        #[command(flatten)]
        input: Input,
    },
    /// Generate instances as APX.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Time an enumeration task.
    Bench {
        #[arg(value_enum)]
        task: BenchTask,
        #[arg(long, default_value_t = 1)]
        repetitions: u32,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Property {
    NaiveBijective,
    AdmissibleClosed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumFamily {
    Naive,
    Preferred,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    Irr,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchTask {
    EnumNaive,
    EnumPreferred,
}

#[derive(Debug, Subcommand)]
enum GenKind {
    /// Seeded random framework.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        symmetric: bool,
        /// Cap on the number of attackers per argument.
        #[arg(long, conflicts_with = "symmetric")]
        max_in_degree: Option<usize>,
    },
    /// Framework with a non-admissible naive set iff the formula is satisfiable.
    ReduceNaf {
        #[command(flatten)]
        input: Input,
    },
    /// Framework that is admissible-closed iff the formula is unsatisfiable.
    ReduceAcaf {
        #[command(flatten)]
        input: Input,
    },
    /// `k` disjoint mutually attacking triples.
    Triangles {
        #[arg(long)]
        k: usize,
    },
}

fn parse_semantics(s: &str) -> Result<Semantics, String> {
    s.parse()
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
    Lib(afnaive::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<afnaive::Error> for Failure {
    fn from(e: afnaive::Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<afnaive::ParseError> for Failure {
    fn from(e: afnaive::ParseError) -> Self {
        Failure::Lib(e.into())
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        use afnaive::Error as E;
        match self {
            Failure::Io(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Lib(E::Parse(_) | E::InvalidFormula(_)) => 3,
            Failure::Lib(E::LimitExceeded { .. }) => 4,
            Failure::Lib(_) => 5,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage: {m}"),
            Failure::Io(e) => write!(f, "i/o: {e}"),
            Failure::Lib(e) => write!(f, "{e}"),
        }
    }
}

type Outcome = Result<(), Failure>;

struct Ctx {
    format: Option<InputFormat>,
    limit: OracleLimit,
    output: Option<OutputFormat>,
}

impl Ctx {
    fn output_or(&self, default: OutputFormat) -> OutputFormat {
        self.output.unwrap_or(default)
    }

    fn read_text(&self, input: &Input) -> Result<String, Failure> {
        match input.input.as_deref() {
            None => read_stdin(),
            Some(p) if p == Path::new("-") => read_stdin(),
            Some(p) => Ok(fs::read_to_string(p)?),
        }
    }

    fn detect(&self, input: &Input) -> InputFormat {
        self.format.unwrap_or_else(|| {
            match input
                .input
                .as_deref()
                .and_then(Path::extension)
                .and_then(|e| e.to_str())
            {
                Some("tgf") => InputFormat::Tgf,
                Some("cnf" | "dimacs") => InputFormat::Dimacs,
                _ => InputFormat::Apx,
            }
        })
    }

    fn framework(&self, input: &Input) -> Result<ArgumentationFramework, Failure> {
        let format = self.detect(input);
        if format == InputFormat::Dimacs {
            return Err(Failure::Usage(
                "this command reads a framework (apx or tgf), not dimacs".into(),
            ));
        }
        let text = self.read_text(input)?;
        Ok(match format {
            InputFormat::Tgf => parse_tgf(&text)?,
            _ => parse_apx(&text)?,
        })
    }

    fn formula(&self, input: &Input) -> Result<CnfFormula, Failure> {
        if matches!(self.format, Some(f) if f != InputFormat::Dimacs) {
            return Err(Failure::Usage("reductions read dimacs input".into()));
        }
        Ok(parse_dimacs(&self.read_text(input)?)?)
    }
}

fn read_stdin() -> Result<String, Failure> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s)?;
    Ok(s)
}

fn label_list(f: &ArgumentationFramework, s: &ArgumentSet) -> Vec<String> {
    f.labels_of(s).into_iter().map(String::from).collect()
}

fn bracketed(f: &ArgumentationFramework, s: &ArgumentSet) -> String {
    format!("[{}]", f.labels_of(s).join(","))
}

fn print_json(out: &mut impl Write, value: &Value) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn print_sets<'a>(
    out: &mut impl Write,
    format: OutputFormat,
    f: &ArgumentationFramework,
    key: &str,
    mut head: serde_json::Map<String, Value>,
    sets: impl IntoIterator<Item = &'a ArgumentSet>,
) -> io::Result<()> {
    match format {
        OutputFormat::Lines => {
            for s in sets {
                writeln!(out, "{}", bracketed(f, s))?;
            }
            Ok(())
        }
        OutputFormat::Json => {
            let sets: Vec<Value> = sets.into_iter().map(|s| json!(label_list(f, s))).collect();
            head.insert("count".into(), json!(sets.len()));
            head.insert(key.into(), Value::Array(sets));
            print_json(out, &Value::Object(head))
        }
    }
}

fn header(task: &str) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("task".into(), json!(task));
    m
}

fn write_output(path: Option<&Path>, text: &str, out: &mut impl Write) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => out.write_all(text.as_bytes()),
    }
}

fn sidecar(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

fn witness_json(f: &ArgumentationFramework, w: &Witness) -> Value {
    match w {
        Witness::NonAdmissibleNaive(s) => json!({
            "kind": "non-admissible-naive",
            "naive_set": label_list(f, s),
        }),
        Witness::Pair {
            x,
            y,
            set,
            extension,
        } => json!({
            "kind": "attack-pair",
            "x": f.label(*x),
            "y": f.label(*y),
            "set": label_list(f, set),
            "naive_set": label_list(f, extension),
        }),
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    let ctx = Ctx {
        format: cli.format,
        limit: OracleLimit(cli.oracle_limit),
        output: cli.output,
    };
    match cli.command {
        Command::Parse { input, tgf } => {
            let f = ctx.framework(&input)?;
            match ctx.output_or(OutputFormat::Lines) {
                OutputFormat::Lines if tgf => out.write_all(render_tgf(&f).as_bytes())?,
                OutputFormat::Lines => out.write_all(render_apx(&f).as_bytes())?,
                OutputFormat::Json => {
                    let mut h = header("parse");
                    h.insert("arguments".into(), json!(f.labels()));
                    let attacks: Vec<[&str; 2]> =
                        f.attacks().map(|(a, b)| [f.label(a), f.label(b)]).collect();
                    h.insert("attacks".into(), json!(attacks));
                    print_json(out, &Value::Object(h))?;
                }
            }
        }
        Command::Semantics { family, input } => {
            let f = ctx.framework(&input)?;
            let sets = enum_family(&f, family, ctx.limit)?;
            let mut h = header("semantics");
            h.insert("family".into(), json!(family.name()));
            print_sets(
                out,
                ctx.output_or(OutputFormat::Lines),
                &f,
                "sets",
                h,
                &sets,
            )?;
        }
        Command::Check {
            property,
            mode,
            k,
            normalize: norm,
            input,
        } => {
            let mut f = ctx.framework(&input)?;
            if norm {
                f = normalize(&f);
            }
            let mut h = header("check");
            h.insert("normalized".into(), json!(norm));
            let verdict = match property {
                Property::NaiveBijective => {
                    let mode = match (mode, k) {
                        (Mode::CharacterizationBounded { .. }, Some(k)) => {
                            Mode::CharacterizationBounded { k }
                        }
                        (_, Some(_)) => {
                            return Err(Failure::Usage("--k only applies to --mode bounded".into()))
                        }
                        (m, None) => m,
                    };
                    let report = is_naive_bijective(&f, mode)?;
                    h.insert("property".into(), json!("naive-bijective"));
                    h.insert("mode".into(), json!(mode));
                    h.insert("verdict".into(), json!(report.verdict));
                    h.insert("method".into(), json!(report.method));
                    h.insert(
                        "witness".into(),
                        report
                            .witness
                            .as_ref()
                            .map_or(Value::Null, |w| json!(label_list(&f, w.naive_set()))),
                    );
                    h.insert(
                        "witness_detail".into(),
                        report
                            .witness
                            .as_ref()
                            .map_or(Value::Null, |w| witness_json(&f, w)),
                    );
                    h.insert(
                        "empty_closure_violation".into(),
                        report
                            .empty_closure_violation
                            .as_ref()
                            .map_or(Value::Null, |v| json!(label_list(&f, v))),
                    );
                    report.verdict
                }
                Property::AdmissibleClosed => {
                    if mode != Mode::CharacterizationExact || k.is_some() {
                        return Err(Failure::Usage(
                            "--mode and --k only apply to naive-bijective".into(),
                        ));
                    }
                    let report = is_admissible_closed(&f, ctx.limit)?;
                    h.insert("property".into(), json!("admissible-closed"));
                    h.insert("verdict".into(), json!(report.closed));
                    h.insert(
                        "witness".into(),
                        report.witness.as_ref().map_or(Value::Null, |(a, b)| {
                            json!([label_list(&f, a), label_list(&f, b)])
                        }),
                    );
                    report.closed
                }
            };
            match ctx.output_or(OutputFormat::Json) {
                OutputFormat::Json => print_json(out, &Value::Object(h))?,
                OutputFormat::Lines => {
                    writeln!(out, "{verdict}")?;
                    if let Some(w) = h.get("witness").filter(|w| !w.is_null()) {
                        writeln!(out, "witness {w}")?;
                    }
                }
            }
        }
        Command::Recast { out: path, input } => {
            let f = ctx.framework(&input)?;
            let result = recast_with(
                &f,
                RecastOptions {
                    limit: ctx.limit,
                    unchecked: false,
                },
            )?;
            let g = &result.recast;
            let added: Vec<[&str; 2]> = g
                .attacks()
                .filter(|&(a, b)| !f.attacks_pair(a, b))
                .map(|(a, b)| [f.label(a), f.label(b)])
                .collect();
            let mut h = header("recast");
            h.insert("s_star".into(), json!(label_list(&f, &result.s_star)));
            h.insert("sigma_d".into(), json!(result.sigma_d.render(f.labels())));
            h.insert("sd_prime_size".into(), json!(result.sd_prime.len()));
            h.insert("added_attacks".into(), json!(added));
            write_output(path.as_deref(), &render_apx(g), out)?;
            if let Some(p) = &path {
                let text = serde_json::to_string_pretty(&Value::Object(h))
                    .expect("plain json value")
                    + "\n";
                fs::write(sidecar(p), text)?;
            }
        }
        Command::Irr { input } => {
            let f = ctx.framework(&input)?;
            let index = irreducibles(&f, ctx.limit)?;
            print_sets(
                out,
                ctx.output_or(OutputFormat::Lines),
                &f,
                "irreducibles",
                header("irr"),
                index.members(),
            )?;
        }
        Command::Meta { out: path, input } => {
            let f = ctx.framework(&input)?;
            let index = irreducibles(&f, ctx.limit)?;
            let meta = build_f_irr(&f, &index);
            write_output(path.as_deref(), &render_apx(&meta.framework), out)?;
        }
        Command::Enum {
            family,
            via,
            limit,
            input,
        } => {
            let f = ctx.framework(&input)?;
            let format = ctx.output_or(OutputFormat::Lines);
            let sets: Box<dyn Iterator<Item = ArgumentSet>> = match (family, via) {
                (EnumFamily::Naive, Via::Irr) => Box::new(enum_naive(&f)),
                (EnumFamily::Naive, Via::Oracle) => Box::new(
                    enum_family(&f, Semantics::Naive, ctx.limit)?
                        .members()
                        .to_vec()
                        .into_iter(),
                ),
                (EnumFamily::Preferred, Via::Irr) => {
                    Box::new(enum_preferred_via_irr(&f, &irreducibles(&f, ctx.limit)?))
                }
                (EnumFamily::Preferred, Via::Oracle) => Box::new(
                    enum_family(&f, Semantics::Preferred, ctx.limit)?
                        .members()
                        .to_vec()
                        .into_iter(),
                ),
            };
            let sets = sets.take(limit.map_or(usize::MAX, |l| l as usize));
            match format {
                OutputFormat::Lines => {
                    for s in sets {
                        writeln!(out, "{}", bracketed(&f, &s))?;
                        out.flush()?;
                    }
                }
                OutputFormat::Json => {
                    let all: Vec<ArgumentSet> = sets.collect();
                    let mut h = header("enum");
                    h.insert(
                        "family".into(),
                        json!(match family {
                            EnumFamily::Naive => "naive",
                            EnumFamily::Preferred => "preferred",
                        }),
                    );
                    print_sets(out, format, &f, "extensions", h, &all)?;
                }
            }
        }
        Command::Gen { kind } => {
            let f = match kind {
                GenKind::Random {
                    n,
                    p,
                    seed,
                    symmetric,
                    max_in_degree,
                } => match max_in_degree {
                    Some(k) => random_af_capped(n, p, k, seed)?,
                    None => random_af(n, p, seed, symmetric)?,
                },
                GenKind::ReduceNaf { input } => reduce_naf(&ctx.formula(&input)?)?,
                GenKind::ReduceAcaf { input } => reduce_acaf(&ctx.formula(&input)?)?,
                GenKind::Triangles { k } => triangle_stack_framework(k),
            };
            out.write_all(render_apx(&f).as_bytes())?;
        }
        Command::Bench {
            task,
            repetitions,
            input,
        } => {
            if repetitions == 0 {
                return Err(Failure::Usage("--repetitions must be at least 1".into()));
            }
            let f = ctx.framework(&input)?;
            let report = bench(&f, task, repetitions, ctx.limit)?;
            print_json(out, &report)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn bench(
    f: &ArgumentationFramework,
    task: BenchTask,
    repetitions: u32,
    limit: OracleLimit,
) -> Result<Value, Failure> {
    let mut total = Duration::ZERO;
    let mut max_delay = Duration::ZERO;
    let mut first = Duration::MAX;
    let mut solutions = 0;
    let mut stats = MisStats::default();
    for _ in 0..repetitions {
        let start = Instant::now();
        let mut last = start;
        let mut count = 0u64;
        let mut observe = |now: Instant| {
            if count == 0 {
                first = first.min(now - start);
            }
            max_delay = max_delay.max(now - last);
            last = now;
            count += 1;
        };
        match task {
            BenchTask::EnumNaive => {
                let mut it = enum_naive(f);
                while it.next().is_some() {
                    observe(Instant::now());
                }
                stats = it.stats();
            }
            BenchTask::EnumPreferred => {
                let mut it = enum_preferred_via_irr(f, &irreducibles(f, limit)?);
                while it.next().is_some() {
                    observe(Instant::now());
                }
                stats = it.stats();
            }
        }
        let end = Instant::now();
        max_delay = max_delay.max(end - last);
        total += end - start;
        solutions = count;
    }
    let mut h = header("bench");
    h.insert(
        "bench".into(),
        json!(match task {
            BenchTask::EnumNaive => "enum-naive",
            BenchTask::EnumPreferred => "enum-preferred",
        }),
    );
    h.insert("arguments".into(), json!(f.len()));
    h.insert("repetitions".into(), json!(repetitions));
    h.insert("solutions".into(), json!(solutions));
    h.insert("total_seconds".into(), json!(total.as_secs_f64()));
    h.insert("max_delay_seconds".into(), json!(max_delay.as_secs_f64()));
    h.insert(
        "first_solution_seconds".into(),
        json!(if first == Duration::MAX {
            Value::Null
        } else {
            json!(first.as_secs_f64())
        }),
    );
    h.insert("peak_stack_frames".into(), json!(stats.peak_stack_frames));
    h.insert(
        "peak_tracked_bytes".into(),
        json!(stats.peak_tracked_words * 8),
    );
    h.insert("stats".into(), json!(stats));
    Ok(Value::Object(h))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("afnaive: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
