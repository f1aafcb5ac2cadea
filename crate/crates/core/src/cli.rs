//! Command-line front end. [`run`] takes arguments and output streams so
//! tests can drive it in-process.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::{parse_field_triple, parse_word, presets, CodeSpec, CyclicCode, ErrorPattern};
use crate::decoder::{decode, sweep, ArtifactSet, Pipeline};
use crate::error::Error;
use crate::field::{Element, Field};
use crate::interp::{mvif_naive, InterpolationProblem, NaiveBudget};
use crate::poly::parse_term_table;
use crate::repr::{
    compare_with_table, needed_targets, required_kinds, structure_report, ArtifactCache, ArtifactKind,
    StructureReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DECODE_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

const DEFAULT_CACHE_DIR: &str = ".cyclic-mvif-cache";

#[derive(Parser, Debug)]
#[command(name = "cyclic-mvif", version, about = "Interpolation-based representations and decoders for cyclic codes")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Artifact cache directory (default: $CYCLIC_MVIF_CACHE, then ./.cyclic-mvif-cache).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Upper bound on enumerated error patterns.
    #[arg(long, global = true)]
    pub max_patterns: Option<u128>,
    /// Upper bound on points for naive interpolation.
    #[arg(long, global = true)]
    pub max_points: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Kv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    UnknownSyndrome,
    Gelp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PipelineArg {
    OneStep,
    Gelp,
}

impl From<PipelineArg> for Pipeline {
    fn from(p: PipelineArg) -> Pipeline {
        match p {
            PipelineArg::OneStep => Pipeline::OneStep,
            PipelineArg::Gelp => Pipeline::Gelp,
        }
    }
}

/// Where the code comes from: a spec file, a preset, or inline flags.
#[derive(Args, Debug, Clone, Default)]
pub struct CodeArgs {
    /// Code spec file.
    #[arg(long, conflicts_with = "preset")]
    pub code: Option<PathBuf>,
    /// Built-in code: qr31, rs15, golay23, hamming7, bch15.
    #[arg(long)]
    pub preset: Option<String>,
    /// Field as `p,e,modulus-hex`.
    #[arg(long)]
    pub field: Option<String>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub q: Option<u32>,
    #[arg(long, value_delimiter = ',')]
    pub base_set: Vec<u32>,
    #[arg(long)]
    pub t: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Field parameters and optionally the log/antilog tables.
    FieldInfo {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        tables: bool,
    },
    /// Defining set, generator, pattern count and needed artifacts.
    CodeInfo {
        #[command(flatten)]
        code: CodeArgs,
        /// Also compute the minimum distance by enumeration (small codes only).
        #[arg(long)]
        distance: bool,
    },
    /// Build (or load from cache) representation artifacts.
    Build {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Residue (unknown-syndrome) or coefficient index (gelp); default: all needed.
        #[arg(long, alias = "index")]
        target: Option<u32>,
        #[arg(long)]
        force: bool,
    },
    /// Compare a printed term table with the self-built artifact.
    VerifyTable {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        table: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, alias = "index")]
        target: u32,
        #[arg(long)]
        force: bool,
    },
    /// Decode one received word.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        /// Comma-separated hex symbols, or a sparse form like `1*x^3+x^7+a*x^20`.
        #[arg(long)]
        received: String,
        #[arg(long, value_enum, default_value_t = PipelineArg::OneStep)]
        pipeline: PipelineArg,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        force: bool,
    },
    /// Decode every correctable pattern added to the zero codeword.
    Sweep {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = PipelineArg::OneStep)]
        pipeline: PipelineArg,
        #[arg(long)]
        force: bool,
    },
    /// Randomized interpolation and decoding checks.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

/// Failure with an exit code.
#[derive(Debug)]
struct Exit {
    code: i32,
    msg: String,
}

impl From<Error> for Exit {
    fn from(e: Error) -> Exit {
        let code = match e {
            Error::StructureTheoremViolated(_)
            | Error::HypothesisViolated(_)
            | Error::InjectivityViolated { .. }
            | Error::MissingArtifact(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Exit { code, msg: e.to_string() }
    }
}

impl From<std::io::Error> for Exit {
    fn from(e: std::io::Error) -> Exit {
        Exit { code: EXIT_INTERNAL, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Exit {
    Exit { code: EXIT_USAGE, msg: msg.into() }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.msg);
            e.code
        }
    }
}

fn resolve_spec(args: &CodeArgs) -> Result<CodeSpec, Exit> {
    if let Some(path) = &args.code {
        let text = std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read spec file {}: {e}", path.display())))?;
        return CodeSpec::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())));
    }
    if let Some(name) = &args.preset {
        return presets::by_name(name)
            .ok_or_else(|| usage(format!("unknown preset {name:?}; known: {}", presets::NAMES.join(", "))));
    }
    match (&args.field, args.n, args.q, args.t) {
        (Some(f), Some(n), Some(q), Some(t)) if !args.base_set.is_empty() => {
            let (p, e, modulus) = parse_field_triple(f).map_err(usage)?;
            Ok(CodeSpec { p, e, modulus, n, q, base_set: args.base_set.clone(), t })
        }
        _ => Err(usage("specify --code FILE, --preset NAME, or all of --field --n --q --base-set --t")),
    }
}

fn build_code(cli: &Cli, args: &CodeArgs) -> Result<CyclicCode, Exit> {
    let code = resolve_spec(args)?.build()?;
    Ok(match cli.max_patterns {
        Some(0) => return Err(usage("--max-patterns must be positive")),
        Some(limit) => code.with_pattern_limit(limit),
        None => code,
    })
}

fn cache(cli: &Cli) -> ArtifactCache {
    match &cli.cache_dir {
        Some(d) => ArtifactCache::new(d),
        None => ArtifactCache::from_env_or(DEFAULT_CACHE_DIR),
    }
}

/// Accumulates `key = value` lines or aligned text lines.
struct Report {
    format: Format,
    lines: Vec<(String, String)>,
}

impl Report {
    fn new(format: Format) -> Report {
        Report { format, lines: Vec::new() }
    }

    fn put(&mut self, key: &str, value: impl ToString) {
        self.lines.push((key.to_string(), value.to_string()));
    }

    fn write(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let width = self.lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &self.lines {
            match self.format {
                Format::Kv => writeln!(out, "{k} = {v}")?,
                Format::Text => writeln!(out, "{k:<width$}  {v}")?,
            }
        }
        Ok(())
    }
}

fn list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn put_structure(r: &mut Report, prefix: &str, s: &StructureReport) {
    r.put(&format!("{prefix}terms"), s.terms);
    r.put(&format!("{prefix}coefficients_in_subfield"), s.coefficients_in_subfield);
    r.put(&format!("{prefix}congruence_clean"), s.congruence_clean);
    r.put(&format!("{prefix}expected_residue"), s.expected_residue);
    r.put(&format!("{prefix}residues"), list(&s.residues));
    r.put(&format!("{prefix}congruence_violations"), s.congruence_violations);
    r.put(&format!("{prefix}unit_coefficients"), s.unit_coefficients());
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Exit> {
    let mut report = Report::new(cli.format);
    let mut status = EXIT_OK;
    match &cli.command {
        Command::FieldInfo { code, tables } => {
            let field = match (&code.field, &code.code, &code.preset) {
                (Some(f), None, None) => {
                    let (p, e, m) = parse_field_triple(f).map_err(usage)?;
                    Field::from_modulus_code(p, e, m)?
                }
                _ => {
                    let spec = resolve_spec(code)?;
                    Field::from_modulus_code(spec.p, spec.e, spec.modulus)?
                }
            };
            report.put("field", field.descriptor());
            report.put("characteristic", field.characteristic());
            report.put("degree", field.degree());
            report.put("order", field.order());
            report.put("alpha_order", field.units());
            if *tables {
                report.put("antilog", list(field.antilog_table()[..field.units() as usize].iter().map(|c| format!("{c:x}"))));
                report.put(
                    "log",
                    list(field.elements().skip(1).map(|a| field.log(a).expect("nonzero"))),
                );
            }
        }
        Command::CodeInfo { code, distance } => {
            let c = build_code(cli, code)?;
            report.put("spec_hash", c.spec().content_hash());
            report.put("field", c.field().descriptor());
            report.put("n", c.n());
            report.put("k", c.dimension());
            report.put("q", c.q());
            report.put("t", c.t());
            report.put("beta", format!("alpha^{}", c.beta_exp()));
            report.put("base_set", list(c.base_set()));
            report.put("defining_set", list(c.defining_set()));
            report.put("generator", list(c.generator().coeffs().iter().map(|x| format!("{x:x}"))));
            report.put("patterns", c.pattern_count());
            report.put("coprime_regime", c.coprime_regime());
            report.put("needed_targets", list(needed_targets(&c)));
            if *distance {
                report.put("minimum_distance", c.minimum_distance_bruteforce()?);
            }
        }
        Command::Build { code, kind, target, force } => {
            let c = build_code(cli, code)?;
            let cache = cache(cli);
            let kinds: Vec<ArtifactKind> = match (kind, target) {
                (KindArg::UnknownSyndrome, Some(r)) => {
                    if c.in_defining_set(r % c.n()) {
                        return Err(Error::TargetInDefiningSet(*r).into());
                    }
                    vec![ArtifactKind::UnknownSyndrome { target: *r }]
                }
                (KindArg::Gelp, Some(i)) => vec![ArtifactKind::GelpCoefficient { index: *i }],
                (k, None) => required_kinds(&c, *k == KindArg::Gelp),
            };
            report.put("artifacts", kinds.len());
            for kind in kinds {
                let start = Instant::now();
                let (a, built) = cache.get_or_build(&c, kind, *force)?;
                let prefix = format!("{}.", kind.file_stem());
                report.put(&format!("{prefix}path"), cache.path(a.spec(), kind).display());
                report.put(&format!("{prefix}source"), if built { "built" } else { "cache" });
                report.put(&format!("{prefix}seconds"), format!("{:.3}", start.elapsed().as_secs_f64()));
                put_structure(&mut report, &prefix, a.report());
            }
        }
        Command::VerifyTable { code, table, kind, target, force } => {
            let c = build_code(cli, code)?;
            let text = std::fs::read_to_string(table)
                .map_err(|e| usage(format!("cannot read table {}: {e}", table.display())))?;
            let arity = c.base_set().len();
            let rows = parse_term_table(&text, Some(arity)).map_err(|e| usage(format!("{}: {e}", table.display())))?;
            let poly = crate::poly::poly_from_rows(&rows, arity, c.field())
                .map_err(|e| usage(format!("{}: {e}", table.display())))?;
            let kind = match kind {
                KindArg::UnknownSyndrome => ArtifactKind::UnknownSyndrome { target: *target },
                KindArg::Gelp => ArtifactKind::GelpCoefficient { index: *target },
            };
            let table_structure = structure_report(&poly, &c, kind);
            report.put("rows", rows.len());
            put_structure(&mut report, "table.", &table_structure);
            let (artifact, _) = cache(cli).get_or_build(&c, kind, *force)?;
            let cmp = compare_with_table(&artifact, &poly, &c)?;
            report.put("artifact.terms", cmp.artifact_terms);
            report.put("only_in_table", cmp.only_in_table.len());
            report.put("only_in_artifact", cmp.only_in_artifact.len());
            report.put("coefficient_mismatches", cmp.coefficient_mismatches.len());
            report.put("agreement", format!("{}/{}", cmp.agreeing, cmp.total));
            for d in &cmp.disagreements {
                report.put(
                    "disagreement",
                    format!("{} expected={:x} table={:x}", list(d.tuple.values().iter().map(|x| format!("{x:x}"))), d.expected, d.got),
                );
            }
        }
        Command::Decode { code, received, pipeline, trace, force } => {
            let c = build_code(cli, code)?;
            let word = parse_received(received, &c)?;
            let pipeline = Pipeline::from(*pipeline);
            let set = ArtifactSet::from_cache(&cache(cli), &c, pipeline, *force)?;
            let result = decode(&c, &word, &set, pipeline, *trace)?;
            match cli.format {
                Format::Kv => out.write_all(result.to_kv().as_bytes())?,
                Format::Text => out.write_all(result.to_text(c.field()).as_bytes())?,
            }
            return Ok(if result.is_success() { EXIT_OK } else { EXIT_DECODE_FAILURE });
        }
        Command::Sweep { code, pipeline, force } => {
            let c = build_code(cli, code)?;
            let pipeline = Pipeline::from(*pipeline);
            let set = ArtifactSet::from_cache(&cache(cli), &c, pipeline, *force)?;
            let start = Instant::now();
            let s = sweep(&c, &set, pipeline)?;
            report.put("pipeline", pipeline.name());
            report.put("patterns", s.total);
            report.put("corrected", s.corrected);
            report.put("failed", s.total - s.corrected);
            for (w, (count, ok)) in s.by_weight.iter().enumerate() {
                report.put(&format!("weight.{}", w + 1), format!("{ok}/{count}"));
            }
            for f in &s.failures {
                report.put("failure", f);
            }
            report.put("seconds", format!("{:.3}", start.elapsed().as_secs_f64()));
            if s.corrected != s.total {
                status = EXIT_DECODE_FAILURE;
            }
        }
        Command::Selftest { seed, cases } => {
            let failures = selftest(cli, *seed, *cases, &mut report)?;
            if failures > 0 {
                status = EXIT_INTERNAL;
            }
        }
    }
    report.write(out)?;
    Ok(status)
}

/// Accepts `h,h,…,h` (exactly `n` hex symbols) or a sparse sum of
/// `[c*]x^l` terms.
fn parse_received(s: &str, code: &CyclicCode) -> Result<Vec<Element>, Exit> {
    if !s.contains('x') {
        return Ok(parse_word(s, code.n(), code.field())?);
    }
    let field = code.field();
    let mut word = vec![Element::ZERO; code.n() as usize];
    for term in s.split('+').map(str::trim).filter(|t| !t.is_empty()) {
        let (coeff, mono) = match term.split_once('*') {
            Some((c, m)) => (Element::from_hex(c.trim()).ok_or_else(|| usage(format!("bad coefficient in {term:?}")))?, m.trim()),
            None => (Element::ONE, term),
        };
        let pos: u32 = match mono {
            "x" => 1,
            m => m
                .strip_prefix("x^")
                .and_then(|e| e.parse().ok())
                .ok_or_else(|| usage(format!("bad term {term:?}")))?,
        };
        if pos >= code.n() || !field.contains(coeff) {
            return Err(usage(format!("term {term:?} outside the code")));
        }
        word[pos as usize] = field.add(word[pos as usize], coeff);
    }
    Ok(word)
}

fn selftest(cli: &Cli, seed: u64, cases: usize, report: &mut Report) -> Result<usize, Exit> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    report.put("seed", seed);
    let mut failures = 0;

    let fields = [(2, 4, 0x13), (2, 5, 0x25), (3, 3, 0x22)];
    let budget = NaiveBudget { max_points: cli.max_points.unwrap_or(NaiveBudget::default().max_points), ..Default::default() };
    let mut interp_ok = 0;
    for _ in 0..cases {
        let (p, e, m) = fields[rng.gen_range(0..fields.len())];
        let field = Field::from_modulus_code(p, e, m)?;
        let arity = rng.gen_range(1..=3usize);
        let problem = random_problem(&field, arity, 60, &mut rng);
        let poly = mvif_naive(&problem, &field, budget)?;
        let exact = problem
            .points()
            .iter()
            .zip(problem.values())
            .all(|(pt, &y)| poly.eval(pt, &field).map(|v| v == y).unwrap_or(false));
        if exact {
            interp_ok += 1;
        } else {
            failures += 1;
        }
    }
    report.put("interpolation", format!("{interp_ok}/{cases}"));

    let cache = cache(cli);
    for (name, pipeline) in [
        ("hamming7", Pipeline::OneStep),
        ("bch15", Pipeline::OneStep),
        ("bch15", Pipeline::Gelp),
        ("qr31", Pipeline::OneStep),
        ("rs15", Pipeline::OneStep),
        ("rs15", Pipeline::Gelp),
    ] {
        let code = presets::by_name(name).expect("preset").build()?;
        let set = ArtifactSet::from_cache(&cache, &code, pipeline, false)?;
        let mut ok = 0;
        for _ in 0..cases {
            let message: Vec<Element> = (0..code.dimension()).map(|_| random_symbol(&code, &mut rng)).collect();
            let codeword = code.encode(&message)?;
            let pattern = random_pattern(&code, &mut rng);
            let field = code.field();
            let received: Vec<Element> =
                codeword.iter().zip(pattern.to_word(code.n())).map(|(&a, b)| field.add(a, b)).collect();
            let r = decode(&code, &received, &set, pipeline, false)?;
            if r.error.as_ref() == Some(&pattern) && r.codeword == codeword {
                ok += 1;
            } else {
                failures += 1;
            }
        }
        report.put(&format!("decode.{name}.{}", pipeline.name()), format!("{ok}/{cases}"));
    }
    report.put("result", if failures == 0 { "pass" } else { "fail" });
    Ok(failures)
}

fn random_symbol(code: &CyclicCode, rng: &mut impl Rng) -> Element {
    let m = code.magnitudes();
    let i = rng.gen_range(0..=m.len());
    if i == m.len() {
        Element::ZERO
    } else {
        m[i]
    }
}

fn random_pattern(code: &CyclicCode, rng: &mut impl Rng) -> ErrorPattern {
    let weight = rng.gen_range(0..=code.t()) as usize;
    let positions = rand::seq::index::sample(rng, code.n() as usize, weight);
    let m = code.magnitudes();
    let entries = positions.iter().map(|l| (l as u32, m[rng.gen_range(0..m.len())])).collect();
    ErrorPattern::new(entries, code).expect("valid by construction")
}

/// Random distinct points with random values.
fn random_problem(field: &Field, arity: usize, max_points: usize, rng: &mut impl Rng) -> InterpolationProblem {
    let order = field.order();
    let space = (order as u64).saturating_pow(arity as u32);
    let count = rng.gen_range(1..=max_points.min(space as usize));
    let mut seen = std::collections::HashSet::new();
    let mut points = Vec::with_capacity(count);
    while points.len() < count {
        let p: Vec<Element> = (0..arity).map(|_| Element(rng.gen_range(0..order))).collect();
        if seen.insert(p.clone()) {
            points.push(p);
        }
    }
    let values = (0..count).map(|_| Element(rng.gen_range(0..order))).collect();
    InterpolationProblem::new(arity, points, values).expect("distinct points")
}

