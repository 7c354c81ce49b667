//! Command-line frontend for `archcat`.
//!
//! Every command prints one report on standard output, as text or as a JSON
//! document (`--format machine`), and exits with
//! `0` when the property holds or the input is valid, `1` when it fails, and
//! `2` on unreadable input or bad usage.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use archcat::arrow::{Decision, IsoWitness, Square, SubmorphismWitness};
use archcat::semigroup::{
    BoundRange, LemmaReport, MultipleSet, OrderedSemigroup, Refutation, SemigroupData,
};
use archcat::thin::{BoundWitness, EquivClasses, Preorder, PreorderData, PropReport};
use archcat::{
    build_arrow_category, equiv_classes, is_archimedean_bounded, is_archimedean_composition,
    is_bounded_class, is_bounded_preorder, is_discrete, is_submorphism, is_unitary_equivalent,
    nv_closure, validate_category, validate_preorder, validate_semigroup, ArchReport, CategoryData,
    FiniteCategory, NvClosure, Strategy, Validation,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "archcat",
    version,
    about = "Decide Archimedean conditions on finite categories"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Close preorder inputs reflexively and transitively before validating.
    #[arg(long, global = true)]
    close: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the laws of a category, preorder or semigroup file.
    Validate { file: PathBuf },
    /// Build the arrow category and list its squares.
    Arrow { file: PathBuf },
    /// Decide whether two morphisms are isomorphic in the arrow category.
    UnitEquiv {
        file: PathBuf,
        #[arg(short = 'f')]
        f: String,
        #[arg(short = 'g')]
        g: String,
    },
    /// Decide whether `f` is a submorphism of `g`.
    Submorphism {
        file: PathBuf,
        #[arg(short = 'f')]
        f: String,
        #[arg(short = 'g')]
        g: String,
    },
    /// Compute the closure of iterated composites of a unit.
    Nv {
        file: PathBuf,
        #[arg(short = 'v')]
        v: String,
    },
    /// Decide whether a class of morphisms is bounded (all morphisms when no `-m` is given).
    Bounded {
        file: PathBuf,
        #[arg(short = 'm')]
        m: Vec<String>,
    },
    /// Composition condition: one unit dominates every morphism.
    Arch1 { file: PathBuf },
    /// Boundedness condition: bounded composite classes only for identities.
    Arch2 { file: PathBuf },
    /// Closed-form checks on a preorder file.
    Preorder {
        file: PathBuf,
        #[arg(value_enum)]
        check: PreorderCheck,
    },
    /// Checks on an ordered-semigroup file.
    Semigroup {
        file: PathBuf,
        /// Also require `+` to preserve the order.
        #[arg(long)]
        monotone: bool,
        /// Search upper bounds in all elements rather than the positive cone.
        #[arg(long = "bound-in-E")]
        bound_in_e: bool,
        #[arg(value_enum)]
        check: SemigroupCheck,
    },
    /// Exhaustive sweeps over all structures of one size.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long)]
        size: usize,
        /// Run on the current thread only.
        #[arg(long)]
        sequential: bool,
    },
    /// List all structures of one size.
    Enumerate {
        #[arg(value_enum)]
        what: EnumerateTarget,
        #[arg(long)]
        size: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PreorderCheck {
    Validate,
    Classes,
    Bounded,
    Discrete,
    Arch1,
    Arch2,
    Category,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SemigroupCheck {
    Validate,
    Positives,
    Multiples,
    Unit,
    BoundedMultiples,
    Equiv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyTarget {
    Prop1,
    Prop2,
    Lemma1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumerateTarget {
    Preorders,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowSummary {
    pub objects: Vec<String>,
    pub squares: Vec<Square>,
    pub validation: Validation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoSidedComparison {
    pub two_sided: bool,
    pub bounded_multiples: bool,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreorderList {
    pub size: usize,
    pub count: usize,
    pub preorders: Vec<PreorderData>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Validation(Validation),
    Arrow(ArrowSummary),
    UnitEquiv(Decision<IsoWitness>),
    Submorphism(Decision<SubmorphismWitness>),
    Nv(NvClosure),
    Arch(ArchReport),
    Classes(EquivClasses),
    Bound(Decision<BoundWitness>),
    Discrete { holds: bool },
    Category(CategoryData),
    Positives { elements: Vec<String> },
    Multiples { sets: Vec<MultipleSet> },
    Unit(Decision<String>),
    BoundedMultiples(Refutation),
    TwoSided(TwoSidedComparison),
    Proposition(PropReport),
    Lemma(LemmaReport),
    Preorders(PreorderList),
}

impl Outcome {
    /// `Some(holds)` for decisions, `None` for pure listings.
    pub fn holds(&self) -> Option<bool> {
        match self {
            Outcome::Validation(v) => Some(v.is_ok()),
            Outcome::Arrow(a) => Some(a.validation.is_ok()),
            Outcome::UnitEquiv(d) => Some(d.holds),
            Outcome::Submorphism(d) => Some(d.holds),
            Outcome::Arch(r) => Some(r.holds),
            Outcome::Bound(d) => Some(d.holds),
            Outcome::Discrete { holds } => Some(*holds),
            Outcome::Unit(d) => Some(d.holds),
            Outcome::BoundedMultiples(r) => Some(r.holds),
            Outcome::TwoSided(t) => Some(t.agree),
            Outcome::Proposition(p) => Some(p.holds()),
            Outcome::Lemma(l) => Some(l.holds()),
            Outcome::Nv(_)
            | Outcome::Classes(_)
            | Outcome::Category(_)
            | Outcome::Positives { .. }
            | Outcome::Multiples { .. }
            | Outcome::Preorders(_) => None,
        }
    }

    pub fn exit_status(&self) -> i32 {
        match self.holds() {
            Some(false) => EXIT_FAILS,
            _ => EXIT_HOLDS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    /// SHA-256 of the input file, hex encoded.
    pub input_digest: Option<String>,
    pub result: Outcome,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct ErrorReport {
    command: String,
    error: String,
}

struct Input {
    bytes: Vec<u8>,
    digest: String,
}

enum Structure {
    Category(CategoryData),
    Preorder(PreorderData),
    Semigroup(SemigroupData),
}

fn read_input(path: &Path) -> Result<Input, String> {
    let bytes = std::fs::read(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let digest = hex::encode(Sha256::digest(&bytes));
    Ok(Input { bytes, digest })
}

fn parse_as<T: serde::de::DeserializeOwned>(path: &Path, bytes: &[u8]) -> Result<T, String> {
    serde_json::from_slice(bytes).map_err(|e| {
        let full = e.to_string();
        let message = match full.rsplit_once(" at line ") {
            Some((head, _)) => head,
            None => &full,
        };
        format!("{}:{}:{}: {message}", path.display(), e.line(), e.column())
    })
}

/// Picks the file kind from its top-level keys, then parses it strictly.
fn parse_structure(path: &Path, bytes: &[u8], close: bool) -> Result<Structure, String> {
    let value: serde_json::Value = parse_as(path, bytes)?;
    let has = |key: &str| value.get(key).is_some();
    if has("zero") {
        Ok(Structure::Semigroup(parse_as(path, bytes)?))
    } else if has("elements") {
        let data: PreorderData = parse_as(path, bytes)?;
        Ok(Structure::Preorder(if close {
            data.closed()
        } else {
            data
        }))
    } else {
        Ok(Structure::Category(parse_as(path, bytes)?))
    }
}

fn load_category(path: &Path, bytes: &[u8], close: bool) -> Result<FiniteCategory, String> {
    match parse_structure(path, bytes, close)? {
        Structure::Category(data) => FiniteCategory::new(&data).map_err(|e| e.to_string()),
        Structure::Preorder(data) => archcat::to_category(&data).map_err(|e| e.to_string()),
        Structure::Semigroup(_) => Err(format!(
            "{}: expected a category or preorder file, found a semigroup",
            path.display()
        )),
    }
}

fn load_preorder(path: &Path, bytes: &[u8], close: bool) -> Result<PreorderData, String> {
    let data: PreorderData = parse_as(path, bytes)?;
    Ok(if close { data.closed() } else { data })
}

fn command_name(command: &Command) -> String {
    match command {
        Command::Validate { .. } => "validate".into(),
        Command::Arrow { .. } => "arrow".into(),
        Command::UnitEquiv { .. } => "unit-equiv".into(),
        Command::Submorphism { .. } => "submorphism".into(),
        Command::Nv { .. } => "nv".into(),
        Command::Bounded { .. } => "bounded".into(),
        Command::Arch1 { .. } => "arch1".into(),
        Command::Arch2 { .. } => "arch2".into(),
        Command::Preorder { check, .. } => format!("preorder {}", value_name(*check)),
        Command::Semigroup { check, .. } => format!("semigroup {}", value_name(*check)),
        Command::Verify { target, .. } => format!("verify {}", value_name(*target)),
        Command::Enumerate { what, .. } => format!("enumerate {}", value_name(*what)),
    }
}

fn value_name<V: ValueEnum>(v: V) -> String {
    v.to_possible_value()
        .map(|p| p.get_name().to_string())
        .unwrap_or_default()
}

fn file_of(command: &Command) -> Option<&Path> {
    match command {
        Command::Validate { file }
        | Command::Arrow { file }
        | Command::UnitEquiv { file, .. }
        | Command::Submorphism { file, .. }
        | Command::Nv { file, .. }
        | Command::Bounded { file, .. }
        | Command::Arch1 { file }
        | Command::Arch2 { file }
        | Command::Preorder { file, .. }
        | Command::Semigroup { file, .. } => Some(file),
        Command::Verify { .. } | Command::Enumerate { .. } => None,
    }
}

fn execute(cli: &Cli, input: Option<&Input>) -> Result<Outcome, String> {
    let close = cli.close;
    let bytes = || input.map(|i| i.bytes.as_slice()).unwrap_or_default();
    let path = file_of(&cli.command).unwrap_or(Path::new("-"));
    let err = |e: archcat::Error| e.to_string();
    Ok(match &cli.command {
        Command::Validate { .. } => match parse_structure(path, bytes(), close)? {
            Structure::Category(data) => Outcome::Validation(validate_category(&data)),
            Structure::Preorder(data) => Outcome::Validation(validate_preorder(&data)),
            Structure::Semigroup(data) => Outcome::Validation(validate_semigroup(&data, false)),
        },
        Command::Arrow { .. } => {
            let c = load_category(path, bytes(), close)?;
            let arrow = build_arrow_category(&c).map_err(err)?;
            Outcome::Arrow(ArrowSummary {
                objects: arrow.derived.objects().to_vec(),
                validation: validate_category(&arrow.derived.to_data()),
                squares: arrow.squares,
            })
        }
        Command::UnitEquiv { f, g, .. } => {
            let c = load_category(path, bytes(), close)?;
            Outcome::UnitEquiv(is_unitary_equivalent(&c, f, g).map_err(err)?)
        }
        Command::Submorphism { f, g, .. } => {
            let c = load_category(path, bytes(), close)?;
            Outcome::Submorphism(is_submorphism(&c, f, g).map_err(err)?)
        }
        Command::Nv { v, .. } => {
            let c = load_category(path, bytes(), close)?;
            Outcome::Nv(nv_closure(&c, v).map_err(err)?)
        }
        Command::Bounded { m, .. } => {
            let c = load_category(path, bytes(), close)?;
            let class: Vec<String> = if m.is_empty() {
                c.morphisms().iter().map(|x| x.name.clone()).collect()
            } else {
                m.clone()
            };
            Outcome::Arch(is_bounded_class(&c, &class).map_err(err)?)
        }
        Command::Arch1 { .. } => Outcome::Arch(is_archimedean_composition(&load_category(
            path,
            bytes(),
            close,
        )?)),
        Command::Arch2 { .. } => Outcome::Arch(is_archimedean_bounded(&load_category(
            path,
            bytes(),
            close,
        )?)),
        Command::Preorder { check, .. } => {
            let data = load_preorder(path, bytes(), close)?;
            if *check == PreorderCheck::Validate {
                return Ok(Outcome::Validation(validate_preorder(&data)));
            }
            let p = Preorder::new(&data).map_err(err)?;
            match check {
                PreorderCheck::Validate => unreachable!(),
                PreorderCheck::Classes => Outcome::Classes(equiv_classes(&p)),
                PreorderCheck::Bounded => Outcome::Bound(is_bounded_preorder(&p)),
                PreorderCheck::Discrete => Outcome::Discrete {
                    holds: is_discrete(&p),
                },
                PreorderCheck::Arch1 => Outcome::Arch(is_archimedean_composition(&p.to_category())),
                PreorderCheck::Arch2 => Outcome::Arch(is_archimedean_bounded(&p.to_category())),
                PreorderCheck::Category => Outcome::Category(p.to_category().to_data()),
            }
        }
        Command::Semigroup {
            monotone,
            bound_in_e,
            check,
            ..
        } => {
            let data: SemigroupData = parse_as(path, bytes())?;
            if *check == SemigroupCheck::Validate {
                return Ok(Outcome::Validation(validate_semigroup(&data, *monotone)));
            }
            let s = OrderedSemigroup::new_checked(&data, *monotone).map_err(err)?;
            let range = if *bound_in_e {
                BoundRange::All
            } else {
                BoundRange::Positive
            };
            match check {
                SemigroupCheck::Validate => unreachable!(),
                SemigroupCheck::Positives => Outcome::Positives {
                    elements: s.positives(),
                },
                SemigroupCheck::Multiples => Outcome::Multiples {
                    sets: s
                        .elements()
                        .iter()
                        .map(|x| s.multiples(x).map_err(err))
                        .collect::<Result<_, _>>()?,
                },
                SemigroupCheck::Unit => Outcome::Unit(s.archimedean_unit()),
                SemigroupCheck::BoundedMultiples => {
                    Outcome::BoundedMultiples(s.archimedean_bounded_multiples(range))
                }
                SemigroupCheck::Equiv => Outcome::TwoSided(TwoSidedComparison {
                    two_sided: s.two_sided_condition(range),
                    bounded_multiples: s.archimedean_bounded_multiples(range).holds,
                    agree: s.check_13_14_equiv(range),
                }),
            }
        }
        Command::Verify {
            target,
            size,
            sequential,
        } => {
            let strategy = if *sequential {
                Strategy::Sequential
            } else {
                Strategy::Parallel
            };
            match target {
                VerifyTarget::Prop1 => Outcome::Proposition(
                    archcat::thin::verify_prop1_with(*size, strategy).map_err(err)?,
                ),
                VerifyTarget::Prop2 => Outcome::Proposition(
                    archcat::thin::verify_prop2_with(*size, strategy).map_err(err)?,
                ),
                VerifyTarget::Lemma1 => Outcome::Lemma(
                    archcat::semigroup::verify_lemma1_with(*size, strategy).map_err(err)?,
                ),
            }
        }
        Command::Enumerate { size, .. } => {
            let preorders: Vec<PreorderData> = archcat::enumerate_preorders(*size)
                .map_err(err)?
                .map(|p| p.to_data())
                .collect();
            Outcome::Preorders(PreorderList {
                size: *size,
                count: preorders.len(),
                preorders,
            })
        }
    })
}

fn opt(s: &Option<String>) -> &str {
    s.as_deref().unwrap_or("-")
}

fn render_text(report: &RunReport) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    match &report.result {
        Outcome::Validation(v) => line(v.to_string()),
        Outcome::Arrow(a) => {
            line(format!(
                "{} objects, {} squares",
                a.objects.len(),
                a.squares.len()
            ));
            for sq in &a.squares {
                line(format!("  {}: {} -> {}", sq.name(), sq.source, sq.target));
            }
            line(format!("validation: {}", a.validation));
        }
        Outcome::UnitEquiv(d) => {
            line(format!("unitary equivalent: {}", d.holds));
            if let Some(w) = &d.witness {
                line(format!("forward: {}", w.forward.name()));
                line(format!("backward: {}", w.backward.name()));
            }
        }
        Outcome::Submorphism(d) => {
            line(format!("submorphism: {}", d.holds));
            if let Some(w) = &d.witness {
                line(format!("a: {}", w.a));
                line(format!("b: {}", w.b));
            }
        }
        Outcome::Nv(nv) => {
            line(format!("unit: {}", nv.unit));
            line(format!("generators: {}", nv.generators.join(", ")));
            line(format!("members: {}", nv.members.join(", ")));
        }
        Outcome::Arch(r) => {
            line(format!("holds: {}", r.holds));
            line(format!("witness: {}", opt(&r.witness)));
            line(format!("counterexample: {}", opt(&r.counterexample)));
            line(format!(
                "examined {} candidates over {} morphisms",
                r.stats.candidates_examined, r.stats.morphisms
            ));
        }
        Outcome::Classes(e) => {
            for class in e.classes() {
                line(format!("{{{}}}", class.join(", ")));
            }
        }
        Outcome::Bound(d) => {
            line(format!("bounded: {}", d.holds));
            if let Some(w) = &d.witness {
                line(format!("lower: {}", w.lower));
                line(format!("upper: {}", w.upper));
            }
        }
        Outcome::Discrete { holds } => line(format!("discrete: {holds}")),
        Outcome::Category(data) => {
            line(serde_json::to_string_pretty(data).expect("category data serializes"))
        }
        Outcome::Positives { elements } => line(format!("positives: {{{}}}", elements.join(", "))),
        Outcome::Multiples { sets } => {
            for set in sets {
                line(format!("N{}: {{{}}}", set.base, set.members.join(", ")));
            }
        }
        Outcome::Unit(d) => {
            line(format!("unit condition: {}", d.holds));
            line(format!("unit: {}", opt(&d.witness)));
        }
        Outcome::BoundedMultiples(r) => {
            line(format!("bounded multiples condition: {}", r.holds));
            line(format!("counterexample: {}", opt(&r.counterexample)));
        }
        Outcome::TwoSided(t) => {
            line(format!("two-sided form: {}", t.two_sided));
            line(format!("bounded multiples: {}", t.bounded_multiples));
            line(format!("agree: {}", t.agree));
        }
        Outcome::Proposition(p) => {
            line(format!(
                "{} size {}: {}/{} pass",
                value_name_of(p.proposition),
                p.size,
                p.passed,
                p.checked
            ));
            if let Some(m) = &p.mismatch {
                line(format!(
                    "first mismatch #{} ({}): generic {} vs closed form {}{}",
                    m.index,
                    m.check,
                    m.generic,
                    m.closed_form,
                    m.morphism
                        .as_ref()
                        .map(|v| format!(" at {v}"))
                        .unwrap_or_default()
                ));
                line(serde_json::to_string(&m.preorder).expect("preorder serializes"));
            }
        }
        Outcome::Lemma(l) => {
            line(format!(
                "lemma1 size {}: {}/{} pass",
                l.size, l.passed, l.instances
            ));
            line(format!(
                "tables {} (associative {}), total orders {}, instances {}",
                l.tables_examined, l.associative_tables, l.total_orders, l.instances
            ));
            line(format!(
                "bounded multiples holds on {}, zero neutral on {}, two-sided disagreements {}",
                l.bounded_multiples_holding, l.zero_neutral_instances, l.equiv_failures
            ));
            if let Some(c) = &l.counterexample {
                line(format!(
                    "counterexample: {}",
                    serde_json::to_string(c).expect("semigroup serializes")
                ));
            }
            if let Some(c) = &l.first_equiv_failure {
                line(format!(
                    "two-sided disagreement: {}",
                    serde_json::to_string(c).expect("semigroup serializes")
                ));
            }
        }
        Outcome::Preorders(list) => {
            line(format!("{} preorders of size {}", list.count, list.size));
            for p in &list.preorders {
                line(serde_json::to_string(p).expect("preorder serializes"));
            }
        }
    }
    out
}

fn value_name_of(p: archcat::thin::Proposition) -> &'static str {
    match p {
        archcat::thin::Proposition::Prop1 => "prop1",
        archcat::thin::Proposition::Prop2 => "prop2",
    }
}

/// Parses `argv` (program name first), runs the command and writes its
/// report to `out`. Returns the process exit status.
pub fn run<I, T, W>(argv: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_HOLDS
            };
            let _ = write!(out, "{}", e.render());
            return status;
        }
    };
    let command = command_name(&cli.command);
    let started = Instant::now();
    let input = match file_of(&cli.command).map(read_input).transpose() {
        Ok(input) => input,
        Err(e) => return report_error(&cli, command, e, out),
    };
    let result = match execute(&cli, input.as_ref()) {
        Ok(result) => result,
        Err(e) => return report_error(&cli, command, e, out),
    };
    let report = RunReport {
        command,
        input_digest: input.map(|i| i.digest),
        elapsed_ms: started.elapsed().as_millis() as u64,
        result,
    };
    let status = report.result.exit_status();
    let written = match cli.format {
        Format::Text => write!(out, "{}", render_text(&report)),
        Format::Machine => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        ),
    };
    if written.is_err() {
        return EXIT_USAGE;
    }
    status
}

fn report_error<W: Write>(cli: &Cli, command: String, error: String, out: &mut W) -> i32 {
    let _ = match cli.format {
        Format::Text => writeln!(out, "error: {error}"),
        Format::Machine => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&ErrorReport { command, error })
                .expect("error serializes")
        ),
    };
    EXIT_USAGE
}
