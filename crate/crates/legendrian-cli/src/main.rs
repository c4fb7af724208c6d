//! Command-line front end for the `legendrian` library.
//!
//! Reads a plat-position front diagram, then reports classical invariants,
//! the differential graded algebra, augmentations, normal rulings,
//! augmentation-to-ruling extractions, or the theorem checks.
//!
//! Exit status: 0 on success, 1 on any input problem (unreadable file, bad
//! syntax, multi-component diagram, illegal rho, bad flags), 2 when the
//! mathematics itself fails a check — the latter signals an implementation
//! bug, never bad input.

use std::collections::BTreeSet;
use std::fmt;
use std::io::Read as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use legendrian::augment::{enumerate_augmentations, is_augmentation, Augmentation};
use legendrian::correspond::{
    check_equivalence, check_rotation_criterion, extract_ruling, parity_check, Extraction,
};
use legendrian::dga::{format_boundary, generator_name, parse_generator_name, Dga, Word};
use legendrian::front::{OrientedDiagram, ParseError, PlatDiagram, ValidateError};
use legendrian::grading::{IllegalRho, Rho};
use legendrian::ruling::{enumerate_rulings, Action, Config};

#[derive(Parser)]
#[command(
    name = "legendrian",
    version,
    about = "Invariants of Legendrian knots in plat position"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Plat diagram file, or - for standard input
    #[arg(long, global = true, default_value = "-")]
    input: String,

    /// Grading constraint: 0 = graded, 1 = ungraded, k >= 2 = graded mod k
    #[arg(long, global = true, default_value_t = 0)]
    rho: u32,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Orientation of the knot
    #[arg(long, global = true, value_enum, default_value_t = Orientation::Canonical)]
    orientation: Orientation,
}

#[derive(Subcommand)]
enum Command {
    /// Classical invariants and generator gradings
    Info,
    /// The differential of every generator
    Dga,
    /// Enumerate rho-graded augmentations
    Augs,
    /// Enumerate rho-graded normal rulings
    Rulings,
    /// Extract a normal ruling from each augmentation, with the trace
    Extract {
        /// Restrict to the augmentation with this support, e.g. q1,q3
        #[arg(long)]
        support: Option<String>,
    },
    /// Run the parity, existence-equivalence, and rotation-number checks
    Check,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Orientation {
    Canonical,
    Reversed,
}

/// Anything that makes the requested computation impossible. All variants
/// are the user's to fix and exit with status 1.
enum InputError {
    Io(String, std::io::Error),
    Parse(ParseError),
    Validate(ValidateError),
    Rho(IllegalRho),
    Support(String),
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Io(path, e) => write!(f, "cannot read {path}: {e}"),
            InputError::Parse(e) => write!(f, "{e}"),
            InputError::Validate(e) => write!(f, "{e}"),
            InputError::Rho(e) => write!(f, "{e}"),
            InputError::Support(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<ParseError> for InputError {
    fn from(e: ParseError) -> Self {
        InputError::Parse(e)
    }
}

impl From<ValidateError> for InputError {
    fn from(e: ValidateError) -> Self {
        InputError::Validate(e)
    }
}

impl From<IllegalRho> for InputError {
    fn from(e: IllegalRho) -> Self {
        InputError::Rho(e)
    }
}

/// A successful run's report, or a report whose checks failed (exit 2).
enum Outcome {
    Report(String),
    CheckFailed(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(Outcome::Report(report)) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::CheckFailed(report)) => {
            print!("{report}");
            eprintln!("error: theorem check failed; this indicates an implementation bug");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, InputError> {
    let text = read_input(&cli.input)?;
    let diagram = PlatDiagram::parse(&text)?;
    let mut od = diagram.validate()?;
    if cli.orientation == Orientation::Reversed {
        od = od.reversed();
    }
    let dga = Dga::new(&od);
    let rho = Rho(cli.rho);

    let report = match &cli.command {
        Command::Info => info_report(&od, &dga, cli.format),
        Command::Dga => dga_report(&dga, cli.format),
        Command::Augs => augs_report(&dga, rho, cli.format)?,
        Command::Rulings => rulings_report(&od, rho, cli.format)?,
        Command::Extract { support } => {
            return extract_report(&od, &dga, rho, support.as_deref(), cli.format);
        }
        Command::Check => return check_report(&od, &dga, rho, cli.format),
    };
    Ok(Outcome::Report(report))
}

fn read_input(input: &str) -> Result<String, InputError> {
    if input == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| InputError::Io("standard input".into(), e))?;
        Ok(text)
    } else {
        std::fs::read_to_string(input).map_err(|e| InputError::Io(input.into(), e))
    }
}

fn emit_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report values serialize");
    s.push('\n');
    s
}

fn name_list(generators: impl IntoIterator<Item = usize>) -> Vec<String> {
    generators.into_iter().map(generator_name).collect()
}

fn joined_names(generators: &BTreeSet<usize>, empty: &str) -> String {
    if generators.is_empty() {
        empty.to_string()
    } else {
        name_list(generators.iter().copied()).join(", ")
    }
}

fn config_name(config: Config) -> &'static str {
    match config {
        Config::Paired => "paired",
        Config::A => "a",
        Config::B => "b",
        Config::C => "c",
        Config::Crossed => "crossed",
        Config::InterleavedBelow => "interleaved_below",
        Config::InterleavedAbove => "interleaved_above",
    }
}

fn action_name(action: Action) -> &'static str {
    match action {
        Action::Pass => "pass",
        Action::Switch => "switch",
    }
}

fn info_report(od: &OrientedDiagram, dga: &Dga, format: Format) -> String {
    let d = od.diagram();
    match format {
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!("cusps: {}\n", d.cusps()));
            out.push_str(&format!("crossings: {}\n", d.crossing_count()));
            out.push_str(&format!("generators: {}\n", dga.generator_count()));
            out.push_str(&format!(
                "thurston-bennequin: {}\n",
                od.thurston_bennequin()
            ));
            out.push_str(&format!("rotation: {}\n", od.rotation_number()));
            out.push_str(&format!("maslov modulus: {}\n", dga.modulus()));
            for g in 1..=dga.generator_count() {
                out.push_str(&format!("|{}| = {}\n", generator_name(g), dga.grading(g)));
            }
            out
        }
        Format::Json => {
            let gradings: serde_json::Map<String, Value> = (1..=dga.generator_count())
                .map(|g| (generator_name(g), json!(dga.grading(g))))
                .collect();
            emit_json(&json!({
                "cusps": d.cusps(),
                "crossings": d.crossing_count(),
                "generators": dga.generator_count(),
                "thurston_bennequin": od.thurston_bennequin(),
                "rotation_number": od.rotation_number(),
                "maslov_modulus": dga.modulus(),
                "gradings": gradings,
            }))
        }
    }
}

fn dga_report(dga: &Dga, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for g in 1..=dga.generator_count() {
                out.push_str(&format!(
                    "∂{} = {}\n",
                    generator_name(g),
                    format_boundary(dga.boundary(g))
                ));
            }
            out
        }
        Format::Json => {
            let boundaries: serde_json::Map<String, Value> = (1..=dga.generator_count())
                .map(|g| {
                    let mut words: Vec<Vec<String>> = dga
                        .boundary(g)
                        .iter()
                        .map(|w: &Word| name_list(w.iter().copied()))
                        .collect();
                    words.sort();
                    (generator_name(g), json!(words))
                })
                .collect();
            emit_json(&Value::Object(boundaries))
        }
    }
}

fn augs_report(dga: &Dga, rho: Rho, format: Format) -> Result<String, InputError> {
    let augs = enumerate_augmentations(dga, rho)?;
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            for (i, aug) in augs.iter().enumerate() {
                out.push_str(&format!(
                    "augmentation {}: {}\n",
                    i + 1,
                    joined_names(&aug.support, "(empty)")
                ));
            }
            out.push_str(&format!(
                "{} augmentations at rho {}\n",
                augs.len(),
                rho.value()
            ));
            out
        }
        Format::Json => {
            let items: Vec<Value> = augs
                .iter()
                .map(|aug| {
                    json!({
                        "support": name_list(aug.support.iter().copied()),
                        "rho": rho.value(),
                    })
                })
                .collect();
            emit_json(&json!(items))
        }
    })
}

fn rulings_report(od: &OrientedDiagram, rho: Rho, format: Format) -> Result<String, InputError> {
    let rulings = enumerate_rulings(od, rho)?;
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            for (i, ruling) in rulings.iter().enumerate() {
                out.push_str(&format!(
                    "ruling {}: switches {}\n",
                    i + 1,
                    joined_names(&ruling.switches, "(none)")
                ));
            }
            out.push_str(&format!(
                "{} rulings at rho {}\n",
                rulings.len(),
                rho.value()
            ));
            out
        }
        Format::Json => {
            let items: Vec<Value> = rulings
                .iter()
                .map(|ruling| json!({ "switches": name_list(ruling.switches.iter().copied()) }))
                .collect();
            emit_json(&json!({ "count": rulings.len(), "rulings": items }))
        }
    })
}

fn parse_support(dga: &Dga, text: &str) -> Result<BTreeSet<usize>, InputError> {
    let mut support = BTreeSet::new();
    for piece in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let g = parse_generator_name(piece)
            .ok_or_else(|| InputError::Support(format!("unrecognized generator name {piece:?}")))?;
        if g > dga.generator_count() {
            return Err(InputError::Support(format!(
                "generator {piece} is out of range; the algebra has {} generators",
                dga.generator_count()
            )));
        }
        support.insert(g);
    }
    Ok(support)
}

fn extract_report(
    od: &OrientedDiagram,
    dga: &Dga,
    rho: Rho,
    support: Option<&str>,
    format: Format,
) -> Result<Outcome, InputError> {
    let augs: Vec<Augmentation> = match support {
        Some(text) => {
            let support = parse_support(dga, text)?;
            if !is_augmentation(dga, &support, rho)? {
                return Err(InputError::Support(format!(
                    "{} is not an augmentation at rho {}",
                    joined_names(&support, "the empty support"),
                    rho.value()
                )));
            }
            vec![Augmentation::new(support, rho)]
        }
        None => enumerate_augmentations(dga, rho)?,
    };

    let mut extractions: Vec<(Augmentation, Extraction)> = Vec::new();
    for aug in augs {
        match extract_ruling(od, dga, &aug) {
            Ok(extraction) => extractions.push((aug, extraction)),
            Err(e) => {
                let report = format!(
                    "extraction failed on the augmentation with support {}: {e}\n",
                    joined_names(&aug.support, "(empty)")
                );
                return Ok(Outcome::CheckFailed(report));
            }
        }
    }

    let report = match format {
        Format::Text => {
            let mut out = String::new();
            for (aug, extraction) in &extractions {
                out.push_str(&format!(
                    "augmentation {} -> ruling with switches {}\n",
                    joined_names(&aug.support, "(empty)"),
                    joined_names(&extraction.ruling.switches, "(none)")
                ));
                for step in &extraction.trace {
                    out.push_str(&format!(
                        "  {}: {} {}",
                        generator_name(step.crossing),
                        config_name(step.config),
                        action_name(step.action)
                    ));
                    if !step.betas.is_empty() {
                        let betas: Vec<String> = step
                            .betas
                            .iter()
                            .map(|p| format!("({},{})", p.low, p.high))
                            .collect();
                        out.push_str(&format!(", betas {}", betas.join(" ")));
                    }
                    if !step.flips.is_empty() {
                        out.push_str(&format!(
                            ", flips {}",
                            name_list(step.flips.iter().copied()).join(" ")
                        ));
                    }
                    out.push('\n');
                }
            }
            out.push_str(&format!(
                "{} extractions at rho {}\n",
                extractions.len(),
                rho.value()
            ));
            out
        }
        Format::Json => {
            let items: Vec<Value> = extractions
                .iter()
                .map(|(aug, extraction)| {
                    let trace: Vec<Value> = extraction
                        .trace
                        .iter()
                        .map(|step| {
                            let betas: Vec<Value> =
                                step.betas.iter().map(|p| json!([p.low, p.high])).collect();
                            json!({
                                "crossing": generator_name(step.crossing),
                                "config": config_name(step.config),
                                "action": action_name(step.action),
                                "betas": betas,
                                "flips": name_list(step.flips.iter().copied()),
                            })
                        })
                        .collect();
                    json!({
                        "support": name_list(aug.support.iter().copied()),
                        "rho": rho.value(),
                        "switches": name_list(extraction.ruling.switches.iter().copied()),
                        "trace": trace,
                    })
                })
                .collect();
            emit_json(&json!(items))
        }
    };
    Ok(Outcome::Report(report))
}

fn check_report(
    od: &OrientedDiagram,
    dga: &Dga,
    rho: Rho,
    format: Format,
) -> Result<Outcome, InputError> {
    let parity = parity_check(od, dga);
    let equivalence = check_equivalence(od, dga, rho)?;
    let rotation = check_rotation_criterion(od, dga);
    let holds = parity && equivalence.holds() && rotation.criterion_holds();

    let report = match format {
        Format::Text => {
            let verdict = |ok: bool| if ok { "ok" } else { "FAILED" };
            let mut out = String::new();
            out.push_str(&format!(
                "rho {}: {} augmentations, {} rulings, {} extraction failures\n",
                equivalence.rho.value(),
                equivalence.augmentations,
                equivalence.rulings,
                equivalence.extraction_failures
            ));
            out.push_str(&format!(
                "existence equivalence: {}\n",
                verdict(equivalence.holds())
            ));
            out.push_str(&format!("parity law: {}\n", verdict(parity)));
            out.push_str(&format!(
                "rotation number {}: {} two-graded augmentations, {} two-graded rulings\n",
                rotation.rotation_number,
                rotation.two_graded_augmentations,
                rotation.two_graded_rulings
            ));
            out.push_str(&format!(
                "rotation criterion: {}\n",
                verdict(rotation.criterion_holds())
            ));
            out.push_str(&format!(
                "check {}\n",
                if holds { "passed" } else { "FAILED" }
            ));
            out
        }
        Format::Json => emit_json(&json!({
            "rho": equivalence.rho.value(),
            "augmentations": equivalence.augmentations,
            "rulings": equivalence.rulings,
            "extraction_failures": equivalence.extraction_failures,
            "existence_agrees": equivalence.existence_agrees(),
            "parity_law": parity,
            "rotation": {
                "rotation_number": rotation.rotation_number,
                "two_graded_augmentations": rotation.two_graded_augmentations,
                "two_graded_rulings": rotation.two_graded_rulings,
                "opposite_cusp_pairings": rotation.opposite_cusp_pairings,
                "criterion_holds": rotation.criterion_holds(),
            },
            "holds": holds,
        })),
    };
    Ok(if holds {
        Outcome::Report(report)
    } else {
        Outcome::CheckFailed(report)
    })
}
