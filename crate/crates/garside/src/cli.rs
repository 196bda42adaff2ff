//! Command implementations behind the `garside` binary. Each command
//! produces a [`Report`] printed as JSON on stdout; the status maps to the
//! process exit code (0 positive, 1 clean negative, 2 structural error).

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::analyzer::{
    is_garside_germ, lcm_criteria, noetherian_report, verify_laws, GarsideFailure,
};
use crate::coxeter::{classical_germ, dual_germ, CoxeterFamily, CoxeterSpec};
use crate::engine::{CategoryEngine, PathWord};
use crate::format::{read_germ_file, write_germ_file};
use crate::germ::{axiom_report, AxiomViolation, ElementId, GermTable};
use crate::report::{Report, Status};

#[derive(Parser, Debug)]
#[command(
    name = "garside",
    about = "Finite germs: validation, Garside analysis, normal forms, word problem, Coxeter-derived braid-monoid germs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the germ axioms of a germ file.
    Validate { file: PathBuf },
    /// Decide whether the germ is a Garside germ; optionally verify the
    /// sharp laws and the Noetherian/lcm criteria.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        laws: bool,
        #[arg(long)]
        noetherian: bool,
    },
    /// Greedy normal form of a word (comma-separated element names).
    Nf {
        file: PathBuf,
        #[arg(long)]
        word: String,
        /// Object of the empty word (required only when the word is empty).
        #[arg(long)]
        object: Option<String>,
    },
    /// Word problem: do two words present the same element?
    Wp {
        file: PathBuf,
        word1: String,
        word2: String,
    },
    /// Derive a classical or dual germ from a finite Coxeter group.
    Derive {
        /// A, B or I2.
        #[arg(long)]
        family: String,
        /// Points for A (1..=6), signed coordinates for B (1..=4), m for I2 (3..=12).
        #[arg(long)]
        rank: usize,
        /// classical or dual.
        #[arg(long)]
        flavor: String,
        /// Dual only: order of the simple reflections in the Coxeter
        /// element, as comma-separated indices.
        #[arg(long)]
        coxeter_order: Option<String>,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Count distinct normal forms by s-length, for lengths 0..=max.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        max: usize,
    },
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}

fn name_of(t: &GermTable, e: ElementId) -> String {
    t.element_name(e).to_string()
}

fn names_of(t: &GermTable, es: &[ElementId]) -> Vec<String> {
    es.iter().map(|&e| name_of(t, e)).collect()
}

fn violation_witness(t: &GermTable, v: &AxiomViolation) -> (String, Vec<String>) {
    match v {
        AxiomViolation::Endpoints { f, g } => ("endpoints".into(), names_of(t, &[*f, *g])),
        AxiomViolation::IdentityLaw { f } => ("identity-law".into(), names_of(t, &[*f])),
        AxiomViolation::Exchange { f, g, h } => ("exchange".into(), names_of(t, &[*f, *g, *h])),
        AxiomViolation::LeftAssoc { f, g, h } => {
            ("left-associativity".into(), names_of(t, &[*f, *g, *h]))
        }
        AxiomViolation::RightAssoc { f, g, h } => {
            ("right-associativity".into(), names_of(t, &[*f, *g, *h]))
        }
        AxiomViolation::LeftCancel { f, g, g_prime } => (
            "left-cancellativity".into(),
            names_of(t, &[*f, *g, *g_prime]),
        ),
        AxiomViolation::RightCancel { f, g, g_prime } => (
            "right-cancellativity".into(),
            names_of(t, &[*f, *g, *g_prime]),
        ),
    }
}

fn garside_failure_witness(t: &GermTable, f: &GarsideFailure) -> (String, Vec<String>) {
    match f {
        GarsideFailure::NotLeftAssociative { f, g, h } => {
            ("not-left-associative".into(), names_of(t, &[*f, *g, *h]))
        }
        GarsideFailure::NotLeftCancellative { f, g, g_prime } => (
            "not-left-cancellative".into(),
            names_of(t, &[*f, *g, *g_prime]),
        ),
        GarsideFailure::NoGreatestJ { g1, g2 } => ("no-greatest-j".into(), names_of(t, &[*g1, *g2])),
        GarsideFailure::LawViolation { g1, g2, g3 } => {
            ("law-violation".into(), names_of(t, &[*g1, *g2, *g3]))
        }
    }
}

fn load(command: &str, file: &Path) -> Result<GermTable, Box<Report>> {
    read_germ_file(file).map_err(|e| {
        Box::new(Report::error(
            command,
            Some(file.display().to_string()),
            e.to_string(),
        ))
    })
}

fn parse_word(
    t: &GermTable,
    command: &str,
    input: Option<String>,
    csv: &str,
    object: Option<&str>,
) -> Result<PathWord, Box<Report>> {
    let err = |msg: String| Box::new(Report::error(command, input.clone(), msg));
    let tokens: Vec<&str> = csv
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let mut entries = Vec::with_capacity(tokens.len());
    for tok in tokens {
        let e = t
            .element_by_name(tok)
            .ok_or_else(|| err(format!("unknown element name {tok:?}")))?;
        entries.push(e);
    }
    let object = match object {
        Some(name) => Some(
            t.objects()
                .find(|&x| t.object_name(x) == name)
                .ok_or_else(|| err(format!("unknown object name {name:?}")))?,
        ),
        None => None,
    };
    PathWord::parse(t, entries, object).map_err(|e| err(e.to_string()))
}

fn build_engine<'g>(
    t: &'g GermTable,
    command: &str,
    input: Option<String>,
) -> Result<CategoryEngine<'g>, Box<Report>> {
    CategoryEngine::new(t).map_err(|e| {
        Box::new(Report::error(
            command,
            input,
            format!("germ is not a verified Garside germ: {e}"),
        ))
    })
}

fn cmd_validate(file: &Path) -> Report {
    let input = Some(file.display().to_string());
    let t = match load("validate", file) {
        Ok(t) => t,
        Err(r) => return *r,
    };
    let mut report = Report::new("validate", input);
    let start = Instant::now();
    let ax = axiom_report(&t);
    report.timing("validate", ms(start));
    report.set("valid", ax.valid);
    report.set("left_associative", ax.left_associative);
    report.set("right_associative", ax.right_associative);
    report.set("left_cancellative", ax.left_cancellative);
    report.set("right_cancellative", ax.right_cancellative);
    report.set("invertibles", names_of(&t, &ax.invertibles));
    report.set("atoms", names_of(&t, &ax.atoms));
    report.set("elements", t.num_elements());
    for v in &ax.counterexamples {
        let (check, elements) = violation_witness(&t, v);
        report.witness(&check, elements, None);
    }
    report.status = if ax.valid { Status::Ok } else { Status::Negative };
    report
}

fn cmd_analyze(file: &Path, laws: bool, noetherian: bool) -> Report {
    let input = Some(file.display().to_string());
    let t = match load("analyze", file) {
        Ok(t) => t,
        Err(r) => return *r,
    };
    let mut report = Report::new("analyze", input);
    report.set("elements", t.num_elements());

    let start = Instant::now();
    let ax = axiom_report(&t);
    report.timing("axioms", ms(start));
    report.set("valid", ax.valid);
    for v in &ax.counterexamples {
        let (check, elements) = violation_witness(&t, v);
        report.witness(&check, elements, None);
    }

    let start = Instant::now();
    let verdict = is_garside_germ(&t);
    report.timing("garside", ms(start));
    report.set("is_garside", verdict.is_garside);
    if let Some(f) = &verdict.failure {
        let (check, elements) = garside_failure_witness(&t, f);
        report.set("failed_criterion", check.clone());
        report.witness(&check, elements, None);
    }

    if laws {
        if let Some(j) = &verdict.j_table {
            let start = Instant::now();
            let lr = verify_laws(&t, j);
            report.timing("laws", ms(start));
            report.set("sharp_laws", &lr);
        } else {
            report.set("sharp_laws", "skipped: no J-table on a negative verdict");
        }
    }
    if noetherian {
        let start = Instant::now();
        let n = noetherian_report(&t);
        let l = lcm_criteria(&t);
        report.timing("noetherian", ms(start));
        report.set("noetherian", &n);
        report.set("lcm_criteria", &l);
    }

    report.status = if ax.valid && verdict.is_garside {
        Status::Ok
    } else {
        Status::Negative
    };
    report
}

fn cmd_nf(file: &Path, word: &str, object: Option<&str>) -> Report {
    let input = Some(file.display().to_string());
    let t = match load("nf", file) {
        Ok(t) => t,
        Err(r) => return *r,
    };
    let engine = match build_engine(&t, "nf", input.clone()) {
        Ok(e) => e,
        Err(r) => return *r,
    };
    let w = match parse_word(&t, "nf", input.clone(), word, object) {
        Ok(w) => w,
        Err(r) => return *r,
    };
    let mut report = Report::new("nf", input.clone());
    let start = Instant::now();
    match engine.normal_form(&w) {
        Ok(nf) => {
            report.timing("normal_form", ms(start));
            report.set("word", word);
            report.set("normal_form", names_of(&t, nf.entries()));
            report.set("s_length", engine.s_length(&nf));
            report.set("object", t.object_name(w.source()));
            report
        }
        Err(e) => Report::error("nf", input, e.to_string()),
    }
}

fn cmd_wp(file: &Path, word1: &str, word2: &str) -> Report {
    let input = Some(file.display().to_string());
    let t = match load("wp", file) {
        Ok(t) => t,
        Err(r) => return *r,
    };
    let engine = match build_engine(&t, "wp", input.clone()) {
        Ok(e) => e,
        Err(r) => return *r,
    };
    let w1 = match parse_word(&t, "wp", input.clone(), word1, None) {
        Ok(w) => w,
        Err(r) => return *r,
    };
    let w2 = match parse_word(&t, "wp", input.clone(), word2, None) {
        Ok(w) => w,
        Err(r) => return *r,
    };
    let mut report = Report::new("wp", input.clone());
    let start = Instant::now();
    let nf1 = engine.normal_form(&w1);
    let nf2 = engine.normal_form(&w2);
    match (nf1, nf2) {
        (Ok(nf1), Ok(nf2)) => {
            report.timing("word_problem", ms(start));
            let equal = nf1 == nf2;
            report.set("equal", equal);
            report.set("normal_form_1", names_of(&t, nf1.entries()));
            report.set("normal_form_2", names_of(&t, nf2.entries()));
            report.status = if equal { Status::Ok } else { Status::Negative };
            report
        }
        (Err(e), _) | (_, Err(e)) => Report::error("wp", input, e.to_string()),
    }
}

fn cmd_derive(
    family: &str,
    rank: usize,
    flavor: &str,
    coxeter_order: Option<&str>,
    out: &Path,
) -> Report {
    let input = Some(format!("{family} {rank} {flavor}"));
    let err = |msg: String| Report::error("derive", input.clone(), msg);
    let fam = match family.to_ascii_uppercase().as_str() {
        "A" => CoxeterFamily::A,
        "B" => CoxeterFamily::B,
        "I2" => CoxeterFamily::I2,
        other => return err(format!("unsupported family {other:?} (expected A, B or I2)")),
    };
    let spec = CoxeterSpec { family: fam, rank };
    let order: Option<Vec<usize>> = match coxeter_order {
        None => None,
        Some(csv) => {
            let parsed: Result<Vec<usize>, _> =
                csv.split(',').map(|s| s.trim().parse::<usize>()).collect();
            match parsed {
                Ok(v) => Some(v),
                Err(e) => return err(format!("bad --coxeter-order: {e}")),
            }
        }
    };
    let start = Instant::now();
    let table = match flavor {
        "classical" => {
            if coxeter_order.is_some() {
                return err("--coxeter-order only applies to the dual flavor".to_string());
            }
            classical_germ(&spec)
        }
        "dual" => dual_germ(&spec, order.as_deref()),
        other => return err(format!("unsupported flavor {other:?} (expected classical or dual)")),
    };
    let table = match table {
        Ok(t) => t,
        Err(e) => return err(e.to_string()),
    };
    let mut report = Report::new("derive", input.clone());
    report.timing("derive", ms(start));
    if let Err(e) = write_germ_file(out, &table) {
        return err(e.to_string());
    }
    report.set("family", family);
    report.set("rank", rank);
    report.set("flavor", flavor);
    report.set("elements", table.num_elements());
    report.set("out", out.display().to_string());
    report
}

/// Cap on the number of elements the enumeration will materialize.
const ENUMERATE_CAP: usize = 1_000_000;

fn cmd_enumerate(file: &Path, max: usize) -> Report {
    let input = Some(file.display().to_string());
    let t = match load("enumerate", file) {
        Ok(t) => t,
        Err(r) => return *r,
    };
    let engine = match build_engine(&t, "enumerate", input.clone()) {
        Ok(e) => e,
        Err(r) => return *r,
    };
    let mut report = Report::new("enumerate", input.clone());
    let start = Instant::now();

    // worklist over canonical forms, keyed by (source, entries)
    let mut counts = vec![0usize; max + 1];
    let mut seen: HashMap<(u32, Vec<ElementId>), usize> = HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    for x in t.objects() {
        let nf = engine
            .normal_form(&PathWord::empty(&t, x).expect("object in range"))
            .expect("empty word normalizes");
        let key = (x.0, nf.entries().to_vec());
        if seen.insert(key, 0).is_none() {
            counts[0] += 1;
            queue.push_back(nf);
        }
    }
    while let Some(nf) = queue.pop_front() {
        if seen.len() > ENUMERATE_CAP {
            return Report::error(
                "enumerate",
                input,
                format!("bound overflow: more than {ENUMERATE_CAP} normal forms materialized"),
            );
        }
        for g in t.elements() {
            if t.source(g) != nf.target() {
                continue;
            }
            let mut entries = nf.entries().to_vec();
            entries.push(g);
            let w = PathWord::parse(&t, entries, Some(nf.source())).expect("extension composes");
            let Ok(next) = engine.normal_form(&w) else {
                continue;
            };
            let len = engine.s_length(&next);
            if len > max {
                continue;
            }
            let key = (next.source().0, next.entries().to_vec());
            if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(key) {
                e.insert(len);
                counts[len] += 1;
                queue.push_back(next);
            }
        }
    }
    report.timing("enumerate", ms(start));
    report.set("max_s_length", max);
    report.set("counts", counts);
    report
}

/// Run one command, producing the report.
pub fn execute(cmd: &Command) -> Report {
    match cmd {
        Command::Validate { file } => cmd_validate(file),
        Command::Analyze {
            file,
            laws,
            noetherian,
        } => cmd_analyze(file, *laws, *noetherian),
        Command::Nf { file, word, object } => cmd_nf(file, word, object.as_deref()),
        Command::Wp { file, word1, word2 } => cmd_wp(file, word1, word2),
        Command::Derive {
            family,
            rank,
            flavor,
            coxeter_order,
            out,
        } => cmd_derive(family, *rank, flavor, coxeter_order.as_deref(), out),
        Command::Enumerate { file, max } => cmd_enumerate(file, *max),
    }
}

/// Parse arguments, run, print the report, and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version through this path as well
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let report = execute(&cli.command);
    println!("{}", report.to_json());
    report.status.exit_code()
}
