//! Command-line front end: document I/O, subcommands and report emission.
//!
//! Exit status is 0 when every requested check passes, 1 when a check fails
//! (the report carries the witness) and 2 on input errors. Every flag can be
//! set through an environment variable with the `MOCKLIE_` prefix, for
//! example `MOCKLIE_FORMAT=structured` or `MOCKLIE_KOSZUL=off`.

pub mod document;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::extensions::{
    ander_s, check_isometry_conditions, build_isometry, double_extension_unchecked, gdext, iterate_decompose,
    verify_isometry, DoubleExtensionInput, GdextConvention, GdextData, IsometryWitness, Tower,
};
use crate::forms::{check_form, tstar_extension, BilinearForm, PseudoEuclidean, SCALAR_PRODUCT};
use crate::kernel::rational::{parse as parse_rational, render, render_vec};
use crate::kernel::{zero_vec, GradedDim, GradedMap, Matrix, Rational, EVEN, ODD};
use crate::report::CheckReport;
use crate::representation::{
    adjoint, central_extension, coadjoint, intertwiner_defect, intertwiner_space, semidirect_product, Cocycle,
    Representation,
};
use crate::superalgebra::subspace::{annihilator, compute_f, square_ideal, Subspace};
use crate::superalgebra::{
    check_axioms, check_cube_zero, check_squared_identity, derivation_space, direct_sum, tensor_assoc, Axiom,
    DerivationKind, Koszul, SuperAlgebra, MOCK_LIE,
};

pub use document::{parse, render_document, AlgebraDocument, DocumentError};

#[derive(Parser, Debug)]
#[command(name = "mocklie", version, about = "Check, build and decompose mock-Lie superalgebras")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, env = "MOCKLIE_FORMAT", default_value = "human")]
    format: Format,
    /// Seed for sampled checks.
    #[arg(long, global = true, env = "MOCKLIE_SEED", default_value_t = 1)]
    seed: u64,
    /// Number of sampled vectors in sampled checks.
    #[arg(long, global = true, env = "MOCKLIE_SAMPLES", default_value_t = 16)]
    samples: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run axiom and form suites on a document.
    Check(CheckArgs),
    /// Annihilator, square ideal, F and derivation-space dimensions.
    Props { file: PathBuf },
    /// Build a new algebra and emit its document.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Split a pseudo-euclidean algebra into a tower of generalized double extensions.
    Decompose { file: PathBuf },
    /// Verify isometries between generalized double extensions.
    Isometry {
        #[command(subcommand)]
        what: Isometry,
    },
    /// Search for an invertible intertwiner between the adjoint and coadjoint representations.
    Intertwiner { file: PathBuf },
}

#[derive(Args, Debug)]
struct CheckArgs {
    file: PathBuf,
    /// Evenness, supercommutativity and super-Jacobi.
    #[arg(long)]
    mock_lie: bool,
    /// Jordan identity, cube-zero and squared identities.
    #[arg(long)]
    jordan: bool,
    /// The four scalar-product properties of the document form.
    #[arg(long)]
    form: bool,
    /// Every suite that applies to the document.
    #[arg(long)]
    all: bool,
    /// Comma-separated axiom labels.
    #[arg(long, env = "MOCKLIE_AXIOMS", value_delimiter = ',')]
    axioms: Vec<String>,
}

#[derive(Args, Debug)]
struct OutputArg {
    /// Write the document here and print the report instead.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// Graded direct sum of two algebras.
    DirectSum {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Tensor product with an associative supercommutative algebra.
    Tensor {
        algebra: PathBuf,
        assoc: PathBuf,
        #[arg(long, env = "MOCKLIE_KOSZUL", default_value = "on")]
        koszul: Koszul,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Semidirect product with a module.
    Semidirect {
        file: PathBuf,
        #[command(flatten)]
        rep: RepChoice,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Central extension by a module and a 2-cocycle.
    CentralExt {
        file: PathBuf,
        #[command(flatten)]
        rep: RepChoice,
        #[arg(long)]
        cocycle: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// T* extension, optionally twisted by a cocycle with values in the coadjoint module.
    Tstar {
        file: PathBuf,
        #[arg(long)]
        cocycle: Option<String>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Double extension of a pseudo-euclidean algebra by a second algebra.
    DoubleExt {
        j1: PathBuf,
        j2: PathBuf,
        /// Representation of the second algebra on the first, stored in the second document.
        #[arg(long)]
        rep: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Generalized double extension by one odd pair.
    Gdext {
        file: PathBuf,
        #[command(flatten)]
        data: GdextArgs,
        #[arg(long, default_value = "corrected")]
        convention: GdextConvention,
        #[command(flatten)]
        out: OutputArg,
    },
}

#[derive(Args, Debug)]
struct RepChoice {
    /// Named representation from the document.
    #[arg(long, conflicts_with_all = ["adjoint", "coadjoint"])]
    rep: Option<String>,
    #[arg(long, conflicts_with = "coadjoint")]
    adjoint: bool,
    #[arg(long)]
    coadjoint: bool,
}

#[derive(Args, Debug)]
struct GdextArgs {
    /// Name of the odd map D in the document.
    #[arg(long)]
    d: String,
    /// Comma-separated coordinates of x0.
    #[arg(long, allow_hyphen_values = true)]
    x0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Isometry {
    /// Check that a map stored in the first document is an isometric isomorphism.
    Verify {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        map: String,
    },
    /// Check the witness conditions for two extensions of one base and verify the induced map.
    Witness(WitnessArgs),
}

#[derive(Args, Debug)]
struct WitnessArgs {
    base: PathBuf,
    #[arg(long)]
    d1: String,
    #[arg(long)]
    d2: String,
    /// Even automorphism of the base; the identity when omitted.
    #[arg(long)]
    s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    z0: Option<String>,
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    x1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    x2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda2: Option<String>,
}

/// Exit status and the text to print.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

enum Failure {
    Input(String),
    Document(String, Vec<DocumentError>),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Result of one subcommand before formatting.
struct Emission {
    human: String,
    structured: Value,
    passed: bool,
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome {
                code,
                output: e.render().to_string(),
            };
        }
    };
    let format = cli.format;
    match dispatch(&cli) {
        Ok(e) => Outcome {
            code: if e.passed { 0 } else { 1 },
            output: match format {
                Format::Human => e.human,
                Format::Structured => pretty(&e.structured),
            },
        },
        Err(f) => Outcome {
            code: 2,
            output: failure_text(f, format),
        },
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn failure_text(f: Failure, format: Format) -> String {
    let (message, details, report) = match f {
        Failure::Input(m) => (m, Vec::new(), None),
        Failure::Document(path, errs) => (
            format!("invalid document {path}"),
            errs.iter().map(ToString::to_string).collect(),
            None,
        ),
        Failure::Library(e) => {
            let report = match &e {
                Error::Precondition { report, .. } => report.as_deref().cloned(),
                _ => None,
            };
            (e.to_string(), Vec::new(), report)
        }
    };
    match format {
        Format::Human => {
            let mut s = format!("error: {message}\n");
            for d in &details {
                s.push_str(&format!("  {d}\n"));
            }
            if let Some(r) = &report {
                s.push_str(&r.to_string());
            }
            s
        }
        Format::Structured => {
            let mut v = json!({ "error": message, "details": details });
            if let Some(r) = &report {
                v["report"] = r.to_json();
            }
            pretty(&v)
        }
    }
}

fn dispatch(cli: &Cli) -> CliResult<Emission> {
    match &cli.command {
        Command::Check(a) => cmd_check(a, cli.samples, cli.seed),
        Command::Props { file } => cmd_props(file),
        Command::Construct { what } => cmd_construct(what),
        Command::Decompose { file } => cmd_decompose(file),
        Command::Isometry { what } => cmd_isometry(what),
        Command::Intertwiner { file } => cmd_intertwiner(file),
    }
}

fn load(path: &Path) -> CliResult<AlgebraDocument> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    parse(&text).map_err(|errs| Failure::Document(path.display().to_string(), errs))
}

fn dims_text(d: GradedDim) -> String {
    format!("({}|{})", d.even, d.odd)
}

fn dims_json(d: GradedDim) -> Value {
    json!({ "even": d.even, "odd": d.odd })
}

fn vec_json(v: &[Rational]) -> Value {
    Value::from(v.iter().map(render).collect::<Vec<_>>())
}

fn matrix_json(m: &Matrix) -> Value {
    Value::from((0..m.rows()).map(|r| vec_json(m.row(r))).collect::<Vec<_>>())
}

fn header(a: &SuperAlgebra) -> String {
    format!("algebra {} {}\n", a.name, dims_text(a.dims()))
}

fn report_emission(a: &SuperAlgebra, report: CheckReport) -> Emission {
    let passed = report.all_passed();
    Emission {
        human: format!(
            "{}{}result: {}\n",
            header(a),
            report,
            if passed { "pass" } else { "fail" }
        ),
        structured: json!({
            "algebra": a.name,
            "dims": dims_json(a.dims()),
            "report": report.to_json(),
        }),
        passed,
    }
}

fn require_form(doc: &AlgebraDocument, path: &Path) -> CliResult<BilinearForm> {
    doc.form
        .clone()
        .ok_or_else(|| Failure::Input(format!("{} has no form", path.display())))
}

fn pseudo_euclidean(doc: &AlgebraDocument, path: &Path) -> CliResult<PseudoEuclidean> {
    Ok(PseudoEuclidean::new(doc.algebra.clone(), require_form(doc, path)?)?)
}

fn parse_scalar(flag: &str, text: &str) -> CliResult<Rational> {
    parse_rational(text.trim()).map_err(|_| Failure::Input(format!("--{flag}: malformed rational {text:?}")))
}

fn parse_vector(flag: &str, text: Option<&str>, n: usize) -> CliResult<Vec<Rational>> {
    let Some(text) = text else {
        return Ok(zero_vec(n));
    };
    let v = text
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_scalar(flag, s))
        .collect::<CliResult<Vec<_>>>()?;
    if v.len() != n {
        return Err(Failure::Input(format!("--{flag}: expected {n} coordinates, found {}", v.len())));
    }
    Ok(v)
}

fn named_map<'a>(doc: &'a AlgebraDocument, name: &str) -> CliResult<&'a GradedMap> {
    doc.map(name)
        .ok_or_else(|| Failure::Input(format!("no map named {name:?} in {}", doc.algebra.name)))
}

fn cmd_check(a: &CheckArgs, samples: usize, seed: u64) -> CliResult<Emission> {
    let doc = load(&a.file)?;
    let alg = &doc.algebra;
    let mut axioms: Vec<Axiom> = Vec::new();
    for s in &a.axioms {
        axioms.push(s.trim().parse()?);
    }
    let mock_lie = a.mock_lie || a.all || (!a.jordan && !a.form && axioms.is_empty());
    if mock_lie {
        axioms.extend(MOCK_LIE);
    }
    if a.jordan || a.all {
        axioms.push(Axiom::JordanSuper);
    }
    let mut seen = Vec::new();
    axioms.retain(|x| {
        let fresh = !seen.contains(x);
        seen.push(*x);
        fresh
    });
    let mut report = check_axioms(alg, &axioms);
    if a.jordan || a.all {
        report.merge(check_cube_zero(alg, samples, seed));
        report.merge(check_squared_identity(alg, samples, seed));
    }
    if a.form || (a.all && doc.form.is_some()) {
        let form = require_form(&doc, &a.file)?;
        report.merge(check_form(alg, &form, &SCALAR_PRODUCT)?);
    }
    Ok(report_emission(alg, report))
}

fn subspace_dims(s: &Subspace) -> GradedDim {
    GradedDim::new(s.part(EVEN).len(), s.part(ODD).len())
}

fn cmd_props(file: &Path) -> CliResult<Emission> {
    let doc = load(file)?;
    let a = &doc.algebra;
    let mut human = header(a);
    let mut props = serde_json::Map::new();
    for (label, s) in [
        ("annihilator", annihilator(a)),
        ("square", square_ideal(a)),
        ("f", compute_f(a)),
    ] {
        let basis: Vec<Vec<Rational>> = [EVEN, ODD].iter().flat_map(|&p| s.part(p)).collect();
        human.push_str(&format!("{label} {}", dims_text(subspace_dims(&s))));
        for v in &basis {
            human.push_str(&format!(" {}", render_vec(v)));
        }
        human.push('\n');
        props.insert(
            label.into(),
            json!({
                "dims": dims_json(subspace_dims(&s)),
                "basis": basis.iter().map(|v| vec_json(v)).collect::<Vec<_>>(),
            }),
        );
    }
    let mut spaces: Vec<(&str, [usize; 2])> = vec![
        (
            "derivations",
            [EVEN, ODD].map(|p| derivation_space(a, DerivationKind::Derivation, p).len()),
        ),
        (
            "anti_derivations",
            [EVEN, ODD].map(|p| derivation_space(a, DerivationKind::AntiDerivation, p).len()),
        ),
    ];
    if let Some(form) = &doc.form {
        if let Ok(p) = PseudoEuclidean::new(a.clone(), form.clone()) {
            spaces.push(("supersymmetric_anti_derivations", [EVEN, ODD].map(|d| ander_s(&p, d).len())));
        }
    }
    for (label, [e, o]) in spaces {
        human.push_str(&format!("{label} even {e} odd {o}\n"));
        props.insert(label.into(), json!({ "even": e, "odd": o }));
    }
    Ok(Emission {
        human,
        structured: json!({ "algebra": a.name, "dims": dims_json(a.dims()), "properties": props }),
        passed: true,
    })
}

fn choose_rep(doc: &AlgebraDocument, choice: &RepChoice) -> CliResult<Representation> {
    if choice.adjoint {
        return Ok(adjoint(&doc.algebra)?);
    }
    if choice.coadjoint {
        return Ok(coadjoint(&doc.algebra)?);
    }
    let name = choice
        .rep
        .as_deref()
        .ok_or_else(|| Failure::Input("one of --rep, --adjoint, --coadjoint is required".into()))?;
    doc.representation(name)
        .ok_or_else(|| Failure::Input(format!("no representation named {name:?} in {}", doc.algebra.name)))
}

fn named_cocycle(doc: &AlgebraDocument, name: &str) -> CliResult<Cocycle> {
    doc.cocycle(name)
        .cloned()
        .ok_or_else(|| Failure::Input(format!("no cocycle named {name:?} in {}", doc.algebra.name)))
}

fn cmd_construct(what: &Construct) -> CliResult<Emission> {
    let (built, mut report, out) = match what {
        Construct::DirectSum { first, second, out } => {
            let (a, b) = (load(first)?, load(second)?);
            let alg = direct_sum(&a.algebra, &b.algebra);
            (AlgebraDocument::new(alg), CheckReport::new(), out)
        }
        Construct::Tensor {
            algebra,
            assoc,
            koszul,
            out,
        } => {
            let (j, a) = (load(algebra)?, load(assoc)?);
            let alg = tensor_assoc(&j.algebra, &a.algebra, *koszul)?;
            (AlgebraDocument::new(alg), CheckReport::new(), out)
        }
        Construct::Semidirect { file, rep, out } => {
            let doc = load(file)?;
            let r = choose_rep(&doc, rep)?;
            let alg = semidirect_product(&doc.algebra, &r)?;
            (AlgebraDocument::new(alg), CheckReport::new(), out)
        }
        Construct::CentralExt {
            file,
            rep,
            cocycle,
            out,
        } => {
            let doc = load(file)?;
            let r = choose_rep(&doc, rep)?;
            let w = named_cocycle(&doc, cocycle)?;
            let alg = central_extension(&doc.algebra, &r, &w)?;
            (AlgebraDocument::new(alg), CheckReport::new(), out)
        }
        Construct::Tstar { file, cocycle, out } => {
            let doc = load(file)?;
            let w = match cocycle {
                Some(name) => named_cocycle(&doc, name)?,
                None => Cocycle::zero(doc.algebra.dim(), doc.algebra.dims()),
            };
            let (alg, form, pre) = tstar_extension(&doc.algebra, &w)?;
            let mut report = check_axioms(&alg, &MOCK_LIE);
            report.merge_prefixed("tstar", pre);
            (AlgebraDocument::with_form(alg, form), report, out)
        }
        Construct::DoubleExt { j1, j2, rep, out } => {
            let (d1, d2) = (load(j1)?, load(j2)?);
            let p1 = pseudo_euclidean(&d1, j1)?;
            let named = d2
                .representations
                .iter()
                .find(|r| &r.name == rep)
                .ok_or_else(|| Failure::Input(format!("no representation named {rep:?} in {}", d2.algebra.name)))?;
            if named.module != p1.dims() {
                return Err(Failure::Input(format!(
                    "representation {rep:?} acts on {}, expected {}",
                    dims_text(named.module),
                    dims_text(p1.dims())
                )));
            }
            let input = DoubleExtensionInput {
                j1: p1,
                sigma: d2.form.clone().unwrap_or_else(|| BilinearForm::zero(d2.algebra.dims())),
                j2: d2.algebra.clone(),
                phi: named.action.clone(),
            };
            let pre = input.check();
            if !pre.all_passed() {
                return Err(Error::precondition("double extension input", pre).into());
            }
            let p = double_extension_unchecked(&input);
            (AlgebraDocument::with_form(p.algebra, p.form), CheckReport::new(), out)
        }
        Construct::Gdext {
            file,
            data,
            convention,
            out,
        } => {
            let doc = load(file)?;
            let g = gdext_data(&doc, file, &data.d, data.x0.as_deref(), data.lambda.as_deref())?;
            let (p, report) = gdext(&g, *convention)?;
            (AlgebraDocument::with_form(p.algebra, p.form), report, out)
        }
    };
    if report.entries.is_empty() {
        report.merge(check_axioms(&built.algebra, &MOCK_LIE));
        if let Some(form) = &built.form {
            report.merge(check_form(&built.algebra, form, &SCALAR_PRODUCT)?);
        }
    }
    let text = render_document(&built);
    let passed = report.all_passed();
    let human = match &out.output {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
            format!(
                "{}{}result: {}\n",
                header(&built.algebra),
                report,
                if passed { "pass" } else { "fail" }
            )
        }
        None => text.clone(),
    };
    let document: Value = serde_json::from_str(&text).expect("rendered document is JSON");
    Ok(Emission {
        human,
        structured: json!({ "document": document, "report": report.to_json() }),
        passed,
    })
}

fn gdext_data(
    doc: &AlgebraDocument,
    path: &Path,
    d: &str,
    x0: Option<&str>,
    lambda: Option<&str>,
) -> CliResult<GdextData> {
    let base = pseudo_euclidean(doc, path)?;
    let n = base.dims().total();
    Ok(GdextData {
        d: named_map(doc, d)?.clone(),
        x0: parse_vector("x0", x0, n)?,
        lambda: match lambda {
            Some(t) => parse_scalar("lambda", t)?,
            None => Rational::from_integer(0.into()),
        },
        base,
    })
}

fn tower_emission(p: &PseudoEuclidean, tower: &Tower) -> Emission {
    let mut human = header(&p.algebra);
    let mut steps = Vec::new();
    for (k, step) in tower.steps.iter().enumerate() {
        let g = &step.data;
        human.push_str(&format!(
            "step {}: base {} lambda {} x0 {}\n",
            k + 1,
            dims_text(g.base.dims()),
            render(&g.lambda),
            render_vec(&g.x0)
        ));
        for line in step.report.to_string().lines() {
            human.push_str(&format!("  {line}\n"));
        }
        steps.push(json!({
            "base_dims": dims_json(g.base.dims()),
            "lambda": render(&g.lambda),
            "x0": vec_json(&g.x0),
            "d": matrix_json(&g.d.matrix),
            "basis": matrix_json(&step.basis),
            "report": step.report.to_json(),
        }));
    }
    let residual = &tower.residual;
    human.push_str(&format!(
        "residual {}\ntower length {}\nresult: {}\n",
        dims_text(residual.dims()),
        tower.steps.len(),
        if tower.all_passed() { "pass" } else { "fail" }
    ));
    let residual_doc = render_document(&AlgebraDocument::with_form(residual.algebra.clone(), residual.form.clone()));
    Emission {
        human,
        structured: json!({
            "algebra": p.algebra.name,
            "dims": dims_json(p.dims()),
            "length": tower.steps.len(),
            "steps": steps,
            "residual": serde_json::from_str::<Value>(&residual_doc).expect("rendered document is JSON"),
            "passed": tower.all_passed(),
        }),
        passed: tower.all_passed(),
    }
}

fn cmd_decompose(file: &Path) -> CliResult<Emission> {
    let doc = load(file)?;
    let p = pseudo_euclidean(&doc, file)?;
    let tower = iterate_decompose(&p)?;
    Ok(tower_emission(&p, &tower))
}

fn cmd_isometry(what: &Isometry) -> CliResult<Emission> {
    match what {
        Isometry::Verify { first, second, map } => {
            let (d1, d2) = (load(first)?, load(second)?);
            let p1 = PseudoEuclidean::unchecked(d1.algebra.clone(), require_form(&d1, first)?)?;
            let p2 = PseudoEuclidean::unchecked(d2.algebra.clone(), require_form(&d2, second)?)?;
            let psi = named_map(&d1, map)?;
            if p1.dims() != p2.dims() {
                return Err(Error::mismatch(p1.dims().total(), p2.dims().total()).into());
            }
            let report = verify_isometry(psi, &p1, &p2)?;
            Ok(report_emission(&p1.algebra, report))
        }
        Isometry::Witness(w) => {
            let doc = load(&w.base)?;
            let g1 = gdext_data(&doc, &w.base, &w.d1, w.x1.as_deref(), w.lambda1.as_deref())?;
            let g2 = gdext_data(&doc, &w.base, &w.d2, w.x2.as_deref(), w.lambda2.as_deref())?;
            let dims = g1.base.dims();
            let witness = IsometryWitness {
                s: match &w.s {
                    Some(name) => named_map(&doc, name)?.clone(),
                    None => GradedMap::identity(dims),
                },
                z0: parse_vector("z0", w.z0.as_deref(), dims.total())?,
                alpha: parse_scalar("alpha", &w.alpha)?,
            };
            let mut report = CheckReport::new();
            report.merge_prefixed("conditions", check_isometry_conditions(&witness, &g1, &g2)?);
            let (p1, r1) = gdext(&g1, GdextConvention::Corrected)?;
            let (p2, r2) = gdext(&g2, GdextConvention::Corrected)?;
            report.merge_prefixed("first", r1);
            report.merge_prefixed("second", r2);
            let psi = build_isometry(&witness, &g1, &g2)?;
            report.merge_prefixed("map", verify_isometry(&psi, &p1, &p2)?);
            let mut e = report_emission(&p1.algebra, report);
            e.structured["psi"] = matrix_json(&psi.matrix);
            Ok(e)
        }
    }
}

fn cmd_intertwiner(file: &Path) -> CliResult<Emission> {
    let doc = load(file)?;
    let a = &doc.algebra;
    let (r1, r2) = (adjoint(a)?, coadjoint(a)?);
    let found = intertwiner_space(&r1, &r2)?;
    let mut report = CheckReport::new();
    match &found.witness {
        Some(_) => report.pass("invertible_intertwiner"),
        None => report.push(
            "invertible_intertwiner",
            false,
            None,
            Some(format!(
                "no invertible element found in a space of dimension {}; inconclusive",
                found.basis.len()
            )),
        ),
    };
    if let Some(form) = &doc.form {
        let phi = GradedMap::new(a.dims(), a.dims(), EVEN, form.gram.transpose())?;
        let defect = intertwiner_defect(&r1, &r2, &phi);
        if defect.iter().all(num_traits::Zero::is_zero) {
            report.pass("flat_map_intertwines");
        } else {
            report.fail("flat_map_intertwines", Vec::new(), defect);
        }
        if phi.matrix.rank() == a.dim() {
            report.pass("flat_map_invertible");
        } else {
            report.push("flat_map_invertible", false, None, Some("the form is degenerate".into()));
        }
    }
    let mut e = report_emission(a, report);
    e.human = format!(
        "{}intertwiner space dimension {}\n{}",
        header(a),
        found.basis.len(),
        &e.human[header(a).len()..]
    );
    e.structured["dimension"] = json!(found.basis.len());
    if let Some(w) = &found.witness {
        e.structured["witness"] = matrix_json(&w.matrix);
    }
    Ok(e)
}
