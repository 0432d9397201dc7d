//! Command-line interface: problem-file subcommands, deterministic JSON
//! reports, and the bundled expectation-checked corpus.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::germ::MapGerm;
use crate::invariants::{
    contact_codim, milnor_hypersurface, milnor_icis, tjurina_hypersurface, tjurina_icis,
    validate_icis, MilnorResult,
};
use crate::jet::ae_codim_jet;
use crate::mond::{
    conductor_lambda, fitting_first, image_equation, jacobian_module_with,
    mond_report_with_certificate, MondProblem,
};
use crate::parse::{parse_problem, ProblemFile};
use crate::report::{assemble, hilbert_result_value, mond_result_value};
use crate::stdbasis::{hilbert_samuel, Dim, Ideal};

#[derive(Debug, Parser)]
#[command(name = "germlab", version, about = "Singularity invariants of map germs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Standard basis of the ideal in `icis:`
    Std(RunArgs),
    /// Weak normal forms of the `map:` polynomials against `icis:`
    Nf(RunArgs),
    /// Vector-space dimension of the quotient by `icis:`
    Dim(RunArgs),
    /// Milnor number of the germ cut out by `icis:`
    Mu(RunArgs),
    /// Tjurina number of the germ cut out by `icis:`
    Tau(RunArgs),
    /// Contact codimension and normal space of the map (smooth source)
    Kcodim(RunArgs),
    /// Reduced image equation of the map
    Image(RunArgs),
    /// Conductor element of the image
    Conductor(RunArgs),
    /// First Fitting ideal of the image
    Fitting1(RunArgs),
    /// Dimension of the Jacobian module of the image
    Mg(RunArgs),
    /// Full report: module, torsion, codimension, image Milnor number, verdict
    Mond(RunArgs),
    /// Samuel function of the quotient by `icis:` at the maximal ideal
    Hilbert(RunArgs),
    /// Left-right codimension by the jet model (smooth source)
    OracleAe(RunArgs),
    /// Run the bundled corpus (or a directory of problem files) against the
    /// expectations embedded in the files
    Corpus(CorpusArgs),
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Problem file
    pub file: PathBuf,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub bound: Option<i64>,
    #[arg(long)]
    pub retries: Option<u32>,
    #[arg(long)]
    pub tmax: Option<usize>,
    #[arg(long)]
    pub jet: Option<u32>,
    /// Emit the deterministic JSON report on stdout
    #[arg(long)]
    pub json: bool,
    /// Assert that polynomial elimination is faithful to the analytic germ
    #[arg(long = "germ-faithful")]
    pub germ_faithful: bool,
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    /// Directory of .germ files; the bundled corpus when omitted
    pub dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy)]
pub struct Resolved {
    pub seed: u64,
    pub bound: i64,
    pub retries: u32,
    pub tmax: usize,
    pub jet: u32,
    pub germ_faithful: bool,
}

/// Option precedence: command line, then the problem file, then the
/// GERMLAB_SEED environment variable (seed only), then defaults.
fn resolve(args: &RunArgs, file: &ProblemFile) -> Resolved {
    let env_seed = std::env::var("GERMLAB_SEED").ok().and_then(|s| s.parse().ok());
    Resolved {
        seed: args.seed.or(file.options.seed).or(env_seed).unwrap_or(0),
        bound: args.bound.or(file.options.bound).unwrap_or(5),
        retries: args.retries.or(file.options.retries).unwrap_or(10),
        tmax: args.tmax.or(file.options.tmax).unwrap_or(12),
        jet: args.jet.or(file.options.jet).unwrap_or(6),
        germ_faithful: args.germ_faithful || file.options.germ_faithful,
    }
}

/// Everything a subcommand produces: human lines, a key=value map for corpus
/// expectations, machine output, warnings.
pub struct Outcome {
    pub human: Vec<String>,
    pub values: BTreeMap<String, String>,
    pub result: Value,
    pub warnings: Vec<String>,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome {
            human: Vec::new(),
            values: BTreeMap::new(),
            result: Value::Null,
            warnings: Vec::new(),
        }
    }

    fn put(&mut self, key: &str, value: impl ToString) {
        self.values.insert(key.to_string(), value.to_string());
    }
}

fn dim_str(d: Dim) -> String {
    d.to_string()
}

/// Execute one subcommand against a parsed problem file.
pub fn execute(sub: &str, file: &ProblemFile, opts: Resolved) -> Result<Outcome> {
    let mut out = Outcome::new();
    match sub {
        "std" => {
            let ideal = Ideal::new(&file.source, file.icis.clone())?;
            let basis = ideal.std_basis();
            out.put("basis_len", basis.len());
            for (i, b) in basis.iter().enumerate() {
                out.human.push(format!("basis[{}] = {}", i, b));
            }
            out.result = json!({
                "basis": basis.iter().map(|b| b.to_string()).collect::<Vec<_>>()
            });
        }
        "nf" => {
            if file.map.is_empty() {
                return Err(Error::Arity(
                    "`nf` reduces the `map:` polynomials; the file has none".into(),
                ));
            }
            let ideal = Ideal::new(&file.source, file.icis.clone())?;
            let mut nfs = Vec::new();
            for (i, p) in file.map.iter().enumerate() {
                let n = ideal.normal_form(p)?;
                out.human.push(format!("nf[{}] = {}", i, n));
                out.put(&format!("nf{}", i), &n);
                nfs.push(n.to_string());
            }
            out.result = json!({ "normal_forms": nfs });
        }
        "dim" => {
            let ideal = Ideal::new(&file.source, file.icis.clone())?;
            let d = ideal.vs_dimension()?;
            out.human.push(format!("dim = {}", dim_str(d)));
            out.put("dim", dim_str(d));
            out.result = match d {
                Dim::Finite(n) => json!({ "dim": n }),
                Dim::Infinite => json!({ "dim": "infinite" }),
            };
        }
        "mu" => {
            let x = validate_icis(&file.source, file.icis.clone())?;
            if !x.is_icis() {
                return Err(Error::NotApplicable(
                    "the equations do not cut out an isolated complete intersection".into(),
                ));
            }
            let m: MilnorResult = if x.equations().len() == 1 {
                milnor_hypersurface(&x.equations()[0])?
            } else {
                milnor_icis(&x, opts.seed, opts.bound, opts.retries)?
            };
            out.human.push(format!("mu = {}", m.mu));
            out.put("mu", m.mu);
            let mut steps = Vec::new();
            for s in &m.chain {
                out.human.push(format!(
                    "  prefix {}: quotient dim {}, mu {}",
                    s.prefix_len, s.quotient_dim, s.prefix_mu
                ));
                out.put(&format!("step{}_dim", s.prefix_len), s.quotient_dim);
                out.put(&format!("step{}_mu", s.prefix_len), s.prefix_mu);
                steps.push(json!({
                    "prefix": s.prefix_len,
                    "quotient_dim": s.quotient_dim,
                    "mu": s.prefix_mu,
                }));
            }
            out.result = json!({ "mu": m.mu, "chain": steps, "seed": m.seed });
        }
        "tau" => {
            let x = validate_icis(&file.source, file.icis.clone())?;
            if !x.is_icis() {
                return Err(Error::NotApplicable(
                    "the equations do not cut out an isolated complete intersection".into(),
                ));
            }
            let tau = if x.equations().len() == 1 {
                tjurina_hypersurface(&x.equations()[0])?
            } else {
                tjurina_icis(&x)?
            };
            out.human.push(format!("tau = {}", tau));
            out.put("tau", tau);
            out.result = json!({ "tau": tau });
        }
        "kcodim" => {
            let f = smooth_map(file)?;
            let (dim, basis) = contact_codim(&f)?;
            out.human.push(format!("kcodim = {}", dim));
            for b in &basis {
                out.human.push(format!("  normal space: {}", b));
            }
            out.put("kcodim", dim);
            out.result = json!({
                "kcodim": dim,
                "normal_space": basis.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            });
        }
        "image" => {
            let p = problem(file)?;
            push_faithfulness_warning(&p, opts, &mut out);
            let (g, ghat) = image_equation(&p)?;
            out.human.push(format!("g = {}", g));
            out.human.push(format!("ghat = {}", ghat));
            out.put("g", &g);
            out.result = json!({ "g": g.to_string(), "ghat": ghat.to_string() });
        }
        "conductor" => {
            let p = problem(file)?;
            push_faithfulness_warning(&p, opts, &mut out);
            let (_, ghat) = image_equation(&p)?;
            let lambda = conductor_lambda(&p, &ghat)?;
            out.human.push(format!("lambda = {}", lambda));
            out.put("lambda", &lambda);
            out.result = json!({ "lambda": lambda.to_string() });
        }
        "fitting1" => {
            let p = problem(file)?;
            push_faithfulness_warning(&p, opts, &mut out);
            let (_, ghat) = image_equation(&p)?;
            let lambda = conductor_lambda(&p, &ghat)?;
            let (fit, warn) = fitting_first(&p, &lambda)?;
            let gens: Vec<String> = fit.gens().iter().map(|g| g.to_string()).collect();
            out.human.push(format!("fitting ideal: {}", gens.join(", ")));
            out.put("fitting_gens", gens.len());
            if let Some(w) = warn {
                out.warnings.push(w);
            }
            out.result = json!({ "generators": gens });
        }
        "mg" => {
            let p = problem(file)?;
            push_faithfulness_warning(&p, opts, &mut out);
            let (_, ghat) = image_equation(&p)?;
            let m = jacobian_module_with(&p, &ghat)?;
            out.human.push(format!("dim M(g) = {}", m.dim));
            out.put("mg", m.dim);
            out.result = json!({ "dim_mg": m.dim });
        }
        "mond" => {
            let p = problem(file)?;
            let rep = mond_report_with_certificate(&p, opts.germ_faithful, opts.tmax)?;
            out.human.push(format!("n = {}, k = {}", rep.n, rep.k));
            out.human.push(format!("g = {}", rep.g));
            out.human.push(format!("dim M(g) = {}", rep.dim_mg));
            out.human.push(format!("dim K(g) = {}", rep.dim_kg));
            out.human.push(format!("codim = {}", rep.codim_ae));
            match rep.mu_image {
                Some(v) => out.human.push(format!("image Milnor number = {}", v)),
                None => out.human.push("image Milnor number withheld".to_string()),
            }
            if let Some(c) = &rep.cm_certificate {
                out.human.push(format!(
                    "multiplicity certificate: e = {}, dim M(g) = {}, {}",
                    c.multiplicity,
                    c.dim_mg,
                    if c.passes { "pass" } else { "fail" }
                ));
                out.put("e", c.multiplicity);
                out.put("cm", c.passes);
            }
            out.human.push(format!("verdict: {}", rep.verdict));
            out.put("mg", rep.dim_mg);
            out.put("kg", rep.dim_kg);
            out.put("codim", rep.codim_ae);
            out.put(
                "mu_i",
                rep.mu_image.map(|v| v.to_string()).unwrap_or_else(|| "none".into()),
            );
            out.put("verdict", rep.verdict);
            out.put("wh", rep.weighted_homogeneous);
            out.warnings.extend(rep.warnings.iter().cloned());
            out.result = mond_result_value(&rep);
        }
        "hilbert" => {
            let gens: Vec<crate::vecpoly::VecPoly> = file
                .icis
                .iter()
                .map(|p| crate::vecpoly::VecPoly::scaled_unit(1, 0, p.clone()))
                .collect();
            let q = Ideal::new(&file.source, crate::poly::maximal_ideal_gens(&file.source))?;
            let h = hilbert_samuel(1, &gens, &q, opts.tmax)?;
            for &(t, v) in &h.values {
                out.human.push(format!("chi({}) = {}", t, v));
            }
            out.human.push(format!("dimension = {}", h.dimension));
            out.human.push(format!("multiplicity = {}", h.multiplicity));
            out.put("hdim", h.dimension);
            out.put("e", h.multiplicity);
            out.result = hilbert_result_value(&h);
        }
        "oracle-ae" => {
            let f = smooth_map(file)?;
            let d = ae_codim_jet(&f, opts.jet)?;
            out.human.push(format!("ae codim (jet order {}) = {}", opts.jet, d));
            out.put("ae", d);
            out.result = json!({ "ae_codim": d, "jet_order": opts.jet });
        }
        other => {
            return Err(Error::Arity(format!("unknown subcommand `{}`", other)));
        }
    }
    Ok(out)
}

fn smooth_map(file: &ProblemFile) -> Result<MapGerm> {
    if !file.icis.is_empty() {
        return Err(Error::NotApplicable(
            "this operation needs a smooth source; remove the `icis:` equations".into(),
        ));
    }
    file.map_germ()
}

fn problem(file: &ProblemFile) -> Result<MondProblem> {
    let x = validate_icis(&file.source, file.icis.clone())?;
    let f = file.map_germ()?;
    MondProblem::new(x, f)
}

fn push_faithfulness_warning(p: &MondProblem, opts: Resolved, out: &mut Outcome) {
    if opts.germ_faithful {
        return;
    }
    let all_wh = p
        .map()
        .components()
        .iter()
        .chain(p.source_germ().equations())
        .all(|q| crate::linalg::weighted_homogeneous_weights(q).is_some());
    if !all_wh {
        out.warnings.push(
            "input is not quasi-homogeneous and germ-faithfulness was not asserted: the \
             polynomial image computation may differ from the analytic germ"
                .to_string(),
        );
    }
}

// ---------------------------------------------------------------------------
// Corpus

pub const BUNDLED_CORPUS: &[(&str, &str)] = &[
    ("legreuel_mu.germ", include_str!("../corpus/legreuel_mu.germ")),
    ("pair_tau.germ", include_str!("../corpus/pair_tau.germ")),
    ("squares_kcodim.germ", include_str!("../corpus/squares_kcodim.germ")),
    ("crosscap_image.germ", include_str!("../corpus/crosscap_image.germ")),
    ("crosscap_conductor.germ", include_str!("../corpus/crosscap_conductor.germ")),
    ("crosscap_mond.germ", include_str!("../corpus/crosscap_mond.germ")),
    ("s1_mond.germ", include_str!("../corpus/s1_mond.germ")),
    ("final_mond.germ", include_str!("../corpus/final_mond.germ")),
    ("cusp_oracle.germ", include_str!("../corpus/cusp_oracle.germ")),
    ("cusp_image.germ", include_str!("../corpus/cusp_image.germ")),
    ("cuspcurve_mu.germ", include_str!("../corpus/cuspcurve_mu.germ")),
    ("cuspcurve_tau.germ", include_str!("../corpus/cuspcurve_tau.germ")),
    ("e8_mu.germ", include_str!("../corpus/e8_mu.germ")),
    ("nonqh_tau.germ", include_str!("../corpus/nonqh_tau.germ")),
    ("smooth_mu.germ", include_str!("../corpus/smooth_mu.germ")),
    ("cone_dim.germ", include_str!("../corpus/cone_dim.germ")),
    ("curveicis_std.germ", include_str!("../corpus/curveicis_std.germ")),
    ("hilbert_cusp.germ", include_str!("../corpus/hilbert_cusp.germ")),
];

pub struct CorpusReport {
    pub lines: Vec<String>,
    pub failures: usize,
    pub total: usize,
}

/// Run every corpus file and check its embedded expectations.
pub fn corpus_run(files: &[(String, String)]) -> CorpusReport {
    let mut lines = Vec::new();
    let mut failures = 0;
    let mut total = 0;
    for (name, text) in files {
        total += 1;
        match corpus_one(text) {
            Ok(diffs) if diffs.is_empty() => lines.push(format!("PASS {}", name)),
            Ok(diffs) => {
                failures += 1;
                lines.push(format!("FAIL {}: {}", name, diffs.join("; ")));
            }
            Err(e) => {
                failures += 1;
                lines.push(format!("FAIL {}: {}", name, e));
            }
        }
    }
    CorpusReport { lines, failures, total }
}

fn corpus_one(text: &str) -> Result<Vec<String>> {
    let file = parse_problem(text)?;
    let sub = file
        .run
        .clone()
        .ok_or_else(|| Error::Arity("corpus file has no `# run` directive".into()))?;
    let args = RunArgs {
        file: PathBuf::new(),
        seed: None,
        bound: None,
        retries: None,
        tmax: None,
        jet: None,
        json: false,
        germ_faithful: false,
    };
    let opts = resolve(&args, &file);
    let out = execute(&sub, &file, opts)?;
    let mut diffs = Vec::new();
    for (key, expect) in &file.expects {
        match out.values.get(key) {
            Some(actual) if actual == expect => {}
            Some(actual) => diffs.push(format!("{}: expected {}, got {}", key, expect, actual)),
            None => diffs.push(format!("{}: expected {}, key missing", key, expect)),
        }
    }
    Ok(diffs)
}

/// Top-level entry used by the binary; returns the process exit code.
pub fn main_with(cli: Cli) -> i32 {
    match cli.command {
        Command::Corpus(args) => {
            let files: Vec<(String, String)> = match &args.dir {
                None => BUNDLED_CORPUS
                    .iter()
                    .map(|(n, t)| (n.to_string(), t.to_string()))
                    .collect(),
                Some(dir) => {
                    let mut files = Vec::new();
                    let entries = match std::fs::read_dir(dir) {
                        Ok(e) => e,
                        Err(e) => {
                            eprintln!("error: cannot read corpus directory: {}", e);
                            return 1;
                        }
                    };
                    let mut paths: Vec<PathBuf> = entries
                        .filter_map(|e| e.ok().map(|e| e.path()))
                        .filter(|p| p.extension().map(|x| x == "germ").unwrap_or(false))
                        .collect();
                    paths.sort();
                    for p in paths {
                        match std::fs::read_to_string(&p) {
                            Ok(t) => files.push((
                                p.file_name().unwrap().to_string_lossy().to_string(),
                                t,
                            )),
                            Err(e) => {
                                eprintln!("error: cannot read {}: {}", p.display(), e);
                                return 1;
                            }
                        }
                    }
                    files
                }
            };
            if files.is_empty() {
                eprintln!("error: the corpus directory contains no .germ files");
                return 1;
            }
            let report = corpus_run(&files);
            for line in &report.lines {
                println!("{}", line);
            }
            println!(
                "{} of {} corpus files pass",
                report.total - report.failures,
                report.total
            );
            if report.failures > 0 {
                1
            } else {
                0
            }
        }
        other => {
            let (sub, args) = match &other {
                Command::Std(a) => ("std", a),
                Command::Nf(a) => ("nf", a),
                Command::Dim(a) => ("dim", a),
                Command::Mu(a) => ("mu", a),
                Command::Tau(a) => ("tau", a),
                Command::Kcodim(a) => ("kcodim", a),
                Command::Image(a) => ("image", a),
                Command::Conductor(a) => ("conductor", a),
                Command::Fitting1(a) => ("fitting1", a),
                Command::Mg(a) => ("mg", a),
                Command::Mond(a) => ("mond", a),
                Command::Hilbert(a) => ("hilbert", a),
                Command::OracleAe(a) => ("oracle-ae", a),
                Command::Corpus(_) => unreachable!(),
            };
            let text = match std::fs::read_to_string(&args.file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {}", args.file.display(), e);
                    return 1;
                }
            };
            let started = Instant::now();
            let file = match parse_problem(&text) {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: {}", e);
                    return e.exit_code();
                }
            };
            let opts = resolve(args, &file);
            match execute(sub, &file, opts) {
                Ok(out) => {
                    if args.json {
                        let rep =
                            assemble(sub, &text, opts.seed, out.result, out.warnings.clone());
                        println!("{}", rep.to_string_pretty());
                    } else {
                        for line in &out.human {
                            println!("{}", line);
                        }
                        eprintln!("({} in {:?})", sub, started.elapsed());
                    }
                    for w in &out.warnings {
                        eprintln!("warning: {}", w);
                    }
                    0
                }
                Err(e) => {
                    eprintln!("error: {}", e);
                    e.exit_code()
                }
            }
        }
    }
}
