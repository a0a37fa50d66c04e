//! Command-line front end. `run` returns the exit code and the text for standard output.

use std::path::Path;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{adjoint, catalog_algebra, catalog_list, catalog_module, AlgebraSpec, ModuleActionSpec};
use crate::bulk::run_seed_matrix;
use crate::cohomology::cohomology;
use crate::error::{Error, Result};
use crate::io::{read_document, read_root_datum, Document};
use crate::prolong::{
    cartan_prolong, check_transitivity, gl_pair, grading_from_root, ker_t_root_relations, loop_structure_functions,
    spencer_h2, sym_spencer_sh12, verify_prolong_tensor, GradedLie, RootDatum,
};
use crate::subspaces::{assoc_named_space, lie_named_space, ASSOC_SPACES, LIE_SPACES};
use crate::verify::{verify, Instance, InstanceNames, TheoremId, VerificationReport, SCHEMA};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "curcoh", version, about = "Exact cohomology of current Lie algebras")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

/// Algebra and module inputs: catalog names or paths to JSON documents.
#[derive(Debug, Clone, clap::Args)]
pub struct LieArgs {
    #[arg(long)]
    pub lie: Option<String>,
    /// Module name (`adjoint`, `trivial(n)`) or a module file; a file fixes the Lie algebra.
    #[arg(long, default_value = "adjoint")]
    pub module: String,
}

#[derive(Debug, Clone, clap::Args)]
pub struct AssocArgs {
    #[arg(long, default_value = "K")]
    pub assoc: String,
    #[arg(long, default_value = "regular")]
    pub coeff: String,
}

/// A length-one grading of `sl(rank+1)` by a simple root, or of a root datum file.
#[derive(Debug, Clone, clap::Args)]
pub struct GradingArgs {
    #[arg(long = "type", default_value = "A")]
    pub kind: String,
    #[arg(long)]
    pub rank: Option<usize>,
    #[arg(long = "root-datum")]
    pub root_datum: Option<String>,
    /// Simple root index, starting at 1.
    #[arg(long)]
    pub beta: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and check the defining identities of an algebra or module.
    Validate { input: String },
    /// `H^n(L, M)` for n <= 3.
    Cohomology {
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        lie: LieArgs,
    },
    /// The current algebra `L ⊗ A`, optionally with `H^n(L⊗A, M⊗V)`.
    Current {
        #[command(flatten)]
        lie: LieArgs,
        #[command(flatten)]
        assoc: AssocArgs,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Dual-path verification of one theorem, or the whole reference matrix.
    Verify {
        #[arg(long, required_unless_present = "seed_matrix")]
        theorem: Option<String>,
        #[command(flatten)]
        lie: LieArgs,
        #[command(flatten)]
        assoc: AssocArgs,
        #[arg(long)]
        seed_matrix: bool,
    },
    /// Dimension of a named space on the Lie side or the algebra side.
    Subspace {
        #[arg(long)]
        name: String,
        #[command(flatten)]
        lie: LieArgs,
        #[command(flatten)]
        assoc: AssocArgs,
    },
    /// Cartan prolongation of `(K^n, gl(n))` or of a module file, or a root grading.
    Prolong {
        #[arg(long)]
        gl: Option<usize>,
        #[arg(long)]
        pair: Option<String>,
        #[command(flatten)]
        grading: GradingArgs,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
        /// Also compare with the prolongation of the pair tensored with this algebra.
        #[arg(long)]
        assoc: Option<String>,
    },
    /// Spencer cohomology `H^{k,2}`, `SH^{1,2}` and `Ker T`.
    Spencer {
        #[arg(long)]
        gl: Option<usize>,
        #[command(flatten)]
        grading: GradingArgs,
    },
    /// Structure functions of the loop-algebra analogue of a grading.
    LoopSf {
        #[command(flatten)]
        grading: GradingArgs,
        #[arg(long, default_value = "tp2")]
        assoc: String,
    },
    /// Names understood by `--lie`, `--module`, `--assoc` and `--coeff`.
    CatalogList,
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn ok(stdout: String) -> Outcome {
    Outcome { code: EXIT_OK, stdout, stderr: String::new() }
}

fn looks_like_file(s: &str) -> bool {
    s.ends_with(".json") || s.ends_with(".alg") || s.contains('/') || Path::new(s).is_file()
}

fn load_algebra(s: &str) -> Result<AlgebraSpec> {
    if looks_like_file(s) {
        match read_document(Path::new(s))? {
            Document::Algebra(a) => Ok(a),
            Document::Module(_) => Err(Error::Parse(format!("{s}: expected an algebra document, found a module"))),
        }
    } else {
        catalog_algebra(s)
    }
}

fn load_module(g: Option<&str>, m: &str) -> Result<ModuleActionSpec> {
    if looks_like_file(m) {
        return match read_document(Path::new(m))? {
            Document::Module(m) => Ok(m),
            Document::Algebra(_) => Err(Error::Parse(format!("{m}: expected a module document, found an algebra"))),
        };
    }
    let g = g.ok_or_else(|| Error::Parse("missing --lie (or a module file)".into()))?;
    catalog_module(m, &Arc::new(load_algebra(g)?))
}

fn instance(lie: &LieArgs, assoc: &AssocArgs) -> Result<Instance> {
    if let Some(l) = lie.lie.as_deref().filter(|l| ![*l, &lie.module, &assoc.assoc].into_iter().any(looks_like_file)) {
        return Instance::catalog(l, &lie.module, &assoc.assoc, &assoc.coeff);
    }
    let m = load_module(lie.lie.as_deref(), &lie.module)?;
    let a = Arc::new(load_algebra(&assoc.assoc)?);
    let v = load_module(None, &assoc.coeff).or_else(|_| catalog_module(&assoc.coeff, &a))?;
    let mut inst = Instance::new(m.algebra.clone(), m, a, v);
    inst.names = InstanceNames {
        lie: lie.lie.clone().unwrap_or_else(|| inst.l.name.clone()),
        module: Some(lie.module.clone()),
        assoc: assoc.assoc.clone(),
        coeff: Some(assoc.coeff.clone()),
    };
    Ok(inst)
}

fn grading(args: &GradingArgs) -> Result<(RootDatum, usize)> {
    let rd = match (&args.root_datum, args.rank) {
        (Some(path), _) => read_root_datum(Path::new(path))?,
        (None, Some(rank)) => RootDatum::classical(&args.kind, rank)?,
        (None, None) => return Err(Error::Parse("missing --rank or --root-datum".into())),
    };
    let beta = args.beta.ok_or_else(|| Error::Parse("missing --beta".into()))?;
    if beta == 0 {
        return Err(Error::Parse("--beta counts from 1".into()));
    }
    Ok((rd, beta - 1))
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn report_table(r: &VerificationReport) -> String {
    let i = &r.instance;
    let mut out = format!(
        "{} on {}/{} ⊗ {}/{}\n",
        r.theorem_id,
        i.lie,
        i.module.as_deref().unwrap_or("-"),
        i.assoc,
        i.coeff.as_deref().unwrap_or("-")
    );
    for s in &r.summand_dims {
        out.push_str(&format!("  {:<52} {:>4} x {:<4} = {}\n", s.label, s.left, s.right, s.dim));
    }
    out.push_str(&format!("  formula {}  direct {}\n", r.formula_dim, r.direct_dim));
    for c in &r.checks {
        out.push_str(&format!("  [{}] {}{}\n", if c.holds { "ok" } else { "FAIL" }, c.name, if c.required { "" } else { " (diagnostic)" }));
    }
    out.push_str(&format!("  match: {}\n", r.matched));
    out
}

#[derive(Serialize)]
struct ValidateOut {
    schema: u32,
    name: String,
    kind: String,
    dim: usize,
    violations: Vec<String>,
}

#[derive(Serialize)]
struct CohomologyOut {
    schema: u32,
    algebra: String,
    module: String,
    degree: usize,
    cocycles: usize,
    coboundaries: usize,
    dim: usize,
}

#[derive(Serialize)]
struct CurrentOut {
    schema: u32,
    lie: String,
    assoc: String,
    dim: usize,
    derived_dim: usize,
    center_dim: usize,
    cohomology: Option<CohomologyOut>,
}

#[derive(Serialize)]
struct SubspaceOut {
    schema: u32,
    name: String,
    ambient: String,
    ambient_dim: usize,
    dim: usize,
    quotient: bool,
}

#[derive(Serialize)]
struct ProlongOut {
    schema: u32,
    name: String,
    dims: Vec<(i64, usize)>,
    complete: bool,
    transitive: Vec<(i64, bool)>,
    warnings: Vec<String>,
    tensor: Option<crate::prolong::ProlongTensorReport>,
}

#[derive(Serialize)]
struct SpencerOut {
    schema: u32,
    name: String,
    h_k2: Vec<(usize, usize)>,
    sh12: usize,
    ker_t: usize,
    ker_t_root_relations: Option<usize>,
    #[serde(rename = "match")]
    matched: bool,
}

fn cohomology_out(degree: usize, g: &AlgebraSpec, m: &ModuleActionSpec) -> Result<CohomologyOut> {
    let h = cohomology(degree, g, m)?;
    Ok(CohomologyOut {
        schema: SCHEMA,
        algebra: g.name.clone(),
        module: m.name.clone(),
        degree,
        cocycles: h.cocycles.dim(),
        coboundaries: h.coboundaries.dim(),
        dim: h.dim,
    })
}

fn cohomology_table(c: &CohomologyOut) -> String {
    format!(
        "H^{}({}, {}): dim {} (cocycles {}, coboundaries {})\n",
        c.degree, c.algebra, c.module, c.dim, c.cocycles, c.coboundaries
    )
}

fn graded_for(gl: Option<usize>, pair: Option<&str>, args: &GradingArgs, max_degree: usize) -> Result<GradedLie> {
    match (gl, pair) {
        (Some(n), _) => cartan_prolong(&gl_pair(n)?, max_degree),
        (None, Some(p)) => cartan_prolong(&load_module(None, p)?, max_degree),
        (None, None) => {
            let (rd, beta) = grading(args)?;
            Ok(grading_from_root(&rd, beta)?.graded)
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let fmt = cli.format;
    match &cli.command {
        Command::Validate { input } => {
            let (name, kind, dim, violations) = match read_document(Path::new(input))? {
                Document::Algebra(a) => (a.name.clone(), a.kind.to_string(), a.dim(), a.validate()),
                Document::Module(m) => (m.name.clone(), "module".to_string(), m.dim(), m.validate()),
            };
            let out = ValidateOut { schema: SCHEMA, name, kind, dim, violations: violations.iter().map(|v| v.to_string()).collect() };
            let text = match fmt {
                Format::Json => json(&out),
                Format::Table => {
                    let mut s = format!("{} ({}, dim {}): ", out.name, out.kind, out.dim);
                    if out.violations.is_empty() {
                        s.push_str("valid\n");
                    } else {
                        s.push_str(&format!("{} violations\n", out.violations.len()));
                        for v in &out.violations {
                            s.push_str(&format!("  {v}\n"));
                        }
                    }
                    s
                }
            };
            let code = if out.violations.is_empty() { EXIT_OK } else { EXIT_INPUT };
            Ok(Outcome { code, stdout: text, stderr: String::new() })
        }
        Command::Cohomology { degree, lie } => {
            let m = load_module(lie.lie.as_deref(), &lie.module)?;
            let c = cohomology_out(*degree, &m.algebra, &m)?;
            Ok(ok(match fmt {
                Format::Json => json(&c),
                Format::Table => cohomology_table(&c),
            }))
        }
        Command::Current { lie, assoc, degree } => {
            let inst = instance(lie, assoc)?;
            let (g, mv) = inst.current()?;
            let cohomology = degree.map(|d| cohomology_out(d, &g, &mv)).transpose()?;
            let center = crate::cohomology::invariants(&g, &adjoint(&g))?.dim();
            let out = CurrentOut {
                schema: SCHEMA,
                lie: inst.names.lie.clone(),
                assoc: inst.names.assoc.clone(),
                dim: g.dim(),
                derived_dim: g.derived().dim(),
                center_dim: center,
                cohomology,
            };
            Ok(ok(match fmt {
                Format::Json => json(&out),
                Format::Table => {
                    let mut s = format!("{} ⊗ {}: dim {}, [g,g] dim {}, center dim {}\n", out.lie, out.assoc, out.dim, out.derived_dim, out.center_dim);
                    if let Some(c) = &out.cohomology {
                        s.push_str(&cohomology_table(c));
                    }
                    s
                }
            }))
        }
        Command::Verify { theorem, lie, assoc, seed_matrix } => {
            if *seed_matrix {
                let r = run_seed_matrix()?;
                let code = if r.failed == 0 { EXIT_OK } else { EXIT_MISMATCH };
                let text = match fmt {
                    Format::Json => json(&r),
                    Format::Table => r.table(),
                };
                return Ok(Outcome { code, stdout: text, stderr: String::new() });
            }
            let t: TheoremId = theorem.as_deref().expect("required by clap").parse()?;
            let r = verify(t, &instance(lie, assoc)?)?;
            let code = if r.matched { EXIT_OK } else { EXIT_MISMATCH };
            let text = match fmt {
                Format::Json => json(&r),
                Format::Table => report_table(&r),
            };
            Ok(Outcome { code, stdout: text, stderr: String::new() })
        }
        Command::Subspace { name, lie, assoc } => {
            let space = if LIE_SPACES.contains(&name.as_str()) {
                let m = load_module(lie.lie.as_deref(), &lie.module)?;
                lie_named_space(name, &m.algebra, &m)?
            } else if ASSOC_SPACES.contains(&name.as_str()) {
                let a = Arc::new(load_algebra(&assoc.assoc)?);
                let v = catalog_module(&assoc.coeff, &a)?;
                assoc_named_space(name, &a, &v)?
            } else {
                return Err(Error::UnknownName(format!(
                    "space {name}; known: {}, {}",
                    LIE_SPACES.join(" "),
                    ASSOC_SPACES.join(" ")
                )));
            };
            let out = SubspaceOut {
                schema: SCHEMA,
                name: space.name.clone(),
                ambient: space.ambient.clone(),
                ambient_dim: space.space.ambient_dim(),
                dim: space.dim,
                quotient: space.denominator.is_some(),
            };
            Ok(ok(match fmt {
                Format::Json => json(&out),
                Format::Table => format!(
                    "{}{} in {} (dim {}): dim {}\n",
                    out.name,
                    if out.quotient { " (quotient)" } else { "" },
                    out.ambient,
                    out.ambient_dim,
                    out.dim
                ),
            }))
        }
        Command::Prolong { gl, pair, grading: ga, max_degree, assoc } => {
            let g = graded_for(*gl, pair.as_deref(), ga, *max_degree)?;
            let tensor = match (assoc, gl, pair) {
                (Some(a), Some(n), _) => Some(verify_prolong_tensor(&gl_pair(*n)?, &load_algebra(a)?, *max_degree)?),
                (Some(a), None, Some(p)) => Some(verify_prolong_tensor(&load_module(None, p)?, &load_algebra(a)?, *max_degree)?),
                (Some(_), None, None) => return Err(Error::Parse("--assoc needs --gl or --pair".into())),
                (None, _, _) => None,
            };
            let out = ProlongOut {
                schema: SCHEMA,
                name: g.name.clone(),
                dims: g.dims.iter().enumerate().map(|(i, d)| (i as i64 - 1, *d)).collect(),
                complete: g.complete,
                transitive: check_transitivity(&g),
                warnings: g.warnings.clone(),
                tensor,
            };
            let matched = out.transitive.iter().all(|t| t.1) && out.tensor.as_ref().is_none_or(|t| t.matched);
            let text = match fmt {
                Format::Json => json(&out),
                Format::Table => {
                    let mut s = format!("{}{}\n", out.name, if out.complete { " (complete)" } else { "" });
                    for (d, n) in &out.dims {
                        s.push_str(&format!("  g_{d}: dim {n}\n"));
                    }
                    for (d, t) in &out.transitive {
                        s.push_str(&format!("  transitive at degree {d}: {t}\n"));
                    }
                    for w in &out.warnings {
                        s.push_str(&format!("  warning: {w}\n"));
                    }
                    if let Some(t) = &out.tensor {
                        s.push_str(&format!("  tensored with {}:\n", t.assoc));
                        for d in &t.degrees {
                            s.push_str(&format!("    degree {}: {} x dim A vs {}\n", d.degree, d.base, d.tensor));
                        }
                        s.push_str(&format!("  match: {}\n", t.matched));
                    }
                    s
                }
            };
            Ok(Outcome { code: if matched { EXIT_OK } else { EXIT_MISMATCH }, stdout: text, stderr: String::new() })
        }
        Command::Spencer { gl, grading: ga } => {
            let (g, rel) = match gl {
                Some(n) => (cartan_prolong(&gl_pair(*n)?, 1)?, None),
                None => {
                    let (rd, beta) = grading(ga)?;
                    (grading_from_root(&rd, beta)?.graded, Some(ker_t_root_relations(&rd, beta)?))
                }
            };
            let ks = if g.complete { 1..=(g.top() as usize + 2).max(1) } else { 1..=1 };
            let h_k2 = ks.map(|k| spencer_h2(&g, k).map(|s| (k, s.dim))).collect::<Result<Vec<_>>>()?;
            let sym = sym_spencer_sh12(&g)?;
            let matched = rel.as_ref().is_none_or(|r| *r == sym.ker_t);
            let out = SpencerOut {
                schema: SCHEMA,
                name: g.name.clone(),
                h_k2,
                sh12: sym.dim,
                ker_t: sym.ker_t.dim(),
                ker_t_root_relations: rel.map(|r| r.dim()),
                matched,
            };
            let text = match fmt {
                Format::Json => json(&out),
                Format::Table => {
                    let mut s = format!("{}\n", out.name);
                    for (k, d) in &out.h_k2 {
                        s.push_str(&format!("  H^{{{k},2}}: dim {d}\n"));
                    }
                    s.push_str(&format!("  SH^{{1,2}}: dim {}\n  Ker T: dim {}\n", out.sh12, out.ker_t));
                    if let Some(r) = out.ker_t_root_relations {
                        s.push_str(&format!("  root relations: dim {r}, match: {}\n", out.matched));
                    }
                    s
                }
            };
            Ok(Outcome { code: if matched { EXIT_OK } else { EXIT_MISMATCH }, stdout: text, stderr: String::new() })
        }
        Command::LoopSf { grading: ga, assoc } => {
            let (rd, beta) = grading(ga)?;
            let g = grading_from_root(&rd, beta)?.graded;
            let r = loop_structure_functions(&g, &load_algebra(assoc)?)?;
            let text = match fmt {
                Format::Json => json(&r),
                Format::Table => {
                    let mut s = format!("{} ⊗ {}\n", r.grading, r.assoc);
                    for (k, d) in &r.spencer {
                        s.push_str(&format!("  H^{{{k},2}}: dim {d}\n"));
                    }
                    for m in &r.summands {
                        s.push_str(&format!("  {:<40} {:<15} {:>4} x {:<4} = {}\n", m.label, m.kind, m.left, m.right, m.dim));
                    }
                    s.push_str(&format!("  formula {}  direct {}\n", r.formula_dim, r.direct_dim));
                    for c in &r.checks {
                        s.push_str(&format!("  [{}] {}\n", if c.holds { "ok" } else { "FAIL" }, c.name));
                    }
                    s.push_str(&format!("  match: {}\n", r.matched));
                    s
                }
            };
            Ok(Outcome { code: if r.matched { EXIT_OK } else { EXIT_MISMATCH }, stdout: text, stderr: String::new() })
        }
        Command::CatalogList => {
            let items = catalog_list();
            Ok(ok(match fmt {
                Format::Json => json(&items.iter().map(|(n, d)| serde_json::json!({"name": n, "description": d})).collect::<Vec<_>>()),
                Format::Table => items.iter().map(|(n, d)| format!("{n:<14} {d}\n")).collect(),
            }))
        }
    }
}

/// Parses `args` (including the program name) and runs the command. Input errors give
/// exit code 1 and a message on `stderr`.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return if e.use_stderr() {
                Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: e.to_string() }
            } else {
                Outcome { code: EXIT_OK, stdout: e.to_string(), stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok(o) => o,
        Err(e) => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
