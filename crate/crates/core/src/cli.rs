//! Verb dispatch for the `webfloer` binary.

use std::collections::BTreeMap;
use std::fs;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::catalogue::{self, CatalogueFlavour};
use crate::corpus;
use crate::dotalgebra::DotAlgebra;
use crate::floerblocks::synth::validated_complexes;
use crate::floerblocks::{
    build_ijp, flavour_homologies, parse_block_complex, validate_identities, GradedComplex,
};
use crate::foamcalc::{self, FoamIndexInput};
use crate::gf2::BitMatrix;
use crate::onesets::{cover_shadow, enumerate_foam_onesets, enumerate_onesets, is_even, r_cycles, OneSet};
use crate::rational::{self, Q};
use crate::tait;
use crate::webmodel::{parse_foam, parse_web, parse_web_document, validate, WebGraph};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "webfloer", version, about = "1-sets, Tait counts, block complexes, foam indices and catalogued Floer groups of webs")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, Args)]
pub struct OneSetArg {
    /// Web document.
    pub web: String,
    /// Index into the canonical 1-set enumeration.
    #[arg(long)]
    pub oneset: usize,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Check a web document and list its diagnostics.
    Validate { web: String },
    /// Enumerate 1-sets with r-cycle counts, evenness and cover data.
    Onesets { web: String },
    /// Enumerate 1-sets of a foam skeleton.
    FoamOnesets { foam: String },
    /// Count Tait colourings.
    Tait { web: String },
    /// Compare the Tait count with the even 1-set sum.
    VerifyTait {
        web: Option<String>,
        /// Sweep this many seeded random cubic multigraphs instead of a file.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
    },
    /// Catalogued group of a 1-set in one flavour.
    Ranks {
        #[command(flatten)]
        target: OneSetArg,
        #[arg(long, default_value = "hat")]
        flavour: CatalogueFlavour,
    },
    /// Framed rank summed over based 1-sets.
    FramedRank {
        web: String,
        /// Edge carrying the basepoint.
        #[arg(long)]
        basepoint: String,
        /// One spin-c representative per based 1-set.
        #[arg(long)]
        restrict: bool,
    },
    /// Vanishing and nonvanishing rules for a 1-set.
    Vanishing {
        #[command(flatten)]
        target: OneSetArg,
    },
    /// Dot-operator algebra.
    Algebra {
        #[command(subcommand)]
        op: AlgebraOp,
    },
    /// Block complexes.
    Floer {
        #[command(subcommand)]
        op: FloerOp,
    },
    /// Foam index numerics.
    Foam {
        #[command(subcommand)]
        op: FoamOp,
    },
    /// Run the golden suite.
    Corpus {
        /// Worker threads; the table does not depend on it.
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum AlgebraOp {
    /// Normal form of an expression such as `e1*e1*e4 + U`.
    NormalForm {
        #[command(flatten)]
        target: OneSetArg,
        expr: String,
    },
    /// Check the three vertex relations.
    Relations {
        #[command(flatten)]
        target: OneSetArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum FloerOp {
    /// Check the bar identities and gradings of a block complex.
    Check { complex: String },
    /// Homology of the three flavours and exactness of the i/j/p sequence.
    Homology {
        complex: String,
        #[arg(long, value_parser = parse_window, default_value = "-10..10", allow_hyphen_values = true)]
        window: (i64, i64),
    },
    /// Homology of the cone of a chain map of a graded complex to itself.
    Cone {
        input: String,
        #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
        window: Option<(i64, i64)>,
    },
    /// Emit a seeded validated block complex.
    Synth {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        max_gens: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum FoamOp {
    /// Dirac index on the bifold.
    Index { params: String },
    /// Moduli dimension.
    Dimension { params: String },
    /// `b⁺` from `b1_r` and `self_int_r`.
    Bplus { params: String },
    /// Whether `b⁺ > 1`.
    Admissible { params: String },
    /// Vortex moduli from `deg_l`, `deg_k`, `e`.
    Vortex { params: String },
    /// Orbifold Picard membership from `c` and `betas`.
    Picard { params: String },
}

/// `lo..hi`, inclusive, with `−` accepted for minus.
pub fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let t = s.replace('−', "-");
    let (a, b) = t.split_once("..").ok_or_else(|| format!("window {s:?} is not lo..hi"))?;
    let lo: i64 = a.trim().parse().map_err(|_| format!("bad window start {a:?}"))?;
    let hi: i64 = b.trim().parse().map_err(|_| format!("bad window end {b:?}"))?;
    if lo > hi {
        return Err(format!("window {s:?} is empty"));
    }
    Ok((lo, hi))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub command: String,
    /// sha256 over the arguments and the bytes of every file read.
    pub inputs_digest: String,
    pub results: Value,
    pub exit_code: i32,
    #[serde(skip)]
    pub stderr: Vec<String>,
    #[serde(skip)]
    pub format: Format,
}

impl RunReport {
    /// Canonical output: sorted keys, no whitespace.
    pub fn stdout(&self) -> String {
        match self.format {
            Format::Json => canonical_json(&self.results),
            Format::Text => render_text(&self.results),
        }
    }
}

pub fn canonical_json(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize")
}

fn render_text(v: &Value) -> String {
    if let Some(table) = v.get("corpus_text").and_then(Value::as_str) {
        return table.to_string();
    }
    let mut out = String::new();
    text_lines(v, 0, &mut out);
    out
}

fn text_lines(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if x.is_object() || x.is_array() {
                    out.push_str(&format!("{pad}{k}:\n"));
                    text_lines(x, indent + 1, out);
                } else {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar(x)));
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                if x.is_object() || x.is_array() {
                    out.push_str(&format!("{pad}-\n"));
                    text_lines(x, indent + 1, out);
                } else {
                    out.push_str(&format!("{pad}- {}\n", scalar(x)));
                }
            }
        }
        x => out.push_str(&format!("{pad}{}\n", scalar(x))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        x => x.to_string(),
    }
}

enum Failure {
    Parse(String),
    Domain(String),
}

struct Ctx {
    hasher: Sha256,
    stderr: Vec<String>,
}

impl Ctx {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        let bytes = fs::read(path).map_err(|e| Failure::Parse(format!("{path}: {e}")))?;
        self.hasher.update(path.as_bytes());
        self.hasher.update([0]);
        self.hasher.update(&bytes);
        String::from_utf8(bytes).map_err(|_| Failure::Parse(format!("{path}: not UTF-8")))
    }

    fn web(&mut self, path: &str) -> Result<WebGraph, Failure> {
        let text = self.read(path)?;
        parse_web(&text).map_err(|e| Failure::Parse(format!("{path}: {e}")))
    }

    fn oneset(&mut self, t: &OneSetArg) -> Result<(WebGraph, OneSet), Failure> {
        let web = self.web(&t.web)?;
        let mut sets = enumerate_onesets(&web);
        let n = sets.len();
        if t.oneset >= n {
            return Err(Failure::Domain(format!("1-set index {} out of range; the web has {n} 1-sets", t.oneset)));
        }
        let s = sets.swap_remove(t.oneset);
        Ok((web, s))
    }

    fn json<T: serde::de::DeserializeOwned>(&mut self, path: &str) -> Result<T, Failure> {
        let text = self.read(path)?;
        serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("{path}: {e}")))
    }
}

fn domain<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Domain(e.to_string())
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

fn verb_name(v: &Verb) -> String {
    match v {
        Verb::Validate { .. } => "validate".into(),
        Verb::Onesets { .. } => "onesets".into(),
        Verb::FoamOnesets { .. } => "foam-onesets".into(),
        Verb::Tait { .. } => "tait".into(),
        Verb::VerifyTait { .. } => "verify-tait".into(),
        Verb::Ranks { .. } => "ranks".into(),
        Verb::FramedRank { .. } => "framed-rank".into(),
        Verb::Vanishing { .. } => "vanishing".into(),
        Verb::Algebra { op } => match op {
            AlgebraOp::NormalForm { .. } => "algebra normal-form".into(),
            AlgebraOp::Relations { .. } => "algebra relations".into(),
        },
        Verb::Floer { op } => match op {
            FloerOp::Check { .. } => "floer check".into(),
            FloerOp::Homology { .. } => "floer homology".into(),
            FloerOp::Cone { .. } => "floer cone".into(),
            FloerOp::Synth { .. } => "floer synth".into(),
        },
        Verb::Foam { op } => match op {
            FoamOp::Index { .. } => "foam index".into(),
            FoamOp::Dimension { .. } => "foam dimension".into(),
            FoamOp::Bplus { .. } => "foam bplus".into(),
            FoamOp::Admissible { .. } => "foam admissible".into(),
            FoamOp::Vortex { .. } => "foam vortex".into(),
            FoamOp::Picard { .. } => "foam picard".into(),
        },
        Verb::Corpus { .. } => "corpus".into(),
    }
}

/// Parses `argv` (program name first) and runs the verb.
pub fn run<I, T>(argv: I) -> RunReport
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let mut hasher = Sha256::new();
    for a in args.iter().skip(1) {
        hasher.update(a.to_string_lossy().as_bytes());
        hasher.update([0]);
    }
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let informational = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            return RunReport {
                command: String::new(),
                inputs_digest: hex::encode(hasher.finalize()),
                results: if informational { Value::String(e.to_string()) } else { Value::Null },
                exit_code: if informational { 0 } else { 2 },
                stderr: if informational { Vec::new() } else { vec![e.to_string()] },
                format: Format::Text,
            };
        }
    };
    let mut ctx = Ctx { hasher, stderr: Vec::new() };
    let command = verb_name(&cli.verb);
    let outcome = dispatch(&cli, &mut ctx);
    let (results, exit_code) = match outcome {
        Ok((v, code)) => (v, code),
        Err(Failure::Parse(m)) => {
            ctx.stderr.push(format!("error: {m}"));
            (Value::Null, 2)
        }
        Err(Failure::Domain(m)) => {
            ctx.stderr.push(format!("error: {m}"));
            (Value::Null, 1)
        }
    };
    RunReport {
        command,
        inputs_digest: hex::encode(ctx.hasher.finalize()),
        results,
        exit_code,
        stderr: ctx.stderr,
        format: cli.format,
    }
}

fn dispatch(cli: &Cli, ctx: &mut Ctx) -> Result<(Value, i32), Failure> {
    let ok = |v: Value| Ok((v, 0));
    match &cli.verb {
        Verb::Validate { web } => {
            let text = ctx.read(web)?;
            let doc = parse_web_document(&text).map_err(|e| Failure::Parse(format!("{web}: {e}")))?;
            let diagnostics = validate(&doc);
            let valid = diagnostics.is_empty();
            let mut out = json!({ "valid": valid, "diagnostics": to_value(&diagnostics) });
            if valid {
                let w = parse_web(&text).map_err(|e| Failure::Parse(e.to_string()))?;
                out["vertices"] = json!(w.vertex_count());
                out["edges"] = json!(w.edge_count());
                out["family"] = json!(catalogue::recognize(&w).map(|f| f.to_string()).unwrap_or_else(|e| e.to_string()));
            }
            Ok((out, if valid { 0 } else { 1 }))
        }
        Verb::Onesets { web } => {
            let w = ctx.web(web)?;
            let mut rows = Vec::new();
            for (index, s) in enumerate_onesets(&w).iter().enumerate() {
                let d = r_cycles(&w, s);
                let shadow = cover_shadow(&w, s).ok();
                rows.push(json!({
                    "index": index,
                    "c_edges": s.c_edge_ids(&w),
                    "n": d.n(),
                    "even": is_even(&w, s),
                    "b1": shadow.as_ref().and_then(|c| c.b1),
                    "naive_spinc_count": shadow.as_ref().map(|c| c.naive_spinc_count),
                }));
            }
            ok(Value::Array(rows))
        }
        Verb::FoamOnesets { foam } => {
            let text = ctx.read(foam)?;
            let f = parse_foam(&text).map_err(|e| Failure::Parse(format!("{foam}: {e}")))?;
            let sets = enumerate_foam_onesets(&f).map_err(domain)?;
            ok(Value::Array(sets.iter().map(|s| json!(s.ids(&f))).collect()))
        }
        Verb::Tait { web } => {
            let w = ctx.web(web)?;
            ok(json!({ "tait_count": tait::count_tait(&w) }))
        }
        Verb::VerifyTait { web, random, seed, max_vertices } => match (web, random) {
            (Some(path), None) => {
                let w = ctx.web(path)?;
                let r = tait::verify_identity(&w);
                Ok((json!({ "lhs": r.tait_count, "rhs": r.identity_rhs, "ok": r.ok }), if r.ok { 0 } else { 1 }))
            }
            (None, Some(count)) => {
                let graphs = tait::random_cubic_multigraphs(*max_vertices, *seed, *count).map_err(domain)?;
                let failures: Vec<usize> = graphs
                    .iter()
                    .enumerate()
                    .filter(|(_, w)| {
                        let r = tait::verify_identity(w);
                        !r.ok || tait::count_tait_brute_force(w).is_some_and(|b| b != r.tait_count)
                    })
                    .map(|(k, _)| k)
                    .collect();
                let good = failures.is_empty();
                Ok((json!({ "graphs": graphs.len(), "seed": seed, "failures": failures, "ok": good }), if good { 0 } else { 1 }))
            }
            _ => Err(Failure::Parse("verify-tait takes a web file or --random <count>, not both".into())),
        },
        Verb::Ranks { target, flavour } => {
            let (w, s) = ctx.oneset(target)?;
            let a = catalogue::homology(&w, &s, *flavour).map_err(domain)?;
            ok(to_value(&a))
        }
        Verb::FramedRank { web, basepoint, restrict } => {
            let w = ctx.web(web)?;
            let f = catalogue::framed_rank(&w, basepoint, *restrict).map_err(domain)?;
            if let Some(note) = &f.note {
                ctx.stderr.push(format!("note: {note}"));
            }
            ok(to_value(&f))
        }
        Verb::Vanishing { target } => {
            let (w, s) = ctx.oneset(target)?;
            ok(to_value(&catalogue::vanishing_check(&w, &s)))
        }
        Verb::Algebra { op } => match op {
            AlgebraOp::NormalForm { target, expr } => {
                let (w, s) = ctx.oneset(target)?;
                let alg = DotAlgebra::new(&w, &s).map_err(domain)?;
                let e = alg.parse(expr).map_err(domain)?;
                ok(json!({ "normal_form": e.to_string(), "degree": e.degree() }))
            }
            AlgebraOp::Relations { target } => {
                let (w, s) = ctx.oneset(target)?;
                let alg = DotAlgebra::new(&w, &s).map_err(domain)?;
                let r = alg.vertex_relations();
                let good = r.ok();
                Ok((to_value(&r), if good { 0 } else { 1 }))
            }
        },
        Verb::Floer { op } => floer(op, ctx),
        Verb::Foam { op } => foam(op, ctx),
        Verb::Corpus { threads } => {
            let table = match threads {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(*n)
                    .build()
                    .map_err(domain)?
                    .install(corpus::run_corpus),
                None => corpus::run_corpus(),
            };
            let code = if table.ok() { 0 } else { 1 };
            let mut v = to_value(&table);
            if cli.format == Format::Text {
                v = json!({ "corpus_text": table.to_text() });
            }
            Ok((v, code))
        }
    }
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct ConeInput {
    gradings: Vec<i64>,
    #[serde(default)]
    differential: Vec<(usize, usize)>,
    map: Vec<(usize, usize)>,
    #[serde(default = "minus_one")]
    degree: i64,
}

fn minus_one() -> i64 {
    -1
}

fn dims(m: &BTreeMap<i64, usize>) -> Value {
    Value::Object(m.iter().map(|(g, d)| (g.to_string(), json!(d))).collect())
}

fn floer(op: &FloerOp, ctx: &mut Ctx) -> Result<(Value, i32), Failure> {
    let load = |ctx: &mut Ctx, path: &str| {
        let text = ctx.read(path)?;
        parse_block_complex(&text).map_err(|e| Failure::Parse(format!("{path}: {e}")))
    };
    match op {
        FloerOp::Check { complex } => {
            let bc = load(ctx, complex)?;
            let r = validate_identities(&bc).map_err(domain)?;
            let good = r.ok();
            Ok((json!({ "ok": good, "failures": r.failures(), "report": to_value(&r) }), if good { 0 } else { 1 }))
        }
        FloerOp::Homology { complex, window } => {
            let bc = load(ctx, complex)?;
            let h = flavour_homologies(&bc, *window).map_err(domain)?;
            let ijp = build_ijp(&bc).map_err(domain)?;
            let mut out = serde_json::Map::new();
            for (f, m) in &h {
                out.insert(format!("{f:?}").to_lowercase(), dims(m));
            }
            out.insert("exactness".into(), to_value(&ijp.exactness()));
            out.insert("chain_map_failures".into(), json!(ijp.chain_map_failures()));
            Ok((Value::Object(out), 0))
        }
        FloerOp::Cone { input, window } => {
            let c: ConeInput = ctx.json(input)?;
            let n = c.gradings.len();
            let oob = |e: &[(usize, usize)]| e.iter().any(|&(r, k)| r >= n || k >= n);
            if oob(&c.differential) || oob(&c.map) {
                return Err(Failure::Parse(format!("{input}: entry outside {n} generators")));
            }
            let complex = GradedComplex::new(BitMatrix::from_entries(n, n, &c.differential), c.gradings).map_err(domain)?;
            let f = BitMatrix::from_entries(n, n, &c.map);
            let cone = complex.cone(&complex, &f, c.degree).map_err(domain)?;
            let h = match window {
                Some(w) => cone.homology(*w),
                None => cone.homology_all(),
            }
            .map_err(domain)?;
            Ok((json!({ "homology": dims(&h), "total": h.values().sum::<usize>() }), 0))
        }
        FloerOp::Synth { seed, max_gens } => {
            let bc = validated_complexes(*seed, 1, *max_gens).remove(0);
            Ok((to_value(&bc.to_document()), 0))
        }
    }
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct BplusInput {
    #[serde(default)]
    b1_r: u64,
    #[serde(default, with = "rational")]
    self_int_r: Q,
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct VortexInput {
    #[serde(with = "rational")]
    deg_l: Q,
    #[serde(with = "rational")]
    deg_k: Q,
    e: u64,
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct PicardInput {
    #[serde(with = "rational")]
    c: Q,
    #[serde(default)]
    betas: Vec<u8>,
}

fn text(q: &Q) -> Value {
    json!(rational::to_text(q))
}

fn foam(op: &FoamOp, ctx: &mut Ctx) -> Result<(Value, i32), Failure> {
    match op {
        FoamOp::Index { params } => {
            let i: FoamIndexInput = ctx.json(params)?;
            let r = foamcalc::index_report(&i);
            ctx.stderr.extend(r.warnings.iter().map(|w| format!("warning: {w}")));
            Ok((json!({ "dirac_index": text(&r.dirac_index) }), 0))
        }
        FoamOp::Dimension { params } => {
            let i: FoamIndexInput = ctx.json(params)?;
            let r = foamcalc::index_report(&i);
            ctx.stderr.extend(r.warnings.iter().map(|w| format!("warning: {w}")));
            Ok((json!({ "moduli_dimension": text(&r.moduli_dimension) }), 0))
        }
        FoamOp::Bplus { params } => {
            let i: BplusInput = ctx.json(params)?;
            Ok((json!({ "b_plus": text(&foamcalc::b_plus(i.b1_r, i.self_int_r)) }), 0))
        }
        FoamOp::Admissible { params } => {
            let i: BplusInput = ctx.json(params)?;
            Ok((
                json!({
                    "b_plus": text(&foamcalc::b_plus(i.b1_r, i.self_int_r)),
                    "admissible": foamcalc::admissible_foam(i.b1_r, i.self_int_r),
                }),
                0,
            ))
        }
        FoamOp::Vortex { params } => {
            let i: VortexInput = ctx.json(params)?;
            Ok((json!({ "vortex_moduli": to_value(&foamcalc::vortex_moduli(i.deg_l, i.deg_k, i.e)) }), 0))
        }
        FoamOp::Picard { params } => {
            let i: PicardInput = ctx.json(params)?;
            let member = foamcalc::surface_picard_member(i.c, &i.betas).map_err(domain)?;
            Ok((json!({ "member": member }), 0))
        }
    }
}
