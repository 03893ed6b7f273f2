//! The `minkowski` command line.
//!
//! Data goes to `out`, diagnostics to `err`. Exit codes: 0 success, 1 usage
//! or input error, 2 internal consistency failure.

pub mod output;
pub mod plot;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use minkowski_core::angles::{default_ratio_grid, wilson_scan};
use minkowski_core::bisectors::{
    busemann_bisector, daf_bisector, direction_gap, glogovskii_detail, measure_bisector, Ray,
};
use minkowski_core::functionals::{
    g_functional, lambda_functional, q_functional, quasi_inner_residual, sine, star_pair,
};
use minkowski_core::laws::{
    audit_axioms, audit_congruence, characterization_suite, daf_equivalence_probe, AuditConfig,
    SuiteConfig,
};
use minkowski_core::measures::{dekster_tau, triangle_angle_sum};
use minkowski_core::orthogonality::{self, roberts_grid};
use minkowski_core::{
    build_measure, AngleFn, Error, Evaluator, MeasureKind, NormedPlane, OrthoKind, Vec2,
};

use output::{csv_num, to_json};
use plot::{Layer, PlotRequest};

/// Environment variable overriding every default tolerance.
pub const TOL_ENV: &str = "MINKOWSKI_TOL";

#[derive(Debug, Parser)]
#[command(name = "minkowski", version, about = "Angles, orthogonality and measures in normed planes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Orthogonality residual of a pair.
    Ortho(OrthoArgs),
    /// Scalar functionals: sine, q, t*/t**, lambda, g, quasi-inner residual.
    Functional(FunctionalArgs),
    /// One angle function on a pair.
    Angle(AngleArgs),
    /// Angle measures: totals, Dekster tau, triangles, density dumps.
    Measure(MeasureArgs),
    /// Angular bisectors.
    Bisect(BisectArgs),
    /// Axiom audits and characterization probes.
    Laws(LawsArgs),
    /// SVG figure of the plane.
    Plot(PlotArgs),
    /// One summary line per norm file in a directory.
    Catalog(CatalogArgs),
}

#[derive(Debug, Args)]
struct NormArg {
    /// Norm specification (JSON file).
    #[arg(long)]
    norm: PathBuf,
}

#[derive(Debug, Args)]
struct PairArgs {
    #[arg(long, value_parser = parse_vec, allow_hyphen_values = true)]
    x: Vec2,
    #[arg(long, value_parser = parse_vec, allow_hyphen_values = true)]
    y: Vec2,
}

#[derive(Debug, Args)]
struct OrthoArgs {
    #[command(flatten)]
    norm: NormArg,
    /// Relation name, or `all`.
    #[arg(long = "type", default_value = "birkhoff")]
    kind: String,
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long, value_parser = parse_tol)]
    tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
enum Which {
    Sine,
    Q,
    Tstar,
    Lambda,
    G,
    Quasi,
}

#[derive(Debug, Args)]
struct FunctionalArgs {
    #[command(flatten)]
    norm: NormArg,
    #[arg(long, value_enum)]
    which: Which,
    #[command(flatten)]
    pair: PairArgs,
    /// Unit-circle samples for `q`.
    #[arg(long, default_value_t = 4096)]
    samples: usize,
}

#[derive(Debug, Args)]
struct AngleArgs {
    #[command(flatten)]
    norm: NormArg,
    /// p, i, thy, q, s, b, g, gs, gi, daf, wilson, euclid_ref or measure:<kind>.
    #[arg(long = "fn")]
    func: String,
    #[command(flatten)]
    pair: PairArgs,
    /// Ratios for the Wilson scan, comma separated.
    #[arg(long, value_delimiter = ',')]
    ratio_grid: Option<Vec<f64>>,
}

#[derive(Debug, Args)]
struct MeasureArgs {
    #[command(flatten)]
    norm: NormArg,
    #[arg(long, default_value = "arclen")]
    kind: String,
    /// Dekster total mass.
    #[arg(long)]
    tau: bool,
    /// Angle sum of the triangle with these three vertices.
    #[arg(long, num_args = 3, value_parser = parse_vec, allow_hyphen_values = true)]
    triangle: Option<Vec<Vec2>>,
    /// Write `n` density samples as CSV instead of JSON.
    #[arg(long)]
    dump_density: Option<usize>,
    #[arg(long, default_value_t = 1024)]
    n_quad: usize,
}

#[derive(Debug, Args)]
struct BisectArgs {
    #[command(flatten)]
    norm: NormArg,
    /// busemann, glogovskii, daf or measure:<kind>.
    #[arg(long, default_value = "busemann")]
    kind: String,
    #[command(flatten)]
    pair: PairArgs,
    /// Emit all four bisectors and their pairwise gaps.
    #[arg(long)]
    compare: bool,
    /// Measure used by `--compare`.
    #[arg(long, default_value = "arclen")]
    measure_kind: String,
    #[arg(long, value_parser = parse_tol)]
    tol: Option<f64>,
}

#[derive(Debug, Args)]
struct LawsArgs {
    #[command(flatten)]
    norm: NormArg,
    #[arg(long = "fn", default_value = "p")]
    func: String,
    #[arg(long)]
    axioms: bool,
    #[arg(long)]
    congruence: bool,
    #[arg(long)]
    characterize: bool,
    #[arg(long)]
    daf: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Grid side for the audits.
    #[arg(long, default_value_t = 64)]
    grid: usize,
    #[arg(long, value_parser = parse_tol)]
    tol: Option<f64>,
}

#[derive(Debug, Args)]
struct PlotArgs {
    #[command(flatten)]
    norm: NormArg,
    #[arg(long, value_delimiter = ',', default_value = "unit_circle")]
    layers: Vec<Layer>,
    #[arg(long, value_parser = parse_vec, allow_hyphen_values = true)]
    x: Option<Vec2>,
    #[arg(long, value_parser = parse_vec, allow_hyphen_values = true)]
    y: Option<Vec2>,
    #[arg(long, default_value = "arclen")]
    measure_kind: String,
    /// Output file; `-` writes to stdout.
    #[arg(long, default_value = "-")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct CatalogArgs {
    #[arg(long)]
    dir: PathBuf,
}

fn parse_vec(s: &str) -> Result<Vec2, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected `a,b`, got `{s}`"));
    }
    let a: f64 = parts[0].trim().parse().map_err(|e| format!("`{}`: {e}", parts[0]))?;
    let b: f64 = parts[1].trim().parse().map_err(|e| format!("`{}`: {e}", parts[1]))?;
    if !a.is_finite() || !b.is_finite() {
        return Err(format!("non-finite component in `{s}`"));
    }
    Ok(Vec2::new(a, b))
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("tolerance must be a positive number, got `{s}`")),
    }
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Out = std::result::Result<String, Failure>;

fn env_tol() -> std::result::Result<Option<f64>, Failure> {
    match std::env::var(TOL_ENV) {
        Ok(s) => parse_tol(&s).map(Some).map_err(|e| Failure::Usage(format!("{TOL_ENV}: {e}"))),
        Err(_) => Ok(None),
    }
}

fn tolerance(flag: Option<f64>, default: f64) -> std::result::Result<f64, Failure> {
    Ok(match flag {
        Some(t) => t,
        None => env_tol()?.unwrap_or(default),
    })
}

fn load(path: &Path) -> std::result::Result<NormedPlane, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(NormedPlane::from_json(&text)?)
}

fn parse_with<T: std::str::FromStr<Err = Error>>(s: &str) -> std::result::Result<T, Failure> {
    s.parse::<T>().map_err(|e| Failure::Usage(e.to_string()))
}

fn ortho(a: &OrthoArgs) -> Out {
    let plane = load(&a.norm.norm)?;
    let (x, y) = (a.pair.x, a.pair.y);
    let kinds: Vec<OrthoKind> = if a.kind == "all" {
        OrthoKind::ALL.to_vec()
    } else {
        vec![parse_with(&a.kind)?]
    };
    let mut rows = Vec::new();
    for k in &kinds {
        let tol = tolerance(a.tol, k.default_tol())?;
        let r = match k {
            OrthoKind::Roberts => orthogonality::roberts(&plane, x, y, &roberts_grid(), tol)?,
            _ => orthogonality::evaluate(&plane, *k, x, y, tol)?,
        };
        rows.push(json!({"kind": k.name(), "residual": r.residual, "orthogonal": r.orthogonal, "tol": r.tol}));
    }
    Ok(if rows.len() == 1 {
        to_json(&rows[0])
    } else {
        to_json(&rows)
    })
}

fn functional(a: &FunctionalArgs) -> Out {
    let plane = load(&a.norm.norm)?;
    let (x, y) = (a.pair.x, a.pair.y);
    let v = match a.which {
        Which::Sine => json!({"which": "sine", "value": sine(&plane, x, y)?}),
        Which::Q => json!({"which": "q", "value": q_functional(&plane, x, y, a.samples)?}),
        Which::Tstar => {
            let sp = star_pair(&plane, x, y)?;
            json!({"which": "tstar", "t_star": sp.t_star, "t_star_star": sp.t_star_star, "min_value": sp.min_value})
        }
        Which::Lambda => json!({"which": "lambda", "value": lambda_functional(&plane, x, y)?}),
        Which::G => json!({"which": "g", "value": g_functional(&plane, x, y)}),
        Which::Quasi => json!({"which": "quasi", "value": quasi_inner_residual(&plane, x, y)}),
    };
    Ok(to_json(&v))
}

fn angle(a: &AngleArgs) -> Out {
    let plane = load(&a.norm.norm)?;
    let f: AngleFn = parse_with(&a.func)?;
    let (x, y) = (a.pair.x, a.pair.y);
    let ev = Evaluator::new(&plane, f)?;
    let r = ev.angle(x, y)?;
    let mut obj = Map::new();
    obj.insert("fn".into(), json!(f.name()));
    obj.insert("radians".into(), json!(r));
    obj.insert("degrees".into(), json!(r.to_degrees()));
    if f == AngleFn::Wilson || a.ratio_grid.is_some() {
        let grid = a.ratio_grid.clone().unwrap_or_else(default_ratio_grid);
        if grid.is_empty() || grid.iter().any(|&r| !(r > 0.0 && r.is_finite())) {
            return Err(Failure::Usage("ratio grid entries must be positive".into()));
        }
        obj.insert("wilson".into(), serde_json::to_value(wilson_scan(&plane, x, y, &grid)?).unwrap());
    }
    Ok(to_json(&Value::Object(obj)))
}

fn measure(a: &MeasureArgs) -> Out {
    let plane = load(&a.norm.norm)?;
    let kind: MeasureKind = parse_with(&a.kind)?;
    if a.n_quad < 64 {
        return Err(Failure::Usage("--n-quad must be at least 64".into()));
    }
    let mu = build_measure(&plane, kind, a.n_quad)?;
    if let Some(n) = a.dump_density {
        if n == 0 {
            return Err(Failure::Usage("--dump-density needs n > 0".into()));
        }
        let mut s = String::from("theta,density");
        for (t, d) in mu.density_samples(n) {
            s.push('\n');
            s.push_str(&format!("{},{}", csv_num(t), csv_num(d)));
        }
        return Ok(s);
    }
    let mut obj = Map::new();
    if a.tau {
        obj.insert("tau".into(), json!(dekster_tau(&plane, a.n_quad)?));
    }
    if let Some(tri) = &a.triangle {
        let sum = triangle_angle_sum(&mu, tri[0], tri[1], tri[2])?;
        obj.insert("kind".into(), json!(kind.name()));
        obj.insert("triangle_sum".into(), json!(sum));
    }
    if obj.is_empty() {
        obj.insert("kind".into(), json!(kind.name()));
        obj.insert("total".into(), json!(mu.total()));
        obj.insert("raw_total".into(), json!(mu.raw_total()));
    }
    Ok(to_json(&Value::Object(obj)))
}

fn ray_json(r: &Ray) -> Value {
    json!({"direction": [r.direction.x, r.direction.y], "angle": r.angle()})
}

fn bisect(a: &BisectArgs) -> Out {
    let plane = load(&a.norm.norm)?;
    let (x, y) = (a.pair.x, a.pair.y);
    let tol = tolerance(a.tol, 1e-12)?;
    let one = |kind: &str| -> std::result::Result<Value, Failure> {
        Ok(match kind {
            "busemann" => ray_json(&busemann_bisector(&plane, x, y)?),
            "glogovskii" => {
                let g = glogovskii_detail(&plane, x, y, tol)?;
                let mut v = ray_json(&g.ray);
                v["unique"] = json!(g.is_unique());
                v
            }
            "daf" => ray_json(&daf_bisector(&plane, x, y, tol.max(1e-9))?),
            other => match other.strip_prefix("measure:") {
                Some(k) => {
                    let mu = build_measure(&plane, parse_with(k)?, 1024)?;
                    ray_json(&measure_bisector(&mu, x, y)?)
                }
                None => return Err(Failure::Usage(format!("unknown bisector `{other}`"))),
            },
        })
    };
    if !a.compare {
        let mut v = one(&a.kind)?;
        v["kind"] = json!(a.kind);
        return Ok(to_json(&v));
    }
    let names = [
        "busemann".to_string(),
        "glogovskii".to_string(),
        format!("measure:{}", a.measure_kind),
        "daf".to_string(),
    ];
    let mut obj = Map::new();
    let mut dirs = Vec::new();
    for n in &names {
        let v = one(n)?;
        dirs.push(Vec2::new(v["direction"][0].as_f64().unwrap(), v["direction"][1].as_f64().unwrap()));
        obj.insert(n.clone(), v);
    }
    let mut gaps = Map::new();
    for i in 0..names.len() {
        for j in i + 1..names.len() {
            gaps.insert(format!("{}|{}", names[i], names[j]), json!(direction_gap(dirs[i], dirs[j])));
        }
    }
    obj.insert("gaps".into(), Value::Object(gaps));
    Ok(to_json(&Value::Object(obj)))
}

fn laws(a: &LawsArgs) -> Out {
    let plane = load(&a.norm.norm)?;
    let f: AngleFn = parse_with(&a.func)?;
    if !(a.axioms || a.congruence || a.characterize || a.daf) {
        return Err(Failure::Usage(
            "laws needs at least one of --axioms, --congruence, --characterize, --daf".into(),
        ));
    }
    if a.grid == 0 {
        return Err(Failure::Usage("--grid must be positive".into()));
    }
    let tol = tolerance(a.tol, 1e-6)?;
    let cfg = AuditConfig::with_seed(a.seed).with_grid(a.grid);
    let mut obj = Map::new();
    if a.characterize {
        let c = characterization_suite(&plane, &SuiteConfig::with_seed(a.seed))?;
        if let Value::Object(m) = serde_json::to_value(&c).unwrap() {
            obj.extend(m);
        }
    }
    if a.axioms {
        obj.insert("axioms".into(), serde_json::to_value(audit_axioms(&plane, f, &cfg, tol)?).unwrap());
    }
    if a.congruence {
        let (p9, p10) = audit_congruence(&plane, f, &cfg, tol)?;
        obj.insert("congruence".into(), serde_json::to_value([p9, p10]).unwrap());
    }
    if a.daf {
        obj.insert("daf".into(), serde_json::to_value(daf_equivalence_probe(&plane, &cfg, tol)?).unwrap());
    }
    obj.insert("fn".into(), json!(f.name()));
    obj.insert("seed".into(), json!(a.seed));
    Ok(to_json(&Value::Object(obj)))
}

fn plot_cmd(a: &PlotArgs) -> std::result::Result<Option<String>, Failure> {
    let plane = load(&a.norm.norm)?;
    let pair = match (a.x, a.y) {
        (Some(x), Some(y)) => Some((x, y)),
        (None, None) => None,
        _ => return Err(Failure::Usage("--x and --y go together".into())),
    };
    let req = PlotRequest {
        layers: a.layers.clone(),
        pair,
        measure_kind: parse_with(&a.measure_kind)?,
    };
    let svg = plot::render(&plane, &req)?;
    if a.out.as_os_str() == "-" {
        return Ok(Some(svg));
    }
    fs::write(&a.out, svg).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", a.out.display())))?;
    Ok(None)
}

fn catalog(a: &CatalogArgs) -> Out {
    let mut files: Vec<PathBuf> = fs::read_dir(&a.dir)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", a.dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let mut rows = Vec::new();
    for f in files {
        let plane = load(&f)?;
        let rc = plane.radon_check(720, 1e-9)?;
        rows.push(json!({
            "file": f.file_name().map(|n| n.to_string_lossy().into_owned()),
            "strictly_convex": plane.strictly_convex(),
            "smooth": plane.smooth(),
            "radon": rc.is_radon,
            "dekster_tau": dekster_tau(&plane, 512)?,
        }));
    }
    Ok(rows.iter().map(to_json).collect::<Vec<_>>().join("\n"))
}

/// Parses `args` (program name first) and runs one subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Ortho(a) => ortho(a).map(Some),
        Command::Functional(a) => functional(a).map(Some),
        Command::Angle(a) => angle(a).map(Some),
        Command::Measure(a) => measure(a).map(Some),
        Command::Bisect(a) => bisect(a).map(Some),
        Command::Laws(a) => laws(a).map(Some),
        Command::Plot(a) => plot_cmd(a),
        Command::Catalog(a) => catalog(a).map(Some),
    };
    match result {
        Ok(Some(text)) => {
            let text = if text.ends_with('\n') { text } else { text + "\n" };
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            0
        }
        Ok(None) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::DetectorDisagreement(_) => 2,
                _ => 1,
            }
        }
    }
}
