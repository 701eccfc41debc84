//! Command-line front end: `spectrum`, `classify`, `design`, `simulate`,
//! `verify` and `sweep`.
//!
//! Errors are printed to stderr as `{"error": kind, "message": text}`. The
//! exit code is 2 for configuration errors and 3 for numerical failures.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::analyze::{extract_pattern, glide_residual, verify_prediction, DEFAULT_FRACTION_TOL};
use crate::hopf_predict::{predict, predict_block, time_reverse, HopfPrediction};
use crate::ring_model::{build_network, Linearization, ModelSpec, NetworkConfig, Symmetry, VectorField};
use crate::simulate::{default_step, format_float, mode_seed, settle_and_sample, Trajectory};
use crate::spectral::{
    block_spectrum, circulant_spectrum, classify_first_bifurcation, design_ordering, realized_ranking, BifurcationKind,
    BlockCoefficients, CouplingCoefficients, Sweep,
};
use crate::{Error, Result};

/// Environment variable capping sweep worker threads.
pub const THREADS_ENV: &str = "RINGHOPF_THREADS";

const SEED_AMPLITUDE: f64 = 1e-3;
const NOISE_AMPLITUDE: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(name = "ringhopf", version, about = "Hopf bifurcation and rotating waves on ring networks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues of the linearization, one record per Fourier mode.
    Spectrum {
        #[command(flatten)]
        net: NetworkArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// First bifurcation as the diagonal coefficient increases.
    Classify {
        #[command(flatten)]
        net: NetworkArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Coupling coefficients realising a requested eigenvalue ordering.
    Design {
        #[arg(long)]
        n: usize,
        /// Rank of each mode 0..=n/2; rank 0 has the largest real part.
        #[arg(long, value_delimiter = ',')]
        ordering: Vec<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Integrates the ring and writes the sampled trajectory as CSV.
    Simulate {
        #[command(flatten)]
        net: NetworkArgs,
        #[command(flatten)]
        sim: SimArgs,
        /// Trajectory CSV path (stdout if absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Simulates, extracts the phase pattern and compares it with the prediction.
    Verify {
        #[command(flatten)]
        net: NetworkArgs,
        #[command(flatten)]
        sim: SimArgs,
        /// Fraction tolerance on the circle.
        #[arg(long, default_value_t = DEFAULT_FRACTION_TOL)]
        tol: f64,
        /// Also accept the time-reversed pattern.
        #[arg(long)]
        allow_reverse: bool,
        /// Also write the trajectory CSV here.
        #[arg(long)]
        trajectory: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Classification over a parameter grid, in grid order.
    Sweep {
        #[command(flatten)]
        net: NetworkArgs,
        /// Grid axis `name=lo:hi:count`; `name` is `a<j>` or `lambda`. Repeatable.
        #[arg(long, required = true)]
        grid: Vec<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Clone, Default, Args)]
pub struct NetworkArgs {
    /// JSON network config; flags override its fields.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Coupling coefficients a_0..a_{n-1}.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub a: Option<Vec<f64>>,
    /// Added to the diagonal coefficient (or to lambda).
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub shift: f64,
    #[arg(long)]
    pub dihedral: bool,
    #[arg(long)]
    pub node_dim: Option<usize>,
    /// Internal block, row-major.
    #[arg(long = "P", value_delimiter = ',', allow_hyphen_values = true)]
    pub p: Option<Vec<f64>>,
    /// Nearest-neighbour coupling block, row-major.
    #[arg(long = "Q", value_delimiter = ',', allow_hyphen_values = true)]
    pub q: Option<Vec<f64>>,
    /// Built-in model name or expression; `;` separates node components.
    #[arg(long, allow_hyphen_values = true)]
    pub model: Option<String>,
    #[arg(long, value_delimiter = ',')]
    pub ranges: Option<Vec<usize>>,
    /// Parameters as `name=value,...`.
    #[arg(long, allow_hyphen_values = true)]
    pub params: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct SimArgs {
    #[arg(long, default_value_t = 500.0)]
    pub transient: f64,
    #[arg(long, default_value_t = 100.0)]
    pub window: f64,
    /// RK4 step; defaults to min(1e-2, T/200).
    #[arg(long)]
    pub step: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Report the run of the time-reversed field.
    #[arg(long)]
    pub time_reverse: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output path (stdout if absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

fn parse_params(text: &str) -> Result<BTreeMap<String, f64>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|item| {
            let (name, value) =
                item.split_once('=').ok_or_else(|| Error::Config(format!("expected name=value, got `{item}`")))?;
            let v: f64 =
                value.trim().parse().map_err(|_| Error::Config(format!("bad value for `{}`: {value}", name.trim())))?;
            Ok((name.trim().to_string(), v))
        })
        .collect()
}

impl NetworkArgs {
    fn config(&self) -> Result<Option<NetworkConfig>> {
        let mut cfg = match (&self.config, &self.model) {
            (Some(path), _) => {
                let text = fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
                NetworkConfig::from_json(&text).map_err(|e| Error::Config(e.to_string()))?
            }
            (None, Some(_)) => NetworkConfig::builtin("", BTreeMap::new()),
            (None, None) => return Ok(None),
        };
        if let Some(model) = &self.model {
            let parts: Vec<String> = model.split(';').map(|s| s.trim().to_string()).collect();
            cfg.model = if parts.len() == 1 { ModelSpec::Single(model.clone()) } else { ModelSpec::Components(parts) };
        }
        if let Some(n) = self.n {
            cfg.n = Some(n);
        }
        if let Some(r) = &self.ranges {
            cfg.ranges = Some(r.clone());
        }
        if let Some(l) = self.node_dim {
            cfg.node_dim = l;
        }
        if self.dihedral {
            cfg.symmetry = Symmetry::Dihedral;
        }
        if let Some(p) = &self.params {
            cfg.params.extend(parse_params(p)?);
        }
        let bif = cfg.bifurcation_param.clone();
        *cfg.params.entry(bif).or_insert(0.0) += self.shift;
        Ok(Some(cfg))
    }

    fn coefficients(&self) -> Result<Option<CouplingCoefficients>> {
        let Some(a) = &self.a else { return Ok(None) };
        if self.n.is_some_and(|n| n != a.len()) {
            return Err(Error::Config(format!("--n {} but {} coefficients", self.n.unwrap_or(0), a.len())));
        }
        Ok(Some(CouplingCoefficients::new(a.clone(), self.dihedral)?.shifted(self.shift)))
    }

    /// Linear part from `--P/--Q`, `--a`, or a model.
    pub fn linearization(&self) -> Result<Linearization> {
        if let (Some(p), Some(q)) = (&self.p, &self.q) {
            let n = self.n.ok_or_else(|| Error::Config("--P/--Q need --n".into()))?;
            let b = BlockCoefficients::new(n, p.clone(), q.clone())?;
            if self.node_dim.is_some_and(|l| l != b.node_dim()) {
                return Err(Error::DimensionMismatch { expected: self.node_dim.unwrap_or(0).pow(2), got: p.len() });
            }
            return Ok(Linearization::Block(b.shifted(self.shift)));
        }
        if self.p.is_some() || self.q.is_some() {
            return Err(Error::Config("--P and --Q go together".into()));
        }
        if let Some(c) = self.coefficients()? {
            return Ok(Linearization::Scalar(c));
        }
        let field = self.field()?;
        field.linearize(field.lambda())
    }

    /// Vector field from a config or `--model`, or the cubic ring
    /// `ẋ = a_0 x − x³ + Σ a_r u_r` when only `--a` is given.
    pub fn field(&self) -> Result<VectorField> {
        if let Some(cfg) = self.config()? {
            return cfg.build();
        }
        let c =
            self.coefficients()?.ok_or_else(|| Error::Config("no network given (--config, --model or --a)".into()))?;
        let a = c.coefficients();
        let ranges: Vec<usize> = (1..a.len()).filter(|&r| a[r] != 0.0).collect();
        if ranges.is_empty() {
            return Err(Error::EmptyRanges);
        }
        let symmetry = if self.dihedral { Symmetry::Dihedral } else { Symmetry::Cyclic };
        let net = build_network(a.len(), &ranges, 1, symmetry, false)?;
        let couplings: Vec<(usize, f64)> = ranges.iter().map(|&r| (r, a[r])).collect();
        VectorField::cubic(net, &couplings, 0.0, a[0])
    }
}

#[derive(Debug, Serialize)]
struct ModeRecord {
    k: usize,
    re: f64,
    im: f64,
    multiplicity: usize,
}

fn mode_records(lin: &Linearization) -> Result<Vec<ModeRecord>> {
    match lin {
        Linearization::Scalar(c) => Ok(circulant_spectrum(c)
            .into_iter()
            .map(|m| ModeRecord { k: m.k, re: m.mu.re, im: m.mu.im, multiplicity: m.multiplicity })
            .collect()),
        Linearization::Block(b) => {
            let modes = block_spectrum(b)?;
            let all: Vec<_> = modes.iter().flat_map(|m| m.eigenvalues.iter().copied()).collect();
            let tol = 1e-9 * (1.0 + all.iter().map(|z| z.norm()).fold(0.0, f64::max));
            Ok(modes
                .iter()
                .flat_map(|m| {
                    m.eigenvalues.iter().map(|z| ModeRecord {
                        k: m.k,
                        re: z.re,
                        im: z.im,
                        multiplicity: all.iter().filter(|w| (**w - z).norm() <= tol).count(),
                    })
                })
                .collect())
        }
    }
}

fn emit(out: &OutputArgs, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match &out.out {
        Some(path) => fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn cmd_spectrum(net: &NetworkArgs, out: &OutputArgs, stdout: &mut dyn Write) -> Result<()> {
    let records = mode_records(&net.linearization()?)?;
    let text = match out.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&records)?,
        Format::Csv => {
            let mut s = String::from("k,re,im,mult\n");
            for r in &records {
                s.push_str(&format!("{},{},{},{}\n", r.k, format_float(r.re), format_float(r.im), r.multiplicity));
            }
            s
        }
    };
    emit(out, &text, stdout)
}

fn scalar(lin: Linearization, what: &str) -> Result<CouplingCoefficients> {
    match lin {
        Linearization::Scalar(c) => Ok(c),
        Linearization::Block(_) => Err(Error::Config(format!("{what} needs scalar nodes"))),
    }
}

fn cmd_classify(net: &NetworkArgs, out: &OutputArgs, stdout: &mut dyn Write) -> Result<()> {
    let c = scalar(net.linearization()?, "classify")?;
    let fb = classify_first_bifurcation(&c, Sweep::ShiftA0)?;
    emit(out, &to_json(&fb)?, stdout)
}

#[derive(Serialize)]
struct DesignReport {
    n: usize,
    ordering: Vec<usize>,
    coefficients: Vec<f64>,
    real_parts: Vec<f64>,
    realized: Vec<usize>,
    verified: bool,
}

fn cmd_design(n: usize, ordering: &[usize], out: &OutputArgs, stdout: &mut dyn Write) -> Result<()> {
    let c = design_ordering(n, ordering)?;
    let realized = realized_ranking(&c);
    let report = DesignReport {
        n,
        ordering: ordering.to_vec(),
        coefficients: c.coefficients().to_vec(),
        real_parts: (0..=n / 2).map(|k| c.rho(k)).collect(),
        verified: realized == ordering,
        realized,
    };
    emit(out, &to_json(&report)?, stdout)
}

/// Canonical wavenumber of the critical Hopf mode, if the first bifurcation is one.
fn hopf_prediction(field: &VectorField) -> Result<Option<HopfPrediction>> {
    match field.linearize(field.lambda())? {
        Linearization::Scalar(c) => {
            if c.is_decoupled() {
                return Ok(None);
            }
            let fb = classify_first_bifurcation(&c, Sweep::ShiftA0)?;
            if fb.kind != BifurcationKind::Hopf {
                return Ok(None);
            }
            let n = c.n();
            let k = fb.critical_modes.iter().map(|&k| k.min(n - k)).min().unwrap_or(0);
            if c.is_dihedral() {
                return Ok(None);
            }
            predict(&c, k).map(Some)
        }
        Linearization::Block(b) => {
            let n = b.n();
            let modes = block_spectrum(&b)?;
            let best =
                modes.iter().max_by(|x, y| x.leading().re.total_cmp(&y.leading().re)).expect("at least two modes");
            let k = best.k.min(n - best.k);
            if k == 0 || 2 * k == n || best.leading().im.abs() < 1e-9 {
                return Ok(None);
            }
            predict_block(&b, k).map(Some)
        }
    }
}

struct Run {
    trajectory: Trajectory,
    prediction: Option<HopfPrediction>,
}

fn run_simulation(net: &NetworkArgs, sim: &SimArgs) -> Result<Run> {
    let field = net.field()?;
    let prediction = hopf_prediction(&field)?;
    let network = field.network().clone();
    let k = prediction.as_ref().map_or(1, |p| p.k);
    let mut x0 = mode_seed(&network, k, None, SEED_AMPLITUDE);
    let mut rng = ChaCha8Rng::seed_from_u64(sim.seed);
    for v in &mut x0 {
        *v += NOISE_AMPLITUDE * rng.random_range(-1.0..1.0);
    }
    let period = prediction.as_ref().map(|p| p.period_limit);
    let h = sim.step.unwrap_or_else(|| default_step(period));
    let tr = settle_and_sample(&field, &x0, field.lambda(), sim.transient, sim.window, h, period)?;
    if sim.time_reverse {
        Ok(Run { trajectory: tr.time_mirror(), prediction: prediction.as_ref().map(time_reverse) })
    } else {
        Ok(Run { trajectory: tr, prediction })
    }
}

fn write_trajectory(tr: &Trajectory, path: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => tr.write_csv(std::io::BufWriter::new(fs::File::create(p)?)),
        None => tr.write_csv(stdout),
    }
}

fn cmd_simulate(net: &NetworkArgs, sim: &SimArgs, out: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<()> {
    let run = run_simulation(net, sim)?;
    write_trajectory(&run.trajectory, out, stdout)
}

fn cmd_verify(
    net: &NetworkArgs,
    sim: &SimArgs,
    tol: f64,
    allow_reverse: bool,
    trajectory: Option<&PathBuf>,
    out: &OutputArgs,
    stdout: &mut dyn Write,
) -> Result<()> {
    let run = run_simulation(net, sim)?;
    if let Some(path) = trajectory {
        write_trajectory(&run.trajectory, Some(path), stdout)?;
    }
    let p = run.prediction.ok_or(Error::NotHopfMode(0))?;
    let pattern = extract_pattern(&run.trajectory)?;
    let report = verify_prediction(&p, &pattern, tol, allow_reverse);
    let glide = glide_residual(&run.trajectory, pattern.period);
    let doc = json!({ "prediction": p, "pattern": pattern, "report": report, "glide_residual": glide });
    emit(out, &to_json(&doc)?, stdout)
}

#[derive(Debug, Clone, PartialEq)]
struct Axis {
    name: String,
    values: Vec<f64>,
}

fn parse_axis(spec: &str) -> Result<Axis> {
    let bad = || Error::Config(format!("grid axis must be name=lo:hi:count, got `{spec}`"));
    let (name, range) = spec.split_once('=').ok_or_else(bad)?;
    let parts: Vec<&str> = range.split(':').collect();
    let [lo, hi, count] = parts.as_slice() else { return Err(bad()) };
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    let count: usize = count.trim().parse().map_err(|_| bad())?;
    if count == 0 {
        return Err(bad());
    }
    let values = if count == 1 {
        vec![lo]
    } else {
        (0..count).map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64).collect()
    };
    Ok(Axis { name: name.trim().to_string(), values })
}

fn axis_index(name: &str, n: usize) -> Result<usize> {
    if name == "lambda" {
        return Ok(0);
    }
    name.strip_prefix('a')
        .and_then(|j| j.parse::<usize>().ok())
        .filter(|&j| j < n)
        .ok_or_else(|| Error::Config(format!("unknown grid parameter `{name}` (use a0..a{} or lambda)", n - 1)))
}

/// Modes `0..=n/2` by decreasing real part, `>` between strict steps and
/// `=` between ties.
fn ordering_label(c: &CouplingCoefficients) -> String {
    let tol = c.zero_tolerance();
    let mut modes: Vec<(usize, f64)> = (0..=c.n() / 2).map(|k| (k, c.rho(k))).collect();
    modes.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    let mut s = modes[0].0.to_string();
    for w in modes.windows(2) {
        s.push(if w[0].1 - w[1].1 <= tol { '=' } else { '>' });
        s.push_str(&w[1].0.to_string());
    }
    s
}

#[derive(Debug, Serialize)]
struct SweepRow {
    params: Vec<f64>,
    max_real: f64,
    critical_k: Vec<usize>,
    kind: BifurcationKind,
    ordering: String,
}

fn sweep_threads() -> Result<usize> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&t| t > 0)
            .ok_or_else(|| Error::Config(format!("{THREADS_ENV} must be a positive integer, got `{v}`"))),
        Err(_) => Ok(0),
    }
}

fn cmd_sweep(net: &NetworkArgs, grid: &[String], out: &OutputArgs, stdout: &mut dyn Write) -> Result<()> {
    let base = scalar(net.linearization()?, "sweep")?;
    let n = base.n();
    let axes = grid.iter().map(|g| parse_axis(g)).collect::<Result<Vec<_>>>()?;
    let indices = axes.iter().map(|a| axis_index(&a.name, n)).collect::<Result<Vec<_>>>()?;
    let total: usize = axes.iter().map(|a| a.values.len()).product();

    let point = |mut flat: usize| -> Vec<f64> {
        let mut vals = vec![0.0; axes.len()];
        for (i, axis) in axes.iter().enumerate().rev() {
            vals[i] = axis.values[flat % axis.values.len()];
            flat /= axis.values.len();
        }
        vals
    };
    let evaluate = |flat: usize| -> Result<SweepRow> {
        let params = point(flat);
        let mut a = base.coefficients().to_vec();
        for (&j, &v) in indices.iter().zip(&params) {
            a[j] = v;
            if base.is_dihedral() && j != 0 {
                a[n - j] = v;
            }
        }
        let c = CouplingCoefficients::new(a, base.is_dihedral())?;
        if c.is_decoupled() {
            // every mode sits at a_0: a fully degenerate point
            return Ok(SweepRow {
                params,
                max_real: c.rho(0),
                critical_k: (0..=n / 2).collect(),
                kind: BifurcationKind::Degenerate,
                ordering: ordering_label(&c),
            });
        }
        let fb = classify_first_bifurcation(&c, Sweep::ShiftA0)?;
        let mut critical_k: Vec<usize> = fb.critical_modes.iter().map(|&k| k.min(n - k)).collect();
        critical_k.sort_unstable();
        critical_k.dedup();
        Ok(SweepRow { params, max_real: fb.max_real, critical_k, kind: fb.kind, ordering: ordering_label(&c) })
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(sweep_threads()?)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    let rows: Vec<SweepRow> = pool.install(|| (0..total).into_par_iter().map(evaluate).collect::<Result<_>>())?;

    let text = match out.format.unwrap_or(Format::Csv) {
        Format::Json => {
            let docs: Vec<_> = rows
                .iter()
                .map(|r| {
                    let params: BTreeMap<&str, f64> =
                        axes.iter().map(|a| a.name.as_str()).zip(r.params.iter().copied()).collect();
                    json!({ "params": params, "max_real": r.max_real, "critical_k": r.critical_k,
                            "kind": r.kind, "ordering": r.ordering })
                })
                .collect();
            to_json(&docs)?
        }
        Format::Csv => {
            let mut s = String::new();
            for a in &axes {
                s.push_str(&a.name);
                s.push(',');
            }
            s.push_str("max_real,critical_k,kind,ordering\n");
            for r in &rows {
                for v in &r.params {
                    s.push_str(&format_float(*v));
                    s.push(',');
                }
                let ks: Vec<String> = r.critical_k.iter().map(|k| k.to_string()).collect();
                let kind = serde_json::to_value(r.kind)?;
                s.push_str(&format!(
                    "{},{},{},{}\n",
                    format_float(r.max_real),
                    ks.join(";"),
                    kind.as_str().unwrap_or_default(),
                    r.ordering
                ));
            }
            s
        }
    };
    emit(out, &text, stdout)
}

/// Runs a parsed command, writing normal output to `stdout`.
pub fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Spectrum { net, out } => cmd_spectrum(net, out, stdout),
        Command::Classify { net, out } => cmd_classify(net, out, stdout),
        Command::Design { n, ordering, out } => cmd_design(*n, ordering, out, stdout),
        Command::Simulate { net, sim, out } => cmd_simulate(net, sim, out.as_ref(), stdout),
        Command::Verify { net, sim, tol, allow_reverse, trajectory, out } => {
            cmd_verify(net, sim, *tol, *allow_reverse, trajectory.as_ref(), out, stdout)
        }
        Command::Sweep { net, grid, out } => cmd_sweep(net, grid, out, stdout),
    }
}

/// Process exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_config_error() {
        2
    } else {
        3
    }
}

fn error_json(kind: &str, message: &str) -> String {
    json!({ "error": kind, "message": message }).to_string()
}

/// Parses `args`, runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let _ = writeln!(stderr, "{}", error_json("Usage", e.render().to_string().trim()));
            return 2;
        }
    };
    match execute(&cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "{}", error_json(e.kind(), &e.to_string()));
            exit_code(&e)
        }
    }
}
