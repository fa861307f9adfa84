//! `biquat`: energy tables, density grids, shell probabilities, spinor and
//! rotation evaluation, and the invariant suites.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification
//! failure.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::f64::consts::{PI, TAU};
use std::io::{self, Write};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use biquat::hydrogen::{self, QuantumNumbers};
use biquat::special::gauss_legendre;
use biquat::spin::{conjugation_closed_form, rotate_operator, Axis, RotationOperator, SpinOperator};
use biquat::spinor::{clebsch_coefficients, measure_probability, spinor_as_vector, SpinBasis, SpinorFunction};
use biquat::units::{bohr_to_natural, natural_to_bohr, MC2_EV};
use biquat::verify::{self, Suite};
use biquat::{Biquaternion, Error, HalfInt};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

const VERIFY_BUDGET: Duration = Duration::from_secs(60);

#[derive(Parser)]
#[command(name = "biquat", version, about = "Biquaternion spin and relativistic hydrogen calculator")]
struct Cli {
    /// Emit CSV instead of JSON
    #[arg(long, global = true)]
    csv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bound-state energies over a range of n and k
    Energy(EnergyArgs),
    /// Probability density on an (r, theta) grid, averaged over phi
    Density(DensityArgs),
    /// Probability of finding the electron in a radial shell
    Probability(ProbabilityArgs),
    /// Spin-angle function values and spin-up/down densities
    Spinor(SpinorArgs),
    /// Rotate a spin operator with the biquaternion rotation operator
    Rotate(RotateArgs),
    /// Run the invariant suites
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum EnergyUnits {
    Mc2,
    #[value(name = "eV")]
    #[serde(rename = "eV")]
    Ev,
}

#[derive(Args, Serialize)]
struct EnergyArgs {
    #[arg(long, default_value_t = 1)]
    z: u32,
    /// Principal quantum number or inclusive range `lo:hi`
    #[arg(long, default_value = "1:3", value_parser = parse_range)]
    n: (u32, u32),
    /// Comma-separated k values; all valid k for each n when omitted
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    k: Option<Vec<i32>>,
    #[arg(long, value_enum, default_value_t = EnergyUnits::Mc2)]
    units: EnergyUnits,
}

#[derive(Args, Serialize)]
struct StateArgs {
    #[arg(long, default_value_t = 1)]
    z: u32,
    #[arg(long, default_value_t = 1)]
    n: u32,
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    k: i32,
    /// Magnetic quantum number such as `1/2` or `-3/2`; defaults to `m_j = j`
    #[arg(long, allow_hyphen_values = true, value_parser = parse_half)]
    mj: Option<HalfInt>,
}

#[derive(Args, Serialize)]
struct DensityArgs {
    #[command(flatten)]
    #[serde(flatten)]
    state: StateArgs,
    /// Node counts `radial:polar`
    #[arg(long, default_value = "64:32", value_parser = parse_grid)]
    grid: (usize, usize),
    /// Outer radius in Bohr radii; chosen from the state when omitted
    #[arg(long)]
    rmax: Option<f64>,
}

#[derive(Args, Serialize)]
struct ProbabilityArgs {
    #[command(flatten)]
    #[serde(flatten)]
    state: StateArgs,
    /// Inner radius in Bohr radii
    #[arg(long, default_value_t = 0.0)]
    r_lo: f64,
    /// Outer radius in Bohr radii (`inf` for no bound)
    #[arg(long, default_value = "inf")]
    r_hi: f64,
    /// Relative tolerance of the radial integrals
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
}

#[derive(Args, Serialize)]
struct SpinorArgs {
    #[arg(long)]
    l: u32,
    #[arg(long, value_parser = parse_half)]
    j: HalfInt,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_half)]
    mj: HalfInt,
    #[arg(long, default_value_t = PI / 3.0)]
    theta: f64,
    #[arg(long, default_value_t = PI / 4.0)]
    phi: f64,
}

#[derive(Args, Serialize)]
struct RotateArgs {
    /// Rotation axis: x, y or z
    #[arg(long, value_parser = parse_axis)]
    #[serde(serialize_with = "axis_name")]
    axis: Axis,
    /// Rotation angle in radians
    #[arg(long, allow_hyphen_values = true)]
    angle: f64,
    /// Spin operator: x, y or z
    #[arg(long, value_parser = parse_axis)]
    #[serde(serialize_with = "axis_name")]
    op: Axis,
}

#[derive(Args, Serialize)]
struct VerifyArgs {
    /// algebra, spin, rotation, spinor, hydrogen, dirac or all
    #[arg(default_value = "all", value_parser = parse_suite)]
    suite: Suite,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
    let (lo, hi) = match s.split_once(':') {
        Some((a, b)) => (num(a)?, num(b)?),
        None => (num(s)?, num(s)?),
    };
    if lo == 0 || hi < lo {
        return Err(format!("need 1 <= lo <= hi, got {s:?}"));
    }
    Ok((lo, hi))
}

fn parse_grid(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected `radial:polar`, got {s:?}"))?;
    let num = |t: &str| match t.trim().parse::<usize>() {
        Ok(v) if (1..=4096).contains(&v) => Ok(v),
        _ => Err(format!("node count must be in 1..=4096, got {t:?}")),
    };
    Ok((num(a)?, num(b)?))
}

fn parse_half(s: &str) -> Result<HalfInt, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_axis(s: &str) -> Result<Axis, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn axis_name<S: serde::Serializer>(a: &Axis, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(a.name())
}

/// Failure classes, one per nonzero exit code.
enum Failure {
    Usage(String),
    Domain(String),
    Verification,
    /// The reader went away (`| head`); not an error.
    Closed,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Domain(_) => 2,
            Failure::Verification => 3,
            Failure::Closed => 0,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Usage(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Domain(format!("output error: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => io.into(),
            other => Failure::Domain(format!("output error: {other:?}")),
        }
    }
}

/// Invalid quantum numbers are a usage error for the single-state commands.
fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

#[derive(Serialize, Default)]
struct Units {
    #[serde(skip_serializing_if = "Option::is_none")]
    energy: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    length: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wavenumber: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    density: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    angle: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spin: Option<&'static str>,
}

#[derive(Serialize)]
struct OutputRecord<'a, I: Serialize, R: Serialize> {
    command: &'static str,
    input: &'a I,
    units: Units,
    #[serde(skip_serializing_if = "Option::is_none")]
    tolerance: Option<f64>,
    result: R,
}

/// Rows for `--csv`.
trait Table {
    fn header(&self) -> Vec<&'static str>;
    fn rows(&self) -> Vec<Vec<String>>;
}

fn num(x: f64) -> String {
    // shortest round-trip form, exponent for extreme magnitudes
    format!("{x:?}")
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

fn emit<I: Serialize, R: Serialize + Table>(csv_out: bool, record: &OutputRecord<'_, I, R>) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if csv_out {
        let mut w = csv::Writer::from_writer(&mut out);
        w.write_record(record.result.header())?;
        for row in record.result.rows() {
            w.write_record(row)?;
        }
        w.flush()?;
    } else {
        let text = serde_json::to_string_pretty(record).map_err(|e| Failure::Domain(e.to_string()))?;
        writeln!(out, "{text}")?;
    }
    Ok(())
}

#[derive(Serialize)]
struct EnergyRow {
    n: u32,
    k: i32,
    j: Option<HalfInt>,
    l: Option<u32>,
    energy: Option<f64>,
    binding: Option<f64>,
    s: Option<f64>,
    c: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct EnergyTable(Vec<EnergyRow>);

impl Table for EnergyTable {
    fn header(&self) -> Vec<&'static str> {
        vec!["n", "k", "j", "l", "energy", "binding", "s", "c", "error"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.0
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    r.k.to_string(),
                    r.j.map(|j| j.to_string()).unwrap_or_default(),
                    r.l.map(|l| l.to_string()).unwrap_or_default(),
                    opt(r.energy),
                    opt(r.binding),
                    opt(r.s),
                    opt(r.c),
                    r.error.clone().unwrap_or_default(),
                ]
            })
            .collect()
    }
}

fn energy_row(z: u32, n: u32, k: i32, scale: f64) -> EnergyRow {
    let row = QuantumNumbers::stretched(z, n, k).and_then(|q| Ok((q, hydrogen::sommerfeld(f64::from(z), n, k)?)));
    match row {
        Ok((q, level)) => EnergyRow {
            n,
            k,
            j: Some(q.j()),
            l: Some(q.l_major()),
            energy: Some(level.energy * scale),
            binding: Some(level.binding * scale),
            s: Some(level.s),
            c: Some(level.c),
            error: None,
        },
        Err(e) => EnergyRow {
            n,
            k,
            j: None,
            l: None,
            energy: None,
            binding: None,
            s: None,
            c: None,
            error: Some(e.to_string()),
        },
    }
}

fn cmd_energy(csv_out: bool, args: &EnergyArgs) -> Result<(), Failure> {
    let scale = match args.units {
        EnergyUnits::Mc2 => 1.0,
        EnergyUnits::Ev => MC2_EV,
    };
    let mut rows = Vec::new();
    for n in args.n.0..=args.n.1 {
        let ks: Vec<i32> = match &args.k {
            Some(ks) => ks.clone(),
            None => (-(n as i32)..n as i32).filter(|k| *k != 0).collect(),
        };
        rows.extend(ks.into_iter().map(|k| energy_row(args.z, n, k, scale)));
    }
    if rows.is_empty() {
        return Err(Failure::Usage("no (n, k) pairs requested".into()));
    }
    let all_failed = rows.iter().all(|r| r.error.is_some());
    let units = Units {
        energy: Some(match args.units {
            EnergyUnits::Mc2 => "mc2",
            EnergyUnits::Ev => "eV",
        }),
        wavenumber: Some("mc/hbar"),
        ..Units::default()
    };
    emit(csv_out, &OutputRecord { command: "energy", input: args, units, tolerance: None, result: EnergyTable(rows) })?;
    if all_failed {
        return Err(Failure::Domain("every requested state is invalid".into()));
    }
    Ok(())
}

fn state(args: &StateArgs) -> Result<QuantumNumbers, Failure> {
    let q = QuantumNumbers::stretched(args.z, args.n, args.k).map_err(usage)?;
    match args.mj {
        Some(mj) => QuantumNumbers::new(args.z, args.n, args.k, mj).map_err(usage),
        None => Ok(q),
    }
}

#[derive(Serialize)]
struct DensityGrid {
    r_max: f64,
    r: Vec<f64>,
    theta: Vec<f64>,
    /// `density[i][j]` at `(r[i], theta[j])`.
    density: Vec<Vec<f64>>,
    grid_integral: f64,
}

impl Table for DensityGrid {
    fn header(&self) -> Vec<&'static str> {
        vec!["r", "theta", "density"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let mut out = Vec::new();
        for (r, row) in self.r.iter().zip(&self.density) {
            for (t, d) in self.theta.iter().zip(row) {
                out.push(vec![num(*r), num(*t), num(*d)]);
            }
        }
        out
    }
}

const DENSITY_PHI_NODES: usize = 8;

fn cmd_density(csv_out: bool, args: &DensityArgs) -> Result<(), Failure> {
    let q = state(&args.state)?;
    let w = hydrogen::assemble_wavefunction(&q)?;
    let r_max = match args.rmax {
        Some(r) if r.is_finite() && r > 0.0 => r,
        Some(r) => return Err(Failure::Usage(format!("--rmax must be positive, got {r}"))),
        None => natural_to_bohr(w.rho_max / w.radial.c),
    };
    let (nr, nt) = args.grid;
    // r = r_max u^2 clusters nodes near the origin; theta nodes are Gauss in cos(theta)
    let u_rule: Vec<(f64, f64)> = gauss_legendre(nr)?.iter().map(|(x, w)| (0.5 * (x + 1.0), 0.5 * w)).collect();
    let t_rule: Vec<(f64, f64)> = gauss_legendre(nt)?.iter().map(|(x, w)| (x.acos(), *w)).collect();
    let to_bohr3 = bohr_to_natural(1.0).powi(3);
    let mut density = Vec::with_capacity(nr);
    let mut integral = 0.0;
    for &(u, wu) in &u_rule {
        let r = r_max * u * u;
        let r_nat = bohr_to_natural(r);
        let mut row = Vec::with_capacity(nt);
        for &(t, wt) in &t_rule {
            let mut avg = 0.0;
            for j in 0..DENSITY_PHI_NODES {
                let p = TAU * j as f64 / DENSITY_PHI_NODES as f64;
                avg += hydrogen::probability_density(&w, r_nat, t, p)?;
            }
            let d = avg / DENSITY_PHI_NODES as f64 * to_bohr3;
            integral += wu * wt * TAU * d * r * r * 2.0 * r_max * u;
            row.push(d);
        }
        density.push(row);
    }
    let grid = DensityGrid {
        r_max,
        r: u_rule.iter().map(|(u, _)| r_max * u * u).collect(),
        theta: t_rule.iter().map(|(t, _)| *t).collect(),
        density,
        grid_integral: integral,
    };
    let units = Units { length: Some("bohr"), density: Some("bohr^-3"), angle: Some("rad"), ..Units::default() };
    emit(csv_out, &OutputRecord { command: "density", input: args, units, tolerance: None, result: grid })
}

#[derive(Serialize)]
struct ProbabilityResult {
    probability: f64,
    error_estimate: f64,
}

impl Table for ProbabilityResult {
    fn header(&self) -> Vec<&'static str> {
        vec!["probability", "error_estimate"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![num(self.probability), num(self.error_estimate)]]
    }
}

fn cmd_probability(csv_out: bool, args: &ProbabilityArgs) -> Result<(), Failure> {
    let q = state(&args.state)?;
    if !(args.r_lo >= 0.0) || !(args.r_hi > args.r_lo) {
        return Err(Failure::Usage(format!("need 0 <= r_lo < r_hi, got [{}, {}]", args.r_lo, args.r_hi)));
    }
    if !(args.tol > 0.0) {
        return Err(Failure::Usage(format!("--tol must be positive, got {}", args.tol)));
    }
    let w = hydrogen::assemble_wavefunction(&q)?;
    let p = hydrogen::probability_in_region_tol(&w, bohr_to_natural(args.r_lo), bohr_to_natural(args.r_hi), args.tol)?;
    let units = Units { length: Some("bohr"), ..Units::default() };
    let result = ProbabilityResult { probability: p.value, error_estimate: p.error_estimate };
    emit(csv_out, &OutputRecord { command: "probability", input: args, units, tolerance: Some(args.tol), result })
}

#[derive(Serialize)]
struct SpinorResult {
    c1: f64,
    c2: f64,
    m_up: i32,
    m_down: i32,
    /// Components on the spin-up and spin-down kets, as `[re, im]`.
    up: [f64; 2],
    down: [f64; 2],
    density_up: f64,
    density_down: f64,
}

impl Table for SpinorResult {
    fn header(&self) -> Vec<&'static str> {
        vec!["c1", "c2", "m_up", "m_down", "up_re", "up_im", "down_re", "down_im", "density_up", "density_down"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            num(self.c1),
            num(self.c2),
            self.m_up.to_string(),
            self.m_down.to_string(),
            num(self.up[0]),
            num(self.up[1]),
            num(self.down[0]),
            num(self.down[1]),
            num(self.density_up),
            num(self.density_down),
        ]]
    }
}

fn cmd_spinor(csv_out: bool, args: &SpinorArgs) -> Result<(), Failure> {
    clebsch_coefficients(args.l, args.j, args.mj).map_err(usage)?;
    let s = SpinorFunction::new(args.l, args.j, args.mj).map_err(usage)?;
    let v = spinor_as_vector(&s, args.theta, args.phi).map_err(usage)?;
    let (m_up, m_down) = s.orbital_m();
    let result = SpinorResult {
        c1: s.c1,
        c2: s.c2,
        m_up,
        m_down,
        up: [v.0[0].re, v.0[0].im],
        down: [v.0[1].re, v.0[1].im],
        density_up: measure_probability(SpinBasis::Up, &s, args.theta, args.phi)?,
        density_down: measure_probability(SpinBasis::Down, &s, args.theta, args.phi)?,
    };
    let units = Units { angle: Some("rad"), density: Some("sr^-1"), ..Units::default() };
    emit(csv_out, &OutputRecord { command: "spinor", input: args, units, tolerance: None, result })
}

#[derive(Serialize)]
struct RotateResult {
    /// `e0..e3` coefficients as `[re, im]` pairs.
    rotated: [[f64; 2]; 4],
    closed_form: [[f64; 2]; 4],
    deviation: f64,
}

fn pairs(q: &Biquaternion) -> [[f64; 2]; 4] {
    q.0.map(|z| [z.re, z.im])
}

impl Table for RotateResult {
    fn header(&self) -> Vec<&'static str> {
        vec!["form", "e0_re", "e0_im", "e1_re", "e1_im", "e2_re", "e2_im", "e3_re", "e3_im"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        [("rotated", &self.rotated), ("closed_form", &self.closed_form)]
            .into_iter()
            .map(|(name, c)| std::iter::once(name.to_string()).chain(c.iter().flatten().map(|x| num(*x))).collect())
            .collect()
    }
}

fn cmd_rotate(csv_out: bool, args: &RotateArgs) -> Result<(), Failure> {
    if !args.angle.is_finite() {
        return Err(Failure::Usage(format!("--angle must be finite, got {}", args.angle)));
    }
    let d = RotationOperator::about(args.axis, args.angle);
    let rotated = rotate_operator(&d, &SpinOperator::along(args.op));
    let closed = conjugation_closed_form(args.axis, args.op, args.angle).scale_real(0.5);
    let result = RotateResult {
        rotated: pairs(&rotated),
        closed_form: pairs(&closed),
        deviation: rotated.max_abs_diff(&closed),
    };
    let units = Units { angle: Some("rad"), spin: Some("hbar"), ..Units::default() };
    emit(csv_out, &OutputRecord { command: "rotate", input: args, units, tolerance: None, result })
}

impl Table for verify::VerifyReport {
    fn header(&self) -> Vec<&'static str> {
        vec!["suite", "check", "max_deviation", "tolerance", "passed", "informational", "error"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.suites
            .iter()
            .flat_map(|s| {
                s.checks.iter().map(move |c| {
                    vec![
                        s.suite.name().to_string(),
                        c.name.clone(),
                        opt(c.max_deviation),
                        num(c.tolerance),
                        c.passed.to_string(),
                        c.informational.to_string(),
                        c.error.clone().unwrap_or_default(),
                    ]
                })
            })
            .collect()
    }
}

fn cmd_verify(csv_out: bool, args: &VerifyArgs) -> Result<(), Failure> {
    let start = Instant::now();
    let report = verify::run(args.suite, args.seed);
    let elapsed = start.elapsed();
    let passed = report.passed;
    emit(
        csv_out,
        &OutputRecord { command: "verify", input: args, units: Units::default(), tolerance: None, result: report },
    )?;
    if elapsed > VERIFY_BUDGET {
        eprintln!(
            "warning: verification took {:.1} s, over the {} s budget",
            elapsed.as_secs_f64(),
            VERIFY_BUDGET.as_secs()
        );
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = match &cli.command {
        Command::Energy(a) => cmd_energy(cli.csv, a),
        Command::Density(a) => cmd_density(cli.csv, a),
        Command::Probability(a) => cmd_probability(cli.csv, a),
        Command::Spinor(a) => cmd_spinor(cli.csv, a),
        Command::Rotate(a) => cmd_rotate(cli.csv, a),
        Command::Verify(a) => cmd_verify(cli.csv, a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Domain(m) => eprintln!("biquat: {m}"),
                Failure::Verification => eprintln!("biquat: verification failed"),
                Failure::Closed => {}
            }
            ExitCode::from(f.code())
        }
    }
}
