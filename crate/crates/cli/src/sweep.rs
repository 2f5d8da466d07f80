//! Grid evaluation of a [`SweepSpec`] into CSV rows.

use std::io::{self, Write};

use horizon_core::detectors::{Bath, DetectorEnv, OmegaConvention};
use horizon_core::dynamics::{fmt_float, kappa0_of, states_at, EvolutionConfig, KossakowskiSpec};
use horizon_core::hawking::{gisin_hawking_resources, gisin_hawking_state, GisinParams, HawkingEnv};
use horizon_core::qmat::wootters_concurrence;
use horizon_core::resources::{
    bures_entanglement, l1_coherence, trace_distance_discord_closed, trace_distance_discord_oracle,
    DiscordOracleOptions, ResourceReport, XState,
};
use horizon_core::sampling::{random_density, with_kappa0};
use horizon_core::DensityMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::config::{ConventionChoice, InitialState, Scenario, SweepSpec, Vacuum};

/// Off-X entries above this mark a dynamics state as not X-shaped.
const X_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
#[error("at {axis} = {value}, series `{series}`: {source}")]
pub struct SweepError {
    pub axis: String,
    pub value: f64,
    pub series: String,
    #[source]
    pub source: horizon_core::Error,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub seed: u64,
    /// Replace the closed-form discord by the minimiser with this many restarts.
    pub oracle_restarts: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flag {
    /// `R₀ − 1 > 1`, where the near-horizon approximation is doubtful.
    OutsideRindler,
    /// Dynamics residual still above the tolerance.
    NotConverged,
    /// Dynamics state with coherences outside the X pattern.
    NonX,
    /// `D_T` column from the minimiser rather than the closed form.
    OracleDiscord,
}

impl Flag {
    pub fn as_str(self) -> &'static str {
        match self {
            Flag::OutsideRindler => "outside_rindler",
            Flag::NotConverged => "not_converged",
            Flag::NonX => "non_x",
            Flag::OracleDiscord => "oracle_discord",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CsvRow {
    pub axis: f64,
    pub series: String,
    pub coherence: f64,
    pub discord: f64,
    pub concurrence: f64,
    pub bures: f64,
    pub flags: Vec<Flag>,
}

/// One curve: an assignment of every series parameter, plus the HH convention.
#[derive(Clone, Debug, PartialEq)]
pub struct Curve {
    pub values: Vec<(String, f64)>,
    pub convention: Option<OmegaConvention>,
}

impl Curve {
    /// CSV label: the bare value for one series parameter, `k=v;k=v` for
    /// several, with `:tanh` / `:half` appended for Hartle–Hawking runs.
    pub fn label(&self) -> String {
        let mut s = match self.values.as_slice() {
            [] => String::new(),
            [(_, v)] => format!("{v}"),
            many => many
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(";"),
        };
        if let Some(c) = self.convention {
            s.push(':');
            s.push_str(c.label());
        }
        s
    }
}

/// All curves of `spec` in series-declaration order (last parameter fastest),
/// each expanded over the requested conventions.
pub fn curves(spec: &SweepSpec) -> Vec<Curve> {
    let mut combos: Vec<Vec<(String, f64)>> = vec![Vec::new()];
    for (key, values) in &spec.series {
        combos = combos
            .into_iter()
            .flat_map(|c| {
                values.iter().map(move |&v| {
                    let mut next = c.clone();
                    next.push((key.clone(), v));
                    next
                })
            })
            .collect();
    }
    let conventions: Vec<Option<OmegaConvention>> =
        if spec.scenario == Scenario::StaticDetectors && spec.vacuum == Some(Vacuum::HartleHawking) {
            match spec.convention.unwrap_or(ConventionChoice::Tanh) {
                ConventionChoice::Tanh => vec![Some(OmegaConvention::TanhTheta)],
                ConventionChoice::Half => vec![Some(OmegaConvention::HalfTheta)],
                ConventionChoice::Both => {
                    vec![Some(OmegaConvention::TanhTheta), Some(OmegaConvention::HalfTheta)]
                }
            }
        } else {
            vec![None]
        };
    combos
        .into_iter()
        .flat_map(|values| {
            conventions.iter().map(move |&convention| Curve {
                values: values.clone(),
                convention,
            })
        })
        .collect()
}

struct Point<'a> {
    spec: &'a SweepSpec,
    curve: &'a Curve,
    axis_value: f64,
}

impl Point<'_> {
    fn get(&self, key: &str) -> f64 {
        if self.spec.axis.name == key {
            return self.axis_value;
        }
        if let Some((_, v)) = self.curve.values.iter().find(|(k, _)| k == key) {
            return *v;
        }
        self.spec.fixed[key]
    }
}

/// Value of a non-axis parameter on `curve`: the series value if swept, else the fixed one.
pub fn curve_param(spec: &SweepSpec, curve: &Curve, key: &str) -> f64 {
    Point {
        spec,
        curve,
        axis_value: f64::NAN,
    }
    .get(key)
}

fn oracle_rng(opts: &RunOptions, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(opts.seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn oracle_discord(rho: &DensityMatrix, restarts: usize, opts: &RunOptions, index: usize) -> f64 {
    let o = DiscordOracleOptions {
        restarts,
        ..Default::default()
    };
    trace_distance_discord_oracle(rho, &o, &mut oracle_rng(opts, index))
}

fn row(axis: f64, curve: &Curve, r: ResourceReport, flags: Vec<Flag>) -> CsvRow {
    CsvRow {
        axis,
        series: curve.label(),
        coherence: r.coherence,
        discord: r.discord,
        concurrence: r.concurrence,
        bures: r.bures,
        flags,
    }
}

fn static_point(p: &Point, opts: &RunOptions, index: usize) -> horizon_core::Result<CsvRow> {
    let mut flags = Vec::new();
    let (mut report, state) = match p.spec.scenario {
        Scenario::GisinHawking => {
            let g = GisinParams::new(p.get("alpha"), p.get("phi"))?;
            let env = HawkingEnv::new(p.get("omega"), p.get("t_hawking"), p.get("r0"))?;
            if !env.rindler_valid() {
                flags.push(Flag::OutsideRindler);
            }
            (gisin_hawking_resources(&g, &env)?, lazy_state(move || gisin_hawking_state(&g, &env)))
        }
        Scenario::Unruh => {
            let bath = Bath::Unruh {
                t_unruh: p.get("t_unruh"),
                epsilon: p.get("epsilon"),
            };
            let env = DetectorEnv::new(bath, p.get("kappa0"))?;
            (env.resources()?, lazy_state(move || env.equilibrium()))
        }
        Scenario::StaticDetectors => {
            let bath = match (p.spec.vacuum, p.curve.convention) {
                (Some(Vacuum::HartleHawking), Some(convention)) => {
                    let r0 = p.get("r0");
                    if r0 - 1.0 > 1.0 {
                        flags.push(Flag::OutsideRindler);
                    }
                    Bath::HartleHawking {
                        omega: p.get("omega"),
                        t_hawking: p.get("t_hawking"),
                        r0,
                        convention,
                    }
                }
                _ => Bath::Boulware,
            };
            let env = DetectorEnv::new(bath, p.get("kappa0"))?;
            (env.resources()?, lazy_state(move || env.equilibrium()))
        }
        Scenario::Dynamics => unreachable!("dynamics rows come from trajectories"),
    };
    if let Some(restarts) = opts.oracle_restarts {
        let rho = state()?.to_density()?;
        report.discord = oracle_discord(&rho, restarts, opts, index);
        flags.push(Flag::OracleDiscord);
    }
    Ok(row(p.axis_value, p.curve, report, flags))
}

fn lazy_state<F>(f: F) -> Box<dyn Fn() -> horizon_core::Result<XState>>
where
    F: Fn() -> horizon_core::Result<XState> + 'static,
{
    Box::new(f)
}

fn initial_state(kind: InitialState, kappa0: f64, seed: u64) -> horizon_core::Result<DensityMatrix> {
    let base = match kind {
        InitialState::PhiPlus => DensityMatrix::phi_plus(),
        InitialState::Singlet => DensityMatrix::singlet(),
        InitialState::Random => random_density(&mut ChaCha8Rng::seed_from_u64(seed)),
    };
    with_kappa0(&base, kappa0)
}

/// The Kossakowski coefficients, step size and starting state of one dynamics curve.
pub fn dynamics_setup(
    spec: &SweepSpec,
    curve: &Curve,
    seed: u64,
) -> horizon_core::Result<(KossakowskiSpec, f64, DensityMatrix)> {
    let p = Point {
        spec,
        curve,
        axis_value: 0.0,
    };
    let gp = p.get("gamma_plus");
    let k = KossakowskiSpec::new(gp, p.get("ratio") * gp, p.get("gamma_zero"), [0.0, 0.0, 1.0])?;
    let dt = EvolutionConfig::max_dt(gp).min(0.01);
    let rho0 = initial_state(spec.initial.unwrap_or(InitialState::PhiPlus), p.get("kappa0"), seed)?;
    Ok((k, dt, rho0))
}

fn dynamics_curve(
    spec: &SweepSpec,
    curve: &Curve,
    curve_index: usize,
    opts: &RunOptions,
) -> Result<Vec<CsvRow>, SweepError> {
    let fail = |value: f64| {
        let series = curve.label();
        let axis = spec.axis.name.clone();
        move |source| SweepError {
            axis,
            value,
            series,
            source,
        }
    };
    let seed = opts.seed.wrapping_add(curve_index as u64);
    let (k, dt, rho0) = dynamics_setup(spec, curve, seed).map_err(fail(spec.axis.start))?;
    let tol = spec.fixed["tol"];
    let eps = Point {
        spec,
        curve,
        axis_value: 0.0,
    }
    .get("epsilon");
    let times = spec.axis.values();
    let states = states_at(&rho0, &k, eps, dt, &times).map_err(fail(spec.axis.start))?;
    debug_assert!((kappa0_of(&states[0].0) - kappa0_of(&rho0)).abs() < 1e-12);
    let n_curves = curves(spec).len();
    times
        .iter()
        .zip(states)
        .enumerate()
        .map(|(i, (&t, (rho, residual)))| {
            let mut flags = Vec::new();
            if residual > tol {
                flags.push(Flag::NotConverged);
            }
            let concurrence = wootters_concurrence(&rho);
            let discord = if let Some(restarts) = opts.oracle_restarts {
                flags.push(Flag::OracleDiscord);
                oracle_discord(&rho, restarts, opts, i * n_curves + curve_index)
            } else {
                match XState::from_density(&rho, X_TOL) {
                    Ok(x) => trace_distance_discord_closed(&x),
                    Err(_) => {
                        flags.push(Flag::NonX);
                        let m = rho.matrix();
                        let x = XState {
                            s11: m[(0, 0)].re,
                            s22: m[(1, 1)].re,
                            s33: m[(2, 2)].re,
                            s44: m[(3, 3)].re,
                            s14: m[(0, 3)].norm(),
                            s23: m[(1, 2)].norm(),
                        };
                        trace_distance_discord_closed(&x)
                    }
                }
            };
            let report = ResourceReport {
                coherence: l1_coherence(&rho),
                discord,
                concurrence,
                bures: bures_entanglement(concurrence.min(1.0)).map_err(fail(t))?,
            };
            Ok(row(t, curve, report, flags))
        })
        .collect()
}

/// Evaluates every grid point. Rows are axis-major, series-minor.
pub fn run_sweep(spec: &SweepSpec, opts: &RunOptions) -> Result<Vec<CsvRow>, SweepError> {
    let curves = curves(spec);
    let axis = spec.axis.values();
    let n = curves.len();

    if spec.scenario == Scenario::Dynamics {
        let per_curve: Vec<Vec<CsvRow>> = curves
            .par_iter()
            .enumerate()
            .map(|(ci, c)| dynamics_curve(spec, c, ci, opts))
            .collect::<Result<_, _>>()?;
        let mut rows = Vec::with_capacity(axis.len() * n);
        let mut iters: Vec<_> = per_curve.into_iter().map(|v| v.into_iter()).collect();
        for _ in 0..axis.len() {
            for it in iters.iter_mut() {
                rows.push(it.next().expect("one row per axis value"));
            }
        }
        return Ok(rows);
    }

    (0..axis.len() * n)
        .into_par_iter()
        .map(|idx| {
            let (ai, ci) = (idx / n, idx % n);
            let p = Point {
                spec,
                curve: &curves[ci],
                axis_value: axis[ai],
            };
            static_point(&p, opts, idx).map_err(|source| SweepError {
                axis: spec.axis.name.clone(),
                value: axis[ai],
                series: curves[ci].label(),
                source,
            })
        })
        .collect()
}

/// Header of the CSV table.
pub fn csv_header(spec: &SweepSpec) -> String {
    let series = if spec.series.is_empty() {
        "series".to_string()
    } else {
        spec.series.iter().map(|(k, _)| k.as_str()).collect::<Vec<_>>().join(";")
    };
    format!("{},{series},C_H,D_T,concurrence,B_d,flags", spec.axis.name)
}

/// Writes the header and one line per row, `\n`-terminated.
pub fn write_csv<W: Write>(rows: &[CsvRow], spec: &SweepSpec, mut out: W) -> io::Result<()> {
    writeln!(out, "{}", csv_header(spec))?;
    for r in rows {
        let flags: Vec<&str> = r.flags.iter().map(|f| f.as_str()).collect();
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            fmt_float(r.axis),
            r.series,
            fmt_float(r.coherence),
            fmt_float(r.discord),
            fmt_float(r.concurrence),
            fmt_float(r.bures),
            flags.join(";")
        )?;
    }
    Ok(())
}
