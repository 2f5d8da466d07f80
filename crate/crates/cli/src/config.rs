//! Sweep configuration: a line-oriented `key = value` document with
//! `[section]` headers.
//!
//! ```text
//! scenario = gisin-hawking
//!
//! [axis]
//! name = t_hawking
//! start = 0.1
//! stop = 20
//! points = 200
//! scale = linear
//!
//! [fixed]
//! phi = 0.6
//!
//! [series]
//! alpha = 0.2, 0.4, 0.6, 0.8, 1.0
//!
//! [output]
//! csv = fig2.csv
//! svg = fig2.svg
//! ```
//!
//! Top-level keys: `scenario` (required), `vacuum` and `convention`
//! (static-detectors only), `initial` (dynamics only). `#` starts a comment.
//! Every parameter not on the axis or in a series takes its default, listed
//! by [`defaults`].

use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_4;
use std::fmt::{self, Write as _};
use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid `{key}`: {message}")]
    Validation { key: String, message: String },
}

fn parse_err(line: usize, message: impl Into<String>) -> ConfigError {
    ConfigError::Parse {
        line,
        message: message.into(),
    }
}

fn invalid(key: &str, message: impl Into<String>) -> ConfigError {
    ConfigError::Validation {
        key: key.to_string(),
        message: message.into(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scenario {
    GisinHawking,
    Unruh,
    StaticDetectors,
    Dynamics,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Vacuum {
    Boulware,
    HartleHawking,
}

/// Which Hartle–Hawking ratio convention(s) to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConventionChoice {
    Tanh,
    Half,
    Both,
}

/// Initial state of a dynamics run before its `κ₀` is matched.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InitialState {
    PhiPlus,
    Singlet,
    Random,
}

macro_rules! keyword_enum {
    ($ty:ty, $what:literal, { $($name:literal => $variant:expr),+ $(,)? }) => {
        impl FromStr for $ty {
            type Err = String;
            fn from_str(s: &str) -> Result<Self, String> {
                match s {
                    $($name => Ok($variant),)+
                    _ => Err(format!(
                        concat!("unknown ", $what, " `{}` (expected one of: {})"),
                        s,
                        [$($name),+].join(", ")
                    )),
                }
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                $(if *self == $variant {
                    return f.write_str($name);
                })+
                unreachable!()
            }
        }
    };
}

keyword_enum!(Scenario, "scenario", {
    "gisin-hawking" => Scenario::GisinHawking,
    "unruh" => Scenario::Unruh,
    "static-detectors" => Scenario::StaticDetectors,
    "dynamics" => Scenario::Dynamics,
});
keyword_enum!(Scale, "scale", { "linear" => Scale::Linear, "log" => Scale::Log });
keyword_enum!(Vacuum, "vacuum", {
    "boulware" => Vacuum::Boulware,
    "hartle-hawking" => Vacuum::HartleHawking,
});
keyword_enum!(ConventionChoice, "convention", {
    "tanh" => ConventionChoice::Tanh,
    "half" => ConventionChoice::Half,
    "both" => ConventionChoice::Both,
});
keyword_enum!(InitialState, "initial state", {
    "phi-plus" => InitialState::PhiPlus,
    "singlet" => InitialState::Singlet,
    "random" => InitialState::Random,
});

#[derive(Clone, Debug, PartialEq)]
pub struct Axis {
    pub name: String,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub scale: Scale,
}

impl Axis {
    /// Grid values from `start` to `stop` inclusive.
    pub fn values(&self) -> Vec<f64> {
        let n = self.points;
        let last = (n - 1) as f64;
        (0..n)
            .map(|i| {
                if i == n - 1 {
                    return self.stop;
                }
                let f = i as f64 / last;
                match self.scale {
                    Scale::Linear => self.start + (self.stop - self.start) * f,
                    Scale::Log => self.start * (self.stop / self.start).powf(f),
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub csv: PathBuf,
    pub svg: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub scenario: Scenario,
    pub axis: Axis,
    /// Every scenario parameter that is neither on the axis nor in a series.
    pub fixed: BTreeMap<String, f64>,
    /// One curve per element of the Cartesian product, in declaration order.
    pub series: Vec<(String, Vec<f64>)>,
    pub vacuum: Option<Vacuum>,
    pub convention: Option<ConventionChoice>,
    pub initial: Option<InitialState>,
    pub output: Output,
}

/// Allowed range of a parameter.
#[derive(Clone, Copy, Debug)]
enum Domain {
    Closed(f64, f64),
    Positive,
    NonNegative,
    AboveOne,
    Finite,
}

impl Domain {
    fn check(self, key: &str, v: f64) -> Result<(), ConfigError> {
        let ok = match self {
            Domain::Closed(lo, hi) => (lo..=hi).contains(&v),
            Domain::Positive => v > 0.0 && v.is_finite(),
            Domain::NonNegative => v >= 0.0 && v.is_finite(),
            Domain::AboveOne => v > 1.0 && v.is_finite(),
            Domain::Finite => v.is_finite(),
        };
        if ok {
            return Ok(());
        }
        let rule = match self {
            Domain::Closed(lo, hi) => format!("{key} must lie in [{lo}, {hi}]"),
            Domain::Positive => format!("{key} must be positive"),
            Domain::NonNegative => format!("{key} must be non-negative"),
            Domain::AboveOne => format!("{key} must exceed 1"),
            Domain::Finite => format!("{key} must be finite"),
        };
        Err(invalid(key, format!("{rule}, got {v}")))
    }
}

/// Parameter names, domains and defaults of a scenario.
fn parameters(scenario: Scenario) -> &'static [(&'static str, Domain, f64)] {
    use Domain::*;
    match scenario {
        Scenario::GisinHawking => &[
            ("alpha", Closed(0.0, 1.0), 1.0),
            ("phi", Closed(0.0, std::f64::consts::FRAC_PI_2), FRAC_PI_4),
            ("omega", NonNegative, 10.0),
            ("t_hawking", NonNegative, 1.0),
            ("r0", AboveOne, 1.1),
        ],
        Scenario::Unruh => &[
            ("kappa0", Closed(-3.0, 1.0), 0.1),
            ("epsilon", Positive, 5.0),
            ("t_unruh", Positive, 1.0),
        ],
        Scenario::StaticDetectors => &[
            ("kappa0", Closed(-3.0, 1.0), 0.6),
            ("omega", NonNegative, 50.0),
            ("t_hawking", NonNegative, 1.0),
            ("r0", AboveOne, 1.1),
        ],
        Scenario::Dynamics => &[
            ("time", NonNegative, 10.0),
            ("ratio", Closed(0.0, 1.0), 0.5),
            ("kappa0", Closed(-3.0, 1.0), 0.6),
            ("epsilon", Finite, 5.0),
            ("gamma_plus", Positive, 1.0),
            ("gamma_zero", Finite, 0.0),
            ("tol", Positive, 1e-10),
        ],
    }
}

/// Parameters that only make sense as fixed values.
fn fixed_only(scenario: Scenario) -> &'static [&'static str] {
    match scenario {
        Scenario::Dynamics => &["gamma_plus", "gamma_zero", "tol"],
        _ => &[],
    }
}

/// `(name, default)` for every parameter of `scenario`.
pub fn defaults(scenario: Scenario) -> Vec<(&'static str, f64)> {
    parameters(scenario).iter().map(|(k, _, d)| (*k, *d)).collect()
}

fn domain_of(scenario: Scenario, key: &str) -> Option<Domain> {
    parameters(scenario).iter().find(|(k, _, _)| *k == key).map(|(_, d, _)| *d)
}

fn parse_number(line: usize, key: &str, v: &str) -> Result<f64, ConfigError> {
    v.parse::<f64>()
        .map_err(|_| parse_err(line, format!("`{key}` expects a number, got `{v}`")))
}

#[derive(Default)]
struct Raw {
    scenario: Option<(usize, String)>,
    vacuum: Option<(usize, String)>,
    convention: Option<(usize, String)>,
    initial: Option<(usize, String)>,
    axis: BTreeMap<String, (usize, String)>,
    fixed: Vec<(usize, String, String)>,
    series: Vec<(usize, String, String)>,
    output: BTreeMap<String, (usize, String)>,
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    Top,
    Axis,
    Fixed,
    Series,
    Output,
}

fn read_raw(text: &str) -> Result<Raw, ConfigError> {
    let mut raw = Raw::default();
    let mut section = Section::Top;
    let mut seen = std::collections::HashSet::new();
    for (idx, full) in text.lines().enumerate() {
        let line = idx + 1;
        let body = full.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(name) = body.strip_prefix('[') {
            let name = name
                .strip_suffix(']')
                .ok_or_else(|| parse_err(line, "unterminated section header"))?
                .trim();
            section = match name {
                "axis" => Section::Axis,
                "fixed" => Section::Fixed,
                "series" => Section::Series,
                "output" => Section::Output,
                other => return Err(parse_err(line, format!("unknown section `[{other}]`"))),
            };
            if !seen.insert(name.to_string()) {
                return Err(parse_err(line, format!("section `[{name}]` appears twice")));
            }
            continue;
        }
        let (key, value) = body
            .split_once('=')
            .ok_or_else(|| parse_err(line, format!("expected `key = value`, got `{body}`")))?;
        let (key, value) = (key.trim().to_string(), value.trim().to_string());
        if key.is_empty() {
            return Err(parse_err(line, "missing key before `=`"));
        }
        if value.is_empty() {
            return Err(parse_err(line, format!("missing value for `{key}`")));
        }
        let dup = || parse_err(line, format!("duplicate key `{key}`"));
        match section {
            Section::Top => {
                let slot = match key.as_str() {
                    "scenario" => &mut raw.scenario,
                    "vacuum" => &mut raw.vacuum,
                    "convention" => &mut raw.convention,
                    "initial" => &mut raw.initial,
                    _ => return Err(parse_err(line, format!("unknown key `{key}`"))),
                };
                if slot.is_some() {
                    return Err(dup());
                }
                *slot = Some((line, value));
            }
            Section::Axis | Section::Output => {
                let allowed: &[&str] = if section == Section::Axis {
                    &["name", "start", "stop", "points", "scale"]
                } else {
                    &["csv", "svg"]
                };
                if !allowed.contains(&key.as_str()) {
                    return Err(parse_err(line, format!("unknown key `{key}`")));
                }
                let map = if section == Section::Axis {
                    &mut raw.axis
                } else {
                    &mut raw.output
                };
                if map.insert(key.clone(), (line, value)).is_some() {
                    return Err(dup());
                }
            }
            Section::Fixed | Section::Series => {
                let list = if section == Section::Fixed {
                    &mut raw.fixed
                } else {
                    &mut raw.series
                };
                if list.iter().any(|(_, k, _)| *k == key) {
                    return Err(dup());
                }
                list.push((line, key, value));
            }
        }
    }
    Ok(raw)
}

fn keyword<T: FromStr<Err = String>>(slot: &Option<(usize, String)>) -> Result<Option<T>, ConfigError> {
    slot.as_ref()
        .map(|(line, v)| v.parse::<T>().map_err(|m| parse_err(*line, m)))
        .transpose()
}

/// Parses and validates a configuration document, filling defaults.
pub fn parse_config(text: &str) -> Result<SweepSpec, ConfigError> {
    let raw = read_raw(text)?;

    let scenario: Scenario = keyword(&raw.scenario)?.ok_or_else(|| invalid("scenario", "missing scenario"))?;
    let vacuum: Option<Vacuum> = keyword(&raw.vacuum)?;
    let convention: Option<ConventionChoice> = keyword(&raw.convention)?;
    let initial: Option<InitialState> = keyword(&raw.initial)?;

    let axis_field = |k: &str| raw.axis.get(k);
    let name = axis_field("name")
        .map(|(_, v)| v.clone())
        .ok_or_else(|| invalid("axis.name", "missing axis name"))?;
    let number = |k: &str| -> Result<f64, ConfigError> {
        let (line, v) = axis_field(k).ok_or_else(|| invalid(&format!("axis.{k}"), "missing value"))?;
        parse_number(*line, k, v)
    };
    let (start, stop) = (number("start")?, number("stop")?);
    let points = match axis_field("points") {
        Some((line, v)) => v
            .parse::<usize>()
            .map_err(|_| parse_err(*line, format!("`points` expects a whole number, got `{v}`")))?,
        None => 200,
    };
    let scale = match axis_field("scale") {
        Some((line, v)) => v.parse::<Scale>().map_err(|m| parse_err(*line, m))?,
        None => Scale::Linear,
    };

    let mut fixed = BTreeMap::new();
    for (line, key, value) in &raw.fixed {
        fixed.insert(key.clone(), parse_number(*line, key, value)?);
    }
    let mut series = Vec::new();
    for (line, key, value) in &raw.series {
        let values = value
            .split(',')
            .map(|v| parse_number(*line, key, v.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        series.push((key.clone(), values));
    }

    let output = Output {
        csv: raw
            .output
            .get("csv")
            .map(|(_, v)| PathBuf::from(v))
            .unwrap_or_else(|| PathBuf::from("sweep.csv")),
        svg: raw.output.get("svg").map(|(_, v)| PathBuf::from(v)),
    };

    let mut spec = SweepSpec {
        scenario,
        axis: Axis {
            name,
            start,
            stop,
            points,
            scale,
        },
        fixed,
        series,
        vacuum,
        convention,
        initial,
        output,
    };
    fill_defaults(&mut spec);
    validate(&spec)?;
    Ok(spec)
}

fn fill_defaults(spec: &mut SweepSpec) {
    let swept: Vec<String> = std::iter::once(spec.axis.name.clone())
        .chain(spec.series.iter().map(|(k, _)| k.clone()))
        .collect();
    for (key, _, default) in parameters(spec.scenario) {
        if !swept.iter().any(|s| s == key) {
            spec.fixed.entry(key.to_string()).or_insert(*default);
        }
    }
    match spec.scenario {
        Scenario::StaticDetectors => {
            spec.vacuum.get_or_insert(Vacuum::HartleHawking);
            spec.convention.get_or_insert(ConventionChoice::Tanh);
        }
        Scenario::Dynamics => {
            spec.initial.get_or_insert(InitialState::PhiPlus);
        }
        _ => {}
    }
}

/// Checks every invariant of a [`SweepSpec`].
pub fn validate(spec: &SweepSpec) -> Result<(), ConfigError> {
    let sc = spec.scenario;
    let known = |key: &str| {
        domain_of(sc, key).ok_or_else(|| {
            let names: Vec<&str> = parameters(sc).iter().map(|(k, _, _)| *k).collect();
            invalid(key, format!("unknown parameter for {sc} (expected one of: {})", names.join(", ")))
        })
    };

    let axis = &spec.axis;
    let axis_domain = known(&axis.name)?;
    if fixed_only(sc).contains(&axis.name.as_str()) {
        return Err(invalid(&axis.name, "cannot be swept"));
    }
    if sc == Scenario::Dynamics && axis.name != "time" {
        return Err(invalid("axis.name", "the dynamics scenario sweeps `time`"));
    }
    if sc != Scenario::Dynamics && axis.name == "time" {
        return Err(invalid("axis.name", "`time` is only an axis for dynamics"));
    }
    if axis.points < 2 {
        return Err(invalid("axis.points", format!("points must be at least 2, got {}", axis.points)));
    }
    if !(axis.start < axis.stop) {
        return Err(invalid(
            "axis.start",
            format!("start must be below stop, got {} >= {}", axis.start, axis.stop),
        ));
    }
    if axis.scale == Scale::Log && !(axis.start > 0.0) {
        return Err(invalid("axis.start", "a log axis needs start > 0"));
    }
    axis_domain.check(&axis.name, axis.start)?;
    axis_domain.check(&axis.name, axis.stop)?;

    for (key, values) in &spec.series {
        let domain = known(key)?;
        if fixed_only(sc).contains(&key.as_str()) {
            return Err(invalid(key, "cannot be a series"));
        }
        if *key == axis.name {
            return Err(invalid(key, "already used as the axis"));
        }
        if values.is_empty() {
            return Err(invalid(key, "series needs at least one value"));
        }
        for &v in values {
            domain.check(key, v)?;
        }
    }
    for (key, &v) in &spec.fixed {
        known(key)?.check(key, v)?;
        if *key == axis.name || spec.series.iter().any(|(k, _)| k == key) {
            return Err(invalid(key, "given both as fixed and as swept"));
        }
    }
    for (key, _, _) in parameters(sc) {
        let present = spec.fixed.contains_key(*key)
            || axis.name == *key
            || spec.series.iter().any(|(k, _)| k == key);
        if !present {
            return Err(invalid(key, "missing value"));
        }
    }

    if spec.vacuum.is_some() != (sc == Scenario::StaticDetectors)
        || spec.convention.is_some() != (sc == Scenario::StaticDetectors)
    {
        return Err(invalid(
            "vacuum",
            "vacuum and convention apply to (and are required by) static-detectors only",
        ));
    }
    if spec.initial.is_some() != (sc == Scenario::Dynamics) {
        return Err(invalid("initial", "initial applies to (and is required by) dynamics only"));
    }
    Ok(())
}

fn fmt_value(v: f64) -> String {
    // Display gives the shortest string that parses back to the same f64
    format!("{v}")
}

/// Writes `spec` back as a configuration document that parses to the same spec.
pub fn emit(spec: &SweepSpec) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "scenario = {}", spec.scenario);
    if let Some(v) = spec.vacuum {
        let _ = writeln!(out, "vacuum = {v}");
    }
    if let Some(c) = spec.convention {
        let _ = writeln!(out, "convention = {c}");
    }
    if let Some(i) = spec.initial {
        let _ = writeln!(out, "initial = {i}");
    }
    let a = &spec.axis;
    let _ = write!(
        out,
        "\n[axis]\nname = {}\nstart = {}\nstop = {}\npoints = {}\nscale = {}\n",
        a.name,
        fmt_value(a.start),
        fmt_value(a.stop),
        a.points,
        a.scale
    );
    if !spec.fixed.is_empty() {
        out.push_str("\n[fixed]\n");
        for (k, v) in &spec.fixed {
            let _ = writeln!(out, "{k} = {}", fmt_value(*v));
        }
    }
    if !spec.series.is_empty() {
        out.push_str("\n[series]\n");
        for (k, values) in &spec.series {
            let list: Vec<String> = values.iter().map(|v| fmt_value(*v)).collect();
            let _ = writeln!(out, "{k} = {}", list.join(", "));
        }
    }
    let _ = write!(out, "\n[output]\ncsv = {}\n", spec.output.csv.display());
    if let Some(svg) = &spec.output.svg {
        let _ = writeln!(out, "svg = {}", svg.display());
    }
    out
}

/// Help text listing each scenario's parameters and defaults.
pub fn defaults_help() -> String {
    let mut out = String::from("Parameter defaults by scenario:\n");
    for sc in [
        Scenario::GisinHawking,
        Scenario::Unruh,
        Scenario::StaticDetectors,
        Scenario::Dynamics,
    ] {
        let list: Vec<String> = defaults(sc).iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "  {sc}: {}", list.join(", "));
    }
    out.push_str(
        "  static-detectors also: vacuum=hartle-hawking, convention=tanh (tanh|half|both)\n  \
         dynamics also: initial=phi-plus (phi-plus|singlet|random)\n  \
         [axis] points=200, scale=linear; [output] csv=sweep.csv\n",
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = "scenario = gisin-hawking
[axis]
name = t_hawking
start = 0.1
stop = 20
[fixed]
alpha = 1
phi = 0.6
omega = 10
r0 = 1.1
";

    #[test]
    fn minimal_gisin_config() {
        let spec = parse_config(MINIMAL).unwrap();
        assert_eq!(spec.scenario, Scenario::GisinHawking);
        assert_eq!(spec.axis.name, "t_hawking");
        assert_eq!((spec.axis.start, spec.axis.stop, spec.axis.points), (0.1, 20.0, 200));
        assert_eq!(spec.fixed["phi"], 0.6);
        assert!(!spec.fixed.contains_key("t_hawking"));
        assert!(spec.series.is_empty());
        assert_eq!(spec.output.csv, PathBuf::from("sweep.csv"));
    }

    #[test]
    fn rejects_r0_inside_horizon() {
        let text = MINIMAL.replace("r0 = 1.1", "r0 = 0.9");
        let err = parse_config(&text).unwrap_err();
        assert!(err.to_string().contains("r0 must exceed 1"), "{err}");
        assert!(matches!(err, ConfigError::Validation { ref key, .. } if key == "r0"));
    }

    #[test]
    fn unknown_key_reports_line() {
        let text = MINIMAL.replace("omega = 10", "omgea = 10");
        let err = parse_config(&text).unwrap_err();
        assert!(matches!(err, ConfigError::Validation { ref key, .. } if key == "omgea"), "{err}");
        let err = parse_config("scenario = unruh\ncolour = red\n").unwrap_err();
        assert_eq!(
            err,
            ConfigError::Parse {
                line: 2,
                message: "unknown key `colour`".into()
            }
        );
        let err = parse_config("scenario = unruh\n[axis]\nwidth = 3\n").unwrap_err();
        assert!(matches!(err, ConfigError::Parse { line: 3, .. }));
        let err = parse_config("scenario = unruh\n[plot]\n").unwrap_err();
        assert!(matches!(err, ConfigError::Parse { line: 2, .. }));
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(
            parse_config("scenario = unruh\njust words\n").unwrap_err(),
            ConfigError::Parse { line: 2, .. }
        ));
        assert!(matches!(
            parse_config("scenario = unruh\n[axis\n").unwrap_err(),
            ConfigError::Parse { line: 2, .. }
        ));
        assert!(matches!(
            parse_config("scenario = unruh\n[axis]\nname = t_unruh\nstart = abc\n").unwrap_err(),
            ConfigError::Parse { line: 4, .. }
        ));
        assert!(matches!(
            parse_config("scenario = warp\n").unwrap_err(),
            ConfigError::Parse { line: 1, .. }
        ));
    }

    #[test]
    fn axis_invariants() {
        let base = "scenario = unruh\n[axis]\nname = t_unruh\n";
        let with = |extra: &str| parse_config(&format!("{base}{extra}"));
        assert!(with("start = 1\nstop = 2\npoints = 2\n").is_ok());
        assert!(with("start = 1\nstop = 2\npoints = 1\n").is_err());
        assert!(with("start = 2\nstop = 1\n").is_err());
        assert!(with("start = 0\nstop = 1\n").is_err(), "T_U must be positive");
        assert!(with("start = 0.1\nstop = 1\nscale = log\n").is_ok());
        assert!(parse_config("scenario = unruh\n[axis]\nname = r0\nstart = 1\nstop = 2\n").is_err());
    }

    #[test]
    fn series_values_are_range_checked() {
        let text = "scenario = unruh\n[axis]\nname = t_unruh\nstart = 0.1\nstop = 5\n[series]\nkappa0 = -2, 1.5\n";
        let err = parse_config(text).unwrap_err();
        assert!(err.to_string().contains("kappa0 must lie in [-3, 1]"), "{err}");
    }

    #[test]
    fn scenario_specific_keys() {
        let axis = "[axis]\nname = t_hawking\nstart = 0.1\nstop = 5\n";
        let spec = parse_config(&format!("scenario = static-detectors\n{axis}")).unwrap();
        assert_eq!(spec.vacuum, Some(Vacuum::HartleHawking));
        assert_eq!(spec.convention, Some(ConventionChoice::Tanh));
        assert!(parse_config(&format!("scenario = gisin-hawking\nvacuum = boulware\n{axis}")).is_err());
        let dyn_axis = "[axis]\nname = time\nstart = 0\nstop = 5\n";
        let spec = parse_config(&format!("scenario = dynamics\n{dyn_axis}")).unwrap();
        assert_eq!(spec.initial, Some(InitialState::PhiPlus));
        assert!(parse_config(&format!("scenario = dynamics\n{axis}")).is_err());
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = format!("# sweep\n\n{}", MINIMAL.replace("omega = 10", "omega = 10  # mode"));
        assert_eq!(parse_config(&text).unwrap(), parse_config(MINIMAL).unwrap());
    }

    #[test]
    fn emit_round_trips() {
        let spec = parse_config(MINIMAL).unwrap();
        assert_eq!(parse_config(&emit(&spec)).unwrap(), spec);
    }

    #[test]
    fn log_axis_hits_endpoints() {
        let axis = Axis {
            name: "t".into(),
            start: 0.01,
            stop: 100.0,
            points: 5,
            scale: Scale::Log,
        };
        let v = axis.values();
        assert_eq!(v[0], 0.01);
        assert_eq!(v[4], 100.0);
        assert!((v[2] - 1.0).abs() < 1e-12);
    }
}
