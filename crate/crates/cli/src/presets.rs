//! Built-in sweeps for the figure families. Each preset is a configuration
//! document, so it goes through the same parser as user files.

use crate::config::{parse_config, SweepSpec};

/// Gisin state across the horizon versus `T_H` for five mixing weights α;
/// φ = π/4, ω = 10, R₀ = 1.1.
pub const FIG2: &str = "scenario = gisin-hawking

[axis]
name = t_hawking
start = 0
stop = 20
points = 401

[fixed]
phi = 0.7853981633974483
omega = 10
r0 = 1.1

[series]
alpha = 0.2, 0.4, 0.6, 0.8, 1.0

[output]
csv = fig2.csv
svg = fig2.svg
";

/// Same family versus `T_H` for φ = π/16, π/8, 3π/16, π/4; α = 1, ω = 10, R₀ = 1.1.
pub const FIG3: &str = "scenario = gisin-hawking

[axis]
name = t_hawking
start = 0
stop = 20
points = 401

[fixed]
alpha = 1
omega = 10
r0 = 1.1

[series]
phi = 0.19634954084936207, 0.39269908169872414, 0.5890486225480862, 0.7853981633974483

[output]
csv = fig3.csv
svg = fig3.svg
";

/// Same family versus `T_H` for the near-horizon distances R₀ = 1.01, 1.05,
/// 1.1, 1.2; α = 1, φ = π/4, ω = 10.
pub const FIG4: &str = "scenario = gisin-hawking

[axis]
name = t_hawking
start = 0
stop = 20
points = 401

[fixed]
alpha = 1
phi = 0.7853981633974483
omega = 10

[series]
r0 = 1.01, 1.05, 1.1, 1.2

[output]
csv = fig4.csv
svg = fig4.svg
";

/// Accelerated detectors versus `T_U` for five initial-state choices κ₀;
/// ε = 5.
pub const FIG5: &str = "scenario = unruh

[axis]
name = t_unruh
start = 0.01
stop = 50
points = 500

[fixed]
epsilon = 5

[series]
kappa0 = -2, -1.5, -0.6, 0.6, 1

[output]
csv = fig5.csv
svg = fig5.svg
";

/// Accelerated detectors versus `T_U` for κ₀ = 0.1 and −1.5, each at three
/// level spacings ε = 1, 3, 5.
pub const FIG67: &str = "scenario = unruh

[axis]
name = t_unruh
start = 0.01
stop = 10
points = 500

[series]
kappa0 = 0.1, -1.5
epsilon = 1, 3, 5

[output]
csv = fig67.csv
svg = fig67.svg
";

/// Static detectors in the Hartle–Hawking vacuum versus `T_H` for
/// R₀ = 1.01, 1.05, 1.1, 1.2 and κ₀ = 0.6, −2; ω = 50. Both ratio
/// conventions are emitted.
pub const FIG89: &str = "scenario = static-detectors
vacuum = hartle-hawking
convention = both

[axis]
name = t_hawking
start = 0.1
stop = 40
points = 400

[fixed]
omega = 50

[series]
kappa0 = 0.6, -2
r0 = 1.01, 1.05, 1.1, 1.2

[output]
csv = fig89.csv
svg = fig89.svg
";

/// Static detectors in the Hartle–Hawking vacuum versus `T_H` for mode
/// frequencies ω = 10, 30, 50 and κ₀ = 0.6, −2; R₀ = 1.1. Both ratio
/// conventions are emitted.
pub const FIG1011: &str = "scenario = static-detectors
vacuum = hartle-hawking
convention = both

[axis]
name = t_hawking
start = 0.1
stop = 40
points = 400

[fixed]
r0 = 1.1

[series]
kappa0 = 0.6, -2
omega = 10, 30, 50

[output]
csv = fig1011.csv
svg = fig1011.svg
";

pub const NAMES: [&str; 7] = ["fig2", "fig3", "fig4", "fig5", "fig67", "fig89", "fig1011"];

/// Configuration text of a preset.
pub fn preset_text(name: &str) -> Option<&'static str> {
    Some(match name {
        "fig2" => FIG2,
        "fig3" => FIG3,
        "fig4" => FIG4,
        "fig5" => FIG5,
        "fig67" => FIG67,
        "fig89" => FIG89,
        "fig1011" => FIG1011,
        _ => return None,
    })
}

/// Parsed preset.
pub fn preset(name: &str) -> Option<SweepSpec> {
    preset_text(name).map(|t| parse_config(t).expect("built-in presets are valid"))
}
