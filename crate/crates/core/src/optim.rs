//! Derivative-free local minimisation (Nelder–Mead simplex).

/// Stopping rules for [`nelder_mead`].
#[derive(Clone, Copy, Debug)]
pub struct NelderMeadOptions {
    /// Edge length of the initial simplex along each coordinate.
    pub initial_step: f64,
    /// Stop when the spread of function values over the simplex falls below this.
    pub f_tol: f64,
    /// Stop when every vertex lies within this distance of the best vertex.
    pub x_tol: f64,
    pub max_evals: usize,
}

impl Default for NelderMeadOptions {
    fn default() -> Self {
        Self {
            initial_step: 0.5,
            f_tol: 1e-12,
            x_tol: 1e-10,
            max_evals: 4000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub value: f64,
    pub evals: usize,
}

/// Minimises `f` from `x0` using the adaptive-coefficient Nelder–Mead scheme
/// (reflection 1, expansion 1 + 2/n, contraction 3/4 − 1/(2n), shrink 1 − 1/n).
pub fn nelder_mead<F>(mut f: F, x0: &[f64], opts: &NelderMeadOptions) -> Minimum
where
    F: FnMut(&[f64]) -> f64,
{
    let n = x0.len();
    assert!(n > 0, "cannot minimise over zero parameters");
    let nf = n as f64;
    let (alpha, gamma, rho, sigma) = if n >= 2 {
        (1.0, 1.0 + 2.0 / nf, 0.75 - 0.5 / nf, 1.0 - 1.0 / nf)
    } else {
        (1.0, 2.0, 0.5, 0.5)
    };

    let mut evals = 0;
    let mut eval = |x: &[f64], evals: &mut usize| {
        *evals += 1;
        let v = f(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };

    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
    simplex.push((x0.to_vec(), eval(x0, &mut evals)));
    for i in 0..n {
        let mut x = x0.to_vec();
        x[i] += opts.initial_step;
        let v = eval(&x, &mut evals);
        simplex.push((x, v));
    }

    let mut centroid = vec![0.0; n];
    let mut trial = vec![0.0; n];
    let mut trial2 = vec![0.0; n];

    loop {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let best = simplex[0].1;
        let worst = simplex[n].1;
        let spread = (worst - best).abs();
        let size = simplex[1..]
            .iter()
            .map(|(x, _)| {
                x.iter()
                    .zip(&simplex[0].0)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max);
        if evals >= opts.max_evals || (spread <= opts.f_tol && size <= opts.x_tol) {
            break;
        }

        centroid.iter_mut().for_each(|c| *c = 0.0);
        for (x, _) in &simplex[..n] {
            for (c, xi) in centroid.iter_mut().zip(x) {
                *c += xi / nf;
            }
        }

        let along = |t: f64, out: &mut Vec<f64>, worst: &[f64]| {
            for i in 0..n {
                out[i] = centroid[i] + t * (worst[i] - centroid[i]);
            }
        };

        along(-alpha, &mut trial, &simplex[n].0);
        let f_reflect = eval(&trial, &mut evals);

        if f_reflect < simplex[0].1 {
            along(-alpha * gamma, &mut trial2, &simplex[n].0);
            let f_expand = eval(&trial2, &mut evals);
            if f_expand < f_reflect {
                simplex[n] = (trial2.clone(), f_expand);
            } else {
                simplex[n] = (trial.clone(), f_reflect);
            }
            continue;
        }
        if f_reflect < simplex[n - 1].1 {
            simplex[n] = (trial.clone(), f_reflect);
            continue;
        }

        let outside = f_reflect < simplex[n].1;
        let t = if outside { -alpha * rho } else { rho };
        along(t, &mut trial2, &simplex[n].0);
        let f_contract = eval(&trial2, &mut evals);
        let accepted = if outside {
            f_contract <= f_reflect
        } else {
            f_contract < simplex[n].1
        };
        if accepted {
            simplex[n] = (trial2.clone(), f_contract);
            continue;
        }

        let anchor = simplex[0].0.clone();
        for (x, v) in simplex.iter_mut().skip(1) {
            for (xi, ai) in x.iter_mut().zip(&anchor) {
                *xi = ai + sigma * (*xi - ai);
            }
            *v = eval(x, &mut evals);
        }
    }

    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (x, value) = simplex.swap_remove(0);
    Minimum { x, value, evals }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimises_shifted_quadratic() {
        let m = nelder_mead(
            |x| (x[0] - 1.0).powi(2) + 10.0 * (x[1] + 2.0).powi(2) + (x[2] - 0.5).powi(2),
            &[0.0, 0.0, 0.0],
            &NelderMeadOptions::default(),
        );
        assert!(m.value < 1e-12, "{m:?}");
        assert!((m.x[0] - 1.0).abs() < 1e-5 && (m.x[1] + 2.0).abs() < 1e-5);
    }

    #[test]
    fn minimises_rosenbrock() {
        let opts = NelderMeadOptions {
            max_evals: 20_000,
            ..Default::default()
        };
        let m = nelder_mead(
            |x| 100.0 * (x[1] - x[0] * x[0]).powi(2) + (1.0 - x[0]).powi(2),
            &[-1.2, 1.0],
            &opts,
        );
        assert!(m.value < 1e-10, "{m:?}");
    }

    #[test]
    fn handles_nonsmooth_objective() {
        let m = nelder_mead(
            |x| x.iter().map(|v| (v - 0.3).abs()).sum(),
            &[1.0, -1.0],
            &NelderMeadOptions::default(),
        );
        assert!(m.value < 1e-8, "{m:?}");
    }

    #[test]
    fn respects_eval_budget() {
        let opts = NelderMeadOptions {
            max_evals: 50,
            ..Default::default()
        };
        let m = nelder_mead(|x| x[0].sin() + x[1].cos(), &[0.0, 0.0], &opts);
        assert!(m.evals <= 50 + 3);
    }
}
