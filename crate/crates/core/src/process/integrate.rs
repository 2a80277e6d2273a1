use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::process::{derivatives, DisturbanceSpec, HeatInputs, ProcessParams, ProcessState};

/// Internal sub-steps per control interval. The plant's fastest modes sit
/// near -190/h, so dt = 0.005 h is integrated as five sub-steps of 0.001 h.
const SUBSTEPS: usize = 5;

/// One classical Runge-Kutta step of size `h` for an arbitrary autonomous
/// system. Each stage is checked for finiteness and reported by name on
/// failure.
pub fn rk4_advance<const N: usize>(
    y: &[f64; N],
    h: f64,
    f: &mut impl FnMut(&[f64; N]) -> Result<[f64; N]>,
) -> Result<[f64; N]> {
    let stage = |name: &'static str, v: &[f64; N]| -> Result<()> {
        if v.iter().any(|x| !x.is_finite()) {
            return Err(Error::Integration {
                stage: name,
                detail: "non-finite stage derivative".into(),
            });
        }
        Ok(())
    };

    let k1 = f(y)?;
    stage("k1", &k1)?;
    let mut y2 = *y;
    for i in 0..N {
        y2[i] = y[i] + 0.5 * h * k1[i];
    }
    let k2 = f(&y2)?;
    stage("k2", &k2)?;
    let mut y3 = *y;
    for i in 0..N {
        y3[i] = y[i] + 0.5 * h * k2[i];
    }
    let k3 = f(&y3)?;
    stage("k3", &k3)?;
    let mut y4 = *y;
    for i in 0..N {
        y4[i] = y[i] + h * k3[i];
    }
    let k4 = f(&y4)?;
    stage("k4", &k4)?;

    let mut out = *y;
    for i in 0..N {
        out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    if out.iter().any(|x| !x.is_finite()) {
        return Err(Error::Integration {
            stage: "combine",
            detail: "non-finite state after step".into(),
        });
    }
    Ok(out)
}

fn step_with_noise(
    s: &ProcessState,
    a: &HeatInputs,
    dt: f64,
    p: &ProcessParams,
    noise: &[f64; 9],
) -> Result<ProcessState> {
    if dt < 0.0 {
        return Err(Error::Config(format!("negative step size {dt}")));
    }
    if dt == 0.0 {
        return Ok(*s);
    }
    let h = dt / SUBSTEPS as f64;
    let mut y = s.to_array();
    let mut f = |x: &[f64; 9]| -> Result<[f64; 9]> {
        let mut d = derivatives(&ProcessState::from_array(*x), a, p)?;
        for i in 0..9 {
            d[i] += noise[i];
        }
        Ok(d)
    };
    for _ in 0..SUBSTEPS {
        y = rk4_advance(&y, h, &mut f)?;
        y = ProcessState::from_array(y).project_feasible().to_array();
    }
    Ok(ProcessState::from_array(y))
}

/// Advances the process by `dt` hours with the heat duties held constant
/// (zero-order hold). `dt = 0` returns the state unchanged.
pub fn rk4_step(
    s: &ProcessState,
    a: &HeatInputs,
    dt: f64,
    p: &ProcessParams,
) -> Result<ProcessState> {
    step_with_noise(s, a, dt, p, &[0.0; 9])
}

/// Draws from `N(0, sigma^2)` truncated to `[-bound, bound]` by rejection.
/// For the disturbance levels used here the acceptance rate is ~1, so the
/// loop is effectively a single draw.
pub fn truncated_normal(rng: &mut impl Rng, sigma: f64, bound: f64) -> f64 {
    if sigma == 0.0 {
        return 0.0;
    }
    loop {
        let z: f64 = rng.sample(StandardNormal);
        let w = sigma * z;
        if w.abs() <= bound {
            return w;
        }
    }
}

/// As [`rk4_step`], but one truncated-Gaussian disturbance vector is drawn
/// per control interval and added to the state derivatives at every stage
/// (piecewise-constant disturbance across the interval).
///
/// With `sigma = 0` the result is bit-identical to [`rk4_step`].
pub fn stochastic_step(
    s: &ProcessState,
    a: &HeatInputs,
    dt: f64,
    p: &ProcessParams,
    d: &DisturbanceSpec,
    rng: &mut impl Rng,
) -> Result<ProcessState> {
    let mut noise = [0.0; 9];
    for i in 0..9 {
        noise[i] = truncated_normal(rng, d.sigma[i], d.bound[i]);
    }
    step_with_noise(s, a, dt, p, &noise)
}
