use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Physical parameters of the two-reactor/separator benchmark.
///
/// The default values are consistent with the common literature
/// configuration of this process (1 / 0.5 / 1 m^3 vessels, 50.4 m^3/h vapor
/// recycle, first-order Arrhenius kinetics in mass fractions) with
/// endothermic reactions so that the admissible heat-duty box maps onto a
/// well-spread family of stable operating points.
///
/// Units: volumes m^3, flows m^3/h, temperatures K, rate constants 1/h,
/// activation energies kJ/kmol with `r` in kJ/(kmol K), heat duties kJ/h.
/// `dh1`/`dh2` are expressed per unit mass (kJ/kg, positive = endothermic)
/// and the vaporization terms per unit overhead volume, matching how they
/// enter the energy balances.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProcessParams {
    pub v1: f64,
    pub v2: f64,
    pub v3: f64,
    pub f10: f64,
    pub f20: f64,
    pub f1: f64,
    pub f2: f64,
    pub fr: f64,
    pub fp: f64,
    pub x_a10: f64,
    pub x_b10: f64,
    pub x_a20: f64,
    pub x_b20: f64,
    pub t10: f64,
    pub t20: f64,
    pub k1: f64,
    pub k2: f64,
    pub e1: f64,
    pub e2: f64,
    pub r: f64,
    pub dh1: f64,
    pub dh2: f64,
    pub dh_vap1: f64,
    pub dh_vap2: f64,
    pub dh_vap3: f64,
    pub c_p: f64,
    pub rho_den: f64,
    pub alpha_a: f64,
    pub alpha_b: f64,
    pub alpha_c: f64,
    /// Lower bounds on the heat duties `[q1, q2, q3]`.
    pub a_low: [f64; 3],
    /// Upper bounds on the heat duties `[q1, q2, q3]`.
    pub a_high: [f64; 3],
}

impl Default for ProcessParams {
    fn default() -> Self {
        Self {
            v1: 1.0,
            v2: 0.5,
            v3: 1.0,
            f10: 5.04,
            f20: 5.04,
            f1: 55.44,
            f2: 60.48,
            fr: 50.4,
            fp: 0.504,
            x_a10: 1.0,
            x_b10: 0.0,
            x_a20: 1.0,
            x_b20: 0.0,
            t10: 300.0,
            t20: 300.0,
            k1: 9.972e6,
            k2: 9.36e6,
            e1: 5.0e4,
            e2: 6.0e4,
            r: 8.314,
            dh1: 1.2e3,
            dh2: 1.4e3,
            dh_vap1: -2.0e4,
            dh_vap2: -1.0e4,
            dh_vap3: -2.5e4,
            c_p: 2.0,
            rho_den: 500.0,
            alpha_a: 3.5,
            alpha_b: 1.1,
            alpha_c: 0.5,
            a_low: [6.496e5, 2.240e5, 6.496e5],
            a_high: [4.872e6, 1.680e6, 4.872e6],
        }
    }
}

impl ProcessParams {
    /// Parses parameters from the nested key-value text format (TOML).
    pub fn from_toml(text: &str) -> Result<Self> {
        let params: ProcessParams = toml::from_str(text)?;
        params.validate()?;
        Ok(params)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("params serialize")
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("v1", self.v1),
            ("v2", self.v2),
            ("v3", self.v3),
            ("f10", self.f10),
            ("f20", self.f20),
            ("f1", self.f1),
            ("f2", self.f2),
            ("fr", self.fr),
            ("fp", self.fp),
            ("c_p", self.c_p),
            ("rho_den", self.rho_den),
            ("alpha_a", self.alpha_a),
            ("alpha_b", self.alpha_b),
            ("alpha_c", self.alpha_c),
        ];
        for (name, value) in positive {
            if !(value > 0.0) {
                return Err(Error::Config(format!("{name} must be positive, got {value}")));
            }
        }
        if !(self.alpha_a > self.alpha_b && self.alpha_b > self.alpha_c) {
            return Err(Error::Config(format!(
                "relative volatilities must be ordered alpha_a > alpha_b > alpha_c, got ({}, {}, {})",
                self.alpha_a, self.alpha_b, self.alpha_c
            )));
        }
        for i in 0..3 {
            if !(self.a_low[i] < self.a_high[i]) {
                return Err(Error::Config(format!(
                    "heat-duty bounds must satisfy a_low < a_high for input {i}"
                )));
            }
        }
        Ok(())
    }
}

/// Heat duties for the three vessels, kJ/h.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HeatInputs {
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
}

impl HeatInputs {
    pub fn from_array(q: [f64; 3]) -> Self {
        Self {
            q1: q[0],
            q2: q[1],
            q3: q[2],
        }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.q1, self.q2, self.q3]
    }

    /// Clamps each duty into the admissible box of `params`.
    pub fn clamped(self, params: &ProcessParams) -> Self {
        let mut q = self.to_array();
        for i in 0..3 {
            q[i] = q[i].clamp(params.a_low[i], params.a_high[i]);
        }
        Self::from_array(q)
    }

    pub fn within_bounds(self, params: &ProcessParams) -> bool {
        let q = self.to_array();
        (0..3).all(|i| q[i] >= params.a_low[i] && q[i] <= params.a_high[i])
    }
}

/// Truncated-Gaussian disturbance acting on the state derivatives: each
/// component is drawn from `N(0, sigma^2)` and rejected outside
/// `[-bound, bound]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DisturbanceSpec {
    /// Per-state standard deviation, state-units per hour.
    pub sigma: [f64; 9],
    /// Per-state truncation bound.
    pub bound: [f64; 9],
}

impl DisturbanceSpec {
    pub fn new(sigma: [f64; 9], bound: [f64; 9]) -> Result<Self> {
        if sigma.iter().any(|s| *s < 0.0) {
            return Err(Error::Config("disturbance sigma must be >= 0".into()));
        }
        if bound.iter().any(|b| !(*b > 0.0)) {
            return Err(Error::Config("disturbance bound must be > 0".into()));
        }
        Ok(Self { sigma, bound })
    }

    /// No disturbance.
    pub fn none() -> Self {
        Self {
            sigma: [0.0; 9],
            bound: [1.0; 9],
        }
    }

    /// Training-phase disturbance level.
    pub fn sigma_w1() -> Self {
        Self {
            sigma: [0.01, 0.01, 0.5, 0.01, 0.01, 0.5, 0.01, 0.01, 0.5],
            bound: [5.0; 9],
        }
    }

    /// Robustness-evaluation disturbance level (100x the training sigma).
    pub fn sigma_w2() -> Self {
        Self {
            sigma: [1.0, 1.0, 50.0, 1.0, 1.0, 50.0, 1.0, 1.0, 50.0],
            bound: [500.0; 9],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_params_are_valid() {
        ProcessParams::default().validate().unwrap();
    }

    #[test]
    fn toml_roundtrip() {
        let p = ProcessParams::default();
        let text = p.to_toml();
        let q = ProcessParams::from_toml(&text).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn volatility_ordering_enforced() {
        let mut p = ProcessParams::default();
        p.alpha_c = 10.0;
        assert!(p.validate().is_err());
    }

    #[test]
    fn heat_inputs_clamp_to_box() {
        let p = ProcessParams::default();
        let q = HeatInputs::from_array([0.0, 1.0e6, 1.0e9]).clamped(&p);
        assert_eq!(q.q1, p.a_low[0]);
        assert_eq!(q.q2, 1.0e6);
        assert_eq!(q.q3, p.a_high[2]);
        assert!(q.within_bounds(&p));
    }

    #[test]
    fn disturbance_rejects_negative_sigma() {
        let mut sigma = [0.0; 9];
        sigma[3] = -1.0;
        assert!(DisturbanceSpec::new(sigma, [1.0; 9]).is_err());
    }
}
