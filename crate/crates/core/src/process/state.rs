use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The nine physical process states: mass fractions of A and B plus the
/// temperature, for each of the three vessels, ordered
/// `[x_a1, x_b1, t1, x_a2, x_b2, t2, x_a3, x_b3, t3]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProcessState {
    pub x_a1: f64,
    pub x_b1: f64,
    pub t1: f64,
    pub x_a2: f64,
    pub x_b2: f64,
    pub t2: f64,
    pub x_a3: f64,
    pub x_b3: f64,
    pub t3: f64,
}

impl ProcessState {
    pub fn from_array(s: [f64; 9]) -> Self {
        Self {
            x_a1: s[0],
            x_b1: s[1],
            t1: s[2],
            x_a2: s[3],
            x_b2: s[4],
            t2: s[5],
            x_a3: s[6],
            x_b3: s[7],
            t3: s[8],
        }
    }

    pub fn to_array(self) -> [f64; 9] {
        [
            self.x_a1, self.x_b1, self.t1, self.x_a2, self.x_b2, self.t2, self.x_a3, self.x_b3,
            self.t3,
        ]
    }

    /// Mass-fraction pairs and temperature per vessel, as `(x_a, x_b, t)`.
    pub fn vessels(self) -> [(f64, f64, f64); 3] {
        [
            (self.x_a1, self.x_b1, self.t1),
            (self.x_a2, self.x_b2, self.t2),
            (self.x_a3, self.x_b3, self.t3),
        ]
    }

    /// Checks the physical-domain invariants: each mass-fraction pair
    /// satisfies `0 <= x_a`, `0 <= x_b`, `x_a + x_b <= 1` (the C fraction is
    /// implied) and all temperatures are strictly positive.
    pub fn validate(&self) -> Result<()> {
        for (i, (x_a, x_b, t)) in self.vessels().into_iter().enumerate() {
            if !(x_a >= 0.0 && x_b >= 0.0 && x_a + x_b <= 1.0 + 1e-12) {
                return Err(Error::Evaluation(format!(
                    "vessel {} mass fractions out of domain: x_a={x_a}, x_b={x_b}",
                    i + 1
                )));
            }
            if !(t > 0.0) {
                return Err(Error::Evaluation(format!(
                    "vessel {} temperature not positive: {t}",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    /// Projects the state back into the physical domain: mass fractions are
    /// clipped to `[0, 1]` and each pair rescaled if it sums above one;
    /// temperatures are floored at 1 K.
    pub fn project_feasible(mut self) -> Self {
        let project_pair = |a: &mut f64, b: &mut f64| {
            *a = a.clamp(0.0, 1.0);
            *b = b.clamp(0.0, 1.0);
            let total = *a + *b;
            if total > 1.0 {
                *a /= total;
                *b /= total;
            }
        };
        project_pair(&mut self.x_a1, &mut self.x_b1);
        project_pair(&mut self.x_a2, &mut self.x_b2);
        project_pair(&mut self.x_a3, &mut self.x_b3);
        self.t1 = self.t1.max(1.0);
        self.t2 = self.t2.max(1.0);
        self.t3 = self.t3.max(1.0);
        self
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|v| v.is_finite())
    }
}
