use crate::error::{Error, Result};
use crate::process::{HeatInputs, ProcessParams, ProcessState};

/// Denominators smaller than this are treated as degenerate rather than
/// letting a near-zero division poison downstream state with huge values.
const DEGENERATE_DENOMINATOR: f64 = 1e-12;

/// Composition of the overhead vapor given the separator liquid composition
/// and the relative volatilities. Outputs are nonnegative and sum to one.
pub fn vapor_composition(
    x_a3: f64,
    x_b3: f64,
    x_c3: f64,
    alpha_a: f64,
    alpha_b: f64,
    alpha_c: f64,
) -> Result<(f64, f64, f64)> {
    let den = alpha_a * x_a3 + alpha_b * x_b3 + alpha_c * x_c3;
    if !(den > DEGENERATE_DENOMINATOR) {
        return Err(Error::Evaluation(format!(
            "degenerate separator composition: volatility-weighted denominator {den:.3e} \
             (x_a3={x_a3}, x_b3={x_b3}, x_c3={x_c3})"
        )));
    }
    Ok((alpha_a * x_a3 / den, alpha_b * x_b3 / den, alpha_c * x_c3 / den))
}

/// Right-hand side of the nine material and energy balances, state-units per
/// hour. The heat duties are taken as given (zero-order hold is applied by
/// the integrator, not here).
pub fn derivatives(
    s: &ProcessState,
    a: &HeatInputs,
    p: &ProcessParams,
) -> Result<[f64; 9]> {
    let x_c3 = 1.0 - s.x_a3 - s.x_b3;
    let (x_ar, x_br, x_cr) =
        vapor_composition(s.x_a3, s.x_b3, x_c3, p.alpha_a, p.alpha_b, p.alpha_c)?;

    // Arrhenius rates in each reactor, 1/h.
    let r11 = p.k1 * (-p.e1 / (p.r * s.t1)).exp();
    let r21 = p.k2 * (-p.e2 / (p.r * s.t1)).exp();
    let r12 = p.k1 * (-p.e1 / (p.r * s.t2)).exp();
    let r22 = p.k2 * (-p.e2 / (p.r * s.t2)).exp();

    let rcp_v1 = p.rho_den * p.c_p * p.v1;
    let rcp_v2 = p.rho_den * p.c_p * p.v2;
    let rcp_v3 = p.rho_den * p.c_p * p.v3;
    let f_out3 = p.fr + p.fp;

    let d = [
        // Reactor 1
        p.f10 / p.v1 * (p.x_a10 - s.x_a1) + p.fr / p.v1 * (x_ar - s.x_a1) - r11 * s.x_a1,
        p.f10 / p.v1 * (p.x_b10 - s.x_b1) + p.fr / p.v1 * (x_br - s.x_b1) + r11 * s.x_a1
            - r21 * s.x_b1,
        p.f10 / p.v1 * (p.t10 - s.t1) + p.fr / p.v1 * (s.t3 - s.t1)
            - p.dh1 / p.c_p * r11 * s.x_a1
            - p.dh2 / p.c_p * r21 * s.x_b1
            + a.q1 / rcp_v1,
        // Reactor 2
        p.f1 / p.v2 * (s.x_a1 - s.x_a2) + p.f20 / p.v2 * (p.x_a20 - s.x_a2) - r12 * s.x_a2,
        p.f1 / p.v2 * (s.x_b1 - s.x_b2) + p.f20 / p.v2 * (p.x_b20 - s.x_b2) + r12 * s.x_a2
            - r22 * s.x_b2,
        p.f1 / p.v2 * (s.t1 - s.t2) + p.f20 / p.v2 * (p.t20 - s.t2)
            - p.dh1 / p.c_p * r12 * s.x_a2
            - p.dh2 / p.c_p * r22 * s.x_b2
            + a.q2 / rcp_v2,
        // Separator
        p.f2 / p.v3 * (s.x_a2 - s.x_a3) - f_out3 / p.v3 * (x_ar - s.x_a3),
        p.f2 / p.v3 * (s.x_b2 - s.x_b3) - f_out3 / p.v3 * (x_br - s.x_b3),
        p.f2 / p.v3 * (s.t2 - s.t3)
            + a.q3 / rcp_v3
            + f_out3 / rcp_v3 * (x_ar * p.dh_vap1 + x_br * p.dh_vap2 + x_cr * p.dh_vap3),
    ];

    if let Some(i) = d.iter().position(|v| !v.is_finite()) {
        return Err(Error::Evaluation(format!(
            "non-finite derivative at component {i}"
        )));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn vapor_symmetric_case() {
        let (a, b, c) = vapor_composition(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 2.0, 2.0, 2.0).unwrap();
        assert_abs_diff_eq!(a, 1.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(b, 1.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(c, 1.0 / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn vapor_single_component() {
        let (a, b, c) = vapor_composition(1.0, 0.0, 0.0, 3.5, 1.1, 0.5).unwrap();
        assert_eq!((a, b, c), (1.0, 0.0, 0.0));
    }

    #[test]
    fn vapor_direct_evaluation() {
        // (0.2, 0.5, 0.3) with volatilities (3, 2, 1):
        // denominator 0.6 + 1.0 + 0.3 = 1.9
        let (a, b, c) = vapor_composition(0.2, 0.5, 0.3, 3.0, 2.0, 1.0).unwrap();
        assert_abs_diff_eq!(a, 0.6 / 1.9, epsilon = 1e-15);
        assert_abs_diff_eq!(b, 1.0 / 1.9, epsilon = 1e-15);
        assert_abs_diff_eq!(c, 0.3 / 1.9, epsilon = 1e-15);
    }

    #[test]
    fn vapor_zero_denominator_errors() {
        assert!(vapor_composition(0.0, 0.0, 0.0, 3.5, 1.1, 0.5).is_err());
    }

    #[test]
    fn vapor_sums_to_one() {
        for (xa, xb) in [(0.1, 0.2), (0.5, 0.5), (0.9, 0.05), (0.0, 1.0)] {
            let xc = 1.0 - xa - xb;
            let (a, b, c) = vapor_composition(xa, xb, xc, 3.5, 1.1, 0.5).unwrap();
            assert_abs_diff_eq!(a + b + c, 1.0, epsilon = 1e-12);
            assert!(a >= 0.0 && b >= 0.0 && c >= 0.0);
        }
    }

    #[test]
    fn all_terms_vanish_without_flows_reactions_or_heating() {
        let mut p = ProcessParams::default();
        p.f10 = 1e-300; // keep validation happy while terms vanish numerically
        p.f20 = 1e-300;
        p.f1 = 1e-300;
        p.f2 = 1e-300;
        p.fr = 1e-300;
        p.fp = 1e-300;
        p.k1 = 0.0;
        p.k2 = 0.0;
        let s = ProcessState::from_array([0.3, 0.4, 450.0, 0.2, 0.5, 440.0, 0.1, 0.6, 445.0]);
        let a = HeatInputs::from_array([0.0, 0.0, 0.0]);
        let d = derivatives(&s, &a, &p).unwrap();
        for v in d {
            assert_abs_diff_eq!(v, 0.0, epsilon = 1e-250);
        }
    }

    /// Independent term-by-term evaluation of the balances at an arbitrary
    /// interior state, written out literally rather than via shared code.
    #[test]
    fn matches_spreadsheet_style_evaluation() {
        let p = ProcessParams::default();
        let s = ProcessState::from_array([0.25, 0.45, 455.0, 0.22, 0.48, 442.0, 0.12, 0.55, 461.0]);
        let a = HeatInputs::from_array([2.0e6, 0.8e6, 1.5e6]);

        let xc3 = 1.0 - 0.12 - 0.55;
        let den = 3.5 * 0.12 + 1.1 * 0.55 + 0.5 * xc3;
        let xar = 3.5 * 0.12 / den;
        let xbr = 1.1 * 0.55 / den;
        let xcr = 0.5 * xc3 / den;

        let r11 = 9.972e6 * (-5.0e4 / (8.314 * 455.0)).exp();
        let r21 = 9.36e6 * (-6.0e4 / (8.314 * 455.0)).exp();
        let r12 = 9.972e6 * (-5.0e4 / (8.314 * 442.0)).exp();
        let r22 = 9.36e6 * (-6.0e4 / (8.314 * 442.0)).exp();

        let expected = [
            5.04 * (1.0 - 0.25) + 50.4 * (xar - 0.25) - r11 * 0.25,
            5.04 * (0.0 - 0.45) + 50.4 * (xbr - 0.45) + r11 * 0.25 - r21 * 0.45,
            5.04 * (300.0 - 455.0) + 50.4 * (461.0 - 455.0) - 1.2e3 / 2.0 * r11 * 0.25
                - 1.4e3 / 2.0 * r21 * 0.45
                + 2.0e6 / (500.0 * 2.0 * 1.0),
            55.44 / 0.5 * (0.25 - 0.22) + 5.04 / 0.5 * (1.0 - 0.22) - r12 * 0.22,
            55.44 / 0.5 * (0.45 - 0.48) + 5.04 / 0.5 * (0.0 - 0.48) + r12 * 0.22 - r22 * 0.48,
            55.44 / 0.5 * (455.0 - 442.0) + 5.04 / 0.5 * (300.0 - 442.0)
                - 1.2e3 / 2.0 * r12 * 0.22
                - 1.4e3 / 2.0 * r22 * 0.48
                + 0.8e6 / (500.0 * 2.0 * 0.5),
            60.48 * (0.22 - 0.12) - (50.4 + 0.504) * (xar - 0.12),
            60.48 * (0.48 - 0.55) - (50.4 + 0.504) * (xbr - 0.55),
            60.48 * (442.0 - 461.0)
                + 1.5e6 / (500.0 * 2.0 * 1.0)
                + (50.4 + 0.504) / (500.0 * 2.0 * 1.0)
                    * (xar * -2.0e4 + xbr * -1.0e4 + xcr * -2.5e4),
        ];

        let d = derivatives(&s, &a, &p).unwrap();
        for (got, want) in d.iter().zip(expected.iter()) {
            assert_abs_diff_eq!(got, want, epsilon = 1e-9 * want.abs().max(1.0));
        }
    }
}
