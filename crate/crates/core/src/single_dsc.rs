//! Single-DSC problems: the altitude-to-radius ratio that maximises
//! coverage, the feasible altitude under a ceiling, the minimum transmit
//! power for a target radius, and the coverage radius for a given power.

use crate::channel::{mean_loss_fast, mean_path_loss, Environment, RadioConfig};
use crate::error::{Error, Result};
use crate::roots::bisect;

/// Absolute tolerance on the optimal ratio.
pub const RATIO_TOLERANCE: f64 = 1e-9;
/// Width of the final bracket when solving for a coverage radius, m.
pub const RADIUS_TOLERANCE: f64 = 0.01;
/// Largest coverage radius the solvers will consider, m.
pub const RADIUS_SEARCH_LIMIT: f64 = 1e6;

/// Elevation grid used by [`verify_unique_minimum`], degrees.
pub const SCAN_START_DEG: f64 = 5.0;
pub const SCAN_END_DEG: f64 = 89.0;
pub const SCAN_STEP_DEG: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AltitudeSolution {
    /// Optimal altitude-to-radius ratio h/R.
    pub mu_opt: f64,
    /// Unconstrained optimal altitude, m.
    pub h_opt: f64,
    /// `min(h_max, h_opt)`, m.
    pub h_feasible: f64,
    /// Set when the ceiling binds.
    pub clamped: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerSolution {
    /// Minimum transmit power, dBm.
    pub pt_min: f64,
    /// Altitude the power was evaluated at, m.
    pub h_used: f64,
    /// Radius the power covers, m.
    pub r_covered: f64,
}

/// Best altitude and resulting coverage radius for a fixed transmit power.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverageSolution {
    pub h: f64,
    pub r_max: f64,
    pub clamped: bool,
}

/// Outcome of the elevation scan behind [`verify_unique_minimum`].
#[derive(Debug, Clone, PartialEq)]
pub struct UniqueMinimum {
    /// At most one sign change, and only from falling to rising.
    pub unique: bool,
    /// No sign change at all: the loss is monotone over the scan.
    pub monotone: bool,
    pub sign_changes: usize,
    /// Grid minimiser when the scan found an interior minimum, rad.
    pub theta_star: Option<f64>,
    /// Grid step used, rad.
    pub step: f64,
}

fn lambda_z(mu: f64, env: &Environment) -> f64 {
    env.alpha * (-env.beta * (mu.atan().to_degrees() - env.alpha)).exp()
}

/// Left-hand side of the stationarity condition for the altitude ratio.
/// Positive below the optimum, negative above it.
pub fn ratio_residual(mu: f64, env: &Environment) -> f64 {
    let z = lambda_z(mu, env);
    let slope =
        180.0 * env.excess_gap() * env.beta * z / (std::f64::consts::PI * (z + 1.0).powi(2));
    slope - 20.0 * mu / std::f64::consts::LN_10
}

/// Altitude-to-radius ratio that minimises the mean path loss at the
/// coverage edge. Depends only on the environment.
pub fn optimal_ratio(env: &Environment) -> Result<f64> {
    let lo = 1f64.to_radians().tan();
    let hi = 89f64.to_radians().tan();
    bisect(|mu| ratio_residual(mu, env), lo, hi, RATIO_TOLERANCE).ok_or_else(|| {
        Error::NoInteriorOptimum(format!(
            "stationarity condition has no sign change for elevations in (1, 89) degrees \
             (alpha = {}, beta = {}, excess gap = {} dB)",
            env.alpha,
            env.beta,
            env.excess_gap()
        ))
    })
}

pub fn optimal_altitude_for_radius(
    r_c: f64,
    env: &Environment,
    h_max: f64,
) -> Result<AltitudeSolution> {
    if !(r_c > 0.0) || !r_c.is_finite() {
        return Err(Error::domain(format!(
            "target radius must be > 0, got {r_c}"
        )));
    }
    if !(h_max > 0.0) {
        return Err(Error::domain(format!(
            "altitude ceiling must be > 0, got {h_max}"
        )));
    }
    let mu_opt = optimal_ratio(env)?;
    let h_opt = mu_opt * r_c;
    Ok(AltitudeSolution {
        mu_opt,
        h_opt,
        h_feasible: h_opt.min(h_max),
        clamped: h_opt > h_max,
    })
}

/// Link budget in dB: `pt_min = L(r_c, h_feasible) + gamma_th + noise`.
pub fn min_transmit_power(
    r_c: f64,
    env: &Environment,
    radio: &RadioConfig,
) -> Result<PowerSolution> {
    let alt = optimal_altitude_for_radius(r_c, env, radio.h_max)?;
    let loss = mean_path_loss(r_c, alt.h_feasible, radio, env)?;
    Ok(PowerSolution {
        pt_min: loss + radio.gamma_th + radio.noise,
        h_used: alt.h_feasible,
        r_covered: r_c,
    })
}

/// Largest ground radius at which the SNR from altitude `h` with transmit
/// power `pt` (dBm) still meets the threshold.
pub fn max_coverage_radius(pt: f64, h: f64, env: &Environment, radio: &RadioConfig) -> Result<f64> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::domain(format!("altitude must be > 0, got {h}")));
    }
    let margin = |r: f64| pt - mean_loss_fast(r, h, radio, env) - radio.noise - radio.gamma_th;
    let at_nadir = margin(0.0);
    if !(at_nadir >= 0.0) {
        return Err(Error::InsufficientPower {
            snr_db: at_nadir + radio.gamma_th,
            gamma_th_db: radio.gamma_th,
        });
    }
    if margin(RADIUS_SEARCH_LIMIT) >= 0.0 {
        return Err(Error::config(format!(
            "link still closes at {RADIUS_SEARCH_LIMIT} m; no upper bracket for the coverage radius"
        )));
    }
    if at_nadir == 0.0 {
        return Ok(0.0);
    }
    bisect(margin, 0.0, RADIUS_SEARCH_LIMIT, RADIUS_TOLERANCE)
        .ok_or_else(|| Error::config("coverage radius bracket lost its sign change"))
}

/// Altitude and radius of maximum coverage for the radio's own transmit
/// power: the DSC flies at ratio `mu_opt` to its coverage edge, unless the
/// ceiling binds.
pub fn optimal_coverage(env: &Environment, radio: &RadioConfig) -> Result<CoverageSolution> {
    let mu = optimal_ratio(env)?;
    let budget = radio.pt - radio.noise - radio.gamma_th;
    let margin = |r: f64| budget - mean_loss_fast(r, mu * r, radio, env);
    // The slant range shrinks to zero with r along the optimal ray, so the
    // lower end always closes; only the far end needs checking.
    if margin(RADIUS_SEARCH_LIMIT) >= 0.0 {
        return Err(Error::config(format!(
            "link still closes at {RADIUS_SEARCH_LIMIT} m; no upper bracket for the coverage radius"
        )));
    }
    let r_opt = bisect(margin, 1e-9, RADIUS_SEARCH_LIMIT, RADIUS_TOLERANCE)
        .ok_or_else(|| Error::config("coverage radius bracket lost its sign change"))?;
    let h_opt = mu * r_opt;
    if h_opt <= radio.h_max {
        return Ok(CoverageSolution {
            h: h_opt,
            r_max: r_opt,
            clamped: false,
        });
    }
    let r_max = max_coverage_radius(radio.pt, radio.h_max, env, radio)?;
    Ok(CoverageSolution {
        h: radio.h_max,
        r_max,
        clamped: true,
    })
}

/// Scans the mean path loss over elevation at fixed ground radius and
/// checks that its finite differences change sign at most once, from
/// falling to rising.
pub fn verify_unique_minimum(
    env: &Environment,
    radio: &RadioConfig,
    r_o: f64,
) -> Result<UniqueMinimum> {
    if !(r_o > 0.0) || !r_o.is_finite() {
        return Err(Error::domain(format!(
            "ground radius must be > 0, got {r_o}"
        )));
    }
    let n = ((SCAN_END_DEG - SCAN_START_DEG) / SCAN_STEP_DEG).round() as usize;
    let losses: Vec<f64> = (0..=n)
        .map(|i| {
            let theta = (SCAN_START_DEG + i as f64 * SCAN_STEP_DEG).to_radians();
            mean_loss_fast(r_o, r_o * theta.tan(), radio, env)
        })
        .collect();

    let mut sign_changes = 0;
    let mut falling_to_rising = true;
    let mut last_sign = 0.0;
    for w in losses.windows(2) {
        let diff = w[1] - w[0];
        if diff == 0.0 {
            continue;
        }
        let sign = diff.signum();
        if last_sign != 0.0 && sign != last_sign {
            sign_changes += 1;
            if !(last_sign < 0.0 && sign > 0.0) {
                falling_to_rising = false;
            }
        }
        last_sign = sign;
    }

    let theta_star = if sign_changes == 1 && falling_to_rising {
        let (idx, _) = losses
            .iter()
            .enumerate()
            .fold(
                (0, f64::INFINITY),
                |best, (i, &l)| if l < best.1 { (i, l) } else { best },
            );
        Some((SCAN_START_DEG + idx as f64 * SCAN_STEP_DEG).to_radians())
    } else {
        None
    };

    Ok(UniqueMinimum {
        unique: sign_changes == 0 || (sign_changes == 1 && falling_to_rising),
        monotone: sign_changes == 0,
        sign_changes,
        theta_star,
        step: SCAN_STEP_DEG.to_radians(),
    })
}
