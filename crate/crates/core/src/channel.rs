//! Air-to-ground propagation: free-space loss plus an excess loss that
//! depends on whether the link is LOS or NLOS, weighted by an
//! elevation-dependent LOS probability.
//!
//! Angles cross the API in radians. The LOS-probability sigmoid is
//! parameterised in degrees, so the conversion happens internally.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// Speed of light in vacuum, m/s (exact SI value).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Statistical propagation parameters for one terrain class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Environment {
    /// Sigmoid offset of the LOS probability (dimensionless, also used as
    /// the centre angle in degrees).
    pub alpha: f64,
    /// Sigmoid slope, per degree.
    pub beta: f64,
    /// Excess loss over free space on LOS links, dB.
    pub xi_los: f64,
    /// Excess loss over free space on NLOS links, dB.
    pub xi_nlos: f64,
}

impl Environment {
    pub fn new(alpha: f64, beta: f64, xi_los: f64, xi_nlos: f64) -> Result<Self> {
        let env = Environment {
            alpha,
            beta,
            xi_los,
            xi_nlos,
        };
        env.validate()?;
        Ok(env)
    }

    /// Urban terrain: alpha 9.6, beta 0.28, 1 dB LOS and 20 dB NLOS excess.
    pub fn urban() -> Self {
        Environment {
            alpha: 9.6,
            beta: 0.28,
            xi_los: 1.0,
            xi_nlos: 20.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha.is_finite()) {
            return Err(Error::config(format!(
                "alpha must be > 0, got {}",
                self.alpha
            )));
        }
        if !(self.beta > 0.0 && self.beta.is_finite()) {
            return Err(Error::config(format!(
                "beta must be > 0, got {}",
                self.beta
            )));
        }
        if !(self.xi_los >= 0.0 && self.xi_nlos > self.xi_los && self.xi_nlos.is_finite()) {
            return Err(Error::config(format!(
                "need xi_nlos > xi_los >= 0, got xi_los = {}, xi_nlos = {}",
                self.xi_los, self.xi_nlos
            )));
        }
        Ok(())
    }

    /// `xi_nlos - xi_los`, the only part of the excess loss that shapes
    /// the altitude trade-off.
    pub fn excess_gap(&self) -> f64 {
        self.xi_nlos - self.xi_los
    }
}

/// Radio parameters of one DSC link.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadioConfig {
    /// Carrier frequency, Hz.
    pub fc: f64,
    /// Transmit power, dBm.
    pub pt: f64,
    /// Noise power, dBm.
    pub noise: f64,
    /// SNR/SINR threshold, dB.
    pub gamma_th: f64,
    /// Altitude ceiling, m.
    pub h_max: f64,
}

impl RadioConfig {
    pub fn new(fc: f64, pt: f64, noise: f64, gamma_th: f64, h_max: f64) -> Result<Self> {
        let radio = RadioConfig {
            fc,
            pt,
            noise,
            gamma_th,
            h_max,
        };
        radio.validate()?;
        Ok(radio)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.fc > 0.0 && self.fc.is_finite()) {
            return Err(Error::config(format!("fc must be > 0, got {}", self.fc)));
        }
        if !(self.h_max > 0.0) {
            return Err(Error::config(format!(
                "h_max must be > 0, got {}",
                self.h_max
            )));
        }
        if self.pt.is_nan() || !self.noise.is_finite() || !self.gamma_th.is_finite() {
            return Err(Error::config("pt, noise and gamma_th must be numbers"));
        }
        Ok(())
    }

    /// Same radio with a different transmit power.
    pub fn with_pt(self, pt: f64) -> Self {
        RadioConfig { pt, ..self }
    }
}

/// Ground distance and altitude of a DSC-to-user link.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkGeometry {
    pub r: f64,
    pub h: f64,
}

impl LinkGeometry {
    pub fn new(r: f64, h: f64) -> Result<Self> {
        if !(r >= 0.0) || !r.is_finite() {
            return Err(Error::domain(format!(
                "ground distance must be >= 0, got {r}"
            )));
        }
        if !(h > 0.0) || !h.is_finite() {
            return Err(Error::domain(format!("altitude must be > 0, got {h}")));
        }
        Ok(LinkGeometry { r, h })
    }

    /// Slant range, m.
    pub fn distance(&self) -> f64 {
        self.r.hypot(self.h)
    }

    /// Elevation angle seen from the user, rad. A nadir user (r = 0) sits
    /// at exactly pi/2.
    pub fn elevation(&self) -> f64 {
        self.h.atan2(self.r)
    }
}

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(x: f64) -> f64 {
    10.0 * x.log10()
}

/// Converts dBm to milliwatts. `-inf` maps to 0.
pub fn dbm_to_mw(dbm: f64) -> f64 {
    db_to_linear(dbm)
}

fn free_space_loss(d: f64, radio: &RadioConfig) -> f64 {
    20.0 * (4.0 * PI * radio.fc * d / SPEED_OF_LIGHT).log10()
}

fn check_distance(d: f64) -> Result<()> {
    if d > 0.0 && d.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("distance must be > 0, got {d}")))
    }
}

/// Mean LOS path loss at slant range `d`, dB.
pub fn path_loss_los(d: f64, radio: &RadioConfig, env: &Environment) -> Result<f64> {
    check_distance(d)?;
    Ok(free_space_loss(d, radio) + env.xi_los)
}

/// Mean NLOS path loss at slant range `d`, dB.
pub fn path_loss_nlos(d: f64, radio: &RadioConfig, env: &Environment) -> Result<f64> {
    check_distance(d)?;
    Ok(free_space_loss(d, radio) + env.xi_nlos)
}

fn check_elevation(theta: f64) -> Result<()> {
    if (0.0..=FRAC_PI_2).contains(&theta) {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "elevation must lie in [0, pi/2], got {theta}"
        )))
    }
}

fn p_los_unchecked(theta: f64, env: &Environment) -> f64 {
    let deg = theta.to_degrees();
    1.0 / (1.0 + env.alpha * (-env.beta * (deg - env.alpha)).exp())
}

/// Probability of a LOS link at elevation `theta` (rad).
pub fn p_los(theta: f64, env: &Environment) -> Result<f64> {
    check_elevation(theta)?;
    Ok(p_los_unchecked(theta, env))
}

pub fn p_nlos(theta: f64, env: &Environment) -> Result<f64> {
    p_los(theta, env).map(|p| 1.0 - p)
}

/// Probability-weighted mean path loss to a user `r` metres (ground
/// distance) from a DSC hovering at altitude `h`, dB.
pub fn mean_path_loss(r: f64, h: f64, radio: &RadioConfig, env: &Environment) -> Result<f64> {
    let link = LinkGeometry::new(r, h)?;
    Ok(mean_loss_of(&link, radio, env))
}

pub(crate) fn mean_loss_of(link: &LinkGeometry, radio: &RadioConfig, env: &Environment) -> f64 {
    let p = p_los_unchecked(link.elevation(), env);
    free_space_loss(link.distance(), radio) + p * env.xi_los + (1.0 - p) * env.xi_nlos
}

/// Hot-path variant used by the quadrature and grid oracles. Callers
/// guarantee `r >= 0` and `h > 0`.
#[inline]
pub(crate) fn mean_loss_fast(r: f64, h: f64, radio: &RadioConfig, env: &Environment) -> f64 {
    mean_loss_of(&LinkGeometry { r, h }, radio, env)
}

/// Mean path loss as a function of elevation with the ground radius
/// `r_o` held fixed: `mean_path_loss(r_o, r_o * tan(theta))`.
pub fn mean_path_loss_vs_elevation(
    theta: f64,
    r_o: f64,
    radio: &RadioConfig,
    env: &Environment,
) -> Result<f64> {
    if !(theta > 0.0 && theta < FRAC_PI_2) {
        return Err(Error::domain(format!(
            "elevation must lie strictly inside (0, pi/2), got {theta}"
        )));
    }
    if !(r_o > 0.0) || !r_o.is_finite() {
        return Err(Error::domain(format!(
            "ground radius must be > 0, got {r_o}"
        )));
    }
    mean_path_loss(r_o, r_o * theta.tan(), radio, env)
}
