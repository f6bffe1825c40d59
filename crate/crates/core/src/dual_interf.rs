//! Two DSCs sharing one channel.
//!
//! Both DSCs hover on the long axis of the target area (y = 0). DSC2 is
//! anchored so that its interference-free coverage disk touches the +x
//! border, `x2 = a/2 - r_m2`, and DSC1 sits `d` metres further towards -x.
//! Ground points are described in polar coordinates around each DSC, with
//! the angle `phi` measured from the ray pointing at the other DSC.
//!
//! Coverage of DSC i at (r, phi) requires its SINR to reach the threshold.
//! With interference disabled the other DSC contributes no interference;
//! a point then belongs to whichever DSC delivers the stronger signal, so
//! the two per-DSC areas never double count.
//!
//! The covered area is `2 * sum_i int_0^{r_m,i} |covered angles at r| r dr`,
//! integrated with the midpoint rule in r. For each radius the covered angle
//! set is an interval `[phi_min(r), pi]` (SINR grows with phi) intersected
//! with the part of the circle that lies inside the target area, so the
//! angular integral is exact.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::channel::{dbm_to_mw, mean_loss_fast, Environment, RadioConfig};
use crate::dual_free::TargetArea;
use crate::error::{Error, Result};
use crate::roots::first_true;
use crate::single_dsc::max_coverage_radius;

/// Default radial step of the coverage quadrature, m.
pub const DEFAULT_RADIAL_STEP: f64 = 2.0;
/// Angular resolution of the `phi_min` bisection, rad.
pub const PHI_TOLERANCE: f64 = 1e-4;
/// Step of the fallback linear scan when SINR is not monotone in phi, rad.
pub const PHI_SCAN_STEP: f64 = 1e-3;
const MONOTONICITY_PROBES: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dsc {
    First,
    Second,
}

impl Dsc {
    pub fn other(self) -> Dsc {
        match self {
            Dsc::First => Dsc::Second,
            Dsc::Second => Dsc::First,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Dsc::First => 1,
            Dsc::Second => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterferenceScenario {
    pub area: TargetArea,
    pub env: Environment,
    /// Shared carrier, noise and threshold. `pt` and `h_max` are unused;
    /// each DSC carries its own power and altitude.
    pub radio: RadioConfig,
    /// Ground separation of the two DSCs, m.
    pub d: f64,
    pub h1: f64,
    pub h2: f64,
    /// Transmit powers, dBm.
    pub pt1: f64,
    pub pt2: f64,
    /// Interference-free coverage radii at (pt_i, h_i), m.
    pub r_m1: f64,
    pub r_m2: f64,
    /// Whether the other DSC's signal counts as interference.
    pub interference: bool,
    /// Also clip coverage to the area's width (|y| <= b/2). Off by
    /// default, in which case only the -x border clips DSC1.
    pub clip_width: bool,
}

impl InterferenceScenario {
    /// Builds a scenario and solves each DSC's interference-free coverage
    /// radius. Fails when either link cannot close at nadir.
    pub fn new(
        area: TargetArea,
        env: Environment,
        radio: RadioConfig,
        d: f64,
        altitudes: [f64; 2],
        powers: [f64; 2],
    ) -> Result<Self> {
        if !(d > 0.0) || !d.is_finite() {
            return Err(Error::config(format!("separation must be > 0, got {d}")));
        }
        let r_m1 = max_coverage_radius(powers[0], altitudes[0], &env, &radio)?;
        let r_m2 = max_coverage_radius(powers[1], altitudes[1], &env, &radio)?;
        Ok(InterferenceScenario {
            area,
            env,
            radio,
            d,
            h1: altitudes[0],
            h2: altitudes[1],
            pt1: powers[0],
            pt2: powers[1],
            r_m1,
            r_m2,
            interference: true,
            clip_width: false,
        })
    }

    pub fn with_separation(mut self, d: f64) -> Self {
        self.d = d;
        self
    }

    pub fn with_interference(mut self, on: bool) -> Self {
        self.interference = on;
        self
    }

    pub fn with_clip_width(mut self, on: bool) -> Self {
        self.clip_width = on;
        self
    }

    /// Re-solves both coverage radii for new altitudes.
    pub fn with_altitudes(mut self, h1: f64, h2: f64) -> Result<Self> {
        self.r_m1 = max_coverage_radius(self.pt1, h1, &self.env, &self.radio)?;
        self.r_m2 = max_coverage_radius(self.pt2, h2, &self.env, &self.radio)?;
        self.h1 = h1;
        self.h2 = h2;
        Ok(self)
    }

    /// x coordinate of DSC2, `a/2 - r_m2`.
    pub fn x2_anchor(&self) -> f64 {
        0.5 * self.area.a - self.r_m2
    }

    pub fn x1(&self) -> f64 {
        self.x2_anchor() - self.d
    }

    pub fn position(&self, dsc: Dsc) -> f64 {
        match dsc {
            Dsc::First => self.x1(),
            Dsc::Second => self.x2_anchor(),
        }
    }

    pub fn altitude(&self, dsc: Dsc) -> f64 {
        match dsc {
            Dsc::First => self.h1,
            Dsc::Second => self.h2,
        }
    }

    pub fn power(&self, dsc: Dsc) -> f64 {
        match dsc {
            Dsc::First => self.pt1,
            Dsc::Second => self.pt2,
        }
    }

    pub fn r_m(&self, dsc: Dsc) -> f64 {
        match dsc {
            Dsc::First => self.r_m1,
            Dsc::Second => self.r_m2,
        }
    }

    /// Received power from `dsc` at ground distance `r`, mW.
    fn received_mw(&self, dsc: Dsc, r: f64) -> f64 {
        dbm_to_mw(self.power(dsc) - mean_loss_fast(r, self.altitude(dsc), &self.radio, &self.env))
    }

    fn noise_mw(&self) -> f64 {
        dbm_to_mw(self.radio.noise)
    }

    /// Distance to the other DSC from a point at (r, phi) around this one.
    fn other_distance(&self, r: f64, phi: f64) -> f64 {
        (r * r + self.d * self.d - 2.0 * r * self.d * phi.cos())
            .max(0.0)
            .sqrt()
    }

    fn validate(&self) -> Result<()> {
        if !(self.r_m1 > 0.0 && self.r_m2 > 0.0) {
            return Err(Error::config(format!(
                "coverage radii must be > 0, got r_m1 = {}, r_m2 = {}",
                self.r_m1, self.r_m2
            )));
        }
        if !(self.d > 0.0) {
            return Err(Error::config(format!(
                "separation must be > 0, got {}",
                self.d
            )));
        }
        Ok(())
    }
}

/// Angular extent `[phi_min, phi_max]` covered at radius `r`, before any
/// width clipping.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarCoverageSlice {
    pub r: f64,
    pub phi_min: f64,
    pub phi_max: f64,
}

impl PolarCoverageSlice {
    pub fn extent(&self) -> f64 {
        self.phi_max - self.phi_min
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverageReport {
    /// Effective covered area, m^2.
    pub area_covered: f64,
    pub area_1: f64,
    pub area_2: f64,
    /// `area_covered / (a * b)`.
    pub ratio: f64,
    pub d: f64,
    pub h1: f64,
    pub h2: f64,
}

/// Received-signal quality of `dsc` at (r, phi) around it, dB. SINR when
/// interference is on, SNR otherwise.
pub fn sinr_from(dsc: Dsc, r: f64, phi: f64, s: &InterferenceScenario) -> f64 {
    let own = s.received_mw(dsc, r);
    let noise = s.noise_mw();
    if s.interference {
        let other = s.received_mw(dsc.other(), s.other_distance(r, phi));
        10.0 * (own / (other + noise)).log10()
    } else {
        10.0 * (own / noise).log10()
    }
}

/// SINR of DSC1 at ground distance `r1` and angle `phi` from the ray
/// towards DSC2, dB.
pub fn sinr_at(r1: f64, phi: f64, s: &InterferenceScenario) -> f64 {
    sinr_from(Dsc::First, r1, phi, s)
}

/// Evaluates the coverage margin of one DSC around a fixed radius. The own
/// received power only depends on r, so it is computed once.
struct RadiusProbe<'a> {
    s: &'a InterferenceScenario,
    dsc: Dsc,
    r: f64,
    own_mw: f64,
    noise_mw: f64,
}

impl<'a> RadiusProbe<'a> {
    fn new(s: &'a InterferenceScenario, dsc: Dsc, r: f64) -> Self {
        RadiusProbe {
            s,
            dsc,
            r,
            own_mw: s.received_mw(dsc, r),
            noise_mw: s.noise_mw(),
        }
    }

    /// Non-negative exactly when the point is covered by this DSC; grows
    /// with phi.
    fn margin(&self, phi: f64) -> f64 {
        let other = self
            .s
            .received_mw(self.dsc.other(), self.s.other_distance(self.r, phi));
        let gamma = self.s.radio.gamma_th;
        if self.s.interference {
            10.0 * (self.own_mw / (other + self.noise_mw)).log10() - gamma
        } else {
            let snr = 10.0 * (self.own_mw / self.noise_mw).log10() - gamma;
            let lead = 10.0 * (self.own_mw / other).log10();
            snr.min(lead)
        }
    }

    fn phi_min(&self) -> f64 {
        if self.margin(0.0) >= 0.0 {
            return 0.0;
        }
        if self.margin(PI) < 0.0 {
            return PI;
        }
        let probes: Vec<f64> = (0..MONOTONICITY_PROBES)
            .map(|k| self.margin(PI * k as f64 / (MONOTONICITY_PROBES - 1) as f64))
            .collect();
        let monotone = probes.windows(2).all(|w| w[1] >= w[0] - 1e-12);
        if monotone {
            first_true(|phi| self.margin(phi) >= 0.0, 0.0, PI, PHI_TOLERANCE)
        } else {
            let steps = (PI / PHI_SCAN_STEP).ceil() as usize;
            (0..=steps)
                .map(|k| (k as f64 * PHI_SCAN_STEP).min(PI))
                .find(|&phi| self.margin(phi) >= 0.0)
                .unwrap_or(PI)
        }
    }
}

/// Upper angular limit keeping DSC1's coverage inside the -x border.
pub fn phi_max(r: f64, s: &InterferenceScenario) -> f64 {
    ((s.d + s.r_m2 - s.area.a) / r).clamp(-1.0, 1.0).acos()
}

/// Smallest angle at radius `r` from which `dsc` covers the ground; `pi`
/// when nothing at that radius is covered.
pub fn phi_min(r: f64, dsc: Dsc, s: &InterferenceScenario) -> f64 {
    RadiusProbe::new(s, dsc, r).phi_min()
}

/// Angles at radius `r` around `dsc` whose points lie inside the area
/// along x. Returns an empty window as `(x, x)`.
fn x_window(r: f64, dsc: Dsc, s: &InterferenceScenario) -> (f64, f64) {
    if !s.clip_width {
        return match dsc {
            Dsc::First => (0.0, phi_max(r, s)),
            Dsc::Second => (0.0, PI),
        };
    }
    let half = 0.5 * s.area.a;
    let xc = s.position(dsc);
    let (c_lo, c_hi) = match dsc {
        Dsc::First => ((-half - xc) / r, (half - xc) / r),
        Dsc::Second => ((xc - half) / r, (xc + half) / r),
    };
    if c_lo > 1.0 || c_hi < -1.0 {
        return (0.0, 0.0);
    }
    (c_hi.clamp(-1.0, 1.0).acos(), c_lo.clamp(-1.0, 1.0).acos())
}

/// Covered angular interval at radius `r`, clipped along x.
pub fn coverage_slice(r: f64, dsc: Dsc, s: &InterferenceScenario) -> PolarCoverageSlice {
    let start = phi_min(r, dsc, s);
    let (lo, hi) = x_window(r, dsc, s);
    let phi_min = start.max(lo);
    PolarCoverageSlice {
        r,
        phi_min,
        phi_max: hi.max(phi_min),
    }
}

fn overlap(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.1.min(b.1) - a.0.max(b.0)).max(0.0)
}

/// Measure of the slice's angles whose points satisfy |y| <= b/2.
fn width_clipped_extent(slice: &PolarCoverageSlice, half_width: f64) -> f64 {
    if slice.r <= half_width {
        return slice.extent();
    }
    let t = (half_width / slice.r).asin();
    let span = (slice.phi_min, slice.phi_max);
    overlap(span, (0.0, t)) + overlap(span, (PI - t, PI))
}

fn dsc_area(s: &InterferenceScenario, dsc: Dsc, radial_step: f64) -> f64 {
    let r_m = s.r_m(dsc);
    let n = (r_m / radial_step).ceil().max(1.0) as usize;
    let dr = r_m / n as f64;
    let half_width = 0.5 * s.area.b;
    let sum: f64 = (0..n)
        .map(|k| {
            let r = (k as f64 + 0.5) * dr;
            let slice = coverage_slice(r, dsc, s);
            let extent = if s.clip_width {
                width_clipped_extent(&slice, half_width)
            } else {
                slice.extent()
            };
            r * extent
        })
        .sum();
    2.0 * sum * dr
}

/// Effective coverage with the default 2 m radial step.
pub fn effective_coverage(s: &InterferenceScenario) -> Result<CoverageReport> {
    effective_coverage_with_step(s, DEFAULT_RADIAL_STEP)
}

pub fn effective_coverage_with_step(
    s: &InterferenceScenario,
    radial_step: f64,
) -> Result<CoverageReport> {
    s.validate()?;
    if !(radial_step > 0.0) {
        return Err(Error::config(format!(
            "radial step must be > 0, got {radial_step}"
        )));
    }
    let area_1 = dsc_area(s, Dsc::First, radial_step);
    let area_2 = dsc_area(s, Dsc::Second, radial_step);
    let area_covered = area_1 + area_2;
    Ok(CoverageReport {
        area_covered,
        area_1,
        area_2,
        ratio: area_covered / s.area.size(),
        d: s.d,
        h1: s.h1,
        h2: s.h2,
    })
}

/// Whether a ground point (x, y), relative to the area centre, is covered
/// by at least one DSC. Counts each point once.
pub fn covered_at_point(x: f64, y: f64, s: &InterferenceScenario) -> bool {
    let gamma = s.radio.gamma_th;
    let noise = s.noise_mw();
    let r1 = (x - s.x1()).hypot(y);
    let r2 = (x - s.x2_anchor()).hypot(y);
    let p1 = s.received_mw(Dsc::First, r1);
    let p2 = s.received_mw(Dsc::Second, r2);
    let (i1, i2) = if s.interference { (p2, p1) } else { (0.0, 0.0) };
    10.0 * (p1 / (i1 + noise)).log10() >= gamma || 10.0 * (p2 / (i2 + noise)).log10() >= gamma
}

/// Inclusive arithmetic grid `min, min + step, ..., <= max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchGrid {
    pub min: f64,
    pub max: f64,
    pub step: f64,
}

impl SearchGrid {
    pub fn new(min: f64, max: f64, step: f64) -> Result<Self> {
        if !(step > 0.0) || !step.is_finite() {
            return Err(Error::EmptyGrid(format!("step must be > 0, got {step}")));
        }
        if !(max >= min) || !min.is_finite() || !max.is_finite() {
            return Err(Error::EmptyGrid(format!(
                "need min <= max, got [{min}, {max}]"
            )));
        }
        Ok(SearchGrid { min, max, step })
    }

    pub fn single(value: f64) -> Self {
        SearchGrid {
            min: value,
            max: value,
            step: 1.0,
        }
    }

    /// Separations 200..=1800 m every 25 m.
    pub fn default_separation() -> Self {
        SearchGrid {
            min: 200.0,
            max: 1800.0,
            step: 25.0,
        }
    }

    /// Altitudes 100..=1000 m every 25 m.
    pub fn default_altitude() -> Self {
        SearchGrid {
            min: 100.0,
            max: 1000.0,
            step: 25.0,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        let n = ((self.max - self.min) / self.step + 1e-9).floor() as usize + 1;
        (0..n).map(|i| self.min + i as f64 * self.step).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    /// One report per evaluated grid point, in grid order.
    pub rows: Vec<CoverageReport>,
    /// First row attaining the maximum ratio.
    pub best: CoverageReport,
}

fn first_argmax(rows: &[CoverageReport]) -> Option<CoverageReport> {
    let mut best: Option<&CoverageReport> = None;
    for row in rows {
        if best.is_none_or(|b| row.ratio > b.ratio) {
            best = Some(row);
        }
    }
    best.copied()
}

/// Sweeps the separation with everything else taken from `template`.
pub fn optimal_separation(
    template: &InterferenceScenario,
    grid: &SearchGrid,
) -> Result<SearchResult> {
    let ds = grid.values();
    if ds.is_empty() {
        return Err(Error::EmptyGrid("separation grid has no points".into()));
    }
    let rows = ds
        .par_iter()
        .map(|&d| effective_coverage(&template.with_separation(d)))
        .collect::<Result<Vec<_>>>()?;
    let best = first_argmax(&rows).expect("non-empty rows");
    Ok(SearchResult { rows, best })
}

/// Exhaustive search over separation and both altitudes, ordered by d,
/// then h1, then h2. Altitudes where a DSC cannot close its link are
/// skipped.
pub fn optimal_joint(
    template: &InterferenceScenario,
    d_grid: &SearchGrid,
    h1_grid: &SearchGrid,
    h2_grid: &SearchGrid,
) -> Result<SearchResult> {
    let ds = d_grid.values();
    let h1s = h1_grid.values();
    let h2s = h2_grid.values();
    if ds.is_empty() || h1s.is_empty() || h2s.is_empty() {
        return Err(Error::EmptyGrid(
            "joint search needs three non-empty grids".into(),
        ));
    }
    let radius = |pt: f64, h: f64| -> Result<Option<f64>> {
        match max_coverage_radius(pt, h, &template.env, &template.radio) {
            Ok(r) if r > 0.0 => Ok(Some(r)),
            Ok(_) | Err(Error::InsufficientPower { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    };
    let r1s = h1s
        .iter()
        .map(|&h| radius(template.pt1, h))
        .collect::<Result<Vec<_>>>()?;
    let r2s = h2s
        .iter()
        .map(|&h| radius(template.pt2, h))
        .collect::<Result<Vec<_>>>()?;

    let mut points = Vec::with_capacity(ds.len() * h1s.len() * h2s.len());
    for &d in &ds {
        for (i, &h1) in h1s.iter().enumerate() {
            for (j, &h2) in h2s.iter().enumerate() {
                if let (Some(r_m1), Some(r_m2)) = (r1s[i], r2s[j]) {
                    points.push(InterferenceScenario {
                        d,
                        h1,
                        h2,
                        r_m1,
                        r_m2,
                        ..*template
                    });
                }
            }
        }
    }
    if points.is_empty() {
        return Err(Error::EmptyGrid(
            "no altitude pair closes both links".into(),
        ));
    }
    let rows = points
        .par_iter()
        .map(effective_coverage)
        .collect::<Result<Vec<_>>>()?;
    let best = first_argmax(&rows).expect("non-empty rows");
    Ok(SearchResult { rows, best })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    /// Transmit power that gives a 550 m interference-free radius at 300 m.
    pub(crate) const CALIBRATED_PT: f64 = -13.743_200_862_086;

    fn radio() -> RadioConfig {
        RadioConfig::new(2e9, CALIBRATED_PT, -120.0, 10.0, 10_000.0).unwrap()
    }

    fn scenario(d: f64) -> InterferenceScenario {
        InterferenceScenario::new(
            TargetArea::new(2000.0, 700.0).unwrap(),
            Environment::urban(),
            radio(),
            d,
            [300.0, 300.0],
            [CALIBRATED_PT, CALIBRATED_PT],
        )
        .unwrap()
    }

    #[test]
    fn calibration_gives_550_m() {
        let s = scenario(1100.0);
        assert!((s.r_m1 - 550.0).abs() < 0.01);
        assert_eq!(s.r_m1, s.r_m2);
        assert_abs_diff_eq!(s.x2_anchor(), 450.0, epsilon = 0.01);
        assert_abs_diff_eq!(s.x1(), -650.0, epsilon = 0.01);
    }

    #[test]
    fn silent_interferer_gives_snr() {
        let mut s = scenario(1100.0);
        s.pt2 = f64::NEG_INFINITY;
        for (r, phi) in [(10.0, 0.0), (300.0, 1.0), (540.0, 3.0)] {
            let snr = CALIBRATED_PT - mean_loss_fast(r, 300.0, &s.radio, &s.env) - s.radio.noise;
            assert!((sinr_at(r, phi, &s) - snr).abs() < 1e-6);
        }
    }

    #[test]
    fn midpoint_of_equal_pair_is_below_zero_db() {
        let s = scenario(800.0);
        assert!(sinr_at(400.0, 0.0, &s) < 0.0);
    }

    #[test]
    fn sinr_nondecreasing_in_phi() {
        let s = scenario(1100.0);
        for r in [50.0, 300.0, 549.0, 900.0] {
            let mut last = f64::NEG_INFINITY;
            for k in 0..=2000 {
                let v = sinr_at(r, PI * k as f64 / 2000.0, &s);
                assert!(v >= last - 1e-12);
                last = v;
            }
        }
    }

    #[test]
    fn phi_max_cases() {
        let s = scenario(1100.0);
        // d + r_m - a = -350 at the calibrated radius
        assert_abs_diff_eq!(
            phi_max(400.0, &s),
            (-350.0f64 / 400.0).acos(),
            epsilon = 1e-4
        );
        let mut fixed = s;
        fixed.r_m2 = 550.0;
        assert_abs_diff_eq!(
            phi_max(400.0, &fixed),
            2.636_232_143_305_636,
            epsilon = 1e-12
        );
        assert_eq!(phi_max(300.0, &fixed), PI);
        let far = fixed.with_separation(1900.0);
        assert_eq!(phi_max(300.0, &far), 0.0);
    }

    #[test]
    fn phi_min_without_interference() {
        let mut s = scenario(1100.0);
        s.pt2 = f64::NEG_INFINITY;
        for r in [1.0, 100.0, 400.0, 549.0] {
            assert_eq!(phi_min(r, Dsc::First, &s), 0.0);
        }
        assert_eq!(phi_min(560.0, Dsc::First, &s), PI);
    }

    #[test]
    fn phi_min_boundary_residual() {
        let s = scenario(900.0);
        let mut interior = 0;
        for k in 1..=275 {
            let r = 2.0 * k as f64 - 1.0;
            for dsc in [Dsc::First, Dsc::Second] {
                let phi = phi_min(r, dsc, &s);
                if phi > 0.0 && phi < PI {
                    interior += 1;
                    let sinr = sinr_from(dsc, r, phi, &s);
                    assert!((sinr - s.radio.gamma_th).abs() < 0.01, "r {r}: {sinr}");
                }
            }
        }
        assert!(interior > 100);
    }

    #[test]
    fn separated_pair_covers_two_full_disks() {
        // a huge area keeps both disks inside and far apart
        let mut s = scenario(5000.0);
        s.area = TargetArea::new(20_000.0, 2000.0).unwrap();
        let rep = effective_coverage(&s).unwrap();
        let exact = 2.0 * PI * s.r_m1 * s.r_m1;
        assert!((rep.area_covered - exact).abs() / exact < 1e-3);
    }

    #[test]
    fn colocated_pair_covers_nothing() {
        let rep = effective_coverage(&scenario(1e-3)).unwrap();
        assert!(rep.area_covered < 1.0);
    }

    #[test]
    fn removing_interference_never_hurts() {
        for d in (200..=1800).step_by(200) {
            let s = scenario(d as f64);
            let on = effective_coverage(&s).unwrap();
            let off = effective_coverage(&s.with_interference(false)).unwrap();
            assert!(off.area_covered >= on.area_covered - 1e-6);
        }
    }

    #[test]
    fn width_clipping_bounds_ratio() {
        for d in (200..=1800).step_by(100) {
            let s = scenario(d as f64).with_clip_width(true);
            let rep = effective_coverage(&s).unwrap();
            assert!((0.0..=1.0).contains(&rep.ratio));
        }
    }

    #[test]
    fn rejects_nonpositive_radius() {
        let mut s = scenario(1000.0);
        s.r_m2 = 0.0;
        assert!(matches!(effective_coverage(&s), Err(Error::Config(_))));
    }

    #[test]
    fn grid_values() {
        assert_eq!(
            SearchGrid::new(0.0, 1.0, 0.25).unwrap().values(),
            vec![0.0, 0.25, 0.5, 0.75, 1.0]
        );
        assert_eq!(SearchGrid::single(3.0).values(), vec![3.0]);
        assert_eq!(SearchGrid::default_separation().values().len(), 65);
        assert!(SearchGrid::new(0.0, 1.0, 0.0).is_err());
        assert!(SearchGrid::new(2.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn single_point_separation_sweep() {
        let s = scenario(1000.0);
        let res = optimal_separation(&s, &SearchGrid::single(1000.0)).unwrap();
        assert_eq!(res.rows.len(), 1);
        assert_eq!(res.best, effective_coverage(&s).unwrap());
    }

    #[test]
    fn single_point_joint_search() {
        let s = scenario(1000.0);
        let res = optimal_joint(
            &s,
            &SearchGrid::single(1000.0),
            &SearchGrid::single(300.0),
            &SearchGrid::single(300.0),
        )
        .unwrap();
        assert_eq!(res.best, effective_coverage(&s).unwrap());
    }

    #[test]
    fn joint_search_matches_brute_force() {
        let s = scenario(1000.0);
        let dg = SearchGrid::new(800.0, 1200.0, 100.0).unwrap();
        let hg = SearchGrid::new(200.0, 400.0, 50.0).unwrap();
        let res = optimal_joint(&s, &dg, &hg, &hg).unwrap();
        assert_eq!(res.rows.len(), 125);
        let mut k = 0;
        let mut best = f64::NEG_INFINITY;
        for d in dg.values() {
            for h1 in hg.values() {
                for h2 in hg.values() {
                    let expect =
                        effective_coverage(&s.with_separation(d).with_altitudes(h1, h2).unwrap())
                            .unwrap();
                    assert_eq!(res.rows[k], expect);
                    best = best.max(expect.ratio);
                    k += 1;
                }
            }
        }
        assert_eq!(res.best.ratio, best);
    }

    #[test]
    fn joint_search_skips_unreachable_altitudes() {
        let s = scenario(1000.0);
        // at 2 km the calibrated power no longer reaches the ground
        let res = optimal_joint(
            &s,
            &SearchGrid::single(1000.0),
            &SearchGrid::new(300.0, 2000.0, 1700.0).unwrap(),
            &SearchGrid::single(300.0),
        )
        .unwrap();
        assert_eq!(res.rows.len(), 1);
    }
}
