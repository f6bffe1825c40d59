//! Area oracles for arbitrary coverage predicates.
//!
//! These are deliberately independent of the closed forms and polar
//! integrals elsewhere in the crate: a predicate only answers "is (x, y)
//! covered?", and the area is either counted on a cell grid or sampled.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::dual_interf::{covered_at_point, InterferenceScenario};
use crate::error::{Error, Result};

/// Identifier of the pseudorandom generator behind [`mc_area`]. Each
/// chunk of [`MC_CHUNK`] samples uses stream `k` of a generator seeded
/// with `seed_from_u64(seed)`.
pub const MC_GENERATOR: &str = "chacha8-stream-per-chunk";
/// Samples per independent stream.
pub const MC_CHUNK: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Rect {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Result<Self> {
        if !(x_max > x_min && y_max > y_min) {
            return Err(Error::config(format!(
                "degenerate rectangle [{x_min}, {x_max}] x [{y_min}, {y_max}]"
            )));
        }
        Ok(Rect {
            x_min,
            x_max,
            y_min,
            y_max,
        })
    }

    /// Rectangle of size `a` by `b` centred at the origin.
    pub fn centered(a: f64, b: f64) -> Result<Self> {
        Rect::new(-0.5 * a, 0.5 * a, -0.5 * b, 0.5 * b)
    }

    pub fn width(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn height(&self) -> f64 {
        self.y_max - self.y_min
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AreaMode {
    Grid,
    MonteCarlo,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AreaEstimate {
    /// Estimated area, m^2.
    pub value: f64,
    pub mode: AreaMode,
    /// Cell side for grid estimates, m.
    pub cell: Option<f64>,
    /// Sample count for Monte-Carlo estimates.
    pub samples: Option<u64>,
    /// Generator identifier for Monte-Carlo estimates.
    pub generator: Option<&'static str>,
}

/// Counts cell centres satisfying `pred` and multiplies by the cell area.
pub fn grid_area<P>(pred: P, bounds: &Rect, cell: f64) -> Result<AreaEstimate>
where
    P: Fn(f64, f64) -> bool + Sync,
{
    if !(cell > 0.0) {
        return Err(Error::config(format!("cell size must be > 0, got {cell}")));
    }
    if cell > bounds.width() || cell > bounds.height() {
        return Err(Error::config(format!(
            "cell {cell} m is larger than the {} x {} m bounds",
            bounds.width(),
            bounds.height()
        )));
    }
    let nx = (bounds.width() / cell + 1e-9).floor() as usize;
    let ny = (bounds.height() / cell + 1e-9).floor() as usize;
    let hits: u64 = (0..ny)
        .into_par_iter()
        .map(|j| {
            let y = bounds.y_min + (j as f64 + 0.5) * cell;
            (0..nx)
                .filter(|&i| pred(bounds.x_min + (i as f64 + 0.5) * cell, y))
                .count() as u64
        })
        .sum();
    Ok(AreaEstimate {
        value: hits as f64 * cell * cell,
        mode: AreaMode::Grid,
        cell: Some(cell),
        samples: None,
        generator: None,
    })
}

/// Uniform Monte-Carlo estimate: hit fraction times the bounds' area.
/// Bit-reproducible for a given seed regardless of thread count.
pub fn mc_area<P>(pred: P, bounds: &Rect, samples: u64, seed: u64) -> Result<AreaEstimate>
where
    P: Fn(f64, f64) -> bool + Sync,
{
    if samples == 0 {
        return Err(Error::config(
            "Monte-Carlo estimate needs at least one sample",
        ));
    }
    let chunks = samples.div_ceil(MC_CHUNK);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k);
            let n = MC_CHUNK.min(samples - k * MC_CHUNK);
            let mut hits = 0u64;
            for _ in 0..n {
                let x = bounds.x_min + bounds.width() * rng.gen::<f64>();
                let y = bounds.y_min + bounds.height() * rng.gen::<f64>();
                if pred(x, y) {
                    hits += 1;
                }
            }
            hits
        })
        .sum();
    Ok(AreaEstimate {
        value: hits as f64 / samples as f64 * bounds.area(),
        mode: AreaMode::MonteCarlo,
        cell: None,
        samples: Some(samples),
        generator: Some(MC_GENERATOR),
    })
}

/// Bounds the union-area oracle counts over: the target area along x, and
/// either its width or the full coverage reach along y.
pub fn sinr_oracle_bounds(s: &InterferenceScenario) -> Result<Rect> {
    let half_y = if s.clip_width {
        0.5 * s.area.b
    } else {
        s.r_m1.max(s.r_m2).max(0.5 * s.area.b)
    };
    Rect::new(-0.5 * s.area.a, 0.5 * s.area.a, -half_y, half_y)
}

/// Area covered by at least one DSC, counted once per point on a grid of
/// `cell`-metre cells.
pub fn sinr_union_area(s: &InterferenceScenario, cell: f64) -> Result<AreaEstimate> {
    let bounds = sinr_oracle_bounds(s)?;
    grid_area(|x, y| covered_at_point(x, y, s), &bounds, cell)
}
