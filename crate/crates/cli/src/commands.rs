//! The subcommands. Each one renders a complete CSV document into a
//! string; `main` decides where it goes.

use dsc_core::channel::mean_path_loss;
use dsc_core::dual_free::place_two_free;
use dsc_core::dual_interf::{optimal_joint, optimal_separation, CoverageReport};
use dsc_core::geometry::{grid_area, mc_area, sinr_union_area, Rect};
use dsc_core::single_dsc::min_transmit_power;
use dsc_core::TargetArea;
use thiserror::Error;

use crate::output::{num, Table};
use crate::scenario::{Scenario, ScenarioError};

/// Cell size of the union-area grid oracle behind `--verify`, m.
pub const VERIFY_CELL: f64 = 2.0;
/// Monte-Carlo sample count behind `dual-free --verify`.
pub const VERIFY_SAMPLES: u64 = 1_000_000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Scenario(#[from] ScenarioError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("solver failure: {0}")]
    Solver(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Scenario(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Solver(_) => 4,
        }
    }
}

impl From<dsc_core::Error> for CliError {
    fn from(e: dsc_core::Error) -> Self {
        use dsc_core::Error as E;
        match e {
            E::Domain(_)
            | E::InsufficientPower { .. }
            | E::CoverageExceedsArea { .. }
            | E::EmptyGrid(_) => CliError::Precondition(e.to_string()),
            E::Config(_) | E::NoInteriorOptimum(_) => CliError::Solver(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub verify: bool,
    pub full: bool,
    pub seed: u64,
}

/// A rendered document plus anything worth telling the user on stderr.
#[derive(Debug, Default)]
pub struct Output {
    pub csv: String,
    pub warnings: Vec<String>,
}

impl From<Table> for Output {
    fn from(t: Table) -> Self {
        Output {
            csv: t.into_string(),
            warnings: Vec::new(),
        }
    }
}

/// Least-squares line through `(xs, ys)`: slope, intercept, R^2.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> Option<(f64, f64, f64)> {
    let n = xs.len();
    if n < 2 || ys.len() != n {
        return None;
    }
    let mean_x = xs.iter().sum::<f64>() / n as f64;
    let mean_y = ys.iter().sum::<f64>() / n as f64;
    let sxx: f64 = xs.iter().map(|x| (x - mean_x).powi(2)).sum();
    let sxy: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (x - mean_x) * (y - mean_y))
        .sum();
    let syy: f64 = ys.iter().map(|y| (y - mean_y).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let r2 = if syy == 0.0 {
        1.0
    } else {
        sxy * sxy / (sxx * syy)
    };
    Some((slope, intercept, r2))
}

fn coverage_row(t: &mut Table, r: &CoverageReport) {
    t.row([
        num(r.d),
        num(r.h1),
        num(r.h2),
        num(r.area_covered),
        num(r.ratio),
    ]);
}

/// Minimum transmit power over an altitude grid for each target radius,
/// plus the solver's optimum for that radius.
pub fn altitude_sweep(sc: &Scenario) -> Result<Output, CliError> {
    let mut t = Table::new("altitude-sweep", &sc.to_text());
    t.header(&["r_c_m", "h_m", "pt_min_dbm", "optimal"]);
    let floor = sc.radio.gamma_th + sc.radio.noise;
    for &r_c in &sc.sweeps.r_c_list {
        let opt = min_transmit_power(r_c, &sc.env, &sc.radio)?;
        for h in sc.sweeps.altitude.values() {
            let pt = mean_path_loss(r_c, h, &sc.radio, &sc.env)? + floor;
            t.row([num(r_c), num(h), num(pt), "0".to_string()]);
        }
        t.row([num(r_c), num(opt.h_used), num(opt.pt_min), "1".to_string()]);
    }
    Ok(t.into())
}

/// Coverage ratio against separation for the scenario's two DSCs.
pub fn separation_sweep(sc: &Scenario, opts: &Options) -> Result<Output, CliError> {
    let template = sc.interference_template()?;
    let result = optimal_separation(&template, &sc.sweeps.separation)?;
    let mut t = Table::new("separation-sweep", &sc.to_text());
    t.header(&["d_m", "h1_m", "h2_m", "area_m2", "ratio"]);
    for r in &result.rows {
        coverage_row(&mut t, r);
    }
    let best = result.best;
    t.comment(&format!(
        "optimum: d_m={}, ratio={}",
        num(best.d),
        num(best.ratio)
    ));
    if opts.verify {
        let oracle = sinr_union_area(&template.with_separation(best.d), VERIFY_CELL)?;
        t.comment(&format!(
            "verify: slice_area_m2={}, union_grid_area_m2={}, cell_m={}",
            num(best.area_covered),
            num(oracle.value),
            num(VERIFY_CELL)
        ));
    }
    Ok(t.into())
}

/// Optimal separation for each target-area length.
pub fn area_length_sweep(sc: &Scenario, _opts: &Options) -> Result<Output, CliError> {
    let mut warnings = Vec::new();
    let mut lengths: Vec<f64> = Vec::new();
    for &a in &sc.sweeps.a_list {
        if lengths.contains(&a) {
            warnings.push(format!("duplicate area length {a} m ignored"));
        } else {
            lengths.push(a);
        }
    }

    let mut t = Table::new("area-length-sweep", &sc.to_text());
    t.header(&["a_m", "d_opt_m", "ratio"]);
    let mut optima = Vec::with_capacity(lengths.len());
    for &a in &lengths {
        let mut variant = sc.clone();
        variant.area = TargetArea::new(a, sc.area.b)?;
        let template = variant.interference_template()?;
        let best = optimal_separation(&template, &sc.sweeps.separation)?.best;
        t.row([num(a), num(best.d), num(best.ratio)]);
        optima.push(best.d);
    }
    if let Some((slope, intercept, r2)) = linear_fit(&lengths, &optima) {
        t.comment(&format!(
            "linear fit: slope={}, intercept_m={}, r2={}",
            num(slope),
            num(intercept),
            num(r2)
        ));
    }
    Ok(Output {
        csv: t.into_string(),
        warnings,
    })
}

/// Corner-tangent placement of two non-interfering DSCs.
pub fn dual_free(sc: &Scenario, opts: &Options) -> Result<Output, CliError> {
    let radio1 = sc.radio.with_pt(sc.dscs.pt1);
    let radio2 = sc.radio.with_pt(sc.dscs.pt2);
    let p = place_two_free(&sc.area, &sc.env, &radio1, &radio2)?;
    let mut t = Table::new("dual-free", &sc.to_text());
    t.header(&["dsc", "x_m", "y_m", "h_m", "r_max_m"]);
    t.row([
        "1".to_string(),
        num(p.p1.x),
        num(p.p1.y),
        num(p.p1.h),
        num(p.r1_max),
    ]);
    t.row([
        "2".to_string(),
        num(p.p2.x),
        num(p.p2.y),
        num(p.p2.h),
        num(p.r2_max),
    ]);
    let union = p.union_area();
    t.comment(&format!("separation_m={}", num(p.d)));
    t.comment(&format!(
        "union_area_m2={}, ratio={}",
        num(union),
        num(union / sc.area.size())
    ));
    if opts.verify {
        let covered = |x: f64, y: f64| {
            (x - p.p1.x).hypot(y - p.p1.y) <= p.r1_max || (x - p.p2.x).hypot(y - p.p2.y) <= p.r2_max
        };
        let bounds = Rect::centered(sc.area.a, sc.area.b)?;
        let grid = grid_area(covered, &bounds, 1.0)?;
        let mc = mc_area(covered, &bounds, VERIFY_SAMPLES, opts.seed)?;
        t.comment(&format!(
            "verify: grid_area_m2={}, grid_rel_err={}, cell_m=1",
            num(grid.value),
            num((grid.value - union).abs() / union)
        ));
        t.comment(&format!(
            "verify: mc_area_m2={}, mc_rel_err={}, samples={}, seed={}, generator={}",
            num(mc.value),
            num((mc.value - union).abs() / union),
            VERIFY_SAMPLES,
            opts.seed,
            mc.generator.unwrap_or("-")
        ));
    }
    Ok(t.into())
}

/// Exhaustive search over separation and both altitudes.
pub fn joint_search(sc: &Scenario, opts: &Options) -> Result<Output, CliError> {
    let template = sc.interference_template()?;
    let result = optimal_joint(&template, &sc.joint.separation, &sc.joint.h1, &sc.joint.h2)?;
    let best = result.best;
    let mut t = Table::new("joint-search", &sc.to_text());
    if opts.full {
        t.header(&["d_m", "h1_m", "h2_m", "area_m2", "ratio"]);
        for r in &result.rows {
            coverage_row(&mut t, r);
        }
        t.comment(&format!(
            "optimum: d_m={}, h1_m={}, h2_m={}, ratio={}",
            num(best.d),
            num(best.h1),
            num(best.h2),
            num(best.ratio)
        ));
    } else {
        t.header(&["d_opt_m", "h1_opt_m", "h2_opt_m", "area_m2", "ratio"]);
        coverage_row(&mut t, &best);
    }
    Ok(t.into())
}
