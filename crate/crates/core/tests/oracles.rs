//! Cross-checks between the closed forms / polar integrals and the grid
//! and Monte-Carlo area oracles.

use std::f64::consts::PI;

use dsc_core::dual_free::{place_two_free, union_area};
use dsc_core::dual_interf::{effective_coverage, InterferenceScenario};
use dsc_core::geometry::{grid_area, mc_area, sinr_union_area, Rect};
use dsc_core::{Environment, RadioConfig, TargetArea};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CALIBRATED_PT: f64 = -13.743_200_862_086;

fn radio(pt: f64) -> RadioConfig {
    RadioConfig::new(2e9, pt, -120.0, 10.0, 10_000.0).unwrap()
}

fn reference_scenario(d: f64) -> InterferenceScenario {
    InterferenceScenario::new(
        TargetArea::new(2000.0, 700.0).unwrap(),
        Environment::urban(),
        radio(CALIBRATED_PT),
        d,
        [300.0, 300.0],
        [CALIBRATED_PT, CALIBRATED_PT],
    )
    .unwrap()
}

fn two_disks(r1: f64, r2: f64, d: f64) -> (impl Fn(f64, f64) -> bool + Sync, Rect) {
    let pred = move |x: f64, y: f64| x * x + y * y <= r1 * r1 || (x - d).powi(2) + y * y <= r2 * r2;
    let bounds = Rect::new(-r1.max(r2 - d), (d + r2).max(r1), -r1.max(r2), r1.max(r2)).unwrap();
    (pred, bounds)
}

#[test]
fn union_area_matches_monte_carlo_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for k in 0..12 {
        let r1 = rng.gen_range(50.0..600.0);
        let r2 = rng.gen_range(50.0..600.0);
        let d = rng.gen_range(0.0..1.3) * (r1 + r2);
        let (pred, bounds) = two_disks(r1, r2, d);
        let mc = mc_area(pred, &bounds, 2_000_000, k).unwrap().value;
        let exact = union_area(r1, r2, d);
        assert!(
            (mc - exact).abs() / exact < 5e-3,
            "r1 {r1} r2 {r2} d {d}: {mc} vs {exact}"
        );
    }
}

#[test]
fn union_area_matches_grid_for_the_reference_pair() {
    let (pred, bounds) = two_disks(500.0, 500.0, 500.0);
    let grid = grid_area(pred, &bounds, 1.0).unwrap().value;
    assert!((grid - union_area(500.0, 500.0, 500.0)).abs() / grid < 1e-3);
}

#[test]
fn free_placement_stays_inside_area() {
    let area = TargetArea::new(2000.0, 700.0).unwrap();
    let env = Environment::urban();
    let p = place_two_free(&area, &env, &radio(-25.0), &radio(-28.0)).unwrap();
    let rect = Rect::centered(area.a, area.b).unwrap();
    let inside = |x: f64, y: f64| {
        let c1 = (x - p.p1.x).powi(2) + (y - p.p1.y).powi(2) <= p.r1_max.powi(2);
        let c2 = (x - p.p2.x).powi(2) + (y - p.p2.y).powi(2) <= p.r2_max.powi(2);
        c1 || c2
    };
    let in_area = grid_area(inside, &rect, 1.0).unwrap().value;
    // a grid over a larger box sees no extra coverage outside the area
    let wide = Rect::centered(area.a + 400.0, area.b + 400.0).unwrap();
    let everywhere = grid_area(inside, &wide, 1.0).unwrap().value;
    assert_eq!(in_area, everywhere);
    assert!((in_area - p.union_area()).abs() / in_area < 5e-3);
}

#[test]
fn single_disk_union_oracle() {
    // interferer far away and off; DSC1 alone, fully inside a wide area
    let mut s = reference_scenario(1000.0);
    s.area = TargetArea::new(4000.0, 1400.0).unwrap();
    s.pt2 = f64::NEG_INFINITY;
    let est = sinr_union_area(&s, 2.0).unwrap().value;
    let exact = PI * s.r_m1 * s.r_m1;
    assert!((est - exact).abs() / exact < 3e-3, "{est} vs {exact}");
}

#[test]
fn zero_power_covers_nothing() {
    let mut s = reference_scenario(1000.0);
    s.pt1 = f64::NEG_INFINITY;
    s.pt2 = f64::NEG_INFINITY;
    assert_eq!(sinr_union_area(&s, 4.0).unwrap().value, 0.0);
}

#[test]
fn polar_integral_matches_union_oracle_at_reference_point() {
    let s = reference_scenario(1100.0);
    let polar = effective_coverage(&s).unwrap().area_covered;
    let grid = sinr_union_area(&s, 2.0).unwrap().value;
    assert!((polar - grid).abs() / grid < 0.02, "{polar} vs {grid}");
    assert!(grid <= polar * (1.0 + 1e-3));
}

#[test]
fn width_clipped_integral_matches_grid() {
    for interference in [true, false] {
        for d in [700.0, 1100.0, 1500.0] {
            let s = reference_scenario(d)
                .with_clip_width(true)
                .with_interference(interference);
            let polar = effective_coverage(&s).unwrap().area_covered;
            let grid = sinr_union_area(&s, 2.0).unwrap().value;
            assert!(
                (polar - grid).abs() / grid < 5e-3,
                "d {d}, interference {interference}: {polar} vs {grid}"
            );
        }
    }
}

#[test]
fn best_server_split_counts_union_once() {
    let s = reference_scenario(800.0).with_interference(false);
    let polar = effective_coverage(&s).unwrap().area_covered;
    let grid = sinr_union_area(&s, 2.0).unwrap().value;
    assert!((polar - grid).abs() / grid < 5e-3, "{polar} vs {grid}");
}
