//! Two DSCs without mutual interference: corner-tangent placement over a
//! rectangle and the area of the union of their coverage disks.

use std::f64::consts::PI;

use crate::channel::{Environment, RadioConfig};
use crate::error::{Error, Result};
use crate::single_dsc::optimal_coverage;

/// Axis-aligned rectangle of length `a` (x-extent) and width `b`
/// (y-extent), centred at the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TargetArea {
    pub a: f64,
    pub b: f64,
}

impl TargetArea {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
            return Err(Error::config(format!(
                "area sides must be > 0, got a = {a}, b = {b}"
            )));
        }
        if a < b {
            return Err(Error::config(format!(
                "length a must be the long side, got a = {a} < b = {b}"
            )));
        }
        Ok(TargetArea { a, b })
    }

    pub fn size(&self) -> f64 {
        self.a * self.b
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        x.abs() <= 0.5 * self.a && y.abs() <= 0.5 * self.b
    }
}

/// Ground projection (relative to the area centre) and altitude of a DSC.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Placement {
    pub x: f64,
    pub y: f64,
    pub h: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualPlacement {
    pub p1: Placement,
    pub p2: Placement,
    pub r1_max: f64,
    pub r2_max: f64,
    /// Ground distance between the two DSCs, m.
    pub d: f64,
}

impl DualPlacement {
    pub fn union_area(&self) -> f64 {
        union_area(self.r1_max, self.r2_max, self.d)
    }
}

/// Places both DSCs at their feasible optimal altitudes with their
/// coverage disks tangent to the borders at opposite corners.
pub fn place_two_free(
    area: &TargetArea,
    env: &Environment,
    radio1: &RadioConfig,
    radio2: &RadioConfig,
) -> Result<DualPlacement> {
    let short_side = area.a.min(area.b);
    let solve = |idx: usize, radio: &RadioConfig| -> Result<_> {
        let sol = optimal_coverage(env, radio)?;
        if 2.0 * sol.r_max > short_side {
            return Err(Error::CoverageExceedsArea {
                dsc: idx,
                diameter: 2.0 * sol.r_max,
                short_side,
            });
        }
        Ok(sol)
    };
    let c1 = solve(1, radio1)?;
    let c2 = solve(2, radio2)?;

    let p1 = Placement {
        x: -0.5 * area.a + c1.r_max,
        y: -0.5 * area.b + c1.r_max,
        h: c1.h,
    };
    let p2 = Placement {
        x: 0.5 * area.a - c2.r_max,
        y: 0.5 * area.b - c2.r_max,
        h: c2.h,
    };
    Ok(DualPlacement {
        p1,
        p2,
        r1_max: c1.r_max,
        r2_max: c2.r_max,
        d: (p2.x - p1.x).hypot(p2.y - p1.y),
    })
}

fn clamped_acos(x: f64) -> f64 {
    x.clamp(-1.0, 1.0).acos()
}

/// Area of the union of two disks with radii `r1`, `r2` whose centres are
/// `d` apart.
pub fn union_area(r1: f64, r2: f64, d: f64) -> f64 {
    debug_assert!(r1 > 0.0 && r2 > 0.0 && d >= 0.0);
    let total = PI * (r1 * r1 + r2 * r2);
    if d >= r1 + r2 {
        return total;
    }
    if d <= (r1 - r2).abs() {
        let r = r1.max(r2);
        return PI * r * r;
    }
    let a1 = clamped_acos((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1));
    let a2 = clamped_acos((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2));
    let kite = (-d + r1 + r2) * (d - r1 + r2) * (d + r1 - r2) * (d + r1 + r2);
    total - r1 * r1 * a1 - r2 * r2 * a2 + 0.5 * kite.max(0.0).sqrt()
}

/// Union area of two disks of equal radius `r`; only defined while they
/// overlap or touch (`d <= 2r`).
pub fn union_area_equal(r: f64, d: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain(format!("radius must be > 0, got {r}")));
    }
    if !(d >= 0.0) || d > 2.0 * r {
        return Err(Error::domain(format!(
            "separation {d} outside [0, 2r = {}]; use union_area for disjoint disks",
            2.0 * r
        )));
    }
    Ok(2.0 * PI * r * r - 2.0 * r * r * clamped_acos(d / (2.0 * r))
        + 0.5 * d * (4.0 * r * r - d * d).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    // Lens area 2R^2 acos(1/2) - 250 sqrt(750000) subtracted from 2 pi R^2,
    // evaluated at 40 digits.
    const UNION_500_500_500: f64 = 1_263_703.902_142_707;

    #[test]
    fn coincident_disks() {
        assert_relative_eq!(
            union_area(300.0, 300.0, 0.0),
            PI * 9e4,
            max_relative = 1e-12
        );
    }

    #[test]
    fn disjoint_disks() {
        assert_relative_eq!(
            union_area(100.0, 200.0, 400.0),
            PI * 5e4,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            union_area(100.0, 200.0, 300.0),
            PI * 5e4,
            max_relative = 1e-12
        );
    }

    #[test]
    fn contained_disk() {
        assert_relative_eq!(
            union_area(100.0, 300.0, 150.0),
            PI * 9e4,
            max_relative = 1e-12
        );
    }

    #[test]
    fn overlapping_equal_disks_reference() {
        assert_relative_eq!(
            union_area(500.0, 500.0, 500.0),
            UNION_500_500_500,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            union_area_equal(500.0, 500.0).unwrap(),
            UNION_500_500_500,
            max_relative = 1e-12
        );
    }

    #[test]
    fn equal_form_endpoints() {
        assert_relative_eq!(
            union_area_equal(10.0, 20.0).unwrap(),
            200.0 * PI,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            union_area_equal(10.0, 0.0).unwrap(),
            100.0 * PI,
            max_relative = 1e-12
        );
        assert!(union_area_equal(10.0, 20.1).is_err());
    }

    #[test]
    fn equal_form_agrees_with_general() {
        for i in 0..10 {
            for j in 0..10 {
                let r = 50.0 + 100.0 * i as f64;
                let d = 2.0 * r * j as f64 / 9.0;
                let a = union_area_equal(r, d).unwrap();
                let b = union_area(r, r, d);
                assert_relative_eq!(a, b, max_relative = 1e-9);
            }
        }
    }

    #[test]
    fn continuity_at_branch_boundaries() {
        let (r1, r2) = (300.0, 200.0);
        let eps = 1e-7;
        let outer = r1 + r2;
        assert_relative_eq!(
            union_area(r1, r2, outer - eps),
            union_area(r1, r2, outer),
            max_relative = 1e-9
        );
        let inner = r1 - r2;
        assert_relative_eq!(
            union_area(r1, r2, inner + eps),
            union_area(r1, r2, inner),
            max_relative = 1e-9
        );
    }

    fn urban_radio(pt: f64) -> RadioConfig {
        RadioConfig::new(2e9, pt, -120.0, 10.0, 10_000.0).unwrap()
    }

    #[test]
    fn placement_rectangle_example() {
        // identical radii of 300 m in a 2000 x 700 area
        let area = TargetArea::new(2000.0, 700.0).unwrap();
        let p1 = (-0.5 * area.a + 300.0, -0.5 * area.b + 300.0);
        let p2 = (0.5 * area.a - 300.0, 0.5 * area.b - 300.0);
        assert_eq!(p1, (-700.0, -50.0));
        assert_eq!(p2, (700.0, 50.0));
        assert_abs_diff_eq!(
            (1400.0f64).hypot(100.0),
            2.0 * 700f64.hypot(50.0),
            epsilon = 1e-9
        );
    }

    #[test]
    fn identical_radios_are_point_symmetric_and_tangent() {
        let area = TargetArea::new(2000.0, 700.0).unwrap();
        let env = Environment::urban();
        let radio = urban_radio(-25.0);
        let p = place_two_free(&area, &env, &radio, &radio).unwrap();
        assert_abs_diff_eq!(p.p1.x, -p.p2.x, epsilon = 1e-9);
        assert_abs_diff_eq!(p.p1.y, -p.p2.y, epsilon = 1e-9);
        for (pl, r) in [(p.p1, p.r1_max), (p.p2, p.r2_max)] {
            assert_abs_diff_eq!(pl.x.abs() + r, 0.5 * area.a, epsilon = 1e-9);
            assert_abs_diff_eq!(pl.y.abs() + r, 0.5 * area.b, epsilon = 1e-9);
        }
        assert_abs_diff_eq!(p.d, 2.0 * p.p1.x.hypot(p.p1.y), epsilon = 1e-9);
    }

    #[test]
    fn oversized_coverage_is_rejected() {
        let area = TargetArea::new(2000.0, 700.0).unwrap();
        let env = Environment::urban();
        let err =
            place_two_free(&area, &env, &urban_radio(-13.7), &urban_radio(-25.0)).unwrap_err();
        assert!(matches!(err, Error::CoverageExceedsArea { dsc: 1, .. }));
    }

    #[test]
    fn area_invariants() {
        assert!(TargetArea::new(700.0, 2000.0).is_err());
        assert!(TargetArea::new(0.0, 0.0).is_err());
        assert!(TargetArea::new(100.0, 100.0).is_ok());
    }

    proptest! {
        #[test]
        fn union_bounds(r1 in 1.0f64..1000.0, r2 in 1.0f64..1000.0, t in 0.0f64..1.5) {
            let d = t * (r1 + r2);
            let u = union_area(r1, r2, d);
            let lo = PI * r1.max(r2).powi(2);
            let hi = PI * (r1 * r1 + r2 * r2);
            prop_assert!(u >= lo * (1.0 - 1e-12));
            prop_assert!(u <= hi * (1.0 + 1e-12));
        }

        #[test]
        fn union_nondecreasing_in_separation(r1 in 1.0f64..1000.0, r2 in 1.0f64..1000.0, t in 0.0f64..1.0, dt in 0.0f64..0.1) {
            let d = t * (r1 + r2);
            let d2 = (t + dt).min(1.0) * (r1 + r2);
            prop_assert!(union_area(r1, r2, d2) >= union_area(r1, r2, d) * (1.0 - 1e-12));
        }
    }
}
