/// Bisection on a bracket `[lo, hi]` where `f(lo)` and `f(hi)` have opposite
/// signs. Stops once the bracket is narrower than `tol` and returns its
/// midpoint. Returns `None` when the endpoints do not bracket a root.
pub(crate) fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, tol: f64) -> Option<f64>
where
    F: FnMut(f64) -> f64,
{
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Some(lo);
    }
    if f_hi == 0.0 {
        return Some(hi);
    }
    if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
        return None;
    }
    // 200 halvings exhaust f64 resolution on any finite bracket
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Some(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Smallest `x` in `[lo, hi]` with `pred(x)` true, assuming `pred` is
/// monotone (false then true). Requires `pred(hi)` to hold and `pred(lo)`
/// to fail; the result is within `tol` above the true switch point.
pub(crate) fn first_true<P>(mut pred: P, mut lo: f64, mut hi: f64, tol: f64) -> f64
where
    P: FnMut(f64) -> bool,
{
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let root = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-12).unwrap();
        assert!((root - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn rejects_unbracketed() {
        assert!(bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-9).is_none());
    }

    #[test]
    fn first_true_switch_point() {
        let x = first_true(|x| x >= 0.3, 0.0, 1.0, 1e-6);
        assert!(x >= 0.3 && x - 0.3 <= 1e-6);
    }
}
