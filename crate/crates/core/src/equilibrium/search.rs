//! One-dimensional search helpers on `[0, 1]`.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// `n` evenly spaced points from `lo` to `hi`, endpoints exact.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n)
            .map(|k| {
                if k == n - 1 {
                    hi
                } else {
                    let u = k as f64 / (n - 1) as f64;
                    lo * (1.0 - u) + hi * u
                }
            })
            .collect(),
    }
}

/// Maximizes `f` on `[lo, hi]` by golden-section search, assuming a single
/// local maximum inside the bracket. Returns the best point seen.
pub fn golden_section_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Root of `g` on `[lo, hi]` given `g(lo)` and `g(hi)` of opposite sign.
pub fn bisect(g: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, mut g_lo: f64, tol: f64) -> f64 {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let g_mid = g(mid);
        if g_mid == 0.0 {
            return mid;
        }
        if (g_mid > 0.0) == (g_lo > 0.0) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linspace_endpoints() {
        let g = linspace(0.0, std::f64::consts::FRAC_PI_2, 7);
        assert_eq!(g.len(), 7);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[6], std::f64::consts::FRAC_PI_2);
        assert_eq!(linspace(-0.4, 0.4, 21)[10], 0.0);
        assert_eq!(linspace(3.0, 5.0, 1), vec![3.0]);
    }

    #[test]
    fn golden_finds_quadratic_peak() {
        let (x, fx) = golden_section_max(|x| -(x - 0.3).powi(2) + 2.0, 0.0, 1.0, 1e-9);
        assert!((x - 0.3).abs() < 1e-7);
        assert!((fx - 2.0).abs() < 1e-14);
    }

    #[test]
    fn bisect_linear() {
        let g = |x: f64| 0.25 - x;
        let r = bisect(g, 0.0, 1.0, g(0.0), 1e-12);
        assert!((r - 0.25).abs() < 1e-12);
    }
}
