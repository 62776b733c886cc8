use crate::{Error, Result};

/// Ordinary least-squares line through a set of points.
#[derive(Clone, Debug, PartialEq)]
pub struct FitResult {
    pub slope: f64,
    pub intercept: f64,
    pub residual_rms: f64,
    pub points: Vec<(f64, f64)>,
}

impl FitResult {
    pub fn predict(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }
}

fn mean(values: impl Iterator<Item = f64>) -> f64 {
    let (sum, count) = values.fold((0.0, 0usize), |(s, c), v| (s + v, c + 1));
    sum / count as f64
}

pub fn ols_fit(points: &[(f64, f64)]) -> Result<FitResult> {
    if points.len() < 2 {
        return Err(Error::InvalidArgument(format!("a line needs at least 2 points, got {}", points.len())));
    }
    let x_mean = mean(points.iter().map(|p| p.0));
    let y_mean = mean(points.iter().map(|p| p.1));
    let sxx: f64 = points.iter().map(|p| (p.0 - x_mean).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - x_mean) * (p.1 - y_mean)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidArgument("all x values are equal".into()));
    }
    let slope = sxy / sxx;
    let intercept = y_mean - slope * x_mean;
    let residual_rms = mean(points.iter().map(|p| (p.1 - slope * p.0 - intercept).powi(2))).sqrt();
    Ok(FitResult { slope, intercept, residual_rms, points: points.to_vec() })
}

/// Least-squares parabola `y = a + b t + c t^2` in the standardized
/// coordinate `t = (x - center) / scale`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadratic {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub center: f64,
    pub scale: f64,
}

impl Quadratic {
    pub fn eval(&self, x: f64) -> f64 {
        let t = (x - self.center) / self.scale;
        self.a + self.b * t + self.c * t * t
    }

    /// Abscissa of the stationary point, if the curvature is nonzero.
    pub fn vertex(&self) -> Option<f64> {
        (self.c != 0.0).then(|| self.center - self.scale * self.b / (2.0 * self.c))
    }

    pub fn is_concave(&self) -> bool {
        // curvature below roundoff relative to the level counts as flat
        self.c < -1e-12 * (self.a.abs() + self.b.abs()).max(1e-300)
    }
}

pub fn fit_quadratic(points: &[(f64, f64)]) -> Result<Quadratic> {
    let mut xs: Vec<f64> = points.iter().map(|p| p.0).collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    if xs.len() < 3 {
        return Err(Error::InvalidArgument(format!("a parabola needs 3 distinct x values, got {}", xs.len())));
    }
    let center = mean(points.iter().map(|p| p.0));
    let scale = (xs[xs.len() - 1] - xs[0]) / 2.0;

    // normal equations in t: [s0 s1 s2; s1 s2 s3; s2 s3 s4] [a b c]^T = [r0 r1 r2]^T
    let mut s = [0.0f64; 5];
    let mut r = [0.0f64; 3];
    for &(x, y) in points {
        let t = (x - center) / scale;
        let mut tp = 1.0;
        for (k, sk) in s.iter_mut().enumerate() {
            *sk += tp;
            if k < 3 {
                r[k] += tp * y;
            }
            tp *= t;
        }
    }
    let mut m = [[s[0], s[1], s[2], r[0]], [s[1], s[2], s[3], r[1]], [s[2], s[3], s[4], r[2]]];
    let [a, b, c] = solve3(&mut m).ok_or_else(|| Error::InvalidArgument("singular normal equations".into()))?;
    Ok(Quadratic { a, b, c, center, scale })
}

/// Gaussian elimination with partial pivoting on an augmented 3x4 system.
fn solve3(m: &mut [[f64; 4]; 3]) -> Option<[f64; 3]> {
    for col in 0..3 {
        let pivot = (col..3).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[pivot][col].abs() < 1e-14 {
            return None;
        }
        m.swap(col, pivot);
        for row in col + 1..3 {
            let f = m[row][col] / m[col][col];
            for k in col..4 {
                m[row][k] -= f * m[col][k];
            }
        }
    }
    let mut x = [0.0; 3];
    for row in (0..3).rev() {
        let tail: f64 = (row + 1..3).map(|k| m[row][k] * x[k]).sum();
        x[row] = (m[row][3] - tail) / m[row][row];
    }
    Some(x)
}

/// Vertex of a concave least-squares parabola.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Peak {
    pub x: f64,
    pub y: f64,
    pub fit: Quadratic,
}

/// Fits a parabola and returns its maximum. Convex or flat fits, and
/// vertices outside the sampled range, are reported as
/// [`Error::NoInteriorPeak`].
pub fn quadratic_peak(points: &[(f64, f64)]) -> Result<Peak> {
    let fit = fit_quadratic(points)?;
    let no_peak = |reason: String| Error::NoInteriorPeak { reason, points: points.to_vec() };
    if !fit.is_concave() {
        return Err(no_peak(format!("fitted curvature {} is not negative", fit.c)));
    }
    let x = fit.vertex().expect("concave fit has nonzero curvature");
    let lo = points.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let hi = points.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    if x < lo || x > hi {
        return Err(no_peak(format!("vertex {x} lies outside the sampled range [{lo}, {hi}]")));
    }
    Ok(Peak { x, y: fit.eval(x), fit })
}
