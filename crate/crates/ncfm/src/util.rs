//! Small numeric helpers shared across modules.

use ndarray::{Array2, ArrayView1, ArrayView2};

/// True iff every entry is finite.
pub(crate) fn all_finite(a: &ArrayView2<'_, f64>) -> bool {
    a.iter().all(|v| v.is_finite())
}

/// Euclidean norm of a flattened matrix.
pub(crate) fn frobenius_norm(a: &ArrayView2<'_, f64>) -> f64 {
    a.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// Squared Euclidean distance between two rows.
pub(crate) fn sq_dist(a: ArrayView1<'_, f64>, b: ArrayView1<'_, f64>) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y) * (x - y))
        .sum()
}

/// Column means of a matrix (length = number of columns).
pub(crate) fn column_means(a: &ArrayView2<'_, f64>) -> Vec<f64> {
    let n = a.nrows() as f64;
    (0..a.ncols())
        .map(|j| a.column(j).iter().sum::<f64>() / n)
        .collect()
}

/// In-place softmax over a slice, stabilized by max subtraction.
pub(crate) fn softmax_inplace(row: &mut [f64]) {
    let max = row.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut sum = 0.0;
    for v in row.iter_mut() {
        *v = (*v - max).exp();
        sum += *v;
    }
    for v in row.iter_mut() {
        *v /= sum;
    }
}

/// Least-squares slope of y against x.
pub(crate) fn least_squares_slope(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (xi, yi) in x.iter().zip(y.iter()) {
        num += (xi - mx) * (yi - my);
        den += (xi - mx) * (xi - mx);
    }
    num / den
}

/// Slope of ln(y) against ln(x); inputs must be strictly positive.
pub(crate) fn log_log_slope(x: &[f64], y: &[f64]) -> f64 {
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    least_squares_slope(&lx, &ly)
}

/// Mean and (population) standard deviation of a slice.
pub(crate) fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    (mean, var.sqrt())
}

/// Rescale every entry of a matrix so its Frobenius norm is at most `max_norm`.
pub(crate) fn clip_frobenius(a: &mut Array2<f64>, max_norm: f64) {
    let norm = frobenius_norm(&a.view());
    if norm > max_norm && norm > 0.0 {
        a.mapv_inplace(|v| v * max_norm / norm);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn slope_of_exact_line() {
        let x = [1.0, 2.0, 3.0, 4.0];
        let y: Vec<f64> = x.iter().map(|v| 3.0 * v - 1.0).collect();
        assert!((least_squares_slope(&x, &y) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn log_log_slope_of_power_law() {
        let x = [10.0, 100.0, 1000.0];
        let y: Vec<f64> = x.iter().map(|v| 5.0 * v.powf(2.0)).collect();
        assert!((log_log_slope(&x, &y) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn softmax_sums_to_one() {
        let mut row = [1.0, 2.0, 3.0];
        softmax_inplace(&mut row);
        assert!((row.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(row[2] > row[1] && row[1] > row[0]);
    }

    #[test]
    fn clip_shrinks_only_large_matrices() {
        let mut a = array![[3.0, 4.0]];
        clip_frobenius(&mut a, 1.0);
        assert!((frobenius_norm(&a.view()) - 1.0).abs() < 1e-12);

        let mut b = array![[0.3, 0.4]];
        clip_frobenius(&mut b, 1.0);
        assert_eq!(b, array![[0.3, 0.4]]);
    }
}
