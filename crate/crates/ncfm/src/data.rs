//! Dataset generation, file ingestion, and seeded batch sampling.
//!
//! Samples live in a [`DataMatrix`]: an n×d matrix of finite reals with an
//! optional class-label vector. Synthetic benchmark distributions
//! (gaussian mixtures, two moons, concentric rings) are generated
//! deterministically from a [`DatasetSpec`]; external data comes in as CSV
//! or IDX (see `docs/formats.md` for the byte-level layouts).

use std::fs;
use std::path::{Path, PathBuf};

use ndarray::{Array2, ArrayView2};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::util::all_finite;

/// An n×d table of real-valued samples with optional integer class labels.
///
/// Invariants, enforced at construction:
/// - every entry is finite,
/// - n ≥ 1 and d ≥ 1,
/// - if labels are present they have length n and every class id in
///   `0..n_classes` occurs at least once.
#[derive(Debug, Clone, PartialEq)]
pub struct DataMatrix {
    values: Array2<f64>,
    labels: Option<Vec<usize>>,
}

impl DataMatrix {
    pub fn new(values: Array2<f64>, labels: Option<Vec<usize>>) -> Result<Self> {
        if values.nrows() == 0 || values.ncols() == 0 {
            return Err(Error::Argument(format!(
                "data matrix must be at least 1×1, got {}×{}",
                values.nrows(),
                values.ncols()
            )));
        }
        if !all_finite(&values.view()) {
            return Err(Error::Argument(
                "data matrix contains NaN or infinite entries".into(),
            ));
        }
        if let Some(ref labels) = labels {
            if labels.len() != values.nrows() {
                return Err(Error::Argument(format!(
                    "label vector length {} does not match row count {}",
                    labels.len(),
                    values.nrows()
                )));
            }
            let n_classes = labels.iter().max().unwrap() + 1;
            let mut seen = vec![false; n_classes];
            for &c in labels {
                seen[c] = true;
            }
            if let Some(missing) = seen.iter().position(|s| !s) {
                return Err(Error::Argument(format!(
                    "class id {missing} has no samples (class ids must cover 0..{n_classes})",
                )));
            }
        }
        Ok(DataMatrix { values, labels })
    }

    /// Unlabeled matrix.
    pub fn unlabeled(values: Array2<f64>) -> Result<Self> {
        DataMatrix::new(values, None)
    }

    pub fn n(&self) -> usize {
        self.values.nrows()
    }

    pub fn d(&self) -> usize {
        self.values.ncols()
    }

    pub fn values(&self) -> &Array2<f64> {
        &self.values
    }

    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    /// Number of classes, if labeled.
    pub fn n_classes(&self) -> Option<usize> {
        self.labels
            .as_ref()
            .map(|l| l.iter().max().map_or(0, |m| m + 1))
    }

    /// Row indices belonging to `class_id`.
    pub fn class_rows(&self, class_id: usize) -> Result<Vec<usize>> {
        let labels = self
            .labels
            .as_ref()
            .ok_or_else(|| Error::Argument("dataset has no labels".into()))?;
        let n_classes = self.n_classes().unwrap_or(0);
        if class_id >= n_classes {
            return Err(Error::UnknownClass {
                class_id,
                n_classes,
            });
        }
        Ok(labels
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == class_id)
            .map(|(i, _)| i)
            .collect())
    }

    /// All rows of one class, as an owned matrix in original row order.
    pub fn class_matrix(&self, class_id: usize) -> Result<Array2<f64>> {
        let rows = self.class_rows(class_id)?;
        Ok(select_rows(&self.values.view(), &rows))
    }

    /// Per-class sample mean.
    pub fn class_mean(&self, class_id: usize) -> Result<Vec<f64>> {
        let m = self.class_matrix(class_id)?;
        Ok(crate::util::column_means(&m.view()))
    }
}

pub(crate) fn select_rows(values: &ArrayView2<'_, f64>, rows: &[usize]) -> Array2<f64> {
    let mut out = Array2::zeros((rows.len(), values.ncols()));
    for (i, &r) in rows.iter().enumerate() {
        out.row_mut(i).assign(&values.row(r));
    }
    out
}

/// File format selector for [`load`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileFormat {
    /// Comma-separated numeric rows; optional header line and optional final
    /// integer label column.
    Csv { has_header: bool, label_column: bool },
    /// Big-endian IDX image container (magic 0x00000803 for 2-D images).
    Idx,
}

/// Recipe for a dataset: a synthetic benchmark distribution or a file source.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum DatasetSpec {
    /// One isotropic gaussian per class: class c draws N(means[c], scales[c]²·I).
    GaussianMixture {
        means: Vec<Vec<f64>>,
        scales: Vec<f64>,
        seed: u64,
    },
    /// Two interleaved half circles in 2-D with additive gaussian noise.
    TwoMoons { noise: f64, seed: u64 },
    /// Concentric circles in 2-D, one class per ring, radii 1, 2, ….
    Rings {
        classes: usize,
        noise: f64,
        seed: u64,
    },
    CsvFile {
        path: PathBuf,
        #[serde(default)]
        has_header: bool,
        #[serde(default)]
        label_column: bool,
    },
    IdxImageFile { path: PathBuf },
}

impl DatasetSpec {
    fn validate(&self) -> Result<()> {
        match self {
            DatasetSpec::GaussianMixture { means, scales, .. } => {
                if means.is_empty() {
                    return Err(Error::Config("gaussian-mixture needs at least one component".into()));
                }
                if means.len() != scales.len() {
                    return Err(Error::Config(format!(
                        "gaussian-mixture has {} means but {} scales",
                        means.len(),
                        scales.len()
                    )));
                }
                let d = means[0].len();
                if d == 0 {
                    return Err(Error::Config("gaussian-mixture means must be non-empty vectors".into()));
                }
                if means.iter().any(|m| m.len() != d) {
                    return Err(Error::Config("gaussian-mixture means have inconsistent dimensions".into()));
                }
                // Zero is allowed (degenerate point mass); negative is not.
                if let Some(s) = scales.iter().find(|s| !s.is_finite() || **s < 0.0) {
                    return Err(Error::Config(format!(
                        "gaussian-mixture scales must be non-negative and finite, got {s}"
                    )));
                }
                Ok(())
            }
            DatasetSpec::TwoMoons { noise, .. } => {
                if !noise.is_finite() || *noise < 0.0 {
                    return Err(Error::Config(format!("two-moons noise must be non-negative, got {noise}")));
                }
                Ok(())
            }
            DatasetSpec::Rings { classes, noise, .. } => {
                if *classes == 0 {
                    return Err(Error::Config("rings needs at least one class".into()));
                }
                if !noise.is_finite() || *noise < 0.0 {
                    return Err(Error::Config(format!("rings noise must be non-negative, got {noise}")));
                }
                Ok(())
            }
            DatasetSpec::CsvFile { path, .. } | DatasetSpec::IdxImageFile { path } => {
                if !path.exists() {
                    return Err(Error::Config(format!("dataset file {} does not exist", path.display())));
                }
                Ok(())
            }
        }
    }
}

fn standard_normal_vec(rng: &mut ChaCha8Rng, d: usize) -> Vec<f64> {
    (0..d).map(|_| StandardNormal.sample(rng)).collect()
}

/// Generate a labeled dataset from a spec, `n_per_class` rows per class.
///
/// Deterministic: identical `(spec, n_per_class)` yields bit-identical
/// output. For file-backed specs this dispatches to [`load`] and
/// `n_per_class` is ignored (the file decides the row count).
pub fn generate(spec: &DatasetSpec, n_per_class: usize) -> Result<DataMatrix> {
    spec.validate()?;
    if n_per_class == 0 {
        return Err(Error::Argument("n_per_class must be at least 1".into()));
    }
    match spec {
        DatasetSpec::GaussianMixture { means, scales, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let c = means.len();
            let d = means[0].len();
            let mut values = Array2::zeros((c * n_per_class, d));
            let mut labels = Vec::with_capacity(c * n_per_class);
            for (class, (mean, scale)) in means.iter().zip(scales.iter()).enumerate() {
                for i in 0..n_per_class {
                    let row = class * n_per_class + i;
                    let eps = standard_normal_vec(&mut rng, d);
                    for j in 0..d {
                        values[[row, j]] = mean[j] + scale * eps[j];
                    }
                    labels.push(class);
                }
            }
            DataMatrix::new(values, Some(labels))
        }
        DatasetSpec::TwoMoons { noise, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut values = Array2::zeros((2 * n_per_class, 2));
            let mut labels = Vec::with_capacity(2 * n_per_class);
            for class in 0..2usize {
                for i in 0..n_per_class {
                    let row = class * n_per_class + i;
                    let theta: f64 = rng.random_range(0.0..std::f64::consts::PI);
                    let (x, y) = if class == 0 {
                        (theta.cos(), theta.sin())
                    } else {
                        (1.0 - theta.cos(), 0.5 - theta.sin())
                    };
                    let ex: f64 = StandardNormal.sample(&mut rng);
                    let ey: f64 = StandardNormal.sample(&mut rng);
                    values[[row, 0]] = x + noise * ex;
                    values[[row, 1]] = y + noise * ey;
                    labels.push(class);
                }
            }
            DataMatrix::new(values, Some(labels))
        }
        DatasetSpec::Rings { classes, noise, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut values = Array2::zeros((classes * n_per_class, 2));
            let mut labels = Vec::with_capacity(classes * n_per_class);
            for class in 0..*classes {
                for i in 0..n_per_class {
                    let row = class * n_per_class + i;
                    let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
                    let er: f64 = StandardNormal.sample(&mut rng);
                    let r = (class + 1) as f64 + noise * er;
                    values[[row, 0]] = r * phi.cos();
                    values[[row, 1]] = r * phi.sin();
                    labels.push(class);
                }
            }
            DataMatrix::new(values, Some(labels))
        }
        DatasetSpec::CsvFile {
            path,
            has_header,
            label_column,
        } => load(
            path,
            FileFormat::Csv {
                has_header: *has_header,
                label_column: *label_column,
            },
        ),
        DatasetSpec::IdxImageFile { path } => load(path, FileFormat::Idx),
    }
}

/// Load a dataset from disk.
///
/// CSV rows become matrix rows; an optional final label column becomes the
/// class vector. IDX image bytes are scaled to [0,1] and flattened
/// row-major, one image per row.
pub fn load(path: &Path, format: FileFormat) -> Result<DataMatrix> {
    match format {
        FileFormat::Csv {
            has_header,
            label_column,
        } => load_csv(path, has_header, label_column),
        FileFormat::Idx => load_idx(path),
    }
}

fn load_csv(path: &Path, has_header: bool, label_column: bool) -> Result<DataMatrix> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let path_str = path.display().to_string();
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut labels: Vec<usize> = Vec::new();
    let mut width: Option<usize> = None;
    let skip = usize::from(has_header);

    for (idx, line) in text.lines().enumerate().skip(skip) {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split(',').collect();
        match width {
            None => width = Some(cells.len()),
            Some(w) if w != cells.len() => {
                return Err(Error::CsvParse {
                    path: path_str,
                    line: line_no,
                    column: cells.len(),
                    message: format!("ragged row: expected {w} cells, found {}", cells.len()),
                });
            }
            _ => {}
        }
        let n_features = if label_column { cells.len() - 1 } else { cells.len() };
        if label_column && cells.len() < 2 {
            return Err(Error::CsvParse {
                path: path_str,
                line: line_no,
                column: 1,
                message: "label column requested but row has fewer than 2 cells".into(),
            });
        }
        let mut row = Vec::with_capacity(n_features);
        for (col, cell) in cells.iter().enumerate().take(n_features) {
            let v: f64 = cell.trim().parse().map_err(|_| Error::CsvParse {
                path: path_str.clone(),
                line: line_no,
                column: col + 1,
                message: format!("non-numeric cell {:?}", cell.trim()),
            })?;
            row.push(v);
        }
        if label_column {
            let cell = cells[cells.len() - 1].trim();
            let label: usize = cell.parse().map_err(|_| Error::CsvParse {
                path: path_str.clone(),
                line: line_no,
                column: cells.len(),
                message: format!("label cell {cell:?} is not a non-negative integer"),
            })?;
            labels.push(label);
        }
        rows.push(row);
    }

    if rows.is_empty() {
        return Err(Error::CsvParse {
            path: path_str,
            line: 1,
            column: 1,
            message: "file contains no data rows".into(),
        });
    }
    let d = rows[0].len();
    let mut values = Array2::zeros((rows.len(), d));
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            values[[i, j]] = *v;
        }
    }
    DataMatrix::new(values, if label_column { Some(labels) } else { None })
}

const IDX_UBYTE: u8 = 0x08;

fn load_idx(path: &Path) -> Result<DataMatrix> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    let path_str = path.display().to_string();
    let err = |offset: u64, message: String| Error::IdxParse {
        path: path_str.clone(),
        offset,
        message,
    };

    if bytes.len() < 4 {
        return Err(err(0, "file shorter than the 4-byte magic number".into()));
    }
    if bytes[0] != 0 || bytes[1] != 0 {
        return Err(err(0, format!("bad magic: first two bytes must be zero, got {:#04x} {:#04x}", bytes[0], bytes[1])));
    }
    if bytes[2] != IDX_UBYTE {
        return Err(err(2, format!("unsupported dtype byte {:#04x}, only unsigned byte (0x08) is supported", bytes[2])));
    }
    let ndim = bytes[3] as usize;
    if ndim < 2 {
        return Err(err(3, format!("expected at least 2 dimensions for image data, got {ndim}")));
    }
    let header_len = 4 + 4 * ndim;
    if bytes.len() < header_len {
        return Err(err(4, format!("header truncated: need {header_len} bytes for {ndim} dimension sizes")));
    }
    let mut dims = Vec::with_capacity(ndim);
    for i in 0..ndim {
        let off = 4 + 4 * i;
        let dim = u32::from_be_bytes(bytes[off..off + 4].try_into().unwrap()) as usize;
        if dim == 0 {
            return Err(err(off as u64, "zero-sized dimension".into()));
        }
        dims.push(dim);
    }
    let n = dims[0];
    let per_image: usize = dims[1..].iter().product();
    let expected = header_len + n * per_image;
    if bytes.len() != expected {
        return Err(err(
            header_len as u64,
            format!("payload size mismatch: header implies {expected} bytes total, file has {}", bytes.len()),
        ));
    }
    let mut values = Array2::zeros((n, per_image));
    for i in 0..n {
        for j in 0..per_image {
            values[[i, j]] = f64::from(bytes[header_len + i * per_image + j]) / 255.0;
        }
    }
    DataMatrix::unlabeled(values)
}

/// Draw `batch_size` rows of one class uniformly with replacement.
///
/// The returned batch is unlabeled (its class is the caller's `class_id`).
/// Deterministic under a fixed `rng` state; the rng is caller-owned.
pub fn sample_batch<R: Rng>(
    data: &DataMatrix,
    class_id: usize,
    batch_size: usize,
    rng: &mut R,
) -> Result<DataMatrix> {
    if batch_size == 0 {
        return Err(Error::Argument("batch_size must be at least 1".into()));
    }
    let rows = data.class_rows(class_id)?;
    let picks: Vec<usize> = (0..batch_size)
        .map(|_| rows[rng.random_range(0..rows.len())])
        .collect();
    DataMatrix::unlabeled(select_rows(&data.values().view(), &picks))
}

/// Draw `per_class` distinct rows per class (with replacement only when a
/// class is smaller than `per_class`). Returns a labeled dataset; used for
/// random-subset baselines.
pub fn random_subset_per_class<R: Rng>(
    data: &DataMatrix,
    per_class: usize,
    rng: &mut R,
) -> Result<DataMatrix> {
    let n_classes = data
        .n_classes()
        .ok_or_else(|| Error::Argument("dataset has no labels".into()))?;
    if per_class == 0 {
        return Err(Error::Argument("per_class must be at least 1".into()));
    }
    let mut picks = Vec::with_capacity(n_classes * per_class);
    let mut labels = Vec::with_capacity(n_classes * per_class);
    for class in 0..n_classes {
        let mut rows = data.class_rows(class)?;
        if rows.len() >= per_class {
            // partial Fisher-Yates
            for i in 0..per_class {
                let j = rng.random_range(i..rows.len());
                rows.swap(i, j);
                picks.push(rows[i]);
            }
        } else {
            for _ in 0..per_class {
                picks.push(rows[rng.random_range(0..rows.len())]);
            }
        }
        labels.extend(std::iter::repeat_n(class, per_class));
    }
    DataMatrix::new(select_rows(&data.values().view(), &picks), Some(labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;

    fn mixture_spec(means: Vec<Vec<f64>>, scales: Vec<f64>, seed: u64) -> DatasetSpec {
        DatasetSpec::GaussianMixture { means, scales, seed }
    }

    #[test]
    fn degenerate_mixture_returns_exact_means() {
        let spec = mixture_spec(vec![vec![0.0, 0.0]], vec![0.0], 1);
        let data = generate(&spec, 3).unwrap();
        assert_eq!(data.n(), 3);
        for row in data.values().rows() {
            assert_eq!(row.to_vec(), vec![0.0, 0.0]);
        }
    }

    #[test]
    fn two_moons_is_deterministic() {
        let spec = DatasetSpec::TwoMoons { noise: 0.1, seed: 7 };
        let a = generate(&spec, 100).unwrap();
        let b = generate(&spec, 100).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn mixture_class_means_match_spec() {
        let spec = mixture_spec(
            vec![vec![0.0, 0.0], vec![4.0, 0.0], vec![0.0, 4.0]],
            vec![1.0, 1.0, 1.0],
            3,
        );
        let data = generate(&spec, 1000).unwrap();
        let true_means = [[0.0, 0.0], [4.0, 0.0], [0.0, 4.0]];
        for class in 0..3 {
            let mean = data.class_mean(class).unwrap();
            for j in 0..2 {
                assert!(
                    (mean[j] - true_means[class][j]).abs() < 0.1,
                    "class {class} mean {mean:?}"
                );
            }
        }
    }

    #[test]
    fn mixture_covariance_converges() {
        // Per-class sample covariance vs scale²·I at n = 10^4, 10% Frobenius.
        let scale = 1.5;
        let spec = mixture_spec(vec![vec![0.0, 0.0, 0.0]], vec![scale], 11);
        let data = generate(&spec, 10_000).unwrap();
        let m = data.class_matrix(0).unwrap();
        let n = m.nrows() as f64;
        let means = crate::util::column_means(&m.view());
        let d = m.ncols();
        let mut cov = Array2::zeros((d, d));
        for row in m.rows() {
            for a in 0..d {
                for b in 0..d {
                    cov[[a, b]] += (row[a] - means[a]) * (row[b] - means[b]) / n;
                }
            }
        }
        let mut diff_sq = 0.0;
        let mut ref_sq = 0.0;
        for a in 0..d {
            for b in 0..d {
                let target = if a == b { scale * scale } else { 0.0 };
                diff_sq += (cov[[a, b]] - target) * (cov[[a, b]] - target);
                ref_sq += target * target;
            }
        }
        assert!(diff_sq.sqrt() / ref_sq.sqrt() < 0.10);
    }

    #[test]
    fn rings_have_expected_radii() {
        let spec = DatasetSpec::Rings { classes: 2, noise: 0.0, seed: 5 };
        let data = generate(&spec, 50).unwrap();
        for (row, &label) in data.values().rows().into_iter().zip(data.labels().unwrap()) {
            let r = (row[0] * row[0] + row[1] * row[1]).sqrt();
            assert_abs_diff_eq!(r, (label + 1) as f64, epsilon = 1e-12);
        }
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let negative = mixture_spec(vec![vec![0.0]], vec![-1.0], 0);
        assert!(matches!(generate(&negative, 1), Err(Error::Config(_))));
        let mismatched = mixture_spec(vec![vec![0.0], vec![1.0]], vec![1.0], 0);
        assert!(matches!(generate(&mismatched, 1), Err(Error::Config(_))));
    }

    #[test]
    fn csv_with_label_column() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("data.csv");
        fs::write(&path, "1,2,0\n3,4,1\n").unwrap();
        let data = load(&path, FileFormat::Csv { has_header: false, label_column: true }).unwrap();
        assert_eq!(*data.values(), array![[1.0, 2.0], [3.0, 4.0]]);
        assert_eq!(data.labels().unwrap(), &[0, 1]);
    }

    #[test]
    fn csv_non_numeric_cell_names_row_and_column() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.csv");
        fs::write(&path, "1,2\n3,oops\n").unwrap();
        let err = load(&path, FileFormat::Csv { has_header: false, label_column: false }).unwrap_err();
        match err {
            Error::CsvParse { line, column, .. } => {
                assert_eq!(line, 2);
                assert_eq!(column, 2);
            }
            other => panic!("expected CsvParse, got {other}"),
        }
    }

    #[test]
    fn csv_ragged_row_is_reported() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ragged.csv");
        fs::write(&path, "1,2\n3\n").unwrap();
        let err = load(&path, FileFormat::Csv { has_header: false, label_column: false }).unwrap_err();
        assert!(matches!(err, Error::CsvParse { line: 2, .. }));
    }

    #[test]
    fn idx_two_2x2_images() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("imgs.idx");
        let mut bytes = vec![0u8, 0, 0x08, 3];
        bytes.extend_from_slice(&2u32.to_be_bytes());
        bytes.extend_from_slice(&2u32.to_be_bytes());
        bytes.extend_from_slice(&2u32.to_be_bytes());
        bytes.extend_from_slice(&[0, 255, 128, 64, 255, 0, 0, 255]);
        fs::write(&path, &bytes).unwrap();
        let data = load(&path, FileFormat::Idx).unwrap();
        assert_eq!(data.n(), 2);
        assert_eq!(data.d(), 4);
        assert_abs_diff_eq!(data.values()[[0, 1]], 1.0);
        assert_abs_diff_eq!(data.values()[[0, 2]], 128.0 / 255.0);
        assert_abs_diff_eq!(data.values()[[1, 0]], 1.0);
    }

    #[test]
    fn idx_bad_magic_names_offset() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.idx");
        fs::write(&path, [1u8, 0, 0x08, 3, 0, 0, 0, 1]).unwrap();
        let err = load(&path, FileFormat::Idx).unwrap_err();
        assert!(matches!(err, Error::IdxParse { offset: 0, .. }));
    }

    #[test]
    fn idx_truncated_payload_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("short.idx");
        let mut bytes = vec![0u8, 0, 0x08, 2];
        bytes.extend_from_slice(&2u32.to_be_bytes());
        bytes.extend_from_slice(&3u32.to_be_bytes());
        bytes.extend_from_slice(&[9, 9]); // needs 6 payload bytes
        fs::write(&path, &bytes).unwrap();
        assert!(matches!(load(&path, FileFormat::Idx), Err(Error::IdxParse { .. })));
    }

    #[test]
    fn single_row_class_batch_repeats_that_row() {
        let values = array![[1.0, 2.0], [5.0, 6.0], [7.0, 8.0]];
        let data = DataMatrix::new(values, Some(vec![0, 1, 1])).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let batch = sample_batch(&data, 0, 5, &mut rng).unwrap();
        assert_eq!(batch.n(), 5);
        for row in batch.values().rows() {
            assert_eq!(row.to_vec(), vec![1.0, 2.0]);
        }
    }

    #[test]
    fn batches_are_deterministic_under_fixed_seed() {
        let spec = mixture_spec(vec![vec![0.0, 0.0], vec![3.0, 3.0]], vec![1.0, 1.0], 2);
        let data = generate(&spec, 10).unwrap();
        let mut rng_a = ChaCha8Rng::seed_from_u64(42);
        let mut rng_b = ChaCha8Rng::seed_from_u64(42);
        let a = sample_batch(&data, 1, 10, &mut rng_a).unwrap();
        let b = sample_batch(&data, 1, 10, &mut rng_b).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn batch_mean_approaches_class_mean() {
        let spec = mixture_spec(vec![vec![2.0, -1.0]], vec![1.0], 9);
        let data = generate(&spec, 200).unwrap();
        let class_mean = data.class_mean(0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let batch = sample_batch(&data, 0, 10_000, &mut rng).unwrap();
        let batch_mean = crate::util::column_means(&batch.values().view());
        for j in 0..2 {
            let rel = (batch_mean[j] - class_mean[j]).abs() / class_mean[j].abs();
            assert!(rel < 0.05, "column {j}: batch {batch_mean:?} vs class {class_mean:?}");
        }
    }

    #[test]
    fn unknown_class_is_a_lookup_error() {
        let data = DataMatrix::new(array![[0.0], [1.0]], Some(vec![0, 1])).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(matches!(
            sample_batch(&data, 7, 1, &mut rng),
            Err(Error::UnknownClass { class_id: 7, n_classes: 2 })
        ));
    }

    #[test]
    fn labels_must_cover_all_classes() {
        let values = array![[0.0], [1.0]];
        assert!(DataMatrix::new(values, Some(vec![0, 2])).is_err());
    }

    #[test]
    fn subset_has_distinct_rows_when_class_is_large_enough() {
        let spec = mixture_spec(vec![vec![0.0], vec![10.0]], vec![1.0, 1.0], 4);
        let data = generate(&spec, 20).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let subset = random_subset_per_class(&data, 5, &mut rng).unwrap();
        assert_eq!(subset.n(), 10);
        assert_eq!(subset.n_classes(), Some(2));
        for class in 0..2 {
            let m = subset.class_matrix(class).unwrap();
            for i in 0..m.nrows() {
                for j in (i + 1)..m.nrows() {
                    assert_ne!(m.row(i), m.row(j), "duplicate row in class {class}");
                }
            }
        }
    }
}
