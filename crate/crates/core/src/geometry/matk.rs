use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spectral::FieldTag;

/// Complex rows/columns per field entry: quaternions are stored as the 2×2
/// complex block `a + bj ↦ [[a, b], [−b̄, ā]]`.
pub(crate) fn block_size(field: FieldTag) -> usize {
    match field {
        FieldTag::Quaternion => 2,
        _ => 1,
    }
}

/// Dense matrix over ℝ, ℂ or ℍ.
///
/// Real and complex matrices are stored as complex matrices (real ones with
/// zero imaginary parts). A quaternionic `r × s` matrix is stored as its
/// complex `2r × 2s` embedding, which satisfies `J M̄ J⁻¹ = M` with
/// `J = diag([[0, 1], [−1, 0]], …)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MatK {
    field: FieldTag,
    rows: usize,
    cols: usize,
    emb: DMatrix<Complex64>,
}

impl MatK {
    pub fn zeros(field: FieldTag, rows: usize, cols: usize) -> Self {
        let e = block_size(field);
        MatK { field, rows, cols, emb: DMatrix::zeros(e * rows, e * cols) }
    }

    pub fn identity(field: FieldTag, n: usize) -> Self {
        let e = block_size(field);
        MatK { field, rows: n, cols: n, emb: DMatrix::identity(e * n, e * n) }
    }

    /// Real matrix from row-major entries.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        let emb = DMatrix::from_fn(rows, cols, |i, j| Complex64::new(entries[i * cols + j], 0.0));
        MatK { field: FieldTag::Real, rows, cols, emb }
    }

    /// Complex matrix from row-major entries.
    pub fn from_complex(rows: usize, cols: usize, entries: &[Complex64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        let emb = DMatrix::from_fn(rows, cols, |i, j| entries[i * cols + j]);
        MatK { field: FieldTag::Complex, rows, cols, emb }
    }

    /// Quaternionic matrix from row-major entries `[a, b, c, d] = a + bi + cj + dk`.
    pub fn from_quaternion(rows: usize, cols: usize, entries: &[[f64; 4]]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        let mut emb = DMatrix::zeros(2 * rows, 2 * cols);
        for i in 0..rows {
            for j in 0..cols {
                let [a, b, c, d] = entries[i * cols + j];
                let alpha = Complex64::new(a, b);
                let beta = Complex64::new(c, d);
                emb[(2 * i, 2 * j)] = alpha;
                emb[(2 * i, 2 * j + 1)] = beta;
                emb[(2 * i + 1, 2 * j)] = -beta.conj();
                emb[(2 * i + 1, 2 * j + 1)] = alpha.conj();
            }
        }
        MatK { field: FieldTag::Quaternion, rows, cols, emb }
    }

    /// Wraps a complex embedding, checking shape and (for ℝ, ℍ) structure.
    pub fn from_embedding(field: FieldTag, emb: DMatrix<Complex64>) -> Result<Self> {
        let e = block_size(field);
        if !emb.nrows().is_multiple_of(e) || !emb.ncols().is_multiple_of(e) {
            return Err(Error::Domain(format!("{}×{} is not a {field} embedding", emb.nrows(), emb.ncols())));
        }
        let m = MatK { field, rows: emb.nrows() / e, cols: emb.ncols() / e, emb };
        if m.structure_defect() > 1e-12 * m.emb.norm().max(1.0) {
            return Err(Error::Domain(format!("matrix is not {field}-structured")));
        }
        Ok(m)
    }

    pub(crate) fn from_embedding_unchecked(field: FieldTag, emb: DMatrix<Complex64>) -> Self {
        let e = block_size(field);
        MatK { field, rows: emb.nrows() / e, cols: emb.ncols() / e, emb }
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn embedding(&self) -> &DMatrix<Complex64> {
        &self.emb
    }

    /// Largest violation of the field structure: imaginary parts for ℝ,
    /// `‖J M̄ J⁻¹ − M‖` entrywise for ℍ, `0` for ℂ.
    pub fn structure_defect(&self) -> f64 {
        match self.field {
            FieldTag::Complex => 0.0,
            FieldTag::Real => self.emb.iter().map(|z| z.im.abs()).fold(0.0, f64::max),
            FieldTag::Quaternion => {
                let mut worst: f64 = 0.0;
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        let a = self.emb[(2 * i, 2 * j)];
                        let b = self.emb[(2 * i, 2 * j + 1)];
                        let c = self.emb[(2 * i + 1, 2 * j)];
                        let d = self.emb[(2 * i + 1, 2 * j + 1)];
                        worst = worst.max((c + b.conj()).norm()).max((d - a.conj()).norm());
                    }
                }
                worst
            }
        }
    }

    /// Conjugate transpose (quaternionic conjugate transpose for ℍ).
    pub fn adjoint(&self) -> MatK {
        MatK { field: self.field, rows: self.cols, cols: self.rows, emb: self.emb.adjoint() }
    }

    /// Matrix product.
    ///
    /// # Panics
    /// On mismatched fields or shapes.
    pub fn matmul(&self, rhs: &MatK) -> MatK {
        assert_eq!(self.field, rhs.field, "field mismatch");
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        MatK { field: self.field, rows: self.rows, cols: rhs.cols, emb: &self.emb * &rhs.emb }
    }

    /// Sub-block in field units.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> MatK {
        let e = block_size(self.field);
        MatK {
            field: self.field,
            rows: nr,
            cols: nc,
            emb: self.emb.view((e * r0, e * c0), (e * nr, e * nc)).into_owned(),
        }
    }

    /// Frobenius distance between embeddings (for ℍ this is `√2` times the
    /// quaternionic Frobenius norm).
    pub fn distance(&self, other: &MatK) -> f64 {
        (&self.emb - &other.emb).norm()
    }

    /// `‖M*M − I‖_max ≤ tol`.
    pub fn has_orthonormal_columns(&self, tol: f64) -> bool {
        let g = self.emb.adjoint() * &self.emb;
        let n = g.nrows();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let want = if i == j { 1.0 } else { 0.0 };
                (g[(i, j)] - want).norm() <= tol
            })
        })
    }

    /// `|det_K M|`. For ℍ this is `|det_ℂ emb|^{1/2}`, the Study determinant.
    pub fn det_k_abs(&self) -> f64 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let d = self.emb.clone().determinant().norm();
        match self.field {
            FieldTag::Quaternion => d.sqrt(),
            _ => d,
        }
    }

    /// `|det_ℝ M| = |det_K M|^d`, the determinant of the real realization.
    pub fn det_r_abs(&self) -> f64 {
        self.det_k_abs().powi(self.field.dim() as i32)
    }

    /// Singular values over `K`, descending. Over ℍ every value of the
    /// embedding appears twice; one copy is kept.
    pub fn singular_values(&self) -> Vec<f64> {
        let mut sv: Vec<f64> = self.emb.clone().svd(false, false).singular_values.iter().copied().collect();
        sv.sort_by(|a, b| b.total_cmp(a));
        match self.field {
            FieldTag::Quaternion => sv.into_iter().step_by(2).collect(),
            _ => sv,
        }
    }
}

/// `u ↦ u·j` on an embedded quaternionic column: the second column of the
/// 2×2 blocks, determined by the first.
pub(crate) fn partner(u: &DVector<Complex64>) -> DVector<Complex64> {
    let mut v = DVector::zeros(u.len());
    for i in 0..u.len() / 2 {
        v[2 * i] = -u[2 * i + 1].conj();
        v[2 * i + 1] = u[2 * i].conj();
    }
    v
}

/// Gram–Schmidt over `K` in the embedded picture, with one round of
/// re-orthogonalization. `basis` holds complex columns already orthonormal
/// (for ℍ, closed under [`partner`]). Each candidate is orthogonalized; if
/// enough of it survives it is appended (with its partner for ℍ). Stops once
/// `want` new field columns were added; returns how many were added.
pub(crate) fn extend_orthonormal<I>(
    field: FieldTag,
    basis: &mut Vec<DVector<Complex64>>,
    candidates: I,
    want: usize,
) -> usize
where
    I: IntoIterator<Item = DVector<Complex64>>,
{
    let mut added = 0;
    for mut v in candidates {
        if added == want {
            break;
        }
        let start = v.norm();
        for _ in 0..2 {
            for b in basis.iter() {
                let c = b.dotc(&v);
                v -= b * c;
            }
        }
        let r = v.norm();
        if r <= 1e-8 * start.max(1e-300) {
            continue;
        }
        v /= Complex64::new(r, 0.0);
        if field == FieldTag::Quaternion {
            let w = partner(&v);
            basis.push(v);
            basis.push(w);
        } else {
            basis.push(v);
        }
        added += 1;
    }
    added
}
