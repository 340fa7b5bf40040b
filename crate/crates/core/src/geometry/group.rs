use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::matk::{block_size, extend_orthonormal, MatK};
use crate::error::{Error, Result};
use crate::spectral::GrassmannSignature;

/// An `(n+1) × (n+1)` matrix over `K` with `|det_ℝ| = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement {
    sig: GrassmannSignature,
    mat: MatK,
}

impl GroupElement {
    /// Checks the size, the field and `|det_ℝ mat| = 1` to `1e−10`.
    pub fn new(sig: GrassmannSignature, mat: MatK) -> Result<Self> {
        let size = (sig.n() + 1) as usize;
        if mat.field() != sig.field() || mat.rows() != size || mat.cols() != size {
            return Err(Error::Domain(format!(
                "expected a {size}×{size} matrix over {}, got {}×{} over {}",
                sig.field(),
                mat.rows(),
                mat.cols(),
                mat.field()
            )));
        }
        let det = mat.det_r_abs();
        if (det - 1.0).abs() > 1e-10 {
            return Err(Error::Domain(format!("|det_R| = {det}, expected 1")));
        }
        Ok(GroupElement { sig, mat })
    }

    pub(crate) fn new_unchecked(sig: GrassmannSignature, mat: MatK) -> Self {
        GroupElement { sig, mat }
    }

    pub fn identity(sig: GrassmannSignature) -> Self {
        GroupElement { sig, mat: MatK::identity(sig.field(), (sig.n() + 1) as usize) }
    }

    pub fn sig(&self) -> GrassmannSignature {
        self.sig
    }

    pub fn mat(&self) -> &MatK {
        &self.mat
    }

    pub fn is_in_k(&self, tol: f64) -> bool {
        self.mat.has_orthonormal_columns(tol)
    }

    /// `g⁻¹`; the adjoint when `g ∈ K`, a general inverse otherwise.
    pub fn inverse(&self) -> GroupElement {
        let mat = if self.is_in_k(1e-12) {
            self.mat.adjoint()
        } else {
            let inv = self.mat.embedding().clone().try_inverse().expect("|det| = 1 matrices are invertible");
            MatK::from_embedding_unchecked(self.mat.field(), inv)
        };
        GroupElement { sig: self.sig, mat }
    }

    pub fn compose(&self, rhs: &GroupElement) -> GroupElement {
        GroupElement { sig: self.sig, mat: self.mat.matmul(&rhs.mat) }
    }

    /// `g · b` for `g ∈ K` (orthonormality is preserved only there).
    pub fn act(&self, b: &FramePoint) -> FramePoint {
        FramePoint { sig: self.sig, frame: self.mat.matmul(&b.frame) }
    }

    /// `g · b_o`: the first `p` columns.
    pub fn base_image(&self) -> FramePoint {
        let p = self.sig.p() as usize;
        FramePoint { sig: self.sig, frame: self.mat.block(0, 0, (self.sig.n() + 1) as usize, p) }
    }
}

/// A point of `Gr_p(K^{n+1})` given by an orthonormal `(n+1) × p` frame.
#[derive(Debug, Clone, PartialEq)]
pub struct FramePoint {
    sig: GrassmannSignature,
    frame: MatK,
}

impl FramePoint {
    /// Checks the shape and `frame* frame = I_p` to `1e−10`.
    pub fn new(sig: GrassmannSignature, frame: MatK) -> Result<Self> {
        let rows = (sig.n() + 1) as usize;
        if frame.field() != sig.field() || frame.rows() != rows || frame.cols() != sig.p() as usize {
            return Err(Error::Domain(format!(
                "expected a {rows}×{} frame over {}, got {}×{} over {}",
                sig.p(),
                sig.field(),
                frame.rows(),
                frame.cols(),
                frame.field()
            )));
        }
        if !frame.has_orthonormal_columns(1e-10) {
            return Err(Error::Domain("frame columns are not orthonormal".into()));
        }
        Ok(FramePoint { sig, frame })
    }

    pub(crate) fn new_unchecked(sig: GrassmannSignature, frame: MatK) -> Self {
        FramePoint { sig, frame }
    }

    /// `b_o = K e_1 ⊕ … ⊕ K e_p`.
    pub fn base(sig: GrassmannSignature) -> Self {
        GroupElement::identity(sig).base_image()
    }

    pub fn sig(&self) -> GrassmannSignature {
        self.sig
    }

    pub fn frame(&self) -> &MatK {
        &self.frame
    }

    /// Same subspace, tested through `|Cos| = 1`.
    pub fn same_subspace(&self, other: &FramePoint, tol: f64) -> bool {
        (cos_angle(self, other) - 1.0).abs() <= tol
    }
}

/// `α_P(g) = |det_K A|` with `A` the top-left `p × p` block of `g`, so that
/// `α_P(g)^λ = |det_ℝ A|^{λ/d}`. Zero when `A` is singular.
pub fn alpha_p(sig: &GrassmannSignature, g: &GroupElement) -> f64 {
    let p = sig.p() as usize;
    g.mat.block(0, 0, p, p).det_k_abs()
}

/// `|Cos(b, c)|`: the product of the principal-angle cosines, i.e. of the
/// `K`-singular values of `c* b`.
///
/// # Panics
/// If the frames come from different signatures.
pub fn cos_angle(b: &FramePoint, c: &FramePoint) -> f64 {
    assert_eq!(b.sig, c.sig, "frames from different Grassmannians");
    c.frame.adjoint().matmul(&b.frame).singular_values().iter().product::<f64>().min(1.0)
}

/// Orthonormal frame of `b^⊥`, defined when `p = q`.
pub fn perp(b: &FramePoint) -> Result<FramePoint> {
    let sig = b.sig;
    if !sig.is_square() {
        return Err(Error::Domain(format!("orthocomplement leaves {sig} unless p = q")));
    }
    let field = sig.field();
    let e = block_size(field);
    let size = (sig.n() + 1) as usize;
    let emb = b.frame.embedding();
    let mut basis: Vec<DVector<Complex64>> = (0..emb.ncols()).map(|j| emb.column(j).into_owned()).collect();
    let start = basis.len();
    let candidates = (0..size).map(|i| {
        let mut v = DVector::zeros(e * size);
        v[e * i] = Complex64::new(1.0, 0.0);
        v
    });
    let added = extend_orthonormal(field, &mut basis, candidates, sig.q() as usize);
    if added != sig.q() as usize {
        return Err(Error::NonConvergence("unitary completion lost rank".into()));
    }
    let frame = MatK::from_embedding_unchecked(field, DMatrix::from_columns(&basis[start..]));
    Ok(FramePoint { sig, frame })
}

/// `exp Y(t)`: rotation by `t_j` in the `(e_j, e_{q+j})` plane for
/// `j = 1..p`, identity on the middle `q − p` coordinates.
pub fn torus_point(sig: &GrassmannSignature, t: &[f64]) -> Result<GroupElement> {
    let p = sig.p() as usize;
    if t.len() != p {
        return Err(Error::Domain(format!("need {p} angles, got {}", t.len())));
    }
    let size = (sig.n() + 1) as usize;
    let mut m = vec![0.0; size * size];
    for i in p..(size - p) {
        m[i * size + i] = 1.0;
    }
    for (j, &tj) in t.iter().enumerate() {
        let (s, c) = tj.sin_cos();
        let low = size - p + j;
        m[j * size + j] = c;
        m[j * size + low] = -s;
        m[low * size + j] = s;
        m[low * size + low] = c;
    }
    let real = MatK::from_real(size, size, &m);
    let mat = match sig.field() {
        crate::spectral::FieldTag::Real => real,
        field => lift_real(field, &real),
    };
    Ok(GroupElement { sig: *sig, mat })
}

/// A real matrix viewed over `ℂ` or `ℍ`.
pub(crate) fn lift_real(field: crate::spectral::FieldTag, m: &MatK) -> MatK {
    let e = block_size(field);
    let src = m.embedding();
    let mut emb = DMatrix::zeros(e * m.rows(), e * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            for k in 0..e {
                emb[(e * i + k, e * j + k)] = src[(i, j)];
            }
        }
    }
    MatK::from_embedding_unchecked(field, emb)
}
