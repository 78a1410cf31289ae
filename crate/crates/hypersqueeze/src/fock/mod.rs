//! Truncated multimode bosonic Fock engine.
//!
//! The Hilbert space is a hard-wall truncation: each mode keeps quanta
//! 0..=cutoff and operators are built exactly on the truncated space.
//! Quadratic-operator identities therefore hold only on the interior
//! subspace (basis states at least [`INTERIOR_MARGIN`] quanta below every
//! mode cutoff); every algebra and covariance assertion in the crate is
//! restricted to it.
//!
//! Operators are stored column-sparse. Unitaries are applied to state
//! vectors by a scaled Taylor `expmv`; the dense Padé kernel in
//! [`crate::matcore`] remains the oracle on small spaces.

pub mod moments;
pub mod ops;
pub mod states;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matcore::{cr, CMatrix, CVector};

pub use moments::{
    concurrence_q, concurrence_theta, covariance_check, extract_entanglement_q, quadratures,
    sp2_coherent_phase_residual, squeezed_coherent_report, squeezed_moments, CoherentReport,
    MomentReport, QuadratureScheme,
};
pub use ops::{
    metaplectic_casimir, sp4_interior_residual, sp4_ops, su11_casimir, su11_interior_residual,
    su11_ops, Sp4Ops, Sp4Realization, Su11Ops, Su11Realization,
};
pub use states::{
    displacement, sp4_squeeze, sp4_squeeze_direct, sp4_squeezed_onephoton, sp4_squeezed_vacuum,
    squeezed_number_state, su11_squeeze, ExpProduct, PhotonSlot, Sp2StateFamily,
};

/// Default ceiling on the truncated dimension (N+1)^modes.
pub const DIMENSION_CEILING: usize = 20_000;

/// Interior margin: quanta below every mode cutoff for which quadratic
/// operator identities are exact despite truncation.
pub const INTERIOR_MARGIN: usize = 4;

/// Truncated multimode bosonic space with (cutoff+1)^modes basis states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockSpace {
    modes: usize,
    cutoff: usize,
    dim: usize,
}

impl FockSpace {
    pub fn new(modes: usize, cutoff: usize) -> Result<Self> {
        Self::with_ceiling(modes, cutoff, DIMENSION_CEILING)
    }

    pub fn with_ceiling(modes: usize, cutoff: usize, ceiling: usize) -> Result<Self> {
        if !matches!(modes, 1 | 2 | 4) {
            return Err(Error::Unsupported(format!(
                "mode count {modes} (supported: 1, 2, 4)"
            )));
        }
        if cutoff < 2 {
            return Err(Error::Domain(format!("cutoff must be >= 2, got {cutoff}")));
        }
        let dim = (cutoff + 1)
            .checked_pow(modes as u32)
            .ok_or_else(|| Error::Resource("dimension overflow".into()))?;
        if dim > ceiling {
            return Err(Error::Resource(format!(
                "dimension {dim} exceeds ceiling {ceiling}"
            )));
        }
        Ok(Self { modes, cutoff, dim })
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Flat index of an occupation vector; the first mode is the most
    /// significant digit (matching the Kronecker convention).
    pub fn index(&self, occ: &[usize]) -> Result<usize> {
        if occ.len() != self.modes {
            return Err(Error::Dimension {
                expected: format!("{} occupation numbers", self.modes),
                got: format!("{}", occ.len()),
            });
        }
        let mut idx = 0;
        for &n in occ {
            if n > self.cutoff {
                return Err(Error::IndexOutOfRange {
                    what: format!("occupation {n} exceeds cutoff {}", self.cutoff),
                });
            }
            idx = idx * (self.cutoff + 1) + n;
        }
        Ok(idx)
    }

    pub fn occupation(&self, mut idx: usize) -> Vec<usize> {
        let base = self.cutoff + 1;
        let mut occ = vec![0; self.modes];
        for m in (0..self.modes).rev() {
            occ[m] = idx % base;
            idx /= base;
        }
        occ
    }

    /// Indices of basis states at least `margin` quanta below every mode
    /// cutoff.
    pub fn interior_indices(&self, margin: usize) -> Vec<usize> {
        let limit = self.cutoff.saturating_sub(margin);
        (0..self.dim)
            .filter(|&i| self.occupation(i).iter().all(|&n| n <= limit))
            .collect()
    }
}

/// Amplitude vector over the number basis. The norm is reported, never
/// forced: truncation loses tail mass.
#[derive(Debug, Clone)]
pub struct FockState {
    pub space: FockSpace,
    pub amps: CVector,
}

impl FockState {
    pub fn vacuum(space: FockSpace) -> Self {
        let mut amps = CVector::zeros(space.dim());
        amps[0] = cr(1.0);
        Self { space, amps }
    }

    pub fn basis(space: FockSpace, occ: &[usize]) -> Result<Self> {
        let idx = space.index(occ)?;
        let mut amps = CVector::zeros(space.dim());
        amps[idx] = cr(1.0);
        Ok(Self { space, amps })
    }

    pub fn from_amps(space: FockSpace, amps: CVector) -> Result<Self> {
        if amps.len() != space.dim() {
            return Err(Error::Dimension {
                expected: format!("{}", space.dim()),
                got: format!("{}", amps.len()),
            });
        }
        if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Domain("non-finite amplitude".into()));
        }
        Ok(Self { space, amps })
    }

    pub fn amp(&self, occ: &[usize]) -> Result<Complex64> {
        Ok(self.amps[self.space.index(occ)?])
    }

    pub fn norm(&self) -> f64 {
        self.amps.norm()
    }

    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.space != other.space {
            return Err(Error::Dimension {
                expected: format!("space {:?}", self.space),
                got: format!("space {:?}", other.space),
            });
        }
        Ok(self.amps.dotc(&other.amps))
    }

    /// Global-phase-insensitive fidelity |<a|b>|^2 / (|a|^2 |b|^2).
    pub fn fidelity(&self, other: &Self) -> Result<f64> {
        let ip = self.inner(other)?;
        let na = self.amps.norm_squared();
        let nb = other.amps.norm_squared();
        if na == 0.0 || nb == 0.0 {
            return Err(Error::Domain("fidelity of a zero state".into()));
        }
        Ok(ip.norm_sqr() / (na * nb))
    }

    /// Tensor product; both factors must share the cutoff and the combined
    /// mode count must be supported.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.space.cutoff != other.space.cutoff {
            return Err(Error::Dimension {
                expected: format!("cutoff {}", self.space.cutoff),
                got: format!("cutoff {}", other.space.cutoff),
            });
        }
        let space = FockSpace::new(self.space.modes + other.space.modes, self.space.cutoff)?;
        let amps = crate::matcore::kron_vec(&self.amps, &other.amps);
        Self::from_amps(space, amps)
    }

    pub fn scale(&self, z: Complex64) -> Self {
        Self {
            space: self.space,
            amps: self.amps.map(|a| a * z),
        }
    }
}

/// Column-sparse operator on a Fock space.
#[derive(Debug, Clone)]
pub struct FockOp {
    pub space: FockSpace,
    /// cols[j] lists (row, entry) with rows strictly increasing.
    cols: Vec<Vec<(usize, Complex64)>>,
}

impl FockOp {
    pub fn zero(space: FockSpace) -> Self {
        Self {
            space,
            cols: vec![Vec::new(); space.dim()],
        }
    }

    pub fn identity(space: FockSpace) -> Self {
        let mut op = Self::zero(space);
        for (j, col) in op.cols.iter_mut().enumerate() {
            col.push((j, cr(1.0)));
        }
        op
    }

    fn insert(&mut self, row: usize, col: usize, z: Complex64) {
        if z == Complex64::ZERO {
            return;
        }
        let c = &mut self.cols[col];
        match c.binary_search_by_key(&row, |e| e.0) {
            Ok(pos) => {
                c[pos].1 += z;
                if c[pos].1 == Complex64::ZERO {
                    c.remove(pos);
                }
            }
            Err(pos) => c.insert(pos, (row, z)),
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_diagonal(&self) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(j, c)| c.iter().all(|&(i, _)| i == j))
    }

    pub fn diagonal_entry(&self, j: usize) -> Complex64 {
        self.cols[j]
            .iter()
            .find(|&&(i, _)| i == j)
            .map(|&(_, z)| z)
            .unwrap_or(Complex64::ZERO)
    }

    pub fn apply(&self, v: &CVector) -> CVector {
        let mut out = CVector::zeros(self.space.dim());
        for (j, col) in self.cols.iter().enumerate() {
            let vj = v[j];
            if vj == Complex64::ZERO {
                continue;
            }
            for &(i, z) in col {
                out[i] += z * vj;
            }
        }
        out
    }

    pub fn apply_state(&self, s: &FockState) -> FockState {
        FockState {
            space: s.space,
            amps: self.apply(&s.amps),
        }
    }

    /// Sparse column view.
    pub fn column(&self, j: usize) -> &[(usize, Complex64)] {
        &self.cols[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.cols[j]
            .iter()
            .find(|&&(r, _)| r == i)
            .map(|&(_, z)| z)
            .unwrap_or(Complex64::ZERO)
    }

    pub fn scale(&self, z: Complex64) -> Self {
        Self {
            space: self.space,
            cols: self
                .cols
                .iter()
                .map(|c| c.iter().map(|&(i, w)| (i, w * z)).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (j, col) in other.cols.iter().enumerate() {
            for &(i, z) in col {
                out.insert(i, j, z);
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(cr(-1.0)))
    }

    /// Matrix product self * other, column by column.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.space);
        for j in 0..self.space.dim() {
            let mut acc: std::collections::BTreeMap<usize, Complex64> =
                std::collections::BTreeMap::new();
            for &(kk, z) in &other.cols[j] {
                for &(i, w) in &self.cols[kk] {
                    *acc.entry(i).or_insert(Complex64::ZERO) += w * z;
                }
            }
            out.cols[j] = acc
                .into_iter()
                .filter(|&(_, z)| z != Complex64::ZERO)
                .collect();
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.space);
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, z) in col {
                out.insert(j, i, z.conj());
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn one_norm(&self) -> f64 {
        self.cols
            .iter()
            .map(|c| c.iter().map(|&(_, z)| z.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn column_norm(&self, j: usize) -> f64 {
        self.cols[j]
            .iter()
            .map(|&(_, z)| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// max_j ‖(A - A^dag) e_j‖ — zero for Hermitian operators.
    pub fn hermiticity_residual(&self) -> f64 {
        let diff = self.sub(&self.adjoint());
        (0..self.space.dim())
            .map(|j| diff.column_norm(j))
            .fold(0.0, f64::max)
    }

    /// Expectation value <s|A|s> / <s|s>.
    pub fn expect(&self, s: &FockState) -> Complex64 {
        let av = self.apply(&s.amps);
        s.amps.dotc(&av) / cr(s.amps.norm_squared())
    }

    pub fn to_dense(&self) -> CMatrix {
        let n = self.space.dim();
        let mut m = CMatrix::zeros(n, n);
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, z) in col {
                m[(i, j)] = z;
            }
        }
        m
    }
}

/// Annihilation operator of one mode: a|n> = sqrt(n)|n-1> on that mode's
/// factor, identity elsewhere. Hard-wall truncation: the cutoff -> cutoff+1
/// raising element is absent, so [a, a^dag] = 1 only on the interior.
pub fn ladder(space: FockSpace, mode: usize) -> Result<FockOp> {
    if mode >= space.modes() {
        return Err(Error::IndexOutOfRange {
            what: format!("mode {mode}, space has {} modes", space.modes()),
        });
    }
    let mut op = FockOp::zero(space);
    for j in 0..space.dim() {
        let occ = space.occupation(j);
        let n = occ[mode];
        if n > 0 {
            let mut target = occ.clone();
            target[mode] = n - 1;
            let i = space.index(&target)?;
            op.insert(i, j, cr((n as f64).sqrt()));
        }
    }
    Ok(op)
}

/// Number operator of one mode.
pub fn number_op(space: FockSpace, mode: usize) -> Result<FockOp> {
    if mode >= space.modes() {
        return Err(Error::IndexOutOfRange {
            what: format!("mode {mode}, space has {} modes", space.modes()),
        });
    }
    let mut op = FockOp::zero(space);
    for j in 0..space.dim() {
        let n = space.occupation(j)[mode];
        if n > 0 {
            op.insert(j, j, cr(n as f64));
        }
    }
    Ok(op)
}

/// w = exp(coeff * A) v by scaled Taylor summation; exactly diagonal A is
/// exponentiated entrywise. Deterministic, relative truncation ~1e-16 per
/// substep.
pub fn expmv(op: &FockOp, coeff: Complex64, v: &CVector) -> CVector {
    if op.is_diagonal() {
        let mut out = v.clone();
        for j in 0..op.space.dim() {
            out[j] *= (coeff * op.diagonal_entry(j)).exp();
        }
        return out;
    }
    let scale = op.one_norm() * coeff.norm();
    let substeps = scale.ceil().max(1.0) as usize;
    let dt = coeff / cr(substeps as f64);
    let mut w = v.clone();
    for _ in 0..substeps {
        let mut term = w.clone();
        let mut acc = w.clone();
        for k in 1..=80 {
            term = op.apply(&term).map(|z| z * dt / cr(k as f64));
            acc += &term;
            if term.norm() <= 1e-16 * acc.norm() {
                break;
            }
        }
        w = acc;
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::{frob_dist, mat_exp, I};

    #[test]
    fn space_indexing_roundtrip() {
        let space = FockSpace::new(2, 5).unwrap();
        assert_eq!(space.dim(), 36);
        for idx in 0..space.dim() {
            let occ = space.occupation(idx);
            assert_eq!(space.index(&occ).unwrap(), idx);
        }
        assert!(FockSpace::new(3, 5).is_err());
        assert!(FockSpace::new(2, 1).is_err());
        assert!(FockSpace::new(4, 40).is_err(), "ceiling must reject 41^4");
    }

    #[test]
    fn ladder_matrix_elements() {
        let space = FockSpace::new(1, 6).unwrap();
        let a = ladder(space, 0).unwrap();
        // <0|a|1> = 1, <n-1|a|n> = sqrt(n)
        assert_eq!(a.column(1)[0], (0, cr(1.0)));
        for n in 1..=6 {
            let col = a.column(n);
            assert_eq!(col.len(), 1);
            assert_eq!(col[0].0, n - 1);
            assert!((col[0].1 - cr((n as f64).sqrt())).norm() < 1e-15);
        }
        assert!(ladder(space, 1).is_err());
    }

    #[test]
    fn distinct_mode_commutators_vanish_exactly() {
        let space = FockSpace::new(2, 5).unwrap();
        let a = ladder(space, 0).unwrap();
        let b = ladder(space, 1).unwrap();
        assert_eq!(a.commutator(&b).nnz(), 0);
        assert_eq!(a.commutator(&b.adjoint()).nnz(), 0);
        // [a, a^dag] = 1 on the interior (all occupations below the wall);
        // sqrt(n) products round at the last ulp
        let comm = a.commutator(&a.adjoint());
        for &j in space.interior_indices(1).iter() {
            let col = comm.column(j);
            assert_eq!(col.len(), 1);
            assert_eq!(col[0].0, j);
            assert!((col[0].1 - cr(1.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn sparse_matches_dense_algebra() {
        let space = FockSpace::new(1, 8).unwrap();
        let a = ladder(space, 0).unwrap();
        let n = number_op(space, 0).unwrap();
        let lhs = a.adjoint().mul(&a).to_dense();
        assert!(frob_dist(&lhs, &n.to_dense()).unwrap() < 1e-14);
    }

    #[test]
    fn expmv_matches_dense_exponential() {
        let space = FockSpace::new(1, 12).unwrap();
        let a = ladder(space, 0).unwrap();
        // anti-Hermitian combination: alpha a^dag - alpha* a
        let alpha = Complex64::new(0.7, -0.4);
        let gen = a.adjoint().scale(alpha).sub(&a.scale(alpha.conj()));
        let dense = mat_exp(&gen.to_dense()).unwrap();
        let v0 = FockState::vacuum(space).amps;
        let via_expmv = expmv(&gen, cr(1.0), &v0);
        let via_dense = &dense * &v0;
        assert!((&via_expmv - &via_dense).norm() < 1e-13);
    }

    #[test]
    fn expmv_diagonal_path() {
        let space = FockSpace::new(1, 10).unwrap();
        let n = number_op(space, 0).unwrap();
        assert!(n.is_diagonal());
        let mut v = CVector::zeros(space.dim());
        for j in 0..space.dim() {
            v[j] = cr(1.0 / (j + 1) as f64);
        }
        let out = expmv(&n, I * cr(0.3), &v);
        for j in 0..space.dim() {
            let expected = v[j] * (I * cr(0.3 * j as f64)).exp();
            assert!((out[j] - expected).norm() < 1e-15);
        }
    }

    #[test]
    fn state_tensor_and_fidelity() {
        let space1 = FockSpace::new(1, 4).unwrap();
        let s1 = FockState::basis(space1, &[2]).unwrap();
        let s2 = FockState::basis(space1, &[3]).unwrap();
        let joint = s1.tensor(&s2).unwrap();
        assert_eq!(joint.space.modes(), 2);
        assert!((joint.amp(&[2, 3]).unwrap() - cr(1.0)).norm() < 1e-15);
        // fidelity insensitive to a global phase
        let phased = joint.scale((I * cr(1.234)).exp());
        assert!((joint.fidelity(&phased).unwrap() - 1.0).abs() < 1e-14);
    }
}
