//! SO(2,3) ~ Sp(4;R) matrix layer.
//!
//! Gamma matrices are assembled from the split-quaternions,
//! gamma^m = [[0, qbar^m], [q^m, 0]], gamma^5 = diag(1,1,-1,-1), with
//! generators sigma^{ab} = -(i/4)[gamma^a, gamma^b] and metric
//! g = diag(-1,-1,+1,+1,+1). The pseudo-Hermitian metric is
//! k = i gamma^1 gamma^2 = diag(sigma_z, sigma_z).
//!
//! On top of the structure matrices sit the two Sp(4;R) squeeze matrices
//! (Dirac and Schwinger type), their Gauss and Euler decompositions, the
//! second non-compact Hopf map onto the Bloch four-hyperboloid H^{2,2},
//! the chiral Hopf map, the H^{4,3} group element, the Hopf-spinor squeeze
//! matrix, the transform to the real sp(4;R) form and randomized
//! symplectic/Bogoliubov structure checks.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matcore::{
    c, cr, dagger, det, frob_dist, frob_norm, identity, mat_exp, pauli_x, pauli_z, zeros, CMatrix,
    I,
};
use crate::splitq::{sq_basis_matrix, sq_conj_basis_matrix, SqRep};
use crate::{reduce_angle, SqueezeKind};

pub const METRIC5: [f64; 5] = [-1.0, -1.0, 1.0, 1.0, 1.0];
pub const METRIC4: [f64; 4] = [-1.0, -1.0, 1.0, 1.0];

/// Upper-triangular pair order used for the ten antisymmetric index pairs.
pub const PAIRS: [(usize, usize); 10] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 5),
    (4, 5),
];

fn pair_index(a: usize, b: usize) -> Option<(usize, f64)> {
    if a == b || !(1..=5).contains(&a) || !(1..=5).contains(&b) {
        return None;
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    PAIRS
        .iter()
        .position(|&(x, y)| (x, y) == (lo, hi))
        .map(|i| (i, sign))
}

/// Assemble a 4x4 matrix from 2x2 blocks.
pub fn block4(tl: &CMatrix, tr: &CMatrix, bl: &CMatrix, br: &CMatrix) -> CMatrix {
    let mut m = zeros(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] = tl[(i, j)];
            m[(i, j + 2)] = tr[(i, j)];
            m[(i + 2, j)] = bl[(i, j)];
            m[(i + 2, j + 2)] = br[(i, j)];
        }
    }
    m
}

/// The SO(2,3) structure matrices in the main-text split-quaternion
/// realization.
#[derive(Debug, Clone)]
pub struct So23MatrixFamily {
    /// gamma^a, a = 1..5.
    pub gamma: [CMatrix; 5],
    /// sigma^{ab} for a<b in `PAIRS` order.
    sigma_list: Vec<CMatrix>,
    /// k = i gamma^1 gamma^2 = diag(sigma_z, sigma_z).
    pub k: CMatrix,
    /// k^a = k gamma^a (Hermitian).
    pub k_a: [CMatrix; 5],
    k_ab_list: Vec<CMatrix>,
    /// Charge conjugation C = diag(sigma_x, sigma_x).
    pub c_conj: CMatrix,
    /// E = k C (antisymmetric, block diag(i sigma_y, i sigma_y)).
    pub e_mat: CMatrix,
    /// m^a = E gamma^a (antisymmetric).
    pub m_a: [CMatrix; 5],
    m_ab_list: Vec<CMatrix>,
}

static FAMILY: std::sync::OnceLock<So23MatrixFamily> = std::sync::OnceLock::new();

/// Cached family accessor; construction is deterministic.
pub fn build_family() -> &'static So23MatrixFamily {
    FAMILY.get_or_init(So23MatrixFamily::new)
}

impl So23MatrixFamily {
    pub fn new() -> Self {
        let q = |m: usize| sq_basis_matrix(m, SqRep::Main).expect("basis index");
        let qb = |m: usize| sq_conj_basis_matrix(m, SqRep::Main).expect("basis index");
        let z2 = zeros(2, 2);
        let i2 = identity(2);

        let mut gamma: Vec<CMatrix> = (1..=4)
            .map(|m| block4(&z2, &qb(m), &q(m), &z2))
            .collect();
        gamma.push(block4(&i2, &z2, &z2, &i2.map(|z| -z)));
        let gamma: [CMatrix; 5] = gamma.try_into().unwrap();

        let sigma_list: Vec<CMatrix> = PAIRS
            .iter()
            .map(|&(a, b)| {
                (&gamma[a - 1] * &gamma[b - 1] - &gamma[b - 1] * &gamma[a - 1])
                    .map(|z| z * (-I) * cr(0.25))
            })
            .collect();

        let k = (&gamma[0] * &gamma[1]).map(|z| I * z);
        let k_a: [CMatrix; 5] = std::array::from_fn(|i| &k * &gamma[i]);
        let k_ab_list: Vec<CMatrix> = sigma_list.iter().map(|s| &k * s).collect();

        let sx = pauli_x();
        let c_conj = block4(&sx, &z2, &z2, &sx);
        let e_mat = &k * &c_conj;
        let m_a: [CMatrix; 5] = std::array::from_fn(|i| &e_mat * &gamma[i]);
        let m_ab_list: Vec<CMatrix> = sigma_list.iter().map(|s| (&e_mat * s).map(|z| -z)).collect();

        Self {
            gamma,
            sigma_list,
            k,
            k_a,
            k_ab_list,
            c_conj,
            e_mat,
            m_a,
            m_ab_list,
        }
    }

    /// sigma^{ab}, 1-based, antisymmetric in (a,b); zero when a = b.
    pub fn sigma(&self, a: usize, b: usize) -> CMatrix {
        match pair_index(a, b) {
            Some((i, sign)) => self.sigma_list[i].map(|z| z * cr(sign)),
            None => zeros(4, 4),
        }
    }

    pub fn k_ab(&self, a: usize, b: usize) -> CMatrix {
        match pair_index(a, b) {
            Some((i, sign)) => self.k_ab_list[i].map(|z| z * cr(sign)),
            None => zeros(4, 4),
        }
    }

    pub fn m_ab(&self, a: usize, b: usize) -> CMatrix {
        match pair_index(a, b) {
            Some((i, sign)) => self.m_ab_list[i].map(|z| z * cr(sign)),
            None => zeros(4, 4),
        }
    }

    /// k^5 = k gamma^5 = diag(sigma_z, -sigma_z); the weight of the trace
    /// formula extracting H^{2,2} coordinates.
    pub fn k5(&self) -> &CMatrix {
        &self.k_a[4]
    }

    /// gamma with lowered index.
    pub fn gamma_lower(&self, a: usize) -> CMatrix {
        self.gamma[a - 1].map(|z| z * cr(METRIC5[a - 1]))
    }
}

impl Default for So23MatrixFamily {
    fn default() -> Self {
        Self::new()
    }
}

/// Bloch four-hyperboloid coordinates: polar angle theta in [0, pi],
/// hyperbolic radius rho >= 0, and the two circle angles chi, phi.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct H22Params {
    pub theta: f64,
    pub rho: f64,
    pub chi: f64,
    pub phi: f64,
}

impl H22Params {
    /// Canonicalizing constructor. theta outside [0, pi] is folded with the
    /// chart equivalence (theta, chi, phi) -> (2pi - theta, chi + pi,
    /// phi + pi), which fixes the embedding coordinates x^a.
    pub fn new(theta: f64, rho: f64, chi: f64, phi: f64) -> Result<Self> {
        if !rho.is_finite() || rho < 0.0 {
            return Err(Error::Domain(format!("rho must be finite and >= 0, got {rho}")));
        }
        if !theta.is_finite() {
            return Err(Error::Domain("theta must be finite".into()));
        }
        let two_pi = 2.0 * std::f64::consts::PI;
        let mut theta = reduce_angle(theta, two_pi);
        let mut chi = chi;
        let mut phi = phi;
        if theta > std::f64::consts::PI {
            theta = two_pi - theta;
            chi += std::f64::consts::PI;
            phi += std::f64::consts::PI;
        }
        Ok(Self {
            theta,
            rho,
            chi: reduce_angle(chi, two_pi),
            phi: reduce_angle(phi, two_pi),
        })
    }

    /// Embedding coordinates x^m = sin(theta) y^m, x^5 = cos(theta).
    pub fn x(&self) -> [f64; 5] {
        let y = self.y();
        let s = self.theta.sin();
        [
            s * y[0],
            s * y[1],
            s * y[2],
            s * y[3],
            self.theta.cos(),
        ]
    }

    /// Normalized H^{2,1} latitude coordinates
    /// y^m = (cos chi sinh rho, sin chi sinh rho, cos phi cosh rho, sin phi cosh rho).
    pub fn y(&self) -> [f64; 4] {
        let sh = self.rho.sinh();
        let ch = self.rho.cosh();
        [
            self.chi.cos() * sh,
            self.chi.sin() * sh,
            self.phi.cos() * ch,
            self.phi.sin() * ch,
        ]
    }
}

/// Point on H^{2,2}: -x1^2 - x2^2 + x3^2 + x4^2 + x5^2 = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct H22Point {
    pub x: [f64; 5],
}

/// Acceptance gate on the quadric residual for projected points.
pub const H22_TOL: f64 = 1e-8;

impl H22Point {
    pub fn new(x: [f64; 5]) -> Result<Self> {
        let r = (Self::split_norm(&x) - 1.0).abs();
        if r > H22_TOL {
            return Err(Error::constraint("H^{2,2} condition", r, H22_TOL));
        }
        Ok(Self { x })
    }

    pub fn split_norm(x: &[f64; 5]) -> f64 {
        -x[0] * x[0] - x[1] * x[1] + x[2] * x[2] + x[3] * x[3] + x[4] * x[4]
    }

    pub fn residual(&self) -> f64 {
        (Self::split_norm(&self.x) - 1.0).abs()
    }
}

/// An Sp(4;R) squeeze matrix together with its kind and source parameters.
#[derive(Debug, Clone)]
pub struct Sp4SqueezeMatrix {
    pub m: CMatrix,
    pub kind: SqueezeKind,
    pub params: H22Params,
}

impl Sp4SqueezeMatrix {
    /// max(‖m^dag k m - k‖_F, |det m - 1|).
    pub fn pseudo_unitarity_residual(&self) -> f64 {
        pseudo_unitarity_residual(&self.m)
    }
}

pub fn pseudo_unitarity_residual(m: &CMatrix) -> f64 {
    let fam = build_family();
    let metric = frob_dist(&(dagger(m) * &fam.k * m), &fam.k).unwrap_or(f64::INFINITY);
    let d = (det(m) - cr(1.0)).norm();
    metric.max(d)
}

fn phase(a: f64) -> Complex64 {
    (I * cr(a)).exp()
}

/// Dirac-type Sp(4;R) squeeze matrix M = exp(i theta y_m sigma^{m5}) in its
/// polar closed form; M = [Psi_L Psi_R] with the chirality +/-1 blocks.
pub fn sp4_dirac_squeeze(p: &H22Params) -> Sp4SqueezeMatrix {
    let ct = cr((p.theta / 2.0).cos());
    let st = (p.theta / 2.0).sin();
    let ch = p.rho.cosh();
    let sh = p.rho.sinh();
    let z = Complex64::ZERO;
    let m = CMatrix::from_row_slice(
        4,
        4,
        &[
            ct,
            z,
            -I * cr(st * ch) * phase(-p.phi),
            -cr(st * sh) * phase(-p.chi),
            z,
            ct,
            -cr(st * sh) * phase(p.chi),
            I * cr(st * ch) * phase(p.phi),
            -I * cr(st * ch) * phase(p.phi),
            -cr(st * sh) * phase(-p.chi),
            ct,
            z,
            -cr(st * sh) * phase(p.chi),
            I * cr(st * ch) * phase(-p.phi),
            z,
            ct,
        ],
    );
    Sp4SqueezeMatrix {
        m,
        kind: SqueezeKind::Dirac,
        params: *p,
    }
}

/// Exponential route M = exp(i theta y_m sigma^{m5}).
pub fn sp4_dirac_squeeze_exp(p: &H22Params) -> Result<CMatrix> {
    let fam = build_family();
    let y = p.y();
    let mut gen = zeros(4, 4);
    for m in 1..=4 {
        gen += fam.sigma(m, 5).map(|z| z * cr(y[m - 1] * METRIC4[m - 1]));
    }
    mat_exp(&gen.map(|z| z * I * cr(p.theta)))
}

/// Schwinger-type Sp(4;R) squeeze matrix, M = H e^{i theta sigma^35}, in
/// its polar closed form.
pub fn sp4_schwinger_squeeze(p: &H22Params) -> Sp4SqueezeMatrix {
    let ct = (p.theta / 2.0).cos();
    let st = (p.theta / 2.0).sin();
    let ch = (p.rho / 2.0).cosh();
    let sh = (p.rho / 2.0).sinh();
    let ap = 0.5 * (p.chi + p.phi);
    let am = 0.5 * (p.chi - p.phi);
    let m = CMatrix::from_row_slice(
        4,
        4,
        &[
            cr(ct * ch) * phase(-ap),
            I * cr(ct * sh) * phase(-ap),
            -I * cr(st * ch) * phase(-ap),
            -cr(st * sh) * phase(-ap),
            -I * cr(ct * sh) * phase(ap),
            cr(ct * ch) * phase(ap),
            -cr(st * sh) * phase(ap),
            I * cr(st * ch) * phase(ap),
            -I * cr(st * ch) * phase(-am),
            -cr(st * sh) * phase(-am),
            cr(ct * ch) * phase(-am),
            I * cr(ct * sh) * phase(-am),
            -cr(st * sh) * phase(am),
            I * cr(st * ch) * phase(am),
            -I * cr(ct * sh) * phase(am),
            cr(ct * ch) * phase(am),
        ],
    );
    Sp4SqueezeMatrix {
        m,
        kind: SqueezeKind::Schwinger,
        params: *p,
    }
}

/// Block-diagonal SU(1,1) x SU(1,1) factor
/// H = e^{-i phi sigma^34} e^{i chi sigma^12} e^{-i rho sigma^13}
///   = diag(H_L, H_R).
pub fn euler_h(p: &H22Params) -> CMatrix {
    let ch = cr((p.rho / 2.0).cosh());
    let sh = cr((p.rho / 2.0).sinh());
    let block = |a: f64| -> CMatrix {
        CMatrix::from_row_slice(
            2,
            2,
            &[
                ch * phase(-a),
                I * sh * phase(-a),
                -I * sh * phase(a),
                ch * phase(a),
            ],
        )
    };
    let hl = block(0.5 * (p.chi + p.phi));
    let hr = block(0.5 * (p.chi - p.phi));
    block4(&hl, &zeros(2, 2), &zeros(2, 2), &hr)
}

/// Core factor e^{i theta sigma^35} =
/// [[cos(theta/2) 1, -i sin(theta/2) sigma_z], [-i sin(theta/2) sigma_z, cos(theta/2) 1]].
pub fn euler_core(theta: f64) -> CMatrix {
    let ct = (theta / 2.0).cos();
    let st = (theta / 2.0).sin();
    let i2 = identity(2).map(|z| z * cr(ct));
    let off = pauli_z().map(|z| z * cr(st) * (-I));
    block4(&i2, &off, &off, &identity(2).map(|z| z * cr(ct)))
}

/// Euler angle decomposition: H and e^{i theta sigma^35} with
/// H e^{i theta sigma^35} H^{-1} equal to the Dirac-type squeeze matrix.
pub fn euler_decompose(p: &H22Params) -> (CMatrix, CMatrix) {
    (euler_h(p), euler_core(p.theta))
}

/// Gauss (UDL) decomposition of the Dirac-type squeeze matrix. The
/// unipotent factors exponentiate nilpotent blocks exactly:
/// upper = 1 - tan(theta/2) [[0, y^m qbar_m], [0, 0]],
/// diag = diag(sec(theta/2) 1, cos(theta/2) 1),
/// lower = 1 + tan(theta/2) [[0, 0], [y^m q_m, 0]].
pub fn gauss_decompose_sp4(p: &H22Params) -> Result<(CMatrix, CMatrix, CMatrix)> {
    let half = p.theta / 2.0;
    if half.cos().abs() < 1e-12 {
        return Err(Error::SingularDecomposition(
            "theta = pi: cos(theta/2) vanishes, UDL factors blow up".into(),
        ));
    }
    let t = half.tan();
    let y = p.y();
    let z2 = zeros(2, 2);

    let mut y_qbar = zeros(2, 2);
    let mut y_q = zeros(2, 2);
    for m in 1..=4 {
        let w = cr(y[m - 1] * METRIC4[m - 1]);
        y_qbar += sq_conj_basis_matrix(m, SqRep::Main)?.map(|v| v * w);
        y_q += sq_basis_matrix(m, SqRep::Main)?.map(|v| v * w);
    }

    let upper = identity(4) + block4(&z2, &y_qbar.map(|v| v * cr(-t)), &z2, &z2);
    let lower = identity(4) + block4(&z2, &z2, &y_q.map(|v| v * cr(t)), &z2);
    let c = half.cos();
    let mut diag = zeros(4, 4);
    for i in 0..2 {
        diag[(i, i)] = cr(1.0 / c);
        diag[(i + 2, i + 2)] = cr(c);
    }
    Ok((upper, diag, lower))
}

pub const SP4_INPUT_TOL: f64 = 1e-10;

/// Second non-compact Hopf map realized on squeeze matrices:
/// x^a = (1/4) tr(k^5 m^dag k^a m). The input must be pseudo-unitary with
/// unit determinant to 1e-10; the projected point must satisfy the H^{2,2}
/// quadric to 1e-8.
pub fn hopf2_project(m: &CMatrix) -> Result<H22Point> {
    if m.shape() != (4, 4) {
        return Err(Error::Dimension {
            expected: "4x4".into(),
            got: format!("{}x{}", m.nrows(), m.ncols()),
        });
    }
    let residual = pseudo_unitarity_residual(m);
    if residual > SP4_INPUT_TOL {
        return Err(Error::constraint(
            "Sp(4;R) pseudo-unitarity",
            residual,
            SP4_INPUT_TOL,
        ));
    }
    let fam = build_family();
    let md = dagger(m);
    let mut x = [0.0; 5];
    for a in 1..=5 {
        let z = (fam.k5() * &md * &fam.k_a[a - 1] * m).trace() * cr(0.25);
        x[a - 1] = z.re;
    }
    H22Point::new(x)
}

/// Positive-chirality 4x2 block Psi_L of the squeeze matrix,
/// [ (1+x5) 1_2 ; q_m x^m ] / sqrt(2(1+x5)).
pub fn chirality_block_l(x: &[f64; 5]) -> Result<CMatrix> {
    let nrm = 2.0 * (1.0 + x[4]);
    if nrm <= 1e-12 {
        return Err(Error::Domain("x5 = -1: chirality block undefined".into()));
    }
    let mut qx = zeros(2, 2);
    for m in 1..=4 {
        qx += sq_basis_matrix(m, SqRep::Main)?.map(|v| v * cr(x[m - 1] * METRIC4[m - 1]));
    }
    let mut out = zeros(4, 2);
    let scale = cr(1.0 / nrm.sqrt());
    for i in 0..2 {
        out[(i, i)] = cr(1.0 + x[4]) * scale;
        for j in 0..2 {
            out[(i + 2, j)] = qx[(i, j)] * scale;
        }
    }
    Ok(out)
}

/// Negative-chirality block Psi_R = [ -qbar_m x^m ; (1+x5) 1_2 ] / sqrt(2(1+x5)).
pub fn chirality_block_r(x: &[f64; 5]) -> Result<CMatrix> {
    let nrm = 2.0 * (1.0 + x[4]);
    if nrm <= 1e-12 {
        return Err(Error::Domain("x5 = -1: chirality block undefined".into()));
    }
    let mut qbx = zeros(2, 2);
    for m in 1..=4 {
        qbx += sq_conj_basis_matrix(m, SqRep::Main)?.map(|v| v * cr(x[m - 1] * METRIC4[m - 1]));
    }
    let mut out = zeros(4, 2);
    let scale = cr(1.0 / nrm.sqrt());
    for i in 0..2 {
        for j in 0..2 {
            out[(i, j)] = -qbx[(i, j)] * scale;
        }
        out[(i + 2, i)] = cr(1.0 + x[4]) * scale;
    }
    Ok(out)
}

/// Chiral Hopf map: two H^{2,1}-normalized spinors map to
/// y^m = (1/2)(psi_L^dag sigma_z qbar^m psi_R + psi_R^dag sigma_z q^m psi_L),
/// a point of split norm one, invariant under the simultaneous SU(1,1)
/// action.
pub fn chiral_hopf(psi_l: &CMatrix, psi_r: &CMatrix) -> Result<[f64; 4]> {
    let sz = pauli_z();
    for (name, s) in [("psi_L", psi_l), ("psi_R", psi_r)] {
        if s.shape() != (2, 1) {
            return Err(Error::Dimension {
                expected: "2x1".into(),
                got: format!("{}x{}", s.nrows(), s.ncols()),
            });
        }
        let n = (dagger(s) * &sz * s)[(0, 0)];
        let r = (n - cr(1.0)).norm();
        if r > 1e-10 {
            return Err(Error::constraint(
                format!("{name} normalization psi^dag sigma_z psi = 1"),
                r,
                1e-10,
            ));
        }
    }
    let mut y = [0.0; 4];
    for m in 1..=4 {
        let qb = sq_conj_basis_matrix(m, SqRep::Main)?;
        let q = sq_basis_matrix(m, SqRep::Main)?;
        let z = (dagger(psi_l) * &sz * &qb * psi_r)[(0, 0)]
            + (dagger(psi_r) * &sz * &q * psi_l)[(0, 0)];
        y[m - 1] = 0.5 * z.re;
    }
    Ok(y)
}

/// Parameterized chiral Hopf spinors:
/// psi_L = e^{-i phi sigma_z/2} (cosh(r/2) e^{-i chi/2}, -i sinh(r/2) e^{i chi/2})^t,
/// psi_R = -i e^{i phi sigma_z/2} (same column).
pub fn chiral_hopf_spinors(rho: f64, chi: f64, phi: f64) -> (CMatrix, CMatrix) {
    let col = |sign_phi: f64| -> CMatrix {
        let a = cr((rho / 2.0).cosh()) * phase(-chi / 2.0);
        let b = -I * cr((rho / 2.0).sinh()) * phase(chi / 2.0);
        CMatrix::from_column_slice(
            2,
            1,
            &[a * phase(-sign_phi * phi / 2.0), b * phase(sign_phi * phi / 2.0)],
        )
    };
    let psi_l = col(1.0);
    let psi_r = col(-1.0).map(|z| -I * z);
    (psi_l, psi_r)
}

/// SO(2,3) group element signifying H^{4,3}:
/// g = [e^{-i phi s34} e^{i chi s12} e^{-i rho s13}] e^{i theta s35}
///     [e^{-i sigma s13} e^{i omega s12} e^{-i psi s34}].
///
/// The squeeze core is e^{i theta sigma^35}; a sigma^34 core is block
/// diagonal and can never reproduce the off-diagonal squeeze blocks. With
/// the trailing slot as written, sigma = omega = psi = 0 gives the
/// Schwinger-type matrix and (sigma, omega, psi) = -(rho, chi, phi) the
/// Dirac-type one, exactly.
pub fn h43_element(
    rho: f64,
    chi: f64,
    phi: f64,
    theta: f64,
    sigma: f64,
    omega: f64,
    psi: f64,
) -> Result<CMatrix> {
    let fam = build_family();
    let e = |a: usize, b: usize, w: f64| -> Result<CMatrix> {
        mat_exp(&fam.sigma(a, b).map(|z| z * I * cr(w)))
    };
    let head = e(3, 4, -phi)? * e(1, 2, chi)? * e(1, 3, -rho)?;
    let core = e(3, 5, theta)?;
    let tail = e(1, 3, -sigma)? * e(1, 2, omega)? * e(3, 4, -psi)?;
    Ok(head * core * tail)
}

/// 4x4 squeeze matrix assembled from the non-compact Hopf spinor, its
/// charge conjugate and the gamma^4-reflected pair:
/// [psi_(L), psi^C_(L), psi_(R), psi^C_(R)]; unit determinant, and the
/// trace formula extracts the same H^{2,2} point as `hopf2_project`.
pub fn hopf_spinor_matrix(p: &H22Params) -> Result<CMatrix> {
    let fam = build_family();
    let spinor = |phi_sign: f64| -> Result<CMatrix> {
        let mut q = *p;
        q.phi = reduce_angle(phi_sign * p.phi, 2.0 * std::f64::consts::PI);
        let x = q.x();
        let psi_l = chirality_block_l(&x)?;
        Ok(CMatrix::from_column_slice(
            4,
            1,
            &[psi_l[(0, 0)], psi_l[(1, 0)], psi_l[(2, 0)], psi_l[(3, 0)]],
        ))
    };
    let psi = spinor(1.0)?;
    let psi_dash = spinor(-1.0)?;
    let conj_of = |v: &CMatrix| &fam.c_conj * v.map(|z| z.conj());
    let psi_r = &fam.gamma[3] * &psi_dash;
    let cols = [
        psi.clone(),
        conj_of(&psi),
        psi_r.clone(),
        conj_of(&psi_r),
    ];
    let mut m = zeros(4, 4);
    for (j, col) in cols.iter().enumerate() {
        for i in 0..4 {
            m[(i, j)] = col[(i, 0)];
        }
    }
    Ok(m)
}

/// Coordinates on H^{2,2} extracted from the Hopf-spinor matrix,
/// x^a = (1/4) tr(k^5 M^dag k^a M) = (1/4) tr(gamma^5 M^{-1} gamma^a M).
/// The upper-index weight is the self-consistent one: the lowered variant
/// fails already at the origin point.
pub fn hopf_spinor_coordinates(m: &CMatrix) -> [f64; 5] {
    let fam = build_family();
    let md = dagger(m);
    std::array::from_fn(|a| ((fam.k5() * &md * &fam.k_a[a] * m).trace() * cr(0.25)).re)
}

/// Diagonal right-translation gauge action of the chiral Hopf map:
/// psi_L -> [psi_L sigma_x psi_L^*] g e_1 and
/// psi_R -> -i (i [psi_R, -sigma_x psi_R^*]) (sigma_z g sigma_z) e_1.
/// This is the SU(1,1) motion along the fibre; it leaves y^m fixed, whereas
/// the plain left action g x g rotates y by the SO(2,1) adjoint.
pub fn chiral_gauge_action(
    psi_l: &CMatrix,
    psi_r: &CMatrix,
    g: &CMatrix,
) -> (CMatrix, CMatrix) {
    let sx = pauli_x();
    let sz = pauli_z();
    let h_l = {
        let c2 = &sx * psi_l.map(|z| z.conj());
        CMatrix::from_row_slice(
            2,
            2,
            &[psi_l[(0, 0)], c2[(0, 0)], psi_l[(1, 0)], c2[(1, 0)]],
        )
    };
    let h_r = {
        let c1 = psi_r.map(|z| I * z);
        let c2 = (&sx * psi_r.map(|z| z.conj())).map(|z| -I * z);
        CMatrix::from_row_slice(2, 2, &[c1[(0, 0)], c2[(0, 0)], c1[(1, 0)], c2[(1, 0)]])
    };
    let twisted = &sz * g * &sz;
    let e1 = CMatrix::from_column_slice(2, 1, &[cr(1.0), cr(0.0)]);
    let new_l = &h_l * g * &e1;
    let new_r = (&h_r * twisted * &e1).map(|z| -I * z);
    (new_l, new_r)
}

/// W of the k -> K_4 transform in the real-form construction.
fn w_matrix() -> CMatrix {
    let mut w = zeros(4, 4);
    w[(0, 0)] = cr(1.0);
    w[(1, 2)] = cr(1.0);
    w[(2, 1)] = cr(1.0);
    w[(3, 3)] = cr(1.0);
    w
}

/// Omega = (1/sqrt2) [[R, -iR], [R, iR]] with R the n=2 reversal matrix.
fn omega_matrix() -> CMatrix {
    let s = cr(1.0 / 2.0_f64.sqrt());
    CMatrix::from_row_slice(
        4,
        4,
        &[
            cr(0.0),
            s,
            cr(0.0),
            -I * s,
            s,
            cr(0.0),
            -I * s,
            cr(0.0),
            cr(0.0),
            s,
            cr(0.0),
            I * s,
            s,
            cr(0.0),
            I * s,
            cr(0.0),
        ],
    )
}

/// Sp(4;R) invariant matrix J = [[0, 1_2], [-1_2, 0]].
pub fn sp4_j_matrix() -> CMatrix {
    let z2 = zeros(2, 2);
    let i2 = identity(2);
    block4(&z2, &i2, &i2.map(|z| -z), &z2)
}

/// The ten so(2,3) generators transformed to the real sp(4;R) form,
/// t^{ab} = (W Omega)^dag sigma^{ab} (W Omega), in `PAIRS` order. All pure
/// imaginary; i t^{ab} are real matrices satisfying X^t J + J X = 0.
pub fn sp4_real_form() -> Vec<CMatrix> {
    let fam = build_family();
    let wo = w_matrix() * omega_matrix();
    let wod = dagger(&wo);
    PAIRS
        .iter()
        .map(|&(a, b)| &wod * fam.sigma(a, b) * &wo)
        .collect()
}

/// Report from randomized symplectic / Bogoliubov structure checks.
#[derive(Debug, Clone)]
pub struct SymplecticReport {
    pub n: usize,
    pub samples: usize,
    /// max ‖g'^dag K g' - K‖_F over boson samples.
    pub boson_metric_residual: f64,
    /// max residual of U^dag U - V^dag V = 1, U^t V - V^t U = 0.
    pub boson_block_residual: f64,
    /// max ‖g'^dag g' - 1‖_F over fermion samples.
    pub fermion_unitarity_residual: f64,
    /// max residual of U^dag U + V^dag V = 1, U^t V + V^t U = 0.
    pub fermion_block_residual: f64,
    /// Free real parameters of the generator, must equal n(2n+1).
    pub parameter_count: usize,
}

impl SymplecticReport {
    pub fn max_residual(&self) -> f64 {
        self.boson_metric_residual
            .max(self.boson_block_residual)
            .max(self.fermion_unitarity_residual)
            .max(self.fermion_block_residual)
    }
}

/// Randomized verification of the Sp(2n;R) block structure (boson
/// Bogoliubov conditions) and of the SO(2n) fermion analogue, for
/// n in {1, 2, 3}. All samples drawn from a seeded generator.
pub fn symplectic_checks(n: usize, samples: usize, seed: u64) -> Result<SymplecticReport> {
    use rand::RngExt;
    use rand::SeedableRng;
    if !(1..=3).contains(&n) {
        return Err(Error::IndexOutOfRange {
            what: format!("symplectic_checks supports n in 1..=3, got {n}"),
        });
    }
    if samples == 0 {
        return Err(Error::Domain("samples must be >= 1".into()));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let unif = |r: &mut rand_chacha::ChaCha8Rng| (r.random::<f64>() - 0.5) * 1.6;

    let big_k = {
        let mut m = zeros(2 * n, 2 * n);
        for i in 0..n {
            m[(i, i)] = cr(1.0);
            m[(n + i, n + i)] = cr(-1.0);
        }
        m
    };

    let mut report = SymplecticReport {
        n,
        samples,
        boson_metric_residual: 0.0,
        boson_block_residual: 0.0,
        fermion_unitarity_residual: 0.0,
        fermion_block_residual: 0.0,
        parameter_count: n * n + n * (n + 1),
    };

    for _ in 0..samples {
        // Hermitian H and symmetric S.
        let mut h = zeros(n, n);
        let mut s = zeros(n, n);
        for i in 0..n {
            h[(i, i)] = cr(unif(&mut rng));
            s[(i, i)] = c(unif(&mut rng), unif(&mut rng));
            for j in (i + 1)..n {
                let z = c(unif(&mut rng), unif(&mut rng));
                h[(i, j)] = z;
                h[(j, i)] = z.conj();
                let w = c(unif(&mut rng), unif(&mut rng));
                s[(i, j)] = w;
                s[(j, i)] = w;
            }
        }
        let x = assemble_generator(&h, &s, 1.0);
        let g = mat_exp(&x.map(|z| I * z))?;
        let metric = frob_dist(&(dagger(&g) * &big_k * &g), &big_k)?;
        report.boson_metric_residual = report.boson_metric_residual.max(metric);

        let (u, v) = split_blocks(&g, n);
        let cond1 = frob_dist(&(dagger(&u) * &u - dagger(&v) * &v), &identity(n))?;
        let cond2 = frob_norm(&(u.transpose() * &v - v.transpose() * &u));
        report.boson_block_residual = report.boson_block_residual.max(cond1.max(cond2));

        // Fermion case: Hermitian H, antisymmetric A.
        let mut a = zeros(n, n);
        for i in 0..n {
            for j in (i + 1)..n {
                let z = c(unif(&mut rng), unif(&mut rng));
                a[(i, j)] = z;
                a[(j, i)] = -z;
            }
        }
        let xf = assemble_generator(&h, &a, 1.0);
        let gf = mat_exp(&xf.map(|z| I * z))?;
        let unit = frob_dist(&(dagger(&gf) * &gf), &identity(2 * n))?;
        report.fermion_unitarity_residual = report.fermion_unitarity_residual.max(unit);

        let (u, v) = split_blocks(&gf, n);
        let cond1 = frob_dist(&(dagger(&u) * &u + dagger(&v) * &v), &identity(n))?;
        let cond2 = frob_norm(&(u.transpose() * &v + v.transpose() * &u));
        report.fermion_block_residual = report.fermion_block_residual.max(cond1.max(cond2));
    }
    Ok(report)
}

/// X' = [[H, S*], [-S, -H*]].
fn assemble_generator(h: &CMatrix, s: &CMatrix, _tag: f64) -> CMatrix {
    let n = h.nrows();
    let mut x = zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            x[(i, j)] = h[(i, j)];
            x[(i, n + j)] = s[(i, j)].conj();
            x[(n + i, j)] = -s[(i, j)];
            x[(n + i, n + j)] = -h[(i, j)].conj();
        }
    }
    x
}

/// g' = [[U, V*], [V, U*]]: return (U, V).
fn split_blocks(g: &CMatrix, n: usize) -> (CMatrix, CMatrix) {
    let mut u = zeros(n, n);
    let mut v = zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            u[(i, j)] = g[(i, j)];
            v[(i, j)] = g[(n + i, j)];
        }
    }
    (u, v)
}
