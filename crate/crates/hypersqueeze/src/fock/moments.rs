//! Quadrature operators, covariance of the spinor operators under
//! squeezing, uncertainty relations, entanglement concurrence and
//! squeezed-coherent-state reports.
//!
//! The four operator coordinates satisfy [X^1, X^2] = [X^3, X^4] = i/2 on
//! the interior with all cross commutators zero; squeezed-vacuum variances
//! are compared against the closed forms of both squeeze types, whose
//! uncertainty products are bounded below by 1/16.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matcore::{cr, CMatrix, I};
use crate::so23::{sp4_dirac_squeeze, sp4_schwinger_squeeze, H22Params};
use crate::sp2r::Sp2SqueezeParams;
use crate::SqueezeKind;

use super::states::{displacement, sp4_squeeze, su11_squeeze, Sp2StateFamily};
use super::{
    ladder, sp4_ops, squeezed_number_state, FockOp, FockSpace, FockState, Sp4Ops, Sp4Realization,
};

/// Which set of four operator coordinates to use: the Sp(4;R) two-mode
/// realization (a, b) or the four-mode one (a..d, in +/- combinations).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureScheme {
    TwoMode,
    FourMode,
}

impl QuadratureScheme {
    pub fn realization(&self) -> Sp4Realization {
        match self {
            QuadratureScheme::TwoMode => Sp4Realization::Majorana,
            QuadratureScheme::FourMode => Sp4Realization::Dirac,
        }
    }

    pub fn modes(&self) -> usize {
        match self {
            QuadratureScheme::TwoMode => 2,
            QuadratureScheme::FourMode => 4,
        }
    }
}

impl std::fmt::Display for QuadratureScheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QuadratureScheme::TwoMode => write!(f, "two-mode"),
            QuadratureScheme::FourMode => write!(f, "four-mode"),
        }
    }
}

/// The four operator coordinates. Two-mode: X^1 = (a + a^dag)/2,
/// X^2 = -i(a - a^dag)/2 and likewise (X^3, X^4) from b. Four-mode:
/// X^1 = (a + a^dag + b + b^dag)/(2 sqrt2), etc.
pub fn quadratures(space: FockSpace, scheme: QuadratureScheme) -> Result<[FockOp; 4]> {
    if space.modes() != scheme.modes() {
        return Err(Error::Unsupported(format!(
            "{scheme} quadratures need {} modes, space has {}",
            scheme.modes(),
            space.modes()
        )));
    }
    let pos = |ops: &[&FockOp], w: f64| -> FockOp {
        let mut acc = FockOp::zero(space);
        for a in ops {
            acc = acc.add(&a.add(&a.adjoint()));
        }
        acc.scale(cr(w))
    };
    let mom = |ops: &[&FockOp], w: f64| -> FockOp {
        let mut acc = FockOp::zero(space);
        for a in ops {
            acc = acc.add(&a.sub(&a.adjoint()));
        }
        acc.scale(-I * cr(w))
    };
    match scheme {
        QuadratureScheme::TwoMode => {
            let a = ladder(space, 0)?;
            let b = ladder(space, 1)?;
            Ok([
                pos(&[&a], 0.5),
                mom(&[&a], 0.5),
                pos(&[&b], 0.5),
                mom(&[&b], 0.5),
            ])
        }
        QuadratureScheme::FourMode => {
            let a = ladder(space, 0)?;
            let b = ladder(space, 1)?;
            let c = ladder(space, 2)?;
            let d = ladder(space, 3)?;
            let w = 0.5 / 2.0f64.sqrt();
            Ok([
                pos(&[&a, &b], w),
                mom(&[&a, &b], w),
                pos(&[&c, &d], w),
                mom(&[&c, &d], w),
            ])
        }
    }
}

/// Closed-form squeezed-vacuum variances. Dirac type
/// (theta-dependent): <(dX^{1/2})^2> = (cos^2(t/2) + sin^2(t/2)(cosh 2r
/// +/- sinh 2r sin(chi+phi)))/4 and (chi-phi) for X^{3/4}; Schwinger type:
/// (cosh r +/- sinh r sin(chi +/- phi))/4, independent of theta.
pub fn closed_form_variances(p: &H22Params, kind: SqueezeKind) -> [f64; 4] {
    let sp = (p.chi + p.phi).sin();
    let sm = (p.chi - p.phi).sin();
    match kind {
        SqueezeKind::Dirac => {
            let c2 = (p.theta / 2.0).cos().powi(2);
            let s2 = (p.theta / 2.0).sin().powi(2);
            let ch = (2.0 * p.rho).cosh();
            let sh = (2.0 * p.rho).sinh();
            [
                0.25 * (c2 + s2 * (ch + sh * sp)),
                0.25 * (c2 + s2 * (ch - sh * sp)),
                0.25 * (c2 + s2 * (ch + sh * sm)),
                0.25 * (c2 + s2 * (ch - sh * sm)),
            ]
        }
        SqueezeKind::Schwinger => {
            let ch = p.rho.cosh();
            let sh = p.rho.sinh();
            [
                0.25 * (ch + sh * sp),
                0.25 * (ch - sh * sp),
                0.25 * (ch + sh * sm),
                0.25 * (ch - sh * sm),
            ]
        }
    }
}

/// Means, variances and uncertainty products of the four quadratures.
#[derive(Debug, Clone)]
pub struct MomentReport {
    pub scheme: QuadratureScheme,
    pub kind: SqueezeKind,
    pub params: H22Params,
    pub means: [f64; 4],
    pub variances: [f64; 4],
    /// (dX1)^2 (dX2)^2 and (dX3)^2 (dX4)^2.
    pub products: [f64; 2],
    pub closed_variances: [f64; 4],
    /// max |variance - closed form| over the four quadratures.
    pub max_residual: f64,
}

fn state_moments(state: &FockState, x: &[FockOp; 4]) -> ([f64; 4], [f64; 4]) {
    let mut means = [0.0; 4];
    let mut variances = [0.0; 4];
    for m in 0..4 {
        let mean = x[m].expect(state);
        let second = x[m].mul(&x[m]).expect(state);
        means[m] = mean.re;
        variances[m] = second.re - mean.re * mean.re;
    }
    (means, variances)
}

/// Squeeze the vacuum with the requested type and compare the numerically
/// computed quadrature moments against the closed forms.
pub fn squeezed_moments(
    space: FockSpace,
    p: &H22Params,
    kind: SqueezeKind,
    scheme: QuadratureScheme,
) -> Result<MomentReport> {
    let ops = sp4_ops(space, scheme.realization())?;
    let squeeze = sp4_squeeze(&ops, p, kind);
    let state = squeeze.apply(&FockState::vacuum(space));
    let x = quadratures(space, scheme)?;
    let (means, variances) = state_moments(&state, &x);
    let closed = closed_form_variances(p, kind);
    let max_residual = (0..4)
        .map(|m| (variances[m] - closed[m]).abs())
        .fold(0.0, f64::max);
    Ok(MomentReport {
        scheme,
        kind,
        params: *p,
        means,
        variances,
        products: [variances[0] * variances[1], variances[2] * variances[3]],
        closed_variances: closed,
        max_residual,
    })
}

/// Covariance check S^dag psi S = M psi: max residual of the matrix
/// elements <u| S^dag psi_alpha S - sum_beta M_{alpha beta} psi_beta |v>
/// over low-quanta u, v (total quanta <= 6).
pub fn covariance_check(
    ops: &Sp4Ops,
    p: &H22Params,
    kind: SqueezeKind,
) -> Result<f64> {
    let space = ops.space;
    let m = match kind {
        SqueezeKind::Dirac => sp4_dirac_squeeze(p).m,
        SqueezeKind::Schwinger => sp4_schwinger_squeeze(p).m,
    };
    let psi = spinor_components(space, ops.realization)?;
    let squeeze = sp4_squeeze(ops, p, kind);

    let low: Vec<usize> = (0..space.dim())
        .filter(|&j| space.occupation(j).iter().sum::<usize>() <= 6)
        .collect();
    // images S|v> for v in the low set
    let images: Vec<FockState> = low
        .iter()
        .map(|&j| {
            let mut v = FockState::vacuum(space);
            v.amps[0] = Complex64::ZERO;
            v.amps[j] = cr(1.0);
            squeeze.apply(&v)
        })
        .collect();

    let mut max = 0.0f64;
    for (alpha, psi_a) in psi.iter().enumerate() {
        // rhs operator: sum_beta M_{alpha beta} psi_beta
        let mut rhs = FockOp::zero(space);
        for (beta, psi_b) in psi.iter().enumerate() {
            let w = m[(alpha, beta)];
            if w != Complex64::ZERO {
                rhs = rhs.add(&psi_b.scale(w));
            }
        }
        for (iu, &u) in low.iter().enumerate() {
            for (iv, &v) in low.iter().enumerate() {
                // <u|S^dag psi_alpha S|v> = (S e_u)^dag psi_alpha (S e_v)
                let lhs = images[iu].amps.dotc(&psi_a.apply(&images[iv].amps));
                let rhs_el = rhs.entry(u, v);
                max = max.max((lhs - rhs_el).norm());
            }
        }
    }
    Ok(max)
}

/// Spinor operator components of the realization:
/// Majorana (a, a^dag, b, b^dag); Dirac (a, b^dag, c, d^dag).
fn spinor_components(space: FockSpace, realization: Sp4Realization) -> Result<Vec<FockOp>> {
    match realization {
        Sp4Realization::Majorana => {
            let a = ladder(space, 0)?;
            let b = ladder(space, 1)?;
            Ok(vec![a.clone(), a.adjoint(), b.clone(), b.adjoint()])
        }
        Sp4Realization::Dirac => {
            let a = ladder(space, 0)?;
            let b = ladder(space, 1)?;
            let c = ladder(space, 2)?;
            let d = ladder(space, 3)?;
            Ok(vec![a, b.adjoint(), c, d.adjoint()])
        }
    }
}

/// Report on a squeezed coherent state |alpha, beta, sq> = D(alpha,beta) S |0>.
#[derive(Debug, Clone)]
pub struct CoherentReport {
    pub means: [f64; 4],
    pub expected_means: [f64; 4],
    pub variances: [f64; 4],
    pub vacuum_variances: [f64; 4],
    /// max |mean - expected|.
    pub mean_residual: f64,
    /// max |variance - squeezed-vacuum variance|.
    pub variance_residual: f64,
    /// max residual of the transformed-operator eigenvalue relations.
    pub eigen_residual: f64,
}

/// Build the squeezed coherent state, verify that means come from the
/// displacement alone, variances from the squeeze alone, and that the
/// transformed annihilation relations psi'_1,3 |s> = phi'_1,3 |s> and
/// (psi'_2,4)^dag |s> = phi'^*_2,4 |s> hold.
pub fn squeezed_coherent_report(
    space: FockSpace,
    p: &H22Params,
    alpha: Complex64,
    beta: Complex64,
    kind: SqueezeKind,
    scheme: QuadratureScheme,
) -> Result<CoherentReport> {
    let ops = sp4_ops(space, scheme.realization())?;
    let squeeze = sp4_squeeze(&ops, p, kind);
    let alphas: Vec<Complex64> = match scheme {
        QuadratureScheme::TwoMode => vec![alpha, beta],
        QuadratureScheme::FourMode => {
            let s = cr(1.0 / 2.0f64.sqrt());
            vec![alpha * s, alpha * s, beta * s, beta * s]
        }
    };
    let disp = displacement(space, &alphas)?;
    let state = disp.apply(&squeeze.apply(&FockState::vacuum(space)));

    let x = quadratures(space, scheme)?;
    let (means, variances) = state_moments(&state, &x);
    let expected_means = [alpha.re, alpha.im, beta.re, beta.im];
    let vacuum_variances = squeezed_moments(space, p, kind, scheme)?.variances;

    let mean_residual = (0..4)
        .map(|m| (means[m] - expected_means[m]).abs())
        .fold(0.0, f64::max);
    let variance_residual = (0..4)
        .map(|m| (variances[m] - vacuum_variances[m]).abs())
        .fold(0.0, f64::max);

    // Eigenvalue relations with psi' = M^{-1} psi and phi' = M^{-1} phi.
    let m = match kind {
        SqueezeKind::Dirac => sp4_dirac_squeeze(p).m,
        SqueezeKind::Schwinger => sp4_schwinger_squeeze(p).m,
    };
    let m_inv = m
        .try_inverse()
        .ok_or_else(|| Error::SingularDecomposition("squeeze matrix".into()))?;
    let psi = spinor_components(space, scheme.realization())?;
    let phi: [Complex64; 4] = match scheme {
        QuadratureScheme::TwoMode => [alpha, alpha.conj(), beta, beta.conj()],
        QuadratureScheme::FourMode => {
            let s = cr(1.0 / 2.0f64.sqrt());
            [alpha * s, (alpha * s).conj(), beta * s, (beta * s).conj()]
        }
    };
    let norm = state.norm();
    let mut eigen_residual = 0.0f64;
    for alpha_idx in 0..4 {
        let mut op = FockOp::zero(space);
        let mut val = Complex64::ZERO;
        for beta_idx in 0..4 {
            let w = m_inv[(alpha_idx, beta_idx)];
            if w != Complex64::ZERO {
                op = op.add(&psi[beta_idx].scale(w));
            }
            val += w * phi[beta_idx];
        }
        // slots 1,3 are annihilation-like; 2,4 enter through the adjoint
        let (op_eff, val_eff) = if alpha_idx % 2 == 0 {
            (op, val)
        } else {
            (op.adjoint(), val.conj())
        };
        let residual_vec = op_eff.apply(&state.amps) - state.amps.map(|z| z * val_eff);
        eigen_residual = eigen_residual.max(residual_vec.norm() / norm);
    }

    Ok(CoherentReport {
        means,
        expected_means,
        variances,
        vacuum_variances,
        mean_residual,
        variance_residual,
        eigen_residual,
    })
}

/// Sp(2;R) Dirac/Schwinger squeezed-coherent phase relation on a one-mode
/// space: S(xi) D(alpha_D) |0> = e^{-i phi/4} S_schwinger(xi) D(alpha_S) |0>
/// with alpha_D = alpha_S e^{+i phi/2} (the sign follows from the squeezed
/// number-state phase relation). Returns the state-vector residual.
pub fn sp2_coherent_phase_residual(
    space: FockSpace,
    rho: f64,
    phi: f64,
    alpha_s: Complex64,
) -> Result<f64> {
    if space.modes() != 1 {
        return Err(Error::Unsupported("phase relation check is one-mode".into()));
    }
    let ops = super::su11_ops(space, super::Su11Realization::OneMode)?;
    let alpha_d = alpha_s * (I * cr(phi / 2.0)).exp();
    let lhs = su11_squeeze(&ops, rho, phi, SqueezeKind::Dirac)
        .apply(&displacement(space, &[alpha_d])?.apply(&FockState::vacuum(space)));
    let rhs = su11_squeeze(&ops, rho, phi, SqueezeKind::Schwinger)
        .apply(&displacement(space, &[alpha_s])?.apply(&FockState::vacuum(space)))
        .scale((-I * cr(phi / 4.0)).exp());
    Ok((&lhs.amps - &rhs.amps).norm())
}

/// c(theta) = |sin theta| = sqrt(1 - (x^5)^2): the concurrence of the
/// squeezed one-photon state as the radius of the hyperbolic latitude.
pub fn concurrence_theta(theta: f64) -> f64 {
    theta.sin().abs()
}

/// Two-qubit concurrence c = sqrt(2 (1 - tr((Q^dag Q)^2))) for an
/// amplitude matrix normalized to tr(Q^dag Q) = 1.
pub fn concurrence_q(q: &CMatrix) -> Result<f64> {
    if q.shape() != (2, 2) {
        return Err(Error::Dimension {
            expected: "2x2".into(),
            got: format!("{}x{}", q.nrows(), q.ncols()),
        });
    }
    let qq = q.adjoint() * q;
    let trace = qq.trace();
    let residual = (trace - cr(1.0)).norm();
    if residual > 1e-10 {
        return Err(Error::constraint("tr(Q^dag Q) = 1", residual, 1e-10));
    }
    let t2 = (&qq * &qq).trace().re;
    Ok((2.0 * (1.0 - t2)).max(0.0).sqrt())
}

/// Extract the two-qubit amplitude matrix of a two-mode state against the
/// squeezed basis {|xi>_(1), |xi>_(0)} per mode, with xi = -i (rho/2)
/// e^{-i chi} (the phi = 0 latitude). Q is indexed with the one-photon
/// state first.
pub fn extract_entanglement_q(state: &FockState, rho: f64, chi: f64) -> Result<CMatrix> {
    if state.space.modes() != 2 {
        return Err(Error::Unsupported("Q extraction needs a two-mode state".into()));
    }
    let sub = FockSpace::new(1, state.space.cutoff())?;
    let params = Sp2SqueezeParams::new(rho, -chi - std::f64::consts::FRAC_PI_2, 0.0)?;
    let basis1 = squeezed_number_state(sub, &params, &[1], Sp2StateFamily::OneMode)?.0;
    let basis0 = squeezed_number_state(sub, &params, &[0], Sp2StateFamily::OneMode)?.0;
    let b = [basis1, basis0];
    let mut q = CMatrix::zeros(2, 2);
    for r in 0..2 {
        for c_idx in 0..2 {
            let pair = b[r].tensor(&b[c_idx])?;
            q[(r, c_idx)] = pair.inner(state)?;
        }
    }
    Ok(q)
}
