//! Squeeze and displacement unitaries as exponential products, and the
//! closed-form number-basis expansions of the squeezed states.
//!
//! Closed forms carried here (eta = tanh(rho/2) e^{i phi}):
//!
//! - single-mode squeezed vacuum / one-photon state
//!   |xi>_(0) = cosh(rho/2)^{-1/2} sum (-eta/2)^m sqrt((2m)!)/m! |2m>,
//!   |xi>_(1) = cosh(rho/2)^{-3/2} sum (-eta/2)^m sqrt((2m+1)!)/m! |2m+1>;
//! - two-mode squeezed number states
//!   |xi>_(n,0) = cosh(rho/2)^{-(n+1)} sum (-eta)^m sqrt((n+m)!/(n! m!)) |n+m, m>
//!   and the mirrored (0,n) family;
//! - the Sp(4;R) Schwinger-type squeezed vacuum and one-photon states,
//!   products/superpositions of the above with
//!   xi_{+/-} = (rho/2) e^{-i(chi +/- phi + pi/2)}.
//!
//! Truncation tails are estimated geometrically from the first excluded
//! amplitude and reported alongside each state.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matcore::{cr, CMatrix, CVector, I};
use crate::so23::{H22Params, METRIC4};
use crate::sp2r::Sp2SqueezeParams;
use crate::SqueezeKind;

use super::{expmv, ladder, FockOp, FockSpace, FockState};

/// Ordered product of operator exponentials, S = exp(c1 A1) exp(c2 A2) ...
/// (leftmost factor applied last).
#[derive(Debug, Clone)]
pub struct ExpProduct {
    pub space: FockSpace,
    factors: Vec<(FockOp, Complex64)>,
}

impl ExpProduct {
    pub fn new(space: FockSpace, factors: Vec<(FockOp, Complex64)>) -> Self {
        Self { space, factors }
    }

    pub fn apply(&self, s: &FockState) -> FockState {
        let mut amps = s.amps.clone();
        for (op, coeff) in self.factors.iter().rev() {
            amps = expmv(op, *coeff, &amps);
        }
        FockState {
            space: s.space,
            amps,
        }
    }

    /// Apply the adjoint product (reversed order, conjugated coefficients,
    /// adjoint generators).
    pub fn apply_adjoint(&self, s: &FockState) -> FockState {
        let mut amps = s.amps.clone();
        for (op, coeff) in self.factors.iter() {
            amps = expmv(&op.adjoint(), coeff.conj(), &amps);
        }
        FockState {
            space: s.space,
            amps,
        }
    }

    pub fn apply_to_basis(&self, occ: &[usize]) -> Result<FockState> {
        Ok(self.apply(&FockState::basis(self.space, occ)?))
    }

    /// Dense matrix of the product; guarded to modest dimensions.
    pub fn to_matrix(&self) -> Result<CMatrix> {
        if self.space.dim() > 1024 {
            return Err(Error::Resource(format!(
                "dense product at dimension {} (limit 1024); use apply()",
                self.space.dim()
            )));
        }
        let mut m = crate::matcore::identity(self.space.dim());
        for (op, coeff) in self.factors.iter() {
            let e = crate::matcore::mat_exp(&op.to_dense().map(|z| z * *coeff))?;
            m *= e;
        }
        Ok(m)
    }

    /// max |<S e_u, S e_v> - delta_{uv}| over the given basis indices.
    pub fn unitarity_residual(&self, basis: &[usize]) -> f64 {
        let images: Vec<CVector> = basis
            .iter()
            .map(|&j| {
                let mut v = CVector::zeros(self.space.dim());
                v[j] = cr(1.0);
                for (op, coeff) in self.factors.iter().rev() {
                    v = expmv(op, *coeff, &v);
                }
                v
            })
            .collect();
        let mut max = 0.0f64;
        for (iu, u) in images.iter().enumerate() {
            for (iv, v) in images.iter().enumerate() {
                let ip = u.dotc(v);
                let expected = if iu == iv { cr(1.0) } else { Complex64::ZERO };
                max = max.max((ip - expected).norm());
            }
        }
        max
    }
}

/// su(1,1) squeeze unitary. Dirac type: the single exponential
/// exp(-xi T^+ + xi^* T^-); Schwinger type: e^{i phi T^3} e^{i rho T^1}.
pub fn su11_squeeze(ops: &super::Su11Ops, rho: f64, phi: f64, kind: SqueezeKind) -> ExpProduct {
    match kind {
        SqueezeKind::Dirac => {
            let xi = cr(rho / 2.0) * (I * cr(phi)).exp();
            let gen = ops.t_minus().scale(xi.conj()).sub(&ops.t_plus().scale(xi));
            ExpProduct::new(ops.space, vec![(gen, cr(1.0))])
        }
        SqueezeKind::Schwinger => ExpProduct::new(
            ops.space,
            vec![(ops.t[2].clone(), I * cr(phi)), (ops.t[0].clone(), I * cr(rho))],
        ),
    }
}

/// Sp(4;R) squeeze unitary in Euler-product form. Schwinger type:
/// e^{-i phi X^34} e^{i chi X^12} e^{-i rho X^13} e^{i theta X^35};
/// Dirac type additionally conjugates the core with the inverse gauge
/// factors.
pub fn sp4_squeeze(ops: &super::Sp4Ops, p: &H22Params, kind: SqueezeKind) -> ExpProduct {
    let x34 = ops.x_ab(3, 4);
    let x12 = ops.x_ab(1, 2);
    let x13 = ops.x_ab(1, 3);
    let x35 = ops.x_ab(3, 5);
    let mut factors = vec![
        (x34.clone(), -I * cr(p.phi)),
        (x12.clone(), I * cr(p.chi)),
        (x13.clone(), -I * cr(p.rho)),
        (x35, I * cr(p.theta)),
    ];
    if kind == SqueezeKind::Dirac {
        factors.push((x13, I * cr(p.rho)));
        factors.push((x12, -I * cr(p.chi)));
        factors.push((x34, I * cr(p.phi)));
    }
    ExpProduct::new(ops.space, factors)
}

/// Dirac-type Sp(4;R) squeeze as the single exponential
/// exp(i theta y_m X^{m5}).
pub fn sp4_squeeze_direct(ops: &super::Sp4Ops, p: &H22Params) -> ExpProduct {
    let y = p.y();
    let mut gen = FockOp::zero(ops.space);
    for m in 1..=4 {
        gen = gen.add(&ops.x_ab(m, 5).scale(cr(y[m - 1] * METRIC4[m - 1])));
    }
    ExpProduct::new(ops.space, vec![(gen, I * cr(p.theta))])
}

/// Multimode displacement: one factor exp(alpha a^dag - alpha^* a) per mode.
pub fn displacement(space: FockSpace, alphas: &[Complex64]) -> Result<ExpProduct> {
    if alphas.len() != space.modes() {
        return Err(Error::Dimension {
            expected: format!("{} displacement parameters", space.modes()),
            got: format!("{}", alphas.len()),
        });
    }
    let mut factors = Vec::new();
    for (mode, &alpha) in alphas.iter().enumerate() {
        if alpha == Complex64::ZERO {
            continue;
        }
        let a = ladder(space, mode)?;
        let gen = a.adjoint().scale(alpha).sub(&a.scale(alpha.conj()));
        factors.push((gen, cr(1.0)));
    }
    Ok(ExpProduct::new(space, factors))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sp2StateFamily {
    OneMode,
    TwoMode,
}

/// Closed-form Dirac-type squeezed number state (amplitudes of S(xi)|n..>)
/// with its estimated truncation tail. Supported index patterns: one-mode
/// [0] and [1]; two-mode [n, 0] and [0, n]. Anything else has no closed
/// form — use the unitary route.
pub fn squeezed_number_state(
    space: FockSpace,
    p: &Sp2SqueezeParams,
    indices: &[usize],
    which: Sp2StateFamily,
) -> Result<(FockState, f64)> {
    let eta = crate::sp2r::poincare_coord(p);
    let cosh_half = (p.rho / 2.0).cosh();
    match which {
        Sp2StateFamily::OneMode => {
            if space.modes() != 1 {
                return Err(Error::Unsupported(format!(
                    "one-mode closed form on a {}-mode space",
                    space.modes()
                )));
            }
            let n = match indices {
                [n] if *n <= 1 => *n,
                _ => {
                    return Err(Error::Unsupported(format!(
                        "one-mode closed forms exist for |0> and |1> only, got {indices:?}"
                    )))
                }
            };
            let mut amps = CVector::zeros(space.dim());
            let norm = if n == 0 {
                1.0 / cosh_half.sqrt()
            } else {
                1.0 / cosh_half.powf(1.5)
            };
            let mut coef = cr(norm);
            let mut m = 0usize;
            loop {
                let level = 2 * m + n;
                if level > space.cutoff() {
                    break;
                }
                amps[space.index(&[level])?] = coef;
                // next amplitude: *(-eta/2) sqrt((2m+1+n)(2m+2+n))/(m+1)
                let k = (2 * m + 1 + n) as f64;
                coef *= -eta / cr(2.0) * cr((k * (k + 1.0)).sqrt() / (m as f64 + 1.0));
                m += 1;
            }
            // geometric tail from the first excluded amplitude
            let boundary = 2.0 * m as f64 + n as f64;
            let ratio = eta.norm_sqr() * (boundary + 1.0) / (boundary + 2.0) * {
                // one-photon ratio peaks at (2m+3)/(2m+2)
                if n == 1 {
                    (boundary + 3.0) / (boundary + 2.0)
                } else {
                    1.0
                }
            };
            let tail = if ratio < 1.0 {
                coef.norm_sqr() / (1.0 - ratio)
            } else {
                f64::INFINITY
            };
            Ok((FockState::from_amps(space, amps)?, tail))
        }
        Sp2StateFamily::TwoMode => {
            if space.modes() != 2 {
                return Err(Error::Unsupported(format!(
                    "two-mode closed form on a {}-mode space",
                    space.modes()
                )));
            }
            let (n, mirrored) = match indices {
                [n, 0] => (*n, false),
                [0, n] => (*n, true),
                _ => {
                    return Err(Error::Unsupported(format!(
                        "two-mode closed forms exist for (n,0) and (0,n) only, got {indices:?}"
                    )))
                }
            };
            if n > space.cutoff() {
                return Err(Error::IndexOutOfRange {
                    what: format!("photon number {n} exceeds cutoff {}", space.cutoff()),
                });
            }
            let mut amps = CVector::zeros(space.dim());
            let mut coef = cr(1.0 / cosh_half.powi(n as i32 + 1));
            let mut m = 0usize;
            loop {
                if n + m > space.cutoff() || m > space.cutoff() {
                    break;
                }
                let occ = if mirrored { [m, n + m] } else { [n + m, m] };
                amps[space.index(&occ)?] = coef;
                coef *= -eta * cr(((n + m + 1) as f64 / (m + 1) as f64).sqrt());
                m += 1;
            }
            let ratio = eta.norm_sqr() * (n + m + 1) as f64 / (m + 1) as f64;
            let tail = if ratio < 1.0 {
                coef.norm_sqr() / (1.0 - ratio)
            } else {
                f64::INFINITY
            };
            Ok((FockState::from_amps(space, amps)?, tail))
        }
    }
}

/// xi_{+/-} parameters of the Sp(4;R) Schwinger-type squeezed states:
/// (rho, phi_+) and (rho, phi_-) with phi_{+/-} = -(chi +/- phi + pi/2).
pub fn sp4_xi_pair(p: &H22Params) -> Result<(Sp2SqueezeParams, Sp2SqueezeParams)> {
    let plus = Sp2SqueezeParams::new(p.rho, -(p.chi + p.phi + std::f64::consts::FRAC_PI_2), 0.0)?;
    let minus = Sp2SqueezeParams::new(p.rho, -(p.chi - p.phi + std::f64::consts::FRAC_PI_2), 0.0)?;
    Ok((plus, minus))
}

/// Schwinger-type Sp(4;R) squeezed vacuum in closed form: the two-mode
/// realization gives e^{-i chi/2} |xi_+>_(0) (x) |xi_->_(0), the four-mode
/// one e^{-i chi} |xi_+>_(0,0) (x) |xi_->_(0,0). Independent of theta.
pub fn sp4_squeezed_vacuum(
    space: FockSpace,
    p: &H22Params,
    realization: super::Sp4Realization,
) -> Result<(FockState, f64)> {
    let (plus, minus) = sp4_xi_pair(p)?;
    match realization {
        super::Sp4Realization::Majorana => {
            if space.modes() != 2 {
                return Err(Error::Unsupported("two-mode vacuum needs 2 modes".into()));
            }
            let sub = FockSpace::new(1, space.cutoff())?;
            let (sa, ta) = squeezed_number_state(sub, &plus, &[0], Sp2StateFamily::OneMode)?;
            let (sb, tb) = squeezed_number_state(sub, &minus, &[0], Sp2StateFamily::OneMode)?;
            let state = sa.tensor(&sb)?.scale((-I * cr(p.chi / 2.0)).exp());
            Ok((state, ta + tb))
        }
        super::Sp4Realization::Dirac => {
            if space.modes() != 4 {
                return Err(Error::Unsupported("four-mode vacuum needs 4 modes".into()));
            }
            let sub = FockSpace::new(2, space.cutoff())?;
            let (sab, ta) = squeezed_number_state(sub, &plus, &[0, 0], Sp2StateFamily::TwoMode)?;
            let (scd, tb) = squeezed_number_state(sub, &minus, &[0, 0], Sp2StateFamily::TwoMode)?;
            let state = sab.tensor(&scd)?.scale((-I * cr(p.chi)).exp());
            Ok((state, ta + tb))
        }
    }
}

/// Which mode carries the initial photon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhotonSlot {
    ModeA,
    ModeB,
    ModeC,
    ModeD,
}

/// Schwinger-type Sp(4;R) squeezed one-photon states: cos(theta/2) /
/// sin(theta/2) superpositions of squeezed-vacuum (x) squeezed-one-photon
/// products with the phases fixed by the slot.
pub fn sp4_squeezed_onephoton(
    space: FockSpace,
    p: &H22Params,
    slot: PhotonSlot,
) -> Result<(FockState, f64)> {
    let (plus, minus) = sp4_xi_pair(p)?;
    let ct = cr((p.theta / 2.0).cos());
    let st = cr((p.theta / 2.0).sin());
    let eph = |a: f64| (I * cr(a)).exp();
    match space.modes() {
        2 => {
            let sub = FockSpace::new(1, space.cutoff())?;
            let (p0, t0) = squeezed_number_state(sub, &plus, &[0], Sp2StateFamily::OneMode)?;
            let (p1, t1) = squeezed_number_state(sub, &plus, &[1], Sp2StateFamily::OneMode)?;
            let (m0, t2) = squeezed_number_state(sub, &minus, &[0], Sp2StateFamily::OneMode)?;
            let (m1, t3) = squeezed_number_state(sub, &minus, &[1], Sp2StateFamily::OneMode)?;
            let tail = t0.max(t1) + t2.max(t3);
            let overall = eph(-p.chi);
            // The cos(theta/2) branch keeps the photon in its original
            // mode: the number-conserving core e^{i theta X^35} rotates
            // |0,1> into cos(theta/2)|0,1> - i sin(theta/2)|1,0>.
            let (first, second) = match slot {
                PhotonSlot::ModeA => (
                    p1.tensor(&m0)?.scale(overall * eph(-p.phi / 2.0) * ct),
                    p0.tensor(&m1)?.scale(-I * overall * eph(p.phi / 2.0) * st),
                ),
                PhotonSlot::ModeB => (
                    p0.tensor(&m1)?.scale(overall * eph(p.phi / 2.0) * ct),
                    p1.tensor(&m0)?.scale(-I * overall * eph(-p.phi / 2.0) * st),
                ),
                _ => {
                    return Err(Error::Unsupported(
                        "two-mode realization has photon slots A and B".into(),
                    ))
                }
            };
            let amps = first.amps + second.amps;
            Ok((FockState::from_amps(space, amps)?, tail))
        }
        4 => {
            let sub = FockSpace::new(2, space.cutoff())?;
            let vac_p = squeezed_number_state(sub, &plus, &[0, 0], Sp2StateFamily::TwoMode)?;
            let vac_m = squeezed_number_state(sub, &minus, &[0, 0], Sp2StateFamily::TwoMode)?;
            let overall = eph(-1.5 * p.chi);
            // (one-photon occupancy on the +/- pair, coefficient pair)
            let (occ, on_plus, phase_cos) = match slot {
                PhotonSlot::ModeA => ([1usize, 0usize], true, -p.phi / 2.0),
                PhotonSlot::ModeB => ([0, 1], true, -p.phi / 2.0),
                PhotonSlot::ModeC => ([1, 0], false, p.phi / 2.0),
                PhotonSlot::ModeD => ([0, 1], false, p.phi / 2.0),
            };
            let one_p = squeezed_number_state(sub, &plus, &occ, Sp2StateFamily::TwoMode)?;
            let one_m = squeezed_number_state(sub, &minus, &occ, Sp2StateFamily::TwoMode)?;
            let tail = vac_p.1.max(one_p.1) + vac_m.1.max(one_m.1);
            let c_cos = overall * eph(phase_cos) * ct;
            let c_sin = -I * overall * eph(-phase_cos) * st;
            // cos term keeps the photon on the slot's own pair, sin moves it
            // to the opposite pair.
            let (first, second) = if on_plus {
                (
                    one_p.0.tensor(&vac_m.0)?.scale(c_cos),
                    vac_p.0.tensor(&one_m.0)?.scale(c_sin),
                )
            } else {
                (
                    vac_p.0.tensor(&one_m.0)?.scale(c_cos),
                    one_p.0.tensor(&vac_m.0)?.scale(c_sin),
                )
            };
            let amps = first.amps + second.amps;
            Ok((FockState::from_amps(space, amps)?, tail))
        }
        m => Err(Error::Unsupported(format!(
            "squeezed one-photon states need 2 or 4 modes, space has {m}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::super::{su11_ops, Su11Realization};
    use super::*;
    use crate::matcore::frob_dist;

    #[test]
    fn zero_squeeze_is_number_state() {
        let space = FockSpace::new(1, 20).unwrap();
        let p = Sp2SqueezeParams::new(0.0, 0.9, 0.0).unwrap();
        for n in [0usize, 1] {
            let (s, tail) = squeezed_number_state(space, &p, &[n], Sp2StateFamily::OneMode).unwrap();
            assert!((s.amp(&[n]).unwrap() - cr(1.0)).norm() < 1e-15);
            assert!((s.norm() - 1.0).abs() < 1e-15);
            assert_eq!(tail, 0.0);
        }
    }

    #[test]
    fn one_mode_closed_form_vs_unitary() {
        let space = FockSpace::new(1, 40).unwrap();
        let p = Sp2SqueezeParams::new(1.0, 0.6, 0.0).unwrap();
        let ops = su11_ops(space, Su11Realization::OneMode).unwrap();
        let squeeze = su11_squeeze(&ops, p.rho, p.phi, SqueezeKind::Dirac);
        for n in [0usize, 1] {
            let (closed, tail) =
                squeezed_number_state(space, &p, &[n], Sp2StateFamily::OneMode).unwrap();
            let via_unitary = squeeze.apply_to_basis(&[n]).unwrap();
            let max_err = (&closed.amps - &via_unitary.amps)
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max);
            // wall reflection of the truncated generator sits at ~1.4e-8
            // (vacuum) and ~1.7e-7 (one photon) for rho = 1 at cutoff 40
            assert!(max_err < 5e-7, "n={n}: max amplitude error {max_err}");
            assert!(tail < 1e-11, "tail {tail}");
            assert!(closed.fidelity(&via_unitary).unwrap() > 1.0 - 1e-10);
        }
    }

    #[test]
    fn two_mode_closed_form_vs_unitary() {
        let space = FockSpace::new(2, 24).unwrap();
        let p = Sp2SqueezeParams::new(0.9, 1.3, 0.0).unwrap();
        let ops = su11_ops(space, Su11Realization::TwoMode).unwrap();
        let squeeze = su11_squeeze(&ops, p.rho, p.phi, SqueezeKind::Dirac);
        for occ in [[0usize, 0], [1, 0], [0, 2]] {
            let (closed, _) =
                squeezed_number_state(space, &p, &occ, Sp2StateFamily::TwoMode).unwrap();
            let via_unitary = squeeze.apply_to_basis(&occ).unwrap();
            let fid = closed.fidelity(&via_unitary).unwrap();
            assert!(fid > 1.0 - 1e-9, "occ {occ:?}: fidelity {fid}");
            // phases too: direct amplitude comparison
            let max_err = (&closed.amps - &via_unitary.amps)
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max);
            assert!(max_err < 1e-7, "occ {occ:?}: amplitude error {max_err}");
        }
        assert!(squeezed_number_state(space, &p, &[1, 1], Sp2StateFamily::TwoMode).is_err());
    }

    #[test]
    fn dirac_schwinger_number_state_phase() {
        // |xi>_(n) = e^{-i phi/4} e^{-i phi n/2} |xi>>_(n)
        let space = FockSpace::new(1, 30).unwrap();
        let (rho, phi) = (0.8, 1.1);
        let ops = su11_ops(space, Su11Realization::OneMode).unwrap();
        let dirac = su11_squeeze(&ops, rho, phi, SqueezeKind::Dirac);
        let schwinger = su11_squeeze(&ops, rho, phi, SqueezeKind::Schwinger);
        for n in [0usize, 1, 2] {
            let lhs = dirac.apply_to_basis(&[n]).unwrap();
            let phase = (-I * cr(phi / 4.0)).exp() * (-I * cr(phi * n as f64 / 2.0)).exp();
            let rhs = schwinger.apply_to_basis(&[n]).unwrap().scale(phase);
            let err = (&lhs.amps - &rhs.amps).norm();
            assert!(err < 1e-10, "n={n}: {err}");
        }
    }

    #[test]
    fn two_mode_dirac_schwinger_phase() {
        // |xi>_(na,nb) = e^{-i phi/2} e^{-i phi (na+nb)/2} |xi>>_(na,nb)
        let space = FockSpace::new(2, 16).unwrap();
        let (rho, phi) = (0.7, 0.9);
        let ops = su11_ops(space, Su11Realization::TwoMode).unwrap();
        let dirac = su11_squeeze(&ops, rho, phi, SqueezeKind::Dirac);
        let schwinger = su11_squeeze(&ops, rho, phi, SqueezeKind::Schwinger);
        for occ in [[0usize, 0], [1, 0], [1, 1]] {
            let lhs = dirac.apply_to_basis(&occ).unwrap();
            let n_tot = (occ[0] + occ[1]) as f64;
            let phase = (-I * cr(phi / 2.0)).exp() * (-I * cr(phi * n_tot / 2.0)).exp();
            let rhs = schwinger.apply_to_basis(&occ).unwrap().scale(phase);
            assert!((&lhs.amps - &rhs.amps).norm() < 1e-10);
        }
    }

    #[test]
    fn euler_form_of_dirac_squeeze() {
        // exp(-xi T^+ + xi^* T^-) = e^{i phi T^3} e^{i rho T^1} e^{-i phi T^3}
        let space = FockSpace::new(1, 24).unwrap();
        let ops = su11_ops(space, Su11Realization::OneMode).unwrap();
        let (rho, phi) = (0.9, 2.0);
        let direct = su11_squeeze(&ops, rho, phi, SqueezeKind::Dirac).to_matrix().unwrap();
        let euler = ExpProduct::new(
            space,
            vec![
                (ops.t[2].clone(), I * cr(phi)),
                (ops.t[0].clone(), I * cr(rho)),
                (ops.t[2].clone(), -I * cr(phi)),
            ],
        )
        .to_matrix()
        .unwrap();
        assert!(frob_dist(&direct, &euler).unwrap() < 1e-12);
    }

    #[test]
    fn sp4_two_mode_vacuum_properties() {
        let space = FockSpace::new(2, 24).unwrap();
        // theta-independence
        let p1 = H22Params::new(0.3, 0.9, 0.4, 1.1).unwrap();
        let p2 = H22Params::new(1.4, 0.9, 0.4, 1.1).unwrap();
        let (v1, _) = sp4_squeezed_vacuum(space, &p1, super::super::Sp4Realization::Majorana).unwrap();
        let (v2, _) = sp4_squeezed_vacuum(space, &p2, super::super::Sp4Realization::Majorana).unwrap();
        assert!((&v1.amps - &v2.amps).norm() < 1e-15);

        // rho = 0: vacuum with phase e^{-i chi/2}
        let p0 = H22Params::new(0.5, 0.0, 1.3, 0.2).unwrap();
        let (v0, tail) = sp4_squeezed_vacuum(space, &p0, super::super::Sp4Realization::Majorana).unwrap();
        assert!(tail.abs() < 1e-15);
        let expected = (-I * cr(p0.chi / 2.0)).exp();
        assert!((v0.amp(&[0, 0]).unwrap() - expected).norm() < 1e-14);
        assert!((v0.norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn sp4_two_mode_vacuum_vs_unitary() {
        let space = FockSpace::new(2, 24).unwrap();
        let p = H22Params::new(0.7, 0.9, 0.4, 1.1).unwrap();
        let ops = super::super::sp4_ops(space, super::super::Sp4Realization::Majorana).unwrap();
        let squeeze = sp4_squeeze(&ops, &p, SqueezeKind::Schwinger);
        let via_unitary = squeeze.apply(&FockState::vacuum(space));
        let (closed, _) = sp4_squeezed_vacuum(space, &p, super::super::Sp4Realization::Majorana).unwrap();
        let fid = closed.fidelity(&via_unitary).unwrap();
        assert!(fid > 1.0 - 1e-8, "fidelity {fid}");
        // the phase e^{-i chi/2} is pinned: the overlap must be real positive
        let overlap = closed.inner(&via_unitary).unwrap();
        assert!(overlap.arg().abs() < 1e-8, "relative phase {}", overlap.arg());
    }

    #[test]
    fn sp4_onephoton_north_pole_is_product() {
        let space = FockSpace::new(2, 20).unwrap();
        let p = H22Params::new(0.0, 0.8, 0.9, 0.5).unwrap();
        let (state, _) = sp4_squeezed_onephoton(space, &p, PhotonSlot::ModeA).unwrap();
        let (plus, minus) = sp4_xi_pair(&p).unwrap();
        let sub = FockSpace::new(1, space.cutoff()).unwrap();
        let (p1, _) = squeezed_number_state(sub, &plus, &[1], Sp2StateFamily::OneMode).unwrap();
        let (m0, _) = squeezed_number_state(sub, &minus, &[0], Sp2StateFamily::OneMode).unwrap();
        let expected = p1
            .tensor(&m0)
            .unwrap()
            .scale((-I * cr(p.chi)).exp() * (-I * cr(p.phi / 2.0)).exp());
        assert!((&state.amps - &expected.amps).norm() < 1e-14);
    }

    #[test]
    fn sp4_onephoton_vs_unitary() {
        let space = FockSpace::new(2, 24).unwrap();
        let p = H22Params::new(0.9, 0.8, 0.3, 1.2).unwrap();
        let ops = super::super::sp4_ops(space, super::super::Sp4Realization::Majorana).unwrap();
        let squeeze = sp4_squeeze(&ops, &p, SqueezeKind::Schwinger);
        for (slot, occ) in [(PhotonSlot::ModeA, [1usize, 0]), (PhotonSlot::ModeB, [0, 1])] {
            let (closed, _) = sp4_squeezed_onephoton(space, &p, slot).unwrap();
            let via_unitary = squeeze.apply_to_basis(&occ).unwrap();
            let fid = closed.fidelity(&via_unitary).unwrap();
            assert!(fid > 1.0 - 1e-7, "slot {slot:?}: fidelity {fid}");
            let overlap = closed.inner(&via_unitary).unwrap();
            assert!(overlap.arg().abs() < 1e-7, "slot {slot:?}: phase {}", overlap.arg());
        }
    }

    #[test]
    fn displacement_properties() {
        let space = FockSpace::new(1, 40).unwrap();
        // alpha = 0 -> identity
        let d0 = displacement(space, &[Complex64::ZERO]).unwrap();
        let s = d0.apply(&FockState::vacuum(space));
        assert!((s.amp(&[0]).unwrap() - cr(1.0)).norm() < 1e-15);

        // <alpha|a|alpha> = alpha
        let alpha = Complex64::new(0.5, 0.3);
        let d = displacement(space, &[alpha]).unwrap();
        let coh = d.apply(&FockState::vacuum(space));
        let a = ladder(space, 0).unwrap();
        let mean = a.expect(&coh);
        assert!((mean - alpha).norm() < 1e-9, "residual {}", (mean - alpha).norm());
        assert!(displacement(space, &[alpha, alpha]).is_err());
    }

    #[test]
    fn unitarity_on_interior() {
        let space = FockSpace::new(1, 30).unwrap();
        let ops = su11_ops(space, Su11Realization::OneMode).unwrap();
        let squeeze = su11_squeeze(&ops, 1.0, 0.7, SqueezeKind::Dirac);
        let sample: Vec<usize> = (0..6).collect();
        assert!(squeeze.unitarity_residual(&sample) < 1e-9);
    }
}
