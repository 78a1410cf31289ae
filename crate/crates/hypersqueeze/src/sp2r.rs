//! SU(1,1) ~ Sp(2;R) matrix layer.
//!
//! Carries the non-Hermitian generators tau^i = {i sigma_x, i sigma_y,
//! sigma_z} (stored unhalved; group elements use exp(i w tau/2)), their
//! pseudo-Hermitian partners kappa^i = sigma_z tau^i, the symmetric m^i,
//! the Euler-parameterized group element g(phi, rho, chi), the Dirac- and
//! Schwinger-type squeeze matrices, the first non-compact Hopf map onto the
//! Bloch two-hyperboloid H^{2,0}, Hopf spinors, Poincaré disc coordinates
//! and the Gauss (UDL) decomposition parameters.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matcore::{c, cr, dagger, frob_dist, mat2, mat_exp, pauli_x, pauli_y, pauli_z, CMatrix, I};
use crate::{reduce_angle, SqueezeKind};

/// su(1,1) structure matrices. Metric g = diag(-1,-1,+1), eps^{123} = 1.
#[derive(Debug, Clone)]
pub struct Su11Generators {
    /// tau^1 = i sigma_x, tau^2 = i sigma_y, tau^3 = sigma_z.
    pub tau: [CMatrix; 3],
    /// kappa^i = sigma_z tau^i = {-sigma_y, sigma_x, 1}; Hermitian.
    pub kappa: [CMatrix; 3],
    /// m^i = sigma_x kappa^i = {-i sigma_z, 1, sigma_x}; symmetric.
    pub m_sym: [CMatrix; 3],
    /// Ladder t^+ = [[0,1],[0,0]], t^- = [[0,0],[-1,0]].
    pub t_plus: CMatrix,
    pub t_minus: CMatrix,
    /// Cartan t^3 = sigma_z / 2 of the faithful representation.
    pub t3: CMatrix,
}

pub const METRIC3: [f64; 3] = [-1.0, -1.0, 1.0];

pub fn epsilon3(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

impl Su11Generators {
    pub fn build() -> Self {
        let tau = [
            pauli_x().map(|z| I * z),
            pauli_y().map(|z| I * z),
            pauli_z(),
        ];
        let sz = pauli_z();
        let sx = pauli_x();
        let kappa = [&sz * &tau[0], &sz * &tau[1], &sz * &tau[2]];
        let m_sym = [&sx * &kappa[0], &sx * &kappa[1], &sx * &kappa[2]];
        let t_plus = mat2([cr(0.0), cr(1.0), cr(0.0), cr(0.0)]);
        let t_minus = mat2([cr(0.0), cr(0.0), cr(-1.0), cr(0.0)]);
        let t3 = pauli_z().map(|z| z * cr(0.5));
        Self {
            tau,
            kappa,
            m_sym,
            t_plus,
            t_minus,
            t3,
        }
    }

    /// tau with lowered index, tau_i = g_{ij} tau^j.
    pub fn tau_lower(&self, i: usize) -> CMatrix {
        self.tau[i].map(|z| z * cr(METRIC3[i]))
    }
}

/// Squeeze parameters (rho, phi, chi): magnitude, phase, U(1) gauge angle.
/// chi runs over [0, 4pi) respecting the metaplectic double cover.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sp2SqueezeParams {
    pub rho: f64,
    pub phi: f64,
    pub chi: f64,
}

impl Sp2SqueezeParams {
    pub fn new(rho: f64, phi: f64, chi: f64) -> Result<Self> {
        if !rho.is_finite() || rho < 0.0 {
            return Err(Error::Domain(format!("rho must be finite and >= 0, got {rho}")));
        }
        Ok(Self {
            rho,
            phi: reduce_angle(phi, 2.0 * std::f64::consts::PI),
            chi: reduce_angle(chi, 4.0 * std::f64::consts::PI),
        })
    }

    /// xi = (rho/2) e^{i phi}.
    pub fn xi(&self) -> Complex64 {
        cr(self.rho / 2.0) * (I * cr(self.phi)).exp()
    }
}

/// Point on the upper leaf of the Bloch two-hyperboloid
/// -x1^2 - x2^2 + x3^2 = 1, x3 >= 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochH20Point {
    pub x: [f64; 3],
}

pub const H20_TOL: f64 = 1e-10;

impl BlochH20Point {
    pub fn new(x: [f64; 3]) -> Result<Self> {
        let residual = (-x[0] * x[0] - x[1] * x[1] + x[2] * x[2] - 1.0).abs();
        if residual > H20_TOL {
            return Err(Error::constraint("H^{2,0} condition", residual, H20_TOL));
        }
        if x[2] < 0.0 {
            return Err(Error::Domain(format!(
                "lower leaf (x3 = {}) is outside the chart",
                x[2]
            )));
        }
        Ok(Self { x })
    }
}

/// Euler-type SU(1,1) element
/// g(phi, rho, chi) = e^{i phi tau^z/2} e^{-i rho tau^x/2} e^{i chi tau^z/2}.
/// rho may be any real; the squeeze matrices use negative rho internally.
pub fn su11_element(phi: f64, rho: f64, chi: f64) -> CMatrix {
    let ch = (rho / 2.0).cosh();
    let sh = (rho / 2.0).sinh();
    let ep = |a: f64| (I * cr(a)).exp();
    mat2([
        cr(ch) * ep(0.5 * (phi + chi)),
        cr(sh) * ep(0.5 * (phi - chi)),
        cr(sh) * ep(-0.5 * (phi - chi)),
        cr(ch) * ep(-0.5 * (phi + chi)),
    ])
}

/// Dirac-type squeeze matrix
/// M(rho, phi) = [[cosh r/2, -sinh r/2 e^{i phi}], [-sinh r/2 e^{-i phi}, cosh r/2]]
/// = g(phi, -rho, -phi); a hyperbolic rotation by rho about
/// n = (-cos phi, sin phi).
pub fn sp2_dirac_squeeze(p: &Sp2SqueezeParams) -> CMatrix {
    let ch = cr((p.rho / 2.0).cosh());
    let sh = cr((p.rho / 2.0).sinh());
    let ep = (I * cr(p.phi)).exp();
    mat2([ch, -sh * ep, -sh * ep.conj(), ch])
}

/// Schwinger-type squeeze matrix M(rho, phi) = g(phi, -rho, 0); pseudo-unitary
/// but, unlike the Dirac type, its inverse is not the squeeze at -rho.
pub fn sp2_schwinger_squeeze(p: &Sp2SqueezeParams) -> CMatrix {
    su11_element(p.phi, -p.rho, 0.0)
}

/// Exponential route for the Dirac squeeze:
/// M = exp(-i (rho/2)(n1 tau^1 + n2 tau^2)), n = (-cos phi, sin phi).
pub fn sp2_dirac_squeeze_exp(p: &Sp2SqueezeParams) -> Result<CMatrix> {
    let g = Su11Generators::build();
    let n1 = -p.phi.cos();
    let n2 = p.phi.sin();
    let a = (g.tau[0].map(|z| z * cr(n1)) + g.tau[1].map(|z| z * cr(n2)))
        .map(|z| z * (-I) * cr(p.rho / 2.0));
    mat_exp(&a)
}

pub const SU11_INPUT_TOL: f64 = 1e-10;

/// Residual of the SU(1,1) conditions g^dag sigma_z g = sigma_z, det g = 1.
pub fn su11_residual(g: &CMatrix) -> f64 {
    let sz = pauli_z();
    let metric = frob_dist(&(dagger(g) * &sz * g), &sz).unwrap_or(f64::INFINITY);
    let det = (crate::matcore::det(g) - cr(1.0)).norm();
    metric.max(det)
}

/// First non-compact Hopf map: x^i = (1/2) tr(g^dag kappa^i g) in H^{2,0}.
/// Rejects inputs that are not SU(1,1) to 1e-10.
pub fn hopf1_project(g: &CMatrix) -> Result<BlochH20Point> {
    if g.shape() != (2, 2) {
        return Err(Error::Dimension {
            expected: "2x2".into(),
            got: format!("{}x{}", g.nrows(), g.ncols()),
        });
    }
    let residual = su11_residual(g);
    if residual > SU11_INPUT_TOL {
        return Err(Error::constraint("SU(1,1) membership", residual, SU11_INPUT_TOL));
    }
    let gens = Su11Generators::build();
    let gd = dagger(g);
    let mut x = [0.0; 3];
    for i in 0..3 {
        let z = (&gd * &gens.kappa[i] * g).trace() * cr(0.5);
        x[i] = z.re;
    }
    BlochH20Point::new(x)
}

/// Non-compact Hopf spinors on the upper leaf:
/// psi_L = (x3+1, x2-i x1)^t / sqrt(2(x3+1)), psi_R = sigma_x psi_L^*.
/// The Dirac squeeze matrix with this projection is [psi_L psi_R].
pub fn hopf1_spinors(x: &BlochH20Point) -> Result<(CMatrix, CMatrix)> {
    let x3p1 = x.x[2] + 1.0;
    if x3p1 <= H20_TOL {
        return Err(Error::Domain(
            "x3 <= -1: point is off the upper-leaf chart".into(),
        ));
    }
    let norm = (2.0 * x3p1).sqrt();
    let psi_l = CMatrix::from_column_slice(
        2,
        1,
        &[cr(x3p1 / norm), c(x.x[1] / norm, -x.x[0] / norm)],
    );
    let psi_r = CMatrix::from_column_slice(
        2,
        1,
        &[c(x.x[1] / norm, x.x[0] / norm), cr(x3p1 / norm)],
    );
    Ok((psi_l, psi_r))
}

/// Stereographic coordinate on the Poincaré disc,
/// eta = tanh(rho/2) e^{i phi}; |eta| < 1.
pub fn poincare_coord(p: &Sp2SqueezeParams) -> Complex64 {
    cr((p.rho / 2.0).tanh()) * (I * cr(p.phi)).exp()
}

/// The same coordinate from the hyperboloid point, (x2 + i x1)/(1 + x3).
pub fn poincare_from_point(x: &BlochH20Point) -> Complex64 {
    c(x.x[1], x.x[0]) / cr(1.0 + x.x[2])
}

/// UDL coefficients (alpha on T^+, beta on T^3, gamma on T^-) of the Gauss
/// decomposition e^{alpha T^+} e^{beta T^3} e^{gamma T^-} of the squeeze
/// operator, verified against the faithful representation.
pub fn gauss_params_sp2(
    p: &Sp2SqueezeParams,
    kind: SqueezeKind,
) -> (Complex64, Complex64, Complex64) {
    let eta = poincare_coord(p);
    let log_cosh = -2.0 * (p.rho / 2.0).cosh().ln();
    match kind {
        SqueezeKind::Dirac => (-eta, cr(log_cosh), eta.conj()),
        SqueezeKind::Schwinger => (-eta, c(log_cosh, p.phi), cr(eta.norm())),
    }
}

/// Faithful representation of e^{alpha T^+} e^{beta T^3} e^{gamma T^-}:
/// [[e^{b/2} - a g e^{-b/2}, a e^{-b/2}], [-g e^{-b/2}, e^{-b/2}]].
pub fn faithful_rep_product(alpha: Complex64, beta: Complex64, gamma: Complex64) -> CMatrix {
    let ep = (beta * cr(0.5)).exp();
    let em = (-beta * cr(0.5)).exp();
    mat2([ep - alpha * gamma * em, alpha * em, -gamma * em, em])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::{anticommutator, commutator, identity, zeros};
    use rand::RngExt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn rngs() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(crate::DEFAULT_SEED)
    }

    fn uniform(rng: &mut ChaCha8Rng, a: f64, b: f64) -> f64 {
        a + (b - a) * rng.random::<f64>()
    }

    #[test]
    fn tau_algebra_exact() {
        let g = Su11Generators::build();
        for i in 0..3 {
            for j in 0..3 {
                // [tau^i, tau^j] = -2i eps^{ijk} tau_k
                let mut rhs = zeros(2, 2);
                for k in 0..3 {
                    let e = epsilon3(i, j, k);
                    if e != 0.0 {
                        rhs += g.tau_lower(k).map(|z| z * cr(-2.0 * e) * I);
                    }
                }
                assert_eq!(frob_dist(&commutator(&g.tau[i], &g.tau[j]), &rhs).unwrap(), 0.0);
                // {tau^i, tau^j} = 2 g^{ij}; the sign is fixed by
                // tau^i = i q^i and {q^i, q^j} = -2 g^{ij}.
                let anti = anticommutator(&g.tau[i], &g.tau[j]);
                let expected = if i == j {
                    identity(2).map(|z| z * cr(2.0 * METRIC3[i]))
                } else {
                    zeros(2, 2)
                };
                assert_eq!(frob_dist(&anti, &expected).unwrap(), 0.0);
            }
        }
    }

    #[test]
    fn tau_completeness_exact() {
        // (tau^i)_{ab} (tau_i)_{cd} = 2 d_{ad} d_{bc} - d_{ab} d_{cd}
        let g = Su11Generators::build();
        for a in 0..2 {
            for b in 0..2 {
                for cc in 0..2 {
                    for d in 0..2 {
                        let mut lhs = Complex64::ZERO;
                        for i in 0..3 {
                            lhs += g.tau[i][(a, b)] * g.tau_lower(i)[(cc, d)];
                        }
                        let rhs = cr(2.0 * ((a == d && b == cc) as i32 as f64)
                            - ((a == b && cc == d) as i32 as f64));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn kappa_relations_exact() {
        let g = Su11Generators::build();
        let sz = pauli_z();
        for i in 0..3 {
            // Hermitian
            assert_eq!(frob_dist(&dagger(&g.kappa[i]), &g.kappa[i]).unwrap(), 0.0);
            for j in 0..3 {
                // kappa^{[i} sigma_z kappa^{j]} = -2i eps^{ijk} kappa_k
                let lhs = &g.kappa[i] * &sz * &g.kappa[j] - &g.kappa[j] * &sz * &g.kappa[i];
                let mut rhs = zeros(2, 2);
                for k in 0..3 {
                    let e = epsilon3(i, j, k);
                    if e != 0.0 {
                        rhs += g.kappa[k].map(|z| z * cr(-2.0 * e * METRIC3[k]) * I);
                    }
                }
                assert_eq!(frob_dist(&lhs, &rhs).unwrap(), 0.0);
            }
        }
        // completeness with sigma_z weights
        for a in 0..2 {
            for b in 0..2 {
                for cc in 0..2 {
                    for d in 0..2 {
                        let mut lhs = Complex64::ZERO;
                        for i in 0..3 {
                            lhs += g.kappa[i][(a, b)] * g.kappa[i][(cc, d)] * cr(METRIC3[i]);
                        }
                        let rhs = cr(2.0) * sz[(a, d)] * sz[(b, cc)] - sz[(a, b)] * sz[(cc, d)];
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn m_relations_exact() {
        let g = Su11Generators::build();
        let sy = pauli_y();
        let eps = pauli_y().map(|z| I * z); // epsilon_{ab} = (i sigma_y)_{ab}
        for i in 0..3 {
            assert_eq!(frob_dist(&g.m_sym[i].transpose(), &g.m_sym[i]).unwrap(), 0.0);
            for j in 0..3 {
                // i m^{[i} sigma_y m^{j]} = -2i eps^{ijk} m_k
                let lhs = (&g.m_sym[i] * &sy * &g.m_sym[j] - &g.m_sym[j] * &sy * &g.m_sym[i])
                    .map(|z| I * z);
                let mut rhs = zeros(2, 2);
                for k in 0..3 {
                    let e = epsilon3(i, j, k);
                    if e != 0.0 {
                        rhs += g.m_sym[k].map(|z| z * cr(-2.0 * e * METRIC3[k]) * I);
                    }
                }
                assert_eq!(frob_dist(&lhs, &rhs).unwrap(), 0.0);
            }
        }
        // (m^i)_{ab}(m_i)_{cd} = -2 eps_{ad} eps_{bc} - eps_{ab} eps_{cd}
        for a in 0..2 {
            for b in 0..2 {
                for cc in 0..2 {
                    for d in 0..2 {
                        let mut lhs = Complex64::ZERO;
                        for i in 0..3 {
                            lhs += g.m_sym[i][(a, b)] * g.m_sym[i][(cc, d)] * cr(METRIC3[i]);
                        }
                        let rhs = cr(-2.0) * eps[(a, d)] * eps[(b, cc)] - eps[(a, b)] * eps[(cc, d)];
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn charge_conjugation_exact() {
        let g = Su11Generators::build();
        let sx = pauli_x();
        for i in 0..3 {
            let lhs = g.tau[i].map(|z| -z.conj());
            let rhs = &sx * &g.tau[i] * &sx;
            assert_eq!(frob_dist(&lhs, &rhs).unwrap(), 0.0);
        }
    }

    #[test]
    fn euler_element_basics() {
        assert_eq!(frob_dist(&su11_element(0.0, 0.0, 0.0), &identity(2)).unwrap(), 0.0);
        let mut rng = rngs();
        for _ in 0..100 {
            let (phi, rho, chi) = (
                uniform(&mut rng, 0.0, 2.0 * PI),
                uniform(&mut rng, 0.0, 2.5),
                uniform(&mut rng, 0.0, 4.0 * PI),
            );
            let g = su11_element(phi, rho, chi);
            assert!(su11_residual(&g) < 1e-13);
        }
    }

    #[test]
    fn euler_element_matches_exponentials() {
        let gens = Su11Generators::build();
        let (phi, rho, chi) = (1.1, 0.9, 2.3);
        let g = su11_element(phi, rho, chi);
        let e1 = mat_exp(&gens.tau[2].map(|z| z * I * cr(phi / 2.0))).unwrap();
        let e2 = mat_exp(&gens.tau[0].map(|z| z * (-I) * cr(rho / 2.0))).unwrap();
        let e3 = mat_exp(&gens.tau[2].map(|z| z * I * cr(chi / 2.0))).unwrap();
        assert!(frob_dist(&g, &(e1 * e2 * e3)).unwrap() < 1e-13);
    }

    #[test]
    fn dirac_squeeze_identities() {
        let p0 = Sp2SqueezeParams::new(0.0, 1.7, 0.0).unwrap();
        assert!(frob_dist(&sp2_dirac_squeeze(&p0), &identity(2)).unwrap() < 1e-15);

        let p = Sp2SqueezeParams::new(1.3, 2.1, 0.0).unwrap();
        let m = sp2_dirac_squeeze(&p);
        // M = g(phi, -rho, -phi)
        assert!(frob_dist(&m, &su11_element(p.phi, -p.rho, -p.phi)).unwrap() < 1e-14);
        // exponential route
        assert!(frob_dist(&m, &sp2_dirac_squeeze_exp(&p).unwrap()).unwrap() < 1e-12);
        // M^{-1} = sigma_z M^dag sigma_z = M(-rho, phi)
        let sz = pauli_z();
        let minv = m.clone().try_inverse().unwrap();
        assert!(frob_dist(&minv, &(&sz * dagger(&m) * &sz)).unwrap() < 1e-13);
        let mneg = mat2([
            cr((p.rho / 2.0).cosh()),
            cr((p.rho / 2.0).sinh()) * (I * cr(p.phi)).exp(),
            cr((p.rho / 2.0).sinh()) * (-I * cr(p.phi)).exp(),
            cr((p.rho / 2.0).cosh()),
        ]);
        assert!(frob_dist(&minv, &mneg).unwrap() < 1e-13);
    }

    #[test]
    fn schwinger_squeeze_identities() {
        let p0 = Sp2SqueezeParams::new(0.0, 0.0, 0.0).unwrap();
        assert!(frob_dist(&sp2_schwinger_squeeze(&p0), &identity(2)).unwrap() < 1e-15);

        let p = Sp2SqueezeParams::new(0.7, 1.0, 0.0).unwrap();
        let m = sp2_schwinger_squeeze(&p);
        let sz = pauli_z();
        // pseudo-unitarity: sigma_z M^dag sigma_z M = 1
        let prod = &sz * dagger(&m) * &sz * &m;
        assert!(frob_dist(&prod, &identity(2)).unwrap() < 1e-13);
        // but M^{-1} != M(-rho, phi) generically
        let mneg = sp2_schwinger_squeeze(&Sp2SqueezeParams {
            rho: -p.rho,
            ..p
        });
        let minv = m.clone().try_inverse().unwrap();
        assert!(frob_dist(&minv, &mneg).unwrap() > 1e-3);
    }

    #[test]
    fn dirac_is_schwinger_times_u1_gauge() {
        // M(rho,phi) = g(phi,-rho,-phi) = g(phi,-rho,0) e^{-i phi tau^3/2}
        let gens = Su11Generators::build();
        let p = Sp2SqueezeParams::new(1.1, 0.4, 0.0).unwrap();
        let gauge = mat_exp(&gens.tau[2].map(|z| z * (-I) * cr(p.phi / 2.0))).unwrap();
        let lhs = sp2_schwinger_squeeze(&p) * gauge;
        assert!(frob_dist(&lhs, &sp2_dirac_squeeze(&p)).unwrap() < 1e-13);
    }

    #[test]
    fn hopf1_identity_point() {
        let x = hopf1_project(&identity(2)).unwrap();
        assert!((x.x[0]).abs() < 1e-15 && (x.x[1]).abs() < 1e-15 && (x.x[2] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hopf1_euler_closed_form() {
        let mut rng = rngs();
        for _ in 0..50 {
            let (phi, rho, chi) = (
                uniform(&mut rng, 0.0, 2.0 * PI),
                uniform(&mut rng, 0.0, 2.0),
                uniform(&mut rng, 0.0, 4.0 * PI),
            );
            let g = su11_element(phi, rho, chi);
            let x = hopf1_project(&g).unwrap();
            assert!((x.x[0] - rho.sinh() * phi.sin()).abs() < 1e-12);
            assert!((x.x[1] - rho.sinh() * phi.cos()).abs() < 1e-12);
            assert!((x.x[2] - rho.cosh()).abs() < 1e-12);
        }
    }

    #[test]
    fn hopf1_gauge_invariance() {
        let mut rng = rngs();
        let g = su11_element(0.8, 1.4, 0.3);
        let gens = Su11Generators::build();
        let x0 = hopf1_project(&g).unwrap();
        for _ in 0..20 {
            let chi = uniform(&mut rng, 0.0, 4.0 * PI);
            let u1 = mat_exp(&gens.tau[2].map(|z| z * I * cr(chi / 2.0))).unwrap();
            let x = hopf1_project(&(&g * u1)).unwrap();
            for k in 0..3 {
                assert!((x.x[k] - x0.x[k]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn hopf1_rejects_non_su11() {
        let bad = mat2([cr(2.0), cr(0.0), cr(0.0), cr(0.5)]);
        assert!(matches!(
            hopf1_project(&bad),
            Err(Error::ConstraintViolation { .. })
        ));
    }

    #[test]
    fn spinors_north_pole() {
        let x = BlochH20Point::new([0.0, 0.0, 1.0]).unwrap();
        let (l, r) = hopf1_spinors(&x).unwrap();
        assert!((l[(0, 0)] - cr(1.0)).norm() < 1e-15 && l[(1, 0)].norm() < 1e-15);
        assert!((r[(1, 0)] - cr(1.0)).norm() < 1e-15 && r[(0, 0)].norm() < 1e-15);
    }

    #[test]
    fn spinors_reproduce_point() {
        let mut rng = rngs();
        let gens = Su11Generators::build();
        for _ in 0..50 {
            let g = su11_element(
                uniform(&mut rng, 0.0, 2.0 * PI),
                uniform(&mut rng, 0.0, 2.0),
                uniform(&mut rng, 0.0, 4.0 * PI),
            );
            let x = hopf1_project(&g).unwrap();
            let (l, r) = hopf1_spinors(&x).unwrap();
            assert!(frob_dist(&r, &(pauli_x() * l.map(|z| z.conj()))).unwrap() < 1e-14);
            for i in 0..3 {
                let xl = (dagger(&l) * &gens.kappa[i] * &l)[(0, 0)];
                let xr = (dagger(&r) * &gens.kappa[i] * &r)[(0, 0)];
                assert!((xl - cr(x.x[i])).norm() < 1e-12);
                assert!((xr - cr(x.x[i])).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn squeeze_matrix_columns_are_hopf_spinors() {
        let p = Sp2SqueezeParams::new(1.2, 0.9, 0.0).unwrap();
        let m = sp2_dirac_squeeze(&p);
        let x = hopf1_project(&m).unwrap();
        let (l, r) = hopf1_spinors(&x).unwrap();
        let rebuilt = CMatrix::from_columns(&[l.column(0), r.column(0)]);
        assert!(frob_dist(&m, &rebuilt).unwrap() < 1e-12);
    }

    #[test]
    fn poincare_coordinate() {
        let p0 = Sp2SqueezeParams::new(0.0, 1.0, 0.0).unwrap();
        assert_eq!(poincare_coord(&p0), Complex64::ZERO);
        let mut rng = rngs();
        for _ in 0..50 {
            let p = Sp2SqueezeParams::new(
                uniform(&mut rng, 0.0, 2.5),
                uniform(&mut rng, 0.0, 2.0 * PI),
                0.0,
            )
            .unwrap();
            let eta = poincare_coord(&p);
            assert!(eta.norm() < 1.0);
            let x = hopf1_project(&su11_element(p.phi, p.rho, 0.0)).unwrap();
            assert!((eta - poincare_from_point(&x)).norm() < 1e-12);
        }
        // |eta| -> 1 monotonically with rho at fixed phi
        let mut last = -1.0;
        for k in 1..40 {
            let p = Sp2SqueezeParams::new(0.25 * k as f64, 0.7, 0.0).unwrap();
            let a = poincare_coord(&p).norm();
            assert!(a > last && a < 1.0);
            last = a;
        }
    }

    #[test]
    fn gauss_decomposition_faithful_rep() {
        let p0 = Sp2SqueezeParams::new(0.0, 0.3, 0.0).unwrap();
        let (a, b, g) = gauss_params_sp2(&p0, SqueezeKind::Dirac);
        assert_eq!((a, b, g), (Complex64::ZERO, Complex64::ZERO, Complex64::ZERO));

        let p = Sp2SqueezeParams::new(1.1, 0.4, 0.0).unwrap();
        let (a, b, g) = gauss_params_sp2(&p, SqueezeKind::Dirac);
        let prod = faithful_rep_product(a, b, g);
        assert!(frob_dist(&prod, &sp2_dirac_squeeze(&p)).unwrap() < 1e-12);

        let (a, b, g) = gauss_params_sp2(&p, SqueezeKind::Schwinger);
        let prod = faithful_rep_product(a, b, g);
        assert!(frob_dist(&prod, &sp2_schwinger_squeeze(&p)).unwrap() < 1e-12);
    }

    #[test]
    fn faithful_rep_matches_exponentials() {
        let gens = Su11Generators::build();
        let (a, b, g) = (c(0.3, -0.2), c(-0.4, 0.7), c(0.1, 0.5));
        let lhs = faithful_rep_product(a, b, g);
        let rhs = mat_exp(&gens.t_plus.map(|z| z * a)).unwrap()
            * mat_exp(&gens.t3.map(|z| z * b)).unwrap()
            * mat_exp(&gens.t_minus.map(|z| z * g)).unwrap();
        assert!(frob_dist(&lhs, &rhs).unwrap() < 1e-13);
    }

    #[test]
    fn params_validation() {
        assert!(Sp2SqueezeParams::new(-0.1, 0.0, 0.0).is_err());
        let p = Sp2SqueezeParams::new(1.0, 3.0 * PI, -PI).unwrap();
        assert!((p.phi - PI).abs() < 1e-12);
        assert!((p.chi - 3.0 * PI).abs() < 1e-12);
    }
}
