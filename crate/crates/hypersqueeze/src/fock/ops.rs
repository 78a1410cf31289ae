//! Hermitian operator realizations of su(1,1) and sp(4;R) on truncated
//! Fock spaces, plus the metaplectic Casimir.
//!
//! The sp(4;R) sets are built generically by contracting the structure
//! matrices of [`crate::so23`] with Schwinger operator vectors: the
//! Majorana (two-mode) realization uses X^{ab} = (1/2) psi^t m^{ab} psi
//! with psi = (a, a^dag, b, b^dag), the Dirac (four-mode) one uses
//! X^{ab} = psi^dag k^{ab} psi with psi = (a, b^dag, c, d^dag).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matcore::cr;
use crate::so23::{build_family, METRIC5, PAIRS};
use crate::sp2r::{epsilon3, METRIC3};

use super::{ladder, number_op, FockOp, FockSpace, INTERIOR_MARGIN};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Su11Realization {
    /// Majorana spinor (a, a^dag): one mode, the Mp(2;R) representation.
    OneMode,
    /// Dirac spinor (a, b^dag): two modes.
    TwoMode,
}

/// su(1,1) generator set T^x, T^y, T^z.
#[derive(Debug, Clone)]
pub struct Su11Ops {
    pub space: FockSpace,
    pub realization: Su11Realization,
    pub t: [FockOp; 3],
}

impl Su11Ops {
    /// Ladder T^{+/-} = T^y -/+ i T^x.
    pub fn t_plus(&self) -> FockOp {
        self.t[1].add(&self.t[0].scale(-crate::matcore::I))
    }

    pub fn t_minus(&self) -> FockOp {
        self.t[1].add(&self.t[0].scale(crate::matcore::I))
    }

    pub fn hermiticity_residual(&self) -> f64 {
        self.t
            .iter()
            .map(FockOp::hermiticity_residual)
            .fold(0.0, f64::max)
    }
}

/// Build the su(1,1) operators for the chosen realization:
/// one-mode T^x = i(a^dag^2 - a^2)/4, T^y = (a^2 + a^dag^2)/4,
/// T^z = n/2 + 1/4; two-mode T^x = i(a^dag b^dag - ab)/2,
/// T^y = (ab + a^dag b^dag)/2, T^z = (n_a + n_b)/2 + 1/2.
pub fn su11_ops(space: FockSpace, realization: Su11Realization) -> Result<Su11Ops> {
    let expected_modes = match realization {
        Su11Realization::OneMode => 1,
        Su11Realization::TwoMode => 2,
    };
    if space.modes() != expected_modes {
        return Err(Error::Unsupported(format!(
            "{realization:?} needs {expected_modes} modes, space has {}",
            space.modes()
        )));
    }
    let i = crate::matcore::I;
    let t = match realization {
        Su11Realization::OneMode => {
            let a = ladder(space, 0)?;
            let a2 = a.mul(&a);
            let ad2 = a2.adjoint();
            let tx = ad2.sub(&a2).scale(i * cr(0.25));
            let ty = a2.add(&ad2).scale(cr(0.25));
            let tz = number_op(space, 0)?
                .scale(cr(0.5))
                .add(&FockOp::identity(space).scale(cr(0.25)));
            [tx, ty, tz]
        }
        Su11Realization::TwoMode => {
            let a = ladder(space, 0)?;
            let b = ladder(space, 1)?;
            let ab = a.mul(&b);
            let adbd = ab.adjoint();
            let tx = adbd.sub(&ab).scale(i * cr(0.5));
            let ty = ab.add(&adbd).scale(cr(0.5));
            let tz = number_op(space, 0)?
                .add(&number_op(space, 1)?)
                .scale(cr(0.5))
                .add(&FockOp::identity(space).scale(cr(0.5)));
            [tx, ty, tz]
        }
    };
    Ok(Su11Ops {
        space,
        realization,
        t,
    })
}

/// su(1,1) Casimir -T_x^2 - T_y^2 + T_z^2.
pub fn su11_casimir(ops: &Su11Ops) -> FockOp {
    let tx2 = ops.t[0].mul(&ops.t[0]);
    let ty2 = ops.t[1].mul(&ops.t[1]);
    let tz2 = ops.t[2].mul(&ops.t[2]);
    tz2.sub(&tx2).sub(&ty2)
}

/// Max interior-column residual of [T^i, T^j] = -i eps^{ijk} T_k.
pub fn su11_interior_residual(ops: &Su11Ops) -> f64 {
    let interior = ops.space.interior_indices(INTERIOR_MARGIN);
    let mut max = 0.0f64;
    for i in 0..3 {
        for j in (i + 1)..3 {
            let mut rhs = FockOp::zero(ops.space);
            for k in 0..3 {
                let e = epsilon3(i, j, k);
                if e != 0.0 {
                    rhs = rhs.add(&ops.t[k].scale(-crate::matcore::I * cr(e * METRIC3[k])));
                }
            }
            let diff = ops.t[i].commutator(&ops.t[j]).sub(&rhs);
            for &v in &interior {
                max = max.max(diff.column_norm(v));
            }
        }
    }
    max
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sp4Realization {
    /// psi_M = (a, a^dag, b, b^dag): two modes, the Mp(4;R) representation.
    Majorana,
    /// psi = (a, b^dag, c, d^dag): four modes.
    Dirac,
}

/// sp(4;R) ~ so(2,3) generator set: the ten X^{ab} and, for the Dirac
/// realization, the five X^a.
#[derive(Debug, Clone)]
pub struct Sp4Ops {
    pub space: FockSpace,
    pub realization: Sp4Realization,
    x_ab_list: Vec<FockOp>,
    x_a_list: Option<Vec<FockOp>>,
}

impl Sp4Ops {
    /// X^{ab}, 1-based and antisymmetric; zero when a = b.
    pub fn x_ab(&self, a: usize, b: usize) -> FockOp {
        if a == b || !(1..=5).contains(&a) || !(1..=5).contains(&b) {
            return FockOp::zero(self.space);
        }
        let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
        let idx = PAIRS.iter().position(|&(x, y)| (x, y) == (lo, hi)).unwrap();
        self.x_ab_list[idx].scale(cr(sign))
    }

    /// X^a of the Dirac realization; None for Majorana where they vanish
    /// identically.
    pub fn x_a(&self, a: usize) -> Option<FockOp> {
        self.x_a_list.as_ref().map(|l| l[a - 1].clone())
    }

    pub fn hermiticity_residual(&self) -> f64 {
        let mut max = self
            .x_ab_list
            .iter()
            .map(FockOp::hermiticity_residual)
            .fold(0.0, f64::max);
        if let Some(xa) = &self.x_a_list {
            max = xa
                .iter()
                .map(FockOp::hermiticity_residual)
                .fold(max, f64::max);
        }
        max
    }

    /// Casimir sum_{a>b} X^{ab} X_{ab}.
    pub fn casimir_tensor(&self) -> FockOp {
        let mut acc = FockOp::zero(self.space);
        for (idx, &(a, b)) in PAIRS.iter().enumerate() {
            let weight = METRIC5[a - 1] * METRIC5[b - 1];
            let x = &self.x_ab_list[idx];
            acc = acc.add(&x.mul(x).scale(cr(weight)));
        }
        acc
    }

    /// Casimir sum_a X^a X_a (Dirac realization only).
    pub fn casimir_vector(&self) -> Option<FockOp> {
        let xa = self.x_a_list.as_ref()?;
        let mut acc = FockOp::zero(self.space);
        for a in 1..=5 {
            let x = &xa[a - 1];
            acc = acc.add(&x.mul(x).scale(cr(METRIC5[a - 1])));
        }
        Some(acc)
    }
}

/// Schwinger operator vector of the realization.
fn spinor_ops(space: FockSpace, realization: Sp4Realization) -> Result<Vec<FockOp>> {
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

/// Contract a 4x4 structure matrix with the spinor vector:
/// Majorana: coeff * psi^t M psi; Dirac: coeff * psi^dag M psi.
fn contract(
    space: FockSpace,
    realization: Sp4Realization,
    psi: &[FockOp],
    m: &crate::matcore::CMatrix,
    coeff: f64,
) -> FockOp {
    let mut acc = FockOp::zero(space);
    for al in 0..4 {
        for be in 0..4 {
            let w = m[(al, be)] * cr(coeff);
            if w == Complex64::ZERO {
                continue;
            }
            let left = match realization {
                Sp4Realization::Majorana => psi[al].clone(),
                Sp4Realization::Dirac => psi[al].adjoint(),
            };
            acc = acc.add(&left.mul(&psi[be]).scale(w));
        }
    }
    acc
}

/// Build the ten X^{ab} (and five X^a for Dirac) by contracting the
/// SO(2,3) structure matrices with Schwinger operators.
pub fn sp4_ops(space: FockSpace, realization: Sp4Realization) -> Result<Sp4Ops> {
    let expected_modes = match realization {
        Sp4Realization::Majorana => 2,
        Sp4Realization::Dirac => 4,
    };
    if space.modes() != expected_modes {
        return Err(Error::Unsupported(format!(
            "{realization:?} needs {expected_modes} modes, space has {}",
            space.modes()
        )));
    }
    let fam = build_family();
    let psi = spinor_ops(space, realization)?;
    let x_ab_list: Vec<FockOp> = PAIRS
        .iter()
        .map(|&(a, b)| match realization {
            Sp4Realization::Majorana => {
                contract(space, realization, &psi, &fam.m_ab(a, b), 0.5)
            }
            Sp4Realization::Dirac => contract(space, realization, &psi, &fam.k_ab(a, b), 1.0),
        })
        .collect();
    let x_a_list = match realization {
        Sp4Realization::Majorana => None,
        Sp4Realization::Dirac => Some(
            (1..=5)
                .map(|a| contract(space, realization, &psi, &fam.k_a[a - 1], 1.0))
                .collect(),
        ),
    };
    Ok(Sp4Ops {
        space,
        realization,
        x_ab_list,
        x_a_list,
    })
}

/// Majorana-realization X^a = psi^t m^a psi; identically zero, exposed for
/// the vanishing check.
pub fn majorana_vector_ops(space: FockSpace) -> Result<Vec<FockOp>> {
    let fam = build_family();
    let psi = spinor_ops(space, Sp4Realization::Majorana)?;
    Ok((1..=5)
        .map(|a| contract(space, Sp4Realization::Majorana, &psi, &fam.m_a[a - 1], 1.0))
        .collect())
}

/// psi-bar psi = n_a - n_b + n_c - n_d - 2 of the Dirac realization.
pub fn dirac_singlet(space: FockSpace) -> Result<FockOp> {
    let na = number_op(space, 0)?;
    let nb = number_op(space, 1)?;
    let nc = number_op(space, 2)?;
    let nd = number_op(space, 3)?;
    Ok(na
        .sub(&nb)
        .add(&nc)
        .sub(&nd)
        .sub(&FockOp::identity(space).scale(cr(2.0))))
}

/// Max interior-column residual of the so(2,3) algebra
/// [X^{ab}, X^{cd}] = i(g^{ac} X^{bd} - g^{ad} X^{bc} + g^{bd} X^{ac} - g^{bc} X^{ad}).
pub fn sp4_interior_residual(ops: &Sp4Ops) -> f64 {
    let interior = ops.space.interior_indices(INTERIOR_MARGIN);
    let g = |x: usize, y: usize| if x == y { METRIC5[x - 1] } else { 0.0 };
    let i = crate::matcore::I;
    let mut max = 0.0f64;
    for &(a, b) in PAIRS.iter() {
        for &(c, d) in PAIRS.iter() {
            let rhs = ops
                .x_ab(b, d)
                .scale(cr(g(a, c)))
                .sub(&ops.x_ab(b, c).scale(cr(g(a, d))))
                .add(&ops.x_ab(a, c).scale(cr(g(b, d))))
                .sub(&ops.x_ab(a, d).scale(cr(g(b, c))))
                .scale(i);
            let diff = ops.x_ab(a, b).commutator(&ops.x_ab(c, d)).sub(&rhs);
            for &v in &interior {
                max = max.max(diff.column_norm(v));
            }
        }
    }
    max
}

/// Metaplectic Sp(2n;R) Casimir
/// C = X^{ij} X_{ij} + X_{ij} X^{ij} - 2 X^i_j X^j_i with
/// X^i_j = a_i^dag a_j + delta/2, X^{ij} = a_i^dag a_j^dag, X_{ij} = a_i a_j;
/// a constant n(n + 1/2) on the interior.
pub fn metaplectic_casimir(space: FockSpace) -> Result<FockOp> {
    let n = space.modes();
    if !matches!(n, 1 | 2) {
        return Err(Error::Unsupported(format!(
            "metaplectic Casimir built for 1 or 2 modes, space has {n}"
        )));
    }
    let a: Vec<FockOp> = (0..n).map(|m| ladder(space, m).unwrap()).collect();
    let mut acc = FockOp::zero(space);
    for i in 0..n {
        for j in 0..n {
            let x_up = a[i].adjoint().mul(&a[j].adjoint()); // X^{ij}
            let x_dn = a[i].mul(&a[j]); // X_{ij}
            acc = acc.add(&x_up.mul(&x_dn)).add(&x_dn.mul(&x_up));
            let xi_j = a[i].adjoint().mul(&a[j]).add(
                &FockOp::identity(space).scale(cr(if i == j { 0.5 } else { 0.0 })),
            );
            let xj_i = a[j].adjoint().mul(&a[i]).add(
                &FockOp::identity(space).scale(cr(if i == j { 0.5 } else { 0.0 })),
            );
            acc = acc.sub(&xi_j.mul(&xj_i).scale(cr(2.0)));
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::cr;

    #[test]
    fn one_mode_su11_diagonals() {
        let space = FockSpace::new(1, 12).unwrap();
        let ops = su11_ops(space, Su11Realization::OneMode).unwrap();
        assert!(ops.hermiticity_residual() < 1e-13);
        // T^z diagonal n/2 + 1/4
        for n in 0..=12 {
            let tz = ops.t[2].entry(n, n);
            assert!((tz - cr(n as f64 / 2.0 + 0.25)).norm() < 1e-15);
        }
        // Casimir = -3/16 on the interior
        let c = su11_casimir(&ops);
        for &v in &space.interior_indices(INTERIOR_MARGIN) {
            let col = c.column(v);
            assert_eq!(col.len(), 1);
            assert!((col[0].1 - cr(-3.0 / 16.0)).norm() < 1e-14, "n = {v}");
        }
        assert!(su11_interior_residual(&ops) < 1e-11);
    }

    #[test]
    fn two_mode_su11_diagonals() {
        let space = FockSpace::new(2, 8).unwrap();
        let ops = su11_ops(space, Su11Realization::TwoMode).unwrap();
        assert!(ops.hermiticity_residual() < 1e-13);
        for j in 0..space.dim() {
            let occ = space.occupation(j);
            let expected = (occ[0] + occ[1]) as f64 / 2.0 + 0.5;
            assert!((ops.t[2].entry(j, j) - cr(expected)).norm() < 1e-15);
        }
        assert!(su11_interior_residual(&ops) < 1e-11);
        assert!(su11_ops(FockSpace::new(1, 8).unwrap(), Su11Realization::TwoMode).is_err());
    }

    #[test]
    fn majorana_sp4_matches_paper_forms() {
        let space = FockSpace::new(2, 8).unwrap();
        let ops = sp4_ops(space, Sp4Realization::Majorana).unwrap();
        assert!(ops.hermiticity_residual() < 1e-13);
        // X^{12} = -(n_a + n_b + 1)/2 away from the wall (the a a^dag
        // ordering hits the truncation at the top level)
        let x12 = ops.x_ab(1, 2);
        assert!(x12.is_diagonal());
        let interior = space.interior_indices(1);
        for &j in &interior {
            let occ = space.occupation(j);
            let expected = -((occ[0] + occ[1]) as f64 + 1.0) / 2.0;
            assert!((x12.entry(j, j) - cr(expected)).norm() < 1e-14);
        }
        // X^{34} = (n_a - n_b)/2, X^{35} = -(a^dag b + a b^dag)/2
        let x34 = ops.x_ab(3, 4);
        for &j in &interior {
            let occ = space.occupation(j);
            let expected = (occ[0] as f64 - occ[1] as f64) / 2.0;
            assert!((x34.entry(j, j) - cr(expected)).norm() < 1e-14);
        }
        let a = ladder(space, 0).unwrap();
        let b = ladder(space, 1).unwrap();
        let x35_expected = a
            .adjoint()
            .mul(&b)
            .add(&a.mul(&b.adjoint()))
            .scale(cr(-0.5));
        let x35_diff = ops.x_ab(3, 5).sub(&x35_expected);
        for &j in &interior {
            assert!(x35_diff.column_norm(j) < 1e-14);
        }
    }

    #[test]
    fn majorana_casimir_and_vanishing_vector() {
        let space = FockSpace::new(2, 10).unwrap();
        let ops = sp4_ops(space, Sp4Realization::Majorana).unwrap();
        let c = ops.casimir_tensor();
        for &v in &space.interior_indices(INTERIOR_MARGIN) {
            let col = c.column(v);
            assert_eq!(col.len(), 1, "Casimir not diagonal at column {v}");
            assert!((col[0].1 - cr(-1.25)).norm() < 1e-13);
        }
        // X^a from m^a vanish on interior columns (same-mode [a, a^dag]
        // cancellations pick up hard-wall defects at the top levels)
        for x in majorana_vector_ops(space).unwrap() {
            for &j in &space.interior_indices(1) {
                assert!(x.column_norm(j) < 1e-14);
            }
        }
        assert!(sp4_interior_residual(&ops) < 1e-11);
    }

    #[test]
    fn dirac_sp4_forms_and_casimirs() {
        let space = FockSpace::new(4, 5).unwrap();
        let ops = sp4_ops(space, Sp4Realization::Dirac).unwrap();
        assert!(ops.hermiticity_residual() < 1e-13);
        // X^5 = a^dag a - b b^dag - c^dag c + d d^dag = n_a - n_b - n_c + n_d
        // away from the wall (ordering constants cancel between b and d).
        let x5 = ops.x_a(5).unwrap();
        for &j in &space.interior_indices(1) {
            let occ = space.occupation(j);
            let expected =
                occ[0] as f64 - occ[1] as f64 - occ[2] as f64 + occ[3] as f64;
            assert!(
                (x5.entry(j, j) - cr(expected)).norm() < 1e-13,
                "X^5 at {occ:?}"
            );
        }
        // Casimir identities on interior columns, with S = psi-bar psi:
        // sum X^a X_a = S(S+4) and sum_{a>b} X^{ab}X_{ab} = S(S+4)/2.
        // Their combination X.X + 4 sum X^{ab}X_{ab} = 3 S(S+4) is the
        // SU(2,2) Casimir sum rule, which pins the ordering constants.
        let s = dirac_singlet(space).unwrap();
        let four = FockOp::identity(space).scale(cr(4.0));
        let s_s4 = s.mul(&s.add(&four));
        let lhs_vec = ops.casimir_vector().unwrap();
        let lhs_ten = ops.casimir_tensor();
        let dv = lhs_vec.sub(&s_s4);
        let dt = lhs_ten.sub(&s_s4.scale(cr(0.5)));
        let su22 = lhs_vec.add(&lhs_ten.scale(cr(4.0))).sub(&s_s4.scale(cr(3.0)));
        for &v in &space.interior_indices(INTERIOR_MARGIN) {
            assert!(dv.column_norm(v) < 1e-10);
            assert!(dt.column_norm(v) < 1e-10);
            assert!(su22.column_norm(v) < 1e-10);
        }
    }

    #[test]
    fn dirac_interior_algebra() {
        let space = FockSpace::new(4, 4).unwrap();
        let ops = sp4_ops(space, Sp4Realization::Dirac).unwrap();
        assert!(sp4_interior_residual(&ops) < 1e-11);
    }

    #[test]
    fn metaplectic_casimir_values() {
        for (modes, cutoff, expected) in [(1usize, 14usize, 1.5f64), (2, 9, 5.0)] {
            let space = FockSpace::new(modes, cutoff).unwrap();
            let c = metaplectic_casimir(space).unwrap();
            for &v in &space.interior_indices(INTERIOR_MARGIN) {
                let col = c.column(v);
                assert_eq!(col.len(), 1, "off-diagonal interior element at {v}");
                assert!(
                    (col[0].1 - cr(expected)).norm() < 1e-10,
                    "C at column {v}: {:?}",
                    col[0].1
                );
            }
        }
        assert!(metaplectic_casimir(FockSpace::new(4, 3).unwrap()).is_err());
    }
}
