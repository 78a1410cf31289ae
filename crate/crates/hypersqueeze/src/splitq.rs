//! Split-quaternion algebra H' and the split-signature 't Hooft symbols.
//!
//! The basis is {q1, q2, q3, 1} with q1^2 = q2^2 = 1, q3^2 = -1 and
//! q1 q2 = -q2 q1 = -q3. Associativity then fixes the remaining products to
//! q3 q1 = -q1 q3 = +q2 and q2 q3 = -q3 q2 = +q1; both 2x2 matrix
//! realizations below satisfy exactly this table.
//!
//! Two matrix realizations are carried: the main-text one
//! {sigma_x, sigma_y, -i sigma_z, 1} and the variant {sigma_x, sigma_z,
//! i sigma_y, 1}, each an algebra homomorphism.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matcore::{cr, identity, mat2, pauli_x, pauli_y, pauli_z, CMatrix, I};

/// Split quaternion with real coefficients over the basis {q1, q2, q3, 1}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitQuaternion {
    /// Coefficients c[0..3] on q1, q2, q3 and c[3] on the unit.
    pub c: [f64; 4],
}

/// Basis products: `BASIS_MUL[i][j] = (sign, index)` with indices 0..2 for
/// q1..q3 and 3 for the unit.
const BASIS_MUL: [[(f64, usize); 4]; 4] = [
    // q1 * {q1, q2, q3, 1}
    [(1.0, 3), (-1.0, 2), (-1.0, 1), (1.0, 0)],
    // q2 * {q1, q2, q3, 1}
    [(1.0, 2), (1.0, 3), (1.0, 0), (1.0, 1)],
    // q3 * {q1, q2, q3, 1}
    [(1.0, 1), (-1.0, 0), (-1.0, 3), (1.0, 2)],
    // 1 * {q1, q2, q3, 1}
    [(1.0, 0), (1.0, 1), (1.0, 2), (1.0, 3)],
];

impl SplitQuaternion {
    pub fn new(c1: f64, c2: f64, c3: f64, c4: f64) -> Self {
        Self { c: [c1, c2, c3, c4] }
    }

    pub fn zero() -> Self {
        Self { c: [0.0; 4] }
    }

    pub fn one() -> Self {
        Self { c: [0.0, 0.0, 0.0, 1.0] }
    }

    /// Basis element q_m for m = 1..4 (q_4 is the unit).
    pub fn basis(m: usize) -> Result<Self> {
        if !(1..=4).contains(&m) {
            return Err(Error::IndexOutOfRange {
                what: format!("split-quaternion basis index {m}, want 1..4"),
            });
        }
        let mut c = [0.0; 4];
        c[m - 1] = 1.0;
        Ok(Self { c })
    }
}

/// Bilinear product on the basis table; associative.
pub fn sq_mul(a: SplitQuaternion, b: SplitQuaternion) -> SplitQuaternion {
    let mut out = [0.0; 4];
    for i in 0..4 {
        if a.c[i] == 0.0 {
            continue;
        }
        for j in 0..4 {
            if b.c[j] == 0.0 {
                continue;
            }
            let (sign, k) = BASIS_MUL[i][j];
            out[k] += sign * a.c[i] * b.c[j];
        }
    }
    SplitQuaternion { c: out }
}

/// Quaternionic conjugate: q_i -> -q_i, unit fixed. Satisfies
/// conj(ab) = conj(b) conj(a).
pub fn sq_conj(a: SplitQuaternion) -> SplitQuaternion {
    SplitQuaternion {
        c: [-a.c[0], -a.c[1], -a.c[2], a.c[3]],
    }
}

/// Which 2x2 realization of the algebra to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqRep {
    /// {sigma_x, sigma_y, -i sigma_z, 1}
    Main,
    /// {sigma_x, sigma_z, i sigma_y, 1}
    AppendixA,
}

/// 2x2 matrix of the basis element q_m (m = 1..4) in the chosen realization.
pub fn sq_basis_matrix(m: usize, rep: SqRep) -> Result<CMatrix> {
    let mats = match rep {
        SqRep::Main => [
            pauli_x(),
            pauli_y(),
            pauli_z().map(|z| -I * z),
            identity(2),
        ],
        SqRep::AppendixA => [
            pauli_x(),
            pauli_z(),
            pauli_y().map(|z| I * z),
            identity(2),
        ],
    };
    if !(1..=4).contains(&m) {
        return Err(Error::IndexOutOfRange {
            what: format!("split-quaternion basis index {m}, want 1..4"),
        });
    }
    Ok(mats[m - 1].clone())
}

/// Matrix of q-bar_m = conj(q_m).
pub fn sq_conj_basis_matrix(m: usize, rep: SqRep) -> Result<CMatrix> {
    let mut q = SplitQuaternion::basis(m)?;
    q = sq_conj(q);
    Ok(sq_matrix_rep(q, rep))
}

/// Algebra homomorphism into 2x2 complex matrices.
pub fn sq_matrix_rep(a: SplitQuaternion, rep: SqRep) -> CMatrix {
    let mut out = mat2([Complex64::ZERO; 4]);
    for m in 1..=4 {
        if a.c[m - 1] != 0.0 {
            out += sq_basis_matrix(m, rep).expect("basis index in range") * cr(a.c[m - 1]);
        }
    }
    out
}

/// 't Hooft symbols with split signature, built once as integer tensors.
///
/// eta_{mni} = eps_{mni4} + g_{mi} g_{n4} - g_{ni} g_{m4}, eta-bar with the
/// metric terms flipped; eps_{1234} = +1, g_{mn} = diag(-1,-1,+1,+1).
#[derive(Debug, Clone)]
pub struct THooftSymbols {
    /// eta[m][n][i], indices 0-based (m,n in 0..4, i in 0..3).
    pub eta: [[[i32; 3]; 4]; 4],
    pub eta_bar: [[[i32; 3]; 4]; 4],
}

/// Metric diag(-1,-1,+1,+1) on the 4d index.
pub const G4: [i32; 4] = [-1, -1, 1, 1];
/// Metric diag(-1,-1,+1) on the so(2,1) index.
pub const G3: [i32; 3] = [-1, -1, 1];

/// Levi-Civita on four indices (0-based), eps_{0123} = +1 so that
/// eps_{1234} = +1 in 1-based labels.
pub fn epsilon4(ix: [usize; 4]) -> i32 {
    let mut perm = ix;
    let mut sign = 1i32;
    for i in 0..4 {
        for j in (i + 1)..4 {
            match perm[i].cmp(&perm[j]) {
                std::cmp::Ordering::Greater => {
                    perm.swap(i, j);
                    sign = -sign;
                }
                std::cmp::Ordering::Equal => return 0,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    sign
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum THooftKind {
    Eta,
    EtaBar,
}

impl THooftSymbols {
    pub fn build() -> Self {
        let mut eta = [[[0i32; 3]; 4]; 4];
        let mut eta_bar = [[[0i32; 3]; 4]; 4];
        for m in 0..4 {
            for n in 0..4 {
                for i in 0..3 {
                    let eps = epsilon4([m, n, i, 3]);
                    let metric = metric_term(m, n, i);
                    eta[m][n][i] = eps + metric;
                    eta_bar[m][n][i] = eps - metric;
                }
            }
        }
        Self { eta, eta_bar }
    }

    /// Evaluate with 1-based indices m,n in 1..4 and i in 1..3.
    pub fn get(&self, kind: THooftKind, m: usize, n: usize, i: usize) -> Result<f64> {
        if !(1..=4).contains(&m) || !(1..=4).contains(&n) || !(1..=3).contains(&i) {
            return Err(Error::IndexOutOfRange {
                what: format!("'t Hooft indices ({m},{n},{i}), want m,n in 1..4, i in 1..3"),
            });
        }
        let t = match kind {
            THooftKind::Eta => &self.eta,
            THooftKind::EtaBar => &self.eta_bar,
        };
        Ok(t[m - 1][n - 1][i - 1] as f64)
    }

    fn tensor(&self, kind: THooftKind) -> &[[[i32; 3]; 4]; 4] {
        match kind {
            THooftKind::Eta => &self.eta,
            THooftKind::EtaBar => &self.eta_bar,
        }
    }

    /// Fully lowered symbol (lower m,n with G4 and i with G3). The defining
    /// tensor holds the all-upper components; for the diagonal metrics the
    /// two agree entrywise, and this accessor makes contractions explicit.
    pub fn lowered(&self, kind: THooftKind, m: usize, n: usize, i: usize) -> i32 {
        self.tensor(kind)[m][n][i] * G4[m] * G4[n] * G3[i]
    }

    /// Contraction sum_{m,n} kind1^{mni} kind2_{mnj}.
    pub fn contract(&self, a: THooftKind, b: THooftKind, i: usize, j: usize) -> i32 {
        let ta = self.tensor(a);
        let mut acc = 0i32;
        for m in 0..4 {
            for n in 0..4 {
                acc += ta[m][n][i] * self.lowered(b, m, n, j);
            }
        }
        acc
    }
}

fn metric_term(m: usize, n: usize, i: usize) -> i32 {
    // g_{mi} g_{n4} - g_{ni} g_{m4} with 0-based labels, the 3d index i
    // embedded in the 4d metric.
    let g_mi = if m == i { G4[m] } else { 0 };
    let g_ni = if n == i { G4[n] } else { 0 };
    let g_n4 = if n == 3 { 1 } else { 0 };
    let g_m4 = if m == 3 { 1 } else { 0 };
    g_mi * g_n4 - g_ni * g_m4
}

/// Convenience free function mirroring the operation signature.
pub fn thooft(symbols: &THooftSymbols, kind: THooftKind, m: usize, n: usize, i: usize) -> Result<f64> {
    symbols.get(kind, m, n, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::frob_dist;

    fn q(m: usize) -> SplitQuaternion {
        SplitQuaternion::basis(m).unwrap()
    }

    #[test]
    fn multiplication_table() {
        assert_eq!(sq_mul(q(1), q(1)), SplitQuaternion::one());
        assert_eq!(sq_mul(q(2), q(2)), SplitQuaternion::one());
        assert_eq!(
            sq_mul(q(3), q(3)),
            SplitQuaternion::new(0.0, 0.0, 0.0, -1.0)
        );
        // q1 q2 = -q2 q1 = -q3
        assert_eq!(sq_mul(q(1), q(2)), SplitQuaternion::new(0.0, 0.0, -1.0, 0.0));
        assert_eq!(sq_mul(q(2), q(1)), SplitQuaternion::new(0.0, 0.0, 1.0, 0.0));
        // associativity forces q3 q1 = +q2 and q2 q3 = +q1
        assert_eq!(sq_mul(q(3), q(1)), q(2));
        assert_eq!(sq_mul(q(2), q(3)), q(1));
    }

    #[test]
    fn unit_element() {
        let x = SplitQuaternion::new(0.3, -1.2, 0.7, 2.0);
        assert_eq!(sq_mul(SplitQuaternion::one(), x), x);
        assert_eq!(sq_mul(x, SplitQuaternion::one()), x);
    }

    #[test]
    fn associativity_on_basis() {
        for a in 1..=4 {
            for b in 1..=4 {
                for c in 1..=4 {
                    let lhs = sq_mul(sq_mul(q(a), q(b)), q(c));
                    let rhs = sq_mul(q(a), sq_mul(q(b), q(c)));
                    assert_eq!(lhs, rhs, "associativity failed at ({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(sq_conj(SplitQuaternion::one()), SplitQuaternion::one());
        assert_eq!(sq_conj(q(3)), SplitQuaternion::new(0.0, 0.0, -1.0, 0.0));
        // conj(q1 q2) = conj(q2) conj(q1) = conj(-q3) = +q3
        let lhs = sq_conj(sq_mul(q(1), q(2)));
        let rhs = sq_mul(sq_conj(q(2)), sq_conj(q(1)));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.c[2], 1.0);
        assert_eq!(lhs.c[0].abs() + lhs.c[1].abs() + lhs.c[3].abs(), 0.0);
    }

    #[test]
    fn anti_morphism_on_random_products() {
        let a = SplitQuaternion::new(0.5, -0.25, 1.5, 0.75);
        let b = SplitQuaternion::new(-1.0, 2.0, 0.125, -0.5);
        assert_eq!(sq_conj(sq_mul(a, b)), sq_mul(sq_conj(b), sq_conj(a)));
    }

    #[test]
    fn rep_values() {
        let q3_main = sq_basis_matrix(3, SqRep::Main).unwrap();
        assert_eq!(frob_dist(&q3_main, &pauli_z().map(|z| -I * z)).unwrap(), 0.0);
        let q3_a = sq_basis_matrix(3, SqRep::AppendixA).unwrap();
        assert_eq!(frob_dist(&q3_a, &pauli_y().map(|z| I * z)).unwrap(), 0.0);
    }

    #[test]
    fn homomorphism_all_basis_pairs_both_reps() {
        for rep in [SqRep::Main, SqRep::AppendixA] {
            for a in 1..=4 {
                for b in 1..=4 {
                    let lhs = sq_matrix_rep(sq_mul(q(a), q(b)), rep);
                    let rhs = sq_matrix_rep(q(a), rep) * sq_matrix_rep(q(b), rep);
                    assert_eq!(
                        frob_dist(&lhs, &rhs).unwrap(),
                        0.0,
                        "rep {rep:?} fails at q{a} q{b}"
                    );
                }
            }
        }
    }

    #[test]
    fn thooft_values() {
        let t = THooftSymbols::build();
        assert_eq!(t.get(THooftKind::Eta, 1, 2, 3).unwrap(), 1.0);
        assert_eq!(t.get(THooftKind::Eta, 1, 4, 1).unwrap(), -1.0);
        assert!(t.get(THooftKind::Eta, 0, 1, 1).is_err());
        assert!(t.get(THooftKind::Eta, 1, 1, 4).is_err());
    }

    #[test]
    fn thooft_antisymmetry() {
        let t = THooftSymbols::build();
        for m in 0..4 {
            for n in 0..4 {
                for i in 0..3 {
                    assert_eq!(t.eta[m][n][i], -t.eta[n][m][i]);
                    assert_eq!(t.eta_bar[m][n][i], -t.eta_bar[n][m][i]);
                }
            }
        }
    }

    #[test]
    fn thooft_contractions() {
        let t = THooftSymbols::build();
        for i in 0..3 {
            for j in 0..3 {
                let d = if i == j { 4 } else { 0 };
                assert_eq!(t.contract(THooftKind::Eta, THooftKind::Eta, i, j), d);
                assert_eq!(t.contract(THooftKind::EtaBar, THooftKind::EtaBar, i, j), d);
                assert_eq!(t.contract(THooftKind::Eta, THooftKind::EtaBar, i, j), 0);
            }
        }
    }

    #[test]
    fn thooft_self_duality() {
        let t = THooftSymbols::build();
        // (1/2) eps_{mnpq} eta^{pqi} = eta_{mn}^i and the anti-self-dual
        // analogue for eta-bar, in integer arithmetic.
        for m in 0..4 {
            for n in 0..4 {
                for i in 0..3 {
                    let mut lhs_eta = 0i32;
                    let mut lhs_bar = 0i32;
                    for p in 0..4 {
                        for qx in 0..4 {
                            let eps = epsilon4([m, n, p, qx]);
                            lhs_eta += eps * t.eta[p][qx][i];
                            lhs_bar += eps * t.eta_bar[p][qx][i];
                        }
                    }
                    // lowered on m,n only: eta_{mn}^i
                    let rhs_eta = t.eta[m][n][i] * G4[m] * G4[n];
                    let rhs_bar = t.eta_bar[m][n][i] * G4[m] * G4[n];
                    assert_eq!(lhs_eta / 2, rhs_eta);
                    assert_eq!(lhs_bar / 2, -rhs_bar);
                }
            }
        }
    }

    #[test]
    fn quaternion_thooft_matrix_identities() {
        // q^m qbar^n + q^n qbar^m = 2 g^{mn} and
        // q^m qbar^n - q^n qbar^m = 2 eta^{mni} q_i in both reps.
        let t = THooftSymbols::build();
        for rep in [SqRep::Main, SqRep::AppendixA] {
            for m in 1..=4 {
                for n in 1..=4 {
                    let qm = sq_basis_matrix(m, rep).unwrap();
                    let qn = sq_basis_matrix(n, rep).unwrap();
                    let qbm = sq_conj_basis_matrix(m, rep).unwrap();
                    let qbn = sq_conj_basis_matrix(n, rep).unwrap();
                    let sym = &qm * &qbn + &qn * &qbm;
                    let expected_sym =
                        identity(2).map(|z| z * cr(2.0 * G4[m - 1] as f64 * ((m == n) as i32 as f64)));
                    assert!(frob_dist(&sym, &expected_sym).unwrap() < 1e-14);

                    let antisym = &qm * &qbn - &qn * &qbm;
                    let mut rhs = mat2([Complex64::ZERO; 4]);
                    for i in 1..=3 {
                        // q_i = g_{ij} q^j
                        let coeff = 2.0 * t.eta[m - 1][n - 1][i - 1] as f64 * G3[i - 1] as f64;
                        if coeff != 0.0 {
                            rhs += sq_basis_matrix(i, rep).unwrap() * cr(coeff);
                        }
                    }
                    assert!(
                        frob_dist(&antisym, &rhs).unwrap() < 1e-14,
                        "antisym identity fails at rep {rep:?}, (m,n)=({m},{n})"
                    );
                }
            }
        }
    }
}
