//! Named identity suites with residual reports.
//!
//! Each suite evaluates a family of matrix identities and returns one
//! `Check` per identity: id, description, worst residual, tolerance.
//! Exact integer/half-integer identities carry a 1e-14 gate; sampled
//! suites draw from a seeded generator so reports are reproducible.

use rand::RngExt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::time::Instant;

use num_complex::Complex64;

use crate::matcore::{cr, dagger, det, frob_dist, frob_norm, identity, zeros, CMatrix, I};
use crate::so23::{
    self, build_family, chiral_gauge_action, chiral_hopf, chiral_hopf_spinors, euler_decompose,
    gauss_decompose_sp4, h43_element, hopf2_project, hopf_spinor_coordinates, hopf_spinor_matrix,
    sp4_dirac_squeeze, sp4_dirac_squeeze_exp, sp4_j_matrix, sp4_real_form, sp4_schwinger_squeeze,
    symplectic_checks, H22Params, H22Point, METRIC5, PAIRS,
};
use crate::sp2r::{
    epsilon3, faithful_rep_product, gauss_params_sp2, hopf1_project, hopf1_spinors,
    sp2_dirac_squeeze, sp2_dirac_squeeze_exp, sp2_schwinger_squeeze, su11_element,
    Sp2SqueezeParams, Su11Generators,
};
use crate::splitq::{
    epsilon4, sq_basis_matrix, sq_conj, sq_conj_basis_matrix, sq_matrix_rep, sq_mul,
    SplitQuaternion, SqRep, THooftKind, THooftSymbols, G3, G4,
};
use crate::SqueezeKind;

#[derive(Debug, Clone)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub residual: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn new(id: &str, description: &str, residual: f64, tolerance: f64) -> Self {
        Self {
            id: id.into(),
            description: description.into(),
            residual,
            tolerance,
        }
    }

    pub fn pass(&self) -> bool {
        self.residual.is_finite() && self.residual <= self.tolerance
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub wall_time: f64,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(Check::pass)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }
}

pub const EXACT_TOL: f64 = 1e-14;

fn uniform(rng: &mut ChaCha8Rng, a: f64, b: f64) -> f64 {
    a + (b - a) * rng.random::<f64>()
}

fn random_h22(rng: &mut ChaCha8Rng) -> H22Params {
    H22Params::new(
        uniform(rng, 0.05, PI - 0.05),
        uniform(rng, 0.0, 1.5),
        uniform(rng, 0.0, 2.0 * PI),
        uniform(rng, 0.0, 2.0 * PI),
    )
    .expect("valid parameters")
}

/// All integer / half-integer matrix identities: split-quaternion algebra,
/// 't Hooft contractions, su(1,1) structure, SO(2,3) gamma and generator
/// relations, completeness, sandwich algebras and the real-form transform.
pub fn exact_algebra_suite() -> SuiteReport {
    let start = Instant::now();
    let mut checks = Vec::new();
    let q = |m: usize| SplitQuaternion::basis(m).expect("basis");

    // Split-quaternion table and associativity.
    let mut r = 0.0f64;
    let expect = |x: SplitQuaternion, y: SplitQuaternion| -> f64 {
        x.c.iter().zip(y.c.iter()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    };
    r = r.max(expect(sq_mul(q(1), q(1)), SplitQuaternion::one()));
    r = r.max(expect(sq_mul(q(2), q(2)), SplitQuaternion::one()));
    r = r.max(expect(sq_mul(q(3), q(3)), SplitQuaternion::new(0.0, 0.0, 0.0, -1.0)));
    r = r.max(expect(sq_mul(q(1), q(2)), SplitQuaternion::new(0.0, 0.0, -1.0, 0.0)));
    for a in 1..=4 {
        for b in 1..=4 {
            for c in 1..=4 {
                r = r.max(expect(
                    sq_mul(sq_mul(q(a), q(b)), q(c)),
                    sq_mul(q(a), sq_mul(q(b), q(c))),
                ));
            }
        }
    }
    checks.push(Check::new(
        "splitq-table",
        "split-quaternion multiplication table and associativity",
        r,
        EXACT_TOL,
    ));

    // Representation homomorphism and conjugation anti-morphism.
    let mut r = 0.0f64;
    for rep in [SqRep::Main, SqRep::AppendixA] {
        for a in 1..=4 {
            for b in 1..=4 {
                let lhs = sq_matrix_rep(sq_mul(q(a), q(b)), rep);
                let rhs = sq_matrix_rep(q(a), rep) * sq_matrix_rep(q(b), rep);
                r = r.max(frob_dist(&lhs, &rhs).unwrap());
                r = r.max(expect(
                    sq_conj(sq_mul(q(a), q(b))),
                    sq_mul(sq_conj(q(b)), sq_conj(q(a))),
                ));
            }
        }
    }
    checks.push(Check::new(
        "splitq-homomorphism",
        "matrix realizations are algebra homomorphisms (both conventions)",
        r,
        EXACT_TOL,
    ));

    // 't Hooft contractions, duality, antisymmetry.
    let t = THooftSymbols::build();
    let mut r: i64 = 0;
    for i in 0..3 {
        for j in 0..3 {
            let d = if i == j { 4 } else { 0 };
            r = r.max((t.contract(THooftKind::Eta, THooftKind::Eta, i, j) - d).abs() as i64);
            r = r.max((t.contract(THooftKind::EtaBar, THooftKind::EtaBar, i, j) - d).abs() as i64);
            r = r.max(t.contract(THooftKind::Eta, THooftKind::EtaBar, i, j).abs() as i64);
        }
    }
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
                r = r.max((lhs_eta / 2 - t.eta[m][n][i] * G4[m] * G4[n]).abs() as i64);
                r = r.max((lhs_bar / 2 + t.eta_bar[m][n][i] * G4[m] * G4[n]).abs() as i64);
            }
        }
    }
    checks.push(Check::new(
        "splitq-thooft",
        "'t Hooft contractions eta.eta = 4 delta and (anti-)self-duality",
        r as f64,
        EXACT_TOL,
    ));

    // q / eta matrix identities in both representations.
    let mut r = 0.0f64;
    for rep in [SqRep::Main, SqRep::AppendixA] {
        for m in 1..=4 {
            for n in 1..=4 {
                let qm = sq_basis_matrix(m, rep).unwrap();
                let qn = sq_basis_matrix(n, rep).unwrap();
                let qbm = sq_conj_basis_matrix(m, rep).unwrap();
                let qbn = sq_conj_basis_matrix(n, rep).unwrap();
                let sym = &qm * &qbn + &qn * &qbm;
                let expected =
                    identity(2).map(|z| z * cr(2.0 * G4[m - 1] as f64 * ((m == n) as i32 as f64)));
                r = r.max(frob_dist(&sym, &expected).unwrap());
                let antisym = &qm * &qbn - &qn * &qbm;
                let mut rhs = zeros(2, 2);
                for i in 1..=3 {
                    let coeff = 2.0 * t.eta[m - 1][n - 1][i - 1] as f64 * G3[i - 1] as f64;
                    if coeff != 0.0 {
                        rhs += sq_basis_matrix(i, rep).unwrap() * cr(coeff);
                    }
                }
                r = r.max(frob_dist(&antisym, &rhs).unwrap());
            }
        }
    }
    checks.push(Check::new(
        "splitq-eta-identities",
        "q qbar symmetric/antisymmetric 't Hooft identities in both reps",
        r,
        EXACT_TOL,
    ));

    // su(1,1) tau algebra, completeness, kappa and m relations.
    let gens = Su11Generators::build();
    let mut r = 0.0f64;
    for i in 0..3 {
        for j in 0..3 {
            let mut rhs = zeros(2, 2);
            for k in 0..3 {
                let e = epsilon3(i, j, k);
                if e != 0.0 {
                    rhs += gens.tau_lower(k).map(|z| z * cr(-2.0 * e) * I);
                }
            }
            let comm = &gens.tau[i] * &gens.tau[j] - &gens.tau[j] * &gens.tau[i];
            r = r.max(frob_dist(&comm, &rhs).unwrap());
        }
        let charge = gens.tau[i].map(|z| -z.conj());
        let sx = crate::matcore::pauli_x();
        r = r.max(frob_dist(&charge, &(&sx * &gens.tau[i] * &sx)).unwrap());
        r = r.max(frob_dist(&dagger(&gens.kappa[i]), &gens.kappa[i]).unwrap());
        r = r.max(frob_dist(&gens.m_sym[i].transpose(), &gens.m_sym[i]).unwrap());
    }
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    let mut lhs = Complex64::ZERO;
                    for i in 0..3 {
                        lhs += gens.tau[i][(a, b)] * gens.tau_lower(i)[(c, d)];
                    }
                    let rhs = cr(2.0 * ((a == d && b == c) as i32 as f64)
                        - ((a == b && c == d) as i32 as f64));
                    r = r.max((lhs - rhs).norm());
                }
            }
        }
    }
    checks.push(Check::new(
        "sp2r-algebra",
        "su(1,1) tau commutators, completeness, charge conjugation, kappa/m symmetry",
        r,
        EXACT_TOL,
    ));

    // SO(2,3) family.
    let fam = build_family();
    let mut r = 0.0f64;
    for a in 1..=5 {
        for b in 1..=5 {
            let anti = &fam.gamma[a - 1] * &fam.gamma[b - 1] + &fam.gamma[b - 1] * &fam.gamma[a - 1];
            let expected = if a == b {
                identity(4).map(|z| z * cr(2.0 * METRIC5[a - 1]))
            } else {
                zeros(4, 4)
            };
            r = r.max(frob_dist(&anti, &expected).unwrap());
        }
        let g = &fam.gamma[a - 1];
        r = r.max(frob_dist(&dagger(g), &(&fam.k * g * &fam.k)).unwrap());
    }
    let metric = |x: usize, y: usize| if x == y { METRIC5[x - 1] } else { 0.0 };
    for &(a, b) in PAIRS.iter() {
        let s = fam.sigma(a, b);
        r = r.max(frob_dist(&dagger(&s), &(&fam.k * &s * &fam.k)).unwrap());
        r = r.max(frob_dist(&s.map(|z| -z.conj()), &(&fam.c_conj * &s * &fam.c_conj)).unwrap());
        for &(c, d) in PAIRS.iter() {
            let lhs = &fam.sigma(a, b) * &fam.sigma(c, d) - &fam.sigma(c, d) * &fam.sigma(a, b);
            let rhs = (fam.sigma(b, d).map(|z| z * cr(metric(a, c)))
                - fam.sigma(b, c).map(|z| z * cr(metric(a, d)))
                + fam.sigma(a, c).map(|z| z * cr(metric(b, d)))
                - fam.sigma(a, d).map(|z| z * cr(metric(b, c))))
            .map(|z| I * z);
            r = r.max(frob_dist(&lhs, &rhs).unwrap());
        }
    }
    checks.push(Check::new(
        "so23-gamma-algebra",
        "Clifford relation, pseudo-Hermiticity, so(2,3) commutators, charge conjugation",
        r,
        EXACT_TOL,
    ));

    // Completeness relations (both the k and m families).
    let mut r = 0.0f64;
    for al in 0..4 {
        for be in 0..4 {
            for ga in 0..4 {
                for de in 0..4 {
                    let mut k_lhs = Complex64::ZERO;
                    let mut m_lhs = Complex64::ZERO;
                    for a in 1..=5 {
                        k_lhs +=
                            fam.k_a[a - 1][(al, be)] * fam.k_a[a - 1][(ga, de)] * cr(METRIC5[a - 1]);
                        m_lhs +=
                            fam.m_a[a - 1][(al, be)] * fam.m_a[a - 1][(ga, de)] * cr(METRIC5[a - 1]);
                    }
                    for &(a, b) in PAIRS.iter() {
                        let w = cr(4.0 * METRIC5[a - 1] * METRIC5[b - 1]);
                        k_lhs += w * fam.k_ab(a, b)[(al, be)] * fam.k_ab(a, b)[(ga, de)];
                        m_lhs += w * fam.m_ab(a, b)[(al, be)] * fam.m_ab(a, b)[(ga, de)];
                    }
                    let k_rhs = cr(4.0) * fam.k[(al, de)] * fam.k[(be, ga)]
                        - fam.k[(al, be)] * fam.k[(ga, de)];
                    let m_rhs = cr(-4.0) * fam.e_mat[(al, de)] * fam.e_mat[(be, ga)]
                        - fam.e_mat[(al, be)] * fam.e_mat[(ga, de)];
                    r = r.max((k_lhs - k_rhs).norm()).max((m_lhs - m_rhs).norm());
                }
            }
        }
    }
    checks.push(Check::new(
        "so23-completeness",
        "U(2,2) completeness, k-family and m-family versions",
        r,
        EXACT_TOL,
    ));

    // Sandwich algebras for k^{ab} and m^{ab}.
    let mut r = 0.0f64;
    for &(a, b) in PAIRS.iter() {
        for &(c, d) in PAIRS.iter() {
            let rhs_shape = |f: &dyn Fn(usize, usize) -> CMatrix| -> CMatrix {
                (f(b, d).map(|z| z * cr(metric(a, c))) - f(b, c).map(|z| z * cr(metric(a, d)))
                    + f(a, c).map(|z| z * cr(metric(b, d)))
                    - f(a, d).map(|z| z * cr(metric(b, c))))
                .map(|z| I * z)
            };
            let kl = &fam.k_ab(a, b) * &fam.k * &fam.k_ab(c, d)
                - &fam.k_ab(c, d) * &fam.k * &fam.k_ab(a, b);
            r = r.max(frob_dist(&kl, &rhs_shape(&|x, y| fam.k_ab(x, y))).unwrap());
            let ml = &fam.m_ab(a, b) * &fam.e_mat * &fam.m_ab(c, d)
                - &fam.m_ab(c, d) * &fam.e_mat * &fam.m_ab(a, b);
            r = r.max(frob_dist(&ml, &rhs_shape(&|x, y| fam.m_ab(x, y))).unwrap());
        }
    }
    checks.push(Check::new(
        "so23-sandwich",
        "k^{ab} and m^{ab} metric-sandwich commutation relations",
        r,
        EXACT_TOL,
    ));

    // Real sp(4;R) form.
    let ts = sp4_real_form();
    let j = sp4_j_matrix();
    let mut r = 0.0f64;
    for t_mat in &ts {
        r = r.max(t_mat.iter().map(|z| z.re.abs()).fold(0.0, f64::max));
        let x = t_mat.map(|z| I * z);
        r = r.max(frob_norm(&(x.transpose() * &j + &j * &x)));
    }
    checks.push(Check::new(
        "so23-real-form",
        "t^{ab} pure imaginary and i t^{ab} satisfy X^t J + J X = 0",
        r,
        EXACT_TOL,
    ));

    SuiteReport {
        suite: "exact-algebra".into(),
        checks,
        wall_time: start.elapsed().as_secs_f64(),
    }
}

/// Hopf map suite: hyperboloid constraints, polar closed forms and gauge
/// invariance for both non-compact Hopf maps, at `samples` random points.
pub fn hopf_map_suite(samples: usize, seed: u64) -> SuiteReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    let mut closed1 = 0.0f64;
    let mut constraint1 = 0.0f64;
    let mut gauge1 = 0.0f64;
    let mut spinors1 = 0.0f64;
    let gens = Su11Generators::build();
    for _ in 0..samples {
        let (phi, rho, chi) = (
            uniform(&mut rng, 0.0, 2.0 * PI),
            uniform(&mut rng, 0.0, 2.0),
            uniform(&mut rng, 0.0, 4.0 * PI),
        );
        let g = su11_element(phi, rho, chi);
        let x = hopf1_project(&g).expect("SU(1,1) element");
        constraint1 = constraint1
            .max((-x.x[0] * x.x[0] - x.x[1] * x.x[1] + x.x[2] * x.x[2] - 1.0).abs());
        closed1 = closed1
            .max((x.x[0] - rho.sinh() * phi.sin()).abs())
            .max((x.x[1] - rho.sinh() * phi.cos()).abs())
            .max((x.x[2] - rho.cosh()).abs());
        let chi2 = uniform(&mut rng, 0.0, 4.0 * PI);
        let u1 = crate::matcore::mat_exp(&gens.tau[2].map(|z| z * I * cr(chi2 / 2.0))).unwrap();
        let x2 = hopf1_project(&(&g * u1)).expect("gauge transformed");
        for k in 0..3 {
            gauge1 = gauge1.max((x.x[k] - x2.x[k]).abs());
        }
        let (l, rspin) = hopf1_spinors(&x).expect("upper leaf");
        for i in 0..3 {
            let xl = (dagger(&l) * &gens.kappa[i] * &l)[(0, 0)];
            let xr = (dagger(&rspin) * &gens.kappa[i] * &rspin)[(0, 0)];
            spinors1 = spinors1.max((xl - cr(x.x[i])).norm()).max((xr - cr(x.x[i])).norm());
        }
    }
    checks.push(Check::new("hopf1-constraint", "H^{2,0} quadric residual", constraint1, 1e-12));
    checks.push(Check::new(
        "hopf1-closed-form",
        "x = (sinh r sin p, sinh r cos p, cosh r) for the Euler element",
        closed1,
        1e-12,
    ));
    checks.push(Check::new("hopf1-gauge", "right U(1) invariance", gauge1, 1e-12));
    checks.push(Check::new(
        "hopf1-spinors",
        "psi^dag kappa^i psi reproduces the projected point",
        spinors1,
        1e-12,
    ));

    let mut closed2 = 0.0f64;
    let mut constraint2 = 0.0f64;
    let mut gauge2 = 0.0f64;
    let mut chiral = 0.0f64;
    for _ in 0..samples {
        let p = random_h22(&mut rng);
        let expected = p.x();
        for m in [sp4_dirac_squeeze(&p).m, sp4_schwinger_squeeze(&p).m] {
            let x = hopf2_project(&m).expect("pseudo-unitary");
            constraint2 = constraint2.max(x.residual());
            for a in 0..5 {
                closed2 = closed2.max((x.x[a] - expected[a]).abs());
            }
        }
        let m = sp4_dirac_squeeze(&p).m;
        let x0 = hopf2_project(&m).unwrap();
        let hl = su11_element(
            uniform(&mut rng, 0.0, 2.0 * PI),
            uniform(&mut rng, 0.0, 1.5),
            uniform(&mut rng, 0.0, 4.0 * PI),
        );
        let hr = su11_element(
            uniform(&mut rng, 0.0, 2.0 * PI),
            uniform(&mut rng, 0.0, 1.5),
            uniform(&mut rng, 0.0, 4.0 * PI),
        );
        let gauge = so23::block4(&hl, &zeros(2, 2), &zeros(2, 2), &hr);
        let x1 = hopf2_project(&(&m * gauge)).unwrap();
        for a in 0..5 {
            gauge2 = gauge2.max((x0.x[a] - x1.x[a]).abs());
        }

        let (pl, pr) = chiral_hopf_spinors(p.rho, p.chi, p.phi);
        let y = chiral_hopf(&pl, &pr).unwrap();
        let expected_y = p.y();
        for m in 0..4 {
            chiral = chiral.max((y[m] - expected_y[m]).abs());
        }
        let h = su11_element(
            uniform(&mut rng, 0.0, 2.0 * PI),
            uniform(&mut rng, 0.0, 1.2),
            uniform(&mut rng, 0.0, 4.0 * PI),
        );
        let (gl, gr) = chiral_gauge_action(&pl, &pr, &h);
        let y2 = chiral_hopf(&gl, &gr).unwrap();
        for m in 0..4 {
            chiral = chiral.max((y[m] - y2[m]).abs());
        }
    }
    checks.push(Check::new("hopf2-constraint", "H^{2,2} quadric residual", constraint2, 1e-12));
    checks.push(Check::new(
        "hopf2-closed-form",
        "x^m = sin(t) y^m, x^5 = cos(t) for both squeeze types",
        closed2,
        1e-12,
    ));
    checks.push(Check::new(
        "hopf2-gauge",
        "right SU(1,1) x SU(1,1) invariance",
        gauge2,
        1e-12,
    ));
    checks.push(Check::new(
        "chiral-hopf",
        "chiral map closed form and diagonal gauge invariance",
        chiral,
        1e-12,
    ));

    SuiteReport {
        suite: "hopf-maps".into(),
        checks,
        wall_time: start.elapsed().as_secs_f64(),
    }
}

/// Decomposition suite: Gauss, Euler and direct-exponential routes to the
/// Sp(4;R) squeeze matrix agree pairwise on a grid^4 parameter lattice,
/// plus the Sp(2;R) analogues and the H^{4,3} element specializations.
pub fn decomposition_suite(grid: usize) -> SuiteReport {
    let start = Instant::now();
    let mut checks = Vec::new();

    let mut gauss_vs_closed = 0.0f64;
    let mut euler_vs_closed = 0.0f64;
    let mut exp_vs_closed = 0.0f64;
    let mut schwinger_split = 0.0f64;
    let n = grid.max(2);
    for it in 0..n {
        // open grid in theta avoiding the Gauss singularity at pi
        let theta = 2.4 * (it as f64) / (n as f64 - 1.0);
        for ir in 0..n {
            let rho = 1.5 * (ir as f64) / (n as f64 - 1.0);
            for ic in 0..n {
                let chi = 2.0 * PI * (ic as f64) / (n as f64);
                for ip in 0..n {
                    let phi = 2.0 * PI * (ip as f64) / (n as f64);
                    let p = H22Params::new(theta, rho, chi, phi).unwrap();
                    let closed = sp4_dirac_squeeze(&p).m;
                    let (u, d, l) = gauss_decompose_sp4(&p).unwrap();
                    gauss_vs_closed =
                        gauss_vs_closed.max(frob_dist(&(&u * &d * &l), &closed).unwrap());
                    let (h, core) = euler_decompose(&p);
                    let hinv = h.clone().try_inverse().unwrap();
                    euler_vs_closed =
                        euler_vs_closed.max(frob_dist(&(&h * &core * hinv), &closed).unwrap());
                    let direct = sp4_dirac_squeeze_exp(&p).unwrap();
                    exp_vs_closed = exp_vs_closed.max(frob_dist(&direct, &closed).unwrap());
                    let schwinger = sp4_schwinger_squeeze(&p).m;
                    schwinger_split =
                        schwinger_split.max(frob_dist(&schwinger, &(&h * &core)).unwrap());
                }
            }
        }
    }
    checks.push(Check::new(
        "sp4-gauss",
        "Gauss UDL product equals the closed-form squeeze matrix",
        gauss_vs_closed,
        1e-12,
    ));
    checks.push(Check::new(
        "sp4-euler",
        "Euler decomposition H e^{i t s35} H^{-1} equals the closed form",
        euler_vs_closed,
        1e-12,
    ));
    checks.push(Check::new(
        "sp4-exponential",
        "direct exponential exp(i t y_m s^{m5}) equals the closed form",
        exp_vs_closed,
        1e-12,
    ));
    checks.push(Check::new(
        "sp4-schwinger-factorization",
        "Schwinger matrix equals H e^{i t s35}",
        schwinger_split,
        1e-12,
    ));

    // Sp(2;R) Gauss parameters against the faithful representation.
    let mut sp2_gauss = 0.0f64;
    for ir in 0..8 {
        let rho = 0.2 + 1.4 * (ir as f64) / 7.0;
        for ip in 0..8 {
            let phi = 2.0 * PI * (ip as f64) / 8.0;
            let p = Sp2SqueezeParams::new(rho, phi, 0.0).unwrap();
            let (a, b, g) = gauss_params_sp2(&p, SqueezeKind::Dirac);
            sp2_gauss = sp2_gauss.max(
                frob_dist(&faithful_rep_product(a, b, g), &sp2_dirac_squeeze(&p)).unwrap(),
            );
            let (a, b, g) = gauss_params_sp2(&p, SqueezeKind::Schwinger);
            sp2_gauss = sp2_gauss.max(
                frob_dist(&faithful_rep_product(a, b, g), &sp2_schwinger_squeeze(&p)).unwrap(),
            );
            sp2_gauss = sp2_gauss
                .max(frob_dist(&sp2_dirac_squeeze_exp(&p).unwrap(), &sp2_dirac_squeeze(&p)).unwrap());
        }
    }
    checks.push(Check::new(
        "sp2-gauss",
        "Sp(2;R) UDL coefficients reproduce both squeeze matrices",
        sp2_gauss,
        1e-12,
    ));

    // H^{4,3} element specializations.
    let mut h43 = 0.0f64;
    for it in 1..4 {
        let p = H22Params::new(0.7 * it as f64, 0.4 * it as f64, 1.0, 0.6).unwrap();
        let g_s = h43_element(p.rho, p.chi, p.phi, p.theta, 0.0, 0.0, 0.0).unwrap();
        h43 = h43.max(frob_dist(&g_s, &sp4_schwinger_squeeze(&p).m).unwrap());
        let g_d = h43_element(p.rho, p.chi, p.phi, p.theta, -p.rho, -p.chi, -p.phi).unwrap();
        h43 = h43.max(frob_dist(&g_d, &sp4_dirac_squeeze(&p).m).unwrap());
    }
    checks.push(Check::new(
        "h43-specializations",
        "H^{4,3} element reproduces the Schwinger and Dirac squeeze matrices",
        h43,
        1e-12,
    ));

    // Hopf-spinor matrix: determinant, metric gram, coordinate extraction.
    let mut spinmat = 0.0f64;
    let fam = build_family();
    for it in 0..5 {
        let p = H22Params::new(0.3 + 0.5 * it as f64, 0.9, 2.0, 0.8).unwrap();
        let m = hopf_spinor_matrix(&p).unwrap();
        spinmat = spinmat.max((det(&m) - cr(1.0)).norm());
        spinmat = spinmat.max(frob_dist(&(dagger(&m) * &fam.k * &m), &fam.k).unwrap());
        let x = hopf_spinor_coordinates(&m);
        let expected = p.x();
        for a in 0..5 {
            spinmat = spinmat.max((x[a] - expected[a]).abs());
        }
        spinmat = spinmat.max((H22Point::split_norm(&x) - 1.0).abs());
    }
    checks.push(Check::new(
        "hopf-spinor-matrix",
        "unit determinant, k-orthonormal columns, coordinate extraction",
        spinmat,
        1e-12,
    ));

    SuiteReport {
        suite: "decompositions".into(),
        checks,
        wall_time: start.elapsed().as_secs_f64(),
    }
}

/// Symplectic / Bogoliubov structure suite for n = 1 and n = 2.
pub fn symplectic_suite(samples: usize, seed: u64) -> SuiteReport {
    let start = Instant::now();
    let mut checks = Vec::new();
    for n in [1usize, 2] {
        match symplectic_checks(n, samples.max(1), seed) {
            Ok(report) => {
                checks.push(Check::new(
                    &format!("symplectic-n{n}-boson"),
                    "g'^dag K g' = K and boson Bogoliubov block conditions",
                    report.boson_metric_residual.max(report.boson_block_residual),
                    1e-11,
                ));
                checks.push(Check::new(
                    &format!("symplectic-n{n}-fermion"),
                    "g'^dag g' = 1 and fermion block conditions",
                    report
                        .fermion_unitarity_residual
                        .max(report.fermion_block_residual),
                    1e-11,
                ));
                checks.push(Check::new(
                    &format!("symplectic-n{n}-dimension"),
                    "generator parameter count equals n(2n+1)",
                    (report.parameter_count as f64 - (n * (2 * n + 1)) as f64).abs(),
                    0.0,
                ));
            }
            Err(e) => checks.push(Check::new(
                &format!("symplectic-n{n}"),
                &format!("failed to run: {e}"),
                f64::INFINITY,
                1e-11,
            )),
        }
    }
    SuiteReport {
        suite: "symplectic".into(),
        checks,
        wall_time: start.elapsed().as_secs_f64(),
    }
}

/// Union of all identity suites, as driven by the CLI. With `samples` = 0
/// only the exact suite runs.
pub fn identity_suites(samples: usize, seed: u64) -> Vec<SuiteReport> {
    let mut reports = vec![exact_algebra_suite()];
    if samples > 0 {
        reports.push(hopf_map_suite(samples, seed));
        reports.push(decomposition_suite(4));
        reports.push(symplectic_suite(samples, seed));
    }
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_suite_passes() {
        let report = exact_algebra_suite();
        for c in &report.checks {
            assert!(c.pass(), "{}: residual {} > {}", c.id, c.residual, c.tolerance);
        }
    }

    #[test]
    fn sampled_suites_pass() {
        let hopf = hopf_map_suite(25, crate::DEFAULT_SEED);
        assert!(hopf.pass(), "{:#?}", hopf.checks);
        let sym = symplectic_suite(10, crate::DEFAULT_SEED);
        assert!(sym.pass(), "{:#?}", sym.checks);
    }

    #[test]
    fn decomposition_suite_passes() {
        let report = decomposition_suite(3);
        for c in &report.checks {
            assert!(c.pass(), "{}: residual {} > {}", c.id, c.residual, c.tolerance);
        }
    }
}
