//! Command-line front end.
//!
//! Three subcommands: `identities` runs the matrix identity suites and
//! reports every residual; `squeeze` dumps number-basis amplitudes of a
//! squeezed-state family together with its truncation tail bound and the
//! fidelity against the unitary-route oracle; `moments` tabulates
//! quadrature variances (and optionally the concurrence) over parameter
//! grids as plot-ready CSV.
//!
//! Exit codes: 0 pass, 1 check failure, 2 usage error, 3 resource limit.
//! Output is deterministic byte-for-byte for fixed flags and seed; numbers
//! are printed with 17 significant digits.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use hypersqueeze::fock::{
    concurrence_theta, sp4_ops, sp4_squeeze, sp4_squeezed_onephoton, sp4_squeezed_vacuum,
    squeezed_moments, squeezed_number_state, su11_ops, su11_squeeze, FockSpace, FockState,
    PhotonSlot, QuadratureScheme, Sp2StateFamily, Sp4Realization, Su11Realization,
};
use hypersqueeze::so23::H22Params;
use hypersqueeze::sp2r::Sp2SqueezeParams;
use hypersqueeze::suites;
use hypersqueeze::SqueezeKind;

const EXIT_CHECK_FAILURE: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_RESOURCE: i32 = 3;

/// Grid points x space dimension budget for the moments command.
const MOMENTS_BUDGET: usize = 200_000;

#[derive(Parser)]
#[command(name = "hypersqueeze", version, about = "Sp(2;R)/Sp(4;R) squeezing toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Single-mode squeezed vacuum |xi>_(0)
    Sp2Vacuum,
    /// Single-mode squeezed one-photon state |xi>_(1)
    Sp2Onephoton,
    /// Two-mode Sp(2;R) squeezed vacuum |xi>_(0,0)
    Sp2TmVacuum,
    /// Sp(4;R) two-mode Schwinger-type squeezed vacuum
    Sp4TmVacuum,
    /// Sp(4;R) two-mode squeezed one-photon state (use --slot)
    Sp4TmOnephoton,
    /// Sp(4;R) four-mode Schwinger-type squeezed vacuum
    Sp4FmVacuum,
    /// Sp(4;R) four-mode squeezed one-photon state (use --slot)
    Sp4FmOnephoton,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Slot {
    A,
    B,
    C,
    D,
}

impl Slot {
    fn photon_slot(self) -> PhotonSlot {
        match self {
            Slot::A => PhotonSlot::ModeA,
            Slot::B => PhotonSlot::ModeB,
            Slot::C => PhotonSlot::ModeC,
            Slot::D => PhotonSlot::ModeD,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Dirac,
    Schwinger,
}

impl Kind {
    fn squeeze_kind(self) -> SqueezeKind {
        match self {
            Kind::Dirac => SqueezeKind::Dirac,
            Kind::Schwinger => SqueezeKind::Schwinger,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scheme {
    TwoMode,
    FourMode,
}

impl Scheme {
    fn quadrature_scheme(self) -> QuadratureScheme {
        match self {
            Scheme::TwoMode => QuadratureScheme::TwoMode,
            Scheme::FourMode => QuadratureScheme::FourMode,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run exact and randomized matrix identity suites
    Identities {
        /// Random samples per suite; 0 runs only the exact identities
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// RNG seed (default fixed; HYPERSQUEEZE_SEED overrides it)
        #[arg(long)]
        seed: Option<u64>,
        /// Override every check tolerance (must be > 0)
        #[arg(long, allow_hyphen_values = true)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output path (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit number-basis amplitudes of a squeezed state
    Squeeze {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        #[arg(long, default_value_t = 0.0)]
        rho: f64,
        #[arg(long, default_value_t = 0.0)]
        chi: f64,
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
        /// Photon slot for the one-photon families
        #[arg(long, value_enum, default_value_t = Slot::A)]
        slot: Slot,
        /// Per-mode cutoff (defaults: 40 for 1-2 modes, 7 for 4 modes)
        #[arg(long)]
        cutoff: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate squeezed-vacuum moments (or a concurrence sweep) on grids
    Moments {
        /// theta grid: "v" or "start:end:count"
        #[arg(long, default_value = "0")]
        theta: String,
        #[arg(long, default_value = "1.0")]
        rho: String,
        #[arg(long, default_value = "0")]
        chi: String,
        #[arg(long, default_value = "0")]
        phi: String,
        #[arg(long = "type", value_enum, default_value_t = Kind::Schwinger)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Scheme::TwoMode)]
        scheme: Scheme,
        #[arg(long)]
        cutoff: Option<usize>,
        /// Emit a theta, concurrence sweep instead of the moment table
        #[arg(long)]
        concurrence: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: msg.into(),
        }
    }

    fn resource(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_RESOURCE,
            message: msg.into(),
        }
    }
}

impl From<hypersqueeze::Error> for Failure {
    fn from(e: hypersqueeze::Error) -> Self {
        let code = match e {
            hypersqueeze::Error::Resource(_) => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// 17 significant digits, locale-independent.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn default_seed() -> u64 {
    std::env::var("HYPERSQUEEZE_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(hypersqueeze::DEFAULT_SEED)
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(|e| Failure {
            code: EXIT_RESOURCE,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes()).map_err(|e| Failure {
                code: EXIT_RESOURCE,
                message: e.to_string(),
            })
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Identities {
            samples,
            seed,
            tol,
            format,
            out,
        } => cmd_identities(samples, seed, tol, format, out),
        Command::Squeeze {
            family,
            theta,
            rho,
            chi,
            phi,
            slot,
            cutoff,
            format,
            out,
        } => cmd_squeeze(family, theta, rho, chi, phi, slot, cutoff, format, out),
        Command::Moments {
            theta,
            rho,
            chi,
            phi,
            kind,
            scheme,
            cutoff,
            concurrence,
            format,
            out,
        } => cmd_moments(
            &theta,
            &rho,
            &chi,
            &phi,
            kind,
            scheme,
            cutoff,
            concurrence,
            format,
            out,
        ),
    }
}

fn cmd_identities(
    samples: usize,
    seed: Option<u64>,
    tol: Option<f64>,
    format: Format,
    out: Option<PathBuf>,
) -> Result<i32, Failure> {
    if let Some(t) = tol {
        if !(t > 0.0) {
            return Err(Failure::usage(format!(
                "--tol must be a positive number, got {t}"
            )));
        }
    }
    let seed = seed.unwrap_or_else(default_seed);
    let mut reports = suites::identity_suites(samples, seed);
    if let Some(t) = tol {
        for report in &mut reports {
            for check in &mut report.checks {
                check.tolerance = t;
            }
        }
    }
    let all_pass = reports.iter().all(|r| r.pass());

    let content = match format {
        Format::Json => {
            let suites_json: Vec<_> = reports
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.suite,
                        "pass": r.pass(),
                        "wall_time_s": r.wall_time,
                        "checks": r.checks.iter().map(|c| json!({
                            "id": c.id,
                            "description": c.description,
                            "residual": c.residual,
                            "tolerance": c.tolerance,
                            "pass": c.pass(),
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = json!({
                "schema": 1,
                "seed": seed,
                "samples": samples,
                "pass": all_pass,
                "suites": suites_json,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
        }
        Format::Csv => {
            let mut s = String::from("suite,id,residual,tolerance,pass\r\n");
            for r in &reports {
                for c in &r.checks {
                    s.push_str(&format!(
                        "{},{},{},{},{}\r\n",
                        r.suite,
                        c.id,
                        num(c.residual),
                        num(c.tolerance),
                        c.pass()
                    ));
                }
            }
            s
        }
    };
    emit(&out, &content)?;
    Ok(if all_pass { 0 } else { EXIT_CHECK_FAILURE })
}

struct StateDump {
    family: &'static str,
    modes: usize,
    cutoff: usize,
    state: FockState,
    tail: f64,
    oracle_fidelity: f64,
}

#[allow(clippy::too_many_arguments)]
fn build_state(
    family: Family,
    theta: f64,
    rho: f64,
    chi: f64,
    phi: f64,
    slot: Slot,
    cutoff: Option<usize>,
) -> Result<StateDump, Failure> {
    let modes = match family {
        Family::Sp2Vacuum | Family::Sp2Onephoton => 1,
        Family::Sp2TmVacuum | Family::Sp4TmVacuum | Family::Sp4TmOnephoton => 2,
        Family::Sp4FmVacuum | Family::Sp4FmOnephoton => 4,
    };
    let cutoff = cutoff.unwrap_or(if modes == 4 { 7 } else { 40 });
    let space = FockSpace::new(modes, cutoff)?;

    let (name, state, tail, oracle): (&'static str, FockState, f64, FockState) = match family {
        Family::Sp2Vacuum | Family::Sp2Onephoton => {
            let n = if family == Family::Sp2Vacuum { 0 } else { 1 };
            let p = Sp2SqueezeParams::new(rho, phi, 0.0)?;
            let (state, tail) =
                squeezed_number_state(space, &p, &[n], Sp2StateFamily::OneMode)?;
            let ops = su11_ops(space, Su11Realization::OneMode)?;
            let oracle =
                su11_squeeze(&ops, p.rho, p.phi, SqueezeKind::Dirac).apply_to_basis(&[n])?;
            let name = if n == 0 { "sp2-vacuum" } else { "sp2-onephoton" };
            (name, state, tail, oracle)
        }
        Family::Sp2TmVacuum => {
            let p = Sp2SqueezeParams::new(rho, phi, 0.0)?;
            let (state, tail) =
                squeezed_number_state(space, &p, &[0, 0], Sp2StateFamily::TwoMode)?;
            let ops = su11_ops(space, Su11Realization::TwoMode)?;
            let oracle =
                su11_squeeze(&ops, p.rho, p.phi, SqueezeKind::Dirac).apply_to_basis(&[0, 0])?;
            ("sp2-tm-vacuum", state, tail, oracle)
        }
        Family::Sp4TmVacuum | Family::Sp4TmOnephoton | Family::Sp4FmVacuum
        | Family::Sp4FmOnephoton => {
            let p = H22Params::new(theta, rho, chi, phi)?;
            let realization = if modes == 2 {
                Sp4Realization::Majorana
            } else {
                Sp4Realization::Dirac
            };
            let (name, state, tail, occ): (&'static str, FockState, f64, Vec<usize>) =
                match family {
                    Family::Sp4TmVacuum => {
                        let (s, t) = sp4_squeezed_vacuum(space, &p, realization)?;
                        ("sp4-tm-vacuum", s, t, vec![0, 0])
                    }
                    Family::Sp4FmVacuum => {
                        let (s, t) = sp4_squeezed_vacuum(space, &p, realization)?;
                        ("sp4-fm-vacuum", s, t, vec![0, 0, 0, 0])
                    }
                    Family::Sp4TmOnephoton | Family::Sp4FmOnephoton => {
                        let (s, t) = sp4_squeezed_onephoton(space, &p, slot.photon_slot())?;
                        let mut occ = vec![0usize; modes];
                        let slot_idx = match slot {
                            Slot::A => 0,
                            Slot::B => 1,
                            Slot::C => 2,
                            Slot::D => 3,
                        };
                        occ[slot_idx] = 1;
                        let name = if modes == 2 {
                            "sp4-tm-onephoton"
                        } else {
                            "sp4-fm-onephoton"
                        };
                        (name, s, t, occ)
                    }
                    _ => unreachable!(),
                };
            let ops = sp4_ops(space, realization)?;
            let oracle = sp4_squeeze(&ops, &p, SqueezeKind::Schwinger).apply_to_basis(&occ)?;
            (name, state, tail, oracle)
        }
    };
    let oracle_fidelity = state.fidelity(&oracle)?;
    Ok(StateDump {
        family: name,
        modes,
        cutoff,
        state,
        tail,
        oracle_fidelity,
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_squeeze(
    family: Family,
    theta: f64,
    rho: f64,
    chi: f64,
    phi: f64,
    slot: Slot,
    cutoff: Option<usize>,
    format: Format,
    out: Option<PathBuf>,
) -> Result<i32, Failure> {
    let dump = build_state(family, theta, rho, chi, phi, slot, cutoff)?;
    let space = dump.state.space;
    let rows: Vec<(Vec<usize>, Complex64)> = (0..space.dim())
        .filter_map(|j| {
            let z = dump.state.amps[j];
            (z.norm_sqr() > 0.0).then(|| (space.occupation(j), z))
        })
        .collect();

    let content = match format {
        Format::Json => {
            let doc = json!({
                "schema": 1,
                "family": dump.family,
                "modes": dump.modes,
                "cutoff": dump.cutoff,
                "params": { "theta": theta, "rho": rho, "chi": chi, "phi": phi },
                "tail_bound": dump.tail,
                "oracle_fidelity": dump.oracle_fidelity,
                "norm": dump.state.norm(),
                "amplitudes": rows.iter().map(|(occ, z)| json!({
                    "index": occ,
                    "re": z.re,
                    "im": z.im,
                    "prob": z.norm_sqr(),
                })).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
        }
        Format::Csv => {
            let mut s = String::new();
            let idx_cols: Vec<String> = (1..=dump.modes).map(|m| format!("n{m}")).collect();
            s.push_str(&format!(
                "{},re,im,prob,tail_bound,oracle_fidelity\r\n",
                idx_cols.join(",")
            ));
            for (occ, z) in &rows {
                let occ_str: Vec<String> = occ.iter().map(|n| n.to_string()).collect();
                s.push_str(&format!(
                    "{},{},{},{},{},{}\r\n",
                    occ_str.join(","),
                    num(z.re),
                    num(z.im),
                    num(z.norm_sqr()),
                    num(dump.tail),
                    num(dump.oracle_fidelity)
                ));
            }
            s
        }
    };
    emit(&out, &content)?;
    Ok(0)
}

/// Grid spec: "v" for a single value, "start:end:count" for an inclusive
/// linspace.
fn parse_grid(spec: &str) -> Result<Vec<f64>, Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        [v] => {
            let x: f64 = v
                .trim()
                .parse()
                .map_err(|_| Failure::usage(format!("bad grid value '{spec}'")))?;
            Ok(vec![x])
        }
        [a, b, n] => {
            let start: f64 = a
                .trim()
                .parse()
                .map_err(|_| Failure::usage(format!("bad grid start in '{spec}'")))?;
            let end: f64 = b
                .trim()
                .parse()
                .map_err(|_| Failure::usage(format!("bad grid end in '{spec}'")))?;
            let count: usize = n
                .trim()
                .parse()
                .map_err(|_| Failure::usage(format!("bad grid count in '{spec}'")))?;
            if count < 2 {
                return Err(Failure::usage("grid count must be >= 2"));
            }
            Ok((0..count)
                .map(|i| start + (end - start) * i as f64 / (count - 1) as f64)
                .collect())
        }
        _ => Err(Failure::usage(format!(
            "grid spec '{spec}' is neither 'v' nor 'start:end:count'"
        ))),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_moments(
    theta: &str,
    rho: &str,
    chi: &str,
    phi: &str,
    kind: Kind,
    scheme: Scheme,
    cutoff: Option<usize>,
    concurrence: bool,
    format: Format,
    out: Option<PathBuf>,
) -> Result<i32, Failure> {
    let thetas = parse_grid(theta)?;
    let rhos = parse_grid(rho)?;
    let chis = parse_grid(chi)?;
    let phis = parse_grid(phi)?;

    if concurrence {
        // c = |sin theta| sweep: formula-level, no Fock space needed.
        let content = match format {
            Format::Csv => {
                let mut s = String::from("theta,c\r\n");
                for &t in &thetas {
                    s.push_str(&format!("{},{}\r\n", num(t), num(concurrence_theta(t))));
                }
                s
            }
            Format::Json => {
                let doc = json!({
                    "schema": 1,
                    "sweep": "concurrence",
                    "rows": thetas.iter().map(|&t| json!({
                        "theta": t,
                        "c": concurrence_theta(t),
                    })).collect::<Vec<_>>(),
                });
                format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
            }
        };
        emit(&out, &content)?;
        return Ok(0);
    }

    let q_scheme = scheme.quadrature_scheme();
    let modes = q_scheme.modes();
    let cutoff = cutoff.unwrap_or(if modes == 4 { 7 } else { 40 });
    let space = FockSpace::new(modes, cutoff)?;
    let points = thetas.len() * rhos.len() * chis.len() * phis.len();
    if points * space.dim() > MOMENTS_BUDGET {
        return Err(Failure::resource(format!(
            "grid of {points} points at dimension {} exceeds the budget ({} > {MOMENTS_BUDGET}); \
             shrink the grid or the cutoff",
            space.dim(),
            points * space.dim()
        )));
    }

    let mut reports = Vec::with_capacity(points);
    for &t in &thetas {
        for &r in &rhos {
            for &x in &chis {
                for &f in &phis {
                    let p = H22Params::new(t, r, x, f)?;
                    let report = squeezed_moments(space, &p, kind.squeeze_kind(), q_scheme)?;
                    reports.push(((t, r, x, f), report));
                }
            }
        }
    }

    let kind_str = kind.squeeze_kind().to_string();
    let scheme_str = q_scheme.to_string();
    let content = match format {
        Format::Csv => {
            let mut s = String::from(
                "theta,rho,chi,phi,type,scheme,var1,var2,var3,var4,prod12,prod34,\
                 closed_var1,closed_var2,closed_var3,closed_var4,max_residual\r\n",
            );
            for ((t, r, x, f), rep) in &reports {
                s.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\r\n",
                    num(*t),
                    num(*r),
                    num(*x),
                    num(*f),
                    kind_str,
                    scheme_str,
                    num(rep.variances[0]),
                    num(rep.variances[1]),
                    num(rep.variances[2]),
                    num(rep.variances[3]),
                    num(rep.products[0]),
                    num(rep.products[1]),
                    num(rep.closed_variances[0]),
                    num(rep.closed_variances[1]),
                    num(rep.closed_variances[2]),
                    num(rep.closed_variances[3]),
                    num(rep.max_residual)
                ));
            }
            s
        }
        Format::Json => {
            let doc = json!({
                "schema": 1,
                "type": kind_str,
                "scheme": scheme_str,
                "cutoff": cutoff,
                "rows": reports.iter().map(|((t, r, x, f), rep)| json!({
                    "theta": t, "rho": r, "chi": x, "phi": f,
                    "variances": rep.variances.to_vec(),
                    "products": rep.products.to_vec(),
                    "closed_variances": rep.closed_variances.to_vec(),
                    "max_residual": rep.max_residual,
                })).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
        }
    };
    emit(&out, &content)?;
    Ok(0)
}
