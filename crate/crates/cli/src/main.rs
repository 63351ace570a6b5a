//! Command-line surface over the verification library.
//!
//! Exit codes: 0 when every mathematical assertion passes, 1 when a
//! well-posed mathematical check fails, 2 for malformed input or I/O
//! failures. No other codes are produced.

use clap::{Parser, Subcommand, ValueEnum};
use prelie_core::deformation::{
    cohomology_dims, deformation_report, is_nijenhuis, is_weak_homomorphism, scan_nijenhuis,
    Complex,
};
use prelie_core::exactla::{format_rat, parse_rat, Rat};
use prelie_core::files::{AlgebraFile, PhaseSpaceFile, TensorFile};
use prelie_core::phasespace::{build_phase_space, verify_phase_space_raw};
use prelie_core::prelie::{verify_lie, verify_pre_lie, PreLieAlgebra};
use prelie_core::smatrix::{is_s_matrix, pseudo_hessian, SymTensor2};
use prelie_core::{Error, Report};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "prelie",
    version,
    about = "Exact verifier for pre-Lie algebras, s-matrices and phase spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplexArg {
    Full,
    Subcomplex,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a pre-Lie or Lie algebra file, optionally an s-matrix on it,
    /// or a previously exported phase-space file.
    Verify {
        #[arg(long)]
        algebra: Option<PathBuf>,
        #[arg(long)]
        r: Option<PathBuf>,
        #[arg(long = "phase-space")]
        phase_space: Option<PathBuf>,
    },
    /// Cohomology dimensions of an s-matrix up to a degree.
    Cohomology {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        r: PathBuf,
        #[arg(long = "max-degree", default_value_t = 3)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = ComplexArg::Subcomplex)]
        complex: ComplexArg,
    },
    /// Build the phase space of an s-matrix and export it.
    PhaseSpace {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        r: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Probe a direction κ as a one-parameter deformation of r.
    Deform {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        r: PathBuf,
        #[arg(long)]
        kappa: PathBuf,
    },
    /// Check a Nijenhuis element, or scan small candidates without --x.
    Nijenhuis {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        r: PathBuf,
        /// Comma-separated rational coordinates, e.g. "1,0,-1/2".
        #[arg(long)]
        x: Option<String>,
    },
    /// Pseudo-Hessian form of an invertible s-matrix.
    PseudoHessian {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        r: PathBuf,
    },
    /// Weak homomorphism check between two s-matrices.
    WeakHom {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        r: PathBuf,
        #[arg(long)]
        r2: PathBuf,
        #[arg(long)]
        phi: PathBuf,
        #[arg(long)]
        varphi: PathBuf,
    },
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))
}

fn load_pre_lie(path: &Path) -> Result<PreLieAlgebra, Error> {
    let file = AlgebraFile::parse(&read(path)?)?;
    if file.kind != "pre-lie" {
        return Err(Error::input(format!(
            "{} holds a {:?} algebra; a pre-Lie algebra is required here",
            path.display(),
            file.kind
        )));
    }
    PreLieAlgebra::new(file.to_cube()?)
}

fn load_sym_tensor(path: &Path, dim: usize) -> Result<SymTensor2, Error> {
    let t = TensorFile::parse(&read(path)?)?.to_sym_tensor()?;
    if t.dim() != dim {
        return Err(Error::input(format!(
            "{} has dimension {}, expected {dim}",
            path.display(),
            t.dim()
        )));
    }
    Ok(t)
}

fn parse_vector(spec: &str, dim: usize) -> Result<Vec<Rat>, Error> {
    let coords: Result<Vec<Rat>, Error> = spec.split(',').map(|p| parse_rat(p)).collect();
    let coords = coords?;
    if coords.len() != dim {
        return Err(Error::input(format!(
            "expected {dim} coordinates, got {}",
            coords.len()
        )));
    }
    Ok(coords)
}

fn emit(format: Format, command: &str, reports: &[Report], extra: serde_json::Value) {
    match format {
        Format::Text => {
            for report in reports {
                println!("{}", report.summary());
            }
            if let Some(map) = extra.as_object() {
                for (key, value) in map {
                    match value.as_str() {
                        Some(s) => println!("{key}: {s}"),
                        None => println!("{key}: {value}"),
                    }
                }
            }
        }
        Format::Structured => {
            let pass = reports.iter().all(|r| r.pass);
            let doc = json!({
                "command": command,
                "pass": pass,
                "reports": reports,
                "data": extra,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            );
        }
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    let format = cli.format;
    match cli.command {
        Command::Verify {
            algebra,
            r,
            phase_space,
        } => {
            let mut reports = Vec::new();
            if let Some(ps_path) = phase_space {
                let file = PhaseSpaceFile::parse(&read(&ps_path)?)?;
                let report = verify_phase_space_raw(
                    file.split,
                    &file.to_bracket_cube()?,
                    &file.to_omega_matrix()?,
                );
                reports.push(report);
            } else {
                let Some(algebra_path) = algebra else {
                    return Err(Error::input("verify needs --algebra or --phase-space"));
                };
                let file = AlgebraFile::parse(&read(&algebra_path)?)?;
                let cube = file.to_cube()?;
                let report = match file.kind.as_str() {
                    "pre-lie" => verify_pre_lie(&cube)?,
                    _ => verify_lie(&cube)?,
                };
                let algebra_ok = report.pass;
                reports.push(report);
                if let Some(r_path) = r {
                    if file.kind != "pre-lie" {
                        return Err(Error::input("s-matrix checks need a pre-Lie algebra"));
                    }
                    if algebra_ok {
                        let a = PreLieAlgebra::new(cube)?;
                        let tensor = load_sym_tensor(&r_path, a.dim())?;
                        reports.push(is_s_matrix(&a, &tensor)?);
                    }
                }
            }
            let pass = reports.iter().all(|r| r.pass);
            emit(format, "verify", &reports, json!({}));
            Ok(if pass { 0 } else { 1 })
        }
        Command::Cohomology {
            algebra,
            r,
            max_degree,
            complex,
        } => {
            let a = load_pre_lie(&algebra)?;
            let tensor = load_sym_tensor(&r, a.dim())?;
            let which = match complex {
                ComplexArg::Full => Complex::Full,
                ComplexArg::Subcomplex => Complex::Subcomplex,
            };
            let dims = cohomology_dims(&a, &tensor, max_degree, which)?;
            let name = match which {
                Complex::Full => "H",
                Complex::Subcomplex => "H~",
            };
            let mut table = serde_json::Map::new();
            for (k, d) in dims.iter().enumerate() {
                table.insert(format!("{name}{}", k + 1), json!(d));
            }
            emit(format, "cohomology", &[], serde_json::Value::Object(table));
            Ok(0)
        }
        Command::PhaseSpace { algebra, r, out } => {
            let a = load_pre_lie(&algebra)?;
            let tensor = load_sym_tensor(&r, a.dim())?;
            let ps = build_phase_space(&a, &tensor)?;
            let file = PhaseSpaceFile::from_phase_space(&ps);
            let json_text = file.to_json();
            std::fs::write(&out, &json_text)
                .map_err(|e| Error::input(format!("cannot write {}: {e}", out.display())))?;
            // round-trip check on what actually landed on disk
            let reread = PhaseSpaceFile::parse(&read(&out)?)?;
            let report = verify_phase_space_raw(
                reread.split,
                &reread.to_bracket_cube()?,
                &reread.to_omega_matrix()?,
            );
            assert!(report.pass, "exported phase space failed re-verification");
            assert_eq!(
                reread.to_json(),
                json_text,
                "export must round-trip byte-identically"
            );
            emit(
                format,
                "phase-space",
                &[report],
                json!({ "out": out.display().to_string(), "dim": file.dim, "split": file.split }),
            );
            Ok(0)
        }
        Command::Deform { algebra, r, kappa } => {
            let a = load_pre_lie(&algebra)?;
            let tensor = load_sym_tensor(&r, a.dim())?;
            let direction = load_sym_tensor(&kappa, a.dim())?;
            let rep = deformation_report(&a, &tensor, &direction)?;
            let class = rep
                .cohomology_class
                .as_ref()
                .map(|v| v.iter().map(format_rat).collect::<Vec<_>>());
            emit(
                format,
                "deform",
                &[],
                json!({
                    "two_cocycle": rep.is_two_cocycle,
                    "full_deformation": rep.is_full_deformation,
                    "cohomology_class": class,
                }),
            );
            Ok(if rep.is_full_deformation { 0 } else { 1 })
        }
        Command::Nijenhuis { algebra, r, x } => {
            let a = load_pre_lie(&algebra)?;
            let tensor = load_sym_tensor(&r, a.dim())?;
            match x {
                Some(spec) => {
                    let v = parse_vector(&spec, a.dim())?;
                    let report = is_nijenhuis(&a, &tensor, &v)?;
                    let pass = report.pass;
                    emit(format, "nijenhuis", &[report], json!({}));
                    Ok(if pass { 0 } else { 1 })
                }
                None => {
                    let found = scan_nijenhuis(&a, &tensor)?;
                    let rendered: Vec<String> = found
                        .iter()
                        .map(|v| v.iter().map(format_rat).collect::<Vec<_>>().join(","))
                        .collect();
                    emit(
                        format,
                        "nijenhuis",
                        &[],
                        json!({ "nijenhuis_elements": rendered }),
                    );
                    Ok(0)
                }
            }
        }
        Command::PseudoHessian { algebra, r } => {
            let a = load_pre_lie(&algebra)?;
            let tensor = load_sym_tensor(&r, a.dim())?;
            let form = pseudo_hessian(&a, &tensor)?;
            let rows: Vec<Vec<String>> = (0..form.dim)
                .map(|i| {
                    (0..form.dim)
                        .map(|j| format_rat(&form.matrix[(i, j)]))
                        .collect()
                })
                .collect();
            emit(format, "pseudo-hessian", &[], json!({ "matrix": rows }));
            Ok(0)
        }
        Command::WeakHom {
            algebra,
            r,
            r2,
            phi,
            varphi,
        } => {
            let a = load_pre_lie(&algebra)?;
            let r1 = load_sym_tensor(&r, a.dim())?;
            let r2 = load_sym_tensor(&r2, a.dim())?;
            let phi = TensorFile::parse(&read(&phi)?)?.to_matrix()?;
            let varphi = TensorFile::parse(&read(&varphi)?)?.to_matrix()?;
            let report = is_weak_homomorphism(&a, &r1, &r2, &phi, &varphi)?;
            let pass = report.pass;
            emit(format, "weak-hom", &[report], json!({}));
            Ok(if pass { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_class() as u8)
        }
    }
}
