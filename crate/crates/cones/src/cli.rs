//! The file-driven front end behind the `cones` binary.
//!
//! Exit codes: 0 all verdicts as asserted, 1 a verdict failed, 2 a
//! parse or usage error, 3 unknown verdicts present. Reports go to
//! stdout and are byte-stable for identical inputs; timing goes to
//! stderr.

use crate::backend::MonoidBackend;
use crate::corpus;

use crate::equations::{find_refinement_matrix, solve_system, Equation, EquationSystem};
use crate::error::{Error, Result};
use crate::extension::{division_extend, wsd_extend};
use crate::finite::{
    all_congruences, antisymmetric_quotient, cancellative_quotient, decompose_multiple,
    meet_in_class, p_torsion_quotient, quotient, separative_quotient, subcone_at, Congruence,
    FiniteMonoid,
};
use crate::format::{self, MonoidDecl, MonoidFile, SystemFile};
use crate::lambda::{wsd_counterexample, wsd_counterexample_search};
use crate::predicates;
use crate::presentation::{ExpVec, PresentedMonoid};
use crate::pset::PSet;
use crate::qcone::RationalCone;
use crate::report::Report;
use clap::{Parser, Subcommand};
use num::BigRational;
use std::path::PathBuf;

/// Ball radius used by the bounded assertions of the step commands.
const STEP_BALL: u32 = 5;

#[derive(Parser)]
#[command(
    name = "cones",
    version,
    about = "Exact-arithmetic workbench for conical commutative monoids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a predicate for a monoid from a description file
    Check {
        file: PathBuf,
        name: String,
        /// conical | cancellative | separative | stably-finite |
        /// antisymmetric | simple | refinement | quasi-divisible |
        /// p-torsion-free | p-unperforated
        predicate: String,
        #[arg(long, default_value_t = 6)]
        bound: u32,
        /// Comma-separated generators of the multiplicative set
        #[arg(long)]
        pset: Option<String>,
    },
    /// Search a refinement matrix for a0 + a1 = b0 + b1
    Refine {
        file: PathBuf,
        name: String,
        a0: String,
        a1: String,
        b0: String,
        b1: String,
        #[arg(long, default_value_t = 6)]
        bound: u32,
    },
    /// Solve an equation system from a file over the named monoid
    Solve {
        file: PathBuf,
        name: String,
        sysfile: PathBuf,
        #[arg(long, default_value_t = 6)]
        bound: u32,
    },
    /// Compute a canonical quotient of a finite monoid and print it
    Quotient {
        file: PathBuf,
        name: String,
        /// cancellative | separative | torsion | antisymmetric
        kind: String,
        /// Comma-separated generators of the multiplicative set (torsion)
        #[arg(long)]
        pset: Option<String>,
    },
    /// Build an extension and report its bounded verification
    Step {
        file: PathBuf,
        name: String,
        #[command(subcommand)]
        kind: StepKind,
    },
    /// Verify the halving-interval example end to end
    Example314 {
        /// Levels of the proper-interval exhaustion
        #[arg(long, default_value_t = 8)]
        max_m: u32,
        /// Doubling depth of the covering claim
        #[arg(long, default_value_t = 6)]
        max_k: u32,
        /// Level range of the covering claim
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        /// Level range of the membership families
        #[arg(long, default_value_t = 6)]
        claim1_max: u32,
    },
    /// Show the lower-set counterexample to weak sum decomposition
    LambdaWsd,
    /// Run the built-in invariant sweep over the bundled corpus
    Corpus,
}

#[derive(Subcommand)]
enum StepKind {
    /// Adjoin a refinement matrix for a0 + a1 = b0 + b1
    Refinement {
        a0: String,
        a1: String,
        b0: String,
        b1: String,
    },
    /// Adjoin u with p*u = a
    Division { a: String, p: u32 },
    /// Adjoin a witness pair for a0 + a1 + c = b + c
    Wsd {
        a0: String,
        a1: String,
        b: String,
        c: String,
    },
}

/// Entry point: parse arguments, run, print, map errors to exit codes.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version with success exits
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let started = std::time::Instant::now();
    match execute(cli.command) {
        Ok(report) => {
            print!("{}", report.render());
            eprintln!("elapsed: {:?}", started.elapsed());
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Verification(_) => 1,
                _ => 2,
            }
        }
    }
}

fn load(path: &PathBuf) -> Result<MonoidFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    format::parse(&text)
}

fn lookup<'f>(file: &'f MonoidFile, name: &str) -> Result<&'f MonoidDecl> {
    file.get(name)
        .ok_or_else(|| Error::Precondition(format!("no monoid named {name} in the file")))
}

fn parse_pset(arg: &Option<String>) -> Result<Option<PSet>> {
    match arg {
        None => Ok(None),
        Some(s) => {
            let mut gens = Vec::new();
            for part in s.split(',') {
                let g: u32 = part.trim().parse().map_err(|_| {
                    Error::Precondition(format!("malformed multiplicative-set generator {part}"))
                })?;
                gens.push(g);
            }
            Ok(Some(PSet::new(gens)?))
        }
    }
}

fn run_predicate<B: MonoidBackend>(
    m: &B,
    predicate: &str,
    bound: u32,
    pset: Option<&PSet>,
    report: &mut Report,
    subject: &str,
) -> Result<()> {
    let need_pset = || -> Result<&PSet> {
        pset.ok_or_else(|| {
            Error::Precondition(format!("{predicate} needs --pset with generators >= 2"))
        })
    };
    let checked = match predicate {
        "conical" => predicates::is_conical(m, bound),
        "cancellative" => predicates::is_cancellative(m, bound),
        "separative" => predicates::is_separative(m, bound),
        "stably-finite" => predicates::is_stably_finite(m, bound),
        "antisymmetric" => predicates::is_antisymmetric(m, bound),
        "simple" => predicates::is_simple(m, bound),
        "refinement" => crate::equations::is_refinement(m, bound),
        "quasi-divisible" => predicates::is_quasi_divisible(m, bound),
        "p-torsion-free" => predicates::is_p_torsion_free(m, need_pset()?, bound),
        "p-unperforated" => predicates::is_p_unperforated(m, need_pset()?, bound),
        other => {
            return Err(Error::Precondition(format!("unknown predicate {other}")));
        }
    };
    report.checked(format!("{predicate}({subject})"), &checked);
    Ok(())
}

fn resolve_finite(m: &FiniteMonoid, s: &str) -> Result<usize> {
    m.index_of(s)
        .ok_or_else(|| Error::Precondition(format!("unknown element {s}")))
}

fn resolve_presented(p: &PresentedMonoid, s: &str) -> Result<ExpVec> {
    format::parse_word(&[s], &p.presentation().generator_names, 0)
}

fn resolve_qcone(c: &RationalCone, s: &str) -> Result<Vec<BigRational>> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != c.dim() {
        return Err(Error::Precondition(format!(
            "element {s} has {} coordinates, expected {}",
            parts.len(),
            c.dim()
        )));
    }
    let mut coords = Vec::with_capacity(parts.len());
    for p in parts {
        let r: BigRational = p
            .trim()
            .parse()
            .map_err(|_| Error::Precondition(format!("malformed rational {p}")))?;
        coords.push(r);
    }
    Ok(coords)
}

fn refine_generic<B: MonoidBackend>(
    m: &B,
    a0: &B::Elem,
    a1: &B::Elem,
    b0: &B::Elem,
    b1: &B::Elem,
    bound: u32,
    report: &mut Report,
) -> Result<()> {
    let instance = format!(
        "({}, {} | {}, {})",
        m.display(a0),
        m.display(a1),
        m.display(b0),
        m.display(b1)
    );
    match find_refinement_matrix(m, a0, a1, b0, b1, bound)? {
        Some(matrix) => {
            report.pass(format!(
                "refinement of {instance}: rows [{} {}] [{} {}]",
                m.display(&matrix.c00),
                m.display(&matrix.c01),
                m.display(&matrix.c10),
                m.display(&matrix.c11)
            ));
        }
        None => {
            if m.summand_complete(bound, a0) && m.summand_complete(bound, a1) {
                report.fail(format!("no refinement matrix exists for {instance}"));
            } else {
                report.unknown(format!(
                    "no refinement matrix for {instance} within bound {bound}"
                ));
            }
        }
    }
    Ok(())
}

fn build_system<B: MonoidBackend>(
    m: &B,
    sys: &SystemFile,
    resolve: impl Fn(&str) -> Result<B::Elem>,
) -> Result<EquationSystem<B::Elem>> {
    let mut equations = Vec::new();
    for eq in &sys.equations {
        let fold = |constants: &[(u32, String)]| -> Result<B::Elem> {
            let mut acc = m.zero();
            for (coeff, name) in constants {
                let v = resolve(name)?;
                acc = m.add(&acc, &m.mul(*coeff, &v));
            }
            Ok(acc)
        };
        equations.push(Equation {
            coeffs_left: eq.lhs.coeffs.clone(),
            const_left: fold(&eq.lhs.constants)?,
            coeffs_right: eq.rhs.coeffs.clone(),
            const_right: fold(&eq.rhs.constants)?,
        });
    }
    EquationSystem::new(sys.unknown_count, equations)
}

fn solve_generic<B: MonoidBackend>(
    m: &B,
    sys: &SystemFile,
    resolve: impl Fn(&str) -> Result<B::Elem>,
    bound: u32,
    report: &mut Report,
) -> Result<()> {
    let system = build_system(m, sys, resolve)?;
    match solve_system(m, &system, bound)? {
        Some(assignment) => {
            let rendered: Vec<String> = assignment
                .iter()
                .enumerate()
                .map(|(i, v)| format!("x{i} = {}", m.display(v)))
                .collect();
            report.pass(format!("solution: {}", rendered.join(", ")));
        }
        None => {
            if m.is_complete(bound) {
                report.fail("no solution exists");
            } else {
                report.unknown(format!("no solution within bound {bound}"));
            }
        }
    }
    Ok(())
}

fn quotient_command(
    m: &FiniteMonoid,
    name: &str,
    kind: &str,
    pset: Option<&PSet>,
    report: &mut Report,
) -> Result<()> {
    let (q, cong, label): (FiniteMonoid, Congruence, &str) = match kind {
        "cancellative" => {
            let (q, c) = cancellative_quotient(m);
            (q, c, "cancellative")
        }
        "separative" => {
            let (q, c) = separative_quotient(m);
            (q, c, "separative")
        }
        "torsion" => {
            let p = pset.ok_or_else(|| {
                Error::Precondition("torsion quotient needs --pset with generators >= 2".into())
            })?;
            let (q, c) = p_torsion_quotient(m, p);
            (q, c, "torsion-free")
        }
        "antisymmetric" => {
            let (q, c) = antisymmetric_quotient(m);
            (q, c, "antisymmetric")
        }
        other => return Err(Error::Precondition(format!("unknown quotient kind {other}"))),
    };
    let classes: Vec<String> = cong
        .classes()
        .iter()
        .map(|members| {
            let names: Vec<&str> = members.iter().map(|&x| m.label(x)).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    report.info(format!("classes: {}", classes.join(" ")));
    let verdict = match kind {
        "cancellative" => predicates::is_cancellative(&q, 0),
        "separative" => predicates::is_separative(&q, 0),
        "torsion" => predicates::is_p_torsion_free(&q, pset.unwrap(), 0),
        _ => predicates::is_antisymmetric(&q, 0),
    };
    report.expect(
        format!("quotient is {label}: {}", verdict.decision),
        verdict.decision.is_true(),
    );
    if predicates::is_conical(m, 0).decision.is_true() && kind != "antisymmetric" {
        let conical = predicates::is_conical(&q, 0);
        report.expect(
            format!("conicality preserved: {}", conical.decision),
            conical.decision.is_true(),
        );
    }
    if m.size() <= 6 {
        let congs = all_congruences(m)?;
        let minimal = congs.iter().all(|theta| {
            let qt = quotient(m, theta);
            let has_property = match kind {
                "cancellative" => predicates::is_cancellative(&qt, 0).decision.is_true(),
                "separative" => predicates::is_separative(&qt, 0).decision.is_true(),
                "torsion" => predicates::is_p_torsion_free(&qt, pset.unwrap(), 0)
                    .decision
                    .is_true(),
                _ => predicates::is_antisymmetric(&qt, 0).decision.is_true(),
            };
            !has_property || cong.is_contained_in(theta)
        });
        report.expect("least among congruences with that quotient property", minimal);
    } else {
        report.info("minimality oracle skipped (more than 6 elements)");
    }
    report.info(format!(
        "quotient table:\n{}",
        format::print_finite(&format!("{name}_{kind}"), &q)
    ));
    Ok(())
}

fn step_division<B: MonoidBackend + Clone>(
    m: &B,
    a: B::Elem,
    p: u32,
    report: &mut Report,
) -> Result<()> {
    let ext = division_extend(m.clone(), a.clone(), p)?;
    report.info(format!(
        "adjoined u with {p}*u = {}; ball census {}",
        m.display(&a),
        ext.enumerate(STEP_BALL).len()
    ));
    let checks = ext.verify(STEP_BALL);
    report.expect("p*u equals the divided element", checks.divides);
    report.expect("embedding injective on the ball", checks.embedding_injective);
    report.expect(
        "translation by the divided element matches counter 1",
        checks.unit_translation,
    );
    report.checked("embedded base unitary on the ball", &checks.unitary);
    report.expect("conical on the ball", checks.conical_on_ball);
    Ok(())
}

fn execute(command: Command) -> Result<Report> {
    let mut report = Report::new();
    match command {
        Command::Check {
            file,
            name,
            predicate,
            bound,
            pset,
        } => {
            let parsed = load(&file)?;
            let decl = lookup(&parsed, &name)?;
            let pset = parse_pset(&pset)?;
            match decl {
                MonoidDecl::Finite(m) => {
                    run_predicate(m, &predicate, bound, pset.as_ref(), &mut report, &name)?
                }
                MonoidDecl::Presented(p) => {
                    let m = PresentedMonoid::new(p.clone())?;
                    run_predicate(&m, &predicate, bound, pset.as_ref(), &mut report, &name)?
                }
                MonoidDecl::QCone(c) => {
                    run_predicate(c, &predicate, bound, pset.as_ref(), &mut report, &name)?
                }
            }
        }
        Command::Refine {
            file,
            name,
            a0,
            a1,
            b0,
            b1,
            bound,
        } => {
            let parsed = load(&file)?;
            match lookup(&parsed, &name)? {
                MonoidDecl::Finite(m) => {
                    let r = |s: &str| resolve_finite(m, s);
                    refine_generic(m, &r(&a0)?, &r(&a1)?, &r(&b0)?, &r(&b1)?, bound, &mut report)?
                }
                MonoidDecl::Presented(p) => {
                    let m = PresentedMonoid::new(p.clone())?;
                    let r = |s: &str| resolve_presented(&m, s);
                    refine_generic(&m, &r(&a0)?, &r(&a1)?, &r(&b0)?, &r(&b1)?, bound, &mut report)?
                }
                MonoidDecl::QCone(c) => {
                    let r = |s: &str| resolve_qcone(c, s);
                    refine_generic(c, &r(&a0)?, &r(&a1)?, &r(&b0)?, &r(&b1)?, bound, &mut report)?
                }
            }
        }
        Command::Solve {
            file,
            name,
            sysfile,
            bound,
        } => {
            let parsed = load(&file)?;
            let sys_text = std::fs::read_to_string(&sysfile).map_err(|e| Error::Parse {
                line: 0,
                message: format!("cannot read {}: {e}", sysfile.display()),
            })?;
            let sys = format::parse_system(&sys_text)?;
            match lookup(&parsed, &name)? {
                MonoidDecl::Finite(m) => {
                    solve_generic(m, &sys, |s| resolve_finite(m, s), bound, &mut report)?
                }
                MonoidDecl::Presented(p) => {
                    let m = PresentedMonoid::new(p.clone())?;
                    solve_generic(&m, &sys, |s| resolve_presented(&m, s), bound, &mut report)?
                }
                MonoidDecl::QCone(c) => {
                    solve_generic(c, &sys, |s| resolve_qcone(c, s), bound, &mut report)?
                }
            }
        }
        Command::Quotient {
            file,
            name,
            kind,
            pset,
        } => {
            let parsed = load(&file)?;
            let pset = parse_pset(&pset)?;
            match lookup(&parsed, &name)? {
                MonoidDecl::Finite(m) => {
                    quotient_command(m, &name, &kind, pset.as_ref(), &mut report)?
                }
                _ => {
                    return Err(Error::Precondition(
                        "quotients are computed for finite monoids".into(),
                    ))
                }
            }
        }
        Command::Step { file, name, kind } => {
            let parsed = load(&file)?;
            let decl = lookup(&parsed, &name)?;
            step_command(decl, &name, kind, &mut report)?;
        }
        Command::Example314 {
            max_m,
            max_k,
            max_n,
            claim1_max,
        } => {
            for line in crate::qcone::verify_claim1(claim1_max)? {
                report.pass(line);
            }
            for line in crate::qcone::verify_claim2(max_k, max_n)? {
                report.pass(line);
            }
            for line in crate::qcone::verify_nonmembership(max_m)? {
                report.pass(line);
            }
        }
        Command::LambdaWsd => {
            let cx = wsd_counterexample();
            report.expect(
                format!(
                    "instance {} + {} + {} = {} + {} holds exactly",
                    cx.a0, cx.a1, cx.c, cx.b, cx.c
                ),
                cx.instance_holds,
            );
            for line in &cx.trace {
                report.info(line.clone());
            }
            report.expect(
                "no witness pair exists: weak sum decomposition fails here",
                cx.impossible,
            );
            let searched = wsd_counterexample_search(3)?;
            report.expect(
                "bounded generic witness search also comes back empty",
                searched.is_none(),
            );
        }
        Command::Corpus => corpus_sweep(&mut report)?,
    }
    Ok(report)
}

fn step_command(
    decl: &MonoidDecl,
    name: &str,
    kind: StepKind,
    report: &mut Report,
) -> Result<()> {
    match kind {
        StepKind::Refinement { a0, a1, b0, b1 } => match decl {
            MonoidDecl::Finite(m) => {
                let r = |s: &str| resolve_finite(m, s);
                let (base, step) =
                    crate::amalgam::refinement_step_finite(m, r(&a0)?, r(&a1)?, r(&b0)?, r(&b1)?)?;
                report_refinement_step(&base, step, name, report);
            }
            MonoidDecl::Presented(p) => {
                let base = PresentedMonoid::new(p.clone())?;
                let r = |s: &str| resolve_presented(&base, s);
                let step =
                    crate::amalgam::refinement_step(&base, &r(&a0)?, &r(&a1)?, &r(&b0)?, &r(&b1)?)?;
                report_refinement_step(&base, step, name, report);
            }
            MonoidDecl::QCone(_) => {
                return Err(Error::Precondition(
                    "the refinement step works on finite or presented monoids".into(),
                ))
            }
        },
        StepKind::Division { a, p } => match decl {
            MonoidDecl::Finite(m) => step_division(m, resolve_finite(m, &a)?, p, report)?,
            MonoidDecl::Presented(pres) => {
                let m = PresentedMonoid::new(pres.clone())?;
                let elem = resolve_presented(&m, &a)?;
                step_division(&m, elem, p, report)?
            }
            MonoidDecl::QCone(c) => {
                let elem = resolve_qcone(c, &a)?;
                step_division(c, elem, p, report)?
            }
        },
        StepKind::Wsd { a0, a1, b, c } => match decl {
            MonoidDecl::Finite(m) => {
                let r = |s: &str| resolve_finite(m, s);
                let (a0, a1, b, c) = (r(&a0)?, r(&a1)?, r(&b)?, r(&c)?);
                let zero = 0usize;
                if a0 == zero || a1 == zero || b == zero {
                    // degenerate instances are solved in place
                    match predicates::check_wsd_instance(m, &a0, &a1, &b, &c, 0)? {
                        Some((x0, x1)) => report.pass(format!(
                            "degenerate instance solved directly: x0 = {}, x1 = {}",
                            m.label(x0),
                            m.label(x1)
                        )),
                        None => report.fail("degenerate instance has no direct witness"),
                    }
                    return Ok(());
                }
                let ext = wsd_extend(m.clone(), a0, a1, b, c)?;
                let (x0, x1) = ext.witnesses();
                report.info(format!(
                    "adjoined witnesses x0 = {}, x1 = {}; ball census {}",
                    ext.display(&x0),
                    ext.display(&x1),
                    ext.enumerate(3).len()
                ));
                let checks = ext.verify(STEP_BALL);
                report.expect("witness pair solves the instance", checks.instance_solved);
                report.expect(
                    "embedding injective on the ball",
                    checks.embedding_injective,
                );
                report.expect(
                    "order-embedding on the ball",
                    checks.order_embedding_on_ball,
                );
                report.expect("conical on the ball", checks.conical_on_ball);
            }
            _ => {
                return Err(Error::Precondition(
                    "the wsd step works on finite monoids, whose order is decidable".into(),
                ))
            }
        },
    }
    Ok(())
}

fn report_refinement_step(
    base: &PresentedMonoid,
    step: crate::amalgam::RefinementStep,
    name: &str,
    report: &mut Report,
) {
    match step {
        crate::amalgam::RefinementStep::Direct(matrix) => {
            report.pass(format!(
                "zero entry forces a direct matrix: rows [{} {}] [{} {}]",
                base.display(&matrix.c00),
                base.display(&matrix.c01),
                base.display(&matrix.c10),
                base.display(&matrix.c11)
            ));
        }
        crate::amalgam::RefinementStep::Extended(ext) => {
            report.expect("adjoined entries refine the instance", ext.matrix_valid());
            report.expect(
                "embedding injective on the ball",
                ext.embedding_injective_on_ball(base, STEP_BALL),
            );
            report.expect("conical on the ball", ext.conical_on_ball(4));
            match ext.unitary_on_ball(base, STEP_BALL) {
                Ok(checked) => report.checked("embedded base unitary on the ball", &checked),
                Err(e) => report.fail(format!("unitarity check failed: {e}")),
            }
            report.info(format!(
                "extension presentation:\n{}",
                format::print_presented(&format!("{name}_step"), ext.monoid.presentation())
            ));
        }
    }
}

fn corpus_sweep(report: &mut Report) -> Result<()> {
    let pset = PSet::new(vec![2])?;
    for (name, m) in corpus::corpus() {
        report.expect(
            format!("{name}: backend laws"),
            crate::backend::check_backend_laws(&m, 0).is_ok(),
        );
        let conical = predicates::is_conical(&m, 0).decision;
        let battery = [
            ("conical", conical),
            ("cancellative", predicates::is_cancellative(&m, 0).decision),
            ("separative", predicates::is_separative(&m, 0).decision),
            (
                "stably-finite",
                predicates::is_stably_finite(&m, 0).decision,
            ),
            (
                "antisymmetric",
                predicates::is_antisymmetric(&m, 0).decision,
            ),
            (
                "simple",
                predicates::is_simple(&m, (m.size() + 2) as u32).decision,
            ),
            ("refinement", crate::equations::is_refinement(&m, 0).decision),
            (
                "quasi-divisible",
                predicates::is_quasi_divisible(&m, 0).decision,
            ),
            (
                "2-torsion-free",
                predicates::is_p_torsion_free(&m, &pset, 0).decision,
            ),
        ];
        let summary: Vec<String> = battery
            .iter()
            .map(|(label, d)| format!("{label}={d}"))
            .collect();
        report.info(format!("{name}: {}", summary.join(" ")));

        // torsion-freeness forces separativity
        let torsion_free = predicates::is_p_torsion_free(&m, &pset, 0).decision.is_true();
        if torsion_free {
            report.expect(
                format!("{name}: torsion-free implies separative"),
                predicates::is_separative(&m, 0).decision.is_true(),
            );
        }
        // quasi-divisibility sandwiches every element between 2y and 3y
        if predicates::is_quasi_divisible(&m, 0).decision.is_true() {
            let ok = (0..m.size()).all(|x| {
                predicates::quasi_divisible_witness(&m, &x, 0).is_some_and(|(u, v)| {
                    let y = m.add_idx(u, v);
                    m.leq_idx(m.mul_idx(2, y), x) && m.leq_idx(x, m.mul_idx(3, y))
                })
            });
            report.expect(format!("{name}: quasi-divisibility sandwich"), ok);
        }
        // quotients: property, minimality, conicality
        let quotients: Vec<(&str, FiniteMonoid, Congruence)> = vec![
            {
                let (q, c) = cancellative_quotient(&m);
                ("cancellative", q, c)
            },
            {
                let (q, c) = separative_quotient(&m);
                ("separative", q, c)
            },
            {
                let (q, c) = p_torsion_quotient(&m, &pset);
                ("torsion", q, c)
            },
            {
                let (q, c) = antisymmetric_quotient(&m);
                ("antisymmetric", q, c)
            },
        ];
        for (kind, q, cong) in &quotients {
            let holds = match *kind {
                "cancellative" => predicates::is_cancellative(q, 0).decision.is_true(),
                "separative" => predicates::is_separative(q, 0).decision.is_true(),
                "torsion" => predicates::is_p_torsion_free(q, &pset, 0).decision.is_true(),
                _ => predicates::is_antisymmetric(q, 0).decision.is_true(),
            };
            report.expect(format!("{name}: {kind} quotient has the property"), holds);
            if conical.is_true() && *kind != "antisymmetric" {
                report.expect(
                    format!("{name}: {kind} quotient stays conical"),
                    predicates::is_conical(q, 0).decision.is_true(),
                );
            }
            if m.size() <= 6 {
                let congs = all_congruences(&m)?;
                let minimal = congs.iter().all(|theta| {
                    let qt = quotient(&m, theta);
                    let has = match *kind {
                        "cancellative" => predicates::is_cancellative(&qt, 0).decision.is_true(),
                        "separative" => predicates::is_separative(&qt, 0).decision.is_true(),
                        "torsion" => predicates::is_p_torsion_free(&qt, &pset, 0)
                            .decision
                            .is_true(),
                        _ => predicates::is_antisymmetric(&qt, 0).decision.is_true(),
                    };
                    !has || cong.is_contained_in(theta)
                });
                report.expect(format!("{name}: {kind} congruence is least"), minimal);
            }
        }
        // subcones of conical monoids are simple
        if conical.is_true() {
            let all_simple = (0..m.size()).all(|a| {
                subcone_at(&m, a).is_ok_and(|(sub, _)| {
                    predicates::is_simple(&sub, (sub.size() + 2) as u32)
                        .decision
                        .is_true()
                })
            });
            report.expect(format!("{name}: subcones are simple"), all_simple);
        }
        // graded decompositions and meets in refinement cones
        if conical.is_true()
            && m.size() <= 5
            && crate::equations::is_refinement(&m, 0).decision.is_true()
        {
            let mut ok = true;
            for a in 0..m.size() {
                for b in 0..m.size() {
                    for n in 1..=3u32 {
                        for c in 0..m.size() {
                            if m.add_idx(a, b) != m.mul_idx(n, c) {
                                continue;
                            }
                            ok &= decompose_multiple(&m, a, b, n, c).is_ok();
                        }
                    }
                    if (a != 0 || b != 0) && m.asymp_idx(a, b) {
                        ok &= meet_in_class(&m, a, b).is_ok();
                    }
                }
            }
            report.expect(format!("{name}: decompositions and meets exist"), ok);
        }
    }
    Ok(())
}
