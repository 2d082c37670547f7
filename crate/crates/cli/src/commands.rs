use std::io::Write;

use anyhow::{bail, Context};
use distpf_core::oracle::{verify_laplacian_identity, Polynomial, TestFunction};
use distpf_core::radial::radial_residual;
use distpf_core::{
    classify_solution, coeff_b, coeff_c, coeff_l, delta_source, frobenius, laplacian, q_sl,
    BigRational, Candidate, Error, PhysicalUnits, PotentialModel, PseudoFunction, RadialSeries,
    Root, Scalar,
};
use rayon::prelude::*;
use serde_json::Value;

use crate::args::Command;
use crate::config::{Mode, ProblemSpec, RootChoice};
use crate::report::{CitationEntry, CoeffRow, CoeffTable, Report, ResidualRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_LOG_OBSTRUCTION: i32 = 2;
pub const EXIT_RESIDUAL: i32 = 3;

/// Exit code plus the JSON document for `--json`.
#[derive(Debug)]
pub struct Outcome {
    pub exit_code: i32,
    pub json: Value,
}

pub fn run(command: Command, spec: &ProblemSpec, out: &mut dyn Write) -> anyhow::Result<Outcome> {
    spec.validate()?;
    match (command, spec.mode) {
        (Command::Coeffs, _) => coeffs(spec, out),
        (_, Mode::Exact) => run_typed::<BigRational>(command, spec, out),
        (_, Mode::Float) => run_typed::<f64>(command, spec, out),
    }
}

fn coeffs(spec: &ProblemSpec, out: &mut dyn Write) -> anyhow::Result<Outcome> {
    let rows = (0..=spec.order as u64)
        .map(|p| {
            let b = coeff_b(spec.ell, p);
            CoeffRow {
                p,
                c: coeff_c(p),
                l: coeff_l(p),
                c_float: coeff_c(p).to_f64(),
                l_float: coeff_l(p).to_f64(),
                b_float: Scalar::to_f64(&b),
                b,
            }
        })
        .collect();
    let table = CoeffTable {
        command: "coeffs".into(),
        ell: spec.ell,
        rows,
    };
    table.render(out)?;
    Ok(Outcome {
        exit_code: EXIT_OK,
        json: serde_json::to_value(&table)?,
    })
}

fn run_typed<T: Scalar>(
    command: Command,
    spec: &ProblemSpec,
    out: &mut dyn Write,
) -> anyhow::Result<Outcome> {
    let problem = Problem::<T>::from_spec(spec)?;
    let reports: Vec<Report<T>> = match command {
        Command::Coeffs => unreachable!("handled before dispatch"),
        Command::Laplacian => vec![laplacian_report(spec)?],
        Command::Solve => roots(spec.root)
            .into_iter()
            .map(|r| solve_report(&problem, spec, r))
            .collect::<anyhow::Result<_>>()?,
        Command::Classify => roots(spec.root)
            .into_iter()
            .map(|r| classify_report(&problem, spec, r))
            .collect::<anyhow::Result<_>>()?,
        Command::Verify => verify_reports(&problem, spec)?,
    };
    for r in &reports {
        r.render(out)?;
    }
    let exit_code = if reports.iter().any(|r| r.failed_residuals() > 0) {
        EXIT_RESIDUAL
    } else if reports.iter().any(|r| r.obstruction.is_some()) {
        EXIT_LOG_OBSTRUCTION
    } else {
        EXIT_OK
    };
    let json = match reports.as_slice() {
        [one] => serde_json::to_value(one)?,
        many => serde_json::to_value(many)?,
    };
    Ok(Outcome { exit_code, json })
}

fn roots(choice: RootChoice) -> Vec<Root> {
    match choice {
        RootChoice::Regular => vec![Root::Regular],
        RootChoice::Singular => vec![Root::Singular],
        RootChoice::Both => vec![Root::Regular, Root::Singular],
    }
}

struct Problem<T: Scalar> {
    potential: PotentialModel<T>,
    energy: T,
    units: PhysicalUnits<T>,
}

impl<T: Scalar> Problem<T> {
    fn from_spec(spec: &ProblemSpec) -> anyhow::Result<Self> {
        Ok(Self {
            potential: PotentialModel::new(
                T::from_rational(&spec.v_minus1),
                spec.v.iter().map(T::from_rational).collect(),
            ),
            energy: T::from_rational(&spec.energy),
            units: PhysicalUnits::new(T::from_rational(&spec.hbar2_over_2m))?,
        })
    }
}

/// `Pf.[r^s Σ a_k r^k]·Y_ℓ^μ` from `--s` and `--coeffs`.
fn input_pseudofunction<T: Scalar>(spec: &ProblemSpec) -> anyhow::Result<PseudoFunction<T>> {
    let Some(s) = spec.s else {
        bail!("this command needs the exponent s (--s N or `s = N`)");
    };
    let coeffs = spec.coeffs.iter().map(T::from_rational).collect();
    let radial = RadialSeries::new(s, coeffs).context("coeffs")?;
    Ok(PseudoFunction::new(radial, spec.angular()))
}

fn laplacian_report<T: Scalar>(spec: &ProblemSpec) -> anyhow::Result<Report<T>> {
    let pf = input_pseudofunction::<T>(spec)?;
    let expr = laplacian(&pf);
    let mut report = Report::new("laplacian", spec.mode);
    report.pf_part = Some(expr.pf_part);
    report.delta_terms = expr.delta_part;
    if spec.verify {
        report.residuals = oracle_rows(&pf, spec)?;
    }
    Ok(report)
}

fn radial_rows<T: Scalar>(
    problem: &Problem<T>,
    pf: &PseudoFunction<T>,
    tol: f64,
) -> Vec<ResidualRow> {
    let s = pf.radial.s();
    radial_residual(
        &pf.radial,
        pf.angular.ell(),
        &problem.potential,
        &problem.energy,
        &problem.units,
    )
    .iter()
    .enumerate()
    .map(|(j, r)| {
        ResidualRow::new(
            format!("radial equation, r^{}", s - 2 + j as i64),
            r.to_f64().abs(),
            tol,
        )
    })
    .collect()
}

fn solve_report<T: Scalar>(
    problem: &Problem<T>,
    spec: &ProblemSpec,
    root: Root,
) -> anyhow::Result<Report<T>> {
    let mut report = Report::new("solve", spec.mode);
    report.root = Some(root);
    let s = root.exponent(spec.ell);
    match frobenius(
        &problem.potential,
        spec.ell,
        &problem.energy,
        s,
        spec.order,
        &problem.units,
    ) {
        Ok(fr) => {
            let pf = PseudoFunction::from_u(&fr.series, spec.angular());
            report.delta_terms = delta_source(&q_sl(&pf), &problem.units);
            report.residuals = radial_rows(problem, &pf, spec.tol);
            if spec.verify {
                report.residuals.extend(oracle_rows(&pf, spec)?);
            }
            report.pf_part = Some(pf);
            report.series = Some(fr.series);
            report.resonance = Some(fr.resonance);
        }
        Err(Error::LogObstruction(k)) => report.obstruction = Some(k),
        Err(e) => return Err(e.into()),
    }
    Ok(report)
}

fn classify_report<T: Scalar>(
    problem: &Problem<T>,
    spec: &ProblemSpec,
    root: Root,
) -> anyhow::Result<Report<T>> {
    let verdict = classify_solution(&Candidate {
        potential: problem.potential.clone(),
        angular: spec.angular(),
        energy: problem.energy.clone(),
        root,
        order: spec.order,
        units: problem.units.clone(),
    })?;
    let mut report = Report::new("classify", spec.mode);
    report.root = Some(root);
    report.citations = verdict
        .citations
        .iter()
        .copied()
        .map(CitationEntry::from)
        .collect();
    report.delta_terms = verdict.delta_source.clone();
    report.obstruction = verdict.obstruction;
    report.resonance = verdict.resonance;
    if let Some(u) = &verdict.series {
        let pf = PseudoFunction::from_u(u, spec.angular());
        report.residuals = radial_rows(problem, &pf, spec.tol);
        if spec.verify {
            report.residuals.extend(oracle_rows(&pf, spec)?);
        }
        report.pf_part = Some(pf);
        report.series = Some(u.clone());
    }
    report.verdict = Some(verdict);
    Ok(report)
}

/// Checks the input pseudofunction when `s` is given, otherwise the series
/// solution for each selected root.
fn verify_reports<T: Scalar>(
    problem: &Problem<T>,
    spec: &ProblemSpec,
) -> anyhow::Result<Vec<Report<T>>> {
    let targets: Vec<(Option<Root>, PseudoFunction<T>)> = if spec.s.is_some() {
        vec![(None, input_pseudofunction(spec)?)]
    } else {
        let mut targets = Vec::new();
        for root in roots(spec.root) {
            let s = root.exponent(spec.ell);
            match frobenius(
                &problem.potential,
                spec.ell,
                &problem.energy,
                s,
                spec.order,
                &problem.units,
            ) {
                Ok(fr) => targets.push((
                    Some(root),
                    PseudoFunction::from_u(&fr.series, spec.angular()),
                )),
                Err(Error::LogObstruction(k)) => {
                    bail!("{root:?} root: log obstruction at order {k}, nothing to verify")
                }
                Err(e) => return Err(e.into()),
            }
        }
        targets
    };
    targets
        .into_iter()
        .map(|(root, pf)| {
            let expr = laplacian(&pf);
            let mut report = Report::new("verify", spec.mode);
            report.root = root;
            report.residuals = oracle_rows(&pf, spec)?;
            report.pf_part = Some(expr.pf_part);
            report.delta_terms = expr.delta_part;
            Ok(report)
        })
        .collect()
}

/// Fixed test-function factors; every width in `spec.alpha` is paired with each.
fn test_polynomials() -> Vec<Polynomial> {
    vec![
        Polynomial::one(),
        Polynomial::from_int_terms(&[([1, 0, 0], 1)]),
        Polynomial::from_int_terms(&[([0, 1, 1], 1), ([0, 0, 0], 1)]),
        Polynomial::from_int_terms(&[([0, 0, 2], 2), ([1, 0, 0], -1), ([0, 0, 0], 3)]),
        Polynomial::from_int_terms(&[
            ([1, 1, 1], 1),
            ([2, 0, 0], 1),
            ([0, 2, 1], -2),
            ([0, 0, 0], -1),
        ]),
    ]
}

/// `|⟨Pf.f, Δφ⟩ - ⟨ΔPf.f, φ⟩|` over the test-function set, evaluated in
/// parallel. Row order follows the (α, polynomial) order, not completion order.
fn oracle_rows<T: Scalar>(
    pf: &PseudoFunction<T>,
    spec: &ProblemSpec,
) -> anyhow::Result<Vec<ResidualRow>> {
    let cases: Vec<TestFunction> = spec
        .alpha
        .iter()
        .flat_map(|a| {
            test_polynomials()
                .into_iter()
                .map(move |p| TestFunction::new(p, a.clone()))
        })
        .collect::<Result<_, _>>()?;
    cases
        .par_iter()
        .map(|phi| {
            let residual = verify_laplacian_identity(pf, phi)?;
            Ok(ResidualRow::new(format!("φ = {phi}"), residual, spec.tol))
        })
        .collect()
}
