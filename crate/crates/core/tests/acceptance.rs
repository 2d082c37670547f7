//! Acceptance checks. Each criterion prints one `PASS`/`FAIL` line; the test
//! fails if any criterion fails.
//!
//! Run with `cargo test -p distpf-core --test acceptance -- --nocapture`.

mod common;

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use common::{int, int_series, label, nonzero, q, rng, series, sparse, test_function};
use distpf_core::oracle::{
    pair_radial, pair_radial_expr, verify_laplacian_identity, verify_radial_identity, TestFunction,
    EULER_GAMMA,
};
use distpf_core::{
    classify_solution, coeff_b, coeff_c, coeff_l, frobenius, function_laplacian, hamiltonian_apply,
    q_nonvanishing, q_s, q_sl, radial_operator, AngularLabel, BigRational, Candidate, DeltaSum,
    ExactScalar, PhysicalUnits, PotentialModel, Prefactor, PseudoFunction, RadialSeries,
    ResidualPolicy, Root, VerdictKind,
};
use num_traits::One;
use rand::Rng;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_secs: f64) -> Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit_secs, || {
        format!(
            "runtime {:.3}s exceeds {limit_secs}s",
            elapsed.as_secs_f64()
        )
    })
}

fn units() -> PhysicalUnits<BigRational> {
    PhysicalUnits::default()
}

fn c01_coulomb_coefficient() -> Result<String, String> {
    let t = Instant::now();
    ensure(coeff_c(0) == ExactScalar::pi_multiple(int(-4)), || {
        format!("C_0 = {}", coeff_c(0))
    })?;
    let mut r = rng(1);
    let inv_r = RadialSeries::monomial(-1, int(1));
    let mut worst: f64 = 0.0;
    for _ in 0..10 {
        let alpha = q(r.gen_range(1..=6), r.gen_range(1..=3));
        let phi = test_function(&mut r, 3, alpha);
        let lhs = pair_radial(&inv_r, &phi.laplacian());
        let phi0 = num_traits::ToPrimitive::to_f64(&phi.value_at_origin()).unwrap();
        worst = worst.max((lhs + 4.0 * PI * phi0).abs());
    }
    ensure(worst < 1e-9, || format!("|<1/r, Δφ> + 4πφ(0)| = {worst:e}"))?;
    within(t.elapsed(), 1.0)?;
    Ok(format!("C_0 = -4π; max residual {worst:.1e} over 10 φ"))
}

fn c02_calibration() -> Result<String, String> {
    let t = Instant::now();
    let target = 8.0 * PI + 12.0 * PI * EULER_GAMMA;
    let phi = TestFunction::gaussian(int(1)).unwrap();
    let r3 = RadialSeries::monomial(-3, int(1));
    let lhs = pair_radial(&r3, &phi.laplacian());
    let rhs = pair_radial_expr(&radial_operator(&r3), &phi).map_err(|e| e.to_string())?;
    ensure((lhs - target).abs() < 1e-9, || {
        format!("<r^-3, Δφ> = {lhs}, want {target}")
    })?;
    ensure((rhs - target).abs() < 1e-9, || {
        format!("<Δ r^-3, φ> = {rhs}, want {target}")
    })?;
    let radial = verify_radial_identity(&r3, &phi).map_err(|e| e.to_string())?;
    let pf = PseudoFunction::new(r3, AngularLabel::s_wave());
    let full = verify_laplacian_identity(&pf, &phi).map_err(|e| e.to_string())?;
    ensure(radial < 1e-9 && full < 1e-9, || {
        format!("residuals {radial:e}, {full:e}")
    })?;
    ensure(coeff_c(1) == ExactScalar::pi_multiple(q(-10, 3)), || {
        format!("C_1 = {}", coeff_c(1))
    })?;
    within(t.elapsed(), 1.0)?;
    Ok(format!(
        "both sides {lhs:.12} = 8π+12πγ; C_1 = -10π/3; residual {full:.1e}"
    ))
}

fn c03_regular_root_vanishing() -> Result<String, String> {
    let t = Instant::now();
    let mut r = rng(3);
    for case in 0..200 {
        let ell = r.gen_range(0..=6);
        let len = r.gen_range(1..=10);
        let radial = series(&mut r, i64::from(ell), len, 0.3);
        let pf = PseudoFunction::new(radial.clone(), label(&mut r, ell));
        ensure(q_s(&radial).is_empty() && q_sl(&pf).is_empty(), || {
            format!("case {case}: nonempty source for s = ℓ = {ell}")
        })?;
    }
    within(t.elapsed(), 1.0)?;
    Ok("q_s and q_sl empty for s = ℓ ≤ 6 over 200 series".into())
}

fn c04_parity_rule() -> Result<String, String> {
    let mut r = rng(4);
    for case in 0..200 {
        let s = r.gen_range(-8..=-1);
        let len = r.gen_range(1..=12);
        let base = series(&mut r, s, len, 0.2);
        // Replace every a_k with k + s even; Q_s must not change.
        let perturbed: Vec<BigRational> = base
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                if (k as i64 + s) % 2 == 0 {
                    sparse(&mut r, 0.3)
                } else {
                    a.clone()
                }
            })
            .collect();
        let perturbed = RadialSeries::normalized(s, perturbed);
        ensure(q_s(&base) == q_s(&perturbed), || {
            format!("case {case}: s = {s} changed by same-parity terms")
        })?;
        let same_parity_only: Vec<BigRational> = base
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                if (k as i64 + s) % 2 == 0 {
                    a.clone()
                } else {
                    int(0)
                }
            })
            .collect();
        let only = RadialSeries::normalized(s, same_parity_only);
        ensure(q_s(&only).is_empty(), || {
            format!("case {case}: same-parity terms produced deltas")
        })?;
    }
    Ok("same-parity coefficients never contribute, s ∈ [-8,-1], 200 series".into())
}

fn c05_l_identity() -> Result<String, String> {
    for p in 1..=25u64 {
        let want = coeff_c(p).scale(&q(-1, 4 * p as i64 + 1));
        ensure(coeff_l(p) == want, || {
            format!("p = {p}: L = {}, -C/(4p+1) = {want}", coeff_l(p))
        })?;
    }
    Ok("L_p = -C_p/(4p+1) exactly for p = 1..25".into())
}

fn c06_reduced_radial_delta() -> Result<String, String> {
    let mut r = rng(6);
    for case in 0..50 {
        let len = r.gen_range(1..=10);
        let u = series(&mut r, 0, len, 0.3);
        let a0 = u.coeff(0);
        let pf = PseudoFunction::from_u(&u, AngularLabel::s_wave());
        let expr = radial_operator(&pf.radial);
        let mut want = DeltaSum::new();
        want.add_term(
            ExactScalar::pi_multiple(int(-4) * a0.clone()),
            Prefactor::Unit,
            0,
        );
        ensure(expr.delta_part == want, || {
            format!("case {case}: delta part {}", expr.delta_part)
        })?;
        // (1/r)(d²/dr²) u = Σ k(k-1) a_k r^{k-3}
        let fs: Vec<BigRational> = u
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, a)| a * int((k * k.saturating_sub(1)) as i64))
            .collect();
        let want_pf = RadialSeries::normalized(-3, fs);
        ensure(expr.pf_part == want_pf, || {
            format!("case {case}: function part {}", expr.pf_part)
        })?;
        ensure(expr.pf_part == function_laplacian(&pf.radial, 0), || {
            format!("case {case}: function part mismatch")
        })?;
    }
    Ok("delta part exactly -4π·a_0·δ for 50 series".into())
}

fn c07_hydrogen() -> Result<String, String> {
    let v = PotentialModel::coulomb(int(-2));
    let e = int(-1);
    let fr = frobenius(&v, 0, &e, 0, 12, &units()).map_err(|e| e.to_string())?;
    let mut fact = BigRational::one();
    for k in 0..=12usize {
        if k > 0 {
            fact *= int(k as i64);
        }
        let sign = if k % 2 == 0 { int(1) } else { int(-1) };
        let want = sign / fact.clone();
        ensure(fr.series.coeff(k) == want, || {
            format!("a_{k} = {}", fr.series.coeff(k))
        })?;
    }
    let verdict = classify_solution(&Candidate {
        potential: v,
        angular: AngularLabel::s_wave(),
        energy: e,
        root: Root::Regular,
        order: 12,
        units: units(),
    })
    .map_err(|e| e.to_string())?;
    ensure(verdict.kind == VerdictKind::SolvesSE, || {
        format!("verdict {:?}", verdict.kind)
    })?;
    ensure(verdict.boundary_condition_met, || {
        "boundary condition not met".into()
    })?;
    Ok("a_k = (-1)^k/k! for k ≤ 12; SolvesSE with u(0) = 0".into())
}

fn c08_free_s_wave_source() -> Result<String, String> {
    let mut r = rng(8);
    let sqrt_pi = |c: BigRational| ExactScalar::new(c, 1);
    for _ in 0..10 {
        let energy = nonzero(&mut r);
        let verdict = classify_solution(&Candidate {
            potential: PotentialModel::free(),
            angular: AngularLabel::s_wave(),
            energy: energy.clone(),
            root: Root::Singular,
            order: 8,
            units: units(),
        })
        .map_err(|e| e.to_string())?;
        ensure(verdict.kind == VerdictKind::SolvesModifiedSE, || {
            format!("verdict {:?}", verdict.kind)
        })?;
        let u = verdict.series.clone().ok_or("no series")?;
        let a0 = u.coeff(0);
        let mut want = DeltaSum::new();
        want.add_term(sqrt_pi(int(2) * a0), Prefactor::Unit, 0);
        ensure(verdict.delta_source == want, || {
            format!("source {}", verdict.delta_source)
        })?;

        // Any normalization of u: the source scales with a_0.
        let scale = nonzero(&mut r);
        let pf = PseudoFunction::from_u(&u.scale(&scale), AngularLabel::s_wave());
        let h = hamiltonian_apply(
            &pf,
            &PotentialModel::free(),
            &energy,
            &units(),
            ResidualPolicy::Strict,
        )
        .map_err(|e| e.to_string())?;
        let mut want = DeltaSum::new();
        want.add_term(sqrt_pi(int(2) * scale), Prefactor::Unit, 0);
        ensure(h.delta_part == want, || {
            format!("hamiltonian delta part {}", h.delta_part)
        })?;
        ensure(
            h.pf_part == PseudoFunction::new(pf.radial.scale(&energy), pf.angular),
            || "hamiltonian Pf part is not E·Ψ".into(),
        )?;
    }
    Ok("source exactly 2√π·a_0·δ, matches hamiltonian_apply".into())
}

fn c09_leading_term() -> Result<String, String> {
    let mut r = rng(9);
    for ell in 0..=4u32 {
        for _ in 0..5 {
            let energy = nonzero(&mut r);
            let s = -(i64::from(ell) + 1);
            let fr = frobenius(
                &PotentialModel::free(),
                ell,
                &energy,
                s,
                2 * ell as usize + 4,
                &units(),
            )
            .map_err(|e| format!("ℓ = {ell}: {e}"))?;
            let a0 = nonzero(&mut r);
            let u = fr.series.scale(&a0);
            let angular = label(&mut r, ell);
            let pf = PseudoFunction::from_u(&u, angular);
            let qsl = q_sl(&pf);
            ensure(!qsl.is_empty(), || format!("ℓ = {ell}: empty"))?;
            let p = u64::from(ell);
            let term = qsl
                .find(Prefactor::SolidHarmonic(angular), p)
                .ok_or_else(|| format!("ℓ = {ell}: no p = ℓ term"))?;
            let want = coeff_c(p).scale(&(a0.clone() * coeff_b(ell, p)));
            ensure(term.coefficient() == &want, || {
                format!("ℓ = {ell}: {} vs {want}", term.coefficient())
            })?;
        }
    }
    Ok("p = ℓ term equals a_0·B_{ℓ,ℓ}·C_ℓ for ℓ = 0..4".into())
}

fn c10_identity_grid() -> Result<String, String> {
    let t = Instant::now();
    let mut r = rng(10);
    let alphas = [q(1, 2), int(1), int(2)];
    let mut cases = 0;
    let mut worst: f64 = 0.0;
    for s in -6..=2 {
        for ell in 0..=3u32 {
            for alpha in &alphas {
                for _ in 0..5 {
                    let len = r.gen_range(1..=4);
                    let pf = PseudoFunction::new(int_series(&mut r, s, len), label(&mut r, ell));
                    let phi = test_function(&mut r, 3, alpha.clone());
                    let res = verify_laplacian_identity(&pf, &phi).map_err(|e| e.to_string())?;
                    ensure(res < 1e-8, || {
                        format!("s = {s}, ℓ = {ell}, α = {alpha}: residual {res:e}")
                    })?;
                    worst = worst.max(res);
                    cases += 1;
                }
            }
        }
    }
    within(t.elapsed(), 60.0)?;
    Ok(format!(
        "{cases} cases, max residual {worst:.1e}, {:.2}s",
        t.elapsed().as_secs_f64()
    ))
}

fn c11_predicate_equivalence() -> Result<String, String> {
    let mut r = rng(11);
    let mut nonempty = 0;
    for case in 0..500 {
        let s = r.gen_range(-10..=3);
        let ell = r.gen_range(0..=6);
        let len = r.gen_range(1..=12);
        let pf = PseudoFunction::new(series(&mut r, s, len, 0.7), label(&mut r, ell));
        let predicate = q_nonvanishing(&pf);
        let computed = !q_sl(&pf).is_empty();
        ensure(predicate == computed, || {
            format!("case {case}: predicate {predicate}, q_sl nonempty {computed}")
        })?;
        nonempty += usize::from(computed);
    }
    Ok(format!("agree on 500 cases ({nonempty} nonempty)"))
}

fn c12_boundary_condition() -> Result<String, String> {
    let mut r = rng(12);
    let (mut se, mut modified, mut obstructed) = (0, 0, 0);
    for case in 0..300 {
        let v_minus1 = sparse(&mut r, 0.4);
        let v: Vec<BigRational> = (0..r.gen_range(0..=3))
            .map(|_| sparse(&mut r, 0.3))
            .collect();
        let root = if r.gen_bool(0.5) {
            Root::Regular
        } else {
            Root::Singular
        };
        let verdict = classify_solution(&Candidate {
            potential: PotentialModel::new(v_minus1, v),
            angular: AngularLabel::s_wave(),
            energy: sparse(&mut r, 0.2),
            root,
            order: r.gen_range(1..=10),
            units: PhysicalUnits::new(q(r.gen_range(1..=5), r.gen_range(1..=5))).unwrap(),
        })
        .map_err(|e| e.to_string())?;
        let solves = verdict.kind == VerdictKind::SolvesSE;
        ensure(solves == verdict.u_at_origin.is_zero(), || {
            format!(
                "case {case}: {:?} with u(0) = {}",
                verdict.kind, verdict.u_at_origin
            )
        })?;
        ensure(solves == verdict.boundary_condition_met, || {
            format!("case {case}: flag mismatch")
        })?;
        match verdict.kind {
            VerdictKind::SolvesSE => se += 1,
            VerdictKind::SolvesModifiedSE => modified += 1,
            VerdictKind::NotRadialSolution => obstructed += 1,
        }
    }
    ensure(se > 0 && modified > 0, || {
        "sweep did not reach both verdicts".into()
    })?;
    Ok(format!("SolvesSE ⟺ u(0) = 0 over 300 cases ({se} SE, {modified} modified, {obstructed} obstructed)"))
}

#[test]
fn acceptance_criteria() {
    let checks: [(&str, Check); 12] = [
        ("1 coefficient reproduction", c01_coulomb_coefficient),
        ("2 calibration case s = -3", c02_calibration),
        ("3 regular-root vanishing", c03_regular_root_vanishing),
        ("4 parity rule", c04_parity_rule),
        ("5 L_p identity", c05_l_identity),
        (
            "6 -4πu(0)δ in the reduced equation",
            c06_reduced_radial_delta,
        ),
        ("7 hydrogen regular series", c07_hydrogen),
        ("8 free s-wave point source", c08_free_s_wave_source),
        ("9 leading source term", c09_leading_term),
        ("10 identity grid", c10_identity_grid),
        ("11 predicate equivalence", c11_predicate_equivalence),
        ("12 boundary condition equivalence", c12_boundary_condition),
    ];
    let mut failed = Vec::new();
    for (name, check) in checks {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
