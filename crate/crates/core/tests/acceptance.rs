//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the
//! process exits nonzero if any criterion fails.

use std::process::ExitCode;

use aeppli_core::analysis::{closed_p0_forms, skt_holomorphic_volume};
use aeppli_core::checks::{self, Check};
use aeppli_core::cohomology::coordinates_in;
use aeppli_core::random::{random_metric, random_skt_tuple, rng};
use aeppli_core::{
    aeppli_class_vanishes, classify_metric, corpus, generate_skt_family, skt_condition, verify_vanishing_theorem,
    Cohomology, Factor, Form, HermitianMetric, Laplacian, Operator, Rational, Scalar, Space, StructureEquations,
    Verdict,
};
use num::Signed;
use rayon::prelude::*;
use Factor::{Anti, Holo};

type Criterion = (&'static str, fn() -> Check);

const RANDOM_METRICS: u64 = 20;
const SKT_TUPLES: u64 = 50;
const LEIBNIZ_PAIRS: usize = 100;

fn load(name: &str) -> StructureEquations {
    corpus::load(name).expect("corpus entry").equations
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Identity plus seeded random metrics in dimension `n`.
fn metrics(n: usize, seed: u64) -> Vec<HermitianMetric> {
    let mut r = rng(seed);
    std::iter::once(HermitianMetric::identity(n))
        .chain((0..RANDOM_METRICS).map(|_| random_metric(&mut r, n)))
        .collect()
}

fn f(n: usize, factors: &[Factor]) -> Form {
    Form::from_factors(n, factors)
}

/// `(−1)^{p(p+1)/2} (−i)^{n−p} (n−p)!`
fn printed_constant(n: usize, p: usize) -> Scalar {
    let sign = if (p * (p + 1) / 2).is_multiple_of(2) { 1 } else { -1 };
    let fact: i64 = (1..=(n - p) as i64).product();
    (-Scalar::i())
        .pow((n - p) as u32)
        .scale(&Rational::from_integer((sign * fact).into()))
}

fn criterion_1() -> Check {
    let mut failures = Vec::new();
    for n in 2..=4 {
        for (k, h) in metrics(n, 100 + n as u64).iter().enumerate() {
            if let Err(e) = checks::star_of_lefschetz(h, printed_constant) {
                failures.push(format!("metric #{k}: {e}"));
            }
        }
    }
    match failures.len() {
        0 => Ok(()),
        k => Err(format!("{k} of 63 metric cases fail; first: {}", failures[0])),
    }
}

fn criterion_2() -> Check {
    for name in corpus::NAMES {
        let s = load(name);
        for h in metrics(s.n(), 200) {
            checks::delstar_on_closed(&s, &h).map_err(|e| format!("{name}: {e}"))?;
        }
    }
    Ok(())
}

fn criterion_3() -> Check {
    let s = load("sl2c");
    let h = HermitianMetric::identity(3);
    let c = Cohomology::new(&s, None).map_err(|e| e.to_string())?;
    let bc = c.bott_chern(1, 0).map_err(|e| e.to_string())?.dim;
    ensure(bc == 0, || format!("dim H_BC^(1,0) = {bc}"))?;
    let w2 = h.omega().power(2);
    ensure(s.d(&w2).unwrap().is_zero(), || "dω² ≠ 0".into())?;
    let decision = aeppli_class_vanishes(&s, &h, 1).map_err(|e| e.to_string())?;
    let w = decision.witness.ok_or("[ω²]_A does not vanish")?;
    let rebuilt = &s.del(&w.mu).unwrap() + &s.delbar(&w.lambda).unwrap();
    ensure(rebuilt == w2, || format!("∂μ + ∂̄λ = {rebuilt} ≠ ω²"))?;
    let report = verify_vanishing_theorem(&s, &h, 1).map_err(|e| e.to_string())?;
    ensure(
        report.verdict == Verdict::Consistent && report.hypothesis && report.conclusion(),
        || format!("{report:?}"),
    )
}

fn criterion_4() -> Check {
    let s = load("calabi-eckmann");
    let n = 3;
    let h = HermitianMetric::identity(n);
    let c = Cohomology::new(&s, Some(&h)).map_err(|e| e.to_string())?;
    let i = Scalar::i();
    let listed: Vec<((usize, usize), Vec<Form>)> = vec![
        ((0, 0), vec![Form::one(n)]),
        ((1, 1), vec![f(n, &[Holo(1), Anti(1)]), f(n, &[Holo(2), Anti(2)])]),
        (
            (2, 1),
            vec![&f(n, &[Holo(2), Holo(3), Anti(2)]) + &f(n, &[Holo(1), Holo(3), Anti(1)]).scale(&i)],
        ),
        (
            (1, 2),
            vec![&f(n, &[Holo(2), Anti(2), Anti(3)]) - &f(n, &[Holo(1), Anti(1), Anti(3)]).scale(&i)],
        ),
        ((2, 2), vec![f(n, &[Holo(1), Holo(2), Anti(1), Anti(2)])]),
        ((3, 2), vec![f(n, &[Holo(1), Holo(2), Holo(3), Anti(1), Anti(2)])]),
        ((2, 3), vec![f(n, &[Holo(1), Holo(2), Anti(1), Anti(2), Anti(3)])]),
        (
            (3, 3),
            vec![f(n, &[Holo(1), Holo(2), Holo(3), Anti(1), Anti(2), Anti(3)])],
        ),
    ];
    for p in 0..=n {
        for q in 0..=n {
            let dim = c.bott_chern(p, q).map_err(|e| e.to_string())?.dim;
            let reps = listed
                .iter()
                .find(|(b, _)| *b == (p, q))
                .map(|(_, r)| r.as_slice())
                .unwrap_or(&[]);
            ensure(dim == reps.len(), || {
                format!("dim H_BC^({p},{q}) = {dim}, table says {}", reps.len())
            })?;
            let harmonic = c
                .harmonic_forms(Laplacian::BottChern, p, q)
                .map_err(|e| e.to_string())?;
            for rep in reps {
                ensure(coordinates_in(&harmonic, rep).is_some(), || {
                    format!("{rep} is not Bott-Chern harmonic")
                })?;
            }
        }
    }
    // H_A^{2,2} = ⟨ψ^{11̄33̄}, ψ^{22̄33̄}⟩
    let a22 = c.aeppli(2, 2).map_err(|e| e.to_string())?;
    ensure(a22.dim == 2, || format!("dim H_A^(2,2) = {}", a22.dim))?;
    let x = f(n, &[Holo(1), Anti(1), Holo(3), Anti(3)]);
    let y = f(n, &[Holo(2), Anti(2), Holo(3), Anti(3)]);
    let mut exact = Vec::new();
    for (op, src) in [
        (Operator::Del, Space::Bidegree(1, 2)),
        (Operator::Delbar, Space::Bidegree(2, 1)),
    ] {
        let m = c.operator_matrix(op, src).map_err(|e| e.to_string())?.matrix;
        let b = Space::Bidegree(2, 2).basis(n);
        exact.extend(m.image().basis().iter().map(|v| Form::from_coords(n, &b, v)));
    }
    let ddbar = |g: &Form| s.del(&s.delbar(g).unwrap()).unwrap();
    ensure(ddbar(&x).is_zero() && ddbar(&y).is_zero(), || {
        "listed Aeppli forms are not ∂∂̄-closed".into()
    })?;
    let mut with_x = exact.clone();
    with_x.push(x.clone());
    ensure(
        coordinates_in(&exact, &x).is_none() && coordinates_in(&with_x, &y).is_none(),
        || "ψ^{11̄33̄}, ψ^{22̄33̄} are dependent modulo im ∂ + im ∂̄".into(),
    )?;
    for rep in &a22.representatives {
        let mut gens = exact.clone();
        gens.extend([x.clone(), y.clone()]);
        ensure(coordinates_in(&gens, rep).is_some(), || {
            format!("{rep} outside ⟨ψ^{{11̄33̄}}, ψ^{{22̄33̄}}⟩")
        })?;
    }
    let pairing = h.l2_pairing(&h.omega().power(2), &y).map_err(|e| e.to_string())?;
    ensure(pairing.is_real() && pairing.re().is_negative(), || {
        format!("⟨ω², ψ^{{22̄33̄}}⟩ = {pairing}")
    })?;
    let decision = aeppli_class_vanishes(&s, &h, 1).map_err(|e| e.to_string())?;
    ensure(!decision.vanishes, || "[ω²]_A vanishes".into())
}

fn criterion_5() -> Check {
    let s = load("kodaira-secondary");
    let n = 2;
    let h = HermitianMetric::identity(n);
    let c = Cohomology::new(&s, None).map_err(|e| e.to_string())?;
    let bc10 = c.bott_chern(1, 0).map_err(|e| e.to_string())?.dim;
    ensure(bc10 == 0, || format!("dim H_BC^(1,0) = {bc10}"))?;
    let x = f(n, &[Holo(1), Anti(1)]);
    let y = f(n, &[Holo(2), Anti(2)]);
    let bc11 = c.bott_chern(1, 1).map_err(|e| e.to_string())?;
    let closed = s.del(&x).unwrap().is_zero() && s.delbar(&x).unwrap().is_zero();
    // nothing is ∂∂̄-exact in bidegree (1,1): ∂∂̄ kills invariant functions
    ensure(bc11.dim == 1 && closed, || {
        format!("H_BC^(1,1) has dim {}, φ^{{11̄}} closed: {closed}", bc11.dim)
    })?;
    let star = h.star(&x).map_err(|e| e.to_string())?;
    ensure(star == -y.clone(), || format!("*φ^{{11̄}} = {star}"))?;
    let a11 = c.aeppli(1, 1).map_err(|e| e.to_string())?;
    let mut exact = Vec::new();
    for (op, src) in [
        (Operator::Del, Space::Bidegree(0, 1)),
        (Operator::Delbar, Space::Bidegree(1, 0)),
    ] {
        let m = c.operator_matrix(op, src).map_err(|e| e.to_string())?.matrix;
        let b = Space::Bidegree(1, 1).basis(n);
        exact.extend(m.image().basis().iter().map(|v| Form::from_coords(n, &b, v)));
    }
    let ddbar_closed = s.del(&s.delbar(&y).unwrap()).unwrap().is_zero();
    ensure(
        a11.dim == 1 && ddbar_closed && coordinates_in(&exact, &y).is_none(),
        || format!("H_A^(1,1) has dim {}, φ^{{22̄}} not a generator", a11.dim),
    )?;
    let mut r = rng(500);
    for k in 0..RANDOM_METRICS {
        let g = random_metric(&mut r, n);
        let d = aeppli_class_vanishes(&s, &g, 1).map_err(|e| e.to_string())?;
        ensure(!d.vanishes, || format!("[ω]_A = 0 for metric #{k}"))?;
    }
    Ok(())
}

fn criterion_6() -> Check {
    let mut r = rng(600);
    let h = HermitianMetric::identity(3);
    let mut holds = 0;
    for k in 0..SKT_TUPLES {
        let [a, b, c, d, e] = random_skt_tuple(&mut r);
        let fam = generate_skt_family(&a, &b, &c, &d, &e);
        let cond = skt_condition(&a, &b, &c, &d, &e);
        let skt = classify_metric(&fam, &h).map_err(|e| e.to_string())?.skt;
        ensure(cond == skt, || {
            format!("tuple #{k}: condition {cond}, ∂∂̄ω = 0 is {skt}")
        })?;
        if cond {
            holds += 1;
            let closed = closed_p0_forms(&fam, 2).map_err(|e| e.to_string())?;
            let bc20 = Cohomology::new(&fam, None)
                .unwrap()
                .bott_chern(2, 0)
                .map_err(|e| e.to_string())?;
            let vol = skt_holomorphic_volume();
            ensure(bc20.dim >= 1 && coordinates_in(&closed, &vol).is_some(), || {
                format!("tuple #{k}: α¹∧α² not in H_BC^(2,0)")
            })?;
            let dec = aeppli_class_vanishes(&fam, &h, 2).map_err(|e| e.to_string())?;
            ensure(!dec.vanishes, || format!("tuple #{k}: [ω]_A = 0"))?;
        }
    }
    ensure(holds > 0 && holds < SKT_TUPLES, || {
        format!("degenerate sample: condition held {holds} times")
    })
}

fn criterion_7() -> Check {
    let mut r = rng(700);
    for name in corpus::NAMES {
        let s = load(name);
        let h = HermitianMetric::identity(s.n());
        let ctx = |e: String| format!("{name}: {e}");
        checks::d_squared(&s).map_err(ctx)?;
        checks::bigraded_identities(&s).map_err(ctx)?;
        checks::leibniz(&s, &mut r, LEIBNIZ_PAIRS).map_err(ctx)?;
        checks::star_duality(&s).map_err(ctx)?;
        if s.flags().unimodular {
            checks::adjointness(&s, &h, &mut r, 20).map_err(ctx)?;
            checks::quotient_vs_harmonic(&s, &h).map_err(ctx)?;
        }
    }
    for n in 2..=3 {
        checks::star_defining_relation(&HermitianMetric::identity(n))?;
        checks::star_defining_relation(&random_metric(&mut r, n))?;
    }
    Ok(())
}

fn criterion_8() -> Check {
    for name in corpus::NAMES {
        let doc = corpus::load(name).expect("corpus entry");
        let h = doc
            .hermitian_metric()
            .map_err(|e| e.to_string())?
            .expect("corpus metric");
        checks::lefschetz_rank(&h).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "star of ω^{n-p}∧ψ equals c_{n,p}·conj(ψ) with the printed constant",
            criterion_1,
        ),
        ("∂* and ∂̄* annihilate ω^{n-p}∧ψ for closed (p,0)-forms ψ", criterion_2),
        (
            "sl2c: H_BC^(1,0) = 0, dω² = 0, [ω²]_A = 0 with witness, criterion consistent",
            criterion_3,
        ),
        (
            "calabi-eckmann: Bott-Chern table, harmonic representatives, H_A^(2,2), pairing sign",
            criterion_4,
        ),
        (
            "kodaira-secondary: H_BC^(1,0) = 0, H^(1,1) generators, *φ^{11̄} = -φ^{22̄}, [ω]_A ≠ 0",
            criterion_5,
        ),
        (
            "pluriclosed family: condition ⇔ ∂∂̄ω = 0, α¹∧α² ∈ H_BC^(2,0), [ω]_A ≠ 0",
            criterion_6,
        ),
        (
            "structural identities, adjointness, duality, quotient vs harmonic",
            criterion_7,
        ),
        ("Lefschetz map ω^{n-p}∧· injective on (p,0)-forms", criterion_8),
    ];
    let results: Vec<Check> = criteria.par_iter().map(|(_, run)| run()).collect();
    let mut failed = 0;
    for (k, ((title, _), result)) in criteria.iter().zip(&results).enumerate() {
        match result {
            Ok(()) => println!("PASS criterion {}: {title}", k + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {}: {title}: {e}", k + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
