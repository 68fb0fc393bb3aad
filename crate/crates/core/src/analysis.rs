//! Metric classification and the Aeppli-class vanishing criterion for
//! closed holomorphic forms, checked on invariant forms.
//!
//! If `[ω^{n−p}]_A = 0` then every `∂`- and `∂̄`-closed (p,0)-form vanishes.
//! At the invariant level this becomes: whenever `ω^{n−p} ∈ im ∂ + im ∂̄`,
//! `H^{p,0}_BC` must be zero. The converse fails in general.

use num::Zero;
use serde::Serialize;

use crate::cohomology::{Cohomology, Laplacian, Operator, Space};
use crate::error::{Error, Result};
use crate::exterior::{Factor, Form};
use crate::hodge::HermitianMetric;
use crate::linalg::Subspace;
use crate::scalar::{Rational, Scalar};
use crate::structure::{term, StructureEquations};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MetricClass {
    pub kaehler: bool,
    pub balanced: bool,
    pub gauduchon: bool,
    pub skt: bool,
}

/// Decides each class by exact vanishing of `dω`, `dω^{n−1}`,
/// `∂∂̄ω^{n−1}` and `∂∂̄ω`.
pub fn classify_metric(s: &StructureEquations, h: &HermitianMetric) -> Result<MetricClass> {
    check_dims(s, h)?;
    let n = s.n();
    let omega = h.omega();
    let top = omega.power(n - 1);
    let ddbar = |f: &Form| -> Result<Form> { s.del(&s.delbar(f)?) };
    let class = MetricClass {
        kaehler: s.d(omega)?.is_zero(),
        balanced: s.d(&top)?.is_zero(),
        gauduchon: ddbar(&top)?.is_zero(),
        skt: ddbar(omega)?.is_zero(),
    };
    debug_assert!(!class.kaehler || class.balanced);
    debug_assert!(!class.balanced || class.gauduchon);
    debug_assert!(!class.kaehler || class.skt);
    Ok(class)
}

fn check_dims(s: &StructureEquations, h: &HermitianMetric) -> Result<()> {
    if s.n() != h.n() {
        return Err(Error::Dimension {
            left: s.n(),
            right: h.n(),
        });
    }
    Ok(())
}

/// `ω^{n−p} = ∂μ + ∂̄λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AeppliWitness {
    pub mu: Form,
    pub lambda: Form,
}

/// A harmonic Aeppli form pairing nontrivially with `ω^{n−p}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AeppliObstruction {
    pub harmonic: Form,
    pub pairing: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AeppliDecision {
    pub p: usize,
    pub vanishes: bool,
    pub witness: Option<AeppliWitness>,
    pub obstruction: Option<AeppliObstruction>,
}

/// Decides whether `[ω^{n−p}]_A = 0` by solving `ω^{n−p} ∈ im ∂ + im ∂̄`.
/// On unimodular algebras a non-vanishing class comes with a harmonic
/// certificate.
pub fn aeppli_class_vanishes(s: &StructureEquations, h: &HermitianMetric, p: usize) -> Result<AeppliDecision> {
    check_dims(s, h)?;
    let n = s.n();
    if p == 0 || p >= n {
        return Err(Error::Bidegree { p, q: 0, n });
    }
    let power = n - p;
    let target = h.omega().power(power);
    let residual = s.del(&s.delbar(&target)?)?;
    if !residual.is_zero() {
        return Err(Error::ClassUndefined {
            power,
            residual: residual.to_string(),
        });
    }
    let engine = Cohomology::new(s, Some(h))?;
    if let Some((mu, lambda)) = engine.del_plus_delbar_preimage(&target)? {
        debug_assert_eq!(&s.del(&mu)? + &s.delbar(&lambda)?, target);
        return Ok(AeppliDecision {
            p,
            vanishes: true,
            witness: Some(AeppliWitness { mu, lambda }),
            obstruction: None,
        });
    }
    let obstruction = if s.flags().unimodular {
        let mut found = None;
        for v in engine.harmonic_forms(Laplacian::Aeppli, power, power)? {
            let pairing = h.l2_pairing(&target, &v)?;
            if !pairing.is_zero() {
                found = Some(AeppliObstruction { harmonic: v, pairing });
                break;
            }
        }
        found
    } else {
        None
    };
    Ok(AeppliDecision {
        p,
        vanishes: false,
        witness: None,
        obstruction,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Consistent,
    CounterexampleAtInvariantLevel,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingReport {
    pub p: usize,
    /// `[ω^{n−p}]_A = 0`.
    pub hypothesis: bool,
    pub bc_dim: usize,
    pub verdict: Verdict,
    pub note: String,
}

impl VanishingReport {
    pub fn conclusion(&self) -> bool {
        self.bc_dim == 0
    }
}

/// Checks the implication `[ω^{n−p}]_A = 0 ⇒ H^{p,0}_BC = 0` on invariant forms.
pub fn verify_vanishing_theorem(s: &StructureEquations, h: &HermitianMetric, p: usize) -> Result<VanishingReport> {
    let decision = aeppli_class_vanishes(s, h, p)?;
    let bc_dim = Cohomology::new(s, None)?.bott_chern(p, 0)?.dim;
    let (verdict, note) = match (decision.vanishes, bc_dim == 0) {
        (true, true) => (
            Verdict::Consistent,
            format!(
                "[ω^{}]_A = 0, so every closed ({p},0)-form vanishes: H^{{{p},0}}_BC = 0",
                s.n() - p
            ),
        ),
        (true, false) => (
            Verdict::CounterexampleAtInvariantLevel,
            format!("[ω^{}]_A = 0 but dim H^{{{p},0}}_BC = {bc_dim}", s.n() - p),
        ),
        (false, true) => (
            Verdict::Consistent,
            format!(
                "[ω^{}]_A ≠ 0 yet H^{{{p},0}}_BC = 0: the criterion is sufficient, not necessary",
                s.n() - p
            ),
        ),
        (false, false) => (
            Verdict::Consistent,
            format!("[ω^{}]_A ≠ 0; hypothesis fails, nothing to check", s.n() - p),
        ),
    };
    Ok(VanishingReport {
        p,
        hypothesis: decision.vanishes,
        bc_dim,
        verdict,
        note,
    })
}

/// `d`-closed invariant (p,0)-forms.
pub fn closed_p0_space(s: &StructureEquations, p: usize) -> Result<Subspace> {
    let m = Cohomology::new(s, None)?.operator_matrix(Operator::D, Space::Bidegree(p, 0))?;
    Ok(m.matrix.kernel())
}

pub fn closed_p0_forms(s: &StructureEquations, p: usize) -> Result<Vec<Form>> {
    let n = s.n();
    let b = Space::Bidegree(p, 0).basis(n);
    Ok(closed_p0_space(s, p)?
        .basis()
        .iter()
        .map(|v| Form::from_coords(n, &b, v))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricAeppliCheck {
    pub gauduchon: bool,
    /// `[ω^{n−1}]_A ≠ 0`, decided by linear solvability; `None` when the
    /// metric is not Gauduchon and the class is undefined.
    pub class_nonzero: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormsReport {
    pub closed_forms: Vec<Form>,
    pub metrics: Vec<MetricAeppliCheck>,
}

impl ClosedFormsReport {
    pub fn h10_dim(&self) -> usize {
        self.closed_forms.len()
    }

    /// A nilmanifold has a closed (1,0)-form, so no Gauduchon metric can
    /// have `[ω^{n−1}]_A = 0`.
    pub fn consistent(&self) -> bool {
        self.h10_dim() > 0
            && self
                .metrics
                .iter()
                .all(|m| !m.gauduchon || m.class_nonzero == Some(true))
    }
}

pub fn salamon_h10_check(s: &StructureEquations, metrics: &[HermitianMetric]) -> Result<ClosedFormsReport> {
    if !s.flags().nilpotent {
        return Err(Error::NotNilpotent);
    }
    s.require_integrable()?;
    let closed_forms = closed_p0_forms(s, 1)?;
    let mut checks = Vec::with_capacity(metrics.len());
    for h in metrics {
        let gauduchon = classify_metric(s, h)?.gauduchon;
        let class_nonzero = if gauduchon {
            Some(!aeppli_class_vanishes(s, h, 1)?.vanishes)
        } else {
            None
        };
        checks.push(MetricAeppliCheck {
            gauduchon,
            class_nonzero,
        });
    }
    Ok(ClosedFormsReport {
        closed_forms,
        metrics: checks,
    })
}

/// `|A|² + |D|² + |E|² + 2 Re(B̄C) = 0`.
pub fn skt_condition(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar, e: &Scalar) -> bool {
    let two = Rational::from_integer(2.into());
    let total = a.norm_sqr() + d.norm_sqr() + e.norm_sqr() + (&b.conj() * c).re() * two;
    total.is_zero()
}

/// `dα¹ = dα² = 0`, `dα³ = A α^{1̄2} + B α^{2̄2} + C α^{11̄} + D α^{12̄} + E α^{12}`.
pub fn generate_skt_family(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar, e: &Scalar) -> StructureEquations {
    use Factor::{Anti, Holo};
    let n = 3;
    let d3 = [
        term(n, a.clone(), &[Anti(1), Holo(2)]),
        term(n, b.clone(), &[Anti(2), Holo(2)]),
        term(n, c.clone(), &[Holo(1), Anti(1)]),
        term(n, d.clone(), &[Holo(1), Anti(2)]),
        term(n, e.clone(), &[Holo(1), Holo(2)]),
    ]
    .into_iter()
    .fold(Form::zero(n), |acc, t| &acc + &t);
    StructureEquations::new("skt-family", n, vec![Form::zero(n), Form::zero(n), d3])
        .expect("the family satisfies d² = 0")
}

/// `α¹ ∧ α²` as a (2,0)-form on the family.
pub fn skt_holomorphic_volume() -> Form {
    Form::from_factors(3, &[Factor::Holo(1), Factor::Holo(2)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::random::{random_metric, random_skt_tuple, rng};

    fn load(name: &str) -> StructureEquations {
        corpus::load(name).unwrap().equations
    }

    fn s(re: i64, im: i64) -> Scalar {
        Scalar::from_ratios(re, 1, im, 1)
    }

    #[test]
    fn sl2c_identity_is_balanced_not_kaehler() {
        let c = classify_metric(&load("sl2c"), &HermitianMetric::identity(3)).unwrap();
        assert!(c.balanced && c.gauduchon && !c.kaehler);
    }

    #[test]
    fn sl2c_aeppli_class_vanishes() {
        let sl = load("sl2c");
        let h = HermitianMetric::identity(3);
        let d = aeppli_class_vanishes(&sl, &h, 1).unwrap();
        assert!(d.vanishes && d.obstruction.is_none());
        let w = d.witness.unwrap();
        assert_eq!(w.mu.bidegree(), Some((1, 2)));
        assert_eq!(w.lambda.bidegree().unwrap_or((2, 1)), (2, 1));
        assert_eq!(
            &sl.del(&w.mu).unwrap() + &sl.delbar(&w.lambda).unwrap(),
            h.omega().power(2)
        );
        let r = verify_vanishing_theorem(&sl, &h, 1).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        assert!(r.hypothesis && r.conclusion());
    }

    #[test]
    fn calabi_eckmann_obstruction() {
        let ce = load("calabi-eckmann");
        let h = HermitianMetric::identity(3);
        let d = aeppli_class_vanishes(&ce, &h, 1).unwrap();
        assert!(!d.vanishes && d.witness.is_none());
        let ob = d.obstruction.unwrap();
        assert!(!ob.pairing.is_zero());
        let r = verify_vanishing_theorem(&ce, &h, 1).unwrap();
        assert!(!r.hypothesis && r.conclusion());
        assert!(r.note.contains("sufficient, not necessary"));
    }

    #[test]
    fn kodaira_class_nonzero_for_random_metrics() {
        let k = load("kodaira-secondary");
        let mut r = rng(5);
        for _ in 0..5 {
            let h = random_metric(&mut r, 2);
            assert!(classify_metric(&k, &h).unwrap().gauduchon);
            assert!(!aeppli_class_vanishes(&k, &h, 1).unwrap().vanishes);
        }
    }

    #[test]
    fn undefined_class_is_refused() {
        // ∂∂̄ω ≠ 0 on the family when the condition fails
        let fam = generate_skt_family(&s(1, 0), &s(0, 0), &s(0, 0), &s(0, 0), &s(0, 0));
        let h = HermitianMetric::identity(3);
        assert!(matches!(
            aeppli_class_vanishes(&fam, &h, 2),
            Err(Error::ClassUndefined { power: 1, .. })
        ));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_p0_space(&load("sl2c"), 1).unwrap().dim(), 0);
        assert_eq!(closed_p0_space(&load("sl2c"), 0).unwrap().dim(), 1);
        assert_eq!(closed_p0_space(&load("skt-nilmanifold"), 1).unwrap().dim(), 2);
        assert_eq!(closed_p0_space(&load("iwasawa"), 1).unwrap().dim(), 2);
    }

    #[test]
    fn nilmanifold_closed_forms_obstruct_vanishing() {
        let h = [HermitianMetric::identity(3)];
        let rep = salamon_h10_check(&load("iwasawa"), &h).unwrap();
        assert_eq!(rep.h10_dim(), 2);
        assert!(rep.consistent());
        assert_eq!(salamon_h10_check(&load("sl2c"), &h).unwrap_err(), Error::NotNilpotent);
    }

    #[test]
    fn skt_condition_examples() {
        let z = s(0, 0);
        assert!(skt_condition(&z, &s(1, 0), &s(0, 1), &z, &z));
        assert!(!skt_condition(&s(1, 0), &z, &z, &z, &z));
        let fam = generate_skt_family(&z, &s(1, 0), &s(0, 1), &z, &z);
        assert!(classify_metric(&fam, &HermitianMetric::identity(3)).unwrap().skt);
    }

    #[test]
    fn skt_condition_matches_pluriclosed() {
        let mut r = rng(17);
        let h = HermitianMetric::identity(3);
        for _ in 0..10 {
            let [a, b, c, d, e] = random_skt_tuple(&mut r);
            let fam = generate_skt_family(&a, &b, &c, &d, &e);
            assert_eq!(
                skt_condition(&a, &b, &c, &d, &e),
                classify_metric(&fam, &h).unwrap().skt
            );
        }
    }
}
