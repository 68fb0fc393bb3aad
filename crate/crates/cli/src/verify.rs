//! The `verify` suite: corpus expectations plus every invariant check,
//! with entries verified in parallel.

use std::fmt::Write;

use aeppli_core::checks::{self, Check};
use aeppli_core::hodge::lefschetz_star_constant;
use aeppli_core::random::{random_metric, random_skt_tuple, rng, SeededRng};
use aeppli_core::{
    classify_metric, corpus, generate_skt_family, salamon_h10_check, skt_condition, verify_vanishing_theorem, Error,
    HermitianMetric, StructureEquations, Verdict,
};
use rayon::prelude::*;
use serde_json::json;

use crate::CliError;

const SKT_FAMILY: &str = "skt-family";
const RANDOM_METRICS: usize = 3;

pub struct CheckResult {
    pub entry: String,
    pub check: String,
    pub outcome: Check,
}

fn err(e: Error) -> String {
    e.to_string()
}

struct Suite {
    entry: String,
    results: Vec<CheckResult>,
}

impl Suite {
    fn record(&mut self, check: impl Into<String>, outcome: Check) {
        self.results.push(CheckResult {
            entry: self.entry.clone(),
            check: check.into(),
            outcome,
        });
    }
}

fn corpus_entry(name: &str, seed: u64) -> Vec<CheckResult> {
    let mut suite = Suite {
        entry: name.to_string(),
        results: Vec::new(),
    };
    let entry = corpus::entry(name).expect("known entry");
    let doc = match entry.document() {
        Ok(d) => d,
        Err(e) => {
            suite.record("parse", Err(err(e)));
            return suite.results;
        }
    };
    let s = &doc.equations;
    let mut r: SeededRng = rng(seed);
    let metric = match doc.hermitian_metric() {
        Ok(m) => m.unwrap_or_else(|| HermitianMetric::identity(s.n())),
        Err(e) => {
            suite.record("metric", Err(err(e)));
            return suite.results;
        }
    };

    for e in &entry.expected {
        suite.record(
            format!("expected {:?}", e.value),
            checks::expectation(s, Some(&metric), &e.value),
        );
    }
    suite.record("d squared", checks::d_squared(s));
    suite.record("Leibniz rule", checks::leibniz(s, &mut r, 100));
    if s.is_integrable() {
        integrable_checks(&mut suite, s, &metric, &mut r);
    }
    suite.results
}

fn integrable_checks(suite: &mut Suite, s: &StructureEquations, metric: &HermitianMetric, r: &mut SeededRng) {
    let unimodular = s.flags().unimodular;
    suite.record("bigraded identities", checks::bigraded_identities(s));
    suite.record("star duality of dimensions", checks::star_duality(s));
    suite.record("H_BC^(p,0) equals closed (p,0)-forms", checks::bc_p0_is_closed_forms(s));
    suite.record("de Rham Euler characteristic", checks::de_rham_euler(s));

    let mut metrics = vec![metric.clone()];
    metrics.extend((0..RANDOM_METRICS).map(|_| random_metric(r, s.n())));
    for (k, h) in metrics.iter().enumerate() {
        let tag = if k == 0 {
            "metric".to_string()
        } else {
            format!("random metric {k}")
        };
        suite.record(
            format!("star defining relation ({tag})"),
            checks::star_defining_relation_sampled(h, r, 20),
        );
        suite.record(format!("star isometry ({tag})"), checks::star_isometry(h, r, 10));
        suite.record(format!("star involution ({tag})"), checks::star_involution(h, r, 10));
        suite.record(
            format!("star of ω^(n-p)∧ψ ({tag})"),
            checks::star_of_lefschetz(h, lefschetz_star_constant),
        );
        suite.record(format!("Lefschetz injectivity ({tag})"), checks::lefschetz_rank(h));
        suite.record(
            format!("adjoints kill ω^(n-p)∧ψ ({tag})"),
            checks::delstar_on_closed(s, h),
        );
        if unimodular {
            suite.record(format!("adjointness ({tag})"), checks::adjointness(s, h, r, 10));
        }
    }
    if unimodular {
        suite.record(
            "quotient and harmonic dimensions agree",
            checks::quotient_vs_harmonic(s, metric),
        );
        suite.record("Laplacians self-adjoint", checks::laplacian_self_adjoint(s, metric));
    }
    for p in 1..s.n() {
        let outcome = match verify_vanishing_theorem(s, metric, p) {
            Ok(rep) if rep.verdict == Verdict::Consistent => Ok(()),
            Ok(rep) => Err(rep.note),
            Err(Error::ClassUndefined { .. }) => continue,
            Err(e) => Err(err(e)),
        };
        suite.record(format!("vanishing criterion p={p}"), outcome);
    }
    if s.flags().nilpotent {
        let outcome = salamon_h10_check(s, &metrics).map_err(err).and_then(|rep| {
            if rep.consistent() {
                Ok(())
            } else {
                Err(format!(
                    "dim of closed (1,0)-forms {}, checks {:?}",
                    rep.h10_dim(),
                    rep.metrics
                ))
            }
        });
        suite.record("closed (1,0)-forms obstruct vanishing", outcome);
    }
}

fn skt_family(seed: u64) -> Vec<CheckResult> {
    let mut r = rng(seed);
    let h = HermitianMetric::identity(3);
    let outcome = (0..20).try_for_each(|k| {
        let [a, b, c, d, e] = random_skt_tuple(&mut r);
        let s = generate_skt_family(&a, &b, &c, &d, &e);
        let skt = classify_metric(&s, &h).map_err(err)?.skt;
        if skt != skt_condition(&a, &b, &c, &d, &e) {
            return Err(format!("tuple {k}: ∂∂̄ω = 0 is {skt}, closed-form condition disagrees"));
        }
        Ok(())
    });
    vec![CheckResult {
        entry: SKT_FAMILY.into(),
        check: "pluriclosed condition matches ∂∂̄ω = 0".into(),
        outcome,
    }]
}

/// Runs the suite over `all` entries or a single corpus entry.
pub fn run(scope: &str, seed: u64) -> Result<Vec<CheckResult>, CliError> {
    let mut scopes: Vec<&str> = match scope {
        "all" => corpus::NAMES.to_vec(),
        name if corpus::entry(name).is_some() => vec![name],
        SKT_FAMILY => vec![],
        other => return Err(Error::UnknownCorpus(other.to_string()).into()),
    };
    if scope == "all" || scope == SKT_FAMILY {
        scopes.push(SKT_FAMILY);
    }
    Ok(scopes
        .par_iter()
        .enumerate()
        .flat_map_iter(|(k, name)| {
            let seed = seed.wrapping_add(k as u64);
            if *name == SKT_FAMILY {
                skt_family(seed)
            } else {
                corpus_entry(name, seed)
            }
        })
        .collect())
}

pub fn render(results: &[CheckResult], json: bool) -> String {
    let failed: Vec<&CheckResult> = results.iter().filter(|r| r.outcome.is_err()).collect();
    if json {
        let items: Vec<_> = results
            .iter()
            .map(|r| {
                json!({
                    "entry": r.entry,
                    "check": r.check,
                    "ok": r.outcome.is_ok(),
                    "message": r.outcome.as_ref().err(),
                })
            })
            .collect();
        let v = json!({ "passed": results.len() - failed.len(), "failed": failed.len(), "checks": items });
        return serde_json::to_string_pretty(&v).expect("serializable") + "\n";
    }
    let mut out = String::new();
    for r in results {
        let status = if r.outcome.is_ok() { "ok  " } else { "FAIL" };
        let _ = writeln!(out, "{status} {:<18} {}", r.entry, r.check);
    }
    let _ = writeln!(out, "\n{} checks, {} failed", results.len(), failed.len());
    for r in failed {
        let _ = writeln!(out, "  {} / {}: {}", r.entry, r.check, r.outcome.as_ref().unwrap_err());
    }
    out
}
