use std::collections::BTreeMap;
use std::fmt::Write;

use aeppli_core::report::{DecisionEntry, GroupEntry, MetricClassEntry};
use aeppli_core::{aeppli_class_vanishes, classify_metric, AlgebraFlags, CohomologyReport, GroupSelection};
use serde_json::json;

use crate::input;
use crate::CliError;

fn flags_line(f: AlgebraFlags) -> String {
    let mark = |b: bool, name: &str| if b { name.to_string() } else { format!("not {name}") };
    format!(
        "{}, {}, {}",
        mark(f.integrable, "integrable"),
        mark(f.unimodular, "unimodular"),
        mark(f.nilpotent, "nilpotent")
    )
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
}

pub fn parse(path: &str, json: bool) -> Result<String, CliError> {
    let doc = input::document(path)?;
    let s = &doc.equations;
    if json {
        let equations: Vec<String> = (1..=s.n()).map(|i| s.dgen(i).to_string()).collect();
        return Ok(pretty(json!({
            "algebra": s.name(),
            "n": s.n(),
            "equations": equations,
            "flags": s.flags(),
        })));
    }
    Ok(format!("{}# {}\n", s.to_lie(), flags_line(s.flags())))
}

fn bigraded_table(out: &mut String, title: &str, n: usize, groups: &BTreeMap<String, GroupEntry>) {
    if groups.is_empty() {
        return;
    }
    let _ = writeln!(out, "\n{title}");
    let _ = write!(out, "     ");
    for q in 0..=n {
        let _ = write!(out, " q={q}");
    }
    out.push('\n');
    for p in 0..=n {
        let _ = write!(out, "  p={p}");
        for q in 0..=n {
            let _ = write!(out, " {:>3}", groups[&format!("{p},{q}")].dim);
        }
        out.push('\n');
    }
    reps(out, groups);
}

fn reps(out: &mut String, groups: &BTreeMap<String, GroupEntry>) {
    for (key, g) in groups.iter().filter(|(_, g)| g.dim > 0) {
        let _ = writeln!(out, "  ({key}): {}", g.reps.join(", "));
    }
}

fn class_line(c: &MetricClassEntry) -> String {
    let yes = |b: bool| if b { "yes" } else { "no" };
    format!(
        "kaehler: {}  balanced: {}  gauduchon: {}  skt: {}",
        yes(c.kaehler),
        yes(c.balanced),
        yes(c.gauduchon),
        yes(c.skt)
    )
}

fn decision_text(n: usize, d: &DecisionEntry) -> String {
    let mut out = format!("[ω^{}]_A (p = {}): ", n - d.p, d.p);
    if d.vanishes {
        out.push_str("vanishes\n");
    } else {
        out.push_str("nonzero\n");
    }
    if let Some(w) = &d.witness {
        let _ = writeln!(out, "  mu     = {}\n  lambda = {}", w.mu, w.lambda);
    }
    if let Some(o) = &d.obstruction {
        let _ = writeln!(
            out,
            "  harmonic Aeppli form {}\n  pairing with ω^{} = {}",
            o.harmonic,
            n - d.p,
            o.pairing
        );
    }
    out
}

pub fn cohomology(path: &str, metric: Option<&str>, groups: GroupSelection, json: bool) -> Result<String, CliError> {
    let doc = input::document(path)?;
    let h = input::metric(&doc, metric)?;
    let report = CohomologyReport::build(&doc.equations, h.as_ref(), groups)?;
    if json {
        return Ok(report.to_json() + "\n");
    }
    let n = report.n;
    let mut out = format!("{} (n = {n}): {}\n", report.algebra, flags_line(report.flags));
    let c = &report.cohomology;
    bigraded_table(&mut out, "Bott-Chern", n, &c.bc);
    bigraded_table(&mut out, "Aeppli", n, &c.a);
    bigraded_table(&mut out, "Dolbeault", n, &c.dolbeault);
    if !c.derham.is_empty() {
        let dims: Vec<String> = (0..=2 * n).map(|k| c.derham[&k.to_string()].dim.to_string()).collect();
        let _ = writeln!(out, "\nde Rham: {}", dims.join(" "));
        reps(&mut out, &c.derham);
    }
    if let Some(class) = &report.metric_class {
        let _ = writeln!(out, "\nmetric: {}", class_line(class));
    }
    for d in &report.aeppli_decisions {
        out.push_str(&decision_text(n, d));
    }
    Ok(out)
}

pub fn classify(path: &str, metric: Option<&str>, json: bool) -> Result<String, CliError> {
    let doc = input::document(path)?;
    let h = input::metric_or_identity(&doc, metric)?;
    let class: MetricClassEntry = classify_metric(&doc.equations, &h)?.into();
    if json {
        return Ok(serde_json::to_string_pretty(&class).expect("serializable") + "\n");
    }
    Ok(class_line(&class) + "\n")
}

pub fn aeppli(path: &str, metric: Option<&str>, p: usize, json: bool) -> Result<String, CliError> {
    let doc = input::document(path)?;
    let h = input::metric_or_identity(&doc, metric)?;
    let decision: DecisionEntry = (&aeppli_class_vanishes(&doc.equations, &h, p)?).into();
    if json {
        return Ok(serde_json::to_string_pretty(&decision).expect("serializable") + "\n");
    }
    Ok(decision_text(doc.equations.n(), &decision))
}
