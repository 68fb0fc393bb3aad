//! Serializable cohomology report. Maps are ordered so identical inputs
//! give byte-identical JSON; forms are written in `.lie` term syntax.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::analysis::{aeppli_class_vanishes, classify_metric, AeppliDecision, MetricClass};
use crate::cohomology::{Cohomology, CohomologyGroup};
use crate::error::{Error, Result};
use crate::hodge::HermitianMetric;
use crate::structure::{AlgebraFlags, StructureEquations};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupEntry {
    pub dim: usize,
    pub reps: Vec<String>,
}

impl From<&CohomologyGroup> for GroupEntry {
    fn from(g: &CohomologyGroup) -> Self {
        GroupEntry {
            dim: g.dim,
            reps: g.representatives.iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyTables {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bc: BTreeMap<String, GroupEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub a: BTreeMap<String, GroupEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub dolbeault: BTreeMap<String, GroupEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub derham: BTreeMap<String, GroupEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub mu: String,
    pub lambda: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionEntry {
    pub harmonic: String,
    pub pairing: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionEntry {
    pub p: usize,
    pub vanishes: bool,
    pub witness: Option<WitnessEntry>,
    pub obstruction: Option<ObstructionEntry>,
}

impl From<&AeppliDecision> for DecisionEntry {
    fn from(d: &AeppliDecision) -> Self {
        DecisionEntry {
            p: d.p,
            vanishes: d.vanishes,
            witness: d.witness.as_ref().map(|w| WitnessEntry {
                mu: w.mu.to_string(),
                lambda: w.lambda.to_string(),
            }),
            obstruction: d.obstruction.as_ref().map(|o| ObstructionEntry {
                harmonic: o.harmonic.to_string(),
                pairing: o.pairing.to_string(),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricClassEntry {
    pub kaehler: bool,
    pub balanced: bool,
    pub gauduchon: bool,
    pub skt: bool,
}

impl From<MetricClass> for MetricClassEntry {
    fn from(c: MetricClass) -> Self {
        MetricClassEntry {
            kaehler: c.kaehler,
            balanced: c.balanced,
            gauduchon: c.gauduchon,
            skt: c.skt,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub algebra: String,
    pub n: usize,
    pub flags: AlgebraFlags,
    pub metric_class: Option<MetricClassEntry>,
    pub cohomology: CohomologyTables,
    pub aeppli_decisions: Vec<DecisionEntry>,
}

/// Which groups a report computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupSelection {
    pub bc: bool,
    pub a: bool,
    pub dolbeault: bool,
    pub derham: bool,
}

impl GroupSelection {
    pub fn all() -> Self {
        GroupSelection {
            bc: true,
            a: true,
            dolbeault: true,
            derham: true,
        }
    }
}

impl Default for GroupSelection {
    fn default() -> Self {
        GroupSelection::all()
    }
}

impl std::str::FromStr for GroupSelection {
    type Err = String;

    /// Comma-separated subset of `bc,a,dolbeault,derham`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut sel = GroupSelection {
            bc: false,
            a: false,
            dolbeault: false,
            derham: false,
        };
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "bc" => sel.bc = true,
                "a" => sel.a = true,
                "dolbeault" => sel.dolbeault = true,
                "derham" => sel.derham = true,
                other => return Err(format!("unknown group `{other}` (expected bc, a, dolbeault, derham)")),
            }
        }
        Ok(sel)
    }
}

impl CohomologyReport {
    /// Computes the selected groups over every bidegree. Bigraded groups are
    /// skipped for non-integrable structures; Aeppli decisions are included
    /// for each `p` whose class is defined.
    pub fn build(s: &StructureEquations, metric: Option<&HermitianMetric>, groups: GroupSelection) -> Result<Self> {
        let n = s.n();
        let engine = Cohomology::new(s, metric)?;
        let mut tables = CohomologyTables::default();
        let integrable = s.is_integrable();
        for p in 0..=n {
            for q in 0..=n {
                if !integrable {
                    break;
                }
                let key = format!("{p},{q}");
                if groups.bc {
                    tables.bc.insert(key.clone(), (&engine.bott_chern(p, q)?).into());
                }
                if groups.a {
                    tables.a.insert(key.clone(), (&engine.aeppli(p, q)?).into());
                }
                if groups.dolbeault {
                    tables.dolbeault.insert(key, (&engine.dolbeault(p, q)?).into());
                }
            }
        }
        if groups.derham {
            for k in 0..=2 * n {
                tables.derham.insert(k.to_string(), (&engine.de_rham(k)?).into());
            }
        }
        let mut metric_class = None;
        let mut aeppli_decisions = Vec::new();
        if let (Some(h), true) = (metric, integrable) {
            metric_class = Some(classify_metric(s, h)?.into());
            for p in 1..n {
                match aeppli_class_vanishes(s, h, p) {
                    Ok(d) => aeppli_decisions.push((&d).into()),
                    Err(Error::ClassUndefined { .. }) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        Ok(CohomologyReport {
            algebra: s.name().to_string(),
            n,
            flags: s.flags(),
            metric_class,
            cohomology: tables,
            aeppli_decisions,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
