//! Built-in structure equations with their expected invariants.
//!
//! Every expected value records where it comes from, so a failing check
//! can be traced to a published table, an elementary argument, or an
//! independent hand or brute-force computation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::structure::{parse_document, AlgebraFlags, LieDocument};

pub const NAMES: [&str; 5] = [
    "sl2c",
    "calabi-eckmann",
    "kodaira-secondary",
    "skt-nilmanifold",
    "iwasawa",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Stated in the published literature for this example.
    Published,
    /// Follows from an elementary argument (degree, definitions).
    Elementary,
    /// Computed independently of the engine (by hand or brute force).
    IndependentCheck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Expected {
    Flags { flags: AlgebraFlags },
    BottChern { p: usize, q: usize, dim: usize },
    Aeppli { p: usize, q: usize, dim: usize },
    Dolbeault { p: usize, q: usize, dim: usize },
    DeRham { k: usize, dim: usize },
    ClosedP0 { p: usize, dim: usize },
    AeppliVanishes { p: usize, vanishes: bool },
    Kaehler { value: bool },
    Balanced { value: bool },
    Skt { value: bool },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub value: Expected,
    pub provenance: Provenance,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub source: &'static str,
    pub expected: Vec<Expectation>,
}

impl CorpusEntry {
    pub fn document(&self) -> Result<LieDocument> {
        parse_document(self.source)
    }
}

fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "sl2c" => include_str!("../corpus/sl2c.lie"),
        "calabi-eckmann" => include_str!("../corpus/calabi-eckmann.lie"),
        "kodaira-secondary" => include_str!("../corpus/kodaira-secondary.lie"),
        "skt-nilmanifold" => include_str!("../corpus/skt-nilmanifold.lie"),
        "iwasawa" => include_str!("../corpus/iwasawa.lie"),
        _ => return None,
    })
}

/// Parses a corpus entry.
pub fn load(name: &str) -> Result<LieDocument> {
    parse_document(source(name).ok_or_else(|| Error::UnknownCorpus(name.to_string()))?)
}

pub fn entries() -> Vec<CorpusEntry> {
    NAMES.iter().map(|n| entry(n).expect("known entry")).collect()
}

pub fn entry(name: &str) -> Option<CorpusEntry> {
    use Expected::*;
    use Provenance::*;
    let e = |value, provenance| Expectation { value, provenance };
    let flags = |integrable, unimodular, nilpotent| Flags {
        flags: AlgebraFlags {
            integrable,
            unimodular,
            nilpotent,
        },
    };
    let (name, expected): (&'static str, Vec<Expectation>) = match name {
        "sl2c" => (
            "sl2c",
            vec![
                e(flags(true, true, false), IndependentCheck),
                e(BottChern { p: 1, q: 0, dim: 0 }, Published),
                e(ClosedP0 { p: 1, dim: 0 }, Published),
                e(Dolbeault { p: 1, q: 0, dim: 3 }, Published),
                e(DeRham { k: 0, dim: 1 }, Elementary),
                e(DeRham { k: 1, dim: 0 }, Elementary),
                e(AeppliVanishes { p: 1, vanishes: true }, Published),
                e(Balanced { value: true }, Published),
                e(Kaehler { value: false }, Published),
            ],
        ),
        "calabi-eckmann" => {
            let mut v = vec![e(flags(true, true, false), IndependentCheck)];
            let nonzero = [(0, 0), (1, 1), (2, 1), (1, 2), (2, 2), (3, 2), (2, 3), (3, 3)];
            let dims = [1, 2, 1, 1, 1, 1, 1, 1];
            for p in 0..=3 {
                for q in 0..=3 {
                    let dim = nonzero.iter().position(|&b| b == (p, q)).map_or(0, |k| dims[k]);
                    v.push(e(BottChern { p, q, dim }, Published));
                }
            }
            v.push(e(Aeppli { p: 2, q: 2, dim: 2 }, Published));
            v.push(e(AeppliVanishes { p: 1, vanishes: false }, Published));
            ("calabi-eckmann", v)
        }
        "kodaira-secondary" => (
            "kodaira-secondary",
            vec![
                e(flags(true, true, false), IndependentCheck),
                e(BottChern { p: 1, q: 0, dim: 0 }, Published),
                e(BottChern { p: 1, q: 1, dim: 1 }, Published),
                e(Aeppli { p: 1, q: 1, dim: 1 }, Published),
                e(AeppliVanishes { p: 1, vanishes: false }, Published),
            ],
        ),
        "skt-nilmanifold" => (
            "skt-nilmanifold",
            vec![
                e(flags(true, true, true), Published),
                e(ClosedP0 { p: 1, dim: 2 }, Published),
                e(ClosedP0 { p: 2, dim: 1 }, IndependentCheck),
                e(BottChern { p: 2, q: 0, dim: 1 }, IndependentCheck),
                e(Skt { value: true }, IndependentCheck),
                e(AeppliVanishes { p: 2, vanishes: false }, Published),
                e(AeppliVanishes { p: 1, vanishes: false }, Published),
            ],
        ),
        "iwasawa" => (
            "iwasawa",
            vec![
                e(flags(true, true, true), IndependentCheck),
                e(ClosedP0 { p: 1, dim: 2 }, IndependentCheck),
                e(BottChern { p: 1, q: 0, dim: 2 }, IndependentCheck),
                e(AeppliVanishes { p: 1, vanishes: false }, Published),
            ],
        ),
        _ => return None,
    };
    Some(CorpusEntry {
        name,
        source: source(name)?,
        expected,
    })
}
