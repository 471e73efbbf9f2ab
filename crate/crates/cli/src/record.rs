use std::collections::BTreeMap;
use std::fmt::Write as _;

use qchar::{LaurentPoly, Weight};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Euler,
    Irreducible,
    Kw,
}

impl Kind {
    /// Prefix used in cache file names.
    pub fn tag(self) -> &'static str {
        match self {
            Kind::Euler => "euler",
            Kind::Irreducible => "irr",
            Kind::Kw => "kw",
        }
    }

    fn title(self) -> &'static str {
        match self {
            Kind::Euler => "ch E",
            Kind::Irreducible => "ch L",
            Kind::Kw => "closed formula for ch L",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRecord {
    pub kind: Kind,
    pub weight: Weight,
    pub character: LaurentPoly,
    /// Decimal string, since dimensions outgrow 64 bits.
    pub dimension: String,
    pub metadata: BTreeMap<String, Value>,
}

impl CharacterRecord {
    pub fn new(
        kind: Kind,
        weight: Weight,
        character: LaurentPoly,
        metadata: BTreeMap<String, Value>,
    ) -> Self {
        let dimension = character.specialize_ones().to_string();
        CharacterRecord {
            kind,
            weight,
            character,
            dimension,
            metadata,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}({})", self.kind.title(), self.weight).unwrap();
        writeln!(out, "dimension: {}", self.dimension).unwrap();
        for (k, v) in &self.metadata {
            match v {
                Value::String(s) => writeln!(out, "{k}: {s}").unwrap(),
                _ => writeln!(out, "{k}: {v}").unwrap(),
            }
        }
        let mut rows: Vec<(String, String)> = self
            .character
            .terms()
            .map(|(e, c)| {
                (
                    c.to_string(),
                    Weight::from_doubled(e.to_vec())
                        .map(|w| w.to_string())
                        .unwrap_or_default(),
                )
            })
            .collect();
        rows.reverse();
        let width = rows.iter().map(|(c, _)| c.len()).max().unwrap_or(0).max(5);
        writeln!(out, "{:>width$}  exponent", "coeff").unwrap();
        for (c, e) in rows {
            writeln!(out, "{c:>width$}  ({e})").unwrap();
        }
        out
    }
}
