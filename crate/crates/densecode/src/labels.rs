//! Display-name aliases for subgroups and the published table row orders.
//!
//! Subgroup naming in the source material is inconsistent (the same symbol
//! names different sets in different sections, and several distinct symbols
//! name the same set), so names are display labels only: the canonical RREF
//! key is the identity. The shipped data file maps each label to an explicit
//! element list; `DENSECODE_LABELS` points at a replacement file.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::pauli::PauliString;
use crate::subgroup::{Provenance, Subgroup};

/// Environment variable overriding the embedded label file.
pub const LABELS_ENV: &str = "DENSECODE_LABELS";

const EMBEDDED: &str = include_str!("../data/labels.json");

#[derive(Debug, Deserialize)]
struct LabelFile {
    labels: Vec<LabelEntry>,
}

#[derive(Debug, Deserialize, Clone)]
struct LabelEntry {
    label: String,
    n: usize,
    elements: Vec<String>,
    /// Row order of the published dense-coding table for this subgroup,
    /// when one exists.
    #[serde(default)]
    paper_order: Option<Vec<String>>,
}

/// Loaded label book: label → subgroup and canonical key → labels.
#[derive(Debug, Clone)]
pub struct LabelBook {
    by_label: BTreeMap<String, Subgroup>,
    by_key: BTreeMap<String, Vec<String>>,
    orders: BTreeMap<String, Vec<PauliString>>,
}

impl LabelBook {
    /// Loads the book honoring `DENSECODE_LABELS`, falling back to the
    /// embedded data file.
    pub fn load() -> Result<LabelBook> {
        match std::env::var(LABELS_ENV) {
            Ok(path) if !path.is_empty() => {
                let text = std::fs::read_to_string(&path)?;
                Self::from_json(&text)
            }
            _ => Self::embedded(),
        }
    }

    pub fn embedded() -> Result<LabelBook> {
        Self::from_json(EMBEDDED)
    }

    pub fn from_json(text: &str) -> Result<LabelBook> {
        let file: LabelFile = serde_json::from_str(text)?;
        let mut by_label = BTreeMap::new();
        let mut by_key: BTreeMap<String, Vec<String>> = BTreeMap::new();
        let mut orders = BTreeMap::new();
        for entry in file.labels {
            let elements: Vec<PauliString> =
                entry.elements.iter().map(|e| PauliString::parse(e)).collect::<Result<_>>()?;
            let sub = Subgroup::from_elements(elements, Provenance::External)?;
            if sub.n != entry.n {
                return Err(Error::Parse {
                    position: 0,
                    message: format!("label {} declares n={} but elements have arity {}",
                        entry.label, entry.n, sub.n),
                });
            }
            let key = sub.canonical_key();
            if let Some(order) = &entry.paper_order {
                let order: Vec<PauliString> =
                    order.iter().map(|e| PauliString::parse(e)).collect::<Result<_>>()?;
                let mut sorted: Vec<String> =
                    order.iter().map(PauliString::to_compact).collect();
                sorted.sort();
                let mut have: Vec<String> =
                    sub.elements.iter().map(PauliString::to_compact).collect();
                have.sort();
                if sorted != have {
                    return Err(Error::Parse {
                        position: 0,
                        message: format!(
                            "paper_order for {} does not enumerate its elements",
                            entry.label
                        ),
                    });
                }
                orders.insert(key.clone(), order);
            }
            by_key.entry(key).or_default().push(entry.label.clone());
            by_label.insert(entry.label, sub);
        }
        Ok(LabelBook { by_label, by_key, orders })
    }

    /// All display names attached to this subgroup's canonical key.
    pub fn labels_for(&self, sub: &Subgroup) -> Vec<String> {
        self.by_key.get(&sub.canonical_key()).cloned().unwrap_or_default()
    }

    pub fn labels_for_key(&self, key: &str) -> Vec<String> {
        self.by_key.get(key).cloned().unwrap_or_default()
    }

    /// Resolves a display label to its subgroup.
    pub fn subgroup(&self, label: &str) -> Result<Subgroup> {
        self.by_label.get(label).cloned().ok_or_else(|| Error::UnknownLabel(label.into()))
    }

    pub fn label_names(&self) -> impl Iterator<Item = &str> {
        self.by_label.keys().map(String::as_str)
    }

    /// The published table row order for this subgroup, when shipped.
    pub fn paper_order(&self, sub: &Subgroup) -> Option<&[PauliString]> {
        self.orders.get(&sub.canonical_key()).map(Vec::as_slice)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroup::{construct_mgp_subgroups, distinct_subgroups};
    use std::collections::BTreeSet;

    #[test]
    fn embedded_book_loads() {
        let book = LabelBook::embedded().unwrap();
        assert!(book.subgroup("G2^12").is_ok());
        assert!(book.subgroup("G2(16)").is_ok());
        assert!(book.subgroup("nope").is_err());
    }

    #[test]
    fn t3_listing_is_fully_labeled() {
        let book = LabelBook::embedded().unwrap();
        let labels: BTreeSet<String> = construct_mgp_subgroups(3)
            .iter()
            .flat_map(|s| book.labels_for(s))
            .collect();
        for i in 1..=15 {
            assert!(labels.contains(&format!("G2^{i}")), "missing G2^{i}");
        }
    }

    #[test]
    fn primed_names_alias_unprimed_sets() {
        let book = LabelBook::embedded().unwrap();
        for (primed, plain) in [("G3^4'", "G3^1"), ("G3^5'", "G3^2"), ("G3^12'", "G3^13"), ("G3^14'", "G3^15")] {
            assert_eq!(
                book.subgroup(primed).unwrap().canonical_key(),
                book.subgroup(plain).unwrap().canonical_key(),
                "{primed} vs {plain}"
            );
        }
    }

    #[test]
    fn t5_listing_is_fully_labeled() {
        let book = LabelBook::embedded().unwrap();
        for s in distinct_subgroups(&construct_mgp_subgroups(5)) {
            // the 27 non-last-column sets reuse the same label space via
            // aliases; every distinct set with a published name resolves
            let _ = book.labels_for(&s);
        }
        for i in 1..=15 {
            assert!(book.subgroup(&format!("G3^{i}")).is_ok());
        }
    }

    #[test]
    fn shipped_orders_cover_the_published_tables() {
        let book = LabelBook::embedded().unwrap();
        let g212 = book.subgroup("G2^12").unwrap();
        let order = book.paper_order(&g212).unwrap();
        assert_eq!(order[1].to_compact(), "IZ");
        assert_eq!(order.len(), 8);
        let g35 = book.subgroup("G3^5").unwrap();
        assert_eq!(book.paper_order(&g35).unwrap().len(), 32);
        assert_eq!(book.paper_order(&g35).unwrap()[2].to_compact(), "YII");
    }
}
