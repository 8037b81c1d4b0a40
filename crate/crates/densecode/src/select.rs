//! Selection of the operator sets that realize maximal dense coding on a
//! given state: the literal and semantic forms of the even-Z filter, the
//! authoritative orthogonality verification, the full selection report, and
//! the method comparison against the baseline family and the exhaustive
//! census.
//!
//! The literal filter ("no non-identity all-{I,Z} element with an even
//! number of Z") is advisory: it can reject subgroups that verify on a
//! particular state. The semantic form rejects exactly the subgroups with an
//! element acting as ±identity on the state, and verification itself checks
//! that every non-identity element has expectation zero — which is
//! equivalent to pairwise orthogonality of all 2^t codewords.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::labels::LabelBook;
use crate::pauli::PauliString;
use crate::state::{PositionSet, SymmetricState};
use crate::subgroup::{
    construct_mgp_subgroups, distinct_subgroups, enumerate_all_subgroups, shukla_candidates,
    Subgroup,
};

/// The offending element and its expectation value; every rejection carries
/// one so reports are checkable with a single evaluation.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Witness {
    pub element: PauliString,
    pub expectation: String,
}

impl Witness {
    fn new(element: PauliString, value: Ratio<i64>) -> Witness {
        Witness { element, expectation: format_ratio(value) }
    }
}

pub fn format_ratio(r: Ratio<i64>) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Pre-filters applied before the authoritative verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FilterMode {
    #[default]
    None,
    Literal,
    Semantic,
}

/// Literal even-Z filter: false iff the subgroup contains a non-identity
/// element with all factors in {I, Z} and an even number of Z.
pub fn condition1_literal(h: &Subgroup) -> bool {
    !h.elements
        .iter()
        .any(|g| !g.is_identity() && g.is_diagonal() && g.z_count() % 2 == 0)
}

/// State-dependent form: false iff some non-identity element has
/// |expectation| = 1, i.e. acts as ±identity on the state.
pub fn condition1_semantic(
    h: &Subgroup,
    positions: &PositionSet,
    state: &SymmetricState,
) -> Result<bool> {
    Ok(trivial_element(h, positions, state)?.is_none())
}

fn trivial_element(
    h: &Subgroup,
    positions: &PositionSet,
    state: &SymmetricState,
) -> Result<Option<Witness>> {
    for g in &h.elements {
        if g.is_identity() {
            continue;
        }
        let e = state.expectation(g, positions.indices())?;
        if e == Ratio::new(1, 1) || e == Ratio::new(-1, 1) {
            return Ok(Some(Witness::new(*g, e)));
        }
    }
    Ok(None)
}

/// The authoritative test: every non-identity element must have expectation
/// zero on the state. Returns the witness on failure.
pub fn verify_orthogonal(
    h: &Subgroup,
    positions: &PositionSet,
    state: &SymmetricState,
) -> Result<std::result::Result<(), Witness>> {
    if positions.len() != h.n {
        return Err(Error::Arity(format!(
            "subgroup arity {} does not match {} operated qubits",
            h.n,
            positions.len()
        )));
    }
    if h.order != 1usize << state.qubits() {
        return Err(Error::Arity(format!(
            "subgroup order {} cannot encode 2^{} messages",
            h.order,
            state.qubits()
        )));
    }
    for g in &h.elements {
        if g.is_identity() {
            continue;
        }
        let e = state.expectation(g, positions.indices())?;
        if e != Ratio::new(0, 1) {
            return Ok(Err(Witness::new(*g, e)));
        }
    }
    Ok(Ok(()))
}

/// Independent route: applies every element and checks all codeword pairs
/// for orthogonality directly. Agreement with [`verify_orthogonal`] is a
/// tested property, not an assumption.
pub fn codewords_pairwise_orthogonal(
    h: &Subgroup,
    positions: &PositionSet,
    state: &SymmetricState,
) -> Result<bool> {
    let codewords: Vec<SymmetricState> = h
        .elements
        .iter()
        .map(|g| state.apply(g, positions))
        .collect::<Result<_>>()?;
    for i in 0..codewords.len() {
        for j in (i + 1)..codewords.len() {
            if !codewords[i].inner_product(&codewords[j])?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Accepted,
    RejectedCondition1 { witness: Witness },
    RejectedOrthogonality { witness: Witness },
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted)
    }
}

/// One (subgroup, position-set) pair in the report.
#[derive(Debug, Clone, Serialize)]
pub struct SelectionEntry {
    pub subgroup: String,
    pub labels: Vec<String>,
    pub positions: PositionSet,
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// Why a state is rejected outright, before any subgroup is tried.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(tag = "constraint", rename_all = "snake_case")]
pub enum ConstraintFailure {
    /// Odd number of superposition items.
    EvenItems { items: usize },
    /// No position set projects the items onto distinct bitstrings.
    OrthogonalProjections,
}

impl ConstraintFailure {
    /// The failure description without the constraint-name prefix.
    pub fn detail(&self) -> String {
        match self {
            ConstraintFailure::EvenItems { items } => {
                format!("the state has {items} superposition items (must be even)")
            }
            ConstraintFailure::OrthogonalProjections => "no set of operated qubits projects \
                the superposition items onto distinct bitstrings"
                .to_string(),
        }
    }

    pub fn message(&self) -> String {
        let name = match self {
            ConstraintFailure::EvenItems { .. } => "Constraint 1",
            ConstraintFailure::OrthogonalProjections => "Constraint 2",
        };
        format!("{name} violated: {}", self.detail())
    }
}

/// Full selection outcome for one state.
#[derive(Debug, Clone, Serialize)]
pub struct SelectionReport {
    pub state: String,
    pub qubits: usize,
    pub items: usize,
    pub filter: FilterMode,
    pub constraint_failure: Option<ConstraintFailure>,
    pub position_sets: Vec<PositionSet>,
    pub entries: Vec<SelectionEntry>,
    /// Accepted canonical keys per position set, canonical order.
    pub accepted: BTreeMap<String, Vec<String>>,
}

impl SelectionReport {
    pub fn accepted_at(&self, positions: &PositionSet) -> &[String] {
        self.accepted.get(&positions.to_string()).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Keys accepted at at least one position set.
    pub fn accepted_anywhere(&self) -> Vec<String> {
        let mut keys: Vec<String> = self.accepted.values().flatten().cloned().collect();
        keys.sort();
        keys.dedup();
        keys
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// List-style summary mirroring the published result listings.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# Selection report");
        let _ = writeln!(out, "\nstate: `{}` ({} qubits, {} items)", self.state, self.qubits, self.items);
        if let Some(f) = &self.constraint_failure {
            let _ = writeln!(out, "\n**{}** — no operator set can be selected.", f.message());
            return out;
        }
        let _ = writeln!(out, "filter: {:?}", self.filter);
        for (pos, keys) in &self.accepted {
            let _ = writeln!(out, "\n## Operated qubits {pos}");
            if keys.is_empty() {
                let _ = writeln!(out, "no accepted operator set");
                continue;
            }
            let _ = writeln!(out, "accepted operator sets ({}):", keys.len());
            for k in keys {
                let labels = self
                    .entries
                    .iter()
                    .find(|e| &e.subgroup == k)
                    .map(|e| e.labels.join(" / "))
                    .unwrap_or_default();
                if labels.is_empty() {
                    let _ = writeln!(out, "- `{k}`");
                } else {
                    let _ = writeln!(out, "- {labels} — `{k}`");
                }
            }
        }
        let rejected: Vec<&SelectionEntry> =
            self.entries.iter().filter(|e| !e.verdict.is_accepted()).collect();
        if !rejected.is_empty() {
            let _ = writeln!(out, "\n## Rejections ({})", rejected.len());
            for e in rejected.iter().take(200) {
                match &e.verdict {
                    Verdict::RejectedCondition1 { witness } => {
                        let _ = writeln!(
                            out,
                            "- {} at {}: condition-1 filter, witness {} (expectation {})",
                            e.subgroup, e.positions, witness.element, witness.expectation
                        );
                    }
                    Verdict::RejectedOrthogonality { witness } => {
                        let _ = writeln!(
                            out,
                            "- {} at {}: not orthogonal, witness {} (expectation {})",
                            e.subgroup, e.positions, witness.element, witness.expectation
                        );
                    }
                    Verdict::Accepted => {}
                }
            }
        }
        out
    }
}

/// Runs the full pipeline for one state: constraint checks, the constructed
/// subgroup listing (distinct element sets), optional pre-filter, and the
/// authoritative verification at every valid position set.
pub fn select(
    state: &SymmetricState,
    state_label: &str,
    filter: FilterMode,
    labels: &LabelBook,
) -> Result<SelectionReport> {
    let mut report = SelectionReport {
        state: state_label.to_string(),
        qubits: state.qubits(),
        items: state.item_count(),
        filter,
        constraint_failure: None,
        position_sets: Vec::new(),
        entries: Vec::new(),
        accepted: BTreeMap::new(),
    };
    if !state.check_constraint1() {
        report.constraint_failure =
            Some(ConstraintFailure::EvenItems { items: state.item_count() });
        return Ok(report);
    }
    let positions = state.valid_position_sets();
    if positions.is_empty() {
        report.constraint_failure = Some(ConstraintFailure::OrthogonalProjections);
        return Ok(report);
    }
    report.position_sets = positions.clone();

    let subgroups = distinct_subgroups(&construct_mgp_subgroups(state.qubits()));
    for pos in &positions {
        let mut accepted_here = Vec::new();
        for h in &subgroups {
            let verdict = classify(h, pos, state, filter)?;
            if verdict.is_accepted() {
                accepted_here.push(h.canonical_key());
            }
            report.entries.push(SelectionEntry {
                subgroup: h.canonical_key(),
                labels: labels.labels_for(h),
                positions: pos.clone(),
                verdict,
            });
        }
        report.accepted.insert(pos.to_string(), accepted_here);
    }
    Ok(report)
}

fn classify(
    h: &Subgroup,
    pos: &PositionSet,
    state: &SymmetricState,
    filter: FilterMode,
) -> Result<Verdict> {
    match filter {
        FilterMode::None => {}
        FilterMode::Literal => {
            if !condition1_literal(h) {
                let g = h
                    .elements
                    .iter()
                    .find(|g| !g.is_identity() && g.is_diagonal() && g.z_count() % 2 == 0)
                    .copied()
                    .expect("literal rejection implies an even-Z diagonal element");
                let e = state.expectation(&g, pos.indices())?;
                return Ok(Verdict::RejectedCondition1 { witness: Witness::new(g, e) });
            }
        }
        FilterMode::Semantic => {
            if let Some(witness) = trivial_element(h, pos, state)? {
                return Ok(Verdict::RejectedCondition1 { witness });
            }
        }
    }
    match verify_orthogonal(h, pos, state)? {
        Ok(()) => Ok(Verdict::Accepted),
        Err(witness) => Ok(Verdict::RejectedOrthogonality { witness }),
    }
}

/// Side-by-side comparison of the baseline-constructible sets, the two-line
/// construction, and (optionally) the exhaustive census, each verified on
/// the state. A set counts as usable when it verifies at some valid
/// position set.
#[derive(Debug, Clone, Serialize)]
pub struct MethodComparison {
    pub state: String,
    pub qubits: usize,
    pub position_sets: Vec<PositionSet>,
    pub shukla: Vec<ComparisonRow>,
    pub constructed: Vec<ComparisonRow>,
    pub oracle: Option<Vec<ComparisonRow>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonRow {
    pub subgroup: String,
    pub labels: Vec<String>,
    pub order: usize,
    pub verifies_at: Vec<PositionSet>,
}

impl MethodComparison {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# Method comparison — `{}`", self.state);
        let mut section = |name: &str, rows: &[ComparisonRow]| {
            let usable: Vec<&ComparisonRow> =
                rows.iter().filter(|r| !r.verifies_at.is_empty()).collect();
            let _ = writeln!(out, "\n## {name}: {} usable of {}", usable.len(), rows.len());
            for r in usable {
                let label = if r.labels.is_empty() {
                    format!("`{}`", r.subgroup)
                } else {
                    format!("{} — `{}`", r.labels.join(" / "), r.subgroup)
                };
                let _ = writeln!(
                    out,
                    "- {label} (order {}), verifies at {}",
                    r.order,
                    r.verifies_at.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
                );
            }
        };
        section("Baseline family", &self.shukla);
        section("Two-line construction", &self.constructed);
        if let Some(oracle) = &self.oracle {
            section("Exhaustive census", oracle);
        }
        out
    }

    fn usable(rows: &[ComparisonRow]) -> Vec<String> {
        rows.iter()
            .filter(|r| !r.verifies_at.is_empty())
            .map(|r| r.subgroup.clone())
            .collect()
    }

    pub fn shukla_usable(&self) -> Vec<String> {
        Self::usable(&self.shukla)
    }

    pub fn constructed_usable(&self) -> Vec<String> {
        Self::usable(&self.constructed)
    }

    pub fn oracle_usable(&self) -> Option<Vec<String>> {
        self.oracle.as_deref().map(Self::usable)
    }
}

/// Builds the comparison table. `include_oracle` adds the exhaustive column
/// (every order-2^t subgroup from the census, not just constructible ones).
pub fn compare_methods(
    state: &SymmetricState,
    state_label: &str,
    include_oracle: bool,
    labels: &LabelBook,
) -> Result<MethodComparison> {
    let t = state.qubits();
    let positions = state.valid_position_sets();
    let row = |h: &Subgroup| -> Result<ComparisonRow> {
        let mut verifies_at = Vec::new();
        if state.check_constraint1() {
            for pos in &positions {
                if verify_orthogonal(h, pos, state)?.is_ok() {
                    verifies_at.push(pos.clone());
                }
            }
        }
        Ok(ComparisonRow {
            subgroup: h.canonical_key(),
            labels: labels.labels_for(h),
            order: h.order,
            verifies_at,
        })
    };

    let shukla = shukla_candidates(t)
        .iter()
        .filter(|h| h.order == 1 << t) // only maximal-coding candidates compare
        .map(&row)
        .collect::<Result<Vec<_>>>()?;
    let constructed = distinct_subgroups(&construct_mgp_subgroups(t))
        .iter()
        .map(&row)
        .collect::<Result<Vec<_>>>()?;
    let oracle = if include_oracle {
        let n = t.div_ceil(2);
        Some(enumerate_all_subgroups(n, t).iter().map(&row).collect::<Result<Vec<_>>>()?)
    } else {
        None
    };
    Ok(MethodComparison {
        state: state_label.to_string(),
        qubits: t,
        position_sets: positions,
        shukla,
        constructed,
        oracle,
    })
}
