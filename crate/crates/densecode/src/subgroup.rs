//! Construction and enumeration of multiplicative phaseless-Pauli subgroups.
//!
//! Three sources produce [`Subgroup`] values:
//!
//! * [`construct_mgp_subgroups`] — the two-step column construction: fill
//!   n−2 columns with the whole single-qubit group, then split the remaining
//!   two columns into an A line and a B line according to the parity of `t`.
//! * [`shukla_subgroups`] — the baseline family `G₁^⊗i ⊗ {I,P} ⊗ G₁^⊗(n−i−1)`.
//! * [`enumerate_all_subgroups`] — the exhaustive audit. A phaseless subgroup
//!   of order 2^t is exactly a t-dimensional GF(2) subspace of the symplectic
//!   encoding, so enumerating reduced-row-echelon bases visits each subgroup
//!   once; the census count is the Gaussian binomial.
//!
//! Every subgroup carries a canonical key (its RREF basis) used for equality,
//! deduplication and stable output order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pauli::{full_group, Pauli, PauliString};

/// The three 2-element subgroups of the single-qubit group, {I,X} {I,Y} {I,Z}.
const PAIR_CHOICES: [[Pauli; 2]; 3] =
    [[Pauli::I, Pauli::X], [Pauli::I, Pauli::Y], [Pauli::I, Pauli::Z]];

fn complement(pair: [Pauli; 2]) -> [Pauli; 2] {
    let mut out = [Pauli::I; 2];
    let mut k = 0;
    for p in Pauli::ALL {
        if !pair.contains(&p) {
            out[k] = p;
            k += 1;
        }
    }
    out
}

/// One column of a two-line construction: the sets placed on the A and B line.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ColumnPick {
    /// 1-based qubit column.
    pub column: usize,
    pub a_line: Vec<Pauli2>,
    pub b_line: Vec<Pauli2>,
}

/// Serializable single-letter operator (keeps provenance JSON compact).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pauli2(pub char);

impl From<Pauli> for Pauli2 {
    fn from(p: Pauli) -> Self {
        Pauli2(p.letter())
    }
}

/// How a subgroup was obtained, plus the construction metadata needed to
/// label listings ("s = n−1 family", which columns were fully filled, …).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum Provenance {
    Algorithm1 {
        /// Columns filled with the whole single-qubit group in step 1 (1-based).
        fill_columns: Vec<usize>,
        /// The two remaining columns and the sets placed on each line.
        picks: Vec<ColumnPick>,
        /// Number of equal columns between the two lines.
        s: usize,
    },
    Shukla {
        /// 1-based column carrying the 2-element factor.
        column: usize,
        pauli: Pauli2,
    },
    Oracle,
    External,
}

impl Provenance {
    pub fn tag(&self) -> &'static str {
        match self {
            Provenance::Algorithm1 { .. } => "algorithm1",
            Provenance::Shukla { .. } => "shukla",
            Provenance::Oracle => "oracle",
            Provenance::External => "external",
        }
    }

    /// Equal-column count, when the construction defines one.
    pub fn s_value(&self) -> Option<usize> {
        match self {
            Provenance::Algorithm1 { s, .. } => Some(*s),
            _ => None,
        }
    }
}

/// A set of `2^t` phaseless Pauli strings closed under multiplication,
/// canonicalized by its reduced-row-echelon GF(2) basis.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Subgroup {
    /// Arity (qubits each element acts on).
    pub n: usize,
    /// Group order, always a power of two.
    pub order: usize,
    /// Elements sorted by lex key (I < X < Y < Z, leftmost qubit major).
    pub elements: Vec<PauliString>,
    /// RREF basis rows; unique per subgroup, used as the canonical key.
    pub basis: Vec<PauliString>,
    pub provenance: Provenance,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.basis == other.basis
    }
}
impl Eq for Subgroup {}

impl Subgroup {
    /// Builds a subgroup from an element set; validates closure.
    pub fn from_elements(elements: Vec<PauliString>, provenance: Provenance) -> Result<Subgroup> {
        if elements.is_empty() {
            return Err(Error::Usage("subgroup needs at least the identity".into()));
        }
        let n = elements[0].len();
        if elements.iter().any(|e| e.len() != n) {
            return Err(Error::Arity("subgroup elements have mixed arity".into()));
        }
        if !is_closed(&elements) {
            return Err(Error::Usage(
                "element set is not closed under multiplication".into(),
            ));
        }
        let mut elements = elements;
        elements.sort_by_key(PauliString::lex_key);
        elements.dedup();
        if !elements.len().is_power_of_two() {
            return Err(Error::Internal(format!(
                "closed set of size {} is not a power of two",
                elements.len()
            )));
        }
        let basis = rref_basis(&elements, n);
        Ok(Subgroup { n, order: elements.len(), elements, basis, provenance })
    }

    fn from_span(basis_vecs: &[u128], n: usize, provenance: Provenance) -> Subgroup {
        let mut span = vec![0u128];
        for &b in basis_vecs {
            let prev: Vec<u128> = span.clone();
            span.extend(prev.into_iter().map(|v| v ^ b));
        }
        let mut elements: Vec<PauliString> =
            span.into_iter().map(|v| PauliString::from_symplectic(v, n)).collect();
        elements.sort_by_key(PauliString::lex_key);
        let basis = basis_vecs.iter().map(|&v| PauliString::from_symplectic(v, n)).collect();
        Subgroup { n, order: 1usize << basis_vecs.len(), elements, basis, provenance }
    }

    /// log2 of the order.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical key string: RREF basis rows joined with `+`.
    /// Equal subgroups have equal keys regardless of how they were built.
    pub fn canonical_key(&self) -> String {
        self.basis.iter().map(PauliString::to_compact).join("+")
    }

    pub fn contains(&self, g: &PauliString) -> bool {
        g.len() == self.n && self.elements.binary_search_by_key(&g.lex_key(), |e| e.lex_key()).is_ok()
    }

    /// Plain-text file form: header line, then one operator per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("n={} order={}\n", self.n, self.order);
        for e in &self.elements {
            let _ = writeln!(out, "{}", e.to_compact());
        }
        out
    }

    /// Parses the plain-text file form.
    pub fn parse_text(text: &str) -> Result<Subgroup> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse { position: 0, message: "empty subgroup file".into() })?;
        let mut n = None;
        let mut order = None;
        for field in header.split_whitespace() {
            if let Some(v) = field.strip_prefix("n=") {
                n = v.parse::<usize>().ok();
            } else if let Some(v) = field.strip_prefix("order=") {
                order = v.parse::<usize>().ok();
            }
        }
        let (n, order) = match (n, order) {
            (Some(n), Some(o)) => (n, o),
            _ => {
                return Err(Error::Parse {
                    position: 0,
                    message: format!("bad subgroup header `{header}` (want `n=<arity> order=<2^t>`)"),
                })
            }
        };
        let elements: Vec<PauliString> =
            lines.map(|l| PauliString::parse(l.trim())).collect::<Result<_>>()?;
        let sub = Subgroup::from_elements(elements, Provenance::External)?;
        if sub.n != n || sub.order != order {
            return Err(Error::Parse {
                position: 0,
                message: format!(
                    "header says n={n} order={order} but elements give n={} order={}",
                    sub.n, sub.order
                ),
            });
        }
        Ok(sub)
    }
}

/// True iff the set contains the identity and is closed under the product.
pub fn is_closed(elements: &[PauliString]) -> bool {
    if elements.is_empty() {
        return false;
    }
    let n = elements[0].len();
    if elements.iter().any(|e| e.len() != n) {
        return false;
    }
    let set: std::collections::HashSet<PauliString> = elements.iter().copied().collect();
    if !set.contains(&PauliString::identity(n)) {
        return false;
    }
    for a in &set {
        for b in &set {
            match a.mul(b) {
                Ok(p) if set.contains(&p) => {}
                _ => return false,
            }
        }
    }
    true
}

/// Reduced-row-echelon GF(2) basis of the span of `elements`.
fn rref_basis(elements: &[PauliString], n: usize) -> Vec<PauliString> {
    let mut rows: Vec<u128> = elements.iter().map(|e| e.symplectic()).filter(|&v| v != 0).collect();
    let width = 2 * n;
    let mut basis: Vec<u128> = Vec::new();
    for col in 0..width {
        let Some(pos) = rows.iter().position(|r| (r >> col) & 1 == 1) else { continue };
        let pivot = rows.swap_remove(pos);
        for r in rows.iter_mut() {
            if (*r >> col) & 1 == 1 {
                *r ^= pivot;
            }
        }
        rows.retain(|&r| r != 0);
        for b in basis.iter_mut() {
            if (*b >> col) & 1 == 1 {
                *b ^= pivot;
            }
        }
        basis.push(pivot);
    }
    basis.into_iter().map(|v| PauliString::from_symplectic(v, n)).collect()
}

/// λ of the construction: the number of subgroups it lists for `t` qubits.
///
/// Odd t: 3 for n=1, 15 for n=2, C(n,2)·15 beyond. Even t: 1. For odd t with
/// n ≥ 3 the listing counts each fully-filled-column family once per column
/// choice, so it exceeds the number of distinct subgroups (see
/// [`distinct_subgroups`]).
pub fn lambda_count(t: usize) -> usize {
    assert!(t >= 1, "qubit count must be at least 1");
    let n = t.div_ceil(2);
    if t.is_multiple_of(2) {
        1
    } else if n == 1 {
        3
    } else {
        n * (n - 1) / 2 * 15
    }
}

/// Builds the 2^t-order subgroup listing for a t-qubit state.
///
/// Arity is n = ⌈t/2⌉. Degenerate cases: t=1 yields the three 2-element
/// subgroups of the single-qubit group, t=2 yields the whole single-qubit
/// group. For n ≥ 2 the raw two-line candidates are generated for every
/// ordered pair of remaining columns and every pair-choice, then deduplicated
/// by canonical basis within each column choice (odd t) or globally (even t,
/// where every candidate is the whole group). The resulting list length
/// always equals [`lambda_count`]; for odd t and n ≥ 3 it still contains
/// duplicate element sets across column choices, which `distinct_subgroups`
/// collapses.
pub fn construct_mgp_subgroups(t: usize) -> Vec<Subgroup> {
    assert!(t >= 1, "qubit count must be at least 1");
    let n = t.div_ceil(2);

    if n == 1 {
        let subs: Vec<Subgroup> = if t == 1 {
            PAIR_CHOICES
                .iter()
                .map(|pair| {
                    Subgroup::from_elements(
                        pair.iter().map(|&p| PauliString::from_factors(&[p])).collect(),
                        Provenance::Algorithm1 {
                            fill_columns: vec![],
                            picks: vec![ColumnPick {
                                column: 1,
                                a_line: vec![pair[0].into()],
                                b_line: vec![pair[1].into()],
                            }],
                            s: 0,
                        },
                    )
                    .expect("2-element subgroup is closed")
                })
                .collect()
        } else {
            vec![Subgroup::from_elements(
                full_group(1),
                Provenance::Algorithm1 {
                    fill_columns: vec![1],
                    picks: vec![],
                    s: 0,
                },
            )
            .expect("single-qubit group is closed")]
        };
        assert_eq!(subs.len(), lambda_count(t));
        return subs;
    }

    let mut out: Vec<Subgroup> = Vec::new();
    let odd = t % 2 == 1;
    for rem in (1..=n).combinations(2) {
        let fill: Vec<usize> = (1..=n).filter(|c| !rem.contains(c)).collect();
        let mut per_choice: BTreeMap<String, Subgroup> = BTreeMap::new();
        for (cx, cy) in [(rem[0], rem[1]), (rem[1], rem[0])] {
            if odd {
                // equal column cx, split column cy
                for equal in PAIR_CHOICES {
                    for split in PAIR_CHOICES {
                        let sub = two_line_subgroup(
                            n,
                            &fill,
                            &[(cx, equal, equal), (cy, split, complement(split))],
                            n - 1,
                        );
                        per_choice.entry(sub.canonical_key()).or_insert(sub);
                    }
                }
                // both columns split
                for first in PAIR_CHOICES {
                    for second in PAIR_CHOICES {
                        let sub = two_line_subgroup(
                            n,
                            &fill,
                            &[
                                (cx, first, complement(first)),
                                (cy, second, complement(second)),
                            ],
                            n - 2,
                        );
                        per_choice.entry(sub.canonical_key()).or_insert(sub);
                    }
                }
            } else {
                // full column cx, split column cy
                for split in PAIR_CHOICES {
                    let sub = two_line_full_split(n, &fill, cx, cy, split);
                    per_choice.entry(sub.canonical_key()).or_insert(sub);
                }
            }
        }
        out.extend(per_choice.into_values());
    }

    if !odd {
        // every even-t candidate is the whole group; keep one
        let mut seen = std::collections::BTreeSet::new();
        out.retain(|s| seen.insert(s.canonical_key()));
    }
    out.sort_by(|a, b| {
        a.canonical_key()
            .cmp(&b.canonical_key())
            .then_with(|| format!("{:?}", a.provenance).cmp(&format!("{:?}", b.provenance)))
    });
    assert_eq!(
        out.len(),
        lambda_count(t),
        "construction listing must match the λ count for t={t}"
    );
    out
}

fn line_elements(n: usize, fill: &[usize], picks: &[(usize, [Pauli; 2])]) -> Vec<PauliString> {
    let mut columns: Vec<Vec<Pauli>> = vec![Vec::new(); n];
    for &c in fill {
        columns[c - 1] = Pauli::ALL.to_vec();
    }
    for &(c, pair) in picks {
        columns[c - 1] = pair.to_vec();
    }
    columns
        .into_iter()
        .multi_cartesian_product()
        .map(|fs| PauliString::from_factors(&fs))
        .collect()
}

fn two_line_subgroup(
    n: usize,
    fill: &[usize],
    cols: &[(usize, [Pauli; 2], [Pauli; 2])],
    s: usize,
) -> Subgroup {
    let a_picks: Vec<(usize, [Pauli; 2])> = cols.iter().map(|&(c, a, _)| (c, a)).collect();
    let b_picks: Vec<(usize, [Pauli; 2])> = cols.iter().map(|&(c, _, b)| (c, b)).collect();
    let mut elems = line_elements(n, fill, &a_picks);
    elems.extend(line_elements(n, fill, &b_picks));
    let picks = cols
        .iter()
        .map(|&(c, a, b)| ColumnPick {
            column: c,
            a_line: a.iter().map(|&p| p.into()).collect(),
            b_line: b.iter().map(|&p| p.into()).collect(),
        })
        .collect();
    Subgroup::from_elements(
        elems,
        Provenance::Algorithm1 { fill_columns: fill.to_vec(), picks, s },
    )
    .expect("two-line candidates are closed")
}

fn two_line_full_split(
    n: usize,
    fill: &[usize],
    full_col: usize,
    split_col: usize,
    split: [Pauli; 2],
) -> Subgroup {
    let mut fill_plus = fill.to_vec();
    fill_plus.push(full_col);
    fill_plus.sort_unstable();
    let mut elems = line_elements(n, &fill_plus, &[(split_col, split)]);
    elems.extend(line_elements(n, &fill_plus, &[(split_col, complement(split))]));
    let picks = vec![ColumnPick {
        column: split_col,
        a_line: split.iter().map(|&p| p.into()).collect(),
        b_line: complement(split).iter().map(|&p| p.into()).collect(),
    }];
    Subgroup::from_elements(
        elems,
        Provenance::Algorithm1 { fill_columns: fill_plus, picks, s: n - 1 },
    )
    .expect("two-line candidates are closed")
}

/// Collapses a listing to unique element sets (canonical-basis dedup),
/// keeping the first occurrence of each key.
pub fn distinct_subgroups(subs: &[Subgroup]) -> Vec<Subgroup> {
    let mut seen = std::collections::BTreeSet::new();
    subs.iter().filter(|s| seen.insert(s.canonical_key())).cloned().collect()
}

/// The 3n baseline subgroups of order 2^(2n−1): a single 2-element factor
/// `{I,P}` in one column, the whole single-qubit group everywhere else.
pub fn shukla_subgroups(n: usize) -> Vec<Subgroup> {
    assert!(n >= 1, "arity must be at least 1");
    let mut out = Vec::with_capacity(3 * n);
    for col in 1..=n {
        for p in [Pauli::X, Pauli::Y, Pauli::Z] {
            let fill: Vec<usize> = (1..=n).filter(|&c| c != col).collect();
            let elems = line_elements(n, &fill, &[(col, [Pauli::I, p])]);
            out.push(
                Subgroup::from_elements(elems, Provenance::Shukla { column: col, pauli: p.into() })
                    .expect("baseline subgroups are closed"),
            );
        }
    }
    out.sort_by_key(|s| s.canonical_key());
    out
}

/// For a t-qubit state, the order-2^t subgroups the baseline method offers:
/// the 3n family when t = 2n−1, the whole group when t = 2n.
pub fn shukla_candidates(t: usize) -> Vec<Subgroup> {
    assert!(t >= 1);
    let n = t.div_ceil(2);
    if t % 2 == 1 {
        shukla_subgroups(n)
    } else {
        vec![Subgroup::from_elements(full_group(n), Provenance::External)
            .expect("full group is closed")]
    }
}

/// Number of k-dimensional subspaces of GF(2)^m.
pub fn gaussian_binomial(m: u32, k: u32) -> u128 {
    if k > m {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (1u128 << (m - i)) - 1;
        den *= (1u128 << (k - i)) - 1;
    }
    num / den
}

/// Exhaustive oracle: every order-2^t subgroup of the n-qubit group, each
/// exactly once, via reduced-row-echelon basis enumeration. The count equals
/// `gaussian_binomial(2n, t)`.
pub fn enumerate_all_subgroups(n: usize, t: usize) -> Vec<Subgroup> {
    assert!(t >= 1 && t <= 2 * n, "need 1 <= t <= 2n");
    let width = 2 * n;
    let mut out = Vec::new();
    for pivots in (0..width).combinations(t) {
        // free cells: for row i, the non-pivot columns right of its pivot
        let mut free_cells: Vec<(usize, usize)> = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for c in (p + 1)..width {
                if !pivots.contains(&c) {
                    free_cells.push((i, c));
                }
            }
        }
        for bits in 0u64..(1u64 << free_cells.len()) {
            let mut rows: Vec<u128> = pivots.iter().map(|&p| 1u128 << p).collect();
            for (j, &(i, c)) in free_cells.iter().enumerate() {
                if (bits >> j) & 1 == 1 {
                    rows[i] |= 1u128 << c;
                }
            }
            out.push(Subgroup::from_span(&rows, n, Provenance::Oracle));
        }
    }
    out.sort_by_key(|s| s.canonical_key());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn ps(s: &str) -> PauliString {
        PauliString::parse(s).unwrap()
    }

    fn keys(subs: &[Subgroup]) -> BTreeSet<String> {
        subs.iter().map(Subgroup::canonical_key).collect()
    }

    #[test]
    fn lambda_values() {
        assert_eq!(lambda_count(1), 3);
        assert_eq!(lambda_count(2), 1);
        assert_eq!(lambda_count(3), 15);
        assert_eq!(lambda_count(4), 1);
        assert_eq!(lambda_count(5), 45);
        assert_eq!(lambda_count(6), 1);
        assert_eq!(lambda_count(7), 90);
    }

    #[test]
    fn construct_counts_match_lambda() {
        for t in 1..=6 {
            assert_eq!(construct_mgp_subgroups(t).len(), lambda_count(t), "t={t}");
        }
    }

    #[test]
    fn construct_distinct_counts() {
        // Fully-filled-column subgroups repeat across column choices when
        // n >= 3, so the distinct census is smaller than λ for odd t >= 5.
        let distinct: Vec<usize> =
            (1..=6).map(|t| distinct_subgroups(&construct_mgp_subgroups(t)).len()).collect();
        assert_eq!(distinct, vec![3, 1, 15, 1, 36, 1]);
    }

    #[test]
    fn degenerate_arities() {
        let t1 = construct_mgp_subgroups(1);
        let sets: BTreeSet<String> = t1
            .iter()
            .map(|s| s.elements.iter().map(PauliString::to_compact).join(","))
            .collect();
        assert_eq!(
            sets,
            BTreeSet::from(["I,X".to_string(), "I,Y".to_string(), "I,Z".to_string()])
        );
        let t2 = construct_mgp_subgroups(2);
        assert_eq!(t2.len(), 1);
        assert_eq!(t2[0].order, 4);
        assert_eq!(t2[0].n, 1);
    }

    #[test]
    fn construct_4_collapses_to_the_full_group() {
        let t4 = construct_mgp_subgroups(4);
        assert_eq!(t4.len(), 1);
        assert_eq!(t4[0].order, 16);
        assert_eq!(t4[0].elements, full_group(2));
    }

    #[test]
    fn every_output_is_closed_with_declared_order() {
        for t in 1..=6 {
            for sub in construct_mgp_subgroups(t) {
                assert!(is_closed(&sub.elements));
                assert_eq!(sub.order, sub.elements.len());
                assert_eq!(sub.order, 1 << t);
                assert!(sub.contains(&PauliString::identity(sub.n)));
                assert_eq!(sub.dim(), t);
            }
        }
    }

    #[test]
    fn closure_examples() {
        let g212: Vec<PauliString> =
            ["II", "IZ", "XI", "XZ", "YX", "YY", "ZX", "ZY"].iter().map(|s| ps(s)).collect();
        assert!(is_closed(&g212));
        assert!(is_closed(&[ps("II")]));
        assert!(!is_closed(&[ps("II"), ps("IX"), ps("IY")]));
    }

    #[test]
    fn shukla_family_counts_and_orders() {
        for n in 1..=3 {
            let subs = shukla_subgroups(n);
            assert_eq!(subs.len(), 3 * n);
            assert_eq!(keys(&subs).len(), 3 * n);
            for s in &subs {
                assert_eq!(s.order, 1 << (2 * n - 1));
                assert!(is_closed(&s.elements));
            }
        }
    }

    #[test]
    fn shukla_n1_is_the_three_two_element_subgroups() {
        assert_eq!(keys(&shukla_subgroups(1)), keys(&construct_mgp_subgroups(1)));
    }

    #[test]
    fn shukla_listings_match_their_published_names() {
        let book = crate::labels::LabelBook::embedded().unwrap();
        let want2: BTreeSet<String> = (1..=6)
            .map(|i| book.subgroup(&format!("G2^{i}")).unwrap().canonical_key())
            .collect();
        assert_eq!(keys(&shukla_subgroups(2)), want2);
        let want3: BTreeSet<String> = (1..=9)
            .map(|i| book.subgroup(&format!("shukla:G3^{i}")).unwrap().canonical_key())
            .collect();
        assert_eq!(keys(&shukla_subgroups(3)), want3);
    }

    #[test]
    fn shukla_n2_equals_the_equal_column_family() {
        let shukla = keys(&shukla_subgroups(2));
        let family: BTreeSet<String> = construct_mgp_subgroups(3)
            .iter()
            .filter(|s| s.provenance.s_value() == Some(1))
            .map(Subgroup::canonical_key)
            .collect();
        assert_eq!(shukla, family);
    }

    #[test]
    fn oracle_counts_match_gaussian_binomial() {
        assert_eq!(gaussian_binomial(4, 3), 15);
        assert_eq!(gaussian_binomial(6, 5), 63);
        assert_eq!(gaussian_binomial(4, 2), 35);
        assert_eq!(enumerate_all_subgroups(2, 3).len(), 15);
        assert_eq!(enumerate_all_subgroups(3, 5).len(), 63);
        assert_eq!(enumerate_all_subgroups(2, 4).len(), 1);
        assert_eq!(enumerate_all_subgroups(2, 2).len(), 35);
    }

    #[test]
    fn oracle_outputs_are_valid_and_unique() {
        let all = enumerate_all_subgroups(2, 3);
        assert_eq!(keys(&all).len(), all.len());
        for s in &all {
            assert!(is_closed(&s.elements));
            assert_eq!(s.order, 8);
        }
    }

    #[test]
    fn construction_is_contained_in_the_oracle() {
        let con = keys(&construct_mgp_subgroups(3));
        let all = keys(&enumerate_all_subgroups(2, 3));
        assert_eq!(con, all); // equality at t=3

        let con5 = keys(&construct_mgp_subgroups(5));
        let all5 = keys(&enumerate_all_subgroups(3, 5));
        assert!(con5.is_subset(&all5));
        assert_eq!(con5.len(), 36);
        assert_eq!(all5.difference(&con5).count(), 27);

        // the baseline family sits inside the census at the matching order
        assert!(keys(&shukla_subgroups(2)).is_subset(&keys(&enumerate_all_subgroups(2, 3))));
        assert!(keys(&shukla_subgroups(3)).is_subset(&all5));
    }

    #[test]
    fn text_round_trip() {
        let sub = &construct_mgp_subgroups(3)[0];
        let text = sub.to_text();
        let back = Subgroup::parse_text(&text).unwrap();
        assert_eq!(back.canonical_key(), sub.canonical_key());
        assert!(Subgroup::parse_text("garbage").is_err());
        assert!(Subgroup::parse_text("n=2 order=8\nII\nIX\n").is_err()); // wrong order
    }

    #[test]
    fn canonical_key_is_structural() {
        // same set assembled in different element order
        let a = Subgroup::from_elements(
            ["II", "IZ", "XI", "XZ", "YX", "YY", "ZX", "ZY"].iter().map(|s| ps(s)).collect(),
            Provenance::External,
        )
        .unwrap();
        let b = Subgroup::from_elements(
            ["ZY", "YX", "XZ", "II", "YY", "ZX", "IZ", "XI"].iter().map(|s| ps(s)).collect(),
            Provenance::External,
        )
        .unwrap();
        assert_eq!(a.canonical_key(), b.canonical_key());
        assert_eq!(a, b);
    }
}
