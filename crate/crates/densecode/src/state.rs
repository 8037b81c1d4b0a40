//! Exact signed computational-basis superpositions and the operations the
//! selection pipeline needs: operator application with the sign rules
//! `X|0⟩→|1⟩, X|1⟩→|0⟩, Y|0⟩→−|1⟩, Y|1⟩→|0⟩, Z|1⟩→−|1⟩`, inner products,
//! expectations, distinguishability, position-set validity, the built-in
//! states, and the cluster eigenvalue verifier.
//!
//! Every amplitude is ±1/√m for m superposition items, so all arithmetic is
//! integer: an inner product is an integer numerator over √(m_a·m_b) and a
//! distinguishability degree is an exact rational.

use std::fmt;

use itertools::Itertools;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString};

/// Strictly increasing 1-based qubit indices, length ⌈t/2⌉: the operated
/// qubits of an encoding.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, Hash)]
pub struct PositionSet(Vec<usize>);

impl PositionSet {
    /// Validates ⌈t/2⌉ strictly increasing indices within 1..=t.
    pub fn new(positions: Vec<usize>, t: usize) -> Result<PositionSet> {
        let k = t.div_ceil(2);
        if positions.len() != k {
            return Err(Error::Usage(format!(
                "need {k} operated qubits for a {t}-qubit state, got {}",
                positions.len()
            )));
        }
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Usage("positions must be strictly increasing".into()));
        }
        if positions.iter().any(|&p| p < 1 || p > t) {
            return Err(Error::Usage(format!("positions must lie in 1..={t}")));
        }
        Ok(PositionSet(positions))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for PositionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// One superposition item: sign and ket. Qubit 1 is the leftmost character
/// of the printed bitstring and bit 0 of the packed ket.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Item {
    pub sign: i8,
    pub ket: u64,
}

/// A t-qubit state (Σ sign·|ket⟩)/√m with pairwise-distinct kets.
#[derive(Debug, Clone)]
pub struct SymmetricState {
    t: usize,
    items: Vec<Item>,
}

impl PartialEq for SymmetricState {
    fn eq(&self, other: &Self) -> bool {
        self.t == other.t && self.sorted_items() == other.sorted_items()
    }
}
impl Eq for SymmetricState {}

impl SymmetricState {
    pub fn new(t: usize, items: Vec<(i8, u64)>) -> Result<SymmetricState> {
        if t == 0 || t > 63 {
            return Err(Error::Usage("qubit count must be in 1..=63".into()));
        }
        if items.is_empty() {
            return Err(Error::Usage("state needs at least one item".into()));
        }
        let mut kets: Vec<u64> = items.iter().map(|&(_, k)| k).collect();
        kets.sort_unstable();
        if kets.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse { position: 0, message: "duplicate ket".into() });
        }
        if items.iter().any(|&(s, _)| s != 1 && s != -1) {
            return Err(Error::Parse { position: 0, message: "signs must be ±1".into() });
        }
        if items.iter().any(|&(_, k)| k >> t != 0) {
            return Err(Error::Usage("ket wider than the qubit count".into()));
        }
        Ok(SymmetricState {
            t,
            items: items.into_iter().map(|(sign, ket)| Item { sign, ket }).collect(),
        })
    }

    pub fn qubits(&self) -> usize {
        self.t
    }

    /// Number of superposition items m.
    pub fn item_count(&self) -> usize {
        self.items.len()
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    fn sorted_items(&self) -> Vec<Item> {
        let mut v = self.items.clone();
        v.sort_unstable_by_key(|i| i.ket);
        v
    }

    /// Bit of `ket` at 1-based qubit position `q` (qubit 1 = leftmost).
    fn ket_bit(ket: u64, q: usize) -> bool {
        (ket >> (q - 1)) & 1 == 1
    }

    fn ket_string(&self, ket: u64) -> String {
        (1..=self.t).map(|q| if Self::ket_bit(ket, q) { '1' } else { '0' }).collect()
    }

    /// The evenness constraint: m must be even.
    pub fn check_constraint1(&self) -> bool {
        self.items.len().is_multiple_of(2)
    }

    /// All ⌈t/2⌉-sized position sets whose projections of the items are
    /// pairwise distinct bitstrings (distinct ⇔ orthogonal product states).
    pub fn valid_position_sets(&self) -> Vec<PositionSet> {
        let k = self.t.div_ceil(2);
        (1..=self.t)
            .combinations(k)
            .filter(|pos| {
                let mut proj: Vec<u64> = self
                    .items
                    .iter()
                    .map(|it| {
                        pos.iter().enumerate().fold(0u64, |acc, (j, &q)| {
                            acc | ((Self::ket_bit(it.ket, q) as u64) << j)
                        })
                    })
                    .collect();
                proj.sort_unstable();
                proj.windows(2).all(|w| w[0] != w[1])
            })
            .map(PositionSet)
            .collect()
    }

    /// Applies `g` to the qubits listed in `positions` (1-based, strictly
    /// increasing not required here; `g.factor(j)` acts on `positions[j]`).
    pub fn apply_at(&self, g: &PauliString, positions: &[usize]) -> Result<SymmetricState> {
        if g.len() != positions.len() {
            return Err(Error::Arity(format!(
                "operator length {} does not match {} operated qubits",
                g.len(),
                positions.len()
            )));
        }
        if positions.iter().any(|&p| p < 1 || p > self.t) {
            return Err(Error::Usage(format!("positions must lie in 1..={}", self.t)));
        }
        let mut items = Vec::with_capacity(self.items.len());
        for it in &self.items {
            let mut sign = it.sign;
            let mut ket = it.ket;
            for (j, &q) in positions.iter().enumerate() {
                let p = g.factor(j);
                let bit = Self::ket_bit(ket, q);
                // sign rules: Z|1⟩ → −|1⟩ and Y|0⟩ → −|1⟩
                if (p == Pauli::Z && bit) || (p == Pauli::Y && !bit) {
                    sign = -sign;
                }
                if p.x_bit() {
                    ket ^= 1 << (q - 1);
                }
            }
            items.push(Item { sign, ket });
        }
        Ok(SymmetricState { t: self.t, items })
    }

    /// Applies `g` at a validated position set.
    pub fn apply(&self, g: &PauliString, positions: &PositionSet) -> Result<SymmetricState> {
        self.apply_at(g, positions.indices())
    }

    /// Exact inner product ⟨self|other⟩ = numer/√(m_self·m_other).
    pub fn inner_product(&self, other: &SymmetricState) -> Result<Overlap> {
        if self.t != other.t {
            return Err(Error::Arity(format!(
                "qubit counts differ: {} vs {}",
                self.t, other.t
            )));
        }
        let mine = self.sorted_items();
        let mut numer: i64 = 0;
        for it in &other.items {
            if let Ok(i) = mine.binary_search_by_key(&it.ket, |x| x.ket) {
                numer += (mine[i].sign as i64) * (it.sign as i64);
            }
        }
        Ok(Overlap { numer, norm: (self.items.len() * other.items.len()) as u64 })
    }

    /// ⟨self| g |self⟩ on the operated qubits; exact rational in [−1, 1].
    pub fn expectation(&self, g: &PauliString, positions: &[usize]) -> Result<Ratio<i64>> {
        let moved = self.apply_at(g, positions)?;
        let ov = self.inner_product(&moved)?;
        Ok(Ratio::new(ov.numer, self.items.len() as i64))
    }

    /// Squared overlap magnitude: exact rational, 0 ⇔ distinguishable,
    /// 1 ⇔ identical up to a global sign.
    pub fn distinguishability(&self, other: &SymmetricState) -> Result<Ratio<i64>> {
        let ov = self.inner_product(other)?;
        Ok(Ratio::new(ov.numer * ov.numer, ov.norm as i64))
    }

    /// True iff `other` equals `self` or `-self`; returns the relative sign.
    pub fn same_up_to_global_sign(&self, other: &SymmetricState) -> Option<i8> {
        if self.t != other.t || self.items.len() != other.items.len() {
            return None;
        }
        let a = self.sorted_items();
        let b = other.sorted_items();
        if a.iter().zip(&b).any(|(x, y)| x.ket != y.ket) {
            return None;
        }
        let rel = a[0].sign * b[0].sign;
        if a.iter().zip(&b).all(|(x, y)| x.sign * y.sign == rel) {
            Some(rel)
        } else {
            None
        }
    }

    /// Parses sign+bitstring tokens separated by newlines or commas.
    /// `#` starts a comment; tokens like `+000`, `-1111`.
    pub fn parse(text: &str) -> Result<SymmetricState> {
        let mut items: Vec<(i8, u64)> = Vec::new();
        let mut width: Option<usize> = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("");
            for token in line.split(',') {
                let token = token.trim();
                if token.is_empty() {
                    continue;
                }
                let (sign, bits) = match token.chars().next() {
                    Some('+') => (1i8, &token[1..]),
                    Some('-') => (-1i8, &token[1..]),
                    Some(c) if c == '0' || c == '1' => (1i8, token),
                    _ => {
                        return Err(Error::Parse {
                            position: lineno,
                            message: format!("bad sign in `{token}`"),
                        })
                    }
                };
                if bits.is_empty() || bits.chars().any(|c| c != '0' && c != '1') {
                    return Err(Error::Parse {
                        position: lineno,
                        message: format!("bad ket in `{token}`"),
                    });
                }
                match width {
                    None => width = Some(bits.len()),
                    Some(w) if w != bits.len() => {
                        return Err(Error::Parse {
                            position: lineno,
                            message: format!("ragged ket lengths: {w} vs {}", bits.len()),
                        })
                    }
                    _ => {}
                }
                let mut ket = 0u64;
                for (i, c) in bits.chars().enumerate() {
                    if c == '1' {
                        ket |= 1 << i;
                    }
                }
                items.push((sign, ket));
            }
        }
        let t = width.ok_or(Error::Parse { position: 0, message: "empty state".into() })?;
        SymmetricState::new(t, items)
    }

    /// One item per line, `+`/`-` then the bitstring.
    pub fn format(&self) -> String {
        self.items
            .iter()
            .map(|it| {
                format!("{}{}", if it.sign < 0 { '-' } else { '+' }, self.ket_string(it.ket))
            })
            .join("\n")
    }

    /// Signed ket sum with the 1/√m prefactor, e.g. `1/√2(|000⟩ - |111⟩)`.
    pub fn to_ket_notation(&self) -> String {
        let m = self.items.len();
        let root = (m as f64).sqrt() as usize;
        let prefactor = if root * root == m {
            format!("1/{root}")
        } else {
            format!("1/√{m}")
        };
        let mut out = format!("{prefactor}(");
        for (i, it) in self.items.iter().enumerate() {
            if it.sign < 0 {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            out.push('|');
            out.push_str(&self.ket_string(it.ket));
            out.push('⟩');
        }
        out.push(')');
        out
    }

    /// Per-site correlation-operator verdicts: builds X at the site tensored
    /// with Z on each neighbour, applies it, and reports the eigenvalue when
    /// the state is reproduced up to a global sign.
    pub fn verify_cluster(&self, neighborhoods: &[Vec<usize>]) -> Result<Vec<SiteVerdict>> {
        if neighborhoods.len() != self.t {
            return Err(Error::Usage(format!(
                "adjacency must list all {} sites, got {}",
                self.t,
                neighborhoods.len()
            )));
        }
        let mut out = Vec::with_capacity(self.t);
        for (idx, nbrs) in neighborhoods.iter().enumerate() {
            let site = idx + 1;
            if nbrs.iter().any(|&b| b < 1 || b > self.t || b == site) {
                return Err(Error::Usage(format!(
                    "bad neighbourhood for site {site}: {nbrs:?}"
                )));
            }
            let mut support: Vec<usize> = Vec::with_capacity(nbrs.len() + 1);
            support.push(site);
            support.extend(nbrs.iter().copied());
            support.sort_unstable();
            support.dedup();
            let factors: Vec<Pauli> = support
                .iter()
                .map(|&q| if q == site { Pauli::X } else { Pauli::Z })
                .collect();
            let op = PauliString::from_factors(&factors);
            let moved = self.apply_at(&op, &support)?;
            let eigenvalue = self.same_up_to_global_sign(&moved).map(|rel| if rel > 0 { 0 } else { 1 });
            out.push(SiteVerdict { site, operator: op, support, eigenvalue });
        }
        Ok(out)
    }
}

impl fmt::Display for SymmetricState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ket_notation())
    }
}

/// Exact overlap `numer/√norm`; with equal item counts `norm = m²` and the
/// value is the rational `numer/m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overlap {
    pub numer: i64,
    pub norm: u64,
}

impl Overlap {
    pub fn is_zero(&self) -> bool {
        self.numer == 0
    }

    /// |overlap| = 1, i.e. the two states are the same up to a global sign.
    pub fn is_unit(&self) -> bool {
        (self.numer * self.numer) as u64 == self.norm
    }

    /// The overlap as an exact rational when √norm is an integer.
    pub fn as_ratio(&self) -> Option<Ratio<i64>> {
        let root = (self.norm as f64).sqrt().round() as u64;
        (root * root == self.norm).then(|| Ratio::new(self.numer, root as i64))
    }

    pub fn squared(&self) -> Ratio<i64> {
        Ratio::new(self.numer * self.numer, self.norm as i64)
    }
}

/// Outcome of the correlation-operator check at one site.
#[derive(Debug, Clone, Serialize)]
pub struct SiteVerdict {
    pub site: usize,
    pub operator: PauliString,
    pub support: Vec<usize>,
    /// `Some(k)` when K|φ⟩ = (−1)^k |φ⟩; `None` when not an eigenstate.
    pub eigenvalue: Option<u8>,
}

/// The named states from the worked examples.
///
/// `ghz<M>` is (|0…0⟩+|1…1⟩)/√2 on M qubits; `w<t>` the equal-weight
/// single-excitation state; `w1_4` and `w2_4` the two 4-qubit W variants;
/// `cluster4`, `cluster5` the cluster instances; `bell` = `ghz2`;
/// `w3` = `w(3)`.
pub fn builtin_state(name: &str) -> Result<SymmetricState> {
    let lower = name.to_ascii_lowercase();
    let parsed: Option<SymmetricState> = match lower.as_str() {
        "bell" => Some(ghz(2)?),
        "w1_4" => Some(SymmetricState::parse("+1100,+0110,+0011,+1001")?),
        "w2_4" => Some(SymmetricState::parse("+0001,+0010,+0100,+1000")?),
        "cluster4" => Some(SymmetricState::parse("+0000,+0011,+1100,-1111")?),
        "cluster5" => Some(SymmetricState::parse("+00000,+00111,+11011,-11100")?),
        _ => None,
    };
    if let Some(s) = parsed {
        return Ok(s);
    }
    if let Some(m) = lower.strip_prefix("ghz") {
        let m: usize = m.parse().map_err(|_| Error::UnknownState(name.into()))?;
        return ghz(m);
    }
    if let Some(t) = lower.strip_prefix('w') {
        let t: usize = t.parse().map_err(|_| Error::UnknownState(name.into()))?;
        return w_state(t);
    }
    Err(Error::UnknownState(name.into()))
}

/// (|0⟩^⊗M + |1⟩^⊗M)/√2.
pub fn ghz(m: usize) -> Result<SymmetricState> {
    if !(2..=63).contains(&m) {
        return Err(Error::Usage("ghz needs 2..=63 qubits".into()));
    }
    SymmetricState::new(m, vec![(1, 0), (1, (1u64 << m) - 1)])
}

/// t^{-1/2}(|10…0⟩ + |01…0⟩ + … + |00…1⟩).
pub fn w_state(t: usize) -> Result<SymmetricState> {
    if !(2..=63).contains(&t) {
        return Err(Error::Usage("w needs 2..=63 qubits".into()));
    }
    SymmetricState::new(t, (0..t).map(|i| (1i8, 1u64 << i)).collect())
}
