//! Phaseless Pauli algebra over the symplectic GF(2) encoding.
//!
//! A single-qubit operator is one of `{I, X, Y, Z}` with `Y = ZX` and the
//! global phase discarded, so every operator squares to the identity and the
//! product of two operators is their componentwise XOR in (x, z) bits. An
//! n-qubit string packs the x bits and z bits into one machine word each,
//! making multiplication two XORs regardless of length.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Maximum supported string length. One `u64` per bit-plane.
pub const MAX_QUBITS: usize = 64;

/// Single-qubit phaseless Pauli operator, encoded as (x, z) bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    pub fn from_bits(x: bool, z: bool) -> Pauli {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn x_bit(self) -> bool {
        matches!(self, Pauli::X | Pauli::Y)
    }

    pub fn z_bit(self) -> bool {
        matches!(self, Pauli::Z | Pauli::Y)
    }

    pub fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    fn from_letter(c: char) -> Option<Pauli> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }
}

/// Phaseless n-qubit Pauli string. Qubit 1 is the leftmost factor in the
/// text form and lives in bit 0 of each plane.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: u8,
    x: u64,
    z: u64,
}

impl PauliString {
    /// The all-identity string of length `n`.
    pub fn identity(n: usize) -> PauliString {
        assert!((1..=MAX_QUBITS).contains(&n), "arity must be in 1..={MAX_QUBITS}");
        PauliString { n: n as u8, x: 0, z: 0 }
    }

    pub fn from_factors(factors: &[Pauli]) -> PauliString {
        let mut s = PauliString::identity(factors.len());
        for (i, &p) in factors.iter().enumerate() {
            s.set_factor(i, p);
        }
        s
    }

    /// Reconstructs a string from its packed symplectic vector
    /// (bit 2i = x of qubit i+1, bit 2i+1 = z of qubit i+1).
    pub fn from_symplectic(v: u128, n: usize) -> PauliString {
        let mut s = PauliString::identity(n);
        for i in 0..n {
            let x = (v >> (2 * i)) & 1 == 1;
            let z = (v >> (2 * i + 1)) & 1 == 1;
            s.set_factor(i, Pauli::from_bits(x, z));
        }
        s
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Factor acting on qubit `i + 1` (0-based slot).
    pub fn factor(&self, i: usize) -> Pauli {
        debug_assert!(i < self.len());
        Pauli::from_bits((self.x >> i) & 1 == 1, (self.z >> i) & 1 == 1)
    }

    pub fn set_factor(&mut self, i: usize, p: Pauli) {
        debug_assert!(i < self.len());
        self.x = (self.x & !(1 << i)) | ((p.x_bit() as u64) << i);
        self.z = (self.z & !(1 << i)) | ((p.z_bit() as u64) << i);
    }

    pub fn factors(&self) -> impl Iterator<Item = Pauli> + '_ {
        (0..self.len()).map(move |i| self.factor(i))
    }

    pub fn is_identity(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    /// True iff every factor is `I` or `Z`.
    pub fn is_diagonal(&self) -> bool {
        self.x == 0
    }

    /// Number of factors equal to `Z` (not counting the Z inside `Y`).
    pub fn z_count(&self) -> usize {
        (self.z & !self.x).count_ones() as usize
    }

    /// Phaseless product: componentwise symplectic sum. Commutative and
    /// self-inverse (`mul(g, g)` is the identity).
    pub fn mul(&self, other: &PauliString) -> Result<PauliString> {
        if self.n != other.n {
            return Err(Error::Arity(format!(
                "cannot multiply strings of length {} and {}",
                self.n, other.n
            )));
        }
        Ok(PauliString { n: self.n, x: self.x ^ other.x, z: self.z ^ other.z })
    }

    /// Packed symplectic vector: bit 2i = x of qubit i+1, bit 2i+1 = z.
    /// Subgroup canonicalization does row reduction on these.
    pub fn symplectic(&self) -> u128 {
        let mut v = 0u128;
        for i in 0..self.len() {
            v |= (((self.x >> i) & 1) as u128) << (2 * i);
            v |= (((self.z >> i) & 1) as u128) << (2 * i + 1);
        }
        v
    }

    /// Ordering key with I < X < Y < Z per factor, qubit 1 most significant.
    /// This is the order the published tables list operators in.
    pub fn lex_key(&self) -> u64 {
        let mut k = 0u64;
        for p in self.factors() {
            k = k * 4
                + match p {
                    Pauli::I => 0,
                    Pauli::X => 1,
                    Pauli::Y => 2,
                    Pauli::Z => 3,
                };
        }
        k
    }

    /// Bare-letter form, e.g. `YX`.
    pub fn to_compact(&self) -> String {
        self.factors().map(Pauli::letter).collect()
    }

    /// Tensor form, e.g. `Y⊗X`.
    pub fn to_tensor(&self) -> String {
        let mut out = String::new();
        for (i, p) in self.factors().enumerate() {
            if i > 0 {
                out.push('⊗');
            }
            out.push(p.letter());
        }
        out
    }

    /// Parses a string over `{I, X, Y, Z}` with optional `⊗` separators.
    /// Errors carry the char position of the offending character.
    pub fn parse(text: &str) -> Result<PauliString> {
        let mut factors = Vec::new();
        for (pos, c) in text.chars().enumerate() {
            if c == '⊗' || c.is_whitespace() {
                continue;
            }
            match Pauli::from_letter(c) {
                Some(p) => factors.push(p),
                None => {
                    return Err(Error::Parse {
                        position: pos,
                        message: format!("unknown operator character `{c}`"),
                    })
                }
            }
        }
        if factors.is_empty() {
            return Err(Error::Parse { position: 0, message: "empty operator string".into() });
        }
        if factors.len() > MAX_QUBITS {
            return Err(Error::Parse {
                position: MAX_QUBITS,
                message: format!("operator longer than {MAX_QUBITS} qubits"),
            });
        }
        Ok(PauliString::from_factors(&factors))
    }

    /// Tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &PauliString) -> PauliString {
        let n = self.len() + other.len();
        assert!(n <= MAX_QUBITS);
        PauliString {
            n: n as u8,
            x: self.x | (other.x << self.len()),
            z: self.z | (other.z << self.len()),
        }
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({})", self.to_compact())
    }
}

impl Serialize for PauliString {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_compact())
    }
}

impl<'de> Deserialize<'de> for PauliString {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        PauliString::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// All `4^n` strings of length `n` in lex order (I < X < Y < Z).
pub fn full_group(n: usize) -> Vec<PauliString> {
    assert!((1..=16).contains(&n), "full group enumeration limited to n <= 16");
    fn rec(n: usize, slot: usize, cur: &mut PauliString, out: &mut Vec<PauliString>) {
        if slot == n {
            out.push(*cur);
            return;
        }
        for p in Pauli::ALL {
            cur.set_factor(slot, p);
            rec(n, slot + 1, cur, out);
        }
        cur.set_factor(slot, Pauli::I);
    }
    let mut out = Vec::with_capacity(1usize << (2 * n));
    let mut cur = PauliString::identity(n);
    rec(n, 0, &mut cur, &mut out);
    out
}
