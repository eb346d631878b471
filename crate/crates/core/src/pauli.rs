//! Signed Pauli strings in the symplectic (x|z) bit representation.
//!
//! A [`PauliString`] on `n` qubits denotes `i^phase · σ(x₀,z₀) ⊗ … ⊗ σ(xₙ₋₁,zₙ₋₁)`
//! where `σ(0,0)=I`, `σ(1,0)=X`, `σ(0,1)=Z` and `σ(1,1)=Y`. With this
//! convention every Hermitian string, and so every stabilizer, has an even
//! phase exponent.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::BitVec;

/// A single-qubit Pauli letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    #[inline]
    pub fn from_bits(x: bool, z: bool) -> Letter {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }

    #[inline]
    pub fn bits(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Y => (true, true),
            Letter::Z => (false, true),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    x: BitVec,
    z: BitVec,
    /// Exponent of the leading `i`, always reduced mod 4.
    phase: u8,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        PauliString {
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
            phase: 0,
        }
    }

    /// Builds a string from raw parts. `x` and `z` must have equal length.
    pub fn from_parts(x: BitVec, z: BitVec, phase: u8) -> Self {
        assert_eq!(x.len(), z.len(), "x and z parts differ in length");
        PauliString {
            x,
            z,
            phase: phase % 4,
        }
    }

    /// A single letter on qubit `q` of an `n`-qubit register, sign `+`.
    pub fn single(n: usize, q: usize, letter: Letter) -> Self {
        let mut p = PauliString::identity(n);
        p.set_letter(q, letter);
        p
    }

    pub fn from_letters(letters: &[Letter], negative: bool) -> Self {
        let mut p = PauliString::identity(letters.len());
        for (q, &l) in letters.iter().enumerate() {
            p.set_letter(q, l);
        }
        if negative {
            p.phase = 2;
        }
        p
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    #[inline]
    pub fn x(&self) -> &BitVec {
        &self.x
    }

    #[inline]
    pub fn z(&self) -> &BitVec {
        &self.z
    }

    #[inline]
    pub fn phase(&self) -> u8 {
        self.phase
    }

    #[inline]
    pub fn is_hermitian(&self) -> bool {
        self.phase % 2 == 0
    }

    /// True for a Hermitian string with sign −1.
    #[inline]
    pub fn is_negative(&self) -> bool {
        self.phase == 2
    }

    pub fn set_phase(&mut self, phase: u8) {
        self.phase = phase % 4;
    }

    pub fn negate(&mut self) {
        self.phase = (self.phase + 2) % 4;
    }

    #[inline]
    pub fn letter(&self, q: usize) -> Letter {
        Letter::from_bits(self.x.get(q), self.z.get(q))
    }

    #[inline]
    pub fn set_letter(&mut self, q: usize, letter: Letter) {
        let (x, z) = letter.bits();
        self.x.set(q, x);
        self.z.set(q, z);
    }

    /// Mutable access to the bit parts, for Clifford conjugation kernels.
    #[inline]
    pub(crate) fn parts_mut(&mut self) -> (&mut BitVec, &mut BitVec, &mut u8) {
        (&mut self.x, &mut self.z, &mut self.phase)
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Number of non-identity letters.
    pub fn weight(&self) -> usize {
        (0..self.num_qubits())
            .filter(|&q| self.x.get(q) || self.z.get(q))
            .count()
    }

    /// Symplectic inner product `Σ (a.x·b.z + a.z·b.x)` mod 2.
    pub fn symplectic_form(&self, other: &PauliString) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.x.dot(&other.z) ^ self.z.dot(&other.x))
    }

    pub fn commutes(&self, other: &PauliString) -> Result<bool> {
        Ok(!self.symplectic_form(other)?)
    }

    /// Operator product `self · other`, phases tracked exactly.
    pub fn multiply(&self, other: &PauliString) -> Result<PauliString> {
        self.check_len(other)?;
        let mut out = self.clone();
        out.mul_assign_right(other);
        Ok(out)
    }

    /// In-place `self ← self · other`. Lengths must agree.
    pub fn mul_assign_right(&mut self, other: &PauliString) {
        debug_assert_eq!(self.num_qubits(), other.num_qubits());
        // Rewrite each factor as i^e · X^x Z^z (Y = iXZ), multiply, and
        // convert back; moving Z^za past X^xb costs (-1)^{za·xb}.
        let ya = self.x.and_count(&self.z);
        let yb = other.x.and_count(&other.z);
        let swap = self.z.and_count(&other.x);
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
        let y = self.x.and_count(&self.z);
        let e = self.phase as usize + other.phase as usize + ya + yb + 2 * swap + 4 * y - y;
        self.phase = (e % 4) as u8;
    }

    fn check_len(&self, other: &PauliString) -> Result<()> {
        if self.num_qubits() != other.num_qubits() {
            return Err(Error::LengthMismatch {
                expected: self.num_qubits(),
                found: other.num_qubits(),
            });
        }
        Ok(())
    }

    /// Restricts to the qubits listed in `keep`, in that order. The phase is
    /// carried over unchanged.
    pub fn restrict(&self, keep: &[usize]) -> PauliString {
        let mut out = PauliString::identity(keep.len());
        for (i, &q) in keep.iter().enumerate() {
            out.set_letter(i, self.letter(q));
        }
        out.phase = self.phase;
        out
    }

    /// Tensor product `self ⊗ other` (self on the lower-numbered qubits).
    pub fn tensor(&self, other: &PauliString) -> PauliString {
        let n = self.num_qubits();
        let mut out = PauliString::identity(n + other.num_qubits());
        for q in 0..n {
            out.set_letter(q, self.letter(q));
        }
        for q in 0..other.num_qubits() {
            out.set_letter(n + q, other.letter(q));
        }
        out.phase = (self.phase + other.phase) % 4;
        out
    }
}

pub fn parse_pauli(text: &str) -> Result<PauliString> {
    let t = text.trim();
    let (phase, body) = if let Some(rest) = t.strip_prefix("-i") {
        (3, rest)
    } else if let Some(rest) = t.strip_prefix("+i") {
        (1, rest)
    } else if let Some(rest) = t.strip_prefix('i') {
        (1, rest)
    } else if let Some(rest) = t.strip_prefix('-') {
        (2, rest)
    } else if let Some(rest) = t.strip_prefix('+') {
        (0, rest)
    } else {
        (0, t)
    };
    if body.is_empty() {
        return Err(Error::Parse(format!("empty Pauli string {text:?}")));
    }
    let mut letters = Vec::with_capacity(body.len());
    for (i, c) in body.chars().enumerate() {
        letters.push(match c {
            'I' => Letter::I,
            'X' => Letter::X,
            'Y' => Letter::Y,
            'Z' => Letter::Z,
            other => {
                return Err(Error::Parse(format!(
                    "illegal character {other:?} at position {i} in Pauli string {text:?}"
                )))
            }
        });
    }
    let mut p = PauliString::from_letters(&letters, false);
    p.phase = phase;
    Ok(p)
}

pub fn format_pauli(p: &PauliString) -> String {
    let mut s = String::with_capacity(p.num_qubits() + 2);
    s.push_str(match p.phase {
        0 => "",
        1 => "i",
        2 => "-",
        _ => "-i",
    });
    for q in 0..p.num_qubits() {
        s.push(p.letter(q).as_char());
    }
    s
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pauli(s)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_pauli(self))
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({})", format_pauli(self))
    }
}
