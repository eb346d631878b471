//! Incomplete stabilizer tableaus: `k ≤ n` independent, pairwise commuting,
//! Hermitian Pauli rows on `n` qubits.
//!
//! Two tableaus describe the same code space exactly when they generate the
//! same *signed* stabilizer group; [`group_canonical`] picks a unique
//! generating set so that comparison is plain equality.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::pauli::{format_pauli, parse_pauli, PauliString};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StabilizerTableau {
    n: usize,
    rows: Vec<PauliString>,
}

/// Why a tableau is not a valid stabilizer generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableauViolation {
    TooManyRows { k: usize, n: usize },
    NonHermitian { row: usize },
    Anticommuting { row_a: usize, row_b: usize },
    /// `row` is a GF(2) combination of earlier rows.
    Dependent { row: usize },
}

impl fmt::Display for TableauViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableauViolation::TooManyRows { k, n } => {
                write!(f, "{k} rows exceed the {n} qubits")
            }
            TableauViolation::NonHermitian { row } => {
                write!(f, "row {row} carries an imaginary phase")
            }
            TableauViolation::Anticommuting { row_a, row_b } => {
                write!(f, "rows {row_a} and {row_b} anticommute")
            }
            TableauViolation::Dependent { row } => {
                write!(f, "row {row} is dependent on earlier rows")
            }
        }
    }
}

impl StabilizerTableau {
    /// Wraps `rows` as a tableau on `n` qubits. Only the row widths are
    /// checked here; use [`StabilizerTableau::validate`] for the group
    /// invariants.
    pub fn new(n: usize, rows: Vec<PauliString>) -> Result<Self> {
        for (i, r) in rows.iter().enumerate() {
            if r.num_qubits() != n {
                return Err(Error::Parse(format!(
                    "row {i} has {} qubits, expected {n}",
                    r.num_qubits()
                )));
            }
        }
        Ok(StabilizerTableau { n, rows })
    }

    /// Builds and validates in one step.
    pub fn from_rows(n: usize, rows: Vec<PauliString>) -> Result<Self> {
        let t = StabilizerTableau::new(n, rows)?;
        t.validate()
            .map_err(|v| Error::InvalidTableau(v.to_string()))?;
        Ok(t)
    }

    /// Parses rows from their text form, e.g. `["XX", "ZZ"]`, and validates.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|s| parse_pauli(s))
            .collect::<Result<Vec<_>>>()?;
        let n = parsed.first().map_or(0, |p| p.num_qubits());
        StabilizerTableau::from_rows(n, parsed)
    }

    pub fn empty(n: usize) -> Self {
        StabilizerTableau { n, rows: Vec::new() }
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    /// Number of rows, `k`.
    #[inline]
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[PauliString] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<PauliString> {
        self.rows
    }

    pub fn validate(&self) -> Result<(), TableauViolation> {
        validate_tableau(self)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Rows as a `k × 2n` bit matrix with columns `x₀..xₙ₋₁, z₀..zₙ₋₁`.
    pub fn symplectic_matrix(&self) -> BitMatrix {
        BitMatrix::from_rows(2 * self.n, self.rows.iter().map(symplectic_row).collect())
    }

    pub fn canonical(&self) -> Result<StabilizerTableau> {
        group_canonical(self)
    }

    /// Qubit relabeling: qubit `q` of `self` becomes qubit `perm[q]`.
    pub fn permute_qubits(&self, perm: &[usize]) -> StabilizerTableau {
        assert_eq!(perm.len(), self.n);
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut out = PauliString::identity(self.n);
                for q in 0..self.n {
                    out.set_letter(perm[q], r.letter(q));
                }
                out.set_phase(r.phase());
                out
            })
            .collect();
        StabilizerTableau { n: self.n, rows }
    }
}

fn symplectic_row(p: &PauliString) -> BitVec {
    let n = p.num_qubits();
    let mut v = BitVec::zeros(2 * n);
    for q in p.x().ones() {
        v.set(q, true);
    }
    for q in p.z().ones() {
        v.set(n + q, true);
    }
    v
}

#[inline]
fn column_bit(p: &PauliString, c: usize, n: usize) -> bool {
    if c < n {
        p.x().get(c)
    } else {
        p.z().get(c - n)
    }
}

pub fn validate_tableau(t: &StabilizerTableau) -> Result<(), TableauViolation> {
    let k = t.rows.len();
    for (i, r) in t.rows.iter().enumerate() {
        if !r.is_hermitian() {
            return Err(TableauViolation::NonHermitian { row: i });
        }
    }
    for a in 0..k {
        for b in a + 1..k {
            // widths are equal by construction
            if !t.rows[a].commutes(&t.rows[b]).unwrap_or(false) {
                return Err(TableauViolation::Anticommuting { row_a: a, row_b: b });
            }
        }
    }
    if k > t.n {
        return Err(TableauViolation::TooManyRows { k, n: t.n });
    }
    // Incremental elimination: keep a reduced basis keyed by pivot column.
    let mut basis: Vec<(usize, BitVec)> = Vec::with_capacity(k);
    for (i, r) in t.rows.iter().enumerate() {
        let mut v = symplectic_row(r);
        for (pivot, b) in &basis {
            if v.get(*pivot) {
                v.xor_assign(b);
            }
        }
        match v.first_one() {
            None => return Err(TableauViolation::Dependent { row: i }),
            Some(p) => basis.push((p, v)),
        }
    }
    Ok(())
}

/// The unique generating set of the signed group generated by `t`: the rows
/// in reduced row-echelon form over the columns `x₀..xₙ₋₁, z₀..zₙ₋₁`, with
/// signs carried through the row multiplications.
pub fn group_canonical(t: &StabilizerTableau) -> Result<StabilizerTableau> {
    t.validate()
        .map_err(|v| Error::InvalidTableau(v.to_string()))?;
    let n = t.n;
    let mut rows = t.rows.clone();
    let mut r = 0;
    for c in 0..2 * n {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| column_bit(&rows[i], c, n)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && column_bit(row, c, n) {
                row.mul_assign_right(&pivot);
            }
        }
        r += 1;
    }
    Ok(StabilizerTableau { n, rows })
}

/// Signed-group equality of two tableaus with the same shape.
pub fn groups_equal(a: &StabilizerTableau, b: &StabilizerTableau) -> Result<bool> {
    if a.n != b.n || a.rows.len() != b.rows.len() {
        return Err(Error::Invalid(format!(
            "shape mismatch: {}x{} vs {}x{}",
            a.rows.len(),
            a.n,
            b.rows.len(),
            b.n
        )));
    }
    Ok(group_canonical(a)? == group_canonical(b)?)
}

/// Parses the line-oriented tableau format: an optional `n=<int> k=<int>`
/// header, then one signed Pauli string per line. `#` starts a comment and
/// blank lines are skipped.
pub fn parse_tableau(text: &str) -> Result<StabilizerTableau> {
    let mut header: Option<(usize, usize)> = None;
    let mut rows = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with("n=") || line.starts_with("n =") {
            if header.is_some() || !rows.is_empty() {
                return Err(Error::Parse(format!(
                    "line {}: header must come before any rows",
                    lineno + 1
                )));
            }
            header = Some(parse_header(line).ok_or_else(|| {
                Error::Parse(format!("line {}: bad header {line:?}", lineno + 1))
            })?);
            continue;
        }
        let p = parse_pauli(line)
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        rows.push(p);
    }
    let width = rows.first().map(|r| r.num_qubits());
    if let Some(w) = width {
        if let Some(i) = rows.iter().position(|r| r.num_qubits() != w) {
            return Err(Error::Parse(format!(
                "ragged tableau: row {i} has {} qubits, row 0 has {w}",
                rows[i].num_qubits()
            )));
        }
    }
    let n = match (header, width) {
        (Some((n, k)), _) => {
            if k != rows.len() {
                return Err(Error::Parse(format!(
                    "header declares k={k} but {} rows follow",
                    rows.len()
                )));
            }
            if width.is_some_and(|w| w != n) {
                return Err(Error::Parse(format!(
                    "header declares n={n} but rows have {} qubits",
                    width.unwrap_or(0)
                )));
            }
            n
        }
        (None, Some(w)) => w,
        (None, None) => {
            return Err(Error::Parse(
                "empty tableau needs an `n=<int> k=0` header".into(),
            ))
        }
    };
    StabilizerTableau::new(n, rows)
}

fn parse_header(line: &str) -> Option<(usize, usize)> {
    let mut n = None;
    let mut k = None;
    for tok in line.split_whitespace() {
        let (key, val) = tok.split_once('=')?;
        let val: usize = val.trim().parse().ok()?;
        match key.trim() {
            "n" => n = Some(val),
            "k" => k = Some(val),
            _ => return None,
        }
    }
    Some((n?, k?))
}

pub fn format_tableau(t: &StabilizerTableau) -> String {
    let mut s = format!("n={} k={}\n", t.n, t.rows.len());
    for r in &t.rows {
        s.push_str(&format_pauli(r));
        s.push('\n');
    }
    s
}

impl FromStr for StabilizerTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_tableau(s)
    }
}

impl fmt::Display for StabilizerTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_tableau(self))
    }
}

impl fmt::Debug for StabilizerTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(format_pauli).collect();
        write!(f, "Tableau(n={}, [{}])", self.n, rows.join(", "))
    }
}
