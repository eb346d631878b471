//! The canonical diagram and its validity rules.
//!
//! A [`ZxcfDiagram`] has `n − k` input nodes and `n` output nodes. Every node
//! is a Z-spider with one free edge and every internal edge carries a
//! Hadamard, so the diagram is fully described by
//!
//! * `m`: the `(n−k) × n` input/output adjacency,
//! * `a`: the symmetric output/output adjacency,
//! * `phase[o]`: the phase of output `o` in quarter turns,
//! * `had[o]`: whether the free edge of output `o` carries a Hadamard.
//!
//! Inputs never touch each other and never carry decorations. The pivot
//! outputs are the leading columns of the rows of `m`.

mod dot;
mod enumerate;
mod pipeline;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

pub use dot::render_dot;
pub use enumerate::{enumerate_zxcf, ZxcfEnumerator};
pub use pipeline::{canonicalize, canonicalize_encoder, decompile, strip_locals};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "DiagramJson", try_from = "DiagramJson")]
pub struct ZxcfDiagram {
    n: usize,
    k: usize,
    m: BitMatrix,
    a: BitMatrix,
    phase: Vec<u8>,
    had: Vec<bool>,
}

impl ZxcfDiagram {
    /// Assembles a diagram, checking shapes only. Use [`validate_zxcf`] for
    /// the canonical-form rules.
    pub fn new(
        n: usize,
        k: usize,
        m: BitMatrix,
        a: BitMatrix,
        phase: Vec<u8>,
        had: Vec<bool>,
    ) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidDiagram(format!("k = {k} exceeds n = {n}")));
        }
        if m.num_rows() != n - k || m.num_cols() != n {
            return Err(Error::InvalidDiagram(format!(
                "m is {}x{}, expected {}x{n}",
                m.num_rows(),
                m.num_cols(),
                n - k
            )));
        }
        if a.num_rows() != n || a.num_cols() != n {
            return Err(Error::InvalidDiagram(format!(
                "a is {}x{}, expected {n}x{n}",
                a.num_rows(),
                a.num_cols()
            )));
        }
        if phase.len() != n || had.len() != n {
            return Err(Error::InvalidDiagram(format!(
                "{} phases and {} Hadamard flags for {n} outputs",
                phase.len(),
                had.len()
            )));
        }
        if let Some(&q) = phase.iter().find(|&&q| q > 3) {
            return Err(Error::InvalidDiagram(format!("phase {q} out of range 0..=3")));
        }
        if !a.is_symmetric() {
            return Err(Error::InvalidDiagram("a is not symmetric".into()));
        }
        if let Some(v) = (0..n).find(|&v| a.get(v, v)) {
            return Err(Error::InvalidDiagram(format!("self-loop on output {v}")));
        }
        Ok(ZxcfDiagram {
            n,
            k,
            m,
            a,
            phase,
            had,
        })
    }

    /// The diagram of the identity encoder on `n` qubits.
    pub fn identity(n: usize) -> Self {
        ZxcfDiagram {
            n,
            k: 0,
            m: BitMatrix::identity(n),
            a: BitMatrix::zeros(n, n),
            phase: vec![0; n],
            had: vec![false; n],
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn num_inputs(&self) -> usize {
        self.n - self.k
    }

    pub fn m(&self) -> &BitMatrix {
        &self.m
    }

    pub fn a(&self) -> &BitMatrix {
        &self.a
    }

    #[inline]
    pub fn m_edge(&self, input: usize, output: usize) -> bool {
        self.m.get(input, output)
    }

    #[inline]
    pub fn a_edge(&self, u: usize, v: usize) -> bool {
        self.a.get(u, v)
    }

    #[inline]
    pub fn phase(&self, o: usize) -> u8 {
        self.phase[o]
    }

    #[inline]
    pub fn had(&self, o: usize) -> bool {
        self.had[o]
    }

    pub fn phases(&self) -> &[u8] {
        &self.phase
    }

    pub fn hads(&self) -> &[bool] {
        &self.had
    }

    /// Output/output edges `(i, j)` with `i < j`, sorted.
    pub fn a_edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| {
                self.a
                    .row(i)
                    .ones()
                    .filter(move |&j| j > i)
                    .map(move |j| (i, j))
            })
            .collect()
    }

    /// Leading column of each nonzero row of `m`, in row order.
    pub fn pivots(&self) -> Vec<usize> {
        self.m.rows().iter().filter_map(|r| r.first_one()).collect()
    }

    pub fn validate(&self) -> std::result::Result<(), Vec<RuleViolation>> {
        validate_zxcf(self)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("diagram serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub(crate) fn set_phase(&mut self, o: usize, q: u8) {
        self.phase[o] = q % 4;
    }

    pub(crate) fn set_had(&mut self, o: usize, h: bool) {
        self.had[o] = h;
    }

    pub(crate) fn m_mut(&mut self) -> &mut BitMatrix {
        &mut self.m
    }

    pub(crate) fn a_mut(&mut self) -> &mut BitMatrix {
        &mut self.a
    }
}

impl fmt::Debug for ZxcfDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    n: usize,
    k: usize,
    m: Vec<Vec<u8>>,
    a: Vec<[usize; 2]>,
    phase: Vec<u8>,
    had: Vec<bool>,
}

impl From<ZxcfDiagram> for DiagramJson {
    fn from(d: ZxcfDiagram) -> Self {
        DiagramJson {
            n: d.n,
            k: d.k,
            m: d
                .m
                .rows()
                .iter()
                .map(|r| r.to_bools().into_iter().map(u8::from).collect())
                .collect(),
            a: d.a_edges().into_iter().map(|(i, j)| [i, j]).collect(),
            phase: d.phase,
            had: d.had,
        }
    }
}

impl TryFrom<DiagramJson> for ZxcfDiagram {
    type Error = Error;

    fn try_from(j: DiagramJson) -> Result<Self> {
        let mut rows = Vec::with_capacity(j.m.len());
        for (r, row) in j.m.iter().enumerate() {
            if row.len() != j.n {
                return Err(Error::InvalidDiagram(format!(
                    "m row {r} has {} entries, expected {}",
                    row.len(),
                    j.n
                )));
            }
            let mut bits = Vec::with_capacity(j.n);
            for &b in row {
                match b {
                    0 => bits.push(false),
                    1 => bits.push(true),
                    _ => {
                        return Err(Error::InvalidDiagram(format!(
                            "m entry {b} is not 0 or 1"
                        )))
                    }
                }
            }
            rows.push(bits);
        }
        let m = BitMatrix::from_bools(&rows, j.n);
        let mut a = BitMatrix::zeros(j.n, j.n);
        for [u, v] in j.a {
            if u >= j.n || v >= j.n || u == v {
                return Err(Error::InvalidDiagram(format!("bad edge [{u}, {v}]")));
            }
            a.set(u, v, true);
            a.set(v, u, true);
        }
        ZxcfDiagram::new(j.n, j.k, m, a, j.phase, j.had)
    }
}

/// One breach of the canonical-form rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleViolation {
    /// A Hadamard-decorated output whose phase is an odd quarter turn.
    HadamardPhase { output: usize, phase: u8 },
    /// A Hadamard-decorated output joined to a lower-numbered output.
    HadamardLowerEdge { output: usize, neighbor: usize },
    /// A Hadamard-decorated output joined to an input.
    HadamardInputEdge { output: usize, input: usize },
    NotRref,
    RankDeficient { rank: usize, expected: usize },
    PivotPhase { pivot: usize, phase: u8 },
    PivotHadamard { pivot: usize },
    PivotPivotEdge { a: usize, b: usize },
}

impl fmt::Display for RuleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleViolation::HadamardPhase { output, phase } => write!(
                f,
                "hadamard rule: output {output} has a Hadamard and phase {phase}π/2"
            ),
            RuleViolation::HadamardLowerEdge { output, neighbor } => write!(
                f,
                "hadamard rule: output {output} has a Hadamard and an edge to lower output {neighbor}"
            ),
            RuleViolation::HadamardInputEdge { output, input } => write!(
                f,
                "hadamard rule: output {output} has a Hadamard and an edge to input {input}"
            ),
            RuleViolation::NotRref => write!(f, "rref rule: m is not in reduced row-echelon form"),
            RuleViolation::RankDeficient { rank, expected } => {
                write!(f, "rref rule: m has rank {rank}, expected {expected}")
            }
            RuleViolation::PivotPhase { pivot, phase } => {
                write!(f, "clifford rule: pivot {pivot} has phase {phase}π/2")
            }
            RuleViolation::PivotHadamard { pivot } => {
                write!(f, "clifford rule: pivot {pivot} has a Hadamard")
            }
            RuleViolation::PivotPivotEdge { a, b } => {
                write!(f, "clifford rule: edge between pivots {a} and {b}")
            }
        }
    }
}

/// Checks the Hadamard, RREF and Clifford rules. The edge rule and the
/// absence of input/input edges hold by construction of the type.
pub fn validate_zxcf(d: &ZxcfDiagram) -> std::result::Result<(), Vec<RuleViolation>> {
    let mut out = Vec::new();
    for o in 0..d.n {
        if !d.had[o] {
            continue;
        }
        if d.phase[o] % 2 == 1 {
            out.push(RuleViolation::HadamardPhase {
                output: o,
                phase: d.phase[o],
            });
        }
        if let Some(u) = d.a.row(o).ones().find(|&u| u < o) {
            out.push(RuleViolation::HadamardLowerEdge {
                output: o,
                neighbor: u,
            });
        }
        if let Some(j) = (0..d.num_inputs()).find(|&j| d.m.get(j, o)) {
            out.push(RuleViolation::HadamardInputEdge { output: o, input: j });
        }
    }
    if !d.m.is_rref() {
        out.push(RuleViolation::NotRref);
    }
    let rank = d.m.rank();
    if rank != d.num_inputs() {
        out.push(RuleViolation::RankDeficient {
            rank,
            expected: d.num_inputs(),
        });
    }
    let pivots = d.pivots();
    for &p in &pivots {
        if d.phase[p] != 0 {
            out.push(RuleViolation::PivotPhase {
                pivot: p,
                phase: d.phase[p],
            });
        }
        if d.had[p] {
            out.push(RuleViolation::PivotHadamard { pivot: p });
        }
    }
    for (i, &p) in pivots.iter().enumerate() {
        for &q in &pivots[i + 1..] {
            if d.a.get(p, q) {
                out.push(RuleViolation::PivotPivotEdge {
                    a: p.min(q),
                    b: p.max(q),
                });
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}
