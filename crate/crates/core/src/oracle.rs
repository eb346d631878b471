//! Dense linear-algebra ground truth for small instances.
//!
//! Everything here works on explicit `2^n`-dimensional complex vectors and
//! is deliberately naive: it shares no code with the symplectic machinery
//! it is used to check. Qubit `q` is bit `q` of a basis index.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::circuit::{EncoderCircuit, Gate};
use crate::error::{Error, Result};
use crate::graphform::GraphForm;
use crate::local_clifford::LocalClifford;
use crate::pauli::PauliString;
use crate::tableau::StabilizerTableau;
use crate::zxcf::ZxcfDiagram;

/// Absolute tolerance for every comparison in this module.
pub const TOLERANCE: f64 = 1e-9;
/// Largest register handled by projector and circuit simulation.
pub const MAX_QUBITS: usize = 12;
/// Largest output count handled by diagram contraction.
pub const MAX_DIAGRAM_OUTPUTS: usize = 10;

type C = Complex64;

const ZERO: C = C::new(0.0, 0.0);
const ONE: C = C::new(1.0, 0.0);
const I: C = C::new(0.0, 1.0);

/// A column-major complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

/// An encoding map `2^(n−k) → 2^n`, compared only through its image.
pub type DenseIsometry = DenseMatrix;

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = DenseMatrix::zeros(dim, dim);
        for i in 0..dim {
            m.data[i * dim + i] = ONE;
        }
        m
    }

    pub fn from_columns(rows: usize, columns: Vec<Vec<C>>) -> Self {
        let cols = columns.len();
        let mut data = Vec::with_capacity(rows * cols);
        for c in columns {
            assert_eq!(c.len(), rows);
            data.extend(c);
        }
        DenseMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> C {
        self.data[c * self.rows + r]
    }

    pub fn column(&self, c: usize) -> &[C] {
        &self.data[c * self.rows..(c + 1) * self.rows]
    }

    fn column_mut(&mut self, c: usize) -> &mut [C] {
        &mut self.data[c * self.rows..(c + 1) * self.rows]
    }

    pub fn columns(&self) -> impl Iterator<Item = &[C]> {
        self.data.chunks(self.rows.max(1)).take(self.cols)
    }

    pub fn matmul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = DenseMatrix::zeros(self.rows, other.cols);
        for j in 0..other.cols {
            for k in 0..self.cols {
                let b = other.get(k, j);
                if b == ZERO {
                    continue;
                }
                for i in 0..self.rows {
                    out.data[j * self.rows + i] += self.get(i, k) * b;
                }
            }
        }
        out
    }

    pub fn scale(&self, s: C) -> DenseMatrix {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn approx_eq(&self, other: &DenseMatrix) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| (a - b).norm() < TOLERANCE)
    }

    /// Kronecker product with `self` acting on the low-numbered qubits and
    /// `other` on the following ones.
    pub fn kron_low(&self, other: &DenseMatrix) -> DenseMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = DenseMatrix::zeros(rows, cols);
        for hc in 0..other.cols {
            for lc in 0..self.cols {
                for hr in 0..other.rows {
                    let b = other.get(hr, hc);
                    if b == ZERO {
                        continue;
                    }
                    for lr in 0..self.rows {
                        let r = lr + self.rows * hr;
                        let c = lc + self.cols * hc;
                        out.data[c * rows + r] = self.get(lr, lc) * b;
                    }
                }
            }
        }
        out
    }
}

fn check_size(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::SizeCap { what, size, cap })
    } else {
        Ok(())
    }
}

/// `i^e` for an integer exponent.
fn i_pow(e: usize) -> C {
    match e % 4 {
        0 => ONE,
        1 => I,
        2 => -ONE,
        _ => -I,
    }
}

/// Dense matrix of a Pauli string, built from 2×2 factors by Kronecker
/// products.
pub fn pauli_matrix(p: &PauliString) -> Result<DenseMatrix> {
    check_size("qubits", p.num_qubits(), MAX_QUBITS)?;
    let single = |x: bool, z: bool| -> DenseMatrix {
        let v = match (x, z) {
            (false, false) => [ONE, ZERO, ZERO, ONE],
            (true, false) => [ZERO, ONE, ONE, ZERO],
            (false, true) => [ONE, ZERO, ZERO, -ONE],
            // Y = [[0, -i], [i, 0]] in column-major order
            (true, true) => [ZERO, I, -I, ZERO],
        };
        DenseMatrix {
            rows: 2,
            cols: 2,
            data: v.to_vec(),
        }
    };
    let mut m = DenseMatrix::identity(1);
    for q in 0..p.num_qubits() {
        m = m.kron_low(&single(p.x().get(q), p.z().get(q)));
    }
    Ok(m.scale(i_pow(p.phase() as usize)))
}

/// `out ← P · v` for a Pauli string, computed basis state by basis state.
pub fn apply_pauli(p: &PauliString, v: &[C]) -> Vec<C> {
    let n = p.num_qubits();
    let mut xmask = 0usize;
    let mut zmask = 0usize;
    let mut ys = 0usize;
    for q in 0..n {
        if p.x().get(q) {
            xmask |= 1 << q;
        }
        if p.z().get(q) {
            zmask |= 1 << q;
        }
        if p.x().get(q) && p.z().get(q) {
            ys += 1;
        }
    }
    // σ(x,z) = i^{x·z} X^x Z^z
    let global = i_pow(p.phase() as usize + ys);
    let mut out = vec![ZERO; v.len()];
    for (b, &amp) in v.iter().enumerate() {
        if amp == ZERO {
            continue;
        }
        let sign = if (b & zmask).count_ones() % 2 == 1 {
            -ONE
        } else {
            ONE
        };
        out[b ^ xmask] += global * sign * amp;
    }
    out
}

/// `∏ (I + S)/2` over the rows of `t`.
pub fn tableau_projector(t: &StabilizerTableau) -> Result<DenseMatrix> {
    let n = t.num_qubits();
    check_size("qubits", n, MAX_QUBITS)?;
    let mut m = DenseMatrix::identity(1 << n);
    for s in t.rows() {
        for c in 0..m.cols {
            let col = m.column(c).to_vec();
            let moved = apply_pauli(s, &col);
            for (dst, (a, b)) in m.column_mut(c).iter_mut().zip(col.iter().zip(moved)) {
                *dst = (a + b) * 0.5;
            }
        }
    }
    Ok(m)
}

/// Applies a gate to a state vector in place.
pub fn apply_gate(g: &Gate, state: &mut [C]) {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    match *g {
        Gate::H(q) => {
            let bit = 1 << q;
            for b in 0..state.len() {
                if b & bit == 0 {
                    let (a0, a1) = (state[b], state[b | bit]);
                    state[b] = (a0 + a1) * s;
                    state[b | bit] = (a0 - a1) * s;
                }
            }
        }
        Gate::S(q) => {
            for (b, a) in state.iter_mut().enumerate() {
                if b >> q & 1 == 1 {
                    *a *= I;
                }
            }
        }
        Gate::Z(q) => {
            for (b, a) in state.iter_mut().enumerate() {
                if b >> q & 1 == 1 {
                    *a = -*a;
                }
            }
        }
        Gate::X(q) => {
            let bit = 1 << q;
            for b in 0..state.len() {
                if b & bit == 0 {
                    state.swap(b, b | bit);
                }
            }
        }
        Gate::CX(c, t) => {
            let (cb, tb) = (1 << c, 1 << t);
            for b in 0..state.len() {
                if b & cb != 0 && b & tb == 0 {
                    state.swap(b, b | tb);
                }
            }
        }
        Gate::CZ(a, b2) => {
            for (b, amp) in state.iter_mut().enumerate() {
                if b >> a & 1 == 1 && b >> b2 & 1 == 1 {
                    *amp = -*amp;
                }
            }
        }
    }
}

/// Columns are the circuit applied to each input basis state, ancillas at
/// `|0⟩`. Input `j` is bit `j` of the column index.
pub fn circuit_to_isometry(e: &EncoderCircuit) -> Result<DenseIsometry> {
    let n = e.wires();
    check_size("wires", n, MAX_QUBITS)?;
    let m = e.inputs().len();
    let mut cols = Vec::with_capacity(1 << m);
    for x in 0..1usize << m {
        let mut b = 0usize;
        for (j, &w) in e.inputs().iter().enumerate() {
            if x >> j & 1 == 1 {
                b |= 1 << w;
            }
        }
        let mut state = vec![ZERO; 1 << n];
        state[b] = ONE;
        for g in e.circuit().gates() {
            apply_gate(g, &mut state);
        }
        cols.push(state);
    }
    Ok(DenseMatrix::from_columns(1 << n, cols))
}

/// Full unitary of a circuit (for small gate-level checks).
pub fn circuit_unitary(wires: usize, gates: &[Gate]) -> Result<DenseMatrix> {
    check_size("wires", wires, MAX_QUBITS)?;
    let dim = 1 << wires;
    let mut cols = Vec::with_capacity(dim);
    for b in 0..dim {
        let mut state = vec![ZERO; dim];
        state[b] = ONE;
        for g in gates {
            apply_gate(g, &mut state);
        }
        cols.push(state);
    }
    Ok(DenseMatrix::from_columns(dim, cols))
}

/// 2×2 matrix of a local Clifford, multiplied out from its gate word.
pub fn local_clifford_matrix(l: LocalClifford) -> DenseMatrix {
    static TABLE: OnceLock<Vec<(LocalClifford, DenseMatrix)>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let h = circuit_unitary(1, &[Gate::H(0)]).expect("one wire");
        let s = circuit_unitary(1, &[Gate::S(0)]).expect("one wire");
        crate::local_clifford::all()
            .into_iter()
            .map(|c| {
                let mut m = DenseMatrix::identity(2);
                for &g in c.word() {
                    m = if g == 'H' { &h } else { &s }.matmul(&m);
                }
                (c, m)
            })
            .collect()
    });
    table
        .iter()
        .find(|(c, _)| *c == l)
        .expect("all 24 elements are tabulated")
        .1
        .clone()
}

fn apply_single(m: &DenseMatrix, q: usize, state: &mut [C]) {
    let bit = 1 << q;
    for b in 0..state.len() {
        if b & bit == 0 {
            let (a0, a1) = (state[b], state[b | bit]);
            state[b] = m.get(0, 0) * a0 + m.get(0, 1) * a1;
            state[b | bit] = m.get(1, 0) * a0 + m.get(1, 1) * a1;
        }
    }
}

/// `(⊗ locals) · ∏_{edges} CZ · |+…+⟩`.
pub fn graph_state_vector(g: &GraphForm) -> Result<Vec<C>> {
    let m = g.num_vertices();
    check_size("vertices", m, MAX_QUBITS)?;
    let norm = (1.0 / (1u64 << m) as f64).sqrt();
    let mut state = vec![ZERO; 1 << m];
    for (b, amp) in state.iter_mut().enumerate() {
        let mut parity = 0;
        for u in 0..m {
            if b >> u & 1 == 0 {
                continue;
            }
            for v in u + 1..m {
                if b >> v & 1 == 1 && g.has_edge(u, v) {
                    parity ^= 1;
                }
            }
        }
        *amp = C::new(if parity == 1 { -norm } else { norm }, 0.0);
    }
    for v in 0..m {
        apply_single(&local_clifford_matrix(g.local(v)), v, &mut state);
    }
    Ok(state)
}

/// Contracts a diagram: one phased Z-spider per node, a Hadamard matrix on
/// every internal edge, and a final Hadamard on each flagged output edge.
/// Input `j` is bit `j` of the column index, output `o` bit `o` of the row.
pub fn zxcf_to_isometry(d: &ZxcfDiagram) -> Result<DenseIsometry> {
    let n = d.n();
    check_size("outputs", n, MAX_DIAGRAM_OUTPUTS)?;
    let m = d.num_inputs();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut cols = Vec::with_capacity(1 << m);
    for x in 0..1usize << m {
        let mut col = vec![ZERO; 1 << n];
        // every spider carries a single index value: x for inputs, y for outputs
        for (y, amp) in col.iter_mut().enumerate() {
            let mut a = ONE;
            for j in 0..m {
                for o in 0..n {
                    if d.m_edge(j, o) && (x >> j & 1 == 1) && (y >> o & 1 == 1) {
                        a = -a;
                    }
                    if d.m_edge(j, o) {
                        a *= h;
                    }
                }
            }
            for u in 0..n {
                for v in u + 1..n {
                    if d.a_edge(u, v) {
                        if y >> u & 1 == 1 && y >> v & 1 == 1 {
                            a = -a;
                        }
                        a *= h;
                    }
                }
            }
            for o in 0..n {
                if y >> o & 1 == 1 {
                    a *= i_pow(d.phase(o) as usize);
                }
            }
            *amp = a;
        }
        let hm = circuit_unitary(1, &[Gate::H(0)]).expect("one wire");
        for o in 0..n {
            if d.had(o) {
                apply_single(&hm, o, &mut col);
            }
        }
        cols.push(col);
    }
    Ok(DenseMatrix::from_columns(1 << n, cols))
}

fn inner(a: &[C], b: &[C]) -> C {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

fn norm(a: &[C]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// Orthonormal basis of the column span (Gram–Schmidt, applied twice per
/// vector for stability).
pub fn orthonormal_basis(a: &DenseMatrix) -> Vec<Vec<C>> {
    let mut basis: Vec<Vec<C>> = Vec::new();
    for col in a.columns() {
        let mut v = col.to_vec();
        for _ in 0..2 {
            for q in &basis {
                let c = inner(q, &v);
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= c * qi;
                }
            }
        }
        let nv = norm(&v);
        if nv > 1e-7 {
            for vi in v.iter_mut() {
                *vi /= nv;
            }
            basis.push(v);
        }
    }
    basis
}

pub fn rank(a: &DenseMatrix) -> usize {
    orthonormal_basis(a).len()
}

/// Whether two matrices with the same row count have the same column span.
pub fn images_equal(a: &DenseMatrix, b: &DenseMatrix) -> Result<bool> {
    if a.rows != b.rows {
        return Err(Error::LengthMismatch {
            expected: a.rows,
            found: b.rows,
        });
    }
    let qa = orthonormal_basis(a);
    let qb = orthonormal_basis(b);
    if qa.len() != qb.len() {
        return Ok(false);
    }
    let residual = |v: &[C], basis: &[Vec<C>]| {
        let mut r = v.to_vec();
        for q in basis {
            let c = inner(q, &r);
            for (ri, qi) in r.iter_mut().zip(q) {
                *ri -= c * qi;
            }
        }
        norm(&r)
    };
    Ok(qb.iter().all(|v| residual(v, &qa) < TOLERANCE)
        && qa.iter().all(|v| residual(v, &qb) < TOLERANCE))
}

/// Whether two state vectors agree up to a global phase (and scale).
pub fn states_equal_up_to_phase(a: &[C], b: &[C]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let (na, nb) = (norm(a), norm(b));
    if na < TOLERANCE || nb < TOLERANCE {
        return na < TOLERANCE && nb < TOLERANCE;
    }
    (inner(a, b).norm() - na * nb).abs() < TOLERANCE * na * nb.max(1.0)
}

/// Whether `v† v` is proportional to the identity.
pub fn is_isometry_up_to_scale(v: &DenseMatrix) -> bool {
    if v.cols == 0 {
        return true;
    }
    let scale = inner(v.column(0), v.column(0)).re;
    if scale < TOLERANCE {
        return false;
    }
    for i in 0..v.cols {
        for j in 0..v.cols {
            let g = inner(v.column(i), v.column(j));
            let want = if i == j { scale } else { 0.0 };
            if (g - C::new(want, 0.0)).norm() > TOLERANCE * scale.max(1.0) {
                return false;
            }
        }
    }
    true
}
