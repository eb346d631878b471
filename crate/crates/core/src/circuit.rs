//! Clifford circuits, Heisenberg-picture conjugation of Pauli strings,
//! encoder synthesis from a tableau, and the Choi tableau of an encoder.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pauli::{Letter, PauliString};
use crate::tableau::StabilizerTableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    H(usize),
    S(usize),
    X(usize),
    Z(usize),
    CX(usize, usize),
    CZ(usize, usize),
}

impl Gate {
    fn check(&self, wires: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCircuit(msg));
        match *self {
            Gate::H(q) | Gate::S(q) | Gate::X(q) | Gate::Z(q) if q >= wires => {
                bad(format!("{self} out of range for {wires} wires"))
            }
            Gate::CX(a, b) | Gate::CZ(a, b) if a >= wires || b >= wires => {
                bad(format!("{self} out of range for {wires} wires"))
            }
            Gate::CX(a, b) | Gate::CZ(a, b) if a == b => {
                bad(format!("{self} acts twice on one wire"))
            }
            _ => Ok(()),
        }
    }

    /// In-place conjugation `p ← G p G†`.
    pub fn conjugate(&self, p: &mut PauliString) {
        let (x, z, phase) = p.parts_mut();
        let flip = match *self {
            Gate::H(q) => {
                let (xq, zq) = (x.get(q), z.get(q));
                x.set(q, zq);
                z.set(q, xq);
                xq && zq
            }
            Gate::S(q) => {
                let (xq, zq) = (x.get(q), z.get(q));
                z.set(q, zq ^ xq);
                xq && zq
            }
            Gate::X(q) => z.get(q),
            Gate::Z(q) => x.get(q),
            Gate::CX(c, t) => {
                let (xc, zc, xt, zt) = (x.get(c), z.get(c), x.get(t), z.get(t));
                x.set(t, xt ^ xc);
                z.set(c, zc ^ zt);
                xc && zt && !(xt ^ zc)
            }
            Gate::CZ(a, b) => {
                let (xa, za, xb, zb) = (x.get(a), z.get(a), x.get(b), z.get(b));
                z.set(a, za ^ xb);
                z.set(b, zb ^ xa);
                xa && xb && (za ^ zb)
            }
        };
        if flip {
            *phase = (*phase + 2) % 4;
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::H(q) => write!(f, "H {q}"),
            Gate::S(q) => write!(f, "S {q}"),
            Gate::X(q) => write!(f, "X {q}"),
            Gate::Z(q) => write!(f, "Z {q}"),
            Gate::CX(a, b) => write!(f, "CX {a} {b}"),
            Gate::CZ(a, b) => write!(f, "CZ {a} {b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliffordCircuit {
    wires: usize,
    gates: Vec<Gate>,
}

impl CliffordCircuit {
    pub fn new(wires: usize) -> Self {
        CliffordCircuit {
            wires,
            gates: Vec::new(),
        }
    }

    pub fn from_gates(wires: usize, gates: Vec<Gate>) -> Result<Self> {
        let mut c = CliffordCircuit::new(wires);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.check(self.wires)?;
        self.gates.push(gate);
        Ok(())
    }

    #[inline]
    pub fn wires(&self) -> usize {
        self.wires
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Appends all gates of `other` (same width) after those of `self`.
    pub fn extend(&mut self, other: &CliffordCircuit) {
        assert_eq!(self.wires, other.wires);
        self.gates.extend_from_slice(&other.gates);
    }

    /// The inverse circuit. `S†` is emitted as `S` followed by `Z`.
    pub fn inverse(&self) -> CliffordCircuit {
        let mut gates = Vec::with_capacity(self.gates.len());
        for g in self.gates.iter().rev() {
            match *g {
                Gate::S(q) => {
                    gates.push(Gate::S(q));
                    gates.push(Gate::Z(q));
                }
                other => gates.push(other),
            }
        }
        CliffordCircuit {
            wires: self.wires,
            gates,
        }
    }

    /// `U p U†` where `U` applies the gates in order.
    pub fn conjugate(&self, p: &PauliString) -> Result<PauliString> {
        if p.num_qubits() != self.wires {
            return Err(Error::LengthMismatch {
                expected: self.wires,
                found: p.num_qubits(),
            });
        }
        let mut out = p.clone();
        for g in &self.gates {
            g.conjugate(&mut out);
        }
        Ok(out)
    }
}

/// Free-function form of [`CliffordCircuit::conjugate`].
pub fn conjugate(c: &CliffordCircuit, p: &PauliString) -> Result<PauliString> {
    c.conjugate(p)
}

/// A Clifford isometry: the circuit acts on `inputs` (in order) together
/// with every other wire prepared in `|0⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EncoderCircuit {
    circuit: CliffordCircuit,
    inputs: Vec<usize>,
}

impl EncoderCircuit {
    pub fn new(circuit: CliffordCircuit, inputs: Vec<usize>) -> Result<Self> {
        let e = EncoderCircuit { circuit, inputs };
        e.check()?;
        Ok(e)
    }

    pub fn identity(wires: usize) -> Self {
        EncoderCircuit {
            circuit: CliffordCircuit::new(wires),
            inputs: (0..wires).collect(),
        }
    }

    fn check(&self) -> Result<()> {
        let n = self.circuit.wires;
        let mut seen = vec![false; n];
        for &w in &self.inputs {
            if w >= n {
                return Err(Error::MalformedEncoder(format!(
                    "input wire {w} out of range for {n} wires"
                )));
            }
            if std::mem::replace(&mut seen[w], true) {
                return Err(Error::MalformedEncoder(format!("input wire {w} listed twice")));
            }
        }
        for g in &self.circuit.gates {
            g.check(n)
                .map_err(|e| Error::MalformedEncoder(e.to_string()))?;
        }
        Ok(())
    }

    pub fn circuit(&self) -> &CliffordCircuit {
        &self.circuit
    }

    pub fn inputs(&self) -> &[usize] {
        &self.inputs
    }

    pub fn wires(&self) -> usize {
        self.circuit.wires
    }

    /// Wires that start in `|0⟩`, in increasing order.
    pub fn ancillas(&self) -> Vec<usize> {
        let mut is_input = vec![false; self.wires()];
        for &w in &self.inputs {
            is_input[w] = true;
        }
        (0..self.wires()).filter(|&w| !is_input[w]).collect()
    }

    /// Number of stabilizers of the code space, `n − #inputs`.
    pub fn num_stabilizers(&self) -> usize {
        self.wires() - self.inputs.len()
    }

    /// Stabilizer tableau of the image: each ancilla's `Z` pushed forward
    /// through the circuit.
    pub fn stabilizers(&self) -> StabilizerTableau {
        let n = self.wires();
        let rows = self
            .ancillas()
            .into_iter()
            .map(|a| {
                self.circuit
                    .conjugate(&PauliString::single(n, a, Letter::Z))
                    .expect("widths match")
            })
            .collect();
        StabilizerTableau::new(n, rows).expect("widths match")
    }
}

/// Clifford circuit `U` with `U p U† = +Z` on `target`.
///
/// Each letter is first rotated to `Z` with single-qubit gates, then a CX
/// fan-in collects the parity onto `target` and a final `X` fixes the sign.
pub fn reduce_to_z(p: &PauliString, target: usize) -> Result<CliffordCircuit> {
    let n = p.num_qubits();
    if target >= n {
        return Err(Error::InvalidCircuit(format!(
            "target {target} out of range for {n} qubits"
        )));
    }
    if p.is_identity() {
        return Err(Error::IdentityReduction);
    }
    if !p.is_hermitian() {
        return Err(Error::Invalid(format!("{p} is not Hermitian")));
    }
    let mut c = CliffordCircuit::new(n);
    let mut support = Vec::new();
    for q in 0..n {
        match p.letter(q) {
            Letter::I => continue,
            Letter::X => c.gates.push(Gate::H(q)),
            Letter::Y => {
                c.gates.push(Gate::S(q));
                c.gates.push(Gate::H(q));
            }
            Letter::Z => {}
        }
        support.push(q);
    }
    if !support.contains(&target) {
        c.gates.push(Gate::CX(target, support[0]));
    }
    for &q in &support {
        if q != target {
            c.gates.push(Gate::CX(q, target));
        }
    }
    if c.conjugate(p)?.is_negative() {
        c.gates.push(Gate::X(target));
    }
    debug_assert_eq!(
        c.conjugate(p)?,
        PauliString::single(n, target, Letter::Z)
    );
    Ok(c)
}

/// [`reduce_to_z`] onto qubit 0.
pub fn reduce_to_z1(p: &PauliString) -> Result<CliffordCircuit> {
    reduce_to_z(p, 0)
}

/// Builds an encoder whose image is the code space of `t`.
///
/// Works from the outputs backwards: rotate the first remaining row onto `Z`
/// of the first live wire, clear that wire from the other rows, and retire
/// the wire as a `|0⟩` ancilla. The wires left over are the inputs.
pub fn synthesize_encoder(t: &StabilizerTableau) -> Result<EncoderCircuit> {
    t.validate()
        .map_err(|v| Error::InvalidTableau(v.to_string()))?;
    let n = t.num_qubits();
    let k = t.num_rows();
    let mut rows = t.rows().to_vec();
    let mut live = vec![true; n];
    let mut steps = Vec::with_capacity(k);
    for i in 0..k {
        let target = live
            .iter()
            .position(|&l| l)
            .expect("k ≤ n leaves a live wire");
        let u = reduce_to_z(&rows[i], target)?;
        for row in rows[i..].iter_mut() {
            for g in u.gates() {
                g.conjugate(row);
            }
        }
        let (head, tail) = rows.split_at_mut(i + 1);
        let pivot = &head[i];
        for row in tail.iter_mut() {
            debug_assert!(!row.x().get(target));
            if row.z().get(target) {
                row.mul_assign_right(pivot);
            }
        }
        live[target] = false;
        steps.push(u);
    }
    let mut circuit = CliffordCircuit::new(n);
    for u in steps.iter().rev() {
        circuit.extend(&u.inverse());
    }
    let inputs = (0..n).filter(|&w| live[w]).collect();
    EncoderCircuit::new(circuit, inputs)
}

/// Stabilizer tableau of the Choi state of `e` on `2n − k` qubits: the
/// `n − k` bent input legs first (in input order), then the `n` outputs.
///
/// Input-leg Paulis are transposed when bent: `X` and `Z` keep their sign,
/// `Y` would flip it, and only `X`/`Z` generators are used here.
pub fn choi_tableau(e: &EncoderCircuit) -> Result<StabilizerTableau> {
    e.check()?;
    let n = e.wires();
    let m = e.inputs().len();
    let mut rows = Vec::with_capacity(n + m);
    for (j, &w) in e.inputs().iter().enumerate() {
        for letter in [Letter::Z, Letter::X] {
            let leg = PauliString::single(m, j, letter);
            let image = e.circuit().conjugate(&PauliString::single(n, w, letter))?;
            rows.push(leg.tensor(&image));
        }
    }
    for a in e.ancillas() {
        let image = e.circuit().conjugate(&PauliString::single(n, a, Letter::Z))?;
        rows.push(PauliString::identity(m).tensor(&image));
    }
    StabilizerTableau::new(n + m, rows)
}

/// Parses the circuit text format:
///
/// ```text
/// wires=3
/// inputs=0,2
/// H 0
/// CX 0 1
/// ```
///
/// Indices are 0-based; `#` starts a comment. A missing `inputs=` line
/// means every wire is an input.
pub fn parse_circuit(text: &str) -> Result<EncoderCircuit> {
    let mut wires = None;
    let mut inputs: Option<Vec<usize>> = None;
    let mut gates = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse(format!("line {}: {msg}: {line:?}", lineno + 1));
        if let Some(v) = line.strip_prefix("wires=") {
            wires = Some(v.trim().parse::<usize>().map_err(|_| err("bad wire count"))?);
            continue;
        }
        if let Some(v) = line.strip_prefix("inputs=") {
            let v = v.trim();
            inputs = Some(if v.is_empty() {
                Vec::new()
            } else {
                v.split(',')
                    .map(|s| s.trim().parse::<usize>().map_err(|_| err("bad input list")))
                    .collect::<Result<_>>()?
            });
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let idx = |i: usize| -> Result<usize> {
            toks.get(i)
                .ok_or_else(|| err("missing wire index"))?
                .parse::<usize>()
                .map_err(|_| err("bad wire index"))
        };
        let arity = match toks[0].to_ascii_uppercase().as_str() {
            "H" | "S" | "X" | "Z" => 1,
            "CX" | "CNOT" | "CZ" => 2,
            _ => return Err(err("unknown gate")),
        };
        if toks.len() != arity + 1 {
            return Err(err("wrong number of operands"));
        }
        gates.push(match toks[0].to_ascii_uppercase().as_str() {
            "H" => Gate::H(idx(1)?),
            "S" => Gate::S(idx(1)?),
            "X" => Gate::X(idx(1)?),
            "Z" => Gate::Z(idx(1)?),
            "CX" | "CNOT" => Gate::CX(idx(1)?, idx(2)?),
            _ => Gate::CZ(idx(1)?, idx(2)?),
        });
    }
    let wires = wires.ok_or_else(|| Error::Parse("missing `wires=<n>` header".into()))?;
    let circuit = CliffordCircuit::from_gates(wires, gates)?;
    let inputs = inputs.unwrap_or_else(|| (0..wires).collect());
    EncoderCircuit::new(circuit, inputs)
}

pub fn format_circuit(e: &EncoderCircuit) -> String {
    let inputs: Vec<String> = e.inputs.iter().map(|w| w.to_string()).collect();
    let mut s = format!("wires={}\ninputs={}\n", e.wires(), inputs.join(","));
    for g in e.circuit.gates() {
        s.push_str(&g.to_string());
        s.push('\n');
    }
    s
}

impl FromStr for EncoderCircuit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_circuit(s)
    }
}

impl fmt::Display for EncoderCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_circuit(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::parse_pauli;
    use crate::tableau::groups_equal;

    fn p(s: &str) -> PauliString {
        parse_pauli(s).unwrap()
    }

    #[test]
    fn generator_actions() {
        let h = CliffordCircuit::from_gates(1, vec![Gate::H(0)]).unwrap();
        assert_eq!(h.conjugate(&p("X")).unwrap(), p("Z"));
        assert_eq!(h.conjugate(&p("Y")).unwrap(), p("-Y"));
        let s = CliffordCircuit::from_gates(1, vec![Gate::S(0)]).unwrap();
        assert_eq!(s.conjugate(&p("X")).unwrap(), p("Y"));
        assert_eq!(s.conjugate(&p("Y")).unwrap(), p("-X"));
        let cx = CliffordCircuit::from_gates(2, vec![Gate::CX(0, 1)]).unwrap();
        assert_eq!(cx.conjugate(&p("IZ")).unwrap(), p("ZZ"));
        assert_eq!(cx.conjugate(&p("XI")).unwrap(), p("XX"));
        let cz = CliffordCircuit::from_gates(2, vec![Gate::CZ(0, 1)]).unwrap();
        assert_eq!(cz.conjugate(&p("XI")).unwrap(), p("XZ"));
        assert_eq!(cz.conjugate(&p("XY")).unwrap(), p("-YX"));
    }

    #[test]
    fn empty_circuit_is_identity() {
        let c = CliffordCircuit::new(3);
        assert_eq!(c.conjugate(&p("-XYZ")).unwrap(), p("-XYZ"));
        assert!(c.conjugate(&p("XY")).is_err());
    }

    #[test]
    fn inverse_undoes_conjugation() {
        let c = CliffordCircuit::from_gates(
            3,
            vec![Gate::S(0), Gate::CX(0, 2), Gate::H(1), Gate::CZ(1, 2), Gate::S(2)],
        )
        .unwrap();
        for s in ["XII", "IYZ", "-ZZX", "YYY"] {
            let fwd = c.conjugate(&p(s)).unwrap();
            assert_eq!(c.inverse().conjugate(&fwd).unwrap(), p(s));
        }
    }

    #[test]
    fn bad_gates_are_rejected() {
        let mut c = CliffordCircuit::new(2);
        assert!(c.push(Gate::H(2)).is_err());
        assert!(c.push(Gate::CX(1, 1)).is_err());
        assert!(c.push(Gate::CZ(0, 5)).is_err());
    }

    #[test]
    fn reduce_examples() {
        assert!(reduce_to_z1(&p("ZI")).unwrap().is_empty());
        assert_eq!(reduce_to_z1(&p("XI")).unwrap().gates(), &[Gate::H(0)]);
        for s in ["ZZ", "IX", "-YXZ", "IIY", "-ZIZ", "XYZIY"] {
            let c = reduce_to_z1(&p(s)).unwrap();
            let n = s.trim_start_matches('-').len();
            assert_eq!(
                c.conjugate(&p(s)).unwrap(),
                PauliString::single(n, 0, Letter::Z),
                "{s}"
            );
        }
        assert!(matches!(
            reduce_to_z1(&p("-II")),
            Err(Error::IdentityReduction)
        ));
    }

    #[test]
    fn synthesize_single_qubit() {
        let t = StabilizerTableau::from_strs(&["Z"]).unwrap();
        let e = synthesize_encoder(&t).unwrap();
        assert!(e.inputs().is_empty());
        assert!(e.circuit().is_empty());

        let t = StabilizerTableau::from_strs(&["-Z"]).unwrap();
        let e = synthesize_encoder(&t).unwrap();
        assert_eq!(e.circuit().gates(), &[Gate::X(0)]);
    }

    #[test]
    fn synthesized_stabilizers_match_tableau() {
        for rows in [
            vec!["XX", "ZZ"],
            vec!["ZZI", "IZZ"],
            vec!["-XZY", "ZIX"],
            vec!["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"],
        ] {
            let t = StabilizerTableau::from_strs(&rows).unwrap();
            let e = synthesize_encoder(&t).unwrap();
            assert_eq!(e.inputs().len(), t.num_qubits() - t.num_rows());
            assert!(groups_equal(&e.stabilizers(), &t).unwrap(), "{rows:?}");
        }
    }

    #[test]
    fn choi_of_identity_is_bell_pair() {
        let e = EncoderCircuit::identity(1);
        let c = choi_tableau(&e).unwrap();
        let bell = StabilizerTableau::from_strs(&["XX", "ZZ"]).unwrap();
        assert!(groups_equal(&c, &bell).unwrap());
    }

    #[test]
    fn choi_of_repetition_encoder_is_ghz() {
        let t = StabilizerTableau::from_strs(&["ZZ"]).unwrap();
        let e = synthesize_encoder(&t).unwrap();
        let c = choi_tableau(&e).unwrap();
        assert!(c.is_valid());
        let ghz = StabilizerTableau::from_strs(&["XXX", "ZZI", "ZIZ"]).unwrap();
        assert!(groups_equal(&c, &ghz).unwrap());
    }

    #[test]
    fn choi_of_state_is_its_tableau() {
        let t = StabilizerTableau::from_strs(&["XZ", "ZX"]).unwrap();
        let e = synthesize_encoder(&t).unwrap();
        let c = choi_tableau(&e).unwrap();
        assert!(groups_equal(&c, &t).unwrap());
    }

    #[test]
    fn circuit_text_roundtrip() {
        let text = "wires=3\ninputs=0,2\nH 0\nCX 0 1\nS 2\nCZ 1 2\n";
        let e = parse_circuit(text).unwrap();
        assert_eq!(e.ancillas(), vec![1]);
        assert_eq!(format_circuit(&e), text);
        assert!(parse_circuit("H 0\n").is_err());
        assert!(parse_circuit("wires=2\nCX 0\n").is_err());
        assert!(parse_circuit("wires=2\nFOO 0\n").is_err());
        assert!(parse_circuit("wires=2\ninputs=0,0\n").is_err());
        assert!(parse_circuit("wires=2\nH 3\n").is_err());
        let none = parse_circuit("wires=2\ninputs=\n").unwrap();
        assert!(none.inputs().is_empty());
    }
}
