//! Encoder → canonical diagram, and back.

use crate::circuit::{choi_tableau, synthesize_encoder, EncoderCircuit};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::graphform::GraphForm;
use crate::local_clifford::LocalClifford;
use crate::pauli::PauliString;
use crate::tableau::StabilizerTableau;

use super::ZxcfDiagram;

/// Canonical diagram of the code space of `t`.
pub fn canonicalize(t: &StabilizerTableau) -> Result<ZxcfDiagram> {
    t.validate()
        .map_err(|v| Error::InvalidTableau(v.to_string()))?;
    canonicalize_encoder(&synthesize_encoder(t)?)
}

/// Canonical diagram of an encoder circuit.
///
/// 1. Take the stabilizer tableau of the Choi state, input legs first.
/// 2. Convert it to a decorated graph state obeying the Hadamard rule.
/// 3. Drop the decorations of input vertices and the edges between inputs;
///    both are unitaries on the input side.
/// 4. Bring the input/output block to reduced row-echelon form. Adding one
///    input's output neighborhood to another's is a `CNOT` between inputs.
/// 5. Clear the phase of each pivot by local complementation at its input.
/// 6. Remove each edge between two pivots with a pivot on their inputs.
pub fn canonicalize_encoder(e: &EncoderCircuit) -> Result<ZxcfDiagram> {
    let choi = choi_tableau(e)?;
    let mut g = GraphForm::from_tableau(&choi)?;
    let inputs = e.inputs().len();
    g.set_num_inputs(inputs);
    let mut d = read_off(&g, e.wires())?;

    let pivots = d.m_mut().rref();
    if pivots.len() != inputs {
        return Err(Error::MalformedEncoder(format!(
            "input/output block has rank {} with {inputs} inputs",
            pivots.len()
        )));
    }

    for (j, &p) in pivots.iter().enumerate() {
        while d.phase(p) != 0 {
            local_complement_input(&mut d, j);
        }
    }
    debug_assert!(pivots.iter().all(|&p| d.phase(p) == 0));

    while let Some((j1, j2)) = pivot_pivot_edge(&d, &pivots) {
        #[cfg(debug_assertions)]
        let before = (d.m().clone(), pivot_edge_count(&d, &pivots));
        phi_inputs(&mut d, j1, j2);
        #[cfg(debug_assertions)]
        {
            debug_assert_eq!(&before.0, d.m());
            debug_assert_eq!(before.1, pivot_edge_count(&d, &pivots) + 1);
            debug_assert!(d.phase(pivots[j1]) == 0 && d.phase(pivots[j2]) == 0);
        }
    }

    debug_assert!(d.is_valid(), "{:?}", d.validate());
    Ok(d)
}

/// Step 3: outputs are vertices `inputs..`; input decorations and
/// input/input edges are discarded.
fn read_off(g: &GraphForm, n: usize) -> Result<ZxcfDiagram> {
    let inputs = g.num_inputs();
    let mut m = BitMatrix::zeros(inputs, n);
    for j in 0..inputs {
        for v in g.neighborhood(j).ones().filter(|&v| v >= inputs) {
            m.set(j, v - inputs, true);
        }
    }
    let mut a = BitMatrix::zeros(n, n);
    let mut phase = Vec::with_capacity(n);
    let mut had = Vec::with_capacity(n);
    for o in 0..n {
        let v = inputs + o;
        for u in g.neighborhood(v).ones().filter(|&u| u >= inputs) {
            a.set(o, u - inputs, true);
        }
        let (h, q) = g.local(v).to_zx().ok_or_else(|| {
            Error::InvalidDiagram(format!("output {o} has a non-canonical decoration"))
        })?;
        had.push(h);
        phase.push(q);
    }
    ZxcfDiagram::new(n, n - inputs, m, a, phase, had)
}

/// Local complementation at input `j`, followed by dropping the input's
/// new decoration: edges inside the input's output neighborhood toggle and
/// each of those outputs gains a quarter turn. `m` is unchanged.
fn local_complement_input(d: &mut ZxcfDiagram, j: usize) {
    let row = d.m().row(j).clone();
    let a = d.a_mut();
    for o in row.ones() {
        let r = a.row_mut(o);
        r.xor_assign(&row);
        r.flip(o);
    }
    for o in row.ones() {
        debug_assert!(!d.had(o), "outputs next to an input carry no Hadamard");
        d.set_phase(o, d.phase(o) + 1);
    }
}

fn pivot_pivot_edge(d: &ZxcfDiagram, pivots: &[usize]) -> Option<(usize, usize)> {
    for (i, &p) in pivots.iter().enumerate() {
        for (j, &q) in pivots.iter().enumerate().skip(i + 1) {
            if d.a_edge(p, q) {
                return Some((i, j));
            }
        }
    }
    None
}

#[cfg(debug_assertions)]
fn pivot_edge_count(d: &ZxcfDiagram, pivots: &[usize]) -> usize {
    let mut c = 0;
    for (i, &p) in pivots.iter().enumerate() {
        for &q in &pivots[i + 1..] {
            c += d.a_edge(p, q) as usize;
        }
    }
    c
}

/// Step 6 for the inputs of two adjacent pivots. Joining the inputs with a
/// `CZ`, pivoting on that edge, dropping the input decorations and swapping
/// the two rows of `m` back amounts to: with `r₁, r₂` the rows of the two
/// inputs, toggle every pair between the classes `r₁∩r₂`, `r₁∖r₂`, `r₂∖r₁`
/// and add a half turn to every output of `r₁∩r₂`.
pub(crate) fn phi_inputs(d: &mut ZxcfDiagram, j1: usize, j2: usize) {
    let r1 = d.m().row(j1).clone();
    let r2 = d.m().row(j2).clone();
    let both = r1.and(&r2);
    let mut only1 = r1.clone();
    only1.xor_assign(&both);
    let mut only2 = r2.clone();
    only2.xor_assign(&both);
    let classes = [&both, &only1, &only2];
    let others = |i: usize| {
        let mut o = BitVec::zeros(r1.len());
        for (c, class) in classes.iter().enumerate() {
            if c != i {
                o.xor_assign(class);
            }
        }
        o
    };
    let toggles: Vec<BitVec> = (0..3).map(others).collect();
    let a = d.a_mut();
    for (i, class) in classes.iter().enumerate() {
        for o in class.ones() {
            a.row_mut(o).xor_assign(&toggles[i]);
        }
    }
    for o in both.ones() {
        d.set_phase(o, d.phase(o) + 2);
    }
}

/// The Choi state of a diagram as a decorated graph: inputs first and
/// undecorated, then the outputs with `H^had · S^phase`.
pub fn choi_graph(d: &ZxcfDiagram) -> GraphForm {
    let (inputs, n) = (d.num_inputs(), d.n());
    let mut g = GraphForm::new(inputs + n);
    g.set_num_inputs(inputs);
    for j in 0..inputs {
        for o in d.m().row(j).ones() {
            g.set_edge(j, inputs + o, true);
        }
    }
    for (u, v) in d.a_edges() {
        g.set_edge(inputs + u, inputs + v, true);
    }
    for o in 0..n {
        g.set_local(inputs + o, LocalClifford::from_zx(d.had(o), d.phase(o)));
    }
    g
}

/// The stabilizer tableau of the code space encoded by `d`: the elements of
/// the Choi state's group that act trivially on every input leg.
pub fn decompile(d: &ZxcfDiagram) -> Result<StabilizerTableau> {
    if let Err(v) = d.validate() {
        let msgs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        return Err(Error::InvalidDiagram(msgs.join("; ")));
    }
    let inputs = d.num_inputs();
    let g = choi_graph(d);
    let mut rows: Vec<PauliString> = g.stabilizers().into_rows();
    let mut used = vec![false; rows.len()];
    for j in 0..inputs {
        for part in 0..2 {
            let bit = |p: &PauliString| if part == 0 { p.x().get(j) } else { p.z().get(j) };
            let Some(r) = (0..rows.len()).find(|&r| !used[r] && bit(&rows[r])) else {
                continue;
            };
            used[r] = true;
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && bit(row) {
                    row.mul_assign_right(&pivot);
                }
            }
        }
    }
    let outputs: Vec<usize> = (inputs..inputs + d.n()).collect();
    let kept: Vec<PauliString> = rows
        .iter()
        .zip(&used)
        .filter(|(_, &u)| !u)
        .map(|(r, _)| r.restrict(&outputs))
        .collect();
    if kept.len() != d.k() {
        return Err(Error::InvalidDiagram(format!(
            "found {} stabilizers, expected {}",
            kept.len(),
            d.k()
        )));
    }
    StabilizerTableau::from_rows(d.n(), kept)
}

/// Drops every phase and output Hadamard, leaving the bare semi-bipartite
/// graph.
pub fn strip_locals(d: &ZxcfDiagram) -> Result<ZxcfDiagram> {
    if let Err(v) = d.validate() {
        let msgs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        return Err(Error::InvalidDiagram(msgs.join("; ")));
    }
    let mut out = d.clone();
    for o in 0..d.n() {
        out.set_phase(o, 0);
        out.set_had(o, false);
    }
    Ok(out)
}
