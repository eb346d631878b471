//! Decorated graph states: `(⊗ L_v) · ∏_{(u,v) ∈ E} CZ_{uv} · |+…+⟩`.
//!
//! This is the working representation of the compiler. A state tableau is
//! converted into one, rewritten with local complementations and pivots
//! until the vertex decorations obey the canonical-form restrictions, and
//! then read off as a diagram. Global phases are ignored throughout.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::local_clifford::{LocalClifford, SignedPauli};
use crate::pauli::{Letter, PauliString};
use crate::tableau::StabilizerTableau;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GraphForm {
    adj: BitMatrix,
    locals: Vec<LocalClifford>,
    /// The lowest `num_inputs` vertices are bent input legs.
    num_inputs: usize,
}

/// `H·S†·H`, a square root of `X`. Local complementation at `v` multiplies
/// `L_v` by this on the right.
fn sqrt_x() -> LocalClifford {
    LocalClifford::H
        .compose(LocalClifford::S_DAG)
        .compose(LocalClifford::H)
}

impl GraphForm {
    /// The edgeless graph on `m` vertices with identity decorations, i.e.
    /// `|+⟩^⊗m`.
    pub fn new(m: usize) -> Self {
        GraphForm {
            adj: BitMatrix::zeros(m, m),
            locals: vec![LocalClifford::I; m],
            num_inputs: 0,
        }
    }

    pub fn from_parts(adj: BitMatrix, locals: Vec<LocalClifford>, num_inputs: usize) -> Result<Self> {
        let m = locals.len();
        if adj.num_rows() != m || adj.num_cols() != m {
            return Err(Error::Invalid(format!(
                "adjacency is {}x{}, expected {m}x{m}",
                adj.num_rows(),
                adj.num_cols()
            )));
        }
        if !adj.is_symmetric() {
            return Err(Error::Invalid("adjacency is not symmetric".into()));
        }
        if let Some(v) = (0..m).find(|&v| adj.get(v, v)) {
            return Err(Error::Invalid(format!("self-loop on vertex {v}")));
        }
        if num_inputs > m {
            return Err(Error::Invalid(format!(
                "{num_inputs} inputs on {m} vertices"
            )));
        }
        Ok(GraphForm {
            adj,
            locals,
            num_inputs,
        })
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.locals.len()
    }

    #[inline]
    pub fn num_inputs(&self) -> usize {
        self.num_inputs
    }

    pub fn set_num_inputs(&mut self, m: usize) {
        assert!(m <= self.num_vertices());
        self.num_inputs = m;
    }

    pub fn is_input(&self, v: usize) -> bool {
        v < self.num_inputs
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    pub fn neighborhood(&self, v: usize) -> &BitVec {
        self.adj.row(v)
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.adj.row(v).ones().collect()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.rows().iter().map(|r| r.count_ones()).sum::<usize>() / 2
    }

    #[inline]
    pub fn local(&self, v: usize) -> LocalClifford {
        self.locals[v]
    }

    pub fn locals(&self) -> &[LocalClifford] {
        &self.locals
    }

    pub fn set_local(&mut self, v: usize, l: LocalClifford) {
        self.locals[v] = l;
    }

    /// `L_v ← L_v · c`, i.e. `c` acts before the existing decoration.
    pub fn right_multiply_local(&mut self, v: usize, c: LocalClifford) {
        self.locals[v] = self.locals[v].compose(c);
    }

    /// Toggles the `CZ` between `u` and `v`. A self-pair `(v, v)` is a `Z`
    /// on `v`.
    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        if u == v {
            self.right_multiply_local(v, LocalClifford::Z);
        } else {
            self.adj.row_mut(u).flip(v);
            self.adj.row_mut(v).flip(u);
        }
    }

    pub fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        assert_ne!(u, v, "no self-loops");
        self.adj.set(u, v, on);
        self.adj.set(v, u, on);
    }

    /// Stabilizer generators `L · X_v Z_{N(v)} · L†`, one per vertex.
    pub fn stabilizers(&self) -> StabilizerTableau {
        let m = self.num_vertices();
        let rows = (0..m)
            .map(|v| {
                let mut p = PauliString::identity(m);
                let mut negative = false;
                let mut put = |q: usize, base: SignedPauli| {
                    let img = self.locals[q].apply(base);
                    p.set_letter(q, Letter::from_bits(img.x, img.z));
                    negative ^= img.negative;
                };
                put(v, SignedPauli::X);
                for u in self.adj.row(v).ones() {
                    put(u, SignedPauli::Z);
                }
                if negative {
                    p.negate();
                }
                p
            })
            .collect();
        StabilizerTableau::new(m, rows).expect("rows have width m")
    }

    /// Converts a full-rank tableau into a decorated graph state whose
    /// decorations are among the six canonical ones and whose
    /// Hadamard-decorated vertices only have higher-numbered neighbors.
    ///
    /// The `X` block is row reduced scanning qubits from the highest index
    /// down; qubits without an `X` pivot get a Hadamard.
    pub fn from_tableau(t: &StabilizerTableau) -> Result<GraphForm> {
        let mut g = GraphForm::from_tableau_raw(t)?;
        g.enforce_hadamard_rule()?;
        Ok(g)
    }

    fn from_tableau_raw(t: &StabilizerTableau) -> Result<GraphForm> {
        let n = t.num_qubits();
        if t.num_rows() != n {
            return Err(Error::InvalidTableau(format!(
                "a state needs {n} rows, found {}",
                t.num_rows()
            )));
        }
        t.validate()
            .map_err(|v| Error::InvalidTableau(v.to_string()))?;
        let mut rows = t.rows().to_vec();

        let eliminate = |rows: &mut Vec<PauliString>, r: usize, c: usize| {
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.x().get(c) {
                    row.mul_assign_right(&pivot);
                }
            }
        };

        let mut had = vec![true; n];
        let mut r = 0;
        for c in (0..n).rev() {
            let Some(p) = (r..n).find(|&i| rows[i].x().get(c)) else {
                continue;
            };
            rows.swap(r, p);
            eliminate(&mut rows, r, c);
            had[c] = false;
            r += 1;
        }

        // Conjugate by H on the qubits without an X pivot.
        for row in rows.iter_mut() {
            for q in (0..n).filter(|&q| had[q]) {
                match row.letter(q) {
                    Letter::X => row.set_letter(q, Letter::Z),
                    Letter::Z => row.set_letter(q, Letter::X),
                    Letter::Y => row.negate(),
                    Letter::I => {}
                }
            }
        }

        // Now the X block is invertible: reduce it to the identity.
        for c in 0..n {
            let p = (c..n)
                .find(|&i| rows[i].x().get(c))
                .expect("X block of a full-rank tableau after Hadamards is invertible");
            rows.swap(c, p);
            eliminate(&mut rows, c, c);
        }

        let mut adj = BitMatrix::zeros(n, n);
        let mut locals = Vec::with_capacity(n);
        for (v, row) in rows.iter().enumerate() {
            for u in row.z().ones() {
                if u != v {
                    adj.set(v, u, true);
                }
            }
            let q = row.z().get(v) as u8 + 2 * row.is_negative() as u8;
            locals.push(LocalClifford::from_zx(had[v], q));
        }
        debug_assert!(adj.is_symmetric());
        Ok(GraphForm {
            adj,
            locals,
            num_inputs: 0,
        })
    }

    /// Moves a Pauli `X` off vertex `v`: `L_v ← L_v·X` and every neighbor
    /// gets `Z`. Uses `X_v · CZ|+⟩ = Z_{N(v)} · CZ|+⟩`.
    pub fn push_x(&mut self, v: usize) {
        self.right_multiply_local(v, LocalClifford::X);
        for u in self.neighbors(v) {
            self.right_multiply_local(u, LocalClifford::Z);
        }
    }

    /// Removes Pauli `X` factors that keep a decoration outside the six
    /// canonical ones. `Z` factors need no work: they are phases.
    pub fn push_paulis(&mut self) {
        for v in 0..self.num_vertices() {
            let l = self.locals[v];
            if !l.is_legal() && l.compose(LocalClifford::X).is_legal() {
                self.push_x(v);
            }
        }
    }

    /// Local complementation at `v`: toggles every edge inside `N(v)`,
    /// `L_v ← L_v·(H S† H)` and `L_u ← L_u·S` for `u ∈ N(v)`.
    pub fn local_complement(&mut self, v: usize) {
        let nb = self.adj.row(v).clone();
        for a in nb.ones() {
            let row = self.adj.row_mut(a);
            row.xor_assign(&nb);
            row.flip(a);
        }
        self.right_multiply_local(v, sqrt_x());
        for a in nb.ones() {
            self.right_multiply_local(a, LocalClifford::S);
        }
    }

    /// The pivot on an edge `(u, v)`: toggles every pair of the closed
    /// neighborhoods `N̄(u) × N̄(v)` (pairs met twice cancel), which swaps the
    /// neighborhoods of `u` and `v`. Realized as three local
    /// complementations `u, v, u`, so the compensating decorations are exact.
    ///
    /// For non-adjacent vertices the same edge map does not preserve the
    /// state, so this is rejected.
    pub fn pivot_phi(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v || !self.has_edge(u, v) {
            return Err(Error::Invalid(format!(
                "pivot needs an edge, ({u}, {v}) is not one"
            )));
        }
        self.local_complement(u);
        self.local_complement(v);
        self.local_complement(u);
        Ok(())
    }

    /// Number of right multiplications by `H S† H` taking `l` into the
    /// canonical six.
    fn sqrt_x_power(l: LocalClifford) -> usize {
        let r = sqrt_x();
        let mut c = l;
        for j in 0..4 {
            if c.is_legal() {
                return j;
            }
            c = c.compose(r);
        }
        unreachable!("the canonical six meet every coset of ⟨H S† H⟩")
    }

    /// Rewrites so that `L_v` is canonical, by local complementations at `v`
    /// and an `X` push. Neighbors' decorations may change.
    pub fn normalize_local(&mut self, v: usize) {
        match GraphForm::sqrt_x_power(self.locals[v]) {
            0 => {}
            1 => self.local_complement(v),
            2 => self.push_x(v),
            _ => {
                self.local_complement(v);
                self.push_x(v);
            }
        }
        debug_assert!(self.locals[v].is_legal());
    }

    /// Normalizes every vertex, lowest index first, until all decorations
    /// are canonical.
    pub fn normalize_all(&mut self) -> Result<()> {
        let bound = 8 * self.num_vertices() + 8;
        for _ in 0..bound {
            match (0..self.num_vertices()).find(|&v| !self.locals[v].is_legal()) {
                None => return Ok(()),
                Some(v) => self.normalize_local(v),
            }
        }
        Err(Error::NonTermination(bound))
    }

    /// A Hadamard-decorated vertex together with its lowest neighbor, if
    /// that neighbor has a smaller index.
    pub fn hadamard_violation(&self) -> Option<(usize, usize)> {
        (0..self.num_vertices()).find_map(|v| {
            let had = self.locals[v].to_zx().is_some_and(|(h, _)| h);
            match self.adj.row(v).first_one() {
                Some(u) if had && u < v => Some((u, v)),
                _ => None,
            }
        })
    }

    pub fn satisfies_hadamard_rule(&self) -> bool {
        self.locals.iter().all(|l| l.is_legal()) && self.hadamard_violation().is_none()
    }

    /// Rewrites until all decorations are canonical and no
    /// Hadamard-decorated vertex has a lower-numbered neighbor.
    ///
    /// Each violation `(u, v)` is handled by pivoting on the edge, which
    /// moves the Hadamard from `v` to `u`, followed by normalization. If that
    /// does not settle within a fixed budget the form is rebuilt from its
    /// stabilizers, which always satisfies the rule.
    pub fn enforce_hadamard_rule(&mut self) -> Result<()> {
        if self.satisfies_hadamard_rule() {
            return Ok(());
        }
        let bound = 4 * self.num_vertices() * self.num_vertices() + 8;
        let mut settled = self.normalize_all().is_ok();
        let mut steps = 0;
        while settled && steps < bound {
            let Some((u, v)) = self.hadamard_violation() else {
                return Ok(());
            };
            self.pivot_phi(u, v)?;
            settled = self.normalize_all().is_ok();
            steps += 1;
        }
        let inputs = self.num_inputs;
        *self = GraphForm::from_tableau_raw(&self.stabilizers())?;
        self.num_inputs = inputs;
        if self.satisfies_hadamard_rule() {
            Ok(())
        } else {
            Err(Error::NonTermination(bound))
        }
    }
}

impl fmt::Debug for GraphForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "GraphForm {} vertices ({} inputs)",
            self.num_vertices(),
            self.num_inputs
        )?;
        for v in 0..self.num_vertices() {
            writeln!(f, "  {v}: {:?} -> {:?}", self.locals[v], self.neighbors(v))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{graph_state_vector, states_equal_up_to_phase, tableau_projector};
    use crate::tableau::groups_equal;

    fn tab(rows: &[&str]) -> StabilizerTableau {
        StabilizerTableau::from_strs(rows).unwrap()
    }

    fn graph(m: usize, edges: &[(usize, usize)]) -> GraphForm {
        let mut g = GraphForm::new(m);
        for &(u, v) in edges {
            g.set_edge(u, v, true);
        }
        g
    }

    fn same_state(a: &GraphForm, b: &GraphForm) -> bool {
        states_equal_up_to_phase(
            &graph_state_vector(a).unwrap(),
            &graph_state_vector(b).unwrap(),
        )
    }

    /// The state vector must be fixed by the tableau's projector.
    fn represents(g: &GraphForm, t: &StabilizerTableau) -> bool {
        let psi = graph_state_vector(g).unwrap();
        let p = tableau_projector(t).unwrap();
        let dim = psi.len();
        (0..dim).all(|r| {
            let v: num_complex::Complex64 = (0..dim).map(|c| p.get(r, c) * psi[c]).sum();
            (v - psi[r]).norm() < 1e-9
        })
    }

    #[test]
    fn plus_and_zero() {
        let g = GraphForm::from_tableau(&tab(&["X"])).unwrap();
        assert_eq!(g.local(0), LocalClifford::I);
        let g = GraphForm::from_tableau(&tab(&["Z"])).unwrap();
        assert_eq!(g.local(0), LocalClifford::H);
        let g = GraphForm::from_tableau(&tab(&["-Y"])).unwrap();
        assert!(represents(&g, &tab(&["-Y"])));
    }

    #[test]
    fn ghz_graph() {
        let t = tab(&["XXX", "ZZI", "ZIZ"]);
        let g = GraphForm::from_tableau(&t).unwrap();
        assert!(represents(&g, &t));
        assert_eq!(g.neighbors(2), vec![0, 1]);
        assert!(!g.has_edge(0, 1));
        assert_eq!(g.local(0), LocalClifford::H);
        assert_eq!(g.local(1), LocalClifford::H);
        assert_eq!(g.local(2), LocalClifford::I);
        assert!(g.satisfies_hadamard_rule());
    }

    #[test]
    fn stabilizers_round_trip() {
        let t = tab(&["XXX", "ZZI", "ZIZ"]);
        let g = GraphForm::from_tableau(&t).unwrap();
        assert!(groups_equal(&g.stabilizers(), &t).unwrap());
    }

    #[test]
    fn local_complement_examples() {
        let mut tri = graph(3, &[(0, 1), (0, 2), (1, 2)]);
        let before = tri.clone();
        tri.local_complement(0);
        assert!(!tri.has_edge(1, 2));
        assert_eq!(tri.local(1), LocalClifford::S);
        assert_eq!(tri.local(2), LocalClifford::S);
        assert!(same_state(&before, &tri));

        let mut path = graph(3, &[(0, 1), (1, 2)]);
        let before = path.clone();
        path.local_complement(1);
        assert!(path.has_edge(0, 2));
        assert!(same_state(&before, &path));
    }

    #[test]
    fn opposite_direction_is_wrong() {
        // With S† on the neighbors instead of S the state changes; this pins
        // the direction of the square root of X.
        let path = graph(2, &[(0, 1)]);
        let mut wrong = path.clone();
        wrong.right_multiply_local(0, sqrt_x());
        wrong.right_multiply_local(1, LocalClifford::S_DAG);
        assert!(!same_state(&path, &wrong));
    }

    #[test]
    fn push_x_onto_neighbor() {
        let mut g = graph(2, &[(0, 1)]);
        g.set_local(1, LocalClifford::X);
        let before = g.clone();
        g.push_paulis();
        assert_eq!(g.local(0), LocalClifford::Z);
        assert_eq!(g.local(1), LocalClifford::I);
        assert!(same_state(&before, &g));
    }

    #[test]
    fn pivot_swaps_neighborhoods() {
        // 0 - 1 edge, 2 attached to 0, 3 attached to 1, 4 attached to both
        let mut g = graph(5, &[(0, 1), (0, 2), (1, 3), (0, 4), (1, 4)]);
        let before = g.clone();
        g.pivot_phi(0, 1).unwrap();
        assert!(same_state(&before, &g));
        assert_eq!(g.neighbors(0), vec![1, 3, 4]);
        assert_eq!(g.neighbors(1), vec![0, 2, 4]);
        assert!(g.has_edge(2, 3) && g.has_edge(2, 4) && g.has_edge(3, 4));
        assert!(g.pivot_phi(2, 2).is_err());
        let mut h = graph(2, &[]);
        assert!(h.pivot_phi(0, 1).is_err());
    }

    #[test]
    fn legal_six_meet_every_coset() {
        for l in crate::local_clifford::all() {
            let r = sqrt_x();
            let hits = (0..4)
                .filter(|&j| {
                    let mut c = l;
                    for _ in 0..j {
                        c = c.compose(r);
                    }
                    c.is_legal()
                })
                .count();
            assert_eq!(hits, 1, "{l:?}");
        }
    }

    #[test]
    fn normalize_every_local_on_an_edge() {
        for l in crate::local_clifford::all() {
            let mut g = graph(3, &[(0, 1), (1, 2)]);
            g.set_local(1, l);
            let before = g.clone();
            g.normalize_local(1);
            assert!(g.local(1).is_legal());
            assert!(same_state(&before, &g), "{l:?}");
        }
    }

    #[test]
    fn bell_with_late_hadamard_is_repaired() {
        let mut g = graph(2, &[(0, 1)]);
        g.set_local(1, LocalClifford::H);
        let before = g.clone();
        assert_eq!(g.hadamard_violation(), Some((0, 1)));
        g.enforce_hadamard_rule().unwrap();
        assert!(g.satisfies_hadamard_rule());
        assert!(same_state(&before, &g));
        assert!(g.has_edge(0, 1));
        assert_eq!(g.local(0).to_zx().map(|z| z.0), Some(true));
        assert!(!g.local(1).to_zx().unwrap().0);
        let again = g.clone();
        g.enforce_hadamard_rule().unwrap();
        assert_eq!(g, again);
    }
}
