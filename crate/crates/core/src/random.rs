//! Seeded random instances for fuzzing, benchmarks and the self-test.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::{CliffordCircuit, EncoderCircuit, Gate};
use crate::graphform::GraphForm;
use crate::local_clifford::LocalClifford;
use crate::tableau::StabilizerTableau;

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_gate<R: Rng>(rng: &mut R, wires: usize) -> Gate {
    let q = rng.gen_range(0..wires);
    if wires < 2 {
        return match rng.gen_range(0..4) {
            0 => Gate::H(q),
            1 => Gate::S(q),
            2 => Gate::X(q),
            _ => Gate::Z(q),
        };
    }
    let mut r = rng.gen_range(0..wires - 1);
    if r >= q {
        r += 1;
    }
    match rng.gen_range(0..6) {
        0 => Gate::H(q),
        1 => Gate::S(q),
        2 => Gate::X(q),
        3 => Gate::Z(q),
        4 => Gate::CX(q, r),
        _ => Gate::CZ(q, r),
    }
}

pub fn random_circuit<R: Rng>(rng: &mut R, wires: usize, gates: usize) -> CliffordCircuit {
    let mut c = CliffordCircuit::new(wires);
    if wires == 0 {
        return c;
    }
    for _ in 0..gates {
        c.push(random_gate(rng, wires)).expect("gate is in range");
    }
    c
}

/// Enough gates to scramble `n` wires thoroughly.
pub fn default_gate_count(n: usize) -> usize {
    let log = usize::BITS - n.max(2).leading_zeros();
    8 * n * log as usize + 8
}

/// A random encoder on `n` wires with `n − k` randomly chosen inputs.
pub fn random_encoder<R: Rng>(rng: &mut R, n: usize, k: usize) -> EncoderCircuit {
    assert!(k <= n);
    let circuit = random_circuit(rng, n, default_gate_count(n));
    let mut wires: Vec<usize> = (0..n).collect();
    wires.shuffle(rng);
    let mut inputs = wires[..n - k].to_vec();
    inputs.sort_unstable();
    EncoderCircuit::new(circuit, inputs).expect("inputs are distinct wires")
}

/// A random valid `k × n` tableau: the stabilizers of a random encoder.
pub fn random_tableau<R: Rng>(rng: &mut R, n: usize, k: usize) -> StabilizerTableau {
    random_encoder(rng, n, k).stabilizers()
}

/// A random generating set of the same signed group: rows are repeatedly
/// multiplied into one another and then shuffled.
pub fn regenerate<R: Rng>(rng: &mut R, t: &StabilizerTableau) -> StabilizerTableau {
    let mut rows = t.rows().to_vec();
    let k = rows.len();
    if k >= 2 {
        for _ in 0..4 * k * k {
            let i = rng.gen_range(0..k);
            let mut j = rng.gen_range(0..k - 1);
            if j >= i {
                j += 1;
            }
            let src = rows[j].clone();
            rows[i].mul_assign_right(&src);
        }
    }
    rows.shuffle(rng);
    StabilizerTableau::new(t.num_qubits(), rows).expect("same widths")
}

/// A random graph on `m` vertices with edge probability `density` and a
/// random canonical decoration on every vertex.
pub fn random_graph_form<R: Rng>(rng: &mut R, m: usize, density: f64) -> GraphForm {
    let mut g = GraphForm::new(m);
    for u in 0..m {
        for v in u + 1..m {
            if rng.gen_bool(density) {
                g.set_edge(u, v, true);
            }
        }
    }
    let legal: Vec<LocalClifford> = crate::local_clifford::all()
        .into_iter()
        .filter(|l| l.is_legal())
        .collect();
    for v in 0..m {
        g.set_local(v, *legal.choose(rng).expect("six choices"));
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::groups_equal;

    #[test]
    fn tableaus_are_valid_and_regeneration_keeps_the_group() {
        let mut r = rng(7);
        for n in 1..6 {
            for k in 0..=n {
                let t = random_tableau(&mut r, n, k);
                assert!(t.is_valid());
                assert_eq!(t.num_rows(), k);
                let u = regenerate(&mut r, &t);
                assert!(groups_equal(&t, &u).unwrap());
            }
        }
    }

    #[test]
    fn seeds_reproduce() {
        let a = random_tableau(&mut rng(3), 5, 2);
        let b = random_tableau(&mut rng(3), 5, 2);
        assert_eq!(a, b);
    }
}
