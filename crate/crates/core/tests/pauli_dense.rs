//! Pauli algebra against explicit matrices.

use num_complex::Complex64;
use proptest::prelude::*;
use zxcanon::oracle::{pauli_matrix, DenseMatrix};
use zxcanon::pauli::Letter;
use zxcanon::{parse_pauli, PauliString};

fn letter() -> impl Strategy<Value = Letter> {
    prop_oneof![Just(Letter::I), Just(Letter::X), Just(Letter::Y), Just(Letter::Z)]
}

fn pauli(n: usize) -> impl Strategy<Value = PauliString> {
    (prop::collection::vec(letter(), n), 0u8..4).prop_map(|(ls, ph)| {
        let mut p = PauliString::from_letters(&ls, false);
        p.set_phase(ph);
        p
    })
}

fn pair() -> impl Strategy<Value = (PauliString, PauliString)> {
    (1usize..=6).prop_flat_map(|n| (pauli(n), pauli(n)))
}

fn commute(a: &DenseMatrix, b: &DenseMatrix) -> bool {
    a.matmul(b).approx_eq(&b.matmul(a))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_matches_matrices((a, b) in pair()) {
        let ab = a.multiply(&b).unwrap();
        let dense = pauli_matrix(&a).unwrap().matmul(&pauli_matrix(&b).unwrap());
        prop_assert!(pauli_matrix(&ab).unwrap().approx_eq(&dense));
    }

    #[test]
    fn commutation_matches_matrices((a, b) in pair()) {
        let dense = commute(&pauli_matrix(&a).unwrap(), &pauli_matrix(&b).unwrap());
        prop_assert_eq!(a.commutes(&b).unwrap(), dense);
    }

    #[test]
    fn text_round_trip(p in (1usize..=8).prop_flat_map(pauli)) {
        let mut h = p.clone();
        h.set_phase(p.phase() & 2);
        prop_assert_eq!(parse_pauli(&h.to_string()).unwrap(), h);
    }
}

#[test]
fn commutation_exhaustive_on_two_qubits() {
    let letters = [Letter::I, Letter::X, Letter::Y, Letter::Z];
    let all: Vec<PauliString> = letters
        .iter()
        .flat_map(|&a| letters.iter().map(move |&b| PauliString::from_letters(&[a, b], false)))
        .collect();
    for a in &all {
        for b in &all {
            let dense = commute(&pauli_matrix(a).unwrap(), &pauli_matrix(b).unwrap());
            assert_eq!(a.commutes(b).unwrap(), dense, "{a} {b}");
        }
    }
}

#[test]
fn y_is_hermitian_with_written_sign() {
    let y = pauli_matrix(&parse_pauli("Y").unwrap()).unwrap();
    let i = Complex64::new(0.0, 1.0);
    assert!((y.get(0, 1) + i).norm() < 1e-12);
    assert!((y.get(1, 0) - i).norm() < 1e-12);
    let minus = pauli_matrix(&parse_pauli("-Y").unwrap()).unwrap();
    assert!(minus.approx_eq(&y.scale(Complex64::new(-1.0, 0.0))));
}
