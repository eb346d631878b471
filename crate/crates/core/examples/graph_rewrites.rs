//! Local complementation, pivoting and Hadamard-rule repair on a small
//! decorated graph state, each checked against its state vector.

use zxcanon::oracle::{graph_state_vector, states_equal_up_to_phase};
use zxcanon::random::{random_graph_form, rng};
use zxcanon::GraphForm;

fn check(label: &str, before: &[num_complex::Complex64], g: &GraphForm) {
    let same = states_equal_up_to_phase(before, &graph_state_vector(g).expect("small"));
    println!("{label:<22} edges={:<2} same state: {same}", g.num_edges());
}

fn main() {
    let mut g = random_graph_form(&mut rng(3), 5, 0.5);
    let start = graph_state_vector(&g).expect("small");
    println!("start {g:?}");

    g.local_complement(0);
    check("local complement at 0", &start, &g);

    g.normalize_all().expect("terminates");
    check("normalize locals", &start, &g);

    if let Some(v) = g.neighbors(1).first().copied() {
        g.pivot_phi(1, v).expect("adjacent");
        check(&format!("pivot on 1-{v}"), &start, &g);
    }

    g.enforce_hadamard_rule().expect("terminates");
    check("enforce Hadamard rule", &start, &g);
    println!("rule holds: {}", g.satisfies_hadamard_rule());
}
