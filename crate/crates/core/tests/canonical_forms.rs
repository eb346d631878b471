//! The canonicalization pipeline end to end.

use proptest::prelude::*;
use zxcanon::oracle::{images_equal, tableau_projector, zxcf_to_isometry};
use zxcanon::random::{random_encoder, random_tableau, regenerate, rng};
use zxcanon::{
    canonicalize, canonicalize_encoder, codes, decompile, enumerate_zxcf, groups_equal,
    strip_locals, synthesize_encoder, StabilizerTableau, ZxcfDiagram,
};

fn shape(max_n: usize) -> impl Strategy<Value = (usize, usize, u64)> {
    (1usize..=max_n).prop_flat_map(|n| (Just(n), 0..=n, any::<u64>()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn canonical_form_depends_only_on_the_code((n, k, seed) in shape(8)) {
        let mut r = rng(seed);
        let t = random_tableau(&mut r, n, k);
        let d = canonicalize(&t).unwrap();
        prop_assert!(d.is_valid());
        prop_assert_eq!(&canonicalize(&regenerate(&mut r, &t)).unwrap(), &d);
        let back = decompile(&d).unwrap();
        prop_assert!(groups_equal(&back, &t).unwrap());
        prop_assert_eq!(&canonicalize(&back).unwrap(), &d);
        prop_assert_eq!(ZxcfDiagram::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn circuits_and_tableaus_agree((n, k, seed) in shape(7)) {
        let e = random_encoder(&mut rng(seed), n, k);
        let d = canonicalize_encoder(&e).unwrap();
        prop_assert_eq!(&canonicalize(&e.stabilizers()).unwrap(), &d);
        let resynth = synthesize_encoder(&e.stabilizers()).unwrap();
        prop_assert_eq!(canonicalize_encoder(&resynth).unwrap(), d);
    }

    #[test]
    fn diagram_image_is_the_code_space((n, k, seed) in shape(5)) {
        let t = random_tableau(&mut rng(seed), n, k);
        let v = zxcf_to_isometry(&canonicalize(&t).unwrap()).unwrap();
        prop_assert!(images_equal(&v, &tableau_projector(&t).unwrap()).unwrap());
    }
}

#[test]
fn enumerated_diagrams_are_fixed_points() {
    for n in 1..=3 {
        for k in 0..=n {
            let mut count = 0;
            for d in enumerate_zxcf(n, k).unwrap() {
                assert!(d.is_valid(), "{}", d.to_json());
                assert_eq!(canonicalize(&decompile(&d).unwrap()).unwrap(), d);
                count += 1;
            }
            assert!(count > 0);
        }
    }
}

#[test]
fn identity_encoder_has_a_bare_diagram() {
    for n in 1..=4 {
        let d = canonicalize(&StabilizerTableau::empty(n)).unwrap();
        assert_eq!(d, ZxcfDiagram::identity(n));
        assert!(d.a_edges().is_empty() && d.phases().iter().all(|&p| p == 0));
    }
}

#[test]
fn small_codes() {
    for (name, t) in codes::small() {
        let d = canonicalize(&t).unwrap();
        assert!(d.is_valid(), "{name}");
        assert!(groups_equal(&decompile(&d).unwrap(), &t).unwrap(), "{name}");
    }
    let zero = canonicalize(&StabilizerTableau::from_strs(&["Z"]).unwrap()).unwrap();
    let one = canonicalize(&StabilizerTableau::from_strs(&["-Z"]).unwrap()).unwrap();
    assert_ne!(zero, one);
    assert_eq!(one.phase(0), 2);
    assert!(zero.had(0) && one.had(0));
}

#[test]
fn named_codes_round_trip() {
    for (name, t) in codes::all() {
        let d = canonicalize(&t).unwrap();
        assert!(d.is_valid(), "{name}");
        assert_eq!(d.num_inputs(), 1, "{name}");
        assert!(groups_equal(&decompile(&d).unwrap(), &t).unwrap(), "{name}");
    }
}

#[test]
fn stripping_keeps_a_valid_diagram_of_the_same_dimension() {
    let mut r = rng(31);
    for i in 0..100 {
        let n = 1 + i % 6;
        let k = (i / 6) % (n + 1);
        let d = canonicalize(&random_tableau(&mut r, n, k)).unwrap();
        let s = strip_locals(&d).unwrap();
        assert!(s.is_valid());
        assert_eq!(s.a_edges(), d.a_edges());
        assert_eq!(decompile(&s).unwrap().num_rows(), k);
    }
}

#[test]
fn rejects_bad_json() {
    assert!(ZxcfDiagram::from_json("{").is_err());
    assert!(ZxcfDiagram::from_json(r#"{"n":2,"k":1,"m":[[0]],"a":[],"phase":[0,0],"had":[false,false]}"#).is_err());
    assert!(ZxcfDiagram::from_json(r#"{"n":1,"k":0,"m":[],"a":[],"phase":[4],"had":[false]}"#).is_err());
}
