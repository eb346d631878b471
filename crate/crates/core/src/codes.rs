//! Stabilizer tableaus of a few well-known codes.

use crate::tableau::{parse_tableau, StabilizerTableau};

/// Nine-qubit code, one logical qubit.
pub const SHOR_TEXT: &str = "\
# nine-qubit code
ZZIIIIIII
ZIZIIIIII
IIIZZIIII
IIIZIZIII
IIIIIIZZI
IIIIIIZIZ
XXXXXXIII
XXXIIIXXX
";

/// Seven-qubit code, one logical qubit.
pub const STEANE_TEXT: &str = "\
# seven-qubit code
IIIXXXX
IXXIIXX
XIXIXIX
IIIZZZZ
IZZIIZZ
ZIZIZIZ
";

/// Five-qubit code: the cyclic shifts of `XZZXI`.
pub const FIVE_QUBIT_TEXT: &str = "\
# five-qubit code
XZZXI
IXZZX
XIXZZ
ZXIXZ
";

pub fn shor() -> StabilizerTableau {
    parse_tableau(SHOR_TEXT).expect("built-in tableau parses")
}

pub fn steane() -> StabilizerTableau {
    parse_tableau(STEANE_TEXT).expect("built-in tableau parses")
}

pub fn five_qubit() -> StabilizerTableau {
    parse_tableau(FIVE_QUBIT_TEXT).expect("built-in tableau parses")
}

/// `(name, tableau)` for each built-in code.
pub fn all() -> Vec<(&'static str, StabilizerTableau)> {
    vec![
        ("shor", shor()),
        ("steane", steane()),
        ("five_qubit", five_qubit()),
    ]
}

/// Small named tableaus used as test fixtures.
pub fn small() -> Vec<(&'static str, StabilizerTableau)> {
    let t = |rows: &[&str]| StabilizerTableau::from_strs(rows).expect("fixture is valid");
    vec![
        ("zero", t(&["Z"])),
        ("one", t(&["-Z"])),
        ("plus", t(&["X"])),
        ("minus_y", t(&["-Y"])),
        ("repetition", t(&["ZZ"])),
        ("bell", t(&["XX", "ZZ"])),
        ("ghz3", t(&["XXX", "ZZI", "ZIZ"])),
        ("bit_flip3", t(&["ZZI", "IZZ"])),
        ("phase_flip3", t(&["XXI", "IXX"])),
        ("two_free", StabilizerTableau::empty(2)),
        ("four_two_two", t(&["XXXX", "ZZZZ"])),
    ]
}
