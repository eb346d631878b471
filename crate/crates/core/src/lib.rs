//! Canonical ZX-calculus forms for Clifford encoders.
//!
//! An encoder, given either as an incomplete stabilizer tableau or as a
//! Clifford circuit with `|0⟩` ancillas, is compiled into a unique
//! [`ZxcfDiagram`]: a semi-bipartite graph between input and output nodes
//! whose input/output block is in reduced row-echelon form, together with
//! quarter-turn phases and Hadamard flags on the outputs. Two encoders have
//! the same image exactly when their diagrams are field-for-field equal.
//!
//! ```
//! use zxcanon::{canonicalize, codes, decompile, groups_equal};
//!
//! let steane = codes::steane();
//! let d = canonicalize(&steane).unwrap();
//! assert!(d.validate().is_ok());
//! assert!(groups_equal(&decompile(&d).unwrap(), &steane).unwrap());
//! ```

pub mod circuit;
pub mod cli;
pub mod codes;
pub mod counting;
pub mod error;
pub mod gf2;
pub mod graphform;
pub mod local_clifford;
pub mod oracle;
pub mod pauli;
pub mod random;
pub mod selftest;
pub mod tableau;
pub mod zxcf;

pub use circuit::{
    choi_tableau, conjugate, format_circuit, parse_circuit, reduce_to_z1, synthesize_encoder,
    CliffordCircuit, EncoderCircuit, Gate,
};
pub use counting::{count_tableaus, count_zxcf_closed, count_zxcf_recursive, CountQuery};
pub use error::{Error, Result};
pub use graphform::GraphForm;
pub use local_clifford::LocalClifford;
pub use pauli::{format_pauli, parse_pauli, PauliString};
pub use tableau::{
    format_tableau, group_canonical, groups_equal, parse_tableau, validate_tableau,
    StabilizerTableau, TableauViolation,
};
pub use zxcf::{
    canonicalize, canonicalize_encoder, decompile, enumerate_zxcf, render_dot, strip_locals,
    validate_zxcf, RuleViolation, ZxcfDiagram,
};
