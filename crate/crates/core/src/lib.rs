//! Dense state-vector simulation of tensor-product memory words.
//!
//! A word on `n` qubits is built as a Kronecker product of the factors
//! `(1 0)`, `(0 1)` and `(1 1)`; its support is the stored bit pattern.
//! On top of that this crate provides
//!
//! - truth-table Boolean functions with a switching-algebra parser ([`boolfn`]),
//! - marking and phase oracles plus a multi-controlled-X netlist ([`oracle`]),
//! - Grover search with closed-form success prediction ([`grover`]),
//! - RAM and CAM readout and exact capacity counting ([`memory`]),
//! - the `qcam` command-line front end ([`cli`]).
//!
//! Basis index `k` stores qubit 0 in its **most significant** bit.
//!
//! The numeric modules are generic over [`Scalar`] (`f32` or `f64`); the
//! aliases below fix `f64`.
//!
//! ```
//! use qcam::{memory, BoolFn, StateVector};
//!
//! let word = StateVector::encode(&"ZZB".parse().unwrap()).unwrap();
//! let f = BoolFn::parse("a'b'", &["a", "b", "c"]).unwrap();
//! assert_eq!(word.support(1e-9), vec![0, 1]);
//! assert!(memory::recognizes(&f, &word, 1e-9).unwrap());
//! ```

pub mod boolfn;
pub mod cli;
pub mod error;
pub mod grover;
pub mod memory;
pub mod oracle;
pub mod scalar;
pub mod statevec;

pub use boolfn::{count_functions, BoolFn, FunctionSpec};
pub use error::{Error, Result};
pub use memory::{CapacityReport, RamRead};
pub use oracle::{Circuit, MarkingOracle, PhaseOracle};
pub use scalar::Scalar;
pub use statevec::{FactorTag, InitPattern};

pub type Amplitude = num_complex::Complex<f64>;
pub type StateVector = statevec::StateVector<f64>;
pub type StateVectorF32 = statevec::StateVector<f32>;
pub type GroverReport = grover::GroverReport<f64>;
