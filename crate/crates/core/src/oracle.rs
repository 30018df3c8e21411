//! Quantum oracles for a [`BoolFn`].
//!
//! The marking oracle acts on `n + 1` qubits with the auxiliary qubit in
//! the least significant position: `|x, q> → |x, q ⊕ f(x)>`. The phase
//! oracle acts on `n` qubits: `|x> → (-1)^f(x) |x>`. Both are applied
//! directly from the truth table in `O(2^n)`.
//!
//! [`Circuit`] is the wiring-diagram form: one multi-controlled X per
//! minterm, rendered as text and replayable gate by gate.

use std::fmt;
use std::str::FromStr;

use crate::boolfn::BoolFn;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::statevec::StateVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkingOracle {
    f: BoolFn,
}

impl MarkingOracle {
    pub fn new(f: BoolFn) -> Self {
        Self { f }
    }

    pub fn function(&self) -> &BoolFn {
        &self.f
    }

    /// Register width the oracle acts on.
    pub fn qubits(&self) -> usize {
        self.f.n() + 1
    }

    pub fn apply<T: Scalar>(&self, psi: &StateVector<T>) -> Result<StateVector<T>> {
        let mut out = psi.clone();
        self.apply_in_place(&mut out)?;
        Ok(out)
    }

    pub fn apply_in_place<T: Scalar>(&self, psi: &mut StateVector<T>) -> Result<()> {
        if psi.n() != self.qubits() {
            return Err(Error::Shape {
                expected: self.qubits(),
                found: psi.n(),
            });
        }
        let amps = psi.amplitudes_mut();
        for x in self.f.table().iter_ones() {
            amps.swap(2 * x, 2 * x + 1);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseOracle {
    f: BoolFn,
}

impl PhaseOracle {
    pub fn new(f: BoolFn) -> Self {
        Self { f }
    }

    pub fn function(&self) -> &BoolFn {
        &self.f
    }

    pub fn apply<T: Scalar>(&self, psi: &StateVector<T>) -> Result<StateVector<T>> {
        let mut out = psi.clone();
        self.apply_in_place(&mut out)?;
        Ok(out)
    }

    pub fn apply_in_place<T: Scalar>(&self, psi: &mut StateVector<T>) -> Result<()> {
        if psi.n() != self.f.n() {
            return Err(Error::Shape {
                expected: self.f.n(),
                found: psi.n(),
            });
        }
        let amps = psi.amplitudes_mut();
        for x in self.f.table().iter_ones() {
            amps[x] = -amps[x];
        }
        Ok(())
    }
}

/// `|x, q> → |x, q ⊕ f(x)>` on an `f.n() + 1` qubit register.
pub fn apply_marking<T: Scalar>(f: &BoolFn, psi: &StateVector<T>) -> Result<StateVector<T>> {
    MarkingOracle::new(f.clone()).apply(psi)
}

/// `|x> → (-1)^f(x) |x>`.
pub fn apply_phase<T: Scalar>(f: &BoolFn, psi: &StateVector<T>) -> Result<StateVector<T>> {
    PhaseOracle::new(f.clone()).apply(psi)
}

/// A control line: fires when `qubit` equals `positive`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Control {
    pub qubit: usize,
    pub positive: bool,
}

/// Multi-controlled X onto the auxiliary qubit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mcx {
    pub controls: Vec<Control>,
}

/// Oracle netlist on `qubits` wires; wire `qubits - 1` is the auxiliary.
///
/// Text form:
///
/// ```text
/// qubits 3
/// mcx controls=(0,-),(1,-) target=aux
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    pub qubits: usize,
    pub gates: Vec<Mcx>,
}

/// One MCX per minterm in ascending order; control polarities follow the
/// minterm's bits.
pub fn emit_circuit(f: &BoolFn) -> Circuit {
    let n = f.n();
    let gates = f
        .table()
        .iter_ones()
        .map(|m| Mcx {
            controls: (0..n)
                .map(|q| Control {
                    qubit: q,
                    positive: (m >> (n - 1 - q)) & 1 == 1,
                })
                .collect(),
        })
        .collect();
    Circuit {
        qubits: n + 1,
        gates,
    }
}

impl Circuit {
    pub fn aux(&self) -> usize {
        self.qubits - 1
    }

    /// Replays every gate in order on a copy of `psi`.
    pub fn apply<T: Scalar>(&self, psi: &StateVector<T>) -> Result<StateVector<T>> {
        if psi.n() != self.qubits {
            return Err(Error::Shape {
                expected: self.qubits,
                found: psi.n(),
            });
        }
        let mut out = psi.clone();
        let amps = out.amplitudes_mut();
        let width = self.qubits;
        let bit = |q: usize| 1usize << (width - 1 - q);
        let aux = bit(self.aux());
        for gate in &self.gates {
            let (mut mask, mut want) = (0usize, 0usize);
            for c in &gate.controls {
                mask |= bit(c.qubit);
                if c.positive {
                    want |= bit(c.qubit);
                }
            }
            for k in 0..amps.len() {
                if k & aux == 0 && k & mask == want {
                    amps.swap(k, k | aux);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "qubits {}", self.qubits)?;
        for gate in &self.gates {
            write!(f, "mcx controls=")?;
            for (i, c) in gate.controls.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "({},{})", c.qubit, if c.positive { '+' } else { '-' })?;
            }
            writeln!(f, " target=aux")?;
        }
        Ok(())
    }
}

impl FromStr for Circuit {
    type Err = Error;

    /// Reads the text form back. Blank lines and `#` comments are skipped;
    /// parse error positions are 1-based line numbers.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let bad = |line: usize, msg: String| Error::parse(line, msg);

        let (ln, header) = lines.next().ok_or_else(|| bad(1, "empty netlist".into()))?;
        let qubits = header
            .strip_prefix("qubits ")
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&q| q >= 1)
            .ok_or_else(|| bad(ln, format!("expected `qubits <count>`, found {header:?}")))?;

        let mut gates = Vec::new();
        for (ln, line) in lines {
            let body = line
                .strip_prefix("mcx controls=")
                .and_then(|r| r.strip_suffix(" target=aux"))
                .ok_or_else(|| bad(ln, format!("unrecognized gate line {line:?}")))?;
            let mut controls = Vec::new();
            if !body.is_empty() {
                for item in body.split("),") {
                    let item = item.trim_start_matches('(').trim_end_matches(')');
                    let (q, pol) = item
                        .split_once(',')
                        .ok_or_else(|| bad(ln, format!("malformed control {item:?}")))?;
                    let qubit = q
                        .trim()
                        .parse::<usize>()
                        .ok()
                        .filter(|&q| q + 1 < qubits)
                        .ok_or_else(|| bad(ln, format!("control qubit {q:?} not a data wire")))?;
                    let positive = match pol.trim() {
                        "+" => true,
                        "-" => false,
                        p => return Err(bad(ln, format!("polarity {p:?} is not + or -"))),
                    };
                    controls.push(Control { qubit, positive });
                }
            }
            gates.push(Mcx { controls });
        }
        Ok(Circuit { qubits, gates })
    }
}
