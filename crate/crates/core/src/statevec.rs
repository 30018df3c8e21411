//! Unnormalized dense state vectors.
//!
//! **Bit order.** Basis index `k` stores qubit 0 (the first tensor factor)
//! in its most significant bit. With this convention
//! `(1 0) ⊗ (1 0) ⊗ (1 1)` has its nonzero amplitudes at indices 0 and 1,
//! i.e. `(1 1 0 0 0 0 0 0)`. Many simulators use the opposite order.
//!
//! Vectors are kept unnormalized; only [`StateVector::probabilities`]
//! divides by the norm.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{compensated_sum, Scalar};

/// Largest register the default constructors will allocate (16M amplitudes).
pub const DEFAULT_QUBIT_CAP: usize = 24;

/// One of the three single-qubit factors a memory word is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactorTag {
    /// `(1 0)`
    Zero,
    /// `(0 1)`
    One,
    /// `(1 1)`
    Both,
}

impl FactorTag {
    pub const ALL: [FactorTag; 3] = [FactorTag::Zero, FactorTag::One, FactorTag::Both];

    /// The factor's two amplitudes `(|0>, |1>)`.
    pub fn amplitudes<T: Scalar>(self) -> [Complex<T>; 2] {
        let (o, z) = (
            Complex::new(T::one(), T::zero()),
            Complex::new(T::zero(), T::zero()),
        );
        match self {
            FactorTag::Zero => [o, z],
            FactorTag::One => [z, o],
            FactorTag::Both => [o, o],
        }
    }

    pub fn letter(self) -> char {
        match self {
            FactorTag::Zero => 'Z',
            FactorTag::One => 'O',
            FactorTag::Both => 'B',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'Z' => Some(FactorTag::Zero),
            'O' => Some(FactorTag::One),
            'B' => Some(FactorTag::Both),
            _ => None,
        }
    }
}

/// A sequence of factor tags, one per qubit, first tag = most significant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InitPattern {
    factors: Vec<FactorTag>,
}

impl InitPattern {
    pub fn new(factors: Vec<FactorTag>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::domain("an init pattern needs at least one factor"));
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[FactorTag] {
        &self.factors
    }

    pub fn n(&self) -> usize {
        self.factors.len()
    }

    /// Number of `(1 1)` factors.
    pub fn free_count(&self) -> usize {
        self.factors
            .iter()
            .filter(|&&t| t == FactorTag::Both)
            .count()
    }
}

impl fmt::Display for InitPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.factors {
            write!(f, "{}", t.letter())?;
        }
        Ok(())
    }
}

impl FromStr for InitPattern {
    type Err = Error;

    /// Parses the `Z`/`O`/`B` letter form, e.g. `"ZZB"`.
    fn from_str(s: &str) -> Result<Self> {
        let factors = s
            .chars()
            .enumerate()
            .map(|(i, c)| {
                FactorTag::from_letter(c).ok_or_else(|| {
                    Error::parse(i, format!("pattern letter {c:?} is not one of Z, O, B"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        InitPattern::new(factors)
    }
}

fn check_cap(what: &'static str, requested: usize, cap: usize) -> Result<()> {
    // usize shifts past the word size are meaningless regardless of the cap
    if requested > cap || requested >= usize::BITS as usize {
        return Err(Error::ResourceLimit {
            what,
            requested,
            cap,
        });
    }
    Ok(())
}

/// Complex amplitude array of length `2^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T> {
    n: usize,
    amps: Vec<Complex<T>>,
}

impl<T: Scalar> StateVector<T> {
    /// Wraps an amplitude array, checking the length and finiteness.
    pub fn from_amplitudes(n: usize, amps: Vec<Complex<T>>) -> Result<Self> {
        check_cap("state vector", n, usize::BITS as usize - 1)?;
        if amps.len() != 1usize << n {
            return Err(Error::domain(format!(
                "a {n}-qubit state needs {} amplitudes, got {}",
                1usize << n,
                amps.len()
            )));
        }
        if let Some(i) = amps
            .iter()
            .position(|a| !(a.re.is_finite() && a.im.is_finite()))
        {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { n, amps })
    }

    /// Builds a state from real amplitudes.
    pub fn from_real(n: usize, values: &[T]) -> Result<Self> {
        Self::from_amplitudes(
            n,
            values.iter().map(|&v| Complex::new(v, T::zero())).collect(),
        )
    }

    /// The all-zero vector on `n` qubits.
    pub fn zeros(n: usize) -> Result<Self> {
        check_cap("zero state", n, DEFAULT_QUBIT_CAP)?;
        Ok(Self {
            n,
            amps: vec![Complex::new(T::zero(), T::zero()); 1 << n],
        })
    }

    /// The computational basis state `|k>`.
    pub fn basis(n: usize, k: usize) -> Result<Self> {
        let mut s = Self::zeros(n)?;
        let len = s.len();
        let slot = s
            .amps
            .get_mut(k)
            .ok_or_else(|| Error::domain(format!("basis index {k} out of range 0..{len}")))?;
        *slot = Complex::new(T::one(), T::zero());
        Ok(s)
    }

    /// The scalar `1` as a zero-qubit state; the identity of [`kron`](Self::kron).
    pub fn unit() -> Self {
        Self {
            n: 0,
            amps: vec![Complex::new(T::one(), T::zero())],
        }
    }

    /// Left-to-right Kronecker product of the pattern's factors.
    pub fn encode(pattern: &InitPattern) -> Result<Self> {
        Self::encode_with_cap(pattern, DEFAULT_QUBIT_CAP)
    }

    pub fn encode_with_cap(pattern: &InitPattern, cap: usize) -> Result<Self> {
        check_cap("encode", pattern.n(), cap)?;
        let mut amps = vec![Complex::new(T::one(), T::zero())];
        for tag in pattern.factors() {
            let [lo, hi] = tag.amplitudes::<T>();
            let mut next = Vec::with_capacity(amps.len() * 2);
            for a in &amps {
                next.push(a * lo);
                next.push(a * hi);
            }
            amps = next;
        }
        Ok(Self {
            n: pattern.n(),
            amps,
        })
    }

    /// `self ⊗ other`: `out[p·2^m + q] = self[p]·other[q]`.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        self.kron_with_cap(other, DEFAULT_QUBIT_CAP)
    }

    pub fn kron_with_cap(&self, other: &Self, cap: usize) -> Result<Self> {
        let n = self.n + other.n;
        check_cap("kron", n, cap)?;
        let mut amps = Vec::with_capacity(1 << n);
        for a in &self.amps {
            amps.extend(other.amps.iter().map(|b| a * b));
        }
        Ok(Self { n, amps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub fn amplitude(&self, k: usize) -> Option<Complex<T>> {
        self.amps.get(k).copied()
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex<T>] {
        &mut self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Complex<T>> {
        self.amps
    }

    /// `Σ |a_k|²`.
    pub fn norm_squared(&self) -> T {
        compensated_sum(self.amps.iter().map(|a| a.norm_sqr()))
    }

    /// Basis indices whose amplitude magnitude exceeds `eps`, ascending.
    pub fn support(&self, eps: T) -> Vec<usize> {
        self.amps
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm() > eps)
            .map(|(k, _)| k)
            .collect()
    }

    /// Support as a bit mask of length `2^n`.
    pub fn support_mask(&self, eps: T) -> bitvec::vec::BitVec {
        self.amps.iter().map(|a| a.norm() > eps).collect()
    }

    /// Measurement distribution `|a_k|² / ‖ψ‖²`.
    pub fn probabilities(&self) -> Result<Vec<T>> {
        let norm = self.norm_squared();
        if norm <= T::zero() {
            return Err(Error::Degenerate);
        }
        Ok(self.amps.iter().map(|a| a.norm_sqr() / norm).collect())
    }

    /// Returns a copy scaled to unit norm.
    pub fn normalized(&self) -> Result<Self> {
        let norm = self.norm_squared();
        if norm <= T::zero() {
            return Err(Error::Degenerate);
        }
        let scale = norm.sqrt().recip();
        Ok(Self {
            n: self.n,
            amps: self.amps.iter().map(|a| a * scale).collect(),
        })
    }

    /// Converts the component type, e.g. `f32` → `f64`.
    pub fn cast<U: Scalar>(&self) -> StateVector<U> {
        let conv = |x: T| U::from_f64(x.to_f64_lossy()).unwrap_or_else(U::nan);
        StateVector {
            n: self.n,
            amps: self
                .amps
                .iter()
                .map(|a| Complex::new(conv(a.re), conv(a.im)))
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct StateVectorJson<T> {
    n: usize,
    amps: Vec<[T; 2]>,
}

/// `{"n": <int>, "amps": [[re, im], ...]}`
impl<T: Scalar> Serialize for StateVector<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        StateVectorJson {
            n: self.n,
            amps: self.amps.iter().map(|a| [a.re, a.im]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for StateVector<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = StateVectorJson::<T>::deserialize(deserializer)?;
        let amps = raw
            .amps
            .into_iter()
            .map(|[re, im]| Complex::new(re, im))
            .collect();
        StateVector::from_amplitudes(raw.n, amps).map_err(D::Error::custom)
    }
}
