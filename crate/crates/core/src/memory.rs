//! State vectors as memory words.
//!
//! A word is written by encoding an [`InitPattern`]; its stored bits are
//! the support of the resulting vector. A needle function reads one bit
//! (RAM); an arbitrary function recognizes a whole word (CAM). Readout
//! probabilities are computed exactly from the amplitudes: they equal the
//! probability that the marking oracle's auxiliary qubit reads 1.

use bitvec::slice::BitSlice;
use num_bigint::BigUint;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::boolfn::BoolFn;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::statevec::{FactorTag, InitPattern, StateVector};

/// Longest pattern length [`enumerate_patterns`] will stream (3^12 items).
pub const ENUMERATE_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapacityRow {
    /// Number of `(1 1)` factors.
    pub i: usize,
    /// Ways to place them, `C(n, i)`.
    pub choose: BigUint,
    /// Binary codes left for the other qubits, `2^(n-i)`.
    pub codes: BigUint,
    pub product: BigUint,
}

/// Number of distinct words `n` qubits can hold, broken down by the
/// number of `(1 1)` factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapacityReport {
    pub n: usize,
    pub rows: Vec<CapacityRow>,
    pub total: BigUint,
}

/// `Σ_i C(n,i)·2^(n-i)` in exact integers.
pub fn capacity(n: usize) -> CapacityReport {
    let mut rows = Vec::with_capacity(n + 1);
    let mut choose = BigUint::one();
    for i in 0..=n {
        let codes = BigUint::one() << (n - i);
        let product = &choose * &codes;
        rows.push(CapacityRow {
            i,
            choose: choose.clone(),
            codes,
            product,
        });
        // C(n, i+1) = C(n, i)·(n-i)/(i+1), exact at every step
        choose = choose * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    let total = rows.iter().map(|r| &r.product).sum();
    CapacityReport { n, rows, total }
}

impl Serialize for CapacityRow {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CapacityRow", 4)?;
        st.serialize_field("i", &self.i)?;
        st.serialize_field("choose", &self.choose.to_string())?;
        st.serialize_field("codes", &self.codes.to_string())?;
        st.serialize_field("product", &self.product.to_string())?;
        st.end()
    }
}

/// Big integers are written as decimal strings.
impl Serialize for CapacityReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CapacityReport", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("total", &self.total.to_string())?;
        st.end()
    }
}

/// Every pattern of length `n`, lexicographic with `Zero < One < Both`.
pub fn enumerate_patterns(n: usize) -> Result<Patterns> {
    if n == 0 {
        return Err(Error::domain("patterns need at least one factor"));
    }
    if n > ENUMERATE_CAP {
        return Err(Error::ResourceLimit {
            what: "pattern enumeration",
            requested: n,
            cap: ENUMERATE_CAP,
        });
    }
    Ok(Patterns {
        digits: vec![0; n],
        done: false,
    })
}

/// Iterator returned by [`enumerate_patterns`].
#[derive(Debug, Clone)]
pub struct Patterns {
    digits: Vec<u8>,
    done: bool,
}

impl Iterator for Patterns {
    type Item = InitPattern;

    fn next(&mut self) -> Option<InitPattern> {
        if self.done {
            return None;
        }
        let tags = self
            .digits
            .iter()
            .map(|&d| FactorTag::ALL[d as usize])
            .collect();
        // base-3 odometer, last position fastest
        self.done = true;
        for d in self.digits.iter_mut().rev() {
            if *d < 2 {
                *d += 1;
                self.done = false;
                break;
            }
            *d = 0;
        }
        Some(InitPattern::new(tags).expect("non-empty"))
    }
}

/// The pattern whose encoding has exactly the set bits of `word` as
/// support, or `None` when those bits do not form a subcube.
///
/// Fails only when the word length is not `2^n` with `n >= 1`.
pub fn pattern_for(word: &BitSlice) -> Result<Option<InitPattern>> {
    let len = word.len();
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::domain(format!(
            "word length {len} is not a power of two of at least 2"
        )));
    }
    let n = len.trailing_zeros() as usize;
    let ones = word.count_ones();
    if ones == 0 {
        return Ok(None);
    }
    let (and, or) = word
        .iter_ones()
        .fold((len - 1, 0usize), |(a, o), k| (a & k, o | k));
    let tags: Vec<FactorTag> = (0..n)
        .map(|j| {
            let bit = 1usize << (n - 1 - j);
            match (and & bit != 0, or & bit != 0) {
                (true, _) => FactorTag::One,
                (false, false) => FactorTag::Zero,
                (false, true) => FactorTag::Both,
            }
        })
        .collect();
    // the set lies inside the cube spanned by its free positions, so
    // matching size means it is the whole cube
    let free = tags.iter().filter(|&&t| t == FactorTag::Both).count();
    if ones != 1usize << free {
        return Ok(None);
    }
    InitPattern::new(tags).map(Some)
}

/// One bit read out of a memory word.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RamRead<T> {
    pub bit: bool,
    pub probability: T,
}

fn checked_norm<T: Scalar>(psi: &StateVector<T>) -> Result<T> {
    let norm = psi.norm_squared();
    if norm <= T::zero() {
        return Err(Error::Degenerate);
    }
    Ok(norm)
}

/// Reads address `k`: the bit is set iff `|a_k| > eps`; the probability is
/// `|a_k|² / ‖ψ‖²`.
pub fn ram_read<T: Scalar>(psi: &StateVector<T>, k: usize, eps: T) -> Result<RamRead<T>> {
    let amp = psi
        .amplitude(k)
        .ok_or_else(|| Error::domain(format!("address {k} out of range 0..={}", psi.len() - 1)))?;
    let norm = checked_norm(psi)?;
    Ok(RamRead {
        bit: amp.norm() > eps,
        probability: amp.norm_sqr() / norm,
    })
}

fn check_shape<T: Scalar>(f: &BoolFn, psi: &StateVector<T>) -> Result<()> {
    if f.n() != psi.n() {
        return Err(Error::Shape {
            expected: f.n(),
            found: psi.n(),
        });
    }
    Ok(())
}

/// Probability that the word matches `f`: the share of `‖ψ‖²` on the
/// truth set. Equals 1 exactly when the support lies inside the truth set.
pub fn cam_match<T: Scalar>(psi: &StateVector<T>, f: &BoolFn) -> Result<T> {
    check_shape(f, psi)?;
    let norm = checked_norm(psi)?;
    let amps = psi.amplitudes();
    let hit = f
        .table()
        .iter_ones()
        .fold(T::zero(), |acc, x| acc + amps[x].norm_sqr());
    Ok(hit / norm)
}

/// True iff the truth set of `f` equals the support of `psi`.
pub fn recognizes<T: Scalar>(f: &BoolFn, psi: &StateVector<T>, eps: T) -> Result<bool> {
    check_shape(f, psi)?;
    Ok(psi
        .amplitudes()
        .iter()
        .zip(f.table().iter().by_vals())
        .all(|(a, marked)| (a.norm() > eps) == marked))
}
