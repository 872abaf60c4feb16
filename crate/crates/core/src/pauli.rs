//! Pauli strings in symplectic form.
//!
//! A string on `n` qubits is stored as two bit vectors `x` and `z`, one bit
//! per site. Site codes use the Hermitian convention
//!
//! ```text
//!   (x, z) = (0, 0) -> I    (1, 0) -> X    (0, 1) -> Z    (1, 1) -> Y
//! ```
//!
//! so every string is a Hermitian involution. Products pick up a phase
//! `i^e`, tracked by [`Phase`], under `XZ = -iY`.
//!
//! Site 0 is the leftmost character of the textual form and the most
//! significant tensor factor (the highest bit of a basis-state index).

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use smallvec::SmallVec;

use crate::error::{Error, Result};

type Words = SmallVec<[u64; 1]>;

/// A power of `i`: `i^exponent` with `exponent` in `0..4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn new(exponent: i64) -> Self {
        Phase(exponent.rem_euclid(4) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn is_real(self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub fn to_complex(self) -> Complex64 {
        match self.0 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    }
}

impl std::ops::Mul for Phase {
    type Output = Phase;

    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "+1",
            1 => "+i",
            2 => "-1",
            _ => "-i",
        })
    }
}

/// Single-site Pauli operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Site {
    I,
    X,
    Y,
    Z,
}

impl Site {
    fn from_bits(x: bool, z: bool) -> Site {
        match (x, z) {
            (false, false) => Site::I,
            (true, false) => Site::X,
            (false, true) => Site::Z,
            (true, true) => Site::Y,
        }
    }

    fn bits(self) -> (bool, bool) {
        match self {
            Site::I => (false, false),
            Site::X => (true, false),
            Site::Z => (false, true),
            Site::Y => (true, true),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Site::I => 'I',
            Site::X => 'X',
            Site::Y => 'Y',
            Site::Z => 'Z',
        }
    }
}

/// An `n`-qubit tensor product of Hermitian single-site Paulis.
///
/// Fits in a single inline word up to 64 qubits and spills to the heap
/// beyond that. Ordering is total and deterministic; the identity string
/// sorts first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    n: usize,
    x: Words,
    z: Words,
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        let w = words_for(n);
        PauliString {
            n,
            x: SmallVec::from_elem(0, w),
            z: SmallVec::from_elem(0, w),
        }
    }

    /// Builds a string from per-site operators, site 0 first.
    pub fn from_sites<I: IntoIterator<Item = Site>>(sites: I) -> Self {
        let sites: Vec<Site> = sites.into_iter().collect();
        let mut p = PauliString::identity(sites.len());
        for (j, s) in sites.into_iter().enumerate() {
            p.set(j, s);
        }
        p
    }

    /// Identity except at the listed `(site, op)` pairs.
    pub fn with_ops(n: usize, ops: &[(usize, Site)]) -> Self {
        let mut p = PauliString::identity(n);
        for &(j, s) in ops {
            assert!(j < n, "site {j} out of range for {n} qubits");
            p.set(j, s);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn site(&self, j: usize) -> Site {
        assert!(j < self.n, "site {j} out of range for {} qubits", self.n);
        let (w, b) = (j / 64, j % 64);
        Site::from_bits((self.x[w] >> b) & 1 == 1, (self.z[w] >> b) & 1 == 1)
    }

    pub fn set(&mut self, j: usize, s: Site) {
        let (w, b) = (j / 64, j % 64);
        let (xb, zb) = s.bits();
        self.x[w] = (self.x[w] & !(1 << b)) | ((xb as u64) << b);
        self.z[w] = (self.z[w] & !(1 << b)) | ((zb as u64) << b);
    }

    pub fn sites(&self) -> impl Iterator<Item = Site> + '_ {
        (0..self.n).map(move |j| self.site(j))
    }

    pub fn x_bit(&self, j: usize) -> bool {
        (self.x[j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn z_bit(&self, j: usize) -> bool {
        (self.z[j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn is_identity(&self) -> bool {
        self.x.iter().chain(self.z.iter()).all(|&w| w == 0)
    }

    /// Number of non-identity sites.
    pub fn weight(&self) -> usize {
        self.x
            .iter()
            .zip(&self.z)
            .map(|(x, z)| (x | z).count_ones() as usize)
            .sum()
    }

    /// Number of `Y` sites.
    pub fn y_count(&self) -> usize {
        self.x
            .iter()
            .zip(&self.z)
            .map(|(x, z)| (x & z).count_ones() as usize)
            .sum()
    }

    fn check_same_n(&self, other: &PauliString) -> Result<()> {
        if self.n != other.n {
            return Err(Error::QubitMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// `self · other = phase · result`.
    pub fn mul(&self, other: &PauliString) -> Result<(Phase, PauliString)> {
        self.check_same_n(other)?;
        // P = i^{x.z} X^x Z^z per site; moving Z^{z1} past X^{x2} costs (-1)^{z1.x2}
        // and X^{x3} Z^{z3} = i^{-x3.z3} R for the Hermitian result R.
        let mut exponent: i64 = 0;
        let mut x = Words::with_capacity(self.x.len());
        let mut z = Words::with_capacity(self.z.len());
        for w in 0..self.x.len() {
            let (x1, z1, x2, z2) = (self.x[w], self.z[w], other.x[w], other.z[w]);
            let (x3, z3) = (x1 ^ x2, z1 ^ z2);
            exponent += (x1 & z1).count_ones() as i64;
            exponent += (x2 & z2).count_ones() as i64;
            exponent += 2 * (z1 & x2).count_ones() as i64;
            exponent -= (x3 & z3).count_ones() as i64;
            x.push(x3);
            z.push(z3);
        }
        Ok((Phase::new(exponent), PauliString { n: self.n, x, z }))
    }

    /// True iff the symplectic form `<x_P, z_Q> + <x_Q, z_P>` is even.
    pub fn commutes(&self, other: &PauliString) -> Result<bool> {
        self.check_same_n(other)?;
        let form: u32 = (0..self.x.len())
            .map(|w| (self.x[w] & other.z[w]).count_ones() + (other.x[w] & self.z[w]).count_ones())
            .sum();
        Ok(form.is_multiple_of(2))
    }

    /// Tensor product `self ⊗ other` on `n_self + n_other` sites.
    pub fn concat(&self, other: &PauliString) -> PauliString {
        let n = self.n + other.n;
        let mut out = PauliString {
            n,
            x: SmallVec::from_elem(0, words_for(n)),
            z: SmallVec::from_elem(0, words_for(n)),
        };
        copy_bits(&mut out.x, &self.x, 0, self.n);
        copy_bits(&mut out.z, &self.z, 0, self.n);
        copy_bits(&mut out.x, &other.x, self.n, other.n);
        copy_bits(&mut out.z, &other.z, self.n, other.n);
        out
    }

    /// X and Z masks as basis-index bit patterns (site `j` at bit `n - 1 - j`).
    ///
    /// Only meaningful for `n <= 64`; callers working with state vectors are
    /// already far below that.
    pub fn index_masks(&self) -> (u64, u64) {
        assert!(self.n <= 64, "index masks need n <= 64");
        let mut xm = 0u64;
        let mut zm = 0u64;
        for j in 0..self.n {
            let bit = 1u64 << (self.n - 1 - j);
            if self.x_bit(j) {
                xm |= bit;
            }
            if self.z_bit(j) {
                zm |= bit;
            }
        }
        (xm, zm)
    }
}

fn copy_bits(dst: &mut Words, src: &Words, offset: usize, len: usize) {
    if offset.is_multiple_of(64) {
        let base = offset / 64;
        for (i, &w) in src.iter().enumerate().take(words_for(len)) {
            dst[base + i] |= w;
        }
        return;
    }
    for j in 0..len {
        if (src[j / 64] >> (j % 64)) & 1 == 1 {
            let t = offset + j;
            dst[t / 64] |= 1 << (t % 64);
        }
    }
}

/// Parses a string over `{I, X, Y, Z}`; positions in errors are 1-based.
pub fn parse_pauli(text: &str) -> Result<PauliString> {
    if text.is_empty() {
        return Err(Error::EmptyPauli);
    }
    let sites = text
        .chars()
        .enumerate()
        .map(|(i, ch)| match ch {
            'I' => Ok(Site::I),
            'X' => Ok(Site::X),
            'Y' => Ok(Site::Y),
            'Z' => Ok(Site::Z),
            _ => Err(Error::IllegalPauliChar { ch, position: i + 1 }),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PauliString::from_sites(sites))
}

pub fn format_pauli(p: &PauliString) -> String {
    p.sites().map(Site::as_char).collect()
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pauli(s)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_pauli(self))
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({})", format_pauli(self))
    }
}

impl serde::Serialize for PauliString {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_pauli(self))
    }
}

impl<'de> serde::Deserialize<'de> for PauliString {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_pauli(&text).map_err(serde::de::Error::custom)
    }
}
