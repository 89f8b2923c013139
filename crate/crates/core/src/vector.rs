//! Vectors over Z2, Z4 and the mixed alphabet Z2^α × Z4^β.
//!
//! Coordinates are 1-based wherever they cross the public surface
//! ([`CoordSet`], [`phi1`], [`phi2`]); storage is a plain 0-based `Vec<u8>`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Gray image of a single Z4 symbol: 0→00, 1→01, 2→11, 3→10.
#[inline]
pub fn phi(q: u8) -> [u8; 2] {
    match q & 3 {
        0 => [0, 0],
        1 => [0, 1],
        2 => [1, 1],
        _ => [1, 0],
    }
}

#[inline]
pub fn phi_inverse(pair: [u8; 2]) -> u8 {
    match pair {
        [0, 0] => 0,
        [0, 1] => 1,
        [1, 1] => 2,
        _ => 3,
    }
}

#[inline]
pub fn lee_weight_z4(q: u8) -> usize {
    match q & 3 {
        0 => 0,
        2 => 2,
        _ => 1,
    }
}

/// First binary coordinate of the quaternary coordinate `coord = α + i` (1-based).
pub fn phi1(alpha: usize, coord: usize) -> usize {
    debug_assert!(coord > alpha);
    2 * coord - alpha - 1
}

/// Second binary coordinate of the quaternary coordinate `coord = α + i` (1-based).
pub fn phi2(alpha: usize, coord: usize) -> usize {
    debug_assert!(coord > alpha);
    2 * coord - alpha
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryVector {
    bits: Vec<u8>,
}

impl BinaryVector {
    pub fn zeros(n: usize) -> Self {
        BinaryVector { bits: vec![0; n] }
    }

    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        if let Some(pos) = bits.iter().position(|&b| b > 1) {
            return Err(Error::InvalidSymbol { symbol: char::from(b'0' + bits[pos].min(9)), position: pos + 1 });
        }
        Ok(BinaryVector { bits })
    }

    /// Unit vector with a single one at 1-based position `i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.bits[i - 1] = 1;
        v
    }

    /// Vector of length `n` whose support is the given 1-based positions.
    pub fn from_support(n: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(n);
        for &i in support {
            v.bits[i - 1] ^= 1;
        }
        v
    }

    pub(crate) fn from_bits_unchecked(bits: Vec<u8>) -> Self {
        BinaryVector { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Bit at 1-based position `i`.
    pub fn get(&self, i: usize) -> u8 {
        self.bits[i - 1]
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b != 0).count()
    }

    /// 1-based positions of the nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        self.bits.iter().enumerate().filter(|(_, &b)| b != 0).map(|(i, _)| i + 1).collect()
    }

    pub fn try_add(&self, other: &BinaryVector) -> Result<BinaryVector> {
        if self.len() != other.len() {
            return Err(Error::shape(self.len(), other.len()));
        }
        Ok(BinaryVector { bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect() })
    }

    /// Pack into an integer, index 1 as the most significant bit.
    pub fn to_u64(&self) -> u64 {
        self.bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64)
    }

    pub fn from_u64(value: u64, n: usize) -> Self {
        let bits = (0..n).map(|i| ((value >> (n - 1 - i)) & 1) as u8).collect();
        BinaryVector { bits }
    }
}

impl Add for &BinaryVector {
    type Output = BinaryVector;

    fn add(self, rhs: &BinaryVector) -> BinaryVector {
        self.try_add(rhs).expect("binary vectors of different length")
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

impl FromStr for BinaryVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for (i, ch) in s.trim().chars().filter(|c| !c.is_whitespace() && *c != ',').enumerate() {
            match ch {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => return Err(Error::InvalidSymbol { symbol: ch, position: i + 1 }),
            }
        }
        Ok(BinaryVector { bits })
    }
}

/// Element of Z2^α × Z4^β.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedVector {
    bits: Vec<u8>,
    quats: Vec<u8>,
}

impl MixedVector {
    pub fn new(bits: Vec<u8>, quats: Vec<u8>) -> Result<Self> {
        if let Some(pos) = bits.iter().position(|&b| b > 1) {
            return Err(Error::InvalidSymbol { symbol: char::from(b'0' + bits[pos].min(9)), position: pos + 1 });
        }
        if let Some(pos) = quats.iter().position(|&q| q > 3) {
            return Err(Error::InvalidSymbol {
                symbol: char::from(b'0' + quats[pos].min(9)),
                position: bits.len() + pos + 1,
            });
        }
        Ok(MixedVector { bits, quats })
    }

    /// Builds a vector reducing entries mod 2 / mod 4.
    pub fn reduced(bits: Vec<u8>, quats: Vec<u8>) -> Self {
        MixedVector {
            bits: bits.into_iter().map(|b| b & 1).collect(),
            quats: quats.into_iter().map(|q| q & 3).collect(),
        }
    }

    pub fn zeros(alpha: usize, beta: usize) -> Self {
        MixedVector { bits: vec![0; alpha], quats: vec![0; beta] }
    }

    pub fn alpha(&self) -> usize {
        self.bits.len()
    }

    pub fn beta(&self) -> usize {
        self.quats.len()
    }

    /// Binary length α + 2β of the Gray image.
    pub fn binary_len(&self) -> usize {
        self.bits.len() + 2 * self.quats.len()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn quats(&self) -> &[u8] {
        &self.quats
    }

    pub(crate) fn bits_mut(&mut self) -> &mut [u8] {
        &mut self.bits
    }

    pub(crate) fn quats_mut(&mut self) -> &mut [u8] {
        &mut self.quats
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| b == 0) && self.quats.iter().all(|&q| q == 0)
    }

    pub fn same_shape(&self, other: &MixedVector) -> bool {
        self.alpha() == other.alpha() && self.beta() == other.beta()
    }

    fn check_shape(&self, other: &MixedVector) -> Result<()> {
        if self.same_shape(other) {
            Ok(())
        } else {
            Err(Error::shape(
                format!("(α={}, β={})", self.alpha(), self.beta()),
                format!("(α={}, β={})", other.alpha(), other.beta()),
            ))
        }
    }

    pub fn try_add(&self, other: &MixedVector) -> Result<MixedVector> {
        self.check_shape(other)?;
        Ok(MixedVector {
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect(),
            quats: self.quats.iter().zip(&other.quats).map(|(a, b)| (a + b) & 3).collect(),
        })
    }

    pub fn try_sub(&self, other: &MixedVector) -> Result<MixedVector> {
        self.try_add(&-other)
    }

    /// Multiplication by a scalar of Z4 (acting on Z2 through reduction mod 2).
    pub fn scale(&self, k: u8) -> MixedVector {
        MixedVector {
            bits: self.bits.iter().map(|&b| (b * k) & 1).collect(),
            quats: self.quats.iter().map(|&q| (q * k) & 3).collect(),
        }
    }

    /// In-place `self += k * other`.
    pub(crate) fn add_scaled(&mut self, other: &MixedVector, k: u8) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a = (*a + b * k) & 1;
        }
        for (a, b) in self.quats.iter_mut().zip(&other.quats) {
            *a = (*a + b * k) & 3;
        }
    }

    /// Componentwise product.
    pub fn hadamard(&self, other: &MixedVector) -> Result<MixedVector> {
        self.check_shape(other)?;
        Ok(MixedVector {
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect(),
            quats: self.quats.iter().zip(&other.quats).map(|(a, b)| (a * b) & 3).collect(),
        })
    }

    /// Order in the additive group: 1, 2 or 4.
    pub fn order(&self) -> u8 {
        if self.quats.iter().any(|&q| q & 1 == 1) {
            4
        } else if self.is_zero() {
            1
        } else {
            2
        }
    }
}

impl Neg for &MixedVector {
    type Output = MixedVector;

    fn neg(self) -> MixedVector {
        MixedVector { bits: self.bits.clone(), quats: self.quats.iter().map(|&q| (4 - q) & 3).collect() }
    }
}

impl Add for &MixedVector {
    type Output = MixedVector;

    fn add(self, rhs: &MixedVector) -> MixedVector {
        self.try_add(rhs).expect("mixed vectors of different shape")
    }
}

impl Sub for &MixedVector {
    type Output = MixedVector;

    fn sub(self, rhs: &MixedVector) -> MixedVector {
        self.try_sub(rhs).expect("mixed vectors of different shape")
    }
}

fn fmt_digits(f: &mut fmt::Formatter<'_>, digits: &[u8]) -> fmt::Result {
    if digits.is_empty() {
        return write!(f, "-");
    }
    for (i, d) in digits.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{}", d)?;
    }
    Ok(())
}

impl fmt::Display for MixedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_digits(f, &self.bits)?;
        write!(f, " | ")?;
        fmt_digits(f, &self.quats)
    }
}

fn parse_digits(side: &str, max: u8, offset: usize) -> Result<Vec<u8>> {
    let side = side.trim();
    if side.is_empty() || side == "-" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (i, tok) in side.split_whitespace().enumerate() {
        let mut chars = tok.chars();
        let ch = chars.next().unwrap();
        match (ch.to_digit(10), chars.next()) {
            (Some(d), None) if d <= max as u32 => out.push(d as u8),
            _ => return Err(Error::InvalidSymbol { symbol: ch, position: offset + i + 1 }),
        }
    }
    Ok(out)
}

impl FromStr for MixedVector {
    type Err = Error;

    /// Parses `"1 0 | 3 2 1 0"`; an empty side is written `-`.
    fn from_str(s: &str) -> Result<Self> {
        let (left, right) =
            s.split_once('|').ok_or_else(|| Error::InvalidArgument(format!("missing '|' separator in {:?}", s)))?;
        let bits = parse_digits(left, 1, 0)?;
        let quats = parse_digits(right, 3, bits.len())?;
        Ok(MixedVector { bits, quats })
    }
}

/// Ordered set of 1-based coordinate positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CoordSet {
    positions: Vec<usize>,
}

impl CoordSet {
    /// Sorts the positions; rejects duplicates and anything outside `1..=n`.
    pub fn new(mut positions: Vec<usize>, n: usize) -> Result<Self> {
        positions.sort_unstable();
        for w in positions.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidArgument(format!("repeated coordinate {}", w[0])));
            }
        }
        if let Some(&bad) = positions.iter().find(|&&p| p == 0 || p > n) {
            return Err(Error::IndexOutOfRange { index: bad, len: n });
        }
        Ok(CoordSet { positions })
    }

    pub(crate) fn from_sorted(positions: Vec<usize>) -> Self {
        debug_assert!(positions.windows(2).all(|w| w[0] < w[1]));
        CoordSet { positions }
    }

    pub fn full(n: usize) -> Self {
        CoordSet { positions: (1..=n).collect() }
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.positions.binary_search(&i).is_ok()
    }

    /// Membership mask over `1..=n`, indexed 0-based.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &p in &self.positions {
            if p <= n {
                m[p - 1] = true;
            }
        }
        m
    }

    pub fn complement(&self, n: usize) -> CoordSet {
        let mask = self.mask(n);
        CoordSet { positions: (1..=n).filter(|&i| !mask[i - 1]).collect() }
    }
}

impl fmt::Display for CoordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.positions.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "}}")
    }
}

impl Serialize for BinaryVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Serialize for MixedVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn gray(v: &MixedVector) -> BinaryVector {
    let mut bits = Vec::with_capacity(v.binary_len());
    bits.extend_from_slice(&v.bits);
    for &q in &v.quats {
        bits.extend_from_slice(&phi(q));
    }
    BinaryVector { bits }
}

pub fn gray_inverse(v: &BinaryVector, alpha: usize) -> Result<MixedVector> {
    if alpha > v.len() {
        return Err(Error::shape(format!("length ≥ {}", alpha), v.len()));
    }
    let rest = v.len() - alpha;
    if !rest.is_multiple_of(2) {
        return Err(Error::OddQuaternaryLength(rest));
    }
    let bits = v.bits[..alpha].to_vec();
    let quats = v.bits[alpha..].chunks_exact(2).map(|p| phi_inverse([p[0], p[1]])).collect();
    Ok(MixedVector { bits, quats })
}

pub fn lee_weight(v: &MixedVector) -> usize {
    v.bits.iter().filter(|&&b| b != 0).count() + v.quats.iter().map(|&q| lee_weight_z4(q)).sum::<usize>()
}

pub fn lee_distance(u: &MixedVector, v: &MixedVector) -> Result<usize> {
    Ok(lee_weight(&u.try_sub(v)?))
}

pub fn hamming_weight(v: &BinaryVector) -> usize {
    v.weight()
}

pub fn hamming_distance(u: &BinaryVector, v: &BinaryVector) -> Result<usize> {
    Ok(u.try_add(v)?.weight())
}

/// Z4 inner product: twice the binary dot product plus the quaternary dot product.
pub fn inner_product(u: &MixedVector, v: &MixedVector) -> Result<u8> {
    u.check_shape(v)?;
    Ok(inner_product_unchecked(u, v))
}

pub(crate) fn inner_product_unchecked(u: &MixedVector, v: &MixedVector) -> u8 {
    let binary: u32 = u.bits.iter().zip(&v.bits).map(|(&a, &b)| (a & b) as u32).sum();
    let quaternary: u32 = u.quats.iter().zip(&v.quats).map(|(&a, &b)| (a * b) as u32).sum();
    ((2 * binary + quaternary) & 3) as u8
}

/// Entries of `v` at the positions of `set`, in increasing position order.
pub fn restrict(v: &BinaryVector, set: &CoordSet) -> Result<BinaryVector> {
    if let Some(&bad) = set.positions.iter().find(|&&p| p == 0 || p > v.len()) {
        return Err(Error::IndexOutOfRange { index: bad, len: v.len() });
    }
    Ok(BinaryVector { bits: set.positions.iter().map(|&p| v.bits[p - 1]).collect() })
}
