//! The Z2Z4-additive code object.

mod io;
mod standard;

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::vector::{gray, gray_inverse, inner_product_unchecked, lee_weight, BinaryVector, CoordSet, MixedVector};

pub use io::{format_code, parse_code};
pub use standard::{standard_form, Blocks, StandardForm};

/// Default bound on the number of codewords any exhaustive routine will visit.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 24;

/// Type (α, β; γ, δ; κ) of a Z2Z4-additive code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeType {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub delta: usize,
    pub kappa: usize,
}

impl CodeType {
    pub fn new(alpha: usize, beta: usize, gamma: usize, delta: usize, kappa: usize) -> Result<Self> {
        let ct = CodeType { alpha, beta, gamma, delta, kappa };
        if ct.is_valid() {
            Ok(ct)
        } else {
            Err(Error::InvalidArgument(format!("invalid code type {}", ct)))
        }
    }

    pub fn is_valid(&self) -> bool {
        self.kappa <= self.alpha.min(self.gamma) && self.gamma + self.delta <= self.beta + self.kappa
    }

    /// Type of the additive dual.
    pub fn dual(&self) -> CodeType {
        dual_type(*self)
    }

    pub fn length(&self) -> usize {
        self.alpha + 2 * self.beta
    }

    /// log2 of the number of codewords, γ + 2δ.
    pub fn dimension(&self) -> usize {
        self.gamma + 2 * self.delta
    }

    /// Width β + κ − γ − δ of the unconstrained quaternary block.
    pub fn free_quaternary(&self) -> usize {
        self.beta + self.kappa - self.gamma - self.delta
    }
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{},{};{})", self.alpha, self.beta, self.gamma, self.delta, self.kappa)
    }
}

pub fn dual_type(ct: CodeType) -> CodeType {
    CodeType {
        alpha: ct.alpha,
        beta: ct.beta,
        gamma: ct.alpha + ct.gamma - 2 * ct.kappa,
        delta: ct.beta + ct.kappa - ct.gamma - ct.delta,
        kappa: ct.alpha - ct.kappa,
    }
}

#[derive(Debug)]
pub struct Z2Z4Code {
    generators: Vec<MixedVector>,
    std: StandardForm,
    std_parity: Vec<MixedVector>,
    parity: Vec<MixedVector>,
    binary_perm: Permutation,
    min_distance: OnceLock<usize>,
}

impl Clone for Z2Z4Code {
    fn clone(&self) -> Self {
        let min_distance = OnceLock::new();
        if let Some(&d) = self.min_distance.get() {
            let _ = min_distance.set(d);
        }
        Z2Z4Code {
            generators: self.generators.clone(),
            std: self.std.clone(),
            std_parity: self.std_parity.clone(),
            parity: self.parity.clone(),
            binary_perm: self.binary_perm.clone(),
            min_distance,
        }
    }
}

impl Z2Z4Code {
    /// Code generated by `rows`, all of shape (α, β).
    pub fn new(rows: Vec<MixedVector>) -> Result<Self> {
        let std = standard_form(&rows)?;
        let std_parity = std.dual();
        let parity = std_parity.iter().map(|h| std.to_original(h)).collect();
        let binary_perm = std.binary_perm();
        Ok(Z2Z4Code { generators: rows, std, std_parity, parity, binary_perm, min_distance: OnceLock::new() })
    }

    pub fn generators(&self) -> &[MixedVector] {
        &self.generators
    }

    pub fn standard_form(&self) -> &StandardForm {
        &self.std
    }

    pub fn code_type(&self) -> CodeType {
        self.std.code_type()
    }

    pub fn alpha(&self) -> usize {
        self.code_type().alpha
    }

    pub fn beta(&self) -> usize {
        self.code_type().beta
    }

    /// Binary length α + 2β.
    pub fn length(&self) -> usize {
        self.code_type().length()
    }

    /// Parity-check rows in the caller's coordinates.
    pub fn parity_rows(&self) -> &[MixedVector] {
        &self.parity
    }

    /// Parity-check rows in standard-form coordinates.
    pub fn standard_parity_rows(&self) -> &[MixedVector] {
        &self.std_parity
    }

    /// Binary coordinate permutation taking the caller's coordinates to
    /// standard-form coordinates.
    pub fn binary_perm(&self) -> &Permutation {
        &self.binary_perm
    }

    /// log2 |C|.
    pub fn dimension(&self) -> usize {
        self.code_type().dimension()
    }

    pub fn size(&self) -> u128 {
        1u128 << self.dimension()
    }

    pub fn contains_mixed(&self, v: &MixedVector) -> Result<bool> {
        if v.alpha() != self.alpha() || v.beta() != self.beta() {
            return Err(Error::shape(
                format!("(α={}, β={})", self.alpha(), self.beta()),
                format!("(α={}, β={})", v.alpha(), v.beta()),
            ));
        }
        Ok(self.parity.iter().all(|h| inner_product_unchecked(h, v) == 0))
    }

    pub fn contains(&self, x: &BinaryVector) -> Result<bool> {
        if x.len() != self.length() {
            return Err(Error::shape(self.length(), x.len()));
        }
        Ok(self.contains_unchecked(x))
    }

    pub(crate) fn contains_unchecked(&self, x: &BinaryVector) -> bool {
        let v = gray_inverse(x, self.alpha()).expect("length checked");
        self.parity.iter().all(|h| inner_product_unchecked(h, &v) == 0)
    }

    /// Syndrome of a mixed vector: one Z4 entry per parity row.
    pub fn syndrome_mixed(&self, v: &MixedVector) -> MixedVector {
        MixedVector::reduced(Vec::new(), self.parity.iter().map(|h| inner_product_unchecked(h, v)).collect())
    }

    fn check_cap(&self, cap: u128) -> Result<()> {
        let size = self.size();
        if size > cap {
            Err(Error::CapExceeded { needed: size, cap })
        } else {
            Ok(())
        }
    }

    /// Every codeword of the additive code, in the caller's coordinates.
    ///
    /// The order is the counting order of the coefficient vector over the
    /// standard-form rows (order-two coefficients in Z2, order-four in Z4).
    pub fn codewords_with_cap(&self, cap: u128) -> Result<Codewords<'_>> {
        self.check_cap(cap)?;
        Ok(Codewords { code: self, next: 0, total: self.size() })
    }

    pub fn codewords(&self) -> Result<Codewords<'_>> {
        self.codewords_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    /// Gray images of every codeword.
    pub fn binary_codewords(&self) -> Result<Vec<BinaryVector>> {
        Ok(self.codewords()?.map(|c| gray(&c)).collect())
    }

    /// Minimum Lee weight over nonzero codewords, which by the Gray isometry is
    /// the minimum Hamming distance of the binary image.
    pub fn min_distance_with_cap(&self, cap: u128) -> Result<usize> {
        if let Some(&d) = self.min_distance.get() {
            return Ok(d);
        }
        let d = self.codewords_with_cap(cap)?.filter(|c| !c.is_zero()).map(|c| lee_weight(&c)).min().unwrap_or(0);
        let _ = self.min_distance.set(d);
        Ok(d)
    }

    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    /// Error-correcting capability ⌊(d − 1)/2⌋.
    pub fn error_capability(&self) -> Result<usize> {
        Ok(self.min_distance()?.saturating_sub(1) / 2)
    }

    /// Whether the Gray image is closed under binary addition, decided by
    /// testing `2 (v_j * v_k) ∈ C` for every pair of order-four generators.
    pub fn is_binary_linear(&self) -> bool {
        let four = self.std.order_four_rows();
        for j in 0..four.len() {
            for k in j + 1..four.len() {
                let w = four[j].hadamard(&four[k]).expect("same shape").scale(2);
                if !self.std_parity.iter().all(|h| inner_product_unchecked(h, &w) == 0) {
                    return false;
                }
            }
        }
        true
    }

    /// Standard information set in standard-form coordinates.
    pub fn standard_info_set(&self) -> CoordSet {
        crate::encode::standard_info_set(self.code_type())
    }

    /// Standard information set carried back to the caller's coordinates.
    pub fn info_set(&self) -> CoordSet {
        let inv = self.binary_perm.inverse();
        let mut positions: Vec<usize> = self.standard_info_set().positions().iter().map(|&j| inv.image_of(j)).collect();
        positions.sort_unstable();
        CoordSet::from_sorted(positions)
    }

    /// Codeword for the coefficient index `k` in `0..|C|`, standard coordinates.
    fn combination(&self, mut k: u128) -> MixedVector {
        let ct = self.code_type();
        let mut acc = MixedVector::zeros(ct.alpha, ct.beta);
        let rows = self.std.rows();
        for row in rows[..ct.gamma].iter().rev() {
            acc.add_scaled(row, (k & 1) as u8);
            k >>= 1;
        }
        for row in rows[ct.gamma..].iter().rev() {
            acc.add_scaled(row, (k & 3) as u8);
            k >>= 2;
        }
        acc
    }
}

/// Iterator over the codewords of a [`Z2Z4Code`].
pub struct Codewords<'a> {
    code: &'a Z2Z4Code,
    next: u128,
    total: u128,
}

impl Iterator for Codewords<'_> {
    type Item = MixedVector;

    fn next(&mut self) -> Option<MixedVector> {
        if self.next >= self.total {
            return None;
        }
        let v = self.code.combination(self.next);
        self.next += 1;
        Some(self.code.std.to_original(&v))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = (self.total - self.next) as usize;
        (rest, Some(rest))
    }
}
