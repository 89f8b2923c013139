//! Systematic encoding on the standard information set J = J1 ∪ J2 ∪ J3.
//!
//! For an information vector a = (b, c, d) with |b| = κ, |c| = γ − κ and
//! |d| = 2δ, the codeword x = Φ⁻¹(a)·G generally disagrees with `c` on the
//! J2 positions. The correction η flips exactly those order-two coefficients,
//! and the encoder returns Φ((b, c + η, Φ⁻¹(d))·G).

use crate::code::{CodeType, StandardForm, Z2Z4Code};
use crate::error::{Error, Result};
use crate::vector::{gray, phi1, phi2, restrict, BinaryVector, CoordSet, MixedVector};

/// J1 = {1..κ}; J2 = first bits of the γ−κ quaternary coordinates left of the
/// last δ; J3 = both bits of each of the last δ quaternary coordinates.
pub fn standard_info_set(ct: CodeType) -> CoordSet {
    let CodeType { alpha, beta, gamma, delta, kappa } = ct;
    let mut positions: Vec<usize> = (1..=kappa).collect();
    positions.extend(j2_positions(ct));
    for coord in alpha + beta - delta + 1..=alpha + beta {
        positions.push(phi1(alpha, coord));
        positions.push(phi2(alpha, coord));
    }
    debug_assert_eq!(positions.len(), gamma + 2 * delta);
    CoordSet::from_sorted(positions)
}

/// The positions j_1 < … < j_{γ−κ} of J2.
pub fn j2_positions(ct: CodeType) -> Vec<usize> {
    let base = ct.alpha + ct.free_quaternary();
    (1..=ct.gamma - ct.kappa).map(|i| phi1(ct.alpha, base + i)).collect()
}

fn check_info_len(a: &BinaryVector, ct: CodeType) -> Result<()> {
    if a.len() != ct.dimension() {
        return Err(Error::shape(format!("information vector of length {}", ct.dimension()), a.len()));
    }
    Ok(())
}

/// Φ⁻¹(a) = (b, c, Φ⁻¹(d)) ∈ Z2^γ × Z4^δ.
pub fn info_to_mixed(a: &BinaryVector, ct: CodeType) -> Result<MixedVector> {
    check_info_len(a, ct)?;
    crate::vector::gray_inverse(a, ct.gamma)
}

/// Coefficient vector times the standard-form generator matrix.
fn times_generator(coeffs: &MixedVector, std: &StandardForm) -> MixedVector {
    let ct = std.code_type();
    let mut x = MixedVector::zeros(ct.alpha, ct.beta);
    let (two, four) = (std.order_two_rows(), std.order_four_rows());
    for (row, &b) in two.iter().zip(coeffs.bits()) {
        x.add_scaled(row, b);
    }
    for (row, &q) in four.iter().zip(coeffs.quats()) {
        x.add_scaled(row, q);
    }
    x
}

/// η_i = 0 when bit j_i of Φ(Φ⁻¹(a)·G) equals c_i, 1 otherwise.
pub fn eta(a: &BinaryVector, std: &StandardForm) -> Result<BinaryVector> {
    let ct = std.code_type();
    let coeffs = info_to_mixed(a, ct)?;
    let x = gray(&times_generator(&coeffs, std));
    Ok(eta_from_image(a, &x, ct))
}

fn eta_from_image(a: &BinaryVector, x: &BinaryVector, ct: CodeType) -> BinaryVector {
    let bits =
        j2_positions(ct).into_iter().enumerate().map(|(i, j)| u8::from(x.get(j) != a.get(ct.kappa + i + 1))).collect();
    BinaryVector::from_bits_unchecked(bits)
}

/// Systematic encoding in standard-form coordinates.
///
/// Costs one product by the generator matrix when η = 0 and two otherwise.
pub fn encode_standard(a: &BinaryVector, std: &StandardForm) -> Result<BinaryVector> {
    let ct = std.code_type();
    let coeffs = info_to_mixed(a, ct)?;
    let first = gray(&times_generator(&coeffs, std));
    let eta = eta_from_image(a, &first, ct);
    if eta.weight() == 0 {
        return Ok(first);
    }
    let mut shifted = coeffs;
    for (i, &e) in eta.bits().iter().enumerate() {
        shifted.bits_mut()[ct.kappa + i] ^= e;
    }
    Ok(gray(&times_generator(&shifted, std)))
}

/// Systematic encoding for `code.info_set()` in the caller's coordinates:
/// `restrict(encode(a), code.info_set()) == a`.
pub fn encode(a: &BinaryVector, code: &Z2Z4Code) -> Result<BinaryVector> {
    let std = code.standard_form();
    check_info_len(a, std.code_type())?;
    let perm = code.binary_perm();
    if perm.is_identity() {
        return encode_standard(a, std);
    }
    let inv = perm.inverse();
    let orig = code.info_set();
    let a_std: Vec<u8> = code
        .standard_info_set()
        .positions()
        .iter()
        .map(|&j| {
            let rank =
                orig.positions().binary_search(&inv.image_of(j)).expect("info set is closed under the permutation");
            a.bits()[rank]
        })
        .collect();
    let x = encode_standard(&BinaryVector::from_bits_unchecked(a_std), std)?;
    Ok(inv.apply_unchecked(&x))
}

/// Information vector of a received word: its restriction to the info set.
pub fn info_of(y: &BinaryVector, code: &Z2Z4Code) -> Result<BinaryVector> {
    restrict(y, &code.info_set())
}
