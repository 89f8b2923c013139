//! Reduction of a generator matrix to the block standard form
//!
//! ```text
//!   ( I_κ  T_b | 2T_2  0        0   )
//!   ( 0    0   | 2T_1  2I_{γ-κ} 0   )
//!   ( 0    S_b | S_q   R        I_δ )
//! ```
//!
//! using only row operations (additions and scaling by the unit 3) and column
//! permutations that stay inside the binary or the quaternary part.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::vector::MixedVector;

use super::CodeType;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardForm {
    ctype: CodeType,
    rows: Vec<MixedVector>,
    tb: Vec<Vec<u8>>,
    sb: Vec<Vec<u8>>,
    t1: Vec<Vec<u8>>,
    t2: Vec<Vec<u8>>,
    r: Vec<Vec<u8>>,
    sq: Vec<Vec<u8>>,
    col_perm: Permutation,
}

/// Block matrices of a standard form, serialisable for reports.
#[derive(Debug, Clone, Serialize)]
pub struct Blocks<'a> {
    pub tb: &'a [Vec<u8>],
    pub sb: &'a [Vec<u8>],
    pub t1: &'a [Vec<u8>],
    pub t2: &'a [Vec<u8>],
    pub r: &'a [Vec<u8>],
    pub sq: &'a [Vec<u8>],
}

struct Reducer {
    alpha: usize,
    beta: usize,
    // position -> original column (0-based, within its part)
    bin_src: Vec<usize>,
    quat_src: Vec<usize>,
}

impl Reducer {
    fn swap_quat(&mut self, groups: &mut [&mut Vec<MixedVector>], a: usize, b: usize) {
        if a == b {
            return;
        }
        for rows in groups.iter_mut() {
            for row in rows.iter_mut() {
                row.quats_mut().swap(a, b);
            }
        }
        self.quat_src.swap(a, b);
    }

    fn swap_bin(&mut self, groups: &mut [&mut Vec<MixedVector>], a: usize, b: usize) {
        if a == b {
            return;
        }
        for rows in groups.iter_mut() {
            for row in rows.iter_mut() {
                row.bits_mut().swap(a, b);
            }
        }
        self.bin_src.swap(a, b);
    }

    fn col_perm(&self) -> Permutation {
        let n = self.alpha + self.beta;
        let mut image = vec![0; n];
        for (pos, &src) in self.bin_src.iter().enumerate() {
            image[src] = pos;
        }
        for (pos, &src) in self.quat_src.iter().enumerate() {
            image[self.alpha + src] = self.alpha + pos;
        }
        Permutation::from_zero_based(image)
    }
}

/// Reduces `rows` to standard form.
///
/// Order-four pivots are taken from the rightmost quaternary column holding a
/// unit, order-two quaternary pivots likewise from the right, and binary
/// pivots from the left; rows are searched top-down. A matrix already in
/// standard form is returned unchanged with the identity column permutation.
pub fn standard_form(rows: &[MixedVector]) -> Result<StandardForm> {
    let first = rows.first().ok_or(Error::EmptyCode)?;
    let (alpha, beta) = (first.alpha(), first.beta());
    for row in rows {
        if !row.same_shape(first) {
            return Err(Error::shape(
                format!("(α={}, β={})", alpha, beta),
                format!("(α={}, β={})", row.alpha(), row.beta()),
            ));
        }
    }

    let mut rest: Vec<MixedVector> = Vec::new();
    for row in rows {
        if !row.is_zero() && !rest.contains(row) {
            rest.push(row.clone());
        }
    }
    if rest.is_empty() {
        return Err(Error::EmptyCode);
    }

    let mut red = Reducer { alpha, beta, bin_src: (0..alpha).collect(), quat_src: (0..beta).collect() };

    // Order-four rows: a unit pivot per row, packed into the trailing columns.
    let mut four: Vec<MixedVector> = Vec::new();
    let mut free = beta;
    loop {
        let found = (0..free).rev().find_map(|c| rest.iter().position(|r| r.quats()[c] & 1 == 1).map(|ri| (c, ri)));
        let Some((c, ri)) = found else { break };
        let slot = free - 1;
        red.swap_quat(&mut [&mut rest, &mut four], c, slot);
        let mut pivot = rest.remove(ri);
        if pivot.quats()[slot] == 3 {
            pivot = pivot.scale(3);
        }
        for row in rest.iter_mut().chain(four.iter_mut()) {
            let k = row.quats()[slot];
            if k != 0 {
                row.add_scaled(&pivot, 4 - k);
            }
        }
        four.push(pivot);
        free -= 1;
    }
    four.reverse();
    let delta = four.len();

    // Order-two rows: binary echelon form with pivots moved to the front.
    let mut two: Vec<MixedVector> = rest.into_iter().filter(|r| !r.is_zero()).collect();
    let mut kappa = 0;
    while kappa < alpha {
        let found =
            (kappa..alpha).find_map(|c| two[kappa..].iter().position(|r| r.bits()[c] == 1).map(|ri| (c, kappa + ri)));
        let Some((c, ri)) = found else { break };
        red.swap_bin(&mut [&mut two, &mut four], c, kappa);
        two.swap(kappa, ri);
        let pivot = two[kappa].clone();
        for (i, row) in two.iter_mut().enumerate() {
            if i != kappa && row.bits()[kappa] == 1 {
                row.add_scaled(&pivot, 1);
            }
        }
        kappa += 1;
    }

    // Remaining order-two rows have zero binary part; place 2I left of I_δ.
    let mut lower: Vec<MixedVector> = two.split_off(kappa).into_iter().filter(|r| !r.is_zero()).collect();
    let mut upper = two;
    let mut placed: Vec<MixedVector> = Vec::new();
    let mut free = beta - delta;
    loop {
        let found = (0..free).rev().find_map(|c| lower.iter().position(|r| r.quats()[c] == 2).map(|ri| (c, ri)));
        let Some((c, ri)) = found else { break };
        let slot = free - 1;
        red.swap_quat(&mut [&mut upper, &mut lower, &mut placed, &mut four], c, slot);
        let pivot = lower.remove(ri);
        for row in upper.iter_mut().chain(lower.iter_mut()).chain(placed.iter_mut()) {
            if row.quats()[slot] == 2 {
                row.add_scaled(&pivot, 1);
            }
        }
        placed.push(pivot);
        free -= 1;
    }
    placed.reverse();
    let gamma = kappa + placed.len();

    // Clear the I_κ columns of the order-four rows and bring R into {0,1}.
    let m = beta + kappa - gamma - delta;
    for v in four.iter_mut() {
        for (i, u) in upper.iter().enumerate() {
            if v.bits()[i] == 1 {
                v.add_scaled(u, 1);
            }
        }
        for (i, u) in placed.iter().enumerate() {
            if v.quats()[m + i] >= 2 {
                v.add_scaled(u, 1);
            }
        }
    }

    let ctype = CodeType { alpha, beta, gamma, delta, kappa };
    let mut assembled = upper;
    assembled.extend(placed);
    assembled.extend(four);
    Ok(StandardForm::from_parts(ctype, assembled, red.col_perm()))
}

impl StandardForm {
    fn from_parts(ctype: CodeType, rows: Vec<MixedVector>, col_perm: Permutation) -> Self {
        let CodeType { alpha, gamma, delta, kappa, .. } = ctype;
        let m = ctype.free_quaternary();
        let tb = rows[..kappa].iter().map(|r| r.bits()[kappa..alpha].to_vec()).collect();
        let t2 = rows[..kappa].iter().map(|r| r.quats()[..m].iter().map(|q| q / 2).collect()).collect();
        let t1 = rows[kappa..gamma].iter().map(|r| r.quats()[..m].iter().map(|q| q / 2).collect()).collect();
        let four = &rows[gamma..gamma + delta];
        let sb = four.iter().map(|r| r.bits()[kappa..alpha].to_vec()).collect();
        let sq = four.iter().map(|r| r.quats()[..m].to_vec()).collect();
        let r = four.iter().map(|r| r.quats()[m..m + gamma - kappa].to_vec()).collect();
        StandardForm { ctype, rows, tb, sb, t1, t2, r, sq, col_perm }
    }

    pub fn code_type(&self) -> CodeType {
        self.ctype
    }

    /// Assembled generator rows: κ rows, then γ−κ rows, then δ rows.
    pub fn rows(&self) -> &[MixedVector] {
        &self.rows
    }

    pub fn order_two_rows(&self) -> &[MixedVector] {
        &self.rows[..self.ctype.gamma]
    }

    pub fn order_four_rows(&self) -> &[MixedVector] {
        &self.rows[self.ctype.gamma..]
    }

    /// Column permutation on the α+β mixed coordinates taking the original
    /// coordinates to the standard-form ones.
    pub fn col_perm(&self) -> &Permutation {
        &self.col_perm
    }

    pub fn blocks(&self) -> Blocks<'_> {
        Blocks { tb: &self.tb, sb: &self.sb, t1: &self.t1, t2: &self.t2, r: &self.r, sq: &self.sq }
    }

    /// Column permutation lifted to the α+2β binary coordinates of the Gray image.
    pub fn binary_perm(&self) -> Permutation {
        let alpha = self.ctype.alpha;
        let n = alpha + 2 * self.ctype.beta;
        let mut image = vec![0; n];
        for (src, &dst) in self.col_perm.images0().iter().enumerate() {
            if src < alpha {
                image[src] = dst;
            } else {
                let (s, d) = (alpha + 2 * (src - alpha), alpha + 2 * (dst - alpha));
                image[s] = d;
                image[s + 1] = d + 1;
            }
        }
        Permutation::from_zero_based(image)
    }

    /// Maps a vector in original coordinates to standard-form coordinates.
    pub fn to_standard(&self, v: &MixedVector) -> MixedVector {
        let alpha = self.ctype.alpha;
        let mut out = MixedVector::zeros(v.alpha(), v.beta());
        for (src, &dst) in self.col_perm.images0().iter().enumerate() {
            if src < alpha {
                out.bits_mut()[dst] = v.bits()[src];
            } else {
                out.quats_mut()[dst - alpha] = v.quats()[src - alpha];
            }
        }
        out
    }

    /// Maps a vector in standard-form coordinates back to original coordinates.
    pub fn to_original(&self, v: &MixedVector) -> MixedVector {
        let alpha = self.ctype.alpha;
        let mut out = MixedVector::zeros(v.alpha(), v.beta());
        for (src, &dst) in self.col_perm.images0().iter().enumerate() {
            if src < alpha {
                out.bits_mut()[src] = v.bits()[dst];
            } else {
                out.quats_mut()[src - alpha] = v.quats()[dst - alpha];
            }
        }
        out
    }

    /// Rows of the parity-check matrix, in standard-form coordinates:
    ///
    /// ```text
    ///   ( T_b^t  I_{α-κ} | 0  0         2S_b^t          )
    ///   ( 0      0       | 0  2I_{γ-κ}  2R^t            )
    ///   ( T_2^t  0       | I  T_1^t     -(S_q + R T_1)^t )
    /// ```
    pub fn dual(&self) -> Vec<MixedVector> {
        let CodeType { alpha, beta, gamma, delta, kappa } = self.ctype;
        let m = self.ctype.free_quaternary();
        let g2 = gamma - kappa;
        let mut out = Vec::with_capacity(alpha - kappa + g2 + m);

        for i in 0..alpha - kappa {
            let mut h = MixedVector::zeros(alpha, beta);
            for l in 0..kappa {
                h.bits_mut()[l] = self.tb[l][i];
            }
            h.bits_mut()[kappa + i] = 1;
            for j in 0..delta {
                h.quats_mut()[m + g2 + j] = 2 * self.sb[j][i];
            }
            out.push(h);
        }
        for i in 0..g2 {
            let mut h = MixedVector::zeros(alpha, beta);
            h.quats_mut()[m + i] = 2;
            for j in 0..delta {
                h.quats_mut()[m + g2 + j] = 2 * self.r[j][i];
            }
            out.push(h);
        }
        for i in 0..m {
            let mut h = MixedVector::zeros(alpha, beta);
            for l in 0..kappa {
                h.bits_mut()[l] = self.t2[l][i];
            }
            h.quats_mut()[i] = 1;
            for c in 0..g2 {
                h.quats_mut()[m + c] = self.t1[c][i];
            }
            for j in 0..delta {
                let rt1: u32 = (0..g2).map(|c| self.r[j][c] as u32 * self.t1[c][i] as u32).sum();
                let s = (self.sq[j][i] as u32 + rt1) % 4;
                h.quats_mut()[m + g2 + j] = ((4 - s) % 4) as u8;
            }
            out.push(h);
        }
        out
    }
}

impl fmt::Display for StandardForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i == self.ctype.gamma && i > 0 {
                writeln!(f, "{}", "-".repeat(row.to_string().len()))?;
            }
            writeln!(f, "{}", row)?;
        }
        Ok(())
    }
}
