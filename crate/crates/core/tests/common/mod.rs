//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls into the library's algebra; inputs and outputs are
//! plain bit and symbol vectors.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use z2z4::{BinaryVector, MixedVector, Z2Z4Code};

pub fn bv(s: &str) -> BinaryVector {
    s.parse().expect("bit string")
}

pub fn gray_pair(q: u8) -> [u8; 2] {
    match q % 4 {
        0 => [0, 0],
        1 => [0, 1],
        2 => [1, 1],
        _ => [1, 0],
    }
}

pub fn gray_bits(bits: &[u8], quats: &[u8]) -> Vec<u8> {
    let mut out = bits.to_vec();
    for &q in quats {
        out.extend_from_slice(&gray_pair(q));
    }
    out
}

pub fn lee(q: u8) -> usize {
    [0, 1, 2, 1][(q % 4) as usize]
}

pub fn mixed_inner(a_bits: &[u8], a_quats: &[u8], b_bits: &[u8], b_quats: &[u8]) -> u8 {
    let bin: u32 = a_bits.iter().zip(b_bits).map(|(&x, &y)| (x & y) as u32).sum();
    let quat: u32 = a_quats.iter().zip(b_quats).map(|(&x, &y)| x as u32 * y as u32).sum();
    ((2 * bin + quat) % 4) as u8
}

/// Every Z2 × Z4 combination of the rows, deduplicated, as (bits, quats).
pub fn span(alpha: usize, beta: usize, rows: &[(Vec<u8>, Vec<u8>)]) -> BTreeSet<(Vec<u8>, Vec<u8>)> {
    let mut set = BTreeSet::new();
    set.insert((vec![0; alpha], vec![0; beta]));
    for (rb, rq) in rows {
        let current: Vec<_> = set.iter().cloned().collect();
        for (b, q) in current {
            for k in 1..4u8 {
                let nb = b.iter().zip(rb).map(|(&x, &y)| (x + k * y) % 2).collect();
                let nq = q.iter().zip(rq).map(|(&x, &y)| (x + k * y) % 4).collect();
                set.insert((nb, nq));
            }
        }
    }
    set
}

fn raw_rows(code: &Z2Z4Code) -> Vec<(Vec<u8>, Vec<u8>)> {
    code.generators().iter().map(|r| (r.bits().to_vec(), r.quats().to_vec())).collect()
}

pub fn mixed_codewords(code: &Z2Z4Code) -> BTreeSet<(Vec<u8>, Vec<u8>)> {
    span(code.alpha(), code.beta(), &raw_rows(code))
}

/// Gray image of the span of the generator rows.
pub fn binary_image(code: &Z2Z4Code) -> BTreeSet<Vec<u8>> {
    mixed_codewords(code).iter().map(|(b, q)| gray_bits(b, q)).collect()
}

pub fn is_closed_under_xor(image: &BTreeSet<Vec<u8>>) -> bool {
    let words: Vec<_> = image.iter().collect();
    words.iter().all(|u| words.iter().all(|v| image.contains(&xor(u, v))))
}

pub fn xor(u: &[u8], v: &[u8]) -> Vec<u8> {
    u.iter().zip(v).map(|(a, b)| a ^ b).collect()
}

pub fn weight(u: &[u8]) -> usize {
    u.iter().filter(|&&b| b != 0).count()
}

pub fn min_distance(image: &BTreeSet<Vec<u8>>) -> usize {
    let words: Vec<_> = image.iter().collect();
    let mut d = usize::MAX;
    for (i, u) in words.iter().enumerate() {
        for v in &words[i + 1..] {
            d = d.min(weight(&xor(u, v)));
        }
    }
    d
}

/// All nearest codewords to `y`.
pub fn nearest(image: &BTreeSet<Vec<u8>>, y: &[u8]) -> Vec<Vec<u8>> {
    let best = image.iter().map(|c| weight(&xor(c, y))).min().expect("non-empty code");
    image.iter().filter(|c| weight(&xor(c, y)) == best).cloned().collect()
}

/// Supports (0-based) of all binary vectors of length `n` with weight ≤ `t`.
pub fn small_supports(n: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..t {
        let mut next = Vec::new();
        for s in &frontier {
            let start = s.last().map_or(0, |&l: &usize| l + 1);
            for i in start..n {
                let mut grown: Vec<usize> = s.clone();
                grown.push(i);
                next.push(grown);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

pub fn with_flips(x: &[u8], support: &[usize]) -> Vec<u8> {
    let mut y = x.to_vec();
    for &i in support {
        y[i] ^= 1;
    }
    y
}

pub fn to_bv(bits: &[u8]) -> BinaryVector {
    BinaryVector::from_bits(bits.to_vec()).expect("binary")
}

pub fn random_rows<R: Rng>(rng: &mut R, alpha: usize, beta: usize, k: usize) -> Vec<MixedVector> {
    (0..k)
        .map(|_| {
            let bits = (0..alpha).map(|_| rng.gen_range(0..2u8)).collect();
            let quats = (0..beta).map(|_| rng.gen_range(0..4u8)).collect();
            MixedVector::new(bits, quats).expect("valid row")
        })
        .collect()
}

/// A random code with at least one non-zero generator.
pub fn random_code<R: Rng>(rng: &mut R, max_alpha: usize, max_beta: usize, max_rows: usize) -> Z2Z4Code {
    loop {
        let alpha = rng.gen_range(0..=max_alpha);
        let beta = rng.gen_range(0..=max_beta);
        if alpha + beta == 0 {
            continue;
        }
        let k = rng.gen_range(1..=max_rows);
        let rows = random_rows(rng, alpha, beta, k);
        if let Ok(code) = Z2Z4Code::new(rows) {
            return code;
        }
    }
}

/// The fixed corpus used wherever a property is checked "on all test codes".
pub fn test_codes() -> Vec<(&'static str, Z2Z4Code)> {
    use z2z4::presets::*;
    let mut codes = vec![
        ("example3", example3_code()),
        ("example4", example4_code()),
        ("mixed", mixed_code()),
        ("nonlinear", nonlinear_code()),
        ("hadamard32", hadamard32_code()),
    ];
    let rows = |text: &[&str]| text.iter().map(|r| r.parse::<MixedVector>().unwrap()).collect::<Vec<_>>();
    // generators out of standard form, so the column permutation is non-trivial
    codes.push(("scrambled", Z2Z4Code::new(rows(&["1 0 1 | 2 1 0", "0 1 1 | 1 0 3", "1 1 0 | 0 2 2"])).unwrap()));
    codes.push(("z4-only", Z2Z4Code::new(rows(&["- | 1 1 1 1", "- | 0 2 0 2", "- | 0 1 3 2"])).unwrap()));
    codes.push((
        "binary-only",
        Z2Z4Code::new(rows(&["1 1 0 1 0 0 0 | -", "0 1 1 0 1 0 0 | -", "0 0 1 1 0 1 0 | -", "0 0 0 1 1 0 1 | -"]))
            .unwrap(),
    ));
    codes
}
