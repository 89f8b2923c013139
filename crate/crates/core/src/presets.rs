//! Built-in codes and permutation sets.

use crate::code::Z2Z4Code;
use crate::decode::PdSet;
use crate::error::{Error, Result};
use crate::perm::{generate_group, parse_cycles, Permutation, DEFAULT_GROUP_CAP};

fn code_from(lines: &[&str]) -> Z2Z4Code {
    Z2Z4Code::new(lines.iter().map(|l| l.parse().expect("preset row")).collect()).expect("preset code")
}

/// Hadamard Z4-linear code of length 8, type (0,4;0,2;0).
pub fn example3_code() -> Z2Z4Code {
    code_from(&["- | 3 2 1 0", "- | 2 3 0 1"])
}

/// Hadamard Z4-linear code of length 16, type (0,8;1,2;0).
pub fn example4_code() -> Z2Z4Code {
    code_from(&["- | 2 2 2 0 0 2 0 0", "- | 3 2 1 2 3 0 1 0", "- | 2 3 0 3 2 1 0 1"])
}

/// Mixed-alphabet code of type (2,3;2,1;1) whose matrix is in standard form.
pub fn mixed_code() -> Z2Z4Code {
    code_from(&["1 1 | 2 0 0", "0 0 | 2 2 0", "0 1 | 1 1 1"])
}

/// A binary nonlinear code of type (0,5;1,2;0) with d = 4.
pub fn nonlinear_code() -> Z2Z4Code {
    code_from(&["- | 2 0 2 0 0", "- | 3 3 1 1 0", "- | 3 2 0 0 1"])
}

/// Hadamard Z4-linear code of length 32, type (0,16;0,3;0): the columns of
/// the generator matrix are (1, a, b) for all a, b in Z4.
pub fn hadamard32_code() -> Z2Z4Code {
    let mut rows = vec![vec![1u8; 16], Vec::with_capacity(16), Vec::with_capacity(16)];
    for a in 0..4u8 {
        for b in 0..4u8 {
            rows[1].push(a);
            rows[2].push(b);
        }
    }
    Z2Z4Code::new(rows.into_iter().map(|q| crate::vector::MixedVector::new(Vec::new(), q).unwrap()).collect())
        .expect("preset code")
}

pub fn theta() -> Permutation {
    parse_cycles("(1,3,5,7)(2,4,6,8)", 8).unwrap()
}

/// ϑ1..ϑ4, permutation automorphisms of [`example4_code`].
pub fn example4_thetas() -> [Permutation; 4] {
    [
        parse_cycles("(1,5)(2,6)(3,11)(4,12)(9,13)(10,14)(7,15)(8,16)", 16).unwrap(),
        parse_cycles("(1,3,5,11)(2,4,6,12)(9,7,13,15)(10,8,14,16)", 16).unwrap(),
        parse_cycles("(9,13)(10,14)(7,15)(8,16)", 16).unwrap(),
        parse_cycles("(1,9)(2,10)(5,13)(6,14)", 16).unwrap(),
    ]
}

/// {id, ϑ, ϑ²} on the standard information set {5,6,7,8}, radius 1.
pub fn example3_pd_set() -> PdSet {
    let t = theta();
    let t2 = t.compose(&t).unwrap();
    let code = example3_code();
    PdSet::new(vec![Permutation::identity(8), t, t2], code.info_set(), 1).unwrap()
}

/// The subgroup ⟨ϑ1, ϑ2, ϑ4⟩ on {11,13,14,15,16}, radius 3.
pub fn example4_pd_set() -> PdSet {
    let [t1, t2, _, t4] = example4_thetas();
    let group = generate_group(&[t1, t2, t4], 16, DEFAULT_GROUP_CAP).unwrap();
    PdSet::new(group, example4_code().info_set(), 3).unwrap()
}

pub const CODE_NAMES: &[&str] = &["example3", "example4", "mixed", "nonlinear", "hadamard32"];

pub fn code_by_name(name: &str) -> Option<Z2Z4Code> {
    match name {
        "example3" => Some(example3_code()),
        "example4" => Some(example4_code()),
        "mixed" => Some(mixed_code()),
        "nonlinear" => Some(nonlinear_code()),
        "hadamard32" => Some(hadamard32_code()),
        _ => None,
    }
}

pub fn pd_set_by_name(name: &str) -> Result<PdSet> {
    match name {
        "example3" => Ok(example3_pd_set()),
        "example4" => Ok(example4_pd_set()),
        _ => Err(Error::InvalidArgument(format!("no built-in PD-set named {:?}", name))),
    }
}
