//! Z2Z4-additive codes and their binary Gray images.
//!
//! The crate covers the algebra of Z2^α × Z4^β ([`vector`]), coordinate
//! permutations ([`perm`]), the code object with its standard form and
//! parity-check matrix ([`code`]), systematic encoding ([`encode`]), two
//! permutation decoders with PD-set tooling ([`decode`]), and a seeded
//! channel simulator ([`sim`]).

pub mod cli;
pub mod code;
pub mod decode;
pub mod encode;
pub mod error;
pub mod perm;
pub mod presets;
pub mod sim;
pub mod vector;

pub use code::{dual_type, standard_form, CodeType, StandardForm, Z2Z4Code};
pub use decode::{
    decode_alternative, decode_syndrome, find_syndrome_counterexample, info_correct, search_pd_set, syndrome,
    verify_pd_set, DecodeOutcome, Decoded, Method, PdSet, PdVerdict,
};
pub use encode::{encode, eta, standard_info_set};
pub use error::{Error, Result};
pub use perm::{format_cycles, generate_group, is_automorphism, parse_cycles, Permutation};
pub use sim::{simulate, ErrorModel, SimReport};
pub use vector::{
    gray, gray_inverse, hamming_distance, hamming_weight, inner_product, lee_distance, lee_weight, restrict,
    BinaryVector, CoordSet, MixedVector,
};
