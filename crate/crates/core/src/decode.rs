//! Permutation decoding.
//!
//! Two decoders share the same skeleton: scan the PD-set (identity first),
//! move the received word with each permutation, and stop at the first one
//! whose information coordinates look error-free. They differ in the test:
//!
//! * [`decode_syndrome`] asks for a Lee syndrome of weight at most `t`. The
//!   test is only sound when γ = κ or the binary image is linear, so other
//!   codes are rejected.
//! * [`decode_alternative`] re-encodes the information coordinates and asks
//!   for a Hamming distance of at most `t` to the received word, which works
//!   for any systematic code.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::code::Z2Z4Code;
use crate::encode::{encode, j2_positions};
use crate::error::{Error, Result};
use crate::perm::{is_automorphism, parse_cycles, Permutation};
use crate::vector::{gray_inverse, lee_weight, restrict, BinaryVector, CoordSet, MixedVector};

/// Permutations intended to move every error of weight ≤ `radius` off `info_set`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PdSet {
    perms: Vec<Permutation>,
    info_set: CoordSet,
    radius: usize,
}

impl PdSet {
    /// Stores `perms` in the given order with duplicates removed and the
    /// identity moved (or inserted) at the front.
    pub fn new(perms: Vec<Permutation>, info_set: CoordSet, radius: usize) -> Result<Self> {
        let n = match perms.first() {
            Some(p) => p.degree(),
            None => return Err(Error::InvalidArgument("PD-set without permutations".into())),
        };
        if let Some(p) = perms.iter().find(|p| p.degree() != n) {
            return Err(Error::DegreeMismatch(n, p.degree()));
        }
        if let Some(&last) = info_set.positions().last() {
            if last > n {
                return Err(Error::IndexOutOfRange { index: last, len: n });
            }
        }
        let mut ordered = vec![Permutation::identity(n)];
        for p in perms {
            if !ordered.contains(&p) {
                ordered.push(p);
            }
        }
        Ok(PdSet { perms: ordered, info_set, radius })
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn info_set(&self) -> &CoordSet {
        &self.info_set
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn degree(&self) -> usize {
        self.perms[0].degree()
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }
}

/// Parses a PD-set file:
///
/// ```text
/// info_set: 5,6,7,8
/// t: 1
/// ()
/// (1,3,5,7)(2,4,6,8)
/// ```
pub fn parse_pd_set(text: &str, n: usize) -> Result<PdSet> {
    let mut info: Option<CoordSet> = None;
    let mut radius: Option<usize> = None;
    let mut perms = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        let err = |message: String| Error::Parse { line: i + 1, message };
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("info_set:") {
            let positions = rest
                .split(',')
                .map(|s| s.trim())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| err(format!("bad coordinate {:?}", s))))
                .collect::<Result<Vec<_>>>()?;
            info = Some(CoordSet::new(positions, n).map_err(|e| err(e.to_string()))?);
        } else if let Some(rest) = line.strip_prefix("t:") {
            radius = Some(rest.trim().parse().map_err(|_| err(format!("bad radius {:?}", rest.trim())))?);
        } else {
            perms.push(parse_cycles(line, n).map_err(|e| err(e.to_string()))?);
        }
    }
    let info = info.ok_or_else(|| Error::Parse { line: 0, message: "missing 'info_set:' header".into() })?;
    let radius = radius.ok_or_else(|| Error::Parse { line: 0, message: "missing 't:' header".into() })?;
    if perms.is_empty() {
        perms.push(Permutation::identity(n));
    }
    PdSet::new(perms, info, radius)
}

pub fn format_pd_set(set: &PdSet) -> String {
    let positions: Vec<String> = set.info_set.positions().iter().map(|p| p.to_string()).collect();
    let mut s = format!("info_set: {}\nt: {}\n", positions.join(","), set.radius);
    for p in &set.perms {
        s.push_str(&p.to_string());
        s.push('\n');
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Alternative,
    Syndrome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decoded {
    pub codeword: BinaryVector,
    /// Information vector of `codeword` (its restriction to the info set).
    pub info: BinaryVector,
    pub perm: Permutation,
    pub errors_corrected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum DecodeOutcome {
    Decoded(Decoded),
    Failure,
}

impl DecodeOutcome {
    pub fn decoded(&self) -> Option<&Decoded> {
        match self {
            DecodeOutcome::Decoded(d) => Some(d),
            DecodeOutcome::Failure => None,
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, DecodeOutcome::Failure)
    }
}

impl fmt::Display for DecodeOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecodeOutcome::Decoded(d) => {
                writeln!(f, "codeword     {}", d.codeword)?;
                writeln!(f, "info         {}", d.info)?;
                writeln!(f, "permutation  {}", d.perm)?;
                write!(f, "corrected    {}", d.errors_corrected)
            }
            DecodeOutcome::Failure => write!(f, "FAIL: more than t errors"),
        }
    }
}

fn check_length(code: &Z2Z4Code, y: &BinaryVector) -> Result<()> {
    if y.len() != code.length() {
        return Err(Error::shape(code.length(), y.len()));
    }
    Ok(())
}

fn check_pd_set(code: &Z2Z4Code, set: &PdSet) -> Result<()> {
    if set.degree() != code.length() {
        return Err(Error::DegreeMismatch(code.length(), set.degree()));
    }
    if set.info_set() != &code.info_set() {
        return Err(Error::Config(format!(
            "PD-set is for information set {}, the code's systematic encoding uses {}",
            set.info_set(),
            code.info_set()
        )));
    }
    Ok(())
}

/// Syndrome: one Z4 entry per parity row, ⟨h_j, Φ⁻¹(y)⟩.
pub fn syndrome(code: &Z2Z4Code, y: &BinaryVector) -> Result<MixedVector> {
    check_length(code, y)?;
    Ok(code.syndrome_mixed(&gray_inverse(y, code.alpha())?))
}

/// Whether the information coordinates of `y` are error-free, assuming at
/// most `t` errors: wt(y + f(y_J)) ≤ t.
pub fn info_correct(code: &Z2Z4Code, y: &BinaryVector) -> Result<bool> {
    check_length(code, y)?;
    let t = code.error_capability()?;
    Ok(reencode_distance(code, &code.info_set(), y)? <= t)
}

fn reencode_distance(code: &Z2Z4Code, info: &CoordSet, y: &BinaryVector) -> Result<usize> {
    let f = encode(&restrict(y, info)?, code)?;
    Ok((y + &f).weight())
}

fn finish(code: &Z2Z4Code, info: &CoordSet, y: &BinaryVector, z: &BinaryVector, perm: &Permutation) -> Result<Decoded> {
    let x = perm.inverse().apply_unchecked(&encode(&restrict(z, info)?, code)?);
    let errors_corrected = (y + &x).weight();
    Ok(Decoded { info: restrict(&x, info)?, codeword: x, perm: perm.clone(), errors_corrected })
}

/// Decoder driven by re-encoding: accepts the first permutation π with
/// wt(π(y) + f(π(y)_J)) ≤ t and returns π⁻¹(f(π(y)_J)).
pub fn decode_alternative(code: &Z2Z4Code, set: &PdSet, y: &BinaryVector) -> Result<DecodeOutcome> {
    check_length(code, y)?;
    check_pd_set(code, set)?;
    let t = code.error_capability()?;
    let info = code.info_set();
    for perm in set.perms() {
        let z = perm.apply_unchecked(y);
        if reencode_distance(code, &info, &z)? <= t {
            return Ok(DecodeOutcome::Decoded(finish(code, &info, y, &z, perm)?));
        }
    }
    Ok(DecodeOutcome::Failure)
}

/// Whether the Lee-syndrome test is a valid error locator for `code`.
pub fn syndrome_decoding_applies(code: &Z2Z4Code) -> bool {
    let ct = code.code_type();
    ct.gamma == ct.kappa || code.is_binary_linear()
}

/// Decoder driven by the syndrome: accepts the first permutation π with
/// wtL(H Φ⁻¹(π(y))) ≤ t.
pub fn decode_syndrome(code: &Z2Z4Code, set: &PdSet, y: &BinaryVector) -> Result<DecodeOutcome> {
    check_length(code, y)?;
    check_pd_set(code, set)?;
    if !syndrome_decoding_applies(code) {
        let ct = code.code_type();
        return Err(Error::Config(format!(
            "syndrome decoding needs γ = κ or a binary linear code; this code is nonlinear with γ = {} > κ = {}",
            ct.gamma, ct.kappa
        )));
    }
    let t = code.error_capability()?;
    let info = code.info_set();
    let alpha = code.alpha();
    for perm in set.perms() {
        let z = perm.apply_unchecked(y);
        let s = code.syndrome_mixed(&gray_inverse(&z, alpha)?);
        if lee_weight(&s) <= t {
            return Ok(DecodeOutcome::Decoded(finish(code, &info, y, &z, perm)?));
        }
    }
    Ok(DecodeOutcome::Failure)
}

pub fn decode(code: &Z2Z4Code, set: &PdSet, y: &BinaryVector, method: Method) -> Result<DecodeOutcome> {
    match method {
        Method::Alternative => decode_alternative(code, set, y),
        Method::Syndrome => decode_syndrome(code, set, y),
    }
}

/// k-subsets of `0..n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations { n, current: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let k = self.current.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] < self.n - k + i {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Supports (0-based) of every pattern of weight ≤ `t` over `positions`, by
/// weight and then lexicographically.
pub fn error_supports(positions: &[usize], t: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0..=t.min(positions.len())).flat_map(move |w| {
        Combinations::new(positions.len(), w).map(move |c| c.into_iter().map(|i| positions[i]).collect())
    })
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// Number of binary patterns of length `n` and weight at most `t`.
pub fn pattern_count(n: usize, t: usize) -> u128 {
    (0..=t).map(|w| binomial(n, w)).sum()
}

/// Per permutation, which (0-based) positions it sends into the info set.
fn landing_masks(set: &PdSet) -> Vec<Vec<bool>> {
    let n = set.degree();
    let target = set.info_set().mask(n);
    set.perms().iter().map(|p| p.images0().iter().map(|&j| target[j]).collect()).collect()
}

fn covers(mask: &[bool], support: &[usize]) -> bool {
    support.iter().all(|&i| !mask[i])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum PdVerdict {
    Certified { patterns: u128 },
    Failed { witness: BinaryVector },
}

impl PdVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, PdVerdict::Certified { .. })
    }
}

const CHUNK: usize = 4096;

/// Exhaustive PD-set check over every error pattern of weight ≤ radius.
///
/// On failure the witness is the first uncovered pattern in
/// weight-then-lexicographic order of supports.
pub fn verify_pd_set(set: &PdSet) -> PdVerdict {
    let n = set.degree();
    let masks = landing_masks(set);
    let positions: Vec<usize> = (0..n).collect();
    let mut supports = error_supports(&positions, set.radius());
    loop {
        let chunk: Vec<Vec<usize>> = supports.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let failing = chunk.par_iter().find_first(|s| !masks.iter().any(|m| covers(m, s)));
        if let Some(s) = failing {
            let support: Vec<usize> = s.iter().map(|&i| i + 1).collect();
            return PdVerdict::Failed { witness: BinaryVector::from_support(n, &support) };
        }
    }
    PdVerdict::Certified { patterns: pattern_count(n, set.radius()) }
}

/// Greedy cover: starting from the identity, repeatedly add the candidate
/// that moves the most still-uncovered patterns off `info_set`.
///
/// Every candidate must be a permutation automorphism of `code`. Returns
/// `None` when the candidates together cannot cover every pattern.
pub fn search_pd_set(
    code: &Z2Z4Code,
    candidates: &[Permutation],
    info_set: &CoordSet,
    t: usize,
) -> Result<Option<PdSet>> {
    let n = code.length();
    for p in candidates {
        if p.degree() != n {
            return Err(Error::DegreeMismatch(n, p.degree()));
        }
    }
    let bad: Vec<&Permutation> = candidates
        .par_iter()
        .filter_map(|p| match is_automorphism(p, code) {
            Ok(true) => None,
            _ => Some(p),
        })
        .collect();
    if let Some(p) = bad.first() {
        return Err(Error::NotAutomorphism(p.to_string()));
    }

    let pool = PdSet::new(candidates.iter().cloned().chain([Permutation::identity(n)]).collect(), info_set.clone(), t)?;
    let masks = landing_masks(&pool);
    let positions: Vec<usize> = (0..n).collect();
    // pool.perms()[0] is the identity
    let mut uncovered: Vec<Vec<usize>> = error_supports(&positions, t).filter(|s| !covers(&masks[0], s)).collect();
    let mut chosen = vec![0usize];
    while !uncovered.is_empty() {
        let counts: Vec<usize> = masks.par_iter().map(|m| uncovered.iter().filter(|s| covers(m, s)).count()).collect();
        let (best, &count) = counts
            .iter()
            .enumerate()
            .filter(|(i, _)| !chosen.contains(i))
            .fold((0, &0), |acc, (i, c)| if c > acc.1 { (i, c) } else { acc });
        if count == 0 {
            return Ok(None);
        }
        chosen.push(best);
        uncovered.retain(|s| !covers(&masks[best], s));
    }
    let perms = chosen.into_iter().map(|i| pool.perms()[i].clone()).collect();
    Ok(Some(PdSet::new(perms, info_set.clone(), t)?))
}

/// Searches for an error `e` with wt(e) ≤ t, e_J = 0 and a Lee syndrome of
/// weight > t, i.e. a pattern for which the syndrome test wrongly reports
/// corrupted information coordinates.
///
/// Patterns supported on L3 (the second bits of the quaternary coordinates
/// carrying the 2I block) are tried first, then patterns meeting L3, then
/// the rest of the complement of J.
pub fn find_syndrome_counterexample(code: &Z2Z4Code) -> Result<Option<BinaryVector>> {
    let t = code.error_capability()?;
    if t == 0 {
        return Ok(None);
    }
    let n = code.length();
    let ct = code.code_type();
    let inv = code.binary_perm().inverse();
    let outside: Vec<usize> = code.info_set().complement(n).positions().iter().map(|&p| p - 1).collect();
    let mut l3: Vec<usize> = j2_positions(ct).into_iter().map(|j| inv.image_of(j + 1) - 1).collect();
    l3.sort_unstable();

    let alpha = code.alpha();
    let violates = |support: &[usize]| -> bool {
        if support.is_empty() {
            return false;
        }
        let e = BinaryVector::from_support(n, &support.iter().map(|&i| i + 1).collect::<Vec<_>>());
        let s = code.syndrome_mixed(&gray_inverse(&e, alpha).expect("length matches"));
        lee_weight(&s) > t
    };
    let to_vector =
        |support: &[usize]| BinaryVector::from_support(n, &support.iter().map(|&i| i + 1).collect::<Vec<_>>());

    if let Some(s) = error_supports(&l3, t).find(|s| violates(s)) {
        return Ok(Some(to_vector(&s)));
    }
    let meets_l3 = |s: &Vec<usize>| s.iter().any(|i| l3.binary_search(i).is_ok());
    let within_l3 = |s: &Vec<usize>| s.iter().all(|i| l3.binary_search(i).is_ok());
    if let Some(s) = error_supports(&outside, t).filter(|s| meets_l3(s) && !within_l3(s)).find(|s| violates(s)) {
        return Ok(Some(to_vector(&s)));
    }
    let rest = error_supports(&outside, t).filter(|s| !meets_l3(s)).find(|s| violates(s));
    Ok(rest.map(|s| to_vector(&s)))
}
