//! Permutations of binary coordinate positions.
//!
//! A permutation `π` acts on a vector by moving the entry at position `i` to
//! position `π(i)`, so `π(v)_i = v_{π⁻¹(i)}`. Composition `p ∘ q` applies `q`
//! first, which makes the action a left group action.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::code::Z2Z4Code;
use crate::error::{Error, Result};
use crate::vector::BinaryVector;

pub const DEFAULT_GROUP_CAP: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // image[i] = π(i + 1) - 1
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    /// Builds a permutation from its 1-based image list `[π(1), …, π(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut image = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n {
                return Err(Error::IndexOutOfRange { index: x, len: n });
            }
            if seen[x - 1] {
                return Err(Error::MalformedPermutation(format!("{} appears twice", x)));
            }
            seen[x - 1] = true;
            image.push(x - 1);
        }
        Ok(Permutation { image })
    }

    pub(crate) fn from_zero_based(image: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = image.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x)
        });
        Permutation { image }
    }

    /// Builds a permutation of degree `n` from disjoint cycles of 1-based points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for &x in cycle {
                if x == 0 || x > n {
                    return Err(Error::IndexOutOfRange { index: x, len: n });
                }
                if seen[x - 1] {
                    return Err(Error::MalformedPermutation(format!("symbol {} repeated", x)));
                }
                seen[x - 1] = true;
            }
            for (k, &x) in cycle.iter().enumerate() {
                image[x - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { image })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// `π(i)` for a 1-based point `i`.
    pub fn image_of(&self, i: usize) -> usize {
        self.image[i - 1] + 1
    }

    pub(crate) fn images0(&self) -> &[usize] {
        &self.image
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.image.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn apply(&self, v: &BinaryVector) -> Result<BinaryVector> {
        if v.len() != self.degree() {
            return Err(Error::DegreeMismatch(self.degree(), v.len()));
        }
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &BinaryVector) -> BinaryVector {
        let src = v.bits();
        let mut out = vec![0u8; src.len()];
        for (i, &b) in src.iter().enumerate() {
            out[self.image[i]] = b;
        }
        BinaryVector::from_bits_unchecked(out)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation { image: other.image.iter().map(|&j| self.image[j]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { image: inv }
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest point,
    /// sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut visited = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if visited[start] || self.image[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                cycle.push(x + 1);
                x = self.image[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles().iter().fold(1, |acc, c| acc / gcd(acc, c.len()) * c.len())
    }
}

/// Parses disjoint-cycle notation such as `"(1,3,5,7)(2,4,6,8)"`.
///
/// The empty string, `()` and `id` all denote the identity. Commas or spaces
/// may separate points.
pub fn parse_cycles(text: &str, n: usize) -> Result<Permutation> {
    let text = text.trim();
    if text.is_empty() || text == "id" || text == "()" {
        return Ok(Permutation::identity(n));
    }
    let mut cycles = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        let body =
            rest.strip_prefix('(').ok_or_else(|| Error::MalformedPermutation(format!("expected '(' in {:?}", text)))?;
        let close =
            body.find(')').ok_or_else(|| Error::MalformedPermutation(format!("unclosed cycle in {:?}", text)))?;
        let inner = &body[..close];
        rest = &body[close + 1..];
        let mut cycle = Vec::new();
        for tok in inner.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let x: usize =
                tok.parse().map_err(|_| Error::MalformedPermutation(format!("bad point {:?} in {:?}", tok, text)))?;
            cycle.push(x);
        }
        cycles.push(cycle);
    }
    Permutation::from_cycles(n, &cycles)
}

pub fn format_cycles(p: &Permutation) -> String {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return "()".to_string();
    }
    let mut s = String::new();
    for c in cycles {
        s.push('(');
        for (i, x) in c.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&x.to_string());
        }
        s.push(')');
    }
    s
}

impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_cycles(self))
    }
}

/// Reads a permutation list: one permutation per line in cycle notation,
/// `#` starts a comment, blank lines are skipped.
pub fn parse_permutation_list(text: &str, n: usize) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let p = parse_cycles(line, n).map_err(|e| Error::Parse { line: lineno + 1, message: e.to_string() })?;
        out.push(p);
    }
    Ok(out)
}

pub fn format_permutation_list(perms: &[Permutation]) -> String {
    let mut s = String::new();
    for p in perms {
        s.push_str(&format_cycles(p));
        s.push('\n');
    }
    s
}

/// Closure of `generators` under composition, breadth first from the identity.
///
/// Fails with [`Error::CapExceeded`] once more than `cap` elements are found.
pub fn generate_group(generators: &[Permutation], n: usize, cap: usize) -> Result<Vec<Permutation>> {
    for g in generators {
        if g.degree() != n {
            return Err(Error::DegreeMismatch(n, g.degree()));
        }
    }
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut elements = vec![id.clone()];
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = g.compose(&x)?;
            if seen.insert(y.clone()) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { needed: elements.len() as u128 + 1, cap: cap as u128 });
                }
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(elements)
}

/// Whether `p` maps every codeword of the Gray image of `code` into the code.
pub fn is_automorphism(p: &Permutation, code: &Z2Z4Code) -> Result<bool> {
    let n = code.length();
    if p.degree() != n {
        return Err(Error::DegreeMismatch(n, p.degree()));
    }
    for x in code.binary_codewords()? {
        if !code.contains_unchecked(&p.apply_unchecked(&x)) {
            return Ok(false);
        }
    }
    Ok(true)
}
