//! Permutations of `{1..d}`, cycle decompositions and partitions.
//!
//! Products follow the right-to-left convention: `(p·q)(x) = p(q(x))`,
//! so the right factor is applied first. Every module in this crate uses
//! this convention.
//!
//! Points are 1-indexed in the public API and in all text forms. Internally
//! images are stored 0-indexed as bytes.

use std::fmt;
use std::sync::OnceLock;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported degree.
pub const MAX_DEGREE: usize = 16;

/// A bijection of `{1..d}`.
///
/// Ordering is lexicographic on the image sequence `(p(1), .., p(d))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Result<Self> {
        check_degree(degree)?;
        Ok(Self {
            images: (0..degree as u8).collect(),
        })
    }

    /// Builds a permutation from its 1-indexed image sequence.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let d = images.len();
        check_degree(d)?;
        let mut seen = vec![false; d];
        let mut out = Vec::with_capacity(d);
        for &v in images {
            if v == 0 || v > d {
                return Err(Error::InvalidPermutation(format!(
                    "image {v} outside 1..={d}"
                )));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidPermutation(format!("image {v} repeated")));
            }
            out.push((v - 1) as u8);
        }
        Ok(Self { images: out })
    }

    /// Builds a permutation of degree `degree` from disjoint 1-indexed cycles.
    /// Points not mentioned are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self> {
        check_degree(degree)?;
        let mut images: Vec<u8> = (0..degree as u8).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &x in cycle {
                if x == 0 || x > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} outside 1..={degree}"
                    )));
                }
                if std::mem::replace(&mut used[x - 1], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} appears in more than one cycle position"
                    )));
                }
            }
            for (k, &x) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                images[x - 1] = (next - 1) as u8;
            }
        }
        Ok(Self { images })
    }

    /// Internal constructor from 0-indexed images that are known to form a bijection.
    pub(crate) fn from_raw(images: Vec<u8>) -> Self {
        debug_assert!(is_bijection(&images));
        Self { images }
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-indexed point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    /// 1-indexed image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| i == v as usize)
    }

    /// `self · other`, i.e. `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0u8; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            out[v as usize] = i as u8;
        }
        Permutation { images: out }
    }

    /// `w · self · w⁻¹` where `w = by`. Cycle `(a_1 .. a_r)` of `self`
    /// becomes cycle `(w(a_1) .. w(a_r))`.
    pub fn conjugate_by(&self, by: &Permutation) -> Result<Permutation> {
        if self.degree() != by.degree() {
            return Err(Error::DegreeMismatch(by.degree(), self.degree()));
        }
        Ok(self.conjugate_by_unchecked(by))
    }

    pub(crate) fn conjugate_by_unchecked(&self, by: &Permutation) -> Permutation {
        let w = &by.images;
        let mut out = vec![0u8; self.degree()];
        for (x, &px) in self.images.iter().enumerate() {
            out[w[x] as usize] = w[px as usize];
        }
        Permutation { images: out }
    }

    pub fn cycles(&self) -> CycleDecomposition {
        CycleDecomposition {
            cycles: raw_cycles(&self.images)
                .into_iter()
                .map(|c| c.into_iter().map(|x| x as usize + 1).collect())
                .collect(),
        }
    }

    pub fn cycle_type(&self) -> Partition {
        let mut parts: Vec<usize> = raw_cycles(&self.images).iter().map(Vec::len).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Parses the disjoint-cycle text form, e.g. `"(1 2)(3 4)"` or `"()"`.
    ///
    /// Points are separated by whitespace or commas; fixed points may be
    /// omitted or written as singleton cycles.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        check_degree(degree)?;
        let cycles = parse_cycle_list(text)?;
        let cycles: Vec<Vec<usize>> = cycles.into_iter().map(|(_, c)| c).collect();
        Self::from_cycles(degree, &cycles).map_err(|e| Error::Parse {
            position: 0,
            message: e.to_string(),
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        let mut any = false;
        for c in cycles.cycles().iter().filter(|c| c.len() > 1) {
            write!(f, "({})", c.iter().join(" "))?;
            any = true;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

fn check_degree(degree: usize) -> Result<()> {
    if degree == 0 || degree > MAX_DEGREE {
        return Err(Error::InvalidPermutation(format!(
            "degree {degree} outside 1..={MAX_DEGREE}"
        )));
    }
    Ok(())
}

fn is_bijection(images: &[u8]) -> bool {
    let mut seen = vec![false; images.len()];
    images
        .iter()
        .all(|&v| (v as usize) < images.len() && !std::mem::replace(&mut seen[v as usize], true))
}

/// Cycles of a 0-indexed image table in canonical order: each cycle starts at
/// its minimum, cycles sorted by length descending then minimum ascending.
pub(crate) fn raw_cycles(images: &[u8]) -> Vec<Vec<u8>> {
    let mut seen = vec![false; images.len()];
    let mut cycles = Vec::new();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start as u8];
        seen[start] = true;
        let mut x = images[start] as usize;
        while x != start {
            seen[x] = true;
            cycle.push(x as u8);
            x = images[x] as usize;
        }
        cycles.push(cycle);
    }
    // starts are visited in increasing order, so each cycle already begins at its minimum
    cycles.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    cycles
}

/// Splits `"(1 2)^1 (3)^2"`-like text into cycles with optional `^label`
/// suffixes. Returns `(label, cycle)` pairs.
pub(crate) fn parse_cycle_list(text: &str) -> Result<Vec<(Option<usize>, Vec<usize>)>> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut out = Vec::new();
    let err = |position: usize, message: &str| Error::Parse {
        position,
        message: message.to_string(),
    };
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && (bytes[*pos] as char).is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let read_number = |pos: &mut usize| -> Result<usize> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if start == *pos {
            return Err(err(start, "expected a number"));
        }
        text[start..*pos]
            .parse::<usize>()
            .map_err(|_| err(start, "number out of range"))
    };
    loop {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'(' {
            return Err(err(pos, "expected '('"));
        }
        pos += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut pos);
            match bytes.get(pos) {
                None => return Err(err(pos, "unterminated cycle")),
                Some(b')') => {
                    pos += 1;
                    break;
                }
                Some(b',') if !cycle.is_empty() => pos += 1,
                Some(c) if c.is_ascii_digit() => cycle.push(read_number(&mut pos)?),
                Some(_) => return Err(err(pos, "unexpected character in cycle")),
            }
        }
        skip_ws(&mut pos);
        let label = if bytes.get(pos) == Some(&b'^') {
            pos += 1;
            skip_ws(&mut pos);
            Some(read_number(&mut pos)?)
        } else {
            None
        };
        if cycle.is_empty() && label.is_some() {
            return Err(err(pos, "empty cycle cannot carry a label"));
        }
        if !cycle.is_empty() {
            out.push((label, cycle));
        }
    }
    Ok(out)
}

/// The disjoint cycles of a permutation, fixed points included, in canonical
/// order: each cycle rotated to begin at its minimum, cycles sorted by length
/// descending and then by minimum ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    /// Position (in canonical order) of the cycle containing the 1-indexed point `x`.
    pub fn index_of_point(&self, x: usize) -> Option<usize> {
        self.cycles.iter().position(|c| c.contains(&x))
    }

    pub fn rebuild(&self) -> Result<Permutation> {
        Permutation::from_cycles(self.degree(), &self.cycles)
    }
}

/// An integer partition with parts in nonincreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts `parts` into nonincreasing order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `Σ (part − 1)`, the ramification contributed by a fiber with this profile.
    pub fn ramification(&self) -> usize {
        self.parts.iter().map(|p| p - 1).sum()
    }

    /// `(length, multiplicity)` pairs, longest first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        self.parts
            .iter()
            .dedup_with_count()
            .map(|(n, &p)| (p, n))
            .collect()
    }

    /// `Π_ℓ (mult_ℓ)!`, the order of the group permuting equal parts.
    pub fn symmetry_order(&self) -> u64 {
        self.multiplicities()
            .iter()
            .map(|&(_, m)| (1..=m as u64).product::<u64>())
            .product()
    }

    /// Comma-separated parts, e.g. `2,1,1`.
    pub fn to_csv(&self) -> String {
        self.parts.iter().join(",")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition("parts not nonincreasing".into()));
        }
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

/// `p · q` (q applied first).
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

pub fn inverse(p: &Permutation) -> Permutation {
    p.inverse()
}

/// `w · p · w⁻¹`.
pub fn conjugate(w: &Permutation, p: &Permutation) -> Result<Permutation> {
    p.conjugate_by(w)
}

pub fn cycle_type(p: &Permutation) -> Partition {
    p.cycle_type()
}

/// Orbits of the group generated by `tuple` on `{1..d}`, each sorted, ordered
/// by minimum element.
pub fn orbits(tuple: &[Permutation]) -> Result<Vec<Vec<usize>>> {
    let first = tuple
        .first()
        .ok_or_else(|| Error::InvalidTuple("empty tuple has no degree".into()))?;
    let d = first.degree();
    if let Some(p) = tuple.iter().find(|p| p.degree() != d) {
        return Err(Error::DegreeMismatch(d, p.degree()));
    }
    Ok(raw_orbits(tuple, d)
        .into_iter()
        .map(|o| o.into_iter().map(|x| x + 1).collect())
        .collect())
}

/// 0-indexed orbits, ordered by minimum element.
pub(crate) fn raw_orbits(tuple: &[Permutation], degree: usize) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(degree);
    for p in tuple {
        for (x, &y) in p.raw().iter().enumerate() {
            uf.union(x, y as usize);
        }
    }
    uf.classes()
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    /// Classes as sorted vectors, ordered by minimum element.
    pub fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(x);
        }
        out
    }
}

/// All elements of `S_d` in lexicographic order of their image sequences.
///
/// Cached per degree; `d ≤ 9`.
pub fn symmetric_group(degree: usize) -> &'static [Permutation] {
    const LIMIT: usize = 10;
    static CACHE: [OnceLock<Vec<Permutation>>; LIMIT] = [const { OnceLock::new() }; LIMIT];
    assert!(
        (1..LIMIT).contains(&degree),
        "symmetric_group supports degrees 1..=9"
    );
    CACHE[degree].get_or_init(|| {
        (0..degree as u8)
            .permutations(degree)
            .map(Permutation::from_raw)
            .collect()
    })
}

/// All permutations of degree `weight(mu)` with cycle type `mu`, lexicographic.
pub fn conjugacy_class(mu: &Partition) -> Result<Vec<Permutation>> {
    let d = mu.weight();
    if d > 9 {
        return Err(Error::TooLarge(format!(
            "conjugacy class enumeration needs degree ≤ 9, got {d}"
        )));
    }
    Ok(symmetric_group(d)
        .iter()
        .filter(|p| &p.cycle_type() == mu)
        .cloned()
        .collect())
}
