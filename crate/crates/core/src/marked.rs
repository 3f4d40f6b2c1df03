//! Fully-marked monodromy representations.
//!
//! A [`MarkedTuple`] is a tuple `(σ_1, .., σ_m)` of permutations whose
//! product `σ_1·σ_2·…·σ_m` is the identity, together with one [`Marking`] per
//! fiber labelling the cycles of `σ_i` by `1..n_i`. Two tuples are equivalent
//! when a single `w ∈ S_d` conjugates one into the other with the labels
//! carried along cycle images ([`transport_marking`]).

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{raw_cycles, raw_orbits, symmetric_group, Partition, Permutation};
use crate::space::{ComponentSignature, HurwitzSpec};

/// Degree limit for exhaustive canonicalization over `S_d`.
pub const MAX_CANONICAL_DEGREE: usize = 9;

/// Labels on the cycles of one permutation.
///
/// Entries are `(cycle minimum, label)` listed in the canonical cycle order of
/// the owning permutation, so comparing markings of equal permutations
/// compares label sequences in canonical cycle order. Labels are 1-based and
/// the cycle labelled `j` has length `μ^j`, the `j`-th part of the sorted
/// cycle type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Marking {
    entries: Vec<(usize, usize)>,
}

impl Marking {
    /// Builds a marking from labels given in canonical cycle order of `perm`.
    pub fn from_labels(perm: &Permutation, labels: &[usize]) -> Result<Self> {
        let cycles = perm.cycles();
        if labels.len() != cycles.len() {
            return Err(Error::InvalidMarking(format!(
                "{} labels for {} cycles",
                labels.len(),
                cycles.len()
            )));
        }
        let m = Marking {
            entries: cycles
                .cycles()
                .iter()
                .zip(labels)
                .map(|(c, &l)| (c[0], l))
                .collect(),
        };
        m.validate(perm)?;
        Ok(m)
    }

    /// Builds a marking from `(point in cycle, label)` pairs, one per cycle.
    pub fn from_cycle_labels(perm: &Permutation, pairs: &[(usize, usize)]) -> Result<Self> {
        let cycles = perm.cycles();
        let mut labels = vec![0usize; cycles.len()];
        for &(x, label) in pairs {
            if x == 0 || x > perm.degree() {
                return Err(Error::InvalidMarking(format!("point {x} out of range")));
            }
            let k = cycles
                .index_of_point(x)
                .expect("every point lies on a cycle");
            if labels[k] != 0 {
                return Err(Error::InvalidMarking(format!(
                    "cycle containing {x} labelled twice"
                )));
            }
            labels[k] = label;
        }
        Self::from_labels(perm, &labels)
    }

    pub(crate) fn from_raw_entries(entries: Vec<(usize, usize)>) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    /// Labels in canonical cycle order.
    pub fn labels(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.1).collect()
    }

    /// Label of the cycle whose minimum element is `min`.
    pub fn label_of(&self, min: usize) -> Option<usize> {
        self.entries.iter().find(|e| e.0 == min).map(|e| e.1)
    }

    pub fn validate(&self, perm: &Permutation) -> Result<()> {
        let cycles = perm.cycles();
        let mu = perm.cycle_type();
        if self.entries.len() != cycles.len() {
            return Err(Error::InvalidMarking(format!(
                "{} entries for {} cycles",
                self.entries.len(),
                cycles.len()
            )));
        }
        let mut used = vec![false; cycles.len()];
        for (c, &(min, label)) in cycles.cycles().iter().zip(&self.entries) {
            if c[0] != min {
                return Err(Error::InvalidMarking(format!(
                    "entry keyed by {min} does not match cycle starting at {}",
                    c[0]
                )));
            }
            if label == 0 || label > cycles.len() {
                return Err(Error::InvalidMarking(format!("label {label} out of range")));
            }
            if std::mem::replace(&mut used[label - 1], true) {
                return Err(Error::InvalidMarking(format!("label {label} repeated")));
            }
            if mu.parts()[label - 1] != c.len() {
                return Err(Error::InvalidMarking(format!(
                    "label {label} requires a cycle of length {}, got {}",
                    mu.parts()[label - 1],
                    c.len()
                )));
            }
        }
        Ok(())
    }

    /// Label of each point (0-indexed points) under `perm`.
    fn point_labels(&self, perm: &Permutation) -> Vec<usize> {
        let mut out = vec![0; perm.degree()];
        for (c, &(_, label)) in raw_cycles(perm.raw()).iter().zip(&self.entries) {
            for &x in c {
                out[x as usize] = label;
            }
        }
        out
    }
}

/// All markings of `p` compatible with `mu`, in lexicographic order of their
/// label sequences. There are `Π_ℓ (mult_ℓ(mu))!` of them.
pub fn enumerate_markings(p: &Permutation, mu: &Partition) -> Result<Vec<Marking>> {
    let found = p.cycle_type();
    if &found != mu {
        return Err(Error::CycleTypeMismatch {
            expected: mu.to_string(),
            found: found.to_string(),
        });
    }
    let mins: Vec<usize> = p.cycles().cycles().iter().map(|c| c[0]).collect();
    Ok(label_assignments(mu)
        .into_iter()
        .map(|labels| Marking {
            entries: mins.iter().copied().zip(labels).collect(),
        })
        .collect())
}

/// Label sequences (in canonical cycle order) for a permutation of cycle type
/// `mu`. Labels only move within runs of equal cycle length.
pub(crate) fn label_assignments(mu: &Partition) -> Vec<Vec<usize>> {
    let mut blocks = Vec::new();
    let mut start = 1;
    for (_, mult) in mu.multiplicities() {
        blocks.push((start..start + mult).permutations(mult).collect::<Vec<_>>());
        start += mult;
    }
    blocks
        .into_iter()
        .multi_cartesian_product()
        .map(|parts| parts.concat())
        .collect()
}

/// A fully-marked monodromy representation.
///
/// Ordered first by the concatenated image sequences of the permutations,
/// then by the label sequences in canonical cycle order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TupleJson", into = "TupleJson")]
pub struct MarkedTuple {
    perms: Vec<Permutation>,
    markings: Vec<Marking>,
}

impl MarkedTuple {
    /// Checks equal degrees, identity product and marking validity.
    pub fn new(perms: Vec<Permutation>, markings: Vec<Marking>) -> Result<Self> {
        if perms.is_empty() {
            return Err(Error::InvalidTuple("no permutations".into()));
        }
        if perms.len() != markings.len() {
            return Err(Error::InvalidTuple(format!(
                "{} permutations but {} markings",
                perms.len(),
                markings.len()
            )));
        }
        let d = perms[0].degree();
        if let Some(p) = perms.iter().find(|p| p.degree() != d) {
            return Err(Error::DegreeMismatch(d, p.degree()));
        }
        let t = Self { perms, markings };
        if !t.product().is_identity() {
            return Err(Error::InvalidTuple(format!(
                "product {} is not the identity",
                t.product()
            )));
        }
        for (p, m) in t.perms.iter().zip(&t.markings) {
            m.validate(p)?;
        }
        Ok(t)
    }

    pub(crate) fn new_unchecked(perms: Vec<Permutation>, markings: Vec<Marking>) -> Self {
        Self { perms, markings }
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn markings(&self) -> &[Marking] {
        &self.markings
    }

    pub fn degree(&self) -> usize {
        self.perms[0].degree()
    }

    pub fn fiber_count(&self) -> usize {
        self.perms.len()
    }

    /// `σ_1·σ_2·…·σ_m`.
    pub fn product(&self) -> Permutation {
        product(&self.perms)
    }

    /// Checks cycle types and component signature against `spec`.
    pub fn conforms_to(&self, spec: &HurwitzSpec) -> Result<()> {
        if self.fiber_count() != spec.fiber_count() || self.degree() != spec.degree() {
            return Err(Error::InvalidTuple("shape differs from the space".into()));
        }
        for (i, (p, mu)) in self.perms.iter().zip(spec.profiles()).enumerate() {
            if &p.cycle_type() != mu {
                return Err(Error::CycleTypeMismatch {
                    expected: format!("{mu} in fiber {}", i + 1),
                    found: p.cycle_type().to_string(),
                });
            }
        }
        let sig = component_signature(self)?;
        if sig != spec.expected_signature() {
            return Err(Error::InvalidTuple(format!(
                "component signature {:?} differs from {:?}",
                sig.pairs(),
                spec.expected_signature().pairs()
            )));
        }
        Ok(())
    }

    /// Parses `"(1 2)^1 (3)^1 | (1 2)^1 (3)^1 | ..."`: fibers separated by
    /// `|`, every cycle (fixed points included) carrying its label.
    pub fn parse(text: &str) -> Result<Self> {
        let mut perms = Vec::new();
        let mut markings = Vec::new();
        let mut offset = 0;
        for fiber in text.split('|') {
            let at = |e: Error| match e {
                Error::Parse { position, message } => Error::Parse {
                    position: position + offset,
                    message,
                },
                other => Error::Parse {
                    position: offset,
                    message: other.to_string(),
                },
            };
            let cycles = crate::perm::parse_cycle_list(fiber).map_err(at)?;
            let degree: usize = cycles.iter().map(|c| c.1.len()).sum();
            let bare: Vec<&Vec<usize>> = cycles.iter().map(|c| &c.1).collect();
            let perm = Permutation::from_cycles(degree, &bare).map_err(at)?;
            let pairs = cycles
                .iter()
                .map(|(label, c)| {
                    label.map(|l| (c[0], l)).ok_or_else(|| Error::Parse {
                        position: offset,
                        message: "every cycle needs a ^label".into(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            markings.push(Marking::from_cycle_labels(&perm, &pairs).map_err(at)?);
            perms.push(perm);
            offset += fiber.len() + 1;
        }
        Self::new(perms, markings)
    }

    fn fibers_json(&self) -> Vec<Vec<LabeledCycle>> {
        self.perms
            .iter()
            .zip(&self.markings)
            .map(|(p, m)| {
                p.cycles()
                    .cycles()
                    .iter()
                    .zip(m.entries())
                    .map(|(c, e)| LabeledCycle {
                        cycle: c.clone(),
                        label: e.1,
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for MarkedTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fibers = self.fibers_json();
        for (i, fiber) in fibers.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            for (k, lc) in fiber.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "({})^{}", lc.cycle.iter().join(" "), lc.label)?;
            }
        }
        Ok(())
    }
}

/// JSON form of one labelled cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledCycle {
    pub cycle: Vec<usize>,
    pub label: usize,
}

#[derive(Serialize, Deserialize)]
struct TupleJson {
    fibers: Vec<Vec<LabeledCycle>>,
}

impl From<MarkedTuple> for TupleJson {
    fn from(t: MarkedTuple) -> Self {
        TupleJson {
            fibers: t.fibers_json(),
        }
    }
}

impl TryFrom<TupleJson> for MarkedTuple {
    type Error = Error;
    fn try_from(j: TupleJson) -> Result<Self> {
        let mut perms = Vec::new();
        let mut markings = Vec::new();
        for fiber in &j.fibers {
            let degree = fiber.iter().map(|lc| lc.cycle.len()).sum();
            let cycles: Vec<&Vec<usize>> = fiber.iter().map(|lc| &lc.cycle).collect();
            if cycles.iter().any(|c| c.is_empty()) {
                return Err(Error::InvalidTuple("empty cycle".into()));
            }
            let perm = Permutation::from_cycles(degree, &cycles)?;
            let pairs: Vec<_> = fiber.iter().map(|lc| (lc.cycle[0], lc.label)).collect();
            markings.push(Marking::from_cycle_labels(&perm, &pairs)?);
            perms.push(perm);
        }
        MarkedTuple::new(perms, markings)
    }
}

/// Left-to-right product `p_1·p_2·…·p_m`.
pub(crate) fn product(perms: &[Permutation]) -> Permutation {
    let mut acc = perms[0].clone();
    for p in &perms[1..] {
        acc = acc.compose_unchecked(p);
    }
    acc
}

/// Conjugates every `σ_i` by `w` and carries labels along: the cycle
/// `(w(a_1) .. w(a_r))` of the result gets the label of `(a_1 .. a_r)`.
pub fn transport_marking(w: &Permutation, t: &MarkedTuple) -> Result<MarkedTuple> {
    if w.degree() != t.degree() {
        return Err(Error::DegreeMismatch(w.degree(), t.degree()));
    }
    let (perms, markings) = t
        .perms
        .iter()
        .zip(&t.markings)
        .map(|(p, m)| transport_fiber(w, p, m))
        .unzip();
    Ok(MarkedTuple { perms, markings })
}

/// Transports one fiber along `w`.
pub(crate) fn transport_fiber(
    w: &Permutation,
    p: &Permutation,
    m: &Marking,
) -> (Permutation, Marking) {
    let q = p.conjugate_by_unchecked(w);
    let old = m.point_labels(p);
    let mut new = vec![0; old.len()];
    for (x, &label) in old.iter().enumerate() {
        new[w.raw()[x] as usize] = label;
    }
    let entries = raw_cycles(q.raw())
        .iter()
        .map(|c| (c[0] as usize + 1, new[c[0] as usize]))
        .collect();
    (q, Marking { entries })
}

/// Minimum of `w·perms·w⁻¹` over `w ∈ S_d` (lexicographic on concatenated
/// images) and every `w` attaining it.
///
/// Exhaustive: costs `d!·m·d`.
pub(crate) fn minimal_conjugate(
    perms: &[Permutation],
) -> Result<(Vec<Permutation>, Vec<&'static Permutation>)> {
    let d = perms[0].degree();
    if d > MAX_CANONICAL_DEGREE {
        return Err(Error::TooLarge(format!(
            "canonical forms need degree ≤ {MAX_CANONICAL_DEGREE}, got {d}"
        )));
    }
    let m = perms.len();
    let mut best: Vec<u8> = perms.iter().flat_map(|p| p.raw().iter().copied()).collect();
    let mut buf = vec![0u8; m * d];
    let mut minimizers: Vec<&'static Permutation> = Vec::new();
    for w in symmetric_group(d) {
        let w_raw = w.raw();
        let mut state = std::cmp::Ordering::Equal;
        for (i, p) in perms.iter().enumerate() {
            let seg = &mut buf[i * d..(i + 1) * d];
            for (x, &px) in p.raw().iter().enumerate() {
                seg[w_raw[x] as usize] = w_raw[px as usize];
            }
            if state == std::cmp::Ordering::Equal {
                state = (*seg).cmp(&best[i * d..(i + 1) * d]);
                if state == std::cmp::Ordering::Greater {
                    break;
                }
            }
        }
        match state {
            std::cmp::Ordering::Less => {
                best.copy_from_slice(&buf);
                minimizers.clear();
                minimizers.push(w);
            }
            std::cmp::Ordering::Equal => minimizers.push(w),
            std::cmp::Ordering::Greater => {}
        }
    }
    let canonical = best
        .chunks(d)
        .map(|c| Permutation::from_raw(c.to_vec()))
        .collect();
    Ok((canonical, minimizers))
}

/// The least element of the simultaneous-conjugacy class of `t`.
///
/// Two marked tuples are equivalent iff their canonical forms are equal.
pub fn canonicalize(t: &MarkedTuple) -> Result<MarkedTuple> {
    let (_, minimizers) = minimal_conjugate(&t.perms)?;
    minimizers
        .iter()
        .map(|w| transport_marking(w, t))
        .process_results(|it| it.min())?
        .ok_or_else(|| Error::Internal("no minimizing conjugator".into()))
}

/// `{(|O|, g(O))}` over the orbits `O` of the tuple, with
/// `g(O) = 1 − |O| + ½ Σ_i Σ_{cycles c ⊆ O} (|c| − 1)`.
pub fn component_signature(t: &MarkedTuple) -> Result<ComponentSignature> {
    signature_of(&t.perms)
}

pub(crate) fn signature_of(perms: &[Permutation]) -> Result<ComponentSignature> {
    let d = perms[0].degree();
    let orbits = raw_orbits(perms, d);
    let mut orbit_of = vec![0usize; d];
    for (k, o) in orbits.iter().enumerate() {
        for &x in o {
            orbit_of[x] = k;
        }
    }
    let mut ramification = vec![0usize; orbits.len()];
    for p in perms {
        for c in raw_cycles(p.raw()) {
            ramification[orbit_of[c[0] as usize]] += c.len() - 1;
        }
    }
    let pairs = orbits
        .iter()
        .zip(&ramification)
        .map(|(o, &r)| {
            let twice = 2 + r;
            if twice % 2 != 0 || twice / 2 < o.len() {
                return Err(Error::Internal(format!(
                    "orbit of size {} has ramification {r}; genus is not a nonnegative integer",
                    o.len()
                )));
            }
            Ok((o.len(), twice / 2 - o.len()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ComponentSignature::new(pairs))
}

/// A boundary point of the moduli of 4-marked genus-0 curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    Zero,
    One,
    Infty,
}

impl Boundary {
    pub const ALL: [Boundary; 3] = [Boundary::Zero, Boundary::One, Boundary::Infty];

    pub fn name(self) -> &'static str {
        match self {
            Boundary::Zero => "zero",
            Boundary::One => "one",
            Boundary::Infty => "infty",
        }
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub(crate) fn require_four(t: &MarkedTuple) -> Result<[&Permutation; 4]> {
    match t.perms.as_slice() {
        [a, b, c, d] => Ok([a, b, c, d]),
        other => Err(Error::Unsupported(format!(
            "monodromy requires exactly 4 marked fibers, got {}",
            other.len()
        ))),
    }
}

/// Product of the permutations that collide at boundary `b`; its cycle type
/// is the ramification profile over the node.
///
/// * `infty`: `σ_3·σ_4`
/// * `one`: `σ_2·(σ_3·σ_4·σ_3⁻¹)`
/// * `zero`: `σ_1·(σ_2·σ_3·σ_4·σ_3⁻¹·σ_2⁻¹)`
pub fn node_product(t: &MarkedTuple, b: Boundary) -> Result<Permutation> {
    let [s1, s2, s3, s4] = require_four(t)?;
    let s34 = s3.compose_unchecked(s4);
    Ok(match b {
        Boundary::Infty => s34,
        Boundary::One => s2.compose_unchecked(&s4.conjugate_by_unchecked(s3)),
        Boundary::Zero => {
            let inner = s4.conjugate_by_unchecked(s3).conjugate_by_unchecked(s2);
            s1.compose_unchecked(&inner)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(d: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(d, cycles).unwrap()
    }

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn unmarked(perms: Vec<Permutation>) -> MarkedTuple {
        let markings = perms
            .iter()
            .map(|p| enumerate_markings(p, &p.cycle_type()).unwrap().remove(0))
            .collect();
        MarkedTuple::new(perms, markings).unwrap()
    }

    #[test]
    fn markings_of_figure_permutation() {
        let p = Permutation::parse("(1 2)(3)(4 5)", 5).unwrap();
        let ms = enumerate_markings(&p, &part(&[2, 2, 1])).unwrap();
        assert_eq!(ms.len(), 2);
        // the figure's marking: (1 2) -> 1, (4 5) -> 2 (sorted profile), (3) -> 3
        assert_eq!(ms[0].entries(), &[(1, 1), (4, 2), (3, 3)]);
        assert_eq!(ms[1].labels(), vec![2, 1, 3]);
    }

    #[test]
    fn marking_counts() {
        let p = Permutation::parse("(1 2 3)(4 5)", 6).unwrap();
        assert_eq!(enumerate_markings(&p, &part(&[3, 2, 1])).unwrap().len(), 1);
        let e = Permutation::identity(4).unwrap();
        assert_eq!(
            enumerate_markings(&e, &part(&[1, 1, 1, 1])).unwrap().len(),
            24
        );
        assert!(matches!(
            enumerate_markings(&e, &part(&[2, 1, 1])),
            Err(Error::CycleTypeMismatch { .. })
        ));
    }

    #[test]
    fn marking_validation() {
        let p = Permutation::parse("(1 2)(3)", 3).unwrap();
        assert!(Marking::from_labels(&p, &[1, 2]).is_ok());
        assert!(Marking::from_labels(&p, &[2, 1]).is_err());
        assert!(Marking::from_labels(&p, &[1, 1]).is_err());
        assert!(Marking::from_labels(&p, &[1]).is_err());
        assert!(Marking::from_cycle_labels(&p, &[(3, 2), (2, 1)]).is_ok());
        assert!(Marking::from_cycle_labels(&p, &[(1, 1), (2, 2)]).is_err());
    }

    #[test]
    fn tuple_validation() {
        let t = cyc(2, &[&[1, 2]]);
        let e = Permutation::identity(2).unwrap();
        let m = |p: &Permutation| enumerate_markings(p, &p.cycle_type()).unwrap().remove(0);
        assert!(MarkedTuple::new(
            vec![t.clone(), t.clone(), e.clone()],
            vec![m(&t), m(&t), m(&e)]
        )
        .is_ok());
        assert!(MarkedTuple::new(
            vec![t.clone(), e.clone(), e.clone()],
            vec![m(&t), m(&e), m(&e)]
        )
        .is_err());
        assert!(MarkedTuple::new(vec![t.clone(), t.clone()], vec![m(&t)]).is_err());
    }

    #[test]
    fn transport_examples() {
        let e = Permutation::identity(2).unwrap();
        let t2 = cyc(2, &[&[1, 2]]);
        let fixed = Marking::from_labels(&e, &[1, 2]).unwrap();
        let m2 = Marking::from_labels(&t2, &[1]).unwrap();
        let t = MarkedTuple::new(
            vec![t2.clone(), t2.clone(), e.clone(), e.clone()],
            vec![m2.clone(), m2, fixed.clone(), fixed],
        )
        .unwrap();
        assert_eq!(transport_marking(&e, &t).unwrap(), t);

        let moved = transport_marking(&t2, &t).unwrap();
        assert_eq!(moved.perms(), t.perms());
        // both identity fibers swap their labels simultaneously
        assert_eq!(moved.markings()[2].labels(), vec![2, 1]);
        assert_eq!(moved.markings()[3].labels(), vec![2, 1]);
        assert_eq!(transport_marking(&t2.inverse(), &moved).unwrap(), t);
    }

    #[test]
    fn transport_is_an_action() {
        let s = cyc(4, &[&[1, 2]]);
        let r = cyc(4, &[&[2, 3, 4]]);
        let perms = vec![s.clone(), s.clone(), r.clone(), r.inverse()];
        for ms in perms
            .iter()
            .map(|p| enumerate_markings(p, &p.cycle_type()).unwrap())
            .multi_cartesian_product()
        {
            let t = MarkedTuple::new(perms.clone(), ms).unwrap();
            for w in symmetric_group(4).iter().step_by(5) {
                for v in symmetric_group(4).iter().step_by(7) {
                    let wv = w.compose(v).unwrap();
                    let twice = transport_marking(w, &transport_marking(v, &t).unwrap()).unwrap();
                    assert_eq!(transport_marking(&wv, &t).unwrap(), twice);
                    let c = canonicalize(&t).unwrap();
                    assert_eq!(canonicalize(&twice).unwrap(), c);
                    assert_eq!(
                        component_signature(&twice).unwrap(),
                        component_signature(&t).unwrap()
                    );
                    MarkedTuple::new(twice.perms.clone(), twice.markings.clone()).unwrap();
                }
            }
        }
    }

    #[test]
    fn canonical_classes_degree_two() {
        // ((2),(2),(1,1),(1,1)): 4 marked tuples, 2 classes
        let t2 = cyc(2, &[&[1, 2]]);
        let e = Permutation::identity(2).unwrap();
        let perms = vec![t2.clone(), t2, e.clone(), e];
        let mut classes = std::collections::BTreeSet::new();
        let mut total = 0;
        for ms in perms
            .iter()
            .map(|p| enumerate_markings(p, &p.cycle_type()).unwrap())
            .multi_cartesian_product()
        {
            let t = MarkedTuple::new(perms.clone(), ms).unwrap();
            let c = canonicalize(&t).unwrap();
            assert_eq!(canonicalize(&c).unwrap(), c);
            classes.insert(c);
            total += 1;
        }
        assert_eq!(total, 4);
        assert_eq!(classes.len(), 2);
    }

    #[test]
    fn canonical_form_is_class_minimum() {
        let perms = vec![
            cyc(3, &[&[1, 2]]),
            cyc(3, &[&[1, 2]]),
            cyc(3, &[&[1, 3]]),
            cyc(3, &[&[1, 3]]),
        ];
        let t = unmarked(perms);
        let c = canonicalize(&t).unwrap();
        let min = symmetric_group(3)
            .iter()
            .map(|w| transport_marking(w, &t).unwrap())
            .min()
            .unwrap();
        assert_eq!(c, min);
    }

    #[test]
    fn signature_examples() {
        let a = cyc(3, &[&[1, 2]]);
        let b = cyc(3, &[&[2, 3]]);
        let t = unmarked(vec![a.clone(), a, b.clone(), b]);
        assert_eq!(component_signature(&t).unwrap().pairs(), &[(3, 0)]);

        let e = Permutation::identity(2).unwrap();
        let t = unmarked(vec![e.clone(), e.clone(), e.clone(), e]);
        assert_eq!(component_signature(&t).unwrap().pairs(), &[(1, 0), (1, 0)]);

        let r = cyc(3, &[&[1, 2, 3]]);
        let t = unmarked(vec![r.clone(), r.clone(), r.inverse(), r.inverse()]);
        assert_eq!(component_signature(&t).unwrap().pairs(), &[(3, 2)]);
    }

    #[test]
    fn node_products() {
        let e = Permutation::identity(3).unwrap();
        let s = cyc(3, &[&[2, 3]]);
        let t = unmarked(vec![e.clone(), e, s.clone(), s]);
        let infty = node_product(&t, Boundary::Infty).unwrap();
        assert!(infty.is_identity());
        assert_eq!(infty.cycle_type(), part(&[1, 1, 1]));

        let a = cyc(4, &[&[1, 2, 3]]);
        let b = cyc(4, &[&[3, 4]]);
        let c = cyc(4, &[&[1, 4]]);
        let last = a.compose(&b).unwrap().compose(&c).unwrap().inverse();
        let t = unmarked(vec![a.clone(), b.clone(), c, last]);
        let s12 = a.compose(&b).unwrap();
        assert_eq!(node_product(&t, Boundary::Infty).unwrap(), s12.inverse());

        let three = unmarked(vec![
            cyc(2, &[&[1, 2]]),
            cyc(2, &[&[1, 2]]),
            Permutation::identity(2).unwrap(),
        ]);
        assert!(matches!(
            node_product(&three, Boundary::Zero),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn text_and_json_forms() {
        let t = MarkedTuple::parse(
            "(1 2)^1 (3)^2 | (1 2)^1 (3)^2 | (1)^2 (2)^1 (3)^3 | (1)^1 (2)^2 (3)^3",
        )
        .unwrap();
        assert_eq!(
            t.to_string(),
            "(1 2)^1 (3)^2 | (1 2)^1 (3)^2 | (1)^2 (2)^1 (3)^3 | (1)^1 (2)^2 (3)^3"
        );
        let json = serde_json::to_string(&t).unwrap();
        assert!(json.starts_with(r#"{"fibers":[[{"cycle":[1,2],"label":1}"#));
        assert_eq!(serde_json::from_str::<MarkedTuple>(&json).unwrap(), t);
        assert_eq!(MarkedTuple::parse(&t.to_string()).unwrap(), t);

        assert!(MarkedTuple::parse("(1 2) (3)^2 | (1 2)^1 (3)^2").is_err());
        assert!(MarkedTuple::parse("(1 2)^1 (3)^2 | (1 3)^1 (2)^2").is_err());
        assert!(MarkedTuple::parse("(1 2)^1 | (1 2)^1 (3)^2").is_err());
        assert!(MarkedTuple::parse("").is_err());
    }
}
