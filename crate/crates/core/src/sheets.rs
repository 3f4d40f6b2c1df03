//! Enumeration of the sheets of a Hurwitz space over the open moduli of
//! targets: one canonical [`MarkedTuple`] per simultaneous-conjugacy class.
//!
//! Generation walks `σ_1..σ_{m−1}` over their conjugacy classes and solves for
//! `σ_m`. Candidate permutation tuples are reduced to their minimal conjugate
//! `P*`; markings are then minimized over the centralizer of `P*`, which is
//! exactly the set of conjugators that keep `P*` fixed. The result is the same
//! total order as [`canonicalize`](crate::marked::canonicalize).

use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::marked::{label_assignments, minimal_conjugate, signature_of, MarkedTuple, Marking};
use crate::perm::{conjugacy_class, raw_cycles, Permutation};
use crate::space::HurwitzSpec;

/// Enumeration guard on the degree.
pub const MAX_SHEET_DEGREE: usize = 9;
/// Enumeration guard on the number of marked fibers.
pub const MAX_FIBERS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Fix `σ_1` to the least element of its conjugacy class. Every class of
    /// tuples has a member of that shape, so output is unchanged.
    pub symmetry_reduction: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self {
            symmetry_reduction: true,
        }
    }
}

pub fn enumerate_sheets(spec: &HurwitzSpec) -> Result<Vec<MarkedTuple>> {
    enumerate_sheets_with(spec, EnumerationOptions::default())
}

pub fn count_sheets(spec: &HurwitzSpec) -> Result<usize> {
    enumerate_sheets(spec).map(|s| s.len())
}

pub fn enumerate_sheets_with(
    spec: &HurwitzSpec,
    options: EnumerationOptions,
) -> Result<Vec<MarkedTuple>> {
    let d = spec.degree();
    let m = spec.fiber_count();
    if d > MAX_SHEET_DEGREE {
        return Err(Error::TooLarge(format!(
            "degree {d} exceeds the enumeration limit {MAX_SHEET_DEGREE}"
        )));
    }
    if m > MAX_FIBERS {
        return Err(Error::TooLarge(format!(
            "{m} marked fibers exceed the enumeration limit {MAX_FIBERS}"
        )));
    }
    let classes = spec
        .profiles()
        .iter()
        .map(conjugacy_class)
        .collect::<Result<Vec<_>>>()?;
    let first: Vec<Permutation> = if options.symmetry_reduction {
        classes[0].iter().take(1).cloned().collect()
    } else {
        classes[0].clone()
    };
    let prefixes: Vec<(&Permutation, &Permutation)> =
        first.iter().cartesian_product(classes[1].iter()).collect();

    let target = spec.expected_signature();
    let last_type = &spec.profiles()[m - 1];
    let middle = &classes[2..m - 1];

    // canonical permutation tuples, deduplicated per worker then merged
    let canonical: BTreeSet<Vec<Permutation>> = prefixes
        .par_iter()
        .map(|&(s1, s2)| -> Result<BTreeSet<Vec<Permutation>>> {
            let mut found = BTreeSet::new();
            let head = s1.compose_unchecked(s2);
            let mut tuple = vec![s1.clone(), s2.clone()];
            walk(middle, &head, &mut tuple, &mut |tuple, prod| {
                let last = prod.inverse();
                if &last.cycle_type() != last_type {
                    return Ok(());
                }
                tuple.push(last);
                let keep = signature_of(tuple)? == target;
                if keep {
                    let (min, _) = minimal_conjugate(tuple)?;
                    found.insert(min);
                }
                tuple.pop();
                Ok(())
            })?;
            Ok(found)
        })
        .try_reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            Ok(a)
        })?;

    let canonical: Vec<Vec<Permutation>> = canonical.into_iter().collect();
    let per_class = canonical
        .par_iter()
        .map(|perms| canonical_markings(perms, spec))
        .collect::<Result<Vec<_>>>()?;
    // classes are sorted by permutations and each class's markings are sorted
    Ok(per_class.into_iter().flatten().collect())
}

/// Recursively chooses the middle permutations, calling `emit` with the
/// partial tuple and its running product.
fn walk(
    classes: &[Vec<Permutation>],
    prod: &Permutation,
    tuple: &mut Vec<Permutation>,
    emit: &mut dyn FnMut(&mut Vec<Permutation>, &Permutation) -> Result<()>,
) -> Result<()> {
    match classes.split_first() {
        None => emit(tuple, prod),
        Some((class, rest)) => {
            for p in class {
                let next = prod.compose_unchecked(p);
                tuple.push(p.clone());
                walk(rest, &next, tuple, emit)?;
                tuple.pop();
            }
            Ok(())
        }
    }
}

/// Canonical marked tuples whose permutations are the canonical tuple `perms`,
/// sorted.
fn canonical_markings(perms: &[Permutation], spec: &HurwitzSpec) -> Result<Vec<MarkedTuple>> {
    let (check, centralizer) = minimal_conjugate(perms)?;
    if check.as_slice() != perms {
        return Err(Error::Internal("permutation tuple is not canonical".into()));
    }
    let cycles: Vec<Vec<Vec<u8>>> = perms.iter().map(|p| raw_cycles(p.raw())).collect();

    // for each centralizer element and fiber, where each cycle index goes
    let cycle_maps: Vec<Vec<Vec<usize>>> = centralizer
        .iter()
        .map(|z| {
            cycles
                .iter()
                .map(|fiber| {
                    let mut owner = vec![0usize; perms[0].degree()];
                    for (k, c) in fiber.iter().enumerate() {
                        for &x in c {
                            owner[x as usize] = k;
                        }
                    }
                    fiber
                        .iter()
                        .map(|c| owner[z.raw()[c[0] as usize] as usize])
                        .collect()
                })
                .collect()
        })
        .collect();

    let per_fiber: Vec<Vec<Vec<usize>>> = spec.profiles().iter().map(label_assignments).collect();
    let mut seen: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
    for labels in per_fiber.iter().map(|v| v.iter()).multi_cartesian_product() {
        let mut best: Vec<Vec<usize>> = labels.iter().map(|l| l.to_vec()).collect();
        let mut moved = best.clone();
        for maps in &cycle_maps {
            for ((src, dst), map) in labels.iter().zip(moved.iter_mut()).zip(maps) {
                for (k, &label) in src.iter().enumerate() {
                    dst[map[k]] = label;
                }
            }
            if moved < best {
                best.clone_from(&moved);
            }
        }
        seen.insert(best);
    }

    Ok(seen
        .into_iter()
        .map(|labels| {
            let markings = perms
                .iter()
                .zip(&cycles)
                .zip(labels)
                .map(|((_, fiber), l)| {
                    Marking::from_raw_entries(
                        fiber
                            .iter()
                            .zip(l)
                            .map(|(c, l)| (c[0] as usize + 1, l))
                            .collect(),
                    )
                })
                .collect();
            MarkedTuple::new_unchecked(perms.to_vec(), markings)
        })
        .collect())
}
