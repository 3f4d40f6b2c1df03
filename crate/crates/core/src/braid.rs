//! Monodromy of the target map for four marked fibers.
//!
//! Moving the target's moduli point once around a boundary point `0`, `1` or
//! `∞` rewrites a sheet `(σ_1, σ_2, σ_3, σ_4)` fiberwise as `τ_i = w_i σ_i w_i⁻¹`:
//!
//! | boundary | `w_1`  | `w_2`          | `w_3`  | `w_4`                 |
//! |----------|--------|----------------|--------|-----------------------|
//! | `∞`      | `e`    | `e`            | `σ_3σ_4` | `σ_3`               |
//! | `1`      | `e`    | `σ_2σ_3σ_4σ_3⁻¹` | `e`  | `σ_3⁻¹σ_2σ_3`         |
//! | `0`      | `σ_1W` | `e`            | `e`    | `σ_3⁻¹σ_2⁻¹σ_1σ_2σ_3` |
//!
//! with `W = σ_2σ_3σ_4σ_3⁻¹σ_2⁻¹`. Labels travel with each `w_i`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::marked::{
    canonicalize, node_product, require_four, transport_fiber, Boundary, MarkedTuple,
};
use crate::perm::{Partition, Permutation, UnionFind};
use crate::sheets::enumerate_sheets;
use crate::space::HurwitzSpec;

/// The per-fiber conjugators of the move around `b`.
pub fn move_conjugators(t: &MarkedTuple, b: Boundary) -> Result<[Permutation; 4]> {
    let [s1, s2, s3, s4] = require_four(t)?;
    let e = Permutation::identity(t.degree())?;
    let s3_inv = s3.inverse();
    Ok(match b {
        Boundary::Infty => [e.clone(), e, s3.compose_unchecked(s4), s3.clone()],
        Boundary::One => {
            let w2 = s2
                .compose_unchecked(s3)
                .compose_unchecked(s4)
                .compose_unchecked(&s3_inv);
            let w4 = s3_inv.compose_unchecked(s2).compose_unchecked(s3);
            [e.clone(), w2, e, w4]
        }
        Boundary::Zero => {
            let s2_inv = s2.inverse();
            let big_w = s2
                .compose_unchecked(s3)
                .compose_unchecked(s4)
                .compose_unchecked(&s3_inv)
                .compose_unchecked(&s2_inv);
            let w1 = s1.compose_unchecked(&big_w);
            let w4 = s3_inv
                .compose_unchecked(&s2_inv)
                .compose_unchecked(s1)
                .compose_unchecked(s2)
                .compose_unchecked(s3);
            [w1, e.clone(), e, w4]
        }
    })
}

/// Applies the move around `b`, transporting every fiber's marking along its conjugator.
pub fn apply_move(t: &MarkedTuple, b: Boundary) -> Result<MarkedTuple> {
    let ws = move_conjugators(t, b)?;
    let (perms, markings) = t
        .perms()
        .iter()
        .zip(t.markings())
        .zip(&ws)
        .map(|((p, m), w)| transport_fiber(w, p, m))
        .unzip();
    MarkedTuple::new(perms, markings)
        .map_err(|e| Error::Internal(format!("move around {b} broke a sheet: {e}")))
}

pub fn move_infty(t: &MarkedTuple) -> Result<MarkedTuple> {
    apply_move(t, Boundary::Infty)
}

pub fn move_one(t: &MarkedTuple) -> Result<MarkedTuple> {
    apply_move(t, Boundary::One)
}

pub fn move_zero(t: &MarkedTuple) -> Result<MarkedTuple> {
    apply_move(t, Boundary::Zero)
}

/// Sheets with the three permutations induced on them by the boundary moves.
///
/// `action(b)[k]` is the 0-based index of the sheet reached from sheet `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SheetGraph {
    pub sheets: Vec<MarkedTuple>,
    pub s_zero: Vec<usize>,
    pub s_one: Vec<usize>,
    pub s_infty: Vec<usize>,
}

impl SheetGraph {
    pub fn action(&self, b: Boundary) -> &[usize] {
        match b {
            Boundary::Zero => &self.s_zero,
            Boundary::One => &self.s_one,
            Boundary::Infty => &self.s_infty,
        }
    }

    pub fn len(&self) -> usize {
        self.sheets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sheets.is_empty()
    }

    /// Whether `s_a·s_b·s_c` (rightmost applied first) is the identity on sheets.
    pub fn product_is_identity(&self, order: [Boundary; 3]) -> bool {
        let [a, b, c] = order.map(|x| self.action(x));
        (0..self.len()).all(|k| a[b[c[k]]] == k)
    }
}

pub fn build_sheet_graph(spec: &HurwitzSpec) -> Result<SheetGraph> {
    if spec.fiber_count() != 4 {
        return Err(Error::Unsupported(format!(
            "monodromy requires exactly 4 marked fibers, got {}",
            spec.fiber_count()
        )));
    }
    sheet_graph_from(enumerate_sheets(spec)?)
}

/// Builds the graph on an already enumerated, sorted, canonical sheet list.
pub fn sheet_graph_from(sheets: Vec<MarkedTuple>) -> Result<SheetGraph> {
    let s_zero = induced_action(&sheets, Boundary::Zero)?;
    let s_one = induced_action(&sheets, Boundary::One)?;
    let s_infty = induced_action(&sheets, Boundary::Infty)?;
    Ok(SheetGraph {
        sheets,
        s_zero,
        s_one,
        s_infty,
    })
}

fn induced_action(sheets: &[MarkedTuple], b: Boundary) -> Result<Vec<usize>> {
    let images = sheets
        .par_iter()
        .map(|t| {
            let moved = canonicalize(&apply_move(t, b)?)?;
            sheets.binary_search(&moved).map_err(|_| {
                Error::Internal(format!("moved sheet {moved} is not in the sheet set"))
            })
        })
        .collect::<Result<Vec<usize>>>()?;
    let mut hit = vec![false; images.len()];
    for &k in &images {
        if std::mem::replace(&mut hit[k], true) {
            return Err(Error::Internal(format!(
                "move around {b} is not a bijection on sheets"
            )));
        }
    }
    Ok(images)
}

/// One value per boundary point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PerBoundary<T> {
    pub zero: T,
    pub one: T,
    pub infty: T,
}

impl<T> PerBoundary<T> {
    pub fn get(&self, b: Boundary) -> &T {
        match b {
            Boundary::Zero => &self.zero,
            Boundary::One => &self.one,
            Boundary::Infty => &self.infty,
        }
    }

    pub fn try_from_fn(mut f: impl FnMut(Boundary) -> Result<T>) -> Result<Self> {
        Ok(Self {
            zero: f(Boundary::Zero)?,
            one: f(Boundary::One)?,
            infty: f(Boundary::Infty)?,
        })
    }
}

/// One connected component of the Hurwitz curve.
///
/// Sheet numbers are 1-based positions in the sorted sheet list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub sheets: Vec<usize>,
    /// Degree of the target map on this component.
    pub degree: usize,
    pub genus: usize,
    /// Cycle type of the sheet permutation over each boundary point.
    pub ram: PerBoundary<Partition>,
    /// Node ramification profiles, one per cycle of the sheet permutation.
    pub node_profiles: PerBoundary<Vec<Partition>>,
    /// Restricted sheet permutations as cycles of sheet numbers.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monodromy: Option<PerBoundary<Vec<Vec<usize>>>>,
}

/// Orbits of `⟨s_zero, s_one, s_infty⟩` with degree, ramification and genus.
///
/// Sorted by degree, genus, then ramification over `0, 1, ∞`.
pub fn components(g: &SheetGraph) -> Result<Vec<ComponentReport>> {
    let n = g.len();
    let mut uf = UnionFind::new(n);
    for b in Boundary::ALL {
        for (k, &j) in g.action(b).iter().enumerate() {
            uf.union(k, j);
        }
    }
    let mut out = uf
        .classes()
        .into_iter()
        .map(|orbit| component_report(g, &orbit))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| {
        (a.degree, a.genus, &a.ram, &a.sheets).cmp(&(b.degree, b.genus, &b.ram, &b.sheets))
    });
    Ok(out)
}

fn component_report(g: &SheetGraph, orbit: &[usize]) -> Result<ComponentReport> {
    let cycles = PerBoundary::try_from_fn(|b| Ok(action_cycles(g.action(b), orbit)))?;
    let ram =
        PerBoundary::try_from_fn(|b| Partition::new(cycles.get(b).iter().map(Vec::len).collect()))?;
    let node_profiles = PerBoundary::try_from_fn(|b| {
        let mut profiles = cycles
            .get(b)
            .iter()
            .map(|c| node_product(&g.sheets[c[0]], b).map(|p| p.cycle_type()))
            .collect::<Result<Vec<_>>>()?;
        profiles.sort();
        Ok(profiles)
    })?;
    let degree = orbit.len();
    let ramification: usize = Boundary::ALL
        .iter()
        .map(|&b| ram.get(b).ramification())
        .sum();
    // 2g − 2 = −2·degree + Σ (p − 1)
    let twice = ramification + 2;
    if !twice.is_multiple_of(2) || twice / 2 < degree {
        return Err(Error::Internal(format!(
            "component of degree {degree} with ramification {ramification} has no integral genus"
        )));
    }
    let numbered = |cs: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
        cs.iter()
            .map(|c| c.iter().map(|k| k + 1).collect())
            .collect()
    };
    Ok(ComponentReport {
        sheets: orbit.iter().map(|k| k + 1).collect(),
        degree,
        genus: twice / 2 - degree,
        ram,
        node_profiles,
        monodromy: Some(PerBoundary {
            zero: numbered(&cycles.zero),
            one: numbered(&cycles.one),
            infty: numbered(&cycles.infty),
        }),
    })
}

/// Cycles of `action` restricted to `orbit`, each starting at its least
/// sheet, longest first.
fn action_cycles(action: &[usize], orbit: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = BTreeMap::new();
    let mut cycles = Vec::new();
    for &start in orbit {
        if seen.contains_key(&start) {
            continue;
        }
        let mut cycle = vec![start];
        seen.insert(start, ());
        let mut k = action[start];
        while k != start {
            seen.insert(k, ());
            cycle.push(k);
            k = action[k];
        }
        cycles.push(cycle);
    }
    cycles.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    cycles
}

/// Whole-space report: sheet count, components and the observed boundary relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceReport {
    pub space: HurwitzSpec,
    pub sheet_count: usize,
    pub components: Vec<ComponentReport>,
    /// Whether `s_zero·s_one·s_infty` is the identity on sheets.
    pub zero_one_infty_trivial: bool,
    /// Whether `s_infty·s_one·s_zero` is the identity on sheets.
    pub infty_one_zero_trivial: bool,
}

pub fn report(spec: &HurwitzSpec) -> Result<SpaceReport> {
    let graph = build_sheet_graph(spec)?;
    let components = components(&graph)?;
    Ok(SpaceReport {
        space: spec.clone(),
        sheet_count: graph.len(),
        zero_one_infty_trivial: graph.product_is_identity([
            Boundary::Zero,
            Boundary::One,
            Boundary::Infty,
        ]),
        infty_one_zero_trivial: graph.product_is_identity([
            Boundary::Infty,
            Boundary::One,
            Boundary::Zero,
        ]),
        components,
    })
}
