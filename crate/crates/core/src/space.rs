//! Hurwitz space types `(d̲, ḡ, μ̲)` and the command-line spec grammar.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Partition, MAX_DEGREE};

/// Multiset of `(orbit size, orbit genus)` pairs, stored sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComponentSignature(Vec<(usize, usize)>);

impl ComponentSignature {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        Self(pairs)
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn total_degree(&self) -> usize {
        self.0.iter().map(|p| p.0).sum()
    }
}

/// A Hurwitz space of fully-marked admissible covers: source components of
/// degrees `d̲` and genera `ḡ`, and ramification profiles `μ̲` over `m`
/// marked points of a genus-0 target.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpaceFields", into = "SpaceFields")]
pub struct HurwitzSpec {
    degree_partition: Partition,
    genera: Vec<usize>,
    profiles: Vec<Partition>,
}

#[derive(Serialize, Deserialize)]
struct SpaceFields {
    degrees: Partition,
    genera: Vec<usize>,
    profiles: Vec<Partition>,
}

impl TryFrom<SpaceFields> for HurwitzSpec {
    type Error = Error;
    fn try_from(f: SpaceFields) -> Result<Self> {
        HurwitzSpec::new(f.degrees, f.genera, f.profiles)
    }
}

impl From<HurwitzSpec> for SpaceFields {
    fn from(s: HurwitzSpec) -> Self {
        SpaceFields {
            degrees: s.degree_partition,
            genera: s.genera,
            profiles: s.profiles,
        }
    }
}

impl HurwitzSpec {
    /// `genera[ℓ]` pairs with the `ℓ`-th part of `degree_partition` as given
    /// (parts are sorted, and genera are permuted along with them).
    pub fn new(
        degree_partition: Partition,
        genera: Vec<usize>,
        profiles: Vec<Partition>,
    ) -> Result<Self> {
        if profiles.len() < 3 {
            return Err(Error::InvalidSpec(format!(
                "need at least 3 marked fibers, got {}",
                profiles.len()
            )));
        }
        if genera.len() != degree_partition.len() {
            return Err(Error::InvalidSpec(format!(
                "{} genera for {} source components",
                genera.len(),
                degree_partition.len()
            )));
        }
        let d = degree_partition.weight();
        if d > MAX_DEGREE {
            return Err(Error::InvalidSpec(format!(
                "degree {d} exceeds {MAX_DEGREE}"
            )));
        }
        if let Some(mu) = profiles.iter().find(|mu| mu.weight() != d) {
            return Err(Error::InvalidSpec(format!(
                "profile {mu} has weight {}, expected {d}",
                mu.weight()
            )));
        }
        Ok(Self {
            degree_partition,
            genera,
            profiles,
        })
    }

    /// Builds a spec from the pairs `(d_ℓ, g_ℓ)` and the profiles.
    pub fn from_components(
        components: &[(usize, usize)],
        profiles: Vec<Partition>,
    ) -> Result<Self> {
        let mut comps = components.to_vec();
        comps.sort_unstable_by(|a, b| b.cmp(a));
        let degrees = Partition::new(comps.iter().map(|c| c.0).collect())?;
        Self::new(degrees, comps.iter().map(|c| c.1).collect(), profiles)
    }

    pub fn degree_partition(&self) -> &Partition {
        &self.degree_partition
    }

    pub fn genera(&self) -> &[usize] {
        &self.genera
    }

    pub fn profiles(&self) -> &[Partition] {
        &self.profiles
    }

    /// `d`, the total degree of the cover.
    pub fn degree(&self) -> usize {
        self.degree_partition.weight()
    }

    /// `m`, the number of marked fibers.
    pub fn fiber_count(&self) -> usize {
        self.profiles.len()
    }

    pub fn is_connected(&self) -> bool {
        self.degree_partition.len() == 1
    }

    pub fn expected_signature(&self) -> ComponentSignature {
        ComponentSignature::new(
            self.degree_partition
                .parts()
                .iter()
                .copied()
                .zip(self.genera.iter().copied())
                .collect(),
        )
    }

    /// Parses the three CLI flags.
    ///
    /// `degrees` and `genera` are comma-separated; `profiles` is a
    /// semicolon-separated list of comma-separated partitions, where a
    /// trailing `^k` repeats a partition `k` times (`"2,1^4"`).
    pub fn from_flags(degrees: &str, genera: &str, profiles: &str) -> Result<Self> {
        let degree_parts = parse_csv(degrees, "--degrees", 1)?;
        let genera = parse_csv(genera, "--genera", 0)?;
        let profiles = parse_profiles(profiles)?;
        if genera.len() != degree_parts.len() {
            return Err(Error::Flag {
                flag: "--genera",
                message: format!(
                    "expected {} values to match --degrees, got {}",
                    degree_parts.len(),
                    genera.len()
                ),
            });
        }
        // keep each genus attached to its degree while sorting
        let pairs: Vec<(usize, usize)> = degree_parts.into_iter().zip(genera).collect();
        Self::from_components(&pairs, profiles).map_err(|e| Error::Flag {
            flag: "--profiles",
            message: e.to_string(),
        })
    }

    /// The `degrees=.. genera=.. profiles=..` form used by the golden file.
    pub fn to_flags(&self) -> String {
        format!(
            "degrees={} genera={} profiles={}",
            self.degree_partition.to_csv(),
            self.genera.iter().join(","),
            self.profiles.iter().map(Partition::to_csv).join(";")
        )
    }
}

fn parse_csv(text: &str, flag: &'static str, min: usize) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Flag {
            flag,
            message: "empty list".into(),
        });
    }
    text.split(',')
        .map(|item| {
            let item = item.trim();
            let v: usize = item.parse().map_err(|_| Error::Flag {
                flag,
                message: format!("'{item}' is not a nonnegative integer"),
            })?;
            if v < min {
                return Err(Error::Flag {
                    flag,
                    message: format!("value {v} must be at least {min}"),
                });
            }
            Ok(v)
        })
        .collect()
}

/// Parses `"2,1;2,1^2;1,1,1"`.
pub fn parse_profiles(text: &str) -> Result<Vec<Partition>> {
    const FLAG: &str = "--profiles";
    let mut out = Vec::new();
    for segment in text.split(';') {
        let (body, repeat) = match segment.split_once('^') {
            Some((body, k)) => {
                let k = k.trim();
                let k: usize = k.parse().map_err(|_| Error::Flag {
                    flag: FLAG,
                    message: format!("bad repeat count '{k}'"),
                })?;
                if k == 0 || k > 16 {
                    return Err(Error::Flag {
                        flag: FLAG,
                        message: format!("repeat count {k} outside 1..=16"),
                    });
                }
                (body, k)
            }
            None => (segment, 1),
        };
        let parts = parse_csv(body, FLAG, 1)?;
        let mu = Partition::new(parts).map_err(|e| Error::Flag {
            flag: FLAG,
            message: e.to_string(),
        })?;
        out.extend(std::iter::repeat_n(mu, repeat));
        if out.len() > 64 {
            return Err(Error::Flag {
                flag: FLAG,
                message: "too many profiles".into(),
            });
        }
    }
    Ok(out)
}

impl fmt::Display for HurwitzSpec {
    /// Renders `H_{d,g}(..)` with exponent notation for repeated profiles.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_connected() {
            write!(f, "H_{{{},{}}}(", self.degree(), self.genera[0])?;
        } else {
            write!(
                f,
                "H_{{{},({})}}(",
                self.degree_partition,
                self.genera.iter().join(",")
            )?;
        }
        let groups = self
            .profiles
            .iter()
            .dedup_with_count()
            .map(|(n, mu)| {
                if n == 1 {
                    mu.to_string()
                } else {
                    format!("{mu}^{n}")
                }
            })
            .join(", ");
        write!(f, "{groups})")
    }
}
