//! Restriction of `S_n`-characters to `S_k × S_l` and the Z2-graded
//! cocharacters of `UT2(E)`.
//!
//! The multiplicity of `λ ⊗ μ` in `ν↓` is the LR coefficient `c^ν_{λμ}`.
//! The graded cocharacter of `UT2(E)` is the restricted cocharacter of
//! `UT2(F)` with every second component conjugated.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cocharacters::closed_forms::Status;
use crate::cocharacters::{cocharacter, AlgebraId};
use crate::error::{Error, Result};
use crate::partitions::{generate_partitions, Partition};
use crate::tableaux::LrCache;

/// An `S_k × S_l`-character `Σ m_{λ,μ} λ ⊗ μ`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiCharacter {
    k: usize,
    l: usize,
    terms: BTreeMap<(Partition, Partition), u64>,
}

impl BiCharacter {
    pub fn new(k: usize, l: usize) -> Self {
        BiCharacter {
            k,
            l,
            terms: BTreeMap::new(),
        }
    }

    /// Sums repeated keys and drops zeros. Fails on a key of the wrong weight.
    pub fn from_terms<I>(k: usize, l: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((Partition, Partition), u64)>,
    {
        let mut out = BiCharacter::new(k, l);
        for ((la, mu), m) in terms {
            if la.weight() != k {
                return Err(Error::WeightMismatch {
                    partition: la,
                    expected: k,
                });
            }
            if mu.weight() != l {
                return Err(Error::WeightMismatch {
                    partition: mu,
                    expected: l,
                });
            }
            if m > 0 {
                let slot = out.terms.entry((la, mu)).or_insert(0);
                *slot = slot
                    .checked_add(m)
                    .ok_or(Error::Overflow("bicharacter multiplicity"))?;
            }
        }
        Ok(out)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn terms(&self) -> &BTreeMap<(Partition, Partition), u64> {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, la: &Partition, mu: &Partition) -> u64 {
        self.terms
            .get(&(la.clone(), mu.clone()))
            .copied()
            .unwrap_or(0)
    }

    /// `λ ⊗ μ ↦ λ ⊗ μ'`.
    pub fn conjugate_second(&self) -> BiCharacter {
        BiCharacter::from_terms(
            self.k,
            self.l,
            self.terms
                .iter()
                .map(|((la, mu), &m)| ((la.clone(), mu.conjugate()), m)),
        )
        .expect("conjugation keeps weights")
    }

    /// `λ ⊗ μ ↦ μ ⊗ λ`, as a character of `S_l × S_k`.
    pub fn swap(&self) -> BiCharacter {
        BiCharacter::from_terms(
            self.l,
            self.k,
            self.terms
                .iter()
                .map(|((la, mu), &m)| ((mu.clone(), la.clone()), m)),
        )
        .expect("swap keeps weights")
    }

    pub fn checked_add(&self, other: &BiCharacter) -> Result<BiCharacter> {
        if (self.k, self.l) != (other.k, other.l) {
            return Err(Error::TruncationMismatch {
                left: self.k,
                right: other.k,
            });
        }
        BiCharacter::from_terms(
            self.k,
            self.l,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(key, &m)| (key.clone(), m)),
        )
    }

    fn scaled(&self, factor: u64) -> Result<BiCharacter> {
        let mut out = self.clone();
        for m in out.terms.values_mut() {
            *m = m
                .checked_mul(factor)
                .ok_or(Error::Overflow("bicharacter multiplicity"))?;
        }
        Ok(out)
    }

    /// `Σ m_{λ,μ} f^λ f^μ`.
    pub fn dimension(&self) -> Result<u64> {
        self.terms.iter().try_fold(0u64, |acc, ((la, mu), &m)| {
            let f = la
                .hook_dimension()?
                .checked_mul(mu.hook_dimension()?)
                .and_then(|x| x.checked_mul(m))
                .ok_or(Error::Overflow("bicharacter dimension"))?;
            acc.checked_add(f)
                .ok_or(Error::Overflow("bicharacter dimension"))
        })
    }

    /// e.g. `2(2,1)x(1) + (3)x()`; `0` when empty.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|((la, mu), &m)| {
                if m == 1 {
                    format!("{la}x{mu}")
                } else {
                    format!("{m}{la}x{mu}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Graded cocharacter of degree `n`, one layer per split `k + l = n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedCocharacter {
    degree: usize,
    layers: Vec<BiCharacter>,
}

impl GradedCocharacter {
    /// `layers[k]` must have `k` and `l = degree - k`.
    pub fn new(degree: usize, layers: Vec<BiCharacter>) -> Result<Self> {
        if layers.len() != degree + 1 {
            return Err(Error::SplitOutOfRange {
                k: layers.len(),
                degree,
            });
        }
        for (k, layer) in layers.iter().enumerate() {
            if layer.k != k || layer.l != degree - k {
                return Err(Error::SplitOutOfRange { k: layer.k, degree });
            }
        }
        Ok(GradedCocharacter { degree, layers })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn layers(&self) -> &[BiCharacter] {
        &self.layers
    }

    pub fn layer(&self, k: usize) -> Option<&BiCharacter> {
        self.layers.get(k)
    }
}

/// `ν↓_{S_k × S_l}`.
pub fn restrict(nu: &Partition, k: usize) -> Result<BiCharacter> {
    restrict_with(nu, k, LrCache::global())
}

pub fn restrict_with(nu: &Partition, k: usize, cache: &LrCache) -> Result<BiCharacter> {
    let n = nu.weight();
    if k > n {
        return Err(Error::SplitOutOfRange { k, degree: n });
    }
    let firsts: Vec<Partition> = generate_partitions(k)
        .into_iter()
        .filter(|la| nu.contains(la))
        .collect();
    let seconds: Vec<Partition> = generate_partitions(n - k)
        .into_iter()
        .filter(|mu| nu.contains(mu))
        .collect();
    let mut terms = Vec::new();
    for la in &firsts {
        for mu in &seconds {
            let c = cache.coefficient(la, mu, nu);
            if c > 0 {
                terms.push(((la.clone(), mu.clone()), c));
            }
        }
    }
    BiCharacter::from_terms(k, n - k, terms)
}

/// `χ_n(A)↓_{S_k × S_l}`. Only `UT2F` is supported.
pub fn cocharacter_restriction(a: AlgebraId, n: usize, k: usize) -> Result<BiCharacter> {
    if a != AlgebraId::UT2F {
        return Err(Error::UnsupportedAlgebra(a.to_string()));
    }
    if k > n {
        return Err(Error::SplitOutOfRange { k, degree: n });
    }
    let mut total = BiCharacter::new(k, n - k);
    for (nu, &m) in cocharacter(a, n)?.terms() {
        total = total.checked_add(&restrict(nu, k)?.scaled(m)?)?;
    }
    Ok(total)
}

/// `χ_n^{Z2}(UT2(E)) = Σ_{k+l=n} Σ m_{λ,μ} λ ⊗ μ'`.
pub fn graded_cocharacter_ut2e(n: usize) -> Result<GradedCocharacter> {
    let layers = (0..=n)
        .into_par_iter()
        .map(|k| cocharacter_restriction(AlgebraId::UT2F, n, k).map(|b| b.conjugate_second()))
        .collect::<Result<Vec<_>>>()?;
    GradedCocharacter::new(n, layers)
}

/// `Σ_k binom(n, k) Σ m_{λ,μ} f^λ f^μ`.
pub fn graded_dimension(g: &GradedCocharacter) -> Result<u64> {
    let n = g.degree as u64;
    let mut binom = 1u64;
    let mut total = 0u64;
    for (k, layer) in g.layers.iter().enumerate() {
        let term = binom
            .checked_mul(layer.dimension()?)
            .ok_or(Error::Overflow("graded dimension"))?;
        total = total
            .checked_add(term)
            .ok_or(Error::Overflow("graded dimension"))?;
        let k = k as u64;
        if k < n {
            binom = binom
                .checked_mul(n - k)
                .ok_or(Error::Overflow("binomial"))?
                / (k + 1);
        }
    }
    Ok(total)
}

/// Coarse shape classes used by the restriction table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    Row,
    TwoRows,
    TwoRowsOne,
    Other,
}

fn class(p: &Partition) -> Class {
    match (p.len(), p.part(2)) {
        (0 | 1, _) => Class::Row,
        (2, _) => Class::TwoRows,
        (3, 1) => Class::TwoRowsOne,
        _ => Class::Other,
    }
}

/// Table entry for a component `λ ⊗ μ` of `ν↓`: the line label and the
/// multiplicity it states. `None` when the table lists no such line.
pub fn restriction_table_entry(
    nu: &Partition,
    la: &Partition,
    mu: &Partition,
) -> Option<(&'static str, u64)> {
    use Class::*;
    match (class(nu), class(la), class(mu)) {
        (Row, Row, Row) => Some(("(n): (k)x(l)", 1)),
        (TwoRows, Row, Row) => Some(("(k1,k2) a: (k)x(l)", 1)),
        (TwoRows, TwoRows, Row) => Some(("(k1,k2) b: (l1,l2)x(l)", 1)),
        (TwoRows, TwoRows, TwoRows) => Some(("(k1,k2) c: (l1,l2)x(m1,m2)", 1)),
        (TwoRowsOne, TwoRows, Row) => Some(("(k1,k2,1) a: (l1,l2)x(l)", 1)),
        (TwoRowsOne, TwoRows, TwoRows) if mu.part(0) > mu.part(1) => {
            Some(("(k1,k2,1) b: (l1,l2)x(m1,m2), m1 - 1 >= m2", 2))
        }
        (TwoRowsOne, TwoRows, TwoRows) => Some(("(k1,k2,1) b: (l1,l2)x(m1,m2), m1 - 1 < m2", 1)),
        (TwoRowsOne, TwoRowsOne, Row) => Some(("(k1,k2,1) c: (l1,l2,1)x(l)", 1)),
        (TwoRowsOne, TwoRowsOne, TwoRows) => Some(("(k1,k2,1) d: (l1,l2,1)x(m1,m2)", 1)),
        _ => None,
    }
}

/// One component of one restriction, compared with the table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionFinding {
    pub nu: Partition,
    pub k: usize,
    pub lambda: Partition,
    pub mu: Partition,
    pub engine: u64,
    pub table: Option<u64>,
    pub case: String,
    pub status: Status,
}

/// Restricts every `ν` of shape `(n)`, `(k1,k2)` or `(k1,k2,1)` with
/// `|ν| ≤ n_max` at every split and compares each nonzero component with
/// the table. For `ν = (n)` the component `(k) ⊗ (l)` is always reported,
/// even if the engine misses it. Components of no listed line are
/// `not-covered`. Ordered by `(|ν|, ν, k)`, then component.
pub fn verify_restriction_table(n_max: usize) -> Result<Vec<RestrictionFinding>> {
    let mut jobs = Vec::new();
    for n in 1..=n_max {
        for nu in generate_partitions(n) {
            if class(&nu) != Class::Other {
                for k in 0..=n {
                    jobs.push((nu.clone(), k));
                }
            }
        }
    }
    let per_job = jobs
        .into_par_iter()
        .map(|(nu, k)| restriction_findings(&nu, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(per_job.into_iter().flatten().collect())
}

fn restriction_findings(nu: &Partition, k: usize) -> Result<Vec<RestrictionFinding>> {
    let l = nu.weight() - k;
    let mut res = restrict(nu, k)?;
    if class(nu) == Class::Row {
        res.terms
            .entry((Partition::row(k), Partition::row(l)))
            .or_insert(0);
    }
    Ok(res
        .terms
        .iter()
        .map(|((la, mu), &engine)| {
            let entry = restriction_table_entry(nu, la, mu);
            let status = match entry {
                None => Status::NotCovered,
                Some((_, t)) if t == engine => Status::Match,
                Some(_) => Status::Mismatch,
            };
            RestrictionFinding {
                nu: nu.clone(),
                k,
                lambda: la.clone(),
                mu: mu.clone(),
                engine,
                table: entry.map(|(_, t)| t),
                case: entry.map_or("unlisted component", |(c, _)| c).to_string(),
                status,
            }
        })
        .collect())
}

#[derive(Serialize, Deserialize)]
struct BiTermJson {
    lambda: Partition,
    mu: Partition,
    mult: u64,
}

#[derive(Serialize, Deserialize)]
struct BiCharacterJson {
    k: usize,
    l: usize,
    terms: Vec<BiTermJson>,
}

#[derive(Serialize, Deserialize)]
struct GradedJson {
    degree: usize,
    layers: Vec<BiCharacterJson>,
}

impl From<&BiCharacter> for BiCharacterJson {
    fn from(b: &BiCharacter) -> Self {
        BiCharacterJson {
            k: b.k,
            l: b.l,
            terms: b
                .terms
                .iter()
                .map(|((la, mu), &m)| BiTermJson {
                    lambda: la.clone(),
                    mu: mu.clone(),
                    mult: m,
                })
                .collect(),
        }
    }
}

impl TryFrom<BiCharacterJson> for BiCharacter {
    type Error = Error;

    fn try_from(raw: BiCharacterJson) -> Result<Self> {
        BiCharacter::from_terms(
            raw.k,
            raw.l,
            raw.terms.into_iter().map(|t| ((t.lambda, t.mu), t.mult)),
        )
    }
}

impl Serialize for BiCharacter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BiCharacterJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiCharacter {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        BiCharacterJson::deserialize(d)?
            .try_into()
            .map_err(serde::de::Error::custom)
    }
}

impl Serialize for GradedCocharacter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GradedJson {
            degree: self.degree,
            layers: self.layers.iter().map(BiCharacterJson::from).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedCocharacter {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GradedJson::deserialize(d)?;
        let layers = raw
            .layers
            .into_iter()
            .map(BiCharacter::try_from)
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        GradedCocharacter::new(raw.degree, layers).map_err(serde::de::Error::custom)
    }
}
