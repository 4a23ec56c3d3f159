//! Degree-truncated formal sums of Schur functions.
//!
//! A [`SchurSeries`] carries an explicit truncation `D` and only terms of
//! degree `≤ D`. All binary operations require equal truncations. Products
//! are expanded with the Littlewood–Richardson rule and truncated.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{generate_partitions, Partition};
use crate::tableaux::{pieri_row, LrCache};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurSeries {
    truncation: usize,
    terms: BTreeMap<Partition, i64>,
}

impl SchurSeries {
    pub fn zero(truncation: usize) -> Self {
        SchurSeries {
            truncation,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `S_() = 1`.
    pub fn one(truncation: usize) -> Self {
        SchurSeries::from_terms(truncation, [(Partition::empty(), 1)])
    }

    /// Collects terms, summing repeats and dropping zeros and anything above
    /// the truncation.
    pub fn from_terms<I>(truncation: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, i64)>,
    {
        let mut out = SchurSeries::zero(truncation);
        for (la, c) in terms {
            out.add_term(la, c);
        }
        out
    }

    fn add_term(&mut self, la: Partition, c: i64) {
        if c == 0 || la.weight() > self.truncation {
            return;
        }
        let entry = self.terms.entry(la);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn terms(&self) -> &BTreeMap<Partition, i64> {
        &self.terms
    }

    pub fn coefficient(&self, la: &Partition) -> i64 {
        self.terms.get(la).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_truncation(&self, other: &SchurSeries) -> Result<()> {
        if self.truncation != other.truncation {
            return Err(Error::TruncationMismatch {
                left: self.truncation,
                right: other.truncation,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &SchurSeries) -> Result<SchurSeries> {
        self.same_truncation(other)?;
        let mut out = self.clone();
        for (la, &c) in &other.terms {
            out.add_term(la.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SchurSeries) -> Result<SchurSeries> {
        self.checked_add(&other.scale(-1))
    }

    pub fn scale(&self, factor: i64) -> SchurSeries {
        SchurSeries::from_terms(
            self.truncation,
            self.terms.iter().map(|(la, &c)| (la.clone(), c * factor)),
        )
    }

    /// LR-expanded product truncated to degree `≤ D`, using the global cache.
    pub fn checked_mul(&self, other: &SchurSeries) -> Result<SchurSeries> {
        self.checked_mul_with(other, LrCache::global())
    }

    /// Product with an explicit LR cache. Support pairs are expanded in
    /// parallel on the current rayon pool; partial sums are merged in a
    /// fixed order and integer addition commutes, so the result does not
    /// depend on the pool size.
    pub fn checked_mul_with(&self, other: &SchurSeries, cache: &LrCache) -> Result<SchurSeries> {
        self.same_truncation(other)?;
        let d = self.truncation;
        let left: Vec<(&Partition, i64)> = self.terms.iter().map(|(p, &c)| (p, c)).collect();
        let partials: Vec<Result<BTreeMap<Partition, i64>>> = left
            .par_iter()
            .map(|&(la, a)| {
                let mut acc: BTreeMap<Partition, i64> = BTreeMap::new();
                for (mu, &b) in &other.terms {
                    if la.weight() + mu.weight() > d {
                        // terms are ordered by weight
                        break;
                    }
                    let ab = a.checked_mul(b).ok_or(Error::Overflow("series product"))?;
                    // rows go through the Pieri rule
                    let expansion = match (la.len(), mu.len()) {
                        (_, 0 | 1) => Arc::new(pieri_row(la, mu.weight())),
                        (0 | 1, _) => Arc::new(pieri_row(mu, la.weight())),
                        _ => cache.product(la, mu),
                    };
                    for (nu, &c) in expansion.iter() {
                        let c = i64::try_from(c).map_err(|_| Error::Overflow("LR coefficient"))?;
                        let term = ab.checked_mul(c).ok_or(Error::Overflow("series product"))?;
                        let slot = acc.entry(nu.clone()).or_insert(0);
                        *slot = slot
                            .checked_add(term)
                            .ok_or(Error::Overflow("series product"))?;
                    }
                }
                Ok(acc)
            })
            .collect();
        let mut merged: BTreeMap<Partition, i64> = BTreeMap::new();
        for partial in partials {
            for (nu, c) in partial? {
                let slot = merged.entry(nu).or_insert(0);
                *slot = slot
                    .checked_add(c)
                    .ok_or(Error::Overflow("series product"))?;
            }
        }
        Ok(SchurSeries::from_terms(d, merged))
    }

    /// Drops terms of degree above `d`.
    pub fn truncate(&self, d: usize) -> Result<SchurSeries> {
        if d > self.truncation {
            return Err(Error::DegreeExceedsTruncation {
                degree: d,
                truncation: self.truncation,
            });
        }
        Ok(SchurSeries::from_terms(
            d,
            self.terms.iter().map(|(la, &c)| (la.clone(), c)),
        ))
    }

    /// Terms of degree exactly `n`, signs preserved.
    pub fn signed_slice(&self, n: usize) -> BTreeMap<Partition, i64> {
        self.terms
            .iter()
            .filter(|(la, _)| la.weight() == n)
            .map(|(la, &c)| (la.clone(), c))
            .collect()
    }

    /// The degree-`n` layer as a character. A negative coefficient there
    /// cannot come from an algebra and is reported as an error.
    pub fn degree_slice(&self, n: usize) -> Result<CharacterDecomposition> {
        if n > self.truncation {
            return Err(Error::DegreeExceedsTruncation {
                degree: n,
                truncation: self.truncation,
            });
        }
        let mut terms = BTreeMap::new();
        for (la, c) in self.signed_slice(n) {
            if c < 0 {
                return Err(Error::NegativeMultiplicity {
                    partition: la,
                    mult: c,
                    degree: n,
                });
            }
            terms.insert(la, c as u64);
        }
        Ok(CharacterDecomposition { degree: n, terms })
    }
}

/// `Σ_{k=0}^{D} S_(k)`, the Schur form of `∏ 1/(1 - t_i)`.
pub fn geometric_factor(d: usize) -> SchurSeries {
    SchurSeries::from_terms(d, (0..=d).map(|k| (Partition::row(k), 1)))
}

/// The two-term series `S_(1) - 1`.
pub fn s1_minus_1(d: usize) -> Result<SchurSeries> {
    if d == 0 {
        return Err(Error::ZeroTruncation);
    }
    Ok(SchurSeries::from_terms(
        d,
        [(Partition::row(1), 1), (Partition::empty(), -1)],
    ))
}

/// One degree of a cocharacter: `χ_n = Σ_{λ⊢n} m_λ χ_λ` with `m_λ ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CharacterDecomposition {
    degree: usize,
    terms: BTreeMap<Partition, u64>,
}

impl CharacterDecomposition {
    pub fn new(degree: usize) -> Self {
        CharacterDecomposition {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Fails if some key has the wrong weight. Zero multiplicities are dropped.
    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, u64)>,
    {
        let mut out = CharacterDecomposition::new(degree);
        for (la, m) in terms {
            if la.weight() != degree {
                return Err(Error::WeightMismatch {
                    partition: la,
                    expected: degree,
                });
            }
            if m > 0 {
                *out.terms.entry(la).or_insert(0) += m;
            }
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, u64> {
        &self.terms
    }

    pub fn multiplicity(&self, la: &Partition) -> u64 {
        self.terms.get(la).copied().unwrap_or(0)
    }

    /// `Σ m_λ f^λ`.
    pub fn dimension(&self) -> Result<u64> {
        self.terms.iter().try_fold(0u64, |acc, (la, &m)| {
            let f = la.hook_dimension()?;
            m.checked_mul(f)
                .and_then(|x| acc.checked_add(x))
                .ok_or(Error::Overflow("codimension"))
        })
    }

    /// Human form, e.g. `(3) + 2(2,1) + (1^3)`; `0` when empty.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(la, &m)| {
                if m == 1 {
                    la.to_string()
                } else {
                    format!("{m}{la}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Every partition of the degree, including those with multiplicity 0.
    pub fn dense(&self) -> Vec<(Partition, u64)> {
        generate_partitions(self.degree)
            .into_iter()
            .map(|la| {
                let m = self.multiplicity(&la);
                (la, m)
            })
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson<C> {
    partition: Partition,
    mult: C,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    truncation: usize,
    terms: Vec<TermJson<i64>>,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    degree: usize,
    terms: Vec<TermJson<u64>>,
}

impl Serialize for SchurSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson {
            truncation: self.truncation,
            terms: self
                .terms
                .iter()
                .map(|(la, &c)| TermJson {
                    partition: la.clone(),
                    mult: c,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SeriesJson::deserialize(d)?;
        if let Some(t) = raw
            .terms
            .iter()
            .find(|t| t.partition.weight() > raw.truncation)
        {
            return Err(serde::de::Error::custom(format!(
                "term {:?} above truncation {}",
                t.partition, raw.truncation
            )));
        }
        Ok(SchurSeries::from_terms(
            raw.truncation,
            raw.terms.into_iter().map(|t| (t.partition, t.mult)),
        ))
    }
}

impl Serialize for CharacterDecomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DecompositionJson {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(la, &m)| TermJson {
                    partition: la.clone(),
                    mult: m,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CharacterDecomposition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = DecompositionJson::deserialize(d)?;
        CharacterDecomposition::from_terms(
            raw.degree,
            raw.terms.into_iter().map(|t| (t.partition, t.mult)),
        )
        .map_err(serde::de::Error::custom)
    }
}
