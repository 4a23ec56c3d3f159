//! Hilbert series and cocharacters of the five algebras.
//!
//! `H(E)` is the sum of all hook Schur functions, `H(E0)` the sum of all
//! one-row ones, and the proper series `H^B(E)` the sum of even columns.
//! Block-triangular algebras `R = (A U; 0 B)` with `T(R) = T(A) T(B)` are
//! handled by the product formulas in [`lewin_hilbert`] and
//! [`lewin_proper`]. Proper series turn into ordinary ones either by
//! multiplying with the geometric factor or by the interlacing sum; both
//! routes are implemented and must agree.

pub mod closed_forms;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{generate_partitions, Partition};
use crate::schur_ring::{geometric_factor, s1_minus_1, CharacterDecomposition, SchurSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraId {
    /// The infinite-dimensional Grassmann algebra.
    E,
    /// Even part of `E`; commutative.
    E0,
    /// `(E E; 0 E0)`.
    G,
    /// 2×2 upper triangular matrices over the field.
    UT2F,
    /// 2×2 upper triangular matrices over `E`.
    UT2E,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 5] = [
        AlgebraId::E,
        AlgebraId::E0,
        AlgebraId::G,
        AlgebraId::UT2F,
        AlgebraId::UT2E,
    ];

    pub fn id(self) -> &'static str {
        match self {
            AlgebraId::E => "e",
            AlgebraId::E0 => "e0",
            AlgebraId::G => "g",
            AlgebraId::UT2F => "ut2f",
            AlgebraId::UT2E => "ut2e",
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgebraId::ALL
            .into_iter()
            .find(|a| a.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownAlgebra(s.to_string()))
    }
}

/// `H(E) = 1 + Σ_{k≥1, l≥0} S_(k,1^l)`.
pub fn series_e(d: usize) -> SchurSeries {
    let hooks = (1..=d).flat_map(|n| (0..n).map(move |l| hook(n - l, l)));
    SchurSeries::from_terms(
        d,
        std::iter::once(Partition::empty())
            .chain(hooks)
            .map(|la| (la, 1)),
    )
}

/// `H(E0) = Σ_{k≥0} S_(k)`.
pub fn series_e0(d: usize) -> SchurSeries {
    geometric_factor(d)
}

/// `H^B(E) = Σ_{k≥0} S_(1^{2k})`.
pub fn proper_series_e(d: usize) -> SchurSeries {
    SchurSeries::from_terms(d, (0..=d / 2).map(|k| (Partition::column(2 * k), 1)))
}

fn hook(arm: usize, leg: usize) -> Partition {
    let mut parts = vec![arm];
    parts.extend(std::iter::repeat_n(1, leg));
    Partition::new(parts).expect("hook with positive arm")
}

/// `H(R) = H(A) + H(B) + (S_(1) - 1) H(A) H(B)`.
pub fn lewin_hilbert(ha: &SchurSeries, hb: &SchurSeries) -> Result<SchurSeries> {
    let product = ha.checked_mul(hb)?;
    let correction = s1_minus_1(ha.truncation())?.checked_mul(&product)?;
    ha.checked_add(hb)?.checked_add(&correction)
}

/// `H^B(R) = H^B(A) + H^B(B) + (S_(1) - 1) · Σ S_(k) · H^B(A) H^B(B)`.
pub fn lewin_proper(hba: &SchurSeries, hbb: &SchurSeries) -> Result<SchurSeries> {
    let d = hba.truncation();
    let product = hba.checked_mul(hbb)?;
    let correction = s1_minus_1(d)?
        .checked_mul(&geometric_factor(d))?
        .checked_mul(&product)?;
    hba.checked_add(hbb)?.checked_add(&correction)
}

/// `H = Σ S_(k) · H^B`.
pub fn proper_to_ordinary_series(xi: &SchurSeries) -> Result<SchurSeries> {
    geometric_factor(xi.truncation()).checked_mul(xi)
}

/// Ordinary multiplicities from proper ones by the interlacing sum:
/// `m_λ = Σ k_ν` over `ν` with `λ_1 ≥ ν_1 ≥ λ_2 ≥ ν_2 ≥ …`.
///
/// `slices[d]` must be the proper cocharacter of degree `d` for every
/// `d ≤ n`.
pub fn proper_to_ordinary_interlace(
    slices: &[CharacterDecomposition],
    n: usize,
) -> Result<CharacterDecomposition> {
    for d in 0..=n {
        match slices.get(d) {
            Some(s) if s.degree() == d => {}
            _ => return Err(Error::MissingSlice(d)),
        }
    }
    let mut terms = Vec::new();
    for la in generate_partitions(n) {
        let mut total = 0u64;
        for nu in interlacing(&la) {
            total = total
                .checked_add(slices[nu.weight()].multiplicity(&nu))
                .ok_or(Error::Overflow("interlacing sum"))?;
        }
        terms.push((la, total));
    }
    CharacterDecomposition::from_terms(n, terms)
}

/// Every `ν` whose parts interlace those of `λ`.
pub fn interlacing(la: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(la.len());
    interlace_rows(la, 0, &mut current, &mut out);
    out
}

fn interlace_rows(la: &Partition, i: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if i == la.len() {
        out.push(Partition::new(current.clone()).expect("interlacing keeps parts ordered"));
        return;
    }
    for v in la.part(i + 1)..=la.part(i) {
        current.push(v);
        interlace_rows(la, i + 1, current, out);
        current.pop();
    }
}

/// Cocharacter of `UT2(F)` in degree `n`: `(n)` once, and `(k1,k2)`,
/// `(k1,k2,1)` with `k2 ≥ 1` each `k1 - k2 + 1` times.
pub fn ut2f_cocharacter(n: usize) -> CharacterDecomposition {
    let terms = generate_partitions(n).into_iter().filter_map(|la| {
        let m = match (la.len(), la.part(2)) {
            (0, _) | (1, _) => 1,
            (2, _) | (3, 1) => (la.part(0) - la.part(1) + 1) as u64,
            _ => 0,
        };
        (m > 0).then_some((la, m))
    });
    CharacterDecomposition::from_terms(n, terms).expect("weights match degree")
}

/// `H(A)` up to degree `d`.
pub fn hilbert_series(a: AlgebraId, d: usize) -> Result<SchurSeries> {
    match a {
        AlgebraId::E => Ok(series_e(d)),
        AlgebraId::E0 => Ok(series_e0(d)),
        AlgebraId::G => lewin_hilbert(&series_e(d), &series_e0(d)),
        AlgebraId::UT2E => lewin_hilbert(&series_e(d), &series_e(d)),
        AlgebraId::UT2F => Ok(SchurSeries::from_terms(
            d,
            (0..=d).flat_map(|n| {
                ut2f_cocharacter(n)
                    .terms()
                    .iter()
                    .map(|(la, &m)| (la.clone(), m as i64))
                    .collect::<Vec<_>>()
            }),
        )),
    }
}

/// `H^B(A)` up to degree `d`. Commutative factors (`E0` and the field)
/// have proper series `1`.
pub fn proper_hilbert_series(a: AlgebraId, d: usize) -> Result<SchurSeries> {
    let one = SchurSeries::one(d);
    match a {
        AlgebraId::E => Ok(proper_series_e(d)),
        AlgebraId::E0 => Ok(one),
        // 1 + 1 - 1 in degree 0; S_(1) - 1 itself needs d >= 1
        _ if d == 0 => Ok(one),
        AlgebraId::G => lewin_proper(&proper_series_e(d), &one),
        AlgebraId::UT2E => lewin_proper(&proper_series_e(d), &proper_series_e(d)),
        AlgebraId::UT2F => lewin_proper(&one, &one),
    }
}

fn check_degree(n: usize, truncation: usize) -> Result<()> {
    if n > truncation {
        return Err(Error::DegreeExceedsTruncation {
            degree: n,
            truncation,
        });
    }
    Ok(())
}

/// `χ_n(A)` read off a Hilbert series truncated at `truncation ≥ n`.
pub fn cocharacter_at(a: AlgebraId, n: usize, truncation: usize) -> Result<CharacterDecomposition> {
    check_degree(n, truncation)?;
    match a {
        AlgebraId::UT2F => Ok(ut2f_cocharacter(n)),
        // the Lewin products need S_(1) to survive truncation
        AlgebraId::G | AlgebraId::UT2E => hilbert_series(a, truncation.max(1))?.degree_slice(n),
        AlgebraId::E | AlgebraId::E0 => hilbert_series(a, truncation)?.degree_slice(n),
    }
}

/// Proper cocharacter `ξ_n(A)`.
pub fn proper_cocharacter_at(
    a: AlgebraId,
    n: usize,
    truncation: usize,
) -> Result<CharacterDecomposition> {
    check_degree(n, truncation)?;
    proper_hilbert_series(a, truncation)?.degree_slice(n)
}

/// `χ_n(A)`, computed at the smallest sufficient truncation.
pub fn cocharacter(a: AlgebraId, n: usize) -> Result<CharacterDecomposition> {
    cocharacter_at(a, n, n)
}

pub fn proper_cocharacter(a: AlgebraId, n: usize) -> Result<CharacterDecomposition> {
    proper_cocharacter_at(a, n, n)
}

/// `c_n(A) = Σ m_λ f^λ`.
pub fn codimension(a: AlgebraId, n: usize) -> Result<u64> {
    cocharacter(a, n)?.dimension()
}
