//! Integer partitions in canonical form.
//!
//! A [`Partition`] always stores strictly positive, weakly decreasing parts,
//! so derived equality and hashing are structural. The total order puts
//! lower weights first and, within one weight, sorts in reverse
//! lexicographic order: `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`.
//! Every ordered collection in the crate (and hence every serialized
//! output) follows this order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Rejects sequences that
    /// increase anywhere (which includes an interior zero).
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        let weight = parts.iter().sum();
        Ok(Partition { parts, weight })
    }

    /// Internal constructor for sequences already known to be canonical.
    pub(crate) fn from_canonical(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row shape `(k)`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Partition::empty()
        } else {
            Partition::from_canonical(vec![k])
        }
    }

    /// The one-column shape `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition::from_canonical(vec![1; k])
    }

    /// Builds a shape from `(value, repeat)` runs, e.g. `[(4,1),(2,3),(1,2)]`
    /// is `(4,2^3,1^2)`. Zero-valued or zero-length runs are skipped.
    pub fn from_runs(runs: &[(usize, usize)]) -> Result<Self> {
        let parts = runs
            .iter()
            .filter(|&&(v, r)| v > 0 && r > 0)
            .flat_map(|&(v, r)| std::iter::repeat_n(v, r))
            .collect();
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`, the degree.
    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 0-based, reading missing parts as zero.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition::from_canonical(parts)
    }

    /// True iff the diagram of `inner` fits inside the diagram of `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Number of standard Young tableaux of this shape, `n! / ∏ hooks`.
    ///
    /// The quotient is formed on prime exponents, so only the result itself
    /// has to fit in a `u64`.
    pub fn hook_dimension(&self) -> Result<u64> {
        let n = self.weight;
        let mut exponents = vec![0i64; n + 1];
        for k in 2..=n {
            add_factorization(k, 1, &mut exponents);
        }
        let conj = self.conjugate();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let hook = (row - j) + (conj.parts[j] - i) - 1;
                add_factorization(hook, -1, &mut exponents);
            }
        }
        let mut f: u64 = 1;
        for (prime, &e) in exponents.iter().enumerate() {
            debug_assert!(e >= 0, "hook product does not divide n!");
            for _ in 0..e {
                f = f
                    .checked_mul(prime as u64)
                    .ok_or(Error::Overflow("hook dimension"))?;
            }
        }
        Ok(f)
    }

    /// Comma-separated parts, e.g. `3,2,1`; the empty partition is `""`.
    pub fn to_plain_string(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// The runs `(value, repeat)` of the parts, largest value first.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match runs.last_mut() {
                Some((v, r)) if *v == p => *r += 1,
                _ => runs.push((p, 1)),
            }
        }
        runs
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Exponent notation: `(3,2^2,1^4)`, and `()` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (v, r)) in self.runs().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if r == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{r}")?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_plain_string())
    }
}

/// Parses `3,2,1`. Surrounding brackets or parentheses are tolerated;
/// the empty string (or `[]`) is the empty partition. Exponent shorthand is
/// rejected.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| Error::ParsePartition {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut body = s.trim();
        if let Some(inner) = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .or_else(|| body.strip_prefix('(').and_then(|b| b.strip_suffix(')')))
        {
            body = inner.trim();
        }
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        if body.contains('^') {
            return Err(fail("exponent shorthand is not accepted"));
        }
        let parts = body
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| fail(&e.to_string()))?;
        if parts.contains(&0) {
            return Err(fail("parts must be positive"));
        }
        Partition::new(parts).map_err(|_| fail("parts must be weakly decreasing"))
    }
}

fn add_factorization(mut k: usize, sign: i64, exponents: &mut [i64]) {
    let mut d = 2;
    while d * d <= k {
        while k.is_multiple_of(d) {
            exponents[d] += sign;
            k /= d;
        }
        d += 1;
    }
    if k > 1 {
        exponents[k] += sign;
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn generate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_canonical(current.clone()));
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

/// All partitions of weight `0..=max_weight`, in canonical order.
pub fn partitions_up_to(max_weight: usize) -> Vec<Partition> {
    (0..=max_weight).flat_map(generate_partitions).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Independent count: weakly decreasing positive sequences via brute
    /// force over all compositions.
    fn brute_force_count(n: usize) -> usize {
        fn compositions(n: usize, acc: &mut Vec<usize>, count: &mut usize) {
            if n == 0 {
                if acc.windows(2).all(|w| w[0] >= w[1]) {
                    *count += 1;
                }
                return;
            }
            for first in 1..=n {
                acc.push(first);
                compositions(n - first, acc, count);
                acc.pop();
            }
        }
        let mut count = 0;
        compositions(n, &mut Vec::new(), &mut count);
        count
    }

    #[test]
    fn small_generation() {
        assert_eq!(generate_partitions(0), vec![Partition::empty()]);
        assert_eq!(generate_partitions(1), vec![p(&[1])]);
        assert_eq!(
            generate_partitions(4),
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
    }

    #[test]
    fn partition_numbers() {
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &count) in expected.iter().enumerate() {
            let all = generate_partitions(n);
            assert_eq!(all.len(), count, "p({n})");
            assert_eq!(brute_force_count(n), count);
            assert!(all.windows(2).all(|w| w[0] < w[1]), "order at n = {n}");
        }
    }

    #[test]
    fn normalizes_and_rejects() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert_eq!(Partition::new(vec![0]).unwrap(), Partition::empty());
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(p(&[3, 2, 1]).weight(), 6);
    }

    #[test]
    fn conjugation() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        for n in 0..=12 {
            for la in generate_partitions(n) {
                assert_eq!(la.conjugate().conjugate(), la);
            }
        }
    }

    #[test]
    fn containment() {
        assert!(p(&[3, 2]).contains(&p(&[2, 1])));
        assert!(!p(&[2]).contains(&p(&[1, 1])));
        assert!(p(&[2]).contains(&Partition::empty()));
        assert!(!Partition::empty().contains(&p(&[1])));
    }

    /// Standard tableaux counted by removing a corner cell recursively.
    fn count_standard_tableaux(la: &Partition) -> u64 {
        if la.is_empty() {
            return 1;
        }
        let parts = la.parts();
        (0..parts.len())
            .filter(|&i| i + 1 == parts.len() || parts[i] > parts[i + 1])
            .map(|i| {
                let mut smaller = parts.to_vec();
                smaller[i] -= 1;
                count_standard_tableaux(&Partition::new(smaller).unwrap())
            })
            .sum()
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(p(&[5]).hook_dimension().unwrap(), 1);
        assert_eq!(p(&[2, 1]).hook_dimension().unwrap(), 2);
        assert_eq!(p(&[3, 2, 1]).hook_dimension().unwrap(), 16);
        assert_eq!(count_standard_tableaux(&p(&[3, 2, 1])), 16);
        for n in 0..=8 {
            let mut sum_sq = 0u64;
            for la in generate_partitions(n) {
                let f = la.hook_dimension().unwrap();
                assert_eq!(f, count_standard_tableaux(&la));
                assert_eq!(f, la.conjugate().hook_dimension().unwrap());
                sum_sq += f * f;
            }
            assert_eq!(sum_sq, (1..=n as u64).product::<u64>());
        }
    }

    #[test]
    fn hook_dimension_overflow_is_an_error() {
        assert_eq!(p(&[40]).hook_dimension().unwrap(), 1);
        // Catalan(20)
        assert_eq!(p(&[20, 20]).hook_dimension().unwrap(), 6_564_120_420);
        assert_eq!(
            p(&[12, 12, 12, 12, 12]).hook_dimension(),
            Err(Error::Overflow("hook dimension"))
        );
    }

    #[test]
    fn text_forms() {
        assert_eq!("3,2,1".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("2^3".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,0,1".parse::<Partition>().is_err());
        assert_eq!(p(&[2, 1, 1, 1, 1]).to_string(), "(2,1^4)");
        assert_eq!(p(&[3, 3]).to_string(), "(3^2)");
        assert_eq!(Partition::empty().to_string(), "()");
        assert_eq!(p(&[3, 2, 1]).to_plain_string(), "3,2,1");
        assert_eq!(
            Partition::from_runs(&[(4, 1), (2, 3), (1, 2), (3, 0)]).unwrap(),
            p(&[4, 2, 2, 2, 1, 1])
        );
    }

    #[test]
    fn json_form() {
        let la = p(&[3, 2, 1]);
        assert_eq!(serde_json::to_string(&la).unwrap(), "[3,2,1]");
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
        let back: Partition = serde_json::from_str("[3,2,1]").unwrap();
        assert_eq!(back, la);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
