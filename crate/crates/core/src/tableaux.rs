//! Littlewood–Richardson coefficients and the semistandard-tableau
//! monomial oracle.
//!
//! Two independent LR enumerations live here. [`count_lr_fillings`] walks
//! the cells of a fixed skew shape `ν/λ` in reverse reading order and counts
//! fillings directly. [`enumerate_product`] grows `λ` by one horizontal strip
//! per letter of the content and collects every reachable `ν`. Both check the
//! lattice condition on the reverse reading word (right to left, top to
//! bottom) as they go. [`schur_monomials`] expands a Schur polynomial into
//! monomials without using either, so it serves as ground truth for
//! products.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::partitions::{generate_partitions, Partition};

/// A skew diagram `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    /// `None` unless `outer` contains `inner`.
    pub fn new(outer: Partition, inner: Partition) -> Option<Self> {
        outer.contains(&inner).then_some(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cell_count(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// Cells `(row, column)` in reverse reading order: rows top to bottom,
    /// each row right to left.
    fn reading_cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len())
            .flat_map(|r| {
                (self.inner.part(r)..self.outer.part(r))
                    .rev()
                    .map(move |c| (r, c))
            })
            .collect()
    }
}

/// Counts LR tableaux of shape `shape` and content `content` by cell-wise
/// backtracking.
pub fn count_lr_fillings(shape: &SkewShape, content: &Partition) -> u64 {
    if shape.cell_count() != content.weight() {
        return 0;
    }
    let cells = shape.reading_cells();
    let mut grid: Vec<Vec<usize>> = shape.outer.parts().iter().map(|&w| vec![0; w]).collect();
    let mut used = vec![0usize; content.len() + 1];
    let mut count = 0;
    backtrack_cells(shape, content, &cells, 0, &mut grid, &mut used, &mut count);
    count
}

fn backtrack_cells(
    shape: &SkewShape,
    content: &Partition,
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut [Vec<usize>],
    used: &mut [usize],
    count: &mut u64,
) {
    let Some(&(r, c)) = cells.get(idx) else {
        *count += 1;
        return;
    };
    // Row weakly increases, so the (already filled) right neighbour bounds v.
    let upper = if c + 1 < shape.outer.part(r) {
        grid[r][c + 1]
    } else {
        content.len()
    };
    // Columns strictly increase; the cell above is either part of `inner`
    // or already filled.
    let lower = if r > 0 && c >= shape.inner.part(r - 1) {
        grid[r - 1][c] + 1
    } else {
        1
    };
    for v in lower..=upper {
        if used[v] == content.part(v - 1) {
            continue;
        }
        if v > 1 && used[v - 1] <= used[v] {
            continue;
        }
        used[v] += 1;
        grid[r][c] = v;
        backtrack_cells(shape, content, cells, idx + 1, grid, used, count);
        used[v] -= 1;
    }
}

/// Every `ν` with `c^ν_{base,content} > 0`, built by adding one horizontal
/// strip per letter of `content`.
pub fn enumerate_product(base: &Partition, content: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    let shape = base.parts().to_vec();
    let no_previous = Vec::new();
    add_strips(content.parts(), 0, shape, &no_previous, &mut out);
    out
}

/// Adds the strip for letter `letter + 1`. `prev_rows[r]` holds how many
/// cells the previous letter put in row `r`.
fn add_strips(
    content: &[usize],
    letter: usize,
    shape: Vec<usize>,
    prev_rows: &[usize],
    out: &mut BTreeMap<Partition, u64>,
) {
    if letter == content.len() {
        *out.entry(Partition::from_canonical(shape)).or_insert(0) += 1;
        return;
    }
    let mut rows = vec![0usize; shape.len() + 1];
    place_strip_row(
        content,
        letter,
        &shape,
        prev_rows,
        0,
        content[letter],
        0,
        0,
        &mut rows,
        out,
    );
}

#[allow(clippy::too_many_arguments)]
fn place_strip_row(
    content: &[usize],
    letter: usize,
    shape: &[usize],
    prev_rows: &[usize],
    row: usize,
    remaining: usize,
    placed_so_far: usize,
    prev_before_row: usize,
    rows: &mut Vec<usize>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if remaining == 0 {
        let mut next: Vec<usize> = shape.to_vec();
        next.push(0);
        for (r, &a) in rows.iter().enumerate() {
            next[r] += a;
        }
        while next.last() == Some(&0) {
            next.pop();
        }
        let mut counts = rows.clone();
        while counts.last() == Some(&0) {
            counts.pop();
        }
        // the strip stays recorded for the lattice check of the next letter
        add_strips(content, letter + 1, next, &counts, out);
        return;
    }
    if row > shape.len() {
        return;
    }
    let current = shape.get(row).copied().unwrap_or(0);
    // horizontal strip: row may grow up to the old length of the row above
    let strip_room = if row == 0 {
        remaining
    } else {
        shape[row - 1] - current
    };
    // lattice: letters placed in rows <= row never exceed the previous
    // letter's count in rows < row
    let lattice_room = if letter == 0 {
        remaining
    } else {
        prev_before_row.saturating_sub(placed_so_far)
    };
    let max_here = remaining.min(strip_room).min(lattice_room);
    let prev_here = prev_rows.get(row).copied().unwrap_or(0);
    for a in (0..=max_here).rev() {
        rows[row] = a;
        place_strip_row(
            content,
            letter,
            shape,
            prev_rows,
            row + 1,
            remaining - a,
            placed_so_far + a,
            prev_before_row + prev_here,
            rows,
            out,
        );
    }
    rows[row] = 0;
}

type TripleKey = (Partition, Partition, Partition);
type PairKey = (Partition, Partition);

/// Memo tables for coefficients and full products.
///
/// Keys are canonicalized so the lighter factor comes first (ties broken by
/// the partition order). A disabled cache computes everything from scratch.
#[derive(Debug, Default)]
pub struct LrCache {
    enabled: bool,
    coefficients: RwLock<HashMap<TripleKey, u64>>,
    products: RwLock<HashMap<PairKey, Arc<BTreeMap<Partition, u64>>>>,
}

fn canonical_pair<'a>(a: &'a Partition, b: &'a Partition) -> (&'a Partition, &'a Partition) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl LrCache {
    pub fn new() -> Self {
        LrCache {
            enabled: true,
            ..Default::default()
        }
    }

    pub fn disabled() -> Self {
        LrCache::default()
    }

    /// The process-wide cache used by the free functions.
    pub fn global() -> &'static LrCache {
        static GLOBAL: OnceLock<LrCache> = OnceLock::new();
        GLOBAL.get_or_init(LrCache::new)
    }

    pub fn coefficient(&self, la: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        if la.weight() + mu.weight() != nu.weight() || !nu.contains(la) || !nu.contains(mu) {
            return 0;
        }
        let (small, large) = canonical_pair(la, mu);
        if !self.enabled {
            return compute_coefficient(large, small, nu);
        }
        let key = (small.clone(), large.clone(), nu.clone());
        if let Some(&c) = self.coefficients.read().unwrap().get(&key) {
            return c;
        }
        let c = compute_coefficient(large, small, nu);
        self.coefficients.write().unwrap().insert(key, c);
        c
    }

    pub fn product(&self, la: &Partition, mu: &Partition) -> Arc<BTreeMap<Partition, u64>> {
        let (small, large) = canonical_pair(la, mu);
        if !self.enabled {
            return Arc::new(enumerate_product(large, small));
        }
        let key = (small.clone(), large.clone());
        if let Some(p) = self.products.read().unwrap().get(&key) {
            return Arc::clone(p);
        }
        let p = Arc::new(enumerate_product(large, small));
        self.products
            .write()
            .unwrap()
            .entry(key)
            .or_insert_with(|| Arc::clone(&p));
        p
    }

    pub fn len(&self) -> usize {
        self.coefficients.read().unwrap().len() + self.products.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn compute_coefficient(inner: &Partition, content: &Partition, nu: &Partition) -> u64 {
    match SkewShape::new(nu.clone(), inner.clone()) {
        Some(shape) => count_lr_fillings(&shape, content),
        None => 0,
    }
}

/// `c^ν_{λμ}`; zero whenever the weights or containments do not fit.
pub fn lr_coefficient(la: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    LrCache::global().coefficient(la, mu, nu)
}

/// The full expansion `S_λ · S_μ = Σ c^ν_{λμ} S_ν`, positive terms only.
pub fn expand_product(la: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    LrCache::global().product(la, mu).as_ref().clone()
}

/// `S_λ · S_(k)` by the Pieri rule: every `ν ⊇ λ` with `ν/λ` a horizontal
/// strip of `k` cells, each with coefficient 1.
pub fn pieri_row(la: &Partition, k: usize) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    let mut nu = Vec::with_capacity(la.len() + 1);
    pieri_rows(la, 0, k, &mut nu, &mut out);
    out
}

fn pieri_rows(
    la: &Partition,
    row: usize,
    left: usize,
    nu: &mut Vec<usize>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if row > la.len() {
        if left == 0 {
            out.insert(
                Partition::new(nu.clone()).expect("strip keeps rows ordered"),
                1,
            );
        }
        return;
    }
    let base = la.part(row);
    let cap = if row == 0 {
        base + left
    } else {
        la.part(row - 1).min(base + left)
    };
    for v in base..=cap {
        if v > 0 {
            nu.push(v);
        }
        pieri_rows(la, row + 1, left - (v - base), nu, out);
        if v > 0 {
            nu.pop();
        }
    }
}

/// Exponent vector of a monomial in `k` variables.
pub type Monomial = Vec<u32>;

/// Monomial expansion of `S_λ(t_1, …, t_k)`: each semistandard tableau with
/// entries in `1..=k` contributes its content vector. The counts are Kostka
/// numbers. Empty when `λ` has more than `k` rows.
pub fn schur_monomials(la: &Partition, k: usize) -> BTreeMap<Monomial, u64> {
    let mut out = BTreeMap::new();
    if la.len() > k {
        return out;
    }
    let mut exps = vec![0u32; k];
    peel_strips(la.parts().to_vec(), k, &mut exps, &mut out);
    out
}

/// The entries equal to `vars` form a horizontal strip on the outer rim;
/// strip it off and recurse on the remaining variables.
fn peel_strips(
    shape: Vec<usize>,
    vars: usize,
    exps: &mut [u32],
    out: &mut BTreeMap<Monomial, u64>,
) {
    if vars == 0 {
        if shape.is_empty() {
            *out.entry(exps.to_vec()).or_insert(0) += 1;
        }
        return;
    }
    if shape.len() > vars {
        return;
    }
    let mut inner = vec![0usize; shape.len()];
    choose_inner(&shape, 0, &mut inner, vars, exps, out);
}

fn choose_inner(
    shape: &[usize],
    row: usize,
    inner: &mut Vec<usize>,
    vars: usize,
    exps: &mut [u32],
    out: &mut BTreeMap<Monomial, u64>,
) {
    if row == shape.len() {
        let removed: usize = shape.iter().zip(inner.iter()).map(|(a, b)| a - b).sum();
        let mut rest = inner.clone();
        while rest.last() == Some(&0) {
            rest.pop();
        }
        exps[vars - 1] = removed as u32;
        peel_strips(rest, vars - 1, exps, out);
        exps[vars - 1] = 0;
        return;
    }
    // horizontal strip: shape[row+1] <= inner[row] <= shape[row]
    let low = shape.get(row + 1).copied().unwrap_or(0);
    for v in low..=shape[row] {
        inner[row] = v;
        choose_inner(shape, row + 1, inner, vars, exps, out);
    }
}

/// Product of two monomial expansions.
pub fn convolve<C>(a: &BTreeMap<Monomial, C>, b: &BTreeMap<Monomial, C>) -> BTreeMap<Monomial, C>
where
    C: Copy + std::ops::Mul<Output = C> + std::ops::AddAssign + Default + PartialEq,
{
    let mut out: BTreeMap<Monomial, C> = BTreeMap::new();
    for (ea, &ca) in a {
        for (eb, &cb) in b {
            let e: Monomial = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != C::default());
    out
}

/// Number of semistandard tableaux of shape `λ` with content `content`,
/// i.e. the coefficient of `t^content` in `S_λ`. The entries equal to the
/// last letter are peeled off as a horizontal strip of that size.
pub fn kostka(la: &Partition, content: &[u32]) -> u64 {
    if content.iter().map(|&c| c as usize).sum::<usize>() != la.weight() {
        return 0;
    }
    count_peels(la.parts(), content)
}

fn count_peels(shape: &[usize], content: &[u32]) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.is_empty());
    };
    if shape.len() > content.len() {
        return 0;
    }
    let mut inner = vec![0usize; shape.len()];
    let mut total = 0;
    strip_inner(shape, 0, &mut inner, last as usize, rest, &mut total);
    total
}

fn strip_inner(
    shape: &[usize],
    row: usize,
    inner: &mut Vec<usize>,
    left: usize,
    content: &[u32],
    total: &mut u64,
) {
    if row == shape.len() {
        if left == 0 {
            let keep = inner.iter().rposition(|&v| v > 0).map_or(0, |i| i + 1);
            *total += count_peels(&inner[..keep], content);
        }
        return;
    }
    let low = shape.get(row + 1).copied().unwrap_or(0);
    for v in low..=shape[row] {
        let taken = shape[row] - v;
        if taken > left {
            continue;
        }
        inner[row] = v;
        strip_inner(shape, row + 1, inner, left - taken, content, total);
    }
}

/// Compares `S_λ S_μ` with its LR expansion in `k` variables, monomial by
/// monomial. Both sides are symmetric, so only exponents that are
/// partitions are compared; on the product side the coefficient of `t^α`
/// is the convolution `Σ_{β ≤ α} K_{λ,β} K_{μ,α-β}`.
pub fn oracle_product_check(la: &Partition, mu: &Partition, k: usize) -> bool {
    let n = la.weight() + mu.weight();
    let product = expand_product(la, mu);
    generate_partitions(n)
        .into_iter()
        .filter(|alpha| alpha.len() <= k)
        .all(|alpha| {
            let alpha: Monomial = (0..k).map(|i| alpha.part(i) as u32).collect();
            let mut direct = 0u64;
            let mut beta = vec![0u32; k];
            convolve_at(
                &alpha,
                0,
                la.weight() as u32,
                &mut beta,
                &mut |beta: &[u32]| {
                    let rest: Monomial = alpha.iter().zip(beta).map(|(a, b)| a - b).collect();
                    direct += kostka(la, beta) * kostka(mu, &rest);
                },
            );
            let via_lr: u64 = product.iter().map(|(nu, c)| c * kostka(nu, &alpha)).sum();
            direct == via_lr
        })
}

/// Calls `f` on every `β ≤ α` (entrywise) of weight `left`.
fn convolve_at(alpha: &[u32], i: usize, left: u32, beta: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if i == alpha.len() {
        if left == 0 {
            f(beta);
        }
        return;
    }
    let tail: u32 = alpha[i..].iter().sum();
    if tail < left {
        return;
    }
    for b in 0..=alpha[i].min(left) {
        beta[i] = b;
        convolve_at(alpha, i + 1, left - b, beta, f);
    }
    beta[i] = 0;
}

/// All `ν ⊢ |λ|+|μ|` with their coefficient from [`lr_coefficient`],
/// zeros dropped. Slow; used to cross-check [`enumerate_product`].
pub fn expand_product_by_coefficients(la: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    generate_partitions(la.weight() + mu.weight())
        .into_iter()
        .filter_map(|nu| {
            let c = lr_coefficient(la, mu, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}
