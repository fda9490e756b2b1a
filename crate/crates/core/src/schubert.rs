//! Young diagrams, Schur functor dimensions, Kostka and
//! Littlewood–Richardson numbers, and Schubert-cycle expansions of the
//! classes of special Veronese varieties and Lie complexes.
//!
//! A Schubert class lives in `G(p, q)`; its diagrams fit the rectangle of
//! at most `p` rows and at most `q - p` columns.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::combin::{binomial, k_subsets};
use crate::error::{Error, Result};

/// A partition `α_1 >= α_2 >= ... > 0`; trailing zeros are dropped.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct YoungDiagram {
    parts: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadParams(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(YoungDiagram { parts })
    }

    pub fn empty() -> Self {
        YoungDiagram { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn num_cols(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `α*_i = #{j : α_j >= i}`.
    pub fn conjugate(&self) -> Self {
        let parts = (1..=self.num_cols())
            .map(|i| self.parts.iter().filter(|&&a| a >= i).count())
            .collect();
        YoungDiagram { parts }
    }

    /// Fits the rectangle with `rows` rows and `cols` columns.
    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        self.num_rows() <= rows && self.num_cols() <= cols
    }

    pub fn contains(&self, other: &YoungDiagram) -> bool {
        other.num_rows() <= self.num_rows() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    fn part(&self, r: usize) -> usize {
        self.parts.get(r).copied().unwrap_or(0)
    }

    /// Comma-separated parts, e.g. `"2,1"`; the empty diagram is `""`.
    pub fn key(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }

    pub fn parse_key(key: &str) -> Result<Self> {
        let key = key.trim();
        if key.is_empty() {
            return Ok(Self::empty());
        }
        let parts = key
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad diagram {key:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.key())
    }
}

/// Shorthand for tests and examples; panics on a non-partition.
pub fn diagram(parts: &[usize]) -> YoungDiagram {
    YoungDiagram::new(parts.to_vec()).expect("weakly decreasing parts")
}

/// All partitions of `size` with at most `rows` rows and parts at most
/// `cols`, in decreasing lexicographic order.
pub fn partitions_in_box(size: usize, rows: usize, cols: usize) -> Vec<YoungDiagram> {
    fn rec(left: usize, rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if left == 0 {
            out.push(YoungDiagram { parts: cur.clone() });
            return;
        }
        if rows == 0 {
            return;
        }
        for part in (1..=max.min(left)).rev() {
            cur.push(part);
            rec(left - part, rows - 1, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, rows, cols, &mut Vec::new(), &mut out);
    out
}

/// Heights `ht_1 <= ... <= ht_q = p`: the ordinate at the end of each edge
/// of the boundary path of `α` in the `(q-p) x p` rectangle. The `r`-th
/// vertical edge is edge number `q - p - α_r + r`.
pub fn heights(alpha: &YoungDiagram, p: usize, q: usize) -> Result<Vec<usize>> {
    if p > q || !alpha.fits(p, q - p) {
        return Err(Error::DoesNotFit);
    }
    let mut vertical = vec![false; q];
    for r in 1..=p {
        vertical[q - p - alpha.part(r - 1) + r - 1] = true;
    }
    let mut h = 0;
    Ok(vertical
        .into_iter()
        .map(|v| {
            h += v as usize;
            h
        })
        .collect())
}

/// `dim Σ^α(C^m)` by the hook-content formula; 0 when `α` has more than
/// `m` rows.
pub fn schur_dim(alpha: &YoungDiagram, m: usize) -> BigInt {
    if alpha.num_rows() > m {
        return BigInt::zero();
    }
    let conj = alpha.conjugate();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (r, &len) in alpha.parts.iter().enumerate() {
        for c in 0..len {
            num *= m + c - r;
            den *= (len - c - 1) + (conj.parts[c] - r - 1) + 1;
        }
    }
    let (q, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    q
}

/// A weight: a sequence of nonnegative integers, not necessarily sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub components: Vec<usize>,
}

impl Weight {
    pub fn new(components: Vec<usize>) -> Self {
        Weight { components }
    }

    pub fn size(&self) -> usize {
        self.components.iter().sum()
    }
}

/// All weights of length `len` and total `total`.
pub fn weights(len: usize, total: usize) -> Vec<Weight> {
    fn rec(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Weight>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Weight::new(cur.clone()));
            return;
        }
        for v in (0..=left).rev() {
            cur[i] = v;
            rec(i + 1, left - v, cur, out);
        }
    }
    if len == 0 {
        return if total == 0 { vec![Weight::new(Vec::new())] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(0, total, &mut vec![0; len], &mut out);
    out
}

/// Number of semistandard tableaux of shape `α` and content `λ`.
pub fn kostka(lambda: &Weight, alpha: &YoungDiagram) -> Result<u64> {
    if lambda.size() != alpha.size() {
        return Err(Error::SizeMismatch(format!(
            "weight of size {} against diagram of size {}",
            lambda.size(),
            alpha.size()
        )));
    }
    let cells: Vec<(usize, usize)> = alpha
        .parts
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut filling: Vec<Vec<usize>> = alpha.parts.iter().map(|&len| vec![0; len]).collect();
    let mut left = lambda.components.clone();
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        filling: &mut Vec<Vec<usize>>,
        left: &mut Vec<usize>,
    ) -> u64 {
        let Some(&(r, c)) = cells.get(idx) else {
            return 1;
        };
        // values are 1-based so that 0 marks "no constraint"
        let min_row = if c > 0 { filling[r][c - 1] } else { 1 };
        let min_col = if r > 0 { filling[r - 1][c] + 1 } else { 1 };
        let mut count = 0;
        for v in min_row.max(min_col).max(1)..=left.len() {
            if left[v - 1] == 0 {
                continue;
            }
            left[v - 1] -= 1;
            filling[r][c] = v;
            count += rec(idx + 1, cells, filling, left);
            left[v - 1] += 1;
        }
        count
    }
    Ok(rec(0, &cells, &mut filling, &mut left))
}

/// `c^γ_{αβ}`: skew tableaux of shape `γ/α` and content `β` whose reverse
/// reading word is a lattice word.
pub fn littlewood_richardson(alpha: &YoungDiagram, beta: &YoungDiagram, gamma: &YoungDiagram) -> Result<u64> {
    if gamma.size() != alpha.size() + beta.size() {
        return Err(Error::SizeMismatch(format!(
            "|γ| = {} but |α| + |β| = {}",
            gamma.size(),
            alpha.size() + beta.size()
        )));
    }
    if !gamma.contains(alpha) {
        return Ok(0);
    }
    // reading order: rows top to bottom, each row right to left
    let cells: Vec<(usize, usize)> = (0..gamma.num_rows())
        .flat_map(|r| (alpha.part(r)..gamma.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut filling: Vec<Vec<usize>> = gamma.parts.iter().map(|&len| vec![0; len]).collect();
    let mut used = vec![0usize; beta.num_rows()];
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        alpha: &YoungDiagram,
        beta: &YoungDiagram,
        filling: &mut Vec<Vec<usize>>,
        used: &mut Vec<usize>,
    ) -> u64 {
        let Some(&(r, c)) = cells.get(idx) else {
            return 1;
        };
        let row_len = filling[r].len();
        let max_row = if c + 1 < row_len { filling[r][c + 1] } else { beta.num_rows() };
        let min_col = if r > 0 && c >= alpha.part(r - 1) { filling[r - 1][c] + 1 } else { 1 };
        let mut count = 0;
        for v in min_col..=max_row {
            if used[v - 1] == beta.parts[v - 1] || (v > 1 && used[v - 1] == used[v - 2]) {
                continue;
            }
            used[v - 1] += 1;
            filling[r][c] = v;
            count += rec(idx + 1, cells, alpha, beta, filling, used);
            used[v - 1] -= 1;
        }
        count
    }
    Ok(rec(0, &cells, alpha, beta, &mut filling, &mut used))
}

/// `Σ c_α σ_α` in the homology of `G(p, q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertClass {
    pub p: usize,
    pub q: usize,
    coeffs: BTreeMap<YoungDiagram, BigInt>,
}

impl SchubertClass {
    pub fn zero(p: usize, q: usize) -> Self {
        SchubertClass { p, q, coeffs: BTreeMap::new() }
    }

    /// The single cycle `σ_α`.
    pub fn cycle(p: usize, q: usize, alpha: YoungDiagram) -> Result<Self> {
        let mut c = Self::zero(p, q);
        c.add(alpha, BigInt::one())?;
        Ok(c)
    }

    /// Adds `value * σ_α`; zero coefficients are not stored.
    pub fn add(&mut self, alpha: YoungDiagram, value: BigInt) -> Result<()> {
        if self.p > self.q || !alpha.fits(self.p, self.q - self.p) {
            return Err(Error::DoesNotFit);
        }
        let entry = self.coeffs.entry(alpha).or_insert_with(BigInt::zero);
        *entry += value;
        self.coeffs.retain(|_, v| !v.is_zero());
        Ok(())
    }

    pub fn coefficient(&self, alpha: &YoungDiagram) -> BigInt {
        self.coeffs.get(alpha).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coefficients(&self) -> &BTreeMap<YoungDiagram, BigInt> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn sum(&self, other: &SchubertClass) -> Result<SchubertClass> {
        if (self.p, self.q) != (other.p, other.q) {
            return Err(Error::SizeMismatch("classes in different Grassmannians".into()));
        }
        let mut out = self.clone();
        for (a, v) in &other.coeffs {
            out.add(a.clone(), v.clone())?;
        }
        Ok(out)
    }
}

impl fmt::Display for SchubertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.coeffs.iter().map(|(a, v)| format!("{v}*s{a}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Image under `G(p1, q1) x G(p2, q2) -> G(p1 + p2, q1 + q2)`:
/// `σ_α ⊗ σ_β ↦ Σ_γ c^γ_{αβ} σ_γ`, extended bilinearly. Diagrams that do
/// not fit the target rectangle are dropped; their number is returned.
pub fn direct_sum_pushforward(a: &SchubertClass, b: &SchubertClass) -> (SchubertClass, usize) {
    let (p, q) = (a.p + b.p, a.q + b.q);
    let mut out = SchubertClass::zero(p, q);
    let mut dropped = 0;
    for (alpha, x) in &a.coeffs {
        for (beta, y) in &b.coeffs {
            let size = alpha.size() + beta.size();
            let rows = alpha.num_rows() + beta.num_rows();
            let cols = alpha.num_cols() + beta.num_cols();
            for gamma in partitions_in_box(size, rows, cols) {
                let c = littlewood_richardson(alpha, beta, &gamma).expect("sizes match");
                if c == 0 {
                    continue;
                }
                if gamma.fits(p, q - p) {
                    out.add(gamma, x * y * BigInt::from(c)).expect("fits");
                } else {
                    dropped += 1;
                }
            }
        }
    }
    (out, dropped)
}

/// The weight of `i_1 < ... < i_{k-1}` in `{1, ..., n-2}` (1-based): with
/// `j_1 < ... < j_{n-k-1}` the complement, `j_0 = 0` and `j_{n-k} = n-1`,
/// `λ_v = j_v - j_{v-1} - 1`.
pub fn weight_of_subset(indices: &[usize], n: usize) -> Result<Weight> {
    if n < 2 || indices.len() > n - 2 {
        return Err(Error::BadIndices);
    }
    if indices.windows(2).any(|w| w[0] >= w[1]) || indices.iter().any(|&i| i == 0 || i > n - 2) {
        return Err(Error::BadIndices);
    }
    let mut j: Vec<usize> = vec![0];
    j.extend((1..=n - 2).filter(|x| !indices.contains(x)));
    j.push(n - 1);
    Ok(Weight::new(j.windows(2).map(|w| w[1] - w[0] - 1).collect()))
}

/// All `(k-1)`-subsets of `{1, ..., n-2}`, 1-based, in lexicographic order.
pub fn chord_components(k: usize, n: usize) -> Vec<Vec<usize>> {
    if k == 0 || n < 2 || k - 1 > n - 2 {
        return Vec::new();
    }
    k_subsets(n - 2, k - 1)
        .into_iter()
        .map(|s| s.into_iter().map(|i| i + 1).collect())
        .collect()
}

fn check_veronese_params(k: usize, n: usize) -> Result<()> {
    if k < 2 || k + 2 > n {
        return Err(Error::BadParams(format!("need 2 <= k <= n - 2, got k = {k}, n = {n}")));
    }
    Ok(())
}

/// `[X(λ)] = Σ_{|α| = k-1} K_{λ, α*} σ_α` in `G(k-1, n-1)`.
pub fn component_class(lambda: &Weight, k: usize, n: usize) -> Result<SchubertClass> {
    check_veronese_params(k, n)?;
    if lambda.components.len() != n - k || lambda.size() != k - 1 {
        return Err(Error::BadWeight);
    }
    let (p, q) = (k - 1, n - 1);
    let mut class = SchubertClass::zero(p, q);
    for alpha in partitions_in_box(k - 1, p, q - p) {
        let m = kostka(lambda, &alpha.conjugate())?;
        class.add(alpha, BigInt::from(m))?;
    }
    Ok(class)
}

/// The class of `X(λ)` as the direct-sum image of `Π σ_{(1^{λ_j})}`, each
/// factor the fundamental class of `G(λ_j, λ_j + 1)`.
pub fn component_class_by_pushforward(lambda: &Weight) -> SchubertClass {
    let mut acc = SchubertClass::cycle(0, 0, YoungDiagram::empty()).expect("empty fits");
    for &l in &lambda.components {
        let factor = SchubertClass::cycle(l, l + 1, YoungDiagram { parts: vec![1; l] }).expect("column fits");
        acc = direct_sum_pushforward(&acc, &factor).0;
    }
    acc
}

/// The class of a special `(k-1)`-dimensional Veronese variety in
/// `G(k-1, n-1)`: `m_α = dim Σ^{α*}(C^{n-k})`.
pub fn veronese_class(k: usize, n: usize) -> Result<SchubertClass> {
    check_veronese_params(k, n)?;
    let (p, q) = (k - 1, n - 1);
    let mut class = SchubertClass::zero(p, q);
    for alpha in partitions_in_box(k - 1, p, q - p) {
        let m = schur_dim(&alpha.conjugate(), n - k);
        class.add(alpha, m)?;
    }
    Ok(class)
}

/// `Σ_{i=0}^{k} (-1)^i C(n, i) dim Σ^γ(C^{k-i})`.
fn alternating_dimension(gamma: &YoungDiagram, k: usize, n: usize) -> BigInt {
    (0..=k)
        .map(|i| {
            let term = BigInt::from(binomial(n as u64, i as u64)) * schur_dim(gamma, k - i);
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// The same class via the visible contour of a Lie complex:
/// `m_α = Σ_i (-1)^i C(n, i) dim Σ^{(n-k, α_1, ..., α_{k-1})}(C^{k-i})`.
pub fn klyachko_contour_class(k: usize, n: usize) -> Result<SchubertClass> {
    check_veronese_params(k, n)?;
    let (p, q) = (k - 1, n - 1);
    let mut class = SchubertClass::zero(p, q);
    for alpha in partitions_in_box(k - 1, p, q - p) {
        let mut parts = vec![n - k];
        parts.extend(&alpha.parts);
        let composite = YoungDiagram::new(parts)?;
        class.add(alpha, alternating_dimension(&composite, k, n))?;
    }
    Ok(class)
}

/// The class of a Lie complex in `G(k, n)`: diagrams with `n-1` cells, at
/// most `k` rows and `n-k` columns, coefficient
/// `Σ_i (-1)^i C(n, i) dim Σ^α(C^{k-i})`.
pub fn lie_complex_class(k: usize, n: usize) -> Result<SchubertClass> {
    if k == 0 || k >= n {
        return Err(Error::BadParams(format!("need 1 <= k < n, got k = {k}, n = {n}")));
    }
    let mut class = SchubertClass::zero(k, n);
    for alpha in partitions_in_box(n - 1, k, n - k) {
        let m = alternating_dimension(&alpha, k, n);
        class.add(alpha, m)?;
    }
    Ok(class)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrosscheckRow {
    pub k: usize,
    pub n: usize,
    pub veronese: SchubertClass,
    pub agrees: bool,
}

/// Compares [`veronese_class`] with [`klyachko_contour_class`] for
/// `2 <= k <= kmax`, `k + 2 <= n <= nmax`.
pub fn crosscheck(kmax: usize, nmax: usize) -> Vec<CrosscheckRow> {
    let mut rows = Vec::new();
    for k in 2..=kmax {
        for n in k + 2..=nmax {
            let v = veronese_class(k, n).expect("parameters in range");
            let c = klyachko_contour_class(k, n).expect("parameters in range");
            rows.push(CrosscheckRow { k, n, agrees: v == c, veronese: v });
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    /// Weyl's formula `Π_{i<j} (α_i - α_j + j - i) / (j - i)`.
    fn weyl_dim(alpha: &YoungDiagram, m: usize) -> BigInt {
        if alpha.num_rows() > m {
            return BigInt::zero();
        }
        let a: Vec<i64> = (0..m).map(|i| alpha.part(i) as i64).collect();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for i in 0..m {
            for j in i + 1..m {
                num *= a[i] - a[j] + (j - i) as i64;
                den *= (j - i) as i64;
            }
        }
        num / den
    }

    #[test]
    fn conjugates() {
        assert_eq!(diagram(&[4]).conjugate(), diagram(&[1, 1, 1, 1]));
        assert_eq!(diagram(&[2, 2]).conjugate(), diagram(&[2, 2]));
        assert_eq!(diagram(&[3, 1]).conjugate(), diagram(&[2, 1, 1]));
        assert!(YoungDiagram::new(vec![1, 2]).is_err());
        assert_eq!(YoungDiagram::parse_key("2,1").unwrap(), diagram(&[2, 1]));
        assert_eq!(diagram(&[2, 1]).key(), "2,1");
    }

    #[test]
    fn height_sequences() {
        assert_eq!(heights(&YoungDiagram::empty(), 2, 5).unwrap(), vec![0, 0, 0, 1, 2]);
        assert_eq!(heights(&diagram(&[3, 3]), 2, 5).unwrap(), vec![1, 2, 2, 2, 2]);
        assert_eq!(heights(&diagram(&[2, 1]), 2, 5).unwrap(), vec![0, 1, 1, 2, 2]);
        assert_eq!(heights(&diagram(&[4]), 2, 5), Err(Error::DoesNotFit));
        for alpha in (0..=6).flat_map(|s| partitions_in_box(s, 2, 3)) {
            let h = heights(&alpha, 2, 5).unwrap();
            assert_eq!(*h.last().unwrap(), 2);
            assert!(h.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1));
        }
    }

    #[test]
    fn box_partition_count_is_binomial() {
        let total: usize = (0..=6).map(|s| partitions_in_box(s, 2, 3).len()).sum();
        assert_eq!(total as u64, binomial(5, 2));
    }

    #[test]
    fn schur_dims_from_examples() {
        for d in 5..=12i64 {
            assert_eq!(schur_dim(&diagram(&[1, 1]), d as usize - 1), big((d - 1) * (d - 2) / 2));
            assert_eq!(
                schur_dim(&diagram(&[2, 2]), d as usize - 3),
                big((d - 2) * (d - 3) * (d - 3) * (d - 4) / 12)
            );
        }
        for n in 5..=12i64 {
            assert_eq!(schur_dim(&diagram(&[1, 1, 1]), n as usize - 2), big((n - 2) * (n - 3) * (n - 4) / 6));
        }
        assert_eq!(schur_dim(&diagram(&[1, 1]), 3), big(3));
        assert_eq!(schur_dim(&diagram(&[2, 2]), 3), big(6));
        assert_eq!(schur_dim(&diagram(&[1, 1, 1]), 5), big(10));
        assert_eq!(schur_dim(&diagram(&[1, 1, 1]), 2), big(0));
    }

    #[test]
    fn schur_dim_oracles() {
        for size in 0..=6 {
            for alpha in partitions_in_box(size, size, size) {
                for m in 0..=5 {
                    let by_weights: u64 = weights(m, size).iter().map(|l| kostka(l, &alpha).unwrap()).sum();
                    assert_eq!(schur_dim(&alpha, m), BigInt::from(by_weights), "{alpha} m={m}");
                    assert_eq!(schur_dim(&alpha, m), weyl_dim(&alpha, m));
                }
            }
        }
    }

    #[test]
    fn kostka_values() {
        assert_eq!(kostka(&Weight::new(vec![3]), &diagram(&[3])), Ok(1));
        assert_eq!(kostka(&Weight::new(vec![1, 1, 1]), &diagram(&[2, 1])), Ok(2));
        assert_eq!(kostka(&Weight::new(vec![2, 0, 0]), &diagram(&[1, 1])), Ok(0));
        assert!(matches!(kostka(&Weight::new(vec![1]), &diagram(&[2])), Err(Error::SizeMismatch(_))));
    }

    #[test]
    fn lr_values() {
        let g = diagram(&[2, 1]);
        assert_eq!(littlewood_richardson(&YoungDiagram::empty(), &g, &g), Ok(1));
        assert_eq!(littlewood_richardson(&diagram(&[1]), &diagram(&[1, 1]), &g), Ok(1));
        assert_eq!(littlewood_richardson(&diagram(&[1]), &diagram(&[2]), &g), Ok(1));
        assert_eq!(littlewood_richardson(&diagram(&[2, 1]), &diagram(&[2, 1]), &diagram(&[3, 2, 1])), Ok(2));
        assert!(littlewood_richardson(&diagram(&[1]), &diagram(&[1]), &g).is_err());
    }

    #[test]
    fn pushforward_examples() {
        let a = SchubertClass::cycle(1, 2, diagram(&[1])).unwrap();
        let b = SchubertClass::cycle(2, 3, diagram(&[1, 1])).unwrap();
        let (c, dropped) = direct_sum_pushforward(&a, &b);
        assert_eq!((c.p, c.q), (3, 5));
        assert_eq!(c.coefficient(&diagram(&[2, 1])), big(1));
        assert_eq!(c.coefficient(&diagram(&[1, 1, 1])), big(1));
        assert_eq!(dropped, 0);
        // σ_(1) x σ_(1) from two copies of P^1 into G(2, 4): both terms fit
        let (d, dropped) = direct_sum_pushforward(&a, &a);
        assert_eq!(d.coefficient(&diagram(&[2])), big(1));
        assert_eq!(d.coefficient(&diagram(&[1, 1])), big(1));
        assert_eq!(dropped, 0);
        // into G(2, 3) nothing with two columns fits
        let e = SchubertClass::cycle(1, 1, YoungDiagram::empty()).unwrap();
        let (f, dropped) = direct_sum_pushforward(&a, &e);
        assert_eq!(f.coefficient(&diagram(&[1])), big(1));
        assert_eq!(dropped, 0);
    }

    #[test]
    fn weights_of_subsets() {
        assert_eq!(weight_of_subset(&[1, 2], 6).unwrap(), Weight::new(vec![2, 0, 0]));
        assert_eq!(weight_of_subset(&[], 5).unwrap(), Weight::new(vec![0, 0, 0, 0]));
        assert_eq!(weight_of_subset(&[2, 1], 6), Err(Error::BadIndices));
        assert_eq!(weight_of_subset(&[5], 6), Err(Error::BadIndices));
        for k in 2..=5 {
            for n in k + 2..=9 {
                let mut seen: Vec<Weight> = chord_components(k, n)
                    .iter()
                    .map(|s| weight_of_subset(s, n).unwrap())
                    .collect();
                seen.sort();
                let mut all = weights(n - k, k - 1);
                all.sort();
                assert_eq!(seen, all);
                assert_eq!(seen.len() as u64, binomial(n as u64 - 2, k as u64 - 1));
            }
        }
    }

    #[test]
    fn veronese_classes() {
        for n in 4..=10 {
            let c = veronese_class(2, n).unwrap();
            assert_eq!(c.coefficients().len(), 1);
            assert_eq!(c.coefficient(&diagram(&[1])), big(n as i64 - 2));
        }
        let c = veronese_class(3, 6).unwrap();
        assert_eq!(c.coefficient(&diagram(&[2])), big(3));
        assert_eq!(c.coefficient(&diagram(&[1, 1])), big(6));
        assert!(matches!(veronese_class(1, 5), Err(Error::BadParams(_))));
        assert!(matches!(veronese_class(4, 5), Err(Error::BadParams(_))));
    }

    #[test]
    fn component_classes() {
        for n in 4..=7 {
            for l in weights(n - 2, 1) {
                assert_eq!(component_class(&l, 2, n).unwrap(), SchubertClass::cycle(1, n - 1, diagram(&[1])).unwrap());
            }
        }
        let c = component_class(&Weight::new(vec![2, 0, 0]), 3, 6).unwrap();
        assert_eq!(c, SchubertClass::cycle(2, 5, diagram(&[1, 1])).unwrap());
        assert_eq!(component_class(&Weight::new(vec![1, 0, 0]), 3, 6), Err(Error::BadWeight));
        for (k, n) in [(3, 6), (3, 7), (4, 7), (4, 8)] {
            for l in weights(n - k, k - 1) {
                assert_eq!(component_class(&l, k, n).unwrap(), component_class_by_pushforward(&l));
            }
        }
    }

    #[test]
    fn components_sum_to_veronese_class() {
        for (k, n) in [(3, 6), (3, 7), (4, 8)] {
            let mut total = SchubertClass::zero(k - 1, n - 1);
            for s in chord_components(k, n) {
                let l = weight_of_subset(&s, n).unwrap();
                total = total.sum(&component_class(&l, k, n).unwrap()).unwrap();
            }
            assert_eq!(total, veronese_class(k, n).unwrap());
        }
    }

    #[test]
    fn kostka_sums_over_weights() {
        for (k, n) in [(3, 6), (4, 8), (5, 9)] {
            for alpha in partitions_in_box(k - 1, k - 1, n - k) {
                let total: u64 = weights(n - k, k - 1).iter().map(|l| kostka(l, &alpha.conjugate()).unwrap()).sum();
                assert_eq!(BigInt::from(total), schur_dim(&alpha.conjugate(), n - k));
            }
        }
    }

    #[test]
    fn lie_complex_classes() {
        assert_eq!(lie_complex_class(2, 4).unwrap(), {
            let mut c = SchubertClass::zero(2, 4);
            c.add(diagram(&[2, 1]), big(2)).unwrap();
            c
        });
        for n in 4..=10 {
            let c = lie_complex_class(2, n).unwrap();
            let mut expected = SchubertClass::zero(2, n);
            let mut j = 1;
            while n > 2 * j {
                expected.add(diagram(&[n - 1 - j, j]), big((n - 2 * j) as i64)).unwrap();
                j += 1;
            }
            assert_eq!(c, expected, "n = {n}");
        }
    }

    #[test]
    fn flagship_crosscheck() {
        let rows = crosscheck(4, 9);
        assert_eq!(rows.len(), 6 + 5 + 4);
        for r in rows {
            assert!(r.agrees, "k={} n={}", r.k, r.n);
        }
    }

    fn arb_diagram(max_size: usize) -> impl Strategy<Value = YoungDiagram> {
        (0..=max_size).prop_flat_map(|s| {
            let all = partitions_in_box(s, s, s);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn kostka_is_symmetric(alpha in arb_diagram(6), seed in 0u64..1000) {
            let m = 4;
            let ws = weights(m, alpha.size());
            let w = &ws[(seed as usize) % ws.len()];
            let mut rotated = w.components.clone();
            rotated.rotate_left((seed as usize) % m);
            let mut swapped = w.components.clone();
            swapped.swap(0, m - 1);
            let k = kostka(w, &alpha).unwrap();
            prop_assert_eq!(kostka(&Weight::new(rotated), &alpha).unwrap(), k);
            prop_assert_eq!(kostka(&Weight::new(swapped), &alpha).unwrap(), k);
        }

        #[test]
        fn lr_symmetric_and_multiplicative(a in arb_diagram(3), b in arb_diagram(3), m in 1usize..5) {
            let size = a.size() + b.size();
            let mut total = BigInt::zero();
            for g in partitions_in_box(size, size, size) {
                let c = littlewood_richardson(&a, &b, &g).unwrap();
                prop_assert_eq!(c, littlewood_richardson(&b, &a, &g).unwrap());
                total += BigInt::from(c) * schur_dim(&g, m);
            }
            prop_assert_eq!(total, schur_dim(&a, m) * schur_dim(&b, m));
        }
    }
}
