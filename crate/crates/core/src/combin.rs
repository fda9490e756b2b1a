//! Subsets, permutations and signs. Subsets are sorted `Vec<usize>` of
//! 0-based indices; text keys are 1-based, e.g. `"1,3"`.

use crate::error::{Error, Result};

pub type Subset = Vec<usize>;

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Subset> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

pub fn complement(subset: &[usize], n: usize) -> Subset {
    (0..n).filter(|i| !subset.contains(i)).collect()
}

/// Sign of the permutation that sorts `seq`, or 0 if it has a repeat.
pub fn sort_sign(seq: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] == seq[j] {
                return 0;
            }
            if seq[i] > seq[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// `"1,3"` for the subset `{0, 2}`.
pub fn subset_key(subset: &[usize]) -> String {
    subset
        .iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses a 1-based key like `"1,3"` into a sorted 0-based subset.
pub fn parse_subset_key(key: &str) -> Result<Subset> {
    let key = key.trim();
    if key.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for part in key.split(',') {
        let v: usize = part
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad subset key {key:?}")))?;
        if v == 0 {
            return Err(Error::Parse(format!("subset keys are 1-based: {key:?}")));
        }
        out.push(v - 1);
    }
    let len = out.len();
    out.sort_unstable();
    out.dedup();
    if out.len() != len {
        return Err(Error::Parse(format!("repeated index in {key:?}")));
    }
    Ok(out)
}
