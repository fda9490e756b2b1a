//! Small exact polyhedral toolkit on integer point sets: affine rank,
//! lattice coordinates, placing triangulations, and LP-based face tests.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::lp::{LinearProgram, Relation};
use super::matrix::bareiss_det;
use super::rational::{rat, Rational};
use crate::error::{Error, Result};

pub type IntPoint = Vec<i64>;

/// Dimension of the affine span.
pub fn affine_rank(points: &[IntPoint]) -> usize {
    if points.is_empty() {
        return 0;
    }
    let mut rows: Vec<Vec<BigInt>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(&points[0]).map(|(a, b)| BigInt::from(a - b)).collect())
        .collect();
    integer_row_basis(&mut rows).len()
}

/// Hermite-style echelon basis of the lattice spanned by `rows`, via
/// integer row operations only. Returns `(pivot column, basis row)` pairs.
fn integer_row_basis(rows: &mut Vec<Vec<BigInt>>) -> Vec<(usize, Vec<BigInt>)> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut basis = Vec::new();
    let mut pool: Vec<Vec<BigInt>> = std::mem::take(rows);
    for c in 0..cols {
        loop {
            // pick the row with the smallest nonzero |entry| in column c
            let best = pool
                .iter()
                .enumerate()
                .filter(|(_, r)| !r[c].is_zero())
                .min_by(|a, b| a.1[c].abs().cmp(&b.1[c].abs()))
                .map(|(i, _)| i);
            let Some(b) = best else { break };
            let pivot = pool[b].clone();
            let mut reduced = false;
            for (i, r) in pool.iter_mut().enumerate() {
                if i == b || r[c].is_zero() {
                    continue;
                }
                let q = r[c].div_floor(&pivot[c]);
                for (x, y) in r.iter_mut().zip(&pivot) {
                    *x -= &q * y;
                }
                reduced = true;
            }
            if pool.iter().enumerate().all(|(i, r)| i == b || r[c].is_zero()) {
                let mut row = pool.swap_remove(b);
                if row[c].is_negative() {
                    for x in row.iter_mut() {
                        *x = -&*x;
                    }
                }
                basis.push((c, row));
                break;
            }
            debug_assert!(reduced);
        }
        pool.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    basis
}

/// Re-expresses the points in a basis of the lattice generated by their
/// differences, translated so the first point is the origin. The result is
/// full-dimensional in `Z^d`, `d` = affine rank, and simplex volumes there
/// are normalized to that lattice.
pub fn lattice_coordinates(points: &[IntPoint]) -> Vec<IntPoint> {
    if points.is_empty() {
        return Vec::new();
    }
    let diffs: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| p.iter().zip(&points[0]).map(|(a, b)| BigInt::from(a - b)).collect())
        .collect();
    let mut work = diffs[1..].to_vec();
    let basis = integer_row_basis(&mut work);
    diffs
        .iter()
        .map(|v| {
            let mut v = v.clone();
            let mut coords = Vec::with_capacity(basis.len());
            for (c, b) in &basis {
                let q = &v[*c] / &b[*c];
                debug_assert!((&v[*c] % &b[*c]).is_zero());
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &q * y;
                }
                coords.push(q.to_i64().expect("lattice coordinate fits in i64"));
            }
            debug_assert!(v.iter().all(|x| x.is_zero()));
            coords
        })
        .collect()
}

/// Drops the last coordinate. Points of a hyperplane `sum x = const` map
/// bijectively onto their image, and the lattice `{x in Z^n : sum x = c}`
/// onto `Z^(n-1)`.
pub fn drop_last_coordinate(points: &[IntPoint]) -> Vec<IntPoint> {
    points.iter().map(|p| p[..p.len() - 1].to_vec()).collect()
}

fn det_i128(mut m: Vec<Vec<i128>>) -> BigInt {
    // Bareiss in i128, falling back to BigInt on overflow.
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1i128;
    let mut prev: i128 = 1;
    let fallback = |m: &[Vec<i128>]| {
        let mut b: Vec<Vec<BigInt>> = m
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        bareiss_det(&mut b)
    };
    let original = m.clone();
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k]);
                let b = m[i][k].checked_mul(m[k][j]);
                let v = match (a, b) {
                    (Some(a), Some(b)) => a.checked_sub(b),
                    _ => None,
                };
                match v {
                    Some(v) => m[i][j] = v / prev,
                    None => return fallback(&original),
                }
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    BigInt::from(sign * m[n - 1][n - 1])
}

/// `det [q_1 - q_0, ..., q_{d-1} - q_0, x - q_0]` for a facet `q` of size `d`.
pub fn orient(points: &[IntPoint], facet: &[usize], x: usize) -> BigInt {
    let base = &points[facet[0]];
    let m: Vec<Vec<i128>> = facet[1..]
        .iter()
        .chain(std::iter::once(&x))
        .map(|&i| {
            points[i]
                .iter()
                .zip(base)
                .map(|(a, b)| (*a as i128) - (*b as i128))
                .collect()
        })
        .collect();
    det_i128(m)
}

/// Normalized volume of a full-dimensional simplex in `Z^d` (`d+1` vertices).
pub fn simplex_volume(points: &[IntPoint], simplex: &[usize]) -> BigInt {
    orient(points, &simplex[..simplex.len() - 1], simplex[simplex.len() - 1]).abs()
}

fn sign_of(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// A placing (beneath-beyond) triangulation of points that are
/// full-dimensional in `Z^d`, inserting points in the given order.
pub fn placing_triangulation(points: &[IntPoint]) -> Result<Vec<Vec<usize>>> {
    let Some(first) = points.first() else {
        return Err(Error::NotFullDimensional);
    };
    let d = first.len();
    if d == 0 {
        return Ok(vec![vec![0]]);
    }
    // greedy initial simplex
    let mut simplex = vec![0usize];
    for i in 1..points.len() {
        if simplex.len() == d + 1 {
            break;
        }
        let mut candidate: Vec<IntPoint> = simplex.iter().map(|&s| points[s].clone()).collect();
        candidate.push(points[i].clone());
        if affine_rank(&candidate) == simplex.len() {
            simplex.push(i);
        }
    }
    if simplex.len() != d + 1 {
        return Err(Error::NotFullDimensional);
    }

    // facets with the sign of the outer side
    let mut hull: Vec<(Vec<usize>, i8)> = Vec::new();
    for skip in 0..=d {
        let facet: Vec<usize> = simplex
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != skip)
            .map(|(_, &v)| v)
            .collect();
        let inner = sign_of(&orient(points, &facet, simplex[skip]));
        hull.push((facet, -inner));
    }
    let mut triangulation = vec![simplex.clone()];
    let mut placed = simplex.clone();

    for p in 0..points.len() {
        if placed.contains(&p) {
            continue;
        }
        let visible: Vec<bool> = hull
            .iter()
            .map(|(f, out)| sign_of(&orient(points, f, p)) == *out)
            .collect();
        if !visible.iter().any(|&v| v) {
            placed.push(p);
            continue;
        }
        let mut ridge_count: HashMap<Vec<usize>, (usize, usize)> = HashMap::new();
        for (fi, (f, _)) in hull.iter().enumerate() {
            if !visible[fi] {
                continue;
            }
            for skip in 0..f.len() {
                let mut ridge: Vec<usize> = f
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != skip)
                    .map(|(_, &v)| v)
                    .collect();
                ridge.sort_unstable();
                let e = ridge_count.entry(ridge).or_insert((0, fi));
                e.0 += 1;
                e.1 = fi;
            }
        }
        let mut new_facets = Vec::new();
        for (fi, (f, _)) in hull.iter().enumerate() {
            if visible[fi] {
                let mut s = f.clone();
                s.push(p);
                triangulation.push(s);
            }
        }
        let mut horizon: Vec<(Vec<usize>, usize)> = ridge_count
            .into_iter()
            .filter(|(_, (count, _))| *count == 1)
            .map(|(r, (_, fi))| (r, fi))
            .collect();
        horizon.sort();
        for (ridge, fi) in horizon {
            let apex = *hull[fi].0.iter().find(|v| !ridge.contains(v)).unwrap();
            let mut facet = ridge;
            facet.push(p);
            let inner = sign_of(&orient(points, &facet, apex));
            debug_assert!(inner != 0);
            new_facets.push((facet, -inner));
        }
        let mut kept: Vec<(Vec<usize>, i8)> = hull
            .into_iter()
            .zip(&visible)
            .filter(|(_, &v)| !v)
            .map(|(f, _)| f)
            .collect();
        kept.extend(new_facets);
        hull = kept;
        placed.push(p);
    }
    for s in triangulation.iter_mut() {
        s.sort_unstable();
    }
    Ok(triangulation)
}

/// Normalized volume of the convex hull of points full-dimensional in `Z^d`.
pub fn normalized_volume(points: &[IntPoint]) -> Result<BigInt> {
    let t = placing_triangulation(points)?;
    Ok(t.iter().map(|s| simplex_volume(points, s)).sum())
}

fn to_rational_row(p: &[i64]) -> Vec<Rational> {
    p.iter().map(|&x| rat(x)).collect()
}

/// Is there an affine functional `h` vanishing on `face` and `<= -1` on
/// `rest`? Then `conv(face)` is a face of `conv(face + rest)` whose vertices
/// among these points are exactly `face`.
pub fn is_exposed_face(points: &[IntPoint], face: &[usize], rest: &[usize]) -> bool {
    separating_functional(points, face, rest, &[]).is_some()
}

/// Searches for an affine functional `h = c.x + c0` with `h = 0` on
/// `common`, `h <= -1` on `below`, and `h >= 1` on `above`.
pub fn separating_functional(
    points: &[IntPoint],
    common: &[usize],
    below: &[usize],
    above: &[usize],
) -> Option<Vec<Rational>> {
    let dim = points.first().map_or(0, |p| p.len());
    let mut lp = LinearProgram::new_free(dim + 1);
    let row = |i: usize| {
        let mut r = to_rational_row(&points[i]);
        r.push(rat(1));
        r
    };
    for &i in common {
        lp.add(row(i), Relation::Eq, rat(0));
    }
    for &i in below {
        lp.add(row(i), Relation::Le, rat(-1));
    }
    for &i in above {
        lp.add(row(i), Relation::Ge, rat(1));
    }
    lp.feasible_point()
}

/// The common-face condition for two polytopes given by vertex index sets:
/// `conv(p) ∩ conv(q) = conv(p ∩ q)` and it is a face of both.
pub fn intersect_in_common_face(points: &[IntPoint], p: &[usize], q: &[usize]) -> bool {
    let common: Vec<usize> = p.iter().copied().filter(|i| q.contains(i)).collect();
    let only_p: Vec<usize> = p.iter().copied().filter(|i| !q.contains(i)).collect();
    let only_q: Vec<usize> = q.iter().copied().filter(|i| !p.contains(i)).collect();
    separating_functional(points, &common, &only_p, &only_q).is_some()
}

/// Whether `target` is a convex combination of `others`.
pub fn in_convex_hull(target: &[Rational], others: &[Vec<Rational>]) -> bool {
    if others.is_empty() {
        return false;
    }
    let dim = target.len();
    let mut lp = LinearProgram::new(others.len());
    for c in 0..dim {
        lp.add(
            others.iter().map(|o| o[c].clone()).collect(),
            Relation::Eq,
            target[c].clone(),
        );
    }
    lp.add(vec![rat(1); others.len()], Relation::Eq, rat(1));
    lp.is_feasible()
}
