//! Triangulations of small lattice point configurations, their
//! characteristic functions, and the vertices of the secondary polytope.
//!
//! Everything is computed in lattice coordinates of the affine lattice
//! spanned by the points, so volumes are normalized there: a unimodular
//! simplex has volume 1 whatever the ambient embedding.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::combin::{factorial, k_subsets, permutations, Subset};
use crate::error::{Error, Result};
use crate::exact::geometry::{
    affine_rank, in_convex_hull, intersect_in_common_face, lattice_coordinates, orient, simplex_volume,
    IntPoint,
};
use crate::exact::lp::{LinearProgram, Relation};
use crate::exact::{rat, Rational, RationalMatrix};

/// Largest configuration accepted by the exhaustive search.
pub const MAX_POINTS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfig {
    points: Vec<IntPoint>,
    dim: usize,
    lattice: Vec<IntPoint>,
}

impl PointConfig {
    pub fn new(points: Vec<IntPoint>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::SizeMismatch("empty point configuration".into()));
        };
        let width = first.len();
        if points.iter().any(|p| p.len() != width) {
            return Err(Error::SizeMismatch("points of different lengths".into()));
        }
        let distinct: BTreeSet<&IntPoint> = points.iter().collect();
        if distinct.len() != points.len() {
            return Err(Error::CoincidentPoints);
        }
        let dim = affine_rank(&points);
        let lattice = lattice_coordinates(&points);
        Ok(PointConfig { points, dim, lattice })
    }

    pub fn points(&self) -> &[IntPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Affine dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The points in coordinates of their own affine lattice, `Z^dim`.
    pub fn lattice_points(&self) -> &[IntPoint] {
        &self.lattice
    }

    /// Normalized volume of `conv(A)`.
    pub fn volume(&self) -> BigInt {
        if self.dim == 0 {
            return BigInt::from(1);
        }
        crate::exact::geometry::normalized_volume(&self.lattice).expect("full-dimensional in lattice coordinates")
    }

    fn simplex_volume(&self, simplex: &[usize]) -> BigInt {
        if self.dim == 0 {
            return BigInt::from(1);
        }
        simplex_volume(&self.lattice, simplex)
    }
}

/// A set of simplices, each a sorted list of point indices. The simplex
/// list itself is kept sorted, so equal triangulations compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangulation {
    simplices: Vec<Subset>,
}

impl Triangulation {
    pub fn new(simplices: Vec<Subset>) -> Self {
        let mut simplices: Vec<Subset> = simplices
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s
            })
            .collect();
        simplices.sort();
        simplices.dedup();
        Triangulation { simplices }
    }

    pub fn simplices(&self) -> &[Subset] {
        &self.simplices
    }

    /// Whether every simplex lies inside one of `cells` (given as vertex sets).
    pub fn refines(&self, cells: &[BTreeSet<usize>]) -> bool {
        self.simplices
            .iter()
            .all(|s| cells.iter().any(|c| s.iter().all(|v| c.contains(v))))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharFunction {
    pub values: Vec<BigInt>,
}

impl CharFunction {
    fn to_rational(&self) -> Vec<Rational> {
        self.values.iter().map(|v| Rational::from_integer(v.clone())).collect()
    }
}

/// Simplices are affinely independent, meet pairwise in common faces, and
/// their volumes add up to the volume of `conv(A)`.
pub fn is_triangulation(t: &Triangulation, a: &PointConfig) -> bool {
    let d = a.dim;
    let shapes_ok = t.simplices.iter().all(|s| {
        s.len() == d + 1 && s.iter().all(|&i| i < a.len()) && !a.simplex_volume(s).is_zero()
    });
    if !shapes_ok || t.simplices.is_empty() {
        return false;
    }
    let total: BigInt = t.simplices.iter().map(|s| a.simplex_volume(s)).sum();
    if total != a.volume() {
        return false;
    }
    let n = t.simplices.len();
    (0..n).all(|i| {
        (i + 1..n).all(|j| intersect_in_common_face(&a.lattice, &t.simplices[i], &t.simplices[j]))
    })
}

/// `φ_T(ω)`: the total volume of the simplices of `T` having `ω` as a vertex.
pub fn char_function(t: &Triangulation, a: &PointConfig) -> Result<CharFunction> {
    if !is_triangulation(t, a) {
        return Err(Error::InvalidTriangulation);
    }
    let mut values = vec![BigInt::zero(); a.len()];
    for s in &t.simplices {
        let v = a.simplex_volume(s);
        for &i in s {
            values[i] += &v;
        }
    }
    Ok(CharFunction { values })
}

fn drop_one(s: &[usize], skip: usize) -> Subset {
    s.iter()
        .enumerate()
        .filter(|(j, _)| *j != skip)
        .map(|(_, &v)| v)
        .collect()
}

struct Search<'a> {
    a: &'a PointConfig,
    simplices: Vec<Subset>,
    volumes: Vec<BigInt>,
    compatible: Vec<Vec<bool>>,
    // facet -> simplices containing it, with the side of the apex
    facet_index: BTreeMap<Subset, Vec<(usize, i8)>>,
    boundary: BTreeSet<Subset>,
    total: BigInt,
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

impl<'a> Search<'a> {
    fn new(a: &'a PointConfig) -> Self {
        let d = a.dim;
        let pts = &a.lattice;
        let simplices: Vec<Subset> = k_subsets(a.len(), d + 1)
            .into_iter()
            .filter(|s| !simplex_volume(pts, s).is_zero())
            .collect();
        let volumes = simplices.iter().map(|s| simplex_volume(pts, s)).collect();
        let m = simplices.len();
        let rows: Vec<Vec<bool>> = (0..m)
            .into_par_iter()
            .map(|i| {
                (0..m)
                    .map(|j| j > i && intersect_in_common_face(pts, &simplices[i], &simplices[j]))
                    .collect()
            })
            .collect();
        let compatible: Vec<Vec<bool>> = (0..m)
            .map(|i| (0..m).map(|j| if j < i { rows[j][i] } else { rows[i][j] }).collect())
            .collect();
        let mut facet_index: BTreeMap<Subset, Vec<(usize, i8)>> = BTreeMap::new();
        for (si, s) in simplices.iter().enumerate() {
            for skip in 0..s.len() {
                let f = drop_one(s, skip);
                let side = sign_of(&orient(pts, &f, s[skip]));
                facet_index.entry(f).or_default().push((si, side));
            }
        }
        let boundary = facet_index
            .keys()
            .filter(|f| {
                let signs: BTreeSet<i8> = (0..a.len()).map(|p| sign_of(&orient(pts, f, p))).collect();
                !(signs.contains(&1) && signs.contains(&-1))
            })
            .cloned()
            .collect();
        Search {
            a,
            simplices,
            volumes,
            compatible,
            facet_index,
            boundary,
            total: a.volume(),
        }
    }

    /// A facet of exactly one chosen simplex that is not on the hull
    /// boundary, with the side its simplex lies on.
    fn open_facet(&self, chosen: &[usize]) -> Option<(Subset, i8)> {
        let mut count: BTreeMap<Subset, (usize, i8)> = BTreeMap::new();
        for &si in chosen {
            let s = &self.simplices[si];
            for skip in 0..s.len() {
                let f = drop_one(s, skip);
                let side = sign_of(&orient(&self.a.lattice, &f, s[skip]));
                let e = count.entry(f).or_insert((0, side));
                e.0 += 1;
            }
        }
        count
            .into_iter()
            .find(|(f, (c, _))| *c == 1 && !self.boundary.contains(f))
            .map(|(f, (_, side))| (f, side))
    }

    fn extend(&self, chosen: &mut Vec<usize>, volume: &BigInt, out: &mut BTreeSet<Triangulation>) {
        match self.open_facet(chosen) {
            None => {
                if *volume == self.total {
                    out.insert(Triangulation::new(chosen.iter().map(|&i| self.simplices[i].clone()).collect()));
                }
            }
            Some((f, side)) => {
                for &(si, s_side) in &self.facet_index[&f] {
                    if s_side != -side || !chosen.iter().all(|&c| self.compatible[c][si]) {
                        continue;
                    }
                    let next = volume + &self.volumes[si];
                    if next > self.total {
                        continue;
                    }
                    chosen.push(si);
                    self.extend(chosen, &next, out);
                    chosen.pop();
                }
            }
        }
    }
}

/// All triangulations of `A` whose vertices are points of `A`.
///
/// Starts from each maximal simplex at the lexicographically smallest
/// point (always a vertex of the hull, hence of every triangulation), then
/// repeatedly closes an interior facet that only one chosen simplex has,
/// trying every compatible simplex on its other side.
pub fn enumerate_triangulations(a: &PointConfig) -> Result<Vec<Triangulation>> {
    if a.len() > MAX_POINTS {
        return Err(Error::TooLarge(a.len()));
    }
    if a.dim == 0 {
        return Ok(vec![Triangulation::new(vec![vec![0]])]);
    }
    let search = Search::new(a);
    let start = (0..a.len()).min_by(|&i, &j| a.points[i].cmp(&a.points[j])).expect("nonempty");
    let found: Vec<BTreeSet<Triangulation>> = (0..search.simplices.len())
        .into_par_iter()
        .filter(|&si| search.simplices[si].contains(&start))
        .map(|si| {
            let mut out = BTreeSet::new();
            search.extend(&mut vec![si], &search.volumes[si].clone(), &mut out);
            out
        })
        .collect();
    let all: BTreeSet<Triangulation> = found.into_iter().flatten().collect();
    Ok(all.into_iter().collect())
}

/// The characteristic functions that are vertices of their convex hull,
/// i.e. the vertices of the secondary polytope, sorted.
pub fn secondary_vertices(a: &PointConfig) -> Result<Vec<CharFunction>> {
    let phis: BTreeSet<CharFunction> = enumerate_triangulations(a)?
        .iter()
        .map(|t| char_function(t, a))
        .collect::<Result<_>>()?;
    let phis: Vec<CharFunction> = phis.into_iter().collect();
    let rational: Vec<Vec<Rational>> = phis.iter().map(CharFunction::to_rational).collect();
    let keep: Vec<bool> = (0..phis.len())
        .into_par_iter()
        .map(|i| {
            let others: Vec<Vec<Rational>> = rational
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, v)| v.clone())
                .collect();
            !in_convex_hull(&rational[i], &others)
        })
        .collect();
    Ok(phis.into_iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| p).collect())
}

/// Affine dimension of a set of characteristic functions.
pub fn hull_dimension(phis: &[CharFunction]) -> usize {
    let pts: Vec<IntPoint> = phis
        .iter()
        .map(|p| {
            p.values
                .iter()
                .map(|v| i64::try_from(v).expect("characteristic value fits in i64"))
                .collect()
        })
        .collect();
    affine_rank(&pts)
}

/// Is `T` cut out by a lifting? Searches for heights `h` with every point
/// off a simplex strictly above the affine function interpolating `h` on it.
pub fn is_regular_by_lifting(t: &Triangulation, a: &PointConfig) -> Result<bool> {
    if !is_triangulation(t, a) {
        return Err(Error::InvalidTriangulation);
    }
    let homogenized = |i: usize| {
        let mut v: Vec<Rational> = a.lattice[i].iter().map(|&x| rat(x)).collect();
        v.push(rat(1));
        v
    };
    let mut lp = LinearProgram::new_free(a.len());
    for s in &t.simplices {
        let cols: Vec<Vec<Rational>> = s.iter().map(|&i| homogenized(i)).collect();
        let m = RationalMatrix::from_columns(&cols, a.dim + 1)?;
        let inv = m.inverse().ok_or(Error::InvalidTriangulation)?;
        for p in (0..a.len()).filter(|p| !s.contains(p)) {
            // p = Σ μ_v v with Σ μ_v = 1; ask h(p) - Σ μ_v h(v) >= 1
            let mu = inv.mul_vec(&homogenized(p));
            let mut row = vec![rat(0); a.len()];
            row[p] = rat(1);
            for (&v, c) in s.iter().zip(&mu) {
                row[v] -= c;
            }
            lp.add(row, Relation::Ge, rat(1));
        }
    }
    Ok(lp.is_feasible())
}

/// Points `(i, j)` of `Δ^1 x Δ^k` at `(i, u_j)`, `u_0 = 0`, `u_j = e_j`;
/// index `i * (k + 1) + j`.
pub fn prism_points(k: usize) -> PointConfig {
    let mut pts = Vec::with_capacity(2 * (k + 1));
    for i in 0..2 {
        for j in 0..=k {
            let mut p = vec![0i64; k + 1];
            p[0] = i;
            if j > 0 {
                p[j] = 1;
            }
            pts.push(p);
        }
    }
    PointConfig::new(pts).expect("prism points are distinct")
}

pub fn prism_index(k: usize, i: usize, j: usize) -> usize {
    i * (k + 1) + j
}

/// The staircase triangulation: `Δ_i` spans `(0, j)` for `j <= i` and
/// `(1, j)` for `j >= i`.
pub fn prism_standard_triangulation(k: usize) -> Triangulation {
    let identity: Vec<usize> = (0..=k).collect();
    prism_triangulation_of_permutation(&identity).expect("identity is a permutation")
}

/// The standard triangulation with `w` applied to the labels `j`.
pub fn prism_triangulation_of_permutation(w: &[usize]) -> Result<Triangulation> {
    let k = w.len().checked_sub(1).ok_or(Error::BadParams("empty permutation".into()))?;
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    if k == 0 || sorted != (0..=k).collect::<Vec<_>>() {
        return Err(Error::BadParams(format!("not a permutation of 0..{k}")));
    }
    let simplices = (0..=k)
        .map(|i| {
            let bottom = (0..=i).map(|j| prism_index(k, 0, w[j]));
            let top = (i..=k).map(|j| prism_index(k, 1, w[j]));
            bottom.chain(top).collect()
        })
        .collect();
    Ok(Triangulation::new(simplices))
}

/// All permutations of `(1, ..., k+1)`.
pub fn permutohedron_vertices(k: usize) -> Vec<Vec<i64>> {
    permutations(k + 1)
        .into_iter()
        .map(|p| p.into_iter().map(|x| x as i64 + 1).collect())
        .collect()
}

/// The values of `φ` on the `(1, ·)` row of the prism.
pub fn prism_top_row(k: usize, phi: &CharFunction) -> Vec<i64> {
    (0..=k)
        .map(|j| i64::try_from(&phi.values[prism_index(k, 1, j)]).expect("small value"))
        .collect()
}

/// `(k+1)!`, the number of triangulations of `Δ^1 x Δ^k`.
pub fn prism_triangulation_count(k: usize) -> u64 {
    factorial(k as u64 + 1)
}
