//! The hypersimplex `Δ(k, n)`, matroid polytopes inside it, and validation
//! of matroid decompositions.
//!
//! A vertex `e_I` is stored as the sorted 0-based subset `I`.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;

use crate::combin::{k_subsets, Subset};
use crate::error::{Error, Result};
use crate::exact::geometry::{
    affine_rank, drop_last_coordinate, is_exposed_face, normalized_volume as hull_volume,
    separating_functional, IntPoint,
};
use crate::grassmann::Subspace;

pub fn hypersimplex_vertices(k: usize, n: usize) -> Result<Vec<Subset>> {
    check_params(k, n)?;
    Ok(k_subsets(n, k))
}

fn check_params(k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::BadParams(format!("need 1 <= k <= n-1, got k={k}, n={n}")));
    }
    Ok(())
}

pub fn indicator(subset: &[usize], n: usize) -> IntPoint {
    let mut v = vec![0; n];
    for &i in subset {
        v[i] = 1;
    }
    v
}

/// A subpolytope of `Δ(k, n)` spanned by some of its vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatroidPolytope {
    pub k: usize,
    pub n: usize,
    pub vertices: BTreeSet<Subset>,
}

impl MatroidPolytope {
    /// Checks only the shape of the vertices; see [`is_matroid_polytope`].
    pub fn new(k: usize, n: usize, vertices: BTreeSet<Subset>) -> Result<Self> {
        check_params(k, n)?;
        if vertices.is_empty() {
            return Err(Error::BadParams("empty vertex set".into()));
        }
        for v in &vertices {
            if v.len() != k || v.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::BadParams(format!("vertex {v:?} is not a {k}-subset")));
            }
            if v.iter().any(|&i| i >= n) {
                return Err(Error::IndexOutOfRange(format!("vertex {v:?} in Δ({k},{n})")));
            }
        }
        Ok(MatroidPolytope { k, n, vertices })
    }

    pub fn hypersimplex(k: usize, n: usize) -> Result<Self> {
        Self::new(k, n, hypersimplex_vertices(k, n)?.into_iter().collect())
    }

    pub fn points(&self) -> Vec<IntPoint> {
        self.vertices.iter().map(|v| indicator(v, self.n)).collect()
    }

    pub fn dimension(&self) -> usize {
        affine_rank(&self.points())
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dimension() == self.n - 1
    }

    pub fn is_matroid_polytope(&self) -> bool {
        is_matroid_polytope(&self.vertices)
    }

    /// Lattice-normalized volume in the hyperplane `sum x = k`.
    pub fn normalized_volume(&self) -> Result<BigInt> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        hull_volume(&drop_last_coordinate(&self.points()))
    }
}

pub fn matroid_polytope_of(s: &Subspace) -> MatroidPolytope {
    MatroidPolytope::new(s.k(), s.n(), s.matroid_bases()).expect("bases of a subspace are k-subsets")
}

/// Basis exchange: for bases `A`, `B` and `x in A - B` some `y in B - A`
/// makes `A - x + y` a basis.
pub fn satisfies_basis_exchange(bases: &BTreeSet<Subset>) -> bool {
    if bases.is_empty() {
        return false;
    }
    for a in bases {
        for b in bases {
            for &x in a.iter().filter(|x| !b.contains(x)) {
                let ok = b.iter().filter(|y| !a.contains(y)).any(|&y| {
                    let mut c: Subset = a.iter().copied().filter(|&z| z != x).collect();
                    c.push(y);
                    c.sort_unstable();
                    bases.contains(&c)
                });
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Every edge of the convex hull is parallel to some `e_i - e_j`. Edges are
/// found exactly by LP.
pub fn edges_are_root_directions(vertices: &BTreeSet<Subset>) -> bool {
    if vertices.is_empty() {
        return false;
    }
    let n = vertices.iter().flatten().max().map_or(1, |m| m + 1);
    let list: Vec<&Subset> = vertices.iter().collect();
    let points: Vec<IntPoint> = list.iter().map(|v| indicator(v, n)).collect();
    for a in 0..list.len() {
        for b in a + 1..list.len() {
            let diff = list[a].iter().filter(|x| !list[b].contains(x)).count();
            if diff <= 1 {
                continue;
            }
            let rest: Vec<usize> = (0..list.len()).filter(|&c| c != a && c != b).collect();
            if is_exposed_face(&points, &[a, b], &rest) {
                return false;
            }
        }
    }
    true
}

/// Matroid test by basis exchange; small inputs are also checked against
/// the edge-direction characterization.
pub fn is_matroid_polytope(vertices: &BTreeSet<Subset>) -> bool {
    let exchange = satisfies_basis_exchange(vertices);
    if vertices.len() <= 12 {
        debug_assert_eq!(exchange, edges_are_root_directions(vertices));
    }
    exchange
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FacetSign {
    /// `Γ⁺_i`: vertices with `i in I`, isomorphic to `Δ(k-1, n-1)`.
    Plus,
    /// `Γ⁻_i`: vertices with `i not in I`, isomorphic to `Δ(k, n-1)`.
    Minus,
}

/// The identification of a facet of `Δ(k, n)` with a smaller hypersimplex:
/// drop `i` and close the gap in labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FacetMap {
    pub k: usize,
    pub n: usize,
    pub i: usize,
    pub sign: FacetSign,
}

impl FacetMap {
    pub fn target_k(&self) -> usize {
        match self.sign {
            FacetSign::Plus => self.k - 1,
            FacetSign::Minus => self.k,
        }
    }

    pub fn target_n(&self) -> usize {
        self.n - 1
    }

    pub fn contains(&self, v: &[usize]) -> bool {
        v.contains(&self.i) == (self.sign == FacetSign::Plus)
    }

    pub fn apply(&self, v: &[usize]) -> Subset {
        v.iter()
            .filter(|&&x| x != self.i)
            .map(|&x| if x > self.i { x - 1 } else { x })
            .collect()
    }
}

pub fn facet(k: usize, n: usize, i: usize, sign: FacetSign) -> Result<(MatroidPolytope, FacetMap)> {
    check_params(k, n)?;
    if i >= n {
        return Err(Error::BadParams(format!("coordinate {} of {n}", i + 1)));
    }
    let map = FacetMap { k, n, i, sign };
    check_params(map.target_k(), map.target_n())?;
    let vertices = k_subsets(n, k).into_iter().filter(|v| map.contains(v)).collect();
    Ok((MatroidPolytope::new(k, n, vertices)?, map))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidDecomposition {
    pub k: usize,
    pub n: usize,
    pub pieces: Vec<MatroidPolytope>,
}

impl MatroidDecomposition {
    pub fn new(k: usize, n: usize, pieces: Vec<MatroidPolytope>) -> Result<Self> {
        check_params(k, n)?;
        if pieces.iter().any(|p| p.k != k || p.n != n) {
            return Err(Error::SizeMismatch("piece in a different hypersimplex".into()));
        }
        Ok(MatroidDecomposition { k, n, pieces })
    }

    pub fn trivial(k: usize, n: usize) -> Result<Self> {
        Self::new(k, n, vec![MatroidPolytope::hypersimplex(k, n)?])
    }

    /// Pieces as a sorted set, for order-independent comparison.
    pub fn piece_set(&self) -> BTreeSet<BTreeSet<Subset>> {
        self.pieces.iter().map(|p| p.vertices.clone()).collect()
    }
}

pub fn is_matroid_decomposition(d: &MatroidDecomposition) -> bool {
    match DecompositionChecker::new(d.k, d.n) {
        Ok(c) => c.check(d),
        Err(_) => false,
    }
}

type SimplexPair = (Vec<usize>, Vec<usize>);

/// Validator for decompositions of one fixed `Δ(k, n)`, caching piece
/// volumes and pairwise face tests across calls.
pub struct DecompositionChecker {
    k: usize,
    n: usize,
    points: Vec<IntPoint>,
    index: HashMap<Subset, usize>,
    total: BigInt,
    volumes: RefCell<HashMap<Vec<usize>, Option<BigInt>>>,
    pairs: RefCell<HashMap<SimplexPair, bool>>,
}

impl DecompositionChecker {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        let vertices = hypersimplex_vertices(k, n)?;
        let points: Vec<IntPoint> = vertices.iter().map(|v| indicator(v, n)).collect();
        let index = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let total = hull_volume(&drop_last_coordinate(&points))?;
        Ok(DecompositionChecker {
            k,
            n,
            points,
            index,
            total,
            volumes: RefCell::new(HashMap::new()),
            pairs: RefCell::new(HashMap::new()),
        })
    }

    pub fn hypersimplex_volume(&self) -> &BigInt {
        &self.total
    }

    fn indices(&self, p: &MatroidPolytope) -> Vec<usize> {
        p.vertices.iter().map(|v| self.index[v]).collect()
    }

    /// Volume of a full-dimensional matroid piece, `None` otherwise.
    fn piece_volume(&self, p: &MatroidPolytope, idx: &[usize]) -> Option<BigInt> {
        if let Some(v) = self.volumes.borrow().get(idx) {
            return v.clone();
        }
        let v = if p.is_matroid_polytope() {
            let pts: Vec<IntPoint> = idx.iter().map(|&i| self.points[i].clone()).collect();
            if affine_rank(&pts) == self.n - 1 {
                hull_volume(&drop_last_coordinate(&pts)).ok()
            } else {
                None
            }
        } else {
            None
        };
        self.volumes.borrow_mut().insert(idx.to_vec(), v.clone());
        v
    }

    fn common_face(&self, a: &[usize], b: &[usize]) -> bool {
        let key = if a <= b {
            (a.to_vec(), b.to_vec())
        } else {
            (b.to_vec(), a.to_vec())
        };
        if let Some(&r) = self.pairs.borrow().get(&key) {
            return r;
        }
        let common: Vec<usize> = a.iter().copied().filter(|i| b.contains(i)).collect();
        let only_a: Vec<usize> = a.iter().copied().filter(|i| !b.contains(i)).collect();
        let only_b: Vec<usize> = b.iter().copied().filter(|i| !a.contains(i)).collect();
        // full-dimensional pieces meet in a proper face or not at all
        let r = !only_a.is_empty()
            && !only_b.is_empty()
            && separating_functional(&self.points, &common, &only_a, &only_b).is_some();
        self.pairs.borrow_mut().insert(key, r);
        r
    }

    pub fn check(&self, d: &MatroidDecomposition) -> bool {
        if d.k != self.k || d.n != self.n || d.pieces.is_empty() {
            return false;
        }
        if d.pieces.iter().any(|p| p.k != self.k || p.n != self.n) {
            return false;
        }
        let idx: Vec<Vec<usize>> = d.pieces.iter().map(|p| self.indices(p)).collect();
        let mut sum = BigInt::from(0);
        for (p, i) in d.pieces.iter().zip(&idx) {
            match self.piece_volume(p, i) {
                Some(v) => sum += v,
                None => return false,
            }
        }
        if sum != self.total {
            return false;
        }
        for a in 0..idx.len() {
            for b in a + 1..idx.len() {
                if !self.common_face(&idx[a], &idx[b]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Intersects every piece with a facet and transports the result to the
/// smaller hypersimplex, dropping pieces that lose dimension.
pub fn restrict_to_facet(
    d: &MatroidDecomposition,
    i: usize,
    sign: FacetSign,
) -> Result<MatroidDecomposition> {
    let (_, map) = facet(d.k, d.n, i, sign)?;
    let (tk, tn) = (map.target_k(), map.target_n());
    let mut pieces = Vec::new();
    for p in &d.pieces {
        let vertices: BTreeSet<Subset> = p
            .vertices
            .iter()
            .filter(|v| map.contains(v))
            .map(|v| map.apply(v))
            .collect();
        if vertices.is_empty() {
            continue;
        }
        let q = MatroidPolytope::new(tk, tn, vertices)?;
        if q.is_full_dimensional() {
            pieces.push(q);
        }
    }
    MatroidDecomposition::new(tk, tn, pieces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use proptest::prelude::*;

    fn vset(keys: &[&[usize]]) -> BTreeSet<Subset> {
        keys.iter().map(|k| k.iter().map(|x| x - 1).collect()).collect()
    }

    fn poly(k: usize, n: usize, keys: &[&[usize]]) -> MatroidPolytope {
        MatroidPolytope::new(k, n, vset(keys)).unwrap()
    }

    fn eulerian(n: u64, k: u64) -> u64 {
        // A(n, k) = sum_j (-1)^j C(n+1, j) (k+1-j)^n
        let mut total: i64 = 0;
        for j in 0..=k {
            let term = crate::combin::binomial(n + 1, j) as i64 * ((k + 1 - j) as i64).pow(n as u32);
            total += if j % 2 == 0 { term } else { -term };
        }
        total as u64
    }

    #[test]
    fn vertex_lists() {
        assert_eq!(hypersimplex_vertices(1, 3).unwrap(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(hypersimplex_vertices(2, 4).unwrap().len(), 6);
        assert_eq!(hypersimplex_vertices(3, 4).unwrap().len(), 4);
        assert!(matches!(hypersimplex_vertices(0, 3), Err(Error::BadParams(_))));
        assert!(matches!(hypersimplex_vertices(3, 3), Err(Error::BadParams(_))));
    }

    #[test]
    fn facet_examples() {
        let (p, map) = facet(2, 4, 0, FacetSign::Plus).unwrap();
        assert_eq!(p.vertices, vset(&[&[1, 2], &[1, 3], &[1, 4]]));
        assert_eq!((map.target_k(), map.target_n()), (1, 3));
        let image: BTreeSet<Subset> = p.vertices.iter().map(|v| map.apply(v)).collect();
        assert_eq!(image, hypersimplex_vertices(1, 3).unwrap().into_iter().collect());

        let (p, map) = facet(2, 4, 0, FacetSign::Minus).unwrap();
        assert_eq!(p.vertices, vset(&[&[2, 3], &[2, 4], &[3, 4]]));
        assert_eq!((map.target_k(), map.target_n()), (2, 3));

        assert!(facet(1, 4, 0, FacetSign::Plus).is_err());
    }

    #[test]
    fn facet_counts_and_types() {
        for n in 4..=8 {
            for k in 2..=n - 2 {
                let mut count = 0;
                for i in 0..n {
                    for sign in [FacetSign::Plus, FacetSign::Minus] {
                        let (p, map) = facet(k, n, i, sign).unwrap();
                        let image: BTreeSet<Subset> = p.vertices.iter().map(|v| map.apply(v)).collect();
                        let expected: BTreeSet<Subset> =
                            k_subsets(map.target_n(), map.target_k()).into_iter().collect();
                        assert_eq!(image, expected);
                        assert_eq!(p.dimension(), n - 2);
                        count += 1;
                    }
                }
                assert_eq!(count, 2 * n);
            }
        }
    }

    #[test]
    fn matroid_examples() {
        for (k, n) in [(1, 3), (2, 4), (2, 5), (3, 6)] {
            assert!(MatroidPolytope::hypersimplex(k, n).unwrap().is_matroid_polytope());
        }
        let bad = vset(&[&[1, 2], &[3, 4]]);
        assert!(!satisfies_basis_exchange(&bad));
        assert!(!edges_are_root_directions(&bad));
        // two classes {1,2} / {3,4}: pairs across the classes
        let m = poly(2, 4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        assert!(m.is_matroid_polytope());
        assert_eq!(m.dimension(), 2);
        assert!(!satisfies_basis_exchange(&BTreeSet::new()));
    }

    #[test]
    fn exchange_agrees_with_edges_on_all_small_sets() {
        // every vertex subset of Δ(2,4)
        let all = k_subsets(4, 2);
        for mask in 1u32..(1 << all.len()) {
            let s: BTreeSet<Subset> = (0..all.len())
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| all[b].clone())
                .collect();
            assert_eq!(satisfies_basis_exchange(&s), edges_are_root_directions(&s), "{s:?}");
        }
    }

    #[test]
    fn volumes() {
        for n in 2..=6 {
            assert_eq!(MatroidPolytope::hypersimplex(1, n).unwrap().normalized_volume().unwrap(), BigInt::from(1));
        }
        let octa = MatroidPolytope::hypersimplex(2, 4).unwrap();
        assert_eq!(octa.normalized_volume().unwrap(), BigInt::from(4));
        let top = poly(2, 4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        let bottom = poly(2, 4, &[&[3, 4], &[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        assert_eq!(top.normalized_volume().unwrap(), BigInt::from(2));
        assert_eq!(bottom.normalized_volume().unwrap(), BigInt::from(2));
        let square = poly(2, 4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        assert_eq!(square.normalized_volume(), Err(Error::NotFullDimensional));
    }

    #[test]
    fn hypersimplex_volume_is_eulerian() {
        for n in 2..=7usize {
            for k in 1..n {
                let v = MatroidPolytope::hypersimplex(k, n).unwrap().normalized_volume().unwrap();
                assert_eq!(v, BigInt::from(eulerian(n as u64 - 1, k as u64 - 1)), "Δ({k},{n})");
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let trivial = MatroidDecomposition::trivial(2, 4).unwrap();
        assert!(is_matroid_decomposition(&trivial));

        let top = poly(2, 4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        let bottom = poly(2, 4, &[&[3, 4], &[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        let split = MatroidDecomposition::new(2, 4, vec![top.clone(), bottom]).unwrap();
        assert!(is_matroid_decomposition(&split));

        // a pyramid over another square, overlapping the first one
        let other = poly(2, 4, &[&[1, 2], &[1, 3], &[2, 3], &[1, 4], &[3, 4]]);
        let overlap = MatroidDecomposition::new(2, 4, vec![top.clone(), other]).unwrap();
        assert!(!is_matroid_decomposition(&overlap));

        // right volume, wrong position
        let twice = MatroidDecomposition::new(2, 4, vec![top.clone(), top]).unwrap();
        assert!(!is_matroid_decomposition(&twice));
    }

    #[test]
    fn restriction_examples() {
        let trivial = MatroidDecomposition::trivial(2, 5).unwrap();
        let r = restrict_to_facet(&trivial, 2, FacetSign::Minus).unwrap();
        assert_eq!(r, MatroidDecomposition::trivial(2, 4).unwrap());

        let top = poly(2, 4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        let bottom = poly(2, 4, &[&[3, 4], &[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        let split = MatroidDecomposition::new(2, 4, vec![top, bottom]).unwrap();
        let r = restrict_to_facet(&split, 0, FacetSign::Plus).unwrap();
        assert_eq!(r, MatroidDecomposition::trivial(1, 3).unwrap());
        assert!(is_matroid_decomposition(&r));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]

        #[test]
        fn realizable_polytopes_are_matroid(seed in any::<u64>(), k in 1usize..4, extra in 1usize..4) {
            let mut rng = sample::rng(seed);
            let s = sample::sparse_subspace(&mut rng, k, k + extra);
            let p = matroid_polytope_of(&s);
            prop_assert!(p.is_matroid_polytope());
            if p.vertices.len() <= 12 {
                prop_assert!(edges_are_root_directions(&p.vertices));
            }
        }
    }
}
