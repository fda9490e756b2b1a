//! Points of the Grassmannian `G(k, n)` as row spaces of `k x n` matrices.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::combin::{k_subsets, sort_sign, Subset};
use crate::configurations::Configuration;
use crate::error::{Error, Result};
use crate::exact::{Rational, RationalMatrix};

/// A `k`-dimensional subspace of `Q^n`, the row space of `matrix`.
#[derive(Debug, Clone)]
pub struct Subspace {
    k: usize,
    n: usize,
    matrix: RationalMatrix,
}

impl Subspace {
    /// Requires full row rank and `1 <= k < n`.
    pub fn new(matrix: RationalMatrix) -> Result<Self> {
        let (k, n) = (matrix.rows(), matrix.cols());
        if k == 0 || k >= n {
            return Err(Error::BadParams(format!("need 1 <= k < n, got k={k}, n={n}")));
        }
        if matrix.rank() != k {
            return Err(Error::RankDeficient);
        }
        Ok(Subspace { k, n, matrix })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(RationalMatrix::from_i64(rows))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    /// Reduced row echelon form, the canonical representative.
    pub fn canonical(&self) -> RationalMatrix {
        self.matrix.rref()
    }

    pub fn plucker(&self) -> PluckerVector {
        let rows: Vec<usize> = (0..self.k).collect();
        let coords = k_subsets(self.n, self.k)
            .into_iter()
            .map(|cols| {
                let v = self.matrix.minor(&rows, &cols).expect("indices in range");
                (cols, v)
            })
            .collect();
        PluckerVector {
            k: self.k,
            n: self.n,
            coords,
        }
    }

    /// All maximal minors nonzero.
    pub fn is_generic(&self) -> bool {
        self.plucker().coords.values().all(|v| !v.is_zero())
    }

    pub fn matroid_bases(&self) -> BTreeSet<Subset> {
        self.plucker().support()
    }

    /// `L ∩ {x_i = 0}` with coordinate `i` removed, a subspace of `Q^(n-1)`
    /// of dimension `k - 1`.
    pub fn intersect_coord_hyperplane(&self, i: usize) -> Result<Subspace> {
        self.check_index(i)?;
        let col = self.matrix.column(i);
        if self.k == 1 || col.iter().all(|v| v.is_zero()) {
            return Err(Error::DimensionDrop);
        }
        // row combinations with zero i-th coordinate
        let coeffs = RationalMatrix::new(1, self.k, col)?.kernel_basis();
        let combos = coeffs.mul(&self.matrix)?;
        let reduced = combos.delete_column(i);
        if reduced.rank() != self.k - 1 {
            return Err(Error::DimensionDrop);
        }
        Subspace::new(reduced)
    }

    /// Image under the coordinate projection forgetting `x_i`.
    pub fn project_away(&self, i: usize) -> Result<Subspace> {
        self.check_index(i)?;
        let reduced = self.matrix.delete_column(i);
        if reduced.rank() != self.k || self.k >= self.n - 1 {
            return Err(Error::DimensionDrop);
        }
        Subspace::new(reduced)
    }

    /// The columns as `n` points of `P^(k-1)`.
    pub fn gm_configuration(&self) -> Result<Configuration> {
        Configuration::new(self.matrix.clone())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange(format!("coordinate {} of {}", i + 1, self.n)));
        }
        Ok(())
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.canonical() == other.canonical()
    }
}

impl Eq for Subspace {}

/// Plücker coordinates `p_I`, one per `k`-subset in lexicographic order,
/// minors taken on increasing columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckerVector {
    pub k: usize,
    pub n: usize,
    pub coords: BTreeMap<Subset, Rational>,
}

impl PluckerVector {
    /// Builds a vector from explicit coordinates; missing subsets are zero.
    pub fn new(k: usize, n: usize, coords: BTreeMap<Subset, Rational>) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::BadParams(format!("need 1 <= k < n, got k={k}, n={n}")));
        }
        let mut full = BTreeMap::new();
        for s in k_subsets(n, k) {
            full.insert(s, Rational::zero());
        }
        for (s, v) in coords {
            match full.get_mut(&s) {
                Some(slot) => *slot = v,
                None => return Err(Error::IndexOutOfRange(format!("subset {s:?}"))),
            }
        }
        if full.values().all(|v| v.is_zero()) {
            return Err(Error::BadParams("all Plücker coordinates vanish".into()));
        }
        Ok(PluckerVector { k, n, coords: full })
    }

    pub fn get(&self, subset: &[usize]) -> Rational {
        self.coords.get(subset).cloned().unwrap_or_else(Rational::zero)
    }

    /// `p` of an arbitrary index sequence, antisymmetric in its entries.
    pub fn signed(&self, seq: &[usize]) -> Rational {
        let s = sort_sign(seq);
        if s == 0 {
            return Rational::zero();
        }
        let mut sorted = seq.to_vec();
        sorted.sort_unstable();
        let v = self.get(&sorted);
        if s < 0 {
            -v
        } else {
            v
        }
    }

    pub fn support(&self) -> BTreeSet<Subset> {
        self.coords
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(s, _)| s.clone())
            .collect()
    }

    /// The quadratic Grassmann–Plücker relations
    /// `sum_l (-1)^l p(I, j_l) p(J - j_l) = 0` for `|I| = k-1`, `|J| = k+1`.
    pub fn satisfies_plucker_relations(&self) -> bool {
        for small in k_subsets(self.n, self.k - 1) {
            for big in k_subsets(self.n, self.k + 1) {
                let mut total = Rational::zero();
                for (l, &j) in big.iter().enumerate() {
                    let mut left = small.clone();
                    left.push(j);
                    let right: Vec<usize> = big.iter().copied().filter(|&x| x != j).collect();
                    let term = self.signed(&left) * self.signed(&right);
                    if l % 2 == 0 {
                        total += term;
                    } else {
                        total -= term;
                    }
                }
                if !total.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_proportional(&self, other: &PluckerVector) -> bool {
        if self.k != other.k || self.n != other.n {
            return false;
        }
        let Some((s, a)) = self.coords.iter().find(|(_, v)| !v.is_zero()) else {
            return false;
        };
        let b = other.get(s);
        if b.is_zero() {
            return false;
        }
        self.coords
            .iter()
            .all(|(t, v)| v * &b == other.get(t) * a)
    }

    /// A matrix whose row space has these coordinates. The rows are the
    /// expansion in the chart of the first nonzero coordinate.
    pub fn to_subspace(&self) -> Result<Subspace> {
        let (base, pb) = self
            .coords
            .iter()
            .find(|(_, v)| !v.is_zero())
            .map(|(s, v)| (s.clone(), v.clone()))
            .ok_or_else(|| Error::BadParams("all Plücker coordinates vanish".into()))?;
        let mut m = RationalMatrix::zeros(self.k, self.n);
        for r in 0..self.k {
            for c in 0..self.n {
                let mut seq = base.clone();
                seq[r] = c;
                m.set(r, c, self.signed(&seq) / &pb);
            }
        }
        let s = Subspace::new(m)?;
        if !s.plucker().is_proportional(self) {
            return Err(Error::BadParams("coordinates violate the Plücker relations".into()));
        }
        Ok(s)
    }

    pub fn scale(&self, c: &Rational) -> PluckerVector {
        PluckerVector {
            k: self.k,
            n: self.n,
            coords: self.coords.iter().map(|(s, v)| (s.clone(), v * c)).collect(),
        }
    }
}

/// Bases of the contraction `M / i`, relabeled to `0..n-1`.
pub fn matroid_contraction(bases: &BTreeSet<Subset>, i: usize) -> BTreeSet<Subset> {
    bases
        .iter()
        .filter(|b| b.contains(&i))
        .map(|b| relabel_without(b, i))
        .collect()
}

/// Bases of the deletion `M \ i`, relabeled to `0..n-1`.
pub fn matroid_deletion(bases: &BTreeSet<Subset>, i: usize) -> BTreeSet<Subset> {
    bases
        .iter()
        .filter(|b| !b.contains(&i))
        .map(|b| relabel_without(b, i))
        .collect()
}

fn relabel_without(b: &[usize], i: usize) -> Subset {
    b.iter()
        .filter(|&&x| x != i)
        .map(|&x| if x > i { x - 1 } else { x })
        .collect()
}
