//! Special Veronese varieties in Grassmannians: the logarithmic Gauss map
//! of a hyperplane arrangement, its Plücker polynomials, the Steiner
//! matrix, the determinantal equations of the sweep, and the tetrahedral
//! parameter of a line in `P^3`.
//!
//! A Gauss image is carried as a `k x n` [`Subspace`] whose row space
//! contains `(1, ..., 1)`; its image in `h = C^n / C(1, ..., 1)` is the
//! `(k-1)`-dimensional subspace of interest.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::combin::{k_subsets, Subset};
use crate::error::{Error, Result};
use crate::exact::poly::{eval_matrix, monomials_of_degree};
use crate::exact::{rat, MultiPoly, Rational, RationalMatrix};
use crate::grassmann::{PluckerVector, Subspace};

/// `n` linear forms `f_i(z) = sum_j a_ij z_j` on `C^k`, the rows of an
/// `n x k` matrix, every `k` of them independent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneArrangement {
    forms: RationalMatrix,
}

impl HyperplaneArrangement {
    pub fn new(forms: RationalMatrix) -> Result<Self> {
        let (n, k) = (forms.rows(), forms.cols());
        if k == 0 || n <= k {
            return Err(Error::BadParams(format!("need 1 <= k < n, got k = {k}, n = {n}")));
        }
        let all: Vec<usize> = (0..k).collect();
        for s in k_subsets(n, k) {
            if forms.minor(&s, &all)?.is_zero() {
                return Err(Error::NotGeneric);
            }
        }
        Ok(HyperplaneArrangement { forms })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(RationalMatrix::from_i64(rows))
    }

    pub fn k(&self) -> usize {
        self.forms.cols()
    }

    pub fn n(&self) -> usize {
        self.forms.rows()
    }

    pub fn forms(&self) -> &RationalMatrix {
        &self.forms
    }

    pub fn form(&self, i: usize) -> MultiPoly {
        MultiPoly::linear(self.forms.row(i))
    }

    pub fn eval_form(&self, i: usize, z: &[Rational]) -> Rational {
        self.forms.row(i).iter().zip(z).map(|(a, x)| a * x).sum()
    }

    /// The arrangement `f_i o g^{-1}`, i.e. forms matrix `A g^{-1}`.
    pub fn transform(&self, g: &RationalMatrix) -> Result<Self> {
        let inv = g.inverse().ok_or(Error::RankDeficient)?;
        Self::new(self.forms.mul(&inv)?)
    }

    /// The first `k` forms are the coordinates `z_1, ..., z_k`.
    pub fn is_normalized(&self) -> bool {
        let k = self.k();
        (0..k).all(|i| (0..k).all(|j| self.forms.get(i, j) == &rat((i == j) as i64)))
    }

    /// The first `k-1` forms are `z_1, ..., z_{k-1}` and the last is `z_k`.
    pub fn is_chart_form(&self) -> bool {
        let k = self.k();
        let unit = |row: usize, c: usize| (0..k).all(|j| self.forms.get(row, j) == &rat((j == c) as i64));
        (0..k - 1).all(|i| unit(i, i)) && unit(self.n() - 1, k - 1)
    }

    fn check_point(&self, z: &[Rational]) -> Result<()> {
        if z.len() != self.k() {
            return Err(Error::SizeMismatch(format!("point has {} coordinates, need {}", z.len(), self.k())));
        }
        if z.iter().all(|x| x.is_zero()) {
            return Err(Error::BadParams("zero vector is not a point".into()));
        }
        Ok(())
    }
}

/// The Jacobian `N(z)`, `k x n`, with entry `(j, i) = a_ij / f_i(z)`.
pub fn gauss_matrix(arr: &HyperplaneArrangement, z: &[Rational]) -> Result<RationalMatrix> {
    arr.check_point(z)?;
    let (k, n) = (arr.k(), arr.n());
    let mut m = RationalMatrix::zeros(k, n);
    for i in 0..n {
        let f = arr.eval_form(i, z);
        if f.is_zero() {
            return Err(Error::OnArrangement(i));
        }
        for j in 0..k {
            m.set(j, i, arr.forms.get(i, j) / &f);
        }
    }
    Ok(m)
}

/// The logarithmic Gauss map at `z`, off the arrangement.
pub fn log_gauss(arr: &HyperplaneArrangement, z: &[Rational]) -> Result<Subspace> {
    Subspace::new(gauss_matrix(arr, z)?)
}

/// Whether `(1, ..., 1)` lies in the row space.
pub fn contains_ones(s: &Subspace) -> bool {
    let ones = RationalMatrix::new(1, s.n(), vec![Rational::one(); s.n()]).expect("shape matches");
    s.matrix().vstack(&ones).map(|m| m.rank() == s.k()).unwrap_or(false)
}

/// `P_I(z) = det(a_I) * prod_{i not in I} f_i(z)` for every `k`-subset `I`.
/// At a point off the arrangement these are the Plücker coordinates of the
/// Gauss image multiplied by `prod_i f_i(z)`.
pub fn plucker_polys(arr: &HyperplaneArrangement) -> BTreeMap<Subset, MultiPoly> {
    let (k, n) = (arr.k(), arr.n());
    let all: Vec<usize> = (0..k).collect();
    let forms: Vec<MultiPoly> = (0..n).map(|i| arr.form(i)).collect();
    k_subsets(n, k)
        .into_iter()
        .map(|s| {
            let minor = arr.forms.minor(&s, &all).expect("indices in range");
            let mut p = MultiPoly::constant(k, minor);
            for (i, f) in forms.iter().enumerate() {
                if !s.contains(&i) {
                    p = &p * f;
                }
            }
            (s, p)
        })
        .collect()
}

/// Values of the Plücker polynomials at `z`, or `None` if they all vanish.
pub fn eval_plucker_polys(polys: &BTreeMap<Subset, MultiPoly>, k: usize, n: usize, z: &[Rational]) -> Option<PluckerVector> {
    let coords = polys.iter().map(|(s, p)| (s.clone(), p.eval(z))).collect();
    PluckerVector::new(k, n, coords).ok()
}

/// Coefficient matrix of the Plücker polynomials in the monomial basis of
/// degree `n-k`, one row per polynomial.
pub fn plucker_coefficient_matrix(arr: &HyperplaneArrangement) -> RationalMatrix {
    let (k, n) = (arr.k(), arr.n());
    let monomials = monomials_of_degree(k, (n - k) as u32);
    let rows: Vec<Vec<Rational>> = plucker_polys(arr)
        .values()
        .map(|p| p.coefficient_vector(&monomials))
        .collect();
    RationalMatrix::from_rows(rows, monomials.len()).expect("rectangular")
}

/// Linear span dimension of the Plücker polynomials.
pub fn plucker_span_rank(arr: &HyperplaneArrangement) -> usize {
    plucker_coefficient_matrix(arr).rank()
}

/// The point `<e, e_{i_1}, ..., e_{i_{k-1}}>` that the Gauss map takes at
/// `M_{i_1} ∩ ... ∩ M_{i_{k-1}}`, computed from the Plücker polynomials.
pub fn marked_point(arr: &HyperplaneArrangement, indices: &[usize]) -> Result<Subspace> {
    let (k, n) = (arr.k(), arr.n());
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if indices.len() + 1 != k || sorted.len() != indices.len() || sorted.iter().any(|&i| i >= n) {
        return Err(Error::BadIndices);
    }
    let z = if indices.is_empty() {
        vec![Rational::one(); k]
    } else {
        arr.forms.select_rows(&sorted).kernel_basis().row(0).to_vec()
    };
    let p = eval_plucker_polys(&plucker_polys(arr), k, n, &z).ok_or(Error::NotGeneric)?;
    p.to_subspace()
}

/// `span(e, e_{i_1}, ..., e_{i_{k-1}})` in `C^n`.
pub fn coordinate_subspace_with_ones(n: usize, indices: &[usize]) -> Result<Subspace> {
    let mut m = RationalMatrix::zeros(indices.len() + 1, n);
    for c in 0..n {
        m.set(0, c, Rational::one());
    }
    for (r, &i) in indices.iter().enumerate() {
        if i >= n {
            return Err(Error::IndexOutOfRange(format!("{i}")));
        }
        m.set(r + 1, i, Rational::one());
    }
    Subspace::new(m)
}

/// The `(n-k) x (n-1)` matrix of linear forms in `z_1, ..., z_k` whose
/// kernel at `z` is the Gauss image in the coordinates `y_i = t_i - t_n`.
/// Row `j` (for the form `F_j`, `j = k, ..., n-1`, 1-based) has
/// `-a_{j,v} z_v` in columns `v < k` and `F_j(z)` in column `j`.
pub fn steiner_matrix(arr: &HyperplaneArrangement) -> Result<Vec<Vec<MultiPoly>>> {
    let (k, n) = (arr.k(), arr.n());
    if n < k + 1 || !arr.is_chart_form() {
        return Err(Error::ChartMismatch);
    }
    let rows = (k - 1..n - 1)
        .map(|j| {
            let mut row = vec![MultiPoly::zero(k); n - 1];
            for (v, entry) in row.iter_mut().enumerate().take(k - 1) {
                *entry = MultiPoly::var(k, v).scale(&-arr.forms.get(j, v));
            }
            row[j] = arr.form(j);
            row
        })
        .collect();
    Ok(rows)
}

/// The Steiner matrix evaluated at `z`.
pub fn steiner_at(arr: &HyperplaneArrangement, z: &[Rational]) -> Result<RationalMatrix> {
    arr.check_point(z)?;
    Ok(eval_matrix(&steiner_matrix(arr)?, z))
}

/// A Gauss image (containing `(1, ..., 1)`) in the coordinates
/// `y_i = t_i - t_n` of `h`; its rows span a `(k-1)`-dimensional space.
pub fn to_y_chart(s: &Subspace) -> RationalMatrix {
    let n = s.n();
    let rows: Vec<Vec<Rational>> = s
        .matrix()
        .row_vecs()
        .into_iter()
        .map(|r| (0..n - 1).map(|i| &r[i] - &r[n - 1]).collect())
        .collect();
    let m = RationalMatrix::from_rows(rows, n - 1).expect("rectangular");
    m.rref()
}

/// `A†(t)`, the `k x (n-k)` matrix with entry `(i, j) = a_{j,i} (t_j - t_i)`
/// for `i < k <= j`.
pub fn sweep_matrix(arr: &HyperplaneArrangement, t: &[Rational]) -> Result<RationalMatrix> {
    let (k, n) = (arr.k(), arr.n());
    if k > n - k {
        return Err(Error::BadParams(format!("sweep equations need k <= n - k, got k = {k}, n = {n}")));
    }
    if !arr.is_normalized() {
        return Err(Error::NotNormalized);
    }
    if t.len() != n {
        return Err(Error::SizeMismatch(format!("point has {} coordinates, need {n}", t.len())));
    }
    let mut m = RationalMatrix::zeros(k, n - k);
    for i in 0..k {
        for j in k..n {
            m.set(i, j - k, arr.forms.get(j, i) * (&t[j] - &t[i]));
        }
    }
    Ok(m)
}

/// Whether `t` lies on the sweep: all `k x k` minors of `A†(t)` vanish.
pub fn on_sweep(arr: &HyperplaneArrangement, t: &[Rational]) -> Result<bool> {
    Ok(sweep_matrix(arr, t)?.rank() < arr.k())
}

/// The `4 x 6` linear system in `t_1, ..., t_6`:
/// `t2-t4 = a(t2-t5) = b(t2-t6)`, `t3-t4 = c(t3-t5) = d(t3-t6)`.
pub fn tangent_system(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> RationalMatrix {
    let one = Rational::one();
    let zero = Rational::zero();
    let rows = vec![
        vec![zero.clone(), &one - a, zero.clone(), -&one, a.clone(), zero.clone()],
        vec![zero.clone(), a - b, zero.clone(), zero.clone(), -a, b.clone()],
        vec![zero.clone(), zero.clone(), &one - c, -&one, c.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), c - d, zero.clone(), -c, d.clone()],
    ];
    RationalMatrix::from_rows(rows, 6).expect("4 x 6")
}

/// The same system with `a, b, c, d` as the variables `x1, ..., x4`.
pub fn tangent_system_symbolic() -> Vec<Vec<MultiPoly>> {
    let v = |i| MultiPoly::var(4, i);
    let c = |x: i64| MultiPoly::constant(4, rat(x));
    let (a, b, cc, d) = (v(0), v(1), v(2), v(3));
    vec![
        vec![c(0), &c(1) - &a, c(0), c(-1), a.clone(), c(0)],
        vec![c(0), &a - &b, c(0), c(0), -&a, b.clone()],
        vec![c(0), c(0), &c(1) - &cc, c(-1), cc.clone(), c(0)],
        vec![c(0), c(0), &cc - &d, c(0), -&cc, d.clone()],
    ]
}

/// `Ψ(a, b, c, d) = ad - bc + abc + bcd - acd - abd` as a polynomial.
pub fn psi_poly() -> MultiPoly {
    MultiPoly::parse("x1*x4 - x2*x3 + x1*x2*x3 + x2*x3*x4 - x1*x3*x4 - x1*x2*x4", 4).expect("valid polynomial")
}

pub fn tangent_system_rank(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> usize {
    tangent_system(a, b, c, d).rank()
}

/// `λ = -p12 p34 / (p13 p24)`: the line lies in the tetrahedral complex
/// `p12 p34 + λ p13 p24 = 0`.
pub fn tetrahedral_ratio(s: &Subspace) -> Result<Rational> {
    if s.k() != 2 || s.n() != 4 {
        return Err(Error::SizeMismatch(format!("need a line in P^3, got G({}, {})", s.k(), s.n())));
    }
    if !s.is_generic() {
        return Err(Error::NotGeneric);
    }
    let p = s.plucker();
    Ok(-(p.get(&[0, 1]) * p.get(&[2, 3])) / (p.get(&[0, 2]) * p.get(&[1, 3])))
}

/// The four points where a line in `P^3` meets the coordinate planes, in
/// coordinates of the line's own basis.
pub fn coordinate_plane_points(s: &Subspace) -> Result<Vec<Vec<Rational>>> {
    if s.k() != 2 {
        return Err(Error::SizeMismatch("need a line".into()));
    }
    let m = s.matrix();
    Ok((0..s.n()).map(|i| vec![m.get(1, i).clone(), -m.get(0, i)]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configurations::{cross_ratio, projectively_equivalent, Configuration};
    use crate::exact::poly_det;
    use crate::exact::ratio;
    use crate::sample;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn random_arrangement(rng: &mut sample::SampleRng, k: usize, n: usize) -> HyperplaneArrangement {
        loop {
            if let Ok(a) = HyperplaneArrangement::new(sample::matrix(rng, n, k, 5)) {
                return a;
            }
        }
    }

    /// Identity on top of random rows, so the first `k` forms are coordinates.
    fn random_normalized(rng: &mut sample::SampleRng, k: usize, n: usize) -> HyperplaneArrangement {
        loop {
            let tail = sample::matrix(rng, n - k, k, 5);
            if let Ok(a) = HyperplaneArrangement::new(RationalMatrix::identity(k).vstack(&tail).unwrap()) {
                return a;
            }
        }
    }

    fn random_chart(rng: &mut sample::SampleRng, k: usize, n: usize) -> HyperplaneArrangement {
        loop {
            let id = RationalMatrix::identity(k);
            let head = id.select_rows(&(0..k - 1).collect::<Vec<_>>());
            let mid = sample::matrix(rng, n - k, k, 5);
            let last = id.select_rows(&[k - 1]);
            let forms = head.vstack(&mid).unwrap().vstack(&last).unwrap();
            if let Ok(a) = HyperplaneArrangement::new(forms) {
                return a;
            }
        }
    }

    fn regular_point(rng: &mut sample::SampleRng, arr: &HyperplaneArrangement) -> Vec<Rational> {
        loop {
            let z: Vec<Rational> = (0..arr.k()).map(|_| sample::rational(rng, 7)).collect();
            if (0..arr.n()).all(|i| !arr.eval_form(i, &z).is_zero()) {
                return z;
            }
        }
    }

    #[test]
    fn gauss_example() {
        let arr = HyperplaneArrangement::from_i64(&[&[1, 0], &[0, 1], &[1, 1], &[1, 2]]).unwrap();
        let z = q(&[1, 1]);
        let n = gauss_matrix(&arr, &z).unwrap();
        assert_eq!(n.row(0), &[rat(1), rat(0), ratio(1, 2), ratio(1, 3)]);
        assert_eq!(n.row(1), &[rat(0), rat(1), ratio(1, 2), ratio(2, 3)]);
        let s = log_gauss(&arr, &z).unwrap();
        assert!(contains_ones(&s));
        assert_eq!(log_gauss(&arr, &q(&[1, -1])), Err(Error::OnArrangement(2)));
    }

    #[test]
    fn k_one_is_constant() {
        let arr = HyperplaneArrangement::from_i64(&[&[2], &[3], &[-1]]).unwrap();
        let s = log_gauss(&arr, &q(&[5])).unwrap();
        assert_eq!(s, coordinate_subspace_with_ones(3, &[]).unwrap());
        assert_eq!(marked_point(&arr, &[]).unwrap(), s);
    }

    #[test]
    fn euler_identity_and_equivariance() {
        let mut rng = sample::rng(11);
        for (k, n) in [(2, 5), (3, 6), (3, 7)] {
            let arr = random_arrangement(&mut rng, k, n);
            let z = regular_point(&mut rng, &arr);
            let nz = gauss_matrix(&arr, &z).unwrap();
            assert_eq!(nz.transpose().mul_vec(&z), vec![rat(1); n]);

            let g = sample::invertible_matrix(&mut rng, k);
            let moved = arr.transform(&g).unwrap();
            let gz = g.mul_vec(&z);
            assert_eq!(log_gauss(&arr, &z).unwrap(), log_gauss(&moved, &gz).unwrap());
        }
    }

    #[test]
    fn plucker_polys_match_gauss_minors() {
        let mut rng = sample::rng(12);
        for (k, n) in [(2, 4), (2, 5), (3, 6)] {
            let arr = random_arrangement(&mut rng, k, n);
            let polys = plucker_polys(&arr);
            for p in polys.values() {
                assert!(p.is_homogeneous());
                assert_eq!(p.total_degree(), Some((n - k) as u32));
            }
            for _ in 0..5 {
                let z = regular_point(&mut rng, &arr);
                let numeric = log_gauss(&arr, &z).unwrap().plucker();
                let symbolic = eval_plucker_polys(&polys, k, n, &z).unwrap();
                assert!(numeric.is_proportional(&symbolic));
            }
        }
    }

    #[test]
    fn plucker_polys_are_scaled_jacobian_minors() {
        // columns a_i * prod_{l != i} f_l; each k-minor is (prod f)^(k-1) P_I
        let mut rng = sample::rng(13);
        for (k, n) in [(2, 4), (3, 5), (3, 6)] {
            let arr = random_arrangement(&mut rng, k, n);
            let forms: Vec<MultiPoly> = (0..n).map(|i| arr.form(i)).collect();
            let product = forms.iter().fold(MultiPoly::one(k), |acc, f| &acc * f);
            let columns: Vec<Vec<MultiPoly>> = (0..n)
                .map(|i| {
                    let others = product.div_exact(&forms[i]).unwrap();
                    (0..k).map(|j| others.scale(arr.forms().get(i, j))).collect()
                })
                .collect();
            let power = product.pow(k as u32 - 1);
            for (s, p) in plucker_polys(&arr) {
                let m: Vec<Vec<MultiPoly>> =
                    (0..k).map(|j| s.iter().map(|&i| columns[i][j].clone()).collect()).collect();
                let minor = poly_det(&m).unwrap();
                assert_eq!(minor.div_exact(&power).unwrap(), p);
            }
        }
    }

    #[test]
    fn plucker_polys_factor_and_vanish() {
        let mut rng = sample::rng(14);
        let arr = random_arrangement(&mut rng, 3, 6);
        for (s, p) in plucker_polys(&arr) {
            let mut rest = p.clone();
            for j in (0..6).filter(|j| !s.contains(j)) {
                rest = rest.div_exact(&arr.form(j)).expect("f_j divides P_I for j outside I");
            }
            assert_eq!(rest.total_degree(), Some(0));
        }
    }

    #[test]
    fn span_rank_is_binomial() {
        let mut rng = sample::rng(15);
        for (k, n) in [(2, 5), (2, 6), (3, 6), (3, 7), (4, 8)] {
            let arr = random_arrangement(&mut rng, k, n);
            let expected = crate::combin::binomial(n as u64 - 1, k as u64 - 1) as usize;
            assert_eq!(plucker_span_rank(&arr), expected, "k={k} n={n}");
        }
    }

    #[test]
    fn marked_points() {
        let mut rng = sample::rng(16);
        for (k, n) in [(2, 5), (3, 6)] {
            let arr = random_arrangement(&mut rng, k, n);
            for idx in k_subsets(n, k - 1) {
                assert_eq!(marked_point(&arr, &idx).unwrap(), coordinate_subspace_with_ones(n, &idx).unwrap());
            }
        }
        let arr = random_arrangement(&mut rng, 3, 6);
        assert_eq!(marked_point(&arr, &[1, 1]), Err(Error::BadIndices));
    }

    #[test]
    fn steiner_kernel_is_gauss_image() {
        let mut rng = sample::rng(17);
        for (k, n) in [(2, 5), (3, 6), (3, 7)] {
            let arr = random_chart(&mut rng, k, n);
            for _ in 0..5 {
                let z = regular_point(&mut rng, &arr);
                let a = steiner_at(&arr, &z).unwrap();
                assert_eq!((a.rows(), a.cols()), (n - k, n - 1));
                let kernel = a.kernel_basis();
                assert_eq!(kernel.rows(), k - 1);
                assert_eq!(kernel.rref(), to_y_chart(&log_gauss(&arr, &z).unwrap()));
            }
            // on M_j the diagonal entry of row j vanishes
            let j = k - 1;
            let mut z = arr.forms().row(j).to_vec();
            z.swap(0, 1);
            z[0] = -z[0].clone();
            if arr.eval_form(j, &z).is_zero() && !z.iter().all(|x| x.is_zero()) {
                assert!(steiner_at(&arr, &z).unwrap().get(0, j).is_zero());
            }
        }
        let arr = random_arrangement(&mut rng, 3, 6);
        if !arr.is_chart_form() {
            assert_eq!(steiner_matrix(&arr).err(), Some(Error::ChartMismatch));
        }
    }

    #[test]
    fn sweep_equations() {
        let mut rng = sample::rng(18);
        for (k, n) in [(2, 4), (2, 5), (3, 6), (3, 7)] {
            let arr = random_normalized(&mut rng, k, n);
            for i in 0..n {
                let mut e = vec![rat(0); n];
                e[i] = rat(1);
                assert_eq!(sweep_matrix(&arr, &e).unwrap().rank(), 1);
            }
            assert!(sweep_matrix(&arr, &vec![rat(1); n]).unwrap().is_zero());
            for _ in 0..5 {
                let z = regular_point(&mut rng, &arr);
                let g = gauss_matrix(&arr, &z).unwrap();
                let c: Vec<Rational> = (0..k).map(|_| sample::rational(&mut rng, 5)).collect();
                let t = g.transpose().mul_vec(&c);
                assert!(on_sweep(&arr, &t).unwrap());
            }
            // a random point of h is off the sweep once the sweep is a proper subvariety
            if k < n - k {
                let t: Vec<Rational> = (0..n).map(|_| sample::rational(&mut rng, 9)).collect();
                assert!(!on_sweep(&arr, &t).unwrap());
            }
        }
        let arr = random_arrangement(&mut rng, 2, 5);
        if !arr.is_normalized() {
            assert_eq!(sweep_matrix(&arr, &vec![rat(0); 5]).err(), Some(Error::NotNormalized));
        }
    }

    #[test]
    fn sweep_basis_points_recover_configurations() {
        let mut rng = sample::rng(19);
        let (k, n) = (3, 6);
        let arr = random_normalized(&mut rng, k, n);
        let mut kernels = Vec::new();
        let mut images = Vec::new();
        for i in 0..n {
            let mut e = vec![rat(0); n];
            e[i] = rat(1);
            let m = sweep_matrix(&arr, &e).unwrap();
            // A†(e_i) as a map C^k -> C^{n-k} is the transpose
            let op = m.transpose();
            let left = op.transpose().kernel_basis().transpose();
            assert_eq!(left.cols(), n - k - 1);
            let nonzero_col = (0..k).find(|&c| !op.column(c).iter().all(|x| x.is_zero())).unwrap();
            images.push(op.column(nonzero_col));
            let ker = op.kernel_basis();
            assert_eq!(ker.rows(), k - 1);
            // the hyperplane Ker A†(e_i) is the zero set of f_i
            let normal = ker.kernel_basis();
            kernels.push(normal.row(0).to_vec());
        }
        let original = Configuration::new(arr.forms().transpose()).unwrap();
        let from_kernels = Configuration::new(RationalMatrix::from_columns(&kernels, k).unwrap()).unwrap();
        assert!(projectively_equivalent(&original, &from_kernels));
        let from_images = Configuration::new(RationalMatrix::from_columns(&images, n - k).unwrap()).unwrap();
        assert!(projectively_equivalent(&original.associate().unwrap(), &from_images));
    }

    #[test]
    fn tangent_minors_are_psi() {
        let m = tangent_system_symbolic();
        let psi = psi_poly();
        let neg = -&psi;
        for cols in k_subsets(6, 4) {
            let sub: Vec<Vec<MultiPoly>> = m.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
            let minor = poly_det(&sub).unwrap();
            if cols.contains(&0) {
                assert!(minor.is_zero());
            } else {
                assert!(minor == psi || minor == neg, "{cols:?}: {minor}");
            }
        }
        let (a, b, c, d) = (rat(2), rat(3), rat(5), rat(7));
        assert_eq!(psi.eval(&[a.clone(), b.clone(), c.clone(), d.clone()]), crate::configurations::psi(&a, &b, &c, &d));
    }

    #[test]
    fn tangent_rank_dichotomy() {
        let mut rng = sample::rng(20);
        for _ in 0..10 {
            let v: Vec<Rational> = (0..4).map(|_| sample::rational(&mut rng, 9)).collect();
            let psi = crate::configurations::psi(&v[0], &v[1], &v[2], &v[3]);
            let r = tangent_system_rank(&v[0], &v[1], &v[2], &v[3]);
            assert_eq!(r == 4, !psi.is_zero());
        }
        for _ in 0..5 {
            let x = sample::points_on_conic(&mut rng, 6);
            let [a, b, c, d] = crate::configurations::six_point_normal_form(&x).unwrap();
            assert!(crate::configurations::psi(&a, &b, &c, &d).is_zero());
            assert!(tangent_system_rank(&a, &b, &c, &d) <= 3);
        }
    }

    #[test]
    fn tetrahedral_ratio_is_torus_invariant() {
        let mut rng = sample::rng(21);
        for _ in 0..10 {
            let s = sample::generic_subspace(&mut rng, 2, 4);
            let lambda = tetrahedral_ratio(&s).unwrap();
            for _ in 0..10 {
                let mut m = s.matrix().clone();
                for c in 0..4 {
                    m.scale_column(c, &sample::nonzero_rational(&mut rng, 6));
                }
                assert_eq!(tetrahedral_ratio(&Subspace::new(m).unwrap()).unwrap(), lambda);
            }
        }
        let degenerate = Subspace::from_i64(&[&[1, 0, 1, 0], &[0, 1, 0, 1]]).unwrap();
        assert_eq!(tetrahedral_ratio(&degenerate), Err(Error::NotGeneric));
    }

    #[test]
    fn tetrahedral_ratio_is_mobius_in_cross_ratio() {
        let mut rng = sample::rng(22);
        let sample_pair = |rng: &mut sample::SampleRng| {
            let s = sample::generic_subspace(rng, 2, 4);
            let pts = coordinate_plane_points(&s).unwrap();
            let r = cross_ratio([&pts[0], &pts[1], &pts[2], &pts[3]]).unwrap();
            (r, tetrahedral_ratio(&s).unwrap())
        };
        // fit λ (γ r + δ) = α r + β on 20 samples
        let fit: Vec<(Rational, Rational)> = (0..20).map(|_| sample_pair(&mut rng)).collect();
        let rows: Vec<Vec<Rational>> = fit
            .iter()
            .map(|(r, l)| vec![r.clone(), rat(1), -(l * r), -l.clone()])
            .collect();
        let kernel = RationalMatrix::from_rows(rows, 4).unwrap().kernel_basis();
        assert_eq!(kernel.rows(), 1);
        let coef = kernel.row(0).to_vec();
        assert!(!(&coef[0] * &coef[3] - &coef[1] * &coef[2]).is_zero());
        for _ in 0..20 {
            let (r, l) = sample_pair(&mut rng);
            assert_eq!(l * (&coef[2] * &r + &coef[3]), &coef[0] * &r + &coef[1]);
        }
    }

    #[test]
    fn boundary_complexes() {
        // p14 = 0, p12 p34 = 0, p13 p24 = 0 in turn; the relation
        // p12 p34 - p13 p24 + p14 p23 = 0 forces the three special values
        let on_z14 = Subspace::from_i64(&[&[1, 0, 2, 3], &[0, 1, 1, 0]]).unwrap().plucker();
        assert!(on_z14.get(&[0, 3]).is_zero());
        assert_eq!(-(on_z14.get(&[0, 1]) * on_z14.get(&[2, 3])) / (on_z14.get(&[0, 2]) * on_z14.get(&[1, 3])), rat(-1));
        let on_z12 = Subspace::from_i64(&[&[1, 0, 1, 1], &[0, 0, 1, 2]]).unwrap().plucker();
        assert!((on_z12.get(&[0, 1]) * on_z12.get(&[2, 3])).is_zero());
        let on_z13 = Subspace::from_i64(&[&[1, 1, 0, 1], &[0, 1, 0, 2]]).unwrap().plucker();
        assert!((on_z13.get(&[0, 2]) * on_z13.get(&[1, 3])).is_zero());
    }
}
