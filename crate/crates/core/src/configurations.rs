//! Ordered configurations of `n` points in `P^(k-1)`, stored as the columns
//! of a `k x n` matrix.

use std::collections::{BTreeSet, VecDeque};

use num_traits::{One, Zero};

use crate::combin::{complement, k_subsets, sort_sign, Subset};
use crate::error::{Error, Result};
use crate::exact::rational::primitive_integer_vector;
use crate::exact::{rat, Rational, RationalMatrix};
use crate::grassmann::Subspace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    k: usize,
    n: usize,
    matrix: RationalMatrix,
}

impl Configuration {
    /// Every column must be nonzero.
    pub fn new(matrix: RationalMatrix) -> Result<Self> {
        let (k, n) = (matrix.rows(), matrix.cols());
        if k == 0 {
            return Err(Error::BadParams("points need at least one coordinate".into()));
        }
        if let Some(c) = (0..n).find(|&c| matrix.column(c).iter().all(|v| v.is_zero())) {
            return Err(Error::ZeroColumn(c));
        }
        Ok(Configuration { k, n, matrix })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(RationalMatrix::from_i64(rows))
    }

    /// Builds the matrix from homogeneous coordinate vectors.
    pub fn from_points(points: &[Vec<Rational>]) -> Result<Self> {
        let k = points.first().map_or(0, |p| p.len());
        if points.iter().any(|p| p.len() != k) {
            return Err(Error::SizeMismatch("points of different dimensions".into()));
        }
        Self::new(RationalMatrix::from_columns(points, k)?)
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

    pub fn point(&self, i: usize) -> Vec<Rational> {
        self.matrix.column(i)
    }

    pub fn points(&self) -> Vec<Vec<Rational>> {
        (0..self.n).map(|i| self.point(i)).collect()
    }

    /// The row space, a point of `G(k, n)`.
    pub fn row_space(&self) -> Result<Subspace> {
        Subspace::new(self.matrix.clone())
    }

    fn maximal_minor(&self, cols: &[usize]) -> Rational {
        let rows: Vec<usize> = (0..self.k).collect();
        self.matrix.minor(&rows, cols).expect("indices in range")
    }

    /// `k`-subsets of points that span `P^(k-1)`.
    pub fn matroid(&self) -> BTreeSet<Subset> {
        k_subsets(self.n, self.k)
            .into_iter()
            .filter(|s| !self.maximal_minor(s).is_zero())
            .collect()
    }

    /// Any `j <= k` of the points span a `P^(j-1)`. For `n >= k` this is
    /// the same as all maximal minors being nonzero.
    pub fn is_general_position(&self) -> bool {
        if self.n >= self.k {
            k_subsets(self.n, self.k)
                .iter()
                .all(|s| !self.maximal_minor(s).is_zero())
        } else {
            self.matrix.rank() == self.n
        }
    }

    /// The associated configuration of `n` points in `P^(n-k-1)`: columns of
    /// a basis of the linear relations among the points.
    pub fn associate(&self) -> Result<Configuration> {
        if self.n < self.k + 2 || !self.is_general_position() {
            return Err(Error::NotGeneric);
        }
        Configuration::new(self.matrix.kernel_basis())
    }

    pub fn scale_points(&self, factors: &[Rational]) -> Result<Configuration> {
        if factors.len() != self.n || factors.iter().any(|f| f.is_zero()) {
            return Err(Error::BadParams("need n nonzero scale factors".into()));
        }
        let mut m = self.matrix.clone();
        for (c, f) in factors.iter().enumerate() {
            m.scale_column(c, f);
        }
        Configuration::new(m)
    }

    /// `g * X` for an invertible `k x k` matrix `g`.
    pub fn transform(&self, g: &RationalMatrix) -> Result<Configuration> {
        if !g.is_square() || g.rows() != self.k || g.rank() != self.k {
            return Err(Error::BadParams("transformation must be invertible k x k".into()));
        }
        Configuration::new(g.mul(&self.matrix)?)
    }
}

/// Decides whether `g x_i = t_i y_i` for some `g` in `GL(k)` and nonzero
/// `t_i`. Both configurations must span their projective space.
///
/// The matroids are compared first. Then, relative to a common basis `B`,
/// the Plücker ratios `q_I = p_I(y) / p_I(x)` of the bases adjacent to `B`
/// must factor as a torus character; this is checked by propagating the
/// character along a spanning forest and verifying every ratio.
pub fn projectively_equivalent(x: &Configuration, y: &Configuration) -> bool {
    if x.k != y.k || x.n != y.n {
        return false;
    }
    if x.matrix.rank() != x.k || y.matrix.rank() != y.k {
        return false;
    }
    let mx = x.matroid();
    if mx != y.matroid() {
        return false;
    }
    let base = mx.iter().next().expect("full rank gives a basis").clone();
    let q = |s: &[usize]| -> Option<Rational> {
        let px = x.maximal_minor(s);
        if px.is_zero() {
            None
        } else {
            Some(y.maximal_minor(s) / px)
        }
    };
    let qb = q(&base).expect("base is a basis");
    let others = complement(&base, x.n);
    // ratio for replacing base[r] by column j, relative to q_B
    let mut ratio: Vec<Vec<Option<Rational>>> = vec![vec![None; others.len()]; x.k];
    for r in 0..x.k {
        for (jj, &j) in others.iter().enumerate() {
            let mut s = base.clone();
            s[r] = j;
            s.sort_unstable();
            ratio[r][jj] = q(&s).map(|v| v / &qb);
        }
    }
    // find s_r, t_j with ratio[r][j] = t_j / s_r on every nonzero entry
    let mut row_val: Vec<Option<Rational>> = vec![None; x.k];
    let mut col_val: Vec<Option<Rational>> = vec![None; others.len()];
    for start in 0..x.k {
        if row_val[start].is_some() {
            continue;
        }
        row_val[start] = Some(Rational::one());
        let mut queue = VecDeque::from([(true, start)]);
        while let Some((is_row, idx)) = queue.pop_front() {
            if is_row {
                let s = row_val[idx].clone().unwrap();
                for jj in 0..others.len() {
                    if let Some(rv) = &ratio[idx][jj] {
                        if col_val[jj].is_none() {
                            col_val[jj] = Some(rv * &s);
                            queue.push_back((false, jj));
                        }
                    }
                }
            } else {
                let t = col_val[idx].clone().unwrap();
                for r in 0..x.k {
                    if let Some(rv) = &ratio[r][idx] {
                        if row_val[r].is_none() {
                            row_val[r] = Some(&t / rv);
                            queue.push_back((true, r));
                        }
                    }
                }
            }
        }
    }
    for r in 0..x.k {
        for jj in 0..others.len() {
            if let (Some(rv), Some(s), Some(t)) = (&ratio[r][jj], &row_val[r], &col_val[jj]) {
                if rv * s != *t {
                    return false;
                }
            }
        }
    }
    true
}

/// Cross-ratio `[13][24] / ([14][23])` of four points of `P^1` given in
/// homogeneous coordinates `(u : v)`, with `[ab] = u_a v_b - u_b v_a`.
/// In the affine chart `(x : 1)` this is
/// `(x1 - x3)(x2 - x4) / ((x1 - x4)(x2 - x3))`; `∞ = (1 : 0)`.
pub fn cross_ratio(p: [&[Rational]; 4]) -> Result<Rational> {
    if p.iter().any(|q| q.len() != 2) {
        return Err(Error::SizeMismatch("points of P^1 have two coordinates".into()));
    }
    if p.iter().any(|q| q[0].is_zero() && q[1].is_zero()) {
        return Err(Error::ZeroColumn(p.iter().position(|q| q[0].is_zero() && q[1].is_zero()).unwrap()));
    }
    let br = |a: usize, b: usize| &p[a][0] * &p[b][1] - &p[b][0] * &p[a][1];
    for a in 0..4 {
        for b in a + 1..4 {
            if br(a, b).is_zero() {
                return Err(Error::CoincidentPoints);
            }
        }
    }
    Ok(br(0, 2) * br(1, 3) / (br(0, 3) * br(1, 2)))
}

/// Points in `P^m` (as columns) are dependent while every proper subset is
/// independent.
pub fn is_circuit(points: &[Vec<Rational>]) -> bool {
    let m = points.len();
    if m < 2 {
        return false;
    }
    let dim = points[0].len();
    let Ok(mat) = RationalMatrix::from_columns(points, dim) else {
        return false;
    };
    if mat.rank() != m - 1 {
        return false;
    }
    (0..m).all(|skip| {
        let cols: Vec<usize> = (0..m).filter(|&c| c != skip).collect();
        mat.select_columns(&cols).rank() == m - 1
    })
}

/// Solves `sum lambda_i x_i (x) y_i = 0`. The solution space must be a line;
/// the returned generator is scaled to a primitive integer vector.
pub fn tensor_relation(x: &Configuration, y: &Configuration) -> Result<Vec<Rational>> {
    if x.n != y.n {
        return Err(Error::SizeMismatch("configurations of different lengths".into()));
    }
    let lifted = segre_points(x, y);
    let m = RationalMatrix::from_columns(&lifted, x.k * y.k)?;
    let ker = m.kernel_basis();
    if ker.rows() != 1 {
        return Err(Error::NotGeneric);
    }
    let primitive = primitive_integer_vector(ker.row(0));
    Ok(primitive.into_iter().map(Rational::from_integer).collect())
}

/// The points `x_i (x) y_i` of the Segre embedding.
pub fn segre_points(x: &Configuration, y: &Configuration) -> Vec<Vec<Rational>> {
    (0..x.n)
        .map(|i| {
            let (a, b) = (x.point(i), y.point(i));
            let mut v = Vec::with_capacity(a.len() * b.len());
            for p in &a {
                for q in &b {
                    v.push(p * q);
                }
            }
            v
        })
        .collect()
}

/// `p_I(x) = c * sign(I, I^c) * p_{I^c}(y)` for one constant `c` and all `I`.
pub fn complementary_minors_match(x: &Configuration, y: &Configuration) -> bool {
    if x.n != y.n || x.k + y.k != x.n {
        return false;
    }
    let mut constant: Option<Rational> = None;
    for s in k_subsets(x.n, x.k) {
        let comp = complement(&s, x.n);
        let mut seq = s.clone();
        seq.extend(&comp);
        let sign = rat(sort_sign(&seq) as i64);
        let lhs = x.maximal_minor(&s);
        let rhs = sign * y.maximal_minor(&comp);
        match (&constant, lhs.is_zero(), rhs.is_zero()) {
            (_, true, true) => {}
            (_, true, false) | (_, false, true) => return false,
            (None, false, false) => constant = Some(lhs / rhs),
            (Some(c), false, false) => {
                if lhs != c * rhs {
                    return false;
                }
            }
        }
    }
    constant.is_some()
}

/// The parameters `(a, b, c, d)` of six points of `P^2` in general position.
///
/// The first three points are moved to the coordinate triangle; the other
/// three become the columns of a `3 x 3` matrix, which row and column
/// scaling bring to `[[1,1,1],[1,a,b],[1,c,d]]`.
pub fn six_point_normal_form(x: &Configuration) -> Result<[Rational; 4]> {
    if x.k != 3 || x.n != 6 {
        return Err(Error::SizeMismatch(format!("need 6 points in P^2, got {} in P^{}", x.n, x.k - 1)));
    }
    if !x.is_general_position() {
        return Err(Error::NotGeneric);
    }
    let base = x.matrix.select_columns(&[0, 1, 2]);
    let inv = base.inverse().ok_or(Error::NotGeneric)?;
    let mut a = inv.mul(&x.matrix.select_columns(&[3, 4, 5]))?;
    if (0..3).any(|r| (0..3).any(|c| a.get(r, c).is_zero())) {
        return Err(Error::NotGeneric);
    }
    for c in 0..3 {
        let f = a.get(0, c).recip();
        a.scale_column(c, &f);
    }
    for r in 1..3 {
        let f = a.get(r, 0).recip();
        a.scale_row(r, &f);
    }
    Ok([a.get(1, 1).clone(), a.get(1, 2).clone(), a.get(2, 1).clone(), a.get(2, 2).clone()])
}

/// `ad - bc + abc + bcd - acd - abd`, the determinant of
/// `[[a(1-c), b(1-d)], [c(1-a), d(1-b)]]`.
pub fn psi(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Rational {
    a * d - b * c + a * b * c + b * c * d - a * c * d - a * b * d
}

/// The quadratic Veronese lift `(x^2, y^2, z^2, xy, xz, yz)`.
pub fn veronese_lift(p: &[Rational]) -> Vec<Rational> {
    vec![
        &p[0] * &p[0],
        &p[1] * &p[1],
        &p[2] * &p[2],
        &p[0] * &p[1],
        &p[0] * &p[2],
        &p[1] * &p[2],
    ]
}

/// Six points of `P^2` lie on a conic iff their Veronese lifts are
/// linearly dependent.
pub fn lies_on_conic(x: &Configuration) -> Result<bool> {
    if x.k != 3 || x.n != 6 {
        return Err(Error::SizeMismatch(format!("need 6 points in P^2, got {} in P^{}", x.n, x.k - 1)));
    }
    if !x.is_general_position() {
        return Err(Error::NotGeneric);
    }
    let lifts: Vec<Vec<Rational>> = x.points().iter().map(|p| veronese_lift(p)).collect();
    Ok(RationalMatrix::from_columns(&lifts, 6)?.rank() < 6)
}
