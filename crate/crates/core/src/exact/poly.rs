//! Sparse multivariate polynomials with rational coefficients.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::matrix::RationalMatrix;
use super::rational::{parse_rational, rat, Rational};
use crate::error::{Error, Result};

pub type Exponent = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    num_vars: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl MultiPoly {
    pub fn zero(num_vars: usize) -> Self {
        MultiPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: Rational) -> Self {
        let mut p = Self::zero(num_vars);
        p.add_term(vec![0; num_vars], c);
        p
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, Rational::one())
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(num_vars: usize, i: usize) -> Self {
        assert!(i < num_vars, "variable index out of range");
        let mut e = vec![0; num_vars];
        e[i] = 1;
        let mut p = Self::zero(num_vars);
        p.add_term(e, Rational::one());
        p
    }

    /// `sum_i coeffs[i] * x_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn from_terms(num_vars: usize, terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Result<Self> {
        let mut p = Self::zero(num_vars);
        for (e, c) in terms {
            if e.len() != num_vars {
                return Err(Error::SizeMismatch("exponent vector length".into()));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_vars);
        }
        MultiPoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.num_vars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.num_vars, "evaluation point has wrong length");
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Lex-leading exponent (largest under the `BTreeMap` order).
    fn leading(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact division: `Some(q)` with `self = q * divisor`, `None` if the
    /// division leaves a remainder.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        assert_eq!(self.num_vars, divisor.num_vars);
        let (de, dc) = divisor.leading()?;
        let (de, dc) = (de.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero(self.num_vars);
        while let Some((re, rc)) = rem.leading() {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let e: Exponent = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let c = rc / &dc;
            let mut mono = Self::zero(self.num_vars);
            mono.add_term(e, c);
            rem = &rem - &(&mono * divisor);
            quot = &quot + &mono;
        }
        Some(quot)
    }

    /// Coefficient vector in the given monomial order.
    pub fn coefficient_vector(&self, monomials: &[Exponent]) -> Vec<Rational> {
        monomials.iter().map(|m| self.coefficient(m)).collect()
    }

    /// Parses text such as `x1^2 - 3/2*x1*x2 + 5`. Variables are `x1..xN`.
    pub fn parse(text: &str, num_vars: usize) -> Result<Self> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Self::zero(num_vars);
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (i, ch) in cleaned.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !current.ends_with('^') {
                terms.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else if (ch == '+' || ch == '-') && i == 0 {
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        terms.push((negative, current));
        for (neg, body) in terms {
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {text:?}")));
            }
            let mut coeff = Rational::one();
            let mut exp = vec![0u32; num_vars];
            for factor in body.split('*') {
                if let Some(rest) = factor.strip_prefix('x') {
                    let (idx, power) = match rest.split_once('^') {
                        Some((i, k)) => (i, k.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?),
                        None => (rest, 1),
                    };
                    let idx: usize = idx
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad variable {factor:?}")))?;
                    if idx == 0 || idx > num_vars {
                        return Err(Error::Parse(format!("variable {factor:?} out of range")));
                    }
                    exp[idx - 1] += power;
                } else {
                    coeff *= parse_rational(factor)?;
                }
            }
            if neg {
                coeff = -coeff;
            }
            p.add_term(exp, coeff);
        }
        Ok(p)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, k)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.num_vars, rhs.num_vars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.num_vars, rhs.num_vars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.num_vars, rhs.num_vars);
        let mut out = MultiPoly::zero(self.num_vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&rat(-1))
    }
}

/// All exponent vectors of total degree `deg` in `num_vars` variables,
/// in lexicographic order.
pub fn monomials_of_degree(num_vars: usize, deg: u32) -> Vec<Exponent> {
    fn rec(i: usize, left: u32, cur: &mut Exponent, out: &mut Vec<Exponent>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
    }
    if num_vars == 0 {
        return if deg == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(0, deg, &mut vec![0; num_vars], &mut out);
    out.sort();
    out
}

/// Symbolic determinant of a square matrix of polynomials, by expansion
/// along rows with memoization on the set of remaining columns.
pub fn poly_det(m: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::SizeMismatch("poly_det needs a square matrix".into()));
    }
    if n == 0 {
        return Err(Error::BadParams("poly_det of an empty matrix has no variable count".into()));
    }
    if n > 20 {
        return Err(Error::TooLarge(n));
    }
    let num_vars = m[0][0].num_vars();
    let mut memo: HashMap<u32, MultiPoly> = HashMap::new();
    fn rec(
        m: &[Vec<MultiPoly>],
        row: usize,
        cols: u32,
        num_vars: usize,
        memo: &mut HashMap<u32, MultiPoly>,
    ) -> MultiPoly {
        if row == m.len() {
            return MultiPoly::one(num_vars);
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = MultiPoly::zero(num_vars);
        let mut position = 0;
        for c in 0..m.len() {
            if cols & (1 << c) == 0 {
                continue;
            }
            let entry = &m[row][c];
            if !entry.is_zero() {
                let sub = rec(m, row + 1, cols & !(1 << c), num_vars, memo);
                let term = entry * &sub;
                acc = if position % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            position += 1;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    Ok(rec(m, 0, (1u32 << n) - 1, num_vars, &mut memo))
}

/// Evaluates every entry of a polynomial matrix at a point.
pub fn eval_matrix(m: &[Vec<MultiPoly>], point: &[Rational]) -> RationalMatrix {
    let cols = m.first().map_or(0, |r| r.len());
    let rows = m
        .iter()
        .map(|r| r.iter().map(|p| p.eval(point)).collect())
        .collect();
    RationalMatrix::from_rows(rows, cols).expect("rectangular polynomial matrix")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::ratio;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(2, i)
    }

    #[test]
    fn det_examples() {
        assert_eq!(poly_det(&[vec![x(0)]]).unwrap(), x(0));
        let z = MultiPoly::zero(2);
        assert_eq!(poly_det(&[vec![x(0), z.clone()], vec![z, x(1)]]).unwrap(), &x(0) * &x(1));
        let d = poly_det(&[vec![x(0), x(1)], vec![x(1), x(0)]]).unwrap();
        assert_eq!(d, &(&x(0) * &x(0)) - &(&x(1) * &x(1)));
    }

    #[test]
    fn det_agrees_with_numeric_det() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let n = 4;
        let vars = 3;
        let m: Vec<Vec<MultiPoly>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let coeffs: Vec<Rational> =
                            (0..vars).map(|_| rat(rng.gen_range(-3..=3))).collect();
                        &MultiPoly::linear(&coeffs) + &MultiPoly::constant(vars, rat(rng.gen_range(-2..=2)))
                    })
                    .collect()
            })
            .collect();
        let d = poly_det(&m).unwrap();
        for _ in 0..50 {
            let pt: Vec<Rational> = (0..vars)
                .map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
                .collect();
            assert_eq!(d.eval(&pt), eval_matrix(&m, &pt).det().unwrap());
        }
    }

    #[test]
    fn exact_division() {
        let a = &x(0) + &x(1);
        let b = &x(0) - &MultiPoly::constant(2, rat(2));
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!(prod.div_exact(&(&x(0) + &MultiPoly::constant(2, rat(1)))).is_none());
    }

    #[test]
    fn parse_roundtrip() {
        let p = MultiPoly::parse("x1^2 - 3/2*x1*x2 + 5", 2).unwrap();
        assert_eq!(p.coefficient(&[2, 0]), rat(1));
        assert_eq!(p.coefficient(&[1, 1]), ratio(-3, 2));
        assert_eq!(p.coefficient(&[0, 0]), rat(5));
        assert_eq!(MultiPoly::parse(&p.to_string(), 2).unwrap(), p);
        assert!(MultiPoly::parse("x3", 2).is_err());
    }

    #[test]
    fn monomial_count() {
        // C(d + v - 1, v - 1)
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_of_degree(1, 4).len(), 1);
    }
}
