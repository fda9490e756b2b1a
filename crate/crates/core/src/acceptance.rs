//! The acceptance suite: ten end-to-end checks with time limits, shared by
//! the `acceptance` integration test and the `selftest` command.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combin::{binomial, factorial, k_subsets, Subset};
use crate::configurations::{
    complementary_minors_match, lies_on_conic, projectively_equivalent, psi, six_point_normal_form,
    tensor_relation,
};
use crate::exact::{poly_det, rat, MultiPoly, Rational, RationalMatrix};
use crate::grassmann::Subspace;
use crate::hypersimplex::{
    is_matroid_decomposition, restrict_to_facet, DecompositionChecker, FacetSign,
};
use crate::sample::{self, SampleRng};
use crate::schubert::{
    chord_components, component_class, crosscheck, diagram, lie_complex_class, schur_dim, weight_of_subset,
    SchubertClass,
};
use crate::secondary::{
    char_function, enumerate_triangulations, hull_dimension, permutohedron_vertices, prism_points,
    prism_top_row, secondary_vertices, PointConfig,
};
use crate::trees::{decomposition_to_tree_with, enumerate_trees, tree_to_decomposition};
use crate::veronese::{
    coordinate_subspace_with_ones, eval_plucker_polys, gauss_matrix, log_gauss, marked_point, on_sweep,
    plucker_polys, plucker_span_rank, psi_poly, sweep_matrix, tangent_system_rank, tangent_system_symbolic,
    tetrahedral_ratio, HyperplaneArrangement,
};

pub const CRITERIA: [(u8, &str, u64); 10] = [
    (1, "tree/decomposition census", 60),
    (2, "octahedron suite", 5),
    (3, "prism and permutohedron", 120),
    (4, "Veronese class vs contour formula", 60),
    (5, "Lie complex and Schur dimension values", 5),
    (6, "component-sum identity", 30),
    (7, "association", 30),
    (8, "conic criterion", 30),
    (9, "Veronese/Gauss suite", 120),
    (10, "tetrahedral complexes and forgetful maps", 60),
];

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl CriterionReport {
    /// Correct and within its time limit.
    pub fn ok(&self) -> bool {
        self.passed && self.elapsed <= self.limit
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match (self.passed, self.elapsed <= self.limit) {
            (true, true) => "PASS",
            (true, false) => "FAIL (time limit)",
            (false, _) => "FAIL",
        };
        write!(
            f,
            "criterion {:>2} {:<18} {:<42} {:>8.2}s / {:>3}s  {}",
            self.id,
            status,
            self.title,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
            self.detail
        )
    }
}

type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("unexpected error {}: {e}", e.name()))
}

pub fn run(id: u8) -> Option<CriterionReport> {
    let &(id, title, limit) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let outcome = match id {
        1 => census(),
        2 => octahedron(),
        3 => prism(),
        4 => flagship(),
        5 => closed_forms(),
        6 => component_sums(),
        7 => association(),
        8 => conic(),
        9 => gauss_suite(),
        10 => tetrahedral(),
        _ => unreachable!("ids come from CRITERIA"),
    };
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Some(CriterionReport {
        id,
        title,
        passed,
        detail,
        elapsed,
        limit: Duration::from_secs(limit),
    })
}

pub fn run_all() -> Vec<CriterionReport> {
    CRITERIA.iter().filter_map(|c| run(c.0)).collect()
}

/// Trees as families of pairwise compatible splits, each split given by
/// its side avoiding leaf 0 with at least two and at most `n-2` leaves.
fn compatible_split_families(n: usize) -> BTreeSet<BTreeSet<Subset>> {
    let splits: Vec<BTreeSet<usize>> = (2..=n - 2)
        .flat_map(|size| k_subsets(n - 1, size))
        .map(|s| s.into_iter().map(|i| i + 1).collect())
        .collect();
    let compatible = |a: &BTreeSet<usize>, b: &BTreeSet<usize>| a.is_subset(b) || b.is_subset(a) || a.is_disjoint(b);
    let mut out = BTreeSet::new();
    fn rec(
        start: usize,
        chosen: &mut Vec<usize>,
        splits: &[BTreeSet<usize>],
        compatible: &dyn Fn(&BTreeSet<usize>, &BTreeSet<usize>) -> bool,
        out: &mut BTreeSet<BTreeSet<Subset>>,
    ) {
        out.insert(chosen.iter().map(|&i| splits[i].iter().copied().collect()).collect());
        for i in start..splits.len() {
            if chosen.iter().all(|&c| compatible(&splits[c], &splits[i])) {
                chosen.push(i);
                rec(i + 1, chosen, splits, compatible, out);
                chosen.pop();
            }
        }
    }
    rec(0, &mut Vec::new(), &splits, &compatible, &mut out);
    out
}

fn census() -> Outcome {
    let mut counts = Vec::new();
    for (n, expected) in [(3, 1), (4, 4), (5, 26)] {
        let trees = lib(enumerate_trees(n))?;
        ensure(trees.len() == expected, || format!("n={n}: {} trees, expected {expected}", trees.len()))?;
        counts.push(trees.len());
    }
    let found: BTreeSet<BTreeSet<Subset>> = lib(enumerate_trees(5))?.iter().map(|t| t.splits()).collect();
    ensure(found == compatible_split_families(5), || "n=5 trees differ from the brute-force split families".into())?;
    let mut checked = 0;
    for n in 3..=7 {
        let checker = lib(DecompositionChecker::new(2, n))?;
        for t in lib(enumerate_trees(n))? {
            let d = tree_to_decomposition(&t);
            // the cached checker is what is_matroid_decomposition runs
            let valid = if n <= 5 { is_matroid_decomposition(&d) } else { checker.check(&d) };
            ensure(valid, || format!("n={n}: decomposition of {} rejected", t.canonical_form()))?;
            let back = lib(decomposition_to_tree_with(&d, &checker))?;
            ensure(back == t, || format!("n={n}: roundtrip changed {}", t.canonical_form()))?;
            checked += 1;
        }
    }
    Ok(format!("counts {counts:?}; {checked} roundtrips for n <= 7"))
}

fn octahedron() -> Outcome {
    let verts = lib(crate::hypersimplex::hypersimplex_vertices(2, 4))?;
    let points = verts.iter().map(|v| crate::hypersimplex::indicator(v, 4)).collect();
    let a = lib(PointConfig::new(points))?;
    ensure(a.volume() == BigInt::from(4), || format!("volume {}", a.volume()))?;
    let ts = lib(enumerate_triangulations(&a))?;
    ensure(ts.len() == 3, || format!("{} triangulations", ts.len()))?;
    let vs = lib(secondary_vertices(&a))?;
    ensure(vs.len() == 3, || format!("{} hull vertices", vs.len()))?;
    ensure(hull_dimension(&vs) == 2, || format!("hull dimension {}", hull_dimension(&vs)))?;
    let mut pyramids = 0;
    for t in lib(enumerate_trees(4))? {
        let d = tree_to_decomposition(&t);
        if d.pieces.len() != 2 {
            continue;
        }
        for p in &d.pieces {
            let v = lib(p.normalized_volume())?;
            ensure(v == BigInt::from(2), || format!("pyramid of volume {v}"))?;
            pyramids += 1;
        }
    }
    ensure(pyramids == 6, || format!("{pyramids} pyramids"))?;
    Ok("3 triangulations, triangle hull, volume 4 = 2 + 2".into())
}

fn prism() -> Outcome {
    let mut counts = Vec::new();
    for k in 1..=3 {
        let a = prism_points(k);
        let ts = lib(enumerate_triangulations(&a))?;
        let expected = factorial(k as u64 + 1) as usize;
        ensure(ts.len() == expected, || format!("k={k}: {} triangulations", ts.len()))?;
        let vs: BTreeSet<_> = lib(secondary_vertices(&a))?.into_iter().collect();
        for t in &ts {
            let phi = lib(char_function(t, &a))?;
            ensure(vs.contains(&phi), || format!("k={k}: a characteristic function is not a hull vertex"))?;
        }
        let tops: BTreeSet<Vec<i64>> = vs.iter().map(|phi| prism_top_row(k, phi)).collect();
        let perms: BTreeSet<Vec<i64>> = permutohedron_vertices(k).into_iter().collect();
        ensure(tops == perms, || format!("k={k}: projection differs from the permutohedron"))?;
        counts.push(ts.len());
    }
    Ok(format!("triangulation counts {counts:?}"))
}

fn flagship() -> Outcome {
    let rows = crosscheck(4, 9);
    for r in &rows {
        ensure(r.agrees, || format!("k={} n={} disagree", r.k, r.n))?;
    }
    Ok(format!("{} (k, n) pairs agree", rows.len()))
}

fn closed_forms() -> Outcome {
    let mut expected = SchubertClass::zero(2, 4);
    lib(expected.add(diagram(&[2, 1]), BigInt::from(2)))?;
    ensure(lib(lie_complex_class(2, 4))? == expected, || "lie_complex_class(2,4) != 2 s(2,1)".into())?;
    for n in 4..=10 {
        let mut pattern = SchubertClass::zero(2, n);
        let mut j = 1;
        while n > 2 * j {
            lib(pattern.add(diagram(&[n - 1 - j, j]), BigInt::from(n - 2 * j)))?;
            j += 1;
        }
        ensure(lib(lie_complex_class(2, n))? == pattern, || format!("k=2 pattern fails at n={n}"))?;
    }
    for d in 5..=12i64 {
        let du = d as usize;
        ensure(schur_dim(&diagram(&[1, 1]), du - 1) == BigInt::from((d - 1) * (d - 2) / 2), || format!("nodes, d={d}"))?;
        ensure(
            schur_dim(&diagram(&[2, 2]), du - 3) == BigInt::from((d - 2) * (d - 3) * (d - 3) * (d - 4) / 12),
            || format!("4-secants, d={d}"),
        )?;
        ensure(
            schur_dim(&diagram(&[1, 1, 1]), du - 2) == BigInt::from((d - 2) * (d - 3) * (d - 4) / 6),
            || format!("trisecants, n={d}"),
        )?;
    }
    Ok("2 s(2,1); k=2 pattern for n <= 10; three dimension formulas for 5..12".into())
}

fn component_sums() -> Outcome {
    for (k, n) in [(3, 6), (3, 7), (4, 8)] {
        let mut total = SchubertClass::zero(k - 1, n - 1);
        for s in chord_components(k, n) {
            let l = lib(weight_of_subset(&s, n))?;
            total = lib(total.sum(&lib(component_class(&l, k, n))?))?;
        }
        ensure(total == lib(crate::schubert::veronese_class(k, n))?, || format!("(k,n)=({k},{n})"))?;
    }
    Ok("(3,6), (3,7), (4,8)".into())
}

fn association() -> Outcome {
    let mut rng = sample::rng(7);
    let shapes = [(2, 5), (2, 6), (3, 6), (3, 7)];
    for trial in 0..50 {
        let (k, n) = shapes[trial % shapes.len()];
        let x = sample::generic_configuration(&mut rng, k, n);
        let y = lib(x.associate())?;
        ensure(y.k() == n - k, || format!("associate of a {k}x{n} configuration has k={}", y.k()))?;
        let z = lib(y.associate())?;
        ensure(projectively_equivalent(&x, &z), || format!("trial {trial}: double association not equivalent"))?;
        let moved = sample::rescale_columns(&mut rng, &x);
        ensure(projectively_equivalent(&moved, &z), || format!("trial {trial}: rescaled copy not equivalent"))?;
        ensure(complementary_minors_match(&x, &y), || format!("trial {trial}: complementary minors differ"))?;
        let lambda = lib(tensor_relation(&x, &y))?;
        ensure(lambda.iter().all(|l| !l.is_zero()), || format!("trial {trial}: zero coefficient in the tensor relation"))?;
    }
    Ok("50 configurations".into())
}

fn conic_consistent(x: &crate::configurations::Configuration) -> std::result::Result<bool, String> {
    let on = lib(lies_on_conic(x))?;
    let [a, b, c, d] = lib(six_point_normal_form(x))?;
    let vanishes = psi(&a, &b, &c, &d).is_zero();
    let degenerate = tangent_system_rank(&a, &b, &c, &d) <= 3;
    ensure(on == vanishes && vanishes == degenerate, || {
        format!("conic {on}, psi = 0 {vanishes}, rank <= 3 {degenerate}")
    })?;
    Ok(on)
}

fn conic() -> Outcome {
    let mut rng = sample::rng(8);
    for _ in 0..10 {
        let x = sample::points_on_conic(&mut rng, 6);
        ensure(conic_consistent(&x)?, || "sample on xz = y^2 not recognized".into())?;
    }
    let mut off = 0;
    for _ in 0..10 {
        let x = sample::generic_configuration(&mut rng, 3, 6);
        if !conic_consistent(&x)? {
            off += 1;
        }
    }
    let m = tangent_system_symbolic();
    let psi = psi_poly();
    let neg = -&psi;
    for cols in k_subsets(6, 4) {
        let sub: Vec<Vec<MultiPoly>> = m.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
        let minor = lib(poly_det(&sub))?;
        ensure(minor.is_zero() || minor == psi || minor == neg, || format!("minor on columns {cols:?} is {minor}"))?;
        ensure(minor.is_zero() == cols.contains(&0), || format!("minor on columns {cols:?} is {minor}"))?;
    }
    Ok(format!("10 conic sextuples, 10 generic ({off} off a conic), 15 minors"))
}

fn random_arrangement(rng: &mut SampleRng, k: usize, n: usize, normalized: bool) -> HyperplaneArrangement {
    loop {
        let forms = if normalized {
            RationalMatrix::identity(k)
                .vstack(&sample::matrix(rng, n - k, k, 5))
                .expect("same width")
        } else {
            sample::matrix(rng, n, k, 5)
        };
        if let Ok(a) = HyperplaneArrangement::new(forms) {
            return a;
        }
    }
}

fn regular_point(rng: &mut SampleRng, arr: &HyperplaneArrangement) -> Vec<Rational> {
    loop {
        let z: Vec<Rational> = (0..arr.k()).map(|_| sample::rational(rng, 7)).collect();
        if (0..arr.n()).all(|i| !arr.eval_form(i, &z).is_zero()) {
            return z;
        }
    }
}

fn gauss_suite() -> Outcome {
    let mut rng = sample::rng(9);
    for (k, n) in [(2, 5), (3, 6), (3, 7)] {
        let arr = random_arrangement(&mut rng, k, n, true);
        let polys = plucker_polys(&arr);
        for _ in 0..5 {
            let z = regular_point(&mut rng, &arr);
            let nz = lib(gauss_matrix(&arr, &z))?;
            ensure(nz.transpose().mul_vec(&z) == vec![rat(1); n], || format!("({k},{n}): Euler identity fails"))?;
            let numeric = lib(log_gauss(&arr, &z))?.plucker();
            let symbolic = eval_plucker_polys(&polys, k, n, &z).ok_or("Plücker polynomials vanish")?;
            ensure(numeric.is_proportional(&symbolic), || format!("({k},{n}): symbolic and numeric minors differ"))?;
            // (e) every point of the Gauss image lies on the sweep
            let c: Vec<Rational> = (0..k).map(|_| sample::rational(&mut rng, 5)).collect();
            let t = nz.transpose().mul_vec(&c);
            ensure(lib(on_sweep(&arr, &t))?, || format!("({k},{n}): Gauss image point off the sweep"))?;
        }
        let expected = binomial(n as u64 - 1, k as u64 - 1) as usize;
        let rank = plucker_span_rank(&arr);
        ensure(rank == expected, || format!("({k},{n}): span rank {rank}, expected {expected}"))?;
        for idx in k_subsets(n, k - 1) {
            let got = lib(marked_point(&arr, &idx))?;
            ensure(got == lib(coordinate_subspace_with_ones(n, &idx))?, || format!("({k},{n}): marked point {idx:?}"))?;
        }
        for i in 0..n {
            let mut e = vec![rat(0); n];
            e[i] = rat(1);
            let r = lib(sweep_matrix(&arr, &e))?.rank();
            ensure(r == 1, || format!("({k},{n}): rank {r} at e_{}", i + 1))?;
        }
    }
    Ok("(2,5), (3,6), (3,7)".into())
}

fn tetrahedral() -> Outcome {
    let mut rng = sample::rng(10);
    for _ in 0..10 {
        let s = sample::generic_subspace(&mut rng, 2, 4);
        let lambda = lib(tetrahedral_ratio(&s))?;
        for _ in 0..10 {
            let mut m = s.matrix().clone();
            for c in 0..4 {
                m.scale_column(c, &sample::nonzero_rational(&mut rng, 6));
            }
            let moved = lib(Subspace::new(m))?;
            ensure(lib(tetrahedral_ratio(&moved))? == lambda, || "ratio changed under the torus".into())?;
        }
    }
    let mut pairs = 0;
    for n in 4..=6 {
        for t in lib(enumerate_trees(n))? {
            let d = tree_to_decomposition(&t);
            for i in 0..n {
                let lhs = tree_to_decomposition(&lib(t.forget_point(i))?);
                let rhs = lib(restrict_to_facet(&d, i, FacetSign::Minus))?;
                ensure(lhs.piece_set() == rhs.piece_set(), || {
                    format!("forgetting {} from {} disagrees with restriction", i + 1, t.canonical_form())
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("100 torus translates; {pairs} forget/restrict pairs"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_family_oracle_counts() {
        assert_eq!(compatible_split_families(4).len(), 4);
        assert_eq!(compatible_split_families(5).len(), 26);
    }

    #[test]
    fn report_line_mentions_status() {
        let r = CriterionReport {
            id: 4,
            title: "t",
            passed: true,
            detail: String::new(),
            elapsed: Duration::from_millis(1),
            limit: Duration::from_secs(1),
        };
        assert!(r.to_string().contains("PASS"));
        assert!(r.ok());
    }
}
