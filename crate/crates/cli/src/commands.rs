use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Subcommand, ValueEnum};
use serde_json::{json, Value};

use chowq_core::combin::{parse_subset_key, subset_key};
use chowq_core::exact::{parse_rational, poly_det, Rational};
use chowq_core::hypersimplex::{self, FacetSign, MatroidDecomposition, MatroidPolytope};
use chowq_core::io::*;
use chowq_core::schubert::{self, Weight, YoungDiagram};
use chowq_core::{configurations, secondary, trees, veronese, Error};

/// Failures of a command: library errors carry their own tag, I/O failures
/// are reported separately.
#[derive(Debug)]
pub enum Failure {
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Out = std::result::Result<Value, Failure>;

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact linear algebra.
    #[command(subcommand)]
    Linalg(Linalg),
    /// Subspaces and Plücker coordinates.
    #[command(subcommand)]
    Grassmann(Grassmann),
    /// Hypersimplices and matroid polytopes.
    #[command(subcommand)]
    Hypersimplex(Hypersimplex),
    /// Labeled trees and k = 2 matroid decompositions.
    #[command(subcommand)]
    Trees(Trees),
    /// Triangulations and secondary polytopes.
    #[command(subcommand)]
    Secondary(Secondary),
    /// Projective point configurations.
    #[command(subcommand)]
    Config(Config),
    /// Logarithmic Gauss maps of hyperplane arrangements.
    #[command(subcommand)]
    Veronese(Veronese),
    /// Young diagrams and Schubert classes.
    #[command(subcommand)]
    Schubert(Schubert),
    /// Run the acceptance suite and print one line per criterion.
    Selftest,
}

/// A JSON document; `-` reads standard input.
#[derive(Args, Debug)]
pub struct Input {
    pub file: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl From<Sign> for FacetSign {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Plus => FacetSign::Plus,
            Sign::Minus => FacetSign::Minus,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Linalg {
    /// Rank of a matrix.
    Rank(Input),
    /// Row basis of the kernel.
    Kernel(Input),
    /// Minor on 1-based row and column sets such as `1,3`.
    Minor {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        rows: String,
        #[arg(long)]
        cols: String,
    },
    /// Determinant of a square polynomial matrix `{"vars", "rows"}`.
    PolyDet(Input),
}

#[derive(Subcommand, Debug)]
pub enum Grassmann {
    /// Plücker coordinates of a subspace.
    Plucker(Input),
    /// Whether every Plücker coordinate is nonzero.
    IsGeneric(Input),
    /// Bases of the matroid of a subspace.
    MatroidBases(Input),
    /// Intersection with the coordinate hyperplane `x_i = 0`.
    Intersect {
        #[command(flatten)]
        input: Input,
        #[arg(value_parser = one_based)]
        i: usize,
    },
    /// Projection forgetting coordinate `i`.
    Project {
        #[command(flatten)]
        input: Input,
        #[arg(value_parser = one_based)]
        i: usize,
    },
    /// The point configuration given by the columns.
    GmConfig(Input),
}

#[derive(Subcommand, Debug)]
pub enum Hypersimplex {
    /// Vertices of Δ(k, n).
    Vertices { k: usize, n: usize },
    /// The facet `x_i = 1` (plus) or `x_i = 0` (minus) and its relabeling.
    Facet {
        k: usize,
        n: usize,
        #[arg(value_parser = one_based)]
        i: usize,
        #[arg(long, value_enum)]
        sign: Sign,
    },
    /// Whether a vertex set spans a matroid polytope.
    IsMatroidPolytope(Input),
    /// Matroid polytope of a subspace.
    MatroidPolytope(Input),
    /// Normalized volume of a polytope.
    Volume(Input),
    /// Whether a list of polytopes tiles the hypersimplex.
    ValidateDecomposition(Input),
    /// Restriction of a decomposition to a facet.
    Restrict {
        #[command(flatten)]
        input: Input,
        #[arg(value_parser = one_based)]
        i: usize,
        #[arg(long, value_enum)]
        sign: Sign,
    },
}

#[derive(Subcommand, Debug)]
pub enum Trees {
    /// Partition of the leaves at an internal vertex such as `v1`.
    VertexRelation {
        #[command(flatten)]
        input: Input,
        vertex: String,
    },
    /// Matroid decomposition of Δ(2, n) given by a tree.
    ToDecomposition(Input),
    /// Tree of a matroid decomposition of Δ(2, n).
    FromDecomposition(Input),
    /// All trees with n labeled leaves.
    Enumerate { n: usize },
    /// Whether every internal vertex has valence at least 3.
    Stable(Input),
    /// Dimension of the boundary stratum of a tree.
    Dimension(Input),
    /// Remove leaf `i` and relabel.
    Forget {
        #[arg(value_parser = one_based)]
        i: usize,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Subcommand, Debug)]
pub enum Secondary {
    /// Characteristic function of a triangulation.
    CharFunction { config: PathBuf, triangulation: PathBuf },
    /// All triangulations of a point configuration.
    Triangulations {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        count: bool,
    },
    /// Vertices of the secondary polytope.
    Vertices(Input),
    /// Standard triangulation of Δ^1 × Δ^k, or the number of all its
    /// triangulations with `--count`.
    Prism {
        k: usize,
        #[arg(long)]
        count: bool,
    },
    /// Triangulation of Δ^1 × Δ^k attached to a permutation such as `2,1,3`.
    PrismPerm { permutation: String },
    /// Vertices of the permutohedron of (1, ..., k+1).
    Permutohedron { k: usize },
}

#[derive(Subcommand, Debug)]
pub enum Config {
    /// Whether every k columns are independent.
    GeneralPosition(Input),
    /// Cross-ratio of four points of P^1 written `u:v`.
    CrossRatio {
        #[arg(num_args = 4, allow_hyphen_values = true)]
        points: Vec<String>,
    },
    /// The associated configuration.
    Associate(Input),
    /// Whether the columns form a circuit.
    IsCircuit(Input),
    /// Normal form (a, b, c, d) of six points in P^2.
    #[command(name = "normal-form6")]
    NormalForm(Input),
    /// The conic invariant Ψ(a, b, c, d).
    Psi {
        #[arg(num_args = 4, allow_hyphen_values = true)]
        values: Vec<String>,
    },
    /// Whether six points of P^2 lie on a conic.
    ConicTest(Input),
}

#[derive(Subcommand, Debug)]
pub enum Veronese {
    /// Image of a point under the logarithmic Gauss map.
    Gauss {
        arrangement: PathBuf,
        /// Comma-separated coordinates of z.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Plücker coordinates of the Gauss map as polynomials.
    #[command(name = "pluckerpolys")]
    PluckerPolys(Input),
    /// Image of the intersection point of k−1 hyperplanes.
    MarkedPoint {
        arrangement: PathBuf,
        indices: String,
    },
    /// Symbolic matrix whose kernel is the Gauss image.
    Steiner(Input),
    /// The matrix a_ji (t_j − t_i) at a point t.
    SweepMatrix {
        arrangement: PathBuf,
        /// Comma-separated coordinates of t.
        #[arg(long = "t", allow_hyphen_values = true)]
        point: String,
    },
    /// Whether t lies on the sweep.
    SweepTest {
        arrangement: PathBuf,
        /// Comma-separated coordinates of t.
        #[arg(long = "t", allow_hyphen_values = true)]
        point: String,
    },
    /// Rank of the tangent system at (a, b, c, d).
    TangentRank {
        #[arg(num_args = 4, allow_hyphen_values = true)]
        values: Vec<String>,
    },
    /// Cross-ratio of the four boundary points of a line in G(2, 4).
    #[command(name = "tetra")]
    TetrahedralRatio(Input),
}

#[derive(Subcommand, Debug)]
pub enum Schubert {
    /// Transpose of a diagram written `3,1`.
    Conjugate { diagram: String },
    /// Heights of a diagram in G(p, q).
    Heights { diagram: String, p: usize, q: usize },
    /// Dimension of the Schur module S^α C^m.
    SchurDim { diagram: String, m: usize },
    /// Kostka number K_{λ,α}.
    Kostka { weight: String, diagram: String },
    /// Littlewood–Richardson coefficient c^γ_{αβ}.
    Lr { alpha: String, beta: String, gamma: String },
    /// Pushforward of a product of two classes under direct sum.
    Pushforward { first: PathBuf, second: PathBuf },
    /// Weight of a 1-based subset of {1, ..., n−2}.
    WeightOfSubset { indices: String, n: usize },
    /// Class of one component of the contour.
    ComponentClass { weight: String, k: usize, n: usize },
    /// Class of the special Veronese variety.
    VeroneseClass { k: usize, n: usize },
    /// Class of the visible contour by the contour formula.
    KlyachkoClass { k: usize, n: usize },
    /// Class of a generic Lie complex.
    LieClass { k: usize, n: usize },
    /// Compare the Veronese class with the contour formula for all
    /// 2 <= k <= kmax, k + 2 <= n <= nmax.
    Crosscheck {
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        #[arg(long, default_value_t = 9)]
        nmax: usize,
    },
}

fn one_based(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(i) if i >= 1 => Ok(i - 1),
        _ => Err(format!("{s:?} is not a 1-based index")),
    }
}

fn read(path: &PathBuf) -> Out {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Failure::Io(format!("stdin: {e}")))?
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?
    };
    Ok(parse(&text)?)
}

fn rationals(text: &str) -> chowq_core::Result<Vec<Rational>> {
    text.split(',').map(parse_rational).collect()
}

fn four(values: &[String]) -> chowq_core::Result<[Rational; 4]> {
    let v: Vec<Rational> = values.iter().map(|s| parse_rational(s)).collect::<chowq_core::Result<_>>()?;
    v.try_into()
        .map_err(|_| Error::Parse("expected four values".into()))
}

fn weight(text: &str) -> chowq_core::Result<Weight> {
    let components = text
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad weight component {s:?}"))))
        .collect::<chowq_core::Result<_>>()?;
    Ok(Weight { components })
}

fn columns(v: &Value) -> chowq_core::Result<Vec<Vec<Rational>>> {
    v.get("columns")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("expected {\"columns\": [...]}".into()))?
        .iter()
        .map(rationals_from_json)
        .collect()
}

fn decomposition_doc(d: &MatroidDecomposition) -> Value {
    json!({"k": d.k, "n": d.n, "pieces": decomposition_to_json(d)})
}

pub fn execute(cmd: &Command) -> Out {
    match cmd {
        Command::Linalg(c) => linalg(c),
        Command::Grassmann(c) => grassmann(c),
        Command::Hypersimplex(c) => hypersimplex_cmd(c),
        Command::Trees(c) => trees_cmd(c),
        Command::Secondary(c) => secondary_cmd(c),
        Command::Config(c) => config(c),
        Command::Veronese(c) => veronese_cmd(c),
        Command::Schubert(c) => schubert_cmd(c),
        Command::Selftest => unreachable!("selftest prints a table and is handled by the driver"),
    }
}

fn linalg(c: &Linalg) -> Out {
    Ok(match c {
        Linalg::Rank(i) => json!({"rank": matrix_from_document(&read(&i.file)?)?.rank()}),
        Linalg::Kernel(i) => json!({"rows": matrix_to_json(&matrix_from_document(&read(&i.file)?)?.kernel_basis())}),
        Linalg::Minor { input, rows, cols } => {
            let m = matrix_from_document(&read(&input.file)?)?;
            let minor = m.minor(&parse_subset_key(rows)?, &parse_subset_key(cols)?)?;
            json!({"minor": rational_to_json(&minor)})
        }
        Linalg::PolyDet(i) => json!({"det": poly_to_json(&poly_det(&poly_matrix_from_json(&read(&i.file)?)?)?)}),
    })
}

fn grassmann(c: &Grassmann) -> Out {
    Ok(match c {
        Grassmann::Plucker(i) => plucker_to_json(&subspace_from_json(&read(&i.file)?)?.plucker()),
        Grassmann::IsGeneric(i) => json!({"generic": subspace_from_json(&read(&i.file)?)?.is_generic()}),
        Grassmann::MatroidBases(i) => {
            let bases = subspace_from_json(&read(&i.file)?)?.matroid_bases();
            json!({"bases": bases.iter().map(|b| subset_key(b)).collect::<Vec<_>>()})
        }
        Grassmann::Intersect { input, i } => {
            subspace_to_json(&subspace_from_json(&read(&input.file)?)?.intersect_coord_hyperplane(*i)?)
        }
        Grassmann::Project { input, i } => subspace_to_json(&subspace_from_json(&read(&input.file)?)?.project_away(*i)?),
        Grassmann::GmConfig(i) => configuration_to_json(&subspace_from_json(&read(&i.file)?)?.gm_configuration()?),
    })
}

fn hypersimplex_cmd(c: &Hypersimplex) -> Out {
    Ok(match c {
        Hypersimplex::Vertices { k, n } => {
            let vs = hypersimplex::hypersimplex_vertices(*k, *n)?;
            json!({"k": k, "n": n, "vertices": vs.iter().map(|v| subset_key(v)).collect::<Vec<_>>()})
        }
        Hypersimplex::Facet { k, n, i, sign } => {
            let (p, map) = hypersimplex::facet(*k, *n, *i, (*sign).into())?;
            let relabel: BTreeMap<String, String> =
                p.vertices.iter().map(|v| (subset_key(v), subset_key(&map.apply(v)))).collect();
            json!({
                "facet": polytope_to_json(&p),
                "target": {"k": map.target_k(), "n": map.target_n()},
                "relabel": relabel,
            })
        }
        Hypersimplex::IsMatroidPolytope(i) => {
            let p = polytope_from_json(&read(&i.file)?)?;
            json!({"matroid_polytope": hypersimplex::is_matroid_polytope(&p.vertices)})
        }
        Hypersimplex::MatroidPolytope(i) => {
            polytope_to_json(&hypersimplex::matroid_polytope_of(&subspace_from_json(&read(&i.file)?)?))
        }
        Hypersimplex::Volume(i) => {
            let p: MatroidPolytope = polytope_from_json(&read(&i.file)?)?;
            json!({"volume": integer_to_json(&p.normalized_volume()?)})
        }
        Hypersimplex::ValidateDecomposition(i) => {
            json!({"decomposition": hypersimplex::is_matroid_decomposition(&decomposition_from_json(&read(&i.file)?)?)})
        }
        Hypersimplex::Restrict { input, i, sign } => {
            let d = decomposition_from_json(&read(&input.file)?)?;
            decomposition_doc(&hypersimplex::restrict_to_facet(&d, *i, (*sign).into())?)
        }
    })
}

fn trees_cmd(c: &Trees) -> Out {
    Ok(match c {
        Trees::VertexRelation { input, vertex } => {
            let t = tree_from_json(&read(&input.file)?)?;
            let j = vertex
                .strip_prefix('v')
                .and_then(|s| one_based(s).ok())
                .ok_or_else(|| Error::Parse(format!("{vertex:?} is not an internal vertex name like v1")))?;
            let rel = t.vertex_relation(t.n() + j)?;
            json!({"blocks": rel.blocks.iter().map(|b| subset_key(b)).collect::<Vec<_>>()})
        }
        Trees::ToDecomposition(i) => decomposition_doc(&trees::tree_to_decomposition(&tree_from_json(&read(&i.file)?)?)),
        Trees::FromDecomposition(i) => tree_to_json(&trees::decomposition_to_tree(&decomposition_from_json(&read(&i.file)?)?)?),
        Trees::Enumerate { n } => Value::Array(trees::enumerate_trees(*n)?.iter().map(tree_to_json).collect()),
        Trees::Stable(i) => json!({"stable": tree_from_json(&read(&i.file)?)?.is_stable_tree()}),
        Trees::Dimension(i) => json!({"dimension": tree_from_json(&read(&i.file)?)?.stratum_dimension()}),
        Trees::Forget { input, i } => tree_to_json(&tree_from_json(&read(&input.file)?)?.forget_point(*i)?),
    })
}

fn triangulation_list(ts: &[secondary::Triangulation], count: bool) -> Value {
    if count {
        json!({"triangulations": ts.len()})
    } else {
        json!({"triangulations": ts.iter().map(triangulation_to_json).collect::<Vec<_>>()})
    }
}

fn secondary_cmd(c: &Secondary) -> Out {
    Ok(match c {
        Secondary::CharFunction { config, triangulation } => {
            let a = point_config_from_json(&read(config)?)?;
            let t = triangulation_from_json(&read(triangulation)?)?;
            char_function_to_json(&secondary::char_function(&t, &a)?)
        }
        Secondary::Triangulations { input, count } => {
            let a = point_config_from_json(&read(&input.file)?)?;
            triangulation_list(&secondary::enumerate_triangulations(&a)?, *count)
        }
        Secondary::Vertices(i) => {
            let vs = secondary::secondary_vertices(&point_config_from_json(&read(&i.file)?)?)?;
            json!({"vertices": vs.iter().map(|phi| char_function_to_json(phi)["values"].clone()).collect::<Vec<_>>()})
        }
        Secondary::Prism { k, count } => {
            if *count {
                triangulation_list(&secondary::enumerate_triangulations(&secondary::prism_points(*k))?, true)
            } else {
                triangulation_to_json(&secondary::prism_standard_triangulation(*k))
            }
        }
        Secondary::PrismPerm { permutation: text } => {
            let w = permutation(text)?;
            triangulation_to_json(&secondary::prism_triangulation_of_permutation(&w)?)
        }
        Secondary::Permutohedron { k } => json!({"vertices": secondary::permutohedron_vertices(*k)}),
    })
}

/// `"2,1,3"` as 0-based values in the given order.
fn permutation(text: &str) -> chowq_core::Result<Vec<usize>> {
    text.split(',').map(|s| one_based(s.trim()).map_err(Error::Parse)).collect()
}

fn config(c: &Config) -> Out {
    Ok(match c {
        Config::GeneralPosition(i) => {
            json!({"general_position": configuration_from_json(&read(&i.file)?)?.is_general_position()})
        }
        Config::CrossRatio { points } => {
            let pts: Vec<Vec<Rational>> = points
                .iter()
                .map(|p| {
                    let (u, v) = p
                        .split_once(':')
                        .ok_or_else(|| Error::Parse(format!("{p:?} is not a point u:v")))?;
                    Ok(vec![parse_rational(u)?, parse_rational(v)?])
                })
                .collect::<chowq_core::Result<_>>()?;
            let r = configurations::cross_ratio([&pts[0], &pts[1], &pts[2], &pts[3]])?;
            json!({"cross_ratio": rational_to_json(&r)})
        }
        Config::Associate(i) => configuration_to_json(&configuration_from_json(&read(&i.file)?)?.associate()?),
        Config::IsCircuit(i) => json!({"circuit": configurations::is_circuit(&columns(&read(&i.file)?)?)}),
        Config::NormalForm(i) => {
            let [a, b, c, d] = configurations::six_point_normal_form(&configuration_from_json(&read(&i.file)?)?)?;
            json!({"a": rational_to_json(&a), "b": rational_to_json(&b), "c": rational_to_json(&c), "d": rational_to_json(&d)})
        }
        Config::Psi { values } => {
            let [a, b, c, d] = four(values)?;
            json!({"psi": rational_to_json(&configurations::psi(&a, &b, &c, &d))})
        }
        Config::ConicTest(i) => json!({"on_conic": configurations::lies_on_conic(&configuration_from_json(&read(&i.file)?)?)?}),
    })
}

fn veronese_cmd(c: &Veronese) -> Out {
    Ok(match c {
        Veronese::Gauss { arrangement, at } => {
            let arr = arrangement_from_json(&read(arrangement)?)?;
            subspace_to_json(&veronese::log_gauss(&arr, &rationals(at)?)?)
        }
        Veronese::PluckerPolys(i) => {
            let arr = arrangement_from_json(&read(&i.file)?)?;
            let polys: BTreeMap<String, Value> = veronese::plucker_polys(&arr)
                .iter()
                .map(|(s, p)| (subset_key(s), poly_to_json(p)))
                .collect();
            json!({"k": arr.k(), "n": arr.n(), "polys": polys})
        }
        Veronese::MarkedPoint { arrangement, indices } => {
            let arr = arrangement_from_json(&read(arrangement)?)?;
            subspace_to_json(&veronese::marked_point(&arr, &parse_subset_key(indices)?)?)
        }
        Veronese::Steiner(i) => {
            let m = veronese::steiner_matrix(&arrangement_from_json(&read(&i.file)?)?)?;
            let rows: Vec<Vec<Value>> = m.iter().map(|r| r.iter().map(poly_to_json).collect()).collect();
            json!({"rows": rows})
        }
        Veronese::SweepMatrix { arrangement, point } => {
            let arr = arrangement_from_json(&read(arrangement)?)?;
            json!({"rows": matrix_to_json(&veronese::sweep_matrix(&arr, &rationals(point)?)?)})
        }
        Veronese::SweepTest { arrangement, point } => {
            let arr = arrangement_from_json(&read(arrangement)?)?;
            json!({"on_sweep": veronese::on_sweep(&arr, &rationals(point)?)?})
        }
        Veronese::TangentRank { values } => {
            let [a, b, c, d] = four(values)?;
            json!({"rank": veronese::tangent_system_rank(&a, &b, &c, &d)})
        }
        Veronese::TetrahedralRatio(i) => {
            json!({"ratio": rational_to_json(&veronese::tetrahedral_ratio(&subspace_from_json(&read(&i.file)?)?)?)})
        }
    })
}

fn schubert_cmd(c: &Schubert) -> Out {
    let dg = |s: &str| YoungDiagram::parse_key(s);
    Ok(match c {
        Schubert::Conjugate { diagram } => json!({"diagram": dg(diagram)?.conjugate().key()}),
        Schubert::Heights { diagram, p, q } => json!({"heights": schubert::heights(&dg(diagram)?, *p, *q)?}),
        Schubert::SchurDim { diagram, m } => json!({"dim": integer_to_json(&schubert::schur_dim(&dg(diagram)?, *m))}),
        Schubert::Kostka { weight: w, diagram } => json!({"kostka": schubert::kostka(&weight(w)?, &dg(diagram)?)?}),
        Schubert::Lr { alpha, beta, gamma } => {
            json!({"coefficient": schubert::littlewood_richardson(&dg(alpha)?, &dg(beta)?, &dg(gamma)?)?})
        }
        Schubert::Pushforward { first, second } => {
            let a = schubert_class_from_json(&read(first)?)?;
            let b = schubert_class_from_json(&read(second)?)?;
            let (class, dropped) = schubert::direct_sum_pushforward(&a, &b);
            let mut v = schubert_class_to_json(&class);
            v["dropped"] = json!(dropped);
            v
        }
        Schubert::WeightOfSubset { indices, n } => {
            let idx: Vec<usize> = indices
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad index {s:?}"))))
                .collect::<chowq_core::Result<_>>()?;
            json!({"weight": schubert::weight_of_subset(&idx, *n)?.components})
        }
        Schubert::ComponentClass { weight: w, k, n } => schubert_class_to_json(&schubert::component_class(&weight(w)?, *k, *n)?),
        Schubert::VeroneseClass { k, n } => schubert_class_to_json(&schubert::veronese_class(*k, *n)?),
        Schubert::KlyachkoClass { k, n } => schubert_class_to_json(&schubert::klyachko_contour_class(*k, *n)?),
        Schubert::LieClass { k, n } => schubert_class_to_json(&schubert::lie_complex_class(*k, *n)?),
        Schubert::Crosscheck { kmax, nmax } => {
            let rows: Vec<Value> = schubert::crosscheck(*kmax, *nmax)
                .iter()
                .map(|r| json!({"k": r.k, "n": r.n, "agrees": r.agrees, "class": schubert_class_to_json(&r.veronese)}))
                .collect();
            json!({"rows": rows, "all_agree": rows.iter().all(|r| r["agrees"] == json!(true))})
        }
    })
}
