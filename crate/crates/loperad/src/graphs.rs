//! Weighted directed graphs as pairs of entangled co-operations.
//!
//! A finite weighted digraph yields a right co-operation coding one-step
//! futures and a left co-operation coding one-step pasts,
//!
//! ```text
//! delta(v)       = sum over arcs v -> w of  weight . (v (x) w)
//! delta_tilde(v) = sum over arcs u -> v of  weight . (u (x) v)
//! ```
//!
//! and the pair always satisfies the entanglement relation
//! (delta_tilde (x) id) delta = (id (x) delta) delta_tilde: both sides list
//! the two-arc walks through each vertex. The checks here recompute both
//! sides on arbitrary co-operations (so deliberately corrupted pairs can be
//! caught) and compare them against the double-arc sum directly.
//!
//! Pairing the co-operations with a unital associative algebra A gives two
//! convolution products on the maps from the vertex span to A. On graphs
//! whose in- and out-weights both sum to one at every vertex the two
//! counits coincide and the convolution unit laws hold exactly.

use crate::bialg::TensorComb;
use crate::exact::{parse_rational, rat, Rational};
use num::{One, Zero};
use rand::Rng;
use serde_json::Value;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex label {0:?}")]
    UnknownVertex(String),
    #[error("duplicate vertex label {0:?}")]
    DuplicateVertex(String),
    #[error("vertex {0:?} has outgoing weight sum {1}, expected 1")]
    BadOutSum(String, String),
    #[error("vertex {0:?} has incoming weight sum {1}, expected 1")]
    BadInSum(String, String),
    #[error("bad graph JSON: {0}")]
    Json(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub source: usize,
    pub target: usize,
    pub weight: Rational,
}

/// Finite weighted digraph. With `normalized` set, outgoing and incoming
/// weights both sum to one at every vertex, so the constant-1 functional is
/// simultaneously a right counit for delta and a left counit for
/// delta_tilde.
#[derive(Clone, Debug)]
pub struct WeightedDigraph {
    vertices: Vec<String>,
    arcs: Vec<Arc>,
    normalized: bool,
}

impl WeightedDigraph {
    pub fn new(
        vertices: Vec<String>,
        arcs: Vec<Arc>,
        normalized: bool,
    ) -> Result<Self, GraphError> {
        let mut seen = std::collections::BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
        }
        let g = WeightedDigraph { vertices, arcs, normalized };
        if normalized {
            g.check_stochastic()?;
        }
        Ok(g)
    }

    fn check_stochastic(&self) -> Result<(), GraphError> {
        let n = self.vertices.len();
        let mut out_sum = vec![Rational::zero(); n];
        let mut in_sum = vec![Rational::zero(); n];
        for a in &self.arcs {
            out_sum[a.source] += &a.weight;
            in_sum[a.target] += &a.weight;
        }
        for v in 0..n {
            if !out_sum[v].is_one() {
                return Err(GraphError::BadOutSum(
                    self.vertices[v].clone(),
                    crate::exact::format_rational(&out_sum[v]),
                ));
            }
            if !in_sum[v].is_one() {
                return Err(GraphError::BadInSum(
                    self.vertices[v].clone(),
                    crate::exact::format_rational(&in_sum[v]),
                ));
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Input JSON: `{"vertices": [..], "arcs": [{"s":..,"t":..,"w":"num/den"},..],
    /// "normalized": bool}`.
    pub fn from_json(v: &Value) -> Result<Self, GraphError> {
        let obj = v.as_object().ok_or_else(|| GraphError::Json("expected an object".into()))?;
        let vertices: Vec<String> = obj
            .get("vertices")
            .and_then(Value::as_array)
            .ok_or_else(|| GraphError::Json("missing \"vertices\" array".into()))?
            .iter()
            .map(|x| {
                x.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| GraphError::Json(format!("vertex label {x} is not a string")))
            })
            .collect::<Result<_, _>>()?;
        let index: BTreeMap<&str, usize> =
            vertices.iter().map(String::as_str).zip(0..).collect();
        let arcs = obj
            .get("arcs")
            .and_then(Value::as_array)
            .ok_or_else(|| GraphError::Json("missing \"arcs\" array".into()))?
            .iter()
            .map(|a| {
                let s = a.get("s").and_then(Value::as_str).ok_or_else(|| {
                    GraphError::Json(format!("arc {a} misses string \"s\""))
                })?;
                let t = a.get("t").and_then(Value::as_str).ok_or_else(|| {
                    GraphError::Json(format!("arc {a} misses string \"t\""))
                })?;
                let w = a.get("w").and_then(Value::as_str).ok_or_else(|| {
                    GraphError::Json(format!("arc {a} misses string \"w\""))
                })?;
                let source = *index
                    .get(s)
                    .ok_or_else(|| GraphError::UnknownVertex(s.to_string()))?;
                let target = *index
                    .get(t)
                    .ok_or_else(|| GraphError::UnknownVertex(t.to_string()))?;
                let weight = parse_rational(w).map_err(GraphError::Json)?;
                Ok(Arc { source, target, weight })
            })
            .collect::<Result<Vec<_>, GraphError>>()?;
        let normalized = obj
            .get("normalized")
            .and_then(Value::as_bool)
            .unwrap_or(false);
        WeightedDigraph::new(vertices, arcs, normalized)
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "vertices": self.vertices,
            "arcs": self.arcs.iter().map(|a| serde_json::json!({
                "s": self.vertices[a.source],
                "t": self.vertices[a.target],
                "w": crate::exact::format_rational(&a.weight),
            })).collect::<Vec<_>>(),
            "normalized": self.normalized,
        })
    }
}

/// A co-operation: per vertex, a formal sum of vertex pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoOperation {
    pub per_vertex: Vec<TensorComb<usize>>,
}

impl CoOperation {
    /// Adds a term to one vertex's image, for building corrupted variants.
    pub fn perturb(&mut self, vertex: usize, pair: (usize, usize), amount: Rational) {
        self.per_vertex[vertex].add_term(pair, amount);
    }
}

/// The future and past co-operations of a graph.
pub fn build_cooperations(g: &WeightedDigraph) -> (CoOperation, CoOperation) {
    let n = g.vertex_count();
    let mut delta = vec![TensorComb::zero(); n];
    let mut delta_tilde = vec![TensorComb::zero(); n];
    for a in g.arcs() {
        delta[a.source].add_term((a.source, a.target), a.weight.clone());
        delta_tilde[a.target].add_term((a.source, a.target), a.weight.clone());
    }
    (
        CoOperation { per_vertex: delta },
        CoOperation { per_vertex: delta_tilde },
    )
}

type Triple = BTreeMap<(usize, usize, usize), Rational>;

fn add_triple(m: &mut Triple, key: (usize, usize, usize), c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = m.entry(key).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        m.remove(&key);
    }
}

/// Both sides of the entanglement relation on one vertex, for arbitrary
/// co-operations.
pub fn entanglement_sides(
    delta: &CoOperation,
    delta_tilde: &CoOperation,
    v: usize,
) -> (Triple, Triple) {
    let mut lhs = Triple::new();
    for ((x, w), c) in delta.per_vertex[v].terms() {
        for ((u, y), d) in delta_tilde.per_vertex[*x].terms() {
            add_triple(&mut lhs, (*u, *y, *w), c * d);
        }
    }
    let mut rhs = Triple::new();
    for ((u, y), c) in delta_tilde.per_vertex[v].terms() {
        for ((x, w), d) in delta.per_vertex[*y].terms() {
            add_triple(&mut rhs, (*u, *x, *w), c * d);
        }
    }
    (lhs, rhs)
}

/// Entanglement for arbitrary co-operation pairs: exact equality of both
/// sides on every vertex.
pub fn cooperations_entangled(delta: &CoOperation, delta_tilde: &CoOperation) -> bool {
    (0..delta.per_vertex.len()).all(|v| {
        let (lhs, rhs) = entanglement_sides(delta, delta_tilde, v);
        lhs == rhs
    })
}

/// Entanglement for a graph, cross-checked against the independent oracle:
/// both sides must equal the sum over two-arc walks u -> v -> w of
/// weight(u,v) weight(v,w) . (u, v, w).
pub fn check_entanglement(g: &WeightedDigraph) -> bool {
    let (delta, delta_tilde) = build_cooperations(g);
    let n = g.vertex_count();
    let mut oracle: Vec<Triple> = vec![Triple::new(); n];
    for a in g.arcs() {
        for b in g.arcs() {
            if a.target == b.source {
                add_triple(
                    &mut oracle[a.target],
                    (a.source, a.target, b.target),
                    &a.weight * &b.weight,
                );
            }
        }
    }
    (0..n).all(|v| {
        let (lhs, rhs) = entanglement_sides(&delta, &delta_tilde, v);
        lhs == rhs && lhs == oracle[v]
    })
}

/// Counit laws on a normalized graph: (id (x) eps) delta = id and
/// (eps_tilde (x) id) delta_tilde = id with eps = eps_tilde = (v -> 1).
pub fn counit_laws_hold(g: &WeightedDigraph) -> bool {
    let (delta, delta_tilde) = build_cooperations(g);
    let n = g.vertex_count();
    (0..n).all(|v| {
        let mut right = BTreeMap::new();
        for ((x, _w), c) in delta.per_vertex[v].terms() {
            let e = right.entry(*x).or_insert_with(Rational::zero);
            *e += c;
        }
        let mut left = BTreeMap::new();
        for ((_u, y), c) in delta_tilde.per_vertex[v].terms() {
            let e = left.entry(*y).or_insert_with(Rational::zero);
            *e += c;
        }
        right.retain(|_, c| !c.is_zero());
        left.retain(|_, c| !c.is_zero());
        right == BTreeMap::from([(v, Rational::one())])
            && left == BTreeMap::from([(v, Rational::one())])
    })
}

/// Cocommutativity predicate delta = tau delta_tilde, meaningful for
/// symmetric inputs.
pub fn is_cocommutative_pair(delta: &CoOperation, delta_tilde: &CoOperation) -> bool {
    delta
        .per_vertex
        .iter()
        .zip(&delta_tilde.per_vertex)
        .all(|(d, dt)| *d == dt.dagger(|k| *k))
}

// ---------------------------------------------------------------------------
// convolution algebra
// ---------------------------------------------------------------------------

/// A unital associative algebra given by structure constants on a finite
/// basis: table[i][j] is the coefficient vector of e_i * e_j.
#[derive(Clone, Debug)]
pub struct AssocTable {
    pub dim: usize,
    pub table: Vec<Vec<Vec<Rational>>>,
    pub unit: Vec<Rational>,
}

impl AssocTable {
    /// Verifies associativity on all basis triples and both unit laws.
    pub fn verify(&self) -> Result<(), String> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let ij = self.table[i][j].clone();
                    let jk = self.table[j][k].clone();
                    let left = self.mul_vec(&ij, &basis_vec(self.dim, k));
                    let right = self.mul_vec(&basis_vec(self.dim, i), &jk);
                    if left != right {
                        return Err(format!("not associative at basis triple ({i},{j},{k})"));
                    }
                }
            }
            let e = basis_vec(self.dim, i);
            if self.mul_vec(&self.unit, &e) != e || self.mul_vec(&e, &self.unit) != e {
                return Err(format!("unit fails on basis element {i}"));
            }
        }
        Ok(())
    }

    pub fn mul_vec(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for (k, c) in self.table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += xi * yj * c;
                    }
                }
            }
        }
        out
    }

    /// The rationals themselves.
    pub fn rationals() -> AssocTable {
        AssocTable {
            dim: 1,
            table: vec![vec![vec![rat(1)]]],
            unit: vec![rat(1)],
        }
    }

    /// Upper-triangular 2x2 matrices on the basis (E11, E12, E22); the unit
    /// is E11 + E22.
    pub fn upper_triangular_2x2() -> AssocTable {
        let z = || vec![rat(0), rat(0), rat(0)];
        let e = |k: usize| basis_vec(3, k);
        // E11*E11 = E11, E11*E12 = E12, E12*E22 = E12, E22*E22 = E22
        let table = vec![
            vec![e(0), e(1), z()],
            vec![z(), z(), e(1)],
            vec![z(), z(), e(2)],
        ];
        AssocTable {
            dim: 3,
            table,
            unit: vec![rat(1), rat(0), rat(1)],
        }
    }
}

fn basis_vec(dim: usize, k: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[k] = Rational::one();
    v
}

/// A linear map from the vertex span to the algebra: one coefficient vector
/// per vertex.
pub type VertexMap = Vec<Vec<Rational>>;

/// f < g = mul (f (x) g) delta.
pub fn convolve_prec(
    delta: &CoOperation,
    table: &AssocTable,
    f: &VertexMap,
    g: &VertexMap,
) -> VertexMap {
    convolve(delta, table, f, g)
}

/// f > g = mul (f (x) g) delta_tilde.
pub fn convolve_succ(
    delta_tilde: &CoOperation,
    table: &AssocTable,
    f: &VertexMap,
    g: &VertexMap,
) -> VertexMap {
    convolve(delta_tilde, table, f, g)
}

fn convolve(
    coop: &CoOperation,
    table: &AssocTable,
    f: &VertexMap,
    g: &VertexMap,
) -> VertexMap {
    coop.per_vertex
        .iter()
        .map(|image| {
            let mut acc = vec![Rational::zero(); table.dim];
            for ((x, y), c) in image.terms() {
                let prod = table.mul_vec(&f[*x], &g[*y]);
                for (k, p) in prod.into_iter().enumerate() {
                    if !p.is_zero() {
                        acc[k] += c * p;
                    }
                }
            }
            acc
        })
        .collect()
}

/// The unit map v -> 1_A.
pub fn unit_map(n: usize, table: &AssocTable) -> VertexMap {
    vec![table.unit.clone(); n]
}

pub fn random_vertex_map(n: usize, table: &AssocTable, rng: &mut impl Rng) -> VertexMap {
    (0..n)
        .map(|_| (0..table.dim).map(|_| rat(rng.gen_range(-3..=3))).collect())
        .collect()
}

/// Property check of the convolution algebra: the entanglement law
/// (f > g) < h = f > (g < h) on random maps, and the unit laws
/// f < 1 = f = 1 > f when the graph is normalized (equal counits).
pub fn convolution_check(
    g: &WeightedDigraph,
    table: &AssocTable,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<bool, String> {
    table.verify()?;
    let (delta, delta_tilde) = build_cooperations(g);
    let n = g.vertex_count();
    for _ in 0..samples {
        let f = random_vertex_map(n, table, rng);
        let gm = random_vertex_map(n, table, rng);
        let h = random_vertex_map(n, table, rng);
        let lhs = convolve_prec(&delta, table, &convolve_succ(&delta_tilde, table, &f, &gm), &h);
        let rhs = convolve_succ(&delta_tilde, table, &f, &convolve_prec(&delta, table, &gm, &h));
        if lhs != rhs {
            return Ok(false);
        }
        if g.is_normalized() {
            let one = unit_map(n, table);
            if convolve_prec(&delta, table, &f, &one) != f
                || convolve_succ(&delta_tilde, table, &one, &f) != f
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// random instances
// ---------------------------------------------------------------------------

/// Random rational-weighted digraph with up to `max_vertices` vertices.
pub fn random_digraph(rng: &mut impl Rng, max_vertices: usize) -> WeightedDigraph {
    let n = rng.gen_range(2..=max_vertices.max(2));
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut arcs = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if rng.gen_bool(0.3) {
                let num = rng.gen_range(1..=6);
                let den = rng.gen_range(1..=6);
                arcs.push(Arc {
                    source: s,
                    target: t,
                    weight: Rational::new(num.into(), den.into()),
                });
            }
        }
    }
    if arcs.is_empty() {
        arcs.push(Arc { source: 0, target: 1 % n, weight: rat(1) });
    }
    WeightedDigraph::new(vertices, arcs, false).expect("unnormalized graph is always valid")
}

/// Random doubly stochastic graph: a convex combination of permutations
/// with positive rational coefficients, so in- and out-sums are 1 and the
/// counits coincide.
pub fn random_normalized_digraph(rng: &mut impl Rng, max_vertices: usize) -> WeightedDigraph {
    let n = rng.gen_range(2..=max_vertices.max(2));
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let k = rng.gen_range(1..=3);
    let raw: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=5)).collect();
    let total: i64 = raw.iter().sum();
    let mut weights: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    for coeff in raw {
        // random permutation by repeated swaps
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        for (s, &t) in perm.iter().enumerate() {
            *weights
                .entry((s, t))
                .or_insert_with(Rational::zero) += Rational::new(coeff.into(), total.into());
        }
    }
    let arcs = weights
        .into_iter()
        .map(|((source, target), weight)| Arc { source, target, weight })
        .collect();
    WeightedDigraph::new(vertices, arcs, true).expect("convex combination is doubly stochastic")
}
