//! Finite-dimensional equivariant model: moment-graph classes on Gr(l, n).
//!
//! The torus-fixed points of the Grassmannian of l-planes in n-space are the
//! l-element subsets of {1..n}; one-dimensional orbits connect subsets that
//! differ by exchanging a single element i for j and carry the weight
//! u_i - u_j. A class is a tuple of polynomials in u_1..u_n, one per fixed
//! point, and it is geometric exactly when every edge's difference of end
//! values is divisible by the edge weight (`gkm_check`).
//!
//! Dictionary between fixed points and partitions: write the subset in
//! descending order a_1 > ... > a_l; then lambda_k = a_k - (l - k + 1). The
//! subset {1..l} is the empty partition, {n-l+1..n} the full l x (n-l) box,
//! and containment of partitions is componentwise. Exchanging i in S for
//! j < i lowers |lambda| by i - j, so a vertex has exactly |lambda| edges
//! going strictly down in degree.
//!
//! `equivariant_schubert` builds the class of the Schubert variety for
//! lambda: it vanishes at vertices whose partition does not contain lambda,
//! its value at lambda itself is the product of the down-edge weights
//! prod_{i in S, j not in S, j < i} (u_i - u_j), and every other value is the
//! unique homogeneous degree-|lambda| solution of the down-edge divisibility
//! congruences (solved by an iterated exact Chinese-remainder step; the
//! moduli are pairwise coprime linear forms, and a degree-|lambda| solution
//! congruent to given lower values is unique because any two differ by a
//! multiple of more than |lambda| coprime linear forms). With this
//! normalization the forgetful specialization of products reproduces plain
//! Littlewood-Richardson numbers, which the gkm verification suite checks.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{GenTable, Generator, GradedPoly};
use crate::rational::Rat;
use crate::schubert::SchubertClass;

/// One-dimensional orbit: vertex `a` loses `i` and gains `j` to become `b`.
/// The edge weight is `u_i - u_j` (1-based variable indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GkmEdge {
    pub a: usize,
    pub b: usize,
    pub i: usize,
    pub j: usize,
}

/// The moment graph of Gr(l, n) plus the partition dictionary.
/// Graphs with equal (n, l) are interchangeable; equality reflects that.
#[derive(Debug)]
pub struct GkmGraph {
    n: usize,
    l: usize,
    vertices: Vec<Vec<usize>>,
    partitions: Vec<Partition>,
    vertex_by_subset: BTreeMap<Vec<usize>, usize>,
    edges: Vec<GkmEdge>,
    table: Arc<GenTable>,
}

impl PartialEq for GkmGraph {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for GkmGraph {}

impl GkmGraph {
    pub fn new(n: usize, l: usize) -> Result<Arc<GkmGraph>> {
        if n == 0 || l > n {
            return Err(Error::domain(format!(
                "moment graph needs 1 <= n and l <= n, got n = {n}, l = {l}"
            )));
        }
        fn enumerate(start: usize, n: usize, l: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == l {
                out.push(cur.clone());
                return;
            }
            for v in start..=n {
                if n - v + 1 < l - cur.len() {
                    break;
                }
                cur.push(v);
                enumerate(v + 1, n, l, cur, out);
                cur.pop();
            }
        }
        let mut vertices: Vec<Vec<usize>> = Vec::new();
        enumerate(1, n, l, &mut Vec::new(), &mut vertices);
        let vertex_by_subset: BTreeMap<Vec<usize>, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let partitions = vertices.iter().map(|s| subset_to_partition(s, l)).collect();
        let mut edges = Vec::new();
        for (a, s) in vertices.iter().enumerate() {
            for &i in s {
                for j in 1..=n {
                    if j >= i || s.contains(&j) {
                        continue;
                    }
                    // exchange i (in S) for j < i (not in S): records each
                    // unordered edge exactly once, from its upper end.
                    let mut t: Vec<usize> = s.iter().copied().filter(|&x| x != i).collect();
                    t.push(j);
                    t.sort_unstable();
                    let b = vertex_by_subset[&t];
                    edges.push(GkmEdge { a, b, i, j });
                }
            }
        }
        let table = GenTable::shared(
            (1..=n)
                .map(|k| Generator::new(format!("u_{k}"), 1))
                .collect(),
        )?;
        Ok(Arc::new(GkmGraph {
            n,
            l,
            vertices,
            partitions,
            vertex_by_subset,
            edges,
            table,
        }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_subset(&self, idx: usize) -> &[usize] {
        &self.vertices[idx]
    }

    pub fn vertex_partition(&self, idx: usize) -> &Partition {
        &self.partitions[idx]
    }

    pub fn vertex_of_partition(&self, lambda: &Partition) -> Option<usize> {
        if !lambda.fits_in_box(self.l, (self.n - self.l) as u32) {
            return None;
        }
        let subset = partition_to_subset(lambda, self.l);
        self.vertex_by_subset.get(&subset).copied()
    }

    pub fn edges(&self) -> &[GkmEdge] {
        &self.edges
    }

    /// Generator table `u_1 .. u_n` shared by all values on this graph.
    pub fn table(&self) -> &Arc<GenTable> {
        &self.table
    }

    /// Rows x cols of the partition box: l rows, n - l columns.
    pub fn box_dims(&self) -> (usize, u32) {
        (self.l, (self.n - self.l) as u32)
    }

    fn same_as(&self, other: &GkmGraph) -> bool {
        self.n == other.n && self.l == other.l
    }
}

fn subset_to_partition(subset: &[usize], l: usize) -> Partition {
    // subset ascending; descending entry a_k (k = 1..l) gives lambda_k = a_k - (l-k+1).
    let parts: Vec<u32> = (0..l)
        .map(|k| (subset[l - 1 - k] - (l - k)) as u32)
        .take_while(|&p| p > 0)
        .collect();
    Partition::new(parts).expect("subset encodes a weakly decreasing shape")
}

fn partition_to_subset(lambda: &Partition, l: usize) -> Vec<usize> {
    let mut subset: Vec<usize> = (0..l)
        .map(|k| lambda.part(k) as usize + (l - k))
        .collect();
    subset.reverse();
    subset
}

/// A tuple of polynomial values, one per fixed point of the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkmClass {
    graph: Arc<GkmGraph>,
    label: Option<Partition>,
    values: Vec<GradedPoly>,
}

impl GkmClass {
    /// Wraps explicit values. Validates lengths and tables, not the edge
    /// congruences; `gkm_check` reports those separately so that perturbed
    /// classes can be built and diagnosed.
    pub fn from_values(graph: &Arc<GkmGraph>, values: Vec<GradedPoly>) -> Result<GkmClass> {
        if values.len() != graph.num_vertices() {
            return Err(Error::domain(format!(
                "expected {} vertex values, got {}",
                graph.num_vertices(),
                values.len()
            )));
        }
        for v in &values {
            if v.table() != graph.table() && **v.table() != **graph.table() {
                return Err(Error::domain("vertex value over a foreign table"));
            }
        }
        Ok(GkmClass {
            graph: Arc::clone(graph),
            label: None,
            values,
        })
    }

    pub fn graph(&self) -> &Arc<GkmGraph> {
        &self.graph
    }

    pub fn label(&self) -> Option<&Partition> {
        self.label.as_ref()
    }

    pub fn values(&self) -> &[GradedPoly] {
        &self.values
    }

    pub fn value(&self, vertex: usize) -> &GradedPoly {
        &self.values[vertex]
    }

    /// Replaces one vertex value (used to build deliberately broken classes).
    pub fn with_value(&self, vertex: usize, value: GradedPoly) -> GkmClass {
        let mut out = self.clone();
        out.values[vertex] = value;
        out.label = None;
        out
    }

    fn check_graph(&self, rhs: &GkmClass) -> Result<()> {
        if !self.graph.same_as(&rhs.graph) {
            return Err(Error::domain("classes on different moment graphs"));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &GkmClass) -> Result<GkmClass> {
        self.check_graph(rhs)?;
        let values = self
            .values
            .iter()
            .zip(&rhs.values)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(GkmClass {
            graph: Arc::clone(&self.graph),
            label: None,
            values,
        })
    }

    pub fn scale(&self, c: &Rat) -> GkmClass {
        GkmClass {
            graph: Arc::clone(&self.graph),
            label: None,
            values: self.values.iter().map(|v| v.scale(c)).collect(),
        }
    }

    /// Pointwise (cup) product.
    pub fn pointwise_product(&self, rhs: &GkmClass) -> Result<GkmClass> {
        self.check_graph(rhs)?;
        let values = self
            .values
            .iter()
            .zip(&rhs.values)
            .map(|(a, b)| a.checked_mul(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(GkmClass {
            graph: Arc::clone(&self.graph),
            label: None,
            values,
        })
    }

    /// Edges whose end values fail the divisibility condition.
    pub fn gkm_check(&self) -> Vec<GkmEdge> {
        self.graph
            .edges
            .iter()
            .copied()
            .filter(|e| {
                let diff = self.values[e.a].sub(&self.values[e.b]);
                !substitute_equal(&diff, e.i, e.j).is_zero()
            })
            .collect()
    }

    /// Circle specialization u_k -> k * u; values become univariate.
    pub fn specialize_rotation(&self) -> RotationClass {
        let table = rotation_table();
        let images: Vec<GradedPoly> = (1..=self.graph.n)
            .map(|k| {
                GradedPoly::from_terms(
                    &table,
                    None,
                    [(vec![1u32], Rat::from_int(k as i64))],
                )
            })
            .collect();
        let values = self
            .values
            .iter()
            .map(|v| {
                v.substitute_with(&table, None, &images)
                    .expect("rotation images are well formed")
            })
            .collect();
        RotationClass {
            graph: Arc::clone(&self.graph),
            label: self.label.clone(),
            values,
        }
    }

    /// Forgetful specialization to ordinary cohomology: expand over Q[u] in
    /// the equivariant Schubert basis (triangular in the partition order)
    /// and keep each coefficient's constant term. Returns the expansion in
    /// the Schur basis, on component d = 0.
    pub fn specialize_ordinary(&self) -> Result<SchubertClass> {
        let basis = RotationBasis::new(&self.graph)?;
        basis.expand_to_ordinary(&self.specialize_rotation())
    }
}

/// Shared table for circle-specialized values: the single generator `u`.
fn rotation_table() -> Arc<GenTable> {
    GenTable::shared(vec![Generator::new("u", 1)]).expect("single generator")
}

/// Substitutes u_i -> u_j, leaving the table unchanged.
fn substitute_equal(p: &GradedPoly, i: usize, j: usize) -> GradedPoly {
    let table = p.table();
    let images: Vec<GradedPoly> = (0..table.len())
        .map(|k| {
            let target = if k + 1 == i { j - 1 } else { k };
            GradedPoly::generator(table, None, target).expect("index in range")
        })
        .collect();
    p.substitute_with(table, None, &images)
        .expect("same-table substitution")
}

/// Exact division by `u_a - u_b` (1-based indices): synthetic division in the
/// variable u_a around u_b. Returns None when the remainder is nonzero.
fn divide_by_linear(p: &GradedPoly, a: usize, b: usize) -> Option<GradedPoly> {
    assert_ne!(a, b);
    let table = Arc::clone(p.table());
    let ai = a - 1;
    let bi = b - 1;
    // Split into coefficient maps by the exponent of u_a.
    let mut layers: BTreeMap<u32, BTreeMap<Vec<u32>, Rat>> = BTreeMap::new();
    for (exps, coeff) in p.terms() {
        let k = exps[ai];
        let mut rest = exps.clone();
        rest[ai] = 0;
        layers
            .entry(k)
            .or_default()
            .insert(rest, coeff.clone());
    }
    let deg = layers.keys().next_back().copied().unwrap_or(0);
    if p.is_zero() {
        return Some(GradedPoly::zero(&table, p.degree_cap()));
    }
    // Quotient layers q_k for k = deg-1 down to 0: q_{k} = A_{k+1} + u_b * q_{k+1}.
    let empty = BTreeMap::new();
    let mut quot: BTreeMap<u32, BTreeMap<Vec<u32>, Rat>> = BTreeMap::new();
    let mut carry: BTreeMap<Vec<u32>, Rat> = BTreeMap::new(); // u_b * q_{k+1}
    for k in (0..deg).rev() {
        let a_layer = layers.get(&(k + 1)).unwrap_or(&empty);
        let mut q = carry.clone();
        for (e, c) in a_layer {
            let slot = q.entry(e.clone()).or_insert_with(Rat::zero);
            *slot += c;
        }
        q.retain(|_, c| !c.is_zero());
        carry = q
            .iter()
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2[bi] += 1;
                (e2, c.clone())
            })
            .collect();
        quot.insert(k, q);
    }
    // Remainder = A_0 + u_b * q_0; must vanish identically.
    let mut rem = carry;
    if let Some(a0) = layers.get(&0) {
        for (e, c) in a0 {
            let slot = rem.entry(e.clone()).or_insert_with(Rat::zero);
            *slot += c;
        }
    }
    rem.retain(|_, c| !c.is_zero());
    if !rem.is_empty() {
        return None;
    }
    let terms = quot.into_iter().flat_map(|(k, layer)| {
        layer.into_iter().map(move |(mut e, c)| {
            e[ai] = k;
            (e, c)
        })
    });
    Some(GradedPoly::from_terms(&table, p.degree_cap(), terms))
}

/// The equivariant Schubert class for `lambda` on the moment graph.
pub fn equivariant_schubert(graph: &Arc<GkmGraph>, lambda: &Partition) -> Result<GkmClass> {
    let (rows, cols) = graph.box_dims();
    if !lambda.fits_in_box(rows, cols) {
        return Err(Error::domain(format!(
            "partition {lambda} does not fit in the {rows} x {cols} box of Gr({}, {})",
            graph.l(),
            graph.n()
        )));
    }
    let nv = graph.num_vertices();
    let mut order: Vec<usize> = (0..nv).collect();
    order.sort_by_key(|&v| (graph.partitions[v].size(), v));
    // Down-edges indexed by their upper vertex.
    let mut down: Vec<Vec<&GkmEdge>> = vec![Vec::new(); nv];
    for e in &graph.edges {
        down[e.a].push(e);
    }
    for list in &mut down {
        list.sort_by_key(|e| (e.i, e.j));
    }

    let mut values: Vec<GradedPoly> = vec![GradedPoly::zero(graph.table(), None); nv];
    for &v in &order {
        let mu = &graph.partitions[v];
        if !mu.contains(lambda) {
            continue; // stays zero
        }
        if mu == lambda {
            // Product of the down-edge weights at the center vertex.
            let mut acc = GradedPoly::one(graph.table(), None);
            for e in &down[v] {
                acc = acc.mul(&edge_weight(graph, e));
            }
            values[v] = acc;
            continue;
        }
        // Iterated CRT over the down-edge congruences value = values[b] mod (u_i - u_j).
        let mut solution = GradedPoly::zero(graph.table(), None);
        let mut modulus = GradedPoly::one(graph.table(), None);
        let mut factors: Vec<(usize, usize)> = Vec::new();
        for e in &down[v] {
            let need = values[e.b].sub(&solution);
            let need_bar = substitute_equal(&need, e.i, e.j);
            if !need_bar.is_zero() {
                // Divide by the modulus with u_i identified to u_j; the
                // substituted factors stay pairwise distinct linear forms.
                let mut t = need_bar;
                for &(fi, fj) in &factors {
                    let gi = if fi == e.i { e.j } else { fi };
                    let gj = if fj == e.i { e.j } else { fj };
                    t = divide_by_linear(&t, gi, gj).ok_or_else(|| {
                        Error::internal(format!(
                            "inconsistent congruence system at vertex {:?}",
                            graph.vertices[v]
                        ))
                    })?;
                }
                solution = solution.add(&modulus.mul(&t));
            }
            modulus = modulus.mul(&edge_weight(graph, e));
            factors.push((e.i, e.j));
        }
        values[v] = solution;
    }
    Ok(GkmClass {
        graph: Arc::clone(graph),
        label: Some(lambda.clone()),
        values,
    })
}

fn edge_weight(graph: &Arc<GkmGraph>, e: &GkmEdge) -> GradedPoly {
    let ui = GradedPoly::generator(graph.table(), None, e.i - 1).expect("in range");
    let uj = GradedPoly::generator(graph.table(), None, e.j - 1).expect("in range");
    ui.sub(&uj)
}

/// Circle-specialized class: one polynomial in the single variable `u` per
/// vertex. Obtained from `GkmClass::specialize_rotation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationClass {
    graph: Arc<GkmGraph>,
    label: Option<Partition>,
    values: Vec<GradedPoly>,
}

impl RotationClass {
    pub fn graph(&self) -> &Arc<GkmGraph> {
        &self.graph
    }

    pub fn label(&self) -> Option<&Partition> {
        self.label.as_ref()
    }

    pub fn values(&self) -> &[GradedPoly] {
        &self.values
    }

    /// After the circle specialization every edge weight becomes a nonzero
    /// multiple of `u`, so differences across any pair of vertices joined by
    /// an edge must lose their constant term.
    pub fn differences_divisible_by_u(&self) -> bool {
        self.graph.edges.iter().all(|e| {
            let diff = self.values[e.a].sub(&self.values[e.b]);
            diff.constant_term().is_zero()
        })
    }

    /// Pointwise product (the specialization is a ring map, so this matches
    /// specializing the full-torus product).
    pub fn pointwise_product(&self, rhs: &RotationClass) -> Result<RotationClass> {
        if !self.graph.same_as(&rhs.graph) {
            return Err(Error::domain("classes on different moment graphs"));
        }
        let values = self
            .values
            .iter()
            .zip(&rhs.values)
            .map(|(a, b)| a.checked_mul(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(RotationClass {
            graph: Arc::clone(&self.graph),
            label: None,
            values,
        })
    }
}

/// The circle-specialized equivariant Schubert basis of a graph, with the
/// diagonal normalization scalars, ready to expand arbitrary classes.
pub struct RotationBasis {
    graph: Arc<GkmGraph>,
    /// Box partitions ordered by size; (partition, its vertex, rotated class,
    /// diagonal scalar n_kappa with self-restriction n_kappa * u^{|kappa|}).
    entries: Vec<(Partition, usize, RotationClass, Rat)>,
}

impl RotationBasis {
    pub fn new(graph: &Arc<GkmGraph>) -> Result<RotationBasis> {
        let (rows, cols) = graph.box_dims();
        let mut entries = Vec::new();
        for kappa in Partition::all_in_box(rows, cols) {
            let vertex = graph
                .vertex_of_partition(&kappa)
                .ok_or_else(|| Error::internal("box partition must have a vertex"))?;
            let class = equivariant_schubert(graph, &kappa)?.specialize_rotation();
            let size = kappa.size();
            let diag = class.values[vertex].coeff(&[size]);
            if diag.is_zero() {
                return Err(Error::internal("vanishing diagonal restriction"));
            }
            entries.push((kappa, vertex, class, diag));
        }
        Ok(RotationBasis {
            graph: Arc::clone(graph),
            entries,
        })
    }

    pub fn graph(&self) -> &Arc<GkmGraph> {
        &self.graph
    }

    /// The rotated basis class for one partition.
    pub fn class(&self, kappa: &Partition) -> Option<&RotationClass> {
        self.entries
            .iter()
            .find(|(p, _, _, _)| p == kappa)
            .map(|(_, _, c, _)| c)
    }

    /// Expands a rotated class over Q[u] in the basis and evaluates the
    /// coefficients at u = 0, producing the ordinary Schur expansion. The
    /// triangular elimination consumes the class completely; anything left
    /// over means the input was not a genuine class on this graph.
    pub fn expand_to_ordinary(&self, class: &RotationClass) -> Result<SchubertClass> {
        if !self.graph.same_as(&class.graph) {
            return Err(Error::domain("class on a different moment graph"));
        }
        let mut work = class.values.to_vec();
        let mut out = SchubertClass::zero(0);
        for (kappa, vertex, basis_class, diag) in &self.entries {
            let val = &work[*vertex];
            if val.is_zero() {
                continue;
            }
            let size = kappa.size();
            // Coefficient in Q[u]: value / (diag * u^size); exact or the
            // input was not in the span.
            let mut coeff_terms = Vec::new();
            for (exps, c) in val.terms() {
                if exps[0] < size {
                    return Err(Error::domain(
                        "value not divisible by the diagonal restriction; not a class",
                    ));
                }
                coeff_terms.push((vec![exps[0] - size], c / diag));
            }
            let table = Arc::clone(val.table());
            let coeff = GradedPoly::from_terms(&table, None, coeff_terms);
            for (slot, basis_val) in work.iter_mut().zip(&basis_class.values) {
                *slot = slot.sub(&coeff.mul(basis_val));
            }
            let constant = coeff.constant_term();
            if !constant.is_zero() {
                out.add_term(kappa.clone(), constant);
            }
        }
        if work.iter().any(|v| !v.is_zero()) {
            return Err(Error::domain(
                "expansion left a nonzero remainder; not a class on this graph",
            ));
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct VertexValueJson {
    vertex: Vec<usize>,
    poly: GradedPoly,
}

#[derive(Serialize, Deserialize)]
struct GkmClassJson {
    n: usize,
    l: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<Partition>,
    values: Vec<VertexValueJson>,
}

impl Serialize for GkmClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_vertex_values(
            self.graph.n,
            self.graph.l,
            &self.label,
            &self.graph,
            &self.values,
            serializer,
        )
    }
}

impl Serialize for RotationClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_vertex_values(
            self.graph.n,
            self.graph.l,
            &self.label,
            &self.graph,
            &self.values,
            serializer,
        )
    }
}

fn serialize_vertex_values<S: Serializer>(
    n: usize,
    l: usize,
    label: &Option<Partition>,
    graph: &Arc<GkmGraph>,
    values: &[GradedPoly],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Ref<'a> {
        vertex: &'a [usize],
        poly: &'a GradedPoly,
    }
    let rows: Vec<Ref> = values
        .iter()
        .enumerate()
        .map(|(idx, poly)| Ref {
            vertex: graph.vertex_subset(idx),
            poly,
        })
        .collect();
    let mut st = serializer.serialize_struct("GkmClass", 4)?;
    st.serialize_field("n", &n)?;
    st.serialize_field("l", &l)?;
    if let Some(lam) = label {
        st.serialize_field("lambda", lam)?;
    } else {
        st.skip_field("lambda")?;
    }
    st.serialize_field("values", &rows)?;
    st.end()
}

impl<'de> Deserialize<'de> for GkmClass {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = GkmClassJson::deserialize(deserializer)?;
        let graph = GkmGraph::new(raw.n, raw.l).map_err(D::Error::custom)?;
        let mut values: Vec<Option<GradedPoly>> = vec![None; graph.num_vertices()];
        for vv in raw.values {
            let mut key = vv.vertex.clone();
            key.sort_unstable();
            let idx = *graph
                .vertex_by_subset
                .get(&key)
                .ok_or_else(|| D::Error::custom(format!("unknown vertex {:?}", vv.vertex)))?;
            if values[idx].is_some() {
                return Err(D::Error::custom(format!("vertex {:?} repeated", vv.vertex)));
            }
            if **vv.poly.table() != **graph.table() {
                return Err(D::Error::custom("vertex polynomial over a foreign table"));
            }
            let rebuilt = GradedPoly::from_terms(
                graph.table(),
                None,
                vv.poly.terms().map(|(e, c)| (e.clone(), c.clone())),
            );
            values[idx] = Some(rebuilt);
        }
        let values: Vec<GradedPoly> = values
            .into_iter()
            .map(|v| v.ok_or_else(|| D::Error::custom("missing vertex value")))
            .collect::<std::result::Result<_, _>>()?;
        let mut class = GkmClass::from_values(&graph, values).map_err(D::Error::custom)?;
        class.label = raw.lambda;
        Ok(class)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn graph_shape() {
        let g = GkmGraph::new(4, 2).unwrap();
        assert_eq!(g.num_vertices(), 6);
        // Every vertex meets l * (n - l) = 4 edges.
        let mut degree = vec![0; 6];
        for e in g.edges() {
            degree[e.a] += 1;
            degree[e.b] += 1;
        }
        assert!(degree.iter().all(|&d| d == 4));
        // Dictionary: {1,2} is empty, {3,4} is the full 2x2 box.
        let empty = g.vertex_of_partition(&Partition::empty()).unwrap();
        assert_eq!(g.vertex_subset(empty), &[1, 2]);
        let full = g.vertex_of_partition(&p(&[2, 2])).unwrap();
        assert_eq!(g.vertex_subset(full), &[3, 4]);
        // Round trip through the dictionary.
        for idx in 0..g.num_vertices() {
            let lam = g.vertex_partition(idx).clone();
            assert_eq!(g.vertex_of_partition(&lam), Some(idx));
        }
    }

    #[test]
    fn down_degree_matches_partition_size() {
        let g = GkmGraph::new(5, 2).unwrap();
        let mut down = vec![0u32; g.num_vertices()];
        for e in g.edges() {
            down[e.a] += 1;
        }
        for idx in 0..g.num_vertices() {
            assert_eq!(down[idx], g.vertex_partition(idx).size());
        }
    }

    #[test]
    fn smallest_grassmannian_class() {
        // Gr(1, 2): two vertices; sigma_(1) vanishes at the empty vertex and
        // restricts to u_2 - u_1 at the box vertex.
        let g = GkmGraph::new(2, 1).unwrap();
        let cls = equivariant_schubert(&g, &p(&[1])).unwrap();
        let v_empty = g.vertex_of_partition(&Partition::empty()).unwrap();
        let v_box = g.vertex_of_partition(&p(&[1])).unwrap();
        assert!(cls.value(v_empty).is_zero());
        let u1 = GradedPoly::generator(g.table(), None, 0).unwrap();
        let u2 = GradedPoly::generator(g.table(), None, 1).unwrap();
        assert_eq!(*cls.value(v_box), u2.sub(&u1));
        assert!(cls.gkm_check().is_empty());
    }

    #[test]
    fn degree_one_class_support() {
        // Gr(2, 4): sigma_(1) is nonzero at 5 of the 6 vertices.
        let g = GkmGraph::new(4, 2).unwrap();
        let cls = equivariant_schubert(&g, &p(&[1])).unwrap();
        let nonzero = cls.values().iter().filter(|v| !v.is_zero()).count();
        assert_eq!(nonzero, 5);
        assert!(cls.gkm_check().is_empty());
        for v in cls.values() {
            assert!(v.is_homogeneous_of(1));
        }
    }

    #[test]
    fn divisibility_and_perturbation() {
        let g = GkmGraph::new(4, 2).unwrap();
        let cls = equivariant_schubert(&g, &p(&[2, 1])).unwrap();
        assert!(cls.gkm_check().is_empty());
        // Breaking one nonzero value breaks some edge.
        let idx = g.vertex_of_partition(&p(&[2, 2])).unwrap();
        let broken = cls.with_value(idx, cls.value(idx).scale(&Rat::from_int(2)));
        assert!(!broken.gkm_check().is_empty());
    }

    #[test]
    fn triangular_support() {
        let g = GkmGraph::new(5, 2).unwrap();
        for lam in Partition::all_in_box(2, 3) {
            let cls = equivariant_schubert(&g, &lam).unwrap();
            for idx in 0..g.num_vertices() {
                let mu = g.vertex_partition(idx);
                if mu.contains(&lam) {
                    assert!(
                        !cls.value(idx).is_zero(),
                        "sigma_{lam} should be nonzero at {mu}"
                    );
                } else {
                    assert!(cls.value(idx).is_zero());
                }
                assert!(cls.value(idx).is_homogeneous_of(lam.size()));
            }
        }
    }

    #[test]
    fn box_product_reduces_to_lr() {
        // Gr(2, 4): sigma_(2) * sigma_(2) = sigma_(2,2) after forgetting.
        let g = GkmGraph::new(4, 2).unwrap();
        let s2 = equivariant_schubert(&g, &p(&[2])).unwrap();
        let prod = s2.pointwise_product(&s2).unwrap();
        let ordinary = prod.specialize_ordinary().unwrap();
        assert_eq!(
            ordinary,
            SchubertClass::sigma(0, p(&[2, 2]))
        );
        // The same through the rotation route.
        let basis = RotationBasis::new(&g).unwrap();
        let rot_prod = s2
            .specialize_rotation()
            .pointwise_product(&s2.specialize_rotation())
            .unwrap();
        assert_eq!(
            basis.expand_to_ordinary(&rot_prod).unwrap(),
            SchubertClass::sigma(0, p(&[2, 2]))
        );
    }

    #[test]
    fn rotation_keeps_divisibility() {
        let g = GkmGraph::new(4, 2).unwrap();
        let cls = equivariant_schubert(&g, &p(&[2, 1])).unwrap();
        let rot = cls.specialize_rotation();
        assert!(rot.differences_divisible_by_u());
    }

    #[test]
    fn divide_by_linear_exactness() {
        let g = GkmGraph::new(3, 1).unwrap();
        let u1 = GradedPoly::generator(g.table(), None, 0).unwrap();
        let u2 = GradedPoly::generator(g.table(), None, 1).unwrap();
        let u3 = GradedPoly::generator(g.table(), None, 2).unwrap();
        let w = u1.sub(&u2);
        let q = u3.add(&u1).mul(&w).mul(&w);
        let once = divide_by_linear(&q, 1, 2).unwrap();
        assert_eq!(once, u3.add(&u1).mul(&w));
        let twice = divide_by_linear(&once, 1, 2).unwrap();
        assert_eq!(twice, u3.add(&u1));
        // Not divisible: remainder is nonzero.
        assert!(divide_by_linear(&u3, 1, 2).is_none());
    }

    #[test]
    fn json_round_trip() {
        let g = GkmGraph::new(4, 2).unwrap();
        let cls = equivariant_schubert(&g, &p(&[1])).unwrap();
        let s = serde_json::to_string(&cls).unwrap();
        assert!(s.contains("\"lambda\":[1]"));
        assert!(s.contains("\"vertex\":[1,2]"));
        let back: GkmClass = serde_json::from_str(&s).unwrap();
        assert_eq!(back, cls);
        assert_eq!(back.label(), Some(&p(&[1])));
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
