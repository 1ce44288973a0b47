//! Binary polyhedral groups as unit quaternions, with numerically computed
//! character tables.
//!
//! The quaternion `w + xi + yj + zk` stands for the SU(2) matrix
//! `[[w + xi, y + zi], [-y + zi, w - xi]]`; its trace is `2w`.
//!
//! Generators (exact conventions, so closures are reproducible):
//!
//! | type       | group               | generators                                        |
//! |------------|---------------------|---------------------------------------------------|
//! | `A_{2n-1}` | cyclic, order `2n`  | `cos(π/n) + sin(π/n) i`                           |
//! | `D_{n+2}`  | binary dihedral `4n`| `cos(π/n) + sin(π/n) i`, `j`                      |
//! | `E6`       | binary tetrahedral  | `i`, `j`, `(1 + i + j + k)/2`                     |
//! | `E7`       | binary octahedral   | the E6 generators and `(1 + i)/√2`                |
//! | `E8`       | binary icosahedral  | the E6 generators and `(φ + φ⁻¹ i + j)/2`, `φ = (1+√5)/2` |
//!
//! Characters are extracted by diagonalizing a random Hermitian combination
//! of the (symmetrized) class-multiplication matrices; the seed is fixed.

use std::f64::consts::PI;
use std::ops::Mul;

use nalgebra::{Complex, DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::branching::branch_params;
use crate::error::{ensure, Error, Result};
use crate::mckay::McKayGraph;
use crate::rootsys::{DiagramType, Family, RootSystem};

/// Coordinate tolerance for deduplicating group elements.
pub const DEDUP_EPS: f64 = 1e-9;
/// Maximum distance of a character inner product from an integer.
pub const ROUNDING_EPS: f64 = 1e-6;

const CHARACTER_SEED: u64 = 0x5eed_2c4a_7ab1_e000;

pub type C64 = Complex<f64>;

/// Unit quaternion `w + xi + yj + zk`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Quat {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quat {
    pub const ONE: Quat = Quat::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quat = Quat::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quat = Quat::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quat = Quat::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quat { w, x, y, z }
    }

    pub fn conj(&self) -> Quat {
        Quat::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn neg(&self) -> Quat {
        Quat::new(-self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Trace of the corresponding 2×2 matrix.
    pub fn trace(&self) -> f64 {
        2.0 * self.w
    }

    /// `[[w + xi, y + zi], [-y + zi, w - xi]]`.
    pub fn matrix(&self) -> [[C64; 2]; 2] {
        [
            [C64::new(self.w, self.x), C64::new(self.y, self.z)],
            [C64::new(-self.y, self.z), C64::new(self.w, -self.x)],
        ]
    }

    pub fn approx_eq(&self, other: &Quat, eps: f64) -> bool {
        (self.w - other.w).abs() < eps
            && (self.x - other.x).abs() < eps
            && (self.y - other.y).abs() < eps
            && (self.z - other.z).abs() < eps
    }
}

impl Mul for Quat {
    type Output = Quat;
    fn mul(self, q: Quat) -> Quat {
        let p = self;
        Quat::new(
            p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
        )
    }
}

pub fn generators(dt: DiagramType) -> Vec<Quat> {
    let half_hurwitz = Quat::new(0.5, 0.5, 0.5, 0.5);
    let rot = |n: usize| {
        let t = PI / n as f64;
        Quat::new(t.cos(), t.sin(), 0.0, 0.0)
    };
    let l = dt.rank();
    match dt.family() {
        Family::A => vec![rot(l.div_ceil(2))],
        Family::D => vec![rot(l - 2), Quat::J],
        Family::E => {
            let mut g = vec![Quat::I, Quat::J, half_hurwitz];
            match l {
                6 => {}
                7 => {
                    let s = std::f64::consts::FRAC_1_SQRT_2;
                    g.push(Quat::new(s, s, 0.0, 0.0));
                }
                _ => {
                    let phi = (1.0 + 5f64.sqrt()) / 2.0;
                    g.push(Quat::new(phi / 2.0, 0.5 / phi, 0.5, 0.0));
                }
            }
            g
        }
    }
}

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    dtype: DiagramType,
    elements: Vec<Quat>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    minus_identity: usize,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl FiniteGroup {
    pub fn dtype(&self) -> DiagramType {
        self.dtype
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Quat] {
        &self.elements
    }

    /// Index of the product `elements[a] * elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// The identity is always element 0.
    pub fn identity(&self) -> usize {
        0
    }

    pub fn minus_identity(&self) -> usize {
        self.minus_identity
    }

    /// Conjugacy classes; class 0 is `{1}`.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Trace of a representative of each class.
    pub fn class_traces(&self) -> Vec<f64> {
        self.classes
            .iter()
            .map(|c| self.elements[c[0]].trace())
            .collect()
    }

    /// Index of the element within [`DEDUP_EPS`] of `q`.
    pub fn index_of(&self, q: &Quat) -> Option<usize> {
        find_in(&self.elements, q)
    }
}

fn find_in(elements: &[Quat], q: &Quat) -> Option<usize> {
    elements.iter().position(|e| e.approx_eq(q, DEDUP_EPS))
}

/// Closes the generators of `dt` under multiplication and computes the
/// multiplication table and conjugacy classes. The order must come out as
/// `|F*| = ab/2`, and the number of classes as `rank + 1`.
pub fn build_group(dt: DiagramType) -> Result<FiniteGroup> {
    let params = branch_params(&RootSystem::new(dt)?)?;
    let expected = params.order_fstar;
    let gens = generators(dt);
    for g in &gens {
        ensure!((g.norm_sqr() - 1.0).abs() < DEDUP_EPS, "generator {g:?} not unit");
    }

    let mut elements = vec![Quat::ONE];
    let mut head = 0;
    while head < elements.len() {
        let e = elements[head];
        head += 1;
        for g in &gens {
            let p = e * *g;
            if find_in(&elements, &p).is_none() {
                elements.push(p);
                ensure!(
                    elements.len() <= expected,
                    "{dt}: closure exceeds expected order {expected}"
                );
            }
        }
    }
    ensure!(
        elements.len() == expected,
        "{dt}: closure has order {} != {expected}",
        elements.len()
    );

    let n = elements.len();
    let mut table = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in 0..n {
            let p = elements[a] * elements[b];
            table[a][b] = find_in(&elements, &p)
                .ok_or_else(|| Error::check(format!("{dt}: product not closed")))?;
        }
    }
    let mut inverse = vec![usize::MAX; n];
    for a in 0..n {
        inverse[a] = (0..n)
            .find(|&b| table[a][b] == 0)
            .ok_or_else(|| Error::check(format!("{dt}: element {a} has no inverse")))?;
    }
    let minus_identity = find_in(&elements, &Quat::ONE.neg())
        .ok_or_else(|| Error::check(format!("{dt}: -1 not in group")))?;

    let mut group = FiniteGroup {
        dtype: dt,
        elements,
        table,
        inverse,
        minus_identity,
        classes: Vec::new(),
        class_of: Vec::new(),
    };
    conjugacy_classes(&mut group)?;
    Ok(group)
}

/// Partitions the group into conjugacy classes, in order of first element.
pub fn conjugacy_classes(g: &mut FiniteGroup) -> Result<()> {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let mut members = Vec::new();
        for y in 0..n {
            let conj = g.table[g.table[y][x]][g.inverse[y]];
            if class_of[conj] == usize::MAX {
                class_of[conj] = c;
                members.push(conj);
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    let want = g.dtype.rank() + 1;
    ensure!(
        classes.len() == want,
        "{}: {} conjugacy classes, expected {want}",
        g.dtype,
        classes.len()
    );
    ensure!(classes[0] == [0], "identity class is not a singleton");
    ensure!(
        classes[class_of[g.minus_identity]].len() == 1,
        "class of -1 is not a singleton"
    );
    g.classes = classes;
    g.class_of = class_of;
    Ok(())
}

/// `χ_n(g)` for the `(n+1)`-dimensional SU(2) irreducible, from the trace:
/// `χ_0 = 1`, `χ_1 = tr`, `χ_{k+1} = tr·χ_k - χ_{k-1}`.
pub fn su2_character(trace: f64, n: usize) -> f64 {
    let (mut prev, mut cur) = (1.0, trace);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = trace * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    /// `rows[r][c]`: value of irreducible `r` on class `c`.
    rows: Vec<Vec<C64>>,
    dims: Vec<i64>,
    /// Extended McKay node of each row.
    node_map: Vec<usize>,
    /// Row of each extended node.
    row_of_node: Vec<usize>,
    class_sizes: Vec<usize>,
    order: usize,
}

impl CharacterTable {
    pub fn rows(&self) -> &[Vec<C64>] {
        &self.rows
    }

    pub fn dims(&self) -> &[i64] {
        &self.dims
    }

    pub fn node_map(&self) -> &[usize] {
        &self.node_map
    }

    /// Character of the irreducible attached to extended node `node`.
    pub fn character_of_node(&self, node: usize) -> &[C64] {
        &self.rows[self.row_of_node[node]]
    }

    /// `(1/|G|) Σ_g χ(g) conj(ψ(g))` on class functions.
    pub fn inner(&self, chi: &[C64], psi: &[C64]) -> C64 {
        let s: C64 = chi
            .iter()
            .zip(psi)
            .zip(&self.class_sizes)
            .map(|((a, b), &k)| a * b.conj() * k as f64)
            .sum();
        s / self.order as f64
    }
}

fn round_checked(v: C64, what: &str) -> Result<i64> {
    let r = v.re.round();
    let resid = (v.re - r).abs().max(v.im.abs());
    if resid >= ROUNDING_EPS {
        return Err(Error::Tolerance(format!("{what}: {v} is not an integer")));
    }
    Ok(r as i64)
}

/// Computes the irreducible characters of `g` and matches them to the nodes
/// of `graph` using tensor products with the defining character.
pub fn character_table(g: &FiniteGroup, graph: &McKayGraph) -> Result<CharacterTable> {
    let sizes = g.class_sizes();
    let nc = sizes.len();
    let order = g.order();
    ensure!(nc == graph.size(), "class count does not match the McKay graph");

    // class multiplication coefficients: count[r][s][t] = #{x ∈ C_r : x⁻¹ z ∈ C_s}
    // for a fixed z ∈ C_t
    let mut coeff = vec![vec![vec![0f64; nc]; nc]; nc];
    for t in 0..nc {
        let z = g.classes()[t][0];
        for r in 0..nc {
            for &x in &g.classes()[r] {
                let s = g.class_of(g.mul(g.inverse(x), z));
                coeff[r][s][t] += 1.0;
            }
        }
    }
    // K_r = D^{-1/2} N_r D^{1/2} is normal; its eigenvectors are the columns
    // sqrt(|C_t|/|G|) χ(t).
    let k_mats: Vec<DMatrix<C64>> = (0..nc)
        .map(|r| {
            DMatrix::from_fn(nc, nc, |s, t| {
                C64::new(coeff[r][s][t] * (sizes[t] as f64 / sizes[s] as f64).sqrt(), 0.0)
            })
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(CHARACTER_SEED);
    let mut eig = None;
    for _attempt in 0..32 {
        let mut herm = DMatrix::<C64>::zeros(nc, nc);
        for k in &k_mats {
            let kh = k.adjoint();
            let c: f64 = rng.gen_range(-1.0..1.0);
            let d: f64 = rng.gen_range(-1.0..1.0);
            herm += (k + &kh) * C64::new(c, 0.0) + (k - &kh) * C64::new(0.0, d);
        }
        let e = SymmetricEigen::new(herm);
        let mut vals: Vec<f64> = e.eigenvalues.iter().copied().collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let gap = vals.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
        if nc == 1 || gap > 1e-4 {
            eig = Some(e);
            break;
        }
    }
    let eig = eig.ok_or_else(|| Error::Tolerance("no separating class-sum combination".into()))?;

    let mut rows = Vec::with_capacity(nc);
    let mut dims = Vec::with_capacity(nc);
    for col in 0..nc {
        let v = eig.eigenvectors.column(col);
        let v0 = v[0];
        ensure!(v0.norm() > 1e-8, "eigenvector vanishes on the identity class");
        let ratio: Vec<C64> = (0..nc).map(|t| v[t] / v0 / (sizes[t] as f64).sqrt()).collect();
        let norm: f64 = ratio
            .iter()
            .zip(&sizes)
            .map(|(c, &k)| c.norm_sqr() * k as f64)
            .sum();
        let dim_f = (order as f64 / norm).sqrt();
        let dim = dim_f.round();
        ensure!(
            (dim - dim_f).abs() < ROUNDING_EPS && dim >= 1.0,
            "character degree {dim_f} is not a positive integer"
        );
        rows.push(ratio.iter().map(|c| c * dim).collect::<Vec<C64>>());
        dims.push(dim as i64);
    }

    // canonical row order: by degree, then by rounded values
    let key = |row: &Vec<C64>| -> Vec<i64> {
        row.iter()
            .flat_map(|c| [(-c.re * 1e6).round() as i64, (-c.im * 1e6).round() as i64])
            .collect()
    };
    let mut perm: Vec<usize> = (0..nc).collect();
    perm.sort_by(|&a, &b| dims[a].cmp(&dims[b]).then_with(|| key(&rows[a]).cmp(&key(&rows[b]))));
    let rows: Vec<Vec<C64>> = perm.iter().map(|&p| rows[p].clone()).collect();
    let dims: Vec<i64> = perm.iter().map(|&p| dims[p]).collect();

    let mut table = CharacterTable {
        rows,
        dims,
        node_map: Vec::new(),
        row_of_node: Vec::new(),
        class_sizes: sizes.clone(),
        order,
    };

    for a in 0..nc {
        for b in 0..nc {
            let ip = table.inner(&table.rows[a], &table.rows[b]);
            let want = if a == b { 1.0 } else { 0.0 };
            ensure!(
                (ip.re - want).abs() < ROUNDING_EPS && ip.im.abs() < ROUNDING_EPS,
                "rows {a},{b} not orthonormal: {ip}"
            );
        }
    }
    for s in 0..nc {
        for t in 0..nc {
            let v: C64 = (0..nc).map(|r| table.rows[r][s] * table.rows[r][t].conj()).sum();
            let want = if s == t { order as f64 / sizes[s] as f64 } else { 0.0 };
            ensure!(
                (v - C64::new(want, 0.0)).norm() < ROUNDING_EPS * order as f64,
                "columns {s},{t} not orthogonal"
            );
        }
    }

    // tensor-with-γ matrix B[r][s] = <χ_r χ_γ, χ_s>
    let gamma: Vec<C64> = g.class_traces().iter().map(|&t| C64::new(t, 0.0)).collect();
    let mut tensor = vec![vec![0i64; nc]; nc];
    for r in 0..nc {
        let prod: Vec<C64> = table.rows[r].iter().zip(&gamma).map(|(a, b)| a * b).collect();
        for s in 0..nc {
            tensor[r][s] = round_checked(table.inner(&prod, &table.rows[s]), "tensor multiplicity")?;
        }
    }
    let node_map = match_nodes(&table.dims, &table.rows, &tensor, graph)
        .ok_or_else(|| Error::check(format!("{}: characters do not match the McKay graph", g.dtype)))?;
    let mut row_of_node = vec![0; nc];
    for (r, &node) in node_map.iter().enumerate() {
        row_of_node[node] = r;
    }
    table.node_map = node_map;
    table.row_of_node = row_of_node;
    Ok(table)
}

/// First isomorphism (rows → nodes) in canonical search order that sends the
/// trivial character to node 0, preserves degrees/marks and carries the
/// tensor matrix onto the adjacency matrix.
fn match_nodes(
    dims: &[i64],
    rows: &[Vec<C64>],
    tensor: &[Vec<i64>],
    graph: &McKayGraph,
) -> Option<Vec<usize>> {
    let n = dims.len();
    let trivial = (0..n).find(|&r| {
        dims[r] == 1 && rows[r].iter().all(|c| (c - C64::new(1.0, 0.0)).norm() < ROUNDING_EPS)
    })?;
    // visit nodes in breadth-first order from the affine node
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (graph.distance()[i], i));

    let mut row_for = vec![usize::MAX; n];
    let mut used = vec![false; n];
    row_for[0] = trivial;
    used[trivial] = true;

    fn search(
        depth: usize,
        order: &[usize],
        row_for: &mut Vec<usize>,
        used: &mut Vec<bool>,
        dims: &[i64],
        tensor: &[Vec<i64>],
        graph: &McKayGraph,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let node = order[depth];
        for r in 0..dims.len() {
            if used[r] || dims[r] != graph.marks()[node] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&m| {
                let rm = row_for[m];
                tensor[r][rm] == graph.adjacency()[node][m] && tensor[rm][r] == graph.adjacency()[m][node]
            }) && tensor[r][r] == graph.adjacency()[node][node];
            if !consistent {
                continue;
            }
            row_for[node] = r;
            used[r] = true;
            if search(depth + 1, order, row_for, used, dims, tensor, graph) {
                return true;
            }
            used[r] = false;
            row_for[node] = usize::MAX;
        }
        false
    }

    let root_ok = tensor[trivial][trivial] == graph.adjacency()[0][0];
    if !root_ok || !search(1, &order, &mut row_for, &mut used, dims, tensor, graph) {
        return None;
    }
    let mut node_map = vec![0; n];
    for (node, &r) in row_for.iter().enumerate() {
        node_map[r] = node;
    }
    Some(node_map)
}

/// A group together with its McKay-labelled character table.
#[derive(Debug, Clone)]
pub struct CharacterData {
    pub group: FiniteGroup,
    pub table: CharacterTable,
}

impl CharacterData {
    pub fn new(graph: &McKayGraph) -> Result<Self> {
        let dt = graph.dtype().ok_or_else(|| {
            Error::check(format!("{}: no binary polyhedral group", graph.name()))
        })?;
        let group = build_group(dt)?;
        let table = character_table(&group, graph)?;
        Ok(Self { group, table })
    }

    /// Multiplicity of the irreducible at `node` in `π_n`, by the character
    /// inner product, rounded with residual below [`ROUNDING_EPS`].
    pub fn oracle_multiplicity(&self, n: usize, node: usize) -> Result<i64> {
        let chi_n: Vec<C64> = self
            .group
            .class_traces()
            .iter()
            .map(|&t| C64::new(su2_character(t, n), 0.0))
            .collect();
        let v = self.table.inner(&chi_n, self.table.character_of_node(node));
        let m = round_checked(v, &format!("multiplicity of node {node} in π_{n}"))?;
        ensure!(m >= 0, "negative character multiplicity {m}");
        Ok(m)
    }

    /// `dim S^n(C²)^{F*} = (1/|G|) Σ_g χ_n(g)`, averaged over all elements.
    pub fn molien_invariants(&self, n: usize) -> Result<i64> {
        let s: f64 = self
            .group
            .elements()
            .iter()
            .map(|q| su2_character(q.trace(), n))
            .sum();
        round_checked(
            C64::new(s / self.group.order() as f64, 0.0),
            &format!("invariants in degree {n}"),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mckay::extended_graph;

    fn dt(s: &str) -> DiagramType {
        s.parse().unwrap()
    }

    fn chars(s: &str) -> CharacterData {
        let graph = extended_graph(&RootSystem::new(dt(s)).unwrap()).unwrap();
        CharacterData::new(&graph).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(build_group(dt("E8")).unwrap().order(), 120);
        assert_eq!(build_group(dt("E7")).unwrap().order(), 48);
        assert_eq!(build_group(dt("E6")).unwrap().order(), 24);
        assert_eq!(build_group(dt("D5")).unwrap().order(), 12);
        assert_eq!(build_group(dt("A7")).unwrap().order(), 8);
    }

    #[test]
    fn class_counts() {
        let e8 = build_group(dt("E8")).unwrap();
        assert_eq!(e8.classes().len(), 9);
        assert_eq!(e8.classes()[0].len(), 1);
        assert_eq!(build_group(dt("E6")).unwrap().classes().len(), 7);
    }

    #[test]
    fn minus_identity_is_central_involution() {
        for s in ["A3", "D6", "E6", "E7", "E8"] {
            let g = build_group(dt(s)).unwrap();
            let m = g.minus_identity();
            assert_eq!(g.mul(m, m), g.identity());
            for a in 0..g.order() {
                assert_eq!(g.mul(a, m), g.mul(m, a));
            }
        }
    }

    #[test]
    fn associativity_spot_check() {
        let g = build_group(dt("E8")).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let (a, b, c) = (
                rng.gen_range(0..120),
                rng.gen_range(0..120),
                rng.gen_range(0..120),
            );
            assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        }
        for a in 0..120 {
            assert_eq!(g.mul(a, g.inverse(a)), 0);
            assert!((g.elements()[a].norm_sqr() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn su2_characters() {
        for n in 0..20 {
            assert!((su2_character(2.0, n) - (n as f64 + 1.0)).abs() < 1e-12);
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((su2_character(-2.0, n) - sign * (n as f64 + 1.0)).abs() < 1e-12);
        }
        let t = 0.7;
        assert!((su2_character(t, 2) - (t * t - 1.0)).abs() < 1e-15);
        // sin((n+1)θ)/sin θ with 2 cos θ = t
        let theta: f64 = (t / 2.0).acos();
        let direct = (6.0 * theta).sin() / theta.sin();
        assert!((su2_character(t, 5) - direct).abs() < 1e-12);
    }

    #[test]
    fn matrix_form_has_unit_determinant() {
        let g = build_group(dt("E7")).unwrap();
        for q in g.elements() {
            let m = q.matrix();
            let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            assert!((det - C64::new(1.0, 0.0)).norm() < 1e-12);
            assert!(((m[0][0] + m[1][1]).re - q.trace()).abs() < 1e-12);
        }
    }

    #[test]
    fn binary_icosahedral_degrees() {
        let c = chars("E8");
        let mut dims = c.table.dims().to_vec();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
        let trivial = c.table.character_of_node(0);
        assert!(trivial.iter().all(|v| (v - C64::new(1.0, 0.0)).norm() < 1e-9));
        let defining = c.table.character_of_node(8);
        let traces = c.group.class_traces();
        for (v, t) in defining.iter().zip(&traces) {
            assert!((v.re - t).abs() < 1e-9 && v.im.abs() < 1e-9);
        }
        let mc = c.group.class_of(c.group.minus_identity());
        assert!((defining[mc].re + 2.0).abs() < 1e-9);
    }

    #[test]
    fn dims_follow_marks() {
        for s in ["A5", "D4", "D5", "E6", "E7"] {
            let graph = extended_graph(&RootSystem::new(dt(s)).unwrap()).unwrap();
            let c = CharacterData::new(&graph).unwrap();
            for node in 0..graph.size() {
                let row = c.table.character_of_node(node);
                assert!((row[0].re - graph.marks()[node] as f64).abs() < 1e-9, "{s}");
            }
        }
    }

    #[test]
    fn trivial_multiplicities() {
        let c = chars("E6");
        assert_eq!(c.oracle_multiplicity(0, 0).unwrap(), 1);
        for node in 1..7 {
            assert_eq!(c.oracle_multiplicity(0, node).unwrap(), 0);
        }
        assert_eq!(c.molien_invariants(0).unwrap(), 1);
        assert_eq!(c.molien_invariants(6).unwrap(), 1);
        assert_eq!(c.molien_invariants(2).unwrap(), 0);
    }
}
