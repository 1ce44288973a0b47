//! Branching generating functions from Coxeter orbits.
//!
//! `Φ` is the set of roots pairing positively with ψ; it has `2h - 3`
//! elements, all positive. Slicing Φ by σ-orbit gives, for each simple node
//! `i`, the numerator
//!
//! ```text
//! z_i(t) = Σ_{φ ∈ Φ ∩ orbit(β_i)} t^{n(φ)}
//! ```
//!
//! except at the special node `i*`, where ψ contributes `2t^g` instead of
//! `t^g`. The affine node has `z_0 = 1 + t^h`. In every case
//! `m_i(t) = z_i(t) / ((1 - t^a)(1 - t^b))` with `a = 2 d_{i*}` and
//! `b = h + 2 - a`.

use serde::Serialize;

use crate::coxeter::{special_index, CoxeterData, ParityClass};
use crate::error::{ensure, Result};
use crate::mckay::{extended_graph, McKayGraph};
use crate::rootsys::{DiagramType, Family, RootSystem};
use crate::seriescalc::{series_div_geom, IntPolynomial, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BranchParams {
    pub a: usize,
    pub b: usize,
    pub h: usize,
    pub g: usize,
    /// Simple index of the special node.
    pub istar: usize,
    /// `|F| = ab/4`.
    pub order_f: usize,
    /// `|F*| = ab/2`.
    pub order_fstar: usize,
}

/// `a = 2 d_{i*}`, `b = h + 2 - a`, `|F*| = ab/2`.
pub fn branch_params(rs: &RootSystem) -> Result<BranchParams> {
    let h = rs.coxeter_number();
    let istar = special_index(rs);
    let a = 2 * rs.marks()[istar] as usize;
    ensure!(a <= h + 2, "a = {a} exceeds h + 2");
    let b = h + 2 - a;
    ensure!(a % 2 == 0 && b % 2 == 0, "a = {a}, b = {b} not both even");
    // a < b except for the two degenerate cases A1 (a = b = 2) and D4 (a = b = 4)
    ensure!(a <= b, "a = {a} > b = {b}");
    ensure!((a * b) % 4 == 0, "ab = {} not divisible by 4", a * b);
    Ok(BranchParams {
        a,
        b,
        h,
        g: h / 2,
        istar,
        order_f: a * b / 4,
        order_fstar: a * b / 2,
    })
}

/// `(a, b, h, g)` from the closed forms per family: `A_{2n-1}` gives
/// `(2, 2n, 2n, n)`, `D_{n+2}` gives `(4, 2n, 2n+2, n+1)`, and E6/E7/E8 are
/// `(6, 8, 12, 6)`, `(8, 12, 18, 9)`, `(12, 20, 30, 15)`.
pub fn closed_form_params(dt: DiagramType) -> (usize, usize, usize, usize) {
    let l = dt.rank();
    match dt.family() {
        Family::A => {
            let n = (l + 1) / 2;
            (2, 2 * n, 2 * n, n)
        }
        Family::D => {
            let n = l - 2;
            (4, 2 * n, 2 * n + 2, n + 1)
        }
        Family::E => match l {
            6 => (6, 8, 12, 6),
            7 => (8, 12, 18, 9),
            _ => (12, 20, 30, 15),
        },
    }
}

/// Name of the rotation group `F` for reports.
pub fn rotation_group_name(dt: DiagramType) -> String {
    let l = dt.rank();
    match dt.family() {
        Family::A => format!("Z{}", (l + 1) / 2),
        Family::D => format!("Dih{}", l - 2),
        Family::E => match l {
            6 => "Alt4".into(),
            7 => "Sym4".into(),
            _ => "Alt5".into(),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeisenbergSubsystem {
    /// Positive-root indices of Φ, ascending.
    phi: Vec<usize>,
    /// `slices[i]` = Φ ∩ orbit(β_i), by simple index.
    slices: Vec<Vec<usize>>,
}

impl HeisenbergSubsystem {
    pub fn roots(&self) -> &[usize] {
        &self.phi
    }

    pub fn slice(&self, i: usize) -> &[usize] {
        &self.slices[i]
    }

    pub fn len(&self) -> usize {
        self.phi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phi.is_empty()
    }
}

pub fn heisenberg_subsystem(rs: &RootSystem, cox: &CoxeterData) -> Result<HeisenbergSubsystem> {
    let psi = rs.highest_root();
    let mut phi = Vec::new();
    for (k, r) in rs.roots().iter().enumerate() {
        if rs.inner_product(psi, r) > 0 {
            ensure!(k < rs.num_positive(), "Φ contains negative root {r}");
            phi.push(k);
        }
    }
    let h = rs.coxeter_number();
    ensure!(
        phi.len() == 2 * h - 3,
        "card Φ = {} but 2h - 3 = {}",
        phi.len(),
        2 * h - 3
    );
    let mut slices = vec![Vec::new(); rs.rank()];
    for &p in &phi {
        slices[cox.orbits.entry(p).orbit].push(p);
    }
    Ok(HeisenbergSubsystem { phi, slices })
}

/// `t^{g-a+2} + t^{g-a+4} + … + t^{g-2} + 2t^g + t^{g+2} + … + t^{g+a-2}`.
pub fn special_closed_form(g: usize, a: usize) -> IntPolynomial {
    assert!(a >= 2 && g + 2 >= a, "closed form needs 2 <= a <= g + 2");
    let lo = g + 2 - a;
    let hi = g + a - 2;
    let mut terms: Vec<(usize, i64)> = (lo..=hi).step_by(2).map(|k| (k, 1)).collect();
    terms.push((g, 1));
    IntPolynomial::from_terms(terms)
}

/// `z_node(t)` for an extended node (`0` is affine, simple index `s` is
/// `s + 1`), with all coefficient and degree bounds enforced.
pub fn z_polynomial(
    rs: &RootSystem,
    cox: &CoxeterData,
    hs: &HeisenbergSubsystem,
    params: &BranchParams,
    node: usize,
) -> Result<IntPolynomial> {
    let h = params.h;
    if node == 0 {
        return Ok(IntPolynomial::from_terms([(0, 1), (h, 1)]));
    }
    let l = rs.rank();
    if node > l {
        return Err(crate::Error::NodeOutOfRange { index: node, max: l });
    }
    let i = node - 1;
    let psi_idx = rs.num_positive() - 1;
    let mut terms: Vec<(usize, i64)> = hs
        .slice(i)
        .iter()
        .filter(|&&p| p != psi_idx)
        .map(|&p| (cox.orbits.entry(p).n, 1))
        .collect();
    let is_special = i == params.istar;
    if is_special {
        ensure!(
            hs.slice(i).contains(&psi_idx),
            "ψ not in the orbit slice of i*"
        );
        terms.push((params.g, 2));
    } else {
        ensure!(!hs.slice(i).contains(&psi_idx), "ψ in orbit slice of node {node} != i*");
    }
    let z = IntPolynomial::from_terms(terms);

    let d = rs.marks()[i];
    let k = cox.bipartition.class_of(i);
    ensure!(z.degree().is_some_and(|deg| deg < h), "deg z_{node} >= h");
    ensure!(
        z.eval_at_one() == 2 * d,
        "z_{node}(1) = {} != 2d = {}",
        z.eval_at_one(),
        2 * d
    );
    for (e, c) in z.terms() {
        ensure!(
            e % 2 == (k % 2) as usize,
            "z_{node} has exponent {e} of wrong parity"
        );
        let bound = if is_special && e == params.g { 2 } else { 1 };
        ensure!(c == bound, "z_{node} coefficient {c} at t^{e}");
    }
    if is_special {
        ensure!(z.coeff(params.g) == 2, "coefficient of t^g in z_i* is not 2");
        ensure!(z.eval_at_one() == params.a as i64, "z_i*(1) != a");
        let closed = special_closed_form(params.g, params.a);
        ensure!(z == closed, "z_i* = {z} differs from closed form {closed}");
    } else {
        ensure!(
            hs.slice(i).len() as i64 == 2 * d,
            "card Φ^{node} = {} != 2d",
            hs.slice(i).len()
        );
    }
    Ok(z)
}

/// Everything needed to answer branching questions for one diagram type.
#[derive(Debug, Clone)]
pub struct Branching {
    rs: RootSystem,
    cox: CoxeterData,
    graph: McKayGraph,
    params: BranchParams,
    hs: HeisenbergSubsystem,
    zpolys: Vec<IntPolynomial>,
}

impl Branching {
    pub fn new(dtype: DiagramType) -> Result<Self> {
        Self::from_root_system(RootSystem::new(dtype)?)
    }

    pub fn from_root_system(rs: RootSystem) -> Result<Self> {
        let cox = CoxeterData::new(&rs)?;
        let graph = extended_graph(&rs)?;
        let params = branch_params(&rs)?;
        let hs = heisenberg_subsystem(&rs, &cox)?;
        let zpolys = (0..=rs.rank())
            .map(|node| z_polynomial(&rs, &cox, &hs, &params, node))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            rs,
            cox,
            graph,
            params,
            hs,
            zpolys,
        })
    }

    pub fn dtype(&self) -> DiagramType {
        self.rs.dtype()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn coxeter(&self) -> &CoxeterData {
        &self.cox
    }

    pub fn graph(&self) -> &McKayGraph {
        &self.graph
    }

    pub fn params(&self) -> &BranchParams {
        &self.params
    }

    pub fn heisenberg(&self) -> &HeisenbergSubsystem {
        &self.hs
    }

    /// Number of extended nodes.
    pub fn num_nodes(&self) -> usize {
        self.zpolys.len()
    }

    /// Extended node index of `i*`.
    pub fn special_node(&self) -> usize {
        self.params.istar + 1
    }

    pub fn z(&self, node: usize) -> Result<&IntPolynomial> {
        self.graph.check_node(node)?;
        Ok(&self.zpolys[node])
    }

    pub fn z_polynomials(&self) -> &[IntPolynomial] {
        &self.zpolys
    }

    /// Parity class of an extended node; the affine node counts as class 2.
    pub fn class_of_node(&self, node: usize) -> ParityClass {
        if node == 0 {
            2
        } else {
            self.cox.bipartition.class_of(node - 1)
        }
    }

    /// `m_node(t)` to order `order`.
    pub fn series(&self, node: usize, order: usize) -> Result<TruncatedSeries> {
        let z = self.z(node)?;
        let s = series_div_geom(z, self.params.a, self.params.b, order);
        let k = self.class_of_node(node) as usize;
        for (n, &c) in s.coeffs().iter().enumerate() {
            ensure!(c >= 0, "{}: m_({n},{node}) = {c} < 0", self.dtype());
            ensure!(
                c == 0 || n % 2 == k % 2,
                "{}: m_({n},{node}) = {c} violates parity",
                self.dtype()
            );
        }
        Ok(s)
    }

    /// `m_{n,node}`: multiplicity of `γ_node` in `π_n`.
    pub fn multiplicity(&self, n: usize, node: usize) -> Result<i64> {
        Ok(self.series(node, n)?.coeff(n))
    }

    /// Full multiplicity vectors for `n = 0..=order`, indexed `[n][node]`.
    pub fn multiplicity_table(&self, order: usize) -> Result<Vec<Vec<i64>>> {
        let cols = (0..self.num_nodes())
            .map(|node| self.series(node, order))
            .collect::<Result<Vec<_>>>()?;
        Ok((0..=order)
            .map(|n| cols.iter().map(|s| s.coeff(n)).collect())
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn br(s: &str) -> Branching {
        Branching::new(s.parse().unwrap()).unwrap()
    }

    fn poly(terms: &[(usize, i64)]) -> IntPolynomial {
        IntPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn e8_two_nearest_affine() {
        let b = br("E8");
        let node = b.graph().find_label(2, 1).unwrap();
        assert_eq!(*b.z(node).unwrap(), poly(&[(1, 1), (11, 1), (19, 1), (29, 1)]));
    }

    #[test]
    fn e8_special() {
        let b = br("E8");
        let expected = poly(&[
            (5, 1),
            (7, 1),
            (9, 1),
            (11, 1),
            (13, 1),
            (15, 2),
            (17, 1),
            (19, 1),
            (21, 1),
            (23, 1),
            (25, 1),
        ]);
        assert_eq!(*b.z(b.special_node()).unwrap(), expected);
        assert_eq!(b.z(b.special_node()).unwrap().eval_at_one(), 12);
    }

    #[test]
    fn a7_special_is_single_term() {
        let b = br("A7");
        assert_eq!(*b.z(b.special_node()).unwrap(), poly(&[(4, 2)]));
        assert_eq!(special_closed_form(4, 2), poly(&[(4, 2)]));
    }

    #[test]
    fn a3_by_hand() {
        let b = br("A3");
        assert_eq!(b.heisenberg().len(), 5);
        assert_eq!(*b.z(1).unwrap(), poly(&[(1, 1), (3, 1)]));
        assert_eq!(*b.z(3).unwrap(), poly(&[(1, 1), (3, 1)]));
        assert_eq!(*b.z(2).unwrap(), poly(&[(2, 2)]));
        assert_eq!(*b.z(0).unwrap(), poly(&[(0, 1), (4, 1)]));
        // McKay recursion gives v2 = e0 + 2 e2
        assert_eq!(b.multiplicity(2, 2).unwrap(), 2);
        assert_eq!(b.multiplicity(2, 0).unwrap(), 1);
    }

    #[test]
    fn params_rows() {
        let e7 = branch_params(&RootSystem::new("E7".parse().unwrap()).unwrap()).unwrap();
        assert_eq!((e7.a, e7.b, e7.h, e7.g), (8, 12, 18, 9));
        let e8 = branch_params(&RootSystem::new("E8".parse().unwrap()).unwrap()).unwrap();
        assert_eq!(e8.order_f, 60);
        assert_eq!(e8.order_fstar, 120);
        for n in 1..=7 {
            let dt: DiagramType = format!("A{}", 2 * n - 1).parse().unwrap();
            let p = branch_params(&RootSystem::new(dt).unwrap()).unwrap();
            assert_eq!((p.a, p.b), (2, 2 * n));
        }
        for dt in DiagramType::table_types() {
            let p = branch_params(&RootSystem::new(dt).unwrap()).unwrap();
            assert_eq!((p.a, p.b, p.h, p.g), closed_form_params(dt), "{dt}");
        }
    }

    #[test]
    fn e8_cardinality_of_phi() {
        assert_eq!(br("E8").heisenberg().len(), 57);
    }

    #[test]
    fn e8_invariant_series() {
        let s = br("E8").series(0, 30).unwrap();
        let support: Vec<usize> = (0..=30).filter(|&n| s.coeff(n) != 0).collect();
        assert_eq!(support, vec![0, 12, 20, 24, 30]);
        assert!(support.iter().all(|&n| s.coeff(n) == 1));
    }

    #[test]
    fn trivial_level() {
        for s in ["A1", "A5", "D4", "D7", "E6", "E7", "E8"] {
            let b = br(s);
            assert_eq!(b.multiplicity(0, 0).unwrap(), 1);
            for node in 1..b.num_nodes() {
                assert_eq!(b.multiplicity(0, node).unwrap(), 0);
            }
        }
        let e8 = br("E8");
        assert_eq!(e8.multiplicity(1, 8).unwrap(), 1);
    }

    #[test]
    fn special_symmetry() {
        for dt in DiagramType::table_types() {
            let b = Branching::new(dt).unwrap();
            let z = b.z(b.special_node()).unwrap();
            assert_eq!(z.reciprocal(b.params().h), *z, "{dt}");
        }
    }

    #[test]
    fn out_of_range_node() {
        let b = br("D5");
        assert!(b.z(6).is_err());
        assert!(b.series(7, 3).is_err());
    }

    #[test]
    fn degenerate_ranks() {
        let a1 = br("A1");
        assert_eq!((a1.params().a, a1.params().b), (2, 2));
        assert_eq!(*a1.z(1).unwrap(), poly(&[(1, 2)]));
        let d4 = br("D4");
        assert_eq!((d4.params().a, d4.params().b), (4, 4));
    }
}
