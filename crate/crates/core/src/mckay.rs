//! Extended Dynkin graph and the Clebsch–Gordan recursion for multiplicities.
//!
//! Tensoring with the defining 2-dimensional representation γ acts on the
//! irreducibles of the finite group by the adjacency matrix `A` of the
//! extended diagram. Since `π_n ⊗ π_1 = π_{n+1} ⊕ π_{n-1}`, the multiplicity
//! vectors obey `v_{n+1} = A v_n - v_{n-1}` with `v_0` the trivial node.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{ensure, Error, Result};
use crate::rootsys::{DiagramType, Family, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct McKayGraph {
    #[serde(skip)]
    dtype: Option<DiagramType>,
    #[serde(rename = "type")]
    name: String,
    adjacency: Vec<Vec<i64>>,
    marks: Vec<i64>,
    distance: Vec<usize>,
}

impl McKayGraph {
    /// `None` for the cyclic graphs of even-rank type A, which have no
    /// accepted [`DiagramType`].
    pub fn dtype(&self) -> Option<DiagramType> {
        self.dtype
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of nodes, `rank + 1`.
    pub fn size(&self) -> usize {
        self.marks.len()
    }

    pub fn adjacency(&self) -> &[Vec<i64>] {
        &self.adjacency
    }

    /// Marks indexed by extended node; `marks()[0] == 1`.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    /// Graph distance from the affine node.
    pub fn distance(&self) -> &[usize] {
        &self.distance
    }

    /// `(mark, distance)` report label of an extended node.
    pub fn label(&self, node: usize) -> (i64, usize) {
        (self.marks[node], self.distance[node])
    }

    /// Extended Cartan matrix `C = 2 Id - A`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| 2 * (i == j) as i64 - self.adjacency[i][j])
                    .collect()
            })
            .collect()
    }

    /// Neighbours of `node` (with multiplicity folded into `adjacency`).
    pub fn neighbors(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[node]
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(j, _)| j)
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if node < self.size() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                index: node,
                max: self.size() - 1,
            })
        }
    }

    /// Resolves a `(mark, distance)` pair to the unique extended node
    /// carrying it.
    pub fn find_label(&self, mark: i64, distance: usize) -> Result<usize> {
        let hits: Vec<usize> = (0..self.size())
            .filter(|&i| self.label(i) == (mark, distance))
            .collect();
        match hits.as_slice() {
            [one] => Ok(*one),
            [] => Err(Error::NodeSelector(format!(
                "({mark},{distance}) matches no node of {}",
                self.name
            ))),
            many => Err(Error::NodeSelector(format!(
                "({mark},{distance}) is ambiguous in {}: nodes {many:?}",
                self.name
            ))),
        }
    }
}

/// Adds the affine node `α_0 = -ψ`: `A_{0j} = (ψ, α_j)`, and `A_{ij}` for
/// simple nodes is the Dynkin adjacency.
pub fn extended_graph(rs: &RootSystem) -> Result<McKayGraph> {
    let l = rs.rank();
    let n = l + 1;
    let mut adjacency = vec![vec![0i64; n]; n];
    for i in 0..l {
        for j in 0..l {
            if i != j {
                adjacency[i + 1][j + 1] = -rs.cartan()[i][j];
            }
        }
    }
    let psi = rs.highest_root();
    for j in 0..l {
        let p = rs.pair_simple(psi, j);
        ensure!(p >= 0, "(ψ, α_{j}) = {p} < 0");
        adjacency[0][j + 1] = p;
        adjacency[j + 1][0] = p;
    }
    let mut marks = vec![1i64];
    marks.extend_from_slice(rs.marks());

    finish(Some(rs.dtype()), rs.dtype().to_string(), adjacency, marks)
}

/// Extended diagram of `A_rank` for any rank, including the even ranks that
/// are rejected by [`DiagramType`]: an `(rank + 1)`-cycle with all marks 1
/// (a double edge when `rank == 1`). It is the McKay graph of the cyclic
/// group of order `rank + 1`.
pub fn cyclic_graph(rank: usize) -> Result<McKayGraph> {
    ensure!(rank >= 1, "rank must be positive");
    let n = rank + 1;
    let mut adjacency = vec![vec![0i64; n]; n];
    for i in 0..n {
        adjacency[i][(i + 1) % n] += 1;
        adjacency[(i + 1) % n][i] += 1;
    }
    let dtype = DiagramType::new(Family::A, rank).ok();
    finish(dtype, format!("A{rank}"), adjacency, vec![1; n])
}

fn finish(
    dtype: Option<DiagramType>,
    name: String,
    adjacency: Vec<Vec<i64>>,
    marks: Vec<i64>,
) -> Result<McKayGraph> {
    let n = marks.len();
    let mut distance = vec![usize::MAX; n];
    distance[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if adjacency[i][j] != 0 && distance[j] == usize::MAX {
                distance[j] = distance[i] + 1;
                queue.push_back(j);
            }
        }
    }
    ensure!(
        distance.iter().all(|&d| d != usize::MAX),
        "extended diagram is disconnected"
    );

    let g = McKayGraph {
        dtype,
        name,
        adjacency,
        marks,
        distance,
    };
    let c = g.cartan();
    for (i, row) in c.iter().enumerate() {
        let s: i64 = row.iter().zip(&g.marks).map(|(a, m)| a * m).sum();
        ensure!(s == 0, "C·marks != 0 at node {i}");
    }
    Ok(g)
}

/// `m_{n,i}` for one level `n`, indexed by extended node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct MultiplicityVector(pub Vec<i64>);

impl MultiplicityVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// `Σ marks[i] * entries[i]`; equals `n + 1` at level `n`.
    pub fn weighted_dimension(&self, marks: &[i64]) -> i64 {
        self.0.iter().zip(marks).map(|(m, d)| m * d).sum()
    }
}

/// `v_0, …, v_N` from `v_{n+1} = A v_n - v_{n-1}`.
pub fn recursion_oracle(graph: &McKayGraph, order: usize) -> Result<Vec<MultiplicityVector>> {
    let n = graph.size();
    let mut out: Vec<MultiplicityVector> = Vec::with_capacity(order + 1);
    let mut v0 = vec![0i64; n];
    v0[0] = 1;
    out.push(MultiplicityVector(v0));
    for level in 1..=order {
        let cur = &out[level - 1].0;
        let mut next = vec![0i64; n];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut acc: i64 = 0;
            for (j, &c) in cur.iter().enumerate() {
                let term = graph.adjacency[i][j]
                    .checked_mul(c)
                    .ok_or(Error::Overflow("McKay recursion"))?;
                acc = acc.checked_add(term).ok_or(Error::Overflow("McKay recursion"))?;
            }
            if level >= 2 {
                acc = acc
                    .checked_sub(out[level - 2].0[i])
                    .ok_or(Error::Overflow("McKay recursion"))?;
            }
            ensure!(
                acc >= 0,
                "{}: negative multiplicity {acc} at n = {level}, node {i}",
                graph.name
            );
            *slot = acc;
        }
        let v = MultiplicityVector(next);
        ensure!(
            v.weighted_dimension(&graph.marks) == level as i64 + 1,
            "{}: sum rule fails at n = {level}",
            graph.name
        );
        out.push(v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(s: &str) -> McKayGraph {
        extended_graph(&RootSystem::new(s.parse().unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn affine_a3_is_a_cycle() {
        let g = graph("A3");
        for i in 0..4 {
            assert_eq!(g.adjacency()[i].iter().sum::<i64>(), 2);
            assert_eq!(g.adjacency()[i][(i + 1) % 4], 1);
        }
        assert_eq!(g.marks(), &[1, 1, 1, 1]);
    }

    #[test]
    fn e8_marks_sum_to_h() {
        let g = graph("E8");
        assert_eq!(g.marks().iter().sum::<i64>(), 30);
        assert_eq!(g.marks(), &[1, 2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![8]);
    }

    #[test]
    fn affine_node_has_one_neighbor_in_d_and_e() {
        for s in ["D4", "D5", "D9", "E6", "E7", "E8"] {
            assert_eq!(graph(s).neighbors(0).count(), 1, "{s}");
        }
        assert_eq!(graph("A7").neighbors(0).count(), 2);
    }

    #[test]
    fn perron_relation() {
        for dt in DiagramType::table_types() {
            let g = extended_graph(&RootSystem::new(dt).unwrap()).unwrap();
            for i in 0..g.size() {
                let s: i64 = (0..g.size()).map(|j| g.adjacency()[i][j] * g.marks()[j]).sum();
                assert_eq!(s, 2 * g.marks()[i], "{dt}");
            }
        }
    }

    #[test]
    fn a1_has_double_edge() {
        let g = graph("A1");
        assert_eq!(g.adjacency(), &[vec![0, 2], vec![2, 0]]);
        let v = recursion_oracle(&g, 3).unwrap();
        assert_eq!(v[1].entries(), &[0, 2]);
        assert_eq!(v[2].entries(), &[3, 0]);
    }

    #[test]
    fn first_levels() {
        let g = graph("E8");
        let v = recursion_oracle(&g, 2).unwrap();
        assert_eq!(v[0].entries()[0], 1);
        assert!(v[0].entries()[1..].iter().all(|&x| x == 0));
        let ones: Vec<usize> = (0..9).filter(|&i| v[1].entries()[i] == 1).collect();
        assert_eq!(ones, vec![8]);
        assert_eq!(v[1].entries().iter().sum::<i64>(), 1);
    }

    #[test]
    fn a3_level_two() {
        // v2 = A v1 - v0 = A(e1 + e3) - e0 = e0 + 2 e2
        let v = recursion_oracle(&graph("A3"), 2).unwrap();
        assert_eq!(v[2].entries(), &[1, 0, 2, 0]);
    }

    #[test]
    fn cyclic_graph_matches_extended_a() {
        for l in [1, 3, 7, 11] {
            let g = graph(&format!("A{l}"));
            let c = cyclic_graph(l).unwrap();
            assert_eq!(c.adjacency(), g.adjacency());
            assert_eq!(c.distance(), g.distance());
            assert_eq!(c.dtype(), g.dtype());
        }
        assert_eq!(cyclic_graph(4).unwrap().dtype(), None);
    }

    #[test]
    fn even_rank_a_recursion() {
        // Z_m: weights -n, -n+2, ..., n of π_n counted mod m
        for l in [2, 4, 6, 12] {
            let m = l + 1;
            let g = cyclic_graph(l).unwrap();
            assert_eq!(g.name(), format!("A{l}"));
            let v = recursion_oracle(&g, 60).unwrap();
            for (n, vn) in v.iter().enumerate() {
                let mut want = vec![0i64; m];
                for j in 0..=n {
                    let w = 2 * j as i64 - n as i64;
                    want[w.rem_euclid(m as i64) as usize] += 1;
                }
                assert_eq!(vn.entries(), want.as_slice(), "A{l} n = {n}");
            }
        }
    }

    #[test]
    fn labels_and_lookup() {
        let g = graph("E8");
        assert_eq!(g.label(8), (2, 1));
        assert_eq!(g.label(1), (2, 7));
        assert_eq!(g.find_label(6, 5).unwrap(), 4);
        assert!(g.find_label(7, 1).is_err());
        let d6 = graph("D6");
        assert!(matches!(d6.find_label(1, 4), Err(Error::NodeSelector(_))));
        assert!(g.check_node(9).is_err());
    }
}
