//! Simply-laced root systems in the simple-root basis.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{ensure, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    D,
    E,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        }
    }
}

/// An accepted ADE diagram: `A` with odd rank, `D` with rank at least 4,
/// or `E6`, `E7`, `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramType {
    family: Family,
    rank: usize,
}

impl DiagramType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A if rank >= 1 && rank % 2 == 0 => return Err(Error::ExcludedType(rank)),
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if !ok {
            return Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            });
        }
        Ok(Self { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Edges of the Dynkin diagram as pairs of simple indices, `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let l = self.rank;
        match self.family {
            Family::A => (0..l - 1).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut e: Vec<_> = (0..l - 2).map(|i| (i, i + 1)).collect();
                e.push((l - 3, l - 1));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..l - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// The types listed in the parameter table: A3..A13 (odd), D4..D12,
    /// E6, E7, E8.
    pub fn table_types() -> Vec<DiagramType> {
        let mut out = Vec::new();
        out.extend((3..=13).step_by(2).map(|l| DiagramType { family: Family::A, rank: l }));
        out.extend((4..=12).map(|l| DiagramType { family: Family::D, rank: l }));
        out.extend((6..=8).map(|l| DiagramType { family: Family::E, rank: l }));
        out
    }
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for DiagramType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(Error::Parse(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(s.to_string()))?;
        DiagramType::new(family, rank)
    }
}

impl Serialize for DiagramType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Integer combination of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root(coeffs)
    }

    /// The simple root with simple index `i` in rank `rank`.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    fn scaled_add(&self, k: i64, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(x, y)| x + k * y).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        self.scaled_add(1, rhs)
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        self.scaled_add(-1, rhs)
    }
}

/// A simply-laced root system with its full root list.
///
/// `roots()` enumerates Δ with the positive roots first, sorted by height and
/// then by coordinates, followed by their negatives in the same order. Index
/// `p` and `p + num_positive()` are always negatives of each other.
#[derive(Debug, Clone)]
pub struct RootSystem {
    dtype: DiagramType,
    cartan: Vec<Vec<i64>>,
    neighbors: Vec<Vec<usize>>,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    coxeter_number: usize,
}

impl RootSystem {
    pub fn new(dtype: DiagramType) -> Result<Self> {
        build_root_system(dtype)
    }

    pub fn dtype(&self) -> DiagramType {
        self.dtype
    }

    pub fn rank(&self) -> usize {
        self.dtype.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Simple indices adjacent to `i` in the Dynkin diagram.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    /// All of Δ: positives then negatives.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive()]
    }

    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    /// Index of `-roots()[idx]`.
    pub fn negate_index(&self, idx: usize) -> usize {
        let p = self.num_positive();
        if idx < p {
            idx + p
        } else {
            idx - p
        }
    }

    /// The maximal root ψ; it is the last positive root in height order.
    pub fn highest_root(&self) -> &Root {
        &self.roots[self.num_positive() - 1]
    }

    /// Coefficients of ψ in the simple-root basis.
    pub fn marks(&self) -> &[i64] {
        self.highest_root().coeffs()
    }

    pub fn coxeter_number(&self) -> usize {
        self.coxeter_number
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    /// Bilinear form `x^T C y`, normalized so every root has square length 2.
    pub fn inner_product(&self, x: &Root, y: &Root) -> i64 {
        let l = self.rank();
        let mut acc = 0;
        for i in 0..l {
            if x.0[i] == 0 {
                continue;
            }
            for j in 0..l {
                acc += x.0[i] * self.cartan[i][j] * y.0[j];
            }
        }
        acc
    }

    /// `(x, α_i)` without materializing `α_i`.
    pub fn pair_simple(&self, x: &Root, i: usize) -> i64 {
        (0..self.rank()).map(|j| x.0[j] * self.cartan[j][i]).sum()
    }

    /// Simple reflection `s_i(x) = x - (x, α_i) α_i`.
    pub fn reflect(&self, i: usize, x: &Root) -> Result<Root> {
        if i >= self.rank() {
            return Err(Error::NodeOutOfRange {
                index: i,
                max: self.rank() - 1,
            });
        }
        let mut out = x.clone();
        out.0[i] -= self.pair_simple(x, i);
        Ok(out)
    }
}

/// Builds Δ by closure from the simple roots: for a positive root `r` and a
/// simple root `α_j` with `r != α_j`, `r + α_j` is a root iff `(r, α_j) = -1`.
pub fn build_root_system(dtype: DiagramType) -> Result<RootSystem> {
    let l = dtype.rank;
    let mut cartan = vec![vec![0i64; l]; l];
    let mut neighbors = vec![Vec::new(); l];
    for (i, row) in cartan.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in dtype.edges() {
        cartan[i][j] = -1;
        cartan[j][i] = -1;
        neighbors[i].push(j);
        neighbors[j].push(i);
    }
    for n in &mut neighbors {
        n.sort_unstable();
    }

    let pair = |x: &Root, i: usize| -> i64 { (0..l).map(|j| x.0[j] * cartan[j][i]).sum() };

    let mut seen: HashMap<Root, ()> = HashMap::new();
    let mut queue: VecDeque<Root> = VecDeque::new();
    for i in 0..l {
        let r = Root::simple(l, i);
        seen.insert(r.clone(), ());
        queue.push_back(r);
    }
    while let Some(r) = queue.pop_front() {
        for j in 0..l {
            if pair(&r, j) == -1 {
                let mut next = r.clone();
                next.0[j] += 1;
                if seen.insert(next.clone(), ()).is_none() {
                    queue.push_back(next);
                }
            }
        }
    }
    let mut positives: Vec<Root> = seen.into_keys().collect();
    positives.sort_by(|x, y| x.height().cmp(&y.height()).then_with(|| x.cmp(y)));

    let np = positives.len();
    ensure!(
        (2 * np) % l == 0,
        "{dtype}: card Δ = {} not divisible by rank",
        2 * np
    );
    let coxeter_number = 2 * np / l;

    let mut roots = positives.clone();
    roots.extend(positives.iter().map(|r| -r));
    let index = roots
        .iter()
        .enumerate()
        .map(|(k, r)| (r.clone(), k))
        .collect();

    let rs = RootSystem {
        dtype,
        cartan,
        neighbors,
        roots,
        index,
        coxeter_number,
    };
    validate(&rs)?;
    Ok(rs)
}

fn validate(rs: &RootSystem) -> Result<()> {
    let l = rs.rank();
    let h = rs.coxeter_number;
    let dt = rs.dtype;
    ensure!(h % 2 == 0, "{dt}: Coxeter number {h} is odd");
    ensure!(rs.roots.len() == h * l, "{dt}: card Δ != h·ℓ");
    ensure!(
        rs.roots.len() + l == l * (h + 1),
        "{dt}: dimension count ℓ(h+1) inconsistent"
    );
    for r in &rs.roots {
        ensure!(rs.inner_product(r, r) == 2, "{dt}: root {r} has (r,r) != 2");
    }
    let psi = rs.highest_root();
    ensure!(
        psi.height() as usize + 1 == h,
        "{dt}: height(ψ)+1 = {} but h = {h}",
        psi.height() + 1
    );
    ensure!(psi.0.iter().all(|&d| d > 0), "{dt}: ψ has a zero mark");
    for i in 0..l {
        let mut up = psi.clone();
        up.0[i] += 1;
        ensure!(rs.root_index(&up).is_none(), "{dt}: ψ + α_{i} is a root");
    }
    let max_height = rs.positive_roots().iter().filter(|r| r.height() == psi.height()).count();
    ensure!(max_height == 1, "{dt}: highest root not unique");
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    /// Independent count of positive roots per family.
    fn expected_positive_count(dt: DiagramType) -> usize {
        let l = dt.rank();
        match dt.family() {
            Family::A => l * (l + 1) / 2,
            Family::D => l * (l - 1),
            Family::E => match l {
                6 => 36,
                7 => 63,
                8 => 120,
                _ => unreachable!(),
            },
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!("e8".parse::<DiagramType>().unwrap().to_string(), "E8");
        assert_eq!(" D5 ".parse::<DiagramType>().unwrap().rank(), 5);
        assert_eq!("A4".parse::<DiagramType>(), Err(Error::ExcludedType(4)));
        assert!(matches!("D3".parse::<DiagramType>(), Err(Error::InvalidRank { .. })));
        assert!(matches!("E9".parse::<DiagramType>(), Err(Error::InvalidRank { .. })));
        assert!(matches!("B3".parse::<DiagramType>(), Err(Error::Parse(_))));
        assert!(matches!("A".parse::<DiagramType>(), Err(Error::Parse(_))));
        assert!(matches!("A0".parse::<DiagramType>(), Err(Error::InvalidRank { .. })));
    }

    #[test]
    fn counts_match_closed_forms() {
        for dt in DiagramType::table_types() {
            let r = RootSystem::new(dt).unwrap();
            assert_eq!(r.num_positive(), expected_positive_count(dt), "{dt}");
            assert_eq!(r.num_positive(), r.coxeter_number() / 2 * r.rank(), "{dt}");
        }
    }

    #[test]
    fn small_examples() {
        let e8 = rs("E8");
        assert_eq!((e8.rank(), e8.num_positive(), e8.coxeter_number()), (8, 120, 30));
        assert_eq!(*e8.marks().iter().max().unwrap(), 6);
        assert_eq!(e8.marks(), &[2, 3, 4, 6, 5, 4, 3, 2]);

        let a3 = rs("A3");
        assert_eq!((a3.num_positive(), a3.coxeter_number()), (6, 4));
        assert_eq!(a3.highest_root().coeffs(), &[1, 1, 1]);

        let d5 = rs("D5");
        assert_eq!((d5.num_positive(), d5.coxeter_number()), (20, 8));

        let d4 = rs("D4");
        assert_eq!(d4.highest_root().coeffs(), &[1, 2, 1, 1]);
    }

    #[test]
    fn inner_products() {
        let a3 = rs("A3");
        let a = |i| a3.simple_root(i);
        assert_eq!(a3.inner_product(&a(0), &a(0)), 2);
        assert_eq!(a3.inner_product(&a(0), &a(1)), -1);
        assert_eq!(a3.inner_product(&a(0), &a(2)), 0);
        let psi = a3.highest_root();
        assert_eq!(a3.inner_product(psi, psi), 2);
    }

    #[test]
    fn reflections() {
        let a3 = rs("A3");
        let a = |i| a3.simple_root(i);
        assert_eq!(a3.reflect(0, &a(0)).unwrap(), -&a(0));
        assert_eq!(a3.reflect(0, &a(1)).unwrap(), Root::new(vec![1, 1, 0]));
        assert_eq!(a3.reflect(0, &a(2)).unwrap(), a(2));
        assert!(matches!(a3.reflect(3, &a(0)), Err(Error::NodeOutOfRange { .. })));

        let d4 = rs("D4");
        assert_eq!(d4.reflect(2, &d4.simple_root(3)).unwrap(), d4.simple_root(3));
    }

    #[test]
    fn reflections_permute_roots() {
        for dt in DiagramType::table_types() {
            let r = RootSystem::new(dt).unwrap();
            for i in 0..r.rank() {
                let mut hit = vec![false; r.roots().len()];
                for x in r.roots() {
                    let y = r.reflect(i, x).unwrap();
                    let k = r.root_index(&y).expect("image is a root");
                    assert!(!hit[k], "{dt}: s_{i} not injective");
                    hit[k] = true;
                    assert_eq!(r.reflect(i, &y).unwrap(), *x);
                }
            }
        }
    }

    #[test]
    fn pairings_bounded() {
        let e7 = rs("E7");
        for x in e7.roots() {
            for y in e7.roots() {
                assert!((-2..=2).contains(&e7.inner_product(x, y)));
            }
        }
    }

    #[test]
    fn positive_roots_reachable_by_simple_steps() {
        // every non-simple positive root minus some simple root is positive
        let e6 = rs("E6");
        for r in e6.positive_roots() {
            if r.height() == 1 {
                continue;
            }
            let ok = (0..6).any(|i| {
                let lower = &Root::new(r.coeffs().to_vec()) - &e6.simple_root(i);
                e6.root_index(&lower).is_some_and(|k| k < e6.num_positive())
            });
            assert!(ok, "{r}");
        }
    }

    #[test]
    fn negation_index_pairs() {
        let d6 = rs("D6");
        for (k, r) in d6.roots().iter().enumerate() {
            assert_eq!(d6.roots()[d6.negate_index(k)], -r);
        }
    }
}
