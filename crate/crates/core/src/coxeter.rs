//! Bipartite Coxeter element and its orbits on the root system.
//!
//! The Dynkin diagram is a tree, so its nodes split into two classes of
//! mutually orthogonal simple roots. `I1` is the class containing the nodes
//! that pair nontrivially with the highest root ψ; `I2` is everything else,
//! and every root in `I2` is orthogonal to ψ. With `τ_k` the product of the
//! (commuting) reflections in class `k`, the Coxeter element is
//! `σ = τ2 ∘ τ1`.
//!
//! Every σ-orbit on Δ has `h` elements and contains exactly one root of
//! `β_i = ±α_i` (plus for `i ∈ I1`, minus for `i ∈ I2`). For a positive root
//! φ in the orbit of `β_i`, the exponent `n(φ)` is the unique integer in
//! `[1, h]` of parity `k` with `σ^m(φ) = β_i`, where `n = 2m + 1` for class 1
//! and `n = 2m` for class 2.

use serde::Serialize;

use crate::error::{ensure, Error, Result};
use crate::rootsys::{Family, Root, RootSystem};

/// Class label of a simple node: 1 or 2.
pub type ParityClass = u8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    i1: Vec<usize>,
    i2: Vec<usize>,
    class: Vec<ParityClass>,
}

impl Bipartition {
    /// Simple indices in class 1, ascending.
    pub fn i1(&self) -> &[usize] {
        &self.i1
    }

    /// Simple indices in class 2, ascending.
    pub fn i2(&self) -> &[usize] {
        &self.i2
    }

    pub fn class_of(&self, i: usize) -> ParityClass {
        self.class[i]
    }

    pub fn members(&self, k: ParityClass) -> &[usize] {
        if k == 1 {
            &self.i1
        } else {
            &self.i2
        }
    }
}

/// Two-colors the Dynkin tree and labels the side touching ψ as class 1.
pub fn bipartition(rs: &RootSystem) -> Result<Bipartition> {
    let l = rs.rank();
    let mut color: Vec<Option<u8>> = vec![None; l];
    color[0] = Some(0);
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        let c = color[i].unwrap();
        for &j in rs.neighbors(i) {
            match color[j] {
                None => {
                    color[j] = Some(1 - c);
                    stack.push(j);
                }
                Some(cj) => ensure!(cj != c, "Dynkin diagram is not bipartite"),
            }
        }
    }
    let color: Vec<u8> = color
        .into_iter()
        .map(|c| c.ok_or_else(|| Error::check("Dynkin diagram is disconnected")))
        .collect::<Result<_>>()?;

    let psi = rs.highest_root();
    let touching: Vec<u8> = (0..l)
        .filter(|&i| rs.pair_simple(psi, i) > 0)
        .map(|i| color[i])
        .collect();
    ensure!(!touching.is_empty(), "no simple root pairs positively with ψ");
    ensure!(
        touching.iter().all(|&c| c == touching[0]),
        "nodes pairing with ψ fall in both color classes"
    );
    let c1 = touching[0];
    let class: Vec<ParityClass> = color.iter().map(|&c| if c == c1 { 1 } else { 2 }).collect();
    let i1 = (0..l).filter(|&i| class[i] == 1).collect();
    let i2: Vec<usize> = (0..l).filter(|&i| class[i] == 2).collect();

    for k in [1u8, 2] {
        let members: Vec<usize> = (0..l).filter(|&i| class[i] == k).collect();
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                ensure!(rs.cartan()[i][j] == 0, "nodes {i},{j} in class {k} not orthogonal");
            }
        }
    }
    for &i in &i2 {
        ensure!(rs.pair_simple(psi, i) == 0, "class-2 node {i} not orthogonal to ψ");
    }
    Ok(Bipartition { i1, i2, class })
}

/// Permutation of root indices: `apply(x) = self[x]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn pow(&self, mut e: usize) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.len());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Smallest `m >= 1` with `self^m = id`.
    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut m = 1;
        while !p.is_identity() {
            p = p.compose(self);
            m += 1;
        }
        m
    }
}

/// Simple reflection `s_i` as a permutation of Δ.
pub fn reflection_perm(rs: &RootSystem, i: usize) -> Result<Perm> {
    rs.roots()
        .iter()
        .map(|r| {
            let img = rs.reflect(i, r)?;
            rs.root_index(&img)
                .ok_or_else(|| Error::check(format!("s_{i}({r}) is not a root")))
        })
        .collect::<Result<Vec<_>>>()
        .map(Perm)
}

#[derive(Debug, Clone)]
pub struct CoxeterAction {
    tau1: Perm,
    tau2: Perm,
    sigma: Perm,
    order: usize,
}

impl CoxeterAction {
    pub fn tau(&self, k: ParityClass) -> &Perm {
        if k == 1 {
            &self.tau1
        } else {
            &self.tau2
        }
    }

    pub fn sigma(&self) -> &Perm {
        &self.sigma
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

/// `σ = τ2 ∘ τ1`, each `τ_k` composed over class `k` in ascending node order.
pub fn coxeter_element(rs: &RootSystem, bp: &Bipartition) -> Result<CoxeterAction> {
    let n = rs.roots().len();
    let mut taus = Vec::with_capacity(2);
    for k in [1u8, 2] {
        let mut tau = Perm::identity(n);
        for &i in bp.members(k) {
            tau = tau.compose(&reflection_perm(rs, i)?);
        }
        ensure!(tau.compose(&tau).is_identity(), "τ{k} is not an involution");
        taus.push(tau);
    }
    let tau2 = taus.pop().unwrap();
    let tau1 = taus.pop().unwrap();
    let sigma = tau2.compose(&tau1);
    let order = sigma.order();
    ensure!(
        order == rs.coxeter_number(),
        "σ has order {order}, expected h = {}",
        rs.coxeter_number()
    );
    Ok(CoxeterAction {
        tau1,
        tau2,
        sigma,
        order,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrbitEntry {
    /// Simple index `i` with φ in the orbit of `β_i`.
    pub orbit: usize,
    /// Parity class of `orbit`.
    pub k: ParityClass,
    /// Exponent `n(φ)` in `[1, h]`.
    pub n: usize,
}

#[derive(Debug, Clone)]
pub struct OrbitTable {
    beta: Vec<Root>,
    /// Orbit label of every root in Δ.
    orbit_of: Vec<usize>,
    /// Position of every root along its orbit, counted from `β_i`.
    position: Vec<usize>,
    /// Entries for positive roots, in `RootSystem::positive_roots` order.
    entries: Vec<OrbitEntry>,
}

impl OrbitTable {
    pub fn signed_simples(&self) -> &[Root] {
        &self.beta
    }

    pub fn entries(&self) -> &[OrbitEntry] {
        &self.entries
    }

    /// Entry for positive root index `p`.
    pub fn entry(&self, p: usize) -> OrbitEntry {
        self.entries[p]
    }

    pub fn orbit_of(&self, root_idx: usize) -> usize {
        self.orbit_of[root_idx]
    }

    /// `m` with `σ^m(β_orbit) = root`.
    pub fn position(&self, root_idx: usize) -> usize {
        self.position[root_idx]
    }
}

/// Decomposes Δ into σ-orbits and computes `n(φ)` for every positive root.
///
/// Fails if any orbit has size other than `h`, orbits overlap, or the
/// exponent maps are not bijections onto `{0..g-1}` (class 1) or `{1..g}`
/// (class 2).
pub fn orbit_table(rs: &RootSystem, cox: &CoxeterAction, bp: &Bipartition) -> Result<OrbitTable> {
    let l = rs.rank();
    let h = rs.coxeter_number();
    let g = h / 2;
    let total = rs.roots().len();
    let sigma = cox.sigma();

    let beta: Vec<Root> = (0..l)
        .map(|i| {
            let a = rs.simple_root(i);
            if bp.class_of(i) == 1 {
                a
            } else {
                -&a
            }
        })
        .collect();
    let beta_idx: Vec<usize> = beta
        .iter()
        .map(|b| rs.root_index(b).expect("±α_i is a root"))
        .collect();

    let mut orbit_of = vec![usize::MAX; total];
    let mut position = vec![usize::MAX; total];
    for i in 0..l {
        let start = beta_idx[i];
        let mut x = start;
        for m in 0..h {
            ensure!(
                orbit_of[x] == usize::MAX,
                "orbit of β_{i} meets root {} already in orbit {}",
                rs.roots()[x],
                orbit_of[x]
            );
            orbit_of[x] = i;
            position[x] = m;
            x = sigma.apply(x);
            if m + 1 < h {
                ensure!(x != start, "orbit of β_{i} has size {} < h", m + 1);
            }
        }
        ensure!(x == start, "orbit of β_{i} does not close after h steps");
    }
    ensure!(
        orbit_of.iter().all(|&o| o != usize::MAX),
        "σ-orbits of Π̃ do not cover Δ"
    );
    for i in 0..l {
        let hits = beta_idx.iter().filter(|&&b| orbit_of[b] == i).count();
        ensure!(hits == 1, "orbit {i} contains {hits} elements of Π̃");
    }

    let mut entries = Vec::with_capacity(rs.num_positive());
    let mut images: Vec<Vec<usize>> = vec![Vec::new(); l];
    for p in 0..rs.num_positive() {
        let i = orbit_of[p];
        let k = bp.class_of(i);
        let m = (h - position[p]) % h;
        let n = if k == 1 { 2 * m + 1 } else { 2 * m };
        ensure!(
            (1..=h).contains(&n),
            "n({}) = {n} outside [1, {h}]",
            rs.roots()[p]
        );
        images[i].push(if k == 1 { (n - 1) / 2 } else { n / 2 });
        entries.push(OrbitEntry { orbit: i, k, n });
    }
    for (i, img) in images.iter_mut().enumerate() {
        img.sort_unstable();
        let expected: Vec<usize> = if bp.class_of(i) == 1 {
            (0..g).collect()
        } else {
            (1..=g).collect()
        };
        ensure!(
            *img == expected,
            "exponent map on orbit {i} is not a bijection onto its range: {img:?}"
        );
    }

    Ok(OrbitTable {
        beta,
        orbit_of,
        position,
        entries,
    })
}

/// The branch node for D and E; the middle node of the path for A.
pub fn special_index(rs: &RootSystem) -> usize {
    let l = rs.rank();
    match rs.dtype().family() {
        Family::A => (l - 1) / 2,
        Family::D | Family::E => (0..l)
            .find(|&i| rs.neighbors(i).len() == 3)
            .expect("D/E diagrams have a branch node"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LongestElementReport {
    pub g: usize,
    pub special_index: usize,
    pub special_class: ParityClass,
    /// Steps `m` with `σ^m(ψ) = β_{i*}`.
    pub psi_steps: usize,
}

/// Checks the properties of `σ^g` as the longest Weyl group element:
/// it swaps Δ₊ and Δ₋, sends each `Π_k` to `-Π_k`, negates `α_{i*}`,
/// commutes with `τ1` and `τ2`, and is an involution. Also checks the class
/// of `i*` against the parity of `g` and the number of steps from ψ to
/// `β_{i*}`.
pub fn longest_element_checks(
    rs: &RootSystem,
    cox: &CoxeterAction,
    bp: &Bipartition,
) -> Result<LongestElementReport> {
    let h = rs.coxeter_number();
    let g = h / 2;
    let np = rs.num_positive();
    let kappa = cox.sigma().pow(g);

    for p in 0..np {
        ensure!(
            kappa.apply(p) >= np,
            "σ^g maps positive root {} to positive root {}",
            rs.roots()[p],
            rs.roots()[kappa.apply(p)]
        );
    }
    for k in [1u8, 2] {
        let mut image: Vec<Root> = bp
            .members(k)
            .iter()
            .map(|&i| rs.roots()[kappa.apply(rs.root_index(&rs.simple_root(i)).unwrap())].clone())
            .collect();
        let mut target: Vec<Root> = bp.members(k).iter().map(|&i| -&rs.simple_root(i)).collect();
        image.sort();
        target.sort();
        ensure!(image == target, "σ^g(Π{k}) != -Π{k}: got {image:?}");
    }

    let istar = special_index(rs);
    let a_star = rs.simple_root(istar);
    let a_idx = rs.root_index(&a_star).unwrap();
    ensure!(
        rs.roots()[kappa.apply(a_idx)] == -&a_star,
        "σ^g(α_i*) = {} != -α_i*",
        rs.roots()[kappa.apply(a_idx)]
    );
    let class = bp.class_of(istar);
    ensure!(
        (class == 2) == (g % 2 == 0),
        "i* in class {class} but g = {g}"
    );

    for k in [1u8, 2] {
        let tau = cox.tau(k);
        ensure!(
            tau.compose(&kappa) == kappa.compose(tau),
            "σ^g does not commute with τ{k}"
        );
    }
    ensure!(kappa.compose(&kappa).is_identity(), "σ^g is not an involution");
    ensure!(
        cox.sigma().compose(&kappa) == kappa.compose(cox.sigma()),
        "σ does not commute with σ^g"
    );

    // ψ reaches β_{i*} after (g-1)/2 steps (g odd, β = α_{i*}) or g/2 steps
    // (g even, β = -α_{i*})
    let (steps, beta) = if g % 2 == 1 {
        ((g - 1) / 2, a_star.clone())
    } else {
        (g / 2, -&a_star)
    };
    let psi_idx = rs.root_index(rs.highest_root()).unwrap();
    let reached = cox.sigma().pow(steps).apply(psi_idx);
    ensure!(
        rs.roots()[reached] == beta,
        "σ^{steps}(ψ) = {} != β_i* = {beta}",
        rs.roots()[reached]
    );
    let psi_steps = (0..h)
        .find(|&m| rs.roots()[cox.sigma().pow(m).apply(psi_idx)] == beta)
        .ok_or_else(|| Error::check("ψ and α_i* lie in different σ-orbits"))?;

    Ok(LongestElementReport {
        g,
        special_index: istar,
        special_class: class,
        psi_steps,
    })
}

/// Bipartition, Coxeter element and orbit table for one root system.
#[derive(Debug, Clone)]
pub struct CoxeterData {
    pub bipartition: Bipartition,
    pub action: CoxeterAction,
    pub orbits: OrbitTable,
}

impl CoxeterData {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let bipartition = bipartition(rs)?;
        let action = coxeter_element(rs, &bipartition)?;
        let orbits = orbit_table(rs, &action, &bipartition)?;
        Ok(Self {
            bipartition,
            action,
            orbits,
        })
    }
}
