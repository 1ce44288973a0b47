//! Cross-validation suite run by `su2branch verify`.
//!
//! Each diagram type runs a fixed, ordered list of named checks. A failing
//! check records its error and the remaining checks still run, so the report
//! is always complete.

use std::fmt::Write as _;

use serde::Serialize;

use crate::binarygroups::CharacterData;
use crate::branching::{closed_form_params, Branching};
use crate::coxeter::longest_element_checks;
use crate::error::{ensure, Result};
use crate::mckay::recursion_oracle;
use crate::rootsys::{DiagramType, Family};
use crate::seriescalc::IntPolynomial;

/// Default truncation order for series-vs-recursion comparisons.
pub const DEFAULT_ORDER: usize = 200;
/// Truncation order for comparisons against character theory.
pub const CHARACTER_ORDER: usize = 60;

/// Reference numerators for E8, keyed by `(mark, distance to the affine
/// node)`, as sparse `(exponent, coefficient)` lists.
pub const E8_REFERENCE: [((i64, usize), &[(usize, i64)]); 8] = [
    ((2, 1), &[(1, 1), (11, 1), (19, 1), (29, 1)]),
    ((3, 2), &[(2, 1), (10, 1), (12, 1), (18, 1), (20, 1), (28, 1)]),
    (
        (4, 3),
        &[(3, 1), (9, 1), (11, 1), (13, 1), (17, 1), (19, 1), (21, 1), (27, 1)],
    ),
    (
        (5, 4),
        &[
            (4, 1),
            (8, 1),
            (10, 1),
            (12, 1),
            (14, 1),
            (16, 1),
            (18, 1),
            (20, 1),
            (22, 1),
            (26, 1),
        ],
    ),
    (
        (6, 5),
        &[
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
        ],
    ),
    (
        (4, 6),
        &[(6, 1), (8, 1), (12, 1), (14, 1), (16, 1), (18, 1), (22, 1), (24, 1)],
    ),
    ((2, 7), &[(7, 1), (13, 1), (17, 1), (23, 1)]),
    ((3, 6), &[(6, 1), (10, 1), (14, 1), (16, 1), (20, 1), (24, 1)]),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub order: usize,
    pub character_order: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            order: DEFAULT_ORDER,
            character_order: CHARACTER_ORDER,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeReport {
    #[serde(rename = "type")]
    pub dtype: DiagramType,
    pub checks: Vec<CheckResult>,
}

impl TypeReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub convention: &'static str,
    pub types: Vec<TypeReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.types.iter().all(TypeReport::passed)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for t in &self.types {
            for c in &t.checks {
                let _ = writeln!(
                    out,
                    "{:<4} {:<22} {}  {}",
                    t.dtype.to_string(),
                    c.name,
                    if c.passed { "PASS" } else { "FAIL" },
                    c.detail
                );
            }
        }
        let total: usize = self.types.iter().map(|t| t.checks.len()).sum();
        let failed: usize = self
            .types
            .iter()
            .map(|t| t.checks.iter().filter(|c| !c.passed).count())
            .sum();
        let _ = writeln!(
            out,
            "{} checks over {} types: {} passed, {failed} failed",
            total,
            self.types.len(),
            total - failed
        );
        out
    }
}

struct Runner {
    checks: Vec<CheckResult>,
}

impl Runner {
    fn run(&mut self, name: &'static str, f: impl FnOnce() -> Result<String>) {
        let (passed, detail) = match f() {
            Ok(d) => (true, d),
            Err(e) => (false, e.to_string()),
        };
        self.checks.push(CheckResult {
            name,
            passed,
            detail,
        });
    }

    fn fail(&mut self, name: &'static str, detail: String) {
        self.checks.push(CheckResult {
            name,
            passed: false,
            detail,
        });
    }
}

/// Runs every check for one diagram type.
pub fn verify_type(dt: DiagramType, opts: VerifyOptions) -> TypeReport {
    let mut r = Runner { checks: Vec::new() };
    let br = match Branching::new(dt) {
        Ok(b) => b,
        Err(e) => {
            r.fail("construction", e.to_string());
            return TypeReport { dtype: dt, checks: r.checks };
        }
    };
    let rs = br.root_system();
    let cox = br.coxeter();
    let p = *br.params();
    let l = rs.rank();

    r.run("root-counts", || {
        ensure!(rs.roots().len() == p.h * l, "card Δ != hℓ");
        ensure!(rs.num_positive() == p.g * l, "card Δ₊ != gℓ");
        Ok(format!("|Δ|={} |Δ+|={} h={}", rs.roots().len(), rs.num_positive(), p.h))
    });
    r.run("bipartition", || {
        let bp = &cox.bipartition;
        for (i, j) in dt.edges() {
            ensure!(bp.class_of(i) != bp.class_of(j), "edge {i}-{j} inside one class");
        }
        Ok(format!("I1={:?} I2={:?}", bp.i1(), bp.i2()))
    });
    r.run("orbit-theorems", || {
        let o = &cox.orbits;
        let mut size = vec![0usize; l];
        let mut pos = vec![0usize; l];
        for k in 0..rs.roots().len() {
            size[o.orbit_of(k)] += 1;
        }
        for e in o.entries() {
            pos[e.orbit] += 1;
            ensure!(e.n % 2 == (e.k % 2) as usize, "n(φ) parity mismatch");
            ensure!((1..=p.h).contains(&e.n), "n(φ) out of range");
        }
        ensure!(size.iter().all(|&s| s == p.h), "orbit sizes {size:?}");
        ensure!(pos.iter().all(|&s| s == p.g), "positive orbit parts {pos:?}");
        Ok(format!("{l} orbits of size {}, {} positive each", p.h, p.g))
    });
    r.run("longest-element", || {
        let rep = longest_element_checks(rs, &cox.action, &cox.bipartition)?;
        Ok(format!(
            "σ^{} = κ; i*={} in I{}; ψ→β_i* in {} steps",
            rep.g,
            rep.special_index + 1,
            rep.special_class,
            rep.psi_steps
        ))
    });
    r.run("heisenberg", || {
        let hs = br.heisenberg();
        ensure!(hs.len() == 2 * p.h - 3, "card Φ = {}", hs.len());
        for i in 0..l {
            if i != p.istar {
                ensure!(
                    hs.slice(i).len() as i64 == 2 * rs.marks()[i],
                    "card Φ^{} != 2d",
                    i + 1
                );
            }
        }
        Ok(format!("|Φ|={}", hs.len()))
    });
    r.run("z-polynomials", || {
        for node in 1..=l {
            let z = br.z(node)?;
            ensure!(z.eval_at_one() == 2 * rs.marks()[node - 1], "z_{node}(1) != 2d");
        }
        let zs = br.z(br.special_node())?;
        ensure!(zs.eval_at_one() == p.a as i64, "z_i*(1) != a");
        ensure!(
            *zs == crate::branching::special_closed_form(p.g, p.a),
            "z_i* differs from closed form"
        );
        Ok(format!("z_i* = {zs}"))
    });
    r.run("parameters", || {
        let closed = closed_form_params(dt);
        ensure!(
            (p.a, p.b, p.h, p.g) == closed,
            "(a,b,h,g) = {:?} != {closed:?}",
            (p.a, p.b, p.h, p.g)
        );
        ensure!(p.b == p.h + 2 - p.a, "b != h + 2 - a");
        Ok(format!("a={} b={} h={} g={}", p.a, p.b, p.h, p.g))
    });
    if dt.family() == Family::E && dt.rank() == 8 {
        r.run("e8-reference", || {
            let mut matched = 0;
            for ((mark, dist), terms) in E8_REFERENCE {
                let node = br.graph().find_label(mark, dist)?;
                let want = IntPolynomial::from_terms(terms.iter().copied());
                let got = br.z(node)?;
                ensure!(*got == want, "node ({mark},{dist}): {got} != {want}");
                matched += 1;
            }
            Ok(format!("{matched}/8 reference polynomials"))
        });
    }

    let table = br.multiplicity_table(opts.order);
    r.run("recursion-oracle", || {
        let table = table.clone()?;
        let rec = recursion_oracle(br.graph(), opts.order)?;
        for (n, (row, v)) in table.iter().zip(&rec).enumerate() {
            ensure!(row == v.entries(), "n = {n}: series {row:?} != recursion {:?}", v.entries());
        }
        Ok(format!("n ≤ {}", opts.order))
    });
    r.run("sum-rule-parity", || {
        let table = table.clone()?;
        let marks = br.graph().marks();
        for (n, row) in table.iter().enumerate() {
            let s: i64 = row.iter().zip(marks).map(|(m, d)| m * d).sum();
            ensure!(s == n as i64 + 1, "Σ d_i m_(n,i) = {s} at n = {n}");
            for (node, &m) in row.iter().enumerate() {
                let k = br.class_of_node(node) as usize;
                ensure!(m == 0 || n % 2 == k % 2, "m_({n},{node}) = {m} violates parity");
            }
        }
        Ok(format!("n ≤ {}", opts.order))
    });

    let chars = CharacterData::new(br.graph());
    match &chars {
        Err(e) => r.fail("group", e.to_string()),
        Ok(c) => {
            r.run("group", || {
                ensure!(
                    c.group.order() == p.order_fstar,
                    "|F*| = {} but ab/2 = {}",
                    c.group.order(),
                    p.order_fstar
                );
                ensure!(c.group.classes().len() == l + 1, "class count");
                Ok(format!("|F*|={} classes={}", c.group.order(), l + 1))
            });
            r.run("central-parity", || {
                let mc = c.group.class_of(c.group.minus_identity());
                for node in 0..=l {
                    let v = c.table.character_of_node(node)[mc].re;
                    let d = br.graph().marks()[node] as f64;
                    let want = if br.class_of_node(node) == 2 { d } else { -d };
                    ensure!((v - want).abs() < 1e-6, "χ_{node}(-1) = {v}, want {want}");
                }
                Ok("γ_i(-1) = +d_i on I2∪{0}, -d_i on I1".to_string())
            });
            r.run("character-oracle", || {
                let table = table.clone()?;
                for (n, row) in table.iter().enumerate().take(opts.character_order + 1) {
                    for (node, &m) in row.iter().enumerate() {
                        let c_m = c.oracle_multiplicity(n, node)?;
                        ensure!(c_m == m, "n = {n}, node {node}: characters {c_m} != series {m}");
                    }
                }
                Ok(format!("n ≤ {}", opts.character_order))
            });
            r.run("molien-invariants", || {
                let s0 = br.series(0, opts.character_order)?;
                for n in 0..=opts.character_order {
                    let mol = c.molien_invariants(n)?;
                    ensure!(mol == s0.coeff(n), "n = {n}: Molien {mol} != series {}", s0.coeff(n));
                }
                Ok(format!("n ≤ {}", opts.character_order))
            });
        }
    }
    TypeReport { dtype: dt, checks: r.checks }
}

/// Verifies several types in parallel; the report keeps the input order.
pub fn verify_types(types: &[DiagramType], opts: VerifyOptions) -> VerifyReport {
    let reports = std::thread::scope(|s| {
        let handles: Vec<_> = types
            .iter()
            .map(|&dt| s.spawn(move || verify_type(dt, opts)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verify worker panicked"))
            .collect()
    });
    VerifyReport {
        convention: crate::NODE_CONVENTION,
        types: reports,
    }
}

/// Every type of the parameter table.
pub fn verify_all(opts: VerifyOptions) -> VerifyReport {
    verify_types(&DiagramType::table_types(), opts)
}
