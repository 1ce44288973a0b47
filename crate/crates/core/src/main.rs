use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use su2branch::binarygroups::CharacterData;
use su2branch::branching::{closed_form_params, rotation_group_name, Branching};
use su2branch::mckay::recursion_oracle;
use su2branch::verify::{self, VerifyOptions};
use su2branch::{DiagramType, Error, NODE_CONVENTION};

#[derive(Parser, Debug)]
#[command(name = "su2branch", version, about = "Branching of SU(2) irreducibles over binary polyhedral groups")]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parameters (a, b, h, g) and group orders for every supported type.
    Table {
        #[arg(long)]
        json: bool,
    },
    /// Run the cross-validation suite.
    Verify {
        #[arg(long = "type", value_name = "TYPE", required_unless_present = "all")]
        dtype: Option<DiagramType>,
        #[arg(long, conflicts_with = "dtype")]
        all: bool,
        #[arg(long, default_value_t = verify::DEFAULT_ORDER)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Multiplicities of every irreducible in π_n.
    Branch {
        #[arg(long = "type", value_name = "TYPE")]
        dtype: DiagramType,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Oracle::Coxeter)]
        oracle: Oracle,
        #[arg(long)]
        json: bool,
    },
    /// Numerator polynomials z_i(t).
    Zpoly {
        #[arg(long = "type", value_name = "TYPE")]
        dtype: DiagramType,
        /// Extended node index, or `mark,distance`.
        #[arg(long, conflicts_with = "all")]
        node: Option<NodeSel>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
    },
    /// Coefficients of m_i(t) up to a given order.
    Series {
        #[arg(long = "type", value_name = "TYPE")]
        dtype: DiagramType,
        #[arg(long)]
        node: NodeSel,
        #[arg(long, default_value_t = verify::DEFAULT_ORDER)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Orbit label, class and exponent of every positive root.
    Orbits {
        #[arg(long = "type", value_name = "TYPE")]
        dtype: DiagramType,
        #[arg(long)]
        json: bool,
    },
    /// Extended Dynkin adjacency matrix and marks.
    Mckay {
        #[arg(long = "type", value_name = "TYPE")]
        dtype: DiagramType,
        #[arg(long)]
        json: bool,
    },
    /// Group order, class sizes and character degrees.
    Group {
        #[arg(long = "type", value_name = "TYPE")]
        dtype: DiagramType,
        #[arg(long)]
        stats: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Oracle {
    Coxeter,
    Recursion,
    Characters,
}

#[derive(Clone, Copy, Debug)]
enum NodeSel {
    Index(usize),
    Label(i64, usize),
}

impl FromStr for NodeSel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("`{s}` is neither a node index nor `mark,distance`");
        match s.split_once([',', ':']) {
            Some((m, d)) => Ok(NodeSel::Label(
                m.trim().parse().map_err(|_| bad())?,
                d.trim().parse().map_err(|_| bad())?,
            )),
            None => s.trim().parse().map(NodeSel::Index).map_err(|_| bad()),
        }
    }
}

impl NodeSel {
    fn resolve(self, br: &Branching) -> Result<usize, Error> {
        match self {
            NodeSel::Index(i) => br.graph().check_node(i).map(|_| i),
            NodeSel::Label(m, d) => br.graph().find_label(m, d),
        }
    }
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

struct Output {
    text: String,
    ok: bool,
}

fn to_json<T: Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Internal(e.to_string()))
}

#[derive(Serialize)]
struct TableRow {
    #[serde(rename = "type")]
    dtype: DiagramType,
    convention: &'static str,
    group: String,
    a: usize,
    b: usize,
    h: usize,
    g: usize,
    order_f: usize,
    order_fstar_closure: usize,
    matches: bool,
}

fn cmd_table(json: bool) -> Result<Output, Failure> {
    let mut rows = Vec::new();
    for dt in DiagramType::table_types() {
        let br = Branching::new(dt)?;
        let p = *br.params();
        let closure = su2branch::binarygroups::build_group(dt)?.order();
        let matches = (p.a, p.b, p.h, p.g) == closed_form_params(dt)
            && p.b == p.h + 2 - p.a
            && p.a * p.b == 2 * closure;
        rows.push(TableRow {
            dtype: dt,
            convention: NODE_CONVENTION,
            group: rotation_group_name(dt),
            a: p.a,
            b: p.b,
            h: p.h,
            g: p.g,
            order_f: p.order_f,
            order_fstar_closure: closure,
            matches,
        });
    }
    let ok = rows.iter().all(|r| r.matches);
    let text = if json {
        to_json(&rows)?
    } else {
        let mut s = format!(
            "{:<6} {:<5} {:>3} {:>3} {:>3} {:>3} {:>4} {:>5}  {}\n",
            "F", "type", "a", "b", "h", "g", "|F|", "|F*|", "check"
        );
        for r in &rows {
            let _ = writeln!(
                s,
                "{:<6} {:<5} {:>3} {:>3} {:>3} {:>3} {:>4} {:>5}  {}",
                r.group,
                r.dtype.to_string(),
                r.a,
                r.b,
                r.h,
                r.g,
                r.order_f,
                r.order_fstar_closure,
                if r.matches { "ok" } else { "MISMATCH" }
            );
        }
        s
    };
    Ok(Output { text, ok })
}

fn cmd_verify(
    dtype: Option<DiagramType>,
    order: usize,
    json: bool,
) -> Result<Output, Failure> {
    let opts = VerifyOptions {
        order,
        character_order: verify::CHARACTER_ORDER.min(order),
    };
    let report = match dtype {
        Some(dt) => verify::verify_types(&[dt], opts),
        None => verify::verify_all(opts),
    };
    let text = if json {
        to_json(&report)?
    } else {
        report.render_text()
    };
    Ok(Output {
        text,
        ok: report.passed(),
    })
}

#[derive(Serialize)]
struct BranchRecord {
    #[serde(rename = "type")]
    dtype: DiagramType,
    convention: &'static str,
    n: usize,
    oracle: Oracle,
    multiplicities: Vec<i64>,
    marks: Vec<i64>,
    distances: Vec<usize>,
}

fn cmd_branch(dt: DiagramType, n: usize, oracle: Oracle, json: bool) -> Result<Output, Failure> {
    let br = Branching::new(dt)?;
    let nodes = br.num_nodes();
    let multiplicities: Vec<i64> = match oracle {
        Oracle::Coxeter => (0..nodes)
            .map(|i| br.multiplicity(n, i))
            .collect::<Result<_, _>>()?,
        Oracle::Recursion => recursion_oracle(br.graph(), n)?[n].entries().to_vec(),
        Oracle::Characters => {
            let c = CharacterData::new(br.graph())?;
            (0..nodes)
                .map(|i| c.oracle_multiplicity(n, i))
                .collect::<Result<_, _>>()?
        }
    };
    let rec = BranchRecord {
        dtype: dt,
        convention: NODE_CONVENTION,
        n,
        oracle,
        multiplicities,
        marks: br.graph().marks().to_vec(),
        distances: br.graph().distance().to_vec(),
    };
    let text = if json {
        to_json(&rec)?
    } else {
        let name = oracle.to_possible_value().map(|v| v.get_name().to_owned());
        let mut s = format!("{dt}  π_{n}  (oracle: {})\n", name.unwrap_or_default());
        let _ = writeln!(s, "{:>4} {:>4} {:>4} {:>6}", "node", "mark", "dist", "mult");
        for i in 0..nodes {
            let _ = writeln!(
                s,
                "{:>4} {:>4} {:>4} {:>6}",
                i, rec.marks[i], rec.distances[i], rec.multiplicities[i]
            );
        }
        s
    };
    Ok(Output { text, ok: true })
}

#[derive(Serialize)]
struct ZpolyRecord {
    #[serde(rename = "type")]
    dtype: DiagramType,
    convention: &'static str,
    node: usize,
    mark: i64,
    distance: usize,
    coeffs: Vec<i64>,
    text: String,
}

fn cmd_zpoly(dt: DiagramType, node: Option<NodeSel>, json: bool) -> Result<Output, Failure> {
    let br = Branching::new(dt)?;
    let nodes: Vec<usize> = match node {
        Some(sel) => vec![sel.resolve(&br)?],
        None => (0..br.num_nodes()).collect(),
    };
    let mut recs = Vec::new();
    for i in nodes {
        let z = br.z(i)?;
        let (mark, distance) = br.graph().label(i);
        recs.push(ZpolyRecord {
            dtype: dt,
            convention: NODE_CONVENTION,
            node: i,
            mark,
            distance,
            coeffs: z.coeffs().to_vec(),
            text: z.to_string(),
        });
    }
    let text = if json {
        to_json(&recs)?
    } else {
        let mut s = String::new();
        for r in &recs {
            let z = br.z(r.node)?;
            let _ = writeln!(
                s,
                "node {:>2} (mark {}, dist {}): {}\n           sparse: {}",
                r.node,
                r.mark,
                r.distance,
                r.text,
                z.sparse_string()
            );
        }
        s
    };
    Ok(Output { text, ok: true })
}

fn cmd_series(dt: DiagramType, node: NodeSel, order: usize, json: bool) -> Result<Output, Failure> {
    let br = Branching::new(dt)?;
    let i = node.resolve(&br)?;
    let s = br.series(i, order)?;
    let (mark, distance) = br.graph().label(i);
    let rec = ZpolyRecord {
        dtype: dt,
        convention: NODE_CONVENTION,
        node: i,
        mark,
        distance,
        coeffs: s.coeffs().to_vec(),
        text: format!(
            "({}) / ((1 - t^{}) (1 - t^{}))",
            br.z(i)?,
            br.params().a,
            br.params().b
        ),
    };
    let text = if json {
        to_json(&rec)?
    } else {
        let mut out = format!(
            "{dt} node {i} (mark {mark}, dist {distance}): m(t) = {}\n",
            rec.text
        );
        for (n, c) in s.coeffs().iter().enumerate() {
            let _ = writeln!(out, "{n:>5} {c}");
        }
        out
    };
    Ok(Output { text, ok: true })
}

#[derive(Serialize)]
struct OrbitRecord {
    root: Vec<i64>,
    orbit: usize,
    k: u8,
    n: usize,
}

#[derive(Serialize)]
struct OrbitDump {
    #[serde(rename = "type")]
    dtype: DiagramType,
    convention: &'static str,
    roots: Vec<OrbitRecord>,
}

fn cmd_orbits(dt: DiagramType, json: bool) -> Result<Output, Failure> {
    let br = Branching::new(dt)?;
    let rs = br.root_system();
    let records: Vec<OrbitRecord> = rs
        .positive_roots()
        .iter()
        .zip(br.coxeter().orbits.entries())
        .map(|(r, e)| OrbitRecord {
            root: r.coeffs().to_vec(),
            // reported as extended node index
            orbit: e.orbit + 1,
            k: e.k,
            n: e.n,
        })
        .collect();
    let text = if json {
        to_json(&OrbitDump {
            dtype: dt,
            convention: NODE_CONVENTION,
            roots: records,
        })?
    } else {
        let width = rs.rank() * 3 + 2;
        let mut s = format!("{:<width$} {:>5} {:>2} {:>3}\n", "root", "orbit", "k", "n");
        for (r, rec) in rs.positive_roots().iter().zip(&records) {
            let _ = writeln!(
                s,
                "{:<width$} {:>5} {:>2} {:>3}",
                r.to_string(),
                rec.orbit,
                rec.k,
                rec.n
            );
        }
        s
    };
    Ok(Output { text, ok: true })
}

#[derive(Serialize)]
struct McKayRecord {
    #[serde(rename = "type")]
    dtype: DiagramType,
    convention: &'static str,
    adjacency: Vec<Vec<i64>>,
    marks: Vec<i64>,
    distances: Vec<usize>,
    classes: Vec<u8>,
}

fn cmd_mckay(dt: DiagramType, json: bool) -> Result<Output, Failure> {
    let br = Branching::new(dt)?;
    let g = br.graph();
    let rec = McKayRecord {
        dtype: dt,
        convention: NODE_CONVENTION,
        adjacency: g.adjacency().to_vec(),
        marks: g.marks().to_vec(),
        distances: g.distance().to_vec(),
        classes: (0..g.size()).map(|i| br.class_of_node(i)).collect(),
    };
    let text = if json {
        to_json(&rec)?
    } else {
        let mut s = format!("{dt} extended diagram ({} nodes)\n", g.size());
        let _ = writeln!(s, "{:>4} {:>4} {:>4} {:>5}  adjacency", "node", "mark", "dist", "class");
        for i in 0..g.size() {
            let row: Vec<String> = g.adjacency()[i].iter().map(|a| a.to_string()).collect();
            let _ = writeln!(
                s,
                "{:>4} {:>4} {:>4} {:>5}  {}",
                i,
                rec.marks[i],
                rec.distances[i],
                rec.classes[i],
                row.join(" ")
            );
        }
        s
    };
    Ok(Output { text, ok: true })
}

#[derive(Serialize)]
struct GroupRecord {
    #[serde(rename = "type")]
    dtype: DiagramType,
    convention: &'static str,
    order: usize,
    class_sizes: Vec<usize>,
    class_traces: Vec<f64>,
    /// Degree of the irreducible at each extended node.
    character_dims: Vec<i64>,
}

fn cmd_group(dt: DiagramType, stats: bool, json: bool) -> Result<Output, Failure> {
    let br = Branching::new(dt)?;
    let c = CharacterData::new(br.graph())?;
    let rec = GroupRecord {
        dtype: dt,
        convention: NODE_CONVENTION,
        order: c.group.order(),
        class_sizes: c.group.class_sizes(),
        class_traces: c
            .group
            .class_traces()
            .iter()
            .map(|t| (t * 1e9).round() / 1e9 + 0.0)
            .collect(),
        character_dims: (0..br.num_nodes())
            .map(|node| c.table.character_of_node(node)[0].re.round() as i64)
            .collect(),
    };
    let text = if json {
        to_json(&rec)?
    } else {
        let mut s = format!("{dt}: binary {} of order {}\n", rotation_group_name(dt), rec.order);
        if stats {
            let _ = writeln!(s, "classes: {}", rec.class_sizes.len());
            let _ = writeln!(s, "class sizes:  {:?}", rec.class_sizes);
            let traces: Vec<String> = rec.class_traces.iter().map(|t| format!("{t:.6}")).collect();
            let _ = writeln!(s, "class traces: [{}]", traces.join(", "));
            let _ = writeln!(s, "degrees by node: {:?}", rec.character_dims);
        }
        s
    };
    Ok(Output { text, ok: true })
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Table { json } => cmd_table(json),
        Command::Verify {
            dtype,
            all: _,
            order,
            json,
        } => cmd_verify(dtype, order, json),
        Command::Branch {
            dtype,
            n,
            oracle,
            json,
        } => cmd_branch(dtype, n, oracle, json),
        Command::Zpoly {
            dtype,
            node,
            all: _,
            json,
        } => cmd_zpoly(dtype, node, json),
        Command::Series {
            dtype,
            node,
            order,
            json,
        } => cmd_series(dtype, node, order, json),
        Command::Orbits { dtype, json } => cmd_orbits(dtype, json),
        Command::Mckay { dtype, json } => cmd_mckay(dtype, json),
        Command::Group { dtype, stats, json } => cmd_group(dtype, stats, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_path = cli.out.clone();
    match run(cli) {
        Ok(out) => {
            match out_path {
                Some(p) => {
                    if let Err(e) = std::fs::write(&p, &out.text) {
                        eprintln!("error: cannot write {}: {e}", p.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{}", out.text),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
