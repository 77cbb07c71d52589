//! Plain-text formats for graphs, colored graphs, set cover instances, edge
//! sets, kernel directories and gadget descriptions.
//!
//! All formats are whitespace-separated integers with `#` comment lines and
//! 0-indexed vertices:
//!
//! * graph: header `n m`, then `m` lines `u v`;
//! * colored graph: header `n m t`, then `m` lines `u v c` with `1 <= c <= t`;
//! * set cover: header `n m k`, then `m` lines `size e_1 ... e_size`;
//! * edge set: one `u v` line per edge;
//! * gadget: a line `k delta`, then a colored graph.
//!
//! A kernel directory holds `kernel.graph`, `mapping.txt` (lines
//! `kernel_id original_id`) and `meta.txt` (lines `key value...`). The keys
//! are `problem`, `kind`, `k`, `epsilon`, `alpha` (split only), `size_guard`,
//! `k_out`, `original_n`, `mandatory_cost`, and the vertex lists
//! `partition_x` (clique) or `s`, `x_prime`, `y_prime`, `retained` (split).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::clique_kernel::{CliqueKernelConfig, KernelResult};
use crate::graph::{Edge, EdgeSet, Graph, Vertex};
use crate::hardness::{ColoredGraph, HardnessError, SetCoverInstance};
use crate::kernel::{KernelError, KernelKind};
use crate::split_kernel::{SplitKernelConfig, SplitKernelResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Instance(#[from] HardnessError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        source: std::io::Error,
    },
}

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        msg: msg.into(),
    }
}

/// Non-blank, non-comment lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        (!l.is_empty() && !l.starts_with('#')).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

fn ints(line: usize, toks: &[&str]) -> Result<Vec<usize>, ParseError> {
    toks.iter()
        .map(|t| {
            t.parse::<usize>().map_err(|_| {
                err(
                    line,
                    format!("expected a non-negative integer, found {t:?}"),
                )
            })
        })
        .collect()
}

fn exact(line: usize, toks: &[&str], len: usize, what: &str) -> Result<Vec<usize>, ParseError> {
    if toks.len() != len {
        return Err(err(line, format!("expected {what}")));
    }
    ints(line, toks)
}

fn last_line(text: &str) -> usize {
    text.lines().count().max(1)
}

/// Reads the header and `m` body lines of `width` integers each.
fn read_table(
    text: &str,
    header: &str,
    width: usize,
    body: &str,
) -> Result<(Vec<usize>, Vec<(usize, Vec<usize>)>), ParseError> {
    let mut lines = content_lines(text);
    let (hl, toks) = lines.next().ok_or_else(|| err(1, "missing header"))?;
    let head = exact(
        hl,
        &toks,
        header.split(' ').count(),
        &format!("header `{header}`"),
    )?;
    let m = head[1];
    let mut rows = Vec::with_capacity(m);
    for (line, toks) in lines {
        if rows.len() == m {
            return Err(err(line, format!("more than the declared {m} lines")));
        }
        rows.push((line, exact(line, &toks, width, body)?));
    }
    if rows.len() < m {
        return Err(err(
            last_line(text),
            format!("declared {m} lines, found {}", rows.len()),
        ));
    }
    Ok((head, rows))
}

fn edges_from_rows(n: usize, rows: &[(usize, Vec<usize>)]) -> Result<Vec<Edge>, ParseError> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::with_capacity(rows.len());
    for (line, r) in rows {
        let (u, v) = (r[0], r[1]);
        if u >= n || v >= n {
            return Err(err(*line, format!("vertex out of range for n = {n}")));
        }
        if u == v {
            return Err(err(*line, format!("self-loop at {u}")));
        }
        let e = Edge::new(u, v);
        if !seen.insert(e) {
            return Err(err(*line, format!("duplicate edge {e}")));
        }
        out.push(e);
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let (head, rows) = read_table(text, "n m", 2, "`u v`")?;
    let edges = edges_from_rows(head[0], &rows)?;
    Ok(Graph::from_edges(head[0], edges.iter().map(|e| (e.u, e.v))).expect("edges validated"))
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(s, "{} {}", e.u, e.v);
    }
    s
}

pub fn parse_colored_graph(text: &str) -> Result<ColoredGraph, IoError> {
    let (head, rows) = read_table(text, "n m t", 3, "`u v c`")?;
    let (n, t) = (head[0], head[2]);
    let edges = edges_from_rows(n, &rows)?;
    let mut coloring = Vec::with_capacity(edges.len());
    for ((line, r), e) in rows.iter().zip(&edges) {
        if r[2] == 0 || r[2] > t {
            return Err(err(*line, format!("color {} outside 1..={t}", r[2])).into());
        }
        coloring.push((*e, r[2]));
    }
    let g = Graph::from_edges(n, edges.iter().map(|e| (e.u, e.v))).expect("edges validated");
    Ok(ColoredGraph::new(g, t, &coloring)?)
}

pub fn serialize_colored_graph(cg: &ColoredGraph) -> String {
    let mut s = format!("{} {} {}\n", cg.graph.n(), cg.graph.m(), cg.t);
    for (e, c) in cg.colored_edges() {
        let _ = writeln!(s, "{} {} {c}", e.u, e.v);
    }
    s
}

pub fn parse_setcover(text: &str) -> Result<SetCoverInstance, IoError> {
    let mut lines = content_lines(text);
    let (hl, toks) = lines.next().ok_or_else(|| err(1, "missing header"))?;
    let head = exact(hl, &toks, 3, "header `n m k`")?;
    let (n, m, k) = (head[0], head[1], head[2]);
    let mut sets = Vec::with_capacity(m);
    for (line, toks) in lines {
        if sets.len() == m {
            return Err(err(line, format!("more than the declared {m} sets")).into());
        }
        let r = ints(line, &toks)?;
        if r.is_empty() || r.len() != r[0] + 1 {
            return Err(err(line, "set line must be `size e_1 ... e_size`").into());
        }
        if let Some(&e) = r[1..].iter().find(|&&e| e >= n) {
            return Err(err(line, format!("element {e} out of range for n = {n}")).into());
        }
        sets.push(r[1..].to_vec());
    }
    if sets.len() < m {
        return Err(err(
            last_line(text),
            format!("declared {m} sets, found {}", sets.len()),
        )
        .into());
    }
    Ok(SetCoverInstance::new(n, sets, k)?)
}

pub fn serialize_setcover(sc: &SetCoverInstance) -> String {
    let mut s = format!("{} {} {}\n", sc.n_elements, sc.m(), sc.k);
    for set in &sc.sets {
        let _ = write!(s, "{}", set.len());
        for e in set {
            let _ = write!(s, " {e}");
        }
        s.push('\n');
    }
    s
}

pub fn parse_edge_set(text: &str) -> Result<EdgeSet, ParseError> {
    let mut out = EdgeSet::new();
    for (line, toks) in content_lines(text) {
        let r = exact(line, &toks, 2, "`u v`")?;
        if r[0] == r[1] {
            return Err(err(line, format!("self-loop at {}", r[0])));
        }
        out.insert(Edge::new(r[0], r[1]));
    }
    Ok(out)
}

pub fn serialize_edge_set(f: &[Edge]) -> String {
    f.iter().map(|e| format!("{} {}\n", e.u, e.v)).collect()
}

/// A gadget description: host colored graph, `k` and `δ`.
#[derive(Debug, Clone)]
pub struct GadgetSpec {
    pub host: ColoredGraph,
    pub k: usize,
    pub delta: f64,
}

pub fn parse_gadget_spec(text: &str) -> Result<GadgetSpec, IoError> {
    let mut lines = content_lines(text);
    let (line, toks) = lines
        .next()
        .ok_or_else(|| err(1, "missing `k delta` line"))?;
    if toks.len() != 2 {
        return Err(err(line, "expected `k delta`").into());
    }
    let k = ints(line, &toks[..1])?[0];
    let delta: f64 = toks[1]
        .parse()
        .map_err(|_| err(line, format!("bad delta {:?}", toks[1])))?;
    // the rest of the file is a colored graph; keep line numbers intact
    let rest: String = text
        .lines()
        .enumerate()
        .map(|(i, l)| {
            if i < line {
                "\n".to_string()
            } else {
                format!("{l}\n")
            }
        })
        .collect();
    Ok(GadgetSpec {
        host: parse_colored_graph(&rest)?,
        k,
        delta,
    })
}

pub fn serialize_gadget_spec(spec: &GadgetSpec) -> String {
    format!(
        "{} {}\n{}",
        spec.k,
        spec.delta,
        serialize_colored_graph(&spec.host)
    )
}

/// A kernel together with the configuration that produced it.
#[derive(Debug, Clone)]
pub enum KernelArtifact {
    Clique(CliqueKernelConfig, KernelResult),
    Split(SplitKernelConfig, SplitKernelResult),
}

impl KernelArtifact {
    pub fn kind(&self) -> KernelKind {
        match self {
            KernelArtifact::Clique(_, r) => r.kind,
            KernelArtifact::Split(_, r) => r.kind,
        }
    }

    pub fn graph(&self) -> &Graph {
        match self {
            KernelArtifact::Clique(_, r) => &r.graph,
            KernelArtifact::Split(_, r) => &r.graph,
        }
    }

    pub fn k_out(&self) -> usize {
        match self {
            KernelArtifact::Clique(_, r) => r.k_out,
            KernelArtifact::Split(_, r) => r.k_out,
        }
    }

    pub fn kept(&self) -> &[Vertex] {
        match self {
            KernelArtifact::Clique(_, r) => &r.kept,
            KernelArtifact::Split(_, r) => &r.kept,
        }
    }
}

fn list(v: &[Vertex]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn serialize_meta(art: &KernelArtifact, original_n: usize) -> String {
    let mut rows: Vec<(&str, String)> = Vec::new();
    match art {
        KernelArtifact::Clique(cfg, r) => {
            rows.push(("problem", "clique".into()));
            rows.push(("kind", r.kind.to_string()));
            rows.push(("k", cfg.k.to_string()));
            rows.push(("epsilon", cfg.epsilon.to_string()));
            rows.push(("size_guard", cfg.size_guard.to_string()));
            rows.push(("k_out", r.k_out.to_string()));
            rows.push(("original_n", original_n.to_string()));
            rows.push(("mandatory_cost", "0".into()));
            rows.push(("partition_x", list(&r.partition_x)));
        }
        KernelArtifact::Split(cfg, r) => {
            rows.push(("problem", "split".into()));
            rows.push(("kind", r.kind.to_string()));
            rows.push(("k", cfg.k.to_string()));
            rows.push(("epsilon", cfg.epsilon.to_string()));
            rows.push(("alpha", cfg.alpha.to_string()));
            rows.push(("size_guard", cfg.size_guard.to_string()));
            rows.push(("k_out", r.k_out.to_string()));
            rows.push(("original_n", original_n.to_string()));
            rows.push(("mandatory_cost", r.mandatory_cost.to_string()));
            rows.push(("s", list(&r.s)));
            rows.push(("x_prime", list(&r.x_prime)));
            rows.push(("y_prime", list(&r.y_prime)));
            rows.push(("retained", list(&r.retained)));
        }
    }
    rows.into_iter()
        .map(|(k, v)| {
            if v.is_empty() {
                format!("{k}\n")
            } else {
                format!("{k} {v}\n")
            }
        })
        .collect()
}

pub fn serialize_mapping(kept: &[Vertex]) -> String {
    let mut s = String::from("# kernel_id original_id\n");
    for (i, v) in kept.iter().enumerate() {
        let _ = writeln!(s, "{i} {v}");
    }
    s
}

pub fn parse_mapping(text: &str) -> Result<Vec<Vertex>, ParseError> {
    let mut kept = Vec::new();
    for (line, toks) in content_lines(text) {
        let r = exact(line, &toks, 2, "`kernel_id original_id`")?;
        if r[0] != kept.len() {
            return Err(err(line, format!("expected kernel id {}", kept.len())));
        }
        kept.push(r[1]);
    }
    Ok(kept)
}

struct Meta {
    rows: BTreeMap<String, (usize, Vec<String>)>,
}

impl Meta {
    fn parse(text: &str) -> Result<Self, ParseError> {
        let mut rows = BTreeMap::new();
        for (line, toks) in content_lines(text) {
            let vals = toks[1..].iter().map(|s| s.to_string()).collect();
            if rows.insert(toks[0].to_string(), (line, vals)).is_some() {
                return Err(err(line, format!("duplicate key {}", toks[0])));
            }
        }
        Ok(Meta { rows })
    }

    fn raw(&self, key: &str) -> Result<&(usize, Vec<String>), ParseError> {
        self.rows
            .get(key)
            .ok_or_else(|| err(0, format!("missing key {key}")))
    }

    fn one<T: std::str::FromStr>(&self, key: &str) -> Result<T, ParseError> {
        let (line, vals) = self.raw(key)?;
        match vals.as_slice() {
            [v] => v
                .parse()
                .map_err(|_| err(*line, format!("bad value for {key}: {v:?}"))),
            _ => Err(err(*line, format!("{key} takes exactly one value"))),
        }
    }

    fn list(&self, key: &str) -> Result<Vec<Vertex>, ParseError> {
        let (line, vals) = self.raw(key)?;
        let toks: Vec<&str> = vals.iter().map(String::as_str).collect();
        ints(*line, &toks)
    }
}

pub fn read_file(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::File {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_file(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::File {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_kernel_dir(
    dir: &Path,
    art: &KernelArtifact,
    original_n: usize,
) -> Result<(), IoError> {
    fs::create_dir_all(dir).map_err(|source| IoError::File {
        path: dir.to_path_buf(),
        source,
    })?;
    write_file(&dir.join("kernel.graph"), &serialize_graph(art.graph()))?;
    write_file(&dir.join("mapping.txt"), &serialize_mapping(art.kept()))?;
    write_file(&dir.join("meta.txt"), &serialize_meta(art, original_n))
}

/// Reads a kernel directory back; returns the artifact and the original
/// vertex count.
pub fn read_kernel_dir(dir: &Path) -> Result<(KernelArtifact, usize), IoError> {
    let graph = parse_graph(&read_file(&dir.join("kernel.graph"))?)?;
    let kept = parse_mapping(&read_file(&dir.join("mapping.txt"))?)?;
    let meta = Meta::parse(&read_file(&dir.join("meta.txt"))?)?;
    let kind: KernelKind = meta.one("kind")?;
    let k: usize = meta.one("k")?;
    let epsilon: f64 = meta.one("epsilon")?;
    let size_guard: bool = meta.one("size_guard")?;
    let k_out: usize = meta.one("k_out")?;
    let original_n: usize = meta.one("original_n")?;
    if kept.len() != graph.n() && kind != KernelKind::TrivialNo {
        return Err(err(0, "mapping size differs from the kernel vertex count").into());
    }
    let problem: String = meta.one("problem")?;
    let art = match problem.as_str() {
        "clique" => KernelArtifact::Clique(
            CliqueKernelConfig::new(k, epsilon)?.with_size_guard(size_guard),
            KernelResult {
                kind,
                graph,
                k_out,
                kept,
                partition_x: meta.list("partition_x")?,
            },
        ),
        "split" => {
            let alpha: f64 = meta.one("alpha")?;
            KernelArtifact::Split(
                SplitKernelConfig::with_alpha(k, epsilon, alpha)?.with_size_guard(size_guard),
                SplitKernelResult {
                    kind,
                    graph,
                    k_out,
                    kept,
                    s: meta.list("s")?,
                    x_prime: meta.list("x_prime")?,
                    y_prime: meta.list("y_prime")?,
                    mandatory_cost: meta.one("mandatory_cost")?,
                    retained: meta.list("retained")?,
                },
            )
        }
        other => return Err(err(0, format!("unknown problem {other:?}")).into()),
    };
    Ok((art, original_n))
}
