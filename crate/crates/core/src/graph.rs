//! Undirected simple graphs in compressed sparse row form.
//!
//! A [`Graph`] is built once from an edge list and is immutable afterwards.
//! Every undirected edge is stored in both directions, neighbor lists are
//! sorted by internal index, and external labels are mapped to contiguous
//! indices `0..n` in first-seen order.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::BufRead;

use rayon::prelude::*;

use crate::{Error, Result};

/// Rows below this count are multiplied sequentially.
const PAR_SPMV_MIN_ROWS: usize = 16_384;
const PAR_SPMV_CHUNK: usize = 4_096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

/// Per-node degree, `values[i] = |N(i)|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeVector {
    pub values: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct ParseOptions {
    pub comment_prefixes: Vec<String>,
    pub drop_self_loops: bool,
}

impl Default for ParseOptions {
    fn default() -> Self {
        Self {
            comment_prefixes: vec!["%".into(), "#".into()],
            drop_self_loops: true,
        }
    }
}

/// What the parser did besides building the graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParseReport {
    pub lines: usize,
    pub self_loops: usize,
    pub duplicate_edges: usize,
}

/// Incremental edge-list builder. Labels are interned in first-seen order.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adjacency: Vec<Vec<usize>>,
    report: ParseReport,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn intern(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), i);
        self.adjacency.push(Vec::new());
        i
    }

    /// Adds an undirected edge. Self-loops are counted and skipped; the
    /// endpoint of a self-loop does not become a node on its own.
    pub fn add_edge(&mut self, a: &str, b: &str) {
        if a == b {
            self.report.self_loops += 1;
            return;
        }
        let u = self.intern(a);
        let v = self.intern(b);
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
    }

    pub fn build(self) -> (Graph, ParseReport) {
        let GraphBuilder {
            labels,
            index,
            mut adjacency,
            mut report,
        } = self;
        let mut offsets = Vec::with_capacity(adjacency.len() + 1);
        offsets.push(0);
        let mut neighbors = Vec::new();
        let mut removed = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            removed += before - list.len();
            neighbors.extend_from_slice(list);
            offsets.push(neighbors.len());
        }
        // each duplicate undirected edge was removed from both endpoints
        report.duplicate_edges = removed / 2;
        let graph = Graph {
            offsets,
            neighbors,
            labels,
            index,
        };
        debug_assert!(graph.check_invariants().is_ok());
        (graph, report)
    }
}

/// Parses a whitespace-separated edge list (KONECT style).
///
/// Lines starting with any of `options.comment_prefixes` and blank lines are
/// skipped. Fields after the first two on a line are ignored.
pub fn parse_edge_list<R: BufRead>(
    reader: R,
    options: &ParseOptions,
) -> Result<(Graph, ParseReport)> {
    let mut builder = GraphBuilder::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        builder.report.lines += 1;
        let trimmed = line.trim();
        if trimmed.is_empty()
            || options
                .comment_prefixes
                .iter()
                .any(|p| trimmed.starts_with(p.as_str()))
        {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next()) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("expected two node labels, found {trimmed:?}"),
                })
            }
        };
        if a == b && !options.drop_self_loops {
            return Err(Error::Parse {
                line: lineno + 1,
                message: format!("self-loop on node {a:?}"),
            });
        }
        builder.add_edge(a, b);
    }
    let (graph, report) = builder.build();
    if report.self_loops > 0 {
        log::warn!("dropped {} self-loop(s)", report.self_loops);
    }
    Ok((graph, report))
}

/// Convenience wrapper around [`parse_edge_list`] for in-memory text.
pub fn parse_edge_list_str(text: &str) -> Result<Graph> {
    parse_edge_list(text.as_bytes(), &ParseOptions::default()).map(|(g, _)| g)
}

impl Graph {
    /// Builds a graph from integer-labelled edges. Labels are the decimal
    /// strings of the endpoints, interned in first-seen order.
    pub fn from_edges<I>(edges: I) -> Graph
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut builder = GraphBuilder::new();
        let mut a = String::new();
        let mut b = String::new();
        for (u, v) in edges {
            a.clear();
            b.clear();
            let _ = write!(a, "{u}");
            let _ = write!(b, "{v}");
            builder.add_edge(&a, &b);
        }
        builder.build().0
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[self.offsets[i]..self.offsets[i + 1]]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.offsets[i + 1] - self.offsets[i]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.node_count())
            .map(|i| self.degree(i))
            .max()
            .unwrap_or(0)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.neighbors(i).binary_search(&j).is_ok()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Undirected edges `(i, j)` with `i < j`, in internal-index order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.node_count()).flat_map(move |i| {
            self.neighbors(i)
                .iter()
                .copied()
                .filter(move |&j| j > i)
                .map(move |j| (i, j))
        })
    }

    pub fn degree_vector(&self) -> DegreeVector {
        DegreeVector {
            values: (0..self.node_count()).map(|i| self.degree(i)).collect(),
        }
    }

    /// Returns `scale · (A × x)`.
    ///
    /// Each row sums its neighbors in ascending index order, so the result
    /// does not depend on how rows are split across threads.
    pub fn spmv(&self, x: &[f64], scale: f64) -> Result<Vec<f64>> {
        let mut out = vec![0.0; self.node_count()];
        self.spmv_into(x, scale, &mut out)?;
        Ok(out)
    }

    pub fn spmv_into(&self, x: &[f64], scale: f64, out: &mut [f64]) -> Result<()> {
        let n = self.node_count();
        if x.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: x.len(),
            });
        }
        if out.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: out.len(),
            });
        }
        if !scale.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "spmv scale must be finite, got {scale}"
            )));
        }
        let row = |i: usize| -> f64 {
            let mut acc = 0.0;
            for &j in self.neighbors(i) {
                acc += x[j];
            }
            scale * acc
        };
        if n >= PAR_SPMV_MIN_ROWS {
            out.par_chunks_mut(PAR_SPMV_CHUNK)
                .enumerate()
                .for_each(|(c, chunk)| {
                    let base = c * PAR_SPMV_CHUNK;
                    for (k, slot) in chunk.iter_mut().enumerate() {
                        *slot = row(base + k);
                    }
                });
        } else {
            for (i, slot) in out.iter_mut().enumerate() {
                *slot = row(i);
            }
        }
        Ok(())
    }

    /// Writes an edge list that [`parse_edge_list`] turns back into this
    /// exact graph, labels and internal indices included.
    ///
    /// The file opens with one introducing edge per node, in index order,
    /// so that first-seen interning reproduces the index assignment; the
    /// remaining edges follow as sorted `(i, j)` pairs with `i < j`.
    pub fn to_canonical_edge_list(&self) -> String {
        let n = self.node_count();
        let mut emitted = std::collections::HashSet::new();
        let mut order: Vec<(usize, usize)> = Vec::with_capacity(self.edge_count());
        let mut seen = 0;
        while seen < n {
            let k = seen;
            match self.neighbors(k).first() {
                Some(&i) if i < k => {
                    order.push((i, k));
                    emitted.insert((i, k));
                    seen += 1;
                }
                Some(&j) => {
                    // k has no earlier neighbor: it was introduced together
                    // with its smallest neighbor, which is k + 1 for any
                    // graph built through GraphBuilder
                    order.push((k, j));
                    emitted.insert((k, j));
                    seen = seen.max(j + 1);
                }
                None => seen += 1,
            }
        }
        for e in self.edges() {
            if !emitted.contains(&e) {
                order.push(e);
            }
        }
        let mut out = String::new();
        for (i, j) in order {
            let _ = writeln!(out, "{} {}", self.labels[i], self.labels[j]);
        }
        out
    }

    fn check_invariants(&self) -> Result<()> {
        let n = self.node_count();
        if self.offsets.len() != n + 1 || !self.neighbors.len().is_multiple_of(2) {
            return Err(Error::InvalidParameter("malformed offsets".into()));
        }
        for i in 0..n {
            let nb = self.neighbors(i);
            if nb.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "neighbors of {i} not strictly ascending"
                )));
            }
            for &j in nb {
                if j == i || j >= n || !self.has_edge(j, i) {
                    return Err(Error::InvalidParameter(format!(
                        "asymmetric or invalid entry ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str) -> Graph {
        parse_edge_list_str(text).unwrap()
    }

    #[test]
    fn triangle() {
        let k3 = g("a b\nb c\nc a\n");
        assert_eq!(k3.node_count(), 3);
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3.degree_vector().values, vec![2, 2, 2]);
    }

    #[test]
    fn dedup_and_self_loops() {
        let (p2, report) =
            parse_edge_list("1 2\n2 1\n1 1\n".as_bytes(), &ParseOptions::default()).unwrap();
        assert_eq!(p2.node_count(), 2);
        assert_eq!(p2.edge_count(), 1);
        assert_eq!(report.self_loops, 1);
        assert_eq!(report.duplicate_edges, 1);
    }

    #[test]
    fn self_loop_only_node_does_not_exist() {
        let g = g("x x\na b\n");
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.index_of("x"), None);
    }

    #[test]
    fn self_loops_rejected_when_not_dropping() {
        let opts = ParseOptions {
            drop_self_loops: false,
            ..Default::default()
        };
        let err = parse_edge_list("a b\nc c\n".as_bytes(), &opts).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn konect_headers_and_extra_fields() {
        let text = "% sym unweighted\n% 3 3 3\n1 2 1 1234\n2\t3   1\n\n# trailing\n3 1\n";
        let g = g(text);
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.labels(), &["1", "2", "3"]);
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = parse_edge_list_str("a b\nlonely\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_input_is_empty_graph() {
        let g = g("% nothing here\n");
        assert!(g.is_empty());
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn degrees() {
        let star = g("c l1\nc l2\nc l3\n");
        assert_eq!(star.degree_vector().values, vec![3, 1, 1, 1]);
        assert_eq!(g("u v").degree_vector().values, vec![1, 1]);
    }

    #[test]
    fn spmv_examples() {
        let k3 = g("a b\nb c\nc a\n");
        assert_eq!(k3.spmv(&[1.0; 3], 1.0).unwrap(), vec![2.0, 2.0, 2.0]);
        let p2 = g("u v");
        assert_eq!(p2.spmv(&[3.0, 5.0], 2.0).unwrap(), vec![10.0, 6.0]);
        assert_eq!(k3.spmv(&[0.0; 3], 7.0).unwrap(), vec![0.0; 3]);
    }

    #[test]
    fn spmv_dimension_mismatch() {
        let k3 = g("a b\nb c\nc a\n");
        assert!(matches!(
            k3.spmv(&[1.0, 2.0], 1.0),
            Err(Error::DimensionMismatch {
                expected: 3,
                actual: 2
            })
        ));
    }

    #[test]
    fn spmv_parallel_path_matches_sequential() {
        let n = PAR_SPMV_MIN_ROWS + 123;
        let g = Graph::from_edges((0..n).map(|i| (i, (i * 7 + 3) % n)));
        let x: Vec<f64> = (0..g.node_count()).map(|i| (i as f64).sin()).collect();
        let par = g.spmv(&x, 0.3).unwrap();
        for (i, got) in par.iter().enumerate() {
            let mut acc = 0.0;
            for &j in g.neighbors(i) {
                acc += x[j];
            }
            assert_eq!(got.to_bits(), (0.3 * acc).to_bits());
        }
    }

    #[test]
    fn canonical_round_trip_with_late_neighbors() {
        // "c d" introduces two fresh nodes that only meet earlier ones later
        let g = g("a b\nc d\nd a\ne c\n");
        let again = parse_edge_list_str(&g.to_canonical_edge_list()).unwrap();
        assert_eq!(g, again);
    }
}
