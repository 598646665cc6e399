//! Directed graphs for the walk: the line-with-loops family, an edge-list
//! text format, and the balance condition under which a unitary walk exists.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A directed multigraph. Edges are identified by their index in `edges`;
/// parallel edges and self-loops are distinct edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DirectedGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl DirectedGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(s, t)) = edges.iter().find(|&&(s, t)| s >= vertex_count || t >= vertex_count) {
            return Err(Error::invalid(
                "edges",
                format!("edge ({s}, {t}) references a vertex >= vertex_count {vertex_count}"),
            ));
        }
        Ok(Self { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `(in_degree, out_degree)` per vertex.
    pub fn degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let mut indeg = vec![0; self.vertex_count];
        let mut outdeg = vec![0; self.vertex_count];
        for &(s, t) in &self.edges {
            outdeg[s] += 1;
            indeg[t] += 1;
        }
        (indeg, outdeg)
    }
}

/// Parameters of the line graph with `n - 1` loops at every line vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LineWithLoopsSpec {
    /// Coin dimension; each line vertex carries `n - 1` loops.
    pub n: usize,
    /// Number of forward edges; line vertices are `0..=x_max`.
    pub x_max: usize,
    /// Edges per loop. `1` is a plain self-loop.
    pub loop_length: usize,
}

impl LineWithLoopsSpec {
    pub fn new(n: usize, x_max: usize, loop_length: usize) -> Result<Self> {
        let spec = Self { n, x_max, loop_length };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::invalid("n", "must be >= 1"));
        }
        if self.x_max == 0 {
            return Err(Error::invalid("x_max", "must be >= 1"));
        }
        if self.loop_length == 0 {
            return Err(Error::invalid("loop_length", "must be >= 1"));
        }
        Ok(())
    }

    /// Id of the auxiliary vertex at `depth` (1-based) along loop `k` of
    /// line vertex `x`.
    pub fn aux_vertex(&self, x: usize, k: usize, depth: usize) -> usize {
        let per_loop = self.loop_length - 1;
        self.x_max + 1 + ((x * (self.n - 1) + (k - 1)) * per_loop + (depth - 1))
    }
}

/// Builds the line `0 -> 1 -> ... -> x_max` with `n - 1` loops at each line
/// vertex. A loop of length `L` is a directed cycle through `L - 1` fresh
/// auxiliary vertices, numbered after the line vertices.
///
/// Edges are emitted per line vertex: the forward edge first, then each loop's
/// edges in cycle order.
pub fn build_line_with_loops(spec: LineWithLoopsSpec) -> Result<DirectedGraph> {
    spec.validate()?;
    let LineWithLoopsSpec { n, x_max, loop_length } = spec;
    let line_vertices = x_max + 1;
    let aux = line_vertices * (n - 1) * (loop_length - 1);
    let mut edges = Vec::with_capacity(x_max + line_vertices * (n - 1) * loop_length);
    for x in 0..line_vertices {
        if x < x_max {
            edges.push((x, x + 1));
        }
        for k in 1..n {
            let mut prev = x;
            for depth in 1..loop_length {
                let v = spec.aux_vertex(x, k, depth);
                edges.push((prev, v));
                prev = v;
            }
            edges.push((prev, x));
        }
    }
    DirectedGraph::new(line_vertices + aux, edges)
}

/// Reads the edge-list format: one `source target` pair per line, `#` starts
/// a comment line, blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<DirectedGraph> {
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = idx + 1;
        let mut fields = line.split_whitespace();
        let mut field = |what: &str| -> Result<usize> {
            let tok = fields.next().ok_or_else(|| Error::Parse {
                line: lineno,
                reason: format!("missing {what} vertex"),
            })?;
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: lineno,
                reason: format!("invalid {what} vertex `{tok}`"),
            })
        };
        let source = field("source")?;
        let target = field("target")?;
        if let Some(extra) = fields.next() {
            return Err(Error::Parse { line: lineno, reason: format!("unexpected token `{extra}`") });
        }
        edges.push((source, target));
    }
    let vertex_count = edges.iter().map(|&(s, t)| s.max(t) + 1).max().unwrap_or(0);
    DirectedGraph::new(vertex_count, edges)
}

/// Writes `graph` in the edge-list format, one edge per line in sequence order.
pub fn render_edge_list(graph: &DirectedGraph) -> String {
    let mut out = String::with_capacity(graph.edges.len() * 8);
    for &(s, t) in &graph.edges {
        let _ = writeln!(out, "{s} {t}");
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexDegree {
    pub vertex: usize,
    pub in_degree: usize,
    pub out_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realizability {
    pub in_degree: Vec<usize>,
    pub out_degree: Vec<usize>,
    /// Vertices whose in- and out-degree differ, ascending.
    pub violations: Vec<VertexDegree>,
}

impl Realizability {
    pub fn is_realizable(&self) -> bool {
        self.violations.is_empty()
    }

    /// Whether every vertex in `vertices` is balanced.
    pub fn balanced_on(&self, vertices: impl IntoIterator<Item = usize>) -> bool {
        vertices.into_iter().all(|v| self.in_degree[v] == self.out_degree[v])
    }
}

/// A unitary walk with some in/out edge pairing exists iff every vertex has
/// equal in- and out-degree.
pub fn check_unitary_realizable(graph: &DirectedGraph) -> Realizability {
    let (in_degree, out_degree) = graph.degrees();
    let violations = in_degree
        .iter()
        .zip(&out_degree)
        .enumerate()
        .filter(|(_, (i, o))| i != o)
        .map(|(vertex, (&in_degree, &out_degree))| VertexDegree { vertex, in_degree, out_degree })
        .collect();
    Realizability { in_degree, out_degree, violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn two_coin_line_has_one_self_loop_per_vertex() {
        let g = build_line_with_loops(LineWithLoopsSpec::new(2, 2, 1).unwrap()).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 0), (1, 2), (1, 1), (2, 2)]);
    }

    #[test]
    fn coin_dimension_one_is_a_bare_path() {
        let g = build_line_with_loops(LineWithLoopsSpec::new(1, 3, 1).unwrap()).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn discretized_loops_use_auxiliary_cycles() {
        let spec = LineWithLoopsSpec::new(2, 1, 3).unwrap();
        let g = build_line_with_loops(spec).unwrap();
        // 2 line vertices, each with one loop through 2 auxiliary vertices.
        assert_eq!(g.vertex_count(), 2 + 2 * 2);
        assert_eq!(g.edges().len(), 1 + 2 * 3);
        let (indeg, outdeg) = g.degrees();
        for v in 2..6 {
            assert_eq!((indeg[v], outdeg[v]), (1, 1), "aux vertex {v}");
        }
        assert_eq!(&g.edges()[1..4], &[(0, 2), (2, 3), (3, 0)]);
    }

    #[test]
    fn rejects_degenerate_specs() {
        assert!(LineWithLoopsSpec::new(0, 1, 1).is_err());
        assert!(LineWithLoopsSpec::new(1, 0, 1).is_err());
        assert!(LineWithLoopsSpec::new(1, 1, 0).is_err());
        let bad = LineWithLoopsSpec { n: 2, x_max: 0, loop_length: 1 };
        assert!(build_line_with_loops(bad).is_err());
    }

    #[test]
    fn parses_edges_comments_and_blanks() {
        let g = parse_edge_list("0 1\n1 1\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), &[(0, 1), (1, 1)]);

        let g = parse_edge_list("# comment\n\n0 0\n").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edges(), &[(0, 0)]);

        let g = parse_edge_list("").unwrap();
        assert_eq!(g.vertex_count(), 0);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_edge_list("0 x\n"),
            Err(Error::Parse { line: 1, reason: "invalid target vertex `x`".into() })
        );
        assert!(matches!(parse_edge_list("0 1\n\n2\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_edge_list("0 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("-1 0\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn line_interior_is_balanced_endpoints_are_not() {
        let g = build_line_with_loops(LineWithLoopsSpec::new(4, 10, 1).unwrap()).unwrap();
        let r = check_unitary_realizable(&g);
        assert!(r.balanced_on(1..10));
        for v in 1..10 {
            assert_eq!((r.in_degree[v], r.out_degree[v]), (4, 4));
        }
        let bad: Vec<_> = r.violations.iter().map(|d| d.vertex).collect();
        assert_eq!(bad, vec![0, 10]);
        assert_eq!(r.violations[0], VertexDegree { vertex: 0, in_degree: 3, out_degree: 4 });
        assert!(!r.is_realizable());
    }

    #[test]
    fn single_edge_is_unbalanced() {
        let g = DirectedGraph::new(2, vec![(0, 1)]).unwrap();
        let r = check_unitary_realizable(&g);
        assert!(!r.is_realizable());
        assert_eq!(r.violations[0], VertexDegree { vertex: 0, in_degree: 0, out_degree: 1 });
    }

    #[test]
    fn two_cycle_with_loop_is_balanced() {
        let g = DirectedGraph::new(2, vec![(0, 1), (1, 0), (0, 0)]).unwrap();
        let r = check_unitary_realizable(&g);
        assert!(r.is_realizable());
        assert_eq!(r.in_degree, vec![2, 1]);
        assert_eq!(r.out_degree, vec![2, 1]);
    }

    #[test]
    fn new_rejects_out_of_range_vertices() {
        assert!(DirectedGraph::new(1, vec![(0, 1)]).is_err());
    }

    proptest! {
        #[test]
        fn edge_list_round_trips(edges in proptest::collection::vec((0usize..50, 0usize..50), 0..40)) {
            let n = edges.iter().map(|&(s, t)| s.max(t) + 1).max().unwrap_or(0);
            let g = DirectedGraph::new(n, edges).unwrap();
            prop_assert_eq!(parse_edge_list(&render_edge_list(&g)).unwrap(), g);
        }

        #[test]
        fn generated_lines_are_balanced_inside(n in 1usize..9, x_max in 1usize..12, len in 1usize..5) {
            let spec = LineWithLoopsSpec::new(n, x_max, len).unwrap();
            let g = build_line_with_loops(spec).unwrap();
            let r = check_unitary_realizable(&g);
            for v in 1..x_max {
                prop_assert_eq!((r.in_degree[v], r.out_degree[v]), (n, n));
            }
            prop_assert!(r.balanced_on(x_max + 1..g.vertex_count()));
            for v in x_max + 1..g.vertex_count() {
                prop_assert_eq!((r.in_degree[v], r.out_degree[v]), (1, 1));
            }
        }
    }
}
