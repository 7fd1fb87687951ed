//! Undirected simple graphs with dense integer vertex ids and cached degrees.
//!
//! Every index and bound in this crate consumes this representation. Graphs
//! are immutable once built, so they can be shared freely across threads.

use crate::error::{Error, Result};

/// An immutable undirected simple graph.
///
/// Vertices are `0..vertex_count`. Edges are stored as unordered pairs,
/// normalized to `(min, max)` and kept sorted and deduplicated. Degrees are
/// computed once at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(u32, u32)>,
    degrees: Vec<u32>,
}

/// Minimum/maximum degree of a graph with at least one edge.
///
/// `delta` is taken over vertices of degree >= 1; vertices of degree zero are
/// counted separately in `isolated_count`. All degree-based bounds in this
/// crate use this convention, since isolated vertices contribute to no edge
/// term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct DegreeExtremes {
    pub delta: usize,
    pub max_degree: usize,
    pub isolated_count: usize,
}

impl Graph {
    /// Builds a graph from unordered vertex pairs.
    ///
    /// Duplicate pairs and orientation flips collapse to a single edge. When
    /// `vertex_count` is `None`, the vertex count is `1 + max index` (zero
    /// for empty input). Self-loops and out-of-range indices are rejected.
    pub fn from_edge_list<I>(pairs: I, vertex_count: Option<usize>) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges: Vec<(u32, u32)> = Vec::new();
        let mut max_seen: usize = 0;
        let mut any = false;
        for (a, b) in pairs {
            if a == b {
                return Err(Error::SelfLoop { u: a });
            }
            if let Some(n) = vertex_count {
                let bad = if a >= n {
                    Some(a)
                } else if b >= n {
                    Some(b)
                } else {
                    None
                };
                if let Some(index) = bad {
                    return Err(Error::VertexOutOfRange {
                        index,
                        vertex_count: n,
                    });
                }
            }
            any = true;
            max_seen = max_seen.max(a).max(b);
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            edges.push((lo as u32, hi as u32));
        }
        let n = vertex_count.unwrap_or(if any { max_seen + 1 } else { 0 });
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_sorted_unique_edges(n, edges))
    }

    /// Builds a graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Self {
        Self {
            vertex_count: n,
            edges: Vec::new(),
            degrees: vec![0; n],
        }
    }

    /// Internal constructor for edge lists already normalized to
    /// `(lo, hi)` with `lo < hi`, sorted and unique.
    pub(crate) fn from_sorted_unique_edges(n: usize, edges: Vec<(u32, u32)>) -> Self {
        debug_assert!(
            edges.windows(2).all(|w| w[0] < w[1]),
            "edges not sorted/unique"
        );
        debug_assert!(edges.iter().all(|&(u, v)| u < v && (v as usize) < n.max(1)));
        let mut degrees = vec![0u32; n];
        for &(u, v) in &edges {
            degrees[u as usize] += 1;
            degrees[v as usize] += 1;
        }
        Self {
            vertex_count: n,
            edges,
            degrees,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in sorted order.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v] as usize
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn isolated_count(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 0).count()
    }

    /// Minimum (over non-isolated vertices) and maximum degree.
    ///
    /// Fails on edgeless graphs, where neither is defined.
    pub fn degree_extremes(&self) -> Result<DegreeExtremes> {
        if self.edges.is_empty() {
            return Err(Error::NoEdges);
        }
        let mut delta = usize::MAX;
        let mut max_degree = 0;
        let mut isolated_count = 0;
        for &d in &self.degrees {
            let d = d as usize;
            if d == 0 {
                isolated_count += 1;
            } else {
                delta = delta.min(d);
                max_degree = max_degree.max(d);
            }
        }
        Ok(DegreeExtremes {
            delta,
            max_degree,
            isolated_count,
        })
    }

    /// Partition of the vertex set into connected components.
    ///
    /// Components are sorted by their smallest vertex; isolated vertices form
    /// singletons.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count;
        let mut parent: Vec<usize> = (0..n).collect();

        fn find(parent: &mut [usize], mut v: usize) -> usize {
            let mut root = v;
            while parent[root] != root {
                root = parent[root];
            }
            while parent[v] != root {
                let next = parent[v];
                parent[v] = root;
                v = next;
            }
            root
        }

        for &(u, v) in &self.edges {
            let ru = find(&mut parent, u as usize);
            let rv = find(&mut parent, v as usize);
            if ru != rv {
                let (lo, hi) = if ru < rv { (ru, rv) } else { (rv, ru) };
                parent[hi] = lo;
            }
        }

        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut group_of_root = vec![usize::MAX; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            if group_of_root[r] == usize::MAX {
                group_of_root[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[group_of_root[r]].push(v);
        }
        groups
    }

    /// True iff every connected component is regular, i.e. both endpoints of
    /// every edge have the same degree.
    pub fn is_componentwise_regular(&self) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| self.degrees[u as usize] == self.degrees[v as usize])
    }

    /// True iff all non-isolated vertices share a single degree.
    pub fn is_regular(&self) -> bool {
        let mut shared = None;
        for &d in &self.degrees {
            if d == 0 {
                continue;
            }
            match shared {
                None => shared = Some(d),
                Some(s) if s != d => return false,
                _ => {}
            }
        }
        true
    }

    /// Serializes to the edge-list text format, including the `n=` header so
    /// isolated vertices survive a round trip.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("n={}\n", self.vertex_count));
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }

    /// Disjoint union; vertices of `other` are shifted past `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(
            other
                .edges
                .iter()
                .map(|&(u, v)| (u + offset as u32, v + offset as u32)),
        );
        Graph::from_sorted_unique_edges(self.vertex_count + other.vertex_count, edges)
    }

    // --- standard families, used throughout the tests and the enumerator ---

    /// Path P_n on `n` vertices (n-1 edges).
    pub fn path(n: usize) -> Self {
        Self::from_sorted_unique_edges(n, (1..n).map(|v| ((v - 1) as u32, v as u32)).collect())
    }

    /// Cycle C_n, n >= 3.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<(u32, u32)> = (1..n).map(|v| ((v - 1) as u32, v as u32)).collect();
        edges.push((0, (n - 1) as u32));
        edges.sort_unstable();
        Self::from_sorted_unique_edges(n, edges)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u as u32, v as u32));
            }
        }
        Self::from_sorted_unique_edges(n, edges)
    }

    /// Star K_{1,k}: vertex 0 joined to `k` leaves.
    pub fn star(k: usize) -> Self {
        Self::from_sorted_unique_edges(k + 1, (1..=k).map(|v| (0, v as u32)).collect())
    }

    /// Complete bipartite graph K_{n1,n2}; side one is `0..n1`.
    pub fn complete_bipartite(n1: usize, n2: usize) -> Self {
        let mut edges = Vec::with_capacity(n1 * n2);
        for u in 0..n1 {
            for v in 0..n2 {
                edges.push((u as u32, (n1 + v) as u32));
            }
        }
        Self::from_sorted_unique_edges(n1 + n2, edges)
    }
}

/// A graph parsed from the edge-list text format, together with the original
/// vertex labels (`labels[i]` is the file label of dense vertex `i`).
#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub labels: Vec<u64>,
}

/// Parses the edge-list text format.
///
/// One edge per line as two whitespace-separated non-negative integers.
/// Lines starting with `#` are comments; blank lines are ignored. An optional
/// header `n=<count>` before the first edge fixes the vertex count, in which
/// case labels must be dense indices below it. Without a header, sparse
/// labels are remapped (in sorted order) onto `0..k`.
pub fn parse_edge_list(text: &str) -> Result<ParsedGraph> {
    let mut declared_n: Option<usize> = None;
    let mut raw_edges: Vec<(u64, u64, usize)> = Vec::new();

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n=") {
            if declared_n.is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    message: "duplicate n= header".into(),
                });
            }
            if !raw_edges.is_empty() {
                return Err(Error::Parse {
                    line: line_no,
                    message: "n= header must precede all edges".into(),
                });
            }
            let n: usize = rest.trim().parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid vertex count {rest:?}"),
            })?;
            declared_n = Some(n);
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected two vertex labels, got {line:?}"),
                })
            }
        };
        let parse_label = |tok: &str| -> Result<u64> {
            tok.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid vertex label {tok:?}"),
            })
        };
        let (a, b) = (parse_label(a)?, parse_label(b)?);
        if a == b {
            return Err(Error::Parse {
                line: line_no,
                message: format!("self-loop edge ({a}, {b}) is not allowed"),
            });
        }
        raw_edges.push((a, b, line_no));
    }

    let (labels, pairs) = match declared_n {
        Some(n) => {
            for &(a, b, line_no) in &raw_edges {
                let bad = if a as usize >= n || a > usize::MAX as u64 {
                    Some(a)
                } else if b as usize >= n || b > usize::MAX as u64 {
                    Some(b)
                } else {
                    None
                };
                if let Some(label) = bad {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("vertex label {label} exceeds declared n={n}"),
                    });
                }
            }
            let labels: Vec<u64> = (0..n as u64).collect();
            let pairs: Vec<(usize, usize)> = raw_edges
                .iter()
                .map(|&(a, b, _)| (a as usize, b as usize))
                .collect();
            (labels, (pairs, Some(n)))
        }
        None => {
            let mut labels: Vec<u64> = raw_edges.iter().flat_map(|&(a, b, _)| [a, b]).collect();
            labels.sort_unstable();
            labels.dedup();
            let dense = |label: u64| labels.binary_search(&label).expect("label present");
            let pairs: Vec<(usize, usize)> = raw_edges
                .iter()
                .map(|&(a, b, _)| (dense(a), dense(b)))
                .collect();
            let n = labels.len();
            (labels, (pairs, Some(n)))
        }
    };

    let graph = Graph::from_edge_list(pairs.0, pairs.1)?;
    Ok(ParsedGraph { graph, labels })
}
