//! Labeled simple graphs with the structural queries the rest of the crate needs.
//!
//! Vertices are opaque string labels. All deterministic orderings follow
//! insertion order, not lexicographic order, so inputs fully determine the
//! behavior of every algorithm downstream.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("edge endpoint {0:?} is not a declared vertex")]
    UnknownEndpoint(String),
    #[error("self-loop on {0:?}")]
    SelfLoop(String),
    #[error("duplicate edge {0:?}-{1:?}")]
    DuplicateEdge(String, String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("graph is not connected")]
    Disconnected,
}

/// A finite simple graph with string vertex labels.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
}

/// Shape classification used by the extension algorithm's degenerate cases.
///
/// `K_1` and `K_2` report `Complete` (they are also degenerate stars); the
/// star variant is reserved for a unique center of degree at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Complete,
    Star(String),
    Other,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph{{V: {:?}, E: [", self.labels)?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
            first = false;
        }
        write!(f, "]}}")
    }
}

impl Graph {
    /// Builds a graph from vertex labels and edge pairs. Edge endpoints must
    /// be declared vertices.
    pub fn build<S, T>(
        vertices: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (T, T)>,
    ) -> Result<Self, GraphError>
    where
        S: Into<String>,
        T: Into<String>,
    {
        let mut g = Graph {
            labels: Vec::new(),
            index: HashMap::new(),
            adj: Vec::new(),
        };
        for v in vertices {
            let v = v.into();
            if g.index.contains_key(&v) {
                return Err(GraphError::DuplicateVertex(v));
            }
            g.index.insert(v.clone(), g.labels.len());
            g.labels.push(v);
            g.adj.push(BTreeSet::new());
        }
        for (u, v) in edges {
            let (u, v) = (u.into(), v.into());
            let ui = *g.index.get(&u).ok_or(GraphError::UnknownEndpoint(u.clone()))?;
            let vi = *g.index.get(&v).ok_or(GraphError::UnknownEndpoint(v.clone()))?;
            if ui == vi {
                return Err(GraphError::SelfLoop(u));
            }
            if g.adj[ui].contains(&vi) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            g.adj[ui].insert(vi);
            g.adj[vi].insert(ui);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|n| n.len()).sum::<usize>() / 2
    }

    /// Vertex labels in insertion order.
    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(|s| s.as_str())
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    /// Edges as label pairs, endpoint-ordered by insertion index.
    pub fn edges(&self) -> Vec<(&str, &str)> {
        let mut out = Vec::new();
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((self.labels[u].as_str(), self.labels[v].as_str()));
                }
            }
        }
        out
    }

    /// True iff `u` and `v` are adjacent. Unknown labels are never adjacent.
    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.index.get(u), self.index.get(v)) {
            (Some(&ui), Some(&vi)) => self.adj[ui].contains(&vi),
            _ => false,
        }
    }

    pub fn neighbors(&self, v: &str) -> Vec<&str> {
        let vi = self.index[v];
        self.adj[vi].iter().map(|&u| self.labels[u].as_str()).collect()
    }

    pub fn degree(&self, v: &str) -> usize {
        self.adj[self.index[v]].len()
    }

    pub(crate) fn idx(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub(crate) fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub(crate) fn adj_idx(&self, i: usize) -> &BTreeSet<usize> {
        &self.adj[i]
    }

    pub(crate) fn has_edge_idx(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    /// The subgraph induced by the labels in `keep`, preserving insertion order.
    pub fn induced_subgraph<'a>(
        &self,
        keep: impl IntoIterator<Item = &'a str>,
    ) -> Result<Graph, GraphError> {
        let mut mask = vec![false; self.labels.len()];
        for l in keep {
            let i = self
                .idx(l)
                .ok_or_else(|| GraphError::UnknownVertex(l.to_string()))?;
            mask[i] = true;
        }
        let verts: Vec<&String> = self
            .labels
            .iter()
            .enumerate()
            .filter(|(i, _)| mask[*i])
            .map(|(_, l)| l)
            .collect();
        let mut edges = Vec::new();
        for (u, nbrs) in self.adj.iter().enumerate() {
            if !mask[u] {
                continue;
            }
            for &v in nbrs {
                if u < v && mask[v] {
                    edges.push((self.labels[u].clone(), self.labels[v].clone()));
                }
            }
        }
        Graph::build(verts.into_iter().cloned(), edges)
    }

    /// Maximal connected vertex sets, each in insertion order, listed in
    /// order of their smallest member.
    pub fn connected_components(&self) -> Vec<Vec<String>> {
        let n = self.labels.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp.into_iter().map(|i| self.labels[i].clone()).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Classifies a connected graph as complete, a star, or neither.
    pub fn classify_shape(&self) -> Result<Shape, GraphError> {
        let n = self.labels.len();
        if n == 0 || !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if self.adj.iter().all(|nb| nb.len() == n - 1) {
            return Ok(Shape::Complete);
        }
        // A star has a unique center adjacent to all others, every other
        // vertex a leaf. K_1/K_2 were already caught as Complete.
        let centers: Vec<usize> = (0..n).filter(|&v| self.adj[v].len() == n - 1).collect();
        if centers.len() == 1 && n >= 3 {
            let c = centers[0];
            if (0..n).all(|v| v == c || self.adj[v].len() == 1) {
                return Ok(Shape::Star(self.labels[c].clone()));
            }
        }
        Ok(Shape::Other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn g_star() -> Graph {
        Graph::build(
            ["s", "t", "u", "v", "w", "x"],
            [("s", "u"), ("t", "u"), ("u", "v"), ("v", "x"), ("v", "w")],
        )
        .unwrap()
    }

    #[test]
    fn build_single_vertex() {
        let g = Graph::build(["a"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn build_fixture() {
        let g = g_star();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 5);
        assert!(g.has_edge("s", "u"));
        assert!(g.has_edge("u", "s"));
        assert!(!g.has_edge("s", "t"));
        assert!(!g.has_edge("u", "w"));
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::build(["a", "b"], [("a", "b"), ("a", "b")]).unwrap_err(),
            GraphError::DuplicateEdge("a".into(), "b".into())
        );
        assert_eq!(
            Graph::build(["a", "a"], Vec::<(&str, &str)>::new()).unwrap_err(),
            GraphError::DuplicateVertex("a".into())
        );
        assert_eq!(
            Graph::build(["a"], [("a", "b")]).unwrap_err(),
            GraphError::UnknownEndpoint("b".into())
        );
        assert_eq!(
            Graph::build(["a"], [("a", "a")]).unwrap_err(),
            GraphError::SelfLoop("a".into())
        );
    }

    #[test]
    fn induced_subgraph_fixture() {
        let g = g_star();
        let h = g.induced_subgraph(["s", "t", "w", "x"]).unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.edge_count(), 0);
        let uv = g.induced_subgraph(["u", "v"]).unwrap();
        assert_eq!(uv.edge_count(), 1);
        assert!(uv.has_edge("u", "v"));
        let full: Vec<&str> = g.vertices().collect();
        let same = g.induced_subgraph(full).unwrap();
        assert_eq!(same, g);
        assert_eq!(
            g.induced_subgraph(["nope"]).unwrap_err(),
            GraphError::UnknownVertex("nope".into())
        );
    }

    #[test]
    fn components() {
        let g = g_star();
        assert_eq!(g.connected_components(), vec![vec!["s", "t", "u", "v", "w", "x"]]);
        let h = Graph::build(["a", "b"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(h.connected_components(), vec![vec!["a"], vec!["b"]]);
        let e = Graph::build(Vec::<&str>::new(), Vec::<(&str, &str)>::new()).unwrap();
        assert!(e.connected_components().is_empty());
    }

    #[test]
    fn shapes() {
        let k5 = Graph::build(
            ["1", "2", "3", "4", "5"],
            (1..=5).flat_map(|i| (i + 1..=5).map(move |j| (i.to_string(), j.to_string()))),
        )
        .unwrap();
        assert_eq!(k5.classify_shape().unwrap(), Shape::Complete);

        let star = Graph::build(
            ["c", "l1", "l2", "l3", "l4"],
            [("c", "l1"), ("c", "l2"), ("c", "l3"), ("c", "l4")],
        )
        .unwrap();
        assert_eq!(star.classify_shape().unwrap(), Shape::Star("c".into()));

        assert_eq!(g_star().classify_shape().unwrap(), Shape::Other);

        let k1 = Graph::build(["a"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(k1.classify_shape().unwrap(), Shape::Complete);
        let k2 = Graph::build(["a", "b"], [("a", "b")]).unwrap();
        assert_eq!(k2.classify_shape().unwrap(), Shape::Complete);

        let disc = Graph::build(["a", "b"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(disc.classify_shape().unwrap_err(), GraphError::Disconnected);
    }
}
