use crate::stream::NodeId;

/// Undirected simple graph over dense node ids, with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaticGraph {
    adjacency: Vec<Vec<NodeId>>,
}

impl StaticGraph {
    /// Self-loops and repeated edges are dropped.
    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (NodeId, NodeId)>) -> Self {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            if u == v {
                continue;
            }
            adjacency[u.index()].push(v);
            adjacency[v.index()].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        StaticGraph { adjacency }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = NodeId> {
        (0..self.adjacency.len() as u32).map(NodeId)
    }

    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v.index()]
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.adjacency[u.index()].binary_search(&v).is_ok()
    }

    /// True iff every two distinct nodes of `nodes` are adjacent.
    pub fn is_clique(&self, nodes: &[NodeId]) -> bool {
        nodes
            .iter()
            .enumerate()
            .all(|(i, &u)| nodes[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_deduplicated_and_symmetric() {
        let g = StaticGraph::from_edges(
            3,
            [(NodeId(0), NodeId(1)), (NodeId(1), NodeId(0)), (NodeId(2), NodeId(2))],
        );
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(NodeId(1), NodeId(0)));
        assert!(!g.has_edge(NodeId(2), NodeId(2)));
        assert!(g.is_clique(&[NodeId(0), NodeId(1)]));
        assert!(!g.is_clique(&[NodeId(0), NodeId(1), NodeId(2)]));
    }
}
