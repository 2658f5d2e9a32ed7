//! Finite simple graphs up to isomorphism: constructors, canonical
//! certificates, induced subgraphs, four-term moves and circumference.
//!
//! Everything here is desk scale. Certificates are supported up to
//! [`MAX_CERT_VERTICES`] vertices, which covers K_{3,10}; circumference up
//! to 12 vertices.

use std::fmt;

use thiserror::Error;

// adjacency fits in u16; certificates pack into u128 (13*12/2 = 78 bits)

/// Certificate bound: degree refinement plus backtracking stays fast here.
pub const MAX_CERT_VERTICES: usize = 13;
/// Exhaustive longest-cycle search bound.
pub const MAX_CIRCUMFERENCE_VERTICES: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("graph on {0} vertices exceeds the supported bound {1}")]
    SizeBound(usize, usize),
    #[error("the two vertices must be distinct")]
    SameVertex,
    #[error("invalid edge-list text: {0}")]
    Parse(String),
}

/// Simple graph: no loops, no multi-edges. Adjacency is a symmetric bitmask
/// per vertex, so vertex count is limited to 16.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u16>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        assert!(n <= 16, "graph too large for bitmask adjacency");
        Graph {
            n,
            adj: vec![0; n],
        }
    }

    pub fn empty() -> Self {
        Graph::new(0)
    }

    /// Complete bipartite graph with parts {0..l} and {l..l+n}.
    pub fn complete_bipartite(l: usize, n: usize) -> Self {
        let mut g = Graph::new(l + n);
        for u in 0..l {
            for v in l..l + n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SameVertex);
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Parses the edge-list text form `"n; u-v,u-v,..."` (0-based vertices).
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let bad = |msg: &str| GraphError::Parse(msg.to_string());
        let (head, tail) = match text.split_once(';') {
            Some(parts) => parts,
            None => (text, ""),
        };
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| bad("vertex count is not a number"))?;
        if n > 16 {
            return Err(GraphError::SizeBound(n, 16));
        }
        let mut edges = Vec::new();
        for chunk in tail.split(',') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let (u, v) = chunk
                .split_once('-')
                .ok_or_else(|| bad("edge is not of the form u-v"))?;
            let u: usize = u.trim().parse().map_err(|_| bad("bad edge endpoint"))?;
            let v: usize = v.trim().parse().map_err(|_| bad("bad edge endpoint"))?;
            edges.push((u, v));
        }
        Graph::from_edges(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.remove_edge(u, v);
        } else {
            self.add_edge(u, v);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let mask = self.adj[u];
        (0..self.n).filter(move |v| mask & (1 << v) != 0)
    }

    /// Induced subgraph on the listed vertices, renumbered by list order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            if u >= self.n {
                return Err(GraphError::VertexOutOfRange(u, self.n));
            }
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Induced subgraph on the vertices selected by a bitmask.
    pub fn induced_mask(&self, mask: u16) -> Graph {
        let verts: Vec<usize> = (0..self.n).filter(|v| mask & (1 << v) != 0).collect();
        self.induced(&verts).expect("mask vertices in range")
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for u in 0..self.n {
            g.adj[u] = self.adj[u];
        }
        for u in 0..other.n {
            g.adj[self.n + u] = other.adj[u] << self.n;
        }
        g
    }

    /// Vertex sets of connected components, each sorted ascending.
    pub fn component_vertex_sets(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Induced subgraphs on the connected components.
    pub fn components(&self) -> Vec<Graph> {
        self.component_vertex_sets()
            .iter()
            .map(|c| self.induced(c).expect("component vertices in range"))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_vertex_sets().len() == 1
    }

    /// The four-term quadruple (G, G'_{AB}, G~_{AB}, G~'_{AB}): G' toggles
    /// the edge AB; G~ toggles the A-adjacency of every vertex joined with B
    /// other than A and B themselves.
    pub fn four_term_graphs(
        &self,
        a: usize,
        b: usize,
    ) -> Result<(Graph, Graph, Graph, Graph), GraphError> {
        if a == b {
            return Err(GraphError::SameVertex);
        }
        if a >= self.n {
            return Err(GraphError::VertexOutOfRange(a, self.n));
        }
        if b >= self.n {
            return Err(GraphError::VertexOutOfRange(b, self.n));
        }
        let g = self.clone();
        let mut g_prime = self.clone();
        g_prime.toggle_edge(a, b);
        let mut g_tilde = self.clone();
        for v in 0..self.n {
            if v != a && v != b && self.has_edge(v, b) {
                g_tilde.toggle_edge(a, v);
            }
        }
        let mut g_tilde_prime = g_tilde.clone();
        g_tilde_prime.toggle_edge(a, b);
        Ok((g, g_prime, g_tilde, g_tilde_prime))
    }

    /// Length of the longest simple cycle; 0 for forests. Exhaustive DFS,
    /// anchored at the smallest vertex of each candidate cycle.
    pub fn circumference(&self) -> Result<usize, GraphError> {
        if self.n > MAX_CIRCUMFERENCE_VERTICES {
            return Err(GraphError::SizeBound(self.n, MAX_CIRCUMFERENCE_VERTICES));
        }
        let mut best = 0usize;
        let mut visited = vec![false; self.n];
        for start in 0..self.n {
            visited[start] = true;
            self.longest_cycle_from(start, start, 1, &mut visited, &mut best);
            visited[start] = false;
        }
        Ok(best)
    }

    fn longest_cycle_from(
        &self,
        start: usize,
        u: usize,
        depth: usize,
        visited: &mut Vec<bool>,
        best: &mut usize,
    ) {
        for v in self.neighbors(u) {
            if v == start && depth >= 3 {
                *best = (*best).max(depth);
            }
            // only walk vertices above the anchor so each cycle is seen once
            if v > start && !visited[v] {
                visited[v] = true;
                self.longest_cycle_from(start, v, depth + 1, visited, best);
                visited[v] = false;
            }
        }
    }

    /// Part sizes `(a, b)` with `a <= b` if this graph is complete bipartite
    /// (empty parts allowed), `None` otherwise.
    pub fn as_complete_bipartite(&self) -> Option<(usize, usize)> {
        if self.edge_count() == 0 {
            return Some((0, self.n));
        }
        // 2-color; fails on odd cycles and on isolated vertices next to edges
        let mut color = vec![usize::MAX; self.n];
        let mut stack = vec![0usize];
        color[0] = 0;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if color[v] == usize::MAX {
                    color[v] = 1 - color[u];
                    stack.push(v);
                } else if color[v] == color[u] {
                    return None;
                }
            }
        }
        if color.contains(&usize::MAX) {
            return None; // disconnected with at least one edge
        }
        let a: Vec<usize> = (0..self.n).filter(|&v| color[v] == 0).collect();
        let b: Vec<usize> = (0..self.n).filter(|&v| color[v] == 1).collect();
        for &u in &a {
            for &v in &b {
                if !self.has_edge(u, v) {
                    return None;
                }
            }
        }
        Some((a.len().min(b.len()), a.len().max(b.len())))
    }

    /// Canonical certificate: equal byte strings exactly when the graphs are
    /// isomorphic. Degree-partition refinement plus backtracking over
    /// automorphism-compatible labelings; cells of mutually interchangeable
    /// vertices are ordered without branching.
    pub fn certificate(&self) -> Result<Vec<u8>, GraphError> {
        if self.n > MAX_CERT_VERTICES {
            return Err(GraphError::SizeBound(self.n, MAX_CERT_VERTICES));
        }
        let mut best: Option<u128> = None;
        let initial = if self.n == 0 {
            Vec::new()
        } else {
            vec![(0..self.n).collect()]
        };
        let cells = self.refine(initial);
        self.canonical_search(cells, &mut best);
        let bits = best.unwrap_or(0);
        let mut bytes = vec![self.n as u8];
        bytes.extend_from_slice(&bits.to_be_bytes()[6..]); // 78 bits fit in 10 bytes
        Ok(bytes)
    }

    pub fn certificate_hex(&self) -> Result<String, GraphError> {
        Ok(self
            .certificate()?
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect())
    }

    /// Equitable refinement: split cells by multiset of neighbor cell counts
    /// until stable. Cell order is deterministic, so isomorphic graphs refine
    /// to corresponding partitions.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        loop {
            let mut changed = false;
            let mut cell_of = vec![0usize; self.n];
            for (ci, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = ci;
                }
            }
            let mut next: Vec<Vec<usize>> = Vec::new();
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                // signature: counts of neighbors per cell
                let mut by_sig: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
                for &v in cell {
                    let mut sig = vec![0usize; cells.len()];
                    for w in self.neighbors(v) {
                        sig[cell_of[w]] += 1;
                    }
                    match by_sig.iter_mut().find(|(s, _)| *s == sig) {
                        Some((_, members)) => members.push(v),
                        None => by_sig.push((sig, vec![v])),
                    }
                }
                if by_sig.len() > 1 {
                    changed = true;
                    by_sig.sort_by(|a, b| a.0.cmp(&b.0));
                }
                next.extend(by_sig.into_iter().map(|(_, members)| members));
            }
            cells = next;
            if !changed {
                return cells;
            }
        }
    }

    fn canonical_search(&self, cells: Vec<Vec<usize>>, best: &mut Option<u128>) {
        if let Some(target) = cells.iter().position(|c| c.len() > 1) {
            let cell = &cells[target];
            // mutually interchangeable vertices need no branching
            if self.cell_is_twin_class(cell) {
                let mut next: Vec<Vec<usize>> = Vec::new();
                for (i, c) in cells.iter().enumerate() {
                    if i == target {
                        next.extend(c.iter().map(|&v| vec![v]));
                    } else {
                        next.push(c.clone());
                    }
                }
                let refined = self.refine(next);
                self.canonical_search(refined, best);
                return;
            }
            for &v in cell {
                let mut next: Vec<Vec<usize>> = Vec::new();
                for (i, c) in cells.iter().enumerate() {
                    if i == target {
                        next.push(vec![v]);
                        next.push(c.iter().copied().filter(|&u| u != v).collect());
                    } else {
                        next.push(c.clone());
                    }
                }
                let refined = self.refine(next);
                self.canonical_search(refined, best);
            }
            return;
        }
        // discrete partition: read off the adjacency bits in the new order
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let bits = self.upper_triangle_bits(&order);
        match best {
            Some(b) if *b <= bits => {}
            _ => *best = Some(bits),
        }
    }

    fn cell_is_twin_class(&self, cell: &[usize]) -> bool {
        for (i, &u) in cell.iter().enumerate() {
            for &v in &cell[i + 1..] {
                let strip = !((1u16 << u) | (1u16 << v));
                if self.adj[u] & strip != self.adj[v] & strip {
                    return false;
                }
            }
        }
        true
    }

    fn upper_triangle_bits(&self, order: &[usize]) -> u128 {
        let mut bits: u128 = 0;
        for i in 0..order.len() {
            for j in (i + 1)..order.len() {
                bits <<= 1;
                if self.has_edge(order[i], order[j]) {
                    bits |= 1;
                }
            }
        }
        bits
    }
}

impl fmt::Display for Graph {
    /// Edge-list text form, the inverse of [`Graph::parse_edge_list`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.n)?;
        let edges = self.edges();
        for (i, (u, v)) in edges.iter().enumerate() {
            write!(f, "{}{u}-{v}", if i == 0 { " " } else { "," })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn complete_bipartite_shapes() {
        let g = Graph::complete_bipartite(0, 1);
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        let g = Graph::complete_bipartite(1, 1);
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        let g = Graph::complete_bipartite(2, 2);
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
        assert_eq!(g.certificate().unwrap(), cycle(4).certificate().unwrap());
    }

    #[test]
    fn certificates_separate_and_identify() {
        // two labelings of the 4-cycle
        let c4a = cycle(4);
        let c4b = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(c4a.certificate().unwrap(), c4b.certificate().unwrap());
        // star vs path on 4 vertices
        let star = Graph::complete_bipartite(1, 3);
        assert_ne!(star.certificate().unwrap(), path(4).certificate().unwrap());
        // K_{2,3} vs K_{3,2}
        assert_eq!(
            Graph::complete_bipartite(2, 3).certificate().unwrap(),
            Graph::complete_bipartite(3, 2).certificate().unwrap()
        );
    }

    #[test]
    fn certificate_exhaustive_on_four_vertices() {
        // group all 64 labeled graphs on 4 vertices by certificate: there are
        // exactly 11 isomorphism classes
        let mut seen = std::collections::HashSet::new();
        for mask in 0u32..64 {
            let mut g = Graph::new(4);
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            for (bit, &(u, v)) in pairs.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    g.add_edge(u, v);
                }
            }
            seen.insert(g.certificate().unwrap());
        }
        assert_eq!(seen.len(), 11);
    }

    #[test]
    fn certificate_respects_union_commutativity() {
        let g = Graph::complete_bipartite(1, 2);
        let h = cycle(5);
        assert_eq!(
            g.disjoint_union(&h).certificate().unwrap(),
            h.disjoint_union(&g).certificate().unwrap()
        );
    }

    #[test]
    fn oversized_certificate_is_rejected() {
        let g = Graph::new(14);
        assert!(matches!(g.certificate(), Err(GraphError::SizeBound(14, _))));
    }

    #[test]
    fn induced_and_components() {
        let g = Graph::complete_bipartite(2, 3);
        let side = g.induced(&[2, 3, 4]).unwrap();
        assert_eq!(side.edge_count(), 0);
        let both = g.induced(&[0, 2, 3]).unwrap();
        assert_eq!(
            both.certificate().unwrap(),
            Graph::complete_bipartite(1, 2).certificate().unwrap()
        );
        assert!(g.induced(&[9]).is_err());

        let u = Graph::complete_bipartite(0, 1).disjoint_union(&Graph::complete_bipartite(0, 1));
        assert_eq!(
            u.certificate().unwrap(),
            Graph::complete_bipartite(0, 2).certificate().unwrap()
        );
        assert_eq!(Graph::complete_bipartite(0, 3).components().len(), 3);
    }

    #[test]
    fn induced_subgraph_of_bipartite_is_bipartite() {
        for l in 0..=6usize {
            for n in 0..=6usize {
                if l + n > 6 || l + n == 0 {
                    continue;
                }
                let g = Graph::complete_bipartite(l, n);
                for mask in 0u16..(1 << (l + n)) {
                    let sub = g.induced_mask(mask);
                    let a = (0..l).filter(|v| mask & (1 << v) != 0).count();
                    let b = (l..l + n).filter(|v| mask & (1 << v) != 0).count();
                    let expect = Graph::complete_bipartite(a, b);
                    assert_eq!(
                        sub.certificate().unwrap(),
                        expect.certificate().unwrap(),
                        "K_{{{l},{n}}} mask {mask:b}"
                    );
                }
            }
        }
    }

    #[test]
    fn four_term_graph_moves() {
        // edgeless on {A,B}: G' gains exactly the edge AB
        let g = Graph::new(3);
        let (g0, g1, g2, g3) = g.four_term_graphs(0, 1).unwrap();
        assert_eq!(g0, g);
        assert_eq!(g1.edges(), vec![(0, 1)]);
        assert_eq!(g2, g); // B isolated: nothing joined with B
        assert_eq!(g3, g1);
        // all four share the vertex count
        let h = Graph::complete_bipartite(2, 3);
        let (h0, h1, h2, h3) = h.four_term_graphs(0, 2).unwrap();
        for hi in [&h0, &h1, &h2, &h3] {
            assert_eq!(hi.vertex_count(), 5);
        }
        assert!(h.four_term_graphs(1, 1).is_err());
    }

    #[test]
    fn circumference_values() {
        assert_eq!(cycle(4).circumference().unwrap(), 4);
        assert_eq!(path(5).circumference().unwrap(), 0);
        assert_eq!(Graph::complete_bipartite(1, 3).circumference().unwrap(), 0);
        assert_eq!(Graph::complete_bipartite(3, 4).circumference().unwrap(), 6);
        for l in 0..=4usize {
            for n in 0..=4usize {
                let expect = if l.min(n) >= 2 { 2 * l.min(n) } else { 0 };
                assert_eq!(
                    Graph::complete_bipartite(l, n).circumference().unwrap(),
                    expect,
                    "K_{{{l},{n}}}"
                );
            }
        }
    }

    #[test]
    fn bipartite_recognition() {
        assert_eq!(Graph::new(3).as_complete_bipartite(), Some((0, 3)));
        assert_eq!(
            Graph::complete_bipartite(2, 3).as_complete_bipartite(),
            Some((2, 3))
        );
        assert_eq!(cycle(4).as_complete_bipartite(), Some((2, 2)));
        assert_eq!(cycle(5).as_complete_bipartite(), None);
        assert_eq!(path(4).as_complete_bipartite(), None);
        // edge plus isolated vertex is not complete bipartite
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(g.as_complete_bipartite(), None);
    }

    #[test]
    fn edge_list_round_trip() {
        for text in ["3;", "5; 0-1,1-2,2-3,3-4,4-0", "2; 0-1"] {
            let g = Graph::parse_edge_list(text).unwrap();
            let back = Graph::parse_edge_list(&g.to_string()).unwrap();
            assert_eq!(g, back);
        }
        assert!(Graph::parse_edge_list("x; 0-1").is_err());
        assert!(Graph::parse_edge_list("3; 0-3").is_err());
        assert!(Graph::parse_edge_list("3; 1-1").is_err());
        assert!(Graph::parse_edge_list("3; 0+1").is_err());
        assert!(!Graph::parse_edge_list("4; 0-1,2-3")
            .unwrap()
            .certificate_hex()
            .unwrap()
            .is_empty());
    }
}
