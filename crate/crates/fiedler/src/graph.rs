//! Undirected simple graphs on dense 0-based vertex labels, plus the
//! combinatorial primitives used by the decision procedures: components,
//! cut vertices, vertex connectivity, induced-C4 search, cocktail-party
//! recognition, clique number, and line graphs.
//!
//! Adjacency is stored as one 64-bit row per vertex, which caps the order
//! at 64. Everything here targets desk-scale graphs; searches are
//! exhaustive rather than clever.

use crate::error::{Error, Result};

/// Maximum supported order (one adjacency row per u64 word).
pub const MAX_VERTICES: usize = 64;

/// A sorted set of vertex indices, strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        VertexSet(vertices)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

/// An undirected simple graph. Immutable after construction; all
/// operations are pure functions, so values can be shared freely
/// across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                max: MAX_VERTICES,
                got: n,
            });
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidParameter(format!(
                "edge ({u},{v}) out of range for n={}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("self-loop at {u}")));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Vertices attaining the minimum degree.
    pub fn min_degree_vertices(&self) -> VertexSet {
        if self.n == 0 {
            return VertexSet::empty();
        }
        let d = self.min_degree();
        (0..self.n).filter(|&v| self.degree(v) == d).collect()
    }

    /// `Some(r)` iff every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let r = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == r).then_some(r)
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let mut bits = self.rows[u] >> (u + 1).min(64);
            let mut v = u + 1;
            while bits != 0 {
                let shift = bits.trailing_zeros() as usize;
                out.push((u, v + shift));
                v += shift + 1;
                bits >>= shift + 1;
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_edge(v, u)).collect()
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// Complement: edge present iff absent here. An involution.
    pub fn complement(&self) -> Graph {
        let mask = full_mask(self.n);
        let rows = (0..self.n)
            .map(|v| (!self.rows[v] & mask) & !(1u64 << v))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Disjoint union; `other`'s vertices are relabelled after `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::new(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }

    /// Join: disjoint union plus every cross edge. Block labelling is
    /// left-to-right in argument order, which fixes the eigenvector block
    /// layout relied on elsewhere.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v)?;
            }
        }
        Ok(g)
    }

    /// Induced subgraph on `vertices`, relabelled 0.. in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut g = Graph::new(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Connected components as sorted vertex sets, ordered by smallest
    /// member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen & (1 << start) != 0 {
                continue;
            }
            let mut comp = 1u64 << start;
            loop {
                let mut grown = comp;
                let mut bits = comp;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    grown |= self.rows[v];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push(mask_to_set(comp));
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// Cut vertices of a connected graph, via DFS low-points.
    pub fn cut_vertices(&self) -> Result<VertexSet> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.n <= 2 {
            return Ok(VertexSet::empty());
        }
        let mut st = CutSearch {
            disc: vec![usize::MAX; self.n],
            low: vec![0; self.n],
            cut: vec![false; self.n],
            timer: 0,
        };
        self.cut_dfs(0, usize::MAX, &mut st);
        Ok((0..self.n).filter(|&v| st.cut[v]).collect())
    }

    fn cut_dfs(&self, v: usize, parent: usize, st: &mut CutSearch) {
        st.disc[v] = st.timer;
        st.low[v] = st.timer;
        st.timer += 1;
        let mut children = 0;
        for u in 0..self.n {
            if !self.has_edge(v, u) || u == parent {
                continue;
            }
            if st.disc[u] == usize::MAX {
                children += 1;
                self.cut_dfs(u, v, st);
                st.low[v] = st.low[v].min(st.low[u]);
                if parent != usize::MAX && st.low[u] >= st.disc[v] {
                    st.cut[v] = true;
                }
            } else {
                st.low[v] = st.low[v].min(st.disc[u]);
            }
        }
        if parent == usize::MAX && children > 1 {
            st.cut[v] = true;
        }
    }

    /// Vertex connectivity. `n - 1` for complete graphs; otherwise the
    /// minimum vertex cut over non-adjacent pairs, by unit-capacity
    /// max-flow on the vertex-split network.
    pub fn vertex_connectivity(&self) -> Result<usize> {
        if self.n < 2 {
            return Err(Error::TooSmall {
                min: 2,
                got: self.n,
            });
        }
        if self.is_complete() {
            return Ok(self.n - 1);
        }
        if !self.is_connected() {
            return Ok(0);
        }
        let mut best = self.n - 1;
        for s in 0..self.n {
            for t in 0..self.n {
                if s == t || self.has_edge(s, t) {
                    continue;
                }
                best = best.min(self.max_vertex_disjoint_paths(s, t));
            }
        }
        Ok(best)
    }

    /// Number of internally vertex-disjoint s-t paths (Menger).
    fn max_vertex_disjoint_paths(&self, s: usize, t: usize) -> usize {
        // Vertex split: node v becomes v_in = 2v, v_out = 2v+1.
        // Capacities: v_in->v_out 1 (except s, t: unbounded), edges
        // u_out->v_in 1 both ways. Unit capacities, BFS augmentation.
        let n = self.n;
        let nodes = 2 * n;
        let mut cap = vec![std::collections::HashMap::new(); nodes];
        let big = n as i64;
        for v in 0..n {
            let c = if v == s || v == t { big } else { 1 };
            cap[2 * v].insert(2 * v + 1, c);
            cap[2 * v + 1].insert(2 * v, 0);
        }
        for (u, v) in self.edges() {
            *cap[2 * u + 1].entry(2 * v).or_insert(0) += 1;
            cap[2 * v].entry(2 * u + 1).or_insert(0);
            *cap[2 * v + 1].entry(2 * u).or_insert(0) += 1;
            cap[2 * u].entry(2 * v + 1).or_insert(0);
        }
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut flow = 0usize;
        loop {
            let mut parent = vec![usize::MAX; nodes];
            parent[source] = source;
            let mut queue = std::collections::VecDeque::from([source]);
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for (&v, &c) in &cap[u] {
                    if c > 0 && parent[v] == usize::MAX {
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                return flow;
            }
            let mut v = sink;
            while v != source {
                let u = parent[v];
                *cap[u].get_mut(&v).unwrap() -= 1;
                *cap[v].get_mut(&u).unwrap() += 1;
                v = u;
            }
            flow += 1;
        }
    }

    /// First induced 4-cycle found by exhaustive scan over vertex
    /// 4-subsets, returned in cycle order, or `None`.
    pub fn find_induced_c4(&self) -> Option<[usize; 4]> {
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        // Three pairings of {a,b,c,d} into a 4-cycle.
                        for [p, q, r, s] in [[a, b, c, d], [a, c, b, d], [a, b, d, c]] {
                            if self.has_edge(p, q)
                                && self.has_edge(q, r)
                                && self.has_edge(r, s)
                                && self.has_edge(s, p)
                                && !self.has_edge(p, r)
                                && !self.has_edge(q, s)
                            {
                                return Some([p, q, r, s]);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// `Some(k)` iff this is the cocktail party graph on 2k vertices
    /// (K_{2k} minus a perfect matching): every vertex has exactly one
    /// non-neighbour and the pairing is an involution.
    pub fn is_cocktail_party(&self) -> Option<usize> {
        if self.n == 0 || !self.n.is_multiple_of(2) {
            return None;
        }
        for v in 0..self.n {
            if self.degree(v) != self.n - 2 {
                return None;
            }
        }
        // Degree n-2 means exactly one non-neighbour; the pairing is then
        // automatically an involution.
        Some(self.n / 2)
    }

    /// Exact clique number by branch and bound over bitsets.
    pub fn clique_number(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        let mut best = 1;
        let all = full_mask(self.n);
        self.clique_search(0, all, &mut best);
        best
    }

    fn clique_search(&self, size: usize, candidates: u64, best: &mut usize) {
        if size + candidates.count_ones() as usize <= *best {
            return;
        }
        if candidates == 0 {
            *best = (*best).max(size);
            return;
        }
        let mut cands = candidates;
        while cands != 0 {
            if size + cands.count_ones() as usize <= *best {
                return;
            }
            let v = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            self.clique_search(size + 1, cands & self.rows[v], best);
        }
    }

    /// Line graph: one vertex per edge (in lexicographic order), adjacent
    /// iff the edges share an endpoint.
    pub fn line_graph(&self) -> Result<Graph> {
        let edges = self.edges();
        let mut g = Graph::new(edges.len())?;
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Brute-force isomorphism test by permutation search. Intended for
    /// test-scale graphs (n <= 8 or so).
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut da = self.degrees();
        let mut db = other.degrees();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return false;
        }
        let mut perm = Vec::with_capacity(self.n);
        let mut used = vec![false; self.n];
        self.iso_search(other, &mut perm, &mut used)
    }

    fn iso_search(&self, other: &Graph, perm: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = perm.len();
        if v == self.n {
            return true;
        }
        for img in 0..self.n {
            if used[img] || self.degree(v) != other.degree(img) {
                continue;
            }
            if (0..v).all(|u| self.has_edge(u, v) == other.has_edge(perm[u], img)) {
                perm.push(img);
                used[img] = true;
                if self.iso_search(other, perm, used) {
                    return true;
                }
                perm.pop();
                used[img] = false;
            }
        }
        false
    }

    /// Parse the text edge-list format: first line `n`, then one `u v`
    /// pair per line with 0-based endpoints.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (ln, first) = lines.next().ok_or(Error::EdgeList {
            line: 1,
            reason: "empty input".into(),
        })?;
        let n: usize = first.trim().parse().map_err(|_| Error::EdgeList {
            line: ln + 1,
            reason: format!("expected vertex count, got {first:?}"),
        })?;
        let mut g = Graph::new(n)?;
        for (ln, line) in lines {
            let mut it = line.split_whitespace();
            let (u, v) = match (it.next(), it.next(), it.next()) {
                (Some(u), Some(v), None) => (u, v),
                _ => {
                    return Err(Error::EdgeList {
                        line: ln + 1,
                        reason: format!("expected `u v`, got {line:?}"),
                    })
                }
            };
            let parse = |s: &str| -> Result<usize> {
                s.parse().map_err(|_| Error::EdgeList {
                    line: ln + 1,
                    reason: format!("bad vertex index {s:?}"),
                })
            };
            g.add_edge(parse(u)?, parse(v)?)?;
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    // --- named families ---

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n).expect("order within bounds");
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// The edgeless graph N_n.
    pub fn empty(n: usize) -> Graph {
        Graph::new(n).expect("order within bounds")
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs n >= 3, got {n}"
            )));
        }
        let mut g = Graph::new(n)?;
        for v in 0..n {
            g.add_edge(v, (v + 1) % n)?;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::InvalidParameter("path needs n >= 1".into()));
        }
        let mut g = Graph::new(n)?;
        for v in 0..n.saturating_sub(1) {
            g.add_edge(v, v + 1)?;
        }
        Ok(g)
    }

    /// Cocktail party graph: join of k copies of N_2.
    pub fn cocktail(k: usize) -> Result<Graph> {
        if k < 1 {
            return Err(Error::InvalidParameter("cocktail needs k >= 1".into()));
        }
        let mut g = Graph::empty(2);
        for _ in 1..k {
            g = g.join(&Graph::empty(2))?;
        }
        Ok(g)
    }

    /// Star K_{1,n-1} with centre 0.
    pub fn star(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::InvalidParameter("star needs n >= 1".into()));
        }
        let mut g = Graph::new(n)?;
        for v in 1..n {
            g.add_edge(0, v)?;
        }
        Ok(g)
    }
}

struct CutSearch {
    disc: Vec<usize>,
    low: Vec<usize>,
    cut: Vec<bool>,
    timer: usize,
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn mask_to_set(mut mask: u64) -> VertexSet {
    let mut out = Vec::new();
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    VertexSet::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_families() {
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert!(Graph::complete(4).degrees().iter().all(|&d| d == 3));
        assert_eq!(Graph::empty(5).edge_count(), 0);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(c5.regular_degree(), Some(2));
        assert!(Graph::cycle(2).is_err());
        // cocktail 2 is C_4: K_4 minus a perfect matching
        let cp2 = Graph::cocktail(2).unwrap();
        assert_eq!(cp2.n(), 4);
        assert!(cp2.degrees().iter().all(|&d| d == 2));
        assert!(cp2.is_isomorphic(&Graph::cycle(4).unwrap()));
    }

    #[test]
    fn complement_involution_and_duality() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 4)]).unwrap();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(Graph::complete(6).complement(), Graph::empty(6));
        // complement(C_5) is again a 5-cycle
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.complement().is_isomorphic(&c5));
        // complement(N_2 v N_2) = K_2 + K_2
        let j = Graph::empty(2).join(&Graph::empty(2)).unwrap();
        let k2k2 = Graph::complete(2)
            .disjoint_union(&Graph::complete(2))
            .unwrap();
        assert_eq!(j.complement(), k2k2);
    }

    #[test]
    fn join_and_union_counts() {
        let p3 = Graph::empty(1).join(&Graph::empty(2)).unwrap();
        assert!(p3.is_isomorphic(&Graph::path(3).unwrap()));
        let g = Graph::complete(2)
            .disjoint_union(&Graph::complete(3))
            .unwrap();
        assert_eq!((g.n(), g.edge_count(), g.component_count()), (5, 4, 2));
        let j = Graph::complete(2).join(&Graph::complete(3)).unwrap();
        assert_eq!(j.edge_count(), 1 + 3 + 6);
        // de Morgan: complement of join = disjoint union of complements
        let a = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let b = Graph::cycle(4).unwrap();
        let lhs = a.join(&b).unwrap().complement();
        let rhs = a.complement().disjoint_union(&b.complement()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn components() {
        let g = Graph::complete(2).disjoint_union(&Graph::empty(1)).unwrap();
        assert_eq!(g.component_count(), 2);
        assert!(Graph::cycle(6).unwrap().is_connected());
        assert_eq!(Graph::empty(5).component_count(), 5);
    }

    #[test]
    fn cut_vertices_basics() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.cut_vertices().unwrap().as_slice(), &[1]);
        assert!(Graph::cycle(5).unwrap().cut_vertices().unwrap().is_empty());
        let star = Graph::star(5).unwrap();
        assert_eq!(star.cut_vertices().unwrap().as_slice(), &[0]);
        let p5 = Graph::path(5).unwrap();
        assert_eq!(p5.cut_vertices().unwrap().as_slice(), &[1, 2, 3]);
        assert!(Graph::empty(3).cut_vertices().is_err());
    }

    #[test]
    fn vertex_connectivity_basics() {
        assert_eq!(Graph::cycle(5).unwrap().vertex_connectivity().unwrap(), 2);
        assert_eq!(Graph::complete(5).vertex_connectivity().unwrap(), 4);
        assert_eq!(Graph::path(3).unwrap().vertex_connectivity().unwrap(), 1);
        assert_eq!(
            Graph::cocktail(3).unwrap().vertex_connectivity().unwrap(),
            4
        );
        assert!(Graph::complete(1).vertex_connectivity().is_err());
    }

    #[test]
    fn induced_c4_search() {
        let c4 = Graph::cycle(4).unwrap();
        let found = c4.find_induced_c4().unwrap();
        assert_eq!(found, [0, 1, 2, 3]);
        assert!(Graph::complete(5).find_induced_c4().is_none());
        assert!(Graph::cycle(6).unwrap().find_induced_c4().is_none());
    }

    #[test]
    fn cocktail_recognition() {
        assert_eq!(Graph::cocktail(3).unwrap().is_cocktail_party(), Some(3));
        assert_eq!(Graph::cycle(5).unwrap().is_cocktail_party(), None);
        assert_eq!(Graph::complete(4).is_cocktail_party(), None);
        assert_eq!(Graph::cycle(4).unwrap().is_cocktail_party(), Some(2));
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(Graph::cycle(5).unwrap().clique_number(), 2);
        assert_eq!(Graph::complete(6).clique_number(), 6);
        // K_p v (v_i N_r) has clique number p + q
        let g = Graph::complete(2)
            .join(&Graph::empty(3).join(&Graph::empty(3)).unwrap())
            .unwrap();
        assert_eq!(g.clique_number(), 2 + 2);
        assert_eq!(Graph::empty(4).clique_number(), 1);
    }

    #[test]
    fn line_graphs() {
        let k3 = Graph::complete(3);
        assert!(k3.line_graph().unwrap().is_isomorphic(&k3));
        assert!(Graph::star(4)
            .unwrap()
            .line_graph()
            .unwrap()
            .is_isomorphic(&k3));
        let lk5 = Graph::complete(5).line_graph().unwrap();
        assert_eq!(lk5.n(), 10);
        assert_eq!(lk5.regular_degree(), Some(6));
        // L(K_5) does contain an induced C4: the edges {0,1},{0,2},{2,3},{1,3}
        // of K_5 consecutively share endpoints while both diagonals are
        // disjoint pairs.
        let [p, q, r, s] = lk5.find_induced_c4().unwrap();
        assert!(
            lk5.has_edge(p, q) && lk5.has_edge(q, r) && lk5.has_edge(r, s) && lk5.has_edge(s, p)
        );
        assert!(!lk5.has_edge(p, r) && !lk5.has_edge(q, s));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let parsed = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(parsed, g);
        assert!(Graph::parse_edge_list("3\n0 3\n").is_err());
        assert!(Graph::parse_edge_list("").is_err());
    }
}
