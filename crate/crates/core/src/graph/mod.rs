//! Simple graphs with unit quaternion gains on oriented edges.

mod cycles;
mod format;
mod switching;

use crate::error::{Error, Result};
use crate::qlinalg::{left_row_rank_eliminate, QMatrix};
use crate::quat::{Quaternion, Rational, Scalar};

pub use cycles::{classify_gain, CycleClass, CycleType, Girth};
pub use format::{parse_qgg, parse_qgg_with, ParseOptions, Parsed};
pub use switching::SwitchingFunction;

/// Vertices are `0..n`. Both orientations of an edge are stored; the
/// reverse orientation always holds the conjugate gain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GainGraph<S: Scalar = Rational> {
    n: usize,
    adj: Vec<Vec<usize>>,
    gains: Vec<Option<Quaternion<S>>>,
}

impl<S: Scalar> GainGraph<S> {
    pub fn new(n: usize) -> Self {
        GainGraph { n, adj: vec![Vec::new(); n], gains: vec![None; n * n] }
    }

    /// Builds from `(u, v, gain of u->v)` triples.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize, Quaternion<S>)>) -> Result<Self> {
        let mut g = GainGraph::new(n);
        for (u, v, q) in edges {
            g.add_edge(u, v, q)?;
        }
        Ok(g)
    }

    /// Every edge gets gain 1.
    pub fn unit_gains(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_edges(n, edges.iter().map(|&(u, v)| (u, v, Quaternion::one())))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, gain: Quaternion<S>) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        if !gain.is_unit() {
            return Err(Error::NonUnitGain { u, v });
        }
        let rev = gain.conj();
        self.gains[u * self.n + v] = Some(gain);
        self.gains[v * self.n + u] = Some(rev);
        for (a, b) in [(u, v), (v, u)] {
            let pos = self.adj[a].partition_point(|&x| x < b);
            self.adj[a].insert(pos, b);
        }
        Ok(())
    }

    /// Replaces the gain of an existing edge (orientation `u -> v`).
    pub fn set_gain(&mut self, u: usize, v: usize, gain: Quaternion<S>) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(Error::NotACycle(format!("no edge {u}-{v}")));
        }
        if !gain.is_unit() {
            return Err(Error::NonUnitGain { u, v });
        }
        self.gains[v * self.n + u] = Some(gain.conj());
        self.gains[u * self.n + v] = Some(gain);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.gains[u * self.n + v].is_some()
    }

    /// Gain of the orientation `u -> v`.
    pub fn gain(&self, u: usize, v: usize) -> Option<&Quaternion<S>> {
        if u < self.n && v < self.n {
            self.gains[u * self.n + v].as_ref()
        } else {
            None
        }
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v, gain u->v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Quaternion<S>)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v, self.gain(u, v).expect("edge")))
        })
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().map(|(u, v, _)| (u, v)).collect()
    }

    pub fn adjacency_matrix(&self) -> QMatrix<S> {
        let mut a = QMatrix::zeros(self.n, self.n);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                a.set(u, v, self.gain(u, v).expect("edge").clone());
            }
        }
        a
    }

    /// Left row rank of the adjacency matrix (elimination, default tolerance).
    pub fn rank(&self) -> usize {
        left_row_rank_eliminate(&self.adjacency_matrix()).rank
    }

    pub fn to_float(&self) -> GainGraph<f64> {
        GainGraph {
            n: self.n,
            adj: self.adj.clone(),
            gains: self.gains.iter().map(|g| g.as_ref().map(Quaternion::to_float)).collect(),
        }
    }

    /// Subgraph induced on `keep` (in the given order). Vertex `i` of the
    /// result is `keep[i]` of `self`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<GainGraph<S>> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            pos[v] = i;
        }
        let mut g = GainGraph::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for &v in &self.adj[u] {
                let j = pos[v];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j, self.gain(u, v).expect("edge").clone())?;
                }
            }
        }
        Ok(g)
    }

    /// Deletes `drop`; returns the remaining graph and the surviving original labels.
    pub fn delete_vertices(&self, drop: &[usize]) -> Result<(GainGraph<S>, Vec<usize>)> {
        for &v in drop {
            self.check_vertex(v)?;
        }
        let keep: Vec<usize> = (0..self.n).filter(|v| !drop.contains(v)).collect();
        Ok((self.induced_subgraph(&keep)?, keep))
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &w in &self.adj[comp[i]] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// Every vertex outside `set` has a neighbor in `set`.
    pub fn is_dominating_set(&self, set: &[usize]) -> Result<bool> {
        let mut inside = vec![false; self.n];
        for &v in set {
            self.check_vertex(v)?;
            inside[v] = true;
        }
        Ok((0..self.n).all(|v| inside[v] || self.adj[v].iter().any(|&w| inside[w])))
    }

    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Underlying simple graph with all gains set to 1.
    pub fn underlying(&self) -> GainGraph<S> {
        let mut g = self.clone();
        for q in g.gains.iter_mut().flatten() {
            *q = Quaternion::one();
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = Quaternion<Rational>;

    #[test]
    fn conjugate_symmetry_and_matrix() {
        let g = GainGraph::from_edges(2, [(0, 1, Q::i())]).unwrap();
        assert_eq!(g.gain(1, 0), Some(&-Q::i()));
        let a = g.adjacency_matrix();
        assert_eq!(a.get(0, 1), &Q::i());
        assert_eq!(a.get(1, 0), &-Q::i());
        assert!(a.is_hermitian() && a.has_zero_diagonal());
        let e = GainGraph::<Rational>::new(3).adjacency_matrix();
        assert!((0..3).all(|i| (0..3).all(|j| e.get(i, j).is_zero())));
    }

    #[test]
    fn rejects_bad_edges() {
        let mut g = GainGraph::<Rational>::new(3);
        assert_eq!(g.add_edge(0, 0, Q::one()), Err(Error::Loop(0)));
        assert_eq!(g.add_edge(0, 3, Q::one()), Err(Error::VertexOutOfRange { vertex: 3, order: 3 }));
        g.add_edge(0, 1, Q::one()).unwrap();
        assert_eq!(g.add_edge(1, 0, Q::one()), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(g.add_edge(1, 2, Q::from_ints(1, 1, 0, 0)), Err(Error::NonUnitGain { u: 1, v: 2 }));
    }

    #[test]
    fn queries() {
        let c4 = GainGraph::<Rational>::unit_gains(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!c4.is_dominating_set(&[0]).unwrap());
        assert!(c4.is_dominating_set(&[0, 2]).unwrap());
        assert_eq!(c4.degree(2), 2);
        assert_eq!(c4.neighbors(0), &[1, 3]);
        let (p, keep) = c4.delete_vertices(&[1]).unwrap();
        assert_eq!(keep, vec![0, 2, 3]);
        assert_eq!(p.size(), 2);
        let (two, _) = c4.delete_vertices(&[0, 2]).unwrap();
        assert_eq!(two.connected_components(), vec![vec![0], vec![1]]);
        assert!(c4.is_dominating_set(&[7]).is_err());
    }
}
