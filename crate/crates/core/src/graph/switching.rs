use std::collections::VecDeque;

use super::GainGraph;
use crate::error::{Error, Result};
use crate::quat::{Quaternion, Scalar};

/// A unit quaternion per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingFunction<S: Scalar> {
    xi: Vec<Quaternion<S>>,
}

impl<S: Scalar> SwitchingFunction<S> {
    pub fn new(xi: Vec<Quaternion<S>>) -> Result<Self> {
        if let Some(v) = xi.iter().position(|q| !q.is_unit()) {
            return Err(Error::NonUnitGain { u: v, v });
        }
        Ok(SwitchingFunction { xi })
    }

    pub fn identity(n: usize) -> Self {
        SwitchingFunction { xi: vec![Quaternion::one(); n] }
    }

    pub fn at(&self, v: usize) -> &Quaternion<S> {
        &self.xi[v]
    }

    pub fn len(&self) -> usize {
        self.xi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xi.is_empty()
    }
}

impl<S: Scalar> GainGraph<S> {
    /// `phi'(uv) = xi(u)^{-1} phi(uv) xi(v)`.
    ///
    /// Panics if `xi` does not cover every vertex.
    pub fn switch(&self, xi: &SwitchingFunction<S>) -> GainGraph<S> {
        assert_eq!(xi.len(), self.order(), "switching function must be total");
        let mut out = self.clone();
        let n = self.order();
        for u in 0..n {
            for &v in self.neighbors(u) {
                let g = self.gain(u, v).expect("edge");
                // inverse of a unit is its conjugate
                let q = xi.at(u).conj().mul_ref(g).mul_ref(xi.at(v));
                out.gains[u * n + v] = Some(q);
            }
        }
        out
    }

    /// Switches so that every edge of a breadth-first spanning tree from
    /// `root` has gain 1. `xi(v)` is the gain of the tree path from `v` to `root`.
    pub fn normalize_by_spanning_tree(&self, root: usize) -> Result<(GainGraph<S>, SwitchingFunction<S>)> {
        self.check_vertex(root)?;
        let n = self.order();
        let mut xi: Vec<Option<Quaternion<S>>> = vec![None; n];
        xi[root] = Some(Quaternion::one());
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if xi[v].is_none() {
                    let q = self.gain(v, u).expect("edge").mul_ref(xi[u].as_ref().expect("visited"));
                    xi[v] = Some(q);
                    queue.push_back(v);
                }
            }
        }
        let xi: Vec<Quaternion<S>> = xi.into_iter().collect::<Option<_>>().ok_or(Error::Disconnected)?;
        let f = SwitchingFunction { xi };
        Ok((self.switch(&f), f))
    }

    /// Edges of the breadth-first spanning tree from `root`, as `(parent, child)`.
    pub fn bfs_tree_edges(&self, root: usize) -> Vec<(usize, usize)> {
        let mut seen = vec![false; self.order()];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        let mut out = Vec::new();
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    out.push((u, v));
                    queue.push_back(v);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Rational;

    type Q = Quaternion<Rational>;

    #[test]
    fn identity_switch_is_noop() {
        let g = GainGraph::from_edges(3, [(0, 1, Q::i()), (1, 2, Q::k()), (0, 2, Q::j())]).unwrap();
        assert_eq!(g.switch(&SwitchingFunction::identity(3)), g);
    }

    #[test]
    fn tree_edges_become_one() {
        let g = GainGraph::from_edges(
            4,
            [(0, 1, Q::i()), (1, 2, Q::k()), (2, 3, -Q::j()), (3, 0, Q::j()), (0, 2, -Q::i())],
        )
        .unwrap();
        let (h, xi) = g.normalize_by_spanning_tree(0).unwrap();
        for (u, v) in g.bfs_tree_edges(0) {
            assert_eq!(h.gain(u, v), Some(&Q::one()));
        }
        assert_eq!(xi.at(0), &Q::one());
        assert_eq!(h.rank(), g.rank());
        // similar cycle gains
        let c = [0, 1, 2, 3];
        assert_eq!(h.cycle_type(&c).unwrap(), g.cycle_type(&c).unwrap());
    }

    #[test]
    fn trees_normalize_to_ones() {
        let g = GainGraph::from_edges(4, [(0, 1, Q::i()), (1, 2, Q::k()), (1, 3, -Q::j())]).unwrap();
        let (h, _) = g.normalize_by_spanning_tree(2).unwrap();
        assert!(h.edges().all(|(_, _, q)| *q == Q::one()));
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = GainGraph::<Rational>::unit_gains(3, &[(0, 1)]).unwrap();
        assert_eq!(g.normalize_by_spanning_tree(0).unwrap_err(), Error::Disconnected);
    }
}
