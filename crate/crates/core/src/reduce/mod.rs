//! Rank-accounting reductions and structural recognizers.

mod iso;
mod recognize;

use serde::Serialize;

use crate::graph::GainGraph;
use crate::quat::{Quaternion, Scalar};

pub use iso::{find_isomorphism, for_each_isomorphism};
pub use recognize::{bicyclic_core, joined_star, recognize, BicyclicCore, Family, JoinedStar, ShapeReport, Witness};

/// Result of deleting vertices; `kept[i]` is the original label of vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction<S: Scalar> {
    pub graph: GainGraph<S>,
    pub kept: Vec<usize>,
    /// Original labels in deletion order.
    pub removed: Vec<usize>,
}

impl<S: Scalar> Reduction<S> {
    fn identity(g: &GainGraph<S>) -> Self {
        Reduction { graph: g.clone(), kept: (0..g.order()).collect(), removed: Vec::new() }
    }

    fn delete(&mut self, local: &[usize]) {
        for &v in local {
            self.removed.push(self.kept[v]);
        }
        let (graph, keep) = self.graph.delete_vertices(local).expect("in range");
        self.kept = keep.into_iter().map(|v| self.kept[v]).collect();
        self.graph = graph;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantTrim<S: Scalar> {
    pub reduction: Reduction<S>,
    /// `rank(G) = rank(trimmed) + 2 * pairs`.
    pub pairs: usize,
}

/// Repeatedly deletes a pendant vertex together with its neighbor
/// (lowest-labelled pendant first).
pub fn trim_pendant_pairs<S: Scalar>(g: &GainGraph<S>) -> PendantTrim<S> {
    let mut red = Reduction::identity(g);
    let mut pairs = 0;
    while let Some(x) = (0..red.graph.order()).find(|&v| red.graph.degree(v) == 1) {
        let y = red.graph.neighbors(x)[0];
        red.delete(&[x, y]);
        pairs += 1;
    }
    PendantTrim { reduction: red, pairs }
}

/// First pair `(x, y)`, `x < y`, of pendant vertices with a common neighbor.
pub fn find_pendant_twins<S: Scalar>(g: &GainGraph<S>) -> Option<(usize, usize)> {
    let mut first_at = vec![usize::MAX; g.order()];
    for x in 0..g.order() {
        if g.degree(x) == 1 {
            let y = g.neighbors(x)[0];
            if first_at[y] != usize::MAX {
                return Some((first_at[y], x));
            }
            first_at[y] = x;
        }
    }
    None
}

/// Repeatedly deletes the higher-labelled vertex of a pendant twin pair.
pub fn remove_pendant_twins<S: Scalar>(g: &GainGraph<S>) -> Reduction<S> {
    let mut red = Reduction::identity(g);
    while let Some((_, y)) = find_pendant_twins(&red.graph) {
        let before = debug_rank(&red.graph);
        red.delete(&[y]);
        debug_assert_eq!(before, debug_rank(&red.graph), "twin removal changed the rank");
    }
    red
}

fn debug_rank<S: Scalar>(g: &GainGraph<S>) -> Option<usize> {
    (cfg!(debug_assertions) && S::EXACT && g.order() <= 12).then(|| g.rank())
}

/// `x`, `y` with `N(x) = N(y)` and `phi_xz = k phi_yz` for every common neighbor `z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplePair<S: Scalar> {
    pub x: usize,
    pub y: usize,
    #[serde(skip)]
    pub k: Quaternion<S>,
}

/// The left factor `k` with `phi_xz = k phi_yz` for all `z`, if `x` and `y` are multiple.
pub fn multiple_factor<S: Scalar>(g: &GainGraph<S>, x: usize, y: usize) -> Option<Quaternion<S>> {
    let nx = g.neighbors(x);
    if x == y || nx.is_empty() || nx != g.neighbors(y) {
        return None;
    }
    let z0 = nx[0];
    // unit gains: phi_yz^{-1} = conj(phi_yz)
    let k = g.gain(x, z0)?.mul_ref(&g.gain(y, z0)?.conj());
    nx[1..]
        .iter()
        .all(|&z| g.gain(x, z).expect("edge").same(&k.mul_ref(g.gain(y, z).expect("edge"))))
        .then_some(k)
}

/// All multiple pairs, ordered by `(x, y)`.
pub fn find_multiple_vertices<S: Scalar>(g: &GainGraph<S>) -> Vec<MultiplePair<S>> {
    let mut out = Vec::new();
    for x in 0..g.order() {
        for y in x + 1..g.order() {
            if let Some(k) = multiple_factor(g, x, y) {
                out.push(MultiplePair { x, y, k });
            }
        }
    }
    out
}

fn first_multiple_pair<S: Scalar>(g: &GainGraph<S>) -> Option<(usize, usize)> {
    (0..g.order()).find_map(|x| (x + 1..g.order()).find(|&y| multiple_factor(g, x, y).is_some()).map(|y| (x, y)))
}

/// Deletes multiple vertices until none remain. Each step keeps the
/// lowest-labelled member of the first pair and deletes the other.
pub fn reduced_graph<S: Scalar>(g: &GainGraph<S>) -> Reduction<S> {
    let mut red = Reduction::identity(g);
    while let Some((_, y)) = first_multiple_pair(&red.graph) {
        red.delete(&[y]);
    }
    red
}

/// True if `g` has no multiple vertices.
pub fn is_reduced<S: Scalar>(g: &GainGraph<S>) -> bool {
    first_multiple_pair(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Rational;

    type Q = Quaternion<Rational>;

    fn path(n: usize) -> GainGraph<Rational> {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        GainGraph::unit_gains(n, &e).unwrap()
    }

    #[test]
    fn trims_paths_and_cycles() {
        let t = trim_pendant_pairs(&path(4));
        assert_eq!((t.pairs, t.reduction.graph.order()), (2, 0));
        let c5 = GainGraph::<Rational>::unit_gains(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(trim_pendant_pairs(&c5).pairs, 0);
        let mut c5p = GainGraph::<Rational>::new(6);
        for (u, v) in c5.edge_list().into_iter().chain([(0, 5)]) {
            c5p.add_edge(u, v, Q::one()).unwrap();
        }
        // the pendant pair leaves P4, which trims away too
        let t = trim_pendant_pairs(&c5p);
        assert_eq!(t.pairs, 3);
        assert_eq!(t.reduction.removed, vec![5, 0, 1, 2, 3, 4]);
        assert_eq!(c5p.rank(), 6);
    }

    #[test]
    fn star_twins_collapse_to_an_edge() {
        let star = GainGraph::<Rational>::from_edges(5, (1..5).map(|v| (0, v, Q::j()))).unwrap();
        let r = remove_pendant_twins(&star);
        assert_eq!(r.graph.order(), 2);
        assert_eq!(r.kept, vec![0, 1]);
        assert_eq!(r.removed, vec![2, 3, 4]);
        let p = path(5);
        assert_eq!(remove_pendant_twins(&p).graph, p);
    }

    #[test]
    fn multiple_vertices() {
        let twins = GainGraph::<Rational>::unit_gains(3, &[(0, 1), (0, 2)]).unwrap();
        let m = find_multiple_vertices(&twins);
        assert_eq!(m.len(), 1);
        assert_eq!((m[0].x, m[0].y, m[0].k.clone()), (1, 2, Q::one()));
        let e = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        assert!(find_multiple_vertices(&GainGraph::<Rational>::unit_gains(4, &e).unwrap()).is_empty());
    }

    #[test]
    fn left_proportionality_is_required() {
        // rows of 1 and 3 over {0, 2}: (i, j) and (1, k); i k = -j
        let g = GainGraph::from_edges(4, [(1, 0, Q::i()), (1, 2, Q::j()), (3, 0, Q::one()), (3, 2, Q::k())]).unwrap();
        assert!(multiple_factor(&g, 1, 3).is_none());
        let h = GainGraph::from_edges(4, [(1, 0, Q::i()), (1, 2, -Q::j()), (3, 0, Q::one()), (3, 2, Q::k())]).unwrap();
        assert_eq!(multiple_factor(&h, 1, 3), Some(Q::i()));
        let r = reduced_graph(&h);
        assert!(is_reduced(&r.graph));
        assert_eq!(r.graph.rank(), h.rank());
    }
}
