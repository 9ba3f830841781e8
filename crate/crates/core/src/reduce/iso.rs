use std::ops::ControlFlow;

use crate::graph::GainGraph;
use crate::quat::Scalar;

/// First underlying-graph isomorphism `pattern -> target`, as `map[p] = t`.
pub fn find_isomorphism<S: Scalar, T: Scalar>(pattern: &GainGraph<S>, target: &GainGraph<T>) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_isomorphism(pattern, target, |m| {
        found = Some(m.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// Calls `visit` on every isomorphism until it breaks.
pub fn for_each_isomorphism<S: Scalar, T: Scalar>(
    pattern: &GainGraph<S>,
    target: &GainGraph<T>,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) {
    let n = pattern.order();
    if n != target.order() || pattern.size() != target.size() || pattern.degree_sequence() != target.degree_sequence() {
        return;
    }
    let order = search_order(pattern);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let _ = extend(pattern, target, &order, 0, &mut map, &mut used, &mut visit);
}

/// Breadth-first order from highest-degree vertices, so each new vertex
/// usually has an already-mapped neighbor.
fn search_order<S: Scalar>(g: &GainGraph<S>) -> Vec<usize> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for s in by_degree {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let start = order.len();
        order.push(s);
        while start < order.len() && order.len() < n {
            let mut grew = false;
            for i in start..order.len() {
                for &w in g.neighbors(order[i]) {
                    if !seen[w] {
                        seen[w] = true;
                        order.push(w);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
    }
    order
}

fn extend<S: Scalar, T: Scalar>(
    p: &GainGraph<S>,
    t: &GainGraph<T>,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if depth == order.len() {
        return visit(map);
    }
    let u = order[depth];
    for cand in 0..t.order() {
        if used[cand] || t.degree(cand) != p.degree(u) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&w| p.has_edge(u, w) == t.has_edge(cand, map[w]));
        if !consistent {
            continue;
        }
        map[u] = cand;
        used[cand] = true;
        extend(p, t, order, depth + 1, map, used, visit)?;
        used[cand] = false;
        map[u] = usize::MAX;
    }
    ControlFlow::Continue(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Rational;

    #[test]
    fn relabelled_cycle() {
        let a = GainGraph::<Rational>::unit_gains(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let b = GainGraph::<Rational>::unit_gains(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        let m = find_isomorphism(&a, &b).unwrap();
        for (u, v) in a.edge_list() {
            assert!(b.has_edge(m[u], m[v]));
        }
        let mut count = 0;
        for_each_isomorphism(&a, &b, |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 10);
    }

    #[test]
    fn non_isomorphic() {
        let p = GainGraph::<Rational>::unit_gains(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let s = GainGraph::<Rational>::unit_gains(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(find_isomorphism(&p, &s).is_none());
        let two_triangles = GainGraph::<Rational>::unit_gains(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let c6 = GainGraph::<Rational>::unit_gains(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert!(find_isomorphism(&two_triangles, &c6).is_none());
    }
}
