//! Structural families with certifying witnesses.
//!
//! Each witness determines an edge set; [`ShapeReport::validate`] rebuilds
//! that set and compares it with the graph.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::GainGraph;
use crate::quat::Scalar;

/// Listed in recognition precedence: earlier variants win when several apply.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// `P_n`, `n` vertices.
    Path(usize),
    /// `K_{1,q}`, `q` leaves.
    Star(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteTripartite(usize, usize, usize),
    /// Girth `g`, `t` starred cycle vertices, `k` even-order gaps (zero counts as even).
    CanonicalUnicyclic { g: usize, t: usize, k: usize },
    /// Cycles `C_p` and `C_q` (`p <= q`) joined by a path on `l` vertices;
    /// `l = 1` means they share a vertex.
    Infinity(usize, usize, usize),
    /// Three internally disjoint paths with `p <= l <= q` internal vertices.
    Theta(usize, usize, usize),
    Other,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "P{n}"),
            Family::Star(q) => write!(f, "K(1,{q})"),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::Complete(n) => write!(f, "K{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "K({a},{b})"),
            Family::CompleteTripartite(r, s, t) => write!(f, "K({r},{s},{t})"),
            Family::CanonicalUnicyclic { g, t, k } => write!(f, "canonical-unicyclic(g={g},t={t},k={k})"),
            Family::Infinity(p, l, q) => write!(f, "infinity({p},{l},{q})"),
            Family::Theta(p, l, q) => write!(f, "theta({p},{l},{q})"),
            Family::Other => write!(f, "other"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Witness {
    /// Vertices in path order.
    Path(Vec<usize>),
    Star { center: usize, leaves: Vec<usize> },
    Cycle(Vec<usize>),
    Complete(Vec<usize>),
    /// Parts of a complete multipartite graph.
    Parts(Vec<Vec<usize>>),
    /// Cycle order, and the pendant leaves hanging at each starred cycle vertex.
    Unicyclic { cycle: Vec<usize>, stars: Vec<(usize, Vec<usize>)> },
    /// Both cycles start at their junction vertex; `path` runs from the first junction to the second.
    Infinity { first: Vec<usize>, path: Vec<usize>, second: Vec<usize> },
    /// Three paths from one branch vertex to the other, by internal length.
    Theta { paths: [Vec<usize>; 3] },
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    pub family: Family,
    pub witness: Witness,
    /// Every family that applies, in precedence order.
    pub matches: Vec<(Family, Witness)>,
}

impl ShapeReport {
    pub fn has(&self, pred: impl Fn(&Family) -> bool) -> bool {
        self.matches.iter().any(|(f, _)| pred(f))
    }

    pub fn find(&self, pred: impl Fn(&Family) -> bool) -> Option<&(Family, Witness)> {
        self.matches.iter().find(|(f, _)| pred(f))
    }

    /// Re-checks every witness against `g`.
    pub fn validate<S: Scalar>(&self, g: &GainGraph<S>) -> bool {
        std::iter::once((&self.family, &self.witness))
            .chain(self.matches.iter().map(|(f, w)| (f, w)))
            .all(|(f, w)| validate_witness(g, f, w))
    }
}

type EdgeSet = BTreeSet<(usize, usize)>;

fn edge(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn path_edges(p: &[usize], out: &mut EdgeSet) {
    for w in p.windows(2) {
        out.insert(edge(w[0], w[1]));
    }
}

fn cycle_edges(c: &[usize], out: &mut EdgeSet) {
    path_edges(c, out);
    if c.len() >= 3 {
        out.insert(edge(c[c.len() - 1], c[0]));
    }
}

fn covers(n: usize, vs: impl IntoIterator<Item = usize>, expect_distinct: bool) -> bool {
    let mut seen = vec![false; n];
    let mut count = 0;
    for v in vs {
        if v >= n {
            return false;
        }
        if seen[v] {
            if expect_distinct {
                return false;
            }
        } else {
            count += 1;
        }
        seen[v] = true;
    }
    count == n
}

fn validate_witness<S: Scalar>(g: &GainGraph<S>, family: &Family, w: &Witness) -> bool {
    let n = g.order();
    let mut e = EdgeSet::new();
    let ok = match (family, w) {
        (Family::Path(k), Witness::Path(p)) => {
            path_edges(p, &mut e);
            *k == n && covers(n, p.iter().copied(), true)
        }
        (Family::Star(q), Witness::Star { center, leaves }) => {
            for &l in leaves {
                e.insert(edge(*center, l));
            }
            *q == leaves.len() && covers(n, leaves.iter().copied().chain([*center]), true)
        }
        (Family::Cycle(k), Witness::Cycle(c)) => {
            cycle_edges(c, &mut e);
            *k == n && n >= 3 && covers(n, c.iter().copied(), true)
        }
        (Family::Complete(k), Witness::Complete(vs)) => {
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    e.insert(edge(u, v));
                }
            }
            *k == n && covers(n, vs.iter().copied(), true)
        }
        (Family::CompleteBipartite(..) | Family::CompleteTripartite(..), Witness::Parts(parts)) => {
            let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
            let expect = match family {
                Family::CompleteBipartite(a, b) => vec![*a, *b],
                Family::CompleteTripartite(r, s, t) => vec![*r, *s, *t],
                _ => unreachable!(),
            };
            for (i, a) in parts.iter().enumerate() {
                for b in &parts[i + 1..] {
                    for &u in a {
                        for &v in b {
                            e.insert(edge(u, v));
                        }
                    }
                }
            }
            sizes == expect && sizes.iter().all(|&s| s >= 1) && covers(n, parts.iter().flatten().copied(), true)
        }
        (Family::CanonicalUnicyclic { g: gg, t, k }, Witness::Unicyclic { cycle, stars }) => {
            cycle_edges(cycle, &mut e);
            for (c, leaves) in stars {
                for &l in leaves {
                    e.insert(edge(*c, l));
                }
            }
            let starred: Vec<usize> = stars.iter().map(|s| s.0).collect();
            *gg == cycle.len()
                && *t == stars.len()
                && stars.iter().all(|(c, l)| cycle.contains(c) && !l.is_empty())
                && *k == even_gaps(cycle, &starred)
                && covers(n, cycle.iter().copied().chain(stars.iter().flat_map(|s| s.1.iter().copied())), true)
        }
        (Family::Infinity(p, l, q), Witness::Infinity { first, path, second }) => {
            cycle_edges(first, &mut e);
            cycle_edges(second, &mut e);
            path_edges(path, &mut e);
            let joined = path.first() == first.first() && path.last() == second.first();
            let distinct = covers(
                n,
                first.iter().chain(second.iter()).chain(path.iter()).copied(),
                false,
            ) && first.len() + second.len() + path.len() - 2 == n;
            joined && distinct && (*p, *l, *q) == (first.len(), path.len(), second.len()) && p <= q
        }
        (Family::Theta(p, l, q), Witness::Theta { paths }) => {
            for pth in paths {
                path_edges(pth, &mut e);
            }
            let ends = |pth: &Vec<usize>| (pth.first().copied(), pth.last().copied());
            let internal: Vec<usize> = paths.iter().map(|p| p.len().saturating_sub(2)).collect();
            ends(&paths[0]) == ends(&paths[1])
                && ends(&paths[1]) == ends(&paths[2])
                && internal == vec![*p, *l, *q]
                && internal[0] <= internal[1]
                && internal[1] <= internal[2]
                && internal[1] >= 1
                && internal.iter().sum::<usize>() + 2 == n
                && covers(n, paths.iter().flatten().copied(), false)
        }
        (Family::Other, Witness::None) => return true,
        _ => return false,
    };
    ok && e == g.edge_list().into_iter().collect::<EdgeSet>()
}

/// Gaps between consecutive starred vertices around `cycle` with even
/// (possibly zero) number of vertices.
fn even_gaps(cycle: &[usize], starred: &[usize]) -> usize {
    let g = cycle.len();
    let mut pos: Vec<usize> = starred.iter().filter_map(|s| cycle.iter().position(|c| c == s)).collect();
    pos.sort_unstable();
    (0..pos.len())
        .filter(|&i| {
            let next = if i + 1 < pos.len() { pos[i + 1] } else { pos[0] + g };
            (next - pos[i] - 1) % 2 == 0
        })
        .count()
}

/// Recognizes every family that applies. Errors on disconnected input.
pub fn recognize<S: Scalar>(g: &GainGraph<S>) -> Result<ShapeReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let matches: Vec<(Family, Witness)> = [
        as_path(g),
        as_star(g),
        as_cycle(g),
        as_complete(g),
        as_complete_bipartite(g),
        as_complete_tripartite(g),
        as_canonical_unicyclic(g),
        as_bicyclic(g),
    ]
    .into_iter()
    .flatten()
    .collect();
    let (family, witness) = matches.first().cloned().unwrap_or((Family::Other, Witness::None));
    Ok(ShapeReport { family, witness, matches })
}

fn as_path<S: Scalar>(g: &GainGraph<S>) -> Option<(Family, Witness)> {
    let n = g.order();
    if n == 0 || g.size() + 1 != n || (0..n).any(|v| g.degree(v) > 2) {
        return None;
    }
    let start = (0..n).find(|&v| g.degree(v) <= 1)?;
    let order = walk(g, start, None);
    (order.len() == n).then(|| (Family::Path(n), Witness::Path(order)))
}

fn as_star<S: Scalar>(g: &GainGraph<S>) -> Option<(Family, Witness)> {
    let n = g.order();
    if n < 2 || g.size() + 1 != n {
        return None;
    }
    let center = (0..n).find(|&v| g.degree(v) == n - 1)?;
    let leaves: Vec<usize> = g.neighbors(center).to_vec();
    Some((Family::Star(n - 1), Witness::Star { center, leaves }))
}

fn as_cycle<S: Scalar>(g: &GainGraph<S>) -> Option<(Family, Witness)> {
    let n = g.order();
    if n < 3 || (0..n).any(|v| g.degree(v) != 2) {
        return None;
    }
    let c = walk(g, 0, None);
    (c.len() == n).then(|| (Family::Cycle(n), Witness::Cycle(c)))
}

fn as_complete<S: Scalar>(g: &GainGraph<S>) -> Option<(Family, Witness)> {
    let n = g.order();
    (n >= 1 && g.size() == n * (n - 1) / 2).then(|| (Family::Complete(n), Witness::Complete((0..n).collect())))
}

fn as_complete_bipartite<S: Scalar>(g: &GainGraph<S>) -> Option<(Family, Witness)> {
    let n = g.order();
    if n < 2 {
        return None;
    }
    let mut side = vec![usize::MAX; n];
    side[0] = 0;
    let mut queue = vec![0];
    while let Some(u) = queue.pop() {
        for &v in g.neighbors(u) {
            if side[v] == usize::MAX {
                side[v] = 1 - side[u];
                queue.push(v);
            } else if side[v] == side[u] {
                return None;
            }
        }
    }
    let a: Vec<usize> = (0..n).filter(|&v| side[v] == 0).collect();
    let b: Vec<usize> = (0..n).filter(|&v| side[v] == 1).collect();
    (!b.is_empty() && g.size() == a.len() * b.len())
        .then(|| (Family::CompleteBipartite(a.len(), b.len()), Witness::Parts(vec![a, b])))
}

fn as_complete_tripartite<S: Scalar>(g: &GainGraph<S>) -> Option<(Family, Witness)> {
    let n = g.order();
    // parts are the components of the complement
    let mut part = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if part[s] != usize::MAX {
            continue;
        }
        let id = parts.len();
        part[s] = id;
        let mut members = vec![s];
        let mut i = 0;
        while i < members.len() {
            let u = members[i];
            for v in 0..n {
                if v != u && part[v] == usize::MAX && !g.has_edge(u, v) {
                    part[v] = id;
                    members.push(v);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        parts.push(members);
        if parts.len() > 3 {
            return None;
        }
    }
    if parts.len() != 3 {
        return None;
    }
    let (r, s, t) = (parts[0].len(), parts[1].len(), parts[2].len());
    let independent = parts.iter().all(|p| p.iter().all(|&u| p.iter().all(|&v| !g.has_edge(u, v))));
    (independent && g.size() == r * s + s * t + r * t)
        .then(|| (Family::CompleteTripartite(r, s, t), Witness::Parts(parts)))
}

/// Peels degree-1 vertices until none remain; returns the surviving mask.
fn peel_leaves<S: Scalar>(g: &GainGraph<S>) -> Vec<bool> {
    let n = g.order();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] || deg[v] != 1 {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    alive
}

/// Unicyclic: the cycle in traversal order starting at its least vertex.
fn unique_cycle<S: Scalar>(g: &GainGraph<S>) -> Option<Vec<usize>> {
    if g.order() < 3 || g.size() != g.order() || !g.is_connected() {
        return None;
    }
    let alive = peel_leaves(g);
    let start = alive.iter().position(|&a| a)?;
    Some(walk(g, start, Some(&alive)))
}

fn as_canonical_unicyclic<S: Scalar>(g: &GainGraph<S>) -> Option<(Family, Witness)> {
    let cycle = unique_cycle(g)?;
    let on_cycle: Vec<bool> = (0..g.order()).map(|v| cycle.contains(&v)).collect();
    let mut stars = Vec::new();
    for &c in &cycle {
        let leaves: Vec<usize> = g.neighbors(c).iter().copied().filter(|&w| !on_cycle[w]).collect();
        if leaves.iter().any(|&l| g.degree(l) != 1) {
            return None;
        }
        if !leaves.is_empty() {
            stars.push((c, leaves));
        }
    }
    if stars.is_empty() {
        return None;
    }
    let starred: Vec<usize> = stars.iter().map(|s| s.0).collect();
    let fam = Family::CanonicalUnicyclic { g: cycle.len(), t: stars.len(), k: even_gaps(&cycle, &starred) };
    Some((fam, Witness::Unicyclic { cycle, stars }))
}

/// Follows degree-2 vertices from `from` through `first` until a vertex of
/// another degree (or `from` again). Returns the vertices visited, ends included.
fn trace<S: Scalar>(g: &GainGraph<S>, from: usize, first: usize) -> Vec<usize> {
    let mut p = vec![from, first];
    let (mut prev, mut cur) = (from, first);
    while g.degree(cur) == 2 && cur != from {
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).expect("degree 2");
        p.push(next);
        prev = cur;
        cur = next;
    }
    p
}

fn as_bicyclic<S: Scalar>(g: &GainGraph<S>) -> Option<(Family, Witness)> {
    let n = g.order();
    if g.size() != n + 1 || (0..n).any(|v| g.degree(v) < 2) {
        return None;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 2).collect();
    match branch[..] {
        [c] if g.degree(c) == 4 => {
            let mut loops: Vec<Vec<usize>> = Vec::new();
            for &w in g.neighbors(c) {
                let t = trace(g, c, w);
                if *t.last()? != c {
                    return None;
                }
                let cyc = t[..t.len() - 1].to_vec();
                let mut key = cyc.clone();
                key.sort_unstable();
                if !loops.iter().any(|l| {
                    let mut k = l.clone();
                    k.sort_unstable();
                    k == key
                }) {
                    loops.push(cyc);
                }
            }
            let [a, b] = <[Vec<usize>; 2]>::try_from(loops).ok()?;
            let (first, second) = if a.len() <= b.len() { (a, b) } else { (b, a) };
            Some((
                Family::Infinity(first.len(), 1, second.len()),
                Witness::Infinity { first, path: vec![c], second },
            ))
        }
        [a, b] if g.degree(a) == 3 && g.degree(b) == 3 => {
            let traces: Vec<Vec<usize>> = g.neighbors(a).iter().map(|&w| trace(g, a, w)).collect();
            let to_b: Vec<&Vec<usize>> = traces.iter().filter(|t| t.last() == Some(&b)).collect();
            if to_b.len() == 3 {
                let mut paths: Vec<Vec<usize>> = to_b.into_iter().cloned().collect();
                paths.sort_by_key(Vec::len);
                let [p0, p1, p2] = <[Vec<usize>; 3]>::try_from(paths).ok()?;
                let fam = Family::Theta(p0.len() - 2, p1.len() - 2, p2.len() - 2);
                return Some((fam, Witness::Theta { paths: [p0, p1, p2] }));
            }
            if to_b.len() != 1 {
                return None;
            }
            let bridge = to_b[0].clone();
            let loop_at = |x: usize, avoid: usize| -> Option<Vec<usize>> {
                let w = g.neighbors(x).iter().copied().find(|&w| w != avoid)?;
                let t = trace(g, x, w);
                (t.last() == Some(&x)).then(|| t[..t.len() - 1].to_vec())
            };
            let la = loop_at(a, bridge[1])?;
            let lb = loop_at(b, bridge[bridge.len() - 2])?;
            let (first, path, second) = if la.len() <= lb.len() {
                (la, bridge, lb)
            } else {
                (lb, bridge.into_iter().rev().collect(), la)
            };
            Some((
                Family::Infinity(first.len(), path.len(), second.len()),
                Witness::Infinity { first, path, second },
            ))
        }
        _ => None,
    }
}

/// Walks from `start` choosing the least unvisited neighbor (restricted to
/// `alive` when given) until stuck.
fn walk<S: Scalar>(g: &GainGraph<S>, start: usize, alive: Option<&[bool]>) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut out = vec![start];
    seen[start] = true;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| !seen[w] && alive.is_none_or(|a| a[w]));
        match next {
            Some(w) => {
                seen[w] = true;
                out.push(w);
                cur = w;
            }
            None => return out,
        }
    }
}

/// A connected bicyclic graph with its pendant trees peeled off.
#[derive(Clone, Debug)]
pub struct BicyclicCore<S: Scalar> {
    pub core: GainGraph<S>,
    /// `kept[i]` is the original label of core vertex `i`.
    pub kept: Vec<usize>,
    pub family: Family,
    /// In core labels.
    pub witness: Witness,
}

/// Errors with `WrongFamily` unless `g` is connected with `|E| = |V| + 1`.
pub fn bicyclic_core<S: Scalar>(g: &GainGraph<S>) -> Result<BicyclicCore<S>> {
    let wrong = || Error::WrongFamily { expected: "connected bicyclic graph".into() };
    if !g.is_connected() || g.size() != g.order() + 1 {
        return Err(wrong());
    }
    let alive = peel_leaves(g);
    let kept: Vec<usize> = (0..g.order()).filter(|&v| alive[v]).collect();
    let core = g.induced_subgraph(&kept)?;
    let (family, witness) = as_bicyclic(&core).ok_or_else(wrong)?;
    Ok(BicyclicCore { core, kept, family, witness })
}

/// A cycle joined by one edge from `attach` to the center of a star with `leaves`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinedStar {
    pub cycle: Vec<usize>,
    pub attach: usize,
    pub center: usize,
    pub leaves: Vec<usize>,
}

pub fn joined_star<S: Scalar>(g: &GainGraph<S>) -> Option<JoinedStar> {
    let cycle = unique_cycle(g)?;
    let on_cycle: Vec<bool> = (0..g.order()).map(|v| cycle.contains(&v)).collect();
    let mut attach = None;
    for &c in &cycle {
        for &w in g.neighbors(c) {
            if !on_cycle[w] {
                if attach.is_some() {
                    return None;
                }
                attach = Some((c, w));
            }
        }
    }
    let (attach, center) = attach?;
    let leaves: Vec<usize> = g.neighbors(center).iter().copied().filter(|&w| w != attach).collect();
    let ok = !leaves.is_empty()
        && leaves.iter().all(|&l| g.degree(l) == 1)
        && cycle.len() + 1 + leaves.len() == g.order();
    ok.then_some(JoinedStar { cycle, attach, center, leaves })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Rational;

    fn g(n: usize, e: &[(usize, usize)]) -> GainGraph<Rational> {
        GainGraph::unit_gains(n, e).unwrap()
    }

    fn cyc(n: usize) -> Vec<(usize, usize)> {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    }

    fn check(gr: &GainGraph<Rational>, fam: Family) -> ShapeReport {
        let r = recognize(gr).unwrap();
        assert!(r.validate(gr), "{r:?}");
        assert!(r.has(|f| *f == fam), "{fam:?} not in {:?}", r.matches);
        r
    }

    #[test]
    fn basic_families() {
        assert_eq!(check(&g(1, &[]), Family::Path(1)).family, Family::Path(1));
        assert_eq!(check(&g(3, &[(0, 1), (1, 2)]), Family::Star(2)).family, Family::Path(3));
        assert_eq!(check(&g(4, &[(0, 1), (0, 2), (0, 3)]), Family::Star(3)).family, Family::Star(3));
        assert_eq!(check(&g(3, &cyc(3)), Family::Complete(3)).family, Family::Cycle(3));
        assert_eq!(check(&g(4, &cyc(4)), Family::CompleteBipartite(2, 2)).family, Family::Cycle(4));
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(check(&k4, Family::Complete(4)).matches.len(), 1);
        check(&g(3, &cyc(3)), Family::CompleteTripartite(1, 1, 1));
        let k33 = g(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        assert_eq!(check(&k33, Family::CompleteBipartite(3, 3)).family, Family::CompleteBipartite(3, 3));
        let k211 = g(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(check(&k211, Family::CompleteTripartite(2, 1, 1)).family, Family::CompleteTripartite(2, 1, 1));
    }

    #[test]
    fn unicyclic_gap_parities() {
        let mut e = cyc(6);
        e.extend([(0, 6), (3, 7)]);
        check(&g(8, &e), Family::CanonicalUnicyclic { g: 6, t: 2, k: 2 });
        let mut e = cyc(6);
        e.extend([(0, 6), (2, 7)]);
        check(&g(8, &e), Family::CanonicalUnicyclic { g: 6, t: 2, k: 0 });
        let mut e = cyc(5);
        e.push((0, 5));
        check(&g(6, &e), Family::CanonicalUnicyclic { g: 5, t: 1, k: 1 });
        let mut e = cyc(4);
        e.extend([(0, 4), (1, 5), (1, 6)]);
        check(&g(7, &e), Family::CanonicalUnicyclic { g: 4, t: 2, k: 2 });
        // a pendant path is not a star
        let mut e = cyc(4);
        e.extend([(0, 4), (4, 5)]);
        let r = recognize(&g(6, &e)).unwrap();
        assert_eq!(r.family, Family::Other);
    }

    #[test]
    fn bicyclic_shapes() {
        let theta111 = g(5, &[(0, 1), (1, 4), (4, 3), (3, 0), (1, 2), (2, 3)]);
        assert_eq!(check(&theta111, Family::Theta(1, 1, 1)).family, Family::CompleteBipartite(3, 2));
        let diamond = g(4, &[(0, 1), (1, 3), (3, 0), (1, 2), (2, 3)]);
        check(&diamond, Family::Theta(0, 1, 1));
        let bowtie = g(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]);
        assert_eq!(check(&bowtie, Family::Infinity(3, 1, 3)).family, Family::Infinity(3, 1, 3));
        let dumbbell = g(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3)]);
        check(&dumbbell, Family::Infinity(3, 2, 4));
        let long = g(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5)]);
        check(&long, Family::Infinity(3, 3, 4));
    }

    #[test]
    fn cores_and_joined_stars() {
        let theta_tail = g(6, &[(0, 1), (1, 3), (3, 0), (1, 2), (2, 3), (3, 4), (4, 5)]);
        let core = bicyclic_core(&theta_tail).unwrap();
        assert_eq!(core.family, Family::Theta(0, 1, 1));
        assert_eq!(core.kept, vec![0, 1, 2, 3]);
        assert!(bicyclic_core(&g(4, &cyc(4))).is_err());
        let mut e = cyc(4);
        e.extend([(0, 4), (4, 5), (4, 6)]);
        let js = joined_star(&g(7, &e)).unwrap();
        assert_eq!((js.attach, js.center, js.leaves.len()), (0, 4, 2));
        let mut e = cyc(4);
        e.extend([(0, 4)]);
        assert!(joined_star(&g(5, &e)).is_none());
    }

    #[test]
    fn tampered_witness_fails() {
        let c5 = g(5, &cyc(5));
        let mut r = recognize(&c5).unwrap();
        r.witness = Witness::Cycle(vec![0, 2, 1, 3, 4]);
        assert!(!r.validate(&c5));
        assert!(recognize(&g(4, &[(0, 1), (2, 3)])).is_err());
    }
}
