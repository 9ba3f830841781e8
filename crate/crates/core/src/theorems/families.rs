//! Labelled constructors for the structural families, all with gain 1 on
//! every edge unless stated otherwise.

use crate::error::{Error, Result};
use crate::graph::GainGraph;
use crate::quat::{Quaternion, Rational, Scalar};

fn build<S: Scalar>(n: usize, edges: &[(usize, usize)]) -> GainGraph<S> {
    GainGraph::unit_gains(n, edges).expect("constructor edges are simple")
}

pub fn path<S: Scalar>(n: usize) -> GainGraph<S> {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &e)
}

/// Cycle `0 1 ... n-1`.
pub fn cycle<S: Scalar>(n: usize) -> GainGraph<S> {
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &e)
}

/// Center 0, leaves `1..=q`.
pub fn star<S: Scalar>(q: usize) -> GainGraph<S> {
    let e: Vec<_> = (1..=q).map(|v| (0, v)).collect();
    build(q + 1, &e)
}

pub fn complete<S: Scalar>(n: usize) -> GainGraph<S> {
    let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    build(n, &e)
}

/// Parts `0..a` and `a..a+b`.
pub fn complete_bipartite<S: Scalar>(a: usize, b: usize) -> GainGraph<S> {
    let e: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    build(a + b, &e)
}

/// Parts `0..r`, `r..r+s`, `r+s..r+s+t`.
pub fn complete_tripartite<S: Scalar>(r: usize, s: usize, t: usize) -> GainGraph<S> {
    let n = r + s + t;
    let part = |v: usize| usize::from(v >= r) + usize::from(v >= r + s);
    let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| part(u) != part(v)).collect();
    build(n, &e)
}

/// Branch vertices 0 and 1; the three paths carry `p`, `l`, `q` internal
/// vertices, numbered consecutively from 2.
pub fn theta<S: Scalar>(p: usize, l: usize, q: usize) -> GainGraph<S> {
    let mut e = Vec::new();
    let mut next = 2;
    let mut zero_paths = 0;
    for len in [p, l, q] {
        if len == 0 {
            zero_paths += 1;
            e.push((0, 1));
            continue;
        }
        let mut prev = 0;
        for _ in 0..len {
            e.push((prev, next));
            prev = next;
            next += 1;
        }
        e.push((prev, 1));
    }
    assert!(zero_paths <= 1, "at most one path may be empty");
    build(next, &e)
}

/// Cycle `C_p` on `0..p` (junction 0), a path with `l` vertices from 0 to
/// the junction of `C_q`, then the rest of `C_q`. `l = 1` shares vertex 0.
pub fn infinity<S: Scalar>(p: usize, l: usize, q: usize) -> GainGraph<S> {
    assert!(p >= 3 && q >= 3 && l >= 1);
    let mut e: Vec<_> = (0..p).map(|i| (i, (i + 1) % p)).collect();
    let mut junction = 0;
    let mut next = p;
    for _ in 1..l {
        e.push((junction, next));
        junction = next;
        next += 1;
    }
    let mut prev = junction;
    for _ in 1..q {
        e.push((prev, next));
        prev = next;
        next += 1;
    }
    e.push((prev, junction));
    build(next, &e)
}

/// Cycle `0..g`; `stars[i] = (position, leaves)` hangs `leaves` pendant
/// vertices directly on cycle vertex `position`.
pub fn canonical_unicyclic<S: Scalar>(g: usize, stars: &[(usize, usize)]) -> GainGraph<S> {
    let mut e: Vec<_> = (0..g).map(|i| (i, (i + 1) % g)).collect();
    let mut next = g;
    for &(pos, leaves) in stars {
        assert!(pos < g);
        for _ in 0..leaves {
            e.push((pos, next));
            next += 1;
        }
    }
    build(next, &e)
}

/// Cycle `0..g`, star center `g` joined to vertex 0, leaves `g+1..=g+q`.
pub fn joined_star<S: Scalar>(g: usize, q: usize) -> GainGraph<S> {
    let mut e: Vec<_> = (0..g).map(|i| (i, (i + 1) % g)).collect();
    e.push((0, g));
    e.extend((1..=q).map(|i| (g, g + i)));
    build(g + q + 1, &e)
}

/// `K_4` on branch vertices 0, 2, 4, 6 with every edge subdivided once.
pub fn subdivided_k4<S: Scalar>() -> GainGraph<S> {
    build(10, &one_indexed(&[(1, 2), (2, 3), (3, 4), (4, 5), (5, 9), (9, 1), (5, 6), (6, 7), (7, 8), (8, 1), (7, 10), (10, 3)]))
}

pub(crate) fn one_indexed(e: &[(usize, usize)]) -> Vec<(usize, usize)> {
    e.iter().map(|&(u, v)| (u - 1, v - 1)).collect()
}

/// Sets the gain on edge `cycle[at] -> cycle[at+1]` so that the gain of
/// `cycle`, read from `cycle[0]`, equals the unit `target`.
pub fn set_cycle_gain<S: Scalar>(g: &mut GainGraph<S>, cycle: &[usize], at: usize, target: &Quaternion<S>) -> Result<()> {
    g.check_cycle(cycle)?;
    let n = cycle.len();
    if at >= n {
        return Err(Error::NotACycle(format!("edge position {at} on a cycle of length {n}")));
    }
    let hop = |i: usize| g.gain(cycle[i], cycle[(i + 1) % n]).expect("cycle edge").clone();
    let left = (0..at).fold(Quaternion::one(), |acc, i| acc.mul_ref(&hop(i)));
    let right = (at + 1..n).fold(Quaternion::one(), |acc, i| acc.mul_ref(&hop(i)));
    let d = left.conj().mul_ref(target).mul_ref(&right.conj());
    g.set_gain(cycle[at], cycle[(at + 1) % n], d)
}

/// Realizes several cycle gains at once. Each cycle gets its target on the
/// first edge that no other listed cycle uses, so the assignments do not
/// interfere.
pub fn assign_cycle_gains<S: Scalar>(g: &mut GainGraph<S>, targets: &[(Vec<usize>, Quaternion<S>)]) -> Result<()> {
    let edges_of = |c: &[usize]| -> Vec<(usize, usize)> {
        (0..c.len()).map(|i| (c[i].min(c[(i + 1) % c.len()]), c[i].max(c[(i + 1) % c.len()]))).collect()
    };
    let mut chosen = Vec::with_capacity(targets.len());
    for (idx, (c, _)) in targets.iter().enumerate() {
        let others: Vec<(usize, usize)> =
            targets.iter().enumerate().filter(|&(j, _)| j != idx).flat_map(|(_, (o, _))| edges_of(o)).collect();
        let at = edges_of(c)
            .iter()
            .position(|e| !others.contains(e))
            .ok_or_else(|| Error::NotACycle(format!("cycle {c:?} has no edge of its own")))?;
        chosen.push(at);
    }
    for ((c, t), at) in targets.iter().zip(chosen) {
        set_cycle_gain(g, c, at, t)?;
    }
    Ok(())
}

/// `theta(1,3,3)`, `theta(3,3,3)` and the subdivided `K_4` with gains that
/// make every cycle Type 1, with the rank each should have.
pub fn type_one_instances() -> Vec<(&'static str, GainGraph<Rational>, usize)> {
    let minus = -Quaternion::<Rational>::one();
    // one edge of the single-vertex path carries -1
    let mut t133 = theta::<Rational>(1, 3, 3);
    t133.set_gain(0, 2, minus.clone()).expect("edge");
    let t333 = theta::<Rational>(3, 3, 3);
    // every subdivided edge of K_4 gets path gain -1
    let mut k4s = subdivided_k4::<Rational>();
    for (u, v) in one_indexed(&[(1, 2), (3, 4), (5, 9), (5, 6), (7, 8), (7, 10)]) {
        k4s.set_gain(u, v, minus.clone()).expect("edge");
    }
    vec![("theta(1,3,3)", t133, 6), ("theta(3,3,3)", t333, 8), ("subdivided K4", k4s, 6)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CycleType;
    use crate::quat::Rational;
    use crate::reduce::{recognize, Family};

    type G = GainGraph<Rational>;

    #[test]
    fn families_are_recognized() {
        let cases: Vec<(G, Family)> = vec![
            (path(5), Family::Path(5)),
            (cycle(6), Family::Cycle(6)),
            (star(4), Family::Star(4)),
            (complete(5), Family::Complete(5)),
            (complete_bipartite(2, 3), Family::CompleteBipartite(2, 3)),
            (complete_tripartite(1, 2, 2), Family::CompleteTripartite(1, 2, 2)),
            (theta(1, 3, 3), Family::Theta(1, 3, 3)),
            (theta(0, 2, 2), Family::Theta(0, 2, 2)),
            (infinity(3, 2, 4), Family::Infinity(3, 2, 4)),
            (infinity(4, 1, 5), Family::Infinity(4, 1, 5)),
            (canonical_unicyclic(5, &[(0, 2)]), Family::CanonicalUnicyclic { g: 5, t: 1, k: 1 }),
        ];
        for (g, fam) in cases {
            let r = recognize(&g).unwrap();
            assert!(r.has(|f| *f == fam), "{fam:?} not in {:?}", r.matches);
        }
        let k4s = subdivided_k4::<Rational>();
        assert_eq!((k4s.order(), k4s.size(), k4s.girth().unwrap().length), (10, 12, 6));
        let js = joined_star::<Rational>(5, 2);
        assert!(crate::reduce::joined_star(&js).is_some());
    }

    #[test]
    fn type_one_instances_have_expected_rank() {
        for (name, g, rank) in type_one_instances() {
            assert!(g.simple_cycles().iter().all(|c| g.cycle_type(c).unwrap() == CycleType::Type1), "{name}");
            assert_eq!(g.rank(), rank, "{name}");
            assert_eq!(g.girth().unwrap().length, rank, "{name}");
        }
    }

    #[test]
    fn cycle_gain_assignment() {
        let mut g = theta::<Rational>(1, 3, 3);
        let w = recognize(&g).unwrap();
        let crate::reduce::Witness::Theta { paths } = w.witness else { panic!() };
        let c1: Vec<usize> = paths[0].iter().chain(paths[1].iter().rev().skip(1)).copied().collect();
        let c1 = c1[..c1.len() - 1].to_vec();
        let t = Quaternion::new(Rational::new(1, 2), Rational::new(1, 2), Rational::new(1, 2), Rational::new(1, 2));
        set_cycle_gain(&mut g, &c1, 2, &t).unwrap();
        assert_eq!(g.cycle_gain(&c1).unwrap(), t);
        let mut c = cycle::<Rational>(5);
        let ty4 = CycleType::Type4.representative_gain(5).unwrap();
        set_cycle_gain(&mut c, &[0, 1, 2, 3, 4], 0, &ty4).unwrap();
        assert_eq!(c.cycle_type(&[0, 1, 2, 3, 4]).unwrap(), CycleType::Type4);
    }
}
