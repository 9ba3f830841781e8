//! Closed-form ranks for paths, cycles, cycle attachments, canonical
//! unicyclic graphs, and the pendant bicyclic lower bounds.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CycleType, GainGraph};
use crate::quat::Scalar;
use crate::reduce::{bicyclic_core, recognize, Family};

/// `n - 1` for odd `n`, `n` for even `n`.
pub fn path_rank(n: usize) -> usize {
    if n % 2 == 1 {
        n - 1
    } else {
        n
    }
}

pub fn cycle_rank(n: usize, ty: CycleType) -> Result<usize> {
    ty.check_length(n)?;
    Ok(match ty {
        CycleType::Type1 => n - 2,
        CycleType::Type2 | CycleType::Type3 => n,
        CycleType::Type4 => n - 1,
    })
}

/// A rank that is either pinned down or only bracketed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RankValue {
    Exact(usize),
    Between(usize, usize),
}

impl RankValue {
    pub fn contains(self, r: usize) -> bool {
        match self {
            RankValue::Exact(v) => r == v,
            RankValue::Between(lo, hi) => (lo..=hi).contains(&r),
        }
    }
}

impl fmt::Display for RankValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankValue::Exact(v) => write!(f, "{v}"),
            RankValue::Between(lo, hi) => write!(f, "[{lo},{hi}]"),
        }
    }
}

/// Rank of a graph built by gluing a vertex of an `n`-cycle of type `ty`
/// onto vertex `u` of `G1`; `r_g1 = rank(G1)`, `r_g2 = rank(G1 - u)`.
pub fn cycle_attachment_rank(n: usize, ty: CycleType, r_g1: usize, r_g2: usize) -> Result<RankValue> {
    ty.check_length(n)?;
    Ok(match ty {
        CycleType::Type1 => RankValue::Exact(n - 2 + r_g1),
        CycleType::Type2 => RankValue::Exact(n + r_g2),
        CycleType::Type4 => RankValue::Exact(n - 1 + r_g1),
        CycleType::Type3 => RankValue::Between(n - 1 + r_g2, n + r_g1),
    })
}

/// `g + k` for a canonical unicyclic graph that is not a bare cycle.
pub fn canonical_unicyclic_rank<S: Scalar>(g: &GainGraph<S>) -> Result<usize> {
    let shape = recognize(g)?;
    match shape.find(|f| matches!(f, Family::CanonicalUnicyclic { .. })) {
        Some((Family::CanonicalUnicyclic { g, k, .. }, _)) => Ok(g + k),
        _ => Err(Error::WrongFamily { expected: "canonical unicyclic graph".into() }),
    }
}

/// Lower bound on the rank of a connected bicyclic graph with at least one
/// pendant vertex, by the shape of its pendant-free core.
pub fn bicyclic_lower_bound<S: Scalar>(g: &GainGraph<S>) -> Result<usize> {
    let core = bicyclic_core(g)?;
    if core.core.order() == g.order() {
        return Err(Error::WrongFamily { expected: "bicyclic graph with a pendant vertex".into() });
    }
    Ok(match core.family {
        Family::Infinity(p, _, q) => match (p % 2, q % 2) {
            (1, 1) => p + q,
            (0, 0) => p + q - 2,
            _ => p + q - 1,
        },
        Family::Theta(0, l, q) => {
            if (l + q) % 2 == 1 {
                l + q + 1
            } else {
                l + q + 2
            }
        }
        Family::Theta(p, l, q) => {
            if p % 2 == 1 {
                p + l + q + 1
            } else {
                p + l + q + 2
            }
        }
        _ => unreachable!("bicyclic core is an infinity or theta graph"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Rational;
    use crate::theorems::families;

    #[test]
    fn small_formulas() {
        assert_eq!([1, 3, 6].map(path_rank), [0, 2, 6]);
        assert_eq!(cycle_rank(4, CycleType::Type1).unwrap(), 2);
        assert_eq!(cycle_rank(3, CycleType::Type4).unwrap(), 2);
        assert_eq!(cycle_rank(5, CycleType::Type3).unwrap(), 5);
        assert!(matches!(cycle_rank(4, CycleType::Type3), Err(Error::ParityMismatch { .. })));
        assert_eq!(cycle_attachment_rank(4, CycleType::Type1, 2, 0).unwrap(), RankValue::Exact(4));
        assert_eq!(cycle_attachment_rank(4, CycleType::Type2, 0, 0).unwrap(), RankValue::Exact(4));
        assert_eq!(cycle_attachment_rank(5, CycleType::Type3, 2, 0).unwrap(), RankValue::Between(4, 7));
    }

    #[test]
    fn unicyclic_examples() {
        let c6 = families::canonical_unicyclic::<Rational>(6, &[(0, 1), (2, 2)]);
        assert_eq!(canonical_unicyclic_rank(&c6).unwrap(), 6);
        assert_eq!(c6.rank(), 6);
        let c5 = families::canonical_unicyclic::<Rational>(5, &[(0, 1)]);
        assert_eq!((canonical_unicyclic_rank(&c5).unwrap(), c5.rank()), (6, 6));
        let c4 = families::canonical_unicyclic::<Rational>(4, &[(0, 3)]);
        assert_eq!((canonical_unicyclic_rank(&c4).unwrap(), c4.rank()), (4, 4));
        assert!(canonical_unicyclic_rank(&families::cycle::<Rational>(5)).is_err());
    }

    fn with_pendant(g: GainGraph<Rational>, at: usize) -> GainGraph<Rational> {
        let n = g.order();
        let mut e = g.edge_list();
        e.push((at, n));
        GainGraph::unit_gains(n + 1, &e).unwrap()
    }

    #[test]
    fn bicyclic_bounds() {
        assert_eq!(bicyclic_lower_bound(&with_pendant(families::infinity(3, 1, 3), 1)).unwrap(), 6);
        assert_eq!(bicyclic_lower_bound(&with_pendant(families::theta(2, 2, 2), 2)).unwrap(), 8);
        assert_eq!(bicyclic_lower_bound(&with_pendant(families::theta(0, 1, 2), 2)).unwrap(), 4);
        assert!(bicyclic_lower_bound(&families::theta::<Rational>(0, 1, 2)).is_err());
    }
}
