//! The labelled bicyclic shapes with rank 4 or less, their gain conditions,
//! and predictors that match a graph against them.
//!
//! Vertex labels in the condition code are 1-based so that they read the
//! same as the shape drawings; [`TableShape::edges`] returns 0-based pairs.

use std::fmt;

use serde::Serialize;

use super::families::{assign_cycle_gains, one_indexed};
use crate::error::{Error, Result};
use crate::graph::{CycleType, GainGraph};
use crate::quat::{Quaternion, Rational, Scalar, ZeroTest};
use crate::reduce::{bicyclic_core, find_isomorphism, find_pendant_twins, Family};

use CycleType::{Type1, Type2, Type3, Type4};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TableShape {
    // pendant-free
    Infinity313,
    Infinity314,
    Infinity414,
    Infinity323,
    Theta011,
    Theta012,
    Theta013,
    Theta022,
    Theta111,
    Theta112,
    Theta113,
    // with pendant vertices
    Theta011PendantAtDegree2,
    Theta011PendantAtDegree3,
    Theta011PendantsAtBothDegree3,
    Theta011PathAtDegree2,
    Theta011PathAtDegree3,
    Theta012PendantAtApex,
    Theta111PendantAtMiddle,
    Theta111PendantAtBranch,
    Theta111PendantsAtBothBranches,
    Theta111PathAtBranch,
    Theta111PathAtMiddle,
}

use TableShape::*;

const DIAMOND: [(usize, usize); 5] = [(1, 2), (2, 4), (4, 1), (2, 3), (3, 4)];
const THETA111: [(usize, usize); 6] = [(1, 2), (2, 5), (5, 4), (4, 1), (2, 3), (3, 4)];

impl TableShape {
    pub const PENDANT_FREE: [TableShape; 11] =
        [Infinity313, Infinity314, Infinity414, Infinity323, Theta011, Theta012, Theta013, Theta022, Theta111, Theta112, Theta113];
    pub const WITH_PENDANTS: [TableShape; 11] = [
        Theta011PendantAtDegree2,
        Theta011PendantAtDegree3,
        Theta011PendantsAtBothDegree3,
        Theta011PathAtDegree2,
        Theta011PathAtDegree3,
        Theta012PendantAtApex,
        Theta111PendantAtMiddle,
        Theta111PendantAtBranch,
        Theta111PendantsAtBothBranches,
        Theta111PathAtBranch,
        Theta111PathAtMiddle,
    ];

    pub fn all() -> impl Iterator<Item = TableShape> {
        Self::PENDANT_FREE.into_iter().chain(Self::WITH_PENDANTS)
    }

    pub fn has_pendants(self) -> bool {
        Self::WITH_PENDANTS.contains(&self)
    }

    fn edges_1(self) -> Vec<(usize, usize)> {
        let with = |base: &[(usize, usize)], extra: &[(usize, usize)]| base.iter().chain(extra).copied().collect();
        match self {
            Infinity313 => vec![(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5)],
            Infinity314 => vec![(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3)],
            Infinity414 => vec![(1, 2), (2, 4), (4, 3), (3, 1), (4, 5), (5, 6), (6, 7), (7, 4)],
            Infinity323 => vec![(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)],
            Theta011 => DIAMOND.to_vec(),
            Theta012 => vec![(1, 2), (2, 5), (5, 1), (2, 3), (3, 4), (4, 5)],
            Theta013 => vec![(1, 2), (2, 6), (6, 1), (2, 3), (3, 4), (4, 5), (5, 6)],
            Theta022 => vec![(1, 2), (2, 5), (5, 6), (6, 1), (2, 3), (3, 4), (4, 5)],
            Theta111 => THETA111.to_vec(),
            Theta112 => vec![(1, 2), (2, 6), (6, 5), (5, 1), (2, 3), (3, 4), (4, 5)],
            Theta113 => vec![(1, 2), (2, 7), (7, 6), (6, 1), (2, 3), (3, 4), (4, 5), (5, 6)],
            Theta011PendantAtDegree2 => vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5)],
            Theta011PendantAtDegree3 => vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (2, 5)],
            Theta011PendantsAtBothDegree3 => vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (2, 5), (3, 6)],
            Theta011PathAtDegree2 => with(&DIAMOND, &[(3, 5), (5, 6)]),
            Theta011PathAtDegree3 => with(&DIAMOND, &[(4, 5), (5, 6)]),
            Theta012PendantAtApex => vec![(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (4, 5), (5, 6)],
            Theta111PendantAtMiddle => with(&THETA111, &[(5, 6)]),
            Theta111PendantAtBranch => with(&THETA111, &[(2, 6)]),
            Theta111PendantsAtBothBranches => with(&THETA111, &[(2, 6), (4, 7)]),
            Theta111PathAtBranch => with(&THETA111, &[(2, 6), (6, 7)]),
            Theta111PathAtMiddle => with(&THETA111, &[(1, 6), (6, 7)]),
        }
    }

    /// 0-based edge list.
    pub fn edges(self) -> Vec<(usize, usize)> {
        one_indexed(&self.edges_1())
    }

    pub fn order(self) -> usize {
        self.edges_1().iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0)
    }

    /// The shape with gain 1 on every edge.
    pub fn graph<S: Scalar>(self) -> GainGraph<S> {
        GainGraph::unit_gains(self.order(), &self.edges()).expect("shape edges are simple")
    }

    /// Evaluates the tabulated conditions on `h`, whose labels already
    /// follow the shape.
    fn evaluate<S: Scalar>(self, h: &GainGraph<S>) -> (Predicted, bool) {
        let mut e = Eval { g: h, ambiguous: false };
        let p = match self {
            Infinity313 => {
                let s = e.gain(&[1, 3, 2]).re() + e.gain(&[1, 5, 4]).re();
                four_if(e.zero(&Quaternion::real(s)))
            }
            Infinity314 => four_if(e.ty(&[3, 4, 5, 6]) == Type1 && e.ty(&[1, 2, 3]) == Type4),
            Infinity414 => four_if(e.ty(&[1, 2, 4, 3]) == Type1 && e.ty(&[4, 5, 6, 7]) == Type1),
            Infinity323 => Predicted::Above(4),
            Theta011 => match (e.ty(&[1, 2, 3, 4]), e.ty(&[1, 2, 4])) {
                (Type1, Type4) => Predicted::Rank(2),
                (Type1, _) => Predicted::Rank(3),
                _ => Predicted::Rank(4),
            },
            Theta012 => {
                let s = e.gain(&[1, 2, 5]).re() - e.gain(&[1, 2, 3, 4, 5]).re();
                four_if(e.zero(&Quaternion::real(s)))
            }
            Theta013 => four_if(e.ty(&[1, 2, 6]) == Type4 && e.ty(&[1, 2, 3, 4, 5, 6]) == Type1),
            Theta022 => {
                let d = e.gain(&[1, 2, 3, 4, 5, 6]).sub_ref(&e.gain(&[1, 2, 5, 6])).add_ref(&Quaternion::one());
                four_if(e.zero(&d))
            }
            Theta111 => {
                if e.ty(&[1, 2, 5, 4]) == Type1 && e.ty(&[1, 2, 3, 4]) == Type1 {
                    Predicted::Rank(2)
                } else {
                    Predicted::Rank(4)
                }
            }
            Theta112 => four_if(e.ty(&[1, 2, 6, 5]) == Type1 && e.ty(&[1, 2, 3, 4, 5]) == Type4),
            Theta113 => four_if(e.ty(&[1, 2, 7, 6]) == Type1 && e.ty(&[1, 2, 3, 4, 5, 6]) == Type1),
            Theta011PendantAtDegree2 => four_or_not(e.ty(&[1, 2, 3]) == Type4),
            Theta011PendantAtDegree3 | Theta011PendantsAtBothDegree3 | Theta111PendantAtBranch | Theta111PendantsAtBothBranches => {
                Predicted::Rank(4)
            }
            Theta011PathAtDegree2 | Theta011PathAtDegree3 => {
                four_or_not(e.ty(&[1, 2, 4]) == Type4 && e.ty(&[1, 2, 3, 4]) == Type1)
            }
            Theta012PendantAtApex | Theta111PendantAtMiddle => four_or_not(e.ty(&[1, 2, 3, 4]) == Type1),
            Theta111PathAtBranch | Theta111PathAtMiddle => {
                four_or_not(e.ty(&[1, 2, 5, 4]) == Type1 && e.ty(&[1, 2, 3, 4]) == Type1)
            }
        };
        (p, e.ambiguous)
    }

    /// Conforming constructions, one per tabulated rank value.
    pub fn rows(self) -> Vec<TableRow> {
        let ty = |c: &[usize], t: CycleType| (c.to_vec(), Target::Type(t));
        let val = |c: &[usize], q: Quaternion<Rational>| (c.to_vec(), Target::Value(q));
        let row = |rank, conforming: Vec<(Vec<usize>, Target)>, nonconforming: Option<Vec<(Vec<usize>, Target)>>| TableRow {
            shape: self,
            rank,
            conforming,
            nonconforming,
        };
        let h = hurwitz_half();
        match self {
            Infinity313 => vec![row(
                4,
                vec![val(&[1, 3, 2], Quaternion::i()), val(&[1, 5, 4], Quaternion::j())],
                Some(vec![val(&[1, 3, 2], Quaternion::one()), val(&[1, 5, 4], Quaternion::one())]),
            )],
            Infinity314 => vec![row(
                4,
                vec![ty(&[3, 4, 5, 6], Type1), ty(&[1, 2, 3], Type4)],
                Some(vec![ty(&[3, 4, 5, 6], Type2), ty(&[1, 2, 3], Type4)]),
            )],
            Infinity414 => vec![row(
                4,
                vec![ty(&[1, 2, 4, 3], Type1), ty(&[4, 5, 6, 7], Type1)],
                Some(vec![ty(&[1, 2, 4, 3], Type2), ty(&[4, 5, 6, 7], Type1)]),
            )],
            Infinity323 => Vec::new(),
            Theta011 => vec![
                row(2, vec![ty(&[1, 2, 4], Type4), ty(&[1, 2, 3, 4], Type1)], Some(vec![ty(&[1, 2, 4], Type3), ty(&[1, 2, 3, 4], Type1)])),
                row(3, vec![ty(&[1, 2, 4], Type3), ty(&[1, 2, 3, 4], Type1)], Some(vec![ty(&[1, 2, 4], Type4), ty(&[1, 2, 3, 4], Type1)])),
                row(4, vec![ty(&[1, 2, 4], Type3), ty(&[1, 2, 3, 4], Type2)], Some(vec![ty(&[1, 2, 4], Type3), ty(&[1, 2, 3, 4], Type1)])),
            ],
            Theta012 => vec![row(
                4,
                vec![val(&[1, 2, 5], Quaternion::one()), val(&[1, 2, 3, 4, 5], Quaternion::one())],
                Some(vec![val(&[1, 2, 5], Quaternion::i()), val(&[1, 2, 3, 4, 5], Quaternion::one())]),
            )],
            Theta013 => vec![row(
                4,
                vec![ty(&[1, 2, 6], Type4), ty(&[1, 2, 3, 4, 5, 6], Type1)],
                Some(vec![ty(&[1, 2, 6], Type4), ty(&[1, 2, 3, 4, 5, 6], Type2)]),
            )],
            // needs b = a - 1 with both units: a = (1+i+j+k)/2
            Theta022 => vec![row(
                4,
                vec![val(&[1, 2, 5, 6], h.clone()), val(&[1, 2, 3, 4, 5, 6], h.sub_ref(&Quaternion::one()))],
                Some(vec![val(&[1, 2, 5, 6], Quaternion::one()), val(&[1, 2, 3, 4, 5, 6], Quaternion::one())]),
            )],
            Theta111 => vec![
                row(2, vec![ty(&[1, 2, 5, 4], Type1), ty(&[1, 2, 3, 4], Type1)], Some(vec![ty(&[1, 2, 5, 4], Type1), ty(&[1, 2, 3, 4], Type2)])),
                row(4, vec![ty(&[1, 2, 5, 4], Type2), ty(&[1, 2, 3, 4], Type1)], Some(vec![ty(&[1, 2, 5, 4], Type1), ty(&[1, 2, 3, 4], Type1)])),
            ],
            Theta112 => vec![row(
                4,
                vec![ty(&[1, 2, 6, 5], Type1), ty(&[1, 2, 3, 4, 5], Type4)],
                Some(vec![ty(&[1, 2, 6, 5], Type1), ty(&[1, 2, 3, 4, 5], Type3)]),
            )],
            Theta113 => vec![row(
                4,
                vec![ty(&[1, 2, 7, 6], Type1), ty(&[1, 2, 3, 4, 5, 6], Type1)],
                Some(vec![ty(&[1, 2, 7, 6], Type2), ty(&[1, 2, 3, 4, 5, 6], Type1)]),
            )],
            Theta011PendantAtDegree2 => vec![row(4, vec![ty(&[1, 2, 3], Type4)], Some(vec![ty(&[1, 2, 3], Type3)]))],
            Theta011PendantAtDegree3 | Theta011PendantsAtBothDegree3 | Theta111PendantAtBranch | Theta111PendantsAtBothBranches => {
                vec![row(4, Vec::new(), None)]
            }
            Theta011PathAtDegree2 | Theta011PathAtDegree3 => vec![row(
                4,
                vec![ty(&[1, 2, 4], Type4), ty(&[1, 2, 3, 4], Type1)],
                Some(vec![ty(&[1, 2, 4], Type3), ty(&[1, 2, 3, 4], Type1)]),
            )],
            Theta012PendantAtApex | Theta111PendantAtMiddle => {
                vec![row(4, vec![ty(&[1, 2, 3, 4], Type1)], Some(vec![ty(&[1, 2, 3, 4], Type2)]))]
            }
            Theta111PathAtBranch | Theta111PathAtMiddle => vec![row(
                4,
                vec![ty(&[1, 2, 5, 4], Type1), ty(&[1, 2, 3, 4], Type1)],
                Some(vec![ty(&[1, 2, 5, 4], Type2), ty(&[1, 2, 3, 4], Type1)]),
            )],
        }
    }
}

impl fmt::Display for TableShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Infinity313 => "infinity(3,1,3)",
            Infinity314 => "infinity(3,1,4)",
            Infinity414 => "infinity(4,1,4)",
            Infinity323 => "infinity(3,2,3)",
            Theta011 => "theta(0,1,1)",
            Theta012 => "theta(0,1,2)",
            Theta013 => "theta(0,1,3)",
            Theta022 => "theta(0,2,2)",
            Theta111 => "theta(1,1,1)",
            Theta112 => "theta(1,1,2)",
            Theta113 => "theta(1,1,3)",
            Theta011PendantAtDegree2 => "theta(0,1,1) + pendant at a degree-2 vertex",
            Theta011PendantAtDegree3 => "theta(0,1,1) + pendant at a degree-3 vertex",
            Theta011PendantsAtBothDegree3 => "theta(0,1,1) + pendants at both degree-3 vertices",
            Theta011PathAtDegree2 => "theta(0,1,1) + P2 at a degree-2 vertex",
            Theta011PathAtDegree3 => "theta(0,1,1) + P2 at a degree-3 vertex",
            Theta012PendantAtApex => "theta(0,1,2) + pendant at the triangle apex",
            Theta111PendantAtMiddle => "theta(1,1,1) + pendant at a middle vertex",
            Theta111PendantAtBranch => "theta(1,1,1) + pendant at a branch vertex",
            Theta111PendantsAtBothBranches => "theta(1,1,1) + pendants at both branch vertices",
            Theta111PathAtBranch => "theta(1,1,1) + P2 at a branch vertex",
            Theta111PathAtMiddle => "theta(1,1,1) + P2 at a middle vertex",
        };
        f.write_str(s)
    }
}

fn hurwitz_half() -> Quaternion<Rational> {
    let h = Rational::new(1, 2);
    Quaternion::new(h.clone(), h.clone(), h.clone(), h)
}

/// Predicted rank: a value, a strict lower bound, or an excluded value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Predicted {
    Rank(usize),
    Above(usize),
    Not(usize),
}

impl Predicted {
    pub fn admits(self, r: usize) -> bool {
        match self {
            Predicted::Rank(v) => r == v,
            Predicted::Above(v) => r > v,
            Predicted::Not(v) => r != v,
        }
    }
}

impl fmt::Display for Predicted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicted::Rank(v) => write!(f, "{v}"),
            Predicted::Above(v) => write!(f, ">{v}"),
            Predicted::Not(v) => write!(f, "!={v}"),
        }
    }
}

fn four_if(ok: bool) -> Predicted {
    if ok {
        Predicted::Rank(4)
    } else {
        Predicted::Above(4)
    }
}

fn four_or_not(ok: bool) -> Predicted {
    if ok {
        Predicted::Rank(4)
    } else {
        Predicted::Not(4)
    }
}

struct Eval<'a, S: Scalar> {
    g: &'a GainGraph<S>,
    ambiguous: bool,
}

impl<S: Scalar> Eval<'_, S> {
    fn cyc(c: &[usize]) -> Vec<usize> {
        c.iter().map(|v| v - 1).collect()
    }

    fn gain(&self, c: &[usize]) -> Quaternion<S> {
        self.g.cycle_gain(&Self::cyc(c)).expect("shape cycle")
    }

    fn ty(&mut self, c: &[usize]) -> CycleType {
        let class = self.g.classify_cycle(&Self::cyc(c)).expect("shape cycle");
        self.ambiguous |= class.ambiguous;
        class.ty
    }

    fn zero(&mut self, q: &Quaternion<S>) -> bool {
        match q.approx_zero() {
            ZeroTest::Zero => true,
            ZeroTest::NonZero => false,
            ZeroTest::Ambiguous => {
                self.ambiguous = true;
                false
            }
        }
    }
}

/// Outcome of matching a bicyclic graph against the tabulated shapes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TablePrediction {
    /// `None` when no tabulated shape matches.
    pub shape: Option<TableShape>,
    /// `map[i]` is the graph vertex playing shape vertex `i + 1`.
    pub map: Vec<usize>,
    pub family: Family,
    pub predicted: Predicted,
    /// A float decision inside the ambiguity band was involved.
    pub ambiguous: bool,
}

fn match_shapes<S: Scalar>(g: &GainGraph<S>, shapes: &[TableShape], family: Family, fallback: Predicted) -> TablePrediction {
    for &shape in shapes {
        if let Some(map) = find_isomorphism(&shape.graph::<S>(), g) {
            let h = g.induced_subgraph(&map).expect("isomorphism is a permutation");
            let (predicted, ambiguous) = shape.evaluate(&h);
            return TablePrediction { shape: Some(shape), map, family, predicted, ambiguous };
        }
    }
    TablePrediction { shape: None, map: Vec::new(), family, predicted: fallback, ambiguous: false }
}

/// Predicted rank of a connected bicyclic graph without pendant vertices.
pub fn predict_pendant_free_bicyclic<S: Scalar>(g: &GainGraph<S>) -> Result<TablePrediction> {
    let core = bicyclic_core(g)?;
    if core.core.order() != g.order() {
        return Err(Error::WrongFamily { expected: "bicyclic graph without pendant vertices".into() });
    }
    Ok(match_shapes(g, &TableShape::PENDANT_FREE, core.family, Predicted::Above(4)))
}

/// Predicts whether a connected bicyclic graph with pendant vertices, and
/// no pendant twins, has rank 4.
pub fn predict_pendant_bicyclic<S: Scalar>(g: &GainGraph<S>) -> Result<TablePrediction> {
    let core = bicyclic_core(g)?;
    if core.core.order() == g.order() {
        return Err(Error::WrongFamily { expected: "bicyclic graph with a pendant vertex".into() });
    }
    if find_pendant_twins(g).is_some() {
        return Err(Error::PendantTwins);
    }
    Ok(match_shapes(g, &TableShape::WITH_PENDANTS, core.family, Predicted::Not(4)))
}

/// Either side of a tabulated condition, for one cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Type(CycleType),
    Value(Quaternion<Rational>),
}

/// One tabulated rank value with gains that satisfy its condition and,
/// when the condition is not vacuous, gains that violate it.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub shape: TableShape,
    pub rank: usize,
    /// 1-based cycles and the gains they should carry.
    pub conforming: Vec<(Vec<usize>, Target)>,
    /// `None` for shapes where every gain assignment conforms.
    pub nonconforming: Option<Vec<(Vec<usize>, Target)>>,
}

impl TableRow {
    pub fn build(&self, cycles: &[(Vec<usize>, Target)]) -> Result<GainGraph<Rational>> {
        let mut g = self.shape.graph::<Rational>();
        let targets = cycles
            .iter()
            .map(|(c, t)| {
                let c0: Vec<usize> = c.iter().map(|v| v - 1).collect();
                let q = match t {
                    Target::Type(ty) => ty.representative_gain(c0.len())?,
                    Target::Value(q) => q.clone(),
                };
                Ok((c0, q))
            })
            .collect::<Result<Vec<_>>>()?;
        assign_cycle_gains(&mut g, &targets)?;
        Ok(g)
    }

    pub fn conforming_graph(&self) -> Result<GainGraph<Rational>> {
        self.build(&self.conforming)
    }

    pub fn nonconforming_graph(&self) -> Result<Option<GainGraph<Rational>>> {
        self.nonconforming.as_ref().map(|s| self.build(s)).transpose()
    }
}

/// Every tabulated row, pendant-free shapes first.
pub fn table_rows() -> Vec<TableRow> {
    TableShape::all().flat_map(TableShape::rows).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduce::recognize;

    #[test]
    fn shapes_have_expected_structure() {
        for s in TableShape::all() {
            let g = s.graph::<Rational>();
            assert!(g.is_connected(), "{s}");
            assert_eq!(g.size(), g.order() + 1, "{s}");
            assert_eq!(s.has_pendants(), !g.pendant_vertices().is_empty(), "{s}");
            assert!(find_pendant_twins(&g).is_none(), "{s}");
            let core = bicyclic_core(&g).unwrap();
            let want = s.to_string();
            assert!(want.starts_with(&core.family.to_string()), "{s} vs {}", core.family);
        }
        // shapes are pairwise non-isomorphic
        let all: Vec<_> = TableShape::all().collect();
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert!(find_isomorphism(&a.graph::<Rational>(), &b.graph::<Rational>()).is_none(), "{a} ~ {b}");
            }
        }
        assert!(matches!(recognize(&Theta111.graph::<Rational>()).unwrap().family, Family::CompleteBipartite(3, 2)));
    }

    #[test]
    fn rows_reproduce_tabulated_ranks() {
        for row in table_rows() {
            let g = row.conforming_graph().unwrap();
            assert_eq!(g.rank(), row.rank, "{} conforming", row.shape);
            let predict = if row.shape.has_pendants() { predict_pendant_bicyclic(&g) } else { predict_pendant_free_bicyclic(&g) };
            assert_eq!(predict.unwrap().predicted, Predicted::Rank(row.rank), "{}", row.shape);
            if let Some(bad) = row.nonconforming_graph().unwrap() {
                assert_ne!(bad.rank(), row.rank, "{} nonconforming", row.shape);
            }
        }
    }

    #[test]
    fn preconditions() {
        let c = crate::theorems::families::cycle::<Rational>(5);
        assert!(matches!(predict_pendant_free_bicyclic(&c), Err(Error::WrongFamily { .. })));
        let pend = Theta111PendantAtBranch.graph::<Rational>();
        assert!(predict_pendant_free_bicyclic(&pend).is_err());
        let mut e = pend.edge_list();
        e.push((1, 6));
        let twins = GainGraph::<Rational>::unit_gains(7, &e).unwrap();
        assert_eq!(predict_pendant_bicyclic(&twins), Err(Error::PendantTwins));
        let far = crate::theorems::families::theta::<Rational>(2, 2, 3);
        assert_eq!(predict_pendant_free_bicyclic(&far).unwrap().predicted, Predicted::Above(4));
    }

    fn random_gains(shape: TableShape, set: &[Quaternion<Rational>], rng: &mut impl rand::Rng) -> GainGraph<Rational> {
        let edges = shape.edges();
        GainGraph::from_edges(shape.order(), edges.into_iter().map(|(u, v)| (u, v, crate::quat::sample_from_set(set, rng)))).unwrap()
    }

    #[test]
    fn predictions_match_random_gains() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let sets = [crate::quat::lipschitz_units::<Rational>(), crate::quat::hurwitz_units::<Rational>()];
        for shape in TableShape::all() {
            for set in &sets {
                for _ in 0..150 {
                    let g = random_gains(shape, set, &mut rng);
                    let p = if shape.has_pendants() { predict_pendant_bicyclic(&g) } else { predict_pendant_free_bicyclic(&g) }.unwrap();
                    assert!(p.predicted.admits(g.rank()), "{shape}: predicted {} rank {}\n{}", p.predicted, g.rank(), g.to_qgg());
                }
            }
        }
    }
}
