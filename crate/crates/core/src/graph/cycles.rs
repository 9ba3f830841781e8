use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::GainGraph;
use crate::error::{Error, Result};
use crate::quat::{Quaternion, Scalar, FLOAT_NONZERO, FLOAT_ZERO};

/// Gain-cycle classes. Types 1 and 2 are even, Types 3 and 4 odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CycleType {
    /// Even, `phi(C) = (-1)^{n/2}`.
    Type1,
    /// Even, `phi(C) != (-1)^{n/2}`.
    Type2,
    /// Odd, `Re((-1)^{(n-1)/2} phi(C)) != 0`.
    Type3,
    /// Odd, `Re((-1)^{(n-1)/2} phi(C)) = 0`.
    Type4,
}

impl CycleType {
    pub const ALL: [CycleType; 4] = [CycleType::Type1, CycleType::Type2, CycleType::Type3, CycleType::Type4];

    pub fn is_even(self) -> bool {
        matches!(self, CycleType::Type1 | CycleType::Type2)
    }

    pub fn fits_length(self, n: usize) -> bool {
        n >= 3 && self.is_even() == (n % 2 == 0)
    }

    pub fn check_length(self, n: usize) -> Result<()> {
        if self.fits_length(n) {
            Ok(())
        } else {
            Err(Error::ParityMismatch { len: n, ty: self })
        }
    }

    /// The two types admissible for a cycle of length `n`.
    pub fn for_length(n: usize) -> [CycleType; 2] {
        if n % 2 == 0 {
            [CycleType::Type1, CycleType::Type2]
        } else {
            [CycleType::Type3, CycleType::Type4]
        }
    }

    /// A gain realizing this type on a cycle of length `n`.
    pub fn representative_gain<S: Scalar>(self, n: usize) -> Result<Quaternion<S>> {
        self.check_length(n)?;
        Ok(match self {
            CycleType::Type1 => Quaternion::sign_power(n / 2),
            CycleType::Type2 => Quaternion::i().mul_ref(&Quaternion::sign_power(n / 2)),
            CycleType::Type3 => Quaternion::sign_power((n - 1) / 2),
            CycleType::Type4 => Quaternion::sign_power((n - 1) / 2).mul_ref(&Quaternion::i()),
        })
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self {
            CycleType::Type1 => 1,
            CycleType::Type2 => 2,
            CycleType::Type3 => 3,
            CycleType::Type4 => 4,
        };
        write!(f, "Type {k}")
    }
}

/// Type decision plus the evidence it rests on.
#[derive(Clone, Debug, PartialEq)]
pub struct CycleClass<S: Scalar> {
    pub ty: CycleType,
    pub gain: Quaternion<S>,
    /// Float tower: the deciding magnitude was compared against a threshold.
    pub approximate: bool,
    /// Float tower: the deciding magnitude lies in the ambiguous band.
    pub ambiguous: bool,
    /// `|phi - (-1)^{n/2}|` (even) or `|Re((-1)^{(n-1)/2} phi)|` (odd).
    pub margin: f64,
}

/// Shortest cycle length with one witness cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Girth {
    pub length: usize,
    pub cycle: Vec<usize>,
}

impl<S: Scalar> GainGraph<S> {
    pub fn check_cycle(&self, cycle: &[usize]) -> Result<()> {
        let n = cycle.len();
        if n < 3 {
            return Err(Error::NotACycle(format!("{cycle:?} has fewer than 3 vertices")));
        }
        let mut seen = vec![false; self.order()];
        for (idx, &v) in cycle.iter().enumerate() {
            self.check_vertex(v)?;
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotACycle(format!("{cycle:?} repeats vertex {v}")));
            }
            let w = cycle[(idx + 1) % n];
            if !self.has_edge(v, w) {
                return Err(Error::NotACycle(format!("{cycle:?} lacks edge {v}-{w}")));
            }
        }
        Ok(())
    }

    /// `phi(v1 v2) phi(v2 v3) ... phi(vn v1)`.
    pub fn cycle_gain(&self, cycle: &[usize]) -> Result<Quaternion<S>> {
        self.check_cycle(cycle)?;
        Ok(self.walk_gain_closed(cycle))
    }

    fn walk_gain_closed(&self, cycle: &[usize]) -> Quaternion<S> {
        let n = cycle.len();
        let mut acc = Quaternion::one();
        for idx in 0..n {
            acc = acc.mul_ref(self.gain(cycle[idx], cycle[(idx + 1) % n]).expect("edge"));
        }
        acc
    }

    /// Product of gains along an open walk `v1 v2 ... vm`.
    pub fn path_gain(&self, path: &[usize]) -> Result<Quaternion<S>> {
        let mut acc = Quaternion::one();
        for w in path.windows(2) {
            let g = self
                .gain(w[0], w[1])
                .ok_or_else(|| Error::NotACycle(format!("no edge {}-{}", w[0], w[1])))?;
            acc = acc.mul_ref(g);
        }
        Ok(acc)
    }

    /// Type of a cycle. Float gains are decided at `1e-9` and flagged approximate.
    pub fn classify_cycle(&self, cycle: &[usize]) -> Result<CycleClass<S>> {
        let gain = self.cycle_gain(cycle)?;
        Ok(classify_gain(cycle.len(), gain))
    }

    /// Like [`classify_cycle`](Self::classify_cycle) but refuses ambiguous float decisions.
    pub fn cycle_type(&self, cycle: &[usize]) -> Result<CycleType> {
        let c = self.classify_cycle(cycle)?;
        if c.ambiguous {
            return Err(Error::AmbiguousFloat(c.margin));
        }
        Ok(c.ty)
    }

    /// Shortest cycle via breadth-first search from every vertex.
    pub fn girth(&self) -> Option<Girth> {
        let n = self.order();
        let mut best: Option<Girth> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[s] = 0;
            queue.clear();
            queue.push_back(s);
            'bfs: while let Some(u) = queue.pop_front() {
                if let Some(b) = &best {
                    // any cycle closed from here is at least 2 d[u] long
                    if 2 * dist[u] >= b.length {
                        break 'bfs;
                    }
                }
                for &v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        if best.as_ref().is_none_or(|b| len < b.length) {
                            if let Some(cycle) = tree_cycle(&parent, s, u, v) {
                                best = Some(Girth { length: len, cycle });
                            }
                        }
                    }
                }
            }
            if best.as_ref().is_some_and(|b| b.length == 3) {
                break;
            }
        }
        best
    }

    /// Every simple cycle once, starting at its least vertex, with
    /// `cycle[1] < cycle[last]`. Exponential; meant for small graphs.
    pub fn simple_cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        let mut on = vec![false; self.order()];
        for s in 0..self.order() {
            path.push(s);
            on[s] = true;
            self.extend_cycles(s, &mut path, &mut on, &mut out);
            on[s] = false;
            path.pop();
        }
        out
    }

    fn extend_cycles(&self, s: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let u = *path.last().expect("nonempty");
        for &v in self.neighbors(u) {
            if v == s && path.len() >= 3 && path[1] < u {
                out.push(path.clone());
            } else if v > s && !on[v] {
                on[v] = true;
                path.push(v);
                self.extend_cycles(s, path, on, out);
                path.pop();
                on[v] = false;
            }
        }
    }
}

/// Root-to-`u`, edge `uv`, `v`-to-root; `None` when the two tree paths meet below the root.
fn tree_cycle(parent: &[usize], root: usize, u: usize, v: usize) -> Option<Vec<usize>> {
    let climb = |mut x: usize| {
        let mut p = vec![x];
        while x != root {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pu = climb(u);
    let pv = climb(v);
    let mut cycle: Vec<usize> = pu.into_iter().rev().collect();
    cycle.extend(pv.into_iter().take_while(|&x| x != root));
    let mut sorted = cycle.clone();
    sorted.sort_unstable();
    sorted.dedup();
    (sorted.len() == cycle.len() && cycle.len() >= 3).then_some(cycle)
}

/// Classifies a cycle of length `n` with gain `gain`.
pub fn classify_gain<S: Scalar>(n: usize, gain: Quaternion<S>) -> CycleClass<S> {
    let (exact_zero, margin) = if n % 2 == 0 {
        let d = gain.sub_ref(&Quaternion::sign_power(n / 2));
        (d.is_zero(), d.norm_sq().to_f64().sqrt())
    } else {
        let re = Quaternion::<S>::sign_power((n - 1) / 2).mul_ref(&gain).re();
        (re.is_zero(), re.to_f64().abs())
    };
    let is_zero = if S::EXACT { exact_zero } else { margin < FLOAT_ZERO };
    let ty = match (n % 2 == 0, is_zero) {
        (true, true) => CycleType::Type1,
        (true, false) => CycleType::Type2,
        (false, false) => CycleType::Type3,
        (false, true) => CycleType::Type4,
    };
    let ambiguous = !S::EXACT && (FLOAT_ZERO..=FLOAT_NONZERO).contains(&margin);
    CycleClass { ty, gain, approximate: !S::EXACT, ambiguous, margin }
}
