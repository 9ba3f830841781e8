//! The `#qgg v1` text format.
//!
//! ```text
//! #qgg v1
//! n 5
//! e 1 4 0 1 0 0      # v1-v4 with gain i on 1->4
//! ```

use std::fmt::Write as _;

use super::GainGraph;
use crate::error::{Error, Result};
use crate::quat::{Quaternion, Scalar};

pub const HEADER: &str = "#qgg v1";

#[derive(Clone, Copy, Debug, Default)]
pub struct ParseOptions {
    /// Float tower only: rescale non-unit gains instead of rejecting them.
    pub normalize: bool,
}

#[derive(Clone, Debug)]
pub struct Parsed<S: Scalar> {
    pub graph: GainGraph<S>,
    pub warnings: Vec<String>,
}

pub fn parse_qgg<S: Scalar>(text: &str) -> Result<GainGraph<S>> {
    parse_qgg_with(text, ParseOptions::default()).map(|p| p.graph)
}

pub fn parse_qgg_with<S: Scalar>(text: &str, opts: ParseOptions) -> Result<Parsed<S>> {
    let err = |line: usize, msg: String| Error::Parse { line, msg };
    let mut graph: Option<GainGraph<S>> = None;
    let mut header = false;
    let mut warnings = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if !header {
            if trimmed.is_empty() {
                continue;
            }
            if trimmed.split_whitespace().collect::<Vec<_>>() != ["#qgg", "v1"] {
                return Err(err(line, format!("expected header {HEADER:?}")));
            }
            header = true;
            continue;
        }
        let body = trimmed.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        match toks.first().copied() {
            None => {}
            Some("n") => {
                if graph.is_some() {
                    return Err(err(line, "repeated vertex count".into()));
                }
                let [_, count] = toks[..] else {
                    return Err(err(line, "expected `n <count>`".into()));
                };
                let n: usize = count.parse().map_err(|_| err(line, format!("bad vertex count {count:?}")))?;
                graph = Some(GainGraph::new(n));
            }
            Some("e") => {
                let g = graph.as_mut().ok_or_else(|| err(line, "edge before vertex count".into()))?;
                if toks.len() != 7 {
                    return Err(err(line, "expected `e <u> <v> <x0> <x1> <x2> <x3>`".into()));
                }
                let vertex = |t: &str| -> Result<usize> {
                    match t.parse::<usize>() {
                        Ok(v) if v >= 1 && v <= g.order() => Ok(v - 1),
                        _ => Err(err(line, format!("vertex {t:?} not in 1..={}", g.order()))),
                    }
                };
                let (u, v) = (vertex(toks[1])?, vertex(toks[2])?);
                let mut q = Quaternion::<S>::parse_tokens(&toks[3..])
                    .map_err(|e| err(line, e.to_string()))?;
                if !q.is_unit() && opts.normalize && !S::EXACT && !q.is_zero() {
                    let norm = q.norm_sq().to_f64().sqrt();
                    q = q.map(|c| S::from_f64(c.to_f64() / norm));
                    warnings.push(format!("line {line}: gain on {}-{} normalized from modulus {norm}", u + 1, v + 1));
                }
                g.add_edge(u, v, q).map_err(|e| match e {
                    Error::NonUnitGain { .. } => Error::NonUnitGain { u: u + 1, v: v + 1 },
                    Error::DuplicateEdge(..) => err(line, format!("duplicate edge {}-{}", u + 1, v + 1)),
                    Error::Loop(_) => err(line, format!("loop at vertex {}", u + 1)),
                    other => err(line, other.to_string()),
                })?;
            }
            Some(other) => return Err(err(line, format!("unknown directive {other:?}"))),
        }
    }
    if !header {
        return Err(err(0, format!("missing header {HEADER:?}")));
    }
    let graph = graph.ok_or_else(|| err(0, "missing vertex count".into()))?;
    Ok(Parsed { graph, warnings })
}

impl<S: Scalar> GainGraph<S> {
    /// Emits `#qgg v1`; edges sorted, stored as `min -> max`, 1-indexed.
    pub fn to_qgg(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{HEADER}").unwrap();
        writeln!(s, "n {}", self.order()).unwrap();
        for (u, v, q) in self.edges() {
            writeln!(s, "e {} {} {}", u + 1, v + 1, q.to_tokens()).unwrap();
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Rational;

    type Q = Quaternion<Rational>;

    #[test]
    fn round_trip_normalizes_orientation() {
        let text = "#qgg v1\nn 3\n# comment\ne 2 1 0 1 0 0   # reversed\ne 2 3 1/2 1/2 1/2 -1/2\n";
        let g: GainGraph<Rational> = parse_qgg(text).unwrap();
        assert_eq!(g.gain(1, 0), Some(&Q::i()));
        let out = g.to_qgg();
        assert_eq!(out, "#qgg v1\nn 3\ne 1 2 0 -1 0 0\ne 2 3 1/2 1/2 1/2 -1/2\n");
        assert_eq!(parse_qgg::<Rational>(&out).unwrap(), g);
    }

    #[test]
    fn parse_errors() {
        let bad = [
            "n 2\ne 1 2 1 0 0 0\n",
            "#qgg v1\ne 1 2 1 0 0 0\n",
            "#qgg v1\nn 2\ne 1 2 1 0 0 0\ne 2 1 1 0 0 0\n",
            "#qgg v1\nn 2\ne 1 3 1 0 0 0\n",
            "#qgg v1\nn 2\ne 1 1 1 0 0 0\n",
            "#qgg v1\nn 2\ne 1 2 1 0 0\n",
            "#qgg v1\nn 2\nx 1\n",
            "#qgg v1\nn 2\ne 1 2 0.5 0 0 0\n",
        ];
        for text in bad {
            assert!(matches!(parse_qgg::<Rational>(text), Err(Error::Parse { .. })), "{text}");
        }
        assert_eq!(
            parse_qgg::<Rational>("#qgg v1\nn 2\ne 1 2 1 1 0 0\n").unwrap_err(),
            Error::NonUnitGain { u: 1, v: 2 }
        );
    }

    #[test]
    fn float_normalize_flag() {
        let text = "#qgg v1\nn 2\ne 1 2 2 0 0 0\n";
        assert!(parse_qgg::<f64>(text).is_err());
        let p = parse_qgg_with::<f64>(text, ParseOptions { normalize: true }).unwrap();
        assert_eq!(p.graph.gain(0, 1), Some(&Quaternion::new(1.0, 0.0, 0.0, 0.0)));
        assert_eq!(p.warnings.len(), 1);
        let p = parse_qgg_with::<Rational>("#qgg v1\nn 2\ne 1 2 2 0 0 0\n", ParseOptions { normalize: true });
        assert!(p.is_err());
    }
}
