//! Criticality verdicts and family recognition for (−1)-critical graphs.
//!
//! Recognition never re-derives a class from the graph. The shape of `I′(G)`
//! and the position of the non-critical vertex select a few class
//! parameterisations; their members are generated (and cached) and compared
//! with the input by canonical code, under complement and dual as well.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use serde::Serialize;

use crate::criticality::{
    criticality_within, indecomposability_graph_within, support_shape, CriticalityReport, Shape, ShapeKind, SymGraph,
};
use crate::digraph::{Digraph, Permutation};
use crate::error::Result;
use crate::families::{
    enum_class_f, enum_class_g, enum_class_gdprime, enum_class_gprime, enum_hstar_even, enum_hstar_odd, member_h,
    member_r, FamilyId, FamilyMember, Params, Transform,
};
use crate::iso::{canonical_code, find_isomorphism, CANONICAL_BOUND};
use crate::modular::is_indecomposable;

/// Smallest order covered by the family list.
pub const THEOREM_MIN_ORDER: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyMatch {
    pub family: FamilyId,
    pub params: Params,
    /// How the matched class member was transformed before comparison.
    pub transform: Transform,
    /// The transformed class member the input was matched to.
    pub target: Digraph,
    /// Maps the input onto `target`.
    pub witness: Permutation,
    pub shape: ShapeKind,
    pub noncritical: usize,
    /// `Some(1..=3)` for the internal-vertex path classes.
    pub omega: Option<u8>,
    /// Every candidate that matched, first one reported above.
    pub hits: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Decomposable,
    CriticalGraph,
    MinusKCritical {
        k: usize,
    },
    MinusOneCritical(Box<FamilyMatch>),
    /// Defect 1 below the order the family list covers.
    OutOfScopeOrder {
        noncritical: usize,
    },
    /// Defect 1, order at least 7, and no family matched.
    TheoremViolation {
        reason: String,
    },
}

impl Verdict {
    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::Decomposable => "decomposable",
            Verdict::CriticalGraph => "critical",
            Verdict::MinusKCritical { .. } => "minus_k_critical",
            Verdict::MinusOneCritical(_) => "minus_one_critical",
            Verdict::OutOfScopeOrder { .. } => "out_of_scope_order",
            Verdict::TheoremViolation { .. } => "theorem_violation",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub order: usize,
    pub verdict: Verdict,
    pub criticality: Option<CriticalityReport>,
    /// Shape of `I′(G)` (or `I(G)`), computed for defect-1 graphs of order ≥ 4.
    pub shape: Option<Shape>,
}

impl Classification {
    pub fn defect(&self) -> Option<usize> {
        self.criticality.map(|r| r.defect)
    }

    pub fn family_match(&self) -> Option<&FamilyMatch> {
        match &self.verdict {
            Verdict::MinusOneCritical(m) => Some(m),
            _ => None,
        }
    }
}

type Batch = Arc<Vec<(Vec<u8>, FamilyMember)>>;

/// Classifier with a cache of generated class members keyed by parameters.
/// Shareable across threads.
#[derive(Default)]
pub struct Classifier {
    cache: RwLock<HashMap<Params, Batch>>,
}

impl Classifier {
    pub fn new() -> Self {
        Self::default()
    }

    fn batch(&self, params: &Params) -> Batch {
        if let Some(b) = self.cache.read().unwrap().get(params) {
            return b.clone();
        }
        let members: Vec<FamilyMember> = match params {
            Params::R { n } => member_r(*n).into_iter().collect(),
            Params::H { p } => member_h(*p).into_iter().collect(),
            Params::F { m, ext } => enum_class_f(*m, *ext).unwrap_or_default(),
            Params::G { n, k, alpha } => enum_class_g(*n, *k, *alpha).unwrap_or_default(),
            Params::Gprime { n, k } => enum_class_gprime(*n, *k).unwrap_or_default(),
            Params::Gdprime { n, k, ext } => enum_class_gdprime(*n, *k, *ext).unwrap_or_default(),
            Params::HStarOdd { branches } => enum_hstar_odd(branches).unwrap_or_default(),
            Params::HStarEven { branches, gamma } => enum_hstar_even(branches, *gamma).unwrap_or_default(),
            Params::Tournament { .. } | Params::Q5 => Vec::new(),
        };
        let batch: Batch = Arc::new(
            members
                .into_iter()
                .map(|m| (canonical_code(&m.graph).expect("family orders are within bound"), m))
                .collect(),
        );
        self.cache
            .write()
            .unwrap()
            .entry(params.clone())
            .or_insert(batch)
            .clone()
    }

    pub fn classify(&self, g: &Digraph) -> Classification {
        let n = g.order();
        if !is_indecomposable(g) {
            return Classification {
                order: n,
                verdict: Verdict::Decomposable,
                criticality: None,
                shape: None,
            };
        }
        let s = g.vertices();
        let report = criticality_within(g, s);
        let mut out = Classification {
            order: n,
            verdict: Verdict::CriticalGraph,
            criticality: Some(report),
            shape: None,
        };
        match report.defect {
            0 => {}
            1 => {
                let a = report.noncritical.first().unwrap();
                let h = (n >= 4).then(|| indecomposability_graph_within(g, s));
                if let Some(h) = &h {
                    out.shape = Some(support_shape(h).1);
                }
                out.verdict = if n < THEOREM_MIN_ORDER {
                    Verdict::OutOfScopeOrder { noncritical: a }
                } else if n > CANONICAL_BOUND {
                    Verdict::TheoremViolation {
                        reason: format!("order {n} exceeds the canonical-code bound"),
                    }
                } else {
                    let h = h.unwrap();
                    match self.match_family(g, &h, a) {
                        Some(m) => Verdict::MinusOneCritical(Box::new(m)),
                        None => Verdict::TheoremViolation {
                            reason: format!(
                                "no family matches (I′ shape {}, non-critical {a})",
                                out.shape.as_ref().unwrap().kind
                            ),
                        },
                    }
                };
            }
            k => out.verdict = Verdict::MinusKCritical { k },
        }
        out
    }

    /// Candidate class parameterisations for a (−1)-critical graph of order
    /// `n`, non-critical at `a`, with indecomposability graph `h`.
    pub fn candidates(&self, n: usize, h: &SymGraph, a: usize) -> Vec<Params> {
        let (sup, shape) = support_shape(h);
        if sup.multiplicity != 1 {
            return Vec::new();
        }
        if sup.isolated.contains(a) {
            return if n % 2 == 1 && n >= 5 {
                vec![Params::R { n: n / 2 }]
            } else {
                Vec::new()
            };
        }
        match &shape.kind {
            ShapeKind::Cycle { vertices } if *vertices == n && n % 2 == 1 => vec![Params::H { p: n / 2 }],
            ShapeKind::Path { edges } => {
                let m = *edges;
                let Some(pos) = shape.vertices.iter().position(|&v| v == a) else {
                    return Vec::new();
                };
                let mut out = Vec::new();
                if pos == 0 || pos == m {
                    if let Some(ext) = n.checked_sub(m + 1).filter(|&e| e <= 2) {
                        out.push(Params::F { m, ext });
                    }
                    return out;
                }
                for p in [pos, m - pos] {
                    if m % 2 == 1 {
                        // I′ = P_{2n+1}, critical at an odd position
                        let half = (m - 1) / 2;
                        if p % 2 == 1 {
                            if let Some(extra) = n.checked_sub(m + 1).filter(|&e| e <= 1) {
                                out.push(Params::G {
                                    n: half,
                                    k: (p - 1) / 2,
                                    alpha: extra == 1,
                                });
                            }
                        }
                    } else if p % 2 == 1 {
                        if n == m + 1 {
                            out.push(Params::Gprime {
                                n: m / 2,
                                k: (p - 1) / 2,
                            });
                        }
                    } else if let Some(ext) = n.checked_sub(m + 1).filter(|&e| e <= 2) {
                        out.push(Params::Gdprime {
                            n: m / 2,
                            k: p / 2,
                            ext,
                        });
                    }
                }
                out.dedup();
                out
            }
            ShapeKind::StarTree { source, branches } if *source == a => {
                let sum: usize = branches.iter().sum();
                let odd: Vec<usize> = branches.iter().copied().filter(|b| b % 2 == 1).collect();
                let mut evens: Vec<usize> = branches.iter().copied().filter(|b| b % 2 == 0).collect();
                evens.sort_unstable();
                match odd.as_slice() {
                    [o] if n == sum + 1 => {
                        let mut p = vec![*o];
                        p.extend(evens);
                        vec![Params::HStarOdd { branches: p }]
                    }
                    [] if n == sum + 1 || n == sum + 2 => vec![Params::HStarEven {
                        branches: evens,
                        gamma: n == sum + 2,
                    }],
                    _ => Vec::new(),
                }
            }
            _ => Vec::new(),
        }
    }

    /// Finds the family of a (−1)-critical graph given its indecomposability
    /// graph and non-critical vertex.
    pub fn match_family(&self, g: &Digraph, h: &SymGraph, a: usize) -> Option<FamilyMatch> {
        let cands = self.candidates(g.order(), h, a);
        if cands.is_empty() {
            return None;
        }
        // G ≅ t(member) iff t(G) ≅ member, every transform being an involution
        let codes: Vec<(Transform, Vec<u8>)> = Transform::ALL
            .iter()
            .map(|&t| (t, canonical_code(&t.apply(g)).expect("order checked by caller")))
            .collect();
        let mut first: Option<(FamilyMember, Transform)> = None;
        let mut hits = Vec::new();
        for p in &cands {
            let batch = self.batch(p);
            for (code, m) in batch.iter() {
                for (t, c) in &codes {
                    if c == code {
                        let label = m.transformed(*t).label();
                        if !hits.contains(&label) {
                            hits.push(label);
                        }
                        if first.is_none() {
                            first = Some((m.clone(), *t));
                        }
                    }
                }
            }
        }
        let (member, t) = first?;
        let target = member.transformed(t);
        let witness = find_isomorphism(g, &target.graph)?;
        let (_, shape) = support_shape(h);
        Some(FamilyMatch {
            family: member.family,
            params: member.params,
            transform: target.transform,
            target: target.graph,
            witness,
            shape: shape.kind,
            noncritical: a,
            omega: member.family.omega(),
            hits,
        })
    }
}

/// One-shot classification with a fresh cache.
pub fn classify(g: &Digraph) -> Classification {
    Classifier::new().classify(g)
}

/// Family of a (−1)-critical graph of order at least 7, non-critical at `a`.
pub fn match_family(g: &Digraph, a: usize) -> Result<Option<FamilyMatch>> {
    if g.order() < THEOREM_MIN_ORDER || !is_indecomposable(g) {
        return crate::error::precondition("needs an indecomposable graph of order ≥ 7");
    }
    let report = criticality_within(g, g.vertices());
    if report.noncritical.to_vec() != vec![a] {
        return crate::error::precondition(format!("graph is not (−1)-critical at {a}"));
    }
    let h = indecomposability_graph_within(g, g.vertices());
    Ok(Classifier::new().match_family(g, &h, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_q5, gen_r, gen_v};

    #[test]
    fn basic_verdicts() {
        assert_eq!(classify(&Digraph::chain(6).unwrap()).verdict, Verdict::Decomposable);
        assert_eq!(classify(&gen_v(2).unwrap()).verdict, Verdict::CriticalGraph);
        assert_eq!(classify(&gen_q5()).verdict, Verdict::OutOfScopeOrder { noncritical: 2 });
    }

    #[test]
    fn r7_is_recognised() {
        let c = classify(&gen_r(3).unwrap());
        let m = c.family_match().expect("R_7 matches");
        assert_eq!(m.family, FamilyId::R);
        assert_eq!(m.noncritical, 6);
    }
}
