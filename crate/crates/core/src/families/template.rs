//! Pair-type templates: a class is described by saying, for every unordered
//! pair, which representative pair it must be `≡` to. Representatives that
//! point at themselves are free and range over a domain; every other pair is
//! resolved through the chain of representatives, reversing as needed.

use std::collections::{BTreeMap, HashSet};

use crate::digraph::{Digraph, PairType};
use crate::error::{Error, Result};
use crate::iso::canonical_code;

use super::PairTypeAssignment;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Any,
    /// Everything but `Absent`.
    NonEmpty,
}

impl Domain {
    fn values(self) -> &'static [PairType] {
        match self {
            Domain::Any => &PairType::ALL,
            Domain::NonEmpty => &PairType::NON_EMPTY,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    Free(Domain),
    /// `(x, y) ≡ (u, v)` for the ordered pair `(u, v)`.
    Like(usize, usize),
    Fixed(PairType),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Resolved {
    Root { root: usize, reversed: bool },
    Fixed(PairType),
}

pub struct Template {
    n: usize,
    labels: Vec<String>,
    /// For `x < y`, at `x * n + y`.
    rules: Vec<Option<Rule>>,
    roots: Vec<(usize, usize, Domain)>,
    resolved: Vec<Option<Resolved>>,
}

impl Template {
    /// `rule(x, y)` is queried once for every `x < y`. A `Like` pointing at the
    /// pair itself is the same as `Free(Any)`.
    pub fn new(labels: Vec<String>, mut rule: impl FnMut(usize, usize) -> Rule) -> Result<Self> {
        let n = labels.len();
        let mut rules = vec![None; n * n];
        for x in 0..n {
            for y in x + 1..n {
                let r = match rule(x, y) {
                    Rule::Like(u, v) if (u, v) == (x, y) => Rule::Free(Domain::Any),
                    r => r,
                };
                rules[x * n + y] = Some(r);
            }
        }
        let mut t = Template {
            n,
            labels,
            rules,
            roots: Vec::new(),
            resolved: vec![None; n * n],
        };
        for x in 0..n {
            for y in x + 1..n {
                if let Some(Rule::Free(d)) = t.rules[x * n + y] {
                    t.roots.push((x, y, d));
                }
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                let r = t.resolve(x, y)?;
                t.resolved[x * n + y] = Some(r);
            }
        }
        Ok(t)
    }

    fn resolve(&self, x: usize, y: usize) -> Result<Resolved> {
        let (mut a, mut b, mut reversed) = (x, y, false);
        for _ in 0..=self.n * self.n {
            if a == b || a >= self.n || b >= self.n {
                return Err(Error::Precondition(format!(
                    "template rule for ({x}, {y}) leaves the vertex range"
                )));
            }
            if a > b {
                std::mem::swap(&mut a, &mut b);
                reversed = !reversed;
            }
            match self.rules[a * self.n + b].unwrap() {
                Rule::Free(_) => {
                    let root = self.roots.iter().position(|&(u, v, _)| (u, v) == (a, b)).unwrap();
                    return Ok(Resolved::Root { root, reversed });
                }
                Rule::Fixed(t) => {
                    return Ok(Resolved::Fixed(if reversed { t.reverse() } else { t }));
                }
                Rule::Like(u, v) => {
                    a = u;
                    b = v;
                }
            }
        }
        Err(Error::Precondition(format!("template rule for ({x}, {y}) is cyclic")))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    pub fn build(&self, values: &[PairType]) -> Digraph {
        let n = self.n;
        Digraph::from_pair_types(n, |x, y| match self.resolved[x * n + y].unwrap() {
            Resolved::Fixed(t) => t,
            Resolved::Root { root, reversed } => {
                if reversed {
                    values[root].reverse()
                } else {
                    values[root]
                }
            }
        })
        .expect("template order is within bounds")
    }

    pub fn assignment(&self, values: &[PairType]) -> PairTypeAssignment {
        let map: BTreeMap<String, PairType> = self
            .roots
            .iter()
            .zip(values)
            .map(|(&(u, v, _), &t)| (format!("({},{})", self.labels[u], self.labels[v]), t))
            .collect();
        PairTypeAssignment(map)
    }

    /// Every assignment of the free pairs whose graph passes `keep`, one per
    /// isomorphism class, in enumeration order.
    pub fn enumerate(&self, keep: impl Fn(&Digraph) -> bool) -> Vec<(Digraph, PairTypeAssignment)> {
        let domains: Vec<&[PairType]> = self.roots.iter().map(|&(_, _, d)| d.values()).collect();
        let mut idx = vec![0usize; domains.len()];
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        loop {
            let values: Vec<PairType> = idx.iter().zip(&domains).map(|(&i, d)| d[i]).collect();
            let g = self.build(&values);
            if keep(&g) && seen.insert(canonical_code(&g).expect("family orders stay below the canonical bound")) {
                out.push((g, self.assignment(&values)));
            }
            // odometer, last root fastest
            let mut i = idx.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < domains[i].len() {
                    break;
                }
                idx[i] = 0;
            }
        }
    }
}

/// Shorthand for pair-type tests inside class filters.
pub(crate) struct Pt<'a>(pub &'a Digraph);

impl Pt<'_> {
    pub fn t(&self, p: (usize, usize)) -> PairType {
        self.0.pair_type_unchecked(p.0, p.1)
    }

    pub fn eq(&self, p: (usize, usize), q: (usize, usize)) -> bool {
        self.t(p) == self.t(q)
    }

    pub fn sym(&self, p: (usize, usize)) -> bool {
        self.t(p).is_self_symmetric()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn chains_resolve_with_reversal() {
        // (0,2) ≡ (1,0) ≡ reverse of the root (0,1); (1,2) fixed
        let t = Template::new(labels(3), |x, y| match (x, y) {
            (0, 1) => Rule::Free(Domain::NonEmpty),
            (0, 2) => Rule::Like(1, 0),
            _ => Rule::Fixed(PairType::Absent),
        })
        .unwrap();
        assert_eq!(t.root_count(), 1);
        let g = t.build(&[PairType::Forward]);
        assert_eq!(g.pair_type(0, 2).unwrap(), PairType::Backward);
        assert_eq!(g.pair_type(1, 2).unwrap(), PairType::Absent);
        assert_eq!(t.assignment(&[PairType::Forward]).0["(0,1)"], PairType::Forward);
    }

    #[test]
    fn cyclic_rules_rejected() {
        let t = Template::new(labels(3), |x, y| match (x, y) {
            (0, 1) => Rule::Like(0, 2),
            (0, 2) => Rule::Like(1, 0),
            _ => Rule::Fixed(PairType::Absent),
        });
        assert!(t.is_err());
    }

    #[test]
    fn enumeration_dedups_isomorphic_outputs() {
        // all three pairs free: the 64 labelled graphs of order 3 fall into 16 classes
        let t = Template::new(labels(3), |_, _| Rule::Free(Domain::Any)).unwrap();
        assert_eq!(t.enumerate(|_| true).len(), 16);
    }
}
