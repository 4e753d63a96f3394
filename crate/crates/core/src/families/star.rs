//! Starred-tree classes. Vertices: the source `0`, then the branches in input
//! order, `i_l` (the `l`-th vertex of branch `i`, `l ≥ 1`) at consecutive
//! indices; `i_0` is the source for every branch.

use crate::criticality::ShapeKind;
use crate::digraph::PairType;
use crate::error::{precondition, Result};

use super::template::{Domain, Rule, Template};
use super::{Claims, FamilyId, FamilyMember, Params};

struct Layout {
    offsets: Vec<usize>,
    lengths: Vec<usize>,
    order: usize,
}

impl Layout {
    fn new(lengths: &[usize]) -> Self {
        let mut offsets = Vec::with_capacity(lengths.len());
        let mut next = 0;
        for &p in lengths {
            offsets.push(next);
            next += p;
        }
        Layout {
            offsets,
            lengths: lengths.to_vec(),
            order: next + 1,
        }
    }

    fn vertex(&self, branch: usize, l: usize) -> usize {
        if l == 0 {
            0
        } else {
            self.offsets[branch] + l
        }
    }

    /// `(branch, l)` for a non-source vertex.
    fn locate(&self, v: usize) -> Option<(usize, usize)> {
        if v == 0 || v >= self.order {
            return None;
        }
        let b = self.offsets.iter().rposition(|&o| o < v).unwrap();
        Some((b, v - self.offsets[b]))
    }

    /// Index of `v` along a branch; the source sits at index 0 of every branch.
    fn index(&self, v: usize) -> usize {
        self.locate(v).map_or(0, |(_, l)| l)
    }

    fn on_branch(&self, v: usize, b: usize) -> bool {
        v == 0 || self.locate(v).is_some_and(|(c, _)| c == b)
    }

    fn labels(&self, gamma: bool) -> Vec<String> {
        let mut out = vec!["0".to_string()];
        for (b, &p) in self.lengths.iter().enumerate() {
            out.extend((1..=p).map(|l| format!("{}_{}", b + 1, l)));
        }
        if gamma {
            out.push("γ".to_string());
        }
        out
    }
}

fn check_profile(branches: &[usize], odd_first: bool) -> Result<()> {
    if branches.len() < 3 {
        return precondition(format!("a starred tree needs at least 3 branches, got {branches:?}"));
    }
    for (i, &p) in branches.iter().enumerate() {
        let ok = if i == 0 && odd_first {
            p >= 3 && p % 2 == 1
        } else {
            p >= 2 && p % 2 == 0
        };
        if !ok {
            return precondition(format!("malformed branch profile {branches:?}"));
        }
    }
    Ok(())
}

fn sorted(branches: &[usize]) -> Vec<usize> {
    let mut v = branches.to_vec();
    v.sort_unstable();
    v
}

/// The class on `S(2n₁+1, 2n₂, …)`; the odd branch comes first.
pub fn enum_hstar_odd(branches: &[usize]) -> Result<Vec<FamilyMember>> {
    check_profile(branches, true)?;
    let lay = Layout::new(branches);
    let first = (lay.vertex(0, 1), lay.vertex(0, 3));
    let seed0 = (0, lay.vertex(0, 1));
    let seeds: Vec<(usize, usize)> = (1..branches.len())
        .map(|b| (lay.vertex(b, 1), lay.vertex(b, 2)))
        .collect();

    // representative of the ordered pair (x, y), if it belongs to one of the rule sets
    let rep = |x: usize, y: usize| -> Option<(usize, usize)> {
        let (ix, iy) = (lay.index(x), lay.index(y));
        let y_odd_first = y != 0 && lay.on_branch(y, 0) && iy % 2 == 1;
        // A₁: odd to later odd on the odd branch
        if x != 0 && lay.on_branch(x, 0) && ix % 2 == 1 && y_odd_first && ix < iy {
            return Some(first);
        }
        // A_i: odd to later even on an even branch
        if let (Some((bx, _)), Some((by, _))) = (lay.locate(x), lay.locate(y)) {
            if bx == by && bx > 0 && ix % 2 == 1 && iy % 2 == 0 && ix < iy {
                return Some(seeds[bx - 1]);
            }
        }
        if y_odd_first && ix % 2 == 0 {
            // E: even vertex of another branch (or the source)
            if x == 0 || !lay.on_branch(x, 0) {
                return Some(seed0);
            }
            // F: earlier even vertex of the odd branch
            if ix < iy {
                return Some(seed0);
            }
        }
        None
    };
    let t = Template::new(lay.labels(false), |x, y| {
        if (x, y) == seed0 || seeds.contains(&(x, y)) {
            return Rule::Free(Domain::NonEmpty);
        }
        if (x, y) == first {
            return Rule::Free(Domain::Any);
        }
        match (rep(x, y), rep(y, x)) {
            (Some((u, v)), _) => Rule::Like(u, v),
            (None, Some((u, v))) => Rule::Like(v, u),
            (None, None) => Rule::Fixed(PairType::Absent),
        }
    })?;
    Ok(t.enumerate(|_| true)
        .into_iter()
        .map(|(graph, assignment)| {
            FamilyMember::new(
                graph,
                FamilyId::HStarOdd,
                Params::HStarOdd {
                    branches: branches.to_vec(),
                },
                assignment,
                Claims {
                    noncritical: Some(0),
                    shape: Some(ShapeKind::StarTree {
                        source: 0,
                        branches: sorted(branches),
                    }),
                },
            )
        })
        .collect())
}

/// The class on `S(2n₁, …, 2n_k)`, optionally with the extra vertex `γ` (last index).
pub fn enum_hstar_even(branches: &[usize], with_gamma: bool) -> Result<Vec<FamilyMember>> {
    check_profile(branches, false)?;
    let lay = Layout::new(branches);
    let gamma = lay.order;
    let seeds: Vec<(usize, usize)> = (0..branches.len())
        .map(|b| (lay.vertex(b, 1), lay.vertex(b, 2)))
        .collect();
    let t = Template::new(lay.labels(with_gamma), |x, y| {
        if y == gamma {
            return if x == 0 {
                Rule::Free(Domain::NonEmpty)
            } else if lay.index(x).is_multiple_of(2) {
                Rule::Like(0, gamma)
            } else {
                Rule::Fixed(PairType::Absent)
            };
        }
        if seeds.contains(&(x, y)) {
            return Rule::Free(Domain::NonEmpty);
        }
        let (ix, iy) = (lay.index(x), lay.index(y));
        if ix % 2 == 0 && iy % 2 == 0 {
            return Rule::Fixed(if with_gamma { PairType::Absent } else { PairType::Mutual });
        }
        if let (Some((bx, _)), Some((by, _))) = (lay.locate(x), lay.locate(y)) {
            if bx == by {
                // x < y on one branch means ix < iy
                if ix % 2 == 1 && iy % 2 == 0 {
                    return Rule::Like(seeds[bx].0, seeds[bx].1);
                }
            }
        }
        Rule::Fixed(PairType::Absent)
    })?;
    let shape_branches = sorted(branches);
    Ok(t.enumerate(|_| true)
        .into_iter()
        .map(|(graph, assignment)| {
            FamilyMember::new(
                graph,
                FamilyId::HStarEven,
                Params::HStarEven {
                    branches: branches.to_vec(),
                    gamma: with_gamma,
                },
                assignment,
                Claims {
                    noncritical: Some(0),
                    shape: Some(ShapeKind::StarTree {
                        source: 0,
                        branches: shape_branches.clone(),
                    }),
                },
            )
        })
        .collect())
}
