//! Generators for the named graphs and for every parametric class of
//! (−1)-critical graphs, each member tagged with its claimed non-critical
//! vertex and claimed `I′` shape.

mod classes;
mod named;
mod star;
pub mod template;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::criticality::{criticality_within, indecomposability_graph_within, support_shape, ShapeKind};
use crate::digraph::{Digraph, PairType};
use crate::error::{precondition, Error, Result};
use crate::iso::{canonical_code, CANONICAL_BOUND};
use crate::modular::is_indecomposable;

pub use classes::{enum_class_f, enum_class_g, enum_class_gdprime, enum_class_gprime};
pub use named::{gen_h, gen_q5, gen_r, gen_t, gen_u, gen_v};
pub use star::{enum_hstar_even, enum_hstar_odd};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyId {
    T,
    U,
    V,
    R,
    H,
    Q5,
    F,
    G,
    Gprime,
    Gdprime,
    HStarOdd,
    HStarEven,
}

impl FamilyId {
    pub fn name(self) -> &'static str {
        match self {
            FamilyId::T => "T",
            FamilyId::U => "U",
            FamilyId::V => "V",
            FamilyId::R => "R",
            FamilyId::H => "H",
            FamilyId::Q5 => "Q5",
            FamilyId::F => "F",
            FamilyId::G => "G",
            FamilyId::Gprime => "G'",
            FamilyId::Gdprime => "G''",
            FamilyId::HStarOdd => "H-star-odd",
            FamilyId::HStarEven => "H-star-even",
        }
    }

    /// Which of the three internal-vertex path subcases a path class covers.
    pub fn omega(self) -> Option<u8> {
        match self {
            FamilyId::G => Some(1),
            FamilyId::Gprime => Some(2),
            FamilyId::Gdprime => Some(3),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How a member was obtained from its class representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Transform {
    Identity,
    Complement,
    Dual,
    DualComplement,
}

impl Transform {
    pub const ALL: [Transform; 4] = [
        Transform::Identity,
        Transform::Complement,
        Transform::Dual,
        Transform::DualComplement,
    ];

    pub fn apply(self, g: &Digraph) -> Digraph {
        match self {
            Transform::Identity => *g,
            Transform::Complement => g.complement(),
            Transform::Dual => g.dual(),
            Transform::DualComplement => g.dual().complement(),
        }
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Transform::Identity => "identity",
            Transform::Complement => "complement",
            Transform::Dual => "dual",
            Transform::DualComplement => "dual complement",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum Params {
    Tournament { n: usize },
    R { n: usize },
    H { p: usize },
    Q5,
    F { m: usize, ext: usize },
    G { n: usize, k: usize, alpha: bool },
    Gprime { n: usize, k: usize },
    Gdprime { n: usize, k: usize, ext: usize },
    HStarOdd { branches: Vec<usize> },
    HStarEven { branches: Vec<usize>, gamma: bool },
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |b: &[usize]| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Params::Tournament { n } => write!(f, "tournament(n={n})"),
            Params::R { n } => write!(f, "R(n={n})"),
            Params::H { p } => write!(f, "H(p={p})"),
            Params::Q5 => f.write_str("Q5"),
            Params::F { m, ext } => write!(f, "F(m={m}, ext={ext})"),
            Params::G { n, k, alpha } => write!(f, "G(n={n}, k={k}{})", if *alpha { ", α" } else { "" }),
            Params::Gprime { n, k } => write!(f, "G'(n={n}, k={k})"),
            Params::Gdprime { n, k, ext } => write!(f, "G''(n={n}, k={k}, ext={ext})"),
            Params::HStarOdd { branches } => write!(f, "H-star-odd[{}]", list(branches)),
            Params::HStarEven { branches, gamma } => {
                write!(f, "H-star-even[{}]{}", list(branches), if *gamma { "+γ" } else { "" })
            }
        }
    }
}

/// Pair types chosen for the free representative pairs of a class, keyed by
/// the pair written with vertex labels, e.g. `(0,α)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PairTypeAssignment(pub BTreeMap<String, PairType>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claims {
    pub noncritical: Option<usize>,
    pub shape: Option<ShapeKind>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    pub graph: Digraph,
    pub family: FamilyId,
    pub params: Params,
    pub transform: Transform,
    pub assignment: PairTypeAssignment,
    pub claims: Claims,
}

impl FamilyMember {
    pub fn new(
        graph: Digraph,
        family: FamilyId,
        params: Params,
        assignment: PairTypeAssignment,
        claims: Claims,
    ) -> Self {
        FamilyMember {
            graph,
            family,
            params,
            transform: Transform::Identity,
            assignment,
            claims,
        }
    }

    /// The same member pushed through complement and/or dual; claims carry over
    /// unchanged since both operations preserve critical vertices and `I(G)`.
    pub fn transformed(&self, t: Transform) -> Self {
        let base = match (self.transform, t) {
            (a, Transform::Identity) => a,
            (Transform::Identity, b) => b,
            (a, b) if a == b => Transform::Identity,
            (Transform::DualComplement, b) | (b, Transform::DualComplement) => {
                if b == Transform::Dual {
                    Transform::Complement
                } else {
                    Transform::Dual
                }
            }
            _ => Transform::DualComplement,
        };
        FamilyMember {
            graph: t.apply(&self.graph),
            transform: base,
            ..self.clone()
        }
    }

    /// Short description such as `F F { m: 6, ext: 1 } [Complement]`.
    /// e.g. `F(m=6, ext=1) complement`.
    pub fn label(&self) -> String {
        let p = match self.params {
            Params::Tournament { n } => format!("{}(n={n})", self.family),
            ref p => p.to_string(),
        };
        match self.transform {
            Transform::Identity => p,
            t => format!("{p} {t}"),
        }
    }

    /// Re-checks the claims: indecomposable; when a non-critical vertex is
    /// claimed, it is the only one (once the order is at least 5); when the
    /// order is at least 7 the shape of `I′` matches.
    pub fn verify(&self) -> std::result::Result<(), String> {
        let g = &self.graph;
        if !is_indecomposable(g) {
            return Err("decomposable".into());
        }
        let s = g.vertices();
        let report = criticality_within(g, s);
        match self.claims.noncritical {
            None if report.defect != 0 => {
                return Err(format!(
                    "expected a critical graph, non-critical {}",
                    report.noncritical
                ));
            }
            Some(a) if g.order() >= 5 && report.noncritical.to_vec() != vec![a] => {
                return Err(format!("expected non-critical {{{a}}}, got {}", report.noncritical));
            }
            _ => {}
        }
        if let (Some(want), true) = (&self.claims.shape, g.order() >= 7) {
            let h = indecomposability_graph_within(g, s);
            let (_, shape) = support_shape(&h);
            if &shape.kind != want {
                return Err(format!("expected I′ shape {want}, got {}", shape.kind));
            }
        }
        Ok(())
    }

    pub fn checked(self) -> Result<Self> {
        match self.verify() {
            Ok(()) => Ok(self),
            Err(why) => Err(Error::TheoremViolation(format!("{}: {why}", self.label()))),
        }
    }
}

fn named(graph: Digraph, family: FamilyId, params: Params, claims: Claims) -> FamilyMember {
    FamilyMember::new(graph, family, params, PairTypeAssignment::default(), claims)
}

pub fn member_r(n: usize) -> Result<FamilyMember> {
    Ok(named(
        gen_r(n)?,
        FamilyId::R,
        Params::R { n },
        Claims {
            noncritical: Some(2 * n),
            shape: Some(ShapeKind::Path { edges: 2 * n - 1 }),
        },
    ))
}

pub fn member_h(p: usize) -> Result<FamilyMember> {
    Ok(named(
        gen_h(p)?,
        FamilyId::H,
        Params::H { p },
        Claims {
            noncritical: Some(0),
            shape: Some(ShapeKind::Cycle { vertices: 2 * p + 1 }),
        },
    ))
}

pub fn member_q5() -> FamilyMember {
    named(
        gen_q5(),
        FamilyId::Q5,
        Params::Q5,
        Claims {
            noncritical: Some(2),
            shape: Some(ShapeKind::Edgeless),
        },
    )
}

pub fn member_tournament(family: FamilyId, n: usize) -> Result<FamilyMember> {
    let g = match family {
        FamilyId::T => gen_t(n)?,
        FamilyId::U => gen_u(n)?,
        FamilyId::V => gen_v(n)?,
        other => return precondition(format!("{other} is not a critical tournament")),
    };
    Ok(named(
        g,
        family,
        Params::Tournament { n },
        Claims {
            noncritical: None,
            shape: None,
        },
    ))
}

/// Branch profiles `[b₁, …, b_k]`, `k ≥ 3`, summing to `total`; the first entry
/// odd ≥ 3 when `odd_first`, every other entry even ≥ 2 and non-decreasing.
pub fn star_profiles(total: usize, odd_first: bool) -> Vec<Vec<usize>> {
    fn evens(left: usize, min: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, prefix: &[usize]) {
        if left == 0 {
            let mut p = prefix.to_vec();
            p.extend_from_slice(acc);
            if p.len() >= 3 {
                out.push(p);
            }
            return;
        }
        let mut b = min;
        while b <= left {
            acc.push(b);
            evens(left - b, b, acc, out, prefix);
            acc.pop();
            b += 2;
        }
    }
    let mut out = Vec::new();
    if odd_first {
        let mut first = 3;
        while first <= total {
            evens(total - first, 2, &mut Vec::new(), &mut out, &[first]);
            first += 2;
        }
    } else {
        evens(total, 2, &mut Vec::new(), &mut out, &[]);
    }
    out
}

/// Every class parameterisation producing graphs of the given order, in a
/// fixed order: H, R, F, G, G′, G″, odd stars, even stars.
fn class_members(order: usize) -> Result<Vec<Vec<FamilyMember>>> {
    let mut jobs: Vec<Box<dyn Fn() -> Result<Vec<FamilyMember>> + Send + Sync>> = Vec::new();
    if order % 2 == 1 {
        let p = order / 2;
        jobs.push(Box::new(move || Ok(vec![member_h(p)?])));
        if p >= 2 {
            jobs.push(Box::new(move || Ok(vec![member_r(p)?])));
        }
    }
    for ext in 0..=2 {
        if order >= ext + 3 {
            let m = order - ext - 1;
            jobs.push(Box::new(move || enum_class_f(m, ext)));
        }
    }
    for alpha in [false, true] {
        let base = order - usize::from(alpha);
        if base.is_multiple_of(2) && base >= 4 {
            let n = (base - 2) / 2;
            for k in 0..n {
                jobs.push(Box::new(move || enum_class_g(n, k, alpha)));
            }
        }
    }
    if order % 2 == 1 {
        let n = order / 2;
        for k in 0..n {
            jobs.push(Box::new(move || enum_class_gprime(n, k)));
        }
    }
    for ext in 0..=2 {
        let base = order - ext;
        if base % 2 == 1 && base >= 5 {
            let n = base / 2;
            for k in 1..n {
                jobs.push(Box::new(move || enum_class_gdprime(n, k, ext)));
            }
        }
    }
    for p in star_profiles(order - 1, true) {
        jobs.push(Box::new(move || enum_hstar_odd(&p)));
    }
    for gamma in [false, true] {
        for p in star_profiles(order - 1 - usize::from(gamma), false) {
            jobs.push(Box::new(move || enum_hstar_even(&p, gamma)));
        }
    }
    jobs.par_iter().map(|job| job()).collect()
}

/// Largest order [`enum_family_members`] accepts.
pub const FAMILY_ORDER_BOUND: usize = CANONICAL_BOUND - 4;

/// All members of the (−1)-critical classes of the given order (at least 7),
/// closed under complement and dual, one per isomorphism class. When two
/// sources give isomorphic graphs the first in the fixed class order wins.
pub fn enum_family_members(order: usize) -> Result<Vec<FamilyMember>> {
    if !(7..=FAMILY_ORDER_BOUND).contains(&order) {
        return precondition(format!("order {order} outside 7..={FAMILY_ORDER_BOUND}"));
    }
    let batches = class_members(order)?;
    let candidates: Vec<FamilyMember> = batches
        .into_iter()
        .flatten()
        .flat_map(|m| Transform::ALL.map(|t| m.transformed(t)))
        .collect();
    let codes: Vec<Vec<u8>> = candidates
        .par_iter()
        .map(|m| canonical_code(&m.graph).expect("order is within the canonical bound"))
        .collect();
    let mut seen: HashMap<Vec<u8>, ()> = HashMap::with_capacity(codes.len());
    let mut out = Vec::new();
    for (m, c) in candidates.into_iter().zip(codes) {
        if seen.insert(c, ()).is_none() {
            out.push(m);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transforms_compose() {
        let m = member_h(2).unwrap();
        let c = m.transformed(Transform::Complement);
        assert_eq!(c.transform, Transform::Complement);
        assert_eq!(c.transformed(Transform::Dual).transform, Transform::DualComplement);
        assert_eq!(c.transformed(Transform::Complement).graph, m.graph);
        assert_eq!(c.transformed(Transform::DualComplement).transform, Transform::Dual);
    }

    #[test]
    fn star_profile_listing() {
        assert_eq!(star_profiles(6, false), vec![vec![2, 2, 2]]);
        assert_eq!(star_profiles(7, true), vec![vec![3, 2, 2]]);
        assert_eq!(star_profiles(8, false), vec![vec![2, 2, 2, 2], vec![2, 2, 4]]);
        assert!(star_profiles(5, true).is_empty());
    }

    #[test]
    fn order_range_enforced() {
        assert!(enum_family_members(6).is_err());
        assert!(enum_family_members(FAMILY_ORDER_BOUND + 1).is_err());
    }
}
