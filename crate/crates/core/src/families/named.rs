//! The individually named graphs: the critical tournaments `T`, `U`, `V`,
//! `R_{2n+1}`, `H_{2p+1}` and `Q_5`.

use crate::digraph::{Digraph, PairType};
use crate::error::{precondition, Result};

fn need(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        precondition(what.to_string())
    }
}

/// Orientation of the `T`/`U` tournaments between `N_n` and `{n+1, .., 2n}`:
/// `{i+1, .., n} → i+n+1 → N_i`.
fn tu(n: usize, reverse_upper: bool) -> Result<Digraph> {
    need(n >= 2, "T and U need n ≥ 2")?;
    let mut g = Digraph::empty(2 * n + 1)?;
    for x in 0..=n {
        for y in x + 1..=n {
            g.add_arc(x, y)?;
        }
    }
    for x in n + 1..=2 * n {
        for y in x + 1..=2 * n {
            if reverse_upper {
                g.add_arc(y, x)?;
            } else {
                g.add_arc(x, y)?;
            }
        }
    }
    for i in 0..n {
        let w = i + n + 1;
        for v in 0..=n {
            if v > i {
                g.add_arc(v, w)?;
            } else {
                g.add_arc(w, v)?;
            }
        }
    }
    Ok(g)
}

pub fn gen_t(n: usize) -> Result<Digraph> {
    tu(n, false)
}

pub fn gen_u(n: usize) -> Result<Digraph> {
    tu(n, true)
}

/// Chain on `N_{2n−1}`, odd vertices → `2n` → even vertices.
pub fn gen_v(n: usize) -> Result<Digraph> {
    need(n >= 2, "V needs n ≥ 2")?;
    let top = 2 * n;
    Digraph::from_pair_types(top + 1, |x, y| {
        if y == top {
            if x % 2 == 1 {
                PairType::Forward
            } else {
                PairType::Backward
            }
        } else {
            PairType::Forward
        }
    })
}

/// Odd vertices → `2n` → even vertices; below `2n`, `x < y` is an arc iff `x`
/// is odd or `y` is even (and no arc when `x` is even and `y` odd).
pub fn gen_r(n: usize) -> Result<Digraph> {
    need(n >= 2, "R needs n ≥ 2")?;
    let top = 2 * n;
    Digraph::from_pair_types(top + 1, |x, y| {
        if y == top {
            if x % 2 == 1 {
                PairType::Forward
            } else {
                PairType::Backward
            }
        } else if x % 2 == 1 || y % 2 == 0 {
            PairType::Forward
        } else {
            PairType::Absent
        }
    })
}

/// `x → y` iff `x < y` with `x` even and `y` odd, or `x > y` with equal parity.
pub fn gen_h(p: usize) -> Result<Digraph> {
    need(p >= 1, "H needs p ≥ 1")?;
    let n = 2 * p + 1;
    let mut g = Digraph::empty(n)?;
    for x in 0..n {
        for y in 0..n {
            let arc = (x < y && x % 2 == 0 && y % 2 == 1) || (x > y && x % 2 == y % 2);
            if arc {
                g.add_arc(x, y)?;
            }
        }
    }
    Ok(g)
}

/// Five vertices `0, 1, 2, α = 3, β = 4` with the mutual edges
/// `0-1, 0-2, 0-β, 2-β, α-β`.
pub fn gen_q5() -> Digraph {
    let mut g = Digraph::empty(5).unwrap();
    for (x, y) in [(0, 1), (0, 2), (0, 4), (2, 4), (3, 4)] {
        g.set_pair_type_unchecked(x, y, PairType::Mutual);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tournaments_are_complete_and_oriented() {
        for n in 2..6 {
            for g in [gen_t(n).unwrap(), gen_u(n).unwrap(), gen_v(n).unwrap()] {
                assert_eq!(g.order(), 2 * n + 1);
                for x in 0..g.order() {
                    for y in x + 1..g.order() {
                        let t = g.pair_type(x, y).unwrap();
                        assert!(matches!(t, PairType::Forward | PairType::Backward));
                    }
                }
            }
        }
        assert!(gen_t(1).is_err());
    }

    #[test]
    fn h3_matches_explicit_arcs() {
        assert_eq!(gen_h(1).unwrap(), Digraph::new(3, [(0, 1), (2, 0)]).unwrap());
        assert!(gen_h(0).is_err());
    }

    #[test]
    fn q5_is_symmetric() {
        let q = gen_q5();
        assert!(q.is_symmetric());
        assert_eq!(q.dual(), q);
        assert_eq!(q.arc_count(), 10);
    }

    #[test]
    fn r_rule_spot_checks() {
        let r = gen_r(3).unwrap();
        assert_eq!(r.pair_type(1, 6).unwrap(), PairType::Forward);
        assert_eq!(r.pair_type(6, 2).unwrap(), PairType::Forward);
        assert_eq!(r.pair_type(0, 1).unwrap(), PairType::Absent);
        assert_eq!(r.pair_type(0, 2).unwrap(), PairType::Forward);
        assert_eq!(r.pair_type(1, 3).unwrap(), PairType::Forward);
    }
}
