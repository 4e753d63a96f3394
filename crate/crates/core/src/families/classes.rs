//! The path classes `F`, `G`, `G′` and `G″`: every pair is `≡` to one of a few
//! representative pairs, the representatives range over all pair types, and
//! the class conditions prune the combinations.

use crate::error::{precondition, Result};

use super::template::{Domain, Pt, Rule, Template};
use super::{Claims, FamilyId, FamilyMember, Params};
use crate::criticality::ShapeKind;

fn labels(base: usize, ext: usize) -> Vec<String> {
    let mut l: Vec<String> = (0..base).map(|i| i.to_string()).collect();
    l.extend(["α", "β"].iter().take(ext).map(|s| s.to_string()));
    l
}

fn check_ext(ext: usize) -> Result<()> {
    if ext > 2 {
        return precondition(format!("extension size {ext} is not 0, 1 or 2"));
    }
    Ok(())
}

/// `F(m, ext)` on `N_m` plus `ext` extra vertices.
pub fn enum_class_f(m: usize, ext: usize) -> Result<Vec<FamilyMember>> {
    if m < 2 {
        return precondition(format!("class F needs m ≥ 2, got {m}"));
    }
    check_ext(ext)?;
    let base = m + 1;
    let (a, b) = (base, base + 1);
    let t = Template::new(labels(base, ext), |x, y| {
        if y >= base {
            return if x >= base {
                Rule::Free(Domain::Any)
            } else if x % 2 == 1 {
                Rule::Like(1, 2)
            } else {
                Rule::Like(0, y)
            };
        }
        match (x % 2, y % 2) {
            (1, _) => Rule::Like(1, 2),
            (0, 0) => Rule::Like(0, 2),
            _ => Rule::Like(0, 1),
        }
    })?;
    let keep = |g: &_| {
        let p = Pt(g);
        if p.eq((0, 1), (2, 1)) || p.eq((0, 1), (0, 2)) != (ext > 0) {
            return false;
        }
        match ext {
            0 => !p.eq((0, 2), (1, 2)) && !p.eq((1, 2), (0, 1)),
            1 => {
                if p.eq((0, 1), (1, 2)) {
                    p.sym((0, a))
                } else {
                    !p.eq((0, a), (0, 1)) && !p.eq((0, a), (1, 2))
                }
            }
            _ => !p.eq((b, a), (1, 2)) && !p.eq((1, 2), (0, 1)) && p.eq((0, a), (1, 2)) && p.eq((0, b), (0, 1)),
        }
    };
    Ok(t.enumerate(keep)
        .into_iter()
        .map(|(graph, assignment)| {
            FamilyMember::new(
                graph,
                FamilyId::F,
                Params::F { m, ext },
                assignment,
                Claims {
                    noncritical: Some(m),
                    shape: Some(ShapeKind::Path { edges: m }),
                },
            )
        })
        .collect())
}

/// `G(n, k)` on `N_{2n+1}`, optionally with `α`.
pub fn enum_class_g(n: usize, k: usize, with_alpha: bool) -> Result<Vec<FamilyMember>> {
    if n < 1 || k >= n {
        return precondition(format!("class G needs n ≥ 1 and k < n, got n = {n}, k = {k}"));
    }
    let base = 2 * n + 2;
    let a = base;
    let top = (2 * n, 2 * n + 1);
    let t = Template::new(labels(base, usize::from(with_alpha)), |x, y| {
        if y == a {
            return if x % 2 == 1 {
                Rule::Like(1, 2)
            } else if x / 2 <= k {
                Rule::Like(0, a)
            } else {
                Rule::Like(1, 0)
            };
        }
        let (i, j) = (x / 2, y / 2);
        match (x % 2, y % 2) {
            (0, 1) if i <= k => Rule::Like(0, 1),
            (0, 1) => Rule::Like(top.0, top.1),
            (1, _) => Rule::Like(1, 2),
            _ if j <= k => Rule::Like(0, 2),
            _ => Rule::Like(1, 2),
        }
    })?;
    let keep = |g: &_| {
        let p = Pt(g);
        if p.eq((0, 1), (2, 1)) || p.eq((2, 1), top) || p.eq((0, 1), (1, 2)) != with_alpha {
            return false;
        }
        if !with_alpha {
            !(p.eq((0, 2), (1, 2)) && p.eq(top, (0, 1)))
                && !(k == 0 && p.eq(top, (1, 2)))
                && !(k == n - 1 && p.eq((0, 1), (0, 2)))
        } else {
            !p.eq((0, a), (1, 2)) && !(p.eq((0, 2), (1, 2)) && p.eq((1, 2), top) && !p.sym((0, a)))
        }
    };
    Ok(t.enumerate(keep)
        .into_iter()
        .map(|(graph, assignment)| {
            FamilyMember::new(
                graph,
                FamilyId::G,
                Params::G {
                    n,
                    k,
                    alpha: with_alpha,
                },
                assignment,
                Claims {
                    noncritical: Some(2 * k + 1),
                    shape: Some(ShapeKind::Path { edges: 2 * n + 1 }),
                },
            )
        })
        .collect())
}

/// `G′(n, k)` on `N_{2n}`.
pub fn enum_class_gprime(n: usize, k: usize) -> Result<Vec<FamilyMember>> {
    if n < 1 || k >= n {
        return precondition(format!("class G′ needs n ≥ 1 and k < n, got n = {n}, k = {k}"));
    }
    let base = 2 * n + 1;
    let last = (2 * n - 2, 2 * n);
    let mid = (2 * k, 2 * k + 2);
    let t = Template::new(labels(base, 0), |x, y| {
        if x % 2 == 1 || y % 2 == 1 {
            Rule::Like(1, 2)
        } else if y <= 2 * k {
            Rule::Like(0, 2)
        } else if x >= 2 * k + 2 {
            Rule::Like(last.0, last.1)
        } else {
            Rule::Like(mid.0, mid.1)
        }
    })?;
    let keep = |g: &_| {
        let p = Pt(g);
        !p.eq((0, 1), (2, 1))
            && !p.eq(mid, (1, 2))
            && !(p.eq(mid, (0, 2)) && p.eq(last, (0, 2)))
            && !(k == 0 && p.eq(last, (1, 2)))
            && !(k == n - 1 && p.eq((0, 2), (1, 2)))
    };
    Ok(t.enumerate(keep)
        .into_iter()
        .map(|(graph, assignment)| {
            FamilyMember::new(
                graph,
                FamilyId::Gprime,
                Params::Gprime { n, k },
                assignment,
                Claims {
                    noncritical: Some(2 * k + 1),
                    shape: Some(ShapeKind::Path { edges: 2 * n }),
                },
            )
        })
        .collect())
}

/// `G″(n, k)` on `N_{2n}` plus `ext` extra vertices.
pub fn enum_class_gdprime(n: usize, k: usize, ext: usize) -> Result<Vec<FamilyMember>> {
    if n < 2 || k < 1 || k >= n {
        return precondition(format!("class G″ needs n ≥ 2 and 1 ≤ k < n, got n = {n}, k = {k}"));
    }
    check_ext(ext)?;
    let base = 2 * n + 1;
    let (a, b) = (base, base + 1);
    let top = (2 * n - 1, 2 * n);
    let t = Template::new(labels(base, ext), |x, y| {
        if y >= base {
            return if x >= base {
                Rule::Free(Domain::Any)
            } else if x % 2 == 0 {
                Rule::Like(0, y)
            } else if x < 2 * k {
                Rule::Like(1, 2)
            } else {
                Rule::Like(2, 1)
            };
        }
        match (x % 2, y % 2) {
            (0, 0) => Rule::Like(0, 2),
            (0, 1) if y < 2 * k => Rule::Like(0, 1),
            (1, 0) if x > 2 * k => Rule::Like(top.0, top.1),
            _ => Rule::Like(1, 2),
        }
    })?;
    let keep = |g: &_| {
        let p = Pt(g);
        if p.eq((0, 1), (2, 1)) || p.eq((2, 1), top) || p.eq((0, 2), (1, 2)) != (ext > 0) {
            return false;
        }
        match ext {
            0 => {
                !(p.eq((0, 1), (1, 2)) && p.eq(top, (1, 2)))
                    && !(k == 1 && p.eq((0, 2), top))
                    && !(k == n - 1 && p.eq((0, 2), (0, 1)))
            }
            1 => !p.eq((2, 1), (0, a)) && !p.eq((0, a), (1, 2)),
            _ => !p.eq((b, a), (0, a)) && p.eq((0, a), (1, 2)) && !p.eq((1, 2), (2, 1)) && p.eq((2, 1), (0, b)),
        }
    };
    Ok(t.enumerate(keep)
        .into_iter()
        .map(|(graph, assignment)| {
            FamilyMember::new(
                graph,
                FamilyId::Gdprime,
                Params::Gdprime { n, k, ext },
                assignment,
                Claims {
                    noncritical: Some(2 * k),
                    shape: Some(ShapeKind::Path { edges: 2 * n }),
                },
            )
        })
        .collect())
}
