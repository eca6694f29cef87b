//! Cofaces, codegeneracies, the two differentials and the iterated
//! codegeneracies of a connected multiplicative operad, with checkers.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hopf::odot;
use crate::lincomb::{BasisKey, LinComb};
use crate::operad::{Multiplicative, Operad};
use crate::report::{Report, ReportBuilder};
use crate::scalar::Rational;

type Lc<O> = LinComb<<O as Operad>::Key>;

fn sign(i: usize) -> Rational {
    Rational::sign_power(i)
}

/// Applies `f(n, key)` to each term, `n` being the key's arity.
fn per_key<O: Operad>(
    m: &Multiplicative<O>,
    x: &Lc<O>,
    mut f: impl FnMut(usize, &O::Key) -> Result<Lc<O>>,
) -> Result<Lc<O>> {
    x.try_map_linear(|k| f(m.operad().arity(k), k))
}

fn coface_key<O: Operad>(m: &Multiplicative<O>, i: usize, n: usize, k: &O::Key) -> Result<Lc<O>> {
    let x = LinComb::basis(k.clone());
    if i == 0 {
        m.compose(m.mu(), 2, &x)
    } else if i == n + 1 {
        m.compose(m.mu(), 1, &x)
    } else if i <= n {
        m.compose(&x, i, m.mu())
    } else {
        Err(Error::IndexOutOfRange {
            index: i,
            lo: 0,
            hi: n + 1,
        })
    }
}

/// `D_i`: `x∘_i μ` for `1 <= i <= n`, `μ∘₂x` for `i = 0`, `μ∘₁x` for `i = n+1`.
pub fn coface<O: Operad>(m: &Multiplicative<O>, i: usize, x: &Lc<O>) -> Result<Lc<O>> {
    per_key(m, x, |n, k| coface_key(m, i, n, k))
}

/// `s_i x = x∘_i 1₀` for `1 <= i <= n`.
pub fn codegeneracy<O: Operad>(m: &Multiplicative<O>, i: usize, x: &Lc<O>) -> Result<Lc<O>> {
    let point = m.base_point();
    per_key(m, x, |n, k| {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange {
                index: i,
                lo: 1,
                hi: n,
            });
        }
        m.compose(&LinComb::basis(k.clone()), i, &point)
    })
}

/// `∂ = Σ_{i=1}^{n} (-1)^i s_i`; zero in arity 0.
pub fn boundary<O: Operad>(m: &Multiplicative<O>, x: &Lc<O>) -> Result<Lc<O>> {
    per_key(m, x, |n, k| {
        let b = LinComb::basis(k.clone());
        let mut out = LinComb::zero();
        for i in 1..=n {
            out.add_scaled(&sign(i), &codegeneracy(m, i, &b)?);
        }
        Ok(out)
    })
}

/// `δ = Σ_{i=0}^{n+1} (-1)^i D_i`.
pub fn coboundary<O: Operad>(m: &Multiplicative<O>, x: &Lc<O>) -> Result<Lc<O>> {
    per_key(m, x, |n, k| {
        let mut out = LinComb::zero();
        for i in 0..=n + 1 {
            out.add_scaled(&sign(i), &coface_key(m, i, n, k)?);
        }
        Ok(out)
    })
}

/// Keeps the first `j` inputs: `s_{j+1} ∘ ... ∘ s_k`.
pub fn upper_tilde<O: Operad>(m: &Multiplicative<O>, j: usize, x: &Lc<O>) -> Result<Lc<O>> {
    per_key(m, x, |k, key| {
        if j > k {
            return Err(Error::IndexOutOfRange {
                index: j,
                lo: 0,
                hi: k,
            });
        }
        let mut v = LinComb::basis(key.clone());
        for last in (j + 1..=k).rev() {
            v = codegeneracy(m, last, &v)?;
        }
        Ok(v)
    })
}

/// Drops the first `j` inputs: `s_1` applied `j` times.
pub fn lower_tilde<O: Operad>(m: &Multiplicative<O>, j: usize, x: &Lc<O>) -> Result<Lc<O>> {
    per_key(m, x, |k, key| {
        if j > k {
            return Err(Error::IndexOutOfRange {
                index: j,
                lo: 0,
                hi: k,
            });
        }
        let mut v = LinComb::basis(key.clone());
        for _ in 0..j {
            v = codegeneracy(m, 1, &v)?;
        }
        Ok(v)
    })
}

fn render<K: BasisKey>(x: &LinComb<K>) -> Value {
    x.to_json()
}

fn render_opt<K: BasisKey>(x: &Option<LinComb<K>>) -> Value {
    x.as_ref().map_or(Value::Null, LinComb::to_json)
}

fn bases<O: Operad>(m: &Multiplicative<O>, max_arity: usize) -> Result<Vec<Vec<O::Key>>> {
    (0..=max_arity).map(|n| m.operad().basis(n)).collect()
}

/// `s_i D_j` against `D_{j-1} s_i` (`i < j`), the identity (`i ∈ {j, j+1}`)
/// and `D_j s_{i-1}` (`i > j+1`), for `x` of arity `<= max_arity`.
pub fn check_mixed<O: Operad>(m: &Multiplicative<O>, max_arity: usize) -> Result<Report> {
    let mut rep = ReportBuilder::new("cosimplicial.mixed", max_arity);
    for (n, xs) in bases(m, max_arity)?.iter().enumerate() {
        for key in xs {
            let x = LinComb::basis(key.clone());
            for j in 0..=n + 1 {
                let dj = coface(m, j, &x)?;
                for i in 1..=n + 1 {
                    let lhs = codegeneracy(m, i, &dj)?;
                    let rhs = if i < j {
                        coface(m, j - 1, &codegeneracy(m, i, &x)?)?
                    } else if i == j || i == j + 1 {
                        x.clone()
                    } else {
                        coface(m, j, &codegeneracy(m, i - 1, &x)?)?
                    };
                    rep.case("mixed", &lhs, &rhs, render, || {
                        vec![key.to_json(), json!(i), json!(j)]
                    });
                }
            }
        }
    }
    Ok(rep.finish())
}

/// `∂∂ = 0` on every basis element of arity `<= max_arity`.
pub fn check_d2<O: Operad>(m: &Multiplicative<O>, max_arity: usize) -> Result<Report> {
    let mut rep = ReportBuilder::new("cosimplicial.d2", max_arity);
    for xs in bases(m, max_arity)? {
        for key in xs {
            let x = LinComb::basis(key.clone());
            let lhs = boundary(m, &boundary(m, &x)?)?;
            rep.case("d2", &lhs, &LinComb::zero(), render, || vec![key.to_json()]);
        }
    }
    Ok(rep.finish())
}

/// `δδ = 0` on every basis element of arity `<= max_arity`.
pub fn check_delta2<O: Operad>(m: &Multiplicative<O>, max_arity: usize) -> Result<Report> {
    let mut rep = ReportBuilder::new("cosimplicial.delta2", max_arity);
    for xs in bases(m, max_arity)? {
        for key in xs {
            let x = LinComb::basis(key.clone());
            let lhs = coboundary(m, &coboundary(m, &x)?)?;
            rep.case("delta2", &lhs, &LinComb::zero(), render, || {
                vec![key.to_json()]
            });
        }
    }
    Ok(rep.finish())
}

/// `∂δ + δ∂ = 0` on every basis element of arity `<= max_arity`.
pub fn check_anticommute<O: Operad>(m: &Multiplicative<O>, max_arity: usize) -> Result<Report> {
    let mut rep = ReportBuilder::new("cosimplicial.anticommute", max_arity);
    for xs in bases(m, max_arity)? {
        for key in xs {
            let x = LinComb::basis(key.clone());
            let lhs = boundary(m, &coboundary(m, &x)?)? + coboundary(m, &boundary(m, &x)?)?;
            rep.case("anticommute", &lhs, &LinComb::zero(), render, || {
                vec![key.to_json()]
            });
        }
    }
    Ok(rep.finish())
}

/// The four checks above with `∂²` two arities and `δ²`, `∂δ+δ∂` one arity
/// beyond the mixed identity. At `max_arity = 4` this is 4, 6, 5, 5.
pub fn check_cosimplicial<O: Operad>(m: &Multiplicative<O>, max_arity: usize) -> Result<Report> {
    let parts = vec![
        check_mixed(m, max_arity)?,
        check_d2(m, max_arity + 2)?,
        check_delta2(m, max_arity + 1)?,
        check_anticommute(m, max_arity + 1)?,
    ];
    Ok(Report::merge("cosimplicial", max_arity, parts))
}

/// A sign rule for the derivation property over `⊙`:
/// `d(x⊙y) = a·(dx⊙y) + b·(x⊙dy)` with `a`, `b` depending on the arities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeibnizSign {
    /// `b = (-1)^{|x|}`
    ArityOfLeft,
    /// `a = b = 1`
    Plain,
    /// `a = (-1)^{|y|}`
    LeftTermArityOfRight,
    /// `b = (-1)^{|x|+1}`
    ArityOfLeftShifted,
}

impl LeibnizSign {
    pub const ALL: [LeibnizSign; 4] = [
        LeibnizSign::ArityOfLeft,
        LeibnizSign::Plain,
        LeibnizSign::LeftTermArityOfRight,
        LeibnizSign::ArityOfLeftShifted,
    ];

    fn coeffs(self, p: usize, q: usize) -> (Rational, Rational) {
        match self {
            LeibnizSign::ArityOfLeft => (Rational::one(), sign(p)),
            LeibnizSign::Plain => (Rational::one(), Rational::one()),
            LeibnizSign::LeftTermArityOfRight => (sign(q), Rational::one()),
            LeibnizSign::ArityOfLeftShifted => (Rational::one(), sign(p + 1)),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            LeibnizSign::ArityOfLeft => "(-1)^|x| on x⊙dy",
            LeibnizSign::Plain => "no signs",
            LeibnizSign::LeftTermArityOfRight => "(-1)^|y| on dx⊙y",
            LeibnizSign::ArityOfLeftShifted => "(-1)^(|x|+1) on x⊙dy",
        }
    }
}

fn leibniz_report<O: Operad>(
    m: &Multiplicative<O>,
    max_total: usize,
    rule: LeibnizSign,
) -> Result<Report> {
    let mut rep = ReportBuilder::new("cosimplicial.leibniz", max_total);
    let bs = bases(m, max_total)?;
    let ops: [(&str, Differential<O>); 2] = [
        ("leibniz.delta", coboundary::<O>),
        ("leibniz.boundary", boundary::<O>),
    ];
    for (p, xs) in bs.iter().enumerate() {
        for (q, ys) in bs.iter().enumerate().take(max_total - p + 1) {
            let (a, b) = rule.coeffs(p, q);
            for kx in xs {
                let x = LinComb::basis(kx.clone());
                for ky in ys {
                    let y = LinComb::basis(ky.clone());
                    for (law, d) in &ops {
                        let lhs = d(m, &odot(m, &x, &y)?)?;
                        let rhs = &odot(m, &d(m, &x)?, &y)? * &a + &odot(m, &x, &d(m, &y)?)? * &b;
                        rep.case(law, &lhs, &rhs, render, || vec![kx.to_json(), ky.to_json()]);
                    }
                }
            }
        }
    }
    Ok(rep.finish())
}

type Differential<O> = fn(&Multiplicative<O>, &Lc<O>) -> Result<Lc<O>>;

/// Derivation property of `δ` and `∂` over `⊙` for basis pairs with total
/// arity `<= max_total`, under the sign `(-1)^{|x|}` on the second term. If
/// that fails, the other rules of [`LeibnizSign`] are tried and the verdicts
/// are added as notes.
pub fn check_leibniz<O: Operad>(m: &Multiplicative<O>, max_total: usize) -> Result<Report> {
    let mut rep = leibniz_report(m, max_total, LeibnizSign::ArityOfLeft)?;
    rep.notes
        .push(format!("sign rule: {}", LeibnizSign::ArityOfLeft.label()));
    if !rep.passed() {
        for alt in &LeibnizSign::ALL[1..] {
            let r = leibniz_report(m, max_total, *alt)?;
            let verdict = if r.passed() { "holds" } else { "fails" };
            rep.notes
                .push(format!("alternative {}: {verdict}", alt.label()));
        }
    }
    Ok(rep)
}

/// Compatibility rules of codegeneracies, cofaces and the iterated
/// codegeneracies with partial composition, each in two forms: the rule as
/// commonly stated (`*.stated`) and an index-corrected form (`*.corrected`).
/// An undefined right side (an index out of range) counts as a failure.
pub fn check_compat<O: Operad>(m: &Multiplicative<O>, max_arity: usize) -> Result<Report> {
    let mut rep = ReportBuilder::new("cosimplicial.compat", max_arity);
    let bs = bases(m, max_arity)?;
    let c = |x: &Lc<O>, i: usize, y: &Lc<O>| m.compose(x, i, y);
    let ok = |r: Result<Lc<O>>| r.ok();

    for (n, xs) in bs.iter().enumerate().skip(1) {
        for (mm, ys) in bs.iter().enumerate() {
            let total = n + mm - 1;
            if total > max_arity {
                continue;
            }
            for kx in xs {
                let x = LinComb::basis(kx.clone());
                for ky in ys {
                    let y = LinComb::basis(ky.clone());
                    let inputs =
                        |i: usize, j: usize| vec![kx.to_json(), json!(i), ky.to_json(), json!(j)];
                    for i in 1..=n {
                        let xy = c(&x, i, &y)?;

                        // codegeneracies
                        for j in 1..=total {
                            let lhs = Some(codegeneracy(m, j, &xy)?);
                            let stated = if j < i {
                                ok(codegeneracy(m, j, &x).and_then(|s| c(&s, i - 1, &y)))
                            } else if j <= i + mm {
                                ok(codegeneracy(m, j - i + 1, &y).and_then(|s| c(&x, i, &s)))
                            } else {
                                ok(codegeneracy(m, j - i, &x).and_then(|s| c(&s, i - 1, &y)))
                            };
                            rep.case("codegeneracy.stated", &lhs, &stated, render_opt, || {
                                inputs(i, j)
                            });
                            let corrected = if j < i {
                                ok(codegeneracy(m, j, &x).and_then(|s| c(&s, i - 1, &y)))
                            } else if j < i + mm {
                                ok(codegeneracy(m, j - i + 1, &y).and_then(|s| c(&x, i, &s)))
                            } else {
                                ok(codegeneracy(m, j - mm + 1, &x).and_then(|s| c(&s, i, &y)))
                            };
                            rep.case(
                                "codegeneracy.corrected",
                                &lhs,
                                &corrected,
                                render_opt,
                                || inputs(i, j),
                            );
                        }

                        // cofaces
                        for j in 0..=total + 1 {
                            let lhs = Some(coface(m, j, &xy)?);
                            let stated = if j == 0 {
                                Some(ok(coface(m, 0, &x).and_then(|d| c(&d, i + 1, &y))))
                            } else if j == n + 1 {
                                Some(ok(coface(m, j, &x).and_then(|d| c(&d, i, &y))))
                            } else if mm < j && j <= total {
                                Some(ok(coface(m, j + 1 - mm, &x).and_then(|d| c(&d, i, &y))))
                            } else {
                                None
                            };
                            if let Some(stated) = stated {
                                rep.case("coface.stated", &lhs, &stated, render_opt, || {
                                    inputs(i, j)
                                });
                            }
                            let corrected = if j == 0 {
                                ok(coface(m, 0, &x).and_then(|d| c(&d, i + 1, &y)))
                            } else if j == total + 1 {
                                ok(coface(m, n + 1, &x).and_then(|d| c(&d, i, &y)))
                            } else if j < i {
                                ok(coface(m, j, &x).and_then(|d| c(&d, i + 1, &y)))
                            } else if j < i + mm {
                                ok(coface(m, j - i + 1, &y).and_then(|d| c(&x, i, &d)))
                            } else {
                                ok(coface(m, j + 1 - mm, &x).and_then(|d| c(&d, i, &y)))
                            };
                            rep.case("coface.corrected", &lhs, &corrected, render_opt, || {
                                inputs(i, j)
                            });
                        }

                        // iterated codegeneracies
                        for j in 1..=total {
                            let lhs = Some(upper_tilde(m, j, &xy)?);
                            let stated = if j < i {
                                ok(upper_tilde(m, j, &x))
                            } else if j == i {
                                ok(upper_tilde(m, i, &x)
                                    .and_then(|u| Ok((u, upper_tilde(m, 1, &y)?)))
                                    .and_then(|(u, v)| c(&u, i, &v)))
                            } else {
                                (j + 1 >= mm)
                                    .then(|| {
                                        ok(upper_tilde(m, j + 1 - mm, &x)
                                            .and_then(|u| c(&u, i, &y)))
                                    })
                                    .flatten()
                            };
                            rep.case("upper.stated", &lhs, &stated, render_opt, || inputs(i, j));
                            let corrected = if j < i {
                                ok(upper_tilde(m, j, &x))
                            } else if j + 1 < i + mm {
                                ok(upper_tilde(m, i, &x)
                                    .and_then(|u| Ok((u, upper_tilde(m, j - i + 1, &y)?)))
                                    .and_then(|(u, v)| c(&u, i, &v)))
                            } else {
                                ok(upper_tilde(m, j + 1 - mm, &x).and_then(|u| c(&u, i, &y)))
                            };
                            // for j < i all of y is plugged with 1₀, leaving a scalar
                            let corrected = if j < i {
                                let lambda = upper_tilde(m, 0, &y)?.coeff(m.base_key());
                                corrected.map(|u| u.scale(&lambda))
                            } else {
                                corrected
                            };
                            rep.case("upper.corrected", &lhs, &corrected, render_opt, || {
                                inputs(i, j)
                            });
                        }
                        for j in 1..=total {
                            let lhs = Some(lower_tilde(m, j, &xy)?);
                            let stated = (j + 1 >= i)
                                .then(|| {
                                    ok(lower_tilde(m, i - 1, &x)
                                        .and_then(|u| Ok((u, lower_tilde(m, j + 1 - i, &y)?)))
                                        .and_then(|(u, v)| c(&u, 1, &v)))
                                })
                                .flatten();
                            rep.case("lower.stated", &lhs, &stated, render_opt, || inputs(i, j));
                            let corrected = if j + 1 < i {
                                ok(lower_tilde(m, j, &x).and_then(|u| c(&u, i - j, &y)))
                            } else if j < i + mm {
                                ok(lower_tilde(m, i - 1, &x)
                                    .and_then(|u| Ok((u, lower_tilde(m, j + 1 - i, &y)?)))
                                    .and_then(|(u, v)| c(&u, 1, &v)))
                            } else {
                                ok(lower_tilde(m, mm, &y)
                                    .and_then(|v| c(&x, i, &v))
                                    .and_then(|w| lower_tilde(m, j - mm, &w)))
                            };
                            rep.case("lower.corrected", &lhs, &corrected, render_opt, || {
                                inputs(i, j)
                            });
                        }
                    }
                }
            }
        }
    }

    // the usual cosimplicial identities among cofaces and among codegeneracies
    for (n, xs) in bs.iter().enumerate() {
        for kx in xs {
            let x = LinComb::basis(kx.clone());
            for j in 0..=n + 2 {
                for i in 0..j {
                    let lhs = coface(m, j, &coface(m, i, &x)?)?;
                    let rhs = coface(m, i, &coface(m, j - 1, &x)?)?;
                    rep.case("coface.coface", &lhs, &rhs, render, || {
                        vec![kx.to_json(), json!(i), json!(j)]
                    });
                }
            }
            for i in 1..n {
                for j in i..n {
                    let lhs = codegeneracy(m, j, &codegeneracy(m, i, &x)?)?;
                    let rhs = codegeneracy(m, i, &codegeneracy(m, j + 1, &x)?)?;
                    rep.case("codegeneracy.codegeneracy", &lhs, &rhs, render, || {
                        vec![kx.to_json(), json!(i), json!(j)]
                    });
                }
            }
        }
    }
    Ok(rep.finish())
}
