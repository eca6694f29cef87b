//! Exhaustive check of the operad axioms on basis elements.

use serde_json::{json, Value};

use crate::error::Result;
use crate::lincomb::{BasisKey, LinComb};
use crate::operad::Operad;
use crate::perm::Perm;
use crate::report::{Report, ReportBuilder};

fn render<K: BasisKey>(x: &LinComb<K>) -> Value {
    x.to_json()
}

/// Runs both associativity shapes, the unit laws and equivariance over every
/// basis element of arity `<= max_arity`. Cases whose result would exceed the
/// instance's arity cap are skipped.
pub fn check_operad_axioms<O: Operad>(op: &O, max_arity: usize) -> Result<Report> {
    let mut rep = ReportBuilder::new("operad", max_arity);
    let basis: Vec<Vec<O::Key>> = (0..=max_arity)
        .map(|n| op.basis(n))
        .collect::<Result<_>>()?;
    let fits = |a: usize| op.arity_cap().is_none_or(|c| a <= c);
    let unit = op.unit();
    let c = |x: &O::Key, i: usize, y: &O::Key| op.compose_basis(x, i, y);

    // unit laws
    for (n, xs) in basis.iter().enumerate() {
        for x in xs {
            let xl = LinComb::basis(x.clone());
            let left = c(&unit, 1, x)?;
            rep.case("unit.left", &left, &xl, render, || vec![x.to_json()]);
            for i in 1..=n {
                let right = c(x, i, &unit)?;
                rep.case("unit.right", &right, &xl, render, || {
                    vec![x.to_json(), json!(i)]
                });
            }
        }
    }

    // associativity
    for (n, xs) in basis.iter().enumerate().skip(1) {
        for (m, ys) in basis.iter().enumerate() {
            for (l, zs) in basis.iter().enumerate() {
                if !fits((n + m + l).saturating_sub(2))
                    || !fits(n + m - 1)
                    || !fits(n + l - 1)
                    || !fits((m + l).saturating_sub(1))
                {
                    continue;
                }
                for x in xs {
                    for y in ys {
                        for z in zs {
                            for i in 1..=n {
                                let xy = c(x, i, y)?;
                                for j in 1..=m {
                                    let lhs = compose_left(op, &xy, i + j - 1, z)?;
                                    let yz = c(y, j, z)?;
                                    let rhs = compose_right(op, x, i, &yz)?;
                                    rep.case("assoc.sequential", &lhs, &rhs, render, || {
                                        vec![
                                            x.to_json(),
                                            json!(i),
                                            y.to_json(),
                                            json!(j),
                                            z.to_json(),
                                        ]
                                    });
                                }
                                for k in i + 1..=n {
                                    let lhs = compose_left(op, &xy, k + m - 1, z)?;
                                    let xz = c(x, k, z)?;
                                    let rhs = compose_left(op, &xz, i, y)?;
                                    rep.case("assoc.parallel", &lhs, &rhs, render, || {
                                        vec![
                                            x.to_json(),
                                            json!(i),
                                            y.to_json(),
                                            json!(k),
                                            z.to_json(),
                                        ]
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // equivariance: (x·σ) ∘_i (y·τ) = (x ∘_{σ(i)} y)·sub_i(σ, τ)
    for (n, xs) in basis.iter().enumerate().skip(1) {
        let sn = Perm::all(n);
        for (m, ys) in basis.iter().enumerate() {
            if !fits(n + m - 1) {
                continue;
            }
            let sm = Perm::all(m);
            for x in xs {
                for y in ys {
                    for sigma in &sn {
                        let xs_ = op.act_basis(x, sigma)?;
                        for tau in &sm {
                            let yt = op.act_basis(y, tau)?;
                            for i in 1..=n {
                                let lhs = xs_.try_bilinear(&yt, |a, b| c(a, i, b))?;
                                let inner = c(x, sigma.at(i), y)?;
                                let rho = sigma.substitute(i, tau)?;
                                let rhs = inner.try_map_linear(|k| op.act_basis(k, &rho))?;
                                rep.case("equivariance", &lhs, &rhs, render, || {
                                    vec![
                                        x.to_json(),
                                        json!(sigma.to_string()),
                                        y.to_json(),
                                        json!(tau.to_string()),
                                        json!(i),
                                    ]
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(rep.finish())
}

fn compose_left<O: Operad>(
    op: &O,
    x: &LinComb<O::Key>,
    i: usize,
    z: &O::Key,
) -> Result<LinComb<O::Key>> {
    x.try_map_linear(|k| op.compose_basis(k, i, z))
}

fn compose_right<O: Operad>(
    op: &O,
    x: &O::Key,
    i: usize,
    y: &LinComb<O::Key>,
) -> Result<LinComb<O::Key>> {
    y.try_map_linear(|k| op.compose_basis(x, i, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::Ass;

    /// Right composition with the unit scrambles arity-two elements.
    struct BrokenUnit;

    impl Operad for BrokenUnit {
        type Key = Perm;
        fn name(&self) -> String {
            "broken".into()
        }
        fn arity(&self, k: &Perm) -> usize {
            k.len()
        }
        fn basis(&self, n: usize) -> Result<Vec<Perm>> {
            Ass.basis(n)
        }
        fn unit(&self) -> Perm {
            Perm::unit()
        }
        fn compose_basis(&self, x: &Perm, i: usize, y: &Perm) -> Result<LinComb<Perm>> {
            let mut out = Ass.compose_basis(x, i, y)?;
            if y.len() == 1 && x.len() == 2 {
                out = LinComb::basis(x.inverse().compose(&"21".parse::<Perm>()?)?);
            }
            Ok(out)
        }
        fn act_basis(&self, x: &Perm, sigma: &Perm) -> Result<LinComb<Perm>> {
            Ass.act_basis(x, sigma)
        }
    }

    #[test]
    fn ass_passes_small_arities() {
        let r1 = check_operad_axioms(&Ass, 1).unwrap();
        assert!(r1.passed(), "{r1:?}");
        let r2 = check_operad_axioms(&Ass, 2).unwrap();
        assert!(r2.passed(), "{r2:?}");
    }

    #[test]
    fn corrupted_unit_is_reported() {
        let rep = check_operad_axioms(&BrokenUnit, 2).unwrap();
        assert!(!rep.passed());
        assert!(rep.counterexample("unit.right").is_some(), "{rep:?}");
    }
}
