//! Named verification suites behind `verify <suite>`.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::cosimplicial::{check_compat, check_cosimplicial, check_leibniz};
use crate::endo::{
    adams, convolve, delta_commutation_check, identity, lie_bracket, random_endo, unit, GradedEndo,
};
use crate::error::{Error, Result};
use crate::free::{quotient_dim, saturate, Presentation};
use crate::hopf::{
    bialgebra_check, coalgebra_check, hopf_check, mr_agreement_check, ProductKind, TensorConvention,
};
use crate::lincomb::LinComb;
use crate::operad::{check_operad_axioms, Ass, Multiplicative};
use crate::perm::Perm;
use crate::report::{Report, ReportBuilder};

pub const SUITES: [&str; 10] = [
    "operad",
    "cosimplicial",
    "cosimplicial-compat",
    "leibniz",
    "coalgebra",
    "bialgebra",
    "hopf",
    "convolution",
    "convolution-delta",
    "free",
];

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub max_arity: Option<usize>,
    pub product: ProductKind,
    pub tensor: TensorConvention,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_arity: None,
            product: ProductKind::Odot,
            tensor: TensorConvention::Plain,
            seed: 7,
        }
    }
}

/// Arity used when `--max-arity` is absent.
pub fn default_max_arity(suite: &str) -> Option<usize> {
    Some(match suite {
        "operad" => 3,
        "cosimplicial" | "cosimplicial-compat" | "bialgebra" | "free" => 4,
        "leibniz" | "coalgebra" => 5,
        "hopf" | "convolution" | "convolution-delta" => 3,
        _ => return None,
    })
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<Report> {
    let max = opts
        .max_arity
        .or_else(|| default_max_arity(name))
        .ok_or_else(|| Error::Parse {
            input: name.to_string(),
            position: 1,
            message: format!("unknown suite; expected one of {}", SUITES.join(", ")),
        })?;
    let a = Multiplicative::ass();
    match name {
        "operad" => check_operad_axioms(&Ass, max),
        "cosimplicial" => check_cosimplicial(&a, max),
        "cosimplicial-compat" => check_compat(&a, max),
        "leibniz" => check_leibniz(&a, max),
        "coalgebra" => Ok(Report::merge(
            "coalgebra",
            max,
            vec![coalgebra_check(&a, max)?, mr_agreement_check(&a, max + 1)?],
        )),
        "bialgebra" => bialgebra_check(&a, opts.product, opts.tensor, max),
        "hopf" => hopf_check(&a, opts.product, opts.tensor, max),
        "convolution" => convolution_suite(&a, opts.product, max, opts.seed),
        "convolution-delta" => convolution_delta_suite(&a, opts.product, max),
        "free" => free_suite(max),
        _ => unreachable!("suite names are checked above"),
    }
}

type Endo = GradedEndo<Perm>;

fn render_endo(e: &Endo) -> serde_json::Value {
    e.to_json()
}

/// Convolution laws on seeded random endomorphisms: two-sided unit (at
/// `bound + 1`),
/// associativity, `φʳ∗φˢ = φ^{r+s}` for `r + s <= 4`, antisymmetry and
/// Jacobi for the bracket.
pub fn convolution_suite(
    a: &Multiplicative<Ass>,
    kind: ProductKind,
    bound: usize,
    seed: u64,
) -> Result<Report> {
    let mut rep = ReportBuilder::new("convolution", bound);
    rep.note(format!("product: {kind}, seed: {seed}"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let conv = |u: &Endo, v: &Endo| convolve(a, kind, u, v);
    let seed_input = |law: &str| vec![json!({ "seed": seed, "law": law })];

    // the unit is checked one arity further out
    let e1 = unit(a, bound + 1)?;
    for j in 0..3 {
        let f = random_endo(a, bound + 1, &mut rng)?;
        rep.case("unit.left", &conv(&e1, &f)?, &f, render_endo, || {
            vec![json!({ "seed": seed, "endo": j })]
        });
        rep.case("unit.right", &conv(&f, &e1)?, &f, render_endo, || {
            vec![json!({ "seed": seed, "endo": j })]
        });
    }
    let e = unit(a, bound)?;
    let randoms: Vec<Endo> = (0..3)
        .map(|_| random_endo(a, bound, &mut rng))
        .collect::<Result<_>>()?;
    let [f, g, h] = [&randoms[0], &randoms[1], &randoms[2]];
    rep.case(
        "associativity",
        &conv(&conv(f, g)?, h)?,
        &conv(f, &conv(g, h)?)?,
        render_endo,
        || seed_input("associativity"),
    );

    let phis: Vec<Endo> = (0..=4)
        .map(|k| adams(a, kind, k, bound))
        .collect::<Result<_>>()?;
    rep.case("adams.zero", &phis[0], &e, render_endo, Vec::new);
    rep.case(
        "adams.one",
        &phis[1],
        &identity(a, bound)?,
        render_endo,
        Vec::new,
    );
    for r in 0..=4 {
        for s in 0..=4 - r {
            rep.case(
                "adams.power",
                &conv(&phis[r], &phis[s])?,
                &phis[r + s],
                render_endo,
                || vec![json!(r), json!(s)],
            );
        }
    }

    let zero = Endo::zero(bound);
    let br = |x: &Endo, y: &Endo| lie_bracket(a, kind, x, y);
    rep.case(
        "bracket.alternating",
        &br(f, f)?,
        &zero,
        render_endo,
        || seed_input("bracket.alternating"),
    );
    rep.case(
        "bracket.antisymmetry",
        &br(f, g)?,
        &br(g, f)?.scale(&-crate::scalar::Rational::one()),
        render_endo,
        || seed_input("bracket.antisymmetry"),
    );
    let jacobi = br(&br(f, g)?, h)?
        .add(&br(&br(g, h)?, f)?)?
        .add(&br(&br(h, f)?, g)?)?;
    rep.case("bracket.jacobi", &jacobi, &zero, render_endo, || {
        seed_input("bracket.jacobi")
    });
    Ok(rep.finish())
}

/// Commutation with `δ` of `I`, `η∘ε` and `φ²`, and of their convolutions
/// with `I`. These are recorded verdicts.
pub fn convolution_delta_suite(
    a: &Multiplicative<Ass>,
    kind: ProductKind,
    bound: usize,
) -> Result<Report> {
    let id = identity(a, bound)?;
    let parts = vec![
        relabel(
            delta_commutation_check(a, kind, &id, std::slice::from_ref(&id))?,
            "identity",
        ),
        relabel(
            delta_commutation_check(a, kind, &unit(a, bound)?, std::slice::from_ref(&id))?,
            "unit",
        ),
        relabel(
            delta_commutation_check(a, kind, &adams(a, kind, 2, bound)?, &[])?,
            "adams2",
        ),
    ];
    let mut r = Report::merge("convolution.delta", bound, parts);
    r.notes.insert(0, format!("product: {kind}"));
    Ok(r)
}

fn relabel(mut r: Report, prefix: &str) -> Report {
    for c in &mut r.counterexamples {
        c.law = format!("{prefix}.{}", c.law);
    }
    r.notes = r
        .notes
        .into_iter()
        .map(|n| format!("{prefix}.{n}"))
        .collect();
    r
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Quotient dimensions of the associative and Lie presentations against
/// `n!` and `(n-1)!`, boundary stability, and vanishing of the associative
/// ideal under `ν ↦ 12` in the permutation operad.
pub fn free_suite(max: usize) -> Result<Report> {
    let mut rep = ReportBuilder::new("free", max);
    let assoc = Presentation::assoc();
    let lie = Presentation::lie();
    for n in 1..=max {
        let q = quotient_dim(&assoc, n, max)?;
        rep.case(
            "assoc.dim",
            &q.dim,
            &factorial(n),
            |d| json!(d),
            || vec![json!(n)],
        );
        rep.case(
            "assoc.boundary",
            &q.boundary_stable,
            &true,
            |b| json!(b),
            || vec![json!(n)],
        );
    }
    for n in 2..=max {
        let q = quotient_dim(&lie, n, max)?;
        rep.case(
            "lie.dim",
            &q.dim,
            &factorial(n - 1),
            |d| json!(d),
            || vec![json!(n)],
        );
        rep.case(
            "lie.boundary",
            &q.boundary_stable,
            &true,
            |b| json!(b),
            || vec![json!(n)],
        );
    }
    let sat = saturate(&assoc, max)?;
    let free = sat.free_operad();
    let assign = BTreeMap::from([("nu".to_string(), LinComb::basis(Perm::identity(2)))]);
    for n in 0..=max {
        for row in sat.span(n).rows() {
            let image = free.evaluate_lc(row, &assign, &Ass)?;
            rep.case(
                "assoc.kernel",
                &image,
                &LinComb::zero(),
                |v| v.to_json(),
                || vec![row.to_json()],
            );
        }
    }
    Ok(rep.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("nope", &SuiteOptions::default()).is_err());
    }

    #[test]
    fn small_runs() {
        let opts = SuiteOptions {
            max_arity: Some(2),
            ..SuiteOptions::default()
        };
        for s in [
            "operad",
            "cosimplicial",
            "leibniz",
            "coalgebra",
            "convolution",
            "free",
        ] {
            let r = run_suite(s, &opts).unwrap();
            assert!(r.passed(), "{s}: {r:?}");
        }
    }
}
