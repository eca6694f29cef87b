//! Products, coproduct, counit and antipode on a connected multiplicative
//! operad viewed as a graded vector space, with bialgebra and Hopf checks.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::cosimplicial::{coboundary, lower_tilde, upper_tilde};
use crate::error::{Error, Result};
use crate::lincomb::{BasisKey, LinComb, TensorKey};
use crate::operad::{act, Multiplicative, Operad};
use crate::perm::{shuffles, Perm};
use crate::report::{Report, ReportBuilder};
use crate::scalar::Rational;

type Lc<O> = LinComb<<O as Operad>::Key>;
type Key2<K> = TensorKey<K, K>;
type Key3<K> = TensorKey<K, TensorKey<K, K>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductKind {
    Odot,
    ShuffleUnsigned,
    ShuffleSigned,
}

impl FromStr for ProductKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "odot" => Ok(ProductKind::Odot),
            "shuffle" => Ok(ProductKind::ShuffleUnsigned),
            "shuffle-signed" => Ok(ProductKind::ShuffleSigned),
            other => Err(Error::Parse {
                input: other.to_string(),
                position: 1,
                message: "expected odot, shuffle or shuffle-signed".into(),
            }),
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Odot => "odot",
            ProductKind::ShuffleUnsigned => "shuffle",
            ProductKind::ShuffleSigned => "shuffle-signed",
        })
    }
}

/// How `(a⊗b)(c⊗d)` is formed: `ac⊗bd`, optionally with `(-1)^{|b||c|}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorConvention {
    Plain,
    ArityKoszul,
}

impl FromStr for TensorConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(TensorConvention::Plain),
            "koszul" => Ok(TensorConvention::ArityKoszul),
            other => Err(Error::Parse {
                input: other.to_string(),
                position: 1,
                message: "expected plain or koszul".into(),
            }),
        }
    }
}

impl fmt::Display for TensorConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TensorConvention::Plain => "plain",
            TensorConvention::ArityKoszul => "koszul",
        })
    }
}

/// `x⊙y = (μ∘₂y)∘₁x`.
pub fn odot<O: Operad>(m: &Multiplicative<O>, x: &Lc<O>, y: &Lc<O>) -> Result<Lc<O>> {
    x.try_bilinear(y, |a, b| {
        let left = m.compose(m.mu(), 2, &LinComb::basis(b.clone()))?;
        m.compose(&left, 1, &LinComb::basis(a.clone()))
    })
}

/// `x∇y = Σ_σ (±) (x⊙y)·σ⁻¹` over the `(p, q)`-shuffles.
pub fn shuffle_product<O: Operad>(
    m: &Multiplicative<O>,
    x: &Lc<O>,
    y: &Lc<O>,
    signed: bool,
) -> Result<Lc<O>> {
    let op = m.operad();
    x.try_bilinear(y, |a, b| {
        let (p, q) = (op.arity(a), op.arity(b));
        let xy = odot(m, &LinComb::basis(a.clone()), &LinComb::basis(b.clone()))?;
        let mut out = LinComb::zero();
        for sigma in shuffles(p, q) {
            let c = if signed {
                Rational::from(sigma.sign())
            } else {
                Rational::one()
            };
            out.add_scaled(&c, &act(op, &xy, &sigma.inverse())?);
        }
        Ok(out)
    })
}

pub fn product<O: Operad>(
    m: &Multiplicative<O>,
    kind: ProductKind,
    x: &Lc<O>,
    y: &Lc<O>,
) -> Result<Lc<O>> {
    match kind {
        ProductKind::Odot => odot(m, x, y),
        ProductKind::ShuffleUnsigned => shuffle_product(m, x, y, false),
        ProductKind::ShuffleSigned => shuffle_product(m, x, y, true),
    }
}

/// `Δx = Σ_j s̃(keep j)x ⊗ s̃₁(drop j)x`, term `j` in arities `(j, k - j)`.
pub fn coproduct<O: Operad>(m: &Multiplicative<O>, x: &Lc<O>) -> Result<LinComb<Key2<O::Key>>> {
    let op = m.operad();
    x.try_map_linear(|k| {
        let b = LinComb::basis(k.clone());
        let mut out = LinComb::zero();
        for j in 0..=op.arity(k) {
            out = out + upper_tilde(m, j, &b)?.tensor(&lower_tilde(m, j, &b)?);
        }
        Ok(out)
    })
}

/// Deconcatenation followed by standardization of both pieces.
pub fn mr_coproduct(x: &LinComb<Perm>) -> LinComb<Key2<Perm>> {
    x.map_linear(|s| {
        (0..=s.len())
            .map(|j| {
                let (a, b) = s.split_at(j);
                (TensorKey::new(a, b), Rational::one())
            })
            .collect()
    })
}

/// Coefficient of the base point.
pub fn counit<O: Operad>(m: &Multiplicative<O>, x: &Lc<O>) -> Rational {
    x.coeff(m.base_key())
}

pub fn coaugmentation<O: Operad>(m: &Multiplicative<O>, c: &Rational) -> Lc<O> {
    LinComb::term(c.clone(), m.base_key().clone())
}

/// Antipode for the product `kind`, computed by recursion on arity.
///
/// With `Δy = λ·1₀⊗y + Σ_{0<j<k} y'_j⊗y''_j + y⊗λ'·1₀`, the left antipode
/// identity gives `A(y) = -(λ·y + Σ m(A(y'_j), y''_j)) / λ'`, and `A(1₀) = 1₀`.
pub fn antipode<O: Operad>(m: &Multiplicative<O>, kind: ProductKind, x: &Lc<O>) -> Result<Lc<O>> {
    let mut memo = BTreeMap::new();
    antipode_memo(m, kind, x, &mut memo)
}

pub fn antipode_memo<O: Operad>(
    m: &Multiplicative<O>,
    kind: ProductKind,
    x: &Lc<O>,
    memo: &mut BTreeMap<O::Key, Lc<O>>,
) -> Result<Lc<O>> {
    let mut out = LinComb::zero();
    for (k, c) in x.iter() {
        let image = antipode_basis(m, kind, k, memo)?;
        out.add_scaled(c, &image);
    }
    Ok(out)
}

fn antipode_basis<O: Operad>(
    m: &Multiplicative<O>,
    kind: ProductKind,
    y: &O::Key,
    memo: &mut BTreeMap<O::Key, Lc<O>>,
) -> Result<Lc<O>> {
    if let Some(v) = memo.get(y) {
        return Ok(v.clone());
    }
    let k = m.operad().arity(y);
    let b = LinComb::basis(y.clone());
    let value = if k == 0 {
        b
    } else {
        let lambda = counit(m, &upper_tilde(m, 0, &b)?);
        let lambda_end = counit(m, &lower_tilde(m, k, &b)?);
        let inv = lambda_end.recip().ok_or_else(|| {
            Error::Structure(format!("dropping every input of {y:?} gives no base point"))
        })?;
        let mut acc = b.scale(&lambda);
        for j in 1..k {
            let left = antipode_memo(m, kind, &upper_tilde(m, j, &b)?, memo)?;
            acc = acc + product(m, kind, &left, &lower_tilde(m, j, &b)?)?;
        }
        -acc.scale(&inv)
    };
    memo.insert(y.clone(), value.clone());
    Ok(value)
}

fn arity2<O: Operad>(m: &Multiplicative<O>, k: &O::Key) -> usize {
    m.operad().arity(k)
}

/// `(a⊗b)(c⊗d) = ± m(a,c) ⊗ m(b,d)`.
pub fn tensor_product<O: Operad>(
    m: &Multiplicative<O>,
    kind: ProductKind,
    conv: TensorConvention,
    u: &LinComb<Key2<O::Key>>,
    v: &LinComb<Key2<O::Key>>,
) -> Result<LinComb<Key2<O::Key>>> {
    u.try_bilinear(v, |ab, cd| {
        let ac = product(
            m,
            kind,
            &LinComb::basis(ab.left.clone()),
            &LinComb::basis(cd.left.clone()),
        )?;
        let bd = product(
            m,
            kind,
            &LinComb::basis(ab.right.clone()),
            &LinComb::basis(cd.right.clone()),
        )?;
        let t = ac.tensor(&bd);
        Ok(match conv {
            TensorConvention::Plain => t,
            TensorConvention::ArityKoszul => {
                let e = arity2(m, &ab.right) * arity2(m, &cd.left);
                t.scale(&Rational::sign_power(e))
            }
        })
    })
}

fn render<K: BasisKey>(x: &LinComb<K>) -> Value {
    x.to_json()
}

fn bases<O: Operad>(m: &Multiplicative<O>, max_arity: usize) -> Result<Vec<Vec<O::Key>>> {
    (0..=max_arity).map(|n| m.operad().basis(n)).collect()
}

/// `Δ(m(x, y))` against `m_⊗(Δx, Δy)` for basis pairs with `|x| + |y| <= max_total`.
pub fn bialgebra_check<O: Operad>(
    m: &Multiplicative<O>,
    kind: ProductKind,
    conv: TensorConvention,
    max_total: usize,
) -> Result<Report> {
    let mut rep = ReportBuilder::new("bialgebra", max_total);
    rep.note(format!("product: {kind}, tensor: {conv}"));
    let bs = bases(m, max_total)?;
    for (p, xs) in bs.iter().enumerate() {
        for ys in bs.iter().take(max_total - p + 1) {
            for kx in xs {
                let x = LinComb::basis(kx.clone());
                let dx = coproduct(m, &x)?;
                for ky in ys {
                    let y = LinComb::basis(ky.clone());
                    let lhs = coproduct(m, &product(m, kind, &x, &y)?)?;
                    let rhs = tensor_product(m, kind, conv, &dx, &coproduct(m, &y)?)?;
                    rep.case("bialgebra", &lhs, &rhs, render, || {
                        vec![kx.to_json(), ky.to_json()]
                    });
                }
            }
        }
    }
    Ok(rep.finish())
}

fn assoc_left<K: Ord + Clone>(x: &LinComb<TensorKey<Key2<K>, K>>) -> LinComb<Key3<K>> {
    x.map_linear(|t| {
        LinComb::basis(TensorKey::new(
            t.left.left.clone(),
            TensorKey::new(t.left.right.clone(), t.right.clone()),
        ))
    })
}

/// `(id⊗Δ)Δ = (Δ⊗id)Δ` and both counit laws.
pub fn coalgebra_laws<O: Operad>(
    m: &Multiplicative<O>,
    max_arity: usize,
    rep: &mut ReportBuilder,
) -> Result<()> {
    for xs in bases(m, max_arity)? {
        for kx in xs {
            let x = LinComb::basis(kx.clone());
            let d = coproduct(m, &x)?;
            let right = d.try_map_linear(|t| {
                let tail = coproduct(m, &LinComb::basis(t.right.clone()))?;
                Ok::<_, Error>(LinComb::basis(t.left.clone()).tensor(&tail))
            })?;
            let left = d.try_map_linear(|t| {
                let head = coproduct(m, &LinComb::basis(t.left.clone()))?;
                Ok::<_, Error>(head.tensor(&LinComb::basis(t.right.clone())))
            })?;
            rep.case(
                "coassociativity",
                &assoc_left(&left),
                &right,
                render,
                || vec![kx.to_json()],
            );
            let cl: Lc<O> = d.map_linear(|t| {
                LinComb::term(counit(m, &LinComb::basis(t.left.clone())), t.right.clone())
            });
            rep.case("counit.left", &cl, &x, render, || vec![kx.to_json()]);
            let cr: Lc<O> = d.map_linear(|t| {
                LinComb::term(counit(m, &LinComb::basis(t.right.clone())), t.left.clone())
            });
            rep.case("counit.right", &cr, &x, render, || vec![kx.to_json()]);
        }
    }
    Ok(())
}

/// Coassociativity and counit laws, suite `coalgebra`.
pub fn coalgebra_check<O: Operad>(m: &Multiplicative<O>, max_arity: usize) -> Result<Report> {
    let mut rep = ReportBuilder::new("coalgebra", max_arity);
    coalgebra_laws(m, max_arity, &mut rep)?;
    Ok(rep.finish())
}

/// `Δ` against deconcatenation-standardization on permutations.
pub fn mr_agreement_check(
    m: &Multiplicative<crate::operad::Ass>,
    max_arity: usize,
) -> Result<Report> {
    let mut rep = ReportBuilder::new("coalgebra.mr", max_arity);
    for n in 0..=max_arity {
        for s in Perm::all(n) {
            let x = LinComb::basis(s.clone());
            rep.case(
                "coproduct.mr",
                &coproduct(m, &x)?,
                &mr_coproduct(&x),
                render,
                || vec![json!(s.to_string())],
            );
        }
    }
    Ok(rep.finish())
}

/// The Hopf-algebra laws for one product and tensor convention: the coalgebra
/// laws, `Δδ = (δ⊗id + id⊗δ)Δ`, both antipode identities, and multiplicativity
/// of the counit.
pub fn hopf_check<O: Operad>(
    m: &Multiplicative<O>,
    kind: ProductKind,
    conv: TensorConvention,
    max_arity: usize,
) -> Result<Report> {
    let mut rep = ReportBuilder::new("hopf", max_arity);
    rep.note(format!("product: {kind}, tensor: {conv}"));
    coalgebra_laws(m, max_arity, &mut rep)?;
    let bs = bases(m, max_arity)?;
    let mut memo = BTreeMap::new();
    for (n, xs) in bs.iter().enumerate() {
        for kx in xs {
            let x = LinComb::basis(kx.clone());
            let d = coproduct(m, &x)?;

            if n < max_arity {
                let lhs = coproduct(m, &coboundary(m, &x)?)?;
                let rhs = d.try_map_linear(|t| {
                    let a = LinComb::basis(t.left.clone());
                    let b = LinComb::basis(t.right.clone());
                    let s = match conv {
                        TensorConvention::Plain => Rational::one(),
                        TensorConvention::ArityKoszul => Rational::sign_power(arity2(m, &t.left)),
                    };
                    Ok::<_, Error>(
                        coboundary(m, &a)?.tensor(&b) + a.tensor(&coboundary(m, &b)?).scale(&s),
                    )
                })?;
                rep.case("coderivation", &lhs, &rhs, render, || vec![kx.to_json()]);
            }

            let expected = coaugmentation(m, &counit(m, &x));
            let mut left = LinComb::zero();
            let mut right = LinComb::zero();
            for (t, c) in d.iter() {
                let a = LinComb::basis(t.left.clone());
                let b = LinComb::basis(t.right.clone());
                let al = antipode_memo(m, kind, &a, &mut memo)?;
                left.add_scaled(c, &product(m, kind, &al, &b)?);
                let br = antipode_memo(m, kind, &b, &mut memo)?;
                right.add_scaled(c, &product(m, kind, &a, &br)?);
            }
            rep.case("antipode.left", &left, &expected, render, || {
                vec![kx.to_json()]
            });
            rep.case("antipode.right", &right, &expected, render, || {
                vec![kx.to_json()]
            });
        }
    }
    for (p, xs) in bs.iter().enumerate() {
        for ys in bs.iter().take(max_arity - p + 1) {
            for kx in xs {
                for ky in ys {
                    let x = LinComb::basis(kx.clone());
                    let y = LinComb::basis(ky.clone());
                    let lhs = counit(m, &product(m, kind, &x, &y)?);
                    let rhs = counit(m, &x) * counit(m, &y);
                    rep.case(
                        "counit.multiplicative",
                        &lhs,
                        &rhs,
                        |r| json!(r.to_string()),
                        || vec![kx.to_json(), ky.to_json()],
                    );
                }
            }
        }
    }
    Ok(rep.finish())
}
