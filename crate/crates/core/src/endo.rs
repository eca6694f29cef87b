//! Arity-preserving endomorphisms up to an arity bound, convolution, Adams
//! operations and the commutator bracket.

use std::collections::BTreeMap;

use rand::Rng;
use serde_json::{json, Map, Value};

use crate::cosimplicial::{coboundary, lower_tilde, upper_tilde};
use crate::error::{Error, Result};
use crate::hopf::{product, ProductKind};
use crate::lincomb::{BasisKey, LinComb};
use crate::operad::{Multiplicative, Operad};
use crate::report::{Report, ReportBuilder};
use crate::scalar::Rational;

/// A linear map on each arity component `0..=arity_bound`, stored as the
/// images of basis elements. Missing keys map to zero.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedEndo<K: Ord> {
    arity_bound: usize,
    maps: Vec<BTreeMap<K, LinComb<K>>>,
}

impl<K: BasisKey> GradedEndo<K> {
    pub fn zero(arity_bound: usize) -> Self {
        GradedEndo {
            arity_bound,
            maps: vec![BTreeMap::new(); arity_bound + 1],
        }
    }

    pub fn arity_bound(&self) -> usize {
        self.arity_bound
    }

    /// Builds an endomorphism from basis images, checking that each image
    /// stays in the arity of its key.
    pub fn from_images<O: Operad<Key = K>>(
        op: &O,
        arity_bound: usize,
        images: impl IntoIterator<Item = (K, LinComb<K>)>,
    ) -> Result<Self> {
        let mut e = Self::zero(arity_bound);
        for (k, v) in images {
            let n = op.arity(&k);
            if n > arity_bound {
                return Err(Error::ArityCap {
                    arity: n,
                    cap: arity_bound,
                });
            }
            if let Some(bad) = v.keys().find(|t| op.arity(t) != n) {
                return Err(Error::ArityMismatch {
                    expected: n,
                    actual: op.arity(bad),
                });
            }
            if !v.is_zero() {
                e.maps[n].insert(k, v);
            }
        }
        Ok(e)
    }

    pub fn image(&self, n: usize, k: &K) -> LinComb<K> {
        self.maps
            .get(n)
            .and_then(|m| m.get(k))
            .cloned()
            .unwrap_or_default()
    }

    /// Applies the map to an element whose keys have arities `<= bound`.
    pub fn apply<O: Operad<Key = K>>(&self, op: &O, x: &LinComb<K>) -> Result<LinComb<K>> {
        x.try_map_linear(|k| {
            let n = op.arity(k);
            if n > self.arity_bound {
                return Err(Error::ArityCap {
                    arity: n,
                    cap: self.arity_bound,
                });
            }
            Ok(self.image(n, k))
        })
    }

    fn check_bound(&self, other: &Self) -> Result<()> {
        if self.arity_bound != other.arity_bound {
            return Err(Error::BoundMismatch(self.arity_bound, other.arity_bound));
        }
        Ok(())
    }

    fn combine(&self, other: &Self, c: &Rational) -> Result<Self> {
        self.check_bound(other)?;
        let mut out = self.clone();
        for (n, m) in other.maps.iter().enumerate() {
            for (k, v) in m {
                let mut w = out.image(n, k);
                w.add_scaled(c, v);
                if w.is_zero() {
                    out.maps[n].remove(k);
                } else {
                    out.maps[n].insert(k.clone(), w);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, &Rational::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, &-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let maps = self
            .maps
            .iter()
            .map(|m| {
                m.iter()
                    .map(|(k, v)| (k.clone(), v.scale(c)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        GradedEndo {
            arity_bound: self.arity_bound,
            maps,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(BTreeMap::is_empty)
    }

    /// `{"arityBound": n, "maps": {"1": {"<key>": LinComb, ...}, ...}}`.
    /// Keys whose JSON form is not a string are written as compact JSON text.
    pub fn to_json(&self) -> Value {
        let mut maps = Map::new();
        for (n, m) in self.maps.iter().enumerate() {
            if m.is_empty() {
                continue;
            }
            let block: Map<String, Value> = m
                .iter()
                .map(|(k, v)| (key_string(k), v.to_json()))
                .collect();
            maps.insert(n.to_string(), Value::Object(block));
        }
        json!({ "arityBound": self.arity_bound, "maps": maps })
    }

    pub fn from_json<O: Operad<Key = K>>(op: &O, v: &Value) -> Result<Self> {
        let bound = v
            .get("arityBound")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Json("endomorphism needs an integer \"arityBound\"".into()))?
            as usize;
        let mut images = Vec::new();
        if let Some(maps) = v.get("maps") {
            let maps = maps
                .as_object()
                .ok_or_else(|| Error::Json("\"maps\" must be an object".into()))?;
            for (n, block) in maps {
                let n: usize = n
                    .parse()
                    .map_err(|_| Error::Json(format!("arity label {n:?} is not an integer")))?;
                let block = block
                    .as_object()
                    .ok_or_else(|| Error::Json(format!("maps[{n}] must be an object")))?;
                for (ks, img) in block {
                    let k = key_from_string::<K>(ks)?;
                    if op.arity(&k) != n {
                        return Err(Error::ArityMismatch {
                            expected: n,
                            actual: op.arity(&k),
                        });
                    }
                    images.push((k, LinComb::from_json(img)?));
                }
            }
        }
        Self::from_images(op, bound, images)
    }
}

fn key_string<K: BasisKey>(k: &K) -> String {
    match k.to_json() {
        Value::String(s) => s,
        other => other.to_string(),
    }
}

fn key_from_string<K: BasisKey>(s: &str) -> Result<K> {
    K::from_json(&Value::String(s.to_string())).or_else(|e| {
        serde_json::from_str::<Value>(s)
            .ok()
            .map_or(Err(e), |v| K::from_json(&v))
    })
}

/// The identity `I`.
pub fn identity<O: Operad>(
    m: &Multiplicative<O>,
    arity_bound: usize,
) -> Result<GradedEndo<O::Key>> {
    let op = m.operad();
    let mut images = Vec::new();
    for n in 0..=arity_bound {
        for k in op.basis(n)? {
            images.push((k.clone(), LinComb::basis(k)));
        }
    }
    GradedEndo::from_images(op, arity_bound, images)
}

/// `η∘ε`, the convolution unit.
pub fn unit<O: Operad>(m: &Multiplicative<O>, arity_bound: usize) -> Result<GradedEndo<O::Key>> {
    let base = m.base_key().clone();
    GradedEndo::from_images(
        m.operad(),
        arity_bound,
        [(base.clone(), LinComb::basis(base))],
    )
}

/// `(u∗v)(x) = Σ_j m(u(x'_j), v(x''_j))` over the coproduct of `x`.
pub fn convolve<O: Operad>(
    m: &Multiplicative<O>,
    kind: ProductKind,
    u: &GradedEndo<O::Key>,
    v: &GradedEndo<O::Key>,
) -> Result<GradedEndo<O::Key>> {
    u.check_bound(v)?;
    let op = m.operad();
    let mut images = Vec::new();
    for n in 0..=u.arity_bound {
        for k in op.basis(n)? {
            let b = LinComb::basis(k.clone());
            let mut acc = LinComb::zero();
            for j in 0..=n {
                let left = u.apply(op, &upper_tilde(m, j, &b)?)?;
                if left.is_zero() {
                    continue;
                }
                let right = v.apply(op, &lower_tilde(m, j, &b)?)?;
                acc = acc + product(m, kind, &left, &right)?;
            }
            images.push((k, acc));
        }
    }
    GradedEndo::from_images(op, u.arity_bound, images)
}

/// `φ⁰ = η∘ε` and `φᵏ = I∗⋯∗I` with `k` factors.
pub fn adams<O: Operad>(
    m: &Multiplicative<O>,
    kind: ProductKind,
    k: usize,
    arity_bound: usize,
) -> Result<GradedEndo<O::Key>> {
    let id = identity(m, arity_bound)?;
    let mut acc = unit(m, arity_bound)?;
    for _ in 0..k {
        acc = convolve(m, kind, &acc, &id)?;
    }
    Ok(acc)
}

/// `[f, g] = f∗g − g∗f`.
pub fn lie_bracket<O: Operad>(
    m: &Multiplicative<O>,
    kind: ProductKind,
    f: &GradedEndo<O::Key>,
    g: &GradedEndo<O::Key>,
) -> Result<GradedEndo<O::Key>> {
    convolve(m, kind, f, g)?.sub(&convolve(m, kind, g, f)?)
}

/// An endomorphism with random small rational entries on every basis
/// element, used by the randomized checks.
pub fn random_endo<O: Operad, R: Rng>(
    m: &Multiplicative<O>,
    arity_bound: usize,
    rng: &mut R,
) -> Result<GradedEndo<O::Key>> {
    let op = m.operad();
    let mut images = Vec::new();
    for n in 0..=arity_bound {
        let basis = op.basis(n)?;
        for k in &basis {
            let mut img = LinComb::zero();
            for t in &basis {
                if rng.gen_bool(0.5) {
                    let num = rng.gen_range(-4i64..=4);
                    let den = rng.gen_range(1i64..=3);
                    img.add_term(t.clone(), Rational::new(num, den));
                }
            }
            images.push((k.clone(), img));
        }
    }
    GradedEndo::from_images(op, arity_bound, images)
}

fn render<K: BasisKey>(x: &LinComb<K>) -> Value {
    x.to_json()
}

fn delta_laws<O: Operad>(
    m: &Multiplicative<O>,
    law: &str,
    u: &GradedEndo<O::Key>,
    rep: &mut ReportBuilder,
) -> Result<()> {
    let op = m.operad();
    for n in 0..u.arity_bound {
        for k in op.basis(n)? {
            let x = LinComb::basis(k.clone());
            let lhs = coboundary(m, &u.apply(op, &x)?)?;
            let rhs = u.apply(op, &coboundary(m, &x)?)?;
            rep.case(law, &lhs, &rhs, render, || vec![k.to_json()]);
        }
    }
    Ok(())
}

/// Whether `u` commutes with `δ` (comparing arity `n` before `δ` with arity
/// `n + 1` after it), and whether each `u∗w` for `w` in `others` does.
pub fn delta_commutation_check<O: Operad>(
    m: &Multiplicative<O>,
    kind: ProductKind,
    u: &GradedEndo<O::Key>,
    others: &[GradedEndo<O::Key>],
) -> Result<Report> {
    let mut rep = ReportBuilder::new("convolution.delta", u.arity_bound);
    delta_laws(m, "delta.commutes", u, &mut rep)?;
    for w in others {
        delta_laws(
            m,
            "delta.commutes.convolution",
            &convolve(m, kind, u, w)?,
            &mut rep,
        )?;
    }
    Ok(rep.finish())
}
