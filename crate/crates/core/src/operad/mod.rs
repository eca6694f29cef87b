//! Symmetric operads given by their action on a basis, extended linearly.

mod ass;
mod check;

pub use ass::Ass;
pub use check::check_operad_axioms;

use crate::error::{Error, Result};
use crate::lincomb::{BasisKey, LinComb};
use crate::perm::Perm;

/// A symmetric operad presented on a basis of each arity component.
///
/// Everything else (bilinear composition, total composition, restrictions,
/// the cosimplicial and Hopf layers) is derived from these few maps.
pub trait Operad {
    type Key: BasisKey;

    fn name(&self) -> String;

    /// Arity of a basis element.
    fn arity(&self, k: &Self::Key) -> usize;

    /// Basis of the arity-`n` component in a fixed order.
    fn basis(&self, n: usize) -> Result<Vec<Self::Key>>;

    /// The operad unit, a basis element of arity one.
    fn unit(&self) -> Self::Key;

    /// `x ∘_i y` on basis elements.
    fn compose_basis(&self, x: &Self::Key, i: usize, y: &Self::Key) -> Result<LinComb<Self::Key>>;

    /// Right action `x·σ` on basis elements.
    fn act_basis(&self, x: &Self::Key, sigma: &Perm) -> Result<LinComb<Self::Key>>;

    /// Largest arity the instance can represent, if bounded.
    fn arity_cap(&self) -> Option<usize> {
        None
    }
}

/// Arity of a homogeneous element; `None` for zero.
pub fn arity_of<O: Operad>(op: &O, x: &LinComb<O::Key>) -> Result<Option<usize>> {
    let mut it = x.keys().map(|k| op.arity(k));
    let Some(first) = it.next() else {
        return Ok(None);
    };
    if it.any(|a| a != first) {
        return Err(Error::Inhomogeneous);
    }
    Ok(Some(first))
}

/// Bilinear partial composition `x ∘_i y`.
pub fn partial_compose<O: Operad>(
    op: &O,
    x: &LinComb<O::Key>,
    i: usize,
    y: &LinComb<O::Key>,
) -> Result<LinComb<O::Key>> {
    if let Some(n) = arity_of(op, x)? {
        if i == 0 || i > n {
            return Err(Error::PositionOutOfRange {
                position: i,
                arity: n,
            });
        }
    }
    arity_of(op, y)?;
    x.try_bilinear(y, |a, b| op.compose_basis(a, i, b))
}

/// Linear right action `x·σ`.
pub fn act<O: Operad>(op: &O, x: &LinComb<O::Key>, sigma: &Perm) -> Result<LinComb<O::Key>> {
    x.try_map_linear(|k| op.act_basis(k, sigma))
}

/// Total composition `γ(x; y_1, ..., y_n) = (...((x ∘_n y_n) ∘_{n-1} y_{n-1}) ...) ∘_1 y_1`.
pub fn total_compose<O: Operad>(
    op: &O,
    x: &LinComb<O::Key>,
    args: &[LinComb<O::Key>],
) -> Result<LinComb<O::Key>> {
    let Some(n) = arity_of(op, x)? else {
        return Ok(LinComb::zero());
    };
    if args.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: args.len(),
        });
    }
    let mut acc = x.clone();
    for (idx, y) in args.iter().enumerate().rev() {
        acc = partial_compose(op, &acc, idx + 1, y)?;
    }
    Ok(acc)
}

/// A connected operad with a multiplication `μ` and base point `1₀` such that
/// `μ∘₁μ = μ∘₂μ` and `μ∘₁1₀ = 1 = μ∘₂1₀`. These relations, and the fact that
/// arity zero is spanned by the base point, are checked on construction.
#[derive(Clone, Debug)]
pub struct Multiplicative<O: Operad> {
    op: O,
    mu: LinComb<O::Key>,
    base: O::Key,
}

impl Multiplicative<Ass> {
    /// The permutation operad with `μ = 12` and `1₀ = []`.
    pub fn ass() -> Self {
        Multiplicative::new(Ass, LinComb::basis(Perm::identity(2)), Perm::empty())
            .expect("permutation operad is connected and multiplicative")
    }
}

impl<O: Operad> Multiplicative<O> {
    pub fn new(op: O, mu: LinComb<O::Key>, base: O::Key) -> Result<Self> {
        let zero = op.basis(0)?;
        if zero.len() != 1 || zero[0] != base {
            return Err(Error::Structure(format!(
                "arity 0 must be spanned by the base point, found basis {zero:?}"
            )));
        }
        if arity_of(&op, &mu)? != Some(2) {
            return Err(Error::Structure("multiplication must have arity 2".into()));
        }
        let lhs = partial_compose(&op, &mu, 1, &mu)?;
        let rhs = partial_compose(&op, &mu, 2, &mu)?;
        if lhs != rhs {
            return Err(Error::Structure("μ∘₁μ ≠ μ∘₂μ".into()));
        }
        let unit = LinComb::basis(op.unit());
        let point = LinComb::basis(base.clone());
        for i in 1..=2 {
            if partial_compose(&op, &mu, i, &point)? != unit {
                return Err(Error::Structure(format!("μ∘{i}1₀ ≠ 1")));
            }
        }
        Ok(Multiplicative { op, mu, base })
    }

    pub fn operad(&self) -> &O {
        &self.op
    }

    pub fn mu(&self) -> &LinComb<O::Key> {
        &self.mu
    }

    pub fn base_point(&self) -> LinComb<O::Key> {
        LinComb::basis(self.base.clone())
    }

    pub fn base_key(&self) -> &O::Key {
        &self.base
    }

    pub fn unit(&self) -> LinComb<O::Key> {
        LinComb::basis(self.op.unit())
    }

    pub fn compose(
        &self,
        x: &LinComb<O::Key>,
        i: usize,
        y: &LinComb<O::Key>,
    ) -> Result<LinComb<O::Key>> {
        partial_compose(&self.op, x, i, y)
    }

    /// `p|_S`: plug the unit at positions in `S` and the base point elsewhere.
    pub fn restrict(&self, p: &LinComb<O::Key>, subset: &[usize]) -> Result<LinComb<O::Key>> {
        let Some(n) = arity_of(&self.op, p)? else {
            return Ok(LinComb::zero());
        };
        let mut mask = vec![false; n];
        for &s in subset {
            if s == 0 || s > n || mask[s - 1] {
                return Err(Error::NotASubset(format!("{subset:?}"), n));
            }
            mask[s - 1] = true;
        }
        let args: Vec<_> = mask
            .iter()
            .map(|&keep| if keep { self.unit() } else { self.base_point() })
            .collect();
        total_compose(&self.op, p, &args)
    }
}
