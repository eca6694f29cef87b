use crate::error::Result;
use crate::lincomb::LinComb;
use crate::operad::Operad;
use crate::perm::Perm;

/// The associative operad: arity `n` is spanned by the permutations of `n`,
/// partial composition is substitution and the symmetric group acts by
/// `x·σ = x ∘ σ` on words.
#[derive(Clone, Copy, Debug, Default)]
pub struct Ass;

impl Operad for Ass {
    type Key = Perm;

    fn name(&self) -> String {
        "ass".to_string()
    }

    fn arity(&self, k: &Perm) -> usize {
        k.len()
    }

    fn basis(&self, n: usize) -> Result<Vec<Perm>> {
        Ok(Perm::all(n))
    }

    fn unit(&self) -> Perm {
        Perm::unit()
    }

    fn compose_basis(&self, x: &Perm, i: usize, y: &Perm) -> Result<LinComb<Perm>> {
        Ok(LinComb::basis(x.substitute(i, y)?))
    }

    fn act_basis(&self, x: &Perm, sigma: &Perm) -> Result<LinComb<Perm>> {
        Ok(LinComb::basis(x.right_act(sigma)?))
    }
}
