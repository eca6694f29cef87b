//! Bounded-arity saturation of the operadic ideal generated by relations.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::free::{FreeOperad, Presentation, TreeTerm};
use crate::linalg::RowSpace;
use crate::lincomb::LinComb;
use crate::operad::Operad;
use crate::perm::Perm;

/// The ideal generated by a presentation's relations, truncated at `cap`.
#[derive(Clone, Debug)]
pub struct Saturation {
    pub cap: usize,
    free: FreeOperad,
    spans: Vec<RowSpace<TreeTerm>>,
    free_dims: Vec<usize>,
    /// Vectors dropped because a result exceeded the node bound.
    pub truncated: usize,
}

impl Saturation {
    pub fn free_operad(&self) -> &FreeOperad {
        &self.free
    }

    pub fn span(&self, n: usize) -> &RowSpace<TreeTerm> {
        &self.spans[n]
    }

    pub fn free_dim(&self, n: usize) -> usize {
        self.free_dims[n]
    }

    pub fn ideal_dim(&self, n: usize) -> usize {
        self.spans[n].rank()
    }
}

fn within_bound(max_nodes: Option<usize>, v: &LinComb<TreeTerm>) -> bool {
    max_nodes.is_none_or(|b| v.keys().all(|t| t.node_count() <= b))
}

/// Closes the relations under the Σ-action and composition on both sides
/// with basis trees, keeping everything of arity `<= cap`.
///
/// Every vector that raises the rank of its arity slice is put on a work
/// list and expanded once; the span of expanded vectors is then closed under
/// all the operations, since they are linear.
pub fn saturate(p: &Presentation, cap: usize) -> Result<Saturation> {
    let free = p.free_operad();
    let max_nodes = p.max_nodes;
    let basis: Vec<Vec<TreeTerm>> = (0..=cap).map(|n| free.basis(n)).collect::<Result<_>>()?;
    let perms: Vec<Vec<Perm>> = (0..=cap).map(Perm::all).collect();
    let mut spans: Vec<RowSpace<TreeTerm>> = vec![RowSpace::new(); cap + 1];
    let mut work: VecDeque<(usize, LinComb<TreeTerm>)> = VecDeque::new();
    let mut truncated = 0;

    for r in &p.relations {
        let a = r.keys().next().map(TreeTerm::arity).unwrap_or(0);
        if a <= cap && spans[a].insert(r) {
            work.push_back((a, r.clone()));
        }
    }

    while let Some((a, v)) = work.pop_front() {
        let mut found: Vec<(usize, LinComb<TreeTerm>)> = Vec::new();
        for sigma in &perms[a] {
            found.push((a, v.try_map_linear(|t| free.act_basis(t, sigma))?));
        }
        for (m, ts) in basis.iter().enumerate() {
            for i in 1..=a {
                if a + m - 1 > cap {
                    break;
                }
                for t in ts {
                    found.push((
                        a + m - 1,
                        v.try_map_linear(|k| free.compose_basis(k, i, t))?,
                    ));
                }
            }
            if m == 0 || m + a - 1 > cap {
                continue;
            }
            for t in ts {
                for j in 1..=m {
                    found.push((
                        m + a - 1,
                        v.try_map_linear(|k| free.compose_basis(t, j, k))?,
                    ));
                }
            }
        }
        for (n, w) in found {
            if !within_bound(max_nodes, &w) {
                truncated += 1;
                continue;
            }
            if spans[n].insert(&w) {
                work.push_back((n, w));
            }
        }
    }

    let free_dims = basis.iter().map(Vec::len).collect();
    Ok(Saturation {
        cap,
        free,
        spans,
        free_dims,
        truncated,
    })
}

/// Reduced spanning set of the ideal's arity-`n` slice.
pub fn ideal_span(p: &Presentation, n: usize, cap: usize) -> Result<Vec<LinComb<TreeTerm>>> {
    if n > cap {
        return Err(Error::ArityCap { arity: n, cap });
    }
    let s = saturate(p, cap)?;
    Ok(s.span(n).rows().cloned().collect())
}

/// Outcome of a quotient-dimension computation, with the boundary check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct QuotientDim {
    pub arity: usize,
    pub cap: usize,
    pub free_dim: usize,
    pub ideal_dim: usize,
    pub dim: usize,
    pub boundary_stable: bool,
    /// `"monotone"` when no composition can lower arity, so the slice at
    /// `arity` cannot see anything above the cap; `"recomputed"` when the
    /// saturation was rerun at `cap + 1` and compared.
    pub boundary_check: String,
}

pub fn quotient_dim(p: &Presentation, n: usize, cap: usize) -> Result<QuotientDim> {
    if n > cap {
        return Err(Error::ArityCap { arity: n, cap });
    }
    let s = saturate(p, cap)?;
    let ideal_dim = s.ideal_dim(n);
    let free_dim = s.free_dim(n);
    let (boundary_stable, boundary_check) =
        if !p.free_operad().has_nullary_generators() && s.truncated == 0 {
            (true, "monotone")
        } else {
            let wider = saturate(p, cap + 1)?;
            let same = wider.ideal_dim(n) == ideal_dim && s.span(n).rows().eq(wider.span(n).rows());
            (same, "recomputed")
        };
    Ok(QuotientDim {
        arity: n,
        cap,
        free_dim,
        ideal_dim,
        dim: free_dim - ideal_dim,
        boundary_stable,
        boundary_check: boundary_check.to_string(),
    })
}

/// The quotient of the free operad by a saturated ideal, up to the cap.
/// Basis elements are the trees that are not pivots of the ideal; results
/// are brought to normal form by reduction against the ideal.
#[derive(Clone, Debug)]
pub struct QuotientOperad {
    sat: Saturation,
}

impl QuotientOperad {
    pub fn new(p: &Presentation, cap: usize) -> Result<Self> {
        Ok(QuotientOperad {
            sat: saturate(p, cap)?,
        })
    }

    pub fn saturation(&self) -> &Saturation {
        &self.sat
    }

    /// Normal form of a free-operad element.
    pub fn normal_form(&self, v: &LinComb<TreeTerm>) -> Result<LinComb<TreeTerm>> {
        let Some(n) = v.keys().next().map(TreeTerm::arity) else {
            return Ok(LinComb::zero());
        };
        if n > self.sat.cap {
            return Err(Error::ArityCap {
                arity: n,
                cap: self.sat.cap,
            });
        }
        Ok(self.sat.span(n).reduce(v))
    }
}

impl Operad for QuotientOperad {
    type Key = TreeTerm;

    fn name(&self) -> String {
        format!("{}/ideal(cap {})", self.sat.free.name(), self.sat.cap)
    }

    fn arity(&self, k: &TreeTerm) -> usize {
        k.arity()
    }

    fn basis(&self, n: usize) -> Result<Vec<TreeTerm>> {
        if n > self.sat.cap {
            return Err(Error::ArityCap {
                arity: n,
                cap: self.sat.cap,
            });
        }
        let span = self.sat.span(n);
        Ok(self
            .sat
            .free
            .basis(n)?
            .into_iter()
            .filter(|t| !span.is_pivot(t))
            .collect())
    }

    fn unit(&self) -> TreeTerm {
        TreeTerm::unit()
    }

    fn compose_basis(&self, x: &TreeTerm, i: usize, y: &TreeTerm) -> Result<LinComb<TreeTerm>> {
        self.normal_form(&self.sat.free.compose_basis(x, i, y)?)
    }

    fn act_basis(&self, x: &TreeTerm, sigma: &Perm) -> Result<LinComb<TreeTerm>> {
        self.normal_form(&self.sat.free.act_basis(x, sigma)?)
    }

    fn arity_cap(&self) -> Option<usize> {
        Some(self.sat.cap)
    }
}
