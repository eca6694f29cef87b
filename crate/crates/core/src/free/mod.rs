//! Free symmetric operads on a set of generators, evaluation into other
//! operads, and presentations by generators and relations.

mod ideal;
mod presentation;
mod tree;

pub use ideal::{ideal_span, quotient_dim, saturate, QuotientDim, QuotientOperad, Saturation};
pub use presentation::Presentation;
pub use tree::{Generator, TreeTerm};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::operad::{act, total_compose, Operad};
use crate::perm::Perm;

/// The free operad on `generators`.
///
/// With only generators of arity two or more every arity component is
/// finite. Generators of arity zero or one make the components infinite, in
/// which case enumeration needs `max_nodes`.
#[derive(Clone, Debug)]
pub struct FreeOperad {
    generators: Vec<Generator>,
    max_nodes: Option<usize>,
}

impl FreeOperad {
    pub fn new(generators: Vec<Generator>) -> Result<Self> {
        for (j, g) in generators.iter().enumerate() {
            if generators[..j].iter().any(|h| h.id == g.id) {
                return Err(Error::Presentation(format!(
                    "duplicate generator {:?}",
                    g.id
                )));
            }
        }
        Ok(FreeOperad {
            generators,
            max_nodes: None,
        })
    }

    /// Restricts enumeration to trees with at most `n` generator nodes.
    pub fn with_max_nodes(mut self, n: usize) -> Self {
        self.max_nodes = Some(n);
        self
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, id: &str) -> Result<&Generator> {
        self.generators
            .iter()
            .find(|g| g.id == id)
            .ok_or_else(|| Error::UnknownGenerator(id.to_string()))
    }

    pub fn has_low_arity_generators(&self) -> bool {
        self.generators.iter().any(|g| g.arity < 2)
    }

    pub fn has_nullary_generators(&self) -> bool {
        self.generators.iter().any(|g| g.arity == 0)
    }

    /// Tree shapes (leaves labelled in planar order `1..=n`) with at most
    /// `budget` nodes.
    fn shapes(&self, n: usize, budget: usize, memo: &mut ShapeMemo) -> Vec<(TreeTerm, usize)> {
        if let Some(v) = memo.get(&(n, budget)) {
            return v.clone();
        }
        let mut out = Vec::new();
        if n == 1 {
            out.push((TreeTerm::Leaf(1), 0));
        }
        if budget > 0 {
            for g in &self.generators {
                let mut partial = Vec::new();
                self.fill_children(
                    g.arity,
                    n,
                    budget - 1,
                    &mut Vec::new(),
                    0,
                    &mut partial,
                    memo,
                );
                for (children, used) in partial {
                    let t = TreeTerm::node(g.id.clone(), children);
                    out.push((relabel_planar(&t), used + 1));
                }
            }
        }
        memo.insert((n, budget), out.clone());
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn fill_children(
        &self,
        slots: usize,
        leaves: usize,
        budget: usize,
        acc: &mut Vec<TreeTerm>,
        used: usize,
        out: &mut Vec<(Vec<TreeTerm>, usize)>,
        memo: &mut ShapeMemo,
    ) {
        if slots == 0 {
            if leaves == 0 {
                out.push((acc.clone(), used));
            }
            return;
        }
        for k in 0..=leaves {
            for (child, c) in self.shapes(k, budget, memo) {
                acc.push(child);
                self.fill_children(slots - 1, leaves - k, budget - c, acc, used + c, out, memo);
                acc.pop();
            }
        }
    }

    /// Evaluates a tree in `target`, sending each generator to `assign[id]`.
    pub fn evaluate<O: Operad>(
        &self,
        t: &TreeTerm,
        assign: &BTreeMap<String, LinComb<O::Key>>,
        target: &O,
    ) -> Result<LinComb<O::Key>> {
        for g in &self.generators {
            let image = assign
                .get(&g.id)
                .ok_or_else(|| Error::UnknownGenerator(g.id.clone()))?;
            if let Some(a) = crate::operad::arity_of(target, image)? {
                if a != g.arity {
                    return Err(Error::ArityMismatch {
                        expected: g.arity,
                        actual: a,
                    });
                }
            }
        }
        t.validate(&self.generators)?;
        eval_rec(t, assign, target)
    }

    pub fn evaluate_lc<O: Operad>(
        &self,
        x: &LinComb<TreeTerm>,
        assign: &BTreeMap<String, LinComb<O::Key>>,
        target: &O,
    ) -> Result<LinComb<O::Key>> {
        x.try_map_linear(|t| self.evaluate(t, assign, target))
    }
}

type ShapeMemo = BTreeMap<(usize, usize), Vec<(TreeTerm, usize)>>;

/// Relabels leaves `1..=n` in planar order.
fn relabel_planar(t: &TreeTerm) -> TreeTerm {
    fn rec(t: &TreeTerm, next: &mut usize) -> TreeTerm {
        match t {
            TreeTerm::Leaf(_) => {
                *next += 1;
                TreeTerm::Leaf(*next)
            }
            TreeTerm::Node { gen, children } => TreeTerm::Node {
                gen: gen.clone(),
                children: children.iter().map(|c| rec(c, next)).collect(),
            },
        }
    }
    rec(t, &mut 0)
}

/// Evaluation of a tree whose labels are exactly `1..=n`. The root generator
/// is composed with the (standardized) children, which lays the children's
/// inputs out block by block; the block order is then corrected by the
/// symmetric group action.
fn eval_rec<O: Operad>(
    t: &TreeTerm,
    assign: &BTreeMap<String, LinComb<O::Key>>,
    target: &O,
) -> Result<LinComb<O::Key>> {
    match t {
        TreeTerm::Leaf(_) => Ok(LinComb::basis(target.unit())),
        TreeTerm::Node { gen, children } => {
            let image = assign
                .get(gen)
                .ok_or_else(|| Error::UnknownGenerator(gen.clone()))?;
            let mut args = Vec::with_capacity(children.len());
            let mut block_labels = Vec::new();
            for c in children {
                let mut labels = c.leaf_word();
                labels.sort_unstable();
                block_labels.extend(labels);
                args.push(eval_rec(&c.standardize_labels(), assign, target)?);
            }
            let composed = total_compose(target, image, &args)?;
            let lab = Perm::new(block_labels)?;
            act(target, &composed, &lab.inverse())
        }
    }
}

impl Operad for FreeOperad {
    type Key = TreeTerm;

    fn name(&self) -> String {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| format!("{}/{}", g.id, g.arity))
            .collect();
        format!("free[{}]", gens.join(","))
    }

    fn arity(&self, k: &TreeTerm) -> usize {
        k.arity()
    }

    fn basis(&self, n: usize) -> Result<Vec<TreeTerm>> {
        let budget = match self.max_nodes {
            Some(b) => b,
            None if self.has_low_arity_generators() => {
                return Err(Error::Presentation(
                    "generators of arity < 2 give infinite components; set a node bound".into(),
                ))
            }
            None => n.saturating_sub(1),
        };
        let mut memo = ShapeMemo::new();
        let shapes = self.shapes(n, budget, &mut memo);
        let mut out = Vec::with_capacity(shapes.len() * Perm::all(n).len());
        for (shape, _) in &shapes {
            for labels in Perm::all(n) {
                out.push(shape.map_labels(&|l| labels.at(l)));
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    fn unit(&self) -> TreeTerm {
        TreeTerm::unit()
    }

    fn compose_basis(&self, x: &TreeTerm, i: usize, y: &TreeTerm) -> Result<LinComb<TreeTerm>> {
        Ok(LinComb::basis(x.graft(i, y)?))
    }

    fn act_basis(&self, x: &TreeTerm, sigma: &Perm) -> Result<LinComb<TreeTerm>> {
        Ok(LinComb::basis(x.act(sigma)?))
    }
}
