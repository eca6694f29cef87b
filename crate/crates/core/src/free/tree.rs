//! Leaf-labelled trees decorated by generators.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lincomb::BasisKey;
use crate::perm::Perm;

/// A generating operation with a fixed number of inputs.
#[derive(
    Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize,
)]
pub struct Generator {
    pub id: String,
    pub arity: usize,
}

impl Generator {
    pub fn new(id: impl Into<String>, arity: usize) -> Self {
        Generator {
            id: id.into(),
            arity,
        }
    }
}

/// A basis element of a free operad.
///
/// Children are stored in input-slot order. Generators carry no symmetry, so
/// the slot-ordered tree together with its leaf labels is already a unique
/// representative and structural equality is basis equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TreeTerm {
    Leaf(usize),
    Node {
        gen: String,
        children: Vec<TreeTerm>,
    },
}

impl TreeTerm {
    /// The one-leaf tree, unit of the free operad.
    pub fn unit() -> Self {
        TreeTerm::Leaf(1)
    }

    /// A single generator with leaves `1..=arity` in order.
    pub fn corolla(g: &Generator) -> Self {
        TreeTerm::Node {
            gen: g.id.clone(),
            children: (1..=g.arity).map(TreeTerm::Leaf).collect(),
        }
    }

    pub fn node(gen: impl Into<String>, children: Vec<TreeTerm>) -> Self {
        TreeTerm::Node {
            gen: gen.into(),
            children,
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            TreeTerm::Leaf(_) => 1,
            TreeTerm::Node { children, .. } => children.iter().map(TreeTerm::arity).sum(),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            TreeTerm::Leaf(_) => 0,
            TreeTerm::Node { children, .. } => {
                1 + children.iter().map(TreeTerm::node_count).sum::<usize>()
            }
        }
    }

    /// Leaf labels in planar (left to right) order.
    pub fn leaf_word(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            TreeTerm::Leaf(l) => out.push(*l),
            TreeTerm::Node { children, .. } => {
                for c in children {
                    c.collect_leaves(out);
                }
            }
        }
    }

    pub fn map_labels(&self, f: &impl Fn(usize) -> usize) -> TreeTerm {
        match self {
            TreeTerm::Leaf(l) => TreeTerm::Leaf(f(*l)),
            TreeTerm::Node { gen, children } => TreeTerm::Node {
                gen: gen.clone(),
                children: children.iter().map(|c| c.map_labels(f)).collect(),
            },
        }
    }

    /// Replaces labels by their ranks, so a subtree is labelled by `1..=k`.
    pub fn standardize_labels(&self) -> TreeTerm {
        let mut sorted = self.leaf_word();
        sorted.sort_unstable();
        self.map_labels(&|l| sorted.binary_search(&l).expect("label present") + 1)
    }

    /// Checks that leaf labels are a bijection onto `1..=n` and that every
    /// node matches a generator's arity.
    pub fn validate(&self, generators: &[Generator]) -> Result<()> {
        Perm::new(self.leaf_word()).map_err(|e| match e {
            Error::Parse { message, .. } => Error::Json(format!("leaf labels: {message}")),
            other => other,
        })?;
        self.validate_nodes(generators)
    }

    fn validate_nodes(&self, generators: &[Generator]) -> Result<()> {
        if let TreeTerm::Node { gen, children } = self {
            let g = generators
                .iter()
                .find(|g| &g.id == gen)
                .ok_or_else(|| Error::UnknownGenerator(gen.clone()))?;
            if g.arity != children.len() {
                return Err(Error::ArityMismatch {
                    expected: g.arity,
                    actual: children.len(),
                });
            }
            for c in children {
                c.validate_nodes(generators)?;
            }
        }
        Ok(())
    }

    /// Partial composition: the leaf labelled `i` is replaced by `s`, whose
    /// labels become `i..i+m-1`; labels above `i` move up by `m - 1`.
    pub fn graft(&self, i: usize, s: &TreeTerm) -> Result<TreeTerm> {
        let n = self.arity();
        if i == 0 || i > n {
            return Err(Error::PositionOutOfRange {
                position: i,
                arity: n,
            });
        }
        let m = s.arity();
        let inner = s.map_labels(&|l| l + i - 1);
        Ok(self.graft_rec(i, m, &inner))
    }

    fn graft_rec(&self, i: usize, m: usize, inner: &TreeTerm) -> TreeTerm {
        match self {
            TreeTerm::Leaf(l) if *l == i => inner.clone(),
            TreeTerm::Leaf(l) if *l > i => TreeTerm::Leaf(l + m - 1),
            TreeTerm::Leaf(l) => TreeTerm::Leaf(*l),
            TreeTerm::Node { gen, children } => TreeTerm::Node {
                gen: gen.clone(),
                children: children.iter().map(|c| c.graft_rec(i, m, inner)).collect(),
            },
        }
    }

    /// Right action `t·σ`: the leaf labelled `l` is relabelled `σ⁻¹(l)`.
    /// Matches the word action on permutations under evaluation.
    pub fn act(&self, sigma: &Perm) -> Result<TreeTerm> {
        let n = self.arity();
        if sigma.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: sigma.len(),
            });
        }
        let inv = sigma.inverse();
        Ok(self.map_labels(&|l| inv.at(l)))
    }
}

impl fmt::Display for TreeTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeTerm::Leaf(l) => write!(f, "{l}"),
            TreeTerm::Node { gen, children } => {
                write!(f, "{gen}(")?;
                for (j, c) in children.iter().enumerate() {
                    if j > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl fmt::Debug for TreeTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl BasisKey for TreeTerm {
    fn to_json(&self) -> Value {
        match self {
            TreeTerm::Leaf(l) => json!({ "leaf": l }),
            TreeTerm::Node { gen, children } => json!({
                "gen": gen,
                "children": children.iter().map(BasisKey::to_json).collect::<Vec<_>>(),
            }),
        }
    }

    fn from_json(v: &Value) -> Result<Self> {
        if let Some(l) = v.get("leaf") {
            let l = l
                .as_u64()
                .filter(|&l| l > 0)
                .ok_or_else(|| Error::Json(format!("bad leaf label {l}")))?;
            return Ok(TreeTerm::Leaf(l as usize));
        }
        let gen = v
            .get("gen")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Json(format!("tree node needs \"gen\" or \"leaf\": {v}")))?;
        let children = match v.get("children") {
            None => Vec::new(),
            Some(Value::Array(items)) => items
                .iter()
                .map(TreeTerm::from_json)
                .collect::<Result<Vec<_>>>()?,
            Some(other) => {
                return Err(Error::Json(format!(
                    "\"children\" must be an array: {other}"
                )))
            }
        };
        Ok(TreeTerm::node(gen, children))
    }
}
