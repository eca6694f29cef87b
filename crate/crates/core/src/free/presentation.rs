use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::free::{FreeOperad, Generator, TreeTerm};
use crate::lincomb::LinComb;
use crate::perm::Perm;
use crate::scalar::Rational;

/// Generators together with relations, each relation a nonzero element of a
/// single arity of the free operad.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: Vec<Generator>,
    pub relations: Vec<LinComb<TreeTerm>>,
    /// Node bound for enumerating infinite components.
    pub max_nodes: Option<usize>,
}

impl Presentation {
    pub fn new(generators: Vec<Generator>, relations: Vec<LinComb<TreeTerm>>) -> Result<Self> {
        let p = Presentation {
            generators,
            relations,
            max_nodes: None,
        };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        FreeOperad::new(self.generators.clone())?;
        for (idx, r) in self.relations.iter().enumerate() {
            if r.is_zero() {
                return Err(Error::Presentation(format!("relation {idx} is zero")));
            }
            let mut arity = None;
            for t in r.keys() {
                t.validate(&self.generators)?;
                match arity {
                    None => arity = Some(t.arity()),
                    Some(a) if a != t.arity() => {
                        return Err(Error::Presentation(format!(
                            "relation {idx} mixes arities {a} and {}",
                            t.arity()
                        )))
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    pub fn free_operad(&self) -> FreeOperad {
        let f = FreeOperad::new(self.generators.clone()).expect("validated");
        match self.max_nodes {
            Some(b) => f.with_max_nodes(b),
            None => f,
        }
    }

    /// One binary generator `nu`, relation `nu∘₁nu − nu∘₂nu`.
    pub fn assoc() -> Self {
        let nu = TreeTerm::corolla(&Generator::new("nu", 2));
        let left = nu.graft(1, &nu).expect("arity 2");
        let right = nu.graft(2, &nu).expect("arity 2");
        Presentation::new(
            vec![Generator::new("nu", 2)],
            vec![LinComb::basis(left) - LinComb::basis(right)],
        )
        .expect("valid preset")
    }

    /// One binary generator `nu` with antisymmetry `nu + nu·(21)` and the
    /// Jacobi relation: the cyclic sum of `nu∘₂nu`.
    pub fn lie() -> Self {
        let nu = TreeTerm::corolla(&Generator::new("nu", 2));
        let swap: Perm = "21".parse().expect("perm");
        let antisym = LinComb::basis(nu.clone()) + LinComb::basis(nu.act(&swap).expect("arity 2"));
        let inner = nu.graft(2, &nu).expect("arity 2");
        let mut jacobi = LinComb::zero();
        for c in ["123", "231", "312"] {
            let cyc: Perm = c.parse().expect("perm");
            jacobi.add_term(inner.act(&cyc).expect("arity 3"), Rational::one());
        }
        Presentation::new(vec![Generator::new("nu", 2)], vec![antisym, jacobi])
            .expect("valid preset")
    }

    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "assoc" => Some(Self::assoc()),
            "lie" => Some(Self::lie()),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "generators": self.generators,
            "relations": self.relations.iter().map(LinComb::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let gens: Vec<Generator> = serde_json::from_value(
            v.get("generators")
                .cloned()
                .ok_or_else(|| Error::Json("presentation needs \"generators\"".into()))?,
        )?;
        let rels = match v.get("relations") {
            None => Vec::new(),
            Some(Value::Array(items)) => items
                .iter()
                .map(LinComb::<TreeTerm>::from_json)
                .collect::<Result<Vec<_>>>()?,
            Some(other) => {
                return Err(Error::Json(format!(
                    "\"relations\" must be an array: {other}"
                )))
            }
        };
        let mut p = Presentation::new(gens, rels)?;
        if let Some(b) = v.get("maxNodes").and_then(Value::as_u64) {
            p.max_nodes = Some(b as usize);
        }
        Ok(p)
    }
}
