//! Exact row reduction over the span of basis keys.
//!
//! Columns are ordered by the key order, so the "leftmost" pivot of a row
//! is its smallest key. Rows are kept in reduced echelon form: every pivot
//! key appears in exactly one stored row, with coefficient one.

use std::collections::BTreeMap;

use crate::lincomb::LinComb;
use crate::scalar::Rational;

#[derive(Clone, Debug)]
pub struct RowSpace<K: Ord> {
    rows: BTreeMap<K, LinComb<K>>,
}

impl<K: Ord + Clone> Default for RowSpace<K> {
    fn default() -> Self {
        RowSpace {
            rows: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> RowSpace<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, k: &K) -> bool {
        self.rows.contains_key(k)
    }

    /// Reduced rows in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &LinComb<K>> {
        self.rows.values()
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &LinComb<K>) -> LinComb<K> {
        let hits: Vec<(K, Rational)> = v
            .iter()
            .filter(|(k, _)| self.rows.contains_key(*k))
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        let mut out = v.clone();
        for (k, c) in hits {
            out.add_scaled(&-c, &self.rows[&k]);
        }
        out
    }

    pub fn contains(&self, v: &LinComb<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns `true` when the rank went up.
    pub fn insert(&mut self, v: &LinComb<K>) -> bool {
        let rem = self.reduce(v);
        let Some((pivot, lead)) = rem.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let row = rem.scale(&lead.recip().expect("nonzero leading coefficient"));
        for other in self.rows.values_mut() {
            let c = other.coeff(&pivot);
            if !c.is_zero() {
                other.add_scaled(&-c, &row);
            }
        }
        self.rows.insert(pivot, row);
        true
    }
}

/// Rank and reduced echelon spanning set of `rows`. Deterministic: pivots are
/// the smallest surviving keys, rows are returned in pivot order.
pub fn row_reduce<K: Ord + Clone>(rows: &[LinComb<K>]) -> (usize, Vec<LinComb<K>>) {
    let mut space = RowSpace::new();
    for r in rows {
        space.insert(r);
    }
    (space.rank(), space.rows().cloned().collect())
}

/// Whether `v` lies in the span of an already reduced basis (as returned by
/// [`row_reduce`]).
pub fn in_span<K: Ord + Clone>(v: &LinComb<K>, reduced: &[LinComb<K>]) -> bool {
    let mut rem = v.clone();
    for row in reduced {
        if let Some((pivot, _)) = row.iter().next() {
            let c = rem.coeff(pivot);
            if !c.is_zero() {
                rem.add_scaled(&-c, row);
            }
        }
    }
    rem.is_zero()
}
