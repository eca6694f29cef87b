//! Permutations in one-line notation and the combinatorial kernels on them:
//! substitution, block composition, standardization, shuffles and the right
//! action of the symmetric group.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::lincomb::BasisKey;

/// A permutation of `{1..n}` written as the word `w(1) w(2) ... w(n)`.
///
/// The empty word is the base point of arity zero and `1` is the unit of
/// arity one. Ordered first by length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    word: Vec<usize>,
}

impl Ord for Perm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Perm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Perm {
    /// Checks that `word` is a bijection onto `1..=n`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        check_bijective(&word, &render_word(&word))?;
        Ok(Perm { word })
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            word: (1..=n).collect(),
        }
    }

    /// The empty permutation (base point of arity zero).
    pub fn empty() -> Self {
        Perm { word: Vec::new() }
    }

    /// The one-letter permutation (operad unit).
    pub fn unit() -> Self {
        Self::identity(1)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `self(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// All permutations of length `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Perm { word: cur.clone() });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Perm { word: inv }
    }

    /// Group product as functions: `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        same_len(self, other)?;
        Ok(Perm {
            word: other.word.iter().map(|&j| self.word[j - 1]).collect(),
        })
    }

    /// `+1` or `-1` according to the parity of the inversion count.
    pub fn sign(&self) -> i64 {
        let n = self.len();
        let mut inversions = 0usize;
        for a in 0..n {
            for b in a + 1..n {
                if self.word[a] > self.word[b] {
                    inversions += 1;
                }
            }
        }
        if inversions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Right action `x·σ`: the word `w` with `w(i) = x(σ(i))`.
    pub fn right_act(&self, sigma: &Perm) -> Result<Perm> {
        self.compose(sigma)
    }

    /// Substitution of `beta` at position `i`: the block
    /// `alpha(i)+beta(1)-1, ..., alpha(i)+beta(m)-1` replaces `alpha(i)`, and
    /// every other letter `alpha(j) >= alpha(i)` is raised by `m - 1`.
    pub fn substitute(&self, i: usize, beta: &Perm) -> Result<Perm> {
        let n = self.len();
        let m = beta.len();
        if i == 0 || i > n {
            return Err(Error::PositionOutOfRange {
                position: i,
                arity: n,
            });
        }
        let pivot = self.word[i - 1];
        let mut theta = Vec::with_capacity(n + m - 1);
        for (j, &a) in self.word.iter().enumerate() {
            if j + 1 == i {
                theta.extend(beta.word.iter().map(|&b| pivot + b - 1));
            } else if a < pivot {
                theta.push(a);
            } else {
                // a > pivot here; m == 0 lowers by one
                theta.push(a + m - 1);
            }
        }
        Ok(Perm { word: theta })
    }

    /// Partial composition by the block method: the block
    /// `A = (τ(i), ..., τ(i)+l-1)` is permuted by σ, `[n+l-1]` is cut into `n`
    /// blocks with `σ(A)` at position `τ(i)` and singletons elsewhere, and the
    /// blocks are then listed in the order given by τ.
    pub fn block_compose(&self, i: usize, sigma: &Perm) -> Result<Perm> {
        let n = self.len();
        let l = sigma.len();
        if i == 0 || i > n {
            return Err(Error::PositionOutOfRange {
                position: i,
                arity: n,
            });
        }
        let v = self.word[i - 1];
        let permuted: Vec<usize> = sigma.word.iter().map(|&s| v + s - 1).collect();
        let block = |b: usize| -> Vec<usize> {
            match b.cmp(&v) {
                Ordering::Less => vec![b],
                Ordering::Equal => permuted.clone(),
                Ordering::Greater => vec![b + l - 1],
            }
        };
        let word = self.word.iter().flat_map(|&b| block(b)).collect();
        Ok(Perm { word })
    }

    /// Removes the letter at position `i` and standardizes the rest.
    pub fn delete_position(&self, i: usize) -> Result<Perm> {
        if i == 0 || i > self.len() {
            return Err(Error::PositionOutOfRange {
                position: i,
                arity: self.len(),
            });
        }
        let rest: Vec<usize> = self
            .word
            .iter()
            .enumerate()
            .filter(|&(j, _)| j + 1 != i)
            .map(|(_, &a)| a)
            .collect();
        Ok(standardize(&rest))
    }

    /// Shifted concatenation: `self` followed by `other` raised by `len(self)`.
    pub fn concat_shifted(&self, other: &Perm) -> Perm {
        let p = self.len();
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|&b| b + p));
        Perm { word }
    }

    /// Standardized prefix of length `j` and suffix after it.
    pub fn split_at(&self, j: usize) -> (Perm, Perm) {
        let (a, b) = self.word.split_at(j);
        (standardize(a), standardize(b))
    }
}

/// The unique permutation with the same relative order as `word`, equal
/// letters ordered left to right.
pub fn standardize(word: &[usize]) -> Perm {
    let mut idx: Vec<usize> = (0..word.len()).collect();
    idx.sort_by_key(|&j| (word[j], j));
    let mut out = vec![0; word.len()];
    for (rank, &j) in idx.iter().enumerate() {
        out[j] = rank + 1;
    }
    Perm { word: out }
}

/// All `(p, q)`-shuffles: permutations of `p + q` increasing on positions
/// `1..=p` and on `p+1..=p+q`, in lexicographic order.
pub fn shuffles(p: usize, q: usize) -> Vec<Perm> {
    let n = p + q;
    let mut out = Vec::new();
    // choose the image set of the first block
    let mut chosen = Vec::with_capacity(p);
    fn rec(start: usize, n: usize, p: usize, chosen: &mut Vec<usize>, out: &mut Vec<Perm>) {
        if chosen.len() == p {
            let mut word = chosen.clone();
            word.extend((1..=n).filter(|v| !chosen.contains(v)));
            out.push(Perm { word });
            return;
        }
        for v in start..=n {
            chosen.push(v);
            rec(v + 1, n, p, chosen, out);
            chosen.pop();
        }
    }
    rec(1, n, p, &mut chosen, &mut out);
    out
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

fn same_len(a: &Perm, b: &Perm) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            actual: b.len(),
        });
    }
    Ok(())
}

fn check_bijective(word: &[usize], input: &str) -> Result<()> {
    let n = word.len();
    let mut seen = vec![false; n + 1];
    for (pos, &a) in word.iter().enumerate() {
        if a == 0 || a > n {
            return Err(Error::Parse {
                input: input.to_string(),
                position: pos + 1,
                message: format!("letter {a} is outside 1..={n}"),
            });
        }
        if seen[a] {
            return Err(Error::Parse {
                input: input.to_string(),
                position: pos + 1,
                message: format!("letter {a} is repeated"),
            });
        }
        seen[a] = true;
    }
    Ok(())
}

fn render_word(word: &[usize]) -> String {
    if !word.is_empty() && word.len() <= 9 && word.iter().all(|&a| (1..=9).contains(&a)) {
        word.iter().map(|a| a.to_string()).collect()
    } else {
        let parts: Vec<String> = word.iter().map(|a| a.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

/// Parses a word of positive integers: a digit string such as `3645` or a
/// bracketed list such as `[10,1,2]`. Repeats are allowed.
pub fn parse_word(text: &str) -> Result<Vec<usize>> {
    let t = text.trim();
    let offset = text.find(t).unwrap_or(0);
    let err = |position: usize, message: String| Error::Parse {
        input: text.to_string(),
        position,
        message,
    };
    if let Some(body) = t.strip_prefix('[') {
        let Some(inner) = body.strip_suffix(']') else {
            return Err(err(offset + t.len(), "missing closing ']'".into()));
        };
        if inner.trim().is_empty() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut pos = offset + 1;
        for part in inner.split(',') {
            let p = part.trim();
            let lead = part.len() - part.trim_start().len();
            match p.parse::<usize>() {
                Ok(v) if v > 0 && p.bytes().all(|b| b.is_ascii_digit()) => out.push(v),
                _ => {
                    return Err(err(
                        pos + lead + 1,
                        format!("expected a positive integer, found {p:?}"),
                    ))
                }
            }
            pos += part.len() + 1;
        }
        Ok(out)
    } else {
        if t.is_empty() {
            return Err(err(
                0,
                "empty permutation text (use [] for the empty word)".into(),
            ));
        }
        t.chars()
            .enumerate()
            .map(|(j, ch)| match ch.to_digit(10) {
                Some(d) if d > 0 => Ok(d as usize),
                _ => Err(err(
                    offset + j + 1,
                    format!("expected a digit 1-9, found {ch:?}"),
                )),
            })
            .collect()
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word = parse_word(s)?;
        check_bijective(&word, s)?;
        Ok(Perm { word })
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_word(&self.word))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl BasisKey for Perm {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => s.parse(),
            Value::Array(items) => {
                let word = items
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .filter(|&a| a > 0)
                            .map(|a| a as usize)
                            .ok_or_else(|| Error::Json(format!("bad letter {x}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Perm::new(word)
            }
            _ => Err(Error::Json(format!("expected a permutation, found {v}"))),
        }
    }
}
