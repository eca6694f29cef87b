//! Brute-force reference implementations on plain words, written without
//! the library's operad machinery.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use operad_hopf::{LinComb, Perm, Rational, TensorKey};

pub type Word = Vec<usize>;
pub type Vector = BTreeMap<Word, i64>;
pub type Tensor = BTreeMap<(Word, Word), i64>;

pub fn perm(w: &[usize]) -> Perm {
    Perm::new(w.to_vec()).unwrap()
}

pub fn lc(s: &str) -> LinComb<Perm> {
    operad_hopf::parse::parse_lincomb(s).unwrap()
}

pub fn to_lc(v: &Vector) -> LinComb<Perm> {
    LinComb::from_terms(v.iter().map(|(w, &c)| (perm(w), Rational::from(c))))
}

pub fn to_tensor_lc(v: &Tensor) -> LinComb<TensorKey<Perm, Perm>> {
    LinComb::from_terms(
        v.iter()
            .map(|((a, b), &c)| (TensorKey::new(perm(a), perm(b)), Rational::from(c))),
    )
}

pub fn add(v: &mut Vector, w: Word, c: i64) {
    let e = v.entry(w.clone()).or_insert(0);
    *e += c;
    if *e == 0 {
        v.remove(&w);
    }
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_words(n: usize) -> Vec<Word> {
    fn rec(n: usize, cur: &mut Word, used: &mut Vec<bool>, out: &mut Vec<Word>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
    out
}

/// Ranks letters, ties broken left to right.
pub fn st(w: &[usize]) -> Word {
    (0..w.len())
        .map(|i| {
            1 + (0..w.len())
                .filter(|&j| w[j] < w[i] || (w[j] == w[i] && j < i))
                .count()
        })
        .collect()
}

/// The letter-by-letter substitution rule.
pub fn substitute(alpha: &[usize], i: usize, beta: &[usize]) -> Word {
    let m = beta.len();
    let pivot = alpha[i - 1];
    let mut out = Vec::new();
    for (j, &a) in alpha.iter().enumerate() {
        if j == i - 1 {
            out.extend(beta.iter().map(|&b| pivot + b - 1));
        } else if a < pivot {
            out.push(a);
        } else {
            out.push(a + m - 1);
        }
    }
    out
}

/// The unique word of length `n+l-1` whose positions `i..i+l-1` carry
/// consecutive letters standardizing to `sigma`, and which standardizes to
/// `tau` once that block is collapsed to its first letter. Found by search.
pub fn compose_by_search(tau: &[usize], i: usize, sigma: &[usize]) -> Word {
    let (n, l) = (tau.len(), sigma.len());
    let found: Vec<Word> = all_words(n + l - 1)
        .into_iter()
        .filter(|w| {
            let block = &w[i - 1..i - 1 + l];
            let lo = *block.iter().min().unwrap();
            let consecutive = block.iter().all(|&b| b < lo + l);
            let mut collapsed: Word = w[..i - 1].to_vec();
            collapsed.push(lo);
            collapsed.extend_from_slice(&w[i - 1 + l..]);
            consecutive && st(block) == sigma && st(&collapsed) == tau
        })
        .collect();
    assert_eq!(found.len(), 1, "composition is not unique");
    found.into_iter().next().unwrap()
}

/// Shuffles by filtering every permutation for monotonicity on both blocks.
pub fn shuffles_by_filter(p: usize, q: usize) -> Vec<Word> {
    all_words(p + q)
        .into_iter()
        .filter(|w| {
            w[..p].windows(2).all(|x| x[0] < x[1]) && w[p..].windows(2).all(|x| x[0] < x[1])
        })
        .collect()
}

pub fn sign(w: &[usize]) -> i64 {
    let inv = (0..w.len())
        .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| w[i] > w[j])
        .count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Delete the letter at position `i`, then standardize.
pub fn delete(w: &[usize], i: usize) -> Word {
    let mut rest = w.to_vec();
    rest.remove(i - 1);
    st(&rest)
}

/// Keep the letters at the (1-based) positions in `keep`, then standardize.
pub fn restrict(w: &[usize], keep: &[usize]) -> Word {
    st(&keep.iter().map(|&k| w[k - 1]).collect::<Word>())
}

/// Shifted concatenation.
pub fn concat(x: &[usize], y: &[usize]) -> Word {
    let mut out = x.to_vec();
    out.extend(y.iter().map(|&b| b + x.len()));
    out
}

/// Every interleaving of `x` and the shifted `y`; the sign is that of the
/// position set taken by `x`.
pub fn interleavings(x: &[usize], y: &[usize], signed: bool) -> Vector {
    let (p, q) = (x.len(), y.len());
    let mut out = Vector::new();
    for mask in 0u32..(1 << (p + q)) {
        if mask.count_ones() as usize != p {
            continue;
        }
        let (mut a, mut b) = (x.iter(), y.iter());
        let mut w = Vec::new();
        let mut pos_sum = 0;
        for pos in 0..p + q {
            if mask & (1 << pos) != 0 {
                w.push(*a.next().unwrap());
                pos_sum += pos + 1;
            } else {
                w.push(b.next().unwrap() + p);
            }
        }
        let s = if signed && (pos_sum - p * (p + 1) / 2) % 2 == 1 {
            -1
        } else {
            1
        };
        add(&mut out, w, s);
    }
    out
}

/// Deconcatenation followed by standardization.
pub fn deconcatenate(w: &[usize]) -> Tensor {
    let mut out = Tensor::new();
    for j in 0..=w.len() {
        *out.entry((st(&w[..j]), st(&w[j..]))).or_insert(0) += 1;
    }
    out
}

/// Product of words by kind name: "odot", "shuffle", "shuffle-signed".
pub fn mult(kind: &str, x: &[usize], y: &[usize]) -> Vector {
    match kind {
        "odot" => Vector::from([(concat(x, y), 1)]),
        "shuffle" => interleavings(x, y, false),
        "shuffle-signed" => interleavings(x, y, true),
        _ => panic!("unknown kind"),
    }
}

pub fn mult_vec(kind: &str, u: &Vector, v: &Vector) -> Vector {
    let mut out = Vector::new();
    for (a, ca) in u {
        for (b, cb) in v {
            for (w, c) in mult(kind, a, b) {
                add(&mut out, w, ca * cb * c);
            }
        }
    }
    out
}

/// Antipode as a signed sum over ways of cutting the word into nonempty
/// consecutive factors, multiplying the standardized factors.
pub fn antipode_by_cuts(kind: &str, w: &[usize]) -> Vector {
    let n = w.len();
    if n == 0 {
        return Vector::from([(vec![], 1)]);
    }
    let mut out = Vector::new();
    for cuts in 0u32..(1 << (n - 1)) {
        let mut pieces = Vec::new();
        let mut start = 0;
        for k in 1..n {
            if cuts & (1 << (k - 1)) != 0 {
                pieces.push(st(&w[start..k]));
                start = k;
            }
        }
        pieces.push(st(&w[start..]));
        let s = if pieces.len() % 2 == 0 { 1 } else { -1 };
        let mut acc = Vector::from([(vec![], s)]);
        for piece in &pieces {
            acc = mult_vec(kind, &acc, &Vector::from([(piece.clone(), 1)]));
        }
        for (k, c) in acc {
            add(&mut out, k, c);
        }
    }
    out
}

/// `D_0 x = 1 (x+1)`, `D_{n+1} x = x (n+1)`, otherwise the letter at
/// position `i` is doubled.
pub fn coface(i: usize, w: &[usize]) -> Word {
    let n = w.len();
    if i == 0 {
        concat(&[1], w)
    } else if i == n + 1 {
        concat(w, &[1])
    } else {
        substitute(w, i, &[1, 2])
    }
}

pub fn coboundary(w: &[usize]) -> Vector {
    let mut out = Vector::new();
    for i in 0..=w.len() + 1 {
        add(&mut out, coface(i, w), if i % 2 == 0 { 1 } else { -1 });
    }
    out
}

/// Rank over the rationals by dense Gaussian elimination.
pub fn dense_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = BigRational::one() / m[rank][c].clone();
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = row[c].clone() * inv.clone();
                for (x, pv) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x -= f.clone() * pv.clone();
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The pinned report shape: exactly these keys, these types, and status
/// agreeing with the counterexample list. `lhs`/`rhs` that are arrays must be
/// linear combinations.
pub fn check_report_schema(v: &serde_json::Value) -> Result<(), String> {
    use serde_json::Value;
    let obj = v.as_object().ok_or("report is not an object")?;
    let allowed = [
        "suite",
        "maxArity",
        "cases",
        "status",
        "counterexamples",
        "notes",
    ];
    for k in obj.keys() {
        if !allowed.contains(&k.as_str()) {
            return Err(format!("unexpected key {k}"));
        }
    }
    obj.get("suite")
        .and_then(Value::as_str)
        .ok_or("suite must be a string")?;
    obj.get("maxArity")
        .and_then(Value::as_u64)
        .ok_or("maxArity must be an integer")?;
    obj.get("cases")
        .and_then(Value::as_u64)
        .ok_or("cases must be an integer")?;
    let status = obj
        .get("status")
        .and_then(Value::as_str)
        .ok_or("status must be a string")?;
    let ces = obj
        .get("counterexamples")
        .and_then(Value::as_array)
        .ok_or("counterexamples must be an array")?;
    match (status, ces.is_empty()) {
        ("pass", true) | ("fail", false) => {}
        _ => {
            return Err(format!(
                "status {status:?} disagrees with {} counterexamples",
                ces.len()
            ))
        }
    }
    for ce in ces {
        let c = ce.as_object().ok_or("counterexample is not an object")?;
        let mut keys: Vec<&str> = c.keys().map(String::as_str).collect();
        keys.sort_unstable();
        if keys != ["inputs", "law", "lhs", "rhs"] {
            return Err(format!("counterexample keys {keys:?}"));
        }
        c["law"].as_str().ok_or("law must be a string")?;
        c["inputs"].as_array().ok_or("inputs must be an array")?;
        for side in ["lhs", "rhs"] {
            if let Some(terms) = c[side].as_array() {
                for t in terms {
                    let ok = t.get("basis").is_some()
                        && t.get("coeff").and_then(Value::as_str).is_some()
                        && t.as_object().is_some_and(|o| o.len() == 2);
                    if !ok {
                        return Err(format!("{side} term {t} is not {{basis, coeff}}"));
                    }
                }
            }
        }
    }
    if let Some(notes) = obj.get("notes") {
        let arr = notes.as_array().ok_or("notes must be an array")?;
        if !arr.iter().all(Value::is_string) {
            return Err("notes must be strings".into());
        }
    }
    Ok(())
}
