//! One pass/fail line per acceptance criterion. Run with
//! `cargo test -p operad-hopf --test acceptance -- --nocapture` to see them.

mod common;

use std::process::Command;

use common::*;
use operad_hopf::cosimplicial::{check_cosimplicial, check_leibniz};
use operad_hopf::hopf::{
    antipode, bialgebra_check, coalgebra_check, coproduct, hopf_check, mr_agreement_check,
    ProductKind, TensorConvention,
};
use operad_hopf::operad::{check_operad_axioms, Ass, Multiplicative};
use operad_hopf::perm::{parse_word, standardize};
use operad_hopf::report::Report;
use operad_hopf::suites::{convolution_suite, free_suite};
use operad_hopf::{LinComb, Perm};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn passed(r: &Report) -> Result<(), String> {
    ensure(
        r.passed(),
        format!(
            "{} failed: {:?}",
            r.suite,
            r.counterexamples.first().map(|c| (&c.law, &c.inputs))
        ),
    )
}

fn p(s: &str) -> Perm {
    s.parse().unwrap()
}

fn criterion_1() -> Outcome {
    let alpha = Perm::new(vec![4, 8, 2, 5, 7, 1, 3, 6]).unwrap();
    let beta = Perm::new(vec![3, 5, 1, 2, 4]).unwrap();
    let sub = alpha.substitute(4, &beta).map_err(|e| e.to_string())?;
    ensure(
        sub.word() == [4, 12, 2, 7, 9, 5, 6, 8, 11, 1, 3, 10],
        format!("sub_4 gave {sub}"),
    )?;
    for (w, want) in [("3645", "1423"), ("2122", "2134")] {
        let got = standardize(&parse_word(w).unwrap());
        ensure(got == p(want), format!("st({w}) gave {got}"))?;
    }
    for (i, want) in [(1, "564312"), (2, "645312")] {
        let got = p("4312").block_compose(i, &p("231")).unwrap();
        ensure(got == p(want), format!("4312∘{i}231 gave {got}"))?;
    }
    Ok("sub_4, st and both block compositions exact".into())
}

fn criterion_2() -> Outcome {
    let r = check_operad_axioms(&Ass, 3).map_err(|e| e.to_string())?;
    passed(&r)?;
    Ok(format!("{} cases", r.cases))
}

fn criterion_3() -> Outcome {
    let mut cases = 0;
    for n in 1..=4 {
        for l in 0..=4 {
            for t in Perm::all(n) {
                for s in Perm::all(l) {
                    for i in 1..=n {
                        let a = t.block_compose(i, &s).unwrap();
                        let b = t.substitute(i, &s).unwrap();
                        ensure(a == b, format!("{t}∘{i}{s}: {a} vs {b}"))?;
                        cases += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{cases} triples"))
}

fn criterion_4() -> Outcome {
    let r = check_cosimplicial(&Multiplicative::ass(), 4).map_err(|e| e.to_string())?;
    passed(&r)?;
    Ok(format!(
        "{} cases (mixed n<=4, d2 n<=6, delta2 and anticommute n<=5)",
        r.cases
    ))
}

fn criterion_5() -> Outcome {
    let r = check_leibniz(&Multiplicative::ass(), 5).map_err(|e| e.to_string())?;
    passed(&r)?;
    let rule = r
        .notes
        .iter()
        .find(|n| n.starts_with("sign rule"))
        .cloned()
        .unwrap_or_default();
    Ok(format!("{} cases, {rule}", r.cases))
}

fn criterion_6() -> Outcome {
    let m = Multiplicative::ass();
    let c = coalgebra_check(&m, 5).map_err(|e| e.to_string())?;
    passed(&c)?;
    let mr = mr_agreement_check(&m, 6).map_err(|e| e.to_string())?;
    passed(&mr)?;
    for n in 0..=6 {
        for w in all_words(n) {
            let d = coproduct(&m, &LinComb::basis(perm(&w))).unwrap();
            ensure(
                d == to_tensor_lc(&deconcatenate(&w)),
                format!("coproduct of {w:?} differs from deconcatenation"),
            )?;
        }
    }
    Ok(format!(
        "{} coalgebra cases, {} agreement cases, oracle n<=6",
        c.cases, mr.cases
    ))
}

/// Both sides of the bialgebra law for `⊙` and the plain tensor, computed on
/// words.
fn odot_bialgebra_sides(x: &[usize], y: &[usize]) -> (Tensor, Tensor) {
    let lhs = deconcatenate(&concat(x, y));
    let mut rhs = Tensor::new();
    for ((a, b), c1) in deconcatenate(x) {
        for ((c, d), c2) in deconcatenate(y) {
            *rhs.entry((concat(&a, &c), concat(&b, &d))).or_insert(0) += c1 * c2;
        }
    }
    (lhs, rhs)
}

fn criterion_7() -> Outcome {
    let m = Multiplicative::ass();
    let good = bialgebra_check(&m, ProductKind::ShuffleUnsigned, TensorConvention::Plain, 4)
        .map_err(|e| e.to_string())?;
    passed(&good)?;
    let bad = bialgebra_check(&m, ProductKind::Odot, TensorConvention::Plain, 4)
        .map_err(|e| e.to_string())?;
    ensure(!bad.passed(), "odot/plain unexpectedly passed")?;

    // the oracle counts failing pairs independently
    let (mut pairs, mut failing) = (0, 0);
    for n in 0..=4 {
        for k in 0..=n {
            for x in all_words(k) {
                for y in all_words(n - k) {
                    pairs += 1;
                    let (l, r) = odot_bialgebra_sides(&x, &y);
                    if l != r {
                        failing += 1;
                    }
                }
            }
        }
    }
    ensure(
        bad.cases == pairs,
        format!("checker ran {} cases, oracle {pairs}", bad.cases),
    )?;
    ensure(
        bad.failures_of("bialgebra") == failing,
        format!(
            "checker found {} failures, oracle {failing}",
            bad.failures_of("bialgebra")
        ),
    )?;
    let ce = bad.counterexample("bialgebra").ok_or("no counterexample")?;
    ensure(
        ce.inputs == [serde_json::json!("1"), serde_json::json!("1")],
        format!("first counterexample at {:?}", ce.inputs),
    )?;
    let (l, r) = odot_bialgebra_sides(&[1], &[1]);
    let key = (vec![1], vec![1]);
    ensure(
        l[&key] == 1 && r[&key] == 2,
        "oracle coefficients of (1)⊗(1) are not 1 and 2",
    )?;
    ensure(
        ce.lhs == to_tensor_lc(&l).to_json() && ce.rhs == to_tensor_lc(&r).to_json(),
        "counterexample sides differ from oracle",
    )?;
    Ok(format!(
        "shuffle/plain passes {} cases; odot/plain fails {failing}/{pairs}, first at (1),(1) with 1 vs 2",
        good.cases
    ))
}

fn criterion_8() -> Outcome {
    let m = Multiplicative::ass();
    let r = hopf_check(&m, ProductKind::ShuffleUnsigned, TensorConvention::Plain, 3)
        .map_err(|e| e.to_string())?;
    for law in ["antipode.left", "antipode.right"] {
        ensure(
            r.failures_of(law) == 0,
            format!("{law} fails {} cases", r.failures_of(law)),
        )?;
    }
    let a1 = antipode(&m, ProductKind::ShuffleUnsigned, &lc("1")).unwrap();
    ensure(a1 == -lc("1"), format!("antipode((1)) = {a1}"))?;
    for n in 0..=3 {
        for w in all_words(n) {
            let got =
                antipode(&m, ProductKind::ShuffleUnsigned, &LinComb::basis(perm(&w))).unwrap();
            ensure(
                got == to_lc(&antipode_by_cuts("shuffle", &w)),
                format!("antipode of {w:?} differs from oracle"),
            )?;
        }
    }
    Ok("both antipode identities on arity <= 3, antipode((1)) = -(1)".into())
}

fn criterion_9() -> Outcome {
    let r = convolution_suite(&Multiplicative::ass(), ProductKind::Odot, 3, 7)
        .map_err(|e| e.to_string())?;
    passed(&r)?;
    for law in [
        "unit.left",
        "unit.right",
        "associativity",
        "adams.power",
        "bracket.antisymmetry",
        "bracket.jacobi",
    ] {
        ensure(r.failures_of(law) == 0, format!("{law} failed"))?;
    }
    Ok(format!("{} cases, seed 7", r.cases))
}

fn criterion_10() -> Outcome {
    let r = free_suite(4).map_err(|e| e.to_string())?;
    passed(&r)?;
    Ok(format!(
        "{} cases: dims n! and (n-1)!, boundary clean, assoc ideal vanishes in Ass",
        r.cases
    ))
}

fn run(args: &[&str]) -> (i32, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_operad-hopf"))
        .args(args)
        .output()
        .unwrap();
    (
        o.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&o.stdout).into_owned(),
    )
}

fn criterion_11() -> Outcome {
    let expect = |args: &[&str], code: i32| -> Result<String, String> {
        let (c, out) = run(args);
        ensure(c == code, format!("{args:?} exited {c}, wanted {code}"))?;
        Ok(out)
    };
    expect(&["verify", "operad", "--max-arity", "3"], 0)?;
    expect(&["verify", "cosimplicial", "--max-arity", "4"], 0)?;
    let out = expect(
        &[
            "verify",
            "bialgebra",
            "--product",
            "odot",
            "--tensor",
            "plain",
            "--max-arity",
            "2",
        ],
        1,
    )?;
    let v: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    check_report_schema(&v)?;
    ensure(
        v["counterexamples"][0]["inputs"] == serde_json::json!(["1", "1"]),
        "missing (1),(1) counterexample",
    )?;
    expect(&["verify", "nope"], 2)?;
    expect(&["perm", "st", "4412x"], 2)?;
    expect(&["hopf", "product", "1/0*1", "1"], 2)?;
    for (args, want) in [
        (
            &["perm", "sub", "48257136", "4", "35124"][..],
            "[4,12,2,7,9,5,6,8,11,1,3,10]",
        ),
        (&["perm", "st", "3645"], "1423"),
        (&["perm", "st", "2122"], "2134"),
        (&["perm", "compose", "4312", "1", "231"], "564312"),
        (&["perm", "compose", "4312", "2", "231"], "645312"),
        (
            &["free", "quotient-dim", "--preset", "lie", "--arity", "3"],
            "2",
        ),
    ] {
        let out = expect(args, 0)?;
        ensure(out.trim_end() == want, format!("{args:?} printed {out:?}"))?;
    }
    let (_, out) = run(&["--json", "verify", "operad", "--max-arity", "2"]);
    check_report_schema(&serde_json::from_str(&out).map_err(|e| e.to_string())?)?;
    Ok("exit codes 0/1/2, schema, example subcommands".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 11] = [
        ("worked examples reproduce exactly", criterion_1),
        ("operad axioms for Ass up to arity 3", criterion_2),
        (
            "block composition equals substitution, n,l <= 4",
            criterion_3,
        ),
        ("cosimplicial identities and differentials", criterion_4),
        ("Leibniz rule over odot, total arity <= 5", criterion_5),
        (
            "coalgebra laws and agreement with deconcatenation",
            criterion_6,
        ),
        (
            "bialgebra verdicts against the brute-force oracle",
            criterion_7,
        ),
        ("antipode identities for the shuffle product", criterion_8),
        ("convolution algebra laws", criterion_9),
        ("free operad quotient dimensions", criterion_10),
        ("CLI contract", criterion_11),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let n = i + 1;
        match f() {
            Ok(detail) => println!("criterion {n:>2}: PASS  {name} ({detail})"),
            Err(why) => {
                println!("criterion {n:>2}: FAIL  {name} ({why})");
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
