use std::process::Command;

use proptest::prelude::*;
use symfun::{partitions, shared_ring, Coeff, SymElement};
use symfun_cli::{eval_in, eval_str, JsonElement, Value};

fn symfun(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_symfun")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn stdout(args: &[&str]) -> String {
    let (code, out, err) = symfun(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out.trim_end().to_string()
}

#[test]
fn eval_goldens() {
    assert_eq!(stdout(&["eval", "to_m(QP[2,1])"]), "(t + 2)*m[1,1,1] + (t + 1)*m[2,1] + t*m[3]");
    assert_eq!(
        stdout(&["eval", "s[2,1] + QP[2,1] + p[2,1]", "--basis", "m"]),
        "(t + 4)*m[1,1,1] + (t + 3)*m[2,1] + (t + 1)*m[3]"
    );
    assert_eq!(stdout(&["eval", "scalar(p[2,1], p[2,1])"]), "2");
    assert_eq!(stdout(&["eval", "QP[2,1]", "--basis", "s", "--var-names", "x,y"]), "s[2,1] + y*s[3]");
}

#[test]
fn combinatorial_listings() {
    assert_eq!(stdout(&["kostka", "2,1", "1,1,1"]), "t^2 + t");
    assert_eq!(stdout(&["partitions", "3"]), "[3]\n[2,1]\n[1,1,1]");
    assert_eq!(stdout(&["partitions", "0"]), "[]");
    let ribbons = stdout(&["ribbons", "4,3,2", "1,1,1", "3"]);
    assert_eq!(ribbons.matches("spin = ").count(), 3);
    let json: serde_json::Value = serde_json::from_str(&stdout(&["--format", "json", "ribbons", "4,3,2", "1,1,1", "3"])).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 3);
    let tableaux = stdout(&["tableaux", "2,1", "1,1,1"]);
    assert_eq!(tableaux.matches("charge = ").count(), 2);
    let rc = stdout(&["--format", "json", "rc", "2,1", "1,1,1"]);
    let rc: serde_json::Value = serde_json::from_str(&rc).unwrap();
    let mut cc: Vec<u64> = rc.as_array().unwrap().iter().map(|x| x["cocharge"].as_u64().unwrap()).collect();
    cc.sort_unstable();
    assert_eq!(cc, vec![1, 2]);
    assert_eq!(stdout(&["genkostka", "2,2", "1,1", "2"]), "t^2");
    assert_eq!(stdout(&["llt", "2,2", "2"]), "t^2*s[1,1] + s[2]");
    assert_eq!(stdout(&["llt", "2,2", "2", "--basis", "m"]), "(t^2 + 1)*m[1,1] + m[2]");
    let bases = stdout(&["bases"]);
    for name in ["m", "e", "h", "p", "s", "P", "Q", "QP", "McdP", "omega"] {
        assert!(bases.lines().any(|l| l.split('\t').next() == Some(name)), "{name}");
    }
}

#[test]
fn exit_codes() {
    let (code, _, err) = symfun(&["eval", "s[1,2]"]);
    assert_eq!(code, 1);
    assert!(err.contains("not a partition") && err.contains("s[1,2]"), "{err}");
    let (code, _, err) = symfun(&["eval", "s[2,1] +"]);
    assert_eq!(code, 1);
    assert!(err.contains("position 8"), "{err}");
    assert_eq!(symfun(&["kostka", "2,x", "1"]).0, 1);
    assert_eq!(symfun(&["kostka", "2,1", "1,1"]).0, 1);
    assert_eq!(symfun(&["no-such-command"]).0, 1);
    assert_eq!(symfun(&["--format", "yaml", "bases"]).0, 1);
    assert_eq!(symfun(&["--help"]).0, 0);
}

#[test]
fn json_element_shape() {
    let out = stdout(&["--format", "json", "eval", "to_m(QP[2,1])"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["basis"], "m");
    assert_eq!(v["terms"][0]["partition"], serde_json::json!([1, 1, 1]));
    assert_eq!(v["terms"][0]["coeff"], "t + 2");
    let out = stdout(&["--format", "json", "eval", "scalar_t(P[1], P[1])"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["scalar"], "-1/(t - 1)");
}

const BASES: [&str; 8] = ["m", "e", "h", "p", "s", "P", "QP", "McdP"];

/// Small random elements written in the expression language.
fn source() -> impl Strategy<Value = String> {
    let term = (
        0..BASES.len(),
        0usize..=3,
        any::<prop::sample::Index>(),
        -3i64..=3,
        0u32..=2,
        any::<bool>(),
    )
        .prop_map(|(bi, n, idx, c, e, frac)| {
            let ps = partitions(n);
            let p = idx.get(&ps);
            let coeff = if frac {
                format!("({c} + q*t^{e})/(1 - t^{})", e + 1)
            } else {
                format!("({c}*t^{e} + q)")
            };
            format!("{coeff}*{}{p}", BASES[bi])
        });
    prop::collection::vec(term, 1..4).prop_map(|ts| ts.join(" + "))
}

fn element_of(src: &str) -> SymElement {
    match eval_str(shared_ring(), src).unwrap() {
        Value::Element(f) => f,
        Value::Scalar(c) => SymElement::term("m", symfun::Partition::empty(), c),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn render_then_parse_is_identity(src in source()) {
        let f = element_of(&src);
        let back = eval_in(shared_ring(), &f.to_string(), f.basis().as_str()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn json_is_lossless(src in source()) {
        let f = element_of(&src);
        let text = serde_json::to_string(&JsonElement::from_element(&f)).unwrap();
        let parsed: JsonElement = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(parsed.to_element(shared_ring()).unwrap(), f);
    }

    #[test]
    fn coefficients_round_trip(a in -20i64..20, b in 1i64..20, e in 0u32..4) {
        let c = &Coeff::ratio(a, b) * &(&Coeff::t().pow(e) - &Coeff::q()).inv().unwrap();
        match eval_str(shared_ring(), &c.to_string()).unwrap() {
            Value::Scalar(back) => prop_assert_eq!(back, c),
            Value::Element(_) => prop_assert!(false),
        }
    }
}
