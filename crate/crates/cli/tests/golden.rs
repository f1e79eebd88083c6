//! Worked examples run through the binary. Expansions are compared as sets
//! of printed terms, since output is sorted by label rather than in the
//! order the examples were written.

use std::collections::BTreeSet;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfcomb"))
        .args(args)
        .env_remove("HOPFCOMB_MAX_DEGREE")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap().trim_end().to_string(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn terms(s: &str) -> BTreeSet<String> {
    s.split(" + ").map(|t| t.trim().to_string()).collect()
}

fn same_terms(args: &[&str], expected: &str) {
    assert_eq!(terms(&ok(args)), terms(expected), "{args:?}");
}

#[test]
fn eqsym_products_and_coproducts() {
    same_terms(&["product", "--algebra", "eqsym", "--basis", "M", "1", "22"], "M[133] + M[323] + M[223]");
    same_terms(
        &["product", "--algebra", "eqsym", "12", "22"],
        "M[1244] + M[1434] + M[4234] + M[1334] + M[3234] + M[2234]",
    );
    same_terms(
        &["product", "--algebra", "eqsym", "12", "133"],
        "3*M[12355] + 2*M[12445] + 2*M[12545] + M[13345] + M[14345] + M[15345]",
    );
    same_terms(
        &["product", "--algebra", "eqsym", "1", "331"],
        "M[1442] + M[4241] + M[4431] + M[3314]",
    );
    same_terms(
        &["product", "--algebra", "eqsym", "12", "21"],
        "M[1243] + M[1432] + M[4231] + M[1324] + M[3214] + M[2134]",
    );
    same_terms(&["coproduct", "--algebra", "eqsym", "626124"], "M[626124] ⊗ 1 + 1 ⊗ M[626124]");
    same_terms(
        &["coproduct", "--algebra", "eqsym", "4232277"],
        "M[4232277] ⊗ 1 + M[42322] ⊗ M[22] + 1 ⊗ M[4232277]",
    );
}

#[test]
fn shifted_concatenation_and_cuts() {
    assert_eq!(ok(&["combinat", "shifted-concat", "42322", "22"]), "4232277");
    assert_eq!(ok(&["combinat", "shifted-concat", "1", "331"]), "1442");
    assert_eq!(ok(&["combinat", "cut", "4232277"]), "42322 22");
    assert_eq!(ok(&["combinat", "cut", "626124"]), "626124");
}

#[test]
fn permutations_and_words() {
    // 12637495(10)8 with two-digit letters comma separated
    assert_eq!(ok(&["combinat", "std", "aababacacb"]), "1,2,6,3,7,4,9,5,10,8");
    assert_eq!(ok(&["combinat", "cycles", "31542"]), "(1352)(4)");
    assert_eq!(ok(&["combinat", "cycles", "2431"]), "(124)(3)");
    assert_eq!(ok(&["combinat", "csupp", "31542"]), "{1,2,3,5|4} (4,1)");
    assert_eq!(ok(&["combinat", "shifted-shuffle", "21", "1"]), "213 231 321");
    assert_eq!(ok(&["count", "--family", "parking", "3"]), "16");
    assert_eq!(ok(&["combinat", "cstd", "(cba)(aba)(ac)(ba)"]), "(2,6,7,9,10,1,3,5,4,8)");
}

#[test]
fn sgqsym_products() {
    same_terms(
        &["product", "--algebra", "sgqsym", "12", "321"],
        "M[12543] + M[14325] + 2*M[15342] + M[32145] + 2*M[42315] + 3*M[52341]",
    );
    same_terms(&["product", "--algebra", "sgqsym", "1", "21"], "M[132] + M[213] + M[321]");
    same_terms(
        &["product", "--algebra", "sgqsym", "21", "123"],
        "M[12354] + M[12435] + M[12543] + M[13245] + M[14325] + M[15342] + M[21345] + M[32145] + M[42315] + M[52341]",
    );
    same_terms(
        &["product", "--algebra", "sgqsym", "21", "231"],
        "M[21453] + M[23154] + M[24513] + M[25431] + M[34152] + M[34521] + M[35412] + M[43251] + M[43512] + M[53421]",
    );
    // binomial(n+p, n) M_{12…(n+p)}
    assert_eq!(ok(&["product", "--algebra", "sgqsym", "123", "12"]), "10*M[12345]");
    assert_eq!(ok(&["product", "--algebra", "sgqsym", "12", "12"]), "6*M[1234]");
}

#[test]
fn subalgebra_embeddings() {
    same_terms(
        &["product", "--algebra", "piqsym", "{1,2,4|3}", "{1}"],
        "upi[{1,2,4|3|5}] + 2*upi[{1,2,5|3|4}] + upi[{1,3,5|2|4}] + upi[{1|2,3,5|4}]",
    );
    let words = ok(&["combinat", "mw-words", "{1,3,6|2|4,5}", "3"]);
    assert!(words.starts_with("abacca"), "{words}");
    same_terms(
        &["product", "--algebra", "qsym-embed", "(1,3,1)", "(1,2)"],
        "2*uq[(1,1,2,3,1)] + 2*uq[(1,1,3,1,2)] + 2*uq[(1,1,3,2,1)] + uq[(1,2,1,3,1)] + 2*uq[(1,3,1,1,2)] + uq[(1,3,1,2,1)]",
    );
    assert_eq!(
        ok(&["--limit", "14", "product", "--algebra", "sym-embed", "(3,3,2,1)", "(3,1,1)"]),
        "9*ul[(3,3,3,2,1,1,1)]"
    );
    assert!(ok(&["combinat", "closure", "involutions", "5"]).starts_with("closure: yes"));
}

#[test]
fn cycle_operations() {
    let cycles = ok(&["combinat", "cyclic-shuffle", "(132)", "(45)"]);
    assert_eq!(
        cycles,
        "(13245) (13254) (13425) (13452) (13524) (13542) (14325) (14352) (14532) (15324) (15342) (15432)"
    );
    let sets = ok(&["combinat", "matching-product", "(1)(2)", "(3)(4)"]);
    assert_eq!(
        sets.split(' ').collect::<BTreeSet<_>>(),
        ["(1)(2)(3)(4)", "(1)(23)(4)", "(1)(24)(3)", "(13)(2)(4)", "(13)(24)", "(14)(2)(3)", "(14)(23)"]
            .into_iter()
            .collect()
    );
    assert_eq!(ok(&["combinat", "matchings", "2", "2"]).split(' ').count(), 7);
}

#[test]
fn phisym_products_and_coproducts() {
    same_terms(
        &["product", "--algebra", "phisym", "12", "12"],
        "phi[1234] + phi[1324] + phi[1432] + phi[3214] + phi[3412] + phi[4231] + phi[4321]",
    );
    same_terms(
        &["product", "--algebra", "phisym", "12", "21"],
        "phi[1243] + phi[1342] + phi[1423] + phi[3241] + phi[4213]",
    );
    same_terms(
        &["product", "--algebra", "phisym", "312", "21"],
        "phi[31254] + phi[31452] + phi[31524] + phi[34251] + phi[34512] + phi[35214] + phi[35421] \
         + phi[41253] + phi[41532] + phi[45231] + phi[51234] + phi[51423] + phi[54213]",
    );
    same_terms(
        &["product", "--algebra", "phisym", "1", "4312"],
        "phi[15423] + phi[25413] + phi[35421] + phi[45123] + phi[51423]",
    );
    same_terms(
        &["coproduct", "--algebra", "phisym", "4231"],
        "phi[4231] ⊗ 1 + 2*phi[321] ⊗ phi[1] + phi[21] ⊗ phi[12] + phi[12] ⊗ phi[21] + 2*phi[1] ⊗ phi[321] + 1 ⊗ phi[4231]",
    );
    same_terms(&["coproduct", "--algebra", "phisym", "312"], "phi[312] ⊗ 1 + 1 ⊗ phi[312]");
    same_terms(
        &["coproduct", "--algebra", "phisym", "12"],
        "phi[12] ⊗ 1 + 2*phi[1] ⊗ phi[1] + 1 ⊗ phi[12]",
    );
    // the printed example has phi[4312] where the definition gives phi[2413]
    same_terms(
        &["convert", "--algebra", "phisym", "--from", "Ss", "--to", "phi", "2431"],
        "phi[2431] + phi[2413] + phi[2341] + phi[3421]",
    );
}

#[test]
fn phisym_quotient() {
    let y = |a: &str, b: &str| ok(&["product", "--algebra", "phisym", "--basis", "Y", a, b]);
    assert_eq!(terms(&y("(1,1)", "(2)")), terms("Y[(2,1,1)] + 4*Y[(3,1)]"));
    assert_eq!(terms(&y("(3)", "(2)")), terms("Y[(3,2)] + 12*Y[(5)]"));
    assert_eq!(terms(&y("(1,1)", "(1,1)")), terms("Y[(1,1,1,1)] + 2*Y[(2,2)] + 4*Y[(2,1,1)]"));
    assert_eq!(terms(&y("(1)", "(4)")), terms("Y[(4,1)] + 4*Y[(5)]"));
}

#[test]
fn verify_phisym() {
    let (code, out, _) = run(&["verify", "--algebra", "phisym", "--max-degree", "4"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("cocommutative: yes")), "{out}");
}

#[test]
fn stalactic() {
    assert_eq!(ok(&["count", "--family", "parking-stalactic", "5"]), "501");
    assert_eq!(ok(&["stalactic", "count", "parking-stalactic", "3"]), "13");
    assert_eq!(ok(&["count", "--family", "parking-stalactic", "--prefix", "6"]), "1, 3, 13, 73, 501, 4051");
    assert_eq!(ok(&["count", "--family", "endofunctions-stalactic", "--prefix", "6"]), "1, 4, 21, 136, 1045, 9276");
    assert_eq!(ok(&["count", "--family", "initial-words-stalactic", "--prefix", "6"]), "1, 3, 11, 49, 261, 1631");
    let ins = ok(&["stalactic", "insert", "cabccdbdd"]);
    let mut lines = ins.lines();
    // P lists columns in order of first occurrence
    assert_eq!(lines.next(), Some("P = cccabbddd"));
    assert_eq!(lines.next(), Some("Q = {1,4,5|2|3,7|6,8,9}"));
    assert!(ok(&["insert", "cabccdbd"]).contains("Q = {1,4,5|2|3,7|6,8}"));
    assert_eq!(ok(&["stalactic", "triangle", "lah", "4"]).lines().last(), Some("1 12 36 24"));
    assert_eq!(ok(&["triangle", "lah", "4"]).lines().last(), Some("1 12 36 24"));
}

#[test]
fn sequences() {
    assert_eq!(ok(&["count", "--family", "connected-endofunctions", "--prefix", "6"]), "1, 3, 20, 197, 2511, 38924");
    assert_eq!(ok(&["count", "--family", "free-lie", "--prefix", "6"]), "1, 3, 23, 223, 2800, 42576");
    assert_eq!(ok(&["count", "--family", "c-coefficients", "--prefix", "4"]), "1, 1, 3, 11, 53");
    assert_eq!(ok(&["count", "--family", "unlabelled-parking", "--prefix", "6"]), "1, 1, 3, 7, 19, 47, 130");
    assert_eq!(ok(&["count", "--family", "unlabelled-parking", "3"]), "7");
}

#[test]
fn symmetric_functions() {
    // e_k h_{n-k} = s_{(n-k,1^k)} + s_{(n-k+1,1^{k-1})}
    same_terms(&["convert", "--algebra", "sym", "--to", "s", "e(2)h(2)"], "s(2,1,1) + s(3,1)");
    same_terms(&["convert", "--algebra", "sym", "--to", "s", "e(3)h(1)"], "s(1,1,1,1) + s(2,1,1)");
}

#[test]
fn parking_functions() {
    same_terms(&["product", "--algebra", "cpqsym", "--basis", "Mpa", "1", "11"], "M[122] + M[121] + M[113]");
    same_terms(
        &["product", "--algebra", "cpqsym", "--basis", "Mpa", "1", "221"],
        "M[1332] + M[3231] + M[2231] + M[2214]",
    );
    same_terms(
        &["coproduct", "--algebra", "cpqsym", "4131166"],
        "M[4131166] ⊗ 1 + M[41311] ⊗ M[11] + 1 ⊗ M[4131166]",
    );
    same_terms(
        &["coproduct", "--algebra", "cpqsym", "--basis", "Mpa", "525124"],
        "M[525124] ⊗ 1 + 1 ⊗ M[525124]",
    );
    same_terms(
        &["product", "--algebra", "cpqsym", "--basis", "Mpa", "12", "21"],
        "M[1243] + M[1432] + M[4231] + M[1324] + M[3214] + M[2134]",
    );
    // 121 is not nondecreasing and vanishes in the quotient
    same_terms(&["product", "--algebra", "ccqsym", "1", "11"], "M[122] + M[113]");
}

#[test]
fn q_deformations() {
    same_terms(
        &["coproduct", "--algebra", "ncsf-q", "(2)"],
        "S[(2)] ⊗ 1 + q*S[(1)] ⊗ S[(1)] + 1 ⊗ S[(2)]",
    );
    same_terms(
        &["coproduct", "--algebra", "fqsym-q", "2431"],
        "F[2431] ⊗ 1 + q^3*F[132] ⊗ F[1] + q^3*F[12] ⊗ F[21] + q*F[1] ⊗ F[321] + 1 ⊗ F[2431]",
    );
    same_terms(&["coproduct", "--algebra", "fqsym-q", "21"], "F[21] ⊗ 1 + q*F[1] ⊗ F[1] + 1 ⊗ F[21]");
    same_terms(
        &["coproduct", "--algebra", "fqsym-q", "3421"],
        "F[3421] ⊗ 1 + q^3*F[231] ⊗ F[1] + q^4*F[12] ⊗ F[21] + q^2*F[1] ⊗ F[321] + 1 ⊗ F[3421]",
    );
    same_terms(&["coproduct", "--algebra", "fqsym-q", "213"], "F[213] ⊗ 1 + F[21] ⊗ F[1] + q*F[1] ⊗ F[12] + 1 ⊗ F[213]");
    same_terms(&["coproduct", "--algebra", "fqsym-q", "231"], "F[231] ⊗ 1 + q^2*F[12] ⊗ F[1] + q*F[1] ⊗ F[21] + 1 ⊗ F[231]");
    same_terms(&["coproduct", "--algebra", "fqsym-q", "321"], "F[321] ⊗ 1 + q^2*F[21] ⊗ F[1] + q^2*F[1] ⊗ F[21] + 1 ⊗ F[321]");
    same_terms(&["product", "--algebra", "fqsym-q", "21", "1"], "F[213] + F[231] + F[321]");
    // (Δ_q F_21)·_χ(Δ_q F_1) = Δ_q(F_213 + F_231 + F_321)
    let twisted = ok(&["coproduct", "--algebra", "fqsym-q", "21", "1"]);
    assert_eq!(twisted, ok(&["coproduct", "--algebra", "fqsym-q", "F[213] + F[231] + F[321]"]));
    assert_eq!(ok(&["insert", "bca", "--system", "qH"]), "q·bac");
    same_terms(&["--q", "0", "coproduct", "--algebra", "fqsym-restricted", "21"], "F[21] ⊗ 1 + 1 ⊗ F[21]");
    same_terms(&["--q", "0", "coproduct", "--algebra", "fqsym-q", "21"], "F[21] ⊗ 1 + 1 ⊗ F[21]");
    assert_eq!(ok(&["count", "--family", "q-sylvester", "--prefix", "6"]), "1, 2, 5, 14, 42, 132");
}

#[test]
fn oracles_and_duality() {
    for a in ["eqsym", "sgqsym", "phisym", "wsym", "qsym-q"] {
        let (code, out, err) = run(&["verify", "--algebra", a, "--oracle", "--max-degree", "4"]);
        assert_eq!(code, 0, "{a}: {out}{err}");
    }
    let (code, _, _) = run(&["verify", "--algebra", "eqsym", "--oracle", "--max-degree", "4", "--truncation", "6"]);
    assert_eq!(code, 0);
    for a in ["eqsym", "sgqsym", "ccqsym"] {
        let (code, out, _) = run(&["verify", "--algebra", a, "--dual", "--max-degree", "3"]);
        assert_eq!(code, 0, "{out}");
    }
}

#[test]
fn exit_codes() {
    let (code, _, err) = run(&["product", "--algebra", "nope", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("eqsym"), "usage lists the algebras: {err}");
    assert_eq!(run(&["product", "--algebra", "eqsym", "--basis", "Z", "1"]).0, 2);
    assert_eq!(run(&["product", "--algebra", "sgqsym", "1x"]).0, 2);
    assert_eq!(run(&["verify", "--algebra", "eqsym", "--oracle", "--truncation", "2", "--max-degree", "3"]).0, 2);
    // the generic-q restricted coproduct is not coassociative
    let (code, out, _) = run(&["verify", "--algebra", "fqsym-restricted", "--max-degree", "3"]);
    assert_eq!(code, 1);
    assert!(out.contains("coassociativity: no"), "{out}");
}

#[test]
fn resource_guard() {
    let (code, _, err) = run(&["--limit", "3", "product", "--algebra", "sgqsym", "12", "21"]);
    assert_eq!(code, 2);
    assert!(err.contains("limit"), "{err}");
    let out = Command::new(env!("CARGO_BIN_EXE_hopfcomb"))
        .args(["product", "--algebra", "sgqsym", "12", "21"])
        .env("HOPFCOMB_MAX_DEGREE", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // the flag wins over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_hopfcomb"))
        .args(["--limit", "4", "product", "--algebra", "sgqsym", "12", "21"])
        .env("HOPFCOMB_MAX_DEGREE", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn json_and_determinism() {
    let args = ["--format", "json", "product", "--algebra", "eqsym", "1", "22"];
    let a = ok(&args);
    assert_eq!(a, ok(&args));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    let labels: BTreeSet<&str> = v.as_array().unwrap().iter().map(|t| t["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["133", "223", "323"].into_iter().collect());
    let d: serde_json::Value =
        serde_json::from_str(&ok(&["--format", "json", "coproduct", "--algebra", "eqsym", "4232277"])).unwrap();
    assert_eq!(d[1]["left"], "42322");
    assert_eq!(d[1]["right"], "22");
}
