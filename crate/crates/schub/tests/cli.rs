use std::process::Command;

use schub::{run, EXIT_DOMAIN, EXIT_OK, EXIT_VERIFY};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("schub").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn value(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, EXIT_OK, "{err}");
    out.trim_end().to_string()
}

fn scratch(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("schub-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn worked_examples() {
    assert_eq!(value(&["c", "--type", "A2", "--u", "1", "--v", "1 2", "--w", "1 2 1"]), "1");
    assert_eq!(value(&["c", "--type", "A2", "--u", "1", "--v", "2 1", "--w", "1 2 1"]), "0");
    assert_eq!(
        value(&["a", "--type", "A3", "--u-perm", "1432", "--v-perm", "3214", "--w-perm", "3421"]),
        "e[0,-1,0] - e[-1,-2,-1]"
    );
    assert_eq!(
        value(&["c", "--type", "A3", "--u-perm", "1432", "--v-perm", "3214", "--w-perm", "3421"]),
        "a1 + a2 + a3"
    );
    assert_eq!(value(&["recurse", "--type", "A3", "--u-perm", "3124", "--v-perm", "1324", "--w-perm", "3214"]), "1");
    assert_eq!(value(&["recurse", "--type", "A3", "--u-perm", "2134", "--v-perm", "1324", "--w-perm", "2314"]), "1");
}

#[test]
fn variants_and_descents_agree() {
    let base = ["--type", "B2", "--u", "2", "--v", "1 2", "--w", "1 2 1"];
    let c = value(&[&["c"][..], &base].concat());
    assert_eq!(value(&[&["c", "--variant", "rdd"][..], &base].concat()), c);
    assert_eq!(value(&[&["recurse"][..], &base].concat()), c);
}

#[test]
fn domain_and_parse_errors() {
    let (code, _, err) = call(&["c", "--type", "A2", "--u", "1", "--v", "1", "--w", "1 1"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("not reduced"), "{err}");

    let (code, _, err) = call(&["c", "--type", "A2", "--u", "1", "--v", "1 x", "--w", "1 2 1"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("--v:1:3: expected"), "{err}");

    let (code, _, _) = call(&["c", "--type", "A2", "--u", "4", "--v", "1", "--w", "1"]);
    assert_eq!(code, EXIT_DOMAIN);
    let (code, _, _) = call(&["c", "--type", "Q7", "--u", "1", "--v", "1", "--w", "1"]);
    assert_eq!(code, EXIT_DOMAIN);
    let (code, _, _) = call(&["verify", "--suite", "nonsense"]);
    assert_eq!(code, EXIT_DOMAIN);
    let (code, _, _) = call(&["c", "--type", "A2", "--u-perm", "12", "--v", "1", "--w", "1"]);
    assert_eq!(code, EXIT_DOMAIN);
}

#[test]
fn json_terms_rebuild_the_value() {
    let (code, out, _) =
        call(&["--format", "json", "a", "--type", "A3", "--u-perm", "1432", "--v-perm", "3214", "--w-perm", "3421"]);
    assert_eq!(code, EXIT_OK);
    let j: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(j["command"], "a");
    assert_eq!(j["ring"], "K");
    assert_eq!(j["cartan"]["name"], "A3");
    assert_eq!(j["cartan"]["rank"], 3);
    assert_eq!(j["value"], "e[0,-1,0] - e[-1,-2,-1]");
    let terms: Vec<(Vec<i64>, String)> = j["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let e = t["exponents"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
            (e, t["coefficient"].as_str().unwrap().to_string())
        })
        .collect();
    assert_eq!(terms, vec![(vec![0, -1, 0], "1".to_string()), (vec![-1, -2, -1], "-1".to_string())]);

    let (_, out, _) =
        call(&["--format", "json", "c", "--type", "A3", "--u-perm", "1432", "--v-perm", "3214", "--w-perm", "3421"]);
    let j: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(j["ring"], "H");
    assert_eq!(j["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn gcm_file_matches_builtin_type() {
    let p = scratch("b2.gcm", "# B2\n2\n\n2 -1\n-2 2\n");
    let path = p.to_str().unwrap();
    for cmd in ["c", "a", "a0"] {
        let args = ["--u", "2", "--v", "1 2", "--w", "1 2 1"];
        let builtin = value(&[&[cmd, "--type", "B2"][..], &args].concat());
        assert_eq!(value(&[&[cmd, "--gcm", path][..], &args].concat()), builtin);
    }
    let bad = scratch("bad.gcm", "2\n2 -1\n");
    let (code, _, err) = call(&["c", "--gcm", bad.to_str().unwrap(), "--u", "1", "--v", "1", "--w", "1"]);
    assert_eq!(code, EXIT_DOMAIN, "{err}");
}

#[test]
fn restrictions_and_bott_samelson() {
    assert_eq!(value(&["restrict", "--type", "A2", "--v", "1", "--w", "1"]), "a1");
    assert_eq!(value(&["restrict", "--type", "A2", "--v", "1", "--w", "2"]), "0");
    assert_eq!(value(&["restrict", "--type", "A2", "--v", "", "--w", "1 2 1"]), "1");
    assert_eq!(value(&["bs", "--type", "A2", "--q", "1 2 1", "--r", "100", "--s", "010", "--j", "110"]), "1");
    let (code, _, err) = call(&["bs", "--type", "A2", "--q", "1 2 1", "--r", "1", "--s", "010"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("--r:1:2: expected"), "{err}");
}

#[test]
fn table_lists_every_nonzero_constant() {
    let out = value(&["table", "--type", "A2"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "u=[] v=[] w=[]: 1");
    assert!(lines.contains(&"u=[1] v=[1 2] w=[1 2 1]: 1"));
    assert!(!lines.iter().any(|l| l.starts_with("u=[1] v=[2 1] w=[1 2 1]")));

    let json = value(&["--format", "json", "table", "--type", "A2", "--theory", "k-structure"]);
    for l in json.lines() {
        let j: serde_json::Value = serde_json::from_str(l).unwrap();
        assert_eq!(j["ring"], "K");
    }
    let (code, _, _) = call(&["table", "--type", "A4", "--limit", "10"]);
    assert_eq!(code, EXIT_DOMAIN);
}

#[test]
fn verify_reports_and_is_repeatable() {
    let (code, out, _) = call(&["verify", "--suite", "examples"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");

    let args = ["--format", "json", "verify", "--suite", "degeneration", "--random-triples", "20", "--seed", "9"];
    let (code, first, _) = call(&args);
    assert_eq!(code, EXIT_OK);
    let j: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(j["passed"], true);
    assert_eq!(j["seed"], 9);
    let cases = |v: &serde_json::Value| -> Vec<u64> {
        v["checks"].as_array().unwrap().iter().map(|c| c["cases"].as_u64().unwrap()).collect()
    };
    let again: serde_json::Value = serde_json::from_str(&call(&args).1).unwrap();
    assert_eq!(cases(&j), cases(&again));

    let report = std::env::temp_dir().join(format!("schub-report-{}.json", std::process::id()));
    let (code, _, _) = call(&["verify", "--suite", "examples", "--report", report.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let saved: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(saved["suite"], "examples");
}

#[test]
fn verify_failure_exits_with_two() {
    let p = scratch("affine.gcm", "2\n2 -2\n-2 2\n");
    let (code, out, _) = call(&["verify", "--gcm", p.to_str().unwrap(), "--suite", "positivity"]);
    assert_eq!(code, EXIT_VERIFY, "{out}");
    assert!(out.contains("FAIL"));
}

#[test]
fn binary_exit_codes_and_thread_setting() {
    let bin = env!("CARGO_BIN_EXE_schub");
    let out = Command::new(bin)
        .args(["c", "--type", "A2", "--u", "1", "--v", "1 2", "--w", "1 2 1"])
        .env("SCHUB_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "1");

    let out = Command::new(bin).args(["c", "--type", "A2"]).env("SCHUB_THREADS", "many").output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_DOMAIN));

    let out = Command::new(bin).args(["--threads", "1", "verify", "--suite", "examples"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
}
