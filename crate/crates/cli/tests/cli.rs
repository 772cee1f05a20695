use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn surdcf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_surdcf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = surdcf(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn validate(schema_file: &str, instance: &Value) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema").join(schema_file);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema_file}: {errors:?}\n{instance:#}");
}

/// `key   value` lines of the text report.
fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).filter(|rest| rest.starts_with(' ')).map(str::trim))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
}

#[test]
fn eval_text_report() {
    let o = surdcf(&["eval", "[0; (1,2,2,3)]"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(field(&text, "value"), "(-19 + sqrt(837))/14");
    assert_eq!(field(&text, "two_a"), "-19/7");
    assert_eq!(field(&text, "epsilon"), "2/7");
    assert_eq!(field(&text, "equation"), "7x^2+19x-17=0");

    let text = stdout(&surdcf(&["eval", "[0; (1)]"]));
    assert_eq!(field(&text, "value"), "(-1 + sqrt(5))/2");
}

#[test]
fn json_and_text_agree() {
    for cf in ["[0; (1,2,2,3)]", "[0; (2,3,1,3,2,1)]", "[0; (2,1,1)]", "[3; 1, (4,5)]"] {
        let j = json(&["eval", cf, "--json"]);
        validate("eval.schema.json", &j);
        let text = stdout(&surdcf(&["eval", cf]));
        assert_eq!(field(&text, "value"), j["value"]["text"]);
        assert_eq!(field(&text, "decimal"), j["value"]["decimal"]);
        assert_eq!(field(&text, "two_a"), j["two_a"]);
        if let Some(eps) = j["epsilon"].as_str() {
            assert_eq!(field(&text, "epsilon"), eps);
            assert!(field(&text, "frac_two_a").starts_with(j["frac_two_a"].as_str().unwrap()));
        }
    }
    let j = json(&["eval", "[0; (2,3,1,3,2,1)]", "--json"]);
    assert_eq!(j["value"]["rational_part"], "-1/2");
    assert_eq!(j["value"]["radicand"], "39/44");
    assert_eq!(j["value"]["sign"], "+");
    assert_eq!(j["theorem2"]["palindrome"], true);
}

#[test]
fn expand_outputs() {
    assert_eq!(stdout(&surdcf(&["expand", "sqrt(39/44)"])), "[0; 1, (16,11,1,3,2,3,1,11,16,2)]\n");
    assert_eq!(stdout(&surdcf(&["expand", "(-19 + sqrt(837))/14"])), "[0; (1,2,2,3)]\n");
    assert_eq!(stdout(&surdcf(&["expand", "sqrt(2)"])), "[1; (2)]\n");
    let j = json(&["expand", "sqrt(39/44)", "--json"]);
    validate("expand.schema.json", &j);
    assert_eq!(j["initial"], serde_json::json!(["0", "1"]));
}

#[test]
fn epsilon_and_roundtrip_reports() {
    let j = json(&["epsilon", "[0; (1,2,2,3)]", "--json"]);
    validate("epsilon.schema.json", &j);
    assert_eq!(j["epsilon"], "2/7");
    assert_eq!(j["discriminant"]["a"], "49");
    let j = json(&["roundtrip", "[0; (1,1)]", "--json"]);
    validate("roundtrip.schema.json", &j);
    assert_eq!(j["pass"], true);
    assert_eq!(j["canonical_input"], "[0; (1)]");
    let o = surdcf(&["roundtrip", "[0; (1,2,2,5)]", "--digits", "300"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS"));
}

#[test]
fn exit_codes() {
    let o = surdcf(&["eval", "[0; (1,2"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains('^'), "{err}");
    assert_eq!(surdcf(&["eval", "[0; (1,0,2)]"]).status.code(), Some(3));
    assert_eq!(surdcf(&["expand", "sqrt(39/44)", "--steps", "4"]).status.code(), Some(4));
    assert_eq!(surdcf(&["expand", "sqrt(4)"]).status.code(), Some(2));
    assert_eq!(surdcf(&["roundtrip", "[0; (1,0)]"]).status.code(), Some(3));
    assert_eq!(surdcf(&["enumerate", "--max-len", "0", "--max-digit", "3"]).status.code(), Some(2));
    assert_eq!(surdcf_cli::ExitStatus::Violation.code(), 5);
}

#[test]
fn enumerate_is_deterministic() {
    let args = ["enumerate", "--max-len", "3", "--max-digit", "4", "--json"];
    let one = surdcf(&[&args[..], &["--workers", "1"]].concat());
    let many = surdcf(&[&args[..], &["--workers", "4"]].concat());
    let again = surdcf(&[&args[..], &["--workers", "4"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(many.stdout, again.stdout);
    let j: Value = serde_json::from_slice(&one.stdout).unwrap();
    validate("enumerate.schema.json", &j);
    assert_eq!(j["blocks_checked"], 4 + 16 + 64);
    assert_eq!(j["violations"], serde_json::json!([]));
}

#[test]
fn enumerate_small_cases() {
    let j = json(&["enumerate", "--max-len", "1", "--max-digit", "3", "--json"]);
    assert_eq!(j["epsilon_zero_count"], 3);
    let text = stdout(&surdcf(&["enumerate", "--max-len", "2", "--max-digit", "2"]));
    assert!(text.starts_with("smoke [0; (1,2,2,3)]"));
    assert_eq!(field(&text, "blocks_checked"), "6");
}

#[test]
fn out_file() {
    let dir = std::env::temp_dir().join(format!("surdcf-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = surdcf(&["eval", "[0; (1)]", "--json", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let j: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(j["value"]["text"], "(-1 + sqrt(5))/2");
    std::fs::remove_dir_all(dir).unwrap();
}
