use surdcf_wasm::{evaluate_json, expand_json, explore_cn_json};

#[test]
fn evaluate_reports_value_and_epsilon() {
    let v = evaluate_json("[0; (1,2,2,3)]").unwrap();
    assert_eq!(v["value"]["text"], "(-19 + sqrt(837))/14");
    assert_eq!(v["two_a"], "-19/7");
    assert_eq!(v["epsilon"], "2/7");
    assert_eq!(v["convergents"][4]["p"], "17");

    let v = evaluate_json("[1; (2)]").unwrap();
    assert_eq!(v["value"]["text"], "sqrt(2)");
    assert!(v["epsilon"].is_null());
}

#[test]
fn evaluate_errors_carry_a_caret() {
    let e = evaluate_json("[0; (1,2").unwrap_err();
    assert!(e.contains('^'), "{e}");
    assert!(evaluate_json("[0; 1, 2]").is_err());
}

#[test]
fn expand_golden() {
    let v = expand_json("sqrt(39/44)").unwrap();
    assert_eq!(v["expansion"], "[0; 1, (16,11,1,3,2,3,1,11,16,2)]");
    assert_eq!(v["period"], 10);
    assert!(expand_json("sqrt(9/4)").is_err());
}

#[test]
fn epsilon_is_flat_in_cn() {
    let v = explore_cn_json("1, 2, 2", 6).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r["epsilon"] == "2/7"));
    assert_eq!(rows[2]["discriminant"], "837");
    assert_eq!(rows[4]["discriminant"], "1845");
    assert_eq!(rows[4]["two_a"], "-33/7");
    assert_eq!(v["denominator"], "14");

    assert_eq!(explore_cn_json("", 3).unwrap()["rows"][0]["value"], "(-1 + sqrt(5))/2");
    assert!(explore_cn_json("1, 0", 3).is_err());
}
