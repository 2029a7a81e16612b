use serde_json::Value;

use higgsrel_web::{check_relation, dimension_table, generators};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).expect("exports return json")
}

#[test]
fn table_rows_agree() {
    let v = parse(dimension_table(2, 3, 0, 1));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["quotient"], 6);
    assert_eq!(rows[1]["quotient"], 9);
    assert_eq!(rows[2]["quotient"], 18);
    assert!(rows.iter().all(|r| r["equal"] == true));
}

#[test]
fn generator_listing() {
    let v = parse(generators(2, 0, 9));
    let gens = v["generators"].as_array().unwrap();
    assert_eq!(gens[0]["label"], "rho^2_{1,1,0}");
    assert_eq!(gens[0]["poly"], "2*a*b + 2*g3");
    let last = gens.last().unwrap();
    assert_eq!(last["label"], "gamma^3");
    assert_eq!(last["poly"], "g3^3");
}

#[test]
fn relation_verdicts() {
    let v = parse(check_relation(2, 0, "g3^3"));
    assert_eq!(v["verdict"], true);
    let v = parse(check_relation(2, 2, "a"));
    assert_eq!(v["verdict"], false);
}

#[test]
fn errors_are_json() {
    for s in [
        dimension_table(1, 2, 0, 0),
        dimension_table(3, 2, 0, 0),
        generators(2, 9, 3),
        generators(2, 0, 31),
        check_relation(2, 0, "a +"),
        check_relation(2, 0, "g3^40"),
    ] {
        assert!(parse(s)["error"].is_string());
    }
}
