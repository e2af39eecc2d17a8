use flagbodies_web::{certify_json, measure_json, pattern_points_json};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn certifies_weights() {
    let v = parse(&certify_json("A", "1,1").unwrap());
    assert_eq!(v["certified"], true);
    assert_eq!(v["lattice_volume"], "6");
    assert_eq!(v["fflv_equal"], true);
    let v = parse(&certify_json("b", "2, 1").unwrap());
    assert_eq!(v["certified"], true);
    assert_eq!(v["scale"], 2);
    assert!(certify_json("E", "1").is_err());
    assert!(certify_json("A", "1,x").is_err());
}

#[test]
fn lists_pattern_points() {
    let v = parse(&pattern_points_json("fflv", "C", "1,1").unwrap());
    assert_eq!(v["count"], 16);
    assert_eq!(v["weyl_dim"], "16");
    assert_eq!(v["points"].as_array().unwrap().len(), 16);
    let v = parse(&pattern_points_json("gz", "B", "0,1").unwrap());
    assert_eq!(v["count"], 4);
    assert_eq!(v["points"][0].as_array().unwrap().len(), 4);
    assert!(pattern_points_json("fflv", "D", "1,0,0").is_err());
    assert!(pattern_points_json("abc", "A", "1").is_err());
}

#[test]
fn measures_json_polytopes() {
    let v = parse(&measure_json(r#"{"dim":2,"vertices":[["0","0"],["2","0"],["0","2"]]}"#).unwrap());
    assert_eq!(v["normalized_volume"], "4");
    assert_eq!(v["lattice_points"], 6);
    assert_eq!(v["facets"], 3);
    let v = parse(&measure_json(r#"{"dim":1,"ineqs":[{"a":["1"],"b":"3"},{"a":["-1"],"b":"0"}]}"#).unwrap());
    assert_eq!(v["lattice_points"], 4);
    assert!(measure_json("{").is_err());
}
