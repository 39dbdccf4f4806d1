use std::path::PathBuf;
use std::process::{Command, Output};

use ears_core::ears::{DatumJson, EarsDatum};
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).to_string_lossy().into_owned()
}

fn ears(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ears")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_out(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn check_b2_fixture_passes() {
    let o = ears(&["ears", "check", "--in", &fixture("b2_datum.json"), "--box", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json_out(&o);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn orbit_table_matches_fixture() {
    let o = ears(&["twist", "orbits", "--type", "D", "--rank", "4", "--order", "3", "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), std::fs::read_to_string(fixture("d4_table1.txt")).unwrap());
}

#[test]
fn projection_table_matches_fixture() {
    let o = ears(&["twist", "proj", "--type", "D", "--rank", "4", "--order", "3", "--format", "table"]);
    assert_eq!(stdout(&o), std::fs::read_to_string(fixture("d4_table2.txt")).unwrap());
}

#[test]
fn d4_dims() {
    let o = ears(&["twist", "dims", "--type", "D", "--rank", "4", "--order", "3", "--kmax", "6"]);
    let v = json_out(&o);
    let dims: Vec<u64> = v["dims"].as_array().unwrap().iter().map(|d| d["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, vec![1, 1, 2, 1, 1, 2]);
}

#[test]
fn separation_json() {
    let o = ears(&["twist", "separation", "--type", "A", "--rank", "4", "--order", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_out(&o)["separated"], true);
}

#[test]
fn output_is_deterministic() {
    let args = ["ears", "subsystem", "--in", &fixture("a2_lattice.json"), "--seed", "7", "--box", "2"];
    let a = ears(&args);
    let b = ears(&args);
    assert_eq!(a.stdout, b.stdout);
    let p = ["twist", "proj", "--type", "D", "--rank", "4", "--order", "3"];
    assert_eq!(ears(&p).stdout, ears(&p).stdout);
}

#[test]
fn thread_cap_gives_same_report() {
    let args = ["ears", "check", "--in", &fixture("a1_index2.json"), "--box", "2"];
    let one = Command::new(env!("CARGO_BIN_EXE_ears")).args(args).env("EARS_KIT_THREADS", "1").output().unwrap();
    assert_eq!(one.stdout, ears(&args).stdout);
}

#[test]
fn build_output_round_trips() {
    let o = ears(&["ears", "build", "--in", &fixture("b2_datum.json")]);
    let v = json_out(&o);
    let j: DatumJson = serde_json::from_value(v["datum"].clone()).unwrap();
    let d = EarsDatum::from_json(j).unwrap();
    assert_eq!(serde_json::to_value(&d).unwrap(), v["datum"]);
    assert_eq!(v["summary"]["index_s"], 2);
    assert_eq!(v["summary"]["label"], "B2");
}

#[test]
fn subsystem_and_affinize() {
    let o = ears(&["ears", "subsystem", "--in", &fixture("b2_subsystem.json"), "--box", "2"]);
    let v = json_out(&o);
    assert_eq!(v["subsystem"]["nullity"], 0);
    assert_eq!(v["subsystem"]["type_label"], "B2");
    assert_eq!(v["closedness"]["status"], "ok");
    let o = ears(&["ears", "affinize", "--in", &fixture("a2_lattice.json"), "--delta", "0,1", "--box", "2"]);
    let v = json_out(&o);
    assert_eq!(v["subsystem"]["nullity"], 1);
    assert_eq!(v["subsystem"]["isotropic_lattice"], serde_json::json!([[0, 1]]));
}

#[test]
fn filter_chain() {
    let o = ears(&["ears", "filter", "--in", &fixture("a2_filter.json")]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_out(&o);
    let nulls: Vec<u64> = v["links"].as_array().unwrap().iter().map(|l| l["nullity"].as_u64().unwrap()).collect();
    assert_eq!(nulls, vec![0, 1, 2, 3]);
}

#[test]
fn lemma_from_restriction() {
    let doc = r#"{"datum":{"finite":{"type":"A","rank":1},"nullity":2,"S":{"rank":2}},
        "decomposition":{"lambda1":[[1,0]],"lambda2":[[0,1]]},"u1":[[2,0]],"lambda2_prime":[[0,1]]}"#;
    let o = ears(&["ears", "lemma-s1", "--in", doc, "--box", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(json_out(&o)["status"], "ok");
}

#[test]
fn realize_reports() {
    let v = json_out(&ears(&["realize", "bl", "--l", "2", "--sigma", "1,0", "--k", "2", "--box", "2"]));
    assert_eq!(v["family"], "bl");
    assert_eq!(v["dim"], 2);
    assert_eq!(v["sigma"], serde_json::json!([1, 0]));
    let v = json_out(&ears(&["realize", "toroidal", "--l", "1", "--delta", "1,1", "--k", "-1"]));
    assert_eq!(v["dim"], 1);
    let o = ears(&["realize", "a1-tkk", "--i", "1", "--sigma", "1,1", "--t", "1", "--box", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json_out(&o).as_array().unwrap().iter().all(|c| c["agree"] == true));
    let o = ears(&["realize", "a1-rokn3", "--box", "2"]);
    assert_eq!(json_out(&o)["status"], "ok");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(ears(&["ears", "nonsense"]).status.code(), Some(2));
    assert_eq!(ears(&["twist", "orbits", "--type", "D"]).status.code(), Some(2));
    assert_eq!(ears(&["ears", "check", "--box", "0", "--in", "x"]).status.code(), Some(2));
}

#[test]
fn domain_errors_exit_1_with_json() {
    for args in [
        vec!["ears", "check", "--in", "{not json"],
        vec!["twist", "orbits", "--type", "A", "--rank", "3", "--order", "3"],
        vec!["ears", "finite", "--in", r#"{"datum":{"finite":{"type":"A","rank":1},"nullity":1,"S":{"rank":1}},"T":[]}"#],
    ] {
        let o = ears(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        let e: Value = serde_json::from_slice(&o.stderr).expect("JSON error on stderr");
        assert!(e["message"].is_string());
    }
}

#[test]
fn failed_check_exits_1() {
    // S without the zero coset
    let doc = r#"{"finite":{"type":"A","rank":1},"nullity":1,"S":{"rank":1,"coset_reps":[[1]]}}"#;
    let o = ears(&["ears", "check", "--in", doc, "--box", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json_out(&o)["status"], "fail");
}
