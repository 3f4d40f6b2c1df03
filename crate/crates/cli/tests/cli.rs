use std::process::{Command, Output};

use hurmono::{ComponentReport, HurwitzSpec, MarkedTuple, SpaceReport};
use serde_json::Value;

fn hurmono(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurmono"))
        .args(args)
        .env_remove("HURMONO_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn space(d: &'static str, g: &'static str, p: &'static str) -> Vec<&'static str> {
    vec!["--degrees", d, "--genera", g, "--profiles", p]
}

fn json_of(o: &Output) -> Value {
    assert_eq!(o.status.code(), Some(0), "{}", stderr(o));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn sheets_counts() {
    for (d, g, p, n) in [
        ("3", "0", "2,1;2,1;2,1;2,1", 4),
        ("2", "0", "2;1,1;1,1;1,1", 0),
        ("1,1", "0,0", "1,1;1,1;1,1;1,1", 8),
    ] {
        let mut args = vec!["sheets"];
        args.extend(space(d, g, p));
        let text = hurmono(&args);
        assert_eq!(text.status.code(), Some(0));
        assert!(stdout(&text).starts_with("H_{"));
        assert!(stdout(&text)
            .lines()
            .next()
            .unwrap()
            .ends_with(&format!(": {n} sheets")));

        args.extend(["--format", "json"]);
        let v = json_of(&hurmono(&args));
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["sheet_count"], n);
        let sheets: Vec<MarkedTuple> = serde_json::from_value(v["sheets"].clone()).unwrap();
        assert_eq!(sheets.len(), n);
        let spec: HurwitzSpec = serde_json::from_value(v["space"].clone()).unwrap();
        for t in &sheets {
            t.conforms_to(&spec).unwrap();
        }
    }
}

#[test]
fn sheets_csv() {
    let mut args = vec!["sheets", "--format", "csv"];
    args.extend(space("2", "1", "2^4"));
    let out = stdout(&hurmono(&args));
    assert_eq!(
        out,
        "sheet,fiber,cycle,label\n1,1,1 2,1\n1,2,1 2,1\n1,3,1 2,1\n1,4,1 2,1\n"
    );
}

#[test]
fn report_examples() {
    let mut args = vec!["report", "--format", "json"];
    args.extend(space("3", "0", "3;2,1;2,1;1,1,1"));
    let r: SpaceReport = serde_json::from_value(json_of(&hurmono(&args))).unwrap();
    assert_eq!(r.sheet_count, 6);
    assert_eq!(r.components.len(), 1);
    assert_eq!((r.components[0].degree, r.components[0].genus), (6, 0));
    assert!(r.components[0].monodromy.is_none());

    let mut args = vec!["report"];
    args.extend(space("4", "0", "2,2;3,1;2,1,1;2,1,1"));
    let out = stdout(&hurmono(&args));
    assert!(out.contains("24 sheets, 1 component\n"), "{out}");
    assert!(out.contains("component 1: degree 24, genus 1"), "{out}");

    let mut args = vec!["report"];
    args.extend(space("2", "0", "2^4"));
    let o = hurmono(&args);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 sheets, 0 components"));
}

#[test]
fn report_verbose_includes_monodromy() {
    let mut args = vec!["report", "-v", "--format", "json"];
    args.extend(space("3", "0", "2,1^4"));
    let v = json_of(&hurmono(&args));
    let comps: Vec<ComponentReport> = serde_json::from_value(v["components"].clone()).unwrap();
    let m = comps[0].monodromy.as_ref().expect("monodromy at -v");
    let moved: usize = m.zero.iter().map(Vec::len).sum();
    assert_eq!(moved, 4);

    let mut args = vec!["report", "-v"];
    args.extend(space("3", "0", "2,1^4"));
    assert!(stdout(&hurmono(&args)).contains("s_zero"));
}

#[test]
fn json_round_trip() {
    let mut args = vec!["report", "-v", "--format", "json"];
    args.extend(space("3", "0", "3;2,1;2,1;1,1,1"));
    let v = json_of(&hurmono(&args));
    let r: SpaceReport = serde_json::from_value(v.clone()).unwrap();
    let again = hurmono::report(&r.space).unwrap();
    assert_eq!(r.components.len(), again.components.len());
    for (a, b) in r.components.iter().zip(&again.components) {
        let mut b = b.clone();
        b.monodromy = a.monodromy.clone();
        assert_eq!(a, &b);
    }
    let mut reserialized = serde_json::to_value(&r).unwrap();
    reserialized["schema_version"] = 1.into();
    assert_eq!(reserialized, v);
}

#[test]
fn report_csv() {
    let mut args = vec!["report", "--format", "csv"];
    args.extend(space("3", "0", "2,1^4"));
    let out = stdout(&hurmono(&args));
    let mut lines = out.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("component,degree,genus,ram_zero"));
    assert!(lines.next().unwrap().starts_with("1,4,0,"));
    assert!(lines.next().is_none());
}

#[test]
fn deterministic_output() {
    let mut args = vec!["report", "-v", "--format", "json"];
    args.extend(space("4", "0", "2,2;3,1;2,1,1;2,1,1"));
    let a = hurmono(&args).stdout;
    let mut threaded = args.clone();
    threaded.extend(["--threads", "1"]);
    assert_eq!(a, hurmono(&args).stdout);
    assert_eq!(a, hurmono(&threaded).stdout);
}

#[test]
fn usage_errors_exit_2_and_name_the_flag() {
    for (args, needle) in [
        (space("x", "0", "2;2;2;2"), "--degrees"),
        (space("2", "0,1", "2;2;2;2"), "--genera"),
        (space("2", "1", "2;2;3;2"), "--profiles"),
    ] {
        let mut full = vec!["sheets"];
        full.extend(args);
        let o = hurmono(&full);
        assert_eq!(o.status.code(), Some(2));
        assert!(stderr(&o).contains(needle), "{}", stderr(&o));
    }
    let o = hurmono(&["sheets", "--degrees", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = hurmono(&[
        "report",
        "--format",
        "yaml",
        "--degrees",
        "2",
        "--genera",
        "1",
        "--profiles",
        "2^4",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn report_needs_four_fibers() {
    let mut args = vec!["report"];
    args.extend(space("2", "0", "2;2;1,1"));
    let o = hurmono(&args);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("monodromy requires exactly 4 marked fibers"));

    // sheets alone work for any number of fibers
    let mut args = vec!["sheets"];
    args.extend(space("2", "0", "2;2;1,1"));
    assert_eq!(hurmono(&args).status.code(), Some(0));
}

#[test]
fn guard_exits_3() {
    let mut args = vec!["sheets"];
    args.extend(space("10", "0", "10;10;1,1,1,1,1,1,1,1,1,1"));
    let o = hurmono(&args);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("too large"));
}

#[test]
fn threads_flag_and_env() {
    let o = hurmono(&["--threads", "0", "verify", "--degree", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_hurmono"))
        .args(["verify", "--degree", "2"])
        .env("HURMONO_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_hurmono"))
        .args(["verify", "--degree", "2"])
        .env("HURMONO_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_degree_two_and_three() {
    let o = hurmono(&["verify", "--degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3/3 pass\n");
    let o = hurmono(&["verify", "--degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "9/9 pass\n");

    let v = json_of(&hurmono(&["verify", "--degree", "2", "--format", "json"]));
    assert_eq!(
        (v["passed"].as_u64(), v["failed"].as_u64()),
        (Some(3), Some(0))
    );
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("hurmono-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn verify_custom_goldens() {
    let good = temp_file(
        "good.txt",
        "# one row\ndegrees=3 genera=1 profiles=3;3;2,1;2,1 expect=1:0:2\n",
    );
    let o = hurmono(&["verify", "--goldens", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1/1 pass\n");

    let wrong = temp_file(
        "wrong.txt",
        "# wrong\ndegrees=3 genera=1 profiles=3;3;2,1;2,1 expect=2:0:1\n",
    );
    let o = hurmono(&["verify", "--goldens", wrong.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL line 2"), "{out}");
    assert!(out.contains("expected 2:0:1, computed 1:0:2"), "{out}");
    assert!(out.ends_with("0/1 pass\n"));

    let corrupt = temp_file("corrupt.txt", "degrees=3 genera=1\nnot a row\n");
    let o = hurmono(&["verify", "--goldens", corrupt.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1"), "{}", stderr(&o));

    let o = hurmono(&["verify", "--goldens", "/nonexistent/goldens.txt"]);
    assert_eq!(o.status.code(), Some(2));

    for p in [good, wrong, corrupt] {
        let _ = std::fs::remove_file(p);
    }
}
