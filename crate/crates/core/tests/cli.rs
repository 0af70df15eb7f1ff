mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::data;
use gwa::enumeration::AuditSummary;
use gwa::format::{from_json, read_algebra, to_json, AlgebraFile, SubsetFile};
use gwa::report::CheckReport;

fn gwa(args: &[&dyn AsRef<std::ffi::OsStr>]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gwa"))
        .args(args.iter().map(|a| a.as_ref()))
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn validate() {
    let o = gwa(&[&"validate", &data("Z2.json")]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "ok\n");

    let o = gwa(&[&"validate", &data("Z2-broken.json")]);
    assert_eq!(code(&o), 1);
    assert!(
        stdout(&o).lines().any(|l| l == "eps-1 (1,1,1)"),
        "{}",
        stdout(&o)
    );

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ \"name\": ").unwrap();
    assert_eq!(code(&gwa(&[&"validate", &bad])), 2);
    assert_eq!(
        code(&gwa(&[&"validate", &dir.path().join("missing.json")])),
        2
    );

    assert_eq!(
        code(&gwa(&[&"validate", &"--reduced", &data("Z3.json")])),
        0
    );
    let o = gwa(&[&"validate", &"--reduced", &data("S3.json")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("reduced-1"));
}

#[test]
fn validate_json_round_trips() {
    let o = gwa(&[&"validate", &"--json", &data("Z2-broken.json")]);
    assert_eq!(code(&o), 1);
    let text = stdout(&o);
    let r: CheckReport = from_json("stdout", &text).unwrap();
    assert!(!r.ok && r.has_law("eps-1"));
    assert_eq!(to_json(&r), text);
}

#[test]
fn check_action() {
    let z2 = data("Z2.json");
    assert_eq!(
        code(&gwa(&[&"check-action", &z2, &z2, &data("Z2.self.json")])),
        0
    );
    let o = gwa(&[&"check-action", &z2, &z2, &data("Z2.naive.json")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("(1_B)"));
    assert_eq!(
        code(&gwa(&[
            &"check-action",
            &data("Z3.json"),
            &z2,
            &data("Z2.self.json")
        ])),
        2
    );
    let s3 = data("S3.json");
    assert_eq!(
        code(&gwa(&[&"check-action", &s3, &s3, &data("S3.self.json")])),
        0
    );
    assert_eq!(
        code(&gwa(&[
            &"check-action",
            &"--reduced",
            &s3,
            &s3,
            &data("S3.self.json")
        ])),
        2
    );
    let v4 = data("V4.json");
    assert_eq!(
        code(&gwa(&[
            &"check-action",
            &"--reduced",
            &v4,
            &v4,
            &data("V4.self.json")
        ])),
        0
    );
}

#[test]
fn check_action_rejects_wrong_shapes() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.json");
    std::fs::write(
        &t,
        r#"{"actor":"Z2","target":"Z2","dot":[[0,1]],"star":[[0,0],[1,1]],"dual":[[0,0],[0,0]]}"#,
    )
    .unwrap();
    let z2 = data("Z2.json");
    assert_eq!(code(&gwa(&[&"check-action", &z2, &z2, &t])), 2);
}

#[test]
fn semidirect() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.json");
    let ext = dir.path().join("x.json");
    let z2 = data("Z2.json");
    let o = gwa(&[
        &"semidirect",
        &z2,
        &z2,
        &data("Z2.self.json"),
        &"--out",
        &out,
        &"--extension",
        &ext,
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let p = read_algebra(&out).unwrap();
    assert_eq!(p.order(), 4);
    assert_eq!(p.name(), "Z2⋉Z2");
    assert_eq!(code(&gwa(&[&"validate", &out])), 0);
    assert!(ext.exists());

    let out2 = dir.path().join("q.json");
    let o = gwa(&[
        &"semidirect",
        &z2,
        &z2,
        &data("Z2.naive.json"),
        &"--out",
        &out2,
    ]);
    assert_eq!(code(&o), 1);
    assert!(!out2.exists());

    let unwritable = dir.path().join("no/such/dir/p.json");
    assert_eq!(
        code(&gwa(&[
            &"semidirect",
            &z2,
            &z2,
            &data("Z2.self.json"),
            &"--out",
            &unwritable
        ])),
        2
    );
}

#[test]
fn audit() {
    let z2 = data("Z2.json");
    let o = gwa(&[&"audit", &z2, &z2, &"--theorem", &"3.3", &"--json"]);
    let text = stdout(&o);
    let s: AuditSummary = from_json("stdout", &text).unwrap();
    assert_eq!(s.total, 4096);
    assert_eq!(to_json(&s), text);
    assert_eq!(code(&o), if s.all_agree() { 0 } else { 1 });

    let o = gwa(&[
        &"audit",
        &z2,
        &z2,
        &"--theorem",
        &"gwa",
        &"--criterion",
        &"roundtrip",
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("agree: 4096/4096"));

    let z3 = data("Z3.json");
    let o = gwa(&[
        &"audit",
        &z3,
        &z3,
        &"--theorem",
        &"4.3",
        &"--seed",
        &"1",
        &"--samples",
        &"2000",
        &"--json",
    ]);
    assert_eq!(code(&o), 0);
    let s: AuditSummary = from_json("stdout", &stdout(&o)).unwrap();
    assert_eq!((s.total, s.agree, s.seed), (2000, 2000, Some(1)));

    assert_eq!(code(&gwa(&[&"audit", &z3, &z3, &"--theorem", &"4.3"])), 2);
    let s3 = data("S3-conj.json");
    assert_eq!(code(&gwa(&[&"audit", &s3, &z2, &"--theorem", &"4.3"])), 2);
    assert_eq!(code(&gwa(&[&"audit", &z2, &z2, &"--theorem", &"9.9"])), 2);
}

#[test]
fn audit_cap_comes_from_the_environment() {
    let z2 = data("Z2.json");
    let o = Command::new(env!("CARGO_BIN_EXE_gwa"))
        .args([
            Path::new("audit"),
            &z2,
            &z2,
            Path::new("--theorem"),
            Path::new("3.3"),
        ])
        .env("GWA_MAX_EXHAUSTIVE", "100")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("seed"));
}

#[test]
fn enumerate() {
    let o = gwa(&[&"enumerate", &data("Z2.json"), &"--what", &"self-actions"]);
    assert_eq!(code(&o), 0);
    let lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 1);
    let a: AlgebraFile = from_json("line", &lines[0]).unwrap();
    assert_eq!(a.act, vec![vec![0, 0], vec![1, 1]]);

    let o = gwa(&[&"enumerate", &data("S3-conj.json"), &"--what", &"ideals"]);
    let subsets: Vec<SubsetFile> = stdout(&o)
        .lines()
        .map(|l| from_json("line", l).unwrap())
        .collect();
    assert!(subsets.iter().any(|s| s.members == [0, 3, 4]));

    let o = gwa(&[&"enumerate", &data("trivial.json"), &"--what", &"ideals"]);
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn ideal_and_quotient() {
    let s3 = data("S3-conj.json");
    let a3 = data("S3-conj.A3.json");
    assert_eq!(code(&gwa(&[&"ideal", &s3, &a3])), 0);
    let dir = tempfile::tempdir().unwrap();
    let q = dir.path().join("q.json");
    assert_eq!(code(&gwa(&[&"quotient", &s3, &a3, &"--out", &q])), 0);
    assert_eq!(read_algebra(&q).unwrap().order(), 2);

    let not = dir.path().join("s.json");
    std::fs::write(&not, r#"{"algebra":"S3-conj","members":[0,1]}"#).unwrap();
    assert_eq!(code(&gwa(&[&"ideal", &s3, &not])), 1);
    assert_eq!(code(&gwa(&[&"quotient", &s3, &not, &"--out", &q])), 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&gwa(&[])), 2);
    assert_eq!(code(&gwa(&[&"frobnicate"])), 2);
    assert_eq!(code(&gwa(&[&"--help"])), 0);
}
