use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_siegel5");
const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data");

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("SIEGEL5_DATA_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn rows(o: &Output) -> Vec<Vec<i64>> {
    stdout(o)
        .lines()
        .map(|l| l.split_whitespace().map(|x| x.parse().unwrap()).collect())
        .collect()
}

#[test]
fn expand_matches_figure_rows() {
    let o = run(&["expand", "f1", "--prec", "2"]);
    assert!(o.status.success());
    assert_eq!(
        rows(&o),
        vec![
            vec![0, 0, 0, 1],
            vec![1, 0, 0, 3],
            vec![0, 0, 1, 3],
            vec![2, 0, 0, 4],
            vec![1, -1, 1, 2],
            vec![1, 0, 1, 6],
            vec![1, 1, 1, 2],
            vec![0, 0, 2, 4],
        ]
    );
    let o = run(&["expand", "e2", "--prec", "0"]);
    assert_eq!(rows(&o), vec![vec![0, 0, 0, 1]]);
}

#[test]
fn expand_rejects_bad_requests() {
    assert_eq!(run(&["expand", "f1", "--prec", "9"]).status.code(), Some(2));
    assert_eq!(run(&["expand", "f7"]).status.code(), Some(2));
    assert_eq!(run(&["expand"]).status.code(), Some(2));
}

#[test]
fn expand_jsonl_has_header_and_string_values() {
    let o = run(&["--format", "jsonl", "expand", "g1", "--prec", "1"]);
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["kind"], "header");
    assert_eq!(lines[0]["version"], env!("CARGO_PKG_VERSION"));
    assert!(lines[0]["checksums"]["generators.tsv"].is_string());
    assert_eq!(lines[1]["value"], "1");
    assert_eq!((lines[1]["a"].as_u64(), lines[1]["c"].as_u64()), (Some(1), Some(0)));
}

#[test]
fn verify_relations_and_jacobian() {
    let o = run(&["verify", "relations"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("PASS  g1 - swap(g1) = f1 f2"));
    assert!(text.contains("PASS  swap(g2) - g2 = f1 f2"));
    assert!(text.contains("PASS  e2 = F1^2 + F2^2 - 4 G1 - 4 G2"));
    let o = run(&["verify", "--suite", "jacobian"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS  J^2 = lambda P_J"));
}

#[test]
fn verify_all_passes_and_is_byte_stable() {
    let a = run(&["--format", "jsonl", "verify", "all"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    let b = run(&["--format", "jsonl", "verify", "--parallel"]);
    assert_eq!(a.stdout, b.stdout);
    let last: serde_json::Value = serde_json::from_str(stdout(&a).lines().last().unwrap()).unwrap();
    assert_eq!(last["failed"], 0);
}

#[test]
fn dims_reproduce_table() {
    let o = run(&["dims", "--upto", "19"]);
    let dims: Vec<i64> = rows(&o).iter().map(|r| r[1]).collect();
    assert_eq!(
        dims,
        vec![0, 1, 0, 6, 0, 10, 0, 22, 0, 34, 3, 57, 6, 79, 16, 117, 25, 153, 45]
    );
    assert_eq!(run(&["dims", "--upto", "100000"]).status.code(), Some(2));
}

#[test]
fn molien_and_rank() {
    let o = run(&["molien", "--character", "trivial", "--upto", "4"]);
    let m: Vec<i64> = rows(&o).iter().map(|r| r[1]).collect();
    assert_eq!(m, vec![1, 0, 2, 0, 8]);
    let o = run(&["--format", "jsonl", "rank", "--weight", "4"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["certified_rank"], 6);
}

fn copy_data(dir: &Path) {
    for f in ["generators.tsv", "jacobian_square.tsv"] {
        std::fs::copy(Path::new(DATA).join(f), dir.join(f)).unwrap();
    }
}

#[test]
fn data_directory_override() {
    let dir = tempfile::tempdir().unwrap();
    copy_data(dir.path());
    let o = Command::new(BIN)
        .args(["verify", "data"])
        .env("SIEGEL5_DATA_DIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());

    // Change f1 at (0,0,1) from 3 to 4: checksum and swap symmetry break.
    let path = dir.path().join("generators.tsv");
    let text = std::fs::read_to_string(&path).unwrap();
    let edited: String = text
        .lines()
        .map(|l| {
            let cols: Vec<&str> = l.split('\t').collect();
            if cols.len() == 7 && cols[..4] == ["0", "0", "1", "3"] {
                let mut c = cols.clone();
                c[3] = "4";
                c.join("\t")
            } else {
                l.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("\n")
        + "\n";
    assert_ne!(edited, text);
    std::fs::write(&path, edited).unwrap();
    let dir_arg = dir.path().to_str().unwrap();
    let o = run(&["--data-dir", dir_arg, "verify", "data"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL  checksum of generators.tsv"));
    assert!(out.contains("FAIL  swap(f1) = f1  witness: (1,0,0)"), "{out}");

    std::fs::write(&path, "0\t0\tx\n").unwrap();
    assert_eq!(run(&["--data-dir", dir_arg, "verify", "data"]).status.code(), Some(2));
}
