use std::path::Path;
use std::process::{Command, Output};

use kpoly::cli::render::cell_polygons;
use kpoly::cli::{read_json, CountRecord};
use kpoly::enumerate::enumerate_orderly;

fn kpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kpoly")).args(args).output().expect("spawn kpoly")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn svg_files(dir: &Path) -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".svg"))
        .collect();
    names.sort();
    names
}

#[test]
fn count_prints_one_json_record() {
    let o = kpoly(&["count", "--k", "6", "--n", "5", "--method", "orderly"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    let rec: CountRecord = serde_json::from_str(text.trim()).unwrap();
    assert_eq!((rec.k, rec.n, rec.count), (6, 5, 22));

    let o = kpoly(&["count", "--k", "11", "--n", "3", "--method", "formula"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"count\": \"4\"") || stdout(&o).contains("\"count\":\"4\""));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["count", "--k", "4", "--n", "5", "--method", "formula"][..],
        &["count", "--k", "2", "--n", "3"],
        &["count", "--k", "4", "--n", "3", "--workers", "0"],
        &["table", "--k-range", "6..3", "--n-range", "1..2"],
        &["table", "--k-range", "3..4"],
        &["frobnicate"],
    ] {
        assert_eq!(kpoly(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn budget_exits_3() {
    let o = kpoly(&["count", "--k", "5", "--n", "8", "--budget", "50"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn table_csv_and_json() {
    let o = kpoly(&["table", "--k-range", "3..6", "--n-range", "1..5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "k,n,count,method");
    assert_eq!(lines.len(), 21);
    assert!(lines.contains(&"3,5,4,orderly"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let o = kpoly(&[
        "table",
        "--k-range",
        "21..23",
        "--n-range",
        "5..5",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
        "--workers",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let records = read_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let counts: Vec<u64> = records.iter().map(|r| r.count).collect();
    assert_eq!(counts, [972, 1179, 1437]);
}

#[test]
fn verify_defaults_pass() {
    let o = kpoly(&["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn verify_flags_conflicting_published_values() {
    let o = kpoly(&["verify", "--k-max", "17", "--n-max", "5", "--workers", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let note = text.lines().find(|l| l.starts_with("NOTE a_17(5)")).expect("a_17(5) note");
    assert!(note.contains("613") && note.contains("614") && note.contains("enumeration gives 614"));
}

#[test]
fn verify_names_corrupted_entry() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corrupt.csv");
    std::fs::write(&path, "k,n,count\n4,5,12\n6,4,8\n7,3,3\n").unwrap();
    let o = kpoly(&["verify", "--k-max", "7", "--n-max", "5", "--published", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL published"));
    assert!(text.contains("first mismatch (published): k=6 n=4 expected=8 got=7"), "{text}");
}

#[test]
fn render_writes_one_file_per_class() {
    let dir = tempfile::tempdir().unwrap();
    let o = kpoly(&["render", "--k", "4", "--n", "5", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let files = svg_files(dir.path());
    assert_eq!(files.len(), 21);
    assert!(files.iter().all(|f| f.len() == "0001-n1-01234567.svg".len()));

    let dir2 = tempfile::tempdir().unwrap();
    kpoly(&["render", "--k", "4", "--n", "5", "--out", dir2.path().to_str().unwrap(), "--workers", "3"]);
    assert_eq!(svg_files(dir2.path()), files);
    for f in &files {
        let a = std::fs::read(dir.path().join(f)).unwrap();
        let b = std::fs::read(dir2.path().join(f)).unwrap();
        assert_eq!(a, b, "{f} differs between runs");
    }

    let dir = tempfile::tempdir().unwrap();
    let o = kpoly(&["render", "--k", "5", "--n-range", "5..5", "--out", dir.path().to_str().unwrap(), "--limit", "25"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(svg_files(dir.path()).len(), 25);

    let dir = tempfile::tempdir().unwrap();
    let o = kpoly(&["render", "--k", "3", "--n-range", "1..1", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let files = svg_files(dir.path());
    assert_eq!(files.len(), 1);
    let svg = std::fs::read_to_string(dir.path().join(&files[0])).unwrap();
    assert_eq!(svg.matches("<polygon").count(), 1);
}

#[test]
fn stats_reports_bounds() {
    let o = kpoly(&["stats", "--k", "4", "--n", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[5]["q_max"], 19);
}

/// Signed overlap depth of two convex polygons: positive when interiors meet.
fn overlap_depth(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    let mut best = f64::INFINITY;
    for poly in [a, b] {
        for i in 0..poly.len() {
            let (x0, y0) = poly[i];
            let (x1, y1) = poly[(i + 1) % poly.len()];
            let (nx, ny) = (y1 - y0, x0 - x1);
            let len = nx.hypot(ny);
            let proj = |p: &[(f64, f64)]| {
                p.iter().map(|&(x, y)| (x * nx + y * ny) / len).fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                    (lo.min(v), hi.max(v))
                })
            };
            let (alo, ahi) = proj(a);
            let (blo, bhi) = proj(b);
            best = best.min(ahi.min(bhi) - alo.max(blo));
        }
    }
    best
}

fn is_strictly_convex(p: &[(f64, f64)]) -> bool {
    let n = p.len();
    let cross = |i: usize| {
        let (a, b, c) = (p[i], p[(i + 1) % n], p[(i + 2) % n]);
        (b.0 - a.0) * (c.1 - b.1) - (b.1 - a.1) * (c.0 - b.0)
    };
    let s = cross(0).signum();
    (0..n).all(|i| cross(i).signum() == s && cross(i).abs() > 1e-12)
}

#[test]
fn rendered_cells_are_convex_and_interior_disjoint() {
    for (k, n) in [(3, 7), (4, 6), (5, 5), (6, 5), (7, 5), (12, 4)] {
        let run = enumerate_orderly(k, n).unwrap();
        for p in run.level(n).unwrap().representatives() {
            let polys = cell_polygons(p);
            for poly in &polys {
                assert_eq!(poly.len(), k as usize);
                assert!(is_strictly_convex(poly), "k={k}: cell is not convex");
            }
            for i in 0..polys.len() {
                for j in i + 1..polys.len() {
                    let depth = overlap_depth(&polys[i], &polys[j]);
                    assert!(depth <= 1e-9, "k={k} n={n}: cells {i},{j} overlap by {depth}");
                }
            }
        }
    }
}
