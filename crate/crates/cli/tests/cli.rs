use std::path::Path;
use std::process::{Command, Output};

use l2disc::discrepancy::{l2_extreme_sq, l2_periodic_sq, l2_standard_sq};
use l2disc::pointset::{hammersley, rational_lattice};
use tempfile::TempDir;

fn l2disc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_l2disc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn gen_file(dir: &TempDir, name: &str, args: &[&str]) -> String {
    let path = dir.path().join(name);
    let path_str = path.to_str().unwrap().to_string();
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &path_str]);
    let out = l2disc(&full);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    path_str
}

/// `(kind, value_sq)` pairs from `disc` output.
fn disc_values(csv: &str) -> Vec<(String, f64)> {
    csv.lines()
        .skip(1)
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            (f[0].to_string(), f[4].parse().unwrap())
        })
        .collect()
}

#[test]
fn gen_writes_point_files() {
    let dir = TempDir::new().unwrap();
    let h = gen_file(&dir, "h2.txt", &["hammersley", "m=2"]);
    let text = std::fs::read_to_string(&h).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "# d=2 N=4");
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[2], "0.25 0.5");

    let out = l2disc(&["gen", "fibonacci", "n=1"]);
    assert_eq!(stdout(&out), "# d=2 N=1\n0 0\n");

    let out = l2disc(&["gen", "lattice", "p=3", "q=5"]);
    assert_eq!(stdout(&out), rational_lattice(3, 5).unwrap().to_text());
}

#[test]
fn random_sets_need_a_seed() {
    let out = l2disc(&["gen", "random", "n=5", "d=3"]);
    assert!(!out.status.success());
    let a = l2disc(&["gen", "random", "n=5", "d=3", "--seed", "9"]);
    let b = l2disc(&["gen", "random", "n=5", "d=3", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn disc_reproduces_known_values() {
    let dir = TempDir::new().unwrap();
    let h1 = gen_file(&dir, "h1.txt", &["hammersley", "m=1"]);
    let out = l2disc(&["disc", &h1, "--kinds", "periodic"]);
    let rows = disc_values(&stdout(&out));
    assert_eq!(rows.len(), 1);
    assert!((rows[0].1 - 13.0 / 72.0).abs() < 1e-12);

    let one = gen_file(&dir, "one.txt", &["fibonacci", "n=1"]);
    for method in ["pair_sum", "cell_exact"] {
        let out = l2disc(&["disc", &one, "--kinds", "extreme", "--method", method]);
        assert!((disc_values(&stdout(&out))[0].1 - 1.0 / 144.0).abs() < 1e-15);
    }
}

#[test]
fn spectral_output_has_tail_bound() {
    let dir = TempDir::new().unwrap();
    let h = gen_file(&dir, "h3.txt", &["hammersley", "m=3"]);
    let out = l2disc(&[
        "disc", &h, "--kinds", "periodic", "--method", "spectral", "--K", "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "kind,N,d,method,value_sq,value,tail_bound"
    );
    let f: Vec<f64> = lines
        .next()
        .unwrap()
        .split(',')
        .skip(4)
        .map(|v| v.parse().unwrap())
        .collect();
    assert!(f[2] >= 0.0);
    let exact = l2_periodic_sq(&hammersley(3).unwrap()).unwrap();
    assert!(f[0] <= exact + f[2]);

    let bad = l2disc(&["disc", &h, "--kinds", "standard", "--method", "spectral"]);
    assert!(!bad.status.success());
}

#[test]
fn file_round_trip_is_bit_exact() {
    let dir = TempDir::new().unwrap();
    for (name, args, set) in [
        ("h6.txt", vec!["hammersley", "m=6"], hammersley(6).unwrap()),
        (
            "l.txt",
            vec!["lattice", "p=21", "q=34"],
            rational_lattice(21, 34).unwrap(),
        ),
    ] {
        let path = gen_file(&dir, name, &args);
        let rows = disc_values(&stdout(&l2disc(&["disc", &path])));
        let want = [
            l2_standard_sq(&set).unwrap(),
            l2_extreme_sq(&set).unwrap(),
            l2_periodic_sq(&set).unwrap(),
        ];
        for ((_, got), w) in rows.iter().zip(want) {
            assert_eq!(got.to_bits(), w.to_bits(), "{name}");
        }
    }
}

#[test]
fn thread_count_does_not_change_results() {
    let dir = TempDir::new().unwrap();
    let path = gen_file(&dir, "h9.txt", &["hammersley", "m=9"]);
    let one = l2disc(&["disc", &path, "--threads", "1"]);
    let four = Command::new(env!("CARGO_BIN_EXE_l2disc"))
        .args(["disc", &path])
        .env("L2DISC_THREADS", "4")
        .output()
        .unwrap();
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn verify_hammersley_suite() {
    let out = l2disc(&["verify", "hammersley", "m=0..10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(
        text.lines().next().unwrap(),
        "suite,params,closed_form,oracle,abs_residual,rel_residual,tolerance,pass"
    );
    assert_eq!(text.lines().count(), 34);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn expected_failures_do_not_fail_the_run() {
    let out = l2disc(&["verify", "relation", "grid", "m=2", "d=2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row = text.lines().nth(1).unwrap();
    assert!(row.contains("expect=fail"));
    assert!(row.ends_with(",false"));
}

#[test]
fn unexpected_failures_set_exit_status() {
    let out = l2disc(&[
        "verify",
        "digital_shift",
        "m=2",
        "w=2",
        "R=500",
        "--sigmas",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = l2disc(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn verify_writes_to_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bilyk.csv");
    let out = l2disc(&[
        "verify",
        "bilyk",
        "--K",
        "1000",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(Path::new(&path).exists());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn fibonacci_slope_table() {
    let out = l2disc(&["table", "fibonacci_slope", "n=5..25"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let header: Vec<&str> = text.lines().next().unwrap().split(',').collect();
    let col = header.iter().position(|h| *h == "slope").unwrap();
    let last: Vec<&str> = text.lines().last().unwrap().split(',').collect();
    let slope: f64 = last[col].parse().unwrap();
    assert!((slope / 0.1192569588 - 1.0).abs() < 0.02);
    assert!(!l2disc(&["table", "nope"]).status.success());
}
