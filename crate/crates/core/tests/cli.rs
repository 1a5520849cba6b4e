use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

const P5: &str = "5 4\n0 1\n1 2\n2 3\n3 4\n";

fn orbitkit(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_orbitkit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let input = stdin.unwrap_or("").to_owned();
    let mut pipe = child.stdin.take().unwrap();
    std::thread::spawn(move || {
        let _ = pipe.write_all(input.as_bytes());
    });
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn orbits_from_stdin() {
    let o = orbitkit(&["orbits", "--format", "edgelist", "-"], Some(P5));
    assert!(o.status.success());
    assert_eq!(stdout(&o), "{\"n\":5,\"r\":3,\"orbits\":[[0,4],[1,3],[2]],\"representatives\":[0,1,2]}\n");

    let o = orbitkit(&["orbits", "-"], Some("@\n"));
    assert_eq!(stdout(&o), "{\"n\":1,\"r\":1,\"orbits\":[[0]],\"representatives\":[0]}\n");
}

#[test]
fn orbits_table() {
    let o = orbitkit(&["orbits", "--format", "edgelist", "--out", "table", "-"], Some(P5));
    assert_eq!(stdout(&o), "n 5\nr 3\norbit\tsize\trep\tmembers\n0\t2\t0\t0 4\n1\t2\t1\t1 3\n2\t1\t2\t2\n");
}

#[test]
fn tnumber_values() {
    let petersen = orbitkit(&["tnumber", "-"], Some("IheA@GUAo"));
    assert_eq!(stdout(&petersen), "1\n");
    let p6 = orbitkit(&["tnumber", "--format", "edgelist", "-"], Some("6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n"));
    assert_eq!(stdout(&p6), "3\n");
    let star = orbitkit(&["tnumber", "--format", "edgelist", "-"], Some("5 4\n0 1\n0 2\n0 3\n0 4\n"));
    assert_eq!(stdout(&star), "2\n");
}

#[test]
fn parse_errors_exit_2() {
    let o = orbitkit(&["orbits", "--format", "edgelist", "-"], Some("3 2\n0 1\n1 z\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let o = orbitkit(&["orbits", "-"], Some("~??~"));
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn budget_exit_3() {
    let o = orbitkit(&["orbits", "--node-budget", "2", "-"], Some("IheA@GUAo"));
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn products() {
    let dir = TempDir::new().unwrap();
    let k2 = write(dir.path(), "k2", "A_\n");
    let k3 = write(dir.path(), "k3", "Bw\n");
    let c3 = write(dir.path(), "c3", "Bw\n");

    let o = orbitkit(&["product", "cartesian", &k2, &k2], None);
    assert!(o.status.success());
    // C4 with vertices (0,0) (0,1) (1,0) (1,1).
    assert_eq!(stdout(&o), "Cr\n");
    assert_eq!(String::from_utf8_lossy(&o.stderr), "0\t(0,0)\n1\t(0,1)\n2\t(1,0)\n3\t(1,1)\n");

    let o = orbitkit(&["product", "strong", &k2, &k3], None);
    assert_eq!(stdout(&o), "E~~w\n");

    let o = orbitkit(&["product", "corona", &c3, &k2, "--out", "table"], None);
    let text = stdout(&o);
    assert!(text.starts_with("9 12\n"), "{text}");

    let o = orbitkit(&["product", "join", &k2, &k3, "--out", "json"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["m"], 10);
    assert_eq!(v["legend"][2], "2\tH0");
}

#[test]
fn product_size_limit_exit_4() {
    let dir = TempDir::new().unwrap();
    let k3 = write(dir.path(), "k3", "Bw\n");
    let o = orbitkit(&["product", "cartesian", &k3, &k3, "--product-limit", "8"], None);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn property_reports() {
    let c8 = "8 8\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 0\n";
    let o = orbitkit(&["property", "eccentricity", "--fast", "--format", "edgelist", "-"], Some(c8));
    assert_eq!(
        stdout(&o),
        "{\"property\":\"eccentricity\",\"r\":1,\"per_orbit\":[{\"rep\":0,\"value\":4}],\"distinct_values\":1}\n"
    );

    let o = orbitkit(&["property", "total_distance", "--format", "edgelist", "-"], Some(P5));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let values: Vec<u64> = v["per_orbit"].as_array().unwrap().iter().map(|x| x["value"].as_u64().unwrap()).collect();
    assert_eq!(values, [10, 7, 6]);
}

#[test]
fn fast_and_naive_agree() {
    for name in ["degree", "eccentricity", "total_distance", "betweenness"] {
        let fast = orbitkit(&["property", name, "--fast", "-"], Some("IheA@GUAo"));
        let naive = orbitkit(&["property", name, "-"], Some("IheA@GUAo"));
        assert!(fast.status.success());
        assert_eq!(fast.stdout, naive.stdout, "{name}");
    }
}

#[test]
fn property_errors() {
    let o = orbitkit(&["property", "nosuch", "--format", "edgelist", "-"], Some(P5));
    assert_eq!(o.status.code(), Some(5));
    let o = orbitkit(&["property", "eccentricity", "--format", "edgelist", "-"], Some("4 2\n0 1\n2 3\n"));
    assert_eq!(o.status.code(), Some(6));
    // Degree is defined on disconnected graphs.
    let o = orbitkit(&["property", "degree", "--format", "edgelist", "-"], Some("4 2\n0 1\n2 3\n"));
    assert!(o.status.success());
}

#[test]
fn verify_reports() {
    let o = orbitkit(&["verify", "path-product", "--max", "4"], None);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("path-product: 6 instances, 6 PASS, 0 FAIL"), "{text}");

    let o = orbitkit(&["verify", "path-square", "--max", "3", "--out", "json"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["theorem_id"], "path-square");
    assert_eq!(v["instances"][2]["computed"], 3);

    let o = orbitkit(&["verify", "nonsense"], None);
    assert_eq!(o.status.code(), Some(5));
    let o = orbitkit(&["verify", "product-general", "--corpus", "/nonexistent"], None);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_with_external_corpus() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "connected1.g6", "@\n");
    write(dir.path(), "connected2.g6", "A_\n");
    write(dir.path(), "connected3.g6", "Bg\nBw\n");
    let o = orbitkit(
        &["verify", "product-general", "--max", "3", "--kind", "cartesian", "--corpus", dir.path().to_str().unwrap()],
        None,
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("product-general: 6 instances"));
}

#[test]
fn bench_summary_is_deterministic() {
    let a = orbitkit(&["bench", "--property", "degree", "-"], Some("IheA@GUAo"));
    let b = orbitkit(&["bench", "--property", "degree", "-"], Some("IheA@GUAo"));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("\t10\t1\tdegree\t10\t1\ttrue\n"));
}
