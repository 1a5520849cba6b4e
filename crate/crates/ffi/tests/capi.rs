use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use orbitkit_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn graph6(text: &str) -> *mut OrbitkitGraph {
    let mut g = ptr::null_mut();
    let status = unsafe { orbitkit_graph_from_graph6(c(text).as_ptr(), &mut g) };
    assert_eq!(status, OrbitkitStatus::Ok);
    g
}

fn edge_list(text: &str) -> *mut OrbitkitGraph {
    let mut g = ptr::null_mut();
    let status = unsafe { orbitkit_graph_from_edge_list(c(text).as_ptr(), &mut g) };
    assert_eq!(status, OrbitkitStatus::Ok);
    g
}

unsafe fn take_string(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    orbitkit_string_free(s);
    out
}

fn last_error() -> String {
    let p = orbitkit_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn petersen_round_trip_and_orbits() {
    let g = graph6("IheA@GUAo");
    unsafe {
        assert_eq!(orbitkit_graph_order(g), 10);
        assert_eq!(orbitkit_graph_edge_count(g), 15);
        let mut s = ptr::null_mut();
        assert_eq!(orbitkit_graph_to_graph6(g, &mut s), OrbitkitStatus::Ok);
        assert_eq!(take_string(s), "IheA@GUAo");

        let mut r = 0;
        assert_eq!(orbitkit_transitivity_number(g, &mut r), OrbitkitStatus::Ok);
        assert_eq!(r, 1);
        let mut same = false;
        assert_eq!(orbitkit_interchangeable(g, 0, 7, &mut same), OrbitkitStatus::Ok);
        assert!(same);
        orbitkit_graph_free(g);
    }
}

#[test]
fn orbit_handle_queries() {
    let g = edge_list("5 4\n0 1\n1 2\n2 3\n3 4\n");
    unsafe {
        let mut o = ptr::null_mut();
        assert_eq!(orbitkit_orbits_compute(g, 0, &mut o), OrbitkitStatus::Ok);
        // The partition outlives the graph it was computed from.
        orbitkit_graph_free(g);
        assert_eq!(orbitkit_orbits_count(o), 3);

        let mut reps = [usize::MAX; 3];
        assert_eq!(orbitkit_orbits_representatives(o, reps.as_mut_ptr(), 3), OrbitkitStatus::Ok);
        assert_eq!(reps, [0, 1, 2]);
        assert_eq!(orbitkit_orbits_representatives(o, reps.as_mut_ptr(), 2), OrbitkitStatus::InvalidArgument);

        let mut idx = 0;
        assert_eq!(orbitkit_orbits_orbit_of(o, 3, &mut idx), OrbitkitStatus::Ok);
        assert_eq!(idx, 1);
        assert_eq!(orbitkit_orbits_orbit_of(o, 5, &mut idx), OrbitkitStatus::InvalidArgument);
        assert!(last_error().contains("out of range"));

        let mut s = ptr::null_mut();
        assert_eq!(orbitkit_orbits_to_json(o, &mut s), OrbitkitStatus::Ok);
        assert_eq!(take_string(s), r#"{"n":5,"r":3,"orbits":[[0,4],[1,3],[2]],"representatives":[0,1,2]}"#);
        orbitkit_orbits_free(o);
    }
}

#[test]
fn graph_from_edge_array() {
    let endpoints = [0usize, 1, 1, 2, 2, 0];
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(orbitkit_graph_from_edges(3, endpoints.as_ptr(), 3, &mut g), OrbitkitStatus::Ok);
        let mut r = 0;
        assert_eq!(orbitkit_transitivity_number(g, &mut r), OrbitkitStatus::Ok);
        assert_eq!(r, 1);
        orbitkit_graph_free(g);

        let mut g = ptr::null_mut();
        assert_eq!(orbitkit_graph_from_edges(4, ptr::null(), 0, &mut g), OrbitkitStatus::Ok);
        assert_eq!(orbitkit_graph_order(g), 4);
        orbitkit_graph_free(g);

        let looped = [1usize, 1];
        let mut g = ptr::null_mut();
        assert_eq!(orbitkit_graph_from_edges(2, looped.as_ptr(), 1, &mut g), OrbitkitStatus::ParseError);
        assert!(g.is_null());
    }
}

#[test]
fn products_and_limits() {
    let k2 = graph6("A_");
    let k3 = graph6("Bw");
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(orbitkit_product(OrbitkitProduct::Strong, k2, k3, 0, &mut p), OrbitkitStatus::Ok);
        assert_eq!((orbitkit_graph_order(p), orbitkit_graph_edge_count(p)), (6, 15));
        orbitkit_graph_free(p);

        let mut p = ptr::null_mut();
        assert_eq!(orbitkit_product(OrbitkitProduct::Corona, k3, k2, 0, &mut p), OrbitkitStatus::Ok);
        assert_eq!((orbitkit_graph_order(p), orbitkit_graph_edge_count(p)), (9, 12));
        orbitkit_graph_free(p);

        let mut p = ptr::null_mut();
        assert_eq!(orbitkit_product(OrbitkitProduct::Cartesian, k3, k3, 8, &mut p), OrbitkitStatus::SizeLimit);
        assert!(p.is_null());
        orbitkit_graph_free(k2);
        orbitkit_graph_free(k3);
    }
}

#[test]
fn property_reports() {
    let p5 = edge_list("5 4\n0 1\n1 2\n2 3\n3 4\n");
    unsafe {
        let mut fast = ptr::null_mut();
        let mut naive = ptr::null_mut();
        let name = c("betweenness");
        assert_eq!(orbitkit_property_json(p5, name.as_ptr(), true, &mut fast), OrbitkitStatus::Ok);
        assert_eq!(orbitkit_property_json(p5, name.as_ptr(), false, &mut naive), OrbitkitStatus::Ok);
        let (fast, naive) = (take_string(fast), take_string(naive));
        assert_eq!(fast, naive);
        assert!(fast.contains(r#""value":"4""#), "{fast}");

        let mut s = ptr::null_mut();
        assert_eq!(orbitkit_property_json(p5, c("nosuch").as_ptr(), true, &mut s), OrbitkitStatus::UnknownName);
        orbitkit_graph_free(p5);

        let split = edge_list("4 2\n0 1\n2 3\n");
        assert_eq!(
            orbitkit_property_json(split, c("eccentricity").as_ptr(), true, &mut s),
            OrbitkitStatus::Disconnected
        );
        orbitkit_graph_free(split);
    }
}

#[test]
fn errors_and_null_arguments() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(orbitkit_graph_from_graph6(c("~??~").as_ptr(), &mut g), OrbitkitStatus::ParseError);
        assert!(g.is_null());
        assert!(last_error().contains("graph6"));

        assert_eq!(orbitkit_graph_from_edge_list(c("3 1\n0 x\n").as_ptr(), &mut g), OrbitkitStatus::ParseError);
        assert!(last_error().contains("line 2"));

        assert_eq!(orbitkit_graph_from_graph6(ptr::null(), &mut g), OrbitkitStatus::NullPointer);
        assert_eq!(orbitkit_graph_from_graph6(c("A_").as_ptr(), ptr::null_mut()), OrbitkitStatus::NullPointer);
        let mut r = 0;
        assert_eq!(orbitkit_transitivity_number(ptr::null(), &mut r), OrbitkitStatus::NullPointer);
        assert_eq!(orbitkit_graph_order(ptr::null()), 0);
        assert_eq!(orbitkit_orbits_count(ptr::null()), 0);

        orbitkit_graph_free(ptr::null_mut());
        orbitkit_orbits_free(ptr::null_mut());
        orbitkit_string_free(ptr::null_mut());
    }
    let v = unsafe { CStr::from_ptr(orbitkit_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn search_budget_is_reported() {
    let g = graph6("IheA@GUAo");
    unsafe {
        let mut o = ptr::null_mut();
        assert_eq!(orbitkit_orbits_compute(g, 2, &mut o), OrbitkitStatus::ResourceLimit);
        assert!(o.is_null());
        orbitkit_graph_free(g);
    }
}

fn header_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/orbitkit.h")
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(header_path()).unwrap();
    for name in [
        "orbitkit_last_error",
        "orbitkit_version",
        "orbitkit_string_free",
        "orbitkit_graph_from_graph6",
        "orbitkit_graph_from_edge_list",
        "orbitkit_graph_from_edges",
        "orbitkit_graph_free",
        "orbitkit_graph_order",
        "orbitkit_graph_edge_count",
        "orbitkit_graph_to_graph6",
        "orbitkit_orbits_compute",
        "orbitkit_orbits_free",
        "orbitkit_orbits_count",
        "orbitkit_orbits_representatives",
        "orbitkit_orbits_orbit_of",
        "orbitkit_orbits_to_json",
        "orbitkit_transitivity_number",
        "orbitkit_interchangeable",
        "orbitkit_product",
        "orbitkit_property_json",
        "typedef struct OrbitkitGraph OrbitkitGraph",
        "ORBITKIT_STATUS_DISCONNECTED = 6",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

/// Compiles `tests/c/smoke.c` against the header and the static library.
/// Skipped when no C compiler is on PATH.
#[test]
fn c_program_links_and_runs() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler ({cc})");
        return;
    }
    // target/<profile>/deps/<test binary> -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(Path::parent).unwrap();
    let lib = profile_dir.join("liborbitkit_ffi.a");
    if !lib.exists() {
        eprintln!("skipping: {} not built", lib.display());
        return;
    }
    let out_dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let bin = out_dir.join("orbitkit_smoke");
    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/c/smoke.c");
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(header_path().parent().unwrap())
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let run = Command::new(&bin).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok "));
}
