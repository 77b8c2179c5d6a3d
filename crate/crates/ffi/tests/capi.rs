use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use ngroupoid_ffi::*;

const ROTATED: &str = r#"{
  "n": 2,
  "base_points": ["X", "Y"],
  "constituents": [
    {"name": "a", "implants": {"X": [1,0,0, 0,1,0, 0,0,1], "Y": [1,0,0, 0,1,0, 0,0,1]}},
    {"name": "b", "implants": {"X": [1,0,0, 0,1,0, 0,0,1], "Y": [0,-1,0, 1,0,0, 0,0,1]}}
  ]
}"#;

const IDENTICAL: &str = r#"{
  "n": 2,
  "base_points": ["X", "Y"],
  "constituents": [
    {"name": "a", "implants": {"X": [1,0,0, 0,1,0, 0,0,1], "Y": [2,0,0, 0,1,0, 0,0,1]}},
    {"name": "b", "implants": {"X": [1,0,0, 0,1,0, 0,0,1], "Y": [2,0,0, 0,1,0, 0,0,1]}}
  ]
}"#;

fn last_error() -> String {
    let p = ng_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn mixture(json: &str) -> *mut NgMixture {
    let c = CString::new(json).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { ng_mixture_from_json(c.as_ptr(), &mut m) }, NgStatus::Ok);
    m
}

fn generated(n: usize, seed: u64, perturbed: bool) -> *mut NgSkeleton {
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { ng_skeleton_generate(n, seed, perturbed, &mut s) },
        NgStatus::Ok
    );
    s
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { ng_string_free(p) };
    s
}

#[test]
fn face_counts() {
    let mut out = 0u64;
    for (n, h, want) in [(3, 1, 12), (3, 0, 8), (4, 2, 24), (8, 7, 16)] {
        assert_eq!(unsafe { ng_count_faces(n, h, &mut out) }, NgStatus::Ok);
        assert_eq!(out, want, "n={n} h={h}");
    }
    assert_eq!(unsafe { ng_count_faces(3, 3, &mut out) }, NgStatus::OutOfRange);
    assert!(last_error().contains("h=3"));
    assert_eq!(unsafe { ng_count_faces(3, 1, ptr::null_mut()) }, NgStatus::NullPointer);
}

#[test]
fn success_clears_the_error() {
    let mut out = 0u64;
    unsafe { ng_count_faces(0, 0, &mut out) };
    assert!(!ng_last_error_message().is_null());
    unsafe { ng_count_faces(2, 0, &mut out) };
    assert!(ng_last_error_message().is_null());
}

#[test]
fn both_checkers_agree_on_generated_skeletons() {
    for seed in 0..5 {
        for perturbed in [false, true] {
            let s = generated(3, seed, perturbed);
            let (mut a, mut b) = (false, false);
            unsafe {
                assert_eq!(ng_check_conservative(s, 0.0, &mut a), NgStatus::Ok);
                assert_eq!(ng_oracle_conservative(s, 1e-9, &mut b), NgStatus::Ok);
                ng_skeleton_free(s);
            }
            assert_eq!(a, !perturbed);
            assert_eq!(a, b);
        }
    }
}

#[test]
fn conservativity_report_lists_witnesses() {
    let s = generated(4, 11, true);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ng_conservativity_report_json(s, 0.0, &mut out) }, NgStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["verdict"], false);
    assert_eq!(v["faces_checked"], 24);
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 3);
    unsafe { ng_skeleton_free(s) };
}

#[test]
fn json_round_trip() {
    let s = generated(3, 2, false);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { ng_skeleton_to_json(s, &mut json) }, NgStatus::Ok);
    let text = take_string(json);
    let c = CString::new(text.clone()).unwrap();
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { ng_skeleton_from_json(c.as_ptr(), &mut back) }, NgStatus::Ok);
    assert_eq!(unsafe { ng_skeleton_n(back) }, 3);
    let mut again = ptr::null_mut();
    assert_eq!(unsafe { ng_skeleton_to_json(back, &mut again) }, NgStatus::Ok);
    assert_eq!(take_string(again), text);
    unsafe {
        ng_skeleton_free(s);
        ng_skeleton_free(back);
    }
}

#[test]
fn malformed_json_is_rejected() {
    let c = CString::new("{\"n\": 2").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { ng_skeleton_from_json(c.as_ptr(), &mut s) },
        NgStatus::InvalidInput
    );
    assert!(s.is_null());
    assert_eq!(
        unsafe { ng_skeleton_from_json(ptr::null(), &mut s) },
        NgStatus::NullPointer
    );
}

#[test]
fn uniformity_verdicts() {
    let (rot, same) = (mixture(ROTATED), mixture(IDENTICAL));
    assert_eq!(unsafe { ng_mixture_n(rot) }, 2);
    let mut u = true;
    assert_eq!(unsafe { ng_mixture_is_uniform(rot, &mut u) }, NgStatus::Ok);
    assert!(!u);
    assert_eq!(unsafe { ng_mixture_is_uniform(same, &mut u) }, NgStatus::Ok);
    assert!(u);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ng_uniformity_report_json(rot, &mut out) }, NgStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["verdict"], false);
    assert_eq!(v["defect_pairs"].as_array().unwrap().len(), 2);
    unsafe {
        ng_mixture_free(rot);
        ng_mixture_free(same);
    }
}

#[test]
fn generation_in_a_mixture_validates() {
    let m = mixture(IDENTICAL);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ng_skeleton_generate_in(m, 5, &mut s) }, NgStatus::Ok);
    assert_eq!(unsafe { ng_skeleton_validate(s, m) }, NgStatus::Ok);

    let raw = generated(2, 5, false);
    assert_ne!(unsafe { ng_skeleton_validate(raw, m) }, NgStatus::Ok);
    unsafe {
        ng_skeleton_free(s);
        ng_skeleton_free(raw);
        ng_mixture_free(m);
    }
}

#[test]
fn composition_and_mismatch() {
    let a = generated(2, 1, false);
    let b = generated(2, 2, false);
    let mut c = ptr::null_mut();
    // raw labels repeat, so facets match only if the weights do too
    let st = unsafe { ng_skeleton_compose(a, b, 1, 0.0, &mut c) };
    assert_eq!(st, NgStatus::NotComposable, "{}", last_error());
    assert!(c.is_null());
    assert_eq!(
        unsafe { ng_skeleton_compose(a, a, 3, 0.0, &mut c) },
        NgStatus::OutOfRange
    );
    assert_eq!(
        unsafe { ng_skeleton_compose(a, a, 1, 2.0, &mut c) },
        NgStatus::OutOfRange
    );
    unsafe {
        ng_skeleton_free(a);
        ng_skeleton_free(b);
    }
}

#[test]
fn null_handles_are_reported() {
    let mut b = false;
    assert_eq!(
        unsafe { ng_check_conservative(ptr::null(), 0.0, &mut b) },
        NgStatus::NullPointer
    );
    assert_eq!(
        unsafe { ng_mixture_is_uniform(ptr::null(), &mut b) },
        NgStatus::NullPointer
    );
    assert_eq!(unsafe { ng_skeleton_n(ptr::null()) }, 0);
    unsafe {
        ng_skeleton_free(ptr::null_mut());
        ng_mixture_free(ptr::null_mut());
        ng_string_free(ptr::null_mut());
    }
}

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_the_static_library() {
    let crate_dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = target_dir().join("libngroupoid_ffi.a");
    if Command::new("cc").arg("--version").output().is_err() || !lib.exists() {
        eprintln!("skipped: no C compiler or static library");
        return;
    }
    let bin = Path::new(env!("CARGO_TARGET_TMPDIR")).join("ngroupoid_smoke");
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
