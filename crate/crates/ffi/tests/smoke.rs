//! Consumer view of the ABI: the generated header matches the exported
//! symbols, and a C program compiled against the static library runs.

use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use supertwist_ffi::*;

#[test]
fn end_to_end_character_query() {
    unsafe {
        let mut rs: *mut StRootSystem = ptr::null_mut();
        assert_eq!(st_root_system_new(3, 2, &mut rs), StStatus::Ok);

        let weight = CString::new("0,0,0,0,0").unwrap();
        let mut chi: *mut StCharacter = ptr::null_mut();
        assert_eq!(
            st_verma_char(rs, weight.as_ptr(), 4, &mut chi),
            StStatus::Ok
        );

        let mut text: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(st_char_text(chi, &mut text), StStatus::Ok);
        let listing = CStr::from_ptr(text).to_str().unwrap().to_string();
        st_string_free(text);
        assert!(listing.starts_with("1*e^[0,0,0,0,0]\n"));

        st_char_free(chi);
        st_root_system_free(rs);
    }
}

#[test]
fn header_declares_the_surface() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("supertwist.h");
    let text = std::fs::read_to_string(&header).expect("header generated by the build script");
    for decl in [
        "typedef struct StRootSystem StRootSystem;",
        "typedef struct StCharacter StCharacter;",
        "ST_STATUS_INCOMPATIBLE",
        "st_twist_report_json",
        "st_char_coefficient",
        "st_string_free",
    ] {
        assert!(text.contains(decl), "header misses {decl:?}");
    }
}

/// Compile and run a C consumer when a toolchain and the static library are
/// around; otherwise the test is a no-op.
#[test]
fn c_consumer_compiles_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include_dir = manifest.join("include");
    let staticlib = manifest.parent().and_then(Path::parent).map(|root| {
        root.join("target")
            .join("debug")
            .join("libsupertwist_ffi.a")
    });
    let cc_available = Command::new("cc").arg("--version").output().is_ok();
    let Some(staticlib) = staticlib.filter(|p| p.exists()) else {
        eprintln!("skipping: static library not built at the expected path");
        return;
    };
    if !cc_available || !include_dir.join("supertwist.h").exists() {
        eprintln!("skipping: no C toolchain or header available");
        return;
    }

    let dir = std::env::temp_dir().join(format!("supertwist-ffi-smoke-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let source = dir.join("consumer.c");
    std::fs::write(
        &source,
        r#"
#include <assert.h>
#include <string.h>
#include "supertwist.h"

int main(void) {
    StRootSystem *rs = NULL;
    assert(st_root_system_new(2, 1, &rs) == ST_STATUS_OK);
    size_t indices[1] = {1};
    StParabolic *p = NULL;
    assert(st_parabolic_new(rs, indices, 1, &p) == ST_STATUS_OK);
    StWeyl *w = NULL;
    assert(st_weyl_from_word(rs, "s1", &w) == ST_STATUS_OK);
    char *json = NULL;
    assert(st_twist_report_json(rs, p, w, "1,1,-1", 8, &json) == ST_STATUS_OK);
    assert(strstr(json, "\"agree\":true") != NULL);
    st_string_free(json);
    st_weyl_free(w);
    st_parabolic_free(p);
    st_root_system_free(rs);
    return 0;
}
"#,
    )
    .unwrap();
    let binary = dir.join("consumer");
    let compile = Command::new("cc")
        .arg("-I")
        .arg(&include_dir)
        .arg(&source)
        .arg(&staticlib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&binary)
        .output()
        .unwrap();
    assert!(
        compile.status.success(),
        "cc failed: {}",
        String::from_utf8_lossy(&compile.stderr)
    );
    let run = Command::new(&binary).output().unwrap();
    assert!(run.status.success());
    let _ = std::fs::remove_dir_all(&dir);
}
