//! The generated header declares every exported function, and a C program
//! written against it compiles, links with the static library, and runs.

use std::path::{Path, PathBuf};
use std::process::Command;

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn exported_functions() -> Vec<String> {
    let src = std::fs::read_to_string(crate_dir().join("src/lib.rs")).unwrap();
    src.lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap().to_string())
        .collect()
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(crate_dir().join("include/arithnull.h")).unwrap();
    let fns = exported_functions();
    assert!(fns.len() >= 15, "{fns:?}");
    for f in fns {
        assert!(header.contains(&format!("{f}(")), "{f} missing from the header");
    }
    for t in ["typedef struct ArithnullPoly ArithnullPoly;", "typedef struct ArithnullCertificate", "ARITHNULL_STATUS_OK = 0"] {
        assert!(header.contains(t), "{t}");
    }
}

fn static_lib() -> PathBuf {
    // integration tests get `target/tmp`; the library sits next to it
    let tmp = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let target = tmp.parent().unwrap();
    for profile in ["debug", "release"] {
        let p = target.join(profile).join("libarithnull_ffi.a");
        if p.exists() {
            return p;
        }
    }
    panic!("libarithnull_ffi.a not found under {}", target.display());
}

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "arithnull.h"

int main(void) {
    ArithnullPoly *f[3];
    const char *text[3] = {"x1 - 1", "x2 - x1^2", "5 - x2^2"};
    for (int i = 0; i < 3; i++) {
        if (arithnull_poly_parse(text[i], 2, &f[i]) != ARITHNULL_STATUS_OK) return 10 + i;
    }
    ArithnullCertificate *cert = NULL;
    if (arithnull_certificate_search((const ArithnullPoly *const *)f, 3, -1, &cert) != ARITHNULL_STATUS_OK) return 20;
    uint32_t degree = 0;
    if (arithnull_certificate_verify(cert, (const ArithnullPoly *const *)f, 3, &degree) != ARITHNULL_STATUS_OK) return 21;
    char *a = NULL;
    if (arithnull_certificate_a(cert, &a) != ARITHNULL_STATUS_OK) return 22;
    printf("a=%s degree=%u\n", a, degree);
    arithnull_string_free(a);
    ArithnullPoly *bad = NULL;
    if (arithnull_poly_parse("x1 +", 1, &bad) != ARITHNULL_STATUS_PARSE) return 30;
    if (strlen(arithnull_last_error()) == 0) return 31;
    arithnull_certificate_free(cert);
    for (int i = 0; i < 3; i++) arithnull_poly_free(f[i]);
    return 0;
}
"#;

fn compiler() -> Option<String> {
    ["cc", "clang", "gcc"].into_iter().find(|c| Command::new(c).arg("--version").output().is_ok()).map(String::from)
}

#[test]
fn c_program_links_and_runs() {
    let cc = compiler().expect("a C compiler is required for the header check");
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("ffi-c-check");
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("main.c");
    std::fs::write(&src, PROGRAM).unwrap();
    let exe = dir.join("main");
    let out = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(&src)
        .arg(static_lib())
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let run = Command::new(&exe).output().unwrap();
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert!(run.status.success(), "exit {:?}: {stdout}", run.status.code());
    assert!(stdout.contains("a=4 degree="), "{stdout}");
}
