//! End-to-end check of the generated header: compile a small C program
//! against `include/anumber.h` and the produced static library, run it, and
//! require a clean exit. Skips (with a note) when no C compiler is found.

use std::path::PathBuf;
use std::process::Command;

const C_PROGRAM: &str = r#"
#include "anumber.h"
#include <stdio.h>
#include <string.h>

static int failures = 0;

static void check(int condition, const char *what) {
    if (!condition) {
        fprintf(stderr, "FAILED: %s\n", what);
        failures += 1;
    }
}

int main(void) {
    AnGraph *g = NULL;
    check(an_graph_generate("path", 4, &g) == AN_STATUS_OK, "generate path:4");
    check(an_graph_vertex_count(g) == 4, "vertex count");
    check(an_graph_edge_count(g) == 3, "edge count");

    char *code = NULL;
    check(an_graph_to_graph6(g, &code) == AN_STATUS_OK, "encode graph6");
    check(code != NULL && strcmp(code, "Ch") == 0, "graph6 round trip");
    an_string_free(code);

    char *json = NULL;
    check(an_invariants_json(g, 0, &json) == AN_STATUS_OK, "invariants json");
    check(json != NULL && strstr(json, "\"a\":[\"1\",\"3\",\"2\"]") != NULL,
          "a-vector in json");
    check(json != NULL && strstr(json, "\"b\":\"0\"") != NULL, "b value in json");
    an_string_free(json);

    uint8_t consistent = 0;
    check(an_verify(g, 0, 0, &consistent) == AN_STATUS_OK, "verify status");
    check(consistent == 1, "verify consistency");
    an_graph_free(g);

    AnGraph *bad = NULL;
    check(an_graph_from_graph6("!!!", &bad) == AN_STATUS_MALFORMED_INPUT,
          "malformed graph6 status");
    check(bad == NULL, "failed parse leaves the out-pointer untouched");
    char *message = an_last_error_message();
    check(message != NULL && strlen(message) > 0, "error message present");
    an_string_free(message);

    check(an_graph_from_graph6(NULL, &bad) == AN_STATUS_NULL_ARGUMENT,
          "NULL text status");
    check(an_default_dp_cap() == 20, "default dp cap");
    check(an_default_homology_cap() == 7, "default homology cap");

    if (failures == 0) {
        printf("c-abi-smoke: ok\n");
        return 0;
    }
    return 1;
}
"#;

/// `target/debug` (or whichever profile directory the test binary sits in).
fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().expect("test executable path");
    // target/<profile>/deps/<test binary> -> target/<profile>
    exe.parent()
        .and_then(|deps| deps.parent())
        .expect("test binary lives two levels under the profile directory")
        .to_path_buf()
}

fn find_compiler() -> Option<&'static str> {
    ["cc", "gcc", "clang"].into_iter().find(|candidate| {
        Command::new(candidate)
            .arg("--version")
            .output()
            .map(|o| o.status.success())
            .unwrap_or(false)
    })
}

#[test]
fn c_program_builds_and_runs_against_the_header() {
    let Some(compiler) = find_compiler() else {
        eprintln!("skipping: no C compiler (cc/gcc/clang) on PATH");
        return;
    };

    let manifest_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include_dir = manifest_dir.join("include");
    assert!(
        include_dir.join("anumber.h").is_file(),
        "the build script should have generated include/anumber.h"
    );
    let static_lib = profile_dir().join("libanumber_ffi.a");
    assert!(
        static_lib.is_file(),
        "expected the static library at {}",
        static_lib.display()
    );

    let scratch = tempfile::tempdir().expect("scratch directory");
    let source = scratch.path().join("smoke.c");
    std::fs::write(&source, C_PROGRAM).expect("writing the C source");
    let program = scratch.path().join("smoke");

    let compile = Command::new(compiler)
        .arg(&source)
        .arg(&static_lib)
        .arg("-I")
        .arg(&include_dir)
        .arg("-o")
        .arg(&program)
        .args(["-lpthread", "-ldl", "-lm"])
        .output()
        .expect("running the C compiler");
    assert!(
        compile.status.success(),
        "C compilation failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&program).output().expect("running the C program");
    assert!(
        run.status.success(),
        "C program failed (stdout: {}, stderr: {})",
        String::from_utf8_lossy(&run.stdout),
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout), "c-abi-smoke: ok\n");
}
