//! Compiles and runs a small C program against the generated header and the
//! static library, proving the ABI end to end.

use std::path::PathBuf;
use std::process::Command;

const C_PROGRAM: &str = r#"
#include <assert.h>
#include <stdio.h>
#include <string.h>
#include "ferrers.h"

int main(void) {
    uint32_t parts[] = {2, 1};
    ferrers_partition_t *p = NULL;
    assert(ferrers_partition_new(parts, 2, &p) == FERRERS_STATUS_T_OK);
    assert(ferrers_partition_len(p) == 2);
    assert(ferrers_partition_size(p) == 3);

    ferrers_series_t *s = NULL;
    assert(ferrers_rank_gf(p, 1, -1, FERRERS_METHOD_T_FORMULA, &s) == FERRERS_STATUS_T_OK);
    assert(ferrers_series_len(s) == 4);
    int64_t coeff = 0;
    assert(ferrers_series_coeff_i64(s, 2, &coeff) == FERRERS_STATUS_T_OK);
    assert(coeff == 2);

    char *text = NULL;
    assert(ferrers_series_coeff_decimal(s, 3, &text) == FERRERS_STATUS_T_OK);
    assert(strcmp(text, "1") == 0);
    ferrers_string_free(text);

    ferrers_unimodality_t verdict;
    assert(ferrers_unimodality(s, &verdict) == FERRERS_STATUS_T_OK);
    assert(verdict.unimodal);
    assert(verdict.first_dip_index == -1);

    ferrers_series_free(s);
    ferrers_partition_free(p);

    uint32_t bad[] = {3, 4};
    assert(ferrers_partition_new(bad, 2, &p) == FERRERS_STATUS_T_INVALID_PARTITION);

    puts("c-abi-ok");
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include_dir = manifest.join("include");
    let profile_dir = std::env::var("CARGO_TARGET_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|_| manifest.join("../../target"))
        .join(if cfg!(debug_assertions) { "debug" } else { "release" });
    let static_lib = profile_dir.join("libferrers_ffi.a");
    assert!(
        static_lib.exists(),
        "static library not built at {}",
        static_lib.display()
    );

    let work = tempfile::tempdir().expect("tempdir");
    let source = work.path().join("smoke.c");
    std::fs::write(&source, C_PROGRAM).expect("write C source");
    let binary = work.path().join("smoke");

    let compile = Command::new("cc")
        .arg(&source)
        .arg("-I")
        .arg(&include_dir)
        .arg(&static_lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&binary)
        .output()
        .expect("cc runs");
    assert!(
        compile.status.success(),
        "cc failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&binary).output().expect("smoke binary runs");
    assert!(run.status.success(), "smoke binary exited nonzero");
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "c-abi-ok");
}
