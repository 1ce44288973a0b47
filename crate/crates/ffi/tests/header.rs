use std::path::PathBuf;
use std::process::Command;

fn header() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/su2branch.h")
}

#[test]
fn header_declares_every_export() {
    let text = std::fs::read_to_string(header()).unwrap();
    for name in [
        "su2_last_error",
        "su2_convention",
        "su2_branching_open",
        "su2_branching_free",
        "su2_branching_rank",
        "su2_branching_params",
        "su2_branching_find_node",
        "su2_branching_zpoly",
        "su2_branching_series",
        "su2_branching_multiplicity",
        "SU2_STATUS_BUFFER_TOO_SMALL",
        "typedef struct Su2Branching Su2Branching;",
    ] {
        assert!(text.contains(name), "missing {name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(out) = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-x", "c"])
        .arg(header())
        .output()
    else {
        eprintln!("no C compiler on PATH");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
