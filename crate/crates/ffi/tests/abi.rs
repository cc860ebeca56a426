use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use chordarc::arcnum::arc_number as core_arc;
use chordarc::make_c;
use chordarc_ffi::*;

fn parse(text: &str) -> *mut ChordarcDiagram {
    let s = CString::new(text).unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(
        unsafe { chordarc_diagram_parse(s.as_ptr(), &mut d) },
        ChordarcStatus::Ok
    );
    assert!(!d.is_null());
    d
}

fn last_error() -> Option<String> {
    let p = chordarc_last_error();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

#[test]
fn parse_and_query() {
    let d = parse("0-3 1-8 2-5 4-7 6-9");
    let mut m = 0;
    let mut arc = 0;
    unsafe {
        assert_eq!(chordarc_diagram_chord_count(d, &mut m), ChordarcStatus::Ok);
        assert_eq!(chordarc_arc_number(d, &mut arc), ChordarcStatus::Ok);
        chordarc_diagram_free(d);
    }
    assert_eq!((m, arc), (5, 3));
}

#[test]
fn cutting_pair_and_not_found() {
    let d = parse("0-2 1-3");
    let (mut g1, mut g2) = (99, 99);
    unsafe {
        assert_eq!(
            chordarc_find_cutting_pair(d, &mut g1, &mut g2),
            ChordarcStatus::Ok
        );
        chordarc_diagram_free(d);
    }
    assert_eq!((g1, g2), (0, 2));

    let mut c3 = ptr::null_mut();
    unsafe {
        assert_eq!(chordarc_make_c(1, &mut c3), ChordarcStatus::Ok);
        assert_eq!(
            chordarc_find_cutting_pair(c3, &mut g1, &mut g2),
            ChordarcStatus::NotFound
        );
        chordarc_diagram_free(c3);
    }
}

#[test]
fn buffers_report_length() {
    let d = parse("3 2 1 0");
    let mut len = 0;
    unsafe {
        assert_eq!(
            chordarc_diagram_pairing(d, ptr::null_mut(), 0, &mut len),
            ChordarcStatus::BufferTooSmall
        );
        assert_eq!(len, 4);
        let mut buf = vec![0usize; len];
        assert_eq!(
            chordarc_diagram_pairing(d, buf.as_mut_ptr(), buf.len(), &mut len),
            ChordarcStatus::Ok
        );
        assert_eq!(buf, [3, 2, 1, 0]);

        let mut code = vec![0u32; 4];
        assert_eq!(
            chordarc_canonical_code(d, code.as_mut_ptr(), 4, &mut len),
            ChordarcStatus::Ok
        );
        let expected = chordarc::ChordDiagram::from_pairing(&[3, 2, 1, 0])
            .unwrap()
            .canonical_code();
        assert_eq!(code, expected.as_slice());
        chordarc_diagram_free(d);
    }
}

#[test]
fn equivalence_flags() {
    let x = parse("0-1 2-5 3-7 4-6");
    let reflected = chordarc::ChordDiagram::parse("0-1 2-5 3-7 4-6", chordarc::Format::Auto)
        .unwrap()
        .reflect()
        .pairing()
        .to_vec();
    let mut y = ptr::null_mut();
    let (mut rot, mut dih) = (true, false);
    unsafe {
        assert_eq!(
            chordarc_diagram_from_pairing(reflected.as_ptr(), reflected.len(), &mut y),
            ChordarcStatus::Ok
        );
        assert_eq!(
            chordarc_equivalent(x, y, false, &mut rot),
            ChordarcStatus::Ok
        );
        assert_eq!(
            chordarc_equivalent(x, y, true, &mut dih),
            ChordarcStatus::Ok
        );
        chordarc_diagram_free(x);
        chordarc_diagram_free(y);
    }
    assert!(!rot && dih);
}

#[test]
fn obstruction_witness_is_an_odd_family_member() {
    let mut d = ptr::null_mut();
    let mut buf = vec![0usize; 14];
    let (mut len, mut n) = (0, 0);
    unsafe {
        assert_eq!(chordarc_make_c(3, &mut d), ChordarcStatus::Ok);
        assert_eq!(
            chordarc_find_obstruction(d, buf.as_mut_ptr(), buf.len(), &mut len, &mut n),
            ChordarcStatus::Ok
        );
        chordarc_diagram_free(d);
    }
    assert_eq!((len, n), (14, 3));
    let chords: Vec<(usize, usize)> = buf.chunks(2).map(|p| (p[0], p[1])).collect();
    let c = make_c(3).unwrap();
    assert_eq!(
        c.sub_diagram(
            &chords
                .iter()
                .map(|&(a, b)| chordarc::Chord::new(a, b))
                .collect::<Vec<_>>()
        )
        .unwrap(),
        c
    );
    assert_eq!(core_arc(&c), 3);

    let tre = parse("0-3 1-4 2-5");
    unsafe {
        assert_eq!(
            chordarc_find_obstruction(tre, buf.as_mut_ptr(), buf.len(), &mut len, &mut n),
            ChordarcStatus::NotFound
        );
        chordarc_diagram_free(tre);
    }
    assert_eq!(len, 0);
}

#[test]
fn planarity() {
    let mut out = false;
    for (n, planar) in [(1, true), (2, false), (3, false)] {
        let mut d = ptr::null_mut();
        unsafe {
            assert_eq!(chordarc_make_c(n, &mut d), ChordarcStatus::Ok);
            assert_eq!(
                chordarc_is_planar_realizable(d, &mut out),
                ChordarcStatus::Ok
            );
            chordarc_diagram_free(d);
        }
        assert_eq!(out, planar, "n={n}");
    }
}

#[test]
fn errors_set_status_and_message() {
    let bad = CString::new("0 0").unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(
        unsafe { chordarc_diagram_parse(bad.as_ptr(), &mut d) },
        ChordarcStatus::InvalidInput
    );
    assert!(d.is_null());
    assert!(last_error().unwrap().contains("itself"));

    assert_eq!(
        unsafe { chordarc_diagram_parse(ptr::null(), &mut d) },
        ChordarcStatus::NullPointer
    );
    assert_eq!(
        unsafe { chordarc_make_c(0, &mut d) },
        ChordarcStatus::InvalidArgument
    );
    let mut arc = 0;
    assert_eq!(
        unsafe { chordarc_arc_number(ptr::null(), &mut arc) },
        ChordarcStatus::NullPointer
    );

    let ok = parse("1 0");
    assert!(last_error().is_none());
    unsafe {
        assert_eq!(
            chordarc_arc_number(ok, ptr::null_mut()),
            ChordarcStatus::NullPointer
        );
        chordarc_diagram_free(ok);
        chordarc_diagram_free(ptr::null_mut());
    }
}

#[test]
fn guard_exceeded_maps_to_its_own_status() {
    let chords: Vec<String> = (0..25)
        .map(|i| format!("{}-{}", 2 * i, 2 * i + 1))
        .collect();
    let d = parse(&chords.join(" "));
    let mut out = false;
    unsafe {
        assert_eq!(
            chordarc_is_planar_realizable(d, &mut out),
            ChordarcStatus::GuardExceeded
        );
        chordarc_diagram_free(d);
    }
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(crate_dir().join("include/chordarc.h")).unwrap();
    for name in [
        "typedef struct ChordarcDiagram ChordarcDiagram",
        "CHORDARC_STATUS_BUFFER_TOO_SMALL = 5",
        "chordarc_diagram_parse(",
        "chordarc_diagram_free(",
        "chordarc_find_obstruction(",
        "chordarc_last_error(",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

/// Compiles a C program against the generated header and the static library.
#[test]
fn c_program_links_and_runs() {
    let tmp = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let profile_dir = tmp.parent().unwrap().join(if cfg!(debug_assertions) {
        "debug"
    } else {
        "release"
    });
    let lib = profile_dir.join("libchordarc_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let exe = tmp.join("chordarc_smoke");
    let status = Command::new(std::env::var("CC").unwrap_or_else(|_| "cc".into()))
        .arg(crate_dir().join("tests/c/smoke.c"))
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
