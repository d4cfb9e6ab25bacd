use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use wolfes_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn resolve(name: &str) -> *mut WolfesOp {
    let mut out = ptr::null_mut();
    assert_eq!(wolfes_op_resolve(c(name).as_ptr(), ptr::null(), &mut out), WolfesStatus::Ok);
    out
}

unsafe fn to_text(op: *const WolfesOp, f: WolfesFormat) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(wolfes_op_to_string(op, f, &mut s), WolfesStatus::Ok);
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    wolfes_string_free(s);
    out
}

#[test]
fn hamiltonian_commutes_with_first_integral() {
    unsafe {
        let h = resolve("h.g2");
        let x = resolve("x.g2");
        let mut hx = ptr::null_mut();
        assert_eq!(wolfes_op_commutator(h, x, &mut hx), WolfesStatus::Ok);
        assert_eq!(wolfes_op_is_zero(hx), 1);
        assert_eq!(wolfes_op_order(h), 2);
        for p in [h, x, hx] {
            wolfes_op_free(p);
        }
    }
}

#[test]
fn text_and_json_round_trip() {
    unsafe {
        let k = resolve("k.a2");
        let t = to_text(k, WolfesFormat::Text);
        let mut back = ptr::null_mut();
        assert_eq!(wolfes_op_parse(c(&t).as_ptr(), &mut back), WolfesStatus::Ok);
        assert_eq!(wolfes_op_equal(k, back), 1);
        let j = to_text(k, WolfesFormat::Json);
        let mut back2 = ptr::null_mut();
        assert_eq!(wolfes_op_parse_json(c(&j).as_ptr(), &mut back2), WolfesStatus::Ok);
        assert_eq!(wolfes_op_equal(k, back2), 1);
        assert!(to_text(k, WolfesFormat::Latex).contains("\\frac"));
        for p in [k, back, back2] {
            wolfes_op_free(p);
        }
    }
}

#[test]
fn substitution_and_composition() {
    unsafe {
        let h = resolve("h.g2");
        let mut h0 = ptr::null_mut();
        assert_eq!(wolfes_op_substitute(h, ptr::null(), ptr::null(), c("0").as_ptr(), &mut h0), WolfesStatus::Ok);
        let mut hh = ptr::null_mut();
        assert_eq!(wolfes_op_compose(h0, h0, &mut hh), WolfesStatus::Ok);
        assert_eq!(wolfes_op_order(hh), 4);
        let mut diff = ptr::null_mut();
        assert_eq!(wolfes_op_sub(h, h0, &mut diff), WolfesStatus::Ok);
        // only the omega terms remain
        assert!(to_text(diff, WolfesFormat::Text).contains('w'));
        for p in [h, h0, hh, diff] {
            wolfes_op_free(p);
        }
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(wolfes_op_resolve(c("h.b3").as_ptr(), ptr::null(), &mut out), WolfesStatus::UnknownModel);
        assert!(out.is_null());
        let msg = CStr::from_ptr(wolfes_last_error()).to_str().unwrap();
        assert!(msg.contains("h.b3"));
        assert_eq!(wolfes_op_parse(c("((1) s1^0").as_ptr(), &mut out), WolfesStatus::Parse);
        assert_eq!(wolfes_op_resolve(ptr::null(), ptr::null(), &mut out), WolfesStatus::NullPointer);
        let h = resolve("h.g2");
        assert_eq!(
            wolfes_op_substitute(h, c("0.5").as_ptr(), ptr::null(), ptr::null(), &mut out),
            WolfesStatus::Parse
        );
        assert_eq!(wolfes_op_order(ptr::null()), -1);
        assert_eq!(wolfes_op_equal(h, ptr::null()), -1);
        wolfes_op_free(h);
        wolfes_op_free(ptr::null_mut());
        wolfes_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_through_the_boundary() {
    unsafe {
        let mut ok = -1;
        assert_eq!(wolfes_verify(c("g2-integrability").as_ptr(), ptr::null(), &mut ok), WolfesStatus::Ok);
        assert_eq!(ok, 1);
        assert_eq!(wolfes_verify(c("nope").as_ptr(), ptr::null(), &mut ok), WolfesStatus::InvalidArgument);
        assert_eq!(
            wolfes_verify(c("omega").as_ptr(), c("sideways").as_ptr(), &mut ok),
            WolfesStatus::InvalidArgument
        );
    }
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/wolfes.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in ["wolfes_op_resolve", "wolfes_op_commutator", "wolfes_op_free", "wolfes_last_error"] {
        assert!(text.contains(f), "{f} missing from header");
    }
    let Ok(cc) = which_cc() else { return };
    let src = std::env::temp_dir().join("wolfes_header_check.c");
    std::fs::write(&src, "#include \"wolfes.h\"\nint main(void) { WolfesOp *op = 0; wolfes_op_free(op); return WOLFES_STATUS_OK; }\n").unwrap();
    let status = Command::new(cc)
        .arg("-fsyntax-only")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(header.parent().unwrap())
        .arg(&src)
        .status()
        .unwrap();
    assert!(status.success());
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "clang", "gcc"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok())
        .ok_or(())
}
