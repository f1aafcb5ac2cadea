use std::ffi::{CStr, CString};
use std::ptr;

use cyclic_mvif_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(cmvif_last_error()) }.to_string_lossy().into_owned()
}

fn preset(name: &str) -> *mut CmvifCode {
    let name = CString::new(name).unwrap();
    let mut code = ptr::null_mut();
    assert_eq!(unsafe { cmvif_code_from_preset(name.as_ptr(), &mut code) }, CmvifStatus::Ok);
    code
}

fn decoder(code: *const CmvifCode, pipeline: CmvifPipeline, cache: Option<&std::path::Path>) -> *mut CmvifDecoder {
    let dir = cache.map(|p| CString::new(p.to_str().unwrap()).unwrap());
    let mut dec = ptr::null_mut();
    let status = unsafe { cmvif_decoder_new(code, pipeline, dir.as_ref().map_or(ptr::null(), |d| d.as_ptr()), &mut dec) };
    assert_eq!(status, CmvifStatus::Ok, "{}", last_error());
    dec
}

#[test]
fn field_arithmetic_matches_core() {
    let core = cyclic_mvif::Field::from_modulus_code(3, 3, 0x22).unwrap();
    let mut f = ptr::null_mut();
    unsafe {
        assert_eq!(cmvif_field_new(3, 3, 0x22, &mut f), CmvifStatus::Ok);
        assert_eq!(cmvif_field_order(f), 27);
        for a in 0..27 {
            for b in 1..27 {
                let mut out = 0;
                assert_eq!(cmvif_field_apply(f, CmvifOp::Div, a, b, &mut out), CmvifStatus::Ok);
                let expected = core.div(cyclic_mvif::Element(a), cyclic_mvif::Element(b)).unwrap();
                assert_eq!(out, expected.code());
            }
        }
        let mut log = 0;
        assert_eq!(cmvif_field_log(f, 0, &mut log), CmvifStatus::InvalidArgument);
        assert_eq!(cmvif_field_apply(f, CmvifOp::Add, 27, 1, &mut log), CmvifStatus::InvalidArgument);
        assert!(last_error().contains("outside GF(27)"), "{}", last_error());
        cmvif_field_free(f);
    }
}

#[test]
fn bad_inputs_report_status_and_message() {
    let mut f = ptr::null_mut();
    unsafe {
        assert_eq!(cmvif_field_new(2, 4, 0x1f, &mut f), CmvifStatus::InvalidArgument);
        assert!(f.is_null());
        assert!(last_error().contains("primitive"), "{}", last_error());
        assert_eq!(cmvif_field_new(2, 4, 0x13, ptr::null_mut()), CmvifStatus::NullPointer);
        assert_eq!(cmvif_field_alpha_pow(ptr::null(), 1, &mut 0), CmvifStatus::NullPointer);
        assert_eq!(cmvif_code_from_preset(ptr::null(), &mut ptr::null_mut()), CmvifStatus::NullPointer);
        let name = CString::new("nope").unwrap();
        assert_eq!(cmvif_code_from_preset(name.as_ptr(), &mut ptr::null_mut()), CmvifStatus::InvalidArgument);
        let ok = CStr::from_ptr(cmvif_status_name(CmvifStatus::DecodeFailure));
        assert_eq!(ok.to_str().unwrap(), "decode failure");
        // a successful call clears the message
        let mut f = ptr::null_mut();
        assert_eq!(cmvif_field_new(2, 4, 0x13, &mut f), CmvifStatus::Ok);
        assert_eq!(last_error(), "");
        cmvif_field_free(f);
        cmvif_field_free(ptr::null_mut());
        cmvif_code_free(ptr::null_mut());
        cmvif_decoder_free(ptr::null_mut());
        cmvif_string_free(ptr::null_mut());
    }
}

#[test]
fn code_from_spec_and_parameters() {
    let text = CString::new(cyclic_mvif::code::presets::by_name("rs15").unwrap().to_text()).unwrap();
    let mut a = ptr::null_mut();
    let mut b = ptr::null_mut();
    let base = [1u32, 2, 3, 4];
    unsafe {
        assert_eq!(cmvif_code_from_spec(text.as_ptr(), &mut a), CmvifStatus::Ok);
        assert_eq!(cmvif_code_new(2, 4, 0x13, 15, 16, base.as_ptr(), base.len(), 2, &mut b), CmvifStatus::Ok);
        let (mut ia, mut ib) = (CmvifCodeInfo::default(), CmvifCodeInfo::default());
        cmvif_code_info(a, &mut ia);
        cmvif_code_info(b, &mut ib);
        assert_eq!(ia, ib);
        assert_eq!(ia, CmvifCodeInfo { n: 15, k: 11, q: 16, t: 2, field_order: 16, base_len: 4 });
        let bad = CString::new("p = 2\n").unwrap();
        assert_eq!(cmvif_code_from_spec(bad.as_ptr(), &mut ptr::null_mut()), CmvifStatus::InvalidArgument);
        cmvif_code_free(a);
        cmvif_code_free(b);
    }
}

#[test]
fn encode_corrupt_decode_round_trip() {
    let code = preset("rs15");
    let dir = tempfile::tempdir().unwrap();
    let one_step = decoder(code, CmvifPipeline::OneStep, None);
    let gelp = decoder(code, CmvifPipeline::Gelp, Some(dir.path()));
    let message: Vec<u32> = (0..11).map(|i| (i * 7 + 3) % 16).collect();
    let mut cw = [0u32; 15];
    unsafe {
        assert_eq!(cmvif_code_encode(code, message.as_ptr(), 11, cw.as_mut_ptr(), 15), CmvifStatus::Ok);
        let mut yes = 0;
        assert_eq!(cmvif_code_is_codeword(code, cw.as_ptr(), 15, &mut yes), CmvifStatus::Ok);
        assert_eq!(yes, 1);
        let mut received = cw;
        received[2] ^= 0xc;
        received[14] ^= 0x6;
        for dec in [one_step, gelp] {
            let mut out = [0u32; 15];
            let mut weight = 0;
            assert_eq!(cmvif_decoder_decode(dec, received.as_ptr(), 15, out.as_mut_ptr(), 15, &mut weight), CmvifStatus::Ok);
            assert_eq!(out, cw);
            assert_eq!(weight, 2);
            assert_eq!(
                cmvif_decoder_decode(dec, received.as_ptr(), 15, out.as_mut_ptr(), 14, &mut weight),
                CmvifStatus::BufferTooSmall
            );
            assert_eq!(
                cmvif_decoder_decode(dec, received.as_ptr(), 14, out.as_mut_ptr(), 15, &mut weight),
                CmvifStatus::InvalidArgument
            );
        }
        assert!(std::fs::read_dir(dir.path()).unwrap().next().is_some());
        cmvif_decoder_free(one_step);
        cmvif_decoder_free(gelp);
        cmvif_code_free(code);
    }
}

#[test]
fn decode_failure_and_report() {
    let code = preset("bch15");
    let dec = decoder(code, CmvifPipeline::OneStep, None);
    let failing = (0..15usize)
        .flat_map(|a| (a + 1..15).flat_map(move |b| (b + 1..15).map(move |c| [a, b, c])))
        .find_map(|positions| {
            let mut w = [0u32; 15];
            positions.iter().for_each(|&l| w[l] = 1);
            let mut out = [7u32; 15];
            let s = unsafe { cmvif_decoder_decode(dec, w.as_ptr(), 15, out.as_mut_ptr(), 15, ptr::null_mut()) };
            (s == CmvifStatus::DecodeFailure).then_some((w, out))
        });
    let (word, untouched) = failing.expect("some weight-3 word fails");
    assert_eq!(untouched, [7u32; 15]);
    assert!(!last_error().is_empty());
    let mut report = ptr::null_mut();
    unsafe {
        assert_eq!(cmvif_decoder_report(dec, word.as_ptr(), 15, false, &mut report), CmvifStatus::Ok);
        let text = CStr::from_ptr(report).to_str().unwrap().to_owned();
        cmvif_string_free(report);
        assert!(text.contains("status = failure"), "{text}");
        let parsed = cyclic_mvif::decoder::DecodeResult::parse_kv(&text).unwrap();
        assert!(!parsed.is_success());
        cmvif_decoder_free(dec);
        cmvif_code_free(code);
    }
}
