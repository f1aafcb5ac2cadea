use std::sync::OnceLock;

use cyclic_mvif::code::presets;
use cyclic_mvif::decoder::{chien_search, decode, decode_gelp, decode_one_step, ifbma, ArtifactSet, DecodeResult, Pipeline};
use cyclic_mvif::interp::{mvif_naive, InterpolationProblem, NaiveBudget};
use cyclic_mvif::poly::{parse_term_table, poly_from_rows};
use cyclic_mvif::repr::{
    build_gelp_coefficients, build_representation, build_unknown_syndrome_rep, locator_poly, ArtifactKind,
};
use cyclic_mvif::{CodeSpec, CyclicCode, Element, ErrorPattern, Field, SparseMultiPoly};
use proptest::prelude::*;

struct Fixture {
    code: CyclicCode,
    one_step: ArtifactSet,
    gelp: ArtifactSet,
}

fn fixture(name: &str) -> &'static Fixture {
    static QR: OnceLock<Fixture> = OnceLock::new();
    static RS: OnceLock<Fixture> = OnceLock::new();
    let cell = match name {
        "qr31" => &QR,
        "rs15" => &RS,
        _ => unreachable!(),
    };
    cell.get_or_init(|| {
        let code = presets::by_name(name).unwrap().build().unwrap();
        let unknown: Vec<_> = cyclic_mvif::repr::needed_targets(&code)
            .into_iter()
            .map(|r| build_unknown_syndrome_rep(&code, r).unwrap())
            .collect();
        let one_step = ArtifactSet::new().with(&code, unknown).unwrap();
        let gelp = ArtifactSet::new().with(&code, build_gelp_coefficients(&code).unwrap()).unwrap();
        Fixture { code, one_step, gelp }
    })
}

fn gf32() -> Field {
    Field::from_modulus_code(2, 5, 0x25).unwrap()
}

/// Random message encoded, plus a random correctable pattern.
fn codeword_and_pattern(code: &CyclicCode) -> impl Strategy<Value = (Vec<Element>, ErrorPattern)> + '_ {
    let m = code.magnitudes().to_vec();
    let symbols = {
        let m = m.clone();
        prop::collection::vec(prop::option::of(prop::sample::select(m)), code.dimension() as usize)
    };
    let pattern = (0..=code.t() as usize).prop_flat_map(move |w| {
        (
            prop::sample::subsequence((0..code.n()).collect::<Vec<_>>(), w),
            prop::collection::vec(prop::sample::select(m.clone()), w),
        )
    });
    (symbols, pattern).prop_map(move |(msg, (positions, mags))| {
        let msg: Vec<Element> = msg.into_iter().map(|c| c.unwrap_or(Element::ZERO)).collect();
        let codeword = code.encode(&msg).unwrap();
        let p = ErrorPattern::new(positions.into_iter().zip(mags).collect(), code).unwrap();
        (codeword, p)
    })
}

fn add(code: &CyclicCode, a: &[Element], b: &[Element]) -> Vec<Element> {
    a.iter().zip(b).map(|(&x, &y)| code.field().add(x, y)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, .. ProptestConfig::default() })]

    #[test]
    fn qr31_random_codewords_corrected((codeword, pattern) in codeword_and_pattern(&fixture("qr31").code)) {
        let fx = fixture("qr31");
        let received = add(&fx.code, &codeword, &pattern.to_word(31));
        let r = decode_one_step(&fx.code, &received, &fx.one_step, false).unwrap();
        prop_assert_eq!(r.error.as_ref(), Some(&pattern));
        prop_assert_eq!(&r.codeword, &codeword);
        let g = decode_gelp(&fx.code, &received, &fx.gelp).unwrap();
        prop_assert_eq!(g.error, r.error);
    }

    #[test]
    fn rs15_random_codewords_corrected((codeword, pattern) in codeword_and_pattern(&fixture("rs15").code)) {
        let fx = fixture("rs15");
        let received = add(&fx.code, &codeword, &pattern.to_word(15));
        let g = decode_gelp(&fx.code, &received, &fx.gelp).unwrap();
        prop_assert_eq!(g.error.as_ref(), Some(&pattern));
        prop_assert_eq!(&g.codeword, &codeword);
        let r = decode_one_step(&fx.code, &received, &fx.one_step, false).unwrap();
        prop_assert_eq!(r.error, g.error);
    }

    /// Beyond `t` errors a decoder either fails or lands on a codeword
    /// within distance `t`.
    #[test]
    fn too_many_errors_never_yield_non_codewords(
        positions in prop::sample::subsequence((0..31u32).collect::<Vec<_>>(), 4),
        which in 0..2usize,
    ) {
        let name = ["qr31", "rs15"][which];
        let fx = fixture(name);
        let n = fx.code.n();
        let positions: Vec<u32> = positions.into_iter().filter(|&l| l < n).collect();
        let pattern = ErrorPattern::new(positions.iter().map(|&l| (l, Element::ONE)).collect(), &fx.code).unwrap();
        let received = pattern.to_word(n);
        for pipeline in [Pipeline::OneStep, Pipeline::Gelp] {
            let set = if pipeline == Pipeline::OneStep { &fx.one_step } else { &fx.gelp };
            let r = decode(&fx.code, &received, set, pipeline, false).unwrap();
            if r.is_success() {
                prop_assert!(fx.code.is_codeword(&r.codeword));
                let distance = r.codeword.iter().zip(&received).filter(|(a, b)| a != b).count();
                prop_assert!(distance <= fx.code.t() as usize);
            }
        }
    }

    /// The connection polynomial has exactly the pattern's locator roots.
    #[test]
    fn ifbma_locator_matches_pattern((_, pattern) in codeword_and_pattern(&fixture("rs15").code)) {
        let fx = fixture("rs15");
        let received = pattern.to_word(15);
        let s: Vec<Element> = (1..=4).map(|r| fx.code.word_syndrome(&received, r)).collect();
        let (c, _) = ifbma(&s, fx.code.field());
        let expected = locator_poly(&fx.code, &pattern);
        prop_assert_eq!(chien_search(&fx.code, &c), chien_search(&fx.code, &expected));
        prop_assert_eq!(c.degree(), expected.degree());
        // scalar multiple: c = c_0 * expected
        prop_assert_eq!(c.clone(), expected.scale(c.coeff(0), fx.code.field()));
    }

    #[test]
    fn decode_report_round_trips((codeword, pattern) in codeword_and_pattern(&fixture("qr31").code), trace: bool) {
        let fx = fixture("qr31");
        let received = add(&fx.code, &codeword, &pattern.to_word(31));
        let r = decode_one_step(&fx.code, &received, &fx.one_step, trace).unwrap();
        let text = r.to_kv();
        let back = DecodeResult::parse_kv(&text).unwrap();
        prop_assert_eq!(back.to_kv(), text);
        prop_assert_eq!(back, r);
    }

    #[test]
    fn interpolation_is_exact(
        arity in 1usize..=3,
        raw in prop::collection::vec((prop::collection::vec(0u32..32, 3), 0u32..32), 1..80),
    ) {
        let f = gf32();
        let mut seen = std::collections::HashSet::new();
        let (points, values): (Vec<Vec<Element>>, Vec<Element>) = raw
            .into_iter()
            .map(|(p, v)| (p[..arity].iter().map(|&c| Element(c)).collect::<Vec<_>>(), Element(v)))
            .filter(|(p, _)| seen.insert(p.clone()))
            .unzip();
        let problem = InterpolationProblem::new(arity, points.clone(), values.clone()).unwrap();
        let l = mvif_naive(&problem, &f, NaiveBudget::default()).unwrap();
        for (p, v) in points.iter().zip(&values) {
            prop_assert_eq!(l.eval(p, &f).unwrap(), *v);
        }
        prop_assert!(l.terms().iter().all(|(e, c)| !c.is_zero() && e.iter().all(|&k| k <= 31)));
    }

    #[test]
    fn term_table_round_trips(terms in prop::collection::vec((prop::collection::vec(0u64..200, 3), 1u32..32), 0..40)) {
        let f = gf32();
        let p = SparseMultiPoly::from_terms(3, &f, terms.into_iter().map(|(e, c)| (e, Element(c)))).unwrap();
        let rows = parse_term_table(&p.to_term_table(), Some(3)).unwrap();
        prop_assert_eq!(poly_from_rows(&rows, 3, &f).unwrap(), p);
    }

    #[test]
    fn field_log_antilog_inverse(a in 1u32..256, b in 1u32..256, k in -600i64..600) {
        let f = Field::from_modulus_code(2, 8, 0x11d).unwrap();
        let (a, b) = (Element(a), Element(b));
        prop_assert_eq!(f.alpha_pow(f.log(a).unwrap() as i64), a);
        prop_assert_eq!(f.div(f.mul(a, b), b).unwrap(), a);
        prop_assert_eq!(f.mul(f.pow(a, k), f.pow(a, -k)), Element::ONE);
    }

    #[test]
    fn spec_text_round_trips(which in 0..5usize) {
        let spec = presets::by_name(presets::NAMES[which]).unwrap();
        prop_assert_eq!(CodeSpec::parse(&spec.to_text()).unwrap(), spec);
    }
}

/// `S_6` obtained as `S_3^2` agrees with a separately built interpolant
/// for residue 6 on every correctable tuple.
#[test]
fn conjugate_closure_qr31() {
    let fx = fixture("qr31");
    let code = &fx.code;
    let s6 = build_representation(code, ArtifactKind::UnknownSyndrome { target: 6 }).unwrap();
    let s3 = fx.one_step.syndrome(3).unwrap();
    let f = code.field();
    for p in code.correctable_patterns() {
        let known = code.syndrome_tuple(&p).0;
        let via_frobenius = f.pow(s3.evaluate(&known, f).unwrap(), 2);
        assert_eq!(s6.evaluate(&known, f).unwrap(), via_frobenius, "{p}");
    }
}

#[test]
fn weight_one_pattern_has_zero_second_coefficient() {
    let fx = fixture("rs15");
    let f = fx.code.field();
    let p = ErrorPattern::new(vec![(4, f.alpha_pow(3))], &fx.code).unwrap();
    let known = fx.code.syndrome_tuple(&p).0;
    let sigma2 = fx.gelp.locator_coefficient(2).unwrap();
    assert_eq!(sigma2.evaluate(&known, f).unwrap(), Element::ZERO);
}
