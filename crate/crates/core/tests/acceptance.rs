//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the summary is always printed.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{code, random_braid, rng, seifert_alexander, Poly};
use flatbasket::basket::{decode, trace_components};
use flatbasket::braid::{closure_component_count, to_tw_form, BraidWord};
use flatbasket::coder::{build_c1, encode, encode_braid, label_letters};
use flatbasket::enumerate::{
    canonicalize, classify, dihedral_orbit, search_min_code, Budget, CodeIter, CodeSpace,
};
use flatbasket::invariants::{fingerprint, seifert_matrix, Invariants, LaurentPolynomial};
use num_bigint::BigInt;

type Check = fn() -> Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn ac1() -> Result<String, String> {
    let w = BraidWord::from_signed(4, &[-2, -1, -2, -3, 1, -2, 3, -2]).unwrap();
    let start = Instant::now();
    let labels = label_letters(&w);
    let c1 = build_c1(&w, &labels);
    let enc = encode_braid(&BraidWord::descending_twist(4).unwrap().concat(&w).unwrap(), true);
    let elapsed = start.elapsed();
    ensure(labels.labels() == [3, 1, 4, 7, 2, 5, 8, 6], || format!("labels {:?}", labels.labels()))?;
    ensure(c1.word() == [1, 2, 3, 1, 4, 2, 5, 6, 3, 4, 7, 5, 8, 6, 7, 8], || format!("C1 {:?}", c1.word()))?;
    let expected = [1, 2, 3, 1, 4, 10, 9, 2, 10, 9, 5, 6, 3, 4, 7, 5, 8, 6, 7, 12, 11, 8, 12, 11];
    ensure(enc.code.word() == expected, || format!("code {}", enc.code))?;
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!("24-letter code reproduced in {elapsed:?}"))
}

fn ac2() -> Result<String, String> {
    let mut r = rng(2);
    let braids: Vec<BraidWord> = (0..200).map(|_| random_braid(&mut r, 5, 12)).collect();
    let start = Instant::now();
    for b in &braids {
        let w = to_tw_form(b, true);
        let (m, s) = (w.len(), w.positive_count());
        let code = encode(b, true);
        ensure(code.len() == 2 * (m + 2 * s), || format!("braid {b}: length {} vs m={m} s={s}", code.len()))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("200 braids in {elapsed:?}"))
}

/// Signature of a symmetric 2x2 integer matrix.
fn signature_2x2(m: [[i64; 2]; 2]) -> i64 {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let trace = m[0][0] + m[1][1];
    match det.signum() {
        -1 => 0,
        1 => 2 * trace.signum(),
        _ => trace.signum(),
    }
}

fn genus_one_oracle(v: [[i64; 2]; 2]) -> (Vec<i128>, i128, i64) {
    let rows: Vec<Vec<i64>> = v.iter().map(|r| r.to_vec()).collect();
    let delta = seifert_alexander(&rows);
    let det = delta.eval(-1).abs();
    let sym = [[2 * v[0][0], v[0][1] + v[1][0]], [v[0][1] + v[1][0], 2 * v[1][1]]];
    (delta.normal_coeffs(), det, signature_2x2(sym))
}

fn as_coeffs(p: &LaurentPolynomial) -> Vec<i128> {
    let mut out = Poly::default();
    if let (Some(lo), Some(hi)) = (p.low_exponent(), p.high_exponent()) {
        for e in lo..=hi {
            out = out.add(&Poly::term(p.coeff(e).try_into().unwrap(), e));
        }
    }
    out.normal_coeffs()
}

fn ac3() -> Result<String, String> {
    let cases = [
        ("trefoil", [1, 2, 3, 4, 1, 2, 3, 4], [[-1, 1], [0, -1]], true),
        ("figure-eight", [1, 2, 4, 3, 1, 2, 4, 3], [[-1, 1], [0, 1]], false),
    ];
    let mut notes = Vec::new();
    for (name, word, oracle, abs_sig) in cases {
        let (delta, det, sig) = genus_one_oracle(oracle);
        let inv = Invariants::of(&code(&word));
        ensure(inv.components == 1, || format!("{name}: {} components", inv.components))?;
        ensure(as_coeffs(&inv.alexander) == delta, || format!("{name}: alexander {}", inv.alexander))?;
        ensure(inv.determinant == BigInt::from(det), || format!("{name}: det {}", inv.determinant))?;
        let got = if abs_sig { inv.signature.abs() } else { inv.signature };
        let want = if abs_sig { sig.abs() } else { sig };
        ensure(got == want, || format!("{name}: signature {}", inv.signature))?;
        notes.push(format!("{name} det {det}"));
    }
    Ok(notes.join(", "))
}

fn ac4() -> Result<String, String> {
    let start = Instant::now();
    let mut total = 0u64;
    for n in 0..=5 {
        for c in CodeIter::in_space(CodeSpace::Labelled, n) {
            let k = trace_components(&c).count;
            ensure(k % 2 == (n + 1) % 2, || format!("{c}: {k} components"))?;
            total += 1;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!("{total} codes in {elapsed:?}"))
}

fn ac5() -> Result<String, String> {
    let start = Instant::now();
    let budget = Budget::default();
    for n in 0..=2 {
        for e in classify(n, &budget, 1).unwrap() {
            let f = &e.fingerprint;
            ensure((1..=3).contains(&f.components), || format!("{}: {f}", e.code))?;
            ensure(f.alexander.is_zero() || f.alexander == LaurentPolynomial::one(), || format!("{}: {f}", e.code))?;
            ensure(f.linking.iter().all(|&v| v == 0), || format!("{}: {f}", e.code))?;
        }
    }
    let three = classify(3, &budget, 1).unwrap();
    let hopf: Vec<_> = three.iter().filter(|e| e.fingerprint.components == 2 && e.fingerprint.linking == [1]).collect();
    ensure(hopf.len() == 1, || format!("{} Hopf classes", hopf.len()))?;
    for e in &three {
        let f = &e.fingerprint;
        if f.linking != [1] {
            ensure(f.linking.iter().all(|&v| v == 0) && matches!(f.components, 2 | 4), || format!("{}: {f}", e.code))?;
        }
    }
    let four = classify(4, &budget, 1).unwrap();
    ensure(four.iter().all(|e| e.fingerprint.components % 2 == 1), || "even component count at n = 4".into())?;
    let from_braid = encode(&BraidWord::from_signed(2, &[1, 1]).unwrap(), true);
    ensure(from_braid.word() == [1, 3, 2, 1, 3, 2], || format!("encode gave {from_braid}"))?;
    let f = fingerprint(&from_braid);
    ensure(f == hopf[0].fingerprint, || format!("encoded Hopf fingerprint {f}"))?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!("{} / {} / {} classes at n = 2 / 3 / 4, Hopf class {}", classify(2, &budget, 1).unwrap().len(), three.len(), four.len(), hopf[0].code))
}

fn ac6() -> Result<String, String> {
    let mut r = rng(6);
    let start = Instant::now();
    for _ in 0..200 {
        let b = random_braid(&mut r, 5, 12);
        let tw = BraidWord::descending_twist(b.strands()).unwrap().concat(&to_tw_form(&b, true)).unwrap();
        let expected = closure_component_count(&tw);
        let got = trace_components(&encode(&b, true)).count;
        ensure(expected == got, || format!("braid {b}: closure {expected}, basket {got}"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!("200 braids in {elapsed:?}"))
}

fn ac7() -> Result<String, String> {
    let start = Instant::now();
    let s41 = code(&[1, 2, 3, 4, 5, 1, 4, 5, 2, 3]);
    let link = decode(&s41);
    ensure(link.component_count() == 2, || format!("{} components", link.component_count()))?;
    let f = fingerprint(&s41);
    ensure(f.linking == [2], || format!("lk {:?}", f.linking))?;
    let budget = Budget::default();
    let none = search_min_code(&f, 4, CodeSpace::Labelled, &budget, 1).unwrap();
    ensure(none.is_none(), || format!("unexpected hit {}", none.as_ref().unwrap().code))?;
    let hit = search_min_code(&f, 5, CodeSpace::Labelled, &budget, 1).unwrap().ok_or("no hit at n = 5")?;
    ensure(hit.code.bands() == 5 && fingerprint(&hit.code) == f, || format!("hit {}", hit.code))?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(300))?;
    Ok(format!("first 5-band match {} in {elapsed:?}", hit.code))
}

fn interleave(a: (usize, usize), b: (usize, usize)) -> bool {
    (a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1)
}

fn ac8() -> Result<String, String> {
    let start = Instant::now();
    let mut seifert_checked = 0u64;
    for n in 0..=5 {
        for c in CodeIter::in_space(CodeSpace::Labelled, n) {
            let v = seifert_matrix(&c);
            let chords = c.chord_positions();
            for i in 0..n {
                ensure(v.get(i, i) == 0, || format!("{c}: diagonal"))?;
                for j in i + 1..n {
                    let (a, b) = (v.get(i, j), v.get(j, i));
                    let ok = if interleave(chords[i], chords[j]) { (a - b).abs() == 1 && a * b == 0 } else { a == 0 && b == 0 };
                    ensure(ok, || format!("{c}: entries ({i},{j}) = {a}, {b}"))?;
                }
            }
            seifert_checked += 1;
        }
    }
    let mut orbits = 0u64;
    for n in 0..=4 {
        for c in CodeIter::in_space(CodeSpace::Labelled, n) {
            let k = canonicalize(&c);
            ensure(canonicalize(k.code()) == k, || format!("{c}: not idempotent"))?;
            for o in dihedral_orbit(&c) {
                ensure(canonicalize(&o) == k, || format!("{c}: orbit member {o} differs"))?;
            }
            orbits += 1;
        }
    }
    let budget = Budget::default();
    for n in 0..=5 {
        let reference = serde_json::to_string(&classify(n, &budget, 1).unwrap()).unwrap();
        for jobs in [2, 4, 8] {
            let other = serde_json::to_string(&classify(n, &budget, jobs).unwrap()).unwrap();
            ensure(other == reference, || format!("n = {n}: jobs {jobs} output differs"))?;
        }
    }
    Ok(format!("{seifert_checked} matrices, {orbits} orbits, jobs 1/2/4/8 identical, {:?}", start.elapsed()))
}

fn main() {
    let criteria: [(&str, Check); 8] = [
        ("AC-1 worked example pipeline", ac1),
        ("AC-2 band count", ac2),
        ("AC-3 known-code invariants", ac3),
        ("AC-4 component parity", ac4),
        ("AC-5 small classification", ac5),
        ("AC-6 braid and basket components", ac6),
        ("AC-7 S(4,1) minimality", ac7),
        ("AC-8 property suites", ac8),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(note) => println!("PASS {name}: {note}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
