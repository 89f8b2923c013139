//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; the process exits non-zero
//! if any criterion fails or overruns its time budget.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use z2z4::decode::Method;
use z2z4::presets;
use z2z4::*;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: std::result::Result<T, E>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn golden_example3() -> Outcome {
    let code = presets::example3_code();
    let pd = presets::example3_pd_set();
    let x = ok(encode(&bv("0101"), &code))?;
    ensure!(x == bv("01010101"), "encode(0101) = {}", x);

    let y = bv("01010100");
    let s = ok(syndrome(&code, &y))?;
    ensure!(s.quats() == [2, 3] && lee_weight(&s) == 3, "syndrome of y = {} (Lee {})", s, lee_weight(&s));
    let ty = ok(presets::theta().apply(&y))?;
    ensure!(ty == bv("00010101"), "ϑ(y) = {}", ty);
    let s = ok(syndrome(&code, &ty))?;
    ensure!(s.quats() == [3, 0] && lee_weight(&s) == 1, "syndrome of ϑ(y) = {} (Lee {})", s, lee_weight(&s));

    for method in [Method::Alternative, Method::Syndrome] {
        let out = ok(decode::decode(&code, &pd, &y, method))?;
        let d = out.decoded().ok_or_else(|| format!("{:?} decoder failed", method))?;
        ensure!(d.codeword == x && d.info == bv("0101"), "{:?} decoder returned {} / {}", method, d.codeword, d.info);
    }
    Ok("encode, both syndromes, both decoders".into())
}

fn golden_example4() -> Outcome {
    let code = presets::example4_code();
    let ct = code.code_type();
    ensure!(ct.to_string() == "(0,8;1,2;0)", "type {}", ct);
    ensure!(code.info_set().positions() == [11, 13, 14, 15, 16], "J = {}", code.info_set());

    let a = bv("11111");
    let e = ok(eta(&a, code.standard_form()))?;
    ensure!(e == bv("1"), "η(11111) = {}", e);
    let x = ok(encode(&a, &code))?;
    ensure!(x == bv("1111111111111111"), "f(11111) = {}", x);
    let f = ok(encode(&bv("10100"), &code))?;
    ensure!(f == bv("0100101110110100"), "f(10100) = {}", f);

    let info = code.info_set();
    let reencode = |v: &BinaryVector| -> std::result::Result<usize, String> {
        Ok((v + &ok(encode(&ok(restrict(v, &info))?, &code))?).weight())
    };
    let y = bv("1111111111110100");
    ensure!(reencode(&y)? == 5, "wt(y + f(y_I)) = {}", reencode(&y)?);
    let [t1, ..] = presets::example4_thetas();
    let z = ok(t1.apply(&y))?;
    ensure!(reencode(&z)? == 3, "wt(z + f(z_I)) = {} for z = {}", reencode(&z)?, z);

    let out = ok(decode_alternative(&code, &presets::example4_pd_set(), &y))?;
    let d = out.decoded().ok_or("decoder failed")?;
    ensure!(d.codeword == x && d.perm == t1, "decoded {} via {}", d.codeword, d.perm);
    Ok("type, J, η, two encodings, re-encoding weights, decode via ϑ1".into())
}

fn systematic_encoding() -> Outcome {
    let mut total = 0;
    for code in [presets::example3_code(), presets::example4_code(), presets::mixed_code()] {
        let info = code.info_set();
        let k = code.dimension();
        let mut images = BTreeSet::new();
        for v in 0..1u64 << k {
            let a = BinaryVector::from_u64(v, k);
            let x = ok(encode(&a, &code))?;
            ensure!(ok(restrict(&x, &info))? == a, "{}: restrict(encode({})) != a", code.code_type(), a);
            images.insert(x.bits().to_vec());
        }
        ensure!(images == binary_image(&code), "{}: encodings are not exactly the code", code.code_type());
        total += 1usize << k;
    }
    Ok(format!("{} information vectors, bijective on 3 codes", total))
}

fn info_set_biconditional() -> Outcome {
    let mut checked = 0;
    for code in [presets::example3_code(), presets::example4_code()] {
        let n = code.length();
        let t = ok(code.error_capability())?;
        let j = code.info_set();
        for x in binary_image(&code) {
            for support in small_supports(n, t) {
                let y = to_bv(&with_flips(&x, &support));
                let clean = support.iter().all(|&i| !j.contains(i + 1));
                let claimed = ok(info_correct(&code, &y))?;
                ensure!(
                    claimed == clean,
                    "{}: info_correct = {} for error support {:?}",
                    code.code_type(),
                    claimed,
                    support
                );
                checked += 1;
            }
        }
    }
    Ok(format!("{} (codeword, error) pairs", checked))
}

fn pd_set_certification() -> Outcome {
    let c3 = presets::example3_code();
    let c4 = presets::example4_code();
    ensure!(ok(is_automorphism(&presets::theta(), &c3))?, "ϑ is not an automorphism");
    for (i, th) in presets::example4_thetas().iter().enumerate() {
        ensure!(ok(is_automorphism(th, &c4))?, "ϑ{} is not an automorphism", i + 1);
    }
    let mut sizes = Vec::new();
    for (code, pd) in [(&c3, presets::example3_pd_set()), (&c4, presets::example4_pd_set())] {
        ensure!(verify_pd_set(&pd).is_certified(), "{}: PD-set rejected", code.code_type());
        for p in pd.perms() {
            ensure!(ok(is_automorphism(p, code))?, "{} is not an automorphism", p);
        }
        // independent double loop: each small error has a permutation clearing J
        let t = pd.radius();
        for support in small_supports(code.length(), t) {
            let covered =
                pd.perms().iter().any(|p| support.iter().all(|&i| !pd.info_set().contains(p.image_of(i + 1))));
            ensure!(covered, "{}: error {:?} uncovered", code.code_type(), support);
        }
        sizes.push(pd.len());
    }
    Ok(format!("PD-sets of size {} and {}", sizes[0], sizes[1]))
}

fn full_decoding() -> Outcome {
    let mut checked = 0;
    for (code, pd) in
        [(presets::example3_code(), presets::example3_pd_set()), (presets::example4_code(), presets::example4_pd_set())]
    {
        let n = code.length();
        let t = ok(code.error_capability())?;
        let image = binary_image(&code);
        let compare_syndrome = code.code_type().to_string() == "(0,4;0,2;0)";
        for x in &image {
            for support in small_supports(n, t) {
                let y = with_flips(x, &support);
                let near = nearest(&image, &y);
                ensure!(near == vec![x.clone()], "oracle: {:?} is not uniquely nearest", support);
                let yv = to_bv(&y);
                let alt = ok(decode_alternative(&code, &pd, &yv))?;
                let got = alt.decoded().map(|d| d.codeword.bits().to_vec());
                ensure!(got.as_ref() == Some(x), "{}: error {:?} decoded to {:?}", code.code_type(), support, got);
                if compare_syndrome {
                    let syn = ok(decode_syndrome(&code, &pd, &yv))?;
                    ensure!(syn == alt, "decoders disagree on error {:?}", support);
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{} corruptions decoded, syndrome decoder agrees on Example 3", checked))
}

fn random_valid_type(rng: &mut ChaCha8Rng) -> CodeType {
    loop {
        let alpha = rng.gen_range(0..12);
        let beta = rng.gen_range(0..12);
        let gamma = rng.gen_range(0..12);
        let delta = rng.gen_range(0..12);
        let kappa = rng.gen_range(0..12);
        if let Ok(ct) = CodeType::new(alpha, beta, gamma, delta, kappa) {
            return ct;
        }
    }
}

fn algebraic_suite() -> Outcome {
    // Gray isometry
    let mut pairs = 0;
    for alpha in 0..=2usize {
        for beta in 0..=3usize {
            let all: Vec<MixedVector> = (0..(1usize << alpha) * 4usize.pow(beta as u32))
                .map(|mut v| {
                    let bits: Vec<u8> = (0..alpha)
                        .map(|_| {
                            let b = (v % 2) as u8;
                            v /= 2;
                            b
                        })
                        .collect();
                    let quats: Vec<u8> = (0..beta)
                        .map(|_| {
                            let q = (v % 4) as u8;
                            v /= 4;
                            q
                        })
                        .collect();
                    MixedVector::new(bits, quats).unwrap()
                })
                .collect();
            for u in &all {
                for v in &all {
                    let lee: usize = u.bits().iter().zip(v.bits()).filter(|(a, b)| a != b).count()
                        + u.quats().iter().zip(v.quats()).map(|(&a, &b)| lee((a + 4 - b) % 4)).sum::<usize>();
                    let ham = weight(&xor(&gray_bits(u.bits(), u.quats()), &gray_bits(v.bits(), v.quats())));
                    ensure!(
                        ok(lee_distance(u, v))? == lee
                            && ok(hamming_distance(&gray(u), &gray(v)))? == ham
                            && lee == ham,
                        "isometry fails at {} / {}",
                        u,
                        v
                    );
                    pairs += 1;
                }
            }
        }
    }

    // dual orthogonality, idempotence, linearity
    let codes = test_codes();
    let mut linear = 0;
    for (name, code) in &codes {
        for (b, q) in mixed_codewords(code) {
            for h in code.parity_rows() {
                ensure!(mixed_inner(&b, &q, h.bits(), h.quats()) == 0, "{}: parity row {} not orthogonal", name, h);
            }
        }
        let sf = code.standard_form();
        let again = ok(standard_form(sf.rows()))?;
        ensure!(again.rows() == sf.rows() && again.col_perm().is_identity(), "{}: standard form not idempotent", name);
        let oracle = is_closed_under_xor(&binary_image(code));
        ensure!(
            code.is_binary_linear() == oracle,
            "{}: linearity {} vs closure {}",
            name,
            code.is_binary_linear(),
            oracle
        );
        linear += usize::from(oracle);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        let ct = random_valid_type(&mut rng);
        let d = dual_type(ct);
        ensure!(d.is_valid() && dual_type(d) == ct, "dual type involution fails at {}", ct);
    }
    for _ in 0..200 {
        let code = random_code(&mut rng, 3, 4, 4);
        let sf = code.standard_form();
        let again = ok(standard_form(sf.rows()))?;
        ensure!(again.rows() == sf.rows() && again.col_perm().is_identity(), "random standard form not idempotent");
    }
    Ok(format!(
        "{} isometry pairs, {} codes ({} linear), 1000 dual types, 200 random standard forms",
        pairs,
        codes.len(),
        linear
    ))
}

fn syndrome_counterexample() -> Outcome {
    let code = presets::nonlinear_code();
    let ct = code.code_type();
    ensure!(ct.gamma > ct.kappa, "constructed code has γ = κ");
    ensure!(!is_closed_under_xor(&binary_image(&code)), "constructed code is linear by the closure oracle");
    let t = ok(code.error_capability())?;
    let e = ok(find_syndrome_counterexample(&code))?.ok_or("no witness on the nonlinear code")?;
    let j = code.info_set();
    let s = ok(syndrome(&code, &e))?;
    ensure!(e.weight() <= t, "witness weight {} > t", e.weight());
    ensure!(e.support().iter().all(|&i| !j.contains(i)), "witness {} meets J", e);
    ensure!(lee_weight(&s) > t, "witness syndrome Lee weight {} <= t", lee_weight(&s));
    let none = ok(find_syndrome_counterexample(&presets::example3_code()))?;
    ensure!(none.is_none(), "Example 3 produced a witness");
    Ok(format!("{} code: e = {}, Lee syndrome weight {} > t = {}; none on Example 3", ct, e, lee_weight(&s), t))
}

fn simulator() -> Outcome {
    let code = presets::example4_code();
    let pd = presets::example4_pd_set();
    let t = ok(code.error_capability())?;
    let trials = 10_000u64;

    let a = ok(simulate(&code, &pd, ErrorModel::Flip { p: 0.1 }, 2000, 99))?;
    let b = ok(simulate(&code, &pd, ErrorModel::Flip { p: 0.1 }, 2000, 99))?;
    let (ja, jb) = (ok(serde_json::to_string(&a))?, ok(serde_json::to_string(&b))?);
    ensure!(ja == jb && a.to_string() == b.to_string(), "same seed, different reports");

    let at_t = ok(simulate(&code, &pd, ErrorModel::Weight { weight: t }, trials, 7))?;
    ensure!(at_t.successes == trials, "weight t: {} of {} succeeded", at_t.successes, trials);

    // exact success fraction at weight t+1 over every codeword and pattern
    let image = binary_image(&code);
    let mut wins = 0u64;
    let mut total = 0u64;
    for x in &image {
        for support in small_supports(code.length(), t + 1).into_iter().filter(|s| s.len() == t + 1) {
            let y = to_bv(&with_flips(x, &support));
            if let Some(d) = ok(decode_alternative(&code, &pd, &y))?.decoded() {
                wins += u64::from(d.codeword.bits() == &x[..]);
            }
            total += 1;
        }
    }
    let exact = wins as f64 / total as f64;
    let over = ok(simulate(&code, &pd, ErrorModel::Weight { weight: t + 1 }, trials, 7))?;
    let sigma = (exact * (1.0 - exact) / trials as f64).sqrt();
    let diff = (over.success_rate() - exact).abs();
    let within = diff <= 3.0 * sigma;
    ensure!(within, "weight t+1: simulated {} vs exact {} (3σ = {})", over.success_rate(), exact, 3.0 * sigma);
    Ok(format!(
        "reproducible; weight {} → {}/{}; weight {} → {:.4} vs exact {:.4} over {} cases",
        t,
        at_t.successes,
        trials,
        t + 1,
        over.success_rate(),
        exact,
        total
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("golden Example 3", 1, golden_example3),
        ("golden Example 4", 1, golden_example4),
        ("systematic encoding", 1, systematic_encoding),
        ("info-set biconditional", 30, info_set_biconditional),
        ("PD-set certification", 60, pd_set_certification),
        ("full decoding", 60, full_decoding),
        ("algebraic suite", 60, algebraic_suite),
        ("syndrome counterexample", 60, syndrome_counterexample),
        ("simulator", 60, simulator),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(*budget);
        match (&result, over) {
            (Ok(detail), false) => println!("PASS {} {} ({:.2?}): {}", i + 1, name, elapsed, detail),
            (Ok(_), true) => {
                failed += 1;
                println!("FAIL {} {} ({:.2?}): over the {} s budget", i + 1, name, elapsed, budget);
            }
            (Err(why), _) => {
                failed += 1;
                println!("FAIL {} {} ({:.2?}): {}", i + 1, name, elapsed, why);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
