//! Acceptance suite: one test per release criterion, each printing a PASS
//! line with the numbers it checked. Everything is exact integer equality
//! except the timing checks, whose budgets are stated inline.
//!
//! Run with: cargo test -p bsd-stern-cli --test acceptance -- --nocapture

use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use bsd_stern::{
    ceil_log2, closed_form_pow_minus_1, closed_form_pow_plus_1, count_bsd, count_bsd_fast,
    count_hyper, count_hyper_bits, enumerate_bsd, fib, stern, stern_ratio, BsdWord, Count,
};
use bsd_stern_oracle::{brute_histogram, brute_hyper_histogram_with_limit, brute_maxima};

/// Width-i count of n equals the Stern value at 2^i - n, across every row
/// up to width 12.
#[test]
fn correspondence_sweep() {
    let mut checked = 0u64;
    for bits in 1u64..=12 {
        let top = 1i64 << bits;
        for n in 1..top {
            let mirror = BigUint::from((top - n) as u64);
            assert_eq!(
                count_bsd(&BigInt::from(n), bits),
                stern(&mirror),
                "n={n} bits={bits}"
            );
            checked += 1;
        }
    }
    println!("PASS correspondence_sweep: {checked} (n, width) pairs, exact");
}

/// Scan, fast path, and the exhaustive oracle agree on every value of every
/// row up to width 12, the histogram being computed once per width.
#[test]
fn oracle_equivalence_sweep() {
    let mut checked = 0u64;
    for bits in 1u32..=12 {
        let row = brute_histogram(bits).unwrap();
        let top = 1i64 << bits;
        for n in -top + 1..top {
            let expected = row.count(n);
            let n = BigInt::from(n);
            assert_eq!(count_bsd(&n, u64::from(bits)), expected, "scan {n} {bits}");
            assert_eq!(
                count_bsd_fast(&n, u64::from(bits)),
                expected,
                "fast {n} {bits}"
            );
            checked += 1;
        }
    }
    println!("PASS oracle_equivalence_sweep: {checked} values against brute force, exact");
}

/// The four closed forms hold exactly at every width up to 20.
#[test]
fn closed_forms() {
    for bits in 1u64..=20 {
        let all_ones = (BigInt::from(1) << bits) - 1;
        assert_eq!(count_bsd(&all_ones, bits), Count::from(1u32));
        assert_eq!(count_bsd(&BigInt::from(1), bits), Count::from(bits));
        let above_half = (BigInt::from(1) << (bits - 1)) + 1;
        assert_eq!(count_bsd(&above_half, bits), Count::from(bits - 1));
    }
    let mut checked = 0u64;
    for bits in 1u64..=20 {
        for k in 0..=bits {
            let near_pow = (BigInt::from(1) << k) - 1;
            assert_eq!(
                closed_form_pow_minus_1(k, bits).unwrap(),
                count_bsd(&near_pow, bits),
                "2^{k}-1 at width {bits}"
            );
            if k >= 1 {
                let above_pow = (BigInt::from(1) << (k - 1)) + 1;
                assert_eq!(
                    closed_form_pow_plus_1(k, bits).unwrap(),
                    count_bsd(&above_pow, bits),
                    "2^{}+1 at width {bits}",
                    k - 1
                );
            }
            checked += 2;
        }
    }
    println!("PASS closed_forms: widths 1..=20, {checked} closed-form evaluations, exact");
}

/// The counts form an arithmetic progression in the width: the full-width
/// scan equals the two-term shortcut on 500 random (n, width) pairs with
/// n below 2^64 and widths up to 10^4.
#[test]
fn arithmetic_progression_shortcut() {
    let mut rng = StdRng::seed_from_u64(0xA51C);
    for case in 0..500 {
        let n_raw: u64 = rng.gen_range(1..=u64::MAX);
        let n_bits = BigUint::from(n_raw).bits();
        let bits: u64 = rng.gen_range(n_bits..=10_000);
        let n = BigInt::from(n_raw);

        let full_scan = count_bsd(&n, bits);

        // normalize exactly the way the shortcut is defined: odd part, then
        // the progression at the odd part's bitlength
        let j = n_raw.trailing_zeros() as u64;
        let m = BigUint::from(n_raw >> j);
        let width = bits - j;
        let k = if m == BigUint::from(1u32) {
            0
        } else {
            ceil_log2(&m)
        };
        let mirror = (BigInt::from(1) << k) - BigInt::from(m.clone());
        let progression =
            count_bsd(&BigInt::from(m), k) + Count::from(width - k) * count_bsd(&mirror, k);

        assert_eq!(full_scan, progression, "case {case}: n={n_raw} bits={bits}");
        assert_eq!(full_scan, count_bsd_fast(&n, bits), "case {case}");
    }
    println!("PASS arithmetic_progression_shortcut: 500 random pairs, exact");
}

/// Hyperbinary counts equal the Stern sequence shifted by one, checked two
/// independent ways: against the width-17 mirror identity for every
/// n <= 2^16, and against exhaustive hyperbinary sweeps for widths <= 10.
#[test]
fn hyperbinary_counts() {
    for n in 0u64..=1 << 16 {
        let by_offset = stern(&BigUint::from(n + 1));
        assert_eq!(count_hyper(&BigUint::from(n)), by_offset, "h({n})");
        let mirror = (BigInt::from(1) << 17) - 1 - BigInt::from(n);
        assert_eq!(count_bsd(&mirror, 17), by_offset, "mirror of {n}");
    }

    let mut swept = 0u64;
    for bits in 0u32..=10 {
        let histogram = brute_hyper_histogram_with_limit(bits, 10).unwrap();
        for value in 0..=2 * ((1u64 << bits) - 1) {
            let brute = histogram.get(&value).unwrap();
            assert_eq!(
                &count_hyper_bits(&BigUint::from(value), u64::from(bits)),
                brute,
                "value {value} width {bits}"
            );
            let mirror = (BigInt::from(1) << bits) - 1 - BigInt::from(value);
            assert_eq!(&count_bsd(&mirror, u64::from(bits)), brute);
            swept += 1;
        }
    }
    println!("PASS hyperbinary_counts: offset identity to 2^16, {swept} brute-checked widths<=10 values, exact");
}

/// The digitwise translation sends every width-i word of value n to a word
/// of value 2^i - 1 - n and is an involution, over all 3^i words, i <= 10.
#[test]
fn translation_bijection() {
    let mut checked = 0u64;
    for bits in 0u32..=10 {
        let total = 3u64.pow(bits);
        for index in 0..total {
            let mut digits = Vec::with_capacity(bits as usize);
            let mut rest = index;
            for _ in 0..bits {
                digits.push((rest % 3) as i8 - 1);
                rest /= 3;
            }
            let word = BsdWord::new(digits).unwrap();
            let hyper = word.to_hyper();
            let mirror = (BigInt::from(1) << bits) - 1 - word.value();
            assert_eq!(BigInt::from(hyper.value()), mirror);
            assert_eq!(hyper.to_bsd(), word);
            checked += 1;
        }
    }
    println!("PASS translation_bijection: {checked} words, exact");
}

/// The first 10^5 Calkin-Wilf fractions are in lowest terms and pairwise
/// distinct.
#[test]
fn calkin_wilf_fractions() {
    let mut seen = HashSet::with_capacity(100_000);
    for r in 1u64..=100_000 {
        // the constructor rejects pairs with gcd != 1
        let fraction = stern_ratio(&BigUint::from(r)).unwrap();
        assert!(seen.insert(fraction), "duplicate fraction at r={r}");
    }
    println!("PASS calkin_wilf_fractions: 100000 fractions reduced and distinct");
}

/// Every row maximum up to width 14 is a Fibonacci number, the maximizer
/// set has exactly two elements from width 3 on, and the whole table
/// matches the recorded golden values (including the observed Fibonacci
/// index, which is width + 1, not width).
#[test]
fn row_maxima_against_golden() {
    let golden = include_str!("golden/maxima.txt");
    let mut widths_seen = Vec::new();
    for line in golden.lines().filter(|l| !l.starts_with('#')) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bits: u32 = fields[0].parse().unwrap();
        let max: u64 = fields[1].parse().unwrap();
        let fib_index: u64 = fields[2].parse().unwrap();
        let flip_closed: bool = fields[3].parse().unwrap();
        let argmax: Vec<u64> = fields[4..].iter().map(|f| f.parse().unwrap()).collect();

        let maxima = brute_maxima(bits).unwrap();
        assert_eq!(maxima.max, Count::from(max), "max at width {bits}");
        assert_eq!(maxima.argmax, argmax, "argmax at width {bits}");
        assert_eq!(
            fib(fib_index),
            maxima.max,
            "Fibonacci index at width {bits}"
        );
        assert_eq!(
            fib_index,
            u64::from(bits) + 1,
            "observed index is width + 1"
        );
        if bits >= 3 {
            assert_eq!(maxima.argmax.len(), 2, "two maximizers from width 3 on");
        }
        let recomputed_flip = maxima.argmax.iter().all(|&n| {
            let mirrored = (1u64 << bits) - n;
            mirrored >= (1u64 << bits) || maxima.argmax.contains(&mirrored)
        });
        assert_eq!(recomputed_flip, flip_closed, "flip closure at width {bits}");
        widths_seen.push(bits);
    }
    assert_eq!(widths_seen, (2..=14).collect::<Vec<_>>());
    println!("PASS row_maxima_against_golden: widths 2..=14 match the recorded table");
}

/// Runs the bsdstern binary, feeding `stdin_data` if given, and returns the
/// wall-clock time with the stdout text.
fn timed_cli(args: &[&str], stdin_data: Option<&str>) -> (Duration, String) {
    use std::io::Write;
    use std::process::{Command, Stdio};

    let started = Instant::now();
    let mut command = Command::new(env!("CARGO_BIN_EXE_bsdstern"));
    command.args(args).stdout(Stdio::piped());
    if stdin_data.is_some() {
        command.stdin(Stdio::piped());
    }
    let mut child = command.spawn().expect("binary spawns");
    if let Some(data) = stdin_data {
        let mut pipe = child.stdin.take().expect("stdin pipe");
        pipe.write_all(data.as_bytes()).expect("stdin write");
    }
    let output = child.wait_with_output().expect("binary runs");
    let elapsed = started.elapsed();
    assert!(output.status.success(), "args {args:?} failed");
    (elapsed, String::from_utf8(output.stdout).expect("utf8"))
}

/// `stern` finishes a 10^6-bit input within 5 seconds, `count --algo fast`
/// finishes width 10^6 within 5 seconds (both through the real binary), and
/// at width 10^5 the fast path beats the linear scan by at least 10x.
#[test]
fn scan_and_fast_path_performance() {
    let mut rng = StdRng::seed_from_u64(0xF1B0);

    // a) stern on a million-bit input, fed over stdin (argv caps at 128 KiB)
    let mut raw = vec![0u8; 125_000];
    rng.fill(raw.as_mut_slice());
    raw[0] |= 0x80; // pin the bitlength at exactly 10^6
    let million_bit = BigUint::from_bytes_be(&raw);
    assert_eq!(million_bit.bits(), 1_000_000);
    let hex_input = format!("0x{}", million_bit.to_str_radix(16));
    let (stern_time, printed) = timed_cli(&["stern", "-"], Some(&hex_input));
    assert_eq!(printed.trim_end(), stern(&million_bit).to_string());
    assert!(
        stern_time < Duration::from_secs(5),
        "stern on 10^6 bits took {stern_time:?}"
    );

    // b) fast count at width 10^6 for a modest value
    let n_raw = rng.gen_range(1u64..=u64::MAX) | 1;
    let n = BigInt::from(n_raw);
    let (fast_million_time, printed) = timed_cli(
        &[
            "count",
            &n_raw.to_string(),
            "--bits",
            "1000000",
            "--algo",
            "fast",
        ],
        None,
    );
    assert_eq!(
        printed.trim_end(),
        count_bsd_fast(&n, 1_000_000).to_string()
    );
    assert!(
        fast_million_time < Duration::from_secs(5),
        "fast count at width 10^6 took {fast_million_time:?}"
    );

    // c) scan vs fast separation at width 10^5 for the same value, measured
    // in-process (the fast path is microseconds, far below spawn noise)
    let width = 100_000u64;
    let started = Instant::now();
    let by_scan = count_bsd(&n, width);
    let scan_time = started.elapsed();

    let repetitions = 50;
    let started = Instant::now();
    let mut by_fast = Count::from(0u32);
    for _ in 0..repetitions {
        by_fast = count_bsd_fast(&n, width);
    }
    let fast_time = started.elapsed() / repetitions;

    assert_eq!(by_scan, by_fast);
    assert!(
        scan_time >= fast_time * 10,
        "expected >=10x separation, scan {scan_time:?} vs fast {fast_time:?}"
    );
    println!(
        "PASS scan_and_fast_path_performance: stern(10^6 bits) {stern_time:?}, \
         fast width 10^6 {fast_million_time:?}, separation {}x at width 10^5",
        (scan_time.as_nanos() / fast_time.as_nanos().max(1))
    );
}

/// 200 random enumerations with widths up to 20 and counts up to 10^4 are
/// duplicate-free, value-correct, and as long as the count says.
#[test]
fn enumeration_consistency() {
    let mut rng = StdRng::seed_from_u64(0xE11);
    let mut done = 0;
    while done < 200 {
        let bits: u32 = rng.gen_range(0..=20);
        let top = 1i64 << bits;
        let n = BigInt::from(rng.gen_range(-top + 1..top));
        let count = count_bsd(&n, u64::from(bits));
        if count > Count::from(10_000u32) {
            continue; // the criterion bounds the output size
        }
        let words = enumerate_bsd(&n, bits).unwrap();
        assert_eq!(Count::from(words.len() as u64), count, "n={n} bits={bits}");
        let distinct: HashSet<&BsdWord> = words.iter().collect();
        assert_eq!(
            distinct.len(),
            words.len(),
            "duplicates at n={n} bits={bits}"
        );
        for w in &words {
            assert_eq!(w.value(), n, "bits={bits}");
            assert_eq!(w.bits(), bits as usize);
        }
        done += 1;
    }
    println!("PASS enumeration_consistency: 200 random enumerations, exact");
}
