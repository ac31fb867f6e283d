//! Regenerates the row-maxima golden table from the exhaustive histograms.
//!
//! Usage: cargo run -p bsd-stern-oracle --example row_maxima_table
//!
//! Columns: width, max count, Fibonacci index of the max, whether the
//! maximizer set is closed under n -> 2^width - n, then the maximizers.

use bsd_stern::fib;
use bsd_stern_oracle::brute_maxima;

fn main() {
    println!("# width max fib_index flip_closed argmax...");
    for bits in 2..=14u32 {
        let maxima = brute_maxima(bits).expect("within the default limit");

        // locate the max in the Fibonacci sequence
        let mut fib_index = 0;
        while fib(fib_index) < maxima.max {
            fib_index += 1;
        }
        assert_eq!(
            fib(fib_index),
            maxima.max,
            "max at width {bits} is not a Fibonacci number"
        );

        // observation, not an assumption: is the argmax set flip-symmetric?
        let flip_closed = maxima.argmax.iter().all(|&n| {
            let mirrored = (1u64 << bits) - n;
            mirrored >= (1u64 << bits) || maxima.argmax.contains(&mirrored)
        });

        let argmax: Vec<String> = maxima.argmax.iter().map(|n| n.to_string()).collect();
        println!(
            "{} {} {} {} {}",
            bits,
            maxima.max,
            fib_index,
            flip_closed,
            argmax.join(" ")
        );
    }
}
