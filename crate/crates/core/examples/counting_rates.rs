//! Exact family sizes from small automata, up to length 80, and how fast
//! the count-based rates approach the characteristic roots.

use zecap::capacity::{empirical_rates, solve_characteristic, CharacteristicEquation, DEFAULT_TOL};
use zecap::construct::Family;

fn main() -> zecap::Result<()> {
    let cases = [
        (Family::MinistringTribonacci, CharacteristicEquation::tribonacci()),
        (Family::OddRun, CharacteristicEquation::odd_runs()),
        (Family::NoIsolatedOnes, CharacteristicEquation::no_isolated_ones()),
        (Family::Fibonacci, CharacteristicEquation::golden()),
    ];
    for (family, eq) in cases {
        let counts = family.counts(80);
        let analytic = solve_characteristic(&eq, DEFAULT_TOL)?.rate_bits;
        let rates = empirical_rates(&counts[1..], 1)?;
        println!("{family}: a_80 = {}", counts[80]);
        for n in [8, 16, 32, 64, 80] {
            // ratio[i] compares lengths i+1 and i+2
            println!(
                "  n={n:<2} log2(a_n)/n={:.6}  log2(a_n/a_(n-1))={:.10}  analytic={analytic:.10}",
                rates.naive[n - 1],
                rates.ratio[n - 2]
            );
        }
    }
    let (b, c) = (Family::OddRunAny.counts(24), Family::OddRun.counts(24));
    for n in [10, 16, 24] {
        println!("|B_{n}| = {}, 3|C_{n}| = {}", b[n], 3 * c[n]);
    }
    Ok(())
}
