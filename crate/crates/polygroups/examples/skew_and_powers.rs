//! Skew elements, hat elements and n-ary powers.

use polygroups::hosszu::canonical_f_a;
use polygroups::polyadic::skew_power_exponent;
use polygroups::Config;

fn main() {
    let cfg = Config::default();

    // 43-ary group on Z5: x1 + .. + x43 + 1 (mod 5)
    let g = canonical_f_a(5, 43, 1, &cfg).unwrap();

    for x in 0..5 {
        println!("x={x} skew={} hat={}", g.skew_of(x), g.hat_of(x));
    }

    // the m-fold skew is the <S_m>-th n-ary power
    for m in 1..=5u32 {
        let exp = skew_power_exponent(43, m);
        let ok = (0..5).all(|x| g.iterated_skew(x, m as usize) == g.nary_power(x, exp));
        println!("m={m}: exponent {exp}, matches iterated skew: {ok}");
    }

    // large exponents reduce modulo the order of the translation
    println!("2^<10^12> = {}", g.nary_power(2, 1_000_000_000_000));
}
