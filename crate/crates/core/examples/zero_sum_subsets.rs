//! Zero-sum subsets of F_q^* and the binomial valuations behind the shifted family.

use deephole::deepholes::{binom_mod_p, vp_binomial, zero_sum_subset};
use deephole::FiniteField;

fn main() -> deephole::Result<()> {
    for q in [7u64, 9, 25] {
        let f = FiniteField::with_order(q)?;
        for k in [2, 3, 4, 5] {
            if k + 3 > q as usize {
                continue;
            }
            let s = zero_sum_subset(f, k)?;
            let enc: Vec<u32> = s.iter().map(|e| e.value()).collect();
            println!("GF({q}), k = {k}: {enc:?}");
        }
    }

    let q = 27u64;
    let f = FiniteField::with_order(q)?;
    println!("t, v_3(C(25, t-1)), C(25, t-1) mod 3");
    for t in 2..q {
        println!(
            "{t:>2} {} {}",
            vp_binomial(q, t)?,
            binom_mod_p(q - 2, t - 1, f)?
        );
    }
    Ok(())
}
