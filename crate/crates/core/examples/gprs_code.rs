//! Build GPRS_5({0,1,2}, 2), print its generator and encode a message.

use deephole::codes::generator_is_mds;
use deephole::{Budget, FiniteField, GprsCode, Mode, Polynomial};

fn main() -> deephole::Result<()> {
    let f5 = FiniteField::prime(5)?;
    let code = GprsCode::new(f5, &[f5.from_int(3), f5.from_int(4)], 2)?;
    println!("{}", code.spec());
    println!("D = {:?}, length {}", code.points(), code.length());
    println!("generator:\n{}", code.generator());

    let b = Budget::default();
    println!(
        "d = {} (brute force {}), covering radius = {}",
        code.minimum_distance(Mode::Formula, &b)?,
        code.minimum_distance(Mode::BruteForce, &b)?,
        code.covering_radius(Mode::Formula, &b)?
    );
    println!("generator is MDS: {}", generator_is_mds(&code)?);

    let msg = Polynomial::parse(f5, "3,4")?;
    let cw = code.encode(&msg)?;
    println!("encode({msg}) = {cw}, codeword: {}", code.is_codeword(&cw));

    let same = GprsCode::parse("q=5;exclude=3,4;k=2")?;
    assert_eq!(same, code);
    Ok(())
}
