//! Error distances by enumeration and by information sets, and the exact
//! covering radius from a breadth-first search over all words.

use deephole::{Budget, DistanceStrategy, GprsCode, Mode, Polynomial};

fn main() -> deephole::Result<()> {
    let b = Budget::default();
    let code = GprsCode::parse("q=5;exclude=0,4;k=2")?;
    let x2 = code.word_from_poly(&Polynomial::parse(code.field(), "0,0,1")?)?;
    println!("x^2 on {:?} -> {x2}", code.points());
    for s in [
        DistanceStrategy::Exhaustive,
        DistanceStrategy::InformationSet,
    ] {
        println!("  {s:?}: d = {}", code.error_distance_with(&x2, s, &b)?);
    }

    let labels = code.all_error_distances(&b)?;
    let mut histogram = [0usize; 8];
    for &d in &labels {
        histogram[d as usize] += 1;
    }
    println!(
        "{} words, distance histogram {:?}, covering radius {} (formula {})",
        labels.len(),
        &histogram[..=code.covering_radius(Mode::Formula, &b)?],
        code.covering_radius(Mode::BruteForce, &b)?,
        code.covering_radius(Mode::Formula, &b)?
    );

    // Past the enumeration budget the information-set route still gives exact answers.
    let big = GprsCode::parse("q=11;exclude=0;k=8")?;
    let u = big.word_from_poly(&Polynomial::parse(big.field(), "1,2,3,4,5,6,7,8,9,10")?)?;
    println!(
        "{}: d(u) = {}",
        big.spec(),
        big.error_distance_information_set(&u)?
    );
    Ok(())
}
