//! Arithmetic in GF(9) = F_3[x]/(x^2 + 1), with elements written as canonical
//! encodings c0 + 3*c1.

use deephole::FiniteField;

fn main() -> deephole::Result<()> {
    let f9 = FiniteField::parse("3^2", None)?;
    println!("{f9}, modulus coefficients {:?}", f9.modulus().unwrap());

    let one_plus_x = f9.from_coeffs(&[1, 1])?;
    let sq = one_plus_x * one_plus_x;
    println!("(1 + x)^2 = {sq} with coefficients {:?}", sq.coeffs());
    println!("(1 + x)^-1 = {}", one_plus_x.inv()?);

    let g = f9.primitive_element();
    println!(
        "primitive element {g} of order {:?}",
        g.multiplicative_order()
    );
    let powers: Vec<String> = (0..8).map(|i| g.powu(i).to_string()).collect();
    println!("powers: {}", powers.join(" "));

    // Same field with another modulus: x^2 + x + 2.
    let other = FiniteField::new(3, 2, Some(&[2, 1, 1]))?;
    println!(
        "alternative modulus gives primitive element {}",
        other.primitive_element()
    );
    Ok(())
}
