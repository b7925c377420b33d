//! Checks the two closed forms for the (k+1)-minors that involve the projective
//! column, on one small code, by direct elimination.

use itertools::Itertools;

use deephole::matrix::vandermonde_det;
use deephole::polynomial::expand_shifted_power;
use deephole::{FieldElement, GprsCode};

fn main() -> deephole::Result<()> {
    let code = GprsCode::parse("q=7;exclude=2,6;k=3")?;
    let f = code.field();
    let k = code.k();
    let last = code.length() - 1;
    let pts = code.points();

    let deg_k: Vec<FieldElement> = pts
        .iter()
        .map(|y| y.powu(k as u64))
        .chain([f.zero()])
        .collect();
    let g_bar = code.generator().stack_row(&deg_k)?;

    let a = code.excluded()[0];
    let fj = expand_shifted_power(f, a, f.order() as usize - 2)?;
    let shifted: Vec<FieldElement> = pts
        .iter()
        .map(|&y| (y - a).inv())
        .chain([Ok(fj.coefficient(k - 1))])
        .collect::<deephole::Result<_>>()?;
    let g_hat = code.generator().stack_row(&shifted)?;

    println!("subset      det(deg k)  -sum*V   det(shifted)  formula");
    for cols in (0..pts.len()).combinations(k) {
        let ys: Vec<FieldElement> = cols.iter().map(|&c| pts[c]).collect();
        let v = vandermonde_det(&ys)?;
        let mut idx = cols.clone();
        idx.push(last);
        let sum: FieldElement = ys.iter().copied().sum();
        let prod: FieldElement = ys.iter().map(|&y| a - y).product();
        let lhs1 = g_bar.select_columns(&idx).determinant()?;
        let lhs2 = g_hat.select_columns(&idx).determinant()?;
        let rhs2 = (fj.coefficient(k - 1) + prod.inv()?) * v;
        println!(
            "{:<11} {:>10} {:>8} {:>14} {:>8}",
            ys.iter().map(|y| y.value()).join(","),
            lhs1,
            -(sum * v),
            lhs2,
            rhs2
        );
        assert_eq!(lhs1, -(sum * v));
        assert_eq!(lhs2, rhs2);
    }
    Ok(())
}
