//! The four deep-hole tests side by side on both word families.

use deephole::deepholes::{
    build_family_word, is_deep_hole_mds_extension, is_deep_hole_oracle, thm14_criterion,
    thm15_criterion,
};
use deephole::{Budget, DeepHoleVerdict, GprsCode, Polynomial, WordFamilySpec};

fn show(name: &str, v: &DeepHoleVerdict) {
    let w = v
        .witness
        .as_ref()
        .map(|w| w.to_string())
        .unwrap_or_else(|| "-".into());
    println!("  {name:<14} deep hole: {:<5} witness: {w}", v.is_deep_hole);
}

fn main() -> deephole::Result<()> {
    let b = Budget::default();
    for spec in ["q=7;exclude=3,4;k=3", "q=7;exclude=0,5;k=3"] {
        let code = GprsCode::parse(spec)?;
        let f = code.field();
        let deg_k = WordFamilySpec::DegreeK {
            lambda: f.from_int(2),
            nu: f.from_int(5),
            low: Polynomial::parse(f, "1,6")?,
        };
        let u = build_family_word(&code, &deg_k)?;
        println!("{spec}, u = {u}");
        show("subset sums", &thm14_criterion(&code)?);
        show("mds extension", &is_deep_hole_mds_extension(&code, &u)?);
        show("oracle", &is_deep_hole_oracle(&code, &u, &b)?);

        for &a in code.excluded() {
            let shifted = WordFamilySpec::ShiftedInverse {
                lambda: f.one(),
                nu: f.zero(),
                pole: a,
                low: Polynomial::zero(f),
            };
            let w = build_family_word(&code, &shifted)?;
            println!("  pole {a}, u = {w}");
            show("shifted", &thm15_criterion(&code, a)?);
            show("oracle", &is_deep_hole_oracle(&code, &w, &b)?);
        }
    }
    Ok(())
}
