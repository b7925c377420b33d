//! Deep holes of generalized projective Reed-Solomon codes.
//!
//! A word is a deep hole when its error distance equals the covering radius
//! `q - l + 1 - k`. This module offers three ways to decide that:
//!
//! * [`is_deep_hole_oracle`] measures the error distance directly;
//! * [`is_deep_hole_mds_extension`] stacks the word under the generator matrix
//!   and asks whether the result still generates an MDS code;
//! * [`thm14_criterion`] and [`thm15_criterion`] evaluate closed-form subset
//!   conditions for the two word families `λx^k + ...` and
//!   `λ(x - a_j)^{q-2} + ...`, and return the first violating subset otherwise.
//!
//! It also hosts the zero-sum subset construction used for primitive codes and
//! the binomial helpers behind the second family.

use std::fmt;

use itertools::Itertools;
use rand::Rng;
use serde::{Serialize, Serializer};

use crate::codes::{Budget, DistanceStrategy, GprsCode, Mode, ReceivedWord};
use crate::error::{Error, Result};
use crate::galois::{prime_power, FieldElement, FiniteField};
use crate::matrix::mds_generator_check;
use crate::polynomial::{expand_shifted_power, Degree, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Oracle,
    MdsExtension,
    Thm14,
    Thm15,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Oracle => "oracle",
            Method::MdsExtension => "mds_extension",
            Method::Thm14 => "thm14",
            Method::Thm15 => "thm15",
        };
        f.write_str(s)
    }
}

/// Certificate that a criterion fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A `k`-subset of `D`, ascending.
    Subset(Vec<FieldElement>),
    /// Column indices of a singular `(k+1)`-minor of the stacked matrix.
    Columns(Vec<usize>),
}

/// Comma-separated: canonical encodings for subsets, indices for columns.
impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Subset(s) => write!(f, "{}", s.iter().map(|e| e.value()).join(",")),
            Witness::Columns(c) => write!(f, "{}", c.iter().join(",")),
        }
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeepHoleVerdict {
    pub is_deep_hole: bool,
    pub method: Method,
    pub witness: Option<Witness>,
    /// Measured error distance, for the oracle.
    pub distance: Option<usize>,
}

/// Flat serialization of a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictRecord {
    pub is_deep_hole: bool,
    pub method: Method,
    pub witness: Option<String>,
    pub distance: Option<usize>,
    pub parameters: String,
}

impl DeepHoleVerdict {
    fn holds(method: Method) -> Self {
        DeepHoleVerdict {
            is_deep_hole: true,
            method,
            witness: None,
            distance: None,
        }
    }

    fn fails(method: Method, witness: Witness) -> Self {
        DeepHoleVerdict {
            is_deep_hole: false,
            method,
            witness: Some(witness),
            distance: None,
        }
    }

    pub fn record(&self, parameters: impl Into<String>) -> VerdictRecord {
        VerdictRecord {
            is_deep_hole: self.is_deep_hole,
            method: self.method,
            witness: self.witness.as_ref().map(ToString::to_string),
            distance: self.distance,
            parameters: parameters.into(),
        }
    }
}

/// Deep-hole test by exact error distance (all `q^k` codewords).
pub fn is_deep_hole_oracle(
    code: &GprsCode,
    u: &ReceivedWord,
    budget: &Budget,
) -> Result<DeepHoleVerdict> {
    is_deep_hole_oracle_with(code, u, DistanceStrategy::Exhaustive, budget)
}

pub fn is_deep_hole_oracle_with(
    code: &GprsCode,
    u: &ReceivedWord,
    strategy: DistanceStrategy,
    budget: &Budget,
) -> Result<DeepHoleVerdict> {
    let d = code.error_distance_with(u, strategy, budget)?;
    let rho = code.covering_radius(Mode::Formula, budget)?;
    Ok(DeepHoleVerdict {
        is_deep_hole: d == rho,
        method: Method::Oracle,
        witness: None,
        distance: Some(d),
    })
}

/// Deep-hole test by the MDS property of the generator extended with `u`.
///
/// A codeword makes the stacked matrix rank-deficient, so it is reported as not
/// a deep hole with a singular minor as witness.
pub fn is_deep_hole_mds_extension(code: &GprsCode, u: &ReceivedWord) -> Result<DeepHoleVerdict> {
    let stacked = code.generator().stack_row(u.coords())?;
    let check = mds_generator_check(&stacked, code.k() + 1)?;
    Ok(match check.witness {
        None => DeepHoleVerdict::holds(Method::MdsExtension),
        Some(cols) => DeepHoleVerdict::fails(Method::MdsExtension, Witness::Columns(cols)),
    })
}

/// `true` iff the listed columns of the stacked matrix form a singular minor.
pub fn validate_mds_witness(code: &GprsCode, u: &ReceivedWord, cols: &[usize]) -> Result<bool> {
    if cols.len() != code.k() + 1 || cols.iter().any(|&c| c >= code.length()) {
        return Ok(false);
    }
    let stacked = code.generator().stack_row(u.coords())?;
    Ok(stacked.select_columns(cols).determinant()?.is_zero())
}

fn require_odd(field: FiniteField) -> Result<()> {
    if field.is_odd_characteristic() {
        Ok(())
    } else {
        Err(Error::Hypothesis(
            "criteria are only established for odd characteristic".into(),
        ))
    }
}

/// Checks `q >= 5`, odd characteristic and `2 <= k <= min(q-3, q-l-1)`.
pub fn thm14_hypotheses(code: &GprsCode) -> Result<()> {
    let field = code.field();
    require_odd(field)?;
    let q = field.order() as usize;
    if q < 5 {
        return Err(Error::Hypothesis(format!("q = {q} < 5")));
    }
    let bound = (q - 3).min(code.n() - 1);
    if code.k() > bound {
        return Err(Error::Hypothesis(format!(
            "k = {} exceeds min(q-3, q-l-1) = {bound}",
            code.k()
        )));
    }
    Ok(())
}

/// Closed-form deep-hole test for words `(u(D), c_{k-1}(u))` with `deg u = k`:
/// deep holes exactly when no `k`-subset of `D` sums to zero.
pub fn thm14_criterion(code: &GprsCode) -> Result<DeepHoleVerdict> {
    thm14_hypotheses(code)?;
    let field = code.field();
    let hit = code
        .points()
        .iter()
        .copied()
        .combinations(code.k())
        .find(|subset| {
            subset
                .iter()
                .fold(field.zero(), |acc, &y| acc + y)
                .is_zero()
        });
    Ok(match hit {
        None => DeepHoleVerdict::holds(Method::Thm14),
        Some(subset) => DeepHoleVerdict::fails(Method::Thm14, Witness::Subset(subset)),
    })
}

fn is_k_subset_of_d(code: &GprsCode, subset: &[FieldElement]) -> bool {
    subset.len() == code.k()
        && subset
            .iter()
            .all(|y| code.points().binary_search(y).is_ok())
        && subset.iter().all_unique()
}

/// `true` iff `subset` is a `k`-subset of `D` with zero sum.
pub fn validate_thm14_witness(code: &GprsCode, subset: &[FieldElement]) -> bool {
    is_k_subset_of_d(code, subset)
        && subset
            .iter()
            .fold(code.field().zero(), |acc, &y| acc + y)
            .is_zero()
}

/// Checks odd characteristic, `q >= 4` and that `a_j` is excluded.
pub fn thm15_hypotheses(code: &GprsCode, a_j: FieldElement) -> Result<()> {
    let field = code.field();
    if a_j.field() != field {
        return Err(Error::CrossField);
    }
    if code.excluded().binary_search(&a_j).is_err() {
        return Err(Error::NotExcluded(a_j.value()));
    }
    require_odd(field)?;
    if field.order() < 4 {
        return Err(Error::Hypothesis(format!("q = {} < 4", field.order())));
    }
    Ok(())
}

/// `C(q-2, k-1) · a_j^{q-1-k} · ∏_{y ∈ I} (y - a_j) + e`.
pub fn thm15_expression(
    code: &GprsCode,
    a_j: FieldElement,
    subset: &[FieldElement],
) -> Result<FieldElement> {
    let field = code.field();
    let q = field.order() as u64;
    let k = code.k() as u64;
    let scale = binom_mod_p(q - 2, k - 1, field)? * a_j.powu(q - 1 - k);
    let prod = subset.iter().try_fold(field.one(), |acc, &y| {
        Ok::<_, Error>(acc * y.checked_sub(a_j)?)
    })?;
    Ok(scale * prod + field.one())
}

/// Closed-form deep-hole test for the family `λ(x - a_j)^{q-2} + νx^{k-1} + f_{<=k-2}`.
/// Returns `true` at once when `p | k`.
pub fn thm15_criterion(code: &GprsCode, a_j: FieldElement) -> Result<DeepHoleVerdict> {
    thm15_hypotheses(code, a_j)?;
    let p = code.field().characteristic() as usize;
    if code.k().is_multiple_of(p) {
        return Ok(DeepHoleVerdict::holds(Method::Thm15));
    }
    for subset in code.points().iter().copied().combinations(code.k()) {
        if thm15_expression(code, a_j, &subset)?.is_zero() {
            return Ok(DeepHoleVerdict::fails(
                Method::Thm15,
                Witness::Subset(subset),
            ));
        }
    }
    Ok(DeepHoleVerdict::holds(Method::Thm15))
}

/// `true` iff `subset` is a `k`-subset of `D` on which the criterion expression vanishes.
pub fn validate_thm15_witness(code: &GprsCode, a_j: FieldElement, subset: &[FieldElement]) -> bool {
    is_k_subset_of_d(code, subset) && thm15_expression(code, a_j, subset).is_ok_and(|v| v.is_zero())
}

/// A structured received word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordFamilySpec {
    /// `λx^k + νx^{k-1} + low`, with `deg low <= k - 2`.
    DegreeK {
        lambda: FieldElement,
        nu: FieldElement,
        low: Polynomial,
    },
    /// `λ(x - pole)^{q-2} + νx^{k-1} + low`, with `pole` excluded from `D`.
    ShiftedInverse {
        lambda: FieldElement,
        nu: FieldElement,
        pole: FieldElement,
        low: Polynomial,
    },
}

impl WordFamilySpec {
    pub fn kind(&self) -> &'static str {
        match self {
            WordFamilySpec::DegreeK { .. } => "deg_k",
            WordFamilySpec::ShiftedInverse { .. } => "shifted_qminus2",
        }
    }

    fn random_parts<R: Rng + ?Sized>(
        code: &GprsCode,
        rng: &mut R,
    ) -> (FieldElement, FieldElement, Polynomial) {
        let field = code.field();
        let q = field.order() as u64;
        let el = |rng: &mut R, lo: u64| field.element(rng.gen_range(lo..q)).expect("in range");
        let lambda = el(rng, 1);
        let nu = el(rng, 0);
        let low = (0..code.k() - 1).map(|_| el(rng, 0)).collect();
        let low = Polynomial::from_coeffs(field, low).expect("same field");
        (lambda, nu, low)
    }

    pub fn random_degree_k<R: Rng + ?Sized>(code: &GprsCode, rng: &mut R) -> Self {
        let (lambda, nu, low) = Self::random_parts(code, rng);
        WordFamilySpec::DegreeK { lambda, nu, low }
    }

    pub fn random_shifted<R: Rng + ?Sized>(
        code: &GprsCode,
        pole: FieldElement,
        rng: &mut R,
    ) -> Self {
        let (lambda, nu, low) = Self::random_parts(code, rng);
        WordFamilySpec::ShiftedInverse {
            lambda,
            nu,
            pole,
            low,
        }
    }

    /// The polynomial `u(x)` this spec describes on `code`.
    pub fn polynomial(&self, code: &GprsCode) -> Result<Polynomial> {
        let field = code.field();
        let k = code.k();
        let (lambda, nu, low, head) = match self {
            WordFamilySpec::DegreeK { lambda, nu, low } => {
                (*lambda, *nu, low, Polynomial::monomial(field.one(), k))
            }
            WordFamilySpec::ShiftedInverse {
                lambda,
                nu,
                pole,
                low,
            } => {
                if pole.field() != field {
                    return Err(Error::CrossField);
                }
                if code.excluded().binary_search(pole).is_err() {
                    return Err(Error::NotExcluded(pole.value()));
                }
                let q = field.order() as usize;
                (
                    *lambda,
                    *nu,
                    low,
                    expand_shifted_power(field, *pole, q - 2)?,
                )
            }
        };
        if lambda.field() != field || nu.field() != field || low.field() != field {
            return Err(Error::CrossField);
        }
        if lambda.is_zero() {
            return Err(Error::InvalidParameter("lambda must be nonzero".into()));
        }
        if !low.degree().at_most(k - 2) {
            return Err(Error::DegreeTooLarge {
                degree: low.degree().finite().unwrap_or(0),
                max: k - 2,
            });
        }
        head.scale(lambda)
            .checked_add(&Polynomial::monomial(nu, k - 1))?
            .checked_add(low)
    }
}

/// `(u(D), c_{k-1}(u))` for the family member described by `spec`.
pub fn build_family_word(code: &GprsCode, spec: &WordFamilySpec) -> Result<ReceivedWord> {
    code.word_from_poly(&spec.polynomial(code)?)
}

/// `true` iff `u = (u(D), c_{k-1}(u))` for some `u` of degree exactly `k`.
pub fn is_degree_k_word(code: &GprsCode, u: &ReceivedWord) -> Result<bool> {
    let f = code.interpolant(u)?;
    Ok(f.degree() == Degree::Finite(code.k()) && f.coefficient(code.k() - 1) == u.projective())
}

/// The `λ` for which `u` belongs to the shifted family with the given pole, if any.
pub fn shifted_family_scale(
    code: &GprsCode,
    u: &ReceivedWord,
    pole: FieldElement,
) -> Result<Option<FieldElement>> {
    let field = code.field();
    let base = build_family_word(
        code,
        &WordFamilySpec::ShiftedInverse {
            lambda: field.one(),
            nu: field.zero(),
            pole,
            low: Polynomial::zero(field),
        },
    )?;
    for lambda in field.elements(true) {
        let diff = u.checked_add(&base.scale(-lambda))?;
        if code.is_codeword(&diff) {
            return Ok(Some(lambda));
        }
    }
    Ok(None)
}

/// A `k`-subset of `F_q^*` summing to zero, built by pairing `z` with `-z` and, for
/// odd `k`, adding one zero-sum triple. Ascending.
pub fn zero_sum_subset(field: FiniteField, k: usize) -> Result<Vec<FieldElement>> {
    require_odd(field)?;
    let q = field.order() as usize;
    if k < 2 || k + 3 > q {
        return Err(Error::InvalidParameter(format!(
            "need 2 <= k <= q - 3 = {}, got {k}",
            q as i64 - 3
        )));
    }
    let mut pairs: Vec<(FieldElement, FieldElement)> = Vec::with_capacity((q - 1) / 2);
    let mut used = vec![false; q];
    for z in field.elements(true) {
        if !used[z.value() as usize] {
            used[z.value() as usize] = true;
            used[(-z).value() as usize] = true;
            pairs.push((z, -z));
        }
    }
    let mut out: Vec<FieldElement> = Vec::with_capacity(k);
    let mut pair_budget = k / 2;
    if k % 2 == 1 {
        let triple = zero_sum_triple(field);
        out.extend_from_slice(&triple);
        pair_budget = (k - 3) / 2;
        pairs.retain(|(z, w)| !triple.contains(z) && !triple.contains(w));
    }
    for (z, w) in pairs.into_iter().take(pair_budget) {
        out.push(z);
        out.push(w);
    }
    out.sort();
    debug_assert_eq!(out.len(), k);
    Ok(out)
}

/// Three distinct nonzero elements with zero sum; requires `q >= 7` and odd `p`.
fn zero_sum_triple(field: FiniteField) -> [FieldElement; 3] {
    let e = field.one();
    let two = field.from_int(2);
    match field.characteristic() {
        3 | 5 => {
            let mut avoid = vec![e, -e];
            if field.characteristic() == 5 {
                avoid.extend([two, -two]);
            }
            let second = field
                .elements(true)
                .into_iter()
                .find(|z| !avoid.contains(z))
                .expect("q >= 9 leaves room");
            [e, second, -(e + second)]
        }
        _ => [e, two, -field.from_int(3)],
    }
}

/// `v_p(n)` for `n > 0`.
pub fn p_adic_valuation(mut n: u64, p: u64) -> u32 {
    assert!(n > 0 && p > 1);
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// `v_p(C(q-2, t-1))` for `q` a power of the odd prime `p` and `2 <= t <= q-1`,
/// which equals `v_p(t)`.
pub fn vp_binomial(q: u64, t: u64) -> Result<u32> {
    let (p, _) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if p == 2 {
        return Err(Error::Hypothesis("q must be odd".into()));
    }
    if t < 2 || t > q - 1 {
        return Err(Error::InvalidParameter(format!(
            "t = {t} outside 2..={}",
            q - 1
        )));
    }
    Ok(p_adic_valuation(t, p as u64))
}

/// `C(m, r) mod p` by Lucas' theorem, as an element of the prime subfield.
pub fn binom_mod_p(m: u64, r: u64, field: FiniteField) -> Result<FieldElement> {
    if r > m {
        return Err(Error::InvalidParameter(format!("C({m}, {r}) needs r <= m")));
    }
    let p = field.characteristic() as u64;
    let (mut m, mut r) = (m, r);
    let mut acc = 1u64;
    while r > 0 {
        let (mi, ri) = (m % p, r % p);
        if ri > mi {
            return Ok(field.zero());
        }
        acc = acc * small_binom_mod(mi, ri, p) % p;
        m /= p;
        r /= p;
    }
    Ok(field.from_int(acc as i64))
}

fn small_binom_mod(m: u64, r: u64, p: u64) -> u64 {
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..r {
        num = num * ((m - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    // den is a product of integers below p, hence a unit.
    let mut inv = 1u64;
    let (mut base, mut e) = (den, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            inv = inv * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    num * inv % p
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f(q: u64) -> FiniteField {
        FiniteField::with_order(q).unwrap()
    }

    fn el(q: u64, v: u64) -> FieldElement {
        f(q).element(v).unwrap()
    }

    fn code(q: u64, excluded: &[u64], k: usize) -> GprsCode {
        let ex: Vec<_> = excluded.iter().map(|&e| el(q, e)).collect();
        GprsCode::new(f(q), &ex, k).unwrap()
    }

    fn vals(v: &[FieldElement]) -> Vec<u32> {
        v.iter().map(|x| x.value()).collect()
    }

    fn word(c: &GprsCode, s: &str) -> ReceivedWord {
        c.parse_word(s).unwrap()
    }

    #[test]
    fn oracle_examples() {
        let b = Budget::default();
        let c = code(5, &[3, 4], 2);
        let v = is_deep_hole_oracle(&c, &word(&c, "0,1,4,0"), &b).unwrap();
        assert!(v.is_deep_hole);
        assert_eq!(v.distance, Some(2));
        let c2 = code(5, &[0, 4], 2);
        let v2 = is_deep_hole_oracle(&c2, &word(&c2, "1,4,4,0"), &b).unwrap();
        assert!(!v2.is_deep_hole);
        assert_eq!(v2.distance, Some(1));
        let cw = c
            .encode(&Polynomial::from_encodings(f(5), &[2, 1]).unwrap())
            .unwrap();
        let v3 = is_deep_hole_oracle(&c, &cw, &b).unwrap();
        assert!(!v3.is_deep_hole);
        assert_eq!(v3.distance, Some(0));
    }

    #[test]
    fn mds_extension_examples() {
        let c2 = code(5, &[0, 4], 2);
        let u = word(&c2, "1,4,4,0");
        let v = is_deep_hole_mds_extension(&c2, &u).unwrap();
        assert!(!v.is_deep_hole);
        // D = (1, 2, 3): columns 1, 2 hold y = 2, 3 and column 3 is the projective one.
        assert_eq!(v.witness, Some(Witness::Columns(vec![1, 2, 3])));
        assert!(validate_mds_witness(&c2, &u, &[1, 2, 3]).unwrap());
        let c = code(5, &[3, 4], 2);
        assert!(
            is_deep_hole_mds_extension(&c, &word(&c, "0,1,4,0"))
                .unwrap()
                .is_deep_hole
        );
        let row = c.word(c.generator().row(1).to_vec()).unwrap();
        assert!(!is_deep_hole_mds_extension(&c, &row).unwrap().is_deep_hole);
    }

    #[test]
    fn subset_sum_criterion_examples() {
        assert!(thm14_criterion(&code(5, &[3, 4], 2)).unwrap().is_deep_hole);
        let v = thm14_criterion(&code(5, &[0, 4], 2)).unwrap();
        assert!(!v.is_deep_hole);
        assert_eq!(v.witness, Some(Witness::Subset(vec![el(5, 2), el(5, 3)])));
        assert!(matches!(
            thm14_criterion(&code(5, &[4], 3)),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            thm14_criterion(&code(8, &[0], 3)),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn shifted_criterion_examples() {
        let c = code(5, &[0, 1], 2);
        let v = thm15_criterion(&c, el(5, 1)).unwrap();
        assert!(!v.is_deep_hole);
        assert_eq!(v.witness, Some(Witness::Subset(vec![el(5, 2), el(5, 4)])));
        // p | k fast path in GF(9).
        for ex in [&[0u64][..], &[1, 5], &[2, 7, 8]] {
            let c9 = code(9, ex, 3);
            for &a in c9.excluded() {
                assert!(thm15_criterion(&c9, a).unwrap().is_deep_hole);
            }
        }
        // a_j = 0 makes the product term vanish.
        for q in [5u64, 7, 11] {
            for k in 2..=(q as usize - 2) {
                assert!(
                    thm15_criterion(&code(q, &[0], k), el(q, 0))
                        .unwrap()
                        .is_deep_hole
                );
            }
        }
        assert_eq!(thm15_criterion(&c, el(5, 3)), Err(Error::NotExcluded(3)));
    }

    #[test]
    fn shifted_criterion_closed_form_matches_coefficient_form() {
        // c_{k-1}(f_j) ∏ (a_j - y) + e against the closed form used by the criterion.
        for q in [5u64, 7, 9] {
            let field = f(q);
            for k in 2..=(q as usize - 2) {
                for a in field.elements(false) {
                    let c = GprsCode::new(field, &[a], k).unwrap();
                    let fj = expand_shifted_power(field, a, q as usize - 2).unwrap();
                    for subset in c.points().iter().copied().combinations(k).take(40) {
                        let direct = fj.coefficient(k - 1)
                            * subset.iter().map(|&y| a - y).product::<FieldElement>()
                            + field.one();
                        assert_eq!(direct, thm15_expression(&c, a, &subset).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn family_words() {
        let c = code(5, &[3, 4], 2);
        let field = f(5);
        let spec = WordFamilySpec::DegreeK {
            lambda: field.one(),
            nu: field.zero(),
            low: Polynomial::zero(field),
        };
        assert_eq!(
            vals(build_family_word(&c, &spec).unwrap().coords()),
            vec![0, 1, 4, 0]
        );
        let p = code(5, &[0], 2);
        let shifted = WordFamilySpec::ShiftedInverse {
            lambda: field.one(),
            nu: field.zero(),
            pole: field.zero(),
            low: Polynomial::zero(field),
        };
        assert_eq!(
            vals(build_family_word(&p, &shifted).unwrap().coords()),
            vec![1, 3, 2, 4, 0]
        );
        let nu2 = WordFamilySpec::ShiftedInverse {
            lambda: field.one(),
            nu: el(5, 2),
            pole: field.zero(),
            low: Polynomial::zero(field),
        };
        assert_eq!(build_family_word(&p, &nu2).unwrap().projective().value(), 2);
        let bad = WordFamilySpec::DegreeK {
            lambda: field.zero(),
            nu: field.zero(),
            low: Polynomial::zero(field),
        };
        assert!(build_family_word(&c, &bad).is_err());
        let not_excluded = WordFamilySpec::ShiftedInverse {
            lambda: field.one(),
            nu: field.zero(),
            pole: el(5, 2),
            low: Polynomial::zero(field),
        };
        assert_eq!(
            build_family_word(&p, &not_excluded),
            Err(Error::NotExcluded(2))
        );
    }

    #[test]
    fn shifted_last_coordinate_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for q in [5u64, 7, 9, 11] {
            let field = f(q);
            for k in 2..=(q as usize - 3) {
                let c = GprsCode::new(field, &[el(q, 1), el(q, 2)], k).unwrap();
                for &a in c.excluded() {
                    let spec = WordFamilySpec::random_shifted(&c, a, &mut rng);
                    let WordFamilySpec::ShiftedInverse { lambda, nu, .. } = spec else {
                        unreachable!()
                    };
                    let w = build_family_word(&c, &spec).unwrap();
                    let expected = lambda
                        * binom_mod_p(q - 2, k as u64 - 1, field).unwrap()
                        * (-a).powu(q - k as u64 - 1)
                        + nu;
                    assert_eq!(w.projective(), expected);
                    assert_eq!(shifted_family_scale(&c, &w, a).unwrap(), Some(lambda));
                }
            }
        }
    }

    #[test]
    fn zero_sum_examples() {
        assert_eq!(vals(&zero_sum_subset(f(5), 2).unwrap()), vec![1, 4]);
        assert_eq!(vals(&zero_sum_subset(f(7), 3).unwrap()), vec![1, 2, 4]);
        let s9 = zero_sum_subset(f(9), 3).unwrap();
        assert_eq!(vals(&s9), vec![1, 3, 8]);
        assert!(s9.iter().copied().sum::<FieldElement>().is_zero());
        assert!(zero_sum_subset(f(8), 2).is_err());
        assert!(zero_sum_subset(f(7), 5).is_err());
        assert!(zero_sum_subset(f(7), 1).is_err());
    }

    #[test]
    fn zero_sum_all_cases() {
        for q in [5u64, 7, 9, 11, 13, 25, 27, 49] {
            let field = f(q);
            for k in 2..=(q as usize - 3) {
                let s = zero_sum_subset(field, k).unwrap();
                assert_eq!(s.len(), k);
                assert!(s.iter().all(|x| !x.is_zero()));
                assert!(s.iter().all_unique());
                assert!(
                    s.iter().copied().sum::<FieldElement>().is_zero(),
                    "q={q} k={k}"
                );
            }
        }
    }

    #[test]
    fn valuations() {
        assert_eq!(vp_binomial(9, 3).unwrap(), 1);
        assert_eq!(vp_binomial(7, 2).unwrap(), 0);
        assert_eq!(vp_binomial(25, 10).unwrap(), 1);
        assert!(vp_binomial(9, 1).is_err());
        assert!(vp_binomial(9, 9).is_err());
        assert!(vp_binomial(8, 3).is_err());
        assert!(vp_binomial(12, 3).is_err());
    }

    #[test]
    fn binomials_mod_p() {
        assert_eq!(binom_mod_p(3, 1, f(5)).unwrap().value(), 3);
        assert!(binom_mod_p(7, 2, f(9)).unwrap().is_zero());
        assert_eq!(binom_mod_p(11, 0, f(7)).unwrap(), f(7).one());
        assert!(binom_mod_p(2, 3, f(7)).is_err());
        // Against Pascal's triangle mod p.
        for p in [3u64, 5, 7] {
            let field = f(p);
            let mut row = vec![1u64];
            for m in 0..60u64 {
                for (r, &b) in row.iter().enumerate() {
                    assert_eq!(binom_mod_p(m, r as u64, field).unwrap().value() as u64, b);
                }
                let mut next = vec![1u64; row.len() + 1];
                for i in 1..row.len() {
                    next[i] = (row[i - 1] + row[i]) % p;
                }
                row = next;
            }
        }
    }

    #[test]
    fn shifted_power_coefficient_matches_binomial() {
        for q in [5u64, 7, 9, 11, 13] {
            let field = f(q);
            for a in field.elements(true) {
                let e = expand_shifted_power(field, a, q as usize - 2).unwrap();
                for k in 2..=(q as usize - 2) {
                    let expected = binom_mod_p(q - 2, k as u64 - 1, field).unwrap()
                        * (-a).powu(q - 1 - k as u64);
                    assert_eq!(e.coefficient(k - 1), expected);
                }
            }
        }
    }

    #[test]
    fn membership_helpers() {
        let c = code(7, &[0, 3], 3);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let spec = WordFamilySpec::random_degree_k(&c, &mut rng);
        let w = build_family_word(&c, &spec).unwrap();
        assert!(is_degree_k_word(&c, &w).unwrap());
        assert!(!is_degree_k_word(&c, &c.zero_word()).unwrap());
        assert_eq!(
            shifted_family_scale(&c, &c.zero_word(), el(7, 3)).unwrap(),
            None
        );
    }

    #[test]
    fn verdict_record() {
        let v = thm14_criterion(&code(5, &[0, 4], 2)).unwrap();
        let r = v.record("q=5^1;exclude=0,4;k=2");
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"is_deep_hole":false,"method":"thm14","witness":"2,3","distance":null,"parameters":"q=5^1;exclude=0,4;k=2"}"#
        );
    }
}
