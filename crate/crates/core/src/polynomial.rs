//! Univariate polynomials over a [`FiniteField`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::galois::{FieldElement, FiniteField};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`, which
/// compares below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// `true` for the zero polynomial and for degrees `<= bound`.
    pub fn at_most(self, bound: usize) -> bool {
        self <= Degree::Finite(bound)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Degree-ascending coefficient vector without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: FiniteField,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn zero(field: FiniteField) -> Self {
        Polynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * x^i`.
    pub fn monomial(c: FieldElement, i: usize) -> Self {
        let field = c.field();
        if c.is_zero() {
            return Self::zero(field);
        }
        let mut coeffs = vec![field.zero(); i + 1];
        coeffs[i] = c;
        Polynomial { field, coeffs }
    }

    /// The polynomial `x`.
    pub fn x(field: FiniteField) -> Self {
        Self::monomial(field.one(), 1)
    }

    pub fn from_coeffs(field: FiniteField, coeffs: Vec<FieldElement>) -> Result<Self> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::CrossField);
        }
        let mut p = Polynomial { field, coeffs };
        p.normalize();
        Ok(p)
    }

    /// From canonical encodings, degree-ascending.
    pub fn from_encodings(field: FiniteField, encodings: &[u64]) -> Result<Self> {
        let coeffs = encodings
            .iter()
            .map(|&e| field.element(e))
            .collect::<Result<Vec<_>>>()?;
        Self::from_coeffs(field, coeffs)
    }

    /// Parses the textual form `"c0,c1,...,cd"`.
    pub fn parse(field: FiniteField, text: &str) -> Result<Self> {
        let encodings = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_encodings(field, &encodings)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> FiniteField {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Coefficient of `x^i`; zero past the degree.
    pub fn coefficient(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(self.field.zero())
    }

    pub fn leading_coefficient(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or(self.field.zero())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: FieldElement) -> Result<FieldElement> {
        if x.field() != self.field {
            return Err(Error::CrossField);
        }
        Ok(self
            .coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, &c| acc * x + c))
    }

    pub fn eval_all(&self, xs: &[FieldElement]) -> Result<Vec<FieldElement>> {
        xs.iter().map(|&x| self.eval(x)).collect()
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        let mut p = Polynomial {
            field: self.field,
            coeffs: self.coeffs.iter().map(|&a| a * c).collect(),
        };
        p.normalize();
        p
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::CrossField)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coefficient(i) + other.coefficient(i))
            .collect();
        Self::from_coeffs(self.field, coeffs)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field));
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(self.field, coeffs)
    }

    /// `∏ (x - r)` over the given roots.
    pub fn from_roots(field: FiniteField, roots: &[FieldElement]) -> Result<Self> {
        roots
            .iter()
            .try_fold(Self::constant(field.one()), |acc, &r| {
                if r.field() != field {
                    return Err(Error::CrossField);
                }
                Ok(acc.mul_linear(r))
            })
    }

    /// `self * (x - r)`.
    fn mul_linear(&self, r: FieldElement) -> Self {
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i + 1] += c;
            coeffs[i] -= c * r;
        }
        let mut p = Polynomial {
            field: self.field,
            coeffs,
        };
        p.normalize();
        p
    }

    /// Exact quotient by `(x - r)`; assumes `r` is a root.
    fn div_linear(&self, r: FieldElement) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![self.field.zero(); n.saturating_sub(1)];
        let mut carry = self.field.zero();
        for i in (1..n).rev() {
            carry = self.coeffs[i] + carry * r;
            out[i - 1] = carry;
        }
        let mut p = Polynomial {
            field: self.field,
            coeffs: out,
        };
        p.normalize();
        p
    }
}

/// The polynomial of degree at most `n - 1` through `(nodes[i], values[i])`,
/// built term by term from `Σ values[i] ∏_{j≠i} (x - nodes[j]) / (nodes[i] - nodes[j])`.
pub fn lagrange_interpolate(nodes: &[FieldElement], values: &[FieldElement]) -> Result<Polynomial> {
    if nodes.len() != values.len() {
        return Err(Error::LengthMismatch {
            expected: nodes.len(),
            found: values.len(),
        });
    }
    let Some(&first) = nodes.first() else {
        return Err(Error::InvalidParameter(
            "interpolation needs at least one node".into(),
        ));
    };
    let field = first.field();
    if nodes.iter().chain(values).any(|x| x.field() != field) {
        return Err(Error::CrossField);
    }
    for (i, a) in nodes.iter().enumerate() {
        if nodes[..i].contains(a) {
            return Err(Error::DuplicateNode(a.value()));
        }
    }
    let full = Polynomial::from_roots(field, nodes)?;
    let mut acc = vec![field.zero(); nodes.len()];
    for (i, (&xi, &vi)) in nodes.iter().zip(values).enumerate() {
        if vi.is_zero() {
            continue;
        }
        let denom: FieldElement = nodes
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(field.one(), |d, (_, &xj)| d * (xi - xj));
        let weight = vi / denom;
        let basis = full.div_linear(xi);
        for (slot, &c) in acc.iter_mut().zip(basis.coeffs()) {
            *slot += c * weight;
        }
    }
    Polynomial::from_coeffs(field, acc)
}

/// Full expansion of `(x - a)^m`.
pub fn expand_shifted_power(field: FiniteField, a: FieldElement, m: usize) -> Result<Polynomial> {
    if a.field() != field {
        return Err(Error::CrossField);
    }
    // Pascal row mod p, then c_i = C(m, i) (-a)^{m-i}.
    let p = field.characteristic() as u64;
    let mut row = vec![1u64];
    for _ in 0..m {
        let mut next = vec![1u64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = (row[i - 1] + row[i]) % p;
        }
        row = next;
    }
    let minus_a = -a;
    let coeffs = row
        .iter()
        .enumerate()
        .map(|(i, &b)| field.from_int(b as i64) * minus_a.powu((m - i) as u64))
        .collect();
    Polynomial::from_coeffs(field, coeffs)
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{self}]")
    }
}

/// `c0,c1,...,cd` in canonical encodings; the zero polynomial prints as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.value().to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Self) -> Polynomial {
        self.checked_add(rhs)
            .expect("polynomials over different fields")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            field: self.field,
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Self) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Self) -> Polynomial {
        self.checked_mul(rhs)
            .expect("polynomials over different fields")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use proptest::prelude::*;

    fn f(q: u64) -> FiniteField {
        FiniteField::with_order(q).unwrap()
    }

    fn poly(q: u64, c: &[u64]) -> Polynomial {
        Polynomial::from_encodings(f(q), c).unwrap()
    }

    fn el(q: u64, v: u64) -> FieldElement {
        f(q).element(v).unwrap()
    }

    #[test]
    fn evaluation() {
        assert_eq!(poly(5, &[1, 0, 1]).eval(el(5, 2)).unwrap().value(), 0);
        assert_eq!(Polynomial::zero(f(5)).eval(el(5, 3)).unwrap().value(), 0);
        assert_eq!(poly(5, &[3, 2]).eval(el(5, 2)).unwrap().value(), 2);
        assert_eq!(poly(5, &[3, 2]).eval(el(7, 2)), Err(Error::CrossField));
    }

    #[test]
    fn degrees_and_coefficients() {
        assert_eq!(Polynomial::zero(f(5)).degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert!(Polynomial::zero(f(5)).degree().at_most(0));
        assert_eq!(poly(5, &[1, 2, 0, 0]).degree(), Degree::Finite(1));
        assert_eq!(poly(5, &[0, 0, 1]).coefficient(1).value(), 0);
        assert_eq!(poly(5, &[3, 2]).coefficient(1).value(), 2);
        assert_eq!(poly(5, &[3, 2]).coefficient(9).value(), 0);
        // (x - 1)^3 by repeated multiplication.
        let lin = poly(5, &[4, 1]);
        let cube = &(&lin * &lin) * &lin;
        assert_eq!(cube.coefficient(1).value(), 3);
        assert_eq!(expand_shifted_power(f(5), el(5, 1), 3).unwrap(), cube);
    }

    #[test]
    fn interpolation_examples() {
        let nodes: Vec<_> = [1, 2, 3].iter().map(|&v| el(5, v)).collect();
        let values: Vec<_> = [1, 4, 4].iter().map(|&v| el(5, v)).collect();
        let u = lagrange_interpolate(&nodes, &values).unwrap();
        assert_eq!(u, poly(5, &[0, 0, 1]));
        // Independent route: solve the Vandermonde system.
        let v = Matrix::from_fn(f(5), 3, 3, |i, j| nodes[i].powu(j as u64));
        let solved = v.solve(&values).unwrap();
        assert_eq!(solved, u.coeffs()[..].to_vec());

        let single = lagrange_interpolate(&[el(7, 4)], &[el(7, 6)]).unwrap();
        assert_eq!(single, poly(7, &[6]));

        assert_eq!(
            lagrange_interpolate(&[el(5, 1), el(5, 1)], &[el(5, 0), el(5, 2)]),
            Err(Error::DuplicateNode(1))
        );
        assert!(matches!(
            lagrange_interpolate(&[el(5, 1)], &[]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn shifted_powers() {
        assert_eq!(
            expand_shifted_power(f(5), el(5, 0), 3).unwrap(),
            Polynomial::monomial(el(5, 1), 3)
        );
        assert_eq!(
            expand_shifted_power(f(3), el(3, 1), 2).unwrap(),
            poly(3, &[1, 1, 1])
        );
        assert_eq!(
            expand_shifted_power(f(5), el(5, 1), 3)
                .unwrap()
                .coefficient(1)
                .value(),
            3
        );
        assert_eq!(
            expand_shifted_power(f(9), el(9, 4), 0).unwrap(),
            poly(9, &[1])
        );
    }

    #[test]
    fn shifted_power_matches_pow_everywhere() {
        for q in [4u64, 5, 7, 8, 9] {
            let field = f(q);
            for a in field.elements(false) {
                for m in 0..(q as usize + 2) {
                    let e = expand_shifted_power(field, a, m).unwrap();
                    for x in field.elements(false) {
                        assert_eq!(e.eval(x).unwrap(), (x - a).powu(m as u64));
                    }
                    if m >= 1 {
                        assert!(e.eval(a).unwrap().is_zero());
                    }
                }
            }
        }
    }

    fn field_and_poly() -> impl Strategy<Value = (u64, Vec<u64>, Vec<u64>)> {
        prop::sample::select(vec![4u64, 5, 7, 8, 9, 11, 13]).prop_flat_map(|q| {
            (1..=q as usize).prop_flat_map(move |n| {
                (
                    Just(q),
                    prop::sample::subsequence((0..q).collect::<Vec<_>>(), n),
                    prop::collection::vec(0..q, 0..=n),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn interpolation_round_trip((q, nodes, coeffs) in field_and_poly()) {
            let field = f(q);
            let target = Polynomial::from_encodings(field, &coeffs).unwrap();
            let nodes: Vec<_> = nodes.iter().map(|&v| field.element(v).unwrap()).collect();
            let values = target.eval_all(&nodes).unwrap();
            prop_assert_eq!(lagrange_interpolate(&nodes, &values).unwrap(), target);
        }

        #[test]
        fn product_degree_adds(a in prop::collection::vec(0u64..9, 1..6), b in prop::collection::vec(0u64..9, 1..6)) {
            let (pa, pb) = (poly(9, &a), poly(9, &b));
            let prod = &pa * &pb;
            match (pa.degree(), pb.degree()) {
                (Degree::Finite(x), Degree::Finite(y)) => prop_assert_eq!(prod.degree(), Degree::Finite(x + y)),
                _ => prop_assert!(prod.is_zero()),
            }
        }
    }
}
