//! Exact arithmetic in GF(p^s).
//!
//! A field is described by its characteristic `p`, extension degree `s` and, for
//! `s > 1`, a monic irreducible reduction modulus over GF(p). Elements are stored
//! by their canonical encoding: the coefficient vector `(c_0, ..., c_{s-1})` of the
//! residue class, read as the base-`p` integer `c_0 + c_1 p + ... + c_{s-1} p^{s-1}`.
//! The encoding fixes the total order used everywhere else in the crate.
//!
//! Fields are interned: constructing the same `(p, s, modulus)` twice yields the
//! same handle, so [`FiniteField`] is a `Copy` pointer and equality is identity.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// Fields up to this order get a full addition table.
const ADD_TABLE_LIMIT: u32 = 1024;

pub(crate) struct FieldData {
    p: u32,
    s: u32,
    q: u32,
    modulus: Option<Vec<u32>>,
    primitive: u32,
    // exp[i] = primitive^i for 0 <= i < q-1; log is its inverse on nonzero encodings.
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u16>>,
}

/// Handle to an interned finite field.
#[derive(Clone, Copy)]
pub struct FiniteField(&'static FieldData);

type Key = (u32, u32, Option<Vec<u32>>);

fn registry() -> &'static Mutex<HashMap<Key, &'static FieldData>> {
    static REGISTRY: OnceLock<Mutex<HashMap<Key, &'static FieldData>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, s)` with `q = p^s`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut s = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        s += 1;
    }
    (rest == 1).then_some((p as u32, s))
}

// Polynomials over GF(p) as degree-ascending coefficient vectors, used only while
// building a field.

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn rem_mod_p(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv_mod_p(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let factor = r[r.len() - 1] * lead_inv % p;
        for (i, &bi) in b.iter().enumerate() {
            let t = factor * bi % p;
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        trim(&mut r);
    }
    r
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn digits(mut value: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(value % p);
        value /= p;
    }
    out
}

/// Monic polynomial of degree `d` whose lower coefficients are the base-`p` digits of `index`.
fn monic_from_index(index: u32, p: u32, d: usize) -> Vec<u32> {
    let mut v = digits(index, p, d);
    v.push(1);
    v
}

/// Irreducibility by trial division with every monic polynomial of degree `1..=s/2`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let s = f.len() - 1;
    for d in 1..=s / 2 {
        for index in 0..p.pow(d as u32) {
            let g = monic_from_index(index, p, d);
            if rem_mod_p(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn default_modulus(p: u32, s: usize) -> Vec<u32> {
    (0..p.pow(s as u32))
        .map(|index| monic_from_index(index, p, s))
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial of every degree exists")
}

/// Product of two encodings, computed by polynomial multiplication and reduction.
fn slow_mul(a: u32, b: u32, p: u32, s: usize, modulus: Option<&[u32]>) -> u32 {
    let Some(modulus) = modulus else {
        return ((a as u64 * b as u64) % p as u64) as u32;
    };
    let da = digits(a, p, s);
    let db = digits(b, p, s);
    let mut prod = vec![0u32; 2 * s - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let r = rem_mod_p(&prod, modulus, p);
    r.iter().rev().fold(0, |acc, &c| acc * p + c)
}

impl FieldData {
    fn build(p: u32, s: u32, modulus: Option<Vec<u32>>) -> FieldData {
        let q = p.pow(s);
        let md = modulus.as_deref();
        let mut neg = vec![0u32; q as usize];
        for (v, slot) in neg.iter_mut().enumerate() {
            let d = digits(v as u32, p, s as usize);
            *slot = d.iter().rev().fold(0, |acc, &c| acc * p + (p - c) % p);
        }
        let add = (q <= ADD_TABLE_LIMIT).then(|| {
            let mut table = vec![0u16; (q * q) as usize];
            for a in 0..q {
                let da = digits(a, p, s as usize);
                for b in 0..q {
                    let db = digits(b, p, s as usize);
                    let sum = da
                        .iter()
                        .zip(&db)
                        .rev()
                        .fold(0, |acc, (&x, &y)| acc * p + (x + y) % p);
                    table[(a * q + b) as usize] = sum as u16;
                }
            }
            table
        });

        // Smallest encoding of multiplicative order q - 1.
        let order = |g: u32| {
            let mut x = g;
            let mut n = 1;
            while x != 1 {
                x = slow_mul(x, g, p, s as usize, md);
                n += 1;
            }
            n
        };
        let primitive = (1..q)
            .find(|&g| order(g) == q - 1)
            .expect("F_q^* is cyclic");

        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = 1;
        for i in 0..q - 1 {
            exp.push(x);
            log[x as usize] = i;
            x = slow_mul(x, primitive, p, s as usize, md);
        }
        FieldData {
            p,
            s,
            q,
            modulus,
            primitive,
            exp,
            log,
            neg,
            add,
        }
    }
}

impl FiniteField {
    /// Builds GF(p^s).
    ///
    /// For `s > 1` the modulus, if given, must be a monic irreducible polynomial of
    /// degree `s` written degree-ascending. When omitted, the monic irreducible whose
    /// lower coefficients have the smallest base-`p` value is used. Prime fields take
    /// no modulus.
    pub fn new(p: u32, s: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if s == 0 {
            return Err(Error::InvalidParameter(
                "extension degree must be at least 1".into(),
            ));
        }
        let q = (p as u64)
            .checked_pow(s)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge((p as u64).saturating_pow(s)))?;
        let modulus = match (s, modulus) {
            (1, None) => None,
            (1, Some(_)) => {
                return Err(Error::InvalidModulus("prime fields take no modulus".into()))
            }
            (_, None) => Some(default_modulus(p, s as usize)),
            (_, Some(m)) => {
                if m.len() != s as usize + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected {} coefficients for degree {s}, got {}",
                        s + 1,
                        m.len()
                    )));
                }
                if m[s as usize] != 1 {
                    return Err(Error::InvalidModulus("modulus must be monic".into()));
                }
                if let Some(&c) = m.iter().find(|&&c| c >= p) {
                    return Err(Error::InvalidModulus(format!(
                        "coefficient {c} not in GF({p})"
                    )));
                }
                if !is_irreducible(m, p) {
                    return Err(Error::InvalidModulus(format!(
                        "{m:?} is reducible over GF({p})"
                    )));
                }
                Some(m.to_vec())
            }
        };
        debug_assert!(q <= MAX_ORDER);
        let key = (p, s, modulus.clone());
        let mut reg = registry().lock().unwrap_or_else(|e| e.into_inner());
        let data = *reg
            .entry(key)
            .or_insert_with(|| Box::leak(Box::new(FieldData::build(p, s, modulus))));
        Ok(FiniteField(data))
    }

    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// GF(q) with the default modulus.
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, s) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, s, None)
    }

    /// Parses `"p^s"` or a bare prime power such as `"9"`, with an optional
    /// `"c0,c1,...,cs"` modulus override.
    pub fn parse(spec: &str, modulus: Option<&str>) -> Result<Self> {
        let spec = spec.trim();
        let (p, s) = match spec.split_once('^') {
            Some((p, s)) => (parse_u32(p)?, parse_u32(s)?),
            None => {
                let q = parse_u32(spec)? as u64;
                prime_power(q).ok_or(Error::NotPrimePower(q))?
            }
        };
        let modulus = modulus
            .map(|m| m.split(',').map(parse_u32).collect::<Result<Vec<_>>>())
            .transpose()?;
        Self::new(p, s, modulus.as_deref())
    }

    pub fn characteristic(self) -> u32 {
        self.0.p
    }

    pub fn degree(self) -> u32 {
        self.0.s
    }

    pub fn order(self) -> u32 {
        self.0.q
    }

    /// Reduction modulus, degree-ascending and monic; `None` for prime fields.
    pub fn modulus(self) -> Option<&'static [u32]> {
        self.0.modulus.as_deref()
    }

    pub fn is_odd_characteristic(self) -> bool {
        self.0.p != 2
    }

    /// Canonical spec string, e.g. `"3^2"`.
    pub fn spec(self) -> String {
        format!("{}^{}", self.0.p, self.0.s)
    }

    pub fn zero(self) -> FieldElement {
        FieldElement {
            field: self,
            value: 0,
        }
    }

    pub fn one(self) -> FieldElement {
        FieldElement {
            field: self,
            value: 1,
        }
    }

    /// Element with the given canonical encoding.
    pub fn element(self, encoding: u64) -> Result<FieldElement> {
        if encoding >= self.0.q as u64 {
            return Err(Error::ElementOutOfRange {
                value: encoding,
                q: self.0.q,
            });
        }
        Ok(FieldElement {
            field: self,
            value: encoding as u32,
        })
    }

    /// Element from its coefficient vector over GF(p), degree-ascending.
    pub fn from_coeffs(self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.0.s as usize || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(Error::InvalidParameter(format!(
                "{coeffs:?} is not a coefficient vector of GF({})",
                self.0.q
            )));
        }
        let value = coeffs.iter().rev().fold(0, |acc, &c| acc * self.0.p + c);
        Ok(FieldElement { field: self, value })
    }

    /// The integer `n` as `n * e` in the prime subfield.
    pub fn from_int(self, n: i64) -> FieldElement {
        let value = n.rem_euclid(self.0.p as i64) as u32;
        FieldElement { field: self, value }
    }

    /// All elements (or all nonzero ones) in ascending encoding order.
    pub fn elements(self, nonzero_only: bool) -> Vec<FieldElement> {
        let start = u32::from(nonzero_only);
        (start..self.0.q)
            .map(|value| FieldElement { field: self, value })
            .collect()
    }

    /// Smallest-encoding generator of the multiplicative group.
    pub fn primitive_element(self) -> FieldElement {
        FieldElement {
            field: self,
            value: self.0.primitive,
        }
    }

    #[inline]
    pub(crate) fn add_raw(self, a: u32, b: u32) -> u32 {
        let d = self.0;
        if d.s == 1 {
            let t = a + b;
            return if t >= d.p { t - d.p } else { t };
        }
        match &d.add {
            Some(table) => table[(a * d.q + b) as usize] as u32,
            None => {
                let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
                while a > 0 || b > 0 {
                    out += ((a % d.p + b % d.p) % d.p) * place;
                    a /= d.p;
                    b /= d.p;
                    place *= d.p;
                }
                out
            }
        }
    }

    #[inline]
    pub(crate) fn neg_raw(self, a: u32) -> u32 {
        self.0.neg[a as usize]
    }

    #[inline]
    pub(crate) fn sub_raw(self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    #[inline]
    pub(crate) fn mul_raw(self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let d = self.0;
        let n = d.q - 1;
        let e = d.log[a as usize] + d.log[b as usize];
        d.exp[(if e >= n { e - n } else { e }) as usize]
    }

    #[inline]
    pub(crate) fn inv_raw(self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let d = self.0;
        let l = d.log[a as usize];
        Some(d.exp[((d.q - 1 - l) % (d.q - 1)) as usize])
    }
}

fn parse_u32(s: &str) -> Result<u32> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("expected a non-negative integer, got {s:?}")))
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0)
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus() {
            None => write!(f, "GF({})", self.0.p),
            Some(m) => write!(f, "GF({}^{}, mod {:?})", self.0.p, self.0.s, m),
        }
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

/// An element of a [`FiniteField`].
///
/// The `std::ops` operators panic when the operands come from different fields
/// (and `/` panics on a zero divisor); the `checked_*` methods and [`elem_arith`]
/// report those cases as errors instead.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: FiniteField,
    value: u32,
}

impl std::hash::Hash for FiniteField {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        std::ptr::hash(self.0, state)
    }
}

impl FieldElement {
    pub fn field(self) -> FiniteField {
        self.field
    }

    /// Canonical integer encoding in `0..q`.
    pub fn value(self) -> u32 {
        self.value
    }

    /// Coefficients over GF(p), degree-ascending, length `s`.
    pub fn coeffs(self) -> Vec<u32> {
        digits(self.value, self.field.0.p, self.field.0.s as usize)
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn is_one(self) -> bool {
        self.value == 1
    }

    fn same_field(self, other: Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::CrossField)
        }
    }

    fn with(self, value: u32) -> Self {
        FieldElement {
            field: self.field,
            value,
        }
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(self.with(self.field.add_raw(self.value, rhs.value)))
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(self.with(self.field.sub_raw(self.value, rhs.value)))
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(self.with(self.field.mul_raw(self.value, rhs.value)))
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        self.same_field(rhs)?;
        let inv = rhs.inv()?;
        Ok(self.with(self.field.mul_raw(self.value, inv.value)))
    }

    pub fn inv(self) -> Result<Self> {
        self.field
            .inv_raw(self.value)
            .map(|v| self.with(v))
            .ok_or(Error::DivisionByZero)
    }

    /// `self^n` by square-and-multiply. Negative exponents invert first.
    pub fn pow(self, n: i64) -> Result<Self> {
        if n < 0 {
            return self.inv()?.pow(
                n.checked_neg()
                    .ok_or(Error::InvalidParameter("exponent out of range".into()))?,
            );
        }
        let mut e = n as u64;
        if self.value == 0 {
            return Ok(self.with(u32::from(e == 0)));
        }
        e %= (self.field.0.q - 1) as u64;
        let mut base = self.value;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.field.mul_raw(acc, base);
            }
            base = self.field.mul_raw(base, base);
            e >>= 1;
        }
        Ok(self.with(acc))
    }

    /// `self^n` for a non-negative exponent.
    pub fn powu(self, n: u64) -> Self {
        self.pow(n.min(i64::MAX as u64) as i64)
            .expect("non-negative powers are total")
    }

    /// Multiplicative order; `None` for zero.
    pub fn multiplicative_order(self) -> Option<u32> {
        if self.value == 0 {
            return None;
        }
        let mut x = self.value;
        let mut n = 1;
        while x != 1 {
            x = self.field.mul_raw(x, self.value);
            n += 1;
        }
        Some(n)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.value, f)
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by canonical encoding. Comparing elements of different fields panics.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        assert!(
            self.field == other.field,
            "comparing elements of different fields"
        );
        self.value.cmp(&other.value)
    }
}

/// One arithmetic request, with its operands.
#[derive(Clone, Copy, Debug)]
pub enum ArithOp {
    Add(FieldElement, FieldElement),
    Sub(FieldElement, FieldElement),
    Mul(FieldElement, FieldElement),
    Div(FieldElement, FieldElement),
    Neg(FieldElement),
    Inv(FieldElement),
    Pow(FieldElement, i64),
}

/// Evaluates `op`, reporting zero divisors and cross-field operands as errors.
pub fn elem_arith(op: ArithOp) -> Result<FieldElement> {
    match op {
        ArithOp::Add(a, b) => a.checked_add(b),
        ArithOp::Sub(a, b) => a.checked_sub(b),
        ArithOp::Mul(a, b) => a.checked_mul(b),
        ArithOp::Div(a, b) => a.checked_div(b),
        ArithOp::Neg(a) => Ok(-a),
        ArithOp::Inv(a) => a.inv(),
        ArithOp::Pow(a, n) => a.pow(n),
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident, $assign_tr:ident, $assign:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: Self) -> Self {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $assign_tr for FieldElement {
            fn $assign(&mut self, rhs: Self) {
                *self = $tr::$method(*self, rhs);
            }
        }
    };
}

binop!(Add, add, checked_add, AddAssign, add_assign);
binop!(Sub, sub, checked_sub, SubAssign, sub_assign);
binop!(Mul, mul, checked_mul, MulAssign, mul_assign);

impl Div for FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: Self) -> Self {
        match self.checked_div(rhs) {
            Ok(v) => v,
            Err(e) => panic!("{e}"),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> Self {
        self.with(self.field.neg_raw(self.value))
    }
}

impl std::iter::Sum for FieldElement {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut iter = iter.peekable();
        let first = *iter.peek().expect("sum of an empty iterator has no field");
        iter.fold(first.field.zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for FieldElement {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut iter = iter.peekable();
        let first = *iter
            .peek()
            .expect("product of an empty iterator has no field");
        iter.fold(first.field.one(), |acc, x| acc * x)
    }
}
