//! Generalized (projective) Reed-Solomon codes, exact error distances and
//! covering radii.
//!
//! A [`GprsCode`] evaluates message polynomials of degree `< k` on
//! `D = F_q \ {a_1, ..., a_l}` and appends the coefficient of `x^{k-1}` as a last
//! coordinate. `D` is kept in ascending encoding order, which fixes the column
//! order of the generator matrix and of every word.

use std::collections::VecDeque;
use std::fmt;
use std::ops::ControlFlow;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::galois::{FieldElement, FiniteField};
use crate::matrix::{mds_generator_check, Matrix};
use crate::polynomial::{lagrange_interpolate, Degree, Polynomial};

/// Caps for the exhaustive oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Budget {
    /// Maximum number of codewords one distance query may enumerate.
    pub codewords: u64,
    /// Maximum number of elementary distance updates for a covering-radius search.
    pub evaluations: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            codewords: 1_000_000,
            evaluations: 100_000_000,
        }
    }
}

impl Budget {
    fn check_codewords(&self, required: u128) -> Result<()> {
        if required > self.codewords as u128 {
            return Err(Error::BudgetExceeded {
                required,
                cap: self.codewords,
            });
        }
        Ok(())
    }
}

/// How a distance-like quantity is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Closed form for MDS codes.
    Formula,
    /// Exhaustive enumeration.
    BruteForce,
}

/// Route for an exact error-distance computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceStrategy {
    /// Minimum over all `q^k` codewords.
    Exhaustive,
    /// Minimum over the codewords that agree with the word on some `k`
    /// coordinates. Exact for MDS codes: every word lies within `N - k` of the
    /// code, so a nearest codeword shares at least `k` positions with it, and
    /// any `k` positions determine a codeword.
    InformationSet,
}

/// A word of length `n + 1` for some code; the last coordinate is the projective one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ReceivedWord {
    coords: Vec<FieldElement>,
}

impl ReceivedWord {
    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Coordinates on `D`, without the projective one.
    pub fn affine(&self) -> &[FieldElement] {
        &self.coords[..self.coords.len() - 1]
    }

    pub fn projective(&self) -> FieldElement {
        self.coords[self.coords.len() - 1]
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| a.checked_add(b))
            .collect::<Result<_>>()?;
        Ok(ReceivedWord { coords })
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        ReceivedWord {
            coords: self.coords.iter().map(|&a| a * c).collect(),
        }
    }

    pub fn weight(&self) -> usize {
        self.coords.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for ReceivedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coords.iter().map(|c| c.value()).join(","))
    }
}

impl fmt::Debug for ReceivedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Number of coordinates where `u` and `v` differ.
pub fn hamming_distance(u: &ReceivedWord, v: &ReceivedWord) -> Result<usize> {
    hamming(u.coords(), v.coords())
}

fn hamming(u: &[FieldElement], v: &[FieldElement]) -> Result<usize> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    Ok(u.iter().zip(v).filter(|(a, b)| a != b).count())
}

fn parse_elements(field: FiniteField, text: &str) -> Result<Vec<FieldElement>> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let v: u64 = t
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad element {t:?}")))?;
            field.element(v)
        })
        .collect()
}

/// Calls `visit` on every codeword spanned by `rows` (raw encodings), stopping
/// early on `Break`.
fn for_each_codeword(
    field: FiniteField,
    rows: &[Vec<u32>],
    mut visit: impl FnMut(&[u32]) -> ControlFlow<()>,
) {
    let q = field.order();
    let len = rows.first().map_or(0, Vec::len);
    // scaled[i][c] = c * rows[i]
    let scaled: Vec<Vec<Vec<u32>>> = rows
        .iter()
        .map(|row| {
            (0..q)
                .map(|c| row.iter().map(|&x| field.mul_raw(c, x)).collect())
                .collect()
        })
        .collect();
    let mut partial = vec![vec![0u32; len]; rows.len() + 1];

    fn rec(
        field: FiniteField,
        level: usize,
        scaled: &[Vec<Vec<u32>>],
        partial: &mut [Vec<u32>],
        visit: &mut dyn FnMut(&[u32]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if level == scaled.len() {
            return visit(&partial[level]);
        }
        for term in &scaled[level] {
            let (lo, hi) = partial.split_at_mut(level + 1);
            for ((out, &a), &b) in hi[0].iter_mut().zip(&lo[level]).zip(term) {
                *out = field.add_raw(a, b);
            }
            rec(field, level + 1, scaled, partial, visit)?;
        }
        ControlFlow::Continue(())
    }

    let _ = rec(field, 0, &scaled, &mut partial, &mut visit);
}

fn raw(coords: &[FieldElement]) -> Vec<u32> {
    coords.iter().map(|c| c.value()).collect()
}

fn exhaustive_distance(field: FiniteField, rows: &[Vec<u32>], word: &[u32]) -> usize {
    let mut best = word.len();
    for_each_codeword(field, rows, |c| {
        let d = c.iter().zip(word).filter(|(a, b)| a != b).count();
        best = best.min(d);
        if best == 0 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    best
}

fn pow_u128(base: u32, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base as u128))
}

#[derive(Clone, PartialEq, Eq)]
pub struct GprsCode {
    field: FiniteField,
    excluded: Vec<FieldElement>,
    k: usize,
    points: Vec<FieldElement>,
    generator: Matrix,
}

impl GprsCode {
    /// Builds `GPRS_q(F_q \ excluded, k)` with the generator whose rows are
    /// `1, x, ..., x^{k-1}` on `D` and whose last column is `(0, ..., 0, 1)`.
    pub fn new(field: FiniteField, excluded: &[FieldElement], k: usize) -> Result<Self> {
        let q = field.order() as usize;
        if q < 4 {
            return Err(Error::InvalidCode(format!("q = {q} is below 4")));
        }
        if excluded.is_empty() {
            return Err(Error::InvalidCode(
                "the evaluation set must be a proper subset of the field".into(),
            ));
        }
        if excluded.iter().any(|a| a.field() != field) {
            return Err(Error::CrossField);
        }
        let mut sorted = excluded.to_vec();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidCode(format!("{} excluded twice", w[0])));
        }
        let l = sorted.len();
        if k < 2 || k + l + 1 > q {
            return Err(Error::InvalidCode(format!(
                "need 2 <= k <= q - l - 1 = {}, got k = {k}",
                q as i64 - l as i64 - 1
            )));
        }
        let points: Vec<FieldElement> = field
            .elements(false)
            .into_iter()
            .filter(|y| sorted.binary_search(y).is_err())
            .collect();
        let n = points.len();
        let generator = Matrix::from_fn(field, k, n + 1, |i, j| {
            if j < n {
                points[j].powu(i as u64)
            } else if i == k - 1 {
                field.one()
            } else {
                field.zero()
            }
        });
        Ok(GprsCode {
            field,
            excluded: sorted,
            k,
            points,
            generator,
        })
    }

    /// The primitive projective code, `D = F_q^*`.
    pub fn primitive(field: FiniteField, k: usize) -> Result<Self> {
        Self::new(field, &[field.zero()], k)
    }

    /// Parses `"q=<p^s>;exclude=<e1,e2,...>;k=<k>"`, optionally with `mod=<c0,...,cs>`.
    pub fn parse(spec: &str) -> Result<Self> {
        let (mut q, mut exclude, mut k, mut modulus) = (None, None, None, None);
        for part in spec.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {part:?}")))?;
            match key.trim() {
                "q" => q = Some(value.trim()),
                "exclude" => exclude = Some(value.trim()),
                "k" => k = Some(value.trim()),
                "mod" => modulus = Some(value.trim()),
                other => return Err(Error::Parse(format!("unknown code key {other:?}"))),
            }
        }
        let q = q.ok_or_else(|| Error::Parse("code spec lacks q".into()))?;
        let field = FiniteField::parse(q, modulus)?;
        let excluded = parse_elements(field, exclude.unwrap_or(""))?;
        let k = k
            .ok_or_else(|| Error::Parse("code spec lacks k".into()))?
            .parse()
            .map_err(|_| Error::Parse("k must be an integer".into()))?;
        Self::new(field, &excluded, k)
    }

    /// Canonical spec string accepted by [`GprsCode::parse`].
    pub fn spec(&self) -> String {
        let mut s = format!(
            "q={};exclude={};k={}",
            self.field.spec(),
            self.excluded.iter().map(|e| e.value()).join(","),
            self.k
        );
        if let Some(m) = self.field.modulus() {
            s.push_str(&format!(";mod={}", m.iter().join(",")));
        }
        s
    }

    pub fn field(&self) -> FiniteField {
        self.field
    }

    pub fn excluded(&self) -> &[FieldElement] {
        &self.excluded
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The evaluation set `D`, ascending.
    pub fn points(&self) -> &[FieldElement] {
        &self.points
    }

    /// `|D| = q - l`.
    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// Word length `n + 1`.
    pub fn length(&self) -> usize {
        self.points.len() + 1
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// Validates coordinates as a word of this code.
    pub fn word(&self, coords: Vec<FieldElement>) -> Result<ReceivedWord> {
        if coords.len() != self.length() {
            return Err(Error::LengthMismatch {
                expected: self.length(),
                found: coords.len(),
            });
        }
        if coords.iter().any(|c| c.field() != self.field) {
            return Err(Error::CrossField);
        }
        Ok(ReceivedWord { coords })
    }

    /// Parses comma-separated canonical encodings.
    pub fn parse_word(&self, text: &str) -> Result<ReceivedWord> {
        self.word(parse_elements(self.field, text)?)
    }

    pub fn zero_word(&self) -> ReceivedWord {
        ReceivedWord {
            coords: vec![self.field.zero(); self.length()],
        }
    }

    /// `(f(D), c_{k-1}(f))` without degree restrictions.
    fn evaluate(&self, f: &Polynomial) -> Result<ReceivedWord> {
        if f.field() != self.field {
            return Err(Error::CrossField);
        }
        let mut coords = f.eval_all(&self.points)?;
        coords.push(f.coefficient(self.k - 1));
        Ok(ReceivedWord { coords })
    }

    /// Codeword of a message polynomial of degree `< k`.
    pub fn encode(&self, f: &Polynomial) -> Result<ReceivedWord> {
        if let Degree::Finite(d) = f.degree() {
            if d >= self.k {
                return Err(Error::DegreeTooLarge {
                    degree: d,
                    max: self.k - 1,
                });
            }
        }
        self.evaluate(f)
    }

    /// `(u(D), c_{k-1}(u))` for `deg u <= q - 2`.
    pub fn word_from_poly(&self, u: &Polynomial) -> Result<ReceivedWord> {
        let max = self.field.order() as usize - 2;
        if let Degree::Finite(d) = u.degree() {
            if d > max {
                return Err(Error::DegreeTooLarge { degree: d, max });
            }
        }
        self.evaluate(u)
    }

    /// Lagrange interpolant of the first `n` coordinates.
    pub fn interpolant(&self, u: &ReceivedWord) -> Result<Polynomial> {
        self.check_word(u)?;
        lagrange_interpolate(&self.points, u.affine())
    }

    fn check_word(&self, u: &ReceivedWord) -> Result<()> {
        if u.len() != self.length() {
            return Err(Error::LengthMismatch {
                expected: self.length(),
                found: u.len(),
            });
        }
        if u.coords.iter().any(|c| c.field() != self.field) {
            return Err(Error::CrossField);
        }
        Ok(())
    }

    /// Membership: the interpolant has degree `< k` and its `x^{k-1}` coefficient
    /// equals the last coordinate.
    pub fn is_codeword(&self, u: &ReceivedWord) -> bool {
        match self.interpolant(u) {
            Ok(f) => f.degree().at_most(self.k - 1) && f.coefficient(self.k - 1) == u.projective(),
            Err(_) => false,
        }
    }

    fn raw_rows(&self) -> Vec<Vec<u32>> {
        (0..self.k).map(|i| raw(self.generator.row(i))).collect()
    }

    /// Exact distance from `u` to the code by enumerating all `q^k` codewords.
    pub fn error_distance(&self, u: &ReceivedWord, budget: &Budget) -> Result<usize> {
        self.check_word(u)?;
        budget.check_codewords(pow_u128(self.field.order(), self.k))?;
        Ok(exhaustive_distance(
            self.field,
            &self.raw_rows(),
            &raw(u.coords()),
        ))
    }

    pub fn error_distance_with(
        &self,
        u: &ReceivedWord,
        strategy: DistanceStrategy,
        budget: &Budget,
    ) -> Result<usize> {
        match strategy {
            DistanceStrategy::Exhaustive => self.error_distance(u, budget),
            DistanceStrategy::InformationSet => self.error_distance_information_set(u),
        }
    }

    /// Codeword agreeing with `u` on the coordinate set `positions` (size `k`).
    fn codeword_through(&self, u: &ReceivedWord, positions: &[usize]) -> Result<Polynomial> {
        let n = self.n();
        let (affine, projective): (Vec<usize>, Vec<usize>) =
            positions.iter().partition(|&&i| i < n);
        let nodes: Vec<FieldElement> = affine.iter().map(|&i| self.points[i]).collect();
        let values: Vec<FieldElement> = affine.iter().map(|&i| u.coords[i]).collect();
        if projective.is_empty() {
            return lagrange_interpolate(&nodes, &values);
        }
        // Leading coefficient fixed by the last coordinate; the remaining k - 1
        // conditions are met by adding an interpolant of degree <= k - 2.
        let lead = u.projective();
        let vanishing = Polynomial::from_roots(self.field, &nodes)?.scale(lead);
        let low = lagrange_interpolate(&nodes, &values)?;
        vanishing.checked_add(&low)
    }

    /// Exact distance for this MDS code by minimizing over information sets.
    pub fn error_distance_information_set(&self, u: &ReceivedWord) -> Result<usize> {
        self.check_word(u)?;
        let mut best = self.length();
        for positions in (0..self.length()).combinations(self.k) {
            let f = self.codeword_through(u, &positions)?;
            let c = self.evaluate(&f)?;
            best = best.min(hamming(c.coords(), u.coords())?);
            if best == 0 {
                break;
            }
        }
        Ok(best)
    }

    pub fn minimum_distance(&self, mode: Mode, budget: &Budget) -> Result<usize> {
        match mode {
            Mode::Formula => Ok(self.n() + 1 - self.k + 1),
            Mode::BruteForce => {
                budget.check_codewords(pow_u128(self.field.order(), self.k))?;
                let mut best = usize::MAX;
                for_each_codeword(self.field, &self.raw_rows(), |c| {
                    let w = c.iter().filter(|&&x| x != 0).count();
                    if w > 0 {
                        best = best.min(w);
                    }
                    ControlFlow::Continue(())
                });
                Ok(best)
            }
        }
    }

    /// Covering radius. The brute-force mode labels every one of the `q^{n+1}`
    /// words with its exact error distance by a breadth-first search of the
    /// Hamming graph started from all codewords, and returns the largest label.
    pub fn covering_radius(&self, mode: Mode, budget: &Budget) -> Result<usize> {
        match mode {
            Mode::Formula => Ok(self.n() + 1 - self.k),
            Mode::BruteForce => {
                let dist = self.all_error_distances(budget)?;
                Ok(dist.into_iter().max().unwrap_or(0) as usize)
            }
        }
    }

    /// Error distance of every word, indexed by `Σ coords[j] q^j`.
    pub fn all_error_distances(&self, budget: &Budget) -> Result<Vec<u8>> {
        let q = self.field.order() as usize;
        let len = self.length();
        let words = pow_u128(q as u32, len);
        let required = words.saturating_mul(((q - 1) * len) as u128);
        if required > budget.evaluations as u128 {
            return Err(Error::BudgetExceeded {
                required,
                cap: budget.evaluations,
            });
        }
        budget.check_codewords(pow_u128(q as u32, self.k))?;
        let words = words as usize;
        let place: Vec<usize> = (0..len).map(|j| q.pow(j as u32)).collect();
        let mut dist = vec![u8::MAX; words];
        let mut queue = VecDeque::new();
        for_each_codeword(self.field, &self.raw_rows(), |c| {
            let idx: usize = c.iter().zip(&place).map(|(&v, &p)| v as usize * p).sum();
            dist[idx] = 0;
            queue.push_back(idx);
            ControlFlow::Continue(())
        });
        while let Some(idx) = queue.pop_front() {
            let next = dist[idx] + 1;
            for &p in &place {
                let digit = (idx / p) % q;
                let base = idx - digit * p;
                for v in 0..q {
                    let nb = base + v * p;
                    if dist[nb] == u8::MAX {
                        dist[nb] = next;
                        queue.push_back(nb);
                    }
                }
            }
        }
        Ok(dist)
    }

    /// Decodes a word index used by [`GprsCode::all_error_distances`].
    pub fn word_at_index(&self, mut idx: usize) -> ReceivedWord {
        let q = self.field.order() as usize;
        let coords = (0..self.length())
            .map(|_| {
                let v = idx % q;
                idx /= q;
                self.field.element(v as u64).expect("digit below q")
            })
            .collect();
        ReceivedWord { coords }
    }
}

impl fmt::Debug for GprsCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GprsCode({})", self.spec())
    }
}

/// Checks the generator of `code` with the all-minors test.
pub fn generator_is_mds(code: &GprsCode) -> Result<bool> {
    Ok(mds_generator_check(code.generator(), code.k())?.is_mds)
}

/// Plain `GRS_q(D, k)`: evaluations of polynomials of degree `< k` on `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrsCode {
    field: FiniteField,
    points: Vec<FieldElement>,
    k: usize,
}

impl GrsCode {
    pub fn new(field: FiniteField, points: &[FieldElement], k: usize) -> Result<Self> {
        let n = points.len();
        if k < 1 || k >= n || n > field.order() as usize {
            return Err(Error::InvalidCode(format!(
                "need 1 <= k < n <= q, got k = {k}, n = {n}"
            )));
        }
        if points.iter().any(|p| p.field() != field) {
            return Err(Error::CrossField);
        }
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(Error::DuplicateNode(p.value()));
            }
        }
        Ok(GrsCode {
            field,
            points: points.to_vec(),
            k,
        })
    }

    pub fn field(&self) -> FiniteField {
        self.field
    }

    pub fn points(&self) -> &[FieldElement] {
        &self.points
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn encode(&self, f: &Polynomial) -> Result<Vec<FieldElement>> {
        if let Degree::Finite(d) = f.degree() {
            if d >= self.k {
                return Err(Error::DegreeTooLarge {
                    degree: d,
                    max: self.k - 1,
                });
            }
        }
        f.eval_all(&self.points)
    }

    pub fn interpolant(&self, u: &[FieldElement]) -> Result<Polynomial> {
        lagrange_interpolate(&self.points, u)
    }

    pub fn is_codeword(&self, u: &[FieldElement]) -> Result<bool> {
        Ok(self.interpolant(u)?.degree().at_most(self.k - 1))
    }

    /// Exact distance by enumerating all `q^k` codewords.
    pub fn error_distance(&self, u: &[FieldElement], budget: &Budget) -> Result<usize> {
        if u.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                found: u.len(),
            });
        }
        if u.iter().any(|c| c.field() != self.field) {
            return Err(Error::CrossField);
        }
        budget.check_codewords(pow_u128(self.field.order(), self.k))?;
        let rows: Vec<Vec<u32>> = (0..self.k)
            .map(|i| {
                self.points
                    .iter()
                    .map(|p| p.powu(i as u64).value())
                    .collect()
            })
            .collect();
        Ok(exhaustive_distance(self.field, &rows, &raw(u)))
    }
}
