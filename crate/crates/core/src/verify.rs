//! Seeded parameter sweeps that check the deep-hole results against the oracles.
//!
//! A sweep walks every parameter tuple a claim admits within the requested
//! field orders, runs the closed-form prediction and an independent check, and
//! records one [`SweepRow`] per tuple. Rows are sorted before serialization, so
//! equal configurations give byte-identical reports.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::codes::generator_is_mds;
use crate::codes::{Budget, DistanceStrategy, GprsCode, GrsCode, Mode, ReceivedWord};
use crate::deepholes::{
    build_family_word, is_deep_hole_mds_extension, is_deep_hole_oracle_with, thm14_criterion,
    thm15_criterion, thm15_expression, validate_mds_witness, validate_thm14_witness,
    validate_thm15_witness, vp_binomial, zero_sum_subset, Witness, WordFamilySpec,
};
use crate::error::{Error, Result};
use crate::galois::{prime_power, FieldElement, FiniteField};

/// Largest `q^k` for which the sweep oracle enumerates every codeword; above it
/// the information-set route is used.
pub const DEFAULT_EXHAUSTIVE_LIMIT: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    Thm11,
    Thm14,
    Thm15,
    Thm16,
    Thm17,
    Lemma25,
    Lemma26,
    Lemma28,
    Lemma29,
}

impl Claim {
    pub const ALL: [Claim; 9] = [
        Claim::Thm11,
        Claim::Thm14,
        Claim::Thm15,
        Claim::Thm16,
        Claim::Thm17,
        Claim::Lemma25,
        Claim::Lemma26,
        Claim::Lemma28,
        Claim::Lemma29,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Thm11 => "thm11",
            Claim::Thm14 => "thm14",
            Claim::Thm15 => "thm15",
            Claim::Thm16 => "thm16",
            Claim::Thm17 => "thm17",
            Claim::Lemma25 => "lemma25",
            Claim::Lemma26 => "lemma26",
            Claim::Lemma28 => "lemma28",
            Claim::Lemma29 => "lemma29",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown claim {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub claims: Vec<Claim>,
    pub q_list: Vec<u64>,
    /// Exclusion sets of one size beyond this count are sampled instead of enumerated.
    pub max_exclusion_sets_per_q: usize,
    /// Random words checked per code (and per excluded point for the shifted family).
    pub words_per_config: usize,
    /// Random received words per field order for the interpolant-degree distance bounds.
    pub liwan_trials: usize,
    pub seed: u64,
    pub budget: Budget,
    pub exhaustive_limit: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            claims: Claim::ALL.to_vec(),
            q_list: vec![5, 7],
            max_exclusion_sets_per_q: 30,
            words_per_config: 20,
            liwan_trials: 100,
            seed: 0,
            budget: Budget::default(),
            exhaustive_limit: DEFAULT_EXHAUSTIVE_LIMIT,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Agreed,
    Refuted,
    Skipped,
}

/// One checked parameter tuple. `case` indexes trials or the `t` of the valuation check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub claim: Claim,
    pub q: u64,
    #[serde(serialize_with = "comma_joined")]
    pub excluded: Vec<u32>,
    pub k: Option<usize>,
    pub a_j: Option<u32>,
    pub case: Option<usize>,
    pub predicted: String,
    pub observed: String,
    pub status: Status,
    pub witness: Option<String>,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn comma_joined<S: Serializer>(v: &[u32], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&v.iter().join(","))
}

type RowKey<'a> = (
    Claim,
    u64,
    &'a [u32],
    Option<usize>,
    Option<u32>,
    Option<usize>,
);

impl SweepRow {
    fn new(claim: Claim, q: u64) -> Self {
        SweepRow {
            claim,
            q,
            excluded: Vec::new(),
            k: None,
            a_j: None,
            case: None,
            predicted: String::new(),
            observed: String::new(),
            status: Status::Skipped,
            witness: None,
            detail: String::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn skipped(claim: Claim, q: u64, detail: impl Into<String>) -> Self {
        SweepRow {
            detail: detail.into(),
            ..SweepRow::new(claim, q)
        }
    }

    fn with_code(mut self, code: &GprsCode) -> Self {
        self.excluded = code.excluded().iter().map(|e| e.value()).collect();
        self.k = Some(code.k());
        self
    }

    fn settle(mut self, predicted: impl Into<String>, observed: impl Into<String>) -> Self {
        self.predicted = predicted.into();
        self.observed = observed.into();
        self.status = if self.predicted == self.observed {
            Status::Agreed
        } else {
            Status::Refuted
        };
        self
    }

    fn refute(mut self, why: impl fmt::Display) -> Self {
        self.status = Status::Refuted;
        if self.detail.is_empty() {
            self.detail = why.to_string();
        } else {
            self.detail = format!("{}; {why}", self.detail);
        }
        self
    }

    fn sort_key(&self) -> RowKey<'_> {
        (
            self.claim,
            self.q,
            &self.excluded,
            self.k,
            self.a_j,
            self.case,
        )
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub agreed: usize,
    pub refuted: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub rows: Vec<SweepRow>,
    pub summary: Summary,
}

impl SweepReport {
    fn from_rows(config: SweepConfig, mut rows: Vec<SweepRow>) -> Self {
        rows.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let count = |s: Status| rows.iter().filter(|r| r.status == s).count();
        let summary = Summary {
            total: rows.len(),
            agreed: count(Status::Agreed),
            refuted: count(Status::Refuted),
            skipped: count(Status::Skipped),
        };
        SweepReport {
            config,
            rows,
            summary,
        }
    }

    pub fn is_refuted(&self) -> bool {
        self.summary.refuted > 0
    }

    pub fn refuted_rows(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| r.status == Status::Refuted)
    }

    pub fn rows_for(&self, claim: Claim) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(move |r| r.claim == claim)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Rows only, with one header line.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row).expect("row serializes");
        }
        if self.rows.is_empty() {
            w.write_record([
                "claim",
                "q",
                "excluded",
                "k",
                "a_j",
                "case",
                "predicted",
                "observed",
                "status",
                "witness",
                "detail",
            ])
            .expect("header writes");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8")
    }
}

/// Folds integers into one seed with the splitmix64 finalizer.
fn mix(parts: &[u64]) -> u64 {
    let mut h: u64 = 0x9E37_79B9_7F4A_7C15;
    for &p in parts {
        h ^= p;
        h = h.wrapping_add(0x9E37_79B9_7F4A_7C15);
        h = (h ^ (h >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        h = (h ^ (h >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        h ^= h >> 31;
    }
    h
}

fn row_rng(
    seed: u64,
    claim: Claim,
    q: u64,
    excluded: &[u32],
    k: usize,
    a_j: Option<u32>,
) -> ChaCha8Rng {
    let mut parts = vec![
        seed,
        claim as u64,
        q,
        k as u64,
        a_j.map_or(u64::MAX, u64::from),
    ];
    parts.extend(excluded.iter().map(|&e| e as u64));
    ChaCha8Rng::seed_from_u64(mix(&parts))
}

fn binomial(n: u64, r: u64) -> u128 {
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Exclusion sets of size `l` in `F_q`: all of them when there are at most `cap`,
/// otherwise `cap` distinct sets drawn with a generator seeded by `(seed, q, l)`.
/// Sorted either way.
pub fn exclusion_sets(q: u64, l: usize, cap: usize, seed: u64) -> Vec<Vec<u32>> {
    if binomial(q, l as u64) <= cap as u128 {
        return (0..q as u32).combinations(l).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(mix(&[seed, q, l as u64, 0xE5]));
    let mut chosen = std::collections::BTreeSet::new();
    while chosen.len() < cap {
        let mut set: Vec<u32> = index::sample(&mut rng, q as usize, l)
            .into_iter()
            .map(|i| i as u32)
            .collect();
        set.sort_unstable();
        chosen.insert(set);
    }
    chosen.into_iter().collect()
}

fn oracle_strategy(code: &GprsCode, limit: u64) -> DistanceStrategy {
    let q = code.field().order() as u128;
    if q.checked_pow(code.k() as u32)
        .is_some_and(|c| c <= limit as u128)
    {
        DistanceStrategy::Exhaustive
    } else {
        DistanceStrategy::InformationSet
    }
}

fn strategy_name(s: DistanceStrategy) -> &'static str {
    match s {
        DistanceStrategy::Exhaustive => "exhaustive",
        DistanceStrategy::InformationSet => "information_set",
    }
}

fn label(deep: bool) -> &'static str {
    if deep {
        "deep_hole"
    } else {
        "not_deep_hole"
    }
}

fn elements(field: FiniteField, encodings: &[u32]) -> Result<Vec<FieldElement>> {
    encodings.iter().map(|&e| field.element(e as u64)).collect()
}

/// All codes of `F_q` with `l` excluded points (enumerated or sampled) and each
/// dimension `k` in `2..=k_max(l)`.
fn codes_for(
    cfg: &SweepConfig,
    field: FiniteField,
    k_max: impl Fn(usize) -> usize,
) -> Result<Vec<GprsCode>> {
    let q = field.order() as u64;
    let mut out = Vec::new();
    for l in 1..=(q as usize).saturating_sub(3) {
        let top = k_max(l);
        if top < 2 {
            continue;
        }
        for set in exclusion_sets(q, l, cfg.max_exclusion_sets_per_q, cfg.seed) {
            let ex = elements(field, &set)?;
            for k in 2..=top {
                out.push(GprsCode::new(field, &ex, k)?);
            }
        }
    }
    Ok(out)
}

fn timed(f: impl FnOnce() -> Result<SweepRow>) -> Result<SweepRow> {
    let start = Instant::now();
    let mut row = f()?;
    row.elapsed = start.elapsed();
    Ok(row)
}

/// Turns a budget overrun into a skipped row; other errors propagate.
fn or_skip(claim: Claim, q: u64, code: Option<&GprsCode>, r: Result<SweepRow>) -> Result<SweepRow> {
    match r {
        Err(e @ Error::BudgetExceeded { .. }) => {
            let row = SweepRow::skipped(claim, q, e.to_string());
            Ok(match code {
                Some(c) => row.with_code(c),
                None => row,
            })
        }
        other => other,
    }
}

fn odd_field(q: u64, min_q: u64) -> std::result::Result<FiniteField, String> {
    let field = FiniteField::with_order(q).map_err(|e| e.to_string())?;
    if !field.is_odd_characteristic() {
        return Err("criteria are stated for odd characteristic only".into());
    }
    if q < min_q {
        return Err(format!("needs q >= {min_q}"));
    }
    Ok(field)
}

/// Runs every requested claim over every requested field order.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    for &q in &config.q_list {
        if prime_power(q).is_none() {
            return Err(Error::NotPrimePower(q));
        }
    }
    let mut rows = Vec::new();
    for &claim in config.claims.iter().unique() {
        for &q in config.q_list.iter().unique() {
            rows.extend(run_claim(config, claim, q)?);
        }
    }
    Ok(SweepReport::from_rows(config.clone(), rows))
}

fn run_claim(cfg: &SweepConfig, claim: Claim, q: u64) -> Result<Vec<SweepRow>> {
    let min_q = match claim {
        Claim::Thm14 | Claim::Thm16 | Claim::Thm17 => 5,
        Claim::Thm15 => 4,
        _ => 0,
    };
    let needs_odd = !matches!(claim, Claim::Lemma25 | Claim::Lemma26 | Claim::Thm11);
    let field = if needs_odd {
        match odd_field(q, min_q) {
            Ok(f) => f,
            Err(why) => return Ok(vec![SweepRow::skipped(claim, q, why)]),
        }
    } else {
        FiniteField::with_order(q)?
    };
    let mut rows = Vec::new();
    match claim {
        Claim::Thm14 => {
            let qs = q as usize;
            for code in codes_for(cfg, field, |l| (qs - 3).min(qs - l - 1))? {
                rows.push(timed(|| thm14_row(cfg, &code))?);
            }
        }
        Claim::Thm15 => {
            let qs = q as usize;
            for code in codes_for(cfg, field, |l| qs - l - 1)? {
                for &a in code.excluded() {
                    rows.push(timed(|| thm15_row(cfg, &code, a))?);
                }
            }
        }
        Claim::Thm16 => {
            for k in 2..=(q as usize - 3) {
                let code = GprsCode::primitive(field, k)?;
                rows.push(timed(|| thm16_row(cfg, &code))?);
            }
        }
        Claim::Thm17 => {
            if q > 9 {
                rows.push(SweepRow::skipped(
                    claim,
                    q,
                    "claim is stated for q in {5, 7, 9}",
                ));
            } else {
                for k in 2..=(q as usize - 2) {
                    let code = GprsCode::primitive(field, k)?;
                    rows.push(timed(|| thm17_row(cfg, &code))?);
                }
            }
        }
        Claim::Lemma25 => {
            if q < 4 {
                rows.push(SweepRow::skipped(
                    claim,
                    q,
                    "no code with k >= 2 and l >= 1",
                ));
            }
            let qs = q as usize;
            for code in codes_for(cfg, field, |l| qs - l - 1)? {
                let r = timed(|| lemma25_row(cfg, &code));
                rows.push(or_skip(claim, q, Some(&code), r)?);
            }
        }
        Claim::Lemma26 => {
            if q < 4 {
                rows.push(SweepRow::skipped(
                    claim,
                    q,
                    "no code with k >= 2 and l >= 1",
                ));
            }
            let qs = q as usize;
            for code in codes_for(cfg, field, |l| qs - l - 1)? {
                let r = timed(|| lemma26_row(cfg, &code));
                rows.push(or_skip(claim, q, Some(&code), r)?);
            }
        }
        Claim::Lemma28 => {
            if q < 5 {
                rows.push(SweepRow::skipped(claim, q, "no k with 2 <= k <= q - 3"));
            }
            for k in 2..=(q as usize).saturating_sub(3) {
                rows.push(timed(|| lemma28_row(field, k))?);
            }
        }
        Claim::Lemma29 => {
            for t in 2..q {
                rows.push(timed(|| lemma29_row(q, t))?);
            }
        }
        Claim::Thm11 => {
            let r = check_liwan_bounds_with(q, cfg.liwan_trials, cfg.seed, cfg.exhaustive_limit);
            match r {
                Ok(trial_rows) => rows.extend(trial_rows),
                Err(e @ Error::BudgetExceeded { .. }) => {
                    rows.push(SweepRow::skipped(claim, q, e.to_string()))
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(rows)
}

/// Oracle (and optionally MDS-extension) verdicts for the given words, compared
/// against one predicted verdict.
fn compare_words(
    cfg: &SweepConfig,
    code: &GprsCode,
    words: &[ReceivedWord],
    predicted: bool,
    with_mds: bool,
    mut row: SweepRow,
) -> Result<SweepRow> {
    let strategy = oracle_strategy(code, cfg.exhaustive_limit);
    let mut observed: Option<bool> = None;
    let mut mixed = false;
    let mut problems = Vec::new();
    for u in words {
        let oracle = is_deep_hole_oracle_with(code, u, strategy, &cfg.budget)?.is_deep_hole;
        let mut verdicts = vec![oracle];
        if with_mds {
            let mds = is_deep_hole_mds_extension(code, u)?;
            if let Some(Witness::Columns(cols)) = &mds.witness {
                if !validate_mds_witness(code, u, cols)? {
                    problems.push(format!("invalid mds witness for word {u}"));
                }
            }
            verdicts.push(mds.is_deep_hole);
        }
        for v in verdicts {
            if v != predicted && problems.len() < 3 {
                problems.push(format!("counterexample word {u}"));
            }
            match observed {
                None => observed = Some(v),
                Some(o) if o != v => mixed = true,
                _ => {}
            }
        }
    }
    row.detail = format!(
        "words={} oracle={}{}",
        words.len(),
        strategy_name(strategy),
        if with_mds {
            " mds_extension=checked"
        } else {
            ""
        }
    );
    let observed = match (observed, mixed) {
        (_, true) => "mixed".to_string(),
        (Some(v), false) => label(v).to_string(),
        (None, _) => "no_words".to_string(),
    };
    let mut row = row.settle(label(predicted), observed);
    for p in problems {
        row = row.refute(p);
    }
    Ok(row)
}

fn family_words(
    code: &GprsCode,
    n: usize,
    rng: &mut ChaCha8Rng,
    pole: Option<FieldElement>,
) -> Result<Vec<ReceivedWord>> {
    (0..n)
        .map(|_| {
            let spec = match pole {
                None => WordFamilySpec::random_degree_k(code, rng),
                Some(a) => WordFamilySpec::random_shifted(code, a, rng),
            };
            build_family_word(code, &spec)
        })
        .collect()
}

fn thm14_row(cfg: &SweepConfig, code: &GprsCode) -> Result<SweepRow> {
    let q = code.field().order() as u64;
    let row = SweepRow::new(Claim::Thm14, q).with_code(code);
    let mut rng = row_rng(cfg.seed, Claim::Thm14, q, &row.excluded, code.k(), None);
    let verdict = thm14_criterion(code)?;
    let words = family_words(code, cfg.words_per_config, &mut rng, None)?;
    let mut row = compare_words(cfg, code, &words, verdict.is_deep_hole, true, row)?;
    if let Some(Witness::Subset(s)) = &verdict.witness {
        row.witness = verdict.witness.as_ref().map(ToString::to_string);
        if !validate_thm14_witness(code, s) {
            row = row.refute("witness does not validate");
        }
    }
    Ok(row)
}

fn thm15_row(cfg: &SweepConfig, code: &GprsCode, a: FieldElement) -> Result<SweepRow> {
    let field = code.field();
    let q = field.order() as u64;
    let mut row = SweepRow::new(Claim::Thm15, q).with_code(code);
    row.a_j = Some(a.value());
    let mut rng = row_rng(cfg.seed, Claim::Thm15, q, &row.excluded, code.k(), row.a_j);
    let verdict = thm15_criterion(code, a)?;
    let words = family_words(code, cfg.words_per_config, &mut rng, Some(a))?;
    let mut row = compare_words(cfg, code, &words, verdict.is_deep_hole, false, row)?;
    let p_divides_k = code.k().is_multiple_of(field.characteristic() as usize);
    if p_divides_k {
        row.detail.push_str(" p_divides_k");
        // The shortcut must agree with a full scan of the criterion expression.
        for subset in code.points().iter().copied().combinations(code.k()) {
            if thm15_expression(code, a, &subset)?.is_zero() {
                row = row.refute(format!("p | k but expression vanishes on {subset:?}"));
                break;
            }
        }
        if !verdict.is_deep_hole {
            row = row.refute("p | k yet criterion is false");
        }
    }
    if let Some(Witness::Subset(s)) = &verdict.witness {
        row.witness = verdict.witness.as_ref().map(ToString::to_string);
        if !validate_thm15_witness(code, a, s) {
            row = row.refute("witness does not validate");
        }
    }
    Ok(row)
}

fn thm16_row(cfg: &SweepConfig, code: &GprsCode) -> Result<SweepRow> {
    let q = code.field().order() as u64;
    let row = SweepRow::new(Claim::Thm16, q).with_code(code);
    let mut rng = row_rng(cfg.seed, Claim::Thm16, q, &row.excluded, code.k(), None);
    let words = family_words(code, cfg.words_per_config, &mut rng, None)?;
    let mut row = compare_words(cfg, code, &words, false, false, row)?;
    let verdict = thm14_criterion(code)?;
    if verdict.is_deep_hole {
        row = row.refute("subset criterion reports a deep hole");
    }
    let subset = zero_sum_subset(code.field(), code.k())?;
    row.witness = Some(Witness::Subset(subset.clone()).to_string());
    if !validate_thm14_witness(code, &subset) {
        row = row.refute("constructed zero-sum subset is rejected by the validator");
    }
    Ok(row)
}

fn thm17_row(cfg: &SweepConfig, code: &GprsCode) -> Result<SweepRow> {
    let field = code.field();
    let q = field.order() as u64;
    let mut row = SweepRow::new(Claim::Thm17, q).with_code(code);
    row.a_j = Some(0);
    let mut rng = row_rng(cfg.seed, Claim::Thm17, q, &row.excluded, code.k(), row.a_j);
    let words = family_words(code, cfg.words_per_config, &mut rng, Some(field.zero()))?;
    let mut row = compare_words(cfg, code, &words, true, false, row)?;
    if !thm15_criterion(code, field.zero())?.is_deep_hole {
        row = row.refute("subset criterion reports no deep hole");
    }
    Ok(row)
}

fn lemma25_row(cfg: &SweepConfig, code: &GprsCode) -> Result<SweepRow> {
    let q = code.field().order() as u64;
    let formula = code.minimum_distance(Mode::Formula, &cfg.budget)?;
    let brute = code.minimum_distance(Mode::BruteForce, &cfg.budget)?;
    let mds = generator_is_mds(code)?;
    let mut row = SweepRow::new(Claim::Lemma25, q)
        .with_code(code)
        .settle(formula.to_string(), brute.to_string());
    row.detail = format!("generator_mds={mds}");
    if !mds {
        row = row.refute("generator has a singular k-minor");
    }
    Ok(row)
}

fn lemma26_row(cfg: &SweepConfig, code: &GprsCode) -> Result<SweepRow> {
    let q = code.field().order() as u64;
    let formula = code.covering_radius(Mode::Formula, &cfg.budget)?;
    let brute = code.covering_radius(Mode::BruteForce, &cfg.budget)?;
    let mut row = SweepRow::new(Claim::Lemma26, q)
        .with_code(code)
        .settle(formula.to_string(), brute.to_string());
    row.detail = format!("words={}", (q as u128).pow(code.length() as u32));
    Ok(row)
}

fn lemma28_row(field: FiniteField, k: usize) -> Result<SweepRow> {
    let q = field.order() as u64;
    let subset = zero_sum_subset(field, k)?;
    let valid = subset.len() == k
        && subset.iter().all(|z| !z.is_zero())
        && subset.iter().all_unique()
        && subset.iter().copied().sum::<FieldElement>().is_zero();
    let mut row = SweepRow::new(Claim::Lemma28, q);
    row.k = Some(k);
    row.witness = Some(Witness::Subset(subset).to_string());
    Ok(row.settle("zero_sum", if valid { "zero_sum" } else { "invalid" }))
}

/// `v_p(n!)` by Legendre's formula.
pub fn legendre_factorial_valuation(n: u64, p: u64) -> u64 {
    let mut total = 0;
    let mut pk = p;
    while pk <= n {
        total += n / pk;
        pk = match pk.checked_mul(p) {
            Some(v) => v,
            None => break,
        };
    }
    total
}

fn lemma29_row(q: u64, t: u64) -> Result<SweepRow> {
    let (p, _) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let p = p as u64;
    let (m, r) = (q - 2, t - 1);
    let oracle = legendre_factorial_valuation(m, p)
        - legendre_factorial_valuation(r, p)
        - legendre_factorial_valuation(m - r, p);
    let claimed = vp_binomial(q, t)?;
    let mut row = SweepRow::new(Claim::Lemma29, q);
    row.case = Some(t as usize);
    row.detail = format!("v_p(C({m},{r})) by Legendre");
    Ok(row.settle(claimed.to_string(), oracle.to_string()))
}

/// Bounds `n - deg u(x) <= d(u, C) <= n - k` on random non-codewords of
/// random GRS codes over `F_q`, one row per trial.
pub fn check_liwan_bounds(q: u64, trials: usize, seed: u64) -> Result<Vec<SweepRow>> {
    check_liwan_bounds_with(q, trials, seed, DEFAULT_EXHAUSTIVE_LIMIT)
}

fn check_liwan_bounds_with(q: u64, trials: usize, seed: u64, limit: u64) -> Result<Vec<SweepRow>> {
    let field = FiniteField::with_order(q)?;
    let budget = Budget {
        codewords: limit,
        ..Budget::default()
    };
    if q < 3 || q > limit {
        return Err(Error::BudgetExceeded {
            required: q as u128,
            cap: limit,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(mix(&[seed, Claim::Thm11 as u64, q]));
    let mut rows = Vec::with_capacity(trials);
    for trial in 0..trials {
        let start = Instant::now();
        let n = rng.gen_range(3..=q as usize);
        let mut points = elements(
            field,
            &index::sample(&mut rng, q as usize, n)
                .into_iter()
                .map(|i| i as u32)
                .collect::<Vec<_>>(),
        )?;
        points.sort();
        let k_cap = (1..n)
            .take_while(|&k| (q as u128).pow(k as u32) <= limit as u128)
            .last()
            .unwrap_or(1);
        let k = rng.gen_range(1..=k_cap);
        let code = GrsCode::new(field, &points, k)?;
        let u = loop {
            let u: Vec<FieldElement> = (0..n)
                .map(|_| field.element(rng.gen_range(0..q)))
                .collect::<Result<_>>()?;
            if !code.is_codeword(&u)? {
                break u;
            }
        };
        let deg = code
            .interpolant(&u)?
            .degree()
            .finite()
            .expect("a non-codeword has a nonzero interpolant");
        let d = code.error_distance(&u, &budget)?;
        let (lo, hi) = (n - deg, n - k);
        let mut row = SweepRow::new(Claim::Thm11, q);
        row.k = Some(k);
        row.case = Some(trial);
        row.detail = format!(
            "D={} u={} deg={deg}",
            points.iter().map(|e| e.value()).join(" "),
            u.iter().map(|e| e.value()).join(" ")
        );
        let within = lo <= d && d <= hi;
        let mut row = row.settle(
            format!("[{lo},{hi}]"),
            if within {
                format!("[{lo},{hi}]")
            } else {
                d.to_string()
            },
        );
        if deg == k && d != n - k {
            row = row.refute("degree k word not at distance n - k");
        }
        row.elapsed = start.elapsed();
        rows.push(row);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(claims: &[Claim], q_list: &[u64]) -> SweepConfig {
        SweepConfig {
            claims: claims.to_vec(),
            q_list: q_list.to_vec(),
            words_per_config: 5,
            liwan_trials: 20,
            seed: 7,
            ..SweepConfig::default()
        }
    }

    #[test]
    fn claims_parse() {
        for c in Claim::ALL {
            assert_eq!(c.name().parse::<Claim>().unwrap(), c);
        }
        assert!("thm99".parse::<Claim>().is_err());
    }

    #[test]
    fn exclusion_sets_enumerate_or_sample() {
        assert_eq!(exclusion_sets(5, 2, 30, 0).len(), 10);
        let sampled = exclusion_sets(11, 3, 30, 4);
        assert_eq!(sampled.len(), 30);
        assert!(sampled.iter().all_unique());
        assert!(sampled
            .iter()
            .all(|s| s.len() == 3 && s.windows(2).all(|w| w[0] < w[1])));
        assert_eq!(sampled, exclusion_sets(11, 3, 30, 4));
        assert_ne!(sampled, exclusion_sets(11, 3, 30, 5));
    }

    #[test]
    fn deg_k_sweep_q5_agrees_everywhere() {
        let r = run_sweep(&cfg(&[Claim::Thm14], &[5])).unwrap();
        assert_eq!(r.summary.refuted, 0);
        assert_eq!(r.summary.skipped, 0);
        // l = 1: k = 2; l = 2: k = 2.
        assert_eq!(r.summary.total, 5 + 10);
    }

    #[test]
    fn covering_radius_sweep_q5() {
        let r = run_sweep(&cfg(&[Claim::Lemma26], &[5])).unwrap();
        assert_eq!(r.summary.refuted, 0);
        assert!(r
            .rows
            .iter()
            .any(|row| row.excluded == [3, 4] && row.k == Some(2) && row.observed == "2"));
    }

    #[test]
    fn even_characteristic_is_skipped_for_criteria() {
        let r = run_sweep(&cfg(&[Claim::Thm14, Claim::Lemma25], &[8])).unwrap();
        let thm14: Vec<_> = r.rows_for(Claim::Thm14).collect();
        assert_eq!(thm14.len(), 1);
        assert_eq!(thm14[0].status, Status::Skipped);
        assert!(r
            .rows_for(Claim::Lemma25)
            .all(|row| row.status == Status::Agreed));
    }

    #[test]
    fn valuation_sweep_against_legendre() {
        let r = run_sweep(&cfg(&[Claim::Lemma29], &[9, 25, 27])).unwrap();
        assert_eq!(r.summary.refuted, 0);
        assert_eq!(r.summary.total, 7 + 23 + 25);
    }

    #[test]
    fn liwan_rows() {
        let rows = check_liwan_bounds(5, 50, 1).unwrap();
        assert_eq!(rows.len(), 50);
        assert!(rows.iter().all(|r| r.status == Status::Agreed));
    }

    #[test]
    fn reports_are_deterministic() {
        let c = cfg(&[Claim::Thm15, Claim::Thm11], &[7]);
        let a = run_sweep(&c).unwrap();
        let b = run_sweep(&c).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_csv(), b.to_csv());
    }

    #[test]
    fn csv_and_json_carry_the_same_rows() {
        let r = run_sweep(&cfg(&[Claim::Lemma28], &[7, 9])).unwrap();
        let text = r.to_csv();
        let mut rd = csv::Reader::from_reader(text.as_bytes());
        let csv_rows: Vec<csv::StringRecord> = rd.records().map(|x| x.unwrap()).collect();
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let rows = json["rows"].as_array().unwrap();
        assert_eq!(csv_rows.len(), rows.len());
        for (c, j) in csv_rows.iter().zip(rows) {
            assert_eq!(&c[0], j["claim"].as_str().unwrap());
            assert_eq!(&c[9], j["witness"].as_str().unwrap());
        }
        assert_eq!(json["summary"]["total"], 2 + 6);
    }

    #[test]
    fn wrong_prediction_is_refuted_with_counterexample() {
        let field = FiniteField::with_order(5).unwrap();
        let code = GprsCode::new(field, &[field.zero(), field.from_int(4)], 2).unwrap();
        let c = cfg(&[Claim::Thm14], &[5]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let words = family_words(&code, 3, &mut rng, None).unwrap();
        let row = SweepRow::new(Claim::Thm14, 5).with_code(&code);
        let row = compare_words(&c, &code, &words, true, true, row).unwrap();
        assert_eq!(row.status, Status::Refuted);
        assert_eq!(row.observed, "not_deep_hole");
        assert!(row.detail.contains("counterexample word"));
        let report = SweepReport::from_rows(c, vec![row]);
        assert!(report.is_refuted());
        assert_eq!(report.summary.refuted, 1);
    }

    #[test]
    fn unknown_order_is_an_error() {
        assert!(run_sweep(&cfg(&[Claim::Thm14], &[6])).is_err());
    }
}
