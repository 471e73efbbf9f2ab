//! Exhaustive cross-checks over small ranks, one report per criterion.
//!
//! All comparisons are exact; a criterion passes only when every checked
//! case agrees.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kl::{b_coeff, decompose_euler, CharacterCache};
use crate::kw::kw_character;
use crate::laurent::LaurentPoly;
use crate::order::{succ_chain_oracle, succeq, succeq_gl};
use crate::weights::{ConnectivityMode, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_n: usize,
    /// Largest `|λ_i|` for integer order checks.
    pub order_bound: i64,
    /// Largest `|2λ_i|` for half-integer order checks.
    pub half_order_bound2: i64,
    /// Largest `|2λ_i|` for the character checks.
    pub char_bound2: i64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 4,
            order_bound: 3,
            half_order_bound2: 7,
            char_bound2: 9,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub name: &'static str,
    pub checked: usize,
    pub failure_count: usize,
    /// The first few failures.
    pub failures: Vec<String>,
    #[serde(serialize_with = "as_secs")]
    pub elapsed: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl CriterionReport {
    fn new(id: u32, name: &'static str) -> Self {
        CriterionReport {
            id,
            name,
            checked: 0,
            failure_count: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0 && self.checked > 0
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(describe());
        }
    }

    fn fail(&mut self, message: String) {
        self.failure_count += 1;
        if self.failures.len() < 10 {
            self.failures.push(message);
        }
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {}: {} ({} checks, {} failures, {:.2}s)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checked,
            self.failure_count,
            self.elapsed.as_secs_f64()
        )?;
        for m in &self.failures {
            write!(f, "\n    {m}")?;
        }
        Ok(())
    }
}

/// Weakly decreasing sequences of length `n` drawn from `values` (doubled).
pub fn g0_dominant_weights(n: usize, values: &[i64]) -> Vec<Weight> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted
        .iter()
        .copied()
        .combinations_with_replacement(n)
        .map(|v| Weight::from_doubled(v).expect("uniform parity"))
        .collect()
}

/// Dominant weights of length `n` drawn from `values` (doubled).
pub fn dominant_weights(n: usize, values: &[i64]) -> Vec<Weight> {
    g0_dominant_weights(n, values)
        .into_iter()
        .filter(Weight::is_dominant)
        .collect()
}

/// Doubled integers `-2b, …, 2b`.
fn integer_values(bound: i64) -> Vec<i64> {
    (-bound..=bound).map(|v| 2 * v).collect()
}

/// Doubled half-integers with `|2v| ≤ bound2`.
fn half_values(bound2: i64) -> Vec<i64> {
    (-bound2..=bound2)
        .filter(|v| v.rem_euclid(2) == 1)
        .collect()
}

fn timed(mut report: CriterionReport, start: Instant) -> CriterionReport {
    report.elapsed = start.elapsed();
    report
}

/// Chain order versus the `b_∞` lattice order on integer g0-dominant weights.
pub fn order_equivalence(cfg: &VerifyConfig) -> CriterionReport {
    let start = Instant::now();
    let mut report = CriterionReport::new(
        1,
        "chain order equals wt order on integer g0-dominant weights",
    );
    for n in 1..=cfg.max_n {
        let weights = g0_dominant_weights(n, &integer_values(cfg.order_bound));
        for (a, b) in weights.iter().cartesian_product(&weights) {
            match (succ_chain_oracle(a, b), succeq(a, b)) {
                (Ok(x), Ok(y)) => report.check(x == y, || format!("{a} vs {b}: chain {x}, wt {y}")),
                (x, y) => report.fail(format!("{a} vs {b}: {x:?} / {y:?}")),
            }
        }
    }
    timed(report, start)
}

/// Chain order on half-integer weights versus `wt` order after `♯` and the
/// `gl` order after `♮`.
pub fn sharp_compatibility(cfg: &VerifyConfig) -> CriterionReport {
    let start = Instant::now();
    let mut report = CriterionReport::new(2, "chain order on half-integer weights equals wt order after sharp and gl order after natural");
    for n in 1..=cfg.max_n {
        let weights = g0_dominant_weights(n, &half_values(cfg.half_order_bound2));
        for (a, b) in weights.iter().cartesian_product(&weights) {
            let chain = succ_chain_oracle(a, b);
            let sharp = a.sharp().and_then(|x| succeq(&x, &b.sharp()?));
            let natural = succeq_gl(a, b);
            match (chain, sharp, natural) {
                (Ok(x), Ok(y), Ok(z)) => report.check(x == y && y == z, || {
                    format!("{a} vs {b}: chain {x}, sharp {y}, natural {z}")
                }),
                (x, y, z) => report.fail(format!("{a} vs {b}: {x:?} / {y:?} / {z:?}")),
            }
        }
    }
    timed(report, start)
}

/// `⪰` versus `⪰_a ∘ ♭` on integer g0-dominant weights without zeros.
pub fn flat_compatibility(cfg: &VerifyConfig) -> CriterionReport {
    let start = Instant::now();
    let mut report = CriterionReport::new(
        3,
        "wt order equals gl order after flat on nonzero integer weights",
    );
    let values: Vec<i64> = integer_values(cfg.order_bound)
        .into_iter()
        .filter(|&v| v != 0)
        .collect();
    for n in 1..=cfg.max_n {
        let weights = g0_dominant_weights(n, &values);
        for (a, b) in weights.iter().cartesian_product(&weights) {
            match (succeq(a, b), succeq_gl(a, b)) {
                (Ok(x), Ok(y)) => report.check(x == y, || format!("{a} vs {b}: wt {x}, gl {y}")),
                (x, y) => report.fail(format!("{a} vs {b}: {x:?} / {y:?}")),
            }
        }
    }
    timed(report, start)
}

/// Outcome of the character checks (criteria 4 to 8).
pub struct CharacterReports {
    pub inversion: CriterionReport,
    pub consistency: CriterionReport,
    pub sanity: CriterionReport,
    pub closed_formula: CriterionReport,
    pub exactness: CriterionReport,
}

impl CharacterReports {
    pub fn into_vec(self) -> Vec<CriterionReport> {
        vec![
            self.inversion,
            self.consistency,
            self.sanity,
            self.closed_formula,
            self.exactness,
        ]
    }
}

struct Exactness<'a>(&'a mut CriterionReport);

impl Exactness<'_> {
    /// Records one exact evaluation; `NonExactDivision` is a failure.
    fn track<T>(&mut self, what: impl FnOnce() -> String, r: &Result<T>) {
        self.0.checked += 1;
        if let Err(e @ Error::NonExactDivision(_)) = r {
            self.0.fail(format!("{}: {e}", what()));
        }
    }
}

pub fn character_checks(cfg: &VerifyConfig) -> CharacterReports {
    let mut inversion =
        CriterionReport::new(4, "sum over nu of a(lambda,nu) b(nu,mu) is the identity");
    let mut consistency =
        CriterionReport::new(5, "ch E(lambda) equals the sum of a(lambda,mu) ch L(mu)");
    let mut sanity = CriterionReport::new(
        6,
        "ch L is symmetric, non-negative, with top coefficient 2^ceil(n/2); typical ch L = ch E",
    );
    let mut closed_formula = CriterionReport::new(
        7,
        "closed formulas equal ch L on totally connected and disconnected weights",
    );
    let mut exactness = CriterionReport::new(8, "no inexact division in criteria 4-7");
    let cache = CharacterCache::new();
    let values = half_values(cfg.char_bound2);

    let t4 = Instant::now();
    let mut t5 = Duration::ZERO;
    let mut t6 = Duration::ZERO;
    let mut t7 = Duration::ZERO;
    let mut b_memo: HashMap<(Weight, Weight), Result<i64>> = HashMap::new();
    for n in 1..=cfg.max_n {
        let weights = dominant_weights(n, &values);
        let mut decompositions = BTreeMap::new();
        for lam in &weights {
            match decompose_euler(lam) {
                Ok(d) => {
                    decompositions.insert(lam.clone(), d);
                }
                Err(e) => inversion.fail(format!("decompose {lam}: {e}")),
            }
        }

        // criterion 4
        for (lam, row) in &decompositions {
            for mu in &weights {
                let mut sum = 0i64;
                let mut error = None;
                for entry in row {
                    let b = b_memo
                        .entry((entry.weight.clone(), mu.clone()))
                        .or_insert_with(|| b_coeff(&entry.weight, mu));
                    match b {
                        Ok(b) => sum += entry.coeff * *b,
                        Err(e) => error = Some(e.clone()),
                    }
                }
                match error {
                    Some(e) => inversion.fail(format!("b coefficients for {lam}, {mu}: {e}")),
                    None => {
                        let expected = i64::from(lam == mu);
                        inversion.check(sum == expected, || {
                            format!("lambda {lam}, mu {mu}: sum {sum}, expected {expected}")
                        });
                    }
                }
            }
        }

        // criterion 5
        let start = Instant::now();
        for (lam, row) in &decompositions {
            let ch_e = cache.euler(lam);
            Exactness(&mut exactness).track(|| format!("ch E({lam})"), &ch_e);
            let mut sum = LaurentPoly::zero(n);
            let mut error = None;
            for entry in row {
                let ch_l = cache.irreducible(&entry.weight);
                Exactness(&mut exactness).track(|| format!("ch L({})", entry.weight), &ch_l);
                match ch_l {
                    Ok(ch) => sum = &sum + &ch.scale(&BigInt::from(entry.coeff)),
                    Err(e) => error = Some(e),
                }
            }
            match (ch_e, error) {
                (Ok(ch_e), None) => consistency.check(ch_e == sum, || {
                    format!("{lam}: ch E differs from the sum of ch L")
                }),
                (ch_e, error) => consistency.fail(format!("{lam}: {:?} / {error:?}", ch_e.err())),
            }
        }
        t5 += start.elapsed();

        // criterion 6
        let start = Instant::now();
        let top = BigInt::one() << n.div_ceil(2);
        for lam in &weights {
            let ch = cache.irreducible(lam);
            Exactness(&mut exactness).track(|| format!("ch L({lam})"), &ch);
            let ch = match ch {
                Ok(ch) => ch,
                Err(e) => {
                    sanity.fail(format!("ch L({lam}): {e}"));
                    continue;
                }
            };
            sanity.check(ch.is_symmetric(), || {
                format!("ch L({lam}) is not W-symmetric")
            });
            sanity.check(ch.has_nonnegative_coeffs(), || {
                format!("ch L({lam}) has a negative coefficient")
            });
            let c = ch.coeff(lam.doubled());
            sanity.check(c == top, || {
                format!("ch L({lam}) has top coefficient {c}, expected {top}")
            });
            if lam.is_typical().unwrap_or(false) {
                let same = cache.euler(lam).map(|e| e == ch).unwrap_or(false);
                sanity.check(same, || format!("typical {lam}: ch L differs from ch E"));
            }
        }
        t6 += start.elapsed();

        // criterion 7
        let start = Instant::now();
        for lam in &weights {
            let mode = match lam.connectivity() {
                Ok(c) => c.mode,
                Err(e) => {
                    closed_formula.fail(format!("connectivity of {lam}: {e}"));
                    continue;
                }
            };
            if mode == ConnectivityMode::Mixed {
                continue;
            }
            let kw = kw_character(lam);
            Exactness(&mut exactness).track(|| format!("closed formula at {lam}"), &kw);
            match (kw, cache.irreducible(lam)) {
                (Ok(kw), Ok(ch)) => closed_formula.check(kw.character == ch, || {
                    format!("{lam} ({mode:?}): closed formula differs from ch L")
                }),
                (kw, ch) => closed_formula.fail(format!("{lam}: {:?} / {:?}", kw.err(), ch.err())),
            }
        }
        t7 += start.elapsed();
    }
    inversion.elapsed = t4.elapsed() - t5 - t6 - t7;
    consistency.elapsed = t5;
    sanity.elapsed = t6;
    closed_formula.elapsed = t7;
    exactness.elapsed = t4.elapsed();
    CharacterReports {
        inversion,
        consistency,
        sanity,
        closed_formula,
        exactness,
    }
}

/// Frozen hand-derived values.
pub mod golden {
    use super::*;

    fn poly(n: usize, terms: &[(&[i64], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))))
            .unwrap()
    }

    /// `ch E(1/2,-1/2) = 2(x1^{1/2}x2^{-1/2} + x1^{-1/2}x2^{1/2})`.
    pub fn euler_half() -> (Weight, LaurentPoly) {
        (
            Weight::from_doubled(vec![1, -1]).unwrap(),
            poly(2, &[(&[1, -1], 2), (&[-1, 1], 2)]),
        )
    }

    /// `ch E(3/2,-3/2) = 2(x1+x2)(x1²+x1x2+x2²)/(x1x2)^{3/2}`.
    pub fn euler_three_halves() -> (Weight, LaurentPoly) {
        (
            Weight::from_doubled(vec![3, -3]).unwrap(),
            poly(
                2,
                &[(&[3, -3], 2), (&[1, -1], 4), (&[-1, 1], 4), (&[-3, 3], 2)],
            ),
        )
    }

    /// `ch L(3/2,-3/2) = ch E(3/2,-3/2) - ch E(1/2,-1/2)`, dimension 8.
    pub fn irreducible_three_halves() -> (Weight, LaurentPoly) {
        (
            Weight::from_doubled(vec![3, -3]).unwrap(),
            poly(
                2,
                &[(&[3, -3], 2), (&[1, -1], 2), (&[-1, 1], 2), (&[-3, 3], 2)],
            ),
        )
    }

    /// `[E(5/2,3/2,-5/2)] = [L(5/2,3/2,-5/2)] + [L(3/2,1/2,-1/2)]`.
    pub fn q3_decomposition() -> (Weight, Vec<(Weight, Vec<u32>)>) {
        (
            Weight::from_doubled(vec![5, 3, -5]).unwrap(),
            vec![
                (Weight::from_doubled(vec![5, 3, -5]).unwrap(), vec![0]),
                (Weight::from_doubled(vec![3, 1, -1]).unwrap(), vec![1]),
            ],
        )
    }
}

pub fn golden_regressions() -> CriterionReport {
    let start = Instant::now();
    let mut report = CriterionReport::new(9, "golden regressions");
    let compare = |report: &mut CriterionReport,
                   label: &str,
                   got: Result<LaurentPoly>,
                   expected: LaurentPoly| match got {
        Ok(got) => report.check(got == expected, || {
            format!("{label}: got {got}, expected {expected}")
        }),
        Err(e) => report.fail(format!("{label}: {e}")),
    };
    let (w, ch) = golden::euler_half();
    compare(
        &mut report,
        "ch E(1/2,-1/2)",
        crate::euler::euler_character(&w),
        ch,
    );
    let (w, ch) = golden::euler_three_halves();
    compare(
        &mut report,
        "ch E(3/2,-3/2)",
        crate::euler::euler_character(&w),
        ch,
    );
    let (w, ch) = golden::irreducible_three_halves();
    let got = crate::kl::irreducible_character(&w);
    if let Ok(g) = &got {
        let dim = g.specialize_ones();
        report.check(dim == BigInt::from(8), || {
            format!("dim L(3/2,-3/2) = {dim}, expected 8")
        });
    }
    compare(&mut report, "ch L(3/2,-3/2)", got, ch);
    let (lam, expected) = golden::q3_decomposition();
    match decompose_euler(&lam) {
        Ok(d) => {
            let got: Vec<(Weight, Vec<u32>)> = d
                .into_iter()
                .map(|e| (e.weight, e.theta.unwrap_or_default()))
                .collect();
            report.check(got == expected, || {
                format!("decomposition of E({lam}): got {got:?}")
            });
        }
        Err(e) => report.fail(format!("decompose {lam}: {e}")),
    }
    timed(report, start)
}

/// Runs every criterion in order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CriterionReport> {
    let mut out = vec![
        order_equivalence(cfg),
        sharp_compatibility(cfg),
        flat_compatibility(cfg),
    ];
    out.extend(character_checks(cfg).into_vec());
    out.push(golden_regressions());
    out
}
