//! Raising operators and the transition matrices between Euler
//! characteristics and irreducible modules.
//!
//! `a_{λμ} = 1` iff `λ = R_θ(μ)` for some `θ ∈ {0,1}^r`, giving
//! `[E(λ)] = Σ_μ a_{λμ} [L(μ)]`. The inverse matrix is
//! `b_{λμ} = Σ_θ (-1)^{|θ|}` over `θ ∈ Z_+^r` with `λ = R'_θ(μ)`, giving
//! `ch L(λ) = Σ_μ b_{λμ} ch E(μ)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use itertools::Itertools;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euler::euler_character;
use crate::laurent::LaurentPoly;
use crate::order::lower_interval;
use crate::weights::{is_regular, Weight};

/// Hard cap on the shift searched by a single raising operator.
const MAX_SHIFT: i64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionEntry {
    pub weight: Weight,
    pub coeff: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<Vec<u32>>,
}

/// Which end of the nested pairs the composition starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// `R_θ`: the innermost pair is raised first.
    Inner,
    /// `R'_θ`: the outermost pair is raised first.
    Outer,
}

/// `R_{i,j}` on doubled entries; returns the shifted (unsorted) entries.
fn raise(entries: &[i64], i: usize, j: usize) -> Result<Vec<i64>> {
    let n = entries.len();
    // blocking witnesses R_{k,l}(λ) over enclosing pairs of the same weight
    let witnesses = (0..i)
        .cartesian_product(j + 1..n)
        .filter(|&(k, l)| entries[k] + entries[l] == 0)
        .map(|(k, l)| raise(entries, k, l))
        .collect::<Result<Vec<_>>>()?;
    let shifted = |base: &[i64], a: i64| {
        let mut v = base.to_vec();
        v[i] += 2 * a;
        v[j] -= 2 * a;
        v
    };
    (1..=MAX_SHIFT)
        .find(|&a| {
            is_regular(&shifted(entries, a))
                && witnesses.iter().all(|wit| is_regular(&shifted(wit, a)))
        })
        .map(|a| shifted(entries, a))
        .ok_or_else(|| Error::Internal(format!("no admissible shift for R_({i},{j})")))
}

/// `R_{i,j}(λ) = λ + a(ε_i - ε_j)` with `a ≥ 1` minimal such that the result
/// and every enclosing `R_{k,l}(λ) + a(ε_i - ε_j)` are W-conjugate to
/// dominant weights. Indices are 0-based; the result is left unsorted.
pub fn raise_op(w: &Weight, i: usize, j: usize) -> Result<Weight> {
    let e = w.doubled();
    if !(i < j && j < e.len()) {
        return Err(Error::Precondition(format!(
            "need i < j < n, got ({i}, {j}) for n = {}",
            e.len()
        )));
    }
    if e[i] + e[j] != 0 {
        return Err(Error::Precondition(format!(
            "entries {i} and {j} of {w} do not sum to zero"
        )));
    }
    Weight::from_doubled(raise(e, i, j)?)
}

fn require_atypical_domain(w: &Weight) -> Result<()> {
    if w.is_dominant() && w.all_nonzero() {
        Ok(())
    } else {
        Err(Error::Domain(
            w.to_string(),
            "expected a dominant weight without zero entries",
        ))
    }
}

/// `R_θ(λ)` (`Variant::Inner`) or `R'_θ(λ)` (`Variant::Outer`), followed by
/// the dominant conjugate.
pub fn r_theta(w: &Weight, theta: &[u32], variant: Variant) -> Result<Weight> {
    require_atypical_domain(w)?;
    let pairs = w.atypical_structure()?.pairs;
    if theta.len() != pairs.len() {
        return Err(Error::ThetaLength {
            expected: pairs.len(),
            got: theta.len(),
        });
    }
    let order: Vec<usize> = match variant {
        Variant::Inner => (0..pairs.len()).rev().collect(),
        Variant::Outer => (0..pairs.len()).collect(),
    };
    let mut current = w.doubled().to_vec();
    for s in order {
        let (i, j) = pairs[s];
        for _ in 0..theta[s] {
            current = raise(&current, i, j)?;
        }
    }
    finish(current)
}

fn finish(entries: Vec<i64>) -> Result<Weight> {
    let shifted = Weight::from_doubled(entries)?;
    shifted
        .dominant_conjugate()
        .map(|(d, _)| d)
        .ok_or_else(|| Error::Internal(format!("raised weight {shifted} is singular")))
}

fn require_half_dominant(w: &Weight) -> Result<()> {
    if !w.is_half_integer() {
        return Err(Error::WrongParity {
            expected: "half-integer",
            got: w.to_string(),
        });
    }
    if !w.is_dominant() {
        return Err(Error::Domain(w.to_string(), "expected a dominant weight"));
    }
    Ok(())
}

/// `[E(λ)] = Σ [L(μ)]` for `λ` dominant with no zero entry (either parity).
/// Candidates come from the lower Bruhat interval; zero-containing weights
/// are dropped.
pub fn decompose_nonzero(w: &Weight) -> Result<Vec<TransitionEntry>> {
    require_atypical_domain(w)?;
    let mut out = Vec::new();
    for mu in lower_interval(w)?.into_iter().rev() {
        if !mu.all_nonzero() {
            continue;
        }
        let r = mu.atypical_structure()?.degree();
        let mut witnesses = Vec::new();
        for theta in (0..r).map(|_| 0..=1u32).multi_cartesian_product() {
            if r_theta(&mu, &theta, Variant::Inner)? == *w {
                witnesses.push(theta);
            }
        }
        if witnesses.len() > 1 {
            return Err(Error::Internal(format!(
                "{w} = R_θ({mu}) for several θ: {witnesses:?}"
            )));
        }
        if let Some(theta) = witnesses.pop() {
            out.push(TransitionEntry {
                weight: mu,
                coeff: 1,
                theta: Some(theta),
            });
        }
    }
    Ok(out)
}

/// `[E(λ)] = Σ_μ a_{λμ} [L(μ)]` for a half-integer dominant `λ`, each entry
/// carrying the unique `θ ∈ {0,1}^r` with `λ = R_θ(μ)`.
pub fn decompose_euler(w: &Weight) -> Result<Vec<TransitionEntry>> {
    require_half_dominant(w)?;
    decompose_nonzero(w)
}

/// `a_{λμ}`.
pub fn a_coeff(lam: &Weight, mu: &Weight) -> Result<i64> {
    Ok(decompose_euler(lam)?
        .iter()
        .filter(|e| e.weight == *mu)
        .map(|e| e.coeff)
        .sum())
}

/// `b_{λμ} = Σ (-1)^{|θ|}` over `θ ∈ Z_+^r` with `λ = R'_θ(μ)`.
pub fn b_coeff(lam: &Weight, mu: &Weight) -> Result<i64> {
    require_half_dominant(lam)?;
    require_half_dominant(mu)?;
    if lam.n() != mu.n() {
        return Err(Error::RankMismatch(lam.n(), mu.n()));
    }
    let pairs = mu.atypical_structure()?.pairs;
    // each raise adds at least 4 to Σ|2ν_i|, which dominant conjugation keeps
    let budget = lam.abs_sum2();
    let mut total = 0i64;
    search_outer(mu.doubled().to_vec(), &pairs, 0, 0, budget, lam, &mut total)?;
    Ok(total)
}

fn search_outer(
    current: Vec<i64>,
    pairs: &[(usize, usize)],
    s: usize,
    raises: u32,
    budget: i64,
    target: &Weight,
    total: &mut i64,
) -> Result<()> {
    if s == pairs.len() {
        if finish(current)? == *target {
            *total += if raises.is_multiple_of(2) { 1 } else { -1 };
        }
        return Ok(());
    }
    let (i, j) = pairs[s];
    let mut state = current;
    let mut k = 0;
    loop {
        let size: i64 = state.iter().map(|e| e.abs()).sum();
        if size > budget {
            return Ok(());
        }
        search_outer(
            state.clone(),
            pairs,
            s + 1,
            raises + k,
            budget,
            target,
            total,
        )?;
        state = raise(&state, i, j)?;
        k += 1;
    }
}

/// Nonzero `b_{λμ}` over the lower interval of `λ`.
pub fn b_row(lam: &Weight) -> Result<Vec<TransitionEntry>> {
    require_half_dominant(lam)?;
    let mut out = Vec::new();
    for mu in lower_interval(lam)?.into_iter().rev() {
        let coeff = b_coeff(lam, &mu)?;
        if coeff != 0 {
            out.push(TransitionEntry {
                weight: mu,
                coeff,
                theta: None,
            });
        }
    }
    Ok(out)
}

/// `ch L(λ) = Σ_μ b_{λμ} ch E(μ)`.
pub fn irreducible_character(w: &Weight) -> Result<LaurentPoly> {
    CharacterCache::default().irreducible(w)
}

/// Memoized Euler and irreducible characters.
#[derive(Debug, Default)]
pub struct CharacterCache {
    euler: Mutex<HashMap<Weight, LaurentPoly>>,
    irreducible: Mutex<HashMap<Weight, LaurentPoly>>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn euler(&self, w: &Weight) -> Result<LaurentPoly> {
        if let Some(ch) = self.euler.lock().unwrap().get(w) {
            return Ok(ch.clone());
        }
        let ch = euler_character(w)?;
        self.euler
            .lock()
            .unwrap()
            .entry(w.clone())
            .or_insert_with(|| ch.clone());
        Ok(ch)
    }

    pub fn irreducible(&self, w: &Weight) -> Result<LaurentPoly> {
        if let Some(ch) = self.irreducible.lock().unwrap().get(w) {
            return Ok(ch.clone());
        }
        let mut ch = LaurentPoly::zero(w.n());
        for entry in b_row(w)? {
            ch = &ch + &self.euler(&entry.weight)?.scale(&BigInt::from(entry.coeff));
        }
        self.irreducible
            .lock()
            .unwrap()
            .entry(w.clone())
            .or_insert_with(|| ch.clone());
        Ok(ch)
    }
}

/// `Σ_ν a_{λν} b_{νμ}` for every `μ` reached, keyed by `μ`.
pub fn ab_product_row(lam: &Weight) -> Result<BTreeMap<Weight, i64>> {
    let mut row = BTreeMap::new();
    for a in decompose_euler(lam)? {
        for b in b_row(&a.weight)? {
            *row.entry(b.weight).or_insert(0) += a.coeff * b.coeff;
        }
    }
    row.retain(|_, v| *v != 0);
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn raise_op_examples() {
        assert_eq!(raise_op(&w("1/2,-1/2"), 0, 1).unwrap(), w("3/2,-3/2"));
        assert_eq!(
            raise_op(&w("3/2,1/2,-1/2"), 1, 2).unwrap(),
            w("3/2,5/2,-5/2")
        );
        assert!(matches!(
            raise_op(&w("1/2,-1/2,-3/2"), 0, 2),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            raise_op(&w("1/2,-1/2"), 1, 0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn raise_op_blocked_by_enclosing_pair() {
        // a = 1, 2 collide with 3/2 or with the raised outer pair 5/2
        assert_eq!(
            raise_op(&w("3/2,1/2,-1/2,-3/2"), 1, 2).unwrap(),
            w("3/2,7/2,-7/2,-3/2")
        );
        assert_eq!(raise_op(&w("2,1,-1,-2"), 1, 2).unwrap(), w("2,4,-4,-2"));
    }

    #[test]
    fn r_theta_examples() {
        let lam = w("5/2,3/2,-3/2,-5/2");
        assert_eq!(r_theta(&lam, &[0, 0], Variant::Inner).unwrap(), lam);
        assert_eq!(
            r_theta(&w("1/2,-1/2"), &[1], Variant::Inner).unwrap(),
            w("3/2,-3/2")
        );
        assert_eq!(
            r_theta(&w("3/2,1/2,-1/2"), &[1], Variant::Inner).unwrap(),
            w("5/2,3/2,-5/2")
        );
        assert_eq!(
            r_theta(&w("1/2,-1/2"), &[2], Variant::Outer).unwrap(),
            w("5/2,-5/2")
        );
        assert_eq!(
            r_theta(&lam, &[1], Variant::Inner),
            Err(Error::ThetaLength {
                expected: 2,
                got: 1
            })
        );
        assert!(r_theta(&w("1/2,3/2"), &[], Variant::Inner).is_err());
    }

    #[test]
    fn decompose_examples() {
        let d = decompose_euler(&w("3/2,-3/2")).unwrap();
        assert_eq!(
            d,
            vec![
                TransitionEntry {
                    weight: w("3/2,-3/2"),
                    coeff: 1,
                    theta: Some(vec![0])
                },
                TransitionEntry {
                    weight: w("1/2,-1/2"),
                    coeff: 1,
                    theta: Some(vec![1])
                },
            ]
        );
        let d = decompose_euler(&w("5/2,1/2")).unwrap();
        assert_eq!(
            d,
            vec![TransitionEntry {
                weight: w("5/2,1/2"),
                coeff: 1,
                theta: Some(vec![])
            }]
        );
        let d = decompose_euler(&w("5/2,3/2,-5/2")).unwrap();
        assert!(d.contains(&TransitionEntry {
            weight: w("3/2,1/2,-1/2"),
            coeff: 1,
            theta: Some(vec![1])
        }));
        assert!(decompose_euler(&w("2,-2")).is_err());
    }

    #[test]
    fn b_examples() {
        let lam = w("3/2,-3/2");
        assert_eq!(b_coeff(&lam, &lam).unwrap(), 1);
        assert_eq!(b_coeff(&lam, &w("1/2,-1/2")).unwrap(), -1);
        assert_eq!(b_coeff(&w("1/2,-1/2"), &lam).unwrap(), 0);
        // oracle: Σ_ν a_{λν} b_{νμ} = 0 for λ = (5/2,-5/2), μ = (1/2,-1/2) with
        // a-support {λ, (3/2,-3/2)} and b_{(3/2,-3/2),μ} = -1 forces b_{λμ} = 1
        assert_eq!(b_coeff(&w("5/2,-5/2"), &w("1/2,-1/2")).unwrap(), 1);
        assert_eq!(a_coeff(&w("5/2,-5/2"), &w("1/2,-1/2")).unwrap(), 0);
        assert_eq!(a_coeff(&w("5/2,-5/2"), &w("3/2,-3/2")).unwrap(), 1);
    }

    #[test]
    fn irreducible_examples() {
        let typical = w("5/2,1/2");
        assert_eq!(
            irreducible_character(&typical).unwrap(),
            euler_character(&typical).unwrap()
        );
        let small = w("1/2,-1/2");
        let ch = irreducible_character(&small).unwrap();
        assert_eq!(ch, euler_character(&small).unwrap());
        assert_eq!(ch.specialize_ones(), BigInt::from(4));
        let ch = irreducible_character(&w("3/2,-3/2")).unwrap();
        let expected = LaurentPoly::from_terms(
            2,
            [
                (vec![3, -3], 2),
                (vec![1, -1], 2),
                (vec![-1, 1], 2),
                (vec![-3, 3], 2),
            ]
            .map(|(e, c)| (e, BigInt::from(c))),
        )
        .unwrap();
        assert_eq!(ch, expected);
        assert_eq!(ch.specialize_ones(), BigInt::from(8));
    }

    #[test]
    fn ab_is_identity_small() {
        for s in [
            "3/2,-3/2",
            "5/2,-5/2",
            "5/2,3/2,-5/2",
            "5/2,3/2,-3/2,-5/2",
            "3/2,1/2,-1/2,-3/2",
        ] {
            let lam = w(s);
            let row = ab_product_row(&lam).unwrap();
            assert_eq!(row, BTreeMap::from([(lam.clone(), 1)]), "{s}");
        }
    }
}
