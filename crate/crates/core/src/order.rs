//! Bruhat orderings on weights.
//!
//! Three orders are implemented independently so they can be checked
//! against one another:
//! - the chain order, by breadth-first search over g0-dominant weights;
//! - the order `⪰` on integer weights, through the `b_∞` lattice vectors `wt_s`;
//! - the order `⪰_a` on `Z^{p|q}`, through the `gl_∞` lattice vectors.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::weights::{Parity, SignedSequence, Weight};

/// Finitely supported integer combination of `δ_r`, `r ≥ 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BLatticeVector {
    coeffs: BTreeMap<i64, i64>,
}

/// Finitely supported integer combination of `γ_r`, `r ∈ Z`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GlLatticeVector {
    coeffs: BTreeMap<i64, i64>,
}

fn add_coeff(map: &mut BTreeMap<i64, i64>, key: i64, c: i64) {
    let e = map.entry(key).or_insert(0);
    *e += c;
    if *e == 0 {
        map.remove(&key);
    }
}

fn difference(a: &BTreeMap<i64, i64>, b: &BTreeMap<i64, i64>) -> BTreeMap<i64, i64> {
    let mut d = a.clone();
    for (&k, &c) in b {
        add_coeff(&mut d, k, -c);
    }
    d
}

impl BLatticeVector {
    /// Adds `c·δ_value`, with `δ_{-r} = -δ_r` and `δ_0 = 0`.
    pub fn add_delta(&mut self, value: i64, c: i64) {
        if value != 0 {
            add_coeff(&mut self.coeffs, value.abs(), c * value.signum());
        }
    }

    pub fn coeff(&self, r: i64) -> i64 {
        self.coeffs.get(&r).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `self ≥ other`: the difference is a non-negative combination of the
    /// simple roots `-δ_1` and `δ_r - δ_{r+1}`.
    pub fn dominates(&self, other: &BLatticeVector) -> bool {
        b_dominates(self, other)
    }
}

impl GlLatticeVector {
    pub fn add_gamma(&mut self, index: i64, c: i64) {
        add_coeff(&mut self.coeffs, index, c);
    }

    pub fn coeff(&self, r: i64) -> i64 {
        self.coeffs.get(&r).copied().unwrap_or(0)
    }

    /// `self ≥ other`: the difference is a non-negative combination of
    /// `γ_r - γ_{r+1}`.
    pub fn dominates(&self, other: &GlLatticeVector) -> bool {
        // Σ a_r(γ_r - γ_{r+1}) has γ_k-coefficient a_k - a_{k-1}, so
        // a_r = Σ_{k≤r} c_k. Finite support forces Σ c_k = 0, and a_r ≥ 0
        // is the prefix-sum condition.
        let diff = difference(&self.coeffs, &other.coeffs);
        let mut prefix = 0;
        for &c in diff.values() {
            prefix += c;
            if prefix < 0 {
                return false;
            }
        }
        prefix == 0
    }
}

/// `wt_s(λ) = Σ_{i ≥ s} δ_{λ_i}` for an integer weight (`from` is 0-based,
/// so `from = 0` gives `wt(λ)`).
pub fn wt_vector(w: &Weight, from: usize) -> Result<BLatticeVector> {
    if w.parity() != Parity::Integer {
        return Err(Error::WrongParity {
            expected: "integer",
            got: w.to_string(),
        });
    }
    let mut v = BLatticeVector::default();
    for &e in w.doubled().iter().skip(from) {
        v.add_delta(e / 2, 1);
    }
    Ok(v)
}

/// Whether `v - u` is a non-negative integral combination of the simple roots
/// `-δ_1, δ_1 - δ_2, δ_2 - δ_3, …` of type `b_∞`.
pub fn b_dominates(v: &BLatticeVector, u: &BLatticeVector) -> bool {
    // Write v - u = Σ c_r δ_r and Σ_{t≥0} a_t α_t with α_0 = -δ_1 and
    // α_t = δ_t - δ_{t+1}. Matching coefficients: c_1 = a_1 - a_0 and
    // c_k = a_k - a_{k-1}, so a_t = a_0 + Σ_{k≤t} c_k. Since a_t vanishes for
    // large t, a_0 = -Σ c_k and a_t = -Σ_{k>t} c_k. Non-negativity of every
    // a_t is the tail-sum condition Σ_{r>t} c_r ≤ 0 for all t ≥ 0.
    let diff = difference(&v.coeffs, &u.coeffs);
    let mut tail = 0;
    for &c in diff.values().rev() {
        tail += c;
        if tail > 0 {
            return false;
        }
    }
    true
}

fn same_shape(a: &Weight, b: &Weight) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::RankMismatch(a.n(), b.n()));
    }
    if a.parity() != b.parity() {
        return Err(Error::MixedParity);
    }
    Ok(())
}

/// `a ⪰ b` via `wt` vectors. Half-integer weights are compared through `♯`.
pub fn succeq(a: &Weight, b: &Weight) -> Result<bool> {
    same_shape(a, b)?;
    if a.is_half_integer() {
        return succeq(&a.sharp()?, &b.sharp()?);
    }
    let n = a.n();
    if wt_vector(a, 0)? != wt_vector(b, 0)? {
        return Ok(false);
    }
    for s in 0..n {
        if !b_dominates(&wt_vector(a, s)?, &wt_vector(b, s)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `wt_s(f) = Σ_{i ≥ s} sgn(i) γ_{f(i)}`, with `from` a position in
/// `J(p|q)` listed in increasing order.
pub fn gl_wt_vector(f: &SignedSequence, from: usize) -> GlLatticeVector {
    let mut v = GlLatticeVector::default();
    for (k, &value) in f.values.iter().enumerate().skip(from) {
        v.add_gamma(value, if k < f.p { -1 } else { 1 });
    }
    v
}

/// `f ⪰_a g` on `Z^{p|q}`.
pub fn succeq_a(f: &SignedSequence, g: &SignedSequence) -> Result<bool> {
    if f.p != g.p || f.values.len() != g.values.len() {
        return Err(Error::SignatureMismatch((f.p, f.q()), (g.p, g.q())));
    }
    if gl_wt_vector(f, 0) != gl_wt_vector(g, 0) {
        return Ok(false);
    }
    Ok((0..f.values.len()).all(|s| gl_wt_vector(f, s).dominates(&gl_wt_vector(g, s))))
}

/// `a ⪰_a b` after `♮` for half-integer weights, after `♭` otherwise.
/// Weights whose images have different signatures are incomparable.
pub fn succeq_gl(a: &Weight, b: &Weight) -> Result<bool> {
    same_shape(a, b)?;
    let (f, g) = if a.is_half_integer() {
        (a.natural()?, b.natural()?)
    } else {
        (a.flat()?, b.flat()?)
    };
    if f.p != g.p {
        return Ok(false);
    }
    succeq_a(&f, &g)
}

/// One-step neighbours in the chain order: `ν ± (ε_i - ε_j)` for `i < j`
/// with `ν_i + ν_j = 0` (taken on the lower weight), staying g0-dominant.
fn chain_steps(nu: &[i64], up: bool) -> Vec<Vec<i64>> {
    let n = nu.len();
    let delta = if up { 2 } else { -2 };
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if nu[i] + nu[j] != 0 {
                continue;
            }
            let mut next = nu.to_vec();
            next[i] += delta;
            next[j] -= delta;
            if next.windows(2).all(|w| w[0] >= w[1]) {
                out.push(next);
            }
        }
    }
    out
}

fn require_g0(w: &Weight) -> Result<()> {
    if w.is_g0_dominant() {
        Ok(())
    } else {
        Err(Error::Domain(
            w.to_string(),
            "chain order is defined on g0-dominant weights",
        ))
    }
}

/// `a ≽ b` by searching for a chain of raising steps from `b` to `a`.
pub fn succ_chain_oracle(a: &Weight, b: &Weight) -> Result<bool> {
    same_shape(a, b)?;
    require_g0(a)?;
    require_g0(b)?;
    // every step adds 4 to Σ|2ν_i|
    let limit = a.abs_sum2();
    let target = a.doubled();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::from([b.doubled().to_vec()]);
    while let Some(nu) = queue.pop_front() {
        if nu == target {
            return Ok(true);
        }
        let sum: i64 = nu.iter().map(|e| e.abs()).sum();
        if sum >= limit {
            continue;
        }
        let nonzero = nu.iter().all(|&e| e != 0);
        for next in chain_steps(&nu, true) {
            debug_assert!(!nonzero || next.iter().all(|&e| e != 0));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

/// All dominant `μ` with `w ≽ μ`, including `w` itself.
pub fn lower_interval(w: &Weight) -> Result<BTreeSet<Weight>> {
    if !w.is_dominant() {
        return Err(Error::Domain(
            w.to_string(),
            "lower interval needs a dominant weight",
        ));
    }
    let mut seen: HashSet<Vec<i64>> = HashSet::from([w.doubled().to_vec()]);
    let mut queue = VecDeque::from([w.doubled().to_vec()]);
    let mut out = BTreeSet::new();
    while let Some(nu) = queue.pop_front() {
        let weight = Weight::from_doubled(nu.clone())?;
        if weight.is_dominant() {
            out.insert(weight);
        }
        for next in chain_steps(&nu, false) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}
