//! Characters of the Euler characteristics `E(λ)` and the signed
//! regularization `σ(μ)`.
//!
//! Everything here is an instance of one computation: the alternating sum
//! `D^{-1} Σ_w sgn(w) w(x^μ / Π_{(k,l)} (1 + x_l/x_k))` with
//! `D^{-1} = Π_{i<j}(x_i + x_j) / Π_{i<j}(x_i - x_j)`.
//! Each factor `1/(1 + x_l/x_k)` equals `x_k/(x_k + x_l)`, and under `w` the
//! binomial `x_{w(k)} + x_{w(l)}` cancels against one factor of
//! `Π_{i<j}(x_i + x_j)`, so every Weyl term is a Laurent polynomial. The sum
//! is then divided exactly by the Vandermonde product.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Permutation};
use crate::weights::Weight;

/// `D^{-1} Σ_w sgn(w) w(x^{exp2/2} / Π_{(k,l) ∈ pairs} (1 + x_l/x_k))`.
///
/// `pairs` must be distinct unordered pairs of distinct indices.
pub(crate) fn alternating_quotient(exp2: &[i64], pairs: &[(usize, usize)]) -> Result<LaurentPoly> {
    let n = exp2.len();
    let mut numerator = exp2.to_vec();
    for &(k, _) in pairs {
        numerator[k] += 2;
    }
    // group Weyl terms by the set of cancelled binomials
    let mut groups: HashMap<BTreeSet<(usize, usize)>, LaurentPoly> = HashMap::new();
    for w in Permutation::all(n) {
        let cancelled: BTreeSet<(usize, usize)> = pairs
            .iter()
            .map(|&(k, l)| {
                let (a, b) = (w.apply(k), w.apply(l));
                (a.min(b), a.max(b))
            })
            .collect();
        groups
            .entry(cancelled)
            .or_insert_with(|| LaurentPoly::zero(n))
            .add_term(w.act_on_exponent(&numerator), BigInt::from(w.sign()));
    }
    let mut total = LaurentPoly::zero(n);
    for (cancelled, alternating) in groups {
        if alternating.is_zero() {
            continue;
        }
        let mut term = alternating;
        for i in 0..n {
            for j in i + 1..n {
                if !cancelled.contains(&(i, j)) {
                    term = &term * &LaurentPoly::binomial(n, i, j, 1);
                }
            }
        }
        total = &total + &term;
    }
    total.div_vandermonde()
}

fn two_power(exponent: usize) -> BigInt {
    BigInt::from(1) << exponent
}

/// `ch E(λ)` for a dominant weight `λ` of either parity.
pub fn euler_character(w: &Weight) -> Result<LaurentPoly> {
    if !w.is_dominant() {
        return Err(Error::Domain(
            w.to_string(),
            "Euler characters are indexed by dominant weights",
        ));
    }
    let e = w.doubled();
    // Φ⁺(λ): equal entries, which for dominant λ only happens in the zero block
    let mut pairs = Vec::new();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            if e[i] == e[j] {
                pairs.push((i, j));
            }
        }
    }
    let quotient = alternating_quotient(e, &pairs)?;
    Ok(quotient.scale(&two_power(w.ell().div_ceil(2))))
}

/// `σ(μ) = 2^{⌈n/2⌉} D^{-1} Σ_w sgn(w) w(x^μ)` for any half-integer weight.
pub fn sigma(w: &Weight) -> Result<LaurentPoly> {
    if !w.is_half_integer() {
        return Err(Error::WrongParity {
            expected: "half-integer",
            got: w.to_string(),
        });
    }
    if w.dominant_conjugate().is_none() {
        return Ok(LaurentPoly::zero(w.n()));
    }
    let quotient = alternating_quotient(w.doubled(), &[])?;
    Ok(quotient.scale(&two_power(w.n().div_ceil(2))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use num_traits::One;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    fn poly(n: usize, terms: &[(&[i64], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))))
            .unwrap()
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_character(&w("1/2")).unwrap(), poly(1, &[(&[1], 2)]));
        assert_eq!(
            euler_character(&w("1/2,-1/2")).unwrap(),
            poly(2, &[(&[1, -1], 2), (&[-1, 1], 2)])
        );
        assert_eq!(
            euler_character(&w("3/2,-3/2")).unwrap(),
            poly(
                2,
                &[(&[3, -3], 2), (&[1, -1], 4), (&[-1, 1], 4), (&[-3, 3], 2)]
            )
        );
        assert!(euler_character(&w("1/2,3/2")).is_err());
    }

    /// Independent route: multiply the claimed character by the Weyl
    /// denominator and compare with the alternating numerator.
    #[test]
    fn euler_times_denominator_is_alternating_sum() {
        for s in ["5/2,1/2", "5/2,3/2,-5/2", "3/2,1/2,-1/2,-3/2"] {
            let lam = w(s);
            let n = lam.n();
            let ch = euler_character(&lam).unwrap();
            let mut lhs = ch.clone();
            let mut rhs = LaurentPoly::monomial(lam.doubled().to_vec(), 1).antisymmetrize();
            for (i, j) in (0..n).tuple_combinations() {
                lhs = &lhs * &LaurentPoly::binomial(n, i, j, -1);
                rhs = &rhs * &LaurentPoly::binomial(n, i, j, 1);
            }
            rhs = rhs.scale(&(BigInt::one() << n.div_ceil(2)));
            assert_eq!(lhs, rhs, "{s}");
        }
    }

    #[test]
    fn integer_weights_with_zero_block() {
        // trivial module: n = 2, λ = 0 gives the constant 1
        assert_eq!(euler_character(&w("0,0")).unwrap(), LaurentPoly::one(2));
        assert_eq!(euler_character(&w("0,0,0")).unwrap(), LaurentPoly::one(3));
        let ch = euler_character(&w("1,0,0")).unwrap();
        assert!(ch.is_symmetric());
        assert_eq!(ch.coeff(&[2, 0, 0]), BigInt::from(2));
    }

    #[test]
    fn sigma_examples() {
        assert!(sigma(&w("1/2,1/2")).unwrap().is_zero());
        let s = sigma(&w("1/2,-1/2")).unwrap();
        assert_eq!(sigma(&w("-1/2,1/2")).unwrap(), -&s);
        assert_eq!(s, euler_character(&w("1/2,-1/2")).unwrap());
        assert!(sigma(&w("1,0")).is_err());
    }

    #[test]
    fn sigma_matches_signed_dominant_conjugate() {
        for e in (0..3)
            .map(|_| [-5i64, -3, -1, 1, 3, 5])
            .multi_cartesian_product()
        {
            let mu = Weight::from_doubled(e).unwrap();
            let s = sigma(&mu).unwrap();
            match mu.dominant_conjugate() {
                None => assert!(s.is_zero()),
                Some((dom, sign)) => {
                    let expected = euler_character(&dom).unwrap().scale(&BigInt::from(sign));
                    assert_eq!(s, expected, "{mu}");
                }
            }
        }
    }
}
