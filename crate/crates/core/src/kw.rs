//! Closed-form characters for totally connected and totally disconnected
//! half-integer dominant weights.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euler::{alternating_quotient, euler_character};
use crate::laurent::LaurentPoly;
use crate::weights::{Connectivity, ConnectivityMode, Weight};

/// A closed-form character together with the pieces of its prefactor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KwCharacter {
    pub character: LaurentPoly,
    pub connectivity: Connectivity,
    /// `(-1)^{|λ^⇑ - λ|}` for the connected formula, `1` otherwise.
    pub sign: i32,
    /// `r!` in the connected formula, `1` otherwise.
    pub divisor: u64,
    /// Exponent `k` of the `2^k` prefactor.
    pub two_power: u32,
}

fn factorial(r: usize) -> u64 {
    (1..=r as u64).product()
}

fn connected_formula(w: &Weight, c: &Connectivity) -> Result<(LaurentPoly, i32, u64)> {
    let n = w.n();
    let sign = if c.distance % 2 == 0 { 1 } else { -1 };
    let divisor = factorial(c.structure.degree());
    let sum = alternating_quotient(c.uparrow.doubled(), &c.structure.pairs)?;
    let scaled = sum.scale(&(BigInt::from(sign) << n.div_ceil(2)));
    Ok((
        scaled.div_scalar_exact(&BigInt::from(divisor))?,
        sign,
        divisor,
    ))
}

fn disconnected_formula(w: &Weight, c: &Connectivity) -> Result<LaurentPoly> {
    let sum = alternating_quotient(w.doubled(), &c.structure.pairs)?;
    Ok(sum.scale(&(BigInt::one() << w.n().div_ceil(2))))
}

/// `ch L(λ)` from the closed formula that applies to `λ`.
///
/// Typical weights return `ch E(λ)`. When both formulas apply (`r = 1`) they
/// are evaluated and required to agree. Mixed weights are rejected.
pub fn kw_character(w: &Weight) -> Result<KwCharacter> {
    let c = w.connectivity()?;
    let two_power = w.n().div_ceil(2) as u32;
    let (character, sign, divisor) = match c.mode {
        ConnectivityMode::Typical => (euler_character(w)?, 1, 1),
        ConnectivityMode::Mixed => return Err(Error::MixedWeight(w.to_string())),
        ConnectivityMode::TotallyDisconnected => (disconnected_formula(w, &c)?, 1, 1),
        ConnectivityMode::TotallyConnected => {
            let (ch, sign, divisor) = connected_formula(w, &c)?;
            if c.both && ch != disconnected_formula(w, &c)? {
                return Err(Error::Internal(format!(
                    "connected and disconnected formulas disagree at {w}"
                )));
            }
            (ch, sign, divisor)
        }
    };
    Ok(KwCharacter {
        character,
        connectivity: c,
        sign,
        divisor,
        two_power,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kl::irreducible_character;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn single_pair_uses_both_formulas() {
        let k = kw_character(&w("1/2,-1/2")).unwrap();
        assert!(k.connectivity.both);
        let expected = LaurentPoly::from_terms(
            2,
            [(vec![1, -1], 2), (vec![-1, 1], 2)].map(|(e, c)| (e, BigInt::from(c))),
        )
        .unwrap();
        assert_eq!(k.character, expected);
    }

    #[test]
    fn connected_example() {
        let lam = w("5/2,3/2,-3/2,-5/2");
        let k = kw_character(&lam).unwrap();
        assert_eq!(k.connectivity.mode, ConnectivityMode::TotallyConnected);
        assert_eq!((k.sign, k.divisor, k.two_power), (-1, 2, 2));
        assert_eq!(k.character, irreducible_character(&lam).unwrap());
    }

    #[test]
    fn disconnected_example() {
        let lam = w("7/2,3/2,-3/2,-7/2");
        let k = kw_character(&lam).unwrap();
        assert_eq!(k.connectivity.mode, ConnectivityMode::TotallyDisconnected);
        assert_eq!((k.sign, k.divisor, k.two_power), (1, 1, 2));
        assert_eq!(k.character, irreducible_character(&lam).unwrap());
    }

    #[test]
    fn typical_and_mixed() {
        let lam = w("5/2,1/2");
        assert_eq!(
            kw_character(&lam).unwrap().character,
            euler_character(&lam).unwrap()
        );
        assert!(matches!(
            kw_character(&w("11/2,9/2,5/2,-5/2,-9/2,-11/2")),
            Err(Error::MixedWeight(_))
        ));
        assert!(kw_character(&w("1,-1")).is_err());
    }
}
