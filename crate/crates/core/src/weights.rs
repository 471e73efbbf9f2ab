//! Weights of q(n) and their classification.
//!
//! A weight `λ = Σ λ_i ε_i` is stored with every entry doubled, so integer
//! and half-integer weights share one exact integer representation. All
//! index arguments in this module are 0-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Integer,
    HalfInteger,
}

/// A weight of q(n), stored as the doubled entries `2λ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Weight {
    entries2: Vec<i64>,
}

impl Weight {
    /// Builds a weight from doubled entries. All entries must share a parity.
    pub fn from_doubled(entries2: Vec<i64>) -> Result<Self> {
        if entries2.is_empty() {
            return Err(Error::EmptyWeight);
        }
        let odd = entries2[0].rem_euclid(2);
        if entries2.iter().any(|e| e.rem_euclid(2) != odd) {
            return Err(Error::MixedParity);
        }
        Ok(Weight { entries2 })
    }

    /// Builds an integer weight from its entries.
    pub fn integer(entries: &[i64]) -> Result<Self> {
        Self::from_doubled(entries.iter().map(|e| 2 * e).collect())
    }

    pub fn n(&self) -> usize {
        self.entries2.len()
    }

    pub fn doubled(&self) -> &[i64] {
        &self.entries2
    }

    pub fn into_doubled(self) -> Vec<i64> {
        self.entries2
    }

    pub fn parity(&self) -> Parity {
        if self.entries2[0].rem_euclid(2) == 0 {
            Parity::Integer
        } else {
            Parity::HalfInteger
        }
    }

    pub fn is_half_integer(&self) -> bool {
        self.parity() == Parity::HalfInteger
    }

    /// Weakly decreasing entries (dominant for the even part).
    pub fn is_g0_dominant(&self) -> bool {
        self.entries2.windows(2).all(|w| w[0] >= w[1])
    }

    /// Weakly decreasing, and equal neighbours must be zero.
    pub fn is_dominant(&self) -> bool {
        self.entries2
            .windows(2)
            .all(|w| w[0] > w[1] || (w[0] == w[1] && w[0] == 0))
    }

    pub fn all_nonzero(&self) -> bool {
        self.entries2.iter().all(|&e| e != 0)
    }

    /// Number of nonzero entries.
    pub fn ell(&self) -> usize {
        self.entries2.iter().filter(|&&e| e != 0).count()
    }

    /// Dimension `2^⌈ℓ(λ)/2⌉` of the Clifford module at the top of `L(λ)`.
    pub fn clifford_dim(&self) -> u64 {
        1u64 << self.ell().div_ceil(2)
    }

    /// Sum of `|2λ_i|`; every Bruhat step changes it by exactly 4.
    pub fn abs_sum2(&self) -> i64 {
        self.entries2.iter().map(|e| e.abs()).sum()
    }

    pub fn classify(&self) -> WeightClass {
        let g0_dominant = self.is_g0_dominant();
        let all_nonzero = self.all_nonzero();
        let p_index =
            (g0_dominant && all_nonzero).then(|| self.entries2.iter().filter(|&&e| e > 0).count());
        WeightClass {
            parity: self.parity(),
            g0_dominant,
            dominant: self.is_dominant(),
            all_nonzero,
            p_index,
        }
    }

    fn require_half(&self) -> Result<()> {
        if self.is_half_integer() {
            Ok(())
        } else {
            Err(Error::WrongParity {
                expected: "half-integer",
                got: self.to_string(),
            })
        }
    }

    fn require_integer(&self) -> Result<()> {
        if self.is_half_integer() {
            Err(Error::WrongParity {
                expected: "integer",
                got: self.to_string(),
            })
        } else {
            Ok(())
        }
    }

    /// The bijection `λ_i ↦ λ_i + sgn(λ_i)/2` from half-integer weights onto
    /// integer weights without zero entries.
    pub fn sharp(&self) -> Result<Weight> {
        self.require_half()?;
        Ok(Weight {
            entries2: self.entries2.iter().map(|&e| e + e.signum()).collect(),
        })
    }

    /// Inverse of [`Weight::sharp`].
    pub fn unsharp(&self) -> Result<Weight> {
        self.require_integer()?;
        if !self.all_nonzero() {
            return Err(Error::Domain(
                self.to_string(),
                "unsharp needs every entry nonzero",
            ));
        }
        Ok(Weight {
            entries2: self.entries2.iter().map(|&e| e - e.signum()).collect(),
        })
    }

    /// `λ^♭ = (-λ_1, …, -λ_p | λ_{p+1}, …, λ_n)` for integer, g0-dominant
    /// weights with no zero entry.
    pub fn flat(&self) -> Result<SignedSequence> {
        self.require_integer()?;
        let p = self.classify().p_index.ok_or_else(|| {
            Error::Domain(
                self.to_string(),
                "flat needs a g0-dominant weight with nonzero entries",
            )
        })?;
        let values = self
            .entries2
            .iter()
            .enumerate()
            .map(|(i, &e)| if i < p { -e / 2 } else { e / 2 })
            .collect();
        Ok(SignedSequence { p, values })
    }

    /// `λ^♮ = (λ^♯)^♭` for half-integer g0-dominant weights.
    pub fn natural(&self) -> Result<SignedSequence> {
        self.sharp()?.flat()
    }

    /// The dominant weight W-conjugate to `self` with the sign of the sorting
    /// permutation, or `None` when a nonzero value repeats.
    pub fn dominant_conjugate(&self) -> Option<(Weight, i32)> {
        if !is_regular(&self.entries2) {
            return None;
        }
        let e = &self.entries2;
        let mut inversions = 0usize;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] < e[j] {
                    inversions += 1;
                }
            }
        }
        let mut sorted = e.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((Weight { entries2: sorted }, sign))
    }

    /// The nested atypical pairs of a dominant weight without zero entries.
    pub fn atypical_structure(&self) -> Result<AtypicalStructure> {
        if !self.is_dominant() || !self.all_nonzero() {
            return Err(Error::Domain(
                self.to_string(),
                "atypicality is computed for dominant weights without zero entries",
            ));
        }
        let e = &self.entries2;
        let pairs = (0..e.len())
            .filter(|&i| e[i] > 0)
            .filter_map(|i| e.iter().position(|&x| x == -e[i]).map(|j| (i, j)))
            .collect();
        Ok(AtypicalStructure { pairs })
    }

    pub fn is_typical(&self) -> Result<bool> {
        Ok(self.atypical_structure()?.degree() == 0)
    }

    /// Classifies a half-integer dominant weight as totally connected or
    /// totally disconnected and computes `λ^⇑` with `|λ^⇑ − λ|`.
    pub fn connectivity(&self) -> Result<Connectivity> {
        self.require_half()?;
        if !self.is_dominant() {
            return Err(Error::Domain(
                self.to_string(),
                "connectivity needs a dominant weight",
            ));
        }
        let structure = self.atypical_structure()?;
        let e = &self.entries2;
        let r = structure.degree();
        let mut uparrow = e.clone();
        let mut distance2 = 0;
        if let Some(&(i1, j1)) = structure.pairs.first() {
            for &(i, j) in &structure.pairs[1..] {
                distance2 += e[i1] - e[i];
                uparrow[i] = e[i1];
                uparrow[j] = e[j1];
            }
        }
        let (mode, both) = match r {
            0 => (ConnectivityMode::Typical, true),
            1 => (ConnectivityMode::TotallyConnected, true),
            _ => {
                let abs: Vec<i64> = e.iter().map(|x| x.abs()).collect();
                // per consecutive pair of atypical values: is every value of
                // the lattice strictly between them attained by some |λ_i|?
                let gaps: Vec<bool> = structure
                    .pairs
                    .windows(2)
                    .map(|w| {
                        let (hi, lo) = (e[w[0].0], e[w[1].0]);
                        ((lo + 2)..hi).step_by(2).all(|t| abs.contains(&t))
                    })
                    .collect();
                // a gap with nothing strictly between counts as filled
                let connected = gaps.iter().all(|&filled| filled);
                let disconnected = gaps.iter().all(|&filled| !filled);
                match (connected, disconnected) {
                    (true, true) => (ConnectivityMode::TotallyConnected, true),
                    (true, false) => (ConnectivityMode::TotallyConnected, false),
                    (false, true) => (ConnectivityMode::TotallyDisconnected, false),
                    (false, false) => (ConnectivityMode::Mixed, false),
                }
            }
        };
        Ok(Connectivity {
            mode,
            both,
            structure,
            uparrow: Weight { entries2: uparrow },
            distance: distance2 / 2,
        })
    }
}

/// No nonzero value occurs twice.
pub(crate) fn is_regular(entries2: &[i64]) -> bool {
    let mut seen: Vec<i64> = entries2.iter().copied().filter(|&e| e != 0).collect();
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1])
}

impl TryFrom<Vec<i64>> for Weight {
    type Error = Error;

    fn try_from(entries2: Vec<i64>) -> Result<Self> {
        Weight::from_doubled(entries2)
    }
}

impl From<Weight> for Vec<i64> {
    fn from(w: Weight) -> Self {
        w.entries2
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Parses comma-separated entries such as `5/2,3/2,-5/2` or `2,0,-1`.
    fn from_str(s: &str) -> Result<Self> {
        let entries2 = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                let bad = || Error::Parse(format!("bad entry {tok:?}"));
                match tok.split_once('/') {
                    Some((num, den)) => {
                        if den.trim() != "2" {
                            return Err(bad());
                        }
                        num.trim().parse::<i64>().map_err(|_| bad())
                    }
                    None => tok.parse::<i64>().map(|v| 2 * v).map_err(|_| bad()),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Weight::from_doubled(entries2)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.entries2.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", Half(*e))?;
        }
        Ok(())
    }
}

/// Formats a doubled value as an integer or `a/2`.
pub(crate) struct Half(pub i64);

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightClass {
    pub parity: Parity,
    pub g0_dominant: bool,
    pub dominant: bool,
    pub all_nonzero: bool,
    /// Number of positive entries, when g0-dominant with no zero entry.
    pub p_index: Option<usize>,
}

/// The atypical pairs `(i_s, j_s)` with `i_1 < … < i_r < j_r < … < j_1`,
/// outermost first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtypicalStructure {
    pub pairs: Vec<(usize, usize)>,
}

impl AtypicalStructure {
    /// Degree of atypicality `r`.
    pub fn degree(&self) -> usize {
        self.pairs.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConnectivityMode {
    TotallyConnected,
    TotallyDisconnected,
    Mixed,
    Typical,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connectivity {
    pub mode: ConnectivityMode,
    /// Both predicates hold (always the case when `r ≤ 1`).
    pub both: bool,
    pub structure: AtypicalStructure,
    pub uparrow: Weight,
    /// `|λ^⇑ − λ|` in the basis of atypical roots.
    pub distance: i64,
}

/// An element of `Z^{p|q}`: `values[k]` is `f(k - p)` for `k < p` and
/// `f(k - p + 1)` otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedSequence {
    pub p: usize,
    pub values: Vec<i64>,
}

impl SignedSequence {
    pub fn q(&self) -> usize {
        self.values.len() - self.p
    }

    /// Value at `j ∈ J(p|q) = {-p, …, -1, 1, …, q}`.
    pub fn get(&self, j: i64) -> Option<i64> {
        let p = self.p as i64;
        let k = match j {
            j if j < 0 && j >= -p => j + p,
            j if j > 0 && j <= self.q() as i64 => j + p - 1,
            _ => return None,
        };
        Some(self.values[k as usize])
    }
}

impl fmt::Display for SignedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "({} | {})",
            join(&self.values[..self.p]),
            join(&self.values[self.p..])
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn classify_examples() {
        let c = w("1,0,0,-1").classify();
        assert!(c.dominant && c.g0_dominant && !c.all_nonzero);
        assert_eq!(c.p_index, None);

        let c = w("1,1,-1").classify();
        assert!(c.g0_dominant && !c.dominant);
        assert_eq!(c.p_index, Some(2));

        let c = w("3/2,-1/2").classify();
        assert_eq!(c.parity, Parity::HalfInteger);
        assert!(c.dominant && c.all_nonzero);
        assert_eq!(c.p_index, Some(1));
    }

    #[test]
    fn ell_and_clifford() {
        assert_eq!((w("1,0,0,-1").ell(), w("1,0,0,-1").clifford_dim()), (2, 2));
        assert_eq!((w("3/2,-1/2").ell(), w("3/2,-1/2").clifford_dim()), (2, 2));
        assert_eq!((w("0,0").ell(), w("0,0").clifford_dim()), (0, 1));
        assert_eq!(w("1/2,3/2,5/2").clifford_dim(), 4);
    }

    #[test]
    fn sharp_examples() {
        assert_eq!(w("3/2,-1/2").sharp().unwrap(), w("2,-1"));
        assert_eq!(w("1/2,-1/2").sharp().unwrap(), w("1,-1"));
        assert_eq!(w("5/2,3/2,-5/2").sharp().unwrap(), w("3,2,-3"));
        assert!(w("2,-1").sharp().is_err());
    }

    #[test]
    fn unsharp_examples() {
        assert_eq!(w("2,-1").unsharp().unwrap(), w("3/2,-1/2"));
        assert_eq!(w("1,-1").unsharp().unwrap(), w("1/2,-1/2"));
        assert!(matches!(w("2,0,-1").unsharp(), Err(Error::Domain(..))));
        assert!(w("1/2").unsharp().is_err());
    }

    #[test]
    fn flat_examples() {
        let f = w("2,-1").flat().unwrap();
        assert_eq!((f.p, f.values.clone()), (1, vec![-2, -1]));
        assert_eq!(f.get(-1), Some(-2));
        assert_eq!(f.get(1), Some(-1));
        assert_eq!(f.get(2), None);
        let f = w("3,2,-3").flat().unwrap();
        assert_eq!((f.p, f.values.clone()), (2, vec![-3, -2, -3]));
        assert_eq!(f.to_string(), "(-3,-2 | -3)");
        assert_eq!(w("3/2,-1/2").natural().unwrap().values, vec![-2, -1]);
        assert!(w("2,0,-1").flat().is_err());
        assert!(w("-1,2").flat().is_err());
    }

    #[test]
    fn dominant_conjugate_examples() {
        assert_eq!(
            w("-1/2,1/2").dominant_conjugate(),
            Some((w("1/2,-1/2"), -1))
        );
        assert_eq!(w("3/2,3/2,-3/2").dominant_conjugate(), None);
        assert_eq!(
            w("3/2,5/2,-5/2").dominant_conjugate(),
            Some((w("5/2,3/2,-5/2"), -1))
        );
        assert_eq!(w("0,1,0").dominant_conjugate(), Some((w("1,0,0"), -1)));
        assert_eq!(w("0,0,1").dominant_conjugate(), Some((w("1,0,0"), 1)));
    }

    #[test]
    fn atypical_examples() {
        let s = w("5/2,3/2,-3/2,-5/2").atypical_structure().unwrap();
        assert_eq!(s.pairs, vec![(0, 3), (1, 2)]);
        assert!(w("5/2,1/2").is_typical().unwrap());
        let s = w("3/2,1/2,-1/2").atypical_structure().unwrap();
        assert_eq!((s.degree(), s.pairs), (1, vec![(1, 2)]));
        assert!(w("2,0,-2").atypical_structure().is_err());
        assert!(w("1/2,3/2").atypical_structure().is_err());
    }

    #[test]
    fn connectivity_examples() {
        let c = w("5/2,3/2,-3/2,-5/2").connectivity().unwrap();
        assert_eq!(c.mode, ConnectivityMode::TotallyConnected);
        assert!(!c.both);
        assert_eq!(c.uparrow, w("5/2,5/2,-5/2,-5/2"));
        assert_eq!(c.distance, 1);

        let c = w("7/2,3/2,-3/2,-7/2").connectivity().unwrap();
        assert_eq!(c.mode, ConnectivityMode::TotallyDisconnected);
        assert_eq!(c.uparrow, w("7/2,7/2,-7/2,-7/2"));
        assert_eq!(c.distance, 2);

        let c = w("1/2,-1/2").connectivity().unwrap();
        assert_eq!(c.mode, ConnectivityMode::TotallyConnected);
        assert!(c.both);
        assert_eq!((c.uparrow, c.distance), (w("1/2,-1/2"), 0));

        // the gap 5/2 is filled by |-5/2| in the middle
        let c = w("7/2,3/2,-3/2,-5/2,-7/2").connectivity().unwrap();
        assert_eq!(c.mode, ConnectivityMode::TotallyConnected);

        // first gap empty, second gap missing 7/2: mixed
        let c = w("11/2,9/2,5/2,-5/2,-9/2,-11/2").connectivity().unwrap();
        assert_eq!(c.mode, ConnectivityMode::Mixed);

        assert_eq!(
            w("5/2,1/2").connectivity().unwrap().mode,
            ConnectivityMode::Typical
        );
        assert!(w("1,-1").connectivity().is_err());
        assert!(w("-1/2,1/2").connectivity().is_err());
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("3/2,-1/2").doubled(), &[3, -1]);
        assert_eq!(w("2,0,-1").doubled(), &[4, 0, -2]);
        assert_eq!("3/2,1".parse::<Weight>(), Err(Error::MixedParity));
        assert!(matches!("3/4".parse::<Weight>(), Err(Error::Parse(_))));
        assert!(matches!("a,1".parse::<Weight>(), Err(Error::Parse(_))));
        assert_eq!(w(" 5/2 , -5/2 ").to_string(), "5/2,-5/2");
    }
}
