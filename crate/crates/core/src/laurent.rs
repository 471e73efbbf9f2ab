//! Exact multivariate Laurent polynomials with half-integer exponents.
//!
//! Exponent vectors are stored doubled (`exp2[i] = 2·e_i`) and coefficients
//! are arbitrary-precision integers. `x_i` plays the role of `e^{ε_i}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::Half;

/// A permutation of `{0, …, n-1}`, stored as the image list `w(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(image: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; image.len()];
        for &i in &image {
            if i >= image.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Permutation(image))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(a, b);
        Permutation(image)
    }

    /// All `n!` permutations.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n).permutations(n).map(Permutation)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn sign(&self) -> i32 {
        let inversions = (0..self.0.len())
            .flat_map(|i| (i + 1..self.0.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| self.0[i] > self.0[j])
            .count();
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `w(x^e) = Π x_{w(i)}^{e_i}`.
    pub fn act_on_exponent(&self, exp2: &[i64]) -> Vec<i64> {
        let mut out = vec![0; exp2.len()];
        for (i, &e) in exp2.iter().enumerate() {
            out[self.0[i]] = e;
        }
        out
    }
}

const MAX_DIVISION_STEPS: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        LaurentPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], BigInt::one())
    }

    /// `coeff · x^{exp2/2}`.
    pub fn monomial(exp2: Vec<i64>, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(exp2.len());
        p.add_term(exp2, coeff.into());
        p
    }

    /// The variable `x_i`.
    pub fn var(n: usize, i: usize) -> Self {
        let mut exp2 = vec![0; n];
        exp2[i] = 2;
        Self::monomial(exp2, 1)
    }

    /// `x_i + sign·x_j`.
    pub fn binomial(n: usize, i: usize, j: usize, sign: i32) -> Self {
        let mut p = Self::var(n, i);
        let mut exp2 = vec![0; n];
        exp2[j] = 2;
        p.add_term(exp2, BigInt::from(sign));
        p
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Vec<i64>, BigInt)>,
    ) -> Result<Self> {
        let mut p = Self::zero(n);
        for (exp2, c) in terms {
            if exp2.len() != n {
                return Err(Error::VariableCount(n, exp2.len()));
            }
            p.add_term(exp2, c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (lexicographic) order of doubled exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exp2: &[i64]) -> BigInt {
        self.terms.get(exp2).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exp2: Vec<i64>, coeff: BigInt) {
        debug_assert_eq!(exp2.len(), self.n);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp2) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_n(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::VariableCount(self.n, other.n))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut out = Self::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.n);
        }
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Multiplies by the monomial `x^{exp2/2}`.
    pub fn shift(&self, exp2: &[i64]) -> Self {
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(exp2).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Divides every coefficient by `k`, failing if any remainder survives.
    pub fn div_scalar_exact(&self, k: &BigInt) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::NonExactDivision(
                "division by the zero scalar".into(),
            ));
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if !(c % k).is_zero() {
                return Err(Error::NonExactDivision(format!(
                    "coefficient {c} is not divisible by {k}"
                )));
            }
            terms.insert(e.clone(), c / k);
        }
        Ok(LaurentPoly { n: self.n, terms })
    }

    pub fn permute(&self, w: &Permutation) -> Self {
        assert_eq!(
            w.len(),
            self.n,
            "permutation size does not match variable count"
        );
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (w.act_on_exponent(e), c.clone()))
                .collect(),
        }
    }

    /// `Σ_w sgn(w) w(f)` over the symmetric group.
    pub fn antisymmetrize(&self) -> Self {
        let mut out = Self::zero(self.n);
        for w in Permutation::all(self.n) {
            let sign = BigInt::from(w.sign());
            for (e, c) in &self.terms {
                out.add_term(w.act_on_exponent(e), c * &sign);
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1))
            .all(|i| self.permute(&Permutation::transposition(self.n, i, i + 1)) == *self)
    }

    /// Value at `x_1 = … = x_n = 1`.
    pub fn specialize_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Exact quotient by `x_i + sign·x_j` (`i ≠ j`, `sign = ±1`).
    ///
    /// Terms are grouped by the exponents of the other variables, by the total
    /// degree in `x_i, x_j`, and by the half-unit class of the `x_i` exponent.
    /// Each group is `x_i^{a} x_j^{d-a-m}·P(x_i/x_j)·x_j^m` with `P` an ordinary
    /// polynomial of degree `m`, divided by `t + sign` synthetically.
    pub fn div_binomial(&self, i: usize, j: usize, sign: i32) -> Result<Self> {
        assert!(i != j && i < self.n && j < self.n && sign.abs() == 1);
        let mut groups: BTreeMap<(Vec<i64>, i64, i64), Vec<(i64, &BigInt)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[i] = 0;
            rest[j] = 0;
            groups
                .entry((rest, e[i] + e[j], e[i].rem_euclid(2)))
                .or_default()
                .push((e[i], c));
        }
        let mut out = Self::zero(self.n);
        let sign = BigInt::from(sign);
        for ((rest, total2, _), members) in groups {
            let low = members.iter().map(|m| m.0).min().unwrap();
            let high = members.iter().map(|m| m.0).max().unwrap();
            let degree = ((high - low) / 2) as usize;
            let mut coeffs = vec![BigInt::zero(); degree + 1];
            for (ei, c) in members {
                coeffs[((ei - low) / 2) as usize] = c.clone();
            }
            // P(t) = (t + sign)·Q(t): q_{m-1} = c_m, q_{k-1} = c_k - sign·q_k
            if degree == 0 {
                return Err(Error::NonExactDivision(format!(
                    "monomial group cannot be divided by x{} {} x{}",
                    i + 1,
                    if sign.is_positive() { "+" } else { "-" },
                    j + 1
                )));
            }
            let mut quotient = vec![BigInt::zero(); degree];
            quotient[degree - 1] = coeffs[degree].clone();
            for k in (1..degree).rev() {
                quotient[k - 1] = &coeffs[k] - &sign * &quotient[k];
            }
            let remainder = &coeffs[0] - &sign * &quotient[0];
            if !remainder.is_zero() {
                return Err(Error::NonExactDivision(format!(
                    "remainder {remainder} dividing by x{} {} x{}",
                    i + 1,
                    if sign.is_positive() { "+" } else { "-" },
                    j + 1
                )));
            }
            // term x_i^{low/2 + k} x_j^{(total - low)/2 - 1 - k}
            for (k, q) in quotient.into_iter().enumerate() {
                let mut e = rest.clone();
                e[i] = low + 2 * k as i64;
                e[j] = total2 - low - 2 - 2 * k as i64;
                out.add_term(e, q);
            }
        }
        Ok(out)
    }

    /// Exact quotient by the Vandermonde product `Π_{i<j}(x_i - x_j)`, one
    /// binomial factor at a time.
    pub fn div_vandermonde(&self) -> Result<Self> {
        let mut q = self.clone();
        for i in 0..self.n {
            for j in i + 1..self.n {
                q = q.div_binomial(i, j, -1)?;
            }
        }
        Ok(q)
    }

    /// Exact quotient `f / g`.
    ///
    /// Binomials `x_i ± x_j` go through [`LaurentPoly::div_binomial`]; any
    /// other divisor uses leading-term division in lexicographic order, which
    /// is exact in the Laurent ring whenever `g` divides `f`.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        self.check_n(g)?;
        if g.is_zero() {
            return Err(Error::NonExactDivision("division by zero".into()));
        }
        if let Some((i, j, sign)) = g.as_binomial() {
            return self.div_binomial(i, j, sign);
        }
        let (g_lead, g_lead_c) = g.terms.iter().next_back().unwrap();
        let (g_last, _) = g.terms.iter().next().unwrap();
        let mut rem = self.clone();
        let mut q = Self::zero(self.n);
        // every quotient exponent is at least min(f) - min(g) in lex order
        let floor: Option<Vec<i64>> = self
            .terms
            .keys()
            .next()
            .map(|e| e.iter().zip(g_last).map(|(a, b)| a - b).collect());
        let mut steps = 0usize;
        while let Some((lead, c)) = rem.terms.iter().next_back() {
            steps += 1;
            if steps > MAX_DIVISION_STEPS {
                return Err(Error::NonExactDivision(format!(
                    "no quotient found dividing {self} by {g}"
                )));
            }
            let e: Vec<i64> = lead.iter().zip(g_lead).map(|(a, b)| a - b).collect();
            if floor.as_ref().is_some_and(|f| e < *f) || !(c % g_lead_c).is_zero() {
                return Err(Error::NonExactDivision(format!(
                    "nonzero remainder dividing {self} by {g}"
                )));
            }
            let t = Self::monomial(e, c / g_lead_c);
            rem = rem.checked_sub(&t.checked_mul(g)?)?;
            q = q.checked_add(&t)?;
        }
        Ok(q)
    }

    /// Recognises `x_i ± x_j`.
    fn as_binomial(&self) -> Option<(usize, usize, i32)> {
        if self.terms.len() != 2 {
            return None;
        }
        let mut it = self.terms.iter();
        let (ea, ca) = it.next().unwrap();
        let (eb, cb) = it.next().unwrap();
        let unit = |e: &[i64]| {
            let mut nz = e.iter().enumerate().filter(|(_, &v)| v != 0);
            match (nz.next(), nz.next()) {
                (Some((k, &2)), None) => Some(k),
                _ => None,
            }
        };
        let (a, b) = (unit(ea)?, unit(eb)?);
        // BTreeMap order puts x_j (larger index) first
        let (i, j, ci, cj) = if a < b {
            (a, b, ca, cb)
        } else {
            (b, a, cb, ca)
        };
        if !ci.is_one() || cj.abs() != BigInt::one() {
            return None;
        }
        Some((i, j, if cj.is_positive() { 1 } else { -1 }))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("variable count mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl fmt::Display for LaurentPoly {
    /// Highest exponent first, e.g. `2*x1^(3/2)*x2^(-3/2) + 4*x1^(1/2)*x2^(-1/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = (c.is_negative(), c.abs());
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(i, &v)| {
                    if v == 2 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^({})", i + 1, Half(v))
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp2: Vec<i64>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exp2: e.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::deserialize(d)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| {
                let c: BigInt = t
                    .coeff
                    .parse()
                    .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.coeff)))?;
                Ok((t.exp2, c))
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        LaurentPoly::from_terms(raw.n, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(n, i)
    }

    #[test]
    fn ring_examples() {
        let f = &x(2, 0) + &x(2, 1);
        assert_eq!(&f * &LaurentPoly::one(2), f);
        let h = LaurentPoly::monomial(vec![1], 1);
        assert_eq!(&h * &h, x(1, 0));
        let g = &x(2, 0) - &x(2, 1);
        let sq = |i| &x(2, i) * &x(2, i);
        assert_eq!(&f * &g, &sq(0) - &sq(1));
        assert_eq!(
            x(2, 0).checked_add(&x(3, 0)),
            Err(Error::VariableCount(2, 3))
        );
        assert_eq!(
            x(2, 0).checked_mul(&x(3, 0)),
            Err(Error::VariableCount(2, 3))
        );
        assert!((&f + &(-&f)).is_zero());
    }

    #[test]
    fn permute_examples() {
        let s = Permutation::transposition(2, 0, 1);
        assert_eq!(x(2, 0).permute(&s), x(2, 1));
        let sym = &x(3, 0) + &(&x(3, 1) + &x(3, 2));
        for w in Permutation::all(3) {
            assert_eq!(sym.permute(&w), sym);
        }
        let m = LaurentPoly::monomial(vec![1, -1], 1);
        assert_eq!(m.permute(&s), LaurentPoly::monomial(vec![-1, 1], 1));
    }

    #[test]
    fn antisymmetrize_examples() {
        assert!((&x(2, 0) * &x(2, 1)).antisymmetrize().is_zero());
        let m = LaurentPoly::monomial(vec![1, -1], 1);
        let expected = &m - &LaurentPoly::monomial(vec![-1, 1], 1);
        assert_eq!(m.antisymmetrize(), expected);
        for a in -3..=3 {
            assert!(LaurentPoly::monomial(vec![a, a], 1)
                .antisymmetrize()
                .is_zero());
        }
    }

    #[test]
    fn exact_div_examples() {
        let sq = |i| &x(2, i) * &x(2, i);
        let diff = &sq(0) - &sq(1);
        let g = LaurentPoly::binomial(2, 0, 1, -1);
        assert_eq!(diff.exact_div(&g).unwrap(), &x(2, 0) + &x(2, 1));
        let f = &diff + &x(2, 0);
        assert_eq!(f.exact_div(&LaurentPoly::one(2)).unwrap(), f);
        assert!(matches!(f.exact_div(&g), Err(Error::NonExactDivision(_))));
        assert!(matches!(
            f.exact_div(&LaurentPoly::zero(2)),
            Err(Error::NonExactDivision(_))
        ));
    }

    #[test]
    fn exact_div_half_exponents() {
        let num = LaurentPoly::monomial(vec![3, -3], 1).antisymmetrize();
        let q = num.div_binomial(0, 1, -1).unwrap();
        // oracle: multiply the claimed quotient back
        let claimed = LaurentPoly::from_terms(
            2,
            [(vec![1, -3], 1), (vec![-1, -1], 1), (vec![-3, 1], 1)]
                .map(|(e, c)| (e, BigInt::from(c))),
        )
        .unwrap();
        assert_eq!(&claimed * &LaurentPoly::binomial(2, 0, 1, -1), num);
        assert_eq!(q, claimed);
    }

    #[test]
    fn exact_div_general_divisor() {
        let g = &(&x(3, 0) * &x(3, 1))
            + &(&LaurentPoly::monomial(vec![0, 0, -2], 3) + &LaurentPoly::one(3));
        let f = &(&x(3, 2) - &LaurentPoly::monomial(vec![1, -1, 0], 2)) + &x(3, 0);
        let prod = &f * &g;
        assert_eq!(prod.exact_div(&g).unwrap(), f);
        assert!(matches!(
            (&prod + &x(3, 1)).exact_div(&g),
            Err(Error::NonExactDivision(_))
        ));
    }

    #[test]
    fn specialize_examples() {
        assert_eq!((&x(2, 0) + &x(2, 1)).specialize_ones(), BigInt::from(2));
        assert_eq!(LaurentPoly::zero(3).specialize_ones(), BigInt::zero());
    }

    #[test]
    fn json_round_trip() {
        let p = &LaurentPoly::monomial(vec![3, -3], 2) - &LaurentPoly::monomial(vec![1, -1], 4);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"n":2,"terms":[{"exp2":[1,-1],"coeff":"-4"},{"exp2":[3,-3],"coeff":"2"}]}"#
        );
        assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), p);
        assert_eq!(p.to_string(), "2*x1^(3/2)*x2^(-3/2) - 4*x1^(1/2)*x2^(-1/2)");
    }

    #[test]
    fn vandermonde_division() {
        let n = 3;
        let mut v = LaurentPoly::one(n);
        for i in 0..n {
            for j in i + 1..n {
                v = &v * &LaurentPoly::binomial(n, i, j, -1);
            }
        }
        let f = LaurentPoly::monomial(vec![5, 1, -3], 1).antisymmetrize();
        let q = f.div_vandermonde().unwrap();
        assert!(q.is_symmetric());
        assert_eq!(&q * &v, f);
    }

    fn small_poly(n: usize) -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((prop::collection::vec(-4i64..=4, n), -3i64..=3), 0..5).prop_map(
            move |terms| {
                LaurentPoly::from_terms(n, terms.into_iter().map(|(e, c)| (e, BigInt::from(c))))
                    .unwrap()
            },
        )
    }

    fn perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn antisymmetrize_is_alternating(f in small_poly(3), a in 0usize..3, b in 0usize..3) {
            prop_assume!(a != b);
            let alt = f.antisymmetrize();
            prop_assert_eq!(alt.permute(&Permutation::transposition(3, a, b)), -&alt);
        }

        #[test]
        fn permute_is_group_action(f in small_poly(4), u in perm(4), v in perm(4)) {
            prop_assert_eq!(f.permute(&u).permute(&v), f.permute(&v.compose(&u)));
        }

        #[test]
        fn exact_div_round_trip(f in small_poly(3), g in small_poly(3)) {
            prop_assume!(!g.is_zero());
            prop_assert_eq!((&f * &g).exact_div(&g).unwrap(), f);
        }

        #[test]
        fn binomial_div_round_trip(f in small_poly(3), i in 0usize..3, j in 0usize..3, plus in any::<bool>()) {
            prop_assume!(i != j);
            let sign = if plus { 1 } else { -1 };
            let g = LaurentPoly::binomial(3, i, j, sign);
            prop_assert_eq!((&f * &g).div_binomial(i, j, sign).unwrap(), f);
        }
    }

    #[test]
    fn antisymmetrize_vanishes_iff_repeated_exponent() {
        for n in 1..=5usize {
            let exps: Vec<Vec<i64>> = (0..n)
                .map(|_| -2i64..=2)
                .multi_cartesian_product()
                .collect();
            for e in exps {
                let repeated = e.iter().duplicates().next().is_some();
                let alt = LaurentPoly::monomial(e.clone(), 1).antisymmetrize();
                assert_eq!(alt.is_zero(), repeated, "{e:?}");
            }
        }
    }
}
