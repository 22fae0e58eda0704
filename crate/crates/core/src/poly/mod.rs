//! Sparse bivariate polynomials in `u`, `v` with exact integer coefficients.
//!
//! All E-polynomials are values of [`BivarPoly`]. The single variable `q` used
//! throughout the examples is the monomial `uv`; a polynomial whose terms all
//! have equal `u` and `v` exponents is *balanced* and prints in `q`.

mod parse;
mod series;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::coeff::Coeff;
use crate::error::{Error, Result};

pub use parse::parse_poly;
pub use series::{pexp_sym, TruncatedSeries};

/// Exponent pair `u^u v^v`.
///
/// Ordered by total degree, then by the `u` exponent, so that iterating a
/// term map in reverse gives the printing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub u: u32,
    pub v: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { u: 0, v: 0 };

    pub fn new(u: u32, v: u32) -> Self {
        Monomial { u, v }
    }

    /// `q^k = (uv)^k`.
    pub fn q(k: u32) -> Self {
        Monomial { u: k, v: k }
    }

    pub fn degree(&self) -> u64 {
        self.u as u64 + self.v as u64
    }

    pub fn is_balanced(&self) -> bool {
        self.u == self.v
    }

    fn checked_mul(self, other: Monomial) -> Monomial {
        Monomial {
            u: self.u.checked_add(other.u).expect("u exponent overflow"),
            v: self.v.checked_add(other.v).expect("v exponent overflow"),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.u.cmp(&other.u))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `u`, `v` with coefficients in `C`, stored as a zero-free
/// term map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BivarPoly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Default for BivarPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> BivarPoly<C> {
    pub fn zero() -> Self {
        BivarPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, Monomial::ONE)
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(C::from_i64(c))
    }

    pub fn monomial(c: C, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        BivarPoly { terms }
    }

    /// The variable `q = uv`.
    pub fn q() -> Self {
        Self::monomial(C::one(), Monomial::q(1))
    }

    /// Builds `Σ coeffs[k] q^k`.
    pub fn from_q_coeffs(coeffs: &[i64]) -> Self {
        coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| (Monomial::q(k as u32), C::from_i64(c)))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_balanced(&self) -> bool {
        self.terms.keys().all(Monomial::is_balanced)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> C {
        self.terms.get(&m).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in ascending order (lowest total degree first).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Coefficients in `q`, index `k` holding the coefficient of `q^k`.
    pub fn q_coeffs(&self) -> Result<Vec<C>> {
        self.check_balanced()?;
        let top = self
            .terms
            .keys()
            .next_back()
            .map_or(0, |m| m.u as usize + 1);
        let mut out = vec![C::zero(); top];
        for (m, c) in &self.terms {
            out[m.u as usize] = c.clone();
        }
        Ok(out)
    }

    pub fn check_balanced(&self) -> Result<()> {
        match self.terms.keys().find(|m| !m.is_balanced()) {
            Some(m) => Err(Error::NotBalanced { u: m.u, v: m.v }),
            None => Ok(()),
        }
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (*m, x.clone() * c.clone()))
                .collect(),
        }
    }

    /// Divides every coefficient by `d`, or `None` if some coefficient is not
    /// a multiple of `d`.
    pub fn exact_div(&self, d: &C) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (quot, rem) = c.div_rem(d);
            if !rem.is_zero() {
                return None;
            }
            terms.insert(*m, quot);
        }
        Some(BivarPoly { terms })
    }

    /// Adams operation `u -> u^d, v -> v^d`.
    pub fn adams(&self, d: u32) -> Self {
        assert!(d >= 1, "adams operation needs d >= 1");
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let m = Monomial {
                        u: m.u.checked_mul(d).expect("u exponent overflow"),
                        v: m.v.checked_mul(d).expect("v exponent overflow"),
                    };
                    (m, c.clone())
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact value at `u = u0`, `v = v0`.
    pub fn eval_int(&self, u0: &C, v0: &C) -> C {
        self.terms.iter().fold(C::zero(), |acc, (m, c)| {
            acc + c.clone()
                * num_traits::pow(u0.clone(), m.u as usize)
                * num_traits::pow(v0.clone(), m.v as usize)
        })
    }

    /// Value of a balanced polynomial at `q = q0`.
    pub fn eval_balanced(&self, q0: &C) -> Result<C> {
        self.check_balanced()?;
        Ok(self.terms.iter().fold(C::zero(), |acc, (m, c)| {
            acc + c.clone() * num_traits::pow(q0.clone(), m.u as usize)
        }))
    }

    /// Maps coefficients into another ring.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> BivarPoly<D> {
        self.terms.iter().map(|(m, c)| (*m, f(c))).collect()
    }
}

impl<C: Coeff> FromIterator<(Monomial, C)> for BivarPoly<C> {
    fn from_iter<I: IntoIterator<Item = (Monomial, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }
}

impl<C: Coeff> Zero for BivarPoly<C> {
    fn zero() -> Self {
        BivarPoly::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coeff> One for BivarPoly<C> {
    fn one() -> Self {
        BivarPoly::one()
    }
}

impl<C: Coeff> AddAssign<&BivarPoly<C>> for BivarPoly<C> {
    fn add_assign(&mut self, rhs: &BivarPoly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<C: Coeff> SubAssign<&BivarPoly<C>> for BivarPoly<C> {
    fn sub_assign(&mut self, rhs: &BivarPoly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl<C: Coeff> Add<&BivarPoly<C>> for &BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn add(self, rhs: &BivarPoly<C>) -> BivarPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coeff> Sub<&BivarPoly<C>> for &BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn sub(self, rhs: &BivarPoly<C>) -> BivarPoly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coeff> Mul<&BivarPoly<C>> for &BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn mul(self, rhs: &BivarPoly<C>) -> BivarPoly<C> {
        let mut out = BivarPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.checked_mul(*mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn neg(self) -> BivarPoly<C> {
        BivarPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($imp:ident, $method:ident) => {
        impl<C: Coeff> $imp<BivarPoly<C>> for BivarPoly<C> {
            type Output = BivarPoly<C>;

            fn $method(self, rhs: BivarPoly<C>) -> BivarPoly<C> {
                (&self).$method(&rhs)
            }
        }

        impl<C: Coeff> $imp<&BivarPoly<C>> for BivarPoly<C> {
            type Output = BivarPoly<C>;

            fn $method(self, rhs: &BivarPoly<C>) -> BivarPoly<C> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> Neg for BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn neg(self) -> BivarPoly<C> {
        -&self
    }
}

impl<C: Coeff> std::iter::Sum for BivarPoly<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<C: Coeff> std::iter::Product for BivarPoly<C> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: char, exp: u32) -> fmt::Result {
    match exp {
        0 => Ok(()),
        1 => write!(f, "{name}"),
        e => write!(f, "{name}^{e}"),
    }
}

impl<C: Coeff> fmt::Display for BivarPoly<C> {
    /// Descending total degree, then descending `u` exponent. Balanced
    /// polynomials print in `q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let balanced = self.is_balanced();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_const = *m == Monomial::ONE;
            if is_const || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            if balanced {
                write_var(f, 'q', m.u)?;
            } else {
                write_var(f, 'u', m.u)?;
                write_var(f, 'v', m.v)?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> FromStr for BivarPoly<C> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = BivarPoly<BigInt>;

    fn p(s: &str) -> P {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert!((p("q^3-q") + p("-q^3+q")).is_zero());
        assert_eq!(p("q^3-q") + p("1"), p("q^3-q+1"));
        let c2 = p("q^6 - 2q^4 - q^3 + q^2 + q");
        let c2s = p("q^6 - q^4 - q^3 + q");
        assert_eq!(&c2s + &(&c2 - &c2s), c2);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("q^3-q") * P::one(), p("q^3-q"));
        assert_eq!(p("q^3-q") * p("q^3-q-1"), p("q^6 - 2q^4 - q^3 + q^2 + q"));
        assert_eq!(p("q-1") * p("q+1"), p("q^2-1"));
    }

    #[test]
    fn adams_examples() {
        assert_eq!(p("q^3-q").adams(1), p("q^3-q"));
        assert_eq!(p("q^3-q").adams(2), p("q^6-q^2"));
        assert_eq!(p("u*v^2").adams(3), p("u^3v^6"));
    }

    #[test]
    fn eval_examples() {
        let three = BigInt::from(3);
        assert_eq!(p("q^3-q").eval_balanced(&three).unwrap(), BigInt::from(24));
        // q = uv at u = 3, v = 1
        assert_eq!(
            p("q^3-q").eval_int(&three, &BigInt::from(1)),
            BigInt::from(24)
        );
        assert_eq!(P::zero().eval_int(&three, &three), BigInt::from(0));
        assert_eq!(
            p("q^6-q^4-q^3+q").eval_balanced(&BigInt::from(2)).unwrap(),
            BigInt::from(42)
        );
        assert!(p("u").eval_balanced(&three).is_err());
    }

    #[test]
    fn display_order_and_forms() {
        assert_eq!(
            p("-2q + q^9 - 3q^2 + q^3 - 3q^7 + 6q^4 - 3q^6 + 3q^5").to_string(),
            "q^9 - 3q^7 - 3q^6 + 3q^5 + 6q^4 + q^3 - 3q^2 - 2q"
        );
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(p("-q^4+q^2").to_string(), "-q^4 + q^2");
        assert_eq!(
            p("v + u + 3uv - u^2*v^3").to_string(),
            "-u^2v^3 + 3uv + u + v"
        );
    }

    #[test]
    fn q_coeffs_of_balanced() {
        let c: Vec<i64> = BivarPoly::<i64>::from_str("q^3-q")
            .unwrap()
            .q_coeffs()
            .unwrap();
        assert_eq!(c, vec![0, -1, 0, 1]);
    }

    #[test]
    fn exact_div_detects_remainder() {
        assert_eq!(p("2q+4").exact_div(&BigInt::from(2)), Some(p("q+2")));
        assert_eq!(p("2q+3").exact_div(&BigInt::from(2)), None);
    }

    #[test]
    fn narrow_coefficients_agree_with_bigint() {
        let a: BivarPoly<i64> = "q^3-q".parse().unwrap();
        let b: BivarPoly<i64> = "q^3-q-1".parse().unwrap();
        let prod = &a * &b;
        assert_eq!(prod.to_string(), (p("q^3-q") * p("q^3-q-1")).to_string());
    }
}
