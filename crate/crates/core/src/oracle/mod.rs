//! Point counting over finite fields as an independent check on the
//! E-polynomial formulas.
//!
//! For a polynomial-count variety `X` with `|X(F_{q^d})| = e(X)(q^d)`, the
//! numbers of `F_q`-points of `Sym^n X` and `C_n(X)/S_n` depend only on the
//! numbers `N_d` of closed points of each degree:
//!
//! * `Σ |Sym^n X(F_q)| t^n = ∏_d (1 - t^d)^{-N_d}`
//! * `Σ |(C_n(X)/S_n)(F_q)| t^n = ∏_d (1 + t^d)^{N_d}`
//!
//! and `|C_n(X)(F_q)|` is a falling factorial in `|X(F_q)|`. None of these
//! go through the polynomial recursions in [`crate::confspace`].

mod field;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::poly::BivarPoly;

pub use field::SmallField;

/// `|X(F_{q^d})|` for `d = 1..=counts.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointCountProfile {
    q: u64,
    counts: Vec<BigInt>,
}

impl PointCountProfile {
    pub fn new(q: u64, counts: Vec<BigInt>) -> Result<Self> {
        if !is_prime_power(q) {
            return Err(Error::InvalidArgument(format!("{q} is not a prime power")));
        }
        if let Some(c) = counts.iter().find(|c| c.is_negative()) {
            return Err(Error::NonRealizable(format!("negative point count {c}")));
        }
        let profile = PointCountProfile { q, counts };
        closed_points(&profile)?;
        Ok(profile)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    pub fn depth(&self) -> usize {
        self.counts.len()
    }
}

/// Numbers of closed points of degree `d = 1..`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedPointCounts {
    q: u64,
    by_degree: Vec<BigInt>,
}

impl ClosedPointCounts {
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Entry `d - 1` is the number of closed points of degree `d`.
    pub fn by_degree(&self) -> &[BigInt] {
        &self.by_degree
    }

    pub fn depth(&self) -> usize {
        self.by_degree.len()
    }
}

pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q)
        .find(|p| q.is_multiple_of(*p))
        .expect("q >= 2 has a prime factor");
    let mut m = q;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

fn is_prime(q: u64) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

fn mobius(n: u64) -> i64 {
    let mut m = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// Point counts of a balanced E-polynomial: `counts[d-1] = p(q^d)`.
pub fn profile_from_epoly<C: Coeff>(
    p: &BivarPoly<C>,
    q: u64,
    n_max: usize,
) -> Result<PointCountProfile> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be positive".into()));
    }
    let big = p.map_coeffs(Coeff::to_big);
    let counts = (1..=n_max as u32)
        .map(|d| big.eval_balanced(&num_traits::pow(BigInt::from(q), d as usize)))
        .collect::<Result<Vec<_>>>()?;
    PointCountProfile::new(q, counts)
}

/// Möbius inversion `N_d = (1/d) Σ_{e | d} μ(d/e) |X(F_{q^e})|`.
pub fn closed_points(profile: &PointCountProfile) -> Result<ClosedPointCounts> {
    let by_degree = (1..=profile.depth() as u64)
        .map(|d| {
            let sum: BigInt = (1..=d)
                .filter(|e| d % e == 0)
                .map(|e| &profile.counts[e as usize - 1] * mobius(d / e))
                .sum();
            let (n_d, rem) = sum.div_rem(&BigInt::from(d));
            if !rem.is_zero() || n_d.is_negative() {
                return Err(Error::NonRealizable(format!(
                    "degree-{d} closed point count {sum}/{d} is not a nonnegative integer"
                )));
            }
            Ok(n_d)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClosedPointCounts {
        q: profile.q,
        by_degree,
    })
}

/// Coefficient of `t^n` in `∏_d Σ_k weight(N_d, k) t^{dk}`.
fn euler_product(
    cp: &ClosedPointCounts,
    n: usize,
    weight: impl Fn(&BigInt, usize) -> BigInt,
) -> Result<BigInt> {
    if n > cp.depth() {
        return Err(Error::InvalidArgument(format!(
            "n = {n} exceeds the profile depth {}",
            cp.depth()
        )));
    }
    let mut series = vec![BigInt::zero(); n + 1];
    series[0] = BigInt::one();
    for d in 1..=n {
        let factor: Vec<(usize, BigInt)> = (0..=n / d)
            .map(|k| (d * k, weight(&cp.by_degree[d - 1], k)))
            .collect();
        let mut next = vec![BigInt::zero(); n + 1];
        for (i, s) in series.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            for (shift, w) in &factor {
                if i + shift > n {
                    break;
                }
                next[i + shift] += s * w;
            }
        }
        series = next;
    }
    Ok(series.swap_remove(n))
}

fn binomial(top: &BigInt, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (top - i) / (i + 1))
}

/// `|Sym^n X(F_q)|`: multisets of closed points of total degree `n`.
pub fn count_sym(cp: &ClosedPointCounts, n: usize) -> Result<BigInt> {
    euler_product(cp, n, |count, k| binomial(&(count + k - 1), k))
}

/// `|(C_n(X)/S_n)(F_q)|`: sets of distinct closed points of total degree `n`.
pub fn count_unordered_config(cp: &ClosedPointCounts, n: usize) -> Result<BigInt> {
    euler_product(cp, n, binomial)
}

/// `|C_n(X)(F_q)| = ∏_{i<n} (|X(F_q)| - i)`, zero once `n` exceeds the
/// number of rational points.
pub fn count_ordered_config(profile: &PointCountProfile, n: usize) -> BigInt {
    let points = &profile.counts[0];
    let mut acc = BigInt::one();
    for i in 0..n {
        let factor = points - i;
        if !factor.is_positive() {
            return BigInt::zero();
        }
        acc *= factor;
    }
    acc
}

/// `|PGL_2(F_{q^d})|` by listing every 2×2 matrix over `F_{q^d}` and keeping
/// the invertible ones whose first nonzero entry is 1 (one per scalar class).
pub fn enumerate_pgl2(q: u64, d: u32) -> Result<u64> {
    if !is_prime(q) {
        return Err(Error::InvalidArgument(format!("{q} is not prime")));
    }
    let field = match d {
        1 => SmallField::prime(q),
        2 => SmallField::quadratic(q),
        _ => {
            return Err(Error::InvalidArgument(
                "extension degree must be 1 or 2".into(),
            ))
        }
    };
    let size = field.size();
    if size.checked_pow(3).is_none_or(|s| s > 1_000_000) {
        return Err(Error::BoundExceeded {
            n: size as usize,
            bound: 100,
        });
    }
    let mut count = 0;
    for a in 0..size {
        for b in 0..size {
            for c in 0..size {
                for e in 0..size {
                    let leading = [a, b, c, e].into_iter().find(|&x| x != 0);
                    if leading != Some(1) {
                        continue;
                    }
                    if field.sub(field.mul(a, e), field.mul(b, c)) != 0 {
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> BivarPoly<BigInt> {
        s.parse().unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn closed(s: &str, q: u64, depth: usize) -> ClosedPointCounts {
        closed_points(&profile_from_epoly(&poly(s), q, depth).unwrap()).unwrap()
    }

    #[test]
    fn profiles() {
        let pgl2 = profile_from_epoly(&poly("q^3-q"), 2, 2).unwrap();
        assert_eq!(pgl2.counts(), &[big(6), big(60)]);
        let torus = profile_from_epoly(&poly("q-1"), 3, 3).unwrap();
        assert_eq!(torus.counts()[2], big(26));
        assert!(matches!(
            profile_from_epoly(&poly("u"), 2, 2),
            Err(Error::NotBalanced { .. })
        ));
        assert!(profile_from_epoly(&poly("q"), 6, 2).is_err());
    }

    #[test]
    fn closed_point_counts() {
        assert_eq!(closed("q", 2, 3).by_degree(), &[big(2), big(1), big(2)]);
        assert_eq!(closed("1", 5, 3).by_degree(), &[big(1), big(0), big(0)]);
        assert_eq!(&closed("q^3-q", 2, 2).by_degree()[..2], &[big(6), big(27)]);
        // 3 points over F_2 but only 4 over F_4 is not a variety
        assert!(matches!(
            PointCountProfile::new(2, vec![big(3), big(4)]),
            Err(Error::NonRealizable(_))
        ));
    }

    #[test]
    fn symmetric_counts() {
        assert_eq!(count_sym(&closed("q", 2, 3), 3).unwrap(), big(8));
        assert_eq!(count_sym(&closed("q", 2, 3), 0).unwrap(), big(1));
        assert_eq!(count_sym(&closed("q^3-q", 2, 2), 2).unwrap(), big(48));
        assert!(count_sym(&closed("q", 2, 3), 4).is_err());
    }

    #[test]
    fn unordered_counts() {
        assert_eq!(
            count_unordered_config(&closed("q^3-q", 2, 2), 2).unwrap(),
            big(42)
        );
        assert_eq!(
            count_unordered_config(&closed("q", 2, 2), 2).unwrap(),
            big(2)
        );
        assert_eq!(
            count_unordered_config(&closed("q", 2, 2), 0).unwrap(),
            big(1)
        );
    }

    #[test]
    fn ordered_counts() {
        let pgl2 = profile_from_epoly(&poly("q^3-q"), 2, 1).unwrap();
        assert_eq!(count_ordered_config(&pgl2, 2), big(30));
        assert_eq!(count_ordered_config(&pgl2, 0), big(1));
        assert_eq!(count_ordered_config(&pgl2, 7), big(0));
    }

    #[test]
    fn pgl2_enumeration() {
        assert_eq!(enumerate_pgl2(2, 1).unwrap(), 6);
        assert_eq!(enumerate_pgl2(3, 1).unwrap(), 24);
        assert_eq!(enumerate_pgl2(2, 2).unwrap(), 60);
        assert!(enumerate_pgl2(4, 1).is_err());
        assert!(enumerate_pgl2(2, 3).is_err());
        assert!(matches!(
            enumerate_pgl2(101, 1),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn number_theory_helpers() {
        assert!(is_prime_power(8) && is_prime_power(9) && !is_prime_power(12));
        assert_eq!(
            (1..=10).map(mobius).collect::<Vec<_>>(),
            vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
        );
    }
}
