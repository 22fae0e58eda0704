//! Power series in an auxiliary variable `t`, truncated at a fixed order,
//! with polynomial coefficients. Home of the plethystic exponential.

use super::BivarPoly;
use crate::coeff::Coeff;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<BivarPoly<C>>,
}

impl<C: Coeff> TruncatedSeries<C> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BivarPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BivarPoly::one();
        s
    }

    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn from_coeffs(mut coeffs: Vec<BivarPoly<C>>, order: usize) -> Self {
        coeffs.resize(order + 1, BivarPoly::zero());
        TruncatedSeries { coeffs }
    }

    /// `PExp(p t)` up to `t^order`.
    pub fn pexp(p: &BivarPoly<C>, order: usize) -> Self {
        TruncatedSeries {
            coeffs: pexp_sym(p, order),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BivarPoly<C> {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BivarPoly<C>] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BivarPoly<C>> {
        self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order(), "series orders differ");
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order(), "series orders differ");
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                out.coeffs[i + j] += &(a * b);
            }
        }
        out
    }
}

/// First `n + 1` coefficients of `PExp(p t) = Σ e(Sym^m) t^m`.
///
/// Uses `m s_m = Σ_{d=1}^{m} adams(p, d) s_{m-d}` with `s_0 = 1`. The division
/// by `m` is exact for any integer polynomial; a remainder means a bug and
/// aborts.
pub fn pexp_sym<C: Coeff>(p: &BivarPoly<C>, n: usize) -> Vec<BivarPoly<C>> {
    let adams: Vec<BivarPoly<C>> = (1..=n as u32).map(|d| p.adams(d)).collect();
    let mut s = Vec::with_capacity(n + 1);
    s.push(BivarPoly::one());
    for m in 1..=n {
        let mut acc = BivarPoly::zero();
        for d in 1..=m {
            acc += &(&adams[d - 1] * &s[m - d]);
        }
        let next = acc
            .exact_div(&C::from_i64(m as i64))
            .unwrap_or_else(|| panic!("plethystic recursion lost integrality at t^{m}"));
        s.push(next);
    }
    s
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
    fn torus_symmetric_powers() {
        // 3 s_3 = (q-1)(q^2-q) + (q^2-1)(q-1) + (q^3-1)
        let expect = vec![p("1"), p("q-1"), p("q^2-q"), p("q^3-q^2")];
        assert_eq!(pexp_sym(&p("q-1"), 3), expect);
    }

    #[test]
    fn constant_gives_binomials() {
        // s_m = C(c+m-1, m)
        let s = pexp_sym(&p("4"), 4);
        let expect = [1, 4, 10, 20, 35];
        for (got, want) in s.iter().zip(expect) {
            assert_eq!(*got, P::from_i64(want));
        }
        let s = pexp_sym(&p("-2"), 3);
        // C(-2+m-1, m): 1, -2, 1, 0
        assert_eq!(s, vec![p("1"), p("-2"), p("1"), p("0")]);
    }

    #[test]
    fn pgl2_square() {
        // ((q^3-q)^2 + (q^6-q^2)) / 2
        assert_eq!(pexp_sym(&p("q^3-q"), 2)[2], p("q^6-q^4"));
    }

    #[test]
    fn zero_input() {
        let s = pexp_sym(&P::zero(), 4);
        assert_eq!(s[0], P::one());
        assert!(s[1..].iter().all(BivarPoly::is_zero));
    }

    #[test]
    fn series_product_truncates() {
        let a = TruncatedSeries::from_coeffs(vec![p("1"), p("q")], 2);
        let sq = a.mul(&a);
        assert_eq!(sq.coeffs(), &[p("1"), p("2q"), p("q^2")]);
        let cube = sq.mul(&a);
        assert_eq!(cube.coeffs(), &[p("1"), p("3q"), p("3q^2")]);
    }
}
