//! E-polynomials of configuration spaces.
//!
//! Covers the ordered configuration space `C_n(X)`, its quotients by `S_n`
//! and by Young subgroups, symmetric products, and the `S_n`-equivariant
//! E-polynomial of the configuration space of orbits `C_n(X, G)`.
//!
//! Varieties enter only through their E-polynomials. Hypotheses on the
//! geometry (for orbits: `G` connected reductive acting freely on the
//! semistable locus, so that `X → X⫽G` is a principal bundle) are the
//! caller's responsibility and are not checked.

use std::collections::BTreeMap;

use crate::coeff::Coeff;
use crate::error::Result;
use crate::partition::{p_length, partitions_of, set_partition_count, Partition};
use crate::poly::{pexp_sym, BivarPoly};
use crate::repring::{solve_plus_minus, tensor, trivial_coefficient, EquivariantEPoly};

/// A variety, represented by its E-polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyClass<C> {
    pub epoly: BivarPoly<C>,
    pub label: String,
}

impl<C: Coeff> VarietyClass<C> {
    pub fn new(epoly: BivarPoly<C>, label: impl Into<String>) -> Self {
        VarietyClass {
            epoly,
            label: label.into(),
        }
    }

    /// Unlabelled variety; the label is the printed polynomial.
    pub fn from_epoly(epoly: BivarPoly<C>) -> Self {
        let label = epoly.to_string();
        VarietyClass { epoly, label }
    }

    /// `X` minus `m` points: each point contributes `1` to the E-polynomial.
    pub fn remove_points(&self, m: usize) -> Self {
        if m == 0 {
            return self.clone();
        }
        VarietyClass {
            epoly: &self.epoly - &BivarPoly::from_i64(m as i64),
            label: format!("{} - {m} pts", self.label),
        }
    }
}

/// The quotient `X⫽G` and the group `G` of a free action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSetup<C> {
    pub quotient: VarietyClass<C>,
    pub group: VarietyClass<C>,
}

impl<C: Coeff> OrbitSetup<C> {
    pub fn new(quotient: VarietyClass<C>, group: VarietyClass<C>) -> Self {
        OrbitSetup { quotient, group }
    }

    /// Removes the fibres over `m` points of the quotient.
    pub fn remove_orbits(&self, m: usize) -> Self {
        OrbitSetup {
            quotient: self.quotient.remove_points(m),
            group: self.group.clone(),
        }
    }
}

/// `e(C_n(X)) = ∏_{i<n} (e(X) - i)`.
pub fn ordered_config<C: Coeff>(x: &VarietyClass<C>, n: usize) -> BivarPoly<C> {
    (0..n)
        .map(|i| &x.epoly - &BivarPoly::from_i64(i as i64))
        .product()
}

/// `e(C_n(X))` by removing the generalized diagonals from `X^n`:
/// `e(X)^n - Σ_{λ ≠ (1^n)} #{set partitions of shape λ} · e(C_{len λ}(X))`.
pub fn ordered_config_recursive<C: Coeff>(x: &VarietyClass<C>, n: usize) -> BivarPoly<C> {
    let mut memo: Vec<BivarPoly<C>> = Vec::with_capacity(n + 1);
    let mut power = BivarPoly::one();
    for m in 0..=n {
        let mut value = power.clone();
        let finest = Partition::column(m);
        for shape in partitions_of(m) {
            if shape == finest {
                continue;
            }
            let count = C::from_big_checked(&set_partition_count(&shape));
            value -= &memo[shape.len()].scale(&count);
        }
        memo.push(value);
        power = &power * &x.epoly;
    }
    memo.swap_remove(n)
}

/// `e(Sym^n X)`, the `t^n` coefficient of `PExp(e(X) t)`.
pub fn sym_product<C: Coeff>(x: &VarietyClass<C>, n: usize) -> BivarPoly<C> {
    pexp_sym(&x.epoly, n).swap_remove(n)
}

/// `e(C_l(X)/S_l)` for `l = 0..=n`.
fn unordered_table<C: Coeff>(epoly: &BivarPoly<C>, n: usize) -> Vec<BivarPoly<C>> {
    let sym = pexp_sym(epoly, n);
    let mut out: Vec<BivarPoly<C>> = Vec::with_capacity(n + 1);
    for (m, s) in sym.into_iter().enumerate() {
        let mut value = s;
        for (l, lower) in out.iter().enumerate().take(m).skip(1) {
            value -= &lower.scale(&C::from_big_checked(&p_length(m, l)));
        }
        out.push(value);
    }
    out
}

/// `e(C_n(X)/S_n) = e(Sym^n X) - Σ_{l=1}^{n-1} p(n, l) e(C_l(X)/S_l)`.
pub fn unordered_config<C: Coeff>(x: &VarietyClass<C>, n: usize) -> BivarPoly<C> {
    unordered_table(&x.epoly, n).swap_remove(n)
}

/// `e(C_n(X)/S_n)` from the generating function
/// `Σ_n e(C_n(X)/S_n) t^n = PExp(e(X) t) · PExp(-e(X) t²)`.
///
/// Agrees with point counts of polynomial-count varieties for every `n`;
/// [`unordered_config`] agrees with it only for `n ≤ 2` in general.
pub fn unordered_config_by_pexp<C: Coeff>(x: &VarietyClass<C>, n: usize) -> BivarPoly<C> {
    let sym = pexp_sym(&x.epoly, n);
    let neg = pexp_sym(&-&x.epoly, n / 2);
    (0..=n / 2).map(|k| &sym[n - 2 * k] * &neg[k]).sum()
}

/// `e(X^n/S_λ) = ∏ e(Sym^{λ_i} X)`.
pub fn power_quotient<C: Coeff>(x: &VarietyClass<C>, lambda: &Partition) -> BivarPoly<C> {
    let top = lambda.parts().first().copied().unwrap_or(0);
    let sym = pexp_sym(&x.epoly, top);
    lambda.parts().iter().map(|&k| sym[k].clone()).product()
}

/// `e(C_n(X)/S_λ) = ∏_i e(C_{λ_i}(X - {n_i points})/S_{λ_i})` with
/// `n_i = λ_1 + … + λ_{i-1}`.
pub fn config_quotient<C: Coeff>(x: &VarietyClass<C>, lambda: &Partition) -> BivarPoly<C> {
    let mut removed = 0;
    let mut acc = BivarPoly::one();
    for &part in lambda.parts() {
        acc = &acc * &unordered_config(&x.remove_points(removed), part);
        removed += part;
    }
    acc
}

/// `e_{S_n}(C_n(X))`, from the quotients by every Young subgroup.
pub fn equivariant_config<C: Coeff>(x: &VarietyClass<C>, n: usize) -> Result<EquivariantEPoly<C>> {
    let rhs: BTreeMap<Partition, BivarPoly<C>> = partitions_of(n)
        .into_iter()
        .map(|mu| {
            let value = config_quotient(x, &mu);
            (mu, value)
        })
        .collect();
    solve_plus_minus(n, &rhs)
}

/// `e_{S_n}(G^n)` for `S_n` permuting the factors.
pub fn equivariant_power<C: Coeff>(g: &VarietyClass<C>, n: usize) -> Result<EquivariantEPoly<C>> {
    let rhs: BTreeMap<Partition, BivarPoly<C>> = partitions_of(n)
        .into_iter()
        .map(|mu| {
            let value = power_quotient(g, &mu);
            (mu, value)
        })
        .collect();
    solve_plus_minus(n, &rhs)
}

/// `e_{S_n}(C_n(X, G)) = e_{S_n}(C_n(X⫽G)) ⊗ e_{S_n}(G^n)`.
pub fn orbit_equivariant<C: Coeff>(setup: &OrbitSetup<C>, n: usize) -> Result<EquivariantEPoly<C>> {
    let base = equivariant_config(&setup.quotient, n)?;
    let fibre = equivariant_power(&setup.group, n)?;
    tensor(&base, &fibre)
}

/// `e(C_n(X, G)/S_λ)` as the product over the parts of `λ` of the
/// `S_{λ_i}`-quotients, the `i`-th factor taken over `X⫽G` minus `n_i`
/// points.
pub fn orbit_lambda_quotient<C: Coeff>(
    setup: &OrbitSetup<C>,
    lambda: &Partition,
) -> Result<BivarPoly<C>> {
    let mut removed = 0;
    let mut acc = BivarPoly::one();
    for &part in lambda.parts() {
        let factor = orbit_equivariant(&setup.remove_orbits(removed), part)?;
        acc = &acc * &trivial_coefficient(&factor);
        removed += part;
    }
    Ok(acc)
}
