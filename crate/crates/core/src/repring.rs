//! The ring `R(S_n)[u, v]` of equivariant E-polynomials.
//!
//! An [`EquivariantEPoly`] is a finite sum `Σ_λ a_λ V_λ` of irreducible
//! `S_n`-representations with polynomial coefficients. Specializations
//! recover ordinary E-polynomials: the dimension pairing gives `e(X)`, the
//! trivial coefficient gives `e(X/S_n)`, and the fixed-space pairing against
//! a Young subgroup gives `e(X/S_μ)`. [`solve_plus_minus`] inverts the last
//! map.

use std::collections::BTreeMap;

use crate::character::{character_table, fixed_dims, kronecker_table};
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::poly::BivarPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantEPoly<C> {
    n: usize,
    coeffs: BTreeMap<Partition, BivarPoly<C>>,
}

impl<C: Coeff> EquivariantEPoly<C> {
    pub fn zero(n: usize) -> Self {
        EquivariantEPoly {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// `p · V_(n)`.
    pub fn trivial(n: usize, p: BivarPoly<C>) -> Self {
        let mut out = Self::zero(n);
        out.set(Partition::row(n), p)
            .expect("(n) is a partition of n");
        out
    }

    pub fn from_map(
        n: usize,
        coeffs: impl IntoIterator<Item = (Partition, BivarPoly<C>)>,
    ) -> Result<Self> {
        let mut out = Self::zero(n);
        for (lambda, p) in coeffs {
            out.add_to(lambda, &p)?;
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, lambda: &Partition) -> Result<()> {
        if lambda.n() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: lambda.n(),
            });
        }
        Ok(())
    }

    pub fn set(&mut self, lambda: Partition, p: BivarPoly<C>) -> Result<()> {
        self.check(&lambda)?;
        if p.is_zero() {
            self.coeffs.remove(&lambda);
        } else {
            self.coeffs.insert(lambda, p);
        }
        Ok(())
    }

    pub fn add_to(&mut self, lambda: Partition, p: &BivarPoly<C>) -> Result<()> {
        self.check(&lambda)?;
        let entry = self.coeffs.entry(lambda).or_default();
        *entry += p;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    /// Coefficient of `V_λ`; zero when absent.
    pub fn get(&self, lambda: &Partition) -> BivarPoly<C> {
        self.coeffs
            .get(lambda)
            .cloned()
            .unwrap_or_else(BivarPoly::zero)
    }

    /// Nonzero coefficients in canonical partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BivarPoly<C>)> {
        self.coeffs.iter()
    }

    /// Every coefficient, zeros included, in canonical order.
    pub fn dense(&self) -> Vec<(Partition, BivarPoly<C>)> {
        partitions_of(self.n)
            .into_iter()
            .map(|lambda| {
                let p = self.get(&lambda);
                (lambda, p)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Internal tensor product: `[ν] = Σ_{λ,μ} g(λ,μ,ν) a_λ b_μ`.
pub fn tensor<C: Coeff>(
    a: &EquivariantEPoly<C>,
    b: &EquivariantEPoly<C>,
) -> Result<EquivariantEPoly<C>> {
    if a.n != b.n {
        return Err(Error::SizeMismatch {
            expected: a.n,
            found: b.n,
        });
    }
    let n = a.n;
    let table = character_table(n)?;
    let kron = kronecker_table(n)?;
    let order = table.order();
    let mut sums = vec![BivarPoly::<C>::zero(); order.len()];
    for (lambda, pa) in a.iter() {
        let i = table.index_of(lambda).expect("key is a partition of n");
        for (mu, pb) in b.iter() {
            let j = table.index_of(mu).expect("key is a partition of n");
            let product = pa * pb;
            for (k, sum) in sums.iter_mut().enumerate() {
                let g = kron.get(i, j, k);
                if g != 0 {
                    *sum += &product.scale(&C::from_i64(g as i64));
                }
            }
        }
    }
    EquivariantEPoly::from_map(n, order.iter().cloned().zip(sums))
}

/// `Σ_λ a_λ dim V_λ`, the non-equivariant E-polynomial.
pub fn dim_pairing<C: Coeff>(a: &EquivariantEPoly<C>) -> Result<BivarPoly<C>> {
    if a.is_zero() {
        return Ok(BivarPoly::zero());
    }
    let table = character_table(a.n)?;
    let dims = table.dimensions();
    Ok(a.iter()
        .map(|(lambda, p)| {
            let i = table.index_of(lambda).expect("key is a partition of n");
            p.scale(&C::from_i64(dims[i]))
        })
        .sum())
}

/// Coefficient of the trivial representation `V_(n)`.
pub fn trivial_coefficient<C: Coeff>(a: &EquivariantEPoly<C>) -> BivarPoly<C> {
    a.get(&Partition::row(a.n))
}

/// `Σ_λ a_λ χ_λ^μ`, the E-polynomial of the quotient by `S_μ`.
pub fn subgroup_quotient<C: Coeff>(
    a: &EquivariantEPoly<C>,
    mu: &Partition,
) -> Result<BivarPoly<C>> {
    a.check(mu)?;
    let fd = fixed_dims(a.n)?;
    let row = &fd.dims()[fd.index_of(mu).expect("checked partition of n")];
    Ok(a.iter()
        .map(|(lambda, p)| {
            let j = fd.index_of(lambda).expect("key is a partition of n");
            p.scale(&C::from_i64(row[j]))
        })
        .sum())
}

/// Recovers the equivariant E-polynomial from all Young-subgroup quotients
/// `rhs[μ] = e(X/S_μ)`.
///
/// The fixed-dimension matrix is lower unitriangular in canonical order, so
/// forward substitution solves the system over the integers.
pub fn solve_plus_minus<C: Coeff>(
    n: usize,
    rhs: &BTreeMap<Partition, BivarPoly<C>>,
) -> Result<EquivariantEPoly<C>> {
    let fd = fixed_dims(n)?;
    let order = fd.order();
    let mut solution: Vec<BivarPoly<C>> = Vec::with_capacity(order.len());
    for (i, mu) in order.iter().enumerate() {
        let mut value = rhs
            .get(mu)
            .cloned()
            .ok_or_else(|| Error::MissingEntry(mu.to_string()))?;
        let row = &fd.dims()[i];
        debug_assert_eq!(row[i], 1);
        for (j, a_j) in solution.iter().enumerate() {
            if row[j] != 0 {
                value -= &a_j.scale(&C::from_i64(row[j]));
            }
        }
        solution.push(value);
    }
    EquivariantEPoly::from_map(n, order.iter().cloned().zip(solution))
}
