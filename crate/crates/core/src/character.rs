//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule, plus the
//! derived integer tables used by the representation ring: fixed-space
//! dimensions `χ_λ^μ = dim V_λ^{S_μ}` and Kronecker coefficients.
//!
//! Tables are built once per `n` and shared through a process-wide cache.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partition::{class_size, factorial, partitions_of, Partition};

/// Largest `n` for which tables are built unless the caller raises it.
pub const DEFAULT_TABLE_BOUND: usize = 12;

type Memo = HashMap<(Vec<usize>, Vec<usize>), i64>;

/// Character value `χ_λ(μ)`.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch {
            expected: lambda.n(),
            found: mu.n(),
        });
    }
    let mut memo = Memo::new();
    Ok(mn(lambda.parts(), mu.parts(), &mut memo))
}

/// Border-strip recursion on beta-sets. Removing a strip of length `k`
/// moves one bead from `b` to `b - k`; the strip's height is the number of
/// beads strictly between.
fn mn(shape: &[usize], cycles: &[usize], memo: &mut Memo) -> i64 {
    let Some((&k, rest)) = cycles.split_first() else {
        return if shape.is_empty() { 1 } else { 0 };
    };
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let len = shape.len();
    let beta: Vec<usize> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i))
        .collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let smaller: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let sub = mn(&smaller, rest, memo);
        total += if height % 2 == 0 { sub } else { -sub };
    }
    memo.insert(key, total);
    total
}

/// `values[i][j] = χ_{order[i]}(order[j])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    order: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
    class_sizes: Vec<BigInt>,
}

impl CharacterTable {
    fn build(n: usize) -> Self {
        let order = partitions_of(n);
        let mut memo = Memo::new();
        let values = order
            .iter()
            .map(|lambda| {
                order
                    .iter()
                    .map(|mu| mn(lambda.parts(), mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        let class_sizes = order.iter().map(class_size).collect();
        let index = index_of(&order);
        CharacterTable {
            n,
            order,
            index,
            values,
            class_sizes,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &[Partition] {
        &self.order
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn class_sizes(&self) -> &[BigInt] {
        &self.class_sizes
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    fn require(&self, p: &Partition) -> Result<usize> {
        self.index_of(p).ok_or(Error::SizeMismatch {
            expected: self.n,
            found: p.n(),
        })
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        Ok(self.values[self.require(lambda)?][self.require(mu)?])
    }

    /// Dimensions of the irreducibles, in canonical order.
    pub fn dimensions(&self) -> Vec<i64> {
        let identity = self.order.len() - 1;
        self.values.iter().map(|row| row[identity]).collect()
    }
}

fn index_of(order: &[Partition]) -> HashMap<Partition, usize> {
    order
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect()
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("tables need n >= 1".into()));
    }
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    Ok(())
}

type Store<T> = OnceLock<RwLock<HashMap<usize, Arc<T>>>>;

/// Insert-if-absent cache. Concurrent first calls may both build; the first
/// insert wins and every caller sees the same `Arc`.
fn cached<T>(store: &'static Store<T>, n: usize, build: impl FnOnce() -> T) -> Arc<T> {
    let lock = store.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(hit) = lock.read().expect("table cache poisoned").get(&n) {
        return Arc::clone(hit);
    }
    let built = Arc::new(build());
    let mut guard = lock.write().expect("table cache poisoned");
    Arc::clone(guard.entry(n).or_insert(built))
}

pub fn character_table(n: usize) -> Result<Arc<CharacterTable>> {
    character_table_with_bound(n, DEFAULT_TABLE_BOUND)
}

pub fn character_table_with_bound(n: usize, bound: usize) -> Result<Arc<CharacterTable>> {
    static TABLES: Store<CharacterTable> = OnceLock::new();
    check_bound(n, bound)?;
    Ok(cached(&TABLES, n, || CharacterTable::build(n)))
}

/// `dims[μ][λ] = χ_λ^μ`, the multiplicity of `V_λ` in the permutation
/// representation on `S_n / S_μ` (a Kostka number).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedDimMatrix {
    n: usize,
    order: Vec<Partition>,
    index: HashMap<Partition, usize>,
    dims: Vec<Vec<i64>>,
}

impl FixedDimMatrix {
    fn build(table: &CharacterTable) -> Self {
        let order = table.order().to_vec();
        let classes_by_size: HashMap<usize, Vec<(Partition, BigInt)>> = (1..=table.n())
            .map(|m| {
                let classes = partitions_of(m)
                    .into_iter()
                    .map(|nu| {
                        let size = class_size(&nu);
                        (nu, size)
                    })
                    .collect();
                (m, classes)
            })
            .collect();
        let dims = order
            .iter()
            .map(|mu| {
                // Cycle types of S_μ1 × … × S_μl as (merged type, class size).
                let mut tuples: Vec<(Vec<usize>, BigInt)> = vec![(Vec::new(), BigInt::from(1))];
                for part in mu.parts() {
                    let mut next = Vec::new();
                    for (cycles, weight) in &tuples {
                        for (nu, size) in &classes_by_size[part] {
                            let mut merged = cycles.clone();
                            merged.extend_from_slice(nu.parts());
                            next.push((merged, weight * size));
                        }
                    }
                    tuples = next;
                }
                let mut sums = vec![BigInt::zero(); order.len()];
                for (cycles, weight) in tuples {
                    let column = table
                        .index_of(&Partition::from_unsorted(cycles))
                        .expect("merged cycle type is a partition of n");
                    for (lambda, sum) in sums.iter_mut().enumerate() {
                        *sum += &weight * table.values()[lambda][column];
                    }
                }
                let group_order = mu.young_subgroup_order();
                sums.into_iter()
                    .map(|s| {
                        let (q, r) = s.div_rem(&group_order);
                        assert!(r.is_zero(), "fixed-space dimension is not an integer");
                        q.to_i64().expect("fixed-space dimension fits i64")
                    })
                    .collect()
            })
            .collect();
        let index = index_of(&order);
        FixedDimMatrix {
            n: table.n(),
            order,
            index,
            dims,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &[Partition] {
        &self.order
    }

    /// Rows indexed by `μ`, columns by `λ`, both in canonical order.
    pub fn dims(&self) -> &[Vec<i64>] {
        &self.dims
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn get(&self, mu: &Partition, lambda: &Partition) -> Result<i64> {
        let mismatch = |p: &Partition| Error::SizeMismatch {
            expected: self.n,
            found: p.n(),
        };
        let i = self.index_of(mu).ok_or_else(|| mismatch(mu))?;
        let j = self.index_of(lambda).ok_or_else(|| mismatch(lambda))?;
        Ok(self.dims[i][j])
    }
}

pub fn fixed_dims(n: usize) -> Result<Arc<FixedDimMatrix>> {
    fixed_dims_with_bound(n, DEFAULT_TABLE_BOUND)
}

pub fn fixed_dims_with_bound(n: usize, bound: usize) -> Result<Arc<FixedDimMatrix>> {
    static DIMS: Store<FixedDimMatrix> = OnceLock::new();
    let table = character_table_with_bound(n, bound)?;
    Ok(cached(&DIMS, n, || FixedDimMatrix::build(&table)))
}

/// All Kronecker coefficients `g(λ, μ, ν)` for one `n`, indexed in canonical
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KroneckerTable {
    n: usize,
    coeffs: Vec<Vec<Vec<u64>>>,
}

impl KroneckerTable {
    fn build(table: &CharacterTable) -> Self {
        let size = table.order().len();
        let group_order = factorial(table.n())
            .to_i128()
            .expect("n! fits i128 within the table bound");
        let weights: Vec<i128> = table
            .class_sizes()
            .iter()
            .map(|c| c.to_i128().expect("class size fits i128"))
            .collect();
        let chi = table.values();
        let mut coeffs = vec![vec![vec![0u64; size]; size]; size];
        for i in 0..size {
            for j in i..size {
                let pair: Vec<i128> = (0..size)
                    .map(|r| weights[r] * chi[i][r] as i128 * chi[j][r] as i128)
                    .collect();
                for (k, chi_k) in chi.iter().enumerate().skip(j) {
                    let total: i128 = pair.iter().zip(chi_k).map(|(p, &x)| p * x as i128).sum();
                    assert!(
                        total % group_order == 0,
                        "Kronecker coefficient is not an integer"
                    );
                    let g = u64::try_from(total / group_order)
                        .expect("Kronecker coefficient is nonnegative");
                    for (a, b, c) in [
                        (i, j, k),
                        (i, k, j),
                        (j, i, k),
                        (j, k, i),
                        (k, i, j),
                        (k, j, i),
                    ] {
                        coeffs[a][b][c] = g;
                    }
                }
            }
        }
        KroneckerTable {
            n: table.n(),
            coeffs,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.coeffs[i][j][k]
    }
}

pub fn kronecker_table(n: usize) -> Result<Arc<KroneckerTable>> {
    kronecker_table_with_bound(n, DEFAULT_TABLE_BOUND)
}

pub fn kronecker_table_with_bound(n: usize, bound: usize) -> Result<Arc<KroneckerTable>> {
    static KRON: Store<KroneckerTable> = OnceLock::new();
    let table = character_table_with_bound(n, bound)?;
    Ok(cached(&KRON, n, || KroneckerTable::build(&table)))
}

/// Multiplicity of `V_ν` in `V_λ ⊗ V_μ`.
pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let n = lambda.n();
    for p in [mu, nu] {
        if p.n() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: p.n(),
            });
        }
    }
    let table = character_table(n)?;
    let kron = kronecker_table(n)?;
    let idx = |p: &Partition| table.index_of(p).expect("partition of n");
    Ok(kron.get(idx(lambda), idx(mu), idx(nu)))
}
