use epoly::character::{character_table, fixed_dims, kronecker, kronecker_table};
use epoly::partition::{factorial, partitions_of, refines, Partition};
use num_bigint::BigInt;
use num_traits::Zero;

fn hook_length_dimension(lambda: &Partition) -> BigInt {
    let conj = lambda.conjugate();
    let mut hooks = BigInt::from(1);
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.parts()[j] - i - 1;
            hooks *= arm + leg + 1;
        }
    }
    factorial(lambda.n()) / hooks
}

/// Semistandard tableaux of shape `lambda` and content `mu`, peeling off the
/// horizontal strip holding the largest entry.
fn kostka(lambda: &[usize], mu: &[usize]) -> u64 {
    let Some((&last, rest)) = mu.split_last() else {
        return u64::from(lambda.iter().all(|&p| p == 0));
    };
    let mut total = 0;
    let mut inner = vec![0; lambda.len()];
    fn strips(
        lambda: &[usize],
        i: usize,
        remaining: usize,
        inner: &mut Vec<usize>,
        rest: &[usize],
        total: &mut u64,
    ) {
        if i == lambda.len() {
            if remaining == 0 {
                *total += kostka(inner, rest);
            }
            return;
        }
        let floor = lambda.get(i + 1).copied().unwrap_or(0);
        for keep in floor..=lambda[i] {
            let removed = lambda[i] - keep;
            if removed > remaining {
                continue;
            }
            inner[i] = keep;
            strips(lambda, i + 1, remaining - removed, inner, rest, total);
        }
    }
    strips(lambda, 0, last, &mut inner, rest, &mut total);
    total
}

#[test]
fn orthogonality() {
    for n in 1..=10 {
        let t = character_table(n).unwrap();
        let order = factorial(n);
        let size = t.order().len();
        for a in 0..size {
            for b in 0..size {
                let s: BigInt = (0..size)
                    .map(|r| &t.class_sizes()[r] * t.values()[a][r] * t.values()[b][r])
                    .sum();
                let expect = if a == b {
                    order.clone()
                } else {
                    BigInt::zero()
                };
                assert_eq!(s, expect, "rows {a}, {b} at n = {n}");
            }
        }
        // column orthogonality
        for r in 0..size {
            for s in 0..size {
                let sum: i64 = (0..size).map(|i| t.values()[i][r] * t.values()[i][s]).sum();
                if r != s {
                    assert_eq!(sum, 0);
                } else {
                    assert_eq!(BigInt::from(sum) * &t.class_sizes()[r], order);
                }
            }
        }
    }
}

#[test]
fn trivial_sign_and_hook_lengths() {
    for n in 1..=10 {
        let t = character_table(n).unwrap();
        let dims = t.dimensions();
        for (i, lambda) in t.order().iter().enumerate() {
            assert_eq!(BigInt::from(dims[i]), hook_length_dimension(lambda));
        }
        assert!(t.values()[0].iter().all(|&v| v == 1));
        let sign_row = t.values().last().unwrap();
        for (j, mu) in t.order().iter().enumerate() {
            let sign = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(sign_row[j], sign);
        }
    }
}

#[test]
fn fixed_dims_are_kostka_numbers() {
    assert_eq!(kostka(&[2, 1], &[1, 1, 1]), 2);
    for n in 1..=8 {
        let fd = fixed_dims(n).unwrap();
        for (i, mu) in fd.order().iter().enumerate() {
            for (j, lambda) in fd.order().iter().enumerate() {
                let got = fd.dims()[i][j];
                assert_eq!(
                    got as u64,
                    kostka(lambda.parts(), mu.parts()),
                    "K({lambda}; {mu})"
                );
                if i == j {
                    assert_eq!(got, 1);
                }
                if !lambda.dominates(mu) {
                    assert_eq!(got, 0);
                }
                if j > i {
                    assert_eq!(got, 0, "not lower triangular");
                }
            }
        }
    }
}

#[test]
fn induced_characters_detect_refinement() {
    for n in 1..=8 {
        let t = character_table(n).unwrap();
        let fd = fixed_dims(n).unwrap();
        for (i, mu) in fd.order().iter().enumerate() {
            for (k, nu) in t.order().iter().enumerate() {
                let value: i64 = (0..t.order().len())
                    .map(|j| fd.dims()[i][j] * t.values()[j][k])
                    .sum();
                assert!(value >= 0);
                assert_eq!(
                    value > 0,
                    refines(nu, mu).unwrap(),
                    "class {nu}, subgroup {mu}"
                );
            }
        }
    }
}

#[test]
fn kronecker_symmetry_and_units() {
    for n in 1..=6 {
        let parts = partitions_of(n);
        let row = Partition::row(n);
        let column = Partition::column(n);
        for a in &parts {
            for b in &parts {
                assert_eq!(kronecker(a, &row, b).unwrap(), u64::from(a == b));
                // tensoring with the sign character transposes
                assert_eq!(
                    kronecker(a, &column, b).unwrap(),
                    u64::from(a.conjugate() == *b)
                );
                for c in &parts {
                    let g = kronecker(a, b, c).unwrap();
                    assert_eq!(g, kronecker(b, a, c).unwrap());
                    assert_eq!(g, kronecker(a, c, b).unwrap());
                    assert_eq!(g, kronecker(c, b, a).unwrap());
                }
            }
        }
    }
    assert_eq!(kronecker_table(10).unwrap().n(), 10);
}

#[test]
fn s3_kronecker_from_explicit_table() {
    // S3 classes e, (12), (123) with sizes 1, 3, 2
    let sizes = [1, 3, 2];
    let chars = [[1, 1, 1], [2, 0, -1], [1, -1, 1]];
    let parts: Vec<Partition> = ["3", "2,1", "1,1,1"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let sum: i64 = (0..3)
                    .map(|r| sizes[r] * chars[a][r] * chars[b][r] * chars[c][r])
                    .sum();
                assert_eq!(
                    kronecker(&parts[a], &parts[b], &parts[c]).unwrap() as i64,
                    sum / 6
                );
            }
        }
    }
}
