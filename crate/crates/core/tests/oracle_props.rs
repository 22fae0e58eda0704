use epoly::confspace::{
    ordered_config, sym_product, unordered_config, unordered_config_by_pexp, VarietyClass,
};
use epoly::oracle::{
    closed_points, count_ordered_config, count_sym, count_unordered_config, enumerate_pgl2,
    profile_from_epoly, PointCountProfile,
};
use epoly::{EPoly, Error, Variety};
use num_bigint::BigInt;

const VARIETIES: [&str; 4] = ["q", "q-1", "q^3-q", "(q^2-1)(q^2-q)"];
const FIELDS: [u64; 4] = [2, 3, 5, 7];

fn var(s: &str) -> Variety {
    VarietyClass::from_epoly(s.parse().unwrap())
}

fn at(p: &EPoly, q: u64) -> BigInt {
    p.eval_balanced(&BigInt::from(q)).unwrap()
}

#[test]
fn sym_and_ordered_counts_match_polynomials() {
    for x in VARIETIES.map(var) {
        for q in FIELDS {
            let profile = profile_from_epoly(&x.epoly, q, 6).unwrap();
            let cp = closed_points(&profile).unwrap();
            for n in 1..=6 {
                assert_eq!(
                    count_sym(&cp, n).unwrap(),
                    at(&sym_product(&x, n), q),
                    "Sym^{n} {} at {q}",
                    x.label
                );
                assert_eq!(
                    count_ordered_config(&profile, n),
                    at(&ordered_config(&x, n), q)
                );
            }
        }
    }
}

#[test]
fn unordered_counts_match_generating_function() {
    for x in VARIETIES.map(var) {
        for q in FIELDS {
            let cp = closed_points(&profile_from_epoly(&x.epoly, q, 6).unwrap()).unwrap();
            for n in 1..=6 {
                assert_eq!(
                    count_unordered_config(&cp, n).unwrap(),
                    at(&unordered_config_by_pexp(&x, n), q),
                    "C_{n}/S_{n} of {} at {q}",
                    x.label
                );
            }
        }
    }
}

#[test]
fn strata_recursion_overcounts_from_three_points() {
    let pgl2 = var("q^3-q");
    let cp = closed_points(&profile_from_epoly(&pgl2.epoly, 2, 3).unwrap()).unwrap();
    assert_eq!(
        count_unordered_config(&cp, 2).unwrap(),
        at(&unordered_config(&pgl2, 2), 2)
    );
    assert_eq!(count_unordered_config(&cp, 3).unwrap(), BigInt::from(348));
    assert_eq!(at(&unordered_config(&pgl2, 3), 2), BigInt::from(336));
}

#[test]
fn affine_line_has_squarefree_counts() {
    // monic squarefree polynomials of degree n over F_q: q^n - q^(n-1)
    let line = var("q");
    for q in FIELDS {
        let cp = closed_points(&profile_from_epoly(&line.epoly, q, 8).unwrap()).unwrap();
        // closed points of the line are monic irreducibles: (1/d) Σ μ(d/e) q^e
        assert_eq!(cp.by_degree()[0], BigInt::from(q));
        assert_eq!(cp.by_degree()[1], BigInt::from((q * q - q) / 2));
        for n in 2..=8 {
            let want = BigInt::from(q).pow(n as u32) - BigInt::from(q).pow(n as u32 - 1);
            assert_eq!(count_unordered_config(&cp, n).unwrap(), want);
        }
    }
}

#[test]
fn pgl2_enumeration_matches_polynomial() {
    let pgl2: EPoly = "q^3-q".parse().unwrap();
    for q in FIELDS {
        assert_eq!(BigInt::from(enumerate_pgl2(q, 1).unwrap()), at(&pgl2, q));
    }
    for q in [2, 3, 5] {
        assert_eq!(
            BigInt::from(enumerate_pgl2(q, 2).unwrap()),
            at(&pgl2, q * q)
        );
    }
    assert!(matches!(
        enumerate_pgl2(4, 1),
        Err(Error::InvalidArgument(_))
    ));
    assert!(matches!(
        enumerate_pgl2(11, 2),
        Err(Error::BoundExceeded { .. })
    ));
}

#[test]
fn profiles_are_validated() {
    assert!(PointCountProfile::new(6, vec![BigInt::from(1)]).is_err());
    assert!(PointCountProfile::new(4, vec![BigInt::from(-1)]).is_err());
    // one rational point and nothing else over F_4 is not a variety
    assert!(matches!(
        PointCountProfile::new(2, vec![BigInt::from(1), BigInt::from(0)]),
        Err(Error::NonRealizable(_))
    ));
    let cp =
        closed_points(&profile_from_epoly(&"q".parse::<EPoly>().unwrap(), 3, 2).unwrap()).unwrap();
    assert!(count_sym(&cp, 3).is_err());
}
