use super::*;
use proptest::prelude::*;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn lt(c: &[i64]) -> LaurentT {
    LaurentT::from_coeffs(c.iter().copied())
}

fn sf(basis: Basis, terms: &[(&[usize], LaurentT)]) -> SymFunc {
    let degree = terms.first().map(|(l, _)| l.iter().sum()).unwrap_or(0);
    SymFunc::from_terms(basis, degree, terms.iter().map(|(l, c)| (p(l), c.clone()))).unwrap()
}

/// Example value for the path on three vertices, in the Schur basis.
fn path3() -> SymFunc {
    sf(
        Basis::S,
        &[(&[2, 1], lt(&[0, 1])), (&[1, 1, 1], lt(&[1, 2, 1]))],
    )
}

#[test]
fn schur_to_monomial() {
    let s21 = SymFunc::basis_element(Basis::S, p(&[2, 1]));
    let expected = sf(
        Basis::M,
        &[(&[2, 1], lt(&[1])), (&[1, 1, 1], lt(&[2]))],
    );
    assert_eq!(s21.convert(Basis::M), expected);
}

#[test]
fn monomial_to_schur_example() {
    let f = sf(Basis::M, &[(&[2, 1], lt(&[1])), (&[1, 1, 1], lt(&[6]))]);
    let expected = sf(Basis::S, &[(&[2, 1], lt(&[1])), (&[1, 1, 1], lt(&[4]))]);
    assert_eq!(f.convert(Basis::S), expected);
    // and this is the path value at t = 1
    assert_eq!(path3().at_t_one(), expected);
}

#[test]
fn e3_is_column_schur() {
    let e3 = SymFunc::basis_element(Basis::E, p(&[3]));
    assert_eq!(
        e3.convert(Basis::S),
        SymFunc::basis_element(Basis::S, Partition::column(3))
    );
}

#[test]
fn products() {
    let s1 = SymFunc::basis_element(Basis::S, p(&[1]));
    let expected = sf(Basis::S, &[(&[2], lt(&[1])), (&[1, 1], lt(&[1]))]);
    assert_eq!(s1.multiply(&s1).convert(Basis::S), expected);

    let e2 = SymFunc::basis_element(Basis::E, p(&[2]));
    let e1 = SymFunc::basis_element(Basis::E, p(&[1]));
    let expected = sf(Basis::S, &[(&[2, 1], lt(&[1])), (&[1, 1, 1], lt(&[1]))]);
    assert_eq!(e2.multiply(&e1).convert(Basis::S), expected);
    assert_eq!(
        e2.multiply(&e1).convert(Basis::E),
        SymFunc::basis_element(Basis::E, p(&[2, 1]))
    );

    let f = path3();
    assert!(f.multiply(&SymFunc::one()).same_function(&f));
    assert!(SymFunc::one().multiply(&f).same_function(&f));
}

#[test]
fn lr_examples() {
    assert_eq!(lr_coefficient(&p(&[1]), &p(&[1, 1]), &p(&[2, 1])).unwrap(), 1);
    assert_eq!(lr_coefficient_via_product(&p(&[1]), &p(&[1, 1]), &p(&[2, 1])).unwrap(), 1);
    for nu in partitions(3) {
        let want = u64::from(nu == p(&[2, 1]));
        assert_eq!(lr_coefficient(&p(&[2, 1]), &Partition::empty(), &nu).unwrap(), want);
    }
    assert!(matches!(
        lr_coefficient(&p(&[1]), &p(&[1, 1]), &p(&[2, 2])),
        Err(Error::SizeMismatch { .. })
    ));
    // c^{(3,2,1)}_{(2,1),(2,1)} = 2
    assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])).unwrap(), 2);
}

#[test]
fn lr_two_routes_agree() {
    for total in 0..=6 {
        for a in 0..=total {
            for lam in partitions(a) {
                for mu in partitions(total - a) {
                    for nu in partitions(total) {
                        assert_eq!(
                            lr_coefficient(&lam, &mu, &nu).unwrap(),
                            lr_coefficient_via_product(&lam, &mu, &nu).unwrap(),
                            "{lam} {mu} {nu}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn transpose_kostka_identity() {
    for n in 0..=6 {
        for mu in partitions(n) {
            let e = SymFunc::basis_element(Basis::E, mu.clone()).convert(Basis::S);
            for lam in partitions(n) {
                let k = kostka(&lam.transpose(), &mu).unwrap();
                assert_eq!(e.coeff(&lam), LaurentT::constant(k as i64), "{mu} {lam}");
            }
        }
    }
}

#[test]
fn positivity_examples() {
    let f = path3();
    assert_eq!(
        f.positivity_and_palindromy(Basis::S, 4),
        PositivityReport {
            positive: true,
            palindromic: true
        }
    );
    let e = f.convert(Basis::E);
    let expected = sf(Basis::E, &[(&[2, 1], lt(&[0, 1])), (&[3], lt(&[1, 1, 1]))]);
    assert_eq!(e, expected);
    assert!(f.positivity_and_palindromy(Basis::E, 4).positive);

    let g = sf(Basis::S, &[(&[2, 1], lt(&[1])), (&[1, 1, 1], lt(&[-1]))]);
    assert!(!g.positivity_and_palindromy(Basis::S, 0).positive);
}

#[test]
fn display_format() {
    assert_eq!(path3().to_string(), "t*s[2,1] + (1+2t+t^2)*s[1,1,1]");
    let f = sf(Basis::M, &[(&[2, 1], lt(&[1])), (&[1, 1, 1], lt(&[6]))]);
    assert_eq!(f.to_string(), "m[2,1] + 6*m[1,1,1]");
    assert_eq!(SymFunc::zero(Basis::E, 2).to_string(), "0");
}

#[test]
fn json_shape_and_roundtrip() {
    let f = path3();
    let text = serde_json::to_string(&f.to_json()).unwrap();
    assert_eq!(
        text,
        r#"{"version":"symfunc-v1","basis":"s","degree":3,"terms":[{"partition":[2,1],"coeff":[[2,1]]},{"partition":[1,1,1],"coeff":[[0,1],[2,2],[4,1]]}]}"#
    );
    let back: SymFuncJson = serde_json::from_str(&text).unwrap();
    assert_eq!(SymFunc::from_json(&back).unwrap(), f);

    let big = SymFunc::basis_element(Basis::M, p(&[1]))
        .scale(&LaurentT::constant("123456789012345678901234567890".parse::<BigInt>().unwrap()));
    let text = serde_json::to_string(&big.to_json()).unwrap();
    assert!(text.contains("[[0,123456789012345678901234567890]]"));
    let back: SymFuncJson = serde_json::from_str(&text).unwrap();
    assert_eq!(SymFunc::from_json(&back).unwrap(), big);
}

#[test]
fn mixed_degree_rejected() {
    let a = SymFunc::basis_element(Basis::S, p(&[1]));
    let b = SymFunc::basis_element(Basis::S, p(&[2]));
    assert!(a.add(&b).is_err());
    let mut c = SymFunc::zero(Basis::M, 2);
    assert!(c.add_term(p(&[3]), &LaurentT::one()).is_err());
}

fn arb_symfunc(max_degree: usize) -> impl Strategy<Value = SymFunc> {
    (0..=max_degree, prop::sample::select(Basis::ALL.to_vec())).prop_flat_map(|(d, basis)| {
        let parts = partitions(d);
        let k = parts.len();
        prop::collection::vec(prop::collection::vec(-5i64..=5, 0..3), k).prop_map(move |cs| {
            SymFunc::from_terms(
                basis,
                d,
                parts
                    .iter()
                    .cloned()
                    .zip(cs.into_iter().map(LaurentT::from_coeffs)),
            )
            .unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conversions_roundtrip(f in arb_symfunc(6)) {
        for b in Basis::ALL {
            prop_assert_eq!(f.convert(b).convert(f.basis()), f.clone());
        }
    }

    #[test]
    fn multiply_commutes(f in arb_symfunc(4), g in arb_symfunc(4)) {
        prop_assert_eq!(f.multiply(&g), g.multiply(&f));
    }

    #[test]
    fn multiply_associates(f in arb_symfunc(4), g in arb_symfunc(4), h in arb_symfunc(4)) {
        prop_assert_eq!(f.multiply(&g).multiply(&h), f.multiply(&g.multiply(&h)));
    }
}
