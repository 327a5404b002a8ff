use dpb_core::identities::{
    verify, verify_all, verify_with_tables, Identity, IdentityParams, LambdaMode, Status, Tables,
};
use dpb_core::{LambdaPoly, Rational};

#[test]
fn every_entry_passes_on_the_parameter_grid() {
    std::thread::scope(|s| {
        for k in -2..=3 {
            s.spawn(move || {
                for r in 1..=3 {
                    for report in verify_all(&IdentityParams::new(k, r, 12)).unwrap() {
                        assert!(report.passed(), "k={k} r={r}: {report:?}");
                    }
                }
            });
        }
    });
}

#[test]
fn numeric_lambda_agrees() {
    for v in [Rational::zero(), Rational::new(-1, 2), Rational::from(3)] {
        let params = IdentityParams::new(2, 2, 8)
            .with_samples(10, 8)
            .with_lambda(LambdaMode::At(v));
        for report in verify_all(&params).unwrap() {
            assert!(report.passed(), "{report:?}");
        }
    }
}

#[test]
fn seed_changes_only_the_random_part() {
    let a = IdentityParams::new(1, 1, 8).with_seed(7);
    let b = IdentityParams::new(1, 1, 8).with_seed(8);
    assert_eq!(a.sampled_ys()[..3], b.sampled_ys()[..3]);
    assert_eq!(a.sampled_ys(), a.clone().sampled_ys());
    assert!(verify(Identity::Eq18, &a).unwrap().passed());
    assert!(verify(Identity::Thm2, &b).unwrap().passed());
}

/// Bumps one entry of one table and returns the failing reports.
fn mutate(params: &IdentityParams, pick: impl Fn(&mut Tables)) -> Vec<(Identity, usize)> {
    let mut tables = Tables::for_params(params).unwrap();
    pick(&mut tables);
    Identity::ALL
        .iter()
        .filter_map(|&id| {
            let report = verify_with_tables(id, params, &tables).unwrap();
            (report.status == Status::Fail).then(|| (id, report.witness.unwrap().n))
        })
        .collect()
}

#[test]
fn every_table_entry_is_load_bearing() {
    let params = IdentityParams::new(2, 2, 8).with_samples(6, 6);
    let one = LambdaPoly::one();
    let q_one = Rational::one();
    for i in 0..=8 {
        let cases: Vec<(&str, Vec<(Identity, usize)>)> = vec![
            ("dpb", mutate(&params, |t| t.dpb[i] = &t.dpb[i] + &one)),
            (
                "dpb_higher",
                mutate(&params, |t| t.dpb_higher[i] = &t.dpb_higher[i] + &one),
            ),
            (
                "dpb_one",
                mutate(&params, |t| t.dpb_one[i] = &t.dpb_one[i] + &one),
            ),
            (
                "daehee",
                mutate(&params, |t| t.daehee[i] = &t.daehee[i] + &one),
            ),
            (
                "carlitz",
                mutate(&params, |t| t.carlitz[i] = &t.carlitz[i] + &one),
            ),
            (
                "bernoulli",
                mutate(&params, |t| t.bernoulli[i] = &t.bernoulli[i] + &q_one),
            ),
            (
                "poly_bernoulli",
                mutate(&params, |t| {
                    t.poly_bernoulli[i] = &t.poly_bernoulli[i] + &q_one
                }),
            ),
        ];
        for (table, failures) in cases {
            assert!(!failures.is_empty(), "{table}[{i}] went unnoticed");
            assert!(
                failures.iter().any(|&(_, n)| n == i),
                "{table}[{i}]: witnesses {failures:?}"
            );
        }
    }
}
