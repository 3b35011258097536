use proptest::prelude::*;

use symident::cli::run_with;
use symident::exactalg::{rat, Rat, Ring};
use symident::identities::{
    first_kind_sides, psi_index_law, random_points, second_kind_sides, sort_reports, SymValues,
};
use symident::sequences::{
    fib_cyclotomic, fib_explicit, fib_recurrence, lucas_explicit, lucas_recurrence,
};
use symident::symfun::{Family, PointVector};

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    (1i64..200, 1i64..50, any::<bool>()).prop_map(|(a, b, neg)| rat(if neg { -a } else { a }, b))
}

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![Just(Family::E), Just(Family::H), Just(Family::P)]
}

fn cli(args: &[String]) -> (i32, Vec<u8>) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(
        std::iter::once("symident".to_string()).chain(args.iter().cloned()),
        &mut out,
        &mut err,
    );
    (code, out)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn both_kinds_hold_at_rational_points(z in prop::collection::vec(nonzero_rat(), 1..=3), fam in family(), i in 0usize..10) {
        let r = z.len();
        let zinv: Vec<Rat> = z.iter().map(|x| x.inverse().unwrap()).collect();
        let d = SymValues::new(&PointVector::doubled(&z, &zinv).unwrap(), i);
        let s = SymValues::new(&PointVector::shifted(&z, &zinv).unwrap(), i);
        if fam != Family::P || i > 0 {
            let (lhs, rhs) = first_kind_sides(fam, r, i, &d, &s);
            prop_assert_eq!(lhs, rhs);
            let in_domain = match fam { Family::E => i <= 2 * r, _ => true };
            if in_domain {
                let (lhs, rhs) = second_kind_sides(fam, r, i, &d, &s);
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn random_points_are_reproducible_and_in_range(seed in any::<u64>(), trials in 1u32..5, count in 1usize..7) {
        let a = random_points(seed, "prop", trials, count);
        prop_assert_eq!(&a, &random_points(seed, "prop", trials, count));
        prop_assert_eq!(a.len(), trials as usize);
        let bound = rat(1_000_000, 1);
        for p in &a {
            prop_assert_eq!(p.len(), count);
            for x in p {
                prop_assert!(!x.is_zero_elem());
                prop_assert!(x.numer().magnitude() <= bound.numer().magnitude());
                prop_assert!(x.denom().magnitude() <= bound.numer().magnitude());
            }
            let mut distinct = p.clone();
            distinct.sort();
            distinct.dedup();
            prop_assert_eq!(distinct.len(), count);
        }
    }

    #[test]
    fn sequence_routes_agree(r in 1usize..=8, n in 1i64..=60) {
        let f = fib_recurrence(r, n);
        let l = lucas_recurrence(r, n);
        prop_assert_eq!(&fib_explicit(r, n).unwrap(), f.at(n));
        prop_assert_eq!(&fib_cyclotomic(r, n as usize - 1).unwrap(), f.at(n));
        prop_assert_eq!(&lucas_explicit(r, n).unwrap(), l.at(n));
    }

    #[test]
    fn psi_index_law_for_nonnegative_exponents(a in 0i64..=10, b in 0i64..=10) {
        prop_assert!(psi_index_law(a, b, 20).passed());
    }

    #[test]
    fn report_order_ignores_input_order(perm in Just((1usize..=6).collect::<Vec<_>>()).prop_shuffle()) {
        let mut reports: Vec<_> = perm.iter().map(|&r| symident::identities::binomial_sum_identity(r).unwrap()).collect();
        sort_reports(&mut reports);
        let rs: Vec<i64> = reports.iter().map(|x| x.params["r"]).collect();
        prop_assert_eq!(rs, vec![1, 2, 3, 4, 5, 6]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn same_argv_same_bytes(seed in any::<u64>(), r in 4usize..=6, fmt in prop_oneof![Just("md"), Just("csv"), Just("json")]) {
        let args: Vec<String> = ["verify", "first-kind", "--mode", "random", "--trials", "2", "--m-max", "6", "--format", fmt]
            .iter()
            .map(|s| s.to_string())
            .chain(["--r".into(), r.to_string(), "--seed".into(), seed.to_string()])
            .collect();
        let first = cli(&args);
        prop_assert_eq!(first.0, 0);
        prop_assert_eq!(first, cli(&args));
    }

    #[test]
    fn table_ranges(lo in 1i64..12, len in 0i64..5, cols_lo in 0i64..30, cols_len in 0i64..8) {
        let args: Vec<String> = vec![
            "table".into(), "lucas".into(),
            "--r".into(), format!("{lo}:{}", lo + len),
            "--n".into(), format!("{cols_lo}:{}", cols_lo + cols_len),
            "--format".into(), "csv".into(),
        ];
        let (code, out) = cli(&args);
        prop_assert_eq!(code, 0);
        let text = String::from_utf8(out).unwrap();
        prop_assert_eq!(text.lines().count() as i64, len + 2);
        for line in text.lines().skip(1) {
            let fields: Vec<&str> = line.split(',').collect();
            prop_assert_eq!(fields.len() as i64, cols_len + 2);
            let row: usize = fields[0].parse().unwrap();
            let l = lucas_recurrence(row, cols_lo + cols_len);
            for (j, v) in fields[1..].iter().enumerate() {
                prop_assert_eq!(v.to_string(), l.at(cols_lo + j as i64).to_string());
            }
        }
    }
}
