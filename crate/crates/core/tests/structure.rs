// SPDX-License-Identifier: Apache-2.0
//! Exhaustive sweeps over small cases.

use diracconst::constants::{
    check_rho_n_orthogonal, constant_closed_form, default_lambda, levi_data, FormContext, SumConfig, Variant,
};
use diracconst::oracles::{compare_oracle, oracle_prediction};
use diracconst::orbits::{dominant, h_from_partition, h_from_signed_tableau, orbit_partition, real_forms, weighted_dynkin};
use diracconst::rootsys::{pair, positive_count, positive_roots, RootSystem};
use diracconst::{GroupCase, LieType, Rational, Weight};
use num_traits::{Signed, Zero};

fn cases_up_to(rank: usize) -> Vec<GroupCase> {
    let mut v = Vec::new();
    for p in 1..=rank {
        for q in 0..=rank {
            if p + q > rank {
                continue;
            }
            v.extend(GroupCase::su(p, q).ok());
            v.extend(GroupCase::so_odd(p, q).ok());
            v.extend(GroupCase::so_even(p, q).ok());
        }
    }
    for n in 1..=rank {
        v.push(GroupCase::sp(n).unwrap());
        v.push(GroupCase::so_star(n).unwrap());
    }
    v
}

#[test]
fn positive_root_counts() {
    for case in cases_up_to(10) {
        let n = case.rank();
        let want = match case.lie_type() {
            LieType::A => n * (n - 1) / 2,
            LieType::B | LieType::C => n * n,
            LieType::D => n * (n - 1),
        };
        let rs = RootSystem::build(&case).unwrap();
        assert_eq!(rs.positive.len(), want, "{case}");
        assert_eq!(positive_count(case.lie_type(), n), want);
    }
}

#[test]
fn real_form_counts_up_to_rank_10() {
    for case in cases_up_to(10) {
        let want = match case {
            GroupCase::Su { p, .. } => p + 1,
            GroupCase::Sp { n } => n + 1,
            GroupCase::SoOdd { p, q } => 2 + usize::from(q >= p),
            GroupCase::SoEven { p, q } => 3 + usize::from(q == p),
            GroupCase::SoStar { n } => n / 2 + 1,
        };
        assert_eq!(real_forms(&case).unwrap().len(), want, "{case}");
    }
}

#[test]
fn every_form_lies_in_the_orbit() {
    for case in cases_up_to(10) {
        let lie = case.lie_type();
        let orbit = h_from_partition(lie, orbit_partition(&case).parts()).unwrap();
        for f in real_forms(&case).unwrap() {
            assert_eq!(dominant(lie, &f.h), orbit, "{case} {}", f.label);
            assert!(f.h.coords().iter().all(|x| x.abs() <= Rational::from_integer(2.into()) && x.is_integer()));
            assert!(weighted_dynkin(lie, &orbit).is_ok());
        }
    }
}

fn block_abs_sorted(h: &Weight, p: usize) -> Weight {
    let c = h.coords();
    let sort = |s: &[Rational]| {
        let mut v: Vec<Rational> = s.iter().map(|x| x.abs()).collect();
        v.sort_by(|a, b| b.cmp(a));
        v
    };
    let mut out = sort(&c[..p]);
    out.extend(sort(&c[p..]));
    Weight::new(out)
}

#[test]
fn tableaux_give_the_listed_h() {
    for case in cases_up_to(8) {
        let (lie, p, q) = match case {
            GroupCase::SoOdd { p, q } => (LieType::B, p, q),
            GroupCase::SoEven { p, q } => (LieType::D, p, q),
            _ => continue,
        };
        for f in real_forms(&case).unwrap() {
            let t = f.tableau.as_ref().expect("B/D forms carry a tableau");
            let h = h_from_signed_tableau(lie, t, p, q).unwrap();
            assert_eq!(h, block_abs_sorted(&f.h, p), "{case} {}", f.label);
        }
    }
}

#[test]
fn levi_data_membership() {
    for case in cases_up_to(6) {
        let rs = RootSystem::build(&case).unwrap();
        for f in real_forms(&case).unwrap() {
            let l = levi_data(&case, &f.h).unwrap();
            let val = |r| pair(&f.h, r).unwrap();
            for a in &l.delta_n_plus_l {
                assert!(a.is_positive() && !rs.is_compact(a) && val(a).is_zero());
            }
            for a in &l.delta_p1 {
                assert!(!rs.is_compact(a) && val(a) == Rational::from_integer(1.into()));
            }
            let n = positive_roots(case.lie_type(), case.rank()).iter().filter(|a| val(a) > Rational::zero()).count();
            assert_eq!(l.big_n, n);
        }
    }
}

/// Orthogonality holds everywhere except form 2 of the B/D families with p ≥ 3.
#[test]
fn rho_n_orthogonality_up_to_rank_8() {
    for case in cases_up_to(8) {
        for f in real_forms(&case).unwrap() {
            let ok = check_rho_n_orthogonal(&levi_data(&case, &f.h).unwrap());
            let exception = matches!(case, GroupCase::SoOdd { p, .. } | GroupCase::SoEven { p, .. } if p >= 3)
                && f.index == 2;
            assert_eq!(ok, !exception, "{case} {}", f.label);
        }
    }
}

#[test]
fn so_odd_third_form_has_no_survivors() {
    for p in 1..=3 {
        for q in p..=4 {
            let case = GroupCase::so_odd(p, q).unwrap();
            let cmp = compare_oracle(&case, 3, 1 << 24).unwrap();
            assert!(cmp.observed.is_empty() && cmp.matches(), "{case}");
        }
    }
}

#[test]
fn so_even_third_form_matches_prediction() {
    for p in 1..=3 {
        for q in p..=4 {
            let case = GroupCase::so_even(p, q).unwrap();
            let cmp = compare_oracle(&case, 3, 1 << 24).unwrap();
            assert_eq!(cmp.observed.len(), 1, "{case}");
            assert!(cmp.matches(), "{case}: {:?}", cmp.observed);
        }
    }
}

#[test]
fn su_survivor_counts_are_binomial() {
    for p in 1..=3usize {
        for q in p..=6 - p {
            let case = GroupCase::su(p, q).unwrap();
            for k in 0..=p {
                let cmp = compare_oracle(&case, k + 1, 1 << 24).unwrap();
                let want = (0..k).fold(1, |acc, i| acc * (p - i) / (i + 1));
                assert_eq!(cmp.observed.len(), want, "{case} k={k}");
                assert!(cmp.matches(), "{case} k={k}");
            }
        }
    }
}

/// Σ ± P_K(Λ) over the predicted survivors, with the rewritten sum's signs,
/// equals c·P_{L∩K}(λ₀) wherever the published constants hold.
#[test]
fn predicted_terms_reproduce_the_constant() {
    let mut cases: Vec<GroupCase> = (1..=6).flat_map(|n| [GroupCase::sp(n).unwrap(), GroupCase::so_star(n).unwrap()]).collect();
    for p in 1..=3usize {
        for q in p..=6 - p {
            cases.push(GroupCase::su(p, q).unwrap());
        }
    }
    for case in cases {
        for i in 1..=real_forms(&case).unwrap().len() {
            let ctx = FormContext::for_index(&case, i).unwrap();
            let l0 = default_lambda(&case, i).unwrap();
            let mut total = Rational::zero();
            for t in oracle_prediction(&case, i).unwrap() {
                let v = ctx.pk.eval(&t.lambda).unwrap();
                let e = ctx.levi.big_n + ctx.levi.delta_n_plus_l.len() + t.a.len() + t.c.len();
                total += if e.is_multiple_of(2) { v } else { -v };
            }
            let c = Rational::from_integer(constant_closed_form(&case, i).unwrap().into());
            assert_eq!(total, c * ctx.plk.eval(&l0).unwrap(), "{case} form {i}");
        }
    }
}

#[test]
fn sp_survivor_values_carry_the_inversion_sign() {
    for n in 1..=6usize {
        let case = GroupCase::sp(n).unwrap();
        for i in 1..=n + 1 {
            let (p, q) = (i - 1, n + 1 - i);
            let cmp = compare_oracle(&case, i, 1 << 24).unwrap();
            let want = if (p * q / 2) % 2 == 0 { 1 } else { -1 };
            for t in &cmp.observed {
                assert_eq!(t.value, Rational::from_integer(want.into()), "{case} p={p}");
            }
        }
    }
}

#[test]
fn quotient_is_integral_at_random_lambdas_up_to_rank_6() {
    let cfg = SumConfig::default();
    for case in cases_up_to(6) {
        for i in 1..=real_forms(&case).unwrap().len() {
            let ctx = FormContext::for_index(&case, i).unwrap();
            if ctx.check_cap(1 << 18).is_err() {
                continue;
            }
            let l0 = default_lambda(&case, i).unwrap();
            let extra = diracconst::constants::extra_lambdas(&ctx, &l0, 2, 7).unwrap();
            let c0 = ctx.constant(&l0, Variant::Orig, &cfg).unwrap().c;
            for l in extra {
                assert_eq!(ctx.constant(&l, Variant::Orig, &cfg).unwrap().c, c0, "{case} form {i} at {l}");
            }
        }
    }
}
