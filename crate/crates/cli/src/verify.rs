// SPDX-License-Identifier: Apache-2.0
//! The verification checks behind `diracconst verify`, over every case up to a rank.

use diracconst::constants::{
    auto_sign_relation, check_rho_n_orthogonal, constant_closed_form, default_lambda, extra_lambdas, FormContext,
    RunOptions, Variant,
};
use diracconst::oracles::compare_oracle;
use diracconst::orbits::real_forms;
use diracconst::rootsys::{positive_roots, SignedPerm};
use diracconst::weylpoly::DimPoly;
use diracconst::{Error, GroupCase, LieType, Rational, Weight};
use num_traits::Zero;
use serde_json::{json, Value};

#[derive(Debug, Default)]
pub struct Check {
    name: &'static str,
    checked: usize,
    failures: Vec<String>,
    skips: Vec<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check { name, ..Default::default() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn error(&mut self, what: String, e: Error) {
        match e {
            Error::TooLarge { .. } => self.skips.push(format!("{what}: {e}")),
            e => {
                self.checked += 1;
                self.failures.push(format!("{what}: {e}"));
            }
        }
    }

    fn json(&self) -> Value {
        json!({
            "name": self.name,
            "checked": self.checked,
            "failed": self.failures.len(),
            "skipped": self.skips.len(),
            "failures": self.failures,
            "skips": self.skips,
        })
    }
}

pub struct Summary {
    max_rank: usize,
    term_cap: u64,
    checks: Vec<Check>,
}

impl Summary {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.failures.is_empty())
    }

    pub fn to_json(&self) -> String {
        let doc = json!({
            "maxRank": self.max_rank,
            "termCap": self.term_cap,
            "ok": self.ok(),
            "checks": self.checks.iter().map(Check::json).collect::<Vec<_>>(),
        });
        serde_json::to_string_pretty(&doc).expect("json")
    }
}

/// Every valid case of rank ≤ `max_rank`.
pub fn cases_up_to(max_rank: usize) -> Vec<GroupCase> {
    let mut v = Vec::new();
    for p in 1..=max_rank {
        for q in 0..=max_rank - p {
            v.extend(GroupCase::su(p, q).ok());
        }
    }
    v.extend((1..=max_rank).map(|n| GroupCase::sp(n).unwrap()));
    for p in 1..=max_rank {
        for q in 0..=max_rank - p {
            v.extend(GroupCase::so_odd(p, q).ok());
        }
    }
    for p in 1..=max_rank {
        for q in 0..=max_rank - p {
            v.extend(GroupCase::so_even(p, q).ok());
        }
    }
    v.extend((1..=max_rank).map(|n| GroupCase::so_star(n).unwrap()));
    v
}

fn dimension_values() -> Check {
    let mut c = Check::new("dimension-values");
    for p in 1..=8usize {
        let poly = DimPoly::new(&positive_roots(LieType::D, p), p).expect("positive system");
        let lam = Weight::from_halves(&(0..p as i64).map(|i| 2 * (p as i64 - i) - 1).collect::<Vec<_>>());
        let got = poly.eval(&lam);
        c.record(got == Ok(Rational::from_integer((1u64 << (p - 1)).into())), || format!("D{p}: {got:?}"));
    }
    for q in 1..=8usize {
        let poly = DimPoly::new(&positive_roots(LieType::B, q), q).expect("positive system");
        let mu = Weight::from_ints(&(1..=q as i64).rev().collect::<Vec<_>>());
        let got = poly.eval(&mu);
        c.record(got == Ok(Rational::from_integer((1u64 << q).into())), || format!("B{q}: {got:?}"));
    }
    c
}

fn expected_form_count(case: &GroupCase) -> usize {
    match *case {
        GroupCase::Su { p, .. } => p + 1,
        GroupCase::Sp { n } => n + 1,
        GroupCase::SoOdd { p, q } => 2 + usize::from(q >= p),
        GroupCase::SoEven { p, q } => 3 + usize::from(q == p),
        GroupCase::SoStar { n } => n / 2 + 1,
    }
}

fn has_oracle(case: &GroupCase, index: usize) -> bool {
    match case {
        GroupCase::Su { .. } | GroupCase::Sp { .. } | GroupCase::SoStar { .. } => true,
        GroupCase::SoOdd { .. } | GroupCase::SoEven { .. } => index == 1 || index == 3,
    }
}

pub fn run(max_rank: usize, opts: &RunOptions, inject_fault: bool) -> Summary {
    let cfg = opts.sum;
    let mut counts = Check::new("real-form-counts");
    let mut closed = Check::new("closed-form");
    let mut lambda = Check::new("lambda-independence");
    let mut rewritten = Check::new("rewritten-sum");
    let mut zero = Check::new("zero-sum");
    let mut signs = Check::new("sign-relations");
    let mut oracle = Check::new("surviving-terms");
    let mut fault = inject_fault;

    for case in cases_up_to(max_rank) {
        let forms = match real_forms(&case) {
            Ok(f) => f,
            Err(e) => {
                counts.error(case.to_string(), e);
                continue;
            }
        };
        counts.record(forms.len() == expected_form_count(&case), || {
            format!("{case}: {} forms, want {}", forms.len(), expected_form_count(&case))
        });

        let mut brute = vec![None; forms.len() + 1];
        for f in &forms {
            let what = format!("{case} form {} ({})", f.index, f.label);
            let ctx = match FormContext::new(&case, f) {
                Ok(c) => c,
                Err(e) => {
                    closed.error(what, e);
                    continue;
                }
            };
            if let Err(e) = ctx.check_cap(cfg.term_cap) {
                closed.error(what, e);
                continue;
            }
            let l0 = default_lambda(&case, f.index).expect("form exists");
            let c0 = match ctx.constant(&l0, Variant::Orig, &cfg) {
                Ok(o) => o.c,
                Err(e) => {
                    closed.error(what, e);
                    continue;
                }
            };
            brute[f.index] = Some(c0);
            match constant_closed_form(&case, f.index) {
                Ok(mut cc) => {
                    if std::mem::take(&mut fault) {
                        cc = -cc;
                    }
                    closed.record(cc == c0, || format!("{what}: brute {c0}, closed {cc}"));
                }
                Err(e) => closed.error(what.clone(), e),
            }

            match extra_lambdas(&ctx, &l0, opts.extra_lambdas, opts.seed) {
                Ok(ls) => {
                    let vals: Vec<_> = ls.iter().map(|l| ctx.constant(l, Variant::Orig, &cfg).map(|o| o.c)).collect();
                    lambda.record(vals.iter().all(|v| v == &Ok(c0)), || format!("{what}: {c0} at λ₀, {vals:?}"));
                }
                Err(e) => lambda.error(what.clone(), e),
            }

            let orth = check_rho_n_orthogonal(&ctx.levi);
            let v2 = ctx.constant(&l0, Variant::V2, &cfg).map(|o| o.c);
            rewritten.record(orth && v2 == Ok(c0), || format!("{what}: orthogonal = {orth}, orig {c0}, rewritten {v2:?}"));

            if matches!(case, GroupCase::SoOdd { .. }) && f.index == 3 {
                let mut ls = vec![l0.clone()];
                ls.extend(extra_lambdas(&ctx, &l0, 2, opts.seed).unwrap_or_default());
                for l in &ls {
                    let s = ctx.raw_sum(l, Variant::Orig, &cfg);
                    zero.record(s.as_ref().is_ok_and(|o| o.lhs.is_zero()), || format!("{what} at {l}: {s:?}"));
                }
            }

            if has_oracle(&case, f.index) {
                match compare_oracle(&case, f.index, cfg.term_cap) {
                    Ok(cmp) => oracle.record(cmp.matches(), || {
                        format!("{what}: {} survivors, {} predicted", cmp.observed.len(), cmp.predicted.len())
                    }),
                    Err(e) => oracle.error(what.clone(), e),
                }
            }
        }

        let rank = case.rank();
        let pairs: Vec<(usize, usize, SignedPerm, i64)> = match case {
            GroupCase::SoOdd { p, .. } => vec![(1, 2, SignedPerm::negate(rank, p - 1), -1)],
            GroupCase::SoEven { p, q } => {
                let mut v = vec![(1, 2, SignedPerm::negate(rank, p - 1), 1)];
                if q == p {
                    v.push((3, 4, SignedPerm::negate(rank, rank - 1), 1));
                }
                v
            }
            _ => Vec::new(),
        };
        for (a, b, sigma, want) in pairs {
            let what = format!("{case} forms {a}->{b}");
            match auto_sign_relation(&case, &sigma, &forms[a - 1], &forms[b - 1]) {
                Ok(s) => {
                    let propagated = match (brute[a], brute[b]) {
                        (Some(x), Some(y)) => s * x == y,
                        _ => true,
                    };
                    signs.record(s == want && propagated, || {
                        format!("{what}: sign {s} (want {want}), c{a} = {:?}, c{b} = {:?}", brute[a], brute[b])
                    });
                }
                Err(e) => signs.error(what, e),
            }
        }
    }

    Summary {
        max_rank,
        term_cap: cfg.term_cap,
        checks: vec![dimension_values(), counts, closed, lambda, rewritten, zero, signs, oracle],
    }
}
