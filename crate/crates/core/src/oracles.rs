// SPDX-License-Identifier: Apache-2.0
//! Closed descriptions of the nonzero terms of the alternating sum at λ₀,
//! checked against the terms found by brute force.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::constants::{default_lambda, FormContext, Variant};
use crate::error::{Error, Result};
use crate::orbits::RealForm;
use crate::rootsys::{GroupCase, Rational, Root, Weight};

/// A nonzero summand: the subsets A ⊆ Δ_n⁺(𝔩), C ⊆ Δ(𝔭₁), the shifted weight and P_K there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurvivingTerm {
    pub a: Vec<Root>,
    pub c: Vec<Root>,
    pub lambda: Weight,
    pub value: Rational,
}

/// An (r,s)-shuffle of 1..=r+s; both sequences increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shuffle {
    pub i_seq: Vec<usize>,
    pub j_seq: Vec<usize>,
}

/// Every (r,s)-shuffle, ordered lexicographically by `i_seq`.
pub fn shuffles(r: usize, s: usize) -> Vec<Shuffle> {
    fn rec(next: usize, total: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Shuffle>) {
        if cur.len() == r {
            let j_seq = (1..=total).filter(|x| !cur.contains(x)).collect();
            out.push(Shuffle { i_seq: cur.clone(), j_seq });
            return;
        }
        for x in next..=total {
            if total - x + 1 < r - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, total, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, r + s, r, &mut Vec::new(), &mut out);
    out
}

/// All nonzero terms of the sum for a form at λ.
pub fn surviving_terms(
    case: &GroupCase,
    form: &RealForm,
    lambda: &Weight,
    variant: Variant,
    term_cap: u64,
) -> Result<Vec<SurvivingTerm>> {
    let ctx = FormContext::new(case, form)?;
    if variant == Variant::V2 && !crate::constants::check_rho_n_orthogonal(&ctx.levi) {
        return Err(Error::OrthogonalityViolated);
    }
    ctx.check_cap(term_cap)?;
    let plan = ctx.plan(lambda, variant)?;
    let n_a = ctx.levi.delta_n_plus_l.len();
    let scale = Rational::from_integer(BigInt::from(plan.scale));
    plan.nonzero_terms()
        .into_iter()
        .map(|(mask, x, _)| {
            let pick = |roots: &[Root], offset: usize| -> Vec<Root> {
                roots.iter().enumerate().filter(|(b, _)| mask >> (b + offset) & 1 == 1).map(|(_, r)| r.clone()).collect()
            };
            let lam = Weight::new(x.iter().map(|&v| Rational::from_integer(v.into()) / &scale).collect());
            let value = ctx.pk.eval(&lam)?;
            debug_assert!(!value.is_zero());
            Ok(SurvivingTerm { a: pick(&ctx.levi.delta_n_plus_l, 0), c: pick(&ctx.levi.delta_p1, n_a), lambda: lam, value })
        })
        .collect()
}

// Roots with the 1-based indices used in the propositions.
fn sum(rank: usize, i: usize, j: usize) -> Root {
    Root::sum(rank, i - 1, j - 1)
}
fn diff(rank: usize, i: usize, j: usize) -> Root {
    Root::diff(rank, i - 1, j - 1)
}

fn sorted(mut v: Vec<Root>) -> Vec<Root> {
    v.sort();
    v
}

fn ints(v: &[usize]) -> Weight {
    Weight::from_ints(&v.iter().map(|&x| x as i64).collect::<Vec<_>>())
}

/// One entry per shuffle: the predicted A and Λ for Sp(2n,ℝ) with h = (1^p, (−1)^{n−p}).
pub fn shuffle_terms_sp(n: usize, p: usize) -> Result<Vec<(Vec<Root>, Weight)>> {
    if p > n {
        return Err(Error::InvalidCase(format!("p = {p} exceeds n = {n}")));
    }
    let q = n - p;
    if p % 2 == 1 && q % 2 == 1 {
        return Ok(Vec::new());
    }
    if p == 0 || q == 0 {
        return Ok(vec![(Vec::new(), ints(&(1..=n).rev().collect::<Vec<_>>()))]);
    }
    let (r, s) = (p / 2, q / 2);
    let mut out = Vec::new();
    for sh in shuffles(r, s) {
        let (i, j) = (&sh.i_seq, &sh.j_seq);
        let mut a = Vec::new();
        for u in 1..=r {
            for v in 1..=s {
                a.push(sum(n, p + 1 - u, n + 1 - v));
                a.push(if i[u - 1] < j[v - 1] { sum(n, p + 1 - u, p + v) } else { sum(n, u, n + 1 - v) });
            }
        }
        if p % 2 == 1 {
            a.extend((s + 1..=q).map(|jj| sum(n, r + 1, p + jj)));
        }
        if q % 2 == 1 {
            a.extend((r + 1..=p).map(|ii| sum(n, ii, p + s + 1)));
        }
        let mut lam = vec![0usize; n];
        for u in 1..=r {
            lam[u - 1] = n + 1 - i[u - 1];
            lam[p - u] = i[u - 1];
        }
        for v in 1..=s {
            lam[p + v - 1] = n + 1 - j[v - 1];
            lam[n - v] = j[v - 1];
        }
        if p % 2 == 1 {
            lam[p - r - 1] = n - r - s;
        }
        if q % 2 == 1 {
            lam[n - s - 1] = n - r - s;
        }
        out.push((sorted(a), ints(&lam)));
    }
    Ok(out)
}

/// Predicted (A, C, Λ) triple.
pub type ShuffleTerm = (Vec<Root>, Vec<Root>, Weight);

/// One entry per shuffle: predicted (A, C, Λ) for SO*(2n), p even.
pub fn shuffle_terms_sostar(n: usize, p: usize) -> Result<Vec<ShuffleTerm>> {
    if p % 2 == 1 {
        return Err(Error::InvalidParity(format!("p = {p} must be even")));
    }
    if n.is_multiple_of(2) {
        if p > n {
            return Err(Error::InvalidCase(format!("p = {p} exceeds n = {n}")));
        }
        return Ok(shuffle_terms_sp(n, p)?.into_iter().map(|(a, l)| (a, Vec::new(), l)).collect());
    }
    if p > n - 1 {
        return Err(Error::InvalidCase(format!("p = {p} exceeds n − 1 = {}", n - 1)));
    }
    let q = n - 1 - p;
    let (r, s) = (p / 2, q / 2);
    let mut c: Vec<Root> = (r + 1..=p).map(|ii| sum(n, ii, p + 1)).collect();
    c.extend((1..=s).map(|jj| sum(n, p + 1, p + 1 + jj).neg()));
    let c = sorted(c);
    let mut out = Vec::new();
    for sh in shuffles(r, s) {
        let (i, j) = (&sh.i_seq, &sh.j_seq);
        let mut a = Vec::new();
        for u in 1..=r {
            for v in 1..=s {
                a.push(sum(n, p + 1 - u, n + 1 - v));
                a.push(if i[u - 1] < j[v - 1] { sum(n, p + 1 - u, p + 1 + v) } else { sum(n, u, n + 1 - v) });
            }
        }
        let mut lam = vec![0usize; n];
        for u in 1..=r {
            lam[u - 1] = n + 1 - i[u - 1];
            lam[p - u] = i[u - 1];
        }
        lam[p] = r + s + 1;
        for v in 1..=s {
            lam[p + v] = n + 1 - j[v - 1];
            lam[n - v] = j[v - 1];
        }
        out.push((sorted(a), c.clone(), ints(&lam)));
    }
    Ok(out)
}

/// A term predicted by a proposition: (A, C, Λ).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PredictedTerm {
    pub a: Vec<Root>,
    pub c: Vec<Root>,
    pub lambda: Weight,
}

fn halves(v: &[i64]) -> Weight {
    Weight::from_halves(v)
}

/// Descending doubled half-integers: from2/2, from2/2 − 1, … (count entries).
fn hd(from2: i64, count: usize) -> Vec<i64> {
    (0..count as i64).map(|t| from2 - 2 * t).collect()
}

/// SU(p,q), form k: one term per shuffle of p..1 into k and p−k decreasing parts.
fn su_prediction(p: usize, q: usize, k: usize) -> Vec<PredictedTerm> {
    let n = p + q;
    let c: Vec<Root> = (1..=k).flat_map(|i| (2 * p - k + 1..=p + q - k).map(move |j| diff(n, i, j))).collect();
    let c = sorted(c);
    let mut out = Vec::new();
    // Positions of the i's among p..1, taken from an increasing (k, p−k) shuffle of 1..=p.
    for sh in shuffles(k, p - k) {
        let is: Vec<usize> = sh.i_seq.iter().map(|&x| p + 1 - x).collect();
        let js: Vec<usize> = sh.j_seq.iter().map(|&x| p + 1 - x).collect();
        let mut a = Vec::new();
        for (ai, &iv) in is.iter().enumerate() {
            for (bi, &jv) in js.iter().enumerate() {
                let (a1, b1) = (ai + 1, bi + 1);
                a.push(if iv < jv { diff(n, a1, p + b1) } else { diff(n, k + b1, p + q - k + a1) });
            }
        }
        let mut lam: Vec<usize> = is.clone();
        lam.extend(&js);
        lam.extend(&js);
        lam.extend((p + 1..=q).rev());
        lam.extend(&is);
        out.push(PredictedTerm { a: sorted(a), c: c.clone(), lambda: ints(&lam) });
    }
    out
}

fn b1_prediction(p: usize, q: usize) -> Vec<PredictedTerm> {
    let n = p + q;
    let (pi, qi) = (p as i64, q as i64);
    if p == 1 || q + 1 == p {
        let l = default_lambda(&GroupCase::SoOdd { p, q }, 1).expect("valid form");
        return vec![PredictedTerm { a: vec![], c: vec![], lambda: l }];
    }
    let c = (2..=p).flat_map(|i| (2 * p..=n).map(move |j| diff(n, i, j))).collect();
    let mut l = vec![1];
    l.extend(hd(2 * pi - 1, p - 1));
    l.extend((1..pi).map(|x| -2 * x));
    l.extend((pi..=qi).rev().map(|x| 2 * x));
    vec![PredictedTerm { a: vec![], c: sorted(c), lambda: halves(&l) }]
}

fn d1_prediction(p: usize, q: usize) -> Vec<PredictedTerm> {
    let n = p + q;
    let (pi, qi) = (p as i64, q as i64);
    if p == 1 {
        let l = default_lambda(&GroupCase::SoEven { p, q }, 1).expect("valid form");
        return vec![PredictedTerm { a: vec![], c: vec![], lambda: l }];
    }
    let c = (2..=p).flat_map(|i| (2 * p..n).map(move |j| diff(n, i, j))).collect();
    let mut l = vec![1];
    l.extend(hd(2 * pi - 1, p - 1));
    l.extend(hd(-3, p - 1));
    l.extend(hd(2 * qi - 1, q - p));
    l.push(1);
    vec![PredictedTerm { a: vec![], c: sorted(c), lambda: halves(&l) }]
}

fn d3_prediction(p: usize, q: usize) -> Vec<PredictedTerm> {
    let n = p + q;
    let (pi, qi) = (p as i64, q as i64);
    if p == 1 && q == 1 {
        return vec![PredictedTerm { a: vec![], c: vec![], lambda: halves(&[1, -1]) }];
    }
    let a: Vec<Root> = if q > p { (2 * p + 1..=n).map(|j| diff(n, p, j)).collect() } else { Vec::new() };
    let mut c: Vec<Root> = Vec::new();
    if p >= 2 {
        if q > p {
            c.extend((1..p).flat_map(|i| (2 * p + 1..=n).map(move |j| diff(n, i, j))));
        }
        for j in p + 2..=2 * p {
            c.push(diff(n, j, p));
            c.push(sum(n, p, j));
        }
        c.extend((1..p).map(|i| diff(n, p + 1, i)));
    }
    let mut l = hd(2 * pi - 1, p - 1);
    l.push(1);
    l.push(-1);
    l.extend(hd(-3, p - 1));
    l.extend(hd(2 * qi - 1, q - p));
    vec![PredictedTerm { a: sorted(a), c: sorted(c), lambda: halves(&l) }]
}

/// The predicted surviving terms of the rewritten sum at λ₀, where a proposition covers the form.
pub fn oracle_prediction(case: &GroupCase, index: usize) -> Result<Vec<PredictedTerm>> {
    let count = crate::orbits::real_forms(case)?.len();
    if index == 0 || index > count {
        return Err(Error::NoSuchForm { index, count });
    }
    let mut out = match (*case, index) {
        (GroupCase::Su { p, q }, k) => su_prediction(p, q, k - 1),
        (GroupCase::Sp { n }, k) => shuffle_terms_sp(n, k - 1)?
            .into_iter()
            .map(|(a, lambda)| PredictedTerm { a, c: vec![], lambda })
            .collect(),
        (GroupCase::SoStar { n }, i) => shuffle_terms_sostar(n, 2 * (i - 1))?
            .into_iter()
            .map(|(a, c, lambda)| PredictedTerm { a, c, lambda })
            .collect(),
        (GroupCase::SoOdd { p, q }, 1) => b1_prediction(p, q),
        (GroupCase::SoOdd { .. }, 3) => Vec::new(),
        (GroupCase::SoEven { p, q }, 1) => d1_prediction(p, q),
        (GroupCase::SoEven { p, q }, 3) => d3_prediction(p, q),
        _ => return Err(Error::InvalidCase(format!("no surviving-term description for form {index} of {case}"))),
    };
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct OracleComparison {
    pub predicted: Vec<PredictedTerm>,
    pub observed: Vec<SurvivingTerm>,
}

impl OracleComparison {
    pub fn matches(&self) -> bool {
        let obs: BTreeSet<PredictedTerm> = self
            .observed
            .iter()
            .map(|t| PredictedTerm { a: t.a.clone(), c: t.c.clone(), lambda: t.lambda.clone() })
            .collect();
        let pred: BTreeSet<PredictedTerm> = self.predicted.iter().cloned().collect();
        obs.len() == self.observed.len() && pred.len() == self.predicted.len() && obs == pred
    }
}

pub fn compare_oracle(case: &GroupCase, index: usize, term_cap: u64) -> Result<OracleComparison> {
    let predicted = oracle_prediction(case, index)?;
    let form = crate::orbits::real_form(case, index)?;
    let l0 = default_lambda(case, index)?;
    let observed = surviving_terms(case, &form, &l0, Variant::V2, term_cap)?;
    Ok(OracleComparison { predicted, observed })
}

/// Survivors at λ₀ equal the proposition's prediction, as sets of (A, C) and Λ.
pub fn check_oracle_against_brute_force(case: &GroupCase, index: usize) -> Result<bool> {
    Ok(compare_oracle(case, index, crate::constants::DEFAULT_TERM_CAP)?.matches())
}
