// SPDX-License-Identifier: Apache-2.0
//! Levi data of a real form, the brute-force constant in both forms of the
//! defining alternating sum, the published closed forms, and the sign
//! relation between real forms exchanged by an automorphism.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::Plan;
use crate::error::{Error, Result};
use crate::orbits::{real_form, real_forms, RealForm};
use crate::rootsys::{
    fmt_rational, half_sum, pair, ratio, GroupCase, LieType, Rational, Root, RootSystem, SignedPerm, Weight,
};
use crate::weylpoly::DimPoly;

pub const DEFAULT_TERM_CAP: u64 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviData {
    /// Noncompact positive roots vanishing on h.
    pub delta_n_plus_l: Vec<Root>,
    /// Noncompact roots of either sign equal to 1 on h.
    pub delta_p1: Vec<Root>,
    /// Compact positive roots vanishing on h.
    pub delta_lk_plus: Vec<Root>,
    pub rho_nl: Weight,
    pub big_n: usize,
}

pub fn levi_data(case: &GroupCase, h: &Weight) -> Result<LeviData> {
    levi_data_in(&RootSystem::build(case)?, h)
}

pub fn levi_data_in(rs: &RootSystem, h: &Weight) -> Result<LeviData> {
    let value = |a: &Root| pair(h, a);
    let (zero, one) = (Rational::zero(), Rational::one());
    let mut delta_n_plus_l = Vec::new();
    let mut big_n = 0;
    for a in &rs.positive {
        let v = value(a)?;
        if v.is_positive() {
            big_n += 1;
        }
        if v == zero && !rs.is_compact(a) {
            delta_n_plus_l.push(a.clone());
        }
    }
    let mut delta_p1 = Vec::new();
    for a in rs.all_roots() {
        if !rs.is_compact(&a) && value(&a)? == one {
            delta_p1.push(a);
        }
    }
    let mut delta_lk_plus = Vec::new();
    for a in &rs.compact_positive {
        if value(a)? == zero {
            delta_lk_plus.push(a.clone());
        }
    }
    let rho_nl = half_sum(&delta_n_plus_l, rs.rank());
    Ok(LeviData { delta_n_plus_l, delta_p1, delta_lk_plus, rho_nl, big_n })
}

/// ⟨ρ_n(𝔩), α⟩ = 0 for every α in Δ⁺(𝔩∩𝔨).
pub fn check_rho_n_orthogonal(levi: &LeviData) -> bool {
    levi.delta_lk_plus.iter().all(|a| pair(&levi.rho_nl, a).is_ok_and(|v| v.is_zero()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// λ − ρ_n(𝔩) + 2ρ(A) − 2ρ(C), global sign (−1)^N.
    Orig,
    /// λ − 2ρ(A) − 2ρ(C), global sign (−1)^{N+#Δ_n⁺(𝔩)}.
    V2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SumConfig {
    pub term_cap: u64,
    pub workers: usize,
}

impl Default for SumConfig {
    fn default() -> Self {
        SumConfig { term_cap: DEFAULT_TERM_CAP, workers: 1 }
    }
}

/// Everything needed to evaluate the alternating sum for one real form.
#[derive(Clone, Debug)]
pub struct FormContext {
    pub case: GroupCase,
    pub form: RealForm,
    pub levi: LeviData,
    pub pk: DimPoly,
    pub plk: DimPoly,
}

impl FormContext {
    pub fn new(case: &GroupCase, form: &RealForm) -> Result<Self> {
        let rs = RootSystem::build(case)?;
        let levi = levi_data_in(&rs, &form.h)?;
        let pk = DimPoly::new(&rs.compact_positive, rs.rank())?;
        let plk = DimPoly::new(&levi.delta_lk_plus, rs.rank())?;
        Ok(FormContext { case: *case, form: form.clone(), levi, pk, plk })
    }

    pub fn for_index(case: &GroupCase, index: usize) -> Result<Self> {
        Self::new(case, &real_form(case, index)?)
    }

    /// Number of (A, C) pairs: 2^{#Δ_n⁺(𝔩)+#Δ(𝔭₁)}.
    pub fn subset_exponent(&self) -> u32 {
        (self.levi.delta_n_plus_l.len() + self.levi.delta_p1.len()) as u32
    }

    pub fn check_cap(&self, cap: u64) -> Result<()> {
        let m = self.subset_exponent();
        if m >= 64 || (1u64 << m) > cap {
            return Err(Error::TooLarge { required_log2: m, cap });
        }
        Ok(())
    }

    /// Starting weight and signed items of the sum for the given variant.
    pub(crate) fn plan(&self, lambda: &Weight, variant: Variant) -> Result<Plan> {
        if lambda.len() != self.case.rank() {
            return Err(Error::LengthMismatch { expected: self.case.rank(), got: lambda.len() });
        }
        let (base, a_sign) = match variant {
            Variant::Orig => (lambda.sub(&self.levi.rho_nl)?, 1),
            Variant::V2 => (lambda.clone(), -1),
        };
        let items: Vec<(Root, i64)> = self
            .levi
            .delta_n_plus_l
            .iter()
            .map(|r| (r.clone(), a_sign))
            .chain(self.levi.delta_p1.iter().map(|r| (r.clone(), -1)))
            .collect();
        Plan::new(&base, &items, self.pk.roots())
            .ok_or_else(|| Error::InvalidCase(format!("λ = {lambda} is too large to scale to machine integers")))
    }

    pub(crate) fn global_sign(&self, variant: Variant) -> i64 {
        let e = match variant {
            Variant::Orig => self.levi.big_n,
            Variant::V2 => self.levi.big_n + self.levi.delta_n_plus_l.len(),
        };
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Exact rational value contributed by a scaled product.
    pub(crate) fn term_denominator(&self, scale: i64) -> Rational {
        let d = Rational::from_integer(BigInt::from(scale)).pow(self.pk.degree() as i32);
        d * self.pk.denominator_product()
    }

    /// The left side of the defining equation (including the global sign).
    pub fn raw_sum(&self, lambda: &Weight, variant: Variant, cfg: &SumConfig) -> Result<SumOutcome> {
        if variant == Variant::V2 && !check_rho_n_orthogonal(&self.levi) {
            return Err(Error::OrthogonalityViolated);
        }
        self.check_cap(cfg.term_cap)?;
        let plan = self.plan(lambda, variant)?;
        let (s, nonzero) = plan.sum(cfg.workers);
        let lhs = Rational::from_integer(s * self.global_sign(variant)) / self.term_denominator(plan.scale);
        Ok(SumOutcome { lhs, term_count: 1u64 << plan.item_count(), surviving: nonzero })
    }

    /// c with LHS = c·P_{L∩K}(λ); the quotient must be an exact integer.
    pub fn constant(&self, lambda: &Weight, variant: Variant, cfg: &SumConfig) -> Result<BruteOutcome> {
        if variant == Variant::V2 && !check_rho_n_orthogonal(&self.levi) {
            return Err(Error::OrthogonalityViolated);
        }
        let plk = self.plk.eval(lambda)?;
        if plk.is_zero() {
            return Err(Error::LambdaDegenerate(lambda.to_string()));
        }
        let out = self.raw_sum(lambda, variant, cfg)?;
        let q = &out.lhs / &plk;
        if !q.is_integer() {
            return Err(Error::NonIntegerQuotient(format!(
                "{} at λ = {lambda}: {} / {} = {}",
                self.form.label,
                fmt_rational(&out.lhs),
                fmt_rational(&plk),
                fmt_rational(&q)
            )));
        }
        let c = q
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::NonIntegerQuotient(format!("constant {q} exceeds 64 bits")))?;
        Ok(BruteOutcome { c, term_count: out.term_count, surviving: out.surviving })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumOutcome {
    pub lhs: Rational,
    pub term_count: u64,
    pub surviving: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteOutcome {
    pub c: i64,
    pub term_count: u64,
    pub surviving: u64,
}

pub fn constant_brute_force_orig(case: &GroupCase, form: &RealForm, lambda: &Weight) -> Result<i64> {
    Ok(FormContext::new(case, form)?.constant(lambda, Variant::Orig, &SumConfig::default())?.c)
}

pub fn constant_brute_force_v2(case: &GroupCase, form: &RealForm, lambda: &Weight) -> Result<i64> {
    Ok(FormContext::new(case, form)?.constant(lambda, Variant::V2, &SumConfig::default())?.c)
}

fn desc_halves(from2: i64, count: usize) -> Vec<i64> {
    // Entries from2/2, from2/2 − 1, … (count of them), stored doubled.
    (0..count as i64).map(|t| from2 - 2 * t).collect()
}

fn desc(from: i64, to: i64) -> Vec<i64> {
    if from < to {
        Vec::new()
    } else {
        (to..=from).rev().collect()
    }
}

fn doubled(v: Vec<i64>) -> Vec<i64> {
    v.into_iter().map(|x| 2 * x).collect()
}

/// The λ₀ used for each real form.
pub fn default_lambda(case: &GroupCase, index: usize) -> Result<Weight> {
    let count = real_forms(case)?.len();
    if index == 0 || index > count {
        return Err(Error::NoSuchForm { index, count });
    }
    let (pi, qi) = match case.params().as_slice() {
        [(_, p), (_, q)] => (*p as i64, *q as i64),
        _ => (0, 0),
    };
    let w = match *case {
        GroupCase::Su { p, q } => {
            let (p, q, k) = (p as i64, q as i64, index as i64 - 1);
            let mut v = desc(q, q - k + 1);
            v.extend(desc(p, k + 1));
            v.extend(desc(p - k, 1));
            v.extend(desc(q - k, p - k + 1));
            v.extend(desc(k, 1));
            Weight::from_ints(&v)
        }
        GroupCase::Sp { n } => {
            let (n, k) = (n as i64, index as i64 - 1);
            let q = n - k;
            let mut v = desc(n, q + 1);
            v.extend(desc(n, k + 1));
            Weight::from_ints(&v)
        }
        GroupCase::SoStar { n } => {
            let (n, p) = (n as i64, 2 * (index as i64 - 1));
            let v = if n % 2 == 0 {
                let mut v = desc(n, n - p + 1);
                v.extend(desc(n, p + 1));
                v
            } else {
                let q = n - 1 - p;
                let mut v = desc(n, q + 2);
                v.push(p + 1);
                v.extend(desc(n - 1, p + 1));
                v
            };
            Weight::from_ints(&v)
        }
        GroupCase::SoOdd { .. } | GroupCase::SoEven { .. } => {
            let odd = matches!(case, GroupCase::SoOdd { .. });
            let (p, q) = (pi, qi);
            let pu = p as usize;
            // Forms 2 and 4 reuse the partner's λ₀ with the same coordinate negated as h.
            let (base_index, flip) = match index {
                2 => (1, Some(pu - 1)),
                4 => (3, Some((p + q) as usize - 1)),
                i => (i, None),
            };
            let v2: Vec<i64> = match (odd, base_index) {
                (true, 1) => {
                    let mut v = vec![1];
                    v.extend(desc_halves(2 * q + 1, pu - 1));
                    v.extend(doubled(desc(-1, -(p - 1))));
                    v.extend(doubled(desc(q - p + 1, 1)));
                    v
                }
                (true, _) => {
                    let mut v = desc_halves(2 * q - 3, pu - 1);
                    v.push(2 * (q - p) + 1);
                    v.push(2 * (p - 1));
                    v.extend(doubled(desc(0, -(p - 2))));
                    v.extend(doubled(desc(q - p, 1)));
                    v
                }
                (false, 1) => {
                    let mut v = vec![1];
                    v.extend(desc_halves(2 * q - 1, pu - 1));
                    v.extend(desc_halves(-3, pu - 1));
                    v.extend(desc_halves(2 * (q - p) + 1, (q - p + 1) as usize));
                    v
                }
                (false, _) => {
                    let mut v = desc_halves(2 * q - 3, pu - 1);
                    v.push(2 * (q - p) + 1);
                    v.push(2 * p - 3);
                    v.extend(desc_halves(1, pu - 1));
                    v.extend(desc_halves(2 * (q - p) - 1, (q - p) as usize));
                    v
                }
            };
            let w = Weight::from_halves(&v2);
            match flip {
                Some(k) => w.with_negated(k),
                None => w,
            }
        }
    };
    debug_assert_eq!(w.len(), case.rank());
    Ok(w)
}

fn binomial(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn sign_pow(e: u64) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The constant of each real form as given in the published summary table.
pub fn constant_closed_form(case: &GroupCase, index: usize) -> Result<i64> {
    let count = real_forms(case)?.len();
    if index == 0 || index > count {
        return Err(Error::NoSuchForm { index, count });
    }
    let pow2 = |e: u64| 1i64 << e;
    Ok(match *case {
        GroupCase::Su { p, q } => {
            let (p, q, k) = (p as u64, q as u64, index as u64 - 1);
            sign_pow(k * (p + q - k)) * binomial(p, k)
        }
        GroupCase::SoOdd { p, .. } => {
            let p = p as u64;
            let c1 = sign_pow(p / 2 + 1) * pow2(2 * p - 2);
            match index {
                1 => c1,
                2 => -c1,
                _ => 0,
            }
        }
        GroupCase::Sp { n } => {
            let (n, k) = (n as u64, index as u64 - 1);
            if n % 2 == 0 && k % 2 == 1 {
                0
            } else {
                sign_pow(k.div_ceil(2)) * binomial(k / 2 + (n - k) / 2, k / 2)
            }
        }
        GroupCase::SoEven { p, q } => {
            let (p, q) = (p as u64, q as u64);
            match index {
                1 | 2 => sign_pow((p - 1) / 2) * pow2(2 * p - 2),
                _ => sign_pow(p / 2 + 1) * if q > p { pow2(2 * p - 1) } else { pow2(2 * p - 2) },
            }
        }
        GroupCase::SoStar { n } => {
            let n = n as u64;
            let p = 2 * (index as u64 - 1);
            let s = if n.is_multiple_of(2) { (n - p) / 2 } else { (n - 1 - p) / 2 };
            sign_pow(p / 2) * binomial(p / 2 + s, p / 2)
        }
    })
}

/// Symbolic closed form, in the table's notation ([x] = floor).
pub fn closed_form_symbol(case: &GroupCase, index: usize) -> Result<String> {
    let count = real_forms(case)?.len();
    if index == 0 || index > count {
        return Err(Error::NoSuchForm { index, count });
    }
    Ok(match (*case, index) {
        (GroupCase::Su { .. }, _) => "(-1)^(k(p+q-k)) C(p,k)".into(),
        (GroupCase::SoOdd { .. }, 1) => "(-1)^([p/2]+1) 2^(2p-2)".into(),
        (GroupCase::SoOdd { .. }, 2) => "(-1)^[p/2] 2^(2p-2)".into(),
        (GroupCase::SoOdd { .. }, _) => "0".into(),
        (GroupCase::Sp { n }, k) => {
            if n % 2 == 0 && (k - 1) % 2 == 1 {
                "0 (n even, k odd)".into()
            } else {
                "(-1)^[(k+1)/2] C(r+s,r), r=[k/2], s=[(n-k)/2]".into()
            }
        }
        (GroupCase::SoEven { .. }, 1 | 2) => "(-1)^[(p-1)/2] 2^(2p-2)".into(),
        (GroupCase::SoEven { p, q }, _) if q > p => "(-1)^([p/2]+1) 2^(2p-1)".into(),
        (GroupCase::SoEven { .. }, _) => "(-1)^([p/2]+1) 2^(2p-2)".into(),
        (GroupCase::SoStar { n }, _) if n % 2 == 0 => "(-1)^(p/2) C(r+s,r), r=p/2, s=(n-p)/2".into(),
        (GroupCase::SoStar { .. }, _) => "(-1)^(p/2) C(r+s,r), r=p/2, s=(n-1-p)/2".into(),
    })
}

/// (−1)^{n+N₁+N₂} for an automorphism σ carrying form1 to form2, with
/// n = #(Δ_n⁺(𝔩₂) ∩ −σ(Δ_n⁺(𝔩₁))).
pub fn auto_sign_relation(case: &GroupCase, sigma: &SignedPerm, form1: &RealForm, form2: &RealForm) -> Result<i64> {
    let rs = RootSystem::build(case)?;
    let rank = rs.rank();
    let bijective = {
        let mut seen: Vec<usize> = sigma.perm.clone();
        seen.sort_unstable();
        seen == (0..rank).collect::<Vec<_>>() && sigma.signs.len() == rank && sigma.signs.iter().all(|s| s.abs() == 1)
    };
    if !bijective {
        return Err(Error::SigmaHypothesis("not a signed permutation of the coordinates".into()));
    }
    let roots: BTreeSet<Root> = rs.all_roots().into_iter().collect();
    for a in &roots {
        let b = a.permuted(sigma);
        if !roots.contains(&b) {
            return Err(Error::SigmaHypothesis(format!("σ({a}) = {b} is not a root")));
        }
        if rs.is_compact(a) != rs.is_compact(&b) {
            return Err(Error::SigmaHypothesis(format!("σ does not preserve compactness of {a}")));
        }
    }
    let compact: BTreeSet<Root> = rs.compact_positive.iter().cloned().collect();
    let image: BTreeSet<Root> = rs.compact_positive.iter().map(|a| a.permuted(sigma)).collect();
    if compact != image {
        return Err(Error::SigmaHypothesis("σ does not preserve Δ_c⁺".into()));
    }
    if sigma.apply(&form1.h) != form2.h {
        return Err(Error::SigmaHypothesis(format!("σ(h₁) = {} ≠ h₂ = {}", sigma.apply(&form1.h), form2.h)));
    }
    let l1 = levi_data_in(&rs, &form1.h)?;
    let l2 = levi_data_in(&rs, &form2.h)?;
    let targets: BTreeSet<Root> = l2.delta_n_plus_l.iter().cloned().collect();
    let n = l1.delta_n_plus_l.iter().filter(|a| targets.contains(&a.permuted(sigma).neg())).count();
    Ok(sign_pow((n + l1.big_n + l2.big_n) as u64))
}

/// Fundamental weights of the ambient type.
pub fn fundamental_weights(lie: LieType, rank: usize) -> Vec<Weight> {
    let prefix = |i: usize| {
        let v: Vec<i64> = (0..rank).map(|j| if j < i { 2 } else { 0 }).collect();
        Weight::from_halves(&v)
    };
    let spin = |last: i64| {
        let mut v = vec![1i64; rank];
        if let Some(x) = v.last_mut() {
            *x = last;
        }
        Weight::from_halves(&v)
    };
    match lie {
        LieType::A => (1..rank).map(prefix).collect(),
        LieType::C => (1..=rank).map(prefix).collect(),
        LieType::B => {
            let mut w: Vec<Weight> = (1..rank).map(prefix).collect();
            w.push(spin(1));
            w
        }
        LieType::D if rank < 2 => vec![prefix(1)],
        LieType::D => {
            let mut w: Vec<Weight> = (1..rank - 1).map(prefix).collect();
            w.push(spin(-1));
            w.push(spin(1));
            w
        }
    }
}

fn mix_seed(seed: u64, case: &GroupCase, index: usize) -> u64 {
    let mut x = seed ^ 0x9e37_79b9_7f4a_7c15;
    let tag = case.family() as u64;
    for v in std::iter::once(tag).chain(case.params().iter().map(|&(_, v)| v as u64)).chain([index as u64]) {
        x = (x ^ v).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        x ^= x >> 31;
    }
    x
}

/// `count` further weights λ₀ + Σ m_i ω_i (m_i ∈ 0..=3), distinct from λ₀ and
/// each other, each with P_{L∩K}(λ) ≠ 0.
pub fn extra_lambdas(ctx: &FormContext, lambda0: &Weight, count: usize, seed: u64) -> Result<Vec<Weight>> {
    let omegas = fundamental_weights(ctx.case.lie_type(), ctx.case.rank());
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, &ctx.case, ctx.form.index));
    let mut out: Vec<Weight> = Vec::new();
    for _ in 0..256 {
        if out.len() == count {
            break;
        }
        let mut w = lambda0.clone();
        for om in &omegas {
            let m: i64 = rng.gen_range(0..=3);
            w = w.add(&om.scale(&ratio(m, 1)))?;
        }
        if &w == lambda0 || out.contains(&w) || ctx.plk.eval(&w)?.is_zero() {
            continue;
        }
        out.push(w);
    }
    if out.len() < count {
        return Err(Error::LambdaDegenerate(format!("no nondegenerate λ found near {lambda0}")));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Brute,
    Closed,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[derive(Default)]
pub struct RunOptions {
    pub sum: SumConfig,
    pub seed: u64,
    /// Number of extra λ besides λ₀ for brute-force runs.
    pub extra_lambdas: usize,
}


#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantReport {
    pub form: RealForm,
    pub big_n: usize,
    pub c_closed: Option<i64>,
    /// Brute-force value at each λ in `lambda_used` (λ₀ first).
    pub c_brute_values: Vec<i64>,
    pub lambda_used: Vec<Weight>,
    pub term_count: u64,
    pub surviving_term_count: u64,
}

impl ConstantReport {
    pub fn c_brute(&self) -> Option<i64> {
        self.c_brute_values.first().copied()
    }

    /// All brute values coincide and, when both are known, equal the closed form.
    pub fn agree(&self) -> Option<bool> {
        let b = self.c_brute()?;
        let consistent = self.c_brute_values.iter().all(|&v| v == b);
        Some(consistent && self.c_closed.is_none_or(|c| c == b))
    }
}

pub fn constant_report(case: &GroupCase, index: usize, method: Method, opts: &RunOptions) -> Result<ConstantReport> {
    let ctx = FormContext::for_index(case, index)?;
    let c_closed = match method {
        Method::Brute => None,
        _ => Some(constant_closed_form(case, index)?),
    };
    let mut report = ConstantReport {
        form: ctx.form.clone(),
        big_n: ctx.levi.big_n,
        c_closed,
        c_brute_values: Vec::new(),
        lambda_used: Vec::new(),
        term_count: 1u64.checked_shl(ctx.subset_exponent()).unwrap_or(0),
        surviving_term_count: 0,
    };
    if method != Method::Closed {
        let l0 = default_lambda(case, index)?;
        let mut lambdas = vec![l0.clone()];
        lambdas.extend(extra_lambdas(&ctx, &l0, opts.extra_lambdas, opts.seed)?);
        for (i, l) in lambdas.iter().enumerate() {
            let out = ctx.constant(l, Variant::Orig, &opts.sum)?;
            if i == 0 {
                report.term_count = out.term_count;
                report.surviving_term_count = out.surviving;
            }
            report.c_brute_values.push(out.c);
        }
        report.lambda_used = lambdas;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::from_ints(v)
    }

    fn form(case: &GroupCase, i: usize) -> RealForm {
        real_form(case, i).unwrap()
    }

    #[test]
    fn levi_examples() {
        let sp = GroupCase::sp(2).unwrap();
        let l = levi_data(&sp, &w(&[1, -1])).unwrap();
        assert_eq!(l.delta_n_plus_l, vec![Root::sum(2, 0, 1)]);
        assert!(l.delta_p1.is_empty());
        assert_eq!(l.big_n, 2);
        assert_eq!(l.rho_nl, Weight::from_halves(&[1, 1]));

        let su = GroupCase::su(2, 2).unwrap();
        let l = levi_data(&su, &form(&su, 2).h).unwrap();
        let mut want = vec![Root::diff(4, 0, 2), Root::diff(4, 1, 3)];
        want.sort();
        assert_eq!(l.delta_n_plus_l, want);
        assert!(l.delta_p1.is_empty());

        let b = GroupCase::so_odd(1, 3).unwrap();
        let l = levi_data(&b, &form(&b, 1).h).unwrap();
        assert!(l.delta_n_plus_l.is_empty() && l.delta_p1.is_empty());
    }

    #[test]
    fn orthogonality_examples() {
        let sp = GroupCase::sp(2).unwrap();
        assert!(check_rho_n_orthogonal(&levi_data(&sp, &w(&[1, -1])).unwrap()));
        let b = GroupCase::so_odd(2, 2).unwrap();
        assert!(check_rho_n_orthogonal(&levi_data(&b, &form(&b, 1).h).unwrap()));
    }

    #[test]
    fn small_brute_values() {
        let su = GroupCase::su(1, 1).unwrap();
        assert_eq!(constant_brute_force_orig(&su, &form(&su, 1), &w(&[1, 1])).unwrap(), 1);
        assert_eq!(constant_brute_force_orig(&su, &form(&su, 2), &default_lambda(&su, 2).unwrap()).unwrap(), -1);

        let sp = GroupCase::sp(2).unwrap();
        assert_eq!(constant_brute_force_orig(&sp, &form(&sp, 3), &w(&[2, 1])).unwrap(), -1);
        assert_eq!(constant_brute_force_v2(&sp, &form(&sp, 2), &w(&[2, 2])).unwrap(), 0);

        let b = GroupCase::so_odd(1, 1).unwrap();
        assert_eq!(constant_brute_force_v2(&b, &form(&b, 1), &default_lambda(&b, 1).unwrap()).unwrap(), -1);
    }

    #[test]
    fn degenerate_lambda_is_reported() {
        let su = GroupCase::su(2, 2).unwrap();
        let f = form(&su, 1);
        // k=0: 𝔩∩𝔨 contains ε1−ε2; equal coordinates kill P_{L∩K}.
        let err = constant_brute_force_orig(&su, &f, &w(&[1, 1, 2, 1])).unwrap_err();
        assert!(matches!(err, Error::LambdaDegenerate(_)), "{err:?}");
    }

    #[test]
    fn cap_is_enforced() {
        let ctx = FormContext::for_index(&GroupCase::so_odd(2, 2).unwrap(), 3).unwrap();
        let cfg = SumConfig { term_cap: 2, workers: 1 };
        let l = default_lambda(&ctx.case, 3).unwrap();
        assert!(matches!(ctx.constant(&l, Variant::Orig, &cfg), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn default_lambdas() {
        assert_eq!(default_lambda(&GroupCase::sp(3).unwrap(), 2).unwrap(), w(&[3, 3, 2]));
        assert_eq!(default_lambda(&GroupCase::so_odd(1, 3).unwrap(), 1).unwrap(), Weight::from_halves(&[1, 6, 4, 2]));
        assert_eq!(default_lambda(&GroupCase::so_even(1, 3).unwrap(), 1).unwrap(), Weight::from_halves(&[1, 5, 3, 1]));
        assert_eq!(default_lambda(&GroupCase::so_odd(2, 2).unwrap(), 1).unwrap(), Weight::from_halves(&[1, 5, -2, 2]));
        assert_eq!(default_lambda(&GroupCase::so_odd(2, 1).unwrap(), 1).unwrap(), Weight::from_halves(&[1, 3, -2]));
        assert_eq!(default_lambda(&GroupCase::so_odd(1, 0).unwrap(), 1).unwrap(), Weight::from_halves(&[1]));
        assert_eq!(
            default_lambda(&GroupCase::so_odd(3, 4).unwrap(), 3).unwrap(),
            Weight::from_halves(&[5, 3, 3, 4, 0, -2, 2])
        );
        assert_eq!(
            default_lambda(&GroupCase::so_even(3, 4).unwrap(), 3).unwrap(),
            Weight::from_halves(&[5, 3, 3, 3, 1, -1, 1])
        );
        assert_eq!(
            default_lambda(&GroupCase::so_even(2, 3).unwrap(), 1).unwrap(),
            Weight::from_halves(&[1, 5, -3, 3, 1])
        );
        assert_eq!(default_lambda(&GroupCase::so_star(3).unwrap(), 1).unwrap(), w(&[1, 2, 1]));
        assert_eq!(default_lambda(&GroupCase::so_star(5).unwrap(), 2).unwrap(), w(&[5, 4, 3, 4, 3]));
        assert_eq!(default_lambda(&GroupCase::su(2, 3).unwrap(), 2).unwrap(), w(&[3, 2, 1, 2, 1]));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(constant_closed_form(&GroupCase::su(2, 3).unwrap(), 2).unwrap(), 2);
        assert_eq!(constant_closed_form(&GroupCase::so_even(2, 3).unwrap(), 3).unwrap(), 8);
        assert_eq!(constant_closed_form(&GroupCase::so_star(3).unwrap(), 2).unwrap(), -1);
        assert_eq!(constant_closed_form(&GroupCase::so_star(4).unwrap(), 2).unwrap(), -2);
        let sp5: Vec<i64> = (1..=6).map(|i| constant_closed_form(&GroupCase::sp(5).unwrap(), i).unwrap()).collect();
        assert_eq!(sp5, vec![1, -1, -2, 2, 1, -1]);
        assert!(constant_closed_form(&GroupCase::so_odd(2, 1).unwrap(), 3).is_err());
    }

    #[test]
    fn sign_relation_examples() {
        let b = GroupCase::so_odd(2, 2).unwrap();
        let s = SignedPerm::negate(4, 1);
        assert_eq!(auto_sign_relation(&b, &s, &form(&b, 1), &form(&b, 2)).unwrap(), -1);
        let d = GroupCase::so_even(2, 2).unwrap();
        assert_eq!(auto_sign_relation(&d, &s, &form(&d, 1), &form(&d, 2)).unwrap(), 1);
        let last = SignedPerm::negate(4, 3);
        assert_eq!(auto_sign_relation(&d, &last, &form(&d, 3), &form(&d, 4)).unwrap(), 1);
        // A swap across the blocks breaks compactness.
        let mut bad = SignedPerm::identity(4);
        bad.perm.swap(0, 2);
        assert!(auto_sign_relation(&d, &bad, &form(&d, 1), &form(&d, 2)).is_err());
        // Wrong target h.
        assert!(auto_sign_relation(&d, &s, &form(&d, 1), &form(&d, 3)).is_err());
    }

    #[test]
    fn extra_lambdas_are_distinct_and_valid() {
        let case = GroupCase::so_even(2, 2).unwrap();
        let ctx = FormContext::for_index(&case, 3).unwrap();
        let l0 = default_lambda(&case, 3).unwrap();
        let ex = extra_lambdas(&ctx, &l0, 2, 7).unwrap();
        assert_eq!(ex.len(), 2);
        assert_ne!(ex[0], ex[1]);
        assert!(ex.iter().all(|l| l != &l0 && !ctx.plk.eval(l).unwrap().is_zero()));
        assert_eq!(ex, extra_lambdas(&ctx, &l0, 2, 7).unwrap());
    }
}
