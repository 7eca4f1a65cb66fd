// SPDX-License-Identifier: Apache-2.0
//! Gray-code walk over all subsets of a root list, summing signed products
//! of root pairings. Everything is scaled to integers up front; products
//! stay in i128 until they overflow and then move to BigInt.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::rootsys::{Rational, Root, Weight};

type Sparse = Vec<(usize, i64)>;

fn sparse(r: &Root, k: i64) -> Sparse {
    r.support().map(|(i, c)| (i, c as i64 * k)).collect()
}

/// x ↦ Σ_S (−1)^{|S|} ∏_α ⟨base + Σ_{i∈S} δ_i, α⟩ over every subset S of the items.
#[derive(Clone, Debug)]
pub(crate) struct Plan {
    pub scale: i64,
    base: Vec<i64>,
    items: Vec<Sparse>,
    factors: Vec<Sparse>,
}

pub(crate) enum Prod {
    Zero,
    Small(i128),
    Big(BigInt),
}

#[derive(Default)]
struct Acc {
    small: i128,
    big: BigInt,
}

impl Acc {
    fn add(&mut self, p: Prod, negate: bool) {
        match p {
            Prod::Zero => {}
            Prod::Small(v) => {
                let v = if negate { -v } else { v };
                match self.small.checked_add(v) {
                    Some(s) => self.small = s,
                    None => {
                        self.big += self.small;
                        self.small = v;
                    }
                }
            }
            Prod::Big(v) => {
                if negate {
                    self.big -= v
                } else {
                    self.big += v
                }
            }
        }
    }

    fn total(self) -> BigInt {
        self.big + self.small
    }
}

/// Smallest D > 0 with D·w integral.
pub(crate) fn common_denominator(w: &Weight) -> BigInt {
    w.coords().iter().fold(BigInt::from(1), |d, x| d.lcm(x.denom()))
}

impl Plan {
    /// `base` is the weight at S = ∅; item i contributes `signs[i]·items[i]`.
    /// Returns None when the scaled weights do not fit in i64.
    pub fn new(base: &Weight, items: &[(Root, i64)], factors: &[Root]) -> Option<Plan> {
        let scale = common_denominator(base).to_i64()?;
        let scaled_base = base
            .coords()
            .iter()
            .map(|x| (x * Rational::from_integer(scale.into())).to_integer().to_i64())
            .collect::<Option<Vec<i64>>>()?;
        Some(Plan {
            scale,
            base: scaled_base,
            items: items.iter().map(|(r, s)| sparse(r, s * scale)).collect(),
            factors: factors.iter().map(|r| sparse(r, 1)).collect(),
        })
    }

    pub fn item_count(&self) -> usize {
        self.items.len()
    }

    pub fn product(&self, x: &[i64]) -> Prod {
        let mut acc: i128 = 1;
        let mut big: Option<BigInt> = None;
        for f in &self.factors {
            let v: i64 = f.iter().map(|&(i, c)| c * x[i]).sum();
            if v == 0 {
                return Prod::Zero;
            }
            match big.as_mut() {
                Some(b) => *b *= v,
                None => match acc.checked_mul(v as i128) {
                    Some(a) => acc = a,
                    None => big = Some(BigInt::from(acc) * v),
                },
            }
        }
        match big {
            Some(b) => Prod::Big(b),
            None => Prod::Small(acc),
        }
    }

    fn apply(&self, x: &mut [i64], item: usize, sign: i64) {
        for &(i, c) in &self.items[item] {
            x[i] += sign * c;
        }
    }

    fn start_at(&self, index: u64) -> (u64, Vec<i64>) {
        let mask = index ^ (index >> 1);
        let mut x = self.base.clone();
        for b in 0..self.items.len() {
            if mask >> b & 1 == 1 {
                self.apply(&mut x, b, 1);
            }
        }
        (mask, x)
    }

    /// Visit subsets with indices in [start, end) of the Gray order.
    fn walk(&self, start: u64, end: u64, mut f: impl FnMut(u64, &[i64])) {
        if start >= end {
            return;
        }
        let (mut mask, mut x) = self.start_at(start);
        f(mask, &x);
        for i in start + 1..end {
            let bit = i.trailing_zeros() as usize;
            mask ^= 1 << bit;
            self.apply(&mut x, bit, if mask >> bit & 1 == 1 { 1 } else { -1 });
            f(mask, &x);
        }
    }

    fn chunk_sum(&self, start: u64, end: u64) -> (BigInt, u64) {
        let mut acc = Acc::default();
        let mut nonzero = 0u64;
        self.walk(start, end, |mask, x| {
            let p = self.product(x);
            if !matches!(p, Prod::Zero) {
                nonzero += 1;
            }
            acc.add(p, mask.count_ones() % 2 == 1);
        });
        (acc.total(), nonzero)
    }

    /// Signed sum of all products and the number of nonzero terms.
    pub fn sum(&self, workers: usize) -> (BigInt, u64) {
        let total = 1u64 << self.items.len();
        const SEQUENTIAL_BELOW: u64 = 1 << 13;
        if workers <= 1 || total < SEQUENTIAL_BELOW {
            return self.chunk_sum(0, total);
        }
        let chunks = total.min(1024);
        let width = total.div_ceil(chunks);
        let parts: Vec<(BigInt, u64)> = pool(workers).install(|| {
            (0..chunks)
                .into_par_iter()
                .map(|c| self.chunk_sum(c * width, ((c + 1) * width).min(total)))
                .collect()
        });
        parts.into_iter().fold((BigInt::zero(), 0), |(s, n), (ps, pn)| (s + ps, n + pn))
    }

    /// Every subset mask whose product is nonzero, with its scaled weight.
    pub fn nonzero_terms(&self) -> Vec<(u64, Vec<i64>, Prod)> {
        let mut out = Vec::new();
        self.walk(0, 1u64 << self.items.len(), |mask, x| match self.product(x) {
            Prod::Zero => {}
            p => out.push((mask, x.to_vec(), p)),
        });
        out.sort_by_key(|t| t.0);
        out
    }
}

#[cfg(test)]
impl Prod {
    pub fn to_bigint(&self) -> BigInt {
        match self {
            Prod::Zero => BigInt::zero(),
            Prod::Small(v) => BigInt::from(*v),
            Prod::Big(b) => b.clone(),
        }
    }
}

fn pool(workers: usize) -> Arc<rayon::ThreadPool> {
    static POOLS: OnceLock<Mutex<HashMap<usize, Arc<rayon::ThreadPool>>>> = OnceLock::new();
    let mut map = POOLS.get_or_init(Default::default).lock().unwrap_or_else(|e| e.into_inner());
    map.entry(workers)
        .or_insert_with(|| {
            Arc::new(rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("thread pool"))
        })
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(plan: &Plan) -> BigInt {
        // Plain binary order, no Gray code.
        let m = plan.items.len();
        let mut s = BigInt::zero();
        for mask in 0u64..1 << m {
            let mut x = plan.base.clone();
            for b in 0..m {
                if mask >> b & 1 == 1 {
                    plan.apply(&mut x, b, 1);
                }
            }
            let v = plan.product(&x).to_bigint();
            if mask.count_ones() % 2 == 1 {
                s -= v
            } else {
                s += v
            }
        }
        s
    }

    #[test]
    fn gray_walk_matches_binary_order() {
        let rank = 4;
        let base = Weight::from_halves(&[7, 3, -1, 5]);
        let items: Vec<(Root, i64)> = vec![
            (Root::diff(rank, 0, 1), 1),
            (Root::sum(rank, 1, 2), -1),
            (Root::diff(rank, 2, 3), 1),
            (Root::unit(rank, 3, 1), -1),
            (Root::sum(rank, 0, 3), 1),
        ];
        let factors = vec![Root::diff(rank, 0, 2), Root::sum(rank, 1, 3), Root::unit(rank, 2, 1)];
        let plan = Plan::new(&base, &items, &factors).unwrap();
        assert_eq!(plan.scale, 2);
        let want = brute(&plan);
        assert_eq!(plan.sum(1).0, want);
        for start in 0..32 {
            let (mask, _) = plan.start_at(start);
            assert_eq!(mask, start ^ (start >> 1));
        }
    }

    #[test]
    fn accumulator_spills_to_bigint() {
        let mut acc = Acc::default();
        acc.add(Prod::Small(i128::MAX), false);
        acc.add(Prod::Small(i128::MAX), false);
        acc.add(Prod::Small(1), true);
        assert_eq!(acc.total(), BigInt::from(i128::MAX) * 2 - 1);
    }

    #[test]
    fn products_overflow_into_bigint() {
        let rank = 1;
        let base = Weight::from_ints(&[1 << 40]);
        let factors = vec![Root::unit(rank, 0, 1); 4];
        let plan = Plan::new(&base, &[], &factors).unwrap();
        assert_eq!(plan.product(&[1 << 40]).to_bigint(), BigInt::from(1u8) << 160);
    }
}
