// SPDX-License-Identifier: Apache-2.0
//! Nilpotent orbits by partition, their neutral elements h, weighted Dynkin
//! diagrams, and the real forms of the orbit attached to each group case.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rootsys::{pair, GroupCase, LieType, Root, Weight};

/// A partition, stored non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    /// Build from (part, multiplicity) pairs, skipping zero multiplicities.
    pub fn from_blocks(blocks: &[(usize, usize)]) -> Self {
        let mut v = Vec::new();
        for &(d, m) in blocks {
            v.extend(std::iter::repeat_n(d, m));
        }
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &d in &self.0 {
            *m.entry(d).or_insert(0) += 1;
        }
        m
    }
}

impl fmt::Display for Partition {
    /// Exponent notation, e.g. `[3,2^2,1^2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .multiplicities()
            .into_iter()
            .rev()
            .map(|(d, m)| if m == 1 { d.to_string() } else { format!("{d}^{m}") })
            .collect();
        write!(f, "[{}]", blocks.join(","))
    }
}

/// Size and multiplicity rules for nilpotent orbits of each classical type.
pub fn validate_partition(lie: LieType, parts: &[usize], total: usize) -> bool {
    if parts.contains(&0) || parts.iter().sum::<usize>() != total {
        return false;
    }
    let Ok(p) = Partition::new(parts.to_vec()) else { return false };
    let mult = p.multiplicities();
    let even_mult_for = |odd_parts: bool| mult.iter().all(|(&d, &m)| (d % 2 == 1) != odd_parts || m % 2 == 0);
    match lie {
        LieType::A => true,
        LieType::B => total % 2 == 1 && even_mult_for(false),
        LieType::C => total.is_multiple_of(2) && even_mult_for(true),
        LieType::D => total.is_multiple_of(2) && even_mult_for(false),
    }
}

/// Type D partitions with only even parts label two orbits rather than one.
pub fn is_very_even(lie: LieType, parts: &[usize]) -> bool {
    lie == LieType::D && !parts.is_empty() && parts.iter().all(|d| d % 2 == 0)
}

fn rank_for(lie: LieType, size: usize) -> usize {
    match lie {
        LieType::A => size,
        LieType::B => (size.saturating_sub(1)) / 2,
        LieType::C | LieType::D => size / 2,
    }
}

/// Dominant h of the standard sl₂-triple: eigenvalues d−1, d−3, … per part,
/// sorted non-increasing and truncated to the rank.
pub fn h_from_partition(lie: LieType, parts: &[usize]) -> Result<Weight> {
    let size: usize = parts.iter().sum();
    if !validate_partition(lie, parts, size) || size == 0 {
        return Err(Error::InvalidPartition(parts.to_vec()));
    }
    let mut vals: Vec<i64> =
        parts.iter().flat_map(|&d| (0..d).map(move |t| d as i64 - 1 - 2 * t as i64)).collect();
    vals.sort_unstable_by(|a, b| b.cmp(a));
    vals.truncate(rank_for(lie, size));
    Ok(Weight::from_ints(&vals))
}

/// The complex orbit whose real forms the library studies.
pub fn orbit_partition(case: &GroupCase) -> Partition {
    match *case {
        GroupCase::Su { p, q } => Partition::from_blocks(&[(2, p), (1, q - p)]),
        GroupCase::Sp { n } => Partition::from_blocks(&[(2, n)]),
        GroupCase::SoStar { n } if n % 2 == 0 => Partition::from_blocks(&[(2, n)]),
        GroupCase::SoStar { n } => Partition::from_blocks(&[(2, n - 1), (1, 2)]),
        GroupCase::SoOdd { p, q } => Partition::from_blocks(&[(3, 1), (2, 2 * p - 2), (1, 2 * (q + 1 - p))]),
        GroupCase::SoEven { p, q } => Partition::from_blocks(&[(3, 1), (2, 2 * p - 2), (1, 2 * (q - p) + 1)]),
    }
}

pub fn simple_roots(lie: LieType, rank: usize) -> Vec<Root> {
    let mut out: Vec<Root> = (0..rank.saturating_sub(1)).map(|i| Root::diff(rank, i, i + 1)).collect();
    match lie {
        LieType::A => {}
        LieType::B => out.push(Root::unit(rank, rank - 1, 1)),
        LieType::C => out.push(Root::unit(rank, rank - 1, 2)),
        LieType::D if rank >= 2 => out.push(Root::sum(rank, rank - 2, rank - 1)),
        LieType::D => {}
    }
    out
}

/// Labels α_i(h) on the simple roots; h must be dominant.
pub fn weighted_dynkin(lie: LieType, h: &Weight) -> Result<Vec<i64>> {
    simple_roots(lie, h.len())
        .iter()
        .enumerate()
        .map(|(index, a)| {
            let v = pair(h, a)?;
            let neg = v < num_traits::Zero::zero();
            if neg || !v.is_integer() {
                return Err(Error::NotDominant { index: index + 1, value: crate::rootsys::fmt_rational(&v) });
            }
            i64::try_from(v.numer()).map_err(|_| Error::NotDominant { index: index + 1, value: v.to_string() })
        })
        .collect()
}

/// The Weyl-group conjugate of h that is dominant for the standard positive system.
pub fn dominant(lie: LieType, h: &Weight) -> Weight {
    use num_traits::{Signed, Zero};
    let mut v: Vec<_> = h.coords().to_vec();
    match lie {
        LieType::A => v.sort_by(|a, b| b.cmp(a)),
        LieType::B | LieType::C => {
            v = v.into_iter().map(|x| x.abs()).collect();
            v.sort_by(|a, b| b.cmp(a));
        }
        LieType::D => {
            let negatives = v.iter().filter(|x| x.is_negative()).count();
            let has_zero = v.iter().any(Zero::is_zero);
            v = v.into_iter().map(|x| x.abs()).collect();
            v.sort_by(|a, b| b.cmp(a));
            if !has_zero && negatives % 2 == 1 {
                if let Some(last) = v.last_mut() {
                    *last = -last.clone();
                }
            }
        }
    }
    Weight::new(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TableauRow {
    pub len: usize,
    pub start: Sign,
}

/// Rows of alternating signs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SignedTableau {
    pub rows: Vec<TableauRow>,
}

impl SignedTableau {
    pub fn push(&mut self, len: usize, start: Sign, times: usize) -> &mut Self {
        self.rows.extend(std::iter::repeat_n(TableauRow { len, start }, times));
        self
    }

    pub fn row_string(row: &TableauRow) -> String {
        let mut s = String::with_capacity(row.len);
        let mut sign = row.start;
        for _ in 0..row.len {
            s.push(sign.symbol());
            sign = sign.flip();
        }
        s
    }

    /// ASCII boxes, one line per row: `|+|-|+|`.
    pub fn render(&self) -> String {
        self.rows
            .iter()
            .map(|r| {
                let cells: String = Self::row_string(r).chars().map(|c| format!("|{c}")).collect();
                format!("{cells}|")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Compact one-line form, e.g. `+-+ / +- x2 / - x3`.
    pub fn summary(&self) -> String {
        let mut out: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.rows.len() {
            let mut j = i;
            while j < self.rows.len() && self.rows[j] == self.rows[i] {
                j += 1;
            }
            let s = Self::row_string(&self.rows[i]);
            out.push(if j - i == 1 { s } else { format!("{s} x{}", j - i) });
            i = j;
        }
        out.join(" / ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealForm {
    pub index: usize,
    pub label: String,
    pub h: Weight,
    pub exists_condition: String,
    pub tableau: Option<SignedTableau>,
}

fn hvec(blocks: &[(i64, usize)]) -> Weight {
    let v: Vec<i64> = blocks.iter().flat_map(|&(x, m)| std::iter::repeat_n(x, m)).collect();
    Weight::from_ints(&v)
}

fn tab(rows: &[(usize, Sign, usize)]) -> SignedTableau {
    let mut t = SignedTableau::default();
    for &(len, s, m) in rows {
        t.push(len, s, m);
    }
    t
}

/// The real forms of `orbit_partition(case)`, in canonical order (index from 1).
pub fn real_forms(case: &GroupCase) -> Result<Vec<RealForm>> {
    use Sign::{Minus as M, Plus as P};
    case.validate()?;
    let mut out = Vec::new();
    let mut add = |label: String, h: Weight, cond: &str, t: SignedTableau| {
        let index = out.len() + 1;
        out.push(RealForm { index, label, h, exists_condition: cond.to_string(), tableau: Some(t) });
    };
    match *case {
        GroupCase::Su { p, q } => {
            for k in 0..=p {
                let h = hvec(&[(1, k), (-1, p - k), (1, p - k), (0, q - p), (-1, k)]);
                add(format!("k={k}"), h, "0 ≤ k ≤ p", tab(&[(2, P, k), (2, M, p - k), (1, M, q - p)]));
            }
        }
        GroupCase::Sp { n } => {
            for k in 0..=n {
                add(format!("k={k}"), hvec(&[(1, k), (-1, n - k)]), "0 ≤ k ≤ n", tab(&[(2, P, k), (2, M, n - k)]));
            }
        }
        GroupCase::SoStar { n } => {
            // Rows of the quaternionic diagram are drawn once per pair.
            let top = if n % 2 == 0 { n } else { n - 1 };
            for p in (0..=top).step_by(2) {
                let (h, t) = if n % 2 == 0 {
                    (hvec(&[(1, p), (-1, n - p)]), tab(&[(2, P, p / 2), (2, M, (n - p) / 2)]))
                } else {
                    (hvec(&[(1, p), (0, 1), (-1, n - 1 - p)]), tab(&[(2, P, p / 2), (2, M, (n - 1 - p) / 2), (1, P, 1)]))
                };
                add(format!("p={p}"), h, "p even", t);
            }
        }
        GroupCase::SoOdd { p, q } | GroupCase::SoEven { p, q } => {
            let odd = matches!(case, GroupCase::SoOdd { .. });
            let ones = if odd { 2 * (q + 1 - p) } else { 2 * (q - p) + 1 };
            let t1 = tab(&[(3, P, 1), (2, P, p - 1), (2, M, p - 1), (1, M, ones)]);
            let h1 = hvec(&[(2, 1), (1, p - 1), (1, p - 1), (0, q + 1 - p)]);
            add("h1^I".into(), h1.clone(), "always", t1.clone());
            add("h1^II".into(), h1.with_negated(p - 1), "always", t1);
            if q >= p {
                let t3 = tab(&[(3, M, 1), (2, P, p - 1), (2, M, p - 1), (1, P, 1), (1, M, ones - 1)]);
                let h3 = hvec(&[(1, p - 1), (0, 1), (2, 1), (1, p - 1), (0, q - p)]);
                let label = if odd { "h2" } else { "h2^I" };
                let cond = if odd { "q > p-1" } else { "always" };
                add(label.into(), h3.clone(), cond, t3.clone());
                if !odd && q == p {
                    add("h2^II".into(), h3.with_negated(p + q - 1), "q = p", t3);
                }
            }
        }
    }
    Ok(out)
}

pub fn real_form(case: &GroupCase, index: usize) -> Result<RealForm> {
    let forms = real_forms(case)?;
    let count = forms.len();
    forms.into_iter().nth(index.wrapping_sub(1)).ok_or(Error::NoSuchForm { index, count })
}

/// h of a signed tableau for so(2p, 2q+1) (type B) or so(2p, 2q) (type D):
/// the H-eigenvalues on the "+" boxes give the first block, those on the
/// "−" boxes the second; each block keeps the nonnegative half, sorted.
pub fn h_from_signed_tableau(lie: LieType, t: &SignedTableau, p: usize, q: usize) -> Result<Weight> {
    let minus_size = match lie {
        LieType::B => 2 * q + 1,
        LieType::D => 2 * q,
        _ => return Err(Error::MalformedTableau("only types B and D carry this recipe".into())),
    };
    let lens: Vec<usize> = t.rows.iter().map(|r| r.len).collect();
    if lens.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::MalformedTableau("row lengths must be non-increasing".into()));
    }
    if !validate_partition(lie, &lens, 2 * p + minus_size) {
        return Err(Error::MalformedTableau(format!("shape {lens:?} is not an orbit of this type")));
    }
    let (mut plus, mut minus) = (Vec::new(), Vec::new());
    for row in &t.rows {
        let mut s = row.start;
        for k in 0..row.len {
            let ev = row.len as i64 - 1 - 2 * k as i64;
            match s {
                Sign::Plus => plus.push(ev),
                Sign::Minus => minus.push(ev),
            }
            s = s.flip();
        }
    }
    if plus.len() != 2 * p || minus.len() != minus_size {
        return Err(Error::MalformedTableau(format!(
            "expected {} '+' and {} '-' boxes, found {} and {}",
            2 * p,
            minus_size,
            plus.len(),
            minus.len()
        )));
    }
    let half = |mut v: Vec<i64>, keep: usize| -> Result<Vec<i64>> {
        v.sort_unstable_by(|a, b| b.cmp(a));
        let mirrored: Vec<i64> = v.iter().rev().map(|x| -x).collect();
        if v != mirrored {
            return Err(Error::MalformedTableau("eigenvalues of a sign class are not symmetric".into()));
        }
        v.truncate(keep);
        Ok(v)
    };
    let mut h = half(plus, p)?;
    h.extend(half(minus, q)?);
    Ok(Weight::from_ints(&h))
}
