// SPDX-License-Identifier: Apache-2.0
//! Classical root systems in ε-coordinates, with the standard positive
//! systems and the compact/noncompact split of each real group.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `a/b`, or just `a` when the denominator is one.
pub fn fmt_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a = BigInt::from_str(a.trim()).ok()?;
            let b = BigInt::from_str(b.trim()).ok()?;
            if b.is_zero() {
                return None;
            }
            Some(Rational::new(a, b))
        }
        None => BigInt::from_str(s).ok().map(Rational::from_integer),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Su,
    SoOdd,
    Sp,
    SoEven,
    SoStar,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::Su, Family::SoOdd, Family::Sp, Family::SoEven, Family::SoStar];

    pub fn name(self) -> &'static str {
        match self {
            Family::Su => "su",
            Family::SoOdd => "so-odd",
            Family::Sp => "sp",
            Family::SoEven => "so-even",
            Family::SoStar => "so-star",
        }
    }

    pub fn lie_type(self) -> LieType {
        match self {
            Family::Su => LieType::A,
            Family::SoOdd => LieType::B,
            Family::Sp => LieType::C,
            Family::SoEven | Family::SoStar => LieType::D,
        }
    }

    /// Families parametrized by a pair (p, q) rather than a single n.
    pub fn uses_pq(self) -> bool {
        matches!(self, Family::Su | Family::SoOdd | Family::SoEven)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidCase(format!("unknown family '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieType {
    A,
    B,
    C,
    D,
}

/// One of the five equal-rank classical families with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupCase {
    Su { p: usize, q: usize },
    SoOdd { p: usize, q: usize },
    Sp { n: usize },
    SoEven { p: usize, q: usize },
    SoStar { n: usize },
}

impl GroupCase {
    pub fn su(p: usize, q: usize) -> Result<Self> {
        Self::checked(GroupCase::Su { p, q })
    }
    pub fn so_odd(p: usize, q: usize) -> Result<Self> {
        Self::checked(GroupCase::SoOdd { p, q })
    }
    pub fn sp(n: usize) -> Result<Self> {
        Self::checked(GroupCase::Sp { n })
    }
    pub fn so_even(p: usize, q: usize) -> Result<Self> {
        Self::checked(GroupCase::SoEven { p, q })
    }
    pub fn so_star(n: usize) -> Result<Self> {
        Self::checked(GroupCase::SoStar { n })
    }

    /// Build from a family and loose parameters (as given on a command line).
    pub fn from_parts(family: Family, p: Option<usize>, q: Option<usize>, n: Option<usize>) -> Result<Self> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| Error::InvalidCase(format!("{family} requires --{name}")))
        };
        if family.uses_pq() {
            if n.is_some() {
                return Err(Error::InvalidCase(format!("{family} takes --p/--q, not --n")));
            }
            let (p, q) = (need(p, "p")?, need(q, "q")?);
            match family {
                Family::Su => Self::su(p, q),
                Family::SoOdd => Self::so_odd(p, q),
                _ => Self::so_even(p, q),
            }
        } else {
            if p.is_some() || q.is_some() {
                return Err(Error::InvalidCase(format!("{family} takes --n, not --p/--q")));
            }
            let n = need(n, "n")?;
            if family == Family::Sp {
                Self::sp(n)
            } else {
                Self::so_star(n)
            }
        }
    }

    fn checked(self) -> Result<Self> {
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            GroupCase::Su { p, q } | GroupCase::SoEven { p, q } => q >= p && p >= 1,
            GroupCase::SoOdd { p, q } => p >= 1 && q + 1 >= p,
            GroupCase::Sp { n } | GroupCase::SoStar { n } => n >= 1,
        };
        if ok {
            Ok(())
        } else {
            let rule = match self.family() {
                Family::Su | Family::SoEven => "q ≥ p ≥ 1",
                Family::SoOdd => "q ≥ p−1 ≥ 0",
                _ => "n ≥ 1",
            };
            Err(Error::InvalidCase(format!("{self} violates {rule}")))
        }
    }

    pub fn family(&self) -> Family {
        match self {
            GroupCase::Su { .. } => Family::Su,
            GroupCase::SoOdd { .. } => Family::SoOdd,
            GroupCase::Sp { .. } => Family::Sp,
            GroupCase::SoEven { .. } => Family::SoEven,
            GroupCase::SoStar { .. } => Family::SoStar,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.family().lie_type()
    }

    pub fn rank(&self) -> usize {
        match *self {
            GroupCase::Su { p, q } | GroupCase::SoOdd { p, q } | GroupCase::SoEven { p, q } => p + q,
            GroupCase::Sp { n } | GroupCase::SoStar { n } => n,
        }
    }

    pub fn params(&self) -> Vec<(&'static str, usize)> {
        match *self {
            GroupCase::Su { p, q } | GroupCase::SoOdd { p, q } | GroupCase::SoEven { p, q } => {
                vec![("p", p), ("q", q)]
            }
            GroupCase::Sp { n } | GroupCase::SoStar { n } => vec![("n", n)],
        }
    }

    /// Real-group name, e.g. `SO_e(4,5)`.
    pub fn group_name(&self) -> String {
        match *self {
            GroupCase::Su { p, q } => format!("SU({p},{q})"),
            GroupCase::SoOdd { p, q } => format!("SO_e({},{})", 2 * p, 2 * q + 1),
            GroupCase::Sp { n } => format!("Sp({},R)", 2 * n),
            GroupCase::SoEven { p, q } => format!("SO_e({},{})", 2 * p, 2 * q),
            GroupCase::SoStar { n } => format!("SO*({})", 2 * n),
        }
    }
}

impl fmt::Display for GroupCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.group_name())
    }
}

/// A root as an integer ε-coordinate vector with at most two nonzero entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Box<[i8]>);

impl Root {
    pub fn new(coeffs: Vec<i8>) -> Result<Self> {
        let nz: Vec<i8> = coeffs.iter().copied().filter(|&c| c != 0).collect();
        let shape_ok = match nz.as_slice() {
            [c] => matches!(c, 1 | 2 | -1 | -2),
            [a, b] => a.abs() == 1 && b.abs() == 1,
            _ => false,
        };
        if !shape_ok {
            return Err(Error::InvalidCase(format!("{coeffs:?} is not a root shape")));
        }
        Ok(Root(coeffs.into_boxed_slice()))
    }

    fn with(rank: usize, entries: &[(usize, i8)]) -> Root {
        let mut v = vec![0i8; rank];
        for &(i, c) in entries {
            v[i] += c;
        }
        Root(v.into_boxed_slice())
    }

    /// ε_i − ε_j (0-based indices).
    pub fn diff(rank: usize, i: usize, j: usize) -> Root {
        Root::with(rank, &[(i, 1), (j, -1)])
    }

    /// ε_i + ε_j (0-based indices).
    pub fn sum(rank: usize, i: usize, j: usize) -> Root {
        Root::with(rank, &[(i, 1), (j, 1)])
    }

    /// c·ε_k with c ∈ {±1, ±2}.
    pub fn unit(rank: usize, k: usize, c: i8) -> Root {
        Root::with(rank, &[(k, c)])
    }

    pub fn coeffs(&self) -> &[i8] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// Positive for the standard systems of types A–D iff the first nonzero entry is.
    pub fn is_positive(&self) -> bool {
        self.0.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, i8)> + '_ {
        self.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c))
    }

    pub fn is_short(&self) -> bool {
        self.support().count() == 1 && self.0.iter().any(|c| c.abs() == 1)
    }

    pub fn is_long_unit(&self) -> bool {
        self.0.iter().any(|c| c.abs() == 2)
    }

    /// Integer pairing with an integer vector.
    pub fn pair_int(&self, v: &[i64]) -> i64 {
        self.support().map(|(i, c)| c as i64 * v[i]).sum()
    }

    /// Image under a signed permutation.
    pub fn permuted(&self, sigma: &SignedPerm) -> Root {
        let mut v = vec![0i8; self.rank()];
        for (i, c) in self.support() {
            v[sigma.perm[i]] += c * sigma.signs[i];
        }
        Root(v.into_boxed_slice())
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.support() {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = if c.abs() == 2 { "2" } else { "" };
            write!(f, "{sign}{mag}e{}", i + 1)?;
            first = false;
        }
        Ok(())
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

impl<'de> Deserialize<'de> for Root {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i8>::deserialize(d)?;
        Root::new(v).map_err(serde::de::Error::custom)
    }
}

/// A signed permutation of coordinates: `(σv)[perm[i]] = signs[i]·v[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPerm {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(rank: usize) -> Self {
        SignedPerm { perm: (0..rank).collect(), signs: vec![1; rank] }
    }

    /// Sign change of one coordinate (0-based).
    pub fn negate(rank: usize, k: usize) -> Self {
        let mut s = Self::identity(rank);
        s.signs[k] = -1;
        s
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        let mut out = vec![Rational::zero(); w.len()];
        for (i, x) in w.coords().iter().enumerate() {
            out[self.perm[i]] = if self.signs[i] < 0 { -x } else { x.clone() };
        }
        Weight::new(out)
    }
}

/// A rational ε-coordinate vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn zeros(rank: usize) -> Self {
        Weight(vec![Rational::zero(); rank])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight(v.iter().map(|&x| rat(x)).collect())
    }

    /// Each entry is `v[i]/2`.
    pub fn from_halves(v: &[i64]) -> Self {
        Weight(v.iter().map(|&x| ratio(x, 2)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn check_len(&self, other: usize) -> Result<()> {
        if self.len() == other {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: self.len(), got: other })
        }
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        self.check_len(other.len())?;
        Ok(Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &Weight) -> Result<Weight> {
        self.check_len(other.len())?;
        Ok(Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    /// `self + k·α`.
    pub fn add_root(&self, r: &Root, k: i64) -> Result<Weight> {
        self.check_len(r.rank())?;
        let mut out = self.0.clone();
        for (i, c) in r.support() {
            out[i] += rat(k * c as i64);
        }
        Ok(Weight(out))
    }

    pub fn with_negated(&self, k: usize) -> Weight {
        let mut out = self.0.clone();
        out[k] = -out[k].clone();
        Weight(out)
    }

    pub fn with_swapped(&self, i: usize, j: usize) -> Weight {
        let mut out = self.0.clone();
        out.swap(i, j);
        Weight(out)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    /// Integer entries as i64 (None if any entry is fractional or too big).
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|x| if x.is_integer() { i64::try_from(x.numer()).ok() } else { None })
            .collect()
    }

    /// Entries rendered as `a/b` strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(fmt_rational).collect()
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(fmt_rational))
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_rational(s).ok_or_else(|| serde::de::Error::custom(format!("bad rational '{s}'"))))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Weight)
    }
}

/// ⟨w, r⟩ for the Euclidean form on ε-coordinates.
pub fn pair(w: &Weight, r: &Root) -> Result<Rational> {
    w.check_len(r.rank())?;
    let mut acc = Rational::zero();
    for (i, c) in r.support() {
        acc += &w.0[i] * rat(c as i64);
    }
    Ok(acc)
}

/// Half the sum of `roots`; the zero weight for an empty set.
pub fn half_sum(roots: &[Root], rank: usize) -> Weight {
    Weight(sum_of(roots, rank).into_iter().map(|s| ratio(s, 2)).collect())
}

pub(crate) fn sum_of(roots: &[Root], rank: usize) -> Vec<i64> {
    let mut acc = vec![0i64; rank];
    for r in roots {
        for (i, c) in r.support() {
            acc[i] += c as i64;
        }
    }
    acc
}

/// The standard positive system of the given type on `rank` coordinates, canonically sorted.
pub fn positive_roots(lie: LieType, rank: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 0..rank {
        for j in i + 1..rank {
            out.push(Root::diff(rank, i, j));
            if lie != LieType::A {
                out.push(Root::sum(rank, i, j));
            }
        }
        match lie {
            LieType::B => out.push(Root::unit(rank, i, 1)),
            LieType::C => out.push(Root::unit(rank, i, 2)),
            _ => {}
        }
    }
    out.sort();
    out
}

/// Every root (both signs), canonically sorted.
pub fn all_roots(lie: LieType, rank: usize) -> Vec<Root> {
    let pos = positive_roots(lie, rank);
    let mut out: Vec<Root> = pos.iter().map(Root::neg).chain(pos.iter().cloned()).collect();
    out.sort();
    out
}

/// Compactness of a root (of either sign) for the family's Cartan decomposition.
pub fn is_compact(case: &GroupCase, r: &Root) -> bool {
    let block = |p: usize| {
        let mut sides = r.support().map(|(i, _)| i < p);
        let first = sides.next().unwrap_or(true);
        sides.all(|s| s == first)
    };
    match *case {
        GroupCase::Su { p, .. } | GroupCase::SoEven { p, .. } => block(p),
        GroupCase::SoOdd { p, .. } => {
            if r.is_short() {
                r.support().all(|(i, _)| i >= p)
            } else {
                block(p)
            }
        }
        // K = U(n): only the ε_i − ε_j roots are compact.
        GroupCase::Sp { .. } | GroupCase::SoStar { .. } => {
            let signs: Vec<i8> = r.support().map(|(_, c)| c.signum()).collect();
            signs.len() == 2 && signs[0] != signs[1]
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub case: GroupCase,
    pub positive: Vec<Root>,
    pub compact_positive: Vec<Root>,
    pub noncompact_positive: Vec<Root>,
    pub rho_c: Weight,
    /// ⟨ρ_c, α⟩ for each compact positive root, in order.
    pub denominators_pk: Vec<Rational>,
}

impl RootSystem {
    pub fn build(case: &GroupCase) -> Result<Self> {
        case.validate()?;
        let rank = case.rank();
        let positive = positive_roots(case.lie_type(), rank);
        let (compact_positive, noncompact_positive): (Vec<Root>, Vec<Root>) =
            positive.iter().cloned().partition(|r| is_compact(case, r));
        let rho_c = half_sum(&compact_positive, rank);
        let denominators_pk = compact_positive.iter().map(|a| pair(&rho_c, a)).collect::<Result<Vec<_>>>()?;
        debug_assert!(denominators_pk.iter().all(|d| d.is_positive()));
        Ok(RootSystem { case: *case, positive, compact_positive, noncompact_positive, rho_c, denominators_pk })
    }

    pub fn rank(&self) -> usize {
        self.case.rank()
    }

    pub fn all_roots(&self) -> Vec<Root> {
        all_roots(self.case.lie_type(), self.rank())
    }

    pub fn is_compact(&self, r: &Root) -> bool {
        is_compact(&self.case, r)
    }
}

/// Number of positive roots of the type on `rank` coordinates.
pub fn positive_count(lie: LieType, rank: usize) -> usize {
    match lie {
        LieType::A => rank * rank.saturating_sub(1) / 2,
        LieType::B | LieType::C => rank * rank,
        LieType::D => rank * rank.saturating_sub(1),
    }
}
