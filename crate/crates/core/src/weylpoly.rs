// SPDX-License-Identifier: Apache-2.0
//! Weyl dimension polynomials, evaluated pointwise over exact rationals.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{half_sum, pair, Rational, Root, Weight};

/// λ ↦ ∏ ⟨λ,α⟩/⟨ρ',α⟩ over a positive system, ρ' its half sum.
#[derive(Clone, Debug)]
pub struct DimPoly {
    rank: usize,
    roots: Vec<Root>,
    rho: Weight,
    denominators: Vec<Rational>,
}

impl DimPoly {
    pub fn new(roots: &[Root], rank: usize) -> Result<Self> {
        if let Some(r) = roots.iter().find(|r| r.rank() != rank) {
            return Err(Error::LengthMismatch { expected: rank, got: r.rank() });
        }
        let rho = half_sum(roots, rank);
        let denominators = roots.iter().map(|a| pair(&rho, a)).collect::<Result<Vec<_>>>()?;
        if denominators.iter().any(Zero::is_zero) {
            return Err(Error::ZeroDenominator);
        }
        Ok(DimPoly { rank, roots: roots.to_vec(), rho, denominators })
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn denominators(&self) -> &[Rational] {
        &self.denominators
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// Product of all denominators ⟨ρ',α⟩.
    pub fn denominator_product(&self) -> Rational {
        self.denominators.iter().fold(Rational::one(), |acc, d| acc * d)
    }

    pub fn eval(&self, lambda: &Weight) -> Result<Rational> {
        if lambda.len() != self.rank {
            return Err(Error::LengthMismatch { expected: self.rank, got: lambda.len() });
        }
        let mut acc = Rational::one();
        for (a, d) in self.roots.iter().zip(&self.denominators) {
            let v = pair(lambda, a)?;
            if v.is_zero() {
                return Ok(Rational::zero());
            }
            acc *= v / d;
        }
        Ok(acc)
    }
}

pub fn make_dim_poly(roots: &[Root], rank: usize) -> Result<DimPoly> {
    DimPoly::new(roots, rank)
}

pub fn eval_dim_poly(p: &DimPoly, lambda: &Weight) -> Result<Rational> {
    p.eval(lambda)
}
