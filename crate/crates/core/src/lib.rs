// SPDX-License-Identifier: Apache-2.0
//! Exact constants c relating the Dirac index polynomial of a classical
//! equal-rank group to the associated-cycle multiplicities of its real forms.
//!
//! Each constant is computed two ways: by brute-force evaluation of the
//! defining alternating sum over subsets of roots, and from closed formulas.

pub mod constants;
mod engine;
pub mod error;
pub mod oracles;
pub mod orbits;
pub mod report;
pub mod rootsys;
pub mod weylpoly;

pub use error::{Error, Result};
pub use rootsys::{Family, GroupCase, LieType, Rational, Root, Weight};
