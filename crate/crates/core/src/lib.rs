//! Combinatorial thermodynamics of finite bit strings.
//!
//! A bit string is a thermodynamic system: each bit is a two-level degree of
//! freedom, the number of 1s is the total energy, and the fraction of 1s
//! drives the temperature. Everything here is exact counting — no physical
//! units, no continuum limits. The crate provides:
//!
//! - [`BitString`] / [`Macrostate`] microstate and macrostate types, seeded
//!   reservoir generation, and exact combinatorial arithmetic ([`binom`]);
//! - binary entropy, statistical temperature, and two-level occupancy
//!   ([`entropy`], [`temperature`]);
//! - computable description-length estimators standing in for Kolmogorov
//!   complexity, and the structural temperature built on them
//!   ([`complexity`]);
//! - conservation (first law) and reversibility (second law) checks on
//!   explicit transformation tables, macrostate feasibility by counting, and
//!   a Carnot engine with exact and asymptotic efficiency ([`transform`],
//!   [`carnot`]);
//! - thermal-equilibrium detection for strings and pairs, and zeroth-law
//!   transitivity experiments ([`equilibrium`]).
//!
//! The crate is `no_std` (alloc required); all operations are pure functions
//! of their inputs and an explicit [`Seed`], so results are reproducible
//! bit-for-bit and safe to evaluate from any number of threads.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod binom;
pub mod bits;
pub mod carnot;
pub mod complexity;
pub mod entropy;
pub mod equilibrium;
pub mod rng;
pub mod temperature;
pub mod transform;

pub use bits::{BitString, Macrostate};
pub use rng::Seed;
