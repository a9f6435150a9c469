//! Time-bound Schnorr signatures over a pluggable prime-order group, plus the
//! machinery needed to exercise them end to end: a deterministic blockchain
//! simulator that uses block height as the clock, a forgery-game harness with
//! a programmable random oracle and rewinding, and a Stackelberg fee-market
//! model quantifying how expiring signatures change producer incentives.

pub mod challenge;
pub mod chain;
pub mod game;
pub mod group;
pub mod harness;
pub mod sig;

pub use group::{CurveGroup, Group, GroupError, ToyGroup};
pub use sig::{KeyPair, TimeBoundSignature, VanillaSignature};
