//! Simulated blockchain clock.
