//! Forgery-game harness.
