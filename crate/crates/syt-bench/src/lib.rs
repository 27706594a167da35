//! Placeholder; benches live in benches/.
