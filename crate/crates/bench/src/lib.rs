//! Benchmark-only crate; see `benches/family.rs`.
