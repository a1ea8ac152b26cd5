//! Benchmark-only crate; see `benches/cgc.rs`.
