//! Criterion benchmarks for the core algebra and the region scanner.
//! See `benches/core_ops.rs`; this crate has no library code of its own.
