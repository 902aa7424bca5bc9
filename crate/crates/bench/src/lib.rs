//! Criterion benchmarks for `symfun`; see `benches/engine.rs`.
