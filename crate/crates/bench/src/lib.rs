//! Benchmarks for nplab live in `benches/`.
