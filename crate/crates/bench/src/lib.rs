//! Criterion benchmarks for gcflab live under `benches/`.
