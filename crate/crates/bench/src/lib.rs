//! Criterion benchmarks for binet-core; see `benches/`.
