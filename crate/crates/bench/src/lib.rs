//! Criterion benchmarks for `dsc-core`; see `benches/`.
