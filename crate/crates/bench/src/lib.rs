//! Criterion benchmarks for the geoflow kernels; see `benches/`.
