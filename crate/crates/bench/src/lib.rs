//! Criterion benchmarks for enumeration, complex construction and the
//! hyperplane checks. Run them with `cargo bench -p cactus-bench`.
