//! Standard-library companion to `fbsolve-core`: instance file formats,
//! seeded generators, the benchmark harness, and the CLI plumbing.

#![forbid(unsafe_code)]

pub mod bench;
pub mod gen;
pub mod io;
pub mod prng;

/// Oracle vertex cap from the environment (`FBSOLVE_MAX_ORACLE_N`),
/// falling back to the library default.
pub fn oracle_cap_from_env() -> usize {
    std::env::var("FBSOLVE_MAX_ORACLE_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(fbsolve_core::oracle::DEFAULT_ORACLE_CAP)
}
