//! Finite commutative rings and their regularity.
//!
//! The crate builds concrete finite rings (`Z/n`, direct products, polynomial
//! quotients `R[x]/(f)` with monic `f`, and trivial extensions `A ⋉ E` by
//! finite modules), computes their idempotent structure, and decides von
//! Neumann regularity (VNR) and weak von Neumann regularity (WVNR) by several
//! independent routes that can be cross-checked against each other.
//!
//! Every ring element has a dense index in `0..size`; all arithmetic and all
//! set-valued structure (ideals, caches) is expressed over those indices.

pub mod constructions;
pub mod deciders;
mod error;
pub mod expr;
pub mod harness;
pub mod ideals;
pub mod report;
pub mod ring;

pub use constructions::{
    make_module, make_poly_quotient, make_product, make_trivial_extension, make_zmod,
    CyclicSpec, FiniteModule, ModuleSpec, RingDescriptor,
};
pub use deciders::{Verdict, VerdictMethod, Witness};
pub use error::RingError;
pub use ideals::Ideal;
pub use ring::{check_ring_axioms, AxiomReport, Element, FiniteRing, ModuleElement, StructureCache};

/// Default hard cap on the carrier size of any constructed ring or module.
pub const DEFAULT_SIZE_CAP: usize = 4096;

/// Default cap for the brute-force ideal oracles (definitional and summand).
pub const DEFAULT_ORACLE_CAP: usize = 256;

/// Oracle cap used when the oracles are forced on a ring above the default cap.
pub const FORCED_ORACLE_CAP: usize = 1024;

/// Environment variable that overrides [`DEFAULT_SIZE_CAP`].
pub const SIZE_CAP_ENV: &str = "RING_MAX_SIZE";

/// The size cap in effect: `RING_MAX_SIZE` when set to a positive integer,
/// [`DEFAULT_SIZE_CAP`] otherwise.
pub fn size_cap_from_env() -> usize {
    std::env::var(SIZE_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_SIZE_CAP)
}
