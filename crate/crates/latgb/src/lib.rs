//! Label codes of lattices: exact profiles, coset-leader tables, extended
//! complete reduced Groebner bases, and l1-nearest-point decoding.
//!
//! The pipeline: a rational basis is profiled exactly ([`profile`]), the
//! profile's parity check drives a coset-leader enumeration ([`table`]), the
//! table yields the extended complete reduced Groebner basis of the label
//! code ([`ecrgb`]), and the decoder ([`decode`]) quantizes a real target
//! onto the chain axes and lifts every l1-minimal label back to a lattice
//! point. Floats appear only at the decoder boundary.

pub mod decode;
pub mod ecrgb;
pub mod error;
pub mod group;
pub mod hnf;
pub mod order;
pub mod profile;
pub mod rational;
pub mod specfile;
pub mod syndrome;
pub mod table;
pub mod verify;

pub use decode::{decode, lift, nearest_labels, quantize, Candidate, Quantization, Rounding};
pub use ecrgb::{build_ecrgb, reduce_full, reduced_groebner_for_order, Binomial, Ecrgb};
pub use error::{Error, Result};
pub use group::{g_norm, l1_distance, GroupElement, GroupSpec, Monomial};
pub use order::TermOrder;
pub use profile::{Basis, GSData, LatticeProfile};
pub use syndrome::Syndrome;
pub use table::{build_coset_table, build_coset_table_traced, CosetRecord, CosetTable};
