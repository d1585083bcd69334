//! Exact verification toolkit for geometric infinite-descent proofs of
//! irrationality.
//!
//! The toolkit treats the classical overlapping-polygon arguments for the
//! irrationality of √2, √3, √5, √6 and of square roots of triangular
//! numbers as checkable computational objects:
//!
//! * [`descent`] — the descent steps as exact integer linear maps on
//!   candidate solutions of `a² = k·b²`, with their form multipliers and
//!   shrink factors verified symbolically;
//! * [`exact`] — arbitrary-precision rationals and elements of real
//!   quadratic fields `Q(√m)`, used wherever a decision must be exact;
//! * [`geometry`] — convex polygons, regular n-gons, clipping, and the
//!   multiplicity accounting behind the area bookkeeping;
//! * [`constructions`] — builds each overlap figure from a candidate pair
//!   `(a, b)` and verifies its area identities, plus the exact pentagon
//!   angle chase and side computation;
//! * [`analysis`] — the triangular-number survey, the descent cutoff at
//!   `n = 4`, square-triangular detection, and brute-force search;
//! * [`render`] — deterministic SVG output of the figures with
//!   multiplicity shading.

pub mod analysis;
pub mod constructions;
pub mod descent;
pub mod exact;
pub mod geometry;
pub mod render;

pub use exact::{QuadExt, Rational};
