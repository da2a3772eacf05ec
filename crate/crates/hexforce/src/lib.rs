//! Complete forcing sets and complete forcing numbers of hexagonal systems.
//!
//! A hexagonal system (HS) is a 2-connected plane graph whose interior faces
//! are unit hexagons — the carbon skeleton of a benzenoid hydrocarbon. A
//! complete forcing set is an edge set whose restriction to every perfect
//! matching (Kekulé structure) forces that matching; the minimum size of one
//! is the complete forcing number `cf`.
//!
//! The crate provides:
//! - [`hexgrid`]: a canonical integer-lattice representation of hexagonal
//!   systems, with vertex coloring, edge roles, the dual graph, and text
//!   formats;
//! - [`matchings`]: perfect-matching enumeration, general maximum matching,
//!   and forcing-set verification;
//! - [`forcing`]: nice cycles, frame-based and definitional complete-forcing
//!   verifiers, and exact minimum complete forcing sets;
//! - [`ecut`]: elementary edge cuts, e-cut covers, and the cut-based
//!   sufficiency pipeline with its parallel-class upper bound;
//! - [`bounds`]: fixed edges, normal components and additivity, and the two
//!   lower bounds (hexagon count and matching number);
//! - [`families`]: generators, explicit optimal constructions and closed-form
//!   evaluators for parallelogram, regular-hexagon and rectangle-shaped
//!   systems;
//! - [`render`]: SVG and DOT output.
//!
//! See the crate `examples/` directory for one runnable example per major
//! capability.

pub mod bounds;
pub mod ecut;
pub mod families;
pub mod forcing;
pub mod hexgrid;
pub mod matchings;
pub mod render;
