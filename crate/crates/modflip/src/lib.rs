//! Triangulations of one-holed surfaces and the geometry of their modular
//! flip-graphs.
//!
//! The library provides:
//!
//! - [`surface`]: the core triangulation value type (oriented triangle
//!   gluings with labelled boundary marked points), validation, and corner
//!   walks;
//! - [`flip`]: the flip operation and neighbor enumeration;
//! - [`canon`]: canonical codes deciding equality up to label-fixing
//!   homeomorphisms;
//! - [`families`]: zigzags, fans, the lower-bound witness families
//!   `A_n^-` / `A_n^+`, vertex deletion, and ears;
//! - [`topology`]: cutting along arc systems, boundary-parallel tests, and
//!   cut-system discovery;
//! - [`explorer`]: breadth-first enumeration of modular flip-graphs with
//!   exact distances, diameters, and geodesic enumeration;
//! - [`transformer`]: a constructive flip sequence between any two
//!   triangulations with certified length bounds;
//! - [`oracle`]: independent reference implementations used for
//!   cross-validation;
//! - [`io`]: file formats and graph exports;
//! - [`harness`]: the experiment drivers behind the command-line tool.

pub mod canon;
pub mod explorer;
pub mod families;
pub mod flip;
pub mod harness;
pub mod io;
pub mod oracle;
pub mod surface;
pub mod topology;
pub mod transformer;

pub use canon::{canonical_code, equivalent, CanonicalCode, MirrorPolicy};
pub use families::{a_minus, a_plus, delete_vertex, fan, has_ear, zigzag, FamilySpec};
pub use flip::{flip, flippable, neighbors, FlipPath};
pub use surface::{
    boundary_cycles, corner_walk, validate, ArcId, Side, SideRef, SurfaceClass, Triangulation,
    TriangulationData,
};
