//! Polytope data model: vertices in, facets, adjacency and vertex cones out.

pub mod cone;
pub mod hrep;
pub mod polytope;
pub mod vector;

pub use cone::{enumerate_shifted_parallelepiped, VertexCone};
pub use hrep::{contains, facets_from_vertices, vertices_from_facets, HRepresentation, Inequality, Membership};
pub use polytope::{adjacency_from_facets, build_vertex_cones, Coordinate, Polytope, PolytopeFile};
pub use vector::{primitive_direction, IntegerVector, RationalVector};
