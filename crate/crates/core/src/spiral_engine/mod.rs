//! Spiral construction: triangles, angles, planar vertices, windings and the
//! centroid chain.
//!
//! Placement: the common vertex is the origin, the first spine lies on the
//! positive x axis and the spiral winds counterclockwise. Each new triangle
//! puts its right angle at the outer end of the previous hypotenuse.

mod geometry;
mod triangle;

pub use geometry::{
    centroid_chain, centroid_distances, geometry, windings_count, windings_count_with, Point2, SpiralGeometry,
    MAX_WINDING_TRIANGLES,
};
pub use triangle::{angle, tan_angle, triangle, Triangle};
