pub mod banded;
pub mod braid;
pub mod generators;
pub mod group;
pub mod linkdiag;
pub mod moves;
pub mod render;
pub mod surface;
pub mod triplane;
