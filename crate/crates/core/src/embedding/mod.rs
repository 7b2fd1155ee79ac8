//! Orientable embeddings: rotation systems, exact genus and the
//! two-terminal parameters.

mod engine;
mod planarity;
mod profile;
mod rotation;
mod search;

pub use engine::{
    alternating_face_certificate, default_engine, embeds_in, epsilon, min_genus, parameter_profile,
    two_sum_from_profiles, two_sum_genus, AlternatingCertificate, Engine, TwoSum,
};
pub use planarity::is_planar;
pub use profile::{eta, ParameterProfile};
pub use rotation::{embedding_genus, trace_faces, Dart, FaceWalk, RotationSystem};
