//! Interchange formats: graph6, edge lists, and verification certificates.

pub mod certificate;
pub mod edgelist;
pub mod graph6;

pub use certificate::{emit_certificate, BoundCertificate, Format, Status, Verdict, Witness};
pub use edgelist::{from_edge_list, to_edge_list, EdgeListReader};
pub use graph6::{from_graph6, to_graph6};
