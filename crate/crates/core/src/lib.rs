//! Exact verification engine for a characteristic-2 Enriques surface covered
//! by the supersingular K3 surface with Artin invariant 1.
//!
//! Bottom layer: [`field`], [`poly`], [`ratfun`], [`intmat`]. On top of it the
//! plane geometry over GF(4) ([`plane`]), the Néron–Severi model and its
//! Enriques quotient ([`ns`]), Sylvester's duads and synthemes
//! ([`sylvester`]), weighted graph isomorphism ([`graph`]), the reflection
//! group criterion ([`vinberg`]), the symbolic char-2 checks ([`char2`]) and
//! the report runner ([`report`]).

pub mod char2;
pub mod error;
pub mod field;
pub mod graph;
pub mod intmat;
pub mod ns;
pub mod plane;
pub mod poly;
pub mod ratfun;
pub mod report;
pub mod sylvester;
pub mod vinberg;

pub use error::{Error, Result};
