//! Decorated partition diagrams carrying handle and Moebius dots: exact
//! composition, sandwich cells, simple-module counts and Gram ranks.

pub mod algebra;
pub mod cells;
pub mod diagram;
pub mod error;
pub mod gram;
pub mod msmall;
pub mod params;
pub mod rational;
pub mod repcount;

pub use algebra::{compose, compose_diagrams, monoid_compose, EvalTable, LinComb};
pub use cells::{
    apex_set, cell_of, enumerate_half_diagrams, enumerate_members, find_strict_idempotent, ApexSet, CellCoords,
    GreensCells, HalfDiagram, ZeroPattern,
};
pub use diagram::{
    factorize, is_member, is_planar, parse_diagram, star, tensor, Block, Decoration, Diagram, Factorization, Family,
    NodeId, Side,
};
pub use error::{MoebiusError, Result};
pub use gram::{
    exact_rank, gram_matrix, gram_matrix_from_halves, gram_matrix_with, GramMatrix, GramOptions, GramOrdering,
    RankReport,
};
pub use msmall::{CayleyMonoid, MElem, WreathElem};
pub use params::{MonoidParams, ParamFile, ParamSet, PolyQ, SeriesKind};
pub use rational::Q;
pub use repcount::{FieldSpec, SimpleCountQuery};
