//! Generators for every DDG family and ingredient graph used here.

mod design;
mod families;
mod gamma;
mod hadamard;
mod srg;

use thiserror::Error;

use crate::analysis::{AnalysisError, DdgParams};
use crate::graph::{Graph, GraphError};
use crate::linalg::LinalgError;

pub use design::{construction1, Design};
pub use families::{construction2, construction3, construction4};
pub use gamma::{
    block_census, gamma_family, Census, ClosedForms, GammaFamily, MatrixCensus, PairCountClass, PairCounts,
    RowCountClass, RowRelation, Symbol, SymbolMatrix,
};
pub use hadamard::{construction6, hadamard_tower, HadamardMatrix};
pub use srg::{
    lattice, lattice_complement, paley, petersen, srg_by_name, srg_parameters, triangular, vkl_parameters, SrgParams,
    SRG_NAMES,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("not a symmetric 2-design: {0}")]
    NotSymmetricDesign(String),
    #[error("design file: {0}")]
    DesignParse(String),
    #[error("ingredient is not a (v, k, λ)-graph (common-neighbour counts vary)")]
    NotVklGraph,
    #[error("ingredient graph is disconnected")]
    Disconnected,
    #[error("ingredients have different parameters: {0:?} vs {1:?}")]
    ParameterMismatch((usize, usize, usize), (usize, usize, usize)),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not a strongly regular graph with μ = λ + 1")]
    NotSrgMuLambdaPlusOne,
    #[error("not a Hadamard matrix: {0}")]
    NotHadamard(String),
    #[error("not a regular graphical Hadamard matrix with positive row sum and order l²: {0}")]
    NotRegularGraphicalHadamard(String),
    #[error("Hadamard diagonal must be −1, found {0}")]
    WrongDiagonalSign(i64),
    #[error("order {0} exceeds the size cap")]
    SizeOverflow(usize),
    #[error("bad order for {family}: {reason}")]
    BadOrder { family: &'static str, reason: String },
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("the two constructions of Γ^{0} disagree")]
    CrossCheckMismatch(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

/// A generated graph together with the parameters its construction predicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuiltDdg {
    pub graph: Graph,
    pub params: DdgParams,
}
