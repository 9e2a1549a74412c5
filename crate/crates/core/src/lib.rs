//! Simulation toolkit for Rydberg-atom annealing on maximum-independent-set
//! instances: graphs, the blockade Hamiltonian, full state-vector dynamics,
//! the short-time walk on the median graph, and Magnus-expansion leakage
//! bounds.

pub mod bounds;
pub mod dynamics;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod hilbert;
pub mod median;
pub mod seed;
pub mod state;

pub use dynamics::{evolve_full, evolve_full_with, EvolutionResult, EvolveOptions};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use hilbert::{AnnealParams, Schedule};
pub use state::StateVector;
