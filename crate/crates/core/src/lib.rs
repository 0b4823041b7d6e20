pub mod hyperfield;
pub mod phased;
pub mod poset;
pub mod complex;
pub mod homology;
pub mod models;
pub mod mccord;
pub mod cli;
