pub mod cli;
pub mod cyclo;
pub mod error;
pub mod groups;
pub mod invol;
pub mod liegrad;
pub mod matalg;
