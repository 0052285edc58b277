pub mod cli;
pub mod error;
pub mod mdiagram;
pub mod oracle;
pub mod svg;
pub mod tableau;
pub mod web;
pub mod web2;
pub mod web3;

pub use error::{Error, Result};
pub use tableau::{Cell, Shape, Tableau};
