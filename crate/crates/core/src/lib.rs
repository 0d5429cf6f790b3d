pub mod cli;
pub mod domain;
pub mod error;
pub mod gaussian;
pub mod ideal;
pub mod oracle;
pub mod ore;
pub mod poly;
pub mod prime;
pub mod scalar;
pub mod text;
