pub mod error;
pub mod partitions;
pub mod ratfun;
pub mod multipoly;
pub mod symfunc;
pub mod tableau;
pub mod cms;
pub mod linalg;
pub mod shifted;
pub mod deformed;
pub mod ideals;
pub mod verify;
pub mod cli;
