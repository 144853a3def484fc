//! Two small presentations of representation categories turned into GIT
//! problems: the cyclic groups (toric, see [`toric`]) and `S₃` (see [`s3`]).

pub mod s3;
pub mod toric;
