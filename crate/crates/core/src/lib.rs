pub mod arith;
pub mod cover;
pub mod groebner;
pub mod linalg;
pub mod linsys;
pub mod poly;
pub mod scheme;
