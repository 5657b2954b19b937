//! Exact arithmetic substrate: rationals, dense tensors, linear solving.

pub mod linalg;
pub mod linsolve;
pub mod rat;
pub mod tensor;
pub mod vector;

pub use linsolve::{solve_exact, LinearSystem, Parametric, Solution};
pub use rat::Rat;
pub use tensor::{Slot, Tensor, TensorError};
pub use vector::Vector;
