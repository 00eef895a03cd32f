pub mod check;
pub mod families;
pub mod matrix;
pub mod spectrum;
pub mod survey;
