//! The matrix Lie algebra `gl_n` and its tensor powers.

mod action;
mod element;
mod families;
pub mod json;
mod tensor;

pub use action::{ad_three, ad_two, conj_element, conj_three, conj_two};
pub use element::{bracket, linear_combination, GlElement, Pos};
pub use families::{d_ell, ecal, eta, xi};
pub use tensor::{sl_membership, sum_two, wedge, wedge_scaled, Key2, Key3, ThreeTensor, TwoTensor};
pub(crate) use element::check_dims;
pub(crate) use tensor::Accumulator;
