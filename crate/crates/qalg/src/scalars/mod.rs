//! Exact scalar arithmetic: big rationals and truncated bivariate series
//! in the deformation parameter `tau` and the contraction parameter `eps`.

mod rational;
mod series;

pub use rational::Rational;
pub use series::{term_display as series_term_display, EpsDivergence, ScalarError, ScalarSeries};
