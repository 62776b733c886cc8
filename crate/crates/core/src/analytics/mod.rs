//! Closed-form approximations of the average entropy and the fitting
//! utilities used by the experiment drivers. Entropies are in bits except
//! [`conditioned_entropy`], which stays in nats.

mod approx;
mod fit;

pub use approx::{binomial_weights, conditioned_entropy, d_approx, page_value, t_approx, PAGE_OFFSET};
pub use fit::{fit_quadratic, ols_fit, quadratic_peak, FitResult, Peak, Quadratic};
