//! Exact counting and sign classification of cross-cap singularities.

pub mod rational;
pub mod monomial;
pub mod polynomial;
pub mod parser;
pub mod matrix;
pub mod groebner;
pub mod trace_form;
pub mod oracle;
pub mod engine;
pub mod cli;

pub use monomial::Monomial;
pub use polynomial::{Polynomial, PolynomialMap, Variables};
pub use rational::Rat;
pub use groebner::{reduced_groebner, GroebnerBasis, QuotientAlgebra};
pub use trace_form::{signature, trace_quadratic_form, Inertia, QMat, TraceForm};
