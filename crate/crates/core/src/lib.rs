//! Arbitrary-precision twisted L-values of base-change Bianchi modular forms
//! over class-number-1 imaginary quadratic fields, with numeric verification of
//! the complex and p-adic functional equations.
//!
//! Module map:
//! - [`quadfield`]: exact arithmetic in the nine class-number-1 imaginary
//!   quadratic fields (elements, principal ideals, splitting, residue systems,
//!   complex embeddings).
//! - [`hecke`]: algebraic Hecke characters, Gauss sums, and their locally
//!   algebraic `p`-fin / `sigma_p` realizations.
//! - [`classical`]: classical newform data (ingestion files, exact built-in
//!   q-expansions used for tests and data generation).
//! - [`bianchi`]: Fourier-coefficient engines for Bianchi forms: base change,
//!   Hecke recursion, p-stabilisation, Fourier-Whittaker terms.
//! - [`lfun`]: completed twisted L-values, epsilon factors, Fricke signs,
//!   functional-equation residuals, and the classical cross-check oracle.
//! - [`padic`]: fixed-precision p-adic arithmetic, Hensel roots of Hecke
//!   polynomials, slopes, Z-factors, Teichmuller algebra, and the decomposed
//!   p-adic functional-equation check.
//! - [`numeric`]: shared big-float kernels (modified Bessel K, Bessel moment
//!   integrals, tanh-sinh quadrature, special constants).

pub mod bianchi;
pub mod classical;
pub mod hecke;
pub mod lfun;
pub mod numeric;
pub mod padic;
pub mod quadfield;
