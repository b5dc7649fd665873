//! Shape-invariant rational extensions of the radial oscillator and the
//! trigonometric Darboux-Pöschl-Teller potential.
//!
//! The crate builds extended superpotentials `w̃ = w₀ + φ` by isospectral
//! shift deformation, evaluates the associated exceptional Laguerre
//! polynomials in closed form, and certifies every identity numerically with
//! an independent finite-difference bound-state solver.

pub mod catalog;
pub mod cli;
pub mod deform;
pub mod eop;
pub mod error;
pub mod function;
pub mod jet;
pub mod polyengine;
pub mod quadrature;
pub mod spectral;

pub use catalog::{Branch, Family, RadialOscillator, SusyKind, TrigDpt};
pub use deform::{Deformation, ExtensionPair, Process};
pub use eop::{EopSpec, Series, WeightSpec};
pub use error::{Error, Result};
pub use function::{Function1D, Interval};
pub use jet::Jet;
pub use polyengine::{JacobiSpec, LaguerreSpec, ZeroReport};
pub use spectral::{Grid, SpectralReport};
