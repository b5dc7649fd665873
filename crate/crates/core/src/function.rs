//! Evaluable functions of one real variable with analytic derivatives.

use std::fmt;
use std::sync::Arc;

use crate::jet::Jet;

/// Open interval; `hi` may be `f64::INFINITY`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }

    pub fn contains(&self, x: f64) -> bool {
        x > self.lo && x < self.hi
    }

    /// `n` uniformly spaced interior points of `[lo, hi]` clipped to `cap`
    /// when the interval is unbounded.
    pub fn interior_points(&self, n: usize, cap: f64) -> Vec<f64> {
        let hi = if self.hi.is_finite() { self.hi } else { cap };
        let h = (hi - self.lo) / (n + 1) as f64;
        (1..=n).map(|i| self.lo + h * i as f64).collect()
    }
}

type JetFn = dyn Fn(Jet) -> Jet + Send + Sync;

/// A real function carried as a jet map: given the jet of the independent
/// variable it returns the jet of the function value. Immutable and cheap to
/// clone.
#[derive(Clone)]
pub struct Function1D {
    f: Arc<JetFn>,
    domain: Interval,
    singular_points: Vec<f64>,
}

impl fmt::Debug for Function1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Function1D")
            .field("domain", &self.domain)
            .field("singular_points", &self.singular_points)
            .finish()
    }
}

impl Function1D {
    pub fn new(domain: Interval, f: impl Fn(Jet) -> Jet + Send + Sync + 'static) -> Self {
        Self {
            f: Arc::new(f),
            domain,
            singular_points: Vec::new(),
        }
    }

    pub fn constant(domain: Interval, c: f64) -> Self {
        Self::new(domain, move |_| Jet::constant(c))
    }

    pub fn with_singular_points(mut self, mut points: Vec<f64>) -> Self {
        points.sort_by(f64::total_cmp);
        points.dedup();
        self.singular_points = points;
        self
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    pub fn singular_points(&self) -> &[f64] {
        &self.singular_points
    }

    /// Jet of the function at `x` (derivatives with respect to x).
    pub fn jet(&self, x: f64) -> Jet {
        (self.f)(Jet::variable(x))
    }

    /// Evaluate on an arbitrary inner jet (chain rule through the map).
    pub fn compose_jet(&self, inner: Jet) -> Jet {
        (self.f)(inner)
    }

    pub fn value(&self, x: f64) -> f64 {
        self.jet(x).value()
    }

    pub fn derivative(&self, x: f64) -> f64 {
        self.jet(x).d(1)
    }

    /// The derivative as a function in its own right.
    pub fn derivative_fn(&self) -> Function1D {
        let f = self.f.clone();
        Function1D {
            f: Arc::new(move |x| f(x).derivative_of(x)),
            domain: self.domain,
            singular_points: self.singular_points.clone(),
        }
    }

    /// Pointwise combination of two functions sharing a domain.
    pub fn zip_with(
        &self,
        other: &Function1D,
        op: impl Fn(Jet, Jet) -> Jet + Send + Sync + 'static,
    ) -> Function1D {
        let (f, g) = (self.f.clone(), other.f.clone());
        let mut sing = self.singular_points.clone();
        sing.extend_from_slice(&other.singular_points);
        Function1D::new(self.domain, move |x| op(f(x), g(x))).with_singular_points(sing)
    }

    pub fn map(&self, op: impl Fn(Jet) -> Jet + Send + Sync + 'static) -> Function1D {
        let f = self.f.clone();
        Function1D::new(self.domain, move |x| op(f(x))).with_singular_points(self.singular_points.clone())
    }

    /// Distance from `x` to the nearest recorded singular point.
    pub fn distance_to_singularity(&self, x: f64) -> f64 {
        self.singular_points
            .iter()
            .map(|p| (x - p).abs())
            .fold(f64::INFINITY, f64::min)
    }
}

impl Jet {
    /// Derivative of a composite whose inner variable jet is `x`. For the
    /// plain variable jet this is the slot shift; for a general inner jet it
    /// divides by dx/dt, which only occurs inside `derivative_fn` chains.
    fn derivative_of(self, x: Jet) -> Jet {
        if x.0[1] == 1.0 && x.0[2..].iter().all(|v| *v == 0.0) {
            self.derivative()
        } else {
            // d/dx f = (df/dt) / (dx/dt), expanded as a jet quotient.
            self.derivative() / x.derivative()
        }
    }
}
