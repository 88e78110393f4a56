/// Source of elapsed time for budgeted searches.
///
/// The core crate has no access to a system clock; callers with `std` pass
/// an `Instant`-backed implementation.
pub trait Clock {
    /// Seconds elapsed since the clock was started.
    fn elapsed_secs(&self) -> f64;
}

/// A clock that never advances. Searches driven by it are bounded only by
/// their node or extinction limits.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn elapsed_secs(&self) -> f64 {
        0.0
    }
}

impl<C: Clock + ?Sized> Clock for &C {
    fn elapsed_secs(&self) -> f64 {
        (**self).elapsed_secs()
    }
}
