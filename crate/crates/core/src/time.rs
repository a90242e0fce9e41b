use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::PrimInt;
use serde::Serialize;

/// Integer type usable as a timestamp.
///
/// Timestamps must compare exactly, so only primitive integers qualify. The
/// maximum value of the type is reserved as the "never visited" sentinel for
/// visit times and is rejected by the loader.
pub trait Time:
    PrimInt + Hash + Debug + Display + Serialize + Send + Sync + 'static
{
    /// Sentinel standing in for an infinite visit time.
    #[inline]
    fn sentinel() -> Self {
        Self::max_value()
    }

    #[inline]
    fn is_sentinel(self) -> bool {
        self == Self::max_value()
    }
}

impl<T> Time for T where T: PrimInt + Hash + Debug + Display + Serialize + Send + Sync + 'static {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sentinel_is_type_max() {
        assert_eq!(<i64 as Time>::sentinel(), i64::MAX);
        assert_eq!(<i32 as Time>::sentinel(), i32::MAX);
        assert!(u32::MAX.is_sentinel());
        assert!(!0i64.is_sentinel());
    }
}
