//! Scalar abstractions. The lattice side works over any signed integer type,
//! the linear-algebra side over any field-like type with exact equality;
//! the crate root pins the default instantiations.

use num_integer::{Integer, Roots};
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};
use std::fmt::{Debug, Display};
use std::ops::Neg;

/// Signed integer scalar for Mukai-lattice arithmetic. Implemented by `i64`,
/// `i128` and `num_bigint::BigInt`.
pub trait IntScalar:
    Integer + Roots + Signed + FromPrimitive + ToPrimitive + Clone + Debug + Display
{
}

impl<T> IntScalar for T where
    T: Integer + Roots + Signed + FromPrimitive + ToPrimitive + Clone + Debug + Display
{
}

/// Field-like scalar for Gaussian elimination. Implemented by the exact
/// rationals as well as `f32`/`f64`; the verification suites only ever
/// instantiate it at exact rationals.
pub trait FieldScalar:
    Num + Neg<Output = Self> + FromPrimitive + Clone + Debug + Display + PartialEq
{
}

impl<T> FieldScalar for T where
    T: Num + Neg<Output = T> + FromPrimitive + Clone + Debug + Display + PartialEq
{
}

/// Shorthand for converting small literals into a generic integer scalar.
pub fn int<T: IntScalar>(x: i64) -> T {
    T::from_i64(x).expect("i64 embeds into every integer scalar")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::{BigRational, Ratio};

    fn assert_int_scalar<T: IntScalar>() {}
    fn assert_field_scalar<T: FieldScalar>() {}

    #[test]
    fn default_scalars_satisfy_bounds() {
        assert_int_scalar::<i64>();
        assert_int_scalar::<i128>();
        assert_int_scalar::<BigInt>();
        assert_field_scalar::<f32>();
        assert_field_scalar::<f64>();
        assert_field_scalar::<BigRational>();
        assert_field_scalar::<Ratio<i128>>();
    }

    #[test]
    fn int_embeds_literals() {
        assert_eq!(int::<BigInt>(-7), BigInt::from(-7));
        assert_eq!(int::<i64>(42), 42);
    }
}
