use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// More coefficients were supplied than the truncation order admits.
    LengthExceedsOrder { len: usize, order: usize },
    /// Binary series operation on two different truncation orders.
    OrderMismatch { left: usize, right: usize },
    /// Bivariate tables of different shapes.
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// The constant term is not `+1` or `-1`.
    NotInvertible,
    /// `(1;q)_inf` vanishes identically.
    DegenerateArgument,
    /// Parts are not in canonical decreasing order, or a part is zero.
    Unsorted,
    /// A partition that does not belong to the family an operation requires.
    InvalidPartition(&'static str),
    /// Family parameters outside their admissible range.
    InvalidParameters(&'static str),
    /// Theta specialization that would need negative powers of `q`.
    UnsupportedSpecialization { sign: i8, shift: i64, base: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LengthExceedsOrder { len, order } => write!(
                f,
                "{len} coefficients do not fit a series truncated at order {order}"
            ),
            Error::OrderMismatch { left, right } => {
                write!(f, "truncation orders differ: {left} vs {right}")
            }
            Error::DimensionMismatch { left, right } => write!(
                f,
                "table shapes differ: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::NotInvertible => f.write_str("constant term is not a unit"),
            Error::DegenerateArgument => {
                f.write_str("Pochhammer argument +q^0 makes the product vanish")
            }
            Error::Unsorted => {
                f.write_str("parts must be positive and in canonical decreasing order")
            }
            Error::InvalidPartition(why) => write!(f, "invalid partition: {why}"),
            Error::InvalidParameters(why) => write!(f, "invalid parameters: {why}"),
            Error::UnsupportedSpecialization { sign, shift, base } => write!(
                f,
                "z = {sign}q^{shift} with q -> q^{base} needs negative exponents or makes both sides vanish"
            ),
        }
    }
}

impl core::error::Error for Error {}
