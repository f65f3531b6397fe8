//! Exact arithmetic in cyclotomic fields ℚ(ζ_n) and in-field polynomial root extraction.

mod cyclo;
mod fixed;
mod number;
mod poly;
mod roots;

use thiserror::Error;

pub use cyclo::euler_phi;
pub use number::CycNumber;
pub use poly::Poly;
pub use roots::{
    find_roots_in_field, roots_in_field, search_roots, Root, RootSearch, DEFAULT_MAX_DEN,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("numeric root #{0} could not be certified inside the field")]
    ReconstructionFailed(usize),
    #[error("root iteration did not converge")]
    RootIterationDiverged,
    #[error("root extraction needs a polynomial of positive degree")]
    ZeroPolynomial,
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("scalar of order {got} does not embed in the field of order {expected}")]
    OrderMismatch { expected: u32, got: u32 },
    #[error("order {order} needs {expected} coordinates, got {got}")]
    CoordinateLength {
        order: u32,
        expected: usize,
        got: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// One binary field operation; only division can fail.
pub fn field_arith(a: &CycNumber, b: &CycNumber, op: FieldOp) -> Result<CycNumber, FieldError> {
    match op {
        FieldOp::Add => Ok(a + b),
        FieldOp::Sub => Ok(a - b),
        FieldOp::Mul => Ok(a * b),
        FieldOp::Div => a.checked_div(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gauss(re: (i64, i64), im: (i64, i64)) -> CycNumber {
        &CycNumber::from_frac(4, re.0, re.1) + &(&CycNumber::from_frac(4, im.0, im.1) * &CycNumber::zeta(4))
    }

    #[test]
    fn product_of_conjugate_halves() {
        let a = gauss((1, 2), (1, 2));
        let b = gauss((1, 2), (-1, 2));
        assert_eq!(field_arith(&a, &b, FieldOp::Mul).unwrap(), CycNumber::from_frac(4, 1, 2));
    }

    #[test]
    fn cyclotomic_relation() {
        let z = CycNumber::zeta(3);
        assert_eq!(&z + &(&z * &z), CycNumber::from_int(3, -1));
    }

    #[test]
    fn inverse_of_one_plus_i_over_two() {
        let a = gauss((1, 2), (1, 2));
        assert_eq!(a.inv().unwrap(), gauss((1, 1), (-1, 1)));
        assert_eq!(
            field_arith(&CycNumber::one(4), &CycNumber::zero(4), FieldOp::Div),
            Err(FieldError::DivisionByZero)
        );
    }

    #[test]
    fn text_round_trip() {
        let a = gauss((3, 7), (-5, 2));
        let s = a.to_string();
        assert_eq!(s, "[3/7, -5/2]@4");
        assert_eq!(CycNumber::parse(&s, 4).unwrap(), a);
        let h = CycNumber::from_frac(4, -1, 2);
        assert_eq!(h.to_string(), "-1/2");
        assert_eq!(CycNumber::parse("-1/2", 4).unwrap(), h);
        assert_eq!(CycNumber::parse(" 7 ", 1).unwrap(), CycNumber::from_int(1, 7));
        assert!(CycNumber::parse("[1, 2, 3]@4", 4).is_err());
        assert!(CycNumber::parse("1/0", 4).is_err());
        assert!(matches!(
            CycNumber::parse("[0, 1]@3", 4),
            Err(FieldError::OrderMismatch { .. })
        ));
    }

    #[test]
    fn pretty_rendering() {
        assert_eq!(gauss((1, 2), (-1, 2)).pretty(), "1/2 - 1/2·i");
        assert_eq!(CycNumber::zeta(4).pretty(), "i");
        assert_eq!((-CycNumber::zeta(12).pow(2)).pretty(), "-ζ12^2");
    }

    #[test]
    fn rationals_mix_across_orders() {
        let half = CycNumber::from_frac(1, 1, 2);
        let i = CycNumber::zeta(4);
        let s = &half + &i;
        assert_eq!(s.order(), 4);
        assert_eq!(CycNumber::from_frac(1, 1, 2), CycNumber::from_frac(4, 1, 2));
    }

    #[test]
    fn lift_into_larger_field() {
        let i = CycNumber::zeta(4);
        let lifted = i.lift(12);
        assert_eq!(lifted, CycNumber::zeta_pow(12, 3));
    }
}
