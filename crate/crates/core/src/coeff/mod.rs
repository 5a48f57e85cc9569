//! Exact scalars: rationals, cyclotomic numbers, Laurent polynomials and
//! their fractions.

mod cyclotomic;
mod parse;
mod poly;
mod rational;
mod scalar;

pub use cyclotomic::{cyclotomic_poly, euler_phi, Cyclotomic};
pub use parse::parse_scalar;
pub use poly::{is_laurent, var_name, x, y, Mono, Poly, Var, L, U, V, Z};
pub use rational::Q;
pub use scalar::{subst_poly, Scalar};

use rustc_hash::FxHashMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes under substitution")]
    VanishingDenominator,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Field arithmetic operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies one field operation.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, CoeffError> {
    match op {
        ArithOp::Add => Ok(a.add(b)),
        ArithOp::Sub => Ok(a.sub(b)),
        ArithOp::Mul => Ok(a.mul(b)),
        ArithOp::Div => a.div(b),
    }
}

/// Cross-multiplication equality.
pub fn scalar_eq(a: &Scalar, b: &Scalar) -> bool {
    a.equals(b)
}

/// Simultaneous substitution; unbound variables pass through.
pub fn substitute(s: &Scalar, bindings: &FxHashMap<Var, Scalar>) -> Result<Scalar, CoeffError> {
    s.substitute(bindings)
}

/// Shorthands used throughout the engine.
pub mod sc {
    use super::*;

    pub fn u() -> Scalar {
        Scalar::var(U)
    }

    pub fn v() -> Scalar {
        Scalar::var(V)
    }

    pub fn z() -> Scalar {
        Scalar::var(Z)
    }

    pub fn ell() -> Scalar {
        Scalar::var(L)
    }

    pub fn int(n: i64) -> Scalar {
        Scalar::int(n)
    }

    pub fn frac(n: i64, d: i64) -> Scalar {
        Scalar::frac(n, d)
    }

    /// `u - u^-1`.
    pub fn du() -> Scalar {
        Scalar::from_poly(Poly::var(U).sub(&Poly::mono(Mono::var(U, -1))))
    }

    /// `v - v^-1`.
    pub fn dv() -> Scalar {
        Scalar::from_poly(Poly::var(V).sub(&Poly::mono(Mono::var(V, -1))))
    }

    pub fn upow(e: i32) -> Scalar {
        Scalar::var_pow(U, e)
    }

    pub fn vpow(e: i32) -> Scalar {
        Scalar::var_pow(V, e)
    }
}
