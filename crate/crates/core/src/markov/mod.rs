//! Markov traces on the tower Y_{d,n}(u, v), with the Hecke trace τ as the
//! d = 1 case.
//!
//! A basis monomial `t^a T_w` is evaluated by splitting off the top coset
//! factor of `w` and recursing on fewer strands.

mod ideal;
mod reduced;

pub use ideal::{annihilates_ideal, IdealChecker, IdealReport, TraceQuotient};
pub use reduced::{reduced_trace_checks, CheckRole, ReducedCheck};

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::coeff::{x as xv, y as yv, Scalar, Var, Z};
use crate::ybalgebra::{r_letters, AlgebraElement, AlgebraError, BasisMonomial, Letter};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TraceError {
    #[error("trace parameters have d = {0} but the element has d = {1}")]
    Modulus(u32, u32),
    #[error("invalid trace parameters: {0}")]
    Params(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Values of `z`, `x_0..x_{d-1}` and `y_0..y_{d-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceParams {
    pub d: u32,
    pub z: Scalar,
    pub x: Vec<Scalar>,
    pub y: Vec<Scalar>,
}

impl TraceParams {
    /// All parameters left as indeterminates (`x_0 = 1`).
    pub fn symbolic(d: u32) -> Self {
        let x = (0..d as usize).map(|k| if k == 0 { Scalar::one() } else { Scalar::var(xv(k)) }).collect();
        let y = (0..d as usize).map(|k| Scalar::var(yv(k))).collect();
        TraceParams { d, z: Scalar::var(Z), x, y }
    }

    pub fn new(d: u32, z: Scalar, x: Vec<Scalar>, y: Vec<Scalar>) -> Result<Self, TraceError> {
        if d == 0 || x.len() != d as usize || y.len() != d as usize {
            return Err(TraceError::Params(format!("expected {} values of x and y", d)));
        }
        if !x[0].equals(&Scalar::one()) {
            return Err(TraceError::Params("x_0 must be 1".into()));
        }
        Ok(TraceParams { d, z, x, y })
    }

    /// The Hecke-level parameters `(z, y)`.
    pub fn classical(z: Scalar, y: Scalar) -> Self {
        TraceParams { d: 1, z, x: vec![Scalar::one()], y: vec![y] }
    }

    /// Bindings that specialize a symbolic trace to these values.
    pub fn bindings(&self) -> FxHashMap<Var, Scalar> {
        let mut b = FxHashMap::default();
        b.insert(Z, self.z.clone());
        for k in 1..self.d as usize {
            b.insert(xv(k), self.x[k].clone());
        }
        for k in 0..self.d as usize {
            b.insert(yv(k), self.y[k].clone());
        }
        b
    }
}

/// Memoizing trace evaluator for one parameter set.
pub struct Tracer {
    params: TraceParams,
    memo: FxHashMap<BasisMonomial, Scalar>,
    corrections: FxHashMap<usize, AlgebraElement>,
}

impl Tracer {
    pub fn new(params: TraceParams) -> Self {
        Tracer { params, memo: FxHashMap::default(), corrections: FxHashMap::default() }
    }

    pub fn params(&self) -> &TraceParams {
        &self.params
    }

    /// `T_{r_n} − b_n` in Y_{d,n}, where `b_n = g_{n−1}⋯g_1 b_1 g_1^{-1}⋯g_{n−1}^{-1}`.
    fn correction(&mut self, n: usize) -> Result<AlgebraElement, TraceError> {
        if let Some(c) = self.corrections.get(&n) {
            return Ok(c.clone());
        }
        let d = self.params.d;
        let mut word: Vec<Letter> = (1..n).rev().map(Letter::G).collect();
        word.push(Letter::B);
        word.extend((1..n).map(Letter::GInv));
        let bn = AlgebraElement::from_word(n, d, &word)?;
        let trn = AlgebraElement::from_word(n, d, &r_letters(n))?;
        let c = trn.sub(&bn);
        self.corrections.insert(n, c.clone());
        Ok(c)
    }

    pub fn trace(&mut self, x: &AlgebraElement) -> Result<Scalar, TraceError> {
        if x.d() != self.params.d {
            return Err(TraceError::Modulus(self.params.d, x.d()));
        }
        let mut acc = Scalar::zero();
        for (m, c) in x.terms() {
            let t = self.trace_monomial(m)?;
            if !t.is_zero() {
                acc = acc.add(&t.mul(c));
            }
        }
        Ok(acc)
    }

    pub fn trace_monomial(&mut self, m: &BasisMonomial) -> Result<Scalar, TraceError> {
        let n = m.n();
        if n == 0 {
            return Ok(Scalar::one());
        }
        if let Some(v) = self.memo.get(m) {
            return Ok(v.clone());
        }
        let d = self.params.d;
        let (top, rest) = m.perm.top_factor();
        let lower = BasisMonomial {
            framing: m.framing[..n - 1].iter().copied().collect::<SmallVec<[u8; 6]>>(),
            perm: rest.restrict(),
        };
        let an = m.framing[n - 1] as usize;
        let value = if top.p == n && !top.signed {
            let t = self.trace_monomial(&lower)?;
            self.params.x[an].mul(&t)
        } else if top.p == n {
            let t = self.trace_monomial(&lower)?;
            let head = self.params.y[an].mul(&t);
            let corr = self.correction(n)?;
            let tail = AlgebraElement::monomial(n, d, lower.extend(), Scalar::one())
                .mul(&corr)?
                .mul_generator(Letter::T(n, an as i64))?;
            head.add(&self.trace(&tail)?)
        } else {
            let p = top.p;
            let mut word: Vec<Letter> = (p..n - 1).rev().map(Letter::G).collect();
            if top.signed {
                word.extend(r_letters(p));
            }
            word.push(Letter::T(p, an as i64));
            let e = AlgebraElement::monomial(n - 1, d, lower, Scalar::one()).mul_word(&word)?;
            let t = self.trace(&e)?;
            self.params.z.mul(&t)
        };
        self.memo.insert(m.clone(), value.clone());
        Ok(value)
    }
}

/// Trace of an element.
pub fn trace(x: &AlgebraElement, p: &TraceParams) -> Result<Scalar, TraceError> {
    Tracer::new(p.clone()).trace(x)
}

/// Trace of the normal form of a word.
pub fn trace_of_word(word: &[Letter], n: usize, d: u32, p: &TraceParams) -> Result<Scalar, TraceError> {
    let e = AlgebraElement::from_word(n, d, word)?;
    trace(&e, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{parse_scalar, sc};
    use crate::ybalgebra::{ideal_generator, IdealKind};
    use Letter::*;

    fn s(t: &str) -> Scalar {
        parse_scalar(t).unwrap()
    }

    #[test]
    fn base_rules() {
        for d in 1..=3u32 {
            let p = TraceParams::symbolic(d);
            assert!(trace(&AlgebraElement::one(2, d), &p).unwrap().equals(&Scalar::one()));
            for m in 0..d as i64 {
                let t = trace_of_word(&[T(1, m)], 1, d, &p).unwrap();
                assert!(t.equals(&p.x[m as usize]));
                let t = trace_of_word(&[T(1, m), B], 1, d, &p).unwrap();
                assert!(t.equals(&p.y[m as usize]));
            }
            assert!(trace_of_word(&[G(1)], 2, d, &p).unwrap().equals(&sc::z()));
        }
    }

    #[test]
    fn hecke_ideal_generators() {
        let p = TraceParams::symbolic(1);
        let h = ideal_generator(IdealKind::H12, 3, 1).unwrap();
        assert!(trace(&h, &p).unwrap().equals(&s("(u^2+1)*(u*z)^2 + (u^2+2)*u*z + 1")));
        let hb = ideal_generator(IdealKind::HB, 3, 1).unwrap();
        let want = s("u^2*v^2*y0^2 + (u*v + u^3*v^3)*z*y0 + (v + u^2*v)*y0 + (u + u^3*v^2)*z + 1");
        assert!(trace(&hb, &p).unwrap().equals(&want));
    }

    #[test]
    fn stabilization_rules() {
        let d = 2;
        let p = TraceParams::symbolic(d);
        let mut tr = Tracer::new(p.clone());
        let x = AlgebraElement::from_word(2, d, &[T(1, 1), B, G(1), T(2, 1), B]).unwrap();
        let tx = tr.trace(&x).unwrap();
        let xe = x.extend();
        let g = tr.trace(&xe.mul_generator(G(2)).unwrap()).unwrap();
        assert!(g.equals(&sc::z().mul(&tx)));
        for m in 0..d as i64 {
            let t = tr.trace(&xe.mul_generator(T(3, m)).unwrap()).unwrap();
            assert!(t.equals(&p.x[m as usize].mul(&tx)));
            let b3 = xe.mul_word(&[G(2), G(1), B, GInv(1), GInv(2), T(3, m)]).unwrap();
            assert!(tr.trace(&b3).unwrap().equals(&p.y[m as usize].mul(&tx)));
        }
    }

    #[test]
    fn conjugation_small() {
        let p = TraceParams::symbolic(2);
        let a = AlgebraElement::from_word(2, 2, &[B, G(1), T(2, 1)]).unwrap();
        let b = AlgebraElement::from_word(2, 2, &[G(1), B, G(1)]).unwrap();
        let ab = trace(&a.mul(&b).unwrap(), &p).unwrap();
        let ba = trace(&b.mul(&a).unwrap(), &p).unwrap();
        assert!(ab.equals(&ba));
    }

    #[test]
    fn modulus_mismatch() {
        assert!(trace(&AlgebraElement::one(1, 2), &TraceParams::symbolic(1)).is_err());
        assert!(TraceParams::new(2, sc::z(), vec![sc::int(2), sc::int(1)], vec![sc::int(0), sc::int(0)]).is_err());
    }
}
