//! Exhaustive test that a trace vanishes on a two-sided ideal: every basis
//! monomial times every ideal generator must trace to zero.

use rustc_hash::FxHashMap;

use super::{TraceError, TraceParams, Tracer};
use crate::coeff::{is_laurent, Mono, Poly, Scalar, Z};
use crate::coxeterb::SignedPermutation;
use crate::ybalgebra::{framings, ideal_generator, AlgebraElement, BasisMonomial, IdealKind};

/// Which quotient the trace must factor through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TraceQuotient {
    /// Generated by `h_{1,2}` and `h_B` (d = 1).
    Tlb,
    /// Generated by `r_{1,2}` and `r_B`.
    Ftlb,
}

impl TraceQuotient {
    pub fn generators(self) -> [IdealKind; 2] {
        match self {
            TraceQuotient::Tlb => [IdealKind::H12, IdealKind::HB],
            TraceQuotient::Ftlb => [IdealKind::R12, IdealKind::RB],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdealReport {
    pub passed: bool,
    /// Number of products `m · r` covered.
    pub products: usize,
    /// First failing basis monomial and generator, with the nonzero trace.
    pub witness: Option<(BasisMonomial, IdealKind, Scalar)>,
}

struct Row {
    monomial: BasisMonomial,
    generator: IdealKind,
    /// Symbolic trace grouped by monomials in the trace parameters.
    groups: Vec<(Mono, Poly)>,
}

/// Symbolic traces of all products `m · r`, reusable across parameter sets.
pub struct IdealChecker {
    n: usize,
    d: u32,
    products: usize,
    rows: Vec<Row>,
}

impl IdealChecker {
    pub fn new(kind: TraceQuotient, n: usize, d: u32) -> Result<Self, TraceError> {
        if n < 3 {
            return Err(TraceError::Params(format!("ideal check needs n >= 3, got {}", n)));
        }
        if kind == TraceQuotient::Tlb && d != 1 {
            return Err(TraceError::Params("the classical quotient needs d = 1".into()));
        }
        let mut tracer = Tracer::new(TraceParams::symbolic(d));
        let frs = framings(n, d);
        let mut seen: FxHashMap<String, ()> = FxHashMap::default();
        let mut rows = Vec::new();
        let mut products = 0;
        for gen in kind.generators() {
            let r = ideal_generator(gen, n, d)?;
            for w in SignedPermutation::all(n) {
                let tw = AlgebraElement::monomial(n, d, BasisMonomial::new(&vec![0; n], w.clone()), Scalar::one());
                let twr = tw.mul(&r)?;
                for a in &frs {
                    products += 1;
                    let t = tracer.trace(&twr.left_framing(a))?;
                    debug_assert!(t.den_factors().is_empty());
                    let key = t.num().to_string();
                    if seen.insert(key, ()).is_some() {
                        continue;
                    }
                    rows.push(Row {
                        monomial: BasisMonomial { framing: a.clone(), perm: w.clone() },
                        generator: gen,
                        groups: t.num().collect_by(|v| is_laurent(v) && v != Z),
                    });
                }
            }
        }
        Ok(IdealChecker { n, d, products, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct symbolic traces.
    pub fn distinct(&self) -> usize {
        self.rows.len()
    }

    pub fn check(&self, p: &TraceParams) -> Result<IdealReport, TraceError> {
        if p.d != self.d {
            return Err(TraceError::Modulus(p.d, self.d));
        }
        let binds = p.bindings();
        let mut cache: FxHashMap<Mono, Scalar> = FxHashMap::default();
        for row in &self.rows {
            let mut acc = Scalar::zero();
            for (m, coef) in &row.groups {
                let val = match cache.get(m) {
                    Some(v) => v.clone(),
                    None => {
                        let mut v = Scalar::one();
                        for &(var, e) in m.pairs() {
                            let b = binds.get(&var).cloned().unwrap_or_else(|| Scalar::var(var));
                            v = v.mul(&b.pow(e).map_err(|e| TraceError::Params(e.to_string()))?);
                        }
                        cache.insert(m.clone(), v.clone());
                        v
                    }
                };
                acc = acc.add(&val.mul_poly(coef));
            }
            if !acc.is_zero() {
                return Ok(IdealReport {
                    passed: false,
                    products: self.products,
                    witness: Some((row.monomial.clone(), row.generator, acc.reduced())),
                });
            }
        }
        Ok(IdealReport { passed: true, products: self.products, witness: None })
    }
}

/// Checks that the trace with parameters `p` vanishes on the ideal.
pub fn annihilates_ideal(kind: TraceQuotient, n: usize, d: u32, p: &TraceParams) -> Result<IdealReport, TraceError> {
    IdealChecker::new(kind, n, d)?.check(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::parse_scalar;

    #[test]
    fn classical_quotient() {
        let ck = IdealChecker::new(TraceQuotient::Tlb, 3, 1).unwrap();
        let good = TraceParams::classical(
            parse_scalar("-1/(u*(1+u^2))").unwrap(),
            parse_scalar("(v^2-1)/((1+u^2)*v)").unwrap(),
        );
        let r = ck.check(&good).unwrap();
        assert!(r.passed, "{}", r.witness.as_ref().map(|(m, g, s)| format!("{} {:?} {}", m, g, s)).unwrap_or_default());
        assert_eq!(r.products, 96);
        let r = ck.check(&TraceParams::symbolic(1)).unwrap();
        assert!(!r.passed);
        let (m, g, _) = r.witness.unwrap();
        assert_eq!(m, BasisMonomial::identity(3));
        assert_eq!(g, IdealKind::H12);
    }
}
