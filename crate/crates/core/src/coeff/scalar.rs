//! Lazy fractions of polynomials, compared by cross-multiplication.

use std::fmt;

use rustc_hash::FxHashMap;

use super::cyclotomic::Cyclotomic;
use super::poly::{is_laurent, Mono, Poly, Var};
use super::rational::Q;
use super::CoeffError;

/// `num / Π den_i^{e_i}`.
///
/// Denominator factors are kept monic (leading coefficient one) and free of
/// Laurent monomials and constants; any such content is moved into the
/// numerator, which may carry negative powers of `u, v, z, ℓ`.
#[derive(Clone, Debug, Default, Hash, PartialEq, Eq)]
pub struct Scalar {
    num: Poly,
    den: Vec<(Poly, u32)>,
}

/// Splits a nonzero polynomial into `c · μ · g` with `g` monic and free of
/// Laurent monomial content.
fn split_content(p: &Poly) -> (Cyclotomic, Mono, Poly) {
    let mu = p.laurent_content();
    let g = p.shift(&mu.inv());
    let lc = g.leading().expect("nonzero").1.clone();
    let g = g.scale(&lc.inv().expect("nonzero"));
    (lc, mu, g)
}

fn merge_max(a: &[(Poly, u32)], b: &[(Poly, u32)]) -> Vec<(Poly, u32)> {
    let mut out = a.to_vec();
    for (f, e) in b {
        match out.iter_mut().find(|(g, _)| g == f) {
            Some(slot) => slot.1 = slot.1.max(*e),
            None => out.push((f.clone(), *e)),
        }
    }
    out.sort();
    out
}

fn factor_power(factors: &[(Poly, u32)], skip: &[(Poly, u32)]) -> Poly {
    let mut r = Poly::one();
    for (f, e) in factors {
        let have = skip.iter().find(|(g, _)| g == f).map_or(0, |p| p.1);
        if *e > have {
            r = r.mul(&f.pow(e - have));
        }
    }
    r
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::default()
    }

    pub fn one() -> Scalar {
        Scalar::from_poly(Poly::one())
    }

    pub fn int(n: i64) -> Scalar {
        Scalar::from_poly(Poly::int(n))
    }

    pub fn frac(n: i64, d: i64) -> Scalar {
        Scalar::from_poly(Poly::rational(Q::frac(n, d)))
    }

    pub fn rational(q: Q) -> Scalar {
        Scalar::from_poly(Poly::rational(q))
    }

    pub fn cyclotomic(c: Cyclotomic) -> Scalar {
        Scalar::from_poly(Poly::constant(c))
    }

    pub fn var(v: Var) -> Scalar {
        Scalar::from_poly(Poly::var(v))
    }

    /// `v^e`; negative exponents are allowed only for Laurent variables.
    pub fn var_pow(v: Var, e: i32) -> Scalar {
        if e >= 0 || is_laurent(v) {
            Scalar::from_poly(Poly::mono(Mono::var(v, e)))
        } else {
            Scalar::var(v).pow(e).expect("variable is nonzero")
        }
    }

    pub fn from_poly(p: Poly) -> Scalar {
        Scalar { num: p, den: Vec::new() }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    /// The expanded denominator.
    pub fn den(&self) -> Poly {
        factor_power(&self.den, &[])
    }

    pub fn den_factors(&self) -> &[(Poly, u32)] {
        &self.den
    }

    /// `1 / den`, keeping the factored form.
    pub fn den_reciprocal(&self) -> Scalar {
        Scalar { num: Poly::one(), den: self.den.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_one()
    }

    /// The polynomial value when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&Poly> {
        self.den.is_empty().then_some(&self.num)
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.den == o.den {
            return Scalar { num: self.num.add(&o.num), den: self.den.clone() }.fix_zero();
        }
        let den = merge_max(&self.den, &o.den);
        let a = self.num.mul(&factor_power(&den, &self.den));
        let b = o.num.mul(&factor_power(&den, &o.den));
        Scalar { num: a.add(&b), den }.fix_zero()
    }

    pub fn neg(&self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        let num = self.num.mul(&o.num);
        if o.den.is_empty() {
            return Scalar { num, den: self.den.clone() };
        }
        if self.den.is_empty() {
            return Scalar { num, den: o.den.clone() };
        }
        let mut den = self.den.clone();
        for (f, e) in &o.den {
            match den.iter_mut().find(|(g, _)| g == f) {
                Some(slot) => slot.1 += e,
                None => den.push((f.clone(), *e)),
            }
        }
        den.sort();
        Scalar { num, den }
    }

    /// Multiplies by a polynomial.
    pub fn mul_poly(&self, p: &Poly) -> Scalar {
        Scalar { num: self.num.mul(p), den: self.den.clone() }.fix_zero()
    }

    pub fn scale(&self, c: &Cyclotomic) -> Scalar {
        Scalar { num: self.num.scale(c), den: self.den.clone() }.fix_zero()
    }

    pub fn scale_q(&self, q: &Q) -> Scalar {
        self.scale(&Cyclotomic::rational(q.clone()))
    }

    pub fn shift(&self, m: &Mono) -> Scalar {
        Scalar { num: self.num.shift(m), den: self.den.clone() }
    }

    fn fix_zero(mut self) -> Scalar {
        if self.num.is_zero() {
            self.den.clear();
        }
        self
    }

    pub fn inv(&self) -> Result<Scalar, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        let (c, mu, g) = split_content(&self.num);
        let num = self.den().shift(&mu.inv()).scale(&c.inv().expect("nonzero"));
        let mut out = Scalar { num, den: Vec::new() };
        if !g.is_one() {
            out = out.with_den_factor(g, 1);
        }
        Ok(out)
    }

    /// Appends a canonical denominator factor, splitting off known factors.
    fn with_den_factor(mut self, mut g: Poly, e: u32) -> Scalar {
        let mut den = std::mem::take(&mut self.den);
        for slot in den.iter_mut() {
            while g.len() > 1 {
                match g.div_exact(&slot.0) {
                    Some(q) => {
                        g = q;
                        slot.1 += e;
                    }
                    None => break,
                }
            }
        }
        if let Some(c) = g.as_constant() {
            self.num = self.num.scale(&c.inv().expect("nonzero"));
        } else if g.len() == 1 {
            let (m, c) = g.as_term().unwrap();
            self.num = self.num.shift(&m.inv()).scale(&c.inv().expect("nonzero"));
        } else {
            match den.iter_mut().find(|(f, _)| *f == g) {
                Some(slot) => slot.1 += e,
                None => den.push((g, e)),
            }
        }
        den.sort();
        self.den = den;
        self
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar, CoeffError> {
        Ok(self.mul(&o.inv()?).reduced())
    }

    pub fn pow(&self, e: i32) -> Result<Scalar, CoeffError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut r = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            r = r.mul(&base);
        }
        Ok(r)
    }

    /// Cancels denominator factors that divide the numerator exactly.
    pub fn reduced(&self) -> Scalar {
        if self.den.is_empty() || self.num.is_zero() {
            return self.clone().fix_zero();
        }
        let mut num = self.num.clone();
        let mut den = Vec::new();
        for (f, e) in &self.den {
            let mut left = *e;
            while left > 0 {
                match num.div_exact(f) {
                    Some(q) => {
                        num = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                den.push((f.clone(), left));
            }
        }
        Scalar { num, den }
    }

    /// Cross-multiplication equality.
    pub fn equals(&self, o: &Scalar) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        let den = merge_max(&self.den, &o.den);
        let a = self.num.mul(&factor_power(&den, &self.den));
        let b = o.num.mul(&factor_power(&den, &o.den));
        a == b
    }

    /// Simultaneous substitution of variables by scalars.
    pub fn substitute(&self, bind: &FxHashMap<Var, Scalar>) -> Result<Scalar, CoeffError> {
        let mut cache: FxHashMap<(Var, i32), Scalar> = FxHashMap::default();
        let num = subst_poly(&self.num, bind, &mut cache)?;
        let mut out = num;
        for (f, e) in &self.den {
            let fs = subst_poly(f, bind, &mut cache)?;
            if fs.is_zero() {
                return Err(CoeffError::VanishingDenominator);
            }
            out = out.mul(&fs.pow(-(*e as i32))?);
        }
        Ok(out.reduced())
    }

    /// Whether any of the given variables occurs.
    pub fn mentions(&self, v: Var) -> bool {
        self.num.vars().contains(&v) || self.den.iter().any(|(f, _)| f.vars().contains(&v))
    }
}

/// Substitutes into a polynomial.
pub fn subst_poly(
    p: &Poly,
    bind: &FxHashMap<Var, Scalar>,
    cache: &mut FxHashMap<(Var, i32), Scalar>,
) -> Result<Scalar, CoeffError> {
    let mut acc = Scalar::zero();
    for (m, c) in p.terms() {
        let mut free = Mono::one();
        let mut val = Scalar::cyclotomic(c.clone());
        for &(v, e) in m.pairs() {
            match bind.get(&v) {
                Some(b) => {
                    let pw = match cache.get(&(v, e)) {
                        Some(s) => s.clone(),
                        None => {
                            let s = b.pow(e)?;
                            cache.insert((v, e), s.clone());
                            s
                        }
                    };
                    val = val.mul(&pw);
                }
                None => free = free.mul(&Mono::var(v, e)),
            }
        }
        acc = acc.add(&val.shift(&free));
    }
    Ok(acc)
}

impl From<Poly> for Scalar {
    fn from(p: Poly) -> Scalar {
        Scalar::from_poly(p)
    }
}

impl fmt::Display for Scalar {
    /// Expanded numerator over expanded denominator, with negative powers
    /// cleared into the denominator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let content = self.num.laurent_content();
        let clear = Mono::from_pairs(content.pairs().iter().filter(|p| p.1 < 0).map(|&(v, e)| (v, -e)));
        let num = self.num.shift(&clear);
        let den = self.den().shift(&clear);
        if den.is_one() {
            return write!(f, "{}", num);
        }
        let num_s = num.to_string();
        let num_s = if num.len() > 1 { format!("({})", num_s) } else { num_s };
        let den_simple = den.len() == 1 && {
            let (m, c) = den.as_term().unwrap();
            (m.is_one() || c.is_one()) && m.pairs().len() <= 1 && c.as_rational().is_some_and(|q| !q.is_negative())
        };
        if den_simple {
            write!(f, "{}/{}", num_s, den)
        } else {
            write!(f, "{}/({})", num_s, den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::poly::{U, V, Z};
    use super::*;

    fn u() -> Scalar {
        Scalar::var(U)
    }

    fn ui() -> Scalar {
        Scalar::var_pow(U, -1)
    }

    #[test]
    fn inverse_pair() {
        assert!(u().mul(&ui()).equals(&Scalar::one()));
        assert!(u().mul(&u().inv().unwrap()).is_one());
    }

    #[test]
    fn sum_of_differences() {
        let v = Scalar::var(V);
        let vi = Scalar::var_pow(V, -1);
        let lhs = u().sub(&ui()).add(&v.sub(&vi));
        let n = Poly::var(U).pow(2).mul(&Poly::var(V)).sub(&Poly::var(V)).add(&Poly::var(U).mul(&Poly::var(V).pow(2))).sub(&Poly::var(U));
        let d = Scalar::from_poly(Poly::var(U).mul(&Poly::var(V)));
        let rhs = Scalar::from_poly(n).div(&d).unwrap();
        assert!(lhs.equals(&rhs));
    }

    #[test]
    fn cancellation_equality() {
        let a = Scalar::from_poly(Poly::var(U).pow(2).sub(&Poly::one()));
        let b = Scalar::from_poly(Poly::var(U).sub(&Poly::one()));
        let q = a.div(&b).unwrap();
        assert!(q.equals(&u().add(&Scalar::one())));
        assert!(q.den_factors().is_empty());
        assert!(!Scalar::var(Z).equals(&Scalar::var(super::super::poly::y(0))));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Scalar::one().div(&Scalar::zero()), Err(CoeffError::DivisionByZero));
    }

    #[test]
    fn rendering_clears_negative_powers() {
        let s = u().pow(2).unwrap().add(&Scalar::one()).mul(&u().mul(&Scalar::var(Z)).inv().unwrap());
        assert_eq!(s.to_string(), "(u^2 + 1)/(u*z)");
        assert_eq!(u().sub(&ui()).to_string(), "(u^2 - 1)/u");
    }
}
