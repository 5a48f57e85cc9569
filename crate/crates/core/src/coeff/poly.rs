//! Sparse multivariate Laurent polynomials over cyclotomic coefficients.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::cyclotomic::Cyclotomic;
use super::rational::Q;

/// Variable identifier. `u, v, z, ℓ` have fixed ids; `x_k` and `y_k`
/// occupy two indexed blocks.
pub type Var = u16;

pub const U: Var = 0;
pub const V: Var = 1;
pub const Z: Var = 2;
pub const L: Var = 3;
const X_BASE: Var = 0x100;
const Y_BASE: Var = 0x200;

/// The trace parameter `x_k`.
pub fn x(k: usize) -> Var {
    X_BASE + k as Var
}

/// The trace parameter `y_k`.
pub fn y(k: usize) -> Var {
    Y_BASE + k as Var
}

/// Whether negative exponents are allowed for this variable.
pub fn is_laurent(v: Var) -> bool {
    v < X_BASE
}

pub fn var_name(v: Var) -> String {
    match v {
        U => "u".into(),
        V => "v".into(),
        Z => "z".into(),
        L => "l".into(),
        _ if v >= Y_BASE => format!("y{}", v - Y_BASE),
        _ if v >= X_BASE => format!("x{}", v - X_BASE),
        _ => format!("w{}", v),
    }
}

/// A Laurent monomial: sorted `(variable, exponent)` pairs, no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(SmallVec<[(Var, i32); 4]>);

impl Mono {
    pub fn one() -> Mono {
        Mono(SmallVec::new())
    }

    pub fn var(v: Var, e: i32) -> Mono {
        let mut m = Mono::one();
        if e != 0 {
            m.0.push((v, e));
        }
        m
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, i32)>) -> Mono {
        let mut m = Mono::one();
        for (v, e) in pairs {
            m = m.mul(&Mono::var(v, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |p| p.1)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let (a, b) = (&self.0, &o.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Mono(out)
    }

    pub fn inv(&self) -> Mono {
        Mono(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Mono {
        if k == 0 {
            return Mono::one();
        }
        Mono(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// True if `o` divides `self` with nonnegative quotient exponents.
    pub fn divisible_by(&self, o: &Mono) -> bool {
        o.0.iter().all(|&(v, e)| self.exp(v) >= e)
    }

    /// Splits into the part in `keep` variables and the rest.
    pub fn split(&self, keep: impl Fn(Var) -> bool) -> (Mono, Mono) {
        let mut a = Mono::one();
        let mut b = Mono::one();
        for &(v, e) in &self.0 {
            if keep(v) {
                a.0.push((v, e));
            } else {
                b.0.push((v, e));
            }
        }
        (a, b)
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    /// Display order: higher total degree first, then lexicographic with
    /// larger exponents of earlier variables first.
    fn cmp(&self, other: &Self) -> Ordering {
        let c = other.degree().cmp(&self.degree());
        if c != Ordering::Equal {
            return c;
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            let va = a.get(i).map(|p| p.0);
            let vb = b.get(j).map(|p| p.0);
            let (v, ea, eb) = match (va, vb) {
                (None, None) => return Ordering::Equal,
                (Some(x), None) => (x, a[i].1, 0),
                (None, Some(y)) => (y, 0, b[j].1),
                (Some(x), Some(y)) if x < y => (x, a[i].1, 0),
                (Some(x), Some(y)) if y < x => (y, 0, b[j].1),
                (Some(x), Some(_)) => (x, a[i].1, b[j].1),
            };
            if ea != eb {
                return eb.cmp(&ea);
            }
            if va == Some(v) {
                i += 1;
            }
            if vb == Some(v) {
                j += 1;
            }
        }
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, &(v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{}", var_name(v))?;
            } else {
                write!(f, "{}^{}", var_name(v), e)?;
            }
        }
        Ok(())
    }
}

/// A polynomial as a sorted list of terms with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Poly {
    terms: Vec<(Mono, Cyclotomic)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Cyclotomic::one())
    }

    pub fn constant(c: Cyclotomic) -> Poly {
        Poly::term(Mono::one(), c)
    }

    pub fn int(n: i64) -> Poly {
        Poly::constant(Cyclotomic::int(n))
    }

    pub fn rational(q: Q) -> Poly {
        Poly::constant(Cyclotomic::rational(q))
    }

    pub fn term(m: Mono, c: Cyclotomic) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn var(v: Var) -> Poly {
        Poly::term(Mono::var(v, 1), Cyclotomic::one())
    }

    pub fn mono(m: Mono) -> Poly {
        Poly::term(m, Cyclotomic::one())
    }

    /// Builds from unsorted terms, merging duplicates.
    pub fn from_terms(mut terms: Vec<(Mono, Cyclotomic)>) -> Poly {
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Mono, Cyclotomic)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = last.1.add(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Mono, Cyclotomic)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Cyclotomic> {
        match self.terms.len() {
            0 => Some(Cyclotomic::zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    /// `(monomial, coefficient)` if there is exactly one term.
    pub fn as_term(&self) -> Option<(&Mono, &Cyclotomic)> {
        (self.terms.len() == 1).then(|| (&self.terms[0].0, &self.terms[0].1))
    }

    pub fn leading(&self) -> Option<&(Mono, Cyclotomic)> {
        self.terms.first()
    }

    pub fn add(&self, o: &Poly) -> Poly {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].1.add(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Cyclotomic) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly { terms: self.terms.iter().map(|(m, k)| (m.clone(), k.mul(c))).collect() }
    }

    /// Multiplies by a monomial; order is preserved.
    pub fn shift(&self, m: &Mono) -> Poly {
        if m.is_one() {
            return self.clone();
        }
        Poly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn mul_term(&self, m: &Mono, c: &Cyclotomic) -> Poly {
        self.shift(m).scale(c)
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0].0, &o.terms[0].1);
        }
        if self.terms.len() == 1 {
            return o.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                raw.push((ma.mul(mb), ca.mul(cb)));
            }
        }
        Poly::from_terms(raw)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut r = Poly::one();
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        r
    }

    /// Componentwise minimum exponent over all terms, for Laurent variables
    /// only (the monomial content).
    pub fn laurent_content(&self) -> Mono {
        let mut out: Option<Vec<(Var, i32)>> = None;
        for (m, _) in &self.terms {
            let cur: Vec<(Var, i32)> = m.pairs().iter().copied().filter(|p| is_laurent(p.0)).collect();
            out = Some(match out {
                None => cur,
                Some(prev) => {
                    let mut vars: Vec<Var> = prev.iter().chain(cur.iter()).map(|p| p.0).collect();
                    vars.sort_unstable();
                    vars.dedup();
                    let get = |s: &[(Var, i32)], v: Var| s.iter().find(|p| p.0 == v).map_or(0, |p| p.1);
                    vars.into_iter()
                        .map(|v| (v, get(&prev, v).min(get(&cur, v))))
                        .filter(|p| p.1 != 0)
                        .collect()
                }
            });
        }
        Mono::from_pairs(out.unwrap_or_default())
    }

    /// Exact quotient `self / f`, or `None` if `f` does not divide `self`.
    /// `f` must be free of Laurent monomial content.
    pub fn div_exact(&self, f: &Poly) -> Option<Poly> {
        let (lm, lc) = f.leading()?;
        if f.terms.len() == 1 {
            let inv = lc.inv()?;
            return Some(self.shift(&lm.inv()).scale(&inv));
        }
        let content = self.laurent_content();
        let mut r = self.shift(&content.inv());
        let lc_inv = lc.inv()?;
        let mut q = Vec::new();
        while let Some((rm, rc)) = r.leading().cloned() {
            if !rm.divisible_by(lm) {
                return None;
            }
            let tm = rm.mul(&lm.inv());
            let tc = rc.mul(&lc_inv);
            r = r.sub(&f.mul_term(&tm, &tc));
            q.push((tm, tc));
        }
        Some(Poly::from_terms(q).shift(&content))
    }

    pub fn degree_in(&self, v: Var) -> i32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut v: Vec<Var> = self.terms.iter().flat_map(|(m, _)| m.pairs().iter().map(|p| p.0)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Groups terms by the part of the monomial outside `keep`:
    /// returns `(outer monomial, coefficient polynomial in keep-variables)`.
    pub fn collect_by(&self, keep: impl Fn(Var) -> bool + Copy) -> Vec<(Mono, Poly)> {
        let mut raw: Vec<(Mono, Mono, Cyclotomic)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let (inner, outer) = m.split(keep);
                (outer, inner, c.clone())
            })
            .collect();
        raw.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Mono, Vec<(Mono, Cyclotomic)>)> = Vec::new();
        for (outer, inner, c) in raw {
            match out.last_mut() {
                Some(last) if last.0 == outer => last.1.push((inner, c)),
                _ => out.push((outer, vec![(inner, c)])),
            }
        }
        out.into_iter().map(|(o, t)| (o, Poly::from_terms(t))).collect()
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Cyclotomic) -> Cyclotomic) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect())
    }
}

fn fmt_coeff_term(c: &Cyclotomic, m: &Mono, first: bool) -> String {
    let mono = if m.is_one() { String::new() } else { m.to_string() };
    if let Some(q) = c.as_rational() {
        let neg = q.is_negative();
        let mag = if neg { q.neg() } else { q.clone() };
        let body = if mono.is_empty() {
            mag.to_string()
        } else if mag.is_one() {
            mono
        } else {
            format!("{}*{}", mag, mono)
        };
        return match (first, neg) {
            (true, true) => format!("-{}", body),
            (true, false) => body,
            (false, true) => format!(" - {}", body),
            (false, false) => format!(" + {}", body),
        };
    }
    let body = if mono.is_empty() { c.to_string() } else { format!("{}*{}", c, mono) };
    if first {
        body
    } else {
        format!(" + {}", body)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            write!(f, "{}", fmt_coeff_term(c, m, i == 0))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u() -> Poly {
        Poly::var(U)
    }

    #[test]
    fn ordering_and_display() {
        let p = u().pow(2).add(&Poly::one()).add(&Poly::var(V).mul(&u()));
        assert_eq!(p.to_string(), "u^2 + u*v + 1");
        let q = u().sub(&Poly::mono(Mono::var(U, -1)));
        assert_eq!(q.to_string(), "u - u^-1");
        assert_eq!(Poly::var(x(1)).scale(&Cyclotomic::frac(-1, 2)).to_string(), "-1/2*x1");
    }

    #[test]
    fn exact_division() {
        let a = u().pow(2).sub(&Poly::one());
        let b = u().sub(&Poly::one());
        assert_eq!(a.div_exact(&b).unwrap(), u().add(&Poly::one()));
        assert!(u().pow(2).add(&Poly::one()).div_exact(&b).is_none());
        let lau = a.shift(&Mono::var(U, -3));
        assert_eq!(lau.div_exact(&b).unwrap(), u().add(&Poly::one()).shift(&Mono::var(U, -3)));
    }

    #[test]
    fn laurent_content() {
        let p = Poly::mono(Mono::from_pairs([(U, 2), (V, -1)])).add(&Poly::mono(Mono::from_pairs([(U, 1), (Z, 1)])));
        assert_eq!(p.laurent_content(), Mono::from_pairs([(U, 1), (V, -1)]));
    }
}
