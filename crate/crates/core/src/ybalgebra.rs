//! Normal-form arithmetic in the framed type-B Hecke algebra Y_{d,n}(u, v).
//!
//! Elements are combinations of `t_1^{a_1}⋯t_n^{a_n} · T_w`, where `T_w` is
//! the positive lift of a signed permutation `w` (`g_i` for `s_i`, `b_1` for
//! `r_1`).

use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::coeff::{parse_scalar, sc, Scalar};
use crate::coxeterb::{r_word, Gen, SignedPermutation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("generator index {0} out of range for n = {1}")]
    Index(usize, usize),
    #[error("dimension mismatch: (n, d) = ({0}, {1}) vs ({2}, {3})")]
    Mismatch(usize, u32, usize, u32),
    #[error("{0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// `t^a · T_w`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BasisMonomial {
    pub framing: SmallVec<[u8; 6]>,
    pub perm: SignedPermutation,
}

impl BasisMonomial {
    pub fn identity(n: usize) -> Self {
        BasisMonomial { framing: SmallVec::from_elem(0, n), perm: SignedPermutation::identity(n) }
    }

    pub fn new(framing: &[u8], perm: SignedPermutation) -> Self {
        BasisMonomial { framing: framing.iter().copied().collect(), perm }
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    /// Embedding into one more strand.
    pub fn extend(&self) -> Self {
        let mut f = self.framing.clone();
        f.push(0);
        BasisMonomial { framing: f, perm: self.perm.extend() }
    }
}

impl fmt::Display for BasisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t[")?;
        for (i, a) in self.framing.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", a)?;
        }
        write!(f, "] * w{}", self.perm)
    }
}

/// A generator letter of Y_{d,n}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    G(usize),
    GInv(usize),
    B,
    BInv,
    /// `t_j^k`.
    T(usize, i64),
}

impl Letter {
    pub fn check(&self, n: usize) -> Result<(), AlgebraError> {
        match *self {
            Letter::G(i) | Letter::GInv(i) if i == 0 || i >= n => Err(AlgebraError::Index(i, n)),
            Letter::T(j, _) if j == 0 || j > n => Err(AlgebraError::Index(j, n)),
            Letter::B | Letter::BInv if n == 0 => Err(AlgebraError::Index(1, n)),
            _ => Ok(()),
        }
    }

    pub fn inverse(&self) -> Letter {
        match *self {
            Letter::G(i) => Letter::GInv(i),
            Letter::GInv(i) => Letter::G(i),
            Letter::B => Letter::BInv,
            Letter::BInv => Letter::B,
            Letter::T(j, k) => Letter::T(j, -k),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::G(i) => write!(f, "g{}", i),
            Letter::GInv(i) => write!(f, "g{}^-1", i),
            Letter::B => write!(f, "b1"),
            Letter::BInv => write!(f, "b1^-1"),
            Letter::T(j, k) => write!(f, "t{}^{}", j, k),
        }
    }
}

/// A finite combination of basis monomials.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement {
    n: usize,
    d: u32,
    terms: BTreeMap<BasisMonomial, Scalar>,
}

fn add_into(map: &mut BTreeMap<BasisMonomial, Scalar>, m: BasisMonomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&m) {
        Some(v) => {
            *v = v.add(&c);
            if v.is_zero() {
                map.remove(&m);
            }
        }
        None => {
            map.insert(m, c);
        }
    }
}

fn residue(k: i64, d: u32) -> u8 {
    k.rem_euclid(d as i64) as u8
}

impl AlgebraElement {
    pub fn zero(n: usize, d: u32) -> Self {
        assert!(d >= 1, "modulus must be positive");
        AlgebraElement { n, d, terms: BTreeMap::new() }
    }

    pub fn one(n: usize, d: u32) -> Self {
        Self::monomial(n, d, BasisMonomial::identity(n), Scalar::one())
    }

    pub fn monomial(n: usize, d: u32, m: BasisMonomial, c: Scalar) -> Self {
        let mut e = Self::zero(n, d);
        add_into(&mut e.terms, m, c);
        e
    }

    pub fn scalar(n: usize, d: u32, c: Scalar) -> Self {
        Self::monomial(n, d, BasisMonomial::identity(n), c)
    }

    /// The product of a word of generator letters.
    pub fn from_word(n: usize, d: u32, word: &[Letter]) -> Result<Self, AlgebraError> {
        let mut e = Self::one(n, d);
        for l in word {
            e = e.mul_generator(*l)?;
        }
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn terms(&self) -> &BTreeMap<BasisMonomial, Scalar> {
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

    pub fn coefficient(&self, m: &BasisMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn same_shape(&self, o: &Self) -> Result<(), AlgebraError> {
        if self.n != o.n || self.d != o.d {
            return Err(AlgebraError::Mismatch(self.n, self.d, o.n, o.d));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Self {
        self.same_shape(o).expect("matching (n, d)");
        let mut t = self.terms.clone();
        for (m, c) in &o.terms {
            add_into(&mut t, m.clone(), c.clone());
        }
        AlgebraElement { n: self.n, d: self.d, terms: t }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&sc::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut t = BTreeMap::new();
        for (m, k) in &self.terms {
            add_into(&mut t, m.clone(), k.mul(c));
        }
        AlgebraElement { n: self.n, d: self.d, terms: t }
    }

    /// Coefficientwise cross-multiplication equality.
    pub fn equals(&self, o: &Self) -> bool {
        if self.n != o.n || self.d != o.d {
            return false;
        }
        let keys: std::collections::BTreeSet<&BasisMonomial> = self.terms.keys().chain(o.terms.keys()).collect();
        keys.into_iter().all(|m| {
            let a = self.terms.get(m).cloned().unwrap_or_default();
            let b = o.terms.get(m).cloned().unwrap_or_default();
            a.equals(&b)
        })
    }

    /// Multiplies every framing on the left by `t^a`.
    pub fn left_framing(&self, a: &[u8]) -> Self {
        let mut t = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            for (x, y) in m2.framing.iter_mut().zip(a) {
                *x = ((*x as u32 + *y as u32) % self.d) as u8;
            }
            add_into(&mut t, m2, c.clone());
        }
        AlgebraElement { n: self.n, d: self.d, terms: t }
    }

    /// Embedding into Y_{d,n+1}.
    pub fn extend(&self) -> Self {
        let mut t = BTreeMap::new();
        for (m, c) in &self.terms {
            t.insert(m.extend(), c.clone());
        }
        AlgebraElement { n: self.n + 1, d: self.d, terms: t }
    }

    /// Right multiplication by one generator letter.
    pub fn mul_generator(&self, l: Letter) -> Result<Self, AlgebraError> {
        l.check(self.n)?;
        let d = self.d;
        let mut out = BTreeMap::new();
        match l {
            Letter::T(j, k) => {
                let k = residue(k, d);
                for (m, c) in &self.terms {
                    let mut m2 = m.clone();
                    let p = m.perm.apply(j as i32).unsigned_abs() as usize - 1;
                    m2.framing[p] = ((m2.framing[p] as u32 + k as u32) % d) as u8;
                    add_into(&mut out, m2, c.clone());
                }
            }
            Letter::G(i) => {
                let coef = sc::du().mul(&sc::frac(1, d as i64));
                for (m, c) in &self.terms {
                    let w = &m.perm;
                    let next = BasisMonomial { framing: m.framing.clone(), perm: w.mul_gen(Gen::S(i)) };
                    add_into(&mut out, next, c.clone());
                    if w.right_descent(Gen::S(i)) {
                        let p = w.apply(i as i32).unsigned_abs() as usize - 1;
                        let q = w.apply(i as i32 + 1).unsigned_abs() as usize - 1;
                        let cc = c.mul(&coef);
                        for s in 0..d {
                            let mut f = m.framing.clone();
                            f[p] = ((f[p] as u32 + s) % d) as u8;
                            f[q] = ((f[q] as u32 + d - s) % d) as u8;
                            add_into(&mut out, BasisMonomial { framing: f, perm: w.clone() }, cc.clone());
                        }
                    }
                }
            }
            Letter::B => {
                let coef = sc::dv().mul(&sc::frac(1, d as i64));
                for (m, c) in &self.terms {
                    let w = &m.perm;
                    let next = BasisMonomial { framing: m.framing.clone(), perm: w.mul_gen(Gen::R) };
                    add_into(&mut out, next, c.clone());
                    if w.right_descent(Gen::R) {
                        let p = w.apply(1).unsigned_abs() as usize - 1;
                        let cc = c.mul(&coef);
                        for k in 0..d {
                            let mut f = m.framing.clone();
                            f[p] = ((f[p] as u32 + k) % d) as u8;
                            add_into(&mut out, BasisMonomial { framing: f, perm: w.clone() }, cc.clone());
                        }
                    }
                }
            }
            Letter::GInv(i) => {
                let g = self.mul_generator(Letter::G(i))?;
                let e = self.mul(&idempotent_e(i, i + 1, 0, self.n, d)?)?;
                return Ok(g.sub(&e.scale(&sc::du())));
            }
            Letter::BInv => {
                let b = self.mul_generator(Letter::B)?;
                let f = self.mul(&idempotent_f(1, 0, self.n, d)?)?;
                return Ok(b.sub(&f.scale(&sc::dv())));
            }
        }
        Ok(AlgebraElement { n: self.n, d, terms: out })
    }

    /// Applies a word of letters on the right.
    pub fn mul_word(&self, word: &[Letter]) -> Result<Self, AlgebraError> {
        let mut e = self.clone();
        for l in word {
            e = e.mul_generator(*l)?;
        }
        Ok(e)
    }

    /// Product in normal form.
    pub fn mul(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.same_shape(o)?;
        let mut acc = AlgebraElement::zero(self.n, self.d);
        for (m, c) in &o.terms {
            let mut e = self.clone();
            for (j, &a) in m.framing.iter().enumerate() {
                if a != 0 {
                    e = e.mul_generator(Letter::T(j + 1, a as i64))?;
                }
            }
            for g in m.perm.reduced_word() {
                e = e.mul_generator(gen_letter(g))?;
            }
            for (m2, c2) in e.terms {
                add_into(&mut acc.terms, m2, c2.mul(c));
            }
        }
        Ok(acc)
    }
}

/// The positive letter for a Coxeter generator.
pub fn gen_letter(g: Gen) -> Letter {
    match g {
        Gen::S(i) => Letter::G(i),
        Gen::R => Letter::B,
    }
}

/// Positive word of `T_w` along a reduced expression.
pub fn positive_word(w: &SignedPermutation) -> Vec<Letter> {
    w.reduced_word().into_iter().map(gen_letter).collect()
}

/// Positive word of `T_{r_p}`.
pub fn r_letters(p: usize) -> Vec<Letter> {
    r_word(p).into_iter().map(gen_letter).collect()
}

/// `e_{i,j}^{(m)} = (1/d) Σ_s t_i^{m+s} t_j^{-s}`.
pub fn idempotent_e(i: usize, j: usize, m: i64, n: usize, d: u32) -> Result<AlgebraElement, AlgebraError> {
    if i == 0 || j == 0 || i > n || j > n || i == j {
        return Err(AlgebraError::Invalid(format!("e_{{{},{}}} on {} strands", i, j, n)));
    }
    let mut e = AlgebraElement::zero(n, d);
    let c = sc::frac(1, d as i64);
    for s in 0..d as i64 {
        let mut f: SmallVec<[u8; 6]> = SmallVec::from_elem(0, n);
        f[i - 1] = residue(m + s, d);
        f[j - 1] = residue(-s, d);
        add_into(&mut e.terms, BasisMonomial { framing: f, perm: SignedPermutation::identity(n) }, c.clone());
    }
    Ok(e)
}

/// `f_i^{(m)} = (1/d) Σ_k t_i^{m+k}`.
pub fn idempotent_f(i: usize, m: i64, n: usize, d: u32) -> Result<AlgebraElement, AlgebraError> {
    if i == 0 || i > n {
        return Err(AlgebraError::Invalid(format!("f_{} on {} strands", i, n)));
    }
    let mut e = AlgebraElement::zero(n, d);
    let c = sc::frac(1, d as i64);
    for k in 0..d as i64 {
        let mut f: SmallVec<[u8; 6]> = SmallVec::from_elem(0, n);
        f[i - 1] = residue(m + k, d);
        add_into(&mut e.terms, BasisMonomial { framing: f, perm: SignedPermutation::identity(n) }, c.clone());
    }
    Ok(e)
}

/// Which idempotent family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdempotentKind {
    E,
    F,
}

/// Dispatches to [`idempotent_e`] or [`idempotent_f`] (`j` is ignored for `F`).
pub fn idempotent(kind: IdempotentKind, i: usize, j: usize, m: i64, n: usize, d: u32) -> Result<AlgebraElement, AlgebraError> {
    match kind {
        IdempotentKind::E => idempotent_e(i, j, m, n, d),
        IdempotentKind::F => idempotent_f(i, m, n, d),
    }
}

/// The generators of the ideals defining the (framed) Temperley-Lieb
/// quotients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdealKind {
    /// `1 + u(g_1+g_2) + u²(g_1g_2+g_2g_1) + u³g_1g_2g_1` at d = 1.
    H12,
    /// `1 + u g_1 + v b_1 + uv(g_1b_1+b_1g_1) + u²v g_1b_1g_1 + uv² b_1g_1b_1 + u²v² g_1b_1g_1b_1` at d = 1.
    HB,
    /// `e_1 e_2` times the `H12` pattern.
    R12,
    /// `f_1 e_1` times the `HB` pattern.
    RB,
}

/// Sum over the positive words of the parabolic subgroup generated by
/// `g_1, g_2` with weight `u^{#g}`.
pub fn pattern_12(n: usize, d: u32) -> Result<AlgebraElement, AlgebraError> {
    use Letter::G;
    let words: [(&[Letter], i32); 6] =
        [(&[], 0), (&[G(1)], 1), (&[G(2)], 1), (&[G(1), G(2)], 2), (&[G(2), G(1)], 2), (&[G(1), G(2), G(1)], 3)];
    let mut acc = AlgebraElement::zero(n, d);
    for (w, k) in words {
        acc = acc.add(&AlgebraElement::from_word(n, d, w)?.scale(&sc::upow(k)));
    }
    Ok(acc)
}

/// Sum over the positive words of the parabolic subgroup generated by
/// `g_1, b_1` with weight `u^{#g} v^{#b}`.
pub fn pattern_b(n: usize, d: u32) -> Result<AlgebraElement, AlgebraError> {
    use Letter::{B, G};
    let words: [(&[Letter], i32, i32); 8] = [
        (&[], 0, 0),
        (&[G(1)], 1, 0),
        (&[B], 0, 1),
        (&[G(1), B], 1, 1),
        (&[B, G(1)], 1, 1),
        (&[G(1), B, G(1)], 2, 1),
        (&[B, G(1), B], 1, 2),
        (&[G(1), B, G(1), B], 2, 2),
    ];
    let mut acc = AlgebraElement::zero(n, d);
    for (w, a, b) in words {
        acc = acc.add(&AlgebraElement::from_word(n, d, w)?.scale(&sc::upow(a).mul(&sc::vpow(b))));
    }
    Ok(acc)
}

/// Builds an ideal generator.
pub fn ideal_generator(kind: IdealKind, n: usize, d: u32) -> Result<AlgebraElement, AlgebraError> {
    match kind {
        IdealKind::H12 | IdealKind::R12 if n < 3 => {
            return Err(AlgebraError::Invalid(format!("{:?} needs n >= 3, got {}", kind, n)))
        }
        IdealKind::HB | IdealKind::RB if n < 2 => {
            return Err(AlgebraError::Invalid(format!("{:?} needs n >= 2, got {}", kind, n)))
        }
        IdealKind::H12 | IdealKind::HB if d != 1 => {
            return Err(AlgebraError::Invalid(format!("{:?} is defined for d = 1 only", kind)))
        }
        _ => {}
    }
    match kind {
        IdealKind::H12 => pattern_12(n, d),
        IdealKind::HB => pattern_b(n, d),
        IdealKind::R12 => idempotent_e(1, 2, 0, n, d)?.mul(&idempotent_e(2, 3, 0, n, d)?)?.mul(&pattern_12(n, d)?),
        IdealKind::RB => idempotent_f(1, 0, n, d)?.mul(&idempotent_e(1, 2, 0, n, d)?)?.mul(&pattern_b(n, d)?),
    }
}

/// All framing vectors in lexicographic order.
pub fn framings(n: usize, d: u32) -> Vec<SmallVec<[u8; 6]>> {
    let mut out: Vec<SmallVec<[u8; 6]>> = vec![SmallVec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * d as usize);
        for f in &out {
            for a in 0..d as u8 {
                let mut g = f.clone();
                g.push(a);
                next.push(g);
            }
        }
        out = next;
    }
    out
}

/// The basis: every framing with every signed permutation, identity first.
pub fn enumerate_basis(n: usize, d: u32) -> Vec<BasisMonomial> {
    let perms = SignedPermutation::all(n);
    let fr = framings(n, d);
    let mut out = Vec::with_capacity(perms.len() * fr.len());
    for w in &perms {
        for f in &fr {
            out.push(BasisMonomial { framing: f.clone(), perm: w.clone() });
        }
    }
    out
}

impl fmt::Display for AlgebraElement {
    /// `(coef) * t[a1,...,an] * w[window]` terms joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}) * {}", c, m)?;
        }
        Ok(())
    }
}

fn split_top(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    let b = s.as_bytes();
    let mut i = 0;
    while i < b.len() {
        match b[i] {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            b'+' if depth == 0 && i > 0 && b[i - 1] == b' ' && b.get(i + 1) == Some(&b' ') => {
                parts.push(&s[start..i - 1]);
                start = i + 2;
            }
            _ => {}
        }
        i += 1;
    }
    parts.push(&s[start..]);
    parts
}

/// Parses the element text format.
pub fn parse_element(s: &str, d: u32) -> Result<AlgebraElement, AlgebraError> {
    let s = s.trim();
    let mut acc: Option<AlgebraElement> = None;
    if s == "0" {
        return Err(AlgebraError::Parse("cannot infer n from the zero element".into()));
    }
    for part in split_top(s) {
        let part = part.trim();
        let ti = part.rfind("* t[").ok_or_else(|| AlgebraError::Parse(format!("missing framing in '{}'", part)))?;
        let coef = parse_scalar(part[..ti].trim()).map_err(|e| AlgebraError::Parse(e.to_string()))?;
        let rest = &part[ti + 2..];
        let wi = rest.find("* w").ok_or_else(|| AlgebraError::Parse(format!("missing permutation in '{}'", part)))?;
        let fr = rest[..wi].trim();
        let fr = fr
            .strip_prefix("t[")
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| AlgebraError::Parse(format!("bad framing '{}'", fr)))?;
        let framing: Result<Vec<u8>, _> =
            if fr.trim().is_empty() { Ok(vec![]) } else { fr.split(',').map(|x| x.trim().parse::<u8>()).collect() };
        let framing = framing.map_err(|_| AlgebraError::Parse(format!("bad framing '{}'", fr)))?;
        if framing.iter().any(|&a| a as u32 >= d) {
            return Err(AlgebraError::Parse(format!("framing exponent out of range for d = {}", d)));
        }
        let perm: SignedPermutation =
            rest[wi + 3..].trim().parse().map_err(|e: crate::coxeterb::CoxeterError| AlgebraError::Parse(e.to_string()))?;
        if perm.n() != framing.len() {
            return Err(AlgebraError::Parse("framing and permutation lengths differ".into()));
        }
        let n = perm.n();
        let term = AlgebraElement::monomial(n, d, BasisMonomial::new(&framing, perm), coef);
        acc = Some(match acc {
            None => term,
            Some(a) => {
                a.same_shape(&term)?;
                a.add(&term)
            }
        });
    }
    acc.ok_or_else(|| AlgebraError::Parse("empty element".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    fn word(n: usize, d: u32, w: &[Letter]) -> AlgebraElement {
        AlgebraElement::from_word(n, d, w).unwrap()
    }

    #[test]
    fn quadratic_relations() {
        for d in 1..=3 {
            let lhs = word(2, d, &[G(1), G(1)]);
            let e = idempotent_e(1, 2, 0, 2, d).unwrap();
            let rhs = AlgebraElement::one(2, d).add(&e.mul(&word(2, d, &[G(1)])).unwrap().scale(&sc::du()));
            assert!(lhs.equals(&rhs), "d={}", d);
            let lhs = word(1, d, &[B, B]);
            let f = idempotent_f(1, 0, 1, d).unwrap();
            let rhs = AlgebraElement::one(1, d).add(&f.mul(&word(1, d, &[B])).unwrap().scale(&sc::dv()));
            assert!(lhs.equals(&rhs));
        }
    }

    #[test]
    fn inverses() {
        for d in 1..=3 {
            assert!(word(1, d, &[B, BInv]).equals(&AlgebraElement::one(1, d)));
            assert!(word(1, d, &[BInv, B]).equals(&AlgebraElement::one(1, d)));
            assert!(word(3, d, &[G(2), GInv(2)]).equals(&AlgebraElement::one(3, d)));
            assert!(word(3, d, &[GInv(1), G(1)]).equals(&AlgebraElement::one(3, d)));
        }
    }

    #[test]
    fn braid_relations() {
        for d in 1..=3 {
            assert!(word(2, d, &[G(1), B, G(1), B]).equals(&word(2, d, &[B, G(1), B, G(1)])));
            assert!(word(3, d, &[G(1), G(2), G(1)]).equals(&word(3, d, &[G(2), G(1), G(2)])));
            assert!(word(4, d, &[G(1), G(3)]).equals(&word(4, d, &[G(3), G(1)])));
            assert!(word(3, d, &[B, G(2)]).equals(&word(3, d, &[G(2), B])));
            assert!(word(2, d, &[T(1, 1), G(1)]).equals(&word(2, d, &[G(1), T(2, 1)])));
            assert!(word(2, d, &[T(1, 1), B]).equals(&word(2, d, &[B, T(1, 1)])));
        }
    }

    #[test]
    fn idempotents() {
        assert!(idempotent_e(1, 2, 0, 2, 1).unwrap().equals(&AlgebraElement::one(2, 1)));
        assert!(idempotent_f(1, 0, 2, 1).unwrap().equals(&AlgebraElement::one(2, 1)));
        for d in 2..=3 {
            let e = idempotent_e(1, 2, 0, 2, d).unwrap();
            assert!(e.mul(&e).unwrap().equals(&e));
            let g = word(2, d, &[G(1)]);
            assert!(e.mul(&g).unwrap().equals(&g.mul(&e).unwrap()));
            let f0 = idempotent_f(1, 0, 2, d).unwrap();
            for m in 0..d as i64 {
                let fm = idempotent_f(1, m, 2, d).unwrap();
                assert!(fm.mul(&f0).unwrap().equals(&fm));
            }
        }
        assert!(idempotent_e(1, 1, 0, 2, 2).is_err());
    }

    #[test]
    fn ideal_generator_shapes() {
        let h = ideal_generator(IdealKind::H12, 3, 1).unwrap();
        assert_eq!(h.len(), 6);
        let r = ideal_generator(IdealKind::R12, 3, 1).unwrap();
        assert!(r.equals(&h));
        assert_eq!(ideal_generator(IdealKind::HB, 2, 1).unwrap().len(), 8);
        assert!(ideal_generator(IdealKind::H12, 2, 1).is_err());
        assert!(ideal_generator(IdealKind::HB, 2, 2).is_err());
        let h1h = word(3, 1, &[G(1)]).mul(&h).unwrap();
        assert!(h1h.equals(&h.scale(&sc::u())));
    }

    #[test]
    fn basis_counts() {
        assert_eq!(enumerate_basis(1, 1).len(), 2);
        assert_eq!(enumerate_basis(2, 1).len(), 8);
        assert_eq!(enumerate_basis(2, 2).len(), 32);
        assert_eq!(enumerate_basis(3, 1).len(), 48);
        let b = enumerate_basis(2, 3);
        let set: std::collections::HashSet<_> = b.iter().collect();
        assert_eq!(set.len(), b.len());
        assert_eq!(b[0], BasisMonomial::identity(2));
    }

    #[test]
    fn basis_words_are_their_own_normal_form() {
        for d in 1..=2 {
            for m in enumerate_basis(3, d) {
                let mut w: Vec<Letter> =
                    m.framing.iter().enumerate().map(|(j, &a)| T(j + 1, a as i64)).collect();
                w.extend(positive_word(&m.perm));
                let e = word(3, d, &w);
                assert!(e.equals(&AlgebraElement::monomial(3, d, m.clone(), Scalar::one())), "{}", m);
            }
        }
    }

    #[test]
    fn element_text_round_trip() {
        let e = word(2, 3, &[T(1, 1), G(1), B, GInv(1)]);
        let back = parse_element(&e.to_string(), 3).unwrap();
        assert!(back.equals(&e));
        assert!(parse_element("(1) * t[3] * w[1]", 3).is_err());
    }

    #[test]
    fn index_errors() {
        assert!(AlgebraElement::one(2, 1).mul_generator(G(2)).is_err());
        assert!(AlgebraElement::one(2, 1).mul_generator(T(3, 1)).is_err());
    }
}
